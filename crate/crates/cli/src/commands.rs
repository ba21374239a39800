use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use thiserror::Error;
use umbral_core::families::{family_polys, FamilySpec};
use umbral_core::identities::{
    default_grid, default_grid_for, registry_passed, run_registry, IdentityTag, LambdaParam,
};
use umbral_core::umbral::{sheffer_gf, sheffer_transfer};
use umbral_core::{parse_rat, Field, Poly, Rat, RatFunc, ShefferPair};

use crate::expr::{eval_expr, parse_expr, EvalError, ParseError};
use crate::format::{self, Format};

#[derive(Debug, Parser)]
#[command(
    name = "umbral",
    version,
    about = "Exact power series, Sheffer sequences and identity checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Expand an expression as a truncated power series in t.
    Expand {
        expr: String,
        /// Number of coefficients to emit.
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value = "q")]
        field: FieldChoice,
        /// Bind L to a rational value.
        #[arg(long, value_parser = parse_rational, allow_negative_numbers = true)]
        lambda: Option<Rat>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Tabulate S_0..S_n of a catalogued family.
    Family {
        name: FamilyName,
        #[command(flatten)]
        params: FamilyParams,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Compute a Sheffer sequence by both routes and compare them.
    Sheffer {
        #[arg(long)]
        g: String,
        #[arg(long)]
        f: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "q")]
        field: FieldChoice,
        #[arg(long, value_parser = parse_rational, allow_negative_numbers = true)]
        lambda: Option<Rat>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run registry entries over the default parameter grid.
    Verify {
        #[arg(required_unless_present = "all", conflicts_with = "all")]
        id: Option<IdentityTag>,
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[arg(long, value_enum, default_value = "default")]
        grid: Grid,
        #[arg(long, value_enum, default_value = "json")]
        format: VerifyFormat,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FieldChoice {
    Q,
    Qlambda,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Grid {
    Default,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VerifyFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    Bernoulli,
    Euler,
    FrobeniusEuler,
    FrobeniusEulerian,
    Narumi,
    Daehee,
    PoissonCharlier,
    #[value(name = "bernoulli-second-kind")]
    Bernoulli2nd,
    T2,
    T3,
    T4,
    LogDelta,
    T6,
    P8,
    T10,
}

impl FamilyName {
    fn uses_lambda(self) -> bool {
        use FamilyName::*;
        matches!(
            self,
            FrobeniusEuler | FrobeniusEulerian | Daehee | T2 | T6 | P8 | T10
        )
    }
}

#[derive(Clone, Debug, Args)]
pub struct FamilyParams {
    /// Order parameter a (or alpha).
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    pub order_param: i64,
    /// `symbolic` or a rational value other than 1.
    #[arg(long, value_parser = parse_lambda, default_value = "symbolic", allow_negative_numbers = true)]
    pub lambda: LambdaParam,
    #[arg(long, value_parser = parse_rational, default_value = "1", allow_negative_numbers = true)]
    pub a: Rat,
    #[arg(long, value_parser = parse_rational, default_value = "1", allow_negative_numbers = true)]
    pub b: Rat,
    #[arg(long, value_parser = parse_rational, default_value = "1", allow_negative_numbers = true)]
    pub c: Rat,
    #[arg(long, default_value_t = 1)]
    pub m: u32,
}

fn parse_rational(s: &str) -> Result<Rat, String> {
    parse_rat(s).map_err(|e| e.to_string())
}

fn parse_lambda(s: &str) -> Result<LambdaParam, String> {
    match s {
        "symbolic" | "L" => Ok(LambdaParam::Symbolic),
        _ => parse_rational(s).map(LambdaParam::Value),
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Core(#[from] umbral_core::Error),
}

/// Captured result of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }
}

pub fn run<I, S>(argv: I) -> Output
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Output::ok(text)
            };
        }
    };
    match dispatch(cli.command) {
        Ok(out) => out,
        Err(e) => Output {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn dispatch(cmd: Command) -> Result<Output, CliError> {
    match cmd {
        Command::Expand {
            expr,
            order,
            field,
            lambda,
            format,
        } => {
            let ast = parse_expr(&expr)?;
            let text = match (field, lambda) {
                (_, Some(l)) => format::series(&eval_expr(&ast, order, Some(&l))?, format),
                (FieldChoice::Q, None) => {
                    format::series(&eval_expr::<Rat>(&ast, order, None)?, format)
                }
                (FieldChoice::Qlambda, None) => {
                    format::series(&eval_expr(&ast, order, Some(&RatFunc::lambda()))?, format)
                }
            };
            Ok(Output::ok(text))
        }
        Command::Family {
            name,
            params,
            n,
            format,
        } => {
            let text = match (&params.lambda, name.uses_lambda()) {
                (LambdaParam::Symbolic, true) => {
                    family_table(name, &params, RatFunc::lambda(), n, format)?
                }
                (LambdaParam::Value(l), true) => family_table(name, &params, l.clone(), n, format)?,
                (_, false) => family_table(name, &params, Rat::from_integer(0.into()), n, format)?,
            };
            Ok(Output::ok(text))
        }
        Command::Sheffer {
            g,
            f,
            n,
            field,
            lambda,
            format,
        } => {
            let (g, f) = (parse_expr(&g)?, parse_expr(&f)?);
            match (field, lambda) {
                (_, Some(l)) => sheffer::<Rat>(&g, &f, n, Some(&l), format),
                (FieldChoice::Q, None) => sheffer::<Rat>(&g, &f, n, None, format),
                (FieldChoice::Qlambda, None) => {
                    sheffer(&g, &f, n, Some(&RatFunc::lambda()), format)
                }
            }
        }
        Command::Verify {
            id,
            all: _,
            n_max,
            grid: Grid::Default,
            format,
        } => {
            let grid = match id {
                Some(tag) => default_grid_for(tag),
                None => default_grid(),
            };
            let reports = run_registry(&grid, n_max);
            let passed = registry_passed(&reports);
            let stdout = match format {
                VerifyFormat::Json => {
                    format!(
                        "{}\n",
                        json!({ "n_max": n_max, "passed": passed, "reports": reports })
                    )
                }
                VerifyFormat::Text => reports
                    .iter()
                    .map(|r| {
                        let params: Vec<String> =
                            r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                        let status = serde_json::to_value(r.status).expect("status serialises");
                        format!(
                            "{} [{}] {}\n",
                            r.id,
                            params.join(" "),
                            status.as_str().unwrap_or_default()
                        )
                    })
                    .collect(),
            };
            Ok(Output {
                code: if passed { 0 } else { 1 },
                stdout,
                stderr: String::new(),
            })
        }
    }
}

fn family_spec<F: Field>(name: FamilyName, p: &FamilyParams, lambda: F) -> FamilySpec<F> {
    let (order, a, b, c, m) = (
        p.order_param,
        F::from_rat(&p.a),
        F::from_rat(&p.b),
        F::from_rat(&p.c),
        p.m,
    );
    match name {
        FamilyName::Bernoulli => FamilySpec::Bernoulli { order },
        FamilyName::Euler => FamilySpec::Euler { order },
        FamilyName::FrobeniusEuler => FamilySpec::FrobeniusEuler { order, lambda },
        FamilyName::FrobeniusEulerian => FamilySpec::FrobeniusEulerian { order, lambda },
        FamilyName::Narumi => FamilySpec::Narumi { order },
        FamilyName::Daehee => FamilySpec::Daehee { lambda },
        FamilyName::PoissonCharlier => FamilySpec::PoissonCharlier { a },
        FamilyName::Bernoulli2nd => FamilySpec::Bernoulli2nd,
        FamilyName::T2 => FamilySpec::Theorem2 { order, lambda, b },
        FamilyName::T3 => FamilySpec::Theorem3 { order, b, c },
        FamilyName::T4 => FamilySpec::Theorem4 { order },
        FamilyName::LogDelta => FamilySpec::LogDelta { order },
        FamilyName::T6 => FamilySpec::Theorem6 { order, lambda, c },
        FamilyName::P8 => FamilySpec::Proposition8 { order, lambda, c },
        FamilyName::T10 => FamilySpec::Theorem10 {
            order,
            lambda,
            b,
            c,
            m,
        },
    }
}

fn family_table<F: Field>(
    name: FamilyName,
    p: &FamilyParams,
    lambda: F,
    n: usize,
    format: Format,
) -> Result<String, CliError> {
    let polys = family_polys(&family_spec(name, p, lambda), n)?;
    let family = name
        .to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string();
    let mut params = serde_json::Map::new();
    if !matches!(
        name,
        FamilyName::Daehee | FamilyName::PoissonCharlier | FamilyName::Bernoulli2nd
    ) {
        params.insert("order".into(), json!(p.order_param.to_string()));
    }
    if name.uses_lambda() {
        params.insert("lambda".into(), json!(p.lambda.to_string()));
    }
    let extra: &[(&str, String)] = &[
        ("a", p.a.to_string()),
        ("b", p.b.to_string()),
        ("c", p.c.to_string()),
        ("m", p.m.to_string()),
    ];
    let used: &[&str] = match name {
        FamilyName::PoissonCharlier => &["a"],
        FamilyName::T2 => &["b"],
        FamilyName::T3 => &["b", "c"],
        FamilyName::T6 | FamilyName::P8 => &["c"],
        FamilyName::T10 => &["b", "c", "m"],
        _ => &[],
    };
    for (k, v) in extra.iter().filter(|(k, _)| used.contains(k)) {
        params.insert((*k).into(), json!(v));
    }
    Ok(format::table(
        &polys,
        format,
        json!({ "family": family, "params": params }),
    ))
}

fn sheffer<F: Field>(
    g: &crate::expr::Expr,
    f: &crate::expr::Expr,
    n: usize,
    lambda: Option<&F>,
    format: Format,
) -> Result<Output, CliError> {
    let order = n + 2;
    let pair = ShefferPair::new(eval_expr(g, order, lambda)?, eval_expr(f, order, lambda)?)?;
    let by_gf = sheffer_gf(&pair, n)?;
    let by_transfer: Vec<Poly<F>> = (1..=n)
        .map(|k| sheffer_transfer(&pair, k))
        .collect::<Result<_, _>>()?;
    let agree = by_gf[1..] == by_transfer[..];
    let mut text = match format {
        Format::Json => {
            let rows: Vec<_> = by_gf
                .iter()
                .enumerate()
                .map(|(k, p)| {
                    let transfer = if k == 0 { serde_json::Value::Null } else { format::poly_json(&by_transfer[k - 1]) };
                    json!({ "n": k, "generating_function": format::poly_json(p), "transfer": transfer })
                })
                .collect();
            format!("{}\n", json!({ "n": n, "agree": agree, "sequence": rows }))
        }
        _ => format::table(&by_gf, format, json!({})),
    };
    if format == Format::Text {
        text.push_str(if agree {
            "routes agree\n"
        } else {
            "routes disagree\n"
        });
    }
    Ok(Output {
        code: if agree { 0 } else { 1 },
        stdout: text,
        stderr: String::new(),
    })
}
