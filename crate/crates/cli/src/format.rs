//! Output emitters. Every exact value is written as a string.

use clap::ValueEnum;
use serde_json::{json, Value};
use umbral_core::{Field, Fps, Poly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Latex,
    Text,
}

fn strings<F: Field>(cs: &[F]) -> Vec<String> {
    cs.iter().map(|c| c.to_string()).collect()
}

/// Ascending coefficients of `p`, with `["0"]` for the zero polynomial.
pub fn poly_coeffs<F: Field>(p: &Poly<F>) -> Vec<String> {
    if p.is_zero() {
        vec!["0".to_string()]
    } else {
        strings(p.coeffs())
    }
}

pub fn poly_json<F: Field>(p: &Poly<F>) -> Value {
    json!(poly_coeffs(p))
}

pub fn series<F: Field>(s: &Fps<F>, format: Format) -> String {
    let order = s.trunc_order();
    match format {
        Format::Csv => s
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| format!("{k},{c}\n"))
            .collect(),
        Format::Json => format!("{}\n", json!(strings(s.coeffs()))),
        Format::Latex => {
            let body = Poly::new(s.coeffs().to_vec());
            if body.is_zero() {
                format!("O(t^{{{order}}})\n")
            } else {
                format!("{} + O(t^{{{order}}})\n", body.render_latex("t"))
            }
        }
        Format::Text => format!("{}\n", s.render()),
    }
}

/// One row per polynomial, `S_0` first.
///
/// CSV rows are `n,c_0,...,c_N`, zero padded to a common width. LaTeX rows are
/// `n & S_n(x) \\` in descending powers.
pub fn table<F: Field>(polys: &[Poly<F>], format: Format, meta: Value) -> String {
    match format {
        Format::Csv => {
            let width = polys.iter().filter_map(|p| p.degree()).max().unwrap_or(0) + 1;
            polys
                .iter()
                .enumerate()
                .map(|(n, p)| {
                    let cells: Vec<String> = (0..width).map(|k| p.coeff(k).to_string()).collect();
                    format!("{n},{}\n", cells.join(","))
                })
                .collect()
        }
        Format::Json => {
            let mut obj = meta;
            obj["polynomials"] = json!(polys.iter().map(poly_coeffs).collect::<Vec<_>>());
            format!("{obj}\n")
        }
        Format::Latex => polys
            .iter()
            .enumerate()
            .map(|(n, p)| format!("{n} & {} \\\\\n", p.render_latex("x")))
            .collect(),
        Format::Text => polys
            .iter()
            .enumerate()
            .map(|(n, p)| format!("S_{n}(x) = {p}\n"))
            .collect(),
    }
}
