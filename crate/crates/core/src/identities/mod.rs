//! Executable identity registry.
//!
//! Each entry computes a left-hand side through the umbral machinery (or a
//! direct series expansion) and a right-hand side from an explicit finite sum
//! over family values, then compares them exactly. Failures are captured as
//! counterexamples with exact renderings of both sides.

mod checks;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{rat, rat_string, rint, Field, Rat};
use crate::poly::Poly;

pub use checks::{multinomial_convolution_literal, second_kind_convolution};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdentityTag {
    T2,
    T3,
    T4,
    C5,
    R27,
    T6,
    T7,
    R35,
    P8,
    T9,
    R42,
    T10,
    DAE,
    E14,
    E25,
}

impl IdentityTag {
    pub const ALL: [IdentityTag; 15] = [
        IdentityTag::T2,
        IdentityTag::T3,
        IdentityTag::T4,
        IdentityTag::C5,
        IdentityTag::R27,
        IdentityTag::T6,
        IdentityTag::T7,
        IdentityTag::R35,
        IdentityTag::P8,
        IdentityTag::T9,
        IdentityTag::R42,
        IdentityTag::T10,
        IdentityTag::DAE,
        IdentityTag::E14,
        IdentityTag::E25,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityTag::T2 => "T2",
            IdentityTag::T3 => "T3",
            IdentityTag::T4 => "T4",
            IdentityTag::C5 => "C5",
            IdentityTag::R27 => "R27",
            IdentityTag::T6 => "T6",
            IdentityTag::T7 => "T7",
            IdentityTag::R35 => "R35",
            IdentityTag::P8 => "P8",
            IdentityTag::T9 => "T9",
            IdentityTag::R42 => "R42",
            IdentityTag::T10 => "T10",
            IdentityTag::DAE => "DAE",
            IdentityTag::E14 => "E14",
            IdentityTag::E25 => "E25",
        }
    }

    /// Parameters the identity reads; anything else is ignored.
    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            IdentityTag::T2 => &["order", "lambda", "b"],
            IdentityTag::T3 => &["order", "b", "c"],
            IdentityTag::T4 | IdentityTag::R27 => &["order"],
            IdentityTag::T6 | IdentityTag::P8 => &["order", "lambda", "c"],
            IdentityTag::T7 | IdentityTag::R35 | IdentityTag::T9 => &["c"],
            IdentityTag::T10 => &["order", "lambda", "b", "c", "m"],
            IdentityTag::DAE => &["lambda"],
            IdentityTag::E14 => &["a"],
            IdentityTag::C5 | IdentityTag::R42 | IdentityTag::E25 => &[],
        }
    }
}

impl fmt::Display for IdentityTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        IdentityTag::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

impl Serialize for IdentityTag {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// The Frobenius parameter: the formal indeterminate or a rational sample.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LambdaParam {
    Symbolic,
    Value(Rat),
}

impl fmt::Display for LambdaParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LambdaParam::Symbolic => f.write_str("L"),
            LambdaParam::Value(r) => f.write_str(&rat_string(r)),
        }
    }
}

/// Parameter assignment for one registry entry. `order` is the `a`/`alpha`
/// superscript; `a` is the Poisson-Charlier parameter.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Params {
    pub order: Option<i64>,
    pub lambda: Option<LambdaParam>,
    pub a: Option<Rat>,
    pub b: Option<Rat>,
    pub c: Option<Rat>,
    pub m: Option<u32>,
}

impl Params {
    pub fn with_order(mut self, order: i64) -> Self {
        self.order = Some(order);
        self
    }
    pub fn with_lambda(mut self, lambda: LambdaParam) -> Self {
        self.lambda = Some(lambda);
        self
    }
    pub fn with_a(mut self, a: Rat) -> Self {
        self.a = Some(a);
        self
    }
    pub fn with_b(mut self, b: Rat) -> Self {
        self.b = Some(b);
        self
    }
    pub fn with_c(mut self, c: Rat) -> Self {
        self.c = Some(c);
        self
    }
    pub fn with_m(mut self, m: u32) -> Self {
        self.m = Some(m);
        self
    }

    /// Exact-string rendering of the parameters `tag` reads.
    pub fn render_for(&self, tag: IdentityTag) -> BTreeMap<String, String> {
        let mut out = BTreeMap::new();
        for &name in tag.param_names() {
            let v = match name {
                "order" => self.order.map(|o| o.to_string()),
                "lambda" => self.lambda.as_ref().map(|l| l.to_string()),
                "a" => self.a.as_ref().map(rat_string),
                "b" => self.b.as_ref().map(rat_string),
                "c" => self.c.as_ref().map(rat_string),
                "m" => self.m.map(|m| m.to_string()),
                _ => None,
            };
            if let Some(v) = v {
                out.insert(name.to_string(), v);
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    PaperDiscrepancy,
    DomainError,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub indices: Vec<usize>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub id: IdentityTag,
    pub params: BTreeMap<String, String>,
    pub n_max: usize,
    pub status: Status,
    pub counterexamples: Vec<Counterexample>,
    pub note: String,
}

impl IdentityReport {
    /// Pass, or a discrepancy that carries its oracle-backed correction.
    pub fn is_acceptable(&self) -> bool {
        matches!(self.status, Status::Pass | Status::PaperDiscrepancy)
    }
}

/// Accumulates exact mismatches between two computations.
#[derive(Default)]
pub(crate) struct Collector {
    cex: Vec<Counterexample>,
}

impl Collector {
    pub(crate) fn scalar<F: Field>(&mut self, indices: Vec<usize>, lhs: &F, rhs: &F) {
        if lhs != rhs {
            self.cex.push(Counterexample {
                indices,
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }

    /// Compares coefficientwise; indices are `[n, power of x]`.
    pub(crate) fn poly<F: Field>(&mut self, n: usize, lhs: &Poly<F>, rhs: &Poly<F>) {
        let len = lhs.coeffs().len().max(rhs.coeffs().len());
        for j in 0..len {
            self.scalar(vec![n, j], &lhs.coeff(j), &rhs.coeff(j));
        }
    }

    pub(crate) fn is_clean(&self) -> bool {
        self.cex.is_empty()
    }

    pub(crate) fn into_sorted(mut self) -> Vec<Counterexample> {
        self.cex.sort_by(|a, b| a.indices.cmp(&b.indices));
        self.cex
    }
}

/// Outcome of a check routine before it is wrapped into a report.
pub(crate) struct Outcome {
    pub status: Status,
    pub counterexamples: Vec<Counterexample>,
    pub note: String,
}

impl Outcome {
    pub(crate) fn from_collector(col: Collector) -> Self {
        let status = if col.is_clean() {
            Status::Pass
        } else {
            Status::Fail
        };
        Outcome {
            status,
            counterexamples: col.into_sorted(),
            note: String::new(),
        }
    }
}

/// Checks one identity for all degrees `1 <= n <= n_max`.
pub fn verify_identity(tag: IdentityTag, params: &Params, n_max: usize) -> IdentityReport {
    let outcome = if n_max == 0 {
        Err(Error::Domain("n_max must be at least 1".into()))
    } else {
        checks::run(tag, params, n_max)
    };
    let (status, counterexamples, note) = match outcome {
        Ok(o) => (o.status, o.counterexamples, o.note),
        Err(e) => (Status::DomainError, Vec::new(), e.to_string()),
    };
    IdentityReport {
        id: tag,
        params: params.render_for(tag),
        n_max,
        status,
        counterexamples,
        note,
    }
}

/// Runs every grid entry (concurrently) and returns reports ordered by tag,
/// then by grid position.
pub fn run_registry(grid: &[(IdentityTag, Params)], n_max: usize) -> Vec<IdentityReport> {
    let mut indexed: Vec<(usize, IdentityReport)> = grid
        .par_iter()
        .enumerate()
        .map(|(i, (tag, params))| (i, verify_identity(*tag, params, n_max)))
        .collect();
    indexed.sort_by_key(|(i, r)| (r.id, *i));
    indexed.into_iter().map(|(_, r)| r).collect()
}

/// True iff every report passes or is a documented discrepancy.
pub fn registry_passed(reports: &[IdentityReport]) -> bool {
    reports.iter().all(IdentityReport::is_acceptable)
}

pub fn default_orders() -> [i64; 3] {
    [1, 2, -1]
}

pub fn default_bc() -> [(Rat, Rat); 3] {
    [
        (rint(1), rint(1)),
        (rint(2), rint(-1)),
        (rat(1, 2), rat(1, 3)),
    ]
}

pub fn default_lambdas() -> [LambdaParam; 4] {
    [
        LambdaParam::Symbolic,
        LambdaParam::Value(rint(-1)),
        LambdaParam::Value(rint(2)),
        LambdaParam::Value(rat(1, 2)),
    ]
}

/// Grid entries for one identity over the default parameter sets.
pub fn default_grid_for(tag: IdentityTag) -> Vec<(IdentityTag, Params)> {
    let base = Params::default();
    let mut out = Vec::new();
    let names = tag.param_names();
    let uses = |n: &str| names.contains(&n);
    let orders: Vec<Option<i64>> = if uses("order") {
        default_orders().into_iter().map(Some).collect()
    } else {
        vec![None]
    };
    let lambdas: Vec<Option<LambdaParam>> = if uses("lambda") {
        default_lambdas().into_iter().map(Some).collect()
    } else {
        vec![None]
    };
    let bcs: Vec<(Option<Rat>, Option<Rat>)> = match (uses("b"), uses("c")) {
        (true, true) => default_bc()
            .into_iter()
            .map(|(b, c)| (Some(b), Some(c)))
            .collect(),
        (true, false) => default_bc()
            .into_iter()
            .map(|(b, _)| (Some(b), None))
            .collect(),
        (false, true) => default_bc()
            .into_iter()
            .map(|(_, c)| (None, Some(c)))
            .collect(),
        (false, false) => vec![(None, None)],
    };
    let ms: Vec<Option<u32>> = if uses("m") {
        vec![Some(1), Some(2)]
    } else {
        vec![None]
    };
    let pcs: Vec<Option<Rat>> = if uses("a") {
        vec![Some(rint(2)), Some(rint(-1)), Some(rat(1, 2))]
    } else {
        vec![None]
    };
    for order in &orders {
        for (b, c) in &bcs {
            for m in &ms {
                for a in &pcs {
                    for lambda in &lambdas {
                        let p = Params {
                            order: *order,
                            lambda: lambda.clone(),
                            a: a.clone(),
                            b: b.clone(),
                            c: c.clone(),
                            m: *m,
                        };
                        out.push((tag, p));
                    }
                }
            }
        }
    }
    if out.is_empty() {
        out.push((tag, base));
    }
    out
}

/// Every identity over the default parameter sets.
pub fn default_grid() -> Vec<(IdentityTag, Params)> {
    IdentityTag::ALL
        .into_iter()
        .flat_map(default_grid_for)
        .collect()
}

fn require<T: Clone>(v: &Option<T>, name: &str) -> Result<T> {
    v.clone()
        .ok_or_else(|| Error::Domain(format!("missing parameter {name}")))
}

fn require_nonzero(v: &Option<Rat>, name: &str) -> Result<Rat> {
    let v = require(v, name)?;
    if v.is_zero() {
        return Err(Error::Domain(format!("parameter {name} must be nonzero")));
    }
    Ok(v)
}

fn require_lambda(v: &Option<LambdaParam>) -> Result<LambdaParam> {
    let l = require(v, "lambda")?;
    if let LambdaParam::Value(r) = &l {
        if r.is_one() {
            return Err(Error::Domain("lambda must differ from 1".into()));
        }
    }
    Ok(l)
}
