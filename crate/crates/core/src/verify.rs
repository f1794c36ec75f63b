//! Exhaustive scans over every case up to a maximum level.
//!
//! Each scan kind checks one claim on all admissible `(k, a, b, c)` cases.
//! Cases with a non-row middle factor are only visited when
//! [`ScanSpec::include_nonrow_b`] is set, and they are reported separately as
//! evidence: they never decide whether a scan passed.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::fusion::FusionTable;
use crate::orbit::{enumerate_labels, OrbitLabel, Params, DEFAULT_ENUM_CAP};
use crate::product::{append_zero, product_capped, Method, ProductExpansion};
use crate::weight::{is_row_weight, lift_level, weight_to_orbit, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScanKind {
    /// `M_{[a],[b]}^{[c]} <= 1` for row `b`.
    MultiplicityFree,
    /// `M_{[a],[b]}^{(k)[c]} <= M_{[a,0],[b,0]}^{(k+1)[c,0]}` for row `b`.
    OrbitMonotone,
    /// `N_{mu,lambda}^{(k)nu} = M_{[mu],[lambda]}^{(k)[nu]}` for row `lambda`.
    OrbitFusionEquality,
    /// `N_{mu,lambda}^{(k)nu} <= N_{mu,lambda}^{(k+1)nu}` for row `lambda`.
    FusionMonotone,
    /// The three product algorithms agree on every label pair.
    AlgorithmEquivalence,
}

impl ScanKind {
    pub const ALL: [ScanKind; 5] = [
        ScanKind::MultiplicityFree,
        ScanKind::OrbitMonotone,
        ScanKind::OrbitFusionEquality,
        ScanKind::FusionMonotone,
        ScanKind::AlgorithmEquivalence,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            ScanKind::MultiplicityFree => "multiplicity-free",
            ScanKind::OrbitMonotone => "orbit-monotone",
            ScanKind::OrbitFusionEquality => "orbit-fusion-equality",
            ScanKind::FusionMonotone => "fusion-monotone",
            ScanKind::AlgorithmEquivalence => "algorithm-equivalence",
        }
    }
}

impl fmt::Display for ScanKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ScanKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        ScanKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown scan kind {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanSpec {
    pub kind: ScanKind,
    pub modulus: u32,
    pub k_max: u32,
    pub include_nonrow_b: bool,
    #[serde(skip)]
    pub enum_cap: u128,
}

impl ScanSpec {
    pub fn new(kind: ScanKind, modulus: u32, k_max: u32) -> Result<Self> {
        Params::new(modulus, k_max)?;
        Ok(ScanSpec {
            kind,
            modulus,
            k_max,
            include_nonrow_b: false,
            enum_cap: DEFAULT_ENUM_CAP,
        })
    }

    pub fn with_nonrow_b(mut self, include: bool) -> Self {
        self.include_nonrow_b = include;
        self
    }

    pub fn with_enum_cap(mut self, cap: u128) -> Self {
        self.enum_cap = cap;
        self
    }
}

/// One failed comparison, with enough data to re-check it by hand.
///
/// For the orbit kinds `a`, `b`, `c` are multiplicity vectors; for the fusion
/// kinds they are the fundamental-weight coefficients of `mu`, `lambda`, `nu`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub k: u32,
    pub a: Vec<u32>,
    pub b: Vec<u32>,
    pub c: Vec<u32>,
    pub lhs: u64,
    pub rhs: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub cases_checked: u64,
    pub violations: Vec<Violation>,
}

impl Tally {
    fn absorb(&mut self, other: Tally) {
        self.cases_checked += other.cases_checked;
        self.violations.extend(other.violations);
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub spec: ScanSpec,
    pub cases_checked: u64,
    pub violations: Vec<Violation>,
    /// Non-row cases; present only when requested. Never part of the verdict.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub evidence: Option<Tally>,
    #[serde(rename = "elapsed_us", serialize_with = "micros")]
    pub elapsed: Duration,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Equality ignoring elapsed time.
    pub fn same_outcome(&self, other: &Report) -> bool {
        self.spec == other.spec
            && self.cases_checked == other.cases_checked
            && self.violations == other.violations
            && self.evidence == other.evidence
    }
}

fn micros<S: Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u64(d.as_micros().min(u128::from(u64::MAX)) as u64)
}

/// Runs the scan on the current rayon pool. Case order in the report is
/// fixed regardless of the number of threads.
pub fn run_scan(spec: &ScanSpec) -> Result<Report> {
    let start = Instant::now();
    let mut main = Tally::default();
    let mut evidence = Tally::default();
    for k in 1..=spec.k_max {
        let params = Params::new(spec.modulus, k)?;
        let (row_part, nonrow_part) = match spec.kind {
            ScanKind::MultiplicityFree | ScanKind::OrbitMonotone => orbit_claim(spec, params)?,
            ScanKind::OrbitFusionEquality | ScanKind::FusionMonotone => fusion_claim(spec, params)?,
            ScanKind::AlgorithmEquivalence => (equivalence(spec, params)?, Tally::default()),
        };
        main.absorb(row_part);
        evidence.absorb(nonrow_part);
    }
    Ok(Report {
        spec: spec.clone(),
        cases_checked: main.cases_checked,
        violations: main.violations,
        evidence: spec.include_nonrow_b.then_some(evidence),
        elapsed: start.elapsed(),
    })
}

/// Runs `check` on every item in parallel and merges in item order.
fn merge_ordered<T, F>(items: &[T], check: F) -> Result<Tally>
where
    T: Sync,
    F: Fn(&T) -> Result<Tally> + Sync + Send,
{
    let parts: Vec<Tally> = items.par_iter().map(check).collect::<Result<_>>()?;
    let mut out = Tally::default();
    for p in parts {
        out.absorb(p);
    }
    Ok(out)
}

/// All `(l, r)` pairs with `l` varying slowest.
fn cross<'x, L, R>(left: &'x [L], right: &'x [R]) -> Vec<(&'x L, &'x R)> {
    left.iter()
        .flat_map(|l| right.iter().map(move |r| (l, r)))
        .collect()
}

fn row_labels(params: Params) -> Vec<OrbitLabel> {
    (0..=params.level())
        .map(|m| OrbitLabel::row(params, m).expect("m <= k"))
        .collect()
}

fn orbit_claim(spec: &ScanSpec, params: Params) -> Result<(Tally, Tally)> {
    let labels: Vec<OrbitLabel> = enumerate_labels(params).collect();
    let rows = row_labels(params);
    let nonrows: Vec<OrbitLabel> = if spec.include_nonrow_b {
        labels.iter().filter(|l| !l.is_row()).cloned().collect()
    } else {
        Vec::new()
    };

    let check = |(a, b): &(&OrbitLabel, &OrbitLabel)| -> Result<Tally> {
        let here = product_capped(a, b, Method::Blockwise, spec.enum_cap)?;
        let lifted = match spec.kind {
            ScanKind::OrbitMonotone => Some(product_capped(
                &append_zero(a),
                &append_zero(b),
                Method::Blockwise,
                spec.enum_cap,
            )?),
            _ => None,
        };
        let mut tally = Tally::default();
        for c in &labels {
            tally.cases_checked += 1;
            let lhs = here.coefficient(c);
            let (rhs, holds) = match &lifted {
                Some(up) => {
                    let rhs = up.coefficient(&append_zero(c));
                    (rhs, lhs <= rhs)
                }
                None => (1, lhs <= 1),
            };
            if !holds {
                tally.violations.push(Violation {
                    k: params.level(),
                    a: a.mults().to_vec(),
                    b: b.mults().to_vec(),
                    c: c.mults().to_vec(),
                    lhs,
                    rhs,
                    detail: None,
                });
            }
        }
        Ok(tally)
    };

    let row_pairs = cross(&labels, &rows);
    let nonrow_pairs = cross(&labels, &nonrows);
    Ok((
        merge_ordered(&row_pairs, check)?,
        merge_ordered(&nonrow_pairs, check)?,
    ))
}

fn fusion_claim(spec: &ScanSpec, params: Params) -> Result<(Tally, Tally)> {
    let table = FusionTable::new(params);
    let lifted_table = match spec.kind {
        ScanKind::FusionMonotone => Some(FusionTable::new(params.raised())),
        _ => None,
    };
    let weights = table.weights();
    let rows: Vec<Weight> = (0..=params.level())
        .map(|m| Weight::row(params, m).expect("m <= k"))
        .collect();
    let nonrows: Vec<Weight> = if spec.include_nonrow_b {
        weights
            .iter()
            .filter(|w| !is_row_weight(w))
            .cloned()
            .collect()
    } else {
        Vec::new()
    };

    let check = |(lambda, mu): &(&Weight, &Weight)| -> Result<Tally> {
        let orbit_product: Option<ProductExpansion> = match spec.kind {
            ScanKind::OrbitFusionEquality => Some(product_capped(
                &weight_to_orbit(mu),
                &weight_to_orbit(lambda),
                Method::Blockwise,
                spec.enum_cap,
            )?),
            _ => None,
        };
        let mut tally = Tally::default();
        for nu in weights {
            tally.cases_checked += 1;
            let lhs = table.coefficient(lambda, mu, nu)?.value;
            let (rhs, holds) = match (&orbit_product, &lifted_table) {
                (Some(prod), _) => {
                    let rhs = prod.coefficient(&weight_to_orbit(nu));
                    (rhs, lhs == rhs)
                }
                (None, Some(up)) => {
                    let rhs = up
                        .coefficient(&lift_level(lambda), &lift_level(mu), &lift_level(nu))?
                        .value;
                    (rhs, lhs <= rhs)
                }
                (None, None) => unreachable!("fusion scans always have a comparison"),
            };
            if !holds {
                tally.violations.push(Violation {
                    k: params.level(),
                    a: mu.coeffs().to_vec(),
                    b: lambda.coeffs().to_vec(),
                    c: nu.coeffs().to_vec(),
                    lhs,
                    rhs,
                    detail: None,
                });
            }
        }
        Ok(tally)
    };

    let row_pairs = cross(&rows, weights);
    let nonrow_pairs = cross(&nonrows, weights);
    Ok((
        merge_ordered(&row_pairs, check)?,
        merge_ordered(&nonrow_pairs, check)?,
    ))
}

fn equivalence(spec: &ScanSpec, params: Params) -> Result<Tally> {
    let labels: Vec<OrbitLabel> = enumerate_labels(params).collect();
    let pairs = cross(&labels, &labels);
    merge_ordered(&pairs, |(a, b)| {
        let reference = product_capped(a, b, Method::Definition, spec.enum_cap)?;
        let others = [
            (
                Method::List,
                product_capped(a, b, Method::List, spec.enum_cap)?,
            ),
            (
                Method::Blockwise,
                product_capped(a, b, Method::Blockwise, spec.enum_cap)?,
            ),
        ];
        let mut tally = Tally::default();
        for c in &labels {
            tally.cases_checked += 1;
            let lhs = reference.coefficient(c);
            for (method, other) in &others {
                let rhs = other.coefficient(c);
                if lhs != rhs {
                    tally.violations.push(Violation {
                        k: params.level(),
                        a: a.mults().to_vec(),
                        b: b.mults().to_vec(),
                        c: c.mults().to_vec(),
                        lhs,
                        rhs,
                        detail: Some(format!("definition vs {method}")),
                    });
                }
            }
        }
        Ok(tally)
    })
}
