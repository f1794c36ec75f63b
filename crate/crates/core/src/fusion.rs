//! su(N) level-k fusion coefficients from the Verlinde formula.
//!
//! Only ratios of modular S-matrix entries are used:
//!
//! ```text
//! N_{lambda,mu}^{nu} = sum_sigma chi_lambda(sigma) chi_mu(sigma) conj(chi_nu(sigma)) / sum_rho |chi_rho(sigma)|^2
//! ```
//!
//! where `chi_lambda(sigma)` is the Schur polynomial of `lambda` evaluated at
//! the shifted root-of-unity point of `sigma`, computed as a ratio of
//! alternants. No global normalization constant enters.

use std::collections::HashMap;
use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::orbit::Params;
use crate::weight::Weight;

/// Maximum distance of a raw Verlinde sum from its nonnegative integer.
pub const FUSION_TOLERANCE: f64 = 1e-6;

/// A fusion coefficient together with the unrounded Verlinde sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FusionValue {
    pub value: u64,
    pub raw: Complex64,
}

/// Three weights at a common `(N, k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionQuery {
    lambda: Weight,
    mu: Weight,
    nu: Weight,
}

impl FusionQuery {
    pub fn new(lambda: Weight, mu: Weight, nu: Weight) -> Result<Self> {
        let p = lambda.params();
        p.ensure_same(&mu.params())?;
        p.ensure_same(&nu.params())?;
        Ok(FusionQuery { lambda, mu, nu })
    }

    pub fn params(&self) -> Params {
        self.lambda.params()
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn mu(&self) -> &Weight {
        &self.mu
    }

    pub fn nu(&self) -> &Weight {
        &self.nu
    }
}

/// All weights with coefficient sum at most `k`, in increasing
/// lexicographic order of `(a_{N-1}, ..., a_1)`.
pub fn enumerate_level_weights(params: Params) -> Vec<Weight> {
    let rank = params.modulus() as usize - 1;
    let k = params.level();
    let mut out = Vec::new();
    let mut reversed = vec![0u32; rank];
    fill_weights(&mut reversed, 0, k, k, &mut out);
    out
}

fn fill_weights(reversed: &mut [u32], pos: usize, budget: u32, level: u32, out: &mut Vec<Weight>) {
    if pos == reversed.len() {
        let coeffs: Vec<u32> = reversed.iter().rev().copied().collect();
        out.push(Weight::new(coeffs, level).expect("sum bounded by level"));
        return;
    }
    for c in 0..=budget {
        reversed[pos] = c;
        fill_weights(reversed, pos + 1, budget - c, level, out);
    }
    reversed[pos] = 0;
}

/// Character table and Verlinde weights for one `(N, k)`, shared read-only
/// by every query at that level.
#[derive(Debug, Clone)]
pub struct FusionTable {
    params: Params,
    weights: Vec<Weight>,
    index: HashMap<Weight, usize>,
    // chars[rho][sigma]
    chars: Vec<Vec<Complex64>>,
    // 1 / sum_rho |chi_rho(sigma)|^2
    sigma_weight: Vec<f64>,
}

impl FusionTable {
    pub fn new(params: Params) -> Self {
        let weights = enumerate_level_weights(params);
        let index = weights
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i))
            .collect();
        let phases: Vec<Vec<i64>> = weights.iter().map(|s| shifted_phases(params, s)).collect();
        let chars: Vec<Vec<Complex64>> = weights
            .iter()
            .map(|rho| phases.iter().map(|ph| character(params, rho, ph)).collect())
            .collect();
        let sigma_weight = (0..weights.len())
            .map(|s| 1.0 / chars.iter().map(|row| row[s].norm_sqr()).sum::<f64>())
            .collect();
        FusionTable {
            params,
            weights,
            index,
            chars,
            sigma_weight,
        }
    }

    pub fn params(&self) -> Params {
        self.params
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    fn position(&self, w: &Weight) -> Result<usize> {
        self.params.ensure_same(&w.params())?;
        Ok(*self
            .index
            .get(w)
            .expect("every weight at these params is tabulated"))
    }

    /// The unrounded Verlinde sum for `N_{lambda,mu}^{nu}`.
    pub fn raw(&self, lambda: &Weight, mu: &Weight, nu: &Weight) -> Result<Complex64> {
        let (l, m, n) = (
            self.position(lambda)?,
            self.position(mu)?,
            self.position(nu)?,
        );
        let (cl, cm, cn) = (&self.chars[l], &self.chars[m], &self.chars[n]);
        Ok((0..self.weights.len())
            .map(|s| cl[s] * cm[s] * cn[s].conj() * self.sigma_weight[s])
            .sum())
    }

    pub fn coefficient(&self, lambda: &Weight, mu: &Weight, nu: &Weight) -> Result<FusionValue> {
        let raw = self.raw(lambda, mu, nu)?;
        let nearest = raw.re.round();
        if (raw.re - nearest).abs() > FUSION_TOLERANCE
            || raw.im.abs() > FUSION_TOLERANCE
            || nearest < 0.0
        {
            return Err(Error::NumericalDrift {
                re: raw.re,
                im: raw.im,
                tolerance: FUSION_TOLERANCE,
            });
        }
        Ok(FusionValue {
            value: nearest as u64,
            raw,
        })
    }

    pub fn query(&self, q: &FusionQuery) -> Result<FusionValue> {
        self.coefficient(&q.lambda, &q.mu, &q.nu)
    }
}

/// Builds a one-off table; use [`FusionTable`] directly for repeated queries.
pub fn fusion_coefficient(q: &FusionQuery) -> Result<u64> {
    Ok(FusionTable::new(q.params()).query(q)?.value)
}

/// Numerators `N * phi_b(sigma)` for `b = 1..N`, where
/// `phi_b = p_b + N - b - (|p| + N(N-1)/2) / N` and `p_N = 0`.
/// The evaluation point is `x_b = exp(-2 pi i phi_b / (k + N))`.
fn shifted_phases(params: Params, sigma: &Weight) -> Vec<i64> {
    let n = i64::from(params.modulus());
    let mut parts: Vec<i64> = sigma.partition().into_iter().map(i64::from).collect();
    parts.push(0);
    let shift = sigma.size() as i64 + n * (n - 1) / 2;
    parts
        .iter()
        .enumerate()
        .map(|(b, &p)| n * (p + n - 1 - b as i64) - shift)
        .collect()
}

/// `x_b^e` for the point with phase numerator `phase`.
fn point_power(params: Params, phase: i64, exponent: i64) -> Complex64 {
    let n = i64::from(params.modulus());
    let period = n * (i64::from(params.level()) + n);
    let turns = (phase * exponent).rem_euclid(period);
    Complex64::from_polar(1.0, -TAU * turns as f64 / period as f64)
}

/// Schur polynomial of `rho` at the point with phases `phases`, as
/// `det(x_b^{p_a + N - a}) / det(x_b^{N - a})`.
fn character(params: Params, rho: &Weight, phases: &[i64]) -> Complex64 {
    let n = params.modulus() as usize;
    let mut parts: Vec<i64> = rho.partition().into_iter().map(i64::from).collect();
    parts.push(0);
    let alternant = |shape: &dyn Fn(usize) -> i64| -> Complex64 {
        let m: Vec<Vec<Complex64>> = (0..n)
            .map(|a| {
                phases
                    .iter()
                    .map(|&ph| point_power(params, ph, shape(a)))
                    .collect()
            })
            .collect();
        determinant(&m)
    };
    let top = alternant(&|a| parts[a] + (n - 1 - a) as i64);
    let bottom = alternant(&|a| (n - 1 - a) as i64);
    top / bottom
}

/// Cofactor expansion along the first row. Intended for the small matrices
/// that occur here (`N <= 6` or so).
pub(crate) fn determinant(m: &[Vec<Complex64>]) -> Complex64 {
    match m.len() {
        0 => Complex64::new(1.0, 0.0),
        1 => m[0][0],
        2 => m[0][0] * m[1][1] - m[0][1] * m[1][0],
        n => {
            let mut acc = Complex64::new(0.0, 0.0);
            for col in 0..n {
                let minor: Vec<Vec<Complex64>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(j, _)| j != col)
                            .map(|(_, &v)| v)
                            .collect()
                    })
                    .collect();
                let term = m[0][col] * determinant(&minor);
                if col % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
    }
}

/// The su(2) level-k rule for spins `a/2, b/2, c/2`: 1 iff
/// `|a - b| <= c <= min(a + b, 2k - a - b)` and `c = a + b (mod 2)`.
///
/// The factors `a`, `b` must be level-k weights. A target `c > k` is not a
/// level-k weight and gets coefficient 0.
pub fn su2_fusion_closed_form(a: u32, b: u32, c: u32, k: u32) -> Result<u32> {
    for v in [a, b] {
        if v > k {
            return Err(Error::RangeError { value: v, level: k });
        }
    }
    let (a, b, c, k) = (i64::from(a), i64::from(b), i64::from(c), i64::from(k));
    let fits = (a - b).abs() <= c && c <= (a + b).min(2 * k - a - b) && (a + b - c) % 2 == 0;
    Ok(u32::from(fits))
}
