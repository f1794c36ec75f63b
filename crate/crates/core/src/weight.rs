//! Dominant weights of `A_{N-1}` at level `k` and their orbits in `Z_N^k`.
//!
//! The weight `a_1 w_1 + ... + a_{N-1} w_{N-1}` of level `k` corresponds to
//! the orbit with multiplicities `(k - sum a_i, a_1, ..., a_{N-1})`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::orbit::{OrbitLabel, Params};

/// Fundamental-weight coefficients `(a_1, ..., a_{N-1})` together with the
/// level they are read at.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Weight {
    coeffs: Vec<u32>,
    level: u32,
}

impl Weight {
    pub fn new(coeffs: Vec<u32>, level: u32) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidParams(
                "a weight needs at least one coefficient (N >= 2)".into(),
            ));
        }
        if level < 1 {
            return Err(Error::InvalidParams("level must be at least 1".into()));
        }
        let sum: u64 = coeffs.iter().map(|&c| u64::from(c)).sum();
        if sum > u64::from(level) {
            return Err(Error::LevelExceeded { sum, level });
        }
        Ok(Weight { coeffs, level })
    }

    /// Validates against `params` as well as the level bound.
    pub fn with_params(params: Params, coeffs: Vec<u32>) -> Result<Self> {
        let expected = params.modulus() as usize - 1;
        if coeffs.len() != expected {
            return Err(Error::ArityMismatch {
                expected,
                got: coeffs.len(),
            });
        }
        Weight::new(coeffs, params.level())
    }

    pub fn zero(params: Params) -> Self {
        Weight {
            coeffs: vec![0; params.modulus() as usize - 1],
            level: params.level(),
        }
    }

    /// `m` times the first fundamental weight.
    pub fn row(params: Params, m: u32) -> Result<Self> {
        let mut coeffs = vec![0; params.modulus() as usize - 1];
        coeffs[0] = m;
        Weight::new(coeffs, params.level())
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn modulus(&self) -> u32 {
        self.coeffs.len() as u32 + 1
    }

    pub fn params(&self) -> Params {
        Params::new(self.modulus(), self.level).expect("validated on construction")
    }

    /// Partition parts `p_j = a_j + ... + a_{N-1}` for `j = 1..N-1`.
    pub fn partition(&self) -> Vec<u32> {
        let mut parts = self.coeffs.clone();
        for j in (0..parts.len().saturating_sub(1)).rev() {
            parts[j] += parts[j + 1];
        }
        parts
    }

    /// Number of boxes `sum_i i * a_i` of the Young diagram.
    pub fn size(&self) -> u64 {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| (i as u64 + 1) * u64::from(c))
            .sum()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if wrote {
                f.write_str("+")?;
            }
            if c != 1 {
                write!(f, "{c}")?;
            }
            write!(f, "w{}", i + 1)?;
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        write!(f, " @ k={}", self.level)
    }
}

pub fn weight_to_orbit(w: &Weight) -> OrbitLabel {
    let used: u32 = w.coeffs.iter().sum();
    let mut mults = Vec::with_capacity(w.coeffs.len() + 1);
    mults.push(w.level - used);
    mults.extend_from_slice(&w.coeffs);
    OrbitLabel::from_mults_unchecked(mults)
}

pub fn orbit_to_weight(label: &OrbitLabel) -> Weight {
    Weight {
        coeffs: label.mults()[1..].to_vec(),
        level: label.level(),
    }
}

/// True for `m w_1`, `m = 0` included.
pub fn is_row_weight(w: &Weight) -> bool {
    w.coeffs[1..].iter().all(|&c| c == 0)
}

/// The same weight read at level `k + 1`.
pub fn lift_level(w: &Weight) -> Weight {
    Weight {
        coeffs: w.coeffs.clone(),
        level: w.level + 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbit::{enumerate_labels, standard_form};
    use crate::product::append_zero;

    fn params(n: u32, k: u32) -> Params {
        Params::new(n, k).unwrap()
    }

    #[test]
    fn weight_to_orbit_examples() {
        let w = Weight::new(vec![1, 1], 3).unwrap();
        let l = weight_to_orbit(&w);
        assert_eq!(l.mults(), &[1, 1, 1]);
        assert_eq!(standard_form(&l).entries(), &[2, 1, 0]);

        let zero = Weight::zero(params(4, 5));
        assert_eq!(weight_to_orbit(&zero).mults(), &[5, 0, 0, 0]);

        let saturated = Weight::new(vec![3], 3).unwrap();
        let l = weight_to_orbit(&saturated);
        assert_eq!(l.mults(), &[0, 3]);
        assert_eq!(standard_form(&l).entries(), &[1, 1, 1]);
    }

    #[test]
    fn level_exceeded() {
        assert_eq!(
            Weight::new(vec![2, 2], 3),
            Err(Error::LevelExceeded { sum: 4, level: 3 })
        );
        assert!(Weight::new(vec![1], 0).is_err());
        assert!(matches!(
            Weight::with_params(params(3, 2), vec![1]),
            Err(Error::ArityMismatch { .. })
        ));
    }

    #[test]
    fn orbit_to_weight_examples() {
        let l = crate::orbit::make_label(params(3, 3), vec![1, 1, 1]).unwrap();
        assert_eq!(orbit_to_weight(&l), Weight::new(vec![1, 1], 3).unwrap());
        let z = OrbitLabel::zero(params(3, 2));
        assert_eq!(orbit_to_weight(&z), Weight::zero(params(3, 2)));
    }

    #[test]
    fn bijection_and_roundtrip() {
        for n in 2..=4 {
            for k in 1..=5 {
                for l in enumerate_labels(params(n, k)) {
                    let w = orbit_to_weight(&l);
                    assert_eq!(weight_to_orbit(&w), l);
                    assert_eq!(orbit_to_weight(&weight_to_orbit(&w)), w);
                }
            }
        }
    }

    #[test]
    fn row_weights() {
        assert!(is_row_weight(&Weight::new(vec![2, 0], 3).unwrap()));
        assert!(!is_row_weight(&Weight::new(vec![0, 1], 3).unwrap()));
        assert!(is_row_weight(&Weight::zero(params(3, 3))));
        assert!(is_row_weight(&Weight::new(vec![1], 1).unwrap()));
    }

    #[test]
    fn lift_examples() {
        let w = Weight::new(vec![1], 1).unwrap();
        let lifted = lift_level(&w);
        assert_eq!(lifted, Weight::new(vec![1], 2).unwrap());
        assert_eq!(weight_to_orbit(&w).mults(), &[0, 1]);
        assert_eq!(weight_to_orbit(&lifted).mults(), &[1, 1]);

        let z = lift_level(&Weight::zero(params(3, 2)));
        assert_eq!(weight_to_orbit(&z), OrbitLabel::zero(params(3, 3)));
    }

    #[test]
    fn lift_commutes_with_append_zero() {
        for n in 2..=4 {
            for k in 1..=4 {
                for l in enumerate_labels(params(n, k)) {
                    let w = orbit_to_weight(&l);
                    assert_eq!(
                        weight_to_orbit(&lift_level(&w)),
                        append_zero(&weight_to_orbit(&w))
                    );
                }
            }
        }
    }

    #[test]
    fn partition_and_size() {
        let w = Weight::new(vec![2, 1, 1], 5).unwrap();
        assert_eq!(w.partition(), vec![4, 2, 1]);
        assert_eq!(w.size(), 7);
        assert_eq!(w.to_string(), "2w1+w2+w3 @ k=5");
    }
}
