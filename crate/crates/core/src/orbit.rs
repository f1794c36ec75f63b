//! Orbits of the coordinate-permuting action of `S_k` on `Z_N^k`.
//!
//! An orbit is named by its multiplicity vector `(a_0, ..., a_{N-1})`, where
//! `a_j` counts how often the residue `j` occurs. Every orbit has a unique
//! weakly decreasing representative, the standard form
//! `((N-1)^{a_{N-1}}, ..., 1^{a_1}, 0^{a_0})`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Default upper bound on the number of tuples materialized from one orbit.
pub const DEFAULT_ENUM_CAP: u128 = 10_000_000;

/// The modulus `N` and tuple length (level) `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Params {
    modulus: u32,
    level: u32,
}

impl Params {
    pub fn new(modulus: u32, level: u32) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::InvalidParams(format!(
                "modulus must be at least 2, got {modulus}"
            )));
        }
        if level < 1 {
            return Err(Error::InvalidParams("level must be at least 1".into()));
        }
        Ok(Params { modulus, level })
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    /// Same modulus, level `k + 1`.
    pub fn raised(&self) -> Params {
        Params {
            modulus: self.modulus,
            level: self.level + 1,
        }
    }

    pub(crate) fn ensure_same(&self, other: &Params) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::ParamsMismatch {
                left_modulus: self.modulus,
                left_level: self.level,
                right_modulus: other.modulus,
                right_level: other.level,
            })
        }
    }
}

/// An element of `Z_N^k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Tuple(Vec<u32>);

impl Tuple {
    pub fn new(params: Params, entries: Vec<u32>) -> Result<Self> {
        if entries.len() != params.level as usize {
            return Err(Error::ArityMismatch {
                expected: params.level as usize,
                got: entries.len(),
            });
        }
        check_entries(params.modulus, &entries)?;
        Ok(Tuple(entries))
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Tuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.0)
    }
}

fn check_entries(modulus: u32, entries: &[u32]) -> Result<()> {
    match entries.iter().position(|&e| e >= modulus) {
        Some(position) => Err(Error::EntryOutOfRange {
            position,
            entry: entries[position],
            modulus,
        }),
        None => Ok(()),
    }
}

/// Multiplicity vector `(a_0, ..., a_{N-1})` naming one orbit.
///
/// Labels order by their multiplicity vectors; this is the key order used by
/// [`crate::ProductExpansion`] and by every serialized report.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct OrbitLabel {
    mults: Vec<u32>,
}

impl OrbitLabel {
    /// Validates `mults` against `params`.
    pub fn new(params: Params, mults: Vec<u32>) -> Result<Self> {
        if mults.len() != params.modulus as usize {
            return Err(Error::ArityMismatch {
                expected: params.modulus as usize,
                got: mults.len(),
            });
        }
        let sum: u64 = mults.iter().map(|&m| u64::from(m)).sum();
        if sum != u64::from(params.level) {
            return Err(Error::SumMismatch {
                expected: params.level,
                got: sum,
            });
        }
        Ok(OrbitLabel { mults })
    }

    /// The orbit `[0^k]` containing the zero tuple.
    pub fn zero(params: Params) -> Self {
        let mut mults = vec![0; params.modulus as usize];
        mults[0] = params.level;
        OrbitLabel { mults }
    }

    /// The row orbit with standard form `(1^m, 0^{k-m})`.
    pub fn row(params: Params, m: u32) -> Result<Self> {
        if m > params.level {
            return Err(Error::RangeError {
                value: m,
                level: params.level,
            });
        }
        let mut mults = vec![0; params.modulus as usize];
        mults[0] = params.level - m;
        mults[1] = m;
        Ok(OrbitLabel { mults })
    }

    pub(crate) fn from_mults_unchecked(mults: Vec<u32>) -> Self {
        debug_assert!(mults.len() >= 2);
        OrbitLabel { mults }
    }

    pub fn mults(&self) -> &[u32] {
        &self.mults
    }

    pub fn modulus(&self) -> u32 {
        self.mults.len() as u32
    }

    pub fn level(&self) -> u32 {
        self.mults.iter().sum()
    }

    pub fn params(&self) -> Params {
        Params {
            modulus: self.modulus(),
            level: self.level(),
        }
    }

    /// True when the standard form is `(1^m, 0^{k-m})` for some `m`, `m = 0` included.
    pub fn is_row(&self) -> bool {
        self.mults[2..].iter().all(|&m| m == 0)
    }

    /// Sum of the entries of any tuple in the orbit, reduced mod `N`.
    pub fn charge(&self) -> u32 {
        let n = u64::from(self.modulus());
        let total: u64 = self
            .mults
            .iter()
            .enumerate()
            .map(|(j, &m)| j as u64 * u64::from(m))
            .sum();
        (total % n) as u32
    }
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.mults)
    }
}

fn write_joined(f: &mut fmt::Formatter<'_>, values: &[u32]) -> fmt::Result {
    f.write_str("(")?;
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    f.write_str(")")
}

pub fn make_label(params: Params, mults: Vec<u32>) -> Result<OrbitLabel> {
    OrbitLabel::new(params, mults)
}

/// The weakly decreasing representative of the orbit.
pub fn standard_form(label: &OrbitLabel) -> Tuple {
    let mut entries = Vec::with_capacity(label.level() as usize);
    for (value, &count) in label.mults.iter().enumerate().rev() {
        entries.extend(std::iter::repeat_n(value as u32, count as usize));
    }
    Tuple(entries)
}

/// Counts occurrences of each residue in `entries`.
pub fn label_of_tuple(params: Params, entries: &[u32]) -> Result<OrbitLabel> {
    if entries.len() != params.level as usize {
        return Err(Error::ArityMismatch {
            expected: params.level as usize,
            got: entries.len(),
        });
    }
    check_entries(params.modulus, entries)?;
    Ok(count_residues(params.modulus, entries))
}

pub(crate) fn count_residues(modulus: u32, entries: &[u32]) -> OrbitLabel {
    let mut mults = vec![0u32; modulus as usize];
    for &e in entries {
        mults[e as usize] += 1;
    }
    OrbitLabel { mults }
}

/// Number of distinct permutations of the standard form, `k! / (a_0! ... a_{N-1}!)`.
pub fn orbit_size(label: &OrbitLabel) -> Result<u128> {
    // Built as a product of binomials so intermediates stay exact integers.
    let mut size: u128 = 1;
    let mut placed: u128 = 0;
    for &count in &label.mults {
        for i in 1..=u128::from(count) {
            placed += 1;
            size = size
                .checked_mul(placed)
                .ok_or(Error::Overflow("orbit size"))?
                / i;
        }
    }
    Ok(size)
}

/// Iterator over the tuples of one orbit in lexicographically decreasing
/// order, starting at the standard form.
#[derive(Debug, Clone)]
pub struct OrbitIter {
    next: Option<Vec<u32>>,
}

impl OrbitIter {
    fn new(label: &OrbitLabel) -> Self {
        OrbitIter {
            next: Some(standard_form(label).into_entries()),
        }
    }
}

impl Iterator for OrbitIter {
    type Item = Tuple;

    fn next(&mut self) -> Option<Tuple> {
        let current = self.next.take()?;
        let mut following = current.clone();
        if prev_permutation(&mut following) {
            self.next = Some(following);
        }
        Some(Tuple(current))
    }
}

/// Rearranges `v` into the lexicographically previous permutation of its
/// multiset. Returns `false` (leaving `v` unchanged) if `v` is already the
/// smallest, i.e. weakly increasing.
fn prev_permutation(v: &mut [u32]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| v[i] > v[i + 1]) else {
        return false;
    };
    let j = (i + 1..n)
        .rev()
        .find(|&j| v[j] < v[i])
        .expect("pivot exists");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Enumerates the orbit with the default cap.
pub fn enumerate_orbit(label: &OrbitLabel) -> Result<OrbitIter> {
    enumerate_orbit_capped(label, DEFAULT_ENUM_CAP)
}

pub fn enumerate_orbit_capped(label: &OrbitLabel, cap: u128) -> Result<OrbitIter> {
    let size = orbit_size(label)?;
    if size > cap {
        return Err(Error::BoundExceeded { size, cap });
    }
    Ok(OrbitIter::new(label))
}

/// Iterator over all orbit labels for `(N, k)`.
///
/// Labels come out in lexicographically decreasing order of
/// `(a_{N-1}, ..., a_0)`, which is the same as decreasing order of their
/// standard forms.
#[derive(Debug, Clone)]
pub struct LabelIter {
    // Reversed multiplicities (a_{N-1}, ..., a_0).
    next: Option<Vec<u32>>,
}

impl Iterator for LabelIter {
    type Item = OrbitLabel;

    fn next(&mut self) -> Option<OrbitLabel> {
        let current = self.next.take()?;
        let n = current.len();
        if let Some(i) = (0..n - 1).rev().find(|&i| current[i] > 0) {
            let mut following = current.clone();
            let tail: u32 = following[i + 1..].iter().sum();
            following[i] -= 1;
            following[i + 1..].iter_mut().for_each(|x| *x = 0);
            following[i + 1] = tail + 1;
            self.next = Some(following);
        }
        let mut mults = current;
        mults.reverse();
        Some(OrbitLabel { mults })
    }
}

pub fn enumerate_labels(params: Params) -> LabelIter {
    let mut start = vec![0; params.modulus as usize];
    start[0] = params.level;
    LabelIter { next: Some(start) }
}

/// `C(n, r)` in exact arithmetic.
pub fn binomial(n: u64, r: u64) -> Result<u128> {
    if r > n {
        return Ok(0);
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 1..=u128::from(r) {
        acc = acc
            .checked_mul(u128::from(n) - u128::from(r) + i)
            .ok_or(Error::Overflow("binomial"))?
            / i;
    }
    Ok(acc)
}

/// Number of orbits for `(N, k)`, `C(k + N - 1, N - 1)`.
pub fn label_count(params: Params) -> u128 {
    let n = u64::from(params.modulus);
    let k = u64::from(params.level);
    binomial(k + n - 1, n - 1).expect("label count fits in u128 at any practical size")
}
