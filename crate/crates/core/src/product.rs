//! The orbit product `[a] x [b] = sum_c M_{[a],[b]}^{[c]} [c]`.
//!
//! `M_{[a],[b]}^{[c]}` counts the `S_k`-orbits of the triple set
//! `{(x, y, z) in [a] x [b] x [c] : x + y = z}`. Three algorithms compute it:
//!
//! * [`Method::Definition`] walks every pair `(x, y)` and dedups triples by
//!   their column multiset.
//! * [`Method::List`] fixes `x` at the standard form and dedups `y` under the
//!   stabilizer of that standard form.
//! * [`Method::Blockwise`] never builds tuples; it counts contingency tables
//!   between the stabilizer blocks and the residues of `[b]`.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Result;
use crate::orbit::{
    count_residues, enumerate_orbit_capped, standard_form, OrbitLabel, Params, DEFAULT_ENUM_CAP,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Definition,
    List,
    Blockwise,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Definition, Method::List, Method::Blockwise];

    pub fn name(&self) -> &'static str {
        match self {
            Method::Definition => "definition",
            Method::List => "list",
            Method::Blockwise => "blockwise",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "definition" => Ok(Method::Definition),
            "list" => Ok(Method::List),
            "blockwise" => Ok(Method::Blockwise),
            other => Err(format!(
                "unknown method {other:?} (expected definition, list or blockwise)"
            )),
        }
    }
}

/// Nonzero structure constants of one product, keyed by the result orbit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductExpansion {
    params: Params,
    coefficients: BTreeMap<OrbitLabel, u64>,
}

impl ProductExpansion {
    fn new(params: Params) -> Self {
        ProductExpansion {
            params,
            coefficients: BTreeMap::new(),
        }
    }

    fn bump(&mut self, label: OrbitLabel, by: u64) {
        *self.coefficients.entry(label).or_insert(0) += by;
    }

    pub fn params(&self) -> Params {
        self.params
    }

    /// The coefficient of `c`, zero when absent.
    pub fn coefficient(&self, c: &OrbitLabel) -> u64 {
        self.coefficients.get(c).copied().unwrap_or(0)
    }

    pub fn coefficients(&self) -> &BTreeMap<OrbitLabel, u64> {
        &self.coefficients
    }

    pub fn iter(&self) -> impl Iterator<Item = (&OrbitLabel, u64)> {
        self.coefficients.iter().map(|(l, &c)| (l, c))
    }

    /// Sum of all coefficients: the number of non-redundant equations.
    pub fn total(&self) -> u64 {
        self.coefficients.values().sum()
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }
}

impl fmt::Display for ProductExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficients.is_empty() {
            return f.write_str("0");
        }
        for (i, (label, coeff)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{coeff}[{label}]")?;
        }
        Ok(())
    }
}

pub fn product(a: &OrbitLabel, b: &OrbitLabel, method: Method) -> Result<ProductExpansion> {
    product_capped(a, b, method, DEFAULT_ENUM_CAP)
}

/// Like [`product`] with an explicit cap on orbit enumeration. The cap has
/// no effect on [`Method::Blockwise`].
pub fn product_capped(
    a: &OrbitLabel,
    b: &OrbitLabel,
    method: Method,
    cap: u128,
) -> Result<ProductExpansion> {
    a.params().ensure_same(&b.params())?;
    match method {
        Method::Definition => by_definition(a, b, cap),
        Method::List => by_list(a, b, cap),
        Method::Blockwise => Ok(by_blocks(a, b)),
    }
}

pub fn structure_constant(
    a: &OrbitLabel,
    b: &OrbitLabel,
    c: &OrbitLabel,
    method: Method,
) -> Result<u64> {
    a.params().ensure_same(&c.params())?;
    Ok(product(a, b, method)?.coefficient(c))
}

/// `[a] -> [a, 0]`: the same tuple with one more zero, at level `k + 1`.
pub fn append_zero(label: &OrbitLabel) -> OrbitLabel {
    let mut mults = label.mults().to_vec();
    mults[0] += 1;
    OrbitLabel::from_mults_unchecked(mults)
}

fn by_definition(a: &OrbitLabel, b: &OrbitLabel, cap: u128) -> Result<ProductExpansion> {
    let params = a.params();
    let n = params.modulus();
    let ys: Vec<Vec<u32>> = enumerate_orbit_capped(b, cap)?
        .map(|t| t.into_entries())
        .collect();

    // A triple's S_k-orbit is its multiset of columns (x_i, y_i, z_i); z is
    // determined by (x_i, y_i) so each column packs into x * N + y.
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut out = ProductExpansion::new(params);
    let mut z = vec![0u32; params.level() as usize];
    for x in enumerate_orbit_capped(a, cap)? {
        let x = x.entries();
        for y in &ys {
            let mut columns: Vec<u32> = x.iter().zip(y).map(|(&xi, &yi)| xi * n + yi).collect();
            columns.sort_unstable();
            if seen.insert(columns) {
                for (zi, (&xi, &yi)) in z.iter_mut().zip(x.iter().zip(y)) {
                    *zi = (xi + yi) % n;
                }
                out.bump(count_residues(n, &z), 1);
            }
        }
    }
    Ok(out)
}

fn by_list(a: &OrbitLabel, b: &OrbitLabel, cap: u128) -> Result<ProductExpansion> {
    let params = a.params();
    let n = params.modulus();
    let a_hat = standard_form(a).into_entries();
    let blocks = constant_blocks(&a_hat);

    // The stabilizer of a_hat is the product of the symmetric groups on its
    // constant blocks, so sorting y inside each block picks one
    // representative per non-redundant equation.
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut out = ProductExpansion::new(params);
    for y in enumerate_orbit_capped(b, cap)? {
        let mut canonical = y.into_entries();
        for range in &blocks {
            canonical[range.clone()].sort_unstable_by(|p, q| q.cmp(p));
        }
        if seen.contains(&canonical) {
            continue;
        }
        let z: Vec<u32> = a_hat
            .iter()
            .zip(&canonical)
            .map(|(&ai, &yi)| (ai + yi) % n)
            .collect();
        out.bump(count_residues(n, &z), 1);
        seen.insert(canonical);
    }
    Ok(out)
}

fn constant_blocks(values: &[u32]) -> Vec<std::ops::Range<usize>> {
    let mut blocks = Vec::new();
    let mut start = 0;
    for i in 1..=values.len() {
        if i == values.len() || values[i] != values[start] {
            blocks.push(start..i);
            start = i;
        }
    }
    blocks
}

/// Counts tables `t[v][r]` (rows: residues `v` with `a_v > 0`, columns:
/// residues `r`) with row sums `a_v` and column sums `b_r`. Each table is one
/// stabilizer orbit of `[b]`; its `z` has `t[v][r]` entries equal to `v + r`.
fn by_blocks(a: &OrbitLabel, b: &OrbitLabel) -> ProductExpansion {
    let params = a.params();
    let n = params.modulus() as usize;
    let rows: Vec<(usize, u32)> = a
        .mults()
        .iter()
        .enumerate()
        .filter(|&(_, &m)| m > 0)
        .map(|(v, &m)| (v, m))
        .collect();

    let mut walk = BlockWalk {
        n,
        rows: &rows,
        remaining: b.mults().to_vec(),
        z: vec![0; n],
        out: ProductExpansion::new(params),
    };
    walk.fill_row(0);
    walk.out
}

struct BlockWalk<'a> {
    n: usize,
    rows: &'a [(usize, u32)],
    // Column capacity still unassigned.
    remaining: Vec<u32>,
    z: Vec<u32>,
    out: ProductExpansion,
}

impl BlockWalk<'_> {
    fn fill_row(&mut self, row: usize) {
        if row == self.rows.len() {
            self.out
                .bump(OrbitLabel::from_mults_unchecked(self.z.clone()), 1);
            return;
        }
        let (_, size) = self.rows[row];
        if row + 1 == self.rows.len() {
            // Row sums and column sums both total k, so the last row is forced.
            debug_assert_eq!(self.remaining.iter().sum::<u32>(), size);
            let rest = self.remaining.clone();
            self.place_forced(row, &rest);
            self.fill_row(row + 1);
            self.unplace_forced(row, &rest);
            return;
        }
        let suffix = self.suffix_capacity();
        self.fill_cell(row, 0, size, &suffix);
    }

    fn suffix_capacity(&self) -> Vec<u32> {
        let mut suffix = vec![0; self.n + 1];
        for r in (0..self.n).rev() {
            suffix[r] = suffix[r + 1] + self.remaining[r];
        }
        suffix
    }

    fn fill_cell(&mut self, row: usize, col: usize, left: u32, suffix: &[u32]) {
        if left == 0 {
            self.fill_row(row + 1);
            return;
        }
        if col == self.n {
            return;
        }
        let (v, _) = self.rows[row];
        let zi = (v + col) % self.n;
        // Leave enough room in later columns for what is still unplaced.
        let lo = left.saturating_sub(suffix[col + 1]);
        let hi = left.min(self.remaining[col]);
        for take in lo..=hi {
            self.remaining[col] -= take;
            self.z[zi] += take;
            self.fill_cell(row, col + 1, left - take, suffix);
            self.z[zi] -= take;
            self.remaining[col] += take;
        }
    }

    fn place_forced(&mut self, row: usize, counts: &[u32]) {
        let (v, _) = self.rows[row];
        for (col, &c) in counts.iter().enumerate() {
            self.z[(v + col) % self.n] += c;
            self.remaining[col] -= c;
        }
    }

    fn unplace_forced(&mut self, row: usize, counts: &[u32]) {
        let (v, _) = self.rows[row];
        for (col, &c) in counts.iter().enumerate() {
            self.z[(v + col) % self.n] -= c;
            self.remaining[col] += c;
        }
    }
}
