//! Cross-checks against a brute-force orbit counter that knows nothing about
//! standard forms, stabilizers or column multisets: it walks all of `Z_N^k`,
//! applies every permutation in `S_k` and keeps the lexicographically least
//! image of each triple.

use std::collections::{BTreeMap, HashSet};

use orbit_fusion::{
    enumerate_labels, enumerate_orbit, make_label, product, structure_constant, Method, OrbitLabel,
    Params,
};

fn all_tuples(n: u32, k: usize) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..n).map(move |v| {
                    let mut t = t.clone();
                    t.push(v);
                    t
                })
            })
            .collect();
    }
    out
}

fn all_permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in all_permutations(k - 1) {
        for slot in 0..=p.len() {
            let mut q = p.clone();
            q.insert(slot, k - 1);
            out.push(q);
        }
    }
    out
}

fn counts(n: u32, t: &[u32]) -> Vec<u32> {
    let mut m = vec![0; n as usize];
    for &v in t {
        m[v as usize] += 1;
    }
    m
}

/// `c -> number of S_k-orbits on {(x, y, x + y) : x in [a], y in [b], x + y in [c]}`.
fn brute_force(n: u32, k: u32, a: &[u32], b: &[u32]) -> BTreeMap<Vec<u32>, u64> {
    let tuples = all_tuples(n, k as usize);
    let xs: Vec<&Vec<u32>> = tuples.iter().filter(|t| counts(n, t) == a).collect();
    let ys: Vec<&Vec<u32>> = tuples.iter().filter(|t| counts(n, t) == b).collect();
    let perms = all_permutations(k as usize);

    let mut seen = HashSet::new();
    let mut out = BTreeMap::new();
    for x in &xs {
        for y in &ys {
            let z: Vec<u32> = x.iter().zip(y.iter()).map(|(p, q)| (p + q) % n).collect();
            let least = perms
                .iter()
                .map(|s| {
                    let act = |t: &[u32]| s.iter().map(|&i| t[i]).collect::<Vec<u32>>();
                    (act(x), act(y), act(&z))
                })
                .min()
                .unwrap();
            if seen.insert(least) {
                *out.entry(counts(n, &z)).or_insert(0) += 1;
            }
        }
    }
    out
}

fn as_map(e: &orbit_fusion::ProductExpansion) -> BTreeMap<Vec<u32>, u64> {
    e.iter().map(|(l, c)| (l.mults().to_vec(), c)).collect()
}

#[test]
fn every_method_matches_brute_force() {
    for n in 2..=3u32 {
        for k in 1..=4u32 {
            let params = Params::new(n, k).unwrap();
            let labels: Vec<OrbitLabel> = enumerate_labels(params).collect();
            for a in &labels {
                for b in &labels {
                    let expected = brute_force(n, k, a.mults(), b.mults());
                    for m in Method::ALL {
                        let got = as_map(&product(a, b, m).unwrap());
                        assert_eq!(got, expected, "N={n} k={k} a={a} b={b} method={m}");
                    }
                }
            }
        }
    }
}

#[test]
fn worked_example_n3_k3() {
    // Frozen from brute_force: the stabilizer of (2,1,0) is trivial, so all
    // six equations survive.
    let expected: BTreeMap<Vec<u32>, u64> = [
        (vec![1, 1, 1], 3),
        (vec![0, 3, 0], 1),
        (vec![3, 0, 0], 1),
        (vec![0, 0, 3], 1),
    ]
    .into_iter()
    .collect();
    assert_eq!(brute_force(3, 3, &[1, 1, 1], &[1, 1, 1]), expected);

    let params = Params::new(3, 3).unwrap();
    let a = make_label(params, vec![1, 1, 1]).unwrap();
    for m in Method::ALL {
        assert_eq!(as_map(&product(&a, &a, m).unwrap()), expected, "{m}");
        assert_eq!(structure_constant(&a, &a, &a, m).unwrap(), 3);
    }
}

#[test]
fn worked_example_n2_k2() {
    let expected: BTreeMap<Vec<u32>, u64> =
        [(vec![2, 0], 1), (vec![0, 2], 1)].into_iter().collect();
    assert_eq!(brute_force(2, 2, &[1, 1], &[1, 1]), expected);
    let params = Params::new(2, 2).unwrap();
    let a = make_label(params, vec![1, 1]).unwrap();
    let c = make_label(params, vec![0, 2]).unwrap();
    for m in Method::ALL {
        assert_eq!(structure_constant(&a, &a, &c, m).unwrap(), 1);
    }
}

#[test]
fn orbit_enumeration_matches_filter() {
    for n in 2..=3u32 {
        for k in 1..=4u32 {
            let params = Params::new(n, k).unwrap();
            let tuples = all_tuples(n, k as usize);
            for l in enumerate_labels(params) {
                let mut expected: Vec<Vec<u32>> = tuples
                    .iter()
                    .filter(|t| counts(n, t) == l.mults())
                    .cloned()
                    .collect();
                expected.sort_by(|p, q| q.cmp(p));
                let got: Vec<Vec<u32>> = enumerate_orbit(&l)
                    .unwrap()
                    .map(|t| t.into_entries())
                    .collect();
                assert_eq!(got, expected);
            }
        }
    }
}
