//! Brute-force oracles, written independently of the library's search and
//! validation code, checked against the library.

#![allow(clippy::needless_range_loop)]

use std::collections::BTreeSet;

use effalg_core::algebra::builtin;
use effalg_core::enumerate::{enumerate_geas, Mode};
use effalg_core::unitize;
use effalg_core::{Elem, FiniteGea};

type Table = Vec<Vec<Option<usize>>>;

/// Direct transcription of (P1)-(P5) over a dense table with zero at 0.
fn naive_is_gea(t: &Table) -> bool {
    let n = t.len();
    for a in 0..n {
        for b in 0..n {
            if t[a][b] != t[b][a] {
                return false;
            }
        }
        if t[a][0] != Some(a) {
            return false;
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if let Some(bc) = t[b][c] {
                    if let Some(a_bc) = t[a][bc] {
                        match t[a][b].and_then(|ab| t[ab][c]) {
                            Some(x) if x == a_bc => {}
                            _ => return false,
                        }
                    }
                }
                if b != c && t[a][b].is_some() && t[a][b] == t[a][c] {
                    return false;
                }
            }
            if t[a][b] == Some(0) && a != 0 {
                return false;
            }
        }
    }
    true
}

/// Every partial table on `n` elements with the zero row forced, filtered
/// by [`naive_is_gea`].
fn naive_geas(n: usize) -> BTreeSet<Table> {
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let options = n + 1;
    let total = options.pow(pairs.len() as u32);
    let mut out = BTreeSet::new();
    for code in 0..total {
        let mut t: Table = vec![vec![None; n]; n];
        for x in 0..n {
            t[0][x] = Some(x);
            t[x][0] = Some(x);
        }
        let mut rest = code;
        for &(i, j) in &pairs {
            let v = rest % options;
            rest /= options;
            let cell = if v == n { None } else { Some(v) };
            t[i][j] = cell;
            t[j][i] = cell;
        }
        if naive_is_gea(&t) {
            out.insert(t);
        }
    }
    out
}

fn dense(g: &FiniteGea) -> Table {
    let n = g.len();
    (0..n)
        .map(|a| {
            (0..n)
                .map(|b| g.sum(Elem(a), Elem(b)).map(Elem::index))
                .collect()
        })
        .collect()
}

#[test]
fn enumerator_matches_naive_filter() {
    for n in 1..=4 {
        let oracle = naive_geas(n);
        let search: Vec<Table> = enumerate_geas(n, Mode::Labeled)
            .unwrap()
            .iter()
            .map(dense)
            .collect();
        let as_set: BTreeSet<Table> = search.iter().cloned().collect();
        assert_eq!(as_set.len(), search.len(), "duplicates at n = {n}");
        assert_eq!(as_set, oracle, "n = {n}");
    }
    assert_eq!(naive_geas(1).len(), 1);
    assert_eq!(naive_geas(2).len(), 1);
    assert_eq!(naive_geas(3).len(), 3);
}

#[test]
fn naive_filter_agrees_with_validate() {
    // Every candidate table at n = 3: the library's validator and the
    // transcription above must classify identically.
    let n: usize = 3;
    let options = n + 1;
    let pairs = [(1, 1), (1, 2), (2, 2)];
    for code in 0..options.pow(3) {
        let mut sums = Vec::new();
        let mut rest = code;
        for &(i, j) in &pairs {
            let v = rest % options;
            rest /= options;
            if v < n {
                sums.push((Elem(i), Elem(j), Elem(v)));
            }
        }
        let names = vec!["0".to_string(), "a".to_string(), "b".to_string()];
        let Ok(g) = FiniteGea::from_sums(names, Elem(0), &sums) else {
            continue;
        };
        assert_eq!(g.validate().is_valid(), naive_is_gea(&dense(&g)), "{g:?}");
    }
}

/// Labeled counts for n >= 4 have no external source; these were produced
/// by the enumerator and cross-checked against the naive filter at n = 4.
#[test]
fn labeled_counts_regression() {
    let counts: Vec<usize> = (1..=5)
        .map(|n| enumerate_geas(n, Mode::Labeled).unwrap().len())
        .collect();
    assert_eq!(counts, vec![1, 1, 3, 19, 173]);
    let iso: Vec<usize> = (1..=5)
        .map(|n| enumerate_geas(n, Mode::UpToIsomorphism).unwrap().len())
        .collect();
    assert_eq!(iso, vec![1, 1, 2, 5, 12]);
}

/// Reflexive-transitive closure of `a -> a + c` by Warshall's algorithm.
fn closure_order(g: &FiniteGea) -> Vec<Vec<bool>> {
    let n = g.len();
    let mut r = vec![vec![false; n]; n];
    for a in 0..n {
        r[a][a] = true;
        for c in 0..n {
            if let Some(b) = g.sum(Elem(a), Elem(c)) {
                r[a][b.0] = true;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if r[i][k] && r[k][j] {
                    r[i][j] = true;
                }
            }
        }
    }
    r
}

#[test]
fn derived_order_matches_closure_oracle() {
    let mut algebras = vec![builtin::fig1(), builtin::fig1_unitized().base().clone()];
    algebras.extend(enumerate_geas(4, Mode::Labeled).unwrap());
    for g in algebras {
        let order = g.derive_order();
        let oracle = closure_order(&g);
        for a in g.elements() {
            for b in g.elements() {
                assert_eq!(order.leq(a, b), oracle[a.0][b.0], "{g:?}: {a} <= {b}");
            }
        }
    }
}

/// Covering pairs of the unitization of the five-element `fig1` algebra, derived by
/// hand from the four sum rules: the unstarred part is P, the starred part
/// is P turned upside down, and `x < y*` exactly when `x ⊥ y`.
const FIG1_UNITIZED_COVERS: &[(&str, &str)] = &[
    ("0", "a"),
    ("0", "b"),
    ("0", "c*"),
    ("0", "d*"),
    ("a", "c"),
    ("a", "b*"),
    ("b", "c"),
    ("b", "d"),
    ("b", "a*"),
    ("b", "b*"),
    ("c", "0*"),
    ("d", "0*"),
    ("a*", "0*"),
    ("b*", "0*"),
    ("c*", "a*"),
    ("c*", "b*"),
    ("d*", "b*"),
];

#[test]
fn fig1_unitized_hasse_golden() {
    let fp = unitize(&builtin::fig1()).unwrap();
    let covers: BTreeSet<(String, String)> = fp
        .derive_order()
        .covers()
        .into_iter()
        .map(|(a, b)| (fp.name(a).to_string(), fp.name(b).to_string()))
        .collect();
    let golden: BTreeSet<(String, String)> = FIG1_UNITIZED_COVERS
        .iter()
        .map(|&(a, b)| (a.to_string(), b.to_string()))
        .collect();
    assert_eq!(covers, golden);
}

/// Transitive reduction computed from the closure oracle.
fn reduction(order: &[Vec<bool>]) -> BTreeSet<(usize, usize)> {
    let n = order.len();
    let lt = |a: usize, b: usize| a != b && order[a][b];
    let mut out = BTreeSet::new();
    for a in 0..n {
        for b in 0..n {
            if lt(a, b) && !(0..n).any(|c| lt(a, c) && lt(c, b)) {
                out.insert((a, b));
            }
        }
    }
    out
}

#[test]
fn covers_match_reduction_oracle() {
    for n in 1..=4 {
        for g in enumerate_geas(n, Mode::Labeled).unwrap() {
            let fp = unitize(&g).unwrap();
            let lib: BTreeSet<(usize, usize)> = fp
                .derive_order()
                .covers()
                .into_iter()
                .map(|(a, b)| (a.0, b.0))
                .collect();
            assert_eq!(lib, reduction(&closure_order(fp.base())));
        }
    }
}
