//! Exhaustive generation of small generalized effect algebras and effect
//! algebras, plus an isomorphism test.
//!
//! Labeled algebras live on `{0, a, b, ...}` with element `0` as zero. The
//! search assigns the sums of nonzero pairs in row-major order. Cancellation
//! and positivity are enforced as each entry is set, and every associativity
//! instance is checked as soon as all of the table entries it mentions have
//! been decided.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{Algebra, Elem, FiniteEa, FiniteGea, SumTable};
use crate::error::Error;

/// Largest carrier size accepted by the enumerators.
pub const MAX_SIZE: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Labeled,
    UpToIsomorphism,
}

/// Display names used for enumerated carriers.
pub fn element_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| {
            if i == 0 {
                String::from("0")
            } else {
                String::from(char::from(b'a' + (i as u8 - 1)))
            }
        })
        .collect()
}

struct Search {
    n: usize,
    pairs: Vec<(usize, usize)>,
    /// Position of the pair `{x, y}` in `pairs`, for nonzero `x`, `y`.
    position: Vec<usize>,
    table: SumTable,
}

impl Search {
    fn new(n: usize) -> Self {
        let mut pairs = Vec::new();
        let mut position = vec![usize::MAX; n * n];
        for i in 1..n {
            for j in i..n {
                position[i * n + j] = pairs.len();
                position[j * n + i] = pairs.len();
                pairs.push((i, j));
            }
        }
        let mut table = SumTable::new(n);
        for x in 0..n {
            table
                .insert(Elem(0), Elem(x), Elem(x))
                .expect("fresh table");
        }
        Search {
            n,
            pairs,
            position,
            table,
        }
    }

    fn decided(&self, x: Elem, y: Elem, upto: usize) -> bool {
        x.0 == 0 || y.0 == 0 || self.position[x.0 * self.n + y.0] <= upto
    }

    /// Cancellation against the rows of `i` and `j` after setting
    /// `i + j = c`.
    fn cancellative(&self, i: usize, j: usize, c: usize) -> bool {
        let c = Some(Elem(c));
        (0..self.n).all(|k| k == j || self.table.get(Elem(i), Elem(k)) != c)
            && (0..self.n).all(|k| k == i || self.table.get(Elem(j), Elem(k)) != c)
    }

    /// Associativity restricted to instances whose entries are decided.
    fn associative_so_far(&self, upto: usize) -> bool {
        let t = &self.table;
        let all = (0..self.n).map(Elem);
        for a in all.clone() {
            for b in all.clone() {
                for c in all.clone() {
                    if !self.decided(b, c, upto) {
                        continue;
                    }
                    let Some(bc) = t.get(b, c) else { continue };
                    if !self.decided(a, bc, upto) {
                        continue;
                    }
                    let Some(a_bc) = t.get(a, bc) else { continue };
                    if !self.decided(a, b, upto) {
                        continue;
                    }
                    let Some(ab) = t.get(a, b) else { return false };
                    if !self.decided(ab, c, upto) {
                        continue;
                    }
                    if t.get(ab, c) != Some(a_bc) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn run(&mut self, k: usize, emit: &mut dyn FnMut(&SumTable)) {
        if k == self.pairs.len() {
            emit(&self.table);
            return;
        }
        let (i, j) = self.pairs[k];
        if self.associative_so_far(k) {
            self.run(k + 1, emit);
        }
        for c in 1..self.n {
            if c == i || c == j || !self.cancellative(i, j, c) {
                continue;
            }
            self.table
                .insert(Elem(i), Elem(j), Elem(c))
                .expect("pair is unset");
            if self.associative_so_far(k) {
                self.run(k + 1, emit);
            }
            self.table.clear(Elem(i), Elem(j));
        }
    }
}

/// Encoding of the nonzero part of a table under a relabeling of the
/// nonzero elements; `perm[0]` must be `0`.
fn code_under(g: &FiniteGea, perm: &[usize]) -> Vec<u8> {
    let n = g.len();
    let mut cells = vec![0u8; n * n];
    for (a, b, c) in g.table().entries() {
        let (x, y) = (perm[a.0], perm[b.0]);
        let v = perm[c.0] as u8 + 1;
        cells[x * n + y] = v;
        cells[y * n + x] = v;
    }
    let mut code = Vec::with_capacity(n * (n - 1) / 2);
    for i in 1..n {
        for j in i..n {
            code.push(cells[i * n + j]);
        }
    }
    code
}

fn next_permutation(xs: &mut [usize]) -> bool {
    let Some(i) = xs.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = xs.iter().rposition(|&x| x > xs[i]).expect("exists");
    xs.swap(i, j);
    xs[i + 1..].reverse();
    true
}

/// Least encoding of the table over all relabelings fixing `0`. Two
/// algebras with zero at index 0 are isomorphic iff their codes agree.
pub fn canonical_code(g: &FiniteGea) -> Vec<u8> {
    assert_eq!(g.zero(), Elem(0), "canonical codes need zero at index 0");
    let n = g.len();
    let mut rest: Vec<usize> = (1..n).collect();
    let mut perm = vec![0; n];
    let mut best: Option<Vec<u8>> = None;
    loop {
        perm[1..].copy_from_slice(&rest);
        let code = code_under(g, &perm);
        if best.as_ref().is_none_or(|b| code < *b) {
            best = Some(code);
        }
        if !next_permutation(&mut rest) {
            break;
        }
    }
    best.expect("at least one permutation")
}

/// All generalized effect algebras on `n` elements, labeled or one per
/// isomorphism class.
pub fn enumerate_geas(n: usize, mode: Mode) -> Result<Vec<FiniteGea>, Error> {
    if n == 0 {
        return Err(Error::EmptyCarrier);
    }
    if n > MAX_SIZE {
        return Err(Error::SizeLimit {
            limit: MAX_SIZE,
            got: n,
        });
    }
    let names = element_names(n);
    let mut out = Vec::new();
    let mut search = Search::new(n);
    search.run(0, &mut |table| {
        let g =
            FiniteGea::from_table(names.clone(), Elem(0), table.clone()).expect("generated names");
        if !g.validate().is_valid() {
            return;
        }
        if mode == Mode::UpToIsomorphism {
            let identity: Vec<usize> = (0..n).collect();
            if code_under(&g, &identity) != canonical_code(&g) {
                return;
            }
        }
        out.push(g);
    });
    Ok(out)
}

/// The bounded members of [`enumerate_geas`], with their maximum as top.
pub fn enumerate_eas(n: usize, mode: Mode) -> Result<Vec<FiniteEa>, Error> {
    Ok(enumerate_geas(n, mode)?
        .into_iter()
        .filter_map(|g| FiniteEa::from_gea(g).ok())
        .collect())
}

/// Whether a bijection preserving and reflecting orthogonality and sums
/// exists (for effect algebras, also sending top to top).
pub fn is_isomorphic(a: &Algebra, b: &Algebra) -> bool {
    if a.is_ea() != b.is_ea() || a.len() != b.len() {
        return false;
    }
    let (ga, gb) = (a.as_gea(), b.as_gea());
    let n = ga.len();
    let degree = |g: &FiniteGea, x: Elem| g.elements().filter(|&y| g.orthogonal(x, y)).count();
    let mut degrees_a: Vec<usize> = ga.elements().map(|x| degree(ga, x)).collect();
    let mut degrees_b: Vec<usize> = gb.elements().map(|x| degree(gb, x)).collect();
    let (da, db) = (degrees_a.clone(), degrees_b.clone());
    degrees_a.sort_unstable();
    degrees_b.sort_unstable();
    if degrees_a != degrees_b {
        return false;
    }
    let mut fixed: Vec<Option<Elem>> = vec![None; n];
    fixed[ga.zero().0] = Some(gb.zero());
    if let (Some(ta), Some(tb)) = (a.top(), b.top()) {
        match fixed[ta.0] {
            Some(z) if z != tb => return false,
            _ => fixed[ta.0] = Some(tb),
        }
    }

    struct Ctx<'a> {
        ga: &'a FiniteGea,
        gb: &'a FiniteGea,
        da: Vec<usize>,
        db: Vec<usize>,
        fixed: Vec<Option<Elem>>,
    }

    fn consistent(ctx: &Ctx<'_>, map: &[Option<Elem>], i: usize) -> bool {
        let x = Elem(i);
        let fx = map[i].expect("assigned");
        (0..=i).all(|j| {
            let y = Elem(j);
            let fy = map[j].expect("assigned");
            match (ctx.ga.sum(x, y), ctx.gb.sum(fx, fy)) {
                (None, None) => true,
                (Some(z), Some(w)) => map[z.0].is_none_or(|fz| fz == w),
                _ => false,
            }
        })
    }

    fn go(ctx: &Ctx<'_>, i: usize, map: &mut Vec<Option<Elem>>, used: &mut Vec<bool>) -> bool {
        let n = map.len();
        if i == n {
            // Every sum target is assigned now; recheck them all.
            return (0..n).all(|k| consistent(ctx, map, k));
        }
        let candidates: Vec<Elem> = match ctx.fixed[i] {
            Some(e) => vec![e],
            None => ctx.gb.elements().collect(),
        };
        for img in candidates {
            if used[img.0] || ctx.da[i] != ctx.db[img.0] {
                continue;
            }
            if ctx.fixed[i].is_none() && ctx.fixed.contains(&Some(img)) {
                continue;
            }
            map[i] = Some(img);
            used[img.0] = true;
            if consistent(ctx, map, i) && go(ctx, i + 1, map, used) {
                return true;
            }
            used[img.0] = false;
            map[i] = None;
        }
        false
    }

    let ctx = Ctx {
        ga,
        gb,
        da,
        db,
        fixed,
    };
    let mut map = vec![None; n];
    let mut used = vec![false; n];
    go(&ctx, 0, &mut map, &mut used)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::builtin::*;
    use crate::unitization::unitize;

    #[test]
    fn small_labeled_counts() {
        assert_eq!(enumerate_geas(1, Mode::Labeled).unwrap().len(), 1);
        assert_eq!(enumerate_geas(2, Mode::Labeled).unwrap().len(), 1);
        assert_eq!(enumerate_geas(3, Mode::Labeled).unwrap().len(), 3);
        assert_eq!(enumerate_geas(3, Mode::UpToIsomorphism).unwrap().len(), 2);
    }

    #[test]
    fn guards() {
        assert_eq!(
            enumerate_geas(0, Mode::Labeled).unwrap_err(),
            Error::EmptyCarrier
        );
        assert_eq!(
            enumerate_geas(7, Mode::Labeled).unwrap_err(),
            Error::SizeLimit {
                limit: MAX_SIZE,
                got: 7
            }
        );
    }

    #[test]
    fn small_ea_counts() {
        assert_eq!(enumerate_eas(1, Mode::Labeled).unwrap().len(), 1);
        assert_eq!(enumerate_eas(2, Mode::Labeled).unwrap().len(), 1);
        let four = enumerate_eas(4, Mode::UpToIsomorphism).unwrap();
        let b2: Algebra = two_squared().into();
        let c3: Algebra = chain(3).unwrap().into();
        assert!(four.iter().any(|e| is_isomorphic(&e.clone().into(), &b2)));
        assert!(four.iter().any(|e| is_isomorphic(&e.clone().into(), &c3)));
    }

    #[test]
    fn isomorphism_examples() {
        let p = fig1();
        let shuffled = FiniteGea::from_named(
            &["d", "x", "0", "y", "z"],
            "0",
            &[("y", "d", "x"), ("d", "d", "z")],
        )
        .unwrap();
        assert!(is_isomorphic(&p.clone().into(), &shuffled.into()));
        let b2: Algebra = two_squared().into();
        let c3: Algebra = chain(3).unwrap().into();
        assert!(!is_isomorphic(&b2, &c3));
        let f2: Algebra = unitize(&two_chain_gea()).unwrap().into();
        assert!(is_isomorphic(&f2, &b2));
        assert!(!is_isomorphic(&p.into(), &b2.forget()));
    }

    #[test]
    fn permutations_cover_all_orders() {
        let mut xs = vec![1, 2, 3, 4];
        let mut count = 1;
        while next_permutation(&mut xs) {
            count += 1;
        }
        assert_eq!(count, 24);
        assert_eq!(xs, vec![4, 3, 2, 1]);
    }
}
