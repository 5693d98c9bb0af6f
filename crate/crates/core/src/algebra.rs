//! Finite partial algebras `(P; +, 0)` and `(E; +, 0, 1)`.
//!
//! A [`FiniteGea`] is a carrier of named elements together with a symmetric
//! partial sum table. Construction only enforces structural well-formedness
//! (names, symmetry, the forced zero sums); the generalized effect algebra
//! axioms are checked by [`FiniteGea::validate`].

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::report::{Law, Report};

/// Index of an element within one carrier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(pub usize);

impl Elem {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Symmetric partial Cayley table. `get(a, b) == get(b, a)` always holds.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SumTable {
    n: usize,
    cells: Vec<Option<Elem>>,
}

impl SumTable {
    pub fn new(n: usize) -> Self {
        SumTable {
            n,
            cells: vec![None; n * n],
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn get(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.cells[a.0 * self.n + b.0]
    }

    /// Sets `a + b = c` in both orientations. Returns the previous, different
    /// value if the pair was already defined.
    pub fn insert(&mut self, a: Elem, b: Elem, c: Elem) -> Result<(), Elem> {
        match self.get(a, b) {
            Some(old) if old != c => Err(old),
            _ => {
                self.cells[a.0 * self.n + b.0] = Some(c);
                self.cells[b.0 * self.n + a.0] = Some(c);
                Ok(())
            }
        }
    }

    pub fn clear(&mut self, a: Elem, b: Elem) {
        self.cells[a.0 * self.n + b.0] = None;
        self.cells[b.0 * self.n + a.0] = None;
    }

    /// Defined sums `(a, b, a + b)` with `a <= b` by index.
    pub fn entries(&self) -> impl Iterator<Item = (Elem, Elem, Elem)> + '_ {
        (0..self.n).flat_map(move |a| {
            (a..self.n)
                .filter_map(move |b| self.get(Elem(a), Elem(b)).map(|c| (Elem(a), Elem(b), c)))
        })
    }
}

#[derive(Debug, PartialEq, Eq, Hash)]
struct GeaData {
    names: Vec<String>,
    zero: Elem,
    table: SumTable,
}

/// A finite partial algebra with a zero and a symmetric partial sum.
///
/// Cloning is cheap; the data is shared and immutable.
#[derive(Clone)]
pub struct FiniteGea {
    inner: Arc<GeaData>,
}

impl PartialEq for FiniteGea {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner == other.inner
    }
}

impl Eq for FiniteGea {}

impl fmt::Debug for FiniteGea {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut list = f.debug_list();
        for (a, b, c) in self.table().entries() {
            if a != self.zero() && b != self.zero() {
                list.entry(&format_args!(
                    "{} + {} = {}",
                    self.name(a),
                    self.name(b),
                    self.name(c)
                ));
            }
        }
        list.finish()
    }
}

fn check_names(names: &[String]) -> Result<(), Error> {
    if names.is_empty() {
        return Err(Error::EmptyCarrier);
    }
    for (i, name) in names.iter().enumerate() {
        if name.is_empty() {
            return Err(Error::EmptyName { index: i });
        }
        if names[..i].contains(name) {
            return Err(Error::DuplicateName(name.clone()));
        }
    }
    Ok(())
}

impl FiniteGea {
    /// Builds an algebra from a list of sums `a + b = c`.
    ///
    /// The sums `0 + x = x` are inserted for every `x` and every sum is
    /// stored in both orientations. A listed sum that contradicts either
    /// rule is a structural error.
    pub fn from_sums(
        names: Vec<String>,
        zero: Elem,
        sums: &[(Elem, Elem, Elem)],
    ) -> Result<Self, Error> {
        check_names(&names)?;
        let n = names.len();
        let in_range = |e: Elem| {
            if e.0 < n {
                Ok(())
            } else {
                Err(Error::ElementOutOfRange { index: e.0, len: n })
            }
        };
        in_range(zero)?;
        let mut table = SumTable::new(n);
        for x in 0..n {
            table.insert(zero, Elem(x), Elem(x)).expect("fresh table");
        }
        for &(a, b, c) in sums {
            in_range(a)?;
            in_range(b)?;
            in_range(c)?;
            if a == zero || b == zero {
                let other = if a == zero { b } else { a };
                if c != other {
                    return Err(Error::ZeroSumContradiction {
                        element: names[other.0].clone(),
                        result: names[c.0].clone(),
                    });
                }
            }
            table.insert(a, b, c).map_err(|old| Error::ConflictingSum {
                a: names[a.0].clone(),
                b: names[b.0].clone(),
                existing: names[old.0].clone(),
                new: names[c.0].clone(),
            })?;
        }
        Ok(Self::from_parts(names, zero, table))
    }

    /// Same as [`FiniteGea::from_sums`] with elements given by name.
    pub fn from_named(
        names: &[&str],
        zero: &str,
        sums: &[(&str, &str, &str)],
    ) -> Result<Self, Error> {
        let owned: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let lookup = |s: &str| {
            owned
                .iter()
                .position(|n| n == s)
                .map(Elem)
                .ok_or_else(|| Error::UnknownElement(s.to_string()))
        };
        let zero = lookup(zero)?;
        let sums = sums
            .iter()
            .map(|&(a, b, c)| Ok((lookup(a)?, lookup(b)?, lookup(c)?)))
            .collect::<Result<Vec<_>, Error>>()?;
        Self::from_sums(owned, zero, &sums)
    }

    /// Builds an algebra from a complete table without the loader closure.
    /// Used by constructions that produce the zero sums themselves.
    pub fn from_table(names: Vec<String>, zero: Elem, table: SumTable) -> Result<Self, Error> {
        check_names(&names)?;
        if table.len() != names.len() {
            return Err(Error::ElementOutOfRange {
                index: table.len(),
                len: names.len(),
            });
        }
        if zero.0 >= names.len() {
            return Err(Error::ElementOutOfRange {
                index: zero.0,
                len: names.len(),
            });
        }
        Ok(Self::from_parts(names, zero, table))
    }

    fn from_parts(names: Vec<String>, zero: Elem, table: SumTable) -> Self {
        FiniteGea {
            inner: Arc::new(GeaData { names, zero, table }),
        }
    }

    pub fn len(&self) -> usize {
        self.inner.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inner.names.is_empty()
    }

    pub fn zero(&self) -> Elem {
        self.inner.zero
    }

    pub fn names(&self) -> &[String] {
        &self.inner.names
    }

    pub fn name(&self, e: Elem) -> &str {
        &self.inner.names[e.0]
    }

    pub fn element(&self, name: &str) -> Option<Elem> {
        self.inner.names.iter().position(|n| n == name).map(Elem)
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.len()).map(Elem)
    }

    pub fn table(&self) -> &SumTable {
        &self.inner.table
    }

    #[inline]
    pub fn sum(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.inner.table.get(a, b)
    }

    #[inline]
    pub fn orthogonal(&self, a: Elem, b: Elem) -> bool {
        self.sum(a, b).is_some()
    }

    /// Renames every element. The table is kept as is.
    pub fn with_names(&self, names: Vec<String>) -> Result<Self, Error> {
        Self::from_table(names, self.zero(), self.table().clone())
    }

    fn names_of(&self, es: &[Elem]) -> Vec<String> {
        es.iter().map(|&e| self.name(e).to_string()).collect()
    }

    /// Checks (P2)-(P5). (P1) holds structurally.
    pub fn validate(&self) -> Report {
        let mut report = Report::new();
        let zero = self.zero();
        for a in self.elements() {
            for b in self.elements() {
                for c in self.elements() {
                    let Some(bc) = self.sum(b, c) else { continue };
                    let Some(a_bc) = self.sum(a, bc) else {
                        continue;
                    };
                    let ok = match self.sum(a, b) {
                        None => false,
                        Some(ab) => self.sum(ab, c) == Some(a_bc),
                    };
                    if !ok {
                        report.record(Law::Associativity, || self.names_of(&[a, b, c]));
                    }
                }
            }
        }
        for a in self.elements() {
            if self.sum(a, zero) != Some(a) {
                report.record(Law::ZeroSum, || self.names_of(&[a]));
            }
        }
        for a in self.elements() {
            for b in self.elements() {
                let Some(ab) = self.sum(a, b) else { continue };
                for c in (0..b.0).map(Elem) {
                    if self.sum(a, c) == Some(ab) {
                        report.record(Law::Cancellation, || self.names_of(&[a, b, c]));
                    }
                }
            }
        }
        for a in self.elements() {
            for b in self.elements() {
                if a != zero && self.sum(a, b) == Some(zero) {
                    report.record(Law::Positivity, || self.names_of(&[a, b]));
                }
            }
        }
        report
    }

    /// `a <= b` iff `a + c = b` for some `c`.
    pub fn derive_order(&self) -> OrderRelation {
        let n = self.len();
        let mut rel = OrderRelation {
            n,
            leq: vec![false; n * n],
        };
        for (a, c, b) in self.table().entries() {
            rel.leq[a.0 * n + b.0] = true;
            rel.leq[c.0 * n + b.0] = true;
        }
        rel
    }

    /// The unique `c` with `a = b + c`, if `b <= a`.
    pub fn ominus(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.elements().find(|&c| self.sum(b, c) == Some(a))
    }

    /// The greatest element of the derived order, if there is one.
    pub fn maximum(&self) -> Option<Elem> {
        let order = self.derive_order();
        self.elements()
            .find(|&t| self.elements().all(|x| order.leq(x, t)))
    }
}

/// The derived order as a dense boolean matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderRelation {
    n: usize,
    leq: Vec<bool>,
}

impl OrderRelation {
    /// Builds a relation from explicit pairs.
    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (Elem, Elem)>) -> Self {
        let mut leq = vec![false; n * n];
        for (a, b) in pairs {
            leq[a.0 * n + b.0] = true;
        }
        OrderRelation { n, leq }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.leq[a.0 * self.n + b.0]
    }

    pub fn lt(&self, a: Elem, b: Elem) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn pairs(&self) -> impl Iterator<Item = (Elem, Elem)> + '_ {
        (0..self.n)
            .flat_map(move |a| (0..self.n).map(move |b| (Elem(a), Elem(b))))
            .filter(move |&(a, b)| self.leq(a, b))
    }

    pub fn is_partial_order(&self) -> bool {
        let all = || (0..self.n).map(Elem);
        let reflexive = all().all(|a| self.leq(a, a));
        let antisymmetric =
            all().all(|a| all().all(|b| a == b || !(self.leq(a, b) && self.leq(b, a))));
        let transitive = all().all(|a| {
            all().all(|b| !self.leq(a, b) || all().all(|c| !self.leq(b, c) || self.leq(a, c)))
        });
        reflexive && antisymmetric && transitive
    }

    pub fn is_bottom(&self, e: Elem) -> bool {
        (0..self.n).all(|x| self.leq(e, Elem(x)))
    }

    pub fn is_top(&self, e: Elem) -> bool {
        (0..self.n).all(|x| self.leq(Elem(x), e))
    }

    /// Covering pairs `a < b` with nothing strictly between, ordered by
    /// `(a, b)` index.
    pub fn covers(&self) -> Vec<(Elem, Elem)> {
        let mut out = Vec::new();
        for a in (0..self.n).map(Elem) {
            for b in (0..self.n).map(Elem) {
                if self.lt(a, b)
                    && !(0..self.n)
                        .map(Elem)
                        .any(|c| self.lt(a, c) && self.lt(c, b))
                {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

/// A generalized effect algebra with a distinguished top.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteEa {
    base: FiniteGea,
    top: Elem,
}

impl fmt::Debug for FiniteEa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteEa")
            .field("top", &self.base.name(self.top))
            .field("sums", &self.base)
            .finish()
    }
}

impl core::ops::Deref for FiniteEa {
    type Target = FiniteGea;

    fn deref(&self) -> &FiniteGea {
        &self.base
    }
}

impl FiniteEa {
    pub fn new(base: FiniteGea, top: Elem) -> Result<Self, Error> {
        if top.0 >= base.len() {
            return Err(Error::ElementOutOfRange {
                index: top.0,
                len: base.len(),
            });
        }
        Ok(FiniteEa { base, top })
    }

    /// Uses the maximum of the derived order as top.
    pub fn from_gea(base: FiniteGea) -> Result<Self, Error> {
        let top = base.maximum().ok_or(Error::NotBounded)?;
        Ok(FiniteEa { base, top })
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    pub fn base(&self) -> &FiniteGea {
        &self.base
    }

    pub fn into_base(self) -> FiniteGea {
        self.base
    }

    /// Looks an element up by name; `1` is accepted as an alias for the top
    /// when no element carries that name.
    pub fn element(&self, name: &str) -> Option<Elem> {
        self.base
            .element(name)
            .or_else(|| (name == "1").then_some(self.top))
    }

    /// The complement `a'`, the element with `a + a' = 1`.
    pub fn complement(&self, a: Elem) -> Option<Elem> {
        self.elements().find(|&b| self.sum(a, b) == Some(self.top))
    }

    /// Checks the base axioms, that `top` is the greatest element, and that
    /// every element has exactly one complement.
    pub fn validate(&self) -> Report {
        let mut report = self.base.validate();
        let order = self.base.derive_order();
        for a in self.elements() {
            if !order.leq(a, self.top) {
                report.record(Law::Bounded, || vec![self.name(a).to_string()]);
            }
        }
        for a in self.elements() {
            let count = self
                .elements()
                .filter(|&b| self.sum(a, b) == Some(self.top))
                .count();
            if count != 1 {
                report.record(Law::Complement, || vec![self.name(a).to_string()]);
            }
        }
        report
    }
}

/// Either kind of algebra; effect algebras keep their top.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Algebra {
    Gea(FiniteGea),
    Ea(FiniteEa),
}

impl Algebra {
    pub fn as_gea(&self) -> &FiniteGea {
        match self {
            Algebra::Gea(g) => g,
            Algebra::Ea(e) => e.base(),
        }
    }

    pub fn as_ea(&self) -> Option<&FiniteEa> {
        match self {
            Algebra::Gea(_) => None,
            Algebra::Ea(e) => Some(e),
        }
    }

    pub fn top(&self) -> Option<Elem> {
        self.as_ea().map(FiniteEa::top)
    }

    pub fn is_ea(&self) -> bool {
        matches!(self, Algebra::Ea(_))
    }

    /// The forgetful functor on objects.
    pub fn forget(&self) -> Algebra {
        Algebra::Gea(self.as_gea().clone())
    }

    pub fn len(&self) -> usize {
        self.as_gea().len()
    }

    pub fn is_empty(&self) -> bool {
        self.as_gea().is_empty()
    }

    pub fn element(&self, name: &str) -> Option<Elem> {
        match self {
            Algebra::Gea(g) => g.element(name),
            Algebra::Ea(e) => e.element(name),
        }
    }

    pub fn validate(&self) -> Report {
        match self {
            Algebra::Gea(g) => g.validate(),
            Algebra::Ea(e) => e.validate(),
        }
    }
}

impl From<FiniteGea> for Algebra {
    fn from(g: FiniteGea) -> Self {
        Algebra::Gea(g)
    }
}

impl From<FiniteEa> for Algebra {
    fn from(e: FiniteEa) -> Self {
        Algebra::Ea(e)
    }
}

/// `E1 x E2` with componentwise sums. Element `(a, b)` has index
/// `a * |E2| + b`.
pub fn product_ea(e1: &FiniteEa, e2: &FiniteEa) -> FiniteEa {
    let (n1, n2) = (e1.len(), e2.len());
    let pair = |a: Elem, b: Elem| Elem(a.0 * n2 + b.0);
    let mut names = Vec::with_capacity(n1 * n2);
    for a in e1.elements() {
        for b in e2.elements() {
            names.push(format!("({},{})", e1.name(a), e2.name(b)));
        }
    }
    let mut table = SumTable::new(n1 * n2);
    for (a1, a2, a) in e1.table().entries() {
        for b1 in e2.elements() {
            for b2 in e2.elements() {
                if let Some(b) = e2.sum(b1, b2) {
                    table
                        .insert(pair(a1, b1), pair(a2, b2), pair(a, b))
                        .expect("componentwise sums are consistent");
                }
            }
        }
    }
    let base = FiniteGea::from_table(names, pair(e1.zero(), e2.zero()), table)
        .expect("distinct pair names");
    FiniteEa {
        base,
        top: pair(e1.top(), e2.top()),
    }
}

/// The named algebras shipped with the crate.
pub mod builtin {
    use super::*;

    pub const NAMES: &[&str] = &[
        "fig1",
        "fig1_unitized",
        "trivial",
        "two_chain_gea",
        "two",
        "two_squared",
        "chain(n)",
        "boolean(n)",
    ];

    /// `{0, a, b, c, d}` with `a + b = c` and `b + b = d`.
    pub fn fig1() -> FiniteGea {
        FiniteGea::from_named(
            &["0", "a", "b", "c", "d"],
            "0",
            &[("a", "b", "c"), ("b", "b", "d")],
        )
        .expect("well-formed")
    }

    pub fn fig1_unitized() -> FiniteEa {
        crate::unitization::unitize(&fig1()).expect("fig1 is a valid generalized effect algebra")
    }

    pub fn trivial() -> FiniteGea {
        FiniteGea::from_named(&["0"], "0", &[]).expect("well-formed")
    }

    /// `{0, x}` with no nonzero sums.
    pub fn two_chain_gea() -> FiniteGea {
        FiniteGea::from_named(&["0", "x"], "0", &[]).expect("well-formed")
    }

    /// The two-element effect algebra `{0, 1}`.
    pub fn two() -> FiniteEa {
        let base = FiniteGea::from_named(&["0", "1"], "0", &[]).expect("well-formed");
        FiniteEa::new(base, Elem(1)).expect("in range")
    }

    /// The Boolean algebra with two atoms, `{0, p, q, 1}`.
    pub fn two_squared() -> FiniteEa {
        boolean(2).expect("small")
    }

    /// The chain `0 < x < 2x < ... < nx` with `kx + lx = (k+l)x` whenever
    /// `k + l <= n`.
    pub fn chain(n: usize) -> Result<FiniteEa, Error> {
        if n + 1 > crate::SCAN_LIMIT {
            return Err(Error::SizeLimit {
                limit: crate::SCAN_LIMIT,
                got: n + 1,
            });
        }
        let names = (0..=n)
            .map(|k| match k {
                0 => String::from("0"),
                1 => String::from("x"),
                k => format!("{k}x"),
            })
            .collect();
        let mut sums = Vec::new();
        for k in 1..=n {
            for l in k..=n - k {
                sums.push((Elem(k), Elem(l), Elem(k + l)));
            }
        }
        let base = FiniteGea::from_sums(names, Elem(0), &sums)?;
        FiniteEa::new(base, Elem(n))
    }

    /// The Boolean algebra of subsets of `n` atoms; disjoint sets sum to
    /// their union. Atoms are named `p, q, r, ...`, the empty set `0` and
    /// the full set `1`.
    pub fn boolean(n: usize) -> Result<FiniteEa, Error> {
        if n > 6 {
            return Err(Error::SizeLimit { limit: 6, got: n });
        }
        const ATOMS: [char; 6] = ['p', 'q', 'r', 's', 't', 'u'];
        let size = 1usize << n;
        let full = size - 1;
        let names = (0..size)
            .map(|mask| {
                if mask == 0 {
                    String::from("0")
                } else if mask == full {
                    String::from("1")
                } else {
                    (0..n)
                        .filter(|i| mask & (1 << i) != 0)
                        .map(|i| ATOMS[i])
                        .collect()
                }
            })
            .collect();
        let mut sums = Vec::new();
        for a in 1..size {
            for b in a..size {
                if a & b == 0 {
                    sums.push((Elem(a), Elem(b), Elem(a | b)));
                }
            }
        }
        let base = FiniteGea::from_sums(names, Elem(0), &sums)?;
        FiniteEa::new(base, Elem(full))
    }

    fn parameter(name: &str, prefix: &str) -> Option<usize> {
        let rest = name.strip_prefix(prefix)?;
        let digits = rest
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(rest);
        digits.parse().ok()
    }

    /// Looks up a builtin by name: `fig1`, `fig1_unitized`, `trivial`,
    /// `two_chain_gea`, `two`, `two_squared`, `chain(n)` and `boolean(n)`
    /// (also written `chainN`, `booleanN`).
    pub fn by_name(name: &str) -> Result<Algebra, Error> {
        Ok(match name {
            "fig1" => fig1().into(),
            "fig1_unitized" => fig1_unitized().into(),
            "trivial" => trivial().into(),
            "two_chain_gea" | "two_chain" => two_chain_gea().into(),
            "two" => two().into(),
            "two_squared" => two_squared().into(),
            _ => {
                if let Some(n) = parameter(name, "chain") {
                    chain(n)?.into()
                } else if let Some(n) = parameter(name, "boolean") {
                    boolean(n)?.into()
                } else {
                    return Err(Error::UnknownBuiltin(name.to_string()));
                }
            }
        })
    }
}
