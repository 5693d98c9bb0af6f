//! Morphisms between finite algebras, their laws, and hom-set enumeration.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{Algebra, Elem, FiniteEa, FiniteGea};
use crate::error::Error;
use crate::report::{Law, Report};
use crate::unitization::{counit, eta, unitize, unitize_morphism};

/// Whether a morphism is meant to preserve the top as well.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    Gea,
    Ea,
}

/// A total map between carriers. Equality is pointwise equality of the
/// mapping tables together with kind and endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    kind: Kind,
    source: Algebra,
    target: Algebra,
    map: Vec<Elem>,
}

impl Morphism {
    pub fn new(
        kind: Kind,
        source: Algebra,
        target: Algebra,
        map: Vec<Elem>,
    ) -> Result<Self, Error> {
        if map.len() != source.len() {
            return Err(Error::MappingNotTotal {
                expected: source.len(),
                got: map.len(),
            });
        }
        if let Some(bad) = map.iter().find(|e| e.0 >= target.len()) {
            return Err(Error::ElementOutOfRange {
                index: bad.0,
                len: target.len(),
            });
        }
        if kind == Kind::Ea && !(source.is_ea() && target.is_ea()) {
            return Err(Error::KindMismatch);
        }
        Ok(Morphism {
            kind,
            source,
            target,
            map,
        })
    }

    pub fn gea(source: FiniteGea, target: FiniteGea, map: Vec<Elem>) -> Result<Self, Error> {
        Self::new(Kind::Gea, source.into(), target.into(), map)
    }

    pub fn ea(source: FiniteEa, target: FiniteEa, map: Vec<Elem>) -> Result<Self, Error> {
        Self::new(Kind::Ea, source.into(), target.into(), map)
    }

    /// The identity on `algebra`, of kind `Ea` exactly when the algebra is
    /// an effect algebra.
    pub fn identity(algebra: &Algebra) -> Self {
        let kind = if algebra.is_ea() { Kind::Ea } else { Kind::Gea };
        Morphism {
            kind,
            source: algebra.clone(),
            target: algebra.clone(),
            map: (0..algebra.len()).map(Elem).collect(),
        }
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn source(&self) -> &Algebra {
        &self.source
    }

    pub fn target(&self) -> &Algebra {
        &self.target
    }

    pub fn map(&self) -> &[Elem] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.map[x.0]
    }

    /// The forgetful functor on morphisms: a re-tag to kind `Gea` with both
    /// endpoints forgotten.
    pub fn forget(&self) -> Morphism {
        Morphism {
            kind: Kind::Gea,
            source: self.source.forget(),
            target: self.target.forget(),
            map: self.map.clone(),
        }
    }

    /// Checks `f(0) = 0`, `f(1) = 1` for kind `Ea`, and that every defined
    /// sum `a + b` has `f(a) + f(b)` defined and equal to `f(a + b)`.
    pub fn check(&self) -> Report {
        let src = self.source.as_gea();
        let tgt = self.target.as_gea();
        let mut report = Report::new();
        let names = |es: &[Elem]| {
            es.iter()
                .map(|&e| src.name(e).to_string())
                .collect::<Vec<String>>()
        };
        if self.apply(src.zero()) != tgt.zero() {
            report.record(Law::PreservesZero, || names(&[src.zero()]));
        }
        if self.kind == Kind::Ea {
            let (s_top, t_top) = (
                self.source.top().expect("ea"),
                self.target.top().expect("ea"),
            );
            if self.apply(s_top) != t_top {
                report.record(Law::PreservesTop, || names(&[s_top]));
            }
        }
        for (a, b, c) in src.table().entries() {
            match tgt.sum(self.apply(a), self.apply(b)) {
                None => report.record(Law::PreservesOrthogonality, || names(&[a, b])),
                Some(s) if s != self.apply(c) => {
                    report.record(Law::PreservesSum, || names(&[a, b]))
                }
                Some(_) => {}
            }
        }
        report
    }

    pub fn is_valid(&self) -> bool {
        self.check().is_valid()
    }

    /// A pair `(a, b)` with `f(a) ⊥ f(b)` such that no orthogonal pair of
    /// the source has the same images, if one exists. `None` means full.
    pub fn fullness_counterexample(&self) -> Option<(Elem, Elem)> {
        let src = self.source.as_gea();
        let tgt = self.target.as_gea();
        let m = tgt.len();
        let mut realized = vec![false; m * m];
        for (a, b, _) in src.table().entries() {
            let (fa, fb) = (self.apply(a), self.apply(b));
            realized[fa.0 * m + fb.0] = true;
            realized[fb.0 * m + fa.0] = true;
        }
        for a in src.elements() {
            for b in src.elements() {
                let (fa, fb) = (self.apply(a), self.apply(b));
                if tgt.orthogonal(fa, fb) && !realized[fa.0 * m + fb.0] {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn is_full(&self) -> bool {
        self.fullness_counterexample().is_none()
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target.len()];
        self.map
            .iter()
            .all(|e| !core::mem::replace(&mut seen[e.0], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.target.len()];
        for e in &self.map {
            seen[e.0] = true;
        }
        seen.into_iter().all(|s| s)
    }

    pub fn is_bijective(&self) -> bool {
        self.source.len() == self.target.len() && self.is_injective()
    }

    /// A valid morphism that is full and bijective.
    pub fn is_isomorphism(&self) -> bool {
        self.is_valid() && self.is_bijective() && self.is_full()
    }
}

/// `g ∘ f`. The result has kind `Ea` when both factors do, otherwise `Gea`
/// with forgotten endpoints.
pub fn compose(g: &Morphism, f: &Morphism) -> Result<Morphism, Error> {
    if f.target.as_gea() != g.source.as_gea() {
        return Err(Error::EndpointMismatch);
    }
    let map = f.map.iter().map(|&x| g.apply(x)).collect();
    if f.kind == Kind::Ea && g.kind == Kind::Ea {
        Ok(Morphism {
            kind: Kind::Ea,
            source: f.source.clone(),
            target: g.target.clone(),
            map,
        })
    } else {
        Ok(Morphism {
            kind: Kind::Gea,
            source: f.source.forget(),
            target: g.target.forget(),
            map,
        })
    }
}

/// Every morphism `source -> target` of the given kind, in lexicographic
/// order of the mapping table.
pub fn enumerate_morphisms(
    source: &Algebra,
    target: &Algebra,
    kind: Kind,
) -> Result<Vec<Morphism>, Error> {
    let mut out = Vec::new();
    let (src, tgt) = (source.forget(), target.forget());
    let (source, target) = match kind {
        Kind::Gea => (src, tgt),
        Kind::Ea => {
            if !(source.is_ea() && target.is_ea()) {
                return Err(Error::KindMismatch);
            }
            (source.clone(), target.clone())
        }
    };
    search_morphisms(&source, &target, kind, &mut |map| {
        out.push(Morphism {
            kind,
            source: source.clone(),
            target: target.clone(),
            map: map.to_vec(),
        });
    })?;
    Ok(out)
}

/// Number of morphisms, without materializing them.
pub fn count_morphisms(source: &Algebra, target: &Algebra, kind: Kind) -> Result<usize, Error> {
    if kind == Kind::Ea && !(source.is_ea() && target.is_ea()) {
        return Err(Error::KindMismatch);
    }
    let mut count = 0;
    search_morphisms(source, target, kind, &mut |_| count += 1)?;
    Ok(count)
}

fn search_morphisms(
    source: &Algebra,
    target: &Algebra,
    kind: Kind,
    emit: &mut dyn FnMut(&[Elem]),
) -> Result<(), Error> {
    let src = source.as_gea();
    let tgt = target.as_gea();
    let n = src.len();
    if n > crate::SCAN_LIMIT {
        return Err(Error::SizeLimit {
            limit: crate::SCAN_LIMIT,
            got: n,
        });
    }
    let mut fixed: Vec<Option<Elem>> = vec![None; n];
    fixed[src.zero().0] = Some(tgt.zero());
    if kind == Kind::Ea {
        let (s_top, t_top) = (source.top().expect("ea"), target.top().expect("ea"));
        match fixed[s_top.0] {
            Some(z) if z != t_top => return Ok(()),
            _ => fixed[s_top.0] = Some(t_top),
        }
    }
    // Each sum constraint is checked once its largest index is assigned.
    let mut constraints: Vec<Vec<(Elem, Elem, Elem)>> = vec![Vec::new(); n];
    for (a, b, c) in src.table().entries() {
        let last = a.max(b).max(c);
        constraints[last.0].push((a, b, c));
    }
    let mut map = vec![Elem(0); n];
    fn go(
        i: usize,
        map: &mut Vec<Elem>,
        fixed: &[Option<Elem>],
        constraints: &[Vec<(Elem, Elem, Elem)>],
        tgt: &FiniteGea,
        emit: &mut dyn FnMut(&[Elem]),
    ) {
        if i == map.len() {
            emit(map);
            return;
        }
        let candidates: &mut dyn Iterator<Item = Elem> = match fixed[i] {
            Some(e) => &mut core::iter::once(e),
            None => &mut tgt.elements(),
        };
        for image in candidates {
            map[i] = image;
            let ok = constraints[i]
                .iter()
                .all(|&(a, b, c)| tgt.sum(map[a.0], map[b.0]) == Some(map[c.0]));
            if ok {
                go(i + 1, map, fixed, constraints, tgt, emit);
            }
        }
    }
    go(0, &mut map, &fixed, &constraints, tgt, emit);
    Ok(())
}

/// The adjunction transpose `EA(F(P), E) -> GEA(P, U(E))`, computed as
/// `U(f) ∘ η_P`: the restriction of `f` to the unstarred elements.
pub fn transpose_to_gea(p: &FiniteGea, f: &Morphism) -> Result<Morphism, Error> {
    let fp = unitize(p)?;
    if f.source.as_gea() != fp.base() {
        return Err(Error::EndpointMismatch);
    }
    compose(&f.forget(), &eta(p)?)
}

/// The adjunction transpose `GEA(P, U(E)) -> EA(F(P), E)`, computed as
/// `ε_E ∘ F(g)`: `x ↦ g(x)`, `x* ↦ g(x)'`.
pub fn transpose_to_ea(g: &Morphism, e: &FiniteEa) -> Result<Morphism, Error> {
    if g.target.as_gea() != e.base() {
        return Err(Error::EndpointMismatch);
    }
    let retargeted = Morphism {
        kind: Kind::Gea,
        source: g.source.forget(),
        target: Algebra::Gea(e.base().clone()),
        map: g.map.clone(),
    };
    compose(&counit(e)?, &unitize_morphism(&retargeted)?)
}

/// The first projection `E1 x E2 -> E1` out of [`crate::algebra::product_ea`].
pub fn product_projection(e1: &FiniteEa, e2: &FiniteEa) -> Morphism {
    let product = crate::algebra::product_ea(e1, e2);
    let m = e2.len();
    let map = product.elements().map(|x| Elem(x.0 / m)).collect();
    Morphism {
        kind: Kind::Ea,
        source: product.into(),
        target: e1.clone().into(),
        map,
    }
}
