//! The unitization functor `F`, its unit and counit, and the isomorphism
//! `w: F(U(E)) -> E x {0,1}`.
//!
//! `F(P)` has carrier `P ⊔ P*`. Unstarred `x` keeps index `x`, starred `x*`
//! gets index `|P| + x`. The sums are
//!
//! * `a + b` as in `P`,
//! * `a + b* = (b ⊖ a)*` when `a <= b`,
//! * `a* + b = (a ⊖ b)*` when `b <= a`,
//! * `a* + b*` never defined,
//!
//! with zero `0` and top `0*`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{builtin, product_ea, Elem, FiniteEa, FiniteGea, SumTable};
use crate::error::Error;
use crate::morphisms::{Kind, Morphism};

/// An element of `F(P)` in terms of `P`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UnitizedElement {
    pub base: Elem,
    pub starred: bool,
}

impl UnitizedElement {
    pub fn plain(base: Elem) -> Self {
        UnitizedElement {
            base,
            starred: false,
        }
    }

    pub fn star(base: Elem) -> Self {
        UnitizedElement {
            base,
            starred: true,
        }
    }

    /// Index in `F(P)` where `base_len = |P|`.
    pub fn index(self, base_len: usize) -> Elem {
        if self.starred {
            Elem(base_len + self.base.0)
        } else {
            self.base
        }
    }

    pub fn from_index(e: Elem, base_len: usize) -> Self {
        if e.0 >= base_len {
            Self::star(Elem(e.0 - base_len))
        } else {
            Self::plain(e)
        }
    }
}

/// Builds `F(P)` and validates it as an effect algebra.
pub fn unitize(p: &FiniteGea) -> Result<FiniteEa, Error> {
    let report = p.validate();
    if !report.is_valid() {
        return Err(Error::Invalid(report));
    }
    let n = p.len();
    let star = |x: Elem| UnitizedElement::star(x).index(n);
    let names = unitized_names(p.names());

    let mut table = SumTable::new(2 * n);
    for (a, b, c) in p.table().entries() {
        table
            .insert(a, b, c)
            .expect("copied from a symmetric table");
    }
    for a in p.elements() {
        for b in p.elements() {
            if let Some(d) = p.ominus(b, a) {
                table.insert(a, star(b), star(d)).expect("b ⊖ a is unique");
            }
        }
    }
    let base = FiniteGea::from_table(names, p.zero(), table)?;
    let ea = FiniteEa::new(base, star(p.zero()))?;
    let report = ea.validate();
    if !report.is_valid() {
        return Err(Error::Invalid(report));
    }
    Ok(ea)
}

/// Names for `P ⊔ P*`: `x` and `x*`. If a starred name would clash with an
/// existing one (as in `F(F(P))`, where `0*` is already taken), starred
/// names are parenthesized, `(x)*`, nesting further until all are distinct.
pub fn unitized_names(base: &[String]) -> Vec<String> {
    let mut open = String::new();
    let mut close = String::new();
    loop {
        let mut names = Vec::with_capacity(2 * base.len());
        names.extend(base.iter().cloned());
        names.extend(base.iter().map(|s| format!("{open}{s}{close}*")));
        let mut sorted: Vec<&String> = names.iter().collect();
        sorted.sort();
        if sorted.windows(2).all(|w| w[0] != w[1]) {
            return names;
        }
        open.push('(');
        close.push(')');
    }
}

/// `F(f)`: `a ↦ f(a)`, `a* ↦ f(a)*`.
pub fn unitize_morphism(f: &Morphism) -> Result<Morphism, Error> {
    let report = f.check();
    if !report.is_valid() {
        return Err(Error::Invalid(report));
    }
    let (p, q) = (f.source().as_gea(), f.target().as_gea());
    let (fp, fq) = (unitize(p)?, unitize(q)?);
    let (n, m) = (p.len(), q.len());
    let map = fp
        .elements()
        .map(|x| {
            let u = UnitizedElement::from_index(x, n);
            UnitizedElement {
                base: f.apply(u.base),
                starred: u.starred,
            }
            .index(m)
        })
        .collect();
    Morphism::new(Kind::Ea, fp.into(), fq.into(), map)
}

/// The unit `η_P: P -> U(F(P))`, `x ↦ x`.
pub fn eta(p: &FiniteGea) -> Result<Morphism, Error> {
    let fp = unitize(p)?;
    Morphism::gea(p.clone(), fp.into_base(), p.elements().collect())
}

/// The counit `ε_E: F(U(E)) -> E`, `x ↦ x`, `x* ↦ x'`.
pub fn counit(e: &FiniteEa) -> Result<Morphism, Error> {
    let fue = unitize(e.base())?;
    let n = e.len();
    let map = fue
        .elements()
        .map(|x| {
            let u = UnitizedElement::from_index(x, n);
            if u.starred {
                complement_of(e, u.base)
            } else {
                Ok(u.base)
            }
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Morphism::ea(fue, e.clone(), map)
}

fn complement_of(e: &FiniteEa, x: Elem) -> Result<Elem, Error> {
    e.complement(x).ok_or_else(|| Error::Invalid(e.validate()))
}

/// `w: F(U(E)) -> E x {0,1}`, `a ↦ (a, 0)`, `a* ↦ (a', 1)`.
pub fn iso_w(e: &FiniteEa) -> Result<Morphism, Error> {
    let fue = unitize(e.base())?;
    let two = builtin::two();
    let product = product_ea(e, &two);
    let n = e.len();
    let pair = |a: Elem, bit: usize| Elem(a.0 * two.len() + bit);
    let map = fue
        .elements()
        .map(|x| {
            let u = UnitizedElement::from_index(x, n);
            if u.starred {
                Ok(pair(complement_of(e, u.base)?, 1))
            } else {
                Ok(pair(u.base, 0))
            }
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Morphism::ea(fue, product, map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::builtin::*;
    use crate::algebra::Algebra;
    use crate::morphisms::{compose, enumerate_morphisms, product_projection};
    use alloc::vec;

    fn el(g: &FiniteGea, name: &str) -> Elem {
        g.element(name).unwrap()
    }

    #[test]
    fn unitize_fig1() {
        let fp = unitize(&fig1()).unwrap();
        assert_eq!(fp.len(), 10);
        assert_eq!(fp.name(fp.top()), "0*");
        let s = |n: &str| el(&fp, n);
        assert_eq!(fp.sum(s("a"), s("c*")), Some(s("b*")));
        assert_eq!(fp.sum(s("d*"), s("b")), Some(s("b*")));
        assert_eq!(fp.sum(s("a*"), s("b")), None);
        assert_eq!(fp.sum(s("b"), s("b")), Some(s("d")));
        for x in ["0", "a", "b", "c", "d"] {
            for y in ["0", "a", "b", "c", "d"] {
                assert_eq!(fp.sum(s(&format!("{x}*")), s(&format!("{y}*"))), None);
            }
            assert_eq!(fp.sum(s(x), s(&format!("{x}*"))), Some(fp.top()));
        }
    }

    #[test]
    fn unitize_trivial_is_two() {
        let ft = unitize(&trivial()).unwrap();
        assert_eq!(ft.names(), &["0", "0*"]);
        assert_eq!(ft.top(), Elem(1));
        assert!(ft.validate().is_valid());
    }

    #[test]
    fn unitize_rejects_invalid_input() {
        let bad = FiniteGea::from_named(&["0", "a"], "0", &[("a", "a", "a")]).unwrap();
        assert!(matches!(unitize(&bad), Err(Error::Invalid(_))));
    }

    #[test]
    fn functor_preserves_identity() {
        let p = fig1();
        let id = Morphism::identity(&p.clone().into());
        let fid = unitize_morphism(&id).unwrap();
        assert_eq!(fid, Morphism::identity(&unitize(&p).unwrap().into()));
    }

    #[test]
    fn unitized_map_out_of_trivial() {
        let f = Morphism::gea(trivial(), fig1(), vec![Elem(0)]).unwrap();
        let ff = unitize_morphism(&f).unwrap();
        assert_eq!(ff.map(), &[Elem(0), Elem(5)]);
        assert!(ff.is_valid());
    }

    #[test]
    fn unitized_embedding_of_two_chain() {
        let p = fig1();
        let f = Morphism::gea(two_chain_gea(), p.clone(), vec![Elem(0), el(&p, "b")]).unwrap();
        let ff = unitize_morphism(&f).unwrap();
        assert!(ff.is_valid());
        let fp = unitize(&p).unwrap();
        let src = ff.source().as_ea().unwrap().clone();
        let (x, xs) = (el(&src, "x"), el(&src, "x*"));
        assert_eq!(ff.apply(xs), el(&fp, "b*"));
        assert_eq!(src.sum(x, xs), Some(src.top()));
        assert_eq!(fp.sum(ff.apply(x), ff.apply(xs)), Some(fp.top()));
    }

    #[test]
    fn functor_preserves_composition() {
        let a: Algebra = two_chain_gea().into();
        let b: Algebra = fig1().into();
        let c: Algebra = Algebra::from(two_squared()).forget();
        for f in enumerate_morphisms(&a, &b, Kind::Gea).unwrap() {
            for g in enumerate_morphisms(&b, &c, Kind::Gea).unwrap() {
                let lhs = unitize_morphism(&compose(&g, &f).unwrap()).unwrap();
                let rhs = compose(
                    &unitize_morphism(&g).unwrap(),
                    &unitize_morphism(&f).unwrap(),
                )
                .unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn eta_on_fig1() {
        let p = fig1();
        let h = eta(&p).unwrap();
        assert!(h.is_valid());
        assert!(h.is_injective());
        let fp = h.target().as_gea().clone();
        let b = el(&p, "b");
        assert_eq!(h.apply(b), el(&fp, "b"));
        assert_eq!(fp.sum(h.apply(b), h.apply(b)), Some(el(&fp, "d")));
        for a in p.elements() {
            for b in p.elements() {
                assert_eq!(p.orthogonal(a, b), fp.orthogonal(h.apply(a), h.apply(b)));
            }
        }
    }

    #[test]
    fn counit_on_two_squared() {
        let e = two_squared();
        let eps = counit(&e).unwrap();
        let fue = eps.source().as_gea().clone();
        assert_eq!(fue.len(), 8);
        assert_eq!(eps.apply(el(&fue, "p*")), el(&e, "q"));
        assert_eq!(eps.apply(el(&fue, "0*")), e.top());
        assert_eq!(eps.apply(el(&fue, "0")), e.zero());
        assert!(eps.is_valid());
        assert!(eps.is_surjective());
        assert!(eps.is_full());
        assert!(!eps.is_isomorphism());
    }

    #[test]
    fn w_on_two() {
        let e = two();
        let w = iso_w(&e).unwrap();
        let src = w.source().as_gea().clone();
        let tgt = w.target().as_gea().clone();
        let image = |n: &str| tgt.name(w.apply(el(&src, n))).to_owned();
        assert_eq!(image("0"), "(0,0)");
        assert_eq!(image("1"), "(1,0)");
        assert_eq!(image("0*"), "(1,1)");
        assert_eq!(image("1*"), "(0,1)");
        assert!(w.is_isomorphism());
        let pr = product_projection(&e, &two());
        assert_eq!(compose(&pr, &w).unwrap(), counit(&e).unwrap());
    }

    #[test]
    fn w_on_unitized_fig1() {
        let e = fig1_unitized();
        let w = iso_w(&e).unwrap();
        assert_eq!(w.target().len(), 20);
        assert!(w.is_isomorphism());
    }

    #[test]
    fn double_unitization_names() {
        let ffp = unitize(unitize(&fig1()).unwrap().base()).unwrap();
        assert_eq!(ffp.len(), 20);
        assert_eq!(ffp.name(ffp.top()), "(0)*");
        assert!(ffp.element("(0*)*").is_some());
        assert!(ffp.element("0*").is_some());
    }

    #[test]
    fn index_round_trip() {
        for i in 0..10 {
            let u = UnitizedElement::from_index(Elem(i), 5);
            assert_eq!(u.index(5), Elem(i));
            assert_eq!(u.starred, i >= 5);
        }
    }
}
