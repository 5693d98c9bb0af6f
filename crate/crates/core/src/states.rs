//! Additive maps into the unit interval, states, and ideals.
//!
//! The interval `[0,1]` is never materialized. A map `s` is additive when
//! `s(0) = 0` and every defined sum `a + b` has `s(a) + s(b) <= 1` and
//! `s(a + b) = s(a) + s(b)`. All arithmetic is exact.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::algebra::{Elem, FiniteEa, FiniteGea};
use crate::error::Error;
use crate::morphisms::{count_morphisms, Kind, Morphism};
use crate::report::{Law, Report};
use crate::unitization::{unitize, UnitizedElement};

pub type Rational = Rational64;

fn check_values(algebra: &FiniteGea, values: &[Rational]) -> Result<(), Error> {
    if values.len() != algebra.len() {
        return Err(Error::MappingNotTotal {
            expected: algebra.len(),
            got: values.len(),
        });
    }
    for (x, v) in algebra.elements().zip(values) {
        if *v < Rational::zero() || *v > Rational::one() {
            return Err(Error::ValueOutOfRange {
                element: algebra.name(x).to_string(),
                value: v.to_string(),
            });
        }
    }
    Ok(())
}

fn additivity(algebra: &FiniteGea, values: &[Rational]) -> Report {
    let mut report = Report::new();
    let names = |es: &[Elem]| {
        es.iter()
            .map(|&e| algebra.name(e).to_string())
            .collect::<Vec<String>>()
    };
    let zero = algebra.zero();
    if !values[zero.0].is_zero() {
        report.record(Law::AdditiveZero, || names(&[zero]));
    }
    for (a, b, c) in algebra.table().entries() {
        let total = values[a.0] + values[b.0];
        if total > Rational::one() {
            report.record(Law::AdditiveBound, || names(&[a, b]));
        }
        if values[c.0] != total {
            report.record(Law::AdditiveSum, || names(&[a, b]));
        }
    }
    report
}

/// A map from a carrier into `[0,1]`, not yet known to be additive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdditiveMap {
    algebra: FiniteGea,
    values: Vec<Rational>,
}

impl AdditiveMap {
    /// Fails if a value lies outside `[0,1]` or the map is not total.
    pub fn new(algebra: FiniteGea, values: Vec<Rational>) -> Result<Self, Error> {
        check_values(&algebra, &values)?;
        Ok(AdditiveMap { algebra, values })
    }

    pub fn zero(algebra: FiniteGea) -> Self {
        let values = vec![Rational::zero(); algebra.len()];
        AdditiveMap { algebra, values }
    }

    pub fn algebra(&self) -> &FiniteGea {
        &self.algebra
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn value(&self, x: Elem) -> Rational {
        self.values[x.0]
    }

    pub fn check(&self) -> Report {
        additivity(&self.algebra, &self.values)
    }

    pub fn is_valid(&self) -> bool {
        self.check().is_valid()
    }

    /// `s ∘ f` for `f` into this map's algebra.
    pub fn pull_back(&self, f: &Morphism) -> Result<AdditiveMap, Error> {
        if f.target().as_gea() != &self.algebra {
            return Err(Error::EndpointMismatch);
        }
        let source = f.source().as_gea().clone();
        let values = source.elements().map(|x| self.value(f.apply(x))).collect();
        Ok(AdditiveMap {
            algebra: source,
            values,
        })
    }
}

/// An additive map on an effect algebra that is meant to send `1` to `1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct State {
    algebra: FiniteEa,
    values: Vec<Rational>,
}

impl State {
    pub fn new(algebra: FiniteEa, values: Vec<Rational>) -> Result<Self, Error> {
        check_values(algebra.base(), &values)?;
        Ok(State { algebra, values })
    }

    pub fn algebra(&self) -> &FiniteEa {
        &self.algebra
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn value(&self, x: Elem) -> Rational {
        self.values[x.0]
    }

    pub fn check(&self) -> Report {
        let mut report = additivity(self.algebra.base(), &self.values);
        let top = self.algebra.top();
        if !self.values[top.0].is_one() {
            report.record(Law::StateUnit, || vec![self.algebra.name(top).to_string()]);
        }
        report
    }

    pub fn is_valid(&self) -> bool {
        self.check().is_valid()
    }

    pub fn as_additive(&self) -> AdditiveMap {
        AdditiveMap {
            algebra: self.algebra.base().clone(),
            values: self.values.clone(),
        }
    }
}

/// The unique state on `F(P)` restricting to `s`: `x ↦ s(x)`,
/// `x* ↦ 1 - s(x)`.
pub fn extend_state(s: &AdditiveMap) -> Result<State, Error> {
    let report = s.check();
    if !report.is_valid() {
        return Err(Error::Invalid(report));
    }
    let fp = unitize(s.algebra())?;
    let n = s.algebra().len();
    let values = fp
        .elements()
        .map(|x| {
            let u = UnitizedElement::from_index(x, n);
            let v = s.value(u.base);
            if u.starred {
                Rational::one() - v
            } else {
                v
            }
        })
        .collect();
    Ok(State {
        algebra: fp,
        values,
    })
}

/// Rationals in `[0,1]` with denominator at most `max_denominator`,
/// ascending.
pub fn grid(max_denominator: i64) -> Vec<Rational> {
    let mut out: Vec<Rational> = (1..=max_denominator.max(1))
        .flat_map(|d| (0..=d).map(move |k| Rational::new(k, d)))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Every additive map on `p` whose values all lie on [`grid`], in
/// lexicographic order of value tuples.
pub fn grid_additive_maps(p: &FiniteGea, max_denominator: i64) -> Vec<AdditiveMap> {
    let points = grid(max_denominator);
    let n = p.len();
    let mut constraints: Vec<Vec<(Elem, Elem, Elem)>> = vec![Vec::new(); n];
    for (a, b, c) in p.table().entries() {
        constraints[a.max(b).max(c).0].push((a, b, c));
    }
    let mut values = vec![Rational::zero(); n];
    let mut out = Vec::new();
    fn go(
        i: usize,
        p: &FiniteGea,
        points: &[Rational],
        constraints: &[Vec<(Elem, Elem, Elem)>],
        values: &mut Vec<Rational>,
        out: &mut Vec<AdditiveMap>,
    ) {
        if i == values.len() {
            out.push(AdditiveMap {
                algebra: p.clone(),
                values: values.clone(),
            });
            return;
        }
        let zero_only = [Rational::zero()];
        let candidates: &[Rational] = if Elem(i) == p.zero() {
            &zero_only
        } else {
            points
        };
        for &v in candidates {
            values[i] = v;
            let ok = constraints[i].iter().all(|&(a, b, c)| {
                let total = values[a.0] + values[b.0];
                total <= Rational::one() && values[c.0] == total
            });
            if ok {
                go(i + 1, p, points, constraints, values, out);
            }
        }
    }
    go(0, p, &points, &constraints, &mut values, &mut out);
    out
}

/// A subset containing `0`, downward closed, and closed under defined sums.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ideal {
    pub members: Vec<Elem>,
}

/// Largest carrier for the subset scan in [`enumerate_ideals`].
pub const IDEAL_SCAN_LIMIT: usize = 20;

/// All ideals of `p`, ordered by the bitmask of their members.
pub fn enumerate_ideals(p: &FiniteGea) -> Result<Vec<Ideal>, Error> {
    let n = p.len();
    if n > IDEAL_SCAN_LIMIT {
        return Err(Error::SizeLimit {
            limit: IDEAL_SCAN_LIMIT,
            got: n,
        });
    }
    let order = p.derive_order();
    let bit = |e: Elem| 1u32 << e.0;
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << n) {
        if mask & bit(p.zero()) == 0 {
            continue;
        }
        let contains = |e: Elem| mask & bit(e) != 0;
        let downward = order.pairs().all(|(a, b)| !contains(b) || contains(a));
        let closed = p
            .table()
            .entries()
            .all(|(a, b, c)| !(contains(a) && contains(b)) || contains(c));
        if downward && closed {
            out.push(Ideal {
                members: p.elements().filter(|&e| contains(e)).collect(),
            });
        }
    }
    Ok(out)
}

/// Counts reported side by side by [`ideal_correspondence_probe`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdealProbe {
    pub ideals: usize,
    /// `|GEA(P, U(2²))|`
    pub gea_homs: usize,
    /// `|EA(F(P), 2²)|`
    pub ea_homs: usize,
}

impl IdealProbe {
    pub fn ideal_count_matches(&self) -> bool {
        self.ideals == self.ea_homs
    }
}

pub fn ideal_correspondence_probe(p: &FiniteGea) -> Result<IdealProbe, Error> {
    let b2 = crate::algebra::builtin::two_squared();
    let ideals = enumerate_ideals(p)?.len();
    let gea_homs = count_morphisms(&p.clone().into(), &b2.base().clone().into(), Kind::Gea)?;
    let ea_homs = count_morphisms(&unitize(p)?.into(), &b2.into(), Kind::Ea)?;
    Ok(IdealProbe {
        ideals,
        gea_homs,
        ea_homs,
    })
}
