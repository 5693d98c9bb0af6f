//! Pointwise checks of the adjunction `F ⊣ U`, the monad `T = UF` with
//! `μ = UεF`, and Eilenberg-Moore algebras for `T`.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{Algebra, FiniteEa, FiniteGea};
use crate::error::Error;
use crate::morphisms::{compose, enumerate_morphisms, Kind, Morphism};
use crate::report::{Law, Report};
use crate::unitization::{counit, eta, unitize, unitize_morphism};

/// Largest `|P|` accepted by [`verify_monad_laws`]; `|T³(P)| = 8|P|`.
pub const MONAD_SIZE_LIMIT: usize = 8;

/// Records every element where `lhs` and `rhs` disagree. Both must share a
/// source carrier.
fn compare(lhs: &Morphism, rhs: &Morphism, law: Law, report: &mut Report) {
    let src = lhs.source().as_gea();
    let (lt, rt) = (lhs.target().as_gea(), rhs.target().as_gea());
    for x in src.elements() {
        let (l, r) = (lhs.apply(x), rhs.apply(x));
        if lt.name(l) != rt.name(r) {
            report.record(law, || {
                vec![
                    src.name(x).to_string(),
                    lt.name(l).to_string(),
                    rt.name(r).to_string(),
                ]
            });
        }
    }
}

/// `T(P) = U(F(P))`.
pub fn t_object(p: &FiniteGea) -> Result<FiniteGea, Error> {
    Ok(unitize(p)?.into_base())
}

/// `T(f) = U(F(f))`.
pub fn t_morphism(f: &Morphism) -> Result<Morphism, Error> {
    Ok(unitize_morphism(f)?.forget())
}

/// `μ_P = U(ε_{F(P)}): T(T(P)) -> T(P)`.
pub fn mu(p: &FiniteGea) -> Result<Morphism, Error> {
    Ok(counit(&unitize(p)?)?.forget())
}

/// `ε_{F(P)} ∘ F(η_P) = id_{F(P)}`.
pub fn left_triangle(p: &FiniteGea) -> Result<Report, Error> {
    let fp = unitize(p)?;
    let lhs = compose(&counit(&fp)?, &unitize_morphism(&eta(p)?)?)?;
    let mut report = Report::new();
    compare(
        &lhs,
        &Morphism::identity(&fp.into()),
        Law::LeftTriangle,
        &mut report,
    );
    Ok(report)
}

/// `U(ε_E) ∘ η_{U(E)} = id_{U(E)}`.
pub fn right_triangle(e: &FiniteEa) -> Result<Report, Error> {
    let lhs = compose(&counit(e)?.forget(), &eta(e.base())?)?;
    let mut report = Report::new();
    compare(
        &lhs,
        &Morphism::identity(&e.base().clone().into()),
        Law::RightTriangle,
        &mut report,
    );
    Ok(report)
}

pub fn verify_triangles(p: &FiniteGea, e: &FiniteEa) -> Result<Report, Error> {
    let mut report = left_triangle(p)?;
    report.merge(right_triangle(e)?);
    Ok(report)
}

/// `U(F(f)) ∘ η_P = η_Q ∘ f` for `f: P -> Q`.
pub fn verify_unit_naturality(f: &Morphism) -> Result<Report, Error> {
    let f = f.forget();
    let lhs = compose(&t_morphism(&f)?, &eta(f.source().as_gea())?)?;
    let rhs = compose(&eta(f.target().as_gea())?, &f)?;
    let mut report = Report::new();
    compare(&lhs, &rhs, Law::UnitNaturality, &mut report);
    Ok(report)
}

/// `g ∘ ε_{E1} = ε_{E2} ∘ F(U(g))` for `g: E1 -> E2`.
pub fn verify_counit_naturality(g: &Morphism) -> Result<Report, Error> {
    let (Some(e1), Some(e2)) = (g.source().as_ea(), g.target().as_ea()) else {
        return Err(Error::KindMismatch);
    };
    if g.kind() != Kind::Ea {
        return Err(Error::KindMismatch);
    }
    let lhs = compose(g, &counit(e1)?)?;
    let rhs = compose(&counit(e2)?, &unitize_morphism(&g.forget())?)?;
    let mut report = Report::new();
    compare(&lhs, &rhs, Law::CounitNaturality, &mut report);
    Ok(report)
}

/// The monad data at one object.
#[derive(Debug, Clone)]
pub struct MonadInstance {
    pub object: FiniteGea,
    pub t: FiniteGea,
    pub eta: Morphism,
    pub mu: Morphism,
}

impl MonadInstance {
    pub fn new(p: &FiniteGea) -> Result<Self, Error> {
        Ok(MonadInstance {
            object: p.clone(),
            t: t_object(p)?,
            eta: eta(p)?,
            mu: mu(p)?,
        })
    }
}

/// The two unit laws and associativity of `(T, η, μ)` at `P`.
pub fn verify_monad_laws(p: &FiniteGea) -> Result<Report, Error> {
    if p.len() > MONAD_SIZE_LIMIT {
        return Err(Error::SizeLimit {
            limit: MONAD_SIZE_LIMIT,
            got: p.len(),
        });
    }
    let m = MonadInstance::new(p)?;
    let mut report = Report::new();
    let id_t = Morphism::identity(&m.t.clone().into());

    let left = compose(&m.mu, &t_morphism(&m.eta)?)?;
    compare(&left, &id_t, Law::MonadLeftUnit, &mut report);

    let right = compose(&m.mu, &eta(&m.t)?)?;
    compare(&right, &id_t, Law::MonadRightUnit, &mut report);

    let tt = t_object(&m.t)?;
    let mu_t = mu(&m.t)?;
    let assoc_lhs = compose(&m.mu, &t_morphism(&m.mu)?)?;
    let assoc_rhs = compose(&m.mu, &mu_t)?;
    debug_assert_eq!(assoc_lhs.source().as_gea(), &t_object(&tt)?);
    compare(&assoc_lhs, &assoc_rhs, Law::MonadAssociativity, &mut report);
    Ok(report)
}

/// Eilenberg-Moore laws for `h: T(X) -> X`: `h ∘ η_X = id_X` and
/// `h ∘ T(h) = h ∘ μ_X`.
pub fn em_algebra_check(x: &FiniteGea, h: &Morphism) -> Result<Report, Error> {
    let tx = t_object(x)?;
    if h.source().as_gea() != &tx || h.target().as_gea() != x {
        return Err(Error::EndpointMismatch);
    }
    let h = h.forget();
    let mut report = Report::new();
    let unit = compose(&h, &eta(x)?)?;
    compare(
        &unit,
        &Morphism::identity(&x.clone().into()),
        Law::AlgebraUnit,
        &mut report,
    );
    let lhs = compose(&h, &t_morphism(&h)?)?;
    let rhs = compose(&h, &mu(x)?)?;
    compare(&lhs, &rhs, Law::AlgebraAssociativity, &mut report);
    Ok(report)
}

/// The algebra `(U(E), U(ε_E))` induced by an effect algebra.
pub fn algebra_from_ea(e: &FiniteEa) -> Result<(FiniteGea, Morphism), Error> {
    Ok((e.base().clone(), counit(e)?.forget()))
}

/// Every structure map `h: T(X) -> X` satisfying the Eilenberg-Moore laws.
pub fn em_structures(x: &FiniteGea) -> Result<Vec<Morphism>, Error> {
    let tx: Algebra = t_object(x)?.into();
    let target: Algebra = x.clone().into();
    let mut out = Vec::new();
    for h in enumerate_morphisms(&tx, &target, Kind::Gea)? {
        if em_algebra_check(x, &h)?.is_valid() {
            out.push(h);
        }
    }
    Ok(out)
}
