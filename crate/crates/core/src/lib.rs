//! Finite generalized effect algebras, effect algebras, and the unitization
//! functor between them.
//!
//! Every algebra here has an explicit finite carrier and a partial Cayley
//! table, so each axiom, morphism law and categorical identity is decided by
//! an exhaustive scan. The crate is `no_std` and only needs `alloc`.
//!
//! The main pieces:
//!
//! * [`algebra`]: carriers, sum tables, axiom validation, the derived order,
//!   partial subtraction, products and a library of named algebras.
//! * [`unitization`]: the functor `F` from generalized effect algebras to
//!   effect algebras on objects and morphisms, the unit, the counit and the
//!   isomorphism `F(U(E)) -> E x {0,1}`.
//! * [`morphisms`]: morphism law checks, fullness, hom-set enumeration,
//!   composition and the two adjunction transposes.
//! * [`catlaws`]: triangle identities, naturality squares, monad laws and
//!   Eilenberg-Moore algebra laws, evaluated pointwise.
//! * [`states`]: additive maps and states with exact rational values, and
//!   their extension along the unit.
//! * [`enumerate`]: exhaustive generation of small algebras.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod catlaws;
pub mod enumerate;
mod error;
pub mod morphisms;
pub mod report;
pub mod states;
pub mod unitization;

pub use algebra::{builtin, Algebra, Elem, FiniteEa, FiniteGea, OrderRelation, SumTable};
pub use error::Error;
pub use morphisms::{Kind, Morphism};
pub use report::{Law, Report, Violation};
pub use states::{AdditiveMap, State};
pub use unitization::{counit, eta, iso_w, unitize, unitize_morphism, UnitizedElement};

/// Carrier size above which exhaustive scans are refused.
pub const SCAN_LIMIT: usize = 64;
