//! Validation reports shared by every law checker.
//!
//! A report keeps, per law, the first witness found and the number of
//! violations. Scans run in lexicographic order of element indices, so the
//! first witness is the lexicographically least one.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Law {
    Associativity,
    ZeroSum,
    Cancellation,
    Positivity,
    Bounded,
    Complement,
    PreservesZero,
    PreservesTop,
    PreservesOrthogonality,
    PreservesSum,
    LeftTriangle,
    RightTriangle,
    UnitNaturality,
    CounitNaturality,
    MonadLeftUnit,
    MonadRightUnit,
    MonadAssociativity,
    AlgebraUnit,
    AlgebraAssociativity,
    AdditiveZero,
    AdditiveBound,
    AdditiveSum,
    StateUnit,
}

impl Law {
    pub fn label(self) -> &'static str {
        match self {
            Law::Associativity => "(P2) associativity",
            Law::ZeroSum => "(P3) zero sum",
            Law::Cancellation => "(P4) cancellation",
            Law::Positivity => "(P5) positivity",
            Law::Bounded => "bounded above",
            Law::Complement => "unique complement",
            Law::PreservesZero => "preserves zero",
            Law::PreservesTop => "preserves top",
            Law::PreservesOrthogonality => "preserves orthogonality",
            Law::PreservesSum => "preserves sums",
            Law::LeftTriangle => "triangle eps_F . F(eta) = id_F",
            Law::RightTriangle => "triangle U(eps) . eta_U = id_U",
            Law::UnitNaturality => "naturality of eta",
            Law::CounitNaturality => "naturality of eps",
            Law::MonadLeftUnit => "monad unit mu . T(eta) = id",
            Law::MonadRightUnit => "monad unit mu . eta_T = id",
            Law::MonadAssociativity => "monad associativity mu . T(mu) = mu . mu_T",
            Law::AlgebraUnit => "algebra unit h . eta = id",
            Law::AlgebraAssociativity => "algebra associativity h . T(h) = h . mu",
            Law::AdditiveZero => "additive zero",
            Law::AdditiveBound => "additive bound s(a) + s(b) <= 1",
            Law::AdditiveSum => "additivity s(a + b) = s(a) + s(b)",
            Law::StateUnit => "state unit s(1) = 1",
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub law: Law,
    /// Display names of the first witness found.
    pub witness: Vec<String>,
    /// Total number of violations of this law.
    pub count: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    violations: Vec<Violation>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn violation(&self, law: Law) -> Option<&Violation> {
        self.violations.iter().find(|v| v.law == law)
    }

    pub fn violates(&self, law: Law) -> bool {
        self.violation(law).is_some()
    }

    pub fn total(&self) -> usize {
        self.violations.iter().map(|v| v.count).sum()
    }

    /// Records one violation of `law`. The witness closure only runs for the
    /// first violation of each law.
    pub fn record<F>(&mut self, law: Law, witness: F)
    where
        F: FnOnce() -> Vec<String>,
    {
        match self.violations.iter_mut().find(|v| v.law == law) {
            Some(v) => v.count += 1,
            None => {
                self.violations.push(Violation {
                    law,
                    witness: witness(),
                    count: 1,
                });
                self.violations.sort_by_key(|v| v.law);
            }
        }
    }

    pub fn merge(&mut self, other: Report) {
        for v in other.violations {
            match self.violations.iter_mut().find(|w| w.law == v.law) {
                Some(w) => w.count += v.count,
                None => self.violations.push(v),
            }
        }
        self.violations.sort_by_key(|v| v.law);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "no violations");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{}: witness (", v.law)?;
            for (j, w) in v.witness.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{w}")?;
            }
            write!(f, "); {} violation(s)", v.count)?;
        }
        Ok(())
    }
}
