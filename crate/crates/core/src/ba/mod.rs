//! Boolean algebra carriers: explicit powersets and the symbolic
//! finite–cofinite algebra.

pub mod concrete;
pub mod fincofin;
pub mod hom;
pub mod powerset;

use serde::{Deserialize, Serialize};

pub use concrete::ConcreteBa;
pub use fincofin::{FcElem, FcIdeal, FcUltrafilter, IndexSet};
pub use hom::{all_homs, hom_check, HomViolation, StructMap};
pub use powerset::{Elem, ElemSet, Powerset, MAX_ATOMS};

use crate::error::{Error, Result};
use crate::verdict::{Cardinal, Verdict};

/// How a carrier is requested, matching the structure-file schema.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AlgebraKind {
    Powerset { atoms: usize },
    Fincofin,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Algebra {
    Powerset(Powerset),
    FinCofin,
}

pub fn make_algebra(kind: AlgebraKind) -> Result<Algebra> {
    make_algebra_with_cap(kind, MAX_ATOMS)
}

pub fn make_algebra_with_cap(kind: AlgebraKind, cap: usize) -> Result<Algebra> {
    Ok(match kind {
        AlgebraKind::Powerset { atoms } => Algebra::Powerset(Powerset::with_cap(atoms, cap)?),
        AlgebraKind::Fincofin => Algebra::FinCofin,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(untagged)]
pub enum Element {
    Finite(Elem),
    Fc(FcElem),
}

/// What an [`IdealLike`] claims to be.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Role {
    Ideal,
    Filter,
    Subset,
}

/// A subset of a carrier: extensional for powersets, a descriptor for
/// FinCofin ideals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IdealLike {
    Members { role: Role, members: ElemSet },
    Fc(FcIdeal),
}

impl Algebra {
    pub fn element_count(&self) -> Cardinal {
        match self {
            Algebra::Powerset(p) => Cardinal::Finite(p.size()),
            Algebra::FinCofin => Cardinal::Aleph0,
        }
    }

    /// Density of a subset; the witness is a nonzero element without a
    /// nonzero minorant in the subset.
    pub fn is_dense_subset(&self, s: &IdealLike) -> Result<Verdict<Element>> {
        match (self, s) {
            (Algebra::Powerset(p), IdealLike::Members { members, .. }) => {
                Ok(p.is_dense_subset(members)?.map(Element::Finite))
            }
            (Algebra::FinCofin, IdealLike::Fc(i)) => Ok(i.density().map(Element::Fc)),
            _ => Err(Error::Membership("subset does not belong to this carrier".into())),
        }
    }

    /// π-weight: exact for powersets, ℵ₀ for FinCofin.
    pub fn pi_weight(&self) -> Result<Cardinal> {
        match self {
            Algebra::Powerset(p) => Ok(Cardinal::Finite(p.pi_weight()?.0)),
            Algebra::FinCofin => Ok(Cardinal::Aleph0),
        }
    }
}
