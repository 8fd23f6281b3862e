//! Constructors for the graph families. Every constructor checks its output
//! against the known parameters before returning it.

use thiserror::Error;

use crate::field::FieldError;
use crate::graph::Graph;
use crate::space::SpaceError;
use crate::srg::{check_srg, SrgError, SrgParams};

mod cyclotomic;
mod hyperoval;
mod ivanov;
mod nonsingular;
mod planes;
mod polar;

pub use cyclotomic::{
    cyclotomic_class_counts, cyclotomic_connection_set, cyclotomic_four_vc, cyclotomic_graph, ClassCounts,
};
pub use hyperoval::{exterior_directions, hyperoval_graph, hyperoval_local_parameters, hyperoval_parameters};
pub use ivanov::{
    binary_cayley_graph, ivanov_gamma, ivanov_sigma, tee, upsilon, IvanovSigma, SigmaCoordinates,
};
pub use nonsingular::{no_graph, no_mu_valency, no_parameters, NoGraph};
pub use planes::{delta_bar, disjoint_planes_parameters, local_delta, sp6_disjoint_planes_graph, PlanesGraph};
pub use polar::{polar_collinearity_graph, polar_graph, polar_parameters, PolarGraph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error(transparent)]
    Srg(#[from] SrgError),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{family}: expected SRG{expected:?}, built {found:?}")]
    Postcondition {
        family: &'static str,
        expected: (u64, u64, u64, u64),
        found: Option<(u64, u64, u64, u64)>,
    },
}

/// Checks that `g` is strongly regular with exactly `expected` parameters.
pub(crate) fn expect_srg(
    family: &'static str,
    g: &Graph,
    expected: (u64, u64, u64, u64),
) -> Result<SrgParams, FamilyError> {
    let found = check_srg(g)?;
    match found {
        Some(p) if p.tuple() == expected => Ok(p),
        other => Err(FamilyError::Postcondition { family, expected, found: other.map(|p| p.tuple()) }),
    }
}

pub(crate) fn invalid(msg: impl Into<String>) -> FamilyError {
    FamilyError::InvalidParameter(msg.into())
}
