//! Named constructors, addressable from JSON or command-line flags.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::families::{self, FamilyError};
use crate::field::{Field, FieldParams};
use crate::graph::Graph;
use crate::space::{FormKind, FormedSpace};

/// A family name with its parameters, e.g.
/// `{"family": "no", "m": 2, "q": 5, "eps": -1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case", deny_unknown_fields)]
pub enum FamilySpec {
    /// Collinearity graph of the polar space of rank `d`.
    Polar { form: FormKind, d: usize, q: u32 },
    /// Nonsingular points of type `eps` in dimension `2m + 1`, joined by tangents.
    No { m: u32, q: u32, eps: i8 },
    DisjointPlanes { q: u32 },
    LocalDelta { q: u32 },
    DeltaBar { q: u32 },
    Hyperoval { q: u32 },
    Cyclotomic {
        q: u32,
        e: u32,
        #[serde(rename = "J")]
        classes: Vec<u32>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        modulus: Option<Vec<u32>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        eta: Option<u32>,
    },
    IvanovGamma { m: u32 },
    IvanovSigma { m: u32 },
    Tee { m: u32 },
    Upsilon { m: u32 },
}

pub const FAMILY_NAMES: &[&str] = &[
    "polar",
    "no",
    "disjoint-planes",
    "local-delta",
    "delta-bar",
    "hyperoval",
    "cyclotomic",
    "ivanov-gamma",
    "ivanov-sigma",
    "tee",
    "upsilon",
];

/// Vector space dimension of a polar space of rank `d`.
pub fn polar_dimension(form: FormKind, d: usize) -> usize {
    match form {
        FormKind::Symplectic | FormKind::Hyperbolic => 2 * d,
        FormKind::Parabolic => 2 * d + 1,
        FormKind::Elliptic => 2 * d + 2,
    }
}

/// Field of order `q`, with an explicit modulus and primitive element when
/// given.
pub fn field_for(q: u32, modulus: Option<Vec<u32>>, eta: Option<u32>) -> Result<Field, FamilyError> {
    let (p, k) = crate::field::prime_power(q).ok_or_else(|| families::invalid(format!("{q} is not a prime power")))?;
    Ok(Field::from_params(&FieldParams { p, k, modulus, eta })?)
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Polar { .. } => "polar",
            FamilySpec::No { .. } => "no",
            FamilySpec::DisjointPlanes { .. } => "disjoint-planes",
            FamilySpec::LocalDelta { .. } => "local-delta",
            FamilySpec::DeltaBar { .. } => "delta-bar",
            FamilySpec::Hyperoval { .. } => "hyperoval",
            FamilySpec::Cyclotomic { .. } => "cyclotomic",
            FamilySpec::IvanovGamma { .. } => "ivanov-gamma",
            FamilySpec::IvanovSigma { .. } => "ivanov-sigma",
            FamilySpec::Tee { .. } => "tee",
            FamilySpec::Upsilon { .. } => "upsilon",
        }
    }

    pub fn build(&self) -> Result<Graph, FamilyError> {
        Ok(match self {
            FamilySpec::Polar { form, d, q } => {
                let f = Arc::new(field_for(*q, None, None)?);
                let space = FormedSpace::standard(f, *form, polar_dimension(*form, *d))?;
                families::polar_graph(&space)?.graph
            }
            FamilySpec::No { m, q, eps } => families::no_graph(*m, *q, *eps)?.graph,
            FamilySpec::DisjointPlanes { q } => families::sp6_disjoint_planes_graph(*q)?.graph,
            FamilySpec::LocalDelta { q } => families::local_delta(*q)?,
            FamilySpec::DeltaBar { q } => families::delta_bar(*q)?,
            FamilySpec::Hyperoval { q } => families::hyperoval_graph(*q)?,
            FamilySpec::Cyclotomic { q, e, classes, modulus, eta } => {
                let f = field_for(*q, modulus.clone(), *eta)?;
                families::cyclotomic_graph(&f, *e, classes)?
            }
            FamilySpec::IvanovGamma { m } => families::ivanov_gamma(*m)?,
            FamilySpec::IvanovSigma { m } => families::ivanov_sigma(*m)?.sigma,
            FamilySpec::Tee { m } => families::tee(*m)?,
            FamilySpec::Upsilon { m } => families::upsilon(*m)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let s: FamilySpec = serde_json::from_str(r#"{"family":"cyclotomic","q":121,"e":6,"J":[0,1,2]}"#).unwrap();
        assert_eq!(s, FamilySpec::Cyclotomic { q: 121, e: 6, classes: vec![0, 1, 2], modulus: None, eta: None });
        let back: FamilySpec = serde_json::from_str(&serde_json::to_string(&s).unwrap()).unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<FamilySpec>(r#"{"family":"nope"}"#).is_err());
        assert_eq!(FAMILY_NAMES.len(), 11);
    }

    #[test]
    fn polar_sp6_2() {
        let g = FamilySpec::Polar { form: FormKind::Symplectic, d: 3, q: 2 }.build().unwrap();
        assert_eq!(g.order(), 63);
        assert_eq!(polar_dimension(FormKind::Elliptic, 2), 6);
    }
}
