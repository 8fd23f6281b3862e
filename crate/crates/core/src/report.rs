//! Machine-readable analysis reports.

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::graph::Graph;
use crate::graph6;
use crate::srg::{check_srg, four_vertex_check, local_params, Eigenvalues, SrgError, Witness};
use crate::symmetry::{self, SymmetryError};

pub const SCHEMA_VERSION: u32 = 1;

/// sha256 of the graph6 encoding, in hex.
pub fn digest(g: &Graph) -> String {
    hex::encode(Sha256::digest(graph6::encode(g).as_bytes()))
}

#[derive(Debug, Clone, Default)]
pub struct AnalysisOptions {
    pub local: bool,
    pub automorphisms: bool,
}

/// One flat record per analysed graph. Fields that were not computed are
/// `null`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub digest: String,
    pub vertices: usize,
    pub edges: usize,
    pub srg: bool,
    pub v: Option<u64>,
    pub k: Option<u64>,
    pub lambda: Option<u64>,
    pub mu: Option<u64>,
    pub eigenvalues: Option<Eigenvalues>,
    pub multiplicities: Option<(u64, u64)>,
    pub four_vc: Option<bool>,
    pub alpha: Option<u64>,
    pub beta: Option<u64>,
    pub witness: Option<Witness>,
    pub sims_identity: Option<bool>,
    pub lambda_prime: Option<u64>,
    pub mu_prime: Option<u64>,
    pub aut_order: Option<String>,
    pub orbit_lengths: Option<Vec<usize>>,
    pub rank: Option<usize>,
    /// Wall-clock milliseconds; only filled on request so that reports stay
    /// byte-identical across runs by default.
    pub millis: Option<u64>,
}

#[derive(Debug, thiserror::Error)]
pub enum ReportError {
    #[error(transparent)]
    Srg(#[from] SrgError),
    #[error(transparent)]
    Symmetry(#[from] SymmetryError),
}

impl Report {
    pub fn analyse(command: &str, g: &Graph, opts: &AnalysisOptions) -> Result<Report, ReportError> {
        let mut r = Report {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            digest: digest(g),
            vertices: g.order(),
            edges: g.edge_count(),
            srg: false,
            v: None,
            k: None,
            lambda: None,
            mu: None,
            eigenvalues: None,
            multiplicities: None,
            four_vc: None,
            alpha: None,
            beta: None,
            witness: None,
            sims_identity: None,
            lambda_prime: None,
            mu_prime: None,
            aut_order: None,
            orbit_lengths: None,
            rank: None,
            millis: None,
        };
        let params = match check_srg(g) {
            Ok(p) => p,
            Err(SrgError::Complete | SrgError::Edgeless) => None,
            Err(e) => return Err(e.into()),
        };
        if let Some(p) = params {
            r.srg = true;
            (r.v, r.k, r.lambda, r.mu) = (Some(p.v), Some(p.k), Some(p.lambda), Some(p.mu));
            r.eigenvalues = Some(p.eigenvalues);
            r.multiplicities = Some((p.f, p.g));
            let fv = four_vertex_check(g)?;
            r.four_vc = Some(fv.satisfied);
            (r.alpha, r.beta, r.witness, r.sims_identity) = (fv.alpha, fv.beta, fv.witness, fv.sims_identity);
            if opts.local {
                let l = local_params(g);
                (r.lambda_prime, r.mu_prime) = (l.lambda_prime, l.mu_prime);
            }
        }
        if opts.automorphisms {
            let a = symmetry::automorphism_group(g)?;
            r.aut_order = Some(a.order.to_string());
            r.orbit_lengths = Some(a.orbit_lengths());
            r.rank = a.rank();
        }
        Ok(r)
    }

    /// Short human-readable summary.
    pub fn summary(&self) -> String {
        let mut s = format!("{} vertices, {} edges", self.vertices, self.edges);
        match (self.v, self.k, self.lambda, self.mu) {
            (Some(v), Some(k), Some(l), Some(m)) => s += &format!("; SRG({v},{k},{l},{m})"),
            _ => s += "; not SRG",
        }
        match (self.four_vc, self.alpha, self.beta, &self.witness) {
            (Some(true), Some(a), Some(b), _) => s += &format!("; 4VC alpha={a} beta={b}"),
            (Some(false), _, _, Some(w)) => {
                s += &format!("; 4VC fails at ({}, {}): {} edges, expected {}", w.x, w.y, w.observed, w.expected)
            }
            _ => {}
        }
        if let Some(l) = self.lambda_prime {
            s += &format!("; lambda'={l}");
        }
        if let Some(m) = self.mu_prime {
            s += &format!("; mu'={m}");
        }
        if let (Some(o), Some(orbits)) = (&self.aut_order, &self.orbit_lengths) {
            s += &format!("; |Aut|={o} orbits={orbits:?}");
            if let Some(rk) = self.rank {
                s += &format!(" rank {rk}");
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pentagon_report() {
        let r = Report::analyse("check", &Graph::cycle(5), &AnalysisOptions { local: true, automorphisms: true }).unwrap();
        assert_eq!((r.v, r.k, r.lambda, r.mu), (Some(5), Some(2), Some(0), Some(1)));
        assert_eq!((r.alpha, r.beta), (Some(0), Some(0)));
        assert_eq!(r.aut_order.as_deref(), Some("10"));
        assert_eq!(r.rank, Some(3));
        assert_eq!(r.digest.len(), 64);
        let again = Report::analyse("check", &Graph::cycle(5), &AnalysisOptions { local: true, automorphisms: true }).unwrap();
        assert_eq!(serde_json::to_string(&r).unwrap(), serde_json::to_string(&again).unwrap());
    }

    #[test]
    fn path_is_not_srg() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let r = Report::analyse("check", &g, &AnalysisOptions::default()).unwrap();
        assert!(!r.srg);
        assert!(r.summary().contains("not SRG"));
    }
}
