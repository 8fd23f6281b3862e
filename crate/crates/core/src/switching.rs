//! Switching the collinearity graph of a polar space along a maximal totally
//! isotropic subspace `U`.
//!
//! Points of `U` are numbered `0..m_d` in increasing projective order; this
//! numbering is also the point set of every design used on `U`. Hyperplanes
//! of `U` are ordered lexicographically by their sorted point sets, and a
//! bijection `phi` maps hyperplane `h` to block `phi[h]`.

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::design::{DesignError, SymmetricDesign};
use crate::families::{polar_graph, FamilyError, PolarGraph};
use crate::field::Field;
use crate::graph::Graph;
use crate::linalg;
use crate::perm::{self, Perm, PermError, PermGroup};
use crate::space::{FormedSpace, ProjectiveSpace, SpaceError, SpaceParams, Subspace};

/// Largest group closed by [`pgl_on_hyperplanes`].
pub const PGL_CAP: usize = 20_200;

#[derive(Debug, Error)]
pub enum SwitchingError {
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Design(#[from] DesignError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("U is not totally isotropic")]
    NotIsotropic,
    #[error("U has dimension {dim} but maximal totally isotropic subspaces have dimension {witt}")]
    NotMaximal { dim: usize, witt: usize },
    #[error("rank {0} is below 3")]
    RankTooSmall(usize),
    #[error("U has {0} points; at most 64 are supported")]
    TooManyPoints(usize),
    #[error("vertex {0} meets U in something other than a hyperplane")]
    NotAHyperplane(usize),
    #[error("design 2-({v}, {k}, {lambda}) does not match 2-({ev}, {ek}, {elambda}) on U")]
    DesignMismatch { v: usize, k: usize, lambda: usize, ev: usize, ek: usize, elambda: usize },
    #[error("phi is not a bijection onto {0} blocks")]
    NotABijection(usize),
    #[error("the two hyperplanes coincide")]
    SameHyperplane,
    #[error("unknown design {0:?}")]
    UnknownDesign(String),
    #[error("{path}: {msg}")]
    Io { path: String, msg: String },
}

/// `PG(d-1, q)` with its hyperplanes; the local model of `U`.
#[derive(Debug)]
pub struct Frame {
    proj: ProjectiveSpace,
    hyperplanes: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, usize>,
}

impl Frame {
    pub fn new(field: Arc<Field>, d: usize) -> Result<Frame, SpaceError> {
        let proj = ProjectiveSpace::new(field, d)?;
        let hyperplanes: Vec<Vec<u32>> = proj
            .hyperplanes_of(&Subspace::whole(d))?
            .iter()
            .map(|h| proj.subspace_points(h))
            .collect();
        let index = hyperplanes.iter().enumerate().map(|(i, h)| (h.clone(), i)).collect();
        Ok(Frame { proj, hyperplanes, index })
    }

    pub fn dim(&self) -> usize {
        self.proj.dim()
    }

    pub fn point_count(&self) -> usize {
        self.proj.point_count()
    }

    pub fn hyperplanes(&self) -> &[Vec<u32>] {
        &self.hyperplanes
    }

    pub fn hyperplane_index(&self, points: &[u32]) -> Option<usize> {
        self.index.get(points).copied()
    }

    /// Hyperplane design of `PG(d-1, q)`; block `i` is hyperplane `i`.
    pub fn hyperplane_design(&self) -> SymmetricDesign {
        let (v, k) = (self.point_count(), self.hyperplanes[0].len());
        let lambda = k * (k - 1) / (v - 1);
        SymmetricDesign::new(v, k, lambda, self.hyperplanes.clone()).expect("hyperplanes form a symmetric design")
    }

    /// Rank of the span of a set of points.
    pub fn span_dim(&self, points: &[u32]) -> usize {
        let rows: Vec<Vec<u32>> = points.iter().map(|&p| self.proj.point(p).to_vec()).collect();
        linalg::rank(self.proj.field(), &rows)
    }

    /// Action on hyperplanes of the collineation `x -> (x M)^sigma`, where
    /// `sigma` is the `frob`-th power of the Frobenius map.
    pub fn hyperplane_action(&self, m: &[Vec<u32>], frob: u32) -> Perm {
        let f = self.proj.field();
        let on_points: Vec<u32> = self
            .proj
            .points()
            .iter()
            .map(|x| {
                let mut y = linalg::vec_mat(f, x, m);
                for _ in 0..frob {
                    y = y.iter().map(|&c| f.frobenius(c)).collect();
                }
                self.proj.point_index(&y).expect("nonsingular matrix")
            })
            .collect();
        self.hyperplanes
            .iter()
            .map(|h| {
                let mut img: Vec<u32> = h.iter().map(|&p| on_points[p as usize]).collect();
                img.sort_unstable();
                self.index[&img]
            })
            .collect()
    }

    /// Generators of `PGammaL(d, q)` acting on hyperplanes: elementary
    /// transvections, one diagonal matrix and the Frobenius map.
    pub fn collineation_generators(&self) -> Vec<Perm> {
        let f = self.proj.field();
        let d = self.dim();
        let unit = |i: usize, j: usize| if i == j { 1 } else { 0 };
        let mut gens = Vec::new();
        for i in 0..d {
            for j in (0..d).filter(|&j| j != i) {
                let m: Vec<Vec<u32>> =
                    (0..d).map(|r| (0..d).map(|c| if (r, c) == (i, j) { 1 } else { unit(r, c) }).collect()).collect();
                gens.push(self.hyperplane_action(&m, 0));
            }
        }
        if f.order() > 2 {
            let m: Vec<Vec<u32>> =
                (0..d).map(|r| (0..d).map(|c| if (r, c) == (0, 0) { f.eta() } else { unit(r, c) }).collect()).collect();
            gens.push(self.hyperplane_action(&m, 0));
        }
        if f.degree() > 1 {
            let id: Vec<Vec<u32>> = (0..d).map(|r| (0..d).map(|c| unit(r, c)).collect()).collect();
            gens.push(self.hyperplane_action(&id, 1));
        }
        gens.retain(|g| !perm::is_identity(g));
        gens.sort();
        gens.dedup();
        gens
    }
}

/// `PGammaL(d, q)` acting on the hyperplanes of `PG(d-1, q)`, closed by
/// breadth-first multiplication.
pub fn pgl_on_hyperplanes(d: usize, q: u32) -> Result<PermGroup, SwitchingError> {
    let frame = Frame::new(Arc::new(Field::of_order(q).map_err(SpaceError::from)?), d)?;
    let gens = frame.collineation_generators();
    Ok(PermGroup::from_generators(frame.hyperplanes.len(), gens, PGL_CAP)?)
}

/// The polar graph of a space together with everything the switching
/// construction needs about `U`.
#[derive(Debug)]
pub struct SwitchingContext {
    space: Arc<FormedSpace>,
    u: Subspace,
    polar: PolarGraph,
    frame: Frame,
    /// Graph vertex of each local point of `U`.
    u_vertices: Vec<usize>,
    in_u: Vec<bool>,
    /// For vertices outside `U`, the hyperplane `y^perp ∩ U`.
    hyperplane_of: Vec<Option<usize>>,
}

impl SwitchingContext {
    pub fn new(space: Arc<FormedSpace>, u: Subspace) -> Result<SwitchingContext, SwitchingError> {
        let d = u.dim();
        if !space.is_totally_isotropic(&u) {
            return Err(SwitchingError::NotIsotropic);
        }
        if d != space.witt_index() {
            return Err(SwitchingError::NotMaximal { dim: d, witt: space.witt_index() });
        }
        if d < 3 {
            return Err(SwitchingError::RankTooSmall(d));
        }
        let frame = Frame::new(space.field().clone(), d)?;
        if frame.point_count() > 64 {
            return Err(SwitchingError::TooManyPoints(frame.point_count()));
        }
        let polar = polar_graph(&space)?;
        let f = space.field();
        let proj = space.projective();
        // local point c corresponds to sum c_i b_i; the order is preserved
        let u_points: Vec<u32> = frame
            .proj
            .points()
            .iter()
            .map(|c| {
                let mut v = vec![0u32; space.dim()];
                for (ci, b) in c.iter().zip(u.basis()) {
                    v = linalg::axpy(f, &v, *ci, b);
                }
                proj.point_index(&v).expect("nonzero vector")
            })
            .collect();
        debug_assert!(u_points.windows(2).all(|w| w[0] < w[1]));
        let u_vertices: Vec<usize> =
            u_points.iter().map(|&p| polar.vertex_of(p).expect("points of U are singular")).collect();
        let n = polar.graph.order();
        let mut in_u = vec![false; n];
        for &x in &u_vertices {
            in_u[x] = true;
        }
        let mut hyperplane_of = vec![None; n];
        for y in (0..n).filter(|&y| !in_u[y]) {
            let meet: Vec<u32> = u_vertices
                .iter()
                .enumerate()
                .filter(|&(_, &x)| polar.graph.has_edge(x, y))
                .map(|(i, _)| i as u32)
                .collect();
            let h = frame.hyperplane_index(&meet).ok_or(SwitchingError::NotAHyperplane(y))?;
            hyperplane_of[y] = Some(h);
        }
        Ok(SwitchingContext { space, u, polar, frame, u_vertices, in_u, hyperplane_of })
    }

    /// Context for the standard maximal subspace of a standard space.
    pub fn standard(space: FormedSpace) -> Result<SwitchingContext, SwitchingError> {
        let u = space.standard_maximal_subspace();
        SwitchingContext::new(Arc::new(space), u)
    }

    pub fn space(&self) -> &Arc<FormedSpace> {
        &self.space
    }

    pub fn u(&self) -> &Subspace {
        &self.u
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn polar(&self) -> &PolarGraph {
        &self.polar
    }

    /// The unswitched collinearity graph.
    pub fn gamma0(&self) -> &Graph {
        &self.polar.graph
    }

    pub fn u_vertices(&self) -> &[usize] {
        &self.u_vertices
    }

    pub fn hyperplane_count(&self) -> usize {
        self.frame.hyperplanes.len()
    }

    pub fn hyperplane_of(&self, vertex: usize) -> Option<usize> {
        self.hyperplane_of[vertex]
    }

    pub fn hyperplane_design(&self) -> SymmetricDesign {
        self.frame.hyperplane_design()
    }

    fn check(&self, design: &SymmetricDesign, phi: &[usize]) -> Result<(), SwitchingError> {
        let v = self.frame.point_count();
        let k = self.frame.hyperplanes[0].len();
        let lambda = k * (k - 1) / (v - 1);
        if (design.points(), design.block_size(), design.lambda()) != (v, k, lambda) {
            return Err(SwitchingError::DesignMismatch {
                v: design.points(),
                k: design.block_size(),
                lambda: design.lambda(),
                ev: v,
                ek: k,
                elambda: lambda,
            });
        }
        if phi.len() != v || !perm::is_permutation(phi) {
            return Err(SwitchingError::NotABijection(v));
        }
        Ok(())
    }

    /// `Gamma_phi`: `U` stays a clique, pairs outside `U` keep their polar
    /// adjacency, and `x ∈ U`, `y ∉ U` are adjacent iff `x` lies in block
    /// `phi[h]` where `h = y^perp ∩ U`.
    pub fn build(&self, design: &SymmetricDesign, phi: &[usize]) -> Result<Graph, SwitchingError> {
        self.check(design, phi)?;
        let mut b = self.polar.graph.to_builder();
        for y in 0..self.polar.graph.order() {
            let Some(h) = self.hyperplane_of[y] else { continue };
            for &x in &self.u_vertices {
                b.remove_edge(x, y);
            }
            for &p in &design.blocks()[phi[h]] {
                b.add_edge(self.u_vertices[p as usize], y);
            }
        }
        Ok(b.build())
    }

    /// `Gamma_phi` for a permutation of the hyperplanes.
    pub fn build_permutation(&self, phi: &[usize]) -> Result<Graph, SwitchingError> {
        self.build(&self.hyperplane_design(), phi)
    }

    /// Interchanges the roles of hyperplanes `h1` and `h2`: vertices outside
    /// `U` whose neighbourhood in `U` is one of them are joined to the other
    /// instead.
    pub fn wqh_swap(&self, g: &Graph, h1: usize, h2: usize) -> Result<Graph, SwitchingError> {
        let n = self.hyperplane_count();
        if h1 >= n || h2 >= n {
            return Err(SwitchingError::NotABijection(n));
        }
        if h1 == h2 {
            return Err(SwitchingError::SameHyperplane);
        }
        let mut b = g.to_builder();
        let hp = &self.frame.hyperplanes;
        for y in (0..g.order()).filter(|&y| !self.in_u[y]) {
            let meet: Vec<u32> =
                (0..self.u_vertices.len() as u32).filter(|&i| g.has_edge(self.u_vertices[i as usize], y)).collect();
            let target = if meet == hp[h1] {
                h2
            } else if meet == hp[h2] {
                h1
            } else {
                continue;
            };
            for &x in &self.u_vertices {
                b.remove_edge(x, y);
            }
            for &p in &hp[target] {
                b.add_edge(self.u_vertices[p as usize], y);
            }
        }
        Ok(b.build())
    }

    /// Emptying and dually emptying points of `U` for `phi`.
    pub fn emptying_analysis(&self, design: &SymmetricDesign, phi: &[usize]) -> Result<EmptyingReport, SwitchingError> {
        self.check(design, phi)?;
        let v = self.frame.point_count();
        let mask = |pts: &[u32]| pts.iter().fold(0u64, |m, &p| m | 1 << p);
        let hyper: Vec<u64> = self.frame.hyperplanes.iter().map(|h| mask(h)).collect();
        let block: Vec<u64> = design.blocks().iter().map(|b| mask(b)).collect();
        let full = if v == 64 { u64::MAX } else { (1u64 << v) - 1 };
        let emptying: Vec<bool> = (0..v)
            .map(|e| {
                let meet = (0..v).filter(|&h| block[phi[h]] >> e & 1 == 1).fold(full, |m, h| m & hyper[h]);
                meet == 0
            })
            .collect();
        let dually: Vec<bool> = (0..v)
            .map(|f| {
                let meet = (0..v).filter(|&h| hyper[h] >> f & 1 == 1).fold(full, |m, h| m & block[phi[h]]);
                meet == 0
            })
            .collect();
        let spans = |flags: &[bool]| {
            let pts: Vec<u32> = (0..v as u32).filter(|&p| flags[p as usize]).collect();
            self.frame.span_dim(&pts) == self.frame.dim()
        };
        Ok(EmptyingReport {
            is_emptying: spans(&emptying),
            is_dually_emptying: spans(&dually),
            emptying,
            dually_emptying: dually,
        })
    }

    pub fn in_u(&self, vertex: usize) -> bool {
        self.in_u[vertex]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmptyingReport {
    pub emptying: Vec<bool>,
    pub dually_emptying: Vec<bool>,
    /// `U` is spanned by emptying points.
    pub is_emptying: bool,
    /// `U` is spanned by dually emptying points.
    pub is_dually_emptying: bool,
}

/// A uniformly random bijection of `0..n`.
pub fn random_phi(rng: &mut impl Rng, n: usize) -> Perm {
    let mut p = perm::identity(n);
    p.shuffle(rng);
    p
}

/// Full input of the switching construction.
#[derive(Debug, Clone)]
pub struct SwitchingPlan {
    pub space: Arc<FormedSpace>,
    pub u: Subspace,
    pub design: Option<SymmetricDesign>,
    pub phi: Perm,
}

/// Source of the design in a plan file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DesignSource {
    /// Only `"pg-hyperplanes"` is recognised.
    Named(String),
    File { file: PathBuf },
}

/// JSON plan file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanFile {
    pub space: SpaceParams,
    #[serde(rename = "U")]
    pub u: Vec<u32>,
    pub design: DesignSource,
    pub phi: Vec<usize>,
}

impl SwitchingPlan {
    /// Resolves a plan file; relative design paths are taken relative to
    /// `base_dir`.
    pub fn from_file_spec(plan: &PlanFile, base_dir: &Path) -> Result<SwitchingPlan, SwitchingError> {
        let space = Arc::new(FormedSpace::from_params(&plan.space)?);
        let u = space.projective().subspace_from_points(&plan.u)?;
        let design = match &plan.design {
            DesignSource::Named(name) if name == "pg-hyperplanes" => None,
            DesignSource::Named(name) => return Err(SwitchingError::UnknownDesign(name.clone())),
            DesignSource::File { file } => Some(SymmetricDesign::from_file(&base_dir.join(file))?),
        };
        Ok(SwitchingPlan { space, u, design, phi: plan.phi.clone() })
    }

    pub fn load(path: &Path) -> Result<SwitchingPlan, SwitchingError> {
        let io = |msg: String| SwitchingError::Io { path: path.display().to_string(), msg };
        let text = std::fs::read_to_string(path).map_err(|e| io(e.to_string()))?;
        let plan: PlanFile = serde_json::from_str(&text).map_err(|e| io(e.to_string()))?;
        SwitchingPlan::from_file_spec(&plan, path.parent().unwrap_or(Path::new(".")))
    }
}

/// Builds `Gamma_phi` for a plan.
pub fn build_gamma_phi(plan: &SwitchingPlan) -> Result<Graph, SwitchingError> {
    let ctx = SwitchingContext::new(plan.space.clone(), plan.u.clone())?;
    let design = plan.design.clone().unwrap_or_else(|| ctx.hyperplane_design());
    ctx.build(&design, &plan.phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::srg::{check_srg, four_vertex_check};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn sp6_2() -> SwitchingContext {
        let f = Arc::new(Field::of_order(2).unwrap());
        SwitchingContext::standard(FormedSpace::symplectic(f, 6).unwrap()).unwrap()
    }

    #[test]
    fn identity_gives_gamma0() {
        let ctx = sp6_2();
        let g = ctx.build_permutation(&perm::identity(7)).unwrap();
        assert_eq!(&g, ctx.gamma0());
    }

    #[test]
    fn transposition_and_swap_agree() {
        let ctx = sp6_2();
        let t = perm::transposition(7, 1, 4);
        let g = ctx.build_permutation(&t).unwrap();
        assert_eq!(ctx.wqh_swap(ctx.gamma0(), 1, 4).unwrap(), g);
        assert_eq!(&ctx.wqh_swap(&g, 1, 4).unwrap(), ctx.gamma0());
        let r = four_vertex_check(&g).unwrap();
        assert_eq!(r.params.tuple(), (63, 30, 13, 15));
        assert_eq!((r.alpha, r.beta), (Some(30), Some(45)));
        assert!(matches!(ctx.wqh_swap(&g, 2, 2), Err(SwitchingError::SameHyperplane)));
    }

    #[test]
    fn pgl_orders() {
        assert_eq!(pgl_on_hyperplanes(3, 2).unwrap().order(), 168);
        assert_eq!(pgl_on_hyperplanes(3, 3).unwrap().order(), 5616);
    }

    #[test]
    fn identity_is_not_emptying() {
        let ctx = sp6_2();
        let r = ctx.emptying_analysis(&ctx.hyperplane_design(), &perm::identity(7)).unwrap();
        assert!(r.emptying.iter().all(|&e| !e));
        assert!(!r.is_emptying && !r.is_dually_emptying);
    }

    #[test]
    fn dually_emptying_outside_the_collineation_group() {
        let ctx = sp6_2();
        let group = pgl_on_hyperplanes(3, 2).unwrap();
        let design = ctx.hyperplane_design();
        for r in 0..5040 {
            let phi = perm::unrank(r, 7);
            let e = ctx.emptying_analysis(&design, &phi).unwrap();
            assert_eq!(e.is_dually_emptying, !group.contains(&phi), "phi = {phi:?}");
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        let ctx = sp6_2();
        assert!(matches!(ctx.build_permutation(&[0, 1, 2]), Err(SwitchingError::NotABijection(7))));
        assert!(matches!(ctx.build_permutation(&[0, 0, 1, 2, 3, 4, 5]), Err(SwitchingError::NotABijection(7))));
        let f = Arc::new(Field::of_order(2).unwrap());
        let space = Arc::new(FormedSpace::symplectic(f.clone(), 6).unwrap());
        let line = Subspace::span(&f, 6, &[vec![1, 0, 0, 0, 0, 0], vec![0, 0, 1, 0, 0, 0]]);
        assert!(matches!(SwitchingContext::new(space.clone(), line), Err(SwitchingError::NotMaximal { .. })));
        let bad = Subspace::span(&f, 6, &[vec![1, 0, 0, 0, 0, 0], vec![0, 1, 0, 0, 0, 0], vec![0, 0, 1, 0, 0, 0]]);
        assert!(matches!(SwitchingContext::new(space, bad), Err(SwitchingError::NotIsotropic)));
    }

    #[test]
    fn sp8_2_random_phi() {
        let f = Arc::new(Field::of_order(2).unwrap());
        let ctx = SwitchingContext::standard(FormedSpace::symplectic(f, 8).unwrap()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let phi = random_phi(&mut rng, 15);
        let g = ctx.build_permutation(&phi).unwrap();
        assert_eq!(check_srg(&g).unwrap().unwrap().tuple(), (255, 126, 61, 63));
    }
}
