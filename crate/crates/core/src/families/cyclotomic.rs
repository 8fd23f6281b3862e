use rayon::prelude::*;
use serde::Serialize;

use crate::field::Field;
use crate::graph::Graph;
use crate::srg::{FourVcReport, SrgError, SrgParams, Witness};

use super::{invalid, FamilyError};

/// Membership table of `D = { eta^(ie+j) : j in J }` indexed by element.
pub fn cyclotomic_connection_set(f: &Field, e: u32, classes: &[u32]) -> Result<Vec<bool>, FamilyError> {
    let q = f.order();
    if e == 0 || ((q - 1) / 2) % e != 0 || q % 2 == 0 {
        return Err(invalid(format!("e = {e} must divide (q-1)/2 = {}", (q - 1) / 2)));
    }
    if let Some(&j) = classes.iter().find(|&&j| j >= e) {
        return Err(invalid(format!("class {j} is not below e = {e}")));
    }
    let mut member = vec![false; q as usize];
    for x in 1..q {
        let l = f.log(x).expect("nonzero element has a logarithm");
        member[x as usize] = classes.contains(&(l % e));
    }
    Ok(member)
}

/// Cayley graph on the additive group of `f` with connection set
/// `{ eta^(ie+j) : 0 <= i < (q-1)/e, j in J }`.
pub fn cyclotomic_graph(f: &Field, e: u32, classes: &[u32]) -> Result<Graph, FamilyError> {
    let member = cyclotomic_connection_set(f, e, classes)?;
    let q = f.order() as usize;
    Ok(Graph::from_fn_par(q, |a, b| member[f.sub(a as u32, b as u32) as usize]))
}

/// Counts at the pair `(0, eta^j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassCounts {
    pub class: u32,
    pub y: u32,
    pub adjacent: bool,
    pub common: u64,
    pub edges: u64,
    /// Least and greatest valency in the subgraph induced on the common
    /// neighbours.
    pub degree_range: (u64, u64),
}

/// Common-neighbour and 4-vertex counts for one pair per cyclotomic class.
/// The maps `x -> a x + b` with `a` an `e`-th power are automorphisms, so
/// every pair `(x, y)` is equivalent to `(0, eta^j)` where `j` is the class
/// of `y - x`.
pub fn cyclotomic_class_counts(f: &Field, e: u32, classes: &[u32]) -> Result<Vec<ClassCounts>, FamilyError> {
    let member = cyclotomic_connection_set(f, e, classes)?;
    let d: Vec<u32> = (1..f.order()).filter(|&x| member[x as usize]).collect();
    Ok((0..e)
        .map(|j| {
            let y = f.eta_pow(j as i64);
            let common: Vec<u32> = d.iter().copied().filter(|&z| member[f.sub(z, y) as usize]).collect();
            let degrees: Vec<u64> = common
                .par_iter()
                .map(|&a| common.iter().filter(|&&b| member[f.sub(a, b) as usize]).count() as u64)
                .collect();
            let edges = degrees.iter().sum::<u64>() / 2;
            let degree_range = (
                degrees.iter().copied().min().unwrap_or(0),
                degrees.iter().copied().max().unwrap_or(0),
            );
            ClassCounts { class: j, y, adjacent: classes.contains(&j), common: common.len() as u64, edges, degree_range }
        })
        .collect())
}

/// The 4-vertex check for a cyclotomic graph without building it.
pub fn cyclotomic_four_vc(f: &Field, e: u32, classes: &[u32]) -> Result<FourVcReport, FamilyError> {
    let counts = cyclotomic_class_counts(f, e, classes)?;
    let q = f.order() as u64;
    let k = (q - 1) / e as u64 * classes.len() as u64;
    let adj = counts.iter().find(|c| c.adjacent).ok_or(SrgError::Edgeless)?;
    let non = counts.iter().find(|c| !c.adjacent).ok_or(SrgError::Complete)?;
    if counts.iter().any(|c| c.common != if c.adjacent { adj.common } else { non.common }) {
        return Err(SrgError::NotSrg.into());
    }
    let params = SrgParams::new(q, k, adj.common, non.common)?;
    let witness = counts.iter().find(|c| c.edges != if c.adjacent { adj.edges } else { non.edges }).map(|c| Witness {
        x: 0,
        y: c.y as usize,
        adjacent: c.adjacent,
        observed: c.edges,
        expected: if c.adjacent { adj.edges } else { non.edges },
    });
    Ok(match witness {
        None => FourVcReport {
            params,
            satisfied: true,
            alpha: Some(adj.edges),
            beta: Some(non.edges),
            witness: None,
            sims_identity: Some(params.sims_identity(adj.edges, non.edges)),
        },
        Some(w) => FourVcReport { params, satisfied: false, alpha: None, beta: None, witness: Some(w), sims_identity: None },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::srg::check_srg;

    #[test]
    fn paley_13() {
        let f = Field::of_order(13).unwrap();
        let g = cyclotomic_graph(&f, 2, &[0]).unwrap();
        assert_eq!(check_srg(&g).unwrap().unwrap().tuple(), (13, 6, 2, 3));
    }

    #[test]
    fn class_counts_match_the_graph() {
        let f = Field::of_order(121).unwrap();
        let fast = cyclotomic_four_vc(&f, 6, &[0, 1, 2]).unwrap();
        let slow = crate::srg::four_vertex_check(&cyclotomic_graph(&f, 6, &[0, 1, 2]).unwrap()).unwrap();
        assert_eq!(fast.params, slow.params);
        assert_eq!((fast.alpha, fast.beta), (slow.alpha, slow.beta));
        let f = Field::of_order(13).unwrap();
        let paley = cyclotomic_four_vc(&f, 2, &[0]).unwrap();
        assert_eq!(paley.params.tuple(), (13, 6, 2, 3));
    }

    #[test]
    fn preconditions() {
        let f = Field::of_order(13).unwrap();
        assert!(cyclotomic_graph(&f, 4, &[0]).is_err());
        assert!(cyclotomic_graph(&f, 3, &[3]).is_err());
        let f = Field::of_order(8).unwrap();
        assert!(cyclotomic_graph(&f, 1, &[0]).is_err());
    }
}
