//! Dense linear algebra over a [`Field`]. Vectors are `Vec<u32>` of element
//! indices; matrices are row lists.

use crate::field::Field;

pub type Vector = Vec<u32>;

pub fn add(f: &Field, a: &[u32], b: &[u32]) -> Vector {
    a.iter().zip(b).map(|(&x, &y)| f.add(x, y)).collect()
}

pub fn scale(f: &Field, c: u32, a: &[u32]) -> Vector {
    a.iter().map(|&x| f.mul(c, x)).collect()
}

/// `a + c*b`
pub fn axpy(f: &Field, a: &[u32], c: u32, b: &[u32]) -> Vector {
    a.iter().zip(b).map(|(&x, &y)| f.add(x, f.mul(c, y))).collect()
}

pub fn dot(f: &Field, a: &[u32], b: &[u32]) -> u32 {
    a.iter().zip(b).fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
}

pub fn is_zero(a: &[u32]) -> bool {
    a.iter().all(|&x| x == 0)
}

/// Scales `a` so its first nonzero entry is 1. Zero stays zero.
pub fn normalize(f: &Field, a: &[u32]) -> Vector {
    match a.iter().find(|&&x| x != 0) {
        Some(&lead) if lead != 1 => {
            let inv = f.inv(lead).expect("nonzero lead");
            scale(f, inv, a)
        }
        _ => a.to_vec(),
    }
}

/// Reduced row-echelon form with zero rows removed.
pub fn rref(f: &Field, rows: &[Vector]) -> Vec<Vector> {
    let mut m: Vec<Vector> = rows.to_vec();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = f.inv(m[rank][col]).expect("pivot nonzero");
        m[rank] = scale(f, inv, &m[rank]);
        for r in 0..m.len() {
            if r != rank && m[r][col] != 0 {
                let c = f.neg(m[r][col]);
                let pivot_row = m[rank].clone();
                m[r] = axpy(f, &m[r], c, &pivot_row);
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    m.truncate(rank);
    m
}

pub fn rank(f: &Field, rows: &[Vector]) -> usize {
    rref(f, rows).len()
}

/// Basis of `{x : rows . x = 0}` in reduced echelon form.
pub fn nullspace(f: &Field, rows: &[Vector], ncols: usize) -> Vec<Vector> {
    let r = rref(f, rows);
    let pivots: Vec<usize> = r
        .iter()
        .map(|row| row.iter().position(|&x| x != 0).unwrap())
        .collect();
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0u32; ncols];
        v[free] = 1;
        for (row, &pc) in r.iter().zip(&pivots) {
            v[pc] = f.neg(row[free]);
        }
        basis.push(v);
    }
    rref(f, &basis)
}

pub fn determinant(f: &Field, m: &[Vector]) -> u32 {
    let n = m.len();
    let mut a: Vec<Vector> = m.to_vec();
    let mut det = 1u32;
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| a[r][col] != 0) else {
            return 0;
        };
        if piv != col {
            a.swap(piv, col);
            det = f.neg(det);
        }
        det = f.mul(det, a[col][col]);
        let inv = f.inv(a[col][col]).unwrap();
        for r in col + 1..n {
            if a[r][col] != 0 {
                let c = f.neg(f.mul(a[r][col], inv));
                let prow = a[col].clone();
                a[r] = axpy(f, &a[r], c, &prow);
            }
        }
    }
    det
}

/// `x^T M` for a square matrix `M`.
pub fn vec_mat(f: &Field, x: &[u32], m: &[Vector]) -> Vector {
    let n = m.first().map_or(0, |r| r.len());
    let mut out = vec![0u32; n];
    for (i, &xi) in x.iter().enumerate() {
        if xi != 0 {
            out = axpy(f, &out, xi, &m[i]);
        }
    }
    out
}

/// Every vector of `GF(q)^n` in increasing big-endian code order.
pub fn all_vectors(q: u32, n: usize) -> impl Iterator<Item = Vector> {
    let total = (q as u64).pow(n as u32);
    (0..total).map(move |code| decode(code, q, n))
}

/// Big-endian base-`q` code of a vector; code order is lexicographic order.
#[inline]
pub fn encode(v: &[u32], q: u32) -> u64 {
    v.iter().fold(0u64, |acc, &x| acc * q as u64 + x as u64)
}

pub fn decode(mut code: u64, q: u32, n: usize) -> Vector {
    let mut v = vec![0u32; n];
    for i in (0..n).rev() {
        v[i] = (code % q as u64) as u32;
        code /= q as u64;
    }
    v
}

/// All linear combinations of `basis` (including zero), in code order of
/// the coefficient vectors.
pub fn span(f: &Field, basis: &[Vector], n: usize) -> Vec<Vector> {
    let q = f.order();
    let d = basis.len();
    all_vectors(q, d)
        .map(|coef| {
            let mut v = vec![0u32; n];
            for (c, b) in coef.iter().zip(basis) {
                if *c != 0 {
                    v = axpy(f, &v, *c, b);
                }
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_and_nullspace() {
        let f = Field::of_order(3).unwrap();
        let rows = vec![vec![1, 1, 0, 2], vec![2, 2, 0, 1], vec![0, 1, 1, 0]];
        let r = rref(&f, &rows);
        assert_eq!(r.len(), 2);
        let ns = nullspace(&f, &rows, 4);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for row in &rows {
                assert_eq!(dot(&f, row, v), 0);
            }
        }
    }

    #[test]
    fn determinant_matches_cofactor() {
        let f = Field::of_order(7).unwrap();
        let m = vec![vec![2, 3], vec![5, 4]];
        // 8 - 15 = -7 = 0 mod 7
        assert_eq!(determinant(&f, &m), 0);
        let m = vec![vec![1, 2, 0], vec![0, 1, 3], vec![4, 0, 1]];
        // 1*(1) - 2*(0 - 12) = 25 = 4 mod 7
        assert_eq!(determinant(&f, &m), 4);
    }

    #[test]
    fn code_order_is_lexicographic() {
        let v: Vec<Vector> = all_vectors(3, 2).collect();
        assert_eq!(v[1], vec![0, 1]);
        assert_eq!(v[3], vec![1, 0]);
        assert_eq!(encode(&v[5], 3), 5);
    }
}
