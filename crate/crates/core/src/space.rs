//! Finite vector spaces, their projective points and subspaces, and the
//! symplectic / quadratic forms that turn them into polar spaces.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::{Field, FieldError, FieldParams};
use crate::linalg::{self, Vector};

/// Cap on the number of projective points of an enumerated space.
pub const MAX_POINTS: usize = 100_000;

const NO_POINT: u32 = u32::MAX;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpaceError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("dimension {0} is invalid for this form")]
    BadDimension(usize),
    #[error("space has {0} points, more than the supported {MAX_POINTS}")]
    TooManyPoints(u64),
    #[error("form is degenerate")]
    Degenerate,
    #[error("gram matrix is not alternating")]
    NotAlternating,
    #[error("declared form type {declared} but the form has Witt index {witt} in dimension {n}")]
    WrongType { declared: FormKind, witt: usize, n: usize },
    #[error("requested dimension {dim} exceeds the Witt index {witt}")]
    AboveWittIndex { dim: usize, witt: usize },
    #[error("point {0} is singular")]
    SingularPoint(u32),
    #[error("point types need a quadratic form in odd dimension over a field of odd order")]
    NoPointTypes,
    #[error("point {0} does not exist")]
    NoSuchPoint(u32),
    #[error("the given points are not the point set of a subspace")]
    NotASubspace,
    #[error("subspace has dimension {0}; hyperplanes need dimension at least 2")]
    TooSmall(usize),
    #[error("the two points coincide")]
    SamePoint,
}

/// A subspace given by its reduced row-echelon basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    basis: Vec<Vector>,
    n: usize,
}

impl Subspace {
    pub fn span(field: &Field, n: usize, vectors: &[Vector]) -> Subspace {
        Subspace { basis: linalg::rref(field, vectors), n }
    }

    pub fn zero(n: usize) -> Subspace {
        Subspace { basis: Vec::new(), n }
    }

    pub fn whole(n: usize) -> Subspace {
        let basis = (0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                v
            })
            .collect();
        Subspace { basis, n }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn contains(&self, field: &Field, v: &[u32]) -> bool {
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        linalg::rank(field, &rows) == self.dim()
    }

    pub fn contains_subspace(&self, field: &Field, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(field, v))
    }

    pub fn intersection(&self, field: &Field, other: &Subspace) -> Subspace {
        // x = sum a_i s_i = sum b_j t_j  <=>  (a, -b) in nullspace of [S; T]^T
        let (ds, dt) = (self.dim(), other.dim());
        if ds == 0 || dt == 0 {
            return Subspace::zero(self.n);
        }
        let eqs: Vec<Vector> = (0..self.n)
            .map(|c| {
                self.basis
                    .iter()
                    .map(|s| s[c])
                    .chain(other.basis.iter().map(|t| field.neg(t[c])))
                    .collect()
            })
            .collect();
        let ns = linalg::nullspace(field, &eqs, ds + dt);
        let vecs: Vec<Vector> = ns
            .iter()
            .map(|coef| {
                let mut v = vec![0; self.n];
                for (a, s) in coef[..ds].iter().zip(&self.basis) {
                    v = linalg::axpy(field, &v, *a, s);
                }
                v
            })
            .collect();
        Subspace::span(field, self.n, &vecs)
    }

    pub fn join(&self, field: &Field, other: &Subspace) -> Subspace {
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Subspace::span(field, self.n, &rows)
    }
}

/// `PG(n-1, q)` with its points listed in lexicographic order of their
/// normalized coordinate vectors (first nonzero coordinate 1).
pub struct ProjectiveSpace {
    field: Arc<Field>,
    n: usize,
    points: Vec<Vector>,
    point_of_code: Vec<u32>,
}

impl fmt::Debug for ProjectiveSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PG({}, {})", self.n as i64 - 1, self.field.order())
    }
}

impl ProjectiveSpace {
    pub fn new(field: Arc<Field>, n: usize) -> Result<ProjectiveSpace, SpaceError> {
        if n == 0 {
            return Err(SpaceError::BadDimension(0));
        }
        let q = field.order() as u64;
        let total = q.checked_pow(n as u32).unwrap_or(u64::MAX);
        let npoints = (total - 1) / (q - 1);
        if npoints > MAX_POINTS as u64 {
            return Err(SpaceError::TooManyPoints(npoints));
        }
        let mut points = Vec::with_capacity(npoints as usize);
        let mut point_of_code = vec![NO_POINT; total as usize];
        for code in 1..total {
            let v = linalg::decode(code, q as u32, n);
            if v.iter().find(|&&x| x != 0) == Some(&1) {
                point_of_code[code as usize] = points.len() as u32;
                points.push(v);
            }
        }
        // every nonzero vector maps to its normalized representative
        for code in 1..total {
            if point_of_code[code as usize] == NO_POINT {
                let v = linalg::decode(code, q as u32, n);
                let nv = linalg::normalize(&field, &v);
                point_of_code[code as usize] =
                    point_of_code[linalg::encode(&nv, q as u32) as usize];
            }
        }
        Ok(ProjectiveSpace { field, n, points, point_of_code })
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn point_count(&self) -> usize {
        self.points.len()
    }

    pub fn point(&self, i: u32) -> &[u32] {
        &self.points[i as usize]
    }

    pub fn points(&self) -> &[Vector] {
        &self.points
    }

    /// Index of the point spanned by a nonzero vector.
    #[inline]
    pub fn point_index(&self, v: &[u32]) -> Option<u32> {
        let i = self.point_of_code[linalg::encode(v, self.field.order()) as usize];
        (i != NO_POINT).then_some(i)
    }

    /// Sorted point indices of a subspace.
    pub fn subspace_points(&self, s: &Subspace) -> Vec<u32> {
        if s.dim() == 0 {
            return Vec::new();
        }
        let mut pts: Vec<u32> = linalg::span(&self.field, s.basis(), self.n)
            .iter()
            .filter(|v| !linalg::is_zero(v))
            .filter(|v| v.iter().find(|&&x| x != 0) == Some(&1))
            .map(|v| self.point_index(v).unwrap())
            .collect();
        pts.sort_unstable();
        pts
    }

    /// The subspace whose point set is exactly `points`.
    pub fn subspace_from_points(&self, points: &[u32]) -> Result<Subspace, SpaceError> {
        let mut sorted = points.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut vecs = Vec::with_capacity(sorted.len());
        for &p in &sorted {
            if p as usize >= self.points.len() {
                return Err(SpaceError::NoSuchPoint(p));
            }
            vecs.push(self.points[p as usize].clone());
        }
        let s = Subspace::span(&self.field, self.n, &vecs);
        if self.subspace_points(&s) != sorted {
            return Err(SpaceError::NotASubspace);
        }
        Ok(s)
    }

    /// All hyperplanes of `u`, ordered lexicographically by their sorted
    /// point-index sets.
    pub fn hyperplanes_of(&self, u: &Subspace) -> Result<Vec<Subspace>, SpaceError> {
        let d = u.dim();
        if d < 2 {
            return Err(SpaceError::TooSmall(d));
        }
        let q = self.field.order();
        let mut hyps: Vec<(Vec<u32>, Subspace)> = linalg::all_vectors(q, d)
            .filter(|f| f.iter().find(|&&x| x != 0) == Some(&1))
            .map(|functional| {
                let ns = linalg::nullspace(&self.field, &[functional], d);
                let vecs: Vec<Vector> = ns
                    .iter()
                    .map(|coef| {
                        let mut v = vec![0; self.n];
                        for (c, b) in coef.iter().zip(u.basis()) {
                            v = linalg::axpy(&self.field, &v, *c, b);
                        }
                        v
                    })
                    .collect();
                let h = Subspace::span(&self.field, self.n, &vecs);
                (self.subspace_points(&h), h)
            })
            .collect();
        hyps.sort();
        Ok(hyps.into_iter().map(|(_, h)| h).collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FormKind {
    #[serde(rename = "sp", alias = "symplectic")]
    Symplectic,
    #[serde(rename = "parabolic")]
    Parabolic,
    #[serde(rename = "hyperbolic")]
    Hyperbolic,
    #[serde(rename = "elliptic")]
    Elliptic,
}

impl fmt::Display for FormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FormKind::Symplectic => "sp",
            FormKind::Parabolic => "parabolic",
            FormKind::Hyperbolic => "hyperbolic",
            FormKind::Elliptic => "elliptic",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for FormKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "sp" | "symplectic" => Ok(FormKind::Symplectic),
            "parabolic" | "o" | "orthogonal" => Ok(FormKind::Parabolic),
            "hyperbolic" | "o+" => Ok(FormKind::Hyperbolic),
            "elliptic" | "o-" => Ok(FormKind::Elliptic),
            other => Err(format!("unknown form {other:?}")),
        }
    }
}

impl FormKind {
    pub fn is_quadratic(self) -> bool {
        self != FormKind::Symplectic
    }
}

/// Plan-file form of a space: `{"form": "sp", "n": 6, "field": {"p": 2, "k": 1}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceParams {
    pub form: FormKind,
    pub n: usize,
    pub field: FieldParams,
}

/// How a projective line meets the quadric.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LineMeet {
    Exterior,
    Tangent,
    Secant,
    Contained,
}

/// A vector space with a nondegenerate symplectic or quadratic form.
pub struct FormedSpace {
    proj: ProjectiveSpace,
    kind: FormKind,
    gram: Vec<Vector>,
    /// Upper-triangular coefficients `a_ij` with `Q(x) = sum_{i<=j} a_ij x_i x_j`.
    quad: Option<Vec<Vector>>,
    witt: usize,
}

impl fmt::Debug for FormedSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({}, {})", self.kind, self.dim(), self.field().order())
    }
}

fn gram_from_quad(f: &Field, a: &[Vector]) -> Vec<Vector> {
    let n = a.len();
    let mut g = vec![vec![0u32; n]; n];
    for i in 0..n {
        for j in 0..n {
            g[i][j] = if i == j {
                f.add(a[i][i], a[i][i])
            } else if i < j {
                a[i][j]
            } else {
                a[j][i]
            };
        }
    }
    g
}

/// Least `c` with `x^2 + x + c` irreducible over `f`.
fn elliptic_constant(f: &Field) -> u32 {
    (1..f.order())
        .find(|&c| f.elements().all(|x| f.add(f.add(f.mul(x, x), x), c) != 0))
        .expect("an irreducible quadratic exists over every finite field")
}

impl FormedSpace {
    pub fn symplectic(field: Arc<Field>, n: usize) -> Result<FormedSpace, SpaceError> {
        if n == 0 || n % 2 == 1 {
            return Err(SpaceError::BadDimension(n));
        }
        let mut g = vec![vec![0u32; n]; n];
        for i in 0..n / 2 {
            g[2 * i][2 * i + 1] = 1;
            g[2 * i + 1][2 * i] = field.neg(1);
        }
        Self::with_forms(field, FormKind::Symplectic, g, None)
    }

    /// `x_0^2 + x_1 x_2 + x_3 x_4 + ...` in odd dimension `n`.
    pub fn parabolic(field: Arc<Field>, n: usize) -> Result<FormedSpace, SpaceError> {
        if n % 2 == 0 {
            return Err(SpaceError::BadDimension(n));
        }
        let mut a = vec![vec![0u32; n]; n];
        a[0][0] = 1;
        for i in 0..(n - 1) / 2 {
            a[2 * i + 1][2 * i + 2] = 1;
        }
        Self::with_quadratic(field, FormKind::Parabolic, a)
    }

    /// `x_0 x_1 + x_2 x_3 + ...` in even dimension `n`.
    pub fn hyperbolic(field: Arc<Field>, n: usize) -> Result<FormedSpace, SpaceError> {
        if n == 0 || n % 2 == 1 {
            return Err(SpaceError::BadDimension(n));
        }
        let mut a = vec![vec![0u32; n]; n];
        for i in 0..n / 2 {
            a[2 * i][2 * i + 1] = 1;
        }
        Self::with_quadratic(field, FormKind::Hyperbolic, a)
    }

    /// `x_0^2 + x_0 x_1 + c x_1^2 + x_2 x_3 + ...` with `x^2 + x + c`
    /// irreducible; over GF(2) this is `x_0^2 + x_1^2 + x_0 x_1 + x_2 x_3 + ...`.
    pub fn elliptic(field: Arc<Field>, n: usize) -> Result<FormedSpace, SpaceError> {
        if n < 2 || n % 2 == 1 {
            return Err(SpaceError::BadDimension(n));
        }
        let mut a = vec![vec![0u32; n]; n];
        a[0][0] = 1;
        a[0][1] = 1;
        a[1][1] = elliptic_constant(&field);
        for i in 1..n / 2 {
            a[2 * i][2 * i + 1] = 1;
        }
        Self::with_quadratic(field, FormKind::Elliptic, a)
    }

    pub fn standard(field: Arc<Field>, kind: FormKind, n: usize) -> Result<FormedSpace, SpaceError> {
        match kind {
            FormKind::Symplectic => Self::symplectic(field, n),
            FormKind::Parabolic => Self::parabolic(field, n),
            FormKind::Hyperbolic => Self::hyperbolic(field, n),
            FormKind::Elliptic => Self::elliptic(field, n),
        }
    }

    pub fn from_params(params: &SpaceParams) -> Result<FormedSpace, SpaceError> {
        let field = Arc::new(Field::from_params(&params.field)?);
        Self::standard(field, params.form, params.n)
    }

    pub fn params(&self) -> SpaceParams {
        SpaceParams { form: self.kind, n: self.dim(), field: self.field().params() }
    }

    pub fn with_quadratic(field: Arc<Field>, kind: FormKind, a: Vec<Vector>) -> Result<FormedSpace, SpaceError> {
        let g = gram_from_quad(&field, &a);
        Self::with_forms(field, kind, g, Some(a))
    }

    /// Validates and wraps arbitrary forms.
    pub fn with_forms(
        field: Arc<Field>,
        kind: FormKind,
        gram: Vec<Vector>,
        quad: Option<Vec<Vector>>,
    ) -> Result<FormedSpace, SpaceError> {
        let n = gram.len();
        if n == 0 || gram.iter().any(|r| r.len() != n) {
            return Err(SpaceError::BadDimension(n));
        }
        let proj = ProjectiveSpace::new(Arc::clone(&field), n)?;
        let mut space = FormedSpace { proj, kind, gram, quad, witt: 0 };
        match kind {
            FormKind::Symplectic => {
                for i in 0..n {
                    if space.gram[i][i] != 0 {
                        return Err(SpaceError::NotAlternating);
                    }
                    for j in 0..n {
                        if space.gram[i][j] != field.neg(space.gram[j][i]) {
                            return Err(SpaceError::NotAlternating);
                        }
                    }
                }
                if linalg::rank(&field, &space.gram) != n {
                    return Err(SpaceError::Degenerate);
                }
            }
            _ => {
                if space.quad.is_none() {
                    return Err(SpaceError::Degenerate);
                }
                // The radical of B may be one-dimensional in even
                // characteristic; Q must not vanish on it.
                let rad = linalg::nullspace(&field, &space.gram, n);
                if rad.len() > 1 || (rad.len() == 1 && space.quad_value(&rad[0]) == 0) {
                    return Err(SpaceError::Degenerate);
                }
            }
        }
        let basis: Vec<Vector> = Subspace::whole(n).basis().to_vec();
        space.witt = space.witt_index_of(&basis);
        let expected = match kind {
            FormKind::Symplectic | FormKind::Hyperbolic if n % 2 == 0 => Some(n / 2),
            FormKind::Parabolic if n % 2 == 1 => Some((n - 1) / 2),
            FormKind::Elliptic if n % 2 == 0 => Some(n / 2 - 1),
            _ => None,
        };
        if expected != Some(space.witt) {
            return Err(SpaceError::WrongType { declared: kind, witt: space.witt, n });
        }
        Ok(space)
    }

    pub fn field(&self) -> &Arc<Field> {
        self.proj.field()
    }

    pub fn projective(&self) -> &ProjectiveSpace {
        &self.proj
    }

    pub fn kind(&self) -> FormKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.proj.dim()
    }

    pub fn gram(&self) -> &[Vector] {
        &self.gram
    }

    /// Dimension of the maximal totally isotropic / singular subspaces.
    pub fn witt_index(&self) -> usize {
        self.witt
    }

    #[inline]
    pub fn bilinear(&self, x: &[u32], y: &[u32]) -> u32 {
        let f = self.field();
        let mut acc = 0;
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            let row = &self.gram[i];
            for (j, &yj) in y.iter().enumerate() {
                if yj != 0 && row[j] != 0 {
                    acc = f.add(acc, f.mul(xi, f.mul(row[j], yj)));
                }
            }
        }
        acc
    }

    /// `Q(x)`; zero for symplectic spaces.
    pub fn quad_value(&self, x: &[u32]) -> u32 {
        let Some(a) = &self.quad else { return 0 };
        let f = self.field();
        let mut acc = 0;
        for i in 0..x.len() {
            if x[i] == 0 {
                continue;
            }
            for j in i..x.len() {
                if a[i][j] != 0 && x[j] != 0 {
                    acc = f.add(acc, f.mul(a[i][j], f.mul(x[i], x[j])));
                }
            }
        }
        acc
    }

    pub fn is_singular(&self, x: &[u32]) -> bool {
        self.quad_value(x) == 0
    }

    /// Indices of the isotropic (symplectic) or singular (quadratic) points.
    pub fn singular_points(&self) -> Vec<u32> {
        (0..self.proj.point_count() as u32)
            .filter(|&i| self.is_singular(self.proj.point(i)))
            .collect()
    }

    pub fn perp(&self, s: &Subspace) -> Subspace {
        let f = self.field();
        let eqs: Vec<Vector> = s.basis().iter().map(|b| linalg::vec_mat(f, b, &self.gram)).collect();
        let n = self.dim();
        if eqs.is_empty() {
            return Subspace::whole(n);
        }
        let ns = linalg::nullspace(f, &eqs, n);
        Subspace::span(f, n, &ns)
    }

    pub fn is_totally_isotropic(&self, s: &Subspace) -> bool {
        let b = s.basis();
        b.iter().all(|x| self.is_singular(x))
            && b.iter().enumerate().all(|(i, x)| b[i + 1..].iter().all(|y| self.bilinear(x, y) == 0))
    }

    /// Witt index of the form restricted to `span(basis)`, computed by
    /// splitting off hyperbolic pairs.
    pub fn witt_index_of(&self, basis: &[Vector]) -> usize {
        let f = self.field();
        let n = self.dim();
        let mut w: Vec<Vector> = linalg::rref(f, basis);
        let mut count = 0;
        loop {
            if w.is_empty() {
                return count;
            }
            let found = linalg::span(f, &w, n).into_iter().find(|v| {
                !linalg::is_zero(v)
                    && self.is_singular(v)
                    && w.iter().any(|y| self.bilinear(v, y) != 0)
            });
            let Some(x) = found else { return count };
            let y = w.iter().find(|y| self.bilinear(&x, y) != 0).unwrap().clone();
            // restrict to <x, y>^perp inside span(w)
            let eqs: Vec<Vector> = vec![
                w.iter().map(|wi| self.bilinear(wi, &x)).collect(),
                w.iter().map(|wi| self.bilinear(wi, &y)).collect(),
            ];
            let ns = linalg::nullspace(f, &eqs, w.len());
            let next: Vec<Vector> = ns
                .iter()
                .map(|coef| {
                    let mut v = vec![0; n];
                    for (c, b) in coef.iter().zip(&w) {
                        v = linalg::axpy(f, &v, *c, b);
                    }
                    v
                })
                .collect();
            w = linalg::rref(f, &next);
            count += 1;
        }
    }

    /// The standard maximal totally isotropic subspace: the first vector of
    /// each hyperbolic pair of the standard form.
    pub fn standard_maximal_subspace(&self) -> Subspace {
        let n = self.dim();
        let idx: Vec<usize> = match self.kind {
            FormKind::Symplectic | FormKind::Hyperbolic => (0..n / 2).map(|i| 2 * i).collect(),
            FormKind::Parabolic => (0..(n - 1) / 2).map(|i| 2 * i + 1).collect(),
            FormKind::Elliptic => (1..n / 2).map(|i| 2 * i).collect(),
        };
        let vecs: Vec<Vector> = idx
            .iter()
            .map(|&i| {
                let mut v = vec![0; n];
                v[i] = 1;
                v
            })
            .collect();
        Subspace::span(self.field(), n, &vecs)
    }

    /// All totally isotropic (singular) subspaces of vector dimension `dim`,
    /// found by orderly backtracking over reduced echelon matrices and
    /// ordered by their sorted point sets.
    pub fn totally_isotropic_subspaces(&self, dim: usize) -> Result<Vec<Subspace>, SpaceError> {
        if dim > self.witt {
            return Err(SpaceError::AboveWittIndex { dim, witt: self.witt });
        }
        let n = self.dim();
        let mut out: Vec<(Vec<u32>, Subspace)> = Vec::new();
        if dim == 0 {
            return Ok(vec![Subspace::zero(n)]);
        }
        let pivot_sets = combinations(n, dim);
        for pivots in pivot_sets {
            let mut rows: Vec<Vector> = Vec::with_capacity(dim);
            self.extend_rows(&pivots, &mut rows, &mut |rows| {
                let s = Subspace { basis: rows.to_vec(), n };
                out.push((self.proj.subspace_points(&s), s));
            });
        }
        out.sort();
        Ok(out.into_iter().map(|(_, s)| s).collect())
    }

    fn extend_rows(&self, pivots: &[usize], rows: &mut Vec<Vector>, emit: &mut dyn FnMut(&[Vector])) {
        let i = rows.len();
        if i == pivots.len() {
            emit(rows);
            return;
        }
        let n = self.dim();
        let q = self.field().order();
        let p = pivots[i];
        let free: Vec<usize> = (p + 1..n).filter(|c| !pivots.contains(c)).collect();
        for code in 0..(q as u64).pow(free.len() as u32) {
            let vals = linalg::decode(code, q, free.len());
            let mut row = vec![0u32; n];
            row[p] = 1;
            for (&c, &v) in free.iter().zip(&vals) {
                row[c] = v;
            }
            if !self.is_singular(&row) || rows.iter().any(|r| self.bilinear(r, &row) != 0) {
                continue;
            }
            rows.push(row);
            self.extend_rows(pivots, rows, emit);
            rows.pop();
        }
    }

    fn quad_matrix_det(&self) -> Option<u32> {
        // symmetric M with Q(x) = x^T M x; needs 1/2
        let f = self.field();
        let a = self.quad.as_ref()?;
        let half = f.inv(2 % f.characteristic()).ok()?;
        let n = self.dim();
        let m: Vec<Vector> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            a[i][i]
                        } else {
                            f.mul(half, if i < j { a[i][j] } else { a[j][i] })
                        }
                    })
                    .collect()
            })
            .collect();
        Some(linalg::determinant(f, &m))
    }

    /// Type of a nonsingular point in odd dimension `2m+1`, odd `q`:
    /// `+1` when `x^perp` is hyperbolic, `-1` when elliptic. Decided by the
    /// square class of `(-1)^m det(Q) Q(x)`.
    pub fn point_type(&self, x: u32) -> Result<i8, SpaceError> {
        let f = self.field();
        if self.kind != FormKind::Parabolic || f.characteristic() == 2 {
            return Err(SpaceError::NoPointTypes);
        }
        if x as usize >= self.proj.point_count() {
            return Err(SpaceError::NoSuchPoint(x));
        }
        let v = self.proj.point(x);
        let qx = self.quad_value(v);
        if qx == 0 {
            return Err(SpaceError::SingularPoint(x));
        }
        let m = (self.dim() - 1) / 2;
        let det = self.quad_matrix_det().ok_or(SpaceError::NoPointTypes)?;
        let sign = if m % 2 == 1 { f.neg(1) } else { 1 };
        let val = f.mul(sign, f.mul(det, qx));
        Ok(if f.is_square(val)? { 1 } else { -1 })
    }

    /// Type of a nonsingular point computed from the Witt index of `x^perp`.
    /// Slow; used to cross-check [`Self::point_type`].
    pub fn point_type_by_witt(&self, x: u32) -> Result<i8, SpaceError> {
        let v = self.proj.point(x).to_vec();
        if self.quad_value(&v) == 0 {
            return Err(SpaceError::SingularPoint(x));
        }
        let perp = self.perp(&Subspace::span(self.field(), self.dim(), &[v]));
        let m = perp.dim() / 2;
        Ok(if self.witt_index_of(perp.basis()) == m { 1 } else { -1 })
    }

    /// Classifies the line through two distinct points by its number of
    /// singular points.
    pub fn line_quadric_meet(&self, x: u32, y: u32) -> Result<LineMeet, SpaceError> {
        if x == y {
            return Err(SpaceError::SamePoint);
        }
        let f = self.field();
        let (vx, vy) = (self.proj.point(x), self.proj.point(y));
        let mut count = usize::from(self.is_singular(vy));
        for t in f.elements() {
            if self.is_singular(&linalg::axpy(f, vx, t, vy)) {
                count += 1;
            }
        }
        let q = f.order() as usize;
        Ok(match count {
            0 => LineMeet::Exterior,
            1 => LineMeet::Tangent,
            2 => LineMeet::Secant,
            c if c == q + 1 => LineMeet::Contained,
            c => unreachable!("a line meets a quadric in 0, 1, 2 or all points, got {c}"),
        })
    }

    /// Point-index lookup shared by every construction on this space.
    pub fn point_lookup(&self) -> HashMap<Vec<u32>, u32> {
        self.proj
            .points()
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), i as u32))
            .collect()
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u32) -> Arc<Field> {
        Arc::new(Field::of_order(q).unwrap())
    }

    fn gaussian_binomial(n: u32, k: u32, q: u64) -> u64 {
        let mut num = 1u64;
        let mut den = 1u64;
        for i in 0..k {
            num *= q.pow(n - i) - 1;
            den *= q.pow(i + 1) - 1;
        }
        num / den
    }

    #[test]
    fn point_counts() {
        let sp = FormedSpace::symplectic(gf(2), 6).unwrap();
        assert_eq!(sp.projective().point_count(), 63);
        assert_eq!(sp.singular_points().len(), 63);
        let line = ProjectiveSpace::new(gf(3), 2).unwrap();
        assert_eq!(line.point_count(), 4);
        assert_eq!(line.point(0), &[0, 1]);
        assert_eq!(line.point(1), &[1, 0]);
        let o5 = FormedSpace::parabolic(gf(5), 5).unwrap();
        assert_eq!(o5.projective().point_count(), 781);
        assert_eq!(o5.singular_points().len(), 156);
    }

    #[test]
    fn form_types_and_witt_indices() {
        assert_eq!(FormedSpace::symplectic(gf(3), 6).unwrap().witt_index(), 3);
        assert_eq!(FormedSpace::parabolic(gf(3), 7).unwrap().witt_index(), 3);
        assert_eq!(FormedSpace::hyperbolic(gf(2), 8).unwrap().witt_index(), 4);
        assert_eq!(FormedSpace::elliptic(gf(2), 8).unwrap().witt_index(), 3);
        assert_eq!(FormedSpace::elliptic(gf(5), 4).unwrap().witt_index(), 1);
        assert_eq!(FormedSpace::parabolic(gf(2), 5).unwrap().witt_index(), 2);
        assert!(matches!(FormedSpace::symplectic(gf(2), 5), Err(SpaceError::BadDimension(5))));
        let f = gf(3);
        // hyperbolic form declared elliptic
        let mut a = vec![vec![0u32; 4]; 4];
        a[0][1] = 1;
        a[2][3] = 1;
        assert!(matches!(
            FormedSpace::with_quadratic(f.clone(), FormKind::Elliptic, a),
            Err(SpaceError::WrongType { .. })
        ));
        // degenerate: x0 x1 in dimension 3
        let mut a = vec![vec![0u32; 3]; 3];
        a[0][1] = 1;
        assert!(matches!(
            FormedSpace::with_quadratic(f, FormKind::Parabolic, a),
            Err(SpaceError::Degenerate)
        ));
    }

    #[test]
    fn perps() {
        let sp = FormedSpace::symplectic(gf(3), 6).unwrap();
        assert_eq!(sp.perp(&Subspace::whole(6)).dim(), 0);
        let u = sp.standard_maximal_subspace();
        assert!(sp.is_totally_isotropic(&u));
        assert_eq!(sp.perp(&u), u);
        let o5 = FormedSpace::parabolic(gf(5), 5).unwrap();
        for x in [1u32, 7, 100, 500] {
            let v = o5.projective().point(x).to_vec();
            if o5.quad_value(&v) == 0 {
                continue;
            }
            let px = o5.perp(&Subspace::span(o5.field(), 5, &[v]));
            assert_eq!(px.dim(), 4);
            let eps = o5.point_type(x).unwrap();
            let w = o5.witt_index_of(px.basis());
            assert_eq!(w, if eps == 1 { 2 } else { 1 });
            // perp is an involution
            assert_eq!(o5.perp(&px), Subspace::span(o5.field(), 5, &[o5.projective().point(x).to_vec()]));
        }
    }

    #[test]
    fn totally_isotropic_counts() {
        for (q, d) in [(2u32, 2usize), (3, 2), (2, 3), (3, 3)] {
            let sp = FormedSpace::symplectic(gf(q), 2 * d).unwrap();
            let n = sp.totally_isotropic_subspaces(d).unwrap().len() as u64;
            let expected: u64 = (1..=d as u32).map(|i| (q as u64).pow(i) + 1).product();
            assert_eq!(n, expected, "Sp({},{q})", 2 * d);
        }
        let sp = FormedSpace::symplectic(gf(2), 6).unwrap();
        assert_eq!(sp.totally_isotropic_subspaces(1).unwrap().len(), 63);
        assert!(matches!(
            sp.totally_isotropic_subspaces(4),
            Err(SpaceError::AboveWittIndex { dim: 4, witt: 3 })
        ));
        let o5 = FormedSpace::parabolic(gf(3), 5).unwrap();
        assert_eq!(o5.totally_isotropic_subspaces(1).unwrap().len(), 40);
    }

    #[test]
    fn hyperplane_counts() {
        for (q, d, expected) in [(2u32, 3usize, 7usize), (3, 3, 13), (2, 4, 15)] {
            let sp = FormedSpace::symplectic(gf(q), 2 * d).unwrap();
            let u = sp.standard_maximal_subspace();
            let hs = sp.projective().hyperplanes_of(&u).unwrap();
            assert_eq!(hs.len(), expected);
            let sets: Vec<Vec<u32>> = hs.iter().map(|h| sp.projective().subspace_points(h)).collect();
            let mut sorted = sets.clone();
            sorted.sort();
            assert_eq!(sets, sorted);
            assert!(hs.iter().all(|h| h.dim() == d - 1 && u.contains_subspace(sp.field(), h)));
        }
        let sp = FormedSpace::symplectic(gf(2), 6).unwrap();
        let pt = Subspace::span(sp.field(), 6, &[sp.projective().point(0).to_vec()]);
        assert!(sp.projective().hyperplanes_of(&pt).is_err());
        assert_eq!(gaussian_binomial(3, 1, 2), 7);
    }

    #[test]
    fn point_type_counts() {
        for (q, m, plus, minus) in [(5u32, 2usize, 325usize, 300usize), (3, 2, 45, 36), (3, 3, 378, 351)] {
            let s = FormedSpace::parabolic(gf(q), 2 * m + 1).unwrap();
            let (mut p, mut n) = (0, 0);
            for x in 0..s.projective().point_count() as u32 {
                match s.point_type(x) {
                    Ok(1) => p += 1,
                    Ok(_) => n += 1,
                    Err(SpaceError::SingularPoint(_)) => {}
                    Err(e) => panic!("{e}"),
                }
            }
            assert_eq!((p, n), (plus, minus), "q={q} m={m}");
        }
    }

    #[test]
    fn point_type_agrees_with_witt_index() {
        let s = FormedSpace::parabolic(gf(3), 5).unwrap();
        for x in 0..s.projective().point_count() as u32 {
            if s.is_singular(s.projective().point(x)) {
                continue;
            }
            assert_eq!(s.point_type(x).unwrap(), s.point_type_by_witt(x).unwrap());
        }
        let sp = FormedSpace::symplectic(gf(3), 4).unwrap();
        assert_eq!(sp.point_type(0), Err(SpaceError::NoPointTypes));
    }

    #[test]
    fn line_meets() {
        let s = FormedSpace::parabolic(gf(3), 5).unwrap();
        let u = s.standard_maximal_subspace();
        let pts = s.projective().subspace_points(&u);
        assert_eq!(s.line_quadric_meet(pts[0], pts[1]).unwrap(), LineMeet::Contained);
        assert_eq!(s.line_quadric_meet(3, 3), Err(SpaceError::SamePoint));
        // find an exterior line by enumeration and confirm none of its 4 points is singular
        let n = s.projective().point_count() as u32;
        let mut seen = [false; 4];
        for x in 0..n {
            for y in x + 1..n.min(x + 40) {
                let kind = s.line_quadric_meet(x, y).unwrap();
                seen[kind as usize] = true;
                if kind == LineMeet::Exterior {
                    let f = s.field();
                    let (vx, vy) = (s.projective().point(x), s.projective().point(y));
                    assert!(!s.is_singular(vy));
                    for t in 0..3 {
                        assert!(!s.is_singular(&linalg::axpy(f, vx, t, vy)));
                    }
                }
            }
        }
        assert!(seen.iter().all(|&b| b));
        // a nonsingular point of type -1 in O5(5) has 26 singular points in its perp
        let o5 = FormedSpace::parabolic(gf(5), 5).unwrap();
        let x = (0..781u32).find(|&x| o5.point_type(x) == Ok(-1)).unwrap();
        let px = o5.perp(&Subspace::span(o5.field(), 5, &[o5.projective().point(x).to_vec()]));
        let sing = o5
            .projective()
            .subspace_points(&px)
            .into_iter()
            .filter(|&p| o5.is_singular(o5.projective().point(p)))
            .count();
        assert_eq!(sing, 26);
        let tangents = o5
            .singular_points()
            .into_iter()
            .filter(|&p| o5.line_quadric_meet(x, p) == Ok(LineMeet::Tangent))
            .count();
        assert_eq!(tangents, 26);
    }

    #[test]
    fn subspace_from_points_roundtrip() {
        let sp = FormedSpace::symplectic(gf(2), 6).unwrap();
        let u = sp.standard_maximal_subspace();
        let pts = sp.projective().subspace_points(&u);
        assert_eq!(pts.len(), 7);
        assert_eq!(sp.projective().subspace_from_points(&pts).unwrap(), u);
        assert_eq!(sp.projective().subspace_from_points(&pts[..2]), Err(SpaceError::NotASubspace));
    }
}
