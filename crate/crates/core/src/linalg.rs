//! Exact sparse linear algebra: matrices, reduced row echelon form, and the
//! subspace calculus (rank, kernel, image, intersection, sum, quotient).
//!
//! Vectors are sorted sparse lists `(index, scalar)` with no explicit zeros.
//! Subspaces are stored as canonical reduced-echelon bases, so subspace
//! equality is a literal basis comparison and every operation is
//! deterministic.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::field::{FieldSpec, Scalar};

/// Sorted sparse vector: strictly increasing indices, no zero entries.
pub type SparseVec = Vec<(usize, Scalar)>;

pub fn sv_unit(i: usize, field: FieldSpec) -> SparseVec {
    vec![(i, field.one())]
}

pub fn sv_get<'a>(v: &'a SparseVec, i: usize) -> Option<&'a Scalar> {
    v.binary_search_by_key(&i, |e| e.0).ok().map(|k| &v[k].1)
}

pub fn sv_leading(v: &SparseVec) -> Option<usize> {
    v.first().map(|e| e.0)
}

pub fn sv_scale(field: FieldSpec, v: &SparseVec, c: &Scalar) -> SparseVec {
    if field.is_zero(c) {
        return Vec::new();
    }
    v.iter().map(|(i, a)| (*i, field.mul(a, c))).collect()
}

pub fn sv_neg(field: FieldSpec, v: &SparseVec) -> SparseVec {
    v.iter().map(|(i, a)| (*i, field.neg(a))).collect()
}

/// `a + c*b`, merging sorted entries and dropping cancellations.
pub fn sv_add_scaled(field: FieldSpec, a: &SparseVec, b: &SparseVec, c: &Scalar) -> SparseVec {
    if field.is_zero(c) {
        return a.clone();
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i >= a.len() || b[j].0 < a[i].0 {
            let val = field.mul(&b[j].1, c);
            if !field.is_zero(&val) {
                out.push((b[j].0, val));
            }
            j += 1;
        } else {
            let val = field.add(&a[i].1, &field.mul(&b[j].1, c));
            if !field.is_zero(&val) {
                out.push((a[i].0, val));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn sv_add(field: FieldSpec, a: &SparseVec, b: &SparseVec) -> SparseVec {
    sv_add_scaled(field, a, b, &field.one())
}

pub fn sv_sub(field: FieldSpec, a: &SparseVec, b: &SparseVec) -> SparseVec {
    sv_add_scaled(field, a, b, &field.neg(&field.one()))
}

/// Dot product of two sorted sparse vectors.
pub fn sv_dot(field: FieldSpec, a: &SparseVec, b: &SparseVec) -> Scalar {
    let mut acc = field.zero();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i].0 < b[j].0 {
            i += 1;
        } else if b[j].0 < a[i].0 {
            j += 1;
        } else {
            acc = field.add(&acc, &field.mul(&a[i].1, &b[j].1));
            i += 1;
            j += 1;
        }
    }
    acc
}

/// Collect `(index, coeff)` pairs that may repeat or be unsorted into a
/// canonical sparse vector.
pub fn sv_collect(field: FieldSpec, terms: impl IntoIterator<Item = (usize, Scalar)>) -> SparseVec {
    let mut map: BTreeMap<usize, Scalar> = BTreeMap::new();
    for (i, c) in terms {
        let entry = map.entry(i).or_insert_with(|| field.zero());
        *entry = field.add(entry, &c);
    }
    map.into_iter().filter(|(_, c)| !field.is_zero(c)).collect()
}

pub fn sv_to_dense(field: FieldSpec, v: &SparseVec, len: usize) -> Vec<Scalar> {
    let mut out = vec![field.zero(); len];
    for (i, c) in v {
        out[*i] = c.clone();
    }
    out
}

/// A sparse matrix over an exact field, acting on column vectors:
/// `x in k^cols  |->  A x in k^rows`.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    pub field: FieldSpec,
    pub rows: usize,
    pub cols: usize,
    data: Vec<SparseVec>,
}

impl Matrix {
    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.data[i] = sv_unit(i, field);
        }
        m
    }

    pub fn from_rows(field: FieldSpec, cols: usize, rows: Vec<SparseVec>) -> Self {
        for r in &rows {
            debug_assert!(r.last().map_or(true, |e| e.0 < cols));
        }
        Matrix {
            field,
            rows: rows.len(),
            cols,
            data: rows,
        }
    }

    pub fn from_triplets(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Self {
        let mut per_row: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); rows];
        for (r, c, v) in triplets {
            assert!(r < rows && c < cols, "triplet out of range");
            per_row[r].push((c, v));
        }
        let data = per_row
            .into_iter()
            .map(|terms| sv_collect(field, terms))
            .collect();
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn row(&self, r: usize) -> &SparseVec {
        &self.data[r]
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        sv_get(&self.data[r], c)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.is_empty())
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(|r| r.len()).sum()
    }

    pub fn transpose(&self) -> Matrix {
        let mut triplets = Vec::with_capacity(self.nnz());
        for (r, row) in self.data.iter().enumerate() {
            for (c, v) in row {
                triplets.push((*c, r, v.clone()));
            }
        }
        Matrix::from_triplets(self.field, self.cols, self.rows, triplets)
    }

    /// Apply to a column vector: `A x`.
    pub fn apply(&self, x: &SparseVec) -> SparseVec {
        let mut out = Vec::new();
        for (r, row) in self.data.iter().enumerate() {
            if row.is_empty() {
                continue;
            }
            let d = sv_dot(self.field, row, x);
            if !self.field.is_zero(&d) {
                out.push((r, d));
            }
        }
        out
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut data = Vec::with_capacity(self.rows);
        for row in &self.data {
            let mut acc: SparseVec = Vec::new();
            for (k, v) in row {
                acc = sv_add_scaled(self.field, &acc, &rhs.data[*k], v);
            }
            data.push(acc);
        }
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: rhs.cols,
            data,
        }
    }

    pub fn add_scaled(&self, rhs: &Matrix, c: &Scalar) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| sv_add_scaled(self.field, a, b, c))
            .collect();
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        self.add_scaled(rhs, &self.field.neg(&self.field.one()))
    }

    pub fn rank(&self) -> usize {
        rref_rows(self.field, self.data.clone(), self.cols).len()
    }

    /// Kronecker product; entry `((r1, r2), (c1, c2))` at index
    /// `r1 * other.rows + r2`, `c1 * other.cols + c2`.
    pub fn kronecker(&self, other: &Matrix) -> Matrix {
        let mut triplets = Vec::with_capacity(self.nnz() * other.nnz());
        for (r1, row1) in self.data.iter().enumerate() {
            for (c1, v1) in row1 {
                for (r2, row2) in other.data.iter().enumerate() {
                    for (c2, v2) in row2 {
                        triplets.push((
                            r1 * other.rows + r2,
                            c1 * other.cols + c2,
                            self.field.mul(v1, v2),
                        ));
                    }
                }
            }
        }
        Matrix::from_triplets(
            self.field,
            self.rows * other.rows,
            self.cols * other.cols,
            triplets,
        )
    }

    /// One particular solution of `A x = b` (free variables set to zero),
    /// or `None` if inconsistent.
    pub fn solve(&self, b: &SparseVec) -> Option<SparseVec> {
        let f = self.field;
        // augmented column at index self.cols
        let mut rows: Vec<SparseVec> = Vec::with_capacity(self.rows);
        for (r, row) in self.data.iter().enumerate() {
            let mut aug = row.clone();
            if let Some(v) = sv_get(b, r) {
                aug.push((self.cols, v.clone()));
            }
            if !aug.is_empty() {
                rows.push(aug);
            }
        }
        let reduced = rref_rows(f, rows, self.cols + 1);
        let mut x: SparseVec = Vec::new();
        for row in &reduced {
            let lead = row[0].0;
            if lead == self.cols {
                return None; // 0 = 1 row: inconsistent
            }
            if let Some(v) = sv_get(row, self.cols) {
                x.push((lead, v.clone()));
            }
        }
        x.sort_by_key(|e| e.0);
        Some(x)
    }

    /// Inverse of a square matrix, by augmented elimination.
    /// Returns `None` if singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols, "inverse of non-square matrix");
        let n = self.rows;
        let f = self.field;
        // augmented rows [A | I], columns 0..n original, n..2n identity part
        let mut rows: Vec<SparseVec> = Vec::with_capacity(n);
        for (i, row) in self.data.iter().enumerate() {
            let mut r = row.clone();
            r.push((n + i, f.one()));
            rows.push(r);
        }
        let reduced = rref_rows(f, rows, 2 * n);
        if reduced.len() != n {
            return None;
        }
        let mut inv_rows: Vec<SparseVec> = vec![Vec::new(); n];
        for row in reduced {
            let lead = sv_leading(&row)?;
            if lead >= n {
                return None;
            }
            let right: SparseVec = row
                .into_iter()
                .filter(|(c, _)| *c >= n)
                .map(|(c, v)| (c - n, v))
                .collect();
            inv_rows[lead] = right;
        }
        Some(Matrix::from_rows(f, n, inv_rows))
    }
}

/// Reduced row echelon form of a list of sparse rows. Rows are returned
/// normalized (leading coefficient 1), with strictly increasing pivot
/// columns and pivot columns cleared everywhere else. The output is the
/// canonical basis of the row space.
pub fn rref_rows(field: FieldSpec, rows: Vec<SparseVec>, _cols: usize) -> Vec<SparseVec> {
    // bucket rows by leading index; eliminate column by column
    let mut buckets: BTreeMap<usize, Vec<SparseVec>> = BTreeMap::new();
    for r in rows {
        if let Some(lead) = sv_leading(&r) {
            buckets.entry(lead).or_default().push(r);
        }
    }
    let mut echelon: Vec<SparseVec> = Vec::new();
    while let Some((col, mut group)) = buckets.pop_first() {
        let pivot_raw = group.swap_remove(0);
        let lead_inv = field.inv(&pivot_raw[0].1);
        let pivot = sv_scale(field, &pivot_raw, &lead_inv);
        for other in group {
            let coeff = field.neg(&other[0].1);
            let reduced = sv_add_scaled(field, &other, &pivot, &coeff);
            if let Some(lead) = sv_leading(&reduced) {
                debug_assert!(lead > col);
                buckets.entry(lead).or_default().push(reduced);
            }
        }
        echelon.push(pivot);
    }
    // back substitution: clear pivot columns above
    for i in (0..echelon.len()).rev() {
        let (pivot_col, _) = echelon[i][0].clone();
        let pivot_row = echelon[i].clone();
        for j in 0..i {
            if let Some(c) = sv_get(&echelon[j], pivot_col).cloned() {
                echelon[j] = sv_add_scaled(field, &echelon[j], &pivot_row, &field.neg(&c));
            }
        }
    }
    echelon
}

/// A linear subspace of `k^ambient`, held as a canonical reduced-echelon
/// basis. Equality of subspaces is literal equality of bases.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace {
    pub field: FieldSpec,
    pub ambient: usize,
    basis: Vec<SparseVec>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: (0..ambient).map(|i| sv_unit(i, field)).collect(),
        }
    }

    pub fn from_spanning(field: FieldSpec, ambient: usize, vectors: Vec<SparseVec>) -> Self {
        for v in &vectors {
            assert!(
                v.last().map_or(true, |e| e.0 < ambient),
                "vector exceeds ambient dimension"
            );
        }
        Subspace {
            field,
            ambient,
            basis: rref_rows(field, vectors, ambient),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis.iter().map(|r| r[0].0).collect()
    }

    /// Remainder of `v` after reduction against the echelon basis. Zero iff
    /// `v` lies in the subspace.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut rem = v.clone();
        for row in &self.basis {
            let pc = row[0].0;
            if let Some(c) = sv_get(&rem, pc).cloned() {
                rem = sv_add_scaled(self.field, &rem, row, &self.field.neg(&c));
            }
        }
        rem
    }

    pub fn contains_vector(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains_vector(v))
    }

    /// Coordinates of `v` in this subspace's basis, if `v` belongs to it.
    /// With an echelon basis these are just the entries at pivot columns.
    pub fn coordinates(&self, v: &SparseVec) -> Option<Vec<Scalar>> {
        if !self.contains_vector(v) {
            return None;
        }
        Some(
            self.basis
                .iter()
                .map(|row| {
                    sv_get(v, row[0].0)
                        .cloned()
                        .unwrap_or_else(|| self.field.zero())
                })
                .collect(),
        )
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, Error> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        let f = self.field;
        // x*A + y*B = 0  <=>  (x,y) in the left kernel of the stacked matrix
        let da = self.dim();
        let stacked: Vec<SparseVec> = self
            .basis
            .iter()
            .chain(other.basis.iter())
            .cloned()
            .collect();
        let m = Matrix::from_rows(f, self.ambient, stacked).transpose();
        let (_, kernel, _) = rank_kernel_image(&m);
        let vectors = kernel
            .basis()
            .iter()
            .map(|lam| {
                let mut acc: SparseVec = Vec::new();
                for (i, c) in lam.iter().take_while(|(i, _)| *i < da) {
                    acc = sv_add_scaled(f, &acc, &self.basis[*i], c);
                }
                acc
            })
            .collect();
        Ok(Subspace::from_spanning(f, self.ambient, vectors))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, Error> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        let vectors: Vec<SparseVec> = self
            .basis
            .iter()
            .chain(other.basis.iter())
            .cloned()
            .collect();
        Ok(Subspace::from_spanning(self.field, self.ambient, vectors))
    }

    /// Coset representatives completing a basis of `sub` to a basis of
    /// `self`. Requires `sub` to be contained in `self`; representatives are
    /// the lexicographically first rows of this subspace's canonical basis
    /// that are independent modulo `sub`.
    pub fn quotient_basis(&self, sub: &Subspace) -> Result<Vec<SparseVec>, Error> {
        if self.ambient != sub.ambient {
            return Err(Error::AmbientMismatch(self.ambient, sub.ambient));
        }
        if !self.contains(sub) {
            return Err(Error::Containment(
                "quotient requires the second subspace to lie inside the first".into(),
            ));
        }
        let f = self.field;
        let mut workspace: Vec<SparseVec> = sub.basis.clone();
        let mut reps = Vec::new();
        for row in &self.basis {
            let mut rem = row.clone();
            // reduce against the evolving workspace (kept in echelon shape)
            loop {
                let Some(lead) = sv_leading(&rem) else { break };
                match workspace.binary_search_by_key(&lead, |r| r[0].0) {
                    Ok(k) => {
                        let c = f.neg(&f.div(&rem[0].1, &workspace[k][0].1));
                        rem = sv_add_scaled(f, &rem, &workspace[k], &c);
                    }
                    Err(k) => {
                        workspace.insert(k, rem.clone());
                        reps.push(row.clone());
                        break;
                    }
                }
            }
        }
        Ok(reps)
    }
}

/// Rank, kernel and image of a matrix, all exact. `rank + dim kernel = cols`,
/// the image is the column space.
pub fn rank_kernel_image(m: &Matrix) -> (usize, Subspace, Subspace) {
    let f = m.field;
    let echelon = rref_rows(f, m.data.clone(), m.cols);
    let rank = echelon.len();
    let pivot_cols: Vec<usize> = echelon.iter().map(|r| r[0].0).collect();
    let pivot_set: std::collections::BTreeSet<usize> = pivot_cols.iter().copied().collect();

    // kernel: one basis vector per free column
    let mut kernel_vectors = Vec::new();
    for fc in 0..m.cols {
        if pivot_set.contains(&fc) {
            continue;
        }
        let mut v: Vec<(usize, Scalar)> = vec![(fc, f.one())];
        for (row, pc) in echelon.iter().zip(&pivot_cols) {
            if let Some(c) = sv_get(row, fc) {
                v.push((*pc, f.neg(c)));
            }
        }
        v.sort_by_key(|e| e.0);
        kernel_vectors.push(v);
    }
    let kernel = Subspace::from_spanning(f, m.cols, kernel_vectors);
    let image = Subspace::from_spanning(
        f,
        m.rows,
        (0..m.cols).map(|c| m.transpose().row(c).clone()).collect(),
    );
    (rank, kernel, image)
}

/// Solve the homogeneous system given by constraint rows over `unknowns`
/// variables; returns the solution subspace.
pub fn solve_homogeneous(
    field: FieldSpec,
    unknowns: usize,
    constraints: Vec<SparseVec>,
) -> Subspace {
    let m = Matrix::from_rows(field, unknowns, constraints);
    let (_, kernel, _) = rank_kernel_image(&m);
    kernel
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rational
    }

    fn sv(field: FieldSpec, entries: &[(usize, i64)]) -> SparseVec {
        sv_collect(
            field,
            entries.iter().map(|(i, v)| (*i, field.from_i64(*v))),
        )
    }

    #[test]
    fn identity_rank_kernel() {
        let m = Matrix::identity(q(), 2);
        let (rank, kernel, image) = rank_kernel_image(&m);
        assert_eq!(rank, 2);
        assert_eq!(kernel.dim(), 0);
        assert_eq!(image.dim(), 2);
    }

    #[test]
    fn zero_matrix_kernel() {
        let m = Matrix::zero(q(), 3, 4);
        let (rank, kernel, image) = rank_kernel_image(&m);
        assert_eq!(rank, 0);
        assert_eq!(kernel.dim(), 4);
        assert_eq!(image.dim(), 0);
    }

    #[test]
    fn rank_one_kernel_echelon() {
        // [[1,2],[2,4]] has rank 1; kernel spanned by (2,-1) up to echelon
        // normalization, i.e. canonical basis vector (1, -1/2).
        let m = Matrix::from_triplets(
            q(),
            2,
            2,
            vec![
                (0, 0, q().from_i64(1)),
                (0, 1, q().from_i64(2)),
                (1, 0, q().from_i64(2)),
                (1, 1, q().from_i64(4)),
            ],
        );
        let (rank, kernel, _) = rank_kernel_image(&m);
        assert_eq!(rank, 1);
        assert_eq!(kernel.dim(), 1);
        let expected = vec![(0usize, q().one()), (1usize, q().parse("-1/2").unwrap())];
        assert_eq!(kernel.basis()[0], expected);
        // the stated spanning vector (2,-1) lies in the kernel
        assert!(kernel.contains_vector(&sv(q(), &[(0, 2), (1, -1)])));
    }

    #[test]
    fn intersect_trivial_cases() {
        let e1 = Subspace::from_spanning(q(), 2, vec![sv(q(), &[(0, 1)])]);
        let e2 = Subspace::from_spanning(q(), 2, vec![sv(q(), &[(1, 1)])]);
        assert_eq!(e1.intersect(&e1).unwrap(), e1);
        assert_eq!(e1.intersect(&e2).unwrap().dim(), 0);
    }

    #[test]
    fn intersect_joint_system() {
        // span{e1+e2, e3} and span{e1+e2, e4} in dim 4 meet in span{e1+e2}
        let a = Subspace::from_spanning(
            q(),
            4,
            vec![sv(q(), &[(0, 1), (1, 1)]), sv(q(), &[(2, 1)])],
        );
        let b = Subspace::from_spanning(
            q(),
            4,
            vec![sv(q(), &[(0, 1), (1, 1)]), sv(q(), &[(3, 1)])],
        );
        let meet = a.intersect(&b).unwrap();
        let expected = Subspace::from_spanning(q(), 4, vec![sv(q(), &[(0, 1), (1, 1)])]);
        assert_eq!(meet, expected);
    }

    #[test]
    fn intersect_rejects_ambient_mismatch() {
        let a = Subspace::full(q(), 2);
        let b = Subspace::full(q(), 3);
        assert!(matches!(
            a.intersect(&b),
            Err(Error::AmbientMismatch(2, 3))
        ));
    }

    #[test]
    fn sum_and_quotient() {
        let e1 = Subspace::from_spanning(q(), 2, vec![sv(q(), &[(0, 1)])]);
        let e2 = Subspace::from_spanning(q(), 2, vec![sv(q(), &[(1, 1)])]);
        assert_eq!(e1.sum(&e2).unwrap().dim(), 2);

        let full = Subspace::full(q(), 2);
        let reps = full.quotient_basis(&e1).unwrap();
        assert_eq!(reps, vec![sv(q(), &[(1, 1)])]);
    }

    #[test]
    fn quotient_rejects_non_subspace() {
        let e1 = Subspace::from_spanning(q(), 2, vec![sv(q(), &[(0, 1)])]);
        let e2 = Subspace::from_spanning(q(), 2, vec![sv(q(), &[(1, 1)])]);
        assert!(matches!(e1.quotient_basis(&e2), Err(Error::Containment(_))));
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::from_triplets(
            q(),
            2,
            2,
            vec![
                (0, 0, q().from_i64(1)),
                (0, 1, q().from_i64(2)),
                (1, 0, q().from_i64(3)),
                (1, 1, q().from_i64(4)),
            ],
        );
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(q(), 2));
        let singular = Matrix::from_triplets(
            q(),
            2,
            2,
            vec![
                (0, 0, q().from_i64(1)),
                (0, 1, q().from_i64(2)),
                (1, 0, q().from_i64(2)),
                (1, 1, q().from_i64(4)),
            ],
        );
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn fp_elimination() {
        let f = FieldSpec::prime(5).unwrap();
        // over F_5: [[2,1],[4,2]] has rank 1
        let m = Matrix::from_triplets(
            f,
            2,
            2,
            vec![
                (0, 0, f.from_i64(2)),
                (0, 1, f.from_i64(1)),
                (1, 0, f.from_i64(4)),
                (1, 1, f.from_i64(2)),
            ],
        );
        let (rank, kernel, _) = rank_kernel_image(&m);
        assert_eq!(rank, 1);
        assert_eq!(kernel.dim(), 1);
    }

    #[test]
    fn coordinates_in_echelon_basis() {
        let s = Subspace::from_spanning(
            q(),
            3,
            vec![sv(q(), &[(0, 1), (2, 1)]), sv(q(), &[(1, 1), (2, -1)])],
        );
        let v = sv(q(), &[(0, 2), (1, 3), (2, -1)]);
        let coords = s.coordinates(&v).unwrap();
        assert_eq!(coords, vec![q().from_i64(2), q().from_i64(3)]);
        assert!(s.coordinates(&sv(q(), &[(2, 1)])).is_none());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_vec() -> impl Strategy<Value = SparseVec> {
            proptest::collection::vec(-3i64..=3, 6).prop_map(|entries| {
                sv_collect(
                    FieldSpec::Rational,
                    entries
                        .into_iter()
                        .enumerate()
                        .map(|(i, v)| (i, FieldSpec::Rational.from_i64(v))),
                )
            })
        }

        fn arb_subspace() -> impl Strategy<Value = Subspace> {
            proptest::collection::vec(arb_vec(), 0..4)
                .prop_map(|vs| Subspace::from_spanning(FieldSpec::Rational, 6, vs))
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            // dim(a ∩ b) + dim(a + b) = dim a + dim b on random 6-dim instances
            #[test]
            fn modularity_of_dimensions(a in arb_subspace(), b in arb_subspace()) {
                let meet = a.intersect(&b).unwrap();
                let join = a.sum(&b).unwrap();
                prop_assert_eq!(meet.dim() + join.dim(), a.dim() + b.dim());
                prop_assert!(a.contains(&meet) && b.contains(&meet));
                prop_assert!(join.contains(&a) && join.contains(&b));
            }

            #[test]
            fn quotient_representatives_complete_basis(a in arb_subspace(), b in arb_subspace()) {
                let meet = a.intersect(&b).unwrap();
                let reps = a.quotient_basis(&meet).unwrap();
                prop_assert_eq!(reps.len() + meet.dim(), a.dim());
                let mut vectors = meet.basis().to_vec();
                vectors.extend(reps);
                let rebuilt = Subspace::from_spanning(FieldSpec::Rational, 6, vectors);
                prop_assert_eq!(rebuilt, a);
            }
        }
    }
}
