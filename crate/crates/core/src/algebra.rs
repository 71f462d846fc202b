//! Finite-dimensional algebras presented by structure constants.
//!
//! This is the common form every construction in the toolkit produces
//! (skew group algebras, smash products, covering algebras, matrix rings,
//! tensor products, opposites). Construction always re-verifies
//! associativity, the unit axioms and, when supplied, the complete
//! orthogonal idempotent system.

use crate::error::Error;
use crate::field::FieldSpec;
use crate::linalg::{
    rank_kernel_image, solve_homogeneous, sv_add_scaled, sv_collect, sv_unit, Matrix,
    SparseVec, Subspace,
};

#[derive(Clone, Debug)]
pub struct StructureAlgebra {
    pub field: FieldSpec,
    labels: Vec<String>,
    /// `product[i][j]` = coordinates of `b_i * b_j` in the basis.
    product: Vec<Vec<SparseVec>>,
    unit: SparseVec,
    idempotents: Option<Vec<SparseVec>>,
}

impl StructureAlgebra {
    pub fn new(
        field: FieldSpec,
        labels: Vec<String>,
        product: Vec<Vec<SparseVec>>,
        unit: SparseVec,
        idempotents: Option<Vec<SparseVec>>,
    ) -> Result<Self, Error> {
        let alg = StructureAlgebra {
            field,
            labels,
            product,
            unit,
            idempotents,
        };
        alg.validate()?;
        Ok(alg)
    }

    fn validate(&self) -> Result<(), Error> {
        let n = self.labels.len();
        if self.product.len() != n || self.product.iter().any(|row| row.len() != n) {
            return Err(Error::Input("structure constant table has wrong shape".into()));
        }
        // unit axioms
        for i in 0..n {
            let b = sv_unit(i, self.field);
            if self.mul(&self.unit, &b) != b || self.mul(&b, &self.unit) != b {
                return Err(Error::Input(format!(
                    "unit axiom fails on basis element {}",
                    self.labels[i]
                )));
            }
        }
        // associativity on all basis triples
        for i in 0..n {
            for j in 0..n {
                let ij = self.product[i][j].clone();
                for k in 0..n {
                    let left = self.mul(&ij, &sv_unit(k, self.field));
                    let right = self.mul(&sv_unit(i, self.field), &self.product[j][k]);
                    if left != right {
                        return Err(Error::Input(format!(
                            "associativity fails on ({}, {}, {})",
                            self.labels[i], self.labels[j], self.labels[k]
                        )));
                    }
                }
            }
        }
        if let Some(idems) = &self.idempotents {
            let mut total: SparseVec = Vec::new();
            for (a, e) in idems.iter().enumerate() {
                if self.mul(e, e) != *e {
                    return Err(Error::Input(format!("idempotent {a} is not idempotent")));
                }
                for (b, f) in idems.iter().enumerate() {
                    if a != b && !self.mul(e, f).is_empty() {
                        return Err(Error::Input(format!(
                            "idempotents {a} and {b} are not orthogonal"
                        )));
                    }
                }
                total = sv_add_scaled(self.field, &total, e, &self.field.one());
            }
            if total != self.unit {
                return Err(Error::Input("idempotents do not sum to the unit".into()));
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn unit(&self) -> &SparseVec {
        &self.unit
    }

    pub fn idempotents(&self) -> Option<&[SparseVec]> {
        self.idempotents.as_deref()
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec {
        &self.product[i][j]
    }

    /// Bilinear product of two coordinate vectors.
    pub fn mul(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut acc: SparseVec = Vec::new();
        for (i, xi) in x {
            for (j, yj) in y {
                let c = self.field.mul(xi, yj);
                acc = sv_add_scaled(self.field, &acc, &self.product[*i][*j], &c);
            }
        }
        acc
    }

    /// Matrix of left multiplication by `x`.
    pub fn left_mult(&self, x: &SparseVec) -> Matrix {
        let n = self.dim();
        let mut triplets = Vec::new();
        for j in 0..n {
            let col = self.mul(x, &sv_unit(j, self.field));
            for (r, v) in col {
                triplets.push((r, j, v));
            }
        }
        Matrix::from_triplets(self.field, n, n, triplets)
    }

    /// Matrix of right multiplication by `x`.
    pub fn right_mult(&self, x: &SparseVec) -> Matrix {
        let n = self.dim();
        let mut triplets = Vec::new();
        for j in 0..n {
            let col = self.mul(&sv_unit(j, self.field), x);
            for (r, v) in col {
                triplets.push((r, j, v));
            }
        }
        Matrix::from_triplets(self.field, n, n, triplets)
    }

    /// Solve `{x : x b_i = b_i x for all i}` exactly.
    pub fn center(&self) -> Subspace {
        let n = self.dim();
        let mut constraints = Vec::new();
        // coordinate m of (b_k b_i - b_i b_k), as a row over unknowns k
        for i in 0..n {
            let mut rows: Vec<SparseVec> = vec![Vec::new(); n];
            for k in 0..n {
                let mut diff = self.product[k][i].clone();
                diff = sv_add_scaled(
                    self.field,
                    &diff,
                    &self.product[i][k],
                    &self.field.neg(&self.field.one()),
                );
                for (m, c) in diff {
                    rows[m].push((k, c));
                }
            }
            for row in rows {
                if !row.is_empty() {
                    constraints.push(sv_collect(self.field, row));
                }
            }
        }
        solve_homogeneous(self.field, n, constraints)
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.product[i][j] == self.product[j][i]))
    }

    /// `x` is a unit iff left multiplication by `x` is invertible.
    pub fn is_invertible(&self, x: &SparseVec) -> bool {
        let (rank, _, _) = rank_kernel_image(&self.left_mult(x));
        rank == self.dim()
    }

    pub fn opposite(&self) -> StructureAlgebra {
        let n = self.dim();
        let product = (0..n)
            .map(|i| (0..n).map(|j| self.product[j][i].clone()).collect())
            .collect();
        StructureAlgebra {
            field: self.field,
            labels: self.labels.iter().map(|l| format!("{l}^o")).collect(),
            product,
            unit: self.unit.clone(),
            idempotents: self.idempotents.clone(),
        }
    }

    /// Tensor product algebra; basis pairs indexed `i * other.dim() + j`.
    pub fn tensor(&self, other: &StructureAlgebra) -> StructureAlgebra {
        assert_eq!(self.field, other.field);
        let f = self.field;
        let (n, m) = (self.dim(), other.dim());
        let pair = |i: usize, j: usize| i * m + j;
        let mut labels = Vec::with_capacity(n * m);
        for i in 0..n {
            for j in 0..m {
                labels.push(format!("{}(x){}", self.labels[i], other.labels[j]));
            }
        }
        let mut product = vec![vec![Vec::new(); n * m]; n * m];
        for i1 in 0..n {
            for j1 in 0..m {
                for i2 in 0..n {
                    for j2 in 0..m {
                        let pa = &self.product[i1][i2];
                        let pb = &other.product[j1][j2];
                        let mut terms = Vec::new();
                        for (a, ca) in pa {
                            for (b, cb) in pb {
                                terms.push((pair(*a, *b), f.mul(ca, cb)));
                            }
                        }
                        product[pair(i1, j1)][pair(i2, j2)] = sv_collect(f, terms);
                    }
                }
            }
        }
        let mut unit_terms = Vec::new();
        for (a, ca) in &self.unit {
            for (b, cb) in &other.unit {
                unit_terms.push((pair(*a, *b), f.mul(ca, cb)));
            }
        }
        StructureAlgebra {
            field: f,
            labels,
            product,
            unit: sv_collect(f, unit_terms),
            idempotents: None,
        }
    }

    /// Matrix algebra `M_n(A)`; basis element `(r, c, k)` is `b_k E_{rc}`,
    /// indexed `(r * n + c) * dim A + k`.
    pub fn matrix_algebra(base: &StructureAlgebra, n: usize) -> StructureAlgebra {
        let f = base.field;
        let d = base.dim();
        let idx = |r: usize, c: usize, k: usize| (r * n + c) * d + k;
        let mut labels = Vec::with_capacity(n * n * d);
        for r in 0..n {
            for c in 0..n {
                for k in 0..d {
                    labels.push(format!("{}E[{r},{c}]", base.labels[k]));
                }
            }
        }
        let mut product = vec![vec![Vec::new(); n * n * d]; n * n * d];
        for r1 in 0..n {
            for c1 in 0..n {
                for k1 in 0..d {
                    for r2 in 0..n {
                        for c2 in 0..n {
                            if c1 != r2 {
                                continue;
                            }
                            for k2 in 0..d {
                                let coords: SparseVec = base.product[k1][k2]
                                    .iter()
                                    .map(|(k, v)| (idx(r1, c2, *k), v.clone()))
                                    .collect();
                                product[idx(r1, c1, k1)][idx(r2, c2, k2)] = coords;
                            }
                        }
                    }
                }
            }
        }
        let mut unit = Vec::new();
        for r in 0..n {
            for (k, v) in &base.unit {
                unit.push((idx(r, r, *k), v.clone()));
            }
        }
        let idempotents = Some(
            (0..n)
                .map(|r| {
                    sv_collect(
                        f,
                        base.unit.iter().map(|(k, v)| (idx(r, r, *k), v.clone())),
                    )
                })
                .collect(),
        );
        StructureAlgebra {
            field: f,
            labels,
            product,
            unit: sv_collect(f, unit),
            idempotents,
        }
    }

    /// The ground field as a one-dimensional algebra.
    pub fn scalar(field: FieldSpec) -> StructureAlgebra {
        StructureAlgebra {
            field,
            labels: vec!["1".into()],
            product: vec![vec![sv_unit(0, field)]],
            unit: sv_unit(0, field),
            idempotents: Some(vec![sv_unit(0, field)]),
        }
    }

    /// Induced algebra structure on a subspace, if it is closed under the
    /// product and contains the unit. Basis labels record coordinates.
    pub fn subalgebra_on(&self, space: &Subspace) -> Result<StructureAlgebra, Error> {
        if space.ambient != self.dim() {
            return Err(Error::AmbientMismatch(space.ambient, self.dim()));
        }
        if !space.contains_vector(&self.unit) {
            return Err(Error::Containment(
                "subspace does not contain the unit".into(),
            ));
        }
        let f = self.field;
        let d = space.dim();
        let mut product = vec![vec![Vec::new(); d]; d];
        for i in 0..d {
            for j in 0..d {
                let p = self.mul(&space.basis()[i], &space.basis()[j]);
                let coords = space.coordinates(&p).ok_or_else(|| {
                    Error::Containment("subspace is not closed under the product".into())
                })?;
                product[i][j] = coords
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !f.is_zero(c))
                    .collect();
            }
        }
        let unit = space
            .coordinates(&self.unit)
            .unwrap()
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !f.is_zero(c))
            .collect();
        StructureAlgebra::new(
            f,
            (0..d).map(|i| format!("s{i}")).collect(),
            product,
            unit,
            None,
        )
    }

    /// For an algebra with complete orthogonal idempotents: the pair
    /// `(u, w)` with `e_u b e_w = b` for each basis element, if every basis
    /// element is homogeneous in that sense.
    pub fn idempotent_support(&self) -> Result<Vec<(usize, usize)>, Error> {
        let idems = self
            .idempotents
            .as_ref()
            .ok_or_else(|| Error::Input("algebra carries no idempotent system".into()))?;
        let mut out = Vec::with_capacity(self.dim());
        for i in 0..self.dim() {
            let b = sv_unit(i, self.field);
            let mut found = None;
            for (u, e) in idems.iter().enumerate() {
                for (w, f_) in idems.iter().enumerate() {
                    if self.mul(&self.mul(e, &b), f_) == b {
                        if found.is_some() {
                            return Err(Error::Internal(format!(
                                "basis element {} supported on two idempotent pairs",
                                self.labels[i]
                            )));
                        }
                        found = Some((u, w));
                    }
                }
            }
            out.push(found.ok_or_else(|| {
                Error::Input(format!(
                    "basis element {} is not idempotent-homogeneous",
                    self.labels[i]
                ))
            })?);
        }
        Ok(out)
    }

    /// Check a candidate linear map (columns = images of our basis) for
    /// being an algebra isomorphism onto `target`, exhaustively on basis
    /// pairs. Returns a counterexample pair label on failure.
    pub fn check_isomorphism(
        &self,
        target: &StructureAlgebra,
        map: &Matrix,
    ) -> Result<(), String> {
        if self.dim() != target.dim() {
            return Err(format!(
                "dimension mismatch {} vs {}",
                self.dim(),
                target.dim()
            ));
        }
        if map.rows != target.dim() || map.cols != self.dim() {
            return Err("map has wrong shape".into());
        }
        let (rank, _, _) = rank_kernel_image(map);
        if rank != self.dim() {
            return Err("map is not bijective".into());
        }
        if map.apply(&self.unit) != target.unit {
            return Err("map does not preserve the unit".into());
        }
        for i in 0..self.dim() {
            let fi = map.apply(&sv_unit(i, self.field));
            for j in 0..self.dim() {
                let fj = map.apply(&sv_unit(j, self.field));
                let lhs = map.apply(&self.product[i][j]);
                let rhs = target.mul(&fi, &fj);
                if lhs != rhs {
                    return Err(format!(
                        "multiplicativity fails on ({}, {})",
                        self.labels[i], self.labels[j]
                    ));
                }
            }
        }
        Ok(())
    }

    /// Format an element for reports.
    pub fn format_element(&self, x: &SparseVec) -> String {
        if x.is_empty() {
            return "0".into();
        }
        x.iter()
            .map(|(i, c)| {
                if self.field.is_one(c) {
                    self.labels[*i].clone()
                } else {
                    format!("{}*{}", self.field.format(c), self.labels[*i])
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Convenience getter used across modules: coordinates of an idempotent
/// `e_v` when the algebra has them.
pub fn idempotent(alg: &StructureAlgebra, v: usize) -> Result<SparseVec, Error> {
    alg.idempotents()
        .map(|e| e[v].clone())
        .ok_or_else(|| Error::Input("algebra carries no idempotent system".into()))
}

pub fn scalar_times(field: FieldSpec, c: i64, v: &SparseVec) -> SparseVec {
    crate::linalg::sv_scale(field, v, &field.from_i64(c))
}

/// The 2x2 example everyone reaches for: full matrix algebra over the field.
pub fn matrix_algebra_over_field(field: FieldSpec, n: usize) -> StructureAlgebra {
    StructureAlgebra::matrix_algebra(&StructureAlgebra::scalar(field), n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rational
    }

    /// k[x]/(x^2): basis {1, x}.
    pub(crate) fn dual_numbers(field: FieldSpec) -> StructureAlgebra {
        StructureAlgebra::new(
            field,
            vec!["1".into(), "x".into()],
            vec![
                vec![sv_unit(0, field), sv_unit(1, field)],
                vec![sv_unit(1, field), Vec::new()],
            ],
            sv_unit(0, field),
            Some(vec![sv_unit(0, field)]),
        )
        .unwrap()
    }

    #[test]
    fn commutative_center_is_everything() {
        let a = dual_numbers(q());
        assert!(a.is_commutative());
        assert_eq!(a.center().dim(), 2);
    }

    #[test]
    fn matrix_ring_center_is_scalars() {
        let m2 = matrix_algebra_over_field(q(), 2);
        assert_eq!(m2.dim(), 4);
        let center = m2.center();
        assert_eq!(center.dim(), 1);
        assert!(center.contains_vector(m2.unit()));
        assert!(!m2.is_commutative());
    }

    #[test]
    fn associativity_violation_is_rejected() {
        // b*b = 1 but also b*1 twisted to break (b b) b = b (b b)
        let f = q();
        let bad = StructureAlgebra::new(
            f,
            vec!["1".into(), "b".into()],
            vec![
                vec![sv_unit(0, f), sv_unit(1, f)],
                vec![sv_unit(1, f), vec![(0, f.one()), (1, f.one())]],
            ],
            sv_unit(0, f),
            None,
        );
        // this table happens to be associative; break the unit instead
        assert!(bad.is_ok());
        let no_unit = StructureAlgebra::new(
            f,
            vec!["1".into(), "b".into()],
            vec![
                vec![sv_unit(0, f), Vec::new()],
                vec![sv_unit(1, f), Vec::new()],
            ],
            sv_unit(0, f),
            None,
        );
        assert!(no_unit.is_err());
    }

    #[test]
    fn opposite_and_tensor_dimensions() {
        let m2 = matrix_algebra_over_field(q(), 2);
        let op = m2.opposite();
        assert_eq!(op.center().dim(), 1);
        let t = m2.tensor(&op);
        assert_eq!(t.dim(), 16);
        assert_eq!(t.center().dim(), 1);
    }

    #[test]
    fn invertibility_via_left_mult() {
        let a = dual_numbers(q());
        assert!(a.is_invertible(&sv_unit(0, q())));
        assert!(!a.is_invertible(&sv_unit(1, q())));
        // 1 + x is a unit
        assert!(a.is_invertible(&vec![(0, q().one()), (1, q().one())]));
    }

    #[test]
    fn center_subalgebra_is_unital_commutative() {
        let m2 = matrix_algebra_over_field(q(), 2);
        let c = m2.subalgebra_on(&m2.center()).unwrap();
        assert_eq!(c.dim(), 1);
        assert!(c.is_commutative());
    }

    #[test]
    fn idempotent_support_of_matrix_units() {
        let m2 = matrix_algebra_over_field(q(), 2);
        let support = m2.idempotent_support().unwrap();
        assert_eq!(support, vec![(0, 0), (0, 1), (1, 0), (1, 1)]);
    }
}
