//! Shared fixtures for unit tests: the small algebras and actions the
//! whole corpus keeps reusing.

use crate::action::{GroupAction, QuiverActionSpec};
use crate::algebra::StructureAlgebra;
use crate::field::FieldSpec;
use crate::group::FiniteGroup;
use crate::linalg::{sv_unit, Matrix};
use crate::quadratic::{QuadraticAlgebra, Relation};
use crate::quiver::Quiver;

/// `k[x]/(x^2)` with basis `{1, x}`.
pub fn dual_numbers(field: FieldSpec) -> StructureAlgebra {
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

/// `C_2` acting on `k[x]/(x^2)` by `g(x) = -x`.
pub fn sign_action(field: FieldSpec) -> (StructureAlgebra, GroupAction) {
    let alg = dual_numbers(field);
    let g = Matrix::from_triplets(
        field,
        2,
        2,
        vec![(0, 0, field.one()), (1, 1, field.from_i64(-1))],
    );
    let action = GroupAction::new(
        FiniteGroup::cyclic(2),
        vec![Matrix::identity(field, 2), g],
        &alg,
    )
    .unwrap();
    (alg, action)
}

/// The field with four elements over `F_2`: basis `{1, w}`, `w^2 = w + 1`,
/// together with the Frobenius `w -> w^2` generating `C_2`.
pub fn f4_frobenius() -> (StructureAlgebra, GroupAction) {
    let f = FieldSpec::prime(2).unwrap();
    let one = f.one();
    let w_sq = vec![(0, one.clone()), (1, one.clone())];
    let alg = StructureAlgebra::new(
        f,
        vec!["1".into(), "w".into()],
        vec![
            vec![sv_unit(0, f), sv_unit(1, f)],
            vec![sv_unit(1, f), w_sq.clone()],
        ],
        sv_unit(0, f),
        Some(vec![sv_unit(0, f)]),
    )
    .unwrap();
    let frob = Matrix::from_triplets(
        f,
        2,
        2,
        vec![
            (0, 0, one.clone()),
            (0, 1, one.clone()),
            (1, 1, one),
        ],
    );
    let action = GroupAction::new(
        FiniteGroup::cyclic(2),
        vec![Matrix::identity(f, 2), frob],
        &alg,
    )
    .unwrap();
    (alg, action)
}

/// `k[x]/(x^2)` as a quadratic quiver algebra (one loop, relation `x^2`).
pub fn loop_mod_square(field: FieldSpec, truncation: usize) -> QuadraticAlgebra {
    let quiver = Quiver::new(
        vec!["v".into()],
        vec![("x".into(), "v".into(), "v".into())],
    )
    .unwrap();
    let rel = Relation::new(&quiver, field, vec![(field.one(), vec![0, 0])]).unwrap();
    QuadraticAlgebra::new(quiver, vec![rel], field, truncation).unwrap()
}

/// The path algebra of `A_2` (one arrow `a: 1 -> 2`, no relations).
pub fn path_a2(field: FieldSpec, truncation: usize) -> QuadraticAlgebra {
    let quiver = Quiver::new(
        vec!["1".into(), "2".into()],
        vec![("a".into(), "1".into(), "2".into())],
    )
    .unwrap();
    QuadraticAlgebra::new(quiver, vec![], field, truncation).unwrap()
}

/// `A_3` with the single monomial relation `a1 a2`.
pub fn a3_mod_ab(field: FieldSpec, truncation: usize) -> QuadraticAlgebra {
    let quiver = crate::quiver::expand_preset("A_3").unwrap();
    let rel = Relation::new(&quiver, field, vec![(field.one(), vec![0, 1])]).unwrap();
    QuadraticAlgebra::new(quiver, vec![rel], field, truncation).unwrap()
}

/// The sign action on the loop quiver presentation of `k[x]/(x^2)`.
pub fn loop_sign_specs(field: FieldSpec) -> Vec<QuiverActionSpec> {
    vec![
        QuiverActionSpec {
            vertex_perm: vec![0],
            arrow_images: vec![sv_unit(0, field)],
        },
        QuiverActionSpec {
            vertex_perm: vec![0],
            arrow_images: vec![vec![(0, field.from_i64(-1))]],
        },
    ]
}
