//! Finite group actions on algebras, skew group algebras, twisted modules
//! and bimodules, Hom-space solvers, and fixed points.
//!
//! The action of `g` is stored as the matrix whose column `j` holds the
//! coordinates of `g(b_j)`, so the assignment `g -> matrix` being a group
//! homomorphism reads `M_g * M_h = M_{gh}`.

use crate::algebra::StructureAlgebra;
use crate::error::Error;
use crate::field::FieldSpec;
use crate::group::FiniteGroup;
use crate::linalg::{
    solve_homogeneous, sv_add_scaled, sv_collect, sv_unit, Matrix, SparseVec, Subspace,
};
use crate::quadratic::QuadraticAlgebra;

#[derive(Clone, Debug)]
pub struct GroupAction {
    pub group: FiniteGroup,
    /// One matrix per group element, indexed like the group's elements.
    matrices: Vec<Matrix>,
    /// Some `g != e` acts as the identity.
    pub non_faithful: bool,
}

impl GroupAction {
    /// Validate that the matrices define a unital algebra automorphism for
    /// every element and a group homomorphism via the Cayley table.
    pub fn new(
        group: FiniteGroup,
        matrices: Vec<Matrix>,
        target: &StructureAlgebra,
    ) -> Result<Self, Error> {
        let n = target.dim();
        if matrices.len() != group.order() {
            return Err(Error::Input("action must cover every group element".into()));
        }
        for m in &matrices {
            if m.rows != n || m.cols != n {
                return Err(Error::Input("action matrix has wrong shape".into()));
            }
        }
        let id = Matrix::identity(target.field, n);
        if matrices[group.identity()] != id {
            return Err(Error::Input("identity element must act as the identity".into()));
        }
        for g in 0..group.order() {
            for h in 0..group.order() {
                if matrices[g].mul(&matrices[h]) != matrices[group.mul(g, h)] {
                    return Err(Error::Input(format!(
                        "assignment is not a homomorphism: action({}) . action({}) != action({})",
                        group.name(g),
                        group.name(h),
                        group.name(group.mul(g, h))
                    )));
                }
            }
        }
        for (g, m) in matrices.iter().enumerate() {
            if m.apply(target.unit()) != *target.unit() {
                return Err(Error::Input(format!(
                    "action of {} does not fix the unit",
                    group.name(g)
                )));
            }
            for i in 0..n {
                let gi = m.apply(&sv_unit(i, target.field));
                for j in 0..n {
                    let gj = m.apply(&sv_unit(j, target.field));
                    let lhs = m.apply(target.basis_product(i, j));
                    if lhs != target.mul(&gi, &gj) {
                        return Err(Error::Input(format!(
                            "action of {} is not multiplicative on ({}, {})",
                            group.name(g),
                            target.label(i),
                            target.label(j)
                        )));
                    }
                }
            }
        }
        let non_faithful = (0..group.order())
            .any(|g| g != group.identity() && matrices[g] == id);
        Ok(GroupAction {
            group,
            matrices,
            non_faithful,
        })
    }

    pub fn trivial(group: FiniteGroup, target: &StructureAlgebra) -> Self {
        let id = Matrix::identity(target.field, target.dim());
        let non_faithful = group.order() > 1;
        GroupAction {
            matrices: vec![id; group.order()],
            group,
            non_faithful,
        }
    }

    pub fn matrix(&self, g: usize) -> &Matrix {
        &self.matrices[g]
    }

    pub fn apply(&self, g: usize, x: &SparseVec) -> SparseVec {
        self.matrices[g].apply(x)
    }

    /// `char k` does not divide `|G|`: the range where the fixed-point
    /// identities for Hom and Ext are guaranteed.
    pub fn maschke_ok(&self, field: FieldSpec) -> bool {
        match field.characteristic() {
            0 => true,
            p => (self.group.order() as u64) % p != 0,
        }
    }

    /// Same matrices acting on the opposite algebra.
    pub fn on_opposite(&self) -> GroupAction {
        self.clone()
    }

    /// The `G x G` action on `A (x) A^op` by `(g, h) -> M_g (x) M_h`.
    pub fn enveloping_action(&self) -> (FiniteGroup, Vec<Matrix>) {
        let gg = self.group.direct_product(&self.group);
        let mats = (0..gg.order())
            .map(|x| {
                let (g, h) = (x / self.group.order(), x % self.group.order());
                self.matrices[g].kronecker(&self.matrices[h])
            })
            .collect();
        (gg, mats)
    }

    /// Fixed subspace `{x : g(x) = x for all g}`.
    pub fn fixed_subspace(&self, dim: usize) -> Subspace {
        let f = self.matrices[0].field;
        let id = Matrix::identity(f, dim);
        let mut constraints = Vec::new();
        for m in &self.matrices {
            let diff = m.sub(&id);
            for r in 0..dim {
                if !diff.row(r).is_empty() {
                    constraints.push(diff.row(r).clone());
                }
            }
        }
        solve_homogeneous(f, dim, constraints)
    }
}

/// Fixed subalgebra `{x : g(x) = x}` with its induced structure constants.
pub fn fixed_subalgebra(
    target: &StructureAlgebra,
    action: &GroupAction,
) -> Result<(Subspace, StructureAlgebra), Error> {
    let fixed = action.fixed_subspace(target.dim());
    let alg = target.subalgebra_on(&fixed)?;
    Ok((fixed, alg))
}

/// Per-element action data on a quiver algebra: a vertex permutation plus,
/// for each arrow, an image that is a linear combination of arrows between
/// the permuted endpoints.
#[derive(Clone, Debug)]
pub struct QuiverActionSpec {
    pub vertex_perm: Vec<usize>,
    /// `arrow_images[a]` = sparse combination of arrow indices.
    pub arrow_images: Vec<SparseVec>,
}

/// Matrix of the induced map on the degree-`d` path space `kQ_d`.
pub fn path_space_action(
    quad: &QuadraticAlgebra,
    spec: &QuiverActionSpec,
    d: usize,
) -> Result<Matrix, Error> {
    let f = quad.field;
    let paths = quad.paths(d);
    let dim = paths.len();
    let mut triplets = Vec::new();
    for (col, w) in paths.iter().enumerate() {
        if d == 0 {
            let v = spec.vertex_perm[w.source];
            triplets.push((quad.trivial_path_index(v), col, f.one()));
            continue;
        }
        // expand the tensor product of arrow images
        let mut terms: Vec<(Vec<usize>, crate::field::Scalar)> = vec![(Vec::new(), f.one())];
        for &a in &w.arrows {
            let image = &spec.arrow_images[a];
            let mut next = Vec::with_capacity(terms.len() * image.len());
            for (word, c) in &terms {
                for (b, cb) in image {
                    let mut nw = word.clone();
                    nw.push(*b);
                    next.push((nw, f.mul(c, cb)));
                }
            }
            terms = next;
        }
        for (word, c) in terms {
            let idx = quad.path_index(d, &word).ok_or_else(|| {
                Error::Input("arrow image is not composable along permuted vertices".into())
            })?;
            triplets.push((idx, col, c));
        }
    }
    Ok(Matrix::from_triplets(f, dim, dim, triplets))
}

/// Compile per-element quiver data into a validated `GroupAction` on the
/// flattened algebra. Checks that arrow images respect the permuted
/// endpoints and that the relation span is preserved in degree 2.
pub fn compile_quiver_action(
    quad: &QuadraticAlgebra,
    flattened: &StructureAlgebra,
    group: FiniteGroup,
    specs: &[QuiverActionSpec],
) -> Result<GroupAction, Error> {
    let f = quad.field;
    let nv = quad.quiver().vertex_count();
    if specs.len() != group.order() {
        return Err(Error::Input("action must cover every group element".into()));
    }
    for (g, spec) in specs.iter().enumerate() {
        if spec.vertex_perm.len() != nv || spec.arrow_images.len() != quad.quiver().arrow_count()
        {
            return Err(Error::Input("action spec has wrong shape".into()));
        }
        let mut seen = vec![false; nv];
        for &v in &spec.vertex_perm {
            if v >= nv || seen[v] {
                return Err(Error::Input(format!(
                    "vertex map of {} is not a permutation",
                    group.name(g)
                )));
            }
            seen[v] = true;
        }
        for (a, image) in spec.arrow_images.iter().enumerate() {
            let arrow = quad.quiver().arrow(a);
            for (b, _) in image {
                let target = quad.quiver().arrow(*b);
                if target.source != spec.vertex_perm[arrow.source]
                    || target.target != spec.vertex_perm[arrow.target]
                {
                    return Err(Error::Input(format!(
                        "image of arrow {} under {} has mismatched endpoints",
                        arrow.name,
                        group.name(g)
                    )));
                }
            }
        }
        // relation span preserved in kQ_2
        if quad.truncation() >= 2 {
            let m2 = path_space_action(quad, spec, 2)?;
            let rel = quad.relation_subspace();
            for row in rel.basis() {
                if !rel.contains_vector(&m2.apply(row)) {
                    return Err(Error::Input(format!(
                        "action of {} does not preserve the relation span",
                        group.name(g)
                    )));
                }
            }
        }
    }
    // flattened matrices: image of each monomial, reduced degreewise
    let info = quad.monomial_info();
    let n = flattened.dim();
    let mut matrices = Vec::with_capacity(group.order());
    for spec in specs {
        let mut triplets = Vec::new();
        for (col, (d, w)) in info.iter().enumerate() {
            let md = path_space_action(quad, spec, *d)?;
            let idx = if *d == 0 {
                quad.trivial_path_index(w.source)
            } else {
                quad.path_index(*d, &w.arrows).unwrap()
            };
            let image = md.apply(&sv_unit(idx, f));
            let reduced = quad.reduce(*d, &image);
            for (k, c) in reduced {
                triplets.push((quad.global_index(*d, k), col, c));
            }
        }
        matrices.push(Matrix::from_triplets(f, n, n, triplets));
    }
    GroupAction::new(group, matrices, flattened)
}

/// The skew group algebra `A[G]` with basis `{b_i (.) g}` and product
/// `(a (.) g)(b (.) h) = a g(b) (.) gh`.
#[derive(Clone, Debug)]
pub struct SkewGroupAlgebra {
    pub algebra: StructureAlgebra,
    pub base_dim: usize,
    pub group_order: usize,
}

impl SkewGroupAlgebra {
    pub fn index(&self, i: usize, g: usize) -> usize {
        i * self.group_order + g
    }

    /// `x (.) e` for `x` in base coordinates.
    pub fn embed_base(&self, x: &SparseVec, identity: usize) -> SparseVec {
        let mut out: SparseVec = x
            .iter()
            .map(|(i, c)| (self.index(*i, identity), c.clone()))
            .collect();
        out.sort_by_key(|e| e.0);
        out
    }

    /// Action matrices of `b_i (.) e` (the base algebra acting on the left
    /// of the regular module), used to restrict modules to `A`.
    pub fn base_basis_indices(&self, identity: usize) -> Vec<usize> {
        (0..self.base_dim).map(|i| self.index(i, identity)).collect()
    }
}

pub fn build_skew(
    base: &StructureAlgebra,
    action: &GroupAction,
) -> Result<SkewGroupAlgebra, Error> {
    let f = base.field;
    let n = base.dim();
    let go = action.group.order();
    let dim = n * go;
    let idx = |i: usize, g: usize| i * go + g;
    let mut labels = Vec::with_capacity(dim);
    for i in 0..n {
        for g in 0..go {
            labels.push(format!("{}(.){}", base.label(i), action.group.name(g)));
        }
    }
    let mut product = vec![vec![Vec::new(); dim]; dim];
    for i in 0..n {
        for g in 0..go {
            for j in 0..n {
                let gb = action.apply(g, &sv_unit(j, f));
                let prod = base.mul(&sv_unit(i, f), &gb);
                for h in 0..go {
                    let gh = action.group.mul(g, h);
                    product[idx(i, g)][idx(j, h)] = prod
                        .iter()
                        .map(|(k, c)| (idx(*k, gh), c.clone()))
                        .collect();
                }
            }
        }
    }
    let e = action.group.identity();
    let unit: SparseVec = base
        .unit()
        .iter()
        .map(|(i, c)| (idx(*i, e), c.clone()))
        .collect();
    let idempotents = base.idempotents().map(|idems| {
        idems
            .iter()
            .map(|ev| {
                sv_collect(f, ev.iter().map(|(i, c)| (idx(*i, e), c.clone())))
            })
            .collect()
    });
    let algebra = StructureAlgebra::new(
        f,
        labels,
        product,
        sv_collect(f, unit),
        idempotents,
    )?;
    Ok(SkewGroupAlgebra {
        algebra,
        base_dim: n,
        group_order: go,
    })
}

/// Outcome of an isomorphism verification: the map plus either success or a
/// counterexample description.
#[derive(Clone, Debug)]
pub struct IsoReport {
    pub map: Matrix,
    pub ok: bool,
    pub counterexample: Option<String>,
}

/// Opposite-ring comparison: `(A[G])^op` is isomorphic to `A^op[G]` via
/// `theta((a (.) g)^o) = (g^{-1}(a))^o (.) g^{-1}`.
pub fn check_op_iso(base: &StructureAlgebra, action: &GroupAction) -> Result<IsoReport, Error> {
    let f = base.field;
    let skew = build_skew(base, action)?;
    let lhs = skew.algebra.opposite();
    let op = base.opposite();
    let skew_op = build_skew(&op, action)?;
    let go = action.group.order();
    let mut triplets = Vec::new();
    for i in 0..base.dim() {
        for g in 0..go {
            let ginv = action.group.inv(g);
            let image = action.apply(ginv, &sv_unit(i, f));
            for (k, c) in image {
                triplets.push((skew_op.index(k, ginv), skew.index(i, g), c));
            }
        }
    }
    let map = Matrix::from_triplets(f, lhs.dim(), lhs.dim(), triplets);
    let res = lhs.check_isomorphism(&skew_op.algebra, &map);
    Ok(IsoReport {
        map,
        ok: res.is_ok(),
        counterexample: res.err(),
    })
}

/// Enveloping-algebra check: `A[G] (x) (A[G])^op` is isomorphic to
/// `(A (x) A^op)[G x G]` via
/// `psi(a g (x) (b h)^o) = a (x) (h^{-1}(b))^o (.) (g, h^{-1})`.
pub fn check_env_iso(base: &StructureAlgebra, action: &GroupAction) -> Result<IsoReport, Error> {
    let f = base.field;
    let skew = build_skew(base, action)?;
    let lhs = skew.algebra.tensor(&skew.algebra.opposite());
    let env = base.tensor(&base.opposite());
    let (gg, mats) = action.enveloping_action();
    let env_action = GroupAction::new(gg, mats, &env)?;
    let rhs = build_skew(&env, &env_action)?;

    let n = base.dim();
    let go = action.group.order();
    let d_skew = skew.algebra.dim();
    let mut triplets = Vec::new();
    for i in 0..n {
        for g in 0..go {
            for j in 0..n {
                for h in 0..go {
                    let col = skew.index(i, g) * d_skew + skew.index(j, h);
                    let hinv = action.group.inv(h);
                    let image = action.apply(hinv, &sv_unit(j, f));
                    for (k, c) in image {
                        let env_basis = i * n + k;
                        let gg_elt = g * go + hinv;
                        triplets.push((rhs.index(env_basis, gg_elt), col, c));
                    }
                }
            }
        }
    }
    let map = Matrix::from_triplets(f, lhs.dim(), lhs.dim(), triplets);
    let res = lhs.check_isomorphism(&rhs.algebra, &map);
    Ok(IsoReport {
        map,
        ok: res.is_ok(),
        counterexample: res.err(),
    })
}

/// A left module over a structure algebra, as one action matrix per basis
/// element of the algebra.
#[derive(Clone, Debug)]
pub struct ModuleRep {
    pub dim: usize,
    action: Vec<Matrix>,
}

impl ModuleRep {
    pub fn new(alg: &StructureAlgebra, action: Vec<Matrix>) -> Result<Self, Error> {
        let f = alg.field;
        if action.len() != alg.dim() {
            return Err(Error::Input("module needs one matrix per basis element".into()));
        }
        let dim = action.first().map_or(0, |m| m.rows);
        for m in &action {
            if m.rows != dim || m.cols != dim {
                return Err(Error::Input("module action matrices must be square".into()));
            }
        }
        let of = |x: &SparseVec| -> Matrix {
            let mut acc = Matrix::zero(f, dim, dim);
            for (i, c) in x {
                acc = acc.add_scaled(&action[*i], c);
            }
            acc
        };
        if of(alg.unit()) != Matrix::identity(f, dim) {
            return Err(Error::Input("module unit axiom fails".into()));
        }
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                if action[i].mul(&action[j]) != of(alg.basis_product(i, j)) {
                    return Err(Error::Input(format!(
                        "module axiom fails on ({}, {})",
                        alg.label(i),
                        alg.label(j)
                    )));
                }
            }
        }
        Ok(ModuleRep { dim, action })
    }

    pub fn regular(alg: &StructureAlgebra) -> Self {
        let action = (0..alg.dim())
            .map(|i| alg.left_mult(&sv_unit(i, alg.field)))
            .collect();
        ModuleRep {
            dim: alg.dim(),
            action,
        }
    }

    pub fn act(&self, i: usize) -> &Matrix {
        &self.action[i]
    }

    pub fn act_elem(&self, f: FieldSpec, x: &SparseVec) -> Matrix {
        let mut acc = Matrix::zero(f, self.dim, self.dim);
        for (i, c) in x {
            acc = acc.add_scaled(&self.action[*i], c);
        }
        acc
    }

    /// Twist by an automorphism: the new action of `b` is the old action of
    /// `g(b)`.
    pub fn twist(&self, f: FieldSpec, auto: &Matrix) -> ModuleRep {
        let n = self.action.len();
        let action = (0..n)
            .map(|j| {
                let image = auto.apply(&sv_unit(j, f));
                let mut acc = Matrix::zero(f, self.dim, self.dim);
                for (k, c) in image {
                    acc = acc.add_scaled(&self.action[k], &c);
                }
                acc
            })
            .collect();
        ModuleRep {
            dim: self.dim,
            action,
        }
    }
}

/// `Hom_A(M, N)` as a subspace of matrices, flattened row-major
/// (`phi[r][c]` at index `r * M.dim + c`).
pub fn hom_module(alg: &StructureAlgebra, m: &ModuleRep, n: &ModuleRep) -> Subspace {
    let f = alg.field;
    let unknowns = n.dim * m.dim;
    let mut constraints = Vec::new();
    for i in 0..alg.dim() {
        let x = m.act(i);
        let y = n.act(i);
        // (phi * X - Y * phi)[a][b] = 0
        for a in 0..n.dim {
            for b in 0..m.dim {
                let mut row: Vec<(usize, crate::field::Scalar)> = Vec::new();
                for c in 0..m.dim {
                    let v = x.get(c, b);
                    if !f.is_zero(&v) {
                        row.push((a * m.dim + c, v));
                    }
                }
                for r in 0..n.dim {
                    let v = y.get(a, r);
                    if !f.is_zero(&v) {
                        row.push((r * m.dim + b, f.neg(&v)));
                    }
                }
                let row = sv_collect(f, row);
                if !row.is_empty() {
                    constraints.push(row);
                }
            }
        }
    }
    solve_homogeneous(f, unknowns, constraints)
}

/// An `A`-`A` bimodule: left and right action matrices per basis element.
#[derive(Clone, Debug)]
pub struct Bimodule {
    pub dim: usize,
    left: Vec<Matrix>,
    right: Vec<Matrix>,
}

impl Bimodule {
    pub fn new(alg: &StructureAlgebra, left: Vec<Matrix>, right: Vec<Matrix>) -> Result<Self, Error> {
        let dim = left.first().map_or(0, |m| m.rows);
        let lm = ModuleRep::new(alg, left.clone())?;
        // right actions form a module over the opposite algebra
        ModuleRep::new(&alg.opposite(), right.clone())?;
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                if lm.act(i).mul(&right[j]) != right[j].mul(lm.act(i)) {
                    return Err(Error::Input(format!(
                        "left and right actions do not commute on ({}, {})",
                        alg.label(i),
                        alg.label(j)
                    )));
                }
            }
        }
        Ok(Bimodule { dim, left, right })
    }

    pub fn regular(alg: &StructureAlgebra) -> Self {
        let left = (0..alg.dim())
            .map(|i| alg.left_mult(&sv_unit(i, alg.field)))
            .collect();
        let right = (0..alg.dim())
            .map(|i| alg.right_mult(&sv_unit(i, alg.field)))
            .collect();
        Bimodule {
            dim: alg.dim(),
            left,
            right,
        }
    }

    pub fn left(&self, i: usize) -> &Matrix {
        &self.left[i]
    }

    pub fn right(&self, i: usize) -> &Matrix {
        &self.right[i]
    }

    /// The twisted bimodule `^g M ^h`: left action through `g`, right action
    /// through `h`.
    pub fn twist(&self, f: FieldSpec, g: &Matrix, h: &Matrix) -> Bimodule {
        let n = self.left.len();
        let compose = |mats: &[Matrix], auto: &Matrix| -> Vec<Matrix> {
            (0..n)
                .map(|j| {
                    let image = auto.apply(&sv_unit(j, f));
                    let mut acc = Matrix::zero(f, self.dim, self.dim);
                    for (k, c) in image {
                        acc = acc.add_scaled(&mats[k], &c);
                    }
                    acc
                })
                .collect()
        };
        Bimodule {
            dim: self.dim,
            left: compose(&self.left, g),
            right: compose(&self.right, h),
        }
    }

    pub fn same_actions(&self, other: &Bimodule) -> bool {
        self.left == other.left && self.right == other.right
    }
}

/// The bimodule `Ag` inside `A[G]`: underlying space `A`, plain left
/// multiplication, right multiplication through `g`.
pub fn skew_component_bimodule(
    base: &StructureAlgebra,
    action: &GroupAction,
    g: usize,
) -> Bimodule {
    let f = base.field;
    let regular = Bimodule::regular(base);
    let id = Matrix::identity(f, base.dim());
    regular.twist(f, &id, action.matrix(g))
}

/// `Hom_{A^e}(M, N)`: solutions of both the left and right intertwining
/// systems, flattened row-major like `hom_module`.
pub fn hom_bimodule(alg: &StructureAlgebra, m: &Bimodule, n: &Bimodule) -> Subspace {
    let f = alg.field;
    let unknowns = n.dim * m.dim;
    let mut constraints = Vec::new();
    let mut push_intertwiner = |x: &Matrix, y: &Matrix| {
        for a in 0..n.dim {
            for b in 0..m.dim {
                let mut row: Vec<(usize, crate::field::Scalar)> = Vec::new();
                for c in 0..m.dim {
                    let v = x.get(c, b);
                    if !f.is_zero(&v) {
                        row.push((a * m.dim + c, v));
                    }
                }
                for r in 0..n.dim {
                    let v = y.get(a, r);
                    if !f.is_zero(&v) {
                        row.push((r * m.dim + b, f.neg(&v)));
                    }
                }
                let row = sv_collect(f, row);
                if !row.is_empty() {
                    constraints.push(row);
                }
            }
        }
    };
    for i in 0..alg.dim() {
        push_intertwiner(m.left(i), n.left(i));
        push_intertwiner(m.right(i), n.right(i));
    }
    solve_homogeneous(f, unknowns, constraints)
}

/// Search the Hom space for an invertible element: basis vectors first,
/// then the running sum of the basis. Deterministic; returns the matrix.
pub fn find_invertible_hom(f: FieldSpec, dim_n: usize, dim_m: usize, homs: &Subspace) -> Option<Matrix> {
    if dim_n != dim_m {
        return None;
    }
    let as_matrix = |v: &SparseVec| -> Matrix {
        Matrix::from_triplets(
            f,
            dim_n,
            dim_m,
            v.iter().map(|(idx, c)| (idx / dim_m, idx % dim_m, c.clone())),
        )
    };
    let mut sum: SparseVec = Vec::new();
    for v in homs.basis() {
        let m = as_matrix(v);
        if m.inverse().is_some() {
            return Some(m);
        }
        sum = sv_add_scaled(f, &sum, v, &f.one());
    }
    let m = as_matrix(&sum);
    if m.inverse().is_some() {
        return Some(m);
    }
    None
}

/// Outcome of the fixed-point comparison:
/// `Hom_A(M, N)^G = Hom_{A[G]}(M, N)`.
#[derive(Clone, Debug)]
pub struct HomFixedReport {
    pub hom_base: Subspace,
    pub fixed: Subspace,
    pub hom_skew: Subspace,
    pub equal: bool,
    pub maschke_ok: bool,
}

/// Modules over `A[G]`, with the `G`-action `(g * f)(m) = g(f(g^{-1}(m)))`
/// on `Hom_A(M, N)` computed through the module structure (the element `g`
/// acts as `1_A (.) g`).
pub fn hom_fixed_points(
    base: &StructureAlgebra,
    action: &GroupAction,
    skew: &SkewGroupAlgebra,
    m: &ModuleRep,
    n: &ModuleRep,
) -> Result<HomFixedReport, Error> {
    let f = base.field;
    let e = action.group.identity();
    // restrict both modules to A (basis elements b_i (.) e)
    let restrict = |md: &ModuleRep| -> Result<ModuleRep, Error> {
        let mats = (0..base.dim())
            .map(|i| md.act(skew.index(i, e)).clone())
            .collect();
        ModuleRep::new(base, mats)
    };
    let m_base = restrict(m)?;
    let n_base = restrict(n)?;
    let hom_base = hom_module(base, &m_base, &n_base);

    // the module action of 1_A (.) g
    let group_mat = |md: &ModuleRep, g: usize| -> Matrix {
        let vec: SparseVec = base
            .unit()
            .iter()
            .map(|(i, c)| (skew.index(*i, g), c.clone()))
            .collect();
        md.act_elem(f, &sv_collect(f, vec))
    };

    // fixed points: (U_N(g) . phi . U_M(g^{-1})) = phi for all g, as a
    // row-major flattening this is kron(U_N(g), U_M(g^{-1})^T) phi = phi
    let unknowns = n.dim * m.dim;
    let mut fixed = hom_base.clone();
    for g in 0..action.group.order() {
        let t = group_mat(n, g).kronecker(&group_mat(m, action.group.inv(g)).transpose());
        let diff = t.sub(&Matrix::identity(f, unknowns));
        let rows: Vec<SparseVec> = (0..unknowns)
            .map(|r| diff.row(r).clone())
            .filter(|r| !r.is_empty())
            .collect();
        let eigenspace = solve_homogeneous(f, unknowns, rows);
        fixed = fixed.intersect(&eigenspace)?;
    }

    let hom_skew = hom_module(&skew.algebra, m, n);
    let equal = fixed == hom_skew;
    Ok(HomFixedReport {
        hom_base,
        fixed,
        hom_skew,
        equal,
        maschke_ok: action.maschke_ok(f),
    })
}

/// The base algebra `A` as a module over `A[G]`: `(a (.) g)` acts by
/// `x -> a . g(x)`. A small non-regular module for fixed-point checks.
pub fn base_as_skew_module(
    base: &StructureAlgebra,
    action: &GroupAction,
    skew: &SkewGroupAlgebra,
) -> Result<ModuleRep, Error> {
    let f = base.field;
    let mut mats = Vec::with_capacity(skew.algebra.dim());
    for i in 0..base.dim() {
        for g in 0..action.group.order() {
            mats.push(base.left_mult(&sv_unit(i, f)).mul(action.matrix(g)));
        }
    }
    ModuleRep::new(&skew.algebra, mats)
}

/// Verify that `m -> g(m)` is an `A`-module isomorphism `M -> {}^g M`
/// (twist of the restricted module by `g`): `U_g . act(a) = act(g(a)) . U_g`
/// for all basis `a`.
pub fn check_twist_iso(
    base: &StructureAlgebra,
    action: &GroupAction,
    skew: &SkewGroupAlgebra,
    module: &ModuleRep,
    g: usize,
) -> Result<bool, Error> {
    let f = base.field;
    let e = action.group.identity();
    let vec: SparseVec = base
        .unit()
        .iter()
        .map(|(i, c)| (skew.index(*i, g), c.clone()))
        .collect();
    let u = module.act_elem(f, &sv_collect(f, vec));
    if u.inverse().is_none() {
        return Ok(false);
    }
    for i in 0..base.dim() {
        let act_a = module.act(skew.index(i, e)).clone();
        let ga = action.apply(g, &sv_unit(i, f));
        let mut act_ga = Matrix::zero(f, module.dim, module.dim);
        for (k, c) in ga {
            act_ga = act_ga.add_scaled(module.act(skew.index(k, e)), &c);
        }
        if u.mul(&act_a) != act_ga.mul(&u) {
            return Ok(false);
        }
    }
    Ok(true)
}
