//! Finite-dimensional unital associative algebras over an exact field,
//! together with (anti-)automorphisms, one-sided modules and bimodules.
//!
//! Everything is verified eagerly at construction: associativity and the
//! unit law for algebras, the multiplicative law for twists, unitality and
//! commutation for module actions.

use crate::error::AlgebraError;
use crate::field::{FieldElement, FieldKind};
use crate::group::FiniteGroup;
use crate::matrix::Matrix;

/// A unital associative algebra given by structure constants
/// `e_i e_j = sum_k c[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct Algebra {
    field: FieldKind,
    dim: usize,
    /// `table[i][j]` = coordinates of `e_i e_j`.
    table: Vec<Vec<Vec<FieldElement>>>,
    unit: Vec<FieldElement>,
    /// Left-multiplication matrices, kept for fast products.
    left_mul: Vec<Matrix>,
}

impl Algebra {
    pub fn new(
        field: FieldKind,
        dim: usize,
        table: Vec<Vec<Vec<FieldElement>>>,
        unit: Vec<FieldElement>,
    ) -> Result<Algebra, AlgebraError> {
        if table.len() != dim
            || table.iter().any(|r| r.len() != dim || r.iter().any(|v| v.len() != dim))
            || unit.len() != dim
        {
            return Err(AlgebraError::BadShape);
        }
        let left_mul = (0..dim)
            .map(|i| Matrix::from_fn(field, dim, dim, |k, j| table[i][j][k].clone()))
            .collect();
        let a = Algebra {
            field,
            dim,
            table,
            unit,
            left_mul,
        };
        a.verify()?;
        Ok(a)
    }

    fn verify(&self) -> Result<(), AlgebraError> {
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let left = self.mul_vec(&self.table[i][j], &basis_vec(self.field, self.dim, k));
                    let right = self.mul_vec(&basis_vec(self.field, self.dim, i), &self.table[j][k]);
                    if left != right {
                        return Err(AlgebraError::NotAssociative(i, j, k));
                    }
                }
            }
        }
        for i in 0..self.dim {
            let e = basis_vec(self.field, self.dim, i);
            if self.mul_vec(&self.unit, &e) != e || self.mul_vec(&e, &self.unit) != e {
                return Err(AlgebraError::UnitNotIdentity);
            }
        }
        Ok(())
    }

    pub fn field(&self) -> FieldKind {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[FieldElement] {
        &self.unit
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[FieldElement] {
        &self.table[i][j]
    }

    /// Product of coordinate vectors.
    pub fn mul_vec(&self, x: &[FieldElement], y: &[FieldElement]) -> Vec<FieldElement> {
        let mut out = vec![self.field.zero(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let c = x[i].mul(&y[j]);
                for k in 0..self.dim {
                    let t = self.table[i][j][k].mul(&c);
                    if !t.is_zero() {
                        out[k] = out[k].add(&t);
                    }
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by the basis element `e_i`.
    pub fn left_mul_matrix(&self, i: usize) -> &Matrix {
        &self.left_mul[i]
    }

    /// Matrix of right multiplication by the basis element `e_i`.
    pub fn right_mul_matrix(&self, i: usize) -> Matrix {
        Matrix::from_fn(self.field, self.dim, self.dim, |k, j| self.table[j][i][k].clone())
    }

    /// The ground field as a one-dimensional algebra.
    pub fn ground_field(field: FieldKind) -> Algebra {
        Algebra::new(field, 1, vec![vec![vec![field.one()]]], vec![field.one()]).unwrap()
    }

    /// Group algebra `K[G]` with basis indexed by group elements.
    pub fn group_algebra(field: FieldKind, group: &FiniteGroup) -> Algebra {
        let n = group.order();
        let table = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| basis_vec(field, n, group.mul(i, j)))
                    .collect()
            })
            .collect();
        Algebra::new(field, n, table, basis_vec(field, n, group.identity())).unwrap()
    }

    /// Truncated polynomials `K[x]/x^n`, basis `1, x, .., x^{n-1}`.
    pub fn truncated_polynomial(field: FieldKind, n: usize) -> Algebra {
        assert!(n >= 1);
        let table = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i + j < n {
                            basis_vec(field, n, i + j)
                        } else {
                            vec![field.zero(); n]
                        }
                    })
                    .collect()
            })
            .collect();
        Algebra::new(field, n, table, basis_vec(field, n, 0)).unwrap()
    }

    /// Full matrix algebra `M_n`, basis `E_{uv}` ordered row-major.
    pub fn matrix_algebra(field: FieldKind, n: usize) -> Algebra {
        let dim = n * n;
        let idx = |u: usize, v: usize| u * n + v;
        let table = (0..dim)
            .map(|a| {
                let (u, v) = (a / n, a % n);
                (0..dim)
                    .map(|b| {
                        let (s, t) = (b / n, b % n);
                        if v == s {
                            basis_vec(field, dim, idx(u, t))
                        } else {
                            vec![field.zero(); dim]
                        }
                    })
                    .collect()
            })
            .collect();
        let mut unit = vec![field.zero(); dim];
        for u in 0..n {
            unit[idx(u, u)] = field.one();
        }
        Algebra::new(field, dim, table, unit).unwrap()
    }

    /// Direct product of algebras, first factor first in the basis.
    pub fn product(a: &Algebra, b: &Algebra) -> Result<Algebra, AlgebraError> {
        if a.field != b.field {
            return Err(AlgebraError::FieldMismatch);
        }
        let field = a.field;
        let dim = a.dim + b.dim;
        let mut table = vec![vec![vec![field.zero(); dim]; dim]; dim];
        for i in 0..a.dim {
            for j in 0..a.dim {
                for k in 0..a.dim {
                    table[i][j][k] = a.table[i][j][k].clone();
                }
            }
        }
        for i in 0..b.dim {
            for j in 0..b.dim {
                for k in 0..b.dim {
                    table[a.dim + i][a.dim + j][a.dim + k] = b.table[i][j][k].clone();
                }
            }
        }
        let mut unit = a.unit.clone();
        unit.extend(b.unit.clone());
        Algebra::new(field, dim, table, unit)
    }

    /// The opposite algebra: structure constants transposed in the first two
    /// indices.
    pub fn opposite(&self) -> Algebra {
        let table = (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.table[j][i].clone()).collect())
            .collect();
        Algebra::new(self.field, self.dim, table, self.unit.clone())
            .expect("opposite of an associative algebra is associative")
    }

    /// Tensor product of algebras with componentwise product; basis ordered
    /// with the first factor major: `(i, j) -> i * dim(b) + j`.
    pub fn tensor(a: &Algebra, b: &Algebra) -> Result<Algebra, AlgebraError> {
        if a.field != b.field {
            return Err(AlgebraError::FieldMismatch);
        }
        let field = a.field;
        let dim = a.dim * b.dim;
        let idx = |i: usize, j: usize| i * b.dim + j;
        let mut table = vec![vec![vec![field.zero(); dim]; dim]; dim];
        for i1 in 0..a.dim {
            for j1 in 0..b.dim {
                for i2 in 0..a.dim {
                    for j2 in 0..b.dim {
                        let pa = &a.table[i1][i2];
                        let pb = &b.table[j1][j2];
                        let slot = &mut table[idx(i1, j1)][idx(i2, j2)];
                        for (ka, ca) in pa.iter().enumerate() {
                            if ca.is_zero() {
                                continue;
                            }
                            for (kb, cb) in pb.iter().enumerate() {
                                if cb.is_zero() {
                                    continue;
                                }
                                slot[idx(ka, kb)] = slot[idx(ka, kb)].add(&ca.mul(cb));
                            }
                        }
                    }
                }
            }
        }
        let mut unit = vec![field.zero(); dim];
        for (i, ca) in a.unit.iter().enumerate() {
            for (j, cb) in b.unit.iter().enumerate() {
                unit[idx(i, j)] = ca.mul(cb);
            }
        }
        Algebra::new(field, dim, table, unit)
    }

    /// The enveloping algebra `A (x) A^op`.
    pub fn enveloping(&self) -> Algebra {
        Algebra::tensor(self, &self.opposite()).expect("same field")
    }
}

fn basis_vec(field: FieldKind, dim: usize, i: usize) -> Vec<FieldElement> {
    let mut v = vec![field.zero(); dim];
    v[i] = field.one();
    v
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwistKind {
    Automorphism,
    AntiAutomorphism,
}

impl TwistKind {
    fn as_str(&self) -> &'static str {
        match self {
            TwistKind::Automorphism => "automorphism",
            TwistKind::AntiAutomorphism => "anti-automorphism",
        }
    }
}

/// A linear map `phi: A -> A` that is an algebra automorphism or
/// anti-automorphism, with an optionally declared order.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraTwist {
    pub algebra: Algebra,
    pub matrix: Matrix,
    pub kind: TwistKind,
    pub order: Option<u32>,
}

impl AlgebraTwist {
    pub fn new(
        algebra: Algebra,
        matrix: Matrix,
        kind: TwistKind,
        order: Option<u32>,
    ) -> Result<AlgebraTwist, AlgebraError> {
        let dim = algebra.dim();
        if matrix.rows() != dim || matrix.cols() != dim {
            return Err(AlgebraError::BadShape);
        }
        let apply = |v: &[FieldElement]| matrix.apply_to_dense(v);
        if apply(algebra.unit()) != algebra.unit() {
            return Err(AlgebraError::TwistMovesUnit);
        }
        for i in 0..dim {
            for j in 0..dim {
                let phi_prod = apply(algebra.basis_product(i, j));
                let phi_i = apply(&basis_vec(algebra.field(), dim, i));
                let phi_j = apply(&basis_vec(algebra.field(), dim, j));
                let expected = match kind {
                    TwistKind::Automorphism => algebra.mul_vec(&phi_i, &phi_j),
                    TwistKind::AntiAutomorphism => algebra.mul_vec(&phi_j, &phi_i),
                };
                if phi_prod != expected {
                    return Err(AlgebraError::TwistNotMultiplicative(
                        kind.as_str().to_string(),
                        i,
                        j,
                    ));
                }
            }
        }
        if let Some(k) = order {
            let mut power = Matrix::identity(algebra.field(), dim);
            for _ in 0..k {
                power = matrix.mul(&power);
            }
            if power != Matrix::identity(algebra.field(), dim) {
                return Err(AlgebraError::TwistOrderMismatch(k));
            }
        }
        Ok(AlgebraTwist {
            algebra,
            matrix,
            kind,
            order,
        })
    }

    pub fn identity(algebra: &Algebra) -> AlgebraTwist {
        AlgebraTwist::new(
            algebra.clone(),
            Matrix::identity(algebra.field(), algebra.dim()),
            TwistKind::Automorphism,
            Some(1),
        )
        .unwrap()
    }

    /// For `A = B x B`: the factor swap, an automorphism of order 2.
    pub fn product_swap(product: &Algebra, half_dim: usize) -> Result<AlgebraTwist, AlgebraError> {
        let dim = product.dim();
        if dim != 2 * half_dim {
            return Err(AlgebraError::BadShape);
        }
        let field = product.field();
        let m = Matrix::from_fn(field, dim, dim, |i, j| {
            let swapped = if j < half_dim { j + half_dim } else { j - half_dim };
            if i == swapped { field.one() } else { field.zero() }
        });
        AlgebraTwist::new(product.clone(), m, TwistKind::Automorphism, Some(2))
    }

    /// Group algebra inversion `g -> g^{-1}`; an anti-automorphism in
    /// general, an automorphism when the group is abelian.
    pub fn group_inversion(algebra: &Algebra, group: &FiniteGroup) -> Result<AlgebraTwist, AlgebraError> {
        let field = algebra.field();
        let n = group.order();
        if algebra.dim() != n {
            return Err(AlgebraError::BadShape);
        }
        let m = Matrix::from_fn(field, n, n, |i, j| {
            if i == group.inv(j) { field.one() } else { field.zero() }
        });
        let kind = if group.is_abelian() {
            TwistKind::Automorphism
        } else {
            TwistKind::AntiAutomorphism
        };
        AlgebraTwist::new(algebra.clone(), m, kind, Some(2))
    }

    /// `x -> -x` on truncated polynomials.
    pub fn polynomial_negation(algebra: &Algebra) -> Result<AlgebraTwist, AlgebraError> {
        let field = algebra.field();
        let n = algebra.dim();
        let m = Matrix::from_fn(field, n, n, |i, j| {
            if i != j {
                field.zero()
            } else if j % 2 == 0 {
                field.one()
            } else {
                field.from_i64(-1)
            }
        });
        AlgebraTwist::new(algebra.clone(), m, TwistKind::Automorphism, Some(2))
    }

    /// Conjugation `a -> u a u^{-1}` on a matrix algebra `M_n`, given the
    /// invertible `n x n` matrix `u`.
    pub fn matrix_conjugation(algebra: &Algebra, n: usize, u: &Matrix) -> Result<AlgebraTwist, AlgebraError> {
        let field = algebra.field();
        if algebra.dim() != n * n || u.rows() != n || u.cols() != n {
            return Err(AlgebraError::BadShape);
        }
        // Solve u x = e_i to build u^{-1} column by column.
        let mut u_inv_cols = Vec::with_capacity(n);
        for i in 0..n {
            let mut e = vec![field.zero(); n];
            e[i] = field.one();
            let col = u.solve(&e).ok_or(AlgebraError::BadShape)?;
            u_inv_cols.push(col);
        }
        let u_inv = Matrix::from_fn(field, n, n, |r, c| u_inv_cols[c][r].clone());
        // Action on the basis E_{st}: u E_{st} u^{-1} has (r,c) entry
        // u[r][s] * u_inv[t][c].
        let dim = n * n;
        let m = Matrix::from_fn(field, dim, dim, |rc, st| {
            let (r, c) = (rc / n, rc % n);
            let (s, t) = (st / n, st % n);
            u.get(r, s).mul(&u_inv.get(t, c))
        });
        AlgebraTwist::new(algebra.clone(), m, TwistKind::Automorphism, None)
    }

    pub fn apply(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        self.matrix.apply_to_dense(v)
    }

    pub fn is_involution(&self) -> bool {
        let n = self.algebra.dim();
        self.matrix.mul(&self.matrix) == Matrix::identity(self.algebra.field(), n)
    }
}

/// A right module over an algebra: `action[i]` is the matrix of `x -> x e_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct RightModule {
    pub over: Algebra,
    pub dim: usize,
    pub action: Vec<Matrix>,
    pub marked_point: Option<Vec<FieldElement>>,
}

impl RightModule {
    pub fn new(
        over: Algebra,
        dim: usize,
        action: Vec<Matrix>,
        marked_point: Option<Vec<FieldElement>>,
    ) -> Result<RightModule, AlgebraError> {
        let field = over.field();
        if action.len() != over.dim()
            || action.iter().any(|m| m.rows() != dim || m.cols() != dim)
        {
            return Err(AlgebraError::BadShape);
        }
        if let Some(p) = &marked_point {
            if p.len() != dim {
                return Err(AlgebraError::BadShape);
            }
        }
        let act = |v: &[FieldElement]| -> Matrix {
            let mut sum = Matrix::zero(field, dim, dim);
            for (i, c) in v.iter().enumerate() {
                if !c.is_zero() {
                    sum = sum.add(&action[i].scale(c));
                }
            }
            sum
        };
        if act(over.unit()) != Matrix::identity(field, dim) {
            return Err(AlgebraError::ActionNotUnital);
        }
        // Right action: R(ab) = R(b) R(a).
        for i in 0..over.dim() {
            for j in 0..over.dim() {
                let lhs = act(over.basis_product(i, j));
                let rhs = action[j].mul(&action[i]);
                if lhs != rhs {
                    return Err(AlgebraError::ActionNotMultiplicative("right".into(), i, j));
                }
            }
        }
        Ok(RightModule {
            over,
            dim,
            action,
            marked_point,
        })
    }

    /// The algebra as a right module over itself; marked point the unit.
    pub fn regular(a: &Algebra) -> RightModule {
        let action = (0..a.dim()).map(|i| a.right_mul_matrix(i)).collect();
        RightModule::new(a.clone(), a.dim(), action, Some(a.unit().to_vec())).unwrap()
    }

    /// The one-dimensional module on which the algebra acts through a
    /// character (algebra map `A -> K`), given by its values on the basis.
    pub fn character_module(a: &Algebra, values: &[FieldElement]) -> Result<RightModule, AlgebraError> {
        let field = a.field();
        let action = values
            .iter()
            .map(|v| Matrix::from_rows(field, vec![vec![v.clone()]]))
            .collect();
        RightModule::new(a.clone(), 1, action, Some(vec![field.one()]))
    }
}

/// A bimodule over `(A, A)`: commuting unital left and right actions.
#[derive(Clone, Debug, PartialEq)]
pub struct Bimodule {
    pub over: Algebra,
    pub dim: usize,
    /// `left[i]`: matrix of `x -> e_i . x`.
    pub left: Vec<Matrix>,
    /// `right[i]`: matrix of `x -> x . e_i`.
    pub right: Vec<Matrix>,
}

impl Bimodule {
    pub fn new(
        over: Algebra,
        dim: usize,
        left: Vec<Matrix>,
        right: Vec<Matrix>,
    ) -> Result<Bimodule, AlgebraError> {
        let field = over.field();
        let n = over.dim();
        if left.len() != n || right.len() != n {
            return Err(AlgebraError::BadShape);
        }
        if left
            .iter()
            .chain(right.iter())
            .any(|m| m.rows() != dim || m.cols() != dim)
        {
            return Err(AlgebraError::BadShape);
        }
        let combine = |mats: &[Matrix], v: &[FieldElement]| -> Matrix {
            let mut sum = Matrix::zero(field, dim, dim);
            for (i, c) in v.iter().enumerate() {
                if !c.is_zero() {
                    sum = sum.add(&mats[i].scale(c));
                }
            }
            sum
        };
        if combine(&left, over.unit()) != Matrix::identity(field, dim)
            || combine(&right, over.unit()) != Matrix::identity(field, dim)
        {
            return Err(AlgebraError::ActionNotUnital);
        }
        for i in 0..n {
            for j in 0..n {
                // Left action: L(ab) = L(a) L(b).
                if combine(&left, over.basis_product(i, j)) != left[i].mul(&left[j]) {
                    return Err(AlgebraError::ActionNotMultiplicative("left".into(), i, j));
                }
                // Right action: R(ab) = R(b) R(a).
                if combine(&right, over.basis_product(i, j)) != right[j].mul(&right[i]) {
                    return Err(AlgebraError::ActionNotMultiplicative("right".into(), i, j));
                }
                if left[i].mul(&right[j]) != right[j].mul(&left[i]) {
                    return Err(AlgebraError::ActionsDoNotCommute(i, j));
                }
            }
        }
        Ok(Bimodule {
            over,
            dim,
            left,
            right,
        })
    }

    /// The diagonal bimodule `A` with both actions by multiplication.
    pub fn diagonal(a: &Algebra) -> Bimodule {
        let left = (0..a.dim()).map(|i| a.left_mul_matrix(i).clone()).collect();
        let right = (0..a.dim()).map(|i| a.right_mul_matrix(i)).collect();
        Bimodule::new(a.clone(), a.dim(), left, right).unwrap()
    }

    /// The twisted diagonal bimodule: underlying space `A`, left action by
    /// multiplication, right action of `b` by right multiplication with
    /// `phi(b)`. Requires an algebra automorphism.
    pub fn twisted_diagonal(a: &Algebra, phi: &AlgebraTwist) -> Result<Bimodule, AlgebraError> {
        if phi.kind != TwistKind::Automorphism {
            return Err(AlgebraError::TwistKindMismatch {
                expected: "automorphism",
                got: phi.kind.as_str(),
            });
        }
        let field = a.field();
        let left = (0..a.dim()).map(|i| a.left_mul_matrix(i).clone()).collect();
        let right = (0..a.dim())
            .map(|i| {
                let phi_ei = phi.apply(&basis_vec(field, a.dim(), i));
                let mut sum = Matrix::zero(field, a.dim(), a.dim());
                for (j, c) in phi_ei.iter().enumerate() {
                    if !c.is_zero() {
                        sum = sum.add(&a.right_mul_matrix(j).scale(c));
                    }
                }
                sum
            })
            .collect();
        Bimodule::new(a.clone(), a.dim(), left, right)
    }

    /// The same underlying space as a right module over the enveloping
    /// algebra `E = A (x) A^op`: `x . (a (x) b) = b . x . a`, i.e. the
    /// `A^op` leg acts through the left action and the `A` leg through the
    /// right action.
    pub fn as_right_env_module(&self) -> Result<(Algebra, RightModule), AlgebraError> {
        let a = &self.over;
        let env = a.enveloping();
        let n = a.dim();
        let action = (0..env.dim())
            .map(|idx| {
                let (i, j) = (idx / n, idx % n);
                self.left[j].mul(&self.right[i])
            })
            .collect();
        let module = RightModule::new(env.clone(), self.dim, action, None)?;
        Ok((env, module))
    }

    /// The same underlying space as a left module over `E = A (x) A^op`,
    /// `(a (x) b) . x = a . x . b`, encoded as a right module over `E^op`.
    pub fn as_left_env_module(&self) -> Result<(Algebra, RightModule), AlgebraError> {
        let a = &self.over;
        let env_op = a.enveloping().opposite();
        let n = a.dim();
        let action = (0..env_op.dim())
            .map(|idx| {
                let (i, j) = (idx / n, idx % n);
                self.left[i].mul(&self.right[j])
            })
            .collect();
        let module = RightModule::new(env_op.clone(), self.dim, action, None)?;
        Ok((env_op, module))
    }
}

/// Converts a right `A`-module into a left `A`-module along an
/// anti-automorphism (`a . x := x . phi(a)`), encoded as a right module over
/// `A^op`.
pub fn right_to_left_along(
    module: &RightModule,
    phi: &AlgebraTwist,
) -> Result<RightModule, AlgebraError> {
    if phi.kind != TwistKind::AntiAutomorphism {
        return Err(AlgebraError::TwistKindMismatch {
            expected: "anti-automorphism",
            got: phi.kind.as_str(),
        });
    }
    if phi.algebra != module.over {
        return Err(AlgebraError::WrongAlgebra);
    }
    let a = &module.over;
    let field = a.field();
    let op = a.opposite();
    let action = (0..a.dim())
        .map(|i| {
            let phi_ei = phi.apply(&basis_vec(field, a.dim(), i));
            let mut sum = Matrix::zero(field, module.dim, module.dim);
            for (j, c) in phi_ei.iter().enumerate() {
                if !c.is_zero() {
                    sum = sum.add(&module.action[j].scale(c));
                }
            }
            sum
        })
        .collect();
    RightModule::new(op, module.dim, action, module.marked_point.clone())
}

/// Reinterprets a right `A`-module as a left module (right `A^op`-module)
/// without any twist; valid because `A^op` acts oppositely.
pub fn right_module_as_left_over_opposite(module: &RightModule) -> RightModule {
    // A left A-module structure x -> a.x with a.x := x.a is NOT generally
    // valid; what is always valid is viewing the same matrices as a right
    // action of A^op: x . (a in A^op) := x . a.
    RightModule::new(
        module.over.opposite(),
        module.dim,
        module.action.clone(),
        module.marked_point.clone(),
    )
    .expect("right action over A is a right action over A^op with the same matrices")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldKind {
        FieldKind::Rational
    }

    fn qx2() -> Algebra {
        Algebra::truncated_polynomial(q(), 2)
    }

    fn q_z2() -> Algebra {
        Algebra::group_algebra(q(), &FiniteGroup::cyclic(2))
    }

    fn q_times_q() -> Algebra {
        Algebra::product(&Algebra::ground_field(q()), &Algebra::ground_field(q())).unwrap()
    }

    /// Upper-triangular 2x2 matrices: basis E11, E12, E22.
    fn upper_triangular() -> Algebra {
        let f = q();
        let z = || vec![f.zero(), f.zero(), f.zero()];
        let e = |k: usize| {
            let mut v = z();
            v[k] = f.one();
            v
        };
        // E11*E11=E11, E11*E12=E12, E12*E22=E12, E22*E22=E22, rest zero.
        let table = vec![
            vec![e(0), e(1), z()],
            vec![z(), z(), e(1)],
            vec![z(), z(), e(2)],
        ];
        let mut unit = z();
        unit[0] = f.one();
        unit[2] = f.one();
        Algebra::new(f, 3, table, unit).unwrap()
    }

    #[test]
    fn builtin_algebras_verify() {
        for a in [
            Algebra::ground_field(q()),
            qx2(),
            q_z2(),
            q_times_q(),
            Algebra::matrix_algebra(q(), 2),
            upper_triangular(),
        ] {
            assert!(a.dim() >= 1);
        }
    }

    #[test]
    fn non_associative_rejected() {
        // Start from Q[x]/x^3 and corrupt one product: x^2 * x = x instead
        // of 0, so (xx)x != x(xx).
        let f = q();
        let z = || vec![f.zero(), f.zero(), f.zero()];
        let e = |k: usize| {
            let mut v = z();
            v[k] = f.one();
            v
        };
        let table = vec![
            vec![e(0), e(1), e(2)],
            vec![e(1), e(2), z()],
            vec![e(2), e(1), z()], // corrupted entry: e2 * e1 = e1
        ];
        let r = Algebra::new(f, 3, table, e(0));
        assert!(matches!(r, Err(AlgebraError::NotAssociative(..))));
    }

    #[test]
    fn opposite_is_involutive_and_transposes() {
        let ut = upper_triangular();
        let op = ut.opposite();
        // In UT2: E11 * E12 = E12; in the opposite, E12 * E11 = E12.
        let f = q();
        let e11 = vec![f.one(), f.zero(), f.zero()];
        let e12 = vec![f.zero(), f.one(), f.zero()];
        assert_eq!(ut.mul_vec(&e11, &e12), e12);
        assert_eq!(op.mul_vec(&e12, &e11), e12);
        assert_eq!(op.mul_vec(&e11, &e12), vec![f.zero(), f.zero(), f.zero()]);
        assert_eq!(op.opposite(), ut);
        // Commutative algebras are their own opposite.
        assert_eq!(q_z2().opposite(), q_z2());
    }

    #[test]
    fn tensor_with_ground_field_is_identity() {
        let a = q_z2();
        let t = Algebra::tensor(&a, &Algebra::ground_field(q())).unwrap();
        assert_eq!(t, a);
    }

    #[test]
    fn tensor_group_algebras_is_product_group_algebra() {
        let z2 = FiniteGroup::cyclic(2);
        let t = Algebra::tensor(&q_z2(), &q_z2()).unwrap();
        let v4 = Algebra::group_algebra(q(), &FiniteGroup::product(&z2, &z2));
        assert_eq!(t, v4);
        assert_eq!(t.dim(), 4);
    }

    #[test]
    fn tensor_dimension() {
        let a = Algebra::truncated_polynomial(q(), 2);
        let b = Algebra::truncated_polynomial(q(), 3);
        assert_eq!(Algebra::tensor(&a, &b).unwrap().dim(), 6);
    }

    #[test]
    fn tensor_field_mismatch_rejected() {
        let a = Algebra::ground_field(q());
        let b = Algebra::ground_field(FieldKind::prime(5).unwrap());
        assert!(matches!(Algebra::tensor(&a, &b), Err(AlgebraError::FieldMismatch)));
        assert!(matches!(Algebra::product(&a, &b), Err(AlgebraError::FieldMismatch)));
    }

    #[test]
    fn twist_identity_and_swap() {
        let a = q_times_q();
        let id = AlgebraTwist::identity(&a);
        assert!(id.is_involution());
        let swap = AlgebraTwist::product_swap(&a, 1).unwrap();
        assert!(swap.is_involution());
        let f = q();
        let e1 = vec![f.one(), f.zero()];
        assert_eq!(swap.apply(&e1), vec![f.zero(), f.one()]);
    }

    #[test]
    fn twist_wrong_law_rejected() {
        // Inversion on Q[S3] is an anti-automorphism, not an automorphism.
        let s3 = FiniteGroup::symmetric(3);
        let a = Algebra::group_algebra(q(), &s3);
        let inv = AlgebraTwist::group_inversion(&a, &s3).unwrap();
        assert_eq!(inv.kind, TwistKind::AntiAutomorphism);
        let wrong = AlgebraTwist::new(a.clone(), inv.matrix.clone(), TwistKind::Automorphism, Some(2));
        assert!(matches!(wrong, Err(AlgebraError::TwistNotMultiplicative(..))));
    }

    #[test]
    fn twist_order_checked() {
        let a = qx2();
        let neg = AlgebraTwist::polynomial_negation(&a).unwrap();
        assert!(neg.is_involution());
        let wrong = AlgebraTwist::new(a, neg.matrix.clone(), TwistKind::Automorphism, Some(3));
        assert!(matches!(wrong, Err(AlgebraError::TwistOrderMismatch(3))));
    }

    #[test]
    fn matrix_conjugation_twist() {
        let a = Algebra::matrix_algebra(q(), 2);
        let u = Matrix::from_i64_rows(q(), &[vec![1, 0], vec![0, -1]]);
        let phi = AlgebraTwist::matrix_conjugation(&a, 2, &u).unwrap();
        assert!(phi.is_involution());
        // E12 -> -E12 under conjugation by diag(1, -1).
        let f = q();
        let mut e12 = vec![f.zero(); 4];
        e12[1] = f.one();
        let img = phi.apply(&e12);
        assert_eq!(img[1], f.from_i64(-1));
    }

    #[test]
    fn twisted_diagonal_with_identity_is_diagonal() {
        let a = q_z2();
        let id = AlgebraTwist::identity(&a);
        let tw = Bimodule::twisted_diagonal(&a, &id).unwrap();
        assert_eq!(tw, Bimodule::diagonal(&a));
    }

    #[test]
    fn twisted_diagonal_swap_action() {
        let a = q_times_q();
        let swap = AlgebraTwist::product_swap(&a, 1).unwrap();
        let tw = Bimodule::twisted_diagonal(&a, &swap).unwrap();
        // Right action of e1 is right multiplication by e2.
        assert_eq!(tw.right[0], a.right_mul_matrix(1));
        assert_eq!(tw.right[1], a.right_mul_matrix(0));
    }

    #[test]
    fn twisted_diagonal_rejects_anti_automorphism() {
        let s3 = FiniteGroup::symmetric(3);
        let a = Algebra::group_algebra(q(), &s3);
        let inv = AlgebraTwist::group_inversion(&a, &s3).unwrap();
        assert!(matches!(
            Bimodule::twisted_diagonal(&a, &inv),
            Err(AlgebraError::TwistKindMismatch { .. })
        ));
    }

    #[test]
    fn env_module_of_ground_field() {
        let k = Algebra::ground_field(q());
        let (env, m) = Bimodule::diagonal(&k).as_right_env_module().unwrap();
        assert_eq!(env.dim(), 1);
        assert_eq!(m.dim, 1);
    }

    #[test]
    fn env_module_of_group_algebra() {
        let (env, m) = Bimodule::diagonal(&q_z2()).as_right_env_module().unwrap();
        assert_eq!(env.dim(), 4);
        assert_eq!(m.dim, 2);
        assert_eq!(m.action.len(), 4);
    }

    #[test]
    fn env_modules_with_identity_twist_agree() {
        let a = q_z2();
        let id = AlgebraTwist::identity(&a);
        let plain = Bimodule::diagonal(&a).as_right_env_module().unwrap().1;
        let twisted = Bimodule::twisted_diagonal(&a, &id)
            .unwrap()
            .as_right_env_module()
            .unwrap()
            .1;
        assert_eq!(plain, twisted);
    }

    #[test]
    fn right_to_left_conversion_needs_anti() {
        let a = qx2();
        let id = AlgebraTwist::identity(&a);
        let m = RightModule::regular(&a);
        assert!(matches!(
            right_to_left_along(&m, &id),
            Err(AlgebraError::TwistKindMismatch { .. })
        ));
    }

    #[test]
    fn character_module_trivial_action() {
        let a = q_z2();
        let f = q();
        // Augmentation: both group elements act by 1.
        let m = RightModule::character_module(&a, &[f.one(), f.one()]).unwrap();
        assert_eq!(m.dim, 1);
        // x -> 0 is a character of Q[x]/x^2.
        let aug = RightModule::character_module(&qx2(), &[f.one(), f.zero()]).unwrap();
        assert_eq!(aug.dim, 1);
        // g -> -1 is also a character of Q[Z2].
        let sign = RightModule::character_module(&a, &[f.one(), f.from_i64(-1)]).unwrap();
        assert_eq!(sign.dim, 1);
        // x -> 1 is not a character of Q[x]/x^2.
        assert!(RightModule::character_module(&qx2(), &[f.one(), f.one()]).is_err());
    }
}
