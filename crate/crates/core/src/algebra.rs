//! Structure-constant algebras, coalgebras and Hopf algebras.
//!
//! `mult[i][j]` is the vector `e_i e_j`; the coproduct is a matrix from `H`
//! to `H ⊗ H` whose column `i` is `Δ(e_i)` flattened row-major. Iterated
//! coproducts are the computational form of Sweedler indices
//! `h_1 ⊗ h_2 ⊗ h_3`.

use crate::error::{Error, Result};
use crate::linalg::{matrix_inverse, tensor_of_maps, Matrix, SparseVec, Tensor3, VecBuilder};
use crate::report::CheckReport;
use crate::scalar::FieldSpec;

/// A finite-dimensional unital associative algebra given by structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureAlgebra {
    field: FieldSpec,
    labels: Vec<String>,
    mult: Tensor3,
    unit: SparseVec,
}

impl StructureAlgebra {
    pub fn new(field: FieldSpec, labels: Vec<String>, mult: Tensor3, unit: SparseVec) -> Result<Self> {
        let n = labels.len();
        if mult.dims() != [n, n, n] {
            return Err(Error::DimensionMismatch(format!(
                "multiplication tensor has shape {:?}, expected [{n}, {n}, {n}]",
                mult.dims()
            )));
        }
        if unit.dim() != n {
            return Err(Error::DimensionMismatch(format!("unit has length {}, expected {n}", unit.dim())));
        }
        let foreign = mult.quadruples().map(|q| q.3).chain(unit.entries().iter().map(|e| &e.1)).any(|c| !field.owns(c));
        if foreign {
            return Err(Error::FieldMismatch(format!("structure constants do not lie in {field}")));
        }
        Ok(StructureAlgebra { field, labels, mult, unit })
    }

    /// Builds the table from a function giving `e_i e_j`.
    pub fn from_products(
        field: FieldSpec,
        labels: Vec<String>,
        unit: SparseVec,
        products: impl FnMut(usize, usize) -> SparseVec,
    ) -> Self {
        let n = labels.len();
        let mult = Tensor3::from_fn([n, n, n], products);
        assert_eq!(unit.dim(), n);
        StructureAlgebra { field, labels, mult, unit }
    }

    /// The one-dimensional algebra `k`.
    pub fn ground(field: FieldSpec) -> Self {
        let one = SparseVec::basis(field, 1, 0);
        StructureAlgebra::from_products(field, vec!["1".into()], one.clone(), |_, _| one.clone())
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn mult(&self) -> &Tensor3 {
        &self.mult
    }

    pub fn unit(&self) -> &SparseVec {
        &self.unit
    }

    pub fn basis(&self, i: usize) -> SparseVec {
        SparseVec::basis(self.field, self.dim(), i)
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec {
        self.mult.slice(i, j)
    }

    pub fn mul(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        self.mult.bilinear(x, y)
    }

    /// Same structure constants, ignoring basis labels.
    pub fn same_structure(&self, other: &StructureAlgebra) -> bool {
        self.field == other.field && self.mult == other.mult && self.unit == other.unit
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim());
        self.labels = labels;
        self
    }
}

/// Checks associativity and the two unit laws on every basis tuple.
pub fn check_algebra(a: &StructureAlgebra) -> CheckReport {
    let n = a.dim();
    let mut report = CheckReport::new("algebra");
    report.check("associativity", |w| {
        for i in 0..n {
            for j in 0..n {
                let ij = a.mul_basis(i, j);
                for k in 0..n {
                    let lhs = a.mult().right_basis(ij, k);
                    let rhs = a.mult().left_basis(i, a.mul_basis(j, k));
                    if let Some(l) = lhs.first_difference(&rhs) {
                        w.push([i, j, k, l]);
                    }
                }
            }
        }
    });
    report.check("left unit", |w| {
        for i in 0..n {
            w.fail_if(a.mult().right_basis(a.unit(), i) != a.basis(i), [i]);
        }
    });
    report.check("right unit", |w| {
        for i in 0..n {
            w.fail_if(a.mult().left_basis(i, a.unit()) != a.basis(i), [i]);
        }
    });
    report
}

pub fn opposite(a: &StructureAlgebra) -> StructureAlgebra {
    let n = a.dim();
    StructureAlgebra {
        field: a.field,
        labels: a.labels.clone(),
        mult: Tensor3::from_fn([n, n, n], |i, j| a.mul_basis(j, i).clone()),
        unit: a.unit.clone(),
    }
}

/// Componentwise product on `a ⊗ b`, basis ordered row-major.
pub fn tensor_algebra(a: &StructureAlgebra, b: &StructureAlgebra) -> Result<StructureAlgebra> {
    if a.field != b.field {
        return Err(Error::FieldMismatch(format!("{} vs {}", a.field, b.field)));
    }
    let nb = b.dim();
    let labels = pair_labels(a.labels(), b.labels());
    Ok(StructureAlgebra::from_products(a.field, labels, a.unit.tensor(&b.unit), |p, q| {
        a.mul_basis(p / nb, q / nb).tensor(b.mul_basis(p % nb, q % nb))
    }))
}

pub(crate) fn pair_labels(a: &[String], b: &[String]) -> Vec<String> {
    a.iter().flat_map(|x| b.iter().map(move |y| format!("{x}⊗{y}"))).collect()
}

/// Multiplies two elements of `A ⊗ A` componentwise without materializing the table.
pub fn mul_in_tensor_square(a: &StructureAlgebra, u: &SparseVec, v: &SparseVec) -> SparseVec {
    let n = a.dim();
    let mut out = VecBuilder::new(n * n);
    for (p, x) in u.entries() {
        for (q, y) in v.entries() {
            let left = a.mul_basis(p / n, q / n);
            let right = a.mul_basis(p % n, q % n);
            out.add_tensor(&(x * y), left, right);
        }
    }
    out.build()
}

/// Applies `map` to tensor slot `slot` of a vector in `V^{⊗ slots}`, `dim V = n`.
pub fn apply_on_slot(v: &SparseVec, n: usize, slots: usize, slot: usize, map: &Matrix) -> SparseVec {
    assert_eq!(map.ncols(), n);
    assert!(slot < slots);
    let m = map.nrows();
    let suffix = n.pow((slots - slot - 1) as u32);
    let prefix_count = n.pow(slot as u32);
    let mut out = VecBuilder::new(prefix_count * m * suffix);
    for (idx, c) in v.entries() {
        let prefix = idx / (n * suffix);
        let mid = (idx / suffix) % n;
        let rest = idx % suffix;
        for (k, d) in map.column(mid).entries() {
            out.push((prefix * m + k) * suffix + rest, c * d);
        }
    }
    out.build()
}

/// Coproduct and counit on the same basis as an algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra {
    field: FieldSpec,
    comult: Matrix,
    counit: SparseVec,
}

impl Coalgebra {
    pub fn new(field: FieldSpec, comult: Matrix, counit: SparseVec) -> Result<Self> {
        let n = counit.dim();
        if comult.ncols() != n || comult.nrows() != n * n {
            return Err(Error::DimensionMismatch(format!(
                "coproduct is {}x{}, expected {}x{n}",
                comult.nrows(),
                comult.ncols(),
                n * n
            )));
        }
        Ok(Coalgebra { field, comult, counit })
    }

    pub fn dim(&self) -> usize {
        self.counit.dim()
    }

    pub fn comult(&self) -> &Matrix {
        &self.comult
    }

    /// Values of the counit on the basis.
    pub fn counit(&self) -> &SparseVec {
        &self.counit
    }

    pub fn counit_matrix(&self) -> Matrix {
        Matrix::from_fn(1, self.dim(), |i| {
            SparseVec::from_terms(1, self.counit.get(i).map(|c| vec![(0, c.clone())]).unwrap_or_default())
        })
    }
}

/// Bialgebra with an invertible antipode; the inverse is stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebra {
    algebra: StructureAlgebra,
    coalgebra: Coalgebra,
    antipode: Matrix,
    antipode_inv: Matrix,
}

impl HopfAlgebra {
    /// Computes the inverse antipode; fails with `SingularMatrix` if `S` is not bijective.
    pub fn new(algebra: StructureAlgebra, coalgebra: Coalgebra, antipode: Matrix) -> Result<Self> {
        Self::check_dims(&algebra, &coalgebra, &antipode)?;
        let antipode_inv = matrix_inverse(algebra.field(), &antipode)?;
        Ok(HopfAlgebra { algebra, coalgebra, antipode, antipode_inv })
    }

    /// Uses a supplied inverse antipode, validating `S S⁻¹ = S⁻¹ S = id`.
    pub fn with_inverse(
        algebra: StructureAlgebra,
        coalgebra: Coalgebra,
        antipode: Matrix,
        antipode_inv: Matrix,
    ) -> Result<Self> {
        Self::check_dims(&algebra, &coalgebra, &antipode)?;
        if !antipode.compose(&antipode_inv).is_identity() || !antipode_inv.compose(&antipode).is_identity() {
            return Err(Error::Validation { what: "antipode inverse".into(), report: "S·S⁻¹ ≠ id".into() });
        }
        Ok(HopfAlgebra { algebra, coalgebra, antipode, antipode_inv })
    }

    fn check_dims(algebra: &StructureAlgebra, coalgebra: &Coalgebra, antipode: &Matrix) -> Result<()> {
        let n = algebra.dim();
        if coalgebra.dim() != n || antipode.nrows() != n || antipode.ncols() != n {
            return Err(Error::DimensionMismatch(format!(
                "algebra dim {n}, coalgebra dim {}, antipode {}x{}",
                coalgebra.dim(),
                antipode.nrows(),
                antipode.ncols()
            )));
        }
        if coalgebra.field != algebra.field() {
            return Err(Error::FieldMismatch("coalgebra and algebra fields differ".into()));
        }
        Ok(())
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn algebra(&self) -> &StructureAlgebra {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &Coalgebra {
        &self.coalgebra
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    pub fn antipode_inv(&self) -> &Matrix {
        &self.antipode_inv
    }

    /// `Δ(e_i)` in `H ⊗ H`.
    pub fn delta(&self, i: usize) -> &SparseVec {
        self.coalgebra.comult.column(i)
    }

    pub fn epsilon(&self, x: &SparseVec) -> crate::scalar::Scalar {
        x.pair(self.field(), &self.coalgebra.counit)
    }

    pub fn labels(&self) -> &[String] {
        self.algebra.labels()
    }

    /// Whether every structure tensor agrees, ignoring labels.
    pub fn same_structure(&self, other: &HopfAlgebra) -> bool {
        self.algebra.same_structure(&other.algebra)
            && self.coalgebra == other.coalgebra
            && self.antipode == other.antipode
            && self.antipode_inv == other.antipode_inv
    }
}

/// Full Hopf axiom check: algebra, coalgebra, bialgebra compatibility,
/// antipode laws on every basis element, and `S S⁻¹ = id`.
pub fn check_hopf(h: &HopfAlgebra) -> CheckReport {
    let n = h.dim();
    let a = h.algebra();
    let f = h.field();
    let mut report = CheckReport::new("hopf");
    report.absorb("algebra", check_algebra(a));

    let delta = h.coalgebra().comult();
    report.check("coassociativity", |w| {
        for i in 0..n {
            let d = h.delta(i);
            let left = apply_on_slot(d, n, 2, 0, delta);
            let right = apply_on_slot(d, n, 2, 1, delta);
            if let Some(l) = left.first_difference(&right) {
                w.push([i, l]);
            }
        }
    });
    let eps = h.coalgebra().counit_matrix();
    report.check("counit laws", |w| {
        for i in 0..n {
            let d = h.delta(i);
            w.fail_if(apply_on_slot(d, n, 2, 0, &eps) != a.basis(i), [i, 0]);
            w.fail_if(apply_on_slot(d, n, 2, 1, &eps) != a.basis(i), [i, 1]);
        }
    });
    report.check("coproduct multiplicative", |w| {
        for i in 0..n {
            for j in 0..n {
                let lhs = delta.apply(a.mul_basis(i, j));
                let rhs = mul_in_tensor_square(a, h.delta(i), h.delta(j));
                w.fail_if(lhs != rhs, [i, j]);
            }
        }
    });
    report.check("coproduct unital", |w| {
        w.fail_if(delta.apply(a.unit()) != a.unit().tensor(a.unit()), [0]);
    });
    report.check("counit multiplicative", |w| {
        for i in 0..n {
            for j in 0..n {
                let lhs = h.epsilon(a.mul_basis(i, j));
                let rhs = &h.epsilon(&a.basis(i)) * &h.epsilon(&a.basis(j));
                w.fail_if(lhs != rhs, [i, j]);
            }
        }
    });
    report.check("counit unital", |w| {
        w.fail_if(!h.epsilon(a.unit()).is_one(), [0]);
    });
    let s = h.antipode();
    report.check("antipode S(h1)h2 = ε(h)1", |w| {
        for i in 0..n {
            let mut acc = VecBuilder::new(n);
            for (idx, c) in h.delta(i).entries() {
                acc.add_scaled(c, &a.mul(s.column(idx / n), &a.basis(idx % n)));
            }
            w.fail_if(acc.build() != a.unit().scaled(&h.epsilon(&a.basis(i))), [i]);
        }
    });
    report.check("antipode h1 S(h2) = ε(h)1", |w| {
        for i in 0..n {
            let mut acc = VecBuilder::new(n);
            for (idx, c) in h.delta(i).entries() {
                acc.add_scaled(c, &a.mult().left_basis(idx / n, s.column(idx % n)));
            }
            w.fail_if(acc.build() != a.unit().scaled(&h.epsilon(&a.basis(i))), [i]);
        }
    });
    report.check("antipode inverse", |w| {
        if let Some((r, c)) = s.compose(h.antipode_inv()).first_difference(&Matrix::identity(f, n)) {
            w.push([r, c]);
        }
        if let Some((r, c)) = h.antipode_inv().compose(s).first_difference(&Matrix::identity(f, n)) {
            w.push([r, c]);
        }
    });
    report
}

/// `Δ^{(n)}: H → H^{⊗n}`, extending on the last tensor slot.
pub fn iterated_coproduct(h: &HopfAlgebra, n: usize) -> Matrix {
    iterated_coproduct_on(h, n, |k| k - 1)
}

/// Same as [`iterated_coproduct`] but extending on the first slot.
pub fn iterated_coproduct_left(h: &HopfAlgebra, n: usize) -> Matrix {
    iterated_coproduct_on(h, n, |_| 0)
}

fn iterated_coproduct_on(h: &HopfAlgebra, n: usize, slot: impl Fn(usize) -> usize) -> Matrix {
    assert!(n >= 1, "iterated coproduct needs n >= 1");
    let d = h.dim();
    let mut m = Matrix::identity(h.field(), d);
    for k in 1..n {
        let delta = h.coalgebra().comult();
        m = Matrix::from_fn(d.pow(k as u32 + 1), d, |i| apply_on_slot(m.column(i), d, k, slot(k), delta));
    }
    m
}

pub fn is_involutive(h: &HopfAlgebra) -> bool {
    h.antipode().compose(h.antipode()).is_identity()
}

/// The linear dual `H*` in the dual basis `δ_i`.
pub fn dual_hopf(h: &HopfAlgebra) -> HopfAlgebra {
    let n = h.dim();
    let f = h.field();
    // (δ_i δ_j)(e_k) = coefficient of e_i ⊗ e_j in Δ(e_k)
    let mut per_pair: Vec<Vec<(usize, crate::scalar::Scalar)>> = vec![Vec::new(); n * n];
    for k in 0..n {
        for (idx, c) in h.delta(k).entries() {
            per_pair[*idx].push((k, c.clone()));
        }
    }
    let mut per_pair = per_pair.into_iter();
    let mult = Tensor3::from_fn([n, n, n], |_, _| SparseVec::from_terms(n, per_pair.next().unwrap()));
    let labels: Vec<String> = h.labels().iter().map(|l| format!("δ{l}")).collect();
    let algebra = StructureAlgebra { field: f, labels, mult, unit: h.coalgebra().counit().clone() };
    // Δ(δ_k)(e_i ⊗ e_j) = coefficient of e_k in e_i e_j
    let mut cols: Vec<Vec<(usize, crate::scalar::Scalar)>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..n {
            for (k, c) in h.algebra().mul_basis(i, j).entries() {
                cols[*k].push((i * n + j, c.clone()));
            }
        }
    }
    let comult = Matrix::from_columns(n * n, cols.into_iter().map(|t| SparseVec::from_terms(n * n, t)).collect());
    let coalgebra = Coalgebra { field: f, comult, counit: h.algebra().unit().clone() };
    HopfAlgebra { algebra, coalgebra, antipode: h.antipode().transpose(), antipode_inv: h.antipode_inv().transpose() }
}

/// `H^{op}`: opposite multiplication, same coproduct, antipode `S⁻¹`.
pub fn opposite_hopf(h: &HopfAlgebra) -> HopfAlgebra {
    HopfAlgebra {
        algebra: opposite(h.algebra()),
        coalgebra: h.coalgebra().clone(),
        antipode: h.antipode_inv().clone(),
        antipode_inv: h.antipode().clone(),
    }
}

/// Tensor product of Hopf algebras with componentwise structure.
pub fn tensor_hopf(h: &HopfAlgebra, k: &HopfAlgebra) -> Result<HopfAlgebra> {
    let algebra = tensor_algebra(h.algebra(), k.algebra())?;
    let (nh, nk) = (h.dim(), k.dim());
    let total = nh * nk;
    let comult = Matrix::from_fn(total * total, total, |p| {
        let mut out = VecBuilder::new(total * total);
        for (x, c) in h.delta(p / nk).entries() {
            for (y, d) in k.delta(p % nk).entries() {
                let (h1, h2) = (x / nh, x % nh);
                let (k1, k2) = (y / nk, y % nk);
                out.push((h1 * nk + k1) * total + (h2 * nk + k2), c * d);
            }
        }
        out.build()
    });
    let counit = h.coalgebra().counit().tensor(k.coalgebra().counit());
    Ok(HopfAlgebra {
        algebra,
        coalgebra: Coalgebra { field: h.field(), comult, counit },
        antipode: tensor_of_maps(h.antipode(), k.antipode()),
        antipode_inv: tensor_of_maps(h.antipode_inv(), k.antipode_inv()),
    })
}

/// Replaces the antipode without validation; used to build negative controls.
pub fn with_raw_antipode(h: &HopfAlgebra, antipode: Matrix) -> HopfAlgebra {
    HopfAlgebra { algebra: h.algebra.clone(), coalgebra: h.coalgebra.clone(), antipode_inv: antipode.clone(), antipode }
}
