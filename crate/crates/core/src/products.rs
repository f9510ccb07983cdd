//! The four product algebras built from a module or bimodule algebra, the
//! explicit isomorphisms between them, and algebra-map checkers.
//!
//! Basis orders are fixed and row-major:
//! - `φ ♮ h` and `φ ⋈ h` use `(φ, h)`;
//! - `(a ⊗ b) ⋄ h` uses `(a, b, h)`;
//! - `a ⊙ h ⊙ b` uses `(a, h, b)`.

use std::fmt;

use crate::actions::{enveloping_bimodule_algebra, BimoduleAlgebra, LeftModuleAlgebra};
use crate::algebra::{iterated_coproduct, HopfAlgebra, StructureAlgebra};
use crate::linalg::{matrix_inverse, Matrix, SparseVec, Tensor3, VecBuilder};
use crate::report::CheckReport;
use crate::scalar::{FieldSpec, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProductKind {
    LrSmash,
    DiagonalCrossed,
    KadisonDiamond,
    CmOdot,
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProductKind::LrSmash => "L-R-smash",
            ProductKind::DiagonalCrossed => "diagonal crossed",
            ProductKind::KadisonDiamond => "diamond",
            ProductKind::CmOdot => "odot",
        })
    }
}

/// A materialized product algebra together with the dimensions of its tensor factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductAlgebra {
    pub underlying: StructureAlgebra,
    pub kind: ProductKind,
    /// Factor dimensions in basis order, e.g. `[dim A, dim A, dim H]` for `⋄`.
    pub factor_dims: Vec<usize>,
}

impl ProductAlgebra {
    pub fn dim(&self) -> usize {
        self.underlying.dim()
    }
}

/// Sweedler terms of `Δ(e_h)`: `(h1, h2, c)`.
fn split2(h: &HopfAlgebra, i: usize) -> impl Iterator<Item = (usize, usize, &Scalar)> {
    let n = h.dim();
    h.delta(i).entries().iter().map(move |(idx, c)| (idx / n, idx % n, c))
}

/// Sweedler terms of a column of `Δ^{(3)}`: `(h1, h2, h3, c)`.
fn split3(delta3: &Matrix, n: usize, i: usize) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
    delta3.column(i).entries().iter().map(move |(idx, c)| (idx / (n * n), (idx / n) % n, idx % n, c))
}

fn labels3(a: &[String], b: &[String], c: &[String], sep: (&str, &str)) -> Vec<String> {
    let mut out = Vec::with_capacity(a.len() * b.len() * c.len());
    for x in a {
        for y in b {
            for z in c {
                out.push(format!("{x}{}{y}{}{z}", sep.0, sep.1));
            }
        }
    }
    out
}

fn labels2(a: &[String], b: &[String], sep: &str) -> Vec<String> {
    a.iter().flat_map(|x| b.iter().map(move |y| format!("{x}{sep}{y}"))).collect()
}

/// `(φ♮h)(φ'♮h') = (φ·h'₂)(h₁·φ') ♮ h₂h'₁`.
pub fn lr_smash(b: &BimoduleAlgebra) -> ProductAlgebra {
    let (h, alg) = (b.hopf(), b.alg());
    let (nh, na) = (h.dim(), alg.dim());
    let n = na * nh;
    let mult = Tensor3::from_fn([n, n, n], |p, q| {
        let (phi, x) = (p / nh, p % nh);
        let (psi, y) = (q / nh, q % nh);
        let mut out = VecBuilder::new(n);
        for (x1, x2, c) in split2(h, x) {
            let right = b.left_act().slice(x1, psi);
            for (y1, y2, d) in split2(h, y) {
                let left = b.right_act().slice(phi, y2);
                let prod = alg.mul(left, right);
                out.add_tensor(&(c * d), &prod, h.algebra().mul_basis(x2, y1));
            }
        }
        out.build()
    });
    let unit = alg.unit().tensor(h.algebra().unit());
    let labels = labels2(alg.labels(), h.labels(), "♮");
    ProductAlgebra {
        underlying: StructureAlgebra::new(alg.field(), labels, mult, unit).expect("shapes agree"),
        kind: ProductKind::LrSmash,
        factor_dims: vec![na, nh],
    }
}

/// `(φ⋈h)(φ'⋈h') = φ(h₁·φ'·S⁻¹(h₃)) ⋈ h₂h'`.
pub fn diagonal_crossed(b: &BimoduleAlgebra) -> ProductAlgebra {
    let (h, alg) = (b.hopf(), b.alg());
    let (nh, na) = (h.dim(), alg.dim());
    let n = na * nh;
    let delta3 = iterated_coproduct(h, 3);
    let s_inv = h.antipode_inv();
    let mult = Tensor3::from_fn([n, n, n], |p, q| {
        let (phi, x) = (p / nh, p % nh);
        let (psi, y) = (q / nh, q % nh);
        let mut out = VecBuilder::new(n);
        for (x1, x2, x3, c) in split3(&delta3, nh, x) {
            let inner = b.left_act().slice(x1, psi);
            let twisted = b.right_act().bilinear(inner, s_inv.column(x3));
            let prod = alg.mult().left_basis(phi, &twisted);
            out.add_tensor(c, &prod, h.algebra().mul_basis(x2, y));
        }
        out.build()
    });
    let unit = alg.unit().tensor(h.algebra().unit());
    let labels = labels2(alg.labels(), h.labels(), "⋈");
    ProductAlgebra {
        underlying: StructureAlgebra::new(alg.field(), labels, mult, unit).expect("shapes agree"),
        kind: ProductKind::DiagonalCrossed,
        factor_dims: vec![na, nh],
    }
}

/// `(a⊗b⊗h)(a'⊗b'⊗h') = a(h₁·a') ⊗ b'(S(h'₂)·b) ⊗ h₂h'₁`; the middle product is taken in `A`.
pub fn kadison_diamond(m: &LeftModuleAlgebra) -> ProductAlgebra {
    let (h, alg) = (m.hopf(), m.alg());
    let (nh, na) = (h.dim(), alg.dim());
    let n = na * na * nh;
    let s = h.antipode();
    let split = |p: usize| (p / (na * nh), (p / nh) % na, p % nh);
    let mult = Tensor3::from_fn([n, n, n], |p, q| {
        let (a, b, x) = split(p);
        let (a2, b2, y) = split(q);
        let mut out = VecBuilder::new(n);
        for (x1, x2, c) in split2(h, x) {
            let first = alg.mult().left_basis(a, m.act_basis(x1, a2));
            for (y1, y2, d) in split2(h, y) {
                let moved = m.act().right_basis(s.column(y2), b);
                let second = alg.mult().left_basis(b2, &moved);
                out.add_tensor3(&(c * d), &first, &second, h.algebra().mul_basis(x2, y1));
            }
        }
        out.build()
    });
    let unit = alg.unit().tensor(alg.unit()).tensor(h.algebra().unit());
    let labels = labels3(alg.labels(), alg.labels(), h.labels(), ("⊗", "⋄"));
    ProductAlgebra {
        underlying: StructureAlgebra::new(alg.field(), labels, mult, unit).expect("shapes agree"),
        kind: ProductKind::KadisonDiamond,
        factor_dims: vec![na, na, nh],
    }
}

/// `(a⊗h⊗b)(a'⊗h'⊗b') = a(h₁·a') ⊗ h₂h' ⊗ (h₃·b')b`.
pub fn cm_odot(m: &LeftModuleAlgebra) -> ProductAlgebra {
    let (h, alg) = (m.hopf(), m.alg());
    let (nh, na) = (h.dim(), alg.dim());
    let n = na * nh * na;
    let delta3 = iterated_coproduct(h, 3);
    let split = |p: usize| (p / (nh * na), (p / na) % nh, p % na);
    let mult = Tensor3::from_fn([n, n, n], |p, q| {
        let (a, x, b) = split(p);
        let (a2, y, b2) = split(q);
        let mut out = VecBuilder::new(n);
        for (x1, x2, x3, c) in split3(&delta3, nh, x) {
            let first = alg.mult().left_basis(a, m.act_basis(x1, a2));
            let third = alg.mult().right_basis(m.act_basis(x3, b2), b);
            out.add_tensor3(c, &first, h.algebra().mul_basis(x2, y), &third);
        }
        out.build()
    });
    let unit = alg.unit().tensor(h.algebra().unit()).tensor(alg.unit());
    let labels = labels3(alg.labels(), h.labels(), alg.labels(), ("⊙", "⊙"));
    ProductAlgebra {
        underlying: StructureAlgebra::new(alg.field(), labels, mult, unit).expect("shapes agree"),
        kind: ProductKind::CmOdot,
        factor_dims: vec![na, nh, na],
    }
}

/// `ν(φ⋈h) = φ·h₂ ♮ h₁`.
pub fn iso_nu(b: &BimoduleAlgebra) -> Matrix {
    let (h, na, nh) = (b.hopf(), b.alg().dim(), b.hopf().dim());
    let f = b.field();
    Matrix::from_fn(na * nh, na * nh, |p| {
        let (phi, x) = (p / nh, p % nh);
        let mut out = VecBuilder::new(na * nh);
        for (x1, x2, c) in split2(h, x) {
            out.add_tensor(c, b.right_act().slice(phi, x2), &SparseVec::basis(f, nh, x1));
        }
        out.build()
    })
}

/// `ν⁻¹(φ♮h) = φ·S⁻¹(h₂) ⋈ h₁`.
pub fn iso_nu_inv(b: &BimoduleAlgebra) -> Matrix {
    let (h, na, nh) = (b.hopf(), b.alg().dim(), b.hopf().dim());
    let f = b.field();
    let s_inv = h.antipode_inv();
    Matrix::from_fn(na * nh, na * nh, |p| {
        let (phi, x) = (p / nh, p % nh);
        let mut out = VecBuilder::new(na * nh);
        for (x1, x2, c) in split2(h, x) {
            let moved = b.right_act().left_basis(phi, s_inv.column(x2));
            out.add_tensor(c, &moved, &SparseVec::basis(f, nh, x1));
        }
        out.build()
    })
}

/// `a⊗h⊗b ↦ (a⊗b)⋈h`, a permutation of basis indices.
pub fn iso_cm_to_diagonal(m: &LeftModuleAlgebra) -> Matrix {
    let (na, nh) = (m.alg().dim(), m.hopf().dim());
    let perm: Vec<usize> = (0..na * nh * na)
        .map(|p| {
            let (a, x, b) = (p / (nh * na), (p / na) % nh, p % na);
            (a * na + b) * nh + x
        })
        .collect();
    Matrix::permutation(m.field(), na * na * nh, &perm)
}

/// `a⊗b⊗h ↦ a⊗h₁⊗h₂·b`.
pub fn iso_diamond_to_odot(m: &LeftModuleAlgebra) -> Matrix {
    let (h, na, nh) = (m.hopf(), m.alg().dim(), m.hopf().dim());
    let f = m.field();
    let n = na * na * nh;
    Matrix::from_fn(n, n, |p| {
        let (a, b, x) = (p / (na * nh), (p / nh) % na, p % nh);
        let mut out = VecBuilder::new(n);
        for (x1, x2, c) in split2(h, x) {
            out.add_tensor3(c, &SparseVec::basis(f, na, a), &SparseVec::basis(f, nh, x1), m.act_basis(x2, b));
        }
        out.build()
    })
}

/// `a⊗h⊗b ↦ a⊗S(h₂)·b⊗h₁`.
pub fn iso_odot_to_diamond(m: &LeftModuleAlgebra) -> Matrix {
    let (h, na, nh) = (m.hopf(), m.alg().dim(), m.hopf().dim());
    let f = m.field();
    let n = na * na * nh;
    let s = h.antipode();
    Matrix::from_fn(n, n, |p| {
        let (a, x, b) = (p / (nh * na), (p / na) % nh, p % na);
        let mut out = VecBuilder::new(n);
        for (x1, x2, c) in split2(h, x) {
            let moved = m.act().right_basis(s.column(x2), b);
            out.add_tensor3(c, &SparseVec::basis(f, na, a), &moved, &SparseVec::basis(f, nh, x1));
        }
        out.build()
    })
}

/// Checks `f(1) = 1` and `f(e_i e_j) = f(e_i) f(e_j)` on all basis pairs.
pub fn check_algebra_map(f: &Matrix, src: &StructureAlgebra, dst: &StructureAlgebra) -> CheckReport {
    let mut report = CheckReport::new("algebra map");
    if f.ncols() != src.dim() || f.nrows() != dst.dim() {
        report.pass_or_fail(
            "shape",
            false,
            Some(format!("map is {}×{}, algebras have dims {} → {}", f.nrows(), f.ncols(), src.dim(), dst.dim())),
        );
        return report;
    }
    report.check("f(1) = 1", |w| {
        if let Some(k) = f.apply(src.unit()).first_difference(dst.unit()) {
            w.push([k]);
        }
    });
    report.check("f(xy) = f(x)f(y)", |w| {
        for i in 0..src.dim() {
            for j in 0..src.dim() {
                let lhs = f.apply(src.mul_basis(i, j));
                let rhs = dst.mul(f.column(i), f.column(j));
                if let Some(k) = lhs.first_difference(&rhs) {
                    w.push([i, j, k]);
                }
            }
        }
    });
    report
}

/// [`check_algebra_map`] plus invertibility of the matrix.
pub fn check_algebra_iso(f: &Matrix, src: &StructureAlgebra, dst: &StructureAlgebra) -> CheckReport {
    let mut report = check_algebra_map(f, src, dst);
    report.claim = "algebra isomorphism".into();
    for c in &mut report.clauses {
        c.claim = report.claim.clone();
    }
    let invertible = f.nrows() == f.ncols() && matrix_inverse(src.field(), f).is_ok();
    report.pass_or_fail("invertible", invertible, None);
    report
}

/// Checks that two square maps are mutually inverse.
pub fn check_mutually_inverse(report: &mut CheckReport, name: &str, field: FieldSpec, f: &Matrix, g: &Matrix) {
    let id = Matrix::identity(field, f.ncols());
    report.check(format!("{name}: g∘f = id"), |w| {
        if let Some((i, j)) = g.compose(f).first_difference(&id) {
            w.push([i, j]);
        }
    });
    let id = Matrix::identity(field, g.ncols());
    report.check(format!("{name}: f∘g = id"), |w| {
        if let Some((i, j)) = f.compose(g).first_difference(&id) {
            w.push([i, j]);
        }
    });
}

/// Literal equality of the `⋄` and `♮` tables on the shared basis `(a, b, h)`.
pub fn check_diamond_equals_smash(m: &LeftModuleAlgebra) -> CheckReport {
    let diamond = kadison_diamond(m).underlying;
    let smash = lr_smash(&enveloping_bimodule_algebra(m)).underlying;
    let mut report = CheckReport::new("diamond equals L-R-smash");
    report.check("structure constants", |w| {
        let n = diamond.dim();
        if smash.dim() != n {
            w.push([n, smash.dim()]);
            return;
        }
        for i in 0..n {
            for j in 0..n {
                if let Some(k) = diamond.mul_basis(i, j).first_difference(smash.mul_basis(i, j)) {
                    w.push([i, j, k]);
                }
            }
        }
    });
    report.check("units", |w| {
        if let Some(k) = diamond.unit().first_difference(smash.unit()) {
            w.push([k]);
        }
    });
    report
}

/// `Φ = P⁻¹ ∘ ν⁻¹`, where `P` is [`iso_cm_to_diagonal`] and `⋄` is read as `♮`.
pub fn check_composite_diagram(m: &LeftModuleAlgebra) -> CheckReport {
    let b = enveloping_bimodule_algebra(m);
    let route = iso_cm_to_diagonal(m).transpose().compose(&iso_nu_inv(&b));
    let phi = iso_diamond_to_odot(m);
    let mut report = CheckReport::new("isomorphism diagram");
    report.check("Φ = P⁻¹∘ν⁻¹", |w| {
        if let Some((i, j)) = phi.first_difference(&route) {
            w.push([i, j]);
        }
    });
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::check_algebra;
    use crate::catalog::{self, Group};

    const Q: FieldSpec = FieldSpec::Rationals;

    fn c2() -> LeftModuleAlgebra {
        catalog::function_algebra_with_translation(Q, &Group::cyclic(2))
    }

    #[test]
    fn trivial_hopf_degenerates_to_base() {
        let m = crate::actions::trivial_action(&catalog::trivial_hopf(Q), &catalog::upper_triangular2(Q));
        let b = enveloping_bimodule_algebra(&m);
        assert!(lr_smash(&b).underlying.same_structure(b.alg()));
        assert!(diagonal_crossed(&b).underlying.same_structure(b.alg()));
        assert!(iso_nu(&b).is_identity());
        assert!(kadison_diamond(&m).underlying.same_structure(b.alg()));
    }

    #[test]
    fn diamond_hand_values() {
        let m = c2();
        let d = kadison_diamond(&m).underlying;
        // basis (a, b, h), index (a*2 + b)*2 + h
        let idx = |a: usize, b: usize, h: usize| (a * 2 + b) * 2 + h;
        assert_eq!(*d.mul_basis(idx(0, 0, 1), idx(1, 0, 0)), d.basis(idx(0, 0, 1)));
        assert!(d.mul_basis(idx(0, 0, 1), idx(0, 0, 1)).is_zero());
    }

    #[test]
    fn odot_grouplike_formula() {
        let m = c2();
        let o = cm_odot(&m).underlying;
        let g = Group::cyclic(2);
        let idx = |a: usize, h: usize, b: usize| (a * 2 + h) * 2 + b;
        for a in 0..2 {
            for x in 0..2 {
                for b in 0..2 {
                    for a2 in 0..2 {
                        for y in 0..2 {
                            for b2 in 0..2 {
                                // a(g·a') ⊗ gg' ⊗ (g·b')b with δ products
                                let first = g.mul(x, a2);
                                let third = g.mul(x, b2);
                                let expected = if a == first && third == b {
                                    o.basis(idx(a, g.mul(x, y), b))
                                } else {
                                    SparseVec::zero(8)
                                };
                                assert_eq!(*o.mul_basis(idx(a, x, b), idx(a2, y, b2)), expected);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn products_are_algebras() {
        for m in [c2(), catalog::sweedler_module_algebra(Q)] {
            let b = enveloping_bimodule_algebra(&m);
            for p in [lr_smash(&b), diagonal_crossed(&b), kadison_diamond(&m), cm_odot(&m)] {
                assert!(check_algebra(&p.underlying).passed(), "{}", p.kind);
                assert_eq!(p.dim(), p.factor_dims.iter().product::<usize>());
            }
        }
    }

    #[test]
    fn phi_on_grouplikes() {
        let m = c2();
        let phi = iso_diamond_to_odot(&m);
        // e0⊗e1⊗g ↦ e0⊗g⊗e0, indices (a·2 + b)·2 + h and (a·2 + h)·2 + b
        let (src, dst) = (3, 2);
        assert_eq!(*phi.column(src), SparseVec::basis(Q, 8, dst));
    }

    #[test]
    fn isomorphisms_on_catalog() {
        for m in [c2(), catalog::sweedler_module_algebra(Q)] {
            let b = enveloping_bimodule_algebra(&m);
            let (smash, cross) = (lr_smash(&b).underlying, diagonal_crossed(&b).underlying);
            let (nu, nu_inv) = (iso_nu(&b), iso_nu_inv(&b));
            assert!(check_algebra_iso(&nu, &cross, &smash).passed());
            assert!(check_algebra_iso(&nu_inv, &smash, &cross).passed());
            let mut r = CheckReport::new("inverse");
            check_mutually_inverse(&mut r, "ν", Q, &nu, &nu_inv);
            assert!(r.passed());

            let (dia, odot) = (kadison_diamond(&m).underlying, cm_odot(&m).underlying);
            assert!(check_algebra_iso(&iso_cm_to_diagonal(&m), &odot, &cross).passed());
            assert!(check_algebra_iso(&iso_diamond_to_odot(&m), &dia, &odot).passed());
            assert!(check_algebra_iso(&iso_odot_to_diamond(&m), &odot, &dia).passed());
            assert!(check_diamond_equals_smash(&m).passed());
            assert!(check_composite_diagram(&m).passed());
        }
    }

    #[test]
    fn corrupted_nu_fails() {
        let b = enveloping_bimodule_algebra(&c2());
        let mut nu = iso_nu(&b);
        nu.set_column(3, nu.column(3).add(&SparseVec::basis(Q, 8, 0)));
        let r = check_algebra_map(&nu, &diagonal_crossed(&b).underlying, &lr_smash(&b).underlying);
        assert!(!r.passed());
        assert!(!r.clause("f(xy) = f(x)f(y)").unwrap().witnesses.is_empty());
    }
}
