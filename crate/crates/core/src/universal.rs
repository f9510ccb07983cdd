//! The universal property of `(A ⊗ A^{op}) ⋄ H` and its bialgebroid version.
//!
//! A compatible pair is `u: A ⊗ A^{op} → R`, `v: H → R` with
//! `v(h₁) u(a ⊗ S(h₂)·b) = u(h₁·a ⊗ b) v(h₂)`. Such a pair factors uniquely
//! through the canonical inclusions `i(a⊗b) = (a⊗b)⊗1` and `j(h) = (1⊗1)⊗h`.

use crate::actions::LeftModuleAlgebra;
use crate::algebra::{opposite, tensor_algebra, StructureAlgebra};
use crate::bialgebroid::{
    check_bialgebroid, check_bialgebroid_morphism, cm_bialgebroid, hopf_as_bialgebroid, kadison_bialgebroid,
    lu_enveloping_bialgebroid, scalar_inclusion, validated, BialgebroidMorphism, Convention, QUOTIENT_DIM_LIMIT,
};
use crate::linalg::{Echelon, Matrix, SparseVec, VecBuilder};
use crate::products::{check_algebra_map, cm_odot, iso_diamond_to_odot, kadison_diamond};
use crate::report::CheckReport;

/// A target algebra `R` with maps `u: A ⊗ A^{op} → R` and `v: H → R`.
#[derive(Clone, Debug)]
pub struct CompatiblePair {
    pub module: LeftModuleAlgebra,
    pub r: StructureAlgebra,
    pub u: Matrix,
    pub v: Matrix,
}

impl CompatiblePair {
    pub fn new(module: LeftModuleAlgebra, r: StructureAlgebra, u: Matrix, v: Matrix) -> Self {
        CompatiblePair { module, r, u, v }
    }
}

/// `i` and `j` into `(A ⊗ A^{op}) ⋄ H`.
pub fn canonical_inclusions(m: &LeftModuleAlgebra) -> (Matrix, Matrix) {
    let (na, nh) = (m.alg().dim(), m.hopf().dim());
    let f = m.field();
    let (one_a, one_h) = (m.alg().unit(), m.hopf().algebra().unit());
    let i = Matrix::from_fn(na * na * nh, na * na, |p| SparseVec::basis(f, na * na, p).tensor(one_h));
    let j = Matrix::from_fn(na * na * nh, nh, |x| one_a.tensor(one_a).tensor(&SparseVec::basis(f, nh, x)));
    (i, j)
}

/// `R = (A ⊗ A^{op}) ⋄ H` with `u = i`, `v = j`.
pub fn canonical_pair(m: &LeftModuleAlgebra) -> CompatiblePair {
    let (u, v) = canonical_inclusions(m);
    CompatiblePair::new(m.clone(), kadison_diamond(m).underlying, u, v)
}

/// `R = A ⊙ H ⊙ A` with `u(a⊗b) = a⊗1⊗b`, `v(h) = 1⊗h⊗1`.
pub fn odot_pair(m: &LeftModuleAlgebra) -> CompatiblePair {
    let (na, nh) = (m.alg().dim(), m.hopf().dim());
    let f = m.field();
    let (one_a, one_h) = (m.alg().unit(), m.hopf().algebra().unit());
    let n = na * nh * na;
    let u = Matrix::from_fn(n, na * na, |p| {
        SparseVec::basis(f, na, p / na).tensor(one_h).tensor(&SparseVec::basis(f, na, p % na))
    });
    let v = Matrix::from_fn(n, nh, |x| one_a.tensor(&SparseVec::basis(f, nh, x)).tensor(one_a));
    CompatiblePair::new(m.clone(), cm_odot(m).underlying, u, v)
}

/// `u`, `v` are algebra maps and the compatibility identity holds on all basis triples `(h, a, b)`.
pub fn check_compatibility(p: &CompatiblePair) -> CheckReport {
    let m = &p.module;
    let (h, alg) = (m.hopf(), m.alg());
    let (na, nh) = (alg.dim(), h.dim());
    let mut report = CheckReport::new("compatible pair");
    let enveloping = tensor_algebra(alg, &opposite(alg)).expect("same field");
    report.absorb("u", check_algebra_map(&p.u, &enveloping, &p.r));
    report.absorb("v", check_algebra_map(&p.v, h.algebra(), &p.r));
    if p.u.nrows() != p.r.dim() || p.v.nrows() != p.r.dim() {
        return report;
    }
    let s = h.antipode();
    let f = m.field();
    report.check("v(h1)u(a⊗S(h2)·b) = u(h1·a⊗b)v(h2)", |w| {
        for x in 0..nh {
            for a in 0..na {
                for b in 0..na {
                    let mut lhs = VecBuilder::new(p.r.dim());
                    let mut rhs = VecBuilder::new(p.r.dim());
                    for (idx, c) in h.delta(x).entries() {
                        let (x1, x2) = (idx / nh, idx % nh);
                        let moved = m.act().right_basis(s.column(x2), b);
                        let ua = p.u.apply(&SparseVec::basis(f, na, a).tensor(&moved));
                        lhs.add_scaled(c, &p.r.mul(p.v.column(x1), &ua));
                        let ub = p.u.apply(&m.act_basis(x1, a).tensor(&SparseVec::basis(f, na, b)));
                        rhs.add_scaled(c, &p.r.mul(&ub, p.v.column(x2)));
                    }
                    if let Some(k) = lhs.build().first_difference(&rhs.build()) {
                        w.push([x, a, b, k]);
                    }
                }
            }
        }
    });
    report
}

/// `ω((a⊗b)⊗h) = u(a ⊗ h₂·b) v(h₁)`.
pub fn build_omega(p: &CompatiblePair) -> Matrix {
    let m = &p.module;
    let h = m.hopf();
    let (na, nh) = (m.alg().dim(), h.dim());
    let f = m.field();
    Matrix::from_fn(p.r.dim(), na * na * nh, |q| {
        let (a, b, x) = (q / (na * nh), (q / nh) % na, q % nh);
        let mut out = VecBuilder::new(p.r.dim());
        for (idx, c) in h.delta(x).entries() {
            let (x1, x2) = (idx / nh, idx % nh);
            let ua = p.u.apply(&SparseVec::basis(f, na, a).tensor(m.act_basis(x2, b)));
            out.add_scaled(c, &p.r.mul(&ua, p.v.column(x1)));
        }
        out.build()
    })
}

/// Checks `ω` is an algebra map with `ω∘i = u` and `ω∘j = v`.
pub fn check_factorization(p: &CompatiblePair, omega: &Matrix) -> CheckReport {
    let mut report = CheckReport::new("factorization");
    let diamond = kadison_diamond(&p.module).underlying;
    report.absorb("ω", check_algebra_map(omega, &diamond, &p.r));
    let (i, j) = canonical_inclusions(&p.module);
    for (clause, incl, target) in [("ω∘i = u", &i, &p.u), ("ω∘j = v", &j, &p.v)] {
        report.check(clause, |w| {
            if let Some((r, c)) = omega.compose(incl).first_difference(target) {
                w.push([r, c]);
            }
        });
    }
    report
}

/// Rank of `span{ i(x) j(y) }` in the diamond product; full rank forces uniqueness.
pub fn generation_rank(m: &LeftModuleAlgebra) -> (usize, usize) {
    let diamond = kadison_diamond(m).underlying;
    let (i, j) = canonical_inclusions(m);
    let mut ech = Echelon::new(diamond.dim());
    for x in 0..i.ncols() {
        for y in 0..j.ncols() {
            ech.insert(diamond.mul(i.column(x), j.column(y)));
        }
    }
    (ech.rank(), diamond.dim())
}

pub fn check_uniqueness(m: &LeftModuleAlgebra) -> CheckReport {
    let mut report = CheckReport::new("uniqueness");
    let (rank, dim) = generation_rank(m);
    report.pass_or_fail("i(x)j(y) span everything", rank == dim, Some(format!("rank {rank} of {dim}")));
    report
}

/// Compatibility and factorization for the canonical pair and the odot pair,
/// `ω` against the explicit `⋄ → ⊙` map, and the uniqueness certificate.
pub fn verify_universal_property(m: &LeftModuleAlgebra) -> CheckReport {
    let mut report = CheckReport::new("universal property");
    let canonical = canonical_pair(m);
    report.absorb("canonical", check_compatibility(&canonical));
    let omega = build_omega(&canonical);
    report.absorb("canonical", check_factorization(&canonical, &omega));
    report.check("canonical/ω = id", |w| {
        if let Some((r, c)) = omega.first_difference(&Matrix::identity(m.field(), omega.ncols())) {
            w.push([r, c]);
        }
    });
    let odot = odot_pair(m);
    report.absorb("odot", check_compatibility(&odot));
    let omega = build_omega(&odot);
    report.absorb("odot", check_factorization(&odot, &omega));
    report.check("odot/ω equals the explicit ⋄ → ⊙ map", |w| {
        if let Some((r, c)) = omega.first_difference(&iso_diamond_to_odot(m)) {
            w.push([r, c]);
        }
    });
    report.absorb("", check_uniqueness(m));
    report
}

/// How the Hopf algebra enters as a bialgebroid; printed in report headers.
pub const HOPF_OVER_GROUND_FIELD: &str = "H is read as a bialgebroid over k (s = t = unit map, Δ and ε its own); \
     v is checked as a morphism with base map c ↦ c·1_A";

/// `ω` for the odot pair as a bialgebroid morphism, with `u` and `v` checked as
/// bialgebroid morphisms first.
pub fn verify_omega_morphism(m: &LeftModuleAlgebra, preferred: Convention) -> CheckReport {
    let mut report = CheckReport::new("ω is a bialgebroid morphism").with_header(HOPF_OVER_GROUND_FIELD);
    let (cm, cm_report) = validated(cm_bialgebroid(m, preferred, QUOTIENT_DIM_LIMIT), preferred);
    let (kad, kad_report) = validated(kadison_bialgebroid(m, preferred, QUOTIENT_DIM_LIMIT), preferred);
    report.absorb("R = odot", cm_report);
    report.absorb("diamond", kad_report);
    let lu = lu_enveloping_bialgebroid(m.alg(), cm.convention, QUOTIENT_DIM_LIMIT);
    report.absorb("enveloping", check_bialgebroid(&lu));
    let hopf = hopf_as_bialgebroid(m.hopf());
    report.absorb("H over k", check_bialgebroid(&hopf));

    let pair = odot_pair(m);
    report.absorb("pair", check_compatibility(&pair));
    let id = Matrix::identity(m.field(), m.alg().dim());
    let u = BialgebroidMorphism { total_map: pair.u.clone(), base_map: id.clone() };
    report.absorb("u", check_bialgebroid_morphism(&u, &lu, &cm));
    let v = BialgebroidMorphism { total_map: pair.v.clone(), base_map: scalar_inclusion(m.alg()) };
    report.absorb("v", check_bialgebroid_morphism(&v, &hopf, &cm));
    let omega = BialgebroidMorphism { total_map: build_omega(&pair), base_map: id };
    report.absorb("ω", check_bialgebroid_morphism(&omega, &kad, &cm));
    report.check("ω equals the explicit ⋄ → ⊙ map", |w| {
        if let Some((r, c)) = omega.total_map.first_difference(&iso_diamond_to_odot(m)) {
            w.push([r, c]);
        }
    });
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::actions::trivial_action;
    use crate::catalog::{self, Group};
    use crate::scalar::FieldSpec;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn ranks_match_dimension() {
        let c2 = catalog::function_algebra_with_translation(Q, &Group::cyclic(2));
        assert_eq!(generation_rank(&c2), (8, 8));
        assert_eq!(generation_rank(&catalog::sweedler_module_algebra(Q)), (16, 16));
    }

    #[test]
    fn universal_property_and_omega_pass() {
        for m in [
            trivial_action(&catalog::trivial_hopf(Q), &StructureAlgebra::ground(Q)),
            catalog::function_algebra_with_translation(Q, &Group::cyclic(2)),
            catalog::sweedler_module_algebra(Q),
        ] {
            let r = verify_universal_property(&m);
            assert!(r.passed(), "{r}");
            let r = verify_omega_morphism(&m, Convention::default());
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn omega_is_u_for_trivial_hopf() {
        let m = trivial_action(&catalog::trivial_hopf(Q), &catalog::upper_triangular2(Q));
        let p = odot_pair(&m);
        assert_eq!(build_omega(&p), p.u);
    }

    #[test]
    fn v_twisted_by_antipode_fails() {
        // S is the identity on kC2, so the twist is only visible over a non-abelian group
        let c2 = catalog::function_algebra_with_translation(Q, &Group::cyclic(2));
        let mut p = canonical_pair(&c2);
        p.v = p.v.compose(c2.hopf().antipode());
        assert!(check_compatibility(&p).passed());

        let s3 = catalog::function_algebra_with_translation(Q, &Group::symmetric3());
        let mut p = canonical_pair(&s3);
        p.v = p.v.compose(s3.hopf().antipode());
        let r = check_compatibility(&p);
        assert!(!r.passed());
        assert!(r.failures().all(|c| c.witness_count > 0));
    }
}
