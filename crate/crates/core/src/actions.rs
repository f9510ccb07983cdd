//! Module-algebra and bimodule-algebra structures.
//!
//! Actions are explicit 3-tensors: a left action has shape `[dim H, dim A, dim A]`
//! with slice `(h, a)` equal to `e_h · e_a`; a right action has shape
//! `[dim A, dim H, dim A]` with slice `(a, h)` equal to `e_a · e_h`.

use crate::algebra::{dual_hopf, opposite, opposite_hopf, tensor_algebra, tensor_hopf, HopfAlgebra, StructureAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{SparseVec, Tensor3, VecBuilder};
use crate::report::CheckReport;
use crate::scalar::FieldSpec;

/// Right module-algebra axioms used throughout.
pub const RIGHT_CONVENTION: &str =
    "right module-algebra convention: (a·h)·h' = a·(hh'), a·1 = a, (ab)·h = (a·h1)(b·h2), 1·h = ε(h)1";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftModuleAlgebra {
    hopf: HopfAlgebra,
    alg: StructureAlgebra,
    act: Tensor3,
}

impl LeftModuleAlgebra {
    pub fn new(hopf: HopfAlgebra, alg: StructureAlgebra, act: Tensor3) -> Result<Self> {
        let (nh, na) = (hopf.dim(), alg.dim());
        if act.dims() != [nh, na, na] {
            return Err(Error::DimensionMismatch(format!(
                "left action has shape {:?}, expected [{nh}, {na}, {na}]",
                act.dims()
            )));
        }
        if hopf.field() != alg.field() {
            return Err(Error::FieldMismatch("Hopf algebra and module algebra fields differ".into()));
        }
        Ok(LeftModuleAlgebra { hopf, alg, act })
    }

    pub fn field(&self) -> FieldSpec {
        self.alg.field()
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        &self.hopf
    }

    pub fn alg(&self) -> &StructureAlgebra {
        &self.alg
    }

    pub fn act(&self) -> &Tensor3 {
        &self.act
    }

    pub fn act_basis(&self, h: usize, a: usize) -> &SparseVec {
        self.act.slice(h, a)
    }

    /// `e_h · x`.
    pub fn act_on(&self, h: usize, x: &SparseVec) -> SparseVec {
        self.act.left_basis(h, x)
    }

    /// `y · x` for arbitrary `y ∈ H`, `x ∈ A`.
    pub fn act_vec(&self, y: &SparseVec, x: &SparseVec) -> SparseVec {
        self.act.bilinear(y, x)
    }

    /// Same Hopf algebra and algebra with a different action tensor.
    pub fn with_action(&self, act: Tensor3) -> Result<Self> {
        LeftModuleAlgebra::new(self.hopf.clone(), self.alg.clone(), act)
    }
}

/// `h · a = ε(h) a`.
pub fn trivial_action(hopf: &HopfAlgebra, alg: &StructureAlgebra) -> LeftModuleAlgebra {
    let (nh, na) = (hopf.dim(), alg.dim());
    let act = Tensor3::from_fn([nh, na, na], |h, a| alg.basis(a).scaled(&hopf.epsilon(&hopf.algebra().basis(h))));
    LeftModuleAlgebra::new(hopf.clone(), alg.clone(), act).expect("shapes agree")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightModuleAlgebra {
    hopf: HopfAlgebra,
    alg: StructureAlgebra,
    act: Tensor3,
}

impl RightModuleAlgebra {
    pub fn new(hopf: HopfAlgebra, alg: StructureAlgebra, act: Tensor3) -> Result<Self> {
        let (nh, na) = (hopf.dim(), alg.dim());
        if act.dims() != [na, nh, na] {
            return Err(Error::DimensionMismatch(format!(
                "right action has shape {:?}, expected [{na}, {nh}, {na}]",
                act.dims()
            )));
        }
        Ok(RightModuleAlgebra { hopf, alg, act })
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        &self.hopf
    }

    pub fn alg(&self) -> &StructureAlgebra {
        &self.alg
    }

    pub fn act(&self) -> &Tensor3 {
        &self.act
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimoduleAlgebra {
    hopf: HopfAlgebra,
    alg: StructureAlgebra,
    left: Tensor3,
    right: Tensor3,
}

impl BimoduleAlgebra {
    pub fn new(hopf: HopfAlgebra, alg: StructureAlgebra, left: Tensor3, right: Tensor3) -> Result<Self> {
        let (nh, na) = (hopf.dim(), alg.dim());
        if left.dims() != [nh, na, na] || right.dims() != [na, nh, na] {
            return Err(Error::DimensionMismatch(format!(
                "bimodule actions have shapes {:?} / {:?} for dim H = {nh}, dim A = {na}",
                left.dims(),
                right.dims()
            )));
        }
        if hopf.field() != alg.field() {
            return Err(Error::FieldMismatch("Hopf algebra and bimodule algebra fields differ".into()));
        }
        Ok(BimoduleAlgebra { hopf, alg, left, right })
    }

    pub fn field(&self) -> FieldSpec {
        self.alg.field()
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        &self.hopf
    }

    pub fn alg(&self) -> &StructureAlgebra {
        &self.alg
    }

    pub fn left_act(&self) -> &Tensor3 {
        &self.left
    }

    pub fn right_act(&self) -> &Tensor3 {
        &self.right
    }

    pub fn left_part(&self) -> LeftModuleAlgebra {
        LeftModuleAlgebra { hopf: self.hopf.clone(), alg: self.alg.clone(), act: self.left.clone() }
    }

    pub fn right_part(&self) -> RightModuleAlgebra {
        RightModuleAlgebra { hopf: self.hopf.clone(), alg: self.alg.clone(), act: self.right.clone() }
    }
}

pub fn check_left_module_algebra(m: &LeftModuleAlgebra) -> CheckReport {
    let (h, a, act) = (m.hopf(), m.alg(), m.act());
    let (nh, na) = (h.dim(), a.dim());
    let mut report = CheckReport::new("left module algebra");
    report.check("(hh')·a = h·(h'·a)", |w| {
        for x in 0..nh {
            for y in 0..nh {
                for i in 0..na {
                    let lhs = act.right_basis(h.algebra().mul_basis(x, y), i);
                    let rhs = act.left_basis(x, act.slice(y, i));
                    w.fail_if(lhs != rhs, [x, y, i]);
                }
            }
        }
    });
    report.check("1·a = a", |w| {
        for i in 0..na {
            w.fail_if(act.right_basis(h.algebra().unit(), i) != a.basis(i), [i]);
        }
    });
    report.check("h·(ab) = (h1·a)(h2·b)", |w| {
        for x in 0..nh {
            for i in 0..na {
                for j in 0..na {
                    let lhs = act.left_basis(x, a.mul_basis(i, j));
                    let mut rhs = VecBuilder::new(na);
                    for (idx, c) in h.delta(x).entries() {
                        rhs.add_scaled(c, &a.mul(act.slice(idx / nh, i), act.slice(idx % nh, j)));
                    }
                    w.fail_if(lhs != rhs.build(), [x, i, j]);
                }
            }
        }
    });
    report.check("h·1 = ε(h)1", |w| {
        for x in 0..nh {
            let eps = h.epsilon(&h.algebra().basis(x));
            w.fail_if(act.left_basis(x, a.unit()) != a.unit().scaled(&eps), [x]);
        }
    });
    report
}

pub fn check_right_module_algebra(r: &RightModuleAlgebra) -> CheckReport {
    let (h, a, act) = (r.hopf(), r.alg(), r.act());
    let (nh, na) = (h.dim(), a.dim());
    let mut report = CheckReport::new("right module algebra").with_header(RIGHT_CONVENTION);
    report.check("(a·h)·h' = a·(hh')", |w| {
        for i in 0..na {
            for x in 0..nh {
                for y in 0..nh {
                    let lhs = act.right_basis(act.slice(i, x), y);
                    let rhs = act.left_basis(i, h.algebra().mul_basis(x, y));
                    w.fail_if(lhs != rhs, [i, x, y]);
                }
            }
        }
    });
    report.check("a·1 = a", |w| {
        for i in 0..na {
            w.fail_if(act.left_basis(i, h.algebra().unit()) != a.basis(i), [i]);
        }
    });
    report.check("(ab)·h = (a·h1)(b·h2)", |w| {
        for i in 0..na {
            for j in 0..na {
                for x in 0..nh {
                    let lhs = act.right_basis(a.mul_basis(i, j), x);
                    let mut rhs = VecBuilder::new(na);
                    for (idx, c) in h.delta(x).entries() {
                        rhs.add_scaled(c, &a.mul(act.slice(i, idx / nh), act.slice(j, idx % nh)));
                    }
                    w.fail_if(lhs != rhs.build(), [i, j, x]);
                }
            }
        }
    });
    report.check("1·h = ε(h)1", |w| {
        for x in 0..nh {
            let eps = h.epsilon(&h.algebra().basis(x));
            w.fail_if(act.right_basis(a.unit(), x) != a.unit().scaled(&eps), [x]);
        }
    });
    report
}

pub fn check_bimodule_algebra(b: &BimoduleAlgebra) -> CheckReport {
    let mut report = CheckReport::new("bimodule algebra").with_header(RIGHT_CONVENTION);
    report.absorb("left", check_left_module_algebra(&b.left_part()));
    report.absorb("right", check_right_module_algebra(&b.right_part()));
    let (nh, na) = (b.hopf().dim(), b.alg().dim());
    report.check("(h·φ)·h' = h·(φ·h')", |w| {
        for x in 0..nh {
            for i in 0..na {
                for y in 0..nh {
                    let lhs = b.right_act().right_basis(b.left_act().slice(x, i), y);
                    let rhs = b.left_act().left_basis(x, b.right_act().slice(i, y));
                    w.fail_if(lhs != rhs, [x, i, y]);
                }
            }
        }
    });
    report
}

/// `A^{op}` as a right module algebra via `a·h = S(h)·a`.
pub fn right_action_from_left(m: &LeftModuleAlgebra) -> RightModuleAlgebra {
    let (nh, na) = (m.hopf().dim(), m.alg().dim());
    let s = m.hopf().antipode();
    let act = Tensor3::from_fn([na, nh, na], |a, h| m.act().right_basis(s.column(h), a));
    RightModuleAlgebra { hopf: m.hopf().clone(), alg: opposite(m.alg()), act }
}

/// `A^e = A ⊗ A^{op}` with `h·(a⊗b)·h' = h·a ⊗ b·h'`.
pub fn enveloping_bimodule_algebra(m: &LeftModuleAlgebra) -> BimoduleAlgebra {
    let right = right_action_from_left(m);
    let alg = tensor_algebra(m.alg(), right.alg()).expect("same field");
    let (nh, na) = (m.hopf().dim(), m.alg().dim());
    let f = m.field();
    let left_act = Tensor3::from_fn([nh, na * na, na * na], |h, p| {
        m.act_basis(h, p / na).tensor(&SparseVec::basis(f, na, p % na))
    });
    let right_act = Tensor3::from_fn([na * na, nh, na * na], |p, h| {
        SparseVec::basis(f, na, p / na).tensor(right.act().slice(p % na, h))
    });
    BimoduleAlgebra { hopf: m.hopf().clone(), alg, left: left_act, right: right_act }
}

/// The regular actions of `H` on `H*`, in the dual basis:
/// `(h ⇀ f)(x) = f(xh)` and `(f ↼ h)(x) = f(hx)`.
///
/// Returns `(⇀, ↼)` with shapes `[n, n, n]`; `⇀` is indexed `(h, f)` and `↼` is
/// indexed `(f, h)`.
pub fn regular_actions(h: &HopfAlgebra) -> (Tensor3, Tensor3) {
    let n = h.dim();
    let mult = h.algebra().mult();
    let coeff = |i: usize, j: usize, k: usize| mult.get(i, j, k).cloned();
    let harpoon_l = Tensor3::from_fn([n, n, n], |g, f| {
        SparseVec::from_terms(n, (0..n).filter_map(|x| coeff(x, g, f).map(|c| (x, c))).collect())
    });
    let harpoon_r = Tensor3::from_fn([n, n, n], |f, g| {
        SparseVec::from_terms(n, (0..n).filter_map(|x| coeff(g, x, f).map(|c| (x, c))).collect())
    });
    (harpoon_l, harpoon_r)
}

/// `H*` as a left `H ⊗ H^{op}`-module algebra: `(h ⊗ h')·f = h ⇀ f ↼ h'`.
pub fn hstar_module_algebra(h: &HopfAlgebra) -> LeftModuleAlgebra {
    let n = h.dim();
    let acting = tensor_hopf(h, &opposite_hopf(h)).expect("same field");
    let dual = dual_hopf(h);
    let (left, right) = regular_actions(h);
    let act = Tensor3::from_fn([n * n, n, n], |p, f| left.left_basis(p / n, right.slice(f, p % n)));
    LeftModuleAlgebra { hopf: acting, alg: dual.algebra().clone(), act }
}
