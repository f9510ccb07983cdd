//! Bialgebroids over a noncommutative base algebra.
//!
//! A bialgebroid is stored as matrices: source and target `A → T`, a chosen lift
//! of the coproduct `T → T ⊗ T` and the counit `T → A`. Every identity involving
//! the coproduct is checked after projecting to `T ⊗_A T`, which is built as an
//! explicit quotient of `T ⊗ T`.

use std::fmt;
use std::str::FromStr;

use crate::actions::{check_left_module_algebra, enveloping_bimodule_algebra, hstar_module_algebra, LeftModuleAlgebra};
use crate::algebra::{
    apply_on_slot, check_algebra, is_involutive, iterated_coproduct, mul_in_tensor_square, opposite, tensor_algebra,
    HopfAlgebra, StructureAlgebra,
};
use crate::error::{Error, Result};
use crate::linalg::{build_quotient, matrix_inverse, Matrix, QuotientSpace, SparseVec, VecBuilder};
use crate::products::{
    check_algebra_iso, check_algebra_map, check_mutually_inverse, cm_odot, diagonal_crossed, iso_cm_to_diagonal,
    iso_diamond_to_odot, iso_odot_to_diamond, kadison_diamond,
};
use crate::report::CheckReport;
use crate::scalar::FieldSpec;

/// Largest total dimension for which `T ⊗_A T` is materialized.
pub const QUOTIENT_DIM_LIMIT: usize = 32;

/// How `A` acts on the two factors of `T ⊗ T` in the defining relations
/// `x ◁ a ⊗ y = x ⊗ a ▷ y`.
///
/// The first half names the action on the left factor (`x·t(a)` or `t(a)·x`),
/// the second the action on the right factor (`s(a)·y` or `y·s(a)`).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Convention {
    #[default]
    XtSy,
    TxSy,
    XtYs,
    TxYs,
}

impl Convention {
    /// The configured default followed by the fallbacks, in search order.
    pub const SEARCH_ORDER: [Convention; 4] = [Convention::XtSy, Convention::TxSy, Convention::XtYs, Convention::TxYs];

    pub fn describe(self) -> &'static str {
        match self {
            Convention::XtSy => "x·t(a) ⊗ y = x ⊗ s(a)·y",
            Convention::TxSy => "t(a)·x ⊗ y = x ⊗ s(a)·y",
            Convention::XtYs => "x·t(a) ⊗ y = x ⊗ y·s(a)",
            Convention::TxYs => "t(a)·x ⊗ y = x ⊗ y·s(a)",
        }
    }

    fn target_on_left(self) -> bool {
        matches!(self, Convention::TxSy | Convention::TxYs)
    }

    fn source_on_left(self) -> bool {
        matches!(self, Convention::XtSy | Convention::TxSy)
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::XtSy => "xt-sy",
            Convention::TxSy => "tx-sy",
            Convention::XtYs => "xt-ys",
            Convention::TxYs => "tx-ys",
        })
    }
}

impl FromStr for Convention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Convention::SEARCH_ORDER
            .into_iter()
            .find(|c| c.to_string() == s)
            .ok_or_else(|| Error::Parse(format!("unknown convention {s:?}; expected xt-sy, tx-sy, xt-ys or tx-ys")))
    }
}

/// `T ⊗_A T` as the quotient of `T ⊗ T` by `x ◁ a ⊗ y − x ⊗ a ▷ y` over basis `x, y, a`.
pub fn tensor_over_base(
    total: &StructureAlgebra,
    base: &StructureAlgebra,
    source: &Matrix,
    target: &Matrix,
    convention: Convention,
) -> QuotientSpace {
    let (n, na) = (total.dim(), base.dim());
    let mult = total.mult();
    let mut relations = Vec::with_capacity(n * n * na);
    for a in 0..na {
        let (s, t) = (source.column(a), target.column(a));
        let left_factor: Vec<SparseVec> = (0..n)
            .map(|x| if convention.target_on_left() { mult.right_basis(t, x) } else { mult.left_basis(x, t) })
            .collect();
        let right_factor: Vec<SparseVec> = (0..n)
            .map(|y| if convention.source_on_left() { mult.right_basis(s, y) } else { mult.left_basis(y, s) })
            .collect();
        for (x, lf) in left_factor.iter().enumerate() {
            let ex = total.basis(x);
            for (y, rf) in right_factor.iter().enumerate() {
                let lhs = lf.tensor(&total.basis(y));
                let rhs = ex.tensor(rf);
                let r = lhs.sub(&rhs);
                if !r.is_zero() {
                    relations.push(r);
                }
            }
        }
    }
    build_quotient(total.field(), n * n, relations)
}

#[derive(Clone, Debug)]
pub struct Bialgebroid {
    pub total: StructureAlgebra,
    pub base: StructureAlgebra,
    pub source: Matrix,
    pub target: Matrix,
    /// A representative of the coproduct in `T ⊗ T`.
    pub coproduct_lift: Matrix,
    pub counit: Matrix,
    pub convention: Convention,
    /// `None` when the total dimension exceeds the configured limit.
    pub tensor_over_base: Option<QuotientSpace>,
    pub quotient_dim_limit: usize,
}

impl Bialgebroid {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        total: StructureAlgebra,
        base: StructureAlgebra,
        source: Matrix,
        target: Matrix,
        coproduct_lift: Matrix,
        counit: Matrix,
        convention: Convention,
        quotient_dim_limit: usize,
    ) -> Result<Self> {
        let (n, na) = (total.dim(), base.dim());
        let shapes = [
            ("source", &source, n, na),
            ("target", &target, n, na),
            ("coproduct", &coproduct_lift, n * n, n),
            ("counit", &counit, na, n),
        ];
        for (what, m, rows, cols) in shapes {
            if m.nrows() != rows || m.ncols() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "{what} is {}×{}, expected {rows}×{cols}",
                    m.nrows(),
                    m.ncols()
                )));
            }
        }
        let mut b = Bialgebroid {
            total,
            base,
            source,
            target,
            coproduct_lift,
            counit,
            convention,
            tensor_over_base: None,
            quotient_dim_limit,
        };
        b.rebuild_quotient();
        Ok(b)
    }

    fn rebuild_quotient(&mut self) {
        self.tensor_over_base = (self.total.dim() <= self.quotient_dim_limit)
            .then(|| tensor_over_base(&self.total, &self.base, &self.source, &self.target, self.convention));
    }

    pub fn with_convention(&self, convention: Convention) -> Bialgebroid {
        let mut b = self.clone();
        b.convention = convention;
        b.rebuild_quotient();
        b
    }

    pub fn with_quotient_limit(&self, limit: usize) -> Bialgebroid {
        let mut b = self.clone();
        b.quotient_dim_limit = limit;
        b.rebuild_quotient();
        b
    }

    pub fn field(&self) -> FieldSpec {
        self.total.field()
    }

    fn skip_reason(&self) -> String {
        format!(
            "T⊗_A T not built: total dimension {} exceeds the quotient limit {}",
            self.total.dim(),
            self.quotient_dim_limit
        )
    }
}

/// `T ⊗_A T ⊗_A T` as a quotient of `(T ⊗_A T) ⊗ T`.
struct TripleQuotient<'a> {
    pair: &'a QuotientSpace,
    n: usize,
    space: QuotientSpace,
}

impl<'a> TripleQuotient<'a> {
    fn new(field: FieldSpec, pair: &'a QuotientSpace, n: usize) -> Self {
        let q = pair.quot_dim();
        let mut relations = Vec::new();
        for x in 0..n {
            for r in pair.relations() {
                // (P ⊗ id)(e_x ⊗ r)
                let mut out = VecBuilder::new(q * n);
                for (idx, c) in r.entries() {
                    let (y, z) = (idx / n, idx % n);
                    for (k, d) in pair.proj().column(x * n + y).entries() {
                        out.push(k * n + z, c * d);
                    }
                }
                let v = out.build();
                if !v.is_zero() {
                    relations.push(v);
                }
            }
        }
        TripleQuotient { pair, n, space: build_quotient(field, q * n, relations) }
    }

    /// Class of a vector of `T ⊗ T ⊗ T`.
    fn project(&self, v: &SparseVec) -> SparseVec {
        let n = self.n;
        let mut out = VecBuilder::new(self.pair.quot_dim() * n);
        for (idx, c) in v.entries() {
            let (xy, z) = (idx / n, idx % n);
            for (k, d) in self.pair.proj().column(xy).entries() {
                out.push(k * n + z, c * d);
            }
        }
        self.space.project(&out.build())
    }
}

/// Runs clauses L1–L8 on the stored data.
pub fn check_bialgebroid(b: &Bialgebroid) -> CheckReport {
    let mut report = CheckReport::new("bialgebroid").with_header(format!(
        "convention {}: {}",
        b.convention,
        b.convention.describe()
    ));
    let (t, a) = (&b.total, &b.base);
    let (n, na) = (t.dim(), a.dim());
    let (s_map, t_map) = (&b.source, &b.target);
    let eps = &b.counit;

    report.check("L1 source unital", |w| {
        if let Some(k) = s_map.apply(a.unit()).first_difference(t.unit()) {
            w.push([k]);
        }
    });
    report.check("L1 source multiplicative", |w| {
        for i in 0..na {
            for j in 0..na {
                let lhs = s_map.apply(a.mul_basis(i, j));
                if let Some(k) = lhs.first_difference(&t.mul(s_map.column(i), s_map.column(j))) {
                    w.push([i, j, k]);
                }
            }
        }
    });
    report.check("L1 target unital", |w| {
        if let Some(k) = t_map.apply(a.unit()).first_difference(t.unit()) {
            w.push([k]);
        }
    });
    report.check("L1 target anti-multiplicative", |w| {
        for i in 0..na {
            for j in 0..na {
                let lhs = t_map.apply(a.mul_basis(i, j));
                if let Some(k) = lhs.first_difference(&t.mul(t_map.column(j), t_map.column(i))) {
                    w.push([i, j, k]);
                }
            }
        }
    });
    report.check("L1 source and target commute", |w| {
        for i in 0..na {
            for j in 0..na {
                let st = t.mul(s_map.column(i), t_map.column(j));
                let ts = t.mul(t_map.column(j), s_map.column(i));
                if let Some(k) = st.first_difference(&ts) {
                    w.push([i, j, k]);
                }
            }
        }
    });

    match &b.tensor_over_base {
        Some(q) => quotient_clauses(&mut report, b, q),
        None => {
            let reason = b.skip_reason();
            for clause in [
                "L2 coproduct descends",
                "L2 coassociativity",
                "L3 Δ(1) = 1⊗1",
                "L4 Takeuchi condition",
                "L5 Δ multiplicative",
            ] {
                report.skip(clause, reason.clone());
            }
        }
    }

    report.check("L6 ε(1) = 1", |w| {
        if let Some(k) = eps.apply(t.unit()).first_difference(a.unit()) {
            w.push([k]);
        }
    });

    match &b.tensor_over_base {
        Some(q) => counit_law_clauses(&mut report, b, q),
        None => {
            let reason = b.skip_reason();
            for clause in ["L7 s(ε(x1))x2 = x", "L7 t(ε(x2))x1 = x", "L7 lift independence"] {
                report.skip(clause, reason.clone());
            }
        }
    }

    // ε(x·s(ε(y))) and ε(x·t(ε(y))) against ε(xy)
    let s_eps: Vec<SparseVec> = (0..n).map(|y| s_map.apply(eps.column(y))).collect();
    let t_eps: Vec<SparseVec> = (0..n).map(|y| t_map.apply(eps.column(y))).collect();
    for (clause, twisted) in [("L8 ε(x s(ε(y))) = ε(xy)", &s_eps), ("L8 ε(x t(ε(y))) = ε(xy)", &t_eps)] {
        report.check(clause, |w| {
            for x in 0..n {
                for (y, ty) in twisted.iter().enumerate() {
                    let lhs = eps.apply(&t.mult().left_basis(x, ty));
                    let rhs = eps.apply(t.mul_basis(x, y));
                    if let Some(k) = lhs.first_difference(&rhs) {
                        w.push([x, y, k]);
                    }
                }
            }
        });
    }
    report
}

fn quotient_clauses(report: &mut CheckReport, b: &Bialgebroid, q: &QuotientSpace) {
    let (t, a) = (&b.total, &b.base);
    let (n, na) = (t.dim(), a.dim());
    let delta = &b.coproduct_lift;
    let triple = TripleQuotient::new(b.field(), q, n);

    report.check("L2 coproduct descends", |w| {
        for (r_idx, r) in q.relations().iter().enumerate() {
            for slot in 0..2 {
                if !triple.project(&apply_on_slot(r, n, 2, slot, delta)).is_zero() {
                    w.push([r_idx, slot]);
                }
            }
        }
    });
    report.check("L2 coassociativity", |w| {
        for x in 0..n {
            let dx = delta.column(x);
            let left = triple.project(&apply_on_slot(dx, n, 2, 0, delta));
            let right = triple.project(&apply_on_slot(dx, n, 2, 1, delta));
            if let Some(k) = left.first_difference(&right) {
                w.push([x, k]);
            }
        }
    });
    report.check("L3 Δ(1) = 1⊗1", |w| {
        let lhs = q.project(&delta.apply(t.unit()));
        let rhs = q.project(&t.unit().tensor(t.unit()));
        if let Some(k) = lhs.first_difference(&rhs) {
            w.push([k]);
        }
    });
    report.check("L4 Takeuchi condition", |w| {
        for x in 0..n {
            let dx = delta.column(x);
            for al in 0..na {
                let (s, tt) = (b.source.column(al), b.target.column(al));
                let mut diff = VecBuilder::new(n * n);
                for (idx, c) in dx.entries() {
                    let (x1, x2) = (idx / n, idx % n);
                    diff.add_tensor(c, &t.mult().left_basis(x1, tt), &t.basis(x2));
                    diff.add_tensor(&-c, &t.basis(x1), &t.mult().left_basis(x2, s));
                }
                if let Some(k) = q.project(&diff.build()).entries().first().map(|e| e.0) {
                    w.push([x, al, k]);
                }
            }
        }
    });
    report.check("L5 Δ multiplicative", |w| {
        for x in 0..n {
            for y in 0..n {
                let lhs = q.project(&delta.apply(t.mul_basis(x, y)));
                let rhs = q.project(&mul_in_tensor_square(t, delta.column(x), delta.column(y)));
                if let Some(k) = lhs.first_difference(&rhs) {
                    w.push([x, y, k]);
                }
            }
        }
    });
}

fn counit_law_clauses(report: &mut CheckReport, b: &Bialgebroid, q: &QuotientSpace) {
    let t = &b.total;
    let n = t.dim();
    let eps = &b.counit;
    // u⊗v ↦ s(ε(u))·v and u⊗v ↦ t(ε(v))·u as maps T⊗T → T
    let s_eps: Vec<SparseVec> = (0..n).map(|u| b.source.apply(eps.column(u))).collect();
    let t_eps: Vec<SparseVec> = (0..n).map(|v| b.target.apply(eps.column(v))).collect();
    let left_eval = Matrix::from_fn(n, n * n, |p| t.mult().right_basis(&s_eps[p / n], p % n));
    let right_eval = Matrix::from_fn(n, n * n, |p| t.mult().right_basis(&t_eps[p % n], p / n));
    for (clause, eval) in [("L7 s(ε(x1))x2 = x", &left_eval), ("L7 t(ε(x2))x1 = x", &right_eval)] {
        report.check(clause, |w| {
            for x in 0..n {
                if let Some(k) = eval.apply(b.coproduct_lift.column(x)).first_difference(&t.basis(x)) {
                    w.push([x, k]);
                }
            }
        });
    }
    report.check("L7 lift independence", |w| {
        for (r_idx, r) in q.relations().iter().enumerate() {
            for (side, eval) in [&left_eval, &right_eval].into_iter().enumerate() {
                if !eval.apply(r).is_zero() {
                    w.push([r_idx, side]);
                }
            }
        }
    });
}

/// Tries `preferred` and then the remaining conventions in search order, keeping the first
/// under which the checker passes. Returns the chosen bialgebroid, its report, and the
/// outcome per tried convention.
pub fn select_convention(
    b: &Bialgebroid,
    preferred: Convention,
) -> (Bialgebroid, CheckReport, Vec<(Convention, bool)>) {
    let mut order = vec![preferred];
    order.extend(Convention::SEARCH_ORDER.into_iter().filter(|c| *c != preferred));
    let mut tried = Vec::new();
    let mut first: Option<(Bialgebroid, CheckReport)> = None;
    for c in order {
        let candidate = b.with_convention(c);
        let report = check_bialgebroid(&candidate);
        let ok = report.passed();
        tried.push((c, ok));
        if ok {
            return (candidate, report, tried);
        }
        first.get_or_insert((candidate, report));
    }
    let (b, r) = first.expect("at least one convention tried");
    (b, r, tried)
}

fn describe_search(tried: &[(Convention, bool)]) -> String {
    let parts: Vec<String> =
        tried.iter().map(|(c, ok)| format!("{c} {}", if *ok { "validates" } else { "fails" })).collect();
    format!("convention search: {}", parts.join(", "))
}

/// Builds with the preferred convention, falling back across variants until the
/// checker passes. The report header records the search.
pub fn validated(b: Bialgebroid, preferred: Convention) -> (Bialgebroid, CheckReport) {
    let (chosen, report, tried) = select_convention(&b, preferred);
    let header = format!("{}\n{}", report.header.clone().unwrap_or_default(), describe_search(&tried));
    (chosen, report.with_header(header))
}

/// `(A ⊗ A^{op}) ⋄ H` over `A` with `s(a) = (a⊗1)⊗1`, `t(a) = (1⊗a)⊗1`,
/// `Δ((a⊗b)⊗h) = ((a⊗1)⊗h₁) ⊗_A ((1⊗b)⊗h₂)` and `ε((a⊗b)⊗h) = a(h·b)`.
pub fn kadison_bialgebroid(m: &LeftModuleAlgebra, convention: Convention, limit: usize) -> Bialgebroid {
    let (h, alg) = (m.hopf(), m.alg());
    let (nh, na) = (h.dim(), alg.dim());
    let f = m.field();
    let n = na * na * nh;
    let total = kadison_diamond(m).underlying;
    let (one_a, one_h) = (alg.unit(), h.algebra().unit());
    let ea = |i| SparseVec::basis(f, na, i);
    let source = Matrix::from_fn(n, na, |i| ea(i).tensor(one_a).tensor(one_h));
    let target = Matrix::from_fn(n, na, |i| one_a.tensor(&ea(i)).tensor(one_h));
    let coproduct = Matrix::from_fn(n * n, n, |p| {
        let (a, b, x) = (p / (na * nh), (p / nh) % na, p % nh);
        let mut out = VecBuilder::new(n * n);
        for (idx, c) in h.delta(x).entries() {
            let (x1, x2) = (idx / nh, idx % nh);
            let left = ea(a).tensor(one_a).tensor(&SparseVec::basis(f, nh, x1));
            let right = one_a.tensor(&ea(b)).tensor(&SparseVec::basis(f, nh, x2));
            out.add_tensor(c, &left, &right);
        }
        out.build()
    });
    let counit = Matrix::from_fn(na, n, |p| {
        let (a, b, x) = (p / (na * nh), (p / nh) % na, p % nh);
        alg.mult().left_basis(a, m.act_basis(x, b))
    });
    Bialgebroid::new(total, alg.clone(), source, target, coproduct, counit, convention, limit)
        .expect("shapes agree by construction")
}

/// `A ⊙ H ⊙ A` over `A` with `s(a) = a⊗1⊗1`, `t(a) = 1⊗1⊗a`,
/// `Δ(a⊗h⊗b) = (a⊗h₁⊗1) ⊗_A (1⊗h₂⊗b)` and `ε(a⊗h⊗b) = a ε(h) b`.
pub fn cm_bialgebroid(m: &LeftModuleAlgebra, convention: Convention, limit: usize) -> Bialgebroid {
    let (h, alg) = (m.hopf(), m.alg());
    let (nh, na) = (h.dim(), alg.dim());
    let f = m.field();
    let n = na * nh * na;
    let total = cm_odot(m).underlying;
    let (one_a, one_h) = (alg.unit(), h.algebra().unit());
    let ea = |i| SparseVec::basis(f, na, i);
    let source = Matrix::from_fn(n, na, |i| ea(i).tensor(one_h).tensor(one_a));
    let target = Matrix::from_fn(n, na, |i| one_a.tensor(one_h).tensor(&ea(i)));
    let coproduct = Matrix::from_fn(n * n, n, |p| {
        let (a, x, b) = (p / (nh * na), (p / na) % nh, p % na);
        let mut out = VecBuilder::new(n * n);
        for (idx, c) in h.delta(x).entries() {
            let (x1, x2) = (idx / nh, idx % nh);
            let left = ea(a).tensor(&SparseVec::basis(f, nh, x1)).tensor(one_a);
            let right = one_a.tensor(&SparseVec::basis(f, nh, x2)).tensor(&ea(b));
            out.add_tensor(c, &left, &right);
        }
        out.build()
    });
    let eps_h = h.coalgebra().counit();
    let counit = Matrix::from_fn(na, n, |p| {
        let (a, x, b) = (p / (nh * na), (p / na) % nh, p % na);
        match eps_h.get(x) {
            Some(e) => alg.mul_basis(a, b).scaled(e),
            None => SparseVec::zero(na),
        }
    });
    Bialgebroid::new(total, alg.clone(), source, target, coproduct, counit, convention, limit)
        .expect("shapes agree by construction")
}

/// `A ⊗ A^{op}` over `A` with `s(a) = a⊗1`, `t(a) = 1⊗a`,
/// `Δ(a⊗b) = (a⊗1) ⊗_A (1⊗b)` and `ε(a⊗b) = ab`.
pub fn lu_enveloping_bialgebroid(a: &StructureAlgebra, convention: Convention, limit: usize) -> Bialgebroid {
    let na = a.dim();
    let f = a.field();
    let n = na * na;
    let total = tensor_algebra(a, &opposite(a)).expect("same field");
    let one = a.unit();
    let ea = |i| SparseVec::basis(f, na, i);
    let source = Matrix::from_fn(n, na, |i| ea(i).tensor(one));
    let target = Matrix::from_fn(n, na, |i| one.tensor(&ea(i)));
    let coproduct = Matrix::from_fn(n * n, n, |p| ea(p / na).tensor(one).tensor(&one.tensor(&ea(p % na))));
    let counit = Matrix::from_fn(na, n, |p| a.mul_basis(p / na, p % na).clone());
    Bialgebroid::new(total, a.clone(), source, target, coproduct, counit, convention, limit)
        .expect("shapes agree by construction")
}

/// A Hopf algebra as a bialgebroid over the ground field: `s = t = unit map`.
pub fn hopf_as_bialgebroid(h: &HopfAlgebra) -> Bialgebroid {
    let n = h.dim();
    let unit_map = Matrix::from_columns(n, vec![h.algebra().unit().clone()]);
    Bialgebroid::new(
        h.algebra().clone(),
        StructureAlgebra::ground(h.field()),
        unit_map.clone(),
        unit_map,
        h.coalgebra().comult().clone(),
        h.coalgebra().counit_matrix(),
        Convention::default(),
        usize::MAX,
    )
    .expect("shapes agree by construction")
}

/// `c ↦ c·1_A`.
pub fn scalar_inclusion(a: &StructureAlgebra) -> Matrix {
    Matrix::from_columns(a.dim(), vec![a.unit().clone()])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BialgebroidMorphism {
    pub total_map: Matrix,
    pub base_map: Matrix,
}

fn tensor_square_apply(f: &Matrix, v: &SparseVec, n: usize) -> SparseVec {
    let m = f.nrows();
    let mut out = VecBuilder::new(m * m);
    for (idx, c) in v.entries() {
        out.add_tensor(c, f.column(idx / n), f.column(idx % n));
    }
    out.build()
}

/// Clauses M0–M6: algebra maps on base and total, compatibility with source,
/// target and counit, descent of `f ⊗ f` to the quotients, and compatibility
/// with the projected coproducts.
pub fn check_bialgebroid_morphism(f: &BialgebroidMorphism, src: &Bialgebroid, dst: &Bialgebroid) -> CheckReport {
    let mut report = CheckReport::new("bialgebroid morphism");
    let (n, m) = (src.total.dim(), dst.total.dim());
    let shapes_ok = f.total_map.ncols() == n
        && f.total_map.nrows() == m
        && f.base_map.ncols() == src.base.dim()
        && f.base_map.nrows() == dst.base.dim();
    if !shapes_ok {
        report.pass_or_fail("shape", false, Some("map shapes do not match the bialgebroids".into()));
        return report;
    }
    let (tm, bm) = (&f.total_map, &f.base_map);
    report.absorb("M0 base", check_algebra_map(bm, &src.base, &dst.base));
    report.absorb("M1 total", check_algebra_map(tm, &src.total, &dst.total));
    for (clause, s_src, s_dst) in
        [("M2 f∘s = s'∘φ", &src.source, &dst.source), ("M3 f∘t = t'∘φ", &src.target, &dst.target)]
    {
        report.check(clause, |w| {
            if let Some((i, j)) = tm.compose(s_src).first_difference(&s_dst.compose(bm)) {
                w.push([i, j]);
            }
        });
    }
    match (&src.tensor_over_base, &dst.tensor_over_base) {
        (Some(qs), Some(qd)) => {
            report.check("M4 f⊗f descends", |w| {
                for (r_idx, r) in qs.relations().iter().enumerate() {
                    if !qd.kills(&tensor_square_apply(tm, r, n)) {
                        w.push([r_idx]);
                    }
                }
            });
            report.check("M5 coproducts intertwine", |w| {
                for x in 0..n {
                    let lhs = qd.project(&tensor_square_apply(tm, src.coproduct_lift.column(x), n));
                    let rhs = qd.project(&dst.coproduct_lift.apply(tm.column(x)));
                    if let Some(k) = lhs.first_difference(&rhs) {
                        w.push([x, k]);
                    }
                }
            });
        }
        _ => {
            let reason = if src.tensor_over_base.is_none() { src.skip_reason() } else { dst.skip_reason() };
            report.skip("M4 f⊗f descends", reason.clone());
            report.skip("M5 coproducts intertwine", reason);
        }
    }
    report.check("M6 φ∘ε = ε'∘f", |w| {
        if let Some((i, j)) = bm.compose(&src.counit).first_difference(&dst.counit.compose(tm)) {
            w.push([i, j]);
        }
    });
    report
}

/// `S_⋄((a⊗b)⊗h) = (b⊗a)⊗S(h)`; defined for involutive `S`.
pub fn antipode_kadison(m: &LeftModuleAlgebra) -> Result<Matrix> {
    let h = m.hopf();
    if !is_involutive(h) {
        return Err(Error::InvolutivityRequired);
    }
    let (nh, na) = (h.dim(), m.alg().dim());
    let f = m.field();
    let n = na * na * nh;
    Ok(Matrix::from_fn(n, n, |p| {
        let (a, b, x) = (p / (na * nh), (p / nh) % na, p % nh);
        SparseVec::basis(f, na, b).tensor(&SparseVec::basis(f, na, a)).tensor(h.antipode().column(x))
    }))
}

/// `S_⊙(a⊗h⊗b) = S(h₃)·b ⊗ S(h₂) ⊗ S(h₁)·a`; defined for involutive `S`.
pub fn antipode_cm(m: &LeftModuleAlgebra) -> Result<Matrix> {
    let h = m.hopf();
    if !is_involutive(h) {
        return Err(Error::InvolutivityRequired);
    }
    let (nh, na) = (h.dim(), m.alg().dim());
    let n = na * nh * na;
    let s = h.antipode();
    let delta3 = iterated_coproduct(h, 3);
    Ok(Matrix::from_fn(n, n, |p| {
        let (a, x, b) = (p / (nh * na), (p / na) % nh, p % na);
        let mut out = VecBuilder::new(n);
        for (idx, c) in delta3.column(x).entries() {
            let (x1, x2, x3) = (idx / (nh * nh), (idx / nh) % nh, idx % nh);
            let first = m.act().right_basis(s.column(x3), b);
            let third = m.act().right_basis(s.column(x1), a);
            out.add_tensor3(c, &first, s.column(x2), &third);
        }
        out.build()
    }))
}

/// Anti-multiplicativity, unitality, `S∘t = s`, `S∘s = t`, invertibility and
/// `S² = id`; anti-comultiplicativity is reported as advisory.
pub fn check_antipode_properties(b: &Bialgebroid, s_map: &Matrix) -> CheckReport {
    let mut report = CheckReport::new("antipode");
    let t = &b.total;
    let n = t.dim();
    if s_map.nrows() != n || s_map.ncols() != n {
        report.pass_or_fail("shape", false, Some(format!("antipode must be {n}×{n}")));
        return report;
    }
    report.check("S(1) = 1", |w| {
        if let Some(k) = s_map.apply(t.unit()).first_difference(t.unit()) {
            w.push([k]);
        }
    });
    report.check("S(xy) = S(y)S(x)", |w| {
        for x in 0..n {
            for y in 0..n {
                let lhs = s_map.apply(t.mul_basis(x, y));
                if let Some(k) = lhs.first_difference(&t.mul(s_map.column(y), s_map.column(x))) {
                    w.push([x, y, k]);
                }
            }
        }
    });
    report.check("S∘t = s", |w| {
        if let Some((i, j)) = s_map.compose(&b.target).first_difference(&b.source) {
            w.push([i, j]);
        }
    });
    report.check("S∘s = t", |w| {
        if let Some((i, j)) = s_map.compose(&b.source).first_difference(&b.target) {
            w.push([i, j]);
        }
    });
    let invertible = matrix_inverse(b.field(), s_map).is_ok();
    report.pass_or_fail("S invertible", invertible, None);
    report.check("S² = id", |w| {
        if let Some((i, j)) = s_map.compose(s_map).first_difference(&Matrix::identity(b.field(), n)) {
            w.push([i, j]);
        }
    });
    match &b.tensor_over_base {
        Some(q) => report.advise("Δ(S(x)) = S(x2) ⊗ S(x1)", |w| {
            w.note("computed for information; not part of the checked contract");
            for x in 0..n {
                let lhs = q.project(&b.coproduct_lift.apply(s_map.column(x)));
                let mut flipped = VecBuilder::new(n * n);
                for (idx, c) in b.coproduct_lift.column(x).entries() {
                    flipped.add_tensor(c, s_map.column(idx % n), s_map.column(idx / n));
                }
                if let Some(k) = lhs.first_difference(&q.project(&flipped.build())) {
                    w.push([x, k]);
                }
            }
        }),
        None => report.skip("Δ(S(x)) = S(x2) ⊗ S(x1)", b.skip_reason()),
    }
    report
}

/// Builds both bialgebroids, then checks the `⋄ → ⊙` map and its inverse as
/// bialgebroid morphisms with identity base map, plus mutual inverseness.
pub fn verify_bialgebroid_isomorphism(m: &LeftModuleAlgebra, preferred: Convention) -> CheckReport {
    let mut report = CheckReport::new("diamond and odot bialgebroids are isomorphic");
    let (kad, kad_report) = validated(kadison_bialgebroid(m, preferred, QUOTIENT_DIM_LIMIT), preferred);
    let (cm, cm_report) = validated(cm_bialgebroid(m, preferred, QUOTIENT_DIM_LIMIT), preferred);
    report.header = Some(format!(
        "diamond: {}\nodot: {}",
        kad_report.header.clone().unwrap_or_default().replace('\n', "; "),
        cm_report.header.clone().unwrap_or_default().replace('\n', "; ")
    ));
    report.absorb("diamond", kad_report);
    report.absorb("odot", cm_report);
    let id = Matrix::identity(m.field(), m.alg().dim());
    let forward = BialgebroidMorphism { total_map: iso_diamond_to_odot(m), base_map: id.clone() };
    let backward = BialgebroidMorphism { total_map: iso_odot_to_diamond(m), base_map: id };
    report.absorb("forward", check_bialgebroid_morphism(&forward, &kad, &cm));
    report.absorb("backward", check_bialgebroid_morphism(&backward, &cm, &kad));
    check_mutually_inverse(&mut report, "total maps", m.field(), &forward.total_map, &backward.total_map);
    if !is_involutive(m.hopf()) {
        report.skip("antipodes", "S is not involutive; antipode checks do not apply");
    }
    report
}

/// `Φ ∘ S_⋄ = S_⊙ ∘ Φ`.
pub fn verify_strict_intertwining(m: &LeftModuleAlgebra) -> CheckReport {
    let mut report = CheckReport::new("strict intertwining");
    match (antipode_kadison(m), antipode_cm(m)) {
        (Ok(sk), Ok(sc)) => {
            let phi = iso_diamond_to_odot(m);
            report.check("Φ∘S_⋄ = S_⊙∘Φ", |w| {
                if let Some((i, j)) = phi.compose(&sk).first_difference(&sc.compose(&phi)) {
                    w.push([i, j]);
                }
            });
        }
        _ => report.skip("Φ∘S_⋄ = S_⊙∘Φ", Error::InvolutivityRequired.to_string()),
    }
    report
}

/// The odot bialgebroid over `H*` built from `H*` as an `H ⊗ H^{op}`-module algebra,
/// together with the algebra `Z = (H* ⊗ H*^{op}) ⋈ (H ⊗ H^{op})` and the
/// permutation isomorphism between them.
pub fn cibils_rosso_bialgebroid(h: &HopfAlgebra, preferred: Convention, limit: usize) -> (Bialgebroid, CheckReport) {
    let mut report = CheckReport::new("bialgebroid over the dual");
    let m = hstar_module_algebra(h);
    report.absorb("H* module algebra", check_left_module_algebra(&m));
    let z = diagonal_crossed(&enveloping_bimodule_algebra(&m)).underlying;
    let n = h.dim();
    report.pass_or_fail("dim Z = dim(H)^4", z.dim() == n.pow(4), Some(format!("dim Z = {}, dim H = {n}", z.dim())));
    report.absorb("Z", check_algebra(&z));
    let raw = cm_bialgebroid(&m, preferred, limit);
    report.absorb("odot algebra", check_algebra(&raw.total));
    report.absorb("odot → Z", check_algebra_iso(&iso_cm_to_diagonal(&m), &raw.total, &z));
    let (b, b_report) = if raw.tensor_over_base.is_some() {
        validated(raw, preferred)
    } else {
        let r = check_bialgebroid(&raw);
        (raw, r)
    };
    report.header = b_report.header.clone();
    report.absorb("bialgebroid", b_report);
    (b, report)
}
