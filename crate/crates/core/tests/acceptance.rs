//! Acceptance criteria. Runs as a plain binary so every criterion prints one
//! line under `cargo test`; exits non-zero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use algebroid::actions::{check_left_module_algebra, enveloping_bimodule_algebra, LeftModuleAlgebra};
use algebroid::algebra::{check_hopf, dual_hopf, is_involutive, with_raw_antipode, HopfAlgebra};
use algebroid::bialgebroid::{check_bialgebroid, kadison_bialgebroid, verify_bialgebroid_isomorphism, Convention};
use algebroid::catalog::{self, Group};
use algebroid::linalg::SparseVec;
use algebroid::products::{check_algebra_map, diagonal_crossed, iso_nu, kadison_diamond, lr_smash};
use algebroid::universal::{generation_rank, verify_omega_morphism, verify_universal_property};
use algebroid::verify::{self, Settings};
use algebroid::{CheckReport, FieldSpec, Status};

const Q: FieldSpec = FieldSpec::Rationals;
const F7: FieldSpec = FieldSpec::Prime(7);

type FieldRun = fn(FieldSpec, &mut Outcome) -> Vec<CheckReport>;
type Criterion = (&'static str, Box<dyn Fn() -> Outcome>);

/// Outcome of one criterion: failures found, plus the wall-clock bound it must meet.
struct Outcome {
    problems: Vec<String>,
    bound: Duration,
}

impl Outcome {
    fn new(bound_secs: u64) -> Self {
        Outcome { problems: Vec::new(), bound: Duration::from_secs(bound_secs) }
    }

    fn require(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.problems.push(what.into());
        }
    }

    fn report(&mut self, label: &str, r: &CheckReport) {
        for c in r.failures() {
            self.problems.push(format!("{label}: {} failed", c.clause));
        }
    }

    /// Runs `f`, failing the criterion if a single run exceeds `per_run` seconds.
    fn timed<T>(&mut self, label: &str, per_run: u64, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        let elapsed = start.elapsed();
        self.require(
            elapsed <= Duration::from_secs(per_run),
            format!("{label} took {:.2} s (bound {per_run} s)", elapsed.as_secs_f64()),
        );
        out
    }
}

fn c2(field: FieldSpec) -> LeftModuleAlgebra {
    catalog::function_algebra_with_translation(field, &Group::cyclic(2))
}

fn h4(field: FieldSpec) -> LeftModuleAlgebra {
    catalog::sweedler_module_algebra(field)
}

fn s3_sign(field: FieldSpec) -> LeftModuleAlgebra {
    catalog::instance("s3-sign", field).expect("catalog entry").0
}

fn pairs(field: FieldSpec) -> [(&'static str, LeftModuleAlgebra); 2] {
    [("c2", c2(field)), ("h4", h4(field))]
}

fn hopf_suite() -> Outcome {
    let mut o = Outcome::new(6);
    for field in [Q, F7] {
        let kc2 = catalog::group_algebra(field, &Group::cyclic(2));
        let ks3 = catalog::group_algebra(field, &Group::symmetric3());
        let h4 = catalog::sweedler_h4(field);
        let cases: [(&str, HopfAlgebra, bool); 6] = [
            ("kC2", kc2.clone(), true),
            ("kS3", ks3.clone(), true),
            ("H4", h4.clone(), false),
            ("kC2*", dual_hopf(&kc2), true),
            ("kS3*", dual_hopf(&ks3), true),
            ("H4*", dual_hopf(&h4), false),
        ];
        for (name, h, involutive) in cases {
            let label = format!("{name} over {field}");
            let r = o.timed(&label, 1, || check_hopf(&h));
            o.report(&label, &r);
            o.require(is_involutive(&h) == involutive, format!("{label}: involutivity should be {involutive}"));
        }
        // S²(x) = S(-gx) = -S(x)S(g) = gxg = -x, computed by hand
        let s2x = h4.antipode().apply(h4.antipode().column(2));
        o.require(s2x == SparseVec::from_terms(4, vec![(2, field.from_i64(-1))]), "H4: S²(x) should be -x");
    }
    o
}

fn nu_isomorphism(field: FieldSpec, o: &mut Outcome) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for (name, m) in pairs(field) {
        let b = enveloping_bimodule_algebra(&m);
        let r = o.timed(name, 5, || verify::nu_isomorphism(&b));
        o.report(name, &r);
        out.push(r);
    }
    // grouplike oracle on A^e for A = k^C2: ν(a⊗b ⋈ g) = a ⊗ S(g)·b ♮ g, and g swaps δ1 and δg
    let b = enveloping_bimodule_algebra(&c2(field));
    let nu = iso_nu(&b);
    for phi in 0..4 {
        let (a, c) = (phi / 2, phi % 2);
        let expected = SparseVec::basis(field, 8, (a * 2 + (1 - c)) * 2 + 1);
        o.require(nu.column(phi * 2 + 1) == &expected, format!("ν on basis {phi} ⋈ g"));
    }
    out
}

fn diamond_is_smash(field: FieldSpec, o: &mut Outcome) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for ((name, m), dim) in pairs(field).into_iter().zip([8, 16]) {
        let r = o.timed(name, 5, || verify::diamond_is_smash(&m));
        o.report(name, &r);
        o.require(kadison_diamond(&m).dim() == dim, format!("{name}: diamond should have dimension {dim}"));
        let smash = lr_smash(&enveloping_bimodule_algebra(&m)).underlying;
        o.require(
            smash.mult() == kadison_diamond(&m).underlying.mult(),
            format!("{name}: all {dim}³ structure constants should agree"),
        );
        out.push(r);
    }
    out
}

fn isomorphisms(field: FieldSpec, o: &mut Outcome) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for (name, m) in pairs(field) {
        let r = o.timed(name, 5, || {
            let mut r = verify::odot_is_diagonal(&m);
            r.absorb("", verify::diamond_odot_isomorphisms(&m));
            r
        });
        o.report(name, &r);
        for clause in ["P/invertible", "P⁻¹/invertible", "Φ/invertible", "Ψ/invertible", "Φ = P⁻¹∘ν⁻¹"] {
            o.require(r.status_of(clause) == Some(Status::Pass), format!("{name}: {clause} should pass"));
        }
        out.push(r);
    }
    out
}

fn bialgebroid_iso(field: FieldSpec, o: &mut Outcome) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for (name, m) in pairs(field) {
        let r = o.timed(name, 30, || verify_bialgebroid_isomorphism(&m, Convention::default()));
        o.report(name, &r);
        for clause in ["forward/M5 coproducts intertwine", "backward/M5 coproducts intertwine"] {
            o.require(r.status_of(clause) == Some(Status::Pass), format!("{name}: {clause} should run and pass"));
        }
        out.push(r);
    }
    out
}

fn single_field(run: FieldRun, bound: u64) -> impl Fn() -> Outcome {
    move || {
        let mut o = Outcome::new(bound);
        run(Q, &mut o);
        o
    }
}

fn antipodes() -> Outcome {
    let mut o = Outcome::new(70);
    for (name, m, bound) in [("c2", c2(Q), 5), ("s3-sign", s3_sign(Q), 60)] {
        let total = m.alg().dim() * m.alg().dim() * m.hopf().dim();
        let r = o.timed(name, bound, || verify::antipodes(&m, Settings::default()));
        o.report(name, &r);
        for clause in ["S_⋄/S² = id", "S_⊙/S² = id", "Φ∘S_⋄ = S_⊙∘Φ", "S_⋄/S(xy) = S(y)S(x)", "S_⊙/S∘t = s"]
        {
            o.require(r.status_of(clause) == Some(Status::Pass), format!("{name} (total dim {total}): {clause}"));
        }
    }
    o.require(s3_sign(Q).alg().dim().pow(2) * 6 == 24, "s3-sign total dimension should be 24");
    let r = verify::antipodes(&h4(Q), Settings::default());
    o.require(r.passed() && r.status_of("antipodes") == Some(Status::Skipped), "H4 should be SKIPPED");
    o
}

fn cibils_rosso() -> Outcome {
    let mut o = Outcome::new(310);
    let kc2 = catalog::group_algebra(Q, &Group::cyclic(2));
    let r = o.timed("kC2", 10, || verify::cibils_rosso(&kc2, Settings::default()));
    o.report("kC2", &r);
    o.require(
        r.clause("dim Z = dim(H)^4").is_some_and(|c| c.note.as_deref() == Some("dim Z = 16, dim H = 2")),
        "kC2: dim Z = 16",
    );
    o.require(r.outcomes().iter().all(|(_, s)| *s == Status::Pass), "kC2: every clause, L1 to L8, should run and pass");
    for clause in
        ["bialgebroid/L2 coassociativity", "bialgebroid/L4 Takeuchi condition", "bialgebroid/L7 lift independence"]
    {
        o.require(r.status_of(clause) == Some(Status::Pass), format!("kC2: {clause}"));
    }

    let h = catalog::sweedler_h4(Q);
    let r = o.timed("H4", 300, || verify::cibils_rosso(&h, Settings::default()));
    o.report("H4", &r);
    for clause in [
        "Z/associativity",
        "odot algebra/associativity",
        "odot → Z/f(xy) = f(x)f(y)",
        "odot → Z/invertible",
        "dim Z = dim(H)^4",
    ] {
        o.require(r.status_of(clause) == Some(Status::Pass), format!("H4: {clause}"));
    }
    let skipped: Vec<_> = r.clauses.iter().filter(|c| c.status == Status::Skipped).collect();
    o.require(!skipped.is_empty(), "H4: quotient clauses should be reported as SKIPPED");
    o.require(
        skipped.iter().all(|c| c.note.as_deref().is_some_and(|n| n.contains("exceeds the quotient limit 32"))),
        "H4: every skipped clause should name the dimension limit",
    );
    o
}

fn universal() -> Outcome {
    let mut o = Outcome::new(60);
    for (name, m) in pairs(Q) {
        let (na, nh) = (m.alg().dim(), m.hopf().dim());
        o.require(generation_rank(&m) == (na * na * nh, na * na * nh), format!("{name}: generation rank"));
        let r = o.timed(name, 30, || {
            let mut r = verify_universal_property(&m);
            r.absorb("", verify_omega_morphism(&m, Convention::default()));
            r
        });
        o.report(name, &r);
        for clause in
            ["odot/ω∘i = u", "odot/ω∘j = v", "odot/ω equals the explicit ⋄ → ⊙ map", "ω/M5 coproducts intertwine"]
        {
            o.require(r.status_of(clause) == Some(Status::Pass), format!("{name}: {clause}"));
        }
    }
    o
}

fn field_independence() -> Outcome {
    let mut o = Outcome::new(120);
    let runs: [(&str, FieldRun); 4] = [
        ("ν", nu_isomorphism),
        ("diamond = smash", diamond_is_smash),
        ("isomorphisms", isomorphisms),
        ("bialgebroid isomorphism", bialgebroid_iso),
    ];
    for (label, run) in runs {
        let mut scratch = Outcome::new(0);
        let q: Vec<_> = run(Q, &mut scratch).iter().map(CheckReport::outcomes).collect();
        let f7: Vec<_> = run(F7, &mut scratch).iter().map(CheckReport::outcomes).collect();
        o.require(!q.is_empty() && q == f7, format!("{label}: outcomes differ between q and fp:7"));
    }
    o
}

fn expect_witnessed_failure(o: &mut Outcome, label: &str, r: &CheckReport) {
    o.require(!r.passed(), format!("{label}: corruption should fail"));
    o.require(r.failures().any(|c| !c.witnesses.is_empty()), format!("{label}: a witness tuple should be reported"));
}

fn negative_controls() -> Outcome {
    let mut o = Outcome::new(10);
    let h = catalog::sweedler_h4(Q);
    // S(x) = gx instead of -gx
    let mut s = h.antipode().clone();
    s.set_column(2, SparseVec::basis(Q, 4, 3));
    expect_witnessed_failure(&mut o, "bad antipode", &check_hopf(&with_raw_antipode(&h, s)));

    let m = c2(Q);
    let mut b = kadison_bialgebroid(&m, Convention::TxSy, 32);
    b.target = b.source.clone();
    expect_witnessed_failure(&mut o, "swapped target", &check_bialgebroid(&b.with_convention(Convention::TxSy)));

    // g·δ1 = δ1 instead of δg
    let mut act = m.act().clone();
    act.set_slice(1, 0, SparseVec::basis(Q, 2, 0));
    let bad = m.with_action(act).expect("shapes agree");
    expect_witnessed_failure(&mut o, "corrupted action", &check_left_module_algebra(&bad));
    expect_witnessed_failure(
        &mut o,
        "corrupted action (bialgebroid iso)",
        &verify_bialgebroid_isomorphism(&bad, Convention::default()),
    );

    let b = enveloping_bimodule_algebra(&m);
    let mut nu = iso_nu(&b);
    nu.set_column(3, nu.column(3).add(&SparseVec::basis(Q, 8, 0)));
    let r = check_algebra_map(&nu, &diagonal_crossed(&b).underlying, &lr_smash(&b).underlying);
    expect_witnessed_failure(&mut o, "corrupted ν", &r);
    o
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("Hopf suite", Box::new(hopf_suite)),
        ("ν and ν⁻¹ are inverse algebra isomorphisms", Box::new(single_field(nu_isomorphism, 10))),
        ("diamond and L-R-smash tables are equal", Box::new(single_field(diamond_is_smash, 10))),
        ("odot/diagonal and Φ/Ψ isomorphisms, diagram", Box::new(single_field(isomorphisms, 10))),
        ("bialgebroid isomorphism both directions", Box::new(single_field(bialgebroid_iso, 60))),
        ("antipodes in the involutive case", Box::new(antipodes)),
        ("bialgebroid over the dual", Box::new(cibils_rosso)),
        ("universal property and ω", Box::new(universal)),
        ("field independence q vs fp:7", Box::new(field_independence)),
        ("negative controls", Box::new(negative_controls)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run));
        let elapsed = start.elapsed();
        let (ok, bound, detail) = match outcome {
            Ok(o) => {
                let mut problems = o.problems;
                if elapsed > o.bound {
                    problems.push(format!("total {:.2} s exceeds {} s", elapsed.as_secs_f64(), o.bound.as_secs()));
                }
                (problems.is_empty(), o.bound.as_secs().to_string(), problems.join("; "))
            }
            Err(_) => (false, "?".to_string(), "panicked".to_string()),
        };
        failed += usize::from(!ok);
        println!(
            "criterion {:>2} [{name}]: {} ({:.3} s, bound {bound} s; tolerance exact){}",
            i + 1,
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            if detail.is_empty() { String::new() } else { format!(": {detail}") }
        );
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
