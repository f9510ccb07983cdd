//! Named verification runs over a loaded definition.

use std::fmt;
use std::str::FromStr;

use crate::actions::{enveloping_bimodule_algebra, BimoduleAlgebra, LeftModuleAlgebra};
use crate::algebra::{check_algebra, is_involutive, HopfAlgebra};
use crate::bialgebroid::{
    antipode_cm, antipode_kadison, check_antipode_properties, cibils_rosso_bialgebroid, cm_bialgebroid,
    kadison_bialgebroid, validated, verify_bialgebroid_isomorphism, verify_strict_intertwining, Convention,
    QUOTIENT_DIM_LIMIT,
};
use crate::definition::{validation_report, Definition};
use crate::error::{Error, Result};
use crate::products::{
    check_algebra_iso, check_composite_diagram, check_diamond_equals_smash, check_mutually_inverse, cm_odot,
    diagonal_crossed, iso_cm_to_diagonal, iso_diamond_to_odot, iso_nu, iso_nu_inv, iso_odot_to_diamond,
    kadison_diamond, lr_smash,
};
use crate::report::CheckReport;
use crate::universal::{verify_omega_morphism, verify_universal_property};

/// The verifiable claims, named by their command-line tokens.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Claim {
    /// `ν : ⋈ → ♮` and its inverse.
    NuIsomorphism,
    /// `⋄` and `♮` on `A^e` have identical tables.
    DiamondIsSmash,
    /// `⊙ → ⋈` by reordering the basis.
    OdotIsDiagonal,
    /// `Φ : ⋄ → ⊙`, `Ψ : ⊙ → ⋄` and the commuting diagram.
    DiamondOdotIsos,
    /// `Φ` and `Ψ` as bialgebroid morphisms.
    BialgebroidIso,
    /// Antipodes in the involutive case.
    Antipodes,
    /// The bialgebroid over `H*`.
    DualBialgebroid,
    /// The universal property of `⋄`.
    UniversalProperty,
    /// `ω` as a bialgebroid morphism.
    OmegaMorphism,
}

impl Claim {
    pub const ALL: [Claim; 9] = [
        Claim::NuIsomorphism,
        Claim::DiamondIsSmash,
        Claim::OdotIsDiagonal,
        Claim::DiamondOdotIsos,
        Claim::BialgebroidIso,
        Claim::Antipodes,
        Claim::DualBialgebroid,
        Claim::UniversalProperty,
        Claim::OmegaMorphism,
    ];

    pub fn token(self) -> &'static str {
        match self {
            Claim::NuIsomorphism => "prop21",
            Claim::DiamondIsSmash => "prop22",
            Claim::OdotIsDiagonal => "prop23",
            Claim::DiamondOdotIsos => "cor24",
            Claim::BialgebroidIso => "thm25",
            Claim::Antipodes => "remark26",
            Claim::DualBialgebroid => "ex27",
            Claim::UniversalProperty => "prop31",
            Claim::OmegaMorphism => "thm32",
        }
    }

    /// Whether the claim can run on this kind of input.
    pub fn accepts(self, def: &Definition) -> bool {
        matches!(
            (self, def),
            (_, Definition::ModuleAlgebra(_))
                | (Claim::DualBialgebroid, Definition::Hopf(_))
                | (Claim::NuIsomorphism, Definition::Bimodule(_))
        )
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Claim::ALL.into_iter().find(|c| c.token() == s).ok_or_else(|| {
            let names: Vec<&str> = Claim::ALL.iter().map(|c| c.token()).collect();
            Error::Parse(format!("unknown claim {s:?}; expected one of {} or all", names.join(", ")))
        })
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Settings {
    pub convention: Convention,
    pub quotient_dim_limit: usize,
}

impl Default for Settings {
    fn default() -> Self {
        Settings { convention: Convention::default(), quotient_dim_limit: QUOTIENT_DIM_LIMIT }
    }
}

pub fn run(claim: Claim, def: &Definition, settings: Settings) -> Result<CheckReport> {
    if !claim.accepts(def) {
        return Err(Error::WrongInput(format!("{claim} does not apply to a {}", def.kind())));
    }
    let report = match (claim, def) {
        (Claim::NuIsomorphism, Definition::Bimodule(b)) => nu_isomorphism(b),
        (Claim::NuIsomorphism, Definition::ModuleAlgebra(m)) => nu_isomorphism(&enveloping_bimodule_algebra(m)),
        (Claim::DualBialgebroid, Definition::Hopf(h)) => cibils_rosso(h, settings),
        (Claim::DualBialgebroid, Definition::ModuleAlgebra(m)) => cibils_rosso(m.hopf(), settings),
        (_, Definition::ModuleAlgebra(m)) => match claim {
            Claim::DiamondIsSmash => diamond_is_smash(m),
            Claim::OdotIsDiagonal => odot_is_diagonal(m),
            Claim::DiamondOdotIsos => diamond_odot_isomorphisms(m),
            Claim::BialgebroidIso => verify_bialgebroid_isomorphism(m, settings.convention),
            Claim::Antipodes => antipodes(m, settings),
            Claim::UniversalProperty => verify_universal_property(m),
            Claim::OmegaMorphism => verify_omega_morphism(m, settings.convention),
            Claim::NuIsomorphism | Claim::DualBialgebroid => unreachable!("handled above"),
        },
        _ => unreachable!("rejected by accepts"),
    };
    Ok(report.with_claim(claim.token()))
}

/// The input's own axiom check followed by every claim that applies to it.
pub fn run_all(def: &Definition, settings: Settings) -> Vec<CheckReport> {
    let mut reports = vec![validation_report(def).with_claim("input")];
    for claim in Claim::ALL {
        if claim.accepts(def) {
            reports.push(run(claim, def, settings).expect("claim accepts input"));
        }
    }
    reports
}

pub fn nu_isomorphism(b: &BimoduleAlgebra) -> CheckReport {
    let mut report = CheckReport::new("ν");
    let smash = lr_smash(b).underlying;
    let crossed = diagonal_crossed(b).underlying;
    report.absorb("L-R-smash", check_algebra(&smash));
    report.absorb("diagonal crossed", check_algebra(&crossed));
    let (nu, nu_inv) = (iso_nu(b), iso_nu_inv(b));
    report.absorb("ν", check_algebra_iso(&nu, &crossed, &smash));
    report.absorb("ν⁻¹", check_algebra_iso(&nu_inv, &smash, &crossed));
    check_mutually_inverse(&mut report, "ν", b.field(), &nu, &nu_inv);
    report
}

pub fn diamond_is_smash(m: &LeftModuleAlgebra) -> CheckReport {
    let mut report = CheckReport::new("diamond");
    report.absorb("diamond", check_algebra(&kadison_diamond(m).underlying));
    report.absorb("", check_diamond_equals_smash(m));
    report
}

pub fn odot_is_diagonal(m: &LeftModuleAlgebra) -> CheckReport {
    let mut report = CheckReport::new("odot");
    let odot = cm_odot(m).underlying;
    let crossed = diagonal_crossed(&enveloping_bimodule_algebra(m)).underlying;
    report.absorb("odot", check_algebra(&odot));
    let p = iso_cm_to_diagonal(m);
    report.absorb("P", check_algebra_iso(&p, &odot, &crossed));
    report.absorb("P⁻¹", check_algebra_iso(&p.transpose(), &crossed, &odot));
    report
}

pub fn diamond_odot_isomorphisms(m: &LeftModuleAlgebra) -> CheckReport {
    let mut report = CheckReport::new("Φ and Ψ");
    let diamond = kadison_diamond(m).underlying;
    let odot = cm_odot(m).underlying;
    let (phi, psi) = (iso_diamond_to_odot(m), iso_odot_to_diamond(m));
    report.absorb("Φ", check_algebra_iso(&phi, &diamond, &odot));
    report.absorb("Ψ", check_algebra_iso(&psi, &odot, &diamond));
    check_mutually_inverse(&mut report, "Φ, Ψ", m.field(), &phi, &psi);
    report.absorb("", check_composite_diagram(m));
    report
}

/// Skipped as a whole unless `S² = id`.
pub fn antipodes(m: &LeftModuleAlgebra, settings: Settings) -> CheckReport {
    let mut report = CheckReport::new("antipodes");
    if !is_involutive(m.hopf()) {
        report.skip("antipodes", "not involutive");
        return report;
    }
    let conv = settings.convention;
    let limit = settings.quotient_dim_limit;
    let (kad, kad_report) = validated(kadison_bialgebroid(m, conv, limit), conv);
    let (cm, cm_report) = validated(cm_bialgebroid(m, conv, limit), conv);
    report.header = kad_report.header.clone();
    report.absorb("diamond", kad_report);
    report.absorb("odot", cm_report);
    match (antipode_kadison(m), antipode_cm(m)) {
        (Ok(sk), Ok(sc)) => {
            report.absorb("S_⋄", check_antipode_properties(&kad, &sk));
            report.absorb("S_⊙", check_antipode_properties(&cm, &sc));
        }
        (Err(e), _) | (_, Err(e)) => {
            report.pass_or_fail("antipodes", false, Some(e.to_string()));
        }
    }
    report.absorb("", verify_strict_intertwining(m));
    report
}

pub fn cibils_rosso(h: &HopfAlgebra, settings: Settings) -> CheckReport {
    cibils_rosso_bialgebroid(h, settings.convention, settings.quotient_dim_limit).1
}
