//! JSON definition files for algebras, Hopf algebras and their actions.
//!
//! ```json
//! {
//!   "field": "q",
//!   "dim": 2,
//!   "basis": ["1", "g"],
//!   "mult": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, "1"], [1, 1, 0, "1"]],
//!   "unit": [[0, "1"]],
//!   "comult": [[0, 0, 0, "1"], [1, 1, 1, "1"]],
//!   "counit": [[0, "1"], [1, "1"]],
//!   "antipode": [[0, 0, "1"], [1, 1, "1"]]
//! }
//! ```
//!
//! Indices are 0-based. `mult` entries `[i, j, k, c]` mean `e_i e_j` has
//! coefficient `c` at `e_k`; `comult` entries `[i, j, k, c]` mean `Δ(e_i)` has
//! coefficient `c` at `e_j ⊗ e_k`; `antipode` entries `[i, j, c]` mean `S(e_i)`
//! has coefficient `c` at `e_j`. Coefficients are strings (`"-1"`, `"3/2"`) or
//! integers. A module algebra adds an `action` block:
//!
//! ```json
//! "action": { "hopf": "kc2.json", "left": [[h, a, b, "c"]], "right": [[a, h, b, "c"]] }
//! ```
//!
//! where `hopf` is a path relative to the file or an inline definition, `left`
//! entries mean `e_h · e_a` has coefficient `c` at `e_b`, and the optional
//! `right` entries mean `e_a · e_h` has coefficient `c` at `e_b`.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::actions::{check_bimodule_algebra, check_left_module_algebra, BimoduleAlgebra, LeftModuleAlgebra};
use crate::algebra::{check_algebra, check_hopf, with_raw_antipode, Coalgebra, HopfAlgebra, StructureAlgebra};
use crate::catalog;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, SparseVec, Tensor3};
use crate::report::CheckReport;
use crate::scalar::{FieldSpec, Scalar};

/// A coefficient as written in a file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coeff {
    Int(i64),
    Text(String),
}

impl Coeff {
    fn parse(&self, field: FieldSpec) -> Result<Scalar> {
        match self {
            Coeff::Int(n) => Ok(field.from_i64(*n)),
            Coeff::Text(t) => field.parse_scalar(t),
        }
    }
}

impl From<&Scalar> for Coeff {
    fn from(s: &Scalar) -> Self {
        Coeff::Text(s.to_string())
    }
}

pub type Quad = (usize, usize, usize, Coeff);
pub type Triple = (usize, usize, Coeff);
pub type Pair = (usize, Coeff);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum HopfRef {
    Path(String),
    Inline(Box<DefinitionFile>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionBlock {
    pub hopf: HopfRef,
    pub left: Vec<Quad>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right: Option<Vec<Quad>>,
}

/// The on-disk form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DefinitionFile {
    pub field: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub mult: Vec<Quad>,
    pub unit: Vec<Pair>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comult: Option<Vec<Quad>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counit: Option<Vec<Pair>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Vec<Triple>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<ActionBlock>,
}

/// What a definition file describes.
#[derive(Clone, Debug)]
pub enum Definition {
    Algebra(StructureAlgebra),
    Hopf(HopfAlgebra),
    ModuleAlgebra(LeftModuleAlgebra),
    Bimodule(BimoduleAlgebra),
}

impl Definition {
    pub fn kind(&self) -> &'static str {
        match self {
            Definition::Algebra(_) => "algebra",
            Definition::Hopf(_) => "Hopf algebra",
            Definition::ModuleAlgebra(_) => "module algebra",
            Definition::Bimodule(_) => "bimodule algebra",
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct LoadOptions {
    /// Replaces the field named in the file; coefficients are reinterpreted.
    pub field: Option<FieldSpec>,
    pub skip_validate: bool,
}

pub fn parse_definition(path: &Path, opts: LoadOptions) -> Result<Definition> {
    let text = fs::read_to_string(path)?;
    let dir = path.parent().map(Path::to_path_buf).unwrap_or_default();
    parse_definition_str(&text, &dir, opts)
}

/// Parses a definition; `dir` resolves relative `hopf` paths.
pub fn parse_definition_str(text: &str, dir: &Path, opts: LoadOptions) -> Result<Definition> {
    let file: DefinitionFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("malformed definition: {e}")))?;
    let def = build(&file, dir, opts, 0)?;
    if !opts.skip_validate {
        validate(&def)?;
    }
    Ok(def)
}

/// Runs the axiom checker appropriate to the definition.
pub fn validation_report(def: &Definition) -> CheckReport {
    match def {
        Definition::Algebra(a) => check_algebra(a),
        Definition::Hopf(h) => check_hopf(h),
        Definition::ModuleAlgebra(m) => {
            let mut r = CheckReport::new("module algebra");
            r.absorb("hopf", check_hopf(m.hopf()));
            r.absorb("algebra", check_algebra(m.alg()));
            r.absorb("action", check_left_module_algebra(m));
            r
        }
        Definition::Bimodule(b) => {
            let mut r = CheckReport::new("bimodule algebra");
            r.absorb("hopf", check_hopf(b.hopf()));
            r.absorb("algebra", check_algebra(b.alg()));
            r.absorb("actions", check_bimodule_algebra(b));
            r
        }
    }
}

fn validate(def: &Definition) -> Result<()> {
    let report = validation_report(def);
    if report.passed() {
        Ok(())
    } else {
        Err(Error::Validation { what: def.kind().to_string(), report: report.to_string() })
    }
}

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn check_index(i: usize, bound: usize, what: &str) -> Result<()> {
    if i >= bound {
        return Err(parse_err(format!("{what} index {i} out of range (dimension {bound})")));
    }
    Ok(())
}

fn vector(field: FieldSpec, dim: usize, entries: &[Pair], what: &str) -> Result<SparseVec> {
    let mut terms = Vec::with_capacity(entries.len());
    for (i, c) in entries {
        check_index(*i, dim, what)?;
        terms.push((*i, c.parse(field)?));
    }
    Ok(SparseVec::from_terms(dim, terms))
}

fn tensor(field: FieldSpec, dims: [usize; 3], entries: &[Quad], what: &str) -> Result<Tensor3> {
    let mut quads = Vec::with_capacity(entries.len());
    for (i, j, k, c) in entries {
        check_index(*i, dims[0], what)?;
        check_index(*j, dims[1], what)?;
        check_index(*k, dims[2], what)?;
        quads.push((*i, *j, *k, c.parse(field)?));
    }
    Tensor3::from_quadruples(dims, quads)
}

const MAX_NESTING: usize = 4;

fn build(file: &DefinitionFile, dir: &Path, opts: LoadOptions, depth: usize) -> Result<Definition> {
    if depth > MAX_NESTING {
        return Err(parse_err("definition files reference each other too deeply"));
    }
    let field = match opts.field {
        Some(f) => f,
        None => file.field.parse()?,
    };
    let n = file.dim;
    if file.basis.len() != n {
        return Err(parse_err(format!("basis has {} names but dim is {n}", file.basis.len())));
    }
    let mult = tensor(field, [n, n, n], &file.mult, "mult")?;
    let unit = vector(field, n, &file.unit, "unit")?;
    let algebra = StructureAlgebra::new(field, file.basis.clone(), mult, unit)?;

    let hopf = match (&file.comult, &file.counit, &file.antipode) {
        (None, None, None) => None,
        (Some(comult), Some(counit), Some(antipode)) => {
            let mut cols = vec![Vec::new(); n];
            for (i, j, k, c) in comult {
                check_index(*i, n, "comult")?;
                check_index(*j, n, "comult")?;
                check_index(*k, n, "comult")?;
                cols[*i].push((j * n + k, c.parse(field)?));
            }
            let comult =
                Matrix::from_columns(n * n, cols.into_iter().map(|t| SparseVec::from_terms(n * n, t)).collect());
            let counit = vector(field, n, counit, "counit")?;
            let mut triples = Vec::with_capacity(antipode.len());
            for (i, j, c) in antipode {
                check_index(*i, n, "antipode")?;
                check_index(*j, n, "antipode")?;
                triples.push((*j, *i, c.parse(field)?));
            }
            let antipode = Matrix::from_triples(n, n, triples);
            let coalgebra = Coalgebra::new(field, comult, counit)?;
            Some(match HopfAlgebra::new(algebra.clone(), coalgebra.clone(), antipode.clone()) {
                Ok(h) => h,
                Err(Error::SingularMatrix) if opts.skip_validate => {
                    let placeholder = HopfAlgebra::new(algebra.clone(), coalgebra, Matrix::identity(field, n))?;
                    with_raw_antipode(&placeholder, antipode)
                }
                Err(Error::SingularMatrix) => {
                    return Err(Error::Validation {
                        what: "Hopf algebra".into(),
                        report: "antipode matrix is not invertible".into(),
                    })
                }
                Err(e) => return Err(e),
            })
        }
        _ => return Err(parse_err("comult, counit and antipode must be given together")),
    };

    match (&file.action, hopf) {
        (None, None) => Ok(Definition::Algebra(algebra)),
        (None, Some(h)) => Ok(Definition::Hopf(h)),
        (Some(_), Some(_)) => Err(parse_err("a file defines either a Hopf algebra or an action, not both")),
        (Some(block), None) => {
            let inner = match &block.hopf {
                HopfRef::Inline(def) => build(def, dir, opts, depth + 1)?,
                HopfRef::Path(p) => {
                    let path: PathBuf = dir.join(p);
                    let text = fs::read_to_string(&path)
                        .map_err(|e| parse_err(format!("cannot read {}: {e}", path.display())))?;
                    let def: DefinitionFile = serde_json::from_str(&text)
                        .map_err(|e| parse_err(format!("malformed definition {}: {e}", path.display())))?;
                    let sub_dir = path.parent().map(Path::to_path_buf).unwrap_or_default();
                    build(&def, &sub_dir, opts, depth + 1)?
                }
            };
            let h = match inner {
                Definition::Hopf(h) => h,
                other => return Err(parse_err(format!("action references a {}, not a Hopf algebra", other.kind()))),
            };
            if h.field() != field {
                return Err(Error::FieldMismatch(format!(
                    "acting Hopf algebra is over {}, algebra is over {field}",
                    h.field()
                )));
            }
            let nh = h.dim();
            let left = tensor(field, [nh, n, n], &block.left, "left action")?;
            match &block.right {
                None => Ok(Definition::ModuleAlgebra(LeftModuleAlgebra::new(h, algebra, left)?)),
                Some(right) => {
                    let right = tensor(field, [n, nh, n], right, "right action")?;
                    Ok(Definition::Bimodule(BimoduleAlgebra::new(h, algebra, left, right)?))
                }
            }
        }
    }
}

fn quads(t: &Tensor3) -> Vec<Quad> {
    t.quadruples().map(|(i, j, k, c)| (i, j, k, Coeff::from(c))).collect()
}

fn pairs(v: &SparseVec) -> Vec<Pair> {
    v.entries().iter().map(|(i, c)| (*i, Coeff::from(c))).collect()
}

pub fn algebra_file(a: &StructureAlgebra) -> DefinitionFile {
    DefinitionFile {
        field: a.field().to_string(),
        dim: a.dim(),
        basis: a.labels().to_vec(),
        mult: quads(a.mult()),
        unit: pairs(a.unit()),
        comult: None,
        counit: None,
        antipode: None,
        action: None,
    }
}

pub fn hopf_file(h: &HopfAlgebra) -> DefinitionFile {
    let n = h.dim();
    let mut file = algebra_file(h.algebra());
    file.comult = Some(
        (0..n)
            .flat_map(|i| h.delta(i).entries().iter().map(move |(idx, c)| (i, idx / n, idx % n, Coeff::from(c))))
            .collect(),
    );
    file.counit = Some(pairs(h.coalgebra().counit()));
    file.antipode = Some(h.antipode().triples().map(|(row, col, c)| (col, row, Coeff::from(c))).collect());
    file
}

/// A module algebra with its Hopf algebra inlined.
pub fn module_algebra_file(m: &LeftModuleAlgebra) -> DefinitionFile {
    let mut file = algebra_file(m.alg());
    file.action =
        Some(ActionBlock { hopf: HopfRef::Inline(Box::new(hopf_file(m.hopf()))), left: quads(m.act()), right: None });
    file
}

pub fn bimodule_file(b: &BimoduleAlgebra) -> DefinitionFile {
    let mut file = algebra_file(b.alg());
    file.action = Some(ActionBlock {
        hopf: HopfRef::Inline(Box::new(hopf_file(b.hopf()))),
        left: quads(b.left_act()),
        right: Some(quads(b.right_act())),
    });
    file
}

pub fn definition_file(def: &Definition) -> DefinitionFile {
    match def {
        Definition::Algebra(a) => algebra_file(a),
        Definition::Hopf(h) => hopf_file(h),
        Definition::ModuleAlgebra(m) => module_algebra_file(m),
        Definition::Bimodule(b) => bimodule_file(b),
    }
}

/// Pretty JSON with every flat array (a quadruple, a basis list) kept on one line.
pub fn to_json(file: &DefinitionFile) -> String {
    let value = serde_json::to_value(file).expect("definition serializes");
    let mut out = String::new();
    write_value(&mut out, &value, 0);
    out
}

fn is_flat(v: &serde_json::Value) -> bool {
    match v {
        serde_json::Value::Array(items) => items.iter().all(|x| !x.is_array() && !x.is_object()),
        serde_json::Value::Object(_) => false,
        _ => true,
    }
}

fn write_value(out: &mut String, v: &serde_json::Value, depth: usize) {
    use serde_json::Value;
    let pad = "  ".repeat(depth + 1);
    match v {
        Value::Array(items) if !is_flat(v) => {
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                out.push_str(&pad);
                write_value(out, item, depth + 1);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&"  ".repeat(depth));
            out.push(']');
        }
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (k, item)) in map.iter().enumerate() {
                out.push_str(&pad);
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_value(out, item, depth + 1);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&"  ".repeat(depth));
            out.push('}');
        }
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(Value::to_string).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}

/// Catalog entries by name: every module-algebra instance plus the bare Hopf
/// algebras `kc2`, `ks3`, `h4` and their duals.
pub fn catalog_names() -> Vec<&'static str> {
    let mut names = catalog::INSTANCE_NAMES.to_vec();
    names.extend(["kc2", "ks3", "h4-hopf", "kc2-dual", "ks3-dual", "h4-dual"]);
    names
}

pub fn catalog_definition(name: &str, field: FieldSpec) -> Option<Definition> {
    use crate::algebra::dual_hopf;
    use catalog::Group;
    if let Some((m, _)) = catalog::instance(name, field) {
        return Some(Definition::ModuleAlgebra(m));
    }
    let h = match name {
        "kc2" => catalog::group_algebra(field, &Group::cyclic(2)),
        "ks3" => catalog::group_algebra(field, &Group::symmetric3()),
        "h4-hopf" => catalog::sweedler_h4(field),
        "kc2-dual" => dual_hopf(&catalog::group_algebra(field, &Group::cyclic(2))),
        "ks3-dual" => dual_hopf(&catalog::group_algebra(field, &Group::symmetric3())),
        "h4-dual" => dual_hopf(&catalog::sweedler_h4(field)),
        _ => return None,
    };
    Some(Definition::Hopf(h))
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn round_trip(def: &Definition, opts: LoadOptions) -> Definition {
        parse_definition_str(&to_json(&definition_file(def)), Path::new("."), opts).unwrap()
    }

    #[test]
    fn catalog_round_trips() {
        for field in [Q, FieldSpec::Prime(7)] {
            for name in catalog_names() {
                let def = catalog_definition(name, field).unwrap();
                let back = round_trip(&def, LoadOptions::default());
                assert_eq!(definition_file(&back), definition_file(&def), "{name}");
            }
        }
    }

    #[test]
    fn kc2_round_trips_to_equal_object() {
        let h = catalog::group_algebra(Q, &catalog::Group::cyclic(2));
        match round_trip(&Definition::Hopf(h.clone()), LoadOptions::default()) {
            Definition::Hopf(back) => assert_eq!(back, h),
            other => panic!("unexpected {}", other.kind()),
        }
    }

    #[test]
    fn field_override_reinterprets_coefficients() {
        let def = catalog_definition("h4", Q).unwrap();
        let opts = LoadOptions { field: Some(FieldSpec::Prime(7)), skip_validate: false };
        match round_trip(&def, opts) {
            Definition::ModuleAlgebra(m) => {
                assert_eq!(m.field(), FieldSpec::Prime(7));
                assert_eq!(m, catalog::sweedler_module_algebra(FieldSpec::Prime(7)));
            }
            other => panic!("unexpected {}", other.kind()),
        }
    }

    #[test]
    fn non_prime_field_is_a_parse_error() {
        let mut file = hopf_file(&catalog::trivial_hopf(Q));
        file.field = "fp:8".into();
        let err = parse_definition_str(&to_json(&file), Path::new("."), LoadOptions::default()).unwrap_err();
        assert!(matches!(err, Error::Parse(_)), "{err}");
    }

    #[test]
    fn malformed_and_out_of_range() {
        let err = parse_definition_str("{ not json", Path::new("."), LoadOptions::default()).unwrap_err();
        assert!(matches!(err, Error::Parse(_)));
        let mut file = algebra_file(&StructureAlgebra::ground(Q));
        file.mult.push((0, 0, 3, Coeff::Int(1)));
        let err = parse_definition_str(&to_json(&file), Path::new("."), LoadOptions::default()).unwrap_err();
        assert!(matches!(err, Error::Parse(_)));
    }

    #[test]
    fn corrupted_antipode_names_the_clause() {
        let mut file = hopf_file(&catalog::sweedler_h4(Q));
        // S(x) = gx instead of -gx
        for entry in file.antipode.as_mut().unwrap() {
            if entry.0 == 2 {
                entry.2 = Coeff::Int(1);
            }
        }
        let err = parse_definition_str(&to_json(&file), Path::new("."), LoadOptions::default()).unwrap_err();
        match err {
            Error::Validation { report, .. } => assert!(report.contains("[FAIL] antipode"), "{report}"),
            other => panic!("unexpected {other}"),
        }
        let skipped =
            parse_definition_str(&to_json(&file), Path::new("."), LoadOptions { field: None, skip_validate: true });
        assert!(skipped.is_ok());
    }
}
