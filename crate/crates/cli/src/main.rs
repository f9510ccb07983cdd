use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use algebroid::actions::enveloping_bimodule_algebra;
use algebroid::algebra::check_hopf;
use algebroid::bialgebroid::{Convention, QUOTIENT_DIM_LIMIT};
use algebroid::definition::{
    algebra_file, catalog_definition, catalog_names, definition_file, parse_definition, to_json, validation_report,
    Definition, LoadOptions,
};
use algebroid::products::{cm_odot, diagonal_crossed, kadison_diamond, lr_smash, ProductAlgebra};
use algebroid::verify::{self, Claim, Settings};
use algebroid::{CheckReport, Error, FieldSpec};

/// Exact verification of smash-product, crossed-product and bialgebroid identities
/// for finite-dimensional Hopf module algebras.
#[derive(Parser, Debug)]
#[command(name = "algebroid", version, about)]
struct Cli {
    /// Ground field: `q` for the rationals or `fp:<p>` for a prime field.
    #[arg(long, global = true)]
    field: Option<FieldSpec>,

    /// Preferred balancing convention for tensor products over the base.
    #[arg(long, global = true, default_value_t = Convention::default())]
    convention: Convention,

    /// Print a machine-readable JSON report.
    #[arg(long, global = true)]
    json: bool,

    /// Load definitions without running their axiom checks.
    #[arg(long, global = true)]
    skip_validate: bool,

    /// Include per-clause timings (milliseconds) in JSON output.
    #[arg(long, global = true)]
    timing: bool,

    /// Largest total dimension for which tensor products over the base are built.
    #[arg(long, global = true, default_value_t = QUOTIENT_DIM_LIMIT)]
    quotient_limit: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the axiom checker on a definition file.
    Check {
        #[command(subcommand)]
        what: CheckKind,
    },
    /// Build a product algebra and write its structure constants.
    Build {
        kind: BuildKind,
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Verify one claim, or `all`, on a definition file.
    Verify {
        /// prop21, prop22, prop23, cor24, thm25, remark26, ex27, prop31, thm32 or all.
        claim: String,
        file: PathBuf,
    },
    /// Built-in instances.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand, Debug)]
enum CheckKind {
    Hopf { file: PathBuf },
    ModuleAlgebra { file: PathBuf },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BuildKind {
    LrSmash,
    Diagonal,
    Diamond,
    Odot,
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    List,
    Export {
        name: String,
        /// Defaults to standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

impl Cli {
    fn load(&self, path: &Path, skip_validate: bool) -> Result<Definition> {
        let opts = LoadOptions { field: self.field, skip_validate };
        parse_definition(path, opts).with_context(|| format!("loading {}", path.display()))
    }

    fn settings(&self) -> Settings {
        Settings { convention: self.convention, quotient_dim_limit: self.quotient_limit }
    }

    /// Prints the reports and returns whether all passed.
    fn emit(&self, reports: &[CheckReport]) -> bool {
        let ok = reports.iter().all(CheckReport::passed);
        if self.json {
            let records: Vec<serde_json::Value> = reports
                .iter()
                .flat_map(|r| match r.to_json(self.timing) {
                    serde_json::Value::Array(v) => v,
                    other => vec![other],
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&records).expect("report serializes"));
        } else {
            for r in reports {
                print!("{r}");
            }
            let failed: usize = reports.iter().map(|r| r.failures().count()).sum();
            let total: usize = reports.iter().map(|r| r.clauses.len()).sum();
            if ok {
                println!("OK: {total} clause(s), none failed");
            } else {
                println!("FAILED: {failed} of {total} clause(s)");
            }
        }
        ok
    }
}

fn write_output(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, format!("{text}\n")).with_context(|| format!("writing {}", p.display())),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn build_product(kind: BuildKind, def: &Definition) -> Result<ProductAlgebra> {
    Ok(match (kind, def) {
        (BuildKind::LrSmash, Definition::Bimodule(b)) => lr_smash(b),
        (BuildKind::LrSmash, Definition::ModuleAlgebra(m)) => lr_smash(&enveloping_bimodule_algebra(m)),
        (BuildKind::Diagonal, Definition::Bimodule(b)) => diagonal_crossed(b),
        (BuildKind::Diagonal, Definition::ModuleAlgebra(m)) => diagonal_crossed(&enveloping_bimodule_algebra(m)),
        (BuildKind::Diamond, Definition::ModuleAlgebra(m)) => kadison_diamond(m),
        (BuildKind::Odot, Definition::ModuleAlgebra(m)) => cm_odot(m),
        (_, other) => bail!(Error::WrongInput(format!("cannot build {kind:?} from a {}", other.kind()))),
    })
}

fn run(cli: &Cli) -> Result<bool> {
    match &cli.command {
        Command::Check { what } => {
            let report = match what {
                CheckKind::Hopf { file } => match cli.load(file, true)? {
                    Definition::Hopf(h) => check_hopf(&h),
                    Definition::ModuleAlgebra(m) => check_hopf(m.hopf()),
                    Definition::Bimodule(b) => check_hopf(b.hopf()),
                    other => bail!(Error::WrongInput(format!("{} has no Hopf structure", other.kind()))),
                },
                CheckKind::ModuleAlgebra { file } => match cli.load(file, true)? {
                    def @ (Definition::ModuleAlgebra(_) | Definition::Bimodule(_)) => validation_report(&def),
                    other => bail!(Error::WrongInput(format!("{} has no action", other.kind()))),
                },
            };
            Ok(cli.emit(&[report]))
        }
        Command::Build { kind, file, output } => {
            let def = cli.load(file, cli.skip_validate)?;
            let product = build_product(*kind, &def)?;
            write_output(Some(output), &to_json(&algebra_file(&product.underlying)))?;
            if !cli.json {
                println!("wrote {} (dimension {}) to {}", product.kind, product.dim(), output.display());
            }
            Ok(true)
        }
        Command::Verify { claim, file } => {
            let claim = if claim == "all" { None } else { Some(claim.parse::<Claim>()?) };
            let def = cli.load(file, cli.skip_validate)?;
            let reports = match claim {
                None => verify::run_all(&def, cli.settings()),
                Some(c) => vec![verify::run(c, &def, cli.settings())?],
            };
            Ok(cli.emit(&reports))
        }
        Command::Catalog { action } => match action {
            CatalogAction::List => {
                let field = cli.field.unwrap_or(FieldSpec::Rationals);
                for name in catalog_names() {
                    let def = catalog_definition(name, field).expect("listed name");
                    println!("{name}\t{}", def.kind());
                }
                Ok(true)
            }
            CatalogAction::Export { name, output } => {
                let field = cli.field.unwrap_or(FieldSpec::Rationals);
                let def = catalog_definition(name, field)
                    .ok_or_else(|| Error::Parse(format!("unknown catalog entry {name:?}")))?;
                write_output(output.as_deref(), &to_json(&definition_file(&def)))?;
                Ok(true)
            }
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            match err.downcast_ref::<Error>() {
                Some(Error::Validation { .. }) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}
