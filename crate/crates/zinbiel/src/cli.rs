//! Command-line front end: argument types and command execution.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use zinbiel_core::catalog;
use zinbiel_core::envelope::{envelope_agreement, DEFAULT_RANK};
use zinbiel_core::exactlin::Scalar;
use zinbiel_core::extensions::{
    central_extension_in, cocycle_space, decompose_even, decompose_odd, even_double_extension, form_checks,
    odd_adjoint, odd_double_extension, quadratic_consequences, BilinearForm, ExtensionError,
};
use zinbiel_core::identities::{in_variety, lattice_report, Counterexample, IdentityError, VarietyName};
use zinbiel_core::representations::{adjoint_pair, coadjoint_pair, is_left_representation, is_right_representation};
use zinbiel_core::structure::{annihilator, cube_zero, dim_bound, generator_count, nil_report};
use zinbiel_core::superalgebra::{Parity, SuperAlgebra};

use crate::format::{format_vector, parse_algebra, parse_cocycles, parse_data, serialize_algebra, serialize_data, AlgebraFile};
use crate::report::Report;

#[derive(Debug, Parser)]
#[command(name = "zinbiel", version, about = "Exact checks and constructions for Zinbiel superalgebras")]
pub struct Cli {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check membership in a variety.
    Check {
        file: PathBuf,
        #[arg(long)]
        variety: String,
    },
    /// Nilpotency, annihilator, generators and the dimension bound.
    Analyze { file: PathBuf },
    /// Check the adjoint or coadjoint representation axioms.
    RepCheck {
        file: PathBuf,
        #[command(flatten)]
        which: RepChoice,
    },
    /// Build extensions.
    Extend {
        #[command(subcommand)]
        kind: ExtendKind,
    },
    /// Even or odd double extension of a quadratic algebra.
    DoubleExtend {
        file: PathBuf,
        #[command(flatten)]
        parity: ParityChoice,
        #[arg(long)]
        data: PathBuf,
    },
    /// Write a quadratic algebra as a double extension.
    Decompose {
        file: PathBuf,
        #[command(flatten)]
        parity: ParityChoice,
    },
    /// Library of printed tables.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Certify every strict inclusion of the variety lattice.
    LatticeVerify,
    /// Compare super verdicts with verdicts on the Grassmann envelope.
    GrassmannCheck {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_RANK)]
        rank: usize,
        /// Varieties to compare; all graded registry varieties when omitted.
        #[arg(long)]
        variety: Vec<String>,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct RepChoice {
    #[arg(long)]
    pub adjoint: bool,
    #[arg(long)]
    pub coadjoint: bool,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct ParityChoice {
    #[arg(long)]
    pub even: bool,
    #[arg(long)]
    pub odd: bool,
}

impl ParityChoice {
    fn parity(&self) -> Parity {
        if self.odd {
            Parity::Odd
        } else {
            Parity::Even
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum ExtendKind {
    /// Central extension by listed cocycles, or cocycle-space dimensions.
    Central {
        file: PathBuf,
        #[arg(long)]
        cocycles: Option<PathBuf>,
        #[arg(long, default_value = "symmetric-zinbiel")]
        variety: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    List,
    Show {
        name: String,
        /// Value of the family parameter.
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
    },
    Verify,
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load(path: &Path) -> Result<AlgebraFile, String> {
    parse_algebra(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn variety(name: &str) -> Result<VarietyName, String> {
    VarietyName::from_cli_name(name).ok_or_else(|| {
        let known: Vec<&str> = VarietyName::ALL.iter().map(|v| v.cli_name()).collect();
        format!("unknown variety `{name}`; known: {}", known.join(", "))
    })
}

/// `identity at (x, y, z): residual` with basis labels.
pub fn describe(a: &SuperAlgebra, c: &Counterexample) -> String {
    let tuple: Vec<&str> = c.tuple.iter().map(|&i| a.label(i)).collect();
    format!("{} at ({}): residual {}", c.identity, tuple.join(", "), format_vector(a.labels(), &c.residual))
}

pub fn run(cli: &Cli) -> Report {
    let name = command_name(&cli.command);
    let result = match &cli.command {
        Command::Check { file, variety: v } => cmd_check(&name, file, v),
        Command::Analyze { file } => cmd_analyze(&name, file),
        Command::RepCheck { file, which } => cmd_rep_check(&name, file, which.coadjoint),
        Command::Extend { kind: ExtendKind::Central { file, cocycles, variety: v } } => {
            cmd_central(&name, file, cocycles.as_deref(), v)
        }
        Command::DoubleExtend { file, parity, data } => cmd_double_extend(&name, file, parity.parity(), data),
        Command::Decompose { file, parity } => cmd_decompose(&name, file, parity.parity()),
        Command::Catalog { action } => cmd_catalog(&name, action),
        Command::LatticeVerify => Ok(cmd_lattice(&name)),
        Command::GrassmannCheck { file, rank, variety: v } => cmd_grassmann(&name, file, *rank, v),
    };
    result.unwrap_or_else(|msg| Report::parse_failure(name, msg))
}

fn command_name(c: &Command) -> String {
    match c {
        Command::Check { .. } => "check",
        Command::Analyze { .. } => "analyze",
        Command::RepCheck { .. } => "rep-check",
        Command::Extend { .. } => "extend central",
        Command::DoubleExtend { .. } => "double-extend",
        Command::Decompose { .. } => "decompose",
        Command::Catalog { action: CatalogAction::List } => "catalog list",
        Command::Catalog { action: CatalogAction::Show { .. } } => "catalog show",
        Command::Catalog { action: CatalogAction::Verify } => "catalog verify",
        Command::LatticeVerify => "lattice-verify",
        Command::GrassmannCheck { .. } => "grassmann-check",
    }
    .to_string()
}

fn cmd_check(name: &str, file: &Path, v: &str) -> Result<Report, String> {
    let f = load(file)?;
    let v = variety(v)?;
    let verdict = in_variety(&f.algebra, v).map_err(|e| e.to_string())?;
    let mut r = Report::new(name);
    match verdict.counterexample() {
        None => {
            r.check(v.cli_name(), true, "all identities hold");
        }
        Some(c) => {
            r.check(v.cli_name(), false, format!("identity {} fails", c.identity)).witness =
                Some(describe(&f.algebra, c));
        }
    }
    Ok(r)
}

fn is_symmetric_zinbiel(a: &SuperAlgebra) -> bool {
    in_variety(a, VarietyName::SymmetricZinbiel).map(|v| v.holds()).unwrap_or(false)
}

fn cmd_analyze(name: &str, file: &Path) -> Result<Report, String> {
    let f = load(file)?;
    let a = &f.algebra;
    let mut r = Report::new(name);
    let nil = nil_report(a);
    let sz = is_symmetric_zinbiel(a);
    r.output_line(format!("dim ({}, {})", a.n_even(), a.n_odd()));
    r.output_line(format!("symmetric zinbiel: {sz}"));
    match nil.nil_index {
        Some(t) => r.output_line(format!("nil index: {t} ({})", nil.step_class.label())),
        None => r.output_line(format!("nil index: none up to {}", a.dim() + 1)),
    }
    let dims: Vec<String> = nil.power_dims.iter().map(usize::to_string).collect();
    r.output_line(format!("power dims: {}", dims.join(" ")));
    let ann = annihilator(a);
    r.output_line(format!("annihilator: dim {} (even {}, odd {})", ann.dim(), ann.even.dim(), ann.odd.dim()));
    r.check("nilpotent", nil.nil_index.is_some(), "");
    if let Ok(d) = generator_count(a) {
        r.output_line(format!("generators: {d}"));
        r.theorem("dimension bound", a.dim() <= dim_bound(d), format!("dim {} <= {}", a.dim(), dim_bound(d)));
    }
    if sz {
        r.theorem(
            "nil index <= 4",
            matches!(nil.nil_index, Some(t) if t <= 4),
            "symmetric Zinbiel superalgebras are 3-step nilpotent",
        );
        r.theorem("cube zero", cube_zero(a), "x^2x = xx^2 = 0");
    }
    if let Some(b) = &f.form {
        let fc = form_checks(a, b).map_err(|e| e.to_string())?;
        r.output_line(format!(
            "form: even {}, supersymmetric {}, invariant {}, nondegenerate {}",
            fc.even, fc.supersymmetric, fc.invariant, fc.nondegenerate
        ));
        if fc.all() {
            if let Ok(q) = quadratic_consequences(a, b) {
                r.theorem("quadratic implies symmetric", q.symmetric, "");
                r.theorem("quadratic implies 2-step", q.two_step(), format!("nil index {:?}", q.nil_index));
            }
        }
    }
    Ok(r)
}

fn cmd_rep_check(name: &str, file: &Path, coadjoint: bool) -> Result<Report, String> {
    let f = load(file)?;
    let a = &f.algebra;
    let rp = if coadjoint { coadjoint_pair(a) } else { adjoint_pair(a) };
    let label = if coadjoint { "coadjoint" } else { "adjoint" };
    let mut r = Report::new(name);
    let mut both = true;
    for s in ["left", "right"] {
        let v = if s == "left" { is_left_representation(a, &rp) } else { is_right_representation(a, &rp) }
            .map_err(|e| e.to_string())?;
        both &= v.is_none();
        let c = r.check(format!("{label} {s} representation"), v.is_none(), "");
        c.witness = v.map(|v| v.to_string());
    }
    if is_symmetric_zinbiel(a) {
        let nil = nil_report(a).nil_index;
        let two_step = matches!(nil, Some(t) if t <= 3);
        if coadjoint {
            r.theorem(
                "coadjoint criterion",
                both == two_step,
                format!("coadjoint is a representation: {both}; nil index {nil:?}"),
            );
        } else {
            r.theorem("adjoint representation", both, "the adjoint pair of a symmetric Zinbiel algebra");
        }
    }
    Ok(r)
}

fn cmd_central(name: &str, file: &Path, cocycles: Option<&Path>, v: &str) -> Result<Report, String> {
    let f = load(file)?;
    let a = &f.algebra;
    let v = variety(v)?;
    let mut r = Report::new(name);
    match cocycles {
        None => {
            for p in [Parity::Even, Parity::Odd] {
                let cs = cocycle_space(a, v, p).map_err(|e| e.to_string())?;
                let pn = if p == Parity::Even { "even" } else { "odd" };
                r.output_line(format!("{pn}: dim Z2 {}, dim B2 {}, dim H2 {}", cs.z2_dim(), cs.b2_dim(), cs.h2_dim));
                r.check(format!("{pn} coboundaries are cocycles"), cs.b2_contained, "");
            }
        }
        Some(path) => {
            let list = parse_cocycles(&read(path)?, a).map_err(|e| format!("{}: {e}", path.display()))?;
            match central_extension_in(a, &list, v) {
                Ok(ext) => {
                    r.check("central extension", true, format!("dimension {}", ext.dim()));
                    r.output.push_str(&serialize_algebra(&ext, None));
                }
                Err(ExtensionError::NotCocycle { index, counterexample }) => {
                    let (single, _) = zinbiel_core::extensions::central_extension_unchecked(
                        a,
                        std::slice::from_ref(&list[index.min(list.len() - 1)]),
                    )
                    .map_err(|e| e.to_string())?;
                    r.check("central extension", false, format!("cocycle {} is not a cocycle", index + 1)).witness =
                        Some(describe(&single, &counterexample));
                }
                Err(e) => return Err(e.to_string()),
            }
        }
    }
    Ok(r)
}

fn quadratic_postconditions(r: &mut Report, a: &SuperAlgebra, b: &BilinearForm) {
    match form_checks(a, b) {
        Ok(fc) => {
            r.theorem("form checks", fc.all(), format!("{fc:?}"));
        }
        Err(e) => {
            r.theorem("form checks", false, e.to_string());
        }
    }
    r.theorem("symmetric zinbiel", is_symmetric_zinbiel(a), "");
    let nil = nil_report(a).nil_index;
    r.theorem("2-step nilpotent", matches!(nil, Some(t) if t <= 3), format!("nil index {nil:?}"));
}

fn cmd_double_extend(name: &str, file: &Path, parity: Parity, data: &Path) -> Result<Report, String> {
    let f = load(file)?;
    let a = &f.algebra;
    let b = f.form.clone().ok_or_else(|| format!("{}: a `form` block is required", file.display()))?;
    let d = parse_data(&read(data)?, a).map_err(|e| format!("{}: {e}", data.display()))?;
    let mut r = Report::new(name);
    let built = if parity == Parity::Even {
        even_double_extension(a, &b, &d.delta, &d.a0, &d.alpha)
    } else {
        let dm = match &d.d_map {
            Some(m) => m.clone(),
            None => odd_adjoint(a, &b, &d.delta).map_err(|e| e.to_string())?,
        };
        odd_double_extension(a, &b, &d.delta, &dm, &d.a0)
    };
    match built {
        Ok((ext, form)) => {
            r.check("preconditions", true, "");
            quadratic_postconditions(&mut r, &ext, &form);
            r.output.push_str(&serialize_algebra(&ext, Some(&form)));
        }
        Err(e) => {
            r.check("preconditions", false, e.to_string());
        }
    }
    Ok(r)
}

fn cmd_decompose(name: &str, file: &Path, parity: Parity) -> Result<Report, String> {
    let f = load(file)?;
    let a = &f.algebra;
    let b = f.form.clone().ok_or_else(|| format!("{}: a `form` block is required", file.display()))?;
    let mut r = Report::new(name);
    let dec = if parity == Parity::Even { decompose_even(a, &b) } else { decompose_odd(a, &b) };
    match dec {
        Ok(d) => {
            r.theorem("decomposition rebuilds the input", true, format!("H has dimension {}", d.h.dim()));
            r.output_line(format!("e = {}", format_vector(a.labels(), &d.e)));
            r.output_line(format!("d = {}", format_vector(a.labels(), &d.d)));
            r.output_line("# H");
            r.output.push_str(&serialize_algebra(&d.h, Some(&d.form_h)));
            r.output_line("# data");
            r.output.push_str(&serialize_data(&d.h, &d.data, parity));
        }
        Err(ExtensionError::Contradiction(msg)) => {
            r.theorem("decomposition rebuilds the input", false, msg);
        }
        Err(e) => {
            r.check("decomposable", false, e.to_string());
        }
    }
    Ok(r)
}

fn cmd_catalog(name: &str, action: &CatalogAction) -> Result<Report, String> {
    let mut r = Report::new(name);
    match action {
        CatalogAction::List => {
            for e in catalog::entries() {
                let params = if e.parameters.is_empty() { String::new() } else { format!(" ({})", e.parameters.join(", ")) };
                r.output_line(format!("{}{params}  dim ({}, {})  {}", e.name, e.n_even, e.n_odd, e.family.label()));
            }
        }
        CatalogAction::Show { name: entry, lambda } => {
            let params: Vec<Scalar> = match lambda {
                Some(s) => vec![s.parse::<Scalar>().map_err(|_| format!("`{s}` is not a rational number"))?],
                None => Vec::new(),
            };
            let a = catalog::get(entry, &params).map_err(|e| e.to_string())?;
            r.output.push_str(&serialize_algebra(&a, None));
        }
        CatalogAction::Verify => {
            let rep = catalog::verify_all();
            for c in &rep.checks {
                r.theorem(format!("{} {}", c.instance, c.claim), c.passed, c.detail.clone());
            }
            let cov = catalog::coverage();
            r.check("coverage", cov == catalog::MANIFEST, format!("{cov:?}"));
            if !rep.binary_set_disagreements.is_empty() {
                r.output_line(format!(
                    "binary symmetric Zinbiel sets A and B disagree on: {}",
                    rep.binary_set_disagreements.join(", ")
                ));
            }
        }
    }
    Ok(r)
}

fn cmd_lattice(name: &str) -> Report {
    let mut r = Report::new(name);
    match lattice_report(&[]) {
        Ok(lr) => {
            for c in &lr.edges {
                let w = catalog::get(c.edge.witness, &[]).expect("witness in catalog");
                let check = r.theorem(
                    format!("{} ⊊ {}", c.edge.smaller, c.edge.larger),
                    c.certified(),
                    format!("witness {}: in larger {}, in smaller {}", c.edge.witness, c.in_larger, c.in_smaller),
                );
                check.witness = match (&c.larger_failure, &c.smaller_failure) {
                    (Some(f), _) => Some(format!("outside larger: {}", describe(&w, f))),
                    (None, Some(f)) => Some(format!("outside smaller: {}", describe(&w, f))),
                    (None, None) => None,
                };
            }
            let bad: Vec<&str> =
                lr.characterization.iter().filter(|row| !row.agrees()).map(|row| row.algebra.as_str()).collect();
            r.theorem("TriplesZero characterization", bad.is_empty(), format!("{} algebras", lr.characterization.len()))
                .witness = (!bad.is_empty()).then(|| bad.join(", "));
            r.theorem("zero algebra in every node", lr.zero_algebra_everywhere, "");
        }
        Err(e) => {
            r.theorem("lattice", false, e.to_string());
        }
    }
    r
}

fn cmd_grassmann(name: &str, file: &Path, rank: usize, vs: &[String]) -> Result<Report, String> {
    let f = load(file)?;
    let a = &f.algebra;
    let list: Vec<VarietyName> = if vs.is_empty() {
        VarietyName::ALL.iter().copied().filter(|v| !v.ungraded_only()).collect()
    } else {
        vs.iter().map(|s| variety(s)).collect::<Result<_, _>>()?
    };
    let mut r = Report::new(name);
    for v in list {
        match envelope_agreement(a, v, rank) {
            Ok((direct, via)) => {
                r.theorem(v.cli_name(), direct == via, format!("super {direct}, envelope {via}"));
            }
            Err(zinbiel_core::envelope::EnvelopeError::Identity(IdentityError::GradedInput(_))) => {
                return Err(format!("variety `{}` is defined for ungraded algebras only", v.cli_name()));
            }
            Err(e) => return Err(e.to_string()),
        }
    }
    Ok(r)
}

/// Parses arguments, runs, prints and returns the exit code.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { crate::report::EXIT_PARSE } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let report = run(&cli);
    if cli.json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    report.exit_code
}
