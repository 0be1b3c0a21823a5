//! The `hecke` command line: enumeration, maps between index sets, and
//! verification drivers.
//!
//! Exit codes: 0 success, 1 counterexample, 2 bad arguments or input,
//! 3 size guard exceeded, 4 input not in M_mu or N_mu.

pub mod json;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::decomp::{dim_identity_check, pieri_check, DecompError};
use crate::gf::{enumerate_irreducibles, FieldSpec};
use crate::guard::{self, GuardExceeded};
use crate::hecke_index::{bijection_check, enumerate_m_mu, enumerate_n_mu, matrix_of_v, v_of_matrix, IndexError};
use crate::oracle::{basis_check, commutativity_check, double_coset_reps, levi_embedding_check, OracleError};
use crate::report::CheckReport;
use crate::rsk::{enumerate_pairs, rsk_bijectivity_check, rsk_classical, rsk_generalized, two_line_array, RskError};
use crate::shapes::{Composition, Partition};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_GUARD: i32 = 3;
pub const EXIT_NOT_MEMBER: i32 = 4;

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn parse(message: impl Into<String>) -> Self {
        CliError { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<GuardExceeded> for CliError {
    fn from(e: GuardExceeded) -> Self {
        CliError { code: EXIT_GUARD, message: e.to_string() }
    }
}

impl From<IndexError> for CliError {
    fn from(e: IndexError) -> Self {
        let code = match e {
            IndexError::NotInMMu(_) | IndexError::NotInNMu(_) => EXIT_NOT_MEMBER,
            IndexError::Guard(_) => EXIT_GUARD,
            _ => EXIT_USAGE,
        };
        CliError { code, message: e.to_string() }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        let code = match e {
            OracleError::Guard(_) => EXIT_GUARD,
            OracleError::Counterexample(_) => EXIT_COUNTEREXAMPLE,
            _ => EXIT_USAGE,
        };
        CliError { code, message: e.to_string() }
    }
}

impl From<DecompError> for CliError {
    fn from(e: DecompError) -> Self {
        let code = if matches!(e, DecompError::Guard(_)) { EXIT_GUARD } else { EXIT_USAGE };
        CliError { code, message: e.to_string() }
    }
}

impl From<RskError> for CliError {
    fn from(e: RskError) -> Self {
        let code = if matches!(e, RskError::Guard(_)) { EXIT_GUARD } else { EXIT_USAGE };
        CliError { code, message: e.to_string() }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "hecke",
    version,
    about = "Index sets, RSK and exact checks for unipotent Hecke algebras of GL_n(F_q)"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    config: RunConfig,
}

#[derive(Args, Debug)]
struct RunConfig {
    /// Characteristic of the field.
    #[arg(long, global = true)]
    p: Option<u32>,
    /// Extension degree, q = p^k.
    #[arg(long, global = true, default_value_t = 1)]
    k: u32,
    /// Composition as comma-separated parts, e.g. 2,1 (the partition nu for pieri).
    #[arg(long, global = true)]
    mu: Option<String>,
    #[arg(long, global = true)]
    n: Option<usize>,
    #[arg(long = "max-deg", global = true)]
    max_deg: Option<usize>,
    /// Number of variables for pieri (default |nu| + n).
    #[arg(long, global = true)]
    vars: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Reserved; no computation is randomized.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Leave report timings empty so output is byte-for-byte reproducible.
    #[arg(long = "no-timings", global = true)]
    no_timings: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Stream the elements of an index set.
    Enum {
        #[arg(value_enum)]
        kind: EnumKind,
    },
    /// Apply a map to the records of an input file.
    Map {
        #[arg(value_enum)]
        direction: MapDirection,
    },
    /// Run a verification and print a report.
    Verify {
        #[arg(value_enum)]
        check: VerifyCheck,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Format {
    Json,
    Tsv,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum EnumKind {
    #[value(name = "n_mu")]
    NMu,
    #[value(name = "m_mu")]
    MMu,
    #[value(name = "irreducibles")]
    Irreducibles,
    #[value(name = "pairs")]
    Pairs,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum MapDirection {
    #[value(name = "a_to_v")]
    AToV,
    #[value(name = "v_to_a")]
    VToA,
    #[value(name = "rsk")]
    Rsk,
    #[value(name = "rsk_general")]
    RskGeneral,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum VerifyCheck {
    #[value(name = "bijection")]
    Bijection,
    #[value(name = "dim_identity")]
    DimIdentity,
    #[value(name = "rsk_bijectivity")]
    RskBijectivity,
    #[value(name = "basis")]
    Basis,
    #[value(name = "commutativity")]
    Commutativity,
    #[value(name = "levi")]
    Levi,
    #[value(name = "cosets")]
    Cosets,
    #[value(name = "pieri")]
    Pieri,
}

impl RunConfig {
    fn field(&self) -> Result<FieldSpec, CliError> {
        let p = self.p.ok_or_else(|| CliError::parse("--p is required"))?;
        FieldSpec::new(p, self.k).map_err(|e| CliError::parse(e.to_string()))
    }

    fn parts(&self) -> Result<Option<Vec<usize>>, CliError> {
        let Some(text) = &self.mu else { return Ok(None) };
        if text.trim().is_empty() {
            return Ok(Some(Vec::new()));
        }
        text.split(',')
            .map(|s| s.trim().parse::<usize>().map_err(|_| CliError::parse(format!("bad part {s:?} in --mu"))))
            .collect::<Result<Vec<_>, _>>()
            .map(Some)
    }

    fn mu(&self) -> Result<Composition, CliError> {
        let parts = self.parts()?.ok_or_else(|| CliError::parse("--mu is required"))?;
        Composition::new(parts).map_err(|e| CliError::parse(e.to_string()))
    }

    fn n(&self) -> Result<usize, CliError> {
        self.n.ok_or_else(|| CliError::parse("--n is required"))
    }

    /// `--mu` if given, otherwise every composition of `--n`.
    fn compositions(&self) -> Result<Vec<Composition>, CliError> {
        match self.mu {
            Some(_) => Ok(vec![self.mu()?]),
            None => Ok(Composition::all_of(self.n()?)),
        }
    }

    fn read_input(&self) -> Result<Value, CliError> {
        let path = self.input.as_ref().ok_or_else(|| CliError::parse("--input is required"))?;
        let text = std::fs::read_to_string(path).map_err(|e| CliError::parse(format!("{}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| CliError::parse(format!("{}: {e}", path.display())))
    }
}

/// Parses `args` (including the program name), runs the command, and
/// returns the exit code. Results go to `out` (or `--output`), diagnostics
/// to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                EXIT_OK
            } else {
                let _ = write!(err, "{e}");
                EXIT_USAGE
            };
        }
    };
    let result = dispatch(&cli);
    let (text, code) = match result {
        Ok(output) => output,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            return e.code;
        }
    };
    let written = match &cli.config.output {
        Some(path) => std::fs::write(path, &text).map_err(|e| e.to_string()),
        None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: {e}");
        return EXIT_USAGE;
    }
    code
}

fn dispatch(cli: &Cli) -> Result<(String, i32), CliError> {
    let config = &cli.config;
    match cli.command {
        Command::Enum { kind } => cmd_enumerate(kind, config).map(|s| (s, EXIT_OK)),
        Command::Map { direction } => cmd_map(direction, config).map(|s| (s, EXIT_OK)),
        Command::Verify { check } => cmd_verify(check, config),
    }
}

fn render_records(records: &[Value], columns: &[&str], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Json => {
            for r in records {
                out.push_str(&r.to_string());
                out.push('\n');
            }
            out.push_str(&json!({ "count": records.len() }).to_string());
            out.push('\n');
        }
        Format::Tsv => {
            out.push_str(&columns.join("\t"));
            out.push('\n');
            for r in records {
                out.push_str(&json::tsv_cells(r, columns));
                out.push('\n');
            }
            out.push_str(&format!("#count\t{}\n", records.len()));
        }
    }
    out
}

fn cmd_enumerate(kind: EnumKind, config: &RunConfig) -> Result<String, CliError> {
    let field = config.field()?;
    let (records, columns): (Vec<Value>, &[&str]) = match kind {
        EnumKind::NMu => {
            let mu = config.mu()?;
            guard::check("|N|", guard::monomial_count(field.q(), mu.size()), guard::ENUM_MAX)?;
            let records = enumerate_n_mu(&field, &mu).iter().map(|v| json::monomial_to_json(&field, v)).collect();
            (records, &["perm", "entries"])
        }
        EnumKind::MMu => {
            let mu = config.mu()?;
            guard::check("|N|", guard::monomial_count(field.q(), mu.size()), guard::ENUM_MAX)?;
            let records = enumerate_m_mu(&field, &mu).iter().map(|a| json::poly_matrix_to_json(&field, a)).collect();
            (records, &["mu", "entries"])
        }
        EnumKind::Irreducibles => {
            let max = config.max_deg.ok_or_else(|| CliError::parse("--max-deg is required"))?;
            guard::check("q^max_deg", guard::saturating_pow(field.q() as u64, max as u64), guard::ENUM_MAX)?;
            let labels = enumerate_irreducibles(&field, max).map_err(|e| CliError::parse(e.to_string()))?;
            let records = labels
                .iter()
                .map(|f| json!({ "poly": f.to_text(&field), "degree": f.degree().unwrap_or(0) }))
                .collect();
            (records, &["poly", "degree"])
        }
        EnumKind::Pairs => {
            let mu = config.mu()?;
            guard::check("|N|", guard::monomial_count(field.q(), mu.size()), guard::ENUM_MAX)?;
            let records = enumerate_pairs(&field, &mu)?.iter().map(|(p, q)| json::pair_to_json(&field, p, q)).collect();
            (records, &["P", "Q"])
        }
    };
    Ok(render_records(&records, columns, config.format))
}

fn cmd_map(direction: MapDirection, config: &RunConfig) -> Result<String, CliError> {
    let input = config.read_input()?;
    let apply = |record: &Value| -> Result<Value, CliError> {
        match direction {
            MapDirection::AToV => {
                let field = config.field()?;
                let a = json::poly_matrix_from_json(&field, record)?;
                if let Some(parts) = config.parts()? {
                    if parts != a.mu().parts() {
                        return Err(CliError::parse(format!(
                            "--mu {parts:?} disagrees with the input mu {:?}",
                            a.mu().parts()
                        )));
                    }
                }
                Ok(json::monomial_to_json(&field, &v_of_matrix(&a, &field)))
            }
            MapDirection::VToA => {
                let field = config.field()?;
                let mu = config.mu()?;
                let v = json::monomial_from_json(&field, record)?;
                Ok(json::poly_matrix_to_json(&field, &matrix_of_v(&v, &mu, &field)?))
            }
            MapDirection::Rsk => {
                let b = json::degree_matrix_from_json(record)?;
                let arr = two_line_array(&b);
                let (p, q) = rsk_classical(&b);
                Ok(json!({
                    "two_line": { "top": arr.top(), "bottom": arr.bottom() },
                    "P": json::tableau_to_json(&p),
                    "Q": json::tableau_to_json(&q),
                }))
            }
            MapDirection::RskGeneral => {
                let field = config.field()?;
                let a = json::poly_matrix_from_json(&field, record)?;
                let (p, q) = rsk_generalized(&a, &field)?;
                Ok(json::pair_to_json(&field, &p, &q))
            }
        }
    };
    // A top-level array is a batch of records, unless it is a bare matrix for rsk.
    let batch = matches!(direction, MapDirection::Rsk)
        && input
            .as_array()
            .is_some_and(|rows| rows.iter().all(|r| r.as_array().is_some_and(|x| x.iter().all(Value::is_number))));
    let outputs = match input.as_array() {
        Some(items) if !batch => items.iter().map(apply).collect::<Result<Vec<_>, _>>()?,
        _ => vec![apply(&input)?],
    };
    let mut text = String::new();
    match config.format {
        Format::Json => {
            let value =
                if input.is_array() && !batch { Value::Array(outputs) } else { outputs.into_iter().next().unwrap() };
            text.push_str(&value.to_string());
            text.push('\n');
        }
        Format::Tsv => {
            let columns: &[&str] = match direction {
                MapDirection::AToV => &["perm", "entries"],
                MapDirection::VToA => &["mu", "entries"],
                MapDirection::Rsk => &["two_line", "P", "Q"],
                MapDirection::RskGeneral => &["P", "Q"],
            };
            text.push_str(&columns.join("\t"));
            text.push('\n');
            for r in &outputs {
                text.push_str(&json::tsv_cells(r, columns));
                text.push('\n');
            }
        }
    }
    Ok(text)
}

fn cmd_verify(check: VerifyCheck, config: &RunConfig) -> Result<(String, i32), CliError> {
    let mut report = match check {
        VerifyCheck::Bijection => bijection_check(&config.field()?, &config.mu()?)?,
        VerifyCheck::DimIdentity => dim_identity_check(&config.field()?, &config.mu()?)?,
        VerifyCheck::RskBijectivity => rsk_bijectivity_check(&config.field()?, &config.mu()?)?,
        VerifyCheck::Basis => combined("basis", config, |f, mu| Ok(basis_check(f, mu)?))?,
        VerifyCheck::Levi => combined("levi", config, |f, mu| Ok(levi_embedding_check(f, mu)?))?,
        VerifyCheck::Commutativity => {
            let n = match (config.n, config.parts()?) {
                (Some(n), _) => n,
                (None, Some(parts)) if parts.len() == 1 => parts[0],
                _ => return Err(CliError::parse("--n is required")),
            };
            commutativity_check(&config.field()?, n)?
        }
        VerifyCheck::Cosets => {
            let field = config.field()?;
            let n = config.n()?;
            let start = std::time::Instant::now();
            let mut report = CheckReport::new("cosets", n, field.q(), None);
            match double_coset_reps(&field, n) {
                Ok(cosets) => {
                    let rows: Vec<Value> = cosets
                        .iter()
                        .map(|(v, size)| json!({ "v": json::monomial_to_json(&field, v), "size": size }))
                        .collect();
                    report.detail("group_order", guard::gl_order(field.q(), n));
                    report.detail("cosets", rows);
                }
                Err(OracleError::Counterexample(msg)) => report.fail(msg),
                Err(e) => return Err(e.into()),
            }
            report.time("cosets", start);
            report
        }
        VerifyCheck::Pieri => {
            let nu = Partition::new(config.parts()?.unwrap_or_default()).map_err(|e| CliError::parse(e.to_string()))?;
            let n = config.n()?;
            let vars = config.vars.unwrap_or(nu.size() + n).max(nu.len() + 1);
            pieri_check(&nu, n, vars)?
        }
    };
    if config.no_timings {
        report.timings.clear();
    }
    let code = if report.pass { EXIT_OK } else { EXIT_COUNTEREXAMPLE };
    let text = match config.format {
        Format::Json => serde_json::to_string_pretty(&report).expect("reports serialize") + "\n",
        Format::Tsv => {
            let value = serde_json::to_value(&report).expect("reports serialize");
            let mut text = String::new();
            for (k, v) in value.as_object().expect("report is an object") {
                let cell = match v {
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                };
                text.push_str(&format!("{k}\t{cell}\n"));
            }
            text
        }
    };
    Ok((text, code))
}

/// Runs a per-composition check for `--mu`, or for every composition of `--n`.
fn combined(
    name: &str,
    config: &RunConfig,
    check: impl Fn(&FieldSpec, &Composition) -> Result<CheckReport, CliError>,
) -> Result<CheckReport, CliError> {
    let field = config.field()?;
    let comps = config.compositions()?;
    if comps.len() == 1 {
        return check(&field, &comps[0]);
    }
    let mut report = CheckReport::new(name, config.n()?, field.q(), None);
    let mut checked = Vec::new();
    for mu in &comps {
        report.absorb(check(&field, mu)?);
        checked.push(json!(mu.parts()));
    }
    report.detail("compositions", checked);
    Ok(report)
}
