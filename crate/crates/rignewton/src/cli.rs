//! Command-line front end: parse a (root datum, Galois action) description,
//! run one operation, and emit a deterministic JSON report on stdout.
//!
//! Exit codes: 0 on success, 2 on input validation errors (with a
//! diagnostic naming the violated invariant on stderr), 1 on an internal
//! assertion failure.

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::casebook::{run_all, run_case, CaseReport, CASE_IDS};
use crate::error::{Error, Result};
use crate::galois::{build_action, relative_weyl_f, GaloisAction};
use crate::linalg::{Int, IntMatrix, Rat};
use crate::newton::{
    alcove_normalize, facet_indices, gamma_centralizer, AffineStep, CentralizerReport, FacetVertex,
    TorsionCocharacter,
};
use crate::rootdata::{
    base_and_highest, build_root_datum, direct_sum, torus, Family, Isogeny, RootDatum, Subsystem,
};
use crate::tate::{
    band_image_contains, group_by_relative_weyl, levi_suitable_characters, realize_twisted_levi,
    tn_group_torus,
};

const COORDINATE_HELP: &str = "\
Input conventions:
  --datum     built-in shorthand 'G2:sc', 'A:2:ad', 'C4:sc', 'torus:1', or a
              '+'-joined direct sum such as 'A:1:sc+A:1:sc+torus:1'; explicit
              roots/coroots go through --input JSON.
  --action    'trivial', 'inversion', 'swap:i,j' (0-based coordinates), or
              explicit generator matrices through --input JSON.
  --nu        comma-separated rationals 'p/q'. For data whose simple roots
              span the whole space the coordinates are fundamental-coweight
              coordinates: entry k is the pairing of nu against the k-th
              simple root, the simple roots being sorted in descending
              lexicographic order of their coefficient vectors (for G2 the
              short root comes first). For tori and non-semisimple sums the
              coordinates are raw cocharacter coordinates. Prefix with
              'raw:' to force raw coordinates.
  --input     JSON file with top-level field \"schema\": 1 and fields
              datum/action/nu/lambda/level/subsystem; matrices are row-major
              nested integer arrays, rationals are 'p/q' strings. Inline
              flags override file fields.";

#[derive(Parser)]
#[command(
    name = "rignewton",
    about = "Exact combinatorics of torsion cocharacters: centralizers, alcove forms, \
             Tate-Nakayama groups, band images, twisted-Levi realizations",
    after_long_help = COORDINATE_HELP
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Centralizer subsystems of a torsion cocharacter under a Galois action
    Centralizer {
        #[arg(long)]
        datum: Option<String>,
        #[arg(long)]
        action: Option<String>,
        #[arg(long)]
        nu: Option<String>,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Alcove-normalize a rational cocharacter
    Alcove {
        #[arg(long)]
        datum: Option<String>,
        #[arg(long)]
        nu: Option<String>,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Facet index set of an alcove-normalized point
    Facet {
        #[arg(long)]
        datum: Option<String>,
        #[arg(long)]
        nu: Option<String>,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Finite-level Tate-Nakayama group of a torus
    TnGroup {
        #[arg(long)]
        datum: Option<String>,
        #[arg(long)]
        action: Option<String>,
        #[arg(long)]
        level: Option<u64>,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Band-image membership of a torsion cocharacter
    BandImage {
        #[arg(long)]
        datum: Option<String>,
        #[arg(long)]
        action: Option<String>,
        #[arg(long)]
        nu: Option<String>,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Realize a Levi subsystem as a Galois-intersected centralizer
    RealizeLevi {
        #[arg(long)]
        datum: Option<String>,
        #[arg(long)]
        action: Option<String>,
        /// Comma-separated integer cocharacter (raw coordinates)
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Enumerate level-n characters landing in the center of a Levi
    LeviSuitable {
        #[arg(long)]
        datum: Option<String>,
        #[arg(long)]
        action: Option<String>,
        #[arg(long)]
        level: Option<u64>,
        /// Comma-separated root indices of the Levi subsystem (empty = torus)
        #[arg(long)]
        sub: Option<String>,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Galois-fixed relative Weyl group of a stable Levi subsystem
    RelativeWeyl {
        #[arg(long)]
        datum: Option<String>,
        #[arg(long)]
        action: Option<String>,
        #[arg(long)]
        sub: Option<String>,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Run the casebook of worked examples
    Casebook {
        #[command(subcommand)]
        command: CasebookCommand,
    },
}

#[derive(Subcommand)]
enum CasebookCommand {
    /// Run one case, or every case with --all
    Run {
        case: Option<String>,
        #[arg(long)]
        all: bool,
    },
    /// List the case inventory
    List,
}

/// JSON problem description; inline flags override these fields.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProblemSpec {
    #[serde(default = "default_schema")]
    schema: u32,
    datum: Option<DatumSpec>,
    action: Option<ActionSpec>,
    nu: Option<String>,
    lambda: Option<Vec<i64>>,
    level: Option<u64>,
    subsystem: Option<Vec<usize>>,
}

fn default_schema() -> u32 {
    1
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum DatumSpec {
    Shorthand(String),
    Explicit {
        rank: usize,
        roots: Vec<Vec<i64>>,
        coroots: Vec<Vec<i64>>,
        label: Option<String>,
    },
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum ActionSpec {
    Shorthand(String),
    Generators(Vec<Vec<Vec<i64>>>),
}

/// One line of JSON per invocation, tagged by the command name.
#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct Report {
    pub schema: u32,
    #[serde(flatten)]
    pub body: ReportBody,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
#[serde(tag = "command")]
pub enum ReportBody {
    #[serde(rename = "centralizer")]
    Centralizer {
        datum: String,
        nu: String,
        #[serde(flatten)]
        report: CentralizerReport,
    },
    #[serde(rename = "alcove")]
    Alcove {
        datum: String,
        point: Vec<String>,
        affine_word: Vec<AffineStep>,
        facet_indices: Vec<FacetVertex>,
    },
    #[serde(rename = "facet")]
    Facet {
        datum: String,
        point: Vec<String>,
        facet_indices: Vec<FacetVertex>,
    },
    #[serde(rename = "tn-group")]
    TnGroup {
        datum: String,
        level: u64,
        invariant_factors: Vec<i64>,
        order: i64,
        kernel_basis: Vec<Vec<i64>>,
    },
    #[serde(rename = "band-image")]
    BandImage {
        datum: String,
        nu: String,
        contains: bool,
        witness: Option<Vec<i64>>,
    },
    #[serde(rename = "realize-levi")]
    RealizeLevi {
        datum: String,
        lambda: Vec<i64>,
        level: String,
        nu: String,
        #[serde(flatten)]
        report: CentralizerReport,
    },
    #[serde(rename = "levi-suitable")]
    LeviSuitable {
        datum: String,
        level: u64,
        subsystem: Vec<usize>,
        entries: Vec<LeviSuitableLine>,
        /// Orbits of the entries under the rational relative Weyl group,
        /// as index sets.
        relative_weyl_orbits: Vec<Vec<usize>>,
    },
    #[serde(rename = "relative-weyl")]
    RelativeWeyl {
        datum: String,
        subsystem: Vec<usize>,
        ambient_weyl_order: usize,
        stabilizer_order: usize,
        f_rational_order: usize,
        f_rational_elements: Vec<Vec<Vec<i64>>>,
    },
    #[serde(rename = "casebook")]
    Casebook {
        cases: Vec<CaseReport>,
        passed: usize,
        total: usize,
    },
    #[serde(rename = "casebook-list")]
    CasebookList { cases: Vec<String> },
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct LeviSuitableLine {
    pub nu: String,
    pub type_gamma: String,
    pub gamma_centralizer: Vec<usize>,
    pub levi_suitable: bool,
}

/// Parse a report produced by this tool.
pub fn parse_report(text: &str) -> Result<Report> {
    let report: Report = serde_json::from_str(text)
        .map_err(|e| Error::InvalidInput(format!("unreadable report: {e}")))?;
    if report.schema != 1 {
        return Err(Error::InvalidInput(format!(
            "unknown report schema {}",
            report.schema
        )));
    }
    Ok(report)
}

fn render(body: ReportBody) -> String {
    let report = Report { schema: 1, body };
    serde_json::to_string_pretty(&report).expect("reports serialize")
}

pub fn parse_rational(s: &str) -> Result<Rat> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<Int> {
        t.trim()
            .parse::<Int>()
            .map_err(|_| Error::InvalidInput(format!("bad integer '{t}'")))
    };
    match s.split_once('/') {
        Some((num, den)) => {
            let den = parse_int(den)?;
            if den.is_zero() {
                return Err(Error::InvalidInput("zero denominator".into()));
            }
            Ok(Rat::new(parse_int(num)?, den))
        }
        None => Ok(Rat::from_integer(parse_int(s)?)),
    }
}

fn parse_rational_vec(s: &str, expect_len: usize) -> Result<Vec<Rat>> {
    let coords: Result<Vec<Rat>> = s.split(',').map(parse_rational).collect();
    let coords = coords?;
    if coords.len() != expect_len {
        return Err(Error::InvalidInput(format!(
            "expected {expect_len} coordinates, got {}",
            coords.len()
        )));
    }
    Ok(coords)
}

fn parse_int_vec(s: &str, expect_len: usize) -> Result<Vec<Int>> {
    let parsed: Result<Vec<Int>> = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<Int>()
                .map_err(|_| Error::InvalidInput(format!("bad integer '{t}'")))
        })
        .collect();
    let parsed = parsed?;
    if parsed.len() != expect_len {
        return Err(Error::InvalidInput(format!(
            "expected {expect_len} coordinates, got {}",
            parsed.len()
        )));
    }
    Ok(parsed)
}

pub fn parse_datum(spec: &str) -> Result<RootDatum> {
    let factors: Vec<&str> = spec.split('+').map(str::trim).collect();
    let mut data = Vec::new();
    let mut central = 0usize;
    for f in &factors {
        if let Some(rank) = f.strip_prefix("torus:") {
            central += rank
                .parse::<usize>()
                .map_err(|_| Error::InvalidInput(format!("bad torus rank in '{f}'")))?;
            continue;
        }
        data.push(parse_simple_datum(f)?);
    }
    match (data.len(), central) {
        (0, r) => Ok(torus(r)),
        (1, 0) => Ok(data.pop().expect("one factor")),
        _ => Ok(direct_sum(&data, central)),
    }
}

fn parse_simple_datum(f: &str) -> Result<RootDatum> {
    let parts: Vec<&str> = f.split(':').collect();
    let (family_rank, isogeny) = match parts.as_slice() {
        [fr, iso] => (*fr, *iso),
        [fam, rank, iso] => {
            return parse_family(fam, rank, iso);
        }
        _ => return Err(Error::InvalidInput(format!("bad datum shorthand '{f}'"))),
    };
    let (fam, rank) = family_rank.split_at(1);
    parse_family(fam, rank, isogeny)
}

fn parse_family(fam: &str, rank: &str, iso: &str) -> Result<RootDatum> {
    let family = match fam {
        "A" => Family::A,
        "B" => Family::B,
        "C" => Family::C,
        "D" => Family::D,
        "E" => Family::E,
        "F" => Family::F,
        "G" => Family::G,
        other => return Err(Error::InvalidInput(format!("unknown family '{other}'"))),
    };
    let rank: usize = rank
        .parse()
        .map_err(|_| Error::InvalidInput(format!("bad rank '{rank}'")))?;
    let isogeny = match iso {
        "sc" => Isogeny::SimplyConnected,
        "ad" => Isogeny::Adjoint,
        other => return Err(Error::InvalidInput(format!("unknown isogeny '{other}'"))),
    };
    build_root_datum(family, rank, isogeny)
}

pub fn parse_action(spec: &str, datum: &RootDatum) -> Result<GaloisAction> {
    let rank = datum.rank();
    let generators: Vec<IntMatrix> = match spec.trim() {
        "trivial" => Vec::new(),
        "inversion" => vec![IntMatrix::identity(rank).neg()],
        other => {
            if let Some(pair) = other.strip_prefix("swap:") {
                let idx: Vec<&str> = pair.split(',').collect();
                let [i, j] = idx.as_slice() else {
                    return Err(Error::InvalidInput(format!("bad swap spec '{other}'")));
                };
                let i: usize = i
                    .parse()
                    .map_err(|_| Error::InvalidInput(format!("bad index '{i}'")))?;
                let j: usize = j
                    .parse()
                    .map_err(|_| Error::InvalidInput(format!("bad index '{j}'")))?;
                if i >= rank || j >= rank || i == j {
                    return Err(Error::InvalidInput(format!(
                        "swap indices out of range for rank {rank}"
                    )));
                }
                let mut m = IntMatrix::identity(rank);
                m.set(i, i, Int::zero());
                m.set(j, j, Int::zero());
                m.set(i, j, Int::from(1));
                m.set(j, i, Int::from(1));
                vec![m]
            } else {
                return Err(Error::InvalidInput(format!("unknown action '{other}'")));
            }
        }
    };
    build_action(datum, &generators)
}

/// Convert a `--nu` string to raw cocharacter coordinates, applying the
/// fundamental-coweight convention for semisimple data.
pub fn parse_nu(spec: &str, datum: &RootDatum) -> Result<Vec<Rat>> {
    if let Some(raw) = spec.strip_prefix("raw:") {
        return parse_rational_vec(raw, datum.rank());
    }
    let coords = parse_rational_vec(spec, datum.rank())?;
    let base = base_and_highest(datum, None)?;
    if base.simple_roots.len() != datum.rank() {
        // not semisimple: raw coordinates
        return Ok(coords);
    }
    // simple roots in descending lexicographic order of coefficient vector
    let mut simples = base.simple_roots.clone();
    simples.sort_by(|&a, &b| datum.root(b).cmp(datum.root(a)));
    // solve <x, s_k> = coords[k]
    let cols: Vec<Vec<Rat>> = simples
        .iter()
        .map(|&i| {
            datum
                .root(i)
                .iter()
                .map(|v| Rat::from_integer(v.clone()))
                .collect()
        })
        .collect();
    // x satisfies S^T x = coords where S has the simple roots as columns;
    // equivalently solve with the transposed column list
    let n = datum.rank();
    let tcols: Vec<Vec<Rat>> = (0..n)
        .map(|j| (0..n).map(|i| cols[i][j].clone()).collect())
        .collect();
    crate::linalg::rat_solve(&tcols, &coords)
        .ok_or_else(|| Error::InvalidInput("singular simple-root matrix".into()))
}

fn parse_sub(spec: &str) -> Result<Subsystem> {
    let spec = spec.trim();
    if spec.is_empty() || spec == "empty" {
        return Ok(Subsystem::empty());
    }
    let idx: Result<Vec<usize>> = spec
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidInput(format!("bad root index '{t}'")))
        })
        .collect();
    Ok(Subsystem::new(idx?))
}

fn load_spec(path: &Option<PathBuf>) -> Result<ProblemSpec> {
    match path {
        None => Ok(ProblemSpec::default()),
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", p.display())))?;
            let spec: ProblemSpec = serde_json::from_str(&text)
                .map_err(|e| Error::InvalidInput(format!("bad input JSON: {e}")))?;
            if spec.schema != 1 {
                return Err(Error::InvalidInput(format!(
                    "unsupported input schema {}",
                    spec.schema
                )));
            }
            Ok(spec)
        }
    }
}

fn int_mat(rows: &[Vec<i64>]) -> Result<IntMatrix> {
    let r = rows.len();
    let c = rows.first().map_or(0, |row| row.len());
    if rows.iter().any(|row| row.len() != c) {
        return Err(Error::InvalidInput("ragged matrix".into()));
    }
    Ok(IntMatrix::from_i64(
        r,
        c,
        &rows.iter().flatten().copied().collect::<Vec<_>>(),
    ))
}

fn resolve_datum(flag: &Option<String>, spec: &ProblemSpec) -> Result<RootDatum> {
    if let Some(s) = flag {
        return parse_datum(s);
    }
    match &spec.datum {
        Some(DatumSpec::Shorthand(s)) => parse_datum(s),
        Some(DatumSpec::Explicit {
            rank,
            roots,
            coroots,
            label,
        }) => {
            let to_vecs = |rows: &Vec<Vec<i64>>| -> Vec<Vec<Int>> {
                rows.iter()
                    .map(|r| r.iter().map(|&x| Int::from(x)).collect())
                    .collect()
            };
            RootDatum::new(
                *rank,
                to_vecs(roots),
                to_vecs(coroots),
                label.clone().unwrap_or_else(|| "explicit".into()),
            )
        }
        None => Err(Error::InvalidInput("missing --datum".into())),
    }
}

fn resolve_action(
    flag: &Option<String>,
    spec: &ProblemSpec,
    datum: &RootDatum,
) -> Result<GaloisAction> {
    if let Some(s) = flag {
        return parse_action(s, datum);
    }
    match &spec.action {
        Some(ActionSpec::Shorthand(s)) => parse_action(s, datum),
        Some(ActionSpec::Generators(gens)) => {
            let mats: Result<Vec<IntMatrix>> = gens.iter().map(|g| int_mat(g)).collect();
            build_action(datum, &mats?)
        }
        None => Err(Error::InvalidInput("missing --action".into())),
    }
}

fn resolve_nu(flag: &Option<String>, spec: &ProblemSpec, datum: &RootDatum) -> Result<Vec<Rat>> {
    let s = flag
        .clone()
        .or_else(|| spec.nu.clone())
        .ok_or_else(|| Error::InvalidInput("missing --nu".into()))?;
    parse_nu(&s, datum)
}

fn rat_vec_strings(v: &[Rat]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn int_to_i64(x: &Int) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::InvalidInput("value exceeds report range".into()))
}

fn int_vec_i64(v: &[Int]) -> Result<Vec<i64>> {
    v.iter().map(int_to_i64).collect()
}

fn matrix_rows_i64(m: &IntMatrix) -> Result<Vec<Vec<i64>>> {
    (0..m.rows()).map(|i| int_vec_i64(&m.row(i))).collect()
}

/// Execute one parsed invocation and produce the JSON report.
pub fn dispatch(cli: Cli) -> Result<String> {
    match cli.command {
        Command::Centralizer {
            datum,
            action,
            nu,
            input,
        } => {
            let spec = load_spec(&input)?;
            let d = resolve_datum(&datum, &spec)?;
            let a = resolve_action(&action, &spec, &d)?;
            let coords = resolve_nu(&nu, &spec, &d)?;
            let t = TorsionCocharacter::new(&coords);
            let report = gamma_centralizer(&d, &t, &a)?;
            Ok(render(ReportBody::Centralizer {
                datum: d.label.clone(),
                nu: t.to_string(),
                report,
            }))
        }
        Command::Alcove { datum, nu, input } => {
            let spec = load_spec(&input)?;
            let d = resolve_datum(&datum, &spec)?;
            let coords = resolve_nu(&nu, &spec, &d)?;
            let base = base_and_highest(&d, None)?;
            let form = alcove_normalize(&d, &base, &coords)?;
            Ok(render(ReportBody::Alcove {
                datum: d.label.clone(),
                point: rat_vec_strings(&form.point),
                affine_word: form.affine_word,
                facet_indices: form.facet_indices,
            }))
        }
        Command::Facet { datum, nu, input } => {
            let spec = load_spec(&input)?;
            let d = resolve_datum(&datum, &spec)?;
            let coords = resolve_nu(&nu, &spec, &d)?;
            let base = base_and_highest(&d, None)?;
            let facets = facet_indices(&d, &base, &coords)?;
            Ok(render(ReportBody::Facet {
                datum: d.label.clone(),
                point: rat_vec_strings(&coords),
                facet_indices: facets,
            }))
        }
        Command::TnGroup {
            datum,
            action,
            level,
            input,
        } => {
            let spec = load_spec(&input)?;
            let d = resolve_datum(&datum, &spec)?;
            let a = resolve_action(&action, &spec, &d)?;
            let n = level
                .or(spec.level)
                .ok_or_else(|| Error::InvalidInput("missing --level".into()))?;
            let result = tn_group_torus(d.rank(), &a, &Int::from(n))?;
            Ok(render(ReportBody::TnGroup {
                datum: d.label.clone(),
                level: n,
                invariant_factors: int_vec_i64(&result.group.invariant_factors)?,
                order: int_to_i64(&result.group.order())?,
                kernel_basis: result
                    .kernel_basis
                    .iter()
                    .map(|v| int_vec_i64(v))
                    .collect::<Result<Vec<_>>>()?,
            }))
        }
        Command::BandImage {
            datum,
            action,
            nu,
            input,
        } => {
            let spec = load_spec(&input)?;
            let d = resolve_datum(&datum, &spec)?;
            let a = resolve_action(&action, &spec, &d)?;
            let coords = resolve_nu(&nu, &spec, &d)?;
            let t = TorsionCocharacter::new(&coords);
            let (contains, witness) = band_image_contains(&d, &a, &t);
            Ok(render(ReportBody::BandImage {
                datum: d.label.clone(),
                nu: t.to_string(),
                contains,
                witness: witness.map(|w| int_vec_i64(&w)).transpose()?,
            }))
        }
        Command::RealizeLevi {
            datum,
            action,
            lambda,
            input,
        } => {
            let spec = load_spec(&input)?;
            let d = resolve_datum(&datum, &spec)?;
            let a = resolve_action(&action, &spec, &d)?;
            let lam = match (lambda, &spec.lambda) {
                (Some(s), _) => parse_int_vec(&s, d.rank())?,
                (None, Some(v)) => {
                    if v.len() != d.rank() {
                        return Err(Error::InvalidInput("lambda has wrong length".into()));
                    }
                    v.iter().map(|&x| Int::from(x)).collect()
                }
                (None, None) => return Err(Error::InvalidInput("missing --lambda".into())),
            };
            let (level, nu, report) = realize_twisted_levi(&d, &a, &lam)?;
            Ok(render(ReportBody::RealizeLevi {
                datum: d.label.clone(),
                lambda: int_vec_i64(&lam)?,
                level: level.to_string(),
                nu: nu.to_string(),
                report,
            }))
        }
        Command::LeviSuitable {
            datum,
            action,
            level,
            sub,
            input,
        } => {
            let spec = load_spec(&input)?;
            let d = resolve_datum(&datum, &spec)?;
            let a = resolve_action(&action, &spec, &d)?;
            let n = level
                .or(spec.level)
                .ok_or_else(|| Error::InvalidInput("missing --level".into()))?;
            let m_sub = match (&sub, &spec.subsystem) {
                (Some(s), _) => parse_sub(s)?,
                (None, Some(v)) => Subsystem::new(v.clone()),
                (None, None) => Subsystem::empty(),
            };
            let entries = levi_suitable_characters(&d, &m_sub, &a, n)?;
            let relative_weyl_orbits = group_by_relative_weyl(&d, &m_sub, &a, &entries)?;
            Ok(render(ReportBody::LeviSuitable {
                datum: d.label.clone(),
                level: n,
                subsystem: m_sub.root_indices.clone(),
                entries: entries
                    .into_iter()
                    .map(|e| LeviSuitableLine {
                        nu: e.nu.to_string(),
                        type_gamma: e.report.type_gamma.to_string(),
                        gamma_centralizer: e.report.gamma_centralizer.root_indices,
                        levi_suitable: e.levi_suitable,
                    })
                    .collect(),
                relative_weyl_orbits,
            }))
        }
        Command::RelativeWeyl {
            datum,
            action,
            sub,
            input,
        } => {
            let spec = load_spec(&input)?;
            let d = resolve_datum(&datum, &spec)?;
            let a = resolve_action(&action, &spec, &d)?;
            let m_sub = match (&sub, &spec.subsystem) {
                (Some(s), _) => parse_sub(s)?,
                (None, Some(v)) => Subsystem::new(v.clone()),
                (None, None) => Subsystem::empty(),
            };
            let report = relative_weyl_f(&d, &m_sub, &a)?;
            Ok(render(ReportBody::RelativeWeyl {
                datum: d.label.clone(),
                subsystem: m_sub.root_indices.clone(),
                ambient_weyl_order: report.ambient_weyl_order,
                stabilizer_order: report.stabilizer_order,
                f_rational_order: report.f_rational_elements.len(),
                f_rational_elements: report
                    .f_rational_elements
                    .iter()
                    .map(matrix_rows_i64)
                    .collect::<Result<Vec<_>>>()?,
            }))
        }
        Command::Casebook { command } => match command {
            CasebookCommand::Run { case, all } => {
                let cases = if all {
                    run_all()
                } else {
                    let id =
                        case.ok_or_else(|| Error::InvalidInput("pass a case id or --all".into()))?;
                    vec![run_case(&id)?]
                };
                let passed = cases.iter().filter(|c| c.passed()).count();
                let total = cases.len();
                Ok(render(ReportBody::Casebook {
                    cases,
                    passed,
                    total,
                }))
            }
            CasebookCommand::List => Ok(render(ReportBody::CasebookList {
                cases: CASE_IDS.iter().map(|s| s.to_string()).collect(),
            })),
        },
    }
}

/// Entry point used by the binary: returns the process exit code.
pub fn main_entry() -> i32 {
    let cli = Cli::parse();
    let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| dispatch(cli)));
    match outcome {
        Ok(Ok(json)) => {
            println!("{json}");
            0
        }
        Ok(Err(err)) => {
            eprintln!("error: {err}");
            2
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            eprintln!("internal assertion failure: {msg}");
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    #[test]
    fn parse_datum_shorthands() {
        assert_eq!(parse_datum("G2:sc").unwrap().num_roots(), 12);
        assert_eq!(parse_datum("A:2:ad").unwrap().num_roots(), 6);
        assert_eq!(parse_datum("C4:sc").unwrap().num_roots(), 32);
        assert_eq!(parse_datum("torus:3").unwrap().rank(), 3);
        let sum = parse_datum("A:1:sc+A:1:sc+torus:1").unwrap();
        assert_eq!((sum.rank(), sum.num_roots()), (3, 4));
        assert!(parse_datum("Z9:sc").is_err());
    }

    #[test]
    fn parse_nu_fundamental_coweights() {
        let g2 = parse_datum("G2:sc").unwrap();
        // coweight coordinates: first entry pairs with the short simple root
        let coords = parse_nu("1/2,0", &g2).unwrap();
        let a = g2.index_of_root(&[Int::from(1), Int::from(0)]).unwrap();
        let b = g2.index_of_root(&[Int::from(0), Int::from(1)]).unwrap();
        assert_eq!(crate::linalg::dot_rat(&coords, g2.root(a)), rat(1, 2));
        assert_eq!(crate::linalg::dot_rat(&coords, g2.root(b)), rat(0, 1));
        // raw prefix bypasses the conversion
        let raw = parse_nu("raw:1/2,0", &g2).unwrap();
        assert_eq!(raw, vec![rat(1, 2), rat(0, 1)]);
        // tori take raw coordinates
        let t = parse_datum("torus:2").unwrap();
        assert_eq!(parse_nu("1/3,2/3", &t).unwrap(), vec![rat(1, 3), rat(2, 3)]);
    }

    #[test]
    fn parse_action_shorthands() {
        let t2 = parse_datum("torus:2").unwrap();
        assert_eq!(parse_action("trivial", &t2).unwrap().order(), 1);
        assert_eq!(parse_action("inversion", &t2).unwrap().order(), 2);
        assert_eq!(parse_action("swap:0,1", &t2).unwrap().order(), 2);
        assert!(parse_action("swap:0,2", &t2).is_err());
        assert!(parse_action("frobenius", &t2).is_err());
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_rational("-2").unwrap(), rat(-2, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
