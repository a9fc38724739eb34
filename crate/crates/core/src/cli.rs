//! The `dpcoh` command line: JSON in, JSON (or CSV tables) out.

use std::io::Write;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{Value, json};
use sha2::{Digest, Sha256};

use crate::bracket::{TensorP, is_poisson_tensor, kontsevich_bracket};
use crate::classical::{CommPoly, classical_cohomology, trace_map};
use crate::cohomology::{Caps, cohomology_summary};
use crate::error::{Error, Result};
use crate::finalg::{
    AlgebraDoc, StructureConstants, catalogue_2dim, catalogue_entry, compare_weight1, equivalence_trials,
    hochschild_dims, is_associative,
};
use crate::necklace::{PolyField, PolyFieldDoc};

/// Environment variable for cap overrides, e.g. `max_stars=4,max_chain_dim=50000`.
pub const CAPS_ENV: &str = "DPCOH_CAPS";

#[derive(Parser, Debug)]
#[command(name = "dpcoh", version, about = "Double Poisson tensors, necklace brackets and their cohomology")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Args, Debug)]
struct Global {
    /// Output format; csv is only available for dimension tables.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Largest star-degree of any chain group built (also via DPCOH_CAPS).
    #[arg(long, global = true)]
    max_stars: Option<usize>,
    #[arg(long, global = true)]
    max_weight: Option<usize>,
    /// Largest chain group, counted in basis elements.
    #[arg(long, global = true)]
    max_chain_dim: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Computes {P, P} for a star-degree-2 field.
    CheckTensor { file: PathBuf },
    /// Brackets two fields.
    Bracket { a: PathBuf, b: PathBuf },
    /// Cohomology of d_P on a grid of bidegrees.
    Cohomology {
        file: PathBuf,
        /// Star degrees, e.g. `0..1`.
        #[arg(long, value_parser = parse_range, default_value = "0..1")]
        stars: RangeInclusive<usize>,
        /// Weights, e.g. `0..5`.
        #[arg(long, value_parser = parse_range, default_value = "0..4")]
        weights: RangeInclusive<usize>,
        /// Also print cocycles representing a basis of each group.
        #[arg(long)]
        representatives: bool,
    },
    /// Linear tensors and associative algebras.
    ClassifyLinear {
        #[arg(long, conflicts_with = "random")]
        catalogue: bool,
        /// Number of random trials.
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        dim: usize,
    },
    /// Hochschild cohomology of an algebra given by a JSON file or a catalogue name.
    Hochschild {
        #[arg(required_unless_present = "algebra")]
        file: Option<PathBuf>,
        /// Catalogue entry, by name or ASCII slug (e.g. `B21`).
        #[arg(long, conflicts_with = "file")]
        algebra: Option<String>,
        #[arg(long, default_value_t = 3)]
        max: usize,
        /// Also compares with weight-1 d_P-cohomology.
        #[arg(long)]
        compare: bool,
    },
    /// Poisson cohomology of ψ ∂x∧∂y on the plane.
    Classical {
        #[arg(long)]
        psi: String,
        #[arg(long, default_value_t = 6)]
        max_degree: u32,
    },
    /// Trace of a field over the two-loop quiver to the plane.
    Trace { file: PathBuf },
}

fn parse_range(s: &str) -> std::result::Result<RangeInclusive<usize>, String> {
    let bad = || format!("expected `a..b` or a single number, got `{s}`");
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
        None => (s, s),
    };
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(format!("empty range `{s}`"));
    }
    Ok(lo..=hi)
}

/// Caps from the defaults, then the environment, then flags.
fn resolve_caps(g: &Global, env: Option<&str>) -> Result<Caps> {
    let mut caps = Caps::default();
    if let Some(text) = env {
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("{CAPS_ENV}: expected key=value, got `{item}`")))?;
            let v: usize = v.trim().parse().map_err(|_| Error::Parse(format!("{CAPS_ENV}: bad number in `{item}`")))?;
            match k.trim() {
                "max_stars" => caps.max_stars = v,
                "max_weight" => caps.max_weight = v,
                "max_chain_dim" => caps.max_chain_dim = v,
                other => return Err(Error::Parse(format!("{CAPS_ENV}: unknown key `{other}`"))),
            }
        }
    }
    caps.max_stars = g.max_stars.unwrap_or(caps.max_stars);
    caps.max_weight = g.max_weight.unwrap_or(caps.max_weight);
    caps.max_chain_dim = g.max_chain_dim.unwrap_or(caps.max_chain_dim);
    if caps.max_chain_dim == 0 {
        return Err(Error::Parse("max_chain_dim must be positive".into()));
    }
    Ok(caps)
}

#[derive(Serialize)]
struct Header {
    tool: &'static str,
    version: &'static str,
    command: &'static str,
    input_sha256: String,
    caps: Caps,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
}

struct Inputs(Sha256);

impl Inputs {
    fn new() -> Inputs {
        Inputs(Sha256::new())
    }

    fn absorb(&mut self, bytes: &[u8]) {
        // length-prefixed so that input boundaries are part of the hash
        self.0.update((bytes.len() as u64).to_le_bytes());
        self.0.update(bytes);
    }

    fn read(&mut self, path: &Path) -> Result<String> {
        let text = std::fs::read_to_string(path)?;
        self.absorb(text.as_bytes());
        Ok(text)
    }

    fn field(&mut self, path: &Path) -> Result<PolyField> {
        let doc: PolyFieldDoc = serde_json::from_str(&self.read(path)?)?;
        PolyField::from_doc(&doc)
    }

    fn digest(self) -> String {
        hex::encode(self.0.finalize())
    }
}

enum Report {
    Json(Value),
    Table { json: Value, columns: Vec<&'static str>, rows: Vec<Vec<String>> },
}

fn with_header(header: Header, body: Value) -> Value {
    let mut out = json!({ "header": header });
    if let (Value::Object(o), Value::Object(b)) = (&mut out, body) {
        o.extend(b);
    }
    out
}

fn run(cmd: &Command, caps: &Caps) -> Result<(&'static str, Option<u64>, String, Report)> {
    let mut inputs = Inputs::new();
    let (name, seed, report) = match cmd {
        Command::CheckTensor { file } => {
            let p = TensorP::new(inputs.field(file)?)?;
            let check = is_poisson_tensor(&p)?;
            let body = json!({
                "is_poisson": check.is_poisson,
                "obstruction": check.obstruction.to_doc().terms,
            });
            ("check-tensor", None, Report::Json(body))
        }
        Command::Bracket { a, b } => {
            let (a, b) = (inputs.field(a)?, inputs.field(b)?);
            let r = kontsevich_bracket(&a, &b)?;
            ("bracket", None, Report::Json(json!({ "result": r.to_doc(), "display": r.to_string() })))
        }
        Command::Cohomology { file, stars, weights, representatives } => {
            let p = TensorP::new(inputs.field(file)?)?;
            let reports = cohomology_summary(&p, stars.clone(), weights.clone(), caps, *representatives)?;
            let mut rows = Vec::new();
            let entries: Vec<Value> = reports
                .iter()
                .map(|b| {
                    rows.push(
                        [b.k, b.w, b.dim_chain, b.dim_kernel, b.dim_image_in, b.dim_h]
                            .iter()
                            .map(ToString::to_string)
                            .chain([b.unverified.to_string()])
                            .collect(),
                    );
                    let mut e = json!({
                        "k": b.k, "w": b.w, "dim_chain": b.dim_chain, "dim_kernel": b.dim_kernel,
                        "dim_image_in": b.dim_image_in, "dim_h": b.dim_h, "unverified": b.unverified,
                    });
                    if *representatives {
                        e["representatives"] = b.representatives.iter().map(|r| json!(r.to_string())).collect();
                    }
                    e
                })
                .collect();
            let columns = vec!["k", "w", "dim_chain", "dim_kernel", "dim_image_in", "dim_h", "unverified"];
            ("cohomology", None, Report::Table { json: json!({ "bidegrees": entries }), columns, rows })
        }
        Command::ClassifyLinear { catalogue, random, seed, dim } => match random {
            Some(n) => {
                inputs.absorb(format!("random {n} dim {dim}").as_bytes());
                let r = equivalence_trials(*dim, *n, *seed)?;
                ("classify-linear", Some(*seed), Report::Json(serde_json::to_value(r)?))
            }
            None if *catalogue => {
                inputs.absorb(b"catalogue");
                let entries = catalogue_2dim()
                    .iter()
                    .map(|e| -> Result<Value> {
                        let p = e.tensor();
                        Ok(json!({
                            "name": e.name,
                            "slug": e.slug,
                            "tensor": p.field().to_string(),
                            "is_associative": is_associative(&e.constants).0,
                            "is_poisson": is_poisson_tensor(&p)?.is_poisson,
                        }))
                    })
                    .collect::<Result<Vec<_>>>()?;
                ("classify-linear", None, Report::Json(json!({ "catalogue": entries })))
            }
            None => return Err(Error::Parse("classify-linear needs --catalogue or --random N".into())),
        },
        Command::Hochschild { file, algebra, max, compare } => {
            let c = match (file, algebra) {
                (Some(f), _) => {
                    let doc: AlgebraDoc = serde_json::from_str(&inputs.read(f)?)?;
                    StructureConstants::from_doc(&doc)?
                }
                (None, Some(name)) => {
                    inputs.absorb(name.as_bytes());
                    catalogue_entry(name)
                        .ok_or_else(|| Error::Parse(format!("no catalogue algebra `{name}`")))?
                        .constants
                }
                (None, None) => return Err(Error::Parse("hochschild needs a file or --algebra".into())),
            };
            let dims = hochschild_dims(&c, *max, caps)?;
            let mut body = json!({ "algebra": c.to_doc(), "degrees": dims });
            let mut columns = vec!["degree", "dim_chain", "rank_d", "dim_hh"];
            let mut rows: Vec<Vec<String>> = dims
                .iter()
                .map(|d| [d.degree, d.dim_chain, d.rank_d, d.dim_hh].iter().map(ToString::to_string).collect())
                .collect();
            if *compare {
                let cmp = compare_weight1(&c, *max, caps)?;
                columns.extend(["dim_hp_weight1", "dims_match", "intertwines"]);
                for (row, r) in rows.iter_mut().zip(&cmp) {
                    row.extend([r.dim_hp.to_string(), r.dims_match.to_string(), r.intertwines.to_string()]);
                }
                body["comparison"] = serde_json::to_value(&cmp)?;
            }
            ("hochschild", None, Report::Table { json: body, columns, rows })
        }
        Command::Classical { psi, max_degree } => {
            inputs.absorb(psi.as_bytes());
            let psi = CommPoly::parse(psi)?;
            let dims = classical_cohomology(&psi, *max_degree, caps)?;
            let rows = dims.iter().map(|d| vec![d.degree.to_string(), d.h0.to_string(), d.h1.to_string(), d.h2.to_string()]).collect();
            let body = json!({
                "psi": psi.to_string(),
                "degrees": dims,
                "totals": {
                    "h0": dims.iter().map(|d| d.h0).sum::<usize>(),
                    "h1": dims.iter().map(|d| d.h1).sum::<usize>(),
                    "h2": dims.iter().map(|d| d.h2).sum::<usize>(),
                },
            });
            ("classical", None, Report::Table { json: body, columns: vec!["degree", "h0", "h1", "h2"], rows })
        }
        Command::Trace { file } => {
            let t = trace_map(&inputs.field(file)?)?;
            ("trace", None, Report::Json(json!({ "result": t.to_doc(), "display": t.to_string() })))
        }
    };
    Ok((name, seed, inputs.digest(), report))
}

fn emit(out: &mut dyn Write, format: Format, header: Header, report: Report) -> Result<()> {
    match (format, report) {
        (Format::Json, Report::Json(body) | Report::Table { json: body, .. }) => {
            writeln!(out, "{}", serde_json::to_string_pretty(&with_header(header, body))?)?;
        }
        (Format::Csv, Report::Table { columns, rows, .. }) => {
            let caps = header.caps;
            let seed = header.seed.map_or(String::new(), |s| format!(" seed={s}"));
            writeln!(
                out,
                "# {} {} input_sha256={} max_stars={} max_weight={} max_chain_dim={}{seed}",
                header.tool, header.command, header.input_sha256, caps.max_stars, caps.max_weight, caps.max_chain_dim
            )?;
            writeln!(out, "{}", columns.join(","))?;
            for r in rows {
                writeln!(out, "{}", r.join(","))?;
            }
        }
        (Format::Csv, Report::Json(_)) => {
            return Err(Error::Parse(format!("csv output is only available for dimension tables, not `{}`", header.command)));
        }
    }
    Ok(())
}

/// Runs one command line; returns the process exit code. Errors go to stderr.
pub fn dispatch<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            if code == 0 {
                let _ = write!(out, "{e}");
            } else {
                eprint!("{e}");
            }
            return code;
        }
    };
    let result = (|| -> Result<()> {
        let env = std::env::var(CAPS_ENV).ok();
        let caps = resolve_caps(&cli.global, env.as_deref())?;
        let (command, seed, input_sha256, report) = run(&cli.command, &caps)?;
        let header = Header { tool: "dpcoh", version: env!("CARGO_PKG_VERSION"), command, input_sha256, caps, seed };
        emit(out, cli.global.format, header, report)
    })();
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("dpcoh: {e}");
            e.exit_code()
        }
    }
}
