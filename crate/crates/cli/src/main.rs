//! Command-line front end: JSON in, JSON out, with the verification sweep
//! as the headline subcommand.
//!
//! Exit codes: 0 success (sweep: all agree), 1 sweep disagreement, 2 usage
//! or input error, 3 cap or resource error.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hyperalg::alg_props::{self, Method, PropertyVerdict};
use hyperalg::betti;
use hyperalg::chordal;
use hyperalg::classify;
use hyperalg::comb_props;
use hyperalg::complex;
use hyperalg::hypergraph::{self, complete_multipartite};
use hyperalg::ideal::{self, MonomialIdeal};
use hyperalg::sweep::{run_sweep, SweepConfig};
use hyperalg::{Error, FieldSpec, Hypergraph, PartiteSpec, SimplicialComplex};

#[derive(Parser)]
#[command(name = "hyperalg", version, about = "Edge ideals and independence complexes: exact property oracles, closed forms, and verification sweeps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct InputArgs {
    /// Side sizes of a complete multipartite hypergraph, e.g. 1,1,2
    #[arg(long, value_delimiter = ',')]
    spec: Option<Vec<usize>>,
    /// Uniformity (edge size) for --spec
    #[arg(long)]
    s: Option<usize>,
    /// JSON input file; "-" or omitted reads stdin when --spec is absent
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum CertifyWhat {
    Shellable,
    Vd,
    Chordal,
}

#[derive(Subcommand)]
enum Command {
    /// Independence complex of a hypergraph
    Ind(InputArgs),
    /// Transversal hypergraph (all minimal vertex covers)
    Tr(InputArgs),
    /// Alexander dual of a complex (facets) or squarefree ideal (gens)
    Dual {
        /// JSON input file; "-" or omitted reads stdin
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Reduced homology profile of a complex
    Homology {
        #[command(flatten)]
        input: InputArgs,
        /// Coefficient field: q, f2, or fp:P
        #[arg(long, default_value = "q")]
        field: String,
    },
    /// Graded Betti table of the Stanley-Reisner quotient
    Betti {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value = "q")]
        field: String,
        /// Print only the raw JSON table
        #[arg(long)]
        json: bool,
        /// Override the vertex cap on the Hochster sum
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Run one property oracle
    Check {
        /// unmixed, cm, s_r, level, buchsbaum, l_cm, l_buchsbaum,
        /// gorenstein, ci, almost_ci, dual_ci, dual_cm, seq_cm, seq_s2,
        /// matroid, tight, chordal, linear_resolution, weakly_polymatroidal
        #[arg(long)]
        property: String,
        #[arg(long, default_value = "q")]
        field: String,
        #[arg(long)]
        l: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        /// Override the vertex caps on the exponential searches
        #[arg(long)]
        cap: Option<usize>,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Emit a certificate: a shelling order, a shedding tree, or a
    /// per-minor simplicial-vertex trace
    Certify {
        #[arg(long, value_enum)]
        what: CertifyWhat,
        /// Override the facet cap on the shelling search
        #[arg(long)]
        cap: Option<usize>,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Closed-form classification of a complete multipartite spec
    Classify {
        #[arg(long, value_delimiter = ',')]
        spec: Vec<usize>,
        #[arg(long)]
        s: usize,
        #[arg(long, default_value_t = 1)]
        l: usize,
        #[arg(long, default_value_t = 2)]
        r: usize,
    },
    /// Oracle-vs-closed-form verification sweep over a spec grid
    Sweep {
        #[arg(long, default_value_t = 2)]
        t_min: usize,
        #[arg(long, default_value_t = 5)]
        t_max: usize,
        #[arg(long, default_value_t = 3)]
        max_side: usize,
        #[arg(long, default_value_t = 9)]
        max_n: usize,
        /// Comma-separated fields, e.g. q,f2
        #[arg(long, value_delimiter = ',', default_values_t = vec!["q".to_string(), "f2".to_string()])]
        fields: Vec<String>,
        #[arg(long, default_value_t = 4)]
        l_max: usize,
        #[arg(long, default_value_t = 3)]
        r_max: usize,
        /// Worker threads; falls back to HYPERALG_JOBS, then rayon's default
        #[arg(long)]
        jobs: Option<usize>,
        /// JSONL output path; "-" writes stdout
        #[arg(long, default_value = "-")]
        output: String,
        /// Fault injection self-test: flips the one-balanced closed form
        #[arg(long, hide = true)]
        perturb: bool,
    },
}

struct CliError {
    message: String,
    code: u8,
}

impl CliError {
    fn usage(message: impl Into<String>) -> CliError {
        CliError { message: message.into(), code: 2 }
    }

    fn resource(message: impl Into<String>) -> CliError {
        CliError { message: message.into(), code: 3 }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        let code = match e {
            Error::CapExceeded { .. } | Error::InvalidSweepConfig(_) => 3,
            _ => 2,
        };
        CliError { message: e.to_string(), code }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> CliError {
        CliError::resource(format!("io error: {e}"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

/// Either kind of JSON object the file-based subcommands accept.
enum Doc {
    Hypergraph(Hypergraph),
    Complex(SimplicialComplex),
    Ideal(MonomialIdeal),
}

fn read_input(path: &Option<PathBuf>) -> Result<String, CliError> {
    match path {
        Some(p) if p.as_os_str() != "-" => Ok(fs::read_to_string(p)?),
        _ => {
            let mut buf = String::new();
            io::stdin().read_to_string(&mut buf)?;
            Ok(buf)
        }
    }
}

fn parse_doc(text: &str) -> Result<Doc, CliError> {
    let value: serde_json::Value = serde_json::from_str(text)
        .map_err(|e| CliError::usage(format!("invalid JSON: {e}")))?;
    let obj = value
        .as_object()
        .ok_or_else(|| CliError::usage("expected a JSON object"))?;
    let doc = if obj.contains_key("edges") {
        Doc::Hypergraph(
            serde_json::from_value(value.clone())
                .map_err(|e| CliError::usage(format!("bad hypergraph: {e}")))?,
        )
    } else if obj.contains_key("facets") || obj.contains_key("void") {
        Doc::Complex(
            serde_json::from_value(value.clone())
                .map_err(|e| CliError::usage(format!("bad complex: {e}")))?,
        )
    } else if obj.contains_key("gens") {
        Doc::Ideal(
            serde_json::from_value(value.clone())
                .map_err(|e| CliError::usage(format!("bad ideal: {e}")))?,
        )
    } else {
        return Err(CliError::usage(
            "expected a hypergraph {n,edges}, complex {n,facets}, or ideal {n,gens}",
        ));
    };
    Ok(doc)
}

fn parse_spec(sides: &[usize], s: Option<usize>) -> Result<PartiteSpec, CliError> {
    let s = s.ok_or_else(|| CliError::usage("--spec requires --s"))?;
    Ok(PartiteSpec::new(s, sides.to_vec())?)
}

impl InputArgs {
    fn doc(&self) -> Result<Doc, CliError> {
        if let Some(sides) = &self.spec {
            let spec = parse_spec(sides, self.s)?;
            return Ok(Doc::Hypergraph(complete_multipartite(&spec)));
        }
        parse_doc(&read_input(&self.input)?)
    }

    fn hypergraph(&self) -> Result<Hypergraph, CliError> {
        match self.doc()? {
            Doc::Hypergraph(h) => Ok(h),
            _ => Err(CliError::usage("this subcommand needs a hypergraph input")),
        }
    }

    /// A complex: given directly, or the independence complex of a given
    /// hypergraph.
    fn complex(&self) -> Result<SimplicialComplex, CliError> {
        match self.doc()? {
            Doc::Hypergraph(h) => Ok(hypergraph::independence_complex(&h)),
            Doc::Complex(c) => Ok(c),
            Doc::Ideal(_) => Err(CliError::usage("this subcommand needs a hypergraph or complex")),
        }
    }

    /// An ideal: given directly, the edge ideal of a hypergraph, or the
    /// face ideal of a complex.
    fn ideal(&self) -> Result<MonomialIdeal, CliError> {
        match self.doc()? {
            Doc::Hypergraph(h) => Ok(ideal::edge_ideal(&h)),
            Doc::Complex(c) => Ok(ideal::stanley_reisner(&c)?),
            Doc::Ideal(i) => Ok(i),
        }
    }
}

fn print_json<T: serde::Serialize>(value: &T) -> Result<(), CliError> {
    let line = serde_json::to_string(value)
        .map_err(|e| CliError::resource(format!("serialization failed: {e}")))?;
    println!("{line}");
    Ok(())
}

fn run(command: Command) -> Result<u8, CliError> {
    match command {
        Command::Ind(input) => {
            let h = input.hypergraph()?;
            print_json(&hypergraph::independence_complex(&h))?;
        }
        Command::Tr(input) => {
            let h = input.hypergraph()?;
            let tr = hypergraph::transversal_hypergraph(&h)?;
            let sets: Vec<Vec<usize>> = tr.members().iter().map(|m| m.to_vec()).collect();
            print_json(&serde_json::json!({ "n": tr.n_vertices(), "sets": sets }))?;
        }
        Command::Dual { input } => match parse_doc(&read_input(&input)?)? {
            Doc::Complex(c) => print_json(&c.alexander_dual()?)?,
            Doc::Ideal(i) => print_json(&i.dual()?)?,
            Doc::Hypergraph(_) => {
                return Err(CliError::usage(
                    "dual expects a complex or ideal; use `tr` for hypergraph duality",
                ))
            }
        },
        Command::Homology { input, field } => {
            let field = FieldSpec::parse(&field)?;
            let c = input.complex()?;
            let profile = hyperalg::homology::reduced_homology(&c, field);
            print_json(&profile)?;
        }
        Command::Betti { input, field, json, cap } => {
            let field = FieldSpec::parse(&field)?;
            let c = input.complex()?;
            let cap = cap.unwrap_or(betti::BETTI_VERTEX_CAP);
            let table = betti::graded_betti_with_cap(&c, field, cap)?;
            if !json {
                print!("{}", table.macaulay_rows());
            }
            print_json(&table)?;
        }
        Command::Check { property, field, l, r, cap, input } => {
            let field = FieldSpec::parse(&field)?;
            let verdict = check_property(&property, field, l, r, cap, &input)?;
            print_json(&verdict)?;
        }
        Command::Certify { what, cap, input } => match what {
            CertifyWhat::Shellable => {
                let c = input.complex()?;
                let cap = cap.unwrap_or(comb_props::SHELLING_FACET_CAP);
                let (value, cert) = comb_props::is_shellable_with_cap(&c, cap)?;
                print_json(&serde_json::json!({
                    "what": "shellable", "value": value, "certificate": cert,
                }))?;
            }
            CertifyWhat::Vd => {
                let c = input.complex()?;
                let (value, cert) = comb_props::is_vertex_decomposable(&c);
                print_json(&serde_json::json!({
                    "what": "vd", "value": value, "certificate": cert,
                }))?;
            }
            CertifyWhat::Chordal => {
                let h = input.hypergraph()?;
                let (value, trace) = chordal::is_chordal(&h);
                print_json(&serde_json::json!({
                    "what": "chordal", "value": value, "certificate": trace,
                }))?;
            }
        },
        Command::Classify { spec, s, l, r } => {
            let spec = PartiteSpec::new(s, spec)?;
            let report = classify::classify(&spec, l, r)?;
            print_json(&report)?;
        }
        Command::Sweep {
            t_min,
            t_max,
            max_side,
            max_n,
            fields,
            l_max,
            r_max,
            jobs,
            output,
            perturb,
        } => {
            let fields = fields
                .iter()
                .map(|f| FieldSpec::parse(f))
                .collect::<Result<Vec<_>, _>>()?;
            let jobs = jobs.or_else(|| {
                std::env::var("HYPERALG_JOBS").ok().and_then(|v| v.parse().ok())
            });
            let cfg = SweepConfig {
                t_min,
                t_max,
                max_side,
                max_n,
                fields,
                l_max,
                r_max,
                jobs,
                perturb,
            };
            let summary = if output == "-" {
                let stdout = io::stdout();
                let mut lock = stdout.lock();
                run_sweep(&cfg, &mut lock)?
            } else {
                let mut file = fs::File::create(&output)
                    .map_err(|e| CliError::resource(format!("cannot write {output}: {e}")))?;
                let summary = run_sweep(&cfg, &mut file)?;
                file.flush()?;
                summary
            };
            eprintln!(
                "sweep: {} records, {} disagreements",
                summary.records, summary.disagreements
            );
            if summary.disagreements > 0 {
                return Ok(1);
            }
        }
    }
    Ok(0)
}

fn verdict(property: &str, value: bool) -> PropertyVerdict {
    PropertyVerdict {
        property: property.to_string(),
        value,
        method: Method::Oracle,
        witness: None,
    }
}

fn check_property(
    property: &str,
    field: FieldSpec,
    l: Option<usize>,
    r: Option<usize>,
    cap: Option<usize>,
    input: &InputArgs,
) -> Result<PropertyVerdict, CliError> {
    let l = l.unwrap_or(1);
    let r = r.unwrap_or(2);
    let v = match property {
        "unmixed" => alg_props::is_unmixed(&input.complex()?),
        "cm" => alg_props::is_cm_reisner(&input.complex()?, field),
        "s_r" | "sr" => alg_props::satisfies_sr(&input.complex()?, r, field)?,
        "buchsbaum" => alg_props::is_buchsbaum(&input.complex()?, field),
        "l_cm" => alg_props::is_l_cm(&input.complex()?, l, field)?,
        "l_buchsbaum" => alg_props::is_l_buchsbaum(&input.complex()?, l, field)?,
        "gorenstein" => alg_props::is_gorenstein(&input.complex()?, field),
        "seq_cm" => alg_props::is_seq_cm(&input.complex()?, field),
        "seq_s2" => alg_props::is_seq_s2(&input.complex()?, field),
        "ci" => alg_props::is_complete_intersection(&input.ideal()?)?,
        "almost_ci" => alg_props::is_almost_ci(&input.ideal()?)?,
        "dual_ci" => alg_props::is_complete_intersection(&input.ideal()?.dual()?)?,
        "dual_cm" => {
            let dual = input.complex()?.alexander_dual()?;
            alg_props::is_cm_reisner(&dual, field)
        }
        "level" => verdict(
            "level",
            betti::is_level_with_cap(
                &input.complex()?,
                field,
                cap.unwrap_or(betti::BETTI_VERTEX_CAP),
            )?,
        ),
        "matroid" => verdict("matroid", input.complex()?.is_matroid()),
        "tight" => verdict(
            "tight",
            complex::is_tight_with_cap(
                &input.complex()?,
                cap.unwrap_or(complex::TIGHTNESS_VERTEX_CAP),
            )?
            .value,
        ),
        "chordal" => verdict("chordal", chordal::is_chordal(&input.hypergraph()?).0),
        "linear_resolution" => verdict(
            "linear_resolution",
            betti::has_linear_resolution_with_cap(
                &input.ideal()?,
                field,
                cap.unwrap_or(betti::BETTI_VERTEX_CAP),
            )?,
        ),
        "weakly_polymatroidal" => verdict(
            "weakly_polymatroidal",
            betti::is_weakly_polymatroidal(&input.ideal()?)?.0,
        ),
        other => {
            return Err(CliError::usage(format!(
                "unknown property `{other}`; see `hyperalg check --help`"
            )))
        }
    };
    Ok(v)
}
