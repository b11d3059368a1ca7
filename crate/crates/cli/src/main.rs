//! Command-line front end: every subcommand reads JSON files, writes one
//! JSON document to stdout, and exits 0 on success, 1 on a domain failure
//! (no coloring, invalid dicharacteristic pair), 2 on malformed input.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use djspace::admissible;
use djspace::classes::{self, SignFunction};
use djspace::coloring;
use djspace::complex::SimplicialComplex;
use djspace::json as schema;
use djspace::limits;
use djspace::structures;
use djspace::VertexSigns;

#[derive(Parser)]
#[command(
    name = "djspace",
    about = "Exact Stanley-Reisner computations: characteristic classes, complex structures, admissibility, higher limits, colorings",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ComplexArg {
    /// Path to a complex file: {"m": 3, "facets": [[1,2],[1,3],[2,3]]}
    complex: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Total Chern and Pontrjagin classes, optionally a sign-twisted Chern class
    Classes {
        #[command(flatten)]
        complex: ComplexArg,
        /// Vertex signs, e.g. -,+,+ or -1,1,1
        #[arg(long, allow_hyphen_values = true)]
        f: Option<String>,
    },
    /// Enumerate all square roots of the top Pontrjagin component
    SqrtEnum {
        #[command(flatten)]
        complex: ComplexArg,
        /// Worker threads for the enumeration
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Realizability and structure counts for a sign function on the top faces
    Structures {
        #[command(flatten)]
        complex: ComplexArg,
        /// Signs in the lexicographic order of the top faces, e.g. -,+,+,+
        #[arg(long, allow_hyphen_values = true)]
        omega: String,
        /// Also run the exhaustive 2^m count (m <= 20)
        #[arg(long)]
        brute: bool,
        /// Include the top-face order that the sign list refers to
        #[arg(long)]
        explain: bool,
        /// Worker threads for the brute-force count
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Number of complex structures in the stable range s > n
    StableCount {
        #[command(flatten)]
        complex: ComplexArg,
        #[arg(short)]
        s: u32,
    },
    /// Check K-admissibility of an exact matrix
    Admissible {
        #[command(flatten)]
        complex: ComplexArg,
        /// Path to a row-major matrix of integers or "p/q" strings
        matrix: PathBuf,
        /// Check every face instead of only the maximal ones
        #[arg(long)]
        all_faces: bool,
    },
    /// Emit the admissible power matrix with entry s^r
    Vandermonde {
        #[arg(short)]
        m: u32,
        #[arg(short)]
        n: u32,
    },
    /// Higher derived limits of a functor given by a fixture file
    Limits {
        #[command(flatten)]
        complex: ComplexArg,
        /// Functor fixture: {"ring": "Z", "values": [...], "maps": [...]}
        functor: PathBuf,
        /// Largest degree to report (default n + 1)
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Reduced cohomology of the link of a face
    LinkCohomology {
        #[command(flatten)]
        complex: ComplexArg,
        /// Face as comma-separated vertices; empty string for the empty face
        #[arg(long, default_value = "")]
        alpha: String,
        /// Coefficients: Z, F2, F3, ...
        #[arg(long, default_value = "Z")]
        ring: String,
    },
    /// Search for a regular coloring; exit 1 when none exists
    Color {
        #[command(flatten)]
        complex: ComplexArg,
        /// Palette size
        #[arg(short)]
        r: Option<u32>,
        /// Report the least palette size admitting a coloring
        #[arg(long)]
        chromatic: bool,
        /// Include the induced line-bundle splitting of the Chern class
        #[arg(long)]
        splitting: bool,
    },
    /// Validate a dicharacteristic pair and decide complex-structure existence
    Quasitoric {
        /// Pair file: {"complex": ..., "oriented_facets": [...], "lambda": [...]}
        pair: PathBuf,
    },
}

enum Failure {
    /// Malformed input: exit 2 with a one-line diagnostic.
    Input(String),
    /// Well-formed input, negative mathematical outcome: exit 1 with JSON.
    Domain(Value),
}

impl From<djspace::Error> for Failure {
    fn from(e: djspace::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type CmdResult = Result<Value, Failure>;

fn read_json(path: &Path) -> Result<Value, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_complex(path: &Path) -> Result<SimplicialComplex, Failure> {
    let value = read_json(path)?;
    let parsed: schema::ComplexJson = serde_json::from_value(value)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Ok(parsed.to_complex()?)
}

fn parse_omega(complex: &SimplicialComplex, text: &str) -> Result<SignFunction, Failure> {
    let signs = schema::parse_signs(text)?;
    Ok(SignFunction::from_signs(complex, signs)?)
}

fn purity_warning(out: &mut serde_json::Map<String, Value>, complex: &SimplicialComplex) {
    out.insert("pure".into(), json!(complex.is_pure()));
    if !complex.is_pure() {
        out.insert(
            "warning".into(),
            json!("complex is not pure: sign functions live on the faces of cardinality n only"),
        );
    }
}

fn cmd_classes(path: &Path, f: Option<String>) -> CmdResult {
    let k = load_complex(path)?;
    let mut out = serde_json::Map::new();
    out.insert("m".into(), json!(k.m()));
    out.insert("n".into(), json!(k.n()));
    purity_warning(&mut out, &k);
    out.insert("c".into(), schema::poly_to_json(&classes::total_chern(&k)));
    out.insert("p".into(), schema::poly_to_json(&classes::total_pontrjagin(&k)));
    if let Some(text) = f {
        let signs = VertexSigns::new(schema::parse_signs(&text)?);
        let twisted = classes::signed_chern(&k, &signs)?;
        out.insert("c_f".into(), schema::poly_to_json(&twisted));
    }
    Ok(Value::Object(out))
}

fn cmd_sqrt_enum(path: &Path, threads: usize) -> CmdResult {
    let k = load_complex(path)?;
    let roots = classes::euler_square_roots_threaded(&k, threads);
    let mut out = serde_json::Map::new();
    purity_warning(&mut out, &k);
    out.insert(
        "top_faces".into(),
        Value::Array(k.top_faces().into_iter().map(schema::face_to_json).collect()),
    );
    out.insert("count".into(), json!(roots.len()));
    out.insert(
        "roots".into(),
        Value::Array(roots.iter().map(schema::poly_to_json).collect()),
    );
    Ok(Value::Object(out))
}

fn cmd_structures(
    path: &Path,
    omega_text: &str,
    brute: bool,
    explain: bool,
    threads: usize,
) -> CmdResult {
    let k = load_complex(path)?;
    let omega = parse_omega(&k, omega_text)?;
    let mut out = serde_json::Map::new();
    purity_warning(&mut out, &k);
    if explain {
        out.insert(
            "top_faces".into(),
            Value::Array(k.top_faces().into_iter().map(schema::face_to_json).collect()),
        );
    }
    let witness = structures::realize_up_to_sign(&k, &omega)?;
    out.insert("realizable".into(), json!(witness.is_some()));
    match &witness {
        Some((eps, f)) => {
            out.insert("epsilon".into(), json!(eps.value()));
            out.insert("f".into(), json!(f.values()));
        }
        None => {
            out.insert("epsilon".into(), Value::Null);
            out.insert("f".into(), Value::Null);
        }
    }
    out.insert(
        "count".into(),
        schema::biguint_to_json(&structures::count_structures(&k, &omega)?),
    );
    let oriented = structures::realize(&k, &omega)?;
    out.insert("oriented_realizable".into(), json!(oriented.is_some()));
    out.insert(
        "oriented_f".into(),
        oriented.map_or(Value::Null, |f| json!(f.values())),
    );
    out.insert(
        "oriented_count".into(),
        schema::biguint_to_json(&structures::count_realizations(&k, &omega)?),
    );
    if brute {
        let n = structures::count_structures_brute_threaded(&k, &omega, threads)?;
        out.insert("brute_count".into(), schema::biguint_to_json(&n));
    }
    Ok(Value::Object(out))
}

fn cmd_stable_count(path: &Path, s: u32) -> CmdResult {
    let k = load_complex(path)?;
    let count = structures::stable_structure_count(&k, s)?;
    Ok(json!({"count": schema::biguint_to_json(&count)}))
}

fn cmd_admissible(path: &Path, matrix: &Path, all_faces: bool) -> CmdResult {
    let k = load_complex(path)?;
    let a = schema::exact_matrix_from_json(&read_json(matrix)?)?;
    let outcome = if all_faces {
        admissible::admissibility_all_faces(&k, &a)?
    } else {
        admissible::admissibility(&k, &a)?
    };
    Ok(json!({
        "admissible": outcome.is_admissible(),
        "witness": outcome.witness().map_or(Value::Null, schema::face_to_json),
    }))
}

fn cmd_vandermonde(m: u32, n: u32) -> CmdResult {
    let a = admissible::vandermonde(m, n)?;
    Ok(json!({"rows": schema::exact_matrix_to_json(&a)}))
}

fn cmd_limits(path: &Path, functor_path: &Path, max_degree: Option<usize>) -> CmdResult {
    let k = load_complex(path)?;
    let parsed: schema::FunctorJson = serde_json::from_value(read_json(functor_path)?)
        .map_err(|e| Failure::Input(format!("{}: {e}", functor_path.display())))?;
    let functor = parsed.to_functor(&k)?;
    let degree = max_degree.unwrap_or(k.n() as usize + 1);
    let lims = functor.derived_limits(degree);
    Ok(json!({
        "ring": functor.ring().to_string(),
        "limits": lims.iter().map(schema::ab_group_to_json).collect::<Vec<_>>(),
    }))
}

fn cmd_link_cohomology(path: &Path, alpha: &str, ring: &str) -> CmdResult {
    let k = load_complex(path)?;
    let alpha = schema::parse_face(alpha)?;
    let ring = limits::Ring::parse(ring)?;
    let groups = limits::link_cohomology(&k, alpha, ring, 1)?;
    let entries: Vec<Value> = groups
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let mut v = schema::ab_group_to_json(g);
            v.as_object_mut()
                .expect("object")
                .insert("degree".into(), json!(i as i64 - 1));
            v
        })
        .collect();
    Ok(json!({"ring": ring.to_string(), "cohomology": entries}))
}

fn cmd_color(path: &Path, r: Option<u32>, chromatic: bool, splitting: bool) -> CmdResult {
    let k = load_complex(path)?;
    if chromatic {
        let number = coloring::chromatic_number(&k)?;
        return Ok(json!({"chromatic_number": number}));
    }
    let r = r.ok_or_else(|| Failure::Input("color requires -r or --chromatic".into()))?;
    match coloring::find_coloring(&k, r) {
        Some(found) => {
            let mut out = serde_json::Map::new();
            out.insert("colors".into(), json!(found.colors()));
            if splitting {
                let factors = coloring::splitting_factors(&k, &found)?;
                out.insert(
                    "splitting".into(),
                    Value::Array(factors.iter().map(schema::poly_to_json).collect()),
                );
            }
            Ok(Value::Object(out))
        }
        None => Err(Failure::Domain(json!({"colors": Value::Null}))),
    }
}

fn cmd_quasitoric(path: &Path) -> CmdResult {
    let value = read_json(path)?;
    let parsed: schema::PairJson = serde_json::from_value(value)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let pair = parsed.to_pair()?;
    match pair.validate() {
        Ok((omega, euler)) => {
            let dets: Vec<i64> = omega.signs().iter().map(|s| s.value()).collect();
            let witness = structures::realize_up_to_sign(pair.complex(), &omega)?;
            Ok(json!({
                "valid": true,
                "top_faces": pair.complex().top_faces().into_iter().map(schema::face_to_json).collect::<Vec<_>>(),
                "dets": dets,
                "euler_class": schema::poly_to_json(&euler),
                "admits_complex_structure": witness.is_some(),
                "witness": witness.map_or(Value::Null, |(eps, f)| json!({
                    "epsilon": eps.value(),
                    "f": f.values(),
                })),
            }))
        }
        Err(djspace::Error::NotUnimodular { face, det }) => Err(Failure::Domain(json!({
            "valid": false,
            "face": schema::face_to_json(face),
            "det": det,
        }))),
        Err(other) => Err(other.into()),
    }
}

fn dispatch(command: Command) -> CmdResult {
    match command {
        Command::Classes { complex, f } => cmd_classes(&complex.complex, f),
        Command::SqrtEnum { complex, threads } => cmd_sqrt_enum(&complex.complex, threads),
        Command::Structures {
            complex,
            omega,
            brute,
            explain,
            threads,
        } => cmd_structures(&complex.complex, &omega, brute, explain, threads),
        Command::StableCount { complex, s } => cmd_stable_count(&complex.complex, s),
        Command::Admissible {
            complex,
            matrix,
            all_faces,
        } => cmd_admissible(&complex.complex, &matrix, all_faces),
        Command::Vandermonde { m, n } => cmd_vandermonde(m, n),
        Command::Limits {
            complex,
            functor,
            max_degree,
        } => cmd_limits(&complex.complex, &functor, max_degree),
        Command::LinkCohomology {
            complex,
            alpha,
            ring,
        } => cmd_link_cohomology(&complex.complex, &alpha, &ring),
        Command::Color {
            complex,
            r,
            chromatic,
            splitting,
        } => cmd_color(&complex.complex, r, chromatic, splitting),
        Command::Quasitoric { pair } => cmd_quasitoric(&pair),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(value) => {
            println!("{value}");
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(value)) => {
            println!("{value}");
            ExitCode::from(1)
        }
        Err(Failure::Input(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
