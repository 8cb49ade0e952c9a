mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use cyclotome::laurent::serre::{serre_quotient_dims, DEFAULT_DEGREE_CAP};
use cyclotome::literal::{parse_pair, parse_v, parse_w, render_named};
use cyclotome::{CycIndex, DynkinQuiver, DynkinType, Orientation, VerificationReport};

const LITERAL_HELP: &str = "\
Sparse-vector literals are comma-separated terms, each optionally followed by =m:
  i:a          vertex i (1-based) at height residue a
  NAME         the σÎ vertex of an object: S1, P2, I3, M2.1, ΣS1, SigmaP2
  sigma(NAME)  the Î vertex σ(NAME); also written σNAME
An empty literal or 0 is the zero vector. A pair is written \"<v>; <w>\".";

#[derive(Parser)]
#[command(name = "cyclotome", version, about = "Exact combinatorics of cyclic quiver varieties", after_help = LITERAL_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct QuiverArgs {
    /// Dynkin type such as A3, D4, E6.
    #[arg(long = "type", value_name = "T")]
    ty: Option<String>,
    /// linear, alternating, mask:<bits> or file:<path>.
    #[arg(long, default_value = "linear", value_name = "O")]
    orientation: String,
}

#[derive(Args, Clone, Copy)]
#[group(multiple = false)]
struct FormatArgs {
    #[arg(long)]
    json: bool,
    #[arg(long)]
    markdown: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Coxeter number, index sets, section and generator labels.
    Describe {
        #[command(flatten)]
        quiver: QuiverArgs,
        #[arg(long)]
        json: bool,
    },
    /// The AR-quiver window.
    ArQuiver {
        #[command(flatten)]
        quiver: QuiverArgs,
        #[arg(long)]
        dot: bool,
    },
    /// The graded representation space for a pair.
    RepSpace {
        #[command(flatten)]
        quiver: QuiverArgs,
        #[arg(long, default_value = "0")]
        v: String,
        #[arg(long, default_value = "0")]
        w: String,
        #[arg(long)]
        dot: bool,
    },
    /// All l-dominant v for a given w.
    Enumerate {
        #[command(flatten)]
        quiver: QuiverArgs,
        #[arg(long)]
        w: String,
        #[arg(long)]
        json: bool,
    },
    /// The unique pair in V+ x W^S with w - C v = w~.
    Lift {
        #[command(flatten)]
        quiver: QuiverArgs,
        #[arg(long)]
        wtilde: String,
        #[arg(long)]
        json: bool,
    },
    /// Every bilinear form and exponent on two pairs.
    Forms {
        #[command(flatten)]
        quiver: QuiverArgs,
        /// Given exactly twice.
        #[arg(long = "pair", num_args = 1, required = true)]
        pairs: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Run relation checks; exits 1 if any check fails.
    Verify {
        what: Target,
        #[command(flatten)]
        quiver: QuiverArgs,
        #[command(flatten)]
        format: FormatArgs,
        /// Largest |w| for the same-n sweep.
        #[arg(long, default_value_t = 3)]
        mass_cap: i64,
    },
    /// Graded dimensions of the Serre quotient.
    SerreDims {
        #[command(flatten)]
        quiver: QuiverArgs,
        #[arg(long)]
        maxdeg: usize,
        #[arg(long, default_value_t = DEFAULT_DEGREE_CAP)]
        cap: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    All,
    Ek,
    Ef,
    Kk,
    Serre,
    SameForm,
    SameN,
    ExponentTable,
}

enum Outcome {
    Ok,
    Failed,
}

fn load_quiver(args: &QuiverArgs) -> anyhow::Result<DynkinQuiver> {
    if let Some(path) = args.orientation.strip_prefix("file:") {
        let path = PathBuf::from(path);
        let text = std::fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
        let q = DynkinQuiver::parse_spec(&text)?;
        if let Some(ty) = &args.ty {
            let ty: DynkinType = ty.parse()?;
            if ty != q.dynkin_type() {
                bail!("{} describes a quiver of type {}, not {ty}", path.display(), q.dynkin_type());
            }
        }
        return Ok(q);
    }
    let Some(ty) = &args.ty else {
        bail!("--type is required unless --orientation file:<path> is given");
    };
    let ty: DynkinType = ty.parse()?;
    let o: Orientation = args.orientation.parse()?;
    Ok(DynkinQuiver::standard(ty, o))
}

fn index(args: &QuiverArgs) -> anyhow::Result<CycIndex> {
    Ok(CycIndex::new(&load_quiver(args)?)?)
}

fn print_json(value: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("json values serialize"));
}

fn pairs(n: usize, distinct: bool) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (0..n).map(move |j| (i, j))).filter(move |&(i, j)| !distinct || i != j)
}

fn run_verify(idx: &CycIndex, what: Target, mass_cap: i64) -> VerificationReport {
    let n = idx.rank();
    let mut report = VerificationReport::new(idx);
    match what {
        Target::All => return idx.verify_all(mass_cap),
        Target::Ek => pairs(n, false).for_each(|(i, j)| report.merge(idx.verify_ek(i, j))),
        Target::Ef => pairs(n, false).for_each(|(i, j)| report.merge(idx.verify_ef(i, j))),
        Target::Kk => pairs(n, false).for_each(|(i, j)| report.merge(idx.verify_kk(i, j))),
        Target::Serre => {
            for (i, j) in pairs(n, true) {
                match idx.verify_serre(i, j) {
                    Ok(r) => report.merge(r),
                    Err(e) => report.fail("serre", &[i, j], e),
                }
            }
        }
        Target::SameForm => report.merge(idx.verify_same_form()),
        Target::SameN => report.merge(idx.verify_same_n(mass_cap)),
        Target::ExponentTable => report.merge(idx.chevalley_exponent_table()),
    }
    report
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    match cli.command {
        Command::Describe { quiver, json } => {
            let idx = index(&quiver)?;
            if json {
                print_json(&render::describe_json(&idx));
            } else {
                print!("{}", render::describe(&idx));
            }
        }
        Command::ArQuiver { quiver, dot } => {
            let idx = index(&quiver)?;
            let ar = idx.model().knit();
            if dot {
                print!("{}", render::ar_quiver_dot(&idx, &ar));
            } else {
                print!("{}", render::ar_quiver_text(&idx, &ar));
            }
        }
        Command::RepSpace { quiver, v, w, dot } => {
            let idx = index(&quiver)?;
            let (v, w) = (parse_v(&idx, &v)?, parse_w(&idx, &w)?);
            if dot {
                print!("{}", render::rep_space_dot(&idx, &v, &w));
            } else {
                print!("{}", render::rep_space_text(&idx, &v, &w));
            }
        }
        Command::Enumerate { quiver, w, json } => {
            let idx = index(&quiver)?;
            let w = parse_w(&idx, &w)?;
            let found = idx.enumerate_l_dominant(&w)?;
            if json {
                print_json(&render::enumeration_json(&idx, &w, &found));
            } else {
                print!("{}", render::enumeration(&idx, &w, &found));
            }
        }
        Command::Lift { quiver, wtilde, json } => {
            let idx = index(&quiver)?;
            let w_tilde = parse_w(&idx, &wtilde)?;
            let p = idx.solve_w_tilde(&w_tilde)?;
            if json {
                print_json(&json!({
                    "schema": render::SCHEMA,
                    "wtilde": render_named(&idx, &w_tilde),
                    "v": render_named(&idx, &p.v),
                    "w": render_named(&idx, &p.w),
                }));
            } else {
                println!("{}", render::pair(&idx, &p));
            }
        }
        Command::Forms { quiver, pairs, json } => {
            if pairs.len() != 2 {
                bail!("--pair must be given exactly twice");
            }
            let idx = index(&quiver)?;
            let m1 = parse_pair(&idx, &pairs[0])?;
            let m2 = parse_pair(&idx, &pairs[1])?;
            let value = render::forms_json(&idx, &m1, &m2);
            if json {
                print_json(&value);
            } else {
                print!("{}", render::forms_text(&value));
            }
        }
        Command::Verify { what, quiver, format, mass_cap } => {
            if mass_cap < 0 {
                bail!("--mass-cap must be nonnegative");
            }
            let idx = index(&quiver)?;
            let report = run_verify(&idx, what, mass_cap);
            if format.json {
                print_json(&render::report_json(&report));
            } else if format.markdown {
                print!("{}", render::report_markdown(&report));
            } else {
                print!("{}", render::report_text(&report));
            }
            if !report.passed() {
                return Ok(Outcome::Failed);
            }
        }
        Command::SerreDims { quiver, maxdeg, cap, json } => {
            let q = load_quiver(&quiver)?;
            let idx = CycIndex::new(&q)?;
            let dims = serre_quotient_dims(&q, maxdeg, cap)?;
            let rows: Vec<(String, u64, u64)> = dims
                .iter()
                .map(|(beta, &d)| (beta.to_string(), d, idx.kostant_partitions(beta)))
                .collect();
            let agree = rows.iter().all(|(_, d, k)| d == k);
            if json {
                let rows: Vec<_> = rows
                    .iter()
                    .map(|(b, d, k)| json!({"degree": b, "dim": d, "kostant": k}))
                    .collect();
                print_json(&json!({"schema": render::SCHEMA, "rows": rows, "agree": agree}));
            } else {
                for (b, d, k) in &rows {
                    println!("{b:<16} {d:>4} {k:>4}");
                }
            }
            if !agree {
                return Ok(Outcome::Failed);
            }
        }
    }
    Ok(Outcome::Ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
