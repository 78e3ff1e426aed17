use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use trunc_choice::choosability::{
    gallai_bad_certificate, is_gallai_tree, solve_list_coloring, ListAssignment,
};
use trunc_choice::counterexample::{
    assemble_g, build_gadget, legend, verify_counterexample, verify_gadget_uncolorable,
};
use trunc_choice::generate::{
    adversarial_truncated_lists, double_wheel, embed_with_outer, triangulation_variant,
    uniform_truncated_lists,
};
use trunc_choice::graph::io::{parse_graph, parse_lists, write_coloring, write_graph, write_lists};
use trunc_choice::graph::{embed, trace_faces, FaceSet, PlaneGraph};
use trunc_choice::procedure::{color, ProcedureConfig, ProcedureError};
use trunc_choice::theta::{bipolar_orient, very_nice};

const FORMATS: &str = "\
Formats:
  graph     g <n> <m> | e <u> <v> | r <v> <n1> <n2> ... (counterclockwise) | outer <v1> <v2> ...
  lists     u <universe> | l <v> <c1> <c2> ...
  colouring c <v> <colour> per vertex, or the single line UNSAT
  report    CERT <name> PASS|FAIL <detail>, then VERDICT <word>
  trace     STEP <i> RULE <R1|R2> VERTEX <v> COLOR <c> AVOID <set>
            FREE <component> AT <i>
            NONSAVIOR VERTEX <v> COMPONENT <q> SIZE <s> AT <i>
            CONFINED VERTEX <v> COMPONENT <q> COLOR <c> AT <i>
  very nice f <face> <v1> <v2> ...
  bipolar   poles <s> <t>, then a <u> <v> per arc
  gallai    GALLAI yes|no, then BAD with C <block-vertices> : <colours> lines, or NOT-BAD
Lines starting with # are comments. Ids are 0-based.

Exit codes: 0 ok, 1 certificate failure, 2 input error, 3 procedure failure, 4 oracle cap.";

#[derive(Parser)]
#[command(name = "trunc-choice", version, about = "Degree-truncated list colouring of planar graphs", after_help = FORMATS)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Certify that the gadget H is not colourable from its lists, with the forcing chain.
    VerifyGadget {
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Build the 1234-vertex graph G and certify it is not 8-truncated-choosable.
    VerifyCounterexample {
        #[arg(long)]
        emit_graph: Option<PathBuf>,
        #[arg(long)]
        emit_lists: Option<PathBuf>,
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Print a colouring from the lists, or UNSAT.
    Solve {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        lists: PathBuf,
    },
    /// Decide whether lists with |L(v)| >= d(v) on a Gallai tree are bad, with the block colour sets.
    GallaiCheck {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        lists: PathBuf,
    },
    /// Dump a very nice subgraph of the vertex-face incidence graph.
    VeryNice {
        #[arg(long)]
        graph: PathBuf,
        /// Defaults to the smallest vertex on the infinite face.
        #[arg(long)]
        vstar: Option<usize>,
    },
    /// Dump a bipolar orientation of a 2-connected plane graph.
    Bipolar {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
    },
    /// Run the truncation procedure and print the colouring.
    Color {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        lists: PathBuf,
        #[arg(long, default_value_t = 12)]
        k: usize,
        #[arg(long)]
        vstar: Option<usize>,
        #[arg(long)]
        trace: Option<PathBuf>,
        #[arg(long, default_value_t = 10_000_000)]
        oracle_cap: u64,
        /// Also record confined vertices in the trace.
        #[arg(long)]
        diagnostics: bool,
    },
    /// Emit a seeded random instance.
    Gen {
        #[arg(long, value_enum)]
        kind: Kind,
        /// Rim length of the double wheel.
        #[arg(long, default_value_t = 12)]
        rim: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the graph here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Also write truncated lists over 20 colours.
        #[arg(long)]
        lists: Option<PathBuf>,
        #[arg(long, default_value_t = 12)]
        k: usize,
        #[arg(long)]
        adversarial: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    DoubleWheel,
    Triangulation,
}

struct Exit(u8, String);

fn input(msg: impl std::fmt::Display) -> Exit {
    Exit(2, format!("error: {msg}"))
}

fn read(path: &Path) -> Result<String, Exit> {
    fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Exit> {
    fs::write(path, text).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<PlaneGraph, Exit> {
    let g = parse_graph(&read(path)?).map_err(|e| input(format!("{}: {e}", path.display())))?;
    if g.rotation().is_some() {
        trace_faces(&g).map_err(|e| input(format!("{}: {e}", path.display())))?;
        return Ok(g);
    }
    if embed(&g).is_none() {
        return Err(input(format!("{}: graph is not planar", path.display())));
    }
    Ok(embed_with_outer(&g))
}

fn load_lists(path: &Path, n: usize) -> Result<ListAssignment, Exit> {
    let (u, lists) =
        parse_lists(&read(path)?, n).map_err(|e| input(format!("{}: {e}", path.display())))?;
    ListAssignment::from_vecs(u, &lists).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn faces(g: &PlaneGraph) -> Result<FaceSet, Exit> {
    trace_faces(g).map_err(input)
}

fn run(cli: Cli) -> Result<String, Exit> {
    match cli.cmd {
        Cmd::VerifyGadget { report } => {
            let certs = verify_gadget_uncolorable(&build_gadget());
            let mut out = format!("# legend {}\n", legend());
            certs.iter().for_each(|c| out.push_str(&format!("{c}\n")));
            let pass = certs.iter().all(|c| c.pass);
            out.push_str(&format!(
                "VERDICT {}\n",
                if pass {
                    "GADGET-UNCOLORABLE"
                } else {
                    "UNVERIFIED"
                }
            ));
            if let Some(p) = report {
                write(&p, &out)?;
            }
            if pass {
                Ok(out)
            } else {
                Err(Exit(1, out))
            }
        }
        Cmd::VerifyCounterexample {
            emit_graph,
            emit_lists,
            report,
            jobs,
        } => {
            let gg = assemble_g();
            if let Some(p) = emit_graph {
                write(&p, &write_graph(&gg.graph))?;
            }
            if let Some(p) = emit_lists {
                write(&p, &write_lists(gg.lists.universe(), &gg.lists.to_vecs()))?;
            }
            let rep = verify_counterexample(&gg, jobs.max(1));
            let out = rep.render();
            if let Some(p) = report {
                write(&p, &out)?;
            }
            if rep.pass() {
                Ok(out)
            } else {
                Err(Exit(1, out))
            }
        }
        Cmd::Solve { graph, lists } => {
            let g = parse_graph(&read(&graph)?)
                .map_err(|e| input(format!("{}: {e}", graph.display())))?;
            let l = load_lists(&lists, g.n())?;
            Ok(write_coloring(solve_list_coloring(&g, &l).as_deref()))
        }
        Cmd::GallaiCheck { graph, lists } => {
            let g = parse_graph(&read(&graph)?)
                .map_err(|e| input(format!("{}: {e}", graph.display())))?;
            let l = load_lists(&lists, g.n())?;
            if !is_gallai_tree(&g).map_err(input)? {
                return Ok("GALLAI no\n".into());
            }
            let mut out = String::from("GALLAI yes\n");
            match gallai_bad_certificate(&g, &l).map_err(input)? {
                None => out.push_str("NOT-BAD\n"),
                Some(c) => {
                    out.push_str("BAD\n");
                    for (b, set) in c.blocks.iter().zip(&c.sets) {
                        let vs: Vec<String> = b.iter().map(|v| v.to_string()).collect();
                        let cs: Vec<String> = set.iter().map(|c| c.to_string()).collect();
                        out.push_str(&format!("C {} : {}\n", vs.join(" "), cs.join(" ")));
                    }
                }
            }
            Ok(out)
        }
        Cmd::VeryNice { graph, vstar } => {
            let g = load_graph(&graph)?;
            let fs = faces(&g)?;
            let v = vstar.unwrap_or(fs.face_vertices(fs.infinite())[0]);
            let vn = very_nice(&g, &fs, fs.infinite(), v).map_err(input)?;
            vn.verify(&g, &fs)
                .map_err(|e| Exit(1, format!("error: {e}")))?;
            Ok(vn.dump(fs.len()))
        }
        Cmd::Bipolar { graph, s, t } => {
            let g = load_graph(&graph)?;
            let fs = faces(&g)?;
            let o = bipolar_orient(&g, &fs, s, t).map_err(input)?;
            o.verify(&g, &fs)
                .map_err(|e| Exit(1, format!("error: {e}")))?;
            let mut out = format!("poles {s} {t}\n");
            for (u, v) in o.arcs(&g) {
                out.push_str(&format!("a {u} {v}\n"));
            }
            Ok(out)
        }
        Cmd::Color {
            graph,
            lists,
            k,
            vstar,
            trace,
            oracle_cap,
            diagnostics,
        } => {
            let g = load_graph(&graph)?;
            let l = load_lists(&lists, g.n())?;
            let cfg = ProcedureConfig {
                oracle_cap,
                audit: true,
                diagnostics,
            };
            let emit = |events: &str| -> Result<(), Exit> {
                match &trace {
                    Some(p) => write(p, events),
                    None => Ok(()),
                }
            };
            match color(&g, &l, k, vstar, cfg) {
                Ok(r) => {
                    emit(&r.render_trace())?;
                    Ok(write_coloring(Some(&r.coloring)))
                }
                Err(ProcedureError::Failed {
                    step,
                    reason,
                    trace: t,
                }) => {
                    let lines: String = t.iter().map(|e| format!("{e}\n")).collect();
                    emit(&lines)?;
                    let shown = if trace.is_some() {
                        String::new()
                    } else {
                        lines
                    };
                    Err(Exit(3, format!("{shown}FAILED AT {step}: {reason}")))
                }
                Err(ProcedureError::Capped {
                    cap,
                    step,
                    trace: t,
                }) => {
                    let lines: String = t.iter().map(|e| format!("{e}\n")).collect();
                    emit(&lines)?;
                    Err(Exit(4, format!("ORACLE-CAP {cap} AT {step}")))
                }
                Err(ProcedureError::OracleCap(cap)) => Err(Exit(4, format!("ORACLE-CAP {cap}"))),
                Err(e) => Err(input(e)),
            }
        }
        Cmd::Gen {
            kind,
            rim,
            seed,
            output,
            lists,
            k,
            adversarial,
        } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let g = match kind {
                Kind::DoubleWheel if rim < 3 => return Err(input("rim must be at least 3")),
                Kind::DoubleWheel => double_wheel(rim),
                Kind::Triangulation => triangulation_variant(&mut rng),
            };
            if let Some(p) = lists {
                let l = if adversarial {
                    adversarial_truncated_lists(&g, k, 20, &mut rng)
                } else {
                    uniform_truncated_lists(&g, k, 20, &mut rng)
                };
                write(&p, &write_lists(l.universe(), &l.to_vecs()))?;
            }
            let text = write_graph(&g);
            match output {
                Some(p) => write(&p, &text).map(|_| String::new()),
                None => Ok(text),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Exit(code, msg)) => {
            if code == 1 {
                print!("{msg}");
            } else {
                eprintln!("{msg}");
            }
            ExitCode::from(code)
        }
    }
}
