use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use subiso::graph::io::{read_graph_file, write_embedding, write_graph_file};
use subiso::harness::{bench, generate, load_corpus, parse_forbidden, run, Algorithm, Answer, ClassSpec, SolveOptions};
use subiso::recognize::{find_p4_hitting_set, find_vi_set, p4_hitting_number, twin_partition, vertex_integrity};
use subiso::reduce::{self, PartitionMode};
use subiso::{Budget, Embedding, Graph, Result};

// stdout may be a closed pipe (`| head`); that is not an error worth a panic
macro_rules! say_raw {
    ($($t:tt)*) => {{
        let _ = write!(std::io::stdout(), $($t)*);
    }};
}

macro_rules! say {
    ($($t:tt)*) => {{
        let _ = writeln!(std::io::stdout(), $($t)*);
    }};
}

/// Subgraph isomorphism on graph classes that exclude a linear forest as a
/// minor.
///
/// Exit codes: 0 yes, 1 no, 2 unknown, 3 error.
#[derive(Parser)]
#[command(name = "subiso", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the pattern is a subgraph of the host.
    Solve {
        #[arg(long)]
        host: PathBuf,
        #[arg(long)]
        pattern: PathBuf,
        /// auto, p4free, p4kp3, vi, hitting, nd or oracle.
        #[arg(long, default_value = "auto")]
        algo: String,
        /// Class parameter k.
        #[arg(long)]
        param: Option<usize>,
        /// Forbidden linear forest as path orders, e.g. "5,4,3".
        #[arg(long)]
        forbidden: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        repeats: usize,
        #[arg(long, default_value_t = Budget::DEFAULT_LIMIT)]
        budget: u64,
        /// Use the oracle when the forbidden minor leaves the case open.
        #[arg(long)]
        fallback: bool,
        /// Print the full result as JSON.
        #[arg(long)]
        json: bool,
        /// Write the embedding here on a yes answer.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Test class membership and print a certificate.
    Recognize {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum)]
        class: RecognizeClass,
        #[arg(long)]
        param: Option<usize>,
    },
    /// Build a subgraph isomorphism instance from an NP-hard source problem.
    Reduce {
        #[arg(long, value_enum)]
        from: Source,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out_host: PathBuf,
        #[arg(long)]
        out_pattern: PathBuf,
        /// Solve the source instance exhaustively and write the induced
        /// embedding here when it has a solution.
        #[arg(long)]
        witness: Option<PathBuf>,
        /// Host/pattern shape for 3-Partition.
        #[arg(long, value_enum, default_value = "linear-forest")]
        mode: Mode,
    },
    /// Sample instances from a graph class into `<out>/<prefix>-<i>.{host,pattern}`.
    Gen {
        /// p4free, vi:K, hitting:K or nd:K.
        #[arg(long)]
        class: String,
        #[arg(long)]
        size: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        planted: bool,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value = "gen")]
        prefix: String,
    },
    /// Run algorithms over a corpus directory and report agreement.
    Bench {
        #[arg(long)]
        corpus: PathBuf,
        /// Comma separated algorithm names.
        #[arg(long, default_value = "oracle")]
        algos: String,
        #[arg(long)]
        param: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        repeats: usize,
        #[arg(long, default_value_t = Budget::DEFAULT_LIMIT)]
        budget: u64,
        /// Print the JSON report instead of the table.
        #[arg(long)]
        json: bool,
        /// Include wall-clock times (makes output nondeterministic).
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum RecognizeClass {
    P4free,
    Vi,
    Hitting,
    Nd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Source {
    #[value(name = "3partition")]
    ThreePartition,
    X3c,
    #[value(name = "3sat21")]
    Sat21,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    LinearForest,
    Cluster,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 3 } else { 0 });
        }
    };
    match execute(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}

fn answer_code(a: Answer) -> u8 {
    a.exit_code() as u8
}

fn execute(command: Command) -> Result<u8> {
    match command {
        Command::Solve { host, pattern, algo, param, forbidden, seed, repeats, budget, fallback, json, witness } => {
            let g = read_graph_file(&host)?;
            let q = read_graph_file(&pattern)?;
            let algorithm: Algorithm = algo.parse()?;
            let forbidden = forbidden.as_deref().map(parse_forbidden).transpose()?;
            let opts = SolveOptions { param, forbidden, seed, repeats, budget, fallback };
            let r = run(algorithm, &g, &q, &opts)?;
            if json {
                say!("{}", serde_json::to_string_pretty(&r).expect("result serializes"));
            } else {
                for note in &r.notes {
                    eprintln!("note: {note}");
                }
                say!("{}", serde_json::to_value(r.answer).expect("answer serializes").as_str().unwrap_or("?"));
                if let Some(e) = r.embedding() {
                    say_raw!("{}", write_embedding(&e));
                }
            }
            if let (Some(path), Some(e)) = (witness, r.embedding()) {
                std::fs::write(path, write_embedding(&e))?;
            }
            Ok(answer_code(r.answer))
        }
        Command::Recognize { graph, class, param } => recognize(&read_graph_file(&graph)?, class, param),
        Command::Reduce { from, input, out_host, out_pattern, witness, mode } => {
            reduce_cmd(from, &input, &out_host, &out_pattern, witness.as_deref(), mode)
        }
        Command::Gen { class, size, seed, planted, count, out, prefix } => {
            let spec: ClassSpec = class.parse()?;
            std::fs::create_dir_all(&out)?;
            for i in 0..count {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(i as u64);
                let x = generate(spec, size, &mut rng, planted);
                let id = format!("{prefix}-{i:04}");
                write_graph_file(&out.join(format!("{id}.host")), &x.host)?;
                write_graph_file(&out.join(format!("{id}.pattern")), &x.pattern)?;
            }
            say!("wrote {count} {spec} instance(s) to {}", out.display());
            Ok(0)
        }
        Command::Bench { corpus, algos, param, seed, repeats, budget, json, timings } => {
            let entries = load_corpus(&corpus)?;
            let algorithms = algos
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| s.trim().parse())
                .collect::<Result<Vec<Algorithm>>>()?;
            let opts = SolveOptions { param, seed, repeats, budget, ..SolveOptions::default() };
            let report = bench(&entries, &algorithms, &opts, timings);
            if json {
                say!("{}", report.to_json());
            } else {
                say_raw!("{}", report.to_text());
            }
            Ok(0)
        }
    }
}

fn member(yes: bool) -> u8 {
    say!("{}", if yes { "member" } else { "not a member" });
    if yes {
        0
    } else {
        1
    }
}

fn print_set(label: &str, set: &[usize]) {
    let ids: Vec<String> = set.iter().map(|v| (v + 1).to_string()).collect();
    say!("{label}: {}", ids.join(" "));
}

fn recognize(g: &Graph, class: RecognizeClass, param: Option<usize>) -> Result<u8> {
    Ok(match class {
        RecognizeClass::P4free => member(subiso::graph::is_p4_free(g)),
        RecognizeClass::Vi => match param {
            Some(k) => {
                let cert = find_vi_set(g, k);
                if let Some(c) = &cert {
                    print_set("deletion set", &c.deletion_set);
                }
                member(cert.is_some())
            }
            None => {
                say!("vertex integrity: {}", vertex_integrity(g, g.n()).unwrap_or(0));
                0
            }
        },
        RecognizeClass::Hitting => match param {
            Some(k) => {
                let set = find_p4_hitting_set(g, k);
                if let Some(s) = &set {
                    print_set("hitting set", s);
                }
                member(set.is_some())
            }
            None => {
                say!("P4-hitting number: {}", p4_hitting_number(g, g.n()).unwrap_or(0));
                0
            }
        },
        RecognizeClass::Nd => {
            let tp = twin_partition(g);
            say!("neighborhood diversity: {}", tp.len());
            for (c, class) in tp.classes.iter().enumerate() {
                print_set(&format!("class {} ({:?})", c + 1, tp.kinds[c]), class);
            }
            match param {
                Some(k) => member(tp.len() <= k),
                None => 0,
            }
        }
    })
}

fn reduce_cmd(
    from: Source,
    input: &Path,
    out_host: &Path,
    out_pattern: &Path,
    witness: Option<&Path>,
    mode: Mode,
) -> Result<u8> {
    let text = std::fs::read_to_string(input)?;
    let (g, q, solution): (Graph, Graph, Option<Result<Option<Embedding>>>) = match from {
        Source::ThreePartition => {
            let inst = reduce::parse_3partition(&text)?;
            let mode = match mode {
                Mode::LinearForest => PartitionMode::LinearForest,
                Mode::Cluster => PartitionMode::Cluster,
            };
            let (g, q) = reduce::reduce_3partition(&inst, mode)?;
            let sol = witness.map(|_| {
                reduce::solve_3partition(&inst)?.map(|t| reduce::build_3partition_witness(&inst, &t)).transpose()
            });
            (g, q, sol)
        }
        Source::X3c => {
            let inst = reduce::parse_x3c(&text)?;
            let (g, q) = reduce::reduce_x3c(&inst)?;
            let sol = witness.map(|_| reduce::solve_x3c(&inst)?.map(|c| reduce::build_x3c_witness(&inst, &c)).transpose());
            (g, q, sol)
        }
        Source::Sat21 => {
            let f = reduce::parse_sat21(&text)?;
            let (g, q) = reduce::reduce_sat21(&f)?;
            let sol = witness.map(|_| reduce::solve_sat21(&f)?.map(|a| reduce::build_sat21_witness(&f, &a)).transpose());
            (g, q, sol)
        }
    };
    write_graph_file(out_host, &g)?;
    write_graph_file(out_pattern, &q)?;
    say!("host: {} vertices, {} edges; pattern: {} vertices, {} edges", g.n(), g.m(), q.n(), q.m());
    match (witness, solution) {
        (Some(path), Some(sol)) => match sol? {
            Some(e) => {
                debug_assert!(subiso::graph::verify_embedding(&q, &g, &e));
                std::fs::write(path, write_embedding(&e))?;
                say!("source instance solvable, witness written to {}", path.display());
                Ok(0)
            }
            None => {
                say!("source instance has no solution, no witness written");
                Ok(1)
            }
        },
        _ => Ok(0),
    }
}
