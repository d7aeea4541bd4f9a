use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use neppoll::analytics::{degree_label_correlation, DEFAULT_SIZE_CAP};
use neppoll::graph::LabeledGraph;
use neppoll::harness::{
    generate_graph, label_graph, run_checks, run_report, run_sweep, write_csv, ExperimentConfig,
    GeneratorModel, GeneratorSpec, HarnessError, LabelSource,
};
use neppoll::io::{read_edge_list, read_labels, save_edge_list, save_labels};

#[derive(Parser)]
#[command(
    name = "neppoll",
    version,
    about = "Neighborhood expectation polling experiments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Model {
    Config,
    Er,
}

#[derive(Subcommand)]
enum Command {
    /// Run a Monte-Carlo sweep described by a config file and write CSV.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        /// Output CSV; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads (default: all cores). Output does not depend on it.
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Print degree, paradox, spectral and error statistics of a dataset.
    Report {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        labels: Option<PathBuf>,
        /// Skip the dense spectral decomposition above this many nodes.
        #[arg(long, default_value_t = DEFAULT_SIZE_CAP)]
        spectral_cap: usize,
    },
    /// Generate a synthetic graph and labels.
    Generate {
        #[arg(long, value_enum)]
        model: Model,
        #[arg(long)]
        n: usize,
        /// Power-law exponent (configuration model).
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long, default_value_t = 1)]
        k_min: usize,
        #[arg(long)]
        k_max: Option<usize>,
        /// Edge probability (Erdos-Renyi).
        #[arg(long)]
        p: Option<f64>,
        /// Target degree assortativity.
        #[arg(long)]
        rkk: Option<f64>,
        /// Target degree-label correlation.
        #[arg(long)]
        rho: Option<f64>,
        /// Fraction of nodes labeled 1.
        #[arg(long, default_value_t = 0.3)]
        label_p: f64,
        /// Keep only the largest connected component.
        #[arg(long)]
        giant: bool,
        #[arg(long)]
        seed: u64,
        /// Output prefix; writes `<prefix>.edges` and `<prefix>.labels`.
        #[arg(long, default_value = "graph")]
        out: PathBuf,
    },
    /// Run the invariant suite on a graph and optional labels.
    Check {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        labels: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_SIZE_CAP)]
        spectral_cap: usize,
    },
}

fn usage(msg: impl Into<String>) -> HarnessError {
    HarnessError::Config(msg.into())
}

fn load_labeled(
    graph: &Path,
    labels: Option<&Path>,
) -> Result<(Arc<neppoll::Graph>, Option<LabeledGraph>), HarnessError> {
    let g = Arc::new(read_edge_list(graph)?);
    let lg = match labels {
        Some(path) => {
            let file = read_labels(&g, path)?;
            if file.missing > 0 {
                eprintln!(
                    "warning: {} nodes missing from label file, labeled 0",
                    file.missing
                );
            }
            Some(LabeledGraph::new(g.clone(), file.labels)?)
        }
        None => None,
    };
    Ok((g, lg))
}

fn with_extension(prefix: &Path, ext: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}

fn run(command: Command) -> Result<bool, HarnessError> {
    match command {
        Command::Sweep {
            config,
            out,
            threads,
        } => {
            let cfg = ExperimentConfig::load(&config)?;
            let mut pool = rayon::ThreadPoolBuilder::new();
            if let Some(t) = threads {
                if t == 0 {
                    return Err(usage("--threads must be at least 1"));
                }
                pool = pool.num_threads(t);
            }
            let pool = pool.build().map_err(|e| usage(e.to_string()))?;
            let rows = pool.install(|| run_sweep(&cfg))?;
            match out {
                Some(path) => {
                    let file =
                        File::create(&path).map_err(|source| neppoll::io::IoError::File {
                            path: path.clone(),
                            source,
                        })?;
                    write_csv(&rows, BufWriter::new(file))?;
                }
                None => write_csv(&rows, std::io::stdout().lock())?,
            }
            Ok(true)
        }
        Command::Report {
            graph,
            labels,
            spectral_cap,
        } => {
            let (g, lg) = load_labeled(&graph, labels.as_deref())?;
            print!("{}", run_report(&g, lg.as_ref(), spectral_cap));
            Ok(true)
        }
        Command::Generate {
            model,
            n,
            alpha,
            k_min,
            k_max,
            p,
            rkk,
            rho,
            label_p,
            giant,
            seed,
            out,
        } => {
            let model = match model {
                Model::Config => GeneratorModel::Configuration {
                    alpha: alpha.ok_or_else(|| usage("--alpha is required for --model config"))?,
                    k_min,
                    k_max,
                },
                Model::Er => GeneratorModel::ErdosRenyi {
                    p: p.ok_or_else(|| usage("--p is required for --model er"))?,
                },
            };
            if !(0.0..=1.0).contains(&label_p) {
                return Err(usage("--label-p must be in [0, 1]"));
            }
            let spec = GeneratorSpec {
                model,
                node_count: n,
                rkk,
                giant,
            };
            let generated = generate_graph(&spec, seed)?;
            let labeled = label_graph(
                Arc::new(generated.graph),
                &LabelSource::Generated { p: label_p, rho },
                seed,
            )?;
            let lg = &labeled.labeled;
            let edges_path = with_extension(&out, "edges");
            let labels_path = with_extension(&out, "labels");
            save_edge_list(lg.graph(), &edges_path)?;
            save_labels(lg, &labels_path)?;
            let g = lg.graph();
            println!("nodes: {}", g.node_count());
            println!("edges: {}", g.edge_count());
            println!("erased_stubs: {}", generated.erased_stubs);
            println!("dropped_nodes: {}", generated.dropped_nodes);
            match neppoll::analytics::assortativity(g) {
                Ok(r) => println!("r_kk: {r:.6}"),
                Err(_) => println!("r_kk: undefined"),
            }
            match degree_label_correlation(lg) {
                Ok(r) => println!("rho_kf: {r:.6}"),
                Err(_) => println!("rho_kf: undefined"),
            }
            println!("true_fraction: {:.6}", lg.true_fraction());
            println!(
                "wrote {} and {}",
                edges_path.display(),
                labels_path.display()
            );
            Ok(true)
        }
        Command::Check {
            graph,
            labels,
            spectral_cap,
        } => {
            let (g, lg) = load_labeled(&graph, labels.as_deref())?;
            let results = run_checks(&g, lg.as_ref(), spectral_cap);
            let mut stdout = std::io::stdout().lock();
            let mut all = true;
            for r in &results {
                all &= r.passed;
                let status = if r.passed { "PASS" } else { "FAIL" };
                writeln!(stdout, "{status} {}: {}", r.name, r.detail).ok();
            }
            Ok(all)
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("error: data: invariant check failed");
            ExitCode::from(1)
        }
        Err(e) => {
            let category = e.category();
            eprintln!("error: {category}: {e}");
            ExitCode::from(if category == "usage" { 2 } else { 1 })
        }
    }
}
