use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};

use hamcolour::absorber::{perturbed_biased_hamilton, PipelineParams, RandomColouring};
use hamcolour::adversary::{balanced_colouring, critical_colouring, find_large_independent_set};
use hamcolour::experiment::{run_experiment, to_csv, ExperimentConfig};
use hamcolour::graph::{colour_bias, CycleSeq, EdgeColouring, Graph, PathSeq};
use hamcolour::io::{read_coloured_graph, read_graph, write_coloured_graph, write_graph};
use hamcolour::models::{complete_split, gnm, gnp, random_min_degree_host, Seed};
use hamcolour::oracle;
use hamcolour::paths::{dfs_long_path, near_monochromatic_path, posa_hamilton_with_forest, PathForest};
use hamcolour::structure::{classify, critical_biased_hamilton, ClassifierOutcome, CriticalParams, Thresholds};

#[derive(Parser)]
#[command(name = "hamcolour", version, about = "Colour-biased Hamilton cycles: generators, constructions and exact oracles")]
struct Cli {
    /// Master seed; overrides `seed` in an experiment config.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Worker threads for batch work.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Output file; stdout when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// `key = value` parameter file.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Model {
    Gnp,
    Gnm,
    Split,
    Host,
}

#[derive(Clone, Copy, ValueEnum)]
enum Scheme {
    Balanced,
    Critical,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleMode {
    Hamilton,
    Bias,
    Hr,
    Path,
    Matching,
}

#[derive(Subcommand)]
enum Command {
    /// Write a random or extremal graph.
    Generate {
        #[arg(long, value_enum)]
        model: Model,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        alpha: f64,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        m: usize,
    },
    /// Colour a graph file.
    Colour {
        graph: PathBuf,
        #[arg(long, value_enum)]
        scheme: Scheme,
        #[arg(long, default_value_t = 2)]
        r: u8,
        /// Extra edges for the critical scheme.
        #[arg(long)]
        extra: Option<PathBuf>,
    },
    /// Colour bias of a cycle given as a vertex list.
    Bias {
        coloured: PathBuf,
        #[arg(long, num_args = 3.., value_delimiter = ' ')]
        cycle: Vec<usize>,
    },
    /// DFS long path, or a near-monochromatic path of a coloured graph.
    FindPath {
        graph: PathBuf,
        /// Treat the file as coloured and look for this many vertices.
        #[arg(long)]
        target: Option<usize>,
        #[arg(long, default_value_t = 0)]
        budget: usize,
    },
    /// Hamilton cycle through forced edges `u-v`.
    Posa {
        graph: PathBuf,
        #[arg(long, value_delimiter = ',')]
        forest: Vec<String>,
    },
    /// Biased Hamilton cycle of a perturbed host under a random colouring.
    Pipeline {
        host: PathBuf,
        #[arg(long, default_value_t = 2)]
        r: u8,
    },
    /// Classify a coloured host: biased cycle or structural witness.
    Classify {
        coloured: PathBuf,
        #[arg(long, default_value_t = 1)]
        b: usize,
        #[arg(long, default_value_t = 4)]
        t: usize,
        /// Write the full certificate here.
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Critical-density construction on a host plus random edges.
    Critical {
        host: PathBuf,
        random: PathBuf,
        /// Colouring of the union.
        coloured: PathBuf,
        #[arg(long, default_value_t = 1)]
        b: usize,
        #[arg(long, default_value_t = 4)]
        t: usize,
    },
    /// Exact brute-force answers for small graphs.
    Oracle {
        input: PathBuf,
        #[arg(long, value_enum)]
        mode: OracleMode,
        #[arg(long, default_value_t = 2)]
        r: u8,
    },
    /// Run a batch experiment from `--config`.
    Experiment,
}

fn emit(out: &Option<PathBuf>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn pipeline_params(config: &Option<PathBuf>, r: u8) -> anyhow::Result<PipelineParams> {
    let mut c = ExperimentConfig::default();
    if let Some(p) = config {
        for (i, raw) in read(p)?.lines().enumerate() {
            let body = raw.split('#').next().unwrap_or("").trim();
            if let Some((k, v)) = body.split_once('=') {
                c.set(k.trim(), v.trim(), i + 1)?;
            }
        }
    }
    let mut params = c.pipeline;
    params.r = r;
    if let Some(a) = c.alpha {
        params.alpha = a;
    }
    params.validate()?;
    Ok(params)
}

fn read(p: &Path) -> anyhow::Result<String> {
    fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))
}

fn cycle_line(c: &CycleSeq) -> String {
    format!("{c}\n")
}

fn main() -> anyhow::Result<()> {
    let cli = Cli::parse();
    let seed = Seed::new(cli.seed.unwrap_or(0), "cli");
    match cli.command {
        Command::Generate { model, n, alpha, p, m } => {
            let g = match model {
                Model::Gnp => gnp(n, p, &seed),
                Model::Gnm => gnm(n, m, &seed)?,
                Model::Split => complete_split(n, alpha),
                Model::Host => random_min_degree_host(n, alpha, &seed)?,
            };
            emit(&cli.out, &write_graph(&g))
        }
        Command::Colour { graph, scheme, r, extra } => {
            let g = read_graph(&graph)?;
            let col = match scheme {
                Scheme::Balanced => {
                    let a = find_large_independent_set(&g, 0).unwrap_or_default();
                    balanced_colouring(&g, r, &a)?
                }
                Scheme::Critical => {
                    let extra = match extra {
                        Some(p) => read_graph(&p)?,
                        None => Graph::empty(g.n()),
                    };
                    critical_colouring(&g, &extra, r)?
                }
                Scheme::Random => {
                    let mut o = RandomColouring { r, seed: seed.derive(0) };
                    EdgeColouring::from_fn(g, r, |u, v| hamcolour::absorber::ColourOracle::colour(&mut o, u, v))?
                }
            };
            emit(&cli.out, &write_coloured_graph(&col))
        }
        Command::Bias { coloured, cycle } => {
            let col = read_coloured_graph(&coloured)?;
            let c = CycleSeq::new(cycle)?;
            c.validate(col.graph())?;
            let b = colour_bias(&c, &col)?;
            emit(&cli.out, &format!("colour,count,bias_numerator,bias_denominator\n{},{},{},{}\n", b.colour, b.count, b.bias_numerator, b.bias_denominator))
        }
        Command::FindPath { graph, target, budget } => {
            let path: PathSeq = match target {
                None => dfs_long_path(&read_graph(&graph)?, 0),
                Some(t) => near_monochromatic_path(&read_coloured_graph(&graph)?, t, budget)?.path,
            };
            let vs: Vec<String> = path.vertices().iter().map(ToString::to_string).collect();
            emit(&cli.out, &format!("{}\n", vs.join(" ")))
        }
        Command::Posa { graph, forest } => {
            let g = read_graph(&graph)?;
            let mut edges = Vec::new();
            for e in forest.iter().filter(|e| !e.is_empty()) {
                let Some((u, v)) = e.split_once('-') else { bail!("edge {e:?} is not u-v") };
                edges.push((u.trim().parse()?, v.trim().parse()?));
            }
            let cycle = posa_hamilton_with_forest(&g, &PathForest::from_edges(&edges)?)?;
            emit(&cli.out, &cycle_line(&cycle))
        }
        Command::Pipeline { host, r } => {
            let g = read_graph(&host)?;
            let params = pipeline_params(&cli.config, r)?;
            let mut o = RandomColouring { r, seed: seed.derive(7) };
            let out = perturbed_biased_hamilton(&g, &mut o, &params, &seed.child("pipeline", 0))?;
            let b = out.bias;
            let text = format!(
                "{}colour,count,bias_numerator,bias_denominator,attempts\n{},{},{},{},{}\n{}",
                cycle_line(&out.cycle),
                b.colour,
                b.count,
                b.bias_numerator,
                b.bias_denominator,
                out.attempts,
                out.transcript
            );
            emit(&cli.out, &text)
        }
        Command::Classify { coloured, b, t, certificate } => {
            let col = read_coloured_graph(&coloured)?;
            let th = Thresholds::scaled(t);
            let outcome = classify(&col, b, &th);
            let verified = outcome.verify(&col, b, &th).is_ok();
            let (summary, bias) = match &outcome {
                ClassifierOutcome::Witness(w) => (format!("c*={} |U|={} free={}", w.c_star, w.u.len(), w.max_free_matching.len()), None),
                other => (other.cycle().map_or("no cycle".into(), |c| format!("route={}", c.route)), other.cycle().map(|c| c.bias)),
            };
            let bias = bias.map_or(String::new(), |b| format!("{}/{}", b.bias_numerator, b.bias_denominator));
            if let Some(p) = certificate {
                fs::write(&p, format!("{outcome:#?}\n")).with_context(|| format!("writing {}", p.display()))?;
            }
            emit(&cli.out, &format!("kind,certificate,bias,verified\n{},{summary},{bias},{verified}\n", outcome.kind()))
        }
        Command::Critical { host, random, coloured, b, t } => {
            let (g, r, col) = (read_graph(&host)?, read_graph(&random)?, read_coloured_graph(&coloured)?);
            let out = critical_biased_hamilton(&g, &r, &col, &CriticalParams::scaled(b, t))?;
            let mut text = cycle_line(&out.cycle);
            text.push_str("classifier,bias_numerator,bias_denominator,d,q,count,floor\n");
            let c = out.counting.as_ref();
            text.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                out.classifier,
                out.bias.bias_numerator,
                out.bias.bias_denominator,
                c.map_or(String::new(), |c| c.d.to_string()),
                c.map_or(String::new(), |c| c.q.to_string()),
                c.map_or(String::new(), |c| c.count.to_string()),
                c.map_or(String::new(), |c| c.floor.to_string()),
            ));
            emit(&cli.out, &text)
        }
        Command::Oracle { input, mode, r } => {
            let text = match mode {
                OracleMode::Hamilton => {
                    let cycles = oracle::enumerate_hamilton_cycles(&read_graph(&input)?)?;
                    let mut s = format!("{}\n", cycles.len());
                    for c in &cycles {
                        s.push_str(&cycle_line(c));
                    }
                    s
                }
                OracleMode::Bias => {
                    let mb = oracle::max_bias_fixed_colouring(&read_coloured_graph(&input)?)?;
                    format!("{}\n{}", mb.report, cycle_line(&mb.cycle))
                }
                OracleMode::Hr => {
                    let v = oracle::exact_hr_tiny(&read_graph(&input)?, r)?;
                    format!("{}/{}\n", v.numerator, v.denominator)
                }
                OracleMode::Path => {
                    let p = oracle::longest_path_exact(&read_graph(&input)?)?;
                    let vs: Vec<String> = p.vertices().iter().map(ToString::to_string).collect();
                    format!("{}\n", vs.join(" "))
                }
                OracleMode::Matching => {
                    let m = oracle::max_matching_exact(&read_graph(&input)?);
                    let es: Vec<String> = m.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
                    format!("{}\n{}\n", m.len(), es.join(" "))
                }
            };
            emit(&cli.out, &text)
        }
        Command::Experiment => {
            let Some(path) = &cli.config else { bail!("experiment needs --config") };
            let mut config = ExperimentConfig::parse(&read(path)?)?;
            if let Some(s) = cli.seed {
                config.seed = s;
            }
            let records = run_experiment(&config, cli.jobs)?;
            emit(&cli.out, &to_csv(&records))
        }
    }
}
