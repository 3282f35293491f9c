//! Batch experiments driven by `key = value` configs, one CSV row per trial.
//!
//! Trial `i` draws everything from `derive_seed(master, "trial", i)`, so rows
//! do not depend on scheduling and two runs of one config are byte-identical.

use std::fmt::Write as _;
use std::str::FromStr;

use rand::Rng;
use rayon::prelude::*;

use crate::absorber::{perturbed_biased_hamilton, ColourOracle, FnOracle, PipelineParams, RandomColouring};
use crate::adversary::{critical_colouring, find_large_independent_set, PartitionedColouringPlan};
use crate::error::{Error, Result};
use crate::graph::{colour_bias, cycle_colour_counts, is_hamilton_cycle, BiasReport, Colour, EdgeColouring, Graph};
use crate::models::{complete_split, gnm, random_min_degree_host, split_independent_side, union, Seed};
use crate::oracle::max_bias_fixed_colouring;
use crate::structure::{classify, critical_alpha, critical_biased_hamilton, CriticalParams, Thresholds};

pub const CSV_SCHEMA: &str = "# schema: hamcolour-trials v1";
pub const CSV_HEADER: &str = "trial,seed,outcome,colour,count,bias_numerator,bias_denominator,verified,attempts,d,q,floor,max_bias";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Pipeline,
    Critical,
    Classify,
    AdversaryAudit,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "pipeline" => Mode::Pipeline,
            "critical" => Mode::Critical,
            "classify" => Mode::Classify,
            "adversary-audit" => Mode::AdversaryAudit,
            _ => return Err(Error::ConfigInvalid(format!("unknown mode {s:?}"))),
        })
    }
}

/// How the edges are coloured in `pipeline` and `critical` trials.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Adversary {
    /// Independent uniform colours.
    Random,
    /// Colours read off an independent set split into `r - 1` parts.
    Partitioned,
}

impl FromStr for Adversary {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "random" => Ok(Adversary::Random),
            "partitioned" => Ok(Adversary::Partitioned),
            _ => Err(Error::ConfigInvalid(format!("unknown adversary {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentConfig {
    pub mode: Mode,
    pub n: usize,
    /// Host density; `critical` and `classify` default to `(r+1)/2r`.
    pub alpha: Option<f64>,
    pub r: Colour,
    /// Random edges for `critical` and `adversary-audit`.
    pub m: usize,
    pub adversary: Adversary,
    pub pipeline: PipelineParams,
    /// Requested bias for the classifier.
    pub b: usize,
    /// Scaled path length `t` for the classifier thresholds.
    pub t: usize,
    pub trials: usize,
    pub seed: u64,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            mode: Mode::Pipeline,
            n: 300,
            alpha: None,
            r: 2,
            m: 0,
            adversary: Adversary::Random,
            pipeline: PipelineParams::default(),
            b: 1,
            t: 4,
            trials: 10,
            seed: 0,
        }
    }
}

fn parse_value<T: FromStr>(key: &str, value: &str, line: usize) -> Result<T> {
    value.parse().map_err(|_| Error::Parse { line, msg: format!("bad value {value:?} for {key}") })
}

impl ExperimentConfig {
    /// Parses `key = value` lines; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut c = Self::default();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let (key, value) = body
                .split_once('=')
                .ok_or_else(|| Error::Parse { line, msg: format!("expected key = value, got {body:?}") })?;
            c.set(key.trim(), value.trim(), line)?;
        }
        c.validate()?;
        Ok(c)
    }

    /// Sets one field, as from a config line.
    pub fn set(&mut self, key: &str, value: &str, line: usize) -> Result<()> {
        let p = &mut self.pipeline;
        match key {
            "mode" => self.mode = value.parse()?,
            "n" => self.n = parse_value(key, value, line)?,
            "alpha" => self.alpha = Some(parse_value(key, value, line)?),
            "r" => self.r = parse_value(key, value, line)?,
            "m" => self.m = parse_value(key, value, line)?,
            "adversary" => self.adversary = value.parse()?,
            "b" => self.b = parse_value(key, value, line)?,
            "t" => self.t = parse_value(key, value, line)?,
            "trials" => self.trials = parse_value(key, value, line)?,
            "seed" => self.seed = parse_value(key, value, line)?,
            "epsilon" => p.epsilon = parse_value(key, value, line)?,
            "c1" => p.c1 = parse_value(key, value, line)?,
            "c2" => p.c2 = parse_value(key, value, line)?,
            "c3" => p.c3 = parse_value(key, value, line)?,
            "k_budget" => p.k_budget = parse_value(key, value, line)?,
            "delta" => p.delta = parse_value(key, value, line)?,
            "max_retries" => p.max_retries = parse_value(key, value, line)?,
            _ => return Err(Error::Parse { line, msg: format!("unknown key {key:?}") }),
        }
        Ok(())
    }

    pub fn alpha(&self) -> f64 {
        self.alpha.unwrap_or(match self.mode {
            Mode::Pipeline => self.pipeline.alpha,
            _ => critical_alpha(self.r),
        })
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::ConfigInvalid(m));
        if self.r < 2 {
            return Err(Error::TooFewColours(self.r));
        }
        if self.n < 3 {
            return bad(format!("n = {} is below 3", self.n));
        }
        let alpha = self.alpha();
        if !(alpha > 0.0 && alpha <= 1.0) {
            return bad(format!("alpha = {alpha} not in (0, 1]"));
        }
        match self.mode {
            Mode::Pipeline => {
                let mut p = self.pipeline.clone();
                p.alpha = alpha;
                p.r = self.r;
                p.validate()?;
            }
            Mode::Critical | Mode::AdversaryAudit => {
                if !self.n.is_multiple_of(2 * usize::from(self.r)) {
                    return Err(Error::IndivisibleN { n: self.n, two_r: 2 * usize::from(self.r) });
                }
                if self.mode == Mode::AdversaryAudit && self.n > 12 {
                    return bad(format!("adversary-audit enumerates cycles, n = {} exceeds 12", self.n));
                }
            }
            Mode::Classify => {
                if self.t < 2 {
                    return bad("t must be at least 2".into());
                }
            }
        }
        Ok(())
    }

    fn pipeline_params(&self) -> PipelineParams {
        PipelineParams { alpha: self.alpha(), r: self.r, ..self.pipeline.clone() }
    }
}

/// One trial. `verified` comes from an independent recheck of the output.
#[derive(Clone, Debug, PartialEq)]
pub struct TrialRecord {
    pub trial: usize,
    pub seed: u64,
    /// `success`, a classifier kind, or `failed:<step>`.
    pub outcome: String,
    pub bias: Option<BiasReport>,
    pub verified: bool,
    pub attempts: Option<usize>,
    pub d: Option<usize>,
    pub q: Option<usize>,
    pub floor: Option<i64>,
    /// Oracle maximum bias, as `numerator/denominator`.
    pub max_bias: Option<BiasReport>,
    /// Wall-clock time, not written to the CSV.
    pub millis: u128,
}

impl TrialRecord {
    fn new(trial: usize, seed: u64) -> Self {
        Self {
            trial,
            seed,
            outcome: String::new(),
            bias: None,
            verified: false,
            attempts: None,
            d: None,
            q: None,
            floor: None,
            max_bias: None,
            millis: 0,
        }
    }

    pub fn succeeded(&self) -> bool {
        !self.outcome.starts_with("failed")
    }

    fn failed(mut self, step: &str) -> Self {
        self.outcome = format!("failed:{step}");
        self
    }
}

pub fn trial_seed(master: u64, trial: usize) -> u64 {
    crate::models::derive_seed(master, "trial", trial as u64)
}

/// Runs every trial on up to `jobs` threads; records come back in trial order.
pub fn run_experiment(config: &ExperimentConfig, jobs: usize) -> Result<Vec<TrialRecord>> {
    config.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::ConfigInvalid(e.to_string()))?;
    Ok(pool.install(|| (0..config.trials).into_par_iter().map(|i| run_trial(config, i)).collect()))
}

pub fn run_trial(config: &ExperimentConfig, trial: usize) -> TrialRecord {
    let seed = trial_seed(config.seed, trial);
    let start = std::time::Instant::now();
    let rec = TrialRecord::new(trial, seed);
    let s = Seed::new(seed, "trial");
    let mut rec = match config.mode {
        Mode::Pipeline => pipeline_trial(config, rec, &s),
        Mode::Critical => critical_trial(config, rec, &s),
        Mode::Classify => classify_trial(config, rec, &s),
        Mode::AdversaryAudit => audit_trial(config, rec, &s),
    };
    rec.millis = start.elapsed().as_millis();
    rec
}

fn pipeline_trial(config: &ExperimentConfig, mut rec: TrialRecord, s: &Seed) -> TrialRecord {
    let params = config.pipeline_params();
    let Ok(host) = random_min_degree_host(config.n, params.alpha, &s.child("host", 0)) else {
        return rec.failed("host");
    };
    let plan = match config.adversary {
        Adversary::Random => None,
        Adversary::Partitioned => {
            // a random host has no independent set of size (r-1)n/2r, so the
            // greedy one is padded with the lowest remaining vertices
            let mut set = find_large_independent_set(&host, 0).unwrap_or_default();
            let need = (usize::from(config.r) - 1) * config.n / (2 * usize::from(config.r));
            let mut taken = crate::graph::vertex_mask(config.n, &set);
            for v in 0..config.n {
                if set.len() >= need {
                    break;
                }
                if !taken[v] {
                    taken[v] = true;
                    set.push(v);
                }
            }
            match PartitionedColouringPlan::new(config.n, config.r, &set) {
                Ok(p) => Some(p),
                Err(_) => return rec.failed("adversary"),
            }
        }
    };
    let random = RandomColouring { r: config.r, seed: s.derive(7) };
    let colour = |u, v| match &plan {
        Some(p) => p.colour_of(u, v),
        None => ColourOracle::colour(&mut { random }, u, v),
    };
    let Ok(out) = perturbed_biased_hamilton(&host, &mut FnOracle::new(config.r, &colour), &params, &s.child("pipeline", 0))
    else {
        return rec.failed("pipeline");
    };
    // recount the colours from scratch on the union
    let recount = EdgeColouring::from_fn(out.union.clone(), config.r, colour);
    rec.verified = host.is_subgraph_of(&out.union)
        && is_hamilton_cycle(&out.union, &out.cycle)
        && recount.and_then(|c| colour_bias(&out.cycle, &c)).ok() == Some(out.bias);
    rec.outcome = "success".into();
    rec.bias = Some(out.bias);
    rec.attempts = Some(out.attempts);
    rec
}

/// Host `complete_split(n, α)` coloured by the partition plan on its
/// independent side; random edges coloured by the plan or uniformly.
fn critical_instance(
    config: &ExperimentConfig,
    adversary: Adversary,
    s: &Seed,
) -> Result<(Graph, Graph, EdgeColouring)> {
    let n = config.n;
    let alpha = config.alpha();
    let host = complete_split(n, alpha);
    let r_edges = gnm(n, config.m, &s.child("random", 0))?;
    let colouring = match adversary {
        Adversary::Partitioned => critical_colouring(&host, &r_edges, config.r)?,
        Adversary::Random => {
            let plan = PartitionedColouringPlan::new(n, config.r, &split_independent_side(n, alpha))?;
            let mut rng = s.rng(11);
            let all = union(&host, &r_edges)?;
            EdgeColouring::from_fn(all, config.r, |u, v| {
                if host.has_edge(u, v) {
                    plan.colour_of(u, v)
                } else {
                    rng.gen_range(1..=config.r)
                }
            })?
        }
    };
    Ok((host, r_edges, colouring))
}

fn critical_trial(config: &ExperimentConfig, mut rec: TrialRecord, s: &Seed) -> TrialRecord {
    let Ok((host, r_edges, colouring)) = critical_instance(config, config.adversary, s) else {
        return rec.failed("instance");
    };
    let params = CriticalParams::scaled(config.b, config.t);
    let Ok(out) = critical_biased_hamilton(&host, &r_edges, &colouring, &params) else {
        return rec.failed("critical");
    };
    let valid = is_hamilton_cycle(colouring.graph(), &out.cycle);
    let recount = colour_bias(&out.cycle, &colouring).ok();
    rec.verified = valid && recount == Some(out.bias);
    if let Some(c) = &out.counting {
        let counts = cycle_colour_counts(&out.cycle, &colouring).unwrap_or_default();
        let direct = counts.get(usize::from(c.c_star) - 1).copied().unwrap_or(0);
        rec.verified &= direct == c.count && direct as i64 >= c.floor;
        rec.d = Some(c.d);
        rec.q = Some(c.q);
        rec.floor = Some(c.floor);
    }
    rec.outcome = out.classifier.to_string();
    rec.bias = Some(out.bias);
    rec
}

fn classify_trial(config: &ExperimentConfig, mut rec: TrialRecord, s: &Seed) -> TrialRecord {
    let Ok(host) = random_min_degree_host(config.n, config.alpha(), &s.child("host", 0)) else {
        return rec.failed("host");
    };
    let mut rng = s.rng(5);
    let Ok(colouring) = EdgeColouring::from_fn(host, config.r, |_, _| rng.gen_range(1..=config.r)) else {
        return rec.failed("colouring");
    };
    let th = Thresholds::scaled(config.t);
    let out = classify(&colouring, config.b, &th);
    rec.verified = out.verify(&colouring, config.b, &th).is_ok();
    rec.outcome = out.kind().to_string();
    rec.bias = out.cycle().map(|c| c.bias);
    rec
}

fn audit_trial(config: &ExperimentConfig, mut rec: TrialRecord, s: &Seed) -> TrialRecord {
    let Ok((_, r_edges, colouring)) = critical_instance(config, Adversary::Partitioned, s) else {
        return rec.failed("instance");
    };
    let Ok(best) = max_bias_fixed_colouring(&colouring) else {
        return rec.failed("oracle");
    };
    let bound = 2 * (i64::from(config.r) - 1) * r_edges.edge_count() as i64;
    rec.verified = best.report.bias_numerator <= bound * best.report.bias_denominator;
    rec.outcome = "audited".into();
    rec.bias = Some(best.report);
    rec.max_bias = Some(best.report);
    rec
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

/// The CSV text: schema line, header, one row per record and, when there are
/// trials, a summary comment with the success fraction and bias quartiles.
pub fn to_csv(records: &[TrialRecord]) -> String {
    let mut out = format!("{CSV_SCHEMA}\n{CSV_HEADER}\n");
    for r in records {
        let b = r.bias;
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{},{},{}",
            r.trial,
            r.seed,
            r.outcome,
            opt(b.map(|b| b.colour)),
            opt(b.map(|b| b.count)),
            opt(b.map(|b| b.bias_numerator)),
            opt(b.map(|b| b.bias_denominator)),
            r.verified,
            opt(r.attempts),
            opt(r.d),
            opt(r.q),
            opt(r.floor),
            opt(r.max_bias.map(|m| format!("{}/{}", m.bias_numerator, m.bias_denominator))),
        );
    }
    if !records.is_empty() {
        let ok = records.iter().filter(|r| r.succeeded()).count();
        let mut biases: Vec<f64> = records.iter().filter_map(|r| r.bias.map(|b| b.bias())).collect();
        biases.sort_by(f64::total_cmp);
        let q = |p: f64| {
            if biases.is_empty() {
                String::new()
            } else {
                format!("{:.4}", biases[((biases.len() - 1) as f64 * p).round() as usize])
            }
        };
        let _ = writeln!(
            out,
            "# summary trials={} success={} fraction={:.4} bias_q25={} bias_q50={} bias_q75={}",
            records.len(),
            ok,
            ok as f64 / records.len() as f64,
            q(0.25),
            q(0.5),
            q(0.75)
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_reject() {
        let c = ExperimentConfig::parse("mode = classify\nn = 16 # host size\n\nt = 2\ntrials=3\n").unwrap();
        assert_eq!((c.mode, c.n, c.t, c.trials), (Mode::Classify, 16, 2, 3));
        assert!(matches!(ExperimentConfig::parse("colour = 3"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(ExperimentConfig::parse("n = 10\nn"), Err(Error::Parse { line: 2, .. })));
        assert!(ExperimentConfig::parse("mode = critical\nn = 10").is_err());
        assert!(ExperimentConfig::parse("mode = pipeline\nepsilon = 2").is_err());
    }

    #[test]
    fn zero_trials_is_header_only() {
        let c = ExperimentConfig { trials: 0, ..Default::default() };
        let csv = to_csv(&run_experiment(&c, 1).unwrap());
        assert_eq!(csv, format!("{CSV_SCHEMA}\n{CSV_HEADER}\n"));
    }

    #[test]
    fn classify_runs_are_identical() {
        let c = ExperimentConfig::parse("mode = classify\nn = 14\nt = 2\ntrials = 6\nseed = 3").unwrap();
        let a = to_csv(&run_experiment(&c, 1).unwrap());
        let b = to_csv(&run_experiment(&c, 4).unwrap());
        assert_eq!(a, b);
        assert_eq!(a.lines().count(), 2 + 6 + 1);
    }

    #[test]
    fn audit_matches_bound() {
        let c = ExperimentConfig::parse("mode = adversary-audit\nn = 12\nalpha = 0.75\nm = 1\ntrials = 20")
            .unwrap();
        let recs = run_experiment(&c, 2).unwrap();
        assert_eq!(recs.len(), 20);
        for r in &recs {
            assert!(r.verified, "{r:?}");
            let m = r.max_bias.unwrap();
            assert!(m.bias_numerator <= 2 * m.bias_denominator);
        }
    }
}
