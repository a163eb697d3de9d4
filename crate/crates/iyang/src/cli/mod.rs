//! Batch front end: JSON case descriptors in, deterministic JSON reports out.
//!
//! A descriptor is validated against the configured [`Limits`] before any
//! computation. Reports are serialized from typed structs, so field order is
//! fixed by declaration order and maps are ordered.

pub mod suite;

use std::collections::BTreeMap;

use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classical::{homogeneity_check, verify_classical, ClassicalReport, HomogeneityReport};
use crate::igklo::{verify_igklo, GKLOContext, ZMode};
use crate::iquiver::{ificate, numerology, validate, FramedQuiverData, IGaugeData, NumerologyReport};
use crate::islices::{epsilon_collapse_fast, islice_orbit_data, strata_partitions, IsliceOrbitData, StratumPartition};
use crate::iyangian::{pbw_generators, pbw_hilbert_series, VerificationReport};
use crate::rootdata::{gklo_integers, Coweight, DynkinKind, GKLOIntegers, SatakeDiagram, Sign};
use crate::{Error, Result};

/// The commands of the front end.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Quantum relations on the difference-operator images.
    IgkloVerify,
    /// Poisson relations, auxiliary identities and homogeneity.
    ClassicalVerify,
    /// Partition data and strata of a type AI islice.
    Islice,
    /// Folded gauge data and rank numerology of a framed quiver.
    Iquiverify,
    /// Graded generator counts of the PBW basis.
    PbwCount,
    /// The full acceptance battery.
    Suite,
}

impl Command {
    /// Command name as typed on the command line.
    pub fn name(self) -> &'static str {
        match self {
            Command::IgkloVerify => "igklo-verify",
            Command::ClassicalVerify => "classical-verify",
            Command::Islice => "islice",
            Command::Iquiverify => "iquiverify",
            Command::PbwCount => "pbw-count",
            Command::Suite => "suite",
        }
    }
}

/// Treatment of the central variables requested on the command line or in a descriptor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ZChoice {
    /// Independent symbols.
    Symbolic,
    /// All zero.
    Zero,
}

impl ZChoice {
    fn mode(self) -> ZMode {
        match self {
            ZChoice::Symbolic => ZMode::Symbolic,
            ZChoice::Zero => ZMode::Zero,
        }
    }
}

/// Diagram part of a descriptor; nodes are one-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagramDescriptor {
    /// `A`, `D` or `E`.
    pub kind: DynkinKind,
    /// Number of nodes.
    pub rank: usize,
    /// Pairs `[i, τi]` with `i != τi`; unlisted nodes are fixed.
    #[serde(default)]
    pub tau: Vec<(usize, usize)>,
    /// Arrows `[from, to]`; the first valid orientation when absent.
    #[serde(default)]
    pub orientation: Option<Vec<(usize, usize)>>,
    /// Colours `[node, "+" | "-"]` of the nodes of `I_0`; the default colouring when absent.
    #[serde(default)]
    pub bipartite: Option<Vec<(usize, String)>>,
}

/// A case descriptor. Which fields are required depends on the command.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CaseDescriptor {
    /// Name echoed in the report.
    #[serde(default)]
    pub name: Option<String>,
    /// Satake diagram.
    #[serde(default)]
    pub diagram: Option<DiagramDescriptor>,
    /// `n` of `PGL_n` for `islice`.
    #[serde(default)]
    pub n: Option<usize>,
    /// Pairings `<λ, α_i>`.
    #[serde(default)]
    pub lambda: Option<Vec<i64>>,
    /// Pairings `<μ, α_i>`.
    #[serde(default)]
    pub mu: Option<Vec<i64>>,
    /// Pairings `<μ₁, α_i>` for `pbw-count`; `μ/2` when absent.
    #[serde(default)]
    pub mu1: Option<Vec<i64>>,
    /// Gauge dimensions for `iquiverify` without coweights.
    #[serde(default)]
    pub v: Option<Vec<i64>>,
    /// Framing dimensions for `iquiverify` without coweights.
    #[serde(default)]
    pub w: Option<Vec<i64>>,
    /// Truncation order.
    #[serde(default, rename = "K")]
    pub k: Option<i64>,
    /// Treatment of `z`.
    #[serde(default)]
    pub z: Option<ZChoice>,
    /// Overrides `[node, ζ]` on `I_1 ∪ I_{-1}`.
    #[serde(default)]
    pub zeta: Option<Vec<(usize, i64)>>,
}

/// Bounds enforced on every descriptor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Limits {
    /// Largest truncation order.
    pub max_k: i64,
    /// Largest diagram rank (for `islice`, `n - 1`).
    pub max_rank: usize,
    /// Largest `𝔳_i`.
    pub max_frak_v: i64,
}

impl Default for Limits {
    fn default() -> Limits {
        Limits {
            max_k: 8,
            max_rank: 8,
            max_frak_v: 4,
        }
    }
}

/// Command-line overrides applied on top of a descriptor.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Overrides {
    /// `--K`.
    pub k: Option<i64>,
    /// `--z`.
    pub z: Option<ZChoice>,
    /// `--both-signs`.
    pub both_signs: bool,
}

fn schema(msg: impl Into<String>) -> Error {
    Error::Schema(msg.into())
}

/// Parses a descriptor, reporting malformed JSON as a schema error.
pub fn parse_descriptor(text: &str) -> Result<CaseDescriptor> {
    serde_json::from_str(text).map_err(|e| schema(e.to_string()))
}

fn coweight(field: &str, v: &Option<Vec<i64>>, rank: usize) -> Result<Coweight> {
    let v = v.as_ref().ok_or_else(|| schema(format!("missing field `{}`", field)))?;
    if v.len() != rank {
        return Err(schema(format!("`{}` has {} entries, expected {}", field, v.len(), rank)));
    }
    Ok(Coweight(v.clone()))
}

fn node(i: usize, rank: usize, what: &str) -> Result<usize> {
    if i == 0 || i > rank {
        return Err(schema(format!("{} refers to node {} outside 1..={}", what, i, rank)));
    }
    Ok(i - 1)
}

/// Builds the diagram, turning every malformed field into a schema error.
pub fn build_diagram(desc: &DiagramDescriptor, limits: &Limits) -> Result<SatakeDiagram> {
    let rank = desc.rank;
    if rank == 0 || rank > limits.max_rank {
        return Err(schema(format!("rank {} outside 1..={}", rank, limits.max_rank)));
    }
    let mut tau: Vec<usize> = (0..rank).collect();
    let mut seen = vec![false; rank];
    for &(a, b) in &desc.tau {
        let (a, b) = (node(a, rank, "tau")?, node(b, rank, "tau")?);
        if a == b || seen[a] || seen[b] {
            return Err(schema(format!("tau pairs do not define an involution at ({}, {})", a + 1, b + 1)));
        }
        seen[a] = true;
        seen[b] = true;
        tau[a] = b;
        tau[b] = a;
    }
    let arrows = desc
        .orientation
        .as_ref()
        .map(|arr| {
            arr.iter()
                .map(|&(a, b)| Ok((node(a, rank, "orientation")?, node(b, rank, "orientation")?)))
                .collect::<Result<Vec<_>>>()
        })
        .transpose()?;
    let colours = desc
        .bipartite
        .as_ref()
        .map(|cols| {
            cols.iter()
                .map(|(i, s)| {
                    let sign = match s.as_str() {
                        "+" => Sign::Plus,
                        "-" => Sign::Minus,
                        _ => return Err(schema(format!("colour `{}` is not `+` or `-`", s))),
                    };
                    Ok((node(*i, rank, "bipartite")?, sign))
                })
                .collect::<Result<BTreeMap<usize, Sign>>>()
        })
        .transpose()?;
    SatakeDiagram::new(desc.kind, rank, &tau, arrows.as_deref(), colours.as_ref()).map_err(|e| schema(e.to_string()))
}

fn check_k(k: i64, limits: &Limits) -> Result<i64> {
    if !(0..=limits.max_k).contains(&k) {
        return Err(schema(format!("K = {} outside 0..={}", k, limits.max_k)));
    }
    Ok(k)
}

fn check_frak_v(g: &GKLOIntegers, limits: &Limits) -> Result<()> {
    match g.frak_v.iter().max() {
        Some(&m) if m > limits.max_frak_v => Err(schema(format!(
            "frak v = {:?} exceeds the limit {}",
            g.frak_v, limits.max_frak_v
        ))),
        _ => Ok(()),
    }
}

/// The diagram as rendered in reports, with one-based nodes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagramSummary {
    /// Kind, rank and involution.
    pub label: String,
    /// Arrows of the orientation.
    pub orientation: Vec<(usize, usize)>,
    /// Colours of `I_0`.
    pub bipartite: Vec<(usize, String)>,
}

impl DiagramSummary {
    /// Summary of a diagram.
    pub fn of(d: &SatakeDiagram) -> DiagramSummary {
        DiagramSummary {
            label: d.label(),
            orientation: d.arrows().iter().map(|&(a, b)| (a + 1, b + 1)).collect(),
            bipartite: d.bipartite().iter().map(|(&i, s)| (i + 1, s.symbol().to_string())).collect(),
        }
    }
}

/// Result of `igklo-verify`.
#[derive(Clone, Debug, Serialize)]
pub struct IgkloResult {
    /// Diagram used.
    pub diagram: DiagramSummary,
    /// Pairings of `λ`.
    pub lambda: Vec<i64>,
    /// Pairings of `μ`.
    pub mu: Vec<i64>,
    /// Truncation order.
    pub k: i64,
    /// Treatment of `z`.
    pub z: ZChoice,
    /// Integer data including `ζ`.
    pub integers: GKLOIntegers,
    /// Per-relation tallies and failures.
    pub relations: VerificationReport,
}

/// Result of `classical-verify`.
#[derive(Clone, Debug, Serialize)]
pub struct ClassicalResult {
    /// Diagram used.
    pub diagram: DiagramSummary,
    /// Pairings of `λ`.
    pub lambda: Vec<i64>,
    /// Pairings of `μ`.
    pub mu: Vec<i64>,
    /// Truncation order.
    pub k: i64,
    /// Treatment of `z` for the relations; homogeneity always uses `z = 0`.
    pub z: ZChoice,
    /// Integer data including `ζ`.
    pub integers: GKLOIntegers,
    /// Relations and auxiliary identities.
    pub report: ClassicalReport,
    /// Degrees of the images.
    pub homogeneity: HomogeneityReport,
}

/// A named boolean check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedCheck {
    /// Name.
    pub name: String,
    /// Outcome.
    pub pass: bool,
}

fn named(name: &str, pass: bool) -> NamedCheck {
    NamedCheck {
        name: name.to_string(),
        pass,
    }
}

/// Result of `islice`.
#[derive(Clone, Debug, Serialize)]
pub struct IsliceResult {
    /// Partition data of the slice.
    pub data: IsliceOrbitData,
    /// Strata with their partitions.
    pub strata: Vec<StratumPartition>,
    /// Consistency checks.
    pub checks: Vec<NamedCheck>,
}

/// Result of `iquiverify` for one bipartite colouring.
#[derive(Clone, Debug, Serialize)]
pub struct IquiverResult {
    /// Diagram used.
    pub diagram: DiagramSummary,
    /// Gauge dimensions.
    pub v: Vec<i64>,
    /// Framing dimensions.
    pub w: Vec<i64>,
    /// Failed hypotheses, empty when the data is admissible.
    pub violations: Vec<String>,
    /// Folded groups and `E^ι`.
    pub groups: Option<IGaugeData>,
    /// Rank numerology, when coweights were given.
    pub numerology: Option<NumerologyReport>,
}

/// Result of `pbw-count`.
#[derive(Clone, Debug, Serialize)]
pub struct PbwResult {
    /// Diagram used.
    pub diagram: DiagramSummary,
    /// Pairings of `μ`.
    pub mu: Vec<i64>,
    /// Pairings of `μ₁`.
    pub mu1: Vec<i64>,
    /// Truncation degree.
    pub k: i64,
    /// Number of generators in each degree `0..=K`.
    pub generators: Vec<usize>,
    /// Graded dimensions in each degree `0..=K`, as decimal strings.
    pub series: Vec<String>,
}

/// Command-specific payload of a report.
#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum Outcome {
    /// `igklo-verify`.
    Igklo(IgkloResult),
    /// `classical-verify`.
    Classical(ClassicalResult),
    /// `islice`.
    Islice(IsliceResult),
    /// `iquiverify`, one entry per colouring.
    Iquiver(Vec<IquiverResult>),
    /// `pbw-count`.
    Pbw(PbwResult),
    /// `suite`.
    Suite(Vec<suite::CriterionResult>),
}

/// One case report.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    /// Command name.
    pub command: &'static str,
    /// Case name.
    pub case: String,
    /// Whether every check passed.
    pub pass: bool,
    /// Payload.
    pub result: Outcome,
}

/// The document written by the front end.
#[derive(Clone, Debug, Serialize)]
pub struct Document {
    /// Conjunction of the case outcomes.
    pub pass: bool,
    /// One report per case, in input order.
    pub reports: Vec<Report>,
}

impl Document {
    /// Pretty JSON with a trailing newline.
    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

fn diagram_of(desc: &CaseDescriptor, limits: &Limits) -> Result<SatakeDiagram> {
    let d = desc.diagram.as_ref().ok_or_else(|| schema("missing field `diagram`"))?;
    build_diagram(d, limits)
}

fn context(desc: &CaseDescriptor, limits: &Limits, k: i64, z: ZChoice) -> Result<GKLOContext> {
    let d = diagram_of(desc, limits)?;
    let rank = d.rank();
    let lam = coweight("lambda", &desc.lambda, rank)?;
    let mu = coweight("mu", &desc.mu, rank)?;
    let zeta = desc
        .zeta
        .as_ref()
        .map(|z| z.iter().map(|&(i, x)| Ok((node(i, rank, "zeta")?, x))).collect::<Result<Vec<_>>>())
        .transpose()?;
    let ctx = GKLOContext::new(d, lam, mu, zeta.as_deref(), z.mode(), k).map_err(|e| schema(e.to_string()))?;
    check_frak_v(&ctx.ints, limits)?;
    Ok(ctx)
}

fn run_igklo(desc: &CaseDescriptor, limits: &Limits, ov: &Overrides) -> Result<(bool, Outcome)> {
    let k = check_k(ov.k.or(desc.k).unwrap_or(4), limits)?;
    let z = ov.z.or(desc.z).unwrap_or(ZChoice::Symbolic);
    let ctx = context(desc, limits, k, z)?;
    let relations = verify_igklo(&ctx)?;
    let pass = relations.all_passed();
    Ok((
        pass,
        Outcome::Igklo(IgkloResult {
            diagram: DiagramSummary::of(&ctx.diagram),
            lambda: ctx.lam.0.clone(),
            mu: ctx.mu.0.clone(),
            k,
            z,
            integers: ctx.ints.clone(),
            relations,
        }),
    ))
}

fn run_classical(desc: &CaseDescriptor, limits: &Limits, ov: &Overrides) -> Result<(bool, Outcome)> {
    let k = check_k(ov.k.or(desc.k).unwrap_or(4), limits)?;
    let z = ov.z.or(desc.z).unwrap_or(ZChoice::Zero);
    let ctx = context(desc, limits, k, z)?;
    let report = verify_classical(&ctx)?;
    let homogeneity = homogeneity_check(&ctx.with_z_mode(ZMode::Zero), None)?;
    let pass = report.all_passed() && homogeneity.ok();
    Ok((
        pass,
        Outcome::Classical(ClassicalResult {
            diagram: DiagramSummary::of(&ctx.diagram),
            lambda: ctx.lam.0.clone(),
            mu: ctx.mu.0.clone(),
            k,
            z,
            integers: ctx.ints.clone(),
            report,
            homogeneity,
        }),
    ))
}

fn run_islice(desc: &CaseDescriptor, limits: &Limits) -> Result<(bool, Outcome)> {
    let n = desc.n.ok_or_else(|| schema("missing field `n`"))?;
    if n < 2 || n - 1 > limits.max_rank {
        return Err(schema(format!("n = {} outside 2..={}", n, limits.max_rank + 1)));
    }
    let lam = coweight("lambda", &desc.lambda, n - 1)?;
    let mu = coweight("mu", &desc.mu, n - 1)?;
    let data = islice_orbit_data(n, &lam, &mu)?;
    let strata = strata_partitions(n, &lam, &mu)?;
    let mut checks = vec![
        named("collapse_rules_agree", epsilon_collapse_fast(&data.pi1, data.eps)? == data.collapse),
        named("strata_contain_lambda", strata.iter().any(|s| s.nu == data.lam)),
        named(
            "strata_contain_mu",
            strata.iter().any(|s| s.nu == data.mu),
        ),
    ];
    if data.parity_condition {
        checks.push(named("dimension_matches_orbits", data.dim == data.orbit_dim));
    }
    let pass = checks.iter().all(|c| c.pass);
    Ok((pass, Outcome::Islice(IsliceResult { data, strata, checks })))
}

fn iquiver_one(d: SatakeDiagram, desc: &CaseDescriptor, limits: &Limits) -> Result<(bool, IquiverResult)> {
    let rank = d.rank();
    let coweights = match (&desc.lambda, &desc.mu) {
        (None, None) => None,
        _ => Some((coweight("lambda", &desc.lambda, rank)?, coweight("mu", &desc.mu, rank)?)),
    };
    let (v, w) = match &coweights {
        Some((lam, mu)) => {
            let g = gklo_integers(lam, mu, &d, None).map_err(|e| schema(e.to_string()))?;
            check_frak_v(&g, limits)?;
            (g.v, g.w_cap)
        }
        None => (
            coweight("v", &desc.v, rank)?.0,
            coweight("w", &desc.w, rank)?.0,
        ),
    };
    let data = FramedQuiverData { diagram: d, v, w };
    let violations: Vec<String> = validate(&data).iter().map(|x| x.to_string()).collect();
    let groups = if violations.is_empty() { Some(ificate(&data)?) } else { None };
    let numerology = match (&coweights, violations.is_empty()) {
        (Some((lam, mu)), true) => Some(numerology(&data, lam, mu)?),
        _ => None,
    };
    let pass = violations.is_empty() && numerology.as_ref().map_or(true, |n| n.all_passed());
    Ok((
        pass,
        IquiverResult {
            diagram: DiagramSummary::of(&data.diagram),
            v: data.v,
            w: data.w,
            violations,
            groups,
            numerology,
        },
    ))
}

fn run_iquiver(desc: &CaseDescriptor, limits: &Limits, ov: &Overrides) -> Result<(bool, Outcome)> {
    let d = diagram_of(desc, limits)?;
    let mut variants = vec![d.clone()];
    if ov.both_signs {
        variants.push(d.with_flipped_bipartite());
    }
    let mut pass = true;
    let mut out = Vec::new();
    for d in variants {
        let (p, r) = iquiver_one(d, desc, limits)?;
        pass &= p;
        out.push(r);
    }
    Ok((pass, Outcome::Iquiver(out)))
}

fn run_pbw(desc: &CaseDescriptor, limits: &Limits, ov: &Overrides) -> Result<(bool, Outcome)> {
    let d = diagram_of(desc, limits)?;
    let rank = d.rank();
    let k = ov.k.or(desc.k).unwrap_or(6);
    if !(0..=4 * limits.max_k).contains(&k) {
        return Err(schema(format!("K = {} outside 0..={}", k, 4 * limits.max_k)));
    }
    let mu = match &desc.mu {
        Some(_) => coweight("mu", &desc.mu, rank)?,
        None => Coweight::zero(rank),
    };
    let mu1 = match &desc.mu1 {
        Some(_) => coweight("mu1", &desc.mu1, rank)?,
        None => {
            if !mu.is_even() {
                return Err(schema("`mu` is not even, so `mu1` must be given"));
            }
            Coweight(mu.0.iter().map(|m| m / 2).collect())
        }
    };
    let gens = pbw_generators(&mu, &mu1, &d, k).map_err(|e| schema(e.to_string()))?;
    let mut generators = vec![0usize; k as usize + 1];
    for g in &gens {
        if let Some(slot) = g.degree.to_usize().and_then(|x| generators.get_mut(x)) {
            *slot += 1;
        }
    }
    let series = pbw_hilbert_series(&mu, &mu1, &d, k)?.iter().map(|c| c.to_string()).collect();
    Ok((
        true,
        Outcome::Pbw(PbwResult {
            diagram: DiagramSummary::of(&d),
            mu: mu.0,
            mu1: mu1.0,
            k,
            generators,
            series,
        }),
    ))
}

/// Runs one command on one descriptor.
pub fn run(command: Command, desc: &CaseDescriptor, limits: &Limits, ov: &Overrides) -> Result<Report> {
    let (pass, result) = match command {
        Command::IgkloVerify => run_igklo(desc, limits, ov)?,
        Command::ClassicalVerify => run_classical(desc, limits, ov)?,
        Command::Islice => run_islice(desc, limits)?,
        Command::Iquiverify => run_iquiver(desc, limits, ov)?,
        Command::PbwCount => run_pbw(desc, limits, ov)?,
        Command::Suite => {
            let results = suite::run_all();
            (results.iter().all(|r| r.pass), Outcome::Suite(results))
        }
    };
    Ok(Report {
        command: command.name(),
        case: desc.name.clone().unwrap_or_default(),
        pass,
        result,
    })
}

/// Runs one command on several descriptors in parallel on at most `jobs`
/// workers; reports keep the input order. The first error in input order wins.
pub fn run_many(command: Command, descs: &[CaseDescriptor], limits: &Limits, ov: &Overrides, jobs: usize) -> Result<Document> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Schema(format!("cannot start workers: {}", e)))?;
    let results: Vec<Result<Report>> = pool.install(|| descs.par_iter().map(|d| run(command, d, limits, ov)).collect());
    let reports = results.into_iter().collect::<Result<Vec<Report>>>()?;
    Ok(Document {
        pass: reports.iter().all(|r| r.pass),
        reports,
    })
}

#[cfg(test)]
mod tests;
