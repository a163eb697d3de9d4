//! Iota-fication of framed double quivers: validation of the symmetry and
//! parity conditions on dimension vectors, the gauge and flavor groups of the
//! folded quiver, the dimension of the symplectic representation `E^ι`, and
//! the rank numerology against the islice side.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::classical::ix_dimension_data;
use crate::rootdata::{gklo_integers, Coweight, NodeClass, SatakeDiagram, Sign};
use crate::{Error, Result};

/// A Satake diagram with dimension vectors `v` (gauge) and `w` (framing).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FramedQuiverData {
    /// Diagram, orientation and bipartite colouring of `I_0`.
    pub diagram: SatakeDiagram,
    /// `dim V_i`.
    pub v: Vec<i64>,
    /// `dim W_i`.
    pub w: Vec<i64>,
}

/// One failed hypothesis of [`validate`]; nodes are zero-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Violation {
    /// A dimension vector has the wrong length.
    Length,
    /// A negative dimension.
    Negative(usize),
    /// `v_i != v_{τi}` or `w_i != w_{τi}`.
    TauAsymmetric(usize),
    /// `v_i` and `w_i` both odd at a `τ`-fixed node.
    OddPair(usize),
    /// Both ends of an edge inside `I_0` carry odd `v`.
    OddEdge(usize, usize),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Length => write!(f, "dimension vectors do not match the rank"),
            Violation::Negative(i) => write!(f, "negative dimension at node {}", i + 1),
            Violation::TauAsymmetric(i) => write!(f, "dimensions at node {} differ from its tau partner", i + 1),
            Violation::OddPair(i) => write!(f, "v and w are both odd at fixed node {}", i + 1),
            Violation::OddEdge(a, b) => write!(f, "v is odd at both ends of edge {}-{}", a + 1, b + 1),
        }
    }
}

/// Checks `τ`-symmetry, the parity of `(v_i, w_i)` on `I_0` and of `v` along edges inside `I_0`.
pub fn validate(data: &FramedQuiverData) -> Vec<Violation> {
    let d = &data.diagram;
    let n = d.rank();
    if data.v.len() != n || data.w.len() != n {
        return vec![Violation::Length];
    }
    let mut out = Vec::new();
    for i in 0..n {
        if data.v[i] < 0 || data.w[i] < 0 {
            out.push(Violation::Negative(i));
        }
    }
    for i in 0..n {
        let t = d.tau(i);
        if t > i && (data.v[i] != data.v[t] || data.w[i] != data.w[t]) {
            out.push(Violation::TauAsymmetric(i));
        }
        if t == i && data.v[i] % 2 != 0 && data.w[i] % 2 != 0 {
            out.push(Violation::OddPair(i));
        }
    }
    for (a, b) in d.edges() {
        let fixed = d.class(a) == NodeClass::Zero && d.class(b) == NodeClass::Zero;
        if fixed && data.v[a] % 2 != 0 && data.v[b] % 2 != 0 {
            out.push(Violation::OddEdge(a, b));
        }
    }
    out
}

/// Type of a group factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum GroupKind {
    /// `GL(d)`.
    GL,
    /// `SO(d)` on an orthogonal space.
    SO,
    /// `Sp(d)` on a symplectic space.
    Sp,
}

impl GroupKind {
    /// Rank of the group acting on a space of dimension `dim`.
    pub fn rank(self, dim: i64) -> i64 {
        match self {
            GroupKind::GL => dim,
            GroupKind::SO | GroupKind::Sp => dim / 2,
        }
    }

    /// Dimension of the group acting on a space of dimension `dim`.
    pub fn dimension(self, dim: i64) -> i64 {
        match self {
            GroupKind::GL => dim * dim,
            GroupKind::SO => dim * (dim - 1) / 2,
            GroupKind::Sp => dim * (dim + 1) / 2,
        }
    }

    fn form(self) -> Option<Sign> {
        match self {
            GroupKind::GL => None,
            GroupKind::SO => Some(Sign::Plus),
            GroupKind::Sp => Some(Sign::Minus),
        }
    }
}

/// One factor of the gauge or flavor group, attached to a node of `ⁱI`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupFactor {
    /// One-based node label.
    pub node: usize,
    /// Group type.
    pub kind: GroupKind,
    /// Dimension of the space it acts on.
    pub dim: i64,
    /// Rank of the group.
    pub rank: i64,
}

impl GroupFactor {
    fn new(node: usize, kind: GroupKind, dim: i64) -> GroupFactor {
        GroupFactor {
            node: node + 1,
            kind,
            dim,
            rank: kind.rank(dim),
        }
    }
}

/// One summand of `E^ι`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EBlock {
    /// Short description with one-based nodes, e.g. `hom(V2,V3)`.
    pub label: String,
    /// Dimension.
    pub dim: i64,
    /// Form types of the two spaces of a self-dual `Hom` block, `None` for cotangent blocks.
    pub pairing: Option<(GroupKind, GroupKind)>,
}

/// The folded quiver data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IGaugeData {
    /// Gauge factors over `ⁱI`, in node order.
    pub gauge: Vec<GroupFactor>,
    /// Flavor factors over `ⁱI`, in node order.
    pub flavor: Vec<GroupFactor>,
    /// One-based nodes `i ∈ I_1` joined to `τi` by an edge.
    pub qs: Vec<usize>,
    /// One-based nodes of `ⁱI` whose gauge space is zero.
    pub removed: Vec<usize>,
    /// Summands of `E^ι`.
    pub blocks: Vec<EBlock>,
    /// `dim E^ι`.
    pub dim_e: i64,
}

impl IGaugeData {
    /// Rank of the gauge group.
    pub fn gauge_rank(&self) -> i64 {
        self.gauge.iter().map(|g| g.rank).sum()
    }

    /// Dimension of the gauge group.
    pub fn gauge_dimension(&self) -> i64 {
        self.gauge.iter().map(|g| g.kind.dimension(g.dim)).sum()
    }

    /// Rank of the flavor group.
    pub fn flavor_rank(&self) -> i64 {
        self.flavor.iter().map(|g| g.rank).sum()
    }

    /// Every self-dual `Hom` block pairs an orthogonal space with a symplectic one.
    pub fn pairings_are_mixed(&self) -> bool {
        self.blocks.iter().all(|b| match b.pairing {
            None => true,
            Some((x, y)) => matches!((x.form(), y.form()), (Some(s), Some(t)) if s != t),
        })
    }
}

fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

/// Gauge and flavor factor of a node of `ⁱI`.
fn factors(data: &FramedQuiverData, i: usize) -> (GroupFactor, GroupFactor) {
    let d = &data.diagram;
    let (v, w) = (data.v[i], data.w[i]);
    match d.colour(i) {
        None => (GroupFactor::new(i, GroupKind::GL, v), GroupFactor::new(i, GroupKind::GL, w)),
        Some(Sign::Plus) => (
            GroupFactor::new(i, GroupKind::SO, v),
            GroupFactor::new(i, GroupKind::Sp, 2 * (w / 2)),
        ),
        Some(Sign::Minus) => (
            GroupFactor::new(i, GroupKind::Sp, 2 * (v / 2)),
            GroupFactor::new(i, GroupKind::SO, w),
        ),
    }
}

/// The summands of `E^ι`, one per `τ`-orbit of edges and of nodes.
///
/// An orbit of edges away from `I_0` contributes a cotangent block
/// `2 v_a v_b`, an orbit joining `I_{±1}` to `I_0` contributes
/// `2 v_a dim V^ι_j`, an edge inside `I_0` contributes the self-dual block
/// `dim V^ι_a dim V^ι_b`, each fixed node the self-dual framing block
/// `dim W^ι_i dim V^ι_i`, each node of `I_1` the framing block `2 v_i w_i`,
/// and each edge `i - τi` the block `2 binom(v_i, 2)`.
fn blocks(data: &FramedQuiverData) -> Vec<EBlock> {
    let d = &data.diagram;
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    let gauge = |i: usize| factors(data, i).0;
    for (a, b) in d.edges() {
        let orbit = {
            let (x, y) = (d.tau(a).min(d.tau(b)), d.tau(a).max(d.tau(b)));
            (a, b).min((x, y))
        };
        if !seen.insert(orbit) {
            continue;
        }
        let (ca, cb) = (d.class(a), d.class(b));
        let label = |x: &str, y: &str| format!("hom({}{},{}{})", x, a + 1, y, b + 1);
        if d.tau(a) == b {
            let i = if ca == NodeClass::One { a } else { b };
            out.push(EBlock {
                label: format!("wedge2(V{})", i + 1),
                dim: 2 * binom2(data.v[i]),
                pairing: None,
            });
        } else if ca == NodeClass::Zero && cb == NodeClass::Zero {
            let (ga, gb) = (gauge(a), gauge(b));
            out.push(EBlock {
                label: label("V", "V"),
                dim: ga.dim * gb.dim,
                pairing: Some((ga.kind, gb.kind)),
            });
        } else if ca == NodeClass::Zero || cb == NodeClass::Zero {
            let (fixed, other) = if ca == NodeClass::Zero { (a, b) } else { (b, a) };
            out.push(EBlock {
                label: label("V", "V"),
                dim: 2 * data.v[other] * gauge(fixed).dim,
                pairing: None,
            });
        } else {
            out.push(EBlock {
                label: label("V", "V"),
                dim: 2 * data.v[a] * data.v[b],
                pairing: None,
            });
        }
    }
    for i in d.i_iota() {
        let (g, f) = factors(data, i);
        if d.class(i) == NodeClass::Zero {
            out.push(EBlock {
                label: format!("hom(W{},V{})", i + 1, i + 1),
                dim: g.dim * f.dim,
                pairing: Some((f.kind, g.kind)),
            });
        } else {
            out.push(EBlock {
                label: format!("hom(W{},V{})", i + 1, i + 1),
                dim: 2 * data.v[i] * data.w[i],
                pairing: None,
            });
        }
    }
    out
}

/// Gauge and flavor groups, removed nodes, `I_1^qs` and `dim E^ι`.
pub fn ificate(data: &FramedQuiverData) -> Result<IGaugeData> {
    let bad = validate(data);
    if !bad.is_empty() {
        let msg: Vec<String> = bad.iter().map(|v| v.to_string()).collect();
        return Err(Error::ParityViolation(msg.join("; ")));
    }
    let d = &data.diagram;
    let iota = d.i_iota();
    let (gauge, flavor): (Vec<GroupFactor>, Vec<GroupFactor>) = iota.iter().map(|&i| factors(data, i)).unzip();
    let qs = iota
        .iter()
        .filter(|&&i| d.class(i) == NodeClass::One && d.c(i, d.tau(i)) != 0)
        .map(|&i| i + 1)
        .collect();
    let removed = gauge.iter().filter(|g| g.dim == 0).map(|g| g.node).collect();
    let blocks = blocks(data);
    let dim_e = blocks.iter().map(|b| b.dim).sum();
    Ok(IGaugeData {
        gauge,
        flavor,
        qs,
        removed,
        blocks,
        dim_e,
    })
}

/// `dim E^ι` written with an explicit set of representatives `reps` of the
/// two-element `τ`-orbits: edges inside `reps`, edges from `reps` to `I_0`,
/// edges inside `I_0`, the framing blocks and the `i - τi` blocks.
///
/// Agrees with [`ificate`] whenever `reps` spans a connected subdiagram.
pub fn dim_e_with_representatives(data: &FramedQuiverData, reps: &[usize]) -> i64 {
    let d = &data.diagram;
    let is_rep = |i: usize| reps.contains(&i);
    let fixed = |i: usize| d.class(i) == NodeClass::Zero;
    let vi = |i: usize| factors(data, i).0.dim;
    let wi = |i: usize| factors(data, i).1.dim;
    let mut dim = 0;
    for (a, b) in d.edges() {
        if d.tau(a) == b {
            let i = if is_rep(a) { a } else { b };
            dim += 2 * binom2(data.v[i]);
        } else if is_rep(a) && is_rep(b) {
            dim += 2 * data.v[a] * data.v[b];
        } else if is_rep(a) && fixed(b) {
            dim += 2 * data.v[a] * vi(b);
        } else if fixed(a) && is_rep(b) {
            dim += 2 * data.v[b] * vi(a);
        } else if fixed(a) && fixed(b) {
            dim += vi(a) * vi(b);
        }
    }
    for &i in reps {
        dim += 2 * data.v[i] * data.w[i];
    }
    for i in d.nodes_of(NodeClass::Zero) {
        dim += vi(i) * wi(i);
    }
    dim
}

/// Rank numerology of the folded quiver against `(λ, μ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NumerologyReport {
    /// `(node, rank of gauge factor, 𝔳_i)` over `ⁱI`.
    pub gauge_ranks: Vec<(usize, i64, i64)>,
    /// `(node, rank of flavor factor, 𝔴_i)` over `ⁱI`.
    pub flavor_ranks: Vec<(usize, i64, i64)>,
    /// Rank of the gauge group.
    pub gauge_rank: i64,
    /// Rank of the flavor group.
    pub flavor_rank: i64,
    /// `2 Σ 𝔳_i` from the classical side, when the parity condition holds.
    pub islice_dim: Option<i64>,
    /// Named checks and their outcomes.
    pub checks: Vec<(String, bool)>,
}

impl NumerologyReport {
    /// True when every check passed.
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }
}

/// Compares the group ranks with `𝔳, 𝔴` computed from `(λ, μ)`, and twice the
/// gauge rank with the islice dimension.
pub fn numerology(data: &FramedQuiverData, lam: &Coweight, mu: &Coweight) -> Result<NumerologyReport> {
    let d = &data.diagram;
    let g = gklo_integers(lam, mu, d, None)?;
    if g.v != data.v || g.w_cap != data.w {
        return Err(Error::Mismatch(format!(
            "(lambda, mu) give v = {:?}, w = {:?}, quiver has v = {:?}, w = {:?}",
            g.v, g.w_cap, data.v, data.w
        )));
    }
    let ig = ificate(data)?;
    let iota = d.i_iota();
    let gauge_ranks: Vec<(usize, i64, i64)> =
        iota.iter().zip(&ig.gauge).map(|(&i, f)| (i + 1, f.rank, g.frak_v[i])).collect();
    let flavor_ranks: Vec<(usize, i64, i64)> =
        iota.iter().zip(&ig.flavor).map(|(&i, f)| (i + 1, f.rank, g.frak_w[i])).collect();
    let islice_dim = ix_dimension_data(d, lam, mu)?.dim;
    let gauge_rank = ig.gauge_rank();
    let checks = vec![
        ("gauge_ranks".to_string(), gauge_ranks.iter().all(|(_, r, f)| r == f)),
        ("flavor_ranks".to_string(), flavor_ranks.iter().all(|(_, r, f)| r == f)),
        ("twice_gauge_rank".to_string(), islice_dim == Some(2 * gauge_rank)),
        ("mixed_pairings".to_string(), ig.pairings_are_mixed()),
    ];
    Ok(NumerologyReport {
        gauge_ranks,
        flavor_ranks,
        gauge_rank,
        flavor_rank: ig.flavor_rank(),
        islice_dim,
        checks,
    })
}

#[cfg(test)]
mod tests;
