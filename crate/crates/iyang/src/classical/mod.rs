//! The Poisson side: the involution on Drinfeld generator symbols, the
//! coordinate ring of the fixed locus `ⁱX`, the classical iGKLO map into
//! `gr 𝒜` and its relation, bracket-table and homogeneity checks.
//!
//! The images of the coordinates `y⁻_{i,r}` are read off from the classical
//! limit of the difference-operator images: the `B_i(u)` image has a simple
//! pole at each root `w_{i,r}` of `𝐖_i`, and `y⁻_{i,r}` is its residue times
//! `∏_{s ≠ r} (w_{i,r} - w_{i,s})`.

mod series;

pub use series::{gklo_series, ClassicalSeriesImage, ZPoly};

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::diffops::{filtration_degree, Degree, GrA};
use crate::exactalg::{gq_int, series_at_infinity, Poly, RatFun, Var, GQ};
use crate::igklo::{classical_assignment, Builder, GKLOContext, Limit};
use crate::iyangian::{classical_relation_instances, verify, GeneratorAssignment, Sym, TagSummary, VerificationReport};
use crate::rootdata::{filtration_coweight_from, gklo_integers, parity_condition, Coweight, NodeClass, SatakeDiagram};
use crate::{Error, Result};

/// The three families of Drinfeld generators of the unshifted-style presentation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum DrinfeldKind {
    /// `e_i^{(r)}`.
    E,
    /// `h_i^{(r)}`.
    H,
    /// `f_i^{(r)}`.
    F,
}

/// A Drinfeld generator symbol with a zero-based node.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct DrinfeldSym {
    /// Family.
    pub kind: DrinfeldKind,
    /// Zero-based node.
    pub node: usize,
    /// Superscript.
    pub sup: i64,
}

impl std::fmt::Display for DrinfeldSym {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let k = match self.kind {
            DrinfeldKind::E => "e",
            DrinfeldKind::H => "h",
            DrinfeldKind::F => "f",
        };
        write!(f, "{}{}({})", k, self.node + 1, self.sup)
    }
}

/// Image of one symbol under the involution: `e ↦ (-1)^r f_τ`, `h ↦ (-1)^r h_τ`, `f ↦ (-1)^r e_τ`.
pub fn sigma_symbol(d: &SatakeDiagram, s: DrinfeldSym) -> (i64, DrinfeldSym) {
    let sign = if s.sup.rem_euclid(2) == 0 { 1 } else { -1 };
    let kind = match s.kind {
        DrinfeldKind::E => DrinfeldKind::F,
        DrinfeldKind::H => DrinfeldKind::H,
        DrinfeldKind::F => DrinfeldKind::E,
    };
    (
        sign,
        DrinfeldSym {
            kind,
            node: d.tau(s.node),
            sup: s.sup,
        },
    )
}

/// The involution on all symbols with superscript in `1..=k`.
pub fn sigma_on_generators(d: &SatakeDiagram, k: i64) -> BTreeMap<DrinfeldSym, (i64, DrinfeldSym)> {
    let mut out = BTreeMap::new();
    for node in 0..d.rank() {
        for kind in [DrinfeldKind::E, DrinfeldKind::H, DrinfeldKind::F] {
            for sup in 1..=k {
                let s = DrinfeldSym { kind, node, sup };
                out.insert(s, sigma_symbol(d, s));
            }
        }
    }
    out
}

/// `w_{i,r}` on `ⁱX` for any node and `1 <= r <= v_i`, written in the
/// independent coordinates `w_{i,r}`, `i ∈ ⁱI`, `r <= 𝔳_i`.
pub fn ix_w(ctx: &GKLOContext, i: usize, r: usize) -> Poly {
    let d = &ctx.diagram;
    let g = &ctx.ints;
    let v = g.v[i] as usize;
    match d.class(i) {
        NodeClass::One => Poly::var(Var::w(i + 1, r)),
        NodeClass::MinusOne => -&Poly::var(Var::w(d.tau(i) + 1, v + 1 - r)),
        NodeClass::Zero => {
            let fv = g.frak_v[i] as usize;
            if r <= fv {
                Poly::var(Var::w(i + 1, r))
            } else if g.theta[i] == 1 && r == fv + 1 {
                Poly::zero()
            } else {
                -&Poly::var(Var::w(i + 1, v + 1 - r))
            }
        }
    }
}

/// `τr = v_i + 1 - r`.
pub fn tau_index(ctx: &GKLOContext, i: usize, r: usize) -> usize {
    ctx.ints.v[i] as usize + 1 - r
}

/// `𝐖_i(x) = ∏_r (x - w_{i,r})` as a polynomial in `x`.
pub fn a_poly(ctx: &GKLOContext, i: usize, x: Var) -> Poly {
    let xp = Poly::var(x);
    (1..=ctx.ints.v[i] as usize).fold(Poly::one(), |acc, r| &acc * &(&xp - &ix_w(ctx, i, r)))
}

/// `x^{𝐰_i} ∏_{j ↔ i} 𝐖_j(x)`.
pub fn gklo_rhs(ctx: &GKLOContext, i: usize, x: Var) -> Poly {
    let mut p = Poly::var(x).pow(ctx.ints.w_cap[i] as u32);
    for j in ctx.diagram.neighbours(i) {
        p = &p * &a_poly(ctx, j, x);
    }
    p
}

/// Images of the coordinates of `ⁱX` in `gr 𝒜`, keyed by zero-based node and one-based index.
#[derive(Clone, Debug, PartialEq)]
pub struct IXImages {
    /// `w_{i,r}`.
    pub w: BTreeMap<(usize, usize), Poly>,
    /// `y⁻_{i,r}`.
    pub y: BTreeMap<(usize, usize), GrA>,
}

impl IXImages {
    /// `y⁻_{i,r}`.
    pub fn y(&self, i: usize, r: usize) -> &GrA {
        &self.y[&(i, r)]
    }

    /// `w_{i,r}`.
    pub fn w(&self, i: usize, r: usize) -> &Poly {
        &self.w[&(i, r)]
    }

    /// All keys `(i, r)` in order.
    pub fn keys(&self) -> Vec<(usize, usize)> {
        self.w.keys().copied().collect()
    }
}

fn residue_factor(roots: &[Poly], r: usize) -> Poly {
    roots
        .iter()
        .enumerate()
        .filter(|&(s, _)| s != r)
        .fold(Poly::one(), |acc, (_, p)| &acc * &(&roots[r] - p))
}

/// The classical iGKLO images of `w_{i,r}` and `y⁻_{i,r}`.
pub fn ix_images(ctx: &GKLOContext) -> Result<IXImages> {
    let b = Builder::new(ctx, Limit::Classical);
    let n = ctx.diagram.rank();
    let per_node: Vec<Result<Vec<((usize, usize), Poly, GrA)>>> = (0..n)
        .into_par_iter()
        .map(|i| {
            let v = ctx.ints.v[i] as usize;
            let roots: Vec<Poly> = (1..=v).map(|r| ix_w(ctx, i, r)).collect();
            let mut ys = vec![GrA::zero(); v];
            let locate = |rho: &Poly| {
                roots.iter().position(|x| x == rho).ok_or_else(|| {
                    Error::Inconsistent(format!("pole {} of node {} is not a root", rho.render(), i + 1))
                })
            };
            let img = b.b_image(i);
            for t in &img.poles {
                let rho = -&t.pole;
                let r = locate(&rho)?;
                let f = &t.coeff * &RatFun::from_poly(residue_factor(&roots, r));
                ys[r] = ys[r].add(&GrA::term(f, t.shift.clone()));
            }
            if let Some(c) = &img.theta {
                let r = locate(&Poly::zero())?;
                let f = c * &RatFun::from_poly(residue_factor(&roots, r));
                ys[r] = ys[r].add(&GrA::coeff(f));
            }
            Ok(roots
                .into_iter()
                .zip(ys)
                .enumerate()
                .map(|(r, (w, y))| ((i, r + 1), w, y))
                .collect())
        })
        .collect();
    let mut out = IXImages {
        w: BTreeMap::new(),
        y: BTreeMap::new(),
    };
    for node in per_node {
        for (key, w, y) in node? {
            out.w.insert(key, w);
            out.y.insert(key, y);
        }
    }
    Ok(out)
}

fn lagrange_weight(ix: &IXImages, i: usize, r: usize, v: usize) -> Result<RatFun> {
    let den: Vec<(Poly, u32)> = (1..=v)
        .filter(|&s| s != r)
        .map(|s| (ix.w(i, r) - ix.w(i, s), 1))
        .collect();
    RatFun::from_parts(Poly::one(), &den)
}

/// Generator images obtained by substituting the `ⁱX` images into
/// `Σ_r e_i^{(r)} z^{-r} = b_i(z)/a_i(z)` and `Σ_r h_i^{(r)} z^{-r} = z^{𝐰_i} ∏_j a_j(z)^{-c_{ji}}`.
///
/// Cartan superscripts run from `-<μ, α_i> - 2` to `ctx.k`, the others from 1 to `ctx.k`.
pub fn classical_images(ctx: &GKLOContext) -> Result<GeneratorAssignment<GrA>> {
    let ix = ix_images(ctx)?;
    let n = ctx.diagram.rank();
    let k = ctx.k;
    let per_node: Vec<Result<Vec<(Sym, GrA)>>> = (0..n)
        .into_par_iter()
        .map(|i| {
            let v = ctx.ints.v[i] as usize;
            let mut out = Vec::new();
            let mut weights = Vec::new();
            for r in 1..=v {
                weights.push(lagrange_weight(&ix, i, r, v)?);
            }
            for s in 1..=k {
                let mut acc = GrA::zero();
                for r in 1..=v {
                    let f = &weights[r - 1] * &RatFun::from_poly(ix.w(i, r).pow((s - 1) as u32));
                    acc = acc.add(&GrA::coeff(f).mul(ix.y(i, r)));
                }
                out.push((Sym::b(i, s), acc));
            }
            let u = Var::u();
            let den: Vec<(Poly, u32)> = (1..=v).map(|r| (&Poly::var(u) - ix.w(i, r), 2)).collect();
            let hs = RatFun::from_parts(gklo_rhs(ctx, i, u), &den)?;
            let ser = series_at_infinity(&hs, k);
            for r in ctx.lo(i) - 2..=k {
                out.push((Sym::h(i, r), GrA::coeff(ser.coeff(r))));
            }
            Ok(out)
        })
        .collect();
    let mut out = BTreeMap::new();
    for node in per_node {
        out.extend(node?);
    }
    Ok(out)
}

/// Outcome of one auxiliary identity.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CheckOutcome {
    /// Family of the identity.
    pub check: String,
    /// Stable key of the instance.
    pub key: String,
    /// Whether the identity holds.
    pub pass: bool,
    /// Rendered difference when it does not.
    pub residue: Option<String>,
}

fn outcome(check: &str, key: String, diff: &GrA) -> CheckOutcome {
    let pass = diff.is_zero();
    CheckOutcome {
        check: check.to_string(),
        key,
        pass,
        residue: (!pass).then(|| truncate(diff.render())),
    }
}

fn truncate(mut s: String) -> String {
    const LIMIT: usize = 400;
    if s.len() > LIMIT {
        let cut = (0..=LIMIT).rev().find(|&i| s.is_char_boundary(i)).unwrap_or(0);
        s.truncate(cut);
        s.push_str("...");
    }
    s
}

fn sign(e: i64) -> GQ {
    gq_int(if e.rem_euclid(2) == 0 { 1 } else { -1 })
}

fn poly(p: Poly) -> GrA {
    GrA::coeff(RatFun::from_poly(p))
}

fn key2(a: (usize, usize), b: (usize, usize)) -> String {
    format!("({},{}),({},{})", a.0 + 1, a.1, b.0 + 1, b.1)
}

/// Compares the brackets of the images with the bracket table on `ⁱX`:
/// `{w_{i,r}, y⁻_{j,s}} = (δ_{(i,r),(j,s)} - δ_{(τi,τr),(j,s)}) y⁻_{j,s}` and
/// `{y⁻_{i,r}, y⁻_{j,s}} = -δ_{i↔j} y⁻_{i,r} y⁻_{j,s} / (w_{i,r} - w_{j,s})
///  + δ_{(i,r),(τj,τs)} (-1)^{v_i} ∂_x(x^{𝐰_i} ∏_{k↔i} 𝐖_k(x))|_{x = w_{i,r}}`.
pub fn check_bracket_table(ctx: &GKLOContext, ix: &IXImages) -> Result<Vec<CheckOutcome>> {
    let d = &ctx.diagram;
    let keys = ix.keys();
    let x = Var::x(0);
    let derivs: Vec<Poly> = (0..d.rank()).map(|i| gklo_rhs(ctx, i, x).derivative(x)).collect();
    let pairs: Vec<((usize, usize), (usize, usize))> = keys
        .iter()
        .flat_map(|&a| keys.iter().map(move |&b| (a, b)))
        .collect();
    let results: Vec<Result<Vec<CheckOutcome>>> = pairs
        .par_iter()
        .map(|&((i, r), (j, s))| {
            let mut out = Vec::new();
            let partner = (d.tau(i), tau_index(ctx, i, r));
            let wy = poly(ix.w(i, r).clone()).bracket(ix.y(j, s));
            let mut c = 0;
            if (i, r) == (j, s) {
                c += 1;
            }
            if partner == (j, s) {
                c -= 1;
            }
            let expect = ix.y(j, s).scale(&gq_int(c));
            out.push(outcome("ix_wy", key2((i, r), (j, s)), &wy.sub(&expect)));
            if (i, r) <= (j, s) {
                let yy = ix.y(i, r).bracket(ix.y(j, s));
                let mut expect = GrA::zero();
                if d.c(i, j) == -1 {
                    let den = RatFun::from_parts(Poly::one(), &[(ix.w(i, r) - ix.w(j, s), 1)])?;
                    let prod = ix.y(i, r).mul(ix.y(j, s));
                    expect = expect.sub(&GrA::coeff(den).mul(&prod));
                }
                if (i, r) == (d.tau(j), tau_index(ctx, j, s)) {
                    let val = derivs[i].substitute(x, ix.w(i, r));
                    expect = expect.add(&poly(val.scale(&sign(ctx.ints.v[i]))));
                }
                out.push(outcome("ix_yy", key2((i, r), (j, s)), &yy.sub(&expect)));
            }
            Ok(out)
        })
        .collect();
    let mut all = Vec::new();
    for r in results {
        all.extend(r?);
    }
    Ok(all)
}

/// The defining relations of `ⁱX` evaluated on the images:
/// `y⁻_{i,r} y⁻_{τi,τr} = (-1)^{v_i+1} w_{i,r}^{𝐰_i} ∏_{j↔i} 𝐖_j(w_{i,r})` for `i ∈ ⁱI`, `r <= 𝔳_i`,
/// and the square of the middle coordinate when `θ_i = 1`.
pub fn check_fixed_relations(ctx: &GKLOContext, ix: &IXImages) -> Vec<CheckOutcome> {
    let d = &ctx.diagram;
    let g = &ctx.ints;
    let x = Var::x(0);
    let mut out = Vec::new();
    for i in d.i_iota() {
        let rhs = gklo_rhs(ctx, i, x);
        for r in 1..=g.frak_v[i] as usize {
            let lhs = ix.y(i, r).mul(ix.y(d.tau(i), tau_index(ctx, i, r)));
            let val = rhs.substitute(x, ix.w(i, r)).scale(&sign(g.v[i] + 1));
            out.push(outcome("fixed_pair", format!("({},{})", i + 1, r), &lhs.sub(&poly(val))));
        }
        if d.class(i) == NodeClass::Zero && g.theta[i] == 1 {
            let m = g.frak_v[i] as usize + 1;
            let lhs = ix.y(i, m).mul(ix.y(i, m));
            let expect = if g.w_cap[i] == 0 {
                let nb: Vec<usize> = d
                    .neighbours(i)
                    .into_iter()
                    .filter(|&j| d.class(j) != NodeClass::MinusOne)
                    .collect();
                let e: i64 = nb.iter().map(|&j| g.frak_v[j]).sum();
                let mut p = Poly::constant(sign(e));
                for &j in &nb {
                    for s in 1..=g.frak_v[j] as usize {
                        p = &p * &ix.w(j, s).pow(2);
                    }
                }
                p
            } else {
                Poly::zero()
            };
            out.push(outcome("fixed_middle", format!("({},{})", i + 1, m), &lhs.sub(&poly(expect))));
        }
    }
    out
}

/// `h_i^{(r)}` vanishes for odd `r` when `τi = i`.
pub fn check_odd_cartan(ctx: &GKLOContext, a: &GeneratorAssignment<GrA>) -> Vec<CheckOutcome> {
    let d = &ctx.diagram;
    let mut out = Vec::new();
    for (s, img) in a {
        if s.kind == crate::iyangian::GenKind::H && d.tau(s.node) == s.node && s.sup.rem_euclid(2) == 1 {
            out.push(outcome("h_odd_zero", s.to_string(), img));
        }
    }
    out
}

/// Equality of the images built from `ⁱX` with the leading terms of the difference-operator images.
pub fn check_against_quantum_limit(ctx: &GKLOContext, a: &GeneratorAssignment<GrA>) -> Vec<CheckOutcome> {
    let q = classical_assignment(ctx);
    let mut out = Vec::new();
    for (s, img) in a {
        let other = q.get(s).cloned().unwrap_or_else(GrA::zero);
        out.push(outcome("quantum_limit", s.to_string(), &img.sub(&other)));
    }
    out
}

/// Jacobi identity `{a,{b,c}} + {b,{c,a}} + {c,{a,b}} = 0` on each triple.
pub fn jacobi_check(triples: &[(GrA, GrA, GrA)]) -> Vec<CheckOutcome> {
    triples
        .par_iter()
        .enumerate()
        .map(|(n, (a, b, c))| {
            let j = a
                .bracket(&b.bracket(c))
                .add(&b.bracket(&c.bracket(a)))
                .add(&c.bracket(&a.bracket(b)));
            outcome("jacobi", format!("{:03}", n), &j)
        })
        .collect()
}

/// Relation instances and auxiliary identities for the classical map.
#[derive(Clone, Debug, Serialize)]
pub struct ClassicalReport {
    /// The Poisson relations of the shifted iYangian on the images.
    pub relations: VerificationReport,
    /// Tallies of the auxiliary identities keyed by family.
    pub checks: BTreeMap<String, TagSummary>,
    /// Failing auxiliary instances.
    pub check_failures: Vec<CheckOutcome>,
}

impl ClassicalReport {
    /// True when every relation and identity holds.
    pub fn all_passed(&self) -> bool {
        self.relations.all_passed() && self.check_failures.is_empty()
    }

    /// Tally of one auxiliary family.
    pub fn check(&self, name: &str) -> TagSummary {
        self.checks.get(name).cloned().unwrap_or_default()
    }
}

/// Gathers outcomes into tallies and a sorted failure list.
pub fn summarize(outcomes: Vec<CheckOutcome>) -> (BTreeMap<String, TagSummary>, Vec<CheckOutcome>) {
    let mut tallies: BTreeMap<String, TagSummary> = BTreeMap::new();
    let mut failures = Vec::new();
    for o in outcomes {
        let t = tallies.entry(o.check.clone()).or_default();
        t.checked += 1;
        if o.pass {
            t.passed += 1;
        } else {
            failures.push(o);
        }
    }
    failures.sort_by(|a, b| (&a.check, &a.key).cmp(&(&b.check, &b.key)));
    (tallies, failures)
}

/// Runs the Poisson relations up to `ctx.k`, the bracket table, the defining
/// relations of `ⁱX`, the `a d - b c` identity with its involution symmetry,
/// the vanishing of odd Cartan coefficients on fixed nodes, and the comparison
/// with the classical limit of the difference-operator images.
pub fn verify_classical(ctx: &GKLOContext) -> Result<ClassicalReport> {
    let a = classical_images(ctx)?;
    let inst = classical_relation_instances(&ctx.diagram, &ctx.mu, ctx.k);
    let relations = verify(&inst, &a)?;
    let ix = ix_images(ctx)?;
    let mut outcomes = check_bracket_table(ctx, &ix)?;
    outcomes.extend(check_fixed_relations(ctx, &ix));
    outcomes.extend(series::check_gklo_identities(ctx, &ix)?);
    outcomes.extend(check_odd_cartan(ctx, &a));
    outcomes.extend(check_against_quantum_limit(ctx, &a));
    let (checks, check_failures) = summarize(outcomes);
    Ok(ClassicalReport {
        relations,
        checks,
        check_failures,
    })
}

/// `deg ∂_{i,r}` for the filtration on `𝒜_{z=0}`: zero off `I_0`, and
/// `Σ_{j→i, j∈I_0} 𝔳_j + (-ς_i + Σ_{j↔i, j∈I_0} θ_j)/2` on `I_0`.
pub fn shift_degrees(ctx: &GKLOContext) -> Result<Vec<i64>> {
    let d = &ctx.diagram;
    let g = &ctx.ints;
    (0..d.rank())
        .map(|i| {
            if d.class(i) != NodeClass::Zero {
                return Ok(0);
            }
            let zero_nb = |j: &usize| d.class(*j) == NodeClass::Zero;
            let a: i64 = d.into_node(i).iter().filter(|j| zero_nb(j)).map(|&j| g.frak_v[j]).sum();
            let t: i64 = d.neighbours(i).iter().filter(|j| zero_nb(j)).map(|&j| g.theta[j]).sum();
            let twice = t - g.varsigma[i];
            if twice.rem_euclid(2) != 0 {
                return Err(Error::NonIntegral(format!("deg of shift at node {} is {}/2", i + 1, twice)));
            }
            Ok(a + twice / 2)
        })
        .collect()
}

/// A generator whose image does not have the expected degree.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct HomogeneityViolation {
    /// Generator.
    pub symbol: String,
    /// `r + <μ, α_i>` or `s + <μ₁, α_i>`.
    pub expected: i64,
    /// Degree found, rendered.
    pub found: String,
}

/// Result of the homogeneity check.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct HomogeneityReport {
    /// The grading coweight used.
    pub mu1: Vec<i64>,
    /// Generators checked.
    pub checked: usize,
    /// Failures.
    pub violations: Vec<HomogeneityViolation>,
}

impl HomogeneityReport {
    /// True when no violation was found.
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that `h_i^{(r)}` maps to a homogeneous element of degree `r + <μ, α_i>`
/// and `b_i^{(s)}` to one of degree `s + <μ₁, α_i>`. The grading coweight
/// defaults to the one attached to `(λ, μ)` and the orientation.
pub fn homogeneity_check(ctx: &GKLOContext, mu1: Option<&Coweight>) -> Result<HomogeneityReport> {
    let mu1 = match mu1 {
        Some(m) => m.clone(),
        None => filtration_coweight_from(&ctx.ints, &ctx.mu, &ctx.diagram)?,
    };
    let sd = shift_degrees(ctx)?;
    let a = classical_images(ctx)?;
    let mut violations = Vec::new();
    let mut checked = 0;
    for (s, img) in &a {
        let expected = match s.kind {
            crate::iyangian::GenKind::H => s.sup + ctx.mu.pairing(s.node),
            crate::iyangian::GenKind::B => s.sup + mu1.pairing(s.node),
        };
        checked += 1;
        let deg = filtration_degree(img, |v: Var| sd[v.node() - 1]);
        let ok = match &deg {
            Degree::Zero => true,
            Degree::Homogeneous(e) => *e == expected,
            Degree::NotHomogeneous(_) => false,
        };
        if !ok {
            violations.push(HomogeneityViolation {
                symbol: s.to_string(),
                expected,
                found: format!("{:?}", deg),
            });
        }
    }
    Ok(HomogeneityReport {
        mu1: mu1.0,
        checked,
        violations,
    })
}

/// Non-emptiness and dimension of the fixed locus `ⁱX`.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct IXDimension {
    /// Whether the parity condition holds.
    pub nonempty: bool,
    /// `2 Σ_{i ∈ ⁱI} 𝔳_i` when non-empty.
    pub dim: Option<i64>,
}

/// Non-emptiness and dimension from the coweight data alone.
pub fn ix_dimension_data(d: &SatakeDiagram, lam: &Coweight, mu: &Coweight) -> Result<IXDimension> {
    let g = gklo_integers(lam, mu, d, None)?;
    let nonempty = parity_condition(&g, d);
    let dim = nonempty.then(|| 2 * d.i_iota().iter().map(|&i| g.frak_v[i]).sum::<i64>());
    Ok(IXDimension { nonempty, dim })
}

#[cfg(test)]
mod tests;
