//! The iGKLO difference-operator images of the generators, the
//! Gelfand-Tsetlin series and end-to-end relation checks.
//!
//! Polynomials in `u` are kept as lists of monic linear factors so that every
//! evaluation needed for a denominator stays a product of linear forms.

mod images;

pub use images::{Builder, ImageTerm, Limit, NodeImages, PolynomialTable};

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::diffops::{DiffOp, GrA, Shift};
use crate::exactalg::linalg::rational_inverse;
use crate::exactalg::gauss::gq_from_rational;
use crate::exactalg::{series_at_infinity, Poly, RatFun, TruncLaurentSeries, Var, GQ};
use crate::iyangian::{quantum_relation_instances, verify, GeneratorAssignment, Sym, VerificationReport};
use crate::rootdata::{gklo_integers, is_even_spherical, parity_condition, Coweight, GKLOIntegers, SatakeDiagram};
use crate::{Error, Result};

/// How the central variables `z_{i,s}` are treated.
#[derive(Clone, Debug, PartialEq)]
pub enum ZMode {
    /// Independent symbols.
    Symbolic,
    /// All set to zero.
    Zero,
    /// Fixed values keyed by zero-based node in `ⁱI` and one-based index.
    Numeric(BTreeMap<(usize, usize), GQ>),
}

/// The data `(diagram, λ, μ, ζ, z, K)` defining one iGKLO image.
#[derive(Clone, Debug)]
pub struct GKLOContext {
    /// Satake diagram with its orientation.
    pub diagram: SatakeDiagram,
    /// Dominant `τ`-invariant coweight.
    pub lam: Coweight,
    /// Even spherical coweight.
    pub mu: Coweight,
    /// Integer data, including the `ζ` choice.
    pub ints: GKLOIntegers,
    /// Treatment of `z`.
    pub z_mode: ZMode,
    /// Truncation order for generator superscripts.
    pub k: i64,
}

impl GKLOContext {
    /// Validates the hypotheses and computes the integer data.
    pub fn new(
        diagram: SatakeDiagram,
        lam: Coweight,
        mu: Coweight,
        zeta: Option<&[(usize, i64)]>,
        z_mode: ZMode,
        k: i64,
    ) -> Result<GKLOContext> {
        let n = diagram.rank();
        if lam.0.len() != n || mu.0.len() != n {
            return Err(Error::IndexOutOfRange(format!(
                "coweights of length {} and {} for rank {}",
                lam.0.len(),
                mu.0.len(),
                n
            )));
        }
        if !lam.is_dominant() {
            return Err(Error::NotDominated(format!("lambda = {:?} is not dominant", lam.0)));
        }
        if !lam.is_tau_invariant(&diagram) {
            return Err(Error::Inconsistent(format!("lambda = {:?} is not tau-invariant", lam.0)));
        }
        if !is_even_spherical(&mu, &diagram) {
            return Err(Error::ParityViolation(format!("mu = {:?} is not even spherical", mu.0)));
        }
        let ints = gklo_integers(&lam, &mu, &diagram, zeta)?;
        if !parity_condition(&ints, &diagram) {
            return Err(Error::ParityViolation(format!(
                "adjacent nodes with odd v in v = {:?}",
                ints.v
            )));
        }
        Ok(GKLOContext {
            diagram,
            lam,
            mu,
            ints,
            z_mode,
            k,
        })
    }

    /// Same data with another orientation.
    pub fn with_orientation(&self, arrows: &[(usize, usize)]) -> Result<GKLOContext> {
        let d = self.diagram.with_orientation(arrows)?;
        let zeta: Vec<(usize, i64)> = self
            .diagram
            .nodes_of(crate::rootdata::NodeClass::One)
            .into_iter()
            .map(|i| (i, self.ints.zeta[i]))
            .collect();
        GKLOContext::new(d, self.lam.clone(), self.mu.clone(), Some(&zeta), self.z_mode.clone(), self.k)
    }

    /// Same data with another `z` treatment.
    pub fn with_z_mode(&self, z_mode: ZMode) -> GKLOContext {
        GKLOContext {
            z_mode,
            ..self.clone()
        }
    }

    /// Lower vanishing bound `-<μ, α_i>` of the Cartan superscripts.
    pub fn lo(&self, i: usize) -> i64 {
        -self.mu.pairing(i)
    }
}

/// The table of `W, Z, 𝐖, 𝐙, 𝐖°, W̄⁻, Z̄⁻` with the structural identities checked.
pub fn build_polynomials(ctx: &GKLOContext) -> PolynomialTable {
    Builder::new(ctx, Limit::Quantum).table()
}

/// The image of `H_i(u)` as a rational function of `u`.
pub fn phi_h(ctx: &GKLOContext, i: usize) -> RatFun {
    Builder::new(ctx, Limit::Quantum).h_image(i)
}

/// The image of `B_i(u)`: simple poles with difference-operator residues and the `θ` term.
pub fn phi_b(ctx: &GKLOContext, i: usize) -> NodeImages {
    Builder::new(ctx, Limit::Quantum).b_image(i)
}

/// Coefficients `H_i^{(r)}` for `r` from `lo - 2` to `k` and `B_i^{(s)}` for `s` from 1 to `k`
/// as pairs `(coefficient, shift)`.
pub fn coefficient_terms(b: &Builder, i: usize, k: i64) -> (Vec<(i64, RatFun)>, Vec<(i64, Vec<(RatFun, Shift)>)>) {
    let lo = -b.ctx().mu.pairing(i);
    let h = series_at_infinity(&b.h_image(i), k);
    let hs = (lo - 2..=k).map(|r| (r, h.coeff(r))).collect();
    let img = b.b_image(i);
    let bs = (1..=k).map(|s| (s, img.coefficient(s))).collect();
    (hs, bs)
}

/// Generator images in the difference-operator algebra up to superscript `k`.
pub fn quantum_assignment(ctx: &GKLOContext) -> GeneratorAssignment<DiffOp> {
    let b = Builder::new(ctx, Limit::Quantum);
    let per_node: Vec<_> = (0..ctx.diagram.rank())
        .into_par_iter()
        .map(|i| (i, coefficient_terms(&b, i, ctx.k)))
        .collect();
    let mut out = BTreeMap::new();
    for (i, (hs, bs)) in per_node {
        for (r, f) in hs {
            out.insert(Sym::h(i, r), DiffOp::coeff(f));
        }
        for (s, terms) in bs {
            let mut op = DiffOp::zero();
            for (f, m) in terms {
                op.add_term(m, f);
            }
            out.insert(Sym::b(i, s), op);
        }
    }
    out
}

/// Generator images of the classical limit in the Poisson algebra `gr 𝒜` up to superscript `k`.
pub fn classical_assignment(ctx: &GKLOContext) -> GeneratorAssignment<GrA> {
    let b = Builder::new(ctx, Limit::Classical);
    let per_node: Vec<_> = (0..ctx.diagram.rank())
        .into_par_iter()
        .map(|i| (i, coefficient_terms(&b, i, ctx.k)))
        .collect();
    let mut out = BTreeMap::new();
    for (i, (hs, bs)) in per_node {
        for (r, f) in hs {
            out.insert(Sym::h(i, r), GrA::coeff(f));
        }
        for (s, terms) in bs {
            let mut op = GrA::zero();
            for (f, m) in terms {
                op.add_term(m, f);
            }
            out.insert(Sym::b(i, s), op);
        }
    }
    out
}

/// Checks every quantum relation instance up to `ctx.k` on the iGKLO images.
pub fn verify_igklo(ctx: &GKLOContext) -> Result<VerificationReport> {
    let inst = quantum_relation_instances(&ctx.diagram, &ctx.mu, ctx.k);
    verify(&inst, &quantum_assignment(ctx))
}

/// Adds one to the coefficient of the first shift monomial of `op`
/// (or adds the unit when `op` is zero).
pub fn perturb_coefficient(op: &DiffOp) -> DiffOp {
    let mut out = op.clone();
    match op.terms().next() {
        Some((m, _)) => out.add_term(m.clone(), RatFun::int(1)),
        None => out.add_term(Shift::one(), RatFun::int(1)),
    }
    out
}

/// Substitutes values for the `z` variables in every coefficient.
pub fn specialize_z(op: &DiffOp, values: &BTreeMap<Var, GQ>) -> Result<DiffOp> {
    let mut err = None;
    let out = op.map_coeffs(|f| {
        let mut g = f.clone();
        for (v, c) in values {
            match g.substitute_linear(*v, &Poly::constant(c.clone())) {
                Ok(h) => g = h,
                Err(e) => err = Some(e),
            }
        }
        g
    });
    match err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// `(1 + ℘_i/4u) 𝛋(u)^{ϑ_i} 𝐙_i(u) Π_{j↔i} u^{v_j} / (u² - 1/4)^{v_i}`, the prefactor of
/// the Cartan series in terms of the `𝖠` series, and its inverse.
fn gt_prefactor(b: &Builder, i: usize) -> (RatFun, RatFun) {
    b.gt_prefactor(i)
}

/// The series `𝖠_j(u)` for all nodes, solved order by order up to `u^{-k}`.
pub fn gt_series_all(ctx: &GKLOContext, k: i64) -> Result<Vec<TruncLaurentSeries<RatFun>>> {
    let b = Builder::new(ctx, Limit::Quantum);
    let d = &ctx.diagram;
    let n = d.rank();
    let cinv = rational_inverse(d.cartan()).ok_or_else(|| Error::NonSolvable("singular Cartan matrix".into()))?;
    let targets: Vec<TruncLaurentSeries<RatFun>> = (0..n)
        .map(|i| {
            let (_, inv) = gt_prefactor(&b, i);
            series_at_infinity(&(&b.h_image(i) * &inv), k)
        })
        .collect();
    for (i, t) in targets.iter().enumerate() {
        if t.valuation().map(|v| v < 0).unwrap_or(false) || !t.coeff(0).is_one() {
            return Err(Error::NonSolvable(format!(
                "Cartan series at node {} does not start with 1",
                i + 1
            )));
        }
    }
    let mut a: Vec<TruncLaurentSeries<RatFun>> = vec![TruncLaurentSeries::one(k); n];
    for r in 1..=k {
        let e: Vec<RatFun> = (0..n).map(|i| &targets[i].coeff(r) - &gt_ratio(d, &a, i, k).coeff(r)).collect();
        for i in 0..n {
            let mut x = RatFun::zero();
            for j in 0..n {
                x = &x - &e[j].scale(&gq_from_rational(cinv[i][j].clone()));
            }
            a[i].set(r, x);
        }
    }
    Ok(a)
}

/// The series `𝖠_i(u)`.
pub fn gt_series(ctx: &GKLOContext, i: usize, k: i64) -> Result<TruncLaurentSeries<RatFun>> {
    Ok(gt_series_all(ctx, k)?.swap_remove(i))
}

/// `Π_{j↔i} 𝖠_j(u) / (𝖠_i(u - 1/2) 𝖠_i(u + 1/2))`.
fn gt_ratio(d: &SatakeDiagram, a: &[TruncLaurentSeries<RatFun>], i: usize, k: i64) -> TruncLaurentSeries<RatFun> {
    let half = crate::exactalg::gq_rat(1, 2);
    let mut num = TruncLaurentSeries::one(k);
    for j in d.neighbours(i) {
        num = num.mul(&a[j]).truncate(k);
    }
    let den = a[i].shift_arg(&-half.clone()).mul(&a[i].shift_arg(&half)).truncate(k);
    let inv = den.inverse().expect("unit leading coefficient");
    num.mul(&inv).truncate(k)
}

/// Re-substitutes solved `𝖠` series into the defining identity and returns, per node,
/// whether the result agrees with the expansion of the `H` image up to `u^{-k}`.
pub fn gt_back_substitution(ctx: &GKLOContext, k: i64) -> Result<Vec<bool>> {
    let a = gt_series_all(ctx, k)?;
    let b = Builder::new(ctx, Limit::Quantum);
    let d = &ctx.diagram;
    (0..d.rank())
        .map(|i| {
            let (pre, _) = gt_prefactor(&b, i);
            let m = ctx.mu.pairing(i);
            let order = k + m.max(0);
            let pre_s = series_at_infinity(&pre, order);
            let lhs = pre_s.mul(&gt_ratio(d, &a, i, order)).truncate(k);
            let rhs = series_at_infinity(&b.h_image(i), k);
            Ok((-m..=k).all(|n| lhs.coeff(n) == rhs.coeff(n)))
        })
        .collect()
}

#[cfg(test)]
mod tests;
