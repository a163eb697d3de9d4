//! Construction of the polynomials `W, Z, 𝐖, 𝐙, ...` and of the generator images.

use serde::Serialize;

use super::{GKLOContext, ZMode};
use crate::diffops::Shift;
use crate::exactalg::{f_minus, gq_i, gq_int, gq_rat, Poly, RatFun, Var, GQ};
use crate::rootdata::NodeClass;

/// Quantum images, or their classical limit (`1/2 ↦ 0`, `z ↦ 0`, the `ϰ`, `𝛋` and `℘`
/// factors dropped) used for the Poisson algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Limit {
    /// Difference operators.
    Quantum,
    /// Leading terms in `gr 𝒜`.
    Classical,
}

/// One simple pole `coeff · ∂^m / (u + pole)` of a `B` image.
#[derive(Clone, Debug, PartialEq)]
pub struct ImageTerm {
    /// The constant `a` of the pole factor `u + a`.
    pub pole: Poly,
    /// Coefficient, free of `u`.
    pub coeff: RatFun,
    /// Shift monomial on the right.
    pub shift: Shift,
}

/// The image of `B_i(u)`.
#[derive(Clone, Debug, PartialEq)]
pub struct NodeImages {
    /// Pole terms.
    pub poles: Vec<ImageTerm>,
    /// Coefficient of the `u^{-1}` term without shift, present when `θ_i = 1`.
    pub theta: Option<RatFun>,
    /// Whether the square-root constant of the `θ` term is `√-1` (otherwise 1).
    pub sqrt_is_i: bool,
}

impl NodeImages {
    /// The coefficient `B_i^{(s)} = Σ (-a)^{s-1} coeff ∂^m`, plus the `θ` term for `s = 1`.
    pub fn coefficient(&self, s: i64) -> Vec<(RatFun, Shift)> {
        let mut out: Vec<(RatFun, Shift)> = self
            .poles
            .iter()
            .map(|t| {
                let p = (-&t.pole).pow((s - 1) as u32);
                (&RatFun::from_poly(p) * &t.coeff, t.shift.clone())
            })
            .collect();
        if s == 1 {
            if let Some(c) = &self.theta {
                out.push((c.clone(), Shift::one()));
            }
        }
        out
    }
}

/// Expanded polynomials at one node, rendered in canonical form.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NodePolynomials {
    /// One-based node.
    pub node: usize,
    /// `W_i(u)`.
    pub w: String,
    /// `Z_i(u)`.
    pub z: String,
    /// `𝐖_i(u)`.
    pub w_bold: String,
    /// `𝐙_i(u)`.
    pub z_bold: String,
    /// `𝐖°_i(u)`, on `I_0` only.
    pub w_circ: Option<String>,
    /// `W̄⁻_i(u)`, on `I_0` only.
    pub w_bar_minus: Option<String>,
    /// `Z̄⁻_i(u)`, on `I_0` only.
    pub z_bar_minus: Option<String>,
    /// `deg 𝐖_i`.
    pub deg_w_bold: u32,
    /// `deg 𝐙_i`.
    pub deg_z_bold: u32,
}

/// The polynomial table for all nodes.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PolynomialTable {
    /// Per-node entries.
    pub nodes: Vec<NodePolynomials>,
}

fn u() -> Poly {
    Poly::var(Var::u())
}

fn prod(f: &[Poly]) -> Poly {
    f.iter().fold(Poly::one(), |acc, p| &acc * p)
}

fn eval(f: &[Poly], at: &Poly) -> Vec<Poly> {
    f.iter().map(|p| p.substitute(Var::u(), at)).collect()
}

fn minus(f: &[Poly]) -> Vec<Poly> {
    f.iter()
        .map(|p| f_minus(p, Var::u()).expect("linear factors are monic"))
        .collect()
}

fn ratio(num: &[Poly], den: &[Poly]) -> RatFun {
    let den: Vec<(Poly, u32)> = den.iter().map(|p| (p.clone(), 1)).collect();
    RatFun::from_parts(prod(num), &den).expect("denominators are non-zero linear forms")
}

fn c(x: &GQ) -> Poly {
    Poly::constant(x.clone())
}

/// Builds the images for one context.
pub struct Builder<'a> {
    ctx: &'a GKLOContext,
    limit: Limit,
}

impl<'a> Builder<'a> {
    /// A builder for the given context and limit.
    pub fn new(ctx: &'a GKLOContext, limit: Limit) -> Builder<'a> {
        Builder { ctx, limit }
    }

    /// The context.
    pub fn ctx(&self) -> &GKLOContext {
        self.ctx
    }

    fn quantum(&self) -> bool {
        self.limit == Limit::Quantum
    }

    fn half(&self) -> GQ {
        if self.quantum() {
            gq_rat(1, 2)
        } else {
            gq_int(0)
        }
    }

    fn class(&self, i: usize) -> NodeClass {
        self.ctx.diagram.class(i)
    }

    fn tau(&self, i: usize) -> usize {
        self.ctx.diagram.tau(i)
    }

    fn fv(&self, i: usize) -> usize {
        self.ctx.ints.frak_v[i] as usize
    }

    fn fw(&self, i: usize) -> usize {
        self.ctx.ints.frak_w[i] as usize
    }

    fn theta(&self, i: usize) -> usize {
        self.ctx.ints.theta[i] as usize
    }

    fn zeta(&self, i: usize) -> usize {
        self.ctx.ints.zeta[i] as usize
    }

    /// `w_{i,r}` as a polynomial in the independent variables.
    pub fn w(&self, i: usize, r: usize) -> Poly {
        match self.class(i) {
            NodeClass::MinusOne => {
                let t = self.tau(i);
                -&Poly::var(Var::w(t + 1, self.fv(t) + 1 - r))
            }
            _ => Poly::var(Var::w(i + 1, r)),
        }
    }

    /// The shift `∂_{i,r}`.
    pub fn d(&self, i: usize, r: usize) -> Shift {
        match self.class(i) {
            NodeClass::MinusOne => {
                let t = self.tau(i);
                Shift::single(Var::w(t + 1, self.fv(t) + 1 - r), -1)
            }
            _ => Shift::single(Var::w(i + 1, r), 1),
        }
    }

    /// `z_{i,s}` after applying the `z` mode.
    pub fn z(&self, i: usize, s: usize) -> Poly {
        if self.class(i) == NodeClass::MinusOne {
            return -&self.z(self.tau(i), s);
        }
        if !self.quantum() {
            return Poly::zero();
        }
        match &self.ctx.z_mode {
            ZMode::Symbolic => Poly::var(Var::z(i + 1, s)),
            ZMode::Zero => Poly::zero(),
            ZMode::Numeric(m) => m.get(&(i, s)).map(c).unwrap_or_else(Poly::zero),
        }
    }

    fn lin(&self, a: &Poly) -> Poly {
        &u() - a
    }

    /// Factors of `W_i(u)`.
    pub fn w_small(&self, i: usize) -> Vec<Poly> {
        let top = match self.class(i) {
            NodeClass::Zero => self.fv(i),
            _ => self.zeta(i),
        };
        (1..=top).map(|r| self.lin(&self.w(i, r))).collect()
    }

    /// Factors of `𝐖_i(u)`.
    pub fn w_bold(&self, i: usize) -> Vec<Poly> {
        match self.class(i) {
            NodeClass::Zero => {
                let mut f = vec![u(); self.theta(i)];
                for r in 1..=self.fv(i) {
                    let w = self.w(i, r);
                    f.push(self.lin(&w));
                    f.push(&u() + &w);
                }
                f
            }
            _ => (1..=self.fv(i)).map(|r| self.lin(&self.w(i, r))).collect(),
        }
    }

    /// Factors of `𝐖°_i(u)` for `i` in `I_0`.
    pub fn w_circ(&self, i: usize) -> Vec<Poly> {
        let mut f = Vec::new();
        for r in 1..=self.fv(i) {
            let w = self.w(i, r);
            f.push(self.lin(&w));
            f.push(&u() + &w);
        }
        f
    }

    /// Factors of `𝐖_{i,r}(u)`.
    pub fn w_bold_r(&self, i: usize, r: usize) -> Vec<Poly> {
        match self.class(i) {
            NodeClass::Zero => {
                let mut f = vec![u(); self.theta(i)];
                f.push(&u() + &self.w(i, r));
                for s in (1..=self.fv(i)).filter(|&s| s != r) {
                    let w = self.w(i, s);
                    f.push(self.lin(&w));
                    f.push(&u() + &w);
                }
                f
            }
            _ => (1..=self.fv(i))
                .filter(|&s| s != r)
                .map(|s| self.lin(&self.w(i, s)))
                .collect(),
        }
    }

    /// Factors of `𝐙_i(u)`.
    pub fn z_bold(&self, i: usize) -> Vec<Poly> {
        match self.class(i) {
            NodeClass::Zero => {
                let mut f = vec![u(); self.ctx.ints.varsigma[i] as usize];
                for s in 1..=self.fw(i) {
                    let z = self.z(i, s);
                    f.push(self.lin(&z));
                    f.push(&u() + &z);
                }
                f
            }
            _ => (1..=self.fw(i)).map(|s| self.lin(&self.z(i, s))).collect(),
        }
    }

    /// Factors of the chosen `Z_i(u)`.
    pub fn z_small(&self, i: usize) -> Vec<Poly> {
        let fw = self.fw(i);
        let range: Vec<usize> = match self.class(i) {
            NodeClass::Zero => (1..=fw).collect(),
            NodeClass::One => (1..=self.ctx.ints.deg_z(&self.ctx.diagram, i) as usize).collect(),
            NodeClass::MinusOne => {
                let d = self.ctx.ints.deg_z(&self.ctx.diagram, self.tau(i)) as usize;
                (d + 1..=fw).collect()
            }
        };
        range.into_iter().map(|s| self.lin(&self.z(i, s))).collect()
    }

    /// Factors of `W̄⁻_i(u) = u^{θ_i} W_i^-(u)`.
    pub fn w_bar_minus(&self, i: usize) -> Vec<Poly> {
        let mut f = vec![u(); self.theta(i)];
        f.extend(minus(&self.w_small(i)));
        f
    }

    /// Factors of `Z̄⁻_i(u) = u^{ς_i} Z_i^-(u)`.
    pub fn z_bar_minus(&self, i: usize) -> Vec<Poly> {
        let mut f = vec![u(); self.ctx.ints.varsigma[i] as usize];
        f.extend(minus(&self.z_small(i)));
        f
    }

    /// Expanded table, asserting `𝐖_i = W_i W_{τi}^-`, `𝐖_{τi} = 𝐖_i^-`,
    /// `𝐙_{τi} = 𝐙_i^-` and `𝐙_i = Z_i Z_{τi}^-` off `I_0`.
    pub fn table(&self) -> PolynomialTable {
        let d = &self.ctx.diagram;
        let mut nodes = Vec::new();
        for i in 0..d.rank() {
            let zero = self.class(i) == NodeClass::Zero;
            if !zero {
                let t = self.tau(i);
                let wb = prod(&self.w_bold(i));
                assert_eq!(wb, &prod(&self.w_small(i)) * &prod(&minus(&self.w_small(t))));
                assert_eq!(prod(&self.w_bold(t)), prod(&minus(&self.w_bold(i))));
                assert_eq!(prod(&self.z_bold(t)), prod(&minus(&self.z_bold(i))));
                assert_eq!(
                    prod(&self.z_bold(i)),
                    &prod(&self.z_small(i)) * &prod(&minus(&self.z_small(t)))
                );
            }
            let wb = prod(&self.w_bold(i));
            let zb = prod(&self.z_bold(i));
            nodes.push(NodePolynomials {
                node: i + 1,
                w: prod(&self.w_small(i)).render(),
                z: prod(&self.z_small(i)).render(),
                w_bold: wb.render(),
                z_bold: zb.render(),
                w_circ: zero.then(|| prod(&self.w_circ(i)).render()),
                w_bar_minus: zero.then(|| prod(&self.w_bar_minus(i)).render()),
                z_bar_minus: zero.then(|| prod(&self.z_bar_minus(i)).render()),
                deg_w_bold: wb.degree_in(Var::u()),
                deg_z_bold: zb.degree_in(Var::u()),
            });
        }
        PolynomialTable { nodes }
    }

    /// The image of `H_i(u)`.
    pub fn h_image(&self, i: usize) -> RatFun {
        let d = &self.ctx.diagram;
        let h = self.half();
        let mut num = self.z_bold(i);
        for j in d.neighbours(i) {
            num.extend(self.w_bold(j));
        }
        let wb = self.w_bold(i);
        let mut den = eval(&wb, &(&u() - &c(&h)));
        den.extend(eval(&wb, &(&u() + &c(&h))));
        if self.quantum() {
            if self.ctx.ints.vartheta[i] == 1 {
                num.push(&u() - &c(&h));
                num.push(&u() + &c(&h));
                den.push(u());
                den.push(u());
            }
            let wp = self.ctx.ints.wp[i];
            if wp != 0 {
                num.push(&u() + &c(&gq_rat(wp, 4)));
                den.push(u());
            }
        }
        ratio(&num, &den)
    }

    /// The prefactor of the Cartan series written in the `𝖠` series, and its inverse.
    pub fn gt_prefactor(&self, i: usize) -> (RatFun, RatFun) {
        let d = &self.ctx.diagram;
        let g = &self.ctx.ints;
        let h = gq_rat(1, 2);
        let um = &u() - &c(&h);
        let up = &u() + &c(&h);
        let mut num = self.z_bold(i);
        let mut den = Vec::new();
        let sum_v: i64 = d.neighbours(i).iter().map(|&j| g.v[j]).sum();
        num.extend(std::iter::repeat(u()).take(sum_v as usize));
        for _ in 0..g.v[i] {
            den.push(um.clone());
            den.push(up.clone());
        }
        if g.vartheta[i] == 1 {
            num.push(um.clone());
            num.push(up.clone());
            den.push(u());
            den.push(u());
        }
        if g.wp[i] != 0 {
            num.push(&u() + &c(&gq_rat(g.wp[i], 4)));
            den.push(u());
        }
        (ratio(&num, &den), ratio(&den, &num))
    }

    fn sqrt_exponent(&self, i: usize) -> i64 {
        let d = &self.ctx.diagram;
        self.ctx.ints.frak_w[i]
            + d.neighbours(i)
                .iter()
                .filter(|&&j| self.class(j) != NodeClass::MinusOne)
                .map(|&j| self.ctx.ints.frak_v[j])
                .sum::<i64>()
    }

    /// The image of `B_i(u)`.
    pub fn b_image(&self, i: usize) -> NodeImages {
        let d = &self.ctx.diagram;
        let h = c(&self.half());
        let mut poles = Vec::new();
        let neg = gq_int(-1);
        if self.class(i) != NodeClass::Zero {
            for r in 1..=self.zeta(i) {
                let wr = self.w(i, r);
                let at = &wr - &h;
                let mut num = eval(&self.z_small(i), &at);
                for j in d.into_node(i) {
                    num.extend(eval(&self.w_bold(j), &at));
                }
                let den = eval(&self.w_bold_r(i, r), &wr);
                poles.push(ImageTerm {
                    pole: &h - &wr,
                    coeff: ratio(&num, &den).scale(&neg),
                    shift: self.d(i, r).inv(),
                });
            }
            let t = self.tau(i);
            for r in 1..=self.zeta(t) {
                let wt = self.w(t, r);
                let at = &wt + &h;
                let mut num = eval(&minus(&self.z_small(i)), &at);
                for k in d.out_of(t) {
                    num.extend(eval(&self.w_bold(k), &at));
                }
                let den = eval(&self.w_bold_r(t, r), &wt);
                poles.push(ImageTerm {
                    pole: &h + &wt,
                    coeff: ratio(&num, &den).scale(&neg),
                    shift: self.d(t, r),
                });
            }
            return NodeImages {
                poles,
                theta: None,
                sqrt_is_i: false,
            };
        }
        let vt = self.ctx.ints.vartheta[i] == 1 && self.quantum();
        for r in 1..=self.fv(i) {
            let wr = self.w(i, r);
            let den_r = eval(&self.w_bold_r(i, r), &wr);

            let at = &wr - &h;
            let mut num = eval(&self.z_small(i), &at);
            let mut den = den_r.clone();
            if vt {
                num.push(wr.clone());
                den.push(at.clone());
            }
            for j in d.into_node(i) {
                num.extend(eval(&self.w_bold(j), &at));
            }
            for j in d.out_of(i) {
                if self.class(j) == NodeClass::Zero {
                    num.extend(eval(&self.w_bar_minus(j), &at));
                }
            }
            poles.push(ImageTerm {
                pole: &h - &wr,
                coeff: ratio(&num, &den).scale(&neg),
                shift: self.d(i, r).inv(),
            });

            let at = &wr + &h;
            let mut num = eval(&self.z_bar_minus(i), &at);
            let mut den = den_r;
            if vt {
                num.push(wr.clone());
                den.push(at.clone());
            }
            // Outgoing neighbours only: for j in I_{±1} this is the reflection
            // w -> -w of the incoming factor in the shift-down term.
            for j in d.out_of(i) {
                if self.class(j) == NodeClass::Zero {
                    num.extend(eval(&self.w_small(j), &at));
                } else {
                    num.extend(eval(&self.w_bold(j), &at));
                }
            }
            poles.push(ImageTerm {
                pole: &h + &wr,
                coeff: ratio(&num, &den).scale(&neg),
                shift: self.d(i, r),
            });
        }
        let sqrt_is_i = self.sqrt_exponent(i).rem_euclid(2) == 1;
        let theta = (self.theta(i) == 1).then(|| {
            let zero = Poly::zero();
            let mut num = eval(&self.z_small(i), &zero);
            for j in d.neighbours(i) {
                num.extend(eval(&self.w_small(j), &zero));
            }
            let den = eval(&self.w_circ(i), &h);
            let k = if sqrt_is_i { gq_i() } else { gq_int(1) };
            ratio(&num, &den).scale(&k)
        });
        NodeImages {
            poles,
            theta,
            sqrt_is_i,
        }
    }
}
