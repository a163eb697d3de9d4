//! The polynomials `a_i, b_i, c_i, d_i` on `ⁱX`, with coefficients in `gr 𝒜`.

use crate::diffops::GrA;
use crate::exactalg::{gq_int, Poly, RatFun, Var};
use crate::igklo::GKLOContext;
use crate::Result;

use super::{a_poly, gklo_rhs, lagrange_weight, outcome, tau_index, CheckOutcome, IXImages};

/// A polynomial in one variable with coefficients in `gr 𝒜`, lowest degree first.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct ZPoly(pub Vec<GrA>);

impl ZPoly {
    /// Lifts a polynomial in `x` with polynomial coefficients.
    pub fn from_poly(p: &Poly, x: Var) -> ZPoly {
        ZPoly(p.coeffs_in(x).into_iter().map(|c| GrA::coeff(RatFun::from_poly(c))).collect()).trim()
    }

    fn trim(mut self) -> ZPoly {
        while self.0.last().map_or(false, GrA::is_zero) {
            self.0.pop();
        }
        self
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(GrA::is_zero)
    }

    /// Sum.
    pub fn add(&self, o: &ZPoly) -> ZPoly {
        let n = self.0.len().max(o.0.len());
        let zero = GrA::zero();
        ZPoly(
            (0..n)
                .map(|k| self.0.get(k).unwrap_or(&zero).add(o.0.get(k).unwrap_or(&zero)))
                .collect(),
        )
        .trim()
    }

    /// Difference.
    pub fn sub(&self, o: &ZPoly) -> ZPoly {
        self.add(&o.scale_int(-1))
    }

    /// Product.
    pub fn mul(&self, o: &ZPoly) -> ZPoly {
        if self.0.is_empty() || o.0.is_empty() {
            return ZPoly::default();
        }
        let mut out = vec![GrA::zero(); self.0.len() + o.0.len() - 1];
        for (a, f) in self.0.iter().enumerate() {
            for (b, g) in o.0.iter().enumerate() {
                out[a + b] = out[a + b].add(&f.mul(g));
            }
        }
        ZPoly(out).trim()
    }

    /// Multiple by an integer.
    pub fn scale_int(&self, n: i64) -> ZPoly {
        ZPoly(self.0.iter().map(|c| c.scale(&gq_int(n))).collect()).trim()
    }

    /// `p(-z)`.
    pub fn reflect(&self) -> ZPoly {
        ZPoly(
            self.0
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 0 { c.clone() } else { c.neg() })
                .collect(),
        )
    }

    /// Quotient and remainder by a monic divisor.
    pub fn div_rem_monic(&self, m: &ZPoly) -> (ZPoly, ZPoly) {
        let dm = m.0.len() - 1;
        let mut rem = self.0.clone();
        if rem.len() <= dm {
            return (ZPoly::default(), self.clone());
        }
        let mut q = vec![GrA::zero(); rem.len() - dm];
        for k in (0..q.len()).rev() {
            let lead = rem[k + dm].clone();
            if lead.is_zero() {
                continue;
            }
            for (t, c) in m.0.iter().enumerate() {
                rem[k + t] = rem[k + t].sub(&lead.mul(c));
            }
            q[k] = lead;
        }
        rem.truncate(dm);
        (ZPoly(q).trim(), ZPoly(rem).trim())
    }

    /// Canonical rendering in the variable `z`.
    pub fn render(&self) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("({})*z^{}", c.render(), k))
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// The polynomials attached to one node, with `a d - b c = z^{𝐰_i} ∏_{j↔i} a_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassicalSeriesImage {
    /// Zero-based node.
    pub node: usize,
    /// `a_i(z) = 𝐖_i(z)`.
    pub a: ZPoly,
    /// `b_i(z)`, interpolating `y⁻_{i,r}` at `w_{i,r}`.
    pub b: ZPoly,
    /// `c_i(z)`, interpolating `y⁺_{i,r} = (-1)^{v_i} y⁻_{τi,τr}`.
    pub c: ZPoly,
    /// `d_i(z)`, the quotient of `z^{𝐰_i} ∏ a_j + b c` by `a_i`.
    pub d: ZPoly,
    /// Remainder of that division; zero when the identity holds.
    pub remainder: ZPoly,
}

fn interpolate(ix: &IXImages, i: usize, v: usize, values: &[crate::diffops::GrA], x: Var) -> Result<ZPoly> {
    let mut out = ZPoly::default();
    for r in 1..=v {
        let basis = (1..=v)
            .filter(|&s| s != r)
            .fold(Poly::one(), |acc, s| &acc * &(&Poly::var(x) - ix.w(i, s)));
        let wgt = GrA::coeff(lagrange_weight(ix, i, r, v)?).mul(&values[r - 1]);
        let term = ZPoly::from_poly(&basis, x);
        out = out.add(&ZPoly(term.0.iter().map(|c| c.mul(&wgt)).collect()));
    }
    Ok(out)
}

/// `a_i, b_i, c_i, d_i` for every node.
pub fn gklo_series(ctx: &GKLOContext, ix: &IXImages) -> Result<Vec<ClassicalSeriesImage>> {
    let d = &ctx.diagram;
    let x = Var::x(0);
    let mut out = Vec::new();
    for i in 0..d.rank() {
        let v = ctx.ints.v[i] as usize;
        let t = d.tau(i);
        let ym: Vec<GrA> = (1..=v).map(|r| ix.y(i, r).clone()).collect();
        let sign = if ctx.ints.v[i] % 2 == 0 { 1 } else { -1 };
        let yp: Vec<GrA> = (1..=v)
            .map(|r| ix.y(t, tau_index(ctx, i, r)).scale(&gq_int(sign)))
            .collect();
        let a = ZPoly::from_poly(&a_poly(ctx, i, x), x);
        let b = interpolate(ix, i, v, &ym, x)?;
        let c = interpolate(ix, i, v, &yp, x)?;
        let n = ZPoly::from_poly(&gklo_rhs(ctx, i, x), x).add(&b.mul(&c));
        let (dq, remainder) = n.div_rem_monic(&a);
        out.push(ClassicalSeriesImage {
            node: i,
            a,
            b,
            c,
            d: dq,
            remainder,
        });
    }
    Ok(out)
}

/// Exactness of `a d - b c = z^{𝐰_i} ∏ a_j` and the involution identities
/// `a_i(z) = (-1)^{v_i} a_{τi}(-z)`, `c_i(z) = (-1)^{v_i} b_{τi}(-z)`.
pub(super) fn check_gklo_identities(ctx: &GKLOContext, ix: &IXImages) -> Result<Vec<CheckOutcome>> {
    let series = gklo_series(ctx, ix)?;
    let mut out = Vec::new();
    let as_gra = |p: &ZPoly| {
        let mut g = GrA::zero();
        for (k, c) in p.0.iter().enumerate() {
            g = g.add(&c.mul(&GrA::coeff(RatFun::var(Var::x(0)).pow(k as u32))));
        }
        g
    };
    for s in &series {
        let i = s.node;
        let t = ctx.diagram.tau(i);
        let sign = if ctx.ints.v[i] % 2 == 0 { 1 } else { -1 };
        out.push(outcome("gklorel", format!("{}", i + 1), &as_gra(&s.remainder)));
        let da = s.a.sub(&series[t].a.reflect().scale_int(sign));
        out.push(outcome("sigma_a", format!("{}", i + 1), &as_gra(&da)));
        let dc = s.c.sub(&series[t].b.reflect().scale_int(sign));
        out.push(outcome("sigma_c", format!("{}", i + 1), &as_gra(&dc)));
    }
    Ok(out)
}
