//! Rational functions whose denominators are products of linear forms.
//!
//! Every denominator produced by the difference-operator images has the shape
//! `(w ± w' + m)` or `(w + m/2)` (and `u`-poles of the same shape), so the
//! denominator is stored factored. Cancellation against the numerator is then an
//! exact synthetic division per factor, which keeps `gcd(num, den) = 1` without a
//! general multivariate gcd.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use super::gauss::{gq_int, gq_is_zero, GQ};
use super::poly::{Poly, Var};
use crate::error::{Error, Result};

/// A linear form `x + c_1 y_1 + ... + c_0`, normalised so that the coefficient of its
/// smallest variable `x` is one.
#[derive(Clone, Debug, PartialEq)]
pub struct LinForm {
    poly: Poly,
    lead: Var,
}

impl LinForm {
    /// Normalises a degree-one polynomial, returning the form and the scalar `c`
    /// with `p = c * form`. Returns `None` for constants.
    pub fn normalize(p: &Poly) -> Option<(LinForm, GQ)> {
        if p.total_degree() != 1 {
            return None;
        }
        let lead = p.leading_var()?;
        let c = p.coeff(&super::poly::Monomial::var_pow(lead, 1));
        let inv = gq_int(1) / c.clone();
        Some((
            LinForm {
                poly: p.scale(&inv),
                lead,
            },
            c,
        ))
    }

    /// The form as a polynomial.
    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    /// The leading (smallest) variable, whose coefficient is one.
    pub fn lead(&self) -> Var {
        self.lead
    }

    /// The form minus its leading variable.
    pub fn rest(&self) -> Poly {
        &self.poly - &Poly::var(self.lead)
    }
}

impl Eq for LinForm {}

impl PartialOrd for LinForm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LinForm {
    fn cmp(&self, other: &Self) -> Ordering {
        self.poly.cmp_canonical(&other.poly)
    }
}

/// A rational function `num / prod(den_k^e_k)` in canonical form.
///
/// Invariants: each denominator factor is a normalised [`LinForm`] that does not
/// divide the numerator; the zero function has an empty denominator.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct RatFun {
    num: Poly,
    den: BTreeMap<LinForm, u32>,
}

impl RatFun {
    /// The zero function.
    pub fn zero() -> RatFun {
        RatFun::default()
    }

    /// The constant one.
    pub fn one() -> RatFun {
        RatFun::from_poly(Poly::one())
    }

    /// A polynomial viewed as a rational function.
    pub fn from_poly(p: Poly) -> RatFun {
        RatFun {
            num: p,
            den: BTreeMap::new(),
        }
    }

    /// A constant.
    pub fn constant(c: GQ) -> RatFun {
        RatFun::from_poly(Poly::constant(c))
    }

    /// An integer constant.
    pub fn int(n: i64) -> RatFun {
        RatFun::constant(gq_int(n))
    }

    /// A single variable.
    pub fn var(v: Var) -> RatFun {
        RatFun::from_poly(Poly::var(v))
    }

    /// Builds `num / prod(den_k^e_k)` from polynomials of degree at most one.
    pub fn from_parts(num: Poly, den: &[(Poly, u32)]) -> Result<RatFun> {
        let mut num = num;
        let mut forms = BTreeMap::new();
        for (d, e) in den {
            if *e == 0 {
                continue;
            }
            match LinForm::normalize(d) {
                Some((form, c)) => {
                    let inv = gq_int(1) / c;
                    num = num.scale(&super::gauss::gq_pow(&inv, *e));
                    *forms.entry(form).or_insert(0) += *e;
                }
                None => {
                    let c = d
                        .as_constant()
                        .ok_or_else(|| Error::NonLinearDenominator(d.render()))?;
                    if gq_is_zero(&c) {
                        return Err(Error::DivisionByZero);
                    }
                    let inv = gq_int(1) / c;
                    num = num.scale(&super::gauss::gq_pow(&inv, *e));
                }
            }
        }
        let mut r = RatFun { num, den: forms };
        r.reduce();
        Ok(r)
    }

    /// The numerator.
    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    /// The factored denominator.
    pub fn den_factors(&self) -> impl Iterator<Item = (&LinForm, u32)> {
        self.den.iter().map(|(f, e)| (f, *e))
    }

    /// The expanded denominator polynomial.
    pub fn denominator(&self) -> Poly {
        let mut d = Poly::one();
        for (f, e) in &self.den {
            d = &d * &f.poly.pow(*e);
        }
        d
    }

    /// True for the zero function.
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True when the denominator is trivial.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    /// Returns the polynomial if the denominator is trivial.
    pub fn as_poly(&self) -> Option<&Poly> {
        if self.den.is_empty() {
            Some(&self.num)
        } else {
            None
        }
    }

    /// Returns the value if the function is a constant.
    pub fn as_constant(&self) -> Option<GQ> {
        self.as_poly().and_then(|p| p.as_constant())
    }

    /// True when the function is exactly one.
    pub fn is_one(&self) -> bool {
        self.as_poly().map(|p| p.is_one()).unwrap_or(false)
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        let forms: Vec<LinForm> = self.den.keys().cloned().collect();
        for f in forms {
            let rest = f.rest();
            let mut e = self.den[&f];
            while e > 0 {
                match self.num.div_by_monic_linear(f.lead, &rest) {
                    Some(q) => {
                        self.num = q;
                        e -= 1;
                    }
                    None => break,
                }
            }
            if e == 0 {
                self.den.remove(&f);
            } else {
                self.den.insert(f, e);
            }
        }
    }

    /// Multiplies by a scalar.
    pub fn scale(&self, c: &GQ) -> RatFun {
        if gq_is_zero(c) {
            return RatFun::zero();
        }
        RatFun {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// The reciprocal; requires the numerator to be a constant times a linear form.
    pub fn try_inv(&self) -> Result<RatFun> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let num = self.denominator();
        if let Some(c) = self.num.as_constant() {
            return Ok(RatFun::from_poly(num.scale(&(gq_int(1) / c))));
        }
        if self.num.total_degree() == 1 {
            return RatFun::from_parts(num, &[(self.num.clone(), 1)]);
        }
        Err(Error::NonLinearDenominator(self.num.render()))
    }

    /// `self / other`, see [`RatFun::try_inv`].
    pub fn try_div(&self, other: &RatFun) -> Result<RatFun> {
        Ok(self * &other.try_inv()?)
    }

    /// `self^n`.
    pub fn pow(&self, n: u32) -> RatFun {
        let mut acc = RatFun::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes `v := v + c`.
    pub fn shift(&self, v: Var, c: &GQ) -> RatFun {
        if gq_is_zero(c) {
            return self.clone();
        }
        let num = self.num.shift(v, c);
        let den = self
            .den
            .iter()
            .map(|(f, e)| {
                let p = f.poly.shift(v, c);
                // The leading coefficient is untouched by a constant shift.
                (LinForm { poly: p, lead: f.lead }, *e)
            })
            .collect();
        let mut r = RatFun { num, den };
        r.reduce();
        r
    }

    /// Substitutes `v := value` where `value` has degree at most one.
    pub fn substitute_linear(&self, v: Var, value: &Poly) -> Result<RatFun> {
        let num = self.num.substitute(v, value);
        let den: Vec<(Poly, u32)> = self
            .den
            .iter()
            .map(|(f, e)| (f.poly.substitute(v, value), *e))
            .collect();
        RatFun::from_parts(num, &den)
    }

    /// Partial derivative with respect to `v`.
    pub fn derivative(&self, v: Var) -> RatFun {
        let involved: Vec<(&LinForm, u32)> = self
            .den
            .iter()
            .filter(|(f, _)| f.poly.degree_in(v) > 0)
            .map(|(f, e)| (f, *e))
            .collect();
        let mut prod_all = Poly::one();
        for (f, _) in &involved {
            prod_all = &prod_all * &f.poly;
        }
        let mut num = &self.num.derivative(v) * &prod_all;
        for (k, (fk, ek)) in involved.iter().enumerate() {
            let ck = fk.poly.derivative(v);
            let mut others = Poly::one();
            for (l, (fl, _)) in involved.iter().enumerate() {
                if l != k {
                    others = &others * &fl.poly;
                }
            }
            let term = &(&self.num * &ck) * &others;
            num = &num - &term.scale(&gq_int(*ek as i64));
        }
        let mut den = self.den.clone();
        for (f, _) in &involved {
            *den.get_mut(*f).unwrap() += 1;
        }
        let mut r = RatFun { num, den };
        r.reduce();
        r
    }

    /// Variables occurring in numerator or denominator.
    pub fn vars(&self) -> Vec<Var> {
        let mut vs = self.num.vars();
        for f in self.den.keys() {
            vs.extend(f.poly.vars());
        }
        vs.sort();
        vs.dedup();
        vs
    }

    /// Canonical rendering `num` or `(num)/(f1^e1*f2)`.
    pub fn render(&self) -> String {
        if self.den.is_empty() {
            return self.num.render();
        }
        let den = self
            .den
            .iter()
            .map(|(f, e)| {
                if *e == 1 {
                    format!("({})", f.poly.render())
                } else {
                    format!("({})^{}", f.poly.render(), e)
                }
            })
            .collect::<Vec<_>>()
            .join("*");
        format!("({})/({})", self.num.render(), den)
    }

    fn lcm_parts(a: &RatFun, b: &RatFun) -> (BTreeMap<LinForm, u32>, Poly, Poly) {
        let mut lcm = a.den.clone();
        for (f, e) in &b.den {
            let slot = lcm.entry(f.clone()).or_insert(0);
            *slot = (*slot).max(*e);
        }
        let lift = |r: &RatFun| {
            let mut p = r.num.clone();
            for (f, e) in &lcm {
                let have = r.den.get(f).cloned().unwrap_or(0);
                if *e > have {
                    p = &p * &f.poly.pow(e - have);
                }
            }
            p
        };
        let pa = lift(a);
        let pb = lift(b);
        (lcm, pa, pb)
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl std::ops::Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let mut r = RatFun {
                num: &self.num + &rhs.num,
                den: self.den.clone(),
            };
            r.reduce();
            return r;
        }
        let (den, pa, pb) = RatFun::lcm_parts(self, rhs);
        let mut r = RatFun { num: &pa + &pb, den };
        r.reduce();
        r
    }
}

impl std::ops::Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl std::ops::Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl std::ops::Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() || rhs.is_zero() {
            return RatFun::zero();
        }
        let mut den = self.den.clone();
        for (f, e) in &rhs.den {
            *den.entry(f.clone()).or_insert(0) += *e;
        }
        let mut r = RatFun {
            num: &self.num * &rhs.num,
            den,
        };
        r.reduce();
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::gauss::gq_rat;

    fn x(i: usize) -> Poly {
        Poly::var(Var::x(i))
    }

    #[test]
    fn cancellation_is_canonical() {
        let d = &x(1) - &x(2);
        let r = RatFun::from_parts(&d * &x(3), &[(d.clone(), 1)]).unwrap();
        assert_eq!(r, RatFun::var(Var::x(3)));
        // 1/(2x) is stored as (1/2)/(x)
        let h = RatFun::from_parts(Poly::one(), &[(x(1).scale(&gq_int(2)), 1)]).unwrap();
        assert_eq!(h.numerator().as_constant().unwrap(), gq_rat(1, 2));
    }

    #[test]
    fn addition_over_common_denominator() {
        // 1/(x1-x2) + 1/(x2-x1) = 0
        let a = RatFun::from_parts(Poly::one(), &[(&x(1) - &x(2), 1)]).unwrap();
        let b = RatFun::from_parts(Poly::one(), &[(&x(2) - &x(1), 1)]).unwrap();
        assert!((&a + &b).is_zero());
        // 1/(x-1) - 1/(x+1) = 2/(x^2-1)
        let c = RatFun::from_parts(Poly::one(), &[(&x(1) - &Poly::one(), 1)]).unwrap();
        let e = RatFun::from_parts(Poly::one(), &[(&x(1) + &Poly::one(), 1)]).unwrap();
        let diff = &c - &e;
        assert_eq!(diff.numerator().as_constant().unwrap(), gq_int(2));
        assert_eq!(diff.den_factors().count(), 2);
    }

    #[test]
    fn shift_and_derivative() {
        let r = RatFun::from_parts(x(1), &[(&x(1) - &x(2), 1)]).unwrap();
        let s = r.shift(Var::x(1), &gq_int(1));
        let expect =
            RatFun::from_parts(&x(1) + &Poly::one(), &[(&(&x(1) - &x(2)) + &Poly::one(), 1)])
                .unwrap();
        assert_eq!(s, expect);
        // d/dx1 [x1/(x1-x2)] = -x2/(x1-x2)^2
        let d = r.derivative(Var::x(1));
        let expect = RatFun::from_parts(-&x(2), &[(&x(1) - &x(2), 2)]).unwrap();
        assert_eq!(d, expect);
    }

    #[test]
    fn inversion() {
        let r = RatFun::from_parts(&x(1) - &x(2), &[(x(3), 1)]).unwrap();
        let inv = r.try_inv().unwrap();
        assert!((&r * &inv).is_one());
        let q = RatFun::from_poly(&x(1) * &x(2));
        assert!(q.try_inv().is_err());
    }
}
