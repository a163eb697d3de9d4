//! Truncated Laurent series in `u^{-1}` and expansion of rational functions at `u = ∞`.

use std::collections::BTreeMap;

use super::gauss::{gq_int, gq_pow, GQ};
use super::poly::{Poly, Var};
use super::ratfun::RatFun;
use crate::error::{Error, Result};

/// Minimal ring interface needed by generic series arithmetic.
///
/// Multiplication need not be commutative.
pub trait Ring: Clone + PartialEq + Send + Sync {
    /// Additive identity.
    fn zero() -> Self;
    /// Multiplicative identity.
    fn one() -> Self;
    /// Sum.
    fn add(&self, other: &Self) -> Self;
    /// Product `self * other`.
    fn mul(&self, other: &Self) -> Self;
    /// Additive inverse.
    fn neg(&self) -> Self;
    /// Scalar multiple.
    fn scale(&self, c: &GQ) -> Self;
    /// Exact zero test.
    fn is_zero(&self) -> bool;
    /// Canonical text.
    fn render(&self) -> String;
    /// Difference.
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
}

impl Ring for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, c: &GQ) -> Self {
        Poly::scale(self, c)
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn render(&self) -> String {
        Poly::render(self)
    }
}

impl Ring for RatFun {
    fn zero() -> Self {
        RatFun::zero()
    }
    fn one() -> Self {
        RatFun::one()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, c: &GQ) -> Self {
        RatFun::scale(self, c)
    }
    fn is_zero(&self) -> bool {
        RatFun::is_zero(self)
    }
    fn render(&self) -> String {
        RatFun::render(self)
    }
}

/// A Laurent series `sum_n c_n u^{-n}` with finitely many `n < 0`, truncated: only
/// exponents `n <= order` are stored and arithmetic discards the rest.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncLaurentSeries<C: Ring> {
    order: i64,
    coeffs: BTreeMap<i64, C>,
}

impl<C: Ring> TruncLaurentSeries<C> {
    /// The zero series truncated at `order`.
    pub fn zero(order: i64) -> Self {
        TruncLaurentSeries {
            order,
            coeffs: BTreeMap::new(),
        }
    }

    /// The constant series `1`.
    pub fn one(order: i64) -> Self {
        let mut s = Self::zero(order);
        s.set(0, C::one());
        s
    }

    /// Truncation order `K`: the largest stored `n` in `u^{-n}`.
    pub fn order(&self) -> i64 {
        self.order
    }

    /// Coefficient of `u^{-n}`.
    pub fn coeff(&self, n: i64) -> C {
        self.coeffs.get(&n).cloned().unwrap_or_else(C::zero)
    }

    /// Sets the coefficient of `u^{-n}` (ignored beyond the truncation order).
    pub fn set(&mut self, n: i64, c: C) {
        if n > self.order {
            return;
        }
        if c.is_zero() {
            self.coeffs.remove(&n);
        } else {
            self.coeffs.insert(n, c);
        }
    }

    /// Adds `c u^{-n}` in place.
    pub fn add_at(&mut self, n: i64, c: &C) {
        let cur = self.coeff(n);
        self.set(n, cur.add(c));
    }

    /// Non-zero `(n, c_n)` pairs in increasing `n`.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &C)> {
        self.coeffs.iter().map(|(n, c)| (*n, c))
    }

    /// Smallest `n` with a non-zero coefficient (the leading exponent is `u^{-n}`).
    pub fn valuation(&self) -> Option<i64> {
        self.coeffs.keys().next().cloned()
    }

    /// True when every stored coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Re-truncates at a smaller order.
    pub fn truncate(&self, order: i64) -> Self {
        let order = order.min(self.order);
        TruncLaurentSeries {
            order,
            coeffs: self
                .coeffs
                .range(..=order)
                .map(|(n, c)| (*n, c.clone()))
                .collect(),
        }
    }

    /// Sum, truncated at the smaller order.
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.truncate(self.order.min(other.order));
        for (n, c) in other.iter() {
            out.add_at(n, c);
        }
        out
    }

    /// Difference.
    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Negation.
    pub fn neg(&self) -> Self {
        TruncLaurentSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|(n, c)| (*n, c.neg())).collect(),
        }
    }

    /// Scalar multiple.
    pub fn scale(&self, k: &GQ) -> Self {
        let mut out = Self::zero(self.order);
        for (n, c) in self.iter() {
            out.set(n, c.scale(k));
        }
        out
    }

    /// Multiplies every coefficient on the left by `k`.
    pub fn mul_coeff_left(&self, k: &C) -> Self {
        let mut out = Self::zero(self.order);
        for (n, c) in self.iter() {
            out.set(n, k.mul(c));
        }
        out
    }

    /// Multiplies by `u^{-shift}`.
    pub fn mul_u_power(&self, shift: i64) -> Self {
        TruncLaurentSeries {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(n, _)| **n + shift <= self.order)
                .map(|(n, c)| (*n + shift, c.clone()))
                .collect(),
        }
    }

    /// Product. The result is exact up to `u^{-K}` where `K` is
    /// `min(order_a + val_b, order_b + val_a)`; it is truncated there.
    pub fn mul(&self, other: &Self) -> Self {
        let va = self.valuation().unwrap_or(0);
        let vb = other.valuation().unwrap_or(0);
        let order = (self.order + vb).min(other.order + va);
        let mut out = Self::zero(order);
        for (na, ca) in self.iter() {
            for (nb, cb) in other.iter() {
                if na + nb <= order {
                    out.add_at(na + nb, &ca.mul(cb));
                }
            }
        }
        out
    }

    /// Substitutes `u := u + a` and re-expands, keeping the truncation order.
    pub fn shift_arg(&self, a: &GQ) -> Self {
        let mut out = Self::zero(self.order);
        for (n, c) in self.iter() {
            if n <= 0 {
                // (u + a)^m for m = -n >= 0 is a polynomial.
                let m = (-n) as u32;
                for j in 0..=m {
                    let coeff = gq_int(binomial(m as i64, j as i64)) * gq_pow(a, j);
                    out.add_at(-(m as i64) + j as i64, &c.scale(&coeff));
                }
            } else {
                // (u + a)^{-n} = u^{-n} sum_j binom(-n, j) a^j u^{-j}
                let mut j = 0i64;
                while n + j <= self.order {
                    let coeff = gq_int(neg_binomial(n, j)) * gq_pow(a, j as u32);
                    out.add_at(n + j, &c.scale(&coeff));
                    j += 1;
                }
            }
        }
        out
    }

    /// Inverse of a series whose leading coefficient is exactly one.
    pub fn inverse(&self) -> Result<Self> {
        let v = self
            .valuation()
            .ok_or_else(|| Error::NonSolvable("inverse of zero series".into()))?;
        if self.coeff(v) != C::one() {
            return Err(Error::NonSolvable(
                "series inverse needs unit leading coefficient".into(),
            ));
        }
        // self = u^{-v}(1 + t), inverse = u^{v} sum (-t)^k
        let rel_order = self.order - v;
        let mut t = Self::zero(rel_order);
        for (n, c) in self.iter() {
            if n > v {
                t.set(n - v, c.clone());
            }
        }
        let mut inv = Self::one(rel_order);
        let mut power = Self::one(rel_order);
        let neg_t = t.neg();
        for _ in 0..rel_order {
            power = power.mul(&neg_t).truncate(rel_order);
            inv = inv.add(&power);
        }
        let mut out = Self::zero(rel_order - v);
        for (n, c) in inv.iter() {
            out.set(n - v, c.clone());
        }
        Ok(out)
    }

    /// Canonical rendering `c0 + c1 u^-1 + ...` listing non-zero terms.
    pub fn render(&self) -> String {
        if self.coeffs.is_empty() {
            return format!("0 + O(u^-{})", self.order + 1);
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(n, c)| {
                let body = c.render();
                match n {
                    0 => format!("({})", body),
                    _ => format!("({})*u^{}", body, -n),
                }
            })
            .collect();
        format!("{} + O(u^-{})", parts.join(" + "), self.order + 1)
    }
}

/// `binom(n, k)` for `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    let mut r: i64 = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// `binom(-n, j) = (-1)^j binom(n + j - 1, j)` for `n >= 1`.
pub fn neg_binomial(n: i64, j: i64) -> i64 {
    let b = binomial(n + j - 1, j);
    if j % 2 == 0 {
        b
    } else {
        -b
    }
}

/// Expands a rational function in `var` at `var = ∞` to order `u^{-order}`.
///
/// Coefficients are rational functions in the remaining variables; factors of
/// the denominator not involving `var` stay in the coefficients.
pub fn series_at_infinity_in(
    f: &RatFun,
    var: Var,
    order: i64,
) -> TruncLaurentSeries<RatFun> {
    // Split the denominator into u-dependent factors and the rest.
    let mut u_factors: Vec<(Poly, u32)> = Vec::new();
    let mut other: Vec<(Poly, u32)> = Vec::new();
    let mut pole_degree: i64 = 0;
    for (form, e) in f.den_factors() {
        let p = form.poly().clone();
        let a = p.coeffs_in(var);
        if a.len() >= 2 && !a[1].is_zero() {
            // p = a1 * var + a0 with a1 constant (forms are linear)
            let a1 = a[1].as_constant().expect("linear form");
            let a0 = a[0].scale(&(gq_int(1) / a1.clone()));
            u_factors.push((a0, e));
            pole_degree += e as i64;
            let a1e = gq_pow(&a1, e);
            other.push((Poly::constant(a1e), 1));
        } else {
            other.push((p, e));
        }
    }
    let num_coeffs = f.numerator().coeffs_in(var);
    let top = num_coeffs.len() as i64 - 1;
    // Relative order needed for the product of the pole expansions.
    let lead_exp = top - pole_degree; // u^{lead_exp} is the highest possible power
    let rel = (order + lead_exp).max(0);
    // prod 1/(1 + a0/u)^e as a power series in u^{-1} with Poly coefficients.
    let mut prod: TruncLaurentSeries<Poly> = TruncLaurentSeries::one(rel);
    for (a0, e) in &u_factors {
        let mut s: TruncLaurentSeries<Poly> = TruncLaurentSeries::zero(rel);
        let mut apow = Poly::one();
        for j in 0..=rel {
            let c = apow.scale(&gq_int(neg_binomial(*e as i64, j)));
            s.set(j, c);
            apow = &apow * a0;
        }
        prod = prod.mul(&s).truncate(rel);
    }
    // Multiply by numerator polynomial and the overall u^{-pole_degree}.
    let mut out: TruncLaurentSeries<Poly> = TruncLaurentSeries::zero(order);
    for (k, nk) in num_coeffs.iter().enumerate() {
        if nk.is_zero() {
            continue;
        }
        for (j, pj) in prod.iter() {
            let n = j + pole_degree - k as i64;
            if n <= order {
                out.add_at(n, &(nk * pj));
            }
        }
    }
    let mut result = TruncLaurentSeries::zero(order);
    for (n, c) in out.iter() {
        let r = RatFun::from_parts(c.clone(), &other).expect("linear denominators");
        result.set(n, r);
    }
    result
}

/// Expands a rational function in `u` at `u = ∞`, see [`series_at_infinity_in`].
pub fn series_at_infinity(f: &RatFun, order: i64) -> TruncLaurentSeries<RatFun> {
    series_at_infinity_in(f, Var::u(), order)
}

/// Lagrange interpolation in `var` through `(node, value)` pairs.
///
/// Nodes are rational functions free of `var`; their pairwise differences must be
/// non-zero constants or linear forms.
pub fn lagrange_interpolate(var: Var, points: &[(RatFun, RatFun)]) -> Result<RatFun> {
    let x = RatFun::var(var);
    let mut total = RatFun::zero();
    for (r, (nr, yr)) in points.iter().enumerate() {
        let mut basis = yr.clone();
        for (s, (ns, _)) in points.iter().enumerate() {
            if s == r {
                continue;
            }
            let diff = nr - ns;
            if diff.is_zero() {
                return Err(Error::DuplicateNode(nr.render()));
            }
            basis = &(&basis * &(&x - ns)) * &diff.try_inv()?;
        }
        total = &total + &basis;
    }
    Ok(total)
}

/// `f^-(u) = (-1)^{deg f} f(-u)` for `f` monic in `var`.
pub fn f_minus(f: &Poly, var: Var) -> Result<Poly> {
    let coeffs = f.coeffs_in(var);
    let lead_ok = coeffs
        .last()
        .map(|c| c.is_one())
        .unwrap_or(false);
    if !lead_ok {
        return Err(Error::NotMonic(var.name()));
    }
    let d = coeffs.len() - 1;
    let flipped: Vec<Poly> = coeffs
        .iter()
        .enumerate()
        .map(|(k, c)| {
            if (d - k) % 2 == 1 {
                -c
            } else {
                c.clone()
            }
        })
        .collect();
    Ok(Poly::from_coeffs_in(var, &flipped))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::gauss::gq_rat;

    fn u() -> Poly {
        Poly::var(Var::u())
    }

    #[test]
    fn geometric_series() {
        let a = Poly::var(Var::x(1));
        let f = RatFun::from_parts(Poly::one(), &[(&u() - &a, 1)]).unwrap();
        let s = series_at_infinity(&f, 3);
        assert!(s.coeff(0).is_zero());
        assert!(s.coeff(1).is_one());
        assert_eq!(s.coeff(2), RatFun::from_poly(a.clone()));
        assert_eq!(s.coeff(3), RatFun::from_poly(&a * &a));
    }

    #[test]
    fn division_example() {
        let z = Poly::var(Var::z(1, 1));
        let f = RatFun::from_parts(&(&u() * &u()) - &(&z * &z), &[(u(), 2)]).unwrap();
        let s = series_at_infinity(&f, 2);
        assert!(s.coeff(0).is_one());
        assert!(s.coeff(1).is_zero());
        assert_eq!(s.coeff(2), RatFun::from_poly(-&(&z * &z)));
    }

    #[test]
    fn polynomial_part_kept() {
        let f = RatFun::from_poly(u());
        let s = series_at_infinity(&f, 2);
        assert_eq!(s.valuation(), Some(-1));
        assert!(s.coeff(-1).is_one());
    }

    #[test]
    fn shift_and_inverse() {
        // 1/(u-1/2) expanded directly vs shifting u^{-1} by -1/2
        let f = RatFun::from_parts(Poly::one(), &[(&u() - &Poly::constant(gq_rat(1, 2)), 1)])
            .unwrap();
        let direct = series_at_infinity(&f, 5);
        let mut base: TruncLaurentSeries<RatFun> = TruncLaurentSeries::zero(5);
        base.set(1, RatFun::one());
        assert_eq!(base.shift_arg(&gq_rat(-1, 2)), direct);
        // (1 - 1/(4u^2))^{-1} times itself is one
        let mut k: TruncLaurentSeries<RatFun> = TruncLaurentSeries::one(6);
        k.set(2, RatFun::constant(gq_rat(-1, 4)));
        let inv = k.inverse().unwrap();
        let prod = k.mul(&inv);
        assert!(prod.coeff(0).is_one());
        for n in 1..=6 {
            assert!(prod.coeff(n).is_zero());
        }
    }

    #[test]
    fn lagrange_and_f_minus() {
        let nodes: Vec<RatFun> = (1..=3).map(|i| RatFun::var(Var::w(1, i))).collect();
        let vals: Vec<RatFun> = (1..=3).map(|i| RatFun::var(Var::x(i))).collect();
        let pts: Vec<(RatFun, RatFun)> = nodes.iter().cloned().zip(vals.iter().cloned()).collect();
        let p = lagrange_interpolate(Var::u(), &pts).unwrap();
        for (n, y) in &pts {
            let at = p.substitute_linear(Var::u(), n.as_poly().unwrap()).unwrap();
            assert_eq!(&at, y);
        }
        let dup = vec![pts[0].clone(), pts[0].clone()];
        assert!(matches!(
            lagrange_interpolate(Var::u(), &dup),
            Err(Error::DuplicateNode(_))
        ));
        let f = &(&u() - &Poly::int(1)) * &(&u() - &Poly::int(2));
        let g = f_minus(&f, Var::u()).unwrap();
        assert_eq!(g, &(&u() + &Poly::int(1)) * &(&u() + &Poly::int(2)));
        assert_eq!(f_minus(&g, Var::u()).unwrap(), f);
        assert!(f_minus(&u().scale(&gq_int(2)), Var::u()).is_err());
    }
}
