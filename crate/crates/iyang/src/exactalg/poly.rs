//! Sparse multivariate polynomials over the Gaussian rationals.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};

use super::gauss::{gq_cmp, gq_int, gq_is_one, gq_is_zero, gq_render, GQ};

const KIND_SHIFT: u32 = 20;
const NODE_SHIFT: u32 = 10;
const FIELD_MASK: u32 = (1 << NODE_SHIFT) - 1;

/// A named polynomial variable.
///
/// Variables are ordered lexicographically by `(kind, node, index)`, with the
/// spectral variable `u` first. This order fixes all canonical forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(u32);

/// The family a variable belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VarKind {
    /// The spectral variable `u` of generating series.
    U,
    /// A difference-operator coordinate `w_{i,r}`.
    W,
    /// A central parameter `z_{i,s}`.
    Z,
    /// An auxiliary variable `x_r` (tests and interpolation).
    X,
}

impl Var {
    fn pack(kind: u32, node: usize, index: usize) -> Var {
        assert!(node <= FIELD_MASK as usize && index <= FIELD_MASK as usize);
        Var((kind << KIND_SHIFT) | ((node as u32) << NODE_SHIFT) | index as u32)
    }

    /// The spectral variable `u`.
    pub fn u() -> Var {
        Var::pack(0, 0, 0)
    }

    /// The coordinate `w_{i,r}` (1-based node and index).
    pub fn w(node: usize, index: usize) -> Var {
        Var::pack(1, node, index)
    }

    /// The central parameter `z_{i,s}`.
    pub fn z(node: usize, index: usize) -> Var {
        Var::pack(2, node, index)
    }

    /// An auxiliary variable `x_r`.
    pub fn x(index: usize) -> Var {
        Var::pack(3, 0, index)
    }

    /// The family of this variable.
    pub fn kind(self) -> VarKind {
        match self.0 >> KIND_SHIFT {
            0 => VarKind::U,
            1 => VarKind::W,
            2 => VarKind::Z,
            _ => VarKind::X,
        }
    }

    /// The node label (0 for `u` and `x`).
    pub fn node(self) -> usize {
        ((self.0 >> NODE_SHIFT) & FIELD_MASK) as usize
    }

    /// The index within the node.
    pub fn index(self) -> usize {
        (self.0 & FIELD_MASK) as usize
    }

    /// Canonical name such as `w[2,1]`.
    pub fn name(self) -> String {
        match self.kind() {
            VarKind::U => "u".to_string(),
            VarKind::W => format!("w[{},{}]", self.node(), self.index()),
            VarKind::Z => format!("z[{},{}]", self.node(), self.index()),
            VarKind::X => format!("x[{}]", self.index()),
        }
    }
}

/// A monomial: sorted list of `(variable, positive exponent)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    /// The empty monomial `1`.
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    /// A single variable power.
    pub fn var_pow(v: Var, e: u32) -> Monomial {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(v, e)])
        }
    }

    /// The `(variable, exponent)` pairs in increasing variable order.
    pub fn factors(&self) -> &[(Var, u32)] {
        &self.0
    }

    /// Total degree.
    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    /// Exponent of `v`.
    pub fn exponent(&self, v: Var) -> u32 {
        self.0
            .iter()
            .find(|(w, _)| *w == v)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    /// Product of two monomials.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (a, ea) = self.0[i];
            let (b, eb) = other.0[j];
            if a == b {
                out.push((a, ea + eb));
                i += 1;
                j += 1;
            } else if a < b {
                out.push((a, ea));
                i += 1;
            } else {
                out.push((b, eb));
                j += 1;
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    /// Removes `v` entirely, returning the remaining monomial and the exponent removed.
    pub fn split_off(&self, v: Var) -> (Monomial, u32) {
        let mut e = 0;
        let rest = self
            .0
            .iter()
            .filter(|(w, x)| {
                if *w == v {
                    e = *x;
                    false
                } else {
                    true
                }
            })
            .cloned()
            .collect();
        (Monomial(rest), e)
    }

    fn render(&self) -> String {
        self.0
            .iter()
            .map(|(v, e)| {
                if *e == 1 {
                    v.name()
                } else {
                    format!("{}^{}", v.name(), e)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// A sparse polynomial with Gaussian-rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is mathematical equality.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, GQ>,
}

impl Poly {
    /// The zero polynomial.
    pub fn zero() -> Poly {
        Poly::default()
    }

    /// The constant `1`.
    pub fn one() -> Poly {
        Poly::constant(gq_int(1))
    }

    /// A constant polynomial.
    pub fn constant(c: GQ) -> Poly {
        let mut p = Poly::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    /// An integer constant.
    pub fn int(n: i64) -> Poly {
        Poly::constant(gq_int(n))
    }

    /// The polynomial consisting of one variable.
    pub fn var(v: Var) -> Poly {
        Poly::monomial(Monomial::var_pow(v, 1), gq_int(1))
    }

    /// `c * m`.
    pub fn monomial(m: Monomial, c: GQ) -> Poly {
        let mut p = Poly::zero();
        p.add_term(m, c);
        p
    }

    /// Adds `c * m` in place.
    pub fn add_term(&mut self, m: Monomial, c: GQ) {
        if gq_is_zero(&c) {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if gq_is_zero(existing) {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// Iterates over `(monomial, coefficient)` in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GQ)> {
        self.terms.iter()
    }

    /// Number of stored terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Returns the value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<GQ> {
        match self.terms.len() {
            0 => Some(gq_int(0)),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    /// True when the polynomial is exactly `1`.
    pub fn is_one(&self) -> bool {
        self.as_constant().map(|c| gq_is_one(&c)).unwrap_or(false)
    }

    /// Total degree (`0` for the zero polynomial).
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    /// Degree in a single variable.
    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    /// The sorted set of variables that occur.
    pub fn vars(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self
            .terms
            .keys()
            .flat_map(|m| m.factors().iter().map(|(v, _)| *v))
            .collect();
        vs.sort();
        vs.dedup();
        vs
    }

    /// Multiplies by a scalar.
    pub fn scale(&self, c: &GQ) -> Poly {
        if gq_is_zero(c) {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a * c))
                .collect(),
        }
    }

    /// `self^n`.
    pub fn pow(&self, n: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Coefficients with respect to `v`: entry `k` is the coefficient of `v^k`.
    pub fn coeffs_in(&self, v: Var) -> Vec<Poly> {
        let d = self.degree_in(v) as usize;
        let mut out = vec![Poly::zero(); if self.is_zero() { 0 } else { d + 1 }];
        for (m, c) in &self.terms {
            let (rest, e) = m.split_off(v);
            out[e as usize].add_term(rest, c.clone());
        }
        out
    }

    /// Inverse of [`Poly::coeffs_in`].
    pub fn from_coeffs_in(v: Var, coeffs: &[Poly]) -> Poly {
        let mut out = Poly::zero();
        for (k, c) in coeffs.iter().enumerate() {
            let vk = Monomial::var_pow(v, k as u32);
            for (m, a) in &c.terms {
                out.add_term(m.mul(&vk), a.clone());
            }
        }
        out
    }

    /// Substitutes `v := value` (Horner evaluation in `v`).
    pub fn substitute(&self, v: Var, value: &Poly) -> Poly {
        if self.degree_in(v) == 0 {
            return self.clone();
        }
        let coeffs = self.coeffs_in(v);
        let mut acc = Poly::zero();
        for c in coeffs.iter().rev() {
            acc = &(&acc * value) + c;
        }
        acc
    }

    /// Substitutes `v := v + c`.
    pub fn shift(&self, v: Var, c: &GQ) -> Poly {
        if gq_is_zero(c) {
            return self.clone();
        }
        self.substitute(v, &(&Poly::var(v) + &Poly::constant(c.clone())))
    }

    /// Partial derivative with respect to `v`.
    pub fn derivative(&self, v: Var) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let (rest, e) = m.split_off(v);
            if e == 0 {
                continue;
            }
            out.add_term(
                rest.mul(&Monomial::var_pow(v, e - 1)),
                c * gq_int(e as i64),
            );
        }
        out
    }

    /// The smallest variable occurring, if any.
    pub fn leading_var(&self) -> Option<Var> {
        self.terms
            .keys()
            .filter_map(|m| m.factors().first().map(|(v, _)| *v))
            .min()
    }

    /// Coefficient of a monomial.
    pub fn coeff(&self, m: &Monomial) -> GQ {
        self.terms.get(m).cloned().unwrap_or_else(|| gq_int(0))
    }

    /// Exact division by `x + rest` where `x` does not occur in `rest`.
    ///
    /// Returns `None` when the division leaves a remainder.
    pub fn div_by_monic_linear(&self, x: Var, rest: &Poly) -> Option<Poly> {
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let c = self.coeffs_in(x);
        let n = c.len() - 1;
        if n == 0 {
            return None;
        }
        let mut q = vec![Poly::zero(); n];
        q[n - 1] = c[n].clone();
        for k in (1..n).rev() {
            q[k - 1] = &c[k] - &(rest * &q[k]);
        }
        let rem = &c[0] - &(rest * &q[0]);
        if rem.is_zero() {
            Some(Poly::from_coeffs_in(x, &q))
        } else {
            None
        }
    }

    /// Canonical text rendering, e.g. `w[1,1]^2 - 1/4`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        // Highest total degree first reads naturally; ties broken by canonical order.
        let mut terms: Vec<(&Monomial, &GQ)> = self.terms.iter().collect();
        terms.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then_with(|| a.0.cmp(b.0)));
        for (idx, (m, c)) in terms.into_iter().enumerate() {
            let (neg, mag) = if c.im.is_zero() && c.re.is_negative() {
                (true, -c.clone())
            } else {
                (false, c.clone())
            };
            if idx == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let body = m.render();
            if body.is_empty() {
                s.push_str(&gq_render(&mag));
            } else if gq_is_one(&mag) {
                s.push_str(&body);
            } else {
                s.push_str(&format!("{}*{}", gq_render(&mag), body));
            }
        }
        s
    }

    /// A deterministic total-order key; used to keep polynomials in ordered maps.
    pub fn cmp_canonical(&self, other: &Poly) -> std::cmp::Ordering {
        let mut a = self.terms.iter();
        let mut b = other.terms.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return std::cmp::Ordering::Equal,
                (None, Some(_)) => return std::cmp::Ordering::Less,
                (Some(_), None) => return std::cmp::Ordering::Greater,
                (Some((ma, ca)), Some((mb, cb))) => {
                    let o = ma.cmp(mb).then_with(|| gq_cmp(ca, cb));
                    if o != std::cmp::Ordering::Equal {
                        return o;
                    }
                }
            }
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl std::ops::Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl std::ops::Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl std::ops::Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl std::ops::Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
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
    fn variable_order_puts_u_first() {
        assert!(Var::u() < Var::w(1, 1));
        assert!(Var::w(1, 2) < Var::w(2, 1));
        assert!(Var::w(3, 1) < Var::z(1, 1));
        assert_eq!(Var::w(2, 3).name(), "w[2,3]");
    }

    #[test]
    fn arithmetic_and_rendering() {
        let p = &(&x(1) + &Poly::int(1)) * &(&x(1) - &Poly::int(1));
        assert_eq!(p.render(), "x[1]^2 - 1");
        assert_eq!(p.degree_in(Var::x(1)), 2);
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn substitution_and_shift() {
        let p = &x(1) * &x(1);
        let shifted = p.shift(Var::x(1), &gq_int(1));
        assert_eq!(shifted, &(&p + &x(1).scale(&gq_int(2))) + &Poly::one());
        let at_half = p.substitute(Var::x(1), &Poly::constant(gq_rat(1, 2)));
        assert_eq!(at_half.as_constant().unwrap(), gq_rat(1, 4));
    }

    #[test]
    fn linear_division() {
        // (x1 - x2)(x1 + 3) / (x1 - x2) = x1 + 3
        let p = &(&x(1) - &x(2)) * &(&x(1) + &Poly::int(3));
        let q = p.div_by_monic_linear(Var::x(1), &-&x(2)).unwrap();
        assert_eq!(q, &x(1) + &Poly::int(3));
        assert!(p.div_by_monic_linear(Var::x(1), &Poly::int(1)).is_none());
    }

    #[test]
    fn derivative() {
        let p = &(&x(1) * &x(1)) * &x(2);
        assert_eq!(p.derivative(Var::x(1)), (&x(1) * &x(2)).scale(&gq_int(2)));
        assert!(p.derivative(Var::x(3)).is_zero());
    }
}
