//! Difference operators in the variables `w_{i,r}` and their commutative
//! Poisson degeneration.
//!
//! An element is a finite sum `Σ f_m(w, z) ∂^m` with all shift monomials to the
//! right of their coefficients. The shift `∂_{i,r}` acts by `w_{i,r} ↦ w_{i,r} + 1`
//! and fixes every other variable, including the central `z_{i,s}`.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use crate::exactalg::{gq_int, Monomial, RatFun, Ring, Var, VarKind, GQ};

/// A shift monomial `∏ ∂_v^{k_v}` stored as sorted `(variable, nonzero exponent)` pairs.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Shift(Vec<(Var, i32)>);

impl Shift {
    /// The empty monomial.
    pub fn one() -> Shift {
        Shift(Vec::new())
    }

    /// `∂_v^k`.
    pub fn single(v: Var, k: i32) -> Shift {
        if k == 0 {
            Shift::one()
        } else {
            Shift(vec![(v, k)])
        }
    }

    /// Builds a monomial from arbitrary pairs, merging repeats.
    pub fn from_pairs(pairs: &[(Var, i32)]) -> Shift {
        let mut m = BTreeMap::new();
        for &(v, k) in pairs {
            *m.entry(v).or_insert(0) += k;
        }
        Shift(m.into_iter().filter(|(_, k)| *k != 0).collect())
    }

    /// The `(variable, exponent)` pairs.
    pub fn pairs(&self) -> &[(Var, i32)] {
        &self.0
    }

    /// Exponent of `∂_v`.
    pub fn exponent(&self, v: Var) -> i32 {
        self.0.iter().find(|(w, _)| *w == v).map(|(_, k)| *k).unwrap_or(0)
    }

    /// Product of shift monomials.
    pub fn mul(&self, other: &Shift) -> Shift {
        let mut all = self.0.clone();
        all.extend_from_slice(&other.0);
        Shift::from_pairs(&all)
    }

    /// Inverse monomial.
    pub fn inv(&self) -> Shift {
        Shift(self.0.iter().map(|&(v, k)| (v, -k)).collect())
    }

    /// True for the empty monomial.
    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Applies the shift to a coefficient: `w_v ↦ w_v + k_v`.
    pub fn act(&self, f: &RatFun) -> RatFun {
        let mut g = f.clone();
        for &(v, k) in &self.0 {
            g = g.shift(v, &gq_int(k as i64));
        }
        g
    }

    fn render(&self) -> String {
        self.0
            .iter()
            .map(|(v, k)| {
                let name = format!("D[{},{}]", v.node(), v.index());
                if *k == 1 {
                    name
                } else {
                    format!("{}^{}", name, k)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// An element of the difference-operator algebra in Ore normal form.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct DiffOp {
    terms: BTreeMap<Shift, RatFun>,
}

impl DiffOp {
    /// The zero operator.
    pub fn zero() -> DiffOp {
        DiffOp::default()
    }

    /// The identity.
    pub fn one() -> DiffOp {
        DiffOp::coeff(RatFun::one())
    }

    /// A pure coefficient `f`.
    pub fn coeff(f: RatFun) -> DiffOp {
        DiffOp::term(f, Shift::one())
    }

    /// A scalar.
    pub fn scalar(c: GQ) -> DiffOp {
        DiffOp::coeff(RatFun::constant(c))
    }

    /// `f ∂^m`.
    pub fn term(f: RatFun, m: Shift) -> DiffOp {
        let mut d = DiffOp::zero();
        d.add_term(m, f);
        d
    }

    /// `∂_v^k`.
    pub fn shift(v: Var, k: i32) -> DiffOp {
        DiffOp::term(RatFun::one(), Shift::single(v, k))
    }

    /// Adds `f ∂^m` in place.
    pub fn add_term(&mut self, m: Shift, f: RatFun) {
        if f.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(g) => {
                let s = &*g + &f;
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *g = s;
                }
            }
            None => {
                self.terms.insert(m, f);
            }
        }
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Shift, &RatFun)> {
        self.terms.iter()
    }

    /// Number of shift monomials.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// True for the zero operator.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum.
    pub fn add(&self, other: &DiffOp) -> DiffOp {
        let mut out = self.clone();
        for (m, f) in &other.terms {
            out.add_term(m.clone(), f.clone());
        }
        out
    }

    /// Difference.
    pub fn sub(&self, other: &DiffOp) -> DiffOp {
        self.add(&other.neg())
    }

    /// Negation.
    pub fn neg(&self) -> DiffOp {
        self.scale(&gq_int(-1))
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &GQ) -> DiffOp {
        let mut out = DiffOp::zero();
        for (m, f) in &self.terms {
            out.add_term(m.clone(), f.scale(c));
        }
        out
    }

    /// Left multiplication by a coefficient.
    pub fn mul_coeff_left(&self, g: &RatFun) -> DiffOp {
        let mut out = DiffOp::zero();
        for (m, f) in &self.terms {
            out.add_term(m.clone(), g * f);
        }
        out
    }

    /// Product using `∂^a g = (∂^a . g) ∂^a`.
    pub fn mul(&self, other: &DiffOp) -> DiffOp {
        let mut out = DiffOp::zero();
        for (a, f) in &self.terms {
            for (b, g) in &other.terms {
                out.add_term(a.mul(b), f * &a.act(g));
            }
        }
        out
    }

    /// `[a, b] = ab - ba`.
    pub fn commutator(&self, other: &DiffOp) -> DiffOp {
        self.mul(other).sub(&other.mul(self))
    }

    /// `[a, b]_+ = ab + ba`.
    pub fn anticommutator(&self, other: &DiffOp) -> DiffOp {
        self.mul(other).add(&other.mul(self))
    }

    /// Applies `f ↦ φ(f)` to every coefficient.
    pub fn map_coeffs(&self, mut phi: impl FnMut(&RatFun) -> RatFun) -> DiffOp {
        let mut out = DiffOp::zero();
        for (m, f) in &self.terms {
            out.add_term(m.clone(), phi(f));
        }
        out
    }

    /// All coefficients, for pattern diagnostics.
    pub fn coefficients(&self) -> impl Iterator<Item = &RatFun> {
        self.terms.values()
    }

    /// Canonical rendering `f ∂^m + ...`.
    pub fn render(&self) -> String {
        render_terms(&self.terms)
    }
}

impl fmt::Display for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn render_terms(terms: &BTreeMap<Shift, RatFun>) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    terms
        .iter()
        .map(|(m, f)| {
            if m.is_one() {
                f.render()
            } else {
                format!("({})*{}", f.render(), m.render())
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// An element of the commutative Poisson algebra `gr 𝒜`.
///
/// The bracket is determined by `{∂_v^{±1}, w_v} = ±∂_v^{±1}` and Leibniz, so on
/// monomials `{f ∂^a, g ∂^b} = Σ_v (a_v f ∂_{w_v} g - b_v g ∂_{w_v} f) ∂^{a+b}`.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct GrA {
    terms: BTreeMap<Shift, RatFun>,
}

impl GrA {
    /// Zero.
    pub fn zero() -> GrA {
        GrA::default()
    }

    /// One.
    pub fn one() -> GrA {
        GrA::coeff(RatFun::one())
    }

    /// A pure coefficient.
    pub fn coeff(f: RatFun) -> GrA {
        GrA::term(f, Shift::one())
    }

    /// A scalar.
    pub fn scalar(c: GQ) -> GrA {
        GrA::coeff(RatFun::constant(c))
    }

    /// `f ∂^m`.
    pub fn term(f: RatFun, m: Shift) -> GrA {
        let mut g = GrA::zero();
        g.add_term(m, f);
        g
    }

    /// `∂_v^k`.
    pub fn shift(v: Var, k: i32) -> GrA {
        GrA::term(RatFun::one(), Shift::single(v, k))
    }

    /// Adds `f ∂^m` in place.
    pub fn add_term(&mut self, m: Shift, f: RatFun) {
        if f.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(g) => {
                let s = &*g + &f;
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *g = s;
                }
            }
            None => {
                self.terms.insert(m, f);
            }
        }
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Shift, &RatFun)> {
        self.terms.iter()
    }

    /// True for zero.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum.
    pub fn add(&self, other: &GrA) -> GrA {
        let mut out = self.clone();
        for (m, f) in &other.terms {
            out.add_term(m.clone(), f.clone());
        }
        out
    }

    /// Difference.
    pub fn sub(&self, other: &GrA) -> GrA {
        self.add(&other.neg())
    }

    /// Negation.
    pub fn neg(&self) -> GrA {
        self.scale(&gq_int(-1))
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &GQ) -> GrA {
        let mut out = GrA::zero();
        for (m, f) in &self.terms {
            out.add_term(m.clone(), f.scale(c));
        }
        out
    }

    /// Commutative product.
    pub fn mul(&self, other: &GrA) -> GrA {
        let mut out = GrA::zero();
        for (a, f) in &self.terms {
            for (b, g) in &other.terms {
                out.add_term(a.mul(b), f * g);
            }
        }
        out
    }

    /// Poisson bracket.
    pub fn bracket(&self, other: &GrA) -> GrA {
        let mut out = GrA::zero();
        for (a, f) in &self.terms {
            for (b, g) in &other.terms {
                let m = a.mul(b);
                let mut vars: Vec<Var> = a.pairs().iter().chain(b.pairs()).map(|(v, _)| *v).collect();
                vars.sort();
                vars.dedup();
                for v in vars {
                    let ka = a.exponent(v);
                    let kb = b.exponent(v);
                    if ka != 0 {
                        out.add_term(m.clone(), (f * &g.derivative(v)).scale(&gq_int(ka as i64)));
                    }
                    if kb != 0 {
                        out.add_term(m.clone(), (g * &f.derivative(v)).scale(&gq_int(-(kb as i64))));
                    }
                }
            }
        }
        out
    }

    /// Applies `f ↦ φ(f)` to every coefficient.
    pub fn map_coeffs(&self, mut phi: impl FnMut(&RatFun) -> RatFun) -> GrA {
        let mut out = GrA::zero();
        for (m, f) in &self.terms {
            out.add_term(m.clone(), phi(f));
        }
        out
    }

    /// All coefficients.
    pub fn coefficients(&self) -> impl Iterator<Item = &RatFun> {
        self.terms.values()
    }

    /// Canonical rendering.
    pub fn render(&self) -> String {
        render_terms(&self.terms)
    }
}

impl fmt::Display for GrA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

macro_rules! impl_ring {
    ($t:ty) => {
        impl Ring for $t {
            fn zero() -> Self {
                <$t>::zero()
            }
            fn one() -> Self {
                <$t>::one()
            }
            fn add(&self, o: &Self) -> Self {
                <$t>::add(self, o)
            }
            fn mul(&self, o: &Self) -> Self {
                <$t>::mul(self, o)
            }
            fn neg(&self) -> Self {
                <$t>::neg(self)
            }
            fn scale(&self, c: &GQ) -> Self {
                <$t>::scale(self, c)
            }
            fn is_zero(&self) -> bool {
                <$t>::is_zero(self)
            }
            fn render(&self) -> String {
                <$t>::render(self)
            }
        }
    };
}

impl_ring!(DiffOp);
impl_ring!(GrA);

/// Degree of a coefficient when `w` and `z` have degree one and `u` is absent.
///
/// Returns `None` when the numerator or a denominator factor is not homogeneous.
pub fn coefficient_degree(f: &RatFun) -> Option<i64> {
    if f.is_zero() {
        return None;
    }
    let num = f.numerator();
    let mut degs = num.terms().map(|(m, _)| m.degree());
    let d0 = degs.next()?;
    if degs.any(|d| d != d0) {
        return None;
    }
    let mut den = 0i64;
    for (form, e) in f.den_factors() {
        if form.poly().terms().any(|(m, _)| m.degree() != 1) {
            return None;
        }
        den += e as i64;
    }
    Some(d0 as i64 - den)
}

/// Outcome of a degree computation for a sum of monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Degree {
    /// The zero element, homogeneous of every degree.
    Zero,
    /// A homogeneous element of this degree.
    Homogeneous(i64),
    /// Not homogeneous; the top degree when defined.
    NotHomogeneous(Option<i64>),
}

/// Filtration degree of an element of `gr 𝒜` given `deg ∂_v` for each shift variable.
///
/// `shift_degree` returns the degree of `∂_v^{+1}`; `∂_v^{-1}` has the negated degree.
pub fn filtration_degree(x: &GrA, shift_degree: impl Fn(Var) -> i64) -> Degree {
    let mut seen: Vec<Option<i64>> = Vec::new();
    for (m, f) in x.terms() {
        let sd: i64 = m.pairs().iter().map(|&(v, k)| k as i64 * shift_degree(v)).sum();
        seen.push(coefficient_degree(f).map(|d| d + sd));
    }
    if seen.is_empty() {
        return Degree::Zero;
    }
    if seen.iter().all(|d| d.is_some() && *d == seen[0]) {
        return Degree::Homogeneous(seen[0].unwrap());
    }
    let top = if seen.iter().all(|d| d.is_some()) {
        seen.iter().map(|d| d.unwrap()).max()
    } else {
        None
    };
    Degree::NotHomogeneous(top)
}

/// Checks that every denominator factor not involving `u` has one of the shapes
/// `w_{i,r} ± w_{i,r'} + m` or `w_{i,r} + m/2` with `m` an integer.
pub fn localization_ok(f: &RatFun) -> bool {
    f.den_factors().all(|(form, _)| {
        let p = form.poly();
        let vars = p.vars();
        if vars.iter().any(|v| v.kind() == VarKind::U) {
            return true;
        }
        if vars.iter().any(|v| v.kind() != VarKind::W) {
            return false;
        }
        let constant = p.coeff(&Monomial::one());
        if !constant.im.is_zero() {
            return false;
        }
        let twice = &constant.re * BigRational::from_integer(2.into());
        match vars.len() {
            1 => twice.is_integer(),
            2 => {
                let (a, b) = (vars[0], vars[1]);
                let cb = p.coeff(&Monomial::var_pow(b, 1));
                a.node() == b.node()
                    && (cb == gq_int(1) || cb == gq_int(-1))
                    && constant.re.is_integer()
            }
            _ => false,
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{gq_rat, Poly};

    fn w() -> Var {
        Var::w(1, 1)
    }

    #[test]
    fn ore_rule() {
        let d = DiffOp::shift(w(), 1);
        let x = DiffOp::coeff(RatFun::var(w()));
        let lhs = d.mul(&x);
        let rhs = DiffOp::term(&RatFun::var(w()) + &RatFun::int(1), Shift::single(w(), 1));
        assert_eq!(lhs, rhs);
        assert_eq!(d.mul(&DiffOp::shift(w(), -1)), DiffOp::one());
        assert_eq!(d.commutator(&x), d);
    }

    #[test]
    fn two_step_shift() {
        let f = RatFun::from_poly(&Poly::var(w()) * &Poly::var(w()));
        let g = RatFun::from_parts(Poly::one(), &[(Poly::var(w()), 1)]).unwrap();
        let a = DiffOp::term(f.clone(), Shift::single(w(), 1));
        let b = DiffOp::term(g.clone(), Shift::single(w(), -1));
        let expected = DiffOp::coeff(&f * &g.shift(w(), &gq_int(1)));
        assert_eq!(a.mul(&b), expected);
    }

    #[test]
    fn poisson_basics() {
        let d = GrA::shift(w(), 1);
        let x = GrA::coeff(RatFun::var(w()));
        assert_eq!(d.bracket(&x), d);
        let x2 = x.mul(&x);
        assert_eq!(x2.bracket(&d), x.mul(&d).scale(&gq_int(-2)));
    }

    #[test]
    fn degree_and_pattern() {
        let w2 = Var::w(1, 2);
        let f = RatFun::from_parts(Poly::var(w()), &[(&Poly::var(w()) - &Poly::var(w2), 1)]).unwrap();
        assert_eq!(coefficient_degree(&f), Some(0));
        assert!(localization_ok(&f));
        let half = RatFun::from_parts(Poly::one(), &[(&Poly::var(w()) + &Poly::constant(gq_rat(1, 2)), 1)]).unwrap();
        assert!(localization_ok(&half));
        let third = RatFun::from_parts(Poly::one(), &[(&Poly::var(w()) + &Poly::constant(gq_rat(1, 3)), 1)]).unwrap();
        assert!(!localization_ok(&third));
        let cross = RatFun::from_parts(Poly::one(), &[(&Poly::var(w()) - &Poly::var(Var::w(2, 1)), 1)]).unwrap();
        assert!(!localization_ok(&cross));
        let g = GrA::term(RatFun::var(w()), Shift::single(w(), 1));
        assert_eq!(filtration_degree(&g, |_| 2), Degree::Homogeneous(3));
        assert_eq!(filtration_degree(&GrA::zero(), |_| 0), Degree::Zero);
    }
}
