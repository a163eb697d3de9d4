//! Gaussian rationals `Q(i)`, the single coefficient field used everywhere.

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An exact element `re + im * i` with rational parts.
pub type GQ = Complex<BigRational>;

/// Embeds an integer.
pub fn gq_int(n: i64) -> GQ {
    Complex::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
}

/// Embeds the rational `n / d`.
pub fn gq_rat(n: i64, d: i64) -> GQ {
    Complex::new(
        BigRational::new(BigInt::from(n), BigInt::from(d)),
        BigRational::zero(),
    )
}

/// Embeds a big rational.
pub fn gq_from_rational(q: BigRational) -> GQ {
    Complex::new(q, BigRational::zero())
}

/// The imaginary unit.
pub fn gq_i() -> GQ {
    Complex::new(BigRational::zero(), BigRational::one())
}

/// Returns true when the value is exactly zero.
pub fn gq_is_zero(c: &GQ) -> bool {
    c.re.is_zero() && c.im.is_zero()
}

/// Returns true when the value is exactly one.
pub fn gq_is_one(c: &GQ) -> bool {
    c.re.is_one() && c.im.is_zero()
}

/// Returns `c^n` for a non-negative exponent.
pub fn gq_pow(c: &GQ, n: u32) -> GQ {
    let mut acc = gq_int(1);
    for _ in 0..n {
        acc = &acc * c;
    }
    acc
}

/// Renders `c` canonically, e.g. `3/2`, `-i`, `(1/2+3i)`.
///
/// The output is stable across runs and is used verbatim in reports.
pub fn gq_render(c: &GQ) -> String {
    let re = &c.re;
    let im = &c.im;
    if im.is_zero() {
        return render_rational(re);
    }
    let im_part = if im.is_one() {
        "i".to_string()
    } else if (-im).is_one() {
        "-i".to_string()
    } else {
        format!("{}i", render_rational(im))
    };
    if re.is_zero() {
        return im_part;
    }
    let sign = if im.is_negative() { "" } else { "+" };
    format!("({}{}{})", render_rational(re), sign, im_part)
}

fn render_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// True when the value is a real rational number.
pub fn gq_is_real(c: &GQ) -> bool {
    c.im.is_zero()
}

/// True when `c` has negative real part, or zero real part and negative imaginary part.
///
/// Used only to pick a deterministic sign when normalising.
pub fn gq_is_negative(c: &GQ) -> bool {
    c.re.is_negative() || (c.re.is_zero() && c.im.is_negative())
}

/// Total order on Gaussian rationals (real part first), used for canonical sorting.
pub fn gq_cmp(a: &GQ, b: &GQ) -> std::cmp::Ordering {
    a.re.cmp(&b.re).then_with(|| a.im.cmp(&b.im))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_basics() {
        let i = gq_i();
        assert_eq!(&i * &i, gq_int(-1));
        let half = gq_rat(1, 2);
        assert_eq!(&half + &half, gq_int(1));
        let z = Complex::new(gq_rat(1, 3).re, gq_rat(2, 5).re);
        let inv = gq_int(1) / z.clone();
        assert!(gq_is_one(&(&z * &inv)));
    }

    #[test]
    fn rendering() {
        assert_eq!(gq_render(&gq_rat(3, 2)), "3/2");
        assert_eq!(gq_render(&-gq_i()), "-i");
        assert_eq!(gq_render(&(gq_rat(1, 2) + gq_i() * gq_int(3))), "(1/2+3i)");
        assert_eq!(gq_render(&(gq_int(1) - gq_i())), "(1-i)");
    }
}
