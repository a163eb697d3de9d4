//! Exact coefficient arithmetic: Gaussian rationals, sparse polynomials,
//! rational functions with factored linear denominators, and truncated Laurent
//! series in `u^{-1}`.

pub mod gauss;
pub mod linalg;
pub mod poly;
pub mod ratfun;
pub mod series;

pub use gauss::{gq_i, gq_int, gq_rat, GQ};
pub use poly::{Monomial, Poly, Var, VarKind};
pub use ratfun::{LinForm, RatFun};
pub use linalg::{rational_inverse, rational_rank, rational_solve};
pub use series::{f_minus, lagrange_interpolate, series_at_infinity, series_at_infinity_in, Ring, TruncLaurentSeries};
