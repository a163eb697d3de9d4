//! Nilpotent orbits of `sl_N`, `so_N` and `sp_N` indexed by partitions:
//! closed-form dimensions and explicit representatives whose centralizer
//! dimension is computed by exact linear algebra.

use crate::exactalg::rational_rank;
use crate::{Error, Result};

use super::{is_epsilon_partition, EpsilonKind, Partition};

/// The ambient Lie algebra of an orbit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrbitKind {
    /// `sl_N`.
    SlN,
    /// `so_N` for `+`, `sp_N` for `-`.
    Epsilon(EpsilonKind),
}

/// A nilpotent matrix and, in the orthogonal or symplectic case, the Gram
/// matrix `J` of the form it preserves: `Xᵀ J + J X = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilpotentRepresentative {
    /// The nilpotent element, acting on column vectors.
    pub x: Vec<Vec<i64>>,
    /// Gram matrix, symmetric for `+` and skew for `-`.
    pub form: Option<Vec<Vec<i64>>>,
}

fn check_kind(pi: &Partition, kind: OrbitKind) -> Result<()> {
    match kind {
        OrbitKind::Epsilon(eps) if !is_epsilon_partition(pi, eps) => Err(Error::Inconsistent(format!(
            "{} is not a {}-partition, so it labels no orbit",
            pi, eps
        ))),
        _ => Ok(()),
    }
}

/// Closed-form orbit dimension:
/// `N² - Σ (πᵗ_i)²` for `sl_N`,
/// `N(N-1)/2 - (Σ (πᵗ_i)² - #{odd parts})/2` for `so_N`,
/// `N(N+1)/2 - (Σ (πᵗ_i)² + #{odd parts})/2` for `sp_N`.
pub fn orbit_dimension(pi: &Partition, kind: OrbitKind) -> Result<i64> {
    check_kind(pi, kind)?;
    let n = pi.size();
    let sq: i64 = pi.transpose().parts().iter().map(|c| c * c).sum();
    let odd = pi.parts().iter().filter(|&&p| p % 2 == 1).count() as i64;
    Ok(match kind {
        OrbitKind::SlN => n * n - sq,
        OrbitKind::Epsilon(EpsilonKind::Plus) => n * (n - 1) / 2 - (sq - odd) / 2,
        OrbitKind::Epsilon(EpsilonKind::Minus) => n * (n + 1) / 2 - (sq + odd) / 2,
    })
}

fn zeros(n: usize) -> Vec<Vec<i64>> {
    vec![vec![0; n]; n]
}

fn identity(n: usize) -> Vec<Vec<i64>> {
    (0..n).map(|r| (0..n).map(|c| i64::from(r == c)).collect()).collect()
}

/// A representative of the orbit labelled by `pi`.
///
/// Each part of the unpaired parity is one Jordan block carrying the
/// anti-diagonal form `B(e_a, e_{k-1-a}) = (-1)^a`; each pair of equal parts of
/// the paired parity is a block `U ⊕ U*` with `X = (J_k, -J_kᵀ)` and the
/// hyperbolic form.
pub fn nilpotent_representative(pi: &Partition, kind: OrbitKind) -> Result<NilpotentRepresentative> {
    check_kind(pi, kind)?;
    let n = pi.size() as usize;
    let mut x = zeros(n);
    let mut j = zeros(n);
    let mut at = 0usize;
    let parts = pi.parts();
    let mut k = 0;
    while k < parts.len() {
        let p = parts[k] as usize;
        let paired = match kind {
            OrbitKind::SlN => false,
            OrbitKind::Epsilon(eps) => (p as i64) % 2 == eps.paired_parity(),
        };
        if !paired {
            for a in 0..p - 1 {
                x[at + a + 1][at + a] = 1;
            }
            for a in 0..p {
                j[at + a][at + p - 1 - a] = if a % 2 == 0 { 1 } else { -1 };
            }
            at += p;
            k += 1;
        } else {
            let sign = match kind {
                OrbitKind::Epsilon(EpsilonKind::Minus) => -1,
                _ => 1,
            };
            let (u, f) = (at, at + p);
            for a in 0..p - 1 {
                x[u + a + 1][u + a] = 1;
                x[f + a][f + a + 1] = -1;
            }
            for a in 0..p {
                j[u + a][f + a] = 1;
                j[f + a][u + a] = sign;
            }
            at += 2 * p;
            k += 2;
        }
    }
    let form = match kind {
        OrbitKind::SlN => None,
        OrbitKind::Epsilon(_) => Some(j),
    };
    Ok(NilpotentRepresentative { x, form })
}

fn matmul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    (0..n)
        .map(|r| (0..m).map(|c| (0..b.len()).map(|t| a[r][t] * b[t][c]).sum()).collect())
        .collect()
}

fn transpose(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let m = a.first().map_or(0, Vec::len);
    (0..m).map(|c| (0..n).map(|r| a[r][c]).collect()).collect()
}

impl NilpotentRepresentative {
    /// Whether `Xᵀ J + J X = 0` and `J` has the expected symmetry.
    pub fn preserves_form(&self, eps: EpsilonKind) -> bool {
        let Some(j) = &self.form else {
            return false;
        };
        let s = match eps {
            EpsilonKind::Plus => 1,
            EpsilonKind::Minus => -1,
        };
        let jt = transpose(j);
        let sym = j.iter().zip(&jt).all(|(a, b)| a.iter().zip(b).all(|(x, y)| *x == s * y));
        let lhs = matmul(&transpose(&self.x), j);
        let rhs = matmul(j, &self.x);
        let inv = lhs.iter().zip(&rhs).all(|(a, b)| a.iter().zip(b).all(|(x, y)| x + y == 0));
        sym && inv
    }
}

/// Jordan type of a nilpotent matrix from the ranks of its powers.
pub fn jordan_type(x: &[Vec<i64>]) -> Result<Partition> {
    let n = x.len();
    let mut ranks = vec![n];
    let mut power = identity(n);
    while *ranks.last().unwrap_or(&0) > 0 {
        if ranks.len() > n + 1 {
            return Err(Error::Inconsistent("matrix is not nilpotent".into()));
        }
        power = matmul(&power, x);
        ranks.push(rational_rank(&power));
    }
    // number of blocks of size >= k is rank(X^{k-1}) - rank(X^k)
    let at_least: Vec<i64> = ranks.windows(2).map(|w| (w[0] - w[1]) as i64).collect();
    let mut parts = Vec::new();
    for (k, pair) in at_least.iter().enumerate() {
        let next = at_least.get(k + 1).copied().unwrap_or(0);
        for _ in 0..pair - next {
            parts.push(k as i64 + 1);
        }
    }
    Partition::from_unsorted(parts)
}

/// Orbit dimension computed as the rank of `ad X` on the ambient Lie algebra
/// for an explicit representative `X`.
///
/// The orthogonal or symplectic algebra is spanned by `J⁻¹ E` with `E`
/// running over the skew (for `+`) or symmetric (for `-`) elementary matrices.
pub fn orbit_dimension_by_centralizer(pi: &Partition, kind: OrbitKind) -> Result<i64> {
    let rep = nilpotent_representative(pi, kind)?;
    let n = rep.x.len();
    let mut basis: Vec<Vec<Vec<i64>>> = Vec::new();
    match (&rep.form, kind) {
        (None, _) | (_, OrbitKind::SlN) => {
            for a in 0..n {
                for b in 0..n {
                    let mut e = zeros(n);
                    e[a][b] = 1;
                    basis.push(e);
                }
            }
        }
        (Some(j), OrbitKind::Epsilon(eps)) => {
            // J is a signed permutation matrix, so its inverse is its transpose
            let jinv = transpose(j);
            if matmul(&jinv, j) != identity(n) {
                return Err(Error::Inconsistent("form is not a signed permutation".into()));
            }
            let s = match eps {
                EpsilonKind::Plus => -1,
                EpsilonKind::Minus => 1,
            };
            for a in 0..n {
                for b in a..n {
                    if a == b && s == -1 {
                        continue;
                    }
                    let mut e = zeros(n);
                    e[a][b] = 1;
                    e[b][a] += s;
                    basis.push(matmul(&jinv, &e));
                }
            }
        }
    }
    // columns of the matrix of ad X, one per basis element
    let columns: Vec<Vec<i64>> = basis
        .iter()
        .map(|y| {
            let xy = matmul(&rep.x, y);
            let yx = matmul(y, &rep.x);
            xy.iter()
                .zip(&yx)
                .flat_map(|(a, b)| a.iter().zip(b).map(|(p, q)| p - q))
                .collect()
        })
        .collect();
    Ok(rational_rank(&columns) as i64)
}
