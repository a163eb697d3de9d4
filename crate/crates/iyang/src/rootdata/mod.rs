//! Root data, Satake diagrams, coweight predicates and the integer data
//! attached to a pair of coweights `lambda >= mu`.

mod diagram;

pub use diagram::{cartan_matrix, positive_roots, DynkinKind, NodeClass, SatakeDiagram, Sign};

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::linalg::rational_solve;

/// A coweight stored by its pairings `m_i = <mu, alpha_i>`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Coweight(pub Vec<i64>);

impl Coweight {
    /// The zero coweight of the given rank.
    pub fn zero(rank: usize) -> Coweight {
        Coweight(vec![0; rank])
    }

    /// Pairing with `alpha_i`.
    pub fn pairing(&self, i: usize) -> i64 {
        self.0[i]
    }

    /// All pairings non-negative.
    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&m| m >= 0)
    }

    /// All pairings non-positive.
    pub fn is_antidominant(&self) -> bool {
        self.0.iter().all(|&m| m <= 0)
    }

    /// All pairings even.
    pub fn is_even(&self) -> bool {
        self.0.iter().all(|m| m % 2 == 0)
    }

    /// `tau(mu)` as a pairing vector.
    pub fn tau(&self, d: &SatakeDiagram) -> Coweight {
        Coweight((0..self.0.len()).map(|i| self.0[d.tau(i)]).collect())
    }

    /// `tau(mu) = mu`.
    pub fn is_tau_invariant(&self, d: &SatakeDiagram) -> bool {
        (0..self.0.len()).all(|i| self.0[i] == self.0[d.tau(i)])
    }

    /// Pairing with a root given in simple-root coordinates.
    pub fn pair_root(&self, beta: &[i64]) -> i64 {
        self.0.iter().zip(beta).map(|(a, b)| a * b).sum()
    }

    /// `self - sum_i n_i alpha_i^vee`.
    pub fn minus_coroots(&self, d: &SatakeDiagram, n: &[i64]) -> Coweight {
        Coweight(
            (0..self.0.len())
                .map(|k| self.0[k] - (0..n.len()).map(|i| n[i] * d.c(i, k)).sum::<i64>())
                .collect(),
        )
    }
}

/// Even and `tau`-invariant, which for adjoint groups is the same as even spherical.
pub fn is_even_spherical(mu: &Coweight, d: &SatakeDiagram) -> bool {
    mu.is_even() && mu.is_tau_invariant(d)
}

/// Solves `lambda - mu = sum v_i alpha_i^vee` and requires `v` in `N^I`.
pub fn coroot_coordinates(lam: &Coweight, mu: &Coweight, d: &SatakeDiagram) -> Result<Vec<i64>> {
    let rhs: Vec<i64> = lam.0.iter().zip(&mu.0).map(|(a, b)| a - b).collect();
    let sol = rational_solve(d.cartan(), &rhs)
        .ok_or_else(|| Error::NotDominated("singular Cartan matrix".into()))?;
    sol.iter()
        .map(|q| {
            if !q.is_integer() || q.is_negative() {
                Err(Error::NotDominated(format!(
                    "coroot coordinate {} of lambda - mu is not a non-negative integer",
                    q
                )))
            } else {
                Ok(q.to_integer().to_i64().expect("coroot coordinate fits in i64"))
            }
        })
        .collect()
}

/// The integer data `v, 𝔳, θ, ϑ, 𝐰, 𝔴, ς, ζ, ℘` attached to `(lambda, mu)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GKLOIntegers {
    /// Coroot coordinates of `lambda - mu`.
    pub v: Vec<i64>,
    /// `𝔳_i`: `v_i` off `I_0`, `floor(v_i / 2)` on `I_0`.
    pub frak_v: Vec<i64>,
    /// `θ_i`: parity of `v_i` on `I_0`, zero elsewhere.
    pub theta: Vec<i64>,
    /// `ϑ_i`: on `I_0` the maximum of `θ_j` over `j` with `c_ij != 0`.
    pub vartheta: Vec<i64>,
    /// `𝐰_i = <lambda, alpha_i>`.
    pub w_cap: Vec<i64>,
    /// `𝔴_i`: `𝐰_i` off `I_0`, `floor(𝐰_i / 2)` on `I_0`.
    pub frak_w: Vec<i64>,
    /// `ς_i`: parity of `𝐰_i` on `I_0`, zero elsewhere.
    pub varsigma: Vec<i64>,
    /// `ζ_i` on `I_1 ∪ I_{-1}` (zero on `I_0`), with `ζ_i + ζ_{τi} = 𝔳_i`.
    pub zeta: Vec<i64>,
    /// `℘_i` in `{-1, 0, 1}`.
    pub wp: Vec<i64>,
}

impl GKLOIntegers {
    /// Degree of the chosen factor `Z_i` for `i` in `I_1 ∪ I_{-1}`.
    ///
    /// `I_1` takes `ceil(𝔴_i / 2)` and `I_{-1}` the remaining `𝔴_i - ceil(𝔴_i / 2)`.
    pub fn deg_z(&self, d: &SatakeDiagram, i: usize) -> i64 {
        let fw = self.frak_w[i];
        match d.class(i) {
            NodeClass::One => (fw + 1) / 2,
            NodeClass::MinusOne => fw - (fw + 1) / 2,
            NodeClass::Zero => fw,
        }
    }
}

/// Computes the integer data. `zeta_choice` lists `(node, ζ)` overrides for nodes outside `I_0`.
pub fn gklo_integers(
    lam: &Coweight,
    mu: &Coweight,
    d: &SatakeDiagram,
    zeta_choice: Option<&[(usize, i64)]>,
) -> Result<GKLOIntegers> {
    let n = d.rank();
    let v = coroot_coordinates(lam, mu, d)?;
    let fixed = |i: usize| d.tau(i) == i;
    let frak_v: Vec<i64> = (0..n).map(|i| if fixed(i) { v[i] / 2 } else { v[i] }).collect();
    let theta: Vec<i64> = (0..n).map(|i| if fixed(i) { v[i] % 2 } else { 0 }).collect();
    let vartheta: Vec<i64> = (0..n)
        .map(|i| {
            if fixed(i) {
                (0..n).filter(|&j| d.c(i, j) != 0).map(|j| theta[j]).max().unwrap_or(0)
            } else {
                theta[i]
            }
        })
        .collect();
    let w_cap = lam.0.clone();
    let frak_w: Vec<i64> = (0..n).map(|i| if fixed(i) { w_cap[i] / 2 } else { w_cap[i] }).collect();
    let varsigma: Vec<i64> = (0..n).map(|i| if fixed(i) { w_cap[i] % 2 } else { 0 }).collect();
    let wp: Vec<i64> = (0..n)
        .map(|i| {
            let t = d.tau(i);
            if d.c(i, t) != -1 {
                0
            } else if d.arrow(t, i) {
                1
            } else {
                -1
            }
        })
        .collect();
    let mut zeta = vec![0i64; n];
    for i in d.nodes_of(NodeClass::One) {
        let fv = frak_v[i];
        zeta[i] = if fv == 0 { 0 } else { ((fv + 1) / 2).clamp(1, fv) };
    }
    if let Some(choice) = zeta_choice {
        let mut seen = std::collections::BTreeMap::new();
        for &(node, z) in choice {
            if node >= n || fixed(node) {
                return Err(Error::InvalidZeta(format!("node {} is not in I_1 ∪ I_-1", node + 1)));
            }
            let (rep, val) = if d.class(node) == NodeClass::One {
                (node, z)
            } else {
                (d.tau(node), frak_v[node] - z)
            };
            if let Some(prev) = seen.insert(rep, val) {
                if prev != val {
                    return Err(Error::InvalidZeta(format!(
                        "zeta values at nodes {} and {} are not complementary",
                        rep + 1,
                        d.tau(rep) + 1
                    )));
                }
            }
            let fv = frak_v[rep];
            let ok = if fv == 0 { val == 0 } else { (1..=fv).contains(&val) };
            if !ok {
                return Err(Error::InvalidZeta(format!(
                    "zeta = {} at node {} outside [1, {}]",
                    val,
                    rep + 1,
                    fv
                )));
            }
            zeta[rep] = val;
        }
    }
    for i in d.nodes_of(NodeClass::One) {
        zeta[d.tau(i)] = frak_v[i] - zeta[i];
    }
    Ok(GKLOIntegers {
        v,
        frak_v,
        theta,
        vartheta,
        w_cap,
        frak_w,
        varsigma,
        zeta,
        wp,
    })
}

/// `c_ij θ_i θ_j = 0` for all `i != j`.
pub fn parity_condition(g: &GKLOIntegers, d: &SatakeDiagram) -> bool {
    let n = d.rank();
    (0..n).all(|i| (0..n).all(|j| i == j || d.c(i, j) * g.theta[i] * g.theta[j] == 0))
}

/// The coweight `mu_1` with `mu = mu_1 + tau(mu_1)` used for the filtration.
///
/// On `I_0` the value is `𝔴_i - 2𝔳_i + Σ_{j ↔ i, j ∈ ⁱI} 𝔳_j + (ς_i - 2θ_i + Σ_{j ↔ i, j ∈ I_0} θ_j) / 2`,
/// which equals `m_i / 2`. On `I_{±1}` it is `deg Z_i - v_i + Σ_{j -> i} v_j`
/// with the sum over orientation arrows.
pub fn filtration_coweight(lam: &Coweight, mu: &Coweight, d: &SatakeDiagram) -> Result<Coweight> {
    let g = gklo_integers(lam, mu, d, None)?;
    filtration_coweight_from(&g, mu, d)
}

/// [`filtration_coweight`] from precomputed integer data.
pub fn filtration_coweight_from(g: &GKLOIntegers, mu: &Coweight, d: &SatakeDiagram) -> Result<Coweight> {
    let n = d.rank();
    let mut out = vec![0i64; n];
    for i in 0..n {
        let nb = d.neighbours(i);
        out[i] = match d.class(i) {
            NodeClass::Zero => {
                let sum_v: i64 = nb
                    .iter()
                    .filter(|&&j| d.class(j) != NodeClass::MinusOne)
                    .map(|&j| g.frak_v[j])
                    .sum();
                let sum_theta: i64 = nb
                    .iter()
                    .filter(|&&j| d.class(j) == NodeClass::Zero)
                    .map(|&j| g.theta[j])
                    .sum();
                let twice = 2 * (g.frak_w[i] - 2 * g.frak_v[i] + sum_v) + g.varsigma[i] - 2 * g.theta[i] + sum_theta;
                if twice.is_odd() {
                    return Err(Error::NonIntegral(format!("mu_1 at node {} is {}/2", i + 1, twice)));
                }
                twice / 2
            }
            _ => {
                let into: i64 = d.into_node(i).iter().map(|&j| g.v[j]).sum();
                g.deg_z(d, i) - g.v[i] + into
            }
        };
    }
    for i in 0..n {
        let t = d.tau(i);
        if out[i] + out[t] != mu.0[i] {
            return Err(Error::NonIntegral(format!(
                "mu_1 + tau(mu_1) differs from mu at node {}",
                i + 1
            )));
        }
    }
    Ok(Coweight(out))
}

/// Dominant `tau`-invariant `nu` with `mu <= nu <= lambda`, ordered by `Σ n_i` where `nu = lambda - Σ n_i alpha_i^vee`.
pub fn strata(lam: &Coweight, mu: &Coweight, d: &SatakeDiagram) -> Result<Vec<Coweight>> {
    let v = coroot_coordinates(lam, mu, d)?;
    let n = d.rank();
    let mut out: Vec<(i64, Vec<i64>, Coweight)> = Vec::new();
    let mut idx = vec![0i64; n];
    loop {
        let nu = lam.minus_coroots(d, &idx);
        if nu.is_dominant() && nu.is_tau_invariant(d) {
            out.push((idx.iter().sum(), idx.clone(), nu));
        }
        let mut k = 0;
        loop {
            if k == n {
                out.sort();
                return Ok(out.into_iter().map(|(_, _, nu)| nu).collect());
            }
            if idx[k] < v[k] {
                idx[k] += 1;
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn split(n: usize) -> SatakeDiagram {
        SatakeDiagram::split(DynkinKind::A, n).unwrap()
    }

    fn aiii3() -> SatakeDiagram {
        SatakeDiagram::new(DynkinKind::A, 3, &[2, 1, 0], None, None).unwrap()
    }

    #[test]
    fn even_spherical_examples() {
        assert!(is_even_spherical(&Coweight(vec![0, 0]), &split(2)));
        assert!(!is_even_spherical(&Coweight(vec![1, 1]), &split(2)));
        assert!(!is_even_spherical(&Coweight(vec![2, 0, 4]), &aiii3()));
        assert!(is_even_spherical(&Coweight(vec![2, 0, 2]), &aiii3()));
    }

    #[test]
    fn coroot_examples() {
        let d1 = split(1);
        assert_eq!(coroot_coordinates(&Coweight(vec![2]), &Coweight(vec![0]), &d1).unwrap(), vec![1]);
        let d2 = split(2);
        assert_eq!(
            coroot_coordinates(&Coweight(vec![1, 1]), &Coweight(vec![-1, -1]), &d2).unwrap(),
            vec![2, 2]
        );
        assert!(coroot_coordinates(&Coweight(vec![1, 0]), &Coweight(vec![0, 0]), &d2).is_err());
        assert!(coroot_coordinates(&Coweight(vec![0]), &Coweight(vec![2]), &d1).is_err());
    }

    #[test]
    fn split_a1_integers() {
        let g = gklo_integers(&Coweight(vec![2]), &Coweight(vec![0]), &split(1), None).unwrap();
        assert_eq!(g.frak_v, vec![0]);
        assert_eq!(g.theta, vec![1]);
        assert_eq!(g.vartheta, vec![1]);
        assert_eq!(g.frak_w, vec![1]);
        assert_eq!(g.varsigma, vec![0]);
        assert_eq!(g.wp, vec![0]);
        let mu1 = filtration_coweight(&Coweight(vec![2]), &Coweight(vec![0]), &split(1)).unwrap();
        assert_eq!(mu1, Coweight(vec![0]));
    }

    #[test]
    fn parity_examples() {
        let d = split(2);
        let lam = Coweight(vec![1, 1]);
        let g = gklo_integers(&lam, &lam.minus_coroots(&d, &[1, 1]), &d, None).unwrap();
        assert!(!parity_condition(&g, &d));
        let g = gklo_integers(&lam, &lam.minus_coroots(&d, &[1, 2]), &d, None).unwrap();
        assert!(parity_condition(&g, &d));
    }

    #[test]
    fn wp_on_aiii2() {
        let d = SatakeDiagram::new(DynkinKind::A, 2, &[1, 0], Some(&[(0, 1)]), None).unwrap();
        let g = gklo_integers(&Coweight(vec![1, 1]), &Coweight(vec![0, 0]), &d, None).unwrap();
        assert_eq!(g.wp, vec![-1, 1]);
        let aiii3 = aiii3();
        let g = gklo_integers(&Coweight(vec![1, 0, 1]), &Coweight(vec![0, 0, 0]), &aiii3, None).unwrap();
        assert_eq!(g.wp, vec![0, 0, 0]);
    }

    #[test]
    fn zeta_validation() {
        let d = aiii3();
        let lam = Coweight(vec![2, 0, 2]);
        let mu = lam.minus_coroots(&d, &[2, 2, 2]);
        let g = gklo_integers(&lam, &mu, &d, None).unwrap();
        assert_eq!(g.frak_v, vec![2, 1, 2]);
        assert_eq!(g.zeta, vec![1, 0, 1]);
        let g = gklo_integers(&lam, &mu, &d, Some(&[(0, 2)])).unwrap();
        assert_eq!(g.zeta, vec![2, 0, 0]);
        assert!(gklo_integers(&lam, &mu, &d, Some(&[(0, 3)])).is_err());
        assert!(gklo_integers(&lam, &mu, &d, Some(&[(0, 2), (2, 1)])).is_err());
        assert!(gklo_integers(&lam, &mu, &d, Some(&[(1, 1)])).is_err());
    }

    #[test]
    fn strata_examples() {
        let d = split(1);
        let s = strata(&Coweight(vec![4]), &Coweight(vec![0]), &d).unwrap();
        assert_eq!(s, vec![Coweight(vec![4]), Coweight(vec![2]), Coweight(vec![0])]);
        let lam = Coweight(vec![3]);
        assert_eq!(strata(&lam, &lam, &d).unwrap(), vec![lam.clone()]);
        let d3 = aiii3();
        let lam = Coweight(vec![1, 0, 1]);
        let s = strata(&lam, &Coweight(vec![0, 0, 0]), &d3).unwrap();
        assert_eq!(s, vec![lam, Coweight(vec![0, 0, 0])]);
    }

    #[test]
    fn mu1_aiii3_orientations() {
        let d = aiii3();
        let lam = Coweight(vec![2, 0, 2]);
        let mu = lam.minus_coroots(&d, &[2, 2, 2]);
        for arrows in d.valid_orientations() {
            let a: Vec<_> = arrows.into_iter().collect();
            let dd = d.with_orientation(&a).unwrap();
            let mu1 = filtration_coweight(&lam, &mu, &dd).unwrap();
            assert_eq!(mu1.0[0] + mu1.0[2], mu.0[0]);
        }
    }
}
