//! Shift homomorphisms on generator symbols, root-vector decompositions and
//! PBW graded dimensions.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use super::expr::{GenKind, Sym};
use crate::exactalg::{gq_i, gq_int, GQ};
use crate::rootdata::{is_even_spherical, positive_roots, Coweight, NodeClass, SatakeDiagram};
use crate::{Error, Result};

/// Index map `H_i^{(r)} ↦ H_i^{(r - a_i)}`, `B_i^{(s)} ↦ c_i B_i^{(s - b_i)}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShiftMap {
    /// `a_i = <ν + τν, α_i>`.
    pub h_shift: Vec<i64>,
    /// `b_i = <ν, α_i>`.
    pub b_shift: Vec<i64>,
}

impl ShiftMap {
    /// Image of one generator symbol.
    pub fn apply(&self, s: Sym) -> (GQ, Sym) {
        match s.kind {
            GenKind::H => (gq_int(1), Sym::h(s.node, s.sup - self.h_shift[s.node])),
            GenKind::B => {
                let b = self.b_shift[s.node];
                let c = if b.rem_euclid(2) == 1 { gq_i() } else { gq_int(1) };
                (c, Sym::b(s.node, s.sup - b))
            }
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ShiftMap) -> ShiftMap {
        ShiftMap {
            h_shift: self.h_shift.iter().zip(&other.h_shift).map(|(a, b)| a + b).collect(),
            b_shift: self.b_shift.iter().zip(&other.b_shift).map(|(a, b)| a + b).collect(),
        }
    }
}

/// The shift homomorphism `ⁱY_μ → ⁱY_{μ+ν+τν}` on generator symbols.
pub fn shift_homomorphism_map(mu: &Coweight, nu: &Coweight, d: &SatakeDiagram) -> Result<ShiftMap> {
    if !nu.is_antidominant() {
        return Err(Error::NotAntidominant(format!("{:?}", nu.0)));
    }
    if !is_even_spherical(mu, d) {
        return Err(Error::ParityViolation(format!("mu = {:?} is not even spherical", mu.0)));
    }
    let tnu = nu.tau(d);
    let sum: Vec<i64> = (0..d.rank()).map(|i| nu.pairing(i) + tnu.pairing(i)).collect();
    if !is_even_spherical(&Coweight(sum.clone()), d) {
        return Err(Error::ParityViolation(format!("nu + tau(nu) = {:?} is not even spherical", sum)));
    }
    Ok(ShiftMap {
        h_shift: sum,
        b_shift: nu.0.clone(),
    })
}

/// Lexicographically smallest simple-root sequence `(i_1, ..., i_k)` with
/// `β = Σ α_{i_j}` and every tail sum `α_{i_j} + ... + α_{i_k}` a root, so that
/// `[B_{i_1}, [B_{i_2}, ..., B_{i_k}]]` is a nonzero root vector.
pub fn root_vector_decomposition(cartan: &[Vec<i64>], beta: &[i64]) -> Result<Vec<usize>> {
    let roots = positive_roots(cartan);
    if !roots.iter().any(|r| r.as_slice() == beta) {
        return Err(Error::InvalidDecomposition(format!("{:?} is not a positive root", beta)));
    }
    let mut seq = Vec::new();
    let mut cur = beta.to_vec();
    while cur.iter().sum::<i64>() > 0 {
        let next = (0..cur.len()).find(|&i| {
            if cur[i] == 0 {
                return false;
            }
            let mut rest = cur.clone();
            rest[i] -= 1;
            rest.iter().all(|&x| x == 0) || roots.iter().any(|r| *r == rest)
        });
        let i = next.ok_or_else(|| Error::InvalidDecomposition(format!("no decomposition of {:?}", beta)))?;
        seq.push(i);
        cur[i] -= 1;
    }
    Ok(seq)
}

/// A PBW generator with its degree under the grading attached to `μ₁`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PbwGenerator {
    /// `b_β^{(s)}` or `h_i^{(r)}`, rendered with one-based nodes.
    pub label: String,
    /// Degree.
    pub degree: i64,
}

/// All PBW generators of degree at most `k`.
pub fn pbw_generators(mu: &Coweight, mu1: &Coweight, d: &SatakeDiagram, k: i64) -> Result<Vec<PbwGenerator>> {
    let n = d.rank();
    if n == 0 {
        return Err(Error::InvalidDecomposition("rank 0 diagram".into()));
    }
    let t1 = mu1.tau(d);
    if (0..n).any(|i| mu1.pairing(i) + t1.pairing(i) != mu.pairing(i)) {
        return Err(Error::InvalidDecomposition(format!(
            "mu1 = {:?} does not satisfy mu1 + tau(mu1) = mu = {:?}",
            mu1.0, mu.0
        )));
    }
    let mut out = Vec::new();
    for beta in positive_roots(d.cartan()) {
        let p = mu1.pair_root(&beta);
        if 1 + p <= 0 {
            return Err(Error::InvalidDecomposition(format!(
                "b_{:?}^(1) has non-positive degree {}",
                beta,
                1 + p
            )));
        }
        for s in 1..=k - p {
            out.push(PbwGenerator {
                label: format!("b{:?}({})", beta, s),
                degree: s + p,
            });
        }
    }
    for i in 0..n {
        let m = mu.pairing(i);
        match d.class(i) {
            NodeClass::Zero => {
                let mut r = 2 * (m.div_euclid(-2).max(0));
                while r <= -m {
                    r += 2;
                }
                while r + m <= k {
                    out.push(PbwGenerator {
                        label: format!("h{}({})", i + 1, r),
                        degree: r + m,
                    });
                    r += 2;
                }
            }
            NodeClass::One => {
                for r in -m + 1..=k - m {
                    out.push(PbwGenerator {
                        label: format!("h{}({})", i + 1, r),
                        degree: r + m,
                    });
                }
            }
            NodeClass::MinusOne => {}
        }
    }
    out.sort_by(|a, b| (a.degree, &a.label).cmp(&(b.degree, &b.label)));
    Ok(out)
}

/// Graded dimensions `[dim_0, ..., dim_k]` of the polynomial algebra on the PBW generators.
pub fn pbw_hilbert_series(mu: &Coweight, mu1: &Coweight, d: &SatakeDiagram, k: i64) -> Result<Vec<BigUint>> {
    let gens = pbw_generators(mu, mu1, d, k)?;
    let k = k.max(0) as usize;
    let mut series = vec![BigUint::zero(); k + 1];
    series[0] = BigUint::one();
    for g in gens {
        let deg = g.degree as usize;
        for n in deg..=k {
            let add = series[n - deg].clone();
            series[n] += add;
        }
    }
    Ok(series)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::DynkinKind;

    #[test]
    fn split_a1_small_series() {
        let d = SatakeDiagram::split(DynkinKind::A, 1).unwrap();
        let z = Coweight::zero(1);
        let s = pbw_hilbert_series(&z, &z, &d, 2).unwrap();
        let expect: Vec<BigUint> = vec![1u32, 1, 3].into_iter().map(BigUint::from).collect();
        assert_eq!(s, expect);
    }

    #[test]
    fn shift_examples() {
        let d = SatakeDiagram::split(DynkinKind::A, 1).unwrap();
        let z = Coweight::zero(1);
        let m = shift_homomorphism_map(&z, &Coweight(vec![-2]), &d).unwrap();
        assert_eq!(m.apply(Sym::h(0, 1)).1, Sym::h(0, 5));
        assert_eq!(m.apply(Sym::b(0, 1)).1, Sym::b(0, 3));
        let m = shift_homomorphism_map(&z, &Coweight(vec![-1]), &d).unwrap();
        assert_eq!(m.apply(Sym::b(0, 1)), (gq_i(), Sym::b(0, 2)));
        assert!(matches!(
            shift_homomorphism_map(&z, &Coweight(vec![1]), &d),
            Err(Error::NotAntidominant(_))
        ));
    }

    #[test]
    fn decomposition_tails_are_roots() {
        let d = SatakeDiagram::split(DynkinKind::D, 4).unwrap();
        let roots = positive_roots(d.cartan());
        for beta in &roots {
            let seq = root_vector_decomposition(d.cartan(), beta).unwrap();
            assert_eq!(seq.len() as i64, beta.iter().sum::<i64>());
            let mut tail = vec![0; 4];
            for &i in seq.iter().rev() {
                tail[i] += 1;
                assert!(roots.contains(&tail));
            }
        }
    }
}
