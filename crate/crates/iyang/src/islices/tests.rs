use super::*;

fn p(parts: &[i64]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn cw(v: &[i64]) -> Coweight {
    Coweight(v.to_vec())
}

#[test]
fn partition_validation() {
    assert!(Partition::new(vec![2, 3]).is_err());
    assert!(Partition::new(vec![2, 0]).is_err());
    assert_eq!(Partition::from_unsorted(vec![0, 1, 3, 0, 2]).unwrap(), p(&[3, 2, 1]));
    assert_eq!(p(&[4, 2, 2, 1]).transpose(), p(&[4, 3, 1, 1]));
    assert_eq!(p(&[9, 5, 2]).to_string(), "(9,5,2)");
}

#[test]
fn dominance_examples() {
    assert!(dominance(&p(&[2, 2]), &p(&[3, 1])));
    assert!(!dominance(&p(&[4]), &p(&[3, 1])));
    assert!(dominance(&p(&[3, 1]), &p(&[3, 1])));
    assert!(!dominance(&p(&[2, 2]), &p(&[3])));
}

#[test]
fn dictionary_examples() {
    let pair = coweights_to_partitions(4, &cw(&[4, 3, 2]), &cw(&[0, 0, 0])).unwrap();
    assert_eq!((pair.pi1.clone(), pair.total), (p(&[9, 5, 2]), 16));
    assert_eq!(pair.pi2, p(&[4, 4, 4, 4]));
    let (lam, mu) = partitions_to_coweights(&pair.pi1, &pair.pi2, 4).unwrap();
    assert_eq!((lam.0, mu.0), (vec![4, 3, 2], vec![0, 0, 0]));
    for w in 0..=8i64 {
        for v in 0..=w / 2 {
            let pair = coweights_to_partitions(2, &cw(&[w]), &cw(&[w - 2 * v])).unwrap();
            assert_eq!(pair.pi1, Partition::from_unsorted(vec![w]).unwrap());
            assert_eq!(pair.pi2, Partition::from_unsorted(vec![w - v, v]).unwrap());
        }
    }
    let n = 5;
    let pair = coweights_to_partitions(n, &cw(&[5, 0, 0, 0]), &cw(&[0, 0, 0, 0])).unwrap();
    assert_eq!((pair.pi1, pair.pi2), (p(&[5]), p(&[1, 1, 1, 1, 1])));
    let (lam, mu) = partitions_to_coweights(&p(&[3, 2]), &p(&[3, 2]), 3).unwrap();
    assert_eq!(lam, mu);
}

#[test]
fn dictionary_errors() {
    assert!(matches!(
        partitions_to_coweights(&p(&[1, 1, 1]), &p(&[1, 1, 1]), 3),
        Err(Error::LengthViolation(_))
    ));
    assert!(matches!(
        partitions_to_coweights(&p(&[2, 2]), &p(&[3, 1]), 3),
        Err(Error::NotDominated(_))
    ));
    assert!(coweights_to_partitions(3, &cw(&[1, 0]), &cw(&[0, 0])).is_err());
}

#[test]
fn epsilon_examples() {
    assert_eq!(epsilon_of(&p(&[3, 3, 1])).unwrap(), EpsilonKind::Plus);
    assert_eq!(epsilon_of(&p(&[4, 2, 2])).unwrap(), EpsilonKind::Minus);
    assert!(matches!(epsilon_of(&p(&[3, 2])), Err(Error::MixedParity(_))));
    assert!(is_epsilon_partition(&p(&[2, 2, 1]), EpsilonKind::Plus));
    assert!(!is_epsilon_partition(&p(&[3, 1]), EpsilonKind::Minus));
    assert!(is_epsilon_partition(&p(&[1, 1, 1, 1, 1]), EpsilonKind::Plus));
    assert!(is_very_even(&p(&[4, 4, 2, 2])));
    assert!(!is_very_even(&p(&[3, 3, 1, 1])));
}

#[test]
fn enumeration_examples() {
    let minus4 = enumerate_epsilon_partitions(4, EpsilonKind::Minus, None, false);
    assert_eq!(minus4, vec![p(&[4]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]);
    assert_eq!(enumerate_epsilon_partitions(1, EpsilonKind::Plus, None, false), vec![p(&[1])]);
    assert_eq!(enumerate_epsilon_partitions(2, EpsilonKind::Minus, None, true), vec![p(&[2])]);
    let counts: Vec<usize> = (0..=10).map(|n| enumerate_partitions(n).len()).collect();
    assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
}

#[test]
fn collapse_examples() {
    assert_eq!(epsilon_collapse(&p(&[3, 1]), EpsilonKind::Minus).unwrap(), p(&[2, 2]));
    assert_eq!(epsilon_collapse(&p(&[2, 2, 1]), EpsilonKind::Plus).unwrap(), p(&[2, 2, 1]));
    assert_eq!(epsilon_collapse(&p(&[4, 2]), EpsilonKind::Plus).unwrap(), p(&[3, 3]));
    assert!(matches!(
        epsilon_collapse(&p(&[2, 1]), EpsilonKind::Minus),
        Err(Error::NoEpsilonPartitionBelow(_))
    ));
}

#[test]
fn collapse_exhaustive_against_iterative_rule() {
    for n in 0..=12 {
        for pi in enumerate_partitions(n) {
            for eps in [EpsilonKind::Plus, EpsilonKind::Minus] {
                let brute = epsilon_collapse(&pi, eps);
                let fast = epsilon_collapse_fast(&pi, eps);
                match (brute, fast) {
                    (Ok(a), Ok(b)) => {
                        assert_eq!(a, b, "{} {}", pi, eps);
                        assert!(is_epsilon_partition(&a, eps) && a.dominated_by(&pi));
                        assert_eq!(epsilon_collapse(&a, eps).unwrap(), a);
                    }
                    (Err(_), Err(_)) => assert!(eps == EpsilonKind::Minus && n % 2 == 1),
                    (a, b) => panic!("{} {}: {:?} vs {:?}", pi, eps, a, b),
                }
            }
        }
    }
}

#[test]
fn orbit_formula_matches_centralizer_rank() {
    for n in 0..=8 {
        for pi in enumerate_partitions(n) {
            if n <= 6 {
                let rep = nilpotent_representative(&pi, OrbitKind::SlN).unwrap();
                assert_eq!(jordan_type(&rep.x).unwrap(), pi);
                assert_eq!(
                    orbit_dimension(&pi, OrbitKind::SlN).unwrap(),
                    orbit_dimension_by_centralizer(&pi, OrbitKind::SlN).unwrap()
                );
            }
            for eps in [EpsilonKind::Plus, EpsilonKind::Minus] {
                let kind = OrbitKind::Epsilon(eps);
                if !is_epsilon_partition(&pi, eps) {
                    assert!(nilpotent_representative(&pi, kind).is_err());
                    continue;
                }
                let rep = nilpotent_representative(&pi, kind).unwrap();
                assert!(rep.preserves_form(eps), "{} {}", pi, eps);
                assert_eq!(jordan_type(&rep.x).unwrap(), pi);
                assert_eq!(
                    orbit_dimension(&pi, kind).unwrap(),
                    orbit_dimension_by_centralizer(&pi, kind).unwrap(),
                    "{} {}",
                    pi,
                    eps
                );
            }
        }
    }
}

#[test]
fn nilpotent_cone_dimensions() {
    for n in 2..=6i64 {
        let regular = epsilon_collapse(&p(&[2 * n]), EpsilonKind::Plus).unwrap();
        assert_eq!(orbit_dimension(&regular, OrbitKind::Epsilon(EpsilonKind::Plus)).unwrap(), 2 * n * n - 2 * n);
        let odd = p(&[2 * n + 1]);
        assert_eq!(orbit_dimension(&odd, OrbitKind::Epsilon(EpsilonKind::Plus)).unwrap(), 2 * n * n);
    }
}

#[test]
fn islice_examples() {
    let r = islice_orbit_data(2, &cw(&[2]), &cw(&[0])).unwrap();
    assert_eq!((r.eps, r.pi1.clone(), r.pi2.clone()), (EpsilonKind::Plus, p(&[2]), p(&[1, 1])));
    assert!(!r.nonempty_open_stratum);
    assert_eq!(r.collapse, p(&[1, 1]));
    assert_eq!(r.lam_collapse, vec![0]);
    assert_eq!((r.dim, r.orbit_dim), (0, 0));
    for n in 2..=5usize {
        let mut lam = vec![0; 2 * n - 1];
        lam[0] = 2 * n as i64;
        let r = islice_orbit_data(2 * n, &cw(&lam), &cw(&vec![0; 2 * n - 1])).unwrap();
        assert_eq!((r.pi1.clone(), r.eps), (p(&[2 * n as i64]), EpsilonKind::Plus));
        assert_eq!(r.pi2, p(&vec![1; 2 * n]));
        assert_eq!(r.dim, r.orbit_dim);
    }
    let r = islice_orbit_data(3, &cw(&[2, 0]), &cw(&[2, 0])).unwrap();
    assert!(r.nonempty_open_stratum);
    assert_eq!((r.dim, r.pi1.clone()), (0, r.pi2.clone()));
    assert!(matches!(
        islice_orbit_data(3, &cw(&[2, 1]), &cw(&[1, 0])),
        Err(Error::MixedParity(_))
    ));
}

fn dominant_pairs(n: usize, max_total: i64) -> Vec<(Coweight, Coweight)> {
    let mut out = Vec::new();
    for pi1 in (0..=max_total).flat_map(enumerate_partitions) {
        if pi1.len() + 1 > n {
            continue;
        }
        for pi2 in enumerate_partitions(pi1.size()) {
            if pi2.len() <= n && pi2.dominated_by(&pi1) {
                out.push(partitions_to_coweights(&pi1, &pi2, n).unwrap());
            }
        }
    }
    out
}

#[test]
fn pgl2_dimension_matches_orbits() {
    for w in 0..=8i64 {
        for v in 0..=w / 2 {
            if w % 2 == 1 {
                continue;
            }
            let r = islice_orbit_data(2, &cw(&[w]), &cw(&[w - 2 * v])).unwrap();
            assert_eq!(r.dim, r.orbit_dim, "w={} v={}", w, v);
        }
    }
}

#[test]
fn dimension_matches_orbits_when_chart_exists() {
    for n in 2..=4 {
        for (lam, mu) in dominant_pairs(n, 10) {
            if !mu.is_even() {
                continue;
            }
            let r = islice_orbit_data(n, &lam, &mu).unwrap();
            if r.parity_condition {
                assert_eq!(r.dim, r.orbit_dim, "n={} {:?} {:?}", n, lam.0, mu.0);
            }
        }
    }
}

#[test]
fn strata_partitions_are_order_isomorphic() {
    // ν <= ν' iff n C⁻¹ (ν' - ν) is a non-negative multiple of n, with
    // (n C⁻¹)_{ij} = min(i, j) (n - max(i, j)) for A_{n-1}
    let leq = |n: usize, a: &[i64], b: &[i64]| {
        (1..n).all(|i| {
            let t: i64 = (1..n)
                .map(|j| (i.min(j) * (n - i.max(j))) as i64 * (b[j - 1] - a[j - 1]))
                .sum();
            t >= 0 && t % n as i64 == 0
        })
    };
    for n in 2..=4 {
        for (lam, mu) in dominant_pairs(n, 12) {
            let s = strata_partitions(n, &lam, &mu).unwrap();
            for a in &s {
                for b in &s {
                    let le = leq(n, &a.nu, &b.nu);
                    assert_eq!(le, a.partition.dominated_by(&b.partition), "{:?} {:?}", a.nu, b.nu);
                }
            }
        }
    }
}
