use proptest::prelude::*;

use iyang::islices::{
    coweights_to_partitions, epsilon_collapse, epsilon_collapse_fast, is_epsilon_partition, jordan_type,
    nilpotent_representative, orbit_dimension, orbit_dimension_by_centralizer, partitions_to_coweights,
    EpsilonKind, OrbitKind, Partition,
};
use iyang::rootdata::{gklo_integers, Coweight, DynkinKind, SatakeDiagram};

fn partition(max_part: i64, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(|v| Partition::from_unsorted(v).unwrap())
}

fn epsilon() -> impl Strategy<Value = EpsilonKind> {
    prop_oneof![Just(EpsilonKind::Plus), Just(EpsilonKind::Minus)]
}

/// Applies each move of one box from a higher row to a lower one when the result stays a partition.
fn lower(pi: &Partition, moves: &[(usize, usize)]) -> Partition {
    let mut parts = pi.parts().to_vec();
    parts.push(0);
    for &(a, b) in moves {
        let n = parts.len();
        let (i, j) = (a % n, b % n);
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        if i != j && parts[i] - 1 >= parts[j] + 1 {
            parts[i] -= 1;
            parts[j] += 1;
            parts.sort_unstable_by(|x, y| y.cmp(x));
        }
    }
    Partition::from_unsorted(parts.into_iter().filter(|&p| p > 0).collect()).unwrap()
}

proptest! {
    #[test]
    fn transpose_is_an_involution(pi in partition(8, 8)) {
        let t = pi.transpose();
        prop_assert_eq!(t.size(), pi.size());
        prop_assert_eq!(t.len() as i64, if pi.is_empty() { 0 } else { pi.part(0) });
        prop_assert_eq!(t.transpose(), pi);
    }

    #[test]
    fn transpose_reverses_dominance(pi in partition(6, 6), moves in prop::collection::vec((0usize..8, 0usize..8), 0..6)) {
        let low = lower(&pi, &moves);
        prop_assert!(low.dominated_by(&pi));
        prop_assert!(pi.transpose().dominated_by(&low.transpose()));
        prop_assert!(pi.dominated_by(&pi));
        if pi.dominated_by(&low) {
            prop_assert_eq!(low, pi);
        }
    }

    #[test]
    fn collapse_is_maximal_and_idempotent(pi in partition(5, 5), eps in epsilon()) {
        prop_assume!(eps == EpsilonKind::Plus || pi.size() % 2 == 0);
        let c = epsilon_collapse(&pi, eps).unwrap();
        prop_assert!(is_epsilon_partition(&c, eps));
        prop_assert!(c.dominated_by(&pi));
        prop_assert_eq!(epsilon_collapse(&c, eps).unwrap(), c.clone());
        prop_assert_eq!(epsilon_collapse_fast(&pi, eps).unwrap(), c.clone());
        if is_epsilon_partition(&pi, eps) {
            prop_assert_eq!(c, pi);
        }
    }

    #[test]
    fn dictionary_round_trips(pi1 in partition(6, 4), moves in prop::collection::vec((0usize..8, 0usize..8), 0..8)) {
        let pi2 = lower(&pi1, &moves);
        let n = pi1.len().max(pi2.len().saturating_sub(1)) + 1;
        prop_assume!(pi2.len() <= n && n >= 2);
        let (lam, mu) = partitions_to_coweights(&pi1, &pi2, n).unwrap();
        let back = coweights_to_partitions(n, &lam, &mu).unwrap();
        prop_assert_eq!(back.pi1, pi1.clone());
        prop_assert_eq!(back.pi2, pi2);
        prop_assert_eq!(back.total, pi1.size());
    }

    #[test]
    fn orbit_dimension_two_ways(pi in partition(4, 4), eps in epsilon()) {
        prop_assume!(is_epsilon_partition(&pi, eps) && !pi.is_empty());
        let kind = OrbitKind::Epsilon(eps);
        prop_assert_eq!(orbit_dimension(&pi, kind).unwrap(), orbit_dimension_by_centralizer(&pi, kind).unwrap());
        let rep = nilpotent_representative(&pi, kind).unwrap();
        prop_assert!(rep.preserves_form(eps));
        prop_assert_eq!(jordan_type(&rep.x).unwrap(), pi);
    }

    #[test]
    fn folded_integers_respect_the_involution(a in 0i64..4, half_b in 0i64..3) {
        let d = SatakeDiagram::new(DynkinKind::A, 3, &[2, 1, 0], None, None).unwrap();
        let g = gklo_integers(&Coweight(vec![a, 2 * half_b, a]), &Coweight::zero(3), &d, None).unwrap();
        prop_assert_eq!(g.v[0], g.v[2]);
        prop_assert_eq!(g.w_cap[0], g.w_cap[2]);
        prop_assert_eq!(g.frak_v[0], g.v[0]);
        prop_assert_eq!(g.v[1], 2 * g.frak_v[1] + g.theta[1]);
        prop_assert!(g.theta[1] == 0 || g.theta[1] == 1);
    }
}
