use super::*;
use crate::rootdata::DynkinKind;

fn split(kind: DynkinKind, rank: usize, v: &[i64], w: &[i64]) -> FramedQuiverData {
    FramedQuiverData {
        diagram: SatakeDiagram::split(kind, rank).unwrap(),
        v: v.to_vec(),
        w: w.to_vec(),
    }
}

fn quasi(rank: usize, tau: &[usize], v: &[i64], w: &[i64]) -> FramedQuiverData {
    FramedQuiverData {
        diagram: SatakeDiagram::new(DynkinKind::A, rank, tau, None, None).unwrap(),
        v: v.to_vec(),
        w: w.to_vec(),
    }
}

/// Split `A_{N-1}` with `v = (1, ..., N-1)` and framing `N` at the last node.
fn cone(n_total: usize) -> FramedQuiverData {
    let r = n_total - 1;
    let v: Vec<i64> = (1..=r as i64).collect();
    let mut w = vec![0; r];
    w[r - 1] = n_total as i64;
    split(DynkinKind::A, r, &v, &w)
}

#[test]
fn validation_examples() {
    assert!(validate(&split(DynkinKind::A, 2, &[0, 0], &[0, 0])).is_empty());
    assert_eq!(
        validate(&split(DynkinKind::A, 2, &[1, 1], &[0, 0])),
        vec![Violation::OddEdge(0, 1)]
    );
    assert_eq!(
        validate(&quasi(3, &[2, 1, 0], &[1, 2, 2], &[0, 0, 0])),
        vec![Violation::TauAsymmetric(0)]
    );
    assert_eq!(validate(&split(DynkinKind::A, 1, &[1], &[1])), vec![Violation::OddPair(0)]);
    assert!(ificate(&split(DynkinKind::A, 2, &[1, 1], &[0, 0])).is_err());
}

#[test]
fn zero_dimensions_are_trivial() {
    let g = ificate(&quasi(3, &[2, 1, 0], &[0, 0, 0], &[0, 0, 0])).unwrap();
    assert_eq!((g.dim_e, g.gauge_rank(), g.flavor_rank()), (0, 0, 0));
    assert!(g.gauge.iter().chain(&g.flavor).all(|f| f.dim == 0));
}

#[test]
fn so_even_cone() {
    for n in 2..=5i64 {
        let data = cone(2 * n as usize);
        let g = ificate(&data).unwrap();
        let dims: Vec<i64> = g.gauge.iter().map(|f| f.dim).collect();
        let expect: Vec<i64> = (1..2 * n).map(|i| 2 * (i / 2)).collect();
        assert_eq!(dims, expect);
        assert_eq!(g.removed, vec![1]);
        let last = g.flavor.last().unwrap();
        assert_eq!((last.kind, last.dim), (GroupKind::SO, 2 * n));
        assert_eq!(2 * g.gauge_rank(), 2 * n * n - 2 * n);
        assert_eq!(g.dim_e - 2 * g.gauge_dimension(), 2 * n * n - 2 * n);
        assert!(g.pairings_are_mixed());
    }
}

#[test]
fn so_odd_cone() {
    for n in 2..=5i64 {
        let data = cone(2 * n as usize + 1);
        let g = ificate(&data).unwrap();
        let dims: Vec<i64> = g.gauge.iter().map(|f| f.dim).collect();
        let expect: Vec<i64> = (1..=2 * n).map(|i| 2 * (i / 2)).collect();
        assert_eq!(dims, expect);
        assert_eq!(g.removed, vec![1]);
        let last = g.flavor.last().unwrap();
        assert_eq!((last.kind, last.dim), (GroupKind::Sp, 2 * n));
        assert_eq!(2 * g.gauge_rank(), 2 * n * n);
        assert_eq!(g.dim_e - 2 * g.gauge_dimension(), 2 * n * n);
    }
}

#[test]
fn small_cone_blocks_by_hand() {
    // A3: V^ι = (0, 2, 2) of kinds (Sp, SO, Sp), framing SO(4) at node 3
    let g = ificate(&cone(4)).unwrap();
    let dims: Vec<(String, i64)> = g.blocks.iter().map(|b| (b.label.clone(), b.dim)).collect();
    assert_eq!(
        dims,
        vec![
            ("hom(V1,V2)".to_string(), 0),
            ("hom(V2,V3)".to_string(), 4),
            ("hom(W1,V1)".to_string(), 0),
            ("hom(W2,V2)".to_string(), 0),
            ("hom(W3,V3)".to_string(), 8),
        ]
    );
    assert_eq!(g.dim_e, 12);
}

#[test]
fn gauge_and_flavor_forms_are_opposite() {
    let data = cone(7);
    for flip in [false, true] {
        let data = if flip {
            FramedQuiverData {
                diagram: data.diagram.with_flipped_bipartite(),
                ..data.clone()
            }
        } else {
            data.clone()
        };
        let g = ificate(&data).unwrap();
        for (a, b) in g.gauge.iter().zip(&g.flavor) {
            assert_ne!(a.kind, b.kind);
            assert_ne!(a.kind, GroupKind::GL);
        }
        assert!(g.pairings_are_mixed());
    }
}

#[test]
fn quasi_split_blocks() {
    // AIII_4: nodes 2 and 3 are swapped and adjacent
    let data = quasi(4, &[3, 2, 1, 0], &[1, 2, 2, 1], &[1, 0, 0, 1]);
    let g = ificate(&data).unwrap();
    assert_eq!(g.qs.len(), 1);
    assert_eq!(g.gauge.iter().map(|f| f.kind).collect::<Vec<_>>(), vec![GroupKind::GL; 2]);
    let reps: Vec<usize> = data.diagram.nodes_of(NodeClass::One);
    // 2 v1 v2 + 2 binom(2, 2) + 2 v1 w1
    assert_eq!(g.dim_e, 2 * 2 + 2 + 2);
    assert_eq!(dim_e_with_representatives(&data, &reps), g.dim_e);
}

fn connected(d: &SatakeDiagram, nodes: &[usize]) -> bool {
    if nodes.is_empty() {
        return true;
    }
    let mut seen = vec![nodes[0]];
    let mut k = 0;
    while k < seen.len() {
        for &x in nodes {
            if !seen.contains(&x) && d.c(seen[k], x) != 0 {
                seen.push(x);
            }
        }
        k += 1;
    }
    seen.len() == nodes.len()
}

#[test]
fn dimension_is_independent_of_representatives() {
    let cases = vec![
        quasi(3, &[2, 1, 0], &[2, 3, 2], &[1, 2, 1]),
        quasi(5, &[4, 3, 2, 1, 0], &[1, 2, 4, 2, 1], &[0, 1, 2, 1, 0]),
        quasi(4, &[3, 2, 1, 0], &[2, 3, 3, 2], &[1, 0, 0, 1]),
        FramedQuiverData {
            diagram: SatakeDiagram::new(DynkinKind::D, 4, &[0, 1, 3, 2], None, None).unwrap(),
            v: vec![2, 3, 1, 1],
            w: vec![2, 0, 1, 1],
        },
    ];
    for data in cases {
        assert!(validate(&data).is_empty());
        let d = &data.diagram;
        let g = ificate(&data).unwrap();
        let orbits: Vec<(usize, usize)> = (0..d.rank()).filter(|&i| d.tau(i) > i).map(|i| (i, d.tau(i))).collect();
        let mut tried = 0;
        for mask in 0..(1u32 << orbits.len()) {
            let reps: Vec<usize> = orbits
                .iter()
                .enumerate()
                .map(|(k, &(a, b))| if mask >> k & 1 == 0 { a } else { b })
                .collect();
            if connected(d, &reps) {
                tried += 1;
                assert_eq!(dim_e_with_representatives(&data, &reps), g.dim_e, "{:?}", reps);
            }
        }
        assert!(tried >= 2);
        for arrows in d.valid_orientations() {
            let a: Vec<(usize, usize)> = arrows.into_iter().collect();
            let other = FramedQuiverData {
                diagram: d.with_orientation(&a).unwrap(),
                ..data.clone()
            };
            assert_eq!(ificate(&other).unwrap().dim_e, g.dim_e);
        }
    }
}

#[test]
fn numerology_on_cones_and_trivial() {
    for n_total in 3..=9usize {
        let data = cone(n_total);
        let mut lam = vec![0; n_total - 1];
        lam[n_total - 2] = n_total as i64;
        let rep = numerology(&data, &Coweight(lam), &Coweight(vec![0; n_total - 1])).unwrap();
        assert!(rep.all_passed(), "{:?}", rep.checks);
    }
    let data = quasi(3, &[2, 1, 0], &[0, 0, 0], &[2, 0, 2]);
    let rep = numerology(&data, &Coweight(vec![2, 0, 2]), &Coweight(vec![2, 0, 2])).unwrap();
    assert!(rep.all_passed());
    assert_eq!(rep.gauge_rank, 0);
    let wrong = numerology(&cone(4), &Coweight(vec![0, 0, 4]), &Coweight(vec![0, 0, 2]));
    assert!(matches!(wrong, Err(Error::Mismatch(_)) | Err(Error::NotDominated(_))));
}

#[test]
fn numerology_on_quasi_split() {
    // AIII_3 with λ = (2, 0, 2), μ = 0: v = (2, 2, 2)
    let data = quasi(3, &[2, 1, 0], &[2, 2, 2], &[2, 0, 2]);
    let rep = numerology(&data, &Coweight(vec![2, 0, 2]), &Coweight(vec![0, 0, 0])).unwrap();
    assert!(rep.all_passed(), "{:?}", rep.checks);
    assert_eq!(rep.islice_dim, Some(6));
}
