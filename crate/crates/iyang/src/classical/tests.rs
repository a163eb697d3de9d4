use super::*;
use crate::igklo::ZMode;
use crate::rootdata::DynkinKind;

fn split(rank: usize, lam: &[i64], mu: &[i64], k: i64) -> GKLOContext {
    let d = SatakeDiagram::split(DynkinKind::A, rank).unwrap();
    GKLOContext::new(d, Coweight(lam.to_vec()), Coweight(mu.to_vec()), None, ZMode::Zero, k).unwrap()
}

fn aiii3(lam: &[i64], mu: &[i64], k: i64) -> GKLOContext {
    let d = SatakeDiagram::new(DynkinKind::A, 3, &[2, 1, 0], None, None).unwrap();
    GKLOContext::new(d, Coweight(lam.to_vec()), Coweight(mu.to_vec()), None, ZMode::Zero, k).unwrap()
}

#[test]
fn sigma_examples() {
    let d = SatakeDiagram::split(DynkinKind::A, 2).unwrap();
    let e = DrinfeldSym {
        kind: DrinfeldKind::E,
        node: 0,
        sup: 2,
    };
    let (s, f) = sigma_symbol(&d, e);
    assert_eq!((s, f.kind, f.node), (1, DrinfeldKind::F, 0));
    for (x, (s1, y)) in sigma_on_generators(&d, 4) {
        let (s2, z) = sigma_symbol(&d, y);
        assert_eq!((s1 * s2, z), (1, x));
    }
    let q = SatakeDiagram::new(DynkinKind::A, 3, &[2, 1, 0], None, None).unwrap();
    let h = DrinfeldSym {
        kind: DrinfeldKind::H,
        node: 0,
        sup: 3,
    };
    let (s, img) = sigma_symbol(&q, h);
    assert_eq!((s, img.node, img.kind), (-1, 2, DrinfeldKind::H));
}

#[test]
fn dimension_data() {
    let d = SatakeDiagram::split(DynkinKind::A, 2).unwrap();
    let r = ix_dimension_data(&d, &Coweight(vec![1, 1]), &Coweight(vec![0, 0])).unwrap();
    assert!(!r.nonempty);
    let d1 = SatakeDiagram::split(DynkinKind::A, 1).unwrap();
    let r = ix_dimension_data(&d1, &Coweight(vec![2]), &Coweight(vec![0])).unwrap();
    assert_eq!(r, IXDimension { nonempty: true, dim: Some(0) });
    let q = SatakeDiagram::new(DynkinKind::A, 3, &[2, 1, 0], None, None).unwrap();
    let r = ix_dimension_data(&q, &Coweight(vec![2, 0, 2]), &Coweight(vec![0, 0, 0])).unwrap();
    assert_eq!(r.dim, Some(2 * (2 + 1)));
}

#[test]
fn middle_coordinate_vanishes_for_positive_weight() {
    let ctx = split(1, &[2], &[0], 4);
    let ix = ix_images(&ctx).unwrap();
    assert!(ix.y(0, 1).is_zero());
    let rep = verify_classical(&ctx).unwrap();
    assert!(rep.all_passed(), "{:#?} {:#?}", rep.relations.failures, rep.check_failures);
}

#[test]
fn trivial_when_lambda_equals_mu() {
    let ctx = split(2, &[0, 0], &[0, 0], 3);
    let a = classical_images(&ctx).unwrap();
    for i in 0..2 {
        for s in 1..=3 {
            assert!(a[&Sym::b(i, s)].is_zero());
        }
    }
    assert!(verify_classical(&ctx).unwrap().all_passed());
}

#[test]
fn split_a2_passes_and_is_homogeneous() {
    let ctx = split(2, &[2, 2], &[0, 0], 3);
    let rep = verify_classical(&ctx).unwrap();
    assert!(rep.all_passed(), "{:#?} {:#?}", rep.relations.failures, rep.check_failures);
    assert!(rep.check("ix_yy").checked > 0);
    let h = homogeneity_check(&ctx, None).unwrap();
    assert!(h.ok(), "{:#?}", h.violations);
    let bad = homogeneity_check(&ctx, Some(&Coweight(vec![1, -1]))).unwrap();
    assert!(!bad.ok());
}

#[test]
fn h_series_leading_term() {
    let ctx = split(2, &[2, 2], &[0, 0], 2);
    let a = classical_images(&ctx).unwrap();
    assert_eq!(a[&Sym::h(0, 0)], GrA::one());
    assert!(a[&Sym::h(0, -1)].is_zero());
}

#[test]
fn sign_flip_breaks_exactly_the_partner_pair() {
    let ctx = aiii3(&[1, 0, 1], &[0, 0, 0], 2);
    let mut ix = ix_images(&ctx).unwrap();
    assert!(check_bracket_table(&ctx, &ix).unwrap().iter().all(|o| o.pass));
    let y = ix.y[&(0, 1)].neg();
    ix.y.insert((0, 1), y);
    let partner = (2, tau_index(&ctx, 0, 1));
    let failing: Vec<String> = check_bracket_table(&ctx, &ix)
        .unwrap()
        .into_iter()
        .filter(|o| !o.pass)
        .map(|o| format!("{}:{}", o.check, o.key))
        .collect();
    assert_eq!(failing, vec![format!("ix_yy:{}", key2((0, 1), partner))]);
}

#[test]
fn jacobi_on_images() {
    let ctx = split(2, &[2, 2], &[0, 0], 2);
    let ix = ix_images(&ctx).unwrap();
    let ys: Vec<GrA> = ix.y.values().cloned().collect();
    let mut triples = Vec::new();
    for a in 0..ys.len() {
        for b in 0..ys.len() {
            let c = (a + b) % ys.len();
            triples.push((ys[a].clone(), ys[b].clone(), ys[c].clone()));
        }
    }
    assert!(jacobi_check(&triples).iter().all(|o| o.pass));
}

#[test]
fn first_branch_matches_closed_form() {
    let ctx = aiii3(&[1, 0, 1], &[0, 0, 0], 2);
    let ix = ix_images(&ctx).unwrap();
    let x = Var::x(0);
    let w = ix.w(0, 1).clone();
    let mut p = -&w.pow(ctx.ints.frak_w[0] as u32);
    for j in ctx.diagram.into_node(0) {
        p = &p * &a_poly(&ctx, j, x).substitute(x, &w);
    }
    let expect = GrA::term(RatFun::from_poly(p), crate::diffops::Shift::single(Var::w(1, 1), -1));
    assert_eq!(ix.y(0, 1), &expect);
}
