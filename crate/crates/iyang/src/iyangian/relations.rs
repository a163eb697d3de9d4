//! Relation schemas of the shifted iYangian and of its classical Poisson limit,
//! instantiated for all index tuples whose superscripts stay at most `K`.

use std::fmt;

use serde::Serialize;

use super::expr::{Expr, Sym};
use crate::exactalg::{gq_int, gq_rat, GQ};
use crate::rootdata::{Coweight, SatakeDiagram};

/// Which defining relation an instance comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Tag {
    /// Vanishing and unit pin of the Cartan series.
    Def0,
    /// Cartan generators commute.
    HH,
    /// Cartan/`B` relation.
    HBNqs,
    /// `B`/`B` relation.
    BBNqs,
    /// Serre relation for `c_ij = 0`.
    BBTau,
    /// Serre relation for `c_ij = -1`, `i != τi != j`.
    SerreOrd,
    /// Serre relation for `c_ij = -1`, `i = τi`.
    SerreIII,
    /// Serre relation for `c_{i,τi} = -1`.
    SerreIII2,
    /// Classical vanishing and unit pin.
    Csty0,
    /// Classical `{h, h} = 0`.
    Csty1,
    /// Classical `{h, b}`.
    Csty2,
    /// Classical `{b, b}`.
    Csty3,
    /// Classical Serre relation for `c_ij = 0`.
    Csty4,
    /// Classical Serre relation for `c_ij = -1`, `i != τi != j`.
    Csty5,
    /// Classical Serre relation for `c_ij = -1`, `i = τi`.
    Csty6,
    /// Classical Serre relation for `c_{i,τi} = -1`.
    Csty7,
    /// Derived identity `h_i^{(r)} = (-1)^r h_{τi}^{(r)}`.
    HTau,
    /// Derived identity `h_i^{(2r+1)} = 0` for `τi = i`.
    HOdd,
}

impl Tag {
    /// Stable report name.
    pub fn name(self) -> &'static str {
        match self {
            Tag::Def0 => "def0",
            Tag::HH => "hh",
            Tag::HBNqs => "hbNqs",
            Tag::BBNqs => "bbNqs",
            Tag::BBTau => "bbtau",
            Tag::SerreOrd => "serre_ord",
            Tag::SerreIII => "serreIII",
            Tag::SerreIII2 => "serreIII2",
            Tag::Csty0 => "csty0",
            Tag::Csty1 => "csty1",
            Tag::Csty2 => "csty2",
            Tag::Csty3 => "csty3",
            Tag::Csty4 => "csty4",
            Tag::Csty5 => "csty5",
            Tag::Csty6 => "csty6",
            Tag::Csty7 => "csty7",
            Tag::HTau => "h_tau",
            Tag::HOdd => "h_odd",
        }
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One relation instance: `expr` must evaluate to zero.
///
/// Node indices in `indices` are one-based for display.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationInstance {
    /// Source relation.
    pub tag: Tag,
    /// Named indices such as `("i", 1), ("s1", 2)`.
    pub indices: Vec<(&'static str, i64)>,
    /// The expression `lhs - rhs`.
    pub expr: Expr,
}

impl RelationInstance {
    /// Stable key `tag(i=1,s=2)` used for sorting and reports.
    pub fn key(&self) -> String {
        let idx: Vec<String> = self.indices.iter().map(|(n, v)| format!("{}={}", n, v)).collect();
        format!("{}({})", self.tag, idx.join(","))
    }
}

/// Builds generators while applying the vanishing `H_i^{(r)} = 0` for `r < -m_i`.
struct Gens<'a> {
    d: &'a SatakeDiagram,
    m: &'a Coweight,
}

impl Gens<'_> {
    fn lo(&self, i: usize) -> i64 {
        -self.m.pairing(i)
    }

    fn h(&self, i: usize, r: i64) -> Expr {
        if r < self.lo(i) {
            Expr::zero()
        } else {
            Expr::gen(Sym::h(i, r))
        }
    }

    fn b(&self, i: usize, s: i64) -> Expr {
        if s < 1 {
            Expr::zero()
        } else {
            Expr::gen(Sym::b(i, s))
        }
    }

    fn c(&self, i: usize, j: usize) -> i64 {
        self.d.c(i, j)
    }

    fn tau(&self, i: usize) -> usize {
        self.d.tau(i)
    }
}

fn sign(n: i64) -> GQ {
    if n.rem_euclid(2) == 0 {
        gq_int(1)
    } else {
        gq_int(-1)
    }
}

fn node(i: usize) -> i64 {
    i as i64 + 1
}

fn push(out: &mut Vec<RelationInstance>, k: i64, tag: Tag, indices: Vec<(&'static str, i64)>, expr: Expr) {
    if expr.is_trivially_zero() {
        return;
    }
    if expr.max_sup().map(|s| s <= k).unwrap_or(true) {
        out.push(RelationInstance { tag, indices, expr });
    }
}

/// `Sym_{s1,s2} [X_i^{(s1)}, [X_i^{(s2)}, X_j^{(s)}]]`.
fn serre_lhs(g: &Gens, i: usize, j: usize, s1: i64, s2: i64, s: i64) -> Expr {
    let one = |a: i64, b: i64| Expr::bracket(g.b(i, a), Expr::bracket(g.b(i, b), g.b(j, s)));
    if s1 == s2 {
        one(s1, s2).times(gq_int(2))
    } else {
        Expr::lin(vec![(gq_int(1), one(s1, s2)), (gq_int(1), one(s2, s1))])
    }
}

fn def0_instances(g: &Gens, tag: Tag, out: &mut Vec<RelationInstance>, k: i64) {
    for i in 0..g.d.rank() {
        let lo = g.lo(i);
        push(
            out,
            k,
            tag,
            vec![("i", node(i)), ("r", lo)],
            Expr::minus(Expr::gen(Sym::h(i, lo)), Expr::Unit),
        );
        for r in [lo - 2, lo - 1] {
            push(out, k, tag, vec![("i", node(i)), ("r", r)], Expr::gen(Sym::h(i, r)));
        }
    }
}

/// Every quantum relation instance with all superscripts at most `k`.
pub fn quantum_relation_instances(d: &SatakeDiagram, mu: &Coweight, k: i64) -> Vec<RelationInstance> {
    let g = Gens { d, m: mu };
    let n = d.rank();
    let mut out = Vec::new();
    def0_instances(&g, Tag::Def0, &mut out, k);
    for i in 0..n {
        for j in i..n {
            for r1 in g.lo(i) + 1..=k {
                for r2 in g.lo(j) + 1..=k {
                    if i == j && r1 >= r2 {
                        continue;
                    }
                    push(
                        &mut out,
                        k,
                        Tag::HH,
                        vec![("i", node(i)), ("j", node(j)), ("r1", r1), ("r2", r2)],
                        Expr::bracket(g.h(i, r1), g.h(j, r2)),
                    );
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            let cij = g.c(i, j);
            let ctj = g.c(g.tau(i), j);
            for r in g.lo(i) - 2..=k - 2 {
                for s in 1..=k - 2 {
                    let e = Expr::lin(vec![
                        (gq_int(1), Expr::bracket(g.h(i, r + 2), g.b(j, s))),
                        (gq_int(-1), Expr::bracket(g.h(i, r), g.b(j, s + 2))),
                        (gq_rat(-(cij - ctj), 2), Expr::anti(g.h(i, r + 1), g.b(j, s))),
                        (gq_rat(-(cij + ctj), 2), Expr::anti(g.h(i, r), g.b(j, s + 1))),
                        (gq_rat(-(cij * ctj), 4), Expr::bracket(g.h(i, r), g.b(j, s))),
                    ]);
                    push(
                        &mut out,
                        k,
                        Tag::HBNqs,
                        vec![("i", node(i)), ("j", node(j)), ("r", r), ("s", s)],
                        e,
                    );
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            let cij = g.c(i, j);
            let tau_ij = g.tau(i) == j;
            for s1 in 1..k {
                for s2 in 1..k {
                    let mut terms = vec![
                        (gq_int(1), Expr::bracket(g.b(i, s1 + 1), g.b(j, s2))),
                        (gq_int(-1), Expr::bracket(g.b(i, s1), g.b(j, s2 + 1))),
                        (gq_rat(-cij, 2), Expr::anti(g.b(i, s1), g.b(j, s2))),
                    ];
                    if tau_ij {
                        terms.push((&sign(s1) * &gq_int(-2), g.h(j, s1 + s2)));
                    }
                    push(
                        &mut out,
                        k,
                        Tag::BBNqs,
                        vec![("i", node(i)), ("j", node(j)), ("s1", s1), ("s2", s2)],
                        Expr::lin(terms),
                    );
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if g.c(i, j) != 0 {
                continue;
            }
            for s1 in 1..=k {
                for s2 in 1..=k {
                    let mut terms = vec![(gq_int(1), Expr::bracket(g.b(i, s1), g.b(j, s2)))];
                    if g.tau(i) == j {
                        terms.push((-sign(s1 - 1), g.h(j, s1 + s2 - 1)));
                    }
                    push(
                        &mut out,
                        k,
                        Tag::BBTau,
                        vec![("i", node(i)), ("j", node(j)), ("s1", s1), ("s2", s2)],
                        Expr::lin(terms),
                    );
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if g.c(i, j) != -1 {
                continue;
            }
            let ti = g.tau(i);
            if ti != i && ti != j {
                for s1 in 1..=k {
                    for s2 in s1..=k {
                        for s in 1..=k {
                            push(
                                &mut out,
                                k,
                                Tag::SerreOrd,
                                vec![("i", node(i)), ("j", node(j)), ("s1", s1), ("s2", s2), ("s", s)],
                                serre_lhs(&g, i, j, s1, s2, s),
                            );
                        }
                    }
                }
            }
            if ti == i {
                for s1 in 1..=k {
                    for s2 in 1..=k {
                        for s in 1..=k {
                            let r = s1 + s2;
                            let rhs = if s > 1 {
                                Expr::bracket(g.h(i, r), g.b(j, s - 1))
                            } else {
                                let mut terms = Vec::new();
                                let mut p = 0;
                                while r - 2 * p - 2 >= g.lo(i) {
                                    let hp = g.h(i, r - 2 * p - 2);
                                    let w = gq_rat(1, 4i64.pow(p as u32));
                                    terms.push((w.clone(), Expr::bracket(hp.clone(), g.b(j, s + 1))));
                                    terms.push((-w, Expr::anti(hp, g.b(j, s))));
                                    p += 1;
                                }
                                Expr::lin(terms)
                            };
                            let e = Expr::lin(vec![
                                (gq_int(1), serre_lhs(&g, i, j, s1, s2, s)),
                                (-sign(s1 - 1), rhs),
                            ]);
                            push(
                                &mut out,
                                k,
                                Tag::SerreIII,
                                vec![("i", node(i)), ("j", node(j)), ("s1", s1), ("s2", s2), ("s", s)],
                                e,
                            );
                        }
                    }
                }
            }
        }
    }
    for i in 0..n {
        let ti = g.tau(i);
        if g.c(i, ti) != -1 {
            continue;
        }
        for s1 in 1..=k {
            for s2 in s1..=k {
                for s in 1..=k {
                    let mut terms = vec![(gq_int(1), serre_lhs(&g, i, ti, s1, s2, s))];
                    let orders: Vec<(i64, i64)> = if s1 == s2 { vec![(s1, s2), (s1, s2)] } else { vec![(s1, s2), (s2, s1)] };
                    for (a, b) in orders {
                        let mut p = 0;
                        while a + s - p - 1 >= g.lo(ti) {
                            let coeff = &(&sign(a - 1) * &gq_int(-4)) * &gq_rat(1, 3i64.pow(p as u32 + 1));
                            terms.push((coeff, Expr::bracket(g.b(i, b + p), g.h(ti, a + s - p - 1))));
                            p += 1;
                        }
                    }
                    push(
                        &mut out,
                        k,
                        Tag::SerreIII2,
                        vec![("i", node(i)), ("s1", s1), ("s2", s2), ("s", s)],
                        Expr::lin(terms),
                    );
                }
            }
        }
    }
    out
}

/// Every classical Poisson relation instance with all superscripts at most `k`,
/// including the derived identities for `h`.
pub fn classical_relation_instances(d: &SatakeDiagram, mu: &Coweight, k: i64) -> Vec<RelationInstance> {
    let g = Gens { d, m: mu };
    let n = d.rank();
    let mut out = Vec::new();
    def0_instances(&g, Tag::Csty0, &mut out, k);
    for i in 0..n {
        for j in i..n {
            for r1 in g.lo(i) + 1..=k {
                for r2 in g.lo(j) + 1..=k {
                    if i == j && r1 >= r2 {
                        continue;
                    }
                    push(
                        &mut out,
                        k,
                        Tag::Csty1,
                        vec![("i", node(i)), ("j", node(j)), ("r1", r1), ("r2", r2)],
                        Expr::bracket(g.h(i, r1), g.h(j, r2)),
                    );
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            let cij = g.c(i, j);
            let ctj = g.c(g.tau(i), j);
            for r in g.lo(i) + 1..=k {
                for s in 1..=k {
                    let mut terms = vec![(gq_int(1), Expr::bracket(g.h(i, r), g.b(j, s)))];
                    let mut p = 0;
                    while r - p - 1 >= g.lo(i) {
                        let c = cij + if p % 2 == 0 { -ctj } else { ctj };
                        terms.push((gq_int(-c), Expr::prod(g.h(i, r - p - 1), g.b(j, s + p))));
                        p += 1;
                    }
                    push(
                        &mut out,
                        k,
                        Tag::Csty2,
                        vec![("i", node(i)), ("j", node(j)), ("r", r), ("s", s)],
                        Expr::lin(terms),
                    );
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            let cij = g.c(i, j);
            for s1 in 1..k {
                for s2 in 1..k {
                    let mut terms = vec![
                        (gq_int(1), Expr::bracket(g.b(i, s1 + 1), g.b(j, s2))),
                        (gq_int(-1), Expr::bracket(g.b(i, s1), g.b(j, s2 + 1))),
                        (gq_int(-cij), Expr::prod(g.b(i, s1), g.b(j, s2))),
                    ];
                    if g.tau(i) == j {
                        terms.push((&sign(s1) * &gq_int(-2), g.h(j, s1 + s2)));
                    }
                    push(
                        &mut out,
                        k,
                        Tag::Csty3,
                        vec![("i", node(i)), ("j", node(j)), ("s1", s1), ("s2", s2)],
                        Expr::lin(terms),
                    );
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if g.c(i, j) != 0 {
                continue;
            }
            for s1 in 1..=k {
                for s2 in 1..=k {
                    let mut terms = vec![(gq_int(1), Expr::bracket(g.b(i, s1), g.b(j, s2)))];
                    if g.tau(i) == j {
                        terms.push((-sign(s1 - 1), g.h(j, s1 + s2 - 1)));
                    }
                    push(
                        &mut out,
                        k,
                        Tag::Csty4,
                        vec![("i", node(i)), ("j", node(j)), ("s1", s1), ("s2", s2)],
                        Expr::lin(terms),
                    );
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if g.c(i, j) != -1 {
                continue;
            }
            let ti = g.tau(i);
            if ti != i && ti != j {
                for s1 in 1..=k {
                    for s2 in s1..=k {
                        for s in 1..=k {
                            push(
                                &mut out,
                                k,
                                Tag::Csty5,
                                vec![("i", node(i)), ("j", node(j)), ("s1", s1), ("s2", s2), ("s", s)],
                                serre_lhs(&g, i, j, s1, s2, s),
                            );
                        }
                    }
                }
            }
            if ti == i {
                for s1 in 1..=k {
                    for s2 in 1..=k {
                        for s in 1..=k {
                            let mut terms = vec![(gq_int(1), serre_lhs(&g, i, j, s1, s2, s))];
                            let c = &(&sign(s1 - 1) * &gq_int(-2 * g.c(i, j))) * &gq_int(1);
                            let mut p = 0;
                            while s1 + s2 - 2 * p - 2 >= g.lo(i) {
                                terms.push((
                                    c.clone(),
                                    Expr::prod(g.h(i, s1 + s2 - 2 * p - 2), g.b(j, s + 2 * p)),
                                ));
                                p += 1;
                            }
                            push(
                                &mut out,
                                k,
                                Tag::Csty6,
                                vec![("i", node(i)), ("j", node(j)), ("s1", s1), ("s2", s2), ("s", s)],
                                Expr::lin(terms),
                            );
                        }
                    }
                }
            }
        }
    }
    for i in 0..n {
        let ti = g.tau(i);
        if g.c(i, ti) != -1 {
            continue;
        }
        for s1 in 1..=k {
            for s2 in s1..=k {
                for s in 1..=k {
                    let mut terms = vec![(gq_int(1), serre_lhs(&g, i, ti, s1, s2, s))];
                    let orders: Vec<(i64, i64)> = if s1 == s2 { vec![(s1, s2), (s1, s2)] } else { vec![(s1, s2), (s2, s1)] };
                    for (a, b) in orders {
                        let mut p = 0;
                        while a + s - 2 * p - 2 >= g.lo(ti) {
                            terms.push((
                                &sign(a - 1) * &gq_int(-4),
                                Expr::prod(g.h(ti, a + s - 2 * p - 2), g.b(i, b + 2 * p)),
                            ));
                            p += 1;
                        }
                    }
                    push(
                        &mut out,
                        k,
                        Tag::Csty7,
                        vec![("i", node(i)), ("s1", s1), ("s2", s2), ("s", s)],
                        Expr::lin(terms),
                    );
                }
            }
        }
    }
    for i in 0..n {
        let ti = g.tau(i);
        for r in g.lo(i) + 1..=k {
            if ti > i {
                push(
                    &mut out,
                    k,
                    Tag::HTau,
                    vec![("i", node(i)), ("r", r)],
                    Expr::lin(vec![(gq_int(1), g.h(i, r)), (-sign(r), g.h(ti, r))]),
                );
            } else if ti == i && r.rem_euclid(2) == 1 {
                push(&mut out, k, Tag::HOdd, vec![("i", node(i)), ("r", r)], g.h(i, r));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::DynkinKind;

    #[test]
    fn split_a1_contains_expected_schemas() {
        let d = SatakeDiagram::split(DynkinKind::A, 1).unwrap();
        let inst = quantum_relation_instances(&d, &Coweight(vec![0]), 2);
        assert!(inst.iter().any(|r| r.tag == Tag::HH));
        let bb: Vec<_> = inst.iter().filter(|r| r.tag == Tag::BBNqs).collect();
        assert!(!bb.is_empty());
        assert!(bb[0].expr.symbols().iter().any(|s| *s == Sym::h(0, 2)));
        assert!(inst.iter().all(|r| r.expr.max_sup().unwrap() <= 2));
    }

    #[test]
    fn aiii2_has_serre_iii2() {
        let d = SatakeDiagram::new(DynkinKind::A, 2, &[1, 0], None, None).unwrap();
        let inst = quantum_relation_instances(&d, &Coweight(vec![0, 0]), 3);
        assert!(inst.iter().any(|r| r.tag == Tag::SerreIII2));
        let cl = classical_relation_instances(&d, &Coweight(vec![0, 0]), 3);
        assert!(cl.iter().any(|r| r.tag == Tag::Csty7));
    }

    #[test]
    fn csty7_only_when_tau_adjacent() {
        let d = SatakeDiagram::split(DynkinKind::A, 3).unwrap();
        let cl = classical_relation_instances(&d, &Coweight(vec![0, 0, 0]), 3);
        assert!(!cl.iter().any(|r| r.tag == Tag::Csty7));
        assert!(cl.iter().any(|r| r.tag == Tag::Csty6));
    }

    #[test]
    fn h_superscripts_respect_vanishing_bound() {
        let d = SatakeDiagram::split(DynkinKind::A, 2).unwrap();
        let mu = Coweight(vec![-2, 0]);
        for inst in quantum_relation_instances(&d, &mu, 3) {
            if inst.tag == Tag::Def0 {
                continue;
            }
            for s in inst.expr.symbols() {
                if s.kind == super::super::expr::GenKind::H {
                    assert!(s.sup >= -mu.pairing(s.node));
                }
            }
        }
    }
}
