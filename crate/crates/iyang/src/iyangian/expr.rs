//! Symbolic expressions over the generators `H_i^{(r)}` and `B_i^{(s)}`.

use std::fmt;

use serde::Serialize;

use std::cmp::Ordering;

use crate::exactalg::gauss::{gq_cmp, gq_is_one, gq_is_zero, gq_render};
use crate::exactalg::{gq_int, GQ};

/// Generator family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum GenKind {
    /// Cartan-type generator `H_i^{(r)}` (or `h` classically).
    H,
    /// Generator `B_i^{(s)}` (or `b` classically).
    B,
}

/// A generator symbol with a zero-based node and its superscript.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Sym {
    /// Family.
    pub kind: GenKind,
    /// Zero-based node.
    pub node: usize,
    /// Superscript.
    pub sup: i64,
}

impl Sym {
    /// `H_i^{(r)}`.
    pub fn h(node: usize, sup: i64) -> Sym {
        Sym {
            kind: GenKind::H,
            node,
            sup,
        }
    }

    /// `B_i^{(s)}`.
    pub fn b(node: usize, sup: i64) -> Sym {
        Sym {
            kind: GenKind::B,
            node,
            sup,
        }
    }
}

impl fmt::Display for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            GenKind::H => "H",
            GenKind::B => "B",
        };
        write!(f, "{}{}({})", k, self.node + 1, self.sup)
    }
}

/// An expression tree evaluated inside a target algebra.
///
/// `Bracket` is the commutator for associative targets and the Poisson bracket
/// for commutative ones; `AntiBracket` is `ab + ba`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Expr {
    /// The unit.
    Unit,
    /// A generator.
    Gen(Sym),
    /// A linear combination `Σ c_k e_k`.
    Lin(Vec<(GQ, Expr)>),
    /// A product.
    Prod(Box<Expr>, Box<Expr>),
    /// `[a, b]` or `{a, b}`.
    Bracket(Box<Expr>, Box<Expr>),
    /// `[a, b]_+`.
    AntiBracket(Box<Expr>, Box<Expr>),
}

impl Expr {
    fn rank(&self) -> u8 {
        match self {
            Expr::Unit => 0,
            Expr::Gen(_) => 1,
            Expr::Lin(_) => 2,
            Expr::Prod(..) => 3,
            Expr::Bracket(..) => 4,
            Expr::AntiBracket(..) => 5,
        }
    }
}

impl Ord for Expr {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Expr::Gen(a), Expr::Gen(b)) => a.cmp(b),
            (Expr::Lin(a), Expr::Lin(b)) => {
                for ((ca, ea), (cb, eb)) in a.iter().zip(b.iter()) {
                    let o = ea.cmp(eb).then_with(|| gq_cmp(ca, cb));
                    if o != Ordering::Equal {
                        return o;
                    }
                }
                a.len().cmp(&b.len())
            }
            (Expr::Prod(a1, b1), Expr::Prod(a2, b2))
            | (Expr::Bracket(a1, b1), Expr::Bracket(a2, b2))
            | (Expr::AntiBracket(a1, b1), Expr::AntiBracket(a2, b2)) => a1.cmp(a2).then_with(|| b1.cmp(b2)),
            _ => self.rank().cmp(&other.rank()),
        }
    }
}

impl PartialOrd for Expr {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Expr {
    /// The zero expression.
    pub fn zero() -> Expr {
        Expr::Lin(Vec::new())
    }

    /// A generator.
    pub fn gen(s: Sym) -> Expr {
        Expr::Gen(s)
    }

    /// `[a, b]`.
    pub fn bracket(a: Expr, b: Expr) -> Expr {
        if a.is_trivially_zero() || b.is_trivially_zero() {
            return Expr::zero();
        }
        Expr::Bracket(Box::new(a), Box::new(b))
    }

    /// `[a, b]_+`.
    pub fn anti(a: Expr, b: Expr) -> Expr {
        if a.is_trivially_zero() || b.is_trivially_zero() {
            return Expr::zero();
        }
        Expr::AntiBracket(Box::new(a), Box::new(b))
    }

    /// `a * b`.
    pub fn prod(a: Expr, b: Expr) -> Expr {
        if a.is_trivially_zero() || b.is_trivially_zero() {
            return Expr::zero();
        }
        Expr::Prod(Box::new(a), Box::new(b))
    }

    /// `c * self`.
    pub fn times(self, c: GQ) -> Expr {
        Expr::lin(vec![(c, self)])
    }

    /// Builds a linear combination, flattening nested sums and dropping zeros.
    pub fn lin(terms: Vec<(GQ, Expr)>) -> Expr {
        let mut out: Vec<(GQ, Expr)> = Vec::new();
        for (c, e) in terms {
            if gq_is_zero(&c) || e.is_trivially_zero() {
                continue;
            }
            match e {
                Expr::Lin(inner) => {
                    for (d, f) in inner {
                        out.push((&c * &d, f));
                    }
                }
                other => out.push((c, other)),
            }
        }
        // Merge repeated subexpressions.
        out.sort_by(|a, b| a.1.cmp(&b.1));
        let mut merged: Vec<(GQ, Expr)> = Vec::new();
        for (c, e) in out {
            match merged.last_mut() {
                Some((d, f)) if *f == e => *d = &*d + &c,
                _ => merged.push((c, e)),
            }
        }
        merged.retain(|(c, _)| !gq_is_zero(c));
        if merged.len() == 1 && gq_is_one(&merged[0].0) {
            return merged.pop().unwrap().1;
        }
        Expr::Lin(merged)
    }

    /// `a - b`.
    pub fn minus(a: Expr, b: Expr) -> Expr {
        Expr::lin(vec![(gq_int(1), a), (gq_int(-1), b)])
    }

    /// True for an empty linear combination.
    pub fn is_trivially_zero(&self) -> bool {
        matches!(self, Expr::Lin(v) if v.is_empty())
    }

    /// Every generator occurring, with repetitions removed.
    pub fn symbols(&self) -> Vec<Sym> {
        let mut out = Vec::new();
        self.collect(&mut out);
        out.sort();
        out.dedup();
        out
    }

    fn collect(&self, out: &mut Vec<Sym>) {
        match self {
            Expr::Unit => {}
            Expr::Gen(s) => out.push(*s),
            Expr::Lin(v) => v.iter().for_each(|(_, e)| e.collect(out)),
            Expr::Prod(a, b) | Expr::Bracket(a, b) | Expr::AntiBracket(a, b) => {
                a.collect(out);
                b.collect(out);
            }
        }
    }

    /// Largest superscript occurring, if any generator occurs.
    pub fn max_sup(&self) -> Option<i64> {
        self.symbols().iter().map(|s| s.sup).max()
    }

    /// Smallest superscript occurring among generators of the given family and node.
    pub fn min_sup_of(&self, kind: GenKind, node: usize) -> Option<i64> {
        self.symbols()
            .iter()
            .filter(|s| s.kind == kind && s.node == node)
            .map(|s| s.sup)
            .min()
    }

    /// Applies a symbol substitution `s ↦ c * s'`.
    pub fn map_symbols(&self, f: &impl Fn(Sym) -> (GQ, Sym)) -> Expr {
        match self {
            Expr::Unit => Expr::Unit,
            Expr::Gen(s) => {
                let (c, t) = f(*s);
                Expr::Gen(t).times(c)
            }
            Expr::Lin(v) => Expr::lin(v.iter().map(|(c, e)| (c.clone(), e.map_symbols(f))).collect()),
            Expr::Prod(a, b) => Expr::prod(a.map_symbols(f), b.map_symbols(f)),
            Expr::Bracket(a, b) => Expr::bracket(a.map_symbols(f), b.map_symbols(f)),
            Expr::AntiBracket(a, b) => Expr::anti(a.map_symbols(f), b.map_symbols(f)),
        }
    }

    /// Canonical text rendering.
    pub fn render(&self) -> String {
        match self {
            Expr::Unit => "1".to_string(),
            Expr::Gen(s) => s.to_string(),
            Expr::Lin(v) => {
                if v.is_empty() {
                    return "0".to_string();
                }
                v.iter()
                    .map(|(c, e)| {
                        if gq_is_one(c) {
                            e.render()
                        } else {
                            format!("{}*{}", gq_render(c), e.render())
                        }
                    })
                    .collect::<Vec<_>>()
                    .join(" + ")
            }
            Expr::Prod(a, b) => format!("{}*{}", a.render_atom(), b.render_atom()),
            Expr::Bracket(a, b) => format!("[{}, {}]", a.render(), b.render()),
            Expr::AntiBracket(a, b) => format!("[{}, {}]+", a.render(), b.render()),
        }
    }

    fn render_atom(&self) -> String {
        match self {
            Expr::Lin(v) if v.len() > 1 => format!("({})", self.render()),
            _ => self.render(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lin_merges_and_cancels() {
        let a = Expr::gen(Sym::h(0, 1));
        let e = Expr::lin(vec![(gq_int(1), a.clone()), (gq_int(-1), a.clone())]);
        assert!(e.is_trivially_zero());
        let e = Expr::lin(vec![(gq_int(2), a.clone()), (gq_int(-1), a.clone())]);
        assert_eq!(e, a);
    }

    #[test]
    fn symbols_and_bounds() {
        let e = Expr::bracket(Expr::gen(Sym::b(0, 3)), Expr::gen(Sym::h(1, -2)));
        assert_eq!(e.max_sup(), Some(3));
        assert_eq!(e.min_sup_of(GenKind::H, 1), Some(-2));
        assert_eq!(e.render(), "[B1(3), H2(-2)]");
    }
}
