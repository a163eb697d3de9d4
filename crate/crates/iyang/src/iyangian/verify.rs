//! Evaluation of relation instances inside a target algebra.

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use rayon::prelude::*;
use serde::Serialize;

use super::expr::{Expr, Sym};
use super::relations::{RelationInstance, Tag};
use crate::diffops::{DiffOp, GrA};
use crate::exactalg::Ring;
use crate::{Error, Result};

/// A ring together with the brackets used by the relation schemas.
pub trait TargetAlgebra: Ring {
    /// `[a, b]` (commutator) or `{a, b}` (Poisson bracket).
    fn bracket(&self, other: &Self) -> Self;
    /// `[a, b]_+`.
    fn anti_bracket(&self, other: &Self) -> Self;
}

impl TargetAlgebra for DiffOp {
    fn bracket(&self, other: &Self) -> Self {
        self.commutator(other)
    }
    fn anti_bracket(&self, other: &Self) -> Self {
        self.anticommutator(other)
    }
}

impl TargetAlgebra for GrA {
    fn bracket(&self, other: &Self) -> Self {
        GrA::bracket(self, other)
    }
    fn anti_bracket(&self, other: &Self) -> Self {
        let p = Ring::mul(self, other);
        Ring::add(&p, &p)
    }
}

/// Images of the generators.
pub type GeneratorAssignment<T> = BTreeMap<Sym, T>;

/// Evaluates expressions with memoisation of composite nodes.
pub struct Evaluator<'a, T: TargetAlgebra> {
    assignment: &'a GeneratorAssignment<T>,
    cache: Mutex<HashMap<Expr, T>>,
}

impl<'a, T: TargetAlgebra> Evaluator<'a, T> {
    /// New evaluator over a fixed assignment.
    pub fn new(assignment: &'a GeneratorAssignment<T>) -> Self {
        Evaluator {
            assignment,
            cache: Mutex::new(HashMap::new()),
        }
    }

    /// Value of `e`; fails when a generator has no image.
    pub fn eval(&self, e: &Expr) -> Result<T> {
        match e {
            Expr::Unit => Ok(T::one()),
            Expr::Gen(s) => self
                .assignment
                .get(s)
                .cloned()
                .ok_or_else(|| Error::MissingSymbol(s.to_string())),
            Expr::Lin(v) => {
                let mut acc = T::zero();
                for (c, f) in v {
                    acc = acc.add(&self.eval(f)?.scale(c));
                }
                Ok(acc)
            }
            Expr::Prod(a, b) | Expr::Bracket(a, b) | Expr::AntiBracket(a, b) => {
                if let Some(x) = self.cache.lock().expect("cache poisoned").get(e) {
                    return Ok(x.clone());
                }
                let x = self.eval(a)?;
                let y = self.eval(b)?;
                let r = match e {
                    Expr::Prod(..) => x.mul(&y),
                    Expr::Bracket(..) => x.bracket(&y),
                    _ => x.anti_bracket(&y),
                };
                self.cache.lock().expect("cache poisoned").insert(e.clone(), r.clone());
                Ok(r)
            }
        }
    }
}

/// Outcome of one instance.
#[derive(Clone, Debug, Serialize)]
pub struct InstanceResult {
    /// Source relation.
    pub tag: Tag,
    /// Stable instance key.
    pub key: String,
    /// Whether the instance evaluated to zero.
    pub pass: bool,
    /// Rendered nonzero residue, truncated for reports.
    pub residue: Option<String>,
}

/// Per-relation tallies.
#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct TagSummary {
    /// Instances checked.
    pub checked: usize,
    /// Instances that evaluated to zero.
    pub passed: usize,
}

/// Deterministic verification report.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    /// Tallies keyed by relation name.
    pub summary: BTreeMap<String, TagSummary>,
    /// Failing instances, sorted by key.
    pub failures: Vec<InstanceResult>,
    /// Total instances checked.
    pub total: usize,
}

impl VerificationReport {
    /// True when every instance passed.
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Tally for one relation.
    pub fn tag(&self, tag: Tag) -> TagSummary {
        self.summary.get(tag.name()).cloned().unwrap_or_default()
    }
}

const RESIDUE_LIMIT: usize = 400;

/// Checks every instance in parallel and gathers a sorted report.
pub fn verify<T: TargetAlgebra>(
    instances: &[RelationInstance],
    assignment: &GeneratorAssignment<T>,
) -> Result<VerificationReport> {
    let ev = Evaluator::new(assignment);
    let mut results: Vec<InstanceResult> = instances
        .par_iter()
        .map(|inst| {
            let v = ev.eval(&inst.expr)?;
            let pass = v.is_zero();
            let residue = if pass {
                None
            } else {
                let mut s = v.render();
                if s.len() > RESIDUE_LIMIT {
                    let cut = (0..=RESIDUE_LIMIT).rev().find(|&i| s.is_char_boundary(i)).unwrap_or(0);
                    s.truncate(cut);
                    s.push_str("...");
                }
                Some(s)
            };
            Ok(InstanceResult {
                tag: inst.tag,
                key: inst.key(),
                pass,
                residue,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    results.sort_by(|a, b| (a.tag, &a.key).cmp(&(b.tag, &b.key)));
    let mut summary: BTreeMap<String, TagSummary> = BTreeMap::new();
    for r in &results {
        let e = summary.entry(r.tag.name().to_string()).or_default();
        e.checked += 1;
        if r.pass {
            e.passed += 1;
        }
    }
    let total = results.len();
    let failures = results.into_iter().filter(|r| !r.pass).collect();
    Ok(VerificationReport {
        summary,
        failures,
        total,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{gq_int, RatFun, Var};

    #[test]
    fn missing_symbol_is_reported() {
        let a: GeneratorAssignment<DiffOp> = BTreeMap::new();
        let inst = RelationInstance {
            tag: Tag::HH,
            indices: vec![],
            expr: Expr::gen(Sym::h(0, 1)),
        };
        assert!(matches!(verify(&[inst], &a), Err(Error::MissingSymbol(_))));
    }

    #[test]
    fn commutator_of_shift_and_coordinate() {
        let w = Var::w(1, 1);
        let mut a: GeneratorAssignment<DiffOp> = BTreeMap::new();
        a.insert(Sym::h(0, 1), DiffOp::coeff(RatFun::var(w)));
        a.insert(Sym::b(0, 1), DiffOp::shift(w, 1));
        let inst = RelationInstance {
            tag: Tag::HBNqs,
            indices: vec![],
            expr: Expr::lin(vec![
                (gq_int(1), Expr::bracket(Expr::gen(Sym::h(0, 1)), Expr::gen(Sym::b(0, 1)))),
                (gq_int(1), Expr::gen(Sym::b(0, 1))),
            ]),
        };
        let rep = verify(&[inst], &a).unwrap();
        assert!(rep.all_passed(), "{:?}", rep.failures);
    }
}
