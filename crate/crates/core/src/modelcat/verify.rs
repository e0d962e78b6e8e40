use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::fincat::FinCat;
use crate::modelcat::{
    composition_gap, has_lift, missing_finite_limit, search_one, two_out_of_three_gap, FactorKind, ModelStructure,
};

/// The axiom a failure is charged to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Axiom {
    #[serde(rename = "MC1")]
    Limits,
    #[serde(rename = "MC2")]
    TwoOutOfThree,
    #[serde(rename = "MC3")]
    Retracts,
    #[serde(rename = "MC4")]
    Lifting,
    #[serde(rename = "MC5")]
    Factorization,
    #[serde(rename = "isomorphisms")]
    Isomorphisms,
    #[serde(rename = "composition")]
    Composition,
}

impl Axiom {
    pub fn code(self) -> &'static str {
        match self {
            Axiom::Limits => "MC1",
            Axiom::TwoOutOfThree => "MC2",
            Axiom::Retracts => "MC3",
            Axiom::Lifting => "MC4",
            Axiom::Factorization => "MC5",
            Axiom::Isomorphisms => "isomorphisms",
            Axiom::Composition => "composition",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self {
            Axiom::Limits => "finite limits and colimits",
            Axiom::TwoOutOfThree => "2-out-of-3",
            Axiom::Retracts => "closure under retracts",
            Axiom::Lifting => "lifting",
            Axiom::Factorization => "factorization",
            Axiom::Isomorphisms => "classes contain isomorphisms",
            Axiom::Composition => "classes closed under composition",
        };
        write!(f, "{} ({what})", self.code())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomFailure {
    pub axiom: Axiom,
    pub detail: String,
}

impl fmt::Display for AxiomFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.axiom, self.detail)
    }
}

/// Outcome of [`validate_model_structure`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModelReport {
    pub valid: bool,
    pub failure_count: usize,
    /// At most [`ModelReport::MAX_LISTED`] failures, in check order.
    pub failures: Vec<AxiomFailure>,
    pub weq_two_out_of_three: bool,
    pub functorial_cof_then_tfib: bool,
    pub functorial_tcof_then_fib: bool,
}

impl ModelReport {
    pub const MAX_LISTED: usize = 50;

    /// Axioms with at least one failure, sorted.
    pub fn failed_axioms(&self) -> Vec<Axiom> {
        let mut v: Vec<Axiom> = self.failures.iter().map(|f| f.axiom).collect();
        v.sort();
        v.dedup();
        v
    }
}

struct Collector {
    count: usize,
    failures: Vec<AxiomFailure>,
}

impl Collector {
    fn push(&mut self, axiom: Axiom, detail: String) {
        self.count += 1;
        if self.failures.len() < ModelReport::MAX_LISTED {
            self.failures.push(AxiomFailure { axiom, detail });
        }
    }
}

const CLASSES: [&str; 3] = ["weak equivalences", "cofibrations", "fibrations"];

/// `f` is a retract of `g`: arrow-category maps `f → g → f` composing to
/// the identity.
fn is_retract(c: &FinCat, f: usize, g: usize) -> bool {
    let (a, b) = (c.src(f), c.dst(f));
    let (x, y) = (c.src(g), c.dst(g));
    let sections = |from: usize, to: usize| -> Vec<(usize, usize)> {
        let id = c.identity(from);
        c.hom(from, to)
            .iter()
            .flat_map(|&s| c.hom(to, from).iter().map(move |&r| (s, r)))
            .filter(|&(s, r)| c.compose(r, s) == Some(id))
            .collect()
    };
    let top = sections(a, x);
    let bottom = sections(b, y);
    top.iter().any(|&(s, r)| {
        bottom
            .iter()
            .any(|&(s2, r2)| c.compose(g, s) == c.compose(s2, f) && c.compose(f, r) == c.compose(r2, g))
    })
}

/// Exhaustive check of the model axioms, citing every failure.
pub fn validate_model_structure(m: &ModelStructure) -> ModelReport {
    let c: &Arc<FinCat> = &m.cat;
    let name = |f: usize| c.morphism_name(f).to_string();
    let mut out = Collector {
        count: 0,
        failures: Vec::new(),
    };
    if let Some(why) = missing_finite_limit(c) {
        out.push(Axiom::Limits, why);
    }
    let classes: [&[bool]; 3] = [m.weq_flags(), m.cof_flags(), m.fib_flags()];
    for (class, label) in classes.iter().zip(CLASSES) {
        for f in c.morphism_ids().filter(|&f| c.is_isomorphism(f) && !class[f]) {
            out.push(
                Axiom::Isomorphisms,
                format!("isomorphism `{}` is not among the {label}", name(f)),
            );
        }
        if let Some((f, g)) = composition_gap(c, class) {
            out.push(
                Axiom::Composition,
                format!("{label}: `{}` ∘ `{}` is not in the class", name(g), name(f)),
            );
        }
    }
    if let Some((f, g)) = two_out_of_three_gap(c, m.weq_flags()) {
        out.push(
            Axiom::TwoOutOfThree,
            format!(
                "exactly two of `{}`, `{}` and their composite are weak equivalences",
                name(f),
                name(g)
            ),
        );
    }
    for (class, label) in classes.iter().zip(CLASSES) {
        for f in c.morphism_ids().filter(|&f| !class[f]) {
            if let Some(g) = c.morphism_ids().find(|&g| g != f && class[g] && is_retract(c, f, g)) {
                out.push(
                    Axiom::Retracts,
                    format!("`{}` is a retract of `{}` but not among the {label}", name(f), name(g)),
                );
            }
        }
    }
    let tcof = m.triv_cof_flags();
    let tfib = m.triv_fib_flags();
    let lifting = [
        (m.cof_flags(), &tfib[..], "cofibration", "trivial fibration"),
        (&tcof[..], m.fib_flags(), "trivial cofibration", "fibration"),
    ];
    for (left, right, ln, rn) in lifting {
        for i in c.morphism_ids().filter(|&i| left[i]) {
            for p in c.morphism_ids().filter(|&p| right[p]) {
                let r = has_lift(c, i, p);
                if let Some(sq) = r.counterexample {
                    out.push(
                        Axiom::Lifting,
                        format!(
                            "{ln} `{}` has no lift against {rn} `{}` in the square (`{}`, `{}`)",
                            name(i),
                            name(p),
                            name(sq.top),
                            name(sq.bottom)
                        ),
                    );
                }
            }
        }
    }
    let tables = [
        (
            FactorKind::CofThenTfib,
            m.cof_flags(),
            &tfib[..],
            "(cofibration, trivial fibration)",
        ),
        (
            FactorKind::TcofThenFib,
            &tcof[..],
            m.fib_flags(),
            "(trivial cofibration, fibration)",
        ),
    ];
    for (kind, left, right, what) in tables {
        for f in c.morphism_ids() {
            match m.table(kind).get(f) {
                Some((g, h)) => {
                    if c.compose(h, g) != Some(f) || !left[g] || !right[h] {
                        out.push(
                            Axiom::Factorization,
                            format!(
                                "table entry (`{}`, `{}`) for `{}` is not a {what} factorization",
                                name(g),
                                name(h),
                                name(f)
                            ),
                        );
                    }
                }
                None => {
                    let detail = if search_one(c, f, left, right).is_some() {
                        format!("table has no {what} factorization of `{}`", name(f))
                    } else {
                        format!("`{}` admits no {what} factorization", name(f))
                    };
                    out.push(Axiom::Factorization, detail);
                }
            }
        }
    }
    ModelReport {
        valid: out.count == 0,
        failure_count: out.count,
        failures: out.failures,
        weq_two_out_of_three: two_out_of_three_gap(c, m.weq_flags()).is_none(),
        functorial_cof_then_tfib: m.is_functorial(FactorKind::CofThenTfib),
        functorial_tcof_then_fib: m.is_functorial(FactorKind::TcofThenFib),
    }
}
