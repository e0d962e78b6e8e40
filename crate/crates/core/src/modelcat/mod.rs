//! Relative categories and finite model categories: exhaustive checks of
//! the model axioms, finite (co)limits, lifting, factorization tables and
//! the homotopy category.

mod homotopy;
mod lifting;
mod limits;
mod verify;

use std::collections::HashMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fincat::FinCat;

pub use homotopy::{ho_hom_count, ho_hom_report, HoHomReport};
pub use lifting::{filler, has_lift, squares, LiftReport, Square};
pub use limits::{
    coequalizer, coproduct, cospan, equalizer, finite_colimit, finite_limit, initial, missing_finite_limit,
    parallel_pair, product, pullback, pushout, terminal, Cone,
};
pub use verify::{validate_model_structure, Axiom, AxiomFailure, ModelReport};

/// A category with a subcategory of weak equivalences.
#[derive(Clone, Debug)]
pub struct RelCat {
    pub cat: Arc<FinCat>,
    weq: Vec<bool>,
    two_out_of_three: bool,
}

fn membership(c: &FinCat, ids: &[usize], what: &str) -> Result<Vec<bool>> {
    let mut v = vec![false; c.num_morphisms()];
    for &m in ids {
        *v.get_mut(m)
            .ok_or_else(|| Error::UnknownMorphism(format!("{what} member {m}")))? = true;
    }
    Ok(v)
}

/// `(f, g)` with `f`, `g` in the class but `g ∘ f` not.
fn composition_gap(c: &FinCat, class: &[bool]) -> Option<(usize, usize)> {
    c.composable_pairs()
        .find(|&(f, g)| class[f] && class[g] && !class[c.compose(g, f).expect("composable")])
}

/// Composable `(f, g)` where two of `f`, `g`, `g ∘ f` are in the class and
/// the third is not.
fn two_out_of_three_gap(c: &FinCat, class: &[bool]) -> Option<(usize, usize)> {
    c.composable_pairs().find(|&(f, g)| {
        let gf = c.compose(g, f).expect("composable");
        [class[f], class[g], class[gf]].iter().filter(|&&b| b).count() == 2
    })
}

/// Checks that `weq` contains the identities and is closed under
/// composition; records whether 2-out-of-3 holds.
pub fn validate_relcat(cat: Arc<FinCat>, weq: &[usize]) -> Result<RelCat> {
    let w = membership(&cat, weq, "weq")?;
    if let Some(o) = cat.objects().find(|&o| !w[cat.identity(o)]) {
        return Err(Error::Model(format!(
            "weak equivalences miss the identity of `{}`",
            cat.object_name(o)
        )));
    }
    if let Some((f, g)) = composition_gap(&cat, &w) {
        return Err(Error::Model(format!(
            "weak equivalences not closed under composition: `{}` ∘ `{}`",
            cat.morphism_name(g),
            cat.morphism_name(f)
        )));
    }
    let two_out_of_three = two_out_of_three_gap(&cat, &w).is_none();
    Ok(RelCat {
        cat,
        weq: w,
        two_out_of_three,
    })
}

impl RelCat {
    pub fn is_weq(&self, m: usize) -> bool {
        self.weq[m]
    }

    pub fn weq_ids(&self) -> Vec<usize> {
        (0..self.weq.len()).filter(|&m| self.weq[m]).collect()
    }

    pub fn two_out_of_three(&self) -> bool {
        self.two_out_of_three
    }

    /// Identities as the weak equivalences.
    pub fn minimal(cat: Arc<FinCat>) -> RelCat {
        let ids: Vec<usize> = cat.objects().map(|o| cat.identity(o)).collect();
        validate_relcat(cat, &ids).expect("identities form a subcategory")
    }
}

/// Which factorization of a morphism is requested.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FactorKind {
    /// A cofibration followed by a trivial fibration.
    CofThenTfib,
    /// A trivial cofibration followed by a fibration.
    TcofThenFib,
}

/// Per morphism `f`, a pair `(first, second)` with `second ∘ first = f`;
/// entries may be missing.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FactorizationTable {
    entries: Vec<Option<(usize, usize)>>,
}

impl FactorizationTable {
    pub fn new(entries: Vec<Option<(usize, usize)>>) -> FactorizationTable {
        FactorizationTable { entries }
    }

    pub fn get(&self, f: usize) -> Option<(usize, usize)> {
        self.entries.get(f).copied().flatten()
    }

    pub fn entries(&self) -> &[Option<(usize, usize)>] {
        &self.entries
    }

    pub fn set(&mut self, f: usize, entry: Option<(usize, usize)>) {
        self.entries[f] = entry;
    }

    /// First factorization with `first ∈ left`, `second ∈ right`, found by
    /// search over middle objects then morphism ids.
    pub fn search(c: &FinCat, left: &[bool], right: &[bool]) -> FactorizationTable {
        let entries = c.morphism_ids().map(|f| search_one(c, f, left, right)).collect();
        FactorizationTable { entries }
    }
}

fn search_one(c: &FinCat, f: usize, left: &[bool], right: &[bool]) -> Option<(usize, usize)> {
    let (a, b) = (c.src(f), c.dst(f));
    c.objects().find_map(|e| {
        c.hom(a, e).iter().find_map(|&g| {
            c.hom(e, b)
                .iter()
                .find(|&&h| left[g] && right[h] && c.compose(h, g) == Some(f))
                .map(|&h| (g, h))
        })
    })
}

/// Membership flags of a morphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub cof: bool,
    pub fib: bool,
    pub weq: bool,
    pub triv_cof: bool,
    pub triv_fib: bool,
}

/// Raw model-structure data on a finite category. Nothing beyond index
/// ranges is checked at construction; see [`validate_model_structure`].
#[derive(Clone, Debug)]
pub struct ModelStructure {
    pub cat: Arc<FinCat>,
    weq: Vec<bool>,
    cof: Vec<bool>,
    fib: Vec<bool>,
    fact_cf: FactorizationTable,
    fact_tcf: FactorizationTable,
}

impl ModelStructure {
    pub fn new(
        cat: Arc<FinCat>,
        weq: &[usize],
        cof: &[usize],
        fib: &[usize],
        fact_cf: FactorizationTable,
        fact_tcf: FactorizationTable,
    ) -> Result<ModelStructure> {
        let n = cat.num_morphisms();
        for (t, name) in [(&fact_cf, "cof_then_tfib"), (&fact_tcf, "tcof_then_fib")] {
            if t.entries.len() != n {
                return Err(Error::Model(format!(
                    "{name} table has {} entries, expected {n}",
                    t.entries.len()
                )));
            }
            for &(g, h) in t.entries.iter().flatten() {
                if g >= n || h >= n {
                    return Err(Error::UnknownMorphism(format!("{name} table entry {g} or {h}")));
                }
            }
        }
        Ok(ModelStructure {
            weq: membership(&cat, weq, "weq")?,
            cof: membership(&cat, cof, "cof")?,
            fib: membership(&cat, fib, "fib")?,
            cat,
            fact_cf,
            fact_tcf,
        })
    }

    /// Classes as given; both tables filled by search, missing entries left
    /// empty.
    pub fn with_searched_factorizations(
        cat: Arc<FinCat>,
        weq: &[usize],
        cof: &[usize],
        fib: &[usize],
    ) -> Result<ModelStructure> {
        let n = cat.num_morphisms();
        let mut m = ModelStructure::new(
            cat,
            weq,
            cof,
            fib,
            FactorizationTable::new(vec![None; n]),
            FactorizationTable::new(vec![None; n]),
        )?;
        m.fact_cf = FactorizationTable::search(&m.cat, &m.cof, &m.triv_fib_flags());
        m.fact_tcf = FactorizationTable::search(&m.cat, &m.triv_cof_flags(), &m.fib);
        Ok(m)
    }

    /// Weak equivalences the isomorphisms, every morphism a cofibration and
    /// a fibration.
    pub fn trivial(cat: Arc<FinCat>) -> ModelStructure {
        let isos: Vec<usize> = cat.morphism_ids().filter(|&m| cat.is_isomorphism(m)).collect();
        let all: Vec<usize> = cat.morphism_ids().collect();
        Self::with_searched_factorizations(cat, &isos, &all, &all).expect("valid ids")
    }

    /// Every morphism a weak equivalence and a fibration, cofibrations the
    /// isomorphisms.
    pub fn coarse(cat: Arc<FinCat>) -> ModelStructure {
        let isos: Vec<usize> = cat.morphism_ids().filter(|&m| cat.is_isomorphism(m)).collect();
        let all: Vec<usize> = cat.morphism_ids().collect();
        Self::with_searched_factorizations(cat, &all, &isos, &all).expect("valid ids")
    }

    fn ids(flags: &[bool]) -> Vec<usize> {
        (0..flags.len()).filter(|&m| flags[m]).collect()
    }

    pub fn weq_ids(&self) -> Vec<usize> {
        Self::ids(&self.weq)
    }

    pub fn cof_ids(&self) -> Vec<usize> {
        Self::ids(&self.cof)
    }

    pub fn fib_ids(&self) -> Vec<usize> {
        Self::ids(&self.fib)
    }

    pub fn is_weq(&self, m: usize) -> bool {
        self.weq[m]
    }

    pub fn is_cof(&self, m: usize) -> bool {
        self.cof[m]
    }

    pub fn is_fib(&self, m: usize) -> bool {
        self.fib[m]
    }

    pub fn is_triv_cof(&self, m: usize) -> bool {
        self.cof[m] && self.weq[m]
    }

    pub fn is_triv_fib(&self, m: usize) -> bool {
        self.fib[m] && self.weq[m]
    }

    pub(crate) fn weq_flags(&self) -> &[bool] {
        &self.weq
    }

    pub(crate) fn cof_flags(&self) -> &[bool] {
        &self.cof
    }

    pub(crate) fn fib_flags(&self) -> &[bool] {
        &self.fib
    }

    pub(crate) fn triv_cof_flags(&self) -> Vec<bool> {
        self.cof.iter().zip(&self.weq).map(|(&c, &w)| c && w).collect()
    }

    pub(crate) fn triv_fib_flags(&self) -> Vec<bool> {
        self.fib.iter().zip(&self.weq).map(|(&f, &w)| f && w).collect()
    }

    pub fn table(&self, kind: FactorKind) -> &FactorizationTable {
        match kind {
            FactorKind::CofThenTfib => &self.fact_cf,
            FactorKind::TcofThenFib => &self.fact_tcf,
        }
    }

    /// Replaces one class; used to build corruptions.
    pub fn with_class(mut self, class: ClassName, ids: &[usize]) -> Result<ModelStructure> {
        let v = membership(&self.cat, ids, "class")?;
        match class {
            ClassName::Weq => self.weq = v,
            ClassName::Cof => self.cof = v,
            ClassName::Fib => self.fib = v,
        }
        Ok(self)
    }

    pub fn with_table(mut self, kind: FactorKind, table: FactorizationTable) -> Result<ModelStructure> {
        if table.entries.len() != self.cat.num_morphisms() {
            return Err(Error::Model("factorization table of the wrong size".into()));
        }
        match kind {
            FactorKind::CofThenTfib => self.fact_cf = table,
            FactorKind::TcofThenFib => self.fact_tcf = table,
        }
        Ok(self)
    }

    /// The opposite model structure: cofibrations and fibrations swap, and
    /// each factorization table is read backwards as the other kind.
    pub fn opposite(&self) -> ModelStructure {
        let flip = |t: &FactorizationTable| {
            FactorizationTable::new(t.entries.iter().map(|e| e.map(|(g, h)| (h, g))).collect())
        };
        ModelStructure {
            cat: Arc::new(self.cat.opposite()),
            weq: self.weq.clone(),
            cof: self.fib.clone(),
            fib: self.cof.clone(),
            fact_cf: flip(&self.fact_tcf),
            fact_tcf: flip(&self.fact_cf),
        }
    }

    pub fn relcat(&self) -> Result<RelCat> {
        validate_relcat(self.cat.clone(), &self.weq_ids())
    }

    pub fn classify(&self, f: usize) -> Result<Classification> {
        if f >= self.cat.num_morphisms() {
            return Err(Error::UnknownMorphism(f.to_string()));
        }
        Ok(Classification {
            cof: self.cof[f],
            fib: self.fib[f],
            weq: self.weq[f],
            triv_cof: self.is_triv_cof(f),
            triv_fib: self.is_triv_fib(f),
        })
    }

    /// `(g, h)` with `h ∘ g = f`, from the table.
    pub fn factor(&self, f: usize, kind: FactorKind) -> Result<(usize, usize)> {
        if f >= self.cat.num_morphisms() {
            return Err(Error::UnknownMorphism(f.to_string()));
        }
        self.table(kind).get(f).ok_or_else(|| {
            Error::Model(format!(
                "no {kind:?} factorization recorded for `{}`",
                self.cat.morphism_name(f)
            ))
        })
    }

    /// Whether the table admits a functorial choice of maps between middle
    /// objects for every commuting square of arrows.
    pub fn is_functorial(&self, kind: FactorKind) -> bool {
        functorial(&self.cat, self.table(kind))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassName {
    Weq,
    Cof,
    Fib,
}

/// Morphisms `(a, b) : f → f'` of the arrow category.
fn arrow_squares(c: &FinCat, f: usize, f2: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for &a in c.hom(c.src(f), c.src(f2)) {
        for &b in c.hom(c.dst(f), c.dst(f2)) {
            if c.compose(f2, a) == c.compose(b, f) {
                out.push((a, b));
            }
        }
    }
    out
}

fn functorial(c: &FinCat, t: &FactorizationTable) -> bool {
    let n = c.num_morphisms();
    if (0..n).any(|f| t.get(f).is_none()) {
        return false;
    }
    // squares (f, f2, a, b) with their candidate middle maps
    let mut squares = Vec::new();
    let mut candidates = Vec::new();
    for f in 0..n {
        let (g, h) = t.get(f).expect("checked");
        for f2 in 0..n {
            let (g2, h2) = t.get(f2).expect("checked");
            for (a, b) in arrow_squares(c, f, f2) {
                let cands: Vec<usize> = c
                    .hom(c.dst(g), c.dst(g2))
                    .iter()
                    .copied()
                    .filter(|&m| c.compose(m, g) == c.compose(g2, a) && c.compose(h2, m) == c.compose(b, h))
                    .collect();
                if cands.is_empty() {
                    return false;
                }
                squares.push((f, f2, a, b));
                candidates.push(cands);
            }
        }
    }
    if candidates.iter().all(|c| c.len() == 1) {
        return true;
    }
    let index: HashMap<ArrowSquare, usize> = squares.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let mut choice = vec![None; squares.len()];
    choose(c, &squares, &index, &candidates, &mut choice, 0)
}

// (f, f', a, b) with f' ∘ a = b ∘ f
type ArrowSquare = (usize, usize, usize, usize);

/// Identity squares get identities, and every composite of assigned squares
/// involving square `i` gets the composite middle map.
fn consistent(
    c: &FinCat,
    squares: &[ArrowSquare],
    index: &HashMap<ArrowSquare, usize>,
    choice: &[Option<usize>],
    i: usize,
) -> bool {
    let (f, f2, a, b) = squares[i];
    let m = choice[i].expect("assigned");
    if f == f2 && c.is_identity(a) && c.is_identity(b) && !c.is_identity(m) {
        return false;
    }
    for (first, &s1) in squares.iter().enumerate() {
        let Some(m1) = choice[first] else { continue };
        for (second, &s2) in squares.iter().enumerate() {
            let Some(m2) = choice[second] else { continue };
            if s1.1 != s2.0 {
                continue;
            }
            let ca = c.compose(s2.2, s1.2).expect("composable");
            let cb = c.compose(s2.3, s1.3).expect("composable");
            let k = index[&(s1.0, s2.1, ca, cb)];
            if first != i && second != i && k != i {
                continue;
            }
            if let Some(mk) = choice[k] {
                if c.compose(m2, m1) != Some(mk) {
                    return false;
                }
            }
        }
    }
    true
}

fn choose(
    c: &FinCat,
    squares: &[ArrowSquare],
    index: &HashMap<ArrowSquare, usize>,
    candidates: &[Vec<usize>],
    choice: &mut Vec<Option<usize>>,
    i: usize,
) -> bool {
    if i == squares.len() {
        return true;
    }
    for &m in &candidates[i] {
        choice[i] = Some(m);
        if consistent(c, squares, index, choice, i) && choose(c, squares, index, candidates, choice, i + 1) {
            return true;
        }
    }
    choice[i] = None;
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain3() -> Arc<FinCat> {
        Arc::new(FinCat::chain(3))
    }

    fn square() -> Arc<FinCat> {
        let names = ["00", "01", "10", "11"];
        Arc::new(FinCat::poset(&names, |a, b| (a & !b) == 0))
    }

    #[test]
    fn relcats() {
        let c = chain3();
        let ids: Vec<usize> = c.objects().map(|o| c.identity(o)).collect();
        assert!(validate_relcat(c.clone(), &ids).unwrap().two_out_of_three());
        let z2 = Arc::new(FinCat::group("*", &["e", "g"], |a, b| a ^ b));
        assert!(validate_relcat(z2.clone(), &[0, 1]).unwrap().two_out_of_three());
        let m01 = c.morphism_id("01").unwrap();
        let m12 = c.morphism_id("12").unwrap();
        let mut w = ids.clone();
        w.extend([m01, m12]);
        assert!(matches!(validate_relcat(c.clone(), &w), Err(Error::Model(_))));
        assert!(matches!(validate_relcat(c, &[0]), Err(Error::Model(_))));
    }

    #[test]
    fn limits_in_a_chain() {
        let c = chain3();
        assert_eq!(product(&c, 1, 2).unwrap().apex, 1);
        assert_eq!(coproduct(&c, 1, 2).unwrap().apex, 2);
        let m01 = c.morphism_id("01").unwrap();
        assert_eq!(pullback(&c, m01, m01).unwrap().apex, 0);
        assert_eq!(equalizer(&c, m01, m01).unwrap().apex, 0);
        assert_eq!(terminal(&c), Some(2));
        assert_eq!(initial(&c), Some(0));
        assert!(missing_finite_limit(&square()).is_none());
        let two = Arc::new(FinCat::discrete(&["a", "b"]));
        assert!(product(&two, 0, 1).is_none());
        assert!(missing_finite_limit(&two).is_some());
    }

    #[test]
    fn lifting() {
        let c = chain3();
        let m01 = c.morphism_id("01").unwrap();
        let id0 = c.identity(0);
        let r = has_lift(&c, m01, m01);
        assert!(!r.holds);
        assert!(has_lift(&c, id0, m01).holds);
        assert!(has_lift(&c, m01, c.identity(1)).holds);
        // i = 0<1 against p = id_0: no square exists, vacuous
        assert_eq!(has_lift(&c, m01, id0).squares_checked, 0);
    }

    #[test]
    fn canonical_structures_are_valid() {
        for c in [chain3(), square()] {
            for m in [ModelStructure::trivial(c.clone()), ModelStructure::coarse(c.clone())] {
                let r = validate_model_structure(&m);
                assert!(r.valid, "{:?}", r.failures);
                assert!(r.functorial_cof_then_tfib && r.functorial_tcof_then_fib);
            }
        }
    }

    #[test]
    fn no_trivial_cofibration_fibration_factorization() {
        let c = chain3();
        let isos: Vec<usize> = c.objects().map(|o| c.identity(o)).collect();
        let all: Vec<usize> = c.morphism_ids().collect();
        let m = ModelStructure::with_searched_factorizations(c.clone(), &isos, &all, &isos).unwrap();
        let r = validate_model_structure(&m);
        assert!(!r.valid);
        assert_eq!(r.failed_axioms(), vec![Axiom::Factorization]);
        assert!(r
            .failures
            .iter()
            .any(|f| f.detail.contains("`01` admits no (trivial cofibration, fibration)")));
    }

    #[test]
    fn classify_and_factor() {
        let c = chain3();
        let m01 = c.morphism_id("01").unwrap();
        let t = ModelStructure::trivial(c.clone());
        let k = t.classify(m01).unwrap();
        assert!(k.cof && k.fib && !k.weq);
        assert!(t.classify(c.identity(0)).unwrap().triv_cof);
        assert_eq!(t.factor(m01, FactorKind::CofThenTfib).unwrap(), (m01, c.identity(1)));
        let co = ModelStructure::coarse(c.clone());
        assert_eq!(co.factor(m01, FactorKind::CofThenTfib).unwrap(), (c.identity(0), m01));
        assert!(t.classify(99).is_err());
    }

    #[test]
    fn homotopy_category_of_canonical_structures() {
        let c = square();
        let t = ModelStructure::trivial(c.clone());
        let co = ModelStructure::coarse(c.clone());
        for a in c.objects() {
            for b in c.objects() {
                assert_eq!(ho_hom_count(&t, a, b).unwrap(), c.hom(a, b).len());
                assert_eq!(ho_hom_count(&co, a, b).unwrap(), 1);
            }
        }
    }

    #[test]
    fn nonfunctorial_table_is_flagged() {
        let c = chain3();
        let all: Vec<usize> = c.morphism_ids().collect();
        let m = ModelStructure::with_searched_factorizations(c.clone(), &all, &all, &all).unwrap();
        assert!(m.is_functorial(FactorKind::CofThenTfib));
        // 01 through 1, 02 through 0: the square (id_0, 12) : 01 → 02 needs 1 → 0
        let m01 = c.morphism_id("01").unwrap();
        let mut table = m.table(FactorKind::CofThenTfib).clone();
        assert_eq!(table.get(m01), Some((c.identity(0), m01)));
        table.set(m01, Some((m01, c.identity(1))));
        let m = m.with_table(FactorKind::CofThenTfib, table).unwrap();
        assert!(!m.is_functorial(FactorKind::CofThenTfib));
    }
}
