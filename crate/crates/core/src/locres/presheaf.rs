use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fincat::FinCat;
use crate::hammock::{bound_flags, hammock_hom_space, BoundFlags};
use crate::hocolim::SSetDiagram;
use crate::locres::localize::loc_hom_space;
use crate::modelcat::RelCat;
use crate::sset::{homology_table, kan_check, weq_evidence, EvidenceReport, SSetMap, TruncSSet};

/// A functor `C^op → sSet`, stored as a diagram over `C^op` (which has the
/// same morphism ids as `C`).
#[derive(Clone, Debug)]
pub struct SimpPresheaf {
    pub cat: Arc<FinCat>,
    diagram: SSetDiagram,
}

impl SimpPresheaf {
    /// `maps[f]` for `f : a → b` goes from `values[b]` to `values[a]`.
    pub fn new(cat: Arc<FinCat>, values: Vec<Arc<TruncSSet>>, maps: Vec<SSetMap>) -> Result<SimpPresheaf> {
        let diagram = SSetDiagram::new(Arc::new(cat.opposite()), values, maps)?;
        Ok(SimpPresheaf { cat, diagram })
    }

    pub fn constant(cat: Arc<FinCat>, value: TruncSSet) -> SimpPresheaf {
        let diagram = SSetDiagram::constant(Arc::new(cat.opposite()), value);
        SimpPresheaf { cat, diagram }
    }

    pub fn value(&self, c: usize) -> &Arc<TruncSSet> {
        self.diagram.value(c)
    }

    pub fn map(&self, f: usize) -> &SSetMap {
        self.diagram.map(f)
    }

    pub fn k(&self) -> usize {
        self.diagram.k()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KanClause {
    pub object: String,
    pub kan: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeqClause {
    pub morphism: String,
    pub evidence: EvidenceReport,
}

/// The two local-fibrancy clauses at finite level.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FibrancyReport {
    pub objectwise_kan: Vec<KanClause>,
    pub fibrant: bool,
    /// Non-identity weak equivalences only.
    pub weq_clauses: Vec<WeqClause>,
    pub sends_weqs_to_weqs: bool,
    /// No non-identity weak equivalence to test.
    pub weq_clause_vacuous: bool,
    pub holds: bool,
}

/// Horn filling up to dimension `d` at every object, and homology evidence
/// that every weak equivalence goes to a weak homotopy equivalence.
pub fn presheaf_local_fibrancy_evidence(p: &SimpPresheaf, r: &RelCat, d: usize) -> Result<FibrancyReport> {
    if *p.cat != *r.cat {
        return Err(Error::Precondition(
            "presheaf and relative category have different categories".into(),
        ));
    }
    let c = &*r.cat;
    let objectwise_kan = c
        .objects()
        .map(|o| {
            Ok(KanClause {
                object: c.object_name(o).to_string(),
                kan: kan_check(p.value(o), d)?.passed(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let weq_clauses = r
        .weq_ids()
        .into_iter()
        .filter(|&w| !c.is_identity(w))
        .map(|w| {
            Ok(WeqClause {
                morphism: c.morphism_name(w).to_string(),
                evidence: weq_evidence(p.map(w), d)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let fibrant = objectwise_kan.iter().all(|k| k.kan);
    let sends = weq_clauses.iter().all(|w| w.evidence.holds);
    Ok(FibrancyReport {
        fibrant,
        sends_weqs_to_weqs: sends,
        weq_clause_vacuous: weq_clauses.is_empty(),
        holds: fibrant && sends,
        objectwise_kan,
        weq_clauses,
    })
}

/// Exact `π0` and homology comparison of the hammock and
/// simplicial-localisation hom-spaces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HammockVsLoc {
    pub hammock_levels: Vec<usize>,
    pub loc_levels: Vec<usize>,
    pub hammock_pi0: usize,
    pub loc_pi0: usize,
    pub pi0_agree: bool,
    /// Degrees `≤ d` whose homology groups differ.
    pub homology_mismatches: Vec<usize>,
    pub hammock_bounds: BoundFlags,
    /// The localisation levels did not change when the bound was raised.
    pub loc_stable: bool,
    pub holds: bool,
}

pub fn hammock_vs_loc_evidence(
    r: &RelCat,
    a: usize,
    b: usize,
    k: usize,
    max_length: usize,
    d: usize,
) -> Result<HammockVsLoc> {
    if d + 1 > k {
        return Err(Error::Degree { degree: d, k });
    }
    let h = hammock_hom_space(r, a, b, k, max_length)?;
    let l = loc_hom_space(r, a, b, k, max_length)?;
    let hb = bound_flags(r, &h)?;
    let (hx, lx) = (h.sset(), l.sset());
    let (hh, lh) = (homology_table(hx, d), homology_table(lx, d));
    let homology_mismatches: Vec<usize> = (0..=d).filter(|&i| hh[i].group() != lh[i].group()).collect();
    let (hp, lp) = (hx.pi0().count, lx.pi0().count);
    Ok(HammockVsLoc {
        hammock_levels: hx.level_counts(),
        loc_levels: lx.level_counts(),
        hammock_pi0: hp,
        loc_pi0: lp,
        pi0_agree: hp == lp,
        holds: hp == lp && homology_mismatches.is_empty(),
        homology_mismatches,
        hammock_bounds: hb,
        loc_stable: l.stable,
    })
}
