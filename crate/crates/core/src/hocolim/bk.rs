use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fincat::{chains, lax_colim, nerve, oplax_colim, CatDiagram, Chain, FinCat};
use crate::hocolim::{DiagramMap, SSetDiagram};
use crate::sset::{
    diagonal, weq_evidence, weq_evidence_pair, BiTruncSSet, EvidenceReport, Indexed, SSetMap, TruncSSet,
};

/// A simplex `⟨f_n, …, f_1, x⟩` of a Bousfield–Kan colimit. For the plain
/// colimit `chain` is `c_0 → ⋯ → c_n` in the shape and `x ∈ X(c_0)_n`; for
/// the dual one `chain` lives in the opposite shape (so `f_i : c_i → c_{i-1}`
/// in the shape) and `x ∈ X(c_n)_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BkSimplex {
    pub chain: Chain,
    pub x: usize,
}

fn check_k(d: &SSetDiagram, k: usize) -> Result<()> {
    if k > d.k() {
        return Err(Error::TruncationMismatch {
            expected: d.k(),
            found: k,
        });
    }
    Ok(())
}

fn keys(d: &SSetDiagram, shape: &FinCat, k: usize, base: impl Fn(&Chain) -> usize) -> Vec<Vec<BkSimplex>> {
    (0..=k)
        .map(|n| {
            chains(shape, n)
                .into_iter()
                .flat_map(|chain| {
                    let len = d.value(base(&chain)).len(n);
                    (0..len).map(move |x| BkSimplex {
                        chain: chain.clone(),
                        x,
                    })
                })
                .collect()
        })
        .collect()
}

fn label(d: &SSetDiagram, shape: &FinCat, s: &BkSimplex, base: usize) -> String {
    let n = s.chain.arrows.len();
    format!("{}; {}", s.chain.label(shape), d.value(base).label(n, s.x))
}

/// The Bousfield–Kan colimit, with its simplices as keys.
pub fn bk_colim_indexed(d: &SSetDiagram, k: usize) -> Result<Indexed<BkSimplex>> {
    check_k(d, k)?;
    let c = &*d.shape;
    let keys = keys(d, c, k, |ch| ch.start);
    let face = |n: usize, i: usize, s: &BkSimplex| {
        let x = if i == 0 {
            let f1 = s.chain.arrows[0];
            d.value(c.dst(f1)).face(n, 0, d.map(f1).apply(n, s.x))
        } else {
            d.value(s.chain.start).face(n, i, s.x)
        };
        BkSimplex {
            chain: s.chain.face(c, i),
            x,
        }
    };
    let degen = |n: usize, i: usize, s: &BkSimplex| BkSimplex {
        chain: s.chain.degen(c, i),
        x: d.value(s.chain.start).degen(n, i, s.x),
    };
    TruncSSet::from_keys(k, keys, face, degen, |s| label(d, c, s, s.chain.start))
}

pub fn bk_colim(d: &SSetDiagram, k: usize) -> Result<TruncSSet> {
    Ok(bk_colim_indexed(d, k)?.sset)
}

/// The dual Bousfield–Kan colimit, with its simplices as keys.
pub fn dual_bk_colim_indexed(d: &SSetDiagram, k: usize) -> Result<Indexed<BkSimplex>> {
    check_k(d, k)?;
    let c = &*d.shape;
    let op = c.opposite();
    let keys = keys(d, &op, k, |ch| ch.end(&op));
    let face = |n: usize, i: usize, s: &BkSimplex| {
        let cn = s.chain.end(&op);
        let x = if i == n {
            let fnn = s.chain.arrows[n - 1];
            // f_n : c_n → c_{n-1} in the shape
            d.value(c.dst(fnn)).face(n, n, d.map(fnn).apply(n, s.x))
        } else {
            d.value(cn).face(n, i, s.x)
        };
        BkSimplex {
            chain: s.chain.face(&op, i),
            x,
        }
    };
    let degen = |n: usize, i: usize, s: &BkSimplex| BkSimplex {
        chain: s.chain.degen(&op, i),
        x: d.value(s.chain.end(&op)).degen(n, i, s.x),
    };
    TruncSSet::from_keys(k, keys, face, degen, |s| label(d, &op, s, s.chain.end(&op)))
}

pub fn dual_bk_colim(d: &SSetDiagram, k: usize) -> Result<TruncSSet> {
    Ok(dual_bk_colim_indexed(d, k)?.sset)
}

fn induced(
    a: Indexed<BkSimplex>,
    b: Indexed<BkSimplex>,
    component: impl Fn(&Chain) -> usize,
    phi: &DiagramMap,
) -> Result<SSetMap> {
    let levels = a
        .keys
        .iter()
        .enumerate()
        .map(|(n, level)| {
            level
                .iter()
                .map(|s| {
                    let image = BkSimplex {
                        chain: s.chain.clone(),
                        x: phi.component(component(&s.chain)).apply(n, s.x),
                    };
                    b.index[n][&image]
                })
                .collect()
        })
        .collect();
    SSetMap::new(Arc::new(a.sset), Arc::new(b.sset), levels)
}

/// `colim φ : colim X → colim Y`.
pub fn bk_colim_map(phi: &DiagramMap, k: usize) -> Result<SSetMap> {
    let a = bk_colim_indexed(&phi.source, k)?;
    let b = bk_colim_indexed(&phi.target, k)?;
    induced(a, b, |ch| ch.start, phi)
}

/// The dual colimit of `φ`.
pub fn dual_bk_colim_map(phi: &DiagramMap, k: usize) -> Result<SSetMap> {
    let op = phi.source.shape.opposite();
    let a = dual_bk_colim_indexed(&phi.source, k)?;
    let b = dual_bk_colim_indexed(&phi.target, k)?;
    induced(a, b, |ch| ch.end(&op), phi)
}

/// Checks that `⟨f_n, …, f_1, x⟩ ↦ ⟨x, f_1, …, f_n⟩` is a simplicial
/// isomorphism from the colimit of the objectwise opposite diagram to the
/// opposite of the dual colimit.
pub fn duality_check(d: &SSetDiagram, k: usize) -> Result<bool> {
    let c = &*d.shape;
    let bk = bk_colim_indexed(&d.opposite(), k)?;
    let dual = dual_bk_colim_indexed(d, k)?;
    let mut levels = Vec::with_capacity(k + 1);
    for (n, level) in bk.keys.iter().enumerate() {
        let mut image = Vec::with_capacity(level.len());
        for s in level {
            let reversed = BkSimplex {
                chain: Chain {
                    start: s.chain.end(c),
                    arrows: s.chain.arrows.iter().rev().copied().collect(),
                },
                x: s.x,
            };
            match dual.index[n].get(&reversed) {
                Some(&t) => image.push(t),
                None => return Ok(false),
            }
        }
        levels.push(image);
    }
    match SSetMap::new(Arc::new(bk.sset), Arc::new(dual.sset.opposite()), levels) {
        Ok(f) => Ok(f.is_levelwise_bijection()),
        Err(Error::SSetMap(_)) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Two homology-level comparisons against a common reference.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComparisonReport {
    pub holds: bool,
    pub bk: EvidenceReport,
    pub dual: EvidenceReport,
}

impl ComparisonReport {
    fn new(bk: EvidenceReport, dual: EvidenceReport) -> ComparisonReport {
        ComparisonReport {
            holds: bk.holds && dual.holds,
            bk,
            dual,
        }
    }
}

/// Both colimits of the row diagram `[p] ↦ X_{p,•}` against `diag X`, up to
/// degree `d`. The comparison map is not constructed.
pub fn bk_vs_diagonal_evidence(x: &BiTruncSSet, d: usize) -> Result<ComparisonReport> {
    let rows = SSetDiagram::rows_of(x)?;
    let diag = diagonal(x);
    let bk = bk_colim(&rows, x.k())?;
    let dual = dual_bk_colim(&rows, x.k())?;
    Ok(ComparisonReport::new(
        weq_evidence_pair(&bk, &diag, d)?,
        weq_evidence_pair(&dual, &diag, d)?,
    ))
}

/// Outcome of testing that colimits of an objectwise equivalence are
/// equivalences.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvarianceReport {
    pub objectwise: bool,
    pub holds: bool,
    pub bk: EvidenceReport,
    pub dual: EvidenceReport,
}

/// `weq_evidence` for both induced maps of colimits, truncated at the
/// common truncation of the diagrams.
pub fn homotopical_invariance_check(phi: &DiagramMap, d: usize) -> Result<InvarianceReport> {
    let k = phi.source.k();
    let shape = &phi.source.shape;
    let mut objectwise = true;
    for c in shape.objects() {
        objectwise &= weq_evidence(phi.component(c), d)?.holds;
    }
    let bk = weq_evidence(&bk_colim_map(phi, k)?, d)?;
    let dual = weq_evidence(&dual_bk_colim_map(phi, k)?, d)?;
    Ok(InvarianceReport {
        objectwise,
        holds: bk.holds && dual.holds,
        bk,
        dual,
    })
}

/// Colimits of `N ∘ 𝒳` against the nerves of the lax and oplax colimits,
/// truncated at `d + 1`.
pub fn thomason_evidence(diagram: &CatDiagram, d: usize) -> Result<ComparisonReport> {
    let k = d + 1;
    let nx = SSetDiagram::nerve_of(diagram, k)?;
    let lax = nerve(&lax_colim(diagram)?.cat, k);
    let oplax = nerve(&oplax_colim(diagram)?.cat, k);
    Ok(ComparisonReport::new(
        weq_evidence_pair(&bk_colim(&nx, k)?, &lax, d)?,
        weq_evidence_pair(&dual_bk_colim(&nx, k)?, &oplax, d)?,
    ))
}
