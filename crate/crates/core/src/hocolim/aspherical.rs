use serde::Serialize;

use crate::error::{Error, Result};
use crate::fincat::{
    comma_over, comma_under, lax_colim, nerve, nerve_map, oplax_colim, CatDiagram, Comma, Functor, Grothendieck,
};
use crate::sset::{is_homology_point, weq_evidence, EvidenceReport};

/// Three-valued verdict for statements with a checked hypothesis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Holds,
    Fails,
    HypothesisNotEstablished,
}

impl Outcome {
    fn from_bool(b: bool) -> Outcome {
        if b {
            Outcome::Holds
        } else {
            Outcome::Fails
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CommaCheck {
    pub object: String,
    pub comma_objects: usize,
    pub homology_point: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AsphericityReport {
    pub aspherical: bool,
    pub objects: Vec<CommaCheck>,
}

fn asphericity(u: &Functor, d: usize, comma: impl Fn(&Functor, usize) -> Result<Comma>) -> Result<AsphericityReport> {
    let b = &*u.target;
    let objects = b
        .objects()
        .map(|o| {
            let c = comma(u, o)?;
            Ok(CommaCheck {
                object: b.object_name(o).to_string(),
                comma_objects: c.cat.num_objects(),
                homology_point: is_homology_point(&nerve(&c.cat, d + 1), d)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(AsphericityReport {
        aspherical: objects.iter().all(|c| c.homology_point),
        objects,
    })
}

/// Every `(b ↓ u)` has the homology of a point up to degree `d`.
pub fn is_left_aspherical(u: &Functor, d: usize) -> Result<AsphericityReport> {
    asphericity(u, d, comma_under)
}

/// Every `(u ↓ b)` has the homology of a point up to degree `d`.
pub fn is_right_aspherical(u: &Functor, d: usize) -> Result<AsphericityReport> {
    asphericity(u, d, comma_over)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuillenAReport {
    pub outcome: Outcome,
    pub left: AsphericityReport,
    pub right: AsphericityReport,
    pub evidence: Option<EvidenceReport>,
}

/// If `u` is left or right aspherical, `weq_evidence` for `N(u)` truncated
/// at `d + 1`; otherwise the hypothesis is reported as not established.
pub fn quillen_a_evidence(u: &Functor, d: usize) -> Result<QuillenAReport> {
    let left = is_left_aspherical(u, d)?;
    let right = is_right_aspherical(u, d)?;
    if !left.aspherical && !right.aspherical {
        return Ok(QuillenAReport {
            outcome: Outcome::HypothesisNotEstablished,
            left,
            right,
            evidence: None,
        });
    }
    let evidence = weq_evidence(&nerve_map(u, d + 1)?, d)?;
    Ok(QuillenAReport {
        outcome: Outcome::from_bool(evidence.holds),
        left,
        right,
        evidence: Some(evidence),
    })
}

/// `⟨a, x⟩ ↦ ⟨u a, x⟩`, `⟨α, g⟩ ↦ ⟨u α, g⟩` between Grothendieck
/// constructions of `𝒳 ∘ u` and `𝒳`.
pub fn grothendieck_functor(u: &Functor, small: &Grothendieck, big: &Grothendieck) -> Result<Functor> {
    let objects = big.object_index();
    let morphisms = big.morphism_index();
    let object_map: Vec<usize> = small
        .objects
        .iter()
        .map(|&(a, x)| {
            objects
                .get(&(u.on_object(a), x))
                .copied()
                .ok_or_else(|| Error::Functor("object outside the Grothendieck construction".into()))
        })
        .collect::<Result<_>>()?;
    let morphism_map = small
        .morphisms
        .iter()
        .enumerate()
        .map(|(i, &(alpha, g))| {
            let m = small.cat.morphism(i);
            morphisms
                .get(&(object_map[m.src], object_map[m.dst], u.on_morphism(alpha), g))
                .copied()
                .ok_or_else(|| Error::Functor("morphism outside the Grothendieck construction".into()))
        })
        .collect::<Result<_>>()?;
    Functor::new(small.cat.clone(), big.cat.clone(), object_map, morphism_map)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CofinalityAsphericityReport {
    pub outcome: Outcome,
    pub hypothesis: AsphericityReport,
    /// Left asphericity of the induced functor of lax colimits.
    pub lax: Option<AsphericityReport>,
    /// Right asphericity of the induced functor of oplax colimits.
    pub oplax: Option<AsphericityReport>,
}

/// For left aspherical `u : A → B` and `𝒳 : B → Cat`, checks the induced
/// functors of lax (resp. oplax) colimits are left (resp. right) aspherical.
pub fn cofinality_asphericity_evidence(u: &Functor, x: &CatDiagram, d: usize) -> Result<CofinalityAsphericityReport> {
    let hypothesis = is_left_aspherical(u, d)?;
    if !hypothesis.aspherical {
        return Ok(CofinalityAsphericityReport {
            outcome: Outcome::HypothesisNotEstablished,
            hypothesis,
            lax: None,
            oplax: None,
        });
    }
    let xu = x.pull_back(u)?;
    let lax = is_left_aspherical(&grothendieck_functor(u, &lax_colim(&xu)?, &lax_colim(x)?)?, d)?;
    let oplax = is_right_aspherical(&grothendieck_functor(u, &oplax_colim(&xu)?, &oplax_colim(x)?)?, d)?;
    Ok(CofinalityAsphericityReport {
        outcome: Outcome::from_bool(lax.aspherical && oplax.aspherical),
        hypothesis,
        lax: Some(lax),
        oplax: Some(oplax),
    })
}
