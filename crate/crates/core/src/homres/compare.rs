use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fincat::{monotone_of, nerve, truncated_simplex_category, FinCat, Functor, Morphism};
use crate::hammock::{hammock_hom_space, naturality_square_check, nerve_t_to_hom, t_category, NaturalityReport};
use crate::hocolim::{is_left_aspherical, is_right_aspherical, AsphericityReport};
use crate::homres::{
    build_cosimplicial_resolution, build_simplicial_resolution, middle_double_colimit, total_hom_complex,
    CosimplicialResolution, SimplicialResolution,
};
use crate::modelcat::{ho_hom_count, ModelStructure};
use crate::sset::{homology_table, EvidenceReport, TruncSSet};

/// Full subcategory of arrows out of (`under`) or into `base` in the given
/// class, with weak equivalences compatible with them as morphisms.
fn weq_slice(
    m: &ModelStructure,
    base: usize,
    under: bool,
    in_class: impl Fn(usize) -> bool,
) -> (FinCat, Vec<usize>, Vec<usize>) {
    let c = &*m.cat;
    let arrows: Vec<usize> = if under { c.outgoing(base) } else { c.incoming(base) }
        .iter()
        .copied()
        .filter(|&f| in_class(f))
        .collect();
    let far = |f: usize| if under { c.dst(f) } else { c.src(f) };
    let mut morphisms = Vec::new();
    let mut labels = Vec::new();
    let mut identities = vec![0; arrows.len()];
    for (s, &f) in arrows.iter().enumerate() {
        for (t, &g) in arrows.iter().enumerate() {
            for &w in c.hom(far(f), far(g)) {
                let ok = m.is_weq(w)
                    && if under {
                        c.compose(w, f) == Some(g)
                    } else {
                        c.compose(g, w) == Some(f)
                    };
                if ok {
                    if s == t && c.is_identity(w) {
                        identities[s] = morphisms.len();
                    }
                    morphisms.push(Morphism {
                        name: format!("{}:{}>{}", c.morphism_name(w), c.morphism_name(f), c.morphism_name(g)),
                        src: s,
                        dst: t,
                    });
                    labels.push(w);
                }
            }
        }
    }
    let objects = arrows.iter().map(|&f| c.morphism_name(f).to_string()).collect();
    let ms = morphisms.clone();
    let lookup =
        |s: usize, t: usize, w: usize| (0..ms.len()).find(|&i| ms[i].src == s && ms[i].dst == t && labels[i] == w);
    let cat = FinCat::from_parts(objects, morphisms, identities, |g, f| {
        let w = c.compose(labels[g], labels[f]).expect("composable");
        lookup(ms[f].src, ms[g].dst, w).expect("weak equivalences compose")
    });
    (cat, arrows, labels)
}

/// Verdict of [`resolution_asphericity_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResolutionAsphericity {
    pub aspherical: bool,
    /// Objects of the slice category the resolution maps into.
    pub slice_objects: usize,
    pub report: AsphericityReport,
}

fn precondition(m: &FinCat, what: &str, f: usize) -> Error {
    Error::Precondition(format!("`{}` is not {what}", m.morphism_name(f)))
}

/// The functor `Δ≤k^op → (B ↓ W)_c` given by the augmentation of a
/// simplicial resolution, tested for left asphericity through degree `d`.
pub fn resolution_asphericity_check(
    m: &ModelStructure,
    res: &SimplicialResolution,
    d: usize,
) -> Result<ResolutionAsphericity> {
    let c = &m.cat;
    let x = &res.object;
    let (slice, arrows, labels) = weq_slice(m, res.base, true, |f| m.is_triv_cof(f));
    let slice = Arc::new(slice);
    let delta = truncated_simplex_category(x.k());
    let shape = Arc::new(delta.opposite());
    let objects = res
        .augmentation
        .iter()
        .map(|&i| {
            arrows
                .iter()
                .position(|&a| a == i)
                .ok_or_else(|| precondition(c, "a trivial cofibration", i))
        })
        .collect::<Result<Vec<_>>>()?;
    let morphisms = shape
        .morphism_ids()
        .map(|e| {
            let (n2, n) = (shape.src(e), shape.dst(e));
            let w = x.apply(&monotone_of(&delta, e), n2);
            slice
                .hom(objects[n2], objects[n])
                .iter()
                .copied()
                .find(|&s| labels[s] == w)
                .ok_or_else(|| precondition(c, "a weak equivalence under the base", w))
        })
        .collect::<Result<Vec<_>>>()?;
    let functor = Functor::new(shape, slice.clone(), objects, morphisms)?;
    let report = is_left_aspherical(&functor, d)?;
    Ok(ResolutionAsphericity {
        aspherical: report.aspherical,
        slice_objects: slice.num_objects(),
        report,
    })
}

/// The functor `Δ≤k → (W ↓ A)_f` given by the augmentation of a
/// cosimplicial resolution, tested for right asphericity.
pub fn cosimplicial_asphericity_check(
    m: &ModelStructure,
    res: &CosimplicialResolution,
    d: usize,
) -> Result<ResolutionAsphericity> {
    let c = &m.cat;
    let x = &res.object;
    let (slice, arrows, labels) = weq_slice(m, res.base, false, |f| m.is_triv_fib(f));
    let slice = Arc::new(slice);
    let shape = Arc::new(truncated_simplex_category(x.k()));
    let objects = res
        .augmentation
        .iter()
        .map(|&p| {
            arrows
                .iter()
                .position(|&a| a == p)
                .ok_or_else(|| precondition(c, "a trivial fibration", p))
        })
        .collect::<Result<Vec<_>>>()?;
    let morphisms = shape
        .morphism_ids()
        .map(|e| {
            let (n, n2) = (shape.src(e), shape.dst(e));
            let w = x.apply(&monotone_of(&shape, e), n2);
            debug_assert_eq!(c.src(w), x.level(n));
            slice
                .hom(objects[n], objects[n2])
                .iter()
                .copied()
                .find(|&s| labels[s] == w)
                .ok_or_else(|| precondition(c, "a weak equivalence over the base", w))
        })
        .collect::<Result<Vec<_>>>()?;
    let functor = Functor::new(shape, slice.clone(), objects, morphisms)?;
    let report = is_right_aspherical(&functor, d)?;
    Ok(ResolutionAsphericity {
        aspherical: report.aspherical,
        slice_objects: slice.num_objects(),
        report,
    })
}

/// Bounds for [`comparison_report`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CompareOptions {
    pub k: usize,
    pub d: usize,
    pub max_length: usize,
    /// Truncation of the simplex categories indexing the middle colimit.
    pub index_truncation: usize,
    /// Naturality squares per variable.
    pub naturality_samples: usize,
}

impl Default for CompareOptions {
    fn default() -> Self {
        CompareOptions {
            k: 2,
            d: 1,
            max_length: crate::DEFAULT_LENGTH_BOUND,
            index_truncation: 1,
            naturality_samples: 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpaceSummary {
    pub name: String,
    pub level_counts: Vec<usize>,
    pub pi0: usize,
    /// `(free rank, torsion)` in degrees `0..=d`.
    pub homology: Vec<(usize, Vec<i64>)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NaturalitySample {
    pub f: String,
    pub g: String,
    pub report: NaturalityReport,
}

/// The four models of the derived hom-space and how they compare.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComparisonReport {
    pub source: String,
    pub target: String,
    pub options: CompareOptions,
    pub spaces: Vec<SpaceSummary>,
    /// `|Ho(M)(A, B)|` by homotopy classes.
    pub ho_hom: usize,
    pub pi0_agree: bool,
    pub pi0_matches_ho: bool,
    pub homology_agree: bool,
    /// `N(T(A, B)) → hom(A, B)`.
    pub nerve_to_hom: EvidenceReport,
    pub naturality: Vec<NaturalitySample>,
    pub cosimplicial_certificate_ok: bool,
    pub simplicial_certificate_ok: bool,
}

fn summary(name: &str, x: &TruncSSet, d: usize) -> SpaceSummary {
    SpaceSummary {
        name: name.to_string(),
        level_counts: x.level_counts(),
        pi0: x.pi0().count,
        homology: homology_table(x, d).iter().map(|h| h.group()).collect(),
    }
}

/// Builds the total hom-complex of resolutions, the middle double colimit,
/// the nerve of special hammocks and the hammock hom-space for `(a, b)`, and
/// compares their `π0` exactly and their homology through degree `d`.
pub fn comparison_report(m: &ModelStructure, a: usize, b: usize, opts: &CompareOptions) -> Result<ComparisonReport> {
    let c = &*m.cat;
    if opts.d + 1 > opts.k {
        return Err(Error::Degree {
            degree: opts.d,
            k: opts.k,
        });
    }
    let rel = m.relcat()?;
    let cos = build_cosimplicial_resolution(m, a, opts.k)?;
    let sim = build_simplicial_resolution(m, b, opts.k)?;
    let s1 = total_hom_complex(&cos.object, &sim.object)?;
    let s2 = middle_double_colimit(&cos.object, &sim.object, opts.k, opts.index_truncation)?;
    let t = t_category(m, a, b)?;
    let s3 = nerve(&t.cat, opts.k);
    let s4 = hammock_hom_space(&rel, a, b, opts.k, opts.max_length)?;
    let spaces = vec![
        summary("total_hom_complex", &s1, opts.d),
        summary("middle_double_colimit", &s2, opts.d),
        summary("nerve_special_hammocks", &s3, opts.d),
        summary("hammock_hom_space", s4.sset(), opts.d),
    ];
    let ho_hom = ho_hom_count(m, a, b)?;
    let nerve_to_hom = crate::sset::weq_evidence(&nerve_t_to_hom(m, a, b, opts.k, opts.max_length)?.map, opts.d)?;
    let mut pairs = vec![(c.identity(a), c.identity(b))];
    pairs.extend(
        c.incoming(a)
            .iter()
            .filter(|&&f| !c.is_identity(f))
            .take(opts.naturality_samples)
            .map(|&f| (f, c.identity(b))),
    );
    pairs.extend(
        c.outgoing(b)
            .iter()
            .filter(|&&g| !c.is_identity(g))
            .take(opts.naturality_samples)
            .map(|&g| (c.identity(a), g)),
    );
    let naturality = pairs
        .into_iter()
        .map(|(f, g)| {
            Ok(NaturalitySample {
                f: c.morphism_name(f).to_string(),
                g: c.morphism_name(g).to_string(),
                report: naturality_square_check(m, f, g, opts.k, opts.d, opts.max_length)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ComparisonReport {
        source: c.object_name(a).to_string(),
        target: c.object_name(b).to_string(),
        options: *opts,
        pi0_agree: spaces.iter().all(|s| s.pi0 == spaces[0].pi0),
        pi0_matches_ho: spaces.iter().all(|s| s.pi0 == ho_hom),
        homology_agree: spaces.iter().all(|s| s.homology == spaces[0].homology),
        spaces,
        ho_hom,
        nerve_to_hom,
        naturality,
        cosimplicial_certificate_ok: cos.certificate.is_resolution,
        simplicial_certificate_ok: sim.certificate.is_resolution,
    })
}
