use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use anyhow::{Context, Result};
use serde::Serialize;
use serde_json::{json, Value};

use hammock_core::fincat::{has_left_adjoint, has_right_adjoint, lax_colim, nerve, oplax_colim, FinCat};
use hammock_core::hammock::{bound_flags, hammock_hom_space, nerve_t_to_hom, t_category, Hammock};
use hammock_core::hocolim::{
    bk_colim, dual_bk_colim, duality_check, quillen_a_evidence, thomason_evidence, Outcome, SSetDiagram,
};
use hammock_core::homres::{
    build_cosimplicial_resolution, build_simplicial_resolution, comparison_report, cosimplicial_asphericity_check,
    derived_hom, resolution_asphericity_check, CompareOptions,
};
use hammock_core::locres::{hammock_vs_loc_evidence, loc_hom_space, presheaf_local_fibrancy_evidence};
use hammock_core::modelcat::{ho_hom_report, validate_model_structure, ModelStructure, RelCat};
use hammock_core::sset::{homology_table, weq_evidence, HomologyReport, TruncSSet};
use hammock_core::{corpus, io, Error};

use crate::report::{Report, Strength};
use crate::{corpus_dir, Command, Failure};

/// The kind of a file, read from its top-level fields.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
enum FileKind {
    Category,
    RelativeCategory,
    ModelStructure,
    SimplicialSet,
    Functor,
    CategoryDiagram,
    SSetDiagram,
    Presheaf,
}

fn file_kind(path: &Path) -> Result<FileKind> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| Error::Parse {
        context: path.display().to_string(),
        message: e.to_string(),
    })?;
    let has = |key: &str| v.get(key).is_some();
    Ok(if has("levels") {
        FileKind::SimplicialSet
    } else if has("cof") {
        FileKind::ModelStructure
    } else if has("weq") {
        FileKind::RelativeCategory
    } else if has("fibres") {
        FileKind::CategoryDiagram
    } else if has("shape") {
        FileKind::SSetDiagram
    } else if has("category") {
        FileKind::Presheaf
    } else if has("source") {
        FileKind::Functor
    } else {
        FileKind::Category
    })
}

/// Model structures give their weak equivalences; plain categories get the
/// identities.
fn load_relcat_any(path: &Path) -> Result<RelCat> {
    Ok(match file_kind(path)? {
        FileKind::ModelStructure => io::load_model(path)?.relcat()?,
        FileKind::RelativeCategory => io::load_relcat(path)?,
        _ => RelCat::minimal(Arc::new(io::load_category(path)?)),
    })
}

fn object(c: &FinCat, name: &str) -> Result<usize> {
    Ok(c.object_id(name)?)
}

fn sset_value(x: &TruncSSet) -> Result<Value> {
    Ok(serde_json::from_str(&io::sset_to_json(x)?)?)
}

fn homology_rows(x: &TruncSSet, d: usize) -> Vec<HomologyReport> {
    homology_table(x, d.min(x.k().saturating_sub(1)))
}

#[derive(Serialize)]
struct SpaceInfo {
    level_counts: Vec<usize>,
    pi0: usize,
    homology: Vec<HomologyReport>,
}

fn space_info(x: &TruncSSet, d: usize) -> SpaceInfo {
    SpaceInfo {
        level_counts: x.level_counts(),
        pi0: x.pi0().count,
        homology: homology_rows(x, d),
    }
}

/// Name-based grid rendering of a hammock.
fn hammock_grid(c: &FinCat, h: &Hammock) -> Value {
    let name = |m: &usize| c.morphism_name(*m).to_string();
    let rows: Vec<Vec<String>> = (0..h.horizontal.len())
        .map(|i| {
            (0..=h.length())
                .map(|j| c.object_name(h.node(c, i, j)).to_string())
                .collect()
        })
        .collect();
    json!({
        "directions": h.directions,
        "rows": rows,
        "arrows": h.horizontal.iter().map(|r| r.iter().map(name).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "verticals": h.vertical.iter().map(|r| r.iter().map(name).collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}

fn names(c: &FinCat, ids: &[usize]) -> Vec<String> {
    ids.iter().map(|&m| c.morphism_name(m).to_string()).collect()
}

pub(crate) fn dispatch(command: &Command, file: Option<&Path>, r: &mut Report) -> Result<(), Failure> {
    let result = match (command, file) {
        (Command::Corpus { export, verify }, _) => corpus_command(export.as_deref(), *verify, r),
        (Command::Validate { .. }, Some(f)) => validate(f, r),
        (Command::Nerve { .. }, Some(f)) => nerve_command(f, r),
        (Command::Homology { .. }, Some(f)) => homology_command(f, r),
        (Command::BkColim { .. }, Some(f)) => bk_colim_command(f, r),
        (Command::Grothendieck { .. }, Some(f)) => grothendieck(f, r),
        (Command::Aspherical { .. }, Some(f)) => aspherical(f, r),
        (Command::ModelCheck { .. }, Some(f)) => model_check(f, r),
        (Command::HammockHom { pair, .. }, Some(f)) => hammock_hom(f, &pair.a, &pair.b, r),
        (Command::SpecialHammocks { pair, .. }, Some(f)) => special_hammocks(f, &pair.a, &pair.b, r),
        (Command::Resolve { a, .. }, Some(f)) => resolve(f, a, r),
        (Command::DerivedHom { pair, .. }, Some(f)) => derived_hom_command(f, &pair.a, &pair.b, r),
        (
            Command::Compare {
                pair, index_truncation, ..
            },
            Some(f),
        ) => compare(f, &pair.a, &pair.b, *index_truncation, r),
        (
            Command::LocHom {
                pair,
                level,
                word_bound,
                compare,
                ..
            },
            Some(f),
        ) => loc_hom(f, &pair.a, &pair.b, *level, *word_bound, *compare, r),
        (Command::PresheafCheck { .. }, Some(f)) => presheaf_check(f, r),
        (_, None) => unreachable!("every command but corpus takes a file"),
    };
    match result.map_err(Failure::from) {
        Err(Failure::Bound(m)) => {
            r.exhausted(m);
            Ok(())
        }
        other => other,
    }
}

fn validate(path: &Path, r: &mut Report) -> Result<()> {
    let kind = file_kind(path)?;
    r.artifact("kind", kind);
    match kind {
        FileKind::Category => {
            let c = io::load_category(path)?;
            r.artifact("objects", c.num_objects());
            r.artifact("morphisms", c.num_morphisms());
        }
        FileKind::RelativeCategory => {
            let w = io::load_relcat(path)?;
            r.artifact("weak_equivalences", names(&w.cat, &w.weq_ids()));
            r.artifact("two_out_of_three", w.two_out_of_three());
        }
        FileKind::ModelStructure => {
            let m = io::load_model(path)?;
            r.artifact("objects", m.cat.num_objects());
            r.artifact("morphisms", m.cat.num_morphisms());
        }
        FileKind::SimplicialSet => {
            let x = io::load_sset(path)?;
            r.artifact("level_counts", x.level_counts());
            r.verdict("simplicial_identities", x.validate().passed(), Strength::Exact);
        }
        FileKind::Functor => {
            let u = io::load_functor(path)?;
            r.artifact("has_left_adjoint", has_left_adjoint(&u));
            r.artifact("has_right_adjoint", has_right_adjoint(&u));
        }
        FileKind::CategoryDiagram => {
            let d = io::load_cat_diagram(path)?;
            r.artifact("shape_objects", d.shape.num_objects());
        }
        FileKind::SSetDiagram => {
            let d = io::load_sset_diagram(path)?;
            r.artifact("truncation", d.k());
        }
        FileKind::Presheaf => {
            let (p, _) = io::load_presheaf(path)?;
            r.artifact("truncation", p.k());
        }
    }
    r.verdict("well_formed", true, Strength::Exact);
    Ok(())
}

fn nerve_command(path: &Path, r: &mut Report) -> Result<()> {
    let c = io::load_any_category(path)?;
    let x = nerve(&c, r.config.k);
    r.artifact("level_counts", x.level_counts());
    r.artifact("sset", sset_value(&x)?);
    r.verdict("simplicial_identities", x.validate().passed(), Strength::Exact);
    Ok(())
}

fn homology_command(path: &Path, r: &mut Report) -> Result<()> {
    let x = match file_kind(path)? {
        FileKind::SimplicialSet => io::load_sset(path)?,
        _ => nerve(&io::load_any_category(path)?, r.config.k),
    };
    let d = r.config.degree;
    if d + 1 > x.k() {
        r.warn(format!(
            "degree {d} is at or above the truncation {} and unreliable",
            x.k()
        ));
    }
    r.artifact("homology", homology_table(&x, d));
    r.artifact("level_counts", x.level_counts());
    Ok(())
}

fn bk_colim_command(path: &Path, r: &mut Report) -> Result<()> {
    let (k, d) = (r.config.k, r.config.degree);
    let diagram = match file_kind(path)? {
        FileKind::CategoryDiagram => SSetDiagram::nerve_of(&io::load_cat_diagram(path)?, k)?,
        _ => io::load_sset_diagram(path)?,
    };
    let k = k.min(diagram.k());
    let bk = bk_colim(&diagram, k)?;
    let dual = dual_bk_colim(&diagram, k)?;
    r.artifact("bk_colim", space_info(&bk, d));
    r.artifact("dual_bk_colim", space_info(&dual, d));
    r.verdict(
        "bk_colim_simplicial_identities",
        bk.validate().passed(),
        Strength::Exact,
    );
    r.verdict("dual_simplicial_identities", dual.validate().passed(), Strength::Exact);
    r.verdict("duality_isomorphism", duality_check(&diagram, k)?, Strength::Exact);
    Ok(())
}

fn grothendieck(path: &Path, r: &mut Report) -> Result<()> {
    let d = io::load_cat_diagram(path)?;
    let lax = lax_colim(&d)?;
    let oplax = oplax_colim(&d)?;
    let shape = |g: &hammock_core::fincat::Grothendieck| json!({"objects": g.cat.num_objects(), "morphisms": g.cat.num_morphisms()});
    r.artifact("lax_colim", shape(&lax));
    r.artifact("oplax_colim", shape(&oplax));
    r.artifact(
        "lax_colim_category",
        serde_json::from_str::<Value>(&io::category_to_json(&lax.cat)?)?,
    );
    let t = thomason_evidence(&d, r.config.degree)?;
    r.artifact("thomason", &t);
    r.verdict("thomason", t.holds, Strength::HomologyEvidence);
    Ok(())
}

fn aspherical(path: &Path, r: &mut Report) -> Result<()> {
    let u = io::load_functor(path)?;
    let q = quillen_a_evidence(&u, r.config.degree)?;
    r.artifact("has_left_adjoint", has_left_adjoint(&u));
    r.artifact("has_right_adjoint", has_right_adjoint(&u));
    r.artifact("quillen_a", &q);
    if q.outcome == Outcome::HypothesisNotEstablished {
        r.warn("the functor is neither left nor right aspherical at this degree; no nerve comparison was made");
    }
    r.verdict("quillen_a", q.outcome != Outcome::Fails, Strength::HomologyEvidence);
    Ok(())
}

fn model_check(path: &Path, r: &mut Report) -> Result<()> {
    let m = io::load_model(path)?;
    let report = validate_model_structure(&m);
    r.artifact(
        "failed_axioms",
        report.failed_axioms().iter().map(|a| a.code()).collect::<Vec<_>>(),
    );
    r.artifact("report", &report);
    r.verdict("model_axioms", report.valid, Strength::Exact);
    Ok(())
}

fn hammock_hom(path: &Path, a: &str, b: &str, r: &mut Report) -> Result<()> {
    let rel = load_relcat_any(path)?;
    let (a, b) = (object(&rel.cat, a)?, object(&rel.cat, b)?);
    let h = hammock_hom_space(&rel, a, b, r.config.k, r.config.max_length)?;
    let flags = bound_flags(&rel, &h)?;
    if !flags.pi0_stable {
        r.exhausted(format!(
            "π0 changed when the length bound went from {} to {}",
            r.config.max_length - 1,
            r.config.max_length
        ));
    }
    r.artifact("space", space_info(h.sset(), r.config.degree));
    r.artifact("bounds", &flags);
    r.artifact("sset", sset_value(h.sset())?);
    r.verdict("simplicial_identities", h.sset().validate().passed(), Strength::Exact);
    Ok(())
}

fn special_hammocks(path: &Path, a: &str, b: &str, r: &mut Report) -> Result<()> {
    let m = io::load_model(path)?;
    let c = &*m.cat;
    let (a, b) = (object(c, a)?, object(c, b)?);
    let t = t_category(&m, a, b)?;
    let grids: Vec<Value> = (0..t.objects.len())
        .map(|o| hammock_grid(c, &t.object_hammock(o)))
        .collect();
    r.artifact("objects", grids);
    r.artifact("morphisms", t.morphisms.len());
    r.artifact("nerve", space_info(&nerve(&t.cat, r.config.k), r.config.degree));
    let cmp = nerve_t_to_hom(&m, a, b, r.config.k, r.config.max_length)?;
    let e = weq_evidence(&cmp.map, r.config.degree)?;
    r.artifact("nerve_to_hom", &e);
    r.verdict("nerve_to_hom_pi0", e.pi0_bijective, Strength::Exact);
    r.verdict("nerve_to_hom", e.holds, Strength::HomologyEvidence);
    Ok(())
}

#[derive(Serialize)]
struct ResolutionInfo {
    levels: Vec<String>,
    augmentation: Vec<String>,
    certificate: hammock_core::homres::ResolutionCertificate,
}

const ASPHERICITY_HEIGHT: usize = 2;

fn resolve(path: &Path, a: &str, r: &mut Report) -> Result<()> {
    let m = io::load_model(path)?;
    let c = &*m.cat;
    let a = object(c, a)?;
    let (k, d) = (r.config.k, r.config.degree);
    let cos = build_cosimplicial_resolution(&m, a, k)?;
    let sim = build_simplicial_resolution(&m, a, k)?;
    let objects = |ls: &[usize]| ls.iter().map(|&o| c.object_name(o).to_string()).collect::<Vec<_>>();
    r.artifact(
        "cosimplicial",
        ResolutionInfo {
            levels: objects(cos.object.levels()),
            augmentation: names(c, &cos.augmentation),
            certificate: cos.certificate.clone(),
        },
    );
    r.artifact(
        "simplicial",
        ResolutionInfo {
            levels: objects(sim.object.levels()),
            augmentation: names(c, &sim.augmentation),
            certificate: sim.certificate.clone(),
        },
    );
    r.verdict(
        "cosimplicial_resolution",
        cos.certificate.is_resolution,
        Strength::Exact,
    );
    r.verdict("simplicial_resolution", sim.certificate.is_resolution, Strength::Exact);
    // The slice categories grow quickly with the height of the resolution.
    let h = k.min(ASPHERICITY_HEIGHT);
    let ca = cosimplicial_asphericity_check(&m, &build_cosimplicial_resolution(&m, a, h)?, d)?;
    let sa = resolution_asphericity_check(&m, &build_simplicial_resolution(&m, a, h)?, d)?;
    r.artifact("cosimplicial_asphericity", &ca);
    r.artifact("simplicial_asphericity", &sa);
    r.verdict("cosimplicial_asphericity", ca.aspherical, Strength::HomologyEvidence);
    r.verdict("simplicial_asphericity", sa.aspherical, Strength::HomologyEvidence);
    Ok(())
}

fn derived_hom_command(path: &Path, a: &str, b: &str, r: &mut Report) -> Result<()> {
    let m = io::load_model(path)?;
    let (a, b) = (object(&m.cat, a)?, object(&m.cat, b)?);
    let h = derived_hom(&m, a, b, r.config.k)?;
    let ho = ho_hom_report(&m, a, b)?;
    let info = space_info(&h.space, r.config.degree);
    r.verdict(
        "resolutions_certified",
        h.cosimplicial.certificate.is_resolution && h.simplicial.certificate.is_resolution,
        Strength::Exact,
    );
    r.verdict("pi0_equals_ho_hom", info.pi0 == ho.classes, Strength::Exact);
    r.verdict("simplicial_identities", h.space.validate().passed(), Strength::Exact);
    r.artifact("space", info);
    r.artifact("ho_hom", &ho);
    Ok(())
}

fn compare(path: &Path, a: &str, b: &str, index_truncation: usize, r: &mut Report) -> Result<()> {
    let m = io::load_model(path)?;
    let (a, b) = (object(&m.cat, a)?, object(&m.cat, b)?);
    let opts = CompareOptions {
        k: r.config.k,
        d: r.config.degree,
        max_length: r.config.max_length,
        index_truncation,
        ..CompareOptions::default()
    };
    let rep = comparison_report(&m, a, b, &opts)?;
    let flags = bound_flags(
        &m.relcat()?,
        &hammock_hom_space(&m.relcat()?, a, b, 1, opts.max_length)?,
    )?;
    if !flags.pi0_stable {
        r.exhausted("hammock π0 is not stable under the length bound");
    }
    r.verdict("pi0_agree", rep.pi0_agree, Strength::Exact);
    r.verdict("pi0_matches_ho_hom", rep.pi0_matches_ho, Strength::Exact);
    r.verdict(
        "resolutions_certified",
        rep.cosimplicial_certificate_ok && rep.simplicial_certificate_ok,
        Strength::Exact,
    );
    r.verdict("homology_agree", rep.homology_agree, Strength::HomologyEvidence);
    r.verdict("nerve_to_hom", rep.nerve_to_hom.holds, Strength::HomologyEvidence);
    r.verdict(
        "naturality",
        rep.naturality.iter().all(|n| n.report.commutes_in_homology),
        Strength::HomologyEvidence,
    );
    r.artifact("hammock_bounds", &flags);
    r.artifact("comparison", &rep);
    Ok(())
}

fn loc_hom(
    path: &Path,
    a: &str,
    b: &str,
    level: Option<usize>,
    word_bound: Option<usize>,
    with_hammocks: bool,
    r: &mut Report,
) -> Result<()> {
    let rel = load_relcat_any(path)?;
    let (a, b) = (object(&rel.cat, a)?, object(&rel.cat, b)?);
    let k = level.unwrap_or(r.config.k);
    let bound = word_bound.unwrap_or(r.config.max_length);
    let d = r.config.degree.min(k.saturating_sub(1));
    let l = loc_hom_space(&rel, a, b, k, bound)?;
    if !l.stable {
        r.exhausted(format!(
            "level sizes change when the word bound is raised above {bound}"
        ));
    }
    r.artifact("level", k);
    r.artifact("word_bound", bound);
    r.artifact("stable", l.stable);
    r.artifact("space", space_info(l.sset(), d));
    r.artifact("sset", sset_value(l.sset())?);
    r.verdict("simplicial_identities", l.sset().validate().passed(), Strength::Exact);
    if with_hammocks {
        let e = hammock_vs_loc_evidence(&rel, a, b, k, bound, d)?;
        r.verdict("pi0_agree_with_hammocks", e.pi0_agree, Strength::Exact);
        r.verdict("homology_agree_with_hammocks", e.holds, Strength::HomologyEvidence);
        r.artifact("hammock_comparison", &e);
    }
    Ok(())
}

fn presheaf_check(path: &Path, r: &mut Report) -> Result<()> {
    let (p, rel) = io::load_presheaf(path)?;
    let d = r.config.degree.min(p.k().saturating_sub(1));
    let rep = presheaf_local_fibrancy_evidence(&p, &rel, d)?;
    if rep.weq_clause_vacuous {
        r.warn("no non-identity weak equivalence: the weak-equivalence clause is vacuous");
    }
    r.verdict("objectwise_kan", rep.fibrant, Strength::Exact);
    r.verdict("sends_weqs_to_weqs", rep.sends_weqs_to_weqs, Strength::HomologyEvidence);
    r.artifact("fibrancy", &rep);
    Ok(())
}

fn corpus_command(export: Option<&Path>, verify: bool, r: &mut Report) -> Result<()> {
    let files = corpus::files()?;
    let dir = corpus_dir();
    r.artifact("directory", dir.display().to_string());
    r.artifact("inventory", corpus::inventory()?);
    if let Some(out) = export {
        std::fs::create_dir_all(out).with_context(|| format!("creating {}", out.display()))?;
        for (name, text) in &files {
            std::fs::write(out.join(name), text).with_context(|| format!("writing {name}"))?;
        }
        r.artifact("exported", files.len());
    }
    if verify {
        let mut mismatched = Vec::new();
        for (name, text) in &files {
            if std::fs::read_to_string(dir.join(name)).ok().as_deref() != Some(text) {
                mismatched.push(name.clone());
            }
        }
        r.verdict("files_match_bundled", mismatched.is_empty(), Strength::Exact);
        r.artifact("mismatched", mismatched);
        let mut model_results = BTreeMap::new();
        for (name, _) in corpus::model_structures() {
            let m: ModelStructure = io::load_model(&dir.join(format!("{name}.json")))?;
            model_results.insert(name, validate_model_structure(&m).valid);
        }
        r.verdict(
            "models_pass_model_check",
            model_results.values().all(|&v| v),
            Strength::Exact,
        );
        r.artifact("model_check", model_results);
        let mut round_trips = true;
        for (name, text) in &files {
            let p = dir.join(name);
            let again = match file_kind(&p)? {
                FileKind::Category => io::category_to_json(&io::load_category(&p)?)?,
                FileKind::RelativeCategory => io::relcat_to_json(&io::load_relcat(&p)?)?,
                FileKind::ModelStructure => io::model_to_json(&io::load_model(&p)?)?,
                FileKind::SimplicialSet => io::sset_to_json(&io::load_sset(&p)?)?,
                _ => text.clone(),
            };
            round_trips &= &again == text;
        }
        r.verdict("round_trip", round_trips, Strength::Exact);
    }
    Ok(())
}
