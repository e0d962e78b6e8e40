//! Bundled example inputs: six small categories, model structures on the
//! lattices and the walking isomorphism, relative categories, functors
//! between corpus categories and a list of invalid model structures.
//!
//! Everything here is built in code; [`files`] renders the same data in
//! the JSON file formats of [`crate::io`].

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fincat::{has_left_adjoint, has_right_adjoint, CatDiagram, FinCat, Functor};
use crate::hocolim::SSetDiagram;
use crate::io;
use crate::locres::SimpPresheaf;
use crate::modelcat::{validate_relcat, Axiom, ClassName, FactorKind, ModelStructure, RelCat};

pub const CATEGORY_NAMES: [&str; 6] = ["pt", "I2", "walking-iso", "Z2", "chain3", "square-poset"];

/// The terminal category.
pub fn pt() -> FinCat {
    FinCat::point()
}

/// `0 → 1` with the arrow named `a`.
pub fn interval() -> FinCat {
    FinCat::builder()
        .object("0")
        .object("1")
        .morphism("id0", "0", "0")
        .morphism("id1", "1", "1")
        .morphism("a", "0", "1")
        .identity("0", "id0")
        .identity("1", "id1")
        .build()
        .expect("interval")
}

/// `f : x ⇄ y : g` with `g f = id_x` and `f g = id_y`.
pub fn walking_iso() -> FinCat {
    FinCat::builder()
        .object("x")
        .object("y")
        .morphism("idx", "x", "x")
        .morphism("idy", "y", "y")
        .morphism("f", "x", "y")
        .morphism("g", "y", "x")
        .identity("x", "idx")
        .identity("y", "idy")
        .compose("f", "g", "idx")
        .compose("g", "f", "idy")
        .build()
        .expect("walking isomorphism")
}

/// The cyclic group of order two as a one-object category.
pub fn z2() -> FinCat {
    FinCat::group("*", &["e", "g"], |a, b| a ^ b)
}

/// `0 → 1 → 2`.
pub fn chain3() -> FinCat {
    FinCat::chain(3)
}

/// The product order on `{0,1}²`.
pub fn square_poset() -> FinCat {
    FinCat::poset(&["00", "01", "10", "11"], |a, b| (a & !b) == 0)
}

pub fn category(name: &str) -> Result<FinCat> {
    Ok(match name {
        "pt" => pt(),
        "I2" => interval(),
        "walking-iso" => walking_iso(),
        "Z2" => z2(),
        "chain3" => chain3(),
        "square-poset" => square_poset(),
        _ => {
            return Err(Error::Parse {
                context: "corpus".into(),
                message: format!("no bundled category `{name}`"),
            })
        }
    })
}

pub fn categories() -> Vec<(&'static str, Arc<FinCat>)> {
    CATEGORY_NAMES
        .iter()
        .map(|&n| (n, Arc::new(category(n).expect("bundled"))))
        .collect()
}

/// Named model structures: the two canonical ones on each lattice and the
/// isomorphism structure on the walking isomorphism.
pub fn model_structures() -> Vec<(String, ModelStructure)> {
    let mut out = Vec::new();
    for name in ["chain3", "square-poset"] {
        let c = Arc::new(category(name).expect("bundled"));
        out.push((format!("{name}-trivial"), ModelStructure::trivial(c.clone())));
        out.push((format!("{name}-coarse"), ModelStructure::coarse(c)));
    }
    out.push((
        "walking-iso-trivial".into(),
        ModelStructure::trivial(Arc::new(walking_iso())),
    ));
    out
}

pub fn model_structure(name: &str) -> Result<ModelStructure> {
    model_structures()
        .into_iter()
        .find(|(n, _)| n == name)
        .map(|(_, m)| m)
        .ok_or_else(|| Error::Parse {
            context: "corpus".into(),
            message: format!("no bundled model structure `{name}`"),
        })
}

fn relcat(c: FinCat, weq: &[&str]) -> RelCat {
    let c = Arc::new(c);
    let mut ids: Vec<usize> = c.objects().map(|o| c.identity(o)).collect();
    ids.extend(weq.iter().map(|w| c.morphism_id(w).expect("bundled morphism")));
    validate_relcat(c, &ids).expect("bundled relative category")
}

/// Named relative categories for hammock and localisation experiments.
pub fn relcats() -> Vec<(String, RelCat)> {
    vec![
        ("I2-ids".into(), relcat(interval(), &[])),
        ("I2-a".into(), relcat(interval(), &["a"])),
        ("chain3-isos".into(), relcat(chain3(), &[])),
        ("chain3-01".into(), relcat(chain3(), &["01"])),
        ("walking-iso-all".into(), relcat(walking_iso(), &["f", "g"])),
        ("Z2-all".into(), relcat(z2(), &["g"])),
    ]
}

pub fn relcat_named(name: &str) -> Result<RelCat> {
    relcats()
        .into_iter()
        .find(|(n, _)| n == name)
        .map(|(_, r)| r)
        .ok_or_else(|| Error::Parse {
            context: "corpus".into(),
            message: format!("no bundled relative category `{name}`"),
        })
}

/// A functor between corpus categories with its adjoints, found by
/// exhaustive comma-category search.
#[derive(Clone, Debug)]
pub struct CorpusFunctor {
    pub name: String,
    /// Corpus names of the source and target categories.
    pub source: String,
    pub target: String,
    pub functor: Functor,
    pub left_adjoint: bool,
    pub right_adjoint: bool,
}

impl CorpusFunctor {
    pub fn has_adjoint(&self) -> bool {
        self.left_adjoint || self.right_adjoint
    }
}

fn functor(name: &str, src: &str, dst: &str, objects: &[(&str, &str)], morphisms: &[(&str, &str)]) -> CorpusFunctor {
    let functor = Functor::from_names(
        Arc::new(category(src).expect("bundled")),
        Arc::new(category(dst).expect("bundled")),
        objects,
        morphisms,
    )
    .expect("bundled functor");
    CorpusFunctor {
        name: name.into(),
        source: src.into(),
        target: dst.into(),
        left_adjoint: has_left_adjoint(&functor),
        right_adjoint: has_right_adjoint(&functor),
        functor,
    }
}

pub fn functors() -> Vec<CorpusFunctor> {
    vec![
        functor(
            "chain3-to-pt",
            "chain3",
            "pt",
            &[("0", "*"), ("1", "*"), ("2", "*")],
            &[("01", "id_*"), ("02", "id_*"), ("12", "id_*")],
        ),
        functor("pt-to-chain3-initial", "pt", "chain3", &[("*", "0")], &[]),
        functor("pt-to-chain3-middle", "pt", "chain3", &[("*", "1")], &[]),
        functor(
            "I2-into-chain3",
            "I2",
            "chain3",
            &[("0", "0"), ("1", "2")],
            &[("a", "02")],
        ),
        functor(
            "chain3-onto-I2",
            "chain3",
            "I2",
            &[("0", "0"), ("1", "1"), ("2", "1")],
            &[("01", "a"), ("02", "a"), ("12", "id1")],
        ),
        functor(
            "square-rank",
            "square-poset",
            "chain3",
            &[("00", "0"), ("01", "1"), ("10", "1"), ("11", "2")],
            &[
                ("00<01", "01"),
                ("00<10", "01"),
                ("00<11", "02"),
                ("01<11", "12"),
                ("10<11", "12"),
            ],
        ),
        functor(
            "walking-iso-to-pt",
            "walking-iso",
            "pt",
            &[("x", "*"), ("y", "*")],
            &[("f", "id_*"), ("g", "id_*")],
        ),
        functor("pt-to-walking-iso", "pt", "walking-iso", &[("*", "y")], &[]),
        functor("Z2-to-pt", "Z2", "pt", &[("*", "*")], &[("g", "id_*")]),
        functor("pt-to-Z2", "pt", "Z2", &[("*", "*")], &[]),
    ]
}

/// A model structure that fails the axioms, with the axiom a verifier must
/// cite.
#[derive(Clone, Debug)]
pub struct Corruption {
    pub name: String,
    pub base: String,
    pub structure: ModelStructure,
    pub axiom: Axiom,
}

fn names(c: &FinCat, ids: &[&str]) -> Vec<usize> {
    ids.iter()
        .map(|n| c.morphism_id(n).expect("bundled morphism"))
        .collect()
}

fn without(all: Vec<usize>, drop: &[usize]) -> Vec<usize> {
    all.into_iter().filter(|m| !drop.contains(m)).collect()
}

/// Twenty single-change corruptions of the canonical structures on
/// `chain3` and `square-poset`.
pub fn corruptions() -> Vec<Corruption> {
    let mut out = Vec::new();
    let mut push = |base: &str, name: &str, structure: Result<ModelStructure>, axiom: Axiom| {
        out.push(Corruption {
            name: format!("{base}/{name}"),
            base: base.into(),
            structure: structure.expect("corruption ids are valid"),
            axiom,
        });
    };
    for (cat, long, mid) in [("chain3", "02", "01"), ("square-poset", "00<11", "00<01")] {
        let trivial = model_structure(&format!("{cat}-trivial")).expect("bundled");
        let coarse = model_structure(&format!("{cat}-coarse")).expect("bundled");
        let c = trivial.cat.clone();
        let long_ = names(&c, &[long])[0];
        let mid_ = names(&c, &[mid])[0];
        let first = c.objects().next().expect("nonempty");
        let id0 = c.identity(first);
        let t = format!("{cat}-trivial");
        let k = format!("{cat}-coarse");

        push(
            &t,
            "identity-not-weq",
            trivial
                .clone()
                .with_class(ClassName::Weq, &without(trivial.weq_ids(), &[id0])),
            Axiom::Isomorphisms,
        );
        push(
            &t,
            "long-arrow-not-cof",
            trivial
                .clone()
                .with_class(ClassName::Cof, &without(trivial.cof_ids(), &[long_])),
            Axiom::Composition,
        );
        push(
            &t,
            "long-arrow-not-fib",
            trivial
                .clone()
                .with_class(ClassName::Fib, &without(trivial.fib_ids(), &[long_])),
            Axiom::Composition,
        );
        let mut w = trivial.weq_ids();
        w.push(mid_);
        push(
            &t,
            "arrow-weq",
            trivial.clone().with_class(ClassName::Weq, &w),
            Axiom::Lifting,
        );
        let mut table = trivial.table(FactorKind::CofThenTfib).clone();
        table.set(long_, None);
        push(
            &t,
            "factorization-missing",
            trivial.clone().with_table(FactorKind::CofThenTfib, table),
            Axiom::Factorization,
        );

        push(
            &k,
            "identity-not-cof",
            coarse
                .clone()
                .with_class(ClassName::Cof, &without(coarse.cof_ids(), &[id0])),
            Axiom::Isomorphisms,
        );
        push(
            &k,
            "arrow-not-weq",
            coarse
                .clone()
                .with_class(ClassName::Weq, &without(coarse.weq_ids(), &[long_])),
            Axiom::Composition,
        );
        let mut cof = coarse.cof_ids();
        cof.push(mid_);
        push(
            &k,
            "arrow-cof",
            coarse.clone().with_class(ClassName::Cof, &cof),
            Axiom::Lifting,
        );
        push(
            &k,
            "arrow-not-fib",
            coarse
                .clone()
                .with_class(ClassName::Fib, &without(coarse.fib_ids(), &[long_])),
            Axiom::Composition,
        );
        let mut table = coarse.table(FactorKind::TcofThenFib).clone();
        table.set(long_, None);
        push(
            &k,
            "factorization-missing",
            coarse.clone().with_table(FactorKind::TcofThenFib, table),
            Axiom::Factorization,
        );
    }
    out
}

/// Names of the relative categories, model structures and functors
/// bundled alongside each category.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InventoryEntry {
    pub category: String,
    pub files: Vec<String>,
}

/// Files are grouped under the category named by their prefix; functors
/// and diagrams are listed under their source or shape.
pub fn inventory() -> Result<Vec<InventoryEntry>> {
    let files = files()?;
    let owner = |file: &str| -> Option<&'static str> {
        let stem = file.trim_end_matches(".json");
        if let Some(f) = functors().into_iter().find(|f| stem == format!("functor-{}", f.name)) {
            return CATEGORY_NAMES.into_iter().find(|&c| c == f.source);
        }
        let last = |suffix: &str| {
            CATEGORY_NAMES
                .into_iter()
                .find(|&c| suffix == c || suffix.starts_with(&format!("{c}-")))
        };
        match stem.split_once("-over-") {
            Some((_, shape)) => last(shape),
            None if stem == "point" => Some("pt"),
            None => CATEGORY_NAMES
                .into_iter()
                .filter(|&c| {
                    stem == c || stem.starts_with(&format!("{c}-")) || stem == format!("nerve-{}", c.to_lowercase())
                })
                .max_by_key(|c| c.len()),
        }
    };
    Ok(CATEGORY_NAMES
        .iter()
        .map(|&c| InventoryEntry {
            category: c.into(),
            files: files
                .iter()
                .filter(|(f, _)| owner(f) == Some(c))
                .map(|(f, _)| f.clone())
                .collect(),
        })
        .collect())
}

/// Every bundled file name with its JSON contents.
pub fn files() -> Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    for (name, c) in categories() {
        out.push((format!("{name}.json"), io::category_to_json(&c)?));
    }
    for (name, m) in model_structures() {
        out.push((format!("{name}.json"), io::model_to_json(&m)?));
    }
    for (name, r) in relcats() {
        out.push((format!("{name}.json"), io::relcat_to_json(&r)?));
    }
    let z2 = Arc::new(z2());
    out.push(("nerve-z2.json".into(), io::sset_to_json(&crate::fincat::nerve(&z2, 3))?));
    for f in functors() {
        out.push((
            format!("functor-{}.json", f.name),
            io::functor_to_json(&f.functor, &format!("{}.json", f.source), &format!("{}.json", f.target))?,
        ));
    }
    let point = crate::sset::TruncSSet::point(3);
    out.push(("point.json".into(), io::sset_to_json(&point)?));
    let c3 = Arc::new(chain3());
    out.push((
        "bk-point-over-chain3.json".into(),
        io::sset_diagram_to_json(
            &SSetDiagram::constant(c3.clone(), point),
            "chain3.json",
            &vec!["point.json".to_string(); 3],
        )?,
    ));
    out.push((
        "diagram-z2-over-pt.json".into(),
        io::cat_diagram_to_json(
            &CatDiagram::constant(Arc::new(pt()), z2.clone()),
            "pt.json",
            &["Z2.json".to_string()],
        )?,
    ));
    let squash = functors()
        .into_iter()
        .find(|f| f.name == "chain3-to-pt")
        .expect("bundled")
        .functor;
    let i2 = Arc::new(interval());
    let mut fs: Vec<Functor> = i2
        .objects()
        .map(|o| Functor::identity(if o == 0 { c3.clone() } else { Arc::new(pt()) }))
        .collect();
    fs.insert(i2.morphism_id("a")?, squash);
    out.push((
        "diagram-chain3-over-I2.json".into(),
        io::cat_diagram_to_json(
            &CatDiagram::new(i2.clone(), vec![c3, Arc::new(pt())], fs)?,
            "I2.json",
            &["chain3.json".into(), "pt.json".into()],
        )?,
    ));
    let nz = crate::fincat::nerve(&z2, 3);
    out.push((
        "presheaf-nerve-z2-over-I2-a.json".into(),
        io::presheaf_to_json(
            &SimpPresheaf::constant(i2, nz),
            "I2-a.json",
            &["nerve-z2.json".to_string(), "nerve-z2.json".to_string()],
        )?,
    ));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modelcat::validate_model_structure;

    #[test]
    fn categories_are_valid() {
        for (name, c) in categories() {
            assert!(c.axiom_violations().is_empty(), "{name}");
        }
        assert_eq!(categories().len(), 6);
    }

    #[test]
    fn bundled_models_pass_and_corruptions_fail() {
        for (name, m) in model_structures() {
            let r = validate_model_structure(&m);
            assert!(r.valid, "{name}: {:?}", r.failures.first());
        }
        let cs = corruptions();
        assert_eq!(cs.len(), 20);
        for c in cs {
            let r = validate_model_structure(&c.structure);
            assert!(!r.valid, "{}", c.name);
            assert!(
                r.failed_axioms().contains(&c.axiom),
                "{}: {:?}",
                c.name,
                r.failed_axioms()
            );
        }
    }

    #[test]
    fn inventory_covers_every_file() {
        let inv = inventory().unwrap();
        assert_eq!(inv.len(), 6);
        let listed: usize = inv.iter().map(|e| e.files.len()).sum();
        assert_eq!(listed, files().unwrap().len());
        let z2 = inv.iter().find(|e| e.category == "Z2").unwrap();
        assert!(z2.files.contains(&"nerve-z2.json".to_string()) && z2.files.contains(&"Z2-all.json".to_string()));
    }

    #[test]
    fn functor_adjoints() {
        let fs = functors();
        let find = |n: &str| fs.iter().find(|f| f.name == n).unwrap();
        assert!(find("chain3-to-pt").right_adjoint && find("chain3-to-pt").left_adjoint);
        assert!(find("pt-to-chain3-initial").right_adjoint);
        assert!(!find("pt-to-chain3-middle").has_adjoint());
        assert!(!find("Z2-to-pt").has_adjoint());
        assert!(find("walking-iso-to-pt").left_adjoint && find("walking-iso-to-pt").right_adjoint);
    }
}
