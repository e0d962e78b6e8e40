//! Seeded generators of diagrams over the corpus categories.

#![allow(dead_code)]

use std::sync::Arc;

use hammock_core::corpus;
use hammock_core::fincat::{monotone_of, nerve, truncated_simplex_category, CatDiagram, FinCat, Functor};
use hammock_core::sset::BiTruncSSet;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub type Rng8 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng8 {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Fibres small enough that nerves of Grothendieck constructions stay
/// manageable at level 3.
pub const FIBRES: [&str; 5] = ["pt", "I2", "walking-iso", "Z2", "chain3"];

pub fn cat(name: &str) -> Arc<FinCat> {
    Arc::new(corpus::category(name).expect("corpus category"))
}

/// The automorphism of the walking isomorphism exchanging `x` and `y`.
pub fn swap(w: Arc<FinCat>) -> Functor {
    Functor::from_names(
        w.clone(),
        w,
        &[("x", "y"), ("y", "x")],
        &[("f", "g"), ("g", "f"), ("idx", "idy"), ("idy", "idx")],
    )
    .expect("swap is a functor")
}

fn pick<'a>(rng: &mut Rng8, names: &[&'a str]) -> &'a str {
    names.choose(rng).expect("nonempty")
}

/// A random diagram of categories over the corpus category `shape`.
///
/// Over posets every non-identity arrow into `c` is constant at a chosen
/// object of the fibre at `c`, which is functorial because no composite of
/// non-identities is an identity. Over `Z2` and the walking isomorphism the
/// fibres agree and the arrows act by identities or by the swap.
pub fn random_cat_diagram(rng: &mut Rng8, shape: &str) -> CatDiagram {
    let s = cat(shape);
    match shape {
        "Z2" | "walking-iso" => {
            let f = cat(pick(rng, &FIBRES));
            let twist = f.object_names() == ["x", "y"] && rng.gen_bool(0.5);
            let functors = s
                .morphism_ids()
                .map(|m| {
                    if twist && !s.is_identity(m) {
                        swap(f.clone())
                    } else {
                        Functor::identity(f.clone())
                    }
                })
                .collect();
            CatDiagram::new(s.clone(), vec![f; s.num_objects()], functors).expect("group actions are functorial")
        }
        _ => {
            let fibres: Vec<Arc<FinCat>> = s.objects().map(|_| cat(pick(rng, &FIBRES))).collect();
            let chosen: Vec<usize> = fibres.iter().map(|f| rng.gen_range(0..f.num_objects())).collect();
            let functors = s
                .morphism_ids()
                .map(|m| {
                    let (a, b) = (s.src(m), s.dst(m));
                    if s.is_identity(m) {
                        Functor::identity(fibres[a].clone())
                    } else {
                        Functor::constant(fibres[a].clone(), fibres[b].clone(), chosen[b])
                    }
                })
                .collect();
            CatDiagram::new(s.clone(), fibres, functors).expect("constant functors compose")
        }
    }
}

pub fn random_shape_diagram(rng: &mut Rng8) -> CatDiagram {
    let shape = pick(rng, &corpus::CATEGORY_NAMES);
    random_cat_diagram(rng, shape)
}

/// External products and constant bisimplicial sets of corpus nerves.
pub fn random_bisimplicial(rng: &mut Rng8, k: usize) -> (String, BiTruncSSet) {
    let a = pick(rng, &FIBRES);
    let b = pick(rng, &FIBRES);
    let (na, nb) = (nerve(&cat(a), k), nerve(&cat(b), k));
    match rng.gen_range(0..3) {
        0 => (
            format!("N({a}) ⊠ N({b})"),
            BiTruncSSet::external_product(&na, &nb).expect("same truncation"),
        ),
        1 => (format!("rows N({a})"), BiTruncSSet::constant_rows(&na).expect("valid")),
        _ => (
            format!("columns N({a})"),
            BiTruncSSet::constant_columns(&na).expect("valid"),
        ),
    }
}

/// `[n] ↦ [n]` as a diagram of categories over `Δ≤j`; its nerve is the
/// cosimplicial simplicial set `Δ^•`.
pub fn cosimplicial_simplices(j: usize) -> CatDiagram {
    let shape = Arc::new(truncated_simplex_category(j));
    let fibres: Vec<Arc<FinCat>> = (0..=j).map(|n| Arc::new(FinCat::chain(n + 1))).collect();
    let functors = shape
        .morphism_ids()
        .map(|m| {
            let alpha = monotone_of(&shape, m);
            let (src, dst) = (fibres[shape.src(m)].clone(), fibres[shape.dst(m)].clone());
            let objects: Vec<(String, String)> = alpha
                .iter()
                .enumerate()
                .map(|(i, a)| (i.to_string(), a.to_string()))
                .collect();
            let arrows: Vec<(String, String)> = src
                .morphism_ids()
                .map(|f| {
                    let (i, l) = (src.src(f), src.dst(f));
                    (src.morphism_name(f).to_string(), format!("{}{}", alpha[i], alpha[l]))
                })
                .collect();
            let o: Vec<(&str, &str)> = objects.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
            let a: Vec<(&str, &str)> = arrows.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
            Functor::from_names(src, dst, &o, &a).expect("monotone maps are functors")
        })
        .collect();
    CatDiagram::new(shape, fibres, functors).expect("cosimplicial category")
}
