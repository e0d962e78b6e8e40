use std::sync::Arc;

use serde::Serialize;

use crate::fincat::{FinCat, Functor};

/// A cone over (or cocone under) a diagram: apex and one leg per object of
/// the indexing category.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cone {
    pub apex: usize,
    pub legs: Vec<usize>,
}

/// All cones over `d : J → C` with the given apex.
pub fn cones_with_apex(d: &Functor, apex: usize) -> Vec<Cone> {
    let (j, c) = (&*d.source, &*d.target);
    let mut out = Vec::new();
    let mut legs = Vec::with_capacity(j.num_objects());
    fn go(d: &Functor, j: &FinCat, c: &FinCat, apex: usize, legs: &mut Vec<usize>, out: &mut Vec<Cone>) {
        let o = legs.len();
        if o == j.num_objects() {
            out.push(Cone {
                apex,
                legs: legs.clone(),
            });
            return;
        }
        for &l in c.hom(apex, d.on_object(o)) {
            legs.push(l);
            // check every shape morphism between already-assigned objects
            let ok = j.morphism_ids().all(|m| {
                let (s, t) = (j.src(m), j.dst(m));
                s.max(t) != o || c.compose(d.on_morphism(m), legs[s]) == Some(legs[t])
            });
            if ok {
                go(d, j, c, apex, legs, out);
            }
            legs.pop();
        }
    }
    go(d, j, c, apex, &mut legs, &mut out);
    out
}

/// Morphisms `u : other.apex → cone.apex` with `cone.legs[j] ∘ u = other.legs[j]`.
fn factorizations(c: &FinCat, cone: &Cone, other: &Cone) -> usize {
    c.hom(other.apex, cone.apex)
        .iter()
        .filter(|&&u| {
            cone.legs
                .iter()
                .zip(&other.legs)
                .all(|(&l, &l2)| c.compose(l, u) == Some(l2))
        })
        .count()
}

/// The limit of `d : J → C`, found by exhaustive search over cones and
/// checked against every competing cone; `None` if it does not exist.
pub fn finite_limit(d: &Functor) -> Option<Cone> {
    let c = &*d.target;
    let all: Vec<Cone> = c.objects().flat_map(|x| cones_with_apex(d, x)).collect();
    all.iter()
        .find(|cone| all.iter().all(|other| factorizations(c, cone, other) == 1))
        .cloned()
}

/// The colimit of `d`, as the limit of `d^op`; legs point into the apex.
pub fn finite_colimit(d: &Functor) -> Option<Cone> {
    finite_limit(&d.opposite())
}

fn diagram(shape: FinCat, c: &Arc<FinCat>, objects: Vec<usize>, morphisms: Vec<usize>) -> Functor {
    Functor::new(Arc::new(shape), c.clone(), objects, morphisms).expect("well-formed diagram")
}

/// The walking parallel pair `0 ⇉ 1`.
pub fn parallel_pair() -> FinCat {
    FinCat::builder()
        .object("0")
        .object("1")
        .morphism("id0", "0", "0")
        .morphism("id1", "1", "1")
        .morphism("f", "0", "1")
        .morphism("g", "0", "1")
        .identity("0", "id0")
        .identity("1", "id1")
        .build()
        .expect("parallel pair")
}

/// The cospan shape `0 → 2 ← 1`.
pub fn cospan() -> FinCat {
    FinCat::poset(&["0", "1", "2"], |a, b| a == b || b == 2)
}

pub fn terminal(c: &Arc<FinCat>) -> Option<usize> {
    finite_limit(&diagram(FinCat::empty(), c, vec![], vec![])).map(|l| l.apex)
}

pub fn initial(c: &Arc<FinCat>) -> Option<usize> {
    finite_colimit(&diagram(FinCat::empty(), c, vec![], vec![])).map(|l| l.apex)
}

pub fn product(c: &Arc<FinCat>, a: usize, b: usize) -> Option<Cone> {
    let two = FinCat::discrete(&["0", "1"]);
    let ids = vec![c.identity(a), c.identity(b)];
    finite_limit(&diagram(two, c, vec![a, b], ids))
}

pub fn coproduct(c: &Arc<FinCat>, a: usize, b: usize) -> Option<Cone> {
    let two = FinCat::discrete(&["0", "1"]);
    let ids = vec![c.identity(a), c.identity(b)];
    finite_colimit(&diagram(two, c, vec![a, b], ids))
}

fn cospan_diagram(c: &Arc<FinCat>, f: usize, g: usize) -> Functor {
    let shape = cospan();
    let objects = vec![c.src(f), c.src(g), c.dst(f)];
    let morphisms = shape
        .morphism_ids()
        .map(|m| match (shape.src(m), shape.dst(m)) {
            (0, 2) => f,
            (1, 2) => g,
            (o, _) => c.identity(objects[o]),
        })
        .collect();
    diagram(shape, c, objects, morphisms)
}

/// Pullback of `f : a → x ← b : g`; legs are indexed `a, b, x`.
pub fn pullback(c: &Arc<FinCat>, f: usize, g: usize) -> Option<Cone> {
    if c.dst(f) != c.dst(g) {
        return None;
    }
    finite_limit(&cospan_diagram(c, f, g))
}

/// Pushout of `f : x → a`, `g : x → b`; legs are indexed `a, b, x`.
pub fn pushout(c: &Arc<FinCat>, f: usize, g: usize) -> Option<Cone> {
    if c.src(f) != c.src(g) {
        return None;
    }
    let op = Arc::new(c.opposite());
    finite_limit(&cospan_diagram(&op, f, g))
}

fn parallel(c: &Arc<FinCat>, f: usize, g: usize) -> Functor {
    let shape = parallel_pair();
    let (a, b) = (c.src(f), c.dst(f));
    diagram(shape, c, vec![a, b], vec![c.identity(a), c.identity(b), f, g])
}

pub fn equalizer(c: &Arc<FinCat>, f: usize, g: usize) -> Option<Cone> {
    finite_limit(&parallel(c, f, g))
}

pub fn coequalizer(c: &Arc<FinCat>, f: usize, g: usize) -> Option<Cone> {
    finite_colimit(&parallel(c, f, g))
}

/// A terminal object, binary products and equalizers exist (so all finite
/// limits do), and dually. Returns the first missing one.
pub fn missing_finite_limit(c: &Arc<FinCat>) -> Option<String> {
    if terminal(c).is_none() {
        return Some("no terminal object".into());
    }
    if initial(c).is_none() {
        return Some("no initial object".into());
    }
    for a in c.objects() {
        for b in c.objects() {
            let (na, nb) = (c.object_name(a), c.object_name(b));
            if product(c, a, b).is_none() {
                return Some(format!("no product of `{na}` and `{nb}`"));
            }
            if coproduct(c, a, b).is_none() {
                return Some(format!("no coproduct of `{na}` and `{nb}`"));
            }
            for &f in c.hom(a, b) {
                for &g in c.hom(a, b) {
                    if equalizer(c, f, g).is_none() {
                        return Some(format!(
                            "no equalizer of `{}`, `{}`",
                            c.morphism_name(f),
                            c.morphism_name(g)
                        ));
                    }
                    if coequalizer(c, f, g).is_none() {
                        return Some(format!(
                            "no coequalizer of `{}`, `{}`",
                            c.morphism_name(f),
                            c.morphism_name(g)
                        ));
                    }
                }
            }
        }
    }
    None
}
