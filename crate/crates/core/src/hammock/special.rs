use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fincat::{nerve_indexed, nerve_map, FinCat, Functor, Morphism};
use crate::hammock::{compose_hammocks, hammock_hom_space, reduce, Direction, Hammock, HomSpace};
use crate::modelcat::{pullback, pushout, ModelStructure};
use crate::sset::{homology_maps_agree, weq_evidence, EvidenceReport, SSetMap};

/// A width-0 special hammock `A ← X → Y ← B`: `p : X → A` a trivial
/// fibration, `h : X → Y`, `i : B → Y` a trivial cofibration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SpecialObject {
    pub p: usize,
    pub h: usize,
    pub i: usize,
}

/// A width-1 special hammock between two objects: `u : X → X'` and
/// `v : Y → Y'` weak equivalences with `p'u = p`, `vi = i'`, `vh = h'u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SpecialMorphism {
    pub source: usize,
    pub target: usize,
    pub u: usize,
    pub v: usize,
}

/// The category `T(A, B)` of special hammocks.
#[derive(Clone, Debug)]
pub struct TCategory {
    pub source: usize,
    pub target: usize,
    pub objects: Vec<SpecialObject>,
    pub morphisms: Vec<SpecialMorphism>,
    pub cat: Arc<FinCat>,
}

impl TCategory {
    pub fn object_hammock(&self, o: usize) -> Hammock {
        let s = self.objects[o];
        Hammock {
            source: self.source,
            target: self.target,
            directions: vec![Direction::Left, Direction::Right, Direction::Left],
            horizontal: vec![vec![s.p, s.h, s.i]],
            vertical: vec![],
        }
    }

    /// Vertical pasting of a chain of morphisms, one row per object.
    pub fn paste(&self, c: &FinCat, start: usize, chain: &[usize]) -> Hammock {
        let mut h = self.object_hammock(start);
        for &m in chain {
            let s = self.morphisms[m];
            let o = self.objects[s.target];
            h.horizontal.push(vec![o.p, o.h, o.i]);
            h.vertical
                .push(vec![c.identity(self.source), s.u, s.v, c.identity(self.target)]);
        }
        h
    }

    pub fn object_of(&self, s: &SpecialObject) -> Option<usize> {
        self.objects.binary_search(s).ok()
    }
}

fn special_objects(m: &ModelStructure, a: usize, b: usize) -> Vec<SpecialObject> {
    let c = &*m.cat;
    let mut out = Vec::new();
    for &p in c.incoming(a).iter().filter(|&&p| m.is_triv_fib(p)) {
        for &i in c.outgoing(b).iter().filter(|&&i| m.is_triv_cof(i)) {
            for &h in c.hom(c.src(p), c.dst(i)) {
                out.push(SpecialObject { p, h, i });
            }
        }
    }
    out.sort();
    out
}

fn special_morphisms(m: &ModelStructure, objects: &[SpecialObject]) -> Vec<SpecialMorphism> {
    let c = &*m.cat;
    let mut out = Vec::new();
    for (s, x) in objects.iter().enumerate() {
        for (t, y) in objects.iter().enumerate() {
            for &u in c.hom(c.src(x.p), c.src(y.p)).iter().filter(|&&u| m.is_weq(u)) {
                if c.compose(y.p, u) != Some(x.p) {
                    continue;
                }
                for &v in c.hom(c.dst(x.i), c.dst(y.i)).iter().filter(|&&v| m.is_weq(v)) {
                    if c.compose(v, x.i) == Some(y.i) && c.compose(v, x.h) == c.compose(y.h, u) {
                        out.push(SpecialMorphism {
                            source: s,
                            target: t,
                            u,
                            v,
                        });
                    }
                }
            }
        }
    }
    out
}

/// `T(A, B)`: width-0 special hammocks with width-1 special hammocks as
/// morphisms, composed by vertical pasting. The category axioms are
/// checked.
pub fn t_category(m: &ModelStructure, a: usize, b: usize) -> Result<TCategory> {
    let c = &*m.cat;
    if a >= c.num_objects() || b >= c.num_objects() {
        return Err(Error::UnknownObject(format!("{a} or {b}")));
    }
    let objects = special_objects(m, a, b);
    let morphisms = special_morphisms(m, &objects);
    let lookup = |s: usize, t: usize, u: usize, v: usize| {
        morphisms
            .iter()
            .position(|x| {
                *x == SpecialMorphism {
                    source: s,
                    target: t,
                    u,
                    v,
                }
            })
            .expect("special morphisms are closed under composition")
    };
    let identities: Vec<usize> = objects
        .iter()
        .enumerate()
        .map(|(o, x)| lookup(o, o, c.identity(c.src(x.p)), c.identity(c.dst(x.i))))
        .collect();
    let object_names = objects
        .iter()
        .map(|x| {
            format!(
                "{}|{}|{}",
                c.morphism_name(x.p),
                c.morphism_name(x.h),
                c.morphism_name(x.i)
            )
        })
        .collect();
    let arrows = morphisms
        .iter()
        .enumerate()
        .map(|(n, x)| Morphism {
            name: format!("t{n}:{},{}", c.morphism_name(x.u), c.morphism_name(x.v)),
            src: x.source,
            dst: x.target,
        })
        .collect();
    let cat = FinCat::from_parts(object_names, arrows, identities, |g, f| {
        let (x, y) = (morphisms[f], morphisms[g]);
        let u = c.compose(y.u, x.u).expect("composable");
        let v = c.compose(y.v, x.v).expect("composable");
        lookup(x.source, y.target, u, v)
    });
    let violations = cat.axiom_violations();
    if !violations.is_empty() {
        return Err(Error::Category(violations));
    }
    Ok(TCategory {
        source: a,
        target: b,
        objects,
        morphisms,
        cat: Arc::new(cat),
    })
}

/// The unique morphism `x` with `first ∘ x = a` and `second ∘ x = b`, all
/// from `apex` into the cone's apex.
fn induced_into(c: &FinCat, apex: usize, into: usize, legs: [(usize, usize); 2]) -> Option<usize> {
    c.hom(apex, into)
        .iter()
        .copied()
        .find(|&x| legs.iter().all(|&(leg, want)| c.compose(leg, x) == Some(want)))
}

/// The unique morphism `x` with `x ∘ first = a` and `x ∘ second = b`.
fn induced_from(c: &FinCat, from: usize, target: usize, legs: [(usize, usize); 2]) -> Option<usize> {
    c.hom(from, target)
        .iter()
        .copied()
        .find(|&x| legs.iter().all(|&(leg, want)| c.compose(x, leg) == Some(want)))
}

struct Transported {
    object: SpecialObject,
    // projection P → X and insertion Y → Q
    q: usize,
    j: usize,
}

fn transport(m: &ModelStructure, s: SpecialObject, f: usize, g: usize) -> Result<Transported> {
    let c = &m.cat;
    let (p2, q) = if c.is_identity(f) {
        (s.p, c.identity(c.src(s.p)))
    } else {
        let cone = pullback(c, f, s.p).ok_or_else(|| {
            Error::LimitMissing(format!(
                "pullback of `{}` along `{}`",
                c.morphism_name(s.p),
                c.morphism_name(f)
            ))
        })?;
        (cone.legs[0], cone.legs[1])
    };
    let (j, i2) = if c.is_identity(g) {
        (c.identity(c.dst(s.i)), s.i)
    } else {
        let cone = pushout(c, s.i, g).ok_or_else(|| {
            Error::LimitMissing(format!(
                "pushout of `{}` along `{}`",
                c.morphism_name(s.i),
                c.morphism_name(g)
            ))
        })?;
        (cone.legs[0], cone.legs[1])
    };
    let h = c.compose_path(&[q, s.h, j]);
    Ok(Transported {
        object: SpecialObject { p: p2, h, i: i2 },
        q,
        j,
    })
}

/// Result of [`t_functoriality`].
#[derive(Clone, Debug)]
pub struct TFunctor {
    pub source: TCategory,
    pub target: TCategory,
    pub functor: Functor,
}

/// The functor `T(A, B) → T(A', B')` for `f : A' → A`, `g : B → B'`:
/// pull back the trivial fibration along `f`, push out the trivial
/// cofibration along `g`, and act on morphisms by the induced maps.
pub fn t_functoriality(m: &ModelStructure, f: usize, g: usize) -> Result<TFunctor> {
    let c = &*m.cat;
    let source = t_category(m, c.dst(f), c.src(g))?;
    let target = t_category(m, c.src(f), c.dst(g))?;
    let moved = source
        .objects
        .iter()
        .map(|&s| transport(m, s, f, g))
        .collect::<Result<Vec<_>>>()?;
    let objects = moved
        .iter()
        .map(|t| {
            target.object_of(&t.object).ok_or_else(|| {
                Error::Model(format!(
                    "transported hammock `{}|{}|{}` is not special",
                    c.morphism_name(t.object.p),
                    c.morphism_name(t.object.h),
                    c.morphism_name(t.object.i)
                ))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let morphisms = source
        .morphisms
        .iter()
        .map(|x| {
            let (s, t) = (&moved[x.source], &moved[x.target]);
            let u = induced_into(
                c,
                c.src(s.object.p),
                c.src(t.object.p),
                [
                    (t.object.p, s.object.p),
                    (t.q, c.compose(x.u, s.q).expect("composable")),
                ],
            );
            let v = induced_from(
                c,
                c.dst(s.object.i),
                c.dst(t.object.i),
                [
                    (s.j, c.compose(t.j, x.v).expect("composable")),
                    (s.object.i, t.object.i),
                ],
            );
            let image = u.zip(v).and_then(|(u, v)| {
                target.morphisms.iter().position(|y| {
                    *y == SpecialMorphism {
                        source: objects[x.source],
                        target: objects[x.target],
                        u,
                        v,
                    }
                })
            });
            image.ok_or_else(|| Error::Model("induced map between transported hammocks is missing".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let functor = Functor::new(source.cat.clone(), target.cat.clone(), objects, morphisms)?;
    Ok(TFunctor {
        source,
        target,
        functor,
    })
}

/// The comparison map from the nerve of `T(A, B)` into the hammock
/// hom-space, with both ends.
#[derive(Clone, Debug)]
pub struct NerveComparison {
    pub t: TCategory,
    pub hom: HomSpace,
    pub map: SSetMap,
}

fn paste_map(t: &TCategory, c: &FinCat, hom: &HomSpace, k: usize) -> Result<SSetMap> {
    let nerve = nerve_indexed(&t.cat, k);
    let levels = nerve
        .keys
        .iter()
        .map(|level| {
            level
                .iter()
                .map(|ch| {
                    let h = reduce(c, &t.paste(c, ch.start, &ch.arrows));
                    hom.index_of(&h).ok_or_else(|| {
                        Error::BoundExhausted(format!(
                            "`{}` has length {} beyond the bound {}",
                            h.label(c),
                            h.length(),
                            hom.max_length
                        ))
                    })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    SSetMap::new(Arc::new(nerve.sset), Arc::new(hom.sset().clone()), levels)
}

/// `N(T(A, B)) → hom(A, B)`: a chain is pasted into a hammock of length 3
/// and reduced. Needs `max_length ≥ 3`.
pub fn nerve_t_to_hom(m: &ModelStructure, a: usize, b: usize, k: usize, max_length: usize) -> Result<NerveComparison> {
    let t = t_category(m, a, b)?;
    let rel = m.relcat()?;
    let hom = hammock_hom_space(&rel, a, b, k, max_length)?;
    let map = paste_map(&t, &m.cat, &hom, k)?;
    Ok(NerveComparison { t, hom, map })
}

/// Homology evidence, through degree `d`, that the comparison map is a weak
/// equivalence.
pub fn special_vs_reduced_evidence(
    m: &ModelStructure,
    a: usize,
    b: usize,
    d: usize,
    max_length: usize,
) -> Result<EvidenceReport> {
    let cmp = nerve_t_to_hom(m, a, b, d + 1, max_length)?;
    weq_evidence(&cmp.map, d)
}

/// `H ↦ f · H · g` on hom-spaces, the target built with `max_length`.
fn whisker(m: &ModelStructure, from: &HomSpace, f: usize, g: usize, to: &HomSpace) -> Result<SSetMap> {
    let c = &*m.cat;
    let k = from.sset().k();
    let levels = from
        .space
        .keys
        .iter()
        .enumerate()
        .map(|(w, level)| {
            level
                .iter()
                .map(|h| {
                    let left = compose_hammocks(c, &Hammock::arrow(c, f, w), h)?;
                    let image = compose_hammocks(c, &left, &Hammock::arrow(c, g, w))?;
                    to.index_of(&image)
                        .ok_or_else(|| Error::BoundExhausted(format!("`{}` beyond the bound", image.label(c))))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    debug_assert_eq!(levels.len(), k + 1);
    SSetMap::new(Arc::new(from.sset().clone()), Arc::new(to.sset().clone()), levels)
}

/// Outcome of [`naturality_square_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NaturalityReport {
    /// Both routes induce the same maps on `π0` and on `H_i`, `i ≤ d`.
    pub commutes_in_homology: bool,
    pub strictly_commutes: bool,
}

/// Compares `N(T(A,B)) → hom(A,B) → hom(A',B')` with
/// `N(T(A,B)) → N(T(A',B')) → hom(A',B')` for `f : A' → A`, `g : B → B'`.
/// The source hom-space uses `max_length`, the target `max_length + 2`.
pub fn naturality_square_check(
    m: &ModelStructure,
    f: usize,
    g: usize,
    k: usize,
    d: usize,
    max_length: usize,
) -> Result<NaturalityReport> {
    let c = &*m.cat;
    let rel = m.relcat()?;
    let (a, b) = (c.dst(f), c.src(g));
    let (a2, b2) = (c.src(f), c.dst(g));
    let top = nerve_t_to_hom(m, a, b, k, max_length)?;
    let wide = hammock_hom_space(&rel, a2, b2, k, max_length + 2)?;
    let route1 = top.map.then(&whisker(m, &top.hom, f, g, &wide)?)?;
    let tf = t_functoriality(m, f, g)?;
    let across = nerve_map(&tf.functor, k)?;
    let route2 = across.then(&paste_map(&tf.target, c, &wide, k)?)?;
    let strictly_commutes = (0..=k).all(|n| route1.level(n) == route2.level(n));
    Ok(NaturalityReport {
        commutes_in_homology: homology_maps_agree(&route1, &route2, d)?,
        strictly_commutes,
    })
}
