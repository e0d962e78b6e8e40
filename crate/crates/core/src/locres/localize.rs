use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fincat::FinCat;
use crate::locres::graph::FreeCat;
use crate::locres::resolution::{degen_word, face_word, letters_up_to, Term};
use crate::modelcat::RelCat;
use crate::sset::{Indexed, TruncSSet};

/// A generator or the formal inverse of a weak-equivalence generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Letter<G> {
    pub gen: G,
    pub inverse: bool,
}

/// A word of letters read first letter first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ZigzagWord<G> {
    pub src: usize,
    pub dst: usize,
    pub letters: Vec<Letter<G>>,
}

fn cancels<G: Eq>(a: &Letter<G>, b: &Letter<G>) -> bool {
    a.gen == b.gen && a.inverse != b.inverse
}

/// Cancels adjacent inverse pairs to a fixpoint.
pub fn reduce<G: Eq>(letters: Vec<Letter<G>>) -> Vec<Letter<G>> {
    let mut out: Vec<Letter<G>> = Vec::with_capacity(letters.len());
    for l in letters {
        if out.last().is_some_and(|last| cancels(last, &l)) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

pub fn is_reduced<G: Eq>(letters: &[Letter<G>]) -> bool {
    letters.windows(2).all(|w| !cancels(&w[0], &w[1]))
}

impl<G: Clone + Eq> ZigzagWord<G> {
    pub fn is_reduced(&self) -> bool {
        is_reduced(&self.letters)
    }

    /// Concatenation followed by reduction.
    pub fn then(&self, other: &ZigzagWord<G>) -> Option<ZigzagWord<G>> {
        (self.dst == other.src).then(|| ZigzagWord {
            src: self.src,
            dst: other.dst,
            letters: reduce(self.letters.iter().chain(&other.letters).cloned().collect()),
        })
    }

    pub fn inverse(&self) -> ZigzagWord<G> {
        ZigzagWord {
            src: self.dst,
            dst: self.src,
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| Letter {
                    gen: l.gen.clone(),
                    inverse: !l.inverse,
                })
                .collect(),
        }
    }
}

/// A free category with some generators inverted; morphisms are reduced
/// zigzag words of length at most `max_length`.
#[derive(Clone, Debug, Serialize)]
pub struct LocalizedFreeCat {
    pub free: FreeCat,
    pub weq: Vec<bool>,
    pub max_length: usize,
    pub words: Vec<ZigzagWord<usize>>,
    /// No reduced word was cut off by the bound.
    pub complete: bool,
}

/// Reduced zigzags over the non-reflexive edges of `f.graph`, the edges in
/// `weq` also available backwards.
pub fn localize_free(f: &FreeCat, weq: &[usize], max_length: usize) -> Result<LocalizedFreeCat> {
    let g = &f.graph;
    let mut flags = vec![false; g.edges.len()];
    for &w in weq {
        if w >= g.edges.len() || g.is_reflexive(w) {
            return Err(Error::Precondition(format!("`{w}` is not a generator")));
        }
        flags[w] = true;
    }
    let letters: Vec<(Letter<usize>, usize, usize)> = g
        .generators()
        .flat_map(|e| {
            let (s, t) = (g.edges[e].src, g.edges[e].dst);
            let fwd = (Letter { gen: e, inverse: false }, s, t);
            let back = flags[e].then_some((Letter { gen: e, inverse: true }, t, s));
            std::iter::once(fwd).chain(back)
        })
        .collect();
    let mut words: Vec<ZigzagWord<usize>> = (0..g.vertices.len())
        .map(|v| ZigzagWord {
            src: v,
            dst: v,
            letters: vec![],
        })
        .collect();
    let mut frontier = words.clone();
    let mut complete = true;
    for len in 0..=max_length {
        let mut next = Vec::new();
        for w in &frontier {
            for (l, s, t) in &letters {
                if *s != w.dst || w.letters.last().is_some_and(|last| cancels(last, l)) {
                    continue;
                }
                if len == max_length {
                    complete = false;
                    continue;
                }
                let mut ls = w.letters.clone();
                ls.push(l.clone());
                next.push(ZigzagWord {
                    src: w.src,
                    dst: *t,
                    letters: ls,
                });
            }
        }
        words.extend(next.iter().cloned());
        frontier = next;
    }
    Ok(LocalizedFreeCat {
        free: f.clone(),
        weq: flags,
        max_length,
        words,
        complete,
    })
}

/// Critical-pair check of the cancellation rules: every word of length at
/// most three reduces to the same normal form whichever cancellation is
/// applied first. Returns the number of overlaps tested.
pub fn local_confluence_check(l: &LocalizedFreeCat) -> std::result::Result<usize, String> {
    let g = &l.free.graph;
    let letters: Vec<Letter<usize>> = g
        .generators()
        .flat_map(|e| {
            let inv = l.weq[e].then_some(Letter { gen: e, inverse: true });
            std::iter::once(Letter { gen: e, inverse: false }).chain(inv)
        })
        .collect();
    let mut tested = 0;
    for a in &letters {
        for b in letters.iter().filter(|b| cancels(a, b)) {
            for c in letters.iter().filter(|c| cancels(b, c)) {
                let w = vec![a.clone(), b.clone(), c.clone()];
                // cancel (a, b) first, or (b, c) first
                let left = reduce(w[2..].to_vec());
                let right = reduce(w[..1].to_vec());
                tested += 1;
                if left != right || reduce(w.clone()) != left {
                    return Err(format!("overlap on letters {}, {}, {}", a.gen, b.gen, c.gen));
                }
            }
        }
    }
    Ok(tested)
}

fn zigzag_label(c: &FinCat, w: &ZigzagWord<Term>) -> String {
    if w.letters.is_empty() {
        return format!("ε_{}", c.object_name(w.src));
    }
    w.letters
        .iter()
        .map(|l| {
            if l.inverse {
                format!("{}⁻¹", l.gen.label(c))
            } else {
                l.gen.label(c)
            }
        })
        .collect::<Vec<_>>()
        .join("·")
}

/// `d_i` on a level-`n` zigzag: letterwise face functor, then reduction.
fn zigzag_face(c: &FinCat, w: &ZigzagWord<Term>, i: usize) -> ZigzagWord<Term> {
    let mut out = Vec::new();
    for l in &w.letters {
        let image = face_word(c, std::slice::from_ref(&l.gen), i);
        if l.inverse {
            out.extend(image.into_iter().rev().map(|gen| Letter { gen, inverse: true }));
        } else {
            out.extend(image.into_iter().map(|gen| Letter { gen, inverse: false }));
        }
    }
    ZigzagWord {
        src: w.src,
        dst: w.dst,
        letters: reduce(out),
    }
}

fn zigzag_degen(w: &ZigzagWord<Term>, i: usize) -> ZigzagWord<Term> {
    ZigzagWord {
        src: w.src,
        dst: w.dst,
        letters: w
            .letters
            .iter()
            .map(|l| Letter {
                gen: degen_word(std::slice::from_ref(&l.gen), i).remove(0),
                inverse: l.inverse,
            })
            .collect(),
    }
}

/// Reduced level-`n` zigzags from `a` to `b` with at most `bound`
/// generators of `C` in total.
fn zigzags(rel: &RelCat, letters: &[Term], a: usize, b: usize, bound: usize) -> Vec<ZigzagWord<Term>> {
    let c = &*rel.cat;
    let moves: Vec<(Letter<Term>, usize, usize, usize)> = letters
        .iter()
        .flat_map(|t| {
            let (s, d, size) = (t.src(c), t.dst(c), t.size());
            let weq = t.leaves().iter().all(|&m| rel.is_weq(m));
            let fwd = (
                Letter {
                    gen: t.clone(),
                    inverse: false,
                },
                s,
                d,
                size,
            );
            let back = weq.then(|| {
                (
                    Letter {
                        gen: t.clone(),
                        inverse: true,
                    },
                    d,
                    s,
                    size,
                )
            });
            std::iter::once(fwd).chain(back)
        })
        .collect();
    let mut out = Vec::new();
    let mut stack = vec![(
        ZigzagWord {
            src: a,
            dst: a,
            letters: vec![],
        },
        0,
    )];
    while let Some((w, size)) = stack.pop() {
        if w.dst == b {
            out.push(w.clone());
        }
        for (l, s, d, n) in &moves {
            if *s != w.dst || size + n > bound || w.letters.last().is_some_and(|last| cancels(last, l)) {
                continue;
            }
            let mut ls = w.letters.clone();
            ls.push(l.clone());
            stack.push((
                ZigzagWord {
                    src: a,
                    dst: *d,
                    letters: ls,
                },
                size + n,
            ));
        }
    }
    out.sort();
    out
}

/// Simplicial-localisation hom-space: level `n` is the set of reduced
/// zigzags in `F_n C[F_n W⁻¹]` from `A` to `B` with at most `max_length`
/// generators of `C` in the fully flattened word.
#[derive(Clone, Debug)]
pub struct LocHomSpace {
    pub source: usize,
    pub target: usize,
    pub max_length: usize,
    pub space: Indexed<ZigzagWord<Term>>,
    /// Level sizes did not change when the bound was raised by one.
    pub stable: bool,
}

impl LocHomSpace {
    pub fn sset(&self) -> &TruncSSet {
        &self.space.sset
    }
}

fn level_keys(rel: &RelCat, a: usize, b: usize, k: usize, bound: usize) -> Vec<Vec<ZigzagWord<Term>>> {
    let (letters, _) = letters_up_to(&rel.cat, k, bound);
    (0..=k).map(|n| zigzags(rel, &letters[n], a, b, bound)).collect()
}

pub fn loc_hom_space(rel: &RelCat, a: usize, b: usize, k: usize, max_length: usize) -> Result<LocHomSpace> {
    let c = &*rel.cat;
    if a >= c.num_objects() || b >= c.num_objects() {
        return Err(Error::UnknownObject(format!("{a} or {b}")));
    }
    let keys = level_keys(rel, a, b, k, max_length);
    let larger: Vec<usize> = level_keys(rel, a, b, k, max_length + 1).iter().map(Vec::len).collect();
    let stable = keys.iter().map(Vec::len).eq(larger);
    let space = TruncSSet::from_keys(
        k,
        keys,
        |_, i, w| zigzag_face(c, w, i),
        |_, i, w| zigzag_degen(w, i),
        |w| zigzag_label(c, w),
    )?;
    Ok(LocHomSpace {
        source: a,
        target: b,
        max_length,
        space,
        stable,
    })
}

/// Whether the bounded level sets are closed under faces and degeneracies.
pub fn zigzag_operators_close(rel: &RelCat, a: usize, b: usize, k: usize, bound: usize) -> bool {
    let keys = level_keys(rel, a, b, k, bound);
    let sets: Vec<HashSet<_>> = keys.iter().map(|l| l.iter().cloned().collect()).collect();
    (1..=k).all(|n| {
        keys[n]
            .iter()
            .all(|w| (0..=n).all(|i| sets[n - 1].contains(&zigzag_face(&rel.cat, w, i))))
    }) && (0..k).all(|n| {
        keys[n]
            .iter()
            .all(|w| (0..=n).all(|i| sets[n + 1].contains(&zigzag_degen(w, i))))
    })
}
