use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fincat::FinCat;
use crate::locres::graph::FreeCat;

/// A letter of the standard resolution. Level-0 letters are the
/// non-identity morphisms of `C`; a level-`n+1` letter is a non-empty
/// composable word of level-`n` letters, i.e. a non-identity morphism of
/// `F_n C`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Term {
    Gen(usize),
    Word(Vec<Term>),
}

impl Term {
    fn wrap(self) -> Term {
        Term::Word(vec![self])
    }

    fn children(&self) -> &[Term] {
        match self {
            Term::Word(ch) => ch,
            Term::Gen(_) => &[],
        }
    }

    /// Generators of `C` in the fully flattened word.
    pub fn leaves(&self) -> Vec<usize> {
        match self {
            Term::Gen(m) => vec![*m],
            Term::Word(ch) => ch.iter().flat_map(Term::leaves).collect(),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Term::Gen(_) => 1,
            Term::Word(ch) => ch.iter().map(Term::size).sum(),
        }
    }

    pub fn src(&self, c: &FinCat) -> usize {
        match self {
            Term::Gen(m) => c.src(*m),
            Term::Word(ch) => ch[0].src(c),
        }
    }

    pub fn dst(&self, c: &FinCat) -> usize {
        match self {
            Term::Gen(m) => c.dst(*m),
            Term::Word(ch) => ch[ch.len() - 1].dst(c),
        }
    }

    pub fn label(&self, c: &FinCat) -> String {
        match self {
            Term::Gen(m) => c.morphism_name(*m).to_string(),
            Term::Word(ch) => format!("⟨{}⟩", ch.iter().map(|t| t.label(c)).collect::<Vec<_>>().join(",")),
        }
    }
}

/// `d_j` inside a letter: `j = 0` multiplies out this letter, larger `j`
/// descend. `None` when the letter becomes an identity.
fn face_node(c: &FinCat, t: &Term, j: usize) -> Option<Term> {
    let ch = t.children();
    if j == 0 {
        if let Some(Term::Gen(_)) = ch.first() {
            let path: Vec<usize> = ch.iter().flat_map(Term::leaves).collect();
            let m = c.compose_path(&path);
            return (!c.is_identity(m)).then_some(Term::Gen(m));
        }
        return Some(Term::Word(
            ch.iter().flat_map(|x| x.children().iter().cloned()).collect(),
        ));
    }
    let v: Vec<Term> = ch.iter().filter_map(|x| face_node(c, x, j - 1)).collect();
    (!v.is_empty()).then_some(Term::Word(v))
}

fn degen_node(t: &Term, j: usize) -> Term {
    let ch = t.children();
    if j == 0 {
        Term::Word(ch.iter().cloned().map(Term::wrap).collect())
    } else {
        Term::Word(ch.iter().map(|x| degen_node(x, j - 1)).collect())
    }
}

/// `d_i : F_n C → F_{n-1} C` on a word of level-`n` letters (`n ≥ 1`).
/// Face `i` multiplies out nesting depth `i`, the outermost being `0`.
pub fn face_word(c: &FinCat, letters: &[Term], i: usize) -> Vec<Term> {
    if i == 0 {
        letters.iter().flat_map(|l| l.children().iter().cloned()).collect()
    } else {
        letters.iter().filter_map(|l| face_node(c, l, i - 1)).collect()
    }
}

/// `s_i : F_n C → F_{n+1} C`: wraps the letters at nesting depth `i`.
pub fn degen_word(letters: &[Term], i: usize) -> Vec<Term> {
    if i == 0 {
        letters.iter().cloned().map(Term::wrap).collect()
    } else {
        letters.iter().map(|l| degen_node(l, i - 1)).collect()
    }
}

/// A morphism of `F_n C`: a composable word of level-`n` letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FreeArrow {
    pub src: usize,
    pub dst: usize,
    pub letters: Vec<Term>,
}

impl FreeArrow {
    pub fn size(&self) -> usize {
        self.letters.iter().map(Term::size).sum()
    }

    pub fn label(&self, c: &FinCat) -> String {
        if self.letters.is_empty() {
            format!("ε_{}", c.object_name(self.src))
        } else {
            self.letters.iter().map(|t| t.label(c)).collect::<Vec<_>>().join("")
        }
    }
}

/// Non-empty composable words over `letters` with at most `bound`
/// generators in total; the flag records whether the bound cut a word.
pub(crate) fn words(c: &FinCat, letters: &[Term], bound: usize) -> (Vec<FreeArrow>, bool) {
    let sizes: Vec<usize> = letters.iter().map(Term::size).collect();
    let mut out = Vec::new();
    let mut clipped = false;
    let mut stack: Vec<(FreeArrow, usize)> = c
        .objects()
        .map(|o| {
            (
                FreeArrow {
                    src: o,
                    dst: o,
                    letters: vec![],
                },
                0,
            )
        })
        .collect();
    while let Some((w, size)) = stack.pop() {
        for (l, t) in letters.iter().enumerate() {
            if t.src(c) != w.dst {
                continue;
            }
            if size + sizes[l] > bound {
                clipped = true;
                continue;
            }
            let mut letters = w.letters.clone();
            letters.push(t.clone());
            let next = FreeArrow {
                src: w.src,
                dst: t.dst(c),
                letters,
            };
            out.push(next.clone());
            stack.push((next, size + sizes[l]));
        }
    }
    out.sort();
    (out, clipped)
}

/// `F_0 C, …, F_{n_max} C`, each bounded by the number of generators of
/// `C` in a fully flattened word.
#[derive(Clone, Debug)]
pub struct StandardResolution {
    pub cat: Arc<FinCat>,
    pub max_length: usize,
    /// `letters[n]`: the letters of level `n`.
    pub letters: Vec<Vec<Term>>,
    /// `levels[n]`: the morphisms of `F_n C`, identities first.
    pub levels: Vec<Vec<FreeArrow>>,
    /// Per level: no morphism was cut off by the bound.
    pub complete: Vec<bool>,
}

/// Level-`n` letters for `n ≤ n_max + 1`, with a clipping flag per level.
pub(crate) fn letters_up_to(c: &FinCat, n_max: usize, bound: usize) -> (Vec<Vec<Term>>, Vec<bool>) {
    let mut letters = vec![c
        .morphism_ids()
        .filter(|&m| !c.is_identity(m) && bound >= 1)
        .map(Term::Gen)
        .collect::<Vec<_>>()];
    let mut complete = vec![true];
    for n in 0..n_max {
        let (ws, clipped) = words(c, &letters[n], bound);
        letters.push(ws.into_iter().map(|w| Term::Word(w.letters)).collect());
        complete.push(!clipped && complete[n]);
    }
    (letters, complete)
}

pub fn standard_resolution(c: Arc<FinCat>, n_max: usize, max_length: usize) -> StandardResolution {
    let (letters, _) = letters_up_to(&c, n_max, max_length);
    let mut levels = Vec::new();
    let mut complete = Vec::new();
    let mut below = true;
    for level_letters in &letters[..=n_max] {
        let (ws, clipped) = words(&c, level_letters, max_length);
        below &= !clipped;
        complete.push(below);
        let ids = c.objects().map(|o| FreeArrow {
            src: o,
            dst: o,
            letters: vec![],
        });
        levels.push(ids.chain(ws).collect());
    }
    StandardResolution {
        cat: c,
        max_length,
        letters,
        levels,
        complete,
    }
}

/// Outcome of checking the simplicial-category identities.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ResolutionReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl ResolutionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failures.len() < 20 {
            self.failures.push(what());
        }
    }
}

impl StandardResolution {
    pub fn n_max(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn face(&self, i: usize, f: &FreeArrow) -> FreeArrow {
        FreeArrow {
            src: f.src,
            dst: f.dst,
            letters: face_word(&self.cat, &f.letters, i),
        }
    }

    pub fn degen(&self, i: usize, f: &FreeArrow) -> FreeArrow {
        FreeArrow {
            src: f.src,
            dst: f.dst,
            letters: degen_word(&f.letters, i),
        }
    }

    /// `U : F_0 C → C`, composing the word.
    pub fn augmentation(&self, f: &FreeArrow) -> usize {
        let path: Vec<usize> = f.letters.iter().flat_map(Term::leaves).collect();
        if path.is_empty() {
            self.cat.identity(f.src)
        } else {
            self.cat.compose_path(&path)
        }
    }

    fn concat(f: &FreeArrow, g: &FreeArrow) -> Option<FreeArrow> {
        (f.dst == g.src).then(|| FreeArrow {
            src: f.src,
            dst: g.dst,
            letters: f.letters.iter().chain(&g.letters).cloned().collect(),
        })
    }

    /// Simplicial identities on every listed morphism, functoriality of the
    /// operators on composable pairs, and `U d_0 = U d_1` on level 1.
    pub fn check_identities(&self) -> ResolutionReport {
        let mut r = ResolutionReport::default();
        let c = &*self.cat;
        let top = self.n_max();
        for (n, level) in self.levels.iter().enumerate() {
            for f in level {
                let l = || f.label(c);
                if n >= 2 {
                    for j in 1..=n {
                        for i in 0..j {
                            let a = self.face(i, &self.face(j, f));
                            let b = self.face(j - 1, &self.face(i, f));
                            r.record(a == b, || format!("d_{i} d_{j} ≠ d_{} d_{i} on {}", j - 1, l()));
                        }
                    }
                }
                for j in 0..=n {
                    let s = self.degen(j, f);
                    for i in 0..=n + 1 {
                        let a = self.face(i, &s);
                        let b = if i < j {
                            self.degen(j - 1, &self.face(i, f))
                        } else if i == j || i == j + 1 {
                            f.clone()
                        } else {
                            self.degen(j, &self.face(i - 1, f))
                        };
                        r.record(a == b, || format!("d_{i} s_{j} on {}", l()));
                    }
                    if n < top {
                        for i in 0..=j {
                            let a = self.degen(i, &self.degen(j, f));
                            let b = self.degen(j + 1, &self.degen(i, f));
                            r.record(a == b, || format!("s_{i} s_{j} on {}", l()));
                        }
                    }
                }
                if n == 1 {
                    let (a, b) = (self.augmentation(&self.face(0, f)), self.augmentation(&self.face(1, f)));
                    r.record(a == b, || format!("U d_0 ≠ U d_1 on {}", l()));
                }
            }
            for f in level {
                for g in level.iter().filter(|g| g.src == f.dst) {
                    let fg = Self::concat(f, g).expect("composable");
                    if n >= 1 {
                        for i in 0..=n {
                            let ok = Some(self.face(i, &fg)) == Self::concat(&self.face(i, f), &self.face(i, g));
                            r.record(ok, || {
                                format!("d_{i} is not functorial on {} then {}", f.label(c), g.label(c))
                            });
                        }
                    } else {
                        let ok = c.compose(self.augmentation(g), self.augmentation(f)) == Some(self.augmentation(&fg));
                        r.record(ok, || {
                            format!("U is not functorial on {} then {}", f.label(c), g.label(c))
                        });
                    }
                }
            }
        }
        r
    }
}

/// `U` on the words of a bounded free category built from `c`, whose
/// edges are the morphisms of `c`. Functoriality is checked on every
/// composable pair within the bound.
pub fn augmentation(f0: &FreeCat, c: &FinCat) -> Result<Vec<usize>> {
    if f0.graph.edges.len() != c.num_morphisms() || f0.graph.vertices.len() != c.num_objects() {
        return Err(Error::Functor("free category is not built from this category".into()));
    }
    let images: Vec<usize> = f0
        .words
        .iter()
        .map(|p| {
            if p.edges.is_empty() {
                c.identity(p.src)
            } else {
                c.compose_path(&p.edges)
            }
        })
        .collect();
    let index: std::collections::HashMap<_, _> = f0.words.iter().enumerate().map(|(i, p)| (p, i)).collect();
    for (i, f) in f0.words.iter().enumerate() {
        for (j, g) in f0.words.iter().enumerate() {
            if let Some(fg) = f0.compose(f, g) {
                if c.compose(images[j], images[i]) != Some(images[index[&fg]]) {
                    return Err(Error::Functor(format!(
                        "augmentation is not functorial on {} then {}",
                        f0.label(f),
                        f0.label(g)
                    )));
                }
            }
        }
    }
    Ok(images)
}
