use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fincat::{FinCat, Functor, Morphism};
use crate::modelcat::{finite_colimit, finite_limit, ModelStructure};
use crate::simplex;

/// A simplicial object `X_0, …, X_k` in a finite category.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialObj {
    pub cat: Arc<FinCat>,
    levels: Vec<usize>,
    // faces[n][i] : X_n → X_{n-1}
    faces: Vec<Vec<usize>>,
    // degens[n][i] : X_n → X_{n+1}
    degens: Vec<Vec<usize>>,
}

/// A cosimplicial object, stored as a simplicial object in the opposite
/// category (morphism ids are shared with the original category).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosimplicialObj {
    pub cat: Arc<FinCat>,
    dual: SimplicialObj,
}

impl SimplicialObj {
    /// Checks endpoints and the simplicial identities.
    pub fn new(
        cat: Arc<FinCat>,
        levels: Vec<usize>,
        faces: Vec<Vec<usize>>,
        degens: Vec<Vec<usize>>,
    ) -> Result<SimplicialObj> {
        let x = Self::raw(cat, levels, faces, degens)?;
        x.check_identities()?;
        Ok(x)
    }

    /// Shapes and endpoints only.
    pub(crate) fn raw(
        cat: Arc<FinCat>,
        levels: Vec<usize>,
        faces: Vec<Vec<usize>>,
        degens: Vec<Vec<usize>>,
    ) -> Result<SimplicialObj> {
        let top = levels
            .len()
            .checked_sub(1)
            .ok_or_else(|| Error::SSet("no levels".into()))?;
        if faces.len() != top + 1 || degens.len() != top + 1 {
            return Err(Error::SSet(format!("expected {} levels of operators", top + 1)));
        }
        for n in 0..=top {
            let nf = if n == 0 { 0 } else { n + 1 };
            let nd = if n < top { n + 1 } else { 0 };
            if faces[n].len() != nf || degens[n].len() != nd {
                return Err(Error::SSet(format!("wrong number of operators at level {n}")));
            }
            for (i, &d) in faces[n].iter().enumerate() {
                if d >= cat.num_morphisms() || cat.src(d) != levels[n] || cat.dst(d) != levels[n - 1] {
                    return Err(Error::SSet(format!("d_{i} at level {n} has the wrong endpoints")));
                }
            }
            for (i, &s) in degens[n].iter().enumerate() {
                if s >= cat.num_morphisms() || cat.src(s) != levels[n] || cat.dst(s) != levels[n + 1] {
                    return Err(Error::SSet(format!("s_{i} at level {n} has the wrong endpoints")));
                }
            }
        }
        Ok(SimplicialObj {
            cat,
            levels,
            faces,
            degens,
        })
    }

    /// Every level `a`, every operator the identity.
    pub fn constant(cat: Arc<FinCat>, a: usize, k: usize) -> SimplicialObj {
        let id = cat.identity(a);
        SimplicialObj {
            levels: vec![a; k + 1],
            faces: (0..=k).map(|n| if n == 0 { vec![] } else { vec![id; n + 1] }).collect(),
            degens: (0..=k).map(|n| if n < k { vec![id; n + 1] } else { vec![] }).collect(),
            cat,
        }
    }

    pub fn k(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, n: usize) -> usize {
        self.levels[n]
    }

    pub fn levels(&self) -> &[usize] {
        &self.levels
    }

    pub fn face(&self, n: usize, i: usize) -> usize {
        self.faces[n][i]
    }

    pub fn degen(&self, n: usize, i: usize) -> usize {
        self.degens[n][i]
    }

    /// `X(α) : X_n → X_m` for a monotone `α : [m] → [n]`.
    pub fn apply(&self, alpha: &[usize], n: usize) -> usize {
        let c = &*self.cat;
        let w = simplex::decompose(alpha, n);
        let mut acc = c.identity(self.levels[n]);
        let mut level = n;
        for &j in &w.faces {
            acc = c.compose(self.faces[level][j], acc).expect("composable");
            level -= 1;
        }
        for &i in &w.degeneracies {
            acc = c.compose(self.degens[level][i], acc).expect("composable");
            level += 1;
        }
        acc
    }

    fn check_identities(&self) -> Result<()> {
        let c = &*self.cat;
        let k = self.k();
        let fail = |what: String| Err(Error::SSet(format!("simplicial identity fails: {what}")));
        for n in 2..=k {
            for j in 1..=n {
                for i in 0..j {
                    if c.compose(self.faces[n - 1][i], self.faces[n][j])
                        != c.compose(self.faces[n - 1][j - 1], self.faces[n][i])
                    {
                        return fail(format!("d_{i} d_{j} = d_{} d_{i} at level {n}", j - 1));
                    }
                }
            }
        }
        for n in 0..k {
            for j in 0..=n {
                let s = self.degens[n][j];
                for i in 0..=n + 1 {
                    let lhs = c.compose(self.faces[n + 1][i], s);
                    let rhs = if i < j {
                        c.compose(self.degens[n - 1][j - 1], self.faces[n][i])
                    } else if i == j || i == j + 1 {
                        Some(c.identity(self.levels[n]))
                    } else {
                        c.compose(self.degens[n - 1][j], self.faces[n][i - 1])
                    };
                    if lhs != rhs {
                        return fail(format!("d_{i} s_{j} at level {n}"));
                    }
                }
            }
        }
        for n in 0..k.saturating_sub(1) {
            for j in 0..=n {
                for i in 0..=j {
                    if c.compose(self.degens[n + 1][i], self.degens[n][j])
                        != c.compose(self.degens[n + 1][j + 1], self.degens[n][i])
                    {
                        return fail(format!("s_{i} s_{j} = s_{} s_{i} at level {n}", j + 1));
                    }
                }
            }
        }
        Ok(())
    }

    /// Keeps levels `0..=k`.
    pub fn truncate(&self, k: usize) -> SimplicialObj {
        let mut x = self.clone();
        x.levels.truncate(k + 1);
        x.faces.truncate(k + 1);
        x.degens.truncate(k + 1);
        x.degens[k].clear();
        x
    }
}

impl CosimplicialObj {
    /// Checks endpoints and the cosimplicial identities. `cofaces[n][i]` is
    /// `d^i : A^{n-1} → A^n`, `codegens[n][i]` is `s^i : A^{n+1} → A^n`.
    pub fn new(
        cat: Arc<FinCat>,
        levels: Vec<usize>,
        cofaces: Vec<Vec<usize>>,
        codegens: Vec<Vec<usize>>,
    ) -> Result<CosimplicialObj> {
        let op = Arc::new(cat.opposite());
        let dual = SimplicialObj::new(op, levels, cofaces, codegens).map_err(|e| match e {
            Error::SSet(s) => Error::SSet(s.replace("simplicial", "cosimplicial")),
            e => e,
        })?;
        Ok(CosimplicialObj { cat, dual })
    }

    pub fn constant(cat: Arc<FinCat>, a: usize, k: usize) -> CosimplicialObj {
        let op = Arc::new(cat.opposite());
        CosimplicialObj {
            cat,
            dual: SimplicialObj::constant(op, a, k),
        }
    }

    pub(crate) fn from_dual(cat: Arc<FinCat>, dual: SimplicialObj) -> CosimplicialObj {
        CosimplicialObj { cat, dual }
    }

    /// The same data as a simplicial object in the opposite category.
    pub fn dual(&self) -> &SimplicialObj {
        &self.dual
    }

    pub fn k(&self) -> usize {
        self.dual.k()
    }

    pub fn level(&self, n: usize) -> usize {
        self.dual.level(n)
    }

    pub fn levels(&self) -> &[usize] {
        self.dual.levels()
    }

    /// `d^i : A^{n-1} → A^n`.
    pub fn coface(&self, n: usize, i: usize) -> usize {
        self.dual.face(n, i)
    }

    /// `s^i : A^{n+1} → A^n`.
    pub fn codegen(&self, n: usize, i: usize) -> usize {
        self.dual.degen(n, i)
    }

    /// `A(α) : A^m → A^n` for a monotone `α : [m] → [n]`.
    pub fn apply(&self, alpha: &[usize], n: usize) -> usize {
        self.dual.apply(alpha, n)
    }
}

/// The comparison morphisms tested for weak constancy.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeakConstancy {
    pub weakly_constant: bool,
    /// Names of the composite degeneracies `X_0 → X_n` (dually the
    /// composite codegeneracies `A^n → A^0`), in level order.
    pub tested: Vec<String>,
}

/// The composite degeneracy `s_0^n : X_0 → X_n`.
fn section(x: &SimplicialObj, n: usize) -> usize {
    x.apply(&vec![0; n + 1], 0)
}

fn weak_constancy(x: &SimplicialObj, weq: impl Fn(usize) -> bool) -> WeakConstancy {
    let maps: Vec<usize> = (0..=x.k()).map(|n| section(x, n)).collect();
    WeakConstancy {
        weakly_constant: maps.iter().all(|&m| weq(m)),
        tested: maps.iter().map(|&m| x.cat.morphism_name(m).to_string()).collect(),
    }
}

/// Every composite degeneracy `X_0 → X_n` is a weak equivalence.
pub fn is_weakly_constant(m: &ModelStructure, x: &SimplicialObj) -> WeakConstancy {
    weak_constancy(x, |f| m.is_weq(f))
}

/// Every composite codegeneracy `A^n → A^0` is a weak equivalence.
pub fn is_weakly_constant_cosimplicial(m: &ModelStructure, x: &CosimplicialObj) -> WeakConstancy {
    weak_constancy(&x.dual, |f| m.is_weq(f))
}

/// A latching or matching object with its legs, indexed by the monotone
/// maps labelling the objects of the indexing category.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LimitResult {
    pub apex: usize,
    pub index: Vec<Vec<usize>>,
    pub legs: Vec<usize>,
}

/// The indexing poset and diagram for latching (`degeneracies`) or matching
/// objects at level `n`; only levels below `n` are read.
fn reedy_diagram(x: &SimplicialObj, n: usize, degeneracies: bool) -> (Vec<Vec<usize>>, Functor) {
    let c = &x.cat;
    let mut index: Vec<Vec<usize>> = Vec::new();
    for m in 0..n {
        for alpha in if degeneracies {
            simplex::monotone_maps(n, m)
        } else {
            simplex::monotone_maps(m, n)
        } {
            let keep = if degeneracies {
                simplex::is_surjective(&alpha, m)
            } else {
                simplex::is_injective(&alpha)
            };
            if keep {
                index.push(alpha);
            }
        }
    }
    let target = |alpha: &[usize]| {
        if degeneracies {
            alpha.iter().max().copied().unwrap_or(0)
        } else {
            alpha.len() - 1
        }
    };
    // latching: σ' → σ when τσ = σ', valued X(τ) : X_{m'} → X_m;
    // matching: δ → δ' when δε = δ', valued X(ε) : X_m → X_{m'}
    let mut morphisms = Vec::new();
    let mut values = Vec::new();
    let mut identities = vec![0; index.len()];
    for (a, alpha) in index.iter().enumerate() {
        for (b, beta) in index.iter().enumerate() {
            let op = if degeneracies {
                // τ : [m_b] → [m_a] with τ ∘ β = α
                let mut tau = vec![usize::MAX; target(beta) + 1];
                let ok = beta.iter().zip(alpha).all(|(&j, &v)| {
                    let old = std::mem::replace(&mut tau[j], v);
                    old == usize::MAX || old == v
                });
                (ok && tau.windows(2).all(|w| w[0] <= w[1])).then(|| x.apply(&tau, target(alpha)))
            } else {
                // ε : [m_b] → [m_a] with α ∘ ε = β
                let eps: Option<Vec<usize>> = beta.iter().map(|v| alpha.iter().position(|w| w == v)).collect();
                eps.map(|e| x.apply(&e, alpha.len() - 1))
            };
            let Some(value) = op else { continue };
            let (src, dst) = (a, b);
            if a == b {
                identities[a] = morphisms.len();
            }
            morphisms.push(Morphism {
                name: format!("{src}>{dst}"),
                src,
                dst,
            });
            values.push(value);
        }
    }
    let names = index
        .iter()
        .map(|a| a.iter().map(|v| v.to_string()).collect::<String>())
        .collect();
    let by_ends: std::collections::HashMap<(usize, usize), usize> =
        morphisms.iter().enumerate().map(|(i, m)| ((m.src, m.dst), i)).collect();
    let ms = morphisms.clone();
    let shape = FinCat::from_parts(names, morphisms, identities, |g, f| by_ends[&(ms[f].src, ms[g].dst)]);
    let objects = index.iter().map(|alpha| x.level(target(alpha))).collect();
    let functor = Functor::new(Arc::new(shape), c.clone(), objects, values).expect("Reedy diagrams are functors");
    (index, functor)
}

pub(crate) fn latching(x: &SimplicialObj, n: usize) -> Result<LimitResult> {
    let (index, d) = reedy_diagram(x, n, true);
    let cone = finite_colimit(&d).ok_or_else(|| Error::LimitMissing(format!("latching object at level {n}")))?;
    Ok(LimitResult {
        apex: cone.apex,
        index,
        legs: cone.legs,
    })
}

pub(crate) fn matching(x: &SimplicialObj, n: usize) -> Result<LimitResult> {
    let (index, d) = reedy_diagram(x, n, false);
    let cone = finite_limit(&d).ok_or_else(|| Error::LimitMissing(format!("matching object at level {n}")))?;
    Ok(LimitResult {
        apex: cone.apex,
        index,
        legs: cone.legs,
    })
}

fn check_level(x: &SimplicialObj, n: usize) -> Result<()> {
    if n > x.k() {
        return Err(Error::Degree { degree: n, k: x.k() });
    }
    Ok(())
}

/// The colimit of `X_m` over the proper degeneracy operators into level `n`.
pub fn latching_object(x: &SimplicialObj, n: usize) -> Result<LimitResult> {
    check_level(x, n)?;
    latching(x, n)
}

/// The limit of `X_m` over the proper face operators out of level `n`.
pub fn matching_object(x: &SimplicialObj, n: usize) -> Result<LimitResult> {
    check_level(x, n)?;
    matching(x, n)
}

/// The unique morphism `X_n → M_n X` whose composites with the legs are the
/// face operators.
pub(crate) fn matching_map(x: &SimplicialObj, n: usize, mo: &LimitResult) -> Option<usize> {
    let c = &*x.cat;
    let wanted: Vec<usize> = mo.index.iter().map(|delta| x.apply(delta, n)).collect();
    c.hom(x.level(n), mo.apex).iter().copied().find(|&q| {
        mo.legs
            .iter()
            .zip(&wanted)
            .all(|(&leg, &w)| c.compose(leg, q) == Some(w))
    })
}
