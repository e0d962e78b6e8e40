use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fincat::{monotone_of, truncated_simplex_category, FinCat};
use crate::hocolim::{bk_colim_indexed, dual_bk_colim, BkSimplex, SSetDiagram};
use crate::homres::{
    build_cosimplicial_resolution, build_simplicial_resolution, CosimplicialObj, CosimplicialResolution, SimplicialObj,
    SimplicialResolution,
};
use crate::modelcat::{initial, ModelStructure};
use crate::simplex;
use crate::sset::{weq_evidence, Indexed, SSetMap, TruncSSet};

fn same_category(a: &Arc<FinCat>, b: &Arc<FinCat>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

fn hom_complex_indexed(a: &CosimplicialObj, b: &SimplicialObj) -> Result<Indexed<usize>> {
    if a.k() != b.k() {
        return Err(Error::TruncationMismatch {
            expected: b.k(),
            found: a.k(),
        });
    }
    if !same_category(&a.cat, &b.cat) {
        return Err(Error::Precondition("objects live in different categories".into()));
    }
    let c = &*b.cat;
    let keys = (0..=b.k()).map(|n| c.hom(a.level(n), b.level(n)).to_vec()).collect();
    TruncSSet::from_keys(
        b.k(),
        keys,
        |n, i, &phi| c.compose_path(&[a.coface(n, i), phi, b.face(n, i)]),
        |n, i, &phi| c.compose_path(&[a.codegen(n, i), phi, b.degen(n, i)]),
        |&phi| c.morphism_name(phi).to_string(),
    )
}

/// Level `n` is `Hom(A^n, B_n)`; faces and degeneracies act on both sides.
pub fn total_hom_complex(a: &CosimplicialObj, b: &SimplicialObj) -> Result<TruncSSet> {
    Ok(hom_complex_indexed(a, b)?.sset)
}

/// Level `n` is `Hom(A, B_n)`, operators by postcomposition.
pub fn right_hom_complex(a: usize, b: &SimplicialObj) -> Result<TruncSSet> {
    total_hom_complex(&CosimplicialObj::constant(b.cat.clone(), a, b.k()), b)
}

/// Level `n` is `Hom(A^n, B)`, operators by precomposition.
pub fn left_hom_complex(a: &CosimplicialObj, b: usize) -> Result<TruncSSet> {
    total_hom_complex(a, &SimplicialObj::constant(a.cat.clone(), b, a.k()))
}

/// Morphism ids of `Δ≤j` by monotone map.
fn simplex_operators(shape: &FinCat) -> HashMap<Vec<usize>, usize> {
    shape
        .morphism_ids()
        .map(|e| {
            let mut key = monotone_of(shape, e);
            // maps with equal values but different codomains differ
            key.push(usize::MAX - shape.dst(e));
            (key, e)
        })
        .collect()
}

fn operator(ops: &HashMap<Vec<usize>, usize>, alpha: &[usize], target: usize) -> usize {
    let mut key = alpha.to_vec();
    key.push(usize::MAX - target);
    ops[&key]
}

struct Ranks(HashMap<(usize, usize), HashMap<Vec<usize>, usize>>);

impl Ranks {
    fn new(j: usize, k: usize) -> Ranks {
        let mut m = HashMap::new();
        for p in 0..=j {
            for n in 0..=k + 1 {
                let r = simplex::monotone_maps(p, n)
                    .into_iter()
                    .enumerate()
                    .map(|(i, a)| (a, i))
                    .collect();
                m.insert((p, n), r);
            }
        }
        Ranks(m)
    }

    fn rank(&self, p: usize, n: usize, a: &[usize]) -> usize {
        self.0[&(p, n)][a]
    }
}

/// Totalisation of a cosimplicial simplicial set given as a diagram over
/// `Δ≤j`, truncated at `k`.
///
/// An `n`-simplex is a natural family `Δ^n × Δ^m → X^m`; by naturality it is
/// determined by the values `g_p(a) ∈ X^p_p` on the simplices `(a, ι_p)`,
/// subject to `d_i g_p(a) = X(δ^i) g_{p-1}(a δ_i)` and
/// `s_i g_p(a) = X(σ^i) g_{p+1}(a σ_i)`. These families are enumerated by
/// backtracking.
pub fn tot(x: &SSetDiagram, k: usize) -> Result<TruncSSet> {
    let j = x
        .shape
        .num_objects()
        .checked_sub(1)
        .ok_or_else(|| Error::Diagram("empty cosimplicial object".into()))?;
    if *x.shape != truncated_simplex_category(j) {
        return Err(Error::Diagram(
            "tot needs a diagram over a truncated simplex category".into(),
        ));
    }
    if x.k() < j {
        return Err(Error::TruncationMismatch {
            expected: j,
            found: x.k(),
        });
    }
    let ops = simplex_operators(&x.shape);
    let ranks = Ranks::new(j, k);
    let keys = (0..=k).map(|n| families(x, &ops, &ranks, j, n)).collect();
    TruncSSet::from_keys(
        k,
        keys,
        |n, i, g: &Vec<Vec<usize>>| {
            let delta = simplex::coface(n, i);
            (0..=j)
                .map(|p| {
                    simplex::monotone_maps(p, n - 1)
                        .iter()
                        .map(|a| g[p][ranks.rank(p, n, &simplex::compose(&delta, a))])
                        .collect()
                })
                .collect()
        },
        |n, i, g| {
            let sigma = simplex::codegeneracy(n, i);
            (0..=j)
                .map(|p| {
                    simplex::monotone_maps(p, n + 1)
                        .iter()
                        .map(|a| g[p][ranks.rank(p, n, &simplex::compose(&sigma, a))])
                        .collect()
                })
                .collect()
        },
        |g| {
            g.iter()
                .map(|level| level.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
                .collect::<Vec<_>>()
                .join("|")
        },
    )
    .map(|x| x.sset)
}

fn families(
    x: &SSetDiagram,
    ops: &HashMap<Vec<usize>, usize>,
    ranks: &Ranks,
    j: usize,
    n: usize,
) -> Vec<Vec<Vec<usize>>> {
    let slots: Vec<(usize, Vec<usize>)> = (0..=j)
        .flat_map(|p| simplex::monotone_maps(p, n).into_iter().map(move |a| (p, a)))
        .collect();
    let mut g: Vec<Vec<usize>> = (0..=j).map(|_| Vec::new()).collect();
    let mut out = Vec::new();
    fill(x, ops, ranks, n, &slots, 0, &mut g, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn fill(
    x: &SSetDiagram,
    ops: &HashMap<Vec<usize>, usize>,
    ranks: &Ranks,
    n: usize,
    slots: &[(usize, Vec<usize>)],
    at: usize,
    g: &mut Vec<Vec<usize>>,
    out: &mut Vec<Vec<Vec<usize>>>,
) {
    let Some((p, a)) = slots.get(at) else {
        out.push(g.clone());
        return;
    };
    let p = *p;
    let xp = x.value(p);
    for v in 0..xp.len(p) {
        let faces_ok = p == 0
            || (0..=p).all(|i| {
                let below = g[p - 1][ranks.rank(p - 1, n, &simplex::compose(a, &simplex::coface(p, i)))];
                let coface = operator(ops, &simplex::coface(p, i), p);
                xp.face(p, i, v) == x.map(coface).apply(p - 1, below)
            });
        let degens_ok = faces_ok
            && (0..p).filter(|&i| a[i] == a[i + 1]).all(|i| {
                let a2 = simplex::compose(a, &simplex::coface(p, i + 1));
                let below = g[p - 1][ranks.rank(p - 1, n, &a2)];
                let codegen = operator(ops, &simplex::codegeneracy(p - 1, i), p - 1);
                x.value(p - 1).degen(p - 1, i, below) == x.map(codegen).apply(p, v)
            });
        if degens_ok {
            g[p].push(v);
            fill(x, ops, ranks, n, slots, at + 1, g, out);
            g[p].pop();
        }
    }
}

/// `m ↦ Hom(A_m, B_•)` as a cosimplicial simplicial set over `Δ≤k(A)`.
fn right_hom_diagram(a: &SimplicialObj, b: &SimplicialObj) -> Result<SSetDiagram> {
    let j = a.k();
    let shape = Arc::new(truncated_simplex_category(j));
    let homs = (0..=j)
        .map(|m| hom_complex_indexed(&CosimplicialObj::constant(b.cat.clone(), a.level(m), b.k()), b))
        .collect::<Result<Vec<_>>>()?;
    let values: Vec<Arc<TruncSSet>> = homs.iter().map(|h| Arc::new(h.sset.clone())).collect();
    let c = &*b.cat;
    let maps = shape
        .morphism_ids()
        .map(|e| {
            let theta = monotone_of(&shape, e);
            let (m, m2) = (shape.src(e), shape.dst(e));
            let pre = a.apply(&theta, m2);
            let levels = homs[m]
                .keys
                .iter()
                .enumerate()
                .map(|(n, level)| {
                    level
                        .iter()
                        .map(|&phi| homs[m2].index[n][&c.compose(phi, pre).expect("composable")])
                        .collect()
                })
                .collect();
            SSetMap::new(values[m].clone(), values[m2].clone(), levels)
        })
        .collect::<Result<Vec<_>>>()?;
    SSetDiagram::new(shape, values, maps)
}

/// `Tot` of `m ↦ Hom(A_m, B)`, the simplicial hom-space of simplicial
/// objects.
pub fn enriched_hom_s(a: &SimplicialObj, b: &SimplicialObj, k: usize) -> Result<TruncSSet> {
    if b.k() < a.k() {
        return Err(Error::TruncationMismatch {
            expected: a.k(),
            found: b.k(),
        });
    }
    tot(&right_hom_diagram(a, b)?, k)
}

/// The cosimplicial counterpart, computed in the opposite category.
pub fn enriched_hom_c(a: &CosimplicialObj, b: &CosimplicialObj, k: usize) -> Result<TruncSSet> {
    enriched_hom_s(b.dual(), a.dual(), k)
}

/// Outcome of a weak-equivalence preservation check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PreservationReport {
    pub holds: bool,
    /// No non-identity weak equivalence between the relevant objects.
    pub vacuous: bool,
    pub checked: Vec<String>,
    pub failures: Vec<String>,
}

fn preservation(m: &ModelStructure, b: &SimplicialObj, d: usize) -> Result<PreservationReport> {
    let c = &m.cat;
    let zero = initial(c).ok_or_else(|| Error::LimitMissing("initial object".into()))?;
    let cofibrant = |o: usize| m.is_cof(c.hom(zero, o)[0]);
    let mut checked = Vec::new();
    let mut failures = Vec::new();
    let mut cache: HashMap<usize, Indexed<usize>> = HashMap::new();
    for f in c.morphism_ids() {
        let (s, t) = (c.src(f), c.dst(f));
        if c.is_identity(f) || !m.is_weq(f) || !cofibrant(s) || !cofibrant(t) {
            continue;
        }
        for o in [s, t] {
            if let Entry::Vacant(e) = cache.entry(o) {
                e.insert(hom_complex_indexed(
                    &CosimplicialObj::constant(b.cat.clone(), o, b.k()),
                    b,
                )?);
            }
        }
        let (from, to) = (&cache[&t], &cache[&s]);
        let levels = from
            .keys
            .iter()
            .enumerate()
            .map(|(n, level)| {
                level
                    .iter()
                    .map(|&phi| to.index[n][&c.compose(phi, f).expect("composable")])
                    .collect()
            })
            .collect();
        let map = SSetMap::new(Arc::new(from.sset.clone()), Arc::new(to.sset.clone()), levels)?;
        let name = c.morphism_name(f).to_string();
        if !weq_evidence(&map, d)?.holds {
            failures.push(name.clone());
        }
        checked.push(name);
    }
    Ok(PreservationReport {
        holds: failures.is_empty(),
        vacuous: checked.is_empty(),
        checked,
        failures,
    })
}

/// For every weak equivalence `f : A → A'` between cofibrant objects, the
/// induced map `Hom(A', B̂) → Hom(A, B̂)` has weak-equivalence evidence
/// through degree `d`.
pub fn weq_preservation_check(m: &ModelStructure, res: &SimplicialResolution, d: usize) -> Result<PreservationReport> {
    preservation(m, &res.object, d)
}

/// Dually, for weak equivalences between fibrant objects and the left
/// hom-complex of a cosimplicial resolution.
pub fn weq_preservation_check_cosimplicial(
    m: &ModelStructure,
    res: &CosimplicialResolution,
    d: usize,
) -> Result<PreservationReport> {
    preservation(&m.opposite(), res.object.dual(), d)
}

/// A derived hom-space with the resolutions it was computed from.
#[derive(Clone, Debug)]
pub struct DerivedHom {
    pub space: TruncSSet,
    pub cosimplicial: CosimplicialResolution,
    pub simplicial: SimplicialResolution,
}

/// The total hom-complex of a cosimplicial resolution of `a` and a
/// simplicial resolution of `b`.
pub fn derived_hom(m: &ModelStructure, a: usize, b: usize, k: usize) -> Result<DerivedHom> {
    let cosimplicial = build_cosimplicial_resolution(m, a, k)?;
    let simplicial = build_simplicial_resolution(m, b, k)?;
    Ok(DerivedHom {
        space: total_hom_complex(&cosimplicial.object, &simplicial.object)?,
        cosimplicial,
        simplicial,
    })
}

/// The dual Bousfield–Kan colimit over `n ∈ Δ≤j^op` of the Bousfield–Kan
/// colimits over `m ∈ Δ≤j^op` of the discrete sets `Hom(Ã^n, B̂_m)`,
/// truncated at `k`. The index truncation `j` is separate from `k`.
pub fn middle_double_colimit(a: &CosimplicialObj, b: &SimplicialObj, k: usize, j: usize) -> Result<TruncSSet> {
    if j > a.k() || j > b.k() {
        return Err(Error::Degree {
            degree: j,
            k: a.k().min(b.k()),
        });
    }
    if !same_category(&a.cat, &b.cat) {
        return Err(Error::Precondition("objects live in different categories".into()));
    }
    let c = &*b.cat;
    let delta = truncated_simplex_category(j);
    let shape = Arc::new(delta.opposite());
    let homs: Vec<Vec<Vec<usize>>> = (0..=j)
        .map(|n| (0..=j).map(|m| c.hom(a.level(n), b.level(m)).to_vec()).collect())
        .collect();
    let pos = |n: usize, m: usize, phi: usize| homs[n][m].iter().position(|&x| x == phi).expect("hom member");
    let discrete = |n: usize, m: usize| {
        let labels: Vec<String> = homs[n][m].iter().map(|&f| c.morphism_name(f).to_string()).collect();
        Arc::new(TruncSSet::discrete(&labels, k))
    };
    let constant_map = |src: Arc<TruncSSet>, dst: Arc<TruncSSet>, f: Vec<usize>| SSetMap::new(src, dst, vec![f; k + 1]);
    let mut inner = Vec::new();
    #[allow(clippy::needless_range_loop)]
    for n in 0..=j {
        let values: Vec<Arc<TruncSSet>> = (0..=j).map(|m| discrete(n, m)).collect();
        let maps = shape
            .morphism_ids()
            .map(|e| {
                // θ : [m] → [m'] in Δ runs from [m'] to [m] in the shape
                let theta = monotone_of(&delta, e);
                let (m2, m) = (shape.src(e), shape.dst(e));
                let post = b.apply(&theta, m2);
                let f = homs[n][m2]
                    .iter()
                    .map(|&phi| pos(n, m, c.compose(post, phi).expect("composable")))
                    .collect();
                constant_map(values[m2].clone(), values[m].clone(), f)
            })
            .collect::<Result<Vec<_>>>()?;
        let d = SSetDiagram::new(shape.clone(), values, maps)?;
        inner.push(bk_colim_indexed(&d, k)?);
    }
    let values: Vec<Arc<TruncSSet>> = inner.iter().map(|x| Arc::new(x.sset.clone())).collect();
    let maps = shape
        .morphism_ids()
        .map(|e| {
            let theta = monotone_of(&delta, e);
            let (n2, n) = (shape.src(e), shape.dst(e));
            let pre = a.apply(&theta, n2);
            let levels = inner[n2]
                .keys
                .iter()
                .enumerate()
                .map(|(level, keys)| {
                    keys.iter()
                        .map(|s| {
                            let m = s.chain.start;
                            let phi = homs[n2][m][s.x];
                            let image = BkSimplex {
                                chain: s.chain.clone(),
                                x: pos(n, m, c.compose(phi, pre).expect("composable")),
                            };
                            inner[n].index[level][&image]
                        })
                        .collect()
                })
                .collect();
            SSetMap::new(values[n2].clone(), values[n].clone(), levels)
        })
        .collect::<Result<Vec<_>>>()?;
    dual_bk_colim(&SSetDiagram::new(shape, values, maps)?, k)
}
