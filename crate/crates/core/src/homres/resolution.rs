use serde::Serialize;

use crate::error::{Error, Result};
use crate::homres::objects::{latching, matching, matching_map, LimitResult};
use crate::homres::{is_weakly_constant, CosimplicialObj, SimplicialObj};
use crate::modelcat::{terminal, FactorKind, ModelStructure};
use crate::simplex;

/// Reproducible verdicts on a (co)simplicial object.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResolutionCertificate {
    pub weakly_constant: bool,
    /// Comparison morphisms tested for weak constancy.
    pub tested_maps: Vec<String>,
    /// Per level: the matching map is a fibration (dually the latching map
    /// is a cofibration).
    pub reedy: Vec<bool>,
    /// Per level: the augmentation is a trivial cofibration (dually a
    /// trivial fibration) compatible with the operators. Empty when no
    /// augmentation is given.
    pub degreewise: Vec<bool>,
    pub is_resolution: bool,
}

/// A simplicial resolution `B̂` with its augmentation `i_n : B → B̂_n`.
#[derive(Clone, Debug)]
pub struct SimplicialResolution {
    pub base: usize,
    pub object: SimplicialObj,
    pub augmentation: Vec<usize>,
    pub certificate: ResolutionCertificate,
}

/// A cosimplicial resolution `Ã` with its augmentation `p^n : Ã^n → A`.
#[derive(Clone, Debug)]
pub struct CosimplicialResolution {
    pub base: usize,
    pub object: CosimplicialObj,
    pub augmentation: Vec<usize>,
    pub certificate: ResolutionCertificate,
}

fn reedy_flags(m: &ModelStructure, x: &SimplicialObj) -> Result<Vec<bool>> {
    (0..=x.k())
        .map(|n| {
            let mo = matching(x, n)?;
            let q = matching_map(x, n, &mo).ok_or_else(|| Error::LimitMissing(format!("matching map at level {n}")))?;
            Ok(m.is_fib(q))
        })
        .collect()
}

fn certify(m: &ModelStructure, x: &SimplicialObj, augmentation: Option<&[usize]>) -> Result<ResolutionCertificate> {
    let wc = is_weakly_constant(m, x);
    let reedy = reedy_flags(m, x)?;
    let c = &*x.cat;
    let degreewise: Vec<bool> = augmentation.map_or_else(Vec::new, |aug| {
        (0..=x.k())
            .map(|n| {
                let compatible = (n == 0 || (0..=n).all(|i| c.compose(x.face(n, i), aug[n]) == Some(aug[n - 1])))
                    && (n == x.k() || (0..=n).all(|i| c.compose(x.degen(n, i), aug[n]) == Some(aug[n + 1])));
                compatible && m.is_triv_cof(aug[n])
            })
            .collect()
    });
    Ok(ResolutionCertificate {
        is_resolution: wc.weakly_constant && reedy.iter().all(|&r| r) && degreewise.iter().all(|&d| d),
        weakly_constant: wc.weakly_constant,
        tested_maps: wc.tested,
        reedy,
        degreewise,
    })
}

/// Weakly constant and Reedy fibrant.
pub fn is_simplicial_resolution(m: &ModelStructure, x: &SimplicialObj) -> Result<ResolutionCertificate> {
    certify(m, x, None)
}

/// Weakly constant and Reedy cofibrant.
pub fn is_cosimplicial_resolution(m: &ModelStructure, x: &CosimplicialObj) -> Result<ResolutionCertificate> {
    certify(&m.opposite(), x.dual(), None)
}

#[derive(Clone, Default)]
struct Partial {
    levels: Vec<usize>,
    faces: Vec<Vec<usize>>,
    degens: Vec<Vec<usize>>,
    augmentation: Vec<usize>,
}

struct Search<'a> {
    m: &'a ModelStructure,
    base: usize,
    k: usize,
    limit: usize,
    out: Vec<SimplicialResolution>,
}

fn position(index: &[Vec<usize>], alpha: &[usize]) -> usize {
    index
        .iter()
        .position(|a| a == alpha)
        .expect("operator in the Reedy index")
}

/// All `(t, q)` with `t` a trivial cofibration, `q` a fibration and
/// `q ∘ t = phi`; the recorded factorization first.
fn factorizations(m: &ModelStructure, phi: usize) -> Vec<(usize, usize)> {
    let c = &*m.cat;
    let mut out: Vec<(usize, usize)> = m.factor(phi, FactorKind::TcofThenFib).into_iter().collect();
    for e in c.objects() {
        for &t in c.hom(c.src(phi), e) {
            for &q in c.hom(e, c.dst(phi)) {
                if m.is_triv_cof(t) && m.is_fib(q) && c.compose(q, t) == Some(phi) && !out.contains(&(t, q)) {
                    out.push((t, q));
                }
            }
        }
    }
    out
}

impl Search<'_> {
    /// The canonical map to factor at level `n`, with the latching and
    /// matching data it came from.
    fn corner(&self, p: &Partial, n: usize) -> Result<(usize, Option<(LimitResult, LimitResult)>)> {
        let c = &self.m.cat;
        if n == 0 {
            let t = terminal(c).ok_or_else(|| Error::LimitMissing("terminal object".into()))?;
            let phi = c.hom(self.base, t)[0];
            return Ok((phi, None));
        }
        let mut degens = p.degens.clone();
        degens[n - 1].clear();
        let x = SimplicialObj::raw(c.clone(), p.levels.clone(), p.faces.clone(), degens)?;
        let lo = latching(&x, n)?;
        let mo = matching(&x, n)?;
        let phi = c
            .hom(lo.apex, mo.apex)
            .iter()
            .copied()
            .find(|&phi| {
                lo.index.iter().zip(&lo.legs).all(|(sigma, &l)| {
                    let top = sigma.iter().max().copied().unwrap_or(0);
                    mo.index.iter().zip(&mo.legs).all(|(delta, &r)| {
                        let w = x.apply(&simplex::compose(sigma, delta), top);
                        c.compose(phi, l).and_then(|pl| c.compose(r, pl)) == Some(w)
                    })
                })
            })
            .ok_or_else(|| Error::LimitMissing(format!("latching-to-matching map at level {n}")))?;
        Ok((phi, Some((lo, mo))))
    }

    fn extend(&mut self, p: &mut Partial, n: usize) -> Result<()> {
        if self.out.len() >= self.limit {
            return Ok(());
        }
        if n > self.k {
            let Ok(object) =
                SimplicialObj::new(self.m.cat.clone(), p.levels.clone(), p.faces.clone(), p.degens.clone())
            else {
                return Ok(());
            };
            let certificate = certify(self.m, &object, Some(&p.augmentation))?;
            if certificate.is_resolution {
                self.out.push(SimplicialResolution {
                    base: self.base,
                    object,
                    augmentation: p.augmentation.clone(),
                    certificate,
                });
            }
            return Ok(());
        }
        let c = self.m.cat.clone();
        let (phi, reedy) = self.corner(p, n)?;
        for (t, q) in factorizations(self.m, phi) {
            let saved = p.clone();
            p.levels.push(c.dst(t));
            p.degens.push(vec![]);
            match &reedy {
                None => {
                    p.faces.push(vec![]);
                    p.augmentation.push(t);
                }
                Some((lo, mo)) => {
                    let faces = (0..=n)
                        .map(|i| {
                            c.compose(mo.legs[position(&mo.index, &simplex::coface(n, i))], q)
                                .expect("composable")
                        })
                        .collect();
                    p.faces.push(faces);
                    p.degens[n - 1] = (0..n)
                        .map(|j| {
                            c.compose(t, lo.legs[position(&lo.index, &simplex::codegeneracy(n - 1, j))])
                                .expect("composable")
                        })
                        .collect();
                    let aug = c.compose_path(&[
                        p.augmentation[n - 1],
                        lo.legs[position(&lo.index, &simplex::codegeneracy(n - 1, 0))],
                        t,
                    ]);
                    p.augmentation.push(aug);
                }
            }
            self.extend(p, n + 1)?;
            *p = saved;
            if self.out.len() >= self.limit {
                break;
            }
        }
        Ok(())
    }
}

/// Up to `limit` simplicial resolutions of `b` truncated at `k`, built level
/// by level by factoring the latching-to-matching map as a trivial
/// cofibration followed by a fibration; every factorization is tried in
/// turn, the recorded one first, and each candidate is certified.
pub fn simplicial_resolutions(
    m: &ModelStructure,
    b: usize,
    k: usize,
    limit: usize,
) -> Result<Vec<SimplicialResolution>> {
    if b >= m.cat.num_objects() {
        return Err(Error::UnknownObject(b.to_string()));
    }
    let mut search = Search {
        m,
        base: b,
        k,
        limit,
        out: Vec::new(),
    };
    search.extend(&mut Partial::default(), 0)?;
    Ok(search.out)
}

pub fn build_simplicial_resolution(m: &ModelStructure, b: usize, k: usize) -> Result<SimplicialResolution> {
    simplicial_resolutions(m, b, k, 1)?.pop().ok_or_else(|| {
        Error::NoResolution(format!(
            "no simplicial resolution of `{}` at truncation {k}",
            m.cat.object_name(b)
        ))
    })
}

/// The dual construction, run in the opposite model structure.
pub fn cosimplicial_resolutions(
    m: &ModelStructure,
    a: usize,
    k: usize,
    limit: usize,
) -> Result<Vec<CosimplicialResolution>> {
    let op = m.opposite();
    Ok(simplicial_resolutions(&op, a, k, limit)?
        .into_iter()
        .map(|r| CosimplicialResolution {
            base: r.base,
            object: CosimplicialObj::from_dual(m.cat.clone(), r.object),
            augmentation: r.augmentation,
            certificate: r.certificate,
        })
        .collect())
}

pub fn build_cosimplicial_resolution(m: &ModelStructure, a: usize, k: usize) -> Result<CosimplicialResolution> {
    cosimplicial_resolutions(m, a, k, 1)?.pop().ok_or_else(|| {
        Error::NoResolution(format!(
            "no cosimplicial resolution of `{}` at truncation {k}",
            m.cat.object_name(a)
        ))
    })
}

/// The constant resolution `B̂_n = B` with identity augmentation.
pub fn constant_simplicial_resolution(m: &ModelStructure, b: usize, k: usize) -> Result<SimplicialResolution> {
    let object = SimplicialObj::constant(m.cat.clone(), b, k);
    let augmentation = vec![m.cat.identity(b); k + 1];
    let certificate = certify(m, &object, Some(&augmentation))?;
    Ok(SimplicialResolution {
        base: b,
        object,
        augmentation,
        certificate,
    })
}
