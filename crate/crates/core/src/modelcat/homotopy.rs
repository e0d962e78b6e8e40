use serde::Serialize;

use crate::error::{Error, Result};
use crate::modelcat::{coproduct, initial, terminal, FactorKind, ModelStructure};

/// `Ho(M)(A, B)` as homotopy classes `M(RQA, RQB)/~`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HoHomReport {
    pub source: String,
    pub target: String,
    /// `RQA` and `RQB`.
    pub replaced_source: String,
    pub replaced_target: String,
    pub morphisms: usize,
    pub classes: usize,
}

impl ModelStructure {
    /// Middle object of the factorization of `f`.
    fn middle(&self, f: usize, kind: FactorKind) -> Result<usize> {
        let (g, _) = self.factor(f, kind)?;
        Ok(self.cat.dst(g))
    }

    /// `RQ(a)`: factor `∅ → a` as a cofibration then a trivial fibration,
    /// then the result's map to `*` as a trivial cofibration then a
    /// fibration.
    pub fn cofibrant_fibrant_replacement(&self, a: usize) -> Result<usize> {
        let c = &self.cat;
        let init = initial(c).ok_or_else(|| Error::LimitMissing("initial object".into()))?;
        let term = terminal(c).ok_or_else(|| Error::LimitMissing("terminal object".into()))?;
        let from_init = c.hom(init, a)[0];
        let qa = self.middle(from_init, FactorKind::CofThenTfib)?;
        self.middle(c.hom(qa, term)[0], FactorKind::TcofThenFib)
    }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    parent[x] = r;
    r
}

/// Counts `Ho(M)(a, b)` via left homotopy through a cylinder built from the
/// `cof_then_tfib` factorization of the codiagonal. Requires a valid model
/// structure.
pub fn ho_hom_report(m: &ModelStructure, a: usize, b: usize) -> Result<HoHomReport> {
    let c = &m.cat;
    let x = m.cofibrant_fibrant_replacement(a)?;
    let y = m.cofibrant_fibrant_replacement(b)?;
    let sum = coproduct(c, x, x).ok_or_else(|| Error::LimitMissing("coproduct X ⊔ X".into()))?;
    let id = c.identity(x);
    let codiagonal = c
        .hom(sum.apex, x)
        .iter()
        .copied()
        .find(|&n| sum.legs.iter().all(|&l| c.compose(n, l) == Some(id)))
        .ok_or_else(|| Error::LimitMissing("codiagonal".into()))?;
    let (j, _) = m.factor(codiagonal, FactorKind::CofThenTfib)?;
    let cyl = c.dst(j);
    let i0 = c.compose(j, sum.legs[0]).expect("composable");
    let i1 = c.compose(j, sum.legs[1]).expect("composable");
    let homs = c.hom(x, y);
    let mut parent: Vec<usize> = (0..homs.len()).collect();
    for &h in c.hom(cyl, y) {
        let (f, g) = (
            c.compose(h, i0).expect("composable"),
            c.compose(h, i1).expect("composable"),
        );
        let fi = homs.iter().position(|&t| t == f).expect("same hom-set");
        let gi = homs.iter().position(|&t| t == g).expect("same hom-set");
        let (rf, rg) = (find(&mut parent, fi), find(&mut parent, gi));
        parent[rf] = rg;
    }
    let classes = (0..homs.len()).filter(|&i| find(&mut parent, i) == i).count();
    Ok(HoHomReport {
        source: c.object_name(a).to_string(),
        target: c.object_name(b).to_string(),
        replaced_source: c.object_name(x).to_string(),
        replaced_target: c.object_name(y).to_string(),
        morphisms: homs.len(),
        classes,
    })
}

pub fn ho_hom_count(m: &ModelStructure, a: usize, b: usize) -> Result<usize> {
    Ok(ho_hom_report(m, a, b)?.classes)
}
