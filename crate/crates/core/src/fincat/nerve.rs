use std::sync::Arc;

use crate::error::Result;
use crate::fincat::{FinCat, Functor};
use crate::sset::{Indexed, SSetMap, TruncSSet};

/// A composable chain `c_0 → c_1 → … → c_n`; `arrows[i]` is `f_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chain {
    pub start: usize,
    pub arrows: Vec<usize>,
}

impl Chain {
    /// Objects `c_0 … c_n`.
    pub fn objects(&self, c: &FinCat) -> Vec<usize> {
        std::iter::once(self.start)
            .chain(self.arrows.iter().map(|&f| c.dst(f)))
            .collect()
    }

    pub fn end(&self, c: &FinCat) -> usize {
        self.arrows.last().map_or(self.start, |&f| c.dst(f))
    }

    /// `d_0` drops `f_1`, `d_n` drops `f_n`, inner faces compose.
    pub fn face(&self, c: &FinCat, i: usize) -> Chain {
        let n = self.arrows.len();
        let mut arrows = self.arrows.clone();
        if i == 0 {
            let start = c.dst(arrows.remove(0));
            return Chain { start, arrows };
        }
        if i == n {
            arrows.pop();
        } else {
            let g = c.compose(arrows[i], arrows[i - 1]).expect("composable chain");
            arrows.splice(i - 1..=i, [g]);
        }
        Chain {
            start: self.start,
            arrows,
        }
    }

    /// Inserts `id_{c_i}`.
    pub fn degen(&self, c: &FinCat, i: usize) -> Chain {
        let obj = self.objects(c)[i];
        let mut arrows = self.arrows.clone();
        arrows.insert(i, c.identity(obj));
        Chain {
            start: self.start,
            arrows,
        }
    }

    pub fn label(&self, c: &FinCat) -> String {
        if self.arrows.is_empty() {
            c.object_name(self.start).to_string()
        } else {
            self.arrows
                .iter()
                .map(|&f| c.morphism_name(f))
                .collect::<Vec<_>>()
                .join("|")
        }
    }
}

/// All chains of length `n`, in lexicographic order of arrow indices.
pub fn chains(c: &FinCat, n: usize) -> Vec<Chain> {
    let mut out: Vec<Chain> = c
        .objects()
        .map(|o| Chain {
            start: o,
            arrows: vec![],
        })
        .collect();
    for _ in 0..n {
        let mut next = Vec::new();
        for ch in &out {
            let e = ch.end(c);
            for &f in c.outgoing(e) {
                let mut arrows = ch.arrows.clone();
                arrows.push(f);
                next.push(Chain {
                    start: ch.start,
                    arrows,
                });
            }
        }
        out = next;
    }
    if n > 0 {
        out.sort();
    }
    out
}

/// The nerve truncated at `k`, with its chains as keys.
pub fn nerve_indexed(c: &FinCat, k: usize) -> Indexed<Chain> {
    let keys = (0..=k).map(|n| chains(c, n)).collect();
    TruncSSet::from_keys(
        k,
        keys,
        |_, i, ch| ch.face(c, i),
        |_, i, ch| ch.degen(c, i),
        |ch| ch.label(c),
    )
    .expect("nerves are closed under their operators")
}

pub fn nerve(c: &FinCat, k: usize) -> TruncSSet {
    nerve_indexed(c, k).sset
}

/// `N(u) : N(A) → N(B)`.
pub fn nerve_map(u: &Functor, k: usize) -> Result<SSetMap> {
    let a = nerve_indexed(&u.source, k);
    let b = nerve_indexed(&u.target, k);
    let levels = a
        .keys
        .iter()
        .enumerate()
        .map(|(n, level)| {
            level
                .iter()
                .map(|ch| {
                    let image = Chain {
                        start: u.on_object(ch.start),
                        arrows: ch.arrows.iter().map(|&f| u.on_morphism(f)).collect(),
                    };
                    b.index[n][&image]
                })
                .collect()
        })
        .collect();
    SSetMap::new(Arc::new(a.sset), Arc::new(b.sset), levels)
}

/// The chain-reversal bijection `N(C^op) ≅ N(C)^op`, checked to be a
/// simplicial isomorphism.
pub fn nerve_opposite_iso(c: &FinCat, k: usize) -> Result<SSetMap> {
    let op = c.opposite();
    let a = nerve_indexed(&op, k);
    let b = nerve_indexed(c, k);
    let levels = a
        .keys
        .iter()
        .enumerate()
        .map(|(n, level)| {
            level
                .iter()
                .map(|ch| {
                    let reversed = Chain {
                        start: ch.end(&op),
                        arrows: ch.arrows.iter().rev().copied().collect(),
                    };
                    b.index[n][&reversed]
                })
                .collect()
        })
        .collect();
    SSetMap::new(Arc::new(a.sset), Arc::new(b.sset.opposite()), levels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::{homology, kan_check, normalized_chain_complex};

    fn z2() -> FinCat {
        FinCat::group("*", &["e", "g"], |a, b| a ^ b)
    }

    #[test]
    fn nerve_counts() {
        let i2 = FinCat::chain(2);
        assert_eq!(nerve(&i2, 2).level_counts(), vec![2, 3, 4]);
        assert_eq!(nerve(&FinCat::point(), 3).level_counts(), vec![1, 1, 1, 1]);
        assert_eq!(nerve(&z2(), 3).level_counts(), vec![1, 2, 4, 8]);
        assert!(nerve(&i2, 3).validate().passed());
    }

    #[test]
    fn nerve_chain_complexes_and_homology() {
        assert_eq!(
            normalized_chain_complex(&nerve(&FinCat::chain(2), 2)).ranks,
            vec![2, 1, 0]
        );
        let nz = nerve(&z2(), 3);
        assert_eq!(normalized_chain_complex(&nz).ranks, vec![1, 1, 1, 1]);
        let h1 = homology(&nz, 1);
        assert_eq!((h1.free_rank, h1.torsion), (0, vec![2]));
        assert!(homology(&nz, 2).is_zero());
        let ni = nerve(&FinCat::chain(2), 2);
        assert_eq!(homology(&ni, 0).free_rank, 1);
        assert!(homology(&ni, 1).is_zero());
        assert_eq!(ni.pi0().count, 1);
    }

    #[test]
    fn opposite_nerve_iso() {
        for c in [FinCat::chain(3), z2()] {
            let iso = nerve_opposite_iso(&c, 3).unwrap();
            assert!(iso.is_levelwise_bijection());
        }
    }

    #[test]
    fn groupoid_nerves_are_kan() {
        assert!(kan_check(&nerve(&z2(), 3), 2).unwrap().passed());
        let r = kan_check(&nerve(&FinCat::chain(2), 3), 2).unwrap();
        assert!(!r.passed());
    }
}
