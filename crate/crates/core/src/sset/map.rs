use std::sync::Arc;

use crate::error::{Error, Result};
use crate::sset::TruncSSet;

/// A simplicial map between truncated simplicial sets of equal truncation.
#[derive(Clone, Debug)]
pub struct SSetMap {
    pub source: Arc<TruncSSet>,
    pub target: Arc<TruncSSet>,
    levels: Vec<Vec<usize>>,
}

impl SSetMap {
    /// Checks that the level functions commute with all operators.
    pub fn new(source: Arc<TruncSSet>, target: Arc<TruncSSet>, levels: Vec<Vec<usize>>) -> Result<SSetMap> {
        if source.k() != target.k() {
            return Err(Error::TruncationMismatch {
                expected: source.k(),
                found: target.k(),
            });
        }
        let k = source.k();
        if levels.len() != k + 1 {
            return Err(Error::SSetMap(format!("expected {} level functions", k + 1)));
        }
        for (n, level) in levels.iter().enumerate() {
            if level.len() != source.len(n) || level.iter().any(|&y| y >= target.len(n)) {
                return Err(Error::SSetMap(format!(
                    "level {n} is not a function between the levels"
                )));
            }
        }
        for n in 1..=k {
            for x in 0..source.len(n) {
                for i in 0..=n {
                    if levels[n - 1][source.face(n, i, x)] != target.face(n, i, levels[n][x]) {
                        return Err(Error::SSetMap(format!(
                            "does not commute with d_{i} on level-{n} simplex `{}`",
                            source.label(n, x)
                        )));
                    }
                }
            }
        }
        for n in 0..k {
            for x in 0..source.len(n) {
                for i in 0..=n {
                    if levels[n + 1][source.degen(n, i, x)] != target.degen(n, i, levels[n][x]) {
                        return Err(Error::SSetMap(format!(
                            "does not commute with s_{i} on level-{n} simplex `{}`",
                            source.label(n, x)
                        )));
                    }
                }
            }
        }
        Ok(SSetMap { source, target, levels })
    }

    pub fn identity(x: Arc<TruncSSet>) -> SSetMap {
        let levels = (0..=x.k()).map(|n| (0..x.len(n)).collect()).collect();
        SSetMap {
            source: x.clone(),
            target: x,
            levels,
        }
    }

    /// The unique map to a point.
    pub fn to_point(x: Arc<TruncSSet>) -> SSetMap {
        let k = x.k();
        let levels = (0..=k).map(|n| vec![0; x.len(n)]).collect();
        SSetMap {
            source: x,
            target: Arc::new(TruncSSet::point(k)),
            levels,
        }
    }

    pub fn apply(&self, n: usize, x: usize) -> usize {
        self.levels[n][x]
    }

    pub fn level(&self, n: usize) -> &[usize] {
        &self.levels[n]
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &SSetMap) -> Result<SSetMap> {
        if self.target.level_counts() != other.source.level_counts() {
            return Err(Error::SSetMap("composite of non-matching maps".into()));
        }
        let levels = self
            .levels
            .iter()
            .enumerate()
            .map(|(n, l)| l.iter().map(|&x| other.levels[n][x]).collect())
            .collect();
        Ok(SSetMap {
            source: self.source.clone(),
            target: other.target.clone(),
            levels,
        })
    }

    pub fn is_levelwise_bijection(&self) -> bool {
        (0..=self.source.k()).all(|n| {
            let mut seen = vec![false; self.target.len(n)];
            self.source.len(n) == self.target.len(n)
                && self.levels[n].iter().all(|&y| !std::mem::replace(&mut seen[y], true))
        })
    }

    /// Induced map on components.
    pub fn pi0_map(&self) -> Vec<usize> {
        let (ps, pt) = (self.source.pi0(), self.target.pi0());
        let mut out = vec![usize::MAX; ps.count];
        for v in 0..self.source.len(0) {
            out[ps.component[v]] = pt.component[self.levels[0][v]];
        }
        out
    }

    pub fn pi0_bijective(&self) -> bool {
        let m = self.pi0_map();
        let count = self.target.pi0().count;
        let mut seen = vec![false; count];
        m.len() == count && m.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
    }
}

impl PartialEq for SSetMap {
    fn eq(&self, other: &Self) -> bool {
        self.levels == other.levels && *self.source == *other.source && *self.target == *other.target
    }
}
