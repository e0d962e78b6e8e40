use serde::{Deserialize, Serialize};

use crate::sset::snf::{smith_normal_form, sparse_invariant_factors, Dense};
use crate::sset::TruncSSet;

/// A sparse integer matrix stored by columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    pub rows: usize,
    pub columns: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize) -> SparseMatrix {
        SparseMatrix {
            rows,
            columns: vec![Vec::new(); cols],
        }
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn to_dense(&self) -> Dense {
        let mut d = vec![vec![0; self.cols()]; self.rows];
        for (j, c) in self.columns.iter().enumerate() {
            for &(i, x) in c {
                d[i][j] += x;
            }
        }
        d
    }

    /// `self · other`.
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        let columns = other
            .columns
            .iter()
            .map(|c| {
                let mut acc = std::collections::BTreeMap::new();
                for &(t, y) in c {
                    for &(i, x) in &self.columns[t] {
                        *acc.entry(i).or_insert(0i64) += x * y;
                    }
                }
                acc.into_iter().filter(|e| e.1 != 0).collect()
            })
            .collect();
        SparseMatrix {
            rows: self.rows,
            columns,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.iter().all(|e| e.1 == 0))
    }

    /// Nonzero invariant factors (units included).
    pub fn invariant_factors(&self) -> Vec<i64> {
        sparse_invariant_factors(self.rows, &self.columns)
    }

    /// Invariant factors through the dense algorithm with its `U·M·V`
    /// check; `None` if the check fails.
    pub fn verified_invariant_factors(&self) -> Option<Vec<i64>> {
        let d = self.to_dense();
        let s = smith_normal_form(&d);
        s.verify(&d).then_some(s.invariants)
    }
}

/// Degree-wise free modules with boundary matrices; `boundaries[n]` is
/// `∂_n : C_n → C_{n-1}` (`boundaries[0]` is the zero map out of `C_0`).
#[derive(Clone, Debug)]
pub struct ChainComplex {
    pub ranks: Vec<usize>,
    pub boundaries: Vec<SparseMatrix>,
}

impl ChainComplex {
    pub fn top(&self) -> usize {
        self.ranks.len() - 1
    }

    pub fn boundary_squares_vanish(&self) -> bool {
        (2..self.ranks.len()).all(|n| self.boundaries[n - 1].mul(&self.boundaries[n]).is_zero())
    }

    /// `H_i` for `i < top`; degree `top` is reported but flagged unreliable
    /// by callers since `∂_{top+1}` is unknown.
    pub fn homology(&self, i: usize) -> (usize, Vec<i64>) {
        self.homology_with(i, false)
    }

    /// As [`ChainComplex::homology`], optionally through the verified dense
    /// Smith normal form.
    pub fn homology_with(&self, i: usize, verified: bool) -> (usize, Vec<i64>) {
        let factors = |m: &SparseMatrix| {
            if verified {
                m.verified_invariant_factors()
                    .expect("Smith normal form failed verification")
            } else {
                m.invariant_factors()
            }
        };
        let rank_in = if i == 0 { 0 } else { factors(&self.boundaries[i]).len() };
        let (rank_out, torsion) = if i < self.top() {
            let f = factors(&self.boundaries[i + 1]);
            (f.len(), f.into_iter().filter(|&d| d > 1).collect())
        } else {
            (0, Vec::new())
        };
        (self.ranks[i] - rank_in - rank_out, torsion)
    }
}

/// Normalized chains: degree-`n` basis the nondegenerate `n`-simplices,
/// degenerate faces sent to zero.
pub fn normalized_chain_complex(x: &TruncSSet) -> ChainComplex {
    let k = x.k();
    let mut positions = Vec::with_capacity(k + 1);
    let mut ranks = Vec::with_capacity(k + 1);
    for n in 0..=k {
        let nd = x.nondegenerate(n);
        let mut pos = vec![usize::MAX; x.len(n)];
        for (i, &s) in nd.iter().enumerate() {
            pos[s] = i;
        }
        ranks.push(nd.len());
        positions.push((nd, pos));
    }
    let mut boundaries = vec![SparseMatrix::zero(0, ranks[0])];
    for n in 1..=k {
        let (nd, _) = &positions[n];
        let (_, prev) = &positions[n - 1];
        let columns = nd
            .iter()
            .map(|&s| {
                let mut acc = std::collections::BTreeMap::new();
                for i in 0..=n {
                    let f = x.face(n, i, s);
                    if prev[f] != usize::MAX {
                        *acc.entry(prev[f]).or_insert(0i64) += if i % 2 == 0 { 1 } else { -1 };
                    }
                }
                acc.into_iter().filter(|e| e.1 != 0).collect()
            })
            .collect();
        boundaries.push(SparseMatrix {
            rows: ranks[n - 1],
            columns,
        });
    }
    ChainComplex { ranks, boundaries }
}

/// One homology group, `Z^free_rank ⊕ ⊕ Z/t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyReport {
    pub degree: usize,
    pub free_rank: usize,
    pub torsion: Vec<i64>,
    /// False for degrees at or above the truncation level.
    pub reliable: bool,
}

impl HomologyReport {
    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// The group, without the reliability flag.
    pub fn group(&self) -> (usize, Vec<i64>) {
        (self.free_rank, self.torsion.clone())
    }
}

/// Small complexes go through the verified dense algorithm.
const VERIFY_LIMIT: usize = 40_000;

/// `H_i(X)` via Smith normal forms of the normalized boundary matrices.
pub fn homology(x: &TruncSSet, i: usize) -> HomologyReport {
    homology_of(&normalized_chain_complex(x), i)
}

pub(crate) fn homology_of(c: &ChainComplex, i: usize) -> HomologyReport {
    let small = |n: usize| n >= c.boundaries.len() || c.boundaries[n].rows * c.boundaries[n].cols() <= VERIFY_LIMIT;
    let verified = small(i) && small(i + 1);
    let (free_rank, torsion) = c.homology_with(i.min(c.top()), verified);
    HomologyReport {
        degree: i,
        free_rank,
        torsion,
        reliable: i < c.top(),
    }
}

/// Homology in degrees `0..=d`.
pub fn homology_table(x: &TruncSSet, d: usize) -> Vec<HomologyReport> {
    let c = normalized_chain_complex(x);
    (0..=d.min(c.top())).map(|i| homology_of(&c, i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_complex() {
        let c = normalized_chain_complex(&TruncSSet::point(3));
        assert_eq!(c.ranks, vec![1, 0, 0, 0]);
        assert!(c.boundary_squares_vanish());
    }

    #[test]
    fn circle_homology() {
        let circle = TruncSSet::boundary_simplex(2, 2);
        assert!(circle.validate().passed());
        let h0 = homology(&circle, 0);
        let h1 = homology(&circle, 1);
        assert_eq!((h0.free_rank, h0.torsion.clone()), (1, vec![]));
        assert_eq!((h1.free_rank, h1.torsion.clone()), (1, vec![]));
        assert!(h1.reliable);
        assert!(!homology(&circle, 2).reliable);
    }

    #[test]
    fn simplex_is_acyclic() {
        let x = TruncSSet::standard_simplex(2, 3);
        let c = normalized_chain_complex(&x);
        assert_eq!(c.ranks, vec![3, 3, 1, 0]);
        for i in 1..3 {
            assert!(homology(&x, i).is_zero());
        }
    }
}
