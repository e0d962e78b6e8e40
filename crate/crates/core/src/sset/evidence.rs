use serde::Serialize;

use crate::error::{Error, Result};
use crate::sset::chains::{homology_of, normalized_chain_complex, ChainComplex, SparseMatrix};
use crate::sset::snf::smith_normal_form;
use crate::sset::{SSetMap, TruncSSet};

/// Verdict of a homology-level weak-equivalence check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvidenceReport {
    pub holds: bool,
    pub pi0_bijective: bool,
    /// Lowest degree where the check failed.
    pub failing_degree: Option<usize>,
}

fn check_degree(k: usize, d: usize) -> Result<()> {
    if d + 1 > k {
        return Err(Error::Degree { degree: d, k });
    }
    Ok(())
}

/// The normalized chain map of `f` in degree `n`: a nondegenerate simplex
/// goes to its image if that is nondegenerate, else to zero.
pub(crate) fn normalized_chain_map(f: &SSetMap, n: usize) -> SparseMatrix {
    let (x, y) = (&*f.source, &*f.target);
    let mut pos = vec![usize::MAX; y.len(n)];
    for (i, s) in y.nondegenerate(n).into_iter().enumerate() {
        pos[s] = i;
    }
    SparseMatrix {
        rows: pos.iter().filter(|&&p| p != usize::MAX).count(),
        columns: x
            .nondegenerate(n)
            .iter()
            .map(|&s| {
                let t = pos[f.apply(n, s)];
                if t == usize::MAX {
                    vec![]
                } else {
                    vec![(t, 1)]
                }
            })
            .collect(),
    }
}

/// Algebraic mapping cone of the normalized chain map induced by `f`,
/// up to degree `top`: `C(f)_n = C_{n-1}(X) ⊕ C_n(Y)`,
/// `∂(a, b) = (-∂a, f(a) + ∂b)`.
fn mapping_cone(f: &SSetMap, top: usize) -> ChainComplex {
    let (x, y) = (&*f.source, &*f.target);
    let cx = normalized_chain_complex(x);
    let cy = normalized_chain_complex(y);
    let chain_map: Vec<SparseMatrix> = (0..=x.k()).map(|n| normalized_chain_map(f, n)).collect();
    let rank = |n: usize| {
        if n == 0 {
            cy.ranks[0]
        } else {
            cx.ranks[n - 1] + cy.ranks[n]
        }
    };
    let ranks: Vec<usize> = (0..=top).map(rank).collect();
    let mut boundaries = vec![SparseMatrix::zero(0, ranks[0])];
    for n in 1..=top {
        // rows: X_{n-2} then Y_{n-1}; columns: X_{n-1} then Y_n
        let x_rows = if n >= 2 { cx.ranks[n - 2] } else { 0 };
        let mut columns = Vec::with_capacity(ranks[n]);
        for j in 0..cx.ranks[n - 1] {
            let mut col: Vec<(usize, i64)> = if n >= 2 {
                cx.boundaries[n - 1].columns[j].iter().map(|&(i, v)| (i, -v)).collect()
            } else {
                vec![]
            };
            col.extend(chain_map[n - 1].columns[j].iter().map(|&(i, v)| (x_rows + i, v)));
            columns.push(col);
        }
        for j in 0..cy.ranks[n] {
            columns.push(
                cy.boundaries[n].columns[j]
                    .iter()
                    .map(|&(i, v)| (x_rows + i, v))
                    .collect(),
            );
        }
        boundaries.push(SparseMatrix {
            rows: ranks[n - 1],
            columns,
        });
    }
    ChainComplex { ranks, boundaries }
}

/// Cone homology vanishes in degrees `≤ d`, `H_d(X) ≅ H_d(Y)` and `π0(f)`
/// is a bijection. Requires `d ≤ k - 1`.
///
/// Cone acyclicity through degree `d` makes `f_*` an isomorphism below `d`
/// and onto in degree `d`; a surjection between isomorphic finitely
/// generated abelian groups is an isomorphism, so together the conditions
/// say `f_*` is an isomorphism on `H_i` for all `i ≤ d`.
pub fn weq_evidence(f: &SSetMap, d: usize) -> Result<EvidenceReport> {
    let k = f.source.k();
    if f.target.k() != k {
        return Err(Error::TruncationMismatch {
            expected: k,
            found: f.target.k(),
        });
    }
    check_degree(k, d)?;
    let cone = mapping_cone(f, d + 1);
    debug_assert!(cone.boundary_squares_vanish());
    let same_top = {
        let (cx, cy) = (normalized_chain_complex(&f.source), normalized_chain_complex(&f.target));
        homology_of(&cx, d).group() == homology_of(&cy, d).group()
    };
    let failing_degree = (0..=d)
        .find(|&i| !homology_of(&cone, i).is_zero())
        .or((!same_top).then_some(d));
    let pi0_bijective = f.pi0_bijective();
    Ok(EvidenceReport {
        holds: failing_degree.is_none() && pi0_bijective,
        pi0_bijective,
        failing_degree,
    })
}

/// Abstract comparison: equal `|π0|` and isomorphic `H_i` for `i ≤ d`.
/// This is evidence only; no map is involved.
pub fn weq_evidence_pair(x: &TruncSSet, y: &TruncSSet, d: usize) -> Result<EvidenceReport> {
    check_degree(x.k(), d)?;
    check_degree(y.k(), d)?;
    let (cx, cy) = (normalized_chain_complex(x), normalized_chain_complex(y));
    let failing_degree = (0..=d).find(|&i| homology_of(&cx, i).group() != homology_of(&cy, i).group());
    let pi0_bijective = x.pi0().count == y.pi0().count;
    Ok(EvidenceReport {
        holds: failing_degree.is_none() && pi0_bijective,
        pi0_bijective,
        failing_degree,
    })
}

/// Nonempty, connected, and `H_i = 0` for `1 ≤ i ≤ d`.
pub fn is_homology_point(x: &TruncSSet, d: usize) -> Result<bool> {
    check_degree(x.k(), d)?;
    if x.pi0().count != 1 {
        return Ok(false);
    }
    let c = normalized_chain_complex(x);
    Ok((1..=d).all(|i| homology_of(&c, i).is_zero()))
}

/// A `Z`-basis of `ker m` for an integer matrix with `cols` columns.
fn kernel_basis(m: &SparseMatrix) -> Vec<Vec<i64>> {
    let cols = m.cols();
    if m.rows == 0 {
        return (0..cols)
            .map(|j| (0..cols).map(|i| i64::from(i == j)).collect())
            .collect();
    }
    if cols == 0 {
        return vec![];
    }
    let snf = smith_normal_form(&m.to_dense());
    let r = snf.invariants.len();
    (r..cols).map(|j| (0..cols).map(|i| snf.v[i][j]).collect()).collect()
}

type SparseVec = Vec<(usize, i128)>;

/// `a·x + b·y` for sparse vectors sorted by index.
fn combine(a: i128, x: &[(usize, i128)], b: i128, y: &[(usize, i128)]) -> SparseVec {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::with_capacity(x.len() + y.len());
    while i < x.len() || j < y.len() {
        let (idx, v) = match (x.get(i), y.get(j)) {
            (Some(&(p, u)), Some(&(q, _))) if p < q => {
                i += 1;
                (p, a * u)
            }
            (Some(&(p, _)), Some(&(q, w))) if q < p => {
                j += 1;
                (q, b * w)
            }
            (Some(&(p, u)), Some(&(_, w))) => {
                i += 1;
                j += 1;
                (p, a * u + b * w)
            }
            (Some(&(p, u)), None) => {
                i += 1;
                (p, a * u)
            }
            (None, Some(&(q, w))) => {
                j += 1;
                (q, b * w)
            }
            (None, None) => unreachable!(),
        };
        if v != 0 {
            out.push((idx, v));
        }
    }
    out
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a.abs(), a.signum(), 0)
    } else {
        let (g, s, t) = ext_gcd(b, a % b);
        (g, t, s - (a / b) * t)
    }
}

/// The integer column span of a matrix as an echelon basis: at most one
/// basis vector per leading row, so membership is decided by reduction.
struct Lattice {
    basis: Vec<Option<SparseVec>>,
}

impl Lattice {
    fn new(m: &SparseMatrix) -> Lattice {
        let mut l = Lattice {
            basis: vec![None; m.rows],
        };
        for col in &m.columns {
            let mut v: SparseVec = col.iter().map(|&(i, x)| (i, i128::from(x))).collect();
            v.sort_unstable_by_key(|e| e.0);
            l.insert(v);
        }
        l
    }

    fn insert(&mut self, mut v: SparseVec) {
        while let Some(&(p, x)) = v.first() {
            let Some(b) = self.basis[p].take() else {
                if x < 0 {
                    v.iter_mut().for_each(|e| e.1 = -e.1);
                }
                self.basis[p] = Some(v);
                return;
            };
            let y = b[0].1;
            if x % y == 0 {
                v = combine(1, &v, -(x / y), &b);
                self.basis[p] = Some(b);
            } else {
                // Unimodular change of basis: the new pivot is gcd(x, y).
                let (g, s, t) = ext_gcd(y, x);
                self.basis[p] = Some(combine(s, &b, t, &v));
                v = combine(y / g, &v, -(x / g), &b);
            }
        }
    }

    fn contains(&self, b: &[i64]) -> bool {
        let mut v: SparseVec = b
            .iter()
            .enumerate()
            .filter(|e| *e.1 != 0)
            .map(|(i, &x)| (i, i128::from(x)))
            .collect();
        while let Some(&(p, x)) = v.first() {
            match &self.basis[p] {
                Some(b) if x % b[0].1 == 0 => v = combine(1, &v, -(x / b[0].1), b),
                _ => return false,
            }
        }
        true
    }
}

fn apply(m: &SparseMatrix, z: &[i64]) -> Vec<i64> {
    let mut out = vec![0; m.rows];
    for (j, col) in m.columns.iter().enumerate() {
        for &(i, v) in col {
            out[i] += v * z[j];
        }
    }
    out
}

/// Whether `f` and `g` induce the same maps on `π0` and on `H_i` for
/// `i ≤ d`: for every cycle `z`, `f(z) - g(z)` is a boundary.
pub fn homology_maps_agree(f: &SSetMap, g: &SSetMap, d: usize) -> Result<bool> {
    if f.source.level_counts() != g.source.level_counts() || f.target.level_counts() != g.target.level_counts() {
        return Err(Error::SSetMap("maps with different endpoints".into()));
    }
    check_degree(f.source.k(), d)?;
    if f.pi0_map() != g.pi0_map() {
        return Ok(false);
    }
    let cx = normalized_chain_complex(&f.source);
    let cy = normalized_chain_complex(&f.target);
    for i in 0..=d {
        let (fi, gi) = (normalized_chain_map(f, i), normalized_chain_map(g, i));
        let image = Lattice::new(&cy.boundaries[i + 1]);
        for z in kernel_basis(&cx.boundaries[i]) {
            let diff: Vec<i64> = apply(&fi, &z).iter().zip(apply(&gi, &z)).map(|(a, b)| a - b).collect();
            if !image.contains(&diff) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
