//! Truncated simplicial sets, simplicial maps, bisimplicial sets, and the
//! integer homology engine used as weak-equivalence evidence.

mod bisimplicial;
mod chains;
mod evidence;
mod kan;
mod map;
pub mod snf;

use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::simplex;

pub use bisimplicial::{diagonal, BiTruncSSet};
pub use chains::{homology, homology_table, normalized_chain_complex, ChainComplex, HomologyReport, SparseMatrix};
pub use evidence::{homology_maps_agree, is_homology_point, weq_evidence, weq_evidence_pair, EvidenceReport};
pub use kan::{kan_check, HornFailure, KanReport};
pub use map::SSetMap;

/// A simplicial set truncated at level `k`: levels `0..=k`, faces
/// `d_i : X_n → X_{n-1}` for `1 ≤ n ≤ k`, degeneracies
/// `s_i : X_n → X_{n+1}` for `n < k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSSet {
    k: usize,
    labels: Vec<Vec<String>>,
    // faces[n][i][x], n ≥ 1
    faces: Vec<Vec<Vec<usize>>>,
    // degens[n][i][x], n < k
    degens: Vec<Vec<Vec<usize>>>,
}

/// A simplicial set built from explicit keys, keeping the keys around.
#[derive(Clone, Debug)]
pub struct Indexed<K> {
    pub sset: TruncSSet,
    pub keys: Vec<Vec<K>>,
    pub index: Vec<HashMap<K, usize>>,
}

/// Simplicial-identity check outcome.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub instances_checked: usize,
    pub failure_count: usize,
    /// The first few failures, each citing the identity and simplex.
    pub failures: Vec<String>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.instances_checked += 1;
        if !ok {
            self.failure_count += 1;
            if self.failures.len() < 20 {
                self.failures.push(what());
            }
        }
    }
}

impl TruncSSet {
    /// Assembles raw level data without checking the simplicial identities.
    /// Operator arrays must have the right shapes; see [`TruncSSet::validate`].
    pub fn from_raw(
        k: usize,
        labels: Vec<Vec<String>>,
        faces: Vec<Vec<Vec<usize>>>,
        degens: Vec<Vec<Vec<usize>>>,
    ) -> Result<TruncSSet> {
        if labels.len() != k + 1 || faces.len() != k + 1 || degens.len() != k + 1 {
            return Err(Error::SSet(format!("expected {} levels", k + 1)));
        }
        for n in 0..=k {
            let expected_faces = if n == 0 { 0 } else { n + 1 };
            let expected_degens = if n < k { n + 1 } else { 0 };
            if faces[n].len() != expected_faces || degens[n].len() != expected_degens {
                return Err(Error::SSet(format!("wrong number of operators at level {n}")));
            }
            for (i, f) in faces[n].iter().enumerate() {
                if f.len() != labels[n].len() || f.iter().any(|&y| y >= labels[n - 1].len()) {
                    return Err(Error::SSet(format!(
                        "d_{i} at level {n} is not a function into level {}",
                        n - 1
                    )));
                }
            }
            for (i, s) in degens[n].iter().enumerate() {
                if s.len() != labels[n].len() || s.iter().any(|&y| y >= labels[n + 1].len()) {
                    return Err(Error::SSet(format!(
                        "s_{i} at level {n} is not a function into level {}",
                        n + 1
                    )));
                }
            }
        }
        Ok(TruncSSet {
            k,
            labels,
            faces,
            degens,
        })
    }

    /// Builds a simplicial set from explicit keys per level and operator
    /// functions on keys. Fails if an operator leaves the given levels.
    pub fn from_keys<K, F, S, L>(k: usize, keys: Vec<Vec<K>>, face: F, degen: S, label: L) -> Result<Indexed<K>>
    where
        K: Clone + Eq + Hash + Debug,
        F: Fn(usize, usize, &K) -> K,
        S: Fn(usize, usize, &K) -> K,
        L: Fn(&K) -> String,
    {
        if keys.len() != k + 1 {
            return Err(Error::SSet(format!("expected {} levels", k + 1)));
        }
        let index: Vec<HashMap<K, usize>> = keys
            .iter()
            .map(|level| level.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect())
            .collect();
        for (n, level) in keys.iter().enumerate() {
            if index[n].len() != level.len() {
                return Err(Error::SSet(format!("duplicate simplex at level {n}")));
            }
        }
        let lookup = |n: usize, key: K, what: &dyn Fn() -> String| -> Result<usize> {
            index[n]
                .get(&key)
                .copied()
                .ok_or_else(|| Error::SSet(format!("{} gives {key:?}, not a simplex at level {n}", what())))
        };
        let mut faces = vec![Vec::new(); k + 1];
        let mut degens = vec![Vec::new(); k + 1];
        for n in 0..=k {
            if n > 0 {
                for i in 0..=n {
                    let mut col = Vec::with_capacity(keys[n].len());
                    for x in &keys[n] {
                        col.push(lookup(n - 1, face(n, i, x), &|| format!("d_{i} of {}", label(x)))?);
                    }
                    faces[n].push(col);
                }
            }
            if n < k {
                for i in 0..=n {
                    let mut col = Vec::with_capacity(keys[n].len());
                    for x in &keys[n] {
                        col.push(lookup(n + 1, degen(n, i, x), &|| format!("s_{i} of {}", label(x)))?);
                    }
                    degens[n].push(col);
                }
            }
        }
        let labels = keys.iter().map(|level| level.iter().map(&label).collect()).collect();
        Ok(Indexed {
            sset: TruncSSet {
                k,
                labels,
                faces,
                degens,
            },
            keys,
            index,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self, n: usize) -> usize {
        self.labels[n].len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels[0].is_empty()
    }

    pub fn level_counts(&self) -> Vec<usize> {
        self.labels.iter().map(Vec::len).collect()
    }

    pub fn label(&self, n: usize, x: usize) -> &str {
        &self.labels[n][x]
    }

    pub fn labels(&self, n: usize) -> &[String] {
        &self.labels[n]
    }

    pub fn face(&self, n: usize, i: usize, x: usize) -> usize {
        self.faces[n][i][x]
    }

    pub fn degen(&self, n: usize, i: usize, x: usize) -> usize {
        self.degens[n][i][x]
    }

    /// `X(α) : X_n → X_m` for a monotone `α : [m] → [n]`, `m, n ≤ k`.
    pub fn apply(&self, alpha: &[usize], n: usize, x: usize) -> usize {
        let w = simplex::decompose(alpha, n);
        let mut level = n;
        let mut y = x;
        for &j in &w.faces {
            y = self.face(level, j, y);
            level -= 1;
        }
        for &i in &w.degeneracies {
            y = self.degen(level, i, y);
            level += 1;
        }
        y
    }

    /// Flags for the degenerate simplices at level `n`.
    /// The totally degenerate `n`-simplex `s_0 ⋯ s_0 v` on a vertex.
    pub fn degenerate_vertex(&self, n: usize, v: usize) -> usize {
        (0..n).fold(v, |x, m| self.degen(m, 0, x))
    }

    pub fn degenerate_flags(&self, n: usize) -> Vec<bool> {
        let mut flags = vec![false; self.len(n)];
        if n > 0 {
            for s in &self.degens[n - 1] {
                for &y in s {
                    flags[y] = true;
                }
            }
        }
        flags
    }

    pub fn nondegenerate(&self, n: usize) -> Vec<usize> {
        self.degenerate_flags(n)
            .into_iter()
            .enumerate()
            .filter(|(_, d)| !d)
            .map(|(i, _)| i)
            .collect()
    }

    /// Checks every instance of the simplicial identities within the
    /// truncation.
    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::default();
        let k = self.k;
        for n in 2..=k {
            for x in 0..self.len(n) {
                for j in 1..=n {
                    for i in 0..j {
                        let lhs = self.face(n - 1, i, self.face(n, j, x));
                        let rhs = self.face(n - 1, j - 1, self.face(n, i, x));
                        r.record(lhs == rhs, || {
                            format!(
                                "d_{i} d_{j} = d_{} d_{i} fails on level-{n} simplex `{}`",
                                j - 1,
                                self.label(n, x)
                            )
                        });
                    }
                }
            }
        }
        // d_i s_j at level n (s_j : X_{n-1} → X_n)
        for n in 1..=k {
            for x in 0..self.len(n - 1) {
                for j in 0..n {
                    let sx = self.degen(n - 1, j, x);
                    for i in 0..=n {
                        let lhs = self.face(n, i, sx);
                        let rhs = if i < j {
                            self.degen(n - 2, j - 1, self.face(n - 1, i, x))
                        } else if i == j || i == j + 1 {
                            x
                        } else {
                            self.degen(n - 2, j, self.face(n - 1, i - 1, x))
                        };
                        r.record(lhs == rhs, || {
                            format!(
                                "face-degeneracy identity d_{i} s_{j} fails on level-{} simplex `{}`",
                                n - 1,
                                self.label(n - 1, x)
                            )
                        });
                    }
                }
            }
        }
        for n in 0..k.saturating_sub(1) {
            for x in 0..self.len(n) {
                for j in 0..=n {
                    for i in 0..=j {
                        let lhs = self.degen(n + 1, i, self.degen(n, j, x));
                        let rhs = self.degen(n + 1, j + 1, self.degen(n, i, x));
                        r.record(lhs == rhs, || {
                            format!(
                                "s_{i} s_{j} = s_{} s_{i} fails on level-{n} simplex `{}`",
                                j + 1,
                                self.label(n, x)
                            )
                        });
                    }
                }
            }
        }
        r
    }

    pub fn empty(k: usize) -> TruncSSet {
        TruncSSet::discrete(&[], k)
    }

    pub fn point(k: usize) -> TruncSSet {
        TruncSSet::discrete(&["*".to_string()], k)
    }

    /// All levels equal to `set`, all operators identities.
    pub fn discrete(set: &[String], k: usize) -> TruncSSet {
        let id: Vec<usize> = (0..set.len()).collect();
        TruncSSet {
            k,
            labels: vec![set.to_vec(); k + 1],
            faces: (0..=k)
                .map(|n| if n == 0 { vec![] } else { vec![id.clone(); n + 1] })
                .collect(),
            degens: (0..=k)
                .map(|n| if n < k { vec![id.clone(); n + 1] } else { vec![] })
                .collect(),
        }
    }

    /// `Δ^m` truncated at `k`: level `n` is the monotone maps `[n] → [m]`.
    pub fn standard_simplex(m: usize, k: usize) -> TruncSSet {
        Self::simplex_like(m, k, |_| true)
    }

    /// `∂Δ^m`: the non-surjective monotone maps into `[m]`.
    pub fn boundary_simplex(m: usize, k: usize) -> TruncSSet {
        Self::simplex_like(m, k, |alpha| !simplex::is_surjective(alpha, m))
    }

    fn simplex_like(m: usize, k: usize, keep: impl Fn(&[usize]) -> bool) -> TruncSSet {
        let keys: Vec<Vec<Vec<usize>>> = (0..=k)
            .map(|n| simplex::monotone_maps(n, m).into_iter().filter(|a| keep(a)).collect())
            .collect();
        TruncSSet::from_keys(
            k,
            keys,
            |n, i, a| simplex::compose(a, &simplex::coface(n, i)),
            |n, i, a| simplex::compose(a, &simplex::codegeneracy(n, i)),
            |a| a.iter().map(|v| v.to_string()).collect(),
        )
        .expect("closed under operators")
        .sset
    }

    /// `d_i ↦ d_{n-i}`, `s_i ↦ s_{n-i}`.
    pub fn opposite(&self) -> TruncSSet {
        let faces = self
            .faces
            .iter()
            .enumerate()
            .map(|(n, fs)| (0..fs.len()).map(|i| fs[n - i].clone()).collect())
            .collect();
        let degens = self
            .degens
            .iter()
            .enumerate()
            .map(|(n, ss)| (0..ss.len()).map(|i| ss[n - i].clone()).collect())
            .collect();
        TruncSSet {
            k: self.k,
            labels: self.labels.clone(),
            faces,
            degens,
        }
    }

    /// Levelwise product.
    pub fn product(&self, other: &TruncSSet) -> Result<TruncSSet> {
        if self.k != other.k {
            return Err(Error::TruncationMismatch {
                expected: self.k,
                found: other.k,
            });
        }
        let keys: Vec<Vec<(usize, usize)>> = (0..=self.k)
            .map(|n| {
                (0..self.len(n))
                    .flat_map(|x| (0..other.len(n)).map(move |y| (x, y)))
                    .collect()
            })
            .collect();
        Ok(TruncSSet::from_keys(
            self.k,
            keys,
            |n, i, &(x, y)| (self.face(n, i, x), other.face(n, i, y)),
            |n, i, &(x, y)| (self.degen(n, i, x), other.degen(n, i, y)),
            |_| String::new(),
        )?
        .sset
        .relabel(|n, x| {
            let (a, b) = (x / other.len(n).max(1), x % other.len(n).max(1));
            format!("({},{})", self.label(n, a), other.label(n, b))
        }))
    }

    /// Replaces labels; the closure receives `(level, index)`.
    pub fn relabel(mut self, f: impl Fn(usize, usize) -> String) -> TruncSSet {
        for n in 0..=self.k {
            for x in 0..self.labels[n].len() {
                self.labels[n][x] = f(n, x);
            }
        }
        self
    }

    /// Forgets levels above `k`.
    pub fn truncate(&self, k: usize) -> TruncSSet {
        assert!(k <= self.k);
        let mut degens = self.degens[..=k].to_vec();
        degens[k] = Vec::new();
        TruncSSet {
            k,
            labels: self.labels[..=k].to_vec(),
            faces: self.faces[..=k].to_vec(),
            degens,
        }
    }

    /// Connected components: the coequaliser of `d_0, d_1 : X_1 ⇉ X_0`.
    pub fn pi0(&self) -> Pi0 {
        let n = self.len(0);
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        if self.k >= 1 {
            for e in 0..self.len(1) {
                let (a, b) = (
                    find(&mut parent, self.face(1, 0, e)),
                    find(&mut parent, self.face(1, 1, e)),
                );
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut ids = HashMap::new();
        let mut component = Vec::with_capacity(n);
        for v in 0..n {
            let r = find(&mut parent, v);
            let next = ids.len();
            component.push(*ids.entry(r).or_insert(next));
        }
        Pi0 {
            count: ids.len(),
            component,
        }
    }
}

/// Components of a simplicial set, numbered by first vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pi0 {
    pub count: usize,
    /// Component of each vertex.
    pub component: Vec<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_simplex_counts() {
        assert_eq!(TruncSSet::standard_simplex(0, 3).level_counts(), vec![1, 1, 1, 1]);
        assert_eq!(TruncSSet::standard_simplex(1, 2).level_counts(), vec![2, 3, 4]);
        assert_eq!(TruncSSet::standard_simplex(2, 2).level_counts(), vec![3, 6, 10]);
        assert!(TruncSSet::standard_simplex(2, 3).validate().passed());
        assert_eq!(TruncSSet::standard_simplex(2, 3).pi0().count, 1);
    }

    #[test]
    fn swapped_faces_are_caught() {
        let x = TruncSSet::standard_simplex(1, 2);
        let mut faces = x.faces.clone();
        faces[1].swap(0, 1);
        let bad = TruncSSet::from_raw(2, x.labels.clone(), faces, x.degens.clone()).unwrap();
        let report = bad.validate();
        assert!(!report.passed());
        assert!(report.failures[0].contains("d_0 d_"), "{:?}", report.failures);
    }

    #[test]
    fn discrete_and_empty() {
        let s: Vec<String> = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
        let d = TruncSSet::discrete(&s, 3);
        assert!(d.validate().passed());
        assert_eq!(d.pi0().count, 3);
        let e = TruncSSet::empty(3);
        assert!(e.validate().passed() && e.is_empty());
        assert_eq!(TruncSSet::point(2).level_counts(), vec![1, 1, 1]);
    }

    #[test]
    fn opposite_is_an_involution() {
        let x = TruncSSet::standard_simplex(2, 3);
        assert_eq!(x.opposite().opposite(), x);
        assert!(x.opposite().validate().passed());
        assert_eq!(TruncSSet::point(3).opposite(), TruncSSet::point(3));
    }

    #[test]
    fn product_counts() {
        let d1 = TruncSSet::standard_simplex(1, 2);
        let p = d1.product(&d1).unwrap();
        assert_eq!(p.level_counts(), vec![4, 9, 16]);
        assert!(p.validate().passed());
    }

    #[test]
    fn apply_matches_face_composites() {
        let x = TruncSSet::standard_simplex(2, 3);
        // [1] → [3] skipping 0 and 2 is d_2 then d_0 … in some order
        let alpha = vec![1, 3];
        for s in 0..x.len(3) {
            let via = x.face(2, 0, x.face(3, 2, s));
            assert_eq!(x.apply(&alpha, 3, s), via);
        }
    }
}
