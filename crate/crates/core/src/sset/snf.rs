//! Smith normal form over the integers.

use std::collections::BTreeSet;

/// A dense integer matrix in row-major order.
pub type Dense = Vec<Vec<i64>>;

/// `U · M · V = D` with `D` diagonal, `d_1 | d_2 | …` and `U`, `V`
/// unimodular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    /// Nonzero diagonal entries, all positive, in divisibility order.
    pub invariants: Vec<i64>,
    pub u: Dense,
    pub v: Dense,
    pub d: Dense,
}

impl SmithForm {
    /// Recomputes `U · M · V` and compares it with `D` exactly; also checks
    /// the shape of `D`, the divisibility chain and unimodularity of `U`
    /// and `V` (via their determinants).
    pub fn verify(&self, m: &Dense) -> bool {
        let rows = m.len();
        let cols = m.first().map_or(0, Vec::len);
        let umv = matmul(&matmul(&self.u, m, rows), &self.v, cols);
        if umv != self.d {
            return false;
        }
        for (i, row) in self.d.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                let expected = if i == j && i < self.invariants.len() {
                    self.invariants[i]
                } else {
                    0
                };
                if x != expected {
                    return false;
                }
            }
        }
        let chain = self.invariants.windows(2).all(|w| w[1] % w[0] == 0);
        chain
            && self.invariants.iter().all(|&d| d > 0)
            && determinant(&self.u).abs() == 1
            && determinant(&self.v).abs() == 1
    }
}

fn identity(n: usize) -> Dense {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

fn matmul(a: &Dense, b: &Dense, inner: usize) -> Dense {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| (0..cols).map(|j| (0..inner).map(|t| row[t] * b[t][j]).sum()).collect())
        .collect()
}

/// Exact determinant by fraction-free (Bareiss) elimination.
fn determinant(m: &Dense) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&i| a[i][k] != 0) else {
                return 0;
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    (sign * a[n - 1][n - 1]) as i64
}

/// Smith normal form with transforms.
pub fn smith_normal_form(m: &Dense) -> SmithForm {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut a = m.clone();
    let mut u = identity(rows);
    let mut v = identity(cols);
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry of the remaining block
        let Some((pi, pj)) = min_entry(&a, t) else {
            break;
        };
        a.swap(t, pi);
        u.swap(t, pi);
        swap_cols(&mut a, t, pj);
        swap_cols(&mut v, t, pj);
        loop {
            let p = a[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                if a[i][t] != 0 {
                    let q = a[i][t] / p;
                    row_axpy(&mut a, i, t, -q);
                    row_axpy(&mut u, i, t, -q);
                    clean &= a[i][t] == 0;
                }
            }
            for j in t + 1..cols {
                if a[t][j] != 0 {
                    let q = a[t][j] / p;
                    col_axpy(&mut a, j, t, -q);
                    col_axpy(&mut v, j, t, -q);
                    clean &= a[t][j] == 0;
                }
            }
            if !clean {
                // a remainder is smaller than the pivot; move it in
                let (pi, pj) = min_in_cross(&a, t);
                a.swap(t, pi);
                u.swap(t, pi);
                swap_cols(&mut a, t, pj);
                swap_cols(&mut v, t, pj);
                continue;
            }
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| a[i][j] % p != 0));
            match bad {
                Some(i) => {
                    row_axpy(&mut a, t, i, 1);
                    row_axpy(&mut u, t, i, 1);
                }
                None => break,
            }
        }
        if a[t][t] < 0 {
            for x in a[t].iter_mut() {
                *x = -*x;
            }
            for x in u[t].iter_mut() {
                *x = -*x;
            }
        }
        t += 1;
    }
    let invariants = (0..t).map(|i| a[i][i]).collect();
    SmithForm { invariants, u, v, d: a }
}

fn min_entry(a: &Dense, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.len() {
        for j in t..a[i].len() {
            if a[i][j] != 0 && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn min_in_cross(a: &Dense, t: usize) -> (usize, usize) {
    let mut best = (t, t);
    for i in t..a.len() {
        if a[i][t] != 0 && a[i][t].abs() < a[best.0][best.1].abs() {
            best = (i, t);
        }
    }
    for j in t..a[t].len() {
        if a[t][j] != 0 && a[t][j].abs() < a[best.0][best.1].abs() {
            best = (t, j);
        }
    }
    best
}

fn swap_cols(a: &mut Dense, i: usize, j: usize) {
    if i != j {
        for row in a.iter_mut() {
            row.swap(i, j);
        }
    }
}

// row[dst] += q · row[src]
fn row_axpy(a: &mut Dense, dst: usize, src: usize, q: i64) {
    let (s, d) = if src < dst {
        let (l, r) = a.split_at_mut(dst);
        (&l[src], &mut r[0])
    } else {
        let (l, r) = a.split_at_mut(src);
        (&r[0], &mut l[dst])
    };
    for (x, y) in d.iter_mut().zip(s) {
        *x = x.checked_add(q.checked_mul(*y).expect("overflow")).expect("overflow");
    }
}

fn col_axpy(a: &mut Dense, dst: usize, src: usize, q: i64) {
    for row in a.iter_mut() {
        row[dst] = row[dst]
            .checked_add(q.checked_mul(row[src]).expect("overflow"))
            .expect("overflow");
    }
}

/// Invariant factors (including units) of a sparse integer matrix given by
/// columns of `(row, value)` entries.
///
/// Unit pivots are eliminated sparsely first; the remaining block, usually
/// tiny, goes through the dense algorithm.
pub fn sparse_invariant_factors(rows: usize, columns: &[Vec<(usize, i64)>]) -> Vec<i64> {
    let mut cols: Vec<Vec<(usize, i64)>> = columns
        .iter()
        .map(|c| {
            let mut c: Vec<(usize, i64)> = c.iter().copied().filter(|e| e.1 != 0).collect();
            c.sort_unstable();
            c
        })
        .collect();
    let mut row_sets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); rows];
    for (j, c) in cols.iter().enumerate() {
        for &(i, _) in c {
            row_sets[i].insert(j);
        }
    }
    let mut alive = vec![true; cols.len()];
    let mut units = 0;
    loop {
        let mut progress = false;
        for j in 0..cols.len() {
            if !alive[j] || cols[j].is_empty() {
                continue;
            }
            let pivot = cols[j]
                .iter()
                .filter(|e| e.1.abs() == 1)
                .min_by_key(|e| row_sets[e.0].len())
                .copied();
            let Some((r, pv)) = pivot else {
                continue;
            };
            let others: Vec<usize> = row_sets[r].iter().copied().filter(|&c| c != j).collect();
            let pivot_col = cols[j].clone();
            for c in others {
                let val = cols[c].iter().find(|e| e.0 == r).map(|e| e.1).unwrap();
                // col_c -= (val / pv) · col_j, and pv = ±1
                let q = -val * pv;
                let merged = axpy_sparse(&cols[c], &pivot_col, q);
                for &(i, _) in &cols[c] {
                    row_sets[i].remove(&c);
                }
                for &(i, _) in &merged {
                    row_sets[i].insert(c);
                }
                cols[c] = merged;
            }
            for &(i, _) in &pivot_col {
                row_sets[i].remove(&j);
            }
            cols[j].clear();
            alive[j] = false;
            units += 1;
            progress = true;
        }
        if !progress {
            break;
        }
    }
    // dense remainder
    let live: Vec<usize> = (0..cols.len()).filter(|&j| alive[j] && !cols[j].is_empty()).collect();
    let mut live_rows: Vec<usize> = live.iter().flat_map(|&j| cols[j].iter().map(|e| e.0)).collect();
    live_rows.sort_unstable();
    live_rows.dedup();
    let mut out = vec![1; units];
    if !live.is_empty() {
        let pos: std::collections::HashMap<usize, usize> = live_rows.iter().enumerate().map(|(i, &r)| (r, i)).collect();
        let mut dense = vec![vec![0i64; live.len()]; live_rows.len()];
        for (jj, &j) in live.iter().enumerate() {
            for &(i, x) in &cols[j] {
                dense[pos[&i]][jj] = x;
            }
        }
        out.extend(smith_normal_form(&dense).invariants);
    }
    out
}

fn axpy_sparse(a: &[(usize, i64)], b: &[(usize, i64)], q: i64) -> Vec<(usize, i64)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i]);
            i += 1;
        } else if take_b {
            out.push((b[j].0, q.checked_mul(b[j].1).expect("overflow")));
            j += 1;
        } else {
            let v = a[i].1 + q.checked_mul(b[j].1).expect("overflow");
            if v != 0 {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn two_by_two_example() {
        let m = vec![vec![2, 4], vec![6, 8]];
        let s = smith_normal_form(&m);
        assert_eq!(s.invariants, vec![2, 4]);
        assert!(s.verify(&m));
    }

    #[test]
    fn identity_and_zero() {
        let m = identity(3);
        let s = smith_normal_form(&m);
        assert_eq!(s.invariants, vec![1, 1, 1]);
        assert!(s.verify(&m));
        let z = vec![vec![0; 3]; 2];
        let s = smith_normal_form(&z);
        assert!(s.invariants.is_empty());
        assert!(s.verify(&z));
    }

    fn to_columns(m: &Dense) -> Vec<Vec<(usize, i64)>> {
        let cols = m.first().map_or(0, Vec::len);
        (0..cols)
            .map(|j| (0..m.len()).map(|i| (i, m[i][j])).filter(|e| e.1 != 0).collect())
            .collect()
    }

    proptest! {
        #[test]
        fn snf_verifies_and_is_permutation_invariant(
            m in proptest::collection::vec(proptest::collection::vec(-6i64..7, 4), 1..5),
            seed in 0u64..1000,
        ) {
            let s = smith_normal_form(&m);
            prop_assert!(s.verify(&m));
            // permuting rows and columns leaves the invariants unchanged
            let mut p = m.clone();
            let r = (seed as usize) % p.len();
            p.swap(0, r);
            let c = (seed as usize / 7) % 4;
            for row in p.iter_mut() { row.swap(0, c); }
            prop_assert_eq!(smith_normal_form(&p).invariants, s.invariants.clone());
            // the sparse route agrees
            let mut sp = sparse_invariant_factors(m.len(), &to_columns(&m));
            sp.sort_unstable();
            let mut dense = s.invariants;
            dense.sort_unstable();
            prop_assert_eq!(sp, dense);
        }
    }
}
