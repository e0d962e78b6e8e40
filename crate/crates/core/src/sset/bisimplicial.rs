use crate::error::{Error, Result};
use crate::sset::TruncSSet;

/// A bisimplicial set truncated at `(k, k)`, stored as a grid of sets with
/// horizontal operators (changing `p`) and vertical operators (changing
/// `q`).
#[derive(Clone, Debug)]
pub struct BiTruncSSet {
    k: usize,
    labels: Vec<Vec<Vec<String>>>,
    // h_faces[p][q][i][x] : (p, q) → (p-1, q)
    h_faces: Vec<Vec<Vec<Vec<usize>>>>,
    h_degens: Vec<Vec<Vec<Vec<usize>>>>,
    v_faces: Vec<Vec<Vec<Vec<usize>>>>,
    v_degens: Vec<Vec<Vec<Vec<usize>>>>,
}

impl BiTruncSSet {
    /// Builds from rows: `rows[p]` is the vertical simplicial set `X_{p,•}`,
    /// and `horizontal(α, q, x)` gives `X(α)` on `X_{p,q}` for a monotone
    /// `α : [p'] → [p]` (only cofaces and codegeneracies are queried).
    pub fn from_rows(
        rows: Vec<TruncSSet>,
        horizontal: impl Fn(&[usize], usize, usize, usize) -> usize,
    ) -> Result<BiTruncSSet> {
        let k = rows.len().checked_sub(1).ok_or_else(|| Error::SSet("no rows".into()))?;
        if rows.iter().any(|r| r.k() != k) {
            return Err(Error::SSet("rows must be truncated at the number of rows".into()));
        }
        let labels = rows
            .iter()
            .map(|r| (0..=k).map(|q| r.labels(q).to_vec()).collect())
            .collect();
        let mut b = BiTruncSSet {
            k,
            labels,
            h_faces: vec![vec![Vec::new(); k + 1]; k + 1],
            h_degens: vec![vec![Vec::new(); k + 1]; k + 1],
            v_faces: vec![vec![Vec::new(); k + 1]; k + 1],
            v_degens: vec![vec![Vec::new(); k + 1]; k + 1],
        };
        for (p, r) in rows.iter().enumerate() {
            for q in 0..=k {
                if q > 0 {
                    b.v_faces[p][q] = (0..=q)
                        .map(|i| (0..r.len(q)).map(|x| r.face(q, i, x)).collect())
                        .collect();
                }
                if q < k {
                    b.v_degens[p][q] = (0..=q)
                        .map(|i| (0..r.len(q)).map(|x| r.degen(q, i, x)).collect())
                        .collect();
                }
                if p > 0 {
                    b.h_faces[p][q] = (0..=p)
                        .map(|i| {
                            let alpha = crate::simplex::coface(p, i);
                            (0..r.len(q)).map(|x| horizontal(&alpha, p, q, x)).collect()
                        })
                        .collect();
                }
                if p < k {
                    b.h_degens[p][q] = (0..=p)
                        .map(|i| {
                            let alpha = crate::simplex::codegeneracy(p, i);
                            (0..r.len(q)).map(|x| horizontal(&alpha, p, q, x)).collect()
                        })
                        .collect();
                }
            }
        }
        b.check()?;
        Ok(b)
    }

    /// `X_{p,q} = A_p × B_q`.
    pub fn external_product(a: &TruncSSet, b: &TruncSSet) -> Result<BiTruncSSet> {
        if a.k() != b.k() {
            return Err(Error::TruncationMismatch {
                expected: a.k(),
                found: b.k(),
            });
        }
        let k = a.k();
        let rows = (0..=k)
            .map(|p| {
                let set: Vec<String> = a.labels(p).to_vec();
                let ap = TruncSSet::discrete(&set, k);
                ap.product(b)
            })
            .collect::<Result<Vec<_>>>()?;
        let bl = |q: usize| b.len(q).max(1);
        Self::from_rows(rows, |alpha, p, q, x| {
            let (s, t) = (x / bl(q), x % bl(q));
            a.apply(alpha, p, s) * bl(q) + t
        })
    }

    /// `X_{p,q} = Y_q` for every `p`, horizontal operators identities.
    pub fn constant_rows(y: &TruncSSet) -> Result<BiTruncSSet> {
        Self::from_rows(vec![y.clone(); y.k() + 1], |_, _, _, x| x)
    }

    /// `X_{p,q} = Y_p` for every `q`, vertical operators identities.
    pub fn constant_columns(y: &TruncSSet) -> Result<BiTruncSSet> {
        let k = y.k();
        let rows = (0..=k).map(|p| TruncSSet::discrete(y.labels(p), k)).collect();
        Self::from_rows(rows, |alpha, p, _, x| y.apply(alpha, p, x))
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self, p: usize, q: usize) -> usize {
        self.labels[p][q].len()
    }

    pub fn h_face(&self, p: usize, q: usize, i: usize, x: usize) -> usize {
        self.h_faces[p][q][i][x]
    }

    pub fn h_degen(&self, p: usize, q: usize, i: usize, x: usize) -> usize {
        self.h_degens[p][q][i][x]
    }

    pub fn v_face(&self, p: usize, q: usize, i: usize, x: usize) -> usize {
        self.v_faces[p][q][i][x]
    }

    pub fn v_degen(&self, p: usize, q: usize, i: usize, x: usize) -> usize {
        self.v_degens[p][q][i][x]
    }

    /// Row `p` as a simplicial set in `q`.
    pub fn row(&self, p: usize) -> TruncSSet {
        let k = self.k;
        TruncSSet::from_raw(
            k,
            self.labels[p].clone(),
            self.v_faces[p].clone(),
            self.v_degens[p].clone(),
        )
        .expect("row shapes")
    }

    /// `X(α) : X_{p,q} → X_{p',q}` for a monotone `α : [p'] → [p]`.
    pub fn horizontal_apply(&self, alpha: &[usize], p: usize, q: usize, x: usize) -> usize {
        let w = crate::simplex::decompose(alpha, p);
        let mut level = p;
        let mut y = x;
        for &j in &w.faces {
            y = self.h_face(level, q, j, y);
            level -= 1;
        }
        for &i in &w.degeneracies {
            y = self.h_degen(level, q, i, y);
            level += 1;
        }
        y
    }

    /// Horizontal identities in each column, and horizontal/vertical
    /// operators commute.
    fn check(&self) -> Result<()> {
        let k = self.k;
        for q in 0..=k {
            self.column(q).map_err(|e| Error::SSet(format!("column {q}: {e}")))?;
        }
        for p in 0..=k {
            for q in 0..=k {
                for x in 0..self.len(p, q) {
                    for i in 0..=p {
                        for j in 0..=q {
                            if p > 0 && q > 0 {
                                let a = self.v_face(p - 1, q, j, self.h_face(p, q, i, x));
                                let b = self.h_face(p, q - 1, i, self.v_face(p, q, j, x));
                                if a != b {
                                    return Err(Error::SSet(format!(
                                        "horizontal d_{i} and vertical d_{j} do not commute at ({p},{q})"
                                    )));
                                }
                            }
                            if p < k && q > 0 {
                                let a = self.v_face(p + 1, q, j, self.h_degen(p, q, i, x));
                                let b = self.h_degen(p, q - 1, i, self.v_face(p, q, j, x));
                                if a != b {
                                    return Err(Error::SSet(format!(
                                        "horizontal s_{i} and vertical d_{j} do not commute at ({p},{q})"
                                    )));
                                }
                            }
                            if p > 0 && q < k {
                                let a = self.v_degen(p - 1, q, j, self.h_face(p, q, i, x));
                                let b = self.h_face(p, q + 1, i, self.v_degen(p, q, j, x));
                                if a != b {
                                    return Err(Error::SSet(format!(
                                        "horizontal d_{i} and vertical s_{j} do not commute at ({p},{q})"
                                    )));
                                }
                            }
                            if p < k && q < k {
                                let a = self.v_degen(p + 1, q, j, self.h_degen(p, q, i, x));
                                let b = self.h_degen(p, q + 1, i, self.v_degen(p, q, j, x));
                                if a != b {
                                    return Err(Error::SSet(format!(
                                        "horizontal s_{i} and vertical s_{j} do not commute at ({p},{q})"
                                    )));
                                }
                            }
                        }
                    }
                }
            }
        }
        for p in 0..=k {
            let r = self.row(p).validate();
            if !r.passed() {
                return Err(Error::SSet(format!("row {p}: {}", r.failures[0])));
            }
        }
        Ok(())
    }

    fn column(&self, q: usize) -> std::result::Result<TruncSSet, String> {
        let k = self.k;
        let labels = (0..=k).map(|p| self.labels[p][q].clone()).collect();
        let faces = (0..=k).map(|p| self.h_faces[p][q].clone()).collect();
        let degens = (0..=k).map(|p| self.h_degens[p][q].clone()).collect();
        let col = TruncSSet::from_raw(k, labels, faces, degens).map_err(|e| e.to_string())?;
        let r = col.validate();
        if r.passed() {
            Ok(col)
        } else {
            Err(r.failures[0].clone())
        }
    }
}

/// `(diag X)_n = X_{n,n}`, `d_i` = horizontal `d_i` then vertical `d_i`.
pub fn diagonal(x: &BiTruncSSet) -> TruncSSet {
    let k = x.k;
    let labels = (0..=k).map(|n| x.labels[n][n].clone()).collect();
    let faces = (0..=k)
        .map(|n| {
            if n == 0 {
                return vec![];
            }
            (0..=n)
                .map(|i| {
                    (0..x.len(n, n))
                        .map(|s| x.v_face(n - 1, n, i, x.h_face(n, n, i, s)))
                        .collect()
                })
                .collect()
        })
        .collect();
    let degens = (0..=k)
        .map(|n| {
            if n == k {
                return vec![];
            }
            (0..=n)
                .map(|i| {
                    (0..x.len(n, n))
                        .map(|s| x.v_degen(n + 1, n, i, x.h_degen(n, n, i, s)))
                        .collect()
                })
                .collect()
        })
        .collect();
    TruncSSet::from_raw(k, labels, faces, degens).expect("diagonal shapes")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_of_external_product_is_product() {
        let d1 = TruncSSet::standard_simplex(1, 2);
        let b = BiTruncSSet::external_product(&d1, &d1).unwrap();
        let diag = diagonal(&b);
        assert_eq!(diag.len(1), 9);
        assert!(diag.validate().passed());
        assert_eq!(diag.level_counts(), d1.product(&d1).unwrap().level_counts());
    }

    #[test]
    fn constant_directions_recover_the_input() {
        let y = TruncSSet::boundary_simplex(2, 2);
        for b in [
            BiTruncSSet::constant_rows(&y).unwrap(),
            BiTruncSSet::constant_columns(&y).unwrap(),
        ] {
            let diag = diagonal(&b);
            assert!(diag.validate().passed());
            assert_eq!(diag.level_counts(), y.level_counts());
            assert_eq!(crate::sset::homology(&diag, 1).free_rank, 1);
        }
        let e = TruncSSet::empty(2);
        assert!(diagonal(&BiTruncSSet::constant_rows(&e).unwrap()).is_empty());
    }
}
