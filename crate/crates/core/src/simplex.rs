//! Monotone maps between ordinals `[m] = {0 < 1 < … < m}`.
//!
//! A monotone map `[m] → [n]` is stored as its list of values
//! `(α(0), …, α(m))`.

/// All monotone maps `[m] → [n]` in lexicographic order.
pub fn monotone_maps(m: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m + 1);
    fn rec(pos: usize, m: usize, n: usize, lo: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if pos > m {
            out.push(cur.clone());
            return;
        }
        for v in lo..=n {
            cur.push(v);
            rec(pos + 1, m, n, v, cur, out);
            cur.pop();
        }
    }
    rec(0, m, n, 0, &mut cur, &mut out);
    out
}

/// The coface `δ_i : [n-1] → [n]` skipping `i`.
pub fn coface(n: usize, i: usize) -> Vec<usize> {
    (0..n).map(|j| if j < i { j } else { j + 1 }).collect()
}

/// The codegeneracy `σ_i : [n+1] → [n]` hitting `i` twice.
pub fn codegeneracy(n: usize, i: usize) -> Vec<usize> {
    (0..=n + 1).map(|j| if j <= i { j } else { j - 1 }).collect()
}

/// `β ∘ α` for `α : [a] → [b]` and `β : [b] → [c]`.
pub fn compose(beta: &[usize], alpha: &[usize]) -> Vec<usize> {
    alpha.iter().map(|&x| beta[x]).collect()
}

pub fn identity(n: usize) -> Vec<usize> {
    (0..=n).collect()
}

pub fn is_injective(alpha: &[usize]) -> bool {
    alpha.windows(2).all(|w| w[0] < w[1])
}

pub fn is_surjective(alpha: &[usize], n: usize) -> bool {
    alpha.first() == Some(&0) && alpha.last() == Some(&n) && alpha.windows(2).all(|w| w[1] - w[0] <= 1)
}

/// Epi-mono factorisation of a monotone map `α : [m] → [n]`, expressed
/// through elementary operators.
///
/// For a simplicial object `X`, `X(α) : X_n → X_m` is obtained by applying
/// the faces `d_j` for `j` in `faces` (in the given order, starting at level
/// `n`) and then the degeneracies `s_i` for `i` in `degeneracies` (in the
/// given order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorWord {
    pub faces: Vec<usize>,
    pub degeneracies: Vec<usize>,
    /// Level reached after the faces.
    pub middle: usize,
}

pub fn decompose(alpha: &[usize], n: usize) -> OperatorWord {
    let mut image: Vec<usize> = alpha.to_vec();
    image.dedup();
    let mut faces: Vec<usize> = (0..=n).filter(|j| !image.contains(j)).collect();
    faces.reverse();
    let degeneracies = alpha
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] == w[1])
        .map(|(i, _)| i)
        .collect();
    OperatorWord {
        faces,
        degeneracies,
        middle: image.len() - 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binomial(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn counts_match_binomials() {
        for m in 0..4 {
            for n in 0..4 {
                assert_eq!(monotone_maps(m, n).len(), binomial(m + n + 1, m + 1));
            }
        }
        assert_eq!(monotone_maps(2, 2).len(), 10);
    }

    #[test]
    fn decomposition_rebuilds_the_map() {
        for m in 0..4 {
            for n in 0..4 {
                for alpha in monotone_maps(m, n) {
                    let w = decompose(&alpha, n);
                    // rebuild α = mono ∘ epi from the word
                    let mut map = identity(n);
                    let mut level = n;
                    for &j in &w.faces {
                        map = compose(&map, &coface(level, j));
                        level -= 1;
                    }
                    for &i in &w.degeneracies {
                        map = compose(&map, &codegeneracy(level, i));
                        level += 1;
                    }
                    assert_eq!(level, m);
                    assert_eq!(map, alpha);
                }
            }
        }
    }
}
