use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::sset::TruncSSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HornFailure {
    pub n: usize,
    pub missing_face: usize,
    pub horns: usize,
    pub unfilled: usize,
    /// Labels of the faces of one unfilled horn (the missing slot is empty).
    pub example: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KanReport {
    pub max_dimension: usize,
    pub horns_checked: usize,
    pub failures: Vec<HornFailure>,
}

impl KanReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Exhaustive horn filling for `Λ^n_i → X`, `1 ≤ n ≤ d`, `d ≤ k - 1`.
pub fn kan_check(x: &TruncSSet, d: usize) -> Result<KanReport> {
    if d + 1 > x.k() {
        return Err(Error::Degree { degree: d, k: x.k() });
    }
    let mut report = KanReport {
        max_dimension: d,
        horns_checked: 0,
        failures: Vec::new(),
    };
    for n in 1..=d {
        for missing in 0..=n {
            let fillers: HashSet<Vec<usize>> = (0..x.len(n))
                .map(|s| (0..=n).filter(|&j| j != missing).map(|j| x.face(n, j, s)).collect())
                .collect();
            let slots: Vec<usize> = (0..=n).filter(|&j| j != missing).collect();
            let mut horns = 0;
            let mut unfilled = 0;
            let mut example = None;
            let mut chosen = Vec::with_capacity(slots.len());
            enumerate_horns(x, n, &slots, &mut chosen, &mut |faces: &[usize]| {
                horns += 1;
                if !fillers.contains(faces) {
                    unfilled += 1;
                    if example.is_none() {
                        let mut labels = vec![String::new(); n + 1];
                        for (slot, &y) in slots.iter().zip(faces) {
                            labels[*slot] = x.label(n - 1, y).to_string();
                        }
                        example = Some(labels);
                    }
                }
            });
            report.horns_checked += horns;
            if unfilled > 0 {
                report.failures.push(HornFailure {
                    n,
                    missing_face: missing,
                    horns,
                    unfilled,
                    example: example.unwrap_or_default(),
                });
            }
        }
    }
    Ok(report)
}

// Compatible families (y_j) with d_a y_b = d_{b-1} y_a for a < b.
fn enumerate_horns(x: &TruncSSet, n: usize, slots: &[usize], chosen: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    let pos = chosen.len();
    if pos == slots.len() {
        visit(chosen);
        return;
    }
    let b = slots[pos];
    for y in 0..x.len(n - 1) {
        let ok = n < 2
            || slots[..pos].iter().zip(chosen.iter()).all(|(&a, &ya)| {
                // a < b: d_a y_b = d_{b-1} y_a
                x.face(n - 1, a, y) == x.face(n - 1, b - 1, ya)
            });
        if ok {
            chosen.push(y);
            enumerate_horns(x, n, slots, chosen, visit);
            chosen.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simplex_is_not_kan_but_point_is() {
        assert!(kan_check(&TruncSSet::point(3), 2).unwrap().passed());
        // Δ^1 has the outer horn (01, 00) ↦ no filler
        let r = kan_check(&TruncSSet::standard_simplex(1, 3), 2).unwrap();
        assert!(!r.passed());
        assert!(r.failures.iter().all(|f| f.missing_face == 0 || f.missing_face == f.n));
    }
}
