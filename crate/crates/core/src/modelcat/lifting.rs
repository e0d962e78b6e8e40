use serde::Serialize;

use crate::fincat::FinCat;

/// A commuting square `p ∘ top = bottom ∘ i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Square {
    pub top: usize,
    pub bottom: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LiftReport {
    pub holds: bool,
    pub squares_checked: usize,
    /// A square with no diagonal filler.
    pub counterexample: Option<Square>,
    /// A filler for each square, in enumeration order, when `holds`.
    pub witnesses: Vec<usize>,
}

/// All commuting squares with left edge `i : a → b` and right edge
/// `p : x → y`.
pub fn squares(c: &FinCat, i: usize, p: usize) -> Vec<Square> {
    let (a, b) = (c.src(i), c.dst(i));
    let (x, y) = (c.src(p), c.dst(p));
    let mut out = Vec::new();
    for &top in c.hom(a, x) {
        for &bottom in c.hom(b, y) {
            if c.compose(p, top) == c.compose(bottom, i) {
                out.push(Square { top, bottom });
            }
        }
    }
    out
}

/// `h : b → x` with `h ∘ i = top` and `p ∘ h = bottom`.
pub fn filler(c: &FinCat, i: usize, p: usize, sq: Square) -> Option<usize> {
    c.hom(c.dst(i), c.src(p))
        .iter()
        .copied()
        .find(|&h| c.compose(h, i) == Some(sq.top) && c.compose(p, h) == Some(sq.bottom))
}

/// Whether `i` has the left lifting property against `p`, exhaustively.
pub fn has_lift(c: &FinCat, i: usize, p: usize) -> LiftReport {
    let sqs = squares(c, i, p);
    let mut witnesses = Vec::with_capacity(sqs.len());
    for &sq in &sqs {
        match filler(c, i, p, sq) {
            Some(h) => witnesses.push(h),
            None => {
                return LiftReport {
                    holds: false,
                    squares_checked: witnesses.len() + 1,
                    counterexample: Some(sq),
                    witnesses: vec![],
                }
            }
        }
    }
    LiftReport {
        holds: true,
        squares_checked: sqs.len(),
        counterexample: None,
        witnesses,
    }
}
