use serde::Serialize;

use crate::error::{Error, Result};
use crate::fincat::FinCat;
use crate::hammock::{Direction, Hammock};
use crate::modelcat::RelCat;
use crate::sset::{Indexed, TruncSSet};

struct Search<'a> {
    rel: &'a RelCat,
    target: usize,
    width: usize,
    directions: Vec<Direction>,
    out: Vec<Hammock>,
}

impl Search<'_> {
    fn cat(&self) -> &FinCat {
        &self.rel.cat
    }

    /// Candidate arrows at a node: `(arrow, far end)`.
    fn arrows_from(&self, node: usize, dir: Direction, last: bool) -> Vec<(usize, usize)> {
        let c = self.cat();
        let list = match dir {
            Direction::Right => c.outgoing(node),
            Direction::Left => c.incoming(node),
        };
        list.iter()
            .filter(|&&h| dir == Direction::Right || self.rel.is_weq(h))
            .map(|&h| (h, if dir == Direction::Right { c.dst(h) } else { c.src(h) }))
            .filter(|&(_, e)| !last || e == self.target)
            .collect()
    }

    fn columns(&mut self, col: usize, h: &mut Hammock, nodes: &[usize]) {
        let n = self.directions.len();
        if col == n {
            self.out.push(h.clone());
            return;
        }
        let mut arrows = Vec::with_capacity(self.width + 1);
        let mut verticals = Vec::with_capacity(self.width);
        let mut next = Vec::with_capacity(self.width + 1);
        self.rows(col, 0, h, nodes, &mut arrows, &mut verticals, &mut next);
    }

    #[allow(clippy::too_many_arguments)]
    fn rows(
        &mut self,
        col: usize,
        i: usize,
        h: &mut Hammock,
        nodes: &[usize],
        arrows: &mut Vec<usize>,
        verticals: &mut Vec<usize>,
        next: &mut Vec<usize>,
    ) {
        let n = self.directions.len();
        let dir = self.directions[col];
        let last = col + 1 == n;
        if i > self.width {
            let c = self.cat();
            if arrows.iter().all(|&a| c.is_identity(a)) {
                return;
            }
            for (row, &a) in h.horizontal.iter_mut().zip(arrows.iter()) {
                row.push(a);
            }
            for (row, &v) in h.vertical.iter_mut().zip(verticals.iter()) {
                row.push(v);
            }
            let nodes2 = next.clone();
            self.columns(col + 1, h, &nodes2);
            for row in &mut h.horizontal {
                row.pop();
            }
            for row in &mut h.vertical {
                row.pop();
            }
            return;
        }
        for (a, end) in self.arrows_from(nodes[i], dir, last) {
            if i == 0 {
                arrows.push(a);
                next.push(end);
                self.rows(col, 1, h, nodes, arrows, verticals, next);
                arrows.pop();
                next.pop();
                continue;
            }
            let c = self.cat();
            let v_prev = h.vertical[i - 1][col];
            let above = arrows[i - 1];
            let candidates: Vec<usize> = c
                .hom(next[i - 1], end)
                .iter()
                .copied()
                .filter(|&v| self.rel.is_weq(v) && (!last || c.is_identity(v)))
                .filter(|&v| match dir {
                    Direction::Right => c.compose(v, above) == c.compose(a, v_prev),
                    Direction::Left => c.compose(v_prev, above) == c.compose(a, v),
                })
                .collect();
            for v in candidates {
                arrows.push(a);
                next.push(end);
                verticals.push(v);
                self.rows(col, i + 1, h, nodes, arrows, verticals, next);
                arrows.pop();
                next.pop();
                verticals.pop();
            }
        }
    }
}

/// All reduced hammocks from `a` to `b` of the given width and length at
/// most `max_length`, sorted.
pub fn enumerate_reduced_hammocks(rel: &RelCat, a: usize, b: usize, width: usize, max_length: usize) -> Vec<Hammock> {
    let c = &*rel.cat;
    let mut out = Vec::new();
    if a == b {
        out.push(Hammock::identity(c, a, width));
    }
    for n in 1..=max_length {
        for first in [Direction::Left, Direction::Right] {
            let directions: Vec<Direction> = (0..n)
                .map(|j| match (first, j % 2) {
                    (d, 0) => d,
                    (Direction::Left, _) => Direction::Right,
                    (Direction::Right, _) => Direction::Left,
                })
                .collect();
            let mut search = Search {
                rel,
                target: b,
                width,
                directions: directions.clone(),
                out: Vec::new(),
            };
            let mut h = Hammock {
                source: a,
                target: b,
                directions,
                horizontal: vec![vec![]; width + 1],
                vertical: vec![vec![c.identity(a)]; width],
            };
            search.columns(0, &mut h, &vec![a; width + 1]);
            out.extend(search.out);
        }
    }
    out.sort();
    out
}

/// A hammock hom-space truncated at level `k` and length `max_length`.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub source: usize,
    pub target: usize,
    pub max_length: usize,
    pub space: Indexed<Hammock>,
}

/// Bound bookkeeping for a hom-space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundFlags {
    pub truncation: usize,
    pub max_length: usize,
    /// All reduced hammocks of length at most `max_length` are present.
    pub complete_up_to_length: bool,
    /// `|π0|` with length bound `max_length - 1`, when `max_length ≥ 1`.
    pub pi0_previous: Option<usize>,
    pub pi0: usize,
    /// `|π0|` did not change from `max_length - 1` to `max_length`.
    pub pi0_stable: bool,
}

impl HomSpace {
    pub fn sset(&self) -> &TruncSSet {
        &self.space.sset
    }

    pub fn index_of(&self, h: &Hammock) -> Option<usize> {
        self.space.index.get(h.width())?.get(h).copied()
    }
}

/// The hammock hom-space: level `j` holds the reduced hammocks of width `j`
/// and length at most `max_length`; `d_i` deletes row `i` and reduces,
/// `s_i` repeats row `i`.
pub fn hammock_hom_space(rel: &RelCat, a: usize, b: usize, k: usize, max_length: usize) -> Result<HomSpace> {
    let c = &*rel.cat;
    if a >= c.num_objects() || b >= c.num_objects() {
        return Err(Error::UnknownObject(format!("{a} or {b}")));
    }
    let keys = (0..=k)
        .map(|w| enumerate_reduced_hammocks(rel, a, b, w, max_length))
        .collect();
    let space = TruncSSet::from_keys(k, keys, |_, i, h| h.face(c, i), |_, i, h| h.degen(c, i), |h| h.label(c))?;
    Ok(HomSpace {
        source: a,
        target: b,
        max_length,
        space,
    })
}

/// `|π0|` of the hom-space with widths 0 and 1 only.
pub fn hom_pi0(rel: &RelCat, a: usize, b: usize, max_length: usize) -> Result<usize> {
    Ok(hammock_hom_space(rel, a, b, 1, max_length)?.sset().pi0().count)
}

pub fn bound_flags(rel: &RelCat, hom: &HomSpace) -> Result<BoundFlags> {
    let pi0 = hom.sset().pi0().count;
    let pi0_previous = if hom.max_length >= 1 {
        Some(hom_pi0(rel, hom.source, hom.target, hom.max_length - 1)?)
    } else {
        None
    };
    Ok(BoundFlags {
        truncation: hom.sset().k(),
        max_length: hom.max_length,
        complete_up_to_length: true,
        pi0_previous,
        pi0,
        pi0_stable: pi0_previous == Some(pi0),
    })
}
