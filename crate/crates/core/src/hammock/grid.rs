use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fincat::FinCat;
use crate::modelcat::RelCat;

/// Direction of the horizontal arrows in a column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Left,
    Right,
}

/// A hammock from `source` to `target` of width `k = rows - 1` and length
/// `n = directions.len()`.
///
/// Node column `j` runs from `0` (the source) to `n` (the target); arrow
/// column `c` sits between node columns `c` and `c + 1`. A rightward arrow
/// goes from node `c` to node `c + 1`, a leftward one from `c + 1` to `c`.
/// `vertical[i][j]` goes from row `i` to row `i + 1` at node column `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Hammock {
    pub source: usize,
    pub target: usize,
    pub directions: Vec<Direction>,
    pub horizontal: Vec<Vec<usize>>,
    pub vertical: Vec<Vec<usize>>,
}

/// Result of [`validate_hammock`]: each problem names the offending cell.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct HammockReport {
    pub valid: bool,
    pub problems: Vec<String>,
}

impl Hammock {
    pub fn width(&self) -> usize {
        self.horizontal.len() - 1
    }

    pub fn length(&self) -> usize {
        self.directions.len()
    }

    /// The length-0 hammock on `a` of the given width.
    pub fn identity(c: &FinCat, a: usize, width: usize) -> Hammock {
        Hammock {
            source: a,
            target: a,
            directions: vec![],
            horizontal: vec![vec![]; width + 1],
            vertical: vec![vec![c.identity(a)]; width],
        }
    }

    /// A single rightward column `f` repeated on every row.
    pub fn arrow(c: &FinCat, f: usize, width: usize) -> Hammock {
        let (a, b) = (c.src(f), c.dst(f));
        Hammock {
            source: a,
            target: b,
            directions: vec![Direction::Right],
            horizontal: vec![vec![f]; width + 1],
            vertical: vec![vec![c.identity(a), c.identity(b)]; width],
        }
    }

    /// The object at row `i`, node column `j`.
    pub fn node(&self, c: &FinCat, i: usize, j: usize) -> usize {
        if j == 0 {
            return self.source;
        }
        let h = self.horizontal[i][j - 1];
        match self.directions[j - 1] {
            Direction::Right => c.dst(h),
            Direction::Left => c.src(h),
        }
    }

    /// Objects at node columns `col` and `col + 1` joined by the arrow.
    fn ends(&self, c: &FinCat, i: usize, col: usize) -> (usize, usize) {
        let h = self.horizontal[i][col];
        match self.directions[col] {
            Direction::Right => (c.src(h), c.dst(h)),
            Direction::Left => (c.dst(h), c.src(h)),
        }
    }

    /// Whether the square between rows `i`, `i + 1` at arrow column `col`
    /// commutes.
    fn square_commutes(&self, c: &FinCat, i: usize, col: usize) -> bool {
        let (h, h2) = (self.horizontal[i][col], self.horizontal[i + 1][col]);
        let (v, v2) = (self.vertical[i][col], self.vertical[i][col + 1]);
        match self.directions[col] {
            Direction::Right => c.compose(v2, h) == c.compose(h2, v),
            Direction::Left => c.compose(v, h) == c.compose(h2, v2),
        }
    }

    pub fn label(&self, c: &FinCat) -> String {
        if self.length() == 0 {
            return format!("{}[{}]", c.object_name(self.source), self.width());
        }
        let rows: Vec<String> = self
            .horizontal
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&self.directions)
                    .map(|(&h, d)| match d {
                        Direction::Right => format!(">{}", c.morphism_name(h)),
                        Direction::Left => format!("<{}", c.morphism_name(h)),
                    })
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        let verticals: Vec<String> = self
            .vertical
            .iter()
            .map(|row| row.iter().map(|&v| c.morphism_name(v)).collect::<Vec<_>>().join(","))
            .collect();
        if verticals.is_empty() {
            rows.join(" / ")
        } else {
            format!("{} | {}", rows.join(" / "), verticals.join(" / "))
        }
    }

    /// Removes row `i`, composing the vertical arrows across it, then
    /// reduces.
    pub fn face(&self, c: &FinCat, i: usize) -> Hammock {
        let k = self.width();
        let mut h = self.clone();
        h.horizontal.remove(i);
        if i == 0 {
            h.vertical.remove(0);
        } else if i == k {
            h.vertical.remove(k - 1);
        } else {
            let below = h.vertical.remove(i);
            for (j, v) in h.vertical[i - 1].iter_mut().enumerate() {
                *v = c.compose(below[j], *v).expect("vertical arrows compose");
            }
        }
        reduce(c, &h)
    }

    /// Repeats row `i` with identity vertical arrows.
    pub fn degen(&self, c: &FinCat, i: usize) -> Hammock {
        let mut h = self.clone();
        let row = h.horizontal[i].clone();
        let ids = (0..=self.length()).map(|j| c.identity(self.node(c, i, j))).collect();
        h.horizontal.insert(i, row);
        h.vertical.insert(i, ids);
        h
    }

    /// Whether every column has a non-identity arrow and adjacent columns
    /// alternate.
    pub fn is_reduced(&self, c: &FinCat) -> bool {
        let n = self.length();
        (0..n).all(|col| self.horizontal.iter().any(|row| !c.is_identity(row[col])))
            && self.directions.windows(2).all(|w| w[0] != w[1])
    }
}

/// Checks shape, endpoints, commutativity and the weak-equivalence
/// conditions, square by square.
pub fn validate_hammock(rel: &RelCat, h: &Hammock) -> HammockReport {
    let c = &*rel.cat;
    let mut problems = Vec::new();
    let n = h.length();
    if h.horizontal.is_empty() {
        problems.push("a hammock needs at least one row".to_string());
        return HammockReport { valid: false, problems };
    }
    let k = h.width();
    if h.horizontal.iter().any(|r| r.len() != n) {
        problems.push(format!("every row must have {n} horizontal arrows"));
    }
    if h.vertical.len() != k || h.vertical.iter().any(|r| r.len() != n + 1) {
        problems.push(format!("expected {k} rows of {} vertical arrows", n + 1));
    }
    let ids_in_range = h
        .horizontal
        .iter()
        .chain(&h.vertical)
        .flatten()
        .all(|&m| m < c.num_morphisms());
    if !ids_in_range || h.source >= c.num_objects() || h.target >= c.num_objects() {
        problems.push("unknown object or morphism".to_string());
    }
    if !problems.is_empty() {
        return HammockReport { valid: false, problems };
    }
    if n == 0 && h.source != h.target {
        problems.push("length 0 requires equal endpoints".to_string());
    }
    for i in 0..=k {
        for col in 0..n {
            let (from, to) = h.ends(c, i, col);
            let expected_from = if col == 0 { h.source } else { h.ends(c, i, col - 1).1 };
            if from != expected_from {
                problems.push(format!(
                    "row {i}, column {col}: arrow does not start where the previous one ends"
                ));
            }
            if col == n - 1 && to != h.target {
                problems.push(format!("row {i}: the last arrow does not reach the target"));
            }
            if h.directions[col] == Direction::Left && !rel.is_weq(h.horizontal[i][col]) {
                problems.push(format!(
                    "row {i}, column {col}: leftward arrow `{}` is not a weak equivalence",
                    c.morphism_name(h.horizontal[i][col])
                ));
            }
        }
    }
    if !problems.is_empty() {
        return HammockReport { valid: false, problems };
    }
    for i in 0..k {
        for j in 0..=n {
            let v = h.vertical[i][j];
            let (a, b) = (h.node(c, i, j), h.node(c, i + 1, j));
            if c.src(v) != a || c.dst(v) != b {
                problems.push(format!("vertical arrow at row {i}, node {j} has the wrong endpoints"));
                continue;
            }
            if (j == 0 || j == n) && !c.is_identity(v) {
                problems.push(format!("vertical arrow at row {i}, node {j} must be an identity"));
            }
            if !rel.is_weq(v) {
                problems.push(format!(
                    "vertical arrow `{}` at row {i}, node {j} is not a weak equivalence",
                    c.morphism_name(v)
                ));
            }
        }
        if problems.is_empty() {
            for col in 0..n {
                if !h.square_commutes(c, i, col) {
                    problems.push(format!("square at rows {i}-{}, column {col} does not commute", i + 1));
                }
            }
        }
    }
    HammockReport {
        valid: problems.is_empty(),
        problems,
    }
}

/// Removes arrow column `col` and node column `node`.
fn delete_column(h: &mut Hammock, col: usize, node: usize) {
    h.directions.remove(col);
    for row in &mut h.horizontal {
        row.remove(col);
    }
    for row in &mut h.vertical {
        row.remove(node);
    }
}

/// Deletes all-identity columns and merges adjacent columns pointing the
/// same way, leftmost first, until neither applies.
pub fn reduce(c: &FinCat, h: &Hammock) -> Hammock {
    let mut h = h.clone();
    loop {
        let n = h.length();
        if let Some(col) = (0..n).find(|&col| h.horizontal.iter().all(|row| c.is_identity(row[col]))) {
            // nodes col and col + 1 coincide, with equal vertical arrows
            delete_column(&mut h, col, col + 1);
            continue;
        }
        if let Some(col) = (0..n.saturating_sub(1)).find(|&col| h.directions[col] == h.directions[col + 1]) {
            for row in &mut h.horizontal {
                let (f, g) = (row[col], row[col + 1]);
                row[col] = match h.directions[col] {
                    Direction::Right => c.compose(g, f),
                    Direction::Left => c.compose(f, g),
                }
                .expect("adjacent arrows compose");
            }
            delete_column(&mut h, col + 1, col + 1);
            continue;
        }
        return h;
    }
}

/// Horizontal concatenation followed by [`reduce`].
pub fn compose_hammocks(c: &FinCat, first: &Hammock, second: &Hammock) -> Result<Hammock> {
    if first.target != second.source {
        return Err(Error::Endpoint(format!(
            "cannot compose a hammock ending at `{}` with one starting at `{}`",
            c.object_name(first.target),
            c.object_name(second.source)
        )));
    }
    if first.width() != second.width() {
        return Err(Error::Endpoint("hammocks of different widths".into()));
    }
    let mut h = first.clone();
    h.target = second.target;
    h.directions.extend(&second.directions);
    for (row, other) in h.horizontal.iter_mut().zip(&second.horizontal) {
        row.extend(other);
    }
    for (row, other) in h.vertical.iter_mut().zip(&second.vertical) {
        // the shared node column carries identities on both sides
        row.extend(&other[1..]);
    }
    Ok(reduce(c, &h))
}
