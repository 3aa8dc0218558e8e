//! Dyck paths of types A and C and their orthosymplectic extension, compiled
//! into sum inequalities.
//!
//! Roots are addressed on grids with 1-based indices. In type `A_r`,
//! `A { a, b }` is `α_a + ⋯ + α_b`. In type `C_n`, row `r` holds the columns
//! `r, …, n, (n−1)̄, …, r̄`; `Plain(q)` is `α_r + ⋯ + α_q` and `Bar(q)` is
//! `α_r + ⋯ + α_n + α_{n−1} + ⋯ + α_q`, so `(r, Bar(r)) = 2δ_r`.

use std::fmt;

use serde::Serialize;

use crate::polytopes::{Inequality, PolytopeSpec};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Column {
    Plain(usize),
    Bar(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum PathRoot {
    A { a: usize, b: usize },
    C { row: usize, col: Column },
    /// The odd root `δ_i` of `osp(1|2n)`.
    Short(usize),
}

impl PathRoot {
    /// Coefficients over the simple roots of a rank-`rank` factor.
    /// `None` for [`PathRoot::Short`].
    pub fn coeffs(&self, rank: usize) -> Option<Vec<i64>> {
        let mut c = vec![0i64; rank];
        match *self {
            PathRoot::A { a, b } => c[a - 1..b].iter_mut().for_each(|x| *x = 1),
            PathRoot::C { row, col: Column::Plain(q) } => c[row - 1..q].iter_mut().for_each(|x| *x = 1),
            PathRoot::C { row, col: Column::Bar(q) } => {
                for (k, x) in c.iter_mut().enumerate() {
                    let k = k + 1;
                    *x = if k < row {
                        0
                    } else if k < q {
                        1
                    } else if k < rank {
                        2
                    } else {
                        1
                    };
                }
            }
            PathRoot::Short(_) => return None,
        }
        Some(c)
    }
}

impl fmt::Display for PathRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PathRoot::A { a, b } => write!(f, "α{a},{b}"),
            PathRoot::C { row, col: Column::Plain(q) } => write!(f, "α{row},{q}"),
            PathRoot::C { row, col: Column::Bar(q) } => write!(f, "α{row},{q}̄"),
            PathRoot::Short(i) => write!(f, "δ{i}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum PathKind {
    /// Type A path from `α_i` to `α_j`.
    TypeA,
    /// Symplectic path ending at a simple root `α_j`, `j < n`.
    SimpleEnd,
    /// Symplectic path ending at `2δ_j`.
    LongEnd,
    /// Symplectic prefix ending at `2δ_j`, followed by `δ_i`.
    OddEnd,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DyckPath {
    pub roots: Vec<PathRoot>,
    pub kind: PathKind,
    pub start: usize,
    pub end: usize,
}

impl DyckPath {
    /// Label window `(first, last)` whose sum is the bound `M_p(λ)`.
    pub fn window(&self, rank: usize) -> (usize, usize) {
        match self.kind {
            PathKind::TypeA | PathKind::SimpleEnd => (self.start, self.end),
            PathKind::LongEnd | PathKind::OddEnd => (self.start, rank),
        }
    }

    pub fn bound(&self, labels: &[u32]) -> u32 {
        let (i, j) = self.window(labels.len());
        labels[i - 1..j].iter().sum()
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.roots.iter().map(|r| r.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// FFLV paths of `A_r`, depth first from each simple root.
pub fn dyck_paths_a(rank: usize) -> Vec<DyckPath> {
    fn walk(a: usize, b: usize, rank: usize, start: usize, trail: &mut Vec<PathRoot>, out: &mut Vec<DyckPath>) {
        trail.push(PathRoot::A { a, b });
        if a == b {
            out.push(DyckPath {
                roots: trail.clone(),
                kind: PathKind::TypeA,
                start,
                end: a,
            });
        }
        if b < rank {
            walk(a, b + 1, rank, start, trail, out);
        }
        if a < b {
            walk(a + 1, b, rank, start, trail, out);
        }
        trail.pop();
    }
    let mut out = Vec::new();
    for i in 1..=rank {
        walk(i, i, rank, i, &mut Vec::new(), &mut out);
    }
    out
}

fn c_exists(rank: usize, row: usize, col: Column) -> bool {
    match col {
        Column::Plain(q) => row <= q && q <= rank,
        Column::Bar(q) => row <= q && q < rank,
    }
}

fn c_right(rank: usize, col: Column) -> Column {
    match col {
        Column::Plain(q) if q < rank => Column::Plain(q + 1),
        Column::Plain(q) => Column::Bar(q - 1),
        Column::Bar(q) => Column::Bar(q.wrapping_sub(1)),
    }
}

/// Symplectic paths of `C_n`.
pub fn dyck_paths_c(rank: usize) -> Vec<DyckPath> {
    fn walk(row: usize, col: Column, rank: usize, start: usize, trail: &mut Vec<PathRoot>, out: &mut Vec<DyckPath>) {
        trail.push(PathRoot::C { row, col });
        let end = match col {
            Column::Plain(q) if q == row && q < rank => Some((PathKind::SimpleEnd, q)),
            Column::Plain(q) if q == row => Some((PathKind::LongEnd, q)),
            Column::Bar(q) if q == row => Some((PathKind::LongEnd, q)),
            _ => None,
        };
        if let Some((kind, end)) = end {
            out.push(DyckPath {
                roots: trail.clone(),
                kind,
                start,
                end,
            });
        }
        let right = c_right(rank, col);
        if c_exists(rank, row, right) {
            walk(row, right, rank, start, trail, out);
        }
        if c_exists(rank, row + 1, col) {
            walk(row + 1, col, rank, start, trail, out);
        }
        trail.pop();
    }
    let mut out = Vec::new();
    for i in 1..=rank {
        walk(i, Column::Plain(i), rank, i, &mut Vec::new(), &mut out);
    }
    out
}

/// Orthosymplectic paths: simple-end symplectic paths, and `2δ`-end
/// symplectic paths extended by `δ_i`.
pub fn dyck_paths_osp(rank: usize) -> Vec<DyckPath> {
    dyck_paths_c(rank)
        .into_iter()
        .map(|mut p| {
            if p.kind == PathKind::LongEnd {
                p.roots.push(PathRoot::Short(p.start));
                p.kind = PathKind::OddEnd;
            }
            p
        })
        .collect()
}

/// One inequality per path over the coordinates given by `resolve`.
pub fn compile_inequalities<F>(paths: &[DyckPath], labels: &[u32], mut resolve: F) -> Result<Vec<Inequality>>
where
    F: FnMut(&PathRoot) -> Option<usize>,
{
    paths
        .iter()
        .map(|p| {
            let support = p
                .roots
                .iter()
                .map(|r| resolve(r).ok_or_else(|| Error::Invariant(format!("path root {r} has no coordinate"))))
                .collect::<Result<Vec<_>>>()?;
            Inequality::new(support, p.bound(labels))
        })
        .collect()
}

/// Path inequalities plus caps on the coordinates flagged odd.
pub fn compile_polytope<F>(
    paths: &[DyckPath],
    labels: &[u32],
    roots: Vec<String>,
    odd: Vec<bool>,
    resolve: F,
) -> Result<PolytopeSpec>
where
    F: FnMut(&PathRoot) -> Option<usize>,
{
    PolytopeSpec::new(roots, odd, compile_inequalities(paths, labels, resolve)?)
}
