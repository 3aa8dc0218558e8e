use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::dyckpaths::{Column, PathRoot};
use crate::polytopes::MultiExponent;
use crate::{Error, Result};

use super::OrthoSymplectic;

/// Letters `#₁ < 1 < 1̄ < #₂ < 2 < 2̄ < ⋯`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum KtLetter {
    Hash(usize),
    Plain(usize),
    Bar(usize),
}

impl KtLetter {
    fn key(&self) -> (usize, u8) {
        match *self {
            KtLetter::Hash(j) => (j, 0),
            KtLetter::Plain(j) => (j, 1),
            KtLetter::Bar(j) => (j, 2),
        }
    }

    fn alphabet(n: usize) -> impl Iterator<Item = KtLetter> {
        (1..=n).flat_map(|j| [KtLetter::Hash(j), KtLetter::Plain(j), KtLetter::Bar(j)])
    }
}

impl Ord for KtLetter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for KtLetter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for KtLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KtLetter::Hash(j) => write!(f, "#{j}"),
            KtLetter::Plain(j) => write!(f, "{j}"),
            KtLetter::Bar(j) => write!(f, "{j}̄"),
        }
    }
}

/// A single column, top to bottom.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct KtTableau(pub Vec<KtLetter>);

impl KtTableau {
    /// Strictly increasing with the entry in row `r` at least `#_r`.
    pub fn is_column(&self, n: usize) -> bool {
        let in_range = self.0.iter().all(|l| (1..=n).contains(&l.key().0));
        let increasing = self.0.windows(2).all(|w| w[0] < w[1]);
        let rows = self.0.iter().enumerate().all(|(r, l)| *l >= KtLetter::Hash(r + 1));
        in_range && increasing && rows
    }

    /// [`is_column`](Self::is_column) and additionally `#_j` only in row `j`;
    /// the set counted by [`kt_tableaux`].
    pub fn is_valid(&self, n: usize) -> bool {
        self.is_column(n)
            && self
                .0
                .iter()
                .enumerate()
                .all(|(r, l)| !matches!(l, KtLetter::Hash(j) if *j != r + 1))
    }
}

impl fmt::Display for KtTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// All columns of length `i` over the alphabet of rank `n`.
pub fn kt_tableaux(n: usize, i: usize) -> Vec<KtTableau> {
    fn rec(n: usize, i: usize, col: &mut Vec<KtLetter>, out: &mut Vec<KtTableau>) {
        if col.len() == i {
            out.push(KtTableau(col.clone()));
            return;
        }
        let row = col.len() + 1;
        for l in KtLetter::alphabet(n) {
            let fits = l >= KtLetter::Hash(row)
                && col.last().is_none_or(|prev| *prev < l)
                && !matches!(l, KtLetter::Hash(j) if j != row);
            if fits {
                col.push(l);
                rec(n, i, col, out);
                col.pop();
            }
        }
    }
    let mut out = Vec::new();
    if (1..=n).contains(&i) {
        rec(n, i, &mut Vec::new(), &mut out);
    }
    out
}

/// The tableau `T(s)` of a point `s ∈ S(ϖ_i)`.
///
/// The result is a column in the sense of [`KtTableau::is_column`]; it may
/// carry `#_j` below row `j` (for instance `T(e_{δ₁+δ₂} + e_{δ₂}) = [#2,2̄]`
/// when `n = 2`), so it need not satisfy [`KtTableau::is_valid`].
pub fn kt_map(osp: &OrthoSymplectic, i: usize, s: &MultiExponent) -> Result<KtTableau> {
    let n = osp.rank();
    if !osp.polytope(&osp.fundamental(i))?.contains(s)? {
        return Err(Error::NotInPolytope(s.to_string(), format!("ϖ{i}")));
    }
    let mut column: Vec<Option<KtLetter>> = (1..=i).map(|r| Some(KtLetter::Plain(r))).collect();
    let mut replaced = vec![false; i];
    let mut hashes = Vec::new();
    for (k, &v) in s.0.iter().enumerate() {
        if v == 0 {
            continue;
        }
        match osp.grid_root(k) {
            PathRoot::Short(j) => hashes.push(j),
            PathRoot::C { row, col } => {
                if row > i || replaced[row - 1] {
                    return Err(Error::Invariant(format!("{s}: row {row} cannot be replaced")));
                }
                replaced[row - 1] = true;
                column[row - 1] = Some(match col {
                    Column::Plain(q) if q < n => KtLetter::Plain(q + 1),
                    Column::Plain(_) => KtLetter::Bar(n),
                    Column::Bar(q) => KtLetter::Bar(q),
                });
            }
            PathRoot::A { .. } => unreachable!("osp grids have no type A roots"),
        }
    }
    let mut letters: Vec<KtLetter> = column.into_iter().flatten().collect();
    letters.sort();
    for j in hashes {
        let slot = letters
            .iter()
            .position(|l| *l == KtLetter::Plain(j))
            .ok_or_else(|| Error::Invariant(format!("{s}: no entry {j} to mark")))?;
        letters[slot] = KtLetter::Hash(j);
    }
    let t = KtTableau(letters);
    if !t.is_column(n) {
        return Err(Error::Invariant(format!("{s} maps to the invalid column {t}")));
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn small_counts() {
        let single: Vec<String> = kt_tableaux(2, 1).iter().map(|t| t.to_string()).collect();
        assert_eq!(single, vec!["[#1]", "[1]", "[1̄]", "[2]", "[2̄]"]);
        assert_eq!(kt_tableaux(2, 2).len(), 10);
        assert_eq!(kt_tableaux(1, 1).len(), 3);
        assert!(kt_tableaux(2, 3).is_empty());
    }

    #[test]
    fn enumerated_tableaux_are_valid() {
        for n in 1..=4 {
            for i in 1..=n {
                assert!(kt_tableaux(n, i).iter().all(|t| t.is_valid(n)));
            }
        }
    }

    #[test]
    fn image_can_leave_the_restricted_set() {
        let o = OrthoSymplectic::new(2).unwrap();
        let rs = o.root_system();
        let mut s = MultiExponent::zero(6);
        s.0[rs.parse_positive_root("δ1+δ2").unwrap()] = 1;
        s.0[rs.parse_positive_root("δ2").unwrap()] = 1;
        let t = kt_map(&o, 2, &s).unwrap();
        assert_eq!(t.to_string(), "[#2,2̄]");
        assert!(t.is_column(2) && !t.is_valid(2));
    }

    #[test]
    fn letter_order() {
        let mut letters: Vec<KtLetter> = KtLetter::alphabet(2).collect();
        letters.reverse();
        letters.sort();
        assert_eq!(letters, KtLetter::alphabet(2).collect::<Vec<_>>());
    }

    #[test]
    fn map_examples() {
        let o = OrthoSymplectic::new(2).unwrap();
        let rs = o.root_system();
        let unit = |name: &str| MultiExponent::unit(6, rs.parse_positive_root(name).unwrap());
        let show = |s: &MultiExponent| kt_map(&o, 2, s).unwrap().to_string();
        assert_eq!(show(&MultiExponent::zero(6)), "[1,2]");
        assert_eq!(show(&unit("2δ1")), "[1̄,2]");
        assert_eq!(show(&unit("δ1")), "[#1,2]");
    }

    #[test]
    fn injective_on_fundamentals() {
        for n in 1..=3 {
            let o = OrthoSymplectic::new(n).unwrap();
            for i in 1..=n {
                let pts = o.points(&o.fundamental(i)).unwrap();
                let images: HashSet<KtTableau> = pts.iter().map(|s| kt_map(&o, i, s).unwrap()).collect();
                assert_eq!(images.len(), pts.len());
                assert!(images.iter().all(|t| t.is_column(n)));
                assert_eq!(kt_tableaux(n, i).len(), pts.len(), "n={n} i={i}");
            }
        }
    }
}
