use std::cmp::Ordering;

use crate::polytopes::{MultiExponent, PolytopeSpec};
use crate::{Error, Result};

use super::OrthoSymplectic;

/// `s = first + rest` with `first ∈ S(ϖ_index)` and `rest ∈ S(λ − ϖ_index)`.
///
/// `greedy` records whether `first` is also the ord1-greatest point of
/// `S(ϖ_index)` below `s` with no condition on the remainder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split {
    pub index: usize,
    pub first: MultiExponent,
    pub rest: MultiExponent,
    pub greedy: bool,
}

/// Caches each `S(ϖ_i)` sorted from greatest to least in the lexicographic
/// order induced by `ord1`.
#[derive(Clone, Debug)]
pub struct Splitter<'a> {
    osp: &'a OrthoSymplectic,
    fundamentals: Vec<Vec<MultiExponent>>,
}

/// The polytopes a split of `S(λ)` needs, built once per `λ`.
#[derive(Clone, Debug)]
pub struct SplitContext<'s, 'a> {
    splitter: &'s Splitter<'a>,
    index: usize,
    whole: PolytopeSpec,
    lower: PolytopeSpec,
    labels: Vec<u32>,
}

impl<'a> Splitter<'a> {
    pub fn new(osp: &'a OrthoSymplectic) -> Result<Self> {
        let fundamentals = (1..=osp.rank())
            .map(|i| {
                let mut pts = osp.points(&osp.fundamental(i))?;
                pts.sort_by(|a, b| compare_ord1(osp.ord1(), b, a));
                Ok(pts)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Splitter { osp, fundamentals })
    }

    /// Fixes `λ`; `i` is the largest index with `m_i ≠ 0`.
    pub fn context(&self, labels: &[u32]) -> Result<SplitContext<'_, 'a>> {
        let whole = self.osp.polytope(labels)?;
        let index = labels
            .iter()
            .rposition(|&m| m != 0)
            .ok_or_else(|| Error::Invariant("cannot split off a fundamental weight from λ = 0".into()))?
            + 1;
        let mut lower = labels.to_vec();
        lower[index - 1] -= 1;
        Ok(SplitContext {
            splitter: self,
            index,
            whole,
            lower: self.osp.polytope(&lower)?,
            labels: labels.to_vec(),
        })
    }

    pub fn split(&self, labels: &[u32], s: &MultiExponent) -> Result<Split> {
        self.context(labels)?.split(s)
    }

    /// Repeated splits until the remaining weight is zero.
    pub fn decompose(&self, labels: &[u32], s: &MultiExponent) -> Result<Vec<Split>> {
        let mut labels = labels.to_vec();
        let mut s = s.clone();
        let mut out = Vec::new();
        while labels.iter().any(|&m| m != 0) {
            let step = self.split(&labels, &s)?;
            labels[step.index - 1] -= 1;
            s = step.rest.clone();
            out.push(step);
        }
        if !s.is_zero() {
            return Err(Error::Invariant(format!("{s} left over at λ = 0")));
        }
        Ok(out)
    }
}

impl SplitContext<'_, '_> {
    pub fn index(&self) -> usize {
        self.index
    }

    /// The ord1-greatest `t ∈ S(ϖ_i)` with `t ≤ s` and `s − t ∈ S(λ − ϖ_i)`.
    ///
    /// The unconditioned ord1-greatest `t ≤ s` can leave a remainder outside
    /// `S(λ − ϖ_i)` (first at `n = 3`, `λ = ϖ₂ + ϖ₃`,
    /// `s = e_{δ₂−δ₃} + e_{2δ₁} + e_{δ₁}`), so candidates are scanned in
    /// ord1 order until the remainder fits.
    pub fn split(&self, s: &MultiExponent) -> Result<Split> {
        if !self.whole.contains(s)? {
            return Err(Error::NotInPolytope(s.to_string(), format!("{:?}", self.labels)));
        }
        let dominated = self.splitter.fundamentals[self.index - 1]
            .iter()
            .filter(|t| t.dominated_by(s));
        for (rank, t) in dominated.enumerate() {
            let rest = s.checked_minus(t).expect("t is dominated by s");
            if self.lower.contains(&rest)? {
                return Ok(Split {
                    index: self.index,
                    first: t.clone(),
                    rest,
                    greedy: rank == 0,
                });
            }
        }
        Err(Error::Invariant(format!(
            "no point of S(ϖ{}) splits {s} off S({:?})",
            self.index, self.labels
        )))
    }
}

/// Lexicographic comparison reading coordinates in the order given.
pub(crate) fn compare_ord1(order: &[usize], a: &MultiExponent, b: &MultiExponent) -> Ordering {
    order
        .iter()
        .map(|&k| a.0[k].cmp(&b.0[k]))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

pub fn minkowski_split(osp: &OrthoSymplectic, labels: &[u32], s: &MultiExponent) -> Result<Split> {
    Splitter::new(osp)?.split(labels, s)
}
