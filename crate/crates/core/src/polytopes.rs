//! Polytopes cut out by unit-coefficient sum inequalities over root-indexed
//! coordinates, with exact lattice-point enumeration.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::{Error, Result};

/// Dense exponent vector in the canonical root order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MultiExponent(pub Vec<u32>);

impl MultiExponent {
    pub fn zero(dim: usize) -> Self {
        MultiExponent(vec![0; dim])
    }

    pub fn unit(dim: usize, k: usize) -> Self {
        let mut e = MultiExponent::zero(dim);
        e.0[k] = 1;
        e
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn plus(&self, other: &MultiExponent) -> MultiExponent {
        MultiExponent(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self − other`, if it stays non-negative.
    pub fn checked_minus(&self, other: &MultiExponent) -> Option<MultiExponent> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(MultiExponent)
    }

    /// Coordinatewise `self ≤ other`.
    pub fn dominated_by(&self, other: &MultiExponent) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for MultiExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `Σ_{k ∈ support} s_k ≤ bound`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Inequality {
    pub support: Vec<usize>,
    pub bound: u32,
}

impl Inequality {
    pub fn new(mut support: Vec<usize>, bound: u32) -> Result<Self> {
        if support.is_empty() {
            return Err(Error::Invariant("inequality with empty support".into()));
        }
        support.sort_unstable();
        support.dedup();
        Ok(Inequality { support, bound })
    }

    pub fn holds(&self, s: &[u32]) -> bool {
        self.support.iter().map(|&k| s[k] as u64).sum::<u64>() <= self.bound as u64
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolytopeSpec {
    roots: Vec<String>,
    inequalities: Vec<Inequality>,
    odd: Vec<bool>,
}

impl PolytopeSpec {
    /// `roots` names the coordinates; `odd[k]` adds the cap `s_k ≤ 1`.
    /// Every coordinate must be bounded by an inequality or a cap.
    pub fn new(roots: Vec<String>, odd: Vec<bool>, inequalities: Vec<Inequality>) -> Result<Self> {
        if roots.len() != odd.len() {
            return Err(Error::DimensionMismatch {
                expected: roots.len(),
                got: odd.len(),
            });
        }
        let mut bounded = odd.clone();
        for ineq in &inequalities {
            for &k in &ineq.support {
                if k >= roots.len() {
                    return Err(Error::DimensionMismatch {
                        expected: roots.len(),
                        got: k + 1,
                    });
                }
                bounded[k] = true;
            }
        }
        if let Some(k) = bounded.iter().position(|b| !b) {
            return Err(Error::Unbounded(k));
        }
        Ok(PolytopeSpec {
            roots,
            inequalities,
            odd,
        })
    }

    pub fn dim(&self) -> usize {
        self.roots.len()
    }

    pub fn roots(&self) -> &[String] {
        &self.roots
    }

    pub fn inequalities(&self) -> &[Inequality] {
        &self.inequalities
    }

    pub fn odd_mask(&self) -> &[bool] {
        &self.odd
    }

    pub fn contains(&self, s: &MultiExponent) -> Result<bool> {
        if s.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: s.dim(),
            });
        }
        Ok(self.satisfies_caps(s) && self.inequalities.iter().all(|q| q.holds(&s.0)))
    }

    pub fn satisfies_caps(&self, s: &MultiExponent) -> bool {
        s.0.iter().zip(&self.odd).all(|(&x, &odd)| !odd || x <= 1)
    }

    /// Upper bound for each coordinate taken in isolation.
    pub fn box_bounds(&self) -> Vec<u32> {
        let mut ub: Vec<u32> = self.odd.iter().map(|&o| if o { 1 } else { u32::MAX }).collect();
        for q in &self.inequalities {
            for &k in &q.support {
                ub[k] = ub[k].min(q.bound);
            }
        }
        ub
    }

    /// Lattice points in lexicographic order.
    pub fn lattice_points(&self) -> Vec<MultiExponent> {
        let mut out = Vec::new();
        self.descend(|s| out.push(MultiExponent(s.to_vec())));
        out
    }

    pub fn count(&self) -> u64 {
        // Coordinates outside every inequality are independent boxes.
        let coupled: Vec<bool> = {
            let mut c = vec![false; self.dim()];
            for q in &self.inequalities {
                for &k in &q.support {
                    c[k] = true;
                }
            }
            c
        };
        let ub = self.box_bounds();
        let free: u64 = (0..self.dim())
            .filter(|&k| !coupled[k])
            .map(|k| ub[k] as u64 + 1)
            .product();
        let mut n = 0u64;
        self.descend_over(&coupled, |_| n += 1);
        n * free
    }

    fn descend<F: FnMut(&[u32])>(&self, visit: F) {
        self.descend_over(&vec![true; self.dim()], visit)
    }

    /// Depth-first enumeration over the coordinates flagged in `active`,
    /// the others held at zero.
    fn descend_over<F: FnMut(&[u32])>(&self, active: &[bool], mut visit: F) {
        let dim = self.dim();
        let ub = self.box_bounds();
        let mut touching: Vec<Vec<usize>> = vec![Vec::new(); dim];
        for (qi, q) in self.inequalities.iter().enumerate() {
            for &k in &q.support {
                touching[k].push(qi);
            }
        }
        let mut slack: Vec<u32> = self.inequalities.iter().map(|q| q.bound).collect();
        let mut s = vec![0u32; dim];
        fn rec<F: FnMut(&[u32])>(
            k: usize,
            active: &[bool],
            ub: &[u32],
            touching: &[Vec<usize>],
            slack: &mut [u32],
            s: &mut [u32],
            visit: &mut F,
        ) {
            if k == s.len() {
                visit(s);
                return;
            }
            if !active[k] {
                rec(k + 1, active, ub, touching, slack, s, visit);
                return;
            }
            let room = touching[k].iter().map(|&q| slack[q]).min().unwrap_or(ub[k]).min(ub[k]);
            for v in 0..=room {
                s[k] = v;
                for &q in &touching[k] {
                    slack[q] -= v;
                }
                rec(k + 1, active, ub, touching, slack, s, visit);
                for &q in &touching[k] {
                    slack[q] += v;
                }
            }
            s[k] = 0;
        }
        rec(0, active, &ub, &touching, &mut slack, &mut s, &mut visit);
    }

    /// Same coordinates and caps, every bound replaced.
    pub fn with_bounds(&self, bounds: &[u32]) -> Result<PolytopeSpec> {
        if bounds.len() != self.inequalities.len() {
            return Err(Error::DimensionMismatch {
                expected: self.inequalities.len(),
                got: bounds.len(),
            });
        }
        let inequalities = self
            .inequalities
            .iter()
            .zip(bounds)
            .map(|(q, &b)| Inequality {
                support: q.support.clone(),
                bound: b,
            })
            .collect();
        Ok(PolytopeSpec {
            roots: self.roots.clone(),
            inequalities,
            odd: self.odd.clone(),
        })
    }
}

/// `{a + b}` as raw sums; odd coordinates may exceed 1.
pub fn minkowski_sum(a: &[MultiExponent], b: &[MultiExponent]) -> BTreeSet<MultiExponent> {
    a.iter().flat_map(|x| b.iter().map(move |y| x.plus(y))).collect()
}

/// Keeps the points with every odd coordinate at most 1.
pub fn apply_caps(points: BTreeSet<MultiExponent>, odd: &[bool]) -> BTreeSet<MultiExponent> {
    points
        .into_iter()
        .filter(|s| s.0.iter().zip(odd).all(|(&x, &o)| !o || x <= 1))
        .collect()
}

#[derive(Serialize)]
pub struct LatticeDump<'a> {
    pub roots: &'a [String],
    pub points: Vec<&'a [u32]>,
    pub count: usize,
}

impl PolytopeSpec {
    pub fn dump<'a>(&'a self, points: &'a [MultiExponent]) -> LatticeDump<'a> {
        LatticeDump {
            roots: &self.roots,
            points: points.iter().map(|p| p.0.as_slice()).collect(),
            count: points.len(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn names(n: usize) -> Vec<String> {
        (0..n).map(|k| format!("x{k}")).collect()
    }

    /// Brute force over the bounding box.
    fn box_scan(spec: &PolytopeSpec) -> Vec<MultiExponent> {
        let ub = spec.box_bounds();
        let mut out = Vec::new();
        let mut s = vec![0u32; spec.dim()];
        loop {
            let m = MultiExponent(s.clone());
            if spec.contains(&m).unwrap() {
                out.push(m);
            }
            let mut k = spec.dim();
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                if s[k] < ub[k] {
                    s[k] += 1;
                    break;
                }
                s[k] = 0;
            }
        }
    }

    fn b01(m: u32) -> PolytopeSpec {
        PolytopeSpec::new(names(2), vec![false, true], vec![Inequality::new(vec![0, 1], m).unwrap()]).unwrap()
    }

    #[test]
    fn b01_membership() {
        let p = b01(3);
        assert!(p.contains(&MultiExponent(vec![0, 0])).unwrap());
        assert!(!p.contains(&MultiExponent(vec![3, 1])).unwrap());
        assert!(p.contains(&MultiExponent(vec![2, 1])).unwrap());
        assert!(!p.contains(&MultiExponent(vec![0, 2])).unwrap());
        assert!(p.contains(&MultiExponent(vec![0])).is_err());
    }

    #[test]
    fn b01_points() {
        let pts: Vec<Vec<u32>> = b01(3).lattice_points().into_iter().map(|m| m.0).collect();
        assert_eq!(
            pts,
            vec![
                vec![0, 0],
                vec![0, 1],
                vec![1, 0],
                vec![1, 1],
                vec![2, 0],
                vec![2, 1],
                vec![3, 0]
            ]
        );
        for m in 0..6 {
            assert_eq!(b01(m).count(), 2 * m as u64 + 1);
        }
        assert_eq!(b01(0).lattice_points(), vec![MultiExponent::zero(2)]);
    }

    #[test]
    fn rejects_unbounded() {
        let r = PolytopeSpec::new(names(3), vec![false, true, false], vec![Inequality::new(vec![0], 1).unwrap()]);
        assert_eq!(r, Err(Error::Unbounded(2)));
        assert!(Inequality::new(vec![], 1).is_err());
    }

    #[test]
    fn free_odd_coordinates_multiply() {
        let p = PolytopeSpec::new(
            names(4),
            vec![false, true, true, true],
            vec![Inequality::new(vec![0], 2).unwrap()],
        )
        .unwrap();
        assert_eq!(p.count(), 3 * 8);
        assert_eq!(p.lattice_points().len(), 24);
    }

    #[test]
    fn minkowski_examples() {
        let b = vec![MultiExponent(vec![1, 0]), MultiExponent(vec![0, 1])];
        assert_eq!(
            minkowski_sum(&[MultiExponent::zero(2)], &b),
            b.iter().cloned().collect::<BTreeSet<_>>()
        );
        let one = minkowski_sum(&[MultiExponent(vec![1, 2])], &[MultiExponent(vec![3, 0])]);
        assert_eq!(one.into_iter().collect::<Vec<_>>(), vec![MultiExponent(vec![4, 2])]);
        let s1 = b01(1).lattice_points();
        let sum = apply_caps(minkowski_sum(&s1, &s1), &[false, true]);
        assert_eq!(sum, b01(2).lattice_points().into_iter().collect());
    }

    fn arb_spec() -> impl Strategy<Value = PolytopeSpec> {
        (1usize..6).prop_flat_map(|dim| {
            let ineq = (prop::collection::vec(0..dim, 1..=dim), 0u32..4);
            (
                prop::collection::vec(any::<bool>(), dim),
                prop::collection::vec(ineq, 1..5),
            )
                .prop_map(move |(odd, ineqs)| {
                    let mut ineqs: Vec<Inequality> =
                        ineqs.into_iter().map(|(s, b)| Inequality::new(s, b).unwrap()).collect();
                    ineqs.push(Inequality::new((0..dim).collect(), 5).unwrap());
                    PolytopeSpec::new(names(dim), odd, ineqs).unwrap()
                })
        })
    }

    proptest! {
        #[test]
        fn enumerator_matches_box_scan(spec in arb_spec()) {
            let fast = spec.lattice_points();
            prop_assert_eq!(&fast, &box_scan(&spec));
            prop_assert_eq!(fast.len() as u64, spec.count());
        }

        #[test]
        fn enlarging_a_bound_keeps_points(spec in arb_spec(), which in any::<prop::sample::Index>(), extra in 1u32..3) {
            let k = which.index(spec.inequalities().len());
            let mut bounds: Vec<u32> = spec.inequalities().iter().map(|q| q.bound).collect();
            bounds[k] += extra;
            let bigger: BTreeSet<_> = spec.with_bounds(&bounds).unwrap().lattice_points().into_iter().collect();
            for p in spec.lattice_points() {
                prop_assert!(bigger.contains(&p));
            }
        }
    }
}
