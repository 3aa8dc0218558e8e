//! Polytopes for each algebra family and the monomial bases they label.

mod kt;
mod split;

pub use kt::{kt_map, kt_tableaux, KtLetter, KtTableau};
pub use split::{minkowski_split, Split, SplitContext, Splitter};

use std::collections::HashMap;

use num_traits::Zero;
use serde::Serialize;

use crate::classical::{weyl_dim, ClassicalType};
use crate::dyckpaths::{compile_inequalities, compile_polytope, dyck_paths_a, dyck_paths_c, dyck_paths_osp, Column, DyckPath, PathRoot};
use crate::polytopes::{Inequality, MultiExponent, PolytopeSpec};
use crate::rootdata::build_root_system;
use crate::weights::{factor_weights, in_desk_class, is_typical, labels_of, vanishing_odd_roots};
use crate::{AlgebraId, Error, Result, RootSystem, WeightVector, Q};

fn coordinate_names(rs: &RootSystem) -> (Vec<String>, Vec<bool>) {
    let names = rs.positive_roots().iter().map(|r| rs.format_root(r)).collect();
    let odd = (0..rs.positive_count()).map(|k| k >= rs.positive_even().len()).collect();
    (names, odd)
}

fn require_typical(rs: &RootSystem, lambda: &WeightVector) -> Result<()> {
    let vanishing = vanishing_odd_roots(rs, lambda);
    if vanishing.is_empty() {
        Ok(())
    } else {
        Err(Error::NotTypical {
            vanishing: vanishing
                .iter()
                .map(|&i| rs.format_root(&rs.positive_odd()[i]))
                .collect(),
        })
    }
}

/// `osp(1|2n)` with its orthosymplectic paths and the grid addressing of its
/// positive roots.
#[derive(Clone, Debug)]
pub struct OrthoSymplectic {
    n: usize,
    rs: RootSystem,
    paths: Vec<DyckPath>,
    index: HashMap<PathRoot, usize>,
    grid: Vec<PathRoot>,
    ord1: Vec<usize>,
}

impl OrthoSymplectic {
    pub fn new(n: usize) -> Result<Self> {
        let rs = build_root_system(&AlgebraId::B0 { n })?;
        let mut index = HashMap::new();
        for row in 1..=n {
            let cols = (row..=n).map(Column::Plain).chain((row..n).rev().map(Column::Bar));
            for col in cols {
                let r = PathRoot::C { row, col };
                let k = rs
                    .factor_root(0, &r.coeffs(n).expect("grid root"))
                    .ok_or_else(|| Error::Invariant(format!("{r} is not a root of C{n}")))?;
                index.insert(r, k);
            }
            let mut delta = vec![Q::zero(); n];
            delta[row - 1] = Q::from_integer(1);
            let k = rs
                .position(&delta)
                .ok_or_else(|| Error::Invariant(format!("δ{row} is not a root")))?;
            index.insert(PathRoot::Short(row), k);
        }
        if index.len() != rs.positive_count() {
            return Err(Error::Invariant(format!(
                "grid covers {} of {} positive roots",
                index.len(),
                rs.positive_count()
            )));
        }
        let mut grid = vec![PathRoot::Short(0); rs.positive_count()];
        for (r, &k) in &index {
            grid[k] = *r;
        }
        // rows from n down to 1, each read from r̄ back to r, then δ_r
        let mut ord1 = Vec::new();
        for row in (1..=n).rev() {
            let cols = (row..n).map(Column::Bar).chain((row..=n).rev().map(Column::Plain));
            for col in cols {
                ord1.push(index[&PathRoot::C { row, col }]);
            }
            ord1.push(index[&PathRoot::Short(row)]);
        }
        Ok(OrthoSymplectic {
            n,
            rs,
            paths: dyck_paths_osp(n),
            index,
            grid,
            ord1,
        })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn paths(&self) -> &[DyckPath] {
        &self.paths
    }

    pub fn index_of(&self, r: &PathRoot) -> Option<usize> {
        self.index.get(r).copied()
    }

    /// Grid address of coordinate `k`.
    pub fn grid_root(&self, k: usize) -> PathRoot {
        self.grid[k]
    }

    /// Coordinates from greatest to least in the order used by the split.
    pub fn ord1(&self) -> &[usize] {
        &self.ord1
    }

    pub fn fundamental(&self, i: usize) -> Vec<u32> {
        (1..=self.n).map(|k| u32::from(k == i)).collect()
    }

    pub fn polytope(&self, labels: &[u32]) -> Result<PolytopeSpec> {
        if labels.len() != self.n {
            return Err(Error::LabelCount {
                expected: self.n,
                got: labels.len(),
            });
        }
        let (names, odd) = coordinate_names(&self.rs);
        compile_polytope(&self.paths, labels, names, odd, |r| self.index_of(r))
    }

    pub fn points(&self, labels: &[u32]) -> Result<Vec<MultiExponent>> {
        Ok(self.polytope(labels)?.lattice_points())
    }
}

pub fn osp_polytope(n: usize, labels: &[u32]) -> Result<PolytopeSpec> {
    OrthoSymplectic::new(n)?.polytope(labels)
}

/// Path inequalities for each even factor, caps on every odd root, nothing
/// coupling the two.
pub fn type_one_polytope(rs: &RootSystem, lambda: &WeightVector) -> Result<PolytopeSpec> {
    if !rs.algebra().is_type_one() {
        return Err(Error::UnsupportedAlgebra {
            expected: "A(m,n) or C(n)",
            got: rs.algebra().to_string(),
        });
    }
    let labels = labels_of(rs, lambda)?.dominant_ints()?;
    require_typical(rs, lambda)?;
    let (names, odd) = coordinate_names(rs);
    let mut inequalities = Vec::new();
    for ((f, factor), offset) in rs.factors().iter().enumerate().zip(rs.label_offsets()) {
        let rank = factor.simple.len();
        let paths = match factor.kind {
            ClassicalType::A(r) => dyck_paths_a(r),
            ClassicalType::C(r) => dyck_paths_c(r),
            other => {
                return Err(Error::UnsupportedAlgebra {
                    expected: "even factors of type A or C",
                    got: other.to_string(),
                })
            }
        };
        let ineqs = compile_inequalities(&paths, &labels[offset..offset + rank], |r| {
            rs.factor_root(f, &r.coeffs(rank)?)
        })?;
        inequalities.extend(ineqs);
    }
    PolytopeSpec::new(names, odd, inequalities)
}

/// Desk-class polytope of an exceptional algebra. For F(4) and G(3) only the
/// γ-coordinate and the odd roots are explicit; the even factor enters as a
/// multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExceptionalPolytope {
    pub spec: PolytopeSpec,
    pub even_factor_count: u64,
}

impl ExceptionalPolytope {
    pub fn count(&self) -> u64 {
        self.spec.count() * self.even_factor_count
    }
}

pub fn exceptional_polytope(rs: &RootSystem, lambda: &WeightVector) -> Result<ExceptionalPolytope> {
    if !in_desk_class(rs, lambda)? {
        return Err(Error::OutsideDeskClass(format!(
            "{} with labels {}",
            rs.algebra(),
            labels_of(rs, lambda)?
        )));
    }
    let labels = labels_of(rs, lambda)?.dominant_ints()?;
    let gamma = rs.gamma().expect("type II algebras have γ");
    let ne = rs.positive_even().len();
    let odd_count = rs.positive_odd().len();
    match rs.algebra() {
        AlgebraId::D21 { .. } => {
            let (names, odd) = coordinate_names(rs);
            let mut first: Vec<usize> = (ne..ne + odd_count).collect();
            first.push(gamma);
            let mut inequalities = vec![Inequality::new(first, labels[0])?];
            for (f, offset) in rs.label_offsets().into_iter().enumerate().skip(1) {
                inequalities.push(Inequality::new(vec![rs.factors()[f].simple[0]], labels[offset])?);
            }
            Ok(ExceptionalPolytope {
                spec: PolytopeSpec::new(names, odd, inequalities)?,
                even_factor_count: 1,
            })
        }
        _ => {
            let roots = rs.positive_roots();
            let mut names = vec![rs.format_root(&roots[gamma])];
            names.extend(rs.positive_odd().iter().map(|r| rs.format_root(r)));
            let mut odd = vec![false];
            odd.extend(std::iter::repeat_n(true, odd_count));
            let spec = PolytopeSpec::new(names, odd, vec![Inequality::new((0..=odd_count).collect(), labels[0])?])?;
            let mut even_factor_count = 1;
            for (factor, w) in rs.factors().iter().zip(factor_weights(rs, lambda)?).skip(1) {
                even_factor_count *= weyl_dim(factor.kind, &w)?;
            }
            Ok(ExceptionalPolytope {
                spec,
                even_factor_count,
            })
        }
    }
}

/// `|{(a₀, …, a_ℓ) ∈ Z₊ × {0,1}^ℓ : Σ aᵢ ≤ m}|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CombCount {
    pub value: u64,
    /// False when the inputs are outside `ℓ ≥ 1, m ≥ ℓ−1` and the value was
    /// obtained by enumeration instead of the closed form.
    pub closed_form: bool,
}

pub fn comb_count(m: u64, l: u32) -> CombCount {
    if l >= 1 && m + 1 >= l as u64 {
        CombCount {
            value: (1u64 << (l - 1)) * (2 * m + 2 - l as u64),
            closed_form: true,
        }
    } else {
        CombCount {
            value: comb_brute(m, l),
            closed_form: false,
        }
    }
}

/// Enumerates `{0,1}^ℓ` and counts the admissible `a₀` for each choice.
pub fn comb_brute(m: u64, l: u32) -> u64 {
    (0u64..1 << l)
        .map(|mask| {
            let used = mask.count_ones() as u64;
            (0..=m).filter(|a0| a0 + used <= m).count() as u64
        })
        .sum()
}

/// Lattice points of a basis together with the opaque even-factor
/// multiplicity used for F(4) and G(3).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonomialBasis {
    pub algebra: String,
    pub labels: String,
    pub roots: Vec<String>,
    pub points: Vec<MultiExponent>,
    pub even_factor_count: u64,
}

impl MonomialBasis {
    pub fn count(&self) -> u64 {
        self.points.len() as u64 * self.even_factor_count
    }
}

/// The polytope for `λ` in whichever family `rs` belongs to, with the even
/// multiplicity (1 except for F(4), G(3)).
pub fn polytope_for(rs: &RootSystem, lambda: &WeightVector) -> Result<(PolytopeSpec, u64)> {
    match rs.algebra() {
        AlgebraId::B0 { n } => {
            let labels = labels_of(rs, lambda)?.dominant_ints()?;
            Ok((osp_polytope(*n, &labels)?, 1))
        }
        AlgebraId::A { .. } | AlgebraId::C { .. } => Ok((type_one_polytope(rs, lambda)?, 1)),
        _ => {
            let e = exceptional_polytope(rs, lambda)?;
            Ok((e.spec, e.even_factor_count))
        }
    }
}

pub fn monomial_basis(rs: &RootSystem, lambda: &WeightVector) -> Result<MonomialBasis> {
    if !is_typical(rs, lambda) {
        require_typical(rs, lambda)?;
    }
    let (spec, even_factor_count) = polytope_for(rs, lambda)?;
    Ok(MonomialBasis {
        algebra: rs.algebra().to_string(),
        labels: labels_of(rs, lambda)?.to_string(),
        roots: spec.roots().to_vec(),
        points: spec.lattice_points(),
        even_factor_count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::{dim_typical, to_ambient, weight_from_ints, DynkinLabels};

    fn rs(s: &str) -> RootSystem {
        build_root_system(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn osp_grid_and_order() {
        let o = OrthoSymplectic::new(2).unwrap();
        let names: Vec<String> = o
            .ord1()
            .iter()
            .map(|&k| o.root_system().format_root(o.root_system().root_at(k)))
            .collect();
        assert_eq!(names, vec!["2δ2", "δ2", "2δ1", "δ1+δ2", "δ1-δ2", "δ1"]);
        assert_eq!(o.index_of(&PathRoot::C { row: 1, col: Column::Bar(1) }), Some(3));
    }

    #[test]
    fn osp_counts() {
        for m in 0..6 {
            assert_eq!(osp_polytope(1, &[m]).unwrap().count(), 2 * m as u64 + 1);
        }
        let p = osp_polytope(2, &[1, 0]).unwrap();
        assert_eq!(p.count(), 5);
        let names = p.roots();
        let units: Vec<&str> = p
            .lattice_points()
            .iter()
            .filter(|s| !s.is_zero())
            .map(|s| names[s.0.iter().position(|&x| x == 1).unwrap()].as_str())
            .collect();
        let mut units = units;
        units.sort();
        assert_eq!(units, vec!["2δ1", "δ1", "δ1+δ2", "δ1-δ2"]);
        assert_eq!(osp_polytope(2, &[0, 1]).unwrap().count(), 10);
        assert_eq!(osp_polytope(3, &[0, 0, 0]).unwrap().lattice_points().len(), 1);
    }

    #[test]
    fn osp_inequalities_n2() {
        let p = osp_polytope(2, &[3, 4]).unwrap();
        let mut got: Vec<(Vec<&str>, u32)> = p
            .inequalities()
            .iter()
            .map(|q| {
                let mut s: Vec<&str> = q.support.iter().map(|&k| p.roots()[k].as_str()).collect();
                s.sort();
                (s, q.bound)
            })
            .collect();
        got.sort();
        let mut expected = vec![
            (vec!["δ1-δ2"], 3),
            (vec!["2δ2", "δ2"], 4),
            (vec!["2δ1", "δ1", "δ1+δ2", "δ1-δ2"], 7),
            (vec!["2δ2", "δ1", "δ1+δ2", "δ1-δ2"], 7),
        ];
        expected.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn type_one_counts() {
        let r = rs("A(1,0)");
        for k in 0..4 {
            let l = weight_from_ints(&r, &[k]).unwrap();
            assert_eq!(type_one_polytope(&r, &l).unwrap().count(), 4 * (k as u64 + 1));
        }
        let c = rs("C(2)");
        for k in 0..4 {
            let l = weight_from_ints(&c, &[k]).unwrap();
            assert_eq!(type_one_polytope(&c, &l).unwrap().count(), 4 * (k as u64 + 1));
        }
        let a = rs("A(2,0)");
        let l = weight_from_ints(&a, &[1, 1]).unwrap();
        assert_eq!(type_one_polytope(&a, &l).unwrap().count(), 8 * 8);
        assert!(type_one_polytope(&rs("B(0,1)"), &WeightVector::zero(1)).is_err());
    }

    #[test]
    fn type_one_rejects_atypical() {
        let r = rs("A(1,0)");
        let l = to_ambient(&r, &DynkinLabels::from_ints(&[2]).with_charge(Q::zero())).unwrap();
        assert!(matches!(type_one_polytope(&r, &l), Err(Error::NotTypical { .. })));
    }

    #[test]
    fn exceptional_counts() {
        let d = rs("D(2,1;1)");
        let l = weight_from_ints(&d, &[3, 0, 0]).unwrap();
        assert_eq!(exceptional_polytope(&d, &l).unwrap().count(), 32);
        let g = rs("G(3)");
        let e = exceptional_polytope(&g, &weight_from_ints(&g, &[6, 0, 0]).unwrap()).unwrap();
        assert_eq!((e.spec.count(), e.even_factor_count), (448, 1));
        let f = rs("F(4)");
        let e = exceptional_polytope(&f, &weight_from_ints(&f, &[7, 0, 0, 0]).unwrap()).unwrap();
        assert_eq!(e.spec.count(), 1024);
        let l = weight_from_ints(&g, &[5, 0, 0]).unwrap();
        assert!(matches!(exceptional_polytope(&g, &l), Err(Error::OutsideDeskClass(_))));
    }

    #[test]
    fn comb_examples() {
        assert_eq!(comb_count(1, 1), CombCount { value: 3, closed_form: true });
        assert_eq!(comb_count(3, 4).value, 32);
        assert_eq!(comb_count(6, 7).value, 448);
        let below = comb_count(1, 4);
        assert!(!below.closed_form);
        assert_eq!(below.value, comb_brute(1, 4));
    }

    #[test]
    fn monomial_basis_matches_dimension() {
        let b = rs("B(0,2)");
        let l = weight_from_ints(&b, &[1, 1]).unwrap();
        let basis = monomial_basis(&b, &l).unwrap();
        assert_eq!(basis.count(), dim_typical(&b, &l).unwrap());
        assert_eq!(basis.roots.len(), 6);
    }
}
