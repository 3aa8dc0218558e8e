//! Simple Lie algebras of types `A_r`, `B_r`, `C_r` and `G_2` in their standard
//! Euclidean realisations.
//!
//! This module is deliberately independent of the superalgebra root data: the
//! even factors of a superalgebra are embedded by matching Cartan matrices, and
//! [`weyl_dim`] serves as an oracle against the typical dimension formula.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::linalg::{dot, expand, solve_unique};
use crate::{Error, Result, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ClassicalType {
    A(usize),
    B(usize),
    C(usize),
    G2,
}

impl fmt::Display for ClassicalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassicalType::A(r) => write!(f, "A{r}"),
            ClassicalType::B(r) => write!(f, "B{r}"),
            ClassicalType::C(r) => write!(f, "C{r}"),
            ClassicalType::G2 => write!(f, "G2"),
        }
    }
}

fn unit(dim: usize, i: usize, c: i64) -> Vec<Q> {
    let mut v = vec![Q::zero(); dim];
    v[i] = Q::from_integer(c);
    v
}

fn diff(dim: usize, i: usize, j: usize) -> Vec<Q> {
    let mut v = unit(dim, i, 1);
    v[j] = Q::from_integer(-1);
    v
}

/// Weight of a simple factor in the basis of fundamental weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FactorWeight {
    pub coeffs: Vec<u32>,
}

impl FactorWeight {
    pub fn new(coeffs: impl Into<Vec<u32>>) -> Self {
        FactorWeight { coeffs: coeffs.into() }
    }
}

impl ClassicalType {
    pub fn rank(&self) -> usize {
        match *self {
            ClassicalType::A(r) | ClassicalType::B(r) | ClassicalType::C(r) => r,
            ClassicalType::G2 => 2,
        }
    }

    /// Simple roots in Bourbaki order, standard coordinates.
    /// For `G_2` the first simple root is the short one.
    pub fn simple_roots(&self) -> Vec<Vec<Q>> {
        match *self {
            ClassicalType::A(r) => (0..r).map(|i| diff(r + 1, i, i + 1)).collect(),
            ClassicalType::B(r) => {
                let mut s: Vec<_> = (0..r - 1).map(|i| diff(r, i, i + 1)).collect();
                s.push(unit(r, r - 1, 1));
                s
            }
            ClassicalType::C(r) => {
                let mut s: Vec<_> = (0..r - 1).map(|i| diff(r, i, i + 1)).collect();
                s.push(unit(r, r - 1, 2));
                s
            }
            ClassicalType::G2 => {
                let short = diff(3, 0, 1);
                let long = vec![
                    Q::from_integer(-2),
                    Q::from_integer(1),
                    Q::from_integer(1),
                ];
                vec![short, long]
            }
        }
    }

    /// `a_ij = 2 (α_i, α_j) / (α_i, α_i)`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        cartan_from(&self.simple_roots(), dot)
    }

    /// Positive roots as coefficient vectors over the simple roots, sorted by
    /// height and then by coefficients in descending lexicographic order.
    pub fn positive_root_coeffs(&self) -> Vec<Vec<i64>> {
        let simple = self.simple_roots();
        let mut seen: HashSet<Vec<Q>> = simple.iter().cloned().collect();
        let mut queue: VecDeque<Vec<Q>> = simple.iter().cloned().collect();
        while let Some(v) = queue.pop_front() {
            for a in &simple {
                let c = Q::from_integer(2) * dot(&v, a) / dot(a, a);
                let w: Vec<Q> = v.iter().zip(a).map(|(x, y)| x - c * y).collect();
                if seen.insert(w.clone()) {
                    queue.push_back(w);
                }
            }
        }
        let mut positive: Vec<Vec<i64>> = seen
            .iter()
            .filter_map(|v| {
                let c = expand(&simple, v).expect("root lies in the span of simple roots");
                c.iter()
                    .all(|x| !x.is_negative())
                    .then(|| c.iter().map(|x| x.to_integer()).collect())
            })
            .collect();
        positive.sort_by(|a: &Vec<i64>, b: &Vec<i64>| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        positive
    }

    /// Fundamental weights in standard coordinates, inside the span of the
    /// simple roots.
    pub fn fundamental_weights(&self) -> Vec<Vec<Q>> {
        let simple = self.simple_roots();
        let r = simple.len();
        // ϖ_i = Σ_k c_k α_k with 2(ϖ_i, α_j)/(α_j, α_j) = δ_ij
        let rows: Vec<Vec<Q>> = (0..r)
            .map(|j| {
                let nj = dot(&simple[j], &simple[j]);
                (0..r)
                    .map(|k| Q::from_integer(2) * dot(&simple[k], &simple[j]) / nj)
                    .collect()
            })
            .collect();
        (0..r)
            .map(|i| {
                let rhs: Vec<Q> = (0..r)
                    .map(|j| if i == j { Q::one() } else { Q::zero() })
                    .collect();
                let c = solve_unique(&rows, &rhs).expect("Cartan matrix is invertible");
                let dim = simple[0].len();
                let mut w = vec![Q::zero(); dim];
                for (ck, ak) in c.iter().zip(&simple) {
                    for (x, y) in w.iter_mut().zip(ak) {
                        *x += ck * y;
                    }
                }
                w
            })
            .collect()
    }
}

pub(crate) fn cartan_from<F>(simple: &[Vec<Q>], form: F) -> Vec<Vec<i64>>
where
    F: Fn(&[Q], &[Q]) -> Q,
{
    simple
        .iter()
        .map(|a| {
            let na = form(a, a);
            simple
                .iter()
                .map(|b| {
                    let v = Q::from_integer(2) * form(a, b) / na;
                    v.to_integer()
                })
                .collect()
        })
        .collect()
}

/// Weyl dimension formula `∏_{α>0} (λ+ρ, α) / (ρ, α)`.
pub fn weyl_dim(kind: ClassicalType, weight: &FactorWeight) -> Result<u64> {
    let rank = kind.rank();
    if weight.coeffs.len() != rank {
        return Err(Error::LabelCount {
            expected: rank,
            got: weight.coeffs.len(),
        });
    }
    let fundamental = kind.fundamental_weights();
    let dim = fundamental[0].len();
    let mut lambda = vec![Q::zero(); dim];
    let mut rho = vec![Q::zero(); dim];
    for (w, &m) in fundamental.iter().zip(&weight.coeffs) {
        for k in 0..dim {
            lambda[k] += w[k] * Q::from_integer(m as i64);
            rho[k] += w[k];
        }
    }
    let shifted: Vec<Q> = lambda.iter().zip(&rho).map(|(a, b)| a + b).collect();
    let simple = kind.simple_roots();
    let mut product = Q::one();
    for coeffs in kind.positive_root_coeffs() {
        let mut alpha = vec![Q::zero(); dim];
        for (c, s) in coeffs.iter().zip(&simple) {
            for k in 0..dim {
                alpha[k] += s[k] * Q::from_integer(*c);
            }
        }
        product *= dot(&shifted, &alpha) / dot(&rho, &alpha);
    }
    if !product.is_integer() || !product.is_positive() {
        return Err(Error::NonIntegralDimension(product));
    }
    product
        .to_integer()
        .to_u64()
        .ok_or(Error::NonIntegralDimension(product))
}

/// Number of positive roots, from the closed forms.
pub fn positive_root_count(kind: ClassicalType) -> usize {
    match kind {
        ClassicalType::A(r) => r * (r + 1) / 2,
        ClassicalType::B(r) | ClassicalType::C(r) => r * r,
        ClassicalType::G2 => 6,
    }
}
