//! Dynkin labels, typicality and the typical dimension formula.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::classical::{weyl_dim, FactorWeight};
use crate::linalg::{null_space, scale, solve_unique};
use crate::rootdata::{parse_rational, AlgebraId};
use crate::{Error, Result, RootSystem, WeightVector, Q};

/// Labels `λ(h_β)` on the simple roots of the even part, in the order of
/// [`RootSystem::label_roots`]. For type I algebras `charge` is the free value
/// `(λ, α_s)` on the isotropic odd simple root.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DynkinLabels {
    pub even: Vec<Q>,
    pub charge: Option<Q>,
}

impl DynkinLabels {
    pub fn new(even: Vec<Q>) -> Self {
        DynkinLabels { even, charge: None }
    }

    pub fn from_ints(even: &[u32]) -> Self {
        DynkinLabels::new(even.iter().map(|&m| Q::from_integer(m as i64)).collect())
    }

    pub fn with_charge(mut self, charge: Q) -> Self {
        self.charge = Some(charge);
        self
    }

    /// The even labels as non-negative integers, if they are.
    pub fn dominant_ints(&self) -> Result<Vec<u32>> {
        self.even
            .iter()
            .enumerate()
            .map(|(index, v)| {
                if v.is_integer() && !v.is_negative() {
                    v.to_integer()
                        .to_u32()
                        .ok_or(Error::NotDominant { index, value: *v })
                } else {
                    Err(Error::NotDominant { index, value: *v })
                }
            })
            .collect()
    }
}

impl fmt::Display for DynkinLabels {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.even.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(","))?;
        if let Some(c) = self.charge {
            if !parts.is_empty() {
                write!(f, ",")?;
            }
            write!(f, "charge={c}")?;
        }
        Ok(())
    }
}

impl FromStr for DynkinLabels {
    type Err = Error;

    /// `"m1,m2,...[,charge=p/q]"`; the empty string is the zero weight of a
    /// rank-zero even part.
    fn from_str(s: &str) -> Result<Self> {
        let mut even = Vec::new();
        let mut charge = None;
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if let Some(c) = part.strip_prefix("charge=") {
                charge = Some(parse_rational(c)?);
            } else {
                even.push(parse_rational(part)?);
            }
        }
        Ok(DynkinLabels { even, charge })
    }
}

/// Solves `λ(h_β) = label` for the even simple roots (and `(λ, α_s) = charge`
/// for type I). Directions orthogonal to all constraints are fixed by
/// requiring `λ` to have zero Euclidean component along them.
pub fn to_ambient(rs: &RootSystem, labels: &DynkinLabels) -> Result<WeightVector> {
    let expected = rs.label_count();
    if labels.even.len() != expected {
        return Err(Error::LabelCount {
            expected,
            got: labels.even.len(),
        });
    }
    let type_one = rs.algebra().is_type_one();
    if labels.charge.is_some() && !type_one {
        return Err(Error::UnsupportedAlgebra {
            expected: "a type I algebra for a charge",
            got: rs.algebra().to_string(),
        });
    }
    let gram_row = |v: &[Q]| -> Vec<Q> {
        (0..rs.dim())
            .map(|k| rs.gram().iter().map(|row| row[k]).zip(v).map(|(g, x)| g * x).sum())
            .collect()
    };
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for (beta, value) in rs.label_roots().iter().zip(&labels.even) {
        let norm = rs.form(beta.coords(), beta.coords());
        rows.push(scale(&gram_row(beta.coords()), Q::from_integer(2) / norm));
        rhs.push(*value);
    }
    if type_one {
        rows.push(gram_row(rs.simple()[rs.odd_node()].coords()));
        rhs.push(labels.charge.unwrap_or_else(Q::zero));
    }
    for k in null_space(&rows, rs.dim()) {
        rows.push(k);
        rhs.push(Q::zero());
    }
    let x = solve_unique(&rows, &rhs)
        .ok_or_else(|| Error::Invariant(format!("{}: label system is singular", rs.algebra())))?;
    Ok(WeightVector(x))
}

/// Inverse of [`to_ambient`].
pub fn labels_of(rs: &RootSystem, lambda: &WeightVector) -> Result<DynkinLabels> {
    let even = rs
        .label_roots()
        .iter()
        .map(|beta| rs.coroot_value(lambda, beta))
        .collect::<Result<Vec<_>>>()?;
    let charge = if rs.algebra().is_type_one() {
        Some(rs.form(lambda.coords(), rs.simple()[rs.odd_node()].coords()))
    } else {
        None
    };
    Ok(DynkinLabels { even, charge })
}

/// Indices (into `positive_odd`) of the odd roots with `(λ+ρ, β) = 0`.
pub fn vanishing_odd_roots(rs: &RootSystem, lambda: &WeightVector) -> Vec<usize> {
    let shifted = lambda.plus(rs.rho());
    rs.positive_odd()
        .iter()
        .enumerate()
        .filter(|(_, b)| rs.form(shifted.coords(), b.coords()).is_zero())
        .map(|(i, _)| i)
        .collect()
}

pub fn is_typical(rs: &RootSystem, lambda: &WeightVector) -> bool {
    vanishing_odd_roots(rs, lambda).is_empty()
}

/// Typical with `m₁ ≥ |R₁⁺| − 1`, where `m₁` is the label on γ.
pub fn in_desk_class(rs: &RootSystem, lambda: &WeightVector) -> Result<bool> {
    if !rs.algebra().is_exceptional() {
        return Err(Error::UnsupportedAlgebra {
            expected: "D(2,1;α), F(4) or G(3)",
            got: rs.algebra().to_string(),
        });
    }
    let labels = labels_of(rs, lambda)?;
    let m1 = labels.even[0];
    let bound = Q::from_integer(rs.positive_odd().len() as i64 - 1);
    Ok(is_typical(rs, lambda) && m1 >= bound)
}

/// `2^{|R₁⁺|} ∏_{α ∈ R₀⁺} (λ+ρ, α)/(ρ₀, α)` as an exact rational, for
/// dominant integral `λ`; typicality is not checked.
pub fn dimension_formula(rs: &RootSystem, lambda: &WeightVector) -> Result<Q> {
    labels_of(rs, lambda)?.dominant_ints()?;
    let shifted = lambda.plus(rs.rho());
    let mut product = Q::from_integer(1i64 << rs.positive_odd().len());
    for alpha in rs.positive_even() {
        product *= rs.form(shifted.coords(), alpha.coords()) / rs.form(rs.rho0().coords(), alpha.coords());
    }
    Ok(product)
}

fn as_dimension(q: Q) -> Result<u64> {
    if q.is_integer() && q.is_positive() {
        q.to_integer().to_u64().ok_or(Error::NonIntegralDimension(q))
    } else {
        Err(Error::NonIntegralDimension(q))
    }
}

/// Dimension of the typical module `V(λ)`.
pub fn dim_typical(rs: &RootSystem, lambda: &WeightVector) -> Result<u64> {
    labels_of(rs, lambda)?.dominant_ints()?;
    let vanishing = vanishing_odd_roots(rs, lambda);
    if !vanishing.is_empty() {
        return Err(Error::NotTypical {
            vanishing: vanishing
                .iter()
                .map(|&i| rs.format_root(&rs.positive_odd()[i]))
                .collect(),
        });
    }
    as_dimension(dimension_formula(rs, lambda)?)
}

/// `λ = λ₁ + ⋯ + λ_p` split over the even factors.
pub fn factor_weights(rs: &RootSystem, lambda: &WeightVector) -> Result<Vec<FactorWeight>> {
    let labels = labels_of(rs, lambda)?.dominant_ints()?;
    let offsets = rs.label_offsets();
    Ok(rs
        .factors()
        .iter()
        .zip(offsets)
        .map(|(f, o)| FactorWeight::new(&labels[o..o + f.simple.len()]))
        .collect())
}

/// The weight supported on the first factor only.
pub fn first_factor_part(rs: &RootSystem, lambda: &WeightVector) -> Result<WeightVector> {
    let labels = labels_of(rs, lambda)?;
    let k = rs.factors()[0].simple.len();
    let even = labels
        .even
        .iter()
        .enumerate()
        .map(|(i, v)| if i < k { *v } else { Q::zero() })
        .collect();
    to_ambient(rs, &DynkinLabels { even, charge: labels.charge })
}

/// `dim V(λ) = dim V(λ₁) · ∏_{i≥2} dim V_{g(i)}(λ_i)` for type II algebras.
pub fn factorization_check(rs: &RootSystem, lambda: &WeightVector) -> Result<bool> {
    if rs.algebra().is_type_one() {
        return Err(Error::UnsupportedAlgebra {
            expected: "a type II algebra",
            got: rs.algebra().to_string(),
        });
    }
    let total = Q::from_integer(dim_typical(rs, lambda)? as i64);
    let first = dimension_formula(rs, &first_factor_part(rs, lambda)?)?;
    let mut rest = Q::one();
    for (f, w) in rs.factors().iter().zip(factor_weights(rs, lambda)?).skip(1) {
        rest *= Q::from_integer(weyl_dim(f.kind, &w)? as i64);
    }
    Ok(total == first * rest)
}

/// `2^d · ∏ weyl_dim` over all even factors, the count predicted by lifting a
/// basis of the even part.
pub fn lifted_even_count(rs: &RootSystem, lambda: &WeightVector) -> Result<u64> {
    let mut count = 1u64 << rs.positive_odd().len();
    for (f, w) in rs.factors().iter().zip(factor_weights(rs, lambda)?) {
        count *= weyl_dim(f.kind, &w)?;
    }
    Ok(count)
}

/// First charge from a fixed candidate list that makes the type I weight with
/// these even labels typical.
pub fn typical_charge(rs: &RootSystem, even: &[u32]) -> Result<Option<Q>> {
    const CANDIDATES: [(i64, i64); 8] = [(1, 2), (1, 3), (2, 3), (1, 5), (1, 7), (1, 1), (2, 1), (3, 1)];
    if !rs.algebra().is_type_one() {
        return Ok(None);
    }
    for (p, q) in CANDIDATES {
        let c = Q::new(p, q);
        let lambda = to_ambient(rs, &DynkinLabels::from_ints(even).with_charge(c))?;
        if is_typical(rs, &lambda) {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

/// Builds `λ` from integer labels, picking a typical charge for type I.
pub fn weight_from_ints(rs: &RootSystem, even: &[u32]) -> Result<WeightVector> {
    let mut labels = DynkinLabels::from_ints(even);
    if let Some(c) = typical_charge(rs, even)? {
        labels = labels.with_charge(c);
    }
    to_ambient(rs, &labels)
}

/// `|R₁⁺| − 1`, the smallest γ-label of the desk class.
pub fn desk_bound(alg: &AlgebraId) -> usize {
    alg.odd_root_count() - 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::build_root_system;

    fn rs(s: &str) -> RootSystem {
        build_root_system(&s.parse().unwrap()).unwrap()
    }

    fn q(n: i64) -> Q {
        Q::from_integer(n)
    }

    fn weight(r: &RootSystem, labels: &[u32]) -> WeightVector {
        to_ambient(r, &DynkinLabels::from_ints(labels)).unwrap()
    }

    #[test]
    fn to_ambient_b02() {
        let r = rs("B(0,2)");
        assert_eq!(weight(&r, &[1, 0]).0, vec![q(1), q(0)]);
        assert_eq!(weight(&r, &[0, 1]).0, vec![q(1), q(1)]);
        assert_eq!(weight(&r, &[0, 0]).0, vec![q(0), q(0)]);
    }

    #[test]
    fn to_ambient_zero_everywhere() {
        for s in ["A(2,1)", "C(3)", "B(0,3)", "D(2,1;2)", "F(4)", "G(3)"] {
            let r = rs(s);
            let z = weight(&r, &vec![0; r.label_count()]);
            assert_eq!(z, WeightVector::zero(r.dim()), "{s}");
        }
    }

    #[test]
    fn labels_round_trip() {
        let r = rs("A(2,1)");
        let labels = DynkinLabels::from_ints(&[2, 1, 3]).with_charge(Q::new(5, 7));
        let lambda = to_ambient(&r, &labels).unwrap();
        assert_eq!(labels_of(&r, &lambda).unwrap(), labels);
        for s in ["C(3)", "B(0,3)", "D(2,1;1/2)", "F(4)", "G(3)"] {
            let r = rs(s);
            let raw: Vec<u32> = (0..r.label_count() as u32).map(|i| i % 3 + 1).collect();
            let mut labels = DynkinLabels::from_ints(&raw);
            if r.algebra().is_type_one() {
                labels = labels.with_charge(Q::new(-3, 2));
            }
            let lambda = to_ambient(&r, &labels).unwrap();
            assert_eq!(labels_of(&r, &lambda).unwrap(), labels, "{s}");
        }
    }

    #[test]
    fn wrong_label_count_is_rejected() {
        let r = rs("B(0,2)");
        assert!(matches!(
            to_ambient(&r, &DynkinLabels::from_ints(&[1])),
            Err(Error::LabelCount { .. })
        ));
        assert!(to_ambient(&r, &DynkinLabels::from_ints(&[1, 0]).with_charge(q(1))).is_err());
    }

    #[test]
    fn parses_label_strings() {
        let l: DynkinLabels = "1,2,charge=1/3".parse().unwrap();
        assert_eq!(l, DynkinLabels::from_ints(&[1, 2]).with_charge(Q::new(1, 3)));
        assert_eq!(l.to_string(), "1,2,charge=1/3");
        assert!("1,x".parse::<DynkinLabels>().is_err());
    }

    #[test]
    fn typicality() {
        let b = rs("B(0,3)");
        for labels in [[0, 0, 0], [1, 0, 2], [0, 3, 0]] {
            assert!(is_typical(&b, &weight(&b, &labels)));
        }
        let d = rs("D(2,1;1)");
        assert!(!is_typical(&d, &weight(&d, &[0, 0, 0])));
        assert!(is_typical(&d, &weight(&d, &[3, 0, 0])));
    }

    #[test]
    fn desk_class() {
        let d = rs("D(2,1;1)");
        assert!(in_desk_class(&d, &weight(&d, &[3, 0, 0])).unwrap());
        assert!(!in_desk_class(&d, &weight(&d, &[2, 0, 0])).unwrap());
        let g = rs("G(3)");
        assert!(!in_desk_class(&g, &weight(&g, &[5, 0, 0])).unwrap());
        assert!(in_desk_class(&g, &weight(&g, &[6, 0, 0])).unwrap());
        let f = rs("F(4)");
        assert!(in_desk_class(&f, &weight(&f, &[7, 0, 0, 0])).unwrap());
        assert!(in_desk_class(&rs("B(0,2)"), &WeightVector::zero(2)).is_err());
    }

    #[test]
    fn dimensions() {
        let b1 = rs("B(0,1)");
        for m in 0..8 {
            assert_eq!(dim_typical(&b1, &weight(&b1, &[m])).unwrap(), 2 * m as u64 + 1);
        }
        let b2 = rs("B(0,2)");
        assert_eq!(dim_typical(&b2, &weight(&b2, &[0, 1])).unwrap(), 10);
        assert_eq!(dim_typical(&b2, &weight(&b2, &[1, 0])).unwrap(), 5);
        let d = rs("D(2,1;2)");
        assert_eq!(dim_typical(&d, &weight(&d, &[3, 1, 2])).unwrap(), 192);
    }

    #[test]
    fn dim_rejects_atypical_and_non_dominant() {
        let d = rs("D(2,1;1)");
        assert!(matches!(
            dim_typical(&d, &weight(&d, &[0, 0, 0])),
            Err(Error::NotTypical { .. })
        ));
        let b = rs("B(0,2)");
        let half = to_ambient(&b, &DynkinLabels::new(vec![Q::new(1, 2), q(0)])).unwrap();
        assert!(matches!(dim_typical(&b, &half), Err(Error::NotDominant { .. })));
    }

    #[test]
    fn dimension_is_invariant_under_rescaling() {
        for s in ["B(0,3)", "D(2,1;1/2)", "F(4)", "G(3)", "A(2,1)", "C(3)"] {
            let r = rs(s);
            let mut raw = vec![1; r.label_count()];
            raw[0] = 7;
            let base = dim_typical(&r, &weight_from_ints(&r, &raw).unwrap()).unwrap();
            for c in [q(2), Q::new(1, 3)] {
                let scaled = r.rescaled(c).unwrap();
                let lambda = weight_from_ints(&scaled, &raw).unwrap();
                assert_eq!(dim_typical(&scaled, &lambda).unwrap(), base, "{s} × {c}");
            }
        }
    }

    #[test]
    fn type_one_dimension_ignores_charge() {
        let r = rs("A(2,1)");
        let labels = [1, 2, 0];
        let a = to_ambient(&r, &DynkinLabels::from_ints(&labels).with_charge(Q::new(1, 2))).unwrap();
        let b = to_ambient(&r, &DynkinLabels::from_ints(&labels).with_charge(Q::new(7, 3))).unwrap();
        assert!(is_typical(&r, &a) && is_typical(&r, &b));
        assert_eq!(dim_typical(&r, &a).unwrap(), dim_typical(&r, &b).unwrap());
    }

    #[test]
    fn sl21_typicality_depends_on_charge() {
        let r = rs("A(1,0)");
        let at = |k: u32, c: Q| to_ambient(&r, &DynkinLabels::from_ints(&[k]).with_charge(c)).unwrap();
        assert!(!is_typical(&r, &at(2, q(0))));
        assert!(!is_typical(&r, &at(2, q(-3))));
        assert!(is_typical(&r, &at(2, q(1))));
        assert_eq!(dim_typical(&r, &at(2, q(1))).unwrap(), 12);
    }

    #[test]
    fn factorization() {
        let d = rs("D(2,1;1)");
        assert!(factorization_check(&d, &weight(&d, &[3, 1, 2])).unwrap());
        let g = rs("G(3)");
        let l = weight(&g, &[6, 0, 0]);
        assert_eq!(dim_typical(&g, &l).unwrap(), 64 * 7);
        assert!(factorization_check(&g, &l).unwrap());
        let f = rs("F(4)");
        let l = weight(&f, &[7, 0, 0, 0]);
        assert_eq!(dim_typical(&f, &l).unwrap(), 1024);
        assert!(factorization_check(&f, &l).unwrap());
        assert!(factorization_check(&rs("A(1,0)"), &WeightVector::zero(3)).is_err());
    }

    #[test]
    fn weyl_dim_examples() {
        assert_eq!(weyl_dim(crate::classical::ClassicalType::A(1), &FactorWeight::new([4])).unwrap(), 5);
        assert_eq!(
            weyl_dim(crate::classical::ClassicalType::B(3), &FactorWeight::new([0, 0, 0])).unwrap(),
            1
        );
        assert_eq!(weyl_dim(crate::classical::ClassicalType::G2, &FactorWeight::new([1, 0])).unwrap(), 7);
    }
}
