//! The operators `∂_α` on `S(n⁻₀) ⊗ Λ(n⁻₁)`.
//!
//! A monomial is a [`MultiExponent`] over the canonical positive-root order;
//! coordinate `k` is the exponent of `x_{−β_k}`. Odd generators are written in
//! canonical order to the left of the even ones, and reordering them costs a
//! sign per transposition. Coefficients depend on this convention; supports
//! do not.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;

use crate::polytopes::MultiExponent;
use crate::{Error, Result, RootSystem, WeightVector, Q};

pub type SuperMonomial = MultiExponent;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuperPolynomial {
    terms: BTreeMap<SuperMonomial, Q>,
}

impl SuperPolynomial {
    pub fn zero() -> Self {
        SuperPolynomial::default()
    }

    pub fn monomial(m: SuperMonomial) -> Self {
        let mut p = SuperPolynomial::zero();
        p.add_term(m, Q::from_integer(1));
        p
    }

    /// `x_{−β_k}^power`.
    pub fn power(dim: usize, k: usize, power: u32) -> Self {
        let mut m = MultiExponent::zero(dim);
        m.0[k] = power;
        SuperPolynomial::monomial(m)
    }

    pub fn add_term(&mut self, m: SuperMonomial, c: Q) {
        match self.terms.entry(m) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<SuperMonomial, Q> {
        &self.terms
    }

    pub fn support(&self) -> BTreeSet<SuperMonomial> {
        self.terms.keys().cloned().collect()
    }
}

/// Number of generators of `m` strictly between positions `lo` and `hi`.
fn present_between(m: &SuperMonomial, lo: usize, hi: usize) -> usize {
    m.0[lo + 1..hi].iter().filter(|&&x| x != 0).count()
}

fn sign(k: usize) -> Q {
    Q::from_integer(if k.is_multiple_of(2) { 1 } else { -1 })
}

/// `∂_α` applied to one monomial: the super-derivation extending
/// `∂_α x_{−β} = x_{−(β−α)}` when `β − α ∈ R⁺`.
fn apply_to_monomial(rs: &RootSystem, alpha: usize, m: &SuperMonomial, out: &mut SuperPolynomial, c: Q) {
    let ne = rs.positive_even().len();
    let alpha_odd = alpha >= ne;
    let a = rs.root_at(alpha).coords().to_vec();
    let mut odd_seen = 0usize;
    for (beta, &e) in m.0.iter().enumerate() {
        if e == 0 {
            continue;
        }
        let beta_odd = beta >= ne;
        let diff: Vec<Q> = rs.root_at(beta).coords().iter().zip(&a).map(|(x, y)| x - y).collect();
        if let Some(gamma) = rs.position(&diff) {
            let gamma_odd = gamma >= ne;
            let mut next = m.clone();
            next.0[beta] -= 1;
            let mut coeff = c * Q::from_integer(e as i64);
            let mut ok = true;
            if beta_odd {
                // ∂_α passes the odd generators to the left of x_{−β}
                if alpha_odd {
                    coeff *= sign(odd_seen);
                }
                if gamma_odd {
                    if next.0[gamma] != 0 {
                        ok = false;
                    } else {
                        let (lo, hi) = (beta.min(gamma), beta.max(gamma));
                        coeff *= sign(present_between(&next, lo, hi));
                    }
                }
            } else if gamma_odd {
                if next.0[gamma] != 0 {
                    ok = false;
                } else {
                    // enters right of all odd generators, then moves left
                    if alpha_odd {
                        coeff *= sign(m.0[ne..].iter().filter(|&&x| x != 0).count());
                    }
                    coeff *= sign(next.0[gamma + 1..].iter().filter(|&&x| x != 0).count());
                }
            }
            if ok {
                next.0[gamma] += 1;
                out.add_term(next, coeff);
            }
        }
        if beta_odd {
            odd_seen += 1;
        }
    }
}

pub fn apply_op(rs: &RootSystem, alpha: usize, p: &SuperPolynomial) -> Result<SuperPolynomial> {
    if alpha >= rs.positive_count() {
        return Err(Error::Invariant(format!("operator index {alpha} is not a positive root")));
    }
    let mut out = SuperPolynomial::zero();
    for (m, c) in p.terms() {
        if m.dim() != rs.positive_count() {
            return Err(Error::DimensionMismatch {
                expected: rs.positive_count(),
                got: m.dim(),
            });
        }
        apply_to_monomial(rs, alpha, m, &mut out, *c);
    }
    Ok(out)
}

/// `−Σ s_β β`.
pub fn weight_of(rs: &RootSystem, m: &SuperMonomial) -> WeightVector {
    let mut w = WeightVector::zero(rs.dim());
    for (k, &e) in m.0.iter().enumerate() {
        if e != 0 {
            w = w.minus(&rs.root_at(k).as_weight().scaled(Q::from_integer(e as i64)));
        }
    }
    w
}

/// Applies `ops` to `x_{−τ}^N`, last operator first, and returns the result.
pub fn straighten(rs: &RootSystem, tau: usize, power: u32, ops: &[usize]) -> Result<SuperPolynomial> {
    let mut p = SuperPolynomial::power(rs.positive_count(), tau, power);
    for &op in ops.iter().rev() {
        p = apply_op(rs, op, &p)?;
    }
    Ok(p)
}

pub fn straightening_support(rs: &RootSystem, tau: usize, power: u32, ops: &[usize]) -> Result<BTreeSet<SuperMonomial>> {
    Ok(straighten(rs, tau, power, ops)?.support())
}

/// `c · x_{−β}^e ⋯` with root names.
pub fn format_term(rs: &RootSystem, m: &SuperMonomial) -> String {
    let parts: Vec<String> = m
        .0
        .iter()
        .enumerate()
        .filter(|(_, &e)| e != 0)
        .map(|(k, &e)| {
            let name = rs.format_root(rs.root_at(k));
            if e == 1 {
                format!("x[-({name})]")
            } else {
                format!("x[-({name})]^{e}")
            }
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

impl fmt::Display for SuperPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms.iter().map(|(m, c)| format!("{c}·{m}")).collect();
        write!(f, "{}", if parts.is_empty() { "0".into() } else { parts.join(" + ") })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::build_root_system;
    use num_traits::Signed;

    fn rs(s: &str) -> RootSystem {
        build_root_system(&s.parse().unwrap()).unwrap()
    }

    fn idx(r: &RootSystem, name: &str) -> usize {
        r.parse_positive_root(name).unwrap()
    }

    #[test]
    fn single_generator_rule() {
        let b = rs("B(0,2)");
        let p = SuperPolynomial::power(6, idx(&b, "2δ1"), 1);
        let q = apply_op(&b, idx(&b, "δ1-δ2"), &p).unwrap();
        assert_eq!(q, SuperPolynomial::power(6, idx(&b, "δ1+δ2"), 1));
        let p = SuperPolynomial::power(6, idx(&b, "2δ2"), 1);
        assert!(apply_op(&b, idx(&b, "δ1"), &p).unwrap().is_zero());
    }

    #[test]
    fn leibniz_on_powers() {
        let b = rs("B(0,2)");
        let (long, short) = (idx(&b, "2δ1"), idx(&b, "δ1"));
        for m in 1..6u32 {
            let q = apply_op(&b, short, &SuperPolynomial::power(6, long, m)).unwrap();
            let mut expected = MultiExponent::zero(6);
            expected.0[long] = m - 1;
            expected.0[short] = 1;
            assert_eq!(q.terms().len(), 1);
            let (mono, c) = q.terms().iter().next().unwrap();
            assert_eq!(mono, &expected);
            assert_eq!(c.abs(), Q::from_integer(m as i64));
        }
    }

    #[test]
    fn weights() {
        let b = rs("B(0,2)");
        let w = weight_of(&b, &SuperPolynomial::power(6, idx(&b, "δ1"), 1).support().pop_first().unwrap());
        assert_eq!(w.0, vec![Q::from_integer(-1), Q::zero()]);
        let mut m = MultiExponent::zero(6);
        m.0[idx(&b, "2δ1")] = 1;
        m.0[idx(&b, "δ2")] = 1;
        assert_eq!(weight_of(&b, &m).0, vec![Q::from_integer(-2), Q::from_integer(-1)]);
    }

    #[test]
    fn b01_straightening() {
        let b = rs("B(0,1)");
        for k in 0..5 {
            let support = straightening_support(&b, 0, k + 1, &[1]).unwrap();
            assert_eq!(support.into_iter().collect::<Vec<_>>(), vec![MultiExponent(vec![k, 1])]);
        }
        assert_eq!(
            straightening_support(&b, 0, 3, &[]).unwrap().into_iter().collect::<Vec<_>>(),
            vec![MultiExponent(vec![3, 0])]
        );
    }

    #[test]
    fn odd_squares_vanish() {
        let b = rs("B(0,1)");
        // ∂_δ x_{−δ}x_{−2δ} only reaches x_{−δ}², which is zero
        let p = SuperPolynomial::monomial(MultiExponent(vec![1, 1]));
        assert!(apply_op(&b, 1, &p).unwrap().is_zero());
    }

    #[test]
    fn weight_additivity_over_all_pairs() {
        for s in ["B(0,2)", "A(1,0)", "C(3)", "D(2,1;2)", "G(3)", "F(4)"] {
            let r = rs(s);
            let dim = r.positive_count();
            for a in 0..dim {
                for b in 0..dim {
                    let m = SuperPolynomial::power(dim, b, 1);
                    let src = weight_of(&r, &MultiExponent::unit(dim, b));
                    for t in apply_op(&r, a, &m).unwrap().terms().keys() {
                        assert_eq!(weight_of(&r, t), src.plus(&r.root_at(a).as_weight()), "{s}");
                    }
                }
            }
        }
    }
}
