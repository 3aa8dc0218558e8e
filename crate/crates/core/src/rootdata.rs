//! Root data of the supported basic classical Lie superalgebras, with respect to
//! a distinguished simple system.

use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::classical::{cartan_from, ClassicalType};
use crate::linalg::{bilinear, expand};
use crate::{Error, Result};

pub type Q = Rational64;

fn qi(n: i64) -> Q {
    Q::from_integer(n)
}

fn qr(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

/// One of the supported superalgebras.
///
/// `A { m, n }` is `sl(m+1 | n+1)` with `m > n`, `C { n }` is `osp(2 | 2n-2)`,
/// `B0 { n }` is `osp(1 | 2n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraId {
    A { m: usize, n: usize },
    C { n: usize },
    B0 { n: usize },
    D21 { alpha: Q },
    F4,
    G3,
}

impl AlgebraId {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidAlgebra(msg));
        match self {
            AlgebraId::A { m, n } if m <= n => bad(format!("A({m},{n}) requires m > n")),
            AlgebraId::C { n } if *n < 2 => bad(format!("C({n}) requires n >= 2")),
            AlgebraId::B0 { n } if *n < 1 => bad("B(0,n) requires n >= 1".into()),
            AlgebraId::D21 { alpha } if alpha.is_zero() || *alpha == -Q::one() => {
                bad(format!("D(2,1;α) requires α ∉ {{0, -1}}, got {alpha}"))
            }
            _ => Ok(()),
        }
    }

    pub fn is_type_one(&self) -> bool {
        matches!(self, AlgebraId::A { .. } | AlgebraId::C { .. })
    }

    pub fn is_exceptional(&self) -> bool {
        matches!(self, AlgebraId::D21 { .. } | AlgebraId::F4 | AlgebraId::G3)
    }

    /// Expected number of positive odd roots.
    pub fn odd_root_count(&self) -> usize {
        match *self {
            AlgebraId::A { m, n } => (m + 1) * (n + 1),
            AlgebraId::C { n } => 2 * (n - 1),
            AlgebraId::B0 { n } => n,
            AlgebraId::D21 { .. } => 4,
            AlgebraId::F4 => 8,
            AlgebraId::G3 => 7,
        }
    }
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraId::A { m, n } => write!(f, "A({m},{n})"),
            AlgebraId::C { n } => write!(f, "C({n})"),
            AlgebraId::B0 { n } => write!(f, "B(0,{n})"),
            AlgebraId::D21 { alpha } => write!(f, "D(2,1;{alpha})"),
            AlgebraId::F4 => write!(f, "F(4)"),
            AlgebraId::G3 => write!(f, "G(3)"),
        }
    }
}

impl FromStr for AlgebraId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let err = |reason: &str| Error::Parse {
            what: "algebra",
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let (head, rest) = compact
            .split_once('(')
            .ok_or_else(|| err("expected NAME(ARGS)"))?;
        let args = rest.strip_suffix(')').ok_or_else(|| err("missing ')'"))?;
        let num = |t: &str| -> Result<usize> { t.parse().map_err(|_| err("bad integer argument")) };
        let id = match head {
            "A" => {
                let (m, n) = args.split_once(',').ok_or_else(|| err("expected A(m,n)"))?;
                AlgebraId::A {
                    m: num(m)?,
                    n: num(n)?,
                }
            }
            "C" => AlgebraId::C { n: num(args)? },
            "B" => {
                let (m, n) = args.split_once(',').ok_or_else(|| err("expected B(0,n)"))?;
                if m != "0" {
                    return Err(err("only B(0,n) is supported"));
                }
                AlgebraId::B0 { n: num(n)? }
            }
            "D" => {
                let alpha = args
                    .strip_prefix("2,1;")
                    .ok_or_else(|| err("expected D(2,1;p/q)"))?;
                AlgebraId::D21 {
                    alpha: parse_rational(alpha)?,
                }
            }
            "F" if args == "4" => AlgebraId::F4,
            "G" if args == "3" => AlgebraId::G3,
            _ => return Err(err("unknown family")),
        };
        id.validate()?;
        Ok(id)
    }
}

pub fn parse_rational(s: &str) -> Result<Q> {
    let err = || Error::Parse {
        what: "rational",
        input: s.to_string(),
        reason: "expected p or p/q".into(),
    };
    let t = s.trim();
    match t.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().map_err(|_| err())?;
            let q: i64 = q.trim().parse().map_err(|_| err())?;
            if q == 0 {
                return Err(err());
            }
            Ok(Q::new(p, q))
        }
        None => Ok(qi(t.parse().map_err(|_| err())?)),
    }
}

/// Ambient basis vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum BasisSymbol {
    Epsilon(usize),
    Delta(usize),
    DeltaPlain,
    EpsilonPlain,
}

impl fmt::Display for BasisSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisSymbol::Epsilon(i) => write!(f, "ε{i}"),
            BasisSymbol::Delta(i) => write!(f, "δ{i}"),
            BasisSymbol::DeltaPlain => write!(f, "δ"),
            BasisSymbol::EpsilonPlain => write!(f, "ε"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    coords: Vec<Q>,
    parity: Parity,
    positive: bool,
}

impl Root {
    fn positive(coords: Vec<Q>, parity: Parity) -> Self {
        Root {
            coords,
            parity,
            positive: true,
        }
    }

    pub fn coords(&self) -> &[Q] {
        &self.coords
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn is_odd(&self) -> bool {
        self.parity == Parity::Odd
    }

    pub fn is_positive(&self) -> bool {
        self.positive
    }

    pub fn negated(&self) -> Root {
        Root {
            coords: self.coords.iter().map(|x| -x).collect(),
            parity: self.parity,
            positive: !self.positive,
        }
    }

    pub fn as_weight(&self) -> WeightVector {
        WeightVector(self.coords.clone())
    }
}

/// Rational vector in ambient coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector(pub Vec<Q>);

impl Serialize for WeightVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(|x| x.to_string()))
    }
}

impl WeightVector {
    pub fn zero(dim: usize) -> Self {
        WeightVector(vec![Q::zero(); dim])
    }

    pub fn coords(&self) -> &[Q] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn plus(&self, other: &WeightVector) -> WeightVector {
        WeightVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn minus(&self, other: &WeightVector) -> WeightVector {
        WeightVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scaled(&self, c: Q) -> WeightVector {
        WeightVector(self.0.iter().map(|a| a * c).collect())
    }
}

/// A simple ideal of the even part, with its roots as indices into
/// [`RootSystem::positive_even`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenFactor {
    pub kind: ClassicalType,
    /// Simple roots of the factor in Bourbaki order.
    pub simple: Vec<usize>,
    /// All positive roots of the factor.
    pub roots: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    algebra: AlgebraId,
    basis: Vec<BasisSymbol>,
    gram: Vec<Vec<Q>>,
    positive_even: Vec<Root>,
    positive_odd: Vec<Root>,
    simple: Vec<Root>,
    odd_node: usize,
    rho0: WeightVector,
    rho1: WeightVector,
    rho: WeightVector,
    factors: Vec<EvenFactor>,
    gamma: Option<usize>,
}

struct Blueprint {
    basis: Vec<BasisSymbol>,
    gram: Vec<Vec<Q>>,
    simple: Vec<Vec<Q>>,
    odd_node: usize,
    /// (type, simple roots in Bourbaki order); for type II the first factor
    /// contains γ, given as an index into its simple roots.
    factors: Vec<(ClassicalType, Vec<Vec<Q>>)>,
    gamma: Option<usize>,
    odd: Vec<Vec<Q>>,
}

fn diagonal(d: &[Q]) -> Vec<Vec<Q>> {
    (0..d.len())
        .map(|i| {
            (0..d.len())
                .map(|j| if i == j { d[i] } else { Q::zero() })
                .collect()
        })
        .collect()
}

/// Builds a vector from `(index, coefficient)` pairs.
fn vec_of(dim: usize, terms: &[(usize, Q)]) -> Vec<Q> {
    let mut v = vec![Q::zero(); dim];
    for &(i, c) in terms {
        v[i] += c;
    }
    v
}

fn blueprint(alg: &AlgebraId) -> Blueprint {
    let one = Q::one();
    match *alg {
        AlgebraId::A { m, n } => {
            let dim = m + n + 2;
            let e = |i: usize| i - 1;
            let d = |j: usize| m + j;
            let mut basis: Vec<_> = (1..=m + 1).map(BasisSymbol::Epsilon).collect();
            basis.extend((1..=n + 1).map(BasisSymbol::Delta));
            let mut g = vec![one; m + 1];
            g.extend(vec![-one; n + 1]);
            let delta_simple: Vec<_> = (1..=n)
                .map(|j| vec_of(dim, &[(d(j), one), (d(j + 1), -one)]))
                .collect();
            let eps_simple: Vec<_> = (1..=m)
                .map(|i| vec_of(dim, &[(e(i), one), (e(i + 1), -one)]))
                .collect();
            let mut simple = delta_simple.clone();
            simple.push(vec_of(dim, &[(d(n + 1), one), (e(1), -one)]));
            simple.extend(eps_simple.clone());
            let mut factors = Vec::new();
            if n >= 1 {
                factors.push((ClassicalType::A(n), delta_simple));
            }
            factors.push((ClassicalType::A(m), eps_simple));
            let mut odd = Vec::new();
            for j in 1..=n + 1 {
                for i in 1..=m + 1 {
                    odd.push(vec_of(dim, &[(d(j), one), (e(i), -one)]));
                }
            }
            Blueprint {
                basis,
                gram: diagonal(&g),
                simple,
                odd_node: n,
                factors,
                gamma: None,
                odd,
            }
        }
        AlgebraId::C { n } => {
            // ε, δ_1, …, δ_{n-1}
            let dim = n;
            let r = n - 1;
            let mut basis = vec![BasisSymbol::EpsilonPlain];
            basis.extend((1..=r).map(BasisSymbol::Delta));
            let mut g = vec![one];
            g.extend(vec![-one; r]);
            let mut even_simple: Vec<_> = (1..r)
                .map(|j| vec_of(dim, &[(j, one), (j + 1, -one)]))
                .collect();
            even_simple.push(vec_of(dim, &[(r, qi(2))]));
            let mut simple = vec![vec_of(dim, &[(0, one), (1, -one)])];
            simple.extend(even_simple.clone());
            let mut odd = Vec::new();
            for j in 1..=r {
                odd.push(vec_of(dim, &[(0, one), (j, -one)]));
                odd.push(vec_of(dim, &[(0, one), (j, one)]));
            }
            Blueprint {
                basis,
                gram: diagonal(&g),
                simple,
                odd_node: 0,
                factors: vec![(ClassicalType::C(r), even_simple)],
                gamma: None,
                odd,
            }
        }
        AlgebraId::B0 { n } => {
            let dim = n;
            let basis = (1..=n).map(BasisSymbol::Delta).collect();
            let mut simple: Vec<_> = (0..n - 1)
                .map(|j| vec_of(dim, &[(j, one), (j + 1, -one)]))
                .collect();
            let mut even_simple = simple.clone();
            even_simple.push(vec_of(dim, &[(n - 1, qi(2))]));
            simple.push(vec_of(dim, &[(n - 1, one)]));
            let odd = (0..n).map(|j| vec_of(dim, &[(j, one)])).collect();
            Blueprint {
                basis,
                gram: diagonal(&vec![one; n]),
                simple,
                odd_node: n - 1,
                factors: vec![(ClassicalType::C(n), even_simple)],
                gamma: Some(n - 1),
                odd,
            }
        }
        AlgebraId::D21 { alpha } => {
            let basis = (1..=3).map(BasisSymbol::Epsilon).collect();
            let g = [-(one + alpha) / qi(2), qr(1, 2), alpha / qi(2)];
            let v = |c: [i64; 3]| vec![qi(c[0]), qi(c[1]), qi(c[2])];
            let simple = vec![v([1, -1, -1]), v([0, 2, 0]), v([0, 0, 2])];
            let factors = vec![
                (ClassicalType::A(1), vec![v([2, 0, 0])]),
                (ClassicalType::A(1), vec![v([0, 2, 0])]),
                (ClassicalType::A(1), vec![v([0, 0, 2])]),
            ];
            let odd = vec![
                v([1, 1, 1]),
                v([1, 1, -1]),
                v([1, -1, 1]),
                v([1, -1, -1]),
            ];
            Blueprint {
                basis,
                gram: diagonal(&g),
                simple,
                odd_node: 0,
                factors,
                gamma: Some(0),
                odd,
            }
        }
        AlgebraId::F4 => {
            let mut basis = vec![BasisSymbol::DeltaPlain];
            basis.extend((1..=3).map(BasisSymbol::Epsilon));
            let g = [qi(-3), one, one, one];
            let v = |c: [i64; 4]| c.iter().map(|&x| qi(x)).collect::<Vec<_>>();
            let h = |c: [i64; 4]| c.iter().map(|&x| qr(x, 2)).collect::<Vec<_>>();
            let simple = vec![
                h([1, -1, -1, -1]),
                v([0, 0, 0, 1]),
                v([0, 0, 1, -1]),
                v([0, 1, -1, 0]),
            ];
            let factors = vec![
                (ClassicalType::A(1), vec![v([1, 0, 0, 0])]),
                (
                    ClassicalType::B(3),
                    vec![v([0, 1, -1, 0]), v([0, 0, 1, -1]), v([0, 0, 0, 1])],
                ),
            ];
            let mut odd = Vec::new();
            for s1 in [1, -1] {
                for s2 in [1, -1] {
                    for s3 in [1, -1] {
                        odd.push(h([1, s1, s2, s3]));
                    }
                }
            }
            Blueprint {
                basis,
                gram: diagonal(&g),
                simple,
                odd_node: 0,
                factors,
                gamma: Some(0),
                odd,
            }
        }
        AlgebraId::G3 => {
            // (δ, ε1, ε2) with ε3 = −ε1 − ε2 eliminated
            let basis = vec![
                BasisSymbol::DeltaPlain,
                BasisSymbol::Epsilon(1),
                BasisSymbol::Epsilon(2),
            ];
            let gram = vec![
                vec![qi(2), qi(0), qi(0)],
                vec![qi(0), qi(-2), qi(1)],
                vec![qi(0), qi(1), qi(-2)],
            ];
            let v = |c: [i64; 3]| c.iter().map(|&x| qi(x)).collect::<Vec<_>>();
            let simple = vec![v([1, -1, -1]), v([0, 1, 0]), v([0, -1, 1])];
            let factors = vec![
                (ClassicalType::A(1), vec![v([2, 0, 0])]),
                (ClassicalType::G2, vec![v([0, 1, 0]), v([0, -1, 1])]),
            ];
            let odd = vec![
                v([1, 0, 0]),
                v([1, 1, 0]),
                v([1, -1, 0]),
                v([1, 0, 1]),
                v([1, 0, -1]),
                v([1, -1, -1]),
                v([1, 1, 1]),
            ];
            Blueprint {
                basis,
                gram,
                simple,
                odd_node: 0,
                factors,
                gamma: Some(0),
                odd,
            }
        }
    }
}

fn half_sum(roots: &[Root], dim: usize) -> WeightVector {
    let mut v = vec![Q::zero(); dim];
    for r in roots {
        for (x, y) in v.iter_mut().zip(&r.coords) {
            *x += y;
        }
    }
    WeightVector(v.into_iter().map(|x| x / qi(2)).collect())
}

/// Constructs the distinguished root system of `alg`.
pub fn build_root_system(alg: &AlgebraId) -> Result<RootSystem> {
    alg.validate()?;
    RootSystem::assemble(alg.clone(), blueprint(alg))
}

impl RootSystem {
    fn assemble(algebra: AlgebraId, bp: Blueprint) -> Result<Self> {
        let dim = bp.basis.len();
        let mut positive_even = Vec::new();
        let mut factors = Vec::new();
        let mut gamma = None;
        for (fi, (kind, fsimple)) in bp.factors.iter().enumerate() {
            let cartan = cartan_from(fsimple, |a, b| bilinear(&bp.gram, a, b));
            if cartan != kind.cartan_matrix() {
                return Err(Error::Invariant(format!(
                    "{algebra}: factor {fi} does not have the Cartan matrix of {kind}"
                )));
            }
            let start = positive_even.len();
            let mut simple_idx = vec![0; fsimple.len()];
            for coeffs in kind.positive_root_coeffs() {
                let mut coords = vec![Q::zero(); dim];
                for (c, s) in coeffs.iter().zip(fsimple) {
                    for (x, y) in coords.iter_mut().zip(s) {
                        *x += y * qi(*c);
                    }
                }
                if coeffs.iter().sum::<i64>() == 1 {
                    let k = coeffs.iter().position(|&c| c == 1).unwrap();
                    simple_idx[k] = positive_even.len();
                }
                positive_even.push(Root::positive(coords, Parity::Even));
            }
            if fi == 0 {
                if let Some(g) = bp.gamma {
                    gamma = Some(simple_idx[g]);
                }
            }
            factors.push(EvenFactor {
                kind: *kind,
                simple: simple_idx,
                roots: (start..positive_even.len()).collect(),
            });
        }
        let positive_odd: Vec<Root> = bp
            .odd
            .into_iter()
            .map(|c| Root::positive(c, Parity::Odd))
            .collect();
        let simple: Vec<Root> = bp
            .simple
            .into_iter()
            .enumerate()
            .map(|(i, c)| {
                let parity = if i == bp.odd_node {
                    Parity::Odd
                } else {
                    Parity::Even
                };
                Root::positive(c, parity)
            })
            .collect();
        let rho0 = half_sum(&positive_even, dim);
        let rho1 = half_sum(&positive_odd, dim);
        let rho = rho0.minus(&rho1);
        let rs = RootSystem {
            algebra,
            basis: bp.basis,
            gram: bp.gram,
            positive_even,
            positive_odd,
            simple,
            odd_node: bp.odd_node,
            rho0,
            rho1,
            rho,
            factors,
            gamma,
        };
        rs.check_invariants()?;
        Ok(rs)
    }

    fn check_invariants(&self) -> Result<()> {
        let fail = |m: String| Err(Error::Invariant(format!("{}: {m}", self.algebra)));
        if self.positive_odd.len() != self.algebra.odd_root_count() {
            return fail(format!(
                "{} positive odd roots, expected {}",
                self.positive_odd.len(),
                self.algebra.odd_root_count()
            ));
        }
        // the distinguished simple system has exactly one odd root, and every
        // simple root is a member of the matching positive set
        let odd_simple: Vec<_> = self.simple.iter().filter(|r| r.is_odd()).collect();
        if odd_simple.len() != 1 {
            return fail("simple system is not distinguished".into());
        }
        for (i, s) in self.simple.iter().enumerate() {
            let set = if s.is_odd() {
                &self.positive_odd
            } else {
                &self.positive_even
            };
            if !set.iter().any(|r| r.coords == s.coords) {
                return fail(format!("simple root {i} is not a positive root of its parity"));
            }
        }
        for r in self.positive_roots() {
            if r.coords.iter().all(|x| x.is_zero()) {
                return fail("zero root".into());
            }
            match self.simple_expansion(&r.coords) {
                Some(c) if c.iter().all(|x| x.is_integer() && !x.is_negative()) => {}
                _ => {
                    return fail(format!(
                        "{} is not a non-negative integer combination of simple roots",
                        self.format_coords(&r.coords)
                    ))
                }
            }
        }
        if let Some(g) = self.gamma {
            if !self.factors[0].roots.contains(&g) {
                return fail("γ is not in the first even factor".into());
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &AlgebraId {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisSymbol] {
        &self.basis
    }

    pub fn gram(&self) -> &[Vec<Q>] {
        &self.gram
    }

    pub fn positive_even(&self) -> &[Root] {
        &self.positive_even
    }

    pub fn positive_odd(&self) -> &[Root] {
        &self.positive_odd
    }

    /// Even roots followed by odd roots: the canonical coordinate order of
    /// multi-exponents.
    pub fn positive_roots(&self) -> Vec<Root> {
        self.positive_even
            .iter()
            .chain(&self.positive_odd)
            .cloned()
            .collect()
    }

    pub fn positive_count(&self) -> usize {
        self.positive_even.len() + self.positive_odd.len()
    }

    pub fn simple(&self) -> &[Root] {
        &self.simple
    }

    pub fn odd_node(&self) -> usize {
        self.odd_node
    }

    pub fn rho0(&self) -> &WeightVector {
        &self.rho0
    }

    pub fn rho1(&self) -> &WeightVector {
        &self.rho1
    }

    pub fn rho(&self) -> &WeightVector {
        &self.rho
    }

    pub fn factors(&self) -> &[EvenFactor] {
        &self.factors
    }

    /// Index of γ in [`positive_even`](Self::positive_even) (type II only).
    pub fn gamma(&self) -> Option<usize> {
        self.gamma
    }

    /// Simple roots of the even part in label order: factor by factor, each in
    /// Bourbaki order.
    pub fn label_roots(&self) -> Vec<&Root> {
        self.factors
            .iter()
            .flat_map(|f| f.simple.iter().map(|&i| &self.positive_even[i]))
            .collect()
    }

    pub fn label_count(&self) -> usize {
        self.factors.iter().map(|f| f.simple.len()).sum()
    }

    /// Offset of each factor's labels within the label vector.
    pub fn label_offsets(&self) -> Vec<usize> {
        let mut acc = 0;
        self.factors
            .iter()
            .map(|f| {
                let o = acc;
                acc += f.simple.len();
                o
            })
            .collect()
    }

    pub fn form(&self, v: &[Q], w: &[Q]) -> Q {
        bilinear(&self.gram, v, w)
    }

    /// Symmetric bilinear form on weights.
    pub fn pairing(&self, v: &WeightVector, w: &WeightVector) -> Result<Q> {
        for x in [v, w] {
            if x.dim() != self.dim() {
                return Err(Error::DimensionMismatch {
                    expected: self.dim(),
                    got: x.dim(),
                });
            }
        }
        Ok(self.form(&v.0, &w.0))
    }

    /// `λ(h_α) = 2(λ, α)/(α, α)` for a non-isotropic root.
    pub fn coroot_value(&self, lambda: &WeightVector, alpha: &Root) -> Result<Q> {
        if lambda.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: lambda.dim(),
            });
        }
        let norm = self.form(&alpha.coords, &alpha.coords);
        if norm.is_zero() {
            return Err(Error::IsotropicCoroot(self.format_coords(&alpha.coords)));
        }
        Ok(qi(2) * self.form(&lambda.0, &alpha.coords) / norm)
    }

    /// Coefficients of `coords` over the distinguished simple roots.
    pub fn simple_expansion(&self, coords: &[Q]) -> Option<Vec<Q>> {
        let basis: Vec<Vec<Q>> = self.simple.iter().map(|r| r.coords.clone()).collect();
        expand(&basis, coords)
    }

    /// Index of a positive root in the canonical order.
    pub fn position(&self, coords: &[Q]) -> Option<usize> {
        self.positive_even
            .iter()
            .chain(&self.positive_odd)
            .position(|r| r.coords == coords)
    }

    pub fn root_at(&self, index: usize) -> &Root {
        let ne = self.positive_even.len();
        if index < ne {
            &self.positive_even[index]
        } else {
            &self.positive_odd[index - ne]
        }
    }

    /// Maps a coefficient vector over factor `f`'s simple roots to the index
    /// of the corresponding root in the canonical order.
    pub fn factor_root(&self, f: usize, coeffs: &[i64]) -> Option<usize> {
        let factor = &self.factors[f];
        let mut coords = vec![Q::zero(); self.dim()];
        for (&c, &s) in coeffs.iter().zip(&factor.simple) {
            for (x, y) in coords.iter_mut().zip(&self.positive_even[s].coords) {
                *x += y * qi(c);
            }
        }
        self.position(&coords)
    }

    /// Copy of the system with the Gram matrix multiplied by `c > 0`.
    pub fn rescaled(&self, c: Q) -> Result<RootSystem> {
        if !c.is_positive() {
            return Err(Error::Invariant(format!("rescaling factor {c} must be positive")));
        }
        let mut rs = self.clone();
        for row in rs.gram.iter_mut() {
            for x in row.iter_mut() {
                *x *= c;
            }
        }
        Ok(rs)
    }

    pub fn format_coords(&self, coords: &[Q]) -> String {
        format_combination(&self.basis, coords)
    }

    pub fn format_root(&self, r: &Root) -> String {
        self.format_coords(&r.coords)
    }

    /// Parses `"2δ1"`, `"e1-e2-e3"`, `"1/2d-1/2e1+1/2e2-1/2e3"` and the like.
    pub fn parse_coords(&self, s: &str) -> Result<Vec<Q>> {
        parse_combination(&self.basis, s)
    }

    pub fn parse_positive_root(&self, s: &str) -> Result<usize> {
        let coords = self.parse_coords(s)?;
        self.position(&coords).ok_or_else(|| Error::Parse {
            what: "positive root",
            input: s.to_string(),
            reason: format!("not a positive root of {}", self.algebra),
        })
    }

    pub fn to_json(&self) -> RootsJson {
        let rat = |x: &Q| x.to_string();
        let rows = |roots: &[Root]| -> Vec<Vec<String>> {
            roots
                .iter()
                .map(|r| r.coords.iter().map(rat).collect())
                .collect()
        };
        RootsJson {
            algebra: self.algebra.to_string(),
            gram: self
                .gram
                .iter()
                .map(|row| row.iter().map(rat).collect())
                .collect(),
            positive_even: rows(&self.positive_even),
            positive_odd: rows(&self.positive_odd),
            simple: rows(&self.simple),
            odd_node: self.odd_node,
        }
    }
}

/// JSON export of a root system. Rationals are written as `"p/q"` strings
/// (integers without the denominator).
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct RootsJson {
    pub algebra: String,
    pub gram: Vec<Vec<String>>,
    pub positive_even: Vec<Vec<String>>,
    pub positive_odd: Vec<Vec<String>>,
    pub simple: Vec<Vec<String>>,
    pub odd_node: usize,
}

fn format_combination(basis: &[BasisSymbol], coords: &[Q]) -> String {
    let mut out = String::new();
    for (sym, c) in basis.iter().zip(coords) {
        if c.is_zero() {
            continue;
        }
        let sign = if c.is_negative() { "-" } else { "+" };
        if !out.is_empty() || c.is_negative() {
            out.push_str(sign);
        }
        let a = c.abs();
        if a != Q::one() {
            out.push_str(&a.to_string());
        }
        out.push_str(&sym.to_string());
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn parse_combination(basis: &[BasisSymbol], s: &str) -> Result<Vec<Q>> {
    let err = |reason: String| Error::Parse {
        what: "root",
        input: s.to_string(),
        reason,
    };
    let text: String = s
        .chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c {
            'ε' | 'e' => 'e',
            'δ' | 'd' => 'd',
            '−' => '-',
            c => c,
        })
        .collect();
    let mut coords = vec![Q::zero(); basis.len()];
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    if chars.is_empty() {
        return Err(err("empty".into()));
    }
    while i < chars.len() {
        let mut sign = Q::one();
        if chars[i] == '+' || chars[i] == '-' {
            if chars[i] == '-' {
                sign = -sign;
            }
            i += 1;
        }
        let start = i;
        while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '/') {
            i += 1;
        }
        let coeff_text: String = chars[start..i].iter().collect();
        let coeff = if coeff_text.is_empty() {
            Q::one()
        } else {
            parse_rational(&coeff_text)?
        };
        if i >= chars.len() || (chars[i] != 'e' && chars[i] != 'd') {
            return Err(err(format!("expected a basis symbol at position {i}")));
        }
        let letter = chars[i];
        i += 1;
        let start = i;
        while i < chars.len() && chars[i].is_ascii_digit() {
            i += 1;
        }
        let idx_text: String = chars[start..i].iter().collect();
        let sym = match (letter, idx_text.parse::<usize>().ok()) {
            ('e', Some(k)) => BasisSymbol::Epsilon(k),
            ('d', Some(k)) => BasisSymbol::Delta(k),
            ('e', None) => BasisSymbol::EpsilonPlain,
            _ => BasisSymbol::DeltaPlain,
        };
        let pos = basis
            .iter()
            .position(|b| *b == sym)
            .ok_or_else(|| err(format!("{sym} is not an ambient basis vector")))?;
        coords[pos] += sign * coeff;
    }
    Ok(coords)
}
