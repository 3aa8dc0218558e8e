//! Parameter sweeps producing one [`VerifyReport`] per instance.
//!
//! Sweeps run on a rayon pool whose size is capped by `SUPERPBW_THREADS`;
//! reports come back in the order the instances were generated.

use std::collections::BTreeSet;
use std::fmt::Display;

use rayon::prelude::*;
use serde::Serialize;

use crate::bases::{
    comb_brute, comb_count, exceptional_polytope, kt_map, kt_tableaux, type_one_polytope, OrthoSymplectic,
    Splitter,
};
use crate::classical::weyl_dim;
use crate::dyckpaths::dyck_paths_osp;
use crate::gradedops::{apply_op, straightening_support, weight_of, SuperMonomial, SuperPolynomial};
use crate::polytopes::{apply_caps, minkowski_sum, MultiExponent};
use crate::rootdata::build_root_system;
use crate::weights::{
    dim_typical, factor_weights, factorization_check, is_typical, lifted_even_count, weight_from_ints,
};
use crate::{AlgebraId, Result, RootSystem, Q};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub claim: String,
    pub instance: String,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

impl VerifyReport {
    pub fn new(claim: &str, instance: impl Display, expected: impl Display, got: impl Display) -> Self {
        let (expected, got) = (expected.to_string(), got.to_string());
        VerifyReport {
            claim: claim.into(),
            instance: instance.to_string(),
            pass: expected == got,
            expected,
            got,
        }
    }

    /// A report for an instance that raised an error.
    pub fn failed(claim: &str, instance: impl Display, expected: impl Display, err: impl Display) -> Self {
        VerifyReport {
            claim: claim.into(),
            instance: instance.to_string(),
            expected: expected.to_string(),
            got: format!("error: {err}"),
            pass: false,
        }
    }
}

impl Display for VerifyReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} {} [{}] expected {} got {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.claim,
            self.instance,
            self.expected,
            self.got
        )
    }
}

pub fn all_pass(reports: &[VerifyReport]) -> bool {
    reports.iter().all(|r| r.pass)
}

/// Worker count from `SUPERPBW_THREADS`, if set to a positive integer.
pub fn thread_cap() -> Option<usize> {
    std::env::var("SUPERPBW_THREADS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
}

/// Maps `f` over `items` in parallel, keeping the input order.
pub fn run_ordered<T, F>(items: Vec<T>, f: F) -> Vec<VerifyReport>
where
    T: Send + Sync,
    F: Fn(&T) -> Vec<VerifyReport> + Send + Sync,
{
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = thread_cap() {
        builder = builder.num_threads(n);
    }
    let run = || items.par_iter().map(&f).collect::<Vec<_>>().concat();
    match builder.build() {
        Ok(pool) => pool.install(run),
        Err(_) => items.iter().flat_map(&f).collect(),
    }
}

/// All label vectors with entry `k` in `ranges[k]` and total at most `max_sum`.
pub fn label_grid(ranges: &[(u32, u32)], max_sum: Option<u32>) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for &(lo, hi) in ranges {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<u32>| {
                (lo..=hi).map(move |v| {
                    let mut p = prefix.clone();
                    p.push(v);
                    p
                })
            })
            .collect();
    }
    out.retain(|l| max_sum.is_none_or(|m| l.iter().sum::<u32>() <= m));
    out
}

fn fmt_labels(labels: &[u32]) -> String {
    labels.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

/// `|S(λ)| = dim V(λ)` for `osp(1|2n)`.
pub fn osp_counts(ns: &[usize], max_sum: u32) -> Vec<VerifyReport> {
    let mut items = Vec::new();
    for &n in ns {
        for labels in label_grid(&vec![(0, max_sum); n], Some(max_sum)) {
            items.push((n, labels));
        }
    }
    run_ordered(items, |(n, labels)| {
        let instance = format!("B(0,{n}) λ=({})", fmt_labels(labels));
        let claim = "osp basis count";
        let run = || -> Result<(u64, u64)> {
            let rs = build_root_system(&AlgebraId::B0 { n: *n })?;
            let lambda = weight_from_ints(&rs, labels)?;
            let osp = OrthoSymplectic::new(*n)?;
            Ok((dim_typical(&rs, &lambda)?, osp.polytope(labels)?.count()))
        };
        vec![match run() {
            Ok((dim, count)) => VerifyReport::new(claim, instance, dim, count),
            Err(e) => VerifyReport::failed(claim, instance, "dim", e),
        }]
    })
}

/// `S(λ+μ) = (S(λ) + S(μ)) ∩ caps` for `osp(1|2n)`.
pub fn minkowski(n: usize, max_label: u32) -> Vec<VerifyReport> {
    let grid = label_grid(&vec![(0, max_label); n], None);
    let mut items = Vec::new();
    for l in &grid {
        for m in &grid {
            items.push((l.clone(), m.clone()));
        }
    }
    let osp = match OrthoSymplectic::new(n) {
        Ok(o) => o,
        Err(e) => return vec![VerifyReport::failed("minkowski", format!("n={n}"), "setup", e)],
    };
    run_ordered(items, |(l, m)| {
        let instance = format!("B(0,{n}) λ=({}) μ=({})", fmt_labels(l), fmt_labels(m));
        let run = || -> Result<(BTreeSet<MultiExponent>, BTreeSet<MultiExponent>)> {
            let sum: Vec<u32> = l.iter().zip(m).map(|(a, b)| a + b).collect();
            let whole: BTreeSet<_> = osp.points(&sum)?.into_iter().collect();
            let spec = osp.polytope(l)?;
            let parts = apply_caps(minkowski_sum(&spec.lattice_points(), &osp.points(m)?), spec.odd_mask());
            Ok((whole, parts))
        };
        vec![match run() {
            Ok((whole, parts)) => {
                let got = if whole == parts {
                    format!("{} points, equal", parts.len())
                } else {
                    format!("{} points, {} differ", parts.len(), whole.symmetric_difference(&parts).count())
                };
                VerifyReport::new("minkowski", instance, format!("{} points, equal", whole.len()), got)
            }
            Err(e) => VerifyReport::failed("minkowski", instance, "sets", e),
        }]
    })
}

/// Every point of `S(λ)` splits as `S(ϖ_i) + S(λ−ϖ_i)`. With `literal`, a
/// second report per weight counts the points where the unconditioned
/// ord1-greatest dominated point already gives the split.
pub fn split(ns: &[usize], max_label: u32, literal: bool) -> Vec<VerifyReport> {
    let mut items = Vec::new();
    for &n in ns {
        for labels in label_grid(&vec![(0, max_label); n], None) {
            if labels.iter().any(|&m| m != 0) {
                items.push((n, labels));
            }
        }
    }
    let osps: Vec<OrthoSymplectic> = match ns.iter().map(|&n| OrthoSymplectic::new(n)).collect() {
        Ok(v) => v,
        Err(e) => return vec![VerifyReport::failed("split", "setup", "setup", e)],
    };
    let splitters: Vec<Splitter> = match osps.iter().map(Splitter::new).collect() {
        Ok(v) => v,
        Err(e) => return vec![VerifyReport::failed("split", "setup", "setup", e)],
    };
    run_ordered(items, |(n, labels)| {
        let k = ns.iter().position(|m| m == n).expect("built above");
        let instance = format!("B(0,{n}) λ=({})", fmt_labels(labels));
        let run = || -> Result<(usize, usize, usize)> {
            let context = splitters[k].context(labels)?;
            let points = osps[k].points(labels)?;
            let (mut ok, mut greedy) = (0, 0);
            for s in &points {
                if let Ok(split) = context.split(s) {
                    ok += 1;
                    greedy += usize::from(split.greedy);
                }
            }
            Ok((points.len(), ok, greedy))
        };
        match run() {
            Ok((total, ok, greedy)) => {
                let mut out = vec![VerifyReport::new("split", &instance, format!("{total} split"), format!("{ok} split"))];
                if literal {
                    out.push(VerifyReport::new(
                        "split ord1 greedy",
                        &instance,
                        format!("{total} greedy"),
                        format!("{greedy} greedy"),
                    ));
                }
                out
            }
            Err(e) => vec![VerifyReport::failed("split", instance, "split", e)],
        }
    })
}

/// `T` is injective on `S(ϖ_i)` and `|S(ϖ_i)| = |KT| = dim V(ϖ_i)`.
pub fn kt(ns: &[usize]) -> Vec<VerifyReport> {
    let items: Vec<(usize, usize)> = ns.iter().flat_map(|&n| (1..=n).map(move |i| (n, i))).collect();
    run_ordered(items, |&(n, i)| {
        let instance = format!("n={n} i={i}");
        let run = || -> Result<(u64, String)> {
            let rs = build_root_system(&AlgebraId::B0 { n })?;
            let osp = OrthoSymplectic::new(n)?;
            let fundamental = osp.fundamental(i);
            let dim = dim_typical(&rs, &weight_from_ints(&rs, &fundamental)?)?;
            let points = osp.points(&fundamental)?;
            let images = points
                .iter()
                .map(|s| kt_map(&osp, i, s))
                .collect::<Result<BTreeSet<_>>>()?;
            let injective = images.len() == points.len();
            Ok((
                dim,
                format!(
                    "|S|={} |KT|={} injective={injective}",
                    points.len(),
                    kt_tableaux(n, i).len()
                ),
            ))
        };
        match run() {
            Ok((dim, got)) => vec![VerifyReport::new(
                "kt",
                instance,
                format!("|S|={dim} |KT|={dim} injective=true"),
                got,
            )],
            Err(e) => vec![VerifyReport::failed("kt", instance, "tableaux", e)],
        }
    })
}

/// Closed form of the comb count against enumeration.
pub fn comb(max_m: u64, max_l: u32) -> Vec<VerifyReport> {
    let mut items = Vec::new();
    for l in 1..=max_l {
        for m in (l as u64).saturating_sub(1)..=max_m {
            items.push((m, l));
        }
    }
    run_ordered(items, |&(m, l)| {
        let c = comb_count(m, l);
        vec![VerifyReport::new(
            "comb",
            format!("m={m} l={l}"),
            comb_brute(m, l),
            if c.closed_form { c.value.to_string() } else { format!("{} (not closed form)", c.value) },
        )]
    })
}

/// Type I: `|S(λ)| = 2^d ∏ weyl_dim = dim V(λ)` at a verified typical charge.
pub fn type_one(algebras: &[AlgebraId], max_label: u32) -> Vec<VerifyReport> {
    let mut items = Vec::new();
    let mut setup_errors = Vec::new();
    for alg in algebras {
        match build_root_system(alg) {
            Ok(rs) => {
                for labels in label_grid(&vec![(0, max_label); rs.label_count()], None) {
                    items.push((alg.clone(), labels));
                }
            }
            Err(e) => setup_errors.push(VerifyReport::failed("type I count", alg, "setup", e)),
        }
    }
    setup_errors.extend(run_ordered(items, |(alg, labels)| {
        let instance = format!("{alg} λ=({})", fmt_labels(labels));
        let run = || -> Result<(u64, u64, u64, Q)> {
            let rs = build_root_system(alg)?;
            let lambda = weight_from_ints(&rs, labels)?;
            let charge = crate::weights::labels_of(&rs, &lambda)?.charge.unwrap_or_default();
            let count = type_one_polytope(&rs, &lambda)?.count();
            Ok((dim_typical(&rs, &lambda)?, lifted_even_count(&rs, &lambda)?, count, charge))
        };
        match run() {
            Ok((dim, lifted, count, charge)) => {
                let instance = format!("{instance} charge={charge}");
                vec![
                    VerifyReport::new("type I count", &instance, dim, count),
                    VerifyReport::new("type I lift", &instance, dim, lifted),
                ]
            }
            Err(e) => vec![VerifyReport::failed("type I count", instance, "dim", e)],
        }
    }));
    setup_errors
}

fn paper_exceptional_dim(rs: &RootSystem, labels: &[u32]) -> Result<u64> {
    let m1 = labels[0] as u64;
    Ok(match rs.algebra() {
        AlgebraId::D21 { .. } => 16 * (m1 - 1) * (labels[1] as u64 + 1) * (labels[2] as u64 + 1),
        AlgebraId::F4 => 256 * (m1 - 3) * even_part(rs, labels)?,
        AlgebraId::G3 => 64 * (2 * m1 - 5) * even_part(rs, labels)?,
        other => unreachable!("{other} is not exceptional"),
    })
}

fn even_part(rs: &RootSystem, labels: &[u32]) -> Result<u64> {
    let lambda = weight_from_ints(rs, labels)?;
    let mut d = 1;
    for (f, w) in rs.factors().iter().zip(factor_weights(rs, &lambda)?).skip(1) {
        d *= weyl_dim(f.kind, &w)?;
    }
    Ok(d)
}

/// Exceptional algebras over a label grid; atypical weights are skipped.
pub fn exceptional(alg: &AlgebraId, ranges: &[(u32, u32)]) -> Vec<VerifyReport> {
    let items = label_grid(ranges, None);
    let rs = match build_root_system(alg) {
        Ok(rs) => rs,
        Err(e) => return vec![VerifyReport::failed("exceptional", alg, "setup", e)],
    };
    let l = rs.positive_odd().len() as u32;
    let reports = run_ordered(items, |labels| {
        let instance = format!("{alg} λ=({})", fmt_labels(labels));
        let run = || -> Result<Option<Vec<VerifyReport>>> {
            let lambda = weight_from_ints(&rs, labels)?;
            if !is_typical(&rs, &lambda) {
                return Ok(None);
            }
            let poly = exceptional_polytope(&rs, &lambda)?;
            let odd = poly.spec.count();
            let dim = dim_typical(&rs, &lambda)?;
            let paper = paper_exceptional_dim(&rs, labels)?;
            let mut out = vec![
                VerifyReport::new("exceptional count", &instance, dim, poly.count()),
                VerifyReport::new("exceptional paper formula", &instance, paper, dim),
                VerifyReport::new("factorization", &instance, true, factorization_check(&rs, &lambda)?),
            ];
            if !matches!(alg, AlgebraId::D21 { .. }) {
                out.push(VerifyReport::new(
                    "odd factor comb",
                    &instance,
                    comb_count(labels[0] as u64, l).value,
                    odd,
                ));
                out.push(VerifyReport::new(
                    "odd factor times even",
                    &instance,
                    dim,
                    odd * poly.even_factor_count,
                ));
            }
            Ok(Some(out))
        };
        match run() {
            Ok(Some(r)) => r,
            Ok(None) => Vec::new(),
            Err(e) => vec![VerifyReport::failed("exceptional", instance, "dim", e)],
        }
    });
    if reports.is_empty() {
        return vec![VerifyReport::new("exceptional", alg, "some typical instance", "none")];
    }
    reports
}

/// Weights of `∂_α x_{−β}` are `−β + α` for every pair of positive roots.
pub fn weight_additivity(alg: &AlgebraId) -> Vec<VerifyReport> {
    let rs = match build_root_system(alg) {
        Ok(rs) => rs,
        Err(e) => return vec![VerifyReport::failed("weight additivity", alg, "setup", e)],
    };
    let dim = rs.positive_count();
    let mut checked = 0usize;
    let mut bad = 0usize;
    for a in 0..dim {
        for b in 0..dim {
            let source = MultiExponent::unit(dim, b);
            let target = weight_of(&rs, &source).plus(&rs.root_at(a).as_weight());
            match apply_op(&rs, a, &SuperPolynomial::monomial(source)) {
                Ok(p) => {
                    for m in p.terms().keys() {
                        checked += 1;
                        if weight_of(&rs, m) != target {
                            bad += 1;
                        }
                    }
                }
                Err(_) => bad += 1,
            }
        }
    }
    vec![VerifyReport::new(
        "weight additivity",
        format!("{alg}, {} root pairs, {checked} terms", dim * dim),
        "0 violations",
        format!("{bad} violations"),
    )]
}

/// The straightening display for `D(2,1;α)`: operators for the four odd
/// roots on `x_{−2ε₁}^{m₁+1}`. Returns the computed support, the three
/// displayed monomials, and the all-odd one among them.
pub struct D21Display {
    pub support: BTreeSet<SuperMonomial>,
    pub expected: BTreeSet<SuperMonomial>,
    pub all_odd: SuperMonomial,
}

pub fn d21_display(rs: &RootSystem, m1: u32) -> Result<D21Display> {
    let idx = |s: &str| rs.parse_positive_root(s);
    let ops = [idx("e1-e2-e3")?, idx("e1-e2+e3")?, idx("e1+e2-e3")?, idx("e1+e2+e3")?];
    let tau = idx("2e1")?;
    let support = straightening_support(rs, tau, m1 + 1, &ops)?;
    let dim = rs.positive_count();
    let mono = |x_power: u32, others: &[&str]| -> Result<SuperMonomial> {
        let mut m = MultiExponent::zero(dim);
        m.0[tau] = x_power;
        for o in others {
            m.0[idx(o)?] += 1;
        }
        Ok(m)
    };
    let all_odd = mono(m1 - 3, &["e1+e2+e3", "e1+e2-e3", "e1-e2+e3", "e1-e2-e3"])?;
    let expected: BTreeSet<SuperMonomial> = [
        all_odd.clone(),
        mono(m1 - 2, &["2e2", "e1-e2+e3", "e1-e2-e3"])?,
        mono(m1 - 2, &["e1+e2-e3", "2e3", "e1-e2-e3"])?,
    ]
    .into_iter()
    .collect();
    Ok(D21Display {
        support,
        expected,
        all_odd,
    })
}

pub fn d21_support(alphas: &[Q], m1s: &[u32]) -> Vec<VerifyReport> {
    let mut out = Vec::new();
    for &alpha in alphas {
        let alg = AlgebraId::D21 { alpha };
        for &m1 in m1s {
            let instance = format!("{alg} m1={m1}");
            let report = build_root_system(&alg).and_then(|rs| d21_display(&rs, m1)).map(|d| {
                let support = &d.support;
                let contains_all_odd = support.contains(&d.all_odd);
                let subset = support.is_subset(&d.expected);
                VerifyReport::new(
                    "D(2,1) straightening support",
                    format!("{instance}, {} of 3 terms", support.len()),
                    "nonzero, inside the 3-term display, all-odd term present",
                    format!(
                        "{}, {}, all-odd term {}",
                        if support.is_empty() { "zero" } else { "nonzero" },
                        if subset { "inside the 3-term display" } else { "outside the display" },
                        if contains_all_odd { "present" } else { "missing" },
                    ),
                )
            });
            out.push(report.unwrap_or_else(|e| VerifyReport::failed("D(2,1) straightening support", instance, "support", e)));
        }
    }
    out
}

/// Path-count goldens and regeneration determinism.
pub fn dyck_goldens() -> Vec<VerifyReport> {
    let mut out = vec![
        VerifyReport::new("dyck osp count", "n=1", 1, dyck_paths_osp(1).len()),
        VerifyReport::new("dyck osp count", "n=2", 4, dyck_paths_osp(2).len()),
    ];
    for n in 1..=4 {
        out.push(VerifyReport::new(
            "dyck regeneration",
            format!("n={n}"),
            true,
            dyck_paths_osp(n) == dyck_paths_osp(n),
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_respects_sum() {
        assert_eq!(label_grid(&[(0, 2), (0, 2)], Some(2)).len(), 6);
        assert_eq!(label_grid(&[(3, 4), (0, 1)], None), vec![vec![3, 0], vec![3, 1], vec![4, 0], vec![4, 1]]);
        assert_eq!(label_grid(&[], None), vec![Vec::<u32>::new()]);
    }

    #[test]
    fn reports_compare_strings() {
        assert!(VerifyReport::new("c", "i", 5, 5).pass);
        assert!(!VerifyReport::new("c", "i", 5, 6).pass);
    }

    #[test]
    fn small_sweeps_pass() {
        assert!(all_pass(&osp_counts(&[1, 2], 2)));
        assert!(all_pass(&comb(4, 3)));
        assert!(all_pass(&dyck_goldens()));
        assert!(all_pass(&kt(&[1, 2])));
    }

    #[test]
    fn d21_display_support() {
        let r = d21_support(&[Q::from_integer(1)], &[4]);
        assert!(all_pass(&r), "{}", r[0]);
    }
}
