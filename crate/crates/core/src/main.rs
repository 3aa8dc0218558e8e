use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use superpbw::bases::{monomial_basis, polytope_for};
use superpbw::dyckpaths::{dyck_paths_a, dyck_paths_c, dyck_paths_osp, DyckPath, PathRoot};
use superpbw::gradedops::{format_term, straighten};
use superpbw::rootdata::build_root_system;
use superpbw::verify::{self, VerifyReport};
use superpbw::weights::{dim_typical, is_typical, to_ambient, typical_charge, vanishing_odd_roots, DynkinLabels};
use superpbw::{AlgebraId, Error, RootSystem, WeightVector};

#[derive(Parser)]
#[command(name = "superpbw", version, about = "PBW monomial bases for typical modules of basic classical Lie superalgebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Target {
    /// e.g. "B(0,2)", "A(2,1)", "C(3)", "D(2,1;1/2)", "F(4)", "G(3)"
    #[arg(long)]
    algebra: AlgebraId,
    /// m1,m2,...[,charge=p/q]
    #[arg(long, allow_hyphen_values = true)]
    labels: DynkinLabels,
}

#[derive(Subcommand)]
enum Command {
    /// Positive roots, Gram matrix and simple roots.
    Roots {
        #[arg(long)]
        algebra: AlgebraId,
        #[arg(long)]
        json: bool,
    },
    /// Dimension of a typical module.
    Dim(Target),
    /// Typicality, listing the odd roots with (λ+ρ, β) = 0.
    Typical(Target),
    /// Lattice points of S(λ).
    Polytope {
        #[command(flatten)]
        target: Target,
        #[arg(long, group = "mode")]
        count: bool,
        #[arg(long, group = "mode")]
        list: bool,
        #[arg(long, group = "mode", value_name = "FILE")]
        json: Option<PathBuf>,
    },
    /// The monomial basis written as JSON.
    Basis {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_name = "FILE")]
        out: PathBuf,
    },
    /// Dyck paths of an algebra's even part.
    Dyck {
        #[arg(long)]
        algebra: AlgebraId,
        #[arg(long)]
        list: bool,
    },
    /// Applies ∂-operators to a power of a generator.
    ApplyOps {
        #[arg(long)]
        algebra: AlgebraId,
        #[arg(long, allow_hyphen_values = true)]
        generator: String,
        #[arg(long)]
        power: u32,
        /// Comma-separated roots, applied right to left.
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        ops: String,
    },
    /// Parameter sweeps; exits 1 if any instance fails.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Claim {
    Count,
    Minkowski,
    Split,
    Kt,
    Comb,
    Dyck,
    Ops,
}

#[derive(Args)]
struct VerifyArgs {
    claim: Claim,
    #[arg(long)]
    algebra: Option<AlgebraId>,
    /// Largest label per node.
    #[arg(long)]
    max_label: Option<u32>,
    /// Largest label total (osp counts).
    #[arg(long)]
    max_sum: Option<u32>,
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long)]
    max_m: Option<u64>,
    #[arg(long)]
    max_l: Option<u32>,
    /// split: also check the unconditioned ord1-greatest choice.
    #[arg(long)]
    literal: bool,
    /// Also write the reports to FILE as JSON.
    #[arg(long, value_name = "FILE")]
    json: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Fills in a typical charge for type I when none was given.
fn weight(rs: &RootSystem, labels: &DynkinLabels) -> Result<WeightVector, Failure> {
    let mut labels = labels.clone();
    if rs.algebra().is_type_one() && labels.charge.is_none() {
        if let Ok(ints) = labels.dominant_ints() {
            labels.charge = typical_charge(rs, &ints)?;
        }
    }
    Ok(to_ambient(rs, &labels)?)
}

fn setup(target: &Target) -> Result<(RootSystem, WeightVector), Failure> {
    let rs = build_root_system(&target.algebra)?;
    let lambda = weight(&rs, &target.labels)?;
    Ok((rs, lambda))
}

fn path_names(rs: &RootSystem, f: usize, rank: usize, p: &DyckPath) -> String {
    let names: Vec<String> = p
        .roots
        .iter()
        .map(|r| {
            let coords = match r {
                PathRoot::Short(i) => {
                    let mut v = vec![superpbw::Q::from_integer(0); rs.dim()];
                    v[i - 1] = superpbw::Q::from_integer(1);
                    Some(v)
                }
                _ => r
                    .coeffs(rank)
                    .and_then(|c| rs.factor_root(f, &c))
                    .map(|k| rs.root_at(k).coords().to_vec()),
            };
            coords.map_or_else(|| r.to_string(), |c| rs.format_coords(&c))
        })
        .collect();
    format!("({})", names.join(", "))
}

fn run_verify(args: &VerifyArgs) -> Result<Vec<VerifyReport>, Failure> {
    let max_n = args.max_n;
    let reports = match args.claim {
        Claim::Count => match &args.algebra {
            None | Some(AlgebraId::B0 { .. }) => {
                let ns: Vec<usize> = match &args.algebra {
                    Some(AlgebraId::B0 { n }) => vec![*n],
                    _ => (1..=max_n.unwrap_or(3)).collect(),
                };
                verify::osp_counts(&ns, args.max_sum.unwrap_or(4))
            }
            Some(alg @ (AlgebraId::A { .. } | AlgebraId::C { .. })) => {
                verify::type_one(std::slice::from_ref(alg), args.max_label.unwrap_or(3))
            }
            Some(alg) => {
                let rs = build_root_system(alg)?;
                let bound = superpbw::weights::desk_bound(alg) as u32;
                let mut ranges = vec![(0, args.max_label.unwrap_or(1)); rs.label_count()];
                ranges[0] = (bound, bound + 3);
                verify::exceptional(alg, &ranges)
            }
        },
        Claim::Minkowski => {
            let n = match &args.algebra {
                Some(AlgebraId::B0 { n }) => *n,
                Some(other) => return Err(Failure::Usage(format!("minkowski needs B(0,n), got {other}"))),
                None => max_n.unwrap_or(2),
            };
            verify::minkowski(n, args.max_label.unwrap_or(2))
        }
        Claim::Split => {
            let ns: Vec<usize> = match &args.algebra {
                Some(AlgebraId::B0 { n }) => vec![*n],
                Some(other) => return Err(Failure::Usage(format!("split needs B(0,n), got {other}"))),
                None => (1..=max_n.unwrap_or(3)).collect(),
            };
            verify::split(&ns, args.max_label.unwrap_or(3), args.literal)
        }
        Claim::Kt => {
            let ns: Vec<usize> = match &args.algebra {
                Some(AlgebraId::B0 { n }) => vec![*n],
                Some(other) => return Err(Failure::Usage(format!("kt needs B(0,n), got {other}"))),
                None => (1..=max_n.unwrap_or(4)).collect(),
            };
            verify::kt(&ns)
        }
        Claim::Comb => verify::comb(args.max_m.unwrap_or(10), args.max_l.unwrap_or(8)),
        Claim::Dyck => verify::dyck_goldens(),
        Claim::Ops => {
            let algs: Vec<AlgebraId> = match &args.algebra {
                Some(a) => vec![a.clone()],
                None => ["B(0,2)", "A(1,0)", "C(3)", "D(2,1;1)", "F(4)", "G(3)"]
                    .iter()
                    .map(|s| s.parse())
                    .collect::<Result<_, _>>()?,
            };
            let mut out: Vec<VerifyReport> = algs.iter().flat_map(verify::weight_additivity).collect();
            let alphas: Vec<superpbw::Q> = algs
                .iter()
                .filter_map(|a| match a {
                    AlgebraId::D21 { alpha } => Some(*alpha),
                    _ => None,
                })
                .collect();
            out.extend(verify::d21_support(&alphas, &[4, 5, 6]));
            out
        }
    };
    Ok(reports)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Roots { algebra, json } => {
            let rs = build_root_system(&algebra)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&rs.to_json())?);
            } else {
                println!("algebra {}", rs.algebra());
                let simple: Vec<String> = rs.simple().iter().map(|r| rs.format_root(r)).collect();
                println!("simple {} (odd node {})", simple.join(" "), rs.odd_node() + 1);
                for r in rs.positive_even() {
                    println!("even {}", rs.format_root(r));
                }
                for r in rs.positive_odd() {
                    println!("odd {}", rs.format_root(r));
                }
            }
        }
        Command::Dim(target) => {
            let (rs, lambda) = setup(&target)?;
            println!("{}", dim_typical(&rs, &lambda)?);
        }
        Command::Typical(target) => {
            let (rs, lambda) = setup(&target)?;
            if is_typical(&rs, &lambda) {
                println!("yes");
            } else {
                let names: Vec<String> = vanishing_odd_roots(&rs, &lambda)
                    .into_iter()
                    .map(|i| format!("(λ+ρ, {}) = 0", rs.format_root(&rs.positive_odd()[i])))
                    .collect();
                println!("no: {}", names.join("; "));
            }
        }
        Command::Polytope {
            target,
            count,
            list,
            json,
        } => {
            let (rs, lambda) = setup(&target)?;
            let (spec, even) = polytope_for(&rs, &lambda)?;
            if let Some(path) = json {
                let points = spec.lattice_points();
                fs::write(&path, serde_json::to_string_pretty(&spec.dump(&points))?)?;
                println!("{}", points.len() as u64 * even);
            } else if list {
                println!("{}", spec.roots().join(" "));
                for p in spec.lattice_points() {
                    println!("{p}");
                }
                if even != 1 {
                    println!("even factor multiplicity {even}");
                }
            } else {
                let _ = count;
                println!("{}", spec.count() * even);
            }
        }
        Command::Basis { target, out } => {
            let (rs, lambda) = setup(&target)?;
            let basis = monomial_basis(&rs, &lambda)?;
            fs::write(&out, serde_json::to_string_pretty(&basis)?)?;
            println!("{}", basis.count());
        }
        Command::Dyck { algebra, list } => {
            let rs = build_root_system(&algebra)?;
            let mut lines = Vec::new();
            for (f, factor) in rs.factors().iter().enumerate() {
                let rank = factor.simple.len();
                let paths = match (&algebra, factor.kind) {
                    (AlgebraId::B0 { n }, _) => dyck_paths_osp(*n),
                    (_, superpbw::classical::ClassicalType::A(r)) => dyck_paths_a(r),
                    (_, superpbw::classical::ClassicalType::C(r)) => dyck_paths_c(r),
                    (_, other) => {
                        return Err(Failure::Usage(format!("no Dyck paths for an even factor of type {other}")))
                    }
                };
                for p in &paths {
                    let (i, j) = p.window(rank);
                    lines.push(format!("{} ≤ m{i}+…+m{j}", path_names(&rs, f, rank, p)));
                }
            }
            if list {
                for l in &lines {
                    println!("{l}");
                }
            }
            println!("{} paths", lines.len());
        }
        Command::ApplyOps {
            algebra,
            generator,
            power,
            ops,
        } => {
            let rs = build_root_system(&algebra)?;
            let tau = rs.parse_positive_root(&generator)?;
            let ops = ops
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|s| rs.parse_positive_root(s))
                .collect::<Result<Vec<_>, _>>()?;
            let p = straighten(&rs, tau, power, &ops)?;
            println!("support {} monomials (coefficients are convention-dependent)", p.terms().len());
            for (m, c) in p.terms() {
                println!("{c}\t{}", format_term(&rs, m));
            }
        }
        Command::Verify(args) => {
            let reports = run_verify(&args)?;
            for r in &reports {
                println!("{r}");
            }
            if let Some(path) = &args.json {
                fs::write(path, serde_json::to_string_pretty(&reports)?)?;
            }
            let failed = reports.iter().filter(|r| !r.pass).count();
            println!("{} instances, {failed} failed", reports.len());
            if failed > 0 {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
