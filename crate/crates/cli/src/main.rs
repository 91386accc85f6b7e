//! Batch front end: reads JSON descriptions of algebras, maps, coverings
//! and polynomials, runs the named checks, and writes machine-readable
//! reports (plus DOT diagrams for coverings). Exit codes: 0 all checks
//! pass, 1 a check failed, 2 malformed input, 3 a resource cap tripped.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use frobenius::algebra::{AlgebraOps, LinearMap};
use frobenius::coverings::{
    build_interval_covering, check_covering, group_quotient_covering, resolve_covering,
    subgroup_quotient_covering, FiniteCovering, IntervalCoveringSpec, PermutationAction,
};
use frobenius::error::Error;
use frobenius::frobenius::{
    is_frobenius, phi_cycle_sum, phi_diagonal_determinant, phi_recursive, series_identity_check,
    Caps,
};
use frobenius::io;
use frobenius::polyroots::{PolynomialCovering, DEFAULT_CLUSTER_RADIUS};
use frobenius::report::{CheckResult, Report};
use frobenius::ring::RingElem;
use frobenius::scalar::Backend;
use frobenius::suite::{run_acceptance_suite, SuiteConfig};
use frobenius::transfer::{
    check_transfer, check_transfer_consequences, kernel_triviality, poly_covering_numeric_check,
    poly_g, poly_transfer, TransferTriple,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ScalarChoice {
    Rational,
    Complex,
}

impl From<ScalarChoice> for Backend {
    fn from(c: ScalarChoice) -> Backend {
        match c {
            ScalarChoice::Rational => Backend::Rational,
            ScalarChoice::Complex => Backend::Complex,
        }
    }
}

#[derive(Parser)]
#[command(name = "frobenius", version, about = "Frobenius n-homomorphism, branched covering and transfer checks")]
struct Cli {
    /// Scalar backend for inputs that do not declare one.
    #[arg(long, global = true, value_enum, default_value = "rational")]
    scalar: ScalarChoice,

    /// Numeric tolerance on the complex backend.
    #[arg(long, global = true, default_value_t = SuiteConfig::default().epsilon)]
    epsilon: f64,

    /// Cap on the Frobenius order n.
    #[arg(long, global = true, default_value_t = Caps::default().max_n)]
    max_n: usize,

    /// Seed for property sweeps; fixed seed means byte-identical reports.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Write the report or covering JSON here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Write a DOT incidence diagram here.
    #[arg(long, global = true)]
    dot: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a linear map against Definition 1.1 at the claimed n.
    CheckFrobenius {
        /// JSON file: {"domain", "codomain", "matrix", "n"}.
        input: PathBuf,
        /// Claimed order; overrides the "n" field of the input.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Build a covering from an interval spec, a group action, or a polynomial.
    BuildCover {
        /// JSON file: {"n", "partitions"} | {"points", "generators"[, "subgroup"]}
        /// | {"coefficients"}.
        input: PathBuf,
    },
    /// Check Definition 3.1 axioms on a covering.
    CheckCover {
        /// JSON file: {"X", "Y", "h", "t", "n"}.
        input: PathBuf,
    },
    /// Check the three transfer axioms, the Prop 4.2 consequences, and
    /// kernel triviality.
    CheckTransfer {
        /// JSON file: {"domain", "codomain", "f", "tau", "n"} with f: domain
        /// -> codomain and tau: codomain -> domain.
        input: PathBuf,
    },
    /// Check a polynomial as an n-branched covering of the plane.
    PolyCover {
        /// JSON file: {"coefficients"[, "samples"]}.
        input: PathBuf,
    },
    /// Build the resolution space of a covering and check Thm 3.5.
    Resolve {
        /// JSON file: {"X", "Y", "h", "t", "n"}.
        input: PathBuf,
    },
    /// Run the full acceptance suite under the seed.
    Suite,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Parse(_) => 2,
        Error::CapExceeded { .. } | Error::CycleCapExceeded(_) => 3,
        _ => 1,
    }
}

fn read_json(path: &Path) -> Result<Value, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("malformed input: cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("malformed input: {e}")))
}

fn emit(cli: &Cli, text: &str) -> Result<(), Error> {
    match &cli.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::Invalid(format!("cannot write {}: {e}", path.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn emit_dot(cli: &Cli, dot: &str) -> Result<(), Error> {
    if let Some(path) = &cli.dot {
        std::fs::write(path, dot)
            .map_err(|e| Error::Invalid(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

fn finish(cli: &Cli, report: &Report) -> Result<ExitCode, Error> {
    emit(cli, &report.to_json())?;
    Ok(if report.pass() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn caps(cli: &Cli) -> Caps {
    Caps { max_n: cli.max_n, ..Caps::default() }
}

/// A check that runs a fallible computation: cap errors abort the run with
/// exit 3, every other error becomes a failing check with the error text as
/// witness.
fn checked(
    name: &str,
    run: impl FnOnce() -> Result<CheckResult, Error>,
) -> Result<CheckResult, Error> {
    match run() {
        Ok(result) => Ok(result),
        Err(e @ (Error::CapExceeded { .. } | Error::CycleCapExceeded(_) | Error::Parse(_))) => {
            Err(e)
        }
        Err(e) => Ok(CheckResult::failing(name, e.to_string())),
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    match &cli.command {
        Command::CheckFrobenius { input, n } => cmd_check_frobenius(cli, input, *n),
        Command::BuildCover { input } => cmd_build_cover(cli, input),
        Command::CheckCover { input } => cmd_check_cover(cli, input),
        Command::CheckTransfer { input } => cmd_check_transfer(cli, input),
        Command::PolyCover { input } => cmd_poly_cover(cli, input),
        Command::Resolve { input } => cmd_resolve(cli, input),
        Command::Suite => cmd_suite(cli),
    }
}

fn cmd_check_frobenius(cli: &Cli, input: &Path, n_flag: Option<usize>) -> Result<ExitCode, Error> {
    let value = read_json(input)?;
    let (map, n_json) = io::linear_map_from_json(&value, cli.epsilon)?;
    let n = n_flag
        .or(n_json)
        .ok_or_else(|| Error::Parse("malformed input: claimed n missing (field or --n)".into()))?;
    let caps = caps(cli);
    let mut report = Report::new("check-frobenius");

    report.add(checked("frobenius-definition", || {
        let fr = is_frobenius(&map, n, &caps)?;
        Ok(if fr.pass() {
            CheckResult::passing("frobenius-definition", Some(format!("f(1) = {n}, Phi_{} = 0", n + 1)))
        } else if !fr.unit_ok {
            CheckResult::failing("frobenius-definition", "f(1)")
        } else {
            CheckResult::failing(
                "frobenius-definition",
                format!("Phi_{} != 0 at basis multiset {:?}", n + 1, fr.vanishing_witness.unwrap()),
            )
        })
    })?);

    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let mut random_element = |map: &LinearMap| {
        let coords: Vec<i64> = (0..map.domain().dim()).map(|_| rng.gen_range(-3..=3)).collect();
        map.domain().element_from_ints(&coords)
    };

    report.add(checked("engine-agreement", || {
        for trial in 0..20 {
            let args: Vec<_> = (0..n).map(|_| random_element(&map)).collect();
            if phi_cycle_sum(&map, &args)? != phi_recursive(&map, &args)? {
                return Ok(CheckResult::failing("engine-agreement", format!("trial {trial}: cycle vs recursive")));
            }
            let a = random_element(&map);
            if phi_diagonal_determinant(&map, n, &a)? != phi_recursive(&map, &vec![a; n])? {
                return Ok(CheckResult::failing("engine-agreement", format!("trial {trial}: determinant vs recursive")));
            }
        }
        Ok(CheckResult::passing("engine-agreement", Some("20 trials, three engines".into())))
    })?);

    report.add(checked("unit-product-rule", || {
        // Phi_{n+1}(f)(a, 1, .., 1) = f(a) prod_{j<=n} (f(1) - j), any f
        let one = map.domain().unit_element();
        let f1 = map.apply(&one)?;
        for trial in 0..20 {
            let a = random_element(&map);
            let mut args = vec![a.clone()];
            args.extend(std::iter::repeat(one.clone()).take(n));
            let mut rhs = map.apply(&a)?;
            for j in 1..=n as i64 {
                rhs = rhs.mul_ref(&f1.sub(&map.codomain().unit_element().scale_int(j))?);
            }
            if phi_recursive(&map, &args)? != rhs {
                return Ok(CheckResult::failing("unit-product-rule", format!("trial {trial}")));
            }
        }
        Ok(CheckResult::passing("unit-product-rule", Some("20 trials".into())))
    })?);

    report.add(checked("series-identity", || {
        let a = random_element(&map);
        Ok(match series_identity_check(&map, n, &a, 2 * n + 2)? {
            None => CheckResult::passing("series-identity", Some(format!("order {}", 2 * n + 2))),
            Some(q) => CheckResult::failing("series-identity", format!("first differing coefficient q = {q}")),
        })
    })?);

    finish(cli, &report)
}

fn cmd_build_cover(cli: &Cli, input: &Path) -> Result<ExitCode, Error> {
    let value = read_json(input)?;
    let obj = value
        .as_object()
        .ok_or_else(|| Error::Parse("malformed input: spec must be an object".into()))?;

    if obj.contains_key("partitions") {
        let spec: IntervalCoveringSpec = serde_json::from_value(value.clone())
            .map_err(|e| Error::Parse(format!("malformed input: {e}")))?;
        let ic = build_interval_covering(&spec)?;
        let axioms = check_covering(&ic.covering);
        if !axioms.pass() {
            return Err(Error::Invalid(format!("built covering fails axioms: {axioms:?}")));
        }
        emit_dot(cli, &ic.covering.to_dot())?;
        emit(cli, &serde_json::to_string_pretty(&io::covering_to_json(&ic.covering)).unwrap())?;
        return Ok(ExitCode::SUCCESS);
    }

    if obj.contains_key("points") {
        let points: Vec<String> = serde_json::from_value(obj["points"].clone())
            .map_err(|e| Error::Parse(format!("malformed input: points: {e}")))?;
        let generators: Vec<Vec<usize>> = serde_json::from_value(
            obj.get("generators")
                .cloned()
                .ok_or_else(|| Error::Parse("malformed input: generators missing".into()))?,
        )
        .map_err(|e| Error::Parse(format!("malformed input: generators: {e}")))?;
        let action = PermutationAction::from_generators(points, generators)?;
        let covering = match obj.get("subgroup") {
            Some(sub) => {
                let subgroup: Vec<Vec<usize>> = serde_json::from_value(sub.clone())
                    .map_err(|e| Error::Parse(format!("malformed input: subgroup: {e}")))?;
                subgroup_quotient_covering(&action, &subgroup)?
            }
            None => group_quotient_covering(&action)?,
        };
        let axioms = check_covering(&covering);
        if !axioms.pass() {
            return Err(Error::Invalid(format!("built covering fails axioms: {axioms:?}")));
        }
        emit_dot(cli, &covering.to_dot())?;
        emit(cli, &serde_json::to_string_pretty(&io::covering_to_json(&covering)).unwrap())?;
        return Ok(ExitCode::SUCCESS);
    }

    if obj.contains_key("coefficients") {
        let p = io::polynomial_from_json(&value, Backend::Complex, cli.epsilon)?;
        let pc = PolynomialCovering::new(p, cli.epsilon, DEFAULT_CLUSTER_RADIUS)?;
        let g = poly_g(&pc.p)?;
        let out = serde_json::json!({
            "kind": "polynomial",
            "n": pc.n(),
            "coefficients": pc.p.coeffs().iter().map(io::scalar_to_json).collect::<Vec<_>>(),
            "g": g.coeffs().iter().map(io::scalar_to_json).collect::<Vec<_>>(),
        });
        emit(cli, &serde_json::to_string_pretty(&out).unwrap())?;
        return Ok(ExitCode::SUCCESS);
    }

    Err(Error::Parse(
        "malformed input: expected an interval spec (partitions), a group action (points), or a polynomial (coefficients)".into(),
    ))
}

fn covering_checks(c: &FiniteCovering, report: &mut Report) {
    let axioms = check_covering(c);
    report.add(CheckResult::from_outcome(
        "fiber-degree",
        axioms.degree_witness.is_none(),
        format!("fiber over {:?} does not total n", axioms.degree_witness),
    ));
    report.add(CheckResult::from_outcome(
        "axiom-i-sheet-in-own-fiber",
        axioms.axiom_i_witness.is_none(),
        format!("sheet {:?} missing from its fiber", axioms.axiom_i_witness),
    ));
    report.add(CheckResult::from_outcome(
        "axiom-ii-pushforward",
        axioms.axiom_ii_witness.is_none(),
        format!("Sym^n(h)(t(y)) != n*y at {:?}", axioms.axiom_ii_witness),
    ));
}

fn cmd_check_cover(cli: &Cli, input: &Path) -> Result<ExitCode, Error> {
    let c = io::covering_from_json(&read_json(input)?)?;
    emit_dot(cli, &c.to_dot())?;
    let mut report = Report::new("check-cover");
    covering_checks(&c, &mut report);
    finish(cli, &report)
}

fn cmd_check_transfer(cli: &Cli, input: &Path) -> Result<ExitCode, Error> {
    let value = read_json(input)?;
    let obj = value
        .as_object()
        .ok_or_else(|| Error::Parse("malformed input: transfer input must be an object".into()))?;
    let get = |key: &str| {
        obj.get(key).ok_or_else(|| Error::Parse(format!("malformed input: {key} missing")))
    };
    let a = io::algebra_from_json(get("domain")?, cli.epsilon)?;
    let b = io::algebra_from_json(get("codomain")?, cli.epsilon)?;
    let f = LinearMap::new(a.clone(), b.clone(), io::matrix_from_json(get("f")?, a.backend(), cli.epsilon)?)?;
    let tau = LinearMap::new(b, a, io::matrix_from_json(get("tau")?, f.domain().backend(), cli.epsilon)?)?;
    let n = get("n")?
        .as_u64()
        .ok_or_else(|| Error::Parse("malformed input: n must be a nonnegative integer".into()))?
        as usize;
    let tt = TransferTriple::new(f, tau, n)?;
    let caps = caps(cli);
    let mut report = Report::new("check-transfer");

    report.add(checked("transfer-axioms", || {
        let tr = check_transfer(&tt, &caps)?;
        Ok(if tr.pass() {
            CheckResult::passing("transfer-axioms", Some(format!("tau Frobenius {n}; module map; g Frobenius {}", n - 1)))
        } else if !tr.tau_frobenius.pass() {
            CheckResult::failing("transfer-axioms", format!("tau: {:?}", tr.tau_frobenius))
        } else if let Some((i, j)) = tr.module_witness {
            CheckResult::failing("transfer-axioms", format!("module condition fails at ({i}, {j})"))
        } else {
            CheckResult::failing("transfer-axioms", format!("g: {:?}", tr.g_frobenius))
        })
    })?);

    report.add(checked("transfer-consequences", || {
        let cr = check_transfer_consequences(&tt)?;
        Ok(CheckResult::from_outcome("transfer-consequences", cr.pass(), format!("{cr:?}")))
    })?);

    report.add(checked("kernel-triviality", || {
        let kr = kernel_triviality(&tt)?;
        Ok(CheckResult::from_outcome(
            "kernel-triviality",
            kr.pass(),
            format!("kernel dimension {}", kr.kernel_dim),
        ))
    })?);

    finish(cli, &report)
}

fn cmd_poly_cover(cli: &Cli, input: &Path) -> Result<ExitCode, Error> {
    let value = read_json(input)?;
    let p = io::polynomial_from_json(&value, cli.scalar.into(), cli.epsilon)?;
    let pc = PolynomialCovering::new(p, cli.epsilon.max(1e-12), DEFAULT_CLUSTER_RADIUS)?;
    let samples = match value.get("samples") {
        Some(v) => io::complex_samples_from_json(v)?,
        None => {
            let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
            (0..50)
                .map(|_| Complex64::new(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0)))
                .collect()
        }
    };
    let mut report = Report::new("poly-cover");

    report.add(checked("symbolic-transfer", || {
        let tau = poly_transfer(&pc.p, pc.n())?;
        let printed: Vec<String> = tau
            .iter()
            .enumerate()
            .map(|(q, s)| {
                let coeffs: Vec<String> =
                    s.coeffs().iter().map(|c| c.to_string()).collect();
                format!("tau(z^{q}) coeffs in w: [{}]", coeffs.join(", "))
            })
            .collect();
        Ok(CheckResult::passing("symbolic-transfer", Some(printed.join("; "))))
    })?);

    report.add(checked("numeric-fibers", || {
        let pr = poly_covering_numeric_check(&pc, &samples, cli.epsilon)?;
        Ok(match pr.witness {
            None => CheckResult::passing("numeric-fibers", Some(format!("{} samples", pr.samples))),
            Some(w) => CheckResult::failing("numeric-fibers", w),
        })
    })?);

    finish(cli, &report)
}

fn cmd_resolve(cli: &Cli, input: &Path) -> Result<ExitCode, Error> {
    let c = io::covering_from_json(&read_json(input)?)?;
    emit_dot(cli, &c.to_dot())?;
    let resolution = resolve_covering(&c)?;
    let rr = resolution.check();
    let mut report = Report::new("resolve");
    report.add(CheckResult::from_outcome(
        "fiber-sizes",
        rr.fiber_sizes_ok,
        "some fiber of E -> Y misses n!/prod(mult!)",
    ));
    let orbits = CheckResult {
        check: "orbit-counts".into(),
        pass: rr.orbits_on_e == rr.base_points && rr.orbits_on_pairs == rr.sheets,
        witness: if rr.orbits_on_e == rr.base_points && rr.orbits_on_pairs == rr.sheets {
            None
        } else {
            Some(format!(
                "E/Sigma_n = {} (|Y| = {}), E x_Sigma [n] = {} (|X| = {})",
                rr.orbits_on_e, rr.base_points, rr.orbits_on_pairs, rr.sheets
            ))
        },
        value: Some(format!("|E| = {}", resolution.elements.len())),
        elapsed: std::time::Duration::ZERO,
    };
    report.add(orbits);
    report.add(CheckResult::from_outcome(
        "evaluation-bijective",
        rr.evaluation_bijective,
        "evaluation is not constant on orbits or not bijective onto X",
    ));
    finish(cli, &report)
}

fn cmd_suite(cli: &Cli) -> Result<ExitCode, Error> {
    let cfg = SuiteConfig { seed: cli.seed, caps: caps(cli), epsilon: cli.epsilon };
    let report = run_acceptance_suite(&cfg);
    finish(cli, &report)
}
