//! Command-line front end: standardization checks, Hilbert series reports,
//! Gröbner basis output and the verification harness.
//!
//! Exit codes: 0 success, 1 I/O or parse error, 2 not standardizable,
//! 3 verification failure.

mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use cover_algebra::complex::{order_complex, FVector};
use cover_algebra::lattice::minimal_covers_bruteforce;
use cover_algebra::series::{
    h_polynomial_from, multiplicity_routes_from, vertex_cover_series_from,
};
use cover_algebra::toric::{
    buchberger_verify, groebner_basis, hilbert_function_direct, initial_ideal,
    monomial_quotient_series, stanley_reisner_check,
};
use cover_algebra::{
    build_lattice, check_gorenstein_symmetry, cm_reduce, knn_series, lattice_embedding,
    multiplicity_bounds, standardize, BipartiteGraph, CoverLattice, GraphError, Standardized,
    SubsetSweep,
};

use report::{
    json_int, BinomialOut, CheckOutcome, CheckReport, GraphEcho, GroebnerReport, HilbertReport,
    LatticeOut, RelabelingOut, VerifyReport, ELEMENT_DUMP_CAP,
};

/// Rank computation scans element pairs; lattices beyond this are refused.
const RANK_LATTICE_CAP: usize = 8192;

#[derive(Parser)]
#[command(
    name = "coveralg",
    version,
    about = "Cover lattices, Hilbert series and toric Gröbner bases of unmixed bipartite graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and standardize a graph; report unmixed/Cohen-Macaulay verdicts
    Check(CommonOpts),
    /// Hilbert series, h-vector, multiplicity and sharp bounds
    Hilbert(CommonOpts),
    /// Reduced Gröbner basis of the toric ideal
    Groebner(CommonOpts),
    /// Run the verification harness (exit 0 iff all checks pass)
    Verify(VerifyOpts),
}

#[derive(Args)]
struct CommonOpts {
    /// Graph file in the JSON format {"n": N, "edges": [[i, j], ...]}
    path: PathBuf,
    /// Machine-readable JSON output
    #[arg(long, conflicts_with = "text")]
    json: bool,
    /// Human-readable text output (default)
    #[arg(long)]
    text: bool,
    /// Worker threads (default: available parallelism)
    #[arg(long)]
    threads: Option<usize>,
    /// Cap on n for the subset-sweep series formulas
    #[arg(long, default_value_t = 12)]
    max_n: usize,
    /// Degree cap for the direct Hilbert function spot checks
    #[arg(long, default_value_t = 6)]
    max_degree: usize,
    /// Drop vertex pairs isolated on both sides before standardizing
    #[arg(long)]
    drop_isolated: bool,
}

#[derive(Args)]
struct VerifyOpts {
    #[command(flatten)]
    common: CommonOpts,
    /// fast: algebraic identities only; full: adds Buchberger, the
    /// initial-ideal series oracle and direct coefficient counting
    #[arg(long, value_enum, default_value_t = Level::Full)]
    level: Level,
    /// Test hook: delete one basis element before verification
    #[arg(long, hide = true)]
    inject_corrupt_basis: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Level {
    Fast,
    Full,
}

enum CliError {
    /// I/O, parse or limit problems: exit 1.
    Input(String),
    /// Standardization impossible: exit 2.
    Standardize(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 1,
            CliError::Standardize(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Standardize(m) => m,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check(opts) => run_check(&opts),
        Command::Hilbert(opts) => run_hilbert(&opts),
        Command::Groebner(opts) => run_groebner(&opts),
        Command::Verify(opts) => run_verify(&opts),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {}", err.message());
            ExitCode::from(err.exit_code())
        }
    }
}

struct Loaded {
    input: BipartiteGraph,
    dropped_pairs: Option<Vec<usize>>,
    standardized: Standardized,
}

fn load(opts: &CommonOpts) -> Result<Loaded, CliError> {
    if let Some(threads) = opts.threads {
        // Ignore failure: the pool can only be initialized once per process.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    let text = std::fs::read_to_string(&opts.path)
        .map_err(|e| CliError::Input(format!("{}: {e}", opts.path.display())))?;
    let parsed = BipartiteGraph::from_json(&text).map_err(|e| CliError::Input(e.to_string()))?;
    let (input, dropped_pairs) = if opts.drop_isolated {
        let (reduced, dropped) = parsed
            .drop_isolated_pairs()
            .map_err(|e| CliError::Input(e.to_string()))?;
        if !dropped.is_empty() {
            eprintln!(
                "warning: dropped isolated pairs {:?}",
                dropped.iter().map(|&i| i + 1).collect::<Vec<_>>()
            );
        }
        let still_isolated = reduced.isolated_vertices();
        if !still_isolated.is_empty() {
            eprintln!(
                "warning: vertices {} are isolated on one side only and cannot be dropped",
                still_isolated.join(", ")
            );
        }
        (reduced, Some(dropped))
    } else {
        (parsed, None)
    };
    let standardized = standardize(&input).map_err(|e| match e {
        GraphError::NoPerfectMatching(_) | GraphError::NotStandardizable { .. } => {
            CliError::Standardize(e.to_string())
        }
        other => CliError::Input(other.to_string()),
    })?;
    Ok(Loaded {
        input,
        dropped_pairs: dropped_pairs
            .map(|d| d.iter().map(|&i| i + 1).collect::<Vec<usize>>())
            .filter(|d: &Vec<usize>| !d.is_empty()),
        standardized,
    })
}

fn lattice_out(lattice: &CoverLattice) -> Result<LatticeOut, CliError> {
    if lattice.len() > RANK_LATTICE_CAP {
        return Err(CliError::Input(format!(
            "lattice has {} elements, beyond the rank computation cap {RANK_LATTICE_CAP}",
            lattice.len()
        )));
    }
    let rank = lattice.rank().map_err(|e| CliError::Input(e.to_string()))?;
    let elements = (lattice.len() <= ELEMENT_DUMP_CAP).then(|| {
        lattice
            .element_lists()
            .into_iter()
            .map(|l| l.into_iter().map(|i| i + 1).collect())
            .collect()
    });
    Ok(LatticeOut {
        size: lattice.len(),
        rank,
        elements,
    })
}

fn build_check_report(loaded: &Loaded) -> Result<CheckReport, CliError> {
    let g = &loaded.standardized.graph;
    let lattice = build_lattice(g).map_err(|e| CliError::Input(e.to_string()))?;
    let lat_out = lattice_out(&lattice)?;
    Ok(CheckReport {
        n: g.n(),
        input: GraphEcho::from_graph(&loaded.input),
        dropped_pairs: loaded.dropped_pairs.clone(),
        relabeling: RelabelingOut::from_relabeling(&loaded.standardized.relabeling),
        standardized: GraphEcho::from_graph(g.as_graph()),
        unmixed: true,
        cohen_macaulay: lat_out.rank == g.n(),
        lattice: lat_out,
    })
}

fn run_check(opts: &CommonOpts) -> Result<u8, CliError> {
    let loaded = load(opts)?;
    let report = build_check_report(&loaded)?;
    if opts.json {
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        println!("n: {}", report.n);
        if let Some(dropped) = &report.dropped_pairs {
            println!("dropped pairs: {dropped:?}");
        }
        println!(
            "relabeling: x {:?}, y {:?}",
            report.relabeling.x, report.relabeling.y
        );
        println!("unmixed: {}", report.unmixed);
        println!("cohen_macaulay: {}", report.cohen_macaulay);
        println!("lattice size: {}", report.lattice.size);
        println!("lattice rank: {}", report.lattice.rank);
    }
    Ok(0)
}

fn run_hilbert(opts: &CommonOpts) -> Result<u8, CliError> {
    let loaded = load(opts)?;
    let g = &loaded.standardized.graph;
    let n = g.n();
    let sweep =
        SubsetSweep::compute(g, opts.max_n).map_err(|e| CliError::Input(e.to_string()))?;
    let series = vertex_cover_series_from(&sweep);
    let h = h_polynomial_from(&sweep);
    if series.numer() != &h {
        // The two formula routes disagreeing means a broken build, not bad
        // input; surface it as a verification failure.
        eprintln!("error: series numerator and h-polynomial disagree");
        return Ok(3);
    }
    let lattice = build_lattice(g).map_err(|e| CliError::Input(e.to_string()))?;
    let lat_out = lattice_out(&lattice)?;
    let complex = order_complex(&lattice).map_err(|e| CliError::Input(e.to_string()))?;
    let fv = FVector::from_complex(&complex);
    let (lo, hi) = multiplicity_bounds(n);
    let report = HilbertReport {
        n,
        input: GraphEcho::from_graph(&loaded.input),
        dropped_pairs: loaded.dropped_pairs.clone(),
        relabeling: RelabelingOut::from_relabeling(&loaded.standardized.relabeling),
        cohen_macaulay: lat_out.rank == n,
        lattice: lat_out,
        f_vector: fv.f.iter().map(json_int).collect(),
        h: (0..=n).map(|i| json_int(&h.coeff(i))).collect(),
        denom_power: series.denom_pow(),
        series: series.to_string(),
        multiplicity: json_int(&h.eval_one()),
        bounds: [json_int(&lo), json_int(&hi)],
        knn: series == knn_series(n),
        gorenstein_symmetric: check_gorenstein_symmetry(&h, n),
        a_invariant: -(n as i64) - 1,
    };
    if opts.json {
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        println!("n: {}", report.n);
        println!("series: {}", report.series);
        println!("h: {}", serde_json::to_string(&report.h).unwrap());
        println!("denom_power: {}", report.denom_power);
        println!(
            "multiplicity: {} (bounds {} ..= {})",
            report.multiplicity, report.bounds[0], report.bounds[1]
        );
        println!("cohen_macaulay: {}", report.cohen_macaulay);
        println!("knn: {}", report.knn);
        println!("gorenstein_symmetric: {}", report.gorenstein_symmetric);
        println!("a_invariant: {}", report.a_invariant);
    }
    Ok(0)
}

fn run_groebner(opts: &CommonOpts) -> Result<u8, CliError> {
    let loaded = load(opts)?;
    let g = &loaded.standardized.graph;
    let lattice = build_lattice(g).map_err(|e| CliError::Input(e.to_string()))?;
    let gb = groebner_basis(&lattice);
    if opts.json {
        let lat_out = lattice_out(&lattice)?;
        let report = GroebnerReport {
            n: g.n(),
            input: GraphEcho::from_graph(&loaded.input),
            relabeling: RelabelingOut::from_relabeling(&loaded.standardized.relabeling),
            lattice: LatticeOut {
                elements: Some(
                    lattice
                        .element_lists()
                        .into_iter()
                        .map(|l| l.into_iter().map(|i| i + 1).collect())
                        .collect(),
                ),
                ..lat_out
            },
            binomials: gb
                .binomials
                .iter()
                .map(|b| BinomialOut {
                    lead: gb.ring.fmt_monomial(&b.lead),
                    trail: gb.ring.fmt_monomial(&b.trail),
                })
                .collect(),
        };
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        println!("{}", gb.to_text());
    }
    Ok(0)
}

fn run_verify(opts: &VerifyOpts) -> Result<u8, CliError> {
    let common = &opts.common;
    let loaded = load(common)?;
    let g = &loaded.standardized.graph;
    let n = g.n();
    let mut checks: Vec<CheckOutcome> = Vec::new();
    let mut record = |name: &'static str, passed: bool, detail: String| {
        checks.push(CheckOutcome {
            name,
            passed,
            detail,
        });
    };

    let sweep =
        SubsetSweep::compute(g, common.max_n).map_err(|e| CliError::Input(e.to_string()))?;
    let series = vertex_cover_series_from(&sweep);
    let h = h_polynomial_from(&sweep);
    record(
        "series_formula_consistency",
        series.numer() == &h && series.denom_pow() == 2 * n + 1,
        format!("series {series}"),
    );

    let routes = multiplicity_routes_from(&sweep);
    record(
        "multiplicity_routes",
        routes[0] == routes[1] && routes[1] == routes[2],
        format!(
            "h(1) = {}, CM subset sum = {}, chain-count sum = {}",
            routes[0], routes[1], routes[2]
        ),
    );

    let (lo, hi) = multiplicity_bounds(n);
    let lattice = build_lattice(g).map_err(|e| CliError::Input(e.to_string()))?;
    let e = routes[0].clone();
    let bounds_ok = lo <= e
        && e <= hi
        && ((e == lo) == (lattice.len() == 2))
        && ((e == hi) == (lattice.len() == (1usize << n)));
    record(
        "multiplicity_bounds",
        bounds_ok,
        format!("{lo} <= {e} <= {hi}"),
    );

    record(
        "gorenstein_symmetry",
        check_gorenstein_symmetry(&h, n),
        format!("h = {h}"),
    );

    let mut hf_ok = true;
    for mask in 1u64..(1 << n) {
        let hf = sweep.h_poly_of(mask);
        let r = sweep.rank_of(mask);
        if hf.coeff(r) != BigInt::from(0) || hf.coeff(r + 1) != BigInt::from(0) {
            hf_ok = false;
        }
    }
    record(
        "subset_h_vanishing",
        hf_ok,
        "h^F zero at rank and rank+1 for every nonempty F".into(),
    );

    record(
        "knn_characterization",
        (series == knn_series(n)) == (lattice.len() == 2),
        format!("lattice size {}", lattice.len()),
    );

    record(
        "stanley_reisner",
        stanley_reisner_check(&lattice),
        "incomparable pairs generate the Stanley-Reisner ideal".into(),
    );

    if 2 * n <= cover_algebra::DEFAULT_COVER_ENUM_LIMIT {
        let covers = minimal_covers_bruteforce(g.as_graph(), cover_algebra::DEFAULT_COVER_ENUM_LIMIT)
            .map_err(|e| CliError::Input(e.to_string()))?;
        let mut image: Vec<u64> = covers
            .iter()
            .map(|&c| c & ((1u64 << n) - 1))
            .collect();
        image.sort_unstable();
        let mut elems = lattice.elements().to_vec();
        elems.sort_unstable();
        record(
            "lattice_cover_image",
            image == elems,
            format!("{} minimal covers", covers.len()),
        );
    }

    match cm_reduce(g) {
        Ok(reduction) => {
            let sub_ok = build_lattice(&reduction.subgraph)
                .and_then(|l| l.rank().map_err(Into::into))
                .map(|r| r == reduction.subset.len())
                .unwrap_or(false);
            let nu_ok = lattice_embedding(g, &reduction.subset)
                .map(|m| m.is_isomorphism)
                .unwrap_or(false);
            record(
                "cm_reduction",
                sub_ok && nu_ok,
                format!(
                    "F = {:?}",
                    reduction.subset.iter().map(|&i| i + 1).collect::<Vec<_>>()
                ),
            );
        }
        Err(e) => record("cm_reduction", false, e.to_string()),
    }

    if opts.level == Level::Full {
        let mut gb = groebner_basis(&lattice);
        if opts.inject_corrupt_basis {
            gb.binomials.pop();
            eprintln!("warning: test hook removed one basis binomial");
        }
        match buchberger_verify(&gb, cover_algebra::DEFAULT_BUCHBERGER_MAX_LATTICE) {
            Ok(ok) => record(
                "buchberger",
                ok,
                format!("{} binomials, S-pair reduction and reducedness", gb.binomials.len()),
            ),
            Err(e) => record("buchberger", true, format!("skipped: {e}")),
        }

        let init = initial_ideal(&gb);
        let init_series = monomial_quotient_series(gb.ring.num_vars(), &init);
        record(
            "initial_ideal_series",
            init_series == series,
            format!("initial ideal: {} generators", init.len()),
        );

        if n <= cover_algebra::DEFAULT_DIRECT_MAX_N {
            let depth = common.max_degree.min(if n == 4 { 4 } else { 6 });
            let coeffs = series.expand(depth + 1);
            let mut ok = true;
            for (d, coeff) in coeffs.iter().enumerate() {
                match hilbert_function_direct(g, d, cover_algebra::DEFAULT_DIRECT_MAX_N, depth) {
                    Ok(count) => {
                        if &count != coeff {
                            ok = false;
                        }
                    }
                    Err(e) => {
                        record("direct_count", false, e.to_string());
                        ok = false;
                        break;
                    }
                }
            }
            record(
                "direct_count",
                ok,
                format!("degrees 0..={depth} match the series expansion"),
            );
        }
    }

    let passed = checks.iter().all(|c| c.passed);
    let report = VerifyReport {
        n,
        input: GraphEcho::from_graph(&loaded.input),
        level: match opts.level {
            Level::Fast => "fast".into(),
            Level::Full => "full".into(),
        },
        checks,
        passed,
    };
    if common.json {
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        for c in &report.checks {
            println!(
                "{}: {} ({})",
                c.name,
                if c.passed { "pass" } else { "FAIL" },
                c.detail
            );
        }
        println!("verdict: {}", if report.passed { "pass" } else { "FAIL" });
    }
    Ok(if report.passed { 0 } else { 3 })
}
