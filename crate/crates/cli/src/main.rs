//! `foliage`: characteristic numbers, singularity counts, degree bounds and
//! example verification from the command line.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use foliage_core::bounds::{self, Threshold};
use foliage_core::chern::{self, CompleteIntersectionSpec, FoliationDegree};
use foliage_core::identities;
use foliage_core::invariants;
use foliage_core::verifier::{self, Example, FieldFile, SolveOptions, VerificationReport, AFFINE};
use foliage_core::{BigInt, BigRational, Error};
use serde_json::{json, Value};

const EXIT_VALIDATION: u8 = 2;
const EXIT_MISMATCH: u8 = 3;

#[derive(Parser)]
#[command(
    name = "foliage",
    version,
    about = "Characteristic numbers of complete intersections and invariant foliations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(
        long,
        global = true,
        value_enum,
        default_value = "table",
        env = "FOLIAGE_FORMAT"
    )]
    format: Format,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true, env = "FOLIAGE_OUTPUT")]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Args, Clone)]
struct SpecArgs {
    /// Dimension of the ambient projective space.
    #[arg(short = 'n', env = "FOLIAGE_N")]
    n: u32,
    /// Degrees of the defining equations, comma separated.
    #[arg(
        short = 'D',
        value_delimiter = ',',
        required = true,
        env = "FOLIAGE_DEGREES"
    )]
    degrees: Vec<u32>,
}

impl SpecArgs {
    fn spec(&self) -> Result<CompleteIntersectionSpec, Error> {
        CompleteIntersectionSpec::new(self.n, self.degrees.clone())
    }
}

#[derive(Args, Clone)]
struct SolverArgs {
    #[arg(long, default_value_t = 0, env = "FOLIAGE_SEED")]
    seed: u64,
    #[arg(long, default_value_t = 1e-10, env = "FOLIAGE_TOL_RESIDUAL")]
    tol_residual: f64,
    #[arg(long, default_value_t = 1e-6, env = "FOLIAGE_TOL_DEDUP")]
    tol_dedup: f64,
    #[arg(long, default_value_t = 1e-8, env = "FOLIAGE_TOL_RANK")]
    tol_rank: f64,
    /// Random starts per affine chart in the first round.
    #[arg(long, default_value_t = 200, env = "FOLIAGE_STARTS")]
    starts: usize,
    /// Rounds of doubling the starts while fewer points than predicted are found.
    #[arg(long, default_value_t = 4, env = "FOLIAGE_MAX_ROUNDS")]
    max_rounds: usize,
}

impl SolverArgs {
    fn options(&self) -> SolveOptions {
        SolveOptions {
            starts_per_chart: self.starts,
            seed: self.seed,
            tol_residual: self.tol_residual,
            tol_dedup: self.tol_dedup,
            tol_rank: self.tol_rank,
            max_rounds: self.max_rounds,
            ..SolveOptions::default()
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Euler characteristic and those of successive hyperplane sections.
    Chi {
        #[command(flatten)]
        spec: SpecArgs,
        /// Only the section cut by this many hyperplanes.
        #[arg(short = 'q')]
        q: Option<u32>,
    },
    /// Polar classes by both routes.
    Polar(SpecArgs),
    /// Singularity count by the Wronski, Euler and Chern forms.
    Count {
        #[command(flatten)]
        spec: SpecArgs,
        /// Foliation degree.
        #[arg(short = 'd', env = "FOLIAGE_D")]
        d: i64,
    },
    /// Degree-bound diagnostics; with -d, feasibility of that foliation degree.
    Bound {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(short = 'd', env = "FOLIAGE_D")]
        d: Option<i64>,
    },
    /// Verify one of the built-in examples.
    VerifyExample {
        /// 1: Fermat hypersurface, 2: elliptic quartic.
        #[arg(value_parser = clap::value_parser!(u8).range(1..=2))]
        which: u8,
        /// Example 1 lives in P^{2n}.
        #[arg(short = 'n', default_value_t = 1)]
        half_dim: u32,
        /// Degree of the hypersurface for example 1.
        #[arg(long, default_value_t = 3)]
        ell: u32,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Verify a field and variety read from a file.
    VerifyFile {
        path: PathBuf,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Exhaustive grid checks of the combinatorial identities.
    Identities,
}

struct Output {
    table: String,
    json: Value,
    ok: bool,
}

fn int(v: &BigInt) -> Value {
    Value::String(v.to_string())
}

fn ints(vs: &[BigInt]) -> Value {
    Value::Array(vs.iter().map(int).collect())
}

fn rat(v: &BigRational) -> Value {
    Value::String(v.to_string())
}

fn float(v: f64) -> Value {
    Value::String(format!("{v:.16e}"))
}

fn join(vs: &[BigInt]) -> String {
    vs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn run_chi(args: &SpecArgs, q: Option<u32>) -> Result<Output, Error> {
    let spec = args.spec()?;
    if let Some(q) = q {
        let v = chern::chi_section(&spec, q)?;
        return Ok(Output {
            table: format!("variety  {spec}\nq        {q}\nchi      {v}\n"),
            json: json!({ "n": spec.n(), "degrees": spec.degrees(), "q": q, "chi": int(&v) }),
            ok: true,
        });
    }
    let chi = chern::euler_char(&spec);
    let sections = chern::chi_sections(&spec);
    let classes = chern::chern_classes(&spec);
    Ok(Output {
        table: format!(
            "variety        {spec}\ndimension      {}\nchern classes  [{}]\nchi            {chi}\nchi sections   [{}]\n",
            spec.dim(),
            join(&classes),
            join(&sections)
        ),
        json: json!({
            "n": spec.n(),
            "degrees": spec.degrees(),
            "dimension": spec.dim(),
            "chern_classes": ints(&classes),
            "chi": int(&chi),
            "chi_sections": ints(&sections),
        }),
        ok: true,
    })
}

fn run_polar(args: &SpecArgs) -> Result<Output, Error> {
    let spec = args.spec()?;
    let st = invariants::polar_classes_severi_todd(&spec);
    let ch = invariants::polar_classes_via_chern(&spec);
    let agree = st == ch;
    Ok(Output {
        table: format!(
            "variety           {spec}\npolar (wronski)   [{}]\npolar (chern)     [{}]\nagree             {agree}\n",
            join(st.as_slice()),
            join(ch.as_slice())
        ),
        json: json!({
            "n": spec.n(),
            "degrees": spec.degrees(),
            "polar_wronski": ints(st.as_slice()),
            "polar_chern": ints(ch.as_slice()),
            "agree": agree,
        }),
        ok: agree,
    })
}

fn run_count(args: &SpecArgs, d: i64) -> Result<Output, Error> {
    let spec = args.spec()?;
    let d = FoliationDegree::new(d)?;
    let w = invariants::sing_count_wronski(&spec, d);
    let e = invariants::sing_count_euler(&spec, d);
    let c = chern::twisted_top_chern_count(&spec, d);
    let agree = w == e && e == c;
    Ok(Output {
        table: format!(
            "variety   {spec}\nd         {}\nwronski   {w}\neuler     {e}\nchern     {c}\nagree     {agree}\n",
            d.get()
        ),
        json: json!({
            "n": spec.n(),
            "degrees": spec.degrees(),
            "d": d.get(),
            "wronski": int(&w),
            "euler": int(&e),
            "chern": int(&c),
            "agree": agree,
        }),
        ok: agree,
    })
}

fn threshold(t: &Threshold) -> (String, Value) {
    match t {
        Threshold::Vacuous => ("vacuous".into(), Value::Null),
        Threshold::Value(v) => (v.to_string(), rat(v)),
    }
}

fn run_bound(args: &SpecArgs, d: Option<i64>) -> Result<Output, Error> {
    let spec = args.spec()?;
    let alpha = bounds::alpha(&spec)?;
    let beta = bounds::beta(&spec)?;
    let (thr_s, thr_j) = threshold(&bounds::lemma2_threshold(&spec)?);
    let parity = bounds::Parity::of(spec.dim());
    let min_degree = bounds::theorem2_min_degree(&spec).ok();
    let mut table = String::new();
    let _ = writeln!(table, "variety            {spec}");
    let _ = writeln!(table, "dimension          {} ({parity})", spec.dim());
    let _ = writeln!(table, "alpha              {alpha}");
    let _ = writeln!(table, "beta               {}", beta.value);
    if !beta.skipped.is_empty() {
        let _ = writeln!(table, "beta skipped j     {:?}", beta.skipped);
    }
    let _ = writeln!(table, "threshold          {thr_s}");
    match min_degree {
        Some(m) => {
            let _ = writeln!(table, "min degree         {m}");
        }
        None => {
            let _ = writeln!(table, "min degree         not applicable (even dimension)");
        }
    }
    let mut json = json!({
        "n": spec.n(),
        "degrees": spec.degrees(),
        "dimension": spec.dim(),
        "parity": parity.to_string(),
        "alpha": rat(&alpha),
        "beta": rat(&beta.value),
        "beta_skipped": beta.skipped,
        "lemma2_threshold": thr_j,
        "min_degree": min_degree,
    });
    if let Some(d) = d {
        let d = FoliationDegree::new(d)?;
        let r = bounds::feasibility_report(&spec, d)?;
        let _ = writeln!(table, "d                  {}", r.d);
        let _ = writeln!(table, "count              {}", r.count);
        if let Some(p) = r.passes {
            let _ = writeln!(table, "d >= min degree    {p}");
        }
        let mut f = json!({
            "d": r.d,
            "count": int(&r.count),
            "count_positive": r.count_positive(),
            "passes": r.passes,
        });
        if spec.codim() == 1 && r.applicable {
            let b = bounds::hypersurface_degree_bound(d);
            let _ = writeln!(table, "hypersurface bound {b}");
            f["hypersurface_degree_bound"] = int(&b);
        }
        if spec.dim() == 1 {
            let b = bounds::curve_degree_bound(spec.n(), d)?;
            let _ = writeln!(table, "curve bound        {b}");
            f["curve_degree_bound"] = rat(&b);
        }
        json["feasibility"] = f;
    }
    Ok(Output {
        table,
        json,
        ok: true,
    })
}

fn complex_json(z: &verifier::solve::SingularPoint) -> Value {
    Value::Array(
        z.coords
            .iter()
            .map(|c| json!([float(c.re), float(c.im)]))
            .collect(),
    )
}

fn report_output(r: &VerificationReport) -> Output {
    let ok = r.passed();
    let mut table = String::new();
    let _ = writeln!(table, "variety          {}", r.spec);
    let _ = writeln!(table, "foliation degree {}", r.degree());
    let _ = writeln!(
        table,
        "g                {}",
        verifier::format_poly(&r.decomposition.g, AFFINE)
    );
    let _ = writeln!(table, "formula count    {}", r.formula_count);
    let _ = writeln!(table, "points found     {}", r.solve.count());
    let _ = writeln!(table, "on smooth part   {}", r.smooth_count());
    let _ = writeln!(table, "nondegenerate    {}", r.all_nondegenerate());
    let _ = writeln!(table, "max residual     {:.3e}", r.solve.max_residual());
    let _ = writeln!(table, "starts per chart {}", r.solve.starts_per_chart);
    for (i, row) in r.certificate.cofactors.iter().enumerate() {
        let cs: Vec<String> = row
            .iter()
            .map(|a| verifier::format_poly(a, AFFINE))
            .collect();
        let _ = writeln!(table, "cofactors F{}     [{}]", i + 1, cs.join("; "));
    }
    for p in &r.solve.points {
        let cs: Vec<String> = p
            .coords
            .iter()
            .map(|c| format!("{:+.9}{:+.9}i", c.re, c.im))
            .collect();
        let flag = if !p.on_smooth_part {
            "V singular"
        } else if p.nondegenerate {
            "nondegenerate"
        } else {
            "degenerate"
        };
        let _ = writeln!(
            table,
            "  ({})  res {:.1e}  {flag}",
            cs.join(" : "),
            p.residual
        );
    }
    for w in &r.solve.warnings {
        let _ = writeln!(table, "warning: {w}");
    }
    let _ = writeln!(
        table,
        "result           {}",
        if ok { "match" } else { "MISMATCH" }
    );
    let points: Vec<Value> = r
        .solve
        .points
        .iter()
        .map(|p| {
            json!({
                "coords": complex_json(p),
                "residual": float(p.residual),
                "nondegenerate": p.nondegenerate,
                "on_smooth_part": p.on_smooth_part,
                "found_in_charts": p.found_in_charts,
            })
        })
        .collect();
    let cofactors: Vec<Value> = r
        .certificate
        .cofactors
        .iter()
        .map(|row| {
            Value::Array(
                row.iter()
                    .map(|a| Value::String(verifier::format_poly(a, AFFINE)))
                    .collect(),
            )
        })
        .collect();
    let json = json!({
        "n": r.spec.n(),
        "degrees": r.spec.degrees(),
        "d": r.degree(),
        "g": verifier::format_poly(&r.decomposition.g, AFFINE),
        "formula_count": int(&r.formula_count),
        "count": r.solve.count(),
        "smooth_count": r.smooth_count(),
        "all_nondegenerate": r.all_nondegenerate(),
        "counts_match": r.counts_match(),
        "certificate": cofactors,
        "points": points,
        "warnings": r.solve.warnings,
        "starts_per_chart": r.solve.starts_per_chart,
        "max_residual": float(r.solve.max_residual()),
    });
    Output { table, json, ok }
}

fn run_verify_example(
    which: u8,
    half_dim: u32,
    ell: u32,
    solver: &SolverArgs,
) -> Result<Output, Error> {
    let ex: Example = match which {
        1 => verifier::example1(half_dim, ell)?,
        _ => verifier::example2(),
    };
    Ok(report_output(&verifier::verify_example(
        &ex,
        &solver.options(),
    )?))
}

fn run_verify_file(path: &PathBuf, solver: &SolverArgs) -> Result<Output, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidParameter(format!("{}: {e}", path.display())))?;
    let ff = FieldFile::parse(&text)?;
    Ok(report_output(&verifier::verify(
        &ff.field,
        &ff.variety,
        &solver.options(),
    )?))
}

fn run_identities() -> Output {
    let checks = identities::run_all();
    let mut table = String::new();
    let mut rows = Vec::new();
    for c in &checks {
        let _ = writeln!(
            table,
            "{} {:<55} checked {:>7}  violations {}",
            if c.passed() { "ok  " } else { "FAIL" },
            c.name,
            c.checked,
            c.violations.len()
        );
        rows.push(json!({
            "name": c.name,
            "checked": c.checked,
            "violations": c.violations,
        }));
    }
    let ok = checks.iter().all(|c| c.passed());
    Output {
        table,
        json: Value::Array(rows),
        ok,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Chi { spec, q } => run_chi(spec, *q),
        Command::Polar(s) => run_polar(s),
        Command::Count { spec, d } => run_count(spec, *d),
        Command::Bound { spec, d } => run_bound(spec, *d),
        Command::VerifyExample {
            which,
            half_dim,
            ell,
            solver,
        } => run_verify_example(*which, *half_dim, *ell, solver),
        Command::VerifyFile { path, solver } => run_verify_file(path, solver),
        Command::Identities => Ok(run_identities()),
    };
    let out = match result {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_VALIDATION);
        }
    };
    let text = match cli.format {
        Format::Table => out.table,
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&out.json).expect("serializable");
            s.push('\n');
            s
        }
    };
    match &cli.output {
        Some(p) => {
            if let Err(e) = std::fs::write(p, text) {
                eprintln!("error: {}: {e}", p.display());
                return ExitCode::from(EXIT_VALIDATION);
            }
        }
        None => print!("{text}"),
    }
    if out.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_MISMATCH)
    }
}
