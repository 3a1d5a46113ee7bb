//! The `dopekit` command line.
//!
//! Exit codes: 0 success or affirmative verdict, 1 negative verdict, 2 usage
//! or parse error, 3 domain error, 4 resource cap exceeded.

mod job;
mod render;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::json;

use dopekit::counting;
use dopekit::enumerate::{self, EnumOptions};
use dopekit::input::{parse_index_list, parse_lambda, parse_poly_and_lambda};
use dopekit::matroid::MatroidView;
use dopekit::{
    check_dope_conditions, dope_matrix_of, extend, gv_nonsingular, multiplicity_from_dope, poised_by_nullspace,
    polya_poised, signed_dope_matrix_of, witness_general, witness_two_row, DopeMatrix, Error, ExtensionPlan,
    NodeTuple, Realization,
};

use render::Table;

pub const DEFAULT_TABLE_LAMBDAS: [&str; 5] = ["0,1,sqrt(2)", "0,1,2", "0,1,3", "0,1,pi", "0,1,4"];

#[derive(Parser, Debug)]
#[command(name = "dopekit", version, about = "Exact computations with dope matrices of polynomials")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Worker threads for enumeration (output does not depend on it).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dope and multiplicity matrices of a polynomial at a node tuple.
    Dope {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        lambda: String,
        /// Also print the signed dope matrix.
        #[arg(long)]
        signed: bool,
    },
    /// Conditions E, R, C, T of a zero/one matrix and, when decidable, whether it is dope.
    Check {
        #[command(flatten)]
        matrix: MatrixArg,
        /// Decide membership at this tuple.
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Number of dope matrices for several node tuples and n = 0..=n_max.
    Table {
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        /// Node tuple; repeatable. Defaults to the five standard triples.
        #[arg(long)]
        lambda: Vec<String>,
    },
    /// List every dope matrix at a tuple (or at a generic tuple with --generic M).
    Enumerate {
        #[arg(long, conflicts_with = "generic", required_unless_present = "generic")]
        lambda: Option<String>,
        #[arg(long)]
        generic: Option<usize>,
        #[arg(long)]
        n: usize,
        /// Print only {m, n, lambda, count}.
        #[arg(long)]
        summary: bool,
    },
    /// A polynomial realizing a matrix.
    Witness {
        #[command(flatten)]
        matrix: MatrixArg,
        /// Defaults to (0,1) for two-row matrices.
        #[arg(long)]
        lambda: Option<String>,
        /// Use the general subspace construction even for two rows.
        #[arg(long)]
        general: bool,
    },
    /// A polynomial whose dope matrix starts with the given columns.
    Extend {
        #[command(flatten)]
        matrix: MatrixArg,
        #[arg(long)]
        lambda: String,
    },
    /// Counts of two-row dope matrices and tail-condition matrices.
    Count {
        #[arg(long, default_value_t = 6)]
        n_max: u64,
        /// Rows for the tail-condition count.
        #[arg(long, default_value_t = 2)]
        m: usize,
    },
    /// Upper bounds on the number of m-row dope matrices.
    Bounds {
        #[arg(long, default_value_t = 3)]
        m: u64,
        #[arg(long, default_value_t = 6)]
        n_max: u64,
        /// Also list the checkerboard lower-bound construction for even n.
        #[arg(long)]
        erc: bool,
    },
    /// Compare generic dope sets with tail-condition sets.
    #[command(name = "conjecture81")]
    Conjecture81 {
        #[arg(long, default_value_t = 3)]
        m: usize,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
    },
    /// Compare the dope set of a tuple with the generic one (or with a second tuple).
    CompareGeneric {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        n: usize,
        /// Compare against this tuple for every degree up to n instead.
        #[arg(long)]
        with: Option<String>,
    },
    /// Flats of the matroid of linear forms.
    MatroidFlats {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        n: usize,
        /// Flats of the contraction by (1,n).
        #[arg(long)]
        contract_top: bool,
    },
    /// Polya condition for a two-row incidence matrix, cross-checked at nodes (0,1).
    Polya {
        #[command(flatten)]
        matrix: MatrixArg,
    },
    /// Interval condition and binomial determinant for index sets G and H.
    Gv {
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
    },
    /// Run a JSON job file ("-" for standard input).
    Job {
        spec: String,
    },
}

#[derive(Args, Debug)]
struct MatrixArg {
    /// Rows like "0101/0010", or a JSON object {"rows": [...]}.
    #[arg(long, conflicts_with = "matrix_file", required_unless_present = "matrix_file")]
    matrix: Option<String>,
    /// File holding a matrix in either form.
    #[arg(long)]
    matrix_file: Option<String>,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(Error),
    Io(std::io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(Error::Parse(_)) => 2,
            CliError::Core(Error::FlatCapExceeded { .. } | Error::SizeLimit(_)) => 4,
            CliError::Core(_) => 3,
            CliError::Io(_) => 2,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Usage(s) => s.clone(),
            CliError::Core(e) => e.to_string(),
            CliError::Io(e) => e.to_string(),
        }
    }
}

type CliResult = Result<i32, CliError>;

/// Runs the command line and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message());
            e.exit_code()
        }
    }
}

fn options(threads: Option<usize>) -> Result<EnumOptions, CliError> {
    let mut o = EnumOptions::from_env()?;
    if threads == Some(0) {
        return Err(CliError::Usage("--threads must be positive".into()));
    }
    o.threads = threads;
    Ok(o)
}

fn read_matrix(arg: &MatrixArg) -> Result<DopeMatrix, CliError> {
    let text = match (&arg.matrix, &arg.matrix_file) {
        (Some(m), _) => m.clone(),
        (None, Some(path)) => std::fs::read_to_string(path)?,
        (None, None) => return Err(CliError::Usage("a matrix is required".into())),
    };
    Ok(render::parse_matrix(&text)?)
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    let fmt = cli.format;
    let threads = cli.threads;
    match cli.command {
        Command::Dope { poly, lambda, signed } => cmd_dope(&poly, &lambda, signed, fmt, out),
        Command::Check { matrix, lambda } => cmd_check(&read_matrix(&matrix)?, lambda.as_deref(), fmt, out),
        Command::Table { n_max, lambda } => cmd_table(n_max, &lambda, &options(threads)?, fmt, out),
        Command::Enumerate { lambda, generic, n, summary } => {
            cmd_enumerate(lambda.as_deref(), generic, n, summary, &options(threads)?, fmt, out)
        }
        Command::Witness { matrix, lambda, general } => {
            cmd_witness(&read_matrix(&matrix)?, lambda.as_deref(), general, fmt, out)
        }
        Command::Extend { matrix, lambda } => cmd_extend(&read_matrix(&matrix)?, &lambda, fmt, out),
        Command::Count { n_max, m } => cmd_count(n_max, m, fmt, out),
        Command::Bounds { m, n_max, erc } => cmd_bounds(m, n_max, erc, fmt, out),
        Command::Conjecture81 { m, n_max } => cmd_conjecture81(m, n_max, &options(threads)?, fmt, out),
        Command::CompareGeneric { lambda, n, with } => {
            cmd_compare(&lambda, n, with.as_deref(), &options(threads)?, fmt, out)
        }
        Command::MatroidFlats { lambda, n, contract_top } => {
            cmd_matroid_flats(&lambda, n, contract_top, &options(threads)?, fmt, out)
        }
        Command::Polya { matrix } => cmd_polya(&read_matrix(&matrix)?, fmt, out),
        Command::Gv { g, h } => cmd_gv(&g, &h, fmt, out),
        Command::Job { spec } => job::run_job(&spec, out, err),
    }
}

fn print_json(out: &mut dyn Write, v: &serde_json::Value) -> Result<(), CliError> {
    writeln!(out, "{}", serde_json::to_string(v).expect("json values serialize"))?;
    Ok(())
}

fn cmd_dope(poly: &str, lambda: &str, signed: bool, fmt: Format, out: &mut dyn Write) -> CliResult {
    let (p, l) = parse_poly_and_lambda(poly, lambda)?;
    let d = dope_matrix_of(&p, &l)?;
    let mu = multiplicity_from_dope(&d);
    let s = if signed { Some(signed_dope_matrix_of(&p, &l)?) } else { None };
    match fmt {
        Format::Json => {
            let mut v = json!({ "poly": p, "lambda": l.entries(), "dope": d, "multiplicity": mu });
            if let Some(s) = &s {
                v["signed"] = json!(s);
            }
            print_json(out, &v)?;
        }
        Format::Csv => {
            writeln!(out, "kind,row,values")?;
            for (i, r) in d.row_strings().iter().enumerate() {
                writeln!(out, "dope,{},{r}", i + 1)?;
            }
            for (i, r) in mu.rows().iter().enumerate() {
                let cells: Vec<String> = r.iter().map(i64::to_string).collect();
                writeln!(out, "multiplicity,{},{}", i + 1, cells.join(" "))?;
            }
            if let Some(s) = &s {
                for (i, r) in s.to_string().lines().enumerate() {
                    writeln!(out, "signed,{},{r}", i + 1)?;
                }
            }
        }
        Format::Text => {
            writeln!(out, "P(x) = {p}")?;
            writeln!(out, "lambda = {l}")?;
            writeln!(out, "dope matrix:\n{d}")?;
            writeln!(out, "multiplicity matrix:\n{mu}")?;
            if let Some(s) = &s {
                writeln!(out, "signed dope matrix:\n{s}")?;
            }
        }
    }
    Ok(0)
}

fn cmd_check(d: &DopeMatrix, lambda: Option<&str>, fmt: Format, out: &mut dyn Write) -> CliResult {
    let rep = check_dope_conditions(d);
    let (verdict, note) = match (lambda, d.m()) {
        (Some(l), _) => {
            let l = parse_lambda(l)?;
            let realized = witness_general(&d.one_positions()?, &l, d.n())?;
            (Some(realized != Realization::NotRealizable), format!("membership at {l}"))
        }
        (None, m) if m <= 2 => (Some(rep.t), "tail condition decides membership".to_string()),
        (None, _) => (None, "membership requires --lambda".to_string()),
    };
    match fmt {
        Format::Json => print_json(out, &json!({ "matrix": d, "conditions": rep, "dope": verdict, "note": note }))?,
        Format::Csv => {
            writeln!(out, "E,R,C,T,dope")?;
            let v = verdict.map_or("".to_string(), |b| b.to_string());
            writeln!(out, "{},{},{},{},{v}", rep.e, rep.r, rep.c, rep.t)?;
        }
        Format::Text => {
            writeln!(out, "{d}")?;
            writeln!(out, "E: {}", rep.e)?;
            writeln!(out, "R: {}", rep.r)?;
            writeln!(out, "C: {}", rep.c)?;
            match rep.t_violation {
                None => writeln!(out, "T: true")?,
                Some(k) => writeln!(out, "T: false (more than {k} ones in the last {} columns)", k + 1)?,
            }
            match verdict {
                Some(true) => writeln!(out, "dope ({note})")?,
                Some(false) => writeln!(out, "not dope ({note})")?,
                None => writeln!(out, "{note}")?,
            }
        }
    }
    Ok(match verdict {
        Some(false) => 1,
        _ => 0,
    })
}

fn label(l: &str) -> String {
    let t = l.trim();
    if t.starts_with('(') || t.starts_with('[') {
        t.to_string()
    } else {
        format!("({})", t.split(',').map(str::trim).collect::<Vec<_>>().join(","))
    }
}

fn cmd_table(n_max: usize, lambdas: &[String], opts: &EnumOptions, fmt: Format, out: &mut dyn Write) -> CliResult {
    let lambdas: Vec<String> = if lambdas.is_empty() {
        DEFAULT_TABLE_LAMBDAS.iter().map(|s| s.to_string()).collect()
    } else {
        lambdas.to_vec()
    };
    let mut rows = Vec::new();
    for l in &lambdas {
        let tuple = parse_lambda(l)?;
        let counts = (0..=n_max)
            .map(|n| enumerate::enumerate_dope_with(&tuple, n, opts).map(|v| v.len()))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push((label(l), counts));
    }
    match fmt {
        Format::Json => {
            let rows: Vec<_> = rows.iter().map(|(l, c)| json!({ "lambda": l, "counts": c })).collect();
            print_json(out, &json!({ "n_max": n_max, "rows": rows }))?;
        }
        _ => {
            let mut t = Table::new(std::iter::once("lambda".to_string()).chain((0..=n_max).map(|n| n.to_string())));
            for (l, c) in &rows {
                t.row(std::iter::once(l.clone()).chain(c.iter().map(|x| x.to_string())));
            }
            t.write(out, fmt == Format::Csv)?;
        }
    }
    Ok(0)
}

fn cmd_enumerate(
    lambda: Option<&str>,
    generic: Option<usize>,
    n: usize,
    summary: bool,
    opts: &EnumOptions,
    fmt: Format,
    out: &mut dyn Write,
) -> CliResult {
    let tuple = match (lambda, generic) {
        (Some(l), _) => parse_lambda(l)?,
        (None, Some(m)) => NodeTuple::generic(m)?,
        (None, None) => return Err(CliError::Usage("--lambda or --generic is required".into())),
    };
    let list = enumerate::enumerate_dope_with(&tuple, n, opts)?;
    let record = json!({ "m": tuple.len(), "n": n, "lambda": tuple.entries(), "count": list.len() });
    match fmt {
        Format::Json => {
            if summary {
                print_json(out, &record)?;
            } else {
                for d in &list {
                    print_json(out, &json!(d))?;
                }
            }
        }
        Format::Csv => {
            if summary {
                writeln!(out, "m,n,lambda,count\n{},{n},\"{tuple}\",{}", tuple.len(), list.len())?;
            } else {
                writeln!(out, "index,matrix")?;
                for (i, d) in list.iter().enumerate() {
                    writeln!(out, "{},{}", i + 1, d.row_strings().join("/"))?;
                }
            }
        }
        Format::Text => {
            if !summary {
                for d in &list {
                    writeln!(out, "{}", d.row_strings().join("/"))?;
                }
            }
            writeln!(out, "m={} n={n} lambda={tuple} count={}", tuple.len(), list.len())?;
        }
    }
    Ok(0)
}

fn cmd_witness(d: &DopeMatrix, lambda: Option<&str>, general: bool, fmt: Format, out: &mut dyn Write) -> CliResult {
    let tuple = match lambda {
        Some(l) => parse_lambda(l)?,
        None if d.m() == 2 => NodeTuple::rationals(&[0, 1])?,
        None => return Err(CliError::Usage("--lambda is required unless the matrix has two rows".into())),
    };
    let result = if d.m() == 2 && !general {
        match witness_two_row(d, &tuple) {
            Ok(p) => Realization::Realized(p),
            Err(Error::NotDope(_)) => Realization::NotRealizable,
            Err(e) => return Err(e.into()),
        }
    } else {
        witness_general(&d.one_positions()?, &tuple, d.n())?
    };
    match (&result, fmt) {
        (Realization::Realized(p), Format::Json) => {
            print_json(out, &json!({ "matrix": d, "lambda": tuple.entries(), "realizable": true, "poly": p }))?
        }
        (Realization::NotRealizable, Format::Json) => {
            print_json(out, &json!({ "matrix": d, "lambda": tuple.entries(), "realizable": false }))?
        }
        (Realization::Realized(p), Format::Csv) => writeln!(out, "realizable,poly\ntrue,\"{p}\"")?,
        (Realization::NotRealizable, Format::Csv) => writeln!(out, "realizable,poly\nfalse,")?,
        (Realization::Realized(p), Format::Text) => writeln!(out, "P(x) = {p}")?,
        (Realization::NotRealizable, Format::Text) => writeln!(out, "not realizable at {tuple}")?,
    }
    Ok(if result == Realization::NotRealizable { 1 } else { 0 })
}

fn cmd_extend(d: &DopeMatrix, lambda: &str, fmt: Format, out: &mut dyn Write) -> CliResult {
    let tuple = parse_lambda(lambda)?;
    let plan = ExtensionPlan::new(d, &tuple)?;
    let p = extend(d, &tuple)?;
    let deg = p.degree().expect("extensions are nonzero");
    match fmt {
        Format::Json => print_json(out, &json!({ "matrix": d, "lambda": tuple.entries(), "plan": plan, "poly": p, "degree": deg }))?,
        Format::Csv => writeln!(out, "degree,poly\n{deg},\"{p}\"")?,
        Format::Text => {
            for (i, (a, pi)) in plan.zero_columns.iter().zip(&plan.row_polys).enumerate() {
                writeln!(out, "A_{} = {:?}  P_{}(x) = {pi}", i + 1, a, i + 1)?;
            }
            writeln!(out, "P(x) = {p}")?;
            writeln!(out, "degree = {deg} (bounds {}..={})", d.n(), d.m() * (d.n() + 2))?;
        }
    }
    Ok(0)
}

fn cmd_count(n_max: u64, m: usize, fmt: Format, out: &mut dyn Write) -> CliResult {
    let tail_label = format!("tail_m{m}");
    let header = ["n", "dope_2row", "catalan", "up_to_swap", tail_label.as_str(), "C(n,t) for t=0..n"];
    let mut rows = Vec::new();
    for n in 0..=n_max {
        let c: Vec<BigUint> = (0..=n as i64).map(|t| counting::count_c(n as i64, t)).collect();
        rows.push((
            n,
            counting::two_row_total(n),
            counting::catalan(n + 1),
            counting::count_two_row_up_to_swap(n),
            enumerate::count_condition_t(m, n as usize),
            c,
        ));
    }
    match fmt {
        Format::Json => {
            let v: Vec<_> = rows
                .iter()
                .map(|(n, a, b, c, d, cs)| {
                    json!({
                        "n": n,
                        "dope_2row": a.to_string(),
                        "catalan": b.to_string(),
                        "up_to_swap": c.to_string(),
                        "tail": d.to_string(),
                        "c": cs.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            print_json(out, &json!({ "m": m, "rows": v }))?;
        }
        _ => {
            let mut t = Table::new(header.iter().map(|s| s.to_string()));
            for (n, a, b, c, d, cs) in &rows {
                let cs: Vec<String> = cs.iter().map(|x| x.to_string()).collect();
                t.row([n.to_string(), a.to_string(), b.to_string(), c.to_string(), d.to_string(), cs.join(" ")]);
            }
            t.write(out, fmt == Format::Csv)?;
        }
    }
    Ok(0)
}

fn cmd_bounds(m: u64, n_max: u64, erc: bool, fmt: Format, out: &mut dyn Write) -> CliResult {
    let mut records = Vec::new();
    for n in 0..=n_max {
        let pairwise = counting::bound_pairwise(m, n).ok();
        let zero = counting::bound_zero_patterns(m, n).ok();
        let fixed = counting::bound_fixed_tuple(m, n).ok();
        let construction = if erc && n % 2 == 0 { counting::erc_lower_bound_construction(n).ok() } else { None };
        records.push((n, pairwise, zero, fixed, construction));
    }
    let show = |b: &Option<counting::Bound>| b.as_ref().map_or("-".to_string(), |b| b.exact.to_string());
    match fmt {
        Format::Json => {
            let v: Vec<_> = records
                .iter()
                .map(|(n, a, b, c, d)| {
                    json!({ "n": n, "pairwise": a, "zero_patterns": b, "fixed_tuple": c, "erc_construction": d })
                })
                .collect();
            print_json(out, &json!({ "m": m, "rows": v }))?;
        }
        _ => {
            let mut header = vec!["n", "pairwise", "zero_patterns", "fixed_tuple", "log2_approx(pairwise)"];
            if erc {
                header.push("erc_construction");
            }
            let mut t = Table::new(header.iter().map(|s| s.to_string()));
            for (n, a, b, c, d) in &records {
                let approx = a.as_ref().map_or("-".to_string(), |b| format!("~{:.3}", b.approximate[0].log2));
                let mut cells = vec![n.to_string(), show(a), show(b), show(c), approx];
                if erc {
                    cells.push(show(d));
                }
                t.row(cells);
            }
            t.write(out, fmt == Format::Csv)?;
            if fmt == Format::Text {
                writeln!(out, "values marked ~ are approximate")?;
            }
        }
    }
    Ok(0)
}

fn cmd_conjecture81(m: usize, n_max: usize, opts: &EnumOptions, fmt: Format, out: &mut dyn Write) -> CliResult {
    let rows = enumerate::check_conjecture_8_1(m, n_max, opts)?;
    let all_equal = rows.iter().all(|r| r.equal);
    match fmt {
        Format::Json => print_json(out, &json!({ "m": m, "rows": rows, "all_equal": all_equal }))?,
        _ => {
            let mut t = Table::new(["n", "generic", "tail", "equal", "counterexample"].iter().map(|s| s.to_string()));
            for r in &rows {
                let ce = r
                    .counterexample
                    .as_ref()
                    .map_or("-".to_string(), |(d, side)| format!("{} only in {side}", d.row_strings().join("/")));
                t.row([r.n.to_string(), r.generic_count.to_string(), r.condition_t_count.to_string(), r.equal.to_string(), ce]);
            }
            t.write(out, fmt == Format::Csv)?;
        }
    }
    Ok(if all_equal { 0 } else { 1 })
}

fn cmd_compare(lambda: &str, n: usize, with: Option<&str>, opts: &EnumOptions, fmt: Format, out: &mut dyn Write) -> CliResult {
    let tuple = parse_lambda(lambda)?;
    if let Some(other) = with {
        let other = parse_lambda(other)?;
        let rows = enumerate::compare_tuples(&tuple, &other, n, opts)?;
        match fmt {
            Format::Json => print_json(out, &json!({ "a": tuple.entries(), "b": other.entries(), "rows": rows }))?,
            _ => {
                let mut t = Table::new(["n", "size_a", "size_b", "equal"].iter().map(|s| s.to_string()));
                for r in &rows {
                    t.row([r.n.to_string(), r.size_a.to_string(), r.size_b.to_string(), r.equal.to_string()]);
                }
                t.write(out, fmt == Format::Csv)?;
            }
        }
        return Ok(if rows.iter().all(|r| r.equal) { 0 } else { 1 });
    }
    let rep = enumerate::compare_to_generic(&tuple, n, opts)?;
    match fmt {
        Format::Json => print_json(out, &json!({ "lambda": tuple.entries(), "n": n, "report": rep }))?,
        Format::Csv => writeln!(out, "size,generic_size,subset,equal\n{},{},{},{}", rep.size, rep.generic_size, rep.subset, rep.equal)?,
        Format::Text => {
            writeln!(out, "lambda = {tuple}, n = {n}")?;
            writeln!(out, "size = {}", rep.size)?;
            writeln!(out, "generic size = {}", rep.generic_size)?;
            writeln!(out, "subset of generic = {}", rep.subset)?;
            writeln!(out, "equal to generic = {}", rep.equal)?;
        }
    }
    Ok(if rep.equal { 0 } else { 1 })
}

fn cmd_matroid_flats(lambda: &str, n: usize, contract_top: bool, opts: &EnumOptions, fmt: Format, out: &mut dyn Write) -> CliResult {
    let tuple = parse_lambda(lambda)?;
    let view = MatroidView::new(&tuple, n)?;
    let flats = view.all_flats(contract_top, opts)?;
    match fmt {
        Format::Json => {
            for f in &flats {
                let pos: Vec<[usize; 2]> = f.positions.iter().map(|p| [p.row + 1, p.col]).collect();
                print_json(out, &json!({ "rank": f.rank, "positions": pos }))?;
            }
        }
        Format::Csv => {
            writeln!(out, "rank,positions")?;
            for f in &flats {
                writeln!(out, "{},\"{}\"", f.rank, f.positions)?;
            }
        }
        Format::Text => {
            for f in &flats {
                writeln!(out, "rank {}: {}", f.rank, f.positions)?;
            }
            writeln!(out, "{} flats", flats.len())?;
        }
    }
    Ok(0)
}

fn cmd_polya(d: &DopeMatrix, fmt: Format, out: &mut dyn Write) -> CliResult {
    let polya = polya_poised(d)?;
    let nullspace = poised_by_nullspace(d, &NodeTuple::rationals(&[0, 1])?)?;
    match fmt {
        Format::Json => print_json(out, &json!({ "matrix": d, "polya": polya, "trivial_nullspace": nullspace }))?,
        Format::Csv => writeln!(out, "polya,trivial_nullspace\n{polya},{nullspace}")?,
        Format::Text => {
            writeln!(out, "Polya condition: {polya}")?;
            writeln!(out, "only the zero polynomial at (0,1): {nullspace}")?;
        }
    }
    Ok(if polya && nullspace { 0 } else { 1 })
}

fn cmd_gv(g: &str, h: &str, fmt: Format, out: &mut dyn Write) -> CliResult {
    let g = parse_index_list(g)?;
    let h = parse_index_list(h)?;
    let rep = gv_nonsingular(&g, &h)?;
    match fmt {
        Format::Json => print_json(out, &json!({ "g": g, "h": h, "report": rep }))?,
        Format::Csv => writeln!(out, "condition_holds,det_nonzero\n{},{}", rep.condition_holds, rep.det_nonzero)?,
        Format::Text => {
            writeln!(out, "interval condition: {}", rep.condition_holds)?;
            writeln!(out, "determinant nonzero: {}", rep.det_nonzero)?;
        }
    }
    Ok(if rep.det_nonzero { 0 } else { 1 })
}
