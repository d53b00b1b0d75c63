//! Argument definitions and the three commands: `verify`, `table`, `order`.

use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use reflex_core::groups::GroupName;
use reflex_core::rootsys::{build_root_system, exponents_from_heights, short_exponents, RootType};
use reflex_core::series::{lhs_solomon, rhs_solomon, verify_identity};
use reflex_core::weylpoincare::{
    affine_rhs, affine_weighted_series, chevalley_order, classical_order, closed_form_finite, dihedral_two_param,
    finite_weighted_poincare, macdonald_polynomial, AffineForm, ChevalleyType, Weighting,
};

use crate::catalog::Catalog;
use crate::figures::reflexponent_rows;
use crate::report::{Check, Report, SCHEMA_VERSION};
use crate::groupspec::GroupSpec;
use crate::suite::{run_all, run_criterion, CRITERIA};
use crate::CliError;

#[derive(Parser, Debug)]
#[command(name = "reflex", version, about = "Exponents, reflexponents and weighted Poincaré series of reflection groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check an identity and print a report.
    Verify {
        #[command(subcommand)]
        what: Verify,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Print a computed table.
    Table(TableArgs),
    /// Order of a twisted Chevalley group.
    Order(OrderArgs),
}

#[derive(Args, Debug, Clone, Copy)]
pub struct OutputArgs {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Record the time taken by each check.
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Subcommand, Debug)]
pub enum Verify {
    /// Σ x^{codim V^g} against ∏ (1 + e_i x), and the signed version.
    Solomon {
        #[arg(long)]
        group: String,
    },
    /// The two-variable sum over a hyperplane orbit against its product.
    TwoOrbit {
        #[arg(long)]
        group: String,
        /// Orbit label; every orbit when omitted.
        #[arg(long)]
        orbit: Option<char>,
    },
    /// The finite weighted Poincaré polynomial: sum, product, Macdonald.
    Weighted(TypeArgs),
    /// The affine weighted Poincaré series up to a cutoff.
    Affine {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, default_value_t = 12)]
        cutoff: u32,
        #[arg(long, value_enum, default_value_t = FormArg::ShortFactor)]
        form: FormArg,
        #[arg(long, value_enum, default_value_t = WeightArg::SquaredLength)]
        weighting: WeightArg,
    },
    /// The two-parameter series of I2(2b).
    Dihedral {
        #[arg(long)]
        b: u32,
    },
    /// The full acceptance suite, or one criterion of it.
    All {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=11))]
        criterion: Option<u8>,
    },
}

#[derive(Args, Debug, Clone)]
pub struct TypeArgs {
    /// Root system type, A to G.
    #[arg(long = "type")]
    pub kind: String,
    #[arg(long)]
    pub rank: usize,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormArg {
    /// The product without the short-root factor.
    Plain,
    /// The product including ∏ [r]_{q^δ_i} / [r]_q.
    ShortFactor,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightArg {
    SquaredLength,
    Unit,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableName {
    Reflexponents,
    ShortExponents,
    Degrees,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Plain,
    Csv,
    Json,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[arg(value_enum)]
    pub table: TableName,
    /// Restrict to one group; every tabulated group otherwise.
    #[arg(long)]
    pub group: Option<String>,
    /// Largest rank for short exponents of B_n and C_n.
    #[arg(long, default_value_t = 5)]
    pub max_rank: usize,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct OrderArgs {
    /// 2A, 2D, 2E6 or 3D4.
    #[arg(long)]
    pub twisted: String,
    /// Rank of the untwisted group (2A with rank 2n − 1, 2D with rank n + 1).
    #[arg(long)]
    pub rank: Option<usize>,
    #[arg(long)]
    pub q: u64,
    /// Compare with the classical order formula.
    #[arg(long)]
    pub check: bool,
}

/// What a command prints and whether everything it checked held.
pub struct Outcome {
    pub text: String,
    pub ok: bool,
}

/// Runs a parsed command line; `echo` is the argument list recorded in reports.
pub fn run(cli: Cli, echo: Vec<String>) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Verify { what, output } => verify(what, output, echo),
        Command::Table(args) => table(&args),
        Command::Order(args) => order(&args),
    }
}

fn parse_group(s: &str) -> Result<GroupName, CliError> {
    s.parse::<GroupSpec>()?.name()
}

fn parse_type(args: &TypeArgs) -> Result<reflex_core::rootsys::RootSystem, CliError> {
    let kind: RootType = args.kind.parse().map_err(|e| CliError::Usage(format!("{e}")))?;
    build_root_system(kind, args.rank).map_err(|e| CliError::Usage(e.to_string()))
}

fn compute<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, CliError> {
    r.map_err(|e| CliError::Compute(e.to_string()))
}

fn ints(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn verify(what: Verify, output: OutputArgs, echo: Vec<String>) -> Result<Outcome, CliError> {
    let mut checks = Vec::new();
    let timed = |c: Check, start: Instant| {
        let mut c = c;
        if output.timing {
            c.timing_ms = Some(start.elapsed().as_secs_f64() * 1e3);
        }
        c
    };
    match what {
        Verify::Solomon { group } => {
            let name = parse_group(&group)?;
            let e = Catalog::default().get(name)?;
            for signed in [false, true] {
                let start = Instant::now();
                let lhs = compute(lhs_solomon(&e.group, signed))?;
                let rhs = rhs_solomon(&e.table, signed);
                let label = format!("{name} {}", if signed { "signed" } else { "unsigned" });
                checks.push(timed(Check::compare(label, lhs.display_with("x"), rhs.display_with("x")), start));
            }
        }
        Verify::TwoOrbit { group, orbit } => {
            let name = parse_group(&group)?;
            let e = Catalog::default().get(name)?;
            if let Some(l) = orbit {
                if !e.reps.iter().any(|r| r.0 == l) {
                    return Err(CliError::Usage(format!("{name} has no orbit {l}")));
                }
            }
            for (label, rep) in e.reps.iter().filter(|r| orbit.is_none_or(|l| l == r.0)) {
                let rep = rep.as_ref().map_err(|err| CliError::Compute(err.clone()))?;
                for signed in [false, true] {
                    let start = Instant::now();
                    let r = compute(verify_identity(&e.group, &e.table, rep, signed))?;
                    let what = format!("{name} {label} {}", if signed { "signed" } else { "unsigned" });
                    let mut c = Check::verdict(what, r.ok, r.lhs.to_string(), r.rhs_factored.clone());
                    if !e.group.is_well_restricted(*label) {
                        c = c.with_note("orbit is not well-restricted; uses the extended representation");
                    }
                    if let Some(pos) = &r.reindexed {
                        c = c.with_note(format!("holds after attaching the reflexponents at exponent positions {pos:?}"));
                    }
                    checks.push(timed(c, start));
                }
            }
        }
        Verify::Weighted(ty) => {
            let sys = parse_type(&ty)?;
            let start = Instant::now();
            let sum = compute(finite_weighted_poincare(&sys, Weighting::SquaredLength))?;
            let closed = compute(closed_form_finite(&sys, Weighting::SquaredLength))?;
            let mac = compute(macdonald_polynomial(&sys))?;
            checks.push(timed(Check::compare(format!("{} sum = product", sys.label()), &sum, &closed), start));
            checks.push(timed(Check::compare(format!("{} sum = Macdonald product", sys.label()), &sum, &mac), start));
        }
        Verify::Affine { ty, cutoff, form, weighting } => {
            let sys = parse_type(&ty)?;
            let w = match weighting {
                WeightArg::SquaredLength => Weighting::SquaredLength,
                WeightArg::Unit => Weighting::Unit,
            };
            let f = match form {
                FormArg::Plain => AffineForm::Plain,
                FormArg::ShortFactor => AffineForm::WithShortFactor,
            };
            let start = Instant::now();
            let walk = affine_weighted_series(&sys, w, cutoff);
            let rhs = compute(affine_rhs(&sys, w, f, cutoff as usize))?;
            let show = |s: &reflex_core::series::Series| s.to_ints().map(|c| c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")).unwrap_or_default();
            let label = format!("~{} alcove sum = product to q^{cutoff}", sys.label());
            checks.push(timed(Check::compare(label, show(&walk), show(&rhs)), start));
        }
        Verify::Dihedral { b } => {
            if b < 2 {
                return Err(CliError::Usage("b must be at least 2".into()));
            }
            let start = Instant::now();
            let r = dihedral_two_param(b);
            checks.push(timed(Check::verdict(format!("I2({}) two-parameter sum", 2 * b), r.ok_bivariate, &r.bivariate, &r.closed_form), start));
            checks.push(timed(Check::verdict(format!("I2({}) x = q^{b}, y = q", 2 * b), r.ok_specialized, &r.specialized, &r.specialized_rhs), start));
        }
        Verify::All { criterion } => return Ok(verify_all(criterion, output, echo)),
    }
    let report = Report::new(echo, checks);
    let text = if output.json { report.to_json() } else { report.to_plain() };
    Ok(Outcome { text, ok: report.ok() })
}

fn verify_all(criterion: Option<u8>, output: OutputArgs, echo: Vec<String>) -> Outcome {
    let mut catalog = Catalog::default();
    let outcomes = match criterion {
        Some(n) => vec![run_criterion(n, &mut catalog)],
        None => run_all(&mut catalog),
    };
    let ok = outcomes.iter().all(|o| o.passed());
    if output.json {
        let checks = outcomes
            .iter()
            .flat_map(|o| {
                o.checks.iter().map(move |c| {
                    let mut c = c.clone();
                    c.name = format!("criterion {}: {}", o.number, c.name);
                    c
                })
            })
            .collect();
        return Outcome { text: Report::new(echo, checks).to_json(), ok };
    }
    let mut text = String::new();
    for o in &outcomes {
        text.push_str(&o.summary_line());
        if output.timing {
            text.push_str(&format!(" [{:.1} s]", o.elapsed.as_secs_f64()));
        }
        text.push('\n');
        for c in o.failures() {
            text.push_str(&format!("    {}: {} vs {}\n", c.name, c.lhs, c.rhs));
            if let Some(note) = &c.note {
                text.push_str(&format!("      note: {note}\n"));
            }
        }
    }
    let passed = outcomes.iter().filter(|o| o.passed()).count();
    text.push_str(&format!("{passed}/{} criteria pass\n", outcomes.len()));
    debug_assert!(outcomes.len() <= CRITERIA.len());
    Outcome { text, ok }
}

#[derive(Serialize)]
struct OrbitRow {
    label: char,
    reflexponents: Vec<usize>,
    coreflexponents: Vec<usize>,
    /// Values of the extended representation on an orbit that is not
    /// well-restricted.
    extension: bool,
}

#[derive(Serialize)]
#[serde(untagged)]
enum Row {
    Reflexponents { group: String, exponents: Vec<usize>, coexponents: Vec<usize>, orbits: Vec<OrbitRow> },
    ShortExponents { #[serde(rename = "type")] kind: String, exponents: Vec<usize>, short_exponents: Vec<usize> },
    Degrees { group: String, degrees: Vec<usize> },
}

#[derive(Serialize)]
struct Table {
    schema_version: u32,
    table: &'static str,
    rows: Vec<Row>,
}

fn descending(v: &[usize]) -> Vec<usize> {
    let mut v = v.to_vec();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// `9/9` for single entries, `9,15 / 9,3` otherwise.
fn pair(a: &[usize], b: &[usize]) -> String {
    let sep = if a.len() <= 1 && b.len() <= 1 { "/" } else { " / " };
    format!("{}{sep}{}", ints(a), ints(b))
}

fn table(args: &TableArgs) -> Result<Outcome, CliError> {
    let mut catalog = Catalog::default();
    let groups: Vec<GroupName> = match &args.group {
        Some(g) => vec![parse_group(g)?],
        None => match args.table {
            TableName::Degrees | TableName::Reflexponents => reflexponent_rows().into_iter().map(|r| r.group).collect(),
            TableName::ShortExponents => Vec::new(),
        },
    };
    let mut rows = Vec::new();
    match args.table {
        TableName::Reflexponents => {
            for name in groups {
                let e = catalog.get(name)?;
                let orbits = e
                    .table
                    .orbits
                    .iter()
                    .map(|o| OrbitRow {
                        label: o.label,
                        reflexponents: o.reflexponents.clone(),
                        coreflexponents: descending(&o.coreflexponents),
                        extension: !o.well_restricted,
                    })
                    .collect();
                rows.push(Row::Reflexponents {
                    group: name.to_string(),
                    exponents: e.table.exponents.clone(),
                    coexponents: descending(&e.table.coexponents),
                    orbits,
                });
            }
        }
        TableName::Degrees => {
            for name in groups {
                rows.push(Row::Degrees { group: name.to_string(), degrees: catalog.get(name)?.table.degrees.clone() });
            }
        }
        TableName::ShortExponents => {
            if args.group.is_some() {
                return Err(CliError::Usage("short-exponents takes --max-rank, not --group".into()));
            }
            let mut types: Vec<(RootType, usize)> = Vec::new();
            for n in 2..=args.max_rank {
                types.push((RootType::B, n));
            }
            for n in 2..=args.max_rank {
                types.push((RootType::C, n));
            }
            types.push((RootType::F, 4));
            types.push((RootType::G, 2));
            for (kind, n) in types {
                let sys = compute(build_root_system(kind, n))?;
                let exps = exponents_from_heights(&sys).into_iter().map(|e| e as usize).collect();
                let short = compute(short_exponents(&sys))?.into_iter().map(|e| e as usize).collect();
                rows.push(Row::ShortExponents { kind: sys.label(), exponents: exps, short_exponents: short });
            }
        }
    }
    let name = match args.table {
        TableName::Reflexponents => "reflexponents",
        TableName::ShortExponents => "short-exponents",
        TableName::Degrees => "degrees",
    };
    let text = match args.format {
        Format::Json => serde_json::to_string_pretty(&Table { schema_version: SCHEMA_VERSION, table: name, rows }).expect("table serializes"),
        Format::Plain => rows.iter().map(plain_row).collect::<Vec<_>>().join("\n") + "\n",
        Format::Csv => csv_rows(&rows)?,
    };
    Ok(Outcome { text, ok: true })
}

fn orbit_text(o: &OrbitRow) -> String {
    let star = if o.extension { " (extension)" } else { "" };
    format!("{}: {}{star}", o.label, pair(&o.reflexponents, &o.coreflexponents))
}

fn plain_row(row: &Row) -> String {
    match row {
        Row::Reflexponents { group, exponents, coexponents, orbits } => {
            let orbits: Vec<String> = orbits.iter().map(orbit_text).collect();
            format!("{group} | {} | {}", pair(exponents, coexponents), orbits.join("; "))
        }
        Row::ShortExponents { kind, exponents, short_exponents } => format!("{kind} | {} | {}", ints(exponents), ints(short_exponents)),
        Row::Degrees { group, degrees } => format!("{group} | {}", ints(degrees)),
    }
}

fn csv_rows(rows: &[Row]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| CliError::Compute(e.to_string());
    match rows.first() {
        Some(Row::Reflexponents { .. }) => w.write_record(["group", "exponents", "coexponents", "orbit", "reflexponents", "coreflexponents", "extension"]),
        Some(Row::ShortExponents { .. }) => w.write_record(["type", "exponents", "short_exponents"]),
        Some(Row::Degrees { .. }) => w.write_record(["group", "degrees"]),
        None => Ok(()),
    }
    .map_err(io)?;
    for row in rows {
        match row {
            Row::Reflexponents { group, exponents, coexponents, orbits } => {
                for o in orbits {
                    let rec = [group.clone(), ints(exponents), ints(coexponents), o.label.to_string(), ints(&o.reflexponents), ints(&o.coreflexponents), o.extension.to_string()];
                    w.write_record(&rec).map_err(io)?;
                }
            }
            Row::ShortExponents { kind, exponents, short_exponents } => w.write_record([kind.clone(), ints(exponents), ints(short_exponents)]).map_err(io)?,
            Row::Degrees { group, degrees } => w.write_record([group.clone(), ints(degrees)]).map_err(io)?,
        }
    }
    let bytes = w.into_inner().map_err(|e| CliError::Compute(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn is_prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let p = (2..=q).find(|p| q.is_multiple_of(*p)).expect("q has a prime factor");
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
    }
    r == 1
}

/// `--twisted 2A --rank 3` is ²A_3; a trailing rank in the type, as in
/// `2A3`, works as well.
pub fn parse_twisted(ty: &str, rank: Option<usize>) -> Result<ChevalleyType, CliError> {
    let bad = |why: &str| CliError::Usage(format!("twisted type {ty:?}: {why}"));
    let t = ty.trim();
    let (head, tail) = t.split_at(t.len().min(2));
    let inline: Option<usize> = if tail.is_empty() { None } else { Some(tail.parse().map_err(|_| bad("cannot parse rank"))?) };
    let rank = match (inline, rank) {
        (Some(a), Some(b)) if a != b => return Err(bad("conflicting ranks")),
        (a, b) => a.or(b),
    };
    match (head, rank) {
        ("2A", Some(k)) if k >= 3 && k % 2 == 1 => Ok(ChevalleyType::TwistedA(k.div_ceil(2))),
        ("2A", _) => Err(bad("needs an odd rank 2n - 1 >= 3")),
        ("2D", Some(k)) if k >= 3 => Ok(ChevalleyType::TwistedD(k - 1)),
        ("2D", _) => Err(bad("needs a rank n + 1 >= 3")),
        ("2E", Some(6) | None) if tail.is_empty() || tail == "6" => Ok(ChevalleyType::TwistedE6),
        ("3D", Some(4) | None) => Ok(ChevalleyType::Triality),
        _ => Err(bad("supported types are 2A, 2D, 2E6 and 3D4")),
    }
}

fn order(args: &OrderArgs) -> Result<Outcome, CliError> {
    let ty = parse_twisted(&args.twisted, args.rank)?;
    if !is_prime_power(args.q) {
        return Err(CliError::Usage(format!("q = {} is not a prime power", args.q)));
    }
    let value = compute(chevalley_order(ty, args.q))?;
    if !args.check {
        return Ok(Outcome { text: format!("{value}\n"), ok: true });
    }
    let oracle = compute(classical_order(ty, args.q))?;
    let ok = value == oracle;
    let verdict = if ok { "oracle ok" } else { "oracle mismatch" };
    Ok(Outcome { text: format!("{value}\n{ty}({}) classical order {oracle}: {verdict}\n", args.q), ok })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twisted_names() {
        assert_eq!(parse_twisted("2A", Some(3)).unwrap(), ChevalleyType::TwistedA(2));
        assert_eq!(parse_twisted("2A5", None).unwrap(), ChevalleyType::TwistedA(3));
        assert_eq!(parse_twisted("2D", Some(4)).unwrap(), ChevalleyType::TwistedD(3));
        assert_eq!(parse_twisted("3D4", None).unwrap(), ChevalleyType::Triality);
        assert_eq!(parse_twisted("2E6", None).unwrap(), ChevalleyType::TwistedE6);
        for (t, r) in [("2B", None), ("2A", Some(4)), ("2A", None), ("3D5", None), ("2E7", None)] {
            assert!(parse_twisted(t, r).is_err(), "{t} {r:?}");
        }
    }

    #[test]
    fn prime_powers() {
        let pp: Vec<u64> = (1..20).filter(|&q| is_prime_power(q)).collect();
        assert_eq!(pp, vec![2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19]);
    }

    #[test]
    fn pairs() {
        assert_eq!(pair(&[9], &[9]), "9/9");
        assert_eq!(pair(&[9, 15], &[9, 3]), "9,15 / 9,3");
    }
}
