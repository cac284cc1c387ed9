mod antichain;
mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use nilideal_core::closed_forms::{self as cf, FormulaId};
use nilideal_core::verify::{self, Exact, FormulaBook, Mutant, VerifyOptions};
use nilideal_core::{ideal, paths, shi, Count, Error, Letter, RootSystem, Table, TypeRank};

use crate::output::{Document, Format, RowOut, Status};

/// Exit code for a failed exact comparison.
const EXIT_MISMATCH: u8 = 1;
/// Exit code for bad flags or an unsupported request.
const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "nilideal",
    version,
    about = "Count ad-nilpotent and abelian ideals of Borel subalgebras and check closed forms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Md)]
    format: Format,

    /// Omit the timestamp so identical flags give byte-identical output.
    #[arg(long, global = true)]
    no_meta: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableMethod {
    Formula,
    Ideals,
    Diagrams,
}

#[derive(Debug, clap::Args)]
struct SystemArgs {
    /// Type letter, A through G.
    #[arg(long = "type", value_parser = parse_letter)]
    letter: Letter,
    #[arg(long)]
    rank: usize,
}

impl SystemArgs {
    fn spec(&self) -> Result<TypeRank, Failure> {
        TypeRank::new(self.letter, self.rank).map_err(Failure::usage)
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// P_X(j) for 0 <= j <= rank by one method.
    Table {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long, value_enum, default_value_t = TableMethod::Ideals)]
        method: TableMethod,
    },
    /// Run every applicable cross-check; exit 1 on any mismatch.
    Verify {
        /// Comma-separated type letters.
        #[arg(long, value_delimiter = ',', value_parser = parse_letter, default_value = "A,B,C,D,E,F,G")]
        types: Vec<Letter>,
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
        /// Also check the antichain criterion for the nilpotency index on
        /// every ideal.
        #[arg(long)]
        deep: bool,
        /// Longest lattice path checked against the ballot formula.
        #[arg(long, default_value_t = 14)]
        max_path_length: usize,
        /// Corrupt one closed form (for testing the verifier itself).
        #[arg(long, hide = true)]
        mutate: Option<FormulaId>,
    },
    /// Abelian ideals by number of simple roots, enumeration vs closed form.
    Abelian {
        #[command(flatten)]
        system: SystemArgs,
    },
    /// Inspect the ideal generated by an antichain.
    Ideal {
        #[command(flatten)]
        system: SystemArgs,
        /// Comma-separated roots: `sK` for the simple root α_K, or a
        /// coefficient vector `[c1,...,cn]`. Empty for the zero ideal.
        #[arg(long, allow_hyphen_values = true)]
        antichain: String,
    },
    /// Lattice paths by end height and returns, brute force vs formula.
    Paths {
        #[arg(long)]
        length: usize,
        /// Restrict to one end height.
        #[arg(long)]
        end: Option<usize>,
    },
    /// Root-system invariants and the uniform counts.
    Info {
        #[command(flatten)]
        system: SystemArgs,
    },
}

fn parse_letter(s: &str) -> Result<Letter, String> {
    s.parse::<Letter>().map_err(|e| e.to_string())
}

#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(e: impl std::fmt::Display) -> Failure {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }

    fn internal(e: Error) -> Failure {
        Failure {
            code: EXIT_MISMATCH,
            message: format!("internal consistency failure: {e}"),
        }
    }
}

struct Outcome {
    doc: Document,
    failure: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.doc.render(cli.format));
            match out.failure {
                Some(msg) => {
                    eprintln!("verification failed: {msg}");
                    ExitCode::from(EXIT_MISMATCH)
                }
                None => ExitCode::SUCCESS,
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let stamp = !cli.no_meta;
    match &cli.command {
        Command::Table { system, method } => cmd_table(system.spec()?, *method, stamp),
        Command::Verify {
            types,
            max_rank,
            deep,
            max_path_length,
            mutate,
        } => {
            let opts = VerifyOptions {
                letters: types.clone(),
                max_rank: *max_rank,
                deep: *deep,
                max_path_length: *max_path_length,
            };
            match mutate {
                Some(id) => cmd_verify(&opts, &Mutant(*id), stamp),
                None => cmd_verify(&opts, &Exact, stamp),
            }
        }
        Command::Abelian { system } => cmd_abelian(system.spec()?, stamp),
        Command::Ideal { system, antichain } => cmd_ideal(system.spec()?, antichain, stamp),
        Command::Paths { length, end } => cmd_paths(*length, *end, stamp),
        Command::Info { system } => cmd_info(system.spec()?, stamp),
    }
}

fn build(spec: TypeRank) -> Result<RootSystem, Failure> {
    RootSystem::build(spec).map_err(|e| match e {
        Error::CapacityExceeded { .. } => Failure::usage(e),
        other => Failure::internal(other),
    })
}

fn push_table(doc: &mut Document, t: &Table) {
    doc.rows
        .extend(verify::table_rows(t).iter().map(RowOut::from_row));
    let m = t.method.to_string();
    if !doc.meta.methods.contains(&m) {
        doc.meta.methods.push(m);
    }
}

fn cmd_table(spec: TypeRank, method: TableMethod, stamp: bool) -> Result<Outcome, Failure> {
    let mut doc = Document::new("table", Some(spec.to_string()), stamp);
    let classical = spec.letter().is_classical();
    let table: Table = match method {
        TableMethod::Formula | TableMethod::Diagrams if !classical => {
            let name = method.to_possible_value().expect("no skipped variants");
            return Err(Failure::usage(format!(
                "method {} is only available for types A, B, C, D (got {})",
                name.get_name(),
                spec.letter()
            )));
        }
        TableMethod::Formula => {
            let counts = (0..=spec.rank() as i64)
                .map(|j| Exact.p_x(spec, j).map(|v| v.value))
                .collect::<Result<Vec<Count>, _>>()
                .map_err(Failure::internal)?;
            Table {
                spec,
                counts,
                method: nilideal_core::Method::Formula,
            }
        }
        TableMethod::Ideals => ideal::stats_table(&build(spec)?).map_err(Failure::internal)?,
        TableMethod::Diagrams => {
            shi::diagram_stats(&build(spec)?)
                .map_err(Failure::internal)?
                .combined
        }
    };
    push_table(&mut doc, &table);
    Ok(Outcome { doc, failure: None })
}

fn cmd_verify(
    opts: &VerifyOptions,
    book: &dyn FormulaBook,
    stamp: bool,
) -> Result<Outcome, Failure> {
    if let Some(&l) = opts
        .letters
        .iter()
        .find(|l| TypeRank::all_of(&[**l], opts.max_rank).is_empty())
    {
        return Err(Failure::usage(format!(
            "--max-rank {} admits no system of type {l}",
            opts.max_rank
        )));
    }
    let report = verify::run(opts, book).map_err(Failure::internal)?;
    let mut doc = Document::new("verify", None, stamp);
    doc.meta.methods = report.methods.iter().map(|m| m.to_string()).collect();
    doc.rows = report.rows.iter().map(RowOut::from_row).collect();
    doc.set_checks(&report.checks);
    let failure = report.first_failure().map(|c| {
        let (ty, rank) = c
            .system
            .map(|s| (s.letter().to_string(), s.rank().to_string()))
            .unwrap_or_else(|| ("-".into(), "-".into()));
        let j = c.j.map(|j| j.to_string()).unwrap_or_else(|| "-".into());
        format!(
            "{} (type={ty}, rank={rank}, j={j}, lhs={}, rhs={})",
            c.name, c.lhs, c.rhs
        )
    });
    Ok(Outcome { doc, failure })
}

fn cmd_abelian(spec: TypeRank, stamp: bool) -> Result<Outcome, Failure> {
    let rs = build(spec)?;
    let mut doc = Document::new("abelian", Some(spec.to_string()), stamp);
    let enumerated: Table = ideal::abelian_table(&rs).map_err(Failure::internal)?;
    let formula = Table {
        spec,
        counts: (0..=spec.rank() as i64)
            .map(|j| cf::p_ab(&rs, j))
            .collect::<Result<_, _>>()
            .map_err(Failure::internal)?,
        method: nilideal_core::Method::AbelianFormula,
    };
    push_table(&mut doc, &enumerated);
    push_table(&mut doc, &formula);
    let total = enumerated.total().map_err(Failure::internal)?;
    let expected = Count::from(2u32).pow(spec.rank() as u32);
    doc.detail("total", &total);
    doc.detail("2^rank", &expected);
    let mut checks = Vec::new();
    for j in 0..=spec.rank() {
        checks.push(verify::CheckOutcome {
            name: "abelian ideals with j simple roots",
            system: Some(spec),
            j: Some(j as i64),
            lhs: enumerated.counts[j].to_string(),
            rhs: formula.counts[j].to_string(),
            passed: enumerated.counts[j] == formula.counts[j],
        });
    }
    checks.push(verify::CheckOutcome {
        name: "number of abelian ideals = 2^rank",
        system: Some(spec),
        j: None,
        lhs: total.to_string(),
        rhs: expected.to_string(),
        passed: total == expected,
    });
    doc.set_checks(&checks);
    let failure = checks.iter().find(|c| !c.passed).map(ToString::to_string);
    Ok(Outcome { doc, failure })
}

fn cmd_ideal(spec: TypeRank, tokens: &str, stamp: bool) -> Result<Outcome, Failure> {
    let rs = build(spec)?;
    let ac = antichain::parse(&rs, tokens).map_err(Failure::usage)?;
    let i = ac.ideal();
    let mut doc = Document::new("ideal", Some(spec.to_string()), stamp);
    let roots = |set: nilideal_core::RootSet| -> String {
        set.iter()
            .map(|a| rs.root(a).vector_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    doc.detail("antichain", roots(ac.elements()));
    doc.detail("members", roots(i.members()));
    doc.detail("size", i.len());
    doc.detail("simple_count", i.simple_count());
    doc.detail("is_abelian", i.is_abelian());
    doc.detail("n_index", i.n_index());
    doc.detail("cdr_index", i.cdr_index());
    Ok(Outcome { doc, failure: None })
}

fn cmd_paths(length: usize, end: Option<usize>, stamp: bool) -> Result<Outcome, Failure> {
    const MAX_LENGTH: usize = 30;
    if length > MAX_LENGTH {
        return Err(Failure::usage(format!(
            "--length {length} is too long for exhaustive listing (max {MAX_LENGTH})"
        )));
    }
    let mut doc = Document::new("paths", None, stamp);
    doc.meta.methods = vec!["paths".into(), "formula".into()];
    let brute = paths::count_table(length);
    let mut checks = Vec::new();
    for h in (0..=length).filter(|&h| end.is_none_or(|e| e == h)) {
        for j in 0..=length {
            let b = brute.get(&(h, j)).copied().unwrap_or(0);
            let f: u64 =
                cf::b_closed(length as i64, h as i64, j as i64).map_err(Failure::internal)?;
            if b == 0 && f == 0 {
                continue;
            }
            for (count, method) in [(b, "paths"), (f, "formula")] {
                doc.rows.push(RowOut {
                    kind: "path".into(),
                    rank: length,
                    j,
                    count,
                    method: method.into(),
                    h: Some(h),
                });
            }
            checks.push(verify::CheckOutcome {
                name: "ballot formula = path enumeration",
                system: None,
                j: Some(j as i64),
                lhs: b.to_string(),
                rhs: f.to_string(),
                passed: b == f,
            });
        }
    }
    doc.set_checks(&checks);
    if checks.is_empty() {
        doc.meta.status = Status::Pass;
    }
    let failure = checks.iter().find(|c| !c.passed).map(ToString::to_string);
    Ok(Outcome { doc, failure })
}

fn cmd_info(spec: TypeRank, stamp: bool) -> Result<Outcome, Failure> {
    let rs = build(spec)?;
    let report = rs.invariants_report().map_err(Failure::internal)?;
    let mut doc = Document::new("info", Some(spec.to_string()), stamp);
    let list = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
    doc.detail("positive_roots", report.positive_roots);
    doc.detail("coxeter_number", report.coxeter_number);
    doc.detail("exponents", list(&report.exponents));
    doc.detail("weyl_order", &report.weyl_order);
    doc.detail("connection_index_det", report.connection_index_det);
    doc.detail("connection_index_marks", report.connection_index_marks);
    doc.detail("marks", list(&report.marks));
    doc.detail("highest_root", rs.highest_root().0);
    let total: Count = cf::total_ideals(&rs).map_err(Failure::internal)?;
    let zero: Count = cf::p_zero(&rs).map_err(Failure::internal)?;
    doc.detail("total_ideals", total);
    doc.detail("p_zero", zero);
    doc.meta.status = Status::Pass;
    Ok(Outcome { doc, failure: None })
}
