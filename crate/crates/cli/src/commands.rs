use pentaseries_core::{
    closed_form_series, iterated_division_check, partial_product, pent_terms_upto, roots,
    series_from_terms, stage_requirement, verify_stage, CyclotomicCache, Method, Method1Stream,
    Method2Stream, PartitionTable, Term, TruncatedSeries,
};
use serde::{Deserialize, Serialize};

use crate::bench::{fit_growth_exponents, run_bench, BenchOptions, BenchRecord, GrowthFit, CSV_HEADER};
use crate::cli::{BenchArgs, Cli, Command, ExpandArgs, ExpandMethod, Format, PartitionArgs, VerifyArgs};
use crate::render::{self, to_json};
use crate::{Output, EXIT_MISMATCH, EXIT_OK};

pub fn run(cli: &Cli) -> Output {
    match &cli.command {
        Command::Expand(args) => cmd_expand(args),
        Command::Partition(args) => cmd_partition(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Bench(args) => cmd_bench(args),
    }
}

fn stream_terms(method: ExpandMethod, order: usize) -> Vec<Term> {
    let within = |t: &Term| t.exponent <= order as u64;
    match method {
        ExpandMethod::Method1 => Method1Stream::new().take_while(within).collect(),
        ExpandMethod::Method2 => Method2Stream::new().take_while(within).collect(),
        _ => unreachable!("only telescoping methods emit streams"),
    }
}

/// The series to `order` by one concrete method.
pub fn expand(method: ExpandMethod, order: usize) -> TruncatedSeries {
    match method {
        ExpandMethod::Product => partial_product(order, order),
        ExpandMethod::Method1 | ExpandMethod::Method2 => {
            series_from_terms(stream_terms(method, order), order)
        }
        ExpandMethod::Closed => closed_form_series(order),
        ExpandMethod::All => panic!("`all` is not a single method"),
    }
}

/// Result of `expand --method all`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AgreementReport {
    pub series: TruncatedSeries,
    pub methods: Vec<String>,
    pub agree: bool,
    pub mismatched: Vec<String>,
}

pub fn agreement(order: usize) -> AgreementReport {
    let reference = expand(ExpandMethod::Product, order);
    let mismatched = ExpandMethod::CONCRETE[1..]
        .iter()
        .filter(|&&m| expand(m, order) != reference)
        .map(|m| m.name().to_owned())
        .collect::<Vec<_>>();
    AgreementReport {
        agree: mismatched.is_empty(),
        methods: ExpandMethod::CONCRETE.iter().map(|m| m.name().to_owned()).collect(),
        mismatched,
        series: reference,
    }
}

pub fn cmd_expand(args: &ExpandArgs) -> Output {
    let order = args.order;
    if args.terms {
        let stdout = match (args.method, args.format) {
            (ExpandMethod::Closed, format) => {
                let terms = pent_terms_upto(order as u64);
                match format {
                    Format::Text => render::pent_terms_text(&terms),
                    Format::Json => render::pent_terms_json(&terms),
                    Format::Csv => render::pent_terms_csv(&terms),
                }
            }
            (m @ (ExpandMethod::Method1 | ExpandMethod::Method2), format) => {
                let terms = stream_terms(m, order);
                match format {
                    Format::Text => render::terms_text(&terms),
                    Format::Json => render::terms_json(&terms),
                    Format::Csv => render::terms_csv(&terms),
                }
            }
            (m, _) => {
                return Output::usage(format!(
                    "--terms needs method1, method2 or closed (got {})",
                    m.name()
                ))
            }
        };
        return Output::ok(stdout);
    }

    if args.method != ExpandMethod::All {
        let series = expand(args.method, order);
        return Output::ok(match args.format {
            Format::Text => render::series_text(&series),
            Format::Json => render::series_json(&series),
            Format::Csv => render::series_csv(&series),
        });
    }

    let report = agreement(order);
    let verdict = if report.agree {
        format!("{} methods agree", report.methods.len())
    } else {
        format!("methods disagree with product: {}", report.mismatched.join(", "))
    };
    let (stdout, stderr) = match args.format {
        Format::Text => (format!("{}\n{verdict}", report.series), String::new()),
        Format::Json => (to_json(&report), String::new()),
        Format::Csv => (render::series_csv(&report.series), format!("{verdict}\n")),
    };
    Output {
        stdout,
        stderr,
        code: if report.agree { EXIT_OK } else { EXIT_MISMATCH },
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SinglePartition {
    pub n: usize,
    pub p: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionRange {
    pub upto: usize,
    pub p: Vec<String>,
}

pub fn cmd_partition(args: &PartitionArgs) -> Output {
    let mut table = PartitionTable::new();
    let stdout = match (args.select.upto, args.select.n) {
        (Some(upto), _) => {
            table.extend_to(upto);
            let values: Vec<String> = table.values()[..=upto].iter().map(ToString::to_string).collect();
            match args.format {
                Format::Text => values.join(" "),
                Format::Json => to_json(&PartitionRange { upto, p: values }),
                Format::Csv => {
                    let mut lines = vec!["n,p".to_owned()];
                    lines.extend(values.iter().enumerate().map(|(n, p)| format!("{n},{p}")));
                    lines.join("\n")
                }
            }
        }
        (None, Some(n)) => {
            let p = table.get(n).to_string();
            match args.format {
                Format::Text => p,
                Format::Json => to_json(&SinglePartition { n, p }),
                Format::Csv => format!("n,p\n{n},{p}"),
            }
        }
        (None, None) => return Output::usage("partition needs --upto N or --n N"),
    };
    Output::ok(stdout)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageCheck {
    pub method: String,
    pub m: usize,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisionCheck {
    pub depth: usize,
    pub order: usize,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootRow {
    pub d: usize,
    pub expected: usize,
    pub measured: usize,
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub stages: Vec<StageCheck>,
    pub division: DivisionCheck,
    pub roots_factors: usize,
    pub roots: Vec<RootRow>,
    pub pass: bool,
}

impl VerifyReport {
    fn failures(&self) -> usize {
        self.stages.iter().filter(|s| !s.pass).count()
            + usize::from(!self.division.pass)
            + self.roots.iter().filter(|r| !r.matches).count()
    }

    fn text(&self) -> String {
        let mark = |ok: bool| if ok { "PASS" } else { "FAIL" };
        let mut lines = vec![];
        for s in &self.stages {
            lines.push(format!("{} stage {} m={}", mark(s.pass), s.method, s.m));
        }
        let d = &self.division;
        lines.push(format!("{} division M={} N={}", mark(d.pass), d.depth, d.order));
        lines.push(format!("roots of prod_(k<={}) (1 - x^k):", self.roots_factors));
        lines.push("d expected measured match".to_owned());
        for r in &self.roots {
            let verdict = if r.matches { "match" } else { "MISMATCH" };
            lines.push(format!("{} {} {} {verdict}", r.d, r.expected, r.measured));
        }
        let failures = self.failures();
        lines.push(if failures == 0 {
            "all checks passed".to_owned()
        } else {
            format!("{failures} checks failed")
        });
        lines.join("\n")
    }

    fn csv(&self) -> String {
        let mut lines = vec!["check,param,expected,measured,pass".to_owned()];
        for s in &self.stages {
            lines.push(format!("stage_{},{},,,{}", s.method, s.m, s.pass));
        }
        let d = &self.division;
        lines.push(format!("division,{},,,{}", d.depth, d.pass));
        for r in &self.roots {
            lines.push(format!("roots,{},{},{},{}", r.d, r.expected, r.measured, r.matches));
        }
        lines.join("\n")
    }
}

/// Division depth used by `verify`: the largest `M` with `2M + 10 <= N`.
pub fn division_depth(order: usize) -> usize {
    order.saturating_sub(10) / 2
}

pub fn verify_report(depth: usize, order: usize, root_factors: usize) -> Result<VerifyReport, String> {
    let methods = [Method::Method1, Method::Method2];
    for method in methods {
        for m in 1..=depth {
            let needed = stage_requirement(method, m).map_err(|e| e.to_string())?;
            if needed > order as u64 {
                return Err(format!(
                    "order below stage emissions: {method} stage {m} needs exponent {needed}, order is {order}"
                ));
            }
        }
    }

    let mut stages = vec![];
    for method in methods {
        for m in 1..=depth {
            let pass = verify_stage(method, m, order).map_err(|e| e.to_string())?;
            stages.push(StageCheck { method: method.to_string(), m, pass });
        }
    }

    let div_depth = division_depth(order);
    let division = DivisionCheck {
        depth: div_depth,
        order,
        pass: iterated_division_check(div_depth, order).map_err(|e| e.to_string())?,
    };

    let mut cache = CyclotomicCache::new();
    let mut rows = vec![];
    for d in 1..=root_factors {
        let measured =
            roots::root_multiplicity_with(&mut cache, root_factors, d).map_err(|e| e.to_string())?;
        let expected = root_factors / d;
        rows.push(RootRow { d, expected, measured, matches: measured == expected });
    }

    let mut report = VerifyReport {
        stages,
        division,
        roots_factors: root_factors,
        roots: rows,
        pass: false,
    };
    report.pass = report.failures() == 0;
    Ok(report)
}

pub fn cmd_verify(args: &VerifyArgs) -> Output {
    let Ok(depth) = usize::try_from(args.depth) else {
        return Output::usage("depth out of range");
    };
    if depth == 0 {
        return Output::usage("depth must be at least 1");
    }
    let report = match verify_report(depth, args.order, args.roots) {
        Ok(r) => r,
        Err(message) => return Output::usage(message),
    };
    let stdout = match args.format {
        Format::Text => report.text(),
        Format::Json => to_json(&report),
        Format::Csv => report.csv(),
    };
    Output {
        stdout,
        stderr: String::new(),
        code: if report.pass { EXIT_OK } else { EXIT_MISMATCH },
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub records: Vec<BenchRecord>,
    pub exponents: Vec<GrowthFit>,
}

pub fn bench_csv(records: &[BenchRecord]) -> String {
    let mut lines = vec![CSV_HEADER.to_owned()];
    lines.extend(records.iter().map(BenchRecord::csv_row));
    lines.join("\n")
}

pub fn cmd_bench(args: &BenchArgs) -> Output {
    if args.sizes.is_empty() {
        return Output::usage("bench needs at least one size");
    }
    if !args.sizes.windows(2).all(|w| w[0] < w[1]) {
        return Output::usage("bench sizes must be strictly increasing");
    }
    let records = run_bench(&args.sizes, BenchOptions::default());
    let exponents = fit_growth_exponents(&records);
    let exponent_lines: Vec<String> = exponents
        .iter()
        .map(|f| format!("fitted exponent {}: {:.3}", f.task, f.exponent))
        .collect();
    let (stdout, stderr) = match args.format {
        Format::Csv => {
            let mut stderr = exponent_lines.join("\n");
            if !stderr.is_empty() {
                stderr.push('\n');
            }
            (bench_csv(&records), stderr)
        }
        Format::Json => (to_json(&BenchReport { records, exponents }), String::new()),
        Format::Text => {
            let mut lines = vec![format!("{:<12}{:>8}{:>16}{:>16}", "task", "n", "wall_ns", "max_coeff_bits")];
            lines.extend(records.iter().map(|r| {
                format!("{:<12}{:>8}{:>16}{:>16}", r.task, r.n, r.wall_ns, r.max_coeff_bits)
            }));
            lines.extend(exponent_lines);
            (lines.join("\n"), String::new())
        }
    };
    Output { stdout, stderr, code: EXIT_OK }
}
