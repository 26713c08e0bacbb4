//! `ompstat`: statistics, distributions and verification suites for ordered
//! multiset partitions.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 usage or parse error,
//! 3 arithmetic overflow.

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use ompstat_core::colored::{
    colored_inv, colored_minimaj, colored_segmented, colored_standardize, enum_colored_osp, parse_colored,
    print_colored_segments, ColoredOsp,
};
use ompstat_core::distributions::{inv_and_minimaj, Family, Statistic};
use ompstat_core::partitions::{enum_omp, parse_omp, OmpConstraint};
use ompstat_core::statistics::{descent_set, inv_omp, maj_word, minimaj, segmented_word};
use ompstat_core::suites::{Bounds, Suite};
use ompstat_core::switch_maps::omp_switch;
use ompstat_core::symfunc::{
    monomial_to_schur, partitions_of, schur_coeff_formula, syt_des, syt_enumerate, syt_maj, val_expansion, Basis,
    IntegerPartition, SymFuncExpansion,
};
use ompstat_core::{Composition, Error, OrderedMultisetPartition, Overflow, WeakComposition};

#[derive(Parser)]
#[command(name = "ompstat", version, about = "Statistics on ordered multiset partitions")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    format: Format,
    /// Worker threads for parallel sweeps (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Refuse any size bound above this value.
    #[arg(long, global = true)]
    seed_bound: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate statistics on one ordered multiset partition.
    Stat(StatArgs),
    /// Generating function of inv and minimaj over a family.
    Dist(FamilyArgs),
    /// List the members of a family with their statistics.
    Enum(EnumArgs),
    /// Monomial or Schur expansion of the valley sum for n and k.
    Val(ValArgs),
    /// Schur coefficients from standard Young tableaux.
    Schur(SchurArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct StatArgs {
    /// `257|6|148|39`, or with `--colors`, `2^0 3^2|4^0|5^0 1^1`.
    object: String,
    #[arg(long)]
    inv: bool,
    #[arg(long)]
    minimaj: bool,
    /// `maj` of the reading word (blocks in increasing order).
    #[arg(long)]
    maj: bool,
    /// Descent set of the segmented word.
    #[arg(long)]
    des: bool,
    /// The segmented word.
    #[arg(long)]
    segmented: bool,
    /// Apply the switch map `t_i`.
    #[arg(long, value_name = "I")]
    switch: Option<u32>,
    /// Read the object as colored with this many colors.
    #[arg(long, value_name = "R")]
    colors: Option<u32>,
    /// Rank standardization (colored objects only).
    #[arg(long)]
    standardize: bool,
}

#[derive(Args, Clone)]
struct FamilyArgs {
    /// Letter multiplicities, e.g. `2,2,1`.
    #[arg(long, conflicts_with = "n")]
    weight: Option<String>,
    /// Use the set partitions of `[n]`.
    #[arg(long)]
    n: Option<usize>,
    /// Fix the block sizes, e.g. `2,1,2`.
    #[arg(long, conflicts_with = "blocks")]
    shape: Option<String>,
    /// Fix the number of blocks.
    #[arg(long)]
    blocks: Option<usize>,
    /// Fix the size of the last block (needs `--blocks`).
    #[arg(long, requires = "blocks")]
    last: Option<usize>,
}

#[derive(Args)]
struct EnumArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Enumerate colored set partitions with this many colors (needs `--n` and `--shape`).
    #[arg(long, value_name = "R")]
    colors: Option<u32>,
    /// Stop after this many objects.
    #[arg(long)]
    limit: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum StatChoice {
    Inv,
    Minimaj,
}

impl From<StatChoice> for Statistic {
    fn from(s: StatChoice) -> Self {
        match s {
            StatChoice::Inv => Statistic::Inv,
            StatChoice::Minimaj => Statistic::Minimaj,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisChoice {
    Monomial,
    Schur,
}

#[derive(Args)]
struct ValArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long, value_enum, default_value_t = BasisChoice::Monomial)]
    basis: BasisChoice,
    #[arg(long, value_enum, default_value_t = StatChoice::Minimaj)]
    stat: StatChoice,
}

#[derive(Args)]
struct SchurArgs {
    #[arg(long)]
    n: usize,
    /// Number of blocks minus one, as for `val`.
    #[arg(long)]
    k: usize,
    /// Restrict to one partition, e.g. `2,1`.
    #[arg(long)]
    lambda: Option<String>,
    /// Also list the tableaux with their descents and major index.
    #[arg(long, requires = "lambda")]
    tableaux: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// One of the suite names, or `all`.
    suite: String,
    #[arg(long, default_value_t = 5)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    r: u32,
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Overflow(o) => panic::panic_any(o),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let default_hook = panic::take_hook();
    panic::set_hook(Box::new(move |info| {
        if info.payload().downcast_ref::<Overflow>().is_none() {
            default_hook(info);
        }
    }));
    exit_code(panic::catch_unwind(AssertUnwindSafe(|| run(&cli))))
}

fn exit_code(outcome: std::thread::Result<CmdResult>) -> ExitCode {
    match outcome {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(Failure::Verification)) => ExitCode::from(1),
        Ok(Err(Failure::Usage(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(payload) => {
            if let Some(o) = payload.downcast_ref::<Overflow>() {
                eprintln!("error: {o}");
                ExitCode::from(3)
            } else {
                panic::resume_unwind(payload)
            }
        }
    }
}

fn run(cli: &Cli) -> CmdResult {
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            return Err(Failure::Usage("--jobs must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global().map_err(|e| Failure::Usage(e.to_string()))?;
    }
    let out = Output { format: cli.format };
    let cap = |n: usize| -> CmdResult {
        match cli.seed_bound {
            Some(b) if n > b => Err(Failure::Usage(format!("size {n} exceeds --seed-bound {b}"))),
            _ => Ok(()),
        }
    };
    match &cli.command {
        Command::Stat(a) => cmd_stat(a, &out),
        Command::Dist(a) => {
            let (weight, family) = family_of(a)?;
            cap(weight.size())?;
            cmd_dist(&weight, &family, &out)
        }
        Command::Enum(a) => {
            let (weight, family) = family_of(&a.family)?;
            cap(weight.size())?;
            cmd_enum(a, &weight, &family, &out)
        }
        Command::Val(a) => {
            cap(a.n)?;
            cmd_val(a, &out)
        }
        Command::Schur(a) => {
            cap(a.n)?;
            cmd_schur(a, &out)
        }
        Command::Verify(a) => {
            cap(a.n)?;
            cmd_verify(a, &out)
        }
    }
}

struct Output {
    format: Format,
}

impl Output {
    fn json<T: Serialize>(&self, value: &T) {
        println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
    }
}

fn parse_list(text: &str, what: &str) -> Result<Vec<usize>, Failure> {
    let body = text.trim().trim_start_matches('(').trim_end_matches(')');
    if body.trim().is_empty() {
        return Ok(Vec::new());
    }
    body.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| Failure::Usage(format!("bad {what} entry {t:?}"))))
        .collect()
}

fn family_of(a: &FamilyArgs) -> Result<(WeakComposition, Family), Failure> {
    let weight = match (&a.weight, a.n) {
        (Some(w), None) => WeakComposition(parse_list(w, "weight")?),
        (None, Some(n)) => WeakComposition(vec![1; n]),
        _ => return Err(Failure::Usage("give exactly one of --weight or --n".into())),
    };
    let family = match (&a.shape, a.blocks, a.last) {
        (Some(s), None, None) => Family::Shape(Composition::new(parse_list(s, "shape")?)?),
        (None, Some(k), None) => Family::Blocks(k),
        (None, Some(k), Some(last)) => Family::BlocksLastSize { k, a: last },
        (None, None, _) => Family::All,
        _ => return Err(Failure::Usage("--shape cannot be combined with --blocks or --last".into())),
    };
    Ok((weight, family))
}

fn family_text(family: &Family) -> String {
    match family {
        Family::All => "all".into(),
        Family::Blocks(k) => format!("blocks={k}"),
        Family::Shape(a) => format!("shape={a}"),
        Family::BlocksLastSize { k, a } => format!("blocks={k} last={a}"),
    }
}

// ---------------------------------------------------------------------------
// stat

fn cmd_stat(a: &StatArgs, out: &Output) -> CmdResult {
    let rows = match a.colors {
        Some(r) => colored_stats(a, &parse_colored(&a.object, r)?)?,
        None => plain_stats(a, &parse_omp(&a.object)?)?,
    };
    match out.format {
        Format::Json => {
            let mut map = serde_json::Map::new();
            map.insert("object".into(), Value::String(rows.0));
            for (k, v) in rows.1 {
                map.insert(k.into(), v);
            }
            out.json(&Value::Object(map));
        }
        Format::Csv => {
            println!("statistic,value");
            for (k, v) in &rows.1 {
                println!("{k},{}", csv_value(v));
            }
        }
        Format::Pretty => {
            if let [(_, v)] = rows.1.as_slice() {
                println!("{}", plain_value(v));
            } else {
                for (k, v) in &rows.1 {
                    println!("{k}: {}", plain_value(v));
                }
            }
        }
    }
    Ok(())
}

type StatRows = (String, Vec<(&'static str, Value)>);

fn plain_stats(a: &StatArgs, mu: &OrderedMultisetPartition) -> Result<StatRows, Failure> {
    if a.standardize {
        return Err(Failure::Usage("--standardize needs --colors".into()));
    }
    let all = !(a.inv || a.minimaj || a.maj || a.des || a.segmented || a.switch.is_some());
    let sw = segmented_word(mu);
    let mut rows = Vec::new();
    if a.inv || all {
        rows.push(("inv", json!(inv_omp(mu))));
    }
    if a.minimaj || all {
        rows.push(("minimaj", json!(minimaj(mu))));
    }
    if a.maj {
        rows.push(("maj", json!(maj_word(&mu.reading_word()))));
    }
    if a.des || all {
        rows.push(("des", json!(descent_set(&sw.word).0)));
    }
    if a.segmented || all {
        rows.push(("segmented", json!(sw.to_string())));
    }
    if let Some(i) = a.switch {
        if i == 0 {
            return Err(Failure::Usage("--switch takes a positive letter".into()));
        }
        rows.push(("switch", json!(omp_switch(mu, i).to_string())));
    }
    Ok((mu.to_string(), rows))
}

fn colored_stats(a: &StatArgs, sigma: &ColoredOsp) -> Result<StatRows, Failure> {
    if a.maj || a.des || a.switch.is_some() {
        return Err(Failure::Usage("--maj, --des and --switch apply to uncolored objects".into()));
    }
    let all = !(a.inv || a.minimaj || a.segmented || a.standardize);
    let mut rows = Vec::new();
    if a.inv || all {
        rows.push(("inv", json!(colored_inv(sigma))));
    }
    if a.minimaj || all {
        rows.push(("minimaj", json!(colored_minimaj(sigma))));
    }
    if a.segmented || all {
        rows.push(("segmented", json!(print_colored_segments(&colored_segmented(sigma)))));
    }
    if a.standardize || all {
        rows.push(("standardize", json!(colored_standardize(sigma).to_string())));
    }
    Ok((sigma.to_string(), rows))
}

fn plain_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(xs) => format!("{{{}}}", xs.iter().map(plain_value).collect::<Vec<_>>().join(",")),
        other => other.to_string(),
    }
}

fn csv_value(v: &Value) -> String {
    let s = plain_value(v);
    if s.contains([',', '"']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s
    }
}

// ---------------------------------------------------------------------------
// dist

fn cmd_dist(weight: &WeakComposition, family: &Family, out: &Output) -> CmdResult {
    let (inv, mm) = inv_and_minimaj(weight, family)?;
    match out.format {
        Format::Json => out.json(&json!({
            "weight": weight.0,
            "family": family,
            "inv": inv,
            "minimaj": mm,
            "equal": inv == mm,
        })),
        Format::Csv => {
            println!("statistic,degree,coefficient");
            for (name, p) in [("inv", &inv), ("minimaj", &mm)] {
                for (d, c) in p.coeffs().iter().enumerate() {
                    println!("{name},{d},{c}");
                }
            }
        }
        Format::Pretty => {
            println!("weight {weight}, {}", family_text(family));
            println!("inv:     {inv}");
            println!("minimaj: {mm}");
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// enum

fn cmd_enum(a: &EnumArgs, weight: &WeakComposition, family: &Family, out: &Output) -> CmdResult {
    let limit = a.limit.unwrap_or(usize::MAX);
    if let Some(r) = a.colors {
        let (Some(n), Family::Shape(alpha)) = (a.family.n, family) else {
            return Err(Failure::Usage("--colors needs --n and --shape".into()));
        };
        if r == 0 {
            return Err(Failure::Usage("--colors must be positive".into()));
        }
        let rows: Vec<(String, usize, usize, String)> = enum_colored_osp(n, r, alpha)?
            .take(limit)
            .map(|s| {
                let seg = print_colored_segments(&colored_segmented(&s));
                (s.to_string(), colored_inv(&s), colored_minimaj(&s), seg)
            })
            .collect();
        return print_enum(&rows, out);
    }
    let constraint = match family {
        Family::All => OmpConstraint::All,
        Family::Blocks(k) | Family::BlocksLastSize { k, .. } => OmpConstraint::Blocks(*k),
        Family::Shape(alpha) => OmpConstraint::Shape(alpha.clone()),
    };
    let last = match family {
        Family::BlocksLastSize { a, .. } => Some(*a),
        _ => None,
    };
    let rows: Vec<(String, usize, usize, String)> = enum_omp(weight, constraint)?
        .filter(|mu| last.is_none_or(|a| mu.blocks().last().map(Vec::len) == Some(a)))
        .take(limit)
        .map(|mu| (mu.to_string(), inv_omp(&mu), minimaj(&mu), segmented_word(&mu).to_string()))
        .collect();
    print_enum(&rows, out)
}

fn print_enum(rows: &[(String, usize, usize, String)], out: &Output) -> CmdResult {
    match out.format {
        Format::Json => {
            let list: Vec<Value> =
                rows.iter().map(|(o, i, m, s)| json!({"object": o, "inv": i, "minimaj": m, "segmented": s})).collect();
            out.json(&list);
        }
        Format::Csv => {
            println!("object,inv,minimaj,segmented");
            for (o, i, m, s) in rows {
                println!("\"{o}\",{i},{m},\"{s}\"");
            }
        }
        Format::Pretty => {
            for (o, i, m, s) in rows {
                println!("{o}  inv={i}  minimaj={m}  w={s}");
            }
            println!("{} objects", rows.len());
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// val and schur

fn cmd_val(a: &ValArgs, out: &Output) -> CmdResult {
    if a.k >= a.n {
        return Err(Failure::Usage(format!("need k < n, got n={} k={}", a.n, a.k)));
    }
    let mono = val_expansion(a.n, a.k, a.stat.into())?;
    let e = match a.basis {
        BasisChoice::Monomial => mono,
        BasisChoice::Schur => monomial_to_schur(&mono)?,
    };
    print_expansion(&e, out);
    Ok(())
}

fn print_expansion(e: &SymFuncExpansion, out: &Output) {
    match out.format {
        Format::Json => out.json(e),
        Format::Csv => {
            println!("partition,degree,coefficient");
            for (lambda, p) in e.coefficients.iter().rev() {
                for (d, c) in p.coeffs().iter().enumerate() {
                    println!("\"{lambda}\",{d},{c}");
                }
            }
        }
        Format::Pretty => {
            let sym = match e.basis {
                Basis::Monomial => "m",
                Basis::Schur => "s",
            };
            for (lambda, p) in e.coefficients.iter().rev() {
                println!("{sym}{lambda}: {p}");
            }
        }
    }
}

fn cmd_schur(a: &SchurArgs, out: &Output) -> CmdResult {
    if a.k >= a.n {
        return Err(Failure::Usage(format!("need k < n, got n={} k={}", a.n, a.k)));
    }
    let lambdas = match &a.lambda {
        Some(text) => {
            let lambda = IntegerPartition::new(parse_list(text, "partition")?)?;
            if lambda.size() != a.n {
                return Err(Failure::Usage(format!("{lambda} is not a partition of {}", a.n)));
            }
            vec![lambda]
        }
        None => partitions_of(a.n),
    };
    // the tableau formula indexes blocks, one more than k
    let coefficients = lambdas.iter().map(|l| (l.clone(), schur_coeff_formula(l, a.n, a.k + 1))).collect();
    let e = SymFuncExpansion { basis: Basis::Schur, n: a.n, k: Some(a.k), coefficients };
    if a.tableaux {
        let lambda = &lambdas[0];
        let rows: Vec<(Vec<Vec<usize>>, usize, usize)> =
            syt_enumerate(lambda).map(|t| (t.rows.clone(), syt_des(&t), syt_maj(&t))).collect();
        match out.format {
            Format::Json => out.json(&json!({
                "expansion": e,
                "tableaux": rows.iter().map(|(r, d, m)| json!({"rows": r, "des": d, "maj": m})).collect::<Vec<_>>(),
            })),
            Format::Csv => {
                println!("tableau,des,maj");
                for (r, d, m) in &rows {
                    println!("\"{}\",{d},{m}", tableau_text(r));
                }
            }
            Format::Pretty => {
                print_expansion(&e, out);
                for (r, d, m) in &rows {
                    println!("{}  des={d}  maj={m}", tableau_text(r));
                }
            }
        }
        return Ok(());
    }
    print_expansion(&e, out);
    Ok(())
}

fn tableau_text(rows: &[Vec<usize>]) -> String {
    rows.iter().map(|r| r.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")).collect::<Vec<_>>().join(" / ")
}

// ---------------------------------------------------------------------------
// verify

fn cmd_verify(a: &VerifyArgs, out: &Output) -> CmdResult {
    let suite: Suite = a.suite.parse()?;
    if a.r == 0 {
        return Err(Failure::Usage("--r must be positive".into()));
    }
    let report = suite.run(Bounds { n: a.n, r: a.r });
    match out.format {
        Format::Json => out.json(&report),
        Format::Csv => print!("{}", report.to_csv()),
        Format::Pretty => print!("{}", report.to_pretty()),
    }
    if report.all_pass() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}
