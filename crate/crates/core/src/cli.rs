//! Command-line front end: data loading, table rendering and verification.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::brauer::{parse_table, BrauerTable};
use crate::error::{Error, Result};
use crate::feasible::{
    canonical_key, feasible_characters, special_case_note, FeasibleCharacter, Flag, GroupContext, ModuleSelection,
    SolveOptions,
};
use crate::repchar::{module_high_weight, module_weights, ModuleKind};
use crate::rootsystem::{build_root_system, LieType};
use crate::torsion::{enumerate_classes, trace};

pub const DEFAULT_MAX_ORDER: u32 = 37;

#[derive(Parser, Debug)]
#[command(
    name = "feasichar",
    version,
    about = "Feasible characters of finite subgroups of exceptional algebraic groups"
)]
pub struct Cli {
    /// Progress messages on stderr.
    #[arg(short, long, global = true)]
    pub verbose: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Cartan matrix, positive roots and module data of a root system.
    Roots {
        #[arg(long)]
        group: LieType,
    },
    /// Conjugacy classes of elements of a given order, with module traces.
    Torsion {
        #[arg(long)]
        group: LieType,
        #[arg(long)]
        order: u32,
        #[arg(long, default_value = "adjoint")]
        module: ModuleKind,
    },
    /// Feasible characters of H on L(G) and V_min.
    Solve(SolveArgs),
    /// Compare computed feasible characters with an expected table.
    Verify {
        #[arg(long)]
        group: LieType,
        #[arg(long)]
        brauer: String,
        #[arg(long)]
        expected: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: u32,
    },
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    #[arg(long)]
    pub group: LieType,
    #[arg(long)]
    pub brauer: String,
    #[arg(long, value_delimiter = ',', default_value = "adjoint,minimal")]
    pub modules: Vec<ModuleKind>,
    #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
    pub max_order: u32,
    #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
    pub format: OutputFormat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Lines,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub group: LieType,
    pub modules: ModuleSelection,
    pub brauer: String,
    pub max_order: u32,
    pub format: OutputFormat,
    pub verbose: bool,
}

impl RunConfig {
    pub fn new(group: LieType, brauer: impl Into<String>) -> Self {
        RunConfig {
            group,
            modules: ModuleSelection::default(),
            brauer: brauer.into(),
            max_order: DEFAULT_MAX_ORDER,
            format: OutputFormat::Table,
            verbose: false,
        }
    }
}

/// Bundled data, overridable with `FEASICHAR_DATA`.
pub fn data_dir() -> PathBuf {
    match std::env::var_os("FEASICHAR_DATA") {
        Some(d) => PathBuf::from(d),
        None => PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/data")),
    }
}

/// Resolve a table name: an existing path, else a file in the data directory.
pub fn resolve_data_path(name: &str) -> PathBuf {
    let direct = Path::new(name);
    if direct.exists() {
        return direct.to_path_buf();
    }
    let dir = data_dir();
    let candidate = dir.join(name);
    if candidate.exists() || name.ends_with(".bct") {
        return candidate;
    }
    dir.join(format!("{name}.bct"))
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.display().to_string(), source })
}

fn with_file(path: &Path, e: Error) -> Error {
    match e {
        Error::Parse { line, msg } => Error::Parse { line, msg: format!("{}: {msg}", path.display()) },
        Error::Invalid { name, violations } => {
            Error::Invalid { name: format!("{name} ({})", path.display()), violations }
        }
        other => other,
    }
}

pub fn load_table(name: &str) -> Result<BrauerTable> {
    let path = resolve_data_path(name);
    parse_table(&read_file(&path)?).map_err(|e| with_file(&path, e))
}

/// `levi <G> <H> <p> yes|no` records in `levi.txt`.
pub fn levi_embeddable(g: LieType, h: &str, p: u64) -> Result<Option<bool>> {
    let path = data_dir().join("levi.txt");
    if !path.exists() {
        return Ok(None);
    }
    let text = read_file(&path)?;
    for (n, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let f: Vec<&str> = line.split_whitespace().collect();
        let bad =
            || Error::Parse { line: n + 1, msg: format!("{}: expected `levi <G> <H> <p> yes|no`", path.display()) };
        if f.len() != 5 || f[0] != "levi" {
            return Err(bad());
        }
        let lg: LieType = f[1].parse().map_err(|_| bad())?;
        let lp: u64 = f[3].parse().map_err(|_| bad())?;
        let val = match f[4] {
            "yes" => true,
            "no" => false,
            _ => return Err(bad()),
        };
        if lg == g && f[2] == h && lp == p {
            return Ok(Some(val));
        }
    }
    Ok(None)
}

pub fn cmd_roots(t: LieType) -> Result<String> {
    let rs = build_root_system(t);
    let mut s = String::new();
    let _ = writeln!(s, "type {t} rank {}", rs.rank);
    let _ = writeln!(s, "cartan");
    for row in &rs.cartan {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>2}")).collect();
        let _ = writeln!(s, "  {}", cells.join(" "));
    }
    let join = |v: &[i64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
    let _ = writeln!(s, "highest_root {}", join(&rs.highest_root_marks));
    let _ = writeln!(s, "affine_marks {}", join(&rs.affine_marks));
    let _ = writeln!(s, "weyl_order {}", t.weyl_order());
    if t.is_exceptional_target() {
        for kind in [ModuleKind::Adjoint, ModuleKind::Minimal] {
            let ws = module_weights(&rs, kind)?;
            let _ = writeln!(s, "module {} high_weight {} dim {}", kind.name(), module_high_weight(t, kind)?, ws.dim());
        }
    }
    let _ = writeln!(s, "positive_roots {}", rs.positive_roots.len());
    for r in &rs.positive_roots {
        let _ = writeln!(s, "  {}", join(r));
    }
    Ok(s)
}

pub fn cmd_torsion(t: LieType, m: u32, module: ModuleKind) -> Result<String> {
    if m == 0 {
        return Err(Error::Config("order must be positive".into()));
    }
    let rs = build_root_system(t);
    let ws = module_weights(&rs, module)?;
    let mut s = String::new();
    for c in enumerate_classes(&rs, m)? {
        let _ = writeln!(s, "{} trace({})={}", c, module.name(), trace(&c, &ws));
    }
    Ok(s)
}

/// Feasible characters in rendered form, independent of output syntax.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResultTable {
    pub subgroup: String,
    pub group: LieType,
    pub p: u64,
    pub adjoint_columns: Option<Vec<String>>,
    pub minimal_columns: Option<Vec<String>>,
    pub permutations: Vec<String>,
    pub notes: Vec<String>,
    pub rows: Vec<ResultRow>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResultRow {
    pub adjoint: Option<Vec<u32>>,
    pub minimal: Option<Vec<u32>>,
    pub possprim: Flag,
    pub nongcr: Flag,
    pub fusion: Vec<String>,
}

fn columns(t: &BrauerTable, dim: u64) -> Vec<usize> {
    (0..t.irreducibles.len()).filter(|&j| t.irreducibles[j].degree <= dim).collect()
}

fn render_cycles(cycles: &[Vec<String>]) -> String {
    cycles.iter().map(|c| format!("({})", c.join(" "))).collect()
}

pub fn build_result_table(
    t: &BrauerTable,
    ctx: &GroupContext,
    sel: ModuleSelection,
    chars: &[FeasibleCharacter],
) -> ResultTable {
    let g = ctx.lie_type();
    let show_minimal = sel.minimal && !(ctx.minimal_is_adjoint() && sel.adjoint);
    let adj_cols = columns(t, ctx.adjoint.dim());
    let min_cols = columns(t, ctx.minimal.dim());
    let label = |cols: &[usize]| cols.iter().map(|&j| t.irreducibles[j].label.clone()).collect::<Vec<_>>();
    let pick =
        |m: &Option<Vec<u32>>, cols: &[usize]| m.as_ref().map(|m| cols.iter().map(|&j| m[j]).collect::<Vec<_>>());
    let rows = chars
        .iter()
        .map(|fc| ResultRow {
            adjoint: if sel.adjoint { pick(&fc.mult_adjoint, &adj_cols) } else { None },
            minimal: if show_minimal { pick(&fc.mult_minimal, &min_cols) } else { None },
            possprim: fc.possprim,
            nongcr: fc.nongcr,
            fusion: fc
                .fusion
                .images
                .iter()
                .zip(&t.classes)
                .map(|(img, c)| format!("{}:{}", c.label, img.kac_string()))
                .collect(),
        })
        .collect();
    let permutations = t
        .outer_actions
        .iter()
        .map(|a| {
            let irrs = render_cycles(&a.irrs);
            if irrs.is_empty() {
                "()".to_string()
            } else {
                irrs
            }
        })
        .collect();
    ResultTable {
        subgroup: t.name.clone(),
        group: g,
        p: t.p,
        adjoint_columns: sel.adjoint.then(|| label(&adj_cols)),
        minimal_columns: show_minimal.then(|| label(&min_cols)),
        permutations,
        notes: special_case_note(g, t.p).map(str::to_string).into_iter().collect(),
        rows,
    }
}

fn join_u32(v: &[u32]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn render_table(r: &ResultTable) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "group {} in {} p {}", r.subgroup, r.group, r.p);
    if let Some(c) = &r.adjoint_columns {
        let _ = writeln!(s, "module L(G) {}", c.join(" "));
    }
    if let Some(c) = &r.minimal_columns {
        let _ = writeln!(s, "module V_min {}", c.join(" "));
    }
    for p in &r.permutations {
        let _ = writeln!(s, "permutations {p}");
    }
    for n in &r.notes {
        let _ = writeln!(s, "# {n}");
    }
    for (i, row) in r.rows.iter().enumerate() {
        let mut parts = Vec::new();
        if let Some(a) = &row.adjoint {
            parts.push(join_u32(a));
        }
        if let Some(v) = &row.minimal {
            parts.push(join_u32(v));
        }
        parts.push(format!("possprim={} nongcr={}", row.possprim, row.nongcr));
        let _ = writeln!(s, "{}) {}", i + 1, parts.join(" | "));
    }
    s
}

pub fn render_lines(r: &ResultTable) -> String {
    let pairs = |labels: &[String], v: &[u32]| {
        labels.iter().zip(v).map(|(l, x)| format!("{l}:{x}")).collect::<Vec<_>>().join(",")
    };
    let mut s = String::new();
    for row in &r.rows {
        let mut parts = Vec::new();
        if let (Some(c), Some(a)) = (&r.adjoint_columns, &row.adjoint) {
            parts.push(format!("L={}", pairs(c, a)));
        }
        if let (Some(c), Some(v)) = (&r.minimal_columns, &row.minimal) {
            parts.push(format!("V={}", pairs(c, v)));
        }
        parts.push(format!("possprim={}", row.possprim));
        parts.push(format!("nongcr={}", row.nongcr));
        parts.push(format!("fusion={}", row.fusion.join(",")));
        let _ = writeln!(s, "{}", parts.join(" "));
    }
    s
}

/// Parse the human table format (fusion data is not part of it).
pub fn parse_result_table(text: &str) -> Result<ResultTable> {
    let mut header: Option<(String, LieType, u64)> = None;
    let mut adjoint_columns = None;
    let mut minimal_columns = None;
    let mut permutations = Vec::new();
    let mut notes = Vec::new();
    let mut rows = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let err = |msg: String| Error::Parse { line: n + 1, msg };
        if line.is_empty() {
            continue;
        }
        if let Some(c) = line.strip_prefix('#') {
            notes.push(c.trim().to_string());
            continue;
        }
        let f: Vec<&str> = line.split_whitespace().collect();
        match f[0] {
            "group" => {
                if f.len() != 6 || f[2] != "in" || f[4] != "p" {
                    return Err(err("expected `group <H> in <G> p <p>`".into()));
                }
                let g = LieType::from_str(f[3]).map_err(|e| err(e.to_string()))?;
                let p = f[5].parse().map_err(|_| err(format!("bad characteristic `{}`", f[5])))?;
                header = Some((f[1].to_string(), g, p));
            }
            "module" if f.len() >= 2 => {
                let cols: Vec<String> = f[2..].iter().map(|s| s.to_string()).collect();
                match f[1] {
                    "L(G)" => adjoint_columns = Some(cols),
                    "V_min" => minimal_columns = Some(cols),
                    other => return Err(err(format!("unknown module `{other}`"))),
                }
            }
            "permutations" => permutations.push(f[1..].join(" ")),
            first if first.ends_with(')') && first[..first.len() - 1].chars().all(|c| c.is_ascii_digit()) => {
                let body = line[first.len()..].trim();
                let segs: Vec<&str> = body.split('|').map(str::trim).collect();
                let want = adjoint_columns.is_some() as usize + minimal_columns.is_some() as usize + 1;
                if segs.len() != want {
                    return Err(err(format!("expected {want} `|`-separated segments")));
                }
                let nums = |s: &str, cols: &Vec<String>| -> Result<Vec<u32>> {
                    let v: Vec<u32> = s
                        .split_whitespace()
                        .map(|x| x.parse().map_err(|_| err(format!("bad multiplicity `{x}`"))))
                        .collect::<Result<_>>()?;
                    if v.len() != cols.len() {
                        return Err(err(format!("{} multiplicities for {} columns", v.len(), cols.len())));
                    }
                    Ok(v)
                };
                let mut i = 0;
                let adjoint = match &adjoint_columns {
                    Some(c) => {
                        i += 1;
                        Some(nums(segs[i - 1], c)?)
                    }
                    None => None,
                };
                let minimal = match &minimal_columns {
                    Some(c) => {
                        i += 1;
                        Some(nums(segs[i - 1], c)?)
                    }
                    None => None,
                };
                let (mut possprim, mut nongcr) = (None, None);
                for kv in segs[i].split_whitespace() {
                    let (k, v) = kv.split_once('=').ok_or_else(|| err(format!("expected key=value, got `{kv}`")))?;
                    let flag = Flag::from_str(v).map_err(|e| err(e.to_string()))?;
                    match k {
                        "possprim" => possprim = Some(flag),
                        "nongcr" => nongcr = Some(flag),
                        _ => return Err(err(format!("unknown flag `{k}`"))),
                    }
                }
                rows.push(ResultRow {
                    adjoint,
                    minimal,
                    possprim: possprim.ok_or_else(|| err("missing possprim".into()))?,
                    nongcr: nongcr.ok_or_else(|| err("missing nongcr".into()))?,
                    fusion: Vec::new(),
                });
            }
            other => return Err(err(format!("unrecognised record `{other}`"))),
        }
    }
    let (subgroup, group, p) = header.ok_or_else(|| Error::Parse { line: 1, msg: "missing group line".into() })?;
    Ok(ResultTable { subgroup, group, p, adjoint_columns, minimal_columns, permutations, notes, rows })
}

fn check_cap(t: &BrauerTable, cap: u32) -> Result<()> {
    let m = t.max_class_order();
    if m > cap {
        return Err(Error::Config(format!(
            "{} has elements of order {m}, above the order cap {cap}; raise --max-order",
            t.name
        )));
    }
    Ok(())
}

/// Load, solve and mark; returns the table and the solved characters.
pub fn run_solver(cfg: &RunConfig) -> Result<(BrauerTable, GroupContext, Vec<FeasibleCharacter>)> {
    let t = load_table(&cfg.brauer)?;
    check_cap(&t, cfg.max_order)?;
    if cfg.verbose {
        eprintln!("{}: {} classes, {} irreducibles", t.name, t.classes.len(), t.irreducibles.len());
    }
    let ctx = GroupContext::new(cfg.group)?;
    let opts = SolveOptions { modules: cfg.modules, levi_embeddable: levi_embeddable(cfg.group, &t.name, t.p)? };
    let chars = feasible_characters(&t, &ctx, &opts)?;
    if cfg.verbose {
        eprintln!("{} feasible characters up to outer automorphisms", chars.len());
    }
    Ok((t, ctx, chars))
}

pub fn cmd_solve(cfg: &RunConfig) -> Result<String> {
    let (t, ctx, chars) = run_solver(cfg)?;
    let table = build_result_table(&t, &ctx, cfg.modules, &chars);
    Ok(match cfg.format {
        OutputFormat::Table => render_table(&table),
        OutputFormat::Lines => render_lines(&table),
    })
}

type Key = (Option<Vec<u32>>, Option<Vec<u32>>);

fn expand(t: &BrauerTable, cols: &[String], vals: &[u32]) -> Result<Vec<u32>> {
    let mut full = vec![0; t.irreducibles.len()];
    for (l, &v) in cols.iter().zip(vals) {
        let j =
            t.irr_index(l).ok_or_else(|| Error::Config(format!("expected table names unknown irreducible `{l}`")))?;
        full[j] = v;
    }
    Ok(full)
}

fn describe(t: &BrauerTable, key: &Key) -> String {
    let show = |m: &Vec<u32>| {
        m.iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(j, a)| format!("{}^{a}", t.irreducibles[j].label))
            .collect::<Vec<_>>()
            .join("/")
    };
    let mut parts = Vec::new();
    if let Some(a) = &key.0 {
        parts.push(format!("L(G) {}", show(a)));
    }
    if let Some(v) = &key.1 {
        parts.push(format!("V_min {}", show(v)));
    }
    parts.join(" | ")
}

/// Outcome of comparing computed characters with an expected table.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub diffs: Vec<String>,
    pub rows_checked: usize,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.diffs.is_empty()
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        for d in &self.diffs {
            let _ = writeln!(s, "{d}");
        }
        if self.ok() {
            let _ = writeln!(s, "ok: {} rows match", self.rows_checked);
        } else {
            let _ = writeln!(s, "mismatch: {} differences", self.diffs.len());
        }
        s
    }
}

/// Compare rows up to the same symmetries used when deduplicating.
pub fn compare_tables(
    t: &BrauerTable,
    ctx: &GroupContext,
    computed: &[FeasibleCharacter],
    expected: &ResultTable,
) -> Result<VerifyReport> {
    let g = ctx.lie_type();
    let mut diffs = Vec::new();
    if expected.group != g {
        diffs.push(format!("group: expected {} but solving in {g}", expected.group));
    }
    if expected.p != t.p {
        diffs.push(format!("characteristic: expected {} but table has p = {}", expected.p, t.p));
    }
    let dual = g == LieType::E(6);
    let use_l = expected.adjoint_columns.is_some();
    let use_v = expected.minimal_columns.is_some();
    let mut want: BTreeMap<Key, (Flag, Flag)> = BTreeMap::new();
    for row in &expected.rows {
        let l = match (&expected.adjoint_columns, &row.adjoint) {
            (Some(c), Some(a)) => Some(expand(t, c, a)?),
            _ => None,
        };
        let v = match (&expected.minimal_columns, &row.minimal) {
            (Some(c), Some(a)) => Some(expand(t, c, a)?),
            _ => None,
        };
        let key = canonical_key(t, dual, &(l, v));
        if want.insert(key.clone(), (row.possprim, row.nongcr)).is_some() {
            diffs.push(format!("expected table lists {} twice", describe(t, &key)));
        }
    }
    let mut got: BTreeMap<Key, (Flag, Flag)> = BTreeMap::new();
    for fc in computed {
        let key =
            (if use_l { fc.mult_adjoint.clone() } else { None }, if use_v { fc.mult_minimal.clone() } else { None });
        let key = canonical_key(t, dual, &key);
        got.insert(key, (fc.possprim, fc.nongcr));
    }
    for (k, (pp, ng)) in &want {
        match got.get(k) {
            None => diffs.push(format!("missing: {}", describe(t, k))),
            Some((gp, gn)) if gp != pp || gn != ng => diffs.push(format!(
                "flags: {} expected possprim={pp} nongcr={ng}, computed possprim={gp} nongcr={gn}",
                describe(t, k)
            )),
            _ => {}
        }
    }
    for k in got.keys() {
        if !want.contains_key(k) {
            diffs.push(format!("unexpected: {}", describe(t, k)));
        }
    }
    Ok(VerifyReport { diffs, rows_checked: want.len() })
}

pub fn cmd_verify(cfg: &RunConfig, expected_path: &Path) -> Result<VerifyReport> {
    let path = if expected_path.exists() { expected_path.to_path_buf() } else { data_dir().join(expected_path) };
    let expected = parse_result_table(&read_file(&path)?).map_err(|e| with_file(&path, e))?;
    let (t, ctx, chars) = run_solver(cfg)?;
    compare_tables(&t, &ctx, &chars, &expected)
}

/// Entry point shared by the binary; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let verbose = cli.verbose;
    let outcome = match cli.command {
        Command::Roots { group } => cmd_roots(group).map(|s| (s, 0)),
        Command::Torsion { group, order, module } => cmd_torsion(group, order, module).map(|s| (s, 0)),
        Command::Solve(a) => {
            let mut modules = ModuleSelection { adjoint: false, minimal: false };
            for m in &a.modules {
                match m {
                    ModuleKind::Adjoint => modules.adjoint = true,
                    ModuleKind::Minimal => modules.minimal = true,
                }
            }
            let cfg = RunConfig {
                group: a.group,
                modules,
                brauer: a.brauer,
                max_order: a.max_order,
                format: a.format,
                verbose,
            };
            cmd_solve(&cfg).map(|s| (s, 0))
        }
        Command::Verify { group, brauer, expected, max_order } => {
            let cfg = RunConfig { max_order, verbose, ..RunConfig::new(group, brauer) };
            cmd_verify(&cfg, &expected).map(|r| {
                let code = if r.ok() { 0 } else { 1 };
                (r.render(), code)
            })
        }
    };
    match outcome {
        Ok((s, code)) => {
            print!("{s}");
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "group Alt5 in F4 p 3\nmodule L(G) 1 3a 3b 4\npermutations (3a 3b)\n# remark\n1) 21 1 0 7 | possprim=0 nongcr=?\n";

    #[test]
    fn result_table_round_trip() {
        let r = parse_result_table(SAMPLE).unwrap();
        assert_eq!((r.subgroup.as_str(), r.group, r.p), ("Alt5", LieType::F4, 3));
        assert!(r.minimal_columns.is_none());
        assert_eq!(r.rows[0].nongcr, Flag::Unknown);
        assert_eq!(render_table(&r), SAMPLE);
        assert!(render_lines(&r).contains("1:21,3a:1,3b:0,4:7"));
    }

    #[test]
    fn malformed_result_tables() {
        assert!(parse_result_table("1) 1 2 | possprim=0 nongcr=0\n").is_err());
        let short = SAMPLE.replace("21 1 0 7", "21 1 0");
        assert!(parse_result_table(&short).is_err());
        assert!(parse_result_table(&SAMPLE.replace("nongcr=?", "nongcr=2")).is_err());
    }
}
