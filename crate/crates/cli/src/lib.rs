//! Command-line front end: ring summaries, single checks, the closure tables
//! and catalog sweeps.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use locring::closures::{is_I_gross, is_I_klein, is_strongly_I_gross, is_strongly_I_klein, lower_star, upper_star};
use locring::flmod::{cyclic_quotient, from_presentation, ideal_module, FinModule, Submodule};
use locring::gencrit::{is_I_generated, is_uniserial};
use locring::matlis::{cogeneration_report, injective_hull, is_cocyclic, matlis_dual};
use locring::oracle::verify::{expand_catalog, verify_expanded};
use locring::oracle::{enumerate_ideals, Budgets, Catalog, THEOREM_IDS};
use locring::presentation::{parse_ideal, parse_module, parse_ring};
use locring::ring::{build, eval_ideal, is_quasi_frobenius, socle_ring, FiniteLocalAlgebra, Ideal};
use locring::{Error, Result};

pub const EXIT_TRUE: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CROSS_CHECK: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "locring", version, about = "Finite local algebras and their finite-length modules")]
pub struct Cli {
    /// Reinterpret ring files over this prime.
    #[arg(long, global = true)]
    pub p: Option<u32>,
    /// Largest ambient dimension in submodule-pair sweeps.
    #[arg(long, global = true, default_value_t = 6)]
    pub max_dim: usize,
    /// Enumeration budget (bound on p^dim for lattices).
    #[arg(long, global = true, default_value_t = 256)]
    pub budget: u128,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Summarise a ring: dimension, basis, socle, m-adic chain.
    RingInfo {
        ring: String,
        /// Also count all ideals by enumeration.
        #[arg(long)]
        enumerate: bool,
    },
    /// Evaluate an ideal expression.
    IdealEval { ring: String, expr: String },
    /// Decide one predicate for a module and an ideal.
    Check {
        ring: String,
        /// Module file, or one of 0, k, R, E, R/<ideal>, <ideal>.
        module: String,
        ideal: String,
        predicate: Predicate,
    },
    /// Lower and upper star of an ideal B of R.
    Stars { ring: String, b: String, i: String },
    /// Print one of the closure or classification tables.
    Report { ring: String, name: Table },
    /// Sweep a catalog directory for one theorem.
    Verify {
        theorem: String,
        catalog: PathBuf,
        /// Restrict the sweep to one ring of the catalog.
        #[arg(long)]
        ring: Option<String>,
        /// Write the tab-separated per-case summary to this file.
        #[arg(long)]
        tsv: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Predicate {
    Generated,
    Cogenerated,
    Uniserial,
    Klein,
    Gross,
    StrongKlein,
    StrongGross,
    Cocyclic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Table {
    Table4,
    Table2,
}

/// Text to print and the process exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String, code: i32) -> Self {
        Self {
            stdout,
            stderr: String::new(),
            code,
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CrossCheck(_) => EXIT_CROSS_CHECK,
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        _ => EXIT_INPUT,
    }
}

pub fn run(cli: &Cli) -> Outcome {
    match dispatch(cli) {
        Ok(o) => o,
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: exit_code(&e),
        },
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::RingInfo { ring, enumerate } => ring_info(&load_ring(ring, cli.p)?, *enumerate, cli.budget),
        Command::IdealEval { ring, expr } => {
            let r = load_ring(ring, cli.p)?;
            let i = ideal(&r, expr)?;
            Ok(Outcome::ok(
                format!("{} generators={} dim={}\n", i.describe(), i.generator_string(), i.dim()),
                EXIT_TRUE,
            ))
        }
        Command::Check {
            ring,
            module,
            ideal: expr,
            predicate,
        } => {
            let r = load_ring(ring, cli.p)?;
            check(&r, module, &ideal(&r, expr)?, *predicate)
        }
        Command::Stars { ring, b, i } => {
            let r = load_ring(ring, cli.p)?;
            stars(&r, &ideal(&r, b)?, &ideal(&r, i)?)
        }
        Command::Report { ring, name } => {
            let r = load_ring(ring, cli.p)?;
            let text = match name {
                Table::Table4 => table4(&r, cli.budget)?,
                Table::Table2 => table2(&r, cli.budget)?,
            };
            Ok(Outcome::ok(text, EXIT_TRUE))
        }
        Command::Verify {
            theorem,
            catalog,
            ring,
            tsv,
        } => {
            let budgets = Budgets {
                lattice: cli.budget,
                max_dim: cli.max_dim,
                ..Budgets::default()
            };
            verify(theorem, catalog, ring.as_deref(), tsv.as_deref(), budgets)
        }
    }
}

/// Reads a ring from a file, or from inline presentation text.
pub fn load_ring(arg: &str, p: Option<u32>) -> Result<Arc<FiniteLocalAlgebra>> {
    let text = if Path::new(arg).is_file() {
        std::fs::read_to_string(arg).map_err(|e| Error::Io(format!("{arg}: {e}")))?
    } else if arg.contains("p=") {
        arg.to_string()
    } else {
        return Err(Error::Io(format!("{arg}: no such ring file")));
    };
    let mut pres = parse_ring(&text)?;
    if let Some(p) = p {
        let shown = pres.to_string();
        let rest = shown.split_once(' ').map(|(_, rest)| rest).unwrap_or("");
        pres = parse_ring(&format!("p={p} {rest}"))?;
    }
    build(pres)
}

pub fn ideal(r: &Arc<FiniteLocalAlgebra>, expr: &str) -> Result<Ideal> {
    let parsed = parse_ideal(expr, r.presentation())?;
    eval_ideal(r, &parsed, &|path: &str| {
        let m = load_module(r, path)?;
        locring::flmod::annihilator_module(&m)
    })
}

/// A module file, or a named module: `0`, `k`, `R`, `E`, `R^n`, `R/<ideal>`,
/// `(<module>)°`, or an ideal of R viewed as a module.
pub fn load_module(r: &Arc<FiniteLocalAlgebra>, arg: &str) -> Result<Arc<FinModule>> {
    if Path::new(arg).is_file() {
        let text = std::fs::read_to_string(arg).map_err(|e| Error::Io(format!("{arg}: {e}")))?;
        return from_presentation(r, &parse_module(&text, r)?);
    }
    let arg = arg.trim();
    match arg {
        "0" => return Ok(FinModule::zero(r)),
        "k" => return Ok(FinModule::residue_field(r)),
        "R" => return Ok(FinModule::regular(r)),
        "E" => return Ok(injective_hull(r)?.module().clone()),
        _ => {}
    }
    if let Some(inner) = arg.strip_prefix('(').and_then(|s| s.strip_suffix(")°")) {
        return Ok(matlis_dual(&load_module(r, inner)?)?.module().clone());
    }
    if let Some(n) = arg.strip_prefix("R^").and_then(|n| n.parse::<usize>().ok()) {
        return Ok(FinModule::free(r, n));
    }
    if let Some(expr) = arg.strip_prefix("R/") {
        return cyclic_quotient(&ideal(r, expr)?);
    }
    ideal_module(&ideal(r, arg)?)
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn verdict_code(b: bool) -> i32 {
    if b {
        EXIT_TRUE
    } else {
        EXIT_FALSE
    }
}

fn ring_info(r: &Arc<FiniteLocalAlgebra>, enumerate: bool, budget: u128) -> Result<Outcome> {
    let mut out = format!(
        "p={} dim={} basis={} socle={} qf={}",
        r.p(),
        r.dim(),
        r.format_basis().join(","),
        socle_ring(r)?.generator_string().trim_matches(|c| c == '(' || c == ')'),
        yes(is_quasi_frobenius(r)?),
    );
    if enumerate {
        let _ = write!(out, " ideals={}", enumerate_ideals(r, budget)?.len());
    }
    out.push('\n');
    let m = Ideal::maximal(r);
    let mut chain = vec![format!("R({})", r.dim())];
    let mut k = 1;
    loop {
        let pw = m.power(k)?;
        if pw.is_zero() {
            break;
        }
        let name = if k == 1 { "m".to_string() } else { format!("m^{k}") };
        chain.push(format!("{name}({})", pw.dim()));
        k += 1;
    }
    chain.push("0".into());
    let _ = writeln!(out, "chain: {}", chain.join(" > "));
    Ok(Outcome::ok(out, EXIT_TRUE))
}

fn regular_sub(r: &Arc<FiniteLocalAlgebra>, b: &Ideal) -> Result<Submodule> {
    Submodule::from_space(&FinModule::regular(r), b.space().clone())
}

fn sub_ideal(r: &Arc<FiniteLocalAlgebra>, s: &Submodule) -> Result<Ideal> {
    Ideal::from_space(r, s.space().clone())
}

fn check(r: &Arc<FiniteLocalAlgebra>, module: &str, i: &Ideal, predicate: Predicate) -> Result<Outcome> {
    use Predicate::*;
    let (verdict, detail) = match predicate {
        Generated => {
            let rep = is_I_generated(&load_module(r, module)?, i)?;
            (
                rep.generated,
                format!(" (trace={}, injective={})", rep.method_trace, rep.method_injective),
            )
        }
        Cogenerated => {
            let rep = cogeneration_report(&load_module(r, module)?, i)?;
            let pres = rep.via_presentation.map(|b| format!(", presentation={b}")).unwrap_or_default();
            (rep.cogenerated, format!(" (dual={}{pres})", rep.via_dual))
        }
        Uniserial => (is_uniserial(&load_module(r, module)?)?, String::new()),
        Cocyclic => (is_cocyclic(&load_module(r, module)?)?, String::new()),
        Klein | Gross | StrongKlein | StrongGross => {
            let b = regular_sub(r, &ideal(r, module)?)?;
            let v = match predicate {
                Klein => is_I_klein(&b, i)?,
                Gross => is_I_gross(&b, i)?,
                StrongKlein => is_strongly_I_klein(&b, i)?,
                _ => is_strongly_I_gross(&b, i)?,
            };
            (v, String::new())
        }
    };
    Ok(Outcome::ok(format!("{verdict}{detail}\n"), verdict_code(verdict)))
}

fn stars(r: &Arc<FiniteLocalAlgebra>, b: &Ideal, i: &Ideal) -> Result<Outcome> {
    let bs = regular_sub(r, b)?;
    let lower = sub_ideal(r, &lower_star(&bs, i)?)?;
    let upper = sub_ideal(r, &upper_star(&bs, i)?)?;
    Ok(Outcome::ok(
        format!(
            "B={} B_*={} B^*={} klein={} gross={}\n",
            b.describe(),
            lower.describe(),
            upper.describe(),
            yes(is_I_klein(&bs, i)?),
            yes(is_I_gross(&bs, i)?),
        ),
        EXIT_TRUE,
    ))
}

/// Lower and upper stars (for I = m) of every ideal; unnamed ideals with the
/// same dimension and stars share a row labelled by their named bounds.
pub fn table4(r: &Arc<FiniteLocalAlgebra>, budget: u128) -> Result<String> {
    let m = Ideal::maximal(r);
    let ideals = enumerate_ideals(r, budget)?.ideals(r)?;
    let named: Vec<&Ideal> = ideals.iter().filter(|i| i.alias().is_some()).collect();
    let mut rows: Vec<(String, String, String)> = Vec::new();
    let mut groups: BTreeMap<(usize, String, String), Vec<&Ideal>> = BTreeMap::new();
    let mut order: Vec<Option<(usize, String, String)>> = Vec::new();
    let mut singles: Vec<(String, String, String)> = Vec::new();
    for b in &ideals {
        let bs = regular_sub(r, b)?;
        let lo = sub_ideal(r, &lower_star(&bs, &m)?)?.describe();
        let up = sub_ideal(r, &upper_star(&bs, &m)?)?.describe();
        if b.alias().is_some() {
            order.push(None);
            singles.push((b.describe(), lo, up));
        } else {
            let key = (b.dim(), lo, up);
            if !groups.contains_key(&key) {
                order.push(Some(key.clone()));
            }
            groups.entry(key).or_default().push(b);
        }
    }
    let mut singles = singles.into_iter();
    for slot in order {
        match slot {
            None => rows.push(singles.next().expect("named row")),
            Some(key) => {
                let members = &groups[&key];
                let label = if members.len() == 1 {
                    members[0].describe()
                } else {
                    let below = bound(&named, members, true)?;
                    let above = bound(&named, members, false)?;
                    format!("{below} < b < {above} ({} ideals)", members.len())
                };
                rows.push((label, key.1.clone(), key.2.clone()));
            }
        }
    }
    let w0 = rows.iter().map(|r| r.0.chars().count()).max().unwrap_or(1).max(1);
    let w1 = rows.iter().map(|r| r.1.chars().count()).max().unwrap_or(3).max(3);
    let mut out = String::new();
    let _ = writeln!(out, "{:<w0$} | {:<w1$} | b^*", "b", "b_*");
    for (b, lo, up) in rows {
        let _ = writeln!(out, "{b:<w0$} | {lo:<w1$} | {up}");
    }
    Ok(out)
}

/// The largest named ideal below every member, or the smallest above.
fn bound(named: &[&Ideal], members: &[&Ideal], below: bool) -> Result<String> {
    let mut best: Option<&Ideal> = None;
    for n in named {
        let mut fits = true;
        for b in members {
            fits &= if below { b.contains(n)? && *b != *n } else { n.contains(b)? && *b != *n };
        }
        if !fits {
            continue;
        }
        let better = match best {
            None => true,
            Some(cur) => {
                if below {
                    n.contains(cur)?
                } else {
                    cur.contains(n)?
                }
            }
        };
        if better {
            best = Some(n);
        }
    }
    Ok(best.map(|i| i.describe()).unwrap_or_else(|| "?".into()))
}

/// Which ideals, and which cyclic quotients, are m-generated.
pub fn table2(r: &Arc<FiniteLocalAlgebra>, budget: u128) -> Result<String> {
    let m = Ideal::maximal(r);
    let ideals = enumerate_ideals(r, budget)?.ideals(r)?;
    let mut subs = Vec::new();
    let mut quots = Vec::new();
    for a in &ideals {
        if is_I_generated(&ideal_module(a)?, &m)?.generated {
            subs.push(a.describe());
        }
    }
    for a in ideals.iter().rev() {
        if is_I_generated(&cyclic_quotient(a)?, &m)?.generated {
            quots.push(format!("R/{}", a.describe()));
        }
    }
    Ok(format!(
        "m-generated submodules: {}\nm-generated quotients: {}\n",
        subs.join(", "),
        quots.join(", ")
    ))
}

fn verify(
    theorem: &str,
    dir: &Path,
    ring: Option<&str>,
    tsv: Option<&Path>,
    budgets: Budgets,
) -> Result<Outcome> {
    if !THEOREM_IDS.contains(&theorem) {
        return Ok(Outcome {
            stdout: String::new(),
            stderr: format!(
                "error: {}\nknown theorems: {}\n",
                Error::UnknownTheorem(theorem.to_string()),
                THEOREM_IDS.join(", ")
            ),
            code: EXIT_INPUT,
        });
    }
    let mut catalog = Catalog::load_dir(dir)?;
    if let Some(name) = ring {
        catalog = catalog.only(name);
        if catalog.rings().is_empty() {
            return Err(Error::Io(format!("{}: no ring named {name}", dir.display())));
        }
    }
    let data = expand_catalog(&catalog)?;
    let report = verify_expanded(theorem, &data, budgets)?;
    if let Some(path) = tsv {
        std::fs::write(path, report.to_tsv()).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    }
    let mut out = report.to_text();
    let mut seen = Vec::new();
    for c in report.counterexamples() {
        if !seen.contains(&c.ring) {
            let _ = writeln!(
                out,
                "reproduce: locring verify {theorem} {} --ring {} --max-dim {} --budget {}",
                dir.display(),
                c.ring,
                budgets.max_dim,
                budgets.lattice
            );
            seen.push(c.ring.clone());
        }
    }
    Ok(Outcome::ok(out, verdict_code(report.passed())))
}
