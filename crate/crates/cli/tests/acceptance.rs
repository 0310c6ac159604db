//! Acceptance criteria, one line of output per criterion.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use locring::flmod::{cyclic_quotient, ideal_module, is_homomorphism, is_isomorphic};
use locring::gencrit::{is_I_generated, is_uniserial};
use locring::matlis::{is_I_cogenerated, matlis_dual};
use locring::oracle::verify::{expand_catalog, verify_expanded, RingData};
use locring::oracle::{enumerate_ideals, enumerate_submodules, Budgets, Catalog, VerificationReport};
use locring::presentation::parse_ring;
use locring::ring::{build, Ideal};

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn catalog() -> Catalog {
    Catalog::load_dir(root().join("catalog")).unwrap()
}

fn expanded(c: &Catalog) -> Vec<RingData> {
    expand_catalog(c).unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn report_table(ring: &str, table: &str) -> (String, Duration) {
    let path = root().join("catalog").join(format!("{ring}.ring"));
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_locring"))
        .args(["report", path.to_str().unwrap(), table])
        .output()
        .unwrap();
    let elapsed = start.elapsed();
    assert!(out.status.success());
    (String::from_utf8(out.stdout).unwrap(), elapsed)
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(root().join("fixtures").join(name)).unwrap()
}

/// The star columns of a table4 output.
fn star_columns(text: &str) -> (Vec<String>, Vec<String>, Vec<String>) {
    let mut cols = (Vec::new(), Vec::new(), Vec::new());
    for line in text.lines().skip(1) {
        let parts: Vec<&str> = line.split('|').map(str::trim).collect();
        cols.0.push(parts[0].to_string());
        cols.1.push(parts[1].to_string());
        cols.2.push(parts[2].to_string());
    }
    cols
}

fn strs(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn criterion_1() -> Outcome {
    for (ring, file, intermediates) in [("r4_gf2", "table4_r4_gf2.txt", 3), ("r4_gf3", "table4_r4_gf3.txt", 4)] {
        let (text, elapsed) = report_table(ring, "table4");
        ensure(text == golden(file), || format!("{ring}: output differs from {file}"))?;
        ensure(elapsed < Duration::from_secs(1), || format!("{ring}: took {elapsed:?}"))?;
        let (rows, lower, upper) = star_columns(&text);
        ensure(
            rows == strs(&["0", "m^2", &format!("m^2 < b < m ({intermediates} ideals)"), "m", "R"]),
            || format!("{ring}: rows {rows:?}"),
        )?;
        ensure(lower == strs(&["0", "m^2", "m^2", "m", "m"]), || format!("{ring}: b_* {lower:?}"))?;
        ensure(upper == strs(&["m^2", "m^2", "m", "m", "R"]), || format!("{ring}: b^* {upper:?}"))?;
    }
    Ok("R4 over GF(2) and GF(3) match goldens".into())
}

fn r4() -> std::sync::Arc<locring::ring::FiniteLocalAlgebra> {
    build(parse_ring("p=2 vars=x,y rels=x^2,y^2 trunc=3").unwrap()).unwrap()
}

fn criterion_2() -> Outcome {
    let (text, elapsed) = report_table("r4_gf2", "table2");
    ensure(text == golden("table2_r4_gf2.txt"), || format!("output {text:?}"))?;
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    let r = r4();
    let n = enumerate_ideals(&r, 1 << 8).unwrap().len();
    ensure(n == 7, || format!("{n} ideals enumerated"))?;
    Ok(text.trim().replace('\n', "; "))
}

fn criterion_3() -> Outcome {
    let r = r4();
    let m = Ideal::maximal(&r);
    let ideals = enumerate_ideals(&r, 1 << 8).unwrap().ideals(&r).unwrap();
    let mut subs = BTreeSet::new();
    let mut quots = BTreeSet::new();
    for a in &ideals {
        if is_I_cogenerated(&ideal_module(a).unwrap(), &m).unwrap() {
            subs.insert(a.describe());
        }
        if is_I_cogenerated(&cyclic_quotient(a).unwrap(), &m).unwrap() {
            quots.insert(format!("R/{}", a.describe()));
        }
    }
    let want_subs: BTreeSet<String> = ["0", "m^2"].iter().map(|s| s.to_string()).collect();
    let want_quots: BTreeSet<String> = ["R/R", "R/m", "R/m^2"].iter().map(|s| s.to_string()).collect();
    ensure(subs == want_subs, || format!("cogenerated submodules {subs:?}"))?;
    ensure(quots == want_quots, || format!("cogenerated quotients {quots:?}"))?;
    Ok(format!("submodules {subs:?}, quotients {quots:?}"))
}

fn sweep(id: &str, data: &[RingData], budgets: Budgets) -> Result<(VerificationReport, Duration), String> {
    let start = Instant::now();
    let report = verify_expanded(id, data, budgets).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(report.passed(), || report.to_text())?;
    Ok((report, elapsed))
}

fn criterion_4(data: &[RingData]) -> Outcome {
    let (report, elapsed) = sweep("satz14", data, Budgets::default())?;
    let n = report.count("pass");
    ensure(n == report.cases.len(), || report.to_text())?;
    ensure(n >= 500, || format!("only {n} cases"))?;
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    let lengths: BTreeSet<usize> = data
        .iter()
        .flat_map(|rd| rd.modules.iter())
        .filter(|nm| nm.module.dim() > 0 && is_uniserial(&nm.module).unwrap())
        .map(|nm| nm.module.dim())
        .collect();
    ensure(lengths == (1..=5).collect(), || format!("uniserial lengths {lengths:?}"))?;
    Ok(format!("{n} (M, I) cases agree, lengths {lengths:?}, {elapsed:?}"))
}

fn criterion_5(data: &[RingData]) -> Outcome {
    let mut pairs = 0;
    for rd in data {
        for nm in &rd.modules {
            for i in &rd.ideals {
                let rep = is_I_generated(&nm.module, i).map_err(|e| format!("{} {} {i}: {e}", rd.name, nm.name))?;
                ensure(rep.method_trace == rep.method_injective, || {
                    format!("{} {} {i}: trace {} injective {}", rd.name, nm.name, rep.method_trace, rep.method_injective)
                })?;
                pairs += 1;
            }
        }
    }
    ensure(pairs >= 1000, || format!("only {pairs} pairs"))?;
    Ok(format!("{pairs} pairs, zero mismatches"))
}

fn criterion_6(data: &[RingData]) -> Outcome {
    let mut n = 0;
    for rd in data.iter().filter(|rd| rd.ring.p() == 2) {
        for nm in rd.modules.iter().filter(|nm| nm.module.dim() <= 6) {
            let crit = is_uniserial(&nm.module).unwrap();
            let chain = enumerate_submodules(&nm.module, 1 << 6).unwrap().is_totally_ordered();
            ensure(crit == chain, || format!("{} {}: criterion {crit}, lattice {chain}", rd.name, nm.name))?;
            n += 1;
        }
    }
    Ok(format!("{n} modules over GF(2)"))
}

/// Lattice budget covering every module of dimension at most 6.
fn dim6_budgets(data: &[RingData]) -> Budgets {
    let p = data.iter().map(|rd| rd.ring.p() as u128).max().unwrap_or(2);
    Budgets {
        lattice: p.pow(6),
        max_dim: 6,
        ..Budgets::default()
    }
}

fn criterion_7(data: &[RingData]) -> Outcome {
    let mut modules = 0;
    for rd in data {
        for nm in &rd.modules {
            let d = matlis_dual(&nm.module).unwrap();
            ensure(d.module().dim() == nm.module.dim(), || format!("{} {}: dual dimension", rd.name, nm.name))?;
            let (dd, eval) = d.double_dual_map().unwrap();
            let bijective = eval.rank() == nm.module.dim() && dd.dim() == nm.module.dim();
            ensure(bijective && is_homomorphism(&nm.module, &dd, &eval), || {
                format!("{} {}: evaluation is not an isomorphism", rd.name, nm.name)
            })?;
            ensure(is_isomorphic(&nm.module, &dd).unwrap(), || format!("{} {}: M ≇ M°°", rd.name, nm.name))?;
            modules += 1;
        }
    }
    let budgets = dim6_budgets(data);
    let (a, _) = sweep("lemma43", data, budgets)?;
    let (b, _) = sweep("folg48", data, budgets)?;
    for r in [&a, &b] {
        ensure(r.count("skipped") == 0, || r.summary())?;
    }
    Ok(format!("{modules} modules with M ≅ M°° and dim M° = dim M; {}; {}", a.summary(), b.summary()))
}

fn criterion_8(c: &Catalog) -> Outcome {
    let data = expanded(&c.filtered(|r| r.ring.p() == 2));
    let (report, elapsed) = sweep("satz46", &data, Budgets::default())?;
    ensure(report.count("pass") == report.cases.len(), || report.summary())?;
    ensure(!report.cases.is_empty(), || "no pairs".into())?;
    ensure(elapsed < Duration::from_secs(300), || format!("took {elapsed:?}"))?;
    Ok(format!("{} (M <= X, I) cases over GF(2), {elapsed:?}", report.cases.len()))
}

fn criterion_9(data: &[RingData]) -> Outcome {
    let (report, elapsed) = sweep("lemma41", data, dim6_budgets(data))?;
    ensure(report.count("pass") == report.cases.len(), || report.summary())?;
    Ok(format!("{} (B <= A, I) cases, {elapsed:?}", report.cases.len()))
}

fn criterion_10(data: &[RingData]) -> Outcome {
    let (report, _) = sweep("satz21", data, Budgets::default())?;
    ensure(report.count("pass") == report.cases.len(), || report.summary())?;
    let m_gen = data
        .iter()
        .flat_map(|rd| rd.modules.iter().map(move |nm| (rd, nm)))
        .filter(|(rd, nm)| {
            locring::flmod::min_generators(&nm.module).unwrap() <= 1
                && is_I_generated(&nm.module, &Ideal::maximal(&rd.ring)).unwrap().generated
        })
        .count();
    ensure(m_gen > 0 && m_gen < report.cases.len(), || "both kinds of cyclic module must occur".into())?;
    Ok(format!("{} cyclic modules, {m_gen} m-generated with valid witnesses", report.cases.len()))
}

fn main() -> ExitCode {
    let c = catalog();
    let data = expanded(&c);
    let criteria: Vec<Criterion> = vec![
        ("table4 reproduction", Box::new(criterion_1)),
        ("table2 classification", Box::new(criterion_2)),
        ("cogenerated ideals and quotients", Box::new(criterion_3)),
        ("uniserial equivalence sweep", Box::new(|| criterion_4(&data))),
        ("trace versus injective criterion", Box::new(|| criterion_5(&data))),
        ("uniseriality versus lattice", Box::new(|| criterion_6(&data))),
        ("duality suite", Box::new(|| criterion_7(&data))),
        ("strong smallness exhaustive", Box::new(|| criterion_8(&c))),
        ("closure extremality", Box::new(|| criterion_9(&data))),
        ("cyclic witness validity", Box::new(|| criterion_10(&data))),
    ];
    let mut failed = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(run))
            .unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail} [{:.2?}]", n + 1, start.elapsed()),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {detail}", n + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
