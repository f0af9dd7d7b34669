//! Acceptance criteria. Each prints one `PASS`/`FAIL` line with its timing;
//! the test fails if any criterion is red.
//!
//! Lines go straight to the stderr handle so they show without `--nocapture`.

use std::io::Write;
use std::time::{Duration, Instant};

use sixops::battery::{run_battery, Battery, BatteryConfig};
use sixops::config::ContextSpec;
use sixops::hopf::{builtin_group, builtin_group_names, group_algebra, verify_hopf};
use sixops::linalg::{PrimeField, Rationals};
use sixops::report::{validate_report_json, CheckReport};

const SEED: u64 = 1;
const FIELDS: [&str; 3] = ["Q", "F2", "F3"];
const PAIRS: [(&str, &str); 5] = [("S3", "C3"), ("S3", "C2"), ("D4", "C2"), ("Q8", "C4"), ("C4", "C2")];
const TWISTS: [(&str, &str, &str); 4] =
    [("S3", "char:sign", "Q"), ("S3", "trivial", "F3"), ("C3", "char:1", "F7"), ("S3", "standard", "Q")];

type Outcome = std::result::Result<String, String>;

struct Line {
    id: usize,
    title: &'static str,
    ok: bool,
    elapsed: Duration,
    limit: Option<Duration>,
    note: String,
}

fn criterion(id: usize, title: &'static str, limit: Option<Duration>, body: impl FnOnce() -> Outcome) -> Line {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    let (mut ok, mut note) = match outcome {
        Ok(n) => (true, n),
        Err(n) => (false, n),
    };
    if let Some(l) = limit {
        if elapsed > l {
            ok = false;
            note = format!("{note}; over the {:.0?} limit", l);
        }
    }
    let line = Line { id, title, ok, elapsed, limit, note };
    let limit = line.limit.map(|l| format!(" / {:.0?}", l)).unwrap_or_default();
    let _ = writeln!(
        std::io::stderr(),
        "{} [{:>2}] {:<34} {:>9.3?}{limit}  {}",
        if line.ok { "PASS" } else { "FAIL" },
        line.id,
        line.title,
        line.elapsed,
        line.note
    );
    line
}

fn spec(json: &str) -> ContextSpec {
    ContextSpec::parse(json).expect("spec parses")
}

fn wirthmueller_spec(g: &str, h: &str, field: &str) -> ContextSpec {
    spec(&format!(r#"{{"kind":"wirthmueller","group":"{g}","subgroup":"{h}","field":"{field}","object":"trivial"}}"#))
}

fn twist_spec(g: &str, c: &str, field: &str) -> ContextSpec {
    spec(&format!(r#"{{"kind":"twist","group":"{g}","object":"{c}","field":"{field}"}}"#))
}

fn run(spec: &ContextSpec, battery: Battery, samples: usize) -> std::result::Result<CheckReport, String> {
    let cfg = BatteryConfig { spec: spec.clone(), battery, samples, seed: SEED };
    run_battery(&cfg).map_err(|e| format!("{battery} on {spec:?}: {e}"))
}

/// Every entry whose name satisfies `pick` passes, and at least `min` exist.
fn require(r: &CheckReport, pick: impl Fn(&str) -> bool, min: usize) -> std::result::Result<usize, String> {
    let chosen: Vec<_> = r.entries.iter().filter(|e| pick(&e.name)).collect();
    if chosen.len() < min {
        return Err(format!("{}: {} entries, wanted at least {min}", r.context, chosen.len()));
    }
    if let Some(bad) = chosen.iter().find(|e| !e.pass) {
        return Err(format!("{}: {} at {:?} failed: {}", r.context, bad.name, bad.at, bad.details));
    }
    Ok(chosen.len())
}

fn wirthmueller_contexts() -> Vec<ContextSpec> {
    PAIRS.iter().flat_map(|(g, h)| FIELDS.iter().map(move |f| wirthmueller_spec(g, h, f))).collect()
}

fn hopf_axioms() -> Outcome {
    let mut n = 0;
    for name in builtin_group_names() {
        let g = builtin_group(&name).map_err(|e| e.to_string())?;
        let reports = [
            verify_hopf(&group_algebra(&g, &Rationals)),
            verify_hopf(&group_algebra(&g, &PrimeField::new(2).unwrap())),
            verify_hopf(&group_algebra(&g, &PrimeField::new(3).unwrap())),
        ];
        for r in reports {
            if !r.all_pass() {
                return Err(format!("{name}: {:?}", r.failures().next()));
            }
            n += 1;
        }
    }
    if n < 12 {
        return Err(format!("only {n} algebras"));
    }
    Ok(format!("{n} algebras"))
}

fn adjunction_core(reports: &mut Vec<CheckReport>) -> Outcome {
    let mut n = 0;
    for s in wirthmueller_contexts() {
        let r = run(&s, Battery::AdjunctionCore, 10)?;
        n += require(&r, |e| e.starts_with("triangle"), 40)?;
        n += require(&r, |e| e.ends_with("Naturality"), 50)?;
        reports.push(r);
    }
    Ok(format!("{n} checks on {} contexts", reports.len()))
}

fn isomorphisms(reports: &[CheckReport]) -> Outcome {
    let mut n = 0;
    for r in reports {
        for name in ["alphaIso", "piIso", "internalHomIso", "internalHomRoundTrip"] {
            n += require(r, |e| e == name, 10)?;
        }
    }
    Ok(format!("{n} maps full rank"))
}

fn coherence() -> Outcome {
    let mut n = 0;
    let specs = wirthmueller_contexts().into_iter().chain(TWISTS.iter().map(|(g, c, f)| twist_spec(g, c, f)));
    for s in specs {
        let r = run(&s, Battery::Coherence, 10)?;
        n += require(&r, |e| e == "evaluationCoherence" || e == "nuCoherence", 20)?;
        n += require(&r, |e| e == "dualComparison", 10)?;
    }
    Ok(format!("{n} diagrams"))
}

fn conjugation() -> Outcome {
    let mut n = 0;
    let specs = PAIRS
        .iter()
        .map(|(g, h)| wirthmueller_spec(g, h, "Q"))
        .chain([wirthmueller_spec("S3", "C3", "F3")])
        .chain(TWISTS.iter().map(|(g, c, f)| twist_spec(g, c, f)));
    for s in specs {
        let r = run(&s, Battery::Conjugation, 5)?;
        // each member from each of the other two, per triad and sample
        n += require(&r, |e| e.starts_with("conjugation:"), 2 * 6 * 5)?;
        require(&r, |e| e == "triadIso", 30)?;
    }
    Ok(format!("{n} reconstructions"))
}

fn wirthmueller(reports: &mut Vec<CheckReport>) -> Outcome {
    let mut n = 0;
    for s in wirthmueller_contexts() {
        let r = run(&s, Battery::Wirthmueller, 10)?;
        let witness = r.named("witness").next().ok_or("no witness entry")?;
        if !witness.pass || witness.at != ["trivial"] {
            return Err(format!("{}: trivial not accepted as C", r.context));
        }
        require(&r, |e| e == "tauUnitAgreement" || e == "xiUnitAgreement", 2)?;
        n += require(&r, |e| ["omegaEta", "xiTau", "psiTau"].contains(&e), 30)?;
        n += require(&r, |e| e == "omegaIso", 10)?;
        n += require(&r, |e| e == "psiOmega" || e == "omegaPsi", 20)?;
        require(&r, |e| e == "mapsIntertwine", 10)?;
        reports.push(r);
    }
    Ok(format!("{n} checks on {} instances", reports.len()))
}

fn omega_criterion(reports: &[CheckReport]) -> Outcome {
    let mut n = 0;
    for r in reports {
        n += require(r, |e| ["sharpXiTau", "counitNaturality", "criterionAgreement"].contains(&e), 30)?;
        // passes exactly when the perturbed candidate is rejected
        n += require(r, |e| e == "perturbedSharpXiTau", 10)?;
        n += require(r, |e| e == "perturbedCriterionAgreement", 1)?;
    }
    Ok(format!("{n} checks"))
}

fn twist_and_vg() -> Outcome {
    let mut n = 0;
    let mut mismatch = None;
    for (g, c, f) in TWISTS {
        let s = twist_spec(g, c, f);
        let r = run(&s, Battery::Twist, 10)?;
        n += require(&r, |e| e == "phiNu" || e == "phiIso", 20)?;
        let v = run(&s, Battery::VgOmega, 10)?;
        n += require(&v, |e| e == "omegaVG", 10)?;
        let invertible = v.named("twistInvertible").next().and_then(|e| e.is_iso).ok_or("no invertibility entry")?;
        if invertible != (c != "standard") {
            return Err(format!("{c}: invertible = {invertible}"));
        }
        let isos = v.named("omegaVG").filter(|e| e.is_iso == Some(true)).count();
        if invertible != (isos == v.named("omegaVG").count()) || (!invertible && isos != 0) {
            return Err(format!("{c}: {isos} isomorphisms among omegaVG"));
        }
        if !invertible {
            let at_trivial = v.named("omegaVG").find(|e| e.at == ["trivial"]).ok_or("no omegaVG at trivial")?;
            mismatch = at_trivial.dims;
        }
    }
    match mismatch {
        Some([1, 4]) => Ok(format!("{n} checks; standard gives dims [1, 4]")),
        other => Err(format!("standard gave dims {other:?}")),
    }
}

fn dualizing() -> Outcome {
    let mut n = 0;
    for (g, h) in [("S3", "C3"), ("D4", "C2")] {
        for f in FIELDS {
            let s = spec(&format!(r#"{{"kind":"wirthmueller","group":"{g}","subgroup":"{h}","field":"{f}"}}"#));
            let r = run(&s, Battery::Dualizing, 10)?;
            n += require(&r, |e| e == "invertibleIffReflexive" || e == "unitReflexive", 2)?;
            n += require(&r, |e| e == "reflexive", 10)?;
        }
    }
    let r = run(&twist_spec("S3", "standard", "Q"), Battery::Dualizing, 10)?;
    require(&r, |e| e == "invertibleIffReflexive", 1)?;
    let unit = r.named("unitReflexive").next().ok_or("no unitReflexive entry")?;
    match (unit.dims, unit.is_iso) {
        (Some([1, 4]), Some(false)) => Ok(format!("{n} checks; standard fails with dims [1, 4]")),
        other => Err(format!("standard W gave {other:?}")),
    }
}

fn grothendieck() -> Outcome {
    let s = spec(r#"{"kind":"grothendieck","group":"S3","subgroup":"C3","field":"Q"}"#);
    let r = run(&s, Battery::GrothendieckShift, 10)?;
    let mut n = require(&r, |e| e.starts_with("triangleShriek"), 20)?;
    n += require(&r, |e| e == "phiUnitIso", 10)?;
    if !r.all_pass() {
        return Err(format!("{:?}", r.failures().next()));
    }
    Ok(format!("{n} checks, {} total", r.entries.len()))
}

fn determinism() -> Outcome {
    let specs = [
        wirthmueller_spec("S3", "C3", "F3"),
        twist_spec("S3", "standard", "Q"),
        spec(r#"{"kind":"grothendieck","group":"S3","subgroup":"C3","field":"Q"}"#),
    ];
    let mut n = 0;
    for s in &specs {
        for b in Battery::ALL {
            let (Ok(a), Ok(c)) = (run(s, b, 4), run(s, b, 4)) else { continue };
            let (ja, jc) = (a.to_json(), c.to_json());
            if ja != jc {
                return Err(format!("{b} on {}: runs differ", a.context));
            }
            let doc = serde_json::from_str(&ja).map_err(|e| e.to_string())?;
            validate_report_json(&doc).map_err(|e| format!("{b}: {e:?}"))?;
            n += 1;
        }
    }
    Ok(format!("{n} battery runs byte-identical"))
}

#[test]
fn acceptance_criteria() {
    let _ = writeln!(std::io::stderr());
    let secs = |s| Some(Duration::from_secs(s));
    let mut core = Vec::new();
    let mut wm = Vec::new();
    let lines = vec![
        criterion(1, "Hopf axioms", secs(1), hopf_axioms),
        criterion(2, "adjunction core", secs(10), || adjunction_core(&mut core)),
        criterion(3, "alpha, pi, internal Hom iso", None, || isomorphisms(&core)),
        criterion(4, "coherence", None, coherence),
        criterion(5, "conjugation", None, conjugation),
        criterion(6, "Wirthmueller battery", secs(120), || wirthmueller(&mut wm)),
        criterion(7, "omega criterion", None, || omega_criterion(&wm)),
        criterion(8, "twist and generalized omega", None, twist_and_vg),
        criterion(9, "dualizing objects", None, dualizing),
        criterion(10, "Grothendieck shift", None, grothendieck),
        criterion(11, "determinism", None, determinism),
    ];
    let red: Vec<_> = lines.iter().filter(|l| !l.ok).map(|l| l.id).collect();
    assert!(red.is_empty(), "failing criteria: {red:?}");
}
