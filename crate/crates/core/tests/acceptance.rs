//! One pass/fail line per acceptance criterion. All comparisons are exact
//! (arithmetic is over GF(p)); seeds and sample sizes are pinned below.

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use homoglue::approx::{gorenstein_experiment, ladder, presentation, test_modules, torsionfree_check, PresentationKind};
use homoglue::auscond::{envelope_preserves_fd, equivalence_battery, is_gnm, ring_auslander, Tri};
use homoglue::fixtures::{
    algebra, default_sample, indecomposables, random_module, random_ses, DEFAULT_SAMPLE_SIZE, NAMES,
};
use homoglue::glue::{proper_coresolution, proper_resolution, splitting_section, GlueKind, Subcategory};
use homoglue::quiver::{direct_sum, dual, Algebra, Morphism, Representation, ShortExactSequence};
use homoglue::resolve::{
    ext, ext_via_coresolution, is_minimal_injective_coresolution, min_resolution, pd_value, Direction, HomDim,
};

const SEED: u64 = 20_261_014;
const GLUE_INSTANCES: usize = 20;
const GLUE_LENGTH: usize = 2;
const MAX_DIM: usize = 4;
const REJECTION_LIMIT: usize = 200;
const CUTOFF: usize = 6;

struct Outcome {
    pass: bool,
    detail: String,
    record: Value,
}

fn outcome(pass: bool, detail: String, record: Value) -> Outcome {
    Outcome { pass, detail, record }
}

fn subcats(alg: &Algebra) -> Vec<Subcategory> {
    vec![Subcategory::projectives(alg), Subcategory::injectives(alg), Subcategory::proj_inj(alg)]
}

/// The terms a gluing needs resolved: the middle one and the outer one it
/// is paired with.
fn glue_inputs(kind: GlueKind, ses: &ShortExactSequence) -> (Representation, Representation) {
    match kind {
        GlueKind::First | GlueKind::FirstCores => (ses.middle().clone(), ses.right().clone()),
        GlueKind::LastRes | GlueKind::LastCores => (ses.middle().clone(), ses.left().clone()),
    }
}

fn split_ses(alg: &Algebra, a: Representation, b: Representation) -> ShortExactSequence {
    let s = direct_sum(alg, &[a, b]);
    ShortExactSequence::new(s.injections[0].clone(), s.projections[1].clone()).unwrap()
}

/// Random sequences are drawn until the gluing hypotheses hold (surjective
/// precovers, Hom-exactness); after the rejection limit a split sequence of
/// generators is used.
fn glue_instance(
    kind: GlueKind,
    subcat: &Subcategory,
    alg: &Algebra,
    rng: &mut ChaCha8Rng,
    rejected: &mut usize,
) -> homoglue::Result<(homoglue::glue::Glued, bool)> {
    let resolve = |m: &Representation| match kind.direction() {
        Direction::Resolution => proper_resolution(subcat, m, GLUE_LENGTH),
        Direction::Coresolution => proper_coresolution(subcat, m, GLUE_LENGTH),
    };
    for _ in 0..REJECTION_LIMIT {
        let ses = random_ses(alg, rng, MAX_DIM);
        let (a, b) = glue_inputs(kind, &ses);
        let attempt = resolve(&a).and_then(|ra| resolve(&b).and_then(|rb| kind.glue(&ses, &ra, &rb)));
        match attempt {
            Ok(g) => return Ok((g, false)),
            Err(homoglue::Error::Precondition(_)) | Err(homoglue::Error::NoSolution(_)) => *rejected += 1,
            Err(e) => return Err(e),
        }
    }
    let g0 = subcat.generators[0].clone();
    let g1 = subcat.generators[subcat.generators.len() - 1].clone();
    let ses = split_ses(alg, g0, g1);
    let (a, b) = glue_inputs(kind, &ses);
    let g = kind.glue(&ses, &resolve(&a)?, &resolve(&b)?)?;
    Ok((g, true))
}

fn gluing_exactness() -> Outcome {
    let mut failures = Vec::new();
    let mut shapes = Vec::new();
    let (mut total, mut rejected, mut fallbacks) = (0, 0, 0);
    for name in NAMES {
        let alg = algebra(name).unwrap();
        for subcat in subcats(&alg) {
            for kind in [GlueKind::First, GlueKind::LastRes, GlueKind::LastCores, GlueKind::FirstCores] {
                let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ (total as u64));
                for t in 0..GLUE_INSTANCES {
                    total += 1;
                    match glue_instance(kind, &subcat, &alg, &mut rng, &mut rejected) {
                        Ok((g, fell_back)) => {
                            fallbacks += fell_back as usize;
                            let ok = g.result.flags.exact && g.shape_matches() && g.inheritance_holds();
                            if !ok {
                                failures.push(format!("{} {} {} #{}", name, subcat.name, kind.name(), t));
                            }
                            shapes.push(json!(g.result.complex.terms.iter().map(|x| x.dims().to_vec()).collect::<Vec<_>>()));
                        }
                        Err(e) => failures.push(format!("{} {} {} #{}: {}", name, subcat.name, kind.name(), t, e)),
                    }
                }
            }
        }
    }
    let detail = format!(
        "{} instances, {} failures, {} rejected draws, {} split fallbacks{}",
        total,
        failures.len(),
        rejected,
        fallbacks,
        failures.first().map(|f| format!("; first: {}", f)).unwrap_or_default()
    );
    outcome(failures.is_empty(), detail, json!({ "shapes": shapes, "rejected": rejected, "fallbacks": fallbacks }))
}

fn split_bridges() -> Outcome {
    let mut checked = 0;
    let mut failures = Vec::new();
    let mut rejected = 0;
    for name in ["kA2", "A3rad2"] {
        let alg = algebra(name).unwrap();
        for (kind, subcat) in [
            (GlueKind::First, Subcategory::projectives(&alg)),
            (GlueKind::LastCores, Subcategory::injectives(&alg)),
        ] {
            let mut rng = ChaCha8Rng::seed_from_u64(SEED + 2);
            for _ in 0..10 {
                let (g, _) = glue_instance(kind, &subcat, &alg, &mut rng, &mut rejected).unwrap();
                let b = g.bridge.expect("these gluings produce a bridge");
                checked += 1;
                match splitting_section(&b).unwrap() {
                    Some(s) if b.g.compose(&s) == Morphism::identity(b.right()) => {}
                    _ => failures.push(format!("{} {}", name, kind.name())),
                }
            }
        }
    }
    outcome(failures.is_empty(), format!("{} bridges, {} without a section", checked, failures.len()), json!({ "checked": checked }))
}

fn balanced_ext() -> Outcome {
    let mut mismatches = Vec::new();
    let mut values = Vec::new();
    for name in NAMES {
        let alg = algebra(name).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(SEED + 3);
        for _ in 0..50 {
            let m = random_module(&alg, &mut rng, MAX_DIM);
            let n = random_module(&alg, &mut rng, MAX_DIM);
            for i in 0..=3 {
                let a = ext(&m, &n, i).unwrap();
                let b = ext_via_coresolution(&m, &n, i).unwrap();
                values.push(a);
                if a != b {
                    mismatches.push(format!("{} {:?} {:?} i={}: {} vs {}", name, m.dims(), n.dims(), i, a, b));
                }
            }
        }
    }
    outcome(
        mismatches.is_empty(),
        format!("{} values, {} mismatches", values.len(), mismatches.len()),
        json!({ "values": values }),
    )
}

fn flat_dimension_witness() -> Outcome {
    let alg = algebra("kxx2").unwrap();
    let k = Representation::simple(&alg, 0);
    let g = is_gnm(&k, 5, 0, 8);
    let pd = pd_value(&k, 8);
    let pass = g.holds() && pd == HomDim::Exceeds(8);
    outcome(pass, format!("is_gnm(k,5,0) = {}, pd(k,8) = {}", g.verdict, pd), json!({ "gnm": g.verdict, "pd": pd }))
}

fn auslander_verdicts() -> Outcome {
    let expected = [("kA2", Tri::True), ("kA3", Tri::True), ("A3rad2", Tri::True), ("kxx2", Tri::True), ("kron2", Tri::False)];
    let mut pass = true;
    let mut parts = Vec::new();
    for (name, want) in expected {
        let v = ring_auslander(&algebra(name).unwrap(), 4, 4);
        pass &= v.verdict() == want && !v.symmetry_alarm && v.left.verdict == v.right.verdict;
        if name == "kron2" {
            pass &= v.explanation() == "fails at i=0: fd E^0(R)=1";
        }
        parts.push(format!("{}={}", name, v.verdict()));
    }
    outcome(pass, parts.join(" "), json!({ "verdicts": parts }))
}

fn battery_consistency() -> Outcome {
    let mut pass = true;
    let mut alarms = 0;
    let mut verdicts = Vec::new();
    for name in NAMES {
        let alg = algebra(name).unwrap();
        let sample = default_sample(&alg, DEFAULT_SAMPLE_SIZE, 0);
        let b = equivalence_battery(&alg, 4, CUTOFF, &sample);
        alarms += b.alarms.len();
        verdicts.push(json!(b.conditions.iter().map(|c| c.verdict).collect::<Vec<_>>()));
        if name == "kron2" {
            let c = b.condition("left", 4);
            pass &= c.verdict == Tri::False && c.failures.iter().any(|f| f.starts_with("P(1): fd E^0=1"));
        }
    }
    pass &= alarms == 0;
    outcome(pass, format!("{} alarms; kron2 (4) witness P(1)", alarms), json!({ "verdicts": verdicts }))
}

fn envelope_keeps_pd() -> Outcome {
    let alg = algebra("kA2").unwrap();
    let rows = envelope_preserves_fd(&alg, CUTOFF, &indecomposables(&alg).unwrap());
    let pass = rows.len() == 3 && rows.iter().all(|(_, pd, e0)| pd == e0);
    let parts: Vec<String> = rows.iter().map(|(l, pd, e0)| format!("{}: pd {} / pd E0 {}", l, pd, e0)).collect();
    outcome(pass, parts.join(", "), json!({ "rows": parts }))
}

fn presentations() -> Outcome {
    let mut count = 0;
    let mut failures = Vec::new();
    let mut shapes = Vec::new();
    for name in ["kA2", "A3rad2"] {
        let alg = algebra(name).unwrap();
        let tests = test_modules(&alg);
        for v in 0..alg.vertex_count() {
            let s = Representation::simple(&alg, v);
            for kind in [PresentationKind::LeftInj, PresentationKind::RightG] {
                for i in 1..=2 {
                    count += 1;
                    let p = presentation(kind, &s, i, 0, CUTOFF, &tests).unwrap();
                    let approx_ok = p.approximation.as_ref().is_some_and(|a| a.holds() && a.tested > 0);
                    if !(p.certified() && approx_ok) {
                        failures.push(format!("{} S({}) {} i={}", name, v + 1, kind.name(), i));
                    }
                    shapes.push(json!([p.sequence.left().dims(), p.sequence.middle().dims(), p.sequence.right().dims()]));
                }
                let l = ladder(kind, &s, 2, 0, CUTOFF, SEED).unwrap();
                if !l.holds() {
                    failures.push(format!("{} S({}) {} ladder", name, v + 1, kind.name()));
                }
            }
        }
    }
    outcome(
        failures.is_empty(),
        format!("{} presentations with ladders, {} failures{}", count, failures.len(), failures.first().map(|f| format!("; first: {}", f)).unwrap_or_default()),
        json!({ "shapes": shapes }),
    )
}

fn torsionfree_equivalence() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    let mut rows = Vec::new();
    for (name, n) in [("kA2", 1), ("A3rad2", 2)] {
        let alg = algebra(name).unwrap();
        let sample = default_sample(&alg, DEFAULT_SAMPLE_SIZE, 0);
        let r = torsionfree_check(&alg, n, CUTOFF, &sample).unwrap();
        let syz = r.rows.iter().filter(|x| x.syzygy).count();
        pass &= r.alarms.is_empty() && syz > 0;
        parts.push(format!("{} n={}: {} modules, {} syzygies, {} alarms", name, n, r.rows.len(), syz, r.alarms.len()));
        rows.push(json!(r.rows));
    }
    outcome(pass, parts.join("; "), json!({ "rows": rows }))
}

fn gorenstein_verdicts() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    let mut reports = Vec::new();
    for name in ["kA2", "A3rad2", "kxx2"] {
        let alg = algebra(name).unwrap();
        let sample = default_sample(&alg, DEFAULT_SAMPLE_SIZE, 0);
        let e = gorenstein_experiment(&alg, CUTOFF, &sample).unwrap();
        pass &= e.alarms.is_empty() && e.gorenstein == Tri::True && e.uniform_n.is_some();
        match name {
            "kxx2" => {
                pass &= e.id_left == HomDim::Finite(0) && e.regular_consistent == Tri::False;
                pass &= e.g_class.len() > e.projectives.len() && e.projectives.iter().all(|p| e.g_class.contains(p));
            }
            _ => pass &= e.regular_consistent == Tri::True,
        }
        parts.push(format!("{}: Gorenstein {} regular {}", name, e.gorenstein, e.regular_consistent));
        reports.push(json!(e));
    }
    outcome(pass, parts.join(", "), json!({ "reports": reports }))
}

fn duality_exchange() -> Outcome {
    let mut failures = 0;
    let mut count = 0;
    for name in NAMES {
        let alg = algebra(name).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(SEED + 11);
        for _ in 0..30 {
            let m = random_module(&alg, &mut rng, MAX_DIM);
            let d = min_resolution(&m, 3).dual();
            count += 1;
            if !(d.module == dual(&m) && d.is_exact() && is_minimal_injective_coresolution(&d)) {
                failures += 1;
            }
        }
    }
    outcome(failures == 0, format!("{} modules, {} failures", count, failures), json!({ "count": count }))
}

const CRITERIA: [(&str, fn() -> Outcome); 11] = [
    ("gluing exactness", gluing_exactness),
    ("split bridges", split_bridges),
    ("balanced Ext", balanced_ext),
    ("G-class module of infinite flat dimension", flat_dimension_witness),
    ("Auslander verdicts", auslander_verdicts),
    ("equivalent conditions battery", battery_consistency),
    ("envelope keeps pd on kA2", envelope_keeps_pd),
    ("approximation presentations", presentations),
    ("G_n(0) equals n-torsionfree", torsionfree_equivalence),
    ("Gorenstein and regular verdicts", gorenstein_verdicts),
    ("duality exchange", duality_exchange),
];

/// JSON-lines reports produced through the command line.
fn cli_reports() -> String {
    let commands: [&[&str]; 6] = [
        &["fixture", "A3rad2", "--selftest"],
        &["auslander", "--algebra", "kron2", "--cutoff", "4"],
        &["auslander", "--algebra", "kxx2", "--cutoff", "5", "--sample", "8"],
        &["verdict", "gorenstein", "--algebra", "A3rad2", "--n", "2", "--cutoff", "5"],
        &["approx", "right", "--algebra", "kA2", "--module", "S1", "--i", "2", "--ladder"],
        &["resolve", "--algebra", "A3rad2", "--module", "S1"],
    ];
    let mut out = Vec::new();
    for c in commands {
        let argv: Vec<String> =
            ["homoglue"].iter().chain(c.iter()).chain(["--format", "json-lines"].iter()).map(|s| s.to_string()).collect();
        let mut err = Vec::new();
        let code = homoglue::cli::run(&argv, &mut out, &mut err);
        out.extend(format!("{{\"exit\":{}}}\n", code).bytes());
    }
    String::from_utf8(out).unwrap()
}

fn suite_lines() -> String {
    let mut s = String::new();
    for (i, (name, f)) in CRITERIA.iter().enumerate() {
        let o = f();
        s.push_str(&json!({ "criterion": i + 1, "name": name, "pass": o.pass, "detail": o.detail, "record": o.record }).to_string());
        s.push('\n');
    }
    s
}

fn main() {
    let start = Instant::now();
    let mut first_run = String::new();
    let mut failed = 0;
    for (i, (name, f)) in CRITERIA.iter().enumerate() {
        let t = Instant::now();
        let o = f();
        first_run.push_str(
            &json!({ "criterion": i + 1, "name": name, "pass": o.pass, "detail": o.detail, "record": o.record }).to_string(),
        );
        first_run.push('\n');
        failed += !o.pass as usize;
        println!(
            "{} {:>2}. {} (tolerance: exact) {} [{:.1}s]",
            if o.pass { "PASS" } else { "FAIL" },
            i + 1,
            name,
            o.detail,
            t.elapsed().as_secs_f64()
        );
    }
    let t = Instant::now();
    first_run.push_str(&cli_reports());
    let second_run = suite_lines() + &cli_reports();
    let same = first_run == second_run;
    failed += !same as usize;
    println!(
        "{} 12. determinism (tolerance: byte-identical) {} bytes of json-lines, runs {} [{:.1}s]",
        if same { "PASS" } else { "FAIL" },
        first_run.len(),
        if same { "identical" } else { "differ" },
        t.elapsed().as_secs_f64()
    );
    println!("{} of 12 criteria passed in {:.1}s", 12 - failed, start.elapsed().as_secs_f64());
    if failed > 0 {
        std::process::exit(1);
    }
}
