//! The `homoglue` command line: file loading, dispatch and reports.
//!
//! Exit codes: 0 when every check passed, 1 when a consistency alarm fired,
//! 2 for input or usage errors, 3 when a verdict is inconclusive at the cutoff.

pub mod files;

use std::io::Write;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::approx::{ladder, presentation, test_modules, PresentationKind};
use crate::auscond::{
    battery_from, gorenstein_verdict, regular_verdict, ring_auslander, DimensionVerdict, SideFacts, Tri,
};
use crate::error::{Error, Result};
use crate::fixtures::{self, compute_truth, default_sample, expected_truth, module_label};
use crate::glue::{proper_coresolution, proper_resolution, GlueKind, ProperResolution, Subcategory};
use crate::quiver::{dual, Algebra, Representation};
use crate::resolve::{min_coresolution, min_resolution, AugmentedComplex, Direction, HomDim};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ALARM: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    JsonLines,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SubcatArg {
    Projectives,
    Injectives,
    ProjInj,
}

impl SubcatArg {
    fn build(self, alg: &Algebra) -> Subcategory {
        match self {
            SubcatArg::Projectives => Subcategory::projectives(alg),
            SubcatArg::Injectives => Subcategory::injectives(alg),
            SubcatArg::ProjInj => Subcategory::proj_inj(alg),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GlueArg {
    First,
    Last,
    FirstCores,
    LastCores,
}

impl From<GlueArg> for GlueKind {
    fn from(g: GlueArg) -> GlueKind {
        match g {
            GlueArg::First => GlueKind::First,
            GlueArg::Last => GlueKind::LastRes,
            GlueArg::FirstCores => GlueKind::FirstCores,
            GlueArg::LastCores => GlueKind::LastCores,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum VerdictArg {
    Gorenstein,
    Regular,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

#[derive(Parser, Debug)]
#[command(name = "homoglue", version, about = "Resolutions, gluing and Auslander-type conditions over bound quiver algebras")]
struct Cli {
    /// Largest homological degree examined before a dimension is reported as exceeding it.
    #[arg(long, global = true, default_value_t = 8)]
    cutoff: usize,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Number of random modules added to the standard sample.
    #[arg(long, global = true)]
    sample: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for the two sides of the condition battery.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct ModuleArgs {
    /// Algebra file, or the name of a built-in fixture.
    #[arg(long)]
    algebra: String,
    /// Module file, or one of `S<v>`, `P<v>`, `I<v>`, `R`, `DR`, `zero`.
    #[arg(long)]
    module: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Minimal projective resolution, or a resolution by a subcategory.
    Resolve {
        #[command(flatten)]
        input: ModuleArgs,
        #[arg(long)]
        length: Option<usize>,
        #[arg(long, value_enum)]
        subcat: Option<SubcatArg>,
    },
    /// Minimal injective coresolution, or a coresolution by a subcategory.
    Coresolve {
        #[command(flatten)]
        input: ModuleArgs,
        #[arg(long)]
        length: Option<usize>,
        #[arg(long, value_enum)]
        subcat: Option<SubcatArg>,
    },
    /// Glue resolutions of two terms of a short exact sequence.
    Glue {
        #[arg(value_enum)]
        kind: GlueArg,
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        ses: String,
        #[arg(long, value_enum, default_value_t = SubcatArg::Projectives)]
        subcat: SubcatArg,
        #[arg(long, default_value_t = 3)]
        length: usize,
    },
    /// The Auslander condition on the regular module and the equivalent conditions on a sample.
    Auslander {
        #[arg(long)]
        algebra: String,
        /// Depth of the condition; defaults to the cutoff.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Auslander-Gorenstein or Auslander-regular verdict with its module inequalities.
    Verdict {
        #[arg(value_enum)]
        kind: VerdictArg,
        #[arg(long)]
        algebra: String,
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
    /// Approximation sequences with bounded injective dimension.
    Approx {
        #[arg(value_enum)]
        side: SideArg,
        #[command(flatten)]
        input: ModuleArgs,
        #[arg(long, default_value_t = 1)]
        i: usize,
        #[arg(long, default_value_t = 0)]
        k: usize,
        /// Also build every level up to `i` and the maps between them.
        #[arg(long)]
        ladder: bool,
    },
    /// Print a built-in algebra, or regenerate its fact table.
    Fixture {
        name: String,
        #[arg(long)]
        selftest: bool,
    },
}

/// One report entry: its text rendering and the same fields as JSON.
struct Record {
    text: Vec<String>,
    json: Value,
}

#[derive(Default)]
struct Report {
    records: Vec<Record>,
    alarms: usize,
    inconclusive: bool,
}

impl Report {
    fn push(&mut self, kind: &str, text: Vec<String>, mut json: Value) {
        if let Value::Object(m) = &mut json {
            m.insert("record".into(), Value::String(kind.into()));
        }
        self.records.push(Record { text, json });
    }

    fn alarm(&mut self, what: String) {
        self.alarms += 1;
        self.push("alarm", vec![format!("ALARM: {}", what)], json!({ "message": what }));
    }

    fn tri(&mut self, t: Tri) {
        if t == Tri::Inconclusive {
            self.inconclusive = true;
        }
    }

    fn write(&self, format: Format, out: &mut dyn Write) -> std::io::Result<()> {
        for r in &self.records {
            match format {
                Format::Text => {
                    for l in &r.text {
                        writeln!(out, "{}", l)?;
                    }
                }
                Format::JsonLines => writeln!(out, "{}", r.json)?,
            }
        }
        Ok(())
    }

    fn code(&self) -> i32 {
        if self.alarms > 0 {
            EXIT_ALARM
        } else if self.inconclusive {
            EXIT_INCONCLUSIVE
        } else {
            EXIT_OK
        }
    }
}

/// Parses `args` (including the program name) and runs the command,
/// writing the report to `out` and diagnostics to `err`.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e);
                    return EXIT_OK;
                }
                _ => EXIT_INPUT,
            };
            let _ = write!(err, "{}", e);
            return code;
        }
    };
    let format = cli.format;
    match dispatch(cli) {
        Ok(report) => {
            if report.write(format, out).is_err() {
                return EXIT_INPUT;
            }
            report.code()
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}", e);
            match e {
                Error::Inconclusive(_) => EXIT_INCONCLUSIVE,
                _ => EXIT_INPUT,
            }
        }
    }
}

fn read_file(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse { line: 0, col: 0, msg: format!("{}: {}", path, e) })
}

/// A path to an algebra file, or a fixture name when no such file exists.
pub fn load_algebra(source: &str) -> Result<Algebra> {
    if !Path::new(source).exists() && fixtures::NAMES.contains(&source) {
        return fixtures::algebra(source);
    }
    let stem = Path::new(source).file_stem().and_then(|s| s.to_str()).unwrap_or("algebra");
    files::parse_algebra(&read_file(source)?, stem).map_err(|e| with_path(e, source))
}

/// A path to a module file, or a shorthand for a standard module.
pub fn load_module(source: &str, alg: &Algebra) -> Result<Representation> {
    if !Path::new(source).exists() {
        if let Some(m) = standard_module(source, alg) {
            return Ok(m);
        }
    }
    files::parse_module(&read_file(source)?, alg).map_err(|e| with_path(e, source))
}

fn with_path(e: Error, path: &str) -> Error {
    match e {
        Error::Parse { line, col, msg } if line > 0 => Error::Parse { line, col, msg: format!("{}: {}", path, msg) },
        other => other,
    }
}

fn standard_module(source: &str, alg: &Algebra) -> Option<Representation> {
    match source {
        "zero" => return Some(Representation::zero(alg)),
        "R" => return Some(Representation::regular(alg)),
        "DR" => return Some(Representation::coregular(alg)),
        _ => {}
    }
    let (tag, v) = source.split_at(1);
    let v: usize = v.parse().ok()?;
    if v == 0 || v > alg.vertex_count() {
        return None;
    }
    match tag {
        "S" => Some(Representation::simple(alg, v - 1)),
        "P" => Some(Representation::projective(alg, v - 1)),
        "I" => Some(Representation::injective(alg, v - 1)),
        _ => None,
    }
}

fn dims_json(m: &Representation) -> Value {
    json!(m.dims())
}

fn multiplicities(c: &AugmentedComplex) -> Vec<Vec<usize>> {
    (0..c.terms.len()).map(|i| c.multiplicities(i).unwrap_or_else(|| c.terms[i].dims().to_vec())).collect()
}

fn dispatch(cli: Cli) -> Result<Report> {
    let mut r = Report::default();
    let sample_size = cli.sample.unwrap_or(fixtures::DEFAULT_SAMPLE_SIZE);
    match cli.command {
        Command::Resolve { input, length, subcat } => {
            resolve_cmd(&mut r, &input, length.unwrap_or(cli.cutoff), subcat, Direction::Resolution)?
        }
        Command::Coresolve { input, length, subcat } => {
            resolve_cmd(&mut r, &input, length.unwrap_or(cli.cutoff), subcat, Direction::Coresolution)?
        }
        Command::Glue { kind, algebra, ses, subcat, length } => glue_cmd(&mut r, kind.into(), &algebra, &ses, subcat, length)?,
        Command::Auslander { algebra, n } => {
            let alg = load_algebra(&algebra)?;
            let sample = default_sample(&alg, sample_size, cli.seed);
            auslander_cmd(&mut r, &alg, n.unwrap_or(cli.cutoff), cli.cutoff, &sample, cli.jobs)
        }
        Command::Verdict { kind, algebra, n } => {
            let alg = load_algebra(&algebra)?;
            let sample = default_sample(&alg, sample_size, cli.seed);
            verdict_cmd(&mut r, &alg, kind, n, cli.cutoff, &sample)?
        }
        Command::Approx { side, input, i, k, ladder } => approx_cmd(&mut r, side, &input, i, k, ladder, cli.cutoff, cli.seed)?,
        Command::Fixture { name, selftest } => fixture_cmd(&mut r, &name, selftest)?,
    }
    Ok(r)
}

fn resolve_cmd(r: &mut Report, input: &ModuleArgs, length: usize, subcat: Option<SubcatArg>, dir: Direction) -> Result<()> {
    let alg = load_algebra(&input.algebra)?;
    let m = load_module(&input.module, &alg)?;
    let (word, dim_name) = match dir {
        Direction::Resolution => ("resolution", "pd"),
        Direction::Coresolution => ("coresolution", "id"),
    };
    let (complex, flags, label) = match subcat {
        None => {
            let c = match dir {
                Direction::Resolution => min_resolution(&m, length),
                Direction::Coresolution => min_coresolution(&m, length),
            };
            (c, None, "minimal")
        }
        Some(s) => {
            let sc = s.build(&alg);
            let p = match dir {
                Direction::Resolution => proper_resolution(&sc, &m, length)?,
                Direction::Coresolution => proper_coresolution(&sc, &m, length)?,
            };
            let flags = p.flags.clone();
            (p.complex, Some(flags), "proper")
        }
    };
    let exact = complex.is_exact();
    let terminates = complex.terminates();
    let last = complex.terms.iter().rposition(|t| !t.is_zero()).unwrap_or(0);
    let value = if terminates { HomDim::Finite(last) } else { HomDim::Exceeds(length) };
    let mut complex = complex;
    if terminates {
        complex.terms.truncate(last + 1);
        complex.differentials.truncate(last);
        if let Some(s) = complex.summands.as_mut() {
            s.truncate(last + 1);
        }
    }
    let mults = multiplicities(&complex);
    let mut text = vec![format!("{} {} of {} {}: {} = {}", label, word, module_label(&m), fmt_dims(m.dims()), dim_name, value)];
    for (i, t) in mults.iter().enumerate() {
        text.push(format!("  term {}: {}", i, fmt_dims(t)));
    }
    let body = files::emit_complex(&complex);
    text.extend(body.lines().map(str::to_string));
    let mut j = json!({
        "algebra": alg.name(),
        "module": dims_json(&m),
        "direction": word,
        "kind": label,
        "length": length,
        "terms": mults,
        "exact": exact,
        "terminates": terminates,
        dim_name: value,
        "complex": body,
    });
    if let Some(f) = &flags {
        j["flags"] = json!(f);
    }
    r.push(word, text, j);
    if !exact {
        r.alarm(format!("the {} is not exact", word));
    }
    Ok(())
}

fn fmt_dims(d: &[usize]) -> String {
    let parts: Vec<String> = d.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(","))
}

fn glue_cmd(r: &mut Report, kind: GlueKind, algebra: &str, ses_path: &str, subcat: SubcatArg, length: usize) -> Result<()> {
    let alg = load_algebra(algebra)?;
    let ses = files::parse_ses(&read_file(ses_path)?, &alg).map_err(|e| with_path(e, ses_path))?;
    let sc = subcat.build(&alg);
    let build = |m: &Representation| -> Result<ProperResolution> {
        match kind.direction() {
            Direction::Resolution => proper_resolution(&sc, m, length),
            Direction::Coresolution => proper_coresolution(&sc, m, length),
        }
    };
    let other = match kind {
        GlueKind::First | GlueKind::FirstCores => ses.right(),
        GlueKind::LastRes | GlueKind::LastCores => ses.left(),
    };
    let a = build(ses.middle())?;
    let b = build(other)?;
    let g = kind.glue(&ses, &a, &b)?;
    let c = &g.result.complex;
    let shapes: Vec<Vec<usize>> = c.terms.iter().map(|t| t.dims().to_vec()).collect();
    let bridge_split = match &g.bridge {
        Some(b) => Some(crate::glue::splitting_section(b)?.is_some()),
        None => None,
    };
    let body = files::emit_complex(c);
    let mut text = vec![
        format!("glue {} over {} ({}): resolves {}", kind.name(), alg.name(), sc.name, fmt_dims(c.module.dims())),
        format!("  exact: {}", g.result.flags.exact),
        format!("  shape matches: {}", g.shape_matches()),
        format!("  proper: {} (inherited {})", g.result.proper(), g.inherited_proper),
        format!("  strong: {} (inherited {})", g.result.strong(), g.inherited_strong),
    ];
    if let Some(s) = bridge_split {
        text.push(format!("  bridge splits: {}", s));
    }
    for (i, s) in shapes.iter().enumerate() {
        text.push(format!("  term {}: {}", i, fmt_dims(s)));
    }
    text.extend(body.lines().map(str::to_string));
    r.push(
        "glue",
        text,
        json!({
            "kind": kind.name(),
            "algebra": alg.name(),
            "subcat": sc.name,
            "module": dims_json(&c.module),
            "terms": shapes,
            "expected_shape": g.expected_shape,
            "flags": g.result.flags,
            "inherited_proper": g.inherited_proper,
            "inherited_strong": g.inherited_strong,
            "shape_matches": g.shape_matches(),
            "bridge_splits": bridge_split,
            "complex": body,
        }),
    );
    if !g.result.flags.exact {
        r.alarm("glued complex is not exact".into());
    }
    if !g.shape_matches() {
        r.alarm("glued terms differ from the expected shape".into());
    }
    if !g.inheritance_holds() {
        r.alarm("an inherited flag does not hold on the glued complex".into());
    }
    if bridge_split == Some(false) {
        r.alarm("the bridge sequence does not split".into());
    }
    Ok(())
}

fn auslander_cmd(r: &mut Report, alg: &Algebra, n: usize, cutoff: usize, sample: &[Representation], jobs: usize) {
    let v = ring_auslander(alg, n, cutoff);
    r.push(
        "ring",
        vec![
            format!("Auslander condition on {} at n={} (cutoff {}): {}", alg.name(), n, cutoff, v.verdict()),
            format!("  {}", v.explanation()),
            format!("  classification: {:?}", v.classification),
        ],
        json!({
            "algebra": alg.name(),
            "n": n,
            "cutoff": cutoff,
            "verdict": v.verdict(),
            "explanation": v.explanation(),
            "left": v.left,
            "right": v.right,
            "classification": v.classification,
            "symmetry_alarm": v.symmetry_alarm,
        }),
    );
    r.tri(v.verdict());
    if v.symmetry_alarm {
        r.alarm("left and right verdicts disagree".into());
    }
    let right_sample: Vec<Representation> = sample.iter().map(dual).collect();
    let op = alg.opposite();
    let (left, right) = if jobs > 1 {
        std::thread::scope(|s| {
            let h = s.spawn(|| SideFacts::new(&op, n, cutoff, &right_sample));
            let left = SideFacts::new(alg, n, cutoff, sample);
            (left, h.join().expect("worker thread"))
        })
    } else {
        (SideFacts::new(alg, n, cutoff, sample), SideFacts::new(&op, n, cutoff, &right_sample))
    };
    let b = battery_from(alg, n, cutoff, &left, &right);
    let mut text = vec![format!("equivalent conditions over {} sample modules:", b.sample.len())];
    for c in &b.conditions {
        let w = c.witness.as_ref().map(|w| format!(" [{}]", w)).unwrap_or_default();
        text.push(format!(
            "  ({}) {:<5} {:<28} {}{} ({} evaluated, {} skipped){}",
            c.index,
            c.side,
            c.key,
            c.verdict,
            if c.exact { " exact" } else { "" },
            c.evaluated,
            c.skipped,
            w
        ));
    }
    r.push("battery", text, json!(b));
    for a in &b.alarms {
        r.alarm(a.clone());
    }
}

fn verdict_cmd(r: &mut Report, alg: &Algebra, kind: VerdictArg, n: usize, cutoff: usize, sample: &[Representation]) -> Result<()> {
    let v: DimensionVerdict = match kind {
        VerdictArg::Gorenstein => gorenstein_verdict(alg, n, cutoff, sample)?,
        VerdictArg::Regular => regular_verdict(alg, n, cutoff, sample)?,
    };
    let name = match kind {
        VerdictArg::Gorenstein => "Auslander-Gorenstein",
        VerdictArg::Regular => "Auslander-regular",
    };
    let mut text = vec![
        format!("{} with bound {} on {}: {}", name, n, alg.name(), v.ring),
        format!("  Auslander: {}, id R = {}, id R^op = {}, gldim = {}", v.auslander, v.id_regular, v.id_regular_opposite, v.gldim),
    ];
    for c in [&v.modules, &v.mirrored, &v.syzygy_bound] {
        text.push(format!("  {}: {} ({} instances, {} skipped)", c.statement, c.conclusion, c.instances, c.skipped));
    }
    r.push("verdict", text, json!(v));
    r.tri(v.ring);
    for a in &v.alarms {
        r.alarm(a.clone());
    }
    if v.auslander == Tri::True && kind == VerdictArg::Gorenstein {
        let e = crate::approx::gorenstein_experiment(alg, cutoff, sample)?;
        let scans: Vec<String> =
            e.simples.iter().map(|s| format!("S({})→{}", s.vertex + 1, s.n.map_or("-".into(), |n| n.to_string()))).collect();
        r.push(
            "experiment",
            vec![
                format!("cosyzygy scan: {}; uniform n = {:?}", scans.join(" "), e.uniform_n),
                format!("  Gorenstein: {} (id R = {}, id R^op = {})", e.gorenstein, e.id_left, e.id_right),
                format!("  G(0) in sample: {}", e.g_class.join(" ")),
                format!("  projectives in sample: {}", e.projectives.join(" ")),
                format!("  regular-consistent: {}", e.regular_consistent),
            ],
            json!(e),
        );
        for a in &e.alarms {
            r.alarm(a.clone());
        }
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn approx_cmd(
    r: &mut Report,
    side: SideArg,
    input: &ModuleArgs,
    i: usize,
    k: usize,
    want_ladder: bool,
    cutoff: usize,
    seed: u64,
) -> Result<()> {
    let alg = load_algebra(&input.algebra)?;
    let m = load_module(&input.module, &alg)?;
    let kind = match side {
        SideArg::Left => PresentationKind::LeftInj,
        SideArg::Right => PresentationKind::RightG,
    };
    let tests = test_modules(&alg);
    let p = presentation(kind, &m, i, k, cutoff, &tests)?;
    let s = &p.sequence;
    let shape = format!("0 → {} → {} → {} → 0", fmt_dims(s.left().dims()), fmt_dims(s.middle().dims()), fmt_dims(s.right().dims()));
    let mut text = vec![
        format!("{} presentation of {} at i={} k={}: {}", kind.name(), module_label(&m), i, k, shape),
        format!("  exact: {}", s.is_valid()),
        format!("  id of I-part = {} (≤ {}: {})", p.id_bound, i + k, p.id_ok),
        format!("  G-part in G_{}({}): {}", i, k, p.g_report.verdict),
    ];
    if let Some(t) = &p.approximation {
        text.push(format!("  approximation: {}/{} test modules", t.passed, t.tested));
    }
    text.push("I-part".into());
    text.extend(files::emit_module(p.injective_part()).lines().map(str::to_string));
    text.push("G-part".into());
    text.extend(files::emit_module(p.gorenstein_part()).lines().map(str::to_string));
    r.push(
        "presentation",
        text,
        json!({
            "kind": kind,
            "module": dims_json(&m),
            "i": i,
            "k": k,
            "left": dims_json(s.left()),
            "middle": dims_json(s.middle()),
            "right": dims_json(s.right()),
            "exact": s.is_valid(),
            "id_bound": p.id_bound,
            "id_ok": p.id_ok,
            "g_report": p.g_report,
            "approximation": p.approximation,
            "degenerate": p.degenerate,
            "i_part": files::emit_module(p.injective_part()),
            "g_part": files::emit_module(p.gorenstein_part()),
        }),
    );
    r.tri(p.id_ok);
    r.tri(p.g_report.verdict);
    if !s.is_valid() {
        r.alarm("presentation is not exact".into());
    }
    if p.id_ok == Tri::False || p.g_report.verdict == Tri::False {
        r.alarm("a certificate fails".into());
    }
    if p.approximation.as_ref().is_some_and(|a| !a.holds()) {
        r.alarm("approximation property fails".into());
    }
    if want_ladder && i >= 2 {
        let l = ladder(kind, &m, i, k, cutoff, seed)?;
        let mut text = vec![format!("connecting maps up to level {}:", i)];
        let mut steps = Vec::new();
        for st in &l.steps {
            text.push(format!(
                "  {} → {}: epimorphic {}, commutes {}, kernel {} ({} tries)",
                st.upper,
                st.upper - 1,
                st.epimorphic,
                st.commutes,
                fmt_dims(&st.outer_kernel_dims),
                st.attempts
            ));
            steps.push(json!({
                "upper": st.upper,
                "epimorphic": st.epimorphic,
                "commutes": st.commutes,
                "kernel": st.outer_kernel_dims,
                "attempts": st.attempts,
            }));
        }
        text.push(format!("  composites valid: {}", l.composites_valid));
        r.push("ladder", text, json!({ "steps": steps, "composites_valid": l.composites_valid }));
        if !l.holds() {
            r.alarm("a connecting map is missing or does not commute".into());
        }
    }
    Ok(())
}

fn fixture_cmd(r: &mut Report, name: &str, selftest: bool) -> Result<()> {
    let alg = fixtures::algebra(name)?;
    if !selftest {
        let text = files::emit_algebra(&alg);
        r.push("algebra", text.lines().map(str::to_string).collect(), json!({ "name": name, "algebra": text }));
        return Ok(());
    }
    let expected = expected_truth(name)?;
    let computed = compute_truth(&alg);
    let e = serde_json::to_value(&expected).expect("serializable");
    let c = serde_json::to_value(&computed).expect("serializable");
    let mut text = vec![format!("fact table for {}:", name)];
    let mut mismatches = Vec::new();
    if let (Value::Object(em), Value::Object(cm)) = (&e, &c) {
        for (key, ev) in em {
            let cv = &cm[key];
            let ok = ev == cv;
            text.push(format!("  {:<20} {:<40} {}", key, cv.to_string(), if ok { "ok" } else { "MISMATCH" }));
            if !ok {
                mismatches.push(format!("{}: expected {}, computed {}", key, ev, cv));
            }
        }
    }
    r.push("truth", text, json!({ "name": name, "expected": e, "computed": c, "matches": mismatches.is_empty() }));
    for m in mismatches {
        r.alarm(m);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let argv: Vec<String> = std::iter::once("homoglue").chain(args.iter().copied()).map(String::from).collect();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(&argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn fixture_selftest_passes() {
        for name in fixtures::NAMES {
            let (code, out, _) = call(&["fixture", name, "--selftest"]);
            assert_eq!(code, 0, "{}", out);
            assert!(!out.contains("MISMATCH"));
        }
    }

    #[test]
    fn kron2_fails_with_witness() {
        let (code, out, _) = call(&["auslander", "--algebra", "kron2", "--cutoff", "4", "--sample", "4"]);
        assert_eq!(code, 0, "{}", out);
        assert!(out.contains("fails at i=0: fd E^0(R)=1"), "{}", out);
    }

    #[test]
    fn zero_module_has_empty_resolution() {
        let (code, out, _) = call(&["resolve", "--algebra", "kA2", "--module", "zero"]);
        assert_eq!(code, 0);
        assert!(out.contains("pd = 0"), "{}", out);
    }

    #[test]
    fn usage_and_input_errors() {
        assert_eq!(call(&["resolve"]).0, 2);
        assert_eq!(call(&["fixture", "nope"]).0, 2);
        let (code, _, err) = call(&["resolve", "--algebra", "/nonexistent.alg", "--module", "S1"]);
        assert_eq!(code, 2);
        assert!(err.contains("nonexistent"));
        let (code, _, err) = call(&["approx", "left", "--algebra", "kron2", "--module", "S1", "--cutoff", "4"]);
        assert_eq!(code, 2, "{}", err);
        assert!(err.contains("not in G_1(0)"), "{}", err);
    }

    #[test]
    fn json_lines_are_deterministic() {
        let args = ["auslander", "--algebra", "A3rad2", "--cutoff", "5", "--sample", "6", "--format", "json-lines", "--seed", "3"];
        let a = call(&args);
        let b = call(&args);
        assert_eq!(a.1, b.1);
        for line in a.1.lines() {
            let v: Value = serde_json::from_str(line).unwrap();
            assert!(v.get("record").is_some());
        }
        let mut threaded = args.to_vec();
        threaded.extend(["--jobs", "2"]);
        assert_eq!(call(&threaded).1, a.1);
    }
}
