//! Auslander-type conditions on modules and algebras, and the verdicts built
//! on them.

use std::fmt;

use serde::Serialize;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::fixtures::module_label;
use crate::quiver::{dual, kernel, random_morphism, Algebra, Representation};
use crate::resolve::{
    cosyzygy, id_value, is_injective, min_coresolution, min_resolution, pd_value, socle_dims, syzygy, HomDim,
};

/// Three-valued truth: a cutoff can leave a bounded check undecided.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Tri {
    True,
    False,
    Inconclusive,
}

impl Tri {
    pub fn from_bool(b: bool) -> Tri {
        if b {
            Tri::True
        } else {
            Tri::False
        }
    }

    pub fn from_option(b: Option<bool>) -> Tri {
        b.map_or(Tri::Inconclusive, Tri::from_bool)
    }

    pub fn and(self, o: Tri) -> Tri {
        match (self, o) {
            (Tri::False, _) | (_, Tri::False) => Tri::False,
            (Tri::True, Tri::True) => Tri::True,
            _ => Tri::Inconclusive,
        }
    }

    pub fn or(self, o: Tri) -> Tri {
        match (self, o) {
            (Tri::True, _) | (_, Tri::True) => Tri::True,
            (Tri::False, Tri::False) => Tri::False,
            _ => Tri::Inconclusive,
        }
    }

    pub fn not(self) -> Tri {
        match self {
            Tri::True => Tri::False,
            Tri::False => Tri::True,
            Tri::Inconclusive => Tri::Inconclusive,
        }
    }

    /// `self ⇒ o` is violated only when `self` is true and `o` false.
    pub fn violates_implication(self, o: Tri) -> bool {
        self == Tri::True && o == Tri::False
    }

    pub fn all<I: IntoIterator<Item = Tri>>(it: I) -> Tri {
        it.into_iter().fold(Tri::True, Tri::and)
    }
}

impl fmt::Display for Tri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tri::True => "true",
            Tri::False => "false",
            Tri::Inconclusive => "inconclusive",
        })
    }
}

/// Projective dimensions of the indecomposable injectives (and injective
/// dimensions of the indecomposable projectives), computed once per algebra.
/// Every term of a minimal (co)resolution is a sum of these, so its
/// dimension is the maximum over the summands present.
#[derive(Clone, Debug)]
pub struct DimCache {
    pub algebra: Algebra,
    pub cutoff: usize,
    pub pd_injectives: Vec<HomDim>,
    pub id_projectives: Vec<HomDim>,
}

impl DimCache {
    pub fn new(alg: &Algebra, cutoff: usize) -> DimCache {
        let n = alg.vertex_count();
        let pd_injectives = (0..n).map(|v| pd_value(&Representation::injective(alg, v), cutoff)).collect();
        let id_projectives =
            (0..n).map(|v| crate::resolve::id_value(&Representation::projective(alg, v), cutoff)).collect();
        DimCache { algebra: alg.clone(), cutoff, pd_injectives, id_projectives }
    }

    /// `pd` of `⊕ I(v)^{mult[v]}`.
    pub fn pd_of_injective_sum(&self, mult: &[usize]) -> HomDim {
        mult.iter().enumerate().filter(|(_, &m)| m > 0).map(|(v, _)| self.pd_injectives[v]).fold(HomDim::Finite(0), HomDim::max)
    }

    /// `id` of `⊕ P(v)^{mult[v]}`.
    pub fn id_of_projective_sum(&self, mult: &[usize]) -> HomDim {
        mult.iter().enumerate().filter(|(_, &m)| m > 0).map(|(v, _)| self.id_projectives[v]).fold(HomDim::Finite(0), HomDim::max)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GnmRow {
    pub index: usize,
    /// Multiplicities of the indecomposable injectives in `E^i(M)`.
    pub term: Vec<usize>,
    pub fd: HomDim,
    pub bound: usize,
    pub verdict: Tri,
}

/// Whether `fd E^i(M) ≤ m + i` for `0 ≤ i < n`, row by row.
#[derive(Clone, Debug, Serialize)]
pub struct GnmReport {
    pub dims: Vec<usize>,
    pub n: usize,
    pub m: usize,
    pub cutoff: usize,
    pub rows: Vec<GnmRow>,
    pub verdict: Tri,
    /// The coresolution reached a zero term within the examined range, so
    /// the verdict also holds at every larger depth.
    pub terminated: bool,
}

impl GnmReport {
    pub fn holds(&self) -> bool {
        self.verdict == Tri::True
    }

    /// First failing row, if any.
    pub fn failure(&self) -> Option<&GnmRow> {
        self.rows.iter().find(|r| r.verdict == Tri::False)
    }
}

pub fn is_gnm(m: &Representation, n: usize, k: usize, cutoff: usize) -> GnmReport {
    is_gnm_cached(&DimCache::new(m.algebra(), cutoff), m, n, k)
}

/// `pd` values above the cutoff are reported as such; a row whose bound
/// `m + i` is at least the cutoff cannot be refuted and is inconclusive.
pub fn is_gnm_cached(cache: &DimCache, m: &Representation, n: usize, k: usize) -> GnmReport {
    let len = n.saturating_sub(1);
    let c = min_coresolution(m, len);
    let mut rows = Vec::new();
    let mut terminated = false;
    for i in 0..n {
        let mult = c.multiplicities(i).unwrap();
        if mult.iter().all(|&x| x == 0) {
            terminated = true;
        }
        let fd = cache.pd_of_injective_sum(&mult);
        let bound = k + i;
        rows.push(GnmRow { index: i, term: mult, fd, bound, verdict: Tri::from_option(fd.at_most(bound)) });
    }
    let verdict = Tri::all(rows.iter().map(|r| r.verdict));
    GnmReport { dims: m.dims().to_vec(), n, m: k, cutoff: cache.cutoff, rows, verdict, terminated }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Classification {
    None,
    Auslander(usize),
    GorensteinCandidate(usize),
    Regular(usize),
}

#[derive(Clone, Debug, Serialize)]
pub struct RingVerdict {
    pub algebra: String,
    pub n: usize,
    pub cutoff: usize,
    pub left: GnmReport,
    pub right: GnmReport,
    pub classification: Classification,
    /// Left and right verdicts disagree although the condition is two-sided.
    pub symmetry_alarm: bool,
}

impl RingVerdict {
    pub fn holds(&self) -> bool {
        self.left.holds() && self.right.holds()
    }

    pub fn verdict(&self) -> Tri {
        self.left.verdict.and(self.right.verdict)
    }

    /// A one-line explanation of the first failure, e.g.
    /// `fails at i=0: fd E^0(R)=1`.
    pub fn explanation(&self) -> String {
        for (side, rep) in [("", &self.left), ("^op", &self.right)] {
            if let Some(r) = rep.failure() {
                return format!("fails at i={}: fd E^{}(R{})={}", r.index, r.index, side, r.fd);
            }
        }
        match self.verdict() {
            Tri::True => format!("holds at n={}", self.n),
            _ => format!("inconclusive at cutoff {}", self.cutoff),
        }
    }
}

/// The regular module is `G_n(0)` on both sides.
pub fn ring_auslander(alg: &Algebra, n: usize, cutoff: usize) -> RingVerdict {
    let left_cache = DimCache::new(alg, cutoff);
    let right_cache = DimCache::new(&alg.opposite(), cutoff);
    ring_auslander_cached(&left_cache, &right_cache, n)
}

pub fn ring_auslander_cached(left_cache: &DimCache, right_cache: &DimCache, n: usize) -> RingVerdict {
    let alg = &left_cache.algebra;
    let cutoff = left_cache.cutoff;
    let left = is_gnm_cached(left_cache, &Representation::regular(alg), n, 0);
    let right = is_gnm_cached(right_cache, &Representation::regular(&alg.opposite()), n, 0);
    let symmetry_alarm = matches!(
        (left.verdict, right.verdict),
        (Tri::True, Tri::False) | (Tri::False, Tri::True)
    );
    let classification = if left.holds() && right.holds() {
        let id_l = left_cache.id_of_projective_sum(&vec![1; alg.vertex_count()]);
        let id_r = right_cache.id_of_projective_sum(&vec![1; alg.vertex_count()]);
        match (id_l.max(id_r), crate::resolve::gldim(alg, cutoff)) {
            (_, HomDim::Finite(g)) => Classification::Regular(g),
            (HomDim::Finite(d), _) => Classification::GorensteinCandidate(d),
            _ => Classification::Auslander(n),
        }
    } else {
        Classification::None
    };
    RingVerdict { algebra: alg.name(), n, cutoff, left, right, classification, symmetry_alarm }
}

/// Three-valued `a ≤ b + offset` when either side may only be known to
/// exceed the cutoff.
pub fn dim_le(a: HomDim, b: HomDim, offset: usize) -> Tri {
    match (a, b) {
        (HomDim::Finite(x), HomDim::Finite(y)) => Tri::from_bool(x <= y + offset),
        (HomDim::Finite(x), HomDim::Exceeds(c)) if x <= c + 1 + offset => Tri::True,
        (HomDim::Exceeds(c), HomDim::Finite(y)) if y + offset <= c => Tri::False,
        _ => Tri::Inconclusive,
    }
}

/// Per-module data shared by all checks: `pd`, `id`, `fd E^i(M)` and
/// `id F_i(M)` for `i < n`, with `E^i` and `F_i` the terms of the minimal
/// injective coresolution and projective resolution.
#[derive(Clone, Debug)]
pub struct ModuleFacts {
    pub label: String,
    pub module: Representation,
    pub pd: HomDim,
    pub id: HomDim,
    pub e_fd: Vec<HomDim>,
    pub f_id: Vec<HomDim>,
}

impl ModuleFacts {
    pub fn new(cache: &DimCache, m: &Representation, n: usize) -> ModuleFacts {
        let len = n.saturating_sub(1);
        let e = min_coresolution(m, len);
        let f = min_resolution(m, len);
        let e_fd = (0..n).map(|i| cache.pd_of_injective_sum(&e.multiplicities(i).unwrap())).collect();
        let f_id = (0..n).map(|i| cache.id_of_projective_sum(&f.multiplicities(i).unwrap())).collect();
        ModuleFacts {
            label: module_label(m),
            module: m.clone(),
            pd: pd_value(m, cache.cutoff),
            id: id_value(m, cache.cutoff),
            e_fd,
            f_id,
        }
    }

    /// `G_n(k)` from the stored rows (`n` at most the stored depth).
    pub fn gnm(&self, n: usize, k: usize) -> Tri {
        Tri::all(self.e_fd.iter().take(n).enumerate().map(|(i, d)| Tri::from_option(d.at_most(k + i))))
    }
}

/// Facts about one side of the algebra: its regular module, indecomposable
/// projectives and injectives, and a module sample.
#[derive(Clone, Debug)]
pub struct SideFacts {
    pub cache: DimCache,
    pub regular: ModuleFacts,
    pub projectives: Vec<ModuleFacts>,
    pub injectives: Vec<ModuleFacts>,
    pub sample: Vec<ModuleFacts>,
}

impl SideFacts {
    pub fn new(alg: &Algebra, n: usize, cutoff: usize, sample: &[Representation]) -> SideFacts {
        let cache = DimCache::new(alg, cutoff);
        let nv = alg.vertex_count();
        let regular = ModuleFacts::new(&cache, &Representation::regular(alg), n);
        let projectives = (0..nv).map(|v| ModuleFacts::new(&cache, &Representation::projective(alg, v), n)).collect();
        let injectives = (0..nv).map(|v| ModuleFacts::new(&cache, &Representation::injective(alg, v), n)).collect();
        let sample = sample.iter().map(|m| ModuleFacts::new(&cache, m, n)).collect();
        SideFacts { cache, regular, projectives, injectives, sample }
    }
}

/// One universally quantified inequality evaluated over a list of modules.
#[derive(Clone, Debug, Serialize)]
pub struct Condition {
    /// Position in the list of equivalent conditions (1 to 7).
    pub index: usize,
    /// `left` for left modules over the algebra, `right` for the mirrored
    /// condition.
    pub side: &'static str,
    pub key: &'static str,
    /// Decided over a complete list (indecomposable projectives or
    /// injectives), not just the sample.
    pub exact: bool,
    pub verdict: Tri,
    pub evaluated: usize,
    pub skipped: usize,
    pub witness: Option<String>,
    /// Every failing instance, up to a fixed cap.
    pub failures: Vec<String>,
}

struct Tally {
    verdict: Tri,
    evaluated: usize,
    skipped: usize,
    witness: Option<String>,
    failures: Vec<String>,
}

const MAX_FAILURES: usize = 16;

impl Tally {
    fn new() -> Tally {
        Tally { verdict: Tri::True, evaluated: 0, skipped: 0, witness: None, failures: Vec::new() }
    }

    fn record(&mut self, t: Tri, witness: impl FnOnce() -> String) {
        self.evaluated += 1;
        if t == Tri::False && self.failures.len() < MAX_FAILURES {
            let w = witness();
            self.witness.get_or_insert_with(|| w.clone());
            self.failures.push(w);
        }
        self.verdict = self.verdict.and(t);
    }
}

fn cond(index: usize, side: &'static str, key: &'static str, exact: bool, t: Tally) -> Condition {
    Condition {
        index,
        side,
        key,
        exact,
        verdict: t.verdict,
        evaluated: t.evaluated,
        skipped: t.skipped,
        witness: t.witness,
        failures: t.failures,
    }
}

fn e_rows(t: &mut Tally, m: &ModuleFacts, k: usize, rows: usize) {
    for i in 0..rows.min(m.e_fd.len()) {
        let v = Tri::from_option(m.e_fd[i].at_most(k + i));
        t.record(v, || format!("{}: fd E^{}={} > {}", m.label, i, m.e_fd[i], k + i));
    }
}

fn side_conditions(this: &SideFacts, other: &SideFacts, side: &'static str, n: usize) -> Vec<Condition> {
    let mut out = Vec::new();
    let mut t = Tally::new();
    e_rows(&mut t, &this.regular, 0, n);
    out.push(cond(1, side, "regular-module-auslander", true, t));
    let mut t = Tally::new();
    for p in &this.projectives {
        e_rows(&mut t, p, 0, n);
    }
    out.push(cond(2, side, "projectives-auslander", true, t));
    for (index, key, rows) in [(3, "fd-injective-terms-shift", n), (4, "fd-injective-envelope", 1)] {
        let mut t = Tally::new();
        for m in &this.sample {
            if !m.pd.is_finite() {
                t.skipped += 1;
                continue;
            }
            for i in 0..rows.min(n) {
                let v = dim_le(m.e_fd[i], m.pd, i);
                t.record(v, || format!("{}: fd E^{}={} > fd+{}={}", m.label, i, m.e_fd[i], i, m.pd.finite().unwrap() + i));
            }
        }
        out.push(cond(index, side, key, false, t));
    }
    let mut t = Tally::new();
    for e in &other.injectives {
        for i in 0..n {
            let v = Tri::from_option(e.f_id[i].at_most(i));
            t.record(v, || format!("{}: id F_{}={} > {}", e.label, i, e.f_id[i], i));
        }
    }
    out.push(cond(5, side, "id-projective-terms-of-injectives", true, t));
    for (index, key, rows) in [(6, "id-projective-terms-shift", n), (7, "id-projective-cover", 1)] {
        let mut t = Tally::new();
        for m in &other.sample {
            if !m.id.is_finite() {
                t.skipped += 1;
                continue;
            }
            for i in 0..rows.min(n) {
                let v = dim_le(m.f_id[i], m.id, i);
                t.record(v, || format!("{}: id F_{}={} > id+{}={}", m.label, i, m.f_id[i], i, m.id.finite().unwrap() + i));
            }
        }
        out.push(cond(index, side, key, false, t));
    }
    out
}

/// The seven equivalent characterizations of the Auslander condition on
/// both sides, evaluated at depth `n`.
#[derive(Clone, Debug, Serialize)]
pub struct Battery {
    pub algebra: String,
    pub n: usize,
    pub cutoff: usize,
    pub sample: Vec<String>,
    pub conditions: Vec<Condition>,
    /// Observed truth values contradicting a proven implication.
    pub alarms: Vec<String>,
}

impl Battery {
    pub fn condition(&self, side: &str, index: usize) -> &Condition {
        self.conditions.iter().find(|c| c.side == side && c.index == index).expect("all conditions evaluated")
    }
}

/// For Artin algebras all fourteen conditions are equivalent. Conditions
/// decided over complete lists must agree with each other; the sampled ones
/// are implied by any of them, and sample-level `(3) ⇒ (4)`, `(6) ⇒ (7)`
/// hold module by module.
pub fn equivalence_battery(alg: &Algebra, n: usize, cutoff: usize, sample: &[Representation]) -> Battery {
    let right_sample: Vec<Representation> = sample.iter().map(dual).collect();
    let left = SideFacts::new(alg, n, cutoff, sample);
    let right = SideFacts::new(&alg.opposite(), n, cutoff, &right_sample);
    battery_from(alg, n, cutoff, &left, &right)
}

pub fn battery_from(alg: &Algebra, n: usize, cutoff: usize, left: &SideFacts, right: &SideFacts) -> Battery {
    let mut conditions = side_conditions(left, right, "left", n);
    conditions.extend(side_conditions(right, left, "right", n));
    let mut alarms = Vec::new();
    let exact: Vec<&Condition> = conditions.iter().filter(|c| c.exact).collect();
    let any_true = exact.iter().find(|c| c.verdict == Tri::True);
    let any_false = exact.iter().find(|c| c.verdict == Tri::False);
    if let (Some(a), Some(b)) = (any_true, any_false) {
        alarms.push(format!("({}) {} is true but ({}) {} is false", a.index, a.side, b.index, b.side));
    }
    if let Some(a) = any_true {
        for c in conditions.iter().filter(|c| !c.exact && c.verdict == Tri::False) {
            alarms.push(format!(
                "({}) {} is true but sampled ({}) {} fails: {}",
                a.index,
                a.side,
                c.index,
                c.side,
                c.witness.clone().unwrap_or_default()
            ));
        }
    }
    for side in ["left", "right"] {
        let get = |i: usize| conditions.iter().find(|c| c.side == side && c.index == i).unwrap();
        for (a, b) in [(3, 4), (6, 7)] {
            if get(a).verdict.violates_implication(get(b).verdict) {
                alarms.push(format!("({}) {} holds on the sample but ({}) does not", a, side, b));
            }
        }
    }
    Battery {
        algebra: alg.name(),
        n,
        cutoff,
        sample: left.sample.iter().map(|m| m.label.clone()).collect(),
        conditions,
        alarms,
    }
}

/// A proven implication instantiated over the sample: an alarm fires when
/// the hypothesis is observed true and the conclusion false.
#[derive(Clone, Debug, Serialize)]
pub struct ClaimCheck {
    pub key: &'static str,
    pub statement: String,
    pub instances: usize,
    pub skipped: usize,
    pub hypothesis: Tri,
    pub conclusion: Tri,
    pub witness: Option<String>,
}

impl ClaimCheck {
    pub fn alarm(&self) -> bool {
        self.hypothesis.violates_implication(self.conclusion)
    }
}

fn claim(key: &'static str, statement: String, hypothesis: Tri, t: Tally) -> ClaimCheck {
    ClaimCheck {
        key,
        statement,
        instances: t.evaluated,
        skipped: t.skipped,
        hypothesis,
        conclusion: t.verdict,
        witness: t.witness,
    }
}

/// Least `m` with `fd E^i(M) ≤ m + i` for all stored rows, if the rows are
/// all finite.
fn least_shift(rows: &[HomDim]) -> Option<usize> {
    rows.iter().enumerate().try_fold(0usize, |acc, (i, d)| d.finite().map(|x| acc.max(x.saturating_sub(i))))
}

/// `verdict` for the finite-self-injective-dimension characterization:
/// the Auslander condition with `id R ≤ n` against the two-sided
/// inequalities `fd E^0(M) ≤ fd M ≤ fd E^0(M) + n − 1` (finite `fd`) and
/// their mirrored form for `id` and projective covers.
#[derive(Clone, Debug, Serialize)]
pub struct DimensionVerdict {
    pub algebra: String,
    pub n: usize,
    pub cutoff: usize,
    pub auslander: Tri,
    pub id_regular: HomDim,
    pub id_regular_opposite: HomDim,
    pub gldim: HomDim,
    /// The ring-level statement (Auslander plus the dimension bound).
    pub ring: Tri,
    pub modules: ClaimCheck,
    pub mirrored: ClaimCheck,
    /// `fd Ω^t(M) ≤ fd E^0(Ω^t M) + n` forces `fd M ≤ fd E^0(R) + n + t`.
    pub syzygy_bound: ClaimCheck,
    pub alarms: Vec<String>,
}

fn two_sided(
    t: &mut Tally,
    facts: &[ModuleFacts],
    n: usize,
    finite_only: bool,
    value: impl Fn(&ModuleFacts) -> (HomDim, HomDim),
) {
    for m in facts {
        let (outer, inner) = value(m);
        if finite_only && !inner.is_finite() {
            t.skipped += 1;
            continue;
        }
        let v = dim_le(outer, inner, 0).and(dim_le(inner, outer, n - 1));
        t.record(v, || format!("{}: outer {} inner {}", m.label, outer, inner));
    }
}

fn dimension_verdict(alg: &Algebra, n: usize, cutoff: usize, sample: &[Representation], regular: bool) -> Result<DimensionVerdict> {
    if n == 0 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    let depth = cutoff.max(n + 1);
    let right_sample: Vec<Representation> = sample.iter().map(dual).collect();
    let left = SideFacts::new(alg, depth, cutoff, sample);
    let right = SideFacts::new(&alg.opposite(), depth, cutoff, &right_sample);
    let auslander = left.regular.gnm(depth, 0).and(right.regular.gnm(depth, 0));
    let all = vec![1; alg.vertex_count()];
    let id_regular = left.cache.id_of_projective_sum(&all);
    let id_regular_opposite = right.cache.id_of_projective_sum(&all);
    let gldim = crate::resolve::gldim(alg, cutoff);
    let bound = if regular { gldim } else { id_regular };
    let ring = auslander.and(Tri::from_option(bound.at_most(n)));
    let finite_only = !regular;
    let mut t = Tally::new();
    two_sided(&mut t, &left.sample, n, finite_only, |m| (m.e_fd[0], m.pd));
    let modules = claim("fd-between-envelope-bounds", format!("fd E^0(M) <= fd M <= fd E^0(M)+{}", n - 1), ring, t);
    let mut t = Tally::new();
    two_sided(&mut t, &right.sample, n, finite_only, |m| (m.f_id[0], m.id));
    let mirrored = claim("id-between-cover-bounds", format!("id F_0(N) <= id N <= id F_0(N)+{}", n - 1), ring, t);

    let e0r = left.regular.e_fd[0];
    let mut t = Tally::new();
    for m in &left.sample {
        for s in 0..3 {
            let om = syzygy(&m.module, s);
            let f = ModuleFacts::new(&left.cache, &om, 1);
            if dim_le(f.pd, f.e_fd[0], n) != Tri::True {
                t.skipped += 1;
                continue;
            }
            let v = dim_le(m.pd, e0r, n + s);
            t.record(v, || format!("{} with t={}", m.label, s));
        }
    }
    let syzygy_bound = claim("syzygy-bound", format!("fd M <= fd E^0(R)+{}+t", n), Tri::True, t);
    let mut alarms = Vec::new();
    for c in [&modules, &mirrored, &syzygy_bound] {
        if c.alarm() {
            alarms.push(format!("{}: {}", c.key, c.witness.clone().unwrap_or_default()));
        }
    }
    Ok(DimensionVerdict {
        algebra: alg.name(),
        n,
        cutoff,
        auslander,
        id_regular,
        id_regular_opposite,
        gldim,
        ring,
        modules,
        mirrored,
        syzygy_bound,
        alarms,
    })
}

/// Auslander condition with `id R ≤ n`, against the module inequalities on
/// modules of finite flat dimension.
pub fn gorenstein_verdict(alg: &Algebra, n: usize, cutoff: usize, sample: &[Representation]) -> Result<DimensionVerdict> {
    dimension_verdict(alg, n, cutoff, sample, false)
}

/// Auslander condition with `gldim ≤ n`, against the module inequalities on
/// every sampled module.
pub fn regular_verdict(alg: &Algebra, n: usize, cutoff: usize, sample: &[Representation]) -> Result<DimensionVerdict> {
    dimension_verdict(alg, n, cutoff, sample, true)
}

/// `fd E^0(M) = fd M` over the sample, reported per module.
pub fn envelope_preserves_fd(alg: &Algebra, cutoff: usize, sample: &[Representation]) -> Vec<(String, HomDim, HomDim)> {
    let cache = DimCache::new(alg, cutoff);
    sample
        .iter()
        .map(|m| {
            let f = ModuleFacts::new(&cache, m, 1);
            (f.label, f.pd, f.e_fd[0])
        })
        .collect()
}

/// The auxiliary facts feeding the equivalences, each as a
/// falsifiable check over the sample.
#[derive(Clone, Debug, Serialize)]
pub struct StructuralReport {
    pub algebra: String,
    pub n: usize,
    pub cutoff: usize,
    pub checks: Vec<ClaimCheck>,
}

impl StructuralReport {
    pub fn alarms(&self) -> Vec<&ClaimCheck> {
        self.checks.iter().filter(|c| c.alarm()).collect()
    }
}

pub fn structural_checks(alg: &Algebra, n: usize, cutoff: usize, sample: &[Representation], seed: u64) -> Result<StructuralReport> {
    let op = alg.opposite();
    let right_sample: Vec<Representation> = sample.iter().map(dual).collect();
    let left = SideFacts::new(alg, n, cutoff, sample);
    let right = SideFacts::new(&op, n, cutoff, &right_sample);
    let mut checks = Vec::new();

    // Envelope bound on a cosyzygy-closed sample shifts along the
    // coresolution; dually for projective covers and syzygies.
    let mut closed = Vec::new();
    for m in sample {
        for i in 0..n {
            let k = cosyzygy(m, i);
            if !k.is_zero() {
                closed.push(ModuleFacts::new(&left.cache, &k, n));
            }
        }
    }
    let mut hyp = Tally::new();
    for m in closed.iter().filter(|m| m.pd.is_finite()) {
        hyp.record(dim_le(m.e_fd[0], m.pd, 0), String::new);
    }
    let mut t = Tally::new();
    for m in left.sample.iter().filter(|m| m.pd.is_finite()) {
        for i in 0..n {
            t.record(dim_le(m.e_fd[i], m.pd, i), || format!("{} at i={}", m.label, i));
        }
    }
    checks.push(claim("envelope-bound-shifts", "fd E^0 <= fd on cosyzygies => fd E^i(M) <= fd M + i".into(), hyp.verdict, t));
    let mut closed = Vec::new();
    for m in &right_sample {
        for i in 0..n {
            let k = syzygy(m, i);
            if !k.is_zero() {
                closed.push(ModuleFacts::new(&right.cache, &k, n));
            }
        }
    }
    let mut hyp = Tally::new();
    for m in closed.iter().filter(|m| m.id.is_finite()) {
        hyp.record(dim_le(m.f_id[0], m.id, 0), String::new);
    }
    let mut t = Tally::new();
    for m in right.sample.iter().filter(|m| m.id.is_finite()) {
        for i in 0..n {
            t.record(dim_le(m.f_id[i], m.id, i), || format!("{} at i={}", m.label, i));
        }
    }
    checks.push(claim("cover-bound-shifts", "id F_0 <= id on syzygies => id F_i(N) <= id N + i".into(), hyp.verdict, t));

    // id F_i(E) ≤ fd E^i(R) for injective right modules E.
    let mut t = Tally::new();
    for e in &right.injectives {
        for i in 0..n {
            t.record(dim_le(e.f_id[i], left.regular.e_fd[i], 0), || format!("{} at i={}", e.label, i));
        }
    }
    checks.push(claim("injective-cover-terms-bounded", "id F_i(E) <= fd E^i(R)".into(), Tri::True, t));

    // R ∈ G(m) bounds id F_i(N) by id N + m + i while i + id N < n.
    let m_ring = least_shift(&left.regular.e_fd);
    let mut t = Tally::new();
    if let Some(mr) = m_ring {
        for m in &right.sample {
            match m.id.finite() {
                Some(s) => {
                    for i in 0..n.saturating_sub(s) {
                        t.record(dim_le(m.f_id[i], m.id, mr + i), || format!("{} at i={}", m.label, i));
                    }
                }
                None => t.skipped += 1,
            }
        }
    }
    checks.push(claim(
        "ring-shift-bounds-covers",
        format!("R in G(m={:?}) => id F_i(N) <= id N + m + i", m_ring),
        Tri::from_bool(m_ring.is_some()),
        t,
    ));

    // Shift for injectives transfers to every module.
    let m_inj = right.injectives.iter().try_fold(0usize, |acc, e| {
        e.f_id.iter().enumerate().try_fold(acc, |a, (i, d)| d.finite().map(|x| a.max(x.saturating_sub(i))))
    });
    let mut t = Tally::new();
    if let Some(mi) = m_inj {
        for m in &right.sample {
            match m.id.finite() {
                Some(s) => {
                    for i in 0..n.saturating_sub(s) {
                        t.record(dim_le(m.f_id[i], m.id, mi + i), || format!("{} at i={}", m.label, i));
                    }
                }
                None => t.skipped += 1,
            }
        }
    }
    checks.push(claim(
        "injective-shift-transfers",
        format!("id F_i(E) <= m + i for injectives (m={:?}) => id F_i(N) <= id N + m + i", m_inj),
        Tri::from_bool(m_inj.is_some()),
        t,
    ));

    // Projectives in G(m) bound fd E^i(M) by fd M + m + i.
    let m_proj = left
        .projectives
        .iter()
        .try_fold(0usize, |acc, p| least_shift(&p.e_fd).map(|x| acc.max(x)));
    let mut t = Tally::new();
    if let Some(mp) = m_proj {
        for m in &left.sample {
            match m.pd.finite() {
                Some(s) => {
                    for i in 0..n.saturating_sub(s) {
                        t.record(dim_le(m.e_fd[i], m.pd, mp + i), || format!("{} at i={}", m.label, i));
                    }
                }
                None => t.skipped += 1,
            }
        }
    }
    checks.push(claim(
        "projective-shift-transfers",
        format!("projectives in G(m={:?}) => fd E^i(M) <= fd M + m + i", m_proj),
        Tri::from_bool(m_proj.is_some()),
        t,
    ));

    // Under the Auslander condition, fd M = s puts M in G(s).
    let auslander = left.regular.gnm(n, 0);
    let mut t = Tally::new();
    for m in &left.sample {
        match m.pd.finite() {
            Some(s) => {
                let rows = n.saturating_sub(s);
                t.record(m.gnm(rows, s), || format!("{} with fd {}", m.label, s));
            }
            None => t.skipped += 1,
        }
    }
    checks.push(claim("finite-fd-in-gnm", "Auslander and fd M = s => M in G(s)".into(), auslander, t));

    checks.extend(kernel_inherits_gnm(&left, n, seed)?);
    checks.push(classes_match(&left, n, cutoff, auslander));
    Ok(StructuralReport { algebra: alg.name(), n, cutoff, checks })
}

/// `0 → X → X⁰ → X¹` from random maps between sampled modules: for
/// `X⁰ ∈ G_n(s)`, `X¹ ∈ G_{n−1}(s+1)` the glued injective coresolution of
/// `X` has its two leading terms within the bounds and contains the
/// minimal ones as summands; the full membership `X ∈ G_n(s)` is recorded
/// as the conclusion.
fn kernel_inherits_gnm(left: &SideFacts, n: usize, seed: u64) -> Result<[ClaimCheck; 2]> {
    use crate::glue::{iterate_glue, proper_coresolution, GlueKind, Subcategory};
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let members = &left.sample;
    let alg = &left.cache.algebra;
    let subcat = Subcategory::injectives(alg);
    let mut t = Tally::new();
    let mut full = Tally::new();
    let mut hyp = Tri::True;
    let mut any = false;
    let mut glued_ok = true;
    for _ in 0..12 {
        let a = &members[rng.gen_range(0..members.len())];
        let b = &members[rng.gen_range(0..members.len())];
        let g = random_morphism(&a.module, &b.module, &mut rng)?;
        let (x, incl) = kernel(&g);
        if x.is_zero() {
            continue;
        }
        let c0 = proper_coresolution(&subcat, &a.module, 1)?;
        let c1 = proper_coresolution(&subcat, &b.module, 0)?;
        let it = iterate_glue(GlueKind::FirstCores, &[incl.clone(), g.clone()], &[c0, c1])?;
        let glued = &it.result.complex;
        let min = min_coresolution(&x, 1);
        glued_ok &= glued.is_exact() && glued.terms.iter().all(is_injective);
        for i in 0..2 {
            let gm = socle_dims(&glued.terms[i]);
            let mm = min.multiplicities(i).unwrap();
            glued_ok &= mm.iter().zip(&gm).all(|(x, y)| x <= y);
        }
        let xf = ModuleFacts::new(&left.cache, &x, n);
        for s in 0..2 {
            let h = a.gnm(n, s).and(b.gnm(n.saturating_sub(1), s + 1));
            if h != Tri::True {
                continue;
            }
            any = true;
            // The glued terms bound the first two rows.
            let glued_rows = Tri::all((0..2.min(n)).map(|i| {
                let d = left.cache.pd_of_injective_sum(&socle_dims(&glued.terms[i]));
                Tri::from_option(d.at_most(s + i))
            }));
            hyp = hyp.and(Tri::from_bool(glued_ok));
            t.record(glued_rows.and(xf.gnm(n.min(2), s)), || format!("{} -> {} at s={}", a.label, b.label, s));
            full.record(xf.gnm(n, s), || format!("{} -> {} at s={}", a.label, b.label, s));
        }
    }
    if !any {
        hyp = Tri::Inconclusive;
    }
    let full_hyp = if any { Tri::True } else { Tri::Inconclusive };
    Ok([
        claim("kernel-inherits-gnm", "X0 in G_n(s), X1 in G_{n-1}(s+1) => X in G_min(n,2)(s)".into(), hyp, t),
        claim("kernel-inherits-gnm-full", "X0 in G_n(s), X1 in G_{n-1}(s+1) => X in G_n(s)".into(), full_hyp, full),
    ])
}

/// Under the Auslander condition with finite global dimension, `G(s)` and
/// `fd ≤ s` pick the same sampled modules for `s = 0, 1, 2`.
fn classes_match(left: &SideFacts, n: usize, cutoff: usize, auslander: Tri) -> ClaimCheck {
    let regular = auslander.and(Tri::from_bool(crate::resolve::gldim(&left.cache.algebra, cutoff).is_finite()));
    let mut t = Tally::new();
    let g0: Vec<bool> = left.sample.iter().map(|m| m.gnm(n, 0) == Tri::True).collect();
    let f0: Vec<bool> = left.sample.iter().map(|m| m.pd == HomDim::Finite(0)).collect();
    let hyp = regular.and(Tri::from_bool(g0 == f0));
    for s in 0..3usize {
        for m in &left.sample {
            let in_g = m.gnm(n.saturating_sub(s), s);
            let in_f = Tri::from_option(m.pd.at_most(s));
            let v = match (in_g, in_f) {
                (Tri::Inconclusive, _) | (_, Tri::Inconclusive) => Tri::Inconclusive,
                (a, b) => Tri::from_bool(a == b),
            };
            t.record(v, || format!("{} at s={}: G {} fd<=s {}", m.label, s, in_g, in_f));
        }
    }
    claim("gnm-classes-are-fd-classes", "G(0) = fd 0 => G(s) = fd <= s".into(), hyp, t)
}
