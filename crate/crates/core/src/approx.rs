//! Approximation sequences `0 → M → I → G → 0` and `0 → I → G → M → 0`
//! with `id I` bounded and `G` in a `G_i(k)` class, the maps between
//! consecutive levels, and the experiments built on them.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::auscond::{is_gnm, is_gnm_cached, ring_auslander, DimCache, GnmReport, Tri};
use crate::error::{Error, Result};
use crate::fixtures::{indecomposables, module_label, standard_modules};
use crate::glue::{iterate_glue, proper_resolution, GlueKind, Subcategory};
use crate::quiver::{
    cokernel, dual, dual_ses, extend, factor_through_epi, factor_through_mono, hom_basis, hom_dim, kernel, lift,
    pullback, pushout, span_rank, Algebra, HomSpace, Morphism, Representation, ShortExactSequence,
};
use crate::resolve::{
    cosyzygy, gldim, id_value, is_projective, min_coresolution, min_resolution, n_torsionfree, pd_value,
    projective_cover, syzygy, AugmentedComplex, Direction, HomDim,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PresentationKind {
    /// `0 → M → I_i(M) → G_i(M) → 0`.
    LeftInj,
    /// `0 → I^i(M) → G^i(M) → M → 0`.
    RightG,
}

impl PresentationKind {
    pub fn name(self) -> &'static str {
        match self {
            PresentationKind::LeftInj => "left",
            PresentationKind::RightG => "right",
        }
    }
}

/// Outcome of testing the approximation property against a set of modules.
#[derive(Clone, Debug, Default, Serialize)]
pub struct ApproxTest {
    pub tested: usize,
    pub passed: usize,
    pub failures: Vec<String>,
}

impl ApproxTest {
    pub fn holds(&self) -> bool {
        self.passed == self.tested
    }
}

#[derive(Clone, Debug)]
pub struct ApproxPresentation {
    pub kind: PresentationKind,
    pub i: usize,
    pub k: usize,
    pub module: Representation,
    pub sequence: ShortExactSequence,
    /// `id` of the `I`-part, recomputed from its minimal coresolution.
    pub id_bound: HomDim,
    pub id_ok: Tri,
    pub g_report: GnmReport,
    /// `None` when no test set was supplied.
    pub approximation: Option<ApproxTest>,
    /// One of the outer parts is zero.
    pub degenerate: bool,
}

impl ApproxPresentation {
    pub fn injective_part(&self) -> &Representation {
        match self.kind {
            PresentationKind::LeftInj => self.sequence.middle(),
            PresentationKind::RightG => self.sequence.left(),
        }
    }

    pub fn gorenstein_part(&self) -> &Representation {
        match self.kind {
            PresentationKind::LeftInj => self.sequence.right(),
            PresentationKind::RightG => self.sequence.middle(),
        }
    }

    /// `M → I` or `I → G`.
    pub fn injective_map(&self) -> &Morphism {
        &self.sequence.f
    }

    /// Exact, both certificates hold and the approximation test (if run) passed.
    pub fn certified(&self) -> bool {
        self.sequence.is_valid()
            && self.id_ok == Tri::True
            && self.g_report.holds()
            && self.approximation.as_ref().is_none_or(|a| a.holds())
    }
}

/// The modules used for approximation tests by default: all indecomposables
/// for algebras of finite type, the standard modules otherwise.
pub fn test_modules(alg: &Algebra) -> Vec<Representation> {
    indecomposables(alg).unwrap_or_else(|| standard_modules(alg))
}

/// Refuses unless `_RR` and `R_R` both lie in `G_n(k)`.
pub fn check_ring(alg: &Algebra, n: usize, k: usize, cutoff: usize) -> Result<()> {
    let left = is_gnm(&Representation::regular(alg), n, k, cutoff);
    let op = alg.opposite();
    let right = is_gnm(&Representation::regular(&op), n, k, cutoff);
    for (side, r) in [("left", &left), ("right", &right)] {
        if let Some(row) = r.failure() {
            return Err(Error::Precondition(format!(
                "{} regular module of {} is not in G_{}({}): fd E^{} = {} exceeds {}",
                side,
                alg.name(),
                n,
                k,
                row.index,
                row.fd,
                row.bound
            )));
        }
    }
    if left.verdict.and(right.verdict) != Tri::True {
        return Err(Error::Inconclusive(format!(
            "whether {} is G_{}({}) on both sides is undecided at cutoff {}",
            alg.name(),
            n,
            k,
            cutoff
        )));
    }
    Ok(())
}

fn certify(
    kind: PresentationKind,
    m: &Representation,
    i: usize,
    k: usize,
    sequence: ShortExactSequence,
    cutoff: usize,
) -> ApproxPresentation {
    let (ipart, gpart) = match kind {
        PresentationKind::LeftInj => (sequence.middle().clone(), sequence.right().clone()),
        PresentationKind::RightG => (sequence.left().clone(), sequence.middle().clone()),
    };
    let id_bound = id_value(&ipart, cutoff);
    let id_ok = Tri::from_option(id_bound.at_most(i + k));
    let g_report = is_gnm(&gpart, i, k, cutoff);
    let degenerate = ipart.is_zero() || gpart.is_zero();
    ApproxPresentation {
        kind,
        i,
        k,
        module: m.clone(),
        sequence,
        id_bound,
        id_ok,
        g_report,
        approximation: None,
        degenerate,
    }
}

/// `0 → M → I_i(M) → G_i(M) → 0`.
///
/// With `E^0, …, E^i` the minimal injective coresolution and
/// `Ω^{−j} = Ω^{−j}(M)`, the projective resolutions of `E^1, …, E^i` are glued
/// along `E^1 → ⋯ → E^i → Ω^{−(i+1)} → 0` into a resolution `T` of
/// `Ω^{−(i+1)}` whose last kernel is `G_i(M)`. The horseshoe tower over
/// `0 → Ω^{−i} → E^i → Ω^{−(i+1)} → 0`, with `E^{i−1} → ⋯ → E^0` on the
/// left and `T` on the right, has `I_i(M)` as its last kernel.
pub fn left_presentation(m: &Representation, i: usize, k: usize, cutoff: usize) -> Result<ApproxPresentation> {
    if i == 0 {
        return Err(Error::Precondition("presentations start at level i = 1".into()));
    }
    let alg = m.algebra();
    check_ring(alg, i, k, cutoff)?;
    let sequence = left_sequence(m, i)?;
    Ok(certify(PresentationKind::LeftInj, m, i, k, sequence, cutoff))
}

fn left_sequence(m: &Representation, i: usize) -> Result<ShortExactSequence> {
    let alg = m.algebra();
    let c = min_coresolution(m, i);
    let e = |j: usize| c.terms[j].clone();
    // π: E^i ↠ Ω^{−(i+1)}, with kernel Ω^{−i} ↪ E^i.
    let (_, pi) = cokernel(&c.differentials[i - 1]);
    let (yi, yi_incl) = kernel(&pi);

    // Right column: the glued projective resolution of Ω^{−(i+1)}.
    let subcat = Subcategory::projectives(alg);
    let mut maps = vec![pi.clone()];
    let mut res = vec![proper_resolution(&subcat, &e(i), i - 1)?];
    for j in 1..i {
        maps.push(c.differentials[i - j].clone());
        res.push(proper_resolution(&subcat, &e(i - j), i - 1 - j)?);
    }
    let glued = iterate_glue(GlueKind::LastRes, &maps, &res)?.result.complex;
    let right = glued.stages()?;

    // Left column: 0 → M → E^0 → ⋯ → E^{i−1} → Ω^{−i} → 0 as a resolution of Ω^{−i}.
    let mut terms = Vec::new();
    let mut differentials = Vec::new();
    for t in 0..i {
        terms.push(e(i - 1 - t));
        if t + 1 < i {
            differentials.push(c.differentials[i - 2 - t].clone());
        }
    }
    let augmentation = factor_through_mono(&c.differentials[i - 1], &yi_incl)?;
    let left_complex = AugmentedComplex {
        direction: Direction::Resolution,
        module: yi.clone(),
        terms,
        differentials,
        augmentation,
        summands: None,
    };
    let left = left_complex.stages()?;

    let bottom = ShortExactSequence::new(yi_incl, pi)?;
    let tower = crate::glue::horseshoe_tower(&bottom, &left, &right)?;
    let last = tower.maps.last().expect("tower has i ≥ 1 stages");
    let sum = tower.sums.last().unwrap();
    let (_, iw) = kernel(last);
    let into_i = factor_through_mono(&sum.injections[0].compose(&c.augmentation), &iw)?;
    let (_, ig) = kernel(&right.last().unwrap().map);
    let onto_g = factor_through_mono(&sum.projections[1].compose(&iw), &ig)?;
    ShortExactSequence::new(into_i, onto_g)
}

/// `0 → I^i(M) → G^i(M) → M → 0` with `I^i(M) = I_i(Ω¹M)` and `G^i(M)` the
/// pushout of `Ω¹M ↪ P_0(M)` along `Ω¹M ↪ I_i(Ω¹M)`.
pub fn right_presentation(m: &Representation, i: usize, k: usize, cutoff: usize) -> Result<ApproxPresentation> {
    if i == 0 {
        return Err(Error::Precondition("presentations start at level i = 1".into()));
    }
    check_ring(m.algebra(), i, k, cutoff)?;
    let sequence = right_sequence(m, i)?;
    Ok(certify(PresentationKind::RightG, m, i, k, sequence, cutoff))
}

fn right_sequence(m: &Representation, i: usize) -> Result<ShortExactSequence> {
    let cover = projective_cover(m).map;
    let (omega, kappa) = kernel(&cover);
    if omega.is_zero() {
        let zero = Representation::zero(m.algebra());
        return ShortExactSequence::new(Morphism::zero(&zero, m), Morphism::identity(m));
    }
    let inner = left_sequence(&omega, i)?;
    let po = pushout(&kappa, &inner.f)?;
    let onto_m = po.factor(&cover, &Morphism::zero(inner.middle(), m))?;
    ShortExactSequence::new(po.q2.clone(), onto_m)
}

/// Left: `Hom(I, T) → Hom(M, T)` is onto for each `T` with `id T ≤ i`.
/// Right: every `T′ → M` with `T′ ∈ G_i(0)` factors through `G → M`.
pub fn test_approximation(p: &ApproxPresentation, tests: &[Representation], cutoff: usize) -> Result<ApproxTest> {
    let mut out = ApproxTest::default();
    for t in tests {
        match p.kind {
            PresentationKind::LeftInj => {
                if id_value(t, cutoff).at_most(p.i) != Some(true) {
                    continue;
                }
                out.tested += 1;
                let target = hom_dim(&p.module, t)?;
                let pulled: Vec<Morphism> =
                    hom_basis(p.sequence.middle(), t)?.iter().map(|h| h.compose(&p.sequence.f)).collect();
                if span_rank(&p.module, t, &pulled) == target {
                    out.passed += 1;
                } else {
                    out.failures.push(format!("{}: Hom(I, T) → Hom(M, T) not onto", module_label(t)));
                }
            }
            PresentationKind::RightG => {
                if !is_gnm(t, p.i, 0, cutoff).holds() {
                    continue;
                }
                out.tested += 1;
                let mut ok = true;
                for h in hom_basis(t, &p.module)? {
                    if lift(&h, &p.sequence.g)?.is_none() {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    out.passed += 1;
                } else {
                    out.failures.push(format!("{}: a map to M does not factor through G", module_label(t)));
                }
            }
        }
    }
    Ok(out)
}

/// A presentation with its approximation property checked when the ring
/// satisfies the Auslander condition at level `i`.
pub fn presentation(
    kind: PresentationKind,
    m: &Representation,
    i: usize,
    k: usize,
    cutoff: usize,
    tests: &[Representation],
) -> Result<ApproxPresentation> {
    let mut p = match kind {
        PresentationKind::LeftInj => left_presentation(m, i, k, cutoff)?,
        PresentationKind::RightG => right_presentation(m, i, k, cutoff)?,
    };
    if ring_auslander(m.algebra(), i, cutoff).holds() {
        p.approximation = Some(test_approximation(&p, tests, cutoff)?);
    }
    Ok(p)
}

/// A connecting map from level `upper` to level `upper − 1`.
#[derive(Clone, Debug)]
pub struct LadderStep {
    pub upper: usize,
    /// `I_{i+1} ↠ I_i` (left) or `G^{i+1} ↠ G^i` (right).
    pub outer: Morphism,
    /// `G_{i+1} ↠ G_i` (left) or `I^{i+1} ↠ I^i` (right).
    pub inner: Morphism,
    pub epimorphic: bool,
    pub commutes: bool,
    pub attempts: usize,
    pub outer_kernel_dims: Vec<usize>,
}

impl LadderStep {
    pub fn holds(&self) -> bool {
        self.epimorphic && self.commutes
    }
}

#[derive(Clone, Debug)]
pub struct Ladder {
    pub kind: PresentationKind,
    pub levels: Vec<ApproxPresentation>,
    pub steps: Vec<LadderStep>,
    /// Composites of consecutive steps are again valid connecting maps.
    pub composites_valid: bool,
}

impl Ladder {
    pub fn holds(&self) -> bool {
        self.steps.iter().all(|s| s.holds()) && self.composites_valid
    }
}

const LADDER_TRIES: usize = 64;

/// The solution set of the left square is `φ_0 + Hom(G_{i+1}, I_i)∘g_{i+1}`
/// (right: `φ_0 + f^i∘Hom(G^{i+1}, I^i)`); it is sampled until an
/// epimorphism turns up.
fn ladder_step(lower: &ApproxPresentation, upper: &ApproxPresentation, seed: u64) -> Result<LadderStep> {
    let (lo, up) = (&lower.sequence, &upper.sequence);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (base, shift_space) = match lower.kind {
        PresentationKind::LeftInj => {
            let base = extend(&lo.f, &up.f)?
                .ok_or_else(|| Error::NoSolution("no map I_{i+1} → I_i under M".into()))?;
            (base, HomSpace::new(up.right(), lo.middle())?)
        }
        PresentationKind::RightG => {
            let base = lift(&up.g, &lo.g)?
                .ok_or_else(|| Error::NoSolution("no map G^{i+1} → G^i over M".into()))?;
            (base, HomSpace::new(up.middle(), lo.left())?)
        }
    };
    let shift = |h: &Morphism| match lower.kind {
        PresentationKind::LeftInj => h.compose(&up.g),
        PresentationKind::RightG => lo.f.compose(h),
    };
    let mut outer = base.clone();
    let mut attempts = 1;
    while !outer.is_surjective() && attempts <= LADDER_TRIES && shift_space.dim() > 0 {
        outer = base.add(&shift(&shift_space.random(&mut rng)));
        attempts += 1;
    }
    let inner = match lower.kind {
        PresentationKind::LeftInj => factor_through_epi(&lo.g.compose(&outer), &up.g)?,
        PresentationKind::RightG => factor_through_mono(&outer.compose(&up.f), &lo.f)?,
    };
    let commutes = match lower.kind {
        PresentationKind::LeftInj => outer.compose(&up.f) == lo.f && inner.compose(&up.g) == lo.g.compose(&outer),
        PresentationKind::RightG => lo.g.compose(&outer) == up.g && outer.compose(&up.f) == lo.f.compose(&inner),
    };
    let epimorphic = outer.is_surjective() && inner.is_surjective();
    let outer_kernel_dims = kernel(&outer).0.dims().to_vec();
    Ok(LadderStep { upper: upper.i, outer, inner, epimorphic, commutes, attempts, outer_kernel_dims })
}

/// Presentations at levels `1..=top` with connecting maps between
/// consecutive levels.
pub fn ladder(
    kind: PresentationKind,
    m: &Representation,
    top: usize,
    k: usize,
    cutoff: usize,
    seed: u64,
) -> Result<Ladder> {
    let mut levels = Vec::new();
    for i in 1..=top {
        levels.push(match kind {
            PresentationKind::LeftInj => left_presentation(m, i, k, cutoff)?,
            PresentationKind::RightG => right_presentation(m, i, k, cutoff)?,
        });
    }
    let mut steps = Vec::new();
    for w in levels.windows(2) {
        steps.push(ladder_step(&w[0], &w[1], seed.wrapping_add(w[1].i as u64))?);
    }
    let mut composites_valid = true;
    for (j, w) in steps.windows(2).enumerate() {
        let outer = w[0].outer.compose(&w[1].outer);
        let inner = w[0].inner.compose(&w[1].inner);
        let (lo, up) = (&levels[j].sequence, &levels[j + 2].sequence);
        let commutes = match kind {
            PresentationKind::LeftInj => outer.compose(&up.f) == lo.f && inner.compose(&up.g) == lo.g.compose(&outer),
            PresentationKind::RightG => lo.g.compose(&outer) == up.g && outer.compose(&up.f) == lo.f.compose(&inner),
        };
        composites_valid &= commutes && outer.is_surjective() && inner.is_surjective();
    }
    Ok(Ladder { kind, levels, steps, composites_valid })
}

/// `0 → M → X → Y → 0` with `X` in the dual class `CoG_i(k)` and
/// `pd Y ≤ i + k`, from the right presentation of `D M` over the opposite
/// algebra.
#[derive(Clone, Debug)]
pub struct CoPresentation {
    pub sequence: ShortExactSequence,
    pub pd_bound: HomDim,
    pub pd_ok: Tri,
    /// `id P_j(X) ≤ j + k` for `j < i`, from the minimal projective resolution of `X`.
    pub cog_ok: Tri,
}

pub fn co_presentation(m: &Representation, i: usize, k: usize, cutoff: usize) -> Result<CoPresentation> {
    let d = dual(m);
    let p = right_presentation(&d, i, k, cutoff)?;
    let sequence = dual_ses(&p.sequence);
    let x = sequence.middle().clone();
    let pd_bound = pd_value(sequence.right(), cutoff);
    let pd_ok = Tri::from_option(pd_bound.at_most(i + k));
    let cache = DimCache::new(m.algebra(), cutoff);
    let res = min_resolution(&x, i.saturating_sub(1));
    let cog_ok = Tri::all((0..i).map(|j| {
        let mult = res.multiplicities(j).unwrap();
        Tri::from_option(cache.id_of_projective_sum(&mult).at_most(j + k))
    }));
    Ok(CoPresentation { sequence, pd_bound, pd_ok, cog_ok })
}

/// `0 → I → G → M → 0` with `id I ≤ n` and `G ∈ G(0)`, built from the
/// cosyzygy sequence of `M`.
#[derive(Clone, Debug)]
pub struct CosyzygyApproximation {
    pub n: usize,
    pub sequence: ShortExactSequence,
    pub id_bound: HomDim,
    pub id_ok: Tri,
    pub g_report: GnmReport,
    pub factorization: ApproxTest,
}

impl CosyzygyApproximation {
    pub fn certified(&self) -> bool {
        self.sequence.is_valid() && self.id_ok == Tri::True && self.g_report.holds() && self.factorization.holds()
    }
}

#[derive(Clone, Debug)]
pub struct CosyzygyMembership {
    pub label: String,
    /// `Ω^{−n}(M) ∈ G_cutoff(n)` for each scanned `n`.
    pub scans: Vec<(usize, Tri)>,
    pub n: Option<usize>,
    pub approximation: Option<CosyzygyApproximation>,
}

fn require_auslander(alg: &Algebra, cutoff: usize) -> Result<()> {
    let v = ring_auslander(alg, cutoff, cutoff);
    match v.verdict() {
        Tri::True => Ok(()),
        Tri::False => Err(Error::Precondition(format!("{} is not Auslander: {}", alg.name(), v.explanation()))),
        Tri::Inconclusive => Err(Error::Inconclusive(format!("Auslander condition on {}: {}", alg.name(), v.explanation()))),
    }
}

/// The least `n ≤ cutoff` with `Ω^{−n}(M) ∈ G_cutoff(n)`, and for it the
/// approximation `0 → I → G → M → 0`.
pub fn cosyzygy_membership(m: &Representation, cutoff: usize, tests: &[Representation]) -> Result<CosyzygyMembership> {
    let alg = m.algebra();
    require_auslander(alg, cutoff)?;
    let cache = DimCache::new(alg, cutoff);
    let mut scans = Vec::new();
    let mut found = None;
    for n in 0..=cutoff {
        let v = is_gnm_cached(&cache, &cosyzygy(m, n), cutoff, n).verdict;
        scans.push((n, v));
        if v == Tri::True {
            found = Some(n);
            break;
        }
    }
    let approximation = match found {
        Some(n) => Some(cosyzygy_approximation(m, n, cutoff, tests)?),
        None => None,
    };
    Ok(CosyzygyMembership { label: module_label(m), scans, n: found, approximation })
}

/// Starting from `G′ = Ω^{−n}`, each step pulls `G′ → Ω^{−(j+1)}` back
/// along `E^j ↠ Ω^{−(j+1)}`, covers the pullback `P` by `Q = P_0(P)` and
/// replaces `G′` by `ker(Q → G′)`, which maps onto `Ω^{−j}` with kernel
/// `Ω¹(P)`. After `n` steps `G′ ↠ M`.
pub fn cosyzygy_approximation(
    m: &Representation,
    n: usize,
    cutoff: usize,
    tests: &[Representation],
) -> Result<CosyzygyApproximation> {
    let alg = m.algebra();
    let c = min_coresolution(m, n.max(1));
    // 0 → Y_j → E^j → Y_{j+1} → 0 with Y_0 = M.
    let mut into = vec![c.augmentation.clone()];
    let mut onto = Vec::new();
    for j in 0..n {
        let (_, pj) = cokernel(&into[j]);
        if j + 1 < n {
            into.push(factor_through_epi(&c.differentials[j], &pj)?);
        }
        onto.push(pj);
    }
    let mut phi = match onto.last() {
        Some(p) => Morphism::identity(p.target()),
        None => Morphism::identity(m),
    };
    for j in (0..n).rev() {
        let pb = pullback(&onto[j], &phi)?;
        let cover = projective_cover(&pb.object).map;
        let to_prev = pb.p2.compose(&cover);
        let (_, kincl) = kernel(&to_prev);
        phi = factor_through_mono(&pb.p1.compose(&cover).compose(&kincl), &into[j])?;
    }
    let (_, iincl) = kernel(&phi);
    let sequence = ShortExactSequence::new(iincl, phi)?;
    let id_bound = id_value(sequence.left(), cutoff);
    let id_ok = Tri::from_option(id_bound.at_most(n));
    let g_report = is_gnm(sequence.middle(), cutoff, 0, cutoff);
    let mut factorization = ApproxTest::default();
    for t in tests {
        if !is_gnm(t, cutoff, 0, cutoff).holds() {
            continue;
        }
        factorization.tested += 1;
        let mut ok = true;
        for h in hom_basis(t, m)? {
            if lift(&h, &sequence.g)?.is_none() {
                ok = false;
                break;
            }
        }
        if ok {
            factorization.passed += 1;
        } else {
            factorization.failures.push(format!("{}: a map to M does not factor through G", module_label(t)));
        }
    }
    let _ = alg;
    Ok(CosyzygyApproximation { n, sequence, id_bound, id_ok, g_report, factorization })
}

#[derive(Clone, Debug, Serialize)]
pub struct SimpleScan {
    pub vertex: usize,
    pub n: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GorensteinExperiment {
    pub algebra: String,
    pub cutoff: usize,
    pub simples: Vec<SimpleScan>,
    /// `max n_S` over the simples, when every simple has one.
    pub uniform_n: Option<usize>,
    pub id_left: HomDim,
    pub id_right: HomDim,
    pub gorenstein: Tri,
    pub gldim: HomDim,
    pub g_class: Vec<String>,
    pub projectives: Vec<String>,
    /// `G_cutoff(0) ∩ sample` equals the projectives in the sample.
    pub g_class_is_projective: bool,
    pub regular_consistent: Tri,
    pub alarms: Vec<String>,
}

/// Gorenstein and regularity evidence for an Auslander algebra: the
/// cosyzygy scan over the simples against `id R`, and the `G(0)` class in the
/// sample against the projectives and `gldim`.
pub fn gorenstein_experiment(alg: &Algebra, cutoff: usize, sample: &[Representation]) -> Result<GorensteinExperiment> {
    require_auslander(alg, cutoff)?;
    let cache = DimCache::new(alg, cutoff);
    let simples: Vec<SimpleScan> = (0..alg.vertex_count())
        .map(|v| {
            let s = Representation::simple(alg, v);
            let n = (0..=cutoff).find(|&n| is_gnm_cached(&cache, &cosyzygy(&s, n), cutoff, n).holds());
            SimpleScan { vertex: v, n }
        })
        .collect();
    let uniform_n = simples.iter().map(|s| s.n).collect::<Option<Vec<_>>>().map(|v| v.into_iter().max().unwrap_or(0));
    let id_left = id_value(&Representation::regular(alg), cutoff);
    let id_right = id_value(&Representation::regular(&alg.opposite()), cutoff);
    let gorenstein = match (id_left, id_right) {
        (HomDim::Finite(a), HomDim::Finite(b)) => Tri::from_bool(a == b),
        _ => Tri::Inconclusive,
    };
    let gd = gldim(alg, cutoff);
    let mut g_class = Vec::new();
    let mut projectives = Vec::new();
    let mut mismatch = false;
    for m in sample {
        let in_g = is_gnm_cached(&cache, m, cutoff, 0).holds();
        let proj = is_projective(m);
        if in_g {
            g_class.push(module_label(m));
        }
        if proj {
            projectives.push(module_label(m));
        }
        mismatch |= in_g != proj;
    }
    let g_class_is_projective = !mismatch;
    let regular_consistent = match gd {
        HomDim::Finite(_) => Tri::from_bool(g_class_is_projective),
        HomDim::Exceeds(_) => {
            if g_class_is_projective {
                Tri::Inconclusive
            } else {
                Tri::False
            }
        }
    };
    let mut alarms = Vec::new();
    if gorenstein == Tri::True && uniform_n.is_none() {
        alarms.push("Gorenstein by id R but some simple has no cosyzygy in the right class".into());
    }
    if let (Some(n), HomDim::Finite(d)) = (uniform_n, id_left) {
        if d > n.max(d) {
            alarms.push(format!("uniform n = {} but id R = {}", n, d));
        }
    }
    if gd.is_finite() && !g_class_is_projective {
        alarms.push("finite global dimension but a non-projective sample module lies in G(0)".into());
    }
    if gd.is_finite() && gorenstein != Tri::True {
        alarms.push("finite global dimension but not Gorenstein".into());
    }
    Ok(GorensteinExperiment {
        algebra: alg.name(),
        cutoff,
        simples,
        uniform_n,
        id_left,
        id_right,
        gorenstein,
        gldim: gd,
        g_class,
        projectives,
        g_class_is_projective,
        regular_consistent,
        alarms,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct TorsionfreeRow {
    pub label: String,
    /// An explicit `n`-th syzygy rather than a sample member.
    pub syzygy: bool,
    pub gnm: Tri,
    pub torsionfree: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TorsionfreeReport {
    pub algebra: String,
    pub n: usize,
    pub rows: Vec<TorsionfreeRow>,
    pub alarms: Vec<String>,
}

/// Over a ring in `G_n(0)`: `M ∈ G_n(0)` exactly when `M` is
/// `n`-torsionfree, and every `n`-th syzygy is both.
pub fn torsionfree_check(alg: &Algebra, n: usize, cutoff: usize, sample: &[Representation]) -> Result<TorsionfreeReport> {
    let r = is_gnm(&Representation::regular(alg), n, 0, cutoff);
    match r.verdict {
        Tri::True => {}
        Tri::False => {
            return Err(Error::Precondition(format!("regular module of {} is not in G_{}(0)", alg.name(), n)));
        }
        Tri::Inconclusive => {
            return Err(Error::Inconclusive(format!("regular module of {} in G_{}(0)", alg.name(), n)));
        }
    }
    let cache = DimCache::new(alg, cutoff);
    let mut rows = Vec::new();
    let mut alarms = Vec::new();
    let candidates = sample
        .iter()
        .map(|m| (m.clone(), false))
        .chain(sample.iter().map(|m| (syzygy(m, n), true)).filter(|(s, _)| !s.is_zero()));
    for (m, syz) in candidates {
        let gnm = is_gnm_cached(&cache, &m, n, 0).verdict;
        let torsionfree = n_torsionfree(&m, n);
        let label = module_label(&m);
        if (gnm == Tri::True) != torsionfree && gnm != Tri::Inconclusive {
            alarms.push(format!("{}: G_{}(0) = {} but {}-torsionfree = {}", label, n, gnm, n, torsionfree));
        }
        if syz && (gnm == Tri::False || !torsionfree) {
            alarms.push(format!("syzygy {} fails a predicate", label));
        }
        rows.push(TorsionfreeRow { label, syzygy: syz, gnm, torsionfree });
    }
    Ok(TorsionfreeReport { algebra: alg.name(), n, rows, alarms })
}
