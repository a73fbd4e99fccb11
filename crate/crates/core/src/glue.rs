//! Relative resolutions by `add(X)` for a finite generator list, and the
//! gluing of such (co)resolutions along short exact sequences.
//!
//! Every gluing materializes the intermediate modules `W_t` of the
//! horseshoe towers and keeps the short exact sequences
//! `0 → A_t → W_t → A″_t → 0` they sit in as witnesses.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::quiver::{
    cohorseshoe_fill, cokernel, direct_sum, dual, dual_morphism_between, extend, factor_through_epi,
    factor_through_mono, horseshoe_fill, hom_basis, image, kernel, lift, pullback, pushout, random_morphism,
    row_map, Algebra, DirectSum, HomSpace, Morphism, Representation, ShortExactSequence,
};
use crate::resolve::{AugmentedComplex, Direction, Stage};

/// `add(G_1 ⊕ ⋯ ⊕ G_r)` for a non-empty generator list.
#[derive(Clone, Debug)]
pub struct Subcategory {
    pub name: String,
    pub generators: Vec<Representation>,
}

impl Subcategory {
    pub fn new(name: &str, generators: Vec<Representation>) -> Result<Subcategory> {
        let Some(first) = generators.first() else {
            return Err(Error::Precondition("a subcategory needs at least one generator".into()));
        };
        if generators.iter().any(|g| g.algebra() != first.algebra()) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(Subcategory { name: name.to_string(), generators })
    }

    /// `add(R)`.
    pub fn projectives(alg: &Algebra) -> Subcategory {
        let gens = (0..alg.vertex_count()).map(|v| Representation::projective(alg, v)).collect();
        Subcategory { name: "projectives".into(), generators: gens }
    }

    /// `add(D(R))`.
    pub fn injectives(alg: &Algebra) -> Subcategory {
        let gens = (0..alg.vertex_count()).map(|v| Representation::injective(alg, v)).collect();
        Subcategory { name: "injectives".into(), generators: gens }
    }

    /// `add(R ⊕ D(R))`.
    pub fn proj_inj(alg: &Algebra) -> Subcategory {
        let mut gens: Vec<Representation> = (0..alg.vertex_count()).map(|v| Representation::projective(alg, v)).collect();
        gens.extend((0..alg.vertex_count()).map(|v| Representation::injective(alg, v)));
        Subcategory { name: "proj+inj".into(), generators: gens }
    }

    pub fn algebra(&self) -> &Algebra {
        self.generators[0].algebra()
    }

    /// The generators' duals, over the opposite algebra.
    pub fn dual(&self) -> Subcategory {
        Subcategory { name: format!("D({})", self.name), generators: self.generators.iter().map(dual).collect() }
    }
}

/// A `add(X)`-precover `⊕ G_j → M`; `summands[k]` is the generator index of
/// the `k`-th summand.
#[derive(Clone, Debug)]
pub struct Precover {
    pub map: Morphism,
    pub summands: Vec<usize>,
}

fn assemble(alg: &Algebra, m: &Representation, subcat: &Subcategory, chosen: &[(usize, Morphism)]) -> Precover {
    let parts: Vec<Representation> = chosen.iter().map(|(j, _)| subcat.generators[*j].clone()).collect();
    let sum = direct_sum(alg, &parts);
    let maps: Vec<&Morphism> = chosen.iter().map(|(_, b)| b).collect();
    Precover { map: row_map(&sum, m, &maps), summands: chosen.iter().map(|(j, _)| *j).collect() }
}

/// The universal evaluation map: one copy of `G_j` per basis element of
/// `Hom(G_j, M)`. Every map from an object of `add(X)` factors through it.
pub fn precover(subcat: &Subcategory, m: &Representation) -> Result<Precover> {
    let alg = m.algebra();
    if subcat.algebra() != alg {
        return Err(Error::AlgebraMismatch);
    }
    let mut chosen = Vec::new();
    for (j, g) in subcat.generators.iter().enumerate() {
        for b in hom_basis(g, m)? {
            chosen.push((j, b));
        }
    }
    Ok(assemble(alg, m, subcat, &chosen))
}

/// `D` of the precover of `D(M)` by the dual generators.
pub fn preenvelope(subcat: &Subcategory, m: &Representation) -> Result<Precover> {
    let dm = dual(m);
    let p = precover(&subcat.dual(), &dm)?;
    let target = dual(p.map.source());
    Ok(Precover { map: dual_morphism_between(&p.map, m, &target), summands: p.summands })
}

/// A precover built greedily (a basis map is added only when it does not
/// already factor), then made right minimal.
pub fn minimal_precover(subcat: &Subcategory, m: &Representation) -> Result<Morphism> {
    let alg = m.algebra();
    if subcat.algebra() != alg {
        return Err(Error::AlgebraMismatch);
    }
    let mut chosen: Vec<(usize, Morphism)> = Vec::new();
    let mut current = Morphism::zero(&Representation::zero(alg), m);
    for (j, g) in subcat.generators.iter().enumerate() {
        for b in hom_basis(g, m)? {
            if lift(&b, &current)?.is_some() {
                continue;
            }
            chosen.push((j, b));
            current = assemble(alg, m, subcat, &chosen).map;
        }
    }
    Ok(right_minimal_reduce(&current).map)
}

/// `D` of the minimal precover of `D(M)`.
pub fn minimal_preenvelope(subcat: &Subcategory, m: &Representation) -> Result<Morphism> {
    let dm = dual(m);
    let p = minimal_precover(&subcat.dual(), &dm)?;
    let target = dual(p.source());
    Ok(dual_morphism_between(&p, m, &target))
}

#[derive(Clone, Debug)]
pub struct Reduced {
    /// `f` restricted to the summand `C′`.
    pub map: Morphism,
    /// `C′ ↪ C`.
    pub inclusion: Morphism,
}

fn power(k: &Morphism, e: usize) -> Morphism {
    let mut acc = Morphism::identity(k.source());
    for _ in 0..e {
        acc = acc.compose(k);
    }
    acc
}

/// Strips summands of the source lying in `ker f`.
///
/// `f: C → M` is right minimal exactly when every `k ∈ End(C)` with `f k = 0`
/// is nilpotent. A non-nilpotent such `k` splits `C = ker k^N ⊕ im k^N`
/// (Fitting, `N ≥ dim`), and `im k^N ⊆ ker f`, so `f` restricts to
/// `ker k^N` without changing its image or its factorization property. The
/// search tries a basis of that right ideal and then seeded random
/// combinations of it.
pub fn right_minimal_reduce(f: &Morphism) -> Reduced {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut map = f.clone();
    let mut inclusion = Morphism::identity(f.source());
    'outer: loop {
        let c = map.source().clone();
        if c.is_zero() {
            break;
        }
        let n = c.dims().iter().copied().max().unwrap_or(0);
        let hs = HomSpace::new(&c, &c).expect("same algebra");
        // Basis of K = {k : map ∘ k = 0}.
        let images: Vec<Morphism> = hs.basis.iter().map(|k| map.compose(k)).collect();
        let cols = crate::quiver::hom::vectors_as_columns(&c, map.target(), &images);
        let ker = cols.kernel_basis();
        let kt = ker.transpose();
        let kbasis: Vec<Morphism> = (0..ker.cols()).map(|j| hs.combination(kt.row(j))).collect();
        if kbasis.is_empty() {
            break;
        }
        let p = c.field().p();
        let mut candidates = kbasis.clone();
        for _ in 0..64 {
            let coeffs: Vec<u32> = (0..kbasis.len()).map(|_| rng.gen_range(0..p)).collect();
            candidates.push(crate::quiver::hom::combine(&c, &c, &kbasis, &coeffs));
        }
        for k in candidates {
            let kn = power(&k, n);
            if kn.is_zero() {
                continue;
            }
            let (_, incl) = kernel(&kn);
            map = map.compose(&incl);
            inclusion = inclusion.compose(&incl);
            continue 'outer;
        }
        break;
    }
    Reduced { map, inclusion }
}

/// `D` of the right minimal reduction of `D(f)`: strips summands of the
/// target on which `f` factors trivially.
pub fn left_minimal_reduce(f: &Morphism) -> Reduced {
    let df = crate::quiver::dual_morphism(f);
    let r = right_minimal_reduce(&df);
    let c = dual(r.map.source());
    Reduced {
        map: dual_morphism_between(&r.map, f.source(), &c),
        inclusion: dual_morphism_between(&r.inclusion, f.target(), &c),
    }
}

/// `T ∈ add(X)`: the universal precover of `T` splits.
pub fn in_add(subcat: &Subcategory, t: &Representation) -> Result<bool> {
    if t.is_zero() {
        return Ok(true);
    }
    let p = precover(subcat, t)?;
    Ok(lift(&Morphism::identity(t), &p.map)?.is_some())
}

/// Per-stage evidence for a relative (co)resolution.
#[derive(Clone, Debug, Serialize)]
pub struct StageWitness {
    pub stage: usize,
    pub object_dims: Vec<usize>,
    /// Per generator: `Hom(G, C_i) → Hom(G, K_i)` onto (resolutions) or
    /// `Hom(C^i, G) → Hom(K^i, G)` onto (coresolutions).
    pub hom_onto: Vec<bool>,
    /// Per generator, stages `i ≥ 1`: `dim Ext^1(G, K_i)` or `dim Ext^1(K^i, G)`.
    pub ext1: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Flags {
    pub exact: bool,
    pub terms_in_add: bool,
    pub hom_exact: bool,
    pub ext_vanishing: bool,
}

impl Flags {
    pub fn proper(&self) -> bool {
        self.exact && self.terms_in_add && self.hom_exact
    }

    pub fn strong(&self) -> bool {
        self.exact && self.terms_in_add && self.ext_vanishing
    }
}

/// A (co)resolution relative to `add(X)` with recomputed flags.
#[derive(Clone, Debug)]
pub struct ProperResolution {
    pub complex: AugmentedComplex,
    pub subcat: Subcategory,
    pub flags: Flags,
    pub witnesses: Vec<StageWitness>,
}

impl ProperResolution {
    pub fn proper(&self) -> bool {
        self.flags.proper()
    }

    pub fn strong(&self) -> bool {
        self.flags.strong()
    }

    pub fn assess(complex: AugmentedComplex, subcat: &Subcategory) -> Result<ProperResolution> {
        let (flags, witnesses) = assess(&complex, subcat)?;
        Ok(ProperResolution { complex, subcat: subcat.clone(), flags, witnesses })
    }
}

fn hom_onto(g: &Representation, onto: &Morphism) -> Result<bool> {
    let target = hom_basis(g, onto.target())?;
    if target.is_empty() {
        return Ok(true);
    }
    let pushed: Vec<Morphism> = hom_basis(g, onto.source())?.iter().map(|h| onto.compose(h)).collect();
    Ok(crate::quiver::span_rank(g, onto.target(), &pushed) == target.len())
}

fn cohom_onto(into: &Morphism, g: &Representation) -> Result<bool> {
    let target = hom_basis(into.source(), g)?;
    if target.is_empty() {
        return Ok(true);
    }
    let pulled: Vec<Morphism> = hom_basis(into.target(), g)?.iter().map(|h| h.compose(into)).collect();
    Ok(crate::quiver::span_rank(into.source(), g, &pulled) == target.len())
}

/// Recomputes exactness, membership of the terms in `add(X)`,
/// `Hom`-exactness against every generator and `Ext^1` vanishing on the
/// stage objects.
pub fn assess(c: &AugmentedComplex, subcat: &Subcategory) -> Result<(Flags, Vec<StageWitness>)> {
    let exact = c.is_exact();
    let mut terms_in_add = true;
    for t in &c.terms {
        if !in_add(subcat, t)? {
            terms_in_add = false;
            break;
        }
    }
    let stages = c.stages()?;
    let mut hom_exact = true;
    let mut ext_vanishing = true;
    let mut witnesses = Vec::new();
    let calcs: Vec<crate::resolve::ExtCalculator> = match c.direction {
        Direction::Resolution => subcat.generators.iter().map(|g| crate::resolve::ExtCalculator::new(g, 1)).collect(),
        Direction::Coresolution => Vec::new(),
    };
    for (i, s) in stages.iter().enumerate() {
        let mut onto = Vec::new();
        let mut ext1 = Vec::new();
        for (j, g) in subcat.generators.iter().enumerate() {
            let ok = match c.direction {
                Direction::Resolution => hom_onto(g, &s.map)?,
                Direction::Coresolution => cohom_onto(&s.map, g)?,
            };
            hom_exact &= ok;
            onto.push(ok);
            if i >= 1 {
                let e = match c.direction {
                    Direction::Resolution => calcs[j].ext(&s.object, 1)?,
                    Direction::Coresolution => crate::resolve::ext(&s.object, g, 1)?,
                };
                ext_vanishing &= e == 0;
                ext1.push(e);
            }
        }
        witnesses.push(StageWitness { stage: i, object_dims: s.object.dims().to_vec(), hom_onto: onto, ext1 });
    }
    Ok((Flags { exact, terms_in_add, hom_exact, ext_vanishing }, witnesses))
}

/// Iterated minimal precovers of the stage kernels, `n + 1` terms.
///
/// Fails when some stage has no surjective precover (the module then has no
/// `add(X)`-resolution at all).
pub fn proper_resolution(subcat: &Subcategory, m: &Representation, n: usize) -> Result<ProperResolution> {
    let alg = m.algebra();
    let first = minimal_precover(subcat, m)?;
    if !first.is_surjective() {
        return Err(Error::Precondition(format!(
            "the {} precover of the module is not surjective; no resolution exists",
            subcat.name
        )));
    }
    let mut terms = vec![first.source().clone()];
    let mut differentials = Vec::new();
    let mut onto = first.clone();
    for i in 0..n {
        let (k, ki) = kernel(&onto);
        if k.is_zero() {
            let z = Representation::zero(alg);
            differentials.push(Morphism::zero(&z, terms.last().unwrap()));
            terms.push(z.clone());
            onto = Morphism::zero(&z, &z);
            continue;
        }
        let p = minimal_precover(subcat, &k)?;
        if !p.is_surjective() {
            return Err(Error::Precondition(format!(
                "the {} precover of stage {} is not surjective; no resolution exists",
                subcat.name,
                i + 1
            )));
        }
        differentials.push(ki.compose(&p));
        terms.push(p.source().clone());
        onto = p;
    }
    let complex = AugmentedComplex {
        direction: Direction::Resolution,
        module: m.clone(),
        terms,
        differentials,
        augmentation: first,
        summands: None,
    };
    ProperResolution::assess(complex, subcat)
}

/// `D` of the proper resolution of `D(M)` by the dual generators.
pub fn proper_coresolution(subcat: &Subcategory, m: &Representation, n: usize) -> Result<ProperResolution> {
    let r = proper_resolution(&subcat.dual(), &dual(m), n)?;
    let mut complex = r.complex.dual();
    complex.module = m.clone();
    complex.augmentation = complex.augmentation.retarget(m, &complex.terms[0]);
    ProperResolution::assess(complex, subcat)
}

/// Closure of `add(X)` under kernels of epimorphisms (`cokernels = false`)
/// or cokernels of monomorphisms, spot-checked on random maps between
/// random objects of `add(X)`.
#[derive(Clone, Debug, Serialize)]
pub struct ClosureReport {
    pub trials: usize,
    pub tested: usize,
    pub failures: usize,
}

pub fn closure_spot_check(subcat: &Subcategory, cokernels: bool, trials: usize, seed: u64) -> Result<ClosureReport> {
    let alg = subcat.algebra().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let r = subcat.generators.len();
    let mut tested = 0;
    let mut failures = 0;
    for _ in 0..trials {
        let pick = |rng: &mut ChaCha8Rng, k: usize| {
            let parts: Vec<Representation> = (0..k).map(|_| subcat.generators[rng.gen_range(0..r)].clone()).collect();
            direct_sum(&alg, &parts).module
        };
        let ka = rng.gen_range(1..3);
        let kb = rng.gen_range(1..3);
        let a = pick(&mut rng, ka);
        let b = pick(&mut rng, kb);
        let f = random_morphism(&a, &b, &mut rng)?;
        let obj = if cokernels {
            if !f.is_injective() {
                continue;
            }
            cokernel(&f).0
        } else {
            if !f.is_surjective() {
                continue;
            }
            kernel(&f).0
        };
        tested += 1;
        if !in_add(subcat, &obj)? {
            failures += 1;
        }
    }
    Ok(ClosureReport { trials, tested, failures })
}

/// The stage towers of the horseshoe construction.
#[derive(Clone, Debug)]
pub struct Tower {
    /// `T_t = L_t ⊕ R_t`.
    pub sums: Vec<DirectSum>,
    /// Resolution towers: `α′_t: T_t ↠ W_t`. Coresolution towers: `β′_t: W_t ↪ T_t`.
    pub maps: Vec<Morphism>,
    /// `0 → A_t → W_t → A″_t → 0`.
    pub sequences: Vec<ShortExactSequence>,
    /// Resolution towers: `W_{t+1} ↪ T_t`. Coresolution towers: `T_t ↠ W_{t+1}`.
    pub links: Vec<Morphism>,
}

/// Repeated horseshoe filling. `left[t].map: L_t ↠ A_t` and
/// `right[t].map: R_t ↠ A″_t` are stage maps with `A_0`, `A″_0` the ends
/// of `ses`.
pub fn horseshoe_tower(ses: &ShortExactSequence, left: &[Stage], right: &[Stage]) -> Result<Tower> {
    let count = left.len().min(right.len());
    let mut t = Tower { sums: Vec::new(), maps: Vec::new(), sequences: Vec::new(), links: Vec::new() };
    let mut cur = ses.clone();
    for i in 0..count {
        let (alpha, alpha2) = (&left[i].map, &right[i].map);
        if alpha.target() != cur.left() || alpha2.target() != cur.right() {
            return Err(Error::Precondition(format!("stage {}: resolutions do not match the sequence", i)));
        }
        let h = lift(alpha2, &cur.g)?.ok_or_else(|| {
            Error::NoSolution(format!("stage {}: the right-hand term does not lift; sequence not Hom-exact", i))
        })?;
        let (sum, a1) = horseshoe_fill(&cur, alpha, alpha2, &h)?;
        debug_assert!(a1.is_surjective());
        t.sums.push(sum.clone());
        t.maps.push(a1.clone());
        t.sequences.push(cur.clone());
        if i + 1 < count {
            let (_, iw) = kernel(&a1);
            let f = factor_through_mono(&sum.injections[0].compose(&left[i + 1].link), &iw)?;
            let g = factor_through_mono(&sum.projections[1].compose(&iw), &right[i + 1].link)?;
            cur = ShortExactSequence::new(f, g)?;
            t.links.push(iw);
        }
    }
    Ok(t)
}

/// Repeated co-horseshoe filling. `left[t].map: A_t ↪ L_t` and
/// `right[t].map: A″_t ↪ R_t`.
pub fn cohorseshoe_tower(ses: &ShortExactSequence, left: &[Stage], right: &[Stage]) -> Result<Tower> {
    let count = left.len().min(right.len());
    let mut t = Tower { sums: Vec::new(), maps: Vec::new(), sequences: Vec::new(), links: Vec::new() };
    let mut cur = ses.clone();
    for i in 0..count {
        let (beta, beta2) = (&left[i].map, &right[i].map);
        if beta.source() != cur.left() || beta2.source() != cur.right() {
            return Err(Error::Precondition(format!("stage {}: coresolutions do not match the sequence", i)));
        }
        let k = extend(beta, &cur.f)?.ok_or_else(|| {
            Error::NoSolution(format!("stage {}: the left-hand term does not extend; sequence not Hom-exact", i))
        })?;
        let (sum, b1) = cohorseshoe_fill(&cur, beta, beta2, &k)?;
        debug_assert!(b1.is_injective());
        t.sums.push(sum.clone());
        t.maps.push(b1.clone());
        t.sequences.push(cur.clone());
        if i + 1 < count {
            let (_, pw) = cokernel(&b1);
            let f = factor_through_epi(&pw.compose(&sum.injections[0]), &left[i + 1].link)?;
            let g = factor_through_epi(&right[i + 1].link.compose(&sum.projections[1]), &pw)?;
            cur = ShortExactSequence::new(f, g)?;
            t.links.push(pw);
        }
    }
    Ok(t)
}

/// The output of one gluing step.
#[derive(Clone, Debug)]
pub struct Glued {
    pub result: ProperResolution,
    /// Bridge sequence `0 → C → ⋯ → ⋯ → 0` tying the new degree-0 term
    /// to the inputs.
    pub bridge: Option<ShortExactSequence>,
    pub tower: Tower,
    /// Expected dimension vector of each output term, from the input terms.
    pub expected_shape: Vec<Vec<usize>>,
    /// What gluing guarantees for the output's flags given the
    /// inputs' flags and the sequence's `Hom`/`Ext` exactness.
    pub inherited_strong: bool,
    pub inherited_proper: bool,
}

impl Glued {
    pub fn shape_matches(&self) -> bool {
        self.result.complex.terms.len() == self.expected_shape.len()
            && self.result.complex.terms.iter().zip(&self.expected_shape).all(|(t, s)| t.dims() == s.as_slice())
    }

    /// The recomputed flags honour every inherited promise.
    pub fn inheritance_holds(&self) -> bool {
        (!self.inherited_strong || (self.result.flags.exact && self.result.flags.ext_vanishing))
            && (!self.inherited_proper || (self.result.flags.exact && self.result.flags.hom_exact))
    }
}

fn add_dims(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub_dims(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn check_resolution(r: &ProperResolution, m: &Representation, dir: Direction, what: &str) -> Result<()> {
    if r.complex.direction != dir {
        return Err(Error::Precondition(format!("{} has the wrong direction", what)));
    }
    if r.complex.module != *m {
        return Err(Error::Precondition(format!("{} resolves a different module than the sequence provides", what)));
    }
    Ok(())
}

fn hom_exact_failure(r: &ProperResolution, what: &str) -> Error {
    for w in &r.witnesses {
        if let Some(j) = w.hom_onto.iter().position(|&b| !b) {
            return Error::Precondition(format!("{} is not Hom-exact at stage {} against generator {}", what, w.stage, j + 1));
        }
    }
    Error::Precondition(format!("{} is not exact", what))
}

/// `Hom(G, ses.g)` onto for every generator.
pub fn ses_hom_exact(subcat: &Subcategory, ses: &ShortExactSequence) -> Result<bool> {
    for g in &subcat.generators {
        if !hom_onto(g, &ses.g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `Hom(ses.f, G)` onto for every generator.
pub fn ses_cohom_exact(subcat: &Subcategory, ses: &ShortExactSequence) -> Result<bool> {
    for g in &subcat.generators {
        if !cohom_onto(&ses.f, g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Resolution of the first term of `0 → X → X⁰ → X¹ → 0`: terms
/// `C, C¹_2 ⊕ C⁰_1, C¹_3 ⊕ C⁰_2, …` and the bridge `0 → C → C¹_1 ⊕ C⁰_0 → C¹_0 → 0`.
/// `res1` must be `Hom(X, −)`-exact.
pub fn glue_first(ses: &ShortExactSequence, res0: &ProperResolution, res1: &ProperResolution) -> Result<Glued> {
    check_resolution(res0, ses.middle(), Direction::Resolution, "resolution of the middle term")?;
    check_resolution(res1, ses.right(), Direction::Resolution, "resolution of the right term")?;
    if !(res1.flags.exact && res1.flags.hom_exact) {
        return Err(hom_exact_failure(res1, "resolution of the right term"));
    }
    let s0 = res0.complex.stages()?;
    let s1 = res1.complex.stages()?;
    if s1.len() < 2 {
        return Err(Error::Precondition("the right term needs a resolution of length at least 1".into()));
    }
    let pi1 = &res1.complex.augmentation;
    // M = X⁰ ×_{X¹} C¹_0 and 0 → K¹_1 → M → X⁰ → 0.
    let pb = pullback(&ses.g, pi1)?;
    let k11 = &s1[1];
    let into_m = pb.factor(&Morphism::zero(&k11.object, ses.middle()), &k11.link)?;
    let ses_m = ShortExactSequence::new(into_m, pb.p1.clone())?;
    let tower = horseshoe_tower(&ses_m, &s1[1..], &s0)?;
    // X ↪ M, and C = preimage of X in T_0.
    let x_in_m = pb.factor(&ses.f, &Morphism::zero(ses.left(), pi1.source()))?;
    let cpb = pullback(&tower.maps[0], &x_in_m)?;
    let c = cpb.object.clone();
    let c_in_t0 = cpb.p1.clone();
    let augmentation = cpb.p2.clone();
    let mut terms = vec![c.clone()];
    let mut differentials = Vec::new();
    for t in 1..tower.sums.len() {
        terms.push(tower.sums[t].module.clone());
        let d = tower.links[t - 1].compose(&tower.maps[t]);
        differentials.push(if t == 1 { factor_through_mono(&d, &c_in_t0)? } else { d });
    }
    let complex = AugmentedComplex {
        direction: Direction::Resolution,
        module: ses.left().clone(),
        terms,
        differentials,
        augmentation,
        summands: None,
    };
    let bridge = ShortExactSequence::new(c_in_t0, pb.p2.compose(&tower.maps[0]))?;
    let mut expected_shape =
        vec![sub_dims(&add_dims(s1[1].map.source().dims(), s0[0].map.source().dims()), s1[0].map.source().dims())];
    for t in 1..tower.sums.len() {
        expected_shape.push(add_dims(s1[t + 1].map.source().dims(), s0[t].map.source().dims()));
    }
    let result = ProperResolution::assess(complex, &res0.subcat)?;
    Ok(Glued {
        inherited_strong: res0.strong() && res1.strong(),
        inherited_proper: res0.proper() && res1.proper(),
        result,
        bridge: Some(bridge),
        tower,
        expected_shape,
    })
}

/// Resolution of the last term of `0 → X₁ → X₀ → X → 0`: terms
/// `C⁰_0, C¹_0 ⊕ C⁰_1, C¹_1 ⊕ C⁰_2, …`, writing `C⁰` for the resolution of
/// `X₀` (which must be `Hom(X, −)`-exact) and `C¹` for that of `X₁`.
pub fn glue_last_res(ses: &ShortExactSequence, res0: &ProperResolution, res1: &ProperResolution) -> Result<Glued> {
    check_resolution(res0, ses.middle(), Direction::Resolution, "resolution of the middle term")?;
    check_resolution(res1, ses.left(), Direction::Resolution, "resolution of the left term")?;
    if !(res0.flags.exact && res0.flags.hom_exact) {
        return Err(hom_exact_failure(res0, "resolution of the middle term"));
    }
    let s0 = res0.complex.stages()?;
    let s1 = res1.complex.stages()?;
    let pi0 = &res0.complex.augmentation;
    // W_1 = C⁰_0 ×_{X₀} X₁ and 0 → K⁰_1 → W_1 → X₁ → 0.
    let pb = pullback(pi0, &ses.f)?;
    let tower = if s0.len() >= 2 {
        let k01 = &s0[1];
        let into_w = pb.factor(&k01.link, &Morphism::zero(&k01.object, ses.left()))?;
        let ses_w = ShortExactSequence::new(into_w, pb.p2.clone())?;
        horseshoe_tower(&ses_w, &s0[1..], &s1)?
    } else {
        Tower { sums: Vec::new(), maps: Vec::new(), sequences: Vec::new(), links: Vec::new() }
    };
    let mut terms = vec![pi0.source().clone()];
    let mut differentials = Vec::new();
    for t in 0..tower.sums.len() {
        terms.push(tower.sums[t].module.clone());
        let into = if t == 0 { pb.p1.clone() } else { tower.links[t - 1].clone() };
        differentials.push(into.compose(&tower.maps[t]));
    }
    let complex = AugmentedComplex {
        direction: Direction::Resolution,
        module: ses.right().clone(),
        terms,
        differentials,
        augmentation: ses.g.compose(pi0),
        summands: None,
    };
    let mut expected_shape = vec![pi0.source().dims().to_vec()];
    for t in 0..tower.sums.len() {
        expected_shape.push(add_dims(s0[t + 1].map.source().dims(), s1[t].map.source().dims()));
    }
    let subcat = &res0.subcat;
    let ses_exact = ses_hom_exact(subcat, ses)?;
    let ses_strong = subcat.generators.iter().try_fold(true, |acc, g| -> Result<bool> {
        Ok(acc && crate::resolve::ext(g, ses.left(), 1)? == 0)
    })?;
    let result = ProperResolution::assess(complex, subcat)?;
    Ok(Glued {
        inherited_strong: ses_strong && res0.strong() && res1.strong(),
        inherited_proper: ses_exact && res0.proper() && res1.proper(),
        result,
        bridge: None,
        tower,
        expected_shape,
    })
}

/// Coresolution of the last term of `0 → Y₁ → Y₀ → Y → 0`: terms
/// `C, C⁰_1 ⊕ C¹_2, C⁰_2 ⊕ C¹_3, …` and the bridge `0 → C¹_0 → C⁰_0 ⊕ C¹_1 → C → 0`,
/// with `C⁰` the coresolution of `Y₀` and `C¹` that of `Y₁` (which must be
/// `Hom(−, X)`-exact).
pub fn glue_last_cores(ses: &ShortExactSequence, cores0: &ProperResolution, cores1: &ProperResolution) -> Result<Glued> {
    check_resolution(cores0, ses.middle(), Direction::Coresolution, "coresolution of the middle term")?;
    check_resolution(cores1, ses.left(), Direction::Coresolution, "coresolution of the left term")?;
    if !(cores1.flags.exact && cores1.flags.hom_exact) {
        return Err(hom_exact_failure(cores1, "coresolution of the left term"));
    }
    let s0 = cores0.complex.stages()?;
    let s1 = cores1.complex.stages()?;
    if s1.len() < 2 {
        return Err(Error::Precondition("the left term needs a coresolution of length at least 1".into()));
    }
    let e1 = &cores1.complex.augmentation;
    // N = Y₀ ⊔_{Y₁} C¹_0 and 0 → Y₀ → N → K¹_1 → 0.
    let po = pushout(&ses.f, e1)?;
    let k11 = &s1[1];
    let onto = po.factor(&Morphism::zero(ses.middle(), &k11.object), &k11.link)?;
    let ses_n = ShortExactSequence::new(po.q1.clone(), onto)?;
    let tower = cohorseshoe_tower(&ses_n, &s0, &s1[1..])?;
    // N ↠ Y, and C = T_0 ⊔_N Y.
    let n_onto_y = po.factor(&ses.g, &Morphism::zero(e1.target(), ses.right()))?;
    let cpo = pushout(&tower.maps[0], &n_onto_y)?;
    let c = cpo.object.clone();
    let t0_onto_c = cpo.q1.clone();
    let augmentation = cpo.q2.clone();
    let mut terms = vec![c.clone()];
    let mut differentials = Vec::new();
    for t in 1..tower.sums.len() {
        terms.push(tower.sums[t].module.clone());
        let d = tower.maps[t].compose(&tower.links[t - 1]);
        differentials.push(if t == 1 { factor_through_epi(&d, &t0_onto_c)? } else { d });
    }
    let complex = AugmentedComplex {
        direction: Direction::Coresolution,
        module: ses.right().clone(),
        terms,
        differentials,
        augmentation,
        summands: None,
    };
    let bridge = ShortExactSequence::new(tower.maps[0].compose(&po.q2), t0_onto_c)?;
    let mut expected_shape =
        vec![sub_dims(&add_dims(s0[0].map.target().dims(), s1[1].map.target().dims()), s1[0].map.target().dims())];
    for t in 1..tower.sums.len() {
        expected_shape.push(add_dims(s0[t].map.target().dims(), s1[t + 1].map.target().dims()));
    }
    let result = ProperResolution::assess(complex, &cores0.subcat)?;
    Ok(Glued {
        inherited_strong: cores0.strong() && cores1.strong(),
        inherited_proper: cores0.proper() && cores1.proper(),
        result,
        bridge: Some(bridge),
        tower,
        expected_shape,
    })
}

/// Coresolution of the first term of `0 → Y → Y⁰ → Y¹ → 0`: terms
/// `C⁰_0, C¹_0 ⊕ C⁰_1, C¹_1 ⊕ C⁰_2, …`, with `C⁰` the coresolution of `Y⁰`
/// (which must be `Hom(−, X)`-exact) and `C¹` that of `Y¹`.
pub fn glue_first_cores(ses: &ShortExactSequence, cores0: &ProperResolution, cores1: &ProperResolution) -> Result<Glued> {
    check_resolution(cores0, ses.middle(), Direction::Coresolution, "coresolution of the middle term")?;
    check_resolution(cores1, ses.right(), Direction::Coresolution, "coresolution of the right term")?;
    if !(cores0.flags.exact && cores0.flags.hom_exact) {
        return Err(hom_exact_failure(cores0, "coresolution of the middle term"));
    }
    let s0 = cores0.complex.stages()?;
    let s1 = cores1.complex.stages()?;
    let e0 = &cores0.complex.augmentation;
    // W¹ = C⁰_0 ⊔_{Y⁰} Y¹ and 0 → Y¹ → W¹ → K⁰_1 → 0.
    let po = pushout(e0, &ses.g)?;
    let tower = if s0.len() >= 2 {
        let k01 = &s0[1];
        let onto = po.factor(&k01.link, &Morphism::zero(ses.right(), &k01.object))?;
        let ses_w = ShortExactSequence::new(po.q2.clone(), onto)?;
        cohorseshoe_tower(&ses_w, &s1, &s0[1..])?
    } else {
        Tower { sums: Vec::new(), maps: Vec::new(), sequences: Vec::new(), links: Vec::new() }
    };
    let mut terms = vec![e0.target().clone()];
    let mut differentials = Vec::new();
    for t in 0..tower.sums.len() {
        terms.push(tower.sums[t].module.clone());
        let out = if t == 0 { po.q1.clone() } else { tower.links[t - 1].clone() };
        differentials.push(tower.maps[t].compose(&out));
    }
    let complex = AugmentedComplex {
        direction: Direction::Coresolution,
        module: ses.left().clone(),
        terms,
        differentials,
        augmentation: e0.compose(&ses.f),
        summands: None,
    };
    let mut expected_shape = vec![e0.target().dims().to_vec()];
    for t in 0..tower.sums.len() {
        expected_shape.push(add_dims(s1[t].map.target().dims(), s0[t + 1].map.target().dims()));
    }
    let subcat = &cores0.subcat;
    let ses_exact = ses_cohom_exact(subcat, ses)?;
    let ses_strong = subcat.generators.iter().try_fold(true, |acc, g| -> Result<bool> {
        Ok(acc && crate::resolve::ext(ses.right(), g, 1)? == 0)
    })?;
    let result = ProperResolution::assess(complex, subcat)?;
    Ok(Glued {
        inherited_strong: ses_strong && cores0.strong() && cores1.strong(),
        inherited_proper: ses_exact && cores0.proper() && cores1.proper(),
        result,
        bridge: None,
        tower,
        expected_shape,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GlueKind {
    First,
    LastRes,
    LastCores,
    FirstCores,
}

impl GlueKind {
    pub fn glue(self, ses: &ShortExactSequence, a: &ProperResolution, b: &ProperResolution) -> Result<Glued> {
        match self {
            GlueKind::First => glue_first(ses, a, b),
            GlueKind::LastRes => glue_last_res(ses, a, b),
            GlueKind::LastCores => glue_last_cores(ses, a, b),
            GlueKind::FirstCores => glue_first_cores(ses, a, b),
        }
    }

    pub fn direction(self) -> Direction {
        match self {
            GlueKind::First | GlueKind::LastRes => Direction::Resolution,
            GlueKind::LastCores | GlueKind::FirstCores => Direction::Coresolution,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GlueKind::First => "first",
            GlueKind::LastRes => "last",
            GlueKind::LastCores => "last-cores",
            GlueKind::FirstCores => "first-cores",
        }
    }
}

/// The result of folding a gluing over a long exact sequence.
#[derive(Clone, Debug)]
pub struct Iterated {
    pub result: ProperResolution,
    /// One gluing per spliced short exact sequence, innermost first.
    pub steps: Vec<Glued>,
}

/// Truncates a relative resolution to length 0 and moves its augmentation
/// along `onto` (resolutions) or `into` (coresolutions).
fn truncate_along(r: &ProperResolution, m: &Representation, map: &Morphism) -> Result<ProperResolution> {
    let c = &r.complex;
    let augmentation = match c.direction {
        Direction::Resolution => map.compose(&c.augmentation),
        Direction::Coresolution => c.augmentation.compose(map),
    };
    let complex = AugmentedComplex {
        direction: c.direction,
        module: m.clone(),
        terms: vec![c.terms[0].clone()],
        differentials: Vec::new(),
        augmentation,
        summands: None,
    };
    ProperResolution::assess(complex, &r.subcat)
}

/// Folds one gluing over a long exact sequence spliced into short ones.
///
/// * `First`: `maps` is `X → X⁰ → ⋯ → Xⁿ` (`0 → X → ⋯ → Xⁿ → 0` exact),
///   `res[j]` resolves `X^j`.
/// * `LastRes`: `maps[0]: X₀ → X`, `maps[j]: X_j → X_{j−1}`
///   (`X_n → ⋯ → X₀ → X → 0` exact), `res[j]` resolves `X_j`.
/// * `LastCores`: `maps[0]: Y₀ → Y`, `maps[j]: Y_j → Y_{j−1}`
///   (`0 → Y_n → ⋯ → Y₀ → Y → 0` exact), `res[j]` coresolves `Y_j`.
/// * `FirstCores`: `maps` is `Y → Y⁰ → ⋯ → Yⁿ` (`0 → Y → ⋯ → Yⁿ` exact),
///   `res[j]` coresolves `Y^j`.
pub fn iterate_glue(kind: GlueKind, maps: &[Morphism], res: &[ProperResolution]) -> Result<Iterated> {
    if maps.is_empty() || res.len() != maps.len() {
        return Err(Error::Precondition(format!("{} maps need as many (co)resolutions, got {}", maps.len(), res.len())));
    }
    let n = maps.len() - 1;
    if n == 0 {
        // A single map: an isomorphism for `First`/`LastCores`, an epi or
        // mono onto or out of the resolved module otherwise.
        let r = &res[0];
        let moved = match kind {
            GlueKind::First | GlueKind::LastCores => {
                let inv = maps[0].inverse().ok_or_else(|| {
                    Error::Precondition("a one-map sequence 0 → X → X⁰ → 0 must be an isomorphism".into())
                })?;
                let mut c = r.complex.clone();
                if kind == GlueKind::First {
                    c.module = inv.target().clone();
                    c.augmentation = inv.compose(&c.augmentation);
                } else {
                    c.module = inv.source().clone();
                    c.augmentation = c.augmentation.compose(&inv);
                }
                ProperResolution::assess(c, &r.subcat)?
            }
            GlueKind::LastRes => truncate_along(r, maps[0].target(), &maps[0])?,
            GlueKind::FirstCores => truncate_along(r, maps[0].source(), &maps[0])?,
        };
        return Ok(Iterated { result: moved, steps: Vec::new() });
    }
    match kind {
        GlueKind::First => {
            // ses_j: 0 → Z^j → X^j → Z^{j+1} → 0, Z^0 = X, Z^n = X^n.
            let mut seqs = Vec::new();
            let mut incl = maps[0].clone();
            for j in 0..n {
                if j + 1 == n {
                    seqs.push(ShortExactSequence::new(incl.clone(), maps[n].clone())?);
                } else {
                    let (_, next_incl, co) = image(&maps[j + 1]);
                    seqs.push(ShortExactSequence::new(incl.clone(), co)?);
                    incl = next_incl;
                }
            }
            let mut steps = Vec::new();
            let mut cur = res[n].clone();
            for j in (0..n).rev() {
                let g = glue_first(&seqs[j], &res[j], &cur)?;
                cur = g.result.clone();
                steps.push(g);
            }
            Ok(Iterated { result: cur, steps })
        }
        GlueKind::LastCores => {
            // ses_j: 0 → Z_{j+1} → Y_j → Z_j → 0, Z_0 = Y, Z_n = Y_n.
            let mut seqs = Vec::new();
            let mut onto = maps[0].clone();
            for j in 0..n {
                if j + 1 == n {
                    seqs.push(ShortExactSequence::new(maps[n].clone(), onto.clone())?);
                } else {
                    let (_, ki) = kernel(&onto);
                    seqs.push(ShortExactSequence::new(ki.clone(), onto.clone())?);
                    onto = factor_through_mono(&maps[j + 1], &ki)?;
                }
            }
            let mut steps = Vec::new();
            let mut cur = res[n].clone();
            for j in (0..n).rev() {
                let g = glue_last_cores(&seqs[j], &res[j], &cur)?;
                cur = g.result.clone();
                steps.push(g);
            }
            Ok(Iterated { result: cur, steps })
        }
        GlueKind::LastRes => {
            // ses_j: 0 → Z_{j+1} → X_j → Z_j → 0, Z_0 = X; the deepest
            // resolution is pushed onto Z_n = im(X_n → X_{n−1}).
            let mut seqs = Vec::new();
            let mut onto = maps[0].clone();
            let mut last_onto = None;
            for j in 0..n {
                let (_, ki) = kernel(&onto);
                seqs.push(ShortExactSequence::new(ki.clone(), onto.clone())?);
                let next = factor_through_mono(&maps[j + 1], &ki)?;
                if j + 1 == n {
                    last_onto = Some(next);
                } else {
                    onto = next;
                }
            }
            let last_onto = last_onto.unwrap();
            let mut cur = truncate_along(&res[n], last_onto.target(), &last_onto)?;
            let mut steps = Vec::new();
            for j in (0..n).rev() {
                let g = glue_last_res(&seqs[j], &res[j], &cur)?;
                cur = g.result.clone();
                steps.push(g);
            }
            Ok(Iterated { result: cur, steps })
        }
        GlueKind::FirstCores => {
            // ses_j: 0 → Z^j → Y^j → Z^{j+1} → 0, Z^0 = Y; the deepest
            // coresolution is pulled back to Z^n = coker(Z^{n−1} → Y^{n−1}).
            let mut seqs = Vec::new();
            let mut into = maps[0].clone();
            let mut last_into = None;
            for j in 0..n {
                let (_, pi) = cokernel(&into);
                seqs.push(ShortExactSequence::new(into.clone(), pi.clone())?);
                let next = factor_through_epi(&maps[j + 1], &pi)?;
                if j + 1 == n {
                    last_into = Some(next);
                } else {
                    into = next;
                }
            }
            let last_into = last_into.unwrap();
            let mut cur = truncate_along(&res[n], last_into.source(), &last_into)?;
            let mut steps = Vec::new();
            for j in (0..n).rev() {
                let g = glue_first_cores(&seqs[j], &res[j], &cur)?;
                cur = g.result.clone();
                steps.push(g);
            }
            Ok(Iterated { result: cur, steps })
        }
    }
}

/// A section `s` of `ses.g` (`g s = 1`), if the sequence splits.
pub fn splitting_section(ses: &ShortExactSequence) -> Result<Option<Morphism>> {
    lift(&Morphism::identity(ses.right()), &ses.g)
}

/// A retraction `r` of `ses.f` (`r f = 1`), if the sequence splits.
pub fn splitting_retraction(ses: &ShortExactSequence) -> Result<Option<Morphism>> {
    extend(&Morphism::identity(ses.left()), &ses.f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::resolve::{min_resolution, projective_cover};

    fn alg(name: &str) -> Algebra {
        fixtures::algebra(name).unwrap()
    }

    fn a2_sequence(a: &Algebra) -> ShortExactSequence {
        let p1 = Representation::projective(a, 0);
        let (_, rad) = crate::resolve::radical(&p1);
        let (_, pi) = cokernel(&rad);
        ShortExactSequence::new(rad, pi).unwrap()
    }

    #[test]
    fn precover_examples() {
        let a = alg("kA2");
        let s1 = Subcategory::new("S1", vec![Representation::simple(&a, 0)]).unwrap();
        let p = precover(&s1, &Representation::simple(&a, 1)).unwrap();
        assert!(p.map.source().is_zero());
        let r = Subcategory::projectives(&a);
        let m = Representation::simple(&a, 0);
        assert!(precover(&r, &m).unwrap().map.is_surjective());
        let mp = minimal_precover(&r, &m).unwrap();
        assert_eq!(mp.source().dims(), projective_cover(&m).map.source().dims());
        assert!(Subcategory::new("empty", vec![]).is_err());
    }

    #[test]
    fn reduce_strips_superfluous_summand() {
        let a = alg("kA2");
        let s1 = Representation::simple(&a, 0);
        let pi = projective_cover(&s1).map;
        let q = Representation::projective(&a, 1);
        let sum = direct_sum(&a, &[pi.source().clone(), q.clone()]);
        let z = Morphism::zero(&q, &s1);
        let f = row_map(&sum, &s1, &[&pi, &z]);
        let red = right_minimal_reduce(&f);
        assert_eq!(red.map.source().dims(), pi.source().dims());
        assert!(red.map.is_surjective());
        let red2 = right_minimal_reduce(&pi);
        assert!(red2.inclusion.is_iso());
    }

    /// The precover of `M ⊕ N` is, up to the order of summands, the sum of
    /// the precovers of `M` and `N`.
    #[test]
    fn precover_of_sum() {
        for name in fixtures::NAMES {
            let a = alg(name);
            let subcat = Subcategory::proj_inj(&a);
            let mods = fixtures::standard_modules(&a);
            let (m, n) = (&mods[0], &mods[mods.len() - 1]);
            let s = direct_sum(&a, &[m.clone(), n.clone()]);
            let p = precover(&subcat, &s.module).unwrap();
            let pm = precover(&subcat, m).unwrap();
            let pn = precover(&subcat, n).unwrap();
            assert_eq!(p.map.source().total_dim(), pm.map.source().total_dim() + pn.map.source().total_dim());
            // Every map from a generator into the sum factors.
            for g in &subcat.generators {
                for h in hom_basis(g, &s.module).unwrap() {
                    assert!(lift(&h, &p.map).unwrap().is_some());
                }
            }
        }
    }

    #[test]
    fn projective_spec_gives_projective_resolutions() {
        for name in fixtures::NAMES {
            let a = alg(name);
            let subcat = Subcategory::projectives(&a);
            for m in fixtures::standard_modules(&a) {
                let r = proper_resolution(&subcat, &m, 3).unwrap();
                assert!(r.proper() && r.strong(), "{name}");
                let min = min_resolution(&m, 3);
                for (x, y) in r.complex.terms.iter().zip(&min.terms) {
                    assert_eq!(x.dims(), y.dims());
                }
            }
        }
    }

    #[test]
    fn module_in_add_has_length_zero_resolution() {
        let a = alg("A3rad2");
        let subcat = Subcategory::injectives(&a);
        let i2 = Representation::injective(&a, 1);
        let r = proper_resolution(&subcat, &i2, 2).unwrap();
        assert!(r.complex.augmentation.is_iso());
        assert!(r.complex.terms[1..].iter().all(|t| t.is_zero()));
        // S(2) over A3rad2 has no injective precover onto it.
        assert!(proper_resolution(&subcat, &Representation::simple(&a, 1), 2).is_err());
    }

    #[test]
    fn selfinjective_proj_inj_resolution_is_strong() {
        let x = alg("kxx2");
        let subcat = Subcategory::proj_inj(&x);
        let k = Representation::simple(&x, 0);
        let r = proper_resolution(&subcat, &k, 3).unwrap();
        assert!(r.proper());
        assert!(r.strong());
        let calc = crate::resolve::ExtCalculator::new(&subcat.generators[0], 1);
        for w in &r.witnesses[1..] {
            let st = r.complex.stages().unwrap();
            assert_eq!(w.ext1[0], calc.ext(&st[w.stage].object, 1).unwrap());
        }
    }

    #[test]
    fn coresolution_by_injectives_is_minimal_one() {
        let a = alg("A3rad2");
        let subcat = Subcategory::injectives(&a);
        for m in fixtures::standard_modules(&a) {
            let c = proper_coresolution(&subcat, &m, 3).unwrap();
            assert!(c.proper() && c.strong());
            let min = crate::resolve::min_coresolution(&m, 3);
            for (x, y) in c.complex.terms.iter().zip(&min.terms) {
                assert_eq!(x.dims(), y.dims());
            }
        }
    }

    #[test]
    fn glue_first_on_a2() {
        let a = alg("kA2");
        let ses = a2_sequence(&a);
        let subcat = Subcategory::projectives(&a);
        let r0 = proper_resolution(&subcat, ses.middle(), 3).unwrap();
        let r1 = proper_resolution(&subcat, ses.right(), 3).unwrap();
        let g = glue_first(&ses, &r0, &r1).unwrap();
        assert!(g.result.complex.is_exact());
        assert!(g.shape_matches());
        assert!(g.result.strong());
        assert!(splitting_section(g.bridge.as_ref().unwrap()).unwrap().is_some());
        // S(2) = P(2), and degree 0 is C = P(2) itself.
        assert_eq!(g.result.complex.terms[0].dims(), &[0, 1]);
    }

    #[test]
    fn glue_last_res_on_a2() {
        let a = alg("kA2");
        let ses = a2_sequence(&a);
        let subcat = Subcategory::projectives(&a);
        let r0 = proper_resolution(&subcat, ses.middle(), 2).unwrap();
        let r1 = proper_resolution(&subcat, ses.left(), 1).unwrap();
        let g = glue_last_res(&ses, &r0, &r1).unwrap();
        assert!(g.result.complex.is_exact());
        assert!(g.shape_matches());
        let euler = |c: &AugmentedComplex| -> i64 {
            c.terms.iter().enumerate().map(|(i, t)| if i % 2 == 0 { t.total_dim() as i64 } else { -(t.total_dim() as i64) }).sum()
        };
        assert_eq!(euler(&g.result.complex), euler(&min_resolution(ses.right(), 2)));
    }

    #[test]
    fn glue_cores_on_a2() {
        let a = alg("kA2");
        let ses = a2_sequence(&a);
        let subcat = Subcategory::injectives(&a);
        let c0 = proper_coresolution(&subcat, ses.middle(), 3).unwrap();
        let c1 = proper_coresolution(&subcat, ses.left(), 3).unwrap();
        let g = glue_last_cores(&ses, &c0, &c1).unwrap();
        assert!(g.result.complex.is_exact());
        assert!(g.shape_matches());
        assert!(splitting_retraction(g.bridge.as_ref().unwrap()).unwrap().is_some());
        let c2 = proper_coresolution(&subcat, ses.right(), 2).unwrap();
        let h = glue_first_cores(&ses, &c0, &c2).unwrap();
        assert!(h.result.complex.is_exact());
        assert!(h.shape_matches());
        assert!(h.result.complex.terms.iter().all(crate::resolve::is_injective));
    }

    #[test]
    fn degenerate_sequences_reproduce_inputs() {
        let a = alg("A3rad2");
        let subcat = Subcategory::projectives(&a);
        let m = Representation::simple(&a, 0);
        let z = Representation::zero(&a);
        let ses = ShortExactSequence::new(Morphism::identity(&m), Morphism::zero(&m, &z)).unwrap();
        let r0 = proper_resolution(&subcat, &m, 3).unwrap();
        let r1 = proper_resolution(&subcat, &z, 3).unwrap();
        let g = glue_first(&ses, &r0, &r1).unwrap();
        for (x, y) in g.result.complex.terms.iter().zip(&r0.complex.terms) {
            assert_eq!(x.dims(), y.dims());
        }
    }

    #[test]
    fn iterated_injective_coresolution() {
        // 0 → S(2) → P(1) → I(1) → 0 over kA2, folded as a length-1 chain
        // 0 → S(2) → P(1) → I(1).
        let a = alg("kA2");
        let ses = a2_sequence(&a);
        let subcat = Subcategory::injectives(&a);
        let c0 = proper_coresolution(&subcat, ses.middle(), 2).unwrap();
        let c1 = proper_coresolution(&subcat, ses.right(), 1).unwrap();
        let it = iterate_glue(GlueKind::FirstCores, &[ses.f.clone(), ses.g.clone()], &[c0, c1]).unwrap();
        assert!(it.result.complex.is_exact());
        assert_eq!(it.steps.len(), 1);
        assert!(iterate_glue(GlueKind::FirstCores, std::slice::from_ref(&ses.f), &[]).is_err());
    }

    #[test]
    fn closure_checks() {
        let a = alg("A3rad2");
        let r = closure_spot_check(&Subcategory::projectives(&a), false, 10, 1).unwrap();
        assert_eq!(r.failures, 0);
        let i = closure_spot_check(&Subcategory::injectives(&a), true, 10, 1).unwrap();
        assert_eq!(i.failures, 0);
    }
}
