//! The built-in test algebras, their standard and random modules, and the
//! expected fact tables the engine must regenerate.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::auscond::ring_auslander;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, PrimeField};
use crate::quiver::{
    cokernel, direct_sum, find_isomorphism, image, kernel, random_morphism, Algebra, Arrow, Morphism, Quiver,
    Representation, ShortExactSequence,
};
use crate::resolve::{gldim, id_value, pd_value, radical, socle, HomDim};

pub const NAMES: [&str; 5] = ["kA2", "kA3", "A3rad2", "kxx2", "kron2"];

pub const DEFAULT_PRIME: u32 = 5;

fn arrow(id: &str, s: usize, t: usize) -> Arrow {
    Arrow { id: id.to_string(), source: s, target: t }
}

fn word(ids: &[&str]) -> Vec<String> {
    ids.iter().map(|s| s.to_string()).collect()
}

pub fn algebra(name: &str) -> Result<Algebra> {
    algebra_over(name, DEFAULT_PRIME)
}

pub fn algebra_over(name: &str, p: u32) -> Result<Algebra> {
    let f = PrimeField::new(p)?;
    let (n, arrows, rels) = match name {
        "kA2" => (2, vec![arrow("a", 0, 1)], vec![]),
        "kA3" => (3, vec![arrow("a", 0, 1), arrow("b", 1, 2)], vec![]),
        "A3rad2" => (3, vec![arrow("a", 0, 1), arrow("b", 1, 2)], vec![vec![(1, word(&["a", "b"]))]]),
        "kxx2" => (1, vec![arrow("x", 0, 0)], vec![vec![(1, word(&["x", "x"]))]]),
        "kron2" => (2, vec![arrow("a", 0, 1), arrow("b", 0, 1)], vec![]),
        _ => return Err(Error::UnknownFixture(name.to_string())),
    };
    Algebra::new(name, f, Quiver::new(n, arrows)?, rels)
}

/// The indecomposable `[i, j]` over a linearly oriented `A_n` quiver.
fn interval(alg: &Algebra, i: usize, j: usize) -> Representation {
    let f = alg.field;
    let n = alg.vertex_count();
    let dims: Vec<usize> = (0..n).map(|v| usize::from(v >= i && v <= j)).collect();
    let maps = alg
        .arrows()
        .iter()
        .map(|a| {
            let mut m = Matrix::zeros(f, dims[a.target], dims[a.source]);
            if dims[a.target] == 1 && dims[a.source] == 1 {
                m.set(0, 0, 1);
            }
            m
        })
        .collect();
    Representation::new(alg, dims, maps).expect("interval module")
}

/// All indecomposables up to isomorphism, for the fixtures of finite type.
pub fn indecomposables(alg: &Algebra) -> Option<Vec<Representation>> {
    let base = alg.name().trim_end_matches("^op").to_string();
    let n = alg.vertex_count();
    match base.as_str() {
        "kA2" | "kA3" => {
            if alg.side() == crate::quiver::Side::Opposite {
                return Some(opposite_intervals(alg, n, usize::MAX));
            }
            let mut out = Vec::new();
            for len in (1..=n).rev() {
                for i in 0..=n - len {
                    out.push(interval(alg, i, i + len - 1));
                }
            }
            Some(out)
        }
        "A3rad2" => {
            if alg.side() == crate::quiver::Side::Opposite {
                return Some(opposite_intervals(alg, n, 2));
            }
            Some(vec![
                interval(alg, 0, 1),
                interval(alg, 1, 2),
                interval(alg, 0, 0),
                interval(alg, 1, 1),
                interval(alg, 2, 2),
            ])
        }
        "kxx2" => Some(vec![Representation::regular(alg), Representation::simple(alg, 0)]),
        _ => None,
    }
}

fn opposite_intervals(alg: &Algebra, n: usize, max_len: usize) -> Vec<Representation> {
    let given = alg.opposite();
    let mut out = Vec::new();
    for len in (1..=n.min(max_len)).rev() {
        for i in 0..=n - len {
            out.push(crate::quiver::dual(&interval(&given, i, i + len - 1)));
        }
    }
    out
}

/// Simples, indecomposable projectives and injectives, radicals of the
/// projectives and quotients of the injectives by their socles, without
/// repeats (isomorphism tested with a seeded search).
pub fn standard_modules(alg: &Algebra) -> Vec<Representation> {
    let n = alg.vertex_count();
    let mut cands = Vec::new();
    for v in 0..n {
        cands.push(Representation::simple(alg, v));
    }
    for v in 0..n {
        cands.push(Representation::projective(alg, v));
    }
    for v in 0..n {
        cands.push(Representation::injective(alg, v));
    }
    for v in 0..n {
        cands.push(radical(&Representation::projective(alg, v)).0);
    }
    for v in 0..n {
        let i = Representation::injective(alg, v);
        let (_, s) = socle(&i);
        cands.push(cokernel(&s).0);
    }
    dedupe(cands)
}

pub fn dedupe(cands: Vec<Representation>) -> Vec<Representation> {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut out: Vec<Representation> = Vec::new();
    for c in cands {
        if c.is_zero() {
            continue;
        }
        if !out.iter().any(|o| find_isomorphism(o, &c, 64, &mut rng).is_some()) {
            out.push(c);
        }
    }
    out
}

/// A random module of dimension at most `max_dim` per vertex: a cokernel,
/// image or kernel of a random map between small sums of indecomposable
/// projectives and injectives.
pub fn random_module<R: Rng>(alg: &Algebra, rng: &mut R, max_dim: usize) -> Representation {
    let n = alg.vertex_count();
    for _ in 0..32 {
        let pick = |rng: &mut R, inj: bool, count: usize| -> Representation {
            let parts: Vec<Representation> = (0..count)
                .map(|_| {
                    let v = rng.gen_range(0..n);
                    if inj {
                        Representation::injective(alg, v)
                    } else {
                        Representation::projective(alg, v)
                    }
                })
                .collect();
            direct_sum(alg, &parts).module
        };
        let kind = rng.gen_range(0..3);
        let (a, b) = match kind {
            0 => {
                let c1 = rng.gen_range(0..3);
                let c0 = rng.gen_range(1..3);
                (pick(rng, false, c1), pick(rng, false, c0))
            }
            1 => {
                let c1 = rng.gen_range(1..3);
                let c0 = rng.gen_range(1..3);
                (pick(rng, false, c1), pick(rng, true, c0))
            }
            _ => {
                let c1 = rng.gen_range(1..3);
                let c0 = rng.gen_range(0..3);
                (pick(rng, true, c1), pick(rng, true, c0))
            }
        };
        let f = random_morphism(&a, &b, rng).expect("same algebra");
        let m = match kind {
            0 => cokernel(&f).0,
            1 => image(&f).0,
            _ => kernel(&f).0,
        };
        if !m.is_zero() && m.dims().iter().all(|&d| d <= max_dim) {
            return m;
        }
    }
    Representation::simple(alg, rng.gen_range(0..n))
}

/// A random short exact sequence `0 → ker f → M → im f → 0` or
/// `0 → im f → N → coker f → 0` built from a random map `f: M → N`.
pub fn random_ses<R: Rng>(alg: &Algebra, rng: &mut R, max_dim: usize) -> ShortExactSequence {
    let m = random_module(alg, rng, max_dim);
    let n = random_module(alg, rng, max_dim);
    let f = random_morphism(&m, &n, rng).expect("same algebra");
    ses_from_map(&f, rng.gen_bool(0.5))
}

/// `0 → ker f → M → im f → 0` (`left = true`) or `0 → im f → N → coker f → 0`.
pub fn ses_from_map(f: &Morphism, left: bool) -> ShortExactSequence {
    let (_, incl, co) = image(f);
    if left {
        let (_, ki) = kernel(f);
        ShortExactSequence::new(ki, co).expect("kernel-image sequence is exact")
    } else {
        let (_, pi) = cokernel(f);
        ShortExactSequence::new(incl, pi).expect("image-cokernel sequence is exact")
    }
}

/// The standard modules followed by `random` seeded random modules.
pub fn default_sample(alg: &Algebra, random: usize, seed: u64) -> Vec<Representation> {
    let mut out = standard_modules(alg);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..random {
        out.push(random_module(alg, &mut rng, 4));
    }
    out
}

pub const DEFAULT_SAMPLE_SIZE: usize = 25;

/// `P(v)`, `I(v)` or `S(v)` (1-based, in that preference) when the module is isomorphic to one
/// of those, otherwise its dimension vector.
pub fn module_label(m: &Representation) -> String {
    let alg = m.algebra();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for v in 0..alg.vertex_count() {
        for (tag, cand) in [
            ("P", Representation::projective(alg, v)),
            ("I", Representation::injective(alg, v)),
            ("S", Representation::simple(alg, v)),
        ] {
            if cand.dims() == m.dims() && find_isomorphism(&cand, m, 64, &mut rng).is_some() {
                return format!("{}({})", tag, v + 1);
            }
        }
    }
    format!("M{:?}", m.dims())
}

/// Facts about a fixture that the engine recomputes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Truth {
    pub name: String,
    pub vertices: usize,
    pub dimension: usize,
    pub indecomposables: Option<usize>,
    pub gldim: HomDim,
    pub pd_simples: Vec<HomDim>,
    pub id_simples: Vec<HomDim>,
    pub id_regular: HomDim,
    pub id_regular_opposite: HomDim,
    pub self_injective: bool,
    pub auslander: bool,
}

/// Cutoff used for every dimension in the fact tables.
pub const TRUTH_CUTOFF: usize = 8;
/// Depth and cutoff of the Auslander verdict in the fact tables.
pub const TRUTH_AUSLANDER_DEPTH: usize = 4;

pub fn expected_truth(name: &str) -> Result<Truth> {
    use HomDim::{Exceeds, Finite};
    let c = TRUTH_CUTOFF;
    let t = |vertices, dimension, ind, gl, pd: Vec<HomDim>, id: Vec<HomDim>, idr, idro, si, aus| Truth {
        name: name.to_string(),
        vertices,
        dimension,
        indecomposables: ind,
        gldim: gl,
        pd_simples: pd,
        id_simples: id,
        id_regular: idr,
        id_regular_opposite: idro,
        self_injective: si,
        auslander: aus,
    };
    Ok(match name {
        "kA2" => t(2, 3, Some(3), Finite(1), vec![Finite(1), Finite(0)], vec![Finite(0), Finite(1)], Finite(1), Finite(1), false, true),
        "kA3" => t(
            3,
            6,
            Some(6),
            Finite(1),
            vec![Finite(1), Finite(1), Finite(0)],
            vec![Finite(0), Finite(1), Finite(1)],
            Finite(1),
            Finite(1),
            false,
            true,
        ),
        "A3rad2" => t(
            3,
            5,
            Some(5),
            Finite(2),
            vec![Finite(2), Finite(1), Finite(0)],
            vec![Finite(0), Finite(1), Finite(2)],
            Finite(2),
            Finite(2),
            false,
            true,
        ),
        "kxx2" => t(1, 2, Some(2), Exceeds(c), vec![Exceeds(c)], vec![Exceeds(c)], Finite(0), Finite(0), true, true),
        "kron2" => t(2, 4, None, Finite(1), vec![Finite(1), Finite(0)], vec![Finite(0), Finite(1)], Finite(1), Finite(1), false, false),
        _ => return Err(Error::UnknownFixture(name.to_string())),
    })
}

/// Recomputes every fact of the table with the engine.
pub fn compute_truth(alg: &Algebra) -> Truth {
    let c = TRUTH_CUTOFF;
    let n = alg.vertex_count();
    let simples: Vec<Representation> = (0..n).map(|v| Representation::simple(alg, v)).collect();
    let r = Representation::regular(alg);
    let rop = Representation::regular(&alg.opposite());
    let id_regular = id_value(&r, c);
    Truth {
        name: alg.name(),
        vertices: n,
        dimension: alg.dimension(),
        indecomposables: indecomposables(alg).map(|v| v.len()),
        gldim: gldim(alg, c),
        pd_simples: simples.iter().map(|s| pd_value(s, c)).collect(),
        id_simples: simples.iter().map(|s| id_value(s, c)).collect(),
        id_regular,
        id_regular_opposite: id_value(&rop, c),
        self_injective: id_regular == HomDim::Finite(0),
        auslander: ring_auslander(alg, TRUTH_AUSLANDER_DEPTH, TRUTH_AUSLANDER_DEPTH).holds(),
    }
}
