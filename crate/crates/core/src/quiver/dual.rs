//! Vector-space duality `D = Hom_k(−, k)` between left and right modules.

use super::morphism::{Morphism, ShortExactSequence};
use super::rep::Representation;

/// `D(M)` over the opposite algebra: same dimensions, transposed arrow maps.
pub fn dual(m: &Representation) -> Representation {
    let op = m.algebra().opposite();
    let maps = m.maps().iter().map(|a| a.transpose()).collect();
    Representation::from_parts(&op, m.dims().to_vec(), maps)
}

/// `D(f): D(N) → D(M)` for `f: M → N`.
pub fn dual_morphism(f: &Morphism) -> Morphism {
    dual_morphism_between(f, &dual(f.target()), &dual(f.source()))
}

/// `D(f)` with caller-supplied duals of the endpoints (avoids rebuilding them).
pub fn dual_morphism_between(f: &Morphism, d_target: &Representation, d_source: &Representation) -> Morphism {
    let blocks = f.blocks().iter().map(|b| b.transpose()).collect();
    Morphism::from_blocks(d_target, d_source, blocks)
}

/// `0 → D(C) → D(B) → D(A) → 0` from `0 → A → B → C → 0`.
pub fn dual_ses(s: &ShortExactSequence) -> ShortExactSequence {
    let (da, db, dc) = (dual(s.left()), dual(s.middle()), dual(s.right()));
    ShortExactSequence {
        f: dual_morphism_between(&s.g, &dc, &db),
        g: dual_morphism_between(&s.f, &db, &da),
    }
}

/// The evaluation map `M → D(D(M))`, which is the identity in these bases.
pub fn evaluation(m: &Representation) -> Morphism {
    let dd = dual(&dual(m));
    Morphism::identity(m).retarget(m, &dd)
}
