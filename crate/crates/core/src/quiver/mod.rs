//! Bound quiver algebras, their representations and morphisms, and the
//! categorical constructions used by the diagram chases.

pub mod algebra;
pub mod construct;
pub mod dual;
pub mod hom;
pub mod morphism;
pub mod rep;

pub use algebra::{Algebra, Arrow, Path, Quiver, Relation, Side};
pub use construct::{
    cokernel, column_map, diagonal_map, direct_sum, factor_through_epi, factor_through_mono, image, kernel, pullback,
    pushout, quotient, row_map, subrepresentation, DirectSum, Pullback, Pushout,
};
pub use dual::{dual, dual_morphism, dual_morphism_between, dual_ses, evaluation};
pub use hom::{extend, find_isomorphism, hom_basis, hom_dim, lift, random_morphism, span_rank, HomSpace};
pub use morphism::{is_exact_at, Morphism, ShortExactSequence};
pub use rep::Representation;

use crate::error::{Error, Result};

/// `α′ = (f∘α, h): C ⊕ C″ → A′` from the horseshoe square, given a lift `h`
/// of `α″` along `g`. Returns the direct sum together with `α′`.
pub fn horseshoe_fill(
    ses: &ShortExactSequence,
    alpha: &Morphism,
    alpha2: &Morphism,
    h: &Morphism,
) -> Result<(DirectSum, Morphism)> {
    if ses.g.compose(h) != *alpha2 {
        return Err(Error::Precondition("horseshoe: g∘h differs from α″".into()));
    }
    let alg = ses.middle().algebra();
    let sum = direct_sum(alg, &[alpha.source().clone(), alpha2.source().clone()]);
    let fa = ses.f.compose(alpha);
    let a1 = row_map(&sum, ses.middle(), &[&fa, h]);
    // Left square: α′ ∘ ι = f ∘ α. Right square: g ∘ α′ = α″ ∘ π.
    debug_assert!(a1.compose(&sum.injections[0]) == fa);
    debug_assert!(ses.g.compose(&a1) == alpha2.compose(&sum.projections[1]));
    Ok((sum, a1))
}

/// `β′ = (k; β″∘g): A′ → D ⊕ D″`, given an extension `k` of `β` along `f`.
pub fn cohorseshoe_fill(
    ses: &ShortExactSequence,
    beta: &Morphism,
    beta2: &Morphism,
    k: &Morphism,
) -> Result<(DirectSum, Morphism)> {
    if k.compose(&ses.f) != *beta {
        return Err(Error::Precondition("co-horseshoe: k∘f differs from β".into()));
    }
    let alg = ses.middle().algebra();
    let sum = direct_sum(alg, &[beta.target().clone(), beta2.target().clone()]);
    let bg = beta2.compose(&ses.g);
    let b1 = column_map(ses.middle(), &sum, &[k, &bg]);
    debug_assert!(sum.projections[0].compose(&b1) == *k);
    debug_assert!(b1.compose(&ses.f) == sum.injections[0].compose(beta));
    Ok((sum, b1))
}
