//! Glue projective resolutions of the middle and right terms of a random
//! short exact sequence into a resolution of the left term.

use homoglue::fixtures::{algebra, random_ses};
use homoglue::glue::{glue_first, proper_resolution, Subcategory};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let alg = algebra("kA3").unwrap();
    let subcat = Subcategory::projectives(&alg);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let ses = random_ses(&alg, &mut rng, 4);
    println!("0 -> {:?} -> {:?} -> {:?} -> 0", ses.left().dims(), ses.middle().dims(), ses.right().dims());
    let middle = proper_resolution(&subcat, ses.middle(), 3).unwrap();
    let right = proper_resolution(&subcat, ses.right(), 3).unwrap();
    let g = glue_first(&ses, &middle, &right).unwrap();
    let terms: Vec<_> = g.result.complex.terms.iter().map(|t| t.dims().to_vec()).collect();
    println!("glued terms {:?}", terms);
    println!("flags {:?}", g.result.flags);
    println!("shape as predicted: {}, inherited flags: {}", g.shape_matches(), g.inheritance_holds());
    if let Some(b) = &g.bridge {
        println!("bridge 0 -> {:?} -> {:?} -> {:?} -> 0", b.left().dims(), b.middle().dims(), b.right().dims());
    }
}
