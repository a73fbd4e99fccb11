//! Minimal resolutions, homological dimensions and Ext over A3 with rad² = 0.

use homoglue::fixtures::algebra;
use homoglue::quiver::Representation;
use homoglue::resolve::{ext, gldim, id_value, min_coresolution, min_resolution, pd_value};

fn main() {
    let alg = algebra("A3rad2").unwrap();
    for v in 0..alg.vertex_count() {
        let s = Representation::simple(&alg, v);
        let res = min_resolution(&s, 4);
        let cores = min_coresolution(&s, 4);
        let terms: Vec<_> = res.terms.iter().map(|t| t.dims().to_vec()).collect();
        println!("S({}): P terms {:?}, pd {}, id {}, exact {}", v + 1, terms, pd_value(&s, 8), id_value(&s, 8), res.is_exact() && cores.is_exact());
    }
    let s1 = Representation::simple(&alg, 0);
    let s3 = Representation::simple(&alg, 2);
    for i in 0..3 {
        println!("dim Ext^{}(S1, S3) = {}", i, ext(&s1, &s3, i).unwrap());
    }
    println!("gldim {}", gldim(&alg, 8));
}
