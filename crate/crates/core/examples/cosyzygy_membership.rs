//! The least n with the n-th cosyzygy in G(n), the resulting approximation,
//! and the torsionfree comparison.

use homoglue::approx::{cosyzygy_membership, test_modules, torsionfree_check};
use homoglue::auscond::Tri;
use homoglue::fixtures::{algebra, default_sample, indecomposables, DEFAULT_SAMPLE_SIZE};

fn main() {
    let alg = algebra("A3rad2").unwrap();
    let tests = test_modules(&alg);
    for m in indecomposables(&alg).unwrap() {
        let c = cosyzygy_membership(&m, 4, &tests).unwrap();
        let cert = c.approximation.as_ref().map(|a| a.certified());
        println!("{}: n = {:?}, approximation certified {:?}", c.label, c.n, cert);
    }
    let r = torsionfree_check(&alg, 2, 6, &default_sample(&alg, DEFAULT_SAMPLE_SIZE, 0)).unwrap();
    let agree = r.rows.iter().filter(|x| x.gnm == Tri::from_bool(x.torsionfree)).count();
    println!("G_2(0) vs 2-torsionfree: {} of {} agree, alarms {}", agree, r.rows.len(), r.alarms.len());
}
