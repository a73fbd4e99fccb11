//! Auslander-Gorenstein and Auslander-regular verdicts with the Gorenstein
//! experiment, with bound 2.

use homoglue::approx::gorenstein_experiment;
use homoglue::auscond::{gorenstein_verdict, regular_verdict};
use homoglue::fixtures::{algebra, default_sample, DEFAULT_SAMPLE_SIZE};

fn main() {
    for name in ["kA2", "A3rad2", "kxx2"] {
        let alg = algebra(name).unwrap();
        let sample = default_sample(&alg, DEFAULT_SAMPLE_SIZE, 0);
        let g = gorenstein_verdict(&alg, 2, 6, &sample).unwrap();
        let r = regular_verdict(&alg, 2, 6, &sample).unwrap();
        println!("{}: Gorenstein {}, regular {}, gldim {}", name, g.ring, r.ring, r.gldim);
        let e = gorenstein_experiment(&alg, 6, &sample).unwrap();
        println!(
            "  uniform n {:?}, {} sample modules in G(0), {} projective, regular-consistent {}",
            e.uniform_n,
            e.g_class.len(),
            e.projectives.len(),
            e.regular_consistent
        );
    }
}
