//! The Auslander condition on each fixture, and the equivalent conditions
//! checked on a sample.

use homoglue::auscond::{equivalence_battery, ring_auslander};
use homoglue::fixtures::{algebra, default_sample, DEFAULT_SAMPLE_SIZE, NAMES};

fn main() {
    for name in NAMES {
        let alg = algebra(name).unwrap();
        let v = ring_auslander(&alg, 4, 6);
        println!("{}: {} ({})", name, v.verdict(), v.explanation());
    }
    let alg = algebra("kron2").unwrap();
    let b = equivalence_battery(&alg, 4, 6, &default_sample(&alg, DEFAULT_SAMPLE_SIZE, 0));
    for c in &b.conditions {
        println!("  {} ({}): {}{}", c.side, c.index, c.verdict, c.failures.first().map(|f| format!(", e.g. {}", f)).unwrap_or_default());
    }
    println!("alarms: {}", b.alarms.len());
}
