//! Left and right approximation sequences of a simple module, and the
//! ladder of maps between their levels.

use homoglue::approx::{ladder, presentation, test_modules, PresentationKind};
use homoglue::fixtures::algebra;
use homoglue::quiver::Representation;

fn main() {
    let alg = algebra("A3rad2").unwrap();
    let tests = test_modules(&alg);
    let s = Representation::simple(&alg, 0);
    for kind in [PresentationKind::LeftInj, PresentationKind::RightG] {
        for i in 1..=2 {
            let p = presentation(kind, &s, i, 0, 6, &tests).unwrap();
            let q = &p.sequence;
            println!(
                "{} i={}: 0 -> {:?} -> {:?} -> {:?} -> 0, certified {}",
                kind.name(),
                i,
                q.left().dims(),
                q.middle().dims(),
                q.right().dims(),
                p.certified()
            );
        }
        let l = ladder(kind, &s, 2, 0, 6, 1).unwrap();
        println!("  ladder to level 2 holds: {}", l.holds());
    }
}
