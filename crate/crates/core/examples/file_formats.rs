//! Writing and reading algebras, modules and sequences in the text formats
//! the command line accepts.

use homoglue::cli::files::{emit_algebra, emit_module, emit_ses, parse_algebra, parse_module, parse_ses};
use homoglue::fixtures::{algebra, random_ses};
use homoglue::quiver::Representation;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let alg = algebra("A3rad2").unwrap();
    let text = emit_algebra(&alg);
    print!("{}", text);
    let back = parse_algebra(&text, "copy").unwrap();
    let p1 = Representation::projective(&back, 0);
    let m = emit_module(&p1);
    print!("{}", m);
    println!("module round trip: {}", parse_module(&m, &back).unwrap() == p1);
    let ses = random_ses(&back, &mut ChaCha8Rng::seed_from_u64(2), 3);
    let s = emit_ses(&ses);
    println!("sequence round trip: {}", parse_ses(&s, &back).unwrap().middle() == ses.middle());
    match parse_algebra("field 3\nvertices 2\narrow a 1 3\n", "bad") {
        Err(e) => println!("rejected: {}", e),
        Ok(_) => println!("unexpectedly accepted"),
    }
}
