//! Row reduction, kernels and solving over GF(5).

use homoglue::linalg::{Matrix, PrimeField};

fn main() {
    let f = PrimeField::new(5).unwrap();
    let a = Matrix::from_rows(f, &[vec![1, 2, 3], vec![2, 4, 1], vec![0, 0, 4]]);
    println!("rank {}", a.rank());
    let k = a.kernel_basis();
    println!("kernel has {} basis vectors; A*K zero: {}", k.cols(), a.mul(&k).is_zero());
    let b = Matrix::from_rows(f, &[vec![1], vec![2], vec![0]]);
    match a.solve(&b).unwrap() {
        Some(x) => println!("A x = b solved, x = {:?}", x.data()),
        None => println!("no solution"),
    }
    let sq = Matrix::from_rows(f, &[vec![2, 1], vec![1, 1]]);
    let inv = sq.inverse().unwrap();
    println!("inverse check: {}", sq.mul(&inv) == Matrix::identity(f, 2));
}
