//! Smith normal form of a small integer matrix, with the unimodular
//! transforms and the integer kernel.
//!
//!     cargo run --example smith_normal_form

use heegaard_cs::{integer_kernel, smith_normal_form, IntMatrix};

fn main() {
    let a = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]).unwrap();
    let snf = smith_normal_form(&a);
    println!("A = {a}");
    println!("D = {}", snf.d);
    println!("U = {}", snf.u);
    println!("V = {}", snf.v);
    assert_eq!(&(&snf.u * &snf.d) * &snf.v, a);

    let factors: Vec<String> = snf.diagonal().iter().map(ToString::to_string).collect();
    println!("invariant factors: {}", factors.join(", "));
    println!("det A = {}", a.determinant().unwrap());

    let singular = IntMatrix::from_rows(&[vec![1, 2, 3], vec![2, 4, 6]]).unwrap();
    println!("kernel of {singular}: {:?}", integer_kernel(&singular));
}
