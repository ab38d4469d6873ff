//! CS and BF actions of finite Deligne-Beilinson skeleton classes, and their
//! invariance under zero modes.
//!
//!     cargo run --example db_actions

use heegaard_cs::exact::rational;
use heegaard_cs::{
    bf_action, bf_zero_mode_shift, cs_action, db_pair, zero_mode_shift, FiniteDBClass, GluingData,
    TorsionGroup,
};
use num_bigint::BigInt;

fn main() {
    // L(5,2) # S1xS2: one free direction and a Z_5 torsion factor
    let g = GluingData::lens(5, 2)
        .unwrap()
        .connected_sum(&GluingData::s1_x_s2());
    let torsion = TorsionGroup::new(&g);
    let k = 3;

    let a = FiniteDBClass::zero(2)
        .with_m(vec![BigInt::from(0), BigInt::from(2)])
        .with_theta_f(vec![rational(0, 1), rational(1, 7)])
        .with_theta_t(torsion.element(&[2]))
        .with_holonomy(vec![rational(1, 3), rational(-2, 5)])
        .with_smooth_self(rational(1, 4));
    let b = FiniteDBClass::zero(2)
        .with_theta_t(torsion.element(&[1]))
        .with_m(vec![BigInt::from(0), BigInt::from(-1)]);

    println!("S_CS(A)      = {}", cs_action(&g, &a, k).unwrap());
    let u = [BigInt::from(0), BigInt::from(5)];
    let shifted = zero_mode_shift(&g, &a, &u, k).unwrap();
    println!("S_CS(A + u/2k) = {}", cs_action(&g, &shifted, k).unwrap());

    let cross = rational(2, 9);
    println!("A * B        = {}", db_pair(&g, &a, &b, &cross).unwrap());
    println!(
        "S_BF(A, B)   = {}",
        bf_action(&g, &a, &b, k, &cross).unwrap()
    );
    let a_shift = bf_zero_mode_shift(&g, &a, &u, k).unwrap();
    println!(
        "S_BF(A + u/k, B) = {}",
        bf_action(&g, &a_shift, &b, k, &cross).unwrap()
    );
}
