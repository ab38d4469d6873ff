//! Exact CS and BF partition functions of a few manifolds, including the
//! BF closed form and connected-sum multiplicativity.
//!
//!     cargo run --example partition_functions [k]

use heegaard_cs::{homology_profile, z_bf, z_bf_closed_form, z_cs, GluingData};

fn main() {
    let k: u64 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(2);
    let lens = |p, q| GluingData::lens(p, q).unwrap();
    let manifolds = [
        ("S3", GluingData::sphere()),
        ("S1xS2", GluingData::s1_x_s2()),
        ("L(5,2)", lens(5, 2)),
        ("L(6,1)", lens(6, 1)),
        ("L(3,1) # L(3,1)", lens(3, 1).connected_sum(&lens(3, 1))),
        (
            "L(8,3) # S1xS2",
            lens(8, 3).connected_sum(&GluingData::s1_x_s2()),
        ),
        (
            "random genus 3",
            GluingData::random_splitting(3, 7, 24).unwrap(),
        ),
    ];
    for (name, g) in &manifolds {
        let h = homology_profile(g);
        let cs = z_cs(g, k);
        let bf = z_bf(g, k);
        println!("{name} (b1 = {}, |T| = {})", h.b1, h.torsion_order);
        println!("  Z_CS = {cs}  ~ {:.9}", cs.eval_numeric());
        println!(
            "  Z_BF ~ {:.9}  closed form {}",
            bf.eval_numeric(),
            z_bf_closed_form(g, k).unwrap()
        );
    }

    let (a, b) = (lens(5, 2), lens(7, 3));
    let product = z_cs(&a, k).product(&z_cs(&b, k));
    println!(
        "Z(L(5,2) # L(7,3)) == Z(L(5,2)) Z(L(7,3)): {}",
        z_cs(&a.connected_sum(&b), k) == product
    );
}
