//! Lens spaces L(p, q) as genus-1 gluing data, their homology and the
//! Chern-Simons partition function compared with the quadratic Gauss sum.
//!
//!     cargo run --example lens_spaces [p q k]

use heegaard_cs::{gauss_sum_oracle, homology_profile, z_cs, GluingData};

fn main() {
    let args: Vec<i64> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let (p, q, k) = match args.as_slice() {
        [p, q, k] => (*p, *q, *k as u64),
        _ => (7, 2, 1),
    };
    let g = GluingData::lens(p, q).expect("p and q must be coprime");
    println!("L({p},{q}): M = {}", g.gluing_matrix());
    let h = homology_profile(&g);
    println!("b1 = {}, torsion order = {}", h.b1, h.torsion_order);

    let z = z_cs(&g, k);
    println!("Z_CS(k={k}) = {z}");
    println!("numeric      = {:.12}", z.eval_numeric());
    if p > 0 {
        println!("Gauss sum    = {:.12}", gauss_sum_oracle(p as u64, q, k));
    }

    for (name, m) in [
        ("S3", GluingData::sphere()),
        ("S1xS2", GluingData::s1_x_s2()),
    ] {
        println!("{name}: Z_CS(k={k}) = {}", z_cs(&m, k));
    }
}
