//! Seeded random Heegaard splittings: validation, homology and the
//! determinant sign of the gluing matrix.
//!
//!     cargo run --example random_splittings [genus] [count]

use heegaard_cs::{anti_symplectic_check, homology_profile, is_nondegenerate, GluingData};

fn main() {
    let mut args = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse::<usize>().ok());
    let genus = args.next().unwrap_or(2);
    let count = args.next().unwrap_or(8) as u64;
    for seed in 0..count {
        let g = GluingData::random_splitting(genus, seed, 12).unwrap();
        let h = homology_profile(&g);
        let factors: Vec<String> = h
            .invariant_factors
            .iter()
            .map(ToString::to_string)
            .collect();
        println!(
            "seed {seed}: det M = {:>2}, anti-symplectic = {}, b1 = {}, torsion = [{}], nondegenerate = {}",
            g.determinant(),
            anti_symplectic_check(g.r(), g.p(), g.s(), g.q()),
            h.b1,
            factors.join(", "),
            is_nondegenerate(&g)
        );
    }
    let g = GluingData::random_splitting(genus, 0, 12).unwrap();
    println!(
        "stabilized genus {} keeps homology: {}",
        g.stabilize().genus(),
        homology_profile(&g.stabilize()).invariant_factors
            == homology_profile(&g).invariant_factors
    );
}
