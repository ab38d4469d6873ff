//! Torsion linking form of a connected sum of lens spaces: generators, Gram
//! matrix and a few explicit evaluations.
//!
//!     cargo run --example linking_form

use heegaard_cs::exact::format_rational;
use heegaard_cs::{is_nondegenerate, linking_form, linking_matrix, GluingData, TorsionGroup};

fn main() {
    let g = GluingData::lens(4, 1)
        .unwrap()
        .connected_sum(&GluingData::lens(6, 5).unwrap());
    let lm = linking_matrix(&g);
    println!("orders: {:?}", lm.orders);
    for (i, gen) in lm.generators.iter().enumerate() {
        let theta: Vec<String> = gen.theta.iter().map(format_rational).collect();
        let row: Vec<String> = lm.gram[i].iter().map(ToString::to_string).collect();
        println!(
            "generator {i}: theta = ({})  gram row = [{}]",
            theta.join(", "),
            row.join(", ")
        );
    }
    println!(
        "symmetric: {}, nondegenerate: {}",
        lm.is_symmetric(),
        is_nondegenerate(&g)
    );

    let group = TorsionGroup::new(&g);
    let a = group.element(&[1, 1]);
    let b = group.element(&[0, 5]);
    println!("Gamma(a, b) = {}", linking_form(&g, &a, &b).unwrap());
    println!("Gamma(a, a) = {}", linking_form(&g, &a, &a).unwrap());
}
