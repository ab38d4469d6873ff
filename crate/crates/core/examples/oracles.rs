//! The three numeric cross-checks: quadratic Gauss sums for lens spaces, the
//! BF closed form, and the free-mode grid average for manifolds with b1 > 0.
//!
//!     cargo run --example oracles

use heegaard_cs::{
    admissible_grid, free_curvature_pairing, free_mode_grid_oracle, gauss_sum_oracle, z_bf,
    z_bf_closed_form, z_cs, GluingData,
};

fn main() {
    let k = 2;
    let lens = GluingData::lens(11, 3).unwrap();
    let z = z_cs(&lens, k).eval_numeric();
    let gauss = gauss_sum_oracle(11, 3, k);
    println!(
        "L(11,3): Z_CS = {z:.12}, Gauss sum = {gauss:.12}, |diff| = {:.1e}",
        (z - gauss).norm()
    );
    println!(
        "L(11,3): Z_BF ~ {:.9}, closed form = {}",
        z_bf(&lens, k).eval_numeric(),
        z_bf_closed_form(&lens, k).unwrap()
    );

    let window = 2;
    let free = lens.connected_sum(&GluingData::s1_x_s2());
    let n = admissible_grid(&free, k, window);
    let grid = free_mode_grid_oracle(&free, k, n, window).unwrap();
    println!(
        "L(11,3) # S1xS2: grid({n}) = {grid:.9}, Z_CS = {:.9}",
        z_cs(&free, k).eval_numeric()
    );

    // Free modes and curvature labels paired degenerately: the grid average no
    // longer collapses the label sum to m = 0.
    let odd = GluingData::random_splitting(2, 361, 8).unwrap();
    let n = admissible_grid(&odd, k, window);
    println!(
        "random genus 2 (pairing {}): grid({n}) = {:.9}, Z_CS = {:.9}",
        free_curvature_pairing(&odd),
        free_mode_grid_oracle(&odd, k, n, window).unwrap(),
        z_cs(&odd, k).eval_numeric()
    );
}
