mod common;

use common::*;
use heegaard_cs::exact::rational;
use heegaard_cs::{
    gauss_sum_oracle, homology_profile, linking_form, z_bf, z_bf_closed_form, z_cs, GluingData,
    PhaseQ, PhaseSum, TorsionRep,
};
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::ToPrimitive;

fn lens(p: i64, q: i64) -> GluingData {
    GluingData::lens(p, q).unwrap()
}

#[test]
fn lens_linking_law() {
    for p in 2..=12i64 {
        for q in (1 - p)..p {
            if p.gcd(&q) != 1 {
                continue;
            }
            let g = lens(p, q);
            for a in 0..p {
                for b in 0..p {
                    let theta = TorsionRep {
                        theta: vec![rational(a, p)],
                    };
                    let vartheta = TorsionRep {
                        theta: vec![rational(b, p)],
                    };
                    let got = linking_form(&g, &theta, &vartheta).unwrap();
                    assert_eq!(
                        got,
                        PhaseQ::from_ratio(q * a * b, p),
                        "lens({p},{q}) a={a} b={b}"
                    );
                }
            }
        }
    }
}

#[test]
fn z_cs_matches_explicit_representatives() {
    for g in nonsingular_corpus(60, 400) {
        for k in 1..=4u64 {
            let fast = z_cs(&g, k).eval_numeric();
            let slow = brute_z_cs(&g, k as i128);
            assert!(close(fast, slow, 1e-8), "{g:?} k={k}: {fast} vs {slow}");
        }
    }
}

#[test]
fn z_bf_matches_explicit_double_sum() {
    for g in nonsingular_corpus(40, 120) {
        for k in 1..=3u64 {
            let fast = z_bf(&g, k).eval_numeric();
            let slow = brute_z_bf(&g, k as i128);
            assert!(close(fast, slow, 1e-7), "{g:?} k={k}: {fast} vs {slow}");
        }
    }
}

#[test]
fn torsion_counts_match_determinant() {
    let corpus = nonsingular_corpus(60, 400);
    assert!(
        corpus
            .iter()
            .filter(|g| g.genus() > 1 && det_abs(&blocks(g)[1]) > 4)
            .count()
            >= 5
    );
    for g in corpus {
        let [_, p, _, _] = blocks(&g);
        assert_eq!(
            homology_profile(&g).torsion_order.to_u64().unwrap(),
            det_abs(&p)
        );
        assert_eq!(torsion_reps_nonsingular(&p).len() as u64, det_abs(&p));
    }
}

#[test]
fn documented_values() {
    // 1 + 2e^{−2πi·2/5} + 2e^{−2πi·3/5}: a² = 0,1,4,4,1 times q = 2 gives 0,2/5,3/5,3/5,2/5
    let mut expected = PhaseSum::new();
    expected.insert(PhaseQ::zero(), 1);
    expected.insert(PhaseQ::from_ratio(3, 5), 2);
    expected.insert(PhaseQ::from_ratio(2, 5), 2);
    assert_eq!(z_cs(&lens(5, 2), 1), expected);

    let z = z_cs(&lens(4, 1), 1);
    assert_eq!(z.multiplicity(&PhaseQ::zero()), 2);
    assert_eq!(z.multiplicity(&PhaseQ::from_ratio(3, 4)), 2);
    assert!(close(z.eval_numeric(), Complex64::new(2.0, -2.0), 1e-12));

    assert!(close(
        gauss_sum_oracle(5, 1, 1),
        Complex64::new(5f64.sqrt(), 0.0),
        1e-12
    ));
    assert!(close(
        gauss_sum_oracle(2, 1, 1),
        Complex64::new(0.0, 0.0),
        1e-12
    ));
    assert!(close(
        gauss_sum_oracle(1, 0, 3),
        Complex64::new(1.0, 0.0),
        1e-12
    ));

    assert_eq!(z_bf_closed_form(&lens(6, 1), 2).unwrap(), 12.into());
    assert!(close(
        z_bf(&lens(6, 1), 2).eval_numeric(),
        Complex64::new(12.0, 0.0),
        1e-9
    ));
    assert!(close(
        z_bf(&lens(7, 3), 7).eval_numeric(),
        Complex64::new(49.0, 0.0),
        1e-9
    ));
}

#[test]
fn connected_sums_multiply_exactly() {
    let corpus = nonsingular_corpus(12, 60);
    for a in &corpus {
        for b in corpus.iter().take(4) {
            let sum = a.connected_sum(b);
            assert_eq!(z_cs(&sum, 3), z_cs(a, 3).product(&z_cs(b, 3)));
            assert_eq!(z_bf(&sum, 2), z_bf(a, 2).product(&z_bf(b, 2)));
        }
    }
}

#[test]
fn free_part_does_not_change_torsion_sums() {
    let g = lens(9, 4).connected_sum(&GluingData::s1_x_s2());
    assert_eq!(homology_profile(&g).b1, 1);
    for k in 1..=5 {
        assert_eq!(z_cs(&g, k), z_cs(&lens(9, 4), k));
        assert_eq!(z_bf(&g, k), z_bf(&lens(9, 4), k));
    }
}
