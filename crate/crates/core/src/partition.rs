//! Normalized U(1) Chern–Simons and BF partition functions as exact phase sums,
//! together with the numeric oracles used to cross-check them.

use std::collections::BTreeMap;
use std::f64::consts::TAU;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::exact::{is_integral, IntMatrix, PhaseQ, RationalQ};
use crate::fields::{cs_action, FiniteDBClass};
use crate::homology::{curvature_lattice_basis, homology_profile, torsion_elements, TorsionGroup};
use crate::linking::{is_nondegenerate, linking_matrix_of, ModularGram};
use crate::splitting::GluingData;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("grid size {grid_n} must be positive and coprime to 2k·window = {modulus}")]
    GridNotCoprime { grid_n: u64, modulus: u64 },
    #[error("linking form is degenerate")]
    DegenerateLinkingForm,
    #[error("level k must be at least 1")]
    InvalidLevel,
}

/// `Σ multiplicity · e^{2πi·phase}`, kept as a multiset of phases in Q/Z.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PhaseSum {
    terms: BTreeMap<PhaseQ, u64>,
}

impl PhaseSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(phase: PhaseQ) -> Self {
        let mut s = Self::new();
        s.insert(phase, 1);
        s
    }

    pub fn insert(&mut self, phase: PhaseQ, multiplicity: u64) {
        if multiplicity > 0 {
            *self.terms.entry(phase).or_insert(0) += multiplicity;
        }
    }

    pub fn terms(&self) -> &BTreeMap<PhaseQ, u64> {
        &self.terms
    }

    pub fn multiplicity(&self, phase: &PhaseQ) -> u64 {
        self.terms.get(phase).copied().unwrap_or(0)
    }

    /// Number of terms counted with multiplicity.
    pub fn term_count(&self) -> u64 {
        self.terms.values().sum()
    }

    pub fn merge(&mut self, other: &PhaseSum) {
        for (phase, &mult) in &other.terms {
            self.insert(phase.clone(), mult);
        }
    }

    /// Multiplication by the unit `e^{2πi·phase}`.
    pub fn shifted(&self, phase: &PhaseQ) -> PhaseSum {
        let mut out = PhaseSum::new();
        for (p, &mult) in &self.terms {
            out.insert(p + phase, mult);
        }
        out
    }

    pub fn product(&self, other: &PhaseSum) -> PhaseSum {
        let mut out = PhaseSum::new();
        for (a, &ma) in &self.terms {
            for (b, &mb) in &other.terms {
                out.insert(a + b, ma * mb);
            }
        }
        out
    }

    /// Complex conjugate: every phase negated.
    pub fn conjugate(&self) -> PhaseSum {
        let mut out = PhaseSum::new();
        for (p, &mult) in &self.terms {
            out.insert(-p, mult);
        }
        out
    }

    /// Double-precision value, summed in ascending phase order.
    pub fn eval_numeric(&self) -> Complex64 {
        self.terms
            .iter()
            .fold(Complex64::new(0.0, 0.0), |acc, (phase, &mult)| {
                acc + unit_phase(phase) * mult as f64
            })
    }

    fn from_counts(modulus: u64, counts: &[u64]) -> PhaseSum {
        let mut out = PhaseSum::new();
        let n = BigInt::from(modulus);
        for (idx, &c) in counts.iter().enumerate() {
            out.insert(PhaseQ::new(RationalQ::new(BigInt::from(idx), n.clone())), c);
        }
        out
    }
}

/// `{phase: multiplicity, ...}` in ascending phase order.
impl std::fmt::Display for PhaseSum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(p, m)| format!("{p}: {m}"))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

impl FromIterator<PhaseQ> for PhaseSum {
    fn from_iter<I: IntoIterator<Item = PhaseQ>>(iter: I) -> Self {
        let mut out = PhaseSum::new();
        for p in iter {
            out.insert(p, 1);
        }
        out
    }
}

/// `e^{2πi·phase}`, exact on quarter turns.
fn unit_phase(phase: &PhaseQ) -> Complex64 {
    let quarter = phase.value() * RationalQ::from_integer(BigInt::from(4));
    if is_integral(&quarter) {
        return match quarter
            .to_integer()
            .mod_floor(&BigInt::from(4))
            .try_into()
            .unwrap_or(0u8)
        {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
    }
    Complex64::from_polar(1.0, TAU * phase.to_f64())
}

/// `−k·v mod N` for a pairing value `v / N`.
fn cs_phase_index(v: u64, k: u64, modulus: u64) -> usize {
    let kv = ((k % modulus) as u128 * v as u128 % modulus as u128) as u64;
    ((modulus - kv) % modulus) as usize
}

fn torsion_data(g: &GluingData) -> (TorsionGroup, ModularGram) {
    let group = TorsionGroup::new(g);
    let gram = linking_matrix_of(g, &group).modular();
    (group, gram)
}

/// `Z_CS,k = Σ_{θ ∈ T} e^{−2πik·Γ(θ, θ)}` over the full torsion subgroup, identity included.
pub fn z_cs(g: &GluingData, k: u64) -> PhaseSum {
    assert!(k >= 1, "level k must be at least 1");
    let (group, gram) = torsion_data(g);
    let n = gram.modulus;
    let mut counts = vec![0u64; n as usize];
    for idx in 0..group.len() {
        let a = group.coordinates_of_index(idx);
        counts[cs_phase_index(gram.pair(&a, &a), k, n)] += 1;
    }
    PhaseSum::from_counts(n, &counts)
}

/// `Z_BF,k = Σ_{θ, ϑ ∈ T} e^{−2πik·Γ(θ, ϑ)}`; the outer sum runs on the rayon pool.
pub fn z_bf(g: &GluingData, k: u64) -> PhaseSum {
    assert!(k >= 1, "level k must be at least 1");
    let (group, gram) = torsion_data(g);
    let n = gram.modulus;
    let factors = group.factors().to_vec();
    let counts = (0..group.len())
        .into_par_iter()
        .fold(
            || vec![0u64; n as usize],
            |mut counts, idx| {
                let row = gram.row_functional(&group.coordinates_of_index(idx));
                accumulate_row(&row, &factors, n, k, &mut counts);
                counts
            },
        )
        .reduce(
            || vec![0u64; n as usize],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    PhaseSum::from_counts(n, &counts)
}

/// Walks every `ϑ` in mixed-radix order, updating `Σ bⱼ cⱼ mod N` incrementally.
fn accumulate_row(row: &[u64], factors: &[u64], n: u64, k: u64, counts: &mut [u64]) {
    let mut digits = vec![0u64; factors.len()];
    let mut value = 0u64;
    loop {
        counts[cs_phase_index(value, k, n)] += 1;
        let mut j = factors.len();
        loop {
            if j == 0 {
                return;
            }
            j -= 1;
            digits[j] += 1;
            value = (value + row[j]) % n;
            if digits[j] < factors[j] {
                break;
            }
            digits[j] = 0;
            let wrap = (factors[j] as u128 * row[j] as u128 % n as u128) as u64;
            value = (value + n - wrap) % n;
        }
    }
}

/// `|T| · |{θ ∈ T : kθ = 0}|`, valid when the linking form is nondegenerate.
pub fn z_bf_closed_form(g: &GluingData, k: u64) -> Result<BigInt, PartitionError> {
    if k == 0 {
        return Err(PartitionError::InvalidLevel);
    }
    if !is_nondegenerate(g) {
        return Err(PartitionError::DegenerateLinkingForm);
    }
    let level = RationalQ::from_integer(BigInt::from(k));
    let killed = torsion_elements(g)
        .iter()
        .filter(|t| t.theta.iter().all(|x| is_integral(&(x * &level))))
        .count();
    Ok(homology_profile(g).torsion_order * BigInt::from(killed))
}

/// Direct quadratic Gauss sum `Σ_{a=0}^{p−1} e^{−2πi·k·q·a²/p}`.
pub fn gauss_sum_oracle(p: u64, q: i64, k: u64) -> Complex64 {
    assert!(p >= 1 && k >= 1, "gauss sum needs p >= 1 and k >= 1");
    assert_eq!((p as i64).gcd(&q), 1, "p and q must be coprime");
    let p128 = p as i128;
    (0..p128)
        .map(|a| {
            let e = (k as i128 * q as i128 * a * a).rem_euclid(p128);
            Complex64::from_polar(1.0, -TAU * e as f64 / p as f64)
        })
        .sum()
}

/// Evaluates the finite sector of the CS measure by brute force: sums the
/// curvature labels over a window of the lattice `ker P†`, averages the free
/// modes over an `n^{b₁}` grid of the torus `ker P ⊗ R / ker P`, and sums the
/// torsion moves, with zero holonomies and zero smooth data.
pub fn free_mode_grid_oracle(
    g: &GluingData,
    k: u64,
    grid_n: u64,
    m_window: u64,
) -> Result<Complex64, PartitionError> {
    if k == 0 {
        return Err(PartitionError::InvalidLevel);
    }
    let modulus = 2 * k * m_window;
    if grid_n == 0 || grid_n.gcd(&modulus) != 1 {
        return Err(PartitionError::GridNotCoprime { grid_n, modulus });
    }
    let genus = g.genus();
    let free = crate::integer_kernel(g.p());
    let curvature = curvature_lattice_basis(g);
    let torsion = torsion_elements(g);
    let window = m_window as i64;

    let labels = lattice_box(curvature.len(), -window, window);
    let grid = lattice_box(free.len(), 0, grid_n as i64 - 1);
    let grid_size = (grid_n as f64).powi(free.len() as i32);
    let n = BigInt::from(grid_n);

    let mut total = Complex64::new(0.0, 0.0);
    for c in &labels {
        let m = combine(&curvature, c, genus);
        let mut sector = PhaseSum::new();
        for t in &grid {
            let theta_f: Vec<RationalQ> = combine(&free, t, genus)
                .into_iter()
                .map(|x| RationalQ::new(x, n.clone()))
                .collect();
            for theta_t in &torsion {
                let class = FiniteDBClass::zero(genus)
                    .with_m(m.clone())
                    .with_theta_f(theta_f.clone())
                    .with_theta_t(theta_t.clone());
                let action =
                    cs_action(g, &class, k).expect("grid classes satisfy the sector constraints");
                sector.insert(action, 1);
            }
        }
        total += sector.eval_numeric() / grid_size;
    }
    Ok(total)
}

/// Gram matrix `⟨fᵢ, cⱼ⟩` between the bases of `ker P` (free modes) and
/// `ker P†` (curvature labels).
pub fn free_curvature_pairing(g: &GluingData) -> IntMatrix {
    let free = crate::integer_kernel(g.p());
    let curvature = curvature_lattice_basis(g);
    let rows: Vec<Vec<BigInt>> = free
        .iter()
        .map(|f| {
            curvature
                .iter()
                .map(|c| f.iter().zip(c).map(|(x, y)| x * y).sum())
                .collect()
        })
        .collect();
    IntMatrix::from_rows(&rows).unwrap_or_else(|_| IntMatrix::zeros(0, 0))
}

/// Smallest odd grid size `n ≥ 5`, `n > window`, coprime to `2k·window` and to the
/// determinant of [`free_curvature_pairing`] when that is nonzero.
///
/// With a nondegenerate pairing `G`, `2k·G·c ≡ 0 (mod n)` then forces `c = 0`
/// for every label `c` in the window, so the grid average is an exact delta.
pub fn admissible_grid(g: &GluingData, k: u64, window: u64) -> u64 {
    let det = free_curvature_pairing(g)
        .determinant()
        .map(|d| d.abs())
        .unwrap_or_else(|_| BigInt::zero());
    let det = if det.is_zero() { BigInt::from(1) } else { det };
    let modulus = det * BigInt::from(2 * k * window.max(1));
    let start = 5u64.max(window + 1) | 1;
    (start..)
        .step_by(2)
        .find(|&n| BigInt::from(n).gcd(&modulus) == BigInt::from(1))
        .expect("some odd size is coprime")
}

fn lattice_box(dim: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..dim {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (lo..=hi).map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

fn combine(basis: &[Vec<BigInt>], coeffs: &[i64], genus: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); genus];
    for (v, &c) in basis.iter().zip(coeffs) {
        if c != 0 {
            for (o, x) in out.iter_mut().zip(v) {
                *o += x * c;
            }
        }
    }
    out
}

/// Exact integer value of a phase sum, if its numeric value is within `tol`
/// of an integer.
pub fn nearest_integer(sum: &PhaseSum, tol: f64) -> Option<BigInt> {
    let z = sum.eval_numeric();
    let r = z.re.round();
    ((z.re - r).abs() <= tol && z.im.abs() <= tol).then(|| BigInt::from(r as i64))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lens(p: i64, q: i64) -> GluingData {
        GluingData::lens(p, q).unwrap()
    }

    fn phases(entries: &[((i64, i64), u64)]) -> PhaseSum {
        let mut s = PhaseSum::new();
        for &((n, d), m) in entries {
            s.insert(PhaseQ::from_ratio(n, d), m);
        }
        s
    }

    #[test]
    fn z_cs_catalog() {
        for k in 1..=10 {
            assert_eq!(z_cs(&lens(1, 0), k), phases(&[((0, 1), 1)]));
            assert_eq!(z_cs(&lens(0, 1), k), phases(&[((0, 1), 1)]));
        }
        // −a²/5 mod 1 for a = 0..4
        assert_eq!(
            z_cs(&lens(5, 1), 1),
            phases(&[((0, 1), 1), ((1, 5), 2), ((4, 5), 2)])
        );
        assert!(
            (z_cs(&lens(5, 1), 1).eval_numeric() - Complex64::new(5f64.sqrt(), 0.0)).norm() < 1e-12
        );
        assert_eq!(z_cs(&lens(4, 1), 1), phases(&[((0, 1), 2), ((3, 4), 2)]));
    }

    #[test]
    fn z_bf_values() {
        for k in 1..5 {
            assert_eq!(z_bf(&lens(1, 0), k), phases(&[((0, 1), 1)]));
        }
        assert_eq!(
            nearest_integer(&z_bf(&lens(6, 1), 2), 1e-9),
            Some(BigInt::from(12))
        );
        let z = z_bf(&lens(5, 2), 5);
        assert_eq!(z, phases(&[((0, 1), 25)]));
    }

    #[test]
    fn closed_form_values() {
        assert_eq!(z_bf_closed_form(&lens(6, 1), 2).unwrap(), BigInt::from(12));
        for p in 2..12 {
            assert_eq!(z_bf_closed_form(&lens(p, 1), 1).unwrap(), BigInt::from(p));
        }
        let g = lens(2, 1).connected_sum(&lens(6, 1));
        assert_eq!(z_bf_closed_form(&g, 6).unwrap(), BigInt::from(144));
        assert_eq!(z_bf_closed_form(&g, 0), Err(PartitionError::InvalidLevel));
    }

    #[test]
    fn numeric_evaluation() {
        assert_eq!(
            phases(&[((0, 1), 1)]).eval_numeric(),
            Complex64::new(1.0, 0.0)
        );
        assert_eq!(
            phases(&[((1, 2), 2)]).eval_numeric(),
            Complex64::new(-2.0, 0.0)
        );
        assert_eq!(
            z_cs(&lens(4, 1), 1).eval_numeric(),
            Complex64::new(2.0, -2.0)
        );
    }

    #[test]
    fn gauss_sums() {
        assert!((gauss_sum_oracle(5, 1, 1) - Complex64::new(5f64.sqrt(), 0.0)).norm() < 1e-12);
        assert!(gauss_sum_oracle(2, 1, 1).norm() < 1e-12);
        for k in 1..4 {
            assert!((gauss_sum_oracle(1, 0, k) - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn grid_oracle_examples() {
        let z = free_mode_grid_oracle(&lens(0, 1), 1, 7, 3).unwrap();
        assert!((z - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        let g = lens(5, 2);
        assert_eq!(
            free_mode_grid_oracle(&g, 3, 1, 1).unwrap(),
            z_cs(&g, 3).eval_numeric()
        );
        assert_eq!(
            free_mode_grid_oracle(&lens(0, 1), 1, 6, 3),
            Err(PartitionError::GridNotCoprime {
                grid_n: 6,
                modulus: 6
            })
        );
    }

    #[test]
    fn phase_sum_algebra() {
        let a = phases(&[((1, 3), 2), ((0, 1), 1)]);
        let b = phases(&[((1, 2), 1)]);
        assert_eq!(a.product(&b).term_count(), 3);
        assert_eq!(
            a.shifted(&PhaseQ::from_ratio(2, 3)),
            phases(&[((0, 1), 2), ((2, 3), 1)])
        );
        assert!((a.conjugate().eval_numeric() - a.eval_numeric().conj()).norm() < 1e-12);
        let mut c = a.clone();
        c.merge(&a);
        assert_eq!(c.multiplicity(&PhaseQ::from_ratio(1, 3)), 4);
    }
}
