//! Independent oracles for the integration tests. Everything here works on
//! plain `i64`/`i128` data and deliberately avoids the library's own matrix,
//! Smith and linking code.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::f64::consts::TAU;

use heegaard_cs::GluingData;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Mat = Vec<Vec<i64>>;
pub type Q = Ratio<i128>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, bound: i64) -> Mat {
    (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(-bound..=bound)).collect())
        .collect()
}

pub fn to_i64_rows(m: &heegaard_cs::IntMatrix) -> Mat {
    m.to_rows()
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| x.to_i64().expect("small entries"))
                .collect()
        })
        .collect()
}

pub fn blocks(g: &GluingData) -> [Mat; 4] {
    [
        to_i64_rows(g.r()),
        to_i64_rows(g.p()),
        to_i64_rows(g.s()),
        to_i64_rows(g.q()),
    ]
}

/// Leibniz expansion over all permutations.
pub fn det_permutation(a: &Mat) -> i128 {
    let n = a.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = 0i128;
    permute(&mut perm, 0, &mut |p| {
        let inversions = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| p[i] > p[j])
            .count();
        let sign = if inversions % 2 == 0 { 1 } else { -1 };
        total += sign * (0..n).map(|i| a[i][p[i]] as i128).product::<i128>();
    });
    total
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Nonzero invariant factors `d_k = D_k / D_{k−1}`, with `D_k` the gcd of all
/// `k × k` minors.
pub fn invariant_factors_by_minors(a: &Mat) -> Vec<i128> {
    let (rows, cols) = (a.len(), a.first().map_or(0, Vec::len));
    let mut out = Vec::new();
    let mut prev = 1i128;
    for k in 1..=rows.min(cols) {
        let mut g = 0i128;
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let minor: Mat = rs
                    .iter()
                    .map(|&i| cs.iter().map(|&j| a[i][j]).collect())
                    .collect();
                g = g.gcd(&det_permutation(&minor));
            }
        }
        if g == 0 {
            break;
        }
        out.push(g / prev);
        prev = g;
    }
    out
}

/// Adjugate by cofactors.
pub fn adjugate(a: &Mat) -> Vec<Vec<i128>> {
    let n = a.len();
    if n == 1 {
        return vec![vec![1]];
    }
    let mut adj = vec![vec![0i128; n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor: Mat = (0..n)
                .filter(|&r| r != i)
                .map(|r| (0..n).filter(|&c| c != j).map(|c| a[r][c]).collect())
                .collect();
            let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
            adj[j][i] = sign * det_permutation(&minor);
        }
    }
    adj
}

/// Multiset of element orders of `Z^n / A Z^n` for square nonsingular `A`.
///
/// `x ∈ A Z^n` iff `adj(A) x ≡ 0 (mod det A)`, so the cokernel embeds in
/// `(Z/N)^n` as the subgroup generated by the columns of `adj(A)` mod `N`;
/// that subgroup is enumerated by closure.
pub fn coker_orders_by_residues(a: &Mat) -> BTreeMap<u64, usize> {
    let n_det = det_permutation(a).abs();
    assert!(n_det > 0);
    let adj = adjugate(a);
    let dim = a.len();
    let gens: Vec<Vec<i128>> = (0..dim)
        .map(|j| (0..dim).map(|i| adj[i][j].rem_euclid(n_det)).collect())
        .collect();
    let zero = vec![0i128; dim];
    let mut seen: HashSet<Vec<i128>> = HashSet::from([zero.clone()]);
    let mut queue = VecDeque::from([zero]);
    while let Some(x) = queue.pop_front() {
        for gen in &gens {
            let y: Vec<i128> = x.iter().zip(gen).map(|(a, b)| (a + b) % n_det).collect();
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    let mut orders = BTreeMap::new();
    for x in &seen {
        let order = x
            .iter()
            .fold(1i128, |acc, &c| acc.lcm(&(n_det / c.gcd(&n_det))));
        *orders.entry(order as u64).or_insert(0) += 1;
    }
    orders
}

/// Element-order multiset of `⊕ Z/d_i`.
pub fn orders_of_cyclic_sum(factors: &[u64]) -> BTreeMap<u64, usize> {
    let mut orders = BTreeMap::new();
    let total: u64 = factors.iter().product();
    for idx in 0..total {
        let mut rest = idx;
        let mut order = 1u64;
        for &d in factors {
            let c = rest % d;
            rest /= d;
            order = order.lcm(&(d / c.gcd(&d)));
        }
        *orders.entry(order).or_insert(0) += 1;
    }
    orders
}

fn mat_vec_q(a: &Mat, v: &[Q]) -> Vec<Q> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .map(|(&x, y)| Q::from_integer(x as i128) * y)
                .sum()
        })
        .collect()
}

fn frac(x: Q) -> Q {
    x - Q::from_integer(x.floor().to_integer())
}

/// `θ ∈ [0,1)^g` with `P θ ∈ Z^g`, enumerated as `adj(P) y / det P` over a box
/// of integer `y`. Requires `det P ≠ 0`.
pub fn torsion_reps_nonsingular(p: &Mat) -> Vec<Vec<Q>> {
    let det = det_permutation(p);
    assert!(det != 0, "needs a nonsingular P");
    let adj = adjugate(p);
    let n = p.len();
    let side = det.unsigned_abs() as u64;
    let total = side.pow(n as u32);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for idx in 0..total {
        let mut rest = idx;
        let y: Vec<i128> = (0..n)
            .map(|_| {
                let c = rest % side;
                rest /= side;
                c as i128
            })
            .collect();
        let theta: Vec<Q> = (0..n)
            .map(|i| frac(Q::new((0..n).map(|j| adj[i][j] * y[j]).sum::<i128>(), det)))
            .collect();
        if seen.insert(theta.clone()) {
            out.push(theta);
        }
    }
    out
}

/// `⟨Q θ, P ϑ⟩ mod 1`, straight from the definition.
pub fn gamma(p: &Mat, q: &Mat, theta: &[Q], vartheta: &[Q]) -> Q {
    let qt = mat_vec_q(q, theta);
    let pv = mat_vec_q(p, vartheta);
    frac(qt.iter().zip(&pv).map(|(a, b)| a * b).sum())
}

fn phase(x: Q) -> Complex64 {
    Complex64::from_polar(1.0, TAU * x.to_f64().expect("finite"))
}

pub fn brute_z_cs(g: &GluingData, k: i128) -> Complex64 {
    let [_, p, _, q] = blocks(g);
    torsion_reps_nonsingular(&p)
        .iter()
        .map(|t| phase(-gamma(&p, &q, t, t) * k))
        .sum()
}

pub fn brute_z_bf(g: &GluingData, k: i128) -> Complex64 {
    let [_, p, _, q] = blocks(g);
    let reps = torsion_reps_nonsingular(&p);
    reps.iter()
        .flat_map(|a| reps.iter().map(move |b| (a, b)))
        .map(|(a, b)| phase(-gamma(&p, &q, a, b) * k))
        .sum()
}

/// Torsion order of `coker P` for nonsingular `P`.
pub fn det_abs(p: &Mat) -> u64 {
    det_permutation(p).unsigned_abs() as u64
}

pub fn is_zero_vec(v: &[Q]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Valid splittings with nonsingular `P` and small torsion, from seeded words.
pub fn nonsingular_corpus(count: usize, max_order: u64) -> Vec<GluingData> {
    let mut out = Vec::new();
    let mut seed = 0u64;
    while out.len() < count {
        let genus = 1 + (seed % 3) as usize;
        let g = GluingData::random_splitting(genus, seed, 4 + (seed % 21) as usize).expect("valid");
        seed += 1;
        let [_, p, _, _] = blocks(&g);
        let d = det_abs(&p);
        if d != 0 && d <= max_order && d.pow(genus as u32) <= 200_000 {
            out.push(g);
        }
    }
    out
}

pub fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol
}
