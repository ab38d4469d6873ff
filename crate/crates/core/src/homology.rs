//! First homology `H₁(M) ≅ coker P`, and the canonical torsion representatives
//! `θ ∈ [0,1)^g` with `P θ ∈ Z^g`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::exact::{
    frac, integer_kernel, is_integral, smith_normal_form, IntMatrix, RationalQ, SmithDecomposition,
};
use crate::splitting::GluingData;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyProfile {
    pub b1: usize,
    /// Invariant factors `> 1` of the torsion, in divisibility order.
    pub invariant_factors: Vec<BigInt>,
    pub torsion_order: BigInt,
    pub snf_of_p: SmithDecomposition,
}

impl HomologyProfile {
    /// Diagonal positions of `D` (in `P = U D V`) carrying a factor `> 1`.
    pub fn torsion_positions(&self) -> Vec<usize> {
        self.snf_of_p
            .diagonal()
            .iter()
            .enumerate()
            .filter(|(_, d)| **d > BigInt::one())
            .map(|(i, _)| i)
            .collect()
    }

    /// Largest invariant factor, or 1 for torsion-free homology.
    pub fn exponent(&self) -> BigInt {
        self.invariant_factors
            .last()
            .cloned()
            .unwrap_or_else(BigInt::one)
    }
}

pub fn homology_profile(g: &GluingData) -> HomologyProfile {
    let snf = smith_normal_form(g.p());
    let diag = snf.diagonal();
    let b1 = diag.iter().filter(|d| d.is_zero()).count();
    let invariant_factors: Vec<BigInt> = diag.into_iter().filter(|d| *d > BigInt::one()).collect();
    let torsion_order = invariant_factors.iter().product();
    HomologyProfile {
        b1,
        invariant_factors,
        torsion_order,
        snf_of_p: snf,
    }
}

/// A flat parameter `θ ∈ [0,1)^g` with `P θ ∈ Z^g` representing a torsion class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorsionRep {
    pub theta: Vec<RationalQ>,
}

impl TorsionRep {
    pub fn zero(genus: usize) -> Self {
        TorsionRep {
            theta: vec![RationalQ::zero(); genus],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.theta.iter().all(Zero::is_zero)
    }

    /// `true` iff `P θ` is an integer vector.
    pub fn satisfies_constraint(&self, p: &IntMatrix) -> bool {
        self.theta.len() == p.cols() && p.mul_rational_vec(&self.theta).iter().all(is_integral)
    }

    /// Componentwise sum reduced into `[0, 1)`; not canonicalized.
    pub fn add_mod_one(&self, other: &Self) -> Self {
        TorsionRep {
            theta: self
                .theta
                .iter()
                .zip(&other.theta)
                .map(|(a, b)| frac(&(a + b)))
                .collect(),
        }
    }
}

/// The torsion subgroup of `coker P`, enumerated through Smith coordinates.
///
/// Element `(a₁, …, a_r)` with `0 ≤ aᵢ < dᵢ` is `θ = V⁻¹ φ` reduced mod 1,
/// where `φ` carries `aᵢ/dᵢ` on the torsion positions of `D` and zero elsewhere.
#[derive(Clone, Debug)]
pub struct TorsionGroup {
    genus: usize,
    factors: Vec<u64>,
    positions: Vec<usize>,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl TorsionGroup {
    pub fn new(g: &GluingData) -> Self {
        Self::from_profile(&homology_profile(g))
    }

    pub fn from_profile(profile: &HomologyProfile) -> Self {
        let factors = profile
            .invariant_factors
            .iter()
            .map(|d| {
                d.to_u64()
                    .expect("invariant factor exceeds u64 enumeration range")
            })
            .collect();
        TorsionGroup {
            genus: profile.snf_of_p.v.rows(),
            factors,
            positions: profile.torsion_positions(),
            v: profile.snf_of_p.v.clone(),
            v_inv: profile.snf_of_p.v_inv.clone(),
        }
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn len(&self) -> u64 {
        self.factors
            .iter()
            .try_fold(1u64, |acc, &d| acc.checked_mul(d))
            .expect("torsion order exceeds u64 enumeration range")
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Mixed-radix decoding of a flat index, last coordinate fastest.
    pub fn coordinates_of_index(&self, mut index: u64) -> Vec<u64> {
        let mut coords = vec![0; self.factors.len()];
        for (c, &d) in coords.iter_mut().zip(&self.factors).rev() {
            *c = index % d;
            index /= d;
        }
        coords
    }

    pub fn index_of_coordinates(&self, coords: &[u64]) -> u64 {
        coords
            .iter()
            .zip(&self.factors)
            .fold(0, |acc, (&c, &d)| acc * d + c)
    }

    /// The representative with Smith coordinates `coords`.
    pub fn element(&self, coords: &[u64]) -> TorsionRep {
        assert_eq!(
            coords.len(),
            self.factors.len(),
            "one coordinate per invariant factor"
        );
        let mut phi = vec![RationalQ::zero(); self.genus];
        for ((&pos, &a), &d) in self.positions.iter().zip(coords).zip(&self.factors) {
            assert!(a < d, "coordinate {a} out of range for factor {d}");
            phi[pos] = RationalQ::new(BigInt::from(a), BigInt::from(d));
        }
        let theta = self.v_inv.mul_rational_vec(&phi).iter().map(frac).collect();
        TorsionRep { theta }
    }

    pub fn element_at(&self, index: u64) -> TorsionRep {
        self.element(&self.coordinates_of_index(index))
    }

    /// Smith coordinates of any `θ` with `P θ ∈ Z^g`; free-mode components are dropped.
    pub fn coordinates(&self, rep: &TorsionRep) -> Vec<u64> {
        let phi = self.v.mul_rational_vec(&rep.theta);
        self.positions
            .iter()
            .zip(&self.factors)
            .map(|(&pos, &d)| {
                let scaled = &phi[pos] * RationalQ::from_integer(BigInt::from(d));
                assert!(is_integral(&scaled), "not a torsion representative");
                scaled
                    .to_integer()
                    .mod_floor(&BigInt::from(d))
                    .to_u64()
                    .expect("reduced below factor")
            })
            .collect()
    }

    pub fn canonicalize(&self, rep: &TorsionRep) -> TorsionRep {
        self.element(&self.coordinates(rep))
    }

    /// Group law: add, reduce mod 1, re-canonicalize.
    pub fn add(&self, a: &TorsionRep, b: &TorsionRep) -> TorsionRep {
        self.canonicalize(&a.add_mod_one(b))
    }

    /// One generator per invariant factor, of order `dᵢ`.
    pub fn generators(&self) -> Vec<TorsionRep> {
        (0..self.factors.len())
            .map(|i| {
                let mut coords = vec![0; self.factors.len()];
                coords[i] = 1;
                self.element(&coords)
            })
            .collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = TorsionRep> + '_ {
        (0..self.len()).map(move |i| self.element_at(i))
    }
}

/// All torsion representatives, identity first.
pub fn torsion_elements(g: &GluingData) -> Vec<TorsionRep> {
    TorsionGroup::new(g).iter().collect()
}

/// A basis over Q of `{x : P x = 0}`; it is also a saturated integer basis.
pub fn free_flat_basis(g: &GluingData) -> Vec<Vec<RationalQ>> {
    integer_kernel(g.p())
        .into_iter()
        .map(|v| v.into_iter().map(RationalQ::from_integer).collect())
        .collect()
}

/// Integer basis of the curvature label lattice `{m : P† m = 0}`.
pub fn curvature_lattice_basis(g: &GluingData) -> Vec<Vec<BigInt>> {
    integer_kernel(&g.p().transpose())
}
