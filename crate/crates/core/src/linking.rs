//! The torsion linking form `Γ(θ, ϑ) = ⟨Q θ, P ϑ⟩ mod 1`, evaluated on explicit
//! representatives.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::exact::{dot_rational, PhaseQ, RationalQ};
use crate::homology::{TorsionGroup, TorsionRep};
use crate::splitting::GluingData;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinkingError {
    #[error("{which} is not a torsion representative: P·θ is not an integer vector")]
    NotTorsion { which: &'static str },
    #[error("{which} has length {found}, expected genus {genus}")]
    Length {
        which: &'static str,
        found: usize,
        genus: usize,
    },
}

fn check_rep(g: &GluingData, rep: &TorsionRep, which: &'static str) -> Result<(), LinkingError> {
    if rep.theta.len() != g.genus() {
        return Err(LinkingError::Length {
            which,
            found: rep.theta.len(),
            genus: g.genus(),
        });
    }
    if !rep.satisfies_constraint(g.p()) {
        return Err(LinkingError::NotTorsion { which });
    }
    Ok(())
}

/// `⟨Q θ, P ϑ⟩` reduced mod 1.
pub fn linking_form(
    g: &GluingData,
    theta: &TorsionRep,
    vartheta: &TorsionRep,
) -> Result<PhaseQ, LinkingError> {
    check_rep(g, theta, "theta")?;
    check_rep(g, vartheta, "vartheta")?;
    Ok(linking_form_unchecked(g, &theta.theta, &vartheta.theta))
}

pub(crate) fn linking_form_unchecked(
    g: &GluingData,
    theta: &[RationalQ],
    vartheta: &[RationalQ],
) -> PhaseQ {
    let q_theta = g.q().mul_rational_vec(theta);
    let p_vartheta = g.p().mul_rational_vec(vartheta);
    PhaseQ::new(dot_rational(&q_theta, &p_vartheta))
}

/// Gram matrix of `Γ` on the Smith generators of the torsion subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkingMatrix {
    pub generators: Vec<TorsionRep>,
    /// Order of each generator (its invariant factor).
    pub orders: Vec<u64>,
    pub gram: Vec<Vec<PhaseQ>>,
}

impl LinkingMatrix {
    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim()).all(|i| (0..i).all(|j| self.gram[i][j] == self.gram[j][i]))
    }

    /// `Γ(θ, ϑ)` from Smith coordinates, by bilinearity.
    pub fn pair(&self, a: &[u64], b: &[u64]) -> PhaseQ {
        let mut total = RationalQ::zero();
        for (i, &ai) in a.iter().enumerate() {
            for (j, &bj) in b.iter().enumerate() {
                if ai != 0 && bj != 0 {
                    total +=
                        self.gram[i][j].value() * RationalQ::from_integer(BigInt::from(ai * bj));
                }
            }
        }
        PhaseQ::new(total)
    }

    /// The same Gram matrix as integers modulo the exponent of the group.
    pub fn modular(&self) -> ModularGram {
        let modulus = self.orders.last().copied().unwrap_or(1);
        let n = BigInt::from(modulus);
        let entries = self
            .gram
            .iter()
            .flatten()
            .map(|phase| {
                let scaled = phase.value() * RationalQ::from_integer(n.clone());
                assert!(
                    scaled.is_integer(),
                    "gram denominator must divide the group exponent"
                );
                scaled
                    .to_integer()
                    .to_u64()
                    .expect("reduced below the exponent")
            })
            .collect();
        ModularGram {
            modulus,
            dim: self.dim(),
            entries,
        }
    }
}

/// `Γ` on Smith coordinates as an integer form modulo `N`, with `Γ = value / N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularGram {
    pub modulus: u64,
    dim: usize,
    entries: Vec<u64>,
}

impl ModularGram {
    pub fn entry(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.dim + j]
    }

    /// `Σⱼ aᵢ gᵢⱼ mod N`, the linear functional `Γ(θ, ·)` on the generators.
    pub fn row_functional(&self, a: &[u64]) -> Vec<u64> {
        let n = self.modulus as u128;
        (0..self.dim)
            .map(|j| {
                let s: u128 = a
                    .iter()
                    .enumerate()
                    .map(|(i, &ai)| ai as u128 * self.entry(i, j) as u128)
                    .sum();
                (s % n) as u64
            })
            .collect()
    }

    pub fn pair(&self, a: &[u64], b: &[u64]) -> u64 {
        let n = self.modulus as u128;
        let row = self.row_functional(a);
        (row.iter()
            .zip(b)
            .map(|(&c, &bj)| c as u128 * bj as u128)
            .sum::<u128>()
            % n) as u64
    }
}

pub fn linking_matrix(g: &GluingData) -> LinkingMatrix {
    linking_matrix_of(g, &TorsionGroup::new(g))
}

pub(crate) fn linking_matrix_of(g: &GluingData, group: &TorsionGroup) -> LinkingMatrix {
    let generators = group.generators();
    let gram = generators
        .iter()
        .map(|a| {
            generators
                .iter()
                .map(|b| linking_form_unchecked(g, &a.theta, &b.theta))
                .collect()
        })
        .collect();
    LinkingMatrix {
        generators,
        orders: group.factors().to_vec(),
        gram,
    }
}

/// `true` iff no nonzero torsion element pairs trivially with every element.
///
/// Scans the torsion elements and tests each against the generators, which
/// suffices by bilinearity.
pub fn is_nondegenerate(g: &GluingData) -> bool {
    let group = TorsionGroup::new(g);
    let gram = linking_matrix_of(g, &group).modular();
    (1..group.len()).all(|idx| {
        let coords = group.coordinates_of_index(idx);
        gram.row_functional(&coords).iter().any(|&c| c != 0)
    })
}
