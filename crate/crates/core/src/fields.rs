//! Finite skeleton of a Deligne–Beilinson 1-class on a Heegaard splitting and
//! exact evaluation of the CS and BF actions modulo integers.
//!
//! A class is split into four independent sectors: a curvature label `m` with
//! `P† m = 0`, a free flat mode `θ_f` with `P θ_f = 0`, a torsion move `θ_τ`
//! with `P θ_τ ∈ Z^g`, and a smooth part that only enters through `g` rational
//! holonomies and a rational self-pairing scalar.

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::exact::{dot_int_rational, PhaseQ, RationalQ};
use crate::homology::TorsionRep;
use crate::linking::linking_form_unchecked;
use crate::splitting::GluingData;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("level k must be at least 1")]
    InvalidLevel,
    #[error("{field} has length {found}, expected genus {genus}")]
    Length {
        field: &'static str,
        found: usize,
        genus: usize,
    },
    #[error("curvature label violates P†·m = 0")]
    CurvatureSector,
    #[error("free flat mode violates P·θ_f = 0")]
    FreeSector,
    #[error("torsion move violates P·θ_τ ∈ Z^g")]
    TorsionSector,
    #[error("shift vector is not in ker P")]
    ShiftNotInKernel,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteDBClass {
    pub m: Vec<BigInt>,
    pub theta_f: Vec<RationalQ>,
    pub theta_t: TorsionRep,
    pub holonomy: Vec<RationalQ>,
    pub smooth_self: RationalQ,
}

impl FiniteDBClass {
    pub fn zero(genus: usize) -> Self {
        FiniteDBClass {
            m: vec![BigInt::zero(); genus],
            theta_f: vec![RationalQ::zero(); genus],
            theta_t: TorsionRep::zero(genus),
            holonomy: vec![RationalQ::zero(); genus],
            smooth_self: RationalQ::zero(),
        }
    }

    pub fn with_m(mut self, m: Vec<BigInt>) -> Self {
        self.m = m;
        self
    }

    pub fn with_theta_f(mut self, theta_f: Vec<RationalQ>) -> Self {
        self.theta_f = theta_f;
        self
    }

    pub fn with_theta_t(mut self, theta_t: TorsionRep) -> Self {
        self.theta_t = theta_t;
        self
    }

    pub fn with_holonomy(mut self, holonomy: Vec<RationalQ>) -> Self {
        self.holonomy = holonomy;
        self
    }

    pub fn with_smooth_self(mut self, smooth_self: RationalQ) -> Self {
        self.smooth_self = smooth_self;
        self
    }

    /// Checks every sector constraint against the gluing data.
    pub fn check(&self, g: &GluingData) -> Result<(), FieldError> {
        let genus = g.genus();
        for (field, len) in [
            ("m", self.m.len()),
            ("theta_f", self.theta_f.len()),
            ("theta_t", self.theta_t.theta.len()),
            ("holonomy", self.holonomy.len()),
        ] {
            if len != genus {
                return Err(FieldError::Length {
                    field,
                    found: len,
                    genus,
                });
            }
        }
        if !g.p().transpose().mul_vec(&self.m).iter().all(Zero::is_zero) {
            return Err(FieldError::CurvatureSector);
        }
        if !g
            .p()
            .mul_rational_vec(&self.theta_f)
            .iter()
            .all(Zero::is_zero)
        {
            return Err(FieldError::FreeSector);
        }
        if !self.theta_t.satisfies_constraint(g.p()) {
            return Err(FieldError::TorsionSector);
        }
        Ok(())
    }
}

fn level(k: u64) -> Result<RationalQ, FieldError> {
    if k == 0 {
        return Err(FieldError::InvalidLevel);
    }
    Ok(RationalQ::from_integer(BigInt::from(k)))
}

/// `k·s + 2k⟨m, h⟩ − 2k⟨θ_f, m⟩ − k·Γ(θ_τ, θ_τ)` mod 1.
pub fn cs_action(g: &GluingData, a: &FiniteDBClass, k: u64) -> Result<PhaseQ, FieldError> {
    let k = level(k)?;
    a.check(g)?;
    let two_k = &k + &k;
    let gamma = linking_form_unchecked(g, &a.theta_t.theta, &a.theta_t.theta);
    let total = &k * &a.smooth_self + &two_k * dot_int_rational(&a.m, &a.holonomy)
        - &two_k * dot_int_rational(&a.m, &a.theta_f)
        - &k * gamma.value();
    Ok(PhaseQ::new(total))
}

/// BF action of the pair `(A, B)` mod 1; `cross` stands for the smooth cross term.
pub fn bf_action(
    g: &GluingData,
    a: &FiniteDBClass,
    b: &FiniteDBClass,
    k: u64,
    cross: &RationalQ,
) -> Result<PhaseQ, FieldError> {
    let k = level(k)?;
    a.check(g)?;
    b.check(g)?;
    let gamma = linking_form_unchecked(g, &a.theta_t.theta, &b.theta_t.theta);
    let total = cross + dot_int_rational(&b.m, &a.holonomy) + dot_int_rational(&a.m, &b.holonomy)
        - dot_int_rational(&b.m, &a.theta_f)
        - dot_int_rational(&a.m, &b.theta_f)
        - gamma.value();
    Ok(PhaseQ::new(k * total))
}

/// DB product of two skeleton classes integrated over `M`, mod 1.
///
/// Only four sector pairings survive: curvature × torsion gives `−⟨m, θ_τ⟩`,
/// curvature × smooth gives `⟨m, holonomy⟩`, smooth × smooth gives `cross`,
/// torsion × torsion gives `−Γ`. Everything else, in particular anything
/// involving a free flat mode, pairs to zero.
pub fn db_pair(
    g: &GluingData,
    a: &FiniteDBClass,
    b: &FiniteDBClass,
    cross: &RationalQ,
) -> Result<PhaseQ, FieldError> {
    a.check(g)?;
    b.check(g)?;
    let curvature_torsion =
        dot_int_rational(&a.m, &b.theta_t.theta) + dot_int_rational(&b.m, &a.theta_t.theta);
    let curvature_smooth =
        dot_int_rational(&a.m, &b.holonomy) + dot_int_rational(&b.m, &a.holonomy);
    let torsion = linking_form_unchecked(g, &a.theta_t.theta, &b.theta_t.theta);
    Ok(PhaseQ::new(
        curvature_smooth + cross - curvature_torsion - torsion.value(),
    ))
}

fn shift_free_mode(
    g: &GluingData,
    a: &FiniteDBClass,
    u: &[BigInt],
    denominator: BigInt,
) -> Result<FiniteDBClass, FieldError> {
    if u.len() != g.genus() {
        return Err(FieldError::Length {
            field: "u",
            found: u.len(),
            genus: g.genus(),
        });
    }
    if !g.p().mul_vec(u).iter().all(Zero::is_zero) {
        return Err(FieldError::ShiftNotInKernel);
    }
    let theta_f = a
        .theta_f
        .iter()
        .zip(u)
        .map(|(t, ui)| t + RationalQ::new(ui.clone(), denominator.clone()))
        .collect();
    Ok(FiniteDBClass {
        theta_f,
        ..a.clone()
    })
}

/// CS zero mode: `θ_f → θ_f + u/(2k)` for `u ∈ ker P`.
///
/// `θ_f` is not reduced mod 1 afterwards, since that would break `P θ_f = 0`.
pub fn zero_mode_shift(
    g: &GluingData,
    a: &FiniteDBClass,
    u: &[BigInt],
    k: u64,
) -> Result<FiniteDBClass, FieldError> {
    level(k)?;
    shift_free_mode(g, a, u, BigInt::from(2 * k))
}

/// BF zero mode: `θ_f → θ_f + u/k` for `u ∈ ker P`.
pub fn bf_zero_mode_shift(
    g: &GluingData,
    a: &FiniteDBClass,
    u: &[BigInt],
    k: u64,
) -> Result<FiniteDBClass, FieldError> {
    level(k)?;
    shift_free_mode(g, a, u, BigInt::from(k))
}
