//! Heegaard gluing data: the four `g × g` blocks of the gluing matrix
//! `M = [[R, P], [S, Q]]`, its validation, and constructors for lens spaces,
//! connected sums, stabilizations and random splittings.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::exact::IntMatrix;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SplittingError {
    #[error("genus must be at least 1")]
    ZeroGenus,
    #[error("block {block} is {rows}x{cols}, expected {genus}x{genus}")]
    BlockShape {
        block: &'static str,
        rows: usize,
        cols: usize,
        genus: usize,
    },
    #[error("gluing matrix is {rows}x{cols}, expected 2g x 2g")]
    GluingShape { rows: usize, cols: usize },
    #[error("lens space parameters ({p}, {q}) are not coprime")]
    NotCoprime { p: i64, q: i64 },
    #[error("{0}")]
    Relations(ValidationReport),
}

/// The six block relations implied by `M⁻¹ = [[−Q†, P†], [S†, −R†]]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    QtPSymmetric,
    PtSMinusQtR,
    StRSymmetric,
    RPtSymmetric,
    SPtMinusQRt,
    SQtSymmetric,
}

impl Relation {
    pub const ALL: [Relation; 6] = [
        Relation::QtPSymmetric,
        Relation::PtSMinusQtR,
        Relation::StRSymmetric,
        Relation::RPtSymmetric,
        Relation::SPtMinusQRt,
        Relation::SQtSymmetric,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Relation::QtPSymmetric => "Q†P = P†Q",
            Relation::PtSMinusQtR => "P†S − Q†R = 1",
            Relation::StRSymmetric => "S†R = R†S",
            Relation::RPtSymmetric => "RP† = PR†",
            Relation::SPtMinusQRt => "SP† − QR† = 1",
            Relation::SQtSymmetric => "SQ† = QS†",
        }
    }

    fn lhs_name(self) -> &'static str {
        self.name().split(" = ").next().unwrap_or_default()
    }

    /// Both sides of the relation evaluated on the given blocks.
    fn evaluate(
        self,
        r: &IntMatrix,
        p: &IntMatrix,
        s: &IntMatrix,
        q: &IntMatrix,
    ) -> (IntMatrix, IntMatrix) {
        let t = IntMatrix::transpose;
        let g = r.rows();
        match self {
            Relation::QtPSymmetric => (&t(q) * p, &t(p) * q),
            Relation::PtSMinusQtR => (
                (&t(p) * s)
                    .checked_sub(&(&t(q) * r))
                    .expect("square blocks"),
                IntMatrix::identity(g),
            ),
            Relation::StRSymmetric => (&t(s) * r, &t(r) * s),
            Relation::RPtSymmetric => (r * &t(p), p * &t(r)),
            Relation::SPtMinusQRt => (
                (s * &t(p))
                    .checked_sub(&(q * &t(r)))
                    .expect("square blocks"),
                IntMatrix::identity(g),
            ),
            Relation::SQtSymmetric => (s * &t(q), q * &t(s)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationViolation {
    pub relation: Relation,
    pub lhs: IntMatrix,
    pub rhs: IntMatrix,
}

impl fmt::Display for RelationViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |m: &IntMatrix| {
            if m.rows() == 1 && m.cols() == 1 {
                m[(0, 0)].to_string()
            } else {
                m.to_string()
            }
        };
        let rhs = match self.relation {
            Relation::PtSMinusQtR | Relation::SPtMinusQRt => show(&self.rhs),
            _ => format!(
                "{} = {}",
                self.relation.name().split(" = ").nth(1).unwrap_or_default(),
                show(&self.rhs)
            ),
        };
        write!(
            f,
            "{} = {} ≠ {}",
            self.relation.lhs_name(),
            show(&self.lhs),
            rhs
        )
    }
}

/// Every block relation that failed, with both sides evaluated.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<RelationViolation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.violations.iter().map(ToString::to_string).collect();
        write!(f, "gluing relations violated: {}", parts.join("; "))
    }
}

/// Validated gluing data of a genus-`g` Heegaard splitting.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GluingData {
    genus: usize,
    r: IntMatrix,
    p: IntMatrix,
    s: IntMatrix,
    q: IntMatrix,
}

fn check_blocks(
    r: &IntMatrix,
    p: &IntMatrix,
    s: &IntMatrix,
    q: &IntMatrix,
) -> Result<usize, SplittingError> {
    let g = r.rows();
    if g == 0 {
        return Err(SplittingError::ZeroGenus);
    }
    for (block, m) in [("R", r), ("P", p), ("S", s), ("Q", q)] {
        if m.rows() != g || m.cols() != g {
            return Err(SplittingError::BlockShape {
                block,
                rows: m.rows(),
                cols: m.cols(),
                genus: g,
            });
        }
    }
    Ok(g)
}

/// Evaluates the six block relations and lists every violation.
pub fn relation_report(
    r: &IntMatrix,
    p: &IntMatrix,
    s: &IntMatrix,
    q: &IntMatrix,
) -> Result<ValidationReport, SplittingError> {
    check_blocks(r, p, s, q)?;
    let violations = Relation::ALL
        .iter()
        .filter_map(|&relation| {
            let (lhs, rhs) = relation.evaluate(r, p, s, q);
            (lhs != rhs).then_some(RelationViolation { relation, lhs, rhs })
        })
        .collect();
    Ok(ValidationReport { violations })
}

/// `true` iff `M† J M = −J` with `J = [[0, I], [−I, 0]]`.
pub fn anti_symplectic_check(r: &IntMatrix, p: &IntMatrix, s: &IntMatrix, q: &IntMatrix) -> bool {
    if check_blocks(r, p, s, q).is_err() {
        return false;
    }
    let g = r.rows();
    let m = IntMatrix::block_2x2(r, p, s, q).expect("blocks checked");
    let j = intersection_form(g);
    &(&m.transpose() * &j) * &m == j.neg()
}

/// The intersection matrix `J = [[0, I], [−I, 0]]` in the (λ, μ) basis.
pub fn intersection_form(genus: usize) -> IntMatrix {
    let i = IntMatrix::identity(genus);
    let z = IntMatrix::zeros(genus, genus);
    IntMatrix::block_2x2(&z, &i, &i.neg(), &z).expect("square blocks")
}

/// Validates candidate blocks against the six relations.
pub fn validate(
    r: IntMatrix,
    p: IntMatrix,
    s: IntMatrix,
    q: IntMatrix,
) -> Result<GluingData, SplittingError> {
    let genus = check_blocks(&r, &p, &s, &q)?;
    let report = relation_report(&r, &p, &s, &q)?;
    assert_eq!(
        report.is_valid(),
        anti_symplectic_check(&r, &p, &s, &q),
        "block relations and M†JM = −J disagree"
    );
    if !report.is_valid() {
        return Err(SplittingError::Relations(report));
    }
    Ok(GluingData { genus, r, p, s, q })
}

impl GluingData {
    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn r(&self) -> &IntMatrix {
        &self.r
    }

    pub fn p(&self) -> &IntMatrix {
        &self.p
    }

    pub fn s(&self) -> &IntMatrix {
        &self.s
    }

    pub fn q(&self) -> &IntMatrix {
        &self.q
    }

    /// The full `2g × 2g` matrix `[[R, P], [S, Q]]`.
    pub fn gluing_matrix(&self) -> IntMatrix {
        IntMatrix::block_2x2(&self.r, &self.p, &self.s, &self.q).expect("blocks are g x g")
    }

    /// Splits a `2g × 2g` matrix into blocks and validates it.
    pub fn from_gluing_matrix(m: &IntMatrix) -> Result<Self, SplittingError> {
        if !m.is_square() || m.rows() % 2 != 0 {
            return Err(SplittingError::GluingShape {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        let g = m.rows() / 2;
        validate(
            m.submatrix(0, 0, g, g),
            m.submatrix(0, g, g, g),
            m.submatrix(g, 0, g, g),
            m.submatrix(g, g, g, g),
        )
    }

    /// Determinant of the gluing matrix; equals `(−1)^g` for valid data.
    pub fn determinant(&self) -> BigInt {
        self.gluing_matrix()
            .determinant()
            .expect("gluing matrix is square")
    }

    /// Lens space L(p, q). `lens(1, 0)` is S³ and `lens(0, 1)` is S¹×S².
    ///
    /// `(r, s)` solves `p·s − q·r = 1` with `|r|` minimal; remaining ties go to
    /// the smallest `s ≥ 0`. Negative `p` is normalized to `(−p, −q)`.
    pub fn lens(p: i64, q: i64) -> Result<Self, SplittingError> {
        if p.gcd(&q) != 1 {
            return Err(SplittingError::NotCoprime { p, q });
        }
        let (p, q) = if p < 0 { (-p, -q) } else { (p, q) };
        let (r, s) = lens_completion(p, q);
        let one = |x: i64| IntMatrix::diagonal(&[x]);
        Ok(
            validate(one(r), one(p), one(s), one(q))
                .expect("lens completion satisfies ps - qr = 1"),
        )
    }

    pub fn sphere() -> Self {
        Self::lens(1, 0).expect("coprime")
    }

    pub fn s1_x_s2() -> Self {
        Self::lens(0, 1).expect("coprime")
    }

    /// Block-diagonal combination of two splittings.
    pub fn connected_sum(&self, other: &Self) -> Self {
        let d = IntMatrix::block_diag;
        GluingData {
            genus: self.genus + other.genus,
            r: d(&self.r, &other.r),
            p: d(&self.p, &other.p),
            s: d(&self.s, &other.s),
            q: d(&self.q, &other.q),
        }
    }

    /// Connected sum with the genus-1 splitting of S³.
    pub fn stabilize(&self) -> Self {
        self.connected_sum(&Self::sphere())
    }

    /// `M = M₀ · W` where `M₀ = [[0, I], [I, 0]]` and `W` is a seeded random
    /// word of length `word_length` in elementary symplectic generators.
    pub fn random_splitting(
        genus: usize,
        seed: u64,
        word_length: usize,
    ) -> Result<Self, SplittingError> {
        if genus == 0 {
            return Err(SplittingError::ZeroGenus);
        }
        let generators = SymplecticGenerator::all(genus);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let i = IntMatrix::identity(genus);
        let z = IntMatrix::zeros(genus, genus);
        let mut m = IntMatrix::block_2x2(&z, &i, &i, &z).expect("square blocks");
        for _ in 0..word_length {
            let generator = generators[rng.gen_range(0..generators.len())];
            let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
            m = &m * &generator.matrix(genus, sign);
        }
        Self::from_gluing_matrix(&m)
    }
}

fn lens_completion(p: i64, q: i64) -> (i64, i64) {
    if p == 0 {
        // −q·r = 1 with q = ±1
        return (-q, 0);
    }
    // r ≡ −q⁻¹ (mod p)
    let inv = BigInt::from(q).extended_gcd(&BigInt::from(p)).x;
    let r0 = (-inv).mod_floor(&BigInt::from(p));
    let r0: i64 = r0.try_into().expect("residue below p");
    let candidates = [r0, r0 - p];
    let best = candidates
        .iter()
        .map(|r| r.abs())
        .min()
        .expect("two candidates");
    candidates
        .iter()
        .filter(|r| r.abs() == best)
        .map(|&r| (r, (1 + q * r) / p))
        .min_by_key(|&(_, s)| (s < 0, s.abs()))
        .expect("at least one candidate")
}

#[derive(Clone, Copy, Debug)]
enum SymplecticGenerator {
    /// `[[I, E], [0, I]]` with `E = E_ij + E_ji` (or `E_ii`).
    Upper(usize, usize),
    /// `[[I, 0], [E, I]]`
    Lower(usize, usize),
    /// `[[I + E_ij, 0], [0, I − E_ji]]`, `i ≠ j`
    Mix(usize, usize),
}

impl SymplecticGenerator {
    fn all(genus: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for i in 0..genus {
            for j in i..genus {
                out.push(Self::Upper(i, j));
                out.push(Self::Lower(i, j));
            }
            for j in 0..genus {
                if i != j {
                    out.push(Self::Mix(i, j));
                }
            }
        }
        out
    }

    /// The generator (`sign = 1`) or its inverse (`sign = −1`).
    fn matrix(self, genus: usize, sign: i64) -> IntMatrix {
        let mut m = IntMatrix::identity(2 * genus);
        let c = BigInt::from(sign);
        match self {
            Self::Upper(i, j) => {
                m[(i, genus + j)] = c.clone();
                m[(j, genus + i)] = c;
            }
            Self::Lower(i, j) => {
                m[(genus + i, j)] = c.clone();
                m[(genus + j, i)] = c;
            }
            Self::Mix(i, j) => {
                m[(i, j)] = c.clone();
                m[(genus + j, genus + i)] = -c;
            }
        }
        m
    }
}
