use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

/// `A = U · D · V` with `U`, `V` unimodular and `D` rectangular-diagonal.
///
/// The nonzero diagonal entries of `D` are positive, each divides the next and
/// zeros trail. `U` and `V` depend on the pivoting order; `D` does not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    /// Exact inverse of `v`, accumulated alongside it.
    pub v_inv: IntMatrix,
}

impl SmithDecomposition {
    /// Diagonal of `D`, of length `min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        let n = self.d.rows().min(self.d.cols());
        (0..n).map(|i| self.d[(i, i)].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().take_while(|x| !x.is_zero()).count()
    }
}

/// Smith normal form by smallest-pivot elimination over arbitrary-precision integers.
pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let (m, n) = (a.rows(), a.cols());
    let mut w = Work {
        d: a.clone(),
        u: IntMatrix::identity(m),
        v: IntMatrix::identity(n),
        v_inv: IntMatrix::identity(n),
    };

    for t in 0..m.min(n) {
        let Some((pi, pj)) =
            smallest_nonzero(&w.d, (t..m).flat_map(|i| (t..n).map(move |j| (i, j))))
        else {
            break;
        };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);

        loop {
            let pivot = w.d[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..m {
                if !w.d[(i, t)].is_zero() {
                    let q = &w.d[(i, t)] / &pivot;
                    w.add_row_multiple(i, t, &-q);
                    clean &= w.d[(i, t)].is_zero();
                }
            }
            for j in t + 1..n {
                if !w.d[(t, j)].is_zero() {
                    let q = &w.d[(t, j)] / &pivot;
                    w.add_col_multiple(j, t, &-q);
                    clean &= w.d[(t, j)].is_zero();
                }
            }
            if !clean {
                let cross = (t..m).map(|i| (i, t)).chain((t + 1..n).map(|j| (t, j)));
                let (pi, pj) = smallest_nonzero(&w.d, cross).expect("pivot is nonzero");
                w.swap_rows(t, pi);
                w.swap_cols(t, pj);
                continue;
            }
            // row and column are clear; enforce divisibility of the remaining block
            let offender = (t + 1..m)
                .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !w.d[(i, j)].is_multiple_of(&pivot));
            match offender {
                Some((i, _)) => w.add_row_multiple(t, i, &BigInt::one()),
                None => break,
            }
        }
        if w.d[(t, t)].is_negative() {
            w.negate_row(t);
        }
    }

    SmithDecomposition {
        u: w.u,
        d: w.d,
        v: w.v,
        v_inv: w.v_inv,
    }
}

/// Basis of the lattice `{x ∈ Z^cols : A x = 0}`, saturated by construction.
///
/// The basis vectors are the columns of `V⁻¹` sitting over the zero diagonal
/// entries of `D` in `A = U D V`.
pub fn integer_kernel(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(a);
    (snf.rank()..a.cols())
        .map(|j| snf.v_inv.column(j))
        .collect()
}

fn smallest_nonzero(
    d: &IntMatrix,
    positions: impl Iterator<Item = (usize, usize)>,
) -> Option<(usize, usize)> {
    positions
        .filter(|&p| !d[p].is_zero())
        .min_by(|&a, &b| d[a].abs().cmp(&d[b].abs()))
}

/// Working state that keeps `A = U · D · V` true after every elementary step.
struct Work {
    d: IntMatrix,
    u: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.d.swap_rows(i, j);
        self.u.swap_cols(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.d.swap_cols(i, j);
        self.v.swap_rows(i, j);
        self.v_inv.swap_cols(i, j);
    }

    /// row[dst] += c * row[src] on D, compensated on U.
    fn add_row_multiple(&mut self, dst: usize, src: usize, c: &BigInt) {
        self.d.add_row_multiple(dst, src, c);
        self.u.add_col_multiple(src, dst, &-c);
    }

    /// col[dst] += c * col[src] on D, compensated on V and V⁻¹.
    fn add_col_multiple(&mut self, dst: usize, src: usize, c: &BigInt) {
        self.d.add_col_multiple(dst, src, c);
        self.v.add_row_multiple(src, dst, &-c);
        self.v_inv.add_col_multiple(dst, src, c);
    }

    fn negate_row(&mut self, i: usize) {
        self.d.negate_row(i);
        self.u.negate_col(i);
    }
}
