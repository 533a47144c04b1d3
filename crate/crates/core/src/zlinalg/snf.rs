//! Smith normal form with unimodular transforms.

use crate::scalar::Scalar;
use crate::zlinalg::matrix::Matrix;

/// `U · A · V = D` with `U`, `V` unimodular and `D` diagonal in divisibility order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition<S> {
    pub u: Matrix<S>,
    pub d: Matrix<S>,
    pub v: Matrix<S>,
    /// Inverse of `u`, tracked alongside it (needed to lift quotient generators).
    pub u_inv: Matrix<S>,
    /// Nonzero diagonal entries of `D` in order (leading 1s retained).
    pub invariant_factors: Vec<S>,
}

impl<S: Scalar> SmithDecomposition<S> {
    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }
}

/// Computes the Smith normal form of `a`.
///
/// Pivoting rule: at every stage the pivot is the entry of smallest nonzero
/// absolute value in the remaining block, ties broken by lowest row, then
/// lowest column. The output is therefore a deterministic function of `a`.
pub fn smith_normal_form<S: Scalar>(a: &Matrix<S>) -> SmithDecomposition<S> {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = Matrix::identity(m);
    let mut u_inv = Matrix::identity(m);
    let mut v = Matrix::identity(n);

    let mut t = 0;
    'stages: while t < m.min(n) {
        loop {
            let Some((pi, pj)) = find_pivot(&d, t) else {
                break 'stages;
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            u_inv.swap_cols(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let p = d.get(t, t).clone();
            let mut clean = true;
            for i in t + 1..m {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let q = d.get(i, t).div_floor(&p);
                let mq = -q.clone();
                d.add_row_multiple(i, t, &mq);
                u.add_row_multiple(i, t, &mq);
                u_inv.add_col_multiple(t, i, &q);
                if !d.get(i, t).is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..n {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let q = -d.get(t, j).div_floor(&p);
                d.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                if !d.get(t, j).is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // The pivot must divide every remaining entry; otherwise fold the
            // offending row into the pivot row and re-pivot.
            let offending = (t + 1..m)
                .find(|&i| (t + 1..n).any(|j| !d.get(i, j).is_multiple_of(&p)));
            if let Some(i) = offending {
                let one = S::one();
                d.add_row_multiple(t, i, &one);
                u.add_row_multiple(t, i, &one);
                u_inv.add_col_multiple(i, t, &-one);
                continue;
            }
            break;
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
            u_inv.negate_col(t);
        }
        t += 1;
    }

    let invariant_factors =
        (0..m.min(n)).map(|i| d.get(i, i).clone()).take_while(|x| !x.is_zero()).collect();
    SmithDecomposition { u, d, v, u_inv, invariant_factors }
}

fn find_pivot<S: Scalar>(d: &Matrix<S>, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, S)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let x = d.get(i, j);
            if x.is_zero() {
                continue;
            }
            let ax = x.abs();
            if best.as_ref().is_none_or(|(_, _, b)| ax < *b) {
                best = Some((i, j, ax));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

/// A basis of the integer kernel `{x ∈ ℤⁿ : A x = 0}`, as the columns of the result.
pub fn integer_kernel<S: Scalar>(a: &Matrix<S>) -> Matrix<S> {
    let snf = smith_normal_form(a);
    let r = snf.rank();
    let idx: Vec<usize> = (r..a.cols()).collect();
    snf.v.select_cols(&idx)
}

/// Solves `A x = b` over the integers, returning one solution if any exists.
pub fn solve_integer<S: Scalar>(a: &Matrix<S>, b: &[S]) -> Option<Vec<S>> {
    assert_eq!(a.rows(), b.len(), "right-hand side length mismatch");
    let snf = smith_normal_form(a);
    let ub = snf.u.apply(b);
    let r = snf.rank();
    if ub[r..].iter().any(|x| !x.is_zero()) {
        return None;
    }
    let mut w = vec![S::zero(); a.cols()];
    for i in 0..r {
        let (q, rem) = ub[i].div_rem(&snf.invariant_factors[i]);
        if !rem.is_zero() {
            return None;
        }
        w[i] = q;
    }
    Some(snf.v.apply(&w))
}
