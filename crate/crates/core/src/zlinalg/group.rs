//! Finitely generated abelian groups in canonical invariant-factor form.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::zlinalg::matrix::Matrix;
use crate::zlinalg::snf::smith_normal_form;

/// `ℤ_{t₁} ⊕ … ⊕ ℤ_{t_k} ⊕ ℤ^rank` with `2 ≤ t₁ | t₂ | … | t_k`.
///
/// The representation is canonical: two groups are isomorphic iff they are
/// equal as values. Generators are ordered torsion first, then free.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinAbGroup<S> {
    torsion: Vec<S>,
    rank: usize,
}

impl<S: Scalar> FinAbGroup<S> {
    /// Validates and builds a canonical group.
    pub fn new(torsion: Vec<S>, rank: usize) -> Result<Self> {
        let two = S::from_int(2);
        for (i, t) in torsion.iter().enumerate() {
            if *t < two {
                return Err(Error::NotCanonical(format!("torsion coefficient {t} is below 2")));
            }
            if i > 0 && !t.is_multiple_of(&torsion[i - 1]) {
                return Err(Error::NotCanonical(format!(
                    "torsion coefficients {} and {t} break the divisibility chain",
                    torsion[i - 1]
                )));
            }
        }
        Ok(FinAbGroup { torsion, rank })
    }

    /// The trivial group.
    pub fn zero() -> Self {
        FinAbGroup { torsion: Vec::new(), rank: 0 }
    }

    /// `ℤ^rank`.
    pub fn free(rank: usize) -> Self {
        FinAbGroup { torsion: Vec::new(), rank }
    }

    /// `ℤ_k`, which is the trivial group for `k = 1` and `ℤ` for `k = 0`.
    pub fn cyclic(k: S) -> Self {
        Self::from_orders(&[k])
    }

    /// Canonical form of `⊕ ℤ_{k_i}` for arbitrary orders (`0` meaning `ℤ`).
    pub fn from_orders(orders: &[S]) -> Self {
        let diag = Matrix::diagonal(orders);
        group_from_presentation(&diag)
    }

    pub fn torsion(&self) -> &[S] {
        &self.torsion
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of canonical generators.
    pub fn ngens(&self) -> usize {
        self.torsion.len() + self.rank
    }

    /// Order of generator `i` (`0` for a free generator).
    pub fn invariant(&self, i: usize) -> S {
        if i < self.torsion.len() {
            self.torsion[i].clone()
        } else {
            S::zero()
        }
    }

    /// All generator orders, `0` for free generators.
    pub fn invariants(&self) -> Vec<S> {
        (0..self.ngens()).map(|i| self.invariant(i)).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.ngens() == 0
    }

    pub fn is_finite(&self) -> bool {
        self.rank == 0
    }

    /// Group order, or `None` if the group is infinite.
    pub fn order(&self) -> Option<S> {
        self.is_finite().then(|| self.torsion.iter().fold(S::one(), |a, t| a * t.clone()))
    }

    /// Order as a machine integer when finite and small enough.
    pub fn order_usize(&self) -> Option<usize> {
        self.order().and_then(|o| o.to_usize())
    }

    /// Reduces a coordinate vector into canonical range.
    pub fn reduce(&self, v: &[S]) -> Vec<S> {
        assert_eq!(v.len(), self.ngens(), "element length mismatch");
        v.iter().enumerate().map(|(i, x)| x.reduce_mod(&self.invariant(i))).collect()
    }

    /// True if the (reduced) vector is the zero element.
    pub fn is_zero_element(&self, v: &[S]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Diagonal relation matrix of the torsion generators (one column per torsion generator).
    pub fn relation_matrix(&self) -> Matrix<S> {
        let mut m = Matrix::zeros(self.ngens(), self.torsion.len());
        for (i, t) in self.torsion.iter().enumerate() {
            m.set(i, i, t.clone());
        }
        m
    }

    /// Enumerates all elements of a finite group in mixed-radix order.
    pub fn elements(&self) -> Result<Vec<Vec<S>>> {
        self.elements_bounded(usize::MAX)
    }

    /// As [`Self::elements`], failing if the group is infinite or larger than `bound`.
    pub fn elements_bounded(&self, bound: usize) -> Result<Vec<Vec<S>>> {
        if !self.is_finite() {
            return Err(Error::Infinite(format!("cannot enumerate {self}")));
        }
        let order = self.order_usize().filter(|&o| o <= bound).ok_or_else(|| {
            Error::BoundExceeded(format!("group {self} is larger than the enumeration bound {bound}"))
        })?;
        let mut out = Vec::with_capacity(order);
        let mut cur = vec![S::zero(); self.ngens()];
        for _ in 0..order {
            out.push(cur.clone());
            for (i, t) in self.torsion.iter().enumerate() {
                cur[i] = cur[i].clone() + S::one();
                if cur[i] < *t {
                    break;
                }
                cur[i] = S::zero();
            }
        }
        Ok(out)
    }

    /// Exponent-style order of an element of the torsion part (`None` if of infinite order).
    pub fn element_order(&self, v: &[S]) -> Option<S> {
        let v = self.reduce(v);
        if v[self.torsion.len()..].iter().any(|x| !x.is_zero()) {
            return None;
        }
        Some(self.torsion.iter().zip(&v).fold(S::one(), |acc, (t, x)| {
            let o = t.clone() / x.gcd(t);
            acc.lcm(&o)
        }))
    }
}

/// Canonical form of `ℤ^m / (column span of relations)`.
pub fn group_from_presentation<S: Scalar>(relations: &Matrix<S>) -> FinAbGroup<S> {
    Presentation::new(relations).group
}

/// A presented group together with the coordinate change to its canonical form.
#[derive(Clone, Debug)]
pub struct Presentation<S> {
    pub group: FinAbGroup<S>,
    /// `canonical × m`: maps presentation coordinates to canonical coordinates.
    pub proj: Matrix<S>,
    /// `m × canonical`: presentation coordinates of each canonical generator.
    pub lifts: Matrix<S>,
}

impl<S: Scalar> Presentation<S> {
    /// Computes the canonical form of `ℤ^m / span(relations)`.
    pub fn new(relations: &Matrix<S>) -> Self {
        let m = relations.rows();
        let snf = smith_normal_form(relations);
        let r = snf.rank();
        let mut keep = Vec::new();
        let mut torsion = Vec::new();
        for i in 0..m {
            if i < r {
                if !snf.invariant_factors[i].is_one() {
                    keep.push(i);
                    torsion.push(snf.invariant_factors[i].clone());
                }
            } else {
                keep.push(i);
            }
        }
        let group = FinAbGroup { torsion, rank: m - r };
        let mut proj = snf.u.select_rows(&keep);
        proj.reduce_rows(&group.invariants());
        let lifts = snf.u_inv.select_cols(&keep);
        Presentation { group, proj, lifts }
    }
}

impl<S: fmt::Display + PartialEq> fmt::Display for FinAbGroup<S> {
    /// Renders e.g. `Z_2^2+Z_4+Z`, `0` for the trivial group.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.torsion.is_empty() && self.rank == 0 {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.torsion.len() {
            let t = &self.torsion[i];
            let mut j = i;
            while j < self.torsion.len() && self.torsion[j] == *t {
                j += 1;
            }
            let mult = j - i;
            parts.push(if mult == 1 { format!("Z_{t}") } else { format!("Z_{t}^{mult}") });
            i = j;
        }
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        write!(f, "{}", parts.join("+"))
    }
}

impl<S: fmt::Debug> fmt::Debug for FinAbGroup<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FinAbGroup(torsion={:?}, rank={})", self.torsion, self.rank)
    }
}
