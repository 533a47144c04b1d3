//! Independent brute-force oracle over finite groups, used to cross-check the
//! Smith-normal-form machinery.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::zlinalg::hom::GroupHom;

/// Largest group order the oracle will enumerate.
pub const ORACLE_BOUND: usize = 4096;

/// Exhaustive kernel and image element lists of a map between finite groups.
///
/// Elements are reduced coordinate vectors; both lists are sorted and
/// duplicate-free.
pub fn oracle_enumerate<S: Scalar>(f: &GroupHom<S>) -> Result<(Vec<Vec<S>>, Vec<Vec<S>>)> {
    for g in [f.domain(), f.codomain()] {
        if !g.is_finite() {
            return Err(Error::Infinite(format!("oracle needs finite groups, got {g}")));
        }
    }
    let elems = f.domain().elements_bounded(ORACLE_BOUND)?;
    f.codomain().elements_bounded(ORACLE_BOUND)?;
    let mut kernel = BTreeSet::new();
    let mut image = BTreeSet::new();
    for x in elems {
        let y = f.apply(&x);
        if y.iter().all(|v| v.is_zero()) {
            kernel.insert(x);
        }
        image.insert(y);
    }
    Ok((kernel.into_iter().collect(), image.into_iter().collect()))
}

/// Brute-force exactness of `A --f--> B --g--> C` at `B` by element enumeration.
pub fn oracle_is_exact<S: Scalar>(f: &GroupHom<S>, g: &GroupHom<S>) -> Result<bool> {
    let (_, im) = oracle_enumerate(f)?;
    let (ker, _) = oracle_enumerate(g)?;
    Ok(im == ker)
}
