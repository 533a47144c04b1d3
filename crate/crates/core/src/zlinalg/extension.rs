//! Brute-force classification of abelian group extensions at desk scale.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::zlinalg::group::FinAbGroup;
use crate::zlinalg::hom::{cokernel, GroupHom};
use crate::zlinalg::matrix::Matrix;

/// Default bound on `|sub|·|quot|` for [`extension_candidates`].
pub const EXTENSION_BOUND: usize = 4096;

/// All abelian groups of order `n`, sorted canonically.
pub fn abelian_groups_of_order<S: Scalar>(n: usize) -> Vec<FinAbGroup<S>> {
    assert!(n >= 1, "group order must be positive");
    // Prime factorisation by trial division (n is small).
    let mut factors: Vec<(usize, u32)> = Vec::new();
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        let mut e = 0;
        while m % p == 0 {
            m /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
        p += 1;
    }
    if m > 1 {
        factors.push((m, 1));
    }
    // For each prime, every partition of its exponent gives a p-group.
    let mut combos: Vec<Vec<usize>> = vec![Vec::new()];
    for (p, e) in factors {
        let parts = partitions(e, e);
        let mut next = Vec::new();
        for base in &combos {
            for part in &parts {
                let mut orders = base.clone();
                orders.extend(part.iter().map(|&k| p.pow(k)));
                next.push(orders);
            }
        }
        combos = next;
    }
    let mut out: Vec<FinAbGroup<S>> = combos
        .into_iter()
        .map(|orders| {
            let orders: Vec<S> = orders.into_iter().map(|o| S::from_int(o as i64)).collect();
            FinAbGroup::from_orders(&orders)
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Partitions of `n` into parts of size at most `max`, parts non-increasing.
fn partitions(n: u32, max: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=max.min(n)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// All isomorphism classes `G` admitting `0 → sub → G → quot → 0`.
///
/// Candidates are all abelian groups of order `|sub|·|quot|`; a candidate is
/// accepted when some injection `sub → G` has cokernel isomorphic to `quot`.
pub fn extension_candidates<S: Scalar>(
    sub: &FinAbGroup<S>,
    quot: &FinAbGroup<S>,
) -> Result<Vec<FinAbGroup<S>>> {
    extension_candidates_bounded(sub, quot, EXTENSION_BOUND)
}

/// As [`extension_candidates`] with an explicit bound on the extension order.
pub fn extension_candidates_bounded<S: Scalar>(
    sub: &FinAbGroup<S>,
    quot: &FinAbGroup<S>,
    bound: usize,
) -> Result<Vec<FinAbGroup<S>>> {
    for g in [sub, quot] {
        if !g.is_finite() {
            return Err(Error::Infinite(format!("extension of infinite group {g}")));
        }
    }
    let n = match (sub.order_usize(), quot.order_usize()) {
        (Some(a), Some(b)) => a.checked_mul(b).filter(|&n| n <= bound),
        _ => None,
    }
    .ok_or_else(|| Error::BoundExceeded(format!("|{sub}|·|{quot}| exceeds {bound}")))?;
    let mut out = Vec::new();
    for g in abelian_groups_of_order::<S>(n) {
        if admits_extension(sub, &g, quot)? {
            out.push(g);
        }
    }
    Ok(out)
}

/// Searches for an injection `sub → g` whose cokernel is `quot`.
fn admits_extension<S: Scalar>(sub: &FinAbGroup<S>, g: &FinAbGroup<S>, quot: &FinAbGroup<S>) -> Result<bool> {
    let elems = g.elements()?;
    // Candidate images of generator i: elements killed by its order.
    let cands: Vec<Vec<&Vec<S>>> = sub
        .torsion()
        .iter()
        .map(|t| {
            elems
                .iter()
                .filter(|x| g.element_order(x).is_some_and(|o| t.is_multiple_of(&o)))
                .collect()
        })
        .collect();
    let mut idx = vec![0usize; cands.len()];
    if cands.iter().any(|c| c.is_empty()) {
        return Ok(false);
    }
    loop {
        let cols: Vec<Vec<S>> = idx.iter().zip(&cands).map(|(&i, c)| c[i].clone()).collect();
        let m = Matrix::from_columns(&cols, g.ngens());
        let f = GroupHom::new(sub.clone(), g.clone(), m)?;
        if f.is_injective() && cokernel(&f).group == *quot {
            return Ok(true);
        }
        // Odometer increment.
        let mut k = 0;
        loop {
            if k == idx.len() {
                return Ok(false);
            }
            idx[k] += 1;
            if idx[k] < cands[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

