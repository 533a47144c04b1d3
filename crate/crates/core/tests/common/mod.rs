//! Shared generators and checks for the property suite and the acceptance run.

#![allow(dead_code)]

use std::collections::BTreeSet;

use crt_core::zlinalg::{
    hom_cokernel, hom_image, hom_kernel, oracle_enumerate, smith_normal_form, FinAbGroup, GroupHom, Matrix,
};
use crt_core::Int;
use proptest::prelude::*;

/// Random integer matrices up to 6×6 with entries in `[-20, 20]`.
pub fn matrix_strategy() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-20i64..=20, c), r))
}

pub fn to_matrix(rows: &[Vec<i64>]) -> Matrix<Int> {
    let cols = rows[0].len();
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Int::from(x)).collect()).collect(), cols)
}

/// Checks `U·A·V = D`, unimodularity of `U` and `V`, and the divisibility chain.
pub fn check_snf(a: &Matrix<Int>) -> Result<(), String> {
    let s = smith_normal_form(a);
    if &(&s.u * a) * &s.v != s.d {
        return Err("U·A·V ≠ D".into());
    }
    for (name, m) in [("U", &s.u), ("V", &s.v)] {
        let det = m.determinant();
        if det != Int::from(1) && det != Int::from(-1) {
            return Err(format!("{name} has determinant {det}"));
        }
    }
    if &s.u * &s.u_inv != Matrix::identity(s.u.rows()) {
        return Err("U⁻¹ is not the inverse of U".into());
    }
    for i in 0..s.d.rows() {
        for j in 0..s.d.cols() {
            let x = s.d.get(i, j);
            let expect = if i == j && i < s.invariant_factors.len() { s.invariant_factors[i].clone() } else { Int::from(0) };
            if *x != expect {
                return Err(format!("D[{i},{j}] = {x}, expected {expect}"));
            }
        }
    }
    for w in s.invariant_factors.windows(2) {
        if w[0] <= Int::from(0) || (&w[1] % &w[0]) != Int::from(0) {
            return Err(format!("divisibility chain broken: {} then {}", w[0], w[1]));
        }
    }
    if s.invariant_factors.last().is_some_and(|x| *x <= Int::from(0)) {
        return Err("non-positive invariant factor".into());
    }
    Ok(())
}

/// Invariant-factor chains of finite groups of order at most 64.
pub fn group_strategy() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(2i64..=8, 0..=3).prop_map(|mut v| {
        // Turn arbitrary factors into a divisibility chain d1 | d2 | ... with product ≤ 64.
        v.sort();
        let mut chain: Vec<i64> = Vec::new();
        let mut order = 1;
        for x in v {
            let next = match chain.last() {
                Some(&p) => p * (x / p).max(1),
                None => x,
            };
            if order * next > 64 {
                break;
            }
            order *= next;
            chain.push(next);
        }
        chain
    })
}

fn group(chain: &[i64]) -> FinAbGroup<Int> {
    FinAbGroup::from_orders(&chain.iter().map(|&x| Int::from(x)).collect::<Vec<_>>())
}

/// A well-defined homomorphism: raw images are scaled so that each column is
/// killed by the order of its domain generator.
pub fn hom_strategy() -> impl Strategy<Value = (Vec<i64>, Vec<i64>, Vec<Vec<i64>>)> {
    (group_strategy(), group_strategy()).prop_flat_map(|(d, c)| {
        let (nd, nc) = (d.len(), c.len());
        (Just(d), Just(c), prop::collection::vec(prop::collection::vec(0i64..64, nd), nc))
    })
}

pub fn to_hom(d: &[i64], c: &[i64], raw: &[Vec<i64>]) -> GroupHom<Int> {
    let mut rows = Vec::new();
    for (i, ci) in c.iter().enumerate() {
        let mut row = Vec::new();
        for (j, dj) in d.iter().enumerate() {
            let step = ci / num_integer::gcd(*ci, *dj);
            row.push(Int::from((raw[i][j] * step) % ci));
        }
        rows.push(row);
    }
    GroupHom::new(group(d), group(c), Matrix::from_rows(rows, d.len())).expect("scaled images are well defined")
}

fn subgroup_elements(g: &FinAbGroup<Int>, incl: &GroupHom<Int>) -> BTreeSet<Vec<Int>> {
    g.elements().unwrap().iter().map(|x| incl.apply(x)).collect()
}

/// Compares kernel, image and cokernel with exhaustive enumeration.
pub fn check_against_oracle(f: &GroupHom<Int>) -> Result<(), String> {
    let (ker_o, im_o) = oracle_enumerate(f).map_err(|e| e.to_string())?;
    let ker_o: BTreeSet<Vec<Int>> = ker_o.into_iter().collect();
    let im_o: BTreeSet<Vec<Int>> = im_o.into_iter().collect();
    let (kg, ki) = hom_kernel(f);
    if subgroup_elements(&kg, &ki) != ker_o || kg.order_usize() != Some(ker_o.len()) {
        return Err(format!("kernel mismatch for {f}: {kg}"));
    }
    let (ig, ii) = hom_image(f);
    if subgroup_elements(&ig, &ii) != im_o || ig.order_usize() != Some(im_o.len()) {
        return Err(format!("image mismatch for {f}: {ig}"));
    }
    let (cg, proj) = hom_cokernel(f);
    let total = f.codomain().order_usize().unwrap();
    if cg.order_usize() != Some(total / im_o.len()) {
        return Err(format!("cokernel order mismatch for {f}: {cg}"));
    }
    if im_o.iter().any(|y| !cg.is_zero_element(&proj.apply(y))) || !proj.is_surjective() {
        return Err(format!("cokernel projection wrong for {f}"));
    }
    Ok(())
}
