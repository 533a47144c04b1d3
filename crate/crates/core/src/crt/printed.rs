//! Modules given in printed form: groups as lists of cyclic orders in a fixed
//! generator order, operations as matrices acting on coordinate columns.
//!
//! Printed generators may be degenerate (order 1, i.e. zero) or listed in any
//! order (e.g. a free generator before a torsion one); the normalizer converts
//! everything to canonical groups.

use crate::crt::{wrap, CrtModule, Op, WINDOW};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::zlinalg::{GroupHom, Matrix, Presentation};

/// A module in printed coordinates.
#[derive(Clone, Debug)]
pub struct PrintedModule<S> {
    /// `groups[part][n]`: orders of the printed generators (`0` = infinite cyclic, `1` = zero).
    pub groups: [Vec<Vec<S>>; 3],
    /// `ops[op][n]`: printed matrix of the operation (rows = target generators).
    pub ops: Vec<Vec<Matrix<S>>>,
}

impl<S: Scalar> PrintedModule<S> {
    /// Validates the printed data and converts it to a canonical [`CrtModule`].
    ///
    /// Each printed matrix must be well-defined with respect to the printed
    /// orders; the canonical matrix is `P_tgt · M · L_src`, where `P` maps
    /// printed coordinates to canonical ones and `L` lifts canonical
    /// generators to printed coordinates.
    pub fn normalize(&self) -> Result<CrtModule<S>> {
        if self.groups.iter().any(|g| g.len() != WINDOW)
            || self.ops.len() != Op::ALL.len()
            || self.ops.iter().any(|f| f.len() != WINDOW)
        {
            return Err(Error::Shape("printed module needs 8 degrees for each part and operation".into()));
        }
        let pres: [Vec<Presentation<S>>; 3] = std::array::from_fn(|p| {
            self.groups[p].iter().map(|orders| Presentation::new(&Matrix::diagonal(orders))).collect()
        });
        let groups = std::array::from_fn(|p| pres[p].iter().map(|x| x.group.clone()).collect());
        let mut mats = Vec::new();
        for op in Op::ALL {
            let mut fam = Vec::new();
            for n in 0..WINDOW {
                let t = wrap(n as i64 + op.shift());
                let src_orders = &self.groups[op.source().index()][n];
                let tgt_orders = &self.groups[op.target().index()][t];
                let m = &self.ops[op.index()][n];
                let what = format!("{}_{n}", op.name());
                check_printed(m, src_orders, tgt_orders, &what)?;
                let src = &pres[op.source().index()][n];
                let tgt = &pres[op.target().index()][t];
                fam.push(&(&tgt.proj * m) * &src.lifts);
            }
            mats.push(fam);
        }
        CrtModule::from_matrices(groups, mats)
    }
}

/// Shape and well-definedness of a printed matrix with respect to printed orders.
fn check_printed<S: Scalar>(m: &Matrix<S>, src: &[S], tgt: &[S], what: &str) -> Result<()> {
    if m.rows() != tgt.len() || m.cols() != src.len() {
        return Err(Error::Shape(format!(
            "{what}: printed matrix is {}x{}, expected {}x{}",
            m.rows(),
            m.cols(),
            tgt.len(),
            src.len()
        )));
    }
    for (i, e) in tgt.iter().enumerate() {
        for (j, d) in src.iter().enumerate() {
            let prod = m.get(i, j).clone() * d.clone();
            let ok = if e.is_zero() { prod.is_zero() } else { prod.is_multiple_of(e) };
            if !ok {
                return Err(Error::IllDefined(format!(
                    "{what}: entry ({i},{j}) = {} is not well-defined from order {d} to order {e}",
                    m.get(i, j)
                )));
            }
        }
    }
    Ok(())
}

/// Converts a printed homomorphism between printed groups to canonical form.
pub fn normalize_hom<S: Scalar>(m: &Matrix<S>, src: &[S], tgt: &[S]) -> Result<GroupHom<S>> {
    check_printed(m, src, tgt, "map")?;
    let ps = Presentation::new(&Matrix::diagonal(src));
    let pt = Presentation::new(&Matrix::diagonal(tgt));
    GroupHom::new(ps.group, pt.group, &(&pt.proj * m) * &ps.lifts)
}
