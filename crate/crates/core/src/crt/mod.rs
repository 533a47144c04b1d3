//! CRT-modules: three periodic graded groups with the eight operations.
//!
//! All three parts are stored over the common degree window `0..8`. The Bott
//! periodicity elements act as the identity on stored coordinates, so
//! `M^U_{n+2}` and `M^U_n` are literally the same canonical group (and
//! likewise `M^T_{n+4} = M^T_n`); the periodicity relations then become
//! equality/sign constraints on the stored matrices.

mod acyclic;
mod iso;
mod json;
mod morphism;
mod printed;
mod relations;

pub use acyclic::{exactness_nodes, is_acyclic, is_free, AcyclicityReport, ExactnessNode, ExactnessSeq};
pub use iso::{automorphisms, crt_isomorphic, crt_isomorphic_with_budget, IsoWitness, DEFAULT_ISO_BUDGET};
pub use json::{group_from_json, group_to_json, hom_from_json, hom_to_json, module_from_json, module_to_json};
pub use morphism::{quotient_module, submodule, CrtMorphism};
pub use printed::{normalize_hom, PrintedModule};
pub use relations::{relation_kinds, verify_relations, RelationFailure, RelationReport, RelationKind, RelationView};

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::zlinalg::{FinAbGroup, GroupHom, Matrix, Presentation};

/// Number of stored degrees.
pub const WINDOW: usize = 8;

/// Reduces a degree into the stored window.
pub fn wrap(n: i64) -> usize {
    n.rem_euclid(WINDOW as i64) as usize
}

/// The three parts of a CRT-module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Part {
    O,
    U,
    T,
}

impl Part {
    pub const ALL: [Part; 3] = [Part::O, Part::U, Part::T];

    /// Bott period of the part.
    pub fn period(self) -> usize {
        match self {
            Part::O => 8,
            Part::U => 2,
            Part::T => 4,
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Part::O => "O",
            Part::U => "U",
            Part::T => "T",
        }
    }
}

/// The eight operations of a CRT-module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Op {
    /// Complexification `c_n : M^O_n → M^U_n`.
    C,
    /// Realification `r_n : M^U_n → M^O_n`.
    R,
    /// `ε_n : M^O_n → M^T_n`.
    Eps,
    /// `ζ_n : M^T_n → M^U_n`.
    Zeta,
    /// Complex conjugation `ψ_U`.
    PsiU,
    /// `ψ_T : M^T_n → M^T_n`.
    PsiT,
    /// `γ_n : M^U_n → M^T_{n−1}`.
    Gamma,
    /// `τ_n : M^T_n → M^O_{n+1}`.
    Tau,
}

impl Op {
    pub const ALL: [Op; 8] = [Op::C, Op::R, Op::Eps, Op::Zeta, Op::PsiU, Op::PsiT, Op::Gamma, Op::Tau];

    pub fn index(self) -> usize {
        self as usize
    }

    /// JSON key of the operation.
    pub fn name(self) -> &'static str {
        match self {
            Op::C => "c",
            Op::R => "r",
            Op::Eps => "eps",
            Op::Zeta => "zeta",
            Op::PsiU => "psiU",
            Op::PsiT => "psiT",
            Op::Gamma => "gamma",
            Op::Tau => "tau",
        }
    }

    /// Typeset symbol used in table rendering.
    pub fn symbol(self) -> &'static str {
        match self {
            Op::C => "c",
            Op::R => "r",
            Op::Eps => "ε",
            Op::Zeta => "ζ",
            Op::PsiU => "ψU",
            Op::PsiT => "ψT",
            Op::Gamma => "γ",
            Op::Tau => "τ",
        }
    }

    pub fn from_name(s: &str) -> Option<Op> {
        Op::ALL.into_iter().find(|o| o.name() == s)
    }

    pub fn source(self) -> Part {
        match self {
            Op::C | Op::Eps => Part::O,
            Op::R | Op::PsiU | Op::Gamma => Part::U,
            Op::Zeta | Op::PsiT | Op::Tau => Part::T,
        }
    }

    pub fn target(self) -> Part {
        match self {
            Op::C | Op::Zeta | Op::PsiU => Part::U,
            Op::R | Op::Tau => Part::O,
            Op::Eps | Op::PsiT | Op::Gamma => Part::T,
        }
    }

    /// Degree change of the operation.
    pub fn shift(self) -> i64 {
        match self {
            Op::Gamma => -1,
            Op::Tau => 1,
            _ => 0,
        }
    }

    /// Period of the stored matrices under the identity-β convention (`ψ_U`
    /// alternates in sign with period 2 rather than repeating).
    pub fn period(self) -> usize {
        match self {
            Op::C | Op::R | Op::Eps | Op::Tau => 8,
            Op::Zeta | Op::Gamma | Op::PsiT => 4,
            Op::PsiU => 2,
        }
    }
}

/// A CRT-module with canonical groups over the window `0..8`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CrtModule<S> {
    groups: [Vec<FinAbGroup<S>>; 3],
    ops: Vec<Vec<GroupHom<S>>>,
}

impl<S: Scalar> CrtModule<S> {
    /// Assembles a module from its groups and operation matrices.
    ///
    /// `groups[p][n]` is the group of part `p` in degree `n`; `ops[o][n]` the
    /// matrix of operation `o` (in [`Op::ALL`] order) in degree `n`. Checks
    /// part periodicity of the groups and well-definedness of every matrix.
    pub fn from_matrices(groups: [Vec<FinAbGroup<S>>; 3], ops: Vec<Vec<Matrix<S>>>) -> Result<Self> {
        Self::check_groups(&groups)?;
        if ops.len() != Op::ALL.len() || ops.iter().any(|v| v.len() != WINDOW) {
            return Err(Error::Shape("expected 8 operation families of 8 degrees each".into()));
        }
        let mut homs = Vec::with_capacity(8);
        for (op, mats) in Op::ALL.into_iter().zip(ops) {
            let mut fam = Vec::with_capacity(WINDOW);
            for (n, m) in mats.into_iter().enumerate() {
                let dom = groups[op.source().index()][n].clone();
                let cod = groups[op.target().index()][wrap(n as i64 + op.shift())].clone();
                let h = GroupHom::new(dom, cod, m)
                    .map_err(|e| Error::IllDefined(format!("{}_{n}: {e}", op.name())))?;
                fam.push(h);
            }
            homs.push(fam);
        }
        Ok(CrtModule { groups, ops: homs })
    }

    /// Assembles a module from already-built homomorphisms, checking domains and codomains.
    pub fn from_homs(groups: [Vec<FinAbGroup<S>>; 3], ops: Vec<Vec<GroupHom<S>>>) -> Result<Self> {
        Self::check_groups(&groups)?;
        if ops.len() != Op::ALL.len() || ops.iter().any(|v| v.len() != WINDOW) {
            return Err(Error::Shape("expected 8 operation families of 8 degrees each".into()));
        }
        for (op, fam) in Op::ALL.into_iter().zip(&ops) {
            for (n, h) in fam.iter().enumerate() {
                let dom = &groups[op.source().index()][n];
                let cod = &groups[op.target().index()][wrap(n as i64 + op.shift())];
                if h.domain() != dom || h.codomain() != cod {
                    return Err(Error::Shape(format!(
                        "{}_{n} maps {} -> {}, expected {dom} -> {cod}",
                        op.name(),
                        h.domain(),
                        h.codomain()
                    )));
                }
            }
        }
        Ok(CrtModule { groups, ops })
    }

    fn check_groups(groups: &[Vec<FinAbGroup<S>>; 3]) -> Result<()> {
        for p in Part::ALL {
            let g = &groups[p.index()];
            if g.len() != WINDOW {
                return Err(Error::Shape(format!("part {} needs 8 groups", p.name())));
            }
            for n in 0..WINDOW {
                if g[n] != g[n % p.period()] {
                    return Err(Error::Shape(format!(
                        "part {} is not {}-periodic: degree {n} has {} but degree {} has {}",
                        p.name(),
                        p.period(),
                        g[n],
                        n % p.period(),
                        g[n % p.period()]
                    )));
                }
            }
        }
        Ok(())
    }

    /// The zero module.
    pub fn zero() -> Self {
        let z = vec![FinAbGroup::zero(); WINDOW];
        let groups = [z.clone(), z.clone(), z];
        let ops = vec![vec![Matrix::zeros(0, 0); WINDOW]; 8];
        Self::from_matrices(groups, ops).expect("zero module is valid")
    }

    /// Group of `part` in degree `n` (any integer degree).
    pub fn group(&self, part: Part, n: i64) -> &FinAbGroup<S> {
        &self.groups[part.index()][wrap(n)]
    }

    /// The eight groups of a part over the window.
    pub fn part(&self, part: Part) -> &[FinAbGroup<S>] {
        &self.groups[part.index()]
    }

    /// Operation `op` starting in degree `n`.
    pub fn op(&self, op: Op, n: i64) -> &GroupHom<S> {
        &self.ops[op.index()][wrap(n)]
    }

    /// Identity of the group of `part` in degree `n`.
    pub fn identity(&self, part: Part, n: i64) -> GroupHom<S> {
        GroupHom::identity(self.group(part, n))
    }

    /// `η_O = τ ε : M^O_n → M^O_{n+1}`.
    pub fn eta_o(&self, n: i64) -> GroupHom<S> {
        self.op(Op::Tau, n).compose(self.op(Op::Eps, n)).expect("η_O composable")
    }

    /// `η_T = γ β_U ζ : M^T_n → M^T_{n+1}`.
    pub fn eta_t(&self, n: i64) -> GroupHom<S> {
        self.op(Op::Gamma, n + 2).compose(self.op(Op::Zeta, n)).expect("η_T composable")
    }

    /// `ξ = r β_U² c : M^O_n → M^O_{n+4}`.
    pub fn xi(&self, n: i64) -> GroupHom<S> {
        self.op(Op::R, n + 4).compose(self.op(Op::C, n)).expect("ξ composable")
    }

    /// `ω = β_T γ ζ : M^T_n → M^T_{n+3}`.
    pub fn omega(&self, n: i64) -> GroupHom<S> {
        self.op(Op::Gamma, n).compose(self.op(Op::Zeta, n)).expect("ω composable")
    }

    /// True if every group is trivial.
    pub fn is_zero(&self) -> bool {
        self.groups.iter().all(|p| p.iter().all(|g| g.is_trivial()))
    }

    /// True if every group is finite.
    pub fn is_finite(&self) -> bool {
        self.groups.iter().all(|p| p.iter().all(|g| g.is_finite()))
    }

    /// Operation matrices, `[op][degree]`.
    pub fn op_matrices(&self) -> Vec<Vec<Matrix<S>>> {
        self.ops.iter().map(|fam| fam.iter().map(|h| h.matrix().clone()).collect()).collect()
    }

    /// Group lists per part.
    pub fn groups(&self) -> [Vec<FinAbGroup<S>>; 3] {
        self.groups.clone()
    }

    /// Orders of all groups in a part, `None` for infinite groups.
    pub fn orders(&self, part: Part) -> Vec<Option<S>> {
        self.part(part).iter().map(|g| g.order()).collect()
    }
}

/// `Σ^s M`, i.e. `(Σ^s M)_k = M_{k+s}` in every part, with all operations shifted alike.
pub fn suspend<S: Scalar>(m: &CrtModule<S>, s: i64) -> CrtModule<S> {
    let groups = std::array::from_fn(|p| (0..WINDOW).map(|k| m.groups[p][wrap(k as i64 + s)].clone()).collect());
    let ops = m
        .ops
        .iter()
        .map(|fam| (0..WINDOW).map(|k| fam[wrap(k as i64 + s)].clone()).collect())
        .collect();
    CrtModule { groups, ops }
}

/// Direct sum of modules with its canonical inclusions and projections.
#[derive(Clone, Debug)]
pub struct DirectSum<S> {
    pub module: CrtModule<S>,
    /// `inclusions[i]`: summand `i` into the sum.
    pub inclusions: Vec<CrtMorphism<S>>,
    /// `projections[i]`: the sum onto summand `i`.
    pub projections: Vec<CrtMorphism<S>>,
}

/// Degreewise direct sum `M ⊕ N`.
pub fn direct_sum<S: Scalar>(m: &CrtModule<S>, n: &CrtModule<S>) -> CrtModule<S> {
    direct_sum_many(&[m.clone(), n.clone()]).module
}

/// Direct sum of any number of modules, in canonical form, with structure maps.
pub fn direct_sum_many<S: Scalar>(summands: &[CrtModule<S>]) -> DirectSum<S> {
    // Per part and degree: canonical presentation of the block group.
    let mut pres: [Vec<Presentation<S>>; 3] = Default::default();
    let mut offsets: [Vec<Vec<usize>>; 3] = Default::default();
    for p in Part::ALL {
        for n in 0..WINDOW {
            let mut orders = Vec::new();
            let mut offs = Vec::new();
            for s in summands {
                offs.push(orders.len());
                orders.extend(s.groups[p.index()][n].invariants());
            }
            offs.push(orders.len());
            pres[p.index()].push(Presentation::new(&Matrix::diagonal(&orders)));
            offsets[p.index()].push(offs);
        }
    }
    let groups: [Vec<FinAbGroup<S>>; 3] =
        std::array::from_fn(|p| pres[p].iter().map(|pr| pr.group.clone()).collect());
    let mut ops = Vec::new();
    for op in Op::ALL {
        let mut fam = Vec::new();
        for n in 0..WINDOW {
            let t = wrap(n as i64 + op.shift());
            let mut block = Matrix::zeros(0, 0);
            for s in summands {
                block = block.block_diag(s.op(op, n as i64).matrix());
            }
            let src = &pres[op.source().index()][n];
            let tgt = &pres[op.target().index()][t];
            let m = &(&tgt.proj * &block) * &src.lifts;
            let h = GroupHom::new(src.group.clone(), tgt.group.clone(), m).expect("direct sum operation is well-defined");
            fam.push(h);
        }
        ops.push(fam);
    }
    let module = CrtModule { groups, ops };
    let mut inclusions = Vec::new();
    let mut projections = Vec::new();
    for (i, s) in summands.iter().enumerate() {
        let mut inc: [Vec<GroupHom<S>>; 3] = Default::default();
        let mut prj: [Vec<GroupHom<S>>; 3] = Default::default();
        for p in Part::ALL {
            for n in 0..WINDOW {
                let pr = &pres[p.index()][n];
                let offs = &offsets[p.index()][n];
                let (lo, hi) = (offs[i], offs[i + 1]);
                let total = *offs.last().unwrap();
                // Block coordinates of the summand.
                let mut emb = Matrix::zeros(total, hi - lo);
                let mut sel = Matrix::zeros(hi - lo, total);
                for k in 0..hi - lo {
                    emb.set(lo + k, k, S::one());
                    sel.set(k, lo + k, S::one());
                }
                let g = &s.groups[p.index()][n];
                inc[p.index()].push(
                    GroupHom::new(g.clone(), pr.group.clone(), &pr.proj * &emb).expect("inclusion is well-defined"),
                );
                prj[p.index()].push(
                    GroupHom::new(pr.group.clone(), g.clone(), &sel * &pr.lifts).expect("projection is well-defined"),
                );
            }
        }
        inclusions.push(CrtMorphism::from_parts_unchecked(s.clone(), module.clone(), inc));
        projections.push(CrtMorphism::from_parts_unchecked(module.clone(), s.clone(), prj));
    }
    DirectSum { module, inclusions, projections }
}

impl<S: fmt::Debug> fmt::Debug for CrtModule<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CrtModule").field("groups", &self.groups).field("ops", &self.ops).finish()
    }
}

impl<S: Scalar> fmt::Display for CrtModule<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_table(self))
    }
}

/// Renders a module as a row-per-group table over degrees `0..=8`
/// (degree 8 repeating degree 0).
pub fn render_table<S: Scalar>(m: &CrtModule<S>) -> String {
    render_table_window(m, 8)
}

/// Renders a module over degrees `0..=last`.
pub fn render_table_window<S: Scalar>(m: &CrtModule<S>, last: i64) -> String {
    let mut rows: Vec<Vec<String>> = Vec::new();
    let mut header = vec!["n".to_string()];
    header.extend((0..=last).map(|n| n.to_string()));
    rows.push(header);
    for p in Part::ALL {
        let mut row = vec![format!("M{}_n", p.name())];
        row.extend((0..=last).map(|n| m.group(p, n).to_string()));
        rows.push(row);
    }
    for op in Op::ALL {
        let mut row = vec![format!("{}_n", op.symbol())];
        row.extend((0..=last).map(|n| {
            let h = m.op(op, n);
            if h.matrix().rows() == 0 || h.matrix().cols() == 0 {
                "-".to_string()
            } else {
                h.matrix().to_string()
            }
        }));
        rows.push(row);
    }
    let ncols = rows[0].len();
    let widths: Vec<usize> =
        (0..ncols).map(|j| rows.iter().map(|r| r[j].chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for r in rows {
        let line: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(j, c)| format!("{c}{}", " ".repeat(widths[j] - c.chars().count())))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}
