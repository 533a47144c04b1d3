//! Acyclicity: exactness of the three long exact sequences, and freeness.

use std::fmt;

use crate::crt::relations::RelationView;
use crate::crt::{verify_relations, CrtModule, Op, Part, WINDOW};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::zlinalg::{is_exact_at, GroupHom};

use Op::*;

/// The three long exact sequences of an acyclic CRT-module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExactnessSeq {
    /// `M^U_{n+1} →γ M^T_n →ζ M^U_n →(1−ψ_U) M^U_n →γ M^T_{n−1} → …`
    UT,
    /// `M^O_n →η_O M^O_{n+1} →c M^U_{n+1} →(rβ_U⁻¹) M^O_{n−1} →η_O M^O_n → …`
    OU,
    /// `M^O_n →η_O² M^O_{n+2} →ε M^T_{n+2} →(τβ_T⁻¹) M^O_{n−1} →η_O² M^O_{n+1} → …`
    OT,
}

impl ExactnessSeq {
    pub const ALL: [ExactnessSeq; 3] = [ExactnessSeq::UT, ExactnessSeq::OU, ExactnessSeq::OT];

    pub fn name(self) -> &'static str {
        match self {
            ExactnessSeq::UT => "U-T sequence",
            ExactnessSeq::OU => "O-U sequence",
            ExactnessSeq::OT => "O-T sequence",
        }
    }
}

/// One node of one of the sequences; exactness at it is checked per degree `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ExactnessNode {
    pub seq: ExactnessSeq,
    /// Position `0..3` within one period of the sequence.
    pub position: u8,
}

/// All nine exactness nodes (three per sequence).
pub fn exactness_nodes() -> Vec<ExactnessNode> {
    ExactnessSeq::ALL
        .into_iter()
        .flat_map(|seq| (0..3).map(move |position| ExactnessNode { seq, position }))
        .collect()
}

impl ExactnessNode {
    /// The group (part and degree) at which exactness is checked.
    pub fn location(&self, n: i64) -> (Part, i64) {
        match (self.seq, self.position) {
            (ExactnessSeq::UT, 0) => (Part::T, n),
            (ExactnessSeq::UT, _) => (Part::U, n),
            (ExactnessSeq::OU, 0) => (Part::O, n + 1),
            (ExactnessSeq::OU, 1) => (Part::U, n + 1),
            (ExactnessSeq::OU, _) => (Part::O, n - 1),
            (ExactnessSeq::OT, 0) => (Part::O, n + 2),
            (ExactnessSeq::OT, 1) => (Part::T, n + 2),
            (ExactnessSeq::OT, _) => (Part::O, n - 1),
        }
    }

    pub fn describe(&self, n: i64) -> String {
        let (p, d) = self.location(n);
        format!("{} at M{}_{}", self.seq.name(), p.name(), crate::crt::wrap(d))
    }

    /// Operations (with degrees) read by the check at `n`.
    pub fn deps(&self, n: i64) -> Vec<(Op, i64)> {
        let eta = |k: i64| vec![(Tau, k), (Eps, k)];
        let eta2 = |k: i64| {
            let mut v = eta(k);
            v.extend(eta(k + 1));
            v
        };
        let mut v = match (self.seq, self.position) {
            (ExactnessSeq::UT, 0) => vec![(Gamma, n + 1), (Zeta, n)],
            (ExactnessSeq::UT, 1) => vec![(Zeta, n), (PsiU, n)],
            (ExactnessSeq::UT, _) => vec![(PsiU, n), (Gamma, n)],
            (ExactnessSeq::OU, 0) => {
                let mut v = eta(n);
                v.push((C, n + 1));
                v
            }
            (ExactnessSeq::OU, 1) => vec![(C, n + 1), (R, n - 1)],
            (ExactnessSeq::OU, _) => {
                let mut v = eta(n - 1);
                v.push((R, n - 1));
                v
            }
            (ExactnessSeq::OT, 0) => {
                let mut v = eta2(n);
                v.push((Eps, n + 2));
                v
            }
            (ExactnessSeq::OT, 1) => vec![(Eps, n + 2), (Tau, n - 2)],
            (ExactnessSeq::OT, _) => {
                let mut v = eta2(n - 1);
                v.push((Tau, n - 2));
                v
            }
        };
        v.sort();
        v.dedup();
        v
    }

    /// The composable pair `(f, g)` whose exactness at the middle is checked.
    pub fn maps<S: Scalar, V: RelationView<S> + ?Sized>(&self, v: &V, n: i64) -> Result<(GroupHom<S>, GroupHom<S>)> {
        let eta = |k: i64| v.hom(Tau, k).compose(&v.hom(Eps, k));
        let eta2 = |k: i64| -> Result<GroupHom<S>> { eta(k + 1)?.compose(&eta(k)?) };
        let one_minus_psi = |k: i64| {
            let p = v.hom(PsiU, k);
            GroupHom::identity(p.domain()).sub(&p)
        };
        Ok(match (self.seq, self.position) {
            (ExactnessSeq::UT, 0) => (v.hom(Gamma, n + 1), v.hom(Zeta, n)),
            (ExactnessSeq::UT, 1) => (v.hom(Zeta, n), one_minus_psi(n)?),
            (ExactnessSeq::UT, _) => (one_minus_psi(n)?, v.hom(Gamma, n)),
            (ExactnessSeq::OU, 0) => (eta(n)?, v.hom(C, n + 1)),
            (ExactnessSeq::OU, 1) => (v.hom(C, n + 1), v.hom(R, n - 1)),
            (ExactnessSeq::OU, _) => (v.hom(R, n - 1), eta(n - 1)?),
            (ExactnessSeq::OT, 0) => (eta2(n)?, v.hom(Eps, n + 2)),
            (ExactnessSeq::OT, 1) => (v.hom(Eps, n + 2), v.hom(Tau, n - 2)),
            (ExactnessSeq::OT, _) => (v.hom(Tau, n - 2), eta2(n - 1)?),
        })
    }

    /// Exactness at the node in degree `n`; a nonzero composite counts as failure.
    pub fn holds_in<S: Scalar, V: RelationView<S> + ?Sized>(&self, v: &V, n: i64) -> bool {
        self.maps(v, n).and_then(|(f, g)| is_exact_at(&f, &g)).unwrap_or(false)
    }
}

/// Outcome of [`is_acyclic`]: every node where exactness fails.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AcyclicityReport {
    pub failures: Vec<(ExactnessNode, usize)>,
}

impl AcyclicityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for AcyclicityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "all sequences exact");
        }
        for (i, (node, n)) in self.failures.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "not exact: {}", node.describe(*n as i64))?;
        }
        Ok(())
    }
}

/// Checks exactness of the three long exact sequences over one full period.
///
/// Fails with [`Error::Relations`] if the relation check does not pass.
pub fn is_acyclic<S: Scalar>(m: &CrtModule<S>) -> Result<AcyclicityReport> {
    let rel = verify_relations(m);
    if !rel.passed() {
        return Err(Error::Relations(rel.to_string()));
    }
    let mut failures = Vec::new();
    for node in exactness_nodes() {
        for n in 0..WINDOW {
            if !node.holds_in(m, n as i64) {
                failures.push((node, n));
            }
        }
    }
    Ok(AcyclicityReport { failures })
}

/// Freeness criterion: relations hold, the module is acyclic, and every `M^U_n` is torsion-free.
pub fn is_free<S: Scalar>(m: &CrtModule<S>) -> bool {
    matches!(is_acyclic(m), Ok(r) if r.passed()) && m.part(Part::U).iter().all(|g| g.torsion().is_empty())
}
