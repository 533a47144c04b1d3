//! The CRT relation list, checked degreewise in the identity-β window.

use crate::crt::{CrtModule, Op, WINDOW};
use crate::error::Result;
use crate::scalar::Scalar;
use crate::zlinalg::GroupHom;

use Op::*;

/// One relation of the CRT relation list, checkable at a degree `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RelationKind {
    RC,
    CR,
    RTauGamma,
    CZetaEps,
    PsiUSquare,
    PsiTSquare,
    PsiTEps,
    ZetaGamma,
    PsiUZeta,
    GammaPsiU,
    PsiUPeriod,
    PsiTPeriod,
    ZetaPeriod,
    GammaPeriod,
    TwoEtaO,
    TwoEtaT,
    EpsRZeta,
    GammaCTau,
    TauPsiT,
    TauBetaEps,
    EpsXi,
    XiTau,
    BetaEpsTau,
}

/// Source of operation homomorphisms for relation checks.
///
/// The relation table is written once against this view so that stored
/// modules and partially assembled modules (in the extension solver) are
/// checked by the same code.
pub trait RelationView<S> {
    fn hom(&self, op: Op, n: i64) -> GroupHom<S>;
}

impl<S: Scalar> RelationView<S> for CrtModule<S> {
    fn hom(&self, op: Op, n: i64) -> GroupHom<S> {
        self.op(op, n).clone()
    }
}

impl RelationKind {
    pub const ALL: [RelationKind; 23] = [
        RelationKind::RC,
        RelationKind::CR,
        RelationKind::RTauGamma,
        RelationKind::CZetaEps,
        RelationKind::PsiUSquare,
        RelationKind::PsiTSquare,
        RelationKind::PsiTEps,
        RelationKind::ZetaGamma,
        RelationKind::PsiUZeta,
        RelationKind::GammaPsiU,
        RelationKind::PsiUPeriod,
        RelationKind::PsiTPeriod,
        RelationKind::ZetaPeriod,
        RelationKind::GammaPeriod,
        RelationKind::TwoEtaO,
        RelationKind::TwoEtaT,
        RelationKind::EpsRZeta,
        RelationKind::GammaCTau,
        RelationKind::TauPsiT,
        RelationKind::TauBetaEps,
        RelationKind::EpsXi,
        RelationKind::XiTau,
        RelationKind::BetaEpsTau,
    ];

    /// Human-readable statement of the relation.
    pub fn name(self) -> &'static str {
        use RelationKind::*;
        match self {
            RC => "rc = 2",
            CR => "cr = 1 + psiU",
            RTauGamma => "r = tau gamma",
            CZetaEps => "c = zeta eps",
            PsiUSquare => "psiU^2 = 1",
            PsiTSquare => "psiT^2 = 1",
            PsiTEps => "psiT eps = eps",
            ZetaGamma => "zeta gamma = 0",
            PsiUZeta => "zeta = psiU zeta",
            GammaPsiU => "gamma = gamma psiU",
            PsiUPeriod => "psiU betaU = -betaU psiU",
            PsiTPeriod => "psiT betaT = betaT psiT",
            ZetaPeriod => "zeta betaT = betaU^2 zeta",
            GammaPeriod => "gamma betaU^2 = betaT gamma",
            TwoEtaO => "2 etaO = 0",
            TwoEtaT => "2 etaT = 0",
            EpsRZeta => "eps r zeta = 1 + psiT",
            GammaCTau => "gamma c tau = 1 - psiT",
            TauPsiT => "tau = -tau psiT",
            TauBetaEps => "tau betaT eps = 0",
            EpsXi => "eps xi = 2 betaT eps",
            XiTau => "xi tau = 2 tau betaT",
            BetaEpsTau => "betaT eps tau = eps tau betaT + etaT betaT",
        }
    }

    /// Operations (with degrees) whose matrices the check at `n` reads.
    pub fn deps(self, n: i64) -> Vec<(Op, i64)> {
        use RelationKind::*;
        match self {
            RC => vec![(R, n), (C, n)],
            CR => vec![(C, n), (R, n), (PsiU, n)],
            RTauGamma => vec![(R, n), (Tau, n - 1), (Gamma, n)],
            CZetaEps => vec![(C, n), (Zeta, n), (Eps, n)],
            PsiUSquare => vec![(PsiU, n)],
            PsiTSquare => vec![(PsiT, n)],
            PsiTEps => vec![(PsiT, n), (Eps, n)],
            ZetaGamma => vec![(Zeta, n - 1), (Gamma, n)],
            PsiUZeta => vec![(PsiU, n), (Zeta, n)],
            GammaPsiU => vec![(Gamma, n), (PsiU, n)],
            PsiUPeriod => vec![(PsiU, n), (PsiU, n + 2)],
            PsiTPeriod => vec![(PsiT, n), (PsiT, n + 4)],
            ZetaPeriod => vec![(Zeta, n), (Zeta, n + 4)],
            GammaPeriod => vec![(Gamma, n), (Gamma, n + 4)],
            TwoEtaO => vec![(Tau, n), (Eps, n)],
            TwoEtaT => vec![(Gamma, n + 2), (Zeta, n)],
            EpsRZeta => vec![(Eps, n), (R, n), (Zeta, n), (PsiT, n)],
            GammaCTau => vec![(Gamma, n + 1), (C, n + 1), (Tau, n), (PsiT, n)],
            TauPsiT => vec![(Tau, n), (PsiT, n)],
            TauBetaEps => vec![(Tau, n + 4), (Eps, n)],
            EpsXi => vec![(Eps, n + 4), (R, n + 4), (C, n), (Eps, n)],
            XiTau => vec![(R, n + 5), (C, n + 1), (Tau, n), (Tau, n + 4)],
            BetaEpsTau => vec![(Eps, n + 1), (Tau, n), (Eps, n + 5), (Tau, n + 4), (Gamma, n + 6), (Zeta, n + 4)],
        }
    }

    /// Evaluates the relation at degree `n` on a module.
    pub fn holds<S: Scalar>(self, m: &CrtModule<S>, n: i64) -> bool {
        self.holds_in(m, n)
    }

    /// Evaluates the relation at degree `n` against any view; composition
    /// failures count as violations.
    pub fn holds_in<S: Scalar, V: RelationView<S> + ?Sized>(self, v: &V, n: i64) -> bool {
        self.check(v, n).unwrap_or(false)
    }

    fn check<S: Scalar, V: RelationView<S> + ?Sized>(self, v: &V, n: i64) -> Result<bool> {
        use RelationKind::*;
        let two = S::from_int(2);
        let id = |h: &GroupHom<S>| GroupHom::identity(h.domain());
        let c2 = |a: GroupHom<S>, b: GroupHom<S>| a.compose(&b);
        let c3 = |a: GroupHom<S>, b: GroupHom<S>, c: GroupHom<S>| a.compose(&b.compose(&c)?);
        Ok(match self {
            RC => {
                let rc = c2(v.hom(R, n), v.hom(C, n))?;
                rc == GroupHom::multiplication(rc.domain(), two)
            }
            CR => {
                let cr = c2(v.hom(C, n), v.hom(R, n))?;
                cr == id(&cr).add(&v.hom(PsiU, n))?
            }
            RTauGamma => c2(v.hom(Tau, n - 1), v.hom(Gamma, n))? == v.hom(R, n),
            CZetaEps => c2(v.hom(Zeta, n), v.hom(Eps, n))? == v.hom(C, n),
            PsiUSquare => c2(v.hom(PsiU, n), v.hom(PsiU, n))?.is_identity(),
            PsiTSquare => c2(v.hom(PsiT, n), v.hom(PsiT, n))?.is_identity(),
            PsiTEps => c2(v.hom(PsiT, n), v.hom(Eps, n))? == v.hom(Eps, n),
            ZetaGamma => c2(v.hom(Zeta, n - 1), v.hom(Gamma, n))?.is_zero(),
            PsiUZeta => c2(v.hom(PsiU, n), v.hom(Zeta, n))? == v.hom(Zeta, n),
            GammaPsiU => c2(v.hom(Gamma, n), v.hom(PsiU, n))? == v.hom(Gamma, n),
            PsiUPeriod => v.hom(PsiU, n + 2) == v.hom(PsiU, n).neg(),
            PsiTPeriod => v.hom(PsiT, n + 4) == v.hom(PsiT, n),
            ZetaPeriod => v.hom(Zeta, n + 4) == v.hom(Zeta, n),
            GammaPeriod => v.hom(Gamma, n + 4) == v.hom(Gamma, n),
            TwoEtaO => c2(v.hom(Tau, n), v.hom(Eps, n))?.scale(&two).is_zero(),
            TwoEtaT => c2(v.hom(Gamma, n + 2), v.hom(Zeta, n))?.scale(&two).is_zero(),
            EpsRZeta => {
                let lhs = c3(v.hom(Eps, n), v.hom(R, n), v.hom(Zeta, n))?;
                lhs == id(&lhs).add(&v.hom(PsiT, n))?
            }
            GammaCTau => {
                let lhs = c3(v.hom(Gamma, n + 1), v.hom(C, n + 1), v.hom(Tau, n))?;
                lhs == id(&lhs).sub(&v.hom(PsiT, n))?
            }
            TauPsiT => c2(v.hom(Tau, n), v.hom(PsiT, n))? == v.hom(Tau, n).neg(),
            TauBetaEps => c2(v.hom(Tau, n + 4), v.hom(Eps, n))?.is_zero(),
            EpsXi => c3(v.hom(Eps, n + 4), v.hom(R, n + 4), v.hom(C, n))? == v.hom(Eps, n).scale(&two),
            XiTau => c3(v.hom(R, n + 5), v.hom(C, n + 1), v.hom(Tau, n))? == v.hom(Tau, n + 4).scale(&two),
            BetaEpsTau => {
                let lhs = c2(v.hom(Eps, n + 1), v.hom(Tau, n))?;
                let a = c2(v.hom(Eps, n + 5), v.hom(Tau, n + 4))?;
                let b = c2(v.hom(Gamma, n + 6), v.hom(Zeta, n + 4))?;
                lhs == a.add(&b)?
            }
        })
    }
}

/// The full relation table, in report order.
pub fn relation_kinds() -> Vec<RelationKind> {
    RelationKind::ALL.to_vec()
}

/// A failed relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationFailure {
    pub relation: &'static str,
    pub degree: usize,
}

/// Outcome of [`verify_relations`]: every failing relation with its degree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RelationReport {
    pub failures: Vec<RelationFailure>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// True if the named relation failed at degree `n`.
    pub fn failed_at(&self, relation: &str, n: usize) -> bool {
        self.failures.iter().any(|f| f.relation == relation && f.degree == n)
    }
}

impl std::fmt::Display for RelationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.passed() {
            return write!(f, "all relations hold");
        }
        for (i, fail) in self.failures.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{} fails at degree {}", fail.relation, fail.degree)?;
        }
        Ok(())
    }
}

/// Checks every relation in every degree of the window, reporting all failures.
pub fn verify_relations<S: Scalar>(m: &CrtModule<S>) -> RelationReport {
    let mut failures = Vec::new();
    for rel in RelationKind::ALL {
        for n in 0..WINDOW {
            if !rel.holds(m, n as i64) {
                failures.push(RelationFailure { relation: rel.name(), degree: n });
            }
        }
    }
    RelationReport { failures }
}

