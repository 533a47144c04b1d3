//! CRT-morphisms, submodules, quotient modules, kernels and cokernels.

use crate::crt::{wrap, CrtModule, Op, Part, WINDOW};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::zlinalg::{hom_compose, kernel_subgroup, quotient, FinAbGroup, GroupHom, Matrix, Subgroup};

/// A degreewise family of homomorphisms commuting with all eight operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrtMorphism<S> {
    source: CrtModule<S>,
    target: CrtModule<S>,
    maps: [Vec<GroupHom<S>>; 3],
}

impl<S: Scalar> CrtMorphism<S> {
    /// Builds a morphism, checking shapes, compatibility with Bott periodicity
    /// and naturality with respect to every operation in every degree.
    pub fn new(source: CrtModule<S>, target: CrtModule<S>, maps: [Vec<GroupHom<S>>; 3]) -> Result<Self> {
        for p in Part::ALL {
            let fam = &maps[p.index()];
            if fam.len() != WINDOW {
                return Err(Error::Shape(format!("part {} needs 8 maps", p.name())));
            }
            for (n, h) in fam.iter().enumerate() {
                if h.domain() != source.group(p, n as i64) || h.codomain() != target.group(p, n as i64) {
                    return Err(Error::Shape(format!(
                        "map on M{}_{n} has type {} -> {}",
                        p.name(),
                        h.domain(),
                        h.codomain()
                    )));
                }
                if *h != fam[n % p.period()] {
                    return Err(Error::Naturality(format!(
                        "map on M{}_{n} does not commute with Bott periodicity",
                        p.name()
                    )));
                }
            }
        }
        let m = CrtMorphism { source, target, maps };
        m.check_naturality()?;
        Ok(m)
    }

    pub(crate) fn from_parts_unchecked(source: CrtModule<S>, target: CrtModule<S>, maps: [Vec<GroupHom<S>>; 3]) -> Self {
        CrtMorphism { source, target, maps }
    }

    fn check_naturality(&self) -> Result<()> {
        for op in Op::ALL {
            for n in 0..WINDOW as i64 {
                let lhs = hom_compose(self.target.op(op, n), self.map(op.source(), n))?;
                let rhs = hom_compose(self.map(op.target(), n + op.shift()), self.source.op(op, n))?;
                if lhs != rhs {
                    return Err(Error::Naturality(format!("does not commute with {}_{n}", op.name())));
                }
            }
        }
        Ok(())
    }

    /// The identity morphism.
    pub fn identity(m: &CrtModule<S>) -> Self {
        let maps = std::array::from_fn(|p| m.part(Part::ALL[p]).iter().map(GroupHom::identity).collect());
        CrtMorphism { source: m.clone(), target: m.clone(), maps }
    }

    pub fn source(&self) -> &CrtModule<S> {
        &self.source
    }

    pub fn target(&self) -> &CrtModule<S> {
        &self.target
    }

    /// Component on `part` in degree `n`.
    pub fn map(&self, part: Part, n: i64) -> &GroupHom<S> {
        &self.maps[part.index()][wrap(n)]
    }

    pub fn maps(&self) -> &[Vec<GroupHom<S>>; 3] {
        &self.maps
    }

    /// `self ∘ f`.
    pub fn compose(&self, f: &CrtMorphism<S>) -> Result<Self> {
        if f.target != self.source {
            return Err(Error::Shape("morphisms are not composable".into()));
        }
        let mut maps: [Vec<GroupHom<S>>; 3] = Default::default();
        for p in Part::ALL {
            for n in 0..WINDOW as i64 {
                maps[p.index()].push(hom_compose(self.map(p, n), f.map(p, n))?);
            }
        }
        Ok(CrtMorphism { source: f.source.clone(), target: self.target.clone(), maps })
    }

    /// True if every component is injective.
    pub fn is_injective(&self) -> bool {
        self.maps.iter().flatten().all(|h| h.is_injective())
    }

    /// True if every component is surjective.
    pub fn is_surjective(&self) -> bool {
        self.maps.iter().flatten().all(|h| h.is_surjective())
    }

    /// True if every component is an isomorphism.
    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// The kernel module with its inclusion into the source.
    pub fn kernel_module(&self) -> Result<(CrtModule<S>, CrtMorphism<S>)> {
        let gens = std::array::from_fn(|p| {
            (0..WINDOW)
                .map(|n| kernel_subgroup(&self.maps[p][n]).inclusion().matrix().clone())
                .collect()
        });
        submodule(&self.source, &gens)
    }

    /// The cokernel module with the projection from the target.
    pub fn cokernel_module(&self) -> Result<(CrtModule<S>, CrtMorphism<S>)> {
        let gens = std::array::from_fn(|p| (0..WINDOW).map(|n| self.maps[p][n].matrix().clone()).collect());
        quotient_module(&self.target, &gens)
    }
}

/// The submodule generated degreewise by the given columns (which must be closed
/// under all operations), with its inclusion.
pub fn submodule<S: Scalar>(m: &CrtModule<S>, gens: &[Vec<Matrix<S>>; 3]) -> Result<(CrtModule<S>, CrtMorphism<S>)> {
    let subs: [Vec<Subgroup<S>>; 3] = std::array::from_fn(|p| {
        (0..WINDOW).map(|n| Subgroup::new(m.group(Part::ALL[p], n as i64), gens[p][n].clone())).collect()
    });
    let groups: [Vec<FinAbGroup<S>>; 3] = std::array::from_fn(|p| subs[p].iter().map(|s| s.group().clone()).collect());
    let mut ops = Vec::new();
    for op in Op::ALL {
        let mut fam = Vec::new();
        for n in 0..WINDOW {
            let src = &subs[op.source().index()][n];
            let tgt = &subs[op.target().index()][wrap(n as i64 + op.shift())];
            let incl = src.inclusion().matrix();
            let mut cols = Vec::new();
            for j in 0..incl.cols() {
                let y = m.op(op, n as i64).apply(&incl.col(j));
                let c = tgt.coords(&y).ok_or_else(|| {
                    Error::IllDefined(format!("submodule is not closed under {}_{n}", op.name()))
                })?;
                cols.push(c);
            }
            let mat = Matrix::from_columns(&cols, tgt.group().ngens());
            fam.push(GroupHom::new(src.group().clone(), tgt.group().clone(), mat)?);
        }
        ops.push(fam);
    }
    let sub = CrtModule::from_homs(groups, ops)?;
    let maps = std::array::from_fn(|p| subs[p].iter().map(|s| s.inclusion().clone()).collect());
    let incl = CrtMorphism::from_parts_unchecked(sub.clone(), m.clone(), maps);
    Ok((sub, incl))
}

/// The quotient of `m` by the submodule generated degreewise by the given
/// columns (which must be closed under all operations), with its projection.
pub fn quotient_module<S: Scalar>(m: &CrtModule<S>, gens: &[Vec<Matrix<S>>; 3]) -> Result<(CrtModule<S>, CrtMorphism<S>)> {
    let quots: [Vec<_>; 3] =
        std::array::from_fn(|p| (0..WINDOW).map(|n| quotient(m.group(Part::ALL[p], n as i64), &gens[p][n])).collect());
    let groups: [Vec<FinAbGroup<S>>; 3] = std::array::from_fn(|p| quots[p].iter().map(|q| q.group.clone()).collect());
    let mut ops = Vec::new();
    for op in Op::ALL {
        let mut fam = Vec::new();
        for n in 0..WINDOW {
            let src = &quots[op.source().index()][n];
            let tgt = &quots[op.target().index()][wrap(n as i64 + op.shift())];
            // The operation must carry the source relations into the target relations.
            let sgens = &gens[op.source().index()][n];
            for j in 0..sgens.cols() {
                let y = m.op(op, n as i64).apply(&sgens.col(j));
                if !tgt.projection.apply(&y).iter().all(|x| x.is_zero()) {
                    return Err(Error::IllDefined(format!(
                        "{}_{n} does not preserve the quotient relations",
                        op.name()
                    )));
                }
            }
            let mat = &(tgt.projection.matrix() * m.op(op, n as i64).matrix()) * &src.lifts;
            fam.push(GroupHom::new(src.group.clone(), tgt.group.clone(), mat)?);
        }
        ops.push(fam);
    }
    let q = CrtModule::from_homs(groups, ops)?;
    let maps = std::array::from_fn(|p| quots[p].iter().map(|x| x.projection.clone()).collect());
    let proj = CrtMorphism::from_parts_unchecked(m.clone(), q.clone(), maps);
    Ok((q, proj))
}
