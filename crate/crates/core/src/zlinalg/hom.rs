//! Homomorphisms between canonical groups, subgroups, kernels, images and cokernels.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::zlinalg::group::{FinAbGroup, Presentation};
use crate::zlinalg::matrix::Matrix;
use crate::zlinalg::snf::{integer_kernel, solve_integer};

/// A homomorphism given by a matrix of shape `codomain-gens × domain-gens`.
///
/// Entries are stored reduced modulo the codomain invariant of their row, so
/// equality of values is equality of maps.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupHom<S> {
    domain: FinAbGroup<S>,
    codomain: FinAbGroup<S>,
    matrix: Matrix<S>,
}

impl<S: Scalar> GroupHom<S> {
    /// Builds a homomorphism, checking shape and well-definedness and reducing entries.
    ///
    /// Well-definedness: for every entry `m_ij`, the codomain invariant `e_i`
    /// divides `m_ij · d_j`, where a free generator has invariant 0 and
    /// "0 divides x" means `x = 0`.
    pub fn new(domain: FinAbGroup<S>, codomain: FinAbGroup<S>, matrix: Matrix<S>) -> Result<Self> {
        if matrix.rows() != codomain.ngens() || matrix.cols() != domain.ngens() {
            return Err(Error::Shape(format!(
                "matrix is {}x{} but map {domain} -> {codomain} needs {}x{}",
                matrix.rows(),
                matrix.cols(),
                codomain.ngens(),
                domain.ngens()
            )));
        }
        for i in 0..matrix.rows() {
            let e = codomain.invariant(i);
            for j in 0..matrix.cols() {
                let prod = matrix.get(i, j).clone() * domain.invariant(j);
                let ok = if e.is_zero() { prod.is_zero() } else { prod.is_multiple_of(&e) };
                if !ok {
                    return Err(Error::IllDefined(format!(
                        "entry ({i},{j}) = {} of {matrix} is not well-defined for {domain} -> {codomain}",
                        matrix.get(i, j)
                    )));
                }
            }
        }
        let mut matrix = matrix;
        matrix.reduce_rows(&codomain.invariants());
        Ok(GroupHom { domain, codomain, matrix })
    }

    /// Convenience constructor from machine-integer rows.
    pub fn from_i64(domain: FinAbGroup<S>, codomain: FinAbGroup<S>, rows: &[&[i64]]) -> Result<Self> {
        let m = if rows.is_empty() {
            Matrix::zeros(0, domain.ngens())
        } else {
            Matrix::from_i64(rows)
        };
        Self::new(domain, codomain, m)
    }

    pub fn identity(g: &FinAbGroup<S>) -> Self {
        GroupHom { domain: g.clone(), codomain: g.clone(), matrix: Matrix::identity(g.ngens()) }
    }

    pub fn zero(domain: &FinAbGroup<S>, codomain: &FinAbGroup<S>) -> Self {
        GroupHom {
            domain: domain.clone(),
            codomain: codomain.clone(),
            matrix: Matrix::zeros(codomain.ngens(), domain.ngens()),
        }
    }

    /// Multiplication by `k` on `g`.
    pub fn multiplication(g: &FinAbGroup<S>, k: S) -> Self {
        let mut m = Matrix::scalar(g.ngens(), k);
        m.reduce_rows(&g.invariants());
        GroupHom { domain: g.clone(), codomain: g.clone(), matrix: m }
    }

    pub fn domain(&self) -> &FinAbGroup<S> {
        &self.domain
    }

    pub fn codomain(&self) -> &FinAbGroup<S> {
        &self.codomain
    }

    pub fn matrix(&self) -> &Matrix<S> {
        &self.matrix
    }

    /// Image of an element (reduced).
    pub fn apply(&self, x: &[S]) -> Vec<S> {
        self.codomain.reduce(&self.matrix.apply(x))
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn is_identity(&self) -> bool {
        self.domain == self.codomain && self.matrix == Matrix::identity(self.domain.ngens())
    }

    /// `self ∘ f`.
    pub fn compose(&self, f: &GroupHom<S>) -> Result<Self> {
        hom_compose(self, f)
    }

    /// Pointwise sum of two parallel maps.
    pub fn add(&self, other: &GroupHom<S>) -> Result<Self> {
        self.check_parallel(other)?;
        let mut m = &self.matrix + &other.matrix;
        m.reduce_rows(&self.codomain.invariants());
        Ok(GroupHom { domain: self.domain.clone(), codomain: self.codomain.clone(), matrix: m })
    }

    /// Pointwise difference of two parallel maps.
    pub fn sub(&self, other: &GroupHom<S>) -> Result<Self> {
        self.check_parallel(other)?;
        let mut m = &self.matrix - &other.matrix;
        m.reduce_rows(&self.codomain.invariants());
        Ok(GroupHom { domain: self.domain.clone(), codomain: self.codomain.clone(), matrix: m })
    }

    /// `k · self`.
    pub fn scale(&self, k: &S) -> Self {
        let mut m = self.matrix.scale(k);
        m.reduce_rows(&self.codomain.invariants());
        GroupHom { domain: self.domain.clone(), codomain: self.codomain.clone(), matrix: m }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-S::one())
    }

    fn check_parallel(&self, other: &GroupHom<S>) -> Result<()> {
        if self.domain != other.domain || self.codomain != other.codomain {
            return Err(Error::Shape(format!(
                "maps {} -> {} and {} -> {} are not parallel",
                self.domain, self.codomain, other.domain, other.codomain
            )));
        }
        Ok(())
    }

    /// Block diagonal sum `self ⊕ other` (groups given by their invariant lists).
    ///
    /// The resulting domain/codomain are generally not canonical, so the sum is
    /// returned as a raw matrix; see [`crate::crt`] for canonical direct sums.
    pub fn block_matrix(&self, other: &GroupHom<S>) -> Matrix<S> {
        self.matrix.block_diag(&other.matrix)
    }

    /// True if the map is injective.
    pub fn is_injective(&self) -> bool {
        hom_kernel(self).0.is_trivial()
    }

    /// True if the map is surjective.
    pub fn is_surjective(&self) -> bool {
        hom_cokernel(self).0.is_trivial()
    }

    /// True if the map is an isomorphism.
    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }
}

impl<S: fmt::Display + PartialEq> fmt::Display for GroupHom<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} : {} -> {}", self.matrix, self.domain, self.codomain)
    }
}

impl<S: fmt::Debug> fmt::Debug for GroupHom<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupHom({:?} : {:?} -> {:?})", self.matrix, self.domain, self.codomain)
    }
}

/// Composite `g ∘ f`.
pub fn hom_compose<S: Scalar>(g: &GroupHom<S>, f: &GroupHom<S>) -> Result<GroupHom<S>> {
    if f.codomain != g.domain {
        return Err(Error::Shape(format!(
            "cannot compose: codomain {} differs from domain {}",
            f.codomain, g.domain
        )));
    }
    let mut m = &g.matrix * &f.matrix;
    m.reduce_rows(&g.codomain.invariants());
    Ok(GroupHom { domain: f.domain.clone(), codomain: g.codomain.clone(), matrix: m })
}

/// A subgroup of an ambient group, given by generators, with its canonical form.
#[derive(Clone, Debug)]
pub struct Subgroup<S> {
    ambient: FinAbGroup<S>,
    /// Generators as columns in ambient coordinates.
    gens: Matrix<S>,
    /// Canonical group and the change from generator coordinates to it.
    presentation: Presentation<S>,
    inclusion: GroupHom<S>,
}

impl<S: Scalar> Subgroup<S> {
    /// The subgroup of `ambient` generated by the columns of `gens`.
    pub fn new(ambient: &FinAbGroup<S>, gens: Matrix<S>) -> Self {
        assert_eq!(gens.rows(), ambient.ngens(), "generator length mismatch");
        let s = gens.cols();
        // Relations among the generators: y with gens·y ∈ span(ambient relations).
        let big = gens.hcat(&ambient.relation_matrix());
        let ker = integer_kernel(&big);
        let rel = ker.block(0, 0, s, ker.cols());
        let presentation = Presentation::new(&rel);
        let mut incl = &gens * &presentation.lifts;
        incl.reduce_rows(&ambient.invariants());
        let inclusion = GroupHom {
            domain: presentation.group.clone(),
            codomain: ambient.clone(),
            matrix: incl,
        };
        Subgroup { ambient: ambient.clone(), gens, presentation, inclusion }
    }

    /// The canonical group isomorphic to this subgroup.
    pub fn group(&self) -> &FinAbGroup<S> {
        &self.presentation.group
    }

    /// Inclusion of [`Self::group`] into the ambient group.
    pub fn inclusion(&self) -> &GroupHom<S> {
        &self.inclusion
    }

    pub fn ambient(&self) -> &FinAbGroup<S> {
        &self.ambient
    }

    /// Canonical subgroup coordinates of an ambient element, if it lies in the subgroup.
    pub fn coords(&self, x: &[S]) -> Option<Vec<S>> {
        let big = self.gens.hcat(&self.ambient.relation_matrix());
        let sol = solve_integer(&big, x)?;
        let y = &sol[..self.gens.cols()];
        Some(self.presentation.group.reduce(&self.presentation.proj.apply(y)))
    }

    pub fn contains(&self, x: &[S]) -> bool {
        self.coords(x).is_some()
    }

    /// Subgroup inclusion `self ⊆ other` (same ambient group).
    pub fn is_subset_of(&self, other: &Subgroup<S>) -> bool {
        (0..self.gens.cols()).all(|j| other.contains(&self.gens.col(j)))
    }

    /// Equality as subgroups (mutual membership).
    pub fn same_as(&self, other: &Subgroup<S>) -> bool {
        self.is_subset_of(other) && other.is_subset_of(self)
    }
}

/// The kernel of `f` as a subgroup of its domain.
pub fn kernel_subgroup<S: Scalar>(f: &GroupHom<S>) -> Subgroup<S> {
    let n = f.domain.ngens();
    let big = f.matrix.hcat(&f.codomain.relation_matrix());
    let ker = integer_kernel(&big);
    Subgroup::new(&f.domain, ker.block(0, 0, n, ker.cols()))
}

/// The image of `f` as a subgroup of its codomain.
pub fn image_subgroup<S: Scalar>(f: &GroupHom<S>) -> Subgroup<S> {
    Subgroup::new(&f.codomain, f.matrix.clone())
}

/// Kernel in canonical form with its injection into the domain.
pub fn hom_kernel<S: Scalar>(f: &GroupHom<S>) -> (FinAbGroup<S>, GroupHom<S>) {
    let k = kernel_subgroup(f);
    (k.group().clone(), k.inclusion().clone())
}

/// Image in canonical form with its inclusion into the codomain.
pub fn hom_image<S: Scalar>(f: &GroupHom<S>) -> (FinAbGroup<S>, GroupHom<S>) {
    let k = image_subgroup(f);
    (k.group().clone(), k.inclusion().clone())
}

/// A quotient `codomain / image(f)` with projection and generator lifts.
#[derive(Clone, Debug)]
pub struct Quotient<S> {
    pub group: FinAbGroup<S>,
    pub projection: GroupHom<S>,
    /// Ambient coordinates of lifts of the canonical quotient generators (columns).
    pub lifts: Matrix<S>,
}

/// Quotient of `ambient` by the subgroup generated by the columns of `gens`.
pub fn quotient<S: Scalar>(ambient: &FinAbGroup<S>, gens: &Matrix<S>) -> Quotient<S> {
    let rel = gens.hcat(&ambient.relation_matrix());
    let p = Presentation::new(&rel);
    let projection = GroupHom { domain: ambient.clone(), codomain: p.group.clone(), matrix: p.proj };
    Quotient { group: p.group, projection, lifts: p.lifts }
}

/// Cokernel of `f`.
pub fn cokernel<S: Scalar>(f: &GroupHom<S>) -> Quotient<S> {
    quotient(&f.codomain, &f.matrix)
}

/// Cokernel in canonical form with the projection from the codomain.
pub fn hom_cokernel<S: Scalar>(f: &GroupHom<S>) -> (FinAbGroup<S>, GroupHom<S>) {
    let q = cokernel(f);
    (q.group, q.projection)
}

/// Exactness of `A --f--> B --g--> C` at `B`: `image(f) = kernel(g)` as subgroups.
pub fn is_exact_at<S: Scalar>(f: &GroupHom<S>, g: &GroupHom<S>) -> Result<bool> {
    let gf = hom_compose(g, f)?;
    if !gf.is_zero() {
        return Err(Error::NonzeroComposite(format!("{gf}")));
    }
    let im = image_subgroup(f);
    let ker = kernel_subgroup(g);
    Ok(ker.is_subset_of(&im) && im.is_subset_of(&ker))
}
