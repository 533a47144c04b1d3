//! Free CRT-modules: the monogenic modules `K^CRT(ℝ)`, `K^CRT(ℂ)`, `K^CRT(T)`
//! and their suspensions, finite direct sums of them, elements, words in the
//! operations, and morphisms out of free modules given by generator images.
//!
//! `monogenic(kind, n)` is the table module suspended by `n`, i.e.
//! `(Σ^{−n} table)`; its generator sits in degree `n` for the `ℝ` and `ℂ`
//! kinds (`1_O` resp. `κ_1`) and in degree `n − 1` for the `T` kind, whose
//! table generator `χ` lives in `KT_{−1}`.

use std::collections::VecDeque;
use std::fmt;

use crate::catalog::Template;
use crate::crt::{direct_sum_many, suspend, wrap, CrtModule, CrtMorphism, DirectSum, Op, Part, WINDOW};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::zlinalg::{solve_integer, GroupHom, Matrix, Presentation, Subgroup};

/// The three monogenic free kinds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    R,
    C,
    T,
}

impl Kind {
    pub const ALL: [Kind; 3] = [Kind::R, Kind::C, Kind::T];

    /// The part holding the generator.
    pub fn part(self) -> Part {
        match self {
            Kind::R => Part::O,
            Kind::C => Part::U,
            Kind::T => Part::T,
        }
    }

    /// Degree of the generator in the unsuspended table.
    pub fn table_degree(self) -> i64 {
        match self {
            Kind::R | Kind::C => 0,
            Kind::T => -1,
        }
    }

    /// Generator of the unsuspended table in printed coordinates.
    fn printed_generator(self) -> Vec<i64> {
        match self {
            Kind::R => vec![1],
            Kind::C => vec![1, 0],
            Kind::T => vec![-1, 0],
        }
    }

    fn template(self) -> &'static str {
        match self {
            Kind::R => "R",
            Kind::C => "C",
            Kind::T => "T",
        }
    }

    pub fn name(self) -> &'static str {
        self.template()
    }
}

/// A suspended monogenic free module `monogenic(kind, shift)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monogenic {
    pub kind: Kind,
    /// Suspension of the table, reduced mod 8.
    pub shift: i64,
}

impl Monogenic {
    pub fn new(kind: Kind, shift: i64) -> Self {
        Monogenic { kind, shift: shift.rem_euclid(WINDOW as i64) }
    }

    /// Degree of the generator.
    pub fn generator_degree(&self) -> i64 {
        self.shift + self.kind.table_degree()
    }
}

impl fmt::Display for Monogenic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F(b,{},{})", self.generator_degree(), self.kind.name())
    }
}

/// An element of a CRT-module: canonical coordinates in one part and degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element<S> {
    pub part: Part,
    pub degree: i64,
    pub coords: Vec<S>,
}

impl<S: Scalar> Element<S> {
    pub fn new(part: Part, degree: i64, coords: Vec<S>) -> Self {
        Element { part, degree, coords }
    }

    /// The zero element of `m` at a location.
    pub fn zero(m: &CrtModule<S>, part: Part, degree: i64) -> Self {
        Element { part, degree, coords: vec![S::zero(); m.group(part, degree).ngens()] }
    }

    fn check_in(&self, m: &CrtModule<S>) -> Result<()> {
        let g = m.group(self.part, self.degree);
        if g.ngens() != self.coords.len() {
            return Err(Error::Shape(format!(
                "element has {} coordinates but M{}_{} = {g} has {} generators",
                self.coords.len(),
                self.part.name(),
                wrap(self.degree),
                g.ngens()
            )));
        }
        Ok(())
    }
}

/// One step of a word: an operation or a Bott periodicity (power ±1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    Op(Op),
    /// `β_U^{±1}`: degree shift by ±2 on the U part.
    BetaU(i8),
    /// `β_T^{±1}`: degree shift by ±4 on the T part.
    BetaT(i8),
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Op(op) => write!(f, "{}", op.symbol()),
            Step::BetaU(1) => write!(f, "βU"),
            Step::BetaU(e) => write!(f, "βU^{e}"),
            Step::BetaT(1) => write!(f, "βT"),
            Step::BetaT(e) => write!(f, "βT^{e}"),
        }
    }
}

/// A word in the operations, written in composition order: `[s_1, …, s_m]`
/// denotes `s_1 ∘ ⋯ ∘ s_m`, so the rightmost step is applied first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<Step>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn ops(ops: &[Op]) -> Self {
        Word(ops.iter().map(|&o| Step::Op(o)).collect())
    }

    /// `self ∘ other`.
    pub fn then_after(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend(other.0.iter().copied());
        Word(v)
    }

    fn prepend(&self, s: Step) -> Word {
        let mut v = vec![s];
        v.extend(self.0.iter().copied());
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Applies one step to an element of `m`.
pub fn act_step<S: Scalar>(m: &CrtModule<S>, step: Step, x: &Element<S>) -> Result<Element<S>> {
    match step {
        Step::Op(op) => {
            if x.part != op.source() {
                return Err(Error::PartMismatch(format!(
                    "{} acts on the {} part, element is in the {} part",
                    op.name(),
                    op.source().name(),
                    x.part.name()
                )));
            }
            let h = m.op(op, x.degree);
            let coords = h.apply(&x.coords);
            Ok(Element { part: op.target(), degree: x.degree + op.shift(), coords })
        }
        Step::BetaU(e) => {
            if x.part != Part::U {
                return Err(Error::PartMismatch(format!("βU acts on the U part, element is in {}", x.part.name())));
            }
            Ok(Element { part: Part::U, degree: x.degree + 2 * e as i64, coords: x.coords.clone() })
        }
        Step::BetaT(e) => {
            if x.part != Part::T {
                return Err(Error::PartMismatch(format!("βT acts on the T part, element is in {}", x.part.name())));
            }
            Ok(Element { part: Part::T, degree: x.degree + 4 * e as i64, coords: x.coords.clone() })
        }
    }
}

/// Applies a word (rightmost step first) to an element of `m`.
pub fn act<S: Scalar>(m: &CrtModule<S>, word: &Word, x: &Element<S>) -> Result<Element<S>> {
    x.check_in(m)?;
    let mut y = x.clone();
    for &s in word.0.iter().rev() {
        y = act_step(m, s, &y)?;
    }
    Ok(y)
}

/// The monogenic module `monogenic(kind, shift)` together with its generator.
pub fn monogenic<S: Scalar>(kind: Kind, shift: i64) -> Result<(CrtModule<S>, Element<S>)> {
    let t = Template::load(kind.template())?;
    let printed = t.printed::<S>(&[])?;
    let table = printed.normalize()?;
    let d = kind.table_degree();
    let orders = &printed.groups[kind.part().index()][wrap(d)];
    let pres = Presentation::new(&Matrix::diagonal(orders));
    let g: Vec<S> = kind.printed_generator().into_iter().map(S::from_int).collect();
    let coords = pres.group.reduce(&pres.proj.apply(&g));
    let mono = Monogenic::new(kind, shift);
    let module = suspend(&table, -mono.shift);
    Ok((module, Element { part: kind.part(), degree: mono.generator_degree(), coords }))
}

/// Words whose values on the generator generate every group of the module.
///
/// Breadth-first search over operations and Bott periodicities; a value is
/// kept only if it enlarges the subgroup generated so far at its location.
#[derive(Clone, Debug)]
pub struct BasisWords<S> {
    /// `words[part][degree]`: the kept words and their values.
    pub words: [Vec<Vec<(Word, Vec<S>)>>; 3],
}

impl<S: Scalar> BasisWords<S> {
    pub fn compute(m: &CrtModule<S>, generator: &Element<S>) -> Result<Self> {
        generator.check_in(m)?;
        let mut words: [Vec<Vec<(Word, Vec<S>)>>; 3] = std::array::from_fn(|_| vec![Vec::new(); WINDOW]);
        let mut queue = VecDeque::new();
        let mut steps: Vec<Step> = Op::ALL.into_iter().map(Step::Op).collect();
        steps.extend([Step::BetaU(1), Step::BetaU(-1), Step::BetaT(1), Step::BetaT(-1)]);
        let accept = |w: Word, x: &Element<S>, words: &mut [Vec<Vec<(Word, Vec<S>)>>; 3]| -> bool {
            let g = m.group(x.part, x.degree);
            let slot = &mut words[x.part.index()][wrap(x.degree)];
            if g.is_zero_element(&x.coords) {
                return false;
            }
            let cols: Vec<Vec<S>> = slot.iter().map(|(_, v)| v.clone()).collect();
            let sub = Subgroup::new(g, Matrix::from_columns(&cols, g.ngens()));
            if sub.contains(&x.coords) {
                return false;
            }
            slot.push((w, x.coords.clone()));
            true
        };
        if accept(Word::empty(), generator, &mut words) {
            queue.push_back((Word::empty(), generator.clone()));
        }
        while let Some((w, x)) = queue.pop_front() {
            for &s in &steps {
                let Ok(y) = act_step(m, s, &x) else { continue };
                let y = Element { degree: wrap(y.degree) as i64, ..y };
                let w2 = w.prepend(s);
                if accept(w2.clone(), &y, &mut words) {
                    queue.push_back((w2, y));
                }
            }
        }
        let out = BasisWords { words };
        for p in Part::ALL {
            for n in 0..WINDOW {
                let g = m.group(p, n as i64);
                let cols: Vec<Vec<S>> = out.words[p.index()][n].iter().map(|(_, v)| v.clone()).collect();
                let sub = Subgroup::new(g, Matrix::from_columns(&cols, g.ngens()));
                for j in 0..g.ngens() {
                    let mut e = vec![S::zero(); g.ngens()];
                    e[j] = S::one();
                    if !sub.contains(&e) {
                        return Err(Error::IllDefined(format!(
                            "generator does not generate M{}_{n} = {g}",
                            p.name()
                        )));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Integer coefficients `y` with `x = Σ y_w · w(b)` at the location.
    pub fn express(&self, m: &CrtModule<S>, part: Part, degree: i64, x: &[S]) -> Result<Vec<S>> {
        let g = m.group(part, degree);
        let list = &self.words[part.index()][wrap(degree)];
        let cols: Vec<Vec<S>> = list.iter().map(|(_, v)| v.clone()).collect();
        let a = Matrix::from_columns(&cols, g.ngens()).hcat(&g.relation_matrix());
        let sol = solve_integer(&a, x).ok_or_else(|| {
            Error::IllDefined(format!("element not in the span of the basis words at M{}_{degree}", part.name()))
        })?;
        Ok(sol[..list.len()].to_vec())
    }

    /// Words kept at a location.
    pub fn at(&self, part: Part, degree: i64) -> &[(Word, Vec<S>)] {
        &self.words[part.index()][wrap(degree)]
    }
}

/// A finite direct sum of suspended monogenic free modules.
#[derive(Clone, Debug)]
pub struct FreeCrt<S> {
    pub summands: Vec<Monogenic>,
    /// Realized direct sum with structure maps.
    pub sum: DirectSum<S>,
    /// Per summand: its module, generator and basis words.
    pub pieces: Vec<(CrtModule<S>, Element<S>, BasisWords<S>)>,
}

impl<S: Scalar> FreeCrt<S> {
    /// The direct sum of the given monogenic modules.
    pub fn new(summands: &[Monogenic]) -> Result<Self> {
        let mut pieces = Vec::new();
        for s in summands {
            let (m, g) = monogenic::<S>(s.kind, s.shift)?;
            let b = BasisWords::compute(&m, &g)?;
            pieces.push((m, g, b));
        }
        let mods: Vec<CrtModule<S>> = pieces.iter().map(|(m, _, _)| m.clone()).collect();
        let sum = direct_sum_many(&mods);
        Ok(FreeCrt { summands: summands.to_vec(), sum, pieces })
    }

    /// The realized module.
    pub fn module(&self) -> &CrtModule<S> {
        &self.sum.module
    }

    /// Generator of summand `i`, as an element of the sum.
    pub fn generator(&self, i: usize) -> Element<S> {
        let (_, g, _) = &self.pieces[i];
        self.include(i, g)
    }

    /// Includes an element of summand `i` into the sum.
    pub fn include(&self, i: usize, x: &Element<S>) -> Element<S> {
        let h = self.sum.inclusions[i].map(x.part, x.degree);
        Element { part: x.part, degree: x.degree, coords: h.apply(&x.coords) }
    }

    /// Component of an element of the sum in summand `i`.
    pub fn project(&self, i: usize, x: &Element<S>) -> Element<S> {
        let h = self.sum.projections[i].map(x.part, x.degree);
        Element { part: x.part, degree: x.degree, coords: h.apply(&x.coords) }
    }

    /// `w(b_i)` as an element of the sum.
    pub fn word_element(&self, i: usize, w: &Word) -> Result<Element<S>> {
        let (m, g, _) = &self.pieces[i];
        Ok(self.include(i, &act(m, w, g)?))
    }

    /// Labels of the kept basis words at a location: `(summand, word)`.
    pub fn basis_labels(&self, part: Part, degree: i64) -> Vec<(usize, Word)> {
        let mut out = Vec::new();
        for (i, (_, _, b)) in self.pieces.iter().enumerate() {
            for (w, _) in b.at(part, degree) {
                out.push((i, w.clone()));
            }
        }
        out
    }
}

/// A morphism out of a free module, given by the images of the generators.
#[derive(Clone, Debug)]
pub struct FreeMorphism<S> {
    pub source: FreeCrt<S>,
    pub target: CrtModule<S>,
    /// One image per source summand, in the generator's part and degree.
    pub images: Vec<Element<S>>,
}

impl<S: Scalar> FreeMorphism<S> {
    pub fn new(source: FreeCrt<S>, target: CrtModule<S>, images: Vec<Element<S>>) -> Result<Self> {
        if images.len() != source.summands.len() {
            return Err(Error::Shape(format!(
                "{} images for {} summands",
                images.len(),
                source.summands.len()
            )));
        }
        for (s, x) in source.summands.iter().zip(&images) {
            if x.part != s.kind.part() || wrap(x.degree) != wrap(s.generator_degree()) {
                return Err(Error::PartMismatch(format!(
                    "image of the generator of {s} must lie in M{}_{}",
                    s.kind.part().name(),
                    wrap(s.generator_degree())
                )));
            }
            x.check_in(&target)?;
        }
        Ok(FreeMorphism { source, target, images })
    }

    /// The degreewise homomorphisms `φ(w(b_i)) = w(φ(b_i))`, checked for naturality.
    pub fn realize(&self) -> Result<CrtMorphism<S>> {
        morphism_realize(self)
    }
}

/// Realizes a [`FreeMorphism`] as a CRT-morphism.
///
/// Every canonical generator of the source is written as an integer
/// combination of basis words applied to the summand generators; its image is
/// the same combination of the words applied to the generator images.
pub fn morphism_realize<S: Scalar>(f: &FreeMorphism<S>) -> Result<CrtMorphism<S>> {
    let src = f.source.module();
    let mut maps: [Vec<GroupHom<S>>; 3] = Default::default();
    for p in Part::ALL {
        for n in 0..WINDOW as i64 {
            let g = src.group(p, n);
            let cod = f.target.group(p, n);
            let mut cols = Vec::with_capacity(g.ngens());
            for j in 0..g.ngens() {
                let mut e = vec![S::zero(); g.ngens()];
                e[j] = S::one();
                let e = Element::new(p, n, e);
                let mut acc = vec![S::zero(); cod.ngens()];
                for (i, (m, _, basis)) in f.source.pieces.iter().enumerate() {
                    let comp = f.source.project(i, &e);
                    if m.group(p, n).is_zero_element(&comp.coords) {
                        continue;
                    }
                    let y = basis.express(m, p, n, &comp.coords)?;
                    for ((w, _), c) in basis.at(p, n).iter().zip(&y) {
                        if c.is_zero() {
                            continue;
                        }
                        let v = act(&f.target, w, &f.images[i])?;
                        for (a, b) in acc.iter_mut().zip(&v.coords) {
                            *a = a.clone() + c.clone() * b.clone();
                        }
                    }
                }
                cols.push(cod.reduce(&acc));
            }
            maps[p.index()].push(GroupHom::new(g.clone(), cod.clone(), Matrix::from_columns(&cols, cod.ngens()))?);
        }
    }
    CrtMorphism::new(src.clone(), f.target.clone(), maps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crt::{is_acyclic, is_free, verify_relations};
    use crate::Int;

    fn z(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| Int::from(x)).collect()
    }

    #[test]
    fn monogenic_modules_are_free() {
        for kind in Kind::ALL {
            for s in 0..8 {
                let (m, _) = monogenic::<Int>(kind, s).unwrap();
                assert!(verify_relations(&m).passed());
                assert!(is_acyclic(&m).unwrap().passed());
                assert!(is_free(&m));
            }
        }
    }

    #[test]
    fn monogenic_table_examples() {
        let (r, _) = monogenic::<Int>(Kind::R, 0).unwrap();
        let o: Vec<String> = r.part(Part::O).iter().map(|g| g.to_string()).collect();
        assert_eq!(o, ["Z", "Z_2", "Z_2", "0", "Z", "0", "0", "0"]);
        let (t, chi) = monogenic::<Int>(Kind::T, 0).unwrap();
        assert_eq!(t.group(Part::T, 3).to_string(), "Z^2");
        assert_eq!(t.op(Op::Eps, 3).matrix(), &Matrix::from_i64(&[&[2], &[1]]));
        assert_eq!(chi.degree, -1);
        // τ(χ) = 1_O.
        let one = act(&t, &Word::ops(&[Op::Tau]), &chi).unwrap();
        assert_eq!((one.part, wrap(one.degree), one.coords), (Part::O, 0, z(&[1])));
        // ζ₃ = (1 0) applied to χ = (−1, 0).
        let y = act(&t, &Word::ops(&[Op::Zeta]), &chi).unwrap();
        assert_eq!(y.coords, z(&[-1]));
    }

    #[test]
    fn act_composes_right_to_left() {
        let (r, one) = monogenic::<Int>(Kind::R, 0).unwrap();
        let eta = act(&r, &Word::ops(&[Op::Tau, Op::Eps]), &one).unwrap();
        assert_eq!((eta.part, eta.degree), (Part::O, 1));
        assert_eq!(eta.coords, z(&[1]));
        assert_eq!(act(&r, &Word::empty(), &one).unwrap(), one);
        let w1 = Word::ops(&[Op::Tau]);
        let w2 = Word::ops(&[Op::Eps]);
        assert_eq!(act(&r, &w1.then_after(&w2), &one).unwrap(), act(&r, &w1, &act(&r, &w2, &one).unwrap()).unwrap());
        assert!(matches!(act(&r, &Word::ops(&[Op::Zeta]), &one), Err(Error::PartMismatch(_))));
    }

    #[test]
    fn direct_sums_of_frees() {
        let f = FreeCrt::<Int>::new(&[Monogenic::new(Kind::R, 0), Monogenic::new(Kind::R, 2)]).unwrap();
        assert_eq!(f.module().group(Part::O, 2).to_string(), "Z_2+Z");
        assert!(is_free(f.module()));
        let f = FreeCrt::<Int>::new(&[Monogenic::new(Kind::C, 0), Monogenic::new(Kind::C, 0)]).unwrap();
        assert_eq!(f.module().group(Part::U, 0).rank(), 4);
        assert!(FreeCrt::<Int>::new(&[]).unwrap().module().is_zero());
    }

    #[test]
    fn basis_word_counts_cover_ranks() {
        for kind in Kind::ALL {
            let (m, g) = monogenic::<Int>(kind, 0).unwrap();
            let b = BasisWords::compute(&m, &g).unwrap();
            for p in Part::ALL {
                for n in 0..8 {
                    assert!(b.at(p, n).len() >= m.group(p, n).ngens());
                }
            }
        }
    }

    #[test]
    fn identity_images_realize_identity() {
        for kind in Kind::ALL {
            let f = FreeCrt::<Int>::new(&[Monogenic::new(kind, 3)]).unwrap();
            let fm = FreeMorphism::new(f.clone(), f.module().clone(), vec![f.generator(0)]).unwrap();
            assert_eq!(fm.realize().unwrap(), CrtMorphism::identity(f.module()));
        }
    }

    #[test]
    fn multiplication_by_k_realizes_to_scalar() {
        let f = FreeCrt::<Int>::new(&[Monogenic::new(Kind::R, 0)]).unwrap();
        let img = Element::new(Part::O, 0, z(&[3]));
        let phi = FreeMorphism::new(f.clone(), f.module().clone(), vec![img]).unwrap().realize().unwrap();
        for p in Part::ALL {
            for n in 0..8 {
                let h = phi.map(p, n);
                let g = h.domain().clone();
                assert_eq!(h, &GroupHom::multiplication(&g, Int::from(3)));
            }
        }
    }

    #[test]
    fn realization_respects_composition() {
        // φ: F(R,0) → F(R,0)⊕F(R,2), b ↦ (b, η_O² b)… composed with the projection to the first summand.
        let f = FreeCrt::<Int>::new(&[Monogenic::new(Kind::R, 0)]).unwrap();
        let g = FreeCrt::<Int>::new(&[Monogenic::new(Kind::R, 0), Monogenic::new(Kind::R, 2)]).unwrap();
        let x = g.generator(0);
        let phi = FreeMorphism::new(f.clone(), g.module().clone(), vec![x]).unwrap().realize().unwrap();
        let psi = FreeMorphism::new(g.clone(), f.module().clone(), vec![f.generator(0), Element::zero(f.module(), Part::O, 2)])
            .unwrap()
            .realize()
            .unwrap();
        let comp = psi.compose(&phi).unwrap();
        assert_eq!(comp, CrtMorphism::identity(f.module()));
    }

    #[test]
    fn unnatural_images_are_rejected() {
        // A generator image in the wrong location is refused up front.
        let f = FreeCrt::<Int>::new(&[Monogenic::new(Kind::R, 0)]).unwrap();
        let bad = Element::new(Part::O, 1, z(&[1]));
        assert!(FreeMorphism::new(f.clone(), f.module().clone(), vec![bad]).is_err());
    }
}
