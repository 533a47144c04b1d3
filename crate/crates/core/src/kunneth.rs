//! The Künneth extension problem: find every CRT-module `K` fitting into
//! `0 → A → K → Σ^{-1} B → 0` (so `K_n` is an extension of `B_{n−1}` by `A_n`)
//! with `K` satisfying the relations and acyclic, up to isomorphism.
//!
//! # Search
//!
//! In each part and degree, `K` is generated by the generators `a` of `A` and
//! lifts `x_j` of the generators of `B' = Σ^{-1}B`, with relations those of `A`
//! and `b_j x_j = e_j` for extension data `e_j ∈ A / b_j A` (one choice per
//! Bott-periodic slot). An operation `φ` of `K` then has block form
//! `[[φ_A, Δ], [0, φ_{B'}]]`; well-definedness forces
//! `b_j δ_j = φ_A(e_j) − Σ_i (b_j q_ij / b'_i) e'_i`, where `q = φ_{B'}`.
//! These two families of unknowns are assigned by backtracking in a fixed
//! greedy order; every relation and every exactness condition is checked as
//! soon as all operations it reads are assigned.
//!
//! Changing the lifts `x_j ↦ x_j + g_j` (`g_j ∈ A[b_j]`) does not change the
//! isomorphism type; the first operation touching a slot only ranges over
//! orbit representatives under this action. Complete solutions are
//! deduplicated exactly and then up to CRT-isomorphism.

use std::collections::{BTreeMap, HashSet};

use crate::catalog;
use crate::crt::{
    crt_isomorphic, crt_isomorphic_with_budget, direct_sum, exactness_nodes, is_acyclic, suspend, verify_relations,
    wrap, CrtModule, CrtMorphism, ExactnessNode, Op, Part, RelationKind, RelationView, DEFAULT_ISO_BUDGET, WINDOW,
};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tensor::{cuntz_resolution, resolve, tensor_and_tor, FreeResolution};
use crate::zlinalg::{quotient, FinAbGroup, GroupHom, Matrix, Presentation};

/// Largest group order per part and degree accepted by [`solve_middle`].
pub const MAX_GROUP_ORDER: usize = 4096;

/// Default cap on search nodes for [`solve_middle`].
pub const DEFAULT_BUDGET: usize = 5_000_000;

/// Input of the extension problem: the tensor product and `Tor` term.
#[derive(Clone, Debug)]
pub struct KunnethProblem<S> {
    pub tensor: CrtModule<S>,
    pub tor: CrtModule<S>,
}

impl<S: Scalar> KunnethProblem<S> {
    pub fn new(tensor: CrtModule<S>, tor: CrtModule<S>) -> Result<Self> {
        for m in [&tensor, &tor] {
            for p in Part::ALL {
                for g in m.part(p) {
                    match g.order_usize() {
                        None => return Err(Error::Infinite(format!("group {g} in part {}", p.name()))),
                        Some(o) if o > MAX_GROUP_ORDER => {
                            return Err(Error::BoundExceeded(format!("group {g} has order above {MAX_GROUP_ORDER}")))
                        }
                        _ => {}
                    }
                }
            }
        }
        Ok(KunnethProblem { tensor, tor })
    }

    /// The quotient term `Σ^{-1} Tor`, whose degree-`n` groups are `Tor_{n−1}`.
    pub fn shifted_tor(&self) -> CrtModule<S> {
        suspend(&self.tor, -1)
    }

    /// The split candidate `tensor ⊕ Σ^{-1} Tor`.
    pub fn split_module(&self) -> CrtModule<S> {
        direct_sum(&self.tensor, &self.shifted_tor())
    }
}

/// One middle term with its structure maps.
#[derive(Clone, Debug)]
pub struct KunnethSolution<S> {
    pub middle: CrtModule<S>,
    /// `α : tensor → K`, injective.
    pub alpha: CrtMorphism<S>,
    /// `β : K → Σ^{-1} Tor`, surjective (degree −1 onto `Tor`).
    pub beta: CrtMorphism<S>,
    /// Whether `K ≅ tensor ⊕ Σ^{-1} Tor`.
    pub split: bool,
}

/// Result of [`solve_middle`].
#[derive(Clone, Debug)]
pub struct MiddleSolutions<S> {
    /// One solution per isomorphism class, in discovery order.
    pub solutions: Vec<KunnethSolution<S>>,
    /// Complete assignments found before deduplication.
    pub raw_solutions: usize,
    /// Distinct canonical modules among them.
    pub distinct_modules: usize,
    /// Search nodes visited.
    pub nodes: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Slot {
    part: Part,
    class: usize,
}

fn slot_of(part: Part, n: i64) -> Slot {
    Slot { part, class: n.rem_euclid(part.period() as i64) as usize }
}

fn all_slots() -> Vec<Slot> {
    Part::ALL.into_iter().flat_map(|p| (0..p.period()).map(move |class| Slot { part: p, class })).collect()
}

/// An operation unknown: the family `op` in degrees `≡ class (mod period)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct OpVar {
    op: Op,
    class: usize,
}

impl OpVar {
    fn of(op: Op, n: i64) -> Self {
        OpVar { op, class: n.rem_euclid(op.period() as i64) as usize }
    }
    fn src(self) -> Slot {
        slot_of(self.op.source(), self.class as i64)
    }
    fn tgt(self) -> Slot {
        slot_of(self.op.target(), self.class as i64 + self.op.shift())
    }
    /// Degrees in the window represented by this unknown.
    fn degrees(self) -> impl Iterator<Item = i64> {
        let p = self.op.period();
        (0..WINDOW as i64).filter(move |n| (*n as usize) % p == self.class)
    }
}

#[derive(Clone, Copy, Debug)]
enum Var {
    Ext(Slot),
    Op(OpVar),
}

#[derive(Clone, Copy, Debug)]
enum Check {
    Relation(RelationKind, i64),
    Exact(ExactnessNode, i64),
}

impl Check {
    fn deps(&self) -> Vec<(Op, i64)> {
        match *self {
            Check::Relation(r, n) => r.deps(n),
            Check::Exact(e, n) => e.deps(n),
        }
    }
}

/// A choice of extension data in one slot, with the resulting middle group.
#[derive(Clone, Debug)]
struct SlotChoice<S> {
    /// `e_j` in coordinates of `A`, one per generator of `B'`.
    ext: Vec<Vec<S>>,
    pres: Presentation<S>,
}

/// Static data of one slot.
struct SlotData<S> {
    a: FinAbGroup<S>,
    b: FinAbGroup<S>,
    choices: Vec<SlotChoice<S>>,
    /// `A[b_j]` for each generator of `B'`.
    torsion_gauge: Vec<Vec<Vec<S>>>,
}

fn scale_vec<S: Scalar>(v: &[S], k: &S) -> Vec<S> {
    v.iter().map(|x| x.clone() * k.clone()).collect()
}

fn add_vec<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

fn sub_vec<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

/// Representatives of `A / bA` in coordinates of `A`.
fn coset_reps<S: Scalar>(a: &FinAbGroup<S>, b: &S) -> Result<Vec<Vec<S>>> {
    if b.is_zero() {
        return Ok(vec![vec![S::zero(); a.ngens()]]);
    }
    let q = quotient(a, &Matrix::scalar(a.ngens(), b.clone()));
    Ok(q.group.elements()?.iter().map(|c| a.reduce(&q.lifts.apply(c))).collect())
}

/// `{ x ∈ A : b x = 0 }`.
fn b_torsion<S: Scalar>(a: &FinAbGroup<S>, b: &S) -> Result<Vec<Vec<S>>> {
    Ok(a.elements()?.into_iter().filter(|x| a.is_zero_element(&scale_vec(x, b))).collect())
}

/// Cartesian product of per-coordinate lists.
fn product<T: Clone>(lists: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = vec![Vec::new()];
    for l in lists {
        let mut next = Vec::with_capacity(out.len() * l.len());
        for v in &out {
            for x in l {
                let mut w = v.clone();
                w.push(x.clone());
                next.push(w);
            }
        }
        out = next;
    }
    out
}

fn build_slot<S: Scalar>(a: &FinAbGroup<S>, b: &FinAbGroup<S>) -> Result<SlotData<S>> {
    let bs = b.invariants();
    let per_gen: Vec<Vec<Vec<S>>> = bs.iter().map(|bj| coset_reps(a, bj)).collect::<Result<_>>()?;
    let np = a.ngens();
    let nq = b.ngens();
    let mut choices = Vec::new();
    for ext in product(&per_gen) {
        let mut rel = Matrix::zeros(np + nq, np + nq);
        for (i, o) in a.invariants().iter().enumerate() {
            rel.set(i, i, o.clone());
        }
        for (j, bj) in bs.iter().enumerate() {
            for i in 0..np {
                rel.set(i, np + j, -ext[j][i].clone());
            }
            rel.set(np + j, np + j, bj.clone());
        }
        choices.push(SlotChoice { ext, pres: Presentation::new(&rel) });
    }
    let torsion_gauge = bs.iter().map(|bj| b_torsion(a, bj)).collect::<Result<_>>()?;
    Ok(SlotData { a: a.clone(), b: b.clone(), choices, torsion_gauge })
}

/// A candidate block `Δ` (columns `δ_j` in coordinates of the target `A`).
type Delta<S> = Vec<Vec<S>>;

struct Solver<'a, S> {
    a: &'a CrtModule<S>,
    b: &'a CrtModule<S>,
    slots: BTreeMap<Slot, SlotData<S>>,
    order: Vec<Var>,
    /// Checks to run right after assigning the variable at each position.
    checks_at: Vec<Vec<Check>>,
    /// For op variables: slots whose lift choice is still free at that position.
    free_gauge: Vec<Vec<Slot>>,
    // Current assignment.
    ext: BTreeMap<Slot, usize>,
    homs: Vec<Vec<Option<GroupHom<S>>>>,
    deltas: BTreeMap<OpVar, Delta<S>>,
    nodes: usize,
    budget: usize,
    found: Vec<CrtModule<S>>,
    raw: usize,
    seen: HashSet<CrtModule<S>>,
}

struct PartialView<'s, 'a, S>(&'s Solver<'a, S>);

impl<S: Scalar> RelationView<S> for PartialView<'_, '_, S> {
    fn hom(&self, op: Op, n: i64) -> GroupHom<S> {
        self.0.homs[op.index()][wrap(n)].clone().expect("checks only read assigned operations")
    }
}

impl<'a, S: Scalar> Solver<'a, S> {
    fn new(a: &'a CrtModule<S>, b: &'a CrtModule<S>, budget: usize) -> Result<Self> {
        let mut slots = BTreeMap::new();
        for s in all_slots() {
            slots.insert(s, build_slot(a.group(s.part, s.class as i64), b.group(s.part, s.class as i64))?);
        }
        let mut checks = Vec::new();
        for r in RelationKind::ALL {
            for n in 0..WINDOW as i64 {
                checks.push(Check::Relation(r, n));
            }
        }
        for e in exactness_nodes() {
            for n in 0..WINDOW as i64 {
                checks.push(Check::Exact(e, n));
            }
        }
        let check_vars: Vec<Vec<OpVar>> = checks
            .iter()
            .map(|c| {
                let mut v: Vec<OpVar> = c.deps().into_iter().map(|(op, n)| OpVar::of(op, n)).collect();
                v.sort();
                v.dedup();
                v
            })
            .collect();
        // Greedy static order: repeatedly take the operation completing the most
        // checks, ties broken by fewest new slots and then by a fixed order.
        let all_vars: Vec<OpVar> = Op::ALL
            .into_iter()
            .flat_map(|op| (0..op.period()).map(move |class| OpVar { op, class }))
            .collect();
        let mut assigned: HashSet<OpVar> = HashSet::new();
        let mut slot_done: HashSet<Slot> = HashSet::new();
        let mut order = Vec::new();
        let mut checks_at = Vec::new();
        let mut free_gauge = Vec::new();
        let mut done_checks = vec![false; checks.len()];
        while assigned.len() < all_vars.len() {
            let score = |v: &OpVar| {
                let completes = check_vars
                    .iter()
                    .enumerate()
                    .filter(|(i, deps)| !done_checks[*i] && deps.contains(v) && deps.iter().all(|d| d == v || assigned.contains(d)))
                    .count();
                let touches = check_vars.iter().filter(|deps| deps.contains(v)).count();
                let new_slots = [v.src(), v.tgt()].iter().filter(|s| !slot_done.contains(s)).count();
                (completes, touches, usize::MAX - new_slots)
            };
            let best = *all_vars.iter().filter(|v| !assigned.contains(v)).max_by_key(|v| score(v)).unwrap();
            let mut gauge = Vec::new();
            for s in [best.src(), best.tgt()] {
                if slot_done.insert(s) {
                    order.push(Var::Ext(s));
                    checks_at.push(Vec::new());
                    free_gauge.push(Vec::new());
                    gauge.push(s);
                }
            }
            gauge.dedup();
            assigned.insert(best);
            order.push(Var::Op(best));
            let mut now = Vec::new();
            for (i, deps) in check_vars.iter().enumerate() {
                if !done_checks[i] && deps.iter().all(|d| assigned.contains(d)) {
                    done_checks[i] = true;
                    now.push(checks[i]);
                }
            }
            checks_at.push(now);
            free_gauge.push(gauge);
        }
        for s in all_slots() {
            if !slot_done.contains(&s) {
                order.push(Var::Ext(s));
                checks_at.push(Vec::new());
                free_gauge.push(Vec::new());
            }
        }
        Ok(Solver {
            a,
            b,
            slots,
            order,
            checks_at,
            free_gauge,
            ext: BTreeMap::new(),
            homs: vec![vec![None; WINDOW]; Op::ALL.len()],
            deltas: BTreeMap::new(),
            nodes: 0,
            budget,
            found: Vec::new(),
            raw: 0,
            seen: HashSet::new(),
        })
    }

    fn choice(&self, s: Slot) -> &SlotChoice<S> {
        &self.slots[&s].choices[self.ext[&s]]
    }

    /// All well-defined blocks `Δ` for `v` under the current extension data,
    /// reduced to orbit representatives under the free lift changes.
    fn domain(&self, v: OpVar, free: &[Slot]) -> Result<Vec<Delta<S>>> {
        let n = v.class as i64;
        let (s, t) = (v.src(), v.tgt());
        let sd = &self.slots[&s];
        let td = &self.slots[&t];
        let phi_a = self.a.op(v.op, n);
        let q = self.b.op(v.op, n).matrix();
        let e_src = &self.choice(s).ext;
        let e_tgt = &self.choice(t).ext;
        let a_t = &td.a;
        let elems = a_t.elements()?;
        let bs = sd.b.invariants();
        let bt = td.b.invariants();
        let mut cols: Vec<Vec<Vec<S>>> = Vec::new();
        for (j, bj) in bs.iter().enumerate() {
            let mut rhs = phi_a.apply(&e_src[j]);
            for (i, bi) in bt.iter().enumerate() {
                if bi.is_zero() {
                    continue;
                }
                let coef = bj.clone() * q.get(i, j).clone() / bi.clone();
                rhs = sub_vec(&rhs, &scale_vec(&e_tgt[i], &coef));
            }
            let rhs = a_t.reduce(&rhs);
            let sols: Vec<Vec<S>> = elems.iter().filter(|x| a_t.reduce(&scale_vec(x, bj)) == rhs).cloned().collect();
            if sols.is_empty() {
                return Ok(Vec::new());
            }
            cols.push(sols);
        }
        let all = product(&cols);
        let src_free = free.contains(&s);
        let tgt_free = free.contains(&t);
        if !(src_free || tgt_free) || all.len() <= 1 {
            return Ok(all);
        }
        // Gauge group: lift changes at the free slots (shared when s = t).
        let gs: Vec<Vec<Vec<S>>> = if src_free { product(&sd.torsion_gauge) } else { vec![vec![vec![S::zero(); sd.a.ngens()]; bs.len()]] };
        let gt: Vec<Vec<Vec<S>>> = if s == t {
            Vec::new()
        } else if tgt_free {
            product(&td.torsion_gauge)
        } else {
            vec![vec![vec![S::zero(); a_t.ngens()]; bt.len()]]
        };
        let act = |d: &Delta<S>, g_s: &[Vec<S>], g_t: &[Vec<S>]| -> Delta<S> {
            (0..bs.len())
                .map(|j| {
                    let mut x = add_vec(&d[j], &phi_a.apply(&g_s[j]));
                    for (i, gi) in g_t.iter().enumerate() {
                        x = sub_vec(&x, &scale_vec(gi, q.get(i, j)));
                    }
                    a_t.reduce(&x)
                })
                .collect()
        };
        let mut out = Vec::new();
        'cand: for d in &all {
            for g_s in &gs {
                if s == t {
                    if act(d, g_s, g_s) < *d {
                        continue 'cand;
                    }
                } else {
                    for g_t in &gt {
                        if act(d, g_s, g_t) < *d {
                            continue 'cand;
                        }
                    }
                }
            }
            out.push(d.clone());
        }
        Ok(out)
    }

    /// Canonical homomorphisms of `v` in all its degrees for block `Δ`.
    fn realize(&self, v: OpVar, delta: &Delta<S>) -> Result<Vec<(i64, GroupHom<S>)>> {
        let (s, t) = (v.src(), v.tgt());
        let ps = &self.choice(s).pres;
        let pt = &self.choice(t).pres;
        let mut out = Vec::new();
        for n in v.degrees() {
            let phi_a = self.a.op(v.op, n).matrix();
            let phi_b = self.b.op(v.op, n).matrix();
            let sign = if v.op == Op::PsiU && n.rem_euclid(4) >= 2 { -S::one() } else { S::one() };
            let (pa, qa) = (phi_a.rows(), phi_a.cols());
            let (pb, qb) = (phi_b.rows(), phi_b.cols());
            let mut m = Matrix::zeros(pa + pb, qa + qb);
            m.write_block(0, 0, phi_a);
            m.write_block(pa, qa, phi_b);
            if qb > 0 && pa > 0 {
                let d = Matrix::from_columns(delta, pa).scale(&sign);
                m.write_block(0, qa, &d);
            }
            let canon = &(&pt.proj * &m) * &ps.lifts;
            out.push((n, GroupHom::new(ps.group.clone(), pt.group.clone(), canon)?));
        }
        Ok(out)
    }

    fn tick(&mut self, pos: usize) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::Budget(format!(
                "extension search exceeded {} nodes at step {pos} of {} with {} solutions so far",
                self.budget,
                self.order.len(),
                self.raw
            )));
        }
        Ok(())
    }

    fn middle_groups(&self) -> [Vec<FinAbGroup<S>>; 3] {
        std::array::from_fn(|p| {
            (0..WINDOW as i64).map(|n| self.choice(slot_of(Part::ALL[p], n)).pres.group.clone()).collect()
        })
    }

    fn record(&mut self) -> Result<()> {
        self.raw += 1;
        let ops = Op::ALL
            .iter()
            .map(|op| self.homs[op.index()].iter().map(|h| h.clone().expect("all operations assigned")).collect())
            .collect();
        let m = CrtModule::from_homs(self.middle_groups(), ops)?;
        if self.seen.insert(m.clone()) {
            self.found.push(m);
        }
        Ok(())
    }

    /// Structure maps for the current extension data.
    fn structure_maps(&self, m: &CrtModule<S>) -> Result<(CrtMorphism<S>, CrtMorphism<S>)> {
        let mut alpha: [Vec<GroupHom<S>>; 3] = Default::default();
        let mut beta: [Vec<GroupHom<S>>; 3] = Default::default();
        for p in Part::ALL {
            for n in 0..WINDOW as i64 {
                let c = self.choice(slot_of(p, n));
                let (na, nb) = (self.a.group(p, n).ngens(), self.b.group(p, n).ngens());
                let inc = Matrix::identity(na).vcat(&Matrix::zeros(nb, na));
                let proj = Matrix::zeros(nb, na).hcat(&Matrix::identity(nb));
                alpha[p.index()].push(GroupHom::new(self.a.group(p, n).clone(), m.group(p, n).clone(), &c.pres.proj * &inc)?);
                beta[p.index()].push(GroupHom::new(m.group(p, n).clone(), self.b.group(p, n).clone(), &proj * &c.pres.lifts)?);
            }
        }
        Ok((CrtMorphism::new(self.a.clone(), m.clone(), alpha)?, CrtMorphism::new(m.clone(), self.b.clone(), beta)?))
    }
}

/// Enumerates the middle terms of the Künneth sequence, one per isomorphism
/// class, exploring at most `budget` search nodes.
pub fn solve_middle<S: Scalar>(p: &KunnethProblem<S>, budget: usize) -> Result<MiddleSolutions<S>> {
    let b = p.shifted_tor();
    if p.tor.is_zero() {
        let sol = trivial_solution(p)?;
        return Ok(MiddleSolutions { solutions: vec![sol], raw_solutions: 1, distinct_modules: 1, nodes: 0 });
    }
    let mut solver = Solver::new(&p.tensor, &b, budget)?;
    // Structure maps depend on the extension data of each solution, so they
    // are rebuilt right when a solution is recorded.
    let mut with_maps: Vec<KunnethSolution<S>> = Vec::new();
    let mut seen_count = 0;
    solver.run_collecting(0, &mut |solver, m| {
        if seen_count < solver.found.len() {
            seen_count = solver.found.len();
            let (alpha, beta) = solver.structure_maps(m)?;
            with_maps.push(KunnethSolution { middle: m.clone(), alpha, beta, split: false });
        }
        Ok(())
    })?;
    let distinct = solver.found.len();
    let mut classes: Vec<KunnethSolution<S>> = Vec::new();
    for sol in with_maps {
        let mut new = true;
        for c in &classes {
            if crt_isomorphic(&c.middle, &sol.middle)?.is_some() {
                new = false;
                break;
            }
        }
        if new {
            classes.push(sol);
        }
    }
    let split_module = p.split_module();
    for c in &mut classes {
        c.split = crt_isomorphic_with_budget(&c.middle, &split_module, DEFAULT_ISO_BUDGET)?.is_some();
    }
    if classes.is_empty() {
        return Err(Error::NoSolution(format!(
            "no middle term satisfies the relations and acyclicity ({} nodes searched)",
            solver.nodes
        )));
    }
    Ok(MiddleSolutions { solutions: classes, raw_solutions: solver.raw, distinct_modules: distinct, nodes: solver.nodes })
}

impl<S: Scalar> Solver<'_, S> {
    /// Like [`Solver::run`], invoking `on_solution` after each recorded solution.
    fn run_collecting(
        &mut self,
        pos: usize,
        on_solution: &mut dyn FnMut(&Solver<'_, S>, &CrtModule<S>) -> Result<()>,
    ) -> Result<()> {
        if pos == self.order.len() {
            self.record()?;
            let m = self.found.last().cloned().expect("recorded");
            return on_solution(self, &m);
        }
        match self.order[pos] {
            Var::Ext(s) => {
                for i in 0..self.slots[&s].choices.len() {
                    self.tick(pos)?;
                    self.ext.insert(s, i);
                    self.run_collecting(pos + 1, on_solution)?;
                }
                self.ext.remove(&s);
            }
            Var::Op(v) => {
                let free = self.free_gauge[pos].clone();
                for delta in self.domain(v, &free)? {
                    self.tick(pos)?;
                    for (n, h) in self.realize(v, &delta)? {
                        self.homs[v.op.index()][n as usize] = Some(h);
                    }
                    let view = PartialView(self);
                    let ok = self.checks_at[pos].iter().all(|c| match *c {
                        Check::Relation(r, n) => r.holds_in(&view, n),
                        Check::Exact(e, n) => e.holds_in(&view, n),
                    });
                    if ok {
                        self.deltas.insert(v, delta);
                        self.run_collecting(pos + 1, on_solution)?;
                        self.deltas.remove(&v);
                    }
                }
                for n in v.degrees() {
                    self.homs[v.op.index()][n as usize] = None;
                }
            }
        }
        Ok(())
    }
}

fn trivial_solution<S: Scalar>(p: &KunnethProblem<S>) -> Result<KunnethSolution<S>> {
    let middle = p.tensor.clone();
    let alpha = CrtMorphism::identity(&middle);
    let zero = p.shifted_tor();
    let beta_maps = std::array::from_fn(|i| {
        let part = Part::ALL[i];
        (0..WINDOW as i64).map(|n| GroupHom::zero(middle.group(part, n), zero.group(part, n))).collect()
    });
    let beta = CrtMorphism::new(middle.clone(), zero, beta_maps)?;
    Ok(KunnethSolution { middle, alpha, beta, split: true })
}

/// Whether a middle term is isomorphic to `tensor ⊕ Σ^{-1} Tor`.
pub fn split_check<S: Scalar>(middle: &CrtModule<S>, p: &KunnethProblem<S>) -> Result<bool> {
    Ok(crt_isomorphic(middle, &p.split_module())?.is_some())
}

/// Validates a solution: exactness in every part and degree, relations, acyclicity.
pub fn validate_solution<S: Scalar>(sol: &KunnethSolution<S>) -> Result<bool> {
    if !sol.alpha.is_injective() || !sol.beta.is_surjective() {
        return Ok(false);
    }
    for p in Part::ALL {
        for n in 0..WINDOW as i64 {
            if !crate::zlinalg::is_exact_at(sol.alpha.map(p, n), sol.beta.map(p, n))? {
                return Ok(false);
            }
        }
    }
    Ok(verify_relations(&sol.middle).passed() && is_acyclic(&sol.middle)?.passed())
}

/// Full report of [`kunneth_pipeline`].
#[derive(Clone, Debug)]
pub struct KunnethReport<S> {
    pub left: String,
    pub right: String,
    pub resolution: FreeResolution<S>,
    pub problem: KunnethProblem<S>,
    pub result: MiddleSolutions<S>,
    /// The stored table for this pair, when one exists.
    pub expected: Option<CrtModule<S>>,
    /// Whether every solution is isomorphic to the stored table.
    pub matches_expected: Option<bool>,
}

/// Catalog names → resolution of the left factor → `⊗` and `Tor` →
/// extension search → comparison with the stored table.
pub fn kunneth_pipeline<S: Scalar>(left: &str, right: &str, budget: usize) -> Result<KunnethReport<S>> {
    let a = catalog::lookup::<S>(left)?;
    let b = catalog::lookup::<S>(right)?;
    let cuntz_k = |e: &catalog::CatalogEntry<S>| {
        if e.template.starts_with("cuntz") {
            e.params.get("k").copied()
        } else {
            None
        }
    };
    let resolution = match cuntz_k(&a) {
        Some(k) => cuntz_resolution(k)?,
        None => resolve(&a.module)?,
    };
    let tt = tensor_and_tor(&resolution, &b.module)?;
    let problem = KunnethProblem::new(tt.tensor, tt.tor)?;
    let result = solve_middle(&problem, budget)?;
    let expected = match (cuntz_k(&a), cuntz_k(&b)) {
        (Some(k), Some(l)) => Some(catalog::expected_product::<S>(k, l)?.module),
        _ => None,
    };
    let matches_expected = match &expected {
        Some(e) => {
            let mut all = true;
            for s in &result.solutions {
                all &= crt_isomorphic(&s.middle, e)?.is_some();
            }
            Some(all)
        }
        None => None,
    };
    if expected.is_some() && result.solutions.len() > 1 {
        let dump: Vec<serde_json::Value> =
            result.solutions.iter().map(|s| crate::crt::module_to_json(&s.middle)).collect();
        return Err(Error::Ambiguous(format!(
            "{} non-isomorphic middle terms for {left} ⊗ {right}: {}",
            result.solutions.len(),
            serde_json::Value::Array(dump)
        )));
    }
    Ok(KunnethReport { left: a.name, right: b.name, resolution, problem, result, expected, matches_expected })
}

/// The complex Künneth answer from cyclic groups alone:
/// `K^U_n = ⊕_{i+j≡n} ℤ_k,i ⊗ ℤ_l,j ⊕ ⊕_{i+j≡n−1} Tor(ℤ_k,i, ℤ_l,j)`, where the
/// complex K-theory of `O_{k+1}` is `ℤ_k` in even degrees and 0 in odd ones.
pub fn classical_complex_kunneth<S: Scalar>(k: i64, l: i64) -> [FinAbGroup<S>; 2] {
    let ku = |m: i64, d: i64| if d % 2 == 0 { vec![m] } else { Vec::new() };
    let mut out: [Vec<S>; 2] = Default::default();
    for i in 0..2 {
        for j in 0..2 {
            for &x in &ku(k, i) {
                for &y in &ku(l, j) {
                    let g = num_integer::gcd(x, y);
                    out[((i + j) % 2) as usize].push(S::from_int(g));
                    out[((i + j + 1) % 2) as usize].push(S::from_int(g));
                }
            }
        }
    }
    [FinAbGroup::from_orders(&out[0]), FinAbGroup::from_orders(&out[1])]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Int;

    fn pipeline(k: i64, l: i64) -> KunnethReport<Int> {
        kunneth_pipeline::<Int>(&format!("O{}", k + 1), &format!("O{}", l + 1), DEFAULT_BUDGET).unwrap()
    }

    #[test]
    fn zero_tor_gives_the_tensor() {
        let t = catalog::cuntz::<Int>(3).unwrap().module;
        let p = KunnethProblem::new(t.clone(), CrtModule::zero()).unwrap();
        let r = solve_middle(&p, 10).unwrap();
        assert_eq!(r.solutions.len(), 1);
        assert_eq!(r.solutions[0].middle, t);
        assert!(r.solutions[0].split);
        assert!(validate_solution(&r.solutions[0]).unwrap());
    }

    #[test]
    fn trivial_pair_is_zero() {
        let r = pipeline(1, 1);
        assert!(r.result.solutions[0].middle.is_zero());
    }

    #[test]
    fn odd_pair_splits_and_matches() {
        let r = pipeline(3, 6);
        assert_eq!(r.result.solutions.len(), 1);
        assert!(r.result.solutions[0].split);
        assert_eq!(r.matches_expected, Some(true));
        assert!(validate_solution(&r.result.solutions[0]).unwrap());
    }

    #[test]
    fn order_balance() {
        let r = pipeline(2, 2);
        let s = &r.result.solutions[0];
        for p in Part::ALL {
            for n in 0..WINDOW as i64 {
                let k = s.middle.group(p, n).order_usize().unwrap();
                let a = r.problem.tensor.group(p, n).order_usize().unwrap();
                let b = r.problem.tor.group(p, n - 1).order_usize().unwrap();
                assert_eq!(k, a * b);
            }
        }
    }

    #[test]
    fn classical_complex_answer() {
        let [even, odd] = classical_complex_kunneth::<Int>(4, 6);
        assert_eq!(even, FinAbGroup::cyclic(Int::from(2)));
        assert_eq!(odd, FinAbGroup::cyclic(Int::from(2)));
        let [even, _] = classical_complex_kunneth::<Int>(3, 5);
        assert!(even.is_trivial());
    }

    #[test]
    fn even_pairs_are_unique_and_match() {
        for (k, l) in [(2, 2), (2, 4), (4, 2), (4, 4), (6, 10)] {
            let r = pipeline(k, l);
            assert_eq!(r.result.solutions.len(), 1, "({k},{l})");
            assert_eq!(r.matches_expected, Some(true), "({k},{l})");
            let s = &r.result.solutions[0];
            assert!(!s.split, "({k},{l})");
            assert!(validate_solution(s).unwrap(), "({k},{l})");
        }
    }

    #[test]
    fn zero_mod_four_pair_does_not_split_on_groups() {
        let r = pipeline(4, 4);
        let m = &r.result.solutions[0].middle;
        let z4 = FinAbGroup::cyclic(Int::from(4));
        assert_eq!(m.group(Part::T, 0), &FinAbGroup::from_orders(&[Int::from(4), Int::from(4)]));
        assert_eq!(m.group(Part::O, 5), &z4);
        let sum = r.problem.split_module();
        assert_ne!(sum.group(Part::T, 0), m.group(Part::T, 0));
        assert!(!split_check(m, &r.problem).unwrap());
    }

    #[test]
    fn complex_parts_follow_the_classical_answer() {
        for (k, l) in [(2, 2), (2, 4), (3, 6), (4, 4)] {
            let r = pipeline(k, l);
            let expect = classical_complex_kunneth::<Int>(k, l);
            for n in 0..2 {
                assert_eq!(r.result.solutions[0].middle.group(Part::U, n), &expect[n as usize], "({k},{l})");
            }
        }
    }
}
