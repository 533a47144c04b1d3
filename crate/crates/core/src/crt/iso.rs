//! Isomorphism search between CRT-modules with finite parts.
//!
//! Variables are the Bott-periodic slots `M^O_0..7`, `M^U_0..1`, `M^T_0..3`;
//! each ranges over the automorphisms of its (common) canonical group.
//! Commutation with every operation is a binary constraint between two slots;
//! the search assigns slots greedily (most constrained first) with forward
//! checking, in a deterministic order.

use std::collections::HashMap;

use crate::crt::{CrtModule, CrtMorphism, Op, Part, WINDOW};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::zlinalg::{hom_compose, FinAbGroup, GroupHom, Matrix};

/// Default cap on search nodes for [`crt_isomorphic`].
pub const DEFAULT_ISO_BUDGET: usize = 2_000_000;

/// Cap on generator-image tuples examined when enumerating automorphisms of one group.
const AUTOMORPHISM_TUPLE_CAP: usize = 5_000_000;

/// An isomorphism witness.
pub type IsoWitness<S> = CrtMorphism<S>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct Slot {
    part: Part,
    class: usize,
}

fn slot_of(part: Part, n: i64) -> Slot {
    Slot { part, class: n.rem_euclid(part.period() as i64) as usize }
}

fn all_slots() -> Vec<Slot> {
    Part::ALL
        .into_iter()
        .flat_map(|p| (0..p.period()).map(move |class| Slot { part: p, class }))
        .collect()
}

/// All automorphisms of a finite canonical group, in deterministic order.
pub fn automorphisms<S: Scalar>(g: &FinAbGroup<S>) -> Result<Vec<GroupHom<S>>> {
    if !g.is_finite() {
        return Err(Error::Infinite(format!("automorphisms of {g}")));
    }
    let elems = g.elements_bounded(4096)?;
    let cands: Vec<Vec<&Vec<S>>> = g
        .torsion()
        .iter()
        .map(|t| elems.iter().filter(|x| g.element_order(x).as_ref() == Some(t)).collect())
        .collect();
    let total = cands.iter().try_fold(1usize, |acc, c| acc.checked_mul(c.len()));
    if total.is_none_or(|t| t > AUTOMORPHISM_TUPLE_CAP) {
        return Err(Error::Budget(format!("too many automorphism candidates for {g}")));
    }
    let mut out = Vec::new();
    if g.is_trivial() {
        out.push(GroupHom::identity(g));
        return Ok(out);
    }
    let mut idx = vec![0usize; cands.len()];
    'outer: loop {
        let cols: Vec<Vec<S>> = idx.iter().zip(&cands).map(|(&i, c)| c[i].clone()).collect();
        let h = GroupHom::new(g.clone(), g.clone(), Matrix::from_columns(&cols, g.ngens()))?;
        if h.is_injective() {
            out.push(h);
        }
        let mut k = 0;
        loop {
            if k == idx.len() {
                break 'outer;
            }
            idx[k] += 1;
            if idx[k] < cands[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
    Ok(out)
}

/// Searches for a CRT-isomorphism `m → n` using the default budget.
pub fn crt_isomorphic<S: Scalar>(m: &CrtModule<S>, n: &CrtModule<S>) -> Result<Option<IsoWitness<S>>> {
    crt_isomorphic_with_budget(m, n, DEFAULT_ISO_BUDGET)
}

/// A commutation constraint `N.op ∘ φ(src) = φ(tgt) ∘ M.op` at one degree.
struct Constraint {
    op: Op,
    degree: i64,
    src: Slot,
    tgt: Slot,
}

/// Searches for a CRT-isomorphism `m → n` exploring at most `budget` search nodes.
pub fn crt_isomorphic_with_budget<S: Scalar>(
    m: &CrtModule<S>,
    n: &CrtModule<S>,
    budget: usize,
) -> Result<Option<IsoWitness<S>>> {
    if !m.is_finite() || !n.is_finite() {
        return Err(Error::Infinite("isomorphism search requires finite parts".into()));
    }
    for p in Part::ALL {
        if m.part(p) != n.part(p) {
            return Ok(None);
        }
    }
    let slots = all_slots();
    let mut cache: HashMap<FinAbGroup<S>, Vec<GroupHom<S>>> = HashMap::new();
    let mut domains: HashMap<Slot, Vec<usize>> = HashMap::new();
    let mut autos: HashMap<Slot, Vec<GroupHom<S>>> = HashMap::new();
    for &s in &slots {
        let g = m.group(s.part, s.class as i64);
        if !cache.contains_key(g) {
            cache.insert(g.clone(), automorphisms(g)?);
        }
        let list = cache[g].clone();
        domains.insert(s, (0..list.len()).collect());
        autos.insert(s, list);
    }
    let mut constraints = Vec::new();
    for op in Op::ALL {
        for d in 0..WINDOW as i64 {
            constraints.push(Constraint {
                op,
                degree: d,
                src: slot_of(op.source(), d),
                tgt: slot_of(op.target(), d + op.shift()),
            });
        }
    }
    let holds = |c: &Constraint, a: &GroupHom<S>, b: &GroupHom<S>| -> bool {
        let lhs = hom_compose(n.op(c.op, c.degree), a);
        let rhs = hom_compose(b, m.op(c.op, c.degree));
        matches!((lhs, rhs), (Ok(l), Ok(r)) if l == r)
    };
    // Unary constraints (source and target slot coincide) filter domains up front.
    for c in constraints.iter().filter(|c| c.src == c.tgt) {
        let list = &autos[&c.src];
        domains.get_mut(&c.src).unwrap().retain(|&i| holds(c, &list[i], &list[i]));
    }
    if domains.values().any(|d| d.is_empty()) {
        return Ok(None);
    }
    let binary: Vec<&Constraint> = constraints.iter().filter(|c| c.src != c.tgt).collect();

    struct Search<'a, S> {
        slots: &'a [Slot],
        autos: &'a HashMap<Slot, Vec<GroupHom<S>>>,
        binary: &'a [&'a Constraint],
        nodes: usize,
        budget: usize,
    }

    impl<S: Scalar> Search<'_, S> {
        fn run(
            &mut self,
            assigned: &mut HashMap<Slot, usize>,
            domains: &HashMap<Slot, Vec<usize>>,
            holds: &dyn Fn(&Constraint, &GroupHom<S>, &GroupHom<S>) -> bool,
        ) -> Result<bool> {
            let free: Vec<Slot> = self.slots.iter().copied().filter(|s| !assigned.contains_key(s)).collect();
            let Some(&next) = free.iter().min_by_key(|s| {
                let links = self
                    .binary
                    .iter()
                    .filter(|c| (c.src == **s && assigned.contains_key(&c.tgt)) || (c.tgt == **s && assigned.contains_key(&c.src)))
                    .count();
                (domains[*s].len(), usize::MAX - links)
            }) else {
                return Ok(true);
            };
            for &choice in &domains[&next] {
                self.nodes += 1;
                if self.nodes > self.budget {
                    return Err(Error::Budget(format!("isomorphism search exceeded {} nodes", self.budget)));
                }
                // Forward checking on the unassigned neighbours of `next`.
                let mut new_domains = domains.clone();
                new_domains.insert(next, vec![choice]);
                let a = &self.autos[&next][choice];
                let mut dead = false;
                for c in self.binary.iter().filter(|c| c.src == next || c.tgt == next) {
                    let other = if c.src == next { c.tgt } else { c.src };
                    if let Some(&j) = assigned.get(&other) {
                        let b = &self.autos[&other][j];
                        let ok = if c.src == next { holds(c, a, b) } else { holds(c, b, a) };
                        if !ok {
                            dead = true;
                            break;
                        }
                    } else {
                        let list = &self.autos[&other];
                        let dom = new_domains.get_mut(&other).unwrap();
                        dom.retain(|&j| if c.src == next { holds(c, a, &list[j]) } else { holds(c, &list[j], a) });
                        if dom.is_empty() {
                            dead = true;
                            break;
                        }
                    }
                }
                if dead {
                    continue;
                }
                assigned.insert(next, choice);
                if self.run(assigned, &new_domains, holds)? {
                    return Ok(true);
                }
                assigned.remove(&next);
            }
            Ok(false)
        }
    }

    let mut search = Search { slots: &slots, autos: &autos, binary: &binary, nodes: 0, budget };
    let mut assigned = HashMap::new();
    if !search.run(&mut assigned, &domains, &holds)? {
        return Ok(None);
    }
    let maps = std::array::from_fn(|p| {
        let part = Part::ALL[p];
        (0..WINDOW as i64)
            .map(|d| {
                let s = slot_of(part, d);
                autos[&s][assigned[&s]].clone()
            })
            .collect()
    });
    Ok(Some(CrtMorphism::new(m.clone(), n.clone(), maps)?))
}
