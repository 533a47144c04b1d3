//! Tensor products with free CRT-modules, maps induced by morphisms of free
//! modules, free resolutions of length one, and `⊗_CRT` / `Tor_CRT`.
//!
//! `F ⊗ N` for a monogenic `F` is assembled in *block coordinates*: each part
//! and degree is a list of blocks, each block a copy of a group of `N` whose
//! elements stand for pure tensors (`b ⊗ n`, `ψ_U b ⊗ n`, `γ(b ⊗ n)`, …).
//! With the generator `b` in degree 0:
//!
//! * `ℝ` kind: `F ⊗ N = N` (`b ⊗ n`, `c b ⊗ n`, `ε b ⊗ n`);
//! * `ℂ` kind: `O_k = N^U_k` (`r(b⊗n)`), `U_k = N^U_k ⊕ N^U_k`
//!   (`b⊗n₁ + ψ_U b⊗n₂`), `T_k = N^U_{k+1} ⊕ N^U_k` (`γ(b⊗n₁) + εr(b⊗n₂)`);
//! * `T` kind: `O_k = N^T_{k−1}` (`τ(b⊗n)`), `U_k = N^U_k ⊕ N^U_{k−1}`
//!   (`ζb⊗n₁ + cτb⊗n₂`), `T_k = N^T_k ⊕ N^T_{k−1}` (`b⊗n₁ + ετb⊗n₂`).
//!
//! The operations are obtained by pushing each operation through the pairing
//! rules; the resulting module is normalized to canonical groups and always
//! passes through the relation check in the tests.

use crate::crt::{wrap, CrtModule, CrtMorphism, Op, Part, PrintedModule, WINDOW};
use crate::error::{Error, Result};
use crate::free::{act, Element, FreeCrt, FreeMorphism, Kind, Monogenic, Word};
use crate::scalar::Scalar;
use crate::zlinalg::{hom_compose, solve_integer, GroupHom, Matrix, Presentation};

use Op::*;
use Part::{O, T, U};

/// Block layout: the groups of `N` making up a part of `F ⊗ N` in degree `k`
/// (generator of `F` in degree 0).
fn layout(kind: Kind, part: Part, k: i64) -> Vec<(Part, i64)> {
    match (kind, part) {
        (Kind::R, p) => vec![(p, k)],
        (Kind::C, O) => vec![(U, k)],
        (Kind::C, U) => vec![(U, k), (U, k)],
        (Kind::C, T) => vec![(U, k + 1), (U, k)],
        (Kind::T, O) => vec![(T, k - 1)],
        (Kind::T, U) => vec![(U, k), (U, k - 1)],
        (Kind::T, T) => vec![(T, k), (T, k - 1)],
    }
}

fn block_labels(kind: Kind, part: Part) -> &'static [&'static str] {
    match (kind, part) {
        (Kind::R, O) => &["b⊗n"],
        (Kind::R, U) => &["cb⊗n"],
        (Kind::R, T) => &["εb⊗n"],
        (Kind::C, O) => &["r(b⊗n)"],
        (Kind::C, U) => &["b⊗n", "ψUb⊗n"],
        (Kind::C, T) => &["γ(b⊗n)", "εr(b⊗n)"],
        (Kind::T, O) => &["τ(b⊗n)"],
        (Kind::T, U) => &["ζb⊗n", "cτb⊗n"],
        (Kind::T, T) => &["b⊗n", "ετb⊗n"],
    }
}

/// Helper for matrices of `N` and block assembly.
struct Ctx<'a, S> {
    n: &'a CrtModule<S>,
}

impl<S: Scalar> Ctx<'_, S> {
    fn size(&self, p: Part, d: i64) -> usize {
        self.n.group(p, d).ngens()
    }

    fn sizes(&self, blocks: &[(Part, i64)]) -> Vec<usize> {
        blocks.iter().map(|&(p, d)| self.size(p, d)).collect()
    }

    fn op(&self, op: Op, d: i64) -> Matrix<S> {
        self.n.op(op, d).matrix().clone()
    }

    fn id(&self, p: Part, d: i64) -> Matrix<S> {
        Matrix::identity(self.size(p, d))
    }

    fn hom(h: GroupHom<S>) -> Matrix<S> {
        h.matrix().clone()
    }

    /// Block matrix with the given row/column block sizes and nonzero blocks.
    fn blocks(&self, rows: &[(Part, i64)], cols: &[(Part, i64)], entries: Vec<(usize, usize, Matrix<S>)>) -> Matrix<S> {
        let rs = self.sizes(rows);
        let cs = self.sizes(cols);
        let mut m = Matrix::zeros(rs.iter().sum(), cs.iter().sum());
        for (i, j, b) in entries {
            let r0: usize = rs[..i].iter().sum();
            let c0: usize = cs[..j].iter().sum();
            debug_assert_eq!((b.rows(), b.cols()), (rs[i], cs[j]));
            m.write_block(r0, c0, &b);
        }
        m
    }

    fn eta_t(&self, d: i64) -> Matrix<S> {
        Self::hom(self.n.eta_t(d))
    }
}

/// `F ⊗ N` for the monogenic `F` with generator in degree 0, in block coordinates.
fn base_printed<S: Scalar>(kind: Kind, n: &CrtModule<S>) -> Result<PrintedModule<S>> {
    let cx = Ctx { n };
    let groups: [Vec<Vec<S>>; 3] = std::array::from_fn(|p| {
        (0..WINDOW as i64)
            .map(|k| {
                layout(kind, Part::ALL[p], k)
                    .into_iter()
                    .flat_map(|(q, d)| n.group(q, d).invariants())
                    .collect()
            })
            .collect()
    });
    let lay = |p: Part, k: i64| layout(kind, p, k);
    let raw = |op: Op, k: i64| -> Matrix<S> {
        let src = lay(op.source(), k);
        let tgt = lay(op.target(), k + op.shift());
        let z = |x: Matrix<S>| x;
        let e = match (kind, op) {
            (Kind::R, _) => vec![(0, 0, cx.op(op, k))],
            (Kind::C, C) => vec![(0, 0, cx.id(U, k)), (1, 0, cx.op(PsiU, k))],
            (Kind::C, R) => vec![(0, 0, cx.id(U, k)), (0, 1, cx.op(PsiU, k))],
            (Kind::C, Eps) => vec![(1, 0, cx.id(U, k))],
            (Kind::C, Zeta) => vec![(0, 1, cx.id(U, k)), (1, 1, cx.op(PsiU, k))],
            (Kind::C, PsiU) => vec![(0, 1, cx.op(PsiU, k)), (1, 0, cx.op(PsiU, k))],
            (Kind::C, PsiT) => vec![(0, 0, z(cx.id(U, k + 1).scale(&-S::one()))), (1, 1, cx.id(U, k))],
            (Kind::C, Gamma) => vec![(0, 0, cx.id(U, k)), (0, 1, cx.op(PsiU, k))],
            (Kind::C, Tau) => vec![(0, 0, cx.id(U, k + 1))],
            (Kind::T, Eps) => {
                let et = Ctx::hom(hom_compose(n.op(Eps, k), n.op(Tau, k - 1)).expect("ετ composable"));
                vec![(0, 0, &et + &cx.eta_t(k - 1)), (1, 0, cx.id(T, k - 1))]
            }
            (Kind::T, Tau) => {
                let et = Ctx::hom(hom_compose(n.op(Eps, k), n.op(Tau, k - 1)).expect("ετ composable"));
                vec![(0, 0, cx.id(T, k)), (0, 1, et.scale(&-S::one()))]
            }
            (Kind::T, Zeta) => vec![(0, 0, cx.op(Zeta, k)), (1, 1, cx.op(Zeta, k - 1))],
            (Kind::T, Gamma) => vec![(0, 0, cx.op(Gamma, k)), (1, 1, cx.op(Gamma, k - 1).scale(&-S::one()))],
            (Kind::T, PsiU) => vec![(0, 0, cx.op(PsiU, k)), (1, 1, cx.op(PsiU, k - 1))],
            (Kind::T, C | R | PsiT) => unreachable!("derived below"),
        };
        cx.blocks(&tgt, &src, e)
    };
    let mut ops: Vec<Vec<Matrix<S>>> = vec![Vec::new(); 8];
    for op in Op::ALL {
        if kind == Kind::T && matches!(op, C | R | PsiT) {
            continue;
        }
        ops[op.index()] = (0..WINDOW as i64).map(|k| raw(op, k)).collect();
    }
    if kind == Kind::T {
        let get = |ops: &Vec<Vec<Matrix<S>>>, op: Op, k: i64| ops[op.index()][wrap(k)].clone();
        let reduce = |mut m: Matrix<S>, p: Part, k: i64| {
            m.reduce_rows(&groups[p.index()][wrap(k)]);
            m
        };
        // c = ζ ε, r = τ γ, ψ_T = 1 − γ c τ.
        let c: Vec<Matrix<S>> =
            (0..WINDOW as i64).map(|k| reduce(&get(&ops, Zeta, k) * &get(&ops, Eps, k), U, k)).collect();
        let r: Vec<Matrix<S>> =
            (0..WINDOW as i64).map(|k| reduce(&get(&ops, Tau, k - 1) * &get(&ops, Gamma, k), O, k)).collect();
        ops[C.index()] = c;
        ops[R.index()] = r;
        let psi_t: Vec<Matrix<S>> = (0..WINDOW as i64)
            .map(|k| {
                let gct = &(&get(&ops, Gamma, k + 1) * &get(&ops, C, k + 1)) * &get(&ops, Tau, k);
                let id = Matrix::identity(gct.rows());
                reduce(&id - &gct, T, k)
            })
            .collect();
        ops[PsiT.index()] = psi_t;
    }
    Ok(PrintedModule { groups, ops })
}

/// Suspension of a printed module, `(Σ^s M)_k = M_{k+s}`.
fn printed_suspend<S: Scalar>(m: &PrintedModule<S>, s: i64) -> PrintedModule<S> {
    let groups = std::array::from_fn(|p| (0..WINDOW).map(|k| m.groups[p][wrap(k as i64 + s)].clone()).collect());
    let ops = m
        .ops
        .iter()
        .map(|fam| (0..WINDOW).map(|k| fam[wrap(k as i64 + s)].clone()).collect())
        .collect();
    PrintedModule { groups, ops }
}

/// Block-diagonal direct sum of printed modules.
fn printed_sum<S: Scalar>(parts: &[PrintedModule<S>]) -> PrintedModule<S> {
    let groups = std::array::from_fn(|p| {
        (0..WINDOW).map(|k| parts.iter().flat_map(|m| m.groups[p][k].iter().cloned()).collect()).collect()
    });
    let ops = (0..Op::ALL.len())
        .map(|o| {
            (0..WINDOW)
                .map(|k| {
                    let op = Op::ALL[o];
                    let mut acc = Matrix::zeros(0, 0);
                    for m in parts {
                        let b = &m.ops[o][k];
                        // Empty blocks must still carry their shape.
                        let rows = m.groups[op.target().index()][wrap(k as i64 + op.shift())].len();
                        let cols = m.groups[op.source().index()][k].len();
                        let b = if b.rows() == rows && b.cols() == cols { b.clone() } else { Matrix::zeros(rows, cols) };
                        acc = acc.block_diag(&b);
                    }
                    acc
                })
                .collect()
        })
        .collect();
    PrintedModule { groups, ops }
}

/// Degree offset between the suspension parameter of a monogenic summand and
/// the block layout (whose generator sits in degree 0).
fn layout_shift(m: &Monogenic) -> i64 {
    m.generator_degree()
}

/// A tensor product `F ⊗ N` with a free `F`, remembering block coordinates.
#[derive(Clone, Debug)]
pub struct TensorModule<S> {
    /// The canonical module.
    pub module: CrtModule<S>,
    /// The module in block coordinates.
    pub printed: PrintedModule<S>,
    pres: [Vec<Presentation<S>>; 3],
    /// `offsets[part][degree][i]`: first block coordinate of summand `i`.
    offsets: [Vec<Vec<usize>>; 3],
    /// `labels[part][degree]`: pure-tensor description of each block coordinate.
    pub labels: [Vec<Vec<String>>; 3],
}

impl<S: Scalar> TensorModule<S> {
    fn build(summands: &[Monogenic], n: &CrtModule<S>) -> Result<Self> {
        let mut parts = Vec::new();
        let mut labels: [Vec<Vec<String>>; 3] = std::array::from_fn(|_| vec![Vec::new(); WINDOW]);
        for (i, s) in summands.iter().enumerate() {
            let base = base_printed(s.kind, n)?;
            let shift = layout_shift(s);
            parts.push(printed_suspend(&base, -shift));
            for p in Part::ALL {
                for k in 0..WINDOW as i64 {
                    let names = block_labels(s.kind, p);
                    for (bi, &(q, d)) in layout(s.kind, p, k - shift).iter().enumerate() {
                        for g in 0..n.group(q, d).ngens() {
                            let prefix = if summands.len() > 1 { format!("[{i}]") } else { String::new() };
                            labels[p.index()][k as usize].push(format!("{prefix}{}#{g}", names[bi]));
                        }
                    }
                }
            }
        }
        let printed = printed_sum(&parts);
        let offsets = std::array::from_fn(|p| {
            (0..WINDOW)
                .map(|k| {
                    let mut v = vec![0];
                    for m in &parts {
                        v.push(v.last().unwrap() + m.groups[p][k].len());
                    }
                    v
                })
                .collect()
        });
        let module = printed.normalize()?;
        let pres = std::array::from_fn(|p| {
            printed.groups[p].iter().map(|o| Presentation::new(&Matrix::diagonal(o))).collect()
        });
        Ok(TensorModule { module, printed, pres, offsets, labels })
    }

    /// Block coordinates of summand `i` at a location: `(start, len)`.
    fn range(&self, i: usize, part: Part, k: i64) -> (usize, usize) {
        let o = &self.offsets[part.index()][wrap(k)];
        (o[i], o[i + 1] - o[i])
    }

    fn block_size(&self, part: Part, k: i64) -> usize {
        self.printed.groups[part.index()][wrap(k)].len()
    }

    fn printed_op(&self, op: Op, k: i64) -> &Matrix<S> {
        &self.printed.ops[op.index()][wrap(k)]
    }
}

/// `F(kind, shift) ⊗ N` for a monogenic free module.
pub fn tensor_monogenic<S: Scalar>(kind: Kind, shift: i64, n: &CrtModule<S>) -> Result<TensorModule<S>> {
    TensorModule::build(&[Monogenic::new(kind, shift)], n)
}

/// `F ⊗ N` for a free module `F`: the direct sum over its summands.
pub fn tensor_free<S: Scalar>(f: &FreeCrt<S>, n: &CrtModule<S>) -> Result<TensorModule<S>> {
    TensorModule::build(&f.summands, n)
}

/// Multiplication by the canonical generator `g` of `F^X_d` (generator of `F`
/// in degree 0), as a map `N^X_j → (F ⊗ N)^X_{d+j}` in block coordinates.
fn mu_generator<S: Scalar>(kind: Kind, part: Part, d: i64, g: usize, j: i64, n: &CrtModule<S>) -> Result<Matrix<S>> {
    let cx = Ctx { n };
    let rows = layout(kind, part, d + j);
    let cols = [(part, j)];
    let single = |m: Matrix<S>| cx.blocks(&rows, &cols, vec![(0, 0, m)]);
    let dd = wrap(d) as i64;
    Ok(match (kind, part) {
        (Kind::R, O) => single(match dd {
            0 => cx.id(O, j),
            1 => Ctx::hom(n.eta_o(j)),
            2 => Ctx::hom(hom_compose(&n.eta_o(j + 1), &n.eta_o(j))?),
            4 => Ctx::hom(n.xi(j)),
            _ => return Err(Error::Shape(format!("F(b,0,R) has no generator in KO_{dd}"))),
        }),
        (Kind::R, U) => single(cx.id(U, j)),
        (Kind::R, T) => single(match dd % 4 {
            0 => cx.id(T, j),
            1 => cx.eta_t(j),
            3 => Ctx::hom(n.omega(j)),
            _ => return Err(Error::Shape(format!("F(b,0,R) has no generator in KT_{dd}"))),
        }),
        (Kind::C, O) => {
            let sign = if (dd / 2) % 2 == 0 { S::one() } else { -S::one() };
            single(cx.op(C, j).scale(&sign))
        }
        (Kind::C, U) => cx.blocks(&rows, &cols, vec![(g, 0, cx.id(U, j))]),
        (Kind::C, T) => {
            if dd % 2 == 0 {
                let ct = Ctx::hom(hom_compose(n.op(C, j + 1), n.op(Tau, j))?);
                cx.blocks(&rows, &cols, vec![(0, 0, ct), (1, 0, cx.op(Zeta, j))])
            } else {
                cx.blocks(&rows, &cols, vec![(0, 0, cx.op(Zeta, j))])
            }
        }
        (Kind::T, _) => {
            return Err(Error::Unsupported(format!(
                "{}-part element of a T-kind summand: products into F(b,·,T) ⊗ N are not implemented",
                part.name()
            )))
        }
    })
}

/// Multiplication by `y ∈ F0^X_{d0}`: `N^X_j → (F0 ⊗ N)^X_{d0+j}` in block coordinates.
fn mu_total<S: Scalar>(
    f0: &FreeCrt<S>,
    t0: &TensorModule<S>,
    y: &Element<S>,
    j: i64,
    n: &CrtModule<S>,
) -> Result<Matrix<S>> {
    let k = y.degree + j;
    let mut out = Matrix::zeros(t0.block_size(y.part, k), n.group(y.part, j).ngens());
    for (i, s) in f0.summands.iter().enumerate() {
        let comp = f0.project(i, y);
        if comp.coords.iter().all(|c| c.is_zero()) {
            continue;
        }
        let d = y.degree - layout_shift(s);
        let mut acc: Option<Matrix<S>> = None;
        for (g, c) in comp.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let m = mu_generator(s.kind, y.part, d, g, j, n)
                .map_err(|e| match e {
                    Error::Unsupported(msg) => Error::Unsupported(format!("{} in summand {s}: {msg}", y_word(y))),
                    other => other,
                })?
                .scale(c);
            acc = Some(match acc {
                None => m,
                Some(a) => &a + &m,
            });
        }
        if let Some(a) = acc {
            let (r0, len) = t0.range(i, y.part, k);
            debug_assert_eq!(a.rows(), len);
            let mut cur = out.block(r0, 0, len, a.cols());
            cur = &cur + &a;
            out.write_block(r0, 0, &cur);
        }
    }
    Ok(out)
}

fn y_word<S: Scalar>(y: &Element<S>) -> String {
    format!("element {:?} of M{}_{}", y.coords, y.part.name(), wrap(y.degree))
}

/// The map `F1 ⊗ N → F0 ⊗ N` induced by a morphism `F1 → F0` of free modules.
///
/// Each source pure tensor `w(b) ⊗ n` is sent to `w(x) ⊗ n` where `x` is the
/// image of `b`; products `y ⊗ n` with `y ∈ F0` are expanded over the
/// generators of `F0` and pushed through the pairing rules. The result is
/// checked for naturality with respect to every operation.
pub fn induced_tensor_map<S: Scalar>(
    f: &FreeMorphism<S>,
    target: &FreeCrt<S>,
    n: &CrtModule<S>,
) -> Result<(TensorModule<S>, TensorModule<S>, CrtMorphism<S>)> {
    if f.target != *target.module() {
        return Err(Error::Shape("morphism target is not the given free module".into()));
    }
    let t1 = tensor_free(&f.source, n)?;
    let t0 = tensor_free(target, n)?;
    let w = |ops: &[Op], x: &Element<S>| act(target.module(), &Word::ops(ops), x);
    let mut maps: [Vec<GroupHom<S>>; 3] = Default::default();
    for p in Part::ALL {
        for k in 0..WINDOW as i64 {
            let mut m = Matrix::zeros(t0.block_size(p, k), t1.block_size(p, k));
            for (i, s) in f.source.summands.iter().enumerate() {
                let x = &f.images[i];
                let j = k - layout_shift(s);
                let (c0, len) = t1.range(i, p, k);
                let blocks: Vec<Matrix<S>> = match (s.kind, p) {
                    (Kind::R, O) => vec![mu_total(target, &t0, x, j, n)?],
                    (Kind::R, U) => vec![mu_total(target, &t0, &w(&[C], x)?, j, n)?],
                    (Kind::R, T) => vec![mu_total(target, &t0, &w(&[Eps], x)?, j, n)?],
                    (Kind::C, O) => vec![t0.printed_op(R, k) * &mu_total(target, &t0, x, j, n)?],
                    (Kind::C, U) => vec![mu_total(target, &t0, x, j, n)?, mu_total(target, &t0, &w(&[PsiU], x)?, j, n)?],
                    (Kind::C, T) => vec![
                        t0.printed_op(Gamma, k + 1) * &mu_total(target, &t0, x, j + 1, n)?,
                        &(t0.printed_op(Eps, k) * t0.printed_op(R, k)) * &mu_total(target, &t0, x, j, n)?,
                    ],
                    (Kind::T, O) => vec![t0.printed_op(Tau, k - 1) * &mu_total(target, &t0, x, j - 1, n)?],
                    (Kind::T, U) => vec![
                        mu_total(target, &t0, &w(&[Zeta], x)?, j, n)?,
                        mu_total(target, &t0, &w(&[C, Tau], x)?, j - 1, n)?,
                    ],
                    (Kind::T, T) => vec![
                        mu_total(target, &t0, x, j, n)?,
                        mu_total(target, &t0, &w(&[Eps, Tau], x)?, j - 1, n)?,
                    ],
                };
                let mut c = c0;
                for b in blocks {
                    m.write_block(0, c, &b);
                    c += b.cols();
                }
                debug_assert_eq!(c, c0 + len);
            }
            let src = &t1.pres[p.index()][wrap(k)];
            let tgt = &t0.pres[p.index()][wrap(k)];
            let canon = &(&tgt.proj * &m) * &src.lifts;
            maps[p.index()].push(GroupHom::new(src.group.clone(), tgt.group.clone(), canon)?);
        }
    }
    let phi = CrtMorphism::new(t1.module.clone(), t0.module.clone(), maps)?;
    Ok((t1, t0, phi))
}

/// A free resolution `0 → F1 → F0 → M → 0` of length one.
#[derive(Clone, Debug)]
pub struct FreeResolution<S> {
    pub f1: FreeCrt<S>,
    pub f0: FreeCrt<S>,
    /// `μ₁ : F1 → F0` by generator images.
    pub mu1: FreeMorphism<S>,
    /// `μ₀ : F0 → M` by generator images.
    pub mu0: FreeMorphism<S>,
    pub mu1_map: CrtMorphism<S>,
    pub mu0_map: CrtMorphism<S>,
}

impl<S: Scalar> FreeResolution<S> {
    /// Builds and checks a resolution: `μ₁` injective, `μ₀` surjective and
    /// `image μ₁ = kernel μ₀` in every part and degree.
    pub fn new(
        f1: FreeCrt<S>,
        images1: Vec<Element<S>>,
        f0: FreeCrt<S>,
        target: CrtModule<S>,
        images0: Vec<Element<S>>,
    ) -> Result<Self> {
        let mu1 = FreeMorphism::new(f1.clone(), f0.module().clone(), images1)?;
        let mu0 = FreeMorphism::new(f0.clone(), target, images0)?;
        let mu1_map = mu1.realize()?;
        let mu0_map = mu0.realize()?;
        if !mu1_map.is_injective() {
            return Err(Error::NoSolution("μ₁ is not injective".into()));
        }
        if !mu0_map.is_surjective() {
            return Err(Error::NoSolution("μ₀ is not surjective".into()));
        }
        for p in Part::ALL {
            for k in 0..WINDOW as i64 {
                if !crate::zlinalg::is_exact_at(mu1_map.map(p, k), mu0_map.map(p, k))? {
                    return Err(Error::NoSolution(format!("resolution not exact at F0{}_{k}", p.name())));
                }
            }
        }
        Ok(FreeResolution { f1, f0, mu1, mu0, mu1_map, mu0_map })
    }

    pub fn target(&self) -> &CrtModule<S> {
        &self.mu0.target
    }
}

fn lift_through<S: Scalar>(h: &GroupHom<S>, y: &[S]) -> Option<Vec<S>> {
    let a = h.matrix().hcat(&h.codomain().relation_matrix());
    let sol = solve_integer(&a, y)?;
    Some(h.domain().reduce(&sol[..h.domain().ngens()]))
}

/// Cap on the number of free summands chosen when resolving.
const MAX_GENERATORS: usize = 6;

/// Resolves an acyclic module by a free resolution of length one.
///
/// Generators of `F0` are chosen greedily where the cokernel of the current
/// map is nonzero (O, then U, then T part, in increasing degree). The kernel
/// of `μ₀` must be free; it is matched against direct sums of at most two
/// monogenic modules with equal groups, searching generator images with
/// coordinates in `[−2, 2]` for an isomorphism onto the kernel.
pub fn resolve<S: Scalar>(m: &CrtModule<S>) -> Result<FreeResolution<S>> {
    let mut summands: Vec<Monogenic> = Vec::new();
    let mut images: Vec<Element<S>> = Vec::new();
    let (f0, mu0_map) = loop {
        let f0 = FreeCrt::new(&summands)?;
        let mu0 = FreeMorphism::new(f0.clone(), m.clone(), images.clone())?.realize()?;
        let (coker, proj) = mu0.cokernel_module()?;
        if coker.is_zero() {
            break (f0, mu0);
        }
        if summands.len() >= MAX_GENERATORS {
            return Err(Error::NoSolution("too many generators needed".into()));
        }
        let (p, d) = Part::ALL
            .into_iter()
            .flat_map(|p| (0..p.period() as i64).map(move |d| (p, d)))
            .find(|&(p, d)| !coker.group(p, d).is_trivial())
            .expect("nonzero cokernel has a nonzero group");
        let g = coker.group(p, d);
        let mut e = vec![S::zero(); g.ngens()];
        e[0] = S::one();
        let x = lift_through(proj.map(p, d), &e).expect("projection is surjective");
        let kind = match p {
            O => Kind::R,
            U => Kind::C,
            T => Kind::T,
        };
        summands.push(Monogenic::new(kind, d - kind.table_degree()));
        images.push(Element::new(p, d, x));
    };
    let (kernel, incl) = mu0_map.kernel_module()?;
    if !crate::crt::is_free(&kernel) {
        return Err(Error::NoSolution("kernel of μ₀ is not free; module is not acyclic".into()));
    }
    let (f1, k_images) = match_free(&kernel)?;
    let images1 = f1
        .summands
        .iter()
        .zip(&k_images)
        .map(|(_, x)| Element::new(x.part, x.degree, incl.map(x.part, x.degree).apply(&x.coords)))
        .collect();
    FreeResolution::new(f1, images1, f0, m.clone(), images)
}

/// Finds a free module with an explicit isomorphism onto the free module `k`.
fn match_free<S: Scalar>(k: &CrtModule<S>) -> Result<(FreeCrt<S>, Vec<Element<S>>)> {
    if k.is_zero() {
        return Ok((FreeCrt::new(&[])?, Vec::new()));
    }
    let singles: Vec<Monogenic> =
        Kind::ALL.into_iter().flat_map(|kind| (0..WINDOW as i64).map(move |s| Monogenic::new(kind, s))).collect();
    let mut candidates: Vec<Vec<Monogenic>> = singles.iter().map(|&s| vec![s]).collect();
    for (a, &x) in singles.iter().enumerate() {
        for &y in &singles[a..] {
            candidates.push(vec![x, y]);
        }
    }
    for cand in candidates {
        let f = FreeCrt::<S>::new(&cand)?;
        if Part::ALL.iter().any(|&p| f.module().part(p) != k.part(p)) {
            continue;
        }
        let choices: Vec<Vec<Vec<S>>> = cand
            .iter()
            .map(|s| small_vectors(k.group(s.kind.part(), s.generator_degree()), 2))
            .collect();
        let mut idx = vec![0usize; cand.len()];
        loop {
            let imgs: Vec<Element<S>> = cand
                .iter()
                .zip(&idx)
                .zip(&choices)
                .map(|((s, &i), ch)| Element::new(s.kind.part(), s.generator_degree(), ch[i].clone()))
                .collect();
            if let Ok(phi) = FreeMorphism::new(f.clone(), k.clone(), imgs.clone()).and_then(|fm| fm.realize()) {
                if phi.is_isomorphism() {
                    return Ok((f, imgs));
                }
            }
            let mut c = 0;
            loop {
                if c == idx.len() {
                    break;
                }
                idx[c] += 1;
                if idx[c] < choices[c].len() {
                    break;
                }
                idx[c] = 0;
                c += 1;
            }
            if c == idx.len() {
                break;
            }
        }
    }
    Err(Error::NoSolution("kernel of μ₀ matches no free module with at most two summands".into()))
}

/// Canonical elements with coordinates in `[−b, b]`, deduplicated, in a fixed order.
fn small_vectors<S: Scalar>(g: &crate::zlinalg::FinAbGroup<S>, b: i64) -> Vec<Vec<S>> {
    let mut out: Vec<Vec<S>> = vec![Vec::new()];
    for _ in 0..g.ngens() {
        let mut next = Vec::new();
        for v in &out {
            for c in -b..=b {
                let mut w = v.clone();
                w.push(S::from_int(c));
                next.push(w);
            }
        }
        out = next;
    }
    let mut seen = std::collections::HashSet::new();
    out.into_iter().map(|v| g.reduce(&v)).filter(|v| seen.insert(v.clone())).collect()
}

/// A free resolution of `K^CRT(O_{k+1})`.
///
/// For odd `k` this is multiplication by `k` on `F(b,0,ℝ)`; for even `k` it is
/// found by [`resolve`].
pub fn cuntz_resolution<S: Scalar>(k: i64) -> Result<FreeResolution<S>> {
    let target = crate::catalog::cuntz::<S>(k)?.module;
    if k % 2 != 0 {
        let f = FreeCrt::new(&[Monogenic::new(Kind::R, 0)])?;
        let img1 = Element::new(O, 0, vec![S::from_int(k)]);
        let g = target.group(O, 0);
        let img0 = Element::new(O, 0, g.reduce(&vec![S::one(); g.ngens()]));
        return FreeResolution::new(f.clone(), vec![img1], f, target, vec![img0]);
    }
    resolve(&target)
}

/// `Tor` and `⊗` of a resolved module with `N`.
#[derive(Clone, Debug)]
pub struct TensorTor<S> {
    /// `F1 ⊗ N` and `F0 ⊗ N` in block coordinates.
    pub f1_tensor: TensorModule<S>,
    pub f0_tensor: TensorModule<S>,
    /// `μ₁ ⊗ 1`.
    pub map: CrtMorphism<S>,
    /// `M ⊗_CRT N = coker(μ₁ ⊗ 1)`.
    pub tensor: CrtModule<S>,
    /// `Tor_CRT(M, N) = ker(μ₁ ⊗ 1)`.
    pub tor: CrtModule<S>,
}

/// Computes `M ⊗_CRT N` and `Tor_CRT(M, N)` from a resolution of `M`.
pub fn tensor_and_tor<S: Scalar>(res: &FreeResolution<S>, n: &CrtModule<S>) -> Result<TensorTor<S>> {
    let (f1_tensor, f0_tensor, map) = induced_tensor_map(&res.mu1, &res.f0, n)?;
    let (tensor, _) = map.cokernel_module()?;
    let (tor, _) = map.kernel_module()?;
    Ok(TensorTor { f1_tensor, f0_tensor, map, tensor, tor })
}

/// `M ⊗ N ≅ N ⊗ M` for two resolved modules with finite parts.
pub fn tensor_symmetric_check<S: Scalar>(m: &FreeResolution<S>, n: &FreeResolution<S>) -> Result<bool> {
    let a = tensor_and_tor(m, n.target())?.tensor;
    let b = tensor_and_tor(n, m.target())?.tensor;
    Ok(crate::crt::crt_isomorphic(&a, &b)?.is_some())
}

/// The U part of a tensor product computed directly from the U parts of the
/// factors, as graded modules over `ℤ[β_U, β_U^{−1}]` with both U parts given
/// by their groups in degrees 0 and 1: `(M ⊗ N)_n = ⊕_{i+j ≡ n} M_i ⊗ N_j`
/// and the corresponding `Tor`. Groups only; used as a cross-check.
pub fn complex_tensor_tor_groups<S: Scalar>(
    m: &CrtModule<S>,
    n: &CrtModule<S>,
) -> ([crate::zlinalg::FinAbGroup<S>; 2], [crate::zlinalg::FinAbGroup<S>; 2]) {
    use crate::zlinalg::FinAbGroup;
    let pair = |a: &S, b: &S| -> S {
        // Orders as integers with 0 for ℤ: ℤ_a ⊗ ℤ_b = ℤ_gcd(a, b).
        a.gcd(b)
    };
    let tor_pair = |a: &S, b: &S| -> S {
        // Tor(ℤ_a, ℤ_b) = ℤ_gcd(a, b); Tor with ℤ vanishes.
        if a.is_zero() || b.is_zero() {
            S::one()
        } else {
            a.gcd(b)
        }
    };
    let mut tens: [Vec<S>; 2] = Default::default();
    let mut tor: [Vec<S>; 2] = Default::default();
    for i in 0..2i64 {
        for j in 0..2i64 {
            for a in m.group(U, i).invariants() {
                for b in n.group(U, j).invariants() {
                    tens[((i + j) % 2) as usize].push(pair(&a, &b));
                    tor[((i + j) % 2) as usize].push(tor_pair(&a, &b));
                }
            }
        }
    }
    (
        [FinAbGroup::from_orders(&tens[0]), FinAbGroup::from_orders(&tens[1])],
        [FinAbGroup::from_orders(&tor[0]), FinAbGroup::from_orders(&tor[1])],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::crt::{crt_isomorphic, is_acyclic, verify_relations};
    use crate::free::monogenic;
    use crate::Int;

    fn cuntz(k: i64) -> CrtModule<Int> {
        catalog::cuntz::<Int>(k).unwrap().module
    }

    fn names(m: &CrtModule<Int>, p: Part) -> Vec<String> {
        m.part(p).iter().map(|g| g.to_string()).collect()
    }

    #[test]
    fn monogenic_tensors_satisfy_relations() {
        let ns = [catalog::real::<Int>().unwrap(), catalog::complex().unwrap(), catalog::self_conjugate().unwrap(), cuntz(2), cuntz(3), cuntz(4), cuntz(6)];
        for kind in Kind::ALL {
            for n in &ns {
                let t = tensor_monogenic(kind, 0, n).unwrap();
                let rel = verify_relations(&t.module);
                assert!(rel.passed(), "{kind:?}: {rel}");
                assert!(is_acyclic(&t.module).unwrap().passed(), "{kind:?}");
            }
        }
    }

    #[test]
    fn real_kind_is_the_unit() {
        for n in [cuntz(2), cuntz(3), catalog::self_conjugate().unwrap()] {
            assert_eq!(tensor_monogenic(Kind::R, 0, &n).unwrap().module, n);
        }
    }

    #[test]
    fn complex_times_real_is_complex() {
        let r = catalog::real::<Int>().unwrap();
        let t = tensor_monogenic(Kind::C, 0, &r).unwrap().module;
        let (c, _) = monogenic::<Int>(Kind::C, 0).unwrap();
        for p in Part::ALL {
            assert_eq!(t.part(p), c.part(p));
        }
        assert_eq!(names(&t, O), ["Z", "0", "Z", "0", "Z", "0", "Z", "0"]);
        // The generator b ⊗ 1_O of U_0 induces an isomorphism F(b,0,C) → C ⊗ R.
        let f = FreeCrt::<Int>::new(&[Monogenic::new(Kind::C, 0)]).unwrap();
        let x = Element::new(U, 0, vec![Int::from(1), Int::from(0)]);
        let phi = FreeMorphism::new(f, t, vec![x]).unwrap().realize().unwrap();
        assert!(phi.is_isomorphism());
    }

    #[test]
    fn tensor_with_zero_is_zero() {
        for kind in Kind::ALL {
            assert!(tensor_monogenic::<Int>(kind, 0, &CrtModule::zero()).unwrap().module.is_zero());
        }
        let f = FreeCrt::<Int>::new(&[]).unwrap();
        assert!(tensor_free(&f, &cuntz(3)).unwrap().module.is_zero());
    }

    #[test]
    fn tensor_free_is_blockwise() {
        let n = cuntz(3);
        let f = FreeCrt::<Int>::new(&[Monogenic::new(Kind::R, 0), Monogenic::new(Kind::R, 0)]).unwrap();
        let t = tensor_free(&f, &n).unwrap().module;
        for p in Part::ALL {
            for d in 0..8 {
                let g = n.group(p, d);
                let mut orders = g.invariants();
                orders.extend(g.invariants());
                assert_eq!(t.group(p, d), &crate::zlinalg::FinAbGroup::from_orders(&orders));
            }
        }
    }

    #[test]
    fn suspension_compatibility() {
        let n = cuntz(4);
        for kind in Kind::ALL {
            let base = tensor_monogenic(kind, 0, &n).unwrap().module;
            for s in 0..8 {
                let t = tensor_monogenic(kind, s, &n).unwrap().module;
                assert_eq!(t, crate::crt::suspend(&base, -s));
            }
        }
    }

    #[test]
    fn multiplication_by_k_induces_multiplication() {
        let n = cuntz(6);
        let f = FreeCrt::<Int>::new(&[Monogenic::new(Kind::R, 0)]).unwrap();
        let fm = FreeMorphism::new(f.clone(), f.module().clone(), vec![Element::new(O, 0, vec![Int::from(3)])]).unwrap();
        let (_, _, phi) = induced_tensor_map(&fm, &f, &n).unwrap();
        for p in Part::ALL {
            for d in 0..8 {
                assert_eq!(phi.map(p, d), &GroupHom::multiplication(n.group(p, d), Int::from(3)));
            }
        }
    }

    #[test]
    fn identity_induces_identity() {
        let n = cuntz(4);
        for summands in [vec![Monogenic::new(Kind::C, 0)], vec![Monogenic::new(Kind::R, 0), Monogenic::new(Kind::C, 2)], vec![Monogenic::new(Kind::T, 1)]] {
            let f = FreeCrt::<Int>::new(&summands).unwrap();
            let gens = (0..summands.len()).map(|i| f.generator(i)).collect();
            let fm = FreeMorphism::new(f.clone(), f.module().clone(), gens).unwrap();
            match induced_tensor_map(&fm, &f, &n) {
                Ok((_, _, phi)) => assert_eq!(phi, CrtMorphism::identity(phi.source())),
                Err(Error::Unsupported(_)) => assert!(summands.iter().any(|s| s.kind == Kind::T)),
                Err(e) => panic!("{e}"),
            }
        }
    }

    #[test]
    fn induced_maps_compose() {
        // F(b,0,C) → F(b,0,R) ⊕ F(b,2,R) → F(b,0,R) ⊕ F(b,2,R), the second map doubling the first summand.
        let n = cuntz(4);
        let res = cuntz_resolution::<Int>(4).unwrap();
        let f0 = res.f0.clone();
        let dbl = FreeMorphism::new(
            f0.clone(),
            f0.module().clone(),
            vec![Element::new(O, 0, f0.generator(0).coords.iter().map(|c| c * Int::from(2)).collect()), f0.generator(1)],
        )
        .unwrap();
        let dbl_map = dbl.realize().unwrap();
        let comp_images: Vec<Element<Int>> = res
            .mu1
            .images
            .iter()
            .map(|x| Element::new(x.part, x.degree, dbl_map.map(x.part, x.degree).apply(&x.coords)))
            .collect();
        let comp = FreeMorphism::new(res.f1.clone(), f0.module().clone(), comp_images).unwrap();
        let (_, _, a) = induced_tensor_map(&res.mu1, &f0, &n).unwrap();
        let (_, _, b) = induced_tensor_map(&dbl, &f0, &n).unwrap();
        let (_, _, c) = induced_tensor_map(&comp, &f0, &n).unwrap();
        assert_eq!(b.compose(&a).unwrap(), c);
    }

    #[test]
    fn cuntz_resolutions_exist() {
        for k in 1..=12 {
            let res = cuntz_resolution::<Int>(k).unwrap();
            if k % 2 == 1 {
                assert_eq!(res.f0.summands, vec![Monogenic::new(Kind::R, 0)]);
            } else {
                assert_eq!(res.f0.summands, vec![Monogenic::new(Kind::R, 0), Monogenic::new(Kind::R, 2)], "k = {k}");
            }
            if k % 4 == 0 {
                assert_eq!(res.f1.summands, vec![Monogenic::new(Kind::C, 0)]);
            }
        }
    }

    #[test]
    fn zero_mod_four_kernel_generator() {
        // For k ≡ 0 mod 4 the kernel of μ₀ is generated by (k/2)·c b₀ + β_U^{-1} c b₂.
        for k in [4i64, 8, 12] {
            let res = cuntz_resolution::<Int>(k).unwrap();
            let f0 = &res.f0;
            let m0 = f0.module();
            let cb0 = act(m0, &Word::ops(&[C]), &f0.generator(0)).unwrap();
            let cb2 = act(m0, &Word(vec![crate::free::Step::BetaU(-1), crate::free::Step::Op(C)]), &f0.generator(1)).unwrap();
            let x: Vec<Int> = cb0.coords.iter().zip(&cb2.coords).map(|(a, b)| a * Int::from(k / 2) + b).collect();
            let x = Element::new(U, 0, x);
            let fm = FreeMorphism::new(res.f1.clone(), m0.clone(), vec![x.clone()]).unwrap();
            let phi = fm.realize().unwrap();
            assert!(phi.is_injective());
            for p in Part::ALL {
                for d in 0..8 {
                    assert!(crate::zlinalg::is_exact_at(phi.map(p, d), res.mu0_map.map(p, d)).unwrap(), "k = {k}");
                }
            }
            // The element b₀ + β_U^{-1} c b₂ is not in the kernel.
            let bad: Vec<Int> = cb0.coords.iter().zip(&cb2.coords).map(|(a, b)| a + b).collect();
            let img = res.mu0_map.map(U, 0).apply(&bad);
            assert!(!res.target().group(U, 0).is_zero_element(&img), "k = {k}");
        }
    }

    #[test]
    fn odd_pair_tensor_and_tor() {
        for (k, l) in [(3, 5), (3, 6), (3, 9), (5, 10)] {
            let res = cuntz_resolution::<Int>(k).unwrap();
            let tt = tensor_and_tor(&res, &cuntz(l)).unwrap();
            let expect = catalog::expected_tensor::<Int>(k, l).unwrap().module;
            assert!(verify_relations(&tt.tensor).passed());
            assert!(verify_relations(&tt.tor).passed());
            assert!(crt_isomorphic(&tt.tensor, &expect).unwrap().is_some(), "tensor({k},{l})");
            assert!(crt_isomorphic(&tt.tor, &expect).unwrap().is_some(), "tor({k},{l})");
        }
    }

    #[test]
    fn zero_mod_four_tensor_and_tor() {
        for (k, l) in [(4, 4), (4, 8), (8, 12)] {
            let res = cuntz_resolution::<Int>(k).unwrap();
            let tt = tensor_and_tor(&res, &cuntz(l)).unwrap();
            let et = catalog::expected_tensor::<Int>(k, l).unwrap().module;
            let eo = catalog::expected_tor::<Int>(k, l).unwrap().module;
            assert!(crt_isomorphic(&tt.tensor, &et).unwrap().is_some(), "tensor({k},{l})\n{}\n{}", tt.tensor, et);
            assert!(crt_isomorphic(&tt.tor, &eo).unwrap().is_some(), "tor({k},{l})\n{}\n{}", tt.tor, eo);
        }
    }

    #[test]
    fn tor_with_free_module_vanishes() {
        let res = cuntz_resolution::<Int>(4).unwrap();
        for kind in [Kind::R, Kind::C, Kind::T] {
            let (f, _) = monogenic::<Int>(kind, 0).unwrap();
            let tt = tensor_and_tor(&res, &f).unwrap();
            assert!(tt.tor.is_zero());
        }
    }

    #[test]
    fn self_conjugate_kind_matches_resolution() {
        // F(T) ⊗ O_{k+1} computed directly agrees with the resolution of O_{k+1} tensored with F(T).
        let (ft, _) = monogenic::<Int>(Kind::T, 1).unwrap();
        for k in [2, 3, 4, 6] {
            let direct = tensor_monogenic(Kind::T, 1, &cuntz(k)).unwrap().module;
            let res = cuntz_resolution::<Int>(k).unwrap();
            let via = tensor_and_tor(&res, &ft).unwrap().tensor;
            assert!(crt_isomorphic(&direct, &via).unwrap().is_some(), "k = {k}");
        }
    }

    #[test]
    fn symmetric_in_both_factors() {
        for (k, l) in [(3, 5), (4, 4), (2, 3)] {
            let a = cuntz_resolution::<Int>(k).unwrap();
            let b = cuntz_resolution::<Int>(l).unwrap();
            assert!(tensor_symmetric_check(&a, &b).unwrap(), "({k},{l})");
        }
    }

    #[test]
    fn complex_parts_agree_with_graded_tensor() {
        for (k, l) in [(3, 5), (3, 6), (4, 4), (2, 2), (2, 4)] {
            let res = cuntz_resolution::<Int>(k).unwrap();
            let n = cuntz(l);
            let tt = tensor_and_tor(&res, &n).unwrap();
            let (tens, tor) = complex_tensor_tor_groups(&cuntz(k), &n);
            for d in 0..2 {
                assert_eq!(tt.tensor.group(U, d), &tens[d as usize], "({k},{l})");
                assert_eq!(tt.tor.group(U, d), &tor[d as usize], "({k},{l})");
            }
        }
    }
}
