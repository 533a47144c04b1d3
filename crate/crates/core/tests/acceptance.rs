//! Acceptance run: one pass/fail line per criterion, with its time limit.
//!
//! Run with `cargo test --test acceptance`. The process exits non-zero if any
//! criterion fails or exceeds its limit.

mod common;

use std::time::{Duration, Instant};

use common::*;
use crt_core::catalog;
use crt_core::crt::{crt_isomorphic, is_acyclic, is_free, verify_relations, CrtModule, Part};
use crt_core::free::{FreeCrt, Kind, Monogenic};
use crt_core::kunneth::{
    classical_complex_kunneth, kunneth_pipeline, solve_middle, split_check, validate_solution, KunnethProblem,
    KunnethReport, DEFAULT_BUDGET,
};
use crt_core::tensor::{cuntz_resolution, tensor_and_tor, tensor_free, tensor_monogenic};
use crt_core::zlinalg::FinAbGroup;
use crt_core::Int;
use proptest::strategy::Strategy;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e2s<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn cuntz(k: i64) -> CrtModule<Int> {
    catalog::cuntz::<Int>(k).expect("catalog Cuntz module").module
}

fn z(orders: &[i64]) -> FinAbGroup<Int> {
    FinAbGroup::from_orders(&orders.iter().map(|&x| Int::from(x)).collect::<Vec<_>>())
}

fn iso(a: &CrtModule<Int>, b: &CrtModule<Int>) -> Result<bool, String> {
    Ok(e2s(crt_isomorphic(a, b))?.is_some())
}

fn pipeline(k: i64, l: i64) -> Result<KunnethReport<Int>, String> {
    e2s(kunneth_pipeline::<Int>(&format!("O{}", k + 1), &format!("O{}", l + 1), DEFAULT_BUDGET))
}

/// Fixtures of the three monogenic modules and the Cuntz family.
fn transcription_integrity() -> Outcome {
    let mut named: Vec<(String, CrtModule<Int>)> = vec![
        ("R".into(), e2s(catalog::real())?),
        ("C".into(), e2s(catalog::complex())?),
        ("T".into(), e2s(catalog::self_conjugate())?),
    ];
    for (name, m) in &named {
        ensure(is_free(m), || format!("{name} is not free"))?;
    }
    for k in 1..=12 {
        named.push((format!("O{}", k + 1), cuntz(k)));
    }
    for (name, m) in &named {
        let rel = verify_relations(m);
        ensure(rel.passed(), || format!("{name}: {rel}"))?;
        let acyc = e2s(is_acyclic(m))?;
        ensure(acyc.passed(), || format!("{name}: {acyc}"))?;
    }
    Ok(format!("{} fixtures pass relations and acyclicity; R, C, T free", named.len()))
}

/// Random SNF decompositions and kernel/image/cokernel against enumeration.
fn group_oracle_suite() -> Outcome {
    let runner = |cases| TestRunner::new_with_rng(Config { cases, failure_persistence: None, ..Config::default() }, TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    let mut snf_runner = runner(1000);
    let n_snf = std::cell::Cell::new(0);
    e2s(snf_runner.run(&matrix_strategy(), |rows| {
        n_snf.set(n_snf.get() + 1);
        check_snf(&to_matrix(&rows)).map_err(proptest::test_runner::TestCaseError::fail)
    }))?;
    let mut hom_runner = runner(500);
    let n_hom = std::cell::Cell::new(0);
    e2s(hom_runner.run(&hom_strategy().boxed(), |(d, c, raw)| {
        n_hom.set(n_hom.get() + 1);
        check_against_oracle(&to_hom(&d, &c, &raw)).map_err(proptest::test_runner::TestCaseError::fail)
    }))?;
    let (n_snf, n_hom) = (n_snf.get(), n_hom.get());
    ensure(n_snf >= 1000 && n_hom >= 500, || format!("only {n_snf} / {n_hom} cases ran"))?;
    Ok(format!("{n_snf} SNF checks, {n_hom} kernel/image/cokernel checks, 0 failures"))
}

/// `F(b,0,ℝ) ⊗ N ≅ N`.
fn unit_law() -> Outcome {
    let ns: Vec<(&str, CrtModule<Int>)> = vec![
        ("R", e2s(catalog::real())?),
        ("C", e2s(catalog::complex())?),
        ("T", e2s(catalog::self_conjugate())?),
        ("O3", cuntz(2)),
        ("O4", cuntz(3)),
        ("O5", cuntz(4)),
    ];
    for (name, n) in &ns {
        let t = e2s(tensor_monogenic(Kind::R, 0, n))?.module;
        let same = if n.is_finite() { iso(&t, n)? } else { t == *n };
        ensure(same, || format!("F(b,0,R) ⊗ {name} differs from {name}"))?;
    }
    Ok(format!("{} modules: R-unit tensor reproduces each", ns.len()))
}

/// Odd Cuntz pairs: tensor = Tor = stored table, unique split middle term.
fn odd_pipeline() -> Outcome {
    let mut notes = Vec::new();
    for (k, l) in [(3, 5), (3, 6)] {
        let start = Instant::now();
        let res = e2s(cuntz_resolution::<Int>(k))?;
        let tt = e2s(tensor_and_tor(&res, &cuntz(l)))?;
        let et = e2s(catalog::expected_tensor::<Int>(k, l))?.module;
        let eo = e2s(catalog::expected_tor::<Int>(k, l))?.module;
        ensure(iso(&tt.tensor, &et)?, || format!("({k},{l}): tensor differs from the stored table"))?;
        ensure(iso(&tt.tor, &eo)?, || format!("({k},{l}): Tor differs from the stored table"))?;
        let problem = e2s(KunnethProblem::new(tt.tensor, tt.tor))?;
        let sols = e2s(solve_middle(&problem, DEFAULT_BUDGET))?;
        let product = e2s(catalog::expected_product::<Int>(k, l))?.module;
        ensure(!sols.solutions.is_empty(), || format!("({k},{l}): no solution"))?;
        for s in &sols.solutions {
            ensure(e2s(validate_solution(s))?, || format!("({k},{l}): invalid solution"))?;
            ensure(iso(&s.middle, &product)?, || format!("({k},{l}): middle term differs from the stored table"))?;
            ensure(e2s(split_check(&s.middle, &problem))?, || format!("({k},{l}): sequence does not split"))?;
        }
        let took = start.elapsed();
        ensure(took < Duration::from_secs(60), || format!("({k},{l}) took {took:?}"))?;
        notes.push(format!("({k},{l}) {} class, split, {:.2}s", sols.solutions.len(), took.as_secs_f64()));
    }
    Ok(notes.join("; "))
}

/// The (4,4) pair: tensor, Tor, the non-split middle term.
fn zero_mod_four_pipeline() -> Outcome {
    let (k, l) = (4, 4);
    let res = e2s(cuntz_resolution::<Int>(k))?;
    let tt = e2s(tensor_and_tor(&res, &cuntz(l)))?;
    let et = e2s(catalog::expected_tensor::<Int>(k, l))?.module;
    let eo = e2s(catalog::expected_tor::<Int>(k, l))?.module;
    for p in Part::ALL {
        ensure(tt.tensor.part(p) == et.part(p), || format!("tensor part {} differs", p.name()))?;
        ensure(tt.tor.part(p) == eo.part(p), || format!("Tor part {} differs", p.name()))?;
    }
    ensure(iso(&tt.tensor, &et)?, || "tensor not isomorphic to the stored table".into())?;
    ensure(iso(&tt.tor, &eo)?, || "Tor not isomorphic to the stored table".into())?;
    let tor_o: Vec<FinAbGroup<Int>> = tt.tor.part(Part::O).to_vec();
    let want = vec![z(&[4]), z(&[]), z(&[2]), z(&[]), z(&[2]), z(&[]), z(&[]), z(&[])];
    ensure(tor_o == want, || format!("Tor O part {tor_o:?}"))?;
    let problem = e2s(KunnethProblem::new(tt.tensor, tt.tor))?;
    let sols = e2s(solve_middle(&problem, DEFAULT_BUDGET))?;
    let product = e2s(catalog::expected_product::<Int>(k, l))?.module;
    ensure(!sols.solutions.is_empty(), || "no solution".into())?;
    for s in &sols.solutions {
        ensure(e2s(validate_solution(s))?, || "invalid solution".into())?;
        ensure(iso(&s.middle, &product)?, || "middle term differs from the stored table".into())?;
        ensure(s.middle.group(Part::T, 0) == &z(&[4, 4]), || format!("KT_0 = {}", s.middle.group(Part::T, 0)))?;
        ensure(s.middle.group(Part::O, 5) == &z(&[4]), || format!("KO_5 = {}", s.middle.group(Part::O, 5)))?;
        ensure(!e2s(split_check(&s.middle, &problem))?, || "sequence splits".into())?;
    }
    let sum_t0 = problem.split_module().group(Part::T, 0).clone();
    ensure(sum_t0 == z(&[2, 2, 4]), || format!("split candidate KT_0 = {sum_t0}"))?;
    Ok(format!(
        "{} class from {} assignments; KT_0 = Z_4^2 vs Z_2^2+Z_4 in the split sum; no splitting",
        sols.solutions.len(),
        sols.raw_solutions
    ))
}

/// `O3 ⊗ O3` and `O3 ⊗ O5`: same complex parts, different real parts.
fn cuntz_rigidity() -> Outcome {
    let a = pipeline(2, 2)?;
    let b = pipeline(2, 4)?;
    ensure(a.result.solutions.len() == 1 && b.result.solutions.len() == 1, || "middle terms not unique".into())?;
    let (ma, mb) = (&a.result.solutions[0].middle, &b.result.solutions[0].middle);
    ensure(ma.part(Part::U) == mb.part(Part::U), || "U parts differ".into())?;
    ensure(ma.group(Part::O, 2) == &z(&[2, 2]), || format!("KO_2(O3⊗O3) = {}", ma.group(Part::O, 2)))?;
    ensure(mb.group(Part::O, 2) == &z(&[2, 4]), || format!("KO_2(O3⊗O5) = {}", mb.group(Part::O, 2)))?;
    ensure(!iso(ma, mb)?, || "modules are isomorphic".into())?;
    ensure(a.matches_expected == Some(true) && b.matches_expected == Some(true), || "stored tables differ".into())?;
    Ok("equal U parts; KO_2 = Z_2^2 vs Z_2+Z_4; not isomorphic".into())
}

/// Tensoring acyclic modules with free modules stays acyclic.
fn acyclic_flat() -> Outcome {
    let ns = [cuntz(2), cuntz(3), cuntz(4), e2s(catalog::self_conjugate())?];
    let mut count = 0;
    for kind in Kind::ALL {
        for s in 0..8 {
            let f = e2s(FreeCrt::<Int>::new(&[Monogenic::new(kind, s)]))?;
            for n in &ns {
                let t = e2s(tensor_free(&f, n))?.module;
                let acyc = e2s(is_acyclic(&t))?;
                ensure(acyc.passed(), || format!("F(b,{s},{}) ⊗ N: {acyc}", kind.name()))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} pairs acyclic"))
}

/// U parts of middle terms against the cyclic-group Künneth formula.
fn complex_cross_check() -> Outcome {
    let pairs = [(3, 5), (3, 6), (2, 2), (2, 4), (4, 4), (1, 1)];
    for (k, l) in pairs {
        let r = pipeline(k, l)?;
        let classical = classical_complex_kunneth::<Int>(k, l);
        let product = e2s(catalog::expected_product::<Int>(k, l))?.module;
        for s in &r.result.solutions {
            for n in 0..8 {
                let got = s.middle.group(Part::U, n);
                ensure(got == &classical[(n % 2) as usize], || format!("({k},{l}) KU_{n} = {got}"))?;
                ensure(got == product.group(Part::U, n), || format!("({k},{l}) KU_{n} differs from the stored table"))?;
            }
        }
    }
    Ok(format!("{} pairs agree with the cyclic-group answer", pairs.len()))
}

fn main() {
    let criteria: Vec<(&str, Duration, fn() -> Outcome)> = vec![
        ("fixture transcription integrity", Duration::from_secs(5), transcription_integrity),
        ("SNF and group-oracle property suite", Duration::from_secs(30), group_oracle_suite),
        ("unit law for the real monogenic module", Duration::from_secs(10), unit_law),
        ("odd Cuntz pipeline (3,5), (3,6)", Duration::from_secs(120), odd_pipeline),
        ("(4,4) Cuntz pipeline and non-splitting", Duration::from_secs(600), zero_mod_four_pipeline),
        ("Cuntz rigidity O3⊗O3 vs O3⊗O5", Duration::from_secs(300), cuntz_rigidity),
        ("tensor with free modules is acyclic", Duration::from_secs(120), acyclic_flat),
        ("complex Künneth cross-check", Duration::from_secs(30), complex_cross_check),
    ];
    let mut failed = 0;
    for (i, (name, limit, f)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let took = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if took <= limit => (true, d),
            Ok(d) => (false, format!("{d}; exceeded the time limit")),
            Err(e) => (false, e),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "{} [{}] {name}: {detail} ({:.2}s, limit {}s)",
            if ok { "PASS" } else { "FAIL" },
            i + 1,
            took.as_secs_f64(),
            limit.as_secs()
        );
    }
    if failed > 0 {
        println!("{failed} criterion(s) failed");
        std::process::exit(1);
    }
    println!("all criteria passed");
}
