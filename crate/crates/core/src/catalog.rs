//! Named fixtures: the united K-theory of `ℝ`, `ℂ`, `T`, of the real Cuntz
//! algebras `O_{k+1}`, and the expected tables for products of two Cuntz
//! algebras together with the tensor and Tor modules of their invariants.
//!
//! Fixtures are parameterized JSON templates. Groups are written as sums of
//! cyclic terms (`"Z"`, `"Z_k"`, `"Z_2^2"`, `"Z_(2*g)"`, `"Z+Z_2"`, `"0"`) in
//! the printed generator order; every printed generator is kept, including
//! degenerate ones such as `Z_1`. Matrix entries are integers or arithmetic
//! expressions in the parameters (integer division truncates, all divisions in
//! the templates are exact); a bare scalar stands for `scalar · I` on a square
//! shape, `0` for the zero matrix of any shape, and `"I"` for the identity.
//! Matrices act on coordinate columns of the printed generators.
//!
//! The templates are compiled into the library; setting the environment
//! variable `CRT_DATA_DIR` makes the loader read `<dir>/<name>.json` instead.

use std::collections::BTreeMap;

use evalexpr::{ContextWithMutableVariables, HashMapContext, Value as ExprValue};
use num_integer::Integer;
use serde_json::Value;

use crate::crt::{CrtModule, Op, Part, PrintedModule, WINDOW};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::zlinalg::Matrix;

/// Environment variable overriding the fixture directory.
pub const DATA_DIR_ENV: &str = "CRT_DATA_DIR";

const EMBEDDED: [(&str, &str); 13] = [
    ("R", include_str!("../data/R.json")),
    ("C", include_str!("../data/C.json")),
    ("T", include_str!("../data/T.json")),
    ("cuntz_odd", include_str!("../data/cuntz_odd.json")),
    ("cuntz_2mod4", include_str!("../data/cuntz_2mod4.json")),
    ("cuntz_0mod4", include_str!("../data/cuntz_0mod4.json")),
    ("product_odd", include_str!("../data/product_odd.json")),
    ("product_2_2", include_str!("../data/product_2_2.json")),
    ("product_0_0", include_str!("../data/product_0_0.json")),
    ("product_2_0", include_str!("../data/product_2_0.json")),
    ("tensor_odd", include_str!("../data/tensor_odd.json")),
    ("tensor_0_0", include_str!("../data/tensor_0_0.json")),
    ("tor_0_0", include_str!("../data/tor_0_0.json")),
];

/// Names of all fixture templates.
pub fn template_names() -> Vec<&'static str> {
    EMBEDDED.iter().map(|(n, _)| *n).collect()
}

/// A parsed fixture template.
#[derive(Clone, Debug)]
pub struct Template {
    pub name: String,
    pub description: String,
    /// Parameter names, in the order the builders supply them.
    pub params: Vec<String>,
    /// Free-form notes attached to the template (e.g. how an undefined symbol is read).
    pub flags: BTreeMap<String, String>,
    raw: Value,
}

impl Template {
    /// Parses a template from JSON text.
    pub fn parse(text: &str) -> Result<Self> {
        let raw: Value = serde_json::from_str(text).map_err(|e| Error::Fixture(format!("invalid JSON: {e}")))?;
        let name = raw
            .get("name")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Fixture("missing name".into()))?
            .to_string();
        let description = raw.get("description").and_then(Value::as_str).unwrap_or("").to_string();
        let params = match raw.get("params") {
            None => Vec::new(),
            Some(v) => v
                .as_array()
                .ok_or_else(|| Error::Fixture(format!("{name}: params must be an array")))?
                .iter()
                .map(|p| p.as_str().map(str::to_string))
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| Error::Fixture(format!("{name}: params must be strings")))?,
        };
        let mut flags = BTreeMap::new();
        if let Some(obj) = raw.get("flags").and_then(Value::as_object) {
            for (k, v) in obj {
                flags.insert(k.clone(), v.as_str().unwrap_or_default().to_string());
            }
        }
        Ok(Template { name, description, params, flags, raw })
    }

    /// Loads a template by name, honouring [`DATA_DIR_ENV`].
    pub fn load(name: &str) -> Result<Self> {
        if let Ok(dir) = std::env::var(DATA_DIR_ENV) {
            let path = std::path::Path::new(&dir).join(format!("{name}.json"));
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Error::Fixture(format!("cannot read {}: {e}", path.display())))?;
            return Self::parse(&text);
        }
        let text = EMBEDDED
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, t)| *t)
            .ok_or_else(|| Error::Fixture(format!("unknown fixture template {name:?}")))?;
        Self::parse(text)
    }

    /// Instantiates the printed module for the given parameter values
    /// (one value per entry of [`Self::params`], in order).
    pub fn printed<S: Scalar>(&self, values: &[i64]) -> Result<PrintedModule<S>> {
        if values.len() != self.params.len() {
            return Err(Error::Fixture(format!(
                "{}: expected {} parameters, got {}",
                self.name,
                self.params.len(),
                values.len()
            )));
        }
        let mut ctx: HashMapContext = HashMapContext::new();
        for (p, v) in self.params.iter().zip(values) {
            ctx.set_value(p.clone(), ExprValue::Int(*v))
                .map_err(|e| Error::Fixture(format!("{}: {e}", self.name)))?;
        }
        let eval = |expr: &str| -> Result<i64> {
            evalexpr::eval_int_with_context(expr, &ctx)
                .map_err(|e| Error::Fixture(format!("{}: cannot evaluate {expr:?}: {e}", self.name)))
        };
        let mut groups: [Vec<Vec<S>>; 3] = Default::default();
        for p in Part::ALL {
            let list = self
                .raw
                .get(p.name())
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Fixture(format!("{}: missing part {}", self.name, p.name())))?;
            if list.len() != WINDOW {
                return Err(Error::Fixture(format!("{}: part {} needs 8 groups", self.name, p.name())));
            }
            for g in list {
                let s = g
                    .as_str()
                    .ok_or_else(|| Error::Fixture(format!("{}: group entries must be strings", self.name)))?;
                groups[p.index()].push(parse_group(s, &eval)?);
            }
        }
        let ops_v = self
            .raw
            .get("ops")
            .ok_or_else(|| Error::Fixture(format!("{}: missing ops", self.name)))?;
        let mut ops = Vec::new();
        for op in Op::ALL {
            let fam = ops_v
                .get(op.name())
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Fixture(format!("{}: missing operation {}", self.name, op.name())))?;
            if fam.len() != WINDOW {
                return Err(Error::Fixture(format!("{}: operation {} needs 8 entries", self.name, op.name())));
            }
            let mut mats = Vec::new();
            for (n, entry) in fam.iter().enumerate() {
                let rows = groups[op.target().index()][crate::crt::wrap(n as i64 + op.shift())].len();
                let cols = groups[op.source().index()][n].len();
                let m = parse_matrix(entry, rows, cols, &eval)
                    .map_err(|e| Error::Fixture(format!("{}: {}_{n}: {e}", self.name, op.name())))?;
                mats.push(m);
            }
            ops.push(mats);
        }
        Ok(PrintedModule { groups, ops })
    }

    /// Instantiates and normalizes the module.
    pub fn instantiate<S: Scalar>(&self, values: &[i64]) -> Result<CrtModule<S>> {
        self.printed(values)?.normalize()
    }
}

/// Parses a printed group such as `Z_2+Z_g^2+Z` into its generator orders
/// (`0` for an infinite cyclic generator).
fn parse_group<S: Scalar>(s: &str, eval: &dyn Fn(&str) -> Result<i64>) -> Result<Vec<S>> {
    let s = s.trim();
    if s == "0" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for term in split_top_level(s, '+') {
        let term = term.trim();
        let rest = term
            .strip_prefix('Z')
            .ok_or_else(|| Error::Fixture(format!("bad group term {term:?}")))?;
        // Split off a trailing multiplicity `^m` (outside parentheses).
        let (body, mult) = match rest.rfind('^') {
            Some(i) if !rest[i..].contains(')') => {
                let m: usize = rest[i + 1..]
                    .trim()
                    .parse()
                    .map_err(|_| Error::Fixture(format!("bad multiplicity in {term:?}")))?;
                (&rest[..i], m)
            }
            _ => (rest, 1),
        };
        let order = if body.is_empty() {
            0
        } else {
            let e = body
                .strip_prefix('_')
                .ok_or_else(|| Error::Fixture(format!("bad group term {term:?}")))?;
            let v = eval(e)?;
            if v < 1 {
                return Err(Error::Fixture(format!("cyclic order {v} in {term:?} must be positive")));
            }
            v
        };
        out.extend(std::iter::repeat_n(S::from_int(order), mult));
    }
    Ok(out)
}

fn split_top_level(s: &str, sep: char) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == sep && depth == 0 => {
                parts.push(&s[start..i]);
                start = i + ch.len_utf8();
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

fn parse_scalar(v: &Value, eval: &dyn Fn(&str) -> Result<i64>) -> Result<i64> {
    match v {
        Value::Number(n) => n.as_i64().ok_or_else(|| Error::Fixture(format!("not an integer: {n}"))),
        Value::String(s) => eval(s),
        other => Err(Error::Fixture(format!("expected a matrix entry, got {other}"))),
    }
}

fn parse_matrix<S: Scalar>(
    v: &Value,
    rows: usize,
    cols: usize,
    eval: &dyn Fn(&str) -> Result<i64>,
) -> Result<Matrix<S>> {
    match v {
        Value::String(s) if s.trim() == "I" => {
            if rows != cols {
                return Err(Error::Fixture(format!("identity on a {rows}x{cols} shape")));
            }
            Ok(Matrix::identity(rows))
        }
        Value::Array(rs) => {
            if rs.len() != rows {
                return Err(Error::Fixture(format!("matrix has {} rows, expected {rows}", rs.len())));
            }
            let mut out = Vec::with_capacity(rows);
            for r in rs {
                let r = r.as_array().ok_or_else(|| Error::Fixture("matrix rows must be arrays".into()))?;
                if r.len() != cols {
                    return Err(Error::Fixture(format!("matrix row has {} entries, expected {cols}", r.len())));
                }
                out.push(r.iter().map(|x| parse_scalar(x, eval).map(S::from_int)).collect::<Result<Vec<S>>>()?);
            }
            Ok(Matrix::from_rows(out, cols))
        }
        _ => {
            let s = parse_scalar(v, eval)?;
            if s == 0 || rows == 0 || cols == 0 {
                Ok(Matrix::zeros(rows, cols))
            } else if rows == cols {
                Ok(Matrix::scalar(rows, S::from_int(s)))
            } else {
                Err(Error::Fixture(format!("scalar {s} on a non-square {rows}x{cols} shape")))
            }
        }
    }
}

/// A named, instantiated catalog module.
#[derive(Clone, Debug)]
pub struct CatalogEntry<S> {
    /// Canonical catalog name (e.g. `O5`, `product(2,4)`).
    pub name: String,
    /// Template the module was built from.
    pub template: String,
    /// Parameter values the template was instantiated with.
    pub params: BTreeMap<String, i64>,
    pub module: CrtModule<S>,
}

fn entry<S: Scalar>(name: String, template: &str, values: &[i64]) -> Result<CatalogEntry<S>> {
    let t = Template::load(template)?;
    let module = t.instantiate(values)?;
    let params = t.params.iter().cloned().zip(values.iter().copied()).collect();
    Ok(CatalogEntry { name, template: template.to_string(), params, module })
}

/// `K^CRT(ℝ)`, free on `1_O ∈ KO_0`.
pub fn real<S: Scalar>() -> Result<CrtModule<S>> {
    Template::load("R")?.instantiate(&[])
}

/// `K^CRT(ℂ)`, free on `κ_1 ∈ KU_0`.
pub fn complex<S: Scalar>() -> Result<CrtModule<S>> {
    Template::load("C")?.instantiate(&[])
}

/// `K^CRT(T)`, free on `χ ∈ KT_{−1}`.
pub fn self_conjugate<S: Scalar>() -> Result<CrtModule<S>> {
    Template::load("T")?.instantiate(&[])
}

/// Name of the Cuntz template covering `k`.
pub fn cuntz_template(k: i64) -> &'static str {
    match k.rem_euclid(4) {
        1 | 3 => "cuntz_odd",
        2 => "cuntz_2mod4",
        _ => "cuntz_0mod4",
    }
}

/// `K^CRT(O_{k+1})` for `k ≥ 1`.
pub fn cuntz<S: Scalar>(k: i64) -> Result<CatalogEntry<S>> {
    if k < 1 {
        return Err(Error::Fixture(format!("Cuntz parameter k = {k} must be at least 1")));
    }
    entry(format!("O{}", k + 1), cuntz_template(k), &[k])
}

/// The parameter `k' ∈ ℤ_2` for `k` even with `g | k`: `0` if `k/2 ≡ 0 (mod g)`,
/// `1` if `k/2 ≡ g/2 (mod g)`.
pub fn k_prime(k: i64, g: i64) -> Result<i64> {
    if k % 2 != 0 || g <= 0 || g % 2 != 0 || k % g != 0 {
        return Err(Error::Fixture(format!("k' needs even k and even g dividing k (k = {k}, g = {g})")));
    }
    let h = (k / 2).rem_euclid(g);
    if h == 0 {
        Ok(0)
    } else if h == g / 2 {
        Ok(1)
    } else {
        Err(Error::Fixture(format!("k/2 = {} is neither 0 nor g/2 mod g = {g}", k / 2)))
    }
}

fn check_pair(k: i64, l: i64) -> Result<()> {
    if k < 1 || l < 1 {
        return Err(Error::Fixture(format!("Cuntz parameters must be at least 1 (k = {k}, l = {l})")));
    }
    Ok(())
}

/// The expected `K^CRT(O_{k+1} ⊗ O_{l+1})`.
pub fn expected_product<S: Scalar>(k: i64, l: i64) -> Result<CatalogEntry<S>> {
    check_pair(k, l)?;
    let g = k.gcd(&l);
    let name = format!("product({k},{l})");
    if k % 2 != 0 || l % 2 != 0 {
        return entry(name, "product_odd", &[g]);
    }
    match (k.rem_euclid(4), l.rem_euclid(4)) {
        (2, 2) => entry(name, "product_2_2", &[g]),
        (0, 0) => entry(name, "product_0_0", &[k, l, g, k_prime(k, g)?, k_prime(l, g)?, g]),
        _ => entry(name, "product_2_0", &[g]),
    }
}

/// The expected `K^CRT(O_{k+1}) ⊗_CRT K^CRT(O_{l+1})`.
pub fn expected_tensor<S: Scalar>(k: i64, l: i64) -> Result<CatalogEntry<S>> {
    check_pair(k, l)?;
    let g = k.gcd(&l);
    let name = format!("tensor({k},{l})");
    if k % 2 != 0 || l % 2 != 0 {
        entry(name, "tensor_odd", &[g])
    } else if k % 4 == 0 && l % 4 == 0 {
        entry(name, "tensor_0_0", &[k, l, g])
    } else {
        Err(Error::Fixture(format!("no tensor table for (k, l) = ({k}, {l})")))
    }
}

/// The expected `Tor_CRT(K^CRT(O_{k+1}), K^CRT(O_{l+1}))`.
pub fn expected_tor<S: Scalar>(k: i64, l: i64) -> Result<CatalogEntry<S>> {
    check_pair(k, l)?;
    let g = k.gcd(&l);
    let name = format!("tor({k},{l})");
    if k % 2 != 0 || l % 2 != 0 {
        entry(name, "tensor_odd", &[g])
    } else if k % 4 == 0 && l % 4 == 0 {
        entry(name, "tor_0_0", &[g])
    } else {
        Err(Error::Fixture(format!("no Tor table for (k, l) = ({k}, {l})")))
    }
}

fn parse_pair(args: &str) -> Option<(i64, i64)> {
    let inner = args.strip_prefix('(')?.strip_suffix(')')?;
    let (a, b) = inner.split_once(',')?;
    Some((a.trim().parse().ok()?, b.trim().parse().ok()?))
}

/// Resolves a catalog name: `R`, `C`, `T`, `zero`, `O<k+1>` (e.g. `O3` for
/// `k = 2`), `product(k,l)`, `tensor(k,l)`, `tor(k,l)`. A `catalog:` prefix is
/// accepted and ignored.
pub fn lookup<S: Scalar>(name: &str) -> Result<CatalogEntry<S>> {
    let name = name.trim();
    let name = name.strip_prefix("catalog:").unwrap_or(name);
    let simple = |template: &str, module: CrtModule<S>| CatalogEntry {
        name: name.to_string(),
        template: template.to_string(),
        params: BTreeMap::new(),
        module,
    };
    match name {
        "R" => return Ok(simple("R", real()?)),
        "C" => return Ok(simple("C", complex()?)),
        "T" => return Ok(simple("T", self_conjugate()?)),
        "zero" | "0" => return Ok(simple("zero", CrtModule::zero())),
        _ => {}
    }
    if let Some(rest) = name.strip_prefix('O') {
        if let Ok(n) = rest.parse::<i64>() {
            return cuntz(n - 1);
        }
    }
    for (prefix, f) in [
        ("product", expected_product::<S> as fn(i64, i64) -> Result<CatalogEntry<S>>),
        ("tensor", expected_tensor::<S>),
        ("tor", expected_tor::<S>),
    ] {
        if let Some(args) = name.strip_prefix(prefix) {
            if let Some((k, l)) = parse_pair(args) {
                return f(k, l);
            }
        }
    }
    Err(Error::Fixture(format!("unknown catalog name {name:?}")))
}

/// Example names listed by the CLI.
pub fn listed_names() -> Vec<String> {
    let mut v: Vec<String> = ["R", "C", "T", "zero"].iter().map(|s| s.to_string()).collect();
    v.push("O<k+1>            real Cuntz algebra, k >= 1 (e.g. O3 for k = 2)".into());
    v.push("product(k,l)      expected K-theory of O_{k+1} (x) O_{l+1}".into());
    v.push("tensor(k,l)       expected tensor product (k, l odd, or both = 0 mod 4)".into());
    v.push("tor(k,l)          expected Tor (k, l odd, or both = 0 mod 4)".into());
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crt::{is_acyclic, is_free, verify_relations};
    use crate::Int;

    fn orders(m: &CrtModule<Int>, p: Part) -> Vec<String> {
        m.part(p).iter().map(|g| g.to_string()).collect()
    }

    #[test]
    fn group_strings_parse() {
        let eval = |e: &str| -> Result<i64> {
            let mut ctx: HashMapContext = HashMapContext::new();
            ctx.set_value("g".into(), ExprValue::Int(4)).unwrap();
            evalexpr::eval_int_with_context(e, &ctx).map_err(|e| Error::Fixture(e.to_string()))
        };
        let p = |s| parse_group::<i64>(s, &eval).unwrap();
        assert_eq!(p("0"), Vec::<i64>::new());
        assert_eq!(p("Z"), vec![0]);
        assert_eq!(p("Z^2"), vec![0, 0]);
        assert_eq!(p("Z_2^2+Z"), vec![2, 2, 0]);
        assert_eq!(p("Z_(2*g)"), vec![8]);
        assert_eq!(p("Z_(g/2)^2"), vec![2, 2]);
        assert_eq!(p("Z_g+Z_2"), vec![4, 2]);
    }

    #[test]
    fn scalar_on_rectangular_shape_is_rejected() {
        let eval = |_: &str| -> Result<i64> { Ok(0) };
        assert!(parse_matrix::<i64>(&serde_json::json!(2), 2, 1, &eval).is_err());
        assert_eq!(parse_matrix::<i64>(&serde_json::json!(0), 2, 1, &eval).unwrap(), Matrix::zeros(2, 1));
        assert_eq!(parse_matrix::<i64>(&serde_json::json!(3), 2, 2, &eval).unwrap(), Matrix::scalar(2, 3));
    }

    #[test]
    fn monogenic_fixtures_are_free() {
        for m in [real::<Int>().unwrap(), complex().unwrap(), self_conjugate().unwrap()] {
            assert!(verify_relations(&m).passed(), "{}", verify_relations(&m));
            assert!(is_acyclic(&m).unwrap().passed());
            assert!(is_free(&m));
        }
    }

    #[test]
    fn real_table_groups() {
        let r = real::<Int>().unwrap();
        assert_eq!(orders(&r, Part::O), ["Z", "Z_2", "Z_2", "0", "Z", "0", "0", "0"]);
        assert_eq!(r.op(Op::Tau, 0).matrix(), &Matrix::from_i64(&[&[1]]));
        assert_eq!(r.op(Op::R, 0).matrix(), &Matrix::from_i64(&[&[2]]));
        assert_eq!(r.op(Op::C, 4).matrix(), &Matrix::from_i64(&[&[2]]));
    }

    #[test]
    fn complex_table_ops() {
        let c = complex::<Int>().unwrap();
        assert_eq!(c.op(Op::PsiU, 0).matrix(), &Matrix::from_i64(&[&[0, 1], &[1, 0]]));
        assert_eq!(c.op(Op::R, 0).matrix(), &Matrix::from_i64(&[&[1, 1]]));
        assert_eq!(c.op(Op::Tau, 1).matrix(), &Matrix::from_i64(&[&[-1]]));
    }

    #[test]
    fn self_conjugate_table_ops() {
        let t = self_conjugate::<Int>().unwrap();
        assert_eq!(t.group(Part::T, 3).to_string(), "Z^2");
        assert_eq!(t.op(Op::Eps, 3).matrix(), &Matrix::from_i64(&[&[2], &[1]]));
        assert_eq!(t.op(Op::Tau, 3).matrix(), &Matrix::from_i64(&[&[-1, 2]]));
    }

    #[test]
    fn cuntz_fixtures_verify_for_small_k() {
        for k in 1..=12 {
            let m = cuntz::<Int>(k).unwrap().module;
            let rel = verify_relations(&m);
            assert!(rel.passed(), "k = {k}: {rel}");
            let ac = is_acyclic(&m).unwrap();
            assert!(ac.passed(), "k = {k}: {ac}");
            let expect_u = if k == 1 { "0".to_string() } else { format!("Z_{k}") };
            for n in 0..8 {
                let want = if n % 2 == 0 { expect_u.clone() } else { "0".to_string() };
                assert_eq!(m.group(Part::U, n).to_string(), want);
            }
        }
    }

    #[test]
    fn cuntz_groups() {
        let o = |k| orders(&cuntz::<Int>(k).unwrap().module, Part::O);
        assert_eq!(o(2), ["Z_2", "Z_2", "Z_4", "Z_2", "Z_2", "0", "0", "0"]);
        assert_eq!(o(5), ["Z_5", "0", "0", "0", "Z_5", "0", "0", "0"]);
        assert_eq!(o(4)[2], "Z_2^2");
        assert!(cuntz::<Int>(1).unwrap().module.is_zero());
        assert!(!is_free(&cuntz::<Int>(2).unwrap().module));
        assert!(cuntz::<Int>(0).is_err());
    }

    #[test]
    fn k_prime_rule() {
        assert_eq!(k_prime(4, 4).unwrap(), 1);
        assert_eq!(k_prime(8, 4).unwrap(), 0);
        assert_eq!(k_prime(12, 4).unwrap(), 1);
        assert_eq!(k_prime(4, 2).unwrap(), 0);
        assert!(k_prime(3, 1).is_err());
    }

    #[test]
    fn expected_tables_verify() {
        for (k, l) in [(1, 1), (3, 5), (3, 6), (3, 9), (2, 2), (2, 6), (6, 6), (2, 4), (4, 2), (6, 4), (4, 4), (4, 8), (8, 8), (12, 8)] {
            let p = expected_product::<Int>(k, l).unwrap().module;
            assert!(verify_relations(&p).passed(), "product({k},{l}): {}", verify_relations(&p));
            let ac = is_acyclic(&p).unwrap();
            assert!(ac.passed(), "product({k},{l}): {ac}");
            for e in [expected_tensor::<Int>(k, l), expected_tor::<Int>(k, l)].into_iter().flatten() {
                assert!(verify_relations(&e.module).passed(), "{}: {}", e.name, verify_relations(&e.module));
            }
        }
    }

    #[test]
    fn expected_table_examples() {
        assert!(expected_product::<Int>(3, 5).unwrap().module.is_zero());
        let tor = expected_tor::<Int>(4, 4).unwrap().module;
        assert_eq!(orders(&tor, Part::O), ["Z_4", "0", "Z_2", "0", "Z_2", "0", "0", "0"]);
        let p = expected_product::<Int>(2, 4).unwrap().module;
        assert_eq!(p.group(Part::O, 2).to_string(), "Z_2+Z_4");
        let p = expected_product::<Int>(2, 2).unwrap().module;
        assert_eq!(orders(&p, Part::O), ["Z_2", "Z_4", "Z_2^2", "Z_2^2", "Z_4", "Z_2", "0", "0"]);
        assert!(expected_tensor::<Int>(2, 2).is_err());
        assert_eq!(expected_tensor::<Int>(3, 9).unwrap().module, expected_tor::<Int>(3, 9).unwrap().module);
    }

    #[test]
    fn names_resolve() {
        assert_eq!(lookup::<Int>("O3").unwrap().params["k"], 2);
        assert!(lookup::<Int>("catalog:T").is_ok());
        assert!(lookup::<Int>("zero").unwrap().module.is_zero());
        assert_eq!(lookup::<Int>("product(2, 4)").unwrap().template, "product_2_0");
        assert!(lookup::<Int>("nonsense").is_err());
    }
}
