//! Built-in algebras: classical and color Lie algebras, the q-deformed
//! triangular families `sl_plus_q:n` / `sl_minus_q:n`, the
//! pseudobracket-erased `tilde_sl4`, and the two-parameter families
//! `Lpq:n x m`.
//!
//! Catalog keys use `family:params` syntax (`sl_plus_q:4`, `Lpq:3x3`,
//! `classical:sl3`, `tilde_sl4`, `super_demo`) so built-ins and user spec
//! files are interchangeable on the command line.

use num::BigInt;
use thiserror::Error;

use crate::algebra::{
    BuildError, RawBasisElement, RawBracketEntry, RawPseudoEntry, RawSymEntry, RawTLieSpec,
    TLieSpec,
};
use crate::axioms::{check_jacobi, CheckStatus};
use crate::scalar::{LaurentScalar, Rational};

#[derive(Debug, Error, Clone)]
pub enum CatalogError {
    #[error("bracket table violates antisymmetry at ({x}, {y})")]
    AntisymmetryViolated { x: String, y: String },
    #[error("Jacobi identity fails on ({x}, {y}, {z})")]
    JacobiFail { x: String, y: String, z: String },
    #[error("not a commutation factor at degrees ({a}, {b}): {reason}")]
    NotACommutationFactor { a: usize, b: usize, reason: String },
    #[error("bad epsilon matrix: {reason}")]
    BadEps { reason: String },
    #[error("bad grading group: {reason}")]
    BadGroup { reason: String },
    #[error("unknown catalog key `{key}` (see `catalog list`)")]
    UnknownKey { key: String },
    #[error(transparent)]
    Build(#[from] BuildError),
}

fn one() -> LaurentScalar {
    LaurentScalar::one()
}

fn q() -> LaurentScalar {
    LaurentScalar::var(0)
}

fn rat(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

/// `[x,y] = Σ c·z` entries of a classical structure table; both orders of a
/// pair may be given and must then be consistent (`[y,x] = -[x,y]`).
pub type ClassicalTable = Vec<(String, String, Vec<(String, Rational)>)>;

/// Classical Lie algebra: trivial grading, `q ≡ 1`, zero pseudobracket.
/// The bracket table must satisfy antisymmetry and the Jacobi identity.
pub fn make_classical(
    name: &str,
    basis: &[String],
    table: &ClassicalTable,
) -> Result<TLieSpec, CatalogError> {
    let pos = |id: &str| basis.iter().position(|b| b == id);
    let mut entries: std::collections::BTreeMap<(usize, usize), Vec<(String, Rational)>> =
        std::collections::BTreeMap::new();
    for (x, y, value) in table {
        let (ix, iy) = match (pos(x), pos(y)) {
            (Some(a), Some(b)) => (a, b),
            // leave unknown ids for the builder to report uniformly
            _ => (0, 1),
        };
        let (key, value) = if ix <= iy {
            ((ix, iy), value.clone())
        } else {
            ((iy, ix), value.iter().map(|(z, c)| (z.clone(), -c.clone())).collect())
        };
        if let Some(prev) = entries.get(&key) {
            if *prev != value {
                return Err(CatalogError::AntisymmetryViolated {
                    x: x.clone(),
                    y: y.clone(),
                });
            }
        } else {
            entries.insert(key, value);
        }
    }
    let raw = RawTLieSpec {
        name: name.to_string(),
        variables: vec![],
        basis: basis
            .iter()
            .map(|id| RawBasisElement {
                id: id.clone(),
                grade: 1,
                display: None,
            })
            .collect(),
        sym: vec![],
        bracket: entries
            .into_iter()
            .map(|((ix, iy), value)| RawBracketEntry {
                x: basis.get(ix).cloned().unwrap_or_default(),
                y: basis.get(iy).cloned().unwrap_or_default(),
                value: value
                    .into_iter()
                    .map(|(z, c)| (z, LaurentScalar::from_rational(c)))
                    .collect(),
            })
            .collect(),
        pseudo: vec![],
    };
    let spec = TLieSpec::build(&raw)?;
    let jacobi = check_jacobi(&spec);
    if jacobi.status != CheckStatus::Pass {
        let w = &jacobi.witnesses[0];
        let id = |i: usize| spec.render_word(&w.inputs[i]);
        return Err(CatalogError::JacobiFail {
            x: id(0),
            y: id(1),
            z: id(2),
        });
    }
    Ok(spec)
}

/// A finite abelian group presented by its addition table (`0` = identity).
#[derive(Debug, Clone)]
pub struct ColorGroup {
    add: Vec<Vec<usize>>,
}

impl ColorGroup {
    pub fn new(add: Vec<Vec<usize>>) -> Result<Self, CatalogError> {
        let n = add.len();
        let bad = |reason: &str| CatalogError::BadGroup { reason: reason.into() };
        if n == 0 {
            return Err(bad("empty table"));
        }
        for row in &add {
            if row.len() != n || row.iter().any(|&v| v >= n) {
                return Err(bad("table is not a square over 0..n"));
            }
        }
        for a in 0..n {
            if add[0][a] != a || add[a][0] != a {
                return Err(bad("0 is not the identity"));
            }
            for b in 0..n {
                if add[a][b] != add[b][a] {
                    return Err(bad("not commutative"));
                }
                for c in 0..n {
                    if add[add[a][b]][c] != add[a][add[b][c]] {
                        return Err(bad("not associative"));
                    }
                }
            }
        }
        Ok(ColorGroup { add })
    }

    pub fn order(&self) -> usize {
        self.add.len()
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a][b]
    }

    /// The cyclic group Z_n.
    pub fn cyclic(n: usize) -> Self {
        let add = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        ColorGroup { add }
    }
}

/// Commutation factor on a [`ColorGroup`]: `ε(α,β)ε(β,α) = 1` and
/// bi-multiplicative in both arguments. Values are unit monomials.
pub fn validate_commutation_factor(
    group: &ColorGroup,
    eps: &[Vec<LaurentScalar>],
) -> Result<(), CatalogError> {
    let n = group.order();
    if eps.len() != n || eps.iter().any(|row| row.len() != n) {
        return Err(CatalogError::NotACommutationFactor {
            a: 0,
            b: 0,
            reason: format!("table must be {n}x{n}"),
        });
    }
    for (a, row) in eps.iter().enumerate() {
        for (b, v) in row.iter().enumerate() {
            if v.as_monomial().is_none() {
                return Err(CatalogError::NotACommutationFactor {
                    a,
                    b,
                    reason: "value is not a unit".into(),
                });
            }
            if !v.mul(&eps[b][a]).is_one() {
                return Err(CatalogError::NotACommutationFactor {
                    a,
                    b,
                    reason: format!(
                        "ε(a,b)·ε(b,a) = {} ≠ 1",
                        v.mul(&eps[b][a]).render(&["q".into(), "p".into()])
                    ),
                });
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if eps[group.add(a, b)][c] != eps[a][c].mul(&eps[b][c]) {
                    return Err(CatalogError::NotACommutationFactor {
                        a,
                        b,
                        reason: format!("not multiplicative in the first argument at ({a},{b};{c})"),
                    });
                }
                if eps[a][group.add(b, c)] != eps[a][b].mul(&eps[a][c]) {
                    return Err(CatalogError::NotACommutationFactor {
                        a,
                        b,
                        reason: format!("not multiplicative in the second argument at ({a};{b},{c})"),
                    });
                }
            }
        }
    }
    Ok(())
}

/// Color Lie algebra: `S(x⊗y) = ε(deg x, deg y)·y⊗x`, trivial η, zero
/// pseudobracket, bracket from the structure table (ordered pairs).
pub fn make_color(
    name: &str,
    group: &ColorGroup,
    eps: &[Vec<LaurentScalar>],
    basis: &[(String, usize)],
    table: &ClassicalTable,
) -> Result<TLieSpec, CatalogError> {
    validate_commutation_factor(group, eps)?;
    for (id, deg) in basis {
        if *deg >= group.order() {
            return Err(CatalogError::BadGroup {
                reason: format!("degree {deg} of `{id}` outside the group"),
            });
        }
    }
    let mut raw = RawTLieSpec {
        name: name.to_string(),
        variables: vec![],
        basis: basis
            .iter()
            .map(|(id, _)| RawBasisElement {
                id: id.clone(),
                grade: 1,
                display: None,
            })
            .collect(),
        ..Default::default()
    };
    for (i, (xid, xdeg)) in basis.iter().enumerate() {
        for (yid, ydeg) in basis.iter().skip(i) {
            let v = eps[*xdeg][*ydeg].clone();
            if !v.is_one() {
                raw.sym.push(RawSymEntry {
                    x: xid.clone(),
                    y: yid.clone(),
                    value: v,
                });
            }
        }
    }
    for (x, y, value) in table {
        raw.bracket.push(RawBracketEntry {
            x: x.clone(),
            y: y.clone(),
            value: value
                .iter()
                .map(|(z, c)| (z.clone(), LaurentScalar::from_rational(c.clone())))
                .collect(),
        });
    }
    let spec = TLieSpec::build(&raw)?;
    let jacobi = check_jacobi(&spec);
    if jacobi.status != CheckStatus::Pass {
        let w = &jacobi.witnesses[0];
        let id = |i: usize| spec.render_word(&w.inputs[i]);
        return Err(CatalogError::JacobiFail {
            x: id(0),
            y: id(1),
            z: id(2),
        });
    }
    Ok(spec)
}

fn e_id(i: usize, j: usize) -> String {
    if i < 10 && j < 10 {
        format!("e{i}{j}")
    } else {
        format!("e{i}_{j}")
    }
}

/// The matrix-unit pairs `(i,j)`, `1 ≤ i < j ≤ n+1`, in the declared order:
/// ascending `i+j`, ties broken by the second index.
fn sl_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=(n + 1) {
            pairs.push((i, j));
        }
    }
    pairs.sort_by_key(|&(i, j)| (i + j, j));
    pairs
}

/// Presymmetry exponent for `e_ab < e_uv`:
/// `c = -δ(v,a) + δ(v,b) + δ(u,a) - δ(u,b)`.
pub fn sl_exponent(ab: (usize, usize), uv: (usize, usize)) -> i32 {
    let d = |x: usize, y: usize| i32::from(x == y);
    -d(uv.1, ab.0) + d(uv.1, ab.1) + d(uv.0, ab.0) - d(uv.0, ab.1)
}

/// Classical bracket `[e_ij, e_kl] = δ(j,k)·e_il − δ(l,i)·e_kj`, kept only
/// when the result lands in the upper-triangular basis.
fn sl_bracket(ij: (usize, usize), kl: (usize, usize)) -> Vec<((usize, usize), i64)> {
    let mut out = Vec::new();
    if ij.1 == kl.0 && ij.0 != kl.1 {
        out.push(((ij.0, kl.1), 1));
    }
    if kl.1 == ij.0 && kl.0 != ij.1 {
        out.push(((kl.0, ij.1), -1));
    }
    out.retain(|&((a, b), _)| a < b);
    out
}

fn sl_raw(n: usize, minus: bool, with_pseudo: bool, name: &str) -> RawTLieSpec {
    let pairs = sl_pairs(n);
    let id = |&(i, j): &(usize, usize)| if minus { e_id(j, i) } else { e_id(i, j) };
    let mut raw = RawTLieSpec {
        name: name.to_string(),
        variables: vec!["q".into()],
        ..Default::default()
    };
    for p in &pairs {
        raw.basis.push(RawBasisElement {
            id: id(p),
            grade: (p.0 * (p.1 - p.0)) as u32,
            display: None,
        });
    }
    for (a, x) in pairs.iter().enumerate() {
        for y in pairs.iter().skip(a + 1) {
            let c = sl_exponent(*x, *y);
            if c != 0 {
                raw.sym.push(RawSymEntry {
                    x: id(x),
                    y: id(y),
                    value: q().pow(c).expect("q is a unit"),
                });
            }
            let br = sl_bracket(*x, *y);
            debug_assert!(br.iter().all(|&(_, c)| c == 1), "ordered pairs only gain the δ(j,k) term");
            if !br.is_empty() {
                raw.bracket.push(RawBracketEntry {
                    x: id(x),
                    y: id(y),
                    value: br
                        .iter()
                        .map(|&(z, c)| (id(&z), LaurentScalar::from_rational(rat(c))))
                        .collect(),
                });
            }
            if with_pseudo {
                // ⟨e_ij, e_uv⟩ = (q − q⁻¹)·e_iv⊗e_uj when i < u < j and u < j < v
                let ((i, j), (u, v)) = (*x, *y);
                if i < u && u < j && j < v {
                    raw.pseudo.push(RawPseudoEntry {
                        x: id(x),
                        y: id(y),
                        value: vec![(
                            (id(&(i, v)), id(&(u, j))),
                            q().sub(&q().pow(-1).expect("unit")),
                        )],
                    });
                }
            }
        }
    }
    raw
}

/// `(sl_{n+1}^+)_q`: the q-deformation of strictly upper-triangular
/// matrices, with `n(n+1)/2` basis elements `e_ij`, `1 ≤ i < j ≤ n+1`.
pub fn make_sl_plus_q(n: usize) -> TLieSpec {
    TLieSpec::build(&sl_raw(n, false, true, &format!("sl_plus_q:{n}")))
        .expect("catalog construction is valid")
}

/// The transpose (lower-triangular) mirror of [`make_sl_plus_q`]: basis
/// `e_ji` ordered as its transpose, identical structure coefficients.
pub fn make_sl_minus_q(n: usize) -> TLieSpec {
    TLieSpec::build(&sl_raw(n, true, true, &format!("sl_minus_q:{n}")))
        .expect("catalog construction is valid")
}

/// `(sl_4^+)_q` with the pseudobracket erased: still a basic T-Lie algebra,
/// but its enveloping algebra has no PBW basis.
pub fn make_tilde_sl4() -> TLieSpec {
    TLieSpec::build(&sl_raw(3, false, false, "tilde_sl4"))
        .expect("catalog construction is valid")
}

fn z_id(i: usize, l: usize) -> String {
    format!("Z{i}_{l}")
}

/// The two-parameter family on generators `Z_i^l` (`1 ≤ i ≤ rows`,
/// `1 ≤ l ≤ cols`): zero bracket, the four-case presymmetry over `p`, `q`
/// and signs `ε`, and the single-case pseudobracket `ε(p − q⁻¹)`.
/// `eps` is a symmetric ±1 matrix with unit diagonal of size
/// `max(rows, cols)`.
pub fn make_lpq(rows: usize, cols: usize, eps: &[Vec<i64>]) -> Result<TLieSpec, CatalogError> {
    let alpha = rows.max(cols);
    if eps.len() < alpha || eps.iter().any(|r| r.len() < alpha) {
        return Err(CatalogError::BadEps {
            reason: format!("need at least a {alpha}x{alpha} sign matrix"),
        });
    }
    for a in 0..alpha {
        for b in 0..alpha {
            if eps[a][b] != 1 && eps[a][b] != -1 {
                return Err(CatalogError::BadEps {
                    reason: format!("entry ({a},{b}) is {} (must be ±1)", eps[a][b]),
                });
            }
            if eps[a][b] != eps[b][a] {
                return Err(CatalogError::BadEps {
                    reason: format!("not symmetric at ({a},{b})"),
                });
            }
            if a == b && eps[a][b] != 1 {
                return Err(CatalogError::BadEps {
                    reason: format!("diagonal entry ({a},{a}) must be 1"),
                });
            }
        }
    }
    // 1-based lookup
    let sign = |a: usize, b: usize| rat(eps[a - 1][b - 1]);
    let p = || LaurentScalar::var(1);
    let mut raw = RawTLieSpec {
        name: format!("Lpq:{rows}x{cols}"),
        variables: vec!["q".into(), "p".into()],
        ..Default::default()
    };
    // ascending order: subscript-major, then superscript
    let mut elems = Vec::new();
    for i in 1..=rows {
        for l in 1..=cols {
            elems.push((i, l));
            raw.basis.push(RawBasisElement {
                id: z_id(i, l),
                grade: (i as u64 * 3u64.pow(l as u32 - 1)) as u32,
                display: Some(format!("Z_{i}^{l}")),
            });
        }
    }
    // The structure tables are stated on disordered pairs Z_i^l > Z_u^v;
    // stored ordered-pair values are the antisymmetry-derived inverses.
    let paper_q = |(i, l): (usize, usize), (u, v): (usize, usize)| -> LaurentScalar {
        if i == u && l > v {
            LaurentScalar::from_rational(sign(v, l)).mul(&p())
        } else if l == v && i > u {
            LaurentScalar::from_rational(sign(u, i)).mul(&q())
        } else if i > u && v > l {
            LaurentScalar::from_rational(sign(i, u) * sign(v, l))
                .mul(&p().pow(-1).expect("unit"))
                .mul(&q())
        } else {
            debug_assert!(i > u && l > v);
            LaurentScalar::from_rational(sign(v, l) * sign(u, i))
        }
    };
    for (a, lo) in elems.iter().enumerate() {
        for hi in elems.iter().skip(a + 1) {
            let pq = paper_q(*hi, *lo);
            let stored = pq.invert_unit().expect("unit");
            if !stored.is_one() {
                raw.sym.push(RawSymEntry {
                    x: z_id(lo.0, lo.1),
                    y: z_id(hi.0, hi.1),
                    value: stored,
                });
            }
            let ((i, l), (u, v)) = (*hi, *lo);
            if i > u && l > v {
                // ⟨Z_i^l, Z_u^v⟩ = ε(v,l)·(p − q⁻¹)·Z_i^v ⊗ Z_u^l, stored
                // as the ordered-pair value -paper_q⁻¹·(that)
                let value = LaurentScalar::from_rational(sign(v, l))
                    .mul(&p().sub(&q().pow(-1).expect("unit")));
                let stored_value = pq.invert_unit().expect("unit").neg().mul(&value);
                raw.pseudo.push(RawPseudoEntry {
                    x: z_id(lo.0, lo.1),
                    y: z_id(hi.0, hi.1),
                    value: vec![((z_id(i, v), z_id(u, l)), stored_value)],
                });
            }
        }
    }
    Ok(TLieSpec::build(&raw)?)
}

/// All-plus-one sign matrix for [`make_lpq`].
pub fn unit_eps(size: usize) -> Vec<Vec<i64>> {
    vec![vec![1; size]; size]
}

/// Z₂ superalgebra demo: an odd generator `x` with `[x,x] = y`, `y` even
/// and central. Exercises the `q_{x,x} = -1` diagonal path.
pub fn make_super_demo() -> TLieSpec {
    let group = ColorGroup::cyclic(2);
    let eps = vec![
        vec![one(), one()],
        vec![one(), one().neg()],
    ];
    make_color(
        "super_demo",
        &group,
        &eps,
        &[("x".into(), 1), ("y".into(), 0)],
        &vec![("x".into(), "x".into(), vec![("y".into(), rat(1))])],
    )
    .expect("super demo is a valid color algebra")
}

/// Classical `sl_n^+`: strictly upper-triangular `n×n` matrices with the
/// matrix-unit bracket, trivial grading.
pub fn make_classical_sl(n: usize) -> TLieSpec {
    let pairs = sl_pairs(n.saturating_sub(1));
    let basis: Vec<String> = pairs.iter().map(|&(i, j)| e_id(i, j)).collect();
    let mut table = ClassicalTable::new();
    for (a, x) in pairs.iter().enumerate() {
        for y in pairs.iter().skip(a + 1) {
            let br = sl_bracket(*x, *y);
            if !br.is_empty() {
                table.push((
                    e_id(x.0, x.1),
                    e_id(y.0, y.1),
                    br.iter().map(|&(z, c)| (e_id(z.0, z.1), rat(c))).collect(),
                ));
            }
        }
    }
    make_classical(&format!("classical:sl{n}"), &basis, &table)
        .expect("classical sl_n is a Lie algebra")
}

/// Parsed catalog key.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalogKey {
    Classical { n: usize },
    SlPlusQ { n: usize },
    SlMinusQ { n: usize },
    TildeSl4,
    Lpq { rows: usize, cols: usize },
    SuperDemo,
}

impl CatalogKey {
    pub fn parse(key: &str) -> Result<CatalogKey, CatalogError> {
        let unknown = || CatalogError::UnknownKey { key: key.into() };
        let (family, params) = match key.split_once(':') {
            Some((f, p)) => (f, Some(p)),
            None => (key, None),
        };
        match (family.to_ascii_lowercase().as_str(), params) {
            ("tilde_sl4", None) => Ok(CatalogKey::TildeSl4),
            ("super_demo", None) => Ok(CatalogKey::SuperDemo),
            ("classical", Some(p)) => {
                let n = p
                    .strip_prefix("sl")
                    .and_then(|s| s.parse().ok())
                    .filter(|&n| (2..=9).contains(&n))
                    .ok_or_else(unknown)?;
                Ok(CatalogKey::Classical { n })
            }
            ("sl_plus_q", Some(p)) => {
                let n = p.parse().ok().filter(|&n| (1..=8).contains(&n)).ok_or_else(unknown)?;
                Ok(CatalogKey::SlPlusQ { n })
            }
            ("sl_minus_q", Some(p)) => {
                let n = p.parse().ok().filter(|&n| (1..=8).contains(&n)).ok_or_else(unknown)?;
                Ok(CatalogKey::SlMinusQ { n })
            }
            ("lpq", Some(p)) => {
                let (r, c) = p.split_once('x').ok_or_else(unknown)?;
                let rows = r.parse().ok().filter(|&n| (1..=6).contains(&n)).ok_or_else(unknown)?;
                let cols = c.parse().ok().filter(|&n| (1..=6).contains(&n)).ok_or_else(unknown)?;
                Ok(CatalogKey::Lpq { rows, cols })
            }
            _ => Err(unknown()),
        }
    }

    pub fn build(&self) -> Result<TLieSpec, CatalogError> {
        match *self {
            CatalogKey::Classical { n } => Ok(make_classical_sl(n)),
            CatalogKey::SlPlusQ { n } => Ok(make_sl_plus_q(n)),
            CatalogKey::SlMinusQ { n } => Ok(make_sl_minus_q(n)),
            CatalogKey::TildeSl4 => Ok(make_tilde_sl4()),
            CatalogKey::Lpq { rows, cols } => make_lpq(rows, cols, &unit_eps(rows.max(cols))),
            CatalogKey::SuperDemo => Ok(make_super_demo()),
        }
    }
}

/// The keys listed by `catalog list`; every entry builds successfully.
pub fn builtin_keys() -> Vec<String> {
    let mut keys = vec!["classical:sl3".to_string(), "classical:sl4".to_string()];
    for n in 2..=5 {
        keys.push(format!("sl_plus_q:{n}"));
    }
    for n in 2..=4 {
        keys.push(format!("sl_minus_q:{n}"));
    }
    keys.push("tilde_sl4".into());
    keys.push("Lpq:2x2".into());
    keys.push("Lpq:3x3".into());
    keys.push("super_demo".into());
    keys
}
