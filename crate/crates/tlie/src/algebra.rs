//! Basic T-Lie algebras: an ordered basis with four structure maps.
//!
//! A [`TLieSpec`] stores the presymmetry coefficients `q_{x,y}`, the bracket
//! `[x,y]` and the pseudobracket `⟨x,y⟩` for ordered pairs `x ≤ y` only.
//! Values on disordered pairs are always derived from the antisymmetry
//! axioms, which therefore hold by construction:
//!
//! * `q_{y,x} = q_{x,y}^{-1}`        (forced by `S² = Id`)
//! * `⟨y,x⟩ = -q_{y,x}·⟨x,y⟩`        (forced by `⟨,⟩∘S = -⟨,⟩`)
//! * `[y,x] = -q_{y,x}·[x,y]`        (forced by `[,]∘T = -[,]` with `[,]∘⟨,⟩ = 0`)
//!
//! The remaining axioms (multiplicativity, stability, Jacobi, ...) are
//! genuine content and are decided by the checks in [`crate::axioms`].

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use thiserror::Error;

use crate::scalar::LaurentScalar;

/// Index of a basis element inside one spec; the declared total order on the
/// basis is exactly the order of these indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisId(pub u32);

impl BasisId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// One basis element: identifier, strict-grading value, display label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisElement {
    pub id: String,
    pub grade: u32,
    pub display: String,
}

/// Finite word over the basis (an element of the tensor-algebra monomial set).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(pub Vec<BasisId>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn single(x: BasisId) -> Self {
        Word(vec![x])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[BasisId] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

/// Finite sum of scalar-weighted words; canonical (no zero coefficients).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TensorPoly {
    terms: BTreeMap<Word, LaurentScalar>,
}

impl TensorPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The empty word with coefficient 1 (the unit of the tensor algebra).
    pub fn one() -> Self {
        Self::from_word(Word::empty())
    }

    pub fn from_word(w: Word) -> Self {
        let mut t = Self::zero();
        t.add_term(w, LaurentScalar::one());
        t
    }

    pub fn from_term(w: Word, c: LaurentScalar) -> Self {
        let mut t = Self::zero();
        t.add_term(w, c);
        t
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &LaurentScalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &Word) -> LaurentScalar {
        self.terms.get(w).cloned().unwrap_or_else(LaurentScalar::zero)
    }

    pub fn add_term(&mut self, w: Word, c: LaurentScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().add(&c);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w.clone(), c.neg());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero();
        for (w, c) in self.terms() {
            out.add_term(w.clone(), c.neg());
        }
        out
    }

    pub fn scale(&self, s: &LaurentScalar) -> Self {
        let mut out = Self::zero();
        for (w, c) in self.terms() {
            out.add_term(w.clone(), c.mul(s));
        }
        out
    }

    /// Bilinear concatenation product of the tensor algebra.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (wa, ca) in self.terms() {
            for (wb, cb) in other.terms() {
                out.add_term(wa.concat(wb), ca.mul(cb));
            }
        }
        out
    }

    /// True when every word has the same given length.
    pub fn is_homogeneous_of_degree(&self, d: usize) -> bool {
        self.terms.keys().all(|w| w.len() == d)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BuildError {
    #[error("duplicate basis id `{id}`")]
    DuplicateId { id: String },
    #[error("grade of `{id}` must be >= 1")]
    BadGrade { id: String },
    #[error("sym coefficient for ({x}, {y}) is not a unit monomial: {value}")]
    NonUnitSymCoefficient { x: String, y: String, value: String },
    #[error("diagonal sym coefficient for {x} does not square to 1: {value}")]
    BadDiagonal { x: String, value: String },
    #[error("{x} has q_{{x,x}} = 1 but a nonzero diagonal {table}")]
    IllegalDiagonalBracket { x: String, table: &'static str },
    #[error("unknown id `{id}` in {table} table")]
    UnknownIdInTable { id: String, table: &'static str },
    #[error("{table} entry ({x}, {y}) is not given for the ordered pair (declared order has {y} < {x})")]
    DisorderedEntry { x: String, y: String, table: &'static str },
    #[error("duplicate {table} entry for ({x}, {y})")]
    DuplicateEntry { x: String, y: String, table: &'static str },
    #[error("bracket value for ({x}, {y}) must be a degree-1 tensor")]
    BadBracketDegree { x: String, y: String },
    #[error("pseudobracket value for ({x}, {y}) must be a pure degree-2 tensor")]
    BadPseudoDegree { x: String, y: String },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ApplyError {
    #[error("word of length {len} too short for structure map at position {position}")]
    WordTooShort { len: usize, position: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RestrictError {
    #[error("subset not closed: {table}({x}, {y}) involves `{escaped}` outside the subset")]
    NotClosed {
        x: String,
        y: String,
        escaped: String,
        table: &'static str,
    },
    #[error("unknown id `{id}` in subset")]
    UnknownId { id: String },
}

/// Raw, unvalidated description of a basic T-Lie algebra. Table values refer
/// to basis elements by id; ordered-pair keys `x ≤ y` are required. This is
/// what the catalog constructors emit and what the spec-file reader parses.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct RawTLieSpec {
    pub name: String,
    pub variables: Vec<String>,
    pub basis: Vec<RawBasisElement>,
    pub sym: Vec<RawSymEntry>,
    pub bracket: Vec<RawBracketEntry>,
    pub pseudo: Vec<RawPseudoEntry>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RawBasisElement {
    pub id: String,
    pub grade: u32,
    pub display: Option<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RawSymEntry {
    pub x: String,
    pub y: String,
    pub value: LaurentScalar,
}

/// `[x,y] = Σ c_i · z_i`
#[derive(Debug, Clone, PartialEq)]
pub struct RawBracketEntry {
    pub x: String,
    pub y: String,
    pub value: Vec<(String, LaurentScalar)>,
}

/// `⟨x,y⟩ = Σ c_i · a_i ⊗ b_i`
#[derive(Debug, Clone, PartialEq)]
pub struct RawPseudoEntry {
    pub x: String,
    pub y: String,
    pub value: Vec<((String, String), LaurentScalar)>,
}

/// Validated, immutable basic T-Lie algebra.
#[derive(Debug, Clone)]
pub struct TLieSpec {
    name: String,
    variables: Vec<String>,
    basis: Vec<BasisElement>,
    index: HashMap<String, BasisId>,
    /// Packed upper triangle (including diagonal); `q_{x,y}` for `x ≤ y`.
    sym: Vec<LaurentScalar>,
    bracket: BTreeMap<(BasisId, BasisId), TensorPoly>,
    pseudo: BTreeMap<(BasisId, BasisId), TensorPoly>,
}

impl TLieSpec {
    /// Validate a raw description and build the spec.
    pub fn build(raw: &RawTLieSpec) -> Result<TLieSpec, BuildError> {
        let mut index = HashMap::new();
        let mut basis = Vec::with_capacity(raw.basis.len());
        for (i, b) in raw.basis.iter().enumerate() {
            if index.insert(b.id.clone(), BasisId(i as u32)).is_some() {
                return Err(BuildError::DuplicateId { id: b.id.clone() });
            }
            if b.grade == 0 {
                return Err(BuildError::BadGrade { id: b.id.clone() });
            }
            basis.push(BasisElement {
                id: b.id.clone(),
                grade: b.grade,
                display: b.display.clone().unwrap_or_else(|| b.id.clone()),
            });
        }
        let n = basis.len();
        let resolve = |id: &str, table: &'static str| {
            index.get(id).copied().ok_or(BuildError::UnknownIdInTable {
                id: id.to_string(),
                table,
            })
        };

        // Sym table, default 1 for missing entries (the classical swap).
        let mut sym = vec![LaurentScalar::one(); n * (n + 1) / 2];
        let mut seen = vec![false; sym.len()];
        for e in &raw.sym {
            let x = resolve(&e.x, "sym")?;
            let y = resolve(&e.y, "sym")?;
            if x > y {
                return Err(BuildError::DisorderedEntry {
                    x: e.x.clone(),
                    y: e.y.clone(),
                    table: "sym",
                });
            }
            let slot = pair_slot(n, x, y);
            if seen[slot] {
                return Err(BuildError::DuplicateEntry {
                    x: e.x.clone(),
                    y: e.y.clone(),
                    table: "sym",
                });
            }
            seen[slot] = true;
            if e.value.as_monomial().is_none() {
                return Err(BuildError::NonUnitSymCoefficient {
                    x: e.x.clone(),
                    y: e.y.clone(),
                    value: e.value.render(&raw.variables),
                });
            }
            sym[slot] = e.value.clone();
        }
        for (i, b) in basis.iter().enumerate() {
            let x = BasisId(i as u32);
            let d = &sym[pair_slot(n, x, x)];
            if !d.mul(d).is_one() {
                return Err(BuildError::BadDiagonal {
                    x: b.id.clone(),
                    value: d.render(&raw.variables),
                });
            }
        }

        let mut bracket = BTreeMap::new();
        for e in &raw.bracket {
            let x = resolve(&e.x, "bracket")?;
            let y = resolve(&e.y, "bracket")?;
            if x > y {
                return Err(BuildError::DisorderedEntry {
                    x: e.x.clone(),
                    y: e.y.clone(),
                    table: "bracket",
                });
            }
            let mut value = TensorPoly::zero();
            for (z, c) in &e.value {
                value.add_term(Word::single(resolve(z, "bracket")?), c.clone());
            }
            if !value.is_homogeneous_of_degree(1) {
                return Err(BuildError::BadBracketDegree {
                    x: e.x.clone(),
                    y: e.y.clone(),
                });
            }
            if value.is_zero() {
                continue;
            }
            if bracket.insert((x, y), value).is_some() {
                return Err(BuildError::DuplicateEntry {
                    x: e.x.clone(),
                    y: e.y.clone(),
                    table: "bracket",
                });
            }
        }

        let mut pseudo = BTreeMap::new();
        for e in &raw.pseudo {
            let x = resolve(&e.x, "pseudo")?;
            let y = resolve(&e.y, "pseudo")?;
            if x > y {
                return Err(BuildError::DisorderedEntry {
                    x: e.x.clone(),
                    y: e.y.clone(),
                    table: "pseudo",
                });
            }
            let mut value = TensorPoly::zero();
            for ((a, b), c) in &e.value {
                let w = Word(vec![resolve(a, "pseudo")?, resolve(b, "pseudo")?]);
                value.add_term(w, c.clone());
            }
            if !value.is_homogeneous_of_degree(2) {
                return Err(BuildError::BadPseudoDegree {
                    x: e.x.clone(),
                    y: e.y.clone(),
                });
            }
            if value.is_zero() {
                continue;
            }
            if pseudo.insert((x, y), value).is_some() {
                return Err(BuildError::DuplicateEntry {
                    x: e.x.clone(),
                    y: e.y.clone(),
                    table: "pseudo",
                });
            }
        }

        // In characteristic 0 antisymmetry forces 2⟨x,x⟩ = 0 and 2[x,x] = 0
        // when S fixes x⊗x, so nonzero diagonals require q_{x,x} = -1.
        for (i, b) in basis.iter().enumerate() {
            let x = BasisId(i as u32);
            if sym[pair_slot(n, x, x)].is_one() {
                if bracket.contains_key(&(x, x)) {
                    return Err(BuildError::IllegalDiagonalBracket {
                        x: b.id.clone(),
                        table: "bracket",
                    });
                }
                if pseudo.contains_key(&(x, x)) {
                    return Err(BuildError::IllegalDiagonalBracket {
                        x: b.id.clone(),
                        table: "pseudo",
                    });
                }
            }
        }

        Ok(TLieSpec {
            name: raw.name.clone(),
            variables: raw.variables.clone(),
            basis,
            index,
            sym,
            bracket,
            pseudo,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn ids(&self) -> impl Iterator<Item = BasisId> + '_ {
        (0..self.basis.len() as u32).map(BasisId)
    }

    pub fn element(&self, x: BasisId) -> &BasisElement {
        &self.basis[x.index()]
    }

    pub fn id_of(&self, name: &str) -> Option<BasisId> {
        self.index.get(name).copied()
    }

    pub fn grade(&self, x: BasisId) -> u32 {
        self.basis[x.index()].grade
    }

    /// Total grade of a word (the PBW `δ`-measure of a single monomial).
    pub fn word_grade(&self, w: &Word) -> u64 {
        w.letters().iter().map(|&x| self.grade(x) as u64).sum()
    }

    /// `q_{x,y}` for any pair; disordered pairs use the inverse of the
    /// stored coefficient.
    pub fn sym_coeff(&self, x: BasisId, y: BasisId) -> LaurentScalar {
        let n = self.basis.len();
        if x <= y {
            self.sym[pair_slot(n, x, y)].clone()
        } else {
            self.sym[pair_slot(n, y, x)]
                .invert_unit()
                .expect("sym entries validated as units")
        }
    }

    /// `[x,y]` for any pair; disordered pairs use `-q_{x,y}·[y,x]`.
    pub fn bracket_of(&self, x: BasisId, y: BasisId) -> TensorPoly {
        if x <= y {
            self.bracket.get(&(x, y)).cloned().unwrap_or_default()
        } else {
            match self.bracket.get(&(y, x)) {
                Some(v) => v.scale(&self.sym_coeff(x, y).neg()),
                None => TensorPoly::zero(),
            }
        }
    }

    /// `⟨x,y⟩` for any pair; disordered pairs use `-q_{x,y}·⟨y,x⟩`.
    pub fn pseudo_of(&self, x: BasisId, y: BasisId) -> TensorPoly {
        if x <= y {
            self.pseudo.get(&(x, y)).cloned().unwrap_or_default()
        } else {
            match self.pseudo.get(&(y, x)) {
                Some(v) => v.scale(&self.sym_coeff(x, y).neg()),
                None => TensorPoly::zero(),
            }
        }
    }

    /// `T(x⊗y) = S(x⊗y) + ⟨x,y⟩` as a degree-2 tensor.
    pub fn t_of(&self, x: BasisId, y: BasisId) -> TensorPoly {
        let mut out = self.pseudo_of(x, y);
        out.add_term(Word(vec![y, x]), self.sym_coeff(x, y));
        out
    }

    /// Stored ordered-pair bracket entries (x ≤ y with nonzero value).
    pub fn bracket_entries(&self) -> impl Iterator<Item = (&(BasisId, BasisId), &TensorPoly)> {
        self.bracket.iter()
    }

    /// Stored ordered-pair pseudobracket entries.
    pub fn pseudo_entries(&self) -> impl Iterator<Item = (&(BasisId, BasisId), &TensorPoly)> {
        self.pseudo.iter()
    }

    fn check_position(&self, t: &TensorPoly, position: usize, span: usize) -> Result<(), ApplyError> {
        for (w, _) in t.terms() {
            if w.len() < position + span {
                return Err(ApplyError::WordTooShort {
                    len: w.len(),
                    position,
                });
            }
        }
        Ok(())
    }

    /// Apply a bilinear pair map to tensor slots `(position, position+1)` of
    /// every word, linearly. The map sends each letter pair to a TensorPoly
    /// that replaces the two slots.
    fn apply_pair_map(
        &self,
        t: &TensorPoly,
        position: usize,
        f: impl Fn(BasisId, BasisId) -> TensorPoly,
    ) -> Result<TensorPoly, ApplyError> {
        self.check_position(t, position, 2)?;
        let mut out = TensorPoly::zero();
        for (w, c) in t.terms() {
            let letters = w.letters();
            let (x, y) = (letters[position], letters[position + 1]);
            let prefix = Word(letters[..position].to_vec());
            let suffix = Word(letters[position + 2..].to_vec());
            for (mid, mc) in f(x, y).terms() {
                out.add_term(
                    prefix.concat(mid).concat(&suffix),
                    c.mul(mc),
                );
            }
        }
        Ok(out)
    }

    /// Presymmetry on slots `(position, position+1)`.
    pub fn apply_s(&self, t: &TensorPoly, position: usize) -> Result<TensorPoly, ApplyError> {
        self.apply_pair_map(t, position, |x, y| {
            TensorPoly::from_term(Word(vec![y, x]), self.sym_coeff(x, y))
        })
    }

    /// Pseudobracket on slots `(position, position+1)`; words keep length.
    pub fn apply_pseudobracket(
        &self,
        t: &TensorPoly,
        position: usize,
    ) -> Result<TensorPoly, ApplyError> {
        self.apply_pair_map(t, position, |x, y| self.pseudo_of(x, y))
    }

    /// Bracket on slots `(position, position+1)`; contracts two slots to one.
    pub fn apply_bracket(&self, t: &TensorPoly, position: usize) -> Result<TensorPoly, ApplyError> {
        self.apply_pair_map(t, position, |x, y| self.bracket_of(x, y))
    }

    /// Symmetry `T = S + ⟨,⟩` on slots `(position, position+1)`.
    pub fn apply_t(&self, t: &TensorPoly, position: usize) -> Result<TensorPoly, ApplyError> {
        self.apply_pair_map(t, position, |x, y| self.t_of(x, y))
    }

    /// Sub-algebra on a subset of the basis, inheriting order, grades and
    /// tables. Fails when a bracket or pseudobracket output leaves the subset.
    pub fn restrict(&self, subset: &[String], name: &str) -> Result<TLieSpec, RestrictError> {
        let mut keep = vec![false; self.basis.len()];
        for id in subset {
            let x = self
                .id_of(id)
                .ok_or_else(|| RestrictError::UnknownId { id: id.clone() })?;
            keep[x.index()] = true;
        }
        let contained = |value: &TensorPoly| -> Option<BasisId> {
            for (w, _) in value.terms() {
                for &z in w.letters() {
                    if !keep[z.index()] {
                        return Some(z);
                    }
                }
            }
            None
        };
        for (&(x, y), v) in &self.bracket {
            if keep[x.index()] && keep[y.index()] {
                if let Some(z) = contained(v) {
                    return Err(RestrictError::NotClosed {
                        x: self.element(x).id.clone(),
                        y: self.element(y).id.clone(),
                        escaped: self.element(z).id.clone(),
                        table: "bracket",
                    });
                }
            }
        }
        for (&(x, y), v) in &self.pseudo {
            if keep[x.index()] && keep[y.index()] {
                if let Some(z) = contained(v) {
                    return Err(RestrictError::NotClosed {
                        x: self.element(x).id.clone(),
                        y: self.element(y).id.clone(),
                        escaped: self.element(z).id.clone(),
                        table: "pseudo",
                    });
                }
            }
        }
        let mut raw = self.to_raw();
        raw.name = name.to_string();
        raw.basis.retain(|b| keep[self.id_of(&b.id).unwrap().index()]);
        let kept = |id: &str| keep[self.id_of(id).unwrap().index()];
        raw.sym.retain(|e| kept(&e.x) && kept(&e.y));
        raw.bracket.retain(|e| kept(&e.x) && kept(&e.y));
        raw.pseudo.retain(|e| kept(&e.x) && kept(&e.y));
        Ok(TLieSpec::build(&raw).expect("restriction of a valid spec stays valid"))
    }

    /// Raw description reproducing this spec (1-valued sym entries omitted).
    pub fn to_raw(&self) -> RawTLieSpec {
        let id = |x: BasisId| self.element(x).id.clone();
        let mut raw = RawTLieSpec {
            name: self.name.clone(),
            variables: self.variables.clone(),
            ..Default::default()
        };
        for b in &self.basis {
            raw.basis.push(RawBasisElement {
                id: b.id.clone(),
                grade: b.grade,
                display: if b.display == b.id {
                    None
                } else {
                    Some(b.display.clone())
                },
            });
        }
        let n = self.basis.len();
        for i in 0..n {
            for j in i..n {
                let (x, y) = (BasisId(i as u32), BasisId(j as u32));
                let v = &self.sym[pair_slot(n, x, y)];
                if !v.is_one() {
                    raw.sym.push(RawSymEntry {
                        x: id(x),
                        y: id(y),
                        value: v.clone(),
                    });
                }
            }
        }
        for (&(x, y), v) in &self.bracket {
            raw.bracket.push(RawBracketEntry {
                x: id(x),
                y: id(y),
                value: v
                    .terms()
                    .map(|(w, c)| (id(w.letters()[0]), c.clone()))
                    .collect(),
            });
        }
        for (&(x, y), v) in &self.pseudo {
            raw.pseudo.push(RawPseudoEntry {
                x: id(x),
                y: id(y),
                value: v
                    .terms()
                    .map(|(w, c)| ((id(w.letters()[0]), id(w.letters()[1])), c.clone()))
                    .collect(),
            });
        }
        raw
    }

    /// Render a word as `id1.id2.id3`; the empty word renders as `1`.
    pub fn render_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.letters()
            .iter()
            .map(|&x| self.element(x).id.clone())
            .collect::<Vec<_>>()
            .join(".")
    }

    /// Render a tensor polynomial as a sorted term list, in the syntax the
    /// expression parser accepts.
    pub fn render_poly(&self, t: &TensorPoly) -> String {
        if t.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (w, c)) in t.terms().enumerate() {
            // single monomials carry their sign into the join; sums are
            // parenthesized and joined positively
            let (neg, body) = if c.term_count() == 1 {
                let r = c.render(&self.variables);
                match r.strip_prefix('-') {
                    Some(rest) => (true, rest.to_string()),
                    None => (false, r),
                }
            } else {
                (false, format!("({})", c.render(&self.variables)))
            };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if w.is_empty() {
                out.push_str(&body);
            } else if body == "1" {
                out.push_str(&self.render_word(w));
            } else {
                out.push_str(&format!("{body} * {}", self.render_word(w)));
            }
        }
        out
    }
}

impl fmt::Display for TLieSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (dim {})", self.name, self.basis.len())
    }
}

fn pair_slot(n: usize, x: BasisId, y: BasisId) -> usize {
    let (i, j) = (x.index(), y.index());
    debug_assert!(i <= j && j < n);
    i * n - i * (i + 1) / 2 + j
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;
    use num::BigInt;

    fn q() -> LaurentScalar {
        LaurentScalar::var(0)
    }

    /// Hand-rolled (sl_3^+)_q: e12 < e13 < e23 with [e12,e23] = e13.
    pub(crate) fn sl3q_raw() -> RawTLieSpec {
        RawTLieSpec {
            name: "sl3q".into(),
            variables: vec!["q".into()],
            basis: vec![
                RawBasisElement { id: "e12".into(), grade: 1, display: None },
                RawBasisElement { id: "e13".into(), grade: 2, display: None },
                RawBasisElement { id: "e23".into(), grade: 2, display: None },
            ],
            sym: vec![
                RawSymEntry { x: "e12".into(), y: "e13".into(), value: q() },
                RawSymEntry { x: "e12".into(), y: "e23".into(), value: q().pow(-1).unwrap() },
                RawSymEntry { x: "e13".into(), y: "e23".into(), value: q() },
            ],
            bracket: vec![RawBracketEntry {
                x: "e12".into(),
                y: "e23".into(),
                value: vec![("e13".into(), LaurentScalar::one())],
            }],
            pseudo: vec![],
        }
    }

    #[test]
    fn builds_and_orders() {
        let spec = TLieSpec::build(&sl3q_raw()).unwrap();
        assert_eq!(spec.dim(), 3);
        let e12 = spec.id_of("e12").unwrap();
        let e13 = spec.id_of("e13").unwrap();
        let e23 = spec.id_of("e23").unwrap();
        assert!(e12 < e13 && e13 < e23);
        assert_eq!(spec.grade(e13), 2);
    }

    #[test]
    fn empty_basis_is_valid() {
        let raw = RawTLieSpec { name: "empty".into(), ..Default::default() };
        let spec = TLieSpec::build(&raw).unwrap();
        assert_eq!(spec.dim(), 0);
    }

    #[test]
    fn rejects_bad_diagonal() {
        let mut raw = sl3q_raw();
        raw.sym.push(RawSymEntry { x: "e12".into(), y: "e12".into(), value: q() });
        assert!(matches!(
            TLieSpec::build(&raw),
            Err(BuildError::BadDiagonal { .. })
        ));
    }

    #[test]
    fn rejects_duplicate_and_unknown_ids() {
        let mut raw = sl3q_raw();
        raw.basis.push(RawBasisElement { id: "e12".into(), grade: 1, display: None });
        assert!(matches!(TLieSpec::build(&raw), Err(BuildError::DuplicateId { .. })));

        let mut raw = sl3q_raw();
        raw.bracket[0].value = vec![("e99".into(), LaurentScalar::one())];
        assert!(matches!(TLieSpec::build(&raw), Err(BuildError::UnknownIdInTable { .. })));
    }

    #[test]
    fn rejects_non_unit_sym() {
        let mut raw = sl3q_raw();
        raw.sym[0].value = q().add(&LaurentScalar::one());
        assert!(matches!(
            TLieSpec::build(&raw),
            Err(BuildError::NonUnitSymCoefficient { .. })
        ));
    }

    #[test]
    fn rejects_diagonal_bracket_with_trivial_sym() {
        let mut raw = sl3q_raw();
        raw.bracket.push(RawBracketEntry {
            x: "e12".into(),
            y: "e12".into(),
            value: vec![("e13".into(), LaurentScalar::one())],
        });
        assert!(matches!(
            TLieSpec::build(&raw),
            Err(BuildError::IllegalDiagonalBracket { .. })
        ));
    }

    #[test]
    fn derived_tables_satisfy_antisymmetry_by_construction() {
        let spec = TLieSpec::build(&sl3q_raw()).unwrap();
        let e12 = spec.id_of("e12").unwrap();
        let e23 = spec.id_of("e23").unwrap();
        // q_{e23,e12} = q_{e12,e23}^{-1} = q
        assert_eq!(spec.sym_coeff(e23, e12), q());
        // [e23,e12] = -q_{e23,e12}·[e12,e23] = -q·e13
        let got = spec.bracket_of(e23, e12);
        let e13 = spec.id_of("e13").unwrap();
        let expect = TensorPoly::from_term(Word::single(e13), q().neg());
        assert_eq!(got, expect);
        // S(S(x⊗y)) = x⊗y for all pairs
        for x in spec.ids() {
            for y in spec.ids() {
                let t = TensorPoly::from_word(Word(vec![x, y]));
                let twice = spec.apply_s(&spec.apply_s(&t, 0).unwrap(), 0).unwrap();
                assert_eq!(twice, t);
            }
        }
    }

    #[test]
    fn apply_bracket_contracts() {
        let spec = TLieSpec::build(&sl3q_raw()).unwrap();
        let e12 = spec.id_of("e12").unwrap();
        let e23 = spec.id_of("e23").unwrap();
        let e13 = spec.id_of("e13").unwrap();
        let t = TensorPoly::from_word(Word(vec![e12, e23]));
        assert_eq!(
            spec.apply_bracket(&t, 0).unwrap(),
            TensorPoly::from_word(Word::single(e13))
        );
        // [e12, e13] = 0 (no table entry)
        let t = TensorPoly::from_word(Word(vec![e12, e13]));
        assert!(spec.apply_bracket(&t, 0).unwrap().is_zero());
        // too-short words refuse
        let t = TensorPoly::from_word(Word::single(e12));
        assert!(matches!(
            spec.apply_bracket(&t, 0),
            Err(ApplyError::WordTooShort { .. })
        ));
    }

    #[test]
    fn restriction_checks_closure() {
        let spec = TLieSpec::build(&sl3q_raw()).unwrap();
        // {e12, e23} is not closed: [e12,e23] = e13 escapes
        let err = spec.restrict(&["e12".into(), "e23".into()], "sub").unwrap_err();
        assert!(matches!(err, RestrictError::NotClosed { .. }));
        // a single element with q_{x,x} = 1 is a rank-1 abelian spec
        let sub = spec.restrict(&["e12".into()], "rank1").unwrap();
        assert_eq!(sub.dim(), 1);
        assert!(sub.bracket_entries().next().is_none());
    }

    #[test]
    fn raw_round_trip() {
        let spec = TLieSpec::build(&sl3q_raw()).unwrap();
        let again = TLieSpec::build(&spec.to_raw()).unwrap();
        assert_eq!(spec.to_raw(), again.to_raw());
    }

    #[test]
    fn linearity_of_apply_maps() {
        let spec = TLieSpec::build(&sl3q_raw()).unwrap();
        let e12 = spec.id_of("e12").unwrap();
        let e13 = spec.id_of("e13").unwrap();
        let e23 = spec.id_of("e23").unwrap();
        let t1 = TensorPoly::from_term(Word(vec![e23, e12]), q());
        let t2 = TensorPoly::from_term(Word(vec![e13, e23]), LaurentScalar::from_rational(
            Rational::new(BigInt::from(2), BigInt::from(3)),
        ));
        let c = q().pow(-2).unwrap();
        let combined = t1.add(&t2.scale(&c));
        for pos in [0usize] {
            let lhs = spec.apply_t(&combined, pos).unwrap();
            let rhs = spec
                .apply_t(&t1, pos)
                .unwrap()
                .add(&spec.apply_t(&t2, pos).unwrap().scale(&c));
            assert_eq!(lhs, rhs);
        }
    }
}
