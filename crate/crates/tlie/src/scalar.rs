//! Exact arithmetic in the coefficient ring `Q[q^{±1}, p^{±1}, ...]`.
//!
//! Scalars are multivariate Laurent polynomials with arbitrary-precision
//! rational coefficients. The variable set is declared per algebra (at most
//! two variables, `q` and `p`, occur in the built-in catalog); a variable is
//! identified by its index in that declaration. Exponent vectors store one
//! signed integer per variable with trailing zeros trimmed, so the same value
//! has a unique representation regardless of how many variables are in scope.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision rational number.
pub type Rational = BigRational;

/// Exponent vector of a Laurent monomial, trailing zeros trimmed.
pub type ExpVec = Vec<i32>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    /// Inversion was requested for a scalar that is not a unit monomial.
    #[error("not a unit: scalar has {terms} terms (units are single nonzero monomials)")]
    NotAUnit { terms: usize },
    /// A specialization assigned zero to a declared unit variable.
    #[error("variable #{var} assigned zero; unit variables must stay invertible")]
    ZeroAssignment { var: usize },
    /// A specialization left a used variable without a value.
    #[error("variable #{var} occurs but has no assignment")]
    MissingAssignment { var: usize },
}

/// Exact Laurent polynomial in canonical form: no zero coefficients are
/// stored, the empty map is 0 and the empty exponent vector maps `1 ↦ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentScalar {
    terms: BTreeMap<ExpVec, Rational>,
}

fn trim(mut e: ExpVec) -> ExpVec {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

impl LaurentScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from(BigInt::from(n)))
    }

    pub fn from_rational(r: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !r.is_zero() {
            terms.insert(Vec::new(), r);
        }
        Self { terms }
    }

    /// The variable with the given index, e.g. `var(0)` is `q` in a `{q}` ring.
    pub fn var(index: usize) -> Self {
        Self::monomial(Rational::one(), {
            let mut e = vec![0; index + 1];
            e[index] = 1;
            e
        })
    }

    pub fn monomial(coef: Rational, exps: ExpVec) -> Self {
        let mut terms = BTreeMap::new();
        if !coef.is_zero() {
            terms.insert(trim(exps), coef);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Vec::new())
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExpVec, &Rational)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Number of variables actually used (highest index + 1).
    pub fn arity(&self) -> usize {
        self.terms.keys().map(|e| e.len()).max().unwrap_or(0)
    }

    /// The constant value, if this scalar uses no variables.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&Vec::new()) {
                return Some(c.clone());
            }
        }
        None
    }

    /// The `(coefficient, exponents)` pair if this is a single monomial.
    pub fn as_monomial(&self) -> Option<(&Rational, &ExpVec)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (c, e))
        } else {
            None
        }
    }

    pub(crate) fn insert_term(&mut self, exps: ExpVec, coef: Rational) {
        if coef.is_zero() {
            return;
        }
        let exps = trim(exps);
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coef);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &coef;
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
        for (e, c) in &other.terms {
            out.insert_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_term(e.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let n = ea.len().max(eb.len());
                let mut e = vec![0i32; n];
                for (i, v) in ea.iter().enumerate() {
                    e[i] += v;
                }
                for (i, v) in eb.iter().enumerate() {
                    e[i] += v;
                }
                out.insert_term(e, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * r)).collect(),
        }
    }

    /// Integer power. Negative exponents require a unit monomial.
    pub fn pow(&self, n: i32) -> Result<Self, ScalarError> {
        let base = if n < 0 { self.invert_unit()? } else { self.clone() };
        let mut out = Self::one();
        for _ in 0..n.unsigned_abs() {
            out = out.mul(&base);
        }
        Ok(out)
    }

    /// Inverse of a unit monomial `c·q^e·p^f` (nonzero rational `c`).
    pub fn invert_unit(&self) -> Result<Self, ScalarError> {
        match self.as_monomial() {
            Some((c, e)) => Ok(Self::monomial(
                c.recip(),
                e.iter().map(|x| -x).collect(),
            )),
            None => Err(ScalarError::NotAUnit {
                terms: self.terms.len(),
            }),
        }
    }

    /// Exact evaluation at a nonzero rational point, one value per variable.
    pub fn specialize(&self, values: &[Rational]) -> Result<Rational, ScalarError> {
        for (i, v) in values.iter().enumerate() {
            if v.is_zero() {
                return Err(ScalarError::ZeroAssignment { var: i });
            }
        }
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &exp) in e.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                let v = values
                    .get(i)
                    .ok_or(ScalarError::MissingAssignment { var: i })?;
                let p = if exp > 0 { v.clone() } else { v.recip() };
                for _ in 0..exp.unsigned_abs() {
                    t *= &p;
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Render using the given variable names, in the syntax the expression
    /// parser accepts (`3/2*p^-1*q^2 + q - 1`).
    pub fn render(&self, vars: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || e.iter().all(|&x| x == 0) {
                factors.push(mag.to_string());
            }
            for (vi, &exp) in e.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                let name = vars
                    .get(vi)
                    .cloned()
                    .unwrap_or_else(|| format!("x{vi}"));
                if exp == 1 {
                    factors.push(name);
                } else {
                    factors.push(format!("{name}^{exp}"));
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl Add for &LaurentScalar {
    type Output = LaurentScalar;
    fn add(self, rhs: Self) -> LaurentScalar {
        LaurentScalar::add(self, rhs)
    }
}

impl Sub for &LaurentScalar {
    type Output = LaurentScalar;
    fn sub(self, rhs: Self) -> LaurentScalar {
        LaurentScalar::sub(self, rhs)
    }
}

impl Mul for &LaurentScalar {
    type Output = LaurentScalar;
    fn mul(self, rhs: Self) -> LaurentScalar {
        LaurentScalar::mul(self, rhs)
    }
}

impl Neg for &LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        LaurentScalar::neg(self)
    }
}

impl fmt::Display for LaurentScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Default variable names for the catalog rings.
        write!(f, "{}", self.render(&["q".into(), "p".into()]))
    }
}
