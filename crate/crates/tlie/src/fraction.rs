//! Fractions of Laurent polynomials, reduced by exact polynomial gcd.
//!
//! The span-membership solvers run Gaussian elimination over the fraction
//! field of the coefficient ring. Keeping fractions reduced (primitive PRS
//! gcd, at most the two catalog variables) stops entry growth, and a reduced
//! denominator of 1 is how a solution is recognized as lying back in the
//! Laurent ring itself.

use std::ops::{Add, Mul, Neg, Sub};

use num::One;

use crate::scalar::{ExpVec, LaurentScalar, Rational};

/// Per-variable minimum exponent over all terms (length = arity).
fn min_exps(s: &LaurentScalar) -> ExpVec {
    let n = s.arity();
    let mut mins = vec![i32::MAX; n];
    for (e, _) in s.terms() {
        for i in 0..n {
            let v = e.get(i).copied().unwrap_or(0);
            if v < mins[i] {
                mins[i] = v;
            }
        }
    }
    mins
}

/// Multiply by the monomial with the given exponent vector.
fn shift(s: &LaurentScalar, delta: &[i32]) -> LaurentScalar {
    s.mul(&LaurentScalar::monomial(Rational::one(), delta.to_vec()))
}

fn neg_exps(e: &[i32]) -> ExpVec {
    e.iter().map(|x| -x).collect()
}

/// Shift a Laurent scalar so every variable has minimum exponent 0.
/// Returns the polynomial part and the shift that was removed.
fn to_poly(s: &LaurentScalar) -> (LaurentScalar, ExpVec) {
    if s.is_zero() {
        return (LaurentScalar::zero(), Vec::new());
    }
    let m = min_exps(s);
    (shift(s, &neg_exps(&m)), m)
}

/// Exact division of polynomials (all exponents nonnegative).
/// Returns `None` when the division is not exact.
fn poly_exact_div(a: &LaurentScalar, b: &LaurentScalar) -> Option<LaurentScalar> {
    assert!(!b.is_zero(), "division by zero polynomial");
    let mut rem = a.clone();
    let mut quo = LaurentScalar::zero();
    let (lb_e, lb_c) = {
        let (e, c) = b.terms().last()?;
        (e.clone(), c.clone())
    };
    while !rem.is_zero() {
        let (lr_e, lr_c) = {
            let (e, c) = rem.terms().last().unwrap();
            (e.clone(), c.clone())
        };
        let n = lr_e.len().max(lb_e.len());
        let mut t = vec![0i32; n];
        for i in 0..n {
            t[i] = lr_e.get(i).copied().unwrap_or(0) - lb_e.get(i).copied().unwrap_or(0);
            if t[i] < 0 {
                return None;
            }
        }
        let mono = LaurentScalar::monomial(&lr_c / &lb_c, t);
        quo = quo.add(&mono);
        rem = rem.sub(&mono.mul(b));
    }
    Some(quo)
}

/// View a polynomial as univariate in its top variable; index = exponent.
fn to_uni(s: &LaurentScalar, main: usize) -> Vec<LaurentScalar> {
    let mut coeffs: Vec<LaurentScalar> = Vec::new();
    for (e, c) in s.terms() {
        let d = e.get(main).copied().unwrap_or(0) as usize;
        if coeffs.len() <= d {
            coeffs.resize(d + 1, LaurentScalar::zero());
        }
        let mut rest = e.clone();
        if rest.len() > main {
            rest.truncate(main);
        }
        coeffs[d] = coeffs[d].add(&LaurentScalar::monomial(c.clone(), rest));
    }
    while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
        coeffs.pop();
    }
    coeffs
}

fn from_uni(coeffs: &[LaurentScalar], main: usize) -> LaurentScalar {
    let mut out = LaurentScalar::zero();
    for (d, c) in coeffs.iter().enumerate() {
        let mut e = vec![0i32; main + 1];
        e[main] = d as i32;
        out = out.add(&c.mul(&LaurentScalar::monomial(Rational::one(), e)));
    }
    out
}

/// Scale so the lex-greatest term has coefficient 1.
fn normalize_leading(s: &LaurentScalar) -> LaurentScalar {
    match s.terms().last() {
        Some((_, c)) => s.scale(&c.recip()),
        None => LaurentScalar::zero(),
    }
}

fn content(coeffs: &[LaurentScalar]) -> LaurentScalar {
    let mut g = LaurentScalar::zero();
    for c in coeffs {
        if !c.is_zero() {
            g = poly_gcd(&g, c);
        }
    }
    g
}

fn primitive_part(coeffs: &[LaurentScalar]) -> (Vec<LaurentScalar>, LaurentScalar) {
    let cont = content(coeffs);
    if cont.is_zero() {
        return (Vec::new(), LaurentScalar::zero());
    }
    let pp = coeffs
        .iter()
        .map(|c| {
            if c.is_zero() {
                LaurentScalar::zero()
            } else {
                poly_exact_div(c, &cont).expect("content divides coefficients")
            }
        })
        .collect();
    (pp, cont)
}

/// Pseudo-remainder of univariate polynomials with polynomial coefficients.
fn pseudo_rem(f: &[LaurentScalar], g: &[LaurentScalar]) -> Vec<LaurentScalar> {
    let dg = g.len() - 1;
    let lg = g.last().unwrap().clone();
    let mut r: Vec<LaurentScalar> = f.to_vec();
    while r.len() >= g.len() && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r.last().unwrap().clone();
        // r := lg*r - lr*X^(dr-dg)*g
        let mut next = vec![LaurentScalar::zero(); dr];
        for (i, c) in r.iter().enumerate().take(dr) {
            next[i] = c.mul(&lg);
        }
        for (i, c) in g.iter().enumerate().take(dg) {
            let j = i + dr - dg;
            next[j] = next[j].sub(&c.mul(&lr));
        }
        while next.last().map(|c| c.is_zero()).unwrap_or(false) {
            next.pop();
        }
        r = next;
    }
    r
}

/// Gcd of polynomials (nonnegative exponents), normalized so the
/// lex-greatest term has coefficient 1. Primitive PRS, recursing on the
/// number of variables.
pub fn poly_gcd(a: &LaurentScalar, b: &LaurentScalar) -> LaurentScalar {
    if a.is_zero() {
        return normalize_leading(b);
    }
    if b.is_zero() {
        return normalize_leading(a);
    }
    let nv = a.arity().max(b.arity());
    if nv == 0 {
        return LaurentScalar::one();
    }
    let main = nv - 1;
    let fa = to_uni(a, main);
    let fb = to_uni(b, main);
    let (pa, ca) = primitive_part(&fa);
    let (pb, cb) = primitive_part(&fb);
    let cont_gcd = poly_gcd(&ca, &cb);
    let (mut f, mut g) = if pa.len() >= pb.len() { (pa, pb) } else { (pb, pa) };
    while !g.is_empty() {
        let r = pseudo_rem(&f, &g);
        f = g;
        g = primitive_part(&r).0;
    }
    normalize_leading(&cont_gcd.mul(&from_uni(&f, main)))
}

/// Exact Laurent divisibility test with quotient: `a / b` when `b`
/// divides `a` up to a unit monomial times nothing, i.e. in the Laurent ring.
pub fn laurent_exact_div(a: &LaurentScalar, b: &LaurentScalar) -> Option<LaurentScalar> {
    if a.is_zero() {
        return Some(LaurentScalar::zero());
    }
    let (pa, sa) = to_poly(a);
    let (pb, sb) = to_poly(b);
    let q = poly_exact_div(&pa, &pb)?;
    let mut d = vec![0i32; sa.len().max(sb.len())];
    for (i, v) in sa.iter().enumerate() {
        d[i] += v;
    }
    for (i, v) in sb.iter().enumerate() {
        d[i] -= v;
    }
    Some(shift(&q, &d))
}

/// Reduced fraction of Laurent polynomials.
///
/// Canonical form: the denominator is a polynomial (minimum exponent 0 in
/// every variable), coprime to the numerator's polynomial part, with its
/// lex-greatest coefficient equal to 1. A value lies in the Laurent ring
/// exactly when the denominator is 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatFun {
    num: LaurentScalar,
    den: LaurentScalar,
}

impl RatFun {
    pub fn zero() -> Self {
        RatFun {
            num: LaurentScalar::zero(),
            den: LaurentScalar::one(),
        }
    }

    pub fn one() -> Self {
        RatFun::from(LaurentScalar::one())
    }

    pub fn new(num: LaurentScalar, den: LaurentScalar) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        // Unit-monomial part of the denominator moves into the numerator.
        let (dp, ds) = to_poly(&den);
        let num = shift(&num, &neg_exps(&ds));
        let (np, ns) = to_poly(&num);
        let g = poly_gcd(&np, &dp);
        let np = poly_exact_div(&np, &g).expect("gcd divides");
        let dp = poly_exact_div(&dp, &g).expect("gcd divides");
        // Make the denominator's lex-greatest coefficient 1.
        let lead = dp.terms().last().map(|(_, c)| c.clone()).unwrap();
        RatFun {
            num: shift(&np.scale(&lead.recip()), &ns),
            den: dp.scale(&lead.recip()),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn numerator(&self) -> &LaurentScalar {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentScalar {
        &self.den
    }

    /// The value as a Laurent polynomial, when the reduced denominator is 1.
    pub fn as_laurent(&self) -> Option<&LaurentScalar> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "inverting zero");
        RatFun::new(self.den.clone(), self.num.clone())
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        RatFun::new(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        RatFun {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        RatFun::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn mul_scalar(&self, s: &LaurentScalar) -> Self {
        if self.is_zero() || s.is_zero() {
            return Self::zero();
        }
        RatFun::new(self.num.mul(s), self.den.clone())
    }

    pub fn div(&self, o: &Self) -> Self {
        self.mul(&o.recip())
    }

    pub fn render(&self, vars: &[String]) -> String {
        if self.den.is_one() {
            self.num.render(vars)
        } else {
            format!("({}) / ({})", self.num.render(vars), self.den.render(vars))
        }
    }
}

impl From<LaurentScalar> for RatFun {
    fn from(num: LaurentScalar) -> Self {
        RatFun::new(num, LaurentScalar::one())
    }
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: Self) -> RatFun {
        RatFun::add(self, rhs)
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: Self) -> RatFun {
        RatFun::sub(self, rhs)
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: Self) -> RatFun {
        RatFun::mul(self, rhs)
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun::neg(self)
    }
}
