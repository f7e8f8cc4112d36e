//! Exact bivariate polynomials in `q` and `z` with big-integer coefficients.
//!
//! Every chromatic function in this crate is a polynomial with integer
//! coefficients, so a sparse term map over [`BigInt`] is all we need. Terms are
//! kept canonical: no stored coefficient is ever zero, and the zero polynomial
//! is the empty map.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exponent pair `(deg_q, deg_z)` of a monomial.
pub type Exponents = (u32, u32);

/// A polynomial in `q` and `z` over the integers.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Poly2 {
    terms: BTreeMap<Exponents, BigInt>,
}

/// A [`Poly2`] with no `z` terms. Univariate results (zero-free and ordinary
/// chromatic polynomials, closed forms) use this alias.
pub type Poly1 = Poly2;

/// Graded-lexicographic order used for printing: higher total degree first,
/// then higher `q` degree first.
fn graded_lex(a: &Exponents, b: &Exponents) -> Ordering {
    (b.0 + b.1).cmp(&(a.0 + a.1)).then(b.0.cmp(&a.0))
}

impl Poly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1, 0)
    }

    /// The variable `z`.
    pub fn z() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn monomial<C: Into<BigInt>>(c: C, deg_q: u32, deg_z: u32) -> Self {
        let mut p = Self::zero();
        p.add_term((deg_q, deg_z), c.into());
        p
    }

    /// Builds a polynomial from `(deg_q, deg_z, coefficient)` triples; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (dq, dz, c) in terms {
            p.add_term((dq, dz), c.into());
        }
        p
    }

    /// `q - c`, the most common building block of the closed forms.
    pub fn q_minus<C: Into<BigInt>>(c: C) -> Self {
        Self::q() - Self::constant(c)
    }

    pub(crate) fn add_term(&mut self, exp: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, deg_q: u32, deg_z: u32) -> BigInt {
        self.terms.get(&(deg_q, deg_z)).cloned().unwrap_or_default()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in graded-lexicographic order (the printing order).
    pub fn terms(&self) -> Vec<(u32, u32, &BigInt)> {
        let mut out: Vec<_> = self.terms.iter().map(|(&(a, b), c)| (a, b, c)).collect();
        out.sort_by(|x, y| graded_lex(&(x.0, x.1), &(y.0, y.1)));
        out
    }

    /// Highest power of `q` present, `None` for the zero polynomial.
    pub fn degree_q(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.0).max()
    }

    pub fn is_univariate(&self) -> bool {
        self.terms.keys().all(|e| e.1 == 0)
    }

    pub fn eval(&self, q: &BigInt, z: &BigInt) -> BigInt {
        let mut total = BigInt::zero();
        for (&(dq, dz), c) in &self.terms {
            total += c * q.pow(dq) * z.pow(dz);
        }
        total
    }

    pub fn eval_i64(&self, q: i64, z: i64) -> BigInt {
        self.eval(&BigInt::from(q), &BigInt::from(z))
    }

    /// Fixes `z` to an integer, leaving a polynomial in `q`.
    pub fn at_z(&self, z: i64) -> Poly1 {
        let z = BigInt::from(z);
        let mut p = Self::zero();
        for (&(dq, dz), c) in &self.terms {
            p.add_term((dq, 0), c * z.pow(dz));
        }
        p
    }

    /// Replaces `q` by the polynomial `x`, keeping `z` as is.
    pub fn compose_q(&self, x: &Poly2) -> Poly2 {
        let max_deg = self.degree_q().unwrap_or(0);
        let mut powers = Vec::with_capacity(max_deg as usize + 1);
        powers.push(Poly2::one());
        for i in 1..=max_deg as usize {
            let next = &powers[i - 1] * x;
            powers.push(next);
        }
        let mut out = Poly2::zero();
        for (&(dq, dz), c) in &self.terms {
            let scaled = &powers[dq as usize] * &Poly2::monomial(c.clone(), 0, dz);
            out += scaled;
        }
        out
    }

    /// Same polynomial with `q` renamed to `z` (for univariate inputs).
    pub fn in_z(&self) -> Poly2 {
        self.compose_q(&Poly2::z())
    }

    pub fn pow(&self, exp: u32) -> Poly2 {
        let mut out = Poly2::one();
        for _ in 0..exp {
            out = &out * self;
        }
        out
    }
}

/// The falling factorial `(q)_m = q (q-1) ... (q-m+1)`; `(q)_0 = 1`.
pub fn falling_factorial(m: u32) -> Poly1 {
    falling_factorial_of(&Poly2::q(), m)
}

/// `(x)_m` for an arbitrary polynomial `x`.
pub fn falling_factorial_of(x: &Poly2, m: u32) -> Poly2 {
    let mut out = Poly2::one();
    for i in 0..m {
        out = &out * &(x - &Poly2::constant(i));
    }
    out
}

/// Substitutes `q -> offset` into a polynomial in `q` (for example `q - z`).
pub fn substitute_shift(p: &Poly1, offset: &Poly2) -> Poly2 {
    debug_assert!(p.is_univariate(), "substitute_shift expects a polynomial in q");
    p.compose_q(offset)
}

impl<'a> Add<&'a Poly2> for &'a Poly2 {
    type Output = Poly2;
    fn add(self, rhs: &'a Poly2) -> Poly2 {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Poly2 {
    type Output = Poly2;
    fn add(mut self, rhs: Poly2) -> Poly2 {
        self += &rhs;
        self
    }
}

impl AddAssign<&Poly2> for Poly2 {
    fn add_assign(&mut self, rhs: &Poly2) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl AddAssign for Poly2 {
    fn add_assign(&mut self, rhs: Poly2) {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl<'a> Sub<&'a Poly2> for &'a Poly2 {
    type Output = Poly2;
    fn sub(self, rhs: &'a Poly2) -> Poly2 {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Poly2 {
    type Output = Poly2;
    fn sub(mut self, rhs: Poly2) -> Poly2 {
        self -= &rhs;
        self
    }
}

impl SubAssign<&Poly2> for Poly2 {
    fn sub_assign(&mut self, rhs: &Poly2) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, -c);
        }
    }
}

impl<'a> Mul<&'a Poly2> for &'a Poly2 {
    type Output = Poly2;
    fn mul(self, rhs: &'a Poly2) -> Poly2 {
        let mut out = Poly2::zero();
        for (&(aq, az), ac) in &self.terms {
            for (&(bq, bz), bc) in &rhs.terms {
                out.add_term((aq + bq, az + bz), ac * bc);
            }
        }
        out
    }
}

impl Mul for Poly2 {
    type Output = Poly2;
    fn mul(self, rhs: Poly2) -> Poly2 {
        &self * &rhs
    }
}

impl Mul<&BigInt> for &Poly2 {
    type Output = Poly2;
    fn mul(self, rhs: &BigInt) -> Poly2 {
        let mut out = Poly2::zero();
        for (&e, c) in &self.terms {
            out.add_term(e, c * rhs);
        }
        out
    }
}

impl Neg for Poly2 {
    type Output = Poly2;
    fn neg(mut self) -> Poly2 {
        for c in self.terms.values_mut() {
            *c = -core::mem::take(c);
        }
        self
    }
}

impl Neg for &Poly2 {
    type Output = Poly2;
    fn neg(self) -> Poly2 {
        -self.clone()
    }
}

impl core::iter::Sum for Poly2 {
    fn sum<I: Iterator<Item = Poly2>>(iter: I) -> Poly2 {
        let mut out = Poly2::zero();
        for p in iter {
            out += p;
        }
        out
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, dq: u32, dz: u32) -> fmt::Result {
    let mut first = true;
    for (name, d) in [("q", dq), ("z", dz)] {
        if d == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if d == 1 {
            f.write_str(name)?;
        } else {
            write!(f, "{}^{}", name, d)?;
        }
    }
    Ok(())
}

/// Renders as `q^2 - 3*q + 2*z`: graded-lex term order, unit coefficients
/// elided, `*` between factors.
impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (dq, dz, c)) in self.terms().into_iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let constant = dq == 0 && dz == 0;
            if constant {
                write!(f, "{}", abs)?;
            } else {
                if !abs.is_one() {
                    write!(f, "{}*", abs)?;
                }
                write_monomial(f, dq, dz)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly2({})", self)
    }
}
