//! Integer polynomials and exact real-root isolation by Sturm sequences.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};

/// A polynomial with integer coefficients, stored lowest degree first.
/// The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn from_ascending(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.trim();
        p
    }

    /// Coefficients from the leading term down to the constant.
    pub fn from_descending(coeffs: &[i64]) -> Self {
        IntPolynomial::from_ascending(coeffs.iter().rev().map(|&c| BigInt::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn ascending(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn descending(&self) -> Vec<BigInt> {
        self.coeffs.iter().rev().cloned().collect()
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        RatPoly::from(self).eval(x)
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (i, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{a}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{a}x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Serialised as a degree-descending list; coefficients that fit in `i64`
/// are numbers, larger ones decimal strings.
impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for c in self.coeffs.iter().rev() {
            match c.to_i64() {
                Some(v) => seq.serialize_element(&v)?,
                None => seq.serialize_element(&c.to_string())?,
            }
        }
        seq.end()
    }
}

/// Rational polynomial used internally for remainders and gcds.
#[derive(Clone, Debug, PartialEq)]
struct RatPoly(Vec<BigRational>);

impl From<&IntPolynomial> for RatPoly {
    fn from(p: &IntPolynomial) -> Self {
        RatPoly(p.coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect())
    }
}

impl RatPoly {
    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn eval(&self, x: &BigRational) -> BigRational {
        self.0.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    fn derivative(&self) -> RatPoly {
        RatPoly(self.0.iter().enumerate().skip(1).map(|(i, c)| c * BigRational::from_integer(i.into())).collect())
            .trim()
    }

    fn monic(mut self) -> RatPoly {
        if let Some(lead) = self.0.last().cloned() {
            for c in &mut self.0 {
                *c = &*c / &lead;
            }
        }
        self
    }

    /// Returns `(quotient, remainder)`.
    fn div_rem(&self, d: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let mut rem = self.0.clone();
        let dd = d.degree();
        let lead = d.0.last().expect("nonzero divisor").clone();
        if self.is_zero() || self.degree() < dd {
            return (RatPoly(Vec::new()), self.clone());
        }
        let mut quot = vec![BigRational::zero(); self.degree() - dd + 1];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lead;
            if !c.is_zero() {
                for (j, dj) in d.0.iter().enumerate() {
                    rem[k + j] = &rem[k + j] - &c * dj;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (RatPoly(quot).trim(), RatPoly(rem).trim())
    }

    fn gcd(&self, other: &RatPoly) -> RatPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    fn square_free(&self) -> RatPoly {
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }
}

/// Sturm chain of a square-free polynomial.
struct Sturm {
    chain: Vec<RatPoly>,
}

impl Sturm {
    fn new(sqf: RatPoly) -> Self {
        let mut chain = vec![sqf.clone(), sqf.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let r = chain[n - 2].div_rem(&chain[n - 1]).1;
            if r.is_zero() {
                break;
            }
            chain.push(RatPoly(r.0.into_iter().map(|c| -c).collect()));
        }
        Sturm { chain }
    }

    fn sign_changes(&self, x: &BigRational) -> usize {
        let mut last = 0i8;
        let mut changes = 0;
        for p in &self.chain {
            let v = p.eval(x);
            let s = if v.is_positive() {
                1
            } else if v.is_negative() {
                -1
            } else {
                0
            };
            if s != 0 {
                if last != 0 && s != last {
                    changes += 1;
                }
                last = s;
            }
        }
        changes
    }

    /// Distinct real roots in `(a, b]`.
    fn count(&self, a: &BigRational, b: &BigRational) -> usize {
        self.sign_changes(a) - self.sign_changes(b)
    }
}

/// The largest root of `sturm.chain[0]`: either exactly `hi` (when
/// `lo == hi`) or the only root in the open interval `(lo, hi)`.
struct Isolated {
    sturm: Sturm,
    lo: BigRational,
    hi: BigRational,
}

impl Isolated {
    fn largest(p: &IntPolynomial) -> Result<Isolated> {
        if !p.is_monic() {
            return Err(Error::NotMonic);
        }
        // Cauchy bound: every root has modulus below 1 + max |a_i|
        let bound = BigRational::from_integer(
            BigInt::one() + p.coeffs.iter().take(p.coeffs.len() - 1).map(|c| c.abs()).max().unwrap_or_default(),
        );
        let sturm = Sturm::new(RatPoly::from(p).square_free());
        let mut iso = Isolated { sturm, lo: -bound.clone(), hi: bound };
        if iso.sturm.chain[0].degree() == 0 || iso.sturm.count(&iso.lo, &iso.hi) == 0 {
            return Err(Error::NoRealRoot);
        }
        while !iso.is_exact() && iso.sturm.count(&iso.lo, &iso.hi) > 1 {
            iso.refine();
        }
        Ok(iso)
    }

    fn refine(&mut self) {
        let mid = (&self.lo + &self.hi) / BigRational::from_integer(2.into());
        if self.sturm.count(&mid, &self.hi) >= 1 {
            self.lo = mid;
        } else {
            if self.sturm.chain[0].eval(&mid).is_zero() {
                self.lo = mid.clone();
            }
            self.hi = mid;
        }
    }

    fn holds_root_of(&self, other: &Sturm) -> bool {
        if self.is_exact() {
            other.chain[0].eval(&self.hi).is_zero()
        } else {
            other.count(&self.lo, &self.hi) > 0
        }
    }

    fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    fn refine_to(&mut self, tol: &BigRational) {
        while !self.is_exact() && &(&self.hi - &self.lo) > tol {
            self.refine();
        }
    }

    fn midpoint(&self) -> f64 {
        ((&self.lo + &self.hi) / BigRational::from_integer(2.into())).to_f64().unwrap_or(f64::NAN)
    }
}

fn rational_tol(tol: f64) -> Result<BigRational> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::InvalidTolerance(tol));
    }
    BigRational::from_float(tol).ok_or(Error::InvalidTolerance(tol))
}

/// Largest real root of a monic polynomial, to within `tol`.
pub fn largest_real_root(p: &IntPolynomial, tol: f64) -> Result<f64> {
    let tol = rational_tol(tol)?;
    let mut iso = Isolated::largest(p)?;
    iso.refine_to(&tol);
    Ok(iso.midpoint())
}

/// Exact comparison of the largest real roots of two monic polynomials.
pub fn compare_largest_roots(p: &IntPolynomial, q: &IntPolynomial) -> Result<Ordering> {
    let mut a = Isolated::largest(p)?;
    let mut b = Isolated::largest(q)?;
    let common = Sturm::new(match RatPoly::from(p).gcd(&RatPoly::from(q)) {
        g if g.degree() == 0 => return separate(&mut a, &mut b),
        g => g.square_free(),
    });
    if a.holds_root_of(&common) && b.holds_root_of(&common) {
        return Ok(Ordering::Equal);
    }
    separate(&mut a, &mut b)
}

fn separate(a: &mut Isolated, b: &mut Isolated) -> Result<Ordering> {
    loop {
        if a.is_exact() && b.is_exact() {
            return Ok(a.hi.cmp(&b.hi));
        }
        if a.hi <= b.lo {
            return Ok(Ordering::Less);
        }
        if b.hi <= a.lo {
            return Ok(Ordering::Greater);
        }
        for iso in [&mut *a, &mut *b] {
            if !iso.is_exact() {
                iso.refine();
            }
        }
    }
}
