//! Dense univariate polynomials over a field context.
//!
//! Used for extension moduli, the distinct-degree irreducibility test,
//! gcd-based inversion and the factorization routines of the binary-form
//! module. Coefficients are stored lowest degree first with trailing zeros
//! trimmed; the zero polynomial has an empty coefficient vector.

use std::fmt;

use super::{FieldContext, FieldValue};
use crate::error::Error;
use crate::Result;

#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    ctx: FieldContext,
    coeffs: Vec<FieldValue>,
}

impl Poly {
    pub fn new(ctx: FieldContext, mut coeffs: Vec<FieldValue>) -> Poly {
        for c in &coeffs {
            assert!(c.context() == &ctx, "coefficient context mismatch");
        }
        while coeffs.last().is_some_and(FieldValue::is_zero) {
            coeffs.pop();
        }
        Poly { ctx, coeffs }
    }

    /// Builds a polynomial from integer coefficients, lowest degree first.
    pub fn from_ints(ctx: &FieldContext, coeffs: &[i64]) -> Poly {
        Poly::new(
            ctx.clone(),
            coeffs.iter().map(|&c| ctx.from_int(c)).collect(),
        )
    }

    pub fn zero(ctx: &FieldContext) -> Poly {
        Poly {
            ctx: ctx.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn constant(v: FieldValue) -> Poly {
        Poly::new(v.context().clone(), vec![v])
    }

    /// The polynomial `x`.
    pub fn x(ctx: &FieldContext) -> Poly {
        Poly::new(ctx.clone(), vec![ctx.zero(), ctx.one()])
    }

    pub fn context(&self) -> &FieldContext {
        &self.ctx
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> FieldValue {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.ctx.zero())
    }

    pub fn leading_coeff(&self) -> Option<&FieldValue> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(FieldValue::is_one)
    }

    pub fn scale(&self, s: &FieldValue) -> Poly {
        Poly::new(
            self.ctx.clone(),
            self.coeffs.iter().map(|c| c * s).collect(),
        )
    }

    /// Monic associate; errors on the zero polynomial.
    pub fn monic(&self) -> Result<Poly> {
        let lead = self.leading_coeff().ok_or(Error::ZeroForm)?;
        Ok(self.scale(&lead.inv()?))
    }

    pub fn eval(&self, at: &FieldValue) -> FieldValue {
        let mut acc = self.ctx.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * at) + c;
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero(&self.ctx);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| &self.ctx.from_int(i as i64) * c)
            .collect();
        Poly::new(self.ctx.clone(), coeffs)
    }

    /// Quotient and remainder; the divisor must be nonzero.
    pub fn divrem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        assert!(self.ctx == divisor.ctx, "polynomial context mismatch");
        let d_deg = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = divisor.leading_coeff().unwrap().inv()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= d_deg {
            return Ok((Poly::zero(&self.ctx), self.clone()));
        }
        let q_len = rem.len() - d_deg;
        let mut quot = vec![self.ctx.zero(); q_len];
        for k in (0..q_len).rev() {
            let factor = &rem[k + d_deg] * &lead_inv;
            if factor.is_zero() {
                continue;
            }
            for i in 0..=d_deg {
                rem[k + i] = &rem[k + i] - &(&factor * &divisor.coeffs[i]);
            }
            quot[k] = factor;
        }
        Ok((
            Poly::new(self.ctx.clone(), quot),
            Poly::new(self.ctx.clone(), rem),
        ))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.divrem(divisor)?.1)
    }

    /// Monic greatest common divisor (classical Euclid).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic().expect("nonzero")
        }
    }

    pub fn mul_mod(&self, other: &Poly, modulus: &Poly) -> Result<Poly> {
        (self * other).rem(modulus)
    }

    pub fn pow_mod(&self, mut e: u128, modulus: &Poly) -> Result<Poly> {
        let mut acc = Poly::constant(self.ctx.one()).rem(modulus)?;
        let mut base = self.rem(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod(&base, modulus)?;
            }
            base = base.mul_mod(&base, modulus)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Distinct-degree irreducibility test over the coefficient field of
    /// size `q`: `f` of degree `n` is irreducible iff
    /// `gcd(x^(q^i) - x, f) = 1` for all `i <= n/2`.
    pub fn is_irreducible(&self) -> Result<bool> {
        let n = match self.degree() {
            None | Some(0) => return Ok(false),
            Some(1) => return Ok(true),
            Some(n) => n,
        };
        let f = self.monic()?;
        let q = self.ctx.size();
        let x = Poly::x(&self.ctx);
        let mut h = x.clone();
        for _ in 1..=(n / 2) {
            h = h.pow_mod(q, &f)?;
            let g = (&h - &x).gcd(&f);
            if g.degree() != Some(0) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Extended Euclid: returns `(g, s, t)` with `s*a + t*b = g`.
/// `g` is not normalized to be monic.
pub fn extended_gcd(a: &Poly, b: &Poly) -> (Poly, Poly, Poly) {
    let ctx = a.context().clone();
    let one = Poly::constant(ctx.one());
    let zero = Poly::zero(&ctx);
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (one.clone(), zero.clone());
    let (mut t0, mut t1) = (zero, one);
    while !r1.is_zero() {
        let (q, r) = r0.divrem(&r1).expect("nonzero divisor");
        let s = &s0 - &(&q * &s1);
        let t = &t0 - &(&q * &t1);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    (r0, s0, t0)
}

impl std::ops::Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        assert!(self.ctx == rhs.ctx, "polynomial context mismatch");
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect();
        Poly::new(self.ctx.clone(), coeffs)
    }
}

impl std::ops::Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        assert!(self.ctx == rhs.ctx, "polynomial context mismatch");
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect();
        Poly::new(self.ctx.clone(), coeffs)
    }
}

impl std::ops::Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        assert!(self.ctx == rhs.ctx, "polynomial context mismatch");
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(&self.ctx);
        }
        let mut coeffs = vec![self.ctx.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Poly::new(self.ctx.clone(), coeffs)
    }
}

impl std::ops::Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly::new(
            self.ctx.clone(),
            self.coeffs.iter().map(|c| -c).collect(),
        )
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*x")?,
                _ => write!(f, "{c}*x^{i}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f11() -> FieldContext {
        FieldContext::prime(11).unwrap()
    }

    #[test]
    fn divrem_reconstructs() {
        let k = f11();
        let a = Poly::from_ints(&k, &[1, 2, 3, 4, 5]);
        let b = Poly::from_ints(&k, &[7, 0, 2]);
        let (q, r) = a.divrem(&b).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree() < b.degree());
        assert!(a.divrem(&Poly::zero(&k)).is_err());
    }

    #[test]
    fn gcd_of_products() {
        let k = f11();
        let a = Poly::from_ints(&k, &[1, 1]); // x + 1
        let b = Poly::from_ints(&k, &[3, 1]); // x + 3
        let c = Poly::from_ints(&k, &[5, 1]); // x + 5
        let left = &(&a * &b) * &Poly::from_ints(&k, &[2]);
        let right = &(&a * &c) * &Poly::from_ints(&k, &[7]);
        assert_eq!(left.gcd(&right), a);
    }

    #[test]
    fn extended_gcd_bezout() {
        let k = f11();
        let a = Poly::from_ints(&k, &[2, 0, 1, 4]);
        let b = Poly::from_ints(&k, &[1, 0, 1]);
        let (g, s, t) = extended_gcd(&a, &b);
        assert_eq!(&(&s * &a) + &(&t * &b), g);
    }

    #[test]
    fn irreducibility_over_f11() {
        let k = f11();
        // x^2 + 1 is irreducible (-1 is not a square mod 11).
        assert!(Poly::from_ints(&k, &[1, 0, 1]).is_irreducible().unwrap());
        // x^2 - 3 = (x-5)(x+5).
        assert!(!Poly::from_ints(&k, &[-3, 0, 1]).is_irreducible().unwrap());
        // x^11 - x + 3 is Artin-Schreier irreducible.
        let mut c = vec![0i64; 12];
        c[0] = 3;
        c[1] = -1;
        c[11] = 1;
        assert!(Poly::from_ints(&k, &c).is_irreducible().unwrap());
        // x^11 - x = prod over F_11 of (x - a) is very reducible.
        c[0] = 0;
        assert!(!Poly::from_ints(&k, &c).is_irreducible().unwrap());
    }

    #[test]
    fn eval_and_derivative() {
        let k = f11();
        let f = Poly::from_ints(&k, &[1, 0, 0, 1]); // x^3 + 1
        assert_eq!(f.eval(&k.from_int(2)), k.from_int(9));
        assert_eq!(f.derivative(), Poly::from_ints(&k, &[0, 0, 3]));
    }
}
