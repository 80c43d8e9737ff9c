//! Exact arithmetic in `F_p` and small extension towers.
//!
//! A [`FieldContext`] describes the prime field `F_p` (`p >= 5`), one
//! extension layer `F_p[x]/(f)` for a monic irreducible `f`, or a quadratic
//! layer on top of that. Two layers cover everything needed here: the
//! Artin-Schreier field `F_11[b]` with `b^11 - b + 3e^3 = 0` together with a
//! square root of `-1` lives in the tower `F_11[b][i]`.
//!
//! Values are coefficient vectors over the prime field, lowest degree first,
//! always fully reduced, so equality is plain sequence equality. Contexts are
//! shared behind an `Arc` and everything is immutable after construction.

pub mod matrix;
pub mod poly;

pub use matrix::Matrix;
pub use poly::Poly;

use std::fmt;
use std::sync::Arc;

use crate::error::Error;
use crate::Result;

// ---------------------------------------------------------------------------
// Raw arithmetic over F_p coefficient vectors
// ---------------------------------------------------------------------------

#[inline]
fn p_add(p: u64, a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
fn p_sub(p: u64, a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline]
fn p_mul(p: u64, a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn p_pow(p: u64, mut a: u64, mut e: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = p_mul(p, acc, a);
        }
        a = p_mul(p, a, a);
        e >>= 1;
    }
    acc
}

fn vec_add(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(&x, &y)| p_add(p, x, y)).collect()
}

fn vec_sub(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(&x, &y)| p_sub(p, x, y)).collect()
}

fn vec_neg(p: u64, a: &[u64]) -> Vec<u64> {
    a.iter().map(|&x| p_sub(p, 0, x)).collect()
}

/// Full product of two dense `F_p` polynomials given as coefficient slices.
fn poly_mul_raw(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = p_add(p, out[i + j], p_mul(p, x, y));
        }
    }
    out
}

/// Remainder of `a` modulo the monic polynomial `m` (given with leading 1),
/// returned padded to length `m.len() - 1`.
fn poly_rem_raw(p: u64, mut a: Vec<u64>, m: &[u64]) -> Vec<u64> {
    let d = m.len() - 1;
    debug_assert_eq!(m[d], 1, "modulus must be monic");
    while a.len() > d {
        let lead = a.pop().unwrap();
        if lead != 0 {
            let shift = a.len() - d;
            for i in 0..d {
                a[shift + i] = p_sub(p, a[shift + i], p_mul(p, lead, m[i]));
            }
        }
    }
    a.resize(d, 0);
    a
}

fn ext_mul_raw(p: u64, m: &[u64], a: &[u64], b: &[u64]) -> Vec<u64> {
    poly_rem_raw(p, poly_mul_raw(p, a, b), m)
}

// ---------------------------------------------------------------------------
// Contexts
// ---------------------------------------------------------------------------

enum CtxKind {
    Prime,
    Ext {
        base: FieldContext,
        /// Monic modulus over `F_p`, lowest degree first, length `d + 1`.
        modulus: Vec<u64>,
    },
    Tower {
        base: FieldContext,
        /// Quadratic modulus `y^2 + g1*y + g0` with `g0`, `g1` in the first
        /// layer, stored as raw coefficient vectors of length `d1`.
        g0: Vec<u64>,
        g1: Vec<u64>,
    },
}

struct CtxRepr {
    p: u64,
    degree: usize,
    size: u128,
    kind: CtxKind,
}

/// A prime field or a (tower of at most two) extension field(s) over it.
///
/// Cloning is cheap; equality compares characteristic and moduli.
#[derive(Clone)]
pub struct FieldContext(Arc<CtxRepr>);

impl PartialEq for FieldContext {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.0, &other.0) {
            return true;
        }
        if self.0.p != other.0.p {
            return false;
        }
        match (&self.0.kind, &other.0.kind) {
            (CtxKind::Prime, CtxKind::Prime) => true,
            (CtxKind::Ext { modulus: a, .. }, CtxKind::Ext { modulus: b, .. }) => a == b,
            (
                CtxKind::Tower {
                    base: ba,
                    g0: a0,
                    g1: a1,
                },
                CtxKind::Tower {
                    base: bb,
                    g0: b0,
                    g1: b1,
                },
            ) => ba == bb && a0 == b0 && a1 == b1,
            _ => false,
        }
    }
}

impl Eq for FieldContext {}

impl fmt::Debug for FieldContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for FieldContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.kind {
            CtxKind::Prime => write!(f, "F_{}", self.0.p),
            CtxKind::Ext { .. } => write!(f, "F_{}^{}", self.0.p, self.0.degree),
            CtxKind::Tower { base, .. } => {
                write!(f, "F_{}^{} (quadratic over F_{}^{})",
                    self.0.p, self.0.degree, self.0.p, base.degree())
            }
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldContext {
    /// The prime field `F_p`; `p` must be a prime `>= 5`.
    pub fn prime(p: u64) -> Result<FieldContext> {
        if p < 5 || !is_prime(p) {
            return Err(Error::BadCharacteristic(p));
        }
        Ok(FieldContext(Arc::new(CtxRepr {
            p,
            degree: 1,
            size: p as u128,
            kind: CtxKind::Prime,
        })))
    }

    /// Adjoins a root of the monic irreducible `modulus` over this context.
    ///
    /// Over the prime field any degree `>= 2` is accepted; over a first
    /// extension layer only degree 2 is supported, and a second layer cannot
    /// be extended further. Irreducibility is established by the
    /// distinct-degree criterion (`gcd(x^(q^i) - x, f) = 1` for `i` up to
    /// half the degree); Artin-Schreier moduli `x^p - x + c`, `c != 0`, are
    /// recognized as irreducible up front and the criterion must agree.
    pub fn extend(&self, modulus: &Poly) -> Result<FieldContext> {
        if modulus.context() != self {
            return Err(Error::ContextMismatch);
        }
        let deg = modulus
            .degree()
            .ok_or_else(|| Error::BadModulus("zero modulus".into()))?;
        if deg < 2 {
            return Err(Error::BadModulus(format!("degree {deg} < 2")));
        }
        if !modulus.is_monic() {
            return Err(Error::BadModulus("not monic".into()));
        }
        let p = self.0.p;
        let total_degree = self.0.degree * deg;
        let size = (p as u128)
            .checked_pow(total_degree as u32)
            .ok_or_else(|| Error::BadModulus("resulting field too large".into()))?;
        let artin_schreier = self.is_artin_schreier_shape(modulus);
        let irreducible = modulus.is_irreducible()?;
        if artin_schreier {
            assert!(
                irreducible,
                "Artin-Schreier modulus must pass the distinct-degree test"
            );
        }
        if !irreducible {
            return Err(Error::ReducibleModulus);
        }
        match &self.0.kind {
            CtxKind::Prime => {
                let raw: Vec<u64> = (0..=deg).map(|i| modulus.coeff(i).c[0]).collect();
                Ok(FieldContext(Arc::new(CtxRepr {
                    p,
                    degree: deg,
                    size,
                    kind: CtxKind::Ext {
                        base: self.clone(),
                        modulus: raw,
                    },
                })))
            }
            CtxKind::Ext { .. } => {
                if deg != 2 {
                    return Err(Error::BadModulus(
                        "second tower layer must be quadratic".into(),
                    ));
                }
                Ok(FieldContext(Arc::new(CtxRepr {
                    p,
                    degree: total_degree,
                    size,
                    kind: CtxKind::Tower {
                        base: self.clone(),
                        g0: modulus.coeff(0).c.clone(),
                        g1: modulus.coeff(1).c.clone(),
                    },
                })))
            }
            CtxKind::Tower { .. } => Err(Error::BadModulus(
                "tower is limited to two extension layers".into(),
            )),
        }
    }

    /// True when `modulus` is `x^p - x + c` with `c != 0` over the prime field.
    fn is_artin_schreier_shape(&self, modulus: &Poly) -> bool {
        if !matches!(self.0.kind, CtxKind::Prime) {
            return false;
        }
        let p = self.0.p;
        if modulus.degree() != Some(p as usize) {
            return false;
        }
        let constant_nonzero = !modulus.coeff(0).is_zero();
        let linear_is_minus_one = modulus.coeff(1).c[0] == p - 1;
        let middles_zero = (2..p as usize).all(|i| modulus.coeff(i).is_zero());
        let monic = modulus.coeff(p as usize).is_one();
        constant_nonzero && linear_is_minus_one && middles_zero && monic
    }

    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    /// Total extension degree over the prime field.
    pub fn degree(&self) -> usize {
        self.0.degree
    }

    /// Number of elements, `p^degree`.
    pub fn size(&self) -> u128 {
        self.0.size
    }

    /// The context one layer down, if any.
    pub fn base(&self) -> Option<&FieldContext> {
        match &self.0.kind {
            CtxKind::Prime => None,
            CtxKind::Ext { base, .. } | CtxKind::Tower { base, .. } => Some(base),
        }
    }

    pub fn is_prime_field(&self) -> bool {
        matches!(self.0.kind, CtxKind::Prime)
    }

    pub fn zero(&self) -> FieldValue {
        FieldValue {
            ctx: self.clone(),
            c: vec![0; self.0.degree],
        }
    }

    pub fn one(&self) -> FieldValue {
        self.from_int(1)
    }

    /// The integer `n` reduced into this field.
    pub fn from_int(&self, n: i64) -> FieldValue {
        let p = self.0.p as i64;
        let r = n.rem_euclid(p) as u64;
        let mut c = vec![0; self.0.degree];
        c[0] = r;
        FieldValue {
            ctx: self.clone(),
            c,
        }
    }

    /// Builds a value from prime-field coefficients, lowest degree first.
    /// Shorter slices are zero-padded; longer ones are rejected.
    pub fn element(&self, coeffs: &[i64]) -> Result<FieldValue> {
        if coeffs.len() > self.0.degree {
            return Err(Error::DegreeMismatch {
                expected: self.0.degree,
                got: coeffs.len(),
            });
        }
        let p = self.0.p as i64;
        let mut c = vec![0u64; self.0.degree];
        for (i, &x) in coeffs.iter().enumerate() {
            c[i] = x.rem_euclid(p) as u64;
        }
        Ok(FieldValue {
            ctx: self.clone(),
            c,
        })
    }

    /// The residue class of the top-layer variable (the adjoined root).
    pub fn generator(&self) -> Result<FieldValue> {
        match &self.0.kind {
            CtxKind::Prime => Err(Error::Precondition(
                "the prime field has no adjoined generator".into(),
            )),
            CtxKind::Ext { .. } => {
                let mut c = vec![0; self.0.degree];
                c[1] = 1;
                Ok(FieldValue {
                    ctx: self.clone(),
                    c,
                })
            }
            CtxKind::Tower { base, .. } => {
                let mut c = vec![0; self.0.degree];
                c[base.degree()] = 1;
                Ok(FieldValue {
                    ctx: self.clone(),
                    c,
                })
            }
        }
    }

    /// Embeds `v` into this context. Supported embeddings: identity,
    /// prime field into any context over the same prime, and the first
    /// layer of a tower into the tower.
    pub fn lift(&self, v: &FieldValue) -> Result<FieldValue> {
        if &v.ctx == self {
            return Ok(v.clone());
        }
        if v.ctx.0.p != self.0.p {
            return Err(Error::ContextMismatch);
        }
        if v.ctx.is_prime_field() {
            let mut c = vec![0; self.0.degree];
            c[0] = v.c[0];
            return Ok(FieldValue {
                ctx: self.clone(),
                c,
            });
        }
        if let CtxKind::Tower { base, .. } = &self.0.kind {
            if &v.ctx == base {
                let mut c = v.c.clone();
                c.resize(self.0.degree, 0);
                return Ok(FieldValue {
                    ctx: self.clone(),
                    c,
                });
            }
        }
        Err(Error::NotInSubfield)
    }

    /// All field elements in a fixed order (coefficient odometer, lowest
    /// coefficient fastest). Lazy, so usable for early-exit searches even
    /// in large contexts.
    pub fn elements(&self) -> Elements {
        Elements {
            ctx: self.clone(),
            next: Some(vec![0; self.0.degree]),
        }
    }

    /// A value of exact multiplicative order `n`, found by a deterministic
    /// sweep: the first element whose `(q-1)/n`-th power has order `n`.
    pub fn root_of_unity(&self, n: u128) -> Result<FieldValue> {
        if n == 0 {
            return Err(Error::Precondition("root_of_unity(0)".into()));
        }
        let group_order = self.size() - 1;
        if group_order % n != 0 {
            return Err(Error::NoRootOfUnity { n, group_order });
        }
        if n == 1 {
            return Ok(self.one());
        }
        let prime_factors = distinct_prime_factors(n);
        let cofactor = group_order / n;
        for v in self.elements() {
            if v.is_zero() {
                continue;
            }
            let h = v.pow(cofactor);
            if h.is_one() {
                continue;
            }
            let exact = prime_factors.iter().all(|&l| !h.pow(n / l).is_one());
            if exact {
                debug_assert!(h.pow(n).is_one());
                return Ok(h);
            }
        }
        unreachable!("the multiplicative group is cyclic, so a generator exists")
    }
}

fn distinct_prime_factors(mut n: u128) -> Vec<u128> {
    let mut out = Vec::new();
    let mut d = 2u128;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Iterator over all elements of a context.
pub struct Elements {
    ctx: FieldContext,
    next: Option<Vec<u64>>,
}

impl Iterator for Elements {
    type Item = FieldValue;

    fn next(&mut self) -> Option<FieldValue> {
        let current = self.next.take()?;
        let value = FieldValue {
            ctx: self.ctx.clone(),
            c: current.clone(),
        };
        let p = self.ctx.0.p;
        let mut digits = current;
        let mut i = 0;
        loop {
            if i == digits.len() {
                self.next = None;
                break;
            }
            digits[i] += 1;
            if digits[i] < p {
                self.next = Some(digits);
                break;
            }
            digits[i] = 0;
            i += 1;
        }
        Some(value)
    }
}

// ---------------------------------------------------------------------------
// Values
// ---------------------------------------------------------------------------

/// An element of a [`FieldContext`]: a reduced coefficient vector over the
/// prime field, lowest degree first.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldValue {
    ctx: FieldContext,
    c: Vec<u64>,
}

impl FieldValue {
    pub fn context(&self) -> &FieldContext {
        &self.ctx
    }

    /// Prime-field coefficients, lowest degree first.
    pub fn coefficients(&self) -> &[u64] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|&x| x == 0)
    }

    pub fn is_one(&self) -> bool {
        self.c[0] == 1 && self.c[1..].iter().all(|&x| x == 0)
    }

    /// The integer representative in `[0, p)` of a prime-subfield value.
    pub fn as_int(&self) -> Result<u64> {
        if self.c[1..].iter().any(|&x| x != 0) {
            return Err(Error::NotInSubfield);
        }
        Ok(self.c[0])
    }

    fn assert_same_ctx(&self, other: &FieldValue) {
        assert!(
            self.ctx == other.ctx,
            "field context mismatch: {} vs {}",
            self.ctx,
            other.ctx
        );
    }

    pub fn pow(&self, mut e: u128) -> FieldValue {
        let mut acc = self.ctx.one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// The `p`-th power map, a field automorphism fixing the prime field.
    pub fn frobenius(&self) -> FieldValue {
        self.pow(self.ctx.0.p as u128)
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self) -> Result<FieldValue> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let p = self.ctx.0.p;
        match &self.ctx.0.kind {
            CtxKind::Prime => Ok(FieldValue {
                ctx: self.ctx.clone(),
                c: vec![p_pow(p, self.c[0], p - 2)],
            }),
            CtxKind::Ext { base, modulus } => {
                let c = ext_inv_via_gcd(base, modulus, &self.c)?;
                Ok(FieldValue {
                    ctx: self.ctx.clone(),
                    c,
                })
            }
            CtxKind::Tower { base, g0, g1 } => {
                // (a + b s)^-1 = conj / norm with conj = (a - b g1) - b s and
                // norm = a^2 - g1 a b + g0 b^2 in the first layer.
                let d1 = base.degree();
                let (a, b) = self.c.split_at(d1);
                let modulus = base_modulus(base);
                let ab = ext_mul_raw(p, modulus, a, b);
                let a2 = ext_mul_raw(p, modulus, a, a);
                let b2 = ext_mul_raw(p, modulus, b, b);
                let norm = vec_add(
                    p,
                    &vec_sub(p, &a2, &ext_mul_raw(p, modulus, g1, &ab)),
                    &ext_mul_raw(p, modulus, g0, &b2),
                );
                let norm_inv = ext_inv_via_gcd(base, modulus, &norm)?;
                let conj_lo = vec_sub(p, a, &ext_mul_raw(p, modulus, b, g1));
                let conj_hi = vec_neg(p, b);
                let mut c = ext_mul_raw(p, modulus, &conj_lo, &norm_inv);
                c.extend(ext_mul_raw(p, modulus, &conj_hi, &norm_inv));
                Ok(FieldValue {
                    ctx: self.ctx.clone(),
                    c,
                })
            }
        }
    }

    pub fn div(&self, rhs: &FieldValue) -> Result<FieldValue> {
        self.assert_same_ctx(rhs);
        Ok(self * &rhs.inv()?)
    }
}

/// Raw modulus vector of a first-layer context.
fn base_modulus(base: &FieldContext) -> &[u64] {
    match &base.0.kind {
        CtxKind::Ext { modulus, .. } => modulus,
        _ => unreachable!("tower base is always a first-layer extension"),
    }
}

/// Inverse in `F_p[x]/(modulus)` by the extended Euclidean algorithm on
/// polynomials over the prime subfield.
fn ext_inv_via_gcd(prime: &FieldContext, modulus: &[u64], a: &[u64]) -> Result<Vec<u64>> {
    let prime = prime.clone();
    let to_poly = |v: &[u64]| {
        Poly::new(
            prime.clone(),
            v.iter()
                .map(|&x| prime.from_int(x as i64))
                .collect::<Vec<_>>(),
        )
    };
    let a_poly = to_poly(a);
    let m_poly = to_poly(modulus);
    let (g, s, _) = poly::extended_gcd(&a_poly, &m_poly);
    let g_deg = g.degree().ok_or(Error::DivisionByZero)?;
    if g_deg != 0 {
        // cannot happen for an irreducible modulus and nonzero a
        return Err(Error::DivisionByZero);
    }
    let scale = g.coeff(0).inv()?;
    let inv = &s * &Poly::constant(scale);
    let d = modulus.len() - 1;
    let mut out = vec![0u64; d];
    for (i, item) in out.iter_mut().enumerate() {
        *item = inv.coeff(i).c[0];
    }
    Ok(out)
}

impl std::ops::Add for &FieldValue {
    type Output = FieldValue;

    fn add(self, rhs: &FieldValue) -> FieldValue {
        self.assert_same_ctx(rhs);
        FieldValue {
            ctx: self.ctx.clone(),
            c: vec_add(self.ctx.0.p, &self.c, &rhs.c),
        }
    }
}

impl std::ops::Sub for &FieldValue {
    type Output = FieldValue;

    fn sub(self, rhs: &FieldValue) -> FieldValue {
        self.assert_same_ctx(rhs);
        FieldValue {
            ctx: self.ctx.clone(),
            c: vec_sub(self.ctx.0.p, &self.c, &rhs.c),
        }
    }
}

impl std::ops::Neg for &FieldValue {
    type Output = FieldValue;

    fn neg(self) -> FieldValue {
        FieldValue {
            ctx: self.ctx.clone(),
            c: vec_neg(self.ctx.0.p, &self.c),
        }
    }
}

impl std::ops::Mul for &FieldValue {
    type Output = FieldValue;

    fn mul(self, rhs: &FieldValue) -> FieldValue {
        self.assert_same_ctx(rhs);
        let p = self.ctx.0.p;
        let c = match &self.ctx.0.kind {
            CtxKind::Prime => vec![p_mul(p, self.c[0], rhs.c[0])],
            CtxKind::Ext { modulus, .. } => ext_mul_raw(p, modulus, &self.c, &rhs.c),
            CtxKind::Tower { base, g0, g1 } => {
                let d1 = base.degree();
                let modulus = base_modulus(base);
                let (a0, a1) = self.c.split_at(d1);
                let (b0, b1) = rhs.c.split_at(d1);
                let lo_lo = ext_mul_raw(p, modulus, a0, b0);
                let hi_hi = ext_mul_raw(p, modulus, a1, b1);
                let cross = vec_add(
                    p,
                    &ext_mul_raw(p, modulus, a0, b1),
                    &ext_mul_raw(p, modulus, a1, b0),
                );
                // s^2 = -g1 s - g0
                let mut lo = vec_sub(p, &lo_lo, &ext_mul_raw(p, modulus, &hi_hi, g0));
                let hi = vec_sub(p, &cross, &ext_mul_raw(p, modulus, &hi_hi, g1));
                lo.extend(hi);
                lo
            }
        };
        FieldValue {
            ctx: self.ctx.clone(),
            c,
        }
    }
}

impl fmt::Debug for FieldValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for FieldValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ctx.is_prime_field() {
            write!(f, "{}", self.c[0])
        } else {
            write!(f, "[")?;
            for (i, x) in self.c.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn f11() -> FieldContext {
        FieldContext::prime(11).unwrap()
    }

    /// `F_121 = F_11[x]/(x^2 + 1)`; valid since -1 is not a square mod 11.
    fn f121() -> FieldContext {
        let p = f11();
        p.extend(&Poly::from_ints(&p, &[1, 0, 1])).unwrap()
    }

    /// The Artin-Schreier field `F_11[b]` with `b^11 - b + 3 = 0`.
    fn f11_pow_11() -> FieldContext {
        let p = f11();
        let mut coeffs = vec![0i64; 12];
        coeffs[0] = 3;
        coeffs[1] = -1;
        coeffs[11] = 1;
        p.extend(&Poly::from_ints(&p, &coeffs)).unwrap()
    }

    /// Quadratic top layer with a square root of -1 over `F_11[b]`.
    fn tower() -> FieldContext {
        let base = f11_pow_11();
        let modulus = Poly::new(
            base.clone(),
            vec![base.one(), base.zero(), base.one()],
        );
        base.extend(&modulus).unwrap()
    }

    fn random_value(ctx: &FieldContext, rng: &mut ChaCha8Rng) -> FieldValue {
        let coeffs: Vec<i64> = (0..ctx.degree())
            .map(|_| rng.gen_range(0..ctx.characteristic()) as i64)
            .collect();
        ctx.element(&coeffs).unwrap()
    }

    #[test]
    fn rejects_bad_characteristic() {
        assert!(FieldContext::prime(4).is_err());
        assert!(FieldContext::prime(3).is_err());
        assert!(FieldContext::prime(1).is_err());
        assert!(FieldContext::prime(13).is_ok());
    }

    #[test]
    fn prime_field_arithmetic() {
        let k = f11();
        // 3 * 4 = 12 = 1 mod 11
        assert!((&k.from_int(3) * &k.from_int(4)).is_one());
        // 5^-1 = 9 since 45 = 1 mod 11
        assert_eq!(k.from_int(5).inv().unwrap(), k.from_int(9));
        assert!(k.zero().inv().is_err());
        assert_eq!(k.from_int(-1), k.from_int(10));
    }

    #[test]
    fn extension_of_size_121() {
        let k = f121();
        assert_eq!(k.size(), 121);
        assert_eq!(k.degree(), 2);
        // The residue class of x squares to -1.
        let i = k.generator().unwrap();
        assert_eq!(&i * &i, k.from_int(-1));
    }

    #[test]
    fn reducible_modulus_is_rejected() {
        let p = f11();
        // x^2 - 3 has the root 5 (25 = 3 mod 11).
        let m = Poly::from_ints(&p, &[-3, 0, 1]);
        assert!(matches!(p.extend(&m), Err(Error::ReducibleModulus)));
        // Non-monic and degree-1 moduli are rejected up front.
        assert!(p.extend(&Poly::from_ints(&p, &[1, 2])).is_err());
        assert!(p.extend(&Poly::from_ints(&p, &[1, 0, 2])).is_err());
    }

    #[test]
    fn artin_schreier_modulus_gives_degree_11() {
        let k = f11_pow_11();
        assert_eq!(k.degree(), 11);
        assert_eq!(k.size(), 11u128.pow(11));
        // b^11 - b + 3 = 0, i.e. b^11 = b - 3.
        let b = k.generator().unwrap();
        assert_eq!(b.pow(11), &b - &k.from_int(3));
    }

    #[test]
    fn tower_contains_square_root_of_minus_one() {
        let t = tower();
        assert_eq!(t.degree(), 22);
        assert_eq!(t.size(), 11u128.pow(22));
        let s = t.generator().unwrap();
        assert_eq!(&s * &s, t.from_int(-1));
        // b still satisfies its relation after lifting.
        let b = t.lift(&f11_pow_11().generator().unwrap()).unwrap();
        assert_eq!(b.pow(11), &b - &t.from_int(3));
        // and s, b multiply associatively with correct inverses
        let v = &s + &b;
        let w = v.inv().unwrap();
        assert!((&v * &w).is_one());
    }

    #[test]
    fn field_axioms_on_random_triples() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for ctx in [f11(), f121(), f11_pow_11(), tower()] {
            for _ in 0..25 {
                let a = random_value(&ctx, &mut rng);
                let b = random_value(&ctx, &mut rng);
                let c = random_value(&ctx, &mut rng);
                assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
                assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
                assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
                assert_eq!(&a + &b, &b + &a);
                assert_eq!(&a * &b, &b * &a);
                assert_eq!(&a - &a, ctx.zero());
                if !a.is_zero() {
                    assert!((&a * &a.inv().unwrap()).is_one());
                }
            }
        }
    }

    #[test]
    fn frobenius_is_additive_and_iterates_to_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let k = f121();
        for _ in 0..50 {
            let a = random_value(&k, &mut rng);
            let b = random_value(&k, &mut rng);
            assert_eq!((&a + &b).frobenius(), &a.frobenius() + &b.frobenius());
            // Galois group of a degree-2 extension has order 2.
            assert_eq!(a.frobenius().frobenius(), a);
        }
    }

    #[test]
    fn every_value_satisfies_v_pow_q_equals_v() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for ctx in [f11(), f121(), f11_pow_11(), tower()] {
            for _ in 0..10 {
                let v = random_value(&ctx, &mut rng);
                assert_eq!(v.pow(ctx.size()), v);
            }
        }
    }

    #[test]
    fn roots_of_unity() {
        let k121 = f121();
        let zeta = k121.root_of_unity(12).unwrap();
        assert!(zeta.pow(12).is_one());
        assert!(!zeta.pow(6).is_one());
        assert!(!zeta.pow(4).is_one());

        let k = f11();
        // 12 does not divide 10.
        assert!(matches!(
            k.root_of_unity(12),
            Err(Error::NoRootOfUnity { .. })
        ));
        // Exhaustive check over F_11*: the order-5 elements are {3,9,5,4}.
        let r5 = k.root_of_unity(5).unwrap();
        let expected: Vec<u64> = (1..11u64)
            .filter(|&x| {
                (1..5).all(|e| p_pow(11, x, e) != 1) && p_pow(11, x, 5) == 1
            })
            .collect();
        assert_eq!(expected, vec![3, 4, 5, 9]);
        assert!(expected.contains(&r5.as_int().unwrap()));
    }

    #[test]
    fn lift_embeddings() {
        let k = f11();
        let t = tower();
        let five = t.lift(&k.from_int(5)).unwrap();
        assert_eq!(five, t.from_int(5));
        let b = f11_pow_11().generator().unwrap();
        let b_up = t.lift(&b).unwrap();
        assert_eq!(b_up.pow(11), &b_up - &t.from_int(3));
        // 121 does not embed into the Artin-Schreier tower.
        assert!(tower().lift(&f121().generator().unwrap()).is_err());
    }

    #[test]
    fn element_iteration_is_exhaustive_and_ordered() {
        let k = f121();
        let all: Vec<FieldValue> = k.elements().collect();
        assert_eq!(all.len(), 121);
        assert!(all[0].is_zero());
        assert!(all[1].is_one());
        let distinct: std::collections::HashSet<Vec<u64>> =
            all.iter().map(|v| v.coefficients().to_vec()).collect();
        assert_eq!(distinct.len(), 121);
    }
}
