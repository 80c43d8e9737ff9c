//! Homogeneous binary forms in `(t0, t1)`: substitution under 2x2 matrices,
//! factorization over the prime field, and invariant subspaces under base
//! automorphisms.
//!
//! Coefficients are stored from `t0^d` down to `t1^d`. Roots are reported
//! through irreducible factors over the prime field together with their
//! degree (the field of definition), never by enumerating a closure; callers
//! that need explicit coordinates build the named extension themselves.

use std::fmt;

use crate::error::Error;
use crate::ffield::{FieldContext, FieldValue, Matrix, Poly};
use crate::Result;

// ---------------------------------------------------------------------------
// Binary forms
// ---------------------------------------------------------------------------

/// A homogeneous form of fixed degree `d`; the zero form is representable
/// at every degree.
#[derive(Clone, PartialEq, Eq)]
pub struct BinaryForm {
    ctx: FieldContext,
    degree: usize,
    /// `coeffs[i]` multiplies `t0^(d-i) * t1^i`; length `d + 1`.
    coeffs: Vec<FieldValue>,
}

impl BinaryForm {
    pub fn new(ctx: FieldContext, degree: usize, coeffs: Vec<FieldValue>) -> Result<BinaryForm> {
        if coeffs.len() != degree + 1 {
            return Err(Error::DegreeMismatch {
                expected: degree + 1,
                got: coeffs.len(),
            });
        }
        if coeffs.iter().any(|c| c.context() != &ctx) {
            return Err(Error::ContextMismatch);
        }
        Ok(BinaryForm {
            ctx,
            degree,
            coeffs,
        })
    }

    pub fn zero(ctx: &FieldContext, degree: usize) -> BinaryForm {
        BinaryForm {
            ctx: ctx.clone(),
            degree,
            coeffs: vec![ctx.zero(); degree + 1],
        }
    }

    pub fn one(ctx: &FieldContext) -> BinaryForm {
        BinaryForm {
            ctx: ctx.clone(),
            degree: 0,
            coeffs: vec![ctx.one()],
        }
    }

    /// Integer coefficients from `t0^d` down to `t1^d`.
    pub fn from_ints(ctx: &FieldContext, degree: usize, coeffs: &[i64]) -> Result<BinaryForm> {
        if coeffs.len() != degree + 1 {
            return Err(Error::DegreeMismatch {
                expected: degree + 1,
                got: coeffs.len(),
            });
        }
        BinaryForm::new(
            ctx.clone(),
            degree,
            coeffs.iter().map(|&c| ctx.from_int(c)).collect(),
        )
    }

    /// The monomial `c * t0^(d-i) * t1^i` with `i = t1_power`.
    pub fn monomial(
        ctx: &FieldContext,
        degree: usize,
        t1_power: usize,
        coeff: FieldValue,
    ) -> Result<BinaryForm> {
        if t1_power > degree {
            return Err(Error::DegreeMismatch {
                expected: degree,
                got: t1_power,
            });
        }
        let mut f = BinaryForm::zero(ctx, degree);
        f.coeffs[t1_power] = coeff;
        Ok(f)
    }

    pub fn context(&self) -> &FieldContext {
        &self.ctx
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(FieldValue::is_zero)
    }

    /// Coefficient of `t0^(d-i) * t1^i`.
    pub fn coeff(&self, t1_power: usize) -> &FieldValue {
        &self.coeffs[t1_power]
    }

    pub fn coefficients(&self) -> &[FieldValue] {
        &self.coeffs
    }

    pub fn scale(&self, s: &FieldValue) -> BinaryForm {
        BinaryForm {
            ctx: self.ctx.clone(),
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn pow(&self, e: usize) -> BinaryForm {
        let mut acc = BinaryForm::one(&self.ctx);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, t0: &FieldValue, t1: &FieldValue) -> FieldValue {
        let d = self.degree;
        let mut t0_pows = Vec::with_capacity(d + 1);
        let mut t1_pows = Vec::with_capacity(d + 1);
        let mut a = self.ctx.one();
        let mut b = self.ctx.one();
        for _ in 0..=d {
            t0_pows.push(a.clone());
            t1_pows.push(b.clone());
            a = &a * t0;
            b = &b * t1;
        }
        let mut sum = self.ctx.zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                sum = &sum + &(&(c * &t0_pows[d - i]) * &t1_pows[i]);
            }
        }
        sum
    }

    pub fn eval_point(&self, p: &ProjPoint) -> FieldValue {
        self.eval(&p.u, &p.v)
    }

    /// The substituted form `f(L (t0, t1))`, of the same degree, over the
    /// context of `L` (the coefficients of `f` are lifted if needed).
    /// Singular `L` is allowed here; callers needing invertibility check it.
    pub fn substitute(&self, l: &Matrix) -> Result<BinaryForm> {
        if l.rows() != 2 || l.cols() != 2 {
            return Err(Error::DegreeMismatch {
                expected: 2,
                got: l.rows().max(l.cols()),
            });
        }
        let ctx = l.context().clone();
        let f = self.lift_to(&ctx)?;
        let d = f.degree;
        let u = BinaryForm::new(
            ctx.clone(),
            1,
            vec![l.get(0, 0).clone(), l.get(0, 1).clone()],
        )?;
        let v = BinaryForm::new(
            ctx.clone(),
            1,
            vec![l.get(1, 0).clone(), l.get(1, 1).clone()],
        )?;
        let mut u_pows = Vec::with_capacity(d + 1);
        let mut v_pows = Vec::with_capacity(d + 1);
        u_pows.push(BinaryForm::one(&ctx));
        v_pows.push(BinaryForm::one(&ctx));
        for i in 1..=d {
            u_pows.push(&u_pows[i - 1] * &u);
            v_pows.push(&v_pows[i - 1] * &v);
        }
        let mut out = BinaryForm::zero(&ctx, d);
        for (i, c) in f.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = (&u_pows[d - i] * &v_pows[i]).scale(c);
            out = &out + &term;
        }
        Ok(out)
    }

    /// Swaps the variables: `f(t0, t1) -> f(t1, t0)`.
    pub fn swap_vars(&self) -> BinaryForm {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        BinaryForm {
            ctx: self.ctx.clone(),
            degree: self.degree,
            coeffs,
        }
    }

    pub fn derivative_t0(&self) -> BinaryForm {
        let d = self.degree;
        if d == 0 {
            return BinaryForm::zero(&self.ctx, 0);
        }
        let coeffs = (0..d)
            .map(|i| &self.ctx.from_int((d - i) as i64) * &self.coeffs[i])
            .collect();
        BinaryForm {
            ctx: self.ctx.clone(),
            degree: d - 1,
            coeffs,
        }
    }

    pub fn derivative_t1(&self) -> BinaryForm {
        let d = self.degree;
        if d == 0 {
            return BinaryForm::zero(&self.ctx, 0);
        }
        let coeffs = (1..=d)
            .map(|i| &self.ctx.from_int(i as i64) * &self.coeffs[i])
            .collect();
        BinaryForm {
            ctx: self.ctx.clone(),
            degree: d - 1,
            coeffs,
        }
    }

    pub fn lift_to(&self, target: &FieldContext) -> Result<BinaryForm> {
        if &self.ctx == target {
            return Ok(self.clone());
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| target.lift(c))
            .collect::<Result<Vec<_>>>()?;
        BinaryForm::new(target.clone(), self.degree, coeffs)
    }

    /// Index of the last nonzero coefficient (the degree of the
    /// dehomogenization at `t0 = 1`); `None` for the zero form.
    fn top_index(&self) -> Option<usize> {
        (0..self.coeffs.len()).rev().find(|&i| !self.coeffs[i].is_zero())
    }

    /// Dehomogenization `f(1, t)`.
    pub fn dehomogenize(&self) -> Poly {
        Poly::new(self.ctx.clone(), self.coeffs.clone())
    }

    /// Homogenizes `u(t)` back to the form `t0^deg(u) * u(t1/t0)`.
    pub fn homogenize(u: &Poly) -> Result<BinaryForm> {
        let d = u.degree().ok_or(Error::ZeroForm)?;
        BinaryForm::new(
            u.context().clone(),
            d,
            (0..=d).map(|i| u.coeff(i)).collect(),
        )
    }

    /// Multiplicity of the irreducible form `g` in `self` (`self` nonzero).
    pub fn ord_at_factor(&self, g: &BinaryForm) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroForm);
        }
        if g.is_t0() {
            return Ok(self.degree - self.top_index().unwrap());
        }
        let ug = g.dehomogenize();
        let mut uf = self.dehomogenize();
        let mut ord = 0;
        loop {
            if uf.is_zero() {
                return Ok(ord);
            }
            let (q, r) = uf.divrem(&ug)?;
            if !r.is_zero() {
                return Ok(ord);
            }
            ord += 1;
            uf = q;
        }
    }

    /// Multiplicity of the root at the projective point `pt`.
    pub fn ord_at_point(&self, pt: &ProjPoint) -> Result<usize> {
        self.ord_at_factor(&linear_form_through(pt)?)
    }

    fn is_t0(&self) -> bool {
        self.degree == 1 && self.coeffs[0].is_one() && self.coeffs[1].is_zero()
    }

    /// Full factorization into monic irreducible forms over the prime field.
    pub fn factor(&self) -> Result<FactorStructure> {
        if self.is_zero() {
            return Err(Error::ZeroForm);
        }
        if !self.ctx.is_prime_field() {
            return Err(Error::Precondition(
                "factorization is supported over the prime field only".into(),
            ));
        }
        let top = self.top_index().unwrap();
        let t0_mult = self.degree - top;
        let mut factors: Vec<Factor> = Vec::new();
        if t0_mult > 0 {
            factors.push(Factor {
                form: t0_form(&self.ctx),
                degree: 1,
                multiplicity: t0_mult,
            });
        }
        let u = self.dehomogenize();
        let unit = u.leading_coeff().cloned().unwrap_or_else(|| self.ctx.one());
        if u.degree().unwrap_or(0) > 0 {
            let monic = u.monic()?;
            for (irr, mult) in factor_univariate(&monic)? {
                let form = BinaryForm::homogenize(&irr)?;
                let degree = form.degree();
                factors.push(Factor {
                    form,
                    degree,
                    multiplicity: mult,
                });
            }
        }
        factors.sort_by_key(|f| {
            (
                f.degree,
                f.multiplicity,
                f.form
                    .coefficients()
                    .iter()
                    .map(|c| c.coefficients().to_vec())
                    .collect::<Vec<_>>(),
            )
        });
        Ok(FactorStructure {
            original_degree: self.degree,
            unit,
            factors,
        })
    }

    /// Parses expressions like `t0^2*t1^10 - 3*t0^12` over `ctx`.
    /// All terms must have the same total degree.
    pub fn parse(ctx: &FieldContext, input: &str) -> Result<BinaryForm> {
        parse_form(ctx, input)
    }
}

impl std::ops::Add for &BinaryForm {
    type Output = BinaryForm;

    fn add(self, rhs: &BinaryForm) -> BinaryForm {
        assert!(self.ctx == rhs.ctx, "form context mismatch");
        assert_eq!(self.degree, rhs.degree, "form degree mismatch");
        BinaryForm {
            ctx: self.ctx.clone(),
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl std::ops::Sub for &BinaryForm {
    type Output = BinaryForm;

    fn sub(self, rhs: &BinaryForm) -> BinaryForm {
        assert!(self.ctx == rhs.ctx, "form context mismatch");
        assert_eq!(self.degree, rhs.degree, "form degree mismatch");
        BinaryForm {
            ctx: self.ctx.clone(),
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl std::ops::Neg for &BinaryForm {
    type Output = BinaryForm;

    fn neg(self) -> BinaryForm {
        BinaryForm {
            ctx: self.ctx.clone(),
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl std::ops::Mul for &BinaryForm {
    type Output = BinaryForm;

    fn mul(self, rhs: &BinaryForm) -> BinaryForm {
        assert!(self.ctx == rhs.ctx, "form context mismatch");
        let d = self.degree + rhs.degree;
        let mut coeffs = vec![self.ctx.zero(); d + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        BinaryForm {
            ctx: self.ctx.clone(),
            degree: d,
            coeffs,
        }
    }
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let d = self.degree;
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mut parts: Vec<String> = Vec::new();
            if !c.is_one() || i == 0 && d == 0 {
                parts.push(c.to_string());
            }
            for (var, pow) in [("t0", d - i), ("t1", i)] {
                match pow {
                    0 => {}
                    1 => parts.push(var.to_string()),
                    _ => parts.push(format!("{var}^{pow}")),
                }
            }
            if parts.is_empty() {
                parts.push(c.to_string());
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The form `t0` (the linear form vanishing at `(0:1)`).
pub fn t0_form(ctx: &FieldContext) -> BinaryForm {
    BinaryForm::from_ints(ctx, 1, &[1, 0]).unwrap()
}

/// The monic linear form vanishing at `pt`.
pub fn linear_form_through(pt: &ProjPoint) -> Result<BinaryForm> {
    let ctx = pt.u.context().clone();
    if pt.u.is_zero() {
        return Ok(t0_form(&ctx));
    }
    // pt = (1 : v); the monic convention puts coefficient 1 on t1: t1 - v*t0.
    BinaryForm::new(ctx.clone(), 1, vec![-&pt.v, ctx.one()])
}

// ---------------------------------------------------------------------------
// Projective points
// ---------------------------------------------------------------------------

/// A point of the projective line, normalized so that the first nonzero
/// coordinate is 1.
#[derive(Clone, PartialEq, Eq)]
pub struct ProjPoint {
    u: FieldValue,
    v: FieldValue,
}

impl ProjPoint {
    pub fn new(u: FieldValue, v: FieldValue) -> Result<ProjPoint> {
        if u.context() != v.context() {
            return Err(Error::ContextMismatch);
        }
        if u.is_zero() && v.is_zero() {
            return Err(Error::Precondition(
                "(0:0) is not a projective point".into(),
            ));
        }
        if !u.is_zero() {
            let s = u.inv()?;
            Ok(ProjPoint {
                u: u.context().one(),
                v: &v * &s,
            })
        } else {
            Ok(ProjPoint {
                u,
                v: v.context().one(),
            })
        }
    }

    pub fn from_ints(ctx: &FieldContext, u: i64, v: i64) -> Result<ProjPoint> {
        ProjPoint::new(ctx.from_int(u), ctx.from_int(v))
    }

    /// The point `(0 : 1)`, the base point at infinity of the pencil.
    pub fn infinity(ctx: &FieldContext) -> ProjPoint {
        ProjPoint {
            u: ctx.zero(),
            v: ctx.one(),
        }
    }

    pub fn is_infinity(&self) -> bool {
        self.u.is_zero()
    }

    pub fn coords(&self) -> (&FieldValue, &FieldValue) {
        (&self.u, &self.v)
    }

    pub fn context(&self) -> &FieldContext {
        self.u.context()
    }

    /// Image under a 2x2 matrix acting by
    /// `(t0, t1) -> (L00 t0 + L01 t1, L10 t0 + L11 t1)`.
    pub fn apply_matrix(&self, l: &Matrix) -> Result<ProjPoint> {
        let ctx = l.context();
        let u = ctx.lift(&self.u)?;
        let v = ctx.lift(&self.v)?;
        ProjPoint::new(
            &(l.get(0, 0) * &u) + &(l.get(0, 1) * &v),
            &(l.get(1, 0) * &u) + &(l.get(1, 1) * &v),
        )
    }

    /// All `q + 1` points of the projective line over a small context:
    /// `(1 : v)` for each field element `v`, then `(0 : 1)`.
    pub fn all_points(ctx: &FieldContext) -> Vec<ProjPoint> {
        let mut pts: Vec<ProjPoint> = ctx
            .elements()
            .map(|v| ProjPoint { u: ctx.one(), v })
            .collect();
        pts.push(ProjPoint::infinity(ctx));
        pts
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}:{})", self.u, self.v)
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

// ---------------------------------------------------------------------------
// Factor structures
// ---------------------------------------------------------------------------

/// One irreducible factor with its degree and multiplicity.
#[derive(Clone, Debug)]
pub struct Factor {
    pub form: BinaryForm,
    pub degree: usize,
    pub multiplicity: usize,
}

/// Factorization of a nonzero form over the prime field:
/// `unit * prod factors[i].form ^ factors[i].multiplicity`.
#[derive(Clone, Debug)]
pub struct FactorStructure {
    original_degree: usize,
    unit: FieldValue,
    factors: Vec<Factor>,
}

impl FactorStructure {
    pub fn unit(&self) -> &FieldValue {
        &self.unit
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    /// Rebuilds the factored form exactly, at its original degree.
    pub fn reassemble(&self) -> BinaryForm {
        let ctx = self.unit.context();
        let mut acc = BinaryForm::one(ctx).scale(&self.unit);
        for f in &self.factors {
            acc = &acc * &f.form.pow(f.multiplicity);
        }
        assert_eq!(
            acc.degree(),
            self.original_degree,
            "factorization lost degree"
        );
        acc
    }

    /// Number of distinct roots in an algebraic closure: sum of factor degrees.
    pub fn distinct_root_count(&self) -> usize {
        self.factors.iter().map(|f| f.degree).sum()
    }

    /// Rational roots (from the linear factors) with multiplicities.
    pub fn rational_roots(&self) -> Vec<(ProjPoint, usize)> {
        self.factors
            .iter()
            .filter(|f| f.degree == 1)
            .map(|f| (root_of_linear(&f.form), f.multiplicity))
            .collect()
    }
}

/// The projective root of a nonzero linear form `a*t0 + b*t1`.
pub fn root_of_linear(f: &BinaryForm) -> ProjPoint {
    assert_eq!(f.degree(), 1, "root_of_linear needs a linear form");
    let a = f.coeff(0);
    let b = f.coeff(1);
    ProjPoint::new(b.clone(), -a).expect("linear form is nonzero")
}

// ---------------------------------------------------------------------------
// Invariant forms
// ---------------------------------------------------------------------------

/// Basis of `{f of degree d : f(L t) = f}`, the kernel of the substitution
/// operator minus the identity on the `(d+1)`-dimensional space of forms.
pub fn invariant_forms(degree: usize, l: &Matrix) -> Result<Vec<BinaryForm>> {
    if !l.is_invertible() {
        return Err(Error::SingularMatrix);
    }
    let ctx = l.context().clone();
    let n = degree + 1;
    let mut op = Matrix::identity(&ctx, n);
    for j in 0..n {
        let monomial = BinaryForm::monomial(&ctx, degree, j, ctx.one())?;
        let image = monomial.substitute(l)?;
        for i in 0..n {
            let mut e = image.coeff(i).clone();
            if i == j {
                e = &e - &ctx.one();
            }
            op.set(i, j, e);
        }
    }
    op.kernel()
        .into_iter()
        .map(|v| BinaryForm::new(ctx.clone(), degree, v))
        .collect()
}

// ---------------------------------------------------------------------------
// Univariate factorization over the prime field
// ---------------------------------------------------------------------------

/// Factors a monic nonconstant polynomial over `F_p` into monic
/// irreducibles with multiplicities.
fn factor_univariate(f: &Poly) -> Result<Vec<(Poly, usize)>> {
    let mut out = Vec::new();
    for (part, mult) in squarefree_parts(f)? {
        for irr in split_squarefree(&part)? {
            out.push((irr, mult));
        }
    }
    Ok(out)
}

/// Squarefree decomposition in characteristic `p`: pairwise coprime monic
/// squarefree polynomials with their multiplicities.
fn squarefree_parts(f: &Poly) -> Result<Vec<(Poly, usize)>> {
    let mut out = Vec::new();
    squarefree_rec(f, 1, &mut out)?;
    Ok(out)
}

fn squarefree_rec(f: &Poly, base_mult: usize, out: &mut Vec<(Poly, usize)>) -> Result<()> {
    if f.degree() == Some(0) {
        return Ok(());
    }
    let df = f.derivative();
    if df.is_zero() {
        // f = g(x^p); over F_p each coefficient is its own p-th root.
        let g = pth_root(f)?;
        let p = f.context().characteristic() as usize;
        return squarefree_rec(&g, base_mult * p, out);
    }
    let mut c = f.gcd(&df);
    let mut w = f.divrem(&c)?.0;
    let mut i = 1usize;
    while w.degree() != Some(0) {
        let y = w.gcd(&c);
        let z = w.divrem(&y)?.0;
        if z.degree() != Some(0) {
            out.push((z, base_mult * i));
        }
        c = c.divrem(&y)?.0;
        w = y;
        i += 1;
    }
    if c.degree() != Some(0) {
        let g = pth_root(&c)?;
        let p = f.context().characteristic() as usize;
        squarefree_rec(&g, base_mult * p, out)?;
    }
    Ok(())
}

/// The `p`-th root of a polynomial whose derivative vanishes.
fn pth_root(f: &Poly) -> Result<Poly> {
    let ctx = f.context().clone();
    let p = ctx.characteristic() as usize;
    let d = f.degree().ok_or(Error::ZeroForm)?;
    for i in 0..=d {
        if i % p != 0 && !f.coeff(i).is_zero() {
            return Err(Error::Precondition(
                "pth_root of a polynomial with nonzero derivative".into(),
            ));
        }
    }
    let coeffs = (0..=d).step_by(p).map(|i| f.coeff(i)).collect();
    Ok(Poly::new(ctx, coeffs))
}

/// Splits a monic squarefree polynomial into monic irreducibles: rational
/// roots by scanning `F_p`, then distinct-degree and equal-degree stages.
fn split_squarefree(f: &Poly) -> Result<Vec<Poly>> {
    let ctx = f.context().clone();
    let p = ctx.characteristic();
    let mut out = Vec::new();
    let mut rest = f.clone();
    for a in 0..p {
        if rest.degree() == Some(0) {
            break;
        }
        let v = ctx.from_int(a as i64);
        if rest.eval(&v).is_zero() {
            let root_factor = Poly::new(ctx.clone(), vec![-&v, ctx.one()]);
            rest = rest.divrem(&root_factor)?.0;
            out.push(root_factor);
        }
    }
    if rest.degree() == Some(0) {
        return Ok(out);
    }
    let x = Poly::x(&ctx);
    let mut h = x.clone();
    let mut d = 1usize;
    while rest.degree().unwrap_or(0) >= 2 * d {
        h = h.pow_mod(ctx.size(), &rest)?;
        let g = (&h - &x).gcd(&rest);
        if g.degree() != Some(0) {
            rest = rest.divrem(&g)?.0;
            h = h.rem(&rest)?;
            equal_degree_split(&g, d, &mut out)?;
        }
        d += 1;
    }
    if rest.degree() != Some(0) {
        out.push(rest);
    }
    Ok(out)
}

/// Cantor-Zassenhaus equal-degree splitting with a deterministic sweep of
/// splitting elements (`x + a`, then monic quadratics), ample at this field
/// size since each candidate splits with probability about one half.
fn equal_degree_split(f: &Poly, d: usize, out: &mut Vec<Poly>) -> Result<()> {
    let deg = f.degree().unwrap();
    if deg == d {
        out.push(f.clone());
        return Ok(());
    }
    let ctx = f.context().clone();
    let p = ctx.characteristic();
    let q_to_d = ctx
        .size()
        .checked_pow(d as u32)
        .ok_or_else(|| Error::Precondition("field power overflow in splitting".into()))?;
    let exp = (q_to_d - 1) / 2;
    let one = Poly::constant(ctx.one());
    let mut candidates: Vec<Poly> = (0..p).map(|a| Poly::from_ints(&ctx, &[a as i64, 1])).collect();
    for a in 0..p {
        for b in 0..p {
            candidates.push(Poly::from_ints(&ctx, &[a as i64, b as i64, 1]));
        }
    }
    for r in candidates {
        let s = &r.pow_mod(exp, f)? - &one;
        let g = s.gcd(f);
        if let Some(gd) = g.degree() {
            if gd > 0 && gd < deg {
                equal_degree_split(&g, d, out)?;
                equal_degree_split(&f.divrem(&g)?.0, d, out)?;
                return Ok(());
            }
        }
    }
    Err(Error::Precondition(
        "equal-degree splitting exhausted its candidates".into(),
    ))
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

fn parse_form(ctx: &FieldContext, input: &str) -> Result<BinaryForm> {
    let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty form".into()));
    }
    let mut terms: Vec<(i64, String)> = Vec::new();
    let mut sign = 1i64;
    let mut cur = String::new();
    let mut chars = compact.chars().peekable();
    match chars.peek() {
        Some('-') => {
            sign = -1;
            chars.next();
        }
        Some('+') => {
            chars.next();
        }
        _ => {}
    }
    for ch in chars {
        match ch {
            '+' => {
                terms.push((sign, std::mem::take(&mut cur)));
                sign = 1;
            }
            '-' => {
                terms.push((sign, std::mem::take(&mut cur)));
                sign = -1;
            }
            _ => cur.push(ch),
        }
    }
    terms.push((sign, cur));

    struct Term {
        coeff: i64,
        e0: usize,
        e1: usize,
    }
    let mut parsed = Vec::new();
    for (sign, body) in terms {
        if body.is_empty() {
            return Err(Error::Parse(format!("dangling sign in '{input}'")));
        }
        let mut coeff = 1i64;
        let mut e0 = 0usize;
        let mut e1 = 0usize;
        for piece in body.split('*').flat_map(split_implicit) {
            if piece.is_empty() {
                return Err(Error::Parse(format!("empty factor in '{input}'")));
            }
            if let Some(rest) = piece.strip_prefix("t0") {
                e0 += parse_power(rest, input)?;
            } else if let Some(rest) = piece.strip_prefix("t1") {
                e1 += parse_power(rest, input)?;
            } else {
                let n: i64 = piece
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad factor '{piece}' in '{input}'")))?;
                coeff = coeff.wrapping_mul(n);
            }
        }
        parsed.push(Term {
            coeff: sign * coeff,
            e0,
            e1,
        });
    }
    if parsed.iter().all(|t| t.coeff == 0) {
        return Err(Error::Parse(
            "cannot infer a degree for the zero form; build it directly".into(),
        ));
    }
    let degree = parsed.iter().map(|t| t.e0 + t.e1).max().expect("nonempty");
    for t in &parsed {
        if t.e0 + t.e1 != degree {
            return Err(Error::Parse(format!(
                "'{input}' is not homogeneous: degrees {} and {degree}",
                t.e0 + t.e1
            )));
        }
    }
    let mut f = BinaryForm::zero(ctx, degree);
    for t in parsed {
        let add = BinaryForm::monomial(ctx, degree, t.e1, ctx.from_int(t.coeff))?;
        f = &f + &add;
    }
    Ok(f)
}

/// Splits a piece like `3t0` into `3` and `t0` when the `*` was omitted.
fn split_implicit(piece: &str) -> Vec<String> {
    if let Some(pos) = piece.find('t') {
        if pos > 0 {
            return vec![piece[..pos].to_string(), piece[pos..].to_string()];
        }
    }
    vec![piece.to_string()]
}

fn parse_power(rest: &str, input: &str) -> Result<usize> {
    if rest.is_empty() {
        return Ok(1);
    }
    rest.strip_prefix('^')
        .and_then(|e| e.parse::<usize>().ok())
        .ok_or_else(|| Error::Parse(format!("bad exponent '{rest}' in '{input}'")))
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

    fn random_form(ctx: &FieldContext, degree: usize, rng: &mut ChaCha8Rng) -> BinaryForm {
        let coeffs: Vec<i64> = (0..=degree)
            .map(|_| rng.gen_range(0..ctx.characteristic()) as i64)
            .collect();
        BinaryForm::from_ints(ctx, degree, &coeffs).unwrap()
    }

    fn random_matrix(ctx: &FieldContext, rng: &mut ChaCha8Rng) -> Matrix {
        loop {
            let m = Matrix::from_ints2(
                ctx,
                [
                    rng.gen_range(0..11),
                    rng.gen_range(0..11),
                    rng.gen_range(0..11),
                    rng.gen_range(0..11),
                ],
            );
            if m.is_invertible() {
                return m;
            }
        }
    }

    /// `t0*t1^11 - t0^11*t1`, the degree-12 base form of the pencil.
    fn pencil_form(ctx: &FieldContext) -> BinaryForm {
        let mut c = vec![0i64; 13];
        c[11] = 1;
        c[1] = -1;
        BinaryForm::from_ints(ctx, 12, &c).unwrap()
    }

    #[test]
    fn identity_substitution_is_identity() {
        let k = f11();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let f = random_form(&k, 7, &mut rng);
        let id = Matrix::identity(&k, 2);
        assert_eq!(f.substitute(&id).unwrap(), f);
    }

    #[test]
    fn substitution_matches_pointwise_evaluation() {
        // Independent oracle: (f o L)(P) must equal f(L P) at every point.
        let k = f11();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..5 {
            let f = random_form(&k, 5, &mut rng);
            let l = random_matrix(&k, &mut rng);
            let fl = f.substitute(&l).unwrap();
            for t0 in 0..11 {
                for t1 in 0..11 {
                    let u = k.from_int(t0);
                    let v = k.from_int(t1);
                    let lu = &(l.get(0, 0) * &u) + &(l.get(0, 1) * &v);
                    let lv = &(l.get(1, 0) * &u) + &(l.get(1, 1) * &v);
                    assert_eq!(fl.eval(&u, &v), f.eval(&lu, &lv));
                }
            }
        }
    }

    #[test]
    fn substitution_is_a_right_action() {
        let k = f11();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let f = random_form(&k, 6, &mut rng);
            let l = random_matrix(&k, &mut rng);
            let m = random_matrix(&k, &mut rng);
            let lm = l.mul(&m).unwrap();
            assert_eq!(
                f.substitute(&lm).unwrap(),
                f.substitute(&l).unwrap().substitute(&m).unwrap()
            );
        }
    }

    #[test]
    fn pencil_form_is_invariant_under_shear() {
        // t1 -> t0 + t1 fixes t0*t1^11 - t0^11*t1 because the 11th power
        // map is additive in characteristic 11.
        let k = f11();
        let f = pencil_form(&k);
        let shear = Matrix::from_ints2(&k, [1, 0, 1, 1]);
        assert_eq!(f.substitute(&shear).unwrap(), f);
    }

    #[test]
    fn pencil_form_diagonalizes_over_f121() {
        let k = f11();
        let f121 = k.extend(&Poly::from_ints(&k, &[1, 0, 1])).unwrap();
        let f = pencil_form(&k);
        for alpha_coeffs in [[3i64, 1], [0, 1], [7, 5]] {
            let alpha = f121.element(&alpha_coeffs).unwrap();
            let a11 = alpha.pow(11);
            let l = Matrix::new(
                f121.clone(),
                2,
                2,
                vec![a11.clone(), alpha.clone(), f121.one(), f121.one()],
            )
            .unwrap();
            let g = f.substitute(&l).unwrap();
            for i in 1..12 {
                assert!(g.coeff(i).is_zero(), "cross coefficient {i} nonzero");
            }
            let lambda = &a11 - &alpha;
            assert_eq!(g.coeff(0), &lambda);
            assert_eq!(g.coeff(12), &(-&lambda));
        }
    }

    #[test]
    fn factor_of_t0_cubed() {
        let k = f11();
        let f = BinaryForm::from_ints(&k, 3, &[1, 0, 0, 0]).unwrap();
        let fs = f.factor().unwrap();
        assert_eq!(fs.factors().len(), 1);
        assert_eq!(fs.factors()[0].multiplicity, 3);
        assert_eq!(fs.factors()[0].degree, 1);
        let (root, mult) = &fs.rational_roots()[0];
        assert!(root.is_infinity());
        assert_eq!(*mult, 3);
        assert!(BinaryForm::zero(&k, 4).factor().is_err());
    }

    #[test]
    fn factor_reassembles_randomized_products() {
        let k = f11();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..15 {
            let d = rng.gen_range(1..9);
            let f = random_form(&k, d, &mut rng);
            if f.is_zero() {
                continue;
            }
            let fs = f.factor().unwrap();
            assert_eq!(fs.reassemble(), f);
            let weighted: usize = fs
                .factors()
                .iter()
                .map(|x| x.degree * x.multiplicity)
                .sum();
            assert_eq!(weighted, d, "factor degrees must sum to the form degree");
        }
    }

    #[test]
    fn factor_with_artin_schreier_part() {
        // t0^2 * (t1^11 - t1*t0^10 + 3*t0^11): a square times a degree-11
        // irreducible (no roots in F_11, Artin-Schreier shape).
        let k = f11();
        let inner = BinaryForm::parse(&k, "t1^11 - t1*t0^10 + 3*t0^11").unwrap();
        let t0 = t0_form(&k);
        let f = &(&t0 * &t0) * &inner;
        let fs = f.factor().unwrap();
        let degrees: Vec<(usize, usize)> = fs
            .factors()
            .iter()
            .map(|x| (x.degree, x.multiplicity))
            .collect();
        assert_eq!(degrees, vec![(1, 2), (11, 1)]);
        assert_eq!(fs.reassemble(), f);
    }

    #[test]
    fn squarefree_structure_of_fully_degenerate_shape() {
        // -5 * t0^2 * (t1^11 - t1*t0^10)^2 has 12 double roots over F_11.
        let k = f11();
        let base = BinaryForm::parse(&k, "t1^11 - t1*t0^10").unwrap();
        let t0 = t0_form(&k);
        let f = (&(&t0 * &t0) * &(&base * &base)).scale(&k.from_int(-5));
        let fs = f.factor().unwrap();
        assert_eq!(fs.distinct_root_count(), 12);
        assert!(fs.factors().iter().all(|x| x.multiplicity == 2));
        assert!(fs.factors().iter().all(|x| x.degree == 1));
        assert_eq!(fs.unit(), &k.from_int(-5));
        assert_eq!(fs.reassemble(), f);
    }

    #[test]
    fn ord_at_factor_and_point() {
        let k = f11();
        let f = BinaryForm::parse(&k, "t0^3*t1^2 - 2*t0^5").unwrap();
        assert_eq!(f.ord_at_point(&ProjPoint::infinity(&k)).unwrap(), 3);
        let zero_pt = ProjPoint::from_ints(&k, 1, 0).unwrap();
        assert_eq!(f.ord_at_point(&zero_pt).unwrap(), 2);
        let one_pt = ProjPoint::from_ints(&k, 1, 1).unwrap();
        assert_eq!(f.ord_at_point(&one_pt).unwrap(), 0);
    }

    #[test]
    fn invariant_forms_under_shear() {
        let k = f11();
        let shear = Matrix::from_ints2(&k, [1, 0, 1, 1]);
        // degree 8: only multiples of t0^8 survive
        let basis8 = invariant_forms(8, &shear).unwrap();
        assert_eq!(basis8.len(), 1);
        let b = &basis8[0];
        assert_eq!(b.substitute(&shear).unwrap(), *b);
        for i in 1..=8 {
            assert!(b.coeff(i).is_zero());
        }
        // degree 12: dimension 2, spanned by t0^12 and t0*t1^11 - t0^11*t1
        let basis12 = invariant_forms(12, &shear).unwrap();
        assert_eq!(basis12.len(), 2);
        let t0_12 = BinaryForm::parse(&k, "t0^12").unwrap();
        let pencil = pencil_form(&k);
        for b in &basis12 {
            assert_eq!(b.substitute(&shear).unwrap(), *b);
            let mut found = false;
            'outer: for c0 in 0..11 {
                for c1 in 0..11 {
                    let cand = &t0_12.scale(&k.from_int(c0)) + &pencil.scale(&k.from_int(c1));
                    if &cand == b {
                        found = true;
                        break 'outer;
                    }
                }
            }
            assert!(found, "kernel vector outside the expected span");
        }
        // degree 2 under the identity: everything is invariant
        let id = Matrix::identity(&k, 2);
        assert_eq!(invariant_forms(2, &id).unwrap().len(), 3);
        let sing = Matrix::from_ints2(&k, [1, 2, 2, 4]);
        assert!(matches!(
            invariant_forms(4, &sing),
            Err(Error::SingularMatrix)
        ));
    }

    #[test]
    fn parse_and_display() {
        let k = f11();
        let f = BinaryForm::parse(&k, "t0^2*t1^10 - 3*t0^12").unwrap();
        assert_eq!(f.degree(), 12);
        assert_eq!(f.coeff(10), &k.from_int(1));
        assert_eq!(f.coeff(0), &k.from_int(-3));
        assert!(BinaryForm::parse(&k, "t0^2 + t1").is_err());
        assert!(BinaryForm::parse(&k, "t2^2").is_err());
        let round = BinaryForm::parse(&k, &f.to_string()).unwrap();
        assert_eq!(round, f);
    }
}
