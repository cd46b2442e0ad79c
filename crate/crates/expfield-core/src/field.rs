//! Exact arithmetic in the fraction field of a presented quotient
//! domain Q[x_1..x_m]/I, with I a declared-prime ideal.
//!
//! An element is a numerator/denominator pair of polynomials, both kept
//! in normal form modulo a fixed reduced Gröbner basis of I. Zero tests
//! are ideal membership, never numeric. Equality is decided by
//! cross-multiplication, so no gcd computation in the quotient ring is
//! needed.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ideal::{GroebnerBasis, GroebnerConfig, Ideal};
use crate::linalg::Scalar;
use crate::poly::{MonomialOrder, Poly};
use crate::rational::Rat;

/// Shared context for field arithmetic: the ambient variables, their
/// names, and the reduced Gröbner basis of the relation ideal.
#[derive(Debug)]
pub struct FieldCtx {
    pub names: Vec<String>,
    pub gb: GroebnerBasis,
    pub config: GroebnerConfig,
}

impl FieldCtx {
    pub fn new(names: Vec<String>, relations: Ideal, config: GroebnerConfig) -> Result<Arc<Self>> {
        assert_eq!(names.len(), relations.nvars);
        let gb = relations.groebner(MonomialOrder::GrevLex, &config)?;
        Ok(Arc::new(FieldCtx { names, gb, config }))
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// An element of the presented fraction field.
#[derive(Clone)]
pub struct FieldElement {
    ctx: Arc<FieldCtx>,
    num: Poly,
    den: Poly,
}

impl FieldElement {
    /// Build num/den, normalizing both modulo the ideal. Errors if the
    /// denominator reduces to zero.
    pub fn new(ctx: Arc<FieldCtx>, num: Poly, den: Poly) -> Result<Self> {
        let num = ctx.gb.normal_form(&num);
        let den = ctx.gb.normal_form(&den);
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(ctx, num, den))
    }

    fn normalized(ctx: Arc<FieldCtx>, num: Poly, den: Poly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            let one = Poly::one(ctx.nvars());
            return FieldElement { ctx, num, den: one };
        }
        // leading coefficient of the denominator's normal form is 1
        let (_, lc) = den.leading_term(MonomialOrder::GrevLex).unwrap();
        let inv: Rat = <Rat as num_traits::One>::one() / lc;
        let num = num.scale(&inv);
        let den = den.scale(&inv);
        FieldElement { ctx, num, den }
    }

    pub fn from_poly(ctx: Arc<FieldCtx>, p: Poly) -> Self {
        let num = ctx.gb.normal_form(&p);
        let den = Poly::one(ctx.nvars());
        FieldElement { ctx, num, den }
    }

    pub fn zero(ctx: Arc<FieldCtx>) -> Self {
        let n = ctx.nvars();
        FieldElement {
            ctx,
            num: Poly::zero(n),
            den: Poly::one(n),
        }
    }

    pub fn one(ctx: Arc<FieldCtx>) -> Self {
        let n = ctx.nvars();
        FieldElement {
            ctx,
            num: Poly::one(n),
            den: Poly::one(n),
        }
    }

    pub fn generator(ctx: Arc<FieldCtx>, i: usize) -> Self {
        let p = Poly::var(ctx.nvars(), i);
        Self::from_poly(ctx, p)
    }

    pub fn rational(ctx: Arc<FieldCtx>, q: Rat) -> Self {
        let p = Poly::constant(ctx.nvars(), q);
        Self::from_poly(ctx, p)
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn same_ctx(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.ctx, &other.ctx),
            "field elements from different presentations"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.same_ctx(other);
        let num = self
            .num
            .mul(&other.den)
            .add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        Self::normalized(
            self.ctx.clone(),
            self.ctx.gb.normal_form(&num),
            self.ctx.gb.normal_form(&den),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        FieldElement {
            ctx: self.ctx.clone(),
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.same_ctx(other);
        Self::normalized(
            self.ctx.clone(),
            self.ctx.gb.normal_form(&self.num.mul(&other.num)),
            self.ctx.gb.normal_form(&self.den.mul(&other.den)),
        )
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.same_ctx(other);
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(
            self.ctx.clone(),
            self.ctx.gb.normal_form(&self.num.mul(&other.den)),
            self.ctx.gb.normal_form(&self.den.mul(&other.num)),
        ))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(
            self.ctx.clone(),
            self.den.clone(),
            self.num.clone(),
        ))
    }

    pub fn scale(&self, q: &Rat) -> Self {
        Self::normalized(self.ctx.clone(), self.num.scale(q), self.den.clone())
    }

    /// Integer power; negative exponents invert (error on zero base).
    pub fn powi(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut r = Self::one(self.ctx.clone());
        for _ in 0..e.unsigned_abs() {
            r = r.mul(&base);
        }
        Ok(r)
    }
}

impl PartialEq for FieldElement {
    /// Exact equality in the fraction field by cross-multiplication.
    fn eq(&self, other: &Self) -> bool {
        self.same_ctx(other);
        let diff = self.num.mul(&other.den).sub(&other.num.mul(&self.den));
        self.ctx.gb.contains(&diff)
    }
}

impl Eq for FieldElement {}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.num.display(&self.ctx.names);
        if self.den.is_constant() {
            // den is monic, so a constant denominator is exactly 1
            write!(f, "{}", num)
        } else {
            write!(f, "({})/({})", num, self.den.display(&self.ctx.names))
        }
    }
}

impl Scalar for FieldElement {
    fn is_zero(&self) -> bool {
        FieldElement::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        FieldElement::zero(self.ctx.clone())
    }
    fn one_like(&self) -> Self {
        FieldElement::one(self.ctx.clone())
    }
    fn add(&self, other: &Self) -> Self {
        FieldElement::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        FieldElement::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        FieldElement::mul(self, other)
    }
    fn div(&self, other: &Self) -> Self {
        FieldElement::div(self, other).expect("division by zero pivot in exact elimination")
    }
    fn neg(&self) -> Self {
        FieldElement::neg(self)
    }
}
