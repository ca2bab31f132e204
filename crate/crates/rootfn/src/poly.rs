//! Exact multivariate polynomials over a paired variable context.
//!
//! Terms live in a `BTreeMap` keyed by grevlex-ordered monomials, so every
//! polynomial is canonical by construction: no zero coefficients are stored,
//! and iteration order (hence printing) is deterministic. Values are
//! immutable; all operations return new polynomials.

use std::collections::BTreeMap;
use std::fmt;

use crate::context::{Block, VarContext};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::monomial::Monomial;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    context: VarContext,
    field: FieldSpec,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    /// Build a polynomial from `(exponent vector, coefficient)` pairs.
    ///
    /// Exponent vectors must have length 2n (x-block then y-block).
    /// Duplicate monomials are summed; zero coefficients are dropped.
    pub fn new(
        context: &VarContext,
        field: &FieldSpec,
        terms: Vec<(Vec<u32>, Scalar)>,
    ) -> Result<Self> {
        let mut map: BTreeMap<Monomial, Scalar> = BTreeMap::new();
        for (exps, coeff) in terms {
            if exps.len() != 2 * context.n() {
                return Err(Error::ArityMismatch {
                    expected: 2 * context.n(),
                    got: exps.len(),
                });
            }
            field.validate(&coeff)?;
            let mono = Monomial::new(exps);
            let entry = map.entry(mono).or_insert_with(|| field.zero());
            *entry = field.add(entry, &coeff);
        }
        map.retain(|_, c| !field.is_zero(c));
        Ok(Polynomial {
            context: context.clone(),
            field: *field,
            terms: map,
        })
    }

    /// Like [`Polynomial::new`] but taking x-block exponents only.
    pub fn from_x_terms(
        context: &VarContext,
        field: &FieldSpec,
        terms: Vec<(Vec<u32>, Scalar)>,
    ) -> Result<Self> {
        let n = context.n();
        let full = terms
            .into_iter()
            .map(|(x, c)| {
                let mut exps = vec![0u32; 2 * n];
                if x.len() != n {
                    // let `new` report the mismatch with the right arity
                    return (x, c);
                }
                exps[..n].copy_from_slice(&x);
                (exps, c)
            })
            .collect();
        Self::new(context, field, full)
    }

    pub(crate) fn from_map(
        context: &VarContext,
        field: &FieldSpec,
        mut terms: BTreeMap<Monomial, Scalar>,
    ) -> Self {
        terms.retain(|_, c| !field.is_zero(c));
        Polynomial {
            context: context.clone(),
            field: *field,
            terms,
        }
    }

    pub fn zero(context: &VarContext, field: &FieldSpec) -> Self {
        Polynomial {
            context: context.clone(),
            field: *field,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(context: &VarContext, field: &FieldSpec) -> Self {
        Self::constant(context, field, field.one())
    }

    pub fn constant(context: &VarContext, field: &FieldSpec, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !field.is_zero(&c) {
            terms.insert(Monomial::one(context.n()), c);
        }
        Polynomial {
            context: context.clone(),
            field: *field,
            terms,
        }
    }

    /// The variable `x_i`.
    pub fn x_var(context: &VarContext, field: &FieldSpec, i: usize) -> Self {
        Self::monomial_term(context, field, Monomial::x_var(context.n(), i), field.one())
    }

    /// The variable `y_i`.
    pub fn y_var(context: &VarContext, field: &FieldSpec, i: usize) -> Self {
        Self::monomial_term(context, field, Monomial::y_var(context.n(), i), field.one())
    }

    pub fn monomial_term(
        context: &VarContext,
        field: &FieldSpec,
        mono: Monomial,
        coeff: Scalar,
    ) -> Self {
        let mut terms = BTreeMap::new();
        if !field.is_zero(&coeff) {
            terms.insert(mono, coeff);
        }
        Polynomial {
            context: context.clone(),
            field: *field,
            terms,
        }
    }

    pub fn context(&self) -> &VarContext {
        &self.context
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_x_only(&self) -> bool {
        self.terms.keys().all(Monomial::is_x_only)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending grevlex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    /// The grevlex-largest monomial, if any.
    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    pub fn coeff(&self, mono: &Monomial) -> Scalar {
        self.terms
            .get(mono)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    /// Max x-degree over terms; -1 for the zero polynomial.
    pub fn x_degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|m| m.x_degree() as i64)
            .max()
            .unwrap_or(-1)
    }

    /// Max y-degree over terms; -1 for the zero polynomial.
    pub fn y_degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|m| m.y_degree() as i64)
            .max()
            .unwrap_or(-1)
    }

    /// Max total degree over terms; -1 for the zero polynomial.
    pub fn total_degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|m| m.total_degree() as i64)
            .max()
            .unwrap_or(-1)
    }

    pub fn block_degree(&self, block: Block) -> i64 {
        match block {
            Block::X => self.x_degree(),
            Block::Y => self.y_degree(),
        }
    }

    fn check_compatible(&self, other: &Polynomial) {
        assert!(
            self.context == other.context,
            "operands have different variable contexts"
        );
        assert!(
            self.field == other.field,
            "operands have different coefficient fields"
        );
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.check_compatible(other);
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let entry = terms.entry(m.clone()).or_insert_with(|| self.field.zero());
            *entry = self.field.add(entry, c);
        }
        Polynomial::from_map(&self.context, &self.field, terms)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), self.field.neg(c)))
            .collect();
        Polynomial::from_map(&self.context, &self.field, terms)
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.check_compatible(other);
        let mut terms: BTreeMap<Monomial, Scalar> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = self.field.mul(ca, cb);
                let entry = terms.entry(m).or_insert_with(|| self.field.zero());
                *entry = self.field.add(entry, &c);
            }
        }
        Polynomial::from_map(&self.context, &self.field, terms)
    }

    pub fn scalar_mul(&self, c: &Scalar) -> Polynomial {
        if self.field.is_zero(c) {
            return Polynomial::zero(&self.context, &self.field);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, a)| (m.clone(), self.field.mul(a, c)))
            .collect();
        Polynomial::from_map(&self.context, &self.field, terms)
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.context, &self.field);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Substitute polynomials for selected variables of one block; variables
    /// not listed are left unchanged.
    pub fn substitute_block(
        &self,
        block: Block,
        values: &BTreeMap<usize, Polynomial>,
    ) -> Result<Polynomial> {
        let n = self.context.n();
        for (i, p) in values {
            if *i >= n {
                return Err(Error::IndexOutOfRange { index: *i, arity: n });
            }
            if p.context != self.context {
                return Err(Error::ContextMismatch);
            }
            if p.field != self.field {
                return Err(Error::FieldMismatch);
            }
        }
        let offset = match block {
            Block::X => 0,
            Block::Y => n,
        };
        let mut result = Polynomial::zero(&self.context, &self.field);
        for (mono, coeff) in &self.terms {
            let mut kept = mono.exps().to_vec();
            let mut factor: Option<Polynomial> = None;
            for (i, p) in values {
                let e = kept[offset + i];
                if e > 0 {
                    kept[offset + i] = 0;
                    let piece = p.pow(e);
                    factor = Some(match factor {
                        None => piece,
                        Some(f) => f.mul(&piece),
                    });
                }
            }
            let base =
                Polynomial::monomial_term(&self.context, &self.field, Monomial::new(kept), coeff.clone());
            let term = match factor {
                None => base,
                Some(f) => base.mul(&f),
            };
            result = result.add(&term);
        }
        Ok(result)
    }

    /// Exchange the x- and y-blocks; turns an x-only `F(x)` into `F(y)`.
    pub fn swap_blocks(&self) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.swap_blocks(), c.clone()))
            .collect();
        Polynomial::from_map(&self.context, &self.field, terms)
    }

    /// Evaluate an x-only polynomial at a point.
    pub fn eval_x(&self, point: &[Scalar]) -> Result<Scalar> {
        if !self.is_x_only() {
            return Err(Error::NotXOnly);
        }
        if point.len() != self.context.n() {
            return Err(Error::ArityMismatch {
                expected: self.context.n(),
                got: point.len(),
            });
        }
        let mut acc = self.field.zero();
        for (m, c) in &self.terms {
            let v = m.eval_x(&self.field, point);
            acc = self.field.add(&acc, &self.field.mul(c, &v));
        }
        Ok(acc)
    }

    /// Partial derivative with respect to `x_i`.
    pub fn partial_x(&self, i: usize) -> Polynomial {
        let mut terms: BTreeMap<Monomial, Scalar> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exps()[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.exps().to_vec();
            exps[i] = e - 1;
            let coeff = self.field.mul(c, &self.field.integer(e as i64));
            let entry = terms
                .entry(Monomial::new(exps))
                .or_insert_with(|| self.field.zero());
            *entry = self.field.add(entry, &coeff);
        }
        Polynomial::from_map(&self.context, &self.field, terms)
    }

    /// No stored coefficient is zero. Used by the canonical-form audits.
    pub fn is_canonical(&self) -> bool {
        self.terms.values().all(|c| !self.field.is_zero(c))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (mono, coeff)) in self.terms.iter().rev().enumerate() {
            let neg = coeff.is_negative();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = coeff.abs();
            let mono_str = display_monomial(&self.context, mono);
            if mono_str.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{mono_str}")?;
            } else {
                write!(f, "{mag}*{mono_str}")?;
            }
        }
        Ok(())
    }
}

fn display_monomial(ctx: &VarContext, mono: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, &e) in mono.x_exps().iter().enumerate() {
        if e == 1 {
            parts.push(ctx.name(i).to_string());
        } else if e > 1 {
            parts.push(format!("{}^{}", ctx.name(i), e));
        }
    }
    for (i, &e) in mono.y_exps().iter().enumerate() {
        if e == 1 {
            parts.push(ctx.y_name(i));
        } else if e > 1 {
            parts.push(format!("{}^{}", ctx.y_name(i), e));
        }
    }
    parts.join("*")
}
