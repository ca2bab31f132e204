//! Square polynomial systems: n x-only polynomials in n variables.

use crate::context::VarContext;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::monomial::Monomial;
use crate::poly::Polynomial;

/// The system `f = (f_1, ..., f_n)` together with its degree sum
/// `delta_f = sum(deg f_i - 1)`, the pivot degree of the whole calculus.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolySystem {
    context: VarContext,
    field: FieldSpec,
    polys: Vec<Polynomial>,
    delta_f: usize,
}

impl PolySystem {
    /// Build a system. Requires as many polynomials as variables, each
    /// x-only and nonconstant, all sharing one context and field.
    pub fn new(polys: Vec<Polynomial>) -> Result<Self> {
        let first = polys
            .first()
            .ok_or_else(|| Error::InvalidSystem("empty system".into()))?;
        let context = first.context().clone();
        let field = *first.field();
        if polys.len() != context.n() {
            return Err(Error::InvalidSystem(format!(
                "{} polynomials for {} variables",
                polys.len(),
                context.n()
            )));
        }
        let mut delta_f = 0usize;
        for (i, p) in polys.iter().enumerate() {
            if p.context() != &context {
                return Err(Error::ContextMismatch);
            }
            if p.field() != &field {
                return Err(Error::FieldMismatch);
            }
            if !p.is_x_only() {
                return Err(Error::NotXOnly);
            }
            let d = p.x_degree();
            if d < 1 {
                return Err(Error::InvalidSystem(format!(
                    "polynomial {} has degree {d}; every equation must be nonconstant",
                    i + 1
                )));
            }
            delta_f += (d - 1) as usize;
        }
        Ok(PolySystem {
            context,
            field,
            polys,
            delta_f,
        })
    }

    pub fn context(&self) -> &VarContext {
        &self.context
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.polys.len()
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn poly(&self, i: usize) -> &Polynomial {
        &self.polys[i]
    }

    /// `sum(deg f_i - 1)`.
    pub fn delta_f(&self) -> usize {
        self.delta_f
    }

    /// `f_i` with x replaced by y.
    pub fn poly_in_y(&self, i: usize) -> Polynomial {
        self.polys[i].swap_blocks()
    }

    /// Leading monomials in grevlex order, one per equation.
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys
            .iter()
            .map(|p| p.leading_monomial().expect("nonconstant").clone())
            .collect()
    }
}
