//! Finitely supported linear functionals on polynomial space, and the star
//! extension operation.
//!
//! A [`Functional`] stores its values on finitely many x-monomials and is
//! extended by zero elsewhere, so it is total on the whole polynomial ring.
//! An optional certificate records the slice degree `d` for which
//! annihilation of the ideal slice has actually been verified; constructors
//! that stamp a certificate re-check it rather than trusting the caller.

use std::collections::BTreeMap;
use std::fmt;

use crate::bezout::{BorderExpansion, Convention};
use crate::context::{Block, VarContext};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::monomial::{x_monomials_upto, Monomial};
use crate::poly::Polynomial;
use crate::slice::{ideal_slice_basis, SliceBasis};
use crate::system::PolySystem;

#[derive(Clone, PartialEq, Debug)]
pub struct Functional {
    context: VarContext,
    field: FieldSpec,
    support: BTreeMap<Monomial, Scalar>,
    certified_degree: Option<usize>,
    system_ref: Option<PolySystem>,
}

impl Functional {
    /// The zero functional.
    pub fn zero(context: &VarContext, field: &FieldSpec) -> Self {
        Functional {
            context: context.clone(),
            field: *field,
            support: BTreeMap::new(),
            certified_degree: None,
            system_ref: None,
        }
    }

    /// Build from `(monomial, value)` pairs. Monomials must be x-only;
    /// duplicates are summed and zero values dropped.
    pub fn from_support(
        context: &VarContext,
        field: &FieldSpec,
        entries: Vec<(Monomial, Scalar)>,
    ) -> Result<Self> {
        let mut support: BTreeMap<Monomial, Scalar> = BTreeMap::new();
        for (mono, value) in entries {
            if mono.arity() != context.n() {
                return Err(Error::ArityMismatch {
                    expected: 2 * context.n(),
                    got: 2 * mono.arity(),
                });
            }
            if !mono.is_x_only() {
                return Err(Error::NotXOnly);
            }
            field.validate(&value)?;
            let entry = support.entry(mono).or_insert_with(|| field.zero());
            *entry = field.add(entry, &value);
        }
        support.retain(|_, v| !field.is_zero(v));
        Ok(Functional {
            context: context.clone(),
            field: *field,
            support,
            certified_degree: None,
            system_ref: None,
        })
    }

    /// Build from x-block exponent vectors.
    pub fn from_x_entries(
        context: &VarContext,
        field: &FieldSpec,
        entries: Vec<(Vec<u32>, Scalar)>,
    ) -> Result<Self> {
        let n = context.n();
        let mut converted = Vec::with_capacity(entries.len());
        for (exps, v) in entries {
            if exps.len() != n {
                return Err(Error::ArityMismatch {
                    expected: n,
                    got: exps.len(),
                });
            }
            converted.push((Monomial::from_x_exps(n, &exps), v));
        }
        Self::from_support(context, field, converted)
    }

    /// The combination `F -> sum_k w_k F(p_k)`, stored on all monomials of
    /// degree at most `degree`.
    pub fn eval_combination(
        context: &VarContext,
        field: &FieldSpec,
        points: &[Vec<Scalar>],
        weights: &[Scalar],
        degree: usize,
    ) -> Result<Self> {
        if points.len() != weights.len() {
            return Err(Error::ArityMismatch {
                expected: points.len(),
                got: weights.len(),
            });
        }
        let n = context.n();
        for p in points {
            if p.len() != n {
                return Err(Error::ArityMismatch {
                    expected: n,
                    got: p.len(),
                });
            }
            for c in p {
                field.validate(c)?;
            }
        }
        for w in weights {
            field.validate(w)?;
        }
        let mut entries = Vec::new();
        for mono in x_monomials_upto(n, degree) {
            let mut acc = field.zero();
            for (point, w) in points.iter().zip(weights) {
                acc = field.add(&acc, &field.mul(w, &mono.eval_x(field, point)));
            }
            entries.push((mono, acc));
        }
        Self::from_support(context, field, entries)
    }

    pub fn context(&self) -> &VarContext {
        &self.context
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    /// Support entries in ascending grevlex order.
    pub fn support(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.support.iter()
    }

    pub fn support_size(&self) -> usize {
        self.support.len()
    }

    pub fn certified_degree(&self) -> Option<usize> {
        self.certified_degree
    }

    pub fn system_ref(&self) -> Option<&PolySystem> {
        self.system_ref.as_ref()
    }

    /// Value on an x-only monomial; zero outside the stored support.
    pub fn value(&self, mono: &Monomial) -> Scalar {
        debug_assert!(mono.is_x_only());
        self.support
            .get(mono)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    /// Pair with an x-only polynomial: `sum_m coeff(m) * value(m)`.
    pub fn pair(&self, p: &Polynomial) -> Scalar {
        assert!(p.is_x_only(), "pairing needs an x-only polynomial");
        let mut acc = self.field.zero();
        for (m, c) in p.terms() {
            let v = self.value(m);
            if !self.field.is_zero(&v) {
                acc = self.field.add(&acc, &self.field.mul(c, &v));
            }
        }
        acc
    }

    /// Collapse one block of a polynomial: for `block = Y`, each term
    /// `c * x^a y^b` maps to `c * value(x^b) * x^a`, and the result lives in
    /// the x-block (symmetrically for `block = X`).
    pub fn apply(&self, p: &Polynomial, block: Block) -> Polynomial {
        let n = self.context.n();
        let mut terms: BTreeMap<Monomial, Scalar> = BTreeMap::new();
        for (mono, coeff) in p.terms() {
            let (looked_up, kept) = match block {
                Block::Y => (mono.y_block_as_x(), mono.x_block_only()),
                Block::X => {
                    let mut kept_exps = vec![0u32; 2 * n];
                    kept_exps[n..].copy_from_slice(mono.y_exps());
                    (mono.x_block_only(), Monomial::new(kept_exps))
                }
            };
            let v = self.value(&looked_up);
            if self.field.is_zero(&v) {
                continue;
            }
            let c = self.field.mul(coeff, &v);
            let entry = terms.entry(kept).or_insert_with(|| self.field.zero());
            *entry = self.field.add(entry, &c);
        }
        Polynomial::from_map(&self.context, &self.field, terms)
    }

    pub fn add(&self, other: &Functional) -> Functional {
        assert!(self.context == other.context && self.field == other.field);
        let mut support = self.support.clone();
        for (m, v) in &other.support {
            let entry = support.entry(m.clone()).or_insert_with(|| self.field.zero());
            *entry = self.field.add(entry, v);
        }
        support.retain(|_, v| !self.field.is_zero(v));
        Functional {
            context: self.context.clone(),
            field: self.field,
            support,
            certified_degree: None,
            system_ref: None,
        }
    }

    pub fn scale(&self, c: &Scalar) -> Functional {
        let mut support: BTreeMap<Monomial, Scalar> = BTreeMap::new();
        if !self.field.is_zero(c) {
            for (m, v) in &self.support {
                support.insert(m.clone(), self.field.mul(v, c));
            }
        }
        Functional {
            context: self.context.clone(),
            field: self.field,
            support,
            certified_degree: None,
            system_ref: None,
        }
    }

    pub fn sub(&self, other: &Functional) -> Functional {
        self.add(&other.scale(&other.field.integer(-1)))
    }

    /// The functional `F -> self(g * F)`, tabulated on all monomials of
    /// degree at most `window`.
    pub fn scale_by_poly(&self, g: &Polynomial, window: usize) -> Result<Functional> {
        if !g.is_x_only() {
            return Err(Error::NotXOnly);
        }
        let n = self.context.n();
        let mut entries = Vec::new();
        for mono in x_monomials_upto(n, window) {
            let shifted = g.mul(&Polynomial::monomial_term(
                &self.context,
                &self.field,
                mono.clone(),
                self.field.one(),
            ));
            entries.push((mono, self.pair(&shifted)));
        }
        Functional::from_support(&self.context, &self.field, entries)
    }

    /// Verify annihilation of a slice basis and stamp the certificate.
    pub fn certified_against(mut self, slice: &SliceBasis) -> Result<Functional> {
        for row in slice.row_polys() {
            if !self.field.is_zero(&self.pair(&row)) {
                return Err(Error::BadCertificate {
                    degree: slice.degree(),
                });
            }
        }
        self.certified_degree = Some(slice.degree());
        self.system_ref = Some(slice.system().clone());
        Ok(self)
    }

    /// Verify annihilation of `(f)^{<= d}` and stamp the certificate.
    pub fn certified(self, f: &PolySystem, d: usize) -> Result<Functional> {
        let slice = ideal_slice_basis(f, d);
        self.certified_against(&slice)
    }

    /// Forget the certificate (useful when editing a functional).
    pub fn uncertified(mut self) -> Functional {
        self.certified_degree = None;
        self.system_ref = None;
        self
    }

    /// True when the two functionals take equal values on every monomial of
    /// degree at most `d`.
    pub fn agrees_upto(&self, other: &Functional, d: usize) -> bool {
        x_monomials_upto(self.context.n(), d)
            .iter()
            .all(|m| self.value(m) == other.value(m))
    }

    fn epsilon_for(&self, f: &PolySystem) -> Option<usize> {
        match (&self.system_ref, self.certified_degree) {
            (Some(sys), Some(d)) if sys == f && d >= f.delta_f() => Some(d - f.delta_f()),
            _ => None,
        }
    }
}

impl fmt::Display for Functional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (mono, v)) in self.support.iter().rev().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            let name = Polynomial::monomial_term(
                &self.context,
                &self.field,
                mono.clone(),
                self.field.one(),
            );
            write!(f, "{name}: {v}")?;
        }
        write!(f, "}}")
    }
}

/// Precomputed star-operation state for one system and convention.
///
/// Building one of these once and reusing it amortizes the nabla matrix,
/// its minors, the Bezoutian, and the bordered determinants of monomials
/// across many star applications.
#[derive(Debug)]
pub struct StarContext {
    expansion: BorderExpansion,
    bordered_monomials: std::sync::Mutex<std::collections::HashMap<Monomial, Polynomial>>,
}

impl StarContext {
    pub fn new(f: &PolySystem, convention: Convention) -> Self {
        StarContext {
            expansion: BorderExpansion::new(f, convention),
            bordered_monomials: Default::default(),
        }
    }

    /// The bordered determinant of a single x-monomial, memoized.
    fn bordered_monomial(&self, mono: &Monomial) -> Polynomial {
        if let Some(hit) = self.bordered_monomials.lock().unwrap().get(mono) {
            return hit.clone();
        }
        let f = self.system();
        let p = Polynomial::monomial_term(f.context(), f.field(), mono.clone(), f.field().one());
        let d = self.expansion.bordered_det(&p).expect("monomials are x-only");
        self.bordered_monomials
            .lock()
            .unwrap()
            .insert(mono.clone(), d.clone());
        d
    }

    fn check_certified_bound(&self, l_func: &Functional, input_degree: i64, result: &Polynomial) {
        let f = self.system();
        if let Some(eps) = l_func.epsilon_for(f) {
            let bound = std::cmp::max(f.delta_f() as i64, input_degree - eps as i64 - 1);
            assert!(
                result.x_degree() <= bound,
                "star result degree {} exceeds the certified bound {bound}",
                result.x_degree()
            );
        }
    }

    pub fn system(&self) -> &PolySystem {
        self.expansion.system()
    }

    pub fn convention(&self) -> Convention {
        self.expansion.convention()
    }

    pub fn bezoutian(&self) -> &Polynomial {
        self.expansion.bezoutian()
    }

    /// The star extension `L * F`: apply `L` in y to the bordered
    /// determinant of `F`. The result is an x-only polynomial.
    ///
    /// When `L` carries a certificate for this very system at degree
    /// `delta_f + eps`, the result degree is checked against the bound
    /// `max(delta_f, deg F - eps - 1)`.
    pub fn star_poly(&self, l_func: &Functional, big_f: &Polynomial) -> Result<Polynomial> {
        let bordered = self.expansion.bordered_det(big_f)?;
        let result = l_func.apply(&bordered, Block::Y);
        self.check_certified_bound(l_func, big_f.x_degree(), &result);
        Ok(result)
    }

    /// `L * x^a` for every monomial of degree at most `degree`, in ascending
    /// grevlex order.
    pub fn star_monomials(
        &self,
        l_func: &Functional,
        degree: usize,
    ) -> Result<Vec<(Monomial, Polynomial)>> {
        let f = self.system();
        let mut table = Vec::new();
        for mono in x_monomials_upto(f.n(), degree) {
            let starred = l_func.apply(&self.bordered_monomial(&mono), Block::Y);
            self.check_certified_bound(l_func, mono.total_degree() as i64, &starred);
            table.push((mono, starred));
        }
        Ok(table)
    }

    /// The star extension of functionals, `l * L`, tabulated on all
    /// monomials of degree at most `out_degree`. Its action is
    /// `(l * L).F = l.(L * F)`.
    ///
    /// With `out_degree = None`, both operands must carry certificates for
    /// this system (degrees `delta_f + d1`, `delta_f + d2`); the default
    /// window is then `delta_f + d1 + d2 + 1`, beyond which no exchange
    /// identities are claimed.
    pub fn star_func(
        &self,
        l_outer: &Functional,
        l_inner: &Functional,
        out_degree: Option<usize>,
    ) -> Result<Functional> {
        let f = self.system();
        let degree = match out_degree {
            Some(d) => d,
            None => {
                let d1 = l_outer.epsilon_for(f).ok_or(Error::MissingDegreeBound)?;
                let d2 = l_inner.epsilon_for(f).ok_or(Error::MissingDegreeBound)?;
                f.delta_f() + d1 + d2 + 1
            }
        };
        let mut entries = Vec::new();
        for (mono, starred) in self.star_monomials(l_inner, degree)? {
            entries.push((mono, l_outer.pair(&starred)));
        }
        Functional::from_support(f.context(), f.field(), entries)
    }
}

/// One-shot helper for [`StarContext::star_poly`].
pub fn star_poly(
    l_func: &Functional,
    big_f: &Polynomial,
    f: &PolySystem,
    convention: Convention,
) -> Result<Polynomial> {
    StarContext::new(f, convention).star_poly(l_func, big_f)
}

/// One-shot helper for [`StarContext::star_func`].
pub fn star_func(
    l_outer: &Functional,
    l_inner: &Functional,
    f: &PolySystem,
    out_degree: Option<usize>,
    convention: Convention,
) -> Result<Functional> {
    StarContext::new(f, convention).star_func(l_outer, l_inner, out_degree)
}
