//! Independent ground truth for the test suites: multivariate division for
//! systems whose leading monomials are pairwise coprime, and a brute-force
//! slice enumeration with its own elimination code.
//!
//! Pairwise coprime leading monomials make a system its own confluent
//! rewriting basis, so the division remainder is canonical and vanishes
//! exactly on ideal members. The oracle deliberately supports only such
//! systems instead of carrying a general basis-completion engine.

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::ExactMatrix;
use crate::monomial::{x_monomials_upto, Monomial};
use crate::poly::Polynomial;
use crate::slice::SliceBasis;
use crate::system::PolySystem;

/// A rational common root with the Jacobian determinant evaluated there.
#[derive(Clone, PartialEq, Debug)]
pub struct RootData {
    pub point: Vec<Scalar>,
    pub jacobian: Scalar,
}

/// A system usable as division ground truth, with optionally a complete list
/// of its simple rational roots.
#[derive(Clone, Debug)]
pub struct CatalogSystem {
    system: PolySystem,
    leading: Vec<Monomial>,
    known_roots: Option<Vec<RootData>>,
}

impl CatalogSystem {
    /// Validate the coprimality invariant and, when roots are supplied,
    /// check each one exactly and record its Jacobian determinant (which
    /// must be nonzero).
    pub fn new(system: PolySystem, roots: Option<Vec<Vec<Scalar>>>) -> Result<Self> {
        let leading = system.leading_monomials();
        for i in 0..leading.len() {
            for j in 0..i {
                if !leading[i].coprime_with(&leading[j]) {
                    return Err(Error::InvalidCatalog(format!(
                        "leading monomials of equations {} and {} share a variable",
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
        let field = *system.field();
        let n = system.n();
        let known_roots = match roots {
            None => None,
            Some(points) => {
                // Jacobian matrix entries as polynomials, evaluated per point
                let jac: Vec<Vec<Polynomial>> = (0..n)
                    .map(|i| (0..n).map(|j| system.poly(i).partial_x(j)).collect())
                    .collect();
                let mut data = Vec::with_capacity(points.len());
                for point in points {
                    if point.len() != n {
                        return Err(Error::ArityMismatch {
                            expected: n,
                            got: point.len(),
                        });
                    }
                    for (i, fi) in system.polys().iter().enumerate() {
                        if !field.is_zero(&fi.eval_x(&point)?) {
                            return Err(Error::InvalidCatalog(format!(
                                "equation {} does not vanish at a declared root",
                                i + 1
                            )));
                        }
                    }
                    let entries: Vec<Vec<Scalar>> = jac
                        .iter()
                        .map(|row| {
                            row.iter()
                                .map(|p| p.eval_x(&point))
                                .collect::<Result<Vec<_>>>()
                        })
                        .collect::<Result<Vec<_>>>()?;
                    let det = scalar_det(&field, &entries);
                    if field.is_zero(&det) {
                        return Err(Error::InvalidCatalog(
                            "declared root has a singular Jacobian".into(),
                        ));
                    }
                    data.push(RootData {
                        point,
                        jacobian: det,
                    });
                }
                Some(data)
            }
        };
        Ok(CatalogSystem {
            system,
            leading,
            known_roots,
        })
    }

    pub fn system(&self) -> &PolySystem {
        &self.system
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leading
    }

    pub fn known_roots(&self) -> Option<&[RootData]> {
        self.known_roots.as_deref()
    }
}

fn scalar_det(field: &crate::field::FieldSpec, m: &[Vec<Scalar>]) -> Scalar {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = field.zero();
    for (col, top) in m[0].iter().enumerate() {
        if field.is_zero(top) {
            continue;
        }
        let minor: Vec<Vec<Scalar>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != col)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = field.mul(top, &scalar_det(field, &minor));
        acc = if col % 2 == 0 {
            field.add(&acc, &term)
        } else {
            field.sub(&acc, &term)
        };
    }
    acc
}

/// Remainder of multivariate division of `g` by the catalog system. Zero if
/// and only if `g` belongs to the ideal.
pub fn division_remainder(g: &Polynomial, cat: &CatalogSystem) -> Result<Polynomial> {
    if !g.is_x_only() {
        return Err(Error::NotXOnly);
    }
    let f = cat.system();
    if g.context() != f.context() {
        return Err(Error::ContextMismatch);
    }
    if g.field() != f.field() {
        return Err(Error::FieldMismatch);
    }
    let field = f.field();
    let leading_coeffs: Vec<Scalar> = cat
        .leading_monomials()
        .iter()
        .zip(f.polys())
        .map(|(lm, p)| p.coeff(lm))
        .collect();
    let mut r = g.clone();
    loop {
        // largest reducible term; anything above it is already irreducible
        let target = r.terms().rev().find_map(|(m, c)| {
            cat.leading_monomials()
                .iter()
                .position(|lm| lm.divides(m))
                .map(|i| (m.clone(), c.clone(), i))
        });
        let Some((mono, coeff, i)) = target else {
            return Ok(r);
        };
        let quot = cat.leading_monomials()[i].div_into(&mono).expect("divides");
        let scale = field.div(&coeff, &leading_coeffs[i])?;
        let subtrahend = f
            .poly(i)
            .mul(&Polynomial::monomial_term(f.context(), field, quot, scale));
        r = r.sub(&subtrahend);
    }
}

/// Recompute the slice `(f)^{<= d}` by naive generator enumeration with a
/// self-contained elimination, for cross-checking the main implementation.
pub fn brute_slice_enumerate(f: &PolySystem, d: usize) -> SliceBasis {
    let field = *f.field();
    let n = f.n();
    let monomials = x_monomials_upto(n, d);
    let index: std::collections::BTreeMap<&Monomial, usize> =
        monomials.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut generators: Vec<(usize, Monomial)> = Vec::new();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for i in 0..n {
        let deg = f.poly(i).x_degree() as usize;
        if deg > d {
            continue;
        }
        for alpha in x_monomials_upto(n, d - deg) {
            let shifted = f.poly(i).mul(&Polynomial::monomial_term(
                f.context(),
                &field,
                alpha.clone(),
                field.one(),
            ));
            let mut row = vec![field.zero(); monomials.len()];
            for (m, c) in shifted.terms() {
                row[index[m]] = c.clone();
            }
            generators.push((i, alpha));
            rows.push(row);
        }
    }
    // forward elimination, then back-substitution, written out by hand
    let cols = monomials.len();
    let mut pivots: Vec<usize> = Vec::new();
    let mut next = 0usize;
    for col in 0..cols {
        let Some(p) = (next..rows.len()).find(|&r| !field.is_zero(&rows[r][col])) else {
            continue;
        };
        rows.swap(next, p);
        let inv = field.inv(&rows[next][col]).expect("nonzero");
        for c in col..cols {
            rows[next][c] = field.mul(&rows[next][c], &inv);
        }
        for r in 0..rows.len() {
            if r != next && !field.is_zero(&rows[r][col]) {
                let factor = rows[r][col].clone();
                for c in col..cols {
                    let s = field.mul(&rows[next][c], &factor);
                    rows[r][c] = field.sub(&rows[r][c], &s);
                }
            }
        }
        pivots.push(col);
        next += 1;
        if next == rows.len() {
            break;
        }
    }
    rows.truncate(pivots.len());
    let basis = if rows.is_empty() {
        ExactMatrix::zero(&field, 0, cols)
    } else {
        ExactMatrix::from_rows(&field, rows).expect("uniform rows")
    };
    SliceBasis::assemble(f.clone(), d, generators, monomials, basis, pivots)
}
