//! Bounded ideal slices, annihilator bases, and slice membership.
//!
//! The slice `(f)^{<= d}` is the span of the products `x^a * f_i` whose
//! total degree stays within `d`: ideal members with a cofactor-degree
//! bound, realized as a row space over the monomial index of `R[x^{<= d}]`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::functional::Functional;
use crate::linalg::ExactMatrix;
use crate::monomial::{x_monomials_upto, Monomial};
use crate::poly::Polynomial;
use crate::system::PolySystem;

/// A row-reduced exact basis of the slice `(f)^{<= d}`.
///
/// `generators` lists the products `(i, a)` with `|a| + deg f_i <= d` whose
/// span the basis reduces; every basis row therefore decodes to an explicit
/// combination `sum h_i f_i` with `deg(h_i f_i) <= d`.
#[derive(Clone, Debug)]
pub struct SliceBasis {
    system: PolySystem,
    degree: usize,
    generators: Vec<(usize, Monomial)>,
    monomials: Vec<Monomial>,
    basis: ExactMatrix,
    pivots: Vec<usize>,
}

impl SliceBasis {
    pub(crate) fn assemble(
        system: PolySystem,
        degree: usize,
        generators: Vec<(usize, Monomial)>,
        monomials: Vec<Monomial>,
        basis: ExactMatrix,
        pivots: Vec<usize>,
    ) -> Self {
        SliceBasis {
            system,
            degree,
            generators,
            monomials,
            basis,
            pivots,
        }
    }

    pub fn system(&self) -> &PolySystem {
        &self.system
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The generating products `(equation index, cofactor monomial)`.
    pub fn generators(&self) -> &[(usize, Monomial)] {
        &self.generators
    }

    /// The monomial index of `R[x^{<= d}]`, ascending grevlex.
    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    /// Row-reduced basis matrix; its row count is the slice dimension.
    pub fn basis(&self) -> &ExactMatrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    /// Decode the basis rows back into polynomials.
    pub fn row_polys(&self) -> Vec<Polynomial> {
        (0..self.basis.rows())
            .map(|r| {
                vec_to_poly(
                    &self.system,
                    &self.monomials,
                    self.basis.row(r),
                )
            })
            .collect()
    }

    /// Exact membership of `p` in the slice's row space.
    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        let field = self.system.field();
        let mut v = poly_to_vec(p, &index_of(&self.monomials), self.monomials.len())?;
        for (row, &col) in self.pivots.iter().enumerate() {
            let c = v[col].clone();
            if field.is_zero(&c) {
                continue;
            }
            for j in 0..self.monomials.len() {
                let prod = field.mul(self.basis.get(row, j), &c);
                v[j] = field.sub(&v[j], &prod);
            }
        }
        Ok(v.iter().all(|c| field.is_zero(c)))
    }
}

fn index_of(monomials: &[Monomial]) -> BTreeMap<Monomial, usize> {
    monomials
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect()
}

fn poly_to_vec(
    p: &Polynomial,
    index: &BTreeMap<Monomial, usize>,
    len: usize,
) -> Result<Vec<Scalar>> {
    if !p.is_x_only() {
        return Err(Error::NotXOnly);
    }
    let field = p.field();
    let mut v = vec![field.zero(); len];
    for (m, c) in p.terms() {
        match index.get(m) {
            Some(&i) => v[i] = c.clone(),
            None => {
                return Err(Error::DegreeOutOfBounds {
                    degree: m.total_degree() as i64,
                    bound: 0,
                })
            }
        }
    }
    Ok(v)
}

fn vec_to_poly(system: &PolySystem, monomials: &[Monomial], row: &[Scalar]) -> Polynomial {
    let field = system.field();
    let terms = monomials
        .iter()
        .zip(row)
        .filter(|(_, c)| !field.is_zero(c))
        .map(|(m, c)| (m.clone(), c.clone()))
        .collect();
    Polynomial::from_map(system.context(), field, terms)
}

/// Enumerate the generating products of `(f)^{<= d}`, equation-major and in
/// ascending cofactor order.
fn slice_generators(f: &PolySystem, d: usize) -> Vec<(usize, Monomial)> {
    let mut gens = Vec::new();
    for i in 0..f.n() {
        let deg = f.poly(i).x_degree() as usize;
        if deg > d {
            continue;
        }
        for alpha in x_monomials_upto(f.n(), d - deg) {
            gens.push((i, alpha));
        }
    }
    gens
}

fn generator_poly(f: &PolySystem, gen: &(usize, Monomial)) -> Polynomial {
    let (i, alpha) = gen;
    f.poly(*i).mul(&Polynomial::monomial_term(
        f.context(),
        f.field(),
        alpha.clone(),
        f.field().one(),
    ))
}

/// Row-reduced basis of the slice `(f)^{<= d}` inside `R[x^{<= d}]`.
pub fn ideal_slice_basis(f: &PolySystem, d: usize) -> SliceBasis {
    let monomials = x_monomials_upto(f.n(), d);
    let index = index_of(&monomials);
    let generators = slice_generators(f, d);
    let field = f.field();
    let rows: Vec<Vec<Scalar>> = generators
        .iter()
        .map(|g| {
            poly_to_vec(&generator_poly(f, g), &index, monomials.len())
                .expect("generator degree fits the slice by construction")
        })
        .collect();
    let matrix = if rows.is_empty() {
        ExactMatrix::zero(field, 0, monomials.len())
    } else {
        ExactMatrix::from_rows(field, rows).expect("uniform rows")
    };
    let (reduced, pivots) = matrix.rref();
    // keep only the nonzero rows of the reduced form
    let basis_rows: Vec<Vec<Scalar>> = (0..pivots.len())
        .map(|r| reduced.row(r).to_vec())
        .collect();
    let basis = if basis_rows.is_empty() {
        ExactMatrix::zero(field, 0, monomials.len())
    } else {
        ExactMatrix::from_rows(field, basis_rows).expect("uniform rows")
    };
    SliceBasis::assemble(f.clone(), d, generators, monomials, basis, pivots)
}

/// A basis of all functionals on `R[x^{<= d}]` that annihilate the slice
/// `(f)^{<= d}`. Every returned functional carries a verified certificate at
/// degree `d`.
pub fn annihilator_basis(f: &PolySystem, d: usize) -> Vec<Functional> {
    let slice = ideal_slice_basis(f, d);
    let vectors = if slice.rank() == 0 {
        // no constraints: the dual basis of the whole monomial index
        let field = f.field();
        let len = slice.monomials().len();
        (0..len)
            .map(|i| {
                let mut v = vec![field.zero(); len];
                v[i] = field.one();
                v
            })
            .collect()
    } else {
        slice.basis().nullspace()
    };
    vectors
        .into_iter()
        .map(|v| {
            let entries = slice
                .monomials()
                .iter()
                .cloned()
                .zip(v)
                .collect::<Vec<_>>();
            Functional::from_support(f.context(), f.field(), entries)
                .expect("x-only support")
                .certified_against(&slice)
                .expect("nullspace vectors annihilate the slice")
        })
        .collect()
}

/// Decide membership of `p` in `(f)^{<= d}` and, when it holds, produce the
/// cofactors: `p = sum h_i f_i` with `deg(h_i f_i) <= d`. Absence is a
/// value, not an error.
pub fn slice_membership_solve(
    p: &Polynomial,
    f: &PolySystem,
    d: usize,
) -> Result<Option<Vec<Polynomial>>> {
    if !p.is_x_only() {
        return Err(Error::NotXOnly);
    }
    if p.total_degree() > d as i64 {
        return Err(Error::DegreeOutOfBounds {
            degree: p.total_degree(),
            bound: d,
        });
    }
    let monomials = x_monomials_upto(f.n(), d);
    let index = index_of(&monomials);
    let generators = slice_generators(f, d);
    let field = f.field();
    // columns = generators, rows = monomials
    let mut matrix = ExactMatrix::zero(field, monomials.len(), generators.len());
    for (g, gen) in generators.iter().enumerate() {
        let col = poly_to_vec(&generator_poly(f, gen), &index, monomials.len())?;
        for (r, val) in col.into_iter().enumerate() {
            matrix.set(r, g, val);
        }
    }
    let rhs = poly_to_vec(p, &index, monomials.len())?;
    let Some(coords) = matrix.solve(&rhs) else {
        return Ok(None);
    };
    let mut cofactors = vec![Polynomial::zero(f.context(), field); f.n()];
    for ((i, alpha), c) in generators.iter().zip(&coords) {
        if field.is_zero(c) {
            continue;
        }
        let term = Polynomial::monomial_term(f.context(), field, alpha.clone(), c.clone());
        cofactors[*i] = cofactors[*i].add(&term);
    }
    Ok(Some(cofactors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::VarContext;
    use crate::field::FieldSpec;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    fn univar() -> PolySystem {
        let ctx = VarContext::new(vec!["x1"]).unwrap();
        let f = Polynomial::from_x_terms(
            &ctx,
            &q(),
            vec![(vec![2], q().one()), (vec![0], q().integer(-1))],
        )
        .unwrap();
        PolySystem::new(vec![f]).unwrap()
    }

    fn chained() -> PolySystem {
        let ctx = VarContext::new(vec!["x1", "x2"]).unwrap();
        let f1 = Polynomial::from_x_terms(
            &ctx,
            &q(),
            vec![(vec![2, 0], q().one()), (vec![0, 0], q().integer(-1))],
        )
        .unwrap();
        let f2 = Polynomial::from_x_terms(
            &ctx,
            &q(),
            vec![(vec![0, 2], q().one()), (vec![1, 0], q().integer(-1))],
        )
        .unwrap();
        PolySystem::new(vec![f1, f2]).unwrap()
    }

    #[test]
    fn slice_basis_examples() {
        let sys = univar();
        // nothing fits below the generator degree
        assert_eq!(ideal_slice_basis(&sys, 1).rank(), 0);
        // degree 3: span { x^2 - 1, x^3 - x }
        let slice = ideal_slice_basis(&sys, 3);
        assert_eq!(slice.rank(), 2);
        assert!(slice.contains(sys.poly(0)).unwrap());
        let x = Polynomial::x_var(sys.context(), &q(), 0);
        assert!(slice.contains(&sys.poly(0).mul(&x)).unwrap());
        assert!(!slice.contains(&x).unwrap());
        // two-equation system at degree 2: exactly { f1, f2 }
        let sys2 = chained();
        let slice2 = ideal_slice_basis(&sys2, 2);
        assert_eq!(slice2.rank(), 2);
        assert_eq!(slice2.generators().len(), 2);
    }

    #[test]
    fn annihilator_dimensions() {
        let sys = univar();
        // no constraints on {1, x}
        assert_eq!(annihilator_basis(&sys, 1).len(), 2);
        // degree 3: c(x^2) = c(1) and c(x^3) = c(x)
        let basis = annihilator_basis(&sys, 3);
        assert_eq!(basis.len(), 2);
        let slice = ideal_slice_basis(&sys, 3);
        for l in &basis {
            assert_eq!(l.certified_degree(), Some(3));
            for row in slice.row_polys() {
                assert!(q().is_zero(&l.pair(&row)));
            }
        }
        // rank-nullity over the monomial index
        assert_eq!(basis.len() + slice.rank(), slice.monomials().len());
        // two-equation system at degree 2: dimension 4 of 6
        let sys2 = chained();
        assert_eq!(annihilator_basis(&sys2, 2).len(), 4);
    }

    #[test]
    fn membership_solve_examples() {
        let sys = univar();
        // zero has the all-zero cofactors
        let zero = Polynomial::zero(sys.context(), &q());
        let h = slice_membership_solve(&zero, &sys, 3).unwrap().unwrap();
        assert!(h.iter().all(Polynomial::is_zero));
        // x^3 - x = x * (x^2 - 1)
        let p = Polynomial::from_x_terms(
            sys.context(),
            &q(),
            vec![(vec![3], q().one()), (vec![1], q().integer(-1))],
        )
        .unwrap();
        let h = slice_membership_solve(&p, &sys, 3).unwrap().unwrap();
        assert_eq!(h[0], Polynomial::x_var(sys.context(), &q(), 0));
        // reconstruction is exact
        assert_eq!(h[0].mul(sys.poly(0)), p);
        // 1 is not a member at any degree
        let one = Polynomial::one(sys.context(), &q());
        assert_eq!(slice_membership_solve(&one, &sys, 5).unwrap(), None);
        // degree precondition
        assert!(matches!(
            slice_membership_solve(&p, &sys, 2),
            Err(Error::DegreeOutOfBounds { .. })
        ));
    }
}
