//! A small catalog of worked systems with known structure, used by the test
//! suites and the guide.
//!
//! Every catalog entry has pairwise coprime leading monomials, so the
//! division oracle applies; entries whose full root set is rational and
//! simple also carry their roots and Jacobian values.

use crate::context::VarContext;
use crate::error::Result;
use crate::field::{FieldSpec, Scalar};
use crate::oracle::CatalogSystem;
use crate::poly::Polynomial;
use crate::system::PolySystem;

fn ctx(n: usize) -> VarContext {
    VarContext::new((1..=n).map(|i| format!("x{i}")).collect::<Vec<_>>()).expect("valid names")
}

fn poly(c: &VarContext, field: &FieldSpec, terms: &[(&[u32], i64)]) -> Polynomial {
    let t = terms
        .iter()
        .map(|(e, k)| (e.to_vec(), field.integer(*k)))
        .collect();
    Polynomial::from_x_terms(c, field, t).expect("catalog term shape")
}

/// `f_i = x_i`: the coordinate system, with the origin as its only root.
pub fn coordinate_axes(field: &FieldSpec, n: usize) -> Result<CatalogSystem> {
    let c = ctx(n);
    let polys = (0..n).map(|i| Polynomial::x_var(&c, field, i)).collect();
    let system = PolySystem::new(polys)?;
    let origin = vec![field.zero(); n];
    CatalogSystem::new(system, Some(vec![origin]))
}

/// `f_i = x_i^2 - 1`: the sign grid, with all 2^n sign vectors as roots.
pub fn squares_minus_one(field: &FieldSpec, n: usize) -> Result<CatalogSystem> {
    let c = ctx(n);
    let polys = (0..n)
        .map(|i| {
            let mut e = vec![0u32; n];
            e[i] = 2;
            poly(&c, field, &[(&e, 1), (&vec![0; n], -1)])
        })
        .collect();
    let system = PolySystem::new(polys)?;
    let mut roots = Vec::new();
    for mask in 0..(1u32 << n) {
        let point: Vec<Scalar> = (0..n)
            .map(|i| {
                if mask & (1 << i) == 0 {
                    field.one()
                } else {
                    field.integer(-1)
                }
            })
            .collect();
        roots.push(point);
    }
    CatalogSystem::new(system, Some(roots))
}

/// `x^3 - x` in one variable, with roots 0 and +-1.
pub fn cubic_three_roots(field: &FieldSpec) -> Result<CatalogSystem> {
    let c = ctx(1);
    let system = PolySystem::new(vec![poly(&c, field, &[(&[3], 1), (&[1], -1)])])?;
    let roots = vec![
        vec![field.zero()],
        vec![field.one()],
        vec![field.integer(-1)],
    ];
    CatalogSystem::new(system, Some(roots))
}

/// `(x1^2 - 1, x2^2 - x1)`: a chained system whose root set is not fully
/// rational, so no roots are recorded.
pub fn chained_squares(field: &FieldSpec) -> Result<CatalogSystem> {
    let c = ctx(2);
    let f1 = poly(&c, field, &[(&[2, 0], 1), (&[0, 0], -1)]);
    let f2 = poly(&c, field, &[(&[0, 2], 1), (&[1, 0], -1)]);
    CatalogSystem::new(PolySystem::new(vec![f1, f2])?, None)
}

/// `(x1^2 + x1*x2 - 2, x2^2 - 1)`: a mixed-term system with four simple
/// rational roots, whose two divided-difference conventions genuinely
/// differ.
pub fn shear_pair(field: &FieldSpec) -> Result<CatalogSystem> {
    let c = ctx(2);
    let f1 = poly(&c, field, &[(&[2, 0], 1), (&[1, 1], 1), (&[0, 0], -2)]);
    let f2 = poly(&c, field, &[(&[0, 2], 1), (&[0, 0], -1)]);
    let system = PolySystem::new(vec![f1, f2])?;
    let pt = |a: i64, b: i64| vec![field.integer(a), field.integer(b)];
    let roots = vec![pt(1, 1), pt(-2, 1), pt(-1, -1), pt(2, -1)];
    CatalogSystem::new(system, Some(roots))
}

/// `f_i = x_i^(d_i)`: pure powers, a single root of full multiplicity at the
/// origin (no simple roots to record).
pub fn pure_powers(field: &FieldSpec, degrees: &[u32]) -> Result<CatalogSystem> {
    let n = degrees.len();
    let c = ctx(n);
    let polys = degrees
        .iter()
        .enumerate()
        .map(|(i, &d)| {
            let mut e = vec![0u32; n];
            e[i] = d;
            poly(&c, field, &[(&e, 1)])
        })
        .collect();
    CatalogSystem::new(PolySystem::new(polys)?, None)
}

/// The full catalog exercised by the acceptance suite.
pub fn standard_catalog(field: &FieldSpec) -> Vec<CatalogSystem> {
    vec![
        coordinate_axes(field, 2).expect("catalog"),
        squares_minus_one(field, 1).expect("catalog"),
        cubic_three_roots(field).expect("catalog"),
        chained_squares(field).expect("catalog"),
        squares_minus_one(field, 2).expect("catalog"),
        shear_pair(field).expect("catalog"),
        pure_powers(field, &[2, 2]).expect("catalog"),
        squares_minus_one(field, 3).expect("catalog"),
    ]
}
