//! Shared generators and fixtures for the integration suites.

#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use rootfn::catalog;
use rootfn::monomial::x_monomials_upto;
use rootfn::{CatalogSystem, FieldSpec, Functional, Polynomial, PolySystem, Scalar};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn q() -> FieldSpec {
    FieldSpec::rationals()
}

pub fn fp() -> FieldSpec {
    FieldSpec::prime_field(32003).unwrap()
}

pub fn random_scalar(rng: &mut StdRng, field: &FieldSpec) -> Scalar {
    if field.is_rationals() && rng.gen_bool(0.3) {
        field
            .ratio(rng.gen_range(-9..=9), rng.gen_range(1..=9))
            .unwrap()
    } else {
        field.integer(rng.gen_range(-9..=9))
    }
}

/// A random x-only polynomial of total degree at most `degree`.
pub fn random_poly(
    rng: &mut StdRng,
    system: &PolySystem,
    degree: usize,
    max_terms: usize,
) -> Polynomial {
    let field = system.field();
    let monos = x_monomials_upto(system.n(), degree);
    let count = rng.gen_range(0..=max_terms);
    let mut terms = Vec::with_capacity(count);
    for _ in 0..count {
        let m = monos[rng.gen_range(0..monos.len())].clone();
        terms.push((m.exps().to_vec(), random_scalar(rng, field)));
    }
    Polynomial::new(system.context(), field, terms).unwrap()
}

/// A random member of the ideal, `sum h_i f_i` with `deg h_i <= cof_degree`.
pub fn random_member(
    rng: &mut StdRng,
    system: &PolySystem,
    cof_degree: usize,
    max_terms: usize,
) -> Polynomial {
    let mut acc = Polynomial::zero(system.context(), system.field());
    for i in 0..system.n() {
        let h = random_poly(rng, system, cof_degree, max_terms);
        acc = acc.add(&h.mul(system.poly(i)));
    }
    acc
}

/// A random functional with support on monomials of degree at most `degree`.
pub fn random_functional(rng: &mut StdRng, system: &PolySystem, degree: usize) -> Functional {
    let field = system.field();
    let mut entries = Vec::new();
    for m in x_monomials_upto(system.n(), degree) {
        if rng.gen_bool(0.7) {
            entries.push((m, random_scalar(rng, field)));
        }
    }
    Functional::from_support(system.context(), field, entries).unwrap()
}

/// A random-weight combination of evaluations over the full recorded root
/// set: a functional annihilating the whole ideal. Weights avoid zero so the
/// combination stays honest.
pub fn random_full_annihilator(
    rng: &mut StdRng,
    cat: &CatalogSystem,
    support_degree: usize,
) -> Functional {
    let system = cat.system();
    let field = system.field();
    let roots = cat.known_roots().expect("catalog entry with roots");
    let points: Vec<Vec<Scalar>> = roots.iter().map(|r| r.point.clone()).collect();
    let weights: Vec<Scalar> = roots
        .iter()
        .map(|_| field.integer(rng.gen_range(1..=9)))
        .collect();
    Functional::eval_combination(system.context(), field, &points, &weights, support_degree)
        .unwrap()
}

/// The combination `sum 1/J(root) * eval_root`: the canonical unit root
/// functional of a system with simple recorded roots.
pub fn jacobian_weighted_unit(cat: &CatalogSystem, support_degree: usize) -> Functional {
    let system = cat.system();
    let field = system.field();
    let roots = cat.known_roots().expect("catalog entry with roots");
    let points: Vec<Vec<Scalar>> = roots.iter().map(|r| r.point.clone()).collect();
    let weights: Vec<Scalar> = roots
        .iter()
        .map(|r| field.inv(&r.jacobian).unwrap())
        .collect();
    Functional::eval_combination(system.context(), field, &points, &weights, support_degree)
        .unwrap()
}

/// The catalog restricted to one- and two-variable systems; the heavy
/// exchange-law loops run on these.
pub fn small_catalog(field: &FieldSpec) -> Vec<CatalogSystem> {
    catalog::standard_catalog(field)
        .into_iter()
        .filter(|c| c.system().n() <= 2)
        .collect()
}

/// Entries with a complete simple rational root set recorded.
pub fn rooted_catalog(field: &FieldSpec) -> Vec<CatalogSystem> {
    catalog::standard_catalog(field)
        .into_iter()
        .filter(|c| c.known_roots().is_some())
        .collect()
}
