//! Property tests for the algebraic plumbing: ring axioms, canonical form,
//! the telescoping identity, bordered-determinant structure, exact linear
//! algebra, and parse/print round trips.

use std::collections::BTreeMap;

use proptest::prelude::*;

use rootfn::bezout::{bordered_det, divided_differences, BottomRow};
use rootfn::monomial::x_monomials_upto;
use rootfn::parse::parse_poly;
use rootfn::slice::slice_membership_solve;
use rootfn::{
    Block, Convention, ExactMatrix, FieldSpec, Polynomial, PolySystem, Scalar, VarContext,
};

fn ctx(n: usize) -> VarContext {
    VarContext::new((1..=n).map(|i| format!("x{i}")).collect::<Vec<_>>()).unwrap()
}

fn scalar(field: FieldSpec, num: i64, den: i64) -> Scalar {
    if field.is_rationals() {
        field.ratio(num, den.max(1)).unwrap()
    } else {
        field.integer(num)
    }
}

#[derive(Clone, Debug)]
struct PolySpecimen {
    n: usize,
    terms: Vec<(usize, i64, i64)>,
}

fn arb_specimen(max_n: usize, degree: usize) -> impl Strategy<Value = PolySpecimen> {
    (1..=max_n).prop_flat_map(move |n| {
        let count = x_monomials_upto(n, degree).len();
        proptest::collection::vec((0..count, -9i64..=9, 1i64..=6), 0..=6)
            .prop_map(move |terms| PolySpecimen { n, terms })
    })
}

fn build(spec: &PolySpecimen, field: FieldSpec, degree: usize) -> Polynomial {
    let c = ctx(spec.n);
    let monos = x_monomials_upto(spec.n, degree);
    let terms = spec
        .terms
        .iter()
        .map(|(i, num, den)| (monos[*i].exps().to_vec(), scalar(field, *num, *den)))
        .collect();
    Polynomial::new(&c, &field, terms).unwrap()
}

/// Strategy yielding compatible random triples over Q.
fn arb_triple(degree: usize) -> impl Strategy<Value = (Polynomial, Polynomial, Polynomial)> {
    (1..=3usize).prop_flat_map(move |n| {
        let count = x_monomials_upto(n, degree).len();
        let one = proptest::collection::vec((0..count, -9i64..=9, 1i64..=6), 0..=6);
        (one.clone(), one.clone(), one).prop_map(move |(a, b, c)| {
            let q = FieldSpec::rationals();
            let mk = |terms| build(&PolySpecimen { n, terms }, q, degree);
            (mk(a), mk(b), mk(c))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn polynomial_ring_axioms((a, b, c) in arb_triple(5)) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        // degrees add over a field
        if !a.is_zero() && !b.is_zero() {
            prop_assert_eq!(a.mul(&b).total_degree(), a.total_degree() + b.total_degree());
        }
    }

    #[test]
    fn operations_keep_canonical_form((a, b, c) in arb_triple(4)) {
        for p in [a.add(&b), a.sub(&b), a.mul(&b), b.mul(&c), a.neg()] {
            prop_assert!(p.is_canonical());
        }
    }

    #[test]
    fn substitution_round_trips(spec in arb_specimen(3, 4)) {
        for field in [FieldSpec::rationals(), FieldSpec::prime_field(32003).unwrap()] {
            let p = build(&spec, field, 4);
            let c = p.context().clone();
            let n = c.n();
            let to_y: BTreeMap<usize, Polynomial> =
                (0..n).map(|i| (i, Polynomial::y_var(&c, &field, i))).collect();
            let to_x: BTreeMap<usize, Polynomial> =
                (0..n).map(|i| (i, Polynomial::x_var(&c, &field, i))).collect();
            let there = p.substitute_block(Block::X, &to_y).unwrap();
            prop_assert_eq!(&there, &p.swap_blocks());
            let back = there.substitute_block(Block::Y, &to_x).unwrap();
            prop_assert_eq!(&back, &p);
            prop_assert_eq!(p.swap_blocks().swap_blocks(), p);
        }
    }

    #[test]
    fn telescoping_identity_holds(spec in arb_specimen(3, 5)) {
        for field in [FieldSpec::rationals(), FieldSpec::prime_field(32003).unwrap()] {
            let p = build(&spec, field, 5);
            let c = p.context().clone();
            let n = c.n();
            for convention in [Convention::Forward, Convention::Reverse] {
                let dd = divided_differences(&p, convention).unwrap();
                let mut sum = Polynomial::zero(&c, &field);
                for (j, component) in dd.iter().enumerate() {
                    let step = Polynomial::x_var(&c, &field, j)
                        .sub(&Polynomial::y_var(&c, &field, j));
                    sum = sum.add(&component.mul(&step));
                }
                prop_assert_eq!(sum, p.sub(&p.swap_blocks()));
                let _ = n;
            }
        }
    }

    #[test]
    fn parse_print_round_trip(spec in arb_specimen(3, 5)) {
        for field in [FieldSpec::rationals(), FieldSpec::prime_field(32003).unwrap()] {
            let p = build(&spec, field, 5);
            let reparsed = parse_poly(&p.to_string(), p.context(), &field).unwrap();
            prop_assert_eq!(reparsed, p);
        }
    }
}

fn chained() -> PolySystem {
    let c = ctx(2);
    let q = FieldSpec::rationals();
    let f1 = Polynomial::from_x_terms(
        &c,
        &q,
        vec![(vec![2, 0], q.one()), (vec![0, 0], q.integer(-1))],
    )
    .unwrap();
    let f2 = Polynomial::from_x_terms(
        &c,
        &q,
        vec![(vec![0, 2], q.one()), (vec![1, 0], q.integer(-1))],
    )
    .unwrap();
    PolySystem::new(vec![f1, f2]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bordered_forms_agree_and_are_linear(
        a_terms in proptest::collection::vec((0usize..15, -9i64..=9), 0..=5),
        b_terms in proptest::collection::vec((0usize..15, -9i64..=9), 0..=5),
        ca in -5i64..=5,
        cb in -5i64..=5,
    ) {
        let f = chained();
        let q = FieldSpec::rationals();
        let monos = x_monomials_upto(2, 4);
        let mk = |terms: &[(usize, i64)]| {
            Polynomial::new(
                f.context(),
                &q,
                terms
                    .iter()
                    .map(|(i, k)| (monos[*i].exps().to_vec(), q.integer(*k)))
                    .collect(),
            )
            .unwrap()
        };
        let big_f = mk(&a_terms);
        let big_g = mk(&b_terms);
        for convention in [Convention::Forward, Convention::Reverse] {
            let x_form = bordered_det(&f, &big_f, BottomRow::XForm, convention).unwrap();
            let y_form = bordered_det(&f, &big_f, BottomRow::YForm, convention).unwrap();
            prop_assert_eq!(&x_form, &y_form);
            // linearity in the border argument
            let combo = big_f.scalar_mul(&q.integer(ca)).add(&big_g.scalar_mul(&q.integer(cb)));
            let lhs = bordered_det(&f, &combo, BottomRow::XForm, convention).unwrap();
            let rhs = x_form
                .scalar_mul(&q.integer(ca))
                .add(&bordered_det(&f, &big_g, BottomRow::XForm, convention)
                    .unwrap()
                    .scalar_mul(&q.integer(cb)));
            prop_assert_eq!(lhs, rhs);
            // y-degree bound
            prop_assert!(x_form.y_degree() <= f.delta_f() as i64 + big_f.x_degree().max(0));
        }
    }

    #[test]
    fn rref_is_idempotent_and_preserves_row_space(
        rows in proptest::collection::vec(
            proptest::collection::vec(-9i64..=9, 4),
            1..=5,
        ),
    ) {
        let q = FieldSpec::rationals();
        let m = ExactMatrix::from_rows(
            &q,
            rows.iter()
                .map(|r| r.iter().map(|k| q.integer(*k)).collect())
                .collect(),
        )
        .unwrap();
        let (r1, p1) = m.rref();
        let (r2, p2) = r1.rref();
        prop_assert_eq!(&r1, &r2);
        prop_assert_eq!(&p1, &p2);
        // row spaces coincide: stacking changes no rank
        let mut stacked: Vec<Vec<Scalar>> = Vec::new();
        for i in 0..m.rows() {
            stacked.push(m.row(i).to_vec());
        }
        for i in 0..p1.len() {
            stacked.push(r1.row(i).to_vec());
        }
        let stacked = ExactMatrix::from_rows(&q, stacked).unwrap();
        prop_assert_eq!(stacked.rank(), m.rank());
        prop_assert_eq!(m.rank(), p1.len());
    }

    #[test]
    fn membership_solve_round_trips(
        h1_terms in proptest::collection::vec((0usize..6, -9i64..=9), 0..=4),
        h2_terms in proptest::collection::vec((0usize..6, -9i64..=9), 0..=4),
    ) {
        let f = chained();
        let q = FieldSpec::rationals();
        let monos = x_monomials_upto(2, 2);
        let mk = |terms: &[(usize, i64)]| {
            Polynomial::new(
                f.context(),
                &q,
                terms
                    .iter()
                    .map(|(i, k)| (monos[*i].exps().to_vec(), q.integer(*k)))
                    .collect(),
            )
            .unwrap()
        };
        let h = [mk(&h1_terms), mk(&h2_terms)];
        let mut p = Polynomial::zero(f.context(), &q);
        for (hi, fi) in h.iter().zip(f.polys()) {
            p = p.add(&hi.mul(fi));
        }
        let d = (f.delta_f() + 2).max(p.total_degree().max(0) as usize);
        let solved = slice_membership_solve(&p, &f, d).unwrap();
        let cofactors = solved.expect("constructed members are members");
        let mut rebuilt = Polynomial::zero(f.context(), &q);
        for (hi, fi) in cofactors.iter().zip(f.polys()) {
            rebuilt = rebuilt.add(&hi.mul(fi));
        }
        prop_assert_eq!(rebuilt, p);
    }
}
