//! Unit root functionals: bounded functionals that act as an identity for
//! the star operation and drive the reduction engine.
//!
//! A unit functional `E'` at tolerance `epsilon` annihilates the slice
//! `(f)^{<= delta_f + epsilon}` and satisfies `E' * 1 = 1 + sum g_i f_i`
//! with `deg(g_i f_i) <= delta_f`. Both conditions are linear in the values
//! of `E'` on monomials of degree at most `delta_f + epsilon`, so existence
//! is decided by one exact linear solve; an empty solution set is reported
//! as infeasibility, never guessed around.

use crate::bezout::{bezoutian, Convention};
use crate::context::Block;
use crate::error::{Error, Result};
use crate::functional::Functional;
use crate::linalg::ExactMatrix;
use crate::monomial::x_monomials_upto;
use crate::poly::Polynomial;
use crate::slice::{ideal_slice_basis, slice_membership_solve};
use crate::system::PolySystem;

/// A verified unit root functional.
#[derive(Clone, Debug)]
pub struct UnitFunctional {
    base: Functional,
    epsilon: usize,
    certificate: Option<Vec<Polynomial>>,
    convention: Convention,
    unique: bool,
}

impl UnitFunctional {
    /// The underlying functional, certified at degree `delta_f + epsilon`.
    pub fn base(&self) -> &Functional {
        &self.base
    }

    pub fn epsilon(&self) -> usize {
        self.epsilon
    }

    /// The cofactors `g` with `E' * 1 - 1 = sum g_i f_i`, when recorded.
    pub fn certificate(&self) -> Option<&[Polynomial]> {
        self.certificate.as_deref()
    }

    /// The divided-difference convention this functional was solved under.
    pub fn convention(&self) -> Convention {
        self.convention
    }

    /// Whether the defining linear system pinned the functional uniquely.
    /// Any solution satisfies the unit conditions; this is diagnostic only.
    pub fn unique_solution(&self) -> bool {
        self.unique
    }

    /// Verify that an externally built functional is a unit root functional
    /// of `f` at tolerance `epsilon`, and wrap it. Fails when annihilation
    /// does not hold or when `E' * 1 - 1` has no cofactor representation
    /// within degree `delta_f`.
    pub fn from_functional(
        f: &PolySystem,
        base: Functional,
        epsilon: usize,
        convention: Convention,
    ) -> Result<Self> {
        let delta = f.delta_f();
        let slice = ideal_slice_basis(f, delta + epsilon);
        let base = base.uncertified().certified_against(&slice)?;
        let b = bezoutian(f, convention);
        let star_one = base.apply(&b, Block::Y);
        let diff = star_one.sub(&Polynomial::one(f.context(), f.field()));
        match slice_membership_solve(&diff, f, delta)? {
            Some(g) => Ok(UnitFunctional {
                base,
                epsilon,
                certificate: Some(g),
                convention,
                unique: false,
            }),
            None => Err(Error::BadCertificate { degree: delta }),
        }
    }
}

/// Solve for a unit root functional of `f` with support on monomials of
/// degree at most `delta_f + epsilon`.
///
/// The unknowns are the support values together with the cofactor
/// coordinates of `E' * 1 - 1` over the degree-`delta_f` slice generators;
/// the affine solution set is resolved deterministically by setting free
/// variables to zero. Returns [`Error::Infeasible`] when the solution set is
/// empty (the caller may escalate `epsilon`).
pub fn unit_functional(
    f: &PolySystem,
    epsilon: usize,
    convention: Convention,
) -> Result<UnitFunctional> {
    let field = *f.field();
    let n = f.n();
    let delta = f.delta_f();
    let support_monos = x_monomials_upto(n, delta + epsilon);
    let target_monos = x_monomials_upto(n, delta);
    let target_index: std::collections::BTreeMap<_, _> = target_monos
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    let support_index: std::collections::BTreeMap<_, _> = support_monos
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();

    let slice_eps = ideal_slice_basis(f, delta + epsilon);
    let slice_delta = ideal_slice_basis(f, delta);
    let generators = slice_delta.generators().to_vec();

    let b = bezoutian(f, convention);
    let num_e = support_monos.len();
    let num_c = generators.len();
    let rows_a = slice_eps.rank();
    let rows_b = target_monos.len();

    let mut matrix = ExactMatrix::zero(&field, rows_a + rows_b, num_e + num_c);
    let mut rhs = vec![field.zero(); rows_a + rows_b];

    // (a) annihilation of the slice at delta_f + epsilon
    for r in 0..rows_a {
        for c in 0..num_e {
            matrix.set(r, c, slice_eps.basis().get(r, c).clone());
        }
    }

    // (b) E'(y).B(x,y) - sum c_g gen_g = 1, matched per x-monomial
    for (mono, coeff) in b.terms() {
        let row = rows_a + target_index[&mono.x_block_only()];
        let col = support_index[&mono.y_block_as_x()];
        let v = field.add(matrix.get(row, col), coeff);
        matrix.set(row, col, v);
    }
    for (g, gen) in generators.iter().enumerate() {
        let gen_poly = f.poly(gen.0).mul(&Polynomial::monomial_term(
            f.context(),
            &field,
            gen.1.clone(),
            field.one(),
        ));
        for (mono, coeff) in gen_poly.terms() {
            let row = rows_a + target_index[mono];
            matrix.set(row, num_e + g, field.neg(coeff));
        }
    }
    rhs[rows_a + target_index[&crate::monomial::Monomial::one(n)]] = field.one();

    let Some(solution) = matrix.solve(&rhs) else {
        return Err(Error::Infeasible {
            delta_f: delta,
            epsilon_first: epsilon,
            epsilon_last: epsilon,
        });
    };
    let unique = matrix
        .nullspace()
        .iter()
        .all(|v| v[..num_e].iter().all(|c| field.is_zero(c)));

    let entries: Vec<_> = support_monos
        .iter()
        .cloned()
        .zip(solution[..num_e].iter().cloned())
        .collect();
    let base = Functional::from_support(f.context(), &field, entries)
        .expect("x-only support")
        .certified_against(&slice_eps)
        .expect("solved functional annihilates the slice");

    let mut cofactors = vec![Polynomial::zero(f.context(), &field); n];
    for ((i, alpha), c) in generators.iter().zip(&solution[num_e..]) {
        if field.is_zero(c) {
            continue;
        }
        let term = Polynomial::monomial_term(f.context(), &field, alpha.clone(), c.clone());
        cofactors[*i] = cofactors[*i].add(&term);
    }

    // re-verify the unit condition exactly before handing the result out
    let star_one = base.apply(&b, Block::Y);
    let mut reconstructed = Polynomial::one(f.context(), &field);
    for (g, fi) in cofactors.iter().zip(f.polys()) {
        reconstructed = reconstructed.add(&g.mul(fi));
    }
    assert_eq!(star_one, reconstructed, "unit condition failed to verify");

    Ok(UnitFunctional {
        base,
        epsilon,
        certificate: Some(cofactors),
        convention,
        unique,
    })
}

/// Try `epsilon, epsilon + 1, ..., epsilon + escalation_limit` in order and
/// return the first unit functional found.
pub fn unit_functional_escalating(
    f: &PolySystem,
    epsilon: usize,
    escalation_limit: usize,
    convention: Convention,
) -> Result<UnitFunctional> {
    for eps in epsilon..=epsilon + escalation_limit {
        match unit_functional(f, eps, convention) {
            Ok(u) => return Ok(u),
            Err(Error::Infeasible { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::Infeasible {
        delta_f: f.delta_f(),
        epsilon_first: epsilon,
        epsilon_last: epsilon + escalation_limit,
    })
}
