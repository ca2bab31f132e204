//! The reduction engine: normal forms modulo the ideal, membership tests,
//! quotient representatives, and telescoping member decompositions.
//!
//! Reduction iterates `G -> E' * G` until the value repeats exactly. Each
//! step subtracts an ideal member and shrinks the degree by at least
//! `epsilon + 1` while above `delta_f`, so the fixed point is a
//! degree-`delta_f` representative of `G` modulo the ideal, canonical only
//! relative to the chosen unit functional. Use [`is_member`] on a difference
//! to compare representatives across different unit functionals.

use crate::bezout::Convention;
use crate::error::{Error, Result};
use crate::functional::StarContext;
use crate::monomial::x_monomials_upto;
use crate::poly::Polynomial;
use crate::system::PolySystem;
use crate::unit::UnitFunctional;

/// Knobs of the reduction engine.
#[derive(Clone, Debug)]
pub struct EngineConfig {
    /// Requested support tolerance for unit functionals.
    pub epsilon: usize,
    /// How many times to retry `epsilon + 1` on infeasibility.
    pub epsilon_escalation_limit: usize,
    /// Iteration cap for the reduction loop; `None` picks
    /// `max(deg G, delta_f) * (n + 1) + delta_f + 1`, a generous default
    /// covering unknown cofactor degrees. Hitting the cap yields an
    /// "undecided" error, never a wrong answer.
    pub membership_iteration_cap: Option<usize>,
    /// Divided-difference convention; must match the unit functional's.
    pub convention: Convention,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            epsilon: 0,
            epsilon_escalation_limit: 3,
            membership_iteration_cap: None,
            convention: Convention::Forward,
        }
    }
}

impl EngineConfig {
    fn cap_for(&self, f: &PolySystem, g: &Polynomial) -> usize {
        match self.membership_iteration_cap {
            Some(cap) => {
                assert!(cap >= 1, "iteration cap must be positive");
                cap
            }
            None => {
                let delta = f.delta_f() as i64;
                let d = g.x_degree().max(delta) as usize;
                d * (f.n() + 1) + f.delta_f() + 1
            }
        }
    }
}

/// The full step sequence of one reduction run.
#[derive(Clone, Debug)]
pub struct ReductionTrace {
    pub input: Polynomial,
    /// `G_0, G_1, ..., G_P` with `G_{p+1} = E' * G_p`.
    pub steps: Vec<Polynomial>,
    /// `P`, the number of star applications performed.
    pub iterations: usize,
    /// Whether the run ended because `G_P = G_{P-1}`.
    pub stabilized: bool,
}

fn check_engine_inputs(
    f: &PolySystem,
    unit: &UnitFunctional,
    g: &Polynomial,
    config: &EngineConfig,
) -> Result<()> {
    if !g.is_x_only() {
        return Err(Error::NotXOnly);
    }
    if config.convention != unit.convention() {
        return Err(Error::ConventionMismatch);
    }
    if unit.base().system_ref() != Some(f) {
        return Err(Error::InvalidSystem(
            "unit functional was built for a different system".into(),
        ));
    }
    Ok(())
}

/// Iterate `G -> E' * G` to its fixed point: the normal form of `G` modulo
/// the ideal, of degree at most `delta_f`, together with the full trace.
pub fn normal_form(
    f: &PolySystem,
    unit: &UnitFunctional,
    g: &Polynomial,
    config: &EngineConfig,
) -> Result<(Polynomial, ReductionTrace)> {
    check_engine_inputs(f, unit, g, config)?;
    let cap = config.cap_for(f, g);
    let star = StarContext::new(f, unit.convention());
    let mut steps = vec![g.clone()];
    for _ in 0..cap {
        let next = star.star_poly(unit.base(), steps.last().expect("nonempty"))?;
        let fixed = &next == steps.last().expect("nonempty");
        steps.push(next);
        if fixed {
            let nf = steps.last().expect("nonempty").clone();
            debug_assert!(nf.x_degree() <= f.delta_f() as i64);
            let iterations = steps.len() - 1;
            return Ok((
                nf,
                ReductionTrace {
                    input: g.clone(),
                    steps,
                    iterations,
                    stabilized: true,
                },
            ));
        }
    }
    Err(Error::CapExceeded { iterations: cap })
}

/// True exactly when the normal form of `G` is zero. A cap overrun
/// propagates as [`Error::CapExceeded`] ("undecided"), never as `false`.
pub fn is_member(
    f: &PolySystem,
    unit: &UnitFunctional,
    g: &Polynomial,
    config: &EngineConfig,
) -> Result<bool> {
    let (nf, _) = normal_form(f, unit, g, config)?;
    Ok(nf.is_zero())
}

/// The representatives `E' * x^a` for all monomials of degree at most
/// `delta_f`; their span covers the quotient ring modulo the ideal.
pub fn quotient_representatives(
    f: &PolySystem,
    unit: &UnitFunctional,
) -> Result<Vec<Polynomial>> {
    if unit.base().system_ref() != Some(f) {
        return Err(Error::InvalidSystem(
            "unit functional was built for a different system".into(),
        ));
    }
    let star = StarContext::new(f, unit.convention());
    let mut reps = Vec::new();
    for mono in x_monomials_upto(f.n(), f.delta_f()) {
        let p = Polynomial::monomial_term(f.context(), f.field(), mono, f.field().one());
        reps.push(star.star_poly(unit.base(), &p)?);
    }
    Ok(reps)
}

/// Split an ideal member `G` into the telescoping summands
/// `G = sum_p (G_p - E' * G_p)`, each one an ideal member itself.
/// Returns [`Error::NotAMember`] when the reduction fixed point is nonzero.
pub fn telescoped_member_decomposition(
    f: &PolySystem,
    unit: &UnitFunctional,
    g: &Polynomial,
    config: &EngineConfig,
) -> Result<Vec<Polynomial>> {
    let (nf, trace) = normal_form(f, unit, g, config)?;
    if !nf.is_zero() {
        return Err(Error::NotAMember);
    }
    let first_zero = trace
        .steps
        .iter()
        .position(Polynomial::is_zero)
        .expect("fixed point is zero");
    Ok(trace.steps[..first_zero].to_vec())
}
