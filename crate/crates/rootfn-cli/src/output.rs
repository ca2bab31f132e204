//! Stable text and JSON encodings of the engine's results.
//!
//! JSON schema, byte-identical across runs for identical inputs:
//!
//! - polynomial: `{"terms":[{"coeff":"a/b","exps":[...]}]}`, terms in
//!   descending canonical monomial order. `exps` covers the x-block only
//!   when the polynomial has no y-part, and both blocks (x then y)
//!   otherwise.
//! - functional: `{"support":[{"exps":[...],"value":"a/b"}],"certified_degree":d}`
//!   with x-block exponents.
//! - traces: ordered polynomial lists, first step first.

use serde::{Deserialize, Serialize};

use rootfn::error::{Error, Result};
use rootfn::{FieldSpec, Functional, Monomial, Polynomial, VarContext};

#[derive(Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub exps: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
pub struct PolyJson {
    pub terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
pub struct SupportJson {
    pub exps: Vec<u32>,
    pub value: String,
}

#[derive(Serialize, Deserialize)]
pub struct FunctionalJson {
    pub support: Vec<SupportJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certified_degree: Option<usize>,
}

#[derive(Serialize)]
pub struct SliceJson {
    pub degree: usize,
    pub rank: usize,
    pub basis: Vec<PolyJson>,
}

#[derive(Serialize)]
pub struct AnnihilatorsJson {
    pub degree: usize,
    pub dimension: usize,
    pub functionals: Vec<FunctionalJson>,
}

#[derive(Serialize)]
pub struct UnitJson {
    pub epsilon: usize,
    pub functional: FunctionalJson,
    pub cofactors: Vec<PolyJson>,
    pub unique: bool,
}

#[derive(Serialize)]
pub struct ReduceJson {
    pub normal_form: PolyJson,
    pub iterations: usize,
    pub stabilized: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<PolyJson>>,
}

#[derive(Serialize)]
pub struct MemberJson {
    pub member: bool,
}

#[derive(Serialize)]
pub struct QuotientJson {
    pub representatives: Vec<PolyJson>,
}

pub fn poly_to_json(p: &Polynomial) -> PolyJson {
    let x_only = p.is_x_only();
    let n = p.context().n();
    let terms = p
        .terms()
        .rev()
        .map(|(m, c)| TermJson {
            coeff: c.to_string(),
            exps: if x_only {
                m.exps()[..n].to_vec()
            } else {
                m.exps().to_vec()
            },
        })
        .collect();
    PolyJson { terms }
}

pub fn functional_to_json(l: &Functional) -> FunctionalJson {
    let n = l.context().n();
    let support = l
        .support()
        .rev()
        .map(|(m, v)| SupportJson {
            exps: m.exps()[..n].to_vec(),
            value: v.to_string(),
        })
        .collect();
    FunctionalJson {
        support,
        certified_degree: l.certified_degree(),
    }
}

/// Decode a functional from its JSON form. A claimed `certified_degree` is
/// not trusted here; the caller re-verifies it against the system.
pub fn functional_from_json(
    json: &FunctionalJson,
    context: &VarContext,
    field: &FieldSpec,
) -> Result<Functional> {
    let n = context.n();
    let mut entries = Vec::with_capacity(json.support.len());
    for s in &json.support {
        if s.exps.len() != n {
            return Err(Error::ArityMismatch {
                expected: n,
                got: s.exps.len(),
            });
        }
        entries.push((Monomial::from_x_exps(n, &s.exps), field.parse_scalar(&s.value)?));
    }
    Functional::from_support(context, field, entries)
}

pub fn to_json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable");
    s.push('\n');
    s
}
