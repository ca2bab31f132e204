//! Variable contexts: n declared x-variables paired with an auxiliary y-block.
//!
//! The y-variables are an internal device of the Bezoutian calculus; they are
//! never part of user input. For display, `y_i` borrows the name of its
//! paired x-variable with a prime suffix (`x1` pairs with `x1'`).

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Which variable block an operation addresses.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Block {
    X,
    Y,
}

/// The declared variables of a computation. Cheap to clone.
#[derive(Clone, Eq, Debug)]
pub struct VarContext {
    inner: Arc<Inner>,
}

#[derive(PartialEq, Eq, Debug)]
struct Inner {
    names: Vec<String>,
}

impl PartialEq for VarContext {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner == other.inner
    }
}

impl VarContext {
    /// Declare `names` as the x-variables. Names must be distinct,
    /// non-empty identifiers (`[A-Za-z_][A-Za-z0-9_]*`).
    pub fn new<S: Into<String>>(names: Vec<S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidName("empty variable list".into()));
        }
        for name in &names {
            if !is_identifier(name) {
                return Err(Error::InvalidName(name.clone()));
            }
        }
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(Error::InvalidName(format!("duplicate `{a}`")));
            }
        }
        Ok(VarContext {
            inner: Arc::new(Inner { names }),
        })
    }

    /// Number of x-variables (the y-block has the same size).
    pub fn n(&self) -> usize {
        self.inner.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.inner.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.inner.names[i]
    }

    /// Display name of the y-variable paired with `x_i`.
    pub fn y_name(&self, i: usize) -> String {
        format!("{}'", self.inner.names[i])
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.inner.names.iter().position(|n| n == name)
    }
}

impl fmt::Display for VarContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.inner.names.join(" "))
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
