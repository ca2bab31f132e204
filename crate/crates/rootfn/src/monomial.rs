//! Monomials over paired variable blocks, ordered by graded reverse-lexicographic order.
//!
//! A monomial stores 2n exponents: the x-block followed by the y-block. The
//! ordering is grevlex on the concatenated exponent vector, which restricts
//! to ordinary grevlex on x-only monomials. `Ord` is ascending, so the last
//! key of a `BTreeMap<Monomial, _>` is the leading monomial.

use std::cmp::Ordering;

use crate::context::Block;
use crate::field::{FieldSpec, Scalar};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    /// Wrap an exponent vector (x-block then y-block; length must be even).
    pub fn new(exps: Vec<u32>) -> Self {
        assert!(exps.len() % 2 == 0, "exponent vector must cover both blocks");
        Monomial { exps }
    }

    /// The constant monomial for `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; 2 * n] }
    }

    /// The monomial `x_i`.
    pub fn x_var(n: usize, i: usize) -> Self {
        let mut exps = vec![0; 2 * n];
        exps[i] = 1;
        Monomial { exps }
    }

    /// The monomial `y_i`.
    pub fn y_var(n: usize, i: usize) -> Self {
        let mut exps = vec![0; 2 * n];
        exps[n + i] = 1;
        Monomial { exps }
    }

    /// An x-only monomial from x-block exponents.
    pub fn from_x_exps(n: usize, x: &[u32]) -> Self {
        assert_eq!(x.len(), n);
        let mut exps = vec![0; 2 * n];
        exps[..n].copy_from_slice(x);
        Monomial { exps }
    }

    /// Number of variable pairs.
    pub fn arity(&self) -> usize {
        self.exps.len() / 2
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn x_exps(&self) -> &[u32] {
        &self.exps[..self.arity()]
    }

    pub fn y_exps(&self) -> &[u32] {
        &self.exps[self.arity()..]
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn x_degree(&self) -> u32 {
        self.x_exps().iter().sum()
    }

    pub fn y_degree(&self) -> u32 {
        self.y_exps().iter().sum()
    }

    pub fn block_degree(&self, block: Block) -> u32 {
        match block {
            Block::X => self.x_degree(),
            Block::Y => self.y_degree(),
        }
    }

    pub fn is_x_only(&self) -> bool {
        self.y_exps().iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.len() == other.exps.len()
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn div_into(&self, other: &Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial {
                exps: other
                    .exps
                    .iter()
                    .zip(&self.exps)
                    .map(|(b, a)| b - a)
                    .collect(),
            })
        } else {
            None
        }
    }

    /// Exchange the x- and y-blocks.
    pub fn swap_blocks(&self) -> Monomial {
        let n = self.arity();
        let mut exps = vec![0; 2 * n];
        exps[..n].copy_from_slice(self.y_exps());
        exps[n..].copy_from_slice(self.x_exps());
        Monomial { exps }
    }

    /// The x-only monomial carrying this monomial's y-exponents.
    pub fn y_block_as_x(&self) -> Monomial {
        Monomial::from_x_exps(self.arity(), self.y_exps())
    }

    /// The x-only monomial carrying this monomial's x-exponents.
    pub fn x_block_only(&self) -> Monomial {
        Monomial::from_x_exps(self.arity(), self.x_exps())
    }

    /// Evaluate the x-part at a point; the y-part must be empty.
    pub fn eval_x(&self, field: &FieldSpec, point: &[Scalar]) -> Scalar {
        debug_assert!(self.is_x_only());
        debug_assert_eq!(point.len(), self.arity());
        let mut acc = field.one();
        for (e, xi) in self.x_exps().iter().zip(point) {
            if *e > 0 {
                acc = field.mul(&acc, &field.pow(xi, *e));
            }
        }
        acc
    }

    /// True when no variable occurs in both monomials.
    pub fn coprime_with(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// All x-only monomials of total degree at most `d` over `n` variables, in
/// ascending grevlex order. This is the fixed index of `R[x^{<= d}]` used by
/// every matrix in the crate.
pub fn x_monomials_upto(n: usize, d: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    fn rec(out: &mut Vec<Monomial>, exps: &mut Vec<u32>, pos: usize, left: u32, n: usize) {
        if pos == n {
            out.push(Monomial::from_x_exps(n, exps));
            return;
        }
        for e in 0..=left {
            exps[pos] = e;
            rec(out, exps, pos + 1, left - e, n);
        }
        exps[pos] = 0;
    }
    rec(&mut out, &mut exps, 0, d as u32, n);
    out.sort();
    out
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    /// Ascending grevlex: first by total degree; ties broken so that of two
    /// monomials of equal degree, the one with the smaller exponent at the
    /// last differing position is the larger.
    fn cmp(&self, other: &Self) -> Ordering {
        assert_eq!(self.exps.len(), other.exps.len(), "mixed-arity monomials");
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for i in (0..self.exps.len()).rev() {
            match self.exps[i].cmp(&other.exps[i]) {
                Ordering::Equal => continue,
                // smaller exponent late in the vector => larger monomial
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }
}
