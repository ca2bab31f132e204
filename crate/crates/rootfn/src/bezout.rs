//! Divided differences, the nabla matrix of a system, Bezoutians, and
//! bordered determinants.
//!
//! A divided-difference tuple for `F` satisfies the telescoping identity
//! `sum_j D_j F * (x_j - y_j) = F(x) - F(y)` exactly. Such tuples are not
//! unique; this module fixes the telescoping construction (substituting one
//! variable at a time), in forward or reverse variable order.

use std::collections::HashMap;

use crate::context::VarContext;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::system::PolySystem;

/// Variable order used by the telescoping divided-difference construction.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Convention {
    /// Substitute `y_1, ..., y_n` left to right: component `j` has the
    /// variables before `j` in y and the variables after `j` in x.
    #[default]
    Forward,
    /// Substitute right to left.
    Reverse,
}

/// Compute the divided differences `(D_1 F, ..., D_n F)` of an x-only
/// polynomial, so that `sum_j D_j F * (x_j - y_j) = F(x) - F(y)`.
pub fn divided_differences(f: &Polynomial, convention: Convention) -> Result<Vec<Polynomial>> {
    if !f.is_x_only() {
        return Err(Error::NotXOnly);
    }
    let ctx = f.context();
    let field = f.field();
    let n = ctx.n();
    let mut components: Vec<std::collections::BTreeMap<Monomial, Scalar>> =
        vec![Default::default(); n];
    for (mono, coeff) in f.terms() {
        let alpha = mono.x_exps();
        for j in 0..n {
            let e = alpha[j];
            if e == 0 {
                continue;
            }
            // c * prefix * (x_j^e - y_j^e)/(x_j - y_j) * suffix, with the
            // prefix in y and the suffix in x (forward) or vice versa.
            for m in 0..e {
                let mut exps = vec![0u32; 2 * n];
                for i in 0..n {
                    if i == j {
                        continue;
                    }
                    let in_y = match convention {
                        Convention::Forward => i < j,
                        Convention::Reverse => i > j,
                    };
                    if in_y {
                        exps[n + i] = alpha[i];
                    } else {
                        exps[i] = alpha[i];
                    }
                }
                exps[j] = m;
                exps[n + j] = e - 1 - m;
                let entry = components[j]
                    .entry(Monomial::new(exps))
                    .or_insert_with(|| field.zero());
                *entry = field.add(entry, coeff);
            }
        }
    }
    Ok(components
        .into_iter()
        .map(|map| Polynomial::from_map(ctx, field, map))
        .collect())
}

/// A rectangular matrix of polynomials sharing one context and field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    /// Row-major construction.
    pub fn new(rows: usize, cols: usize, entries: Vec<Polynomial>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::BadMatrixShape("empty matrix".into()));
        }
        if entries.len() != rows * cols {
            return Err(Error::BadMatrixShape(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        let first = &entries[0];
        for e in &entries[1..] {
            if e.context() != first.context() {
                return Err(Error::ContextMismatch);
            }
            if e.field() != first.field() {
                return Err(Error::FieldMismatch);
            }
        }
        Ok(PolyMatrix { rows, cols, entries })
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Polynomial,
    ) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Self::new(rows, cols, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Polynomial {
        &self.entries[r * self.cols + c]
    }

    fn context(&self) -> &VarContext {
        self.entries[0].context()
    }

    fn field(&self) -> &FieldSpec {
        self.entries[0].field()
    }

    /// Exact determinant by Laplace expansion with column-subset memoization:
    /// the minor over the first `k` rows and a k-column subset is computed
    /// once per subset, for `2^n` subsets in total.
    pub fn det(&self) -> Result<Polynomial> {
        if self.rows != self.cols {
            return Err(Error::NonSquareMatrix {
                rows: self.rows,
                cols: self.cols,
            });
        }
        assert!(self.cols <= 32, "determinant restricted to 32 columns");
        let mut memo: HashMap<u32, Polynomial> = HashMap::new();
        let full: u32 = if self.cols == 32 {
            u32::MAX
        } else {
            (1u32 << self.cols) - 1
        };
        Ok(self.det_minor(full, &mut memo))
    }

    /// Determinant of the submatrix on the first `popcount(mask)` rows and
    /// the columns in `mask`, expanding along the last of those rows.
    fn det_minor(&self, mask: u32, memo: &mut HashMap<u32, Polynomial>) -> Polynomial {
        let ctx = self.context();
        let field = self.field();
        if mask == 0 {
            return Polynomial::one(ctx, field);
        }
        if let Some(hit) = memo.get(&mask) {
            return hit.clone();
        }
        let row = mask.count_ones() as usize - 1;
        let mut acc = Polynomial::zero(ctx, field);
        let mut pos = 0u32;
        for col in 0..self.cols {
            if mask & (1 << col) == 0 {
                continue;
            }
            let entry = self.get(row, col);
            if !entry.is_zero() {
                let minor = self.det_minor(mask & !(1 << col), memo);
                let signed = if (row as u32 + pos) % 2 == 0 {
                    entry.mul(&minor)
                } else {
                    entry.mul(&minor).neg()
                };
                acc = acc.add(&signed);
            }
            pos += 1;
        }
        memo.insert(mask, acc.clone());
        acc
    }
}

/// The n-by-n divided-difference matrix of a system, with entry `(j, i)`
/// holding `D_j f_i`: rows are indexed by variables, columns by equations.
#[derive(Clone, Debug)]
pub struct NablaSystem {
    system: PolySystem,
    convention: Convention,
    matrix: PolyMatrix,
}

impl NablaSystem {
    pub fn system(&self) -> &PolySystem {
        &self.system
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.matrix
    }
}

/// Build the nabla matrix of a system and verify its defining identity:
/// per column `i`, `sum_j entry(j,i) * (x_j - y_j) = f_i(x) - f_i(y)`, and
/// every entry of column `i` has x- and y-degree at most `deg f_i - 1`.
pub fn nabla_system(f: &PolySystem, convention: Convention) -> NablaSystem {
    let n = f.n();
    let ctx = f.context();
    let field = f.field();
    let mut columns = Vec::with_capacity(n);
    for i in 0..n {
        columns.push(divided_differences(f.poly(i), convention).expect("system is x-only"));
    }
    let matrix = PolyMatrix::from_fn(n, n, |j, i| columns[i][j].clone()).expect("square shape");
    for i in 0..n {
        let mut sum = Polynomial::zero(ctx, field);
        for j in 0..n {
            let xj = Polynomial::x_var(ctx, field, j);
            let yj = Polynomial::y_var(ctx, field, j);
            sum = sum.add(&matrix.get(j, i).mul(&xj.sub(&yj)));
        }
        let expected = f.poly(i).sub(&f.poly_in_y(i));
        assert_eq!(sum, expected, "telescoping identity violated in column {i}");
        let bound = f.poly(i).x_degree() - 1;
        for j in 0..n {
            let e = matrix.get(j, i);
            assert!(
                e.x_degree() <= bound && e.y_degree() <= bound,
                "degree bound violated in entry ({j}, {i})"
            );
        }
    }
    NablaSystem {
        system: f.clone(),
        convention,
        matrix,
    }
}

/// The Bezoutian `B(x, y) = det(nabla f)`; its x- and y-degrees are bounded
/// by `delta_f`.
pub fn bezoutian(f: &PolySystem, convention: Convention) -> Polynomial {
    nabla_system(f, convention)
        .matrix()
        .det()
        .expect("nabla matrix is square")
}

/// Which variables the bottom row of a bordered determinant is evaluated in.
/// The two forms are equal as polynomials: the bottom rows differ by the
/// combination `sum_j (x_j - y_j) * row_j` of the upper rows.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BottomRow {
    XForm,
    YForm,
}

/// The bordered determinant of Definition-style shape: rows `1..n` hold the
/// nabla matrix extended by the column `D_j F`, the bottom row holds
/// `(f_1, ..., f_n, F)` in x or in y.
pub fn bordered_det(
    f: &PolySystem,
    big_f: &Polynomial,
    bottom: BottomRow,
    convention: Convention,
) -> Result<Polynomial> {
    let nabla = nabla_system(f, convention);
    let dd = divided_differences(big_f, convention)?;
    let n = f.n();
    let matrix = PolyMatrix::from_fn(n + 1, n + 1, |r, c| {
        if r < n {
            if c < n {
                nabla.matrix().get(r, c).clone()
            } else {
                dd[r].clone()
            }
        } else {
            let entry = if c < n { f.poly(c).clone() } else { big_f.clone() };
            match bottom {
                BottomRow::XForm => entry,
                BottomRow::YForm => entry.swap_blocks(),
            }
        }
    })?;
    matrix.det()
}

/// Precomputed expansion of the bordered determinant along its last column:
/// `bordered(F) = F(x) * B + sum_j D_j F * M_j` with the signed minors `M_j`
/// depending only on the system. This is the workhorse behind the star
/// operations, which evaluate bordered determinants for many `F`.
#[derive(Clone, Debug)]
pub struct BorderExpansion {
    system: PolySystem,
    convention: Convention,
    bezoutian: Polynomial,
    signed_minors: Vec<Polynomial>,
}

impl BorderExpansion {
    pub fn new(f: &PolySystem, convention: Convention) -> Self {
        let n = f.n();
        let nabla = nabla_system(f, convention);
        let bez = nabla.matrix().det().expect("square");
        let mut signed_minors = Vec::with_capacity(n);
        for j in 0..n {
            // delete nabla row j and the border column; keep the x-form
            // bottom row
            let minor = PolyMatrix::from_fn(n, n, |r, c| {
                let src_row = if r < n - 1 {
                    if r < j {
                        r
                    } else {
                        r + 1
                    }
                } else {
                    n
                };
                if src_row < n {
                    nabla.matrix().get(src_row, c).clone()
                } else {
                    f.poly(c).clone()
                }
            })
            .expect("square shape")
            .det()
            .expect("square");
            signed_minors.push(if (j + n) % 2 == 0 { minor } else { minor.neg() });
        }
        BorderExpansion {
            system: f.clone(),
            convention,
            bezoutian: bez,
            signed_minors,
        }
    }

    pub fn system(&self) -> &PolySystem {
        &self.system
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn bezoutian(&self) -> &Polynomial {
        &self.bezoutian
    }

    /// `bordered_det(f, F)` in x-form, without rebuilding the minors.
    pub fn bordered_det(&self, big_f: &Polynomial) -> Result<Polynomial> {
        let dd = divided_differences(big_f, self.convention)?;
        let mut acc = big_f.mul(&self.bezoutian);
        for (d, m) in dd.iter().zip(&self.signed_minors) {
            if !d.is_zero() && !m.is_zero() {
                acc = acc.add(&d.mul(m));
            }
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::VarContext;
    use crate::field::FieldSpec;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    fn ctx(n: usize) -> VarContext {
        VarContext::new((1..=n).map(|i| format!("x{i}")).collect()).unwrap()
    }

    fn xp(c: &VarContext, terms: Vec<(Vec<u32>, i64)>) -> Polynomial {
        let field = q();
        let t = terms.into_iter().map(|(e, k)| (e, field.integer(k))).collect();
        Polynomial::from_x_terms(c, &field, t).unwrap()
    }

    fn telescoping_holds(f: &Polynomial, convention: Convention) -> bool {
        let c = f.context();
        let field = f.field();
        let dd = divided_differences(f, convention).unwrap();
        let mut sum = Polynomial::zero(c, field);
        for (j, d) in dd.iter().enumerate() {
            let diff = Polynomial::x_var(c, field, j).sub(&Polynomial::y_var(c, field, j));
            sum = sum.add(&d.mul(&diff));
        }
        sum == f.sub(&f.swap_blocks())
    }

    #[test]
    fn divided_differences_examples() {
        let c1 = ctx(1);
        // constants vanish
        let konst = Polynomial::constant(&c1, &q(), q().integer(7));
        assert!(divided_differences(&konst, Convention::Forward)
            .unwrap()
            .iter()
            .all(Polynomial::is_zero));
        // x^2 -> x + y
        let x2 = xp(&c1, vec![(vec![2], 1)]);
        let dd = divided_differences(&x2, Convention::Forward).unwrap();
        assert_eq!(dd[0].to_string(), "x1 + x1'");
        // x1*x2 forward -> (x2, y1)
        let c2 = ctx(2);
        let x1x2 = xp(&c2, vec![(vec![1, 1], 1)]);
        let dd = divided_differences(&x1x2, Convention::Forward).unwrap();
        assert_eq!(dd[0], Polynomial::x_var(&c2, &q(), 1));
        assert_eq!(dd[1], Polynomial::y_var(&c2, &q(), 0));
        // and reverse -> (y2, x1)
        let dd = divided_differences(&x1x2, Convention::Reverse).unwrap();
        assert_eq!(dd[0], Polynomial::y_var(&c2, &q(), 1));
        assert_eq!(dd[1], Polynomial::x_var(&c2, &q(), 0));
        for conv in [Convention::Forward, Convention::Reverse] {
            assert!(telescoping_holds(&x1x2, conv));
        }
        // rejects y-contaminated input
        let y = Polynomial::y_var(&c1, &q(), 0);
        assert_eq!(divided_differences(&y, Convention::Forward), Err(Error::NotXOnly));
    }

    #[test]
    fn nabla_examples() {
        // f_i = x_i gives the identity matrix
        let c2 = ctx(2);
        let coords = PolySystem::new(vec![
            Polynomial::x_var(&c2, &q(), 0),
            Polynomial::x_var(&c2, &q(), 1),
        ])
        .unwrap();
        let nabla = nabla_system(&coords, Convention::Forward);
        let one = Polynomial::one(&c2, &q());
        let zero = Polynomial::zero(&c2, &q());
        assert_eq!(nabla.matrix().get(0, 0), &one);
        assert_eq!(nabla.matrix().get(1, 1), &one);
        assert_eq!(nabla.matrix().get(0, 1), &zero);
        assert_eq!(nabla.matrix().get(1, 0), &zero);

        // (x1^2 - 1, x2^2 - x1) forward: [[x1+y1, -1], [0, x2+y2]]
        let f1 = xp(&c2, vec![(vec![2, 0], 1), (vec![0, 0], -1)]);
        let f2 = xp(&c2, vec![(vec![0, 2], 1), (vec![1, 0], -1)]);
        let sys = PolySystem::new(vec![f1, f2]).unwrap();
        let nabla = nabla_system(&sys, Convention::Forward);
        assert_eq!(nabla.matrix().get(0, 0).to_string(), "x1 + x1'");
        assert_eq!(nabla.matrix().get(0, 1).to_string(), "-1");
        assert_eq!(nabla.matrix().get(1, 0).to_string(), "0");
        assert_eq!(nabla.matrix().get(1, 1).to_string(), "x2 + x2'");
    }

    #[test]
    fn determinant_examples() {
        let c1 = ctx(1);
        let one = Polynomial::one(&c1, &q());
        let zero = Polynomial::zero(&c1, &q());
        // identity
        let id = PolyMatrix::from_fn(3, 3, |r, c| if r == c { one.clone() } else { zero.clone() })
            .unwrap();
        assert_eq!(id.det().unwrap(), one);
        // upper triangular: product of the diagonal
        let x = Polynomial::x_var(&c1, &q(), 0);
        let tri = PolyMatrix::new(
            2,
            2,
            vec![x.clone(), one.clone(), zero.clone(), x.clone()],
        )
        .unwrap();
        assert_eq!(tri.det().unwrap(), x.mul(&x));
        // hand-expanded 2x2 with polynomial entries
        let p = |t: Vec<(Vec<u32>, i64)>| {
            let field = q();
            Polynomial::new(
                &c1,
                &field,
                t.into_iter().map(|(e, k)| (e, field.integer(k))).collect(),
            )
            .unwrap()
        };
        let m = PolyMatrix::new(
            2,
            2,
            vec![
                p(vec![(vec![1, 0], 1), (vec![0, 1], 1)]),
                p(vec![(vec![2, 0], 1), (vec![1, 1], 1), (vec![0, 2], 1)]),
                p(vec![(vec![2, 0], 1), (vec![0, 0], -1)]),
                p(vec![(vec![3, 0], 1)]),
            ],
        )
        .unwrap();
        let expected = p(vec![
            (vec![2, 0], 1),
            (vec![1, 1], 1),
            (vec![0, 2], 1),
            (vec![2, 2], -1),
        ]);
        assert_eq!(m.det().unwrap(), expected);
        // non-square rejected
        let bad = PolyMatrix::new(1, 2, vec![one.clone(), zero.clone()]).unwrap();
        assert!(matches!(bad.det(), Err(Error::NonSquareMatrix { .. })));
    }

    #[test]
    fn bezoutian_examples() {
        // coordinates: B = 1
        let c2 = ctx(2);
        let coords = PolySystem::new(vec![
            Polynomial::x_var(&c2, &q(), 0),
            Polynomial::x_var(&c2, &q(), 1),
        ])
        .unwrap();
        assert_eq!(
            bezoutian(&coords, Convention::Forward),
            Polynomial::one(&c2, &q())
        );
        // x^2 - 1: B = x + y
        let c1 = ctx(1);
        let f = xp(&c1, vec![(vec![2], 1), (vec![0], -1)]);
        let sys = PolySystem::new(vec![f]).unwrap();
        assert_eq!(bezoutian(&sys, Convention::Forward).to_string(), "x1 + x1'");
        // (x1^2-1, x2^2-x1): B = (x1+y1)(x2+y2)
        let f1 = xp(&c2, vec![(vec![2, 0], 1), (vec![0, 0], -1)]);
        let f2 = xp(&c2, vec![(vec![0, 2], 1), (vec![1, 0], -1)]);
        let sys = PolySystem::new(vec![f1, f2]).unwrap();
        let b = bezoutian(&sys, Convention::Forward);
        let x1y1 = Polynomial::x_var(&c2, &q(), 0).add(&Polynomial::y_var(&c2, &q(), 0));
        let x2y2 = Polynomial::x_var(&c2, &q(), 1).add(&Polynomial::y_var(&c2, &q(), 1));
        assert_eq!(b, x1y1.mul(&x2y2));
        // degree bounds
        let delta = sys.delta_f() as i64;
        assert!(b.x_degree() <= delta && b.y_degree() <= delta);
    }

    #[test]
    fn bordered_det_examples() {
        let c1 = ctx(1);
        let f = xp(&c1, vec![(vec![2], 1), (vec![0], -1)]);
        let sys = PolySystem::new(vec![f.clone()]).unwrap();
        // F = 1 reduces to the Bezoutian
        let one = Polynomial::one(&c1, &q());
        let b = bezoutian(&sys, Convention::Forward);
        assert_eq!(
            bordered_det(&sys, &one, BottomRow::XForm, Convention::Forward).unwrap(),
            b
        );
        // F = f_i vanishes (repeated column)
        assert!(bordered_det(&sys, &f, BottomRow::XForm, Convention::Forward)
            .unwrap()
            .is_zero());
        // F = x^3: hand-expanded determinant
        let x3 = xp(&c1, vec![(vec![3], 1)]);
        let d = bordered_det(&sys, &x3, BottomRow::XForm, Convention::Forward).unwrap();
        assert_eq!(d.to_string(), "-x1^2*x1'^2 + x1^2 + x1*x1' + x1'^2");
        // the two bottom-row forms agree
        assert_eq!(
            d,
            bordered_det(&sys, &x3, BottomRow::YForm, Convention::Forward).unwrap()
        );
        // the expansion path agrees with the full determinant
        let exp = BorderExpansion::new(&sys, Convention::Forward);
        assert_eq!(exp.bordered_det(&x3).unwrap(), d);
        // y-degree bound: delta_f + deg F
        assert!(d.y_degree() <= sys.delta_f() as i64 + x3.x_degree());
    }
}
