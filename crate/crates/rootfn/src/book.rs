//! Doc-test anchors for the guide in `book/`: every chapter is attached as
//! documentation here so `cargo test --doc` compiles and runs its code
//! blocks, keeping the book and the crate in sync.

#[doc = include_str!("../../../book/src/introduction.md")]
pub struct GuideIntroduction;

#[doc = include_str!("../../../book/src/polynomials.md")]
pub struct GuidePolynomials;

#[doc = include_str!("../../../book/src/bezoutians.md")]
pub struct GuideBezoutians;

#[doc = include_str!("../../../book/src/functionals.md")]
pub struct GuideFunctionals;

#[doc = include_str!("../../../book/src/slices.md")]
pub struct GuideSlices;

#[doc = include_str!("../../../book/src/reduction.md")]
pub struct GuideReduction;

#[doc = include_str!("../../../book/src/cli.md")]
pub struct GuideCli;
