//! Exact computations in `RO(C_n)`-graded equivariant cohomology of
//! projective spaces with constant Mackey-functor coefficients.
//!
//! The library is organised by mathematical layer:
//!
//! - [`reps`]: virtual real representations of the cyclic group `C_n`
//!   (trivial summands, the complex characters `λ^i`, and the sign
//!   representation `σ`), with fixed-point dimensions, twisting and
//!   restriction.
//! - [`coeff`]: coefficient rings of the equivariant Eilenberg–MacLane
//!   spectra: the `a`/`u`-monomial sector of `π_★(HZ)`, general vanishing
//!   rules, and the mod-`p` Mackey functor case tables.
//! - [`decomp`]: stable wedge decompositions of equivariant projective
//!   spaces (complex, quaternionic and conjugation actions), together with
//!   the freeness hypothesis on cell filtrations and the connecting-map
//!   obstruction verdicts that certify every splitting step.
//! - [`slice`]: slice-tower certificates showing suspensions of projective
//!   space summands are slices of the expected dimension.
//! - [`ringstr`]: a small symbolic polynomial engine over `Z/p^m` used to
//!   verify multiplicative relations (Bockstein images of the projective
//!   classes, the multiplicative generators' relations, injectivity
//!   profiles of restriction maps).
//! - [`cohops`]: nonexistence reports for integral lifts of mod-`p`
//!   cohomology operations, by comparing source and target Mackey functors.
//! - [`degree`]: a parser/printer for the small degree-expression grammar
//!   shared by the command-line interface.

pub mod cohops;
pub mod coeff;
pub mod decomp;
pub mod degree;
pub mod reps;
pub mod ringstr;
pub mod slice;

/// Errors shared by all modules.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Input outside the mathematical domain of an operation
    /// (e.g. a subgroup order that does not divide the group order).
    #[error("domain error: {0}")]
    Domain(String),
    /// A degree that does not lie in the sector a computation covers.
    #[error("sector error: {0}")]
    Sector(String),
    /// A malformed degree expression, with a byte position.
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

impl Error {
    /// Process exit code used by the CLI: 1 for domain/sector errors,
    /// 2 for parse errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Domain(_) | Error::Sector(_) => 1,
            Error::Parse { .. } => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
