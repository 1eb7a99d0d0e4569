use num_complex::Complex64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

fn fmt_c(z: &Complex64) -> String {
    if z.im >= 0.0 {
        format!("{}+{}i", z.re, z.im)
    } else {
        format!("{}{}i", z.re, z.im)
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("series centers differ: {} vs {}", fmt_c(.0), fmt_c(.1))]
    CenterMismatch(Complex64, Complex64),

    #[error("non-invertible series: constant term vanishes")]
    NonInvertible,

    #[error("unnormalized base: constant term is {}, expected 1", fmt_c(.0))]
    UnnormalizedBase(Complex64),

    #[error("composition needs an inner series with zero constant term, got {}", fmt_c(.0))]
    NonzeroInnerConstant(Complex64),

    #[error("non-finite coefficient at index {0}")]
    NonFinite(usize),

    #[error("series order {have} is too low, need at least {need}")]
    OrderTooLow { have: usize, need: usize },

    #[error("{what} = {} lies outside the open unit disk", fmt_c(.value))]
    OutsideDisk { what: &'static str, value: Complex64 },

    #[error("f'(z)=0: not locally univalent at z={}", fmt_c(.0))]
    NotLocallyUnivalent(Complex64),

    #[error("function `{0}` is not univalent on the disk")]
    NotUnivalent(String),

    #[error("function `{0}` is not normalized: need f(0)=0 and f'(0)=1")]
    NotNormalized(String),

    #[error("enumeration limit: count {count} exceeds {limit}")]
    EnumerationLimit { count: usize, limit: usize },

    #[error("singular sample at w={}", fmt_c(.0))]
    SingularSample(Complex64),

    #[error("branch cut of the λ-power crossed at w={}", fmt_c(.0))]
    BranchCrossing(Complex64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unknown function `{0}`")]
    UnknownFunction(String),
}

pub(crate) fn check_in_disk(what: &'static str, value: Complex64) -> Result<()> {
    if value.norm() < 1.0 && value.is_finite() {
        Ok(())
    } else {
        Err(Error::OutsideDisk { what, value })
    }
}
