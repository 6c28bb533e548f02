use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input must be a positive integer")]
    ZeroInput,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field of order {p}^{exponent} exceeds the 63-bit size cap")]
    FieldTooLarge { p: u64, exponent: u64 },
    #[error("extension degrees must be at least 1")]
    ZeroDegree,
    #[error("this operation requires n > 1")]
    DegenerateExtension,
    #[error("the zero polynomial has no degree")]
    ZeroPolynomial,
    #[error("polynomial must have positive degree")]
    ConstantPolynomial,
    #[error("modulus is not irreducible")]
    Reducible,
    #[error("inverse of zero")]
    DivisionByZero,
    #[error("element must be nonzero")]
    ZeroElement,
    #[error("coefficient {value} is outside the field of order {order}")]
    CoefficientOutOfRange { value: u64, order: u64 },
    #[error("element needs {got} coordinates but the field has degree {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("discrete log table of {size} entries exceeds the cap of {cap}")]
    DlogCapExceeded { size: u64, cap: u64 },
    #[error("{d} does not divide {m}")]
    NotADivisor { d: u64, m: u64 },
    #[error("character must be nontrivial")]
    TrivialCharacter,
    #[error("affine space needs at least one nonzero direction vector")]
    EmptySpan,
    #[error("dimension {dim} exceeds the extension degree {n}")]
    DimensionTooLarge { dim: usize, n: usize },
    #[error("element is not in the affine space")]
    NotInSpace,
    #[error("vectors are linearly dependent")]
    DependentBasis,
    #[error("digit position {position} out of range for degree {n}")]
    PositionOutOfRange { position: usize, n: usize },
    #[error("normality {k} out of range: need 0 <= k <= {max}")]
    NormalityOutOfRange { k: usize, max: usize },
    #[error("x^{n} - 1 has no monic divisor of degree {degree} over the base field")]
    NoDivisorOfDegree { n: usize, degree: usize },
    #[error("polynomial does not divide x^{n} - 1")]
    NotDivisorOfXnMinus1 { n: usize },
    #[error("{0} is not a primitive element of the prime field")]
    NotPrimitiveInPrimeField(u64),
    #[error("base field order {q} is not a power of {p}")]
    NotCharacteristicPower { q: u64, p: u64 },
    #[error("work budget of {budget} exceeded ({needed} items required)")]
    BudgetExceeded { budget: u64, needed: u64 },
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
