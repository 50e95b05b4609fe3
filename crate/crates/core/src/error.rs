use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two operands carry a different number of variables.
    NvarsMismatch { left: usize, right: usize },
    /// A multi-index has the wrong length for its polynomial.
    IndexLength { expected: usize, found: usize },
    /// The operation is undefined on the zero polynomial.
    ZeroPolynomial,
    /// Division by the zero polynomial.
    ZeroDivisor,
    /// A variable index outside `0..nvars`.
    VariableOutOfRange { var: usize, nvars: usize },
    /// Bihomogenization target degree is below the polynomial's bidegree.
    DegreeExceeds { degree: u32, bound: u32 },
    /// The coefficient matrix has an off-diagonal entry.
    NotDiagonal,
    /// A diagonal coefficient has nonzero imaginary part.
    NotReal,
    /// The coefficient matrix is not Hermitian.
    NotHermitian,
    /// The coefficient matrix is not positive semidefinite.
    NotPsd,
    /// The polynomial is not homogeneous.
    NotHomogeneous,
    /// A required divisibility does not hold.
    NotDivisible,
    /// Invalid argument to a univariate helper.
    InvalidArgument(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NvarsMismatch { left, right } => {
                write!(f, "variable count mismatch: {left} vs {right}")
            }
            Error::IndexLength { expected, found } => {
                write!(f, "multi-index has length {found}, expected {expected}")
            }
            Error::ZeroPolynomial => f.write_str("operation undefined on the zero polynomial"),
            Error::ZeroDivisor => f.write_str("division by zero polynomial"),
            Error::VariableOutOfRange { var, nvars } => {
                write!(f, "variable index {var} out of range for {nvars} variables")
            }
            Error::DegreeExceeds { degree, bound } => {
                write!(f, "bidegree {degree} exceeds homogenizing degree {bound}")
            }
            Error::NotDiagonal => f.write_str("coefficient matrix is not diagonal"),
            Error::NotReal => f.write_str("diagonal coefficient is not real"),
            Error::NotHermitian => f.write_str("coefficient matrix is not Hermitian"),
            Error::NotPsd => f.write_str("coefficient matrix is not positive semidefinite"),
            Error::NotHomogeneous => f.write_str("polynomial is not homogeneous"),
            Error::NotDivisible => f.write_str("divisibility precondition fails"),
            Error::InvalidArgument(msg) => f.write_str(msg),
        }
    }
}

impl core::error::Error for Error {}
