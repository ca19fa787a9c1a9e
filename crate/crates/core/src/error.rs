use alloc::string::String;
use core::fmt;

/// Errors raised by the numerical engines.
///
/// Identity failures are not errors: they are reported through
/// [`IdentityReport`](crate::identities::IdentityReport). An `Error` means a
/// computation could not be carried out at all.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// `make_context` was asked for zero target digits.
    ZeroDigits,
    /// A rational argument outside `1 <= p <= q`.
    InvalidRational { p: u64, q: u64 },
    /// An argument outside the function's domain.
    Domain {
        function: &'static str,
        reason: &'static str,
    },
    /// Evaluation requested at (or within tolerance of) a pole.
    Pole { function: &'static str },
    /// A Stieltjes index beyond the desk-scale cap.
    IndexCap { index: u32, cap: u32 },
    /// The imaginary part of a Cauchy-extracted real coefficient exceeded the tolerance.
    ImaginaryResidue { order: u32, residue: String },
    /// The Hasse series would need more working digits than the hard cap allows.
    Cancellation { required_digits: u64, cap_digits: u64 },
    /// A truncation policy hit its cap before reaching the requested accuracy.
    NotConverged { what: &'static str },
    /// `complete_bell` was given fewer arguments than its order.
    BellArguments { order: usize, given: usize },
    /// No registered identity carries this name.
    UnknownIdentity(String),
    /// An identity was run without a parameter it needs.
    MissingParameter {
        identity: &'static str,
        parameter: &'static str,
    },
    /// A decimal string could not be parsed.
    Parse(String),
    /// An intermediate value became NaN or infinite.
    NonFinite { what: &'static str },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroDigits => write!(f, "target digits must be at least 1"),
            Error::InvalidRational { p, q } => {
                write!(f, "invalid rational argument {p}/{q}: need 1 <= p <= q")
            }
            Error::Domain { function, reason } => write!(f, "{function}: {reason}"),
            Error::Pole { function } => write!(f, "{function}: argument is at a pole"),
            Error::IndexCap { index, cap } => {
                write!(f, "Stieltjes index {index} exceeds the supported cap {cap}")
            }
            Error::ImaginaryResidue { order, residue } => write!(
                f,
                "imaginary residue {residue} at order {order} exceeds tolerance; refine the ring"
            ),
            Error::Cancellation {
                required_digits,
                cap_digits,
            } => write!(
                f,
                "Hasse series needs {required_digits} working digits (cap {cap_digits}); raise ctx digits or lower j_max"
            ),
            Error::NotConverged { what } => write!(f, "{what} did not converge within its cap"),
            Error::BellArguments { order, given } => write!(
                f,
                "complete Bell polynomial of order {order} needs {order} arguments, got {given}"
            ),
            Error::UnknownIdentity(name) => write!(f, "unknown identity: {name}"),
            Error::MissingParameter {
                identity,
                parameter,
            } => write!(f, "identity {identity} requires parameter `{parameter}`"),
            Error::Parse(s) => write!(f, "cannot parse decimal `{s}`"),
            Error::NonFinite { what } => write!(f, "{what} produced a non-finite value"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
