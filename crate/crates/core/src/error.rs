use thiserror::Error;

use crate::kernel::Point;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure a construction can report.
///
/// Variant names double as the stable error identifiers printed by the CLI
/// (see [`Error::name`]).
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("points are collinear")]
    Collinear,
    #[error("circles coincide")]
    IdenticalCircles,
    #[error("ray endpoint coincides with the apex")]
    DegenerateRay,
    #[error("two points defining a line coincide")]
    CoincidentPoints,
    #[error("cannot invert the center of the circle")]
    CenterInversion,
    #[error("point is not on both the line and the circle")]
    NotOnBoth,
    #[error("triangle is degenerate")]
    DegenerateTriangle,
    #[error("angle at vertex {0} is a right angle")]
    RightAngleDegenerate(char),
    #[error("point {0} lies on a side line")]
    OnSideLine(Point),
    #[error("point {0} lies on the circumcircle")]
    OnCircumcircle(Point),
    #[error("isogonal conjugate of {0} is a point at infinity")]
    NoFiniteConjugate(Point),
    #[error("triangle is not scalene")]
    NotScalene,
    #[error("triangle has a right angle")]
    RightTriangle,
    #[error("point coincides with a vertex")]
    AtVertex,
    #[error("triad point coincides with a vertex of the host triangle")]
    TriadAtVertex,
    #[error("triad parameter is not finite")]
    NonFiniteParameter,
    #[error("a Miquel circle is degenerate")]
    DegenerateCircle,
    #[error("rotation angle {0} is outside the admissible range")]
    ThetaOutOfRange(f64),
    #[error("triad does not have the given point as its Miquel point (off by {0:e})")]
    NotAMiquelTriad(f64),
    #[error("chain step {step} is degenerate: {reason}")]
    DegenerateStep { step: usize, reason: Box<Error> },
    #[error("chain length {requested} exceeds the cap of {cap}")]
    TooManySteps { requested: usize, cap: usize },
    #[error("nothing selected to draw")]
    EmptySelection,
    #[error("invalid scene: {0}")]
    InvalidScene(String),
    #[error("unknown verification suite {0:?}")]
    UnknownSuite(String),
}

impl Error {
    /// Stable identifier of the variant.
    pub fn name(&self) -> &'static str {
        match self {
            Error::Collinear => "Collinear",
            Error::IdenticalCircles => "IdenticalCircles",
            Error::DegenerateRay => "DegenerateRay",
            Error::CoincidentPoints => "CoincidentPoints",
            Error::CenterInversion => "CenterInversion",
            Error::NotOnBoth => "NotOnBoth",
            Error::DegenerateTriangle => "DegenerateTriangle",
            Error::RightAngleDegenerate(_) => "RightAngleDegenerate",
            Error::OnSideLine(_) => "OnSideLine",
            Error::OnCircumcircle(_) => "OnCircumcircle",
            Error::NoFiniteConjugate(_) => "NoFiniteConjugate",
            Error::NotScalene => "NotScalene",
            Error::RightTriangle => "RightTriangle",
            Error::AtVertex => "AtVertex",
            Error::TriadAtVertex => "TriadAtVertex",
            Error::NonFiniteParameter => "NonFiniteParameter",
            Error::DegenerateCircle => "DegenerateCircle",
            Error::ThetaOutOfRange(_) => "ThetaOutOfRange",
            Error::NotAMiquelTriad(_) => "NotAMiquelTriad",
            Error::DegenerateStep { .. } => "DegenerateStep",
            Error::TooManySteps { .. } => "TooManySteps",
            Error::EmptySelection => "EmptySelection",
            Error::InvalidScene(_) => "InvalidScene",
            Error::UnknownSuite(_) => "UnknownSuite",
        }
    }
}
