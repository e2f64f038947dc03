pub mod concave;
pub mod error;
pub mod geom;
pub mod p1;
pub mod positivity;
pub mod sections;
pub mod suite;
pub mod toric;
pub mod value;

pub use concave::{concavify, AffinePiece, ArithOkounkovBody, ConcaveRoof, RoofMode};
pub use error::{Error, Result};
pub use geom::{Point, Polytope, Rational};
pub use p1::{P1Metric, RationalPoint};
pub use sections::SectionTable;
pub use toric::ToricAdelicDivisor;
pub use value::{Regime, Value};
