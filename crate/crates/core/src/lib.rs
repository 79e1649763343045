//! Exact symbolic verification of classical electromagnetism over the
//! Moyal-Weyl algebra.

pub mod classical;
pub mod complex;
pub mod context;
pub mod dual;
pub mod error;
pub mod expr;
pub mod forms;
pub mod fuzz;
pub mod random;
pub mod scalar;
pub mod scenario;
pub mod single;
pub mod tensor;
pub mod vector;

pub use complex::ComplexRational;
pub use context::{AlgebraContext, ThetaMatrix};
pub use forms::{BasisIndex, DifferentialForm, Grade, MetricSignature};
pub use error::{AlgebraError, FormError, ParseError, ScenarioError};
pub use scalar::{Axis, Monomial, MoyalScalar};
pub use vector::VectorField3;
