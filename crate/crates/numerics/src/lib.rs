//! Dense real/complex array primitives: row-major tensors, unitary 2-D FFT,
//! 2-D convolution with exact adjoints, and a finite-difference gradient checker.

mod complex;
mod conv;
mod error;
mod gradcheck;
mod real;
mod rng;
mod tensor;

pub use complex::{fft2, ComplexGrid, FftDirection};
pub use conv::{conv2d, conv2d_vjp, ConvMode};
pub use error::{NumericsError, Result};
pub use gradcheck::{finite_difference_check, BlockCheck, GradCheckOptions, GradCheckReport};
pub use real::Real;
pub use rng::SeededRng;
pub use tensor::Tensor;
