//! Integral machinery: improper quadrature, the principal-value Hilbert
//! transform, Gaussian convolution and the second-moment diagnostics.

pub mod convolution;
pub mod hilbert;
pub mod moments;
pub mod quadrature;

pub use convolution::{convolve_gauss_direct, convolve_gauss_hermite, GaussianKernel};
pub use hilbert::hilbert_pv;
pub use moments::{fel_gain_curve, gaussian_second_moment, second_moment_diagnostic};
pub use quadrature::{
    integrate_finite, integrate_half_line, integrate_improper, try_integrate_finite, try_integrate_half_line,
    try_integrate_improper, QuadratureSpec, TailMap,
};
