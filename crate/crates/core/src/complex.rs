use num_complex::Complex64;

/// Principal square root with argument in `(−π, π]`.
///
/// Real inputs are handled explicitly so negative reals map to `+i√|z|`
/// regardless of the sign of a zero imaginary part.
pub fn principal_sqrt(z: Complex64) -> Complex64 {
    if z.im == 0.0 {
        if z.re >= 0.0 {
            Complex64::new(z.re.sqrt(), 0.0)
        } else {
            Complex64::new(0.0, (-z.re).sqrt())
        }
    } else {
        z.sqrt()
    }
}
