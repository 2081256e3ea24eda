//! Iterative radix-2 FFT, sized for the fixed power-of-two analysis
//! windows used by the transform pipeline. Twiddle factors are evaluated
//! in f64 and cast to the working scalar so f32 runs keep full twiddle
//! accuracy.

use num_complex::Complex;

use crate::scalar::sc;
use crate::Scalar;

/// In-place FFT. `inverse` applies the conjugate transform and 1/N scaling.
/// Length must be a power of two.
pub(crate) fn fft_in_place<T: Scalar>(buf: &mut [Complex<T>], inverse: bool) {
    let n = buf.len();
    assert!(n.is_power_of_two(), "FFT length {n} must be a power of two");
    if n <= 1 {
        return;
    }

    // Bit-reversal permutation.
    let bits = n.trailing_zeros();
    for i in 0..n {
        let j = i.reverse_bits() >> (usize::BITS - bits);
        if i < j {
            buf.swap(i, j);
        }
    }

    let sign = if inverse { 1.0 } else { -1.0 };
    let mut len = 2;
    while len <= n {
        let ang = sign * 2.0 * std::f64::consts::PI / len as f64;
        let wlen = Complex::new(sc::<T>(ang.cos()), sc::<T>(ang.sin()));
        let mut start = 0;
        while start < n {
            let mut w = Complex::new(T::one(), T::zero());
            for k in 0..len / 2 {
                let a = buf[start + k];
                let b = buf[start + k + len / 2] * w;
                buf[start + k] = a + b;
                buf[start + k + len / 2] = a - b;
                w = w * wlen;
            }
            start += len;
        }
        len <<= 1;
    }

    if inverse {
        let inv_n = sc::<T>(1.0 / n as f64);
        for v in buf.iter_mut() {
            *v = Complex::new(v.re * inv_n, v.im * inv_n);
        }
    }
}
