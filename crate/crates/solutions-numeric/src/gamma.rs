use num_complex::Complex64;
use std::f64::consts::PI;

use crate::NumError;

const G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

fn is_pole(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0
}

/// `log Γ(z)` (Lanczos, reflection for `Re z < 1/2`). The imaginary part is
/// only meaningful modulo `2π`; every caller exponentiates.
pub fn log_gamma(z: Complex64) -> Result<Complex64, NumError> {
    if is_pole(z) {
        return Err(NumError::PoleAt(z.re));
    }
    if z.re < 0.5 {
        let s = (Complex64::from(PI) * z).sin();
        return Ok(Complex64::from(PI.ln()) - s.ln() - log_gamma(Complex64::from(1.0) - z)?);
    }
    let z = z - 1.0;
    let mut x = Complex64::from(LANCZOS[0]);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        x += c / (z + i as f64);
    }
    let t = z + G + 0.5;
    Ok(Complex64::from(0.5 * (2.0 * PI).ln()) + (z + 0.5) * t.ln() - t + x.ln())
}

pub fn gamma(z: Complex64) -> Result<Complex64, NumError> {
    Ok(log_gamma(z)?.exp())
}

/// `1/Γ(z)`, entire: zero at the poles of `Γ`.
pub fn recip_gamma(z: Complex64) -> Complex64 {
    match log_gamma(z) {
        Ok(l) => (-l).exp(),
        Err(_) => Complex64::new(0.0, 0.0),
    }
}

/// `log ℓ!` for a lattice index.
pub fn log_factorial(l: usize) -> f64 {
    log_gamma(Complex64::from(l as f64 + 1.0)).map(|v| v.re).unwrap_or(0.0)
}
