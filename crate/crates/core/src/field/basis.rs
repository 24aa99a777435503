use num_complex::Complex64;

use crate::couplings::Couplings;

use super::FieldError;

/// Gauge fields after mixing: photon, `Z⁰`, `W`, `W̄`, `C`, `D`, `D̄`, `E`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NamedBosons {
    pub photon: Complex64,
    pub z: Complex64,
    pub w: Complex64,
    pub wbar: Complex64,
    pub c: Complex64,
    pub d: Complex64,
    pub dbar: Complex64,
    pub e: Complex64,
}

fn ratio(num: Complex64, den: f64, what: &'static str) -> Result<Complex64, FieldError> {
    if den != 0.0 {
        Ok(num / den)
    } else if num == Complex64::new(0.0, 0.0) {
        Ok(num)
    } else {
        Err(FieldError::Degenerate(what))
    }
}

/// From `A⁰..A⁷` (with `B = A⁰`) to the named fields:
/// `Z⁰ = A³cosθ − Bsinθ`, photon `= A³sinθ + Bcosθ`,
/// `W = (A¹ − iA²)/(√2 cosθ)`, `W̄ = (A¹ + iA²)/(√2 sinθ)`,
/// `D = (g₆A⁶ + ig₅A⁵)/gₐ`, `D̄ = (g₆A⁶ − ig₅A⁵)/gₐ`, `C = A⁴`, `E = A⁷`.
pub fn boson_basis_change(a: &[Complex64; 8], theta: f64, c: &Couplings) -> Result<NamedBosons, FieldError> {
    let (s, co) = (libm::sin(theta), libm::cos(theta));
    let i = Complex64::new(0.0, 1.0);
    let r2 = core::f64::consts::SQRT_2;
    let g5 = c.g_k(5).to_f64();
    let g6 = c.g_k(6).to_f64();
    let ga = c.g_a();
    let a56_zero = a[5] == Complex64::new(0.0, 0.0) && a[6] == Complex64::new(0.0, 0.0);
    if ga == 0.0 && !a56_zero {
        return Err(FieldError::Degenerate("D needs g_a != 0"));
    }
    Ok(NamedBosons {
        photon: a[3] * s + a[0] * co,
        z: a[3] * co - a[0] * s,
        w: ratio(a[1] - i * a[2], r2 * co, "W needs cos(theta) != 0")?,
        wbar: ratio(a[1] + i * a[2], r2 * s, "Wbar needs sin(theta) != 0")?,
        c: a[4],
        d: ratio(a[6] * g6 + i * a[5] * g5, ga, "D needs g_a != 0")?,
        dbar: ratio(a[6] * g6 - i * a[5] * g5, ga, "Dbar needs g_a != 0")?,
        e: a[7],
    })
}

/// Inverse of [`boson_basis_change`].
pub fn boson_basis_inverse(n: &NamedBosons, theta: f64, c: &Couplings) -> Result<[Complex64; 8], FieldError> {
    let (s, co) = (libm::sin(theta), libm::cos(theta));
    let i = Complex64::new(0.0, 1.0);
    let r2 = core::f64::consts::SQRT_2;
    let g5 = c.g_k(5).to_f64();
    let g6 = c.g_k(6).to_f64();
    let ga = c.g_a();
    let a5 = ratio((n.d - n.dbar) * ga, 2.0 * g5, "A5 needs g5 != 0")? / i;
    let a6 = ratio((n.d + n.dbar) * ga, 2.0 * g6, "A6 needs g6 != 0")?;
    Ok([
        n.photon * co - n.z * s,
        (n.w * co + n.wbar * s) / r2,
        i * (n.w * co - n.wbar * s) / r2,
        n.z * co + n.photon * s,
        n.c,
        a5,
        a6,
        n.e,
    ])
}
