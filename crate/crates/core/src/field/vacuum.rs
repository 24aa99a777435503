use num_complex::Complex64;

use crate::algebra::Scalar;
use crate::octonion::{Mat2, Zorn};
use crate::scalar::{CoeffElem, GaussQ, Rational};

use super::{FieldError, FieldParams};

/// `(0, iσ³; 0, I)`, the vacuum up to the factor `m/√(2f)`.
pub fn vacuum_direction<T: Scalar>() -> Zorn<T> {
    let a = Mat2::<T>::pauli(3).scale(&T::from_gauss(&GaussQ::i()));
    Zorn::new(T::zero(), a, Mat2::zero(), T::one())
}

/// `m²/(2f)`, the square of the vacuum prefactor.
pub fn vacuum_scale_sq(p: &FieldParams) -> Rational {
    &p.m2_over_f() * &Rational::frac(1, 2)
}

/// `‖Ψ₀‖² = (m²/(2f))·‖vacuum_direction‖²`, exact for any parameters.
pub fn vacuum_norm_sq(p: &FieldParams) -> Rational {
    let n = vacuum_direction::<GaussQ>().norm_sq();
    &vacuum_scale_sq(p) * &n.re
}

/// `Ψ₀ = (m/√(2f))·(0, iσ³; 0, I)` when `√(m²/(2f))` lies in the ring.
pub fn vacuum_state(p: &FieldParams) -> Result<Zorn<CoeffElem>, FieldError> {
    let k = CoeffElem::sqrt_rational(&vacuum_scale_sq(p)).ok_or(FieldError::NotRepresentable("m/sqrt(2f)"))?;
    Ok(vacuum_direction::<CoeffElem>().scale(&k))
}

pub fn vacuum_state_f64(m: f64, f: f64) -> Result<Zorn<Complex64>, FieldError> {
    check_positive(m, f)?;
    let k = Complex64::new(m / libm::sqrt(2.0 * f), 0.0);
    Ok(vacuum_direction::<Complex64>().scale(&k))
}

fn check_positive(m: f64, f: f64) -> Result<(), FieldError> {
    if !(m > 0.0) {
        return Err(FieldError::NonPositive("m"));
    }
    if !(f > 0.0) {
        return Err(FieldError::NonPositive("f"));
    }
    Ok(())
}

/// `V(N) = −m²N + (f/4)N²`.
pub fn potential_of_norm(n: &Rational, p: &FieldParams) -> Rational {
    let m2 = p.m() * p.m();
    &(&(-&m2) * n) + &(&(p.f() * &Rational::frac(1, 4)) * &(n * n))
}

/// `V` evaluated on an exact state; the result lives in the coefficient ring.
pub fn potential_exact(psi: &Zorn<CoeffElem>, p: &FieldParams) -> CoeffElem {
    let n = psi.norm_sq();
    let m2 = CoeffElem::from(p.m() * p.m());
    let quarter_f = CoeffElem::from(p.f() * &Rational::frac(1, 4));
    &(&(-&m2) * &n) + &(&quarter_f * &(&n * &n))
}

pub fn potential_f64(psi: &Zorn<Complex64>, m: f64, f: f64) -> f64 {
    let n = psi.norm_sq().re;
    -m * m * n + 0.25 * f * n * n
}

fn higgs_factor<T: Scalar>(center: T, sigma: T, theta: &[T; 7]) -> Zorn<T> {
    let mut u = Zorn::<T>::identity().scale(&center.plus(&sigma));
    for (k, t) in theta.iter().enumerate() {
        let s = Zorn::<T>::sigma(k + 1).expect("index in range");
        u = u.plus(&s.scale(&t.times_i()));
    }
    u
}

/// `Ψ = (1/(2√2))(2m/√f + σ + Θᵏ·iΣᵏ) * (0, iσ³; 0, I)`.
pub fn higgs_param(sigma: f64, theta: &[f64; 7], m: f64, f: f64) -> Result<Zorn<Complex64>, FieldError> {
    check_positive(m, f)?;
    let c = |x: f64| Complex64::new(x, 0.0);
    let factor = higgs_factor(c(2.0 * m / libm::sqrt(f)), c(sigma), &theta.map(c));
    let pre = c(1.0 / (2.0 * core::f64::consts::SQRT_2));
    Ok(factor.scale(&pre).star(&vacuum_direction::<Complex64>()))
}

/// Exact variant; requires `√f` (up to a surd monomial) in the ring.
pub fn higgs_param_exact(sigma: &Rational, theta: &[Rational; 7], p: &FieldParams) -> Result<Zorn<CoeffElem>, FieldError> {
    let sqrt_f = CoeffElem::sqrt_rational(p.f()).ok_or(FieldError::NotRepresentable("sqrt(f)"))?;
    let center = CoeffElem::from(p.m() * &Rational::integer(2)) * sqrt_f.recip_monomial().map_err(|_| FieldError::NotRepresentable("1/sqrt(f)"))?;
    let factor = higgs_factor(center, CoeffElem::from(sigma.clone()), &theta.clone().map(CoeffElem::from));
    // 1/(2√2) = s₂/4
    let pre = CoeffElem::surd(crate::scalar::Surd::S2).scale_rational(&Rational::frac(1, 4));
    Ok(factor.scale(&pre).star(&vacuum_direction::<CoeffElem>()))
}

/// Numerically minimises `V(r·Ψ̂)` over `r ≥ 0` for a unit-norm `Ψ̂` and
/// returns `r*²`. A golden-section search brackets the minimum to width
/// `tol` in `N = r²`; one parabolic step in `N` then lands on the vertex.
pub fn radial_minimize(m: f64, f: f64, tol: f64) -> Result<f64, FieldError> {
    if !(tol > 0.0) {
        return Err(FieldError::InvalidTolerance);
    }
    check_positive(m, f)?;
    let dir = vacuum_direction::<Complex64>();
    let unit = dir.scale(&Complex64::new(1.0 / libm::sqrt(dir.norm_sq().re), 0.0));
    let v = |n: f64| potential_f64(&unit.scale(&Complex64::new(libm::sqrt(n.max(0.0)), 0.0)), m, f);

    let mut hi = 1.0;
    while v(hi) <= v(hi / 2.0) || v(hi) < 0.0 {
        hi *= 2.0;
        if hi > 1e300 {
            return Err(FieldError::NoConvergence);
        }
    }
    let phi = (libm::sqrt(5.0) - 1.0) / 2.0;
    let (mut a, mut b) = (0.0, hi);
    let mut c = b - phi * (b - a);
    let mut d = a + phi * (b - a);
    let (mut fc, mut fd) = (v(c), v(d));
    for _ in 0..10_000 {
        if (b - a).abs() <= tol * (1.0 + c.abs()) {
            break;
        }
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - phi * (b - a);
            fc = v(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + phi * (b - a);
            fd = v(d);
        }
    }
    let mid = 0.5 * (a + b);
    let h = (b - a).max(1e-3 * (1.0 + mid));
    let (x0, x1, x2) = (mid - h, mid, mid + h);
    let (y0, y1, y2) = (v(x0), v(x1), v(x2));
    let denom = y0 - 2.0 * y1 + y2;
    if denom <= 0.0 {
        return Ok(mid);
    }
    Ok(x1 - 0.5 * h * (y2 - y0) / denom)
}
