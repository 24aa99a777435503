use crate::algebra::{Conjugate, Entry, Product, Scalar};
use crate::scalar::GaussQ;

use super::mat2::{commutator, Mat2};
use super::OctonionError;

/// Abstract matrix `(λI, A; B, ξI)` with the star product.
///
/// The blocks are not required to be traceless; the octonion span is the
/// subspace picked out by [`Zorn::is_octonionic`].
#[derive(Clone, PartialEq, Debug)]
pub struct Zorn<T> {
    pub lambda: T,
    pub a: Mat2<T>,
    pub b: Mat2<T>,
    pub xi: T,
}

/// Which off-diagonal block of a [`Zorn`] element.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Block {
    A,
    B,
}

impl<T> Zorn<T> {
    pub fn new(lambda: T, a: Mat2<T>, b: Mat2<T>, xi: T) -> Self {
        Zorn { lambda, a, b, xi }
    }

    pub fn map<U>(&self, mut f: impl FnMut(&T) -> U) -> Zorn<U> {
        Zorn {
            lambda: f(&self.lambda),
            a: self.a.map(&mut f),
            b: self.b.map(&mut f),
            xi: f(&self.xi),
        }
    }

    pub fn zip_with<R, U>(&self, rhs: &Zorn<R>, mut f: impl FnMut(&T, &R) -> U) -> Zorn<U> {
        Zorn {
            lambda: f(&self.lambda, &rhs.lambda),
            a: self.a.zip_with(&rhs.a, &mut f),
            b: self.b.zip_with(&rhs.b, &mut f),
            xi: f(&self.xi, &rhs.xi),
        }
    }

    /// The star product:
    ///
    /// ```text
    /// (λ, A; B, ξ) * (λ', A'; B', ξ') =
    ///   ( λλ' + ½tr(AB')              λA' + ξ'A + (i/2)[B, B'] )
    ///   ( λ'B + ξB' − (i/2)[A, A']    ξξ' + ½tr(BA')           )
    /// ```
    pub fn star<R, O>(&self, rhs: &Zorn<R>) -> Zorn<O>
    where
        T: Product<R, Output = O>,
        R: Product<T, Output = O>,
        O: Entry,
    {
        let lambda = self
            .lambda
            .product(&rhs.lambda)
            .plus(&self.a.trace_product(&rhs.b).halved());
        let xi = self
            .xi
            .product(&rhs.xi)
            .plus(&self.b.trace_product(&rhs.a).halved());
        let a = rhs
            .a
            .scaled_by(&self.lambda)
            .plus(&self.a.scaled_by(&rhs.xi))
            .plus(&commutator(&self.b, &rhs.b).times_i().halved());
        let b = self
            .b
            .scaled_by(&rhs.lambda)
            .plus(&rhs.b.scaled_by(&self.xi))
            .minus(&commutator(&self.a, &rhs.a).times_i().halved());
        Zorn { lambda, a, b, xi }
    }

    /// Hermitian conjugation `(λ, A; B, ξ)⁺ = (λ*, B†; A†, ξ*)`.
    pub fn conj<U>(&self) -> Zorn<U>
    where
        T: Conjugate<Output = U>,
    {
        Zorn {
            lambda: self.lambda.conjugate(),
            a: self.b.dagger(),
            b: self.a.dagger(),
            xi: self.xi.conjugate(),
        }
    }
}

impl<T: Entry> Zorn<T> {
    pub fn zero() -> Self {
        Zorn::new(T::zero(), Mat2::zero(), Mat2::zero(), T::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.lambda.is_zero() && self.a.is_zero() && self.b.is_zero() && self.xi.is_zero()
    }

    pub fn plus(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, |x, y| x.plus(y))
    }

    pub fn minus(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, |x, y| x.minus(y))
    }

    pub fn negated(&self) -> Self {
        self.map(Entry::negated)
    }

    pub fn halved(&self) -> Self {
        self.map(Entry::halved)
    }

    pub fn times_i(&self) -> Self {
        self.map(Entry::times_i)
    }

    /// Block trace `2λ + 2ξ`: the trace of the full 4×4 form.
    pub fn trace(&self) -> T {
        let s = self.lambda.plus(&self.xi);
        s.plus(&s)
    }

    /// True when both off-diagonal blocks are traceless.
    pub fn is_octonionic(&self) -> bool {
        self.non_traceless_block().is_none()
    }

    pub fn non_traceless_block(&self) -> Option<Block> {
        if !self.a.trace().is_zero() {
            Some(Block::A)
        } else if !self.b.trace().is_zero() {
            Some(Block::B)
        } else {
            None
        }
    }
}

impl<T: Scalar> Zorn<T> {
    pub fn identity() -> Self {
        Zorn::new(T::one(), Mat2::zero(), Mat2::zero(), T::one())
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|x| s.mul(x))
    }

    pub fn scale_gauss(&self, g: &GaussQ) -> Self {
        self.scale(&T::from_gauss(g))
    }

    /// `Σᵏ` for `k = 0..7`:
    /// `Σ⁰ = 1`, `Σⁱ = (0, −iσⁱ; iσⁱ, 0)`, `Σ⁴ = (−1, 0; 0, 1)`,
    /// `Σ⁴⁺ⁱ = (0, −σⁱ; −σⁱ, 0)`.
    pub fn sigma(k: usize) -> Result<Self, OctonionError> {
        let one = T::one();
        Ok(match k {
            0 => Self::identity(),
            1..=3 => {
                let s = Mat2::<T>::pauli(k);
                Zorn::new(T::zero(), s.times_i().negated(), s.times_i(), T::zero())
            }
            4 => Zorn::new(one.negated(), Mat2::zero(), Mat2::zero(), one),
            5..=7 => {
                let s = Mat2::<T>::pauli(k - 4).negated();
                Zorn::new(T::zero(), s.clone(), s, T::zero())
            }
            _ => return Err(OctonionError::IndexOutOfRange(k)),
        })
    }

    /// `Σ̃ᵏ = −iΣᵏ` for `k ≥ 1`, and `Σ̃⁰ = Σ⁰`.
    pub fn sigma_tilde(k: usize) -> Result<Self, OctonionError> {
        let s = Self::sigma(k)?;
        Ok(if k == 0 { s } else { s.times_i().negated() })
    }

    /// Coordinates in the `Σ⁰..Σ⁷` basis. Requires traceless blocks.
    pub fn sigma_coords(&self) -> Result<[T; 8], OctonionError> {
        if let Some(block) = self.non_traceless_block() {
            return Err(OctonionError::NotOctonionic(block));
        }
        let pa = self.a.pauli_coords();
        let pb = self.b.pauli_coords();
        let mut c: [T; 8] = core::array::from_fn(|_| T::zero());
        c[0] = self.lambda.plus(&self.xi).halved();
        c[4] = self.xi.minus(&self.lambda).halved();
        for k in 1..4 {
            // A = Σ(−i c_k − d_k)σᵏ and B = Σ(i c_k − d_k)σᵏ.
            c[k] = pa[k].minus(&pb[k]).times_i().halved();
            c[4 + k] = pa[k].plus(&pb[k]).halved().negated();
        }
        Ok(c)
    }

    pub fn from_sigma_coords(c: &[T; 8]) -> Self {
        (0..8).fold(Self::zero(), |acc, k| {
            if c[k].is_zero() {
                acc
            } else {
                acc.plus(&Self::sigma(k).expect("index in range").scale(&c[k]))
            }
        })
    }

    /// `tr(u⁺ * u)`.
    pub fn norm_sq(&self) -> T {
        self.conj().star(self).trace()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussQ;

    type Z = Zorn<GaussQ>;

    fn sigma(k: usize) -> Z {
        Z::sigma(k).unwrap()
    }

    #[test]
    fn sigma1_star_sigma2_is_i_sigma3() {
        assert_eq!(sigma(1).star(&sigma(2)), sigma(3).times_i());
    }

    #[test]
    fn sigma1_star_sigma4_is_i_sigma5() {
        assert_eq!(sigma(1).star(&sigma(4)), sigma(5).times_i());
    }

    #[test]
    fn unit_acts_trivially() {
        let u = Zorn::new(
            GaussQ::int(2, -1),
            Mat2::new([[GaussQ::int(1, 1), GaussQ::int(0, 3)], [GaussQ::int(-2, 0), GaussQ::int(4, 0)]]),
            Mat2::new([[GaussQ::int(0, 0), GaussQ::int(1, 0)], [GaussQ::int(0, 1), GaussQ::int(7, 2)]]),
            GaussQ::int(-3, 5),
        );
        assert_eq!(sigma(0).star(&u), u);
        assert_eq!(u.star(&sigma(0)), u);
    }

    #[test]
    fn basis_is_hermitian_and_tilde_antihermitian() {
        for k in 0..8 {
            assert_eq!(sigma(k).conj(), sigma(k), "Σ{k}");
        }
        for k in 1..8 {
            let t = Z::sigma_tilde(k).unwrap();
            assert_eq!(t.conj(), t.negated(), "Σ̃{k}");
        }
    }

    #[test]
    fn explicit_basis_entries() {
        let s4 = sigma(4);
        assert_eq!(s4.lambda, GaussQ::int(-1, 0));
        assert_eq!(s4.xi, GaussQ::one());
        assert!(s4.a.is_zero() && s4.b.is_zero());
        let s6 = sigma(6);
        assert_eq!(s6.a, Mat2::pauli(2).negated());
        assert_eq!(s6.b, Mat2::pauli(2).negated());
        assert!(s6.lambda.is_zero() && s6.xi.is_zero());
        assert_eq!(Z::sigma(8), Err(OctonionError::IndexOutOfRange(8)));
    }

    #[test]
    fn norms() {
        let mut psi = Z::zero();
        assert_eq!(psi.norm_sq(), GaussQ::zero());
        psi.xi = GaussQ::one();
        psi.a = Mat2::<GaussQ>::pauli(3).times_i();
        assert_eq!(psi.norm_sq(), GaussQ::int(4, 0));
    }

    #[test]
    fn sigma_coords_round_trip() {
        for k in 0..8 {
            let c = sigma(k).sigma_coords().unwrap();
            for (j, cj) in c.iter().enumerate() {
                let expected = if j == k { GaussQ::one() } else { GaussQ::zero() };
                assert_eq!(cj, &expected);
            }
        }
        let mut u = Z::zero();
        u.a = Mat2::identity();
        assert_eq!(u.sigma_coords(), Err(OctonionError::NotOctonionic(Block::A)));
    }
}
