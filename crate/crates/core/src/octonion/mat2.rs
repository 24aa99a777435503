use crate::algebra::{Conjugate, Entry, Product, Scalar};
use crate::scalar::GaussQ;

/// 2×2 block with entries of any [`Entry`] type.
#[derive(Clone, PartialEq, Debug)]
pub struct Mat2<T> {
    pub m: [[T; 2]; 2],
}

impl<T> Mat2<T> {
    pub fn new(m: [[T; 2]; 2]) -> Self {
        Mat2 { m }
    }

    pub fn map<U>(&self, mut f: impl FnMut(&T) -> U) -> Mat2<U> {
        let [[a, b], [c, d]] = &self.m;
        Mat2::new([[f(a), f(b)], [f(c), f(d)]])
    }

    pub fn zip_with<R, U>(&self, rhs: &Mat2<R>, mut f: impl FnMut(&T, &R) -> U) -> Mat2<U> {
        let [[a, b], [c, d]] = &self.m;
        let [[p, q], [r, s]] = &rhs.m;
        Mat2::new([[f(a, p), f(b, q)], [f(c, r), f(d, s)]])
    }

    pub fn entries(&self) -> impl Iterator<Item = &T> {
        self.m.iter().flatten()
    }

    /// Ordinary matrix product with a heterogeneous entry product.
    pub fn matmul<R, O>(&self, rhs: &Mat2<R>) -> Mat2<O>
    where
        T: Product<R, Output = O>,
        O: Entry,
    {
        let cell = |i: usize, j: usize| {
            self.m[i][0]
                .product(&rhs.m[0][j])
                .plus(&self.m[i][1].product(&rhs.m[1][j]))
        };
        Mat2::new([[cell(0, 0), cell(0, 1)], [cell(1, 0), cell(1, 1)]])
    }

    /// `tr(self · rhs)` without forming the full product.
    pub fn trace_product<R, O>(&self, rhs: &Mat2<R>) -> O
    where
        T: Product<R, Output = O>,
        O: Entry,
    {
        let mut acc = O::zero();
        for i in 0..2 {
            for j in 0..2 {
                let t = self.m[i][j].product(&rhs.m[j][i]);
                if !t.is_zero() {
                    acc = acc.plus(&t);
                }
            }
        }
        acc
    }

    /// Every entry multiplied on the left by `s`.
    pub fn scaled_by<S, O>(&self, s: &S) -> Mat2<O>
    where
        S: Product<T, Output = O>,
    {
        self.map(|x| s.product(x))
    }

    /// Conjugate transpose.
    pub fn dagger<U>(&self) -> Mat2<U>
    where
        T: Conjugate<Output = U>,
    {
        let [[a, b], [c, d]] = &self.m;
        Mat2::new([[a.conjugate(), c.conjugate()], [b.conjugate(), d.conjugate()]])
    }
}

impl<T: Entry> Mat2<T> {
    pub fn zero() -> Self {
        Mat2::new([[T::zero(), T::zero()], [T::zero(), T::zero()]])
    }

    pub fn is_zero(&self) -> bool {
        self.entries().all(Entry::is_zero)
    }

    pub fn trace(&self) -> T {
        self.m[0][0].plus(&self.m[1][1])
    }

    pub fn plus(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, |a, b| a.plus(b))
    }

    pub fn minus(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, |a, b| a.minus(b))
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
}

impl<T: Scalar> Mat2<T> {
    pub fn identity() -> Self {
        Mat2::new([[T::one(), T::zero()], [T::zero(), T::one()]])
    }

    pub fn from_gauss(m: &Mat2<GaussQ>) -> Self {
        m.map(T::from_gauss)
    }

    /// Pauli matrix `σᵏ` for `k = 1, 2, 3`; `k = 0` gives the identity.
    pub fn pauli(k: usize) -> Self {
        let g = |re: i64, im: i64| T::from_gauss(&GaussQ::int(re, im));
        match k {
            0 => Self::identity(),
            1 => Mat2::new([[g(0, 0), g(1, 0)], [g(1, 0), g(0, 0)]]),
            2 => Mat2::new([[g(0, 0), g(0, -1)], [g(0, 1), g(0, 0)]]),
            3 => Mat2::new([[g(1, 0), g(0, 0)], [g(0, 0), g(-1, 0)]]),
            _ => panic!("Pauli index {k} out of range"),
        }
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|x| s.mul(x))
    }

    /// Coordinates `(a₀, a₁, a₂, a₃)` with `self = a₀·I + Σ aₖσᵏ`.
    pub fn pauli_coords(&self) -> [T; 4] {
        core::array::from_fn(|k| Self::pauli(k).trace_product(self).halved())
    }

    pub fn from_pauli_coords(c: &[T; 4]) -> Self {
        (0..4).fold(Self::zero(), |acc, k| acc.plus(&Self::pauli(k).scale(&c[k])))
    }
}

/// `[a, b] = a·b − b·a` for entry types that multiply in both orders.
pub fn commutator<T, R, O>(a: &Mat2<T>, b: &Mat2<R>) -> Mat2<O>
where
    T: Product<R, Output = O>,
    R: Product<T, Output = O>,
    O: Entry,
{
    a.matmul(b).minus(&b.matmul(a))
}

#[cfg(test)]
mod tests {
    use super::*;

    type M = Mat2<GaussQ>;

    #[test]
    fn pauli_algebra() {
        let s1 = M::pauli(1);
        let s2 = M::pauli(2);
        let s3 = M::pauli(3);
        assert_eq!(s1.matmul(&s1), M::identity());
        assert_eq!(s1.matmul(&s2), s3.scale(&GaussQ::i()));
        assert_eq!(commutator(&s1, &s2), s3.scale(&GaussQ::int(0, 2)));
        for k in 1..4 {
            assert_eq!(M::pauli(k).dagger(), M::pauli(k));
            assert_eq!(M::pauli(k).trace(), GaussQ::zero());
        }
    }

    #[test]
    fn pauli_coordinates_round_trip() {
        let a = Mat2::new([[GaussQ::int(1, 2), GaussQ::int(3, 0)], [GaussQ::int(0, -1), GaussQ::int(5, 5)]]);
        let c = a.pauli_coords();
        assert_eq!(M::from_pauli_coords(&c), a);
    }

    #[test]
    fn trace_product_matches_matmul() {
        let a = Mat2::new([[GaussQ::int(1, 2), GaussQ::int(3, 0)], [GaussQ::int(0, -1), GaussQ::int(5, 5)]]);
        let b = M::pauli(2).plus(&M::pauli(3));
        assert_eq!(a.trace_product(&b), a.matmul(&b).trace());
    }
}
