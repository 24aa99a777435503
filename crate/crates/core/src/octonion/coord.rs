use crate::algebra::{Entry, Scalar};

use super::tables::generator_product;
use super::{OctonionError, Zorn};

/// Octonion `Σ αʲeʲ` in the coordinate basis `e⁰..e⁷`.
#[derive(Clone, PartialEq, Debug)]
pub struct OctCoord<T> {
    pub alpha: [T; 8],
}

impl<T: Scalar> OctCoord<T> {
    pub fn new(alpha: [T; 8]) -> Self {
        OctCoord { alpha }
    }

    pub fn zero() -> Self {
        OctCoord { alpha: core::array::from_fn(|_| T::zero()) }
    }

    pub fn generator(k: usize) -> Self {
        let mut x = Self::zero();
        x.alpha[k] = T::one();
        x
    }

    pub fn is_zero(&self) -> bool {
        self.alpha.iter().all(Entry::is_zero)
    }

    pub fn plus(&self, rhs: &Self) -> Self {
        OctCoord { alpha: core::array::from_fn(|k| self.alpha[k].plus(&rhs.alpha[k])) }
    }

    pub fn minus(&self, rhs: &Self) -> Self {
        OctCoord { alpha: core::array::from_fn(|k| self.alpha[k].minus(&rhs.alpha[k])) }
    }

    pub fn scale(&self, s: &T) -> Self {
        OctCoord { alpha: self.alpha.clone().map(|a| s.mul(&a)) }
    }

    pub fn halved(&self) -> Self {
        OctCoord { alpha: self.alpha.clone().map(|a| a.halved()) }
    }

    /// Bilinear extension of the generator table.
    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (i, a) in self.alpha.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.alpha.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let g = generator_product(i, j);
                let t = a.mul(b);
                out.alpha[g.index] = if g.sign > 0 {
                    out.alpha[g.index].plus(&t)
                } else {
                    out.alpha[g.index].minus(&t)
                };
            }
        }
        out
    }

    /// Image under `e⁰ ↦ Σ⁰`, `eᵏ ↦ Σ̃ᵏ = −iΣᵏ`.
    pub fn to_zorn(&self) -> Zorn<T> {
        let mut c: [T; 8] = core::array::from_fn(|_| T::zero());
        c[0] = self.alpha[0].clone();
        for k in 1..8 {
            c[k] = self.alpha[k].times_i().negated();
        }
        Zorn::from_sigma_coords(&c)
    }

    /// Inverse of [`OctCoord::to_zorn`] on the octonionic subspace.
    pub fn from_zorn(u: &Zorn<T>) -> Result<Self, OctonionError> {
        let c = u.sigma_coords()?;
        let mut alpha = c.clone();
        for k in 1..8 {
            alpha[k] = c[k].times_i();
        }
        Ok(OctCoord { alpha })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::octonion::Block;
    use crate::scalar::GaussQ;

    type O = OctCoord<GaussQ>;

    #[test]
    fn table_entries() {
        assert_eq!(O::generator(1).mul(&O::generator(2)), O::generator(3));
        assert_eq!(O::generator(1).mul(&O::generator(4)), O::generator(5));
    }

    #[test]
    fn unit() {
        let x = O::new(core::array::from_fn(|k| GaussQ::int(k as i64 - 3, 2 * k as i64)));
        assert_eq!(O::generator(0).mul(&x), x);
        assert_eq!(x.mul(&O::generator(0)), x);
    }

    #[test]
    fn generator_mapping() {
        let z = O::generator(1).to_zorn();
        assert_eq!(z, Zorn::sigma(1).unwrap().times_i().negated());
        assert_eq!(O::from_zorn(&z).unwrap(), O::generator(1));
        let lhs = O::generator(1).mul(&O::generator(4)).to_zorn();
        let rhs = O::generator(1).to_zorn().star(&O::generator(4).to_zorn());
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, Zorn::sigma(5).unwrap().times_i().negated());
    }

    #[test]
    fn non_traceless_rejected() {
        let mut u = Zorn::<GaussQ>::zero();
        u.a.m[0][0] = GaussQ::one();
        assert_eq!(O::from_zorn(&u), Err(OctonionError::NotOctonionic(Block::A)));
        let mut v = Zorn::<GaussQ>::zero();
        v.b.m[1][1] = GaussQ::one();
        assert_eq!(O::from_zorn(&v), Err(OctonionError::NotOctonionic(Block::B)));
    }
}
