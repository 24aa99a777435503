use alloc::vec::Vec;

use crate::couplings::ChargeSet;
use crate::octonion::Zorn;
use crate::scalar::{GaussQ, Rational};

use super::vacuum::vacuum_direction;
use super::FieldParams;

/// Association order for the product `Ψ̄₀ * Σᵃ * Σᵇ * Ψ₀`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MassOrder {
    /// `(Ψ̄₀ * Σᵃ) * (Σᵇ * Ψ₀)`
    Split,
    /// `((Ψ̄₀ * Σᵃ) * Σᵇ) * Ψ₀`
    LeftNested,
    /// `Ψ̄₀ * (Σᵃ * (Σᵇ * Ψ₀))`
    RightNested,
}

impl MassOrder {
    pub const ALL: [MassOrder; 3] = [MassOrder::Split, MassOrder::LeftNested, MassOrder::RightNested];
}

/// `tr(v̄ Σᵃ Σᵇ v)` for the unit vacuum direction `v` in the given order.
pub fn mass_tensor(order: MassOrder) -> [[GaussQ; 8]; 8] {
    let v = vacuum_direction::<GaussQ>();
    let vbar = v.conj::<GaussQ>();
    let s: [Zorn<GaussQ>; 8] = core::array::from_fn(|k| Zorn::sigma(k).expect("index in range"));
    core::array::from_fn(|a| {
        core::array::from_fn(|b| {
            let z: Zorn<GaussQ> = match order {
                MassOrder::Split => vbar.star::<GaussQ, GaussQ>(&s[a]).star(&s[b].star::<GaussQ, GaussQ>(&v)),
                MassOrder::LeftNested => vbar.star::<GaussQ, GaussQ>(&s[a]).star::<GaussQ, GaussQ>(&s[b]).star(&v),
                MassOrder::RightNested => vbar.star(&s[a].star::<GaussQ, GaussQ>(&s[b].star::<GaussQ, GaussQ>(&v))),
            };
            z.trace()
        })
    })
}

/// Real symmetric 8×8 quadratic form in the gauge fields `Aᵃ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MassMatrix {
    pub m: [[Rational; 8]; 8],
}

impl MassMatrix {
    pub fn zero() -> Self {
        MassMatrix { m: core::array::from_fn(|_| core::array::from_fn(|_| Rational::zero())) }
    }

    pub fn get(&self, a: usize, b: usize) -> &Rational {
        &self.m[a][b]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..8).all(|a| (0..8).all(|b| self.m[a][b] == self.m[b][a]))
    }

    pub fn scaled(&self, k: &Rational) -> Self {
        MassMatrix { m: core::array::from_fn(|a| core::array::from_fn(|b| &self.m[a][b] * k)) }
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        self.m.iter().map(|row| row.iter().map(Rational::to_f64).collect()).collect()
    }

    pub fn max_abs(&self) -> Rational {
        self.m.iter().flatten().map(Rational::abs).max().unwrap_or_default()
    }
}

/// Mass matrix in units of `m²/f`:
/// `¼ qᵃqᵇ · ½ · Re ½[T(a,b) + T(b,a)]` with `T` from the split order.
pub fn mass_matrix_unit(c: &ChargeSet) -> MassMatrix {
    let t = mass_tensor(MassOrder::Split);
    let eighth = Rational::frac(1, 8);
    let half = Rational::frac(1, 2);
    MassMatrix {
        m: core::array::from_fn(|a| {
            core::array::from_fn(|b| {
                let sym = &(&t[a][b].re + &t[b][a].re) * &half;
                &(&(&c.q[a] * &c.q[b]) * &eighth) * &sym
            })
        }),
    }
}

pub fn mass_matrix(c: &ChargeSet, p: &FieldParams) -> MassMatrix {
    mass_matrix_unit(c).scaled(&p.m2_over_f())
}

/// Entries where association orders disagree, or where the tensor is not symmetric.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderingReport {
    pub order_mismatches: Vec<(usize, usize, MassOrder)>,
    /// Pairs with `T(a,b) ≠ T(b,a)`; only the symmetric part enters the mass matrix.
    pub asymmetric: Vec<(usize, usize, GaussQ, GaussQ)>,
}

pub fn ordering_report() -> OrderingReport {
    let base = mass_tensor(MassOrder::Split);
    let mut order_mismatches = Vec::new();
    for order in [MassOrder::LeftNested, MassOrder::RightNested] {
        let t = mass_tensor(order);
        for a in 0..8 {
            for b in 0..8 {
                if t[a][b] != base[a][b] {
                    order_mismatches.push((a, b, order));
                }
            }
        }
    }
    let mut asymmetric = Vec::new();
    for a in 0..8 {
        for b in a + 1..8 {
            if base[a][b] != base[b][a] {
                asymmetric.push((a, b, base[a][b].clone(), base[b][a].clone()));
            }
        }
    }
    OrderingReport { order_mismatches, asymmetric }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::couplings::Couplings;
    use crate::scalar::CoeffElem;

    fn unit_charges() -> ChargeSet {
        ChargeSet::from_charges(core::array::from_fn(|_| Rational::one()), CoeffElem::zero())
    }

    #[test]
    fn zero_charges() {
        let cs = crate::couplings::coupling_match(&Couplings::zero());
        assert_eq!(mass_matrix(&cs, &FieldParams::default()), MassMatrix::zero());
    }

    #[test]
    fn unit_charge_entries() {
        let m = mass_matrix(&unit_charges(), &FieldParams::default());
        assert!(m.is_symmetric());
        for a in 0..8 {
            assert_eq!(m.m[a][a], Rational::frac(1, 2));
        }
        assert_eq!(m.m[0][3], Rational::frac(-1, 2));
        assert_eq!(m.m[1][5], Rational::zero());
    }

    #[test]
    fn orders_agree() {
        let r = ordering_report();
        assert!(r.order_mismatches.is_empty());
        assert_eq!(r.asymmetric.len(), 3);
    }
}
