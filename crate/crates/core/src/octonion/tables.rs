//! Generator multiplication rules and the totally antisymmetric ε tables.

use alloc::vec::Vec;

use crate::scalar::GaussQ;

use super::{Zorn, OctonionError};

/// `e_i · e_j = sign · e_k` on the generators `e⁰..e⁷`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GenProduct {
    pub sign: i8,
    pub index: usize,
}

#[derive(Clone, Copy)]
enum Gen {
    Unit,
    /// `eⁱ`, i = 1..3
    E(usize),
    /// `e⁴`
    Four,
    /// `êⁱ = eⁱ⁺⁴`, i = 1..3
    Hat(usize),
}

fn classify(k: usize) -> Gen {
    match k {
        0 => Gen::Unit,
        1..=3 => Gen::E(k),
        4 => Gen::Four,
        5..=7 => Gen::Hat(k - 4),
        _ => panic!("generator index {k} out of range"),
    }
}

/// Three-dimensional Levi-Civita: `ε^{pqr}` for the unique `r`, if nonzero.
fn levi3(p: usize, q: usize) -> Option<(i8, usize)> {
    if p == q {
        return None;
    }
    let r = 6 - p - q;
    let sign = if (p, q) == (1, 2) || (p, q) == (2, 3) || (p, q) == (3, 1) { 1 } else { -1 };
    Some((sign, r))
}

/// The coordinate multiplication rules:
///
/// ```text
/// eⁱeʲ = −δⁱʲe⁰ + εⁱʲᵏeᵏ     êⁱêʲ = −δⁱʲe⁰ − εⁱʲᵏeᵏ
/// eⁱêʲ = −δⁱʲe⁴ − εⁱʲᵏêᵏ     eⁱe⁴ = êⁱ     e⁴êⁱ = eⁱ
/// ```
///
/// with `(eʲ)² = −1` and the remaining orders fixed by anticommutation of
/// distinct imaginary units.
pub fn generator_product(i: usize, j: usize) -> GenProduct {
    let p = |sign, index| GenProduct { sign, index };
    match (classify(i), classify(j)) {
        (Gen::Unit, _) => p(1, j),
        (_, Gen::Unit) => p(1, i),
        (Gen::E(a), Gen::E(b)) => match levi3(a, b) {
            None => p(-1, 0),
            Some((s, r)) => p(s, r),
        },
        (Gen::Hat(a), Gen::Hat(b)) => match levi3(a, b) {
            None => p(-1, 0),
            Some((s, r)) => p(-s, r),
        },
        (Gen::E(a), Gen::Hat(b)) => match levi3(a, b) {
            None => p(-1, 4),
            Some((s, r)) => p(-s, r + 4),
        },
        (Gen::Hat(b), Gen::E(a)) => match levi3(a, b) {
            None => p(1, 4),
            Some((s, r)) => p(s, r + 4),
        },
        (Gen::E(a), Gen::Four) => p(1, a + 4),
        (Gen::Four, Gen::E(a)) => p(-1, a + 4),
        (Gen::Four, Gen::Hat(a)) => p(1, a),
        (Gen::Hat(a), Gen::Four) => p(-1, a),
        (Gen::Four, Gen::Four) => p(-1, 0),
    }
}

/// Sorts `idx` ascending and returns the permutation parity, or `None`
/// when an index repeats.
pub fn sort_with_parity<const N: usize>(mut idx: [usize; N]) -> Option<([usize; N], i8)> {
    let mut sign = 1i8;
    for i in 0..N {
        for j in 0..N - 1 - i {
            if idx[j] > idx[j + 1] {
                idx.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((idx, sign))
}

/// Totally antisymmetric symbol stored as canonical (ascending) index
/// tuples with a sign.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EpsTable<const N: usize> {
    entries: Vec<([usize; N], i8)>,
}

pub type EpsTable3 = EpsTable<3>;
pub type EpsTable4 = EpsTable<4>;

impl<const N: usize> EpsTable<N> {
    /// Builds the closure of signed base entries. Conflicting signs on the
    /// same support are rejected.
    pub fn from_entries(base: &[([usize; N], i8)]) -> Result<Self, OctonionError> {
        let mut entries: Vec<([usize; N], i8)> = Vec::new();
        for (idx, sign) in base {
            let (canon, parity) = sort_with_parity(*idx).ok_or(OctonionError::RepeatedIndex)?;
            let s = sign * parity;
            match entries.iter().find(|(c, _)| *c == canon) {
                Some((_, existing)) if *existing != s => return Err(OctonionError::InconsistentSign),
                Some(_) => {}
                None => entries.push((canon, s)),
            }
        }
        entries.sort();
        Ok(EpsTable { entries })
    }

    pub fn entries(&self) -> &[([usize; N], i8)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Signed value at an arbitrary index order.
    pub fn get(&self, idx: [usize; N]) -> i8 {
        let Some((canon, parity)) = sort_with_parity(idx) else {
            return 0;
        };
        self.entries
            .iter()
            .find(|(c, _)| *c == canon)
            .map_or(0, |(_, s)| s * parity)
    }
}

impl EpsTable3 {
    /// Structure constants of `Σ̃ⁱ * Σ̃ʲ = −δⁱʲ + εⁱʲᵏΣ̃ᵏ`:
    /// `ε¹²³ = ε¹⁴⁵ = ε¹⁷⁶ = ε²⁴⁶ = ε²⁵⁷ = ε³⁴⁷ = ε³⁶⁵ = 1`.
    pub fn structure_constants() -> Self {
        let base = [
            ([1, 2, 3], 1),
            ([1, 4, 5], 1),
            ([1, 7, 6], 1),
            ([2, 4, 6], 1),
            ([2, 5, 7], 1),
            ([3, 4, 7], 1),
            ([3, 6, 5], 1),
        ];
        Self::from_entries(&base).expect("structure constants are consistent")
    }

    /// Reads `εⁱʲᵏ` off the coordinate multiplication rules.
    pub fn from_generator_products() -> Result<Self, OctonionError> {
        let mut base = Vec::new();
        for i in 1..8 {
            for j in i + 1..8 {
                let GenProduct { sign, index } = generator_product(i, j);
                if index == 0 {
                    return Err(OctonionError::InconsistentSign);
                }
                base.push(([i, j, index], sign));
            }
        }
        Self::from_entries(&base)
    }
}

impl EpsTable4 {
    /// Reads `εⁱʲᵏˡ` off the associators `{eⁱ, eʲ, eᵏ} = 2εⁱʲᵏˡeˡ` of the
    /// coordinate algebra, over every ascending generator triple.
    pub fn from_associators() -> Result<Self, OctonionError> {
        use super::coord::OctCoord;
        let mut base = Vec::new();
        for i in 1..8 {
            for j in i + 1..8 {
                for k in j + 1..8 {
                    let x = super::ops::associator(
                        &OctCoord::<GaussQ>::generator(i),
                        &OctCoord::generator(j),
                        &OctCoord::generator(k),
                    );
                    let nonzero: Vec<usize> = (0..8).filter(|&l| !x.alpha[l].is_zero()).collect();
                    match nonzero.as_slice() {
                        [] => {}
                        [l] => {
                            let c = &x.alpha[*l];
                            let sign = if *c == GaussQ::int(2, 0) {
                                1
                            } else if *c == GaussQ::int(-2, 0) {
                                -1
                            } else {
                                return Err(OctonionError::InconsistentSign);
                            };
                            base.push(([i, j, k, *l], sign));
                        }
                        _ => return Err(OctonionError::InconsistentSign),
                    }
                }
            }
        }
        Self::from_entries(&base)
    }
}

impl EpsTable4 {
    /// The seven quadruples `1247, 1265, 2345, 2376, 3146, 3157, 4567`, each
    /// assigned `+1` in the order written.
    pub const LISTED: [[usize; 4]; 7] =
        [[1, 2, 4, 7], [1, 2, 6, 5], [2, 3, 4, 5], [2, 3, 7, 6], [3, 1, 4, 6], [3, 1, 5, 7], [4, 5, 6, 7]];

    pub fn listed() -> Self {
        let base = Self::LISTED.map(|q| (q, 1));
        Self::from_entries(&base).expect("listed quadruples have distinct supports")
    }
}

/// `Σⁱ * Σʲ = δⁱʲ + iεⁱʲᵏΣᵏ` expected from the structure constants.
pub fn expected_sigma_product(eps: &EpsTable3, i: usize, j: usize) -> Zorn<GaussQ> {
    if i == 0 {
        return Zorn::sigma(j).expect("index in range");
    }
    if j == 0 {
        return Zorn::sigma(i).expect("index in range");
    }
    let mut out = if i == j { Zorn::identity() } else { Zorn::zero() };
    for k in 1..8 {
        let s = eps.get([i, j, k]);
        if s != 0 {
            let term = Zorn::sigma(k).expect("index in range").scale_gauss(&GaussQ::int(0, s as i64));
            out = out.plus(&term);
        }
    }
    out
}
