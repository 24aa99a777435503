mod common;

use common::{coeff, gauss, octonionic, rng, zorn};
use octoweak_core::couplings::{coupling_match, ChargeSet, Couplings};
use octoweak_core::fermion::{build_doublet, current_trace, e_nu, nu_e, Doublet, Order, Particle};
use octoweak_core::field::{boson_basis_change, boson_basis_inverse, mass_matrix, spectrum, FieldParams};
use octoweak_core::octonion::{associator, quad_trace, split3, OctCoord, Zorn};
use octoweak_core::scalar::{CoeffElem, GaussQ, Rational, Surd};
use proptest::prelude::*;
use rand::Rng;

const CASES: usize = 1000;

#[test]
fn coeff_ring_axioms() {
    let mut r = rng();
    for _ in 0..CASES {
        let (x, y, z) = (coeff(&mut r), coeff(&mut r), coeff(&mut r));
        assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        assert_eq!(&x * &y, &y * &x);
        assert_eq!(x.conj().conj(), x);
        assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
        assert_eq!((&x + &y).conj(), &x.conj() + &y.conj());
    }
}

#[test]
fn surd_reduction_confluent() {
    let c0 = CoeffElem::surd(Surd::C0);
    let y0 = CoeffElem::surd(Surd::Y0);
    let s2 = CoeffElem::surd(Surd::S2);
    assert_eq!(&(&c0 * &y0) * &s2, &c0 * &(&y0 * &s2));
    assert_eq!(&(&s2 * &c0) * &(&y0 * &c0), &(&y0 * &s2) * &CoeffElem::frac(32, 257));
}

proptest! {
    #[test]
    fn gauss_field_ops(a in -50i64..50, b in -50i64..50, c in -50i64..50, d in 1i64..50) {
        let x = GaussQ::new(Rational::frac(a, d), Rational::frac(b, d));
        let y = GaussQ::new(Rational::frac(c, 7), Rational::frac(d, 3));
        prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
        if !x.is_zero() {
            prop_assert_eq!(&x * &x.recip().unwrap(), GaussQ::one());
        }
        prop_assert_eq!(x.norm_sq(), (&x * &x.conj()).re);
    }

    #[test]
    fn rational_text_round_trip(n in -10_000i64..10_000, d in 1i64..10_000) {
        let q = Rational::frac(n, d);
        prop_assert_eq!(q.to_string().parse::<Rational>().unwrap(), q.clone());
        prop_assert!(q.gcd_is_one());
    }
}

#[test]
fn alternativity_on_octonions() {
    let mut r = rng();
    for _ in 0..CASES {
        let (a, b) = (octonionic(&mut r), octonionic(&mut r));
        assert!(associator(&a, &a, &b).is_zero());
        assert!(associator(&a, &b, &b).is_zero());
    }
}

#[test]
fn associator_antisymmetry() {
    let mut r = rng();
    for _ in 0..CASES {
        let (a, b, c) = (octonionic(&mut r), octonionic(&mut r), octonionic(&mut r));
        let x = associator(&a, &b, &c);
        assert_eq!(x, associator(&b, &a, &c).negated());
        assert_eq!(x, associator(&a, &c, &b).negated());
    }
}

#[test]
fn octonionic_closure() {
    let mut r = rng();
    for _ in 0..CASES {
        let (a, b) = (octonionic(&mut r), octonionic(&mut r));
        assert!(a.star::<GaussQ, GaussQ>(&b).is_octonionic());
    }
    for i in 0..8 {
        for j in 0..8 {
            let s: Zorn<GaussQ> = Zorn::sigma(i).unwrap().star(&Zorn::<GaussQ>::sigma(j).unwrap());
            assert!(s.is_octonionic());
        }
    }
}

#[test]
fn conjugation_reverses_products() {
    let mut r = rng();
    for _ in 0..CASES {
        let (u, v) = (zorn(&mut r), zorn(&mut r));
        let lhs: Zorn<GaussQ> = u.star::<GaussQ, GaussQ>(&v).conj();
        let rhs: Zorn<GaussQ> = v.conj::<GaussQ>().star(&u.conj::<GaussQ>());
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn trace_symmetric_in_arguments() {
    let mut r = rng();
    for _ in 0..CASES {
        let (u, v) = (zorn(&mut r), zorn(&mut r));
        assert_eq!(u.star::<GaussQ, GaussQ>(&v).trace(), v.star::<GaussQ, GaussQ>(&u).trace());
    }
}

#[test]
fn representations_agree() {
    let mut r = rng();
    for _ in 0..500 {
        let a = OctCoord::new(std::array::from_fn(|_| gauss(&mut r)));
        let b = OctCoord::new(std::array::from_fn(|_| gauss(&mut r)));
        let lhs = a.mul(&b).to_zorn();
        let rhs: Zorn<GaussQ> = a.to_zorn().star(&b.to_zorn());
        assert_eq!(lhs, rhs);
        assert_eq!(OctCoord::from_zorn(&a.to_zorn()).unwrap(), a);
    }
}

#[test]
fn split_parts_sum_to_left_product() {
    let mut r = rng();
    for _ in 0..100 {
        let (a, b, c) = (zorn(&mut r), zorn(&mut r), zorn(&mut r));
        let p = split3(&a, &b, &c);
        let left: Zorn<GaussQ> = a.star::<GaussQ, GaussQ>(&b).star(&c);
        assert_eq!(p.assoc.plus(&p.nonassoc), left);
        assert_eq!(p.nonassoc, associator(&a, &b, &c).halved());
    }
}

#[test]
fn quad_trace_antisymmetric() {
    let mut r = rng();
    for _ in 0..200 {
        let idx: [usize; 4] = std::array::from_fn(|_| r.gen_range(0..8));
        let t = quad_trace(idx[0], idx[1], idx[2], idx[3]).unwrap();
        let swapped = quad_trace(idx[1], idx[0], idx[2], idx[3]).unwrap();
        assert_eq!(t, -swapped.clone());
        assert_eq!(t, -quad_trace(idx[0], idx[1], idx[3], idx[2]).unwrap());
        if idx.contains(&0) {
            assert!(t.is_zero());
        }
    }
}

fn rescaled(d: &Doublet, p: Particle, t: i64) -> Doublet {
    let k = CoeffElem::int(t);
    Doublet {
        l: d.l.map(|x| x.rescale_particle(p, &k)),
        lbar: d.lbar.map(|x| x.rescale_particle(p, &k)),
        r: d.r,
    }
}

#[test]
fn current_linearity_in_components() {
    let d = build_doublet();
    for t in [2, 3] {
        let k = CoeffElem::int(t);
        let e_scaled = rescaled(&d, Particle::E, t);
        for a in 0..8 {
            let base = current_trace(&d, a, Order::Left).unwrap();
            let scaled = current_trace(&e_scaled, a, Order::Left).unwrap();
            for (b, c) in base.terms() {
                let n = usize::from(b.bar.particle == Particle::E) + usize::from(b.ket.particle == Particle::E);
                let factor = (0..n).fold(CoeffElem::one(), |acc, _| &acc * &k);
                assert_eq!(scaled.coeff(b), &factor * c, "a = {a}, t = {t}");
            }
            assert_eq!(scaled.len(), base.len());
        }
    }
}

#[test]
fn hermiticity_pattern() {
    let d = build_doublet();
    for a in 0..8 {
        for order in [Order::Left, Order::Right] {
            let t = current_trace(&d, a, order).unwrap();
            assert_eq!(t.coeff(&e_nu()), t.coeff(&nu_e()).conj(), "a = {a}");
        }
    }
}

#[test]
fn spectrum_invariant_under_global_sign_flip() {
    let c = coupling_match(&Couplings::default());
    let flipped = ChargeSet::from_charges(c.q.clone().map(|q| -q), c.h_tilde.clone());
    let p = FieldParams::default();
    let a = spectrum(&mass_matrix(&c, &p).to_f64()).unwrap();
    let b = spectrum(&mass_matrix(&flipped, &p).to_f64()).unwrap();
    assert_eq!(a.eigenvalues, b.eigenvalues);
}

#[test]
fn basis_change_round_trip() {
    let mut r = rng();
    let c = Couplings {
        gk: [Rational::frac(1, 2), Rational::frac(3, 4), Rational::frac(5, 3), Rational::one()],
        ..Couplings::default()
    };
    for _ in 0..100 {
        let a: [num_complex::Complex64; 8] =
            std::array::from_fn(|_| num_complex::Complex64::new(r.gen_range(-5.0..5.0), r.gen_range(-5.0..5.0)));
        let theta = r.gen_range(0.05..1.5);
        let back = boson_basis_inverse(&boson_basis_change(&a, theta, &c).unwrap(), theta, &c).unwrap();
        for k in 0..8 {
            assert!((back[k] - a[k]).norm() < 1e-14 * (1.0 + a[k].norm()), "component {k}");
        }
    }
}
