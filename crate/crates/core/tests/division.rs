use num_traits::Zero;

use bezout_core::homog::{clear_denominators, ff_divide, pseudo_divide};
use bezout_core::verify::random_form;
use bezout_core::{euclid_step, DivisionStrategy, HPoly, MPoly, Var};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_pair(rng: &mut ChaCha8Rng) -> (HPoly, HPoly) {
    loop {
        let (da, db) = (rng.gen_range(1..=5), rng.gen_range(1..=4));
        let a = random_form(rng, da, 6);
        let b = random_form(rng, db, 6);
        if a.deg_x() >= b.deg_x() && b.deg_x() >= 1 {
            return (a, b);
        }
    }
}

#[test]
fn fraction_field_division_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let (a, b) = random_pair(&mut rng);
        let div = ff_divide(&a, &b).unwrap();
        let (h, q, r) = clear_denominators(&div);
        assert!(!h.involves(Var::X));
        assert!(
            r.is_zero() || r.deg_x() < b.deg_x(),
            "remainder degree for {a} / {b}"
        );
        let lhs = h.poly() * a.poly();
        let rhs = &(&q * b.poly()) + &r;
        assert_eq!(lhs, rhs, "H*A = Q*B + R fails for {a} / {b}");
    }
}

#[test]
fn pseudo_division_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..200 {
        let (a, b) = random_pair(&mut rng);
        let (lead, q, r) = pseudo_divide(&a, &b).unwrap();
        assert!(r.is_zero() || r.deg_x() < b.deg_x());
        assert_eq!(lead.poly() * a.poly(), &(&q * b.poly()) + &r);
    }
}

#[test]
fn euclid_step_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for strategy in [
        DivisionStrategy::FractionField,
        DivisionStrategy::PseudoDivision,
    ] {
        for _ in 0..100 {
            let (a, b) = random_pair(&mut rng);
            if !bezout_core::homog::coprime(&a, &b) {
                continue;
            }
            let s = euclid_step(&a, &b, strategy).unwrap();
            let lhs: MPoly = s.hp.poly() * a.poly();
            let rhs = &(s.q.poly() * s.bp.poly()) + s.rp.poly();
            assert_eq!(lhs, rhs, "H'A = QB' + R' for {a}, {b}");
            assert_eq!(s.g.poly() * s.bp.poly(), b.poly().clone());
        }
    }
}
