//! Cross-validation of the two independent Alexander-polynomial routes:
//! the Seifert-matrix of the Bennequin surface and the reduced Burau
//! representation. Agreement on random braid words exercises every
//! linking-number case in the Seifert construction.

use knotpg::exact::{LaurentPoly, SymMono, SymbolId, rat};
use knotpg::oracle::*;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn sym_poly(half: &[i64]) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for (k, &c) in half.iter().enumerate() {
        if c == 0 {
            continue;
        }
        p.add_term(SymMono::var(SymbolId::T, 2 * k as i64), rat(c));
        if k > 0 {
            p.add_term(SymMono::var(SymbolId::T, -2 * (k as i64)), rat(c));
        }
    }
    p
}

#[test]
fn seifert_route_agrees_with_burau_route_on_random_words() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0;
    while checked < 300 {
        let strands = rng.gen_range(2..=5usize);
        let len = rng.gen_range(1..=12usize);
        let letters: Vec<i32> = (0..len)
            .map(|_| {
                let k = rng.gen_range(1..strands as i32);
                if rng.gen_bool(0.5) { k } else { -k }
            })
            .collect();
        let b = BraidWord { letters, strands };
        if !b.closes_to_knot() {
            continue;
        }
        let via_seifert = alexander_from_braid(&b).unwrap();
        let via_burau = burau_alexander(&b).unwrap();
        assert_eq!(via_seifert, via_burau, "disagreement on word {b}");
        checked += 1;
    }
}

#[test]
fn torus_knot_alexander_values() {
    // (2,3): T - 1 + T^{-1}.
    let b = BraidWord::new(&[1, 1, 1]).unwrap();
    assert_eq!(alexander_from_braid(&b).unwrap(), sym_poly(&[-1, 1]));
    // (2,5).
    let b = BraidWord::new(&[1, 1, 1, 1, 1]).unwrap();
    assert_eq!(alexander_from_braid(&b).unwrap(), sym_poly(&[1, -1, 1]));
    // (2,7).
    let b = BraidWord::new(&[1; 7]).unwrap();
    assert_eq!(alexander_from_braid(&b).unwrap(), sym_poly(&[-1, 1, -1, 1]));
    // (3,4): T^3 - T^2 + 1 - T^{-2} + T^{-3}.
    let b = BraidWord::new(&[1, 2, 1, 2, 1, 2, 1, 2]).unwrap();
    assert_eq!(alexander_from_braid(&b).unwrap(), sym_poly(&[1, 0, -1, 1]));
}

#[test]
fn figure_eight_alexander_and_derived_values() {
    let b = BraidWord::new(&[1, -2, 1, -2]).unwrap();
    let delta = alexander_from_braid(&b).unwrap();
    assert_eq!(delta, sym_poly(&[3, -1]));
    assert_eq!(alexander_degree(&delta), 1);
    assert_eq!(determinant_from_alexander(&delta).unwrap(), 5);
    assert_eq!(v2_from_alexander(&delta).unwrap(), -1);
}

#[test]
fn mirror_image_preserves_alexander() {
    for word in [vec![1, 1, 1], vec![1, 1, 1, 2, -1, 2], vec![1, 2, 1, 2, 1, 2, 1, 2]] {
        let b = BraidWord::new(&word).unwrap();
        assert_eq!(
            alexander_from_braid(&b).unwrap(),
            alexander_from_braid(&b.mirror()).unwrap()
        );
    }
}

#[test]
fn unknot_closures_have_trivial_alexander() {
    for word in [vec![1], vec![1, 2], vec![1, -2], vec![1, 2, 3], vec![1, 1, -1]] {
        let b = BraidWord::new(&word).unwrap();
        assert_eq!(alexander_from_braid(&b).unwrap(), LaurentPoly::one());
    }
}
