use ggs_core::r0::free_space_basis;
use ggs_core::rmatrix::construct;
use ggs_core::triple::enumerate_all;
use ggs_core::verify::gauge_check;
use ggs_core::{CartanTensor, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn conjugation_by_free_elements_preserves_both_checks() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut checked = 0;
    for n in 2..=5 {
        for t in enumerate_all(n).unwrap() {
            let basis = free_space_basis(&t).unwrap();
            if basis.is_empty() {
                continue;
            }
            let r = construct(&t).unwrap().r;
            assert!(gauge_check(&t, &r, &CartanTensor::zero(n)).unwrap());
            for b in &basis {
                assert!(gauge_check(&t, &r, b).unwrap(), "{t}");
                checked += 1;
            }
            for _ in 0..5 {
                let mut rp = CartanTensor::zero(n);
                for b in &basis {
                    rp = rp.add(&b.scale(&Rational::from_integer(rng.gen_range(-3..=3))));
                }
                assert!(gauge_check(&t, &r, &rp).unwrap(), "{t}");
                checked += 1;
            }
        }
    }
    assert!(checked > 0);
}
