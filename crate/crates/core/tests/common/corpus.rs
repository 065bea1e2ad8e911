//! Seeded random square systems in two variables.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sgb_core::rational::rat;
use sgb_core::{LatticePoint, LaurentPolynomial};

pub const SEED: u64 = 0x005e_edf5;

fn random_poly(rng: &mut ChaCha8Rng) -> LaurentPolynomial {
    let mut grid: Vec<LatticePoint> = (0..3)
        .flat_map(|a| (0..3).map(move |b| LatticePoint::new(vec![a, b])))
        .collect();
    grid.shuffle(rng);
    let size = rng.gen_range(2..=4);
    LaurentPolynomial::from_terms(grid.into_iter().take(size).map(|p| {
        let mut num = 0;
        while num == 0 {
            num = rng.gen_range(-9..=9);
        }
        (p, rat(num, rng.gen_range(1..=7)))
    }))
}

/// `count` systems `(f_1, f_2)` with supports of 2 to 4 points in `[0,2]^2`.
pub fn random_systems(count: usize) -> Vec<Vec<LaurentPolynomial>> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    (0..count).map(|_| vec![random_poly(&mut rng), random_poly(&mut rng)]).collect()
}
