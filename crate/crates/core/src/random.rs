//! Seeded generation of random rational games and subspace members.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::game::{Game, GameSpace};
use crate::rational::{frac, Rational};
use crate::subspace::Subspace;

pub type GameRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> GameRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Numerator in `-10..=10`, denominator in `1..=6`.
pub fn random_rational(rng: &mut impl Rng) -> Rational {
    frac(rng.gen_range(-10..=10), rng.gen_range(1..=6))
}

pub fn random_nonzero_rational(rng: &mut impl Rng) -> Rational {
    loop {
        let r = random_rational(rng);
        if r != Rational::from_integer(0.into()) {
            return r;
        }
    }
}

pub fn random_game(space: &GameSpace, rng: &mut impl Rng) -> Game {
    let v = (0..space.dim()).map(|_| random_rational(rng)).collect();
    Game::new(space.clone(), v).expect("length matches space")
}

/// A random combination of the basis columns with nonzero coefficients.
pub fn random_member(s: &Subspace, rng: &mut impl Rng) -> Game {
    let coeffs: Vec<Rational> = (0..s.dimension())
        .map(|_| random_nonzero_rational(rng))
        .collect();
    s.combine(&coeffs)
}

/// `count` games from a fresh generator seeded with `seed`.
pub fn seeded_games(space: &GameSpace, count: usize, seed: u64) -> Vec<Game> {
    let mut rng = rng_from_seed(seed);
    (0..count).map(|_| random_game(space, &mut rng)).collect()
}
