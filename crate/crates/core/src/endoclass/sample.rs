use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::matrices::IntMatrix;
use crate::steinberg::{GenSymbol, Word};

/// Deterministic generator used for every randomized check in the crate.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random element of `GL_d(Z)`: a product of at most `max_factors`
/// elementary matrices `E_ij^{±1}` and sign-diagonal matrices.
pub fn random_gl_matrix<R: Rng>(d: usize, max_factors: usize, rng: &mut R) -> IntMatrix {
    let gens = GenSymbol::all(d);
    let mut m = IntMatrix::identity(d);
    let count = rng.gen_range(0..=max_factors);
    for _ in 0..count {
        let f = if rng.gen_bool(0.15) {
            let mut s = IntMatrix::identity(d);
            let k = rng.gen_range(0..d);
            s.set(k, k, (-1).into());
            s
        } else {
            let g = gens[rng.gen_range(0..gens.len())];
            let mut e = IntMatrix::identity(d);
            e.set(g.i - 1, g.j - 1, if rng.gen_bool(0.5) { 1 } else { -1 }.into());
            e
        };
        m = &m * &f;
    }
    m
}

/// A random word of length `len` in the `E_ij^{±1}`.
pub fn random_word<R: Rng>(d: usize, len: usize, rng: &mut R) -> Word {
    let gens = GenSymbol::all(d);
    let letters = (0..len)
        .map(|_| (gens[rng.gen_range(0..gens.len())], if rng.gen_bool(0.5) { 1 } else { -1 }))
        .collect();
    Word::from_letters(letters).expect("exponents are ±1")
}
