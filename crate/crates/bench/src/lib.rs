//! Deterministic expression corpora for the benchmarks.

use bousfield_core::{ClassExpr, Generator};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x5eed_b0b5;

fn generator(rng: &mut ChaCha8Rng, max_index: u32) -> Generator {
    let n = rng.gen_range(0..=max_index);
    match rng.gen_range(0..10) {
        0 => Generator::F(n),
        1 | 2 => Generator::T(n),
        3 | 4 => Generator::K(n),
        5 => Generator::E(n),
        6 => Generator::Q,
        7 => Generator::BP,
        8 => Generator::HFp,
        _ => Generator::I,
    }
}

/// A random expression tree with at most `depth` levels.
pub fn random_expr(rng: &mut ChaCha8Rng, depth: u32, max_index: u32) -> ClassExpr {
    if depth == 0 || rng.gen_bool(0.3) {
        return ClassExpr::gen(generator(rng, max_index));
    }
    let a = random_expr(rng, depth - 1, max_index);
    let b = random_expr(rng, depth - 1, max_index);
    if rng.gen_bool(0.5) {
        ClassExpr::smash(a, b)
    } else {
        ClassExpr::wedge(a, b)
    }
}

/// `size` expressions, identical across runs.
pub fn corpus(size: usize, depth: u32, max_index: u32) -> Vec<ClassExpr> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    (0..size).map(|_| random_expr(&mut rng, depth, max_index)).collect()
}
