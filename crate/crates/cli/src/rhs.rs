//! Seeded right-hand sides.

use tpbessel::Rational;

const MULTIPLIER: u64 = 6364136223846793005;
const INCREMENT: u64 = 1442695040888963407;

/// 64-bit linear congruential generator `s <- a s + c (mod 2^64)`.
#[derive(Clone, Debug)]
pub struct Lcg {
    state: u64,
}

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Lcg { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_mul(MULTIPLIER).wrapping_add(INCREMENT);
        self.state
    }

    /// Integer in `[lo, hi]` from the top 31 bits of the next state.
    pub fn next_in(&mut self, lo: u64, hi: u64) -> u64 {
        lo + (self.next_u64() >> 33) % (hi - lo + 1)
    }
}

/// `(b1, b2)`: `b2` has integer entries in `[1, 1000]`, `b1_i = (-1)^(i+1) b2_i` (1-based `i`).
pub fn rhs_pair(n: usize, seed: u64) -> (Vec<Rational>, Vec<Rational>) {
    let mut rng = Lcg::new(seed);
    let b2: Vec<Rational> = (0..n)
        .map(|_| Rational::from(rng.next_in(1, 1000) as i64))
        .collect();
    let b1 = b2
        .iter()
        .enumerate()
        .map(|(i, v)| if i % 2 == 0 { v.clone() } else { -v.clone() })
        .collect();
    (b1, b2)
}
