//! Seeded pseudo-random numbers for bit-reproducible experiments.
//!
//! Every stochastic operation in the crate draws from [`Rng64`], a 64-bit
//! xorshift* shift-register generator. The algorithm is fixed here rather
//! than borrowed from an external crate so that identical seeds produce
//! identical artifacts across releases and platforms.

/// One round of the splitmix64 mixer. Used for seeding and seed derivation.
pub fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derives a child seed from a base seed and a list of salts.
///
/// Used by the evaluation harness to give every (fraction, trial) cell its
/// own stream without correlation between cells.
pub fn mix_seed(base: u64, salts: &[u64]) -> u64 {
    let mut s = splitmix64(base);
    for &x in salts {
        s = splitmix64(s ^ x.wrapping_mul(0xD1B5_4A32_D192_ED03));
    }
    s
}

/// xorshift64* generator. State is never zero.
#[derive(Debug, Clone)]
pub struct Rng64 {
    state: u64,
}

impl Rng64 {
    pub fn new(seed: u64) -> Self {
        let mut state = splitmix64(seed);
        if state == 0 {
            state = 0x9E37_79B9_7F4A_7C15;
        }
        Rng64 { state }
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.state = x;
        x.wrapping_mul(0x2545_F491_4F6C_DD1D)
    }

    /// Uniform in [0, 1) with 53 bits of precision.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / 9_007_199_254_740_992.0)
    }

    /// Uniform index in 0..n.
    pub fn next_index(&mut self, n: usize) -> usize {
        assert!(n > 0, "next_index needs a non-empty range");
        ((self.next_f64() * n as f64) as usize).min(n - 1)
    }

    /// Standard normal draw via Box-Muller; consumes two uniforms per call.
    pub fn next_normal(&mut self) -> f64 {
        let u1 = 1.0 - self.next_f64(); // (0, 1]
        let u2 = self.next_f64();
        (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
    }

    /// In-place Fisher-Yates shuffle.
    pub fn shuffle<T>(&mut self, xs: &mut [T]) {
        for i in (1..xs.len()).rev() {
            let j = self.next_index(i + 1);
            xs.swap(i, j);
        }
    }
}
