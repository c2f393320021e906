/// Modulus of the Lehmer generator, the Mersenne prime `2^31 - 1`.
pub const MODULUS: u64 = 2_147_483_647;
const MULTIPLIER: u64 = 16_807;

/// Multiplicative congruential generator `s' = 16807 * s mod (2^31 - 1)`,
/// the Park-Miller minimal standard generator. The state is never zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RngState {
    state: u64,
}

impl RngState {
    /// Seeds are reduced modulo `2^31 - 1`; a residue of zero becomes 1.
    pub fn new(seed: u64) -> Self {
        let s = seed % MODULUS;
        RngState {
            state: if s == 0 { 1 } else { s },
        }
    }

    pub fn state(&self) -> u64 {
        self.state
    }

    /// Advances the stream and returns the new raw value in `[1, 2^31 - 2]`.
    pub fn lehmer_next(&mut self) -> u64 {
        self.state = MULTIPLIER * self.state % MODULUS;
        self.state
    }

    /// Integer in `[0, k)` as `raw mod k`.
    pub fn below(&mut self, k: usize) -> usize {
        debug_assert!(k > 0);
        (self.lehmer_next() % k as u64) as usize
    }

    /// Edge cost in `[1, 100]`.
    pub fn cost(&mut self) -> i64 {
        1 + (self.lehmer_next() % 100) as i64
    }

    /// Real in the open interval `(0, 1)`.
    pub fn uniform(&mut self) -> f64 {
        self.lehmer_next() as f64 / MODULUS as f64
    }

    /// Two independent standard normals by Box-Muller from two uniforms.
    pub fn normal_pair(&mut self) -> (f64, f64) {
        let u1 = self.uniform();
        let u2 = self.uniform();
        let r = (-2.0 * u1.ln()).sqrt();
        let theta = 2.0 * std::f64::consts::PI * u2;
        (r * theta.cos(), r * theta.sin())
    }
}
