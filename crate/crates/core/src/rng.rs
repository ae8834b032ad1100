//! Deterministic sampling.
//!
//! A splitmix64 stream keyed by the seed recorded in every report.
//! Hand-rolled so the byte-identical-replay contract cannot drift with
//! an external RNG crate's version.

#[derive(Debug, Clone)]
pub struct SplitMix {
    state: u64,
}

impl SplitMix {
    pub fn new(seed: u64) -> Self {
        SplitMix { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in `[-1, 1]`.
    pub fn next_unit(&mut self) -> f64 {
        let u = self.next_u64() >> 11; // 53 random bits
        (u as f64 / (1u64 << 52) as f64) - 1.0
    }

    pub fn next_index(&mut self, n: usize) -> usize {
        debug_assert!(n > 0);
        (self.next_u64() % n as u64) as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_given_seed() {
        let mut a = SplitMix::new(42);
        let mut b = SplitMix::new(42);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn unit_range() {
        let mut r = SplitMix::new(7);
        for _ in 0..1000 {
            let x = r.next_unit();
            assert!((-1.0..=1.0).contains(&x));
        }
    }
}
