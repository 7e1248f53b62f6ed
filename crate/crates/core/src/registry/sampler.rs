//! Seeded sample points for numeric checks.

use rand::Rng;

use crate::numeric::C64;

/// Imaginary part of `τ` is drawn from this interval.
pub const TAU_IM: (f64, f64) = (0.8, 1.6);
/// Bound on `|Re τ|`.
pub const TAU_RE: f64 = 0.45;
/// Bound on `|Re z|`.
pub const Z_RE: f64 = 1.5;
/// Bound on `|Im z|`.
pub const Z_IM: f64 = 0.25;

/// One draw: a modulus, eight variables and eight auxiliary reals in `[0, 1)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Sample {
    pub tau: C64,
    pub z: [C64; 8],
    pub u: [f64; 8],
}

impl Sample {
    pub fn draw<R: Rng>(rng: &mut R) -> Self {
        let tau = C64::new(rng.gen_range(-TAU_RE..=TAU_RE), rng.gen_range(TAU_IM.0..=TAU_IM.1));
        let mut z = [C64::new(0.0, 0.0); 8];
        for w in &mut z {
            *w = C64::new(rng.gen_range(-Z_RE..=Z_RE), rng.gen_range(-Z_IM..=Z_IM));
        }
        let mut u = [0.0; 8];
        for x in &mut u {
            *x = rng.gen();
        }
        Sample { tau, z, u }
    }

    /// `q = e^{2πiτ}`.
    pub fn q(&self) -> C64 {
        crate::numeric::qpow(self.tau, 1.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn draws_stay_in_the_box() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let s = Sample::draw(&mut rng);
            assert!(s.tau.im >= TAU_IM.0 && s.tau.im <= TAU_IM.1 && s.tau.re.abs() <= TAU_RE);
            assert!(s.z.iter().all(|z| z.re.abs() <= Z_RE && z.im.abs() <= Z_IM));
            assert!(s.u.iter().all(|x| (0.0..1.0).contains(x)));
        }
    }

    #[test]
    fn same_seed_same_draw() {
        let a = Sample::draw(&mut ChaCha8Rng::seed_from_u64(1));
        let b = Sample::draw(&mut ChaCha8Rng::seed_from_u64(1));
        assert_eq!(a, b);
    }
}
