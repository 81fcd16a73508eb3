//! Random instances for the check harness.
//!
//! Every sample gets its own ChaCha stream derived from the seed, the check
//! id and the sample index, so the same sample is drawn no matter which
//! thread evaluates it.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::{int, rat, PreciseNum, Rational, RhoPoly};
use crate::{ExternalNum, Neutrix};

/// Tunable sampling parameters.
///
/// The defaults keep instances small and put many exponents right at or next
/// to neutrix thresholds, where absorption decisions are made.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorConfig {
    pub seed: u64,
    pub max_terms: usize,
    pub coeff_bound: i64,
    pub exponent_denominator_bound: i64,
    pub exponent_range: (Rational, Rational),
    pub neutrix_q_range: (Rational, Rational),
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        Self {
            seed: 0x5EED,
            max_terms: 3,
            coeff_bound: 9,
            exponent_denominator_bound: 2,
            exponent_range: (int(-3), int(3)),
            neutrix_q_range: (int(-2), int(2)),
        }
    }
}

impl GeneratorConfig {
    pub fn with_seed(seed: u64) -> Self {
        Self {
            seed,
            ..Self::default()
        }
    }
}

fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0100_0000_01b3)
    })
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seeded source of random field elements, neutrices and external numbers.
pub struct Gen<'a> {
    rng: ChaCha8Rng,
    cfg: &'a GeneratorConfig,
}

impl<'a> Gen<'a> {
    pub fn new(cfg: &'a GeneratorConfig) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(cfg.seed),
            cfg,
        }
    }

    /// Stream for one sample of one check.
    pub fn for_sample(cfg: &'a GeneratorConfig, check_id: &str, index: u64) -> Self {
        let s = splitmix(cfg.seed ^ splitmix(fnv1a(check_id) ^ splitmix(index)));
        Self {
            rng: ChaCha8Rng::seed_from_u64(s),
            cfg,
        }
    }

    pub fn config(&self) -> &GeneratorConfig {
        self.cfg
    }

    pub fn chance(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn pick<'b, T>(&mut self, items: &'b [T]) -> &'b T {
        &items[self.below(items.len())]
    }

    /// Rational in `[lo, hi]` with denominator at most the configured bound.
    pub fn rational_in(&mut self, lo: &Rational, hi: &Rational) -> Rational {
        let d = self.int_in(1, self.cfg.exponent_denominator_bound.max(1));
        let dd = Rational::from_integer(BigInt::from(d));
        let a = (lo * &dd).ceil().to_integer();
        let b = (hi * &dd).floor().to_integer();
        if a > b {
            return lo.clone();
        }
        let span: i64 = (&b - &a).try_into().unwrap_or(i64::MAX - 1);
        let n = a + BigInt::from(self.int_in(0, span));
        Rational::new(n, BigInt::from(d))
    }

    pub fn exponent(&mut self) -> Rational {
        let (lo, hi) = self.cfg.exponent_range.clone();
        self.rational_in(&lo, &hi)
    }

    pub fn threshold(&mut self) -> Rational {
        let (lo, hi) = self.cfg.neutrix_q_range.clone();
        self.rational_in(&lo, &hi)
    }

    /// Exponent at or next to `center`.
    pub fn exponent_near(&mut self, center: &Rational) -> Rational {
        let d = self.cfg.exponent_denominator_bound.max(1);
        let k = self.int_in(-2, 2);
        center + rat(k, d)
    }

    /// Nonzero coefficient, mostly integral.
    pub fn coeff(&mut self) -> Rational {
        let b = self.cfg.coeff_bound.max(1);
        let mut n = self.int_in(1, b);
        if self.chance(0.5) {
            n = -n;
        }
        if self.chance(0.2) {
            let d = self.int_in(2, 3);
            if n.abs() < b {
                return rat(n, d);
            }
        }
        int(n)
    }

    fn poly_with(&mut self, terms: usize, center: Option<&Rational>) -> RhoPoly {
        let mut out = Vec::with_capacity(terms);
        for _ in 0..terms {
            let e = match center {
                Some(c) if self.chance(0.6) => self.exponent_near(c),
                _ => self.exponent(),
            };
            if out.iter().all(|(_, f)| f != &e) {
                out.push((self.coeff(), e));
            }
        }
        RhoPoly::from_terms(out)
    }

    pub fn poly(&mut self) -> RhoPoly {
        let n = self.int_in(0, self.cfg.max_terms.max(1) as i64) as usize;
        self.poly_with(n, None)
    }

    pub fn nonzero_poly(&mut self) -> RhoPoly {
        loop {
            let n = self.int_in(1, self.cfg.max_terms.max(1) as i64) as usize;
            let p = self.poly_with(n, None);
            if !p.is_zero() {
                return p;
            }
        }
    }

    fn ratio_den(&mut self) -> RhoPoly {
        let e = self.pick(&[rat(1, 2), int(1), int(2), int(-1)]).clone();
        let c = int(self.int_in(1, 3) * if self.chance(0.5) { 1 } else { -1 });
        RhoPoly::from_terms([(Rational::one(), e), (c, Rational::zero())])
    }

    fn precise_near(&mut self, center: Option<&Rational>) -> PreciseNum {
        let n = self.int_in(0, self.cfg.max_terms.max(1) as i64) as usize;
        let num = self.poly_with(n, center);
        if !num.is_zero() && self.chance(0.12) {
            let den = self.ratio_den();
            return PreciseNum::new(num, den).expect("nonzero denominator");
        }
        PreciseNum::from_poly(num)
    }

    pub fn precise(&mut self) -> PreciseNum {
        self.precise_near(None)
    }

    pub fn nonzero_precise(&mut self) -> PreciseNum {
        loop {
            let p = self.precise();
            if !p.is_zero() {
                return p;
            }
        }
    }

    pub fn positive_precise(&mut self) -> PreciseNum {
        self.nonzero_precise().abs()
    }

    /// Precise element of degree at most 0.
    pub fn limited_precise(&mut self) -> PreciseNum {
        loop {
            let p = self.precise();
            if p.degree() <= Some(Rational::zero()) {
                return p;
            }
        }
    }

    pub fn neutrix(&mut self) -> Neutrix {
        match self.below(10) {
            0 | 1 => Neutrix::Zero,
            2..=5 => Neutrix::ScaledOslash(self.threshold()),
            6..=8 => Neutrix::ScaledPound(self.threshold()),
            _ => Neutrix::Max,
        }
    }

    pub fn nonzero_neutrix(&mut self) -> Neutrix {
        loop {
            let n = self.neutrix();
            if n != Neutrix::Zero {
                return n;
            }
        }
    }

    /// One of `0, ⊘, £, M`.
    pub fn idempotent(&mut self) -> Neutrix {
        self.pick(&[
            Neutrix::Zero,
            Neutrix::oslash(),
            Neutrix::pound(),
            Neutrix::Max,
        ])
        .clone()
    }

    /// A magnitude `0 + A`.
    pub fn magnitude(&mut self) -> ExternalNum {
        ExternalNum::from_neutrix(self.neutrix())
    }

    pub fn external(&mut self) -> ExternalNum {
        let nx = self.neutrix();
        let rep = match nx.threshold().cloned() {
            Some(q) if self.chance(0.7) => self.precise_near(Some(&q)),
            _ => self.precise(),
        };
        if self.chance(0.15) {
            return ExternalNum::from_neutrix(nx);
        }
        ExternalNum::new(rep, nx)
    }

    /// Zeroless external number, by rejection.
    pub fn zeroless(&mut self) -> ExternalNum {
        loop {
            let x = self.external();
            if x.is_zeroless() {
                return x;
            }
        }
    }

    pub fn positive_zeroless(&mut self) -> ExternalNum {
        self.zeroless().abs()
    }

    /// Random element of `ρ^q·⊘` for the exclusive or `ρ^q·£` for the
    /// inclusive threshold, spanning degrees just below and at `q`.
    fn group_element(&mut self, nx: &Neutrix) -> PreciseNum {
        let big = |g: &mut Self| -> Rational {
            let k = *g.pick(&[1i64, 2, 7, 1000, 1_000_000]);
            let s = if g.chance(0.5) { 1 } else { -1 };
            int(s * k)
        };
        match nx {
            Neutrix::Zero => PreciseNum::zero(),
            Neutrix::Max => {
                let e = self.rational_in(&int(-8), &int(8));
                PreciseNum::monomial(big(self), e)
            }
            Neutrix::ScaledOslash(q) => {
                let d = self.pick(&[rat(1, 64), rat(1, 8), rat(1, 2), int(1), int(3)]).clone();
                PreciseNum::monomial(big(self), q - d)
            }
            Neutrix::ScaledPound(q) => {
                let d = self.pick(&[int(0), int(0), rat(1, 8), rat(1, 2), int(2)]).clone();
                PreciseNum::monomial(big(self), q - d)
            }
        }
    }

    /// Random element of the set `x`, near its boundary.
    pub fn member(&mut self, x: &ExternalNum) -> PreciseNum {
        let mut g = self.group_element(x.nx());
        if self.chance(0.3) {
            g = &g + &self.group_element(x.nx());
        }
        x.rep() + &g
    }

    /// Natural number: a polynomial in `ρ` with nonnegative value.
    pub fn natural(&mut self) -> PreciseNum {
        loop {
            let terms = self.int_in(0, 3);
            let mut out = Vec::new();
            for _ in 0..terms {
                let e = int(self.int_in(0, 3));
                let c = int(self.int_in(-9, 9));
                out.push((c, e));
            }
            let p = PreciseNum::from_poly(RhoPoly::from_terms(out));
            if !p.is_negative() {
                return p;
            }
        }
    }

    pub fn raw_u64(&mut self) -> u64 {
        self.rng.gen()
    }
}

pub fn gen_precise(cfg: &GeneratorConfig) -> PreciseNum {
    Gen::new(cfg).precise()
}

pub fn gen_neutrix(cfg: &GeneratorConfig) -> Neutrix {
    Gen::new(cfg).neutrix()
}

pub fn gen_external(cfg: &GeneratorConfig) -> ExternalNum {
    Gen::new(cfg).external()
}

pub fn gen_zeroless(cfg: &GeneratorConfig) -> ExternalNum {
    Gen::new(cfg).zeroless()
}
