use super::symbols::MAX_SYMBOLS;

/// A Laurent monomial: one integer exponent per symbol of the table.
///
/// The derived `Ord` is lexicographic with symbol 0 most significant, which
/// is the term order used everywhere.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Mono(pub [i16; MAX_SYMBOLS]);

impl Mono {
    pub const ONE: Mono = Mono([0; MAX_SYMBOLS]);

    pub fn var(idx: usize, exp: i16) -> Mono {
        let mut m = Mono::ONE;
        m.0[idx] = exp;
        m
    }

    pub fn exp(&self, idx: usize) -> i16 {
        self.0[idx]
    }

    pub fn with(mut self, idx: usize, exp: i16) -> Mono {
        self.0[idx] = exp;
        self
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, o: &Mono) -> Mono {
        let mut r = *self;
        for (a, b) in r.0.iter_mut().zip(o.0.iter()) {
            *a += *b;
        }
        r
    }

    pub fn div(&self, o: &Mono) -> Mono {
        let mut r = *self;
        for (a, b) in r.0.iter_mut().zip(o.0.iter()) {
            *a -= *b;
        }
        r
    }

    pub fn inv(&self) -> Mono {
        let mut r = *self;
        for a in r.0.iter_mut() {
            *a = -*a;
        }
        r
    }

    pub fn pow(&self, e: i16) -> Mono {
        let mut r = *self;
        for a in r.0.iter_mut() {
            *a *= e;
        }
        r
    }

    /// Componentwise minimum.
    pub fn meet(&self, o: &Mono) -> Mono {
        let mut r = *self;
        for (a, b) in r.0.iter_mut().zip(o.0.iter()) {
            *a = (*a).min(*b);
        }
        r
    }

    /// True when every exponent is non-negative.
    pub fn is_polynomial(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    /// True when `o / self` has only non-negative exponents.
    pub fn divides(&self, o: &Mono) -> bool {
        self.0.iter().zip(o.0.iter()).all(|(a, b)| a <= b)
    }

    /// True when every exponent is even.
    pub fn is_square(&self) -> bool {
        self.0.iter().all(|e| e % 2 == 0)
    }

    pub fn half(&self) -> Mono {
        let mut r = *self;
        for a in r.0.iter_mut() {
            *a /= 2;
        }
        r
    }

    pub fn total_degree(&self) -> i32 {
        self.0.iter().map(|&e| e as i32).sum()
    }
}
