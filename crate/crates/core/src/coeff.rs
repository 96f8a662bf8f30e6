//! Coefficient fields.
//!
//! Everything above this module is generic over [`Coeff`]. Two fields are
//! provided: the rationals (`BigRational`) and the Gaussian rationals
//! [`GaussRat`], which the four-holed sphere parameter maps need because
//! they send boundary parameters to `i * t_j`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// An exact field of characteristic zero.
///
/// Arithmetic goes through `&self` methods so that hot loops never clone
/// big integers just to add them.
pub trait Coeff:
    Clone + fmt::Debug + Eq + Ord + std::hash::Hash + Send + Sync + Zero + One + 'static
{
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;
    fn from_ratio(num: i64, den: i64) -> Self;
    fn from_bigrational(r: BigRational) -> Self;
    /// The square root of -1 when the field contains one.
    fn imag_unit() -> Option<Self>;
    /// An exact square root inside the field, when one is cheap to find.
    fn sqrt_exact(&self) -> Option<Self>;
    /// Canonical text: rationals as `p` or `p/q`, Gaussian values as `a+bi`.
    fn render(&self) -> String;

    fn from_i64(n: i64) -> Self {
        Self::from_ratio(n, 1)
    }

    fn is_one_value(&self) -> bool {
        *self == Self::one()
    }

    /// Integer power; negative exponents invert. `None` for `0^-n`.
    fn powi(&self, e: i64) -> Option<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut n = e.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul_ref(&sq);
            }
            n >>= 1;
            if n > 0 {
                sq = sq.mul_ref(&sq);
            }
        }
        Some(acc)
    }
}

fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer();
    let d = r.denom();
    let sn = n.sqrt();
    let sd = d.sqrt();
    if &(&sn * &sn) == n && &(&sd * &sd) == d {
        Some(BigRational::new(sn, sd))
    } else {
        None
    }
}

fn render_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl Coeff for BigRational {
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }
    fn from_bigrational(r: BigRational) -> Self {
        r
    }
    fn imag_unit() -> Option<Self> {
        None
    }
    fn sqrt_exact(&self) -> Option<Self> {
        rational_sqrt(self)
    }
    fn render(&self) -> String {
        render_rational(self)
    }
}

/// An element `re + im*i` of the Gaussian rationals.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GaussRat {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussRat {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRat { re, im }
    }

    pub fn i() -> Self {
        GaussRat { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn conj(&self) -> Self {
        GaussRat { re: self.re.clone(), im: -&self.im }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Add for GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: GaussRat) -> GaussRat {
        self.add_ref(&rhs)
    }
}

impl Sub for GaussRat {
    type Output = GaussRat;
    fn sub(self, rhs: GaussRat) -> GaussRat {
        self.sub_ref(&rhs)
    }
}

impl Mul for GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: GaussRat) -> GaussRat {
        self.mul_ref(&rhs)
    }
}

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        self.neg_ref()
    }
}

impl Zero for GaussRat {
    fn zero() -> Self {
        GaussRat { re: BigRational::zero(), im: BigRational::zero() }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussRat {
    fn one() -> Self {
        GaussRat { re: BigRational::one(), im: BigRational::zero() }
    }
}

impl From<BigRational> for GaussRat {
    fn from(re: BigRational) -> Self {
        GaussRat { re, im: BigRational::zero() }
    }
}

impl Coeff for GaussRat {
    fn add_ref(&self, rhs: &Self) -> Self {
        GaussRat { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        GaussRat { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussRat { re: &self.re * &rhs.re, im: BigRational::zero() };
        }
        GaussRat {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
    fn neg_ref(&self) -> Self {
        GaussRat { re: -&self.re, im: -&self.im }
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.im.is_zero() {
            return Some(GaussRat { re: self.re.recip(), im: BigRational::zero() });
        }
        let norm = &self.re * &self.re + &self.im * &self.im;
        Some(GaussRat { re: &self.re / &norm, im: -(&self.im / &norm) })
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        GaussRat::from(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }
    fn from_bigrational(r: BigRational) -> Self {
        GaussRat::from(r)
    }
    fn imag_unit() -> Option<Self> {
        Some(GaussRat::i())
    }
    fn sqrt_exact(&self) -> Option<Self> {
        if !self.im.is_zero() {
            return None;
        }
        if let Some(r) = rational_sqrt(&self.re) {
            return Some(GaussRat::from(r));
        }
        rational_sqrt(&-&self.re).map(|r| GaussRat { re: BigRational::zero(), im: r })
    }
    fn render(&self) -> String {
        if self.im.is_zero() {
            return render_rational(&self.re);
        }
        let sign = if self.im.is_negative() { "-" } else { "+" };
        format!("{}{}{}i", render_rational(&self.re), sign, render_rational(&self.im.abs()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_unit_squares_to_minus_one() {
        let i = GaussRat::i();
        assert_eq!(i.mul_ref(&i), GaussRat::from_i64(-1));
        assert_eq!(i.inv().unwrap(), i.neg_ref());
    }

    #[test]
    fn render_forms() {
        assert_eq!(GaussRat::from_ratio(-3, 6).render(), "-1/2");
        let z = GaussRat::new(BigRational::from_integer(1.into()), BigRational::new((-3).into(), 2.into()));
        assert_eq!(z.render(), "1-3/2i");
        assert_eq!(GaussRat::i().render(), "0+1i");
    }

    #[test]
    fn exact_square_roots() {
        assert_eq!(GaussRat::from_ratio(9, 4).sqrt_exact(), Some(GaussRat::from_ratio(3, 2)));
        assert_eq!(GaussRat::from_i64(-1).sqrt_exact(), Some(GaussRat::i()));
        assert_eq!(GaussRat::from_i64(2).sqrt_exact(), None);
        assert_eq!(BigRational::from_ratio(-4, 1).sqrt_exact(), None);
    }

    #[test]
    fn powers() {
        let two = GaussRat::from_i64(2);
        assert_eq!(two.powi(-3).unwrap(), GaussRat::from_ratio(1, 8));
        assert_eq!(GaussRat::zero().powi(-1), None);
    }
}
