//! Exact real scalars in Q(sqrt2, sqrt3, sqrt5), the degree-8 field that
//! contains cos(pi/m) for every supported Coxeter matrix entry.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Radicands of the Q-basis, in the fixed order
/// {1, sqrt2, sqrt3, sqrt5, sqrt6, sqrt10, sqrt15, sqrt30}.
pub const RADICANDS: [u32; 8] = [1, 2, 3, 5, 6, 10, 15, 30];

/// Prime content of each basis radicand as a bitmask (bit0=2, bit1=3, bit2=5).
const PRIME_MASKS: [u8; 8] = [0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111];

/// Basis index of each prime mask; inverse of `PRIME_MASKS`.
const INDEX_OF_MASK: [usize; 8] = [0, 1, 2, 4, 3, 5, 6, 7];

fn prime_product(mask: u8) -> i64 {
    let mut k = 1;
    if mask & 0b001 != 0 {
        k *= 2;
    }
    if mask & 0b010 != 0 {
        k *= 3;
    }
    if mask & 0b100 != 0 {
        k *= 5;
    }
    k
}

/// An element of Q(sqrt2, sqrt3, sqrt5), stored as 8 rational coordinates on
/// the basis above. Zero iff all coordinates are zero (the basis is linearly
/// independent over Q), so equality and sign are decidable exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadScalar {
    coords: [BigRational; 8],
}

fn zero_coords() -> [BigRational; 8] {
    std::array::from_fn(|_| BigRational::zero())
}

impl Default for QuadScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl QuadScalar {
    pub fn zero() -> Self {
        Self { coords: zero_coords() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::ratio(n, 1)
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        let mut coords = zero_coords();
        coords[0] = BigRational::new(BigInt::from(num), BigInt::from(den));
        Self { coords }
    }

    /// sqrt(r) for r one of the basis radicands.
    pub fn sqrt_of(radicand: u32) -> Option<Self> {
        let idx = RADICANDS.iter().position(|&r| r == radicand)?;
        let mut coords = zero_coords();
        coords[idx] = BigRational::one();
        Some(Self { coords })
    }

    pub fn from_coords(coords: [BigRational; 8]) -> Self {
        Self { coords }
    }

    pub fn coords(&self) -> &[BigRational; 8] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// cos(pi/m) for a Coxeter matrix entry; 0 encodes m = infinity, with the
    /// convention cos(pi/infinity) = 1. Returns None outside {0,1,2,3,4,5,6}.
    pub fn cos_pi_over(m: u32) -> Option<Self> {
        Some(match m {
            0 => Self::one(),
            1 => Self::from_int(-1),
            2 => Self::zero(),
            3 => Self::ratio(1, 2),
            4 => Self::sqrt_of(2).unwrap().scale_ratio(&BigRational::new(1.into(), 2.into())),
            5 => {
                let mut x = Self::sqrt_of(5).unwrap();
                x.coords[0] = BigRational::one();
                x.scale_ratio(&BigRational::new(1.into(), 4.into()))
            }
            6 => Self::sqrt_of(3).unwrap().scale_ratio(&BigRational::new(1.into(), 2.into())),
            _ => return None,
        })
    }

    pub fn scale_ratio(&self, k: &BigRational) -> Self {
        let coords = std::array::from_fn(|i| &self.coords[i] * k);
        Self { coords }
    }

    pub fn double(&self) -> Self {
        self.scale_ratio(&BigRational::from_integer(2.into()))
    }

    /// Galois conjugate flipping the signs of the square roots of the primes
    /// selected by `mask` (bit0=2, bit1=3, bit2=5).
    fn conjugate(&self, mask: u8) -> Self {
        let coords = std::array::from_fn(|i| {
            if (mask & PRIME_MASKS[i]).count_ones() % 2 == 1 {
                -&self.coords[i]
            } else {
                self.coords[i].clone()
            }
        });
        Self { coords }
    }

    /// Exact multiplicative inverse; None for zero. Computed by multiplying
    /// the seven nontrivial Galois conjugates, which reduces to a rational
    /// norm in the constant coordinate.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let mut prod = Self::one();
        for mask in 1..8u8 {
            prod = &prod * &self.conjugate(mask);
        }
        let norm = self * &prod;
        assert!(
            norm.coords[1..].iter().all(|c| c.is_zero()),
            "norm of a field element must be rational"
        );
        Some(prod.scale_ratio(&norm.coords[0].recip()))
    }

    /// Exact sign in {-1, 0, +1}. Zero is decided structurally; otherwise the
    /// radicals are enclosed in rational intervals whose precision doubles
    /// until the interval around the value excludes zero. Terminates because
    /// a nonzero element is bounded away from zero once its coordinates are
    /// fixed.
    pub fn sign(&self) -> i8 {
        if self.is_zero() {
            return 0;
        }
        let mut bits: u32 = 8;
        loop {
            let (mut lo, mut hi) = (BigRational::zero(), BigRational::zero());
            for i in 0..8 {
                let c = &self.coords[i];
                if c.is_zero() {
                    continue;
                }
                if RADICANDS[i] == 1 {
                    lo += c;
                    hi += c;
                    continue;
                }
                let (rlo, rhi) = sqrt_bounds(RADICANDS[i], bits);
                if c.is_positive() {
                    lo += c * &rlo;
                    hi += c * &rhi;
                } else {
                    lo += c * &rhi;
                    hi += c * &rlo;
                }
            }
            if lo.is_positive() {
                return 1;
            }
            if hi.is_negative() {
                return -1;
            }
            bits *= 2;
            assert!(bits <= 1 << 16, "sign refinement failed to converge");
        }
    }

    /// f64 approximation; used only for display and diagnostics.
    pub fn to_f64(&self) -> f64 {
        let mut acc = 0.0;
        for i in 0..8 {
            let c = &self.coords[i];
            if c.is_zero() {
                continue;
            }
            let num = c.numer().to_string().parse::<f64>().unwrap_or(f64::NAN);
            let den = c.denom().to_string().parse::<f64>().unwrap_or(f64::NAN);
            acc += num / den * (RADICANDS[i] as f64).sqrt();
        }
        acc
    }
}

/// Rational enclosure of sqrt(r) with width 2^-bits: floor-sqrt of r*4^bits
/// over 2^bits.
fn sqrt_bounds(r: u32, bits: u32) -> (BigRational, BigRational) {
    let scaled = BigInt::from(r) << (2 * bits);
    let n = scaled.sqrt();
    let den: BigInt = BigInt::one() << bits;
    (
        BigRational::new(n.clone(), den.clone()),
        BigRational::new(n + 1, den),
    )
}

impl Add for &QuadScalar {
    type Output = QuadScalar;
    fn add(self, rhs: &QuadScalar) -> QuadScalar {
        let coords = std::array::from_fn(|i| &self.coords[i] + &rhs.coords[i]);
        QuadScalar { coords }
    }
}

impl Sub for &QuadScalar {
    type Output = QuadScalar;
    fn sub(self, rhs: &QuadScalar) -> QuadScalar {
        let coords = std::array::from_fn(|i| &self.coords[i] - &rhs.coords[i]);
        QuadScalar { coords }
    }
}

impl Neg for &QuadScalar {
    type Output = QuadScalar;
    fn neg(self) -> QuadScalar {
        let coords = std::array::from_fn(|i| -&self.coords[i]);
        QuadScalar { coords }
    }
}

impl Mul for &QuadScalar {
    type Output = QuadScalar;
    fn mul(self, rhs: &QuadScalar) -> QuadScalar {
        let mut coords = zero_coords();
        for i in 0..8 {
            if self.coords[i].is_zero() {
                continue;
            }
            for j in 0..8 {
                if rhs.coords[j].is_zero() {
                    continue;
                }
                let common = PRIME_MASKS[i] & PRIME_MASKS[j];
                let idx = INDEX_OF_MASK[(PRIME_MASKS[i] ^ PRIME_MASKS[j]) as usize];
                let k = BigRational::from_integer(prime_product(common).into());
                coords[idx] += &self.coords[i] * &rhs.coords[j] * k;
            }
        }
        QuadScalar { coords }
    }
}

impl PartialOrd for QuadScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadScalar {
    /// Numeric order, decided exactly via the sign of the difference.
    fn cmp(&self, other: &Self) -> Ordering {
        match (self - other).sign() {
            -1 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }
}

impl fmt::Display for QuadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in 0..8 {
            let c = &self.coords[i];
            if c.is_zero() {
                continue;
            }
            if first {
                first = false;
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if RADICANDS[i] == 1 {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "sqrt{}", RADICANDS[i])?;
            } else {
                write!(f, "{a}*sqrt{}", RADICANDS[i])?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn zero_sign() {
        assert_eq!(QuadScalar::zero().sign(), 0);
    }

    #[test]
    fn sqrt2_minus_one_is_positive() {
        let x = &QuadScalar::sqrt_of(2).unwrap() - &QuadScalar::one();
        assert_eq!(x.sign(), 1);
    }

    #[test]
    fn three_minus_sqrt2_minus_sqrt3_is_negative() {
        // 3 - 1.4142... - 1.7320... < 0, decided by interval refinement.
        let x = &(&QuadScalar::from_int(3) - &QuadScalar::sqrt_of(2).unwrap())
            - &QuadScalar::sqrt_of(3).unwrap();
        assert_eq!(x.sign(), -1);
    }

    #[test]
    fn cos_table() {
        // cos(pi/5) = (1+sqrt5)/4 ~ 0.809; check against sqrt5 arithmetic.
        let c5 = QuadScalar::cos_pi_over(5).unwrap();
        let four_c5 = &c5.double().double() - &QuadScalar::one();
        assert_eq!(&four_c5 * &four_c5, QuadScalar::from_int(5));
        assert_eq!(QuadScalar::cos_pi_over(2).unwrap(), QuadScalar::zero());
        assert_eq!(QuadScalar::cos_pi_over(0).unwrap(), QuadScalar::one());
        assert!(QuadScalar::cos_pi_over(7).is_none());
        // monotone: cos(pi/3) < cos(pi/4) < cos(pi/5) < cos(pi/6) < 1
        let cs: Vec<_> = [3, 4, 5, 6, 0]
            .iter()
            .map(|&m| QuadScalar::cos_pi_over(m).unwrap())
            .collect();
        for w in cs.windows(2) {
            assert!(w[0] < w[1]);
        }
    }

    fn arb_scalar() -> impl Strategy<Value = QuadScalar> {
        proptest::collection::vec((-4i64..=4, 1i64..=3), 8).prop_map(|v| {
            let coords = std::array::from_fn(|i| q(v[i].0, v[i].1));
            QuadScalar::from_coords(coords)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn field_axioms(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn sign_is_multiplicative(a in arb_scalar(), b in arb_scalar()) {
            prop_assert_eq!((&a * &b).sign(), a.sign() * b.sign());
        }

        #[test]
        fn positive_cone_closed_under_addition(a in arb_scalar(), b in arb_scalar()) {
            if a.sign() == 1 && b.sign() == 1 {
                prop_assert_eq!((&a + &b).sign(), 1);
            }
        }

        #[test]
        fn inverse_roundtrip(a in arb_scalar()) {
            if let Some(inv) = a.inverse() {
                prop_assert_eq!(&a * &inv, QuadScalar::one());
            } else {
                prop_assert!(a.is_zero());
            }
        }

        #[test]
        fn sign_matches_float(a in arb_scalar()) {
            let approx = a.to_f64();
            if approx.abs() > 1e-6 {
                prop_assert_eq!(a.sign() as f64, approx.signum());
            }
        }
    }
}
