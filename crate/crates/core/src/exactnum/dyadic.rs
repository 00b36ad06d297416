//! Exact binary floating-point values `mant * 2^exp` with directed rounding.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Round {
    Down,
    Up,
}

/// An exact dyadic rational. The mantissa is odd unless the value is zero,
/// so structural equality is numeric equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    mant: BigInt,
    exp: i64,
}

impl Dyadic {
    pub fn new(mant: BigInt, exp: i64) -> Self {
        let mut d = Dyadic { mant, exp };
        d.normalize();
        d
    }

    fn normalize(&mut self) {
        if self.mant.is_zero() {
            self.exp = 0;
            return;
        }
        let tz = self.mant.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            self.mant >>= tz as usize;
            self.exp += tz as i64;
        }
    }

    pub fn zero() -> Self {
        Dyadic { mant: BigInt::zero(), exp: 0 }
    }

    pub fn one() -> Self {
        Dyadic { mant: BigInt::one(), exp: 0 }
    }

    pub fn from_int<T: Into<BigInt>>(v: T) -> Self {
        Dyadic::new(v.into(), 0)
    }

    /// Exact conversion; every finite `f64` is dyadic.
    pub fn from_f64(x: f64) -> Self {
        assert!(x.is_finite(), "non-finite f64");
        if x == 0.0 {
            return Dyadic::zero();
        }
        let bits = x.to_bits();
        let sign = if bits >> 63 == 1 { -1 } else { 1 };
        let e = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (m, ex) = if e == 0 { (frac, -1074) } else { (frac | (1u64 << 52), e - 1075) };
        Dyadic::new(BigInt::from(m) * sign, ex)
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mant
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.mant.is_positive()
    }

    pub fn signum(&self) -> i32 {
        match self.mant.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn bits(&self) -> u64 {
        self.mant.bits()
    }

    /// Position of the leading bit: `2^(mag-1) <= |x| < 2^mag`.
    pub fn magnitude(&self) -> i64 {
        self.exp + self.mant.bits() as i64
    }

    pub fn neg(&self) -> Self {
        Dyadic { mant: -&self.mant, exp: self.exp }
    }

    pub fn abs(&self) -> Self {
        Dyadic { mant: self.mant.abs(), exp: self.exp }
    }

    pub fn add(&self, other: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let e = self.exp.min(other.exp);
        let a = &self.mant << (self.exp - e) as usize;
        let b = &other.mant << (other.exp - e) as usize;
        Dyadic::new(a + b, e)
    }

    pub fn sub(&self, other: &Dyadic) -> Dyadic {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Dyadic) -> Dyadic {
        Dyadic::new(&self.mant * &other.mant, self.exp + other.exp)
    }

    /// Multiply by `2^k`.
    pub fn shl(&self, k: i64) -> Dyadic {
        if self.is_zero() {
            return Dyadic::zero();
        }
        Dyadic { mant: self.mant.clone(), exp: self.exp + k }
    }

    /// Keep at most `prec` significant bits, rounding in the given direction.
    pub fn round(&self, prec: u32, dir: Round) -> Dyadic {
        let bits = self.mant.bits();
        if bits <= prec as u64 {
            return self.clone();
        }
        let shift = (bits - prec as u64) as usize;
        // BigInt >> rounds toward negative infinity.
        let m = match dir {
            Round::Down => &self.mant >> shift,
            Round::Up => -((-&self.mant) >> shift),
        };
        Dyadic::new(m, self.exp + shift as i64)
    }

    /// Directed rounding of a rational to `prec` significant bits.
    pub fn from_rational(q: &BigRational, prec: u32, dir: Round) -> Dyadic {
        let n = q.numer();
        let d = q.denom();
        if n.is_zero() {
            return Dyadic::zero();
        }
        if d.is_one() {
            return Dyadic::from_int(n.clone()).round(prec, dir);
        }
        if let Some(k) = power_of_two(d) {
            return Dyadic::new(n.clone(), -(k as i64)).round(prec, dir);
        }
        let s = prec as i64 + d.bits() as i64 - n.bits() as i64 + 2;
        let (num, den) = if s >= 0 { (n << s as usize, d.clone()) } else { (n.clone(), d << (-s) as usize) };
        let m = match dir {
            Round::Down => num.div_floor(&den),
            Round::Up => -((-num).div_floor(&den)),
        };
        Dyadic::new(m, -s).round(prec, dir)
    }

    pub fn div(&self, other: &Dyadic, prec: u32, dir: Round) -> Dyadic {
        assert!(!other.is_zero(), "division by zero dyadic");
        if self.is_zero() {
            return Dyadic::zero();
        }
        // (ma * 2^s) / mb carries at least prec + 2 quotient bits
        let s = (prec as i64 + other.mant.bits() as i64 - self.mant.bits() as i64 + 2).max(0);
        let mut num = &self.mant << s as usize;
        let mut den = other.mant.clone();
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        let m = match dir {
            Round::Down => num.div_floor(&den),
            Round::Up => -((-num).div_floor(&den)),
        };
        Dyadic::new(m, self.exp - other.exp - s).round(prec, dir)
    }

    /// Directed square root of a nonnegative value.
    pub fn sqrt(&self, prec: u32, dir: Round) -> Dyadic {
        assert!(!self.is_negative(), "sqrt of negative dyadic");
        if self.is_zero() {
            return Dyadic::zero();
        }
        let want = 2 * prec as i64 + 4;
        let mut k = (want - self.mant.bits() as i64).max(0);
        if (self.exp - k).rem_euclid(2) != 0 {
            k += 1;
        }
        let m = &self.mant << k as usize;
        let mut s = m.sqrt();
        if dir == Round::Up && &s * &s != m {
            s += 1;
        }
        Dyadic::new(s, (self.exp - k) / 2).round(prec, dir)
    }

    pub fn to_rational(&self) -> BigRational {
        if self.exp >= 0 {
            BigRational::from_integer(&self.mant << self.exp as usize)
        } else {
            BigRational::new(self.mant.clone(), BigInt::one() << (-self.exp) as usize)
        }
    }

    pub fn floor_int(&self) -> BigInt {
        if self.exp >= 0 {
            &self.mant << self.exp as usize
        } else {
            &self.mant >> (-self.exp) as usize
        }
    }

    pub fn ceil_int(&self) -> BigInt {
        -self.neg().floor_int()
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.mant.bits() as i64;
        let shift = (bits - 60).max(0);
        let top = (&self.mant >> shift as usize).to_f64().unwrap_or(0.0);
        let e = self.exp + shift;
        if e > 2000 {
            return top.signum() * f64::INFINITY;
        }
        if e < -2200 {
            return 0.0;
        }
        // scale in steps so 2^e never underflows on its own
        let mut v = top;
        let mut e = e;
        while e < -1000 {
            v *= 2f64.powi(-1000);
            e += 1000;
        }
        while e > 1000 {
            v *= 2f64.powi(1000);
            e -= 1000;
        }
        v * 2f64.powi(e as i32)
    }

    /// Hex-mantissa text form such as `-0x1bp-3`; exact and round-trippable.
    pub fn to_hex(&self) -> String {
        let sign = if self.is_negative() { "-" } else { "" };
        format!("{}0x{}p{}", sign, self.mant.abs().to_str_radix(16), self.exp)
    }

    pub fn from_hex(s: &str) -> Option<Dyadic> {
        let (neg, rest) = match s.strip_prefix('-') {
            Some(r) => (true, r),
            None => (false, s),
        };
        let rest = rest.strip_prefix("0x")?;
        let (m, e) = rest.split_once('p')?;
        let mant = BigInt::parse_bytes(m.as_bytes(), 16)?;
        let exp: i64 = e.parse().ok()?;
        Some(Dyadic::new(if neg { -mant } else { mant }, exp))
    }
}

fn power_of_two(d: &BigInt) -> Option<u64> {
    let tz = d.trailing_zeros()?;
    if d.bits() == tz + 1 {
        Some(tz)
    } else {
        None
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (sa, sb) = (self.signum(), other.signum());
        if sa != sb {
            return sa.cmp(&sb);
        }
        if sa == 0 {
            return Ordering::Equal;
        }
        // Same sign: compare magnitudes cheaply before aligning.
        let (ma, mb) = (self.magnitude(), other.magnitude());
        if ma != mb {
            let c = ma.cmp(&mb);
            return if sa > 0 { c } else { c.reverse() };
        }
        self.sub(other).signum().cmp(&0)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (~{:e})", self.to_hex(), self.to_f64())
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_f64())
    }
}
