//! Exact arithmetic in the quadratic fields Q(√d), d ∈ {1, 2, 3}.
//!
//! With the invariant form normalised so that long roots have squared length
//! 2 and `B(e_α, e_{-α}) = 1`, the structure constants of B, C and F4 live in
//! Q(√2) and those of G2 in Q(√3). Simply-laced types stay in Q.

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

/// `rat + irr·√radicand`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Surd {
    pub rat: Rational64,
    pub irr: Rational64,
    pub radicand: i64,
}

impl Surd {
    pub fn new(rat: Rational64, irr: Rational64, radicand: i64) -> Self {
        assert!(radicand >= 1, "radicand must be positive");
        if radicand == 1 {
            return Surd { rat: rat + irr, irr: Rational64::zero(), radicand: 1 };
        }
        if irr.is_zero() {
            return Surd { rat, irr, radicand: 1 };
        }
        Surd { rat, irr, radicand }
    }

    pub fn from_rational(r: Rational64) -> Self {
        Surd { rat: r, irr: Rational64::zero(), radicand: 1 }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational64::from_integer(n))
    }

    /// `√(num/den)` for `num/den ∈ {1, 1/2, 1/3, 2, 3, ...}` with a square-free
    /// part of the form handled by this type.
    pub fn sqrt_rational(r: Rational64) -> Option<Self> {
        if r.is_negative() {
            return None;
        }
        if r.is_zero() {
            return Some(Surd::zero());
        }
        // √(p/q) = √(p q) / q; pull out the largest square of p q.
        let pq = r.numer().checked_mul(*r.denom())?;
        let (sq, free) = square_split(pq);
        let coeff = Rational64::new(sq, *r.denom());
        if free == 1 {
            Some(Surd::from_rational(coeff))
        } else {
            Some(Surd::new(Rational64::zero(), coeff, free))
        }
    }

    pub fn is_rational(&self) -> bool {
        self.irr.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        let r = *self.rat.numer() as f64 / *self.rat.denom() as f64;
        if self.irr.is_zero() {
            r
        } else {
            r + (*self.irr.numer() as f64 / *self.irr.denom() as f64) * (self.radicand as f64).sqrt()
        }
    }

    /// Galois conjugate `rat - irr·√d`.
    pub fn conj(&self) -> Self {
        Surd { rat: self.rat, irr: -self.irr, radicand: self.radicand }
    }

    /// Field norm `rat² - d·irr²`.
    pub fn norm(&self) -> Rational64 {
        self.rat * self.rat - Rational64::from_integer(self.radicand) * self.irr * self.irr
    }

    fn common_radicand(a: &Surd, b: &Surd) -> i64 {
        match (a.radicand, b.radicand) {
            (1, d) | (d, 1) => d,
            (d, e) if d == e => d,
            (d, e) => panic!("mixing Q(√{d}) and Q(√{e})"),
        }
    }

    pub fn signum(&self) -> i32 {
        let x = self.to_f64();
        if self.is_zero() {
            0
        } else if x > 0.0 {
            1
        } else {
            -1
        }
    }
}

fn square_split(n: i64) -> (i64, i64) {
    let mut sq = 1i64;
    let mut free = 1i64;
    let mut m = n;
    let mut p = 2i64;
    while p * p <= m {
        let mut e = 0;
        while m % p == 0 {
            m /= p;
            e += 1;
        }
        for _ in 0..e / 2 {
            sq *= p;
        }
        if e % 2 == 1 {
            free *= p;
        }
        p += 1;
    }
    free *= m;
    (sq, free)
}

impl Zero for Surd {
    fn zero() -> Self {
        Surd::from_int(0)
    }
    fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.irr.is_zero()
    }
}

impl One for Surd {
    fn one() -> Self {
        Surd::from_int(1)
    }
}

impl Add for Surd {
    type Output = Surd;
    fn add(self, o: Surd) -> Surd {
        let d = Surd::common_radicand(&self, &o);
        Surd::new(self.rat + o.rat, self.irr + o.irr, d)
    }
}

impl Sub for Surd {
    type Output = Surd;
    fn sub(self, o: Surd) -> Surd {
        self + (-o)
    }
}

impl Neg for Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        Surd { rat: -self.rat, irr: -self.irr, radicand: self.radicand }
    }
}

impl Mul for Surd {
    type Output = Surd;
    fn mul(self, o: Surd) -> Surd {
        let d = Surd::common_radicand(&self, &o);
        let dr = Rational64::from_integer(d);
        Surd::new(
            self.rat * o.rat + dr * self.irr * o.irr,
            self.rat * o.irr + self.irr * o.rat,
            d,
        )
    }
}

impl Div for Surd {
    type Output = Surd;
    fn div(self, o: Surd) -> Surd {
        assert!(!o.is_zero(), "division by zero");
        let n = o.norm();
        let num = self * o.conj();
        Surd::new(num.rat / n, num.irr / n, num.radicand.max(o.radicand))
    }
}

impl AddAssign for Surd {
    fn add_assign(&mut self, o: Surd) {
        *self = *self + o;
    }
}

impl SubAssign for Surd {
    fn sub_assign(&mut self, o: Surd) {
        *self = *self - o;
    }
}

impl From<i64> for Surd {
    fn from(n: i64) -> Self {
        Surd::from_int(n)
    }
}

impl From<Rational64> for Surd {
    fn from(r: Rational64) -> Self {
        Surd::from_rational(r)
    }
}

impl fmt::Debug for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.irr.is_zero() {
            write!(f, "{}", self.rat)
        } else if self.rat.is_zero() {
            write!(f, "{}*sqrt({})", self.irr, self.radicand)
        } else {
            write!(f, "{}+{}*sqrt({})", self.rat, self.irr, self.radicand)
        }
    }
}
