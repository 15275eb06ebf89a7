//! Laurent polynomials in `v` with integer coefficients.
//!
//! Coefficients live in `i64` until an operation overflows, then move to `BigInt`.
//! The representation is canonical (small whenever everything fits), so derived
//! equality and hashing are semantic.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
enum Coeffs {
    Small(Vec<i64>),
    Big(Vec<BigInt>),
}

/// `Σ c_k v^k`, stored densely from the valuation upward.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LPoly {
    val: i32,
    c: Coeffs,
}

fn to_big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

impl LPoly {
    pub fn zero() -> Self {
        LPoly { val: 0, c: Coeffs::Small(Vec::new()) }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c·v^deg`.
    pub fn monomial(c: i64, deg: i32) -> Self {
        Self::from_coeffs(deg, vec![c])
    }

    pub fn from_coeffs(val: i32, coeffs: Vec<i64>) -> Self {
        let mut p = LPoly { val, c: Coeffs::Small(coeffs) };
        p.normalize();
        p
    }

    pub fn from_big(val: i32, coeffs: Vec<BigInt>) -> Self {
        let mut p = LPoly { val, c: Coeffs::Big(coeffs) };
        p.normalize();
        p
    }

    /// Builds from `(degree, coefficient)` pairs; repeated degrees are summed.
    pub fn from_terms(terms: &[(i32, i64)]) -> Self {
        terms.iter().fold(Self::zero(), |acc, &(d, c)| &acc + &Self::monomial(c, d))
    }

    fn len(&self) -> usize {
        match &self.c {
            Coeffs::Small(v) => v.len(),
            Coeffs::Big(v) => v.len(),
        }
    }

    fn normalize(&mut self) {
        match &mut self.c {
            Coeffs::Small(v) => {
                while v.last() == Some(&0) {
                    v.pop();
                }
                let lead = v.iter().take_while(|&&x| x == 0).count();
                if lead > 0 {
                    v.drain(..lead);
                    self.val += lead as i32;
                }
                if v.is_empty() {
                    self.val = 0;
                }
            }
            Coeffs::Big(v) => {
                while v.last().is_some_and(|x| x.is_zero()) {
                    v.pop();
                }
                let lead = v.iter().take_while(|x| x.is_zero()).count();
                if lead > 0 {
                    v.drain(..lead);
                    self.val += lead as i32;
                }
                if v.is_empty() {
                    self.val = 0;
                }
                if let Some(small) = v.iter().map(|x| x.to_i64()).collect::<Option<Vec<i64>>>() {
                    self.c = Coeffs::Small(small);
                }
            }
        }
    }

    fn big(&self) -> Vec<BigInt> {
        match &self.c {
            Coeffs::Small(v) => to_big(v),
            Coeffs::Big(v) => v.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.len() == 0
    }

    pub fn is_one(&self) -> bool {
        self.val == 0 && matches!(&self.c, Coeffs::Small(v) if v.as_slice() == [1])
    }

    /// Lowest degree with a nonzero coefficient.
    pub fn valuation(&self) -> Option<i32> {
        if self.is_zero() {
            None
        } else {
            Some(self.val)
        }
    }

    pub fn degree(&self) -> Option<i32> {
        if self.is_zero() {
            None
        } else {
            Some(self.val + self.len() as i32 - 1)
        }
    }

    pub fn coeff(&self, deg: i32) -> BigInt {
        let i = deg - self.val;
        if i < 0 || i as usize >= self.len() {
            return BigInt::zero();
        }
        match &self.c {
            Coeffs::Small(v) => BigInt::from(v[i as usize]),
            Coeffs::Big(v) => v[i as usize].clone(),
        }
    }

    /// Nonzero terms in ascending degree.
    pub fn terms(&self) -> Vec<(i32, BigInt)> {
        self.big()
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.val + i as i32, c))
            .collect()
    }

    /// Multiply by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut p = self.clone();
        p.val += k;
        p
    }

    pub fn scale(&self, k: i64) -> Self {
        self * &LPoly::monomial(k, 0)
    }

    /// Drop every term of degree above `max_deg`.
    pub fn truncate_above(&self, max_deg: i32) -> Self {
        match self.degree() {
            Some(d) if d > max_deg => {}
            _ => return self.clone(),
        }
        let keep = (max_deg - self.val + 1).max(0) as usize;
        let mut p = match &self.c {
            Coeffs::Small(v) => LPoly { val: self.val, c: Coeffs::Small(v[..keep].to_vec()) },
            Coeffs::Big(v) => LPoly { val: self.val, c: Coeffs::Big(v[..keep].to_vec()) },
        };
        p.normalize();
        p
    }

    /// True when every term has even degree (a Laurent polynomial in `v²`).
    pub fn is_even(&self) -> bool {
        self.terms().iter().all(|(d, _)| d % 2 == 0)
    }

    /// Substitute `v² = t` (requires [`LPoly::is_even`]).
    pub fn eval_v2(&self, t: &BigRational) -> Option<BigRational> {
        if !self.is_even() {
            return None;
        }
        let mut acc = BigRational::zero();
        for (d, c) in self.terms() {
            let e = d / 2;
            let p = if e >= 0 { pow(t, e as u32) } else { pow(t, (-e) as u32).recip() };
            acc += BigRational::from_integer(c) * p;
        }
        Some(acc)
    }

    /// Dense coefficients starting at degree `val` (for callers needing plain `Z[v]`).
    pub(crate) fn dense(&self) -> (i32, Vec<BigInt>) {
        (self.val, self.big())
    }

    /// Greatest common divisor of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.big().iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn div_exact_int(&self, k: &BigInt) -> Self {
        LPoly::from_big(self.val, self.big().iter().map(|c| c / k).collect())
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { -other } else { other.clone() };
        }
        let lo = self.val.min(other.val);
        let hi = self.degree().unwrap().max(other.degree().unwrap());
        let n = (hi - lo + 1) as usize;
        if let (Coeffs::Small(a), Coeffs::Small(b)) = (&self.c, &other.c) {
            let mut out = vec![0i64; n];
            let oa = (self.val - lo) as usize;
            out[oa..oa + a.len()].copy_from_slice(a);
            let ob = (other.val - lo) as usize;
            let mut ok = true;
            for (i, &x) in b.iter().enumerate() {
                let r = if negate { out[ob + i].checked_sub(x) } else { out[ob + i].checked_add(x) };
                match r {
                    Some(r) => out[ob + i] = r,
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                return LPoly::from_coeffs(lo, out);
            }
        }
        let mut out = vec![BigInt::zero(); n];
        for (i, x) in self.big().into_iter().enumerate() {
            out[(self.val - lo) as usize + i] += x;
        }
        for (i, x) in other.big().into_iter().enumerate() {
            let j = (other.val - lo) as usize + i;
            if negate {
                out[j] -= x;
            } else {
                out[j] += x;
            }
        }
        LPoly::from_big(lo, out)
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return LPoly::zero();
        }
        let val = self.val + other.val;
        if let (Coeffs::Small(a), Coeffs::Small(b)) = (&self.c, &other.c) {
            if a.len() == 1 && a[0] == 1 {
                return other.shift(self.val);
            }
            if b.len() == 1 && b[0] == 1 {
                return self.shift(other.val);
            }
            let mut acc = vec![0i128; a.len() + b.len() - 1];
            let mut ok = true;
            'outer: for (i, &x) in a.iter().enumerate() {
                for (j, &y) in b.iter().enumerate() {
                    match acc[i + j].checked_add(x as i128 * y as i128) {
                        Some(s) => acc[i + j] = s,
                        None => {
                            ok = false;
                            break 'outer;
                        }
                    }
                }
            }
            if ok {
                if let Some(out) = acc.iter().map(|&x| i64::try_from(x).ok()).collect::<Option<Vec<i64>>>() {
                    return LPoly::from_coeffs(val, out);
                }
            }
        }
        let (a, b) = (self.big(), other.big());
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        LPoly::from_big(val, out)
    }
}

fn pow(t: &BigRational, e: u32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..e {
        acc *= t;
    }
    acc
}

impl Add for &LPoly {
    type Output = LPoly;
    fn add(self, rhs: &LPoly) -> LPoly {
        self.add_impl(rhs, false)
    }
}

impl Sub for &LPoly {
    type Output = LPoly;
    fn sub(self, rhs: &LPoly) -> LPoly {
        self.add_impl(rhs, true)
    }
}

impl Mul for &LPoly {
    type Output = LPoly;
    fn mul(self, rhs: &LPoly) -> LPoly {
        self.mul_impl(rhs)
    }
}

impl Neg for &LPoly {
    type Output = LPoly;
    fn neg(self) -> LPoly {
        match &self.c {
            Coeffs::Small(v) if v.iter().all(|&x| x != i64::MIN) => {
                LPoly { val: self.val, c: Coeffs::Small(v.iter().map(|x| -x).collect()) }
            }
            _ => LPoly::from_big(self.val, self.big().iter().map(|x| -x).collect()),
        }
    }
}

impl Neg for LPoly {
    type Output = LPoly;
    fn neg(self) -> LPoly {
        -&self
    }
}

impl fmt::Display for LPoly {
    /// Ascending degree, e.g. `1 - v^2 + 3v^4`, `-v^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (d, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let unit = a.is_one();
            match d {
                0 => write!(f, "{a}")?,
                1 if unit => write!(f, "v")?,
                1 => write!(f, "{a}v")?,
                _ if unit => write!(f, "v^{d}")?,
                _ => write!(f, "{a}v^{d}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Dense `Z[v]` helpers used for gcd reduction of rational coefficients.
pub(crate) mod dense {
    use super::*;

    pub fn trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
        while p.last().is_some_and(|x| x.is_zero()) {
            p.pop();
        }
        p
    }

    pub fn content(p: &[BigInt]) -> BigInt {
        p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn primitive(p: &[BigInt]) -> Vec<BigInt> {
        let c = content(p);
        if c.is_zero() || c.is_one() {
            return p.to_vec();
        }
        p.iter().map(|x| x / &c).collect()
    }

    /// Pseudo-remainder of `a` by `b` (`b` nonzero).
    pub fn prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let mut r = trim(a.to_vec());
        let db = b.len() - 1;
        let lb = &b[db];
        while r.len() > db && !r.is_empty() {
            let dr = r.len() - 1;
            let lr = r[dr].clone();
            for x in r.iter_mut() {
                *x *= lb;
            }
            for (i, y) in b.iter().enumerate() {
                r[dr - db + i] -= &lr * y;
            }
            r = trim(r);
        }
        r
    }

    /// Primitive gcd over `Z[v]` (content discarded), positive leading coefficient.
    pub fn gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let mut x = primitive(&trim(a.to_vec()));
        let mut y = primitive(&trim(b.to_vec()));
        if x.len() < y.len() {
            std::mem::swap(&mut x, &mut y);
        }
        while !y.is_empty() {
            let r = prem(&x, &y);
            x = y;
            y = primitive(&r);
        }
        if x.last().is_some_and(|l| l.is_negative()) {
            x = x.iter().map(|c| -c).collect();
        }
        x
    }

    /// Exact quotient `a / b` in `Z[v]`; `None` if `b` does not divide `a` over `Z`.
    pub fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
        let mut r = trim(a.to_vec());
        let b = trim(b.to_vec());
        if r.is_empty() {
            return Some(Vec::new());
        }
        if r.len() < b.len() {
            return None;
        }
        let db = b.len() - 1;
        let mut q = vec![BigInt::zero(); r.len() - db];
        while r.len() > db && !r.is_empty() {
            let dr = r.len() - 1;
            let (qq, rem) = r[dr].div_rem(&b[db]);
            if !rem.is_zero() {
                return None;
            }
            for (i, y) in b.iter().enumerate() {
                r[dr - db + i] -= &qq * y;
            }
            q[dr - db] = qq;
            r = trim(r);
        }
        if r.is_empty() {
            Some(q)
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = LPoly::from_terms(&[(0, 1), (2, -1)]);
        let b = LPoly::from_terms(&[(0, 1), (2, 1)]);
        assert_eq!(&a * &b, LPoly::from_terms(&[(0, 1), (4, -1)]));
        assert_eq!(&(&a + &b) - &LPoly::monomial(2, 0), LPoly::zero());
        assert_eq!(format!("{}", &a * &b), "1 - v^4");
        assert_eq!(format!("{}", LPoly::from_terms(&[(-1, -1), (1, 3)])), "-v^-1 + 3v");
        assert_eq!(LPoly::monomial(5, 3).valuation(), Some(3));
        assert!(LPoly::zero().valuation().is_none());
    }

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = LPoly::monomial(i64::MAX, 0);
        let sq = &big * &big;
        assert_eq!(sq.coeff(0), BigInt::from(i64::MAX) * BigInt::from(i64::MAX));
        let sum = &big + &big;
        assert_eq!(sum.coeff(0), BigInt::from(i64::MAX) * 2);
        let back = &sum - &big;
        assert_eq!(back, big);
        assert!(matches!(back.c, Coeffs::Small(_)));
        let neg = -&LPoly::monomial(i64::MIN, 1);
        assert_eq!(neg.coeff(1), -BigInt::from(i64::MIN));
    }

    #[test]
    fn truncate_and_eval() {
        let p = LPoly::from_terms(&[(-2, 1), (0, 2), (2, 3), (4, 4)]);
        assert_eq!(p.truncate_above(2), LPoly::from_terms(&[(-2, 1), (0, 2), (2, 3)]));
        assert_eq!(p.truncate_above(-3), LPoly::zero());
        let t = BigRational::new(BigInt::from(1), BigInt::from(2));
        // 2 + 2 + 3/2 + 1
        assert_eq!(p.eval_v2(&t), Some(BigRational::new(BigInt::from(13), BigInt::from(2))));
        assert_eq!(LPoly::monomial(1, 1).eval_v2(&t), None);
    }

    #[test]
    fn dense_gcd() {
        let b = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        // (1 - v)(1 + v) and (1 - v)(2 + v)
        let g = dense::gcd(&b(&[1, 0, -1]), &b(&[2, -1, -1]));
        assert_eq!(g, b(&[-1, 1]));
        assert_eq!(dense::div_exact(&b(&[1, 0, -1]), &g), Some(b(&[-1, -1])));
        assert_eq!(dense::div_exact(&b(&[1, 0, 1]), &g), None);
    }
}
