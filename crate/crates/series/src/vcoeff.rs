//! Exact rational functions of `v` in a canonical reduced form.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::poly::{dense, LPoly};
use crate::SeriesError;

/// `num / den` with `num ∈ Z[v, v⁻¹]`, `den ∈ Z[v]`, `den(0) > 0`, `v ∤ den`,
/// `gcd(num, den) = 1` over `Q[v]` and the combined integer content equal to 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VCoeff {
    num: LPoly,
    den: LPoly,
}

impl VCoeff {
    pub fn zero() -> Self {
        VCoeff { num: LPoly::zero(), den: LPoly::one() }
    }

    pub fn one() -> Self {
        VCoeff { num: LPoly::one(), den: LPoly::one() }
    }

    pub fn int(k: i64) -> Self {
        Self::poly(LPoly::monomial(k, 0))
    }

    /// `k·v^d`.
    pub fn mono(k: i64, d: i32) -> Self {
        Self::poly(LPoly::monomial(k, d))
    }

    /// A Laurent polynomial, already canonical.
    pub fn poly(p: LPoly) -> Self {
        VCoeff { num: p, den: LPoly::one() }
    }

    pub fn ratio(num: LPoly, den: LPoly) -> Result<Self, SeriesError> {
        if den.is_zero() {
            return Err(SeriesError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    pub fn num(&self) -> &LPoly {
        &self.num
    }

    pub fn den(&self) -> &LPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Lies in `Z[v, v⁻¹]`.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_laurent(&self) -> Option<&LPoly> {
        if self.is_laurent() {
            Some(&self.num)
        } else {
            None
        }
    }

    /// `v`-adic valuation (`den(0) ≠ 0`, so this is the valuation of the numerator).
    pub fn valuation(&self) -> Option<i32> {
        self.num.valuation()
    }

    fn reduce(num: LPoly, den: LPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (dval, dcoef) = den.dense();
        let mut num = num.shift(-dval);
        let (nval, ncoef) = num.dense();
        let mut d = dcoef;
        let mut n = ncoef;
        if d.len() > 1 {
            let g = dense::gcd(&n, &d);
            if g.len() > 1 {
                n = dense::div_exact(&n, &g).expect("gcd divides numerator");
                d = dense::div_exact(&d, &g).expect("gcd divides denominator");
            }
        }
        let c = dense::content(&n).gcd(&dense::content(&d));
        let mut sign = BigInt::one();
        if d[0].is_negative() {
            sign = -sign;
        }
        let f = &c * &sign;
        if !f.is_one() {
            n = n.iter().map(|x| x / &f).collect();
            d = d.iter().map(|x| x / &f).collect();
        }
        num = LPoly::from_big(nval, n);
        VCoeff { num, den: LPoly::from_big(0, d) }
    }

    pub fn inv(&self) -> Result<Self, SeriesError> {
        if self.is_zero() {
            return Err(SeriesError::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self, SeriesError> {
        Ok(self * &other.inv()?)
    }

    /// Drop numerator terms above `max_deg` (Laurent coefficients only; others stay exact).
    pub fn truncate_v(&self, max_deg: i32) -> Self {
        if self.is_laurent() {
            Self::poly(self.num.truncate_above(max_deg))
        } else {
            self.clone()
        }
    }

    /// Power-series expansion modulo `v^{prec+1}`; needs a denominator with constant term `±1`.
    pub fn expand_v(&self, prec: i32) -> Result<LPoly, SeriesError> {
        if self.is_laurent() {
            return Ok(self.num.truncate_above(prec));
        }
        let (_, d) = self.den.dense();
        let d0 = d[0].clone();
        if !d0.abs().is_one() {
            return Err(SeriesError::NotUnit);
        }
        let (nval, n) = self.num.dense();
        let len = prec - nval + 1;
        if len <= 0 {
            return Ok(LPoly::zero());
        }
        let len = len as usize;
        let mut rem: Vec<BigInt> = (0..len).map(|i| n.get(i).cloned().unwrap_or_else(BigInt::zero)).collect();
        let mut out = Vec::with_capacity(len);
        for i in 0..len {
            let c = &rem[i] * &d0;
            for (j, dj) in d.iter().enumerate().skip(1) {
                if i + j < len {
                    rem[i + j] -= &c * dj;
                }
            }
            out.push(c);
        }
        Ok(LPoly::from_big(nval, out))
    }

    /// Equality modulo `v^{prec+1}` over `Q[[v]]`.
    pub fn eq_mod(&self, other: &Self, prec: i32) -> bool {
        let cross = &(&self.num * &other.den) - &(&other.num * &self.den);
        match cross.valuation() {
            None => true,
            Some(k) => k > prec,
        }
    }

    /// Substitute `v² = t`; requires a Laurent polynomial in `v²`.
    pub fn eval_v2(&self, t: &BigRational) -> Option<BigRational> {
        let n = self.num.eval_v2(t)?;
        let d = self.den.eval_v2(t)?;
        if d.is_zero() {
            None
        } else {
            Some(n / d)
        }
    }

    fn add_sub(&self, other: &Self, neg: bool) -> Self {
        let op = |a: &LPoly, b: &LPoly| if neg { a - b } else { a + b };
        if self.den == other.den {
            if self.is_laurent() {
                return Self::poly(op(&self.num, &other.num));
            }
            return Self::reduce(op(&self.num, &other.num), self.den.clone());
        }
        let n = op(&(&self.num * &other.den), &(&other.num * &self.den));
        Self::reduce(n, &self.den * &other.den)
    }
}

impl Add for &VCoeff {
    type Output = VCoeff;
    fn add(self, rhs: &VCoeff) -> VCoeff {
        self.add_sub(rhs, false)
    }
}

impl Sub for &VCoeff {
    type Output = VCoeff;
    fn sub(self, rhs: &VCoeff) -> VCoeff {
        self.add_sub(rhs, true)
    }
}

impl Mul for &VCoeff {
    type Output = VCoeff;
    fn mul(self, rhs: &VCoeff) -> VCoeff {
        if self.is_laurent() && rhs.is_laurent() {
            return VCoeff::poly(&self.num * &rhs.num);
        }
        VCoeff::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &VCoeff {
    type Output = VCoeff;
    fn neg(self) -> VCoeff {
        VCoeff { num: -&self.num, den: self.den.clone() }
    }
}

impl From<LPoly> for VCoeff {
    fn from(p: LPoly) -> Self {
        VCoeff::poly(p)
    }
}

impl fmt::Display for VCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_laurent() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for VCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(t: &[(i32, i64)]) -> LPoly {
        LPoly::from_terms(t)
    }

    #[test]
    fn reduction_is_canonical() {
        // (1 - v^4)/(1 - v^2) = 1 + v^2
        let a = VCoeff::ratio(p(&[(0, 1), (4, -1)]), p(&[(0, 1), (2, -1)])).unwrap();
        assert_eq!(a, VCoeff::poly(p(&[(0, 1), (2, 1)])));
        // 2v/(4 - 2v^3) = v/(2 - v^3)
        let b = VCoeff::ratio(p(&[(1, 2)]), p(&[(0, 4), (3, -2)])).unwrap();
        let c = VCoeff::ratio(p(&[(1, -1)]), p(&[(0, -2), (3, 1)])).unwrap();
        assert_eq!(b, c);
        assert_eq!(b.den(), &p(&[(0, 2), (3, -1)]));
        // v^2 in the denominator moves to the numerator
        let d = VCoeff::ratio(p(&[(0, 1)]), p(&[(2, 1)])).unwrap();
        assert_eq!(d, VCoeff::mono(1, -2));
        assert!(d.is_laurent());
    }

    #[test]
    fn field_operations() {
        let x = VCoeff::ratio(p(&[(0, 1)]), p(&[(0, 1), (2, -1)])).unwrap();
        let y = VCoeff::ratio(p(&[(2, 1)]), p(&[(0, 1), (2, -1)])).unwrap();
        assert_eq!(&x - &y, VCoeff::one());
        assert_eq!(&x * &x.inv().unwrap(), VCoeff::one());
        assert!(VCoeff::zero().inv().is_err());
        let z = &x + &VCoeff::int(-1);
        assert_eq!(z, y);
    }

    #[test]
    fn eq_mod_precision() {
        // 1/(1 - v^2) ≡ 1 + v^2 + v^4 mod v^5
        let x = VCoeff::ratio(p(&[(0, 1)]), p(&[(0, 1), (2, -1)])).unwrap();
        let y = VCoeff::poly(p(&[(0, 1), (2, 1), (4, 1)]));
        assert!(x.eq_mod(&y, 5));
        assert!(!x.eq_mod(&y, 6));
    }
}
