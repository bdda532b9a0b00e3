//! Exact scalars and dense univariate polynomials.
//!
//! Every quantity in the crate is a [`Rational`]; there is no floating point
//! anywhere in the computation paths. Polynomials store their coefficients in
//! descending powers, so `coeffs()[0]` is the leading coefficient and
//! `coeff(k)` is the coefficient of `z^(n-k)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision fraction, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `["-"] digits ["/" digits]`.
pub fn parse_rational(token: &str) -> Result<Rational> {
    let bad = || Error::Parse(token.to_string());
    let (neg, body) = match token.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, token),
    };
    let digits = |s: &str| -> Result<BigInt> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        s.parse::<BigInt>().map_err(|_| bad())
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (digits(n)?, digits(d)?),
        None => (digits(body)?, BigInt::one()),
    };
    if den.is_zero() {
        return Err(bad());
    }
    let value = Rational::new(num, den);
    Ok(if neg { -value } else { value })
}

/// Exact text form: `p/q`, or `p` when the denominator is one.
pub fn format_rational(x: &Rational) -> String {
    x.to_string()
}

pub fn pow(x: &Rational, e: usize) -> Rational {
    num_traits::pow::pow(x.clone(), e)
}

pub fn neg_one_pow(e: usize) -> Rational {
    if e % 2 == 0 {
        rat(1)
    } else {
        rat(-1)
    }
}

/// Dense real polynomial in one variable, descending powers.
///
/// The zero polynomial is represented by the single coefficient `[0]` and has
/// degree 0; use [`Polynomial::is_zero`] to tell it apart from nonzero
/// constants.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    /// Builds a polynomial from descending coefficients, dropping leading zeros.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        let first = coeffs.iter().position(|c| !c.is_zero());
        match first {
            Some(i) => Polynomial {
                coeffs: coeffs[i..].to_vec(),
            },
            None => Polynomial::zero(),
        }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial {
            coeffs: vec![Rational::zero()],
        }
    }

    pub fn one() -> Self {
        Polynomial::constant(rat(1))
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::new(vec![c])
    }

    /// The monomial `z^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[0] = rat(1);
        Polynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading(&self) -> &Rational {
        &self.coeffs[0]
    }

    /// Coefficient `a_k` of `z^(n-k)`; zero for `k > n`.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficient `a_k` with the convention that negative indices vanish.
    pub fn coeff_signed(&self, k: i64) -> Rational {
        if k < 0 {
            Rational::zero()
        } else {
            self.coeff(k as usize)
        }
    }

    /// Coefficient of `z^power`.
    pub fn coeff_of_power(&self, power: usize) -> Rational {
        if power > self.degree() {
            Rational::zero()
        } else {
            self.coeffs[self.degree() - power].clone()
        }
    }

    /// Horner evaluation.
    pub fn evaluate(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// `p(-z)`.
    pub fn reflect(&self) -> Polynomial {
        let n = self.degree();
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if (n - i) % 2 == 1 { -c } else { c.clone() })
            .collect();
        Polynomial::new(coeffs)
    }

    pub fn scale(&self, k: &Rational) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn monic(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.leading().recip();
        self.scale(&inv)
    }

    /// Returns `(p, false)` or `(-p, true)` so that the leading coefficient is
    /// positive.
    pub fn normalize_sign(&self) -> Result<(Polynomial, bool)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.leading().is_negative() {
            Ok((-self, true))
        } else {
            Ok((self.clone(), false))
        }
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Polynomial) -> (Polynomial, Polynomial) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() || self.degree() < divisor.degree() {
            return (Polynomial::zero(), self.clone());
        }
        let dd = divisor.degree();
        let lead_inv = divisor.leading().recip();
        let mut rem = self.coeffs.clone();
        let qlen = self.degree() - dd + 1;
        let mut quot = Vec::with_capacity(qlen);
        for i in 0..qlen {
            let q = &rem[i] * &lead_inv;
            if !q.is_zero() {
                for (k, d) in divisor.coeffs.iter().enumerate() {
                    rem[i + k] -= &q * d;
                }
            }
            quot.push(q);
        }
        let r = Polynomial::new(rem[qlen..].to_vec());
        (Polynomial::new(quot), r)
    }

    /// Monic greatest common divisor over the rationals.
    pub fn gcd(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::UndefinedGcd);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            // keep the remainder sequence small
            a = b;
            b = r.monic();
        }
        Ok(a.monic())
    }

    /// Splits `p(z) = p0(z^2) + z p1(z^2)`; both parts are returned as
    /// polynomials in `u = z^2`.
    pub fn even_odd_split(&self) -> (Polynomial, Polynomial) {
        let n = self.degree();
        let mut even = Vec::new();
        let mut odd = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if (n - i) % 2 == 0 {
                even.push(c.clone());
            } else {
                odd.push(c.clone());
            }
        }
        let to_poly = |v: Vec<Rational>| {
            if v.is_empty() {
                Polynomial::zero()
            } else {
                Polynomial::new(v)
            }
        };
        (to_poly(even), to_poly(odd))
    }

    /// `p(z^2)`.
    pub fn substitute_square(&self) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = Vec::with_capacity(2 * self.coeffs.len() - 1);
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                coeffs.push(Rational::zero());
            }
            coeffs.push(c.clone());
        }
        Polynomial::new(coeffs)
    }

    /// `z^k * p(z)`.
    pub fn shift(&self, k: usize) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.extend(std::iter::repeat_with(Rational::zero).take(k));
        Polynomial { coeffs }
    }

    pub fn is_constant(&self) -> bool {
        self.degree() == 0
    }

    /// Comma-separated exact coefficients, the same grammar the CLI reads.
    pub fn to_coeff_list(&self) -> String {
        self.coeffs
            .iter()
            .map(format_rational)
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]", self.to_coeff_list())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let n = self.degree();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let power = n - i;
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", sign)?;
            }
            first = false;
            let show_mag = power == 0 || !mag.is_one();
            let mag_str = if mag.is_integer() {
                mag.to_string()
            } else {
                format!("({})", mag)
            };
            match (show_mag, power) {
                (_, 0) => write!(f, "{}", mag_str)?,
                (true, 1) => write!(f, "{}z", mag_str)?,
                (false, 1) => write!(f, "z")?,
                (true, p) => write!(f, "{}z^{}", mag_str, p)?,
                (false, p) => write!(f, "z^{}", p)?,
            }
        }
        Ok(())
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len)
            .rev()
            .map(|power| self.coeff_of_power(power) + rhs.coeff_of_power(power))
            .collect();
        Polynomial::new(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + k] += a * b;
            }
        }
        Polynomial::new(coeffs)
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(p(&[1, 1, 1]).evaluate(&rat(1)), rat(3));
        assert_eq!(p(&[1, 1, 1]).evaluate(&rat(0)), rat(1));
        assert_eq!(p(&[1, 2, 3, 4]).evaluate(&rat(-1)), rat(2));
    }

    #[test]
    fn reflect_examples() {
        assert_eq!(p(&[1, 1]).reflect(), p(&[-1, 1]));
        assert_eq!(p(&[1, -1, 1]).reflect(), p(&[1, 1, 1]));
        assert_eq!(p(&[1, 0, 0, 0]).reflect(), p(&[-1, 0, 0, 0]));
    }

    #[test]
    fn multiply_examples() {
        assert_eq!(&p(&[1, 1]) * &p(&[1, -1]), p(&[1, 0, -1]));
        assert_eq!(&p(&[1, 1, 1]) * &p(&[1, 1, 1]), p(&[1, 2, 3, 2, 1]));
        let q = p(&[3, 0, -2, 5]);
        assert_eq!(&q * &Polynomial::one(), q);
        assert!((&q * &Polynomial::zero()).is_zero());
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(p(&[1, 0, -1]).gcd(&p(&[1, -1])).unwrap(), p(&[1, -1]));
        assert_eq!(p(&[1, 1, 1]).gcd(&p(&[1, -1, 1])).unwrap(), Polynomial::one());
        assert_eq!(p(&[4, 7, 1]).gcd(&Polynomial::one()).unwrap(), Polynomial::one());
        assert_eq!(p(&[2, 4]).gcd(&Polynomial::zero()).unwrap(), p(&[1, 2]));
        assert_eq!(
            Polynomial::zero().gcd(&Polynomial::zero()),
            Err(Error::UndefinedGcd)
        );
    }

    #[test]
    fn even_odd_split_examples() {
        assert_eq!(p(&[1, 2, 3, 4]).even_odd_split(), (p(&[2, 4]), p(&[1, 3])));
        assert_eq!(p(&[1, 1, 1]).even_odd_split(), (p(&[1, 1]), p(&[1])));
        let (even, odd) = p(&[1, 0, 0, 0, 1]).even_odd_split();
        assert_eq!(even, p(&[1, 0, 1]));
        assert!(odd.is_zero());
    }

    #[test]
    fn normalize_sign_examples() {
        assert_eq!(p(&[-1, 1]).normalize_sign().unwrap(), (p(&[1, -1]), true));
        assert_eq!(p(&[1, 1]).normalize_sign().unwrap(), (p(&[1, 1]), false));
        assert_eq!(p(&[-3]).normalize_sign().unwrap(), (p(&[3]), true));
        assert_eq!(
            Polynomial::zero().normalize_sign(),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn zero_is_canonical() {
        let z = Polynomial::new(vec![rat(0), rat(0), rat(0)]);
        assert_eq!(z, Polynomial::zero());
        assert_eq!(z.degree(), 0);
        assert!(z.is_zero());
        assert!(!Polynomial::one().is_zero());
        assert_eq!(Polynomial::new(vec![]), Polynomial::zero());
        assert_eq!(p(&[0, 0, 2, 1]), p(&[2, 1]));
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = p(&[3, -1, 4, 1, -5]);
        let b = p(&[2, 0, 7]);
        let (q, r) = a.div_rem(&b);
        assert!(r.degree() < b.degree() || r.is_zero());
        assert_eq!(&(&q * &b) + &r, a);
    }

    #[test]
    fn parse_grammar() {
        assert_eq!(parse_rational("3").unwrap(), rat(3));
        assert_eq!(parse_rational("-3/6").unwrap(), ratio(-1, 2));
        assert_eq!(parse_rational("0").unwrap(), rat(0));
        for bad in ["", "-", "1/", "/2", "1/0", "+1", "1.5", "a", "1/-2", " 1", "--1"] {
            assert!(parse_rational(bad).is_err(), "{bad:?} should not parse");
        }
        assert_eq!(format_rational(&ratio(6, -4)), "-3/2");
        assert_eq!(format_rational(&rat(7)), "7");
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(p(&[1, -1, 1]).to_string(), "z^2 - z + 1");
        assert_eq!(p(&[-2, 0, 3]).to_string(), "-2z^2 + 3");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-20i64..=20, 1i64..=6).prop_map(|(n, d)| ratio(n, d))
    }

    fn arb_poly(max_deg: usize) -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(arb_rational(), 1..=max_deg + 1).prop_map(Polynomial::new)
    }

    fn arb_monic(max_deg: usize) -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(arb_rational(), 1..=max_deg).prop_map(|mut v| {
            v.insert(0, rat(1));
            Polynomial::new(v)
        })
    }

    proptest! {
        #[test]
        fn recombination(poly in arb_poly(12)) {
            let (even, odd) = poly.even_odd_split();
            let back = &even.substitute_square() + &odd.substitute_square().shift(1);
            prop_assert_eq!(back, poly);
        }

        #[test]
        fn reflect_is_involution(poly in arb_poly(10)) {
            prop_assert_eq!(poly.reflect().reflect(), poly.clone());
            let x = ratio(3, 7);
            prop_assert_eq!(poly.reflect().evaluate(&x), poly.evaluate(&-x));
        }

        #[test]
        fn gcd_recovers_common_factor(
            w in arb_monic(3),
            a in arb_poly(5),
            b in arb_poly(5),
        ) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            prop_assume!(a.gcd(&b).unwrap().degree() == 0);
            let g = (&a * &w).gcd(&(&b * &w)).unwrap();
            prop_assert_eq!(g, w);
        }

        #[test]
        fn multiplication_commutes_and_evaluates(a in arb_poly(6), b in arb_poly(6), x in arb_rational()) {
            let ab = &a * &b;
            prop_assert_eq!(&ab, &(&b * &a));
            prop_assert_eq!(ab.evaluate(&x), a.evaluate(&x) * b.evaluate(&x));
        }
    }
}
