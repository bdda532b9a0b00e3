//! Rational functions and their formal expansions at infinity.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::numeric::{Polynomial, Rational};

/// A validated real rational function `R = h / g`.
///
/// Both factors have positive leading coefficients, they are coprime, and
/// the order `n = deg h + deg g` is positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    h: Polynomial,
    g: Polynomial,
}

impl RationalFunction {
    /// Validates `(h, g)`, normalizing the sign of each factor separately.
    ///
    /// With `auto_reduce` a common factor is divided out instead of rejected.
    pub fn new(h: Polynomial, g: Polynomial, auto_reduce: bool) -> Result<Self> {
        let (mut h, _) = h.normalize_sign()?;
        let (mut g, _) = g.normalize_sign()?;
        let common = h.gcd(&g)?;
        if common.degree() > 0 {
            if !auto_reduce {
                return Err(Error::NotCoprime(common.degree()));
            }
            h = h.div_rem(&common).0;
            g = g.div_rem(&common).0;
        }
        if h.degree() + g.degree() == 0 {
            return Err(Error::OrderZero);
        }
        Ok(RationalFunction { h, g })
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.h
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.g
    }

    /// `n = r + m`.
    pub fn order(&self) -> usize {
        self.h.degree() + self.g.degree()
    }
}

/// Prefix `t_0, ..., t_K` of `R(z) = t_0 z^(r-m) + t_1 z^(r-m-1) + ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPrefix {
    pub leading_exponent: i64,
    pub coeffs: Vec<Rational>,
}

/// Expansion `Φ(u) = s_{-1} + s_0/u + s_1/u^2 + ...`, with `s_{-1}` kept apart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SSeriesPrefix {
    pub s_minus1: Rational,
    pub coeffs: Vec<Rational>,
}

/// Expands `R` at infinity through `t_K` using `b_k = Σ c_{k-i} t_i`.
pub fn laurent_expand(r: &RationalFunction, k: usize) -> LaurentPrefix {
    let (h, g) = (&r.h, &r.g);
    let c0_inv = g.leading().recip();
    let mut t: Vec<Rational> = Vec::with_capacity(k + 1);
    for idx in 0..=k {
        let mut acc = h.coeff(idx);
        let lo = idx.saturating_sub(g.degree());
        for (i, ti) in t.iter().enumerate().skip(lo) {
            let c = g.coeff(idx - i);
            if !c.is_zero() {
                acc -= c * ti;
            }
        }
        t.push(acc * &c0_inv);
    }
    LaurentPrefix {
        leading_exponent: h.degree() as i64 - g.degree() as i64,
        coeffs: t,
    }
}

/// Quotient of two formal power series in `w`, first `len` terms.
/// `den[0]` must be nonzero.
pub(crate) fn series_divide(num: &[Rational], den: &[Rational], len: usize) -> Vec<Rational> {
    let d0_inv = den[0].recip();
    let mut q: Vec<Rational> = Vec::with_capacity(len);
    for i in 0..len {
        let mut acc = num.get(i).cloned().unwrap_or_else(Rational::zero);
        for (k, qk) in q.iter().enumerate() {
            if let Some(d) = den.get(i - k) {
                if !d.is_zero() {
                    acc -= d * qk;
                }
            }
        }
        q.push(acc * &d0_inv);
    }
    q
}

/// Reads `Φ = w^shift * N(w) / D(w)` (with `w = 1/u`) into `s_{-1}, s_0..s_K`.
fn s_series_from_ratio(num: &[Rational], den: &[Rational], shift: usize, k: usize) -> SSeriesPrefix {
    // coefficient of w^i, i = 0..=k+1
    let q = series_divide(num, den, k + 2);
    let coeff = |i: usize| {
        if i < shift {
            Rational::zero()
        } else {
            q[i - shift].clone()
        }
    };
    SSeriesPrefix {
        s_minus1: coeff(0),
        coeffs: (1..=k + 1).map(coeff).collect(),
    }
}

/// Expansion of the function `Φ = p_1 / p_0` associated with `p`.
pub fn associated_s_series(p: &Polynomial, k: usize) -> Result<SSeriesPrefix> {
    let (p0, p1) = p.even_odd_split();
    if p1.is_zero() {
        return Ok(SSeriesPrefix {
            s_minus1: Rational::zero(),
            coeffs: vec![Rational::zero(); k + 1],
        });
    }
    if p0.is_zero() || p1.degree() > p0.degree() {
        return Err(Error::PolynomialPart);
    }
    let shift = p0.degree() - p1.degree();
    Ok(s_series_from_ratio(p1.coeffs(), p0.coeffs(), shift, k))
}

/// Expansion of `Φ = R_1 / R_0` built directly from the t-series of `R`.
pub fn phi_series_of_rational(r: &RationalFunction, k: usize) -> Result<SSeriesPrefix> {
    // s_K needs the w^(K+1) coefficient, i.e. K+2 terms of each split series
    let t = laurent_expand(r, 2 * k + 3).coeffs;
    let evens: Vec<Rational> = t.iter().step_by(2).cloned().collect();
    let odds: Vec<Rational> = t.iter().skip(1).step_by(2).cloned().collect();
    if r.order() % 2 == 0 {
        // (t_1 w + t_3 w^2 + ...) / (t_0 + t_2 w + ...)
        Ok(s_series_from_ratio(&odds, &evens, 1, k))
    } else {
        if odds[0].is_zero() {
            return Err(Error::PhiUndefined);
        }
        Ok(s_series_from_ratio(&evens, &odds, 0, k))
    }
}

/// `t_0 = b_0 / c_0`, positive for every validated function.
pub fn leading_t(r: &RationalFunction) -> Rational {
    let t0 = r.h.leading() / r.g.leading();
    debug_assert!(t0.is_positive());
    t0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{rat, ratio};
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    fn rf(h: &[i64], g: &[i64]) -> RationalFunction {
        RationalFunction::new(p(h), p(g), false).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn construction() {
        let r = rf(&[1, 1, 1], &[1, -1, 1]);
        assert_eq!(r.order(), 4);

        let err = RationalFunction::new(p(&[1, 0, -1]), p(&[1, -1]), false);
        assert_eq!(err, Err(Error::NotCoprime(1)));
        let reduced = RationalFunction::new(p(&[1, 0, -1]), p(&[1, -1]), true).unwrap();
        assert_eq!(reduced.numerator(), &p(&[1, 1]));
        assert_eq!(reduced.denominator(), &p(&[1]));

        let r = rf(&[-1, -1], &[1]);
        assert_eq!(r.numerator(), &p(&[1, 1]));
        assert_eq!(r.order(), 1);

        let r = rf(&[1], &[-1, 1]);
        assert_eq!(r.denominator(), &p(&[1, -1]));

        assert_eq!(RationalFunction::new(p(&[3]), p(&[-2]), false), Err(Error::OrderZero));
        assert_eq!(
            RationalFunction::new(Polynomial::zero(), p(&[1, 1]), false),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn auto_reduce_can_leave_order_zero() {
        let r = RationalFunction::new(p(&[2, 2]), p(&[1, 1]), true);
        assert_eq!(r, Err(Error::OrderZero));
    }

    #[test]
    fn laurent_examples() {
        let t = laurent_expand(&rf(&[1, 1, 1], &[1, -1, 1]), 6);
        assert_eq!(t.leading_exponent, 0);
        assert_eq!(t.coeffs, ints(&[1, 2, 2, 0, -2, -2, 0]));

        let t = laurent_expand(&rf(&[1, 1], &[1]), 3);
        assert_eq!(t.leading_exponent, 1);
        assert_eq!(t.coeffs, ints(&[1, 1, 0, 0]));

        let t = laurent_expand(&rf(&[1], &[1, -1]), 3);
        assert_eq!(t.leading_exponent, -1);
        assert_eq!(t.coeffs, ints(&[1, 1, 1, 1]));
    }

    #[test]
    fn s_series_examples() {
        let s = associated_s_series(&p(&[1, 1, 1]), 2).unwrap();
        assert_eq!(s.s_minus1, rat(0));
        assert_eq!(s.coeffs, ints(&[1, -1, 1]));

        let s = associated_s_series(&p(&[1, 1, 1, 1]), 2).unwrap();
        assert_eq!(s.s_minus1, rat(1));
        assert_eq!(s.coeffs, ints(&[0, 0, 0]));

        let s = associated_s_series(&p(&[1, 0, 1]), 1).unwrap();
        assert_eq!(s.s_minus1, rat(0));
        assert_eq!(s.coeffs, ints(&[0, 0]));

        // odd degree with a_1 = 0: p1 outgrows p0
        assert_eq!(
            associated_s_series(&p(&[1, 0, 1, 1]), 2),
            Err(Error::PolynomialPart)
        );
    }

    #[test]
    fn s_series_multiplies_back() {
        // Φ = 1/(u+1) prefix times (u+1) leaves only the constant 1
        let s = associated_s_series(&p(&[1, 1, 1]), 6).unwrap();
        for k in 1..=6 {
            assert_eq!(&s.coeffs[k] + &s.coeffs[k - 1], rat(0));
        }
    }

    #[test]
    fn phi_of_polynomial_rational() {
        // R = z + 1: Φ = 1, matching the P-path for P = z + 1
        let r = rf(&[1, 1], &[1]);
        let s = phi_series_of_rational(&r, 3).unwrap();
        assert_eq!(s, associated_s_series(&p(&[1, 1]), 3).unwrap());
        assert_eq!(s.s_minus1, rat(1));
        assert_eq!(s.coeffs, ints(&[0, 0, 0, 0]));
    }

    #[test]
    fn phi_matches_auxiliary_path_for_mixed_sign_example() {
        let r = rf(&[1, 1, 1], &[1, -1, 1]);
        let aux = p(&[1, 2, 3, 2, 1]);
        assert_eq!(
            phi_series_of_rational(&r, 8).unwrap(),
            associated_s_series(&aux, 8).unwrap()
        );
    }

    #[test]
    fn phi_of_even_function_vanishes() {
        let r = rf(&[1, 0, 1], &[1]);
        let s = phi_series_of_rational(&r, 4).unwrap();
        assert_eq!(s.s_minus1, rat(0));
        assert!(s.coeffs.iter().all(|x| x.is_zero()));
    }

    #[test]
    fn phi_odd_order_needs_t1() {
        // R = (z^2 + 1)/z = z + 1/z, t = [1, 0, 1, 0, ...]
        let r = rf(&[1, 0, 1], &[1, 0]);
        assert_eq!(phi_series_of_rational(&r, 2), Err(Error::PhiUndefined));
    }

    fn arb_poly(max_deg: usize) -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((-9i64..=9, 1i64..=4), 1..=max_deg + 1)
            .prop_map(|v| Polynomial::new(v.into_iter().map(|(n, d)| ratio(n, d)).collect()))
    }

    fn arb_rf() -> impl Strategy<Value = RationalFunction> {
        (arb_poly(6), arb_poly(6)).prop_filter_map("invalid pair", |(h, g)| {
            RationalFunction::new(h, g, false).ok()
        })
    }

    proptest! {
        #[test]
        fn multiply_back(r in arb_rf()) {
            let n = r.order();
            let k = 2 * n + 4;
            let t = laurent_expand(&r, k).coeffs;
            let (h, g) = (r.numerator(), r.denominator());
            // coefficient of z^(r - i) in g * t-series equals b_i
            for i in 0..=k {
                let mut acc = Rational::zero();
                for q in 0..=i.min(g.degree()) {
                    acc += g.coeff(q) * &t[i - q];
                }
                prop_assert_eq!(acc, h.coeff(i));
            }
        }

        #[test]
        fn phi_paths_agree(r in arb_rf()) {
            let aux = if r.denominator().degree() % 2 == 0 {
                r.numerator() * &r.denominator().reflect()
            } else {
                -(r.numerator() * &r.denominator().reflect())
            };
            let direct = phi_series_of_rational(&r, 8);
            let via_p = associated_s_series(&aux, 8);
            if let (Ok(a), Ok(b)) = (direct, via_p) {
                prop_assert_eq!(a, b);
            }
        }

        #[test]
        fn scaling_scales_t(r in arb_rf(), lam in 1i64..7, mu in 1i64..7) {
            let (l, m) = (ratio(lam, 1), ratio(mu, 3));
            let scaled = RationalFunction::new(
                r.numerator().scale(&l),
                r.denominator().scale(&m),
                false,
            ).unwrap();
            let base = laurent_expand(&r, 10).coeffs;
            let got = laurent_expand(&scaled, 10).coeffs;
            let factor = &l / &m;
            for (a, b) in base.iter().zip(&got) {
                prop_assert_eq!(a * &factor, b.clone());
            }
        }

        #[test]
        fn t0_positive(r in arb_rf()) {
            let t = laurent_expand(&r, 0);
            prop_assert!(t.coeffs[0].is_positive());
            prop_assert_eq!(&t.coeffs[0], &leading_t(&r));
        }
    }
}
