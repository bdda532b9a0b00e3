//! Polynomials and rational functions with root locations known by
//! construction.
//!
//! Roots are drawn as rational data (real roots, and complex pairs given by
//! their real quadratic factor), so the ground truth never depends on any
//! numerical root finding.

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::numeric::{rat, ratio, Polynomial, Rational};

/// Monic real quadratic `z^2 + linear z + constant` with a non-real
/// conjugate pair of roots, whose common real part is `-linear/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticFactor {
    linear: Rational,
    constant: Rational,
}

impl QuadraticFactor {
    pub fn new(linear: Rational, constant: Rational) -> Result<Self> {
        let disc = &linear * &linear - rat(4) * &constant;
        if !disc.is_negative() {
            return Err(Error::RealQuadratic {
                linear: linear.to_string(),
                constant: constant.to_string(),
            });
        }
        Ok(QuadraticFactor { linear, constant })
    }

    /// Factor with roots `alpha ± i beta`.
    pub fn from_pair(alpha: Rational, beta: Rational) -> Result<Self> {
        let constant = &alpha * &alpha + &beta * &beta;
        QuadraticFactor::new(-rat(2) * alpha, constant)
    }

    pub fn linear(&self) -> &Rational {
        &self.linear
    }

    pub fn constant(&self) -> &Rational {
        &self.constant
    }

    pub fn real_part(&self) -> Rational {
        -&self.linear / rat(2)
    }

    /// The same pair mirrored across the imaginary axis.
    pub fn mirrored(&self) -> Self {
        QuadraticFactor {
            linear: -&self.linear,
            constant: self.constant.clone(),
        }
    }

    pub fn polynomial(&self) -> Polynomial {
        Polynomial::new(vec![rat(1), self.linear.clone(), self.constant.clone()])
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSpec {
    pub real_roots: Vec<Rational>,
    pub complex_pairs: Vec<QuadraticFactor>,
    pub leading: Rational,
}

impl RootSpec {
    pub fn degree(&self) -> usize {
        self.real_roots.len() + 2 * self.complex_pairs.len()
    }

    /// Real parts of all root entries (one per conjugate pair).
    pub fn real_parts(&self) -> impl Iterator<Item = Rational> + '_ {
        self.real_roots
            .iter()
            .cloned()
            .chain(self.complex_pairs.iter().map(QuadraticFactor::real_part))
    }

    /// Every root strictly in the open left half-plane.
    pub fn all_left(&self) -> bool {
        self.real_parts().all(|x| x.is_negative())
    }

    /// Every root strictly in the open right half-plane.
    pub fn all_right(&self) -> bool {
        self.real_parts().all(|x| x.is_positive())
    }

    fn entries(&self) -> usize {
        self.real_roots.len() + self.complex_pairs.len()
    }

    /// Mirrors root entry `idx` (real roots first, then pairs).
    fn flip(&mut self, idx: usize) {
        if idx < self.real_roots.len() {
            let r = &mut self.real_roots[idx];
            *r = -r.clone();
        } else {
            let q = &mut self.complex_pairs[idx - self.real_roots.len()];
            *q = q.mirrored();
        }
    }
}

/// `leading * Π (z - r) * Π (z^2 + linear z + constant)`.
pub fn poly_from_roots(roots: &RootSpec) -> Result<Polynomial> {
    if roots.degree() == 0 {
        return Err(Error::EmptyRootSpec);
    }
    let mut p = Polynomial::constant(roots.leading.clone());
    for r in &roots.real_roots {
        p = &p * &Polynomial::new(vec![rat(1), -r.clone()]);
    }
    for q in &roots.complex_pairs {
        p = &p * &q.polynomial();
    }
    Ok(p)
}

/// Like [`poly_from_roots`], but a root set of degree zero yields the constant
/// `leading`.
fn factor_from_roots(roots: &RootSpec) -> Polynomial {
    if roots.degree() == 0 {
        Polynomial::constant(roots.leading.clone())
    } else {
        poly_from_roots(roots).expect("degree checked")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tamper {
    None,
    FlipHRoot,
    FlipGRoot,
}

impl Tamper {
    pub fn name(self) -> &'static str {
        match self {
            Tamper::None => "none",
            Tamper::FlipHRoot => "flip_h_root",
            Tamper::FlipGRoot => "flip_g_root",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "none" => Some(Tamper::None),
            "flip_h_root" => Some(Tamper::FlipHRoot),
            "flip_g_root" => Some(Tamper::FlipGRoot),
            _ => None,
        }
    }
}

/// A generated pair `(h, g)` together with the root data it was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub seed: u64,
    pub deg_h: usize,
    pub deg_g: usize,
    pub tamper: Tamper,
    pub h_roots: RootSpec,
    pub g_roots: RootSpec,
    pub h: Polynomial,
    pub g: Polynomial,
}

/// Positive rational magnitude, at least 1/8.
fn draw_magnitude(rng: &mut ChaCha8Rng) -> Rational {
    let den = [1i64, 2, 4, 8][rng.gen_range(0..4)];
    ratio(rng.gen_range(1..=16), den)
}

fn draw_leading(rng: &mut ChaCha8Rng) -> Rational {
    ratio(rng.gen_range(1..=5), rng.gen_range(1..=3))
}

/// Root data of the given degree with every real part of sign `sign`
/// (`1` right, `-1` left).
fn draw_spec(rng: &mut ChaCha8Rng, degree: usize, sign: i64) -> RootSpec {
    let pairs = rng.gen_range(0..=degree / 2);
    let real_roots = (0..degree - 2 * pairs)
        .map(|_| draw_magnitude(rng) * rat(sign))
        .collect();
    let complex_pairs = (0..pairs)
        .map(|_| {
            let alpha = draw_magnitude(rng) * rat(sign);
            let beta = draw_magnitude(rng);
            QuadraticFactor::from_pair(alpha, beta).expect("beta is nonzero")
        })
        .collect();
    RootSpec {
        real_roots,
        complex_pairs,
        leading: draw_leading(rng),
    }
}

/// Draws `h` with all roots in the open left half-plane and `g` with all
/// roots in the open right half-plane, then applies `tamper`.
///
/// Pairs sharing a root are re-drawn from the same stream, so the declared
/// degrees are always kept.
pub fn gen_instance(seed: u64, deg_h: usize, deg_g: usize, tamper: Tamper) -> Result<Instance> {
    if deg_h + deg_g == 0 {
        return Err(Error::OrderZero);
    }
    let target_degree = match tamper {
        Tamper::None => None,
        Tamper::FlipHRoot => Some(deg_h),
        Tamper::FlipGRoot => Some(deg_g),
    };
    if target_degree == Some(0) {
        return Err(Error::NothingToTamper);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut h_roots = draw_spec(&mut rng, deg_h, -1);
        let mut g_roots = draw_spec(&mut rng, deg_g, 1);
        match tamper {
            Tamper::None => {}
            Tamper::FlipHRoot => {
                let idx = rng.gen_range(0..h_roots.entries());
                h_roots.flip(idx);
            }
            Tamper::FlipGRoot => {
                let idx = rng.gen_range(0..g_roots.entries());
                g_roots.flip(idx);
            }
        }
        let h = factor_from_roots(&h_roots);
        let g = factor_from_roots(&g_roots);
        if h.gcd(&g)?.degree() == 0 {
            return Ok(Instance {
                seed,
                deg_h,
                deg_g,
                tamper,
                h_roots,
                g_roots,
                h,
                g,
            });
        }
    }
}

/// Ground truth from the stored root data: every root of `h` strictly left,
/// every root of `g` strictly right.
pub fn truth_verdict(instance: &Instance) -> bool {
    instance.h_roots.all_left() && instance.g_roots.all_right()
}

/// A generated polynomial and its root data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyInstance {
    pub seed: u64,
    pub roots: RootSpec,
    pub poly: Polynomial,
}

impl PolyInstance {
    pub fn truth(&self) -> bool {
        self.roots.all_left()
    }
}

/// Polynomial of the given degree mixing stable, unstable and boundary
/// cases: about half have every root on the left, a third draw root signs
/// independently, and the rest place one root on the imaginary axis.
pub fn gen_polynomial(seed: u64, degree: usize) -> Result<PolyInstance> {
    if degree == 0 {
        return Err(Error::EmptyRootSpec);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mode = rng.gen_range(0..20);
    let mut roots = draw_spec(&mut rng, degree, -1);
    if (10..17).contains(&mode) {
        for idx in 0..roots.entries() {
            if rng.gen_bool(0.5) {
                roots.flip(idx);
            }
        }
    } else if mode >= 17 {
        let idx = rng.gen_range(0..roots.entries());
        if idx < roots.real_roots.len() {
            roots.real_roots[idx] = Rational::zero();
        } else {
            let k = idx - roots.real_roots.len();
            let q = &roots.complex_pairs[k];
            let beta_sq = q.constant() - q.real_part() * q.real_part();
            roots.complex_pairs[k] =
                QuadraticFactor::new(Rational::zero(), beta_sq).expect("pair stays non-real");
        }
    }
    let poly = poly_from_roots(&roots)?;
    Ok(PolyInstance { seed, roots, poly })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn poly_from_roots_examples() {
        let roots = RootSpec {
            real_roots: vec![rat(-1)],
            complex_pairs: vec![],
            leading: rat(1),
        };
        assert_eq!(poly_from_roots(&roots).unwrap(), p(&[1, 1]));

        let roots = RootSpec {
            real_roots: vec![],
            complex_pairs: vec![QuadraticFactor::new(rat(1), rat(1)).unwrap()],
            leading: rat(1),
        };
        assert_eq!(poly_from_roots(&roots).unwrap(), p(&[1, 1, 1]));
        assert_eq!(roots.complex_pairs[0].real_part(), ratio(-1, 2));

        let roots = RootSpec {
            real_roots: vec![rat(-1), rat(-2), rat(-3)],
            complex_pairs: vec![],
            leading: rat(1),
        };
        assert_eq!(poly_from_roots(&roots).unwrap(), p(&[1, 6, 11, 6]));

        let empty = RootSpec {
            real_roots: vec![],
            complex_pairs: vec![],
            leading: rat(1),
        };
        assert_eq!(poly_from_roots(&empty), Err(Error::EmptyRootSpec));
    }

    #[test]
    fn quadratic_must_be_complex() {
        assert!(QuadraticFactor::new(rat(2), rat(1)).is_err());
        assert!(QuadraticFactor::from_pair(rat(1), rat(0)).is_err());
        let q = QuadraticFactor::from_pair(ratio(3, 2), rat(2)).unwrap();
        assert_eq!(q.real_part(), ratio(3, 2));
        assert_eq!(q.polynomial(), Polynomial::new(vec![rat(1), rat(-3), ratio(25, 4)]));
    }

    #[test]
    fn small_instance() {
        let inst = gen_instance(1, 1, 0, Tamper::None).unwrap();
        assert_eq!(inst.h.degree(), 1);
        assert!(inst.h.coeffs().iter().all(|c| c.is_positive()));
        assert!(inst.g.is_constant());
        assert!(truth_verdict(&inst));
    }

    #[test]
    fn tampering_breaks_truth() {
        for seed in 0..20 {
            assert!(!truth_verdict(&gen_instance(seed, 3, 2, Tamper::FlipHRoot).unwrap()));
            assert!(!truth_verdict(&gen_instance(seed, 2, 3, Tamper::FlipGRoot).unwrap()));
            assert!(truth_verdict(&gen_instance(seed, 3, 3, Tamper::None).unwrap()));
        }
    }

    #[test]
    fn degenerate_requests() {
        assert_eq!(gen_instance(0, 0, 0, Tamper::None), Err(Error::OrderZero));
        assert_eq!(gen_instance(0, 0, 2, Tamper::FlipHRoot), Err(Error::NothingToTamper));
        assert_eq!(gen_instance(0, 2, 0, Tamper::FlipGRoot), Err(Error::NothingToTamper));
    }

    #[test]
    fn boundary_root_is_not_left() {
        let mut inst = gen_instance(5, 2, 2, Tamper::None).unwrap();
        inst.g_roots.real_roots = vec![rat(0), rat(1)];
        inst.g_roots.complex_pairs.clear();
        assert!(!truth_verdict(&inst));
    }

    #[test]
    fn deterministic() {
        assert_eq!(
            gen_instance(42, 3, 2, Tamper::None).unwrap(),
            gen_instance(42, 3, 2, Tamper::None).unwrap()
        );
        assert_eq!(gen_polynomial(9, 7).unwrap(), gen_polynomial(9, 7).unwrap());
    }

    #[test]
    fn generated_roots_are_roots() {
        for seed in 0..30 {
            let inst = gen_instance(seed, 5, 4, Tamper::None).unwrap();
            for (roots, poly) in [(&inst.h_roots, &inst.h), (&inst.g_roots, &inst.g)] {
                assert_eq!(roots.degree(), poly.degree());
                for r in &roots.real_roots {
                    assert!(poly.evaluate(r).is_zero());
                }
                for q in &roots.complex_pairs {
                    assert!(poly.div_rem(&q.polynomial()).1.is_zero());
                    let re = q.real_part();
                    assert_eq!(q.linear(), &(-rat(2) * &re));
                }
                let lo = ratio(1, 8);
                assert!(roots.real_parts().all(|x| x.abs() >= lo));
            }
        }
    }

    #[test]
    fn polynomial_modes_all_occur() {
        let (mut stable, mut unstable, mut boundary) = (0, 0, 0);
        for seed in 0..200 {
            let inst = gen_polynomial(seed, 1 + (seed as usize % 8)).unwrap();
            assert_eq!(inst.poly.degree(), inst.roots.degree());
            if inst.truth() {
                stable += 1;
            } else if inst.roots.real_parts().any(|x| x.is_zero()) {
                boundary += 1;
            } else {
                unstable += 1;
            }
        }
        assert!(stable > 50 && unstable > 30 && boundary > 10, "{stable} {unstable} {boundary}");
    }
}
