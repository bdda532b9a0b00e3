//! Hurwitz classification of polynomials and rational functions, and exact
//! verification of the identities tying the Δ, Ω and Hankel families
//! together.
//!
//! Verdicts are always decided by the Δ chain. The Ω and Hankel chains are
//! evaluated alongside as cross-checks; a disagreement is reported as
//! [`Error::CriteriaDisagree`] rather than resolved.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::determinants::{hankel_d, hankel_dhat, hurwitz_minors, omega};
use crate::error::{Error, Result};
use crate::numeric::{neg_one_pow, pow, Polynomial, Rational};
use crate::series::{
    associated_s_series, laurent_expand, leading_t, phi_series_of_rational, RationalFunction,
    SSeriesPrefix,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Hurwitz,
    NotHurwitz,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Hurwitz
        } else {
            Verdict::NotHurwitz
        }
    }

    pub fn is_hurwitz(self) -> bool {
        self == Verdict::Hurwitz
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Hurwitz => write!(f, "Hurwitz"),
            Verdict::NotHurwitz => write!(f, "NotHurwitz"),
        }
    }
}

/// Hankel data of the associated function `Φ` and the verdict it implies:
/// `s_{-1} > 0` for odd `n`, `D_j > 0` and `(-1)^j D̂_j > 0` for `j = 1..l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HankelEvidence {
    pub s_minus1: Rational,
    pub d: Vec<Rational>,
    pub dhat: Vec<Rational>,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityReport {
    pub verdict: Verdict,
    pub order_n: usize,
    /// `Δ_1 ..= Δ_n`.
    pub delta_values: Vec<Rational>,
    /// `Ω_2, Ω_4, ..., Ω_2n`.
    pub omega_values: Option<Vec<Rational>>,
    pub hankel: Option<HankelEvidence>,
    /// 1-based index of the first non-positive `Δ_j`.
    pub first_failure: Option<usize>,
}

fn first_non_positive(values: &[Rational]) -> Option<usize> {
    values.iter().position(|v| !v.is_positive()).map(|i| i + 1)
}

fn hankel_evidence(s: &SSeriesPrefix, n: usize) -> HankelEvidence {
    let l = n / 2;
    let d: Vec<Rational> = (1..=l).map(|j| hankel_d(s, j).expect("prefix sized for l")).collect();
    let dhat: Vec<Rational> = (1..=l)
        .map(|j| hankel_dhat(s, j).expect("prefix sized for l"))
        .collect();
    let ok = (n % 2 == 0 || s.s_minus1.is_positive())
        && d.iter().all(|x| x.is_positive())
        && dhat
            .iter()
            .enumerate()
            .all(|(i, x)| (neg_one_pow(i + 1) * x).is_positive());
    HankelEvidence {
        s_minus1: s.s_minus1.clone(),
        d,
        dhat,
        verdict: Verdict::from_bool(ok),
    }
}

/// Prefix length that covers `D_l` and `D̂_l`.
fn s_prefix_len(n: usize) -> usize {
    (2 * (n / 2)).saturating_sub(1)
}

/// Decides Hurwitz stability of `p` by `Δ_1(p) > 0, ..., Δ_n(p) > 0`.
///
/// The sign of `p` is normalized first. Whenever the associated function is
/// defined, the Hankel criterion is evaluated too and must agree.
pub fn classify_polynomial(p: &Polynomial) -> Result<StabilityReport> {
    if p.is_zero() || p.degree() == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let (p, _) = p.normalize_sign()?;
    let n = p.degree();
    let delta_values = hurwitz_minors(p.coeffs(), n);
    let first_failure = first_non_positive(&delta_values);
    let verdict = Verdict::from_bool(first_failure.is_none());

    let hankel = match associated_s_series(&p, s_prefix_len(n)) {
        Ok(s) => Some(hankel_evidence(&s, n)),
        Err(Error::PolynomialPart) => None,
        Err(e) => return Err(e),
    };
    if let Some(h) = &hankel {
        if h.verdict != verdict {
            return Err(Error::CriteriaDisagree(format!(
                "Hurwitz minors say {verdict}, Hankel minors say {} for {p}",
                h.verdict
            )));
        }
    }
    Ok(StabilityReport {
        verdict,
        order_n: n,
        delta_values,
        omega_values: None,
        hankel,
        first_failure,
    })
}

/// `Ω_2, ..., Ω_2count` of `(h, g)`.
pub fn omega_values(h: &Polynomial, g: &Polynomial, count: usize) -> Vec<Rational> {
    (1..=count)
        .map(|j| omega(h, g, j).expect("order is at least one"))
        .collect()
}

/// `Δ_1(R), ..., Δ_count(R)` from the Laurent coefficients of `R`.
pub fn rational_minors(r: &RationalFunction, count: usize) -> Vec<Rational> {
    if count == 0 {
        return Vec::new();
    }
    let t = laurent_expand(r, 2 * count - 1).coeffs;
    hurwitz_minors(&t, count)
}

/// Decides whether `R` is a Hurwitz function by `Δ_1(R) > 0, ..., Δ_n(R) > 0`.
///
/// With `include_omega` the Ω determinants are computed straight from the
/// coefficients of `h` and `g`; their signs must match the Δ chain.
pub fn classify_rational(r: &RationalFunction, include_omega: bool) -> Result<StabilityReport> {
    let n = r.order();
    let delta_values = rational_minors(r, n);
    let first_failure = first_non_positive(&delta_values);
    let verdict = Verdict::from_bool(first_failure.is_none());

    let omega_values = if include_omega {
        let om = omega_values(r.numerator(), r.denominator(), n);
        let mismatch = om
            .iter()
            .zip(&delta_values)
            .position(|(o, d)| o.signum() != d.signum());
        if let Some(j) = mismatch {
            return Err(Error::CriteriaDisagree(format!(
                "sign of Ω_{} differs from sign of Δ_{}",
                2 * (j + 1),
                j + 1
            )));
        }
        Some(om)
    } else {
        None
    };

    Ok(StabilityReport {
        verdict,
        order_n: n,
        delta_values,
        omega_values,
        hankel: None,
        first_failure,
    })
}

/// Hankel data of `Φ = R_1/R_0`, or `None` when `Φ` is undefined
/// (odd order with `t_1 = 0`).
pub fn rational_hankel_evidence(r: &RationalFunction) -> Option<HankelEvidence> {
    let n = r.order();
    phi_series_of_rational(r, s_prefix_len(n))
        .ok()
        .map(|s| hankel_evidence(&s, n))
}

/// `P(z) = (-1)^m h(z) g(-z)`, of degree `n` and leading coefficient `b_0 c_0`.
pub fn auxiliary_p(r: &RationalFunction) -> Polynomial {
    let prod = r.numerator() * &r.denominator().reflect();
    if r.denominator().degree() % 2 == 1 {
        -prod
    } else {
        prod
    }
}

/// `F(z) = (-1)^n / R(-z) = f/q` with `f(z) = (-1)^m g(-z)` and
/// `q(z) = (-1)^r h(-z)`.
pub fn dual_f(r: &RationalFunction) -> RationalFunction {
    let signed = |p: Polynomial, odd: bool| if odd { -p } else { p };
    let f = signed(r.denominator().reflect(), r.denominator().degree() % 2 == 1);
    let q = signed(r.numerator().reflect(), r.numerator().degree() % 2 == 1);
    RationalFunction::new(f, q, false).expect("reflection preserves coprimality and order")
}

/// Necessary condition for stability: every coefficient strictly positive.
pub fn stodola_check(p: &Polynomial) -> bool {
    !p.is_zero() && p.coeffs().iter().all(|c| c.is_positive())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    NotApplicable,
}

/// Whether a record gates the overall result or is only reported.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckKind {
    Asserted,
    Probe,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityRecord {
    pub name: &'static str,
    pub order: usize,
    pub left: Option<Rational>,
    pub right: Option<Rational>,
    pub outcome: Outcome,
    pub kind: CheckKind,
}

impl IdentityRecord {
    fn compare(name: &'static str, order: usize, left: Rational, right: Rational) -> Self {
        let outcome = if left == right {
            Outcome::Pass
        } else {
            Outcome::Fail
        };
        IdentityRecord {
            name,
            order,
            left: Some(left),
            right: Some(right),
            outcome,
            kind: CheckKind::Asserted,
        }
    }

    fn not_applicable(name: &'static str, order: usize) -> Self {
        IdentityRecord {
            name,
            order,
            left: None,
            right: None,
            outcome: Outcome::NotApplicable,
            kind: CheckKind::Asserted,
        }
    }

    fn probe(mut self) -> Self {
        self.kind = CheckKind::Probe;
        self
    }

    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }
}

/// Which sign convention relates `Δ_2j(R)` and `D̂_j(Φ)` for even order:
/// `Δ_2j = (-1)^j t_0^2j D̂_j` (alternating) or `Δ_2j = t_0^2j D̂_j` (unsigned).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignFinding {
    pub alternating: bool,
    pub unsigned: bool,
}

impl SignFinding {
    /// Conventions that hold on both findings.
    pub fn combine(self, other: SignFinding) -> SignFinding {
        SignFinding {
            alternating: self.alternating && other.alternating,
            unsigned: self.unsigned && other.unsigned,
        }
    }

    pub fn is_consistent(self) -> bool {
        self.alternating || self.unsigned
    }

    pub fn describe(self) -> &'static str {
        match (self.alternating, self.unsigned) {
            (true, true) => "both conventions hold (D̂_j vanish at odd j)",
            (true, false) => "alternating: Δ_2j(R) = (-1)^j t_0^2j D̂_j(Φ)",
            (false, true) => "unsigned: Δ_2j(R) = t_0^2j D̂_j(Φ)",
            (false, false) => "neither convention holds",
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IdentityReport {
    pub records: Vec<IdentityRecord>,
    /// Present for even-order rational functions with `n >= 2`.
    pub sign_probe: Option<SignFinding>,
}

impl IdentityReport {
    /// True when no asserted identity failed. `NotApplicable` does not fail.
    pub fn all_asserted_pass(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityRecord> {
        self.records
            .iter()
            .filter(|r| r.kind == CheckKind::Asserted && r.outcome == Outcome::Fail)
    }

    pub fn extend(&mut self, other: IdentityReport) {
        self.records.extend(other.records);
        if other.sign_probe.is_some() {
            self.sign_probe = other.sign_probe;
        }
    }
}

pub type OmegaRule = fn(&Polynomial, &Polynomial, usize) -> Result<Rational>;

/// Checks, for `j = 1..n`:
/// `Ω_2j(h,g) = c_0^2j Δ_j(R)`, `Δ_j(P) = c_0^2j Δ_j(R)`, `Δ_j(P) = Ω_2j(h,g)`,
/// `Δ_j(R) = t_0^2j Δ_j(F)`, `Ω_2j(h,g) = Ω_2j(f,q)`,
/// and for `j = n+1 ..= n+extra` that `Δ_j(R)` and `Ω_2j(h,g)` vanish.
pub fn verify_identities(r: &RationalFunction, extra: usize) -> IdentityReport {
    verify_identities_with(r, extra, omega)
}

/// [`verify_identities`] with a caller-supplied Ω evaluator.
pub fn verify_identities_with(r: &RationalFunction, extra: usize, omega_rule: OmegaRule) -> IdentityReport {
    let n = r.order();
    let top = n + extra;
    let (h, g) = (r.numerator(), r.denominator());
    let c0 = g.leading().clone();
    let t0 = leading_t(r);
    let p = auxiliary_p(r);
    let f = dual_f(r);

    let delta_r = rational_minors(r, top);
    let delta_p = hurwitz_minors(p.coeffs(), n);
    let delta_f = rational_minors(&f, n);
    let om = |a: &Polynomial, b: &Polynomial, j: usize| {
        omega_rule(a, b, j).expect("order is at least one")
    };

    let mut records = Vec::new();
    for j in 1..=n {
        let i = j - 1;
        let omega_hg = om(h, g, j);
        let c0_pow = pow(&c0, 2 * j);
        records.push(IdentityRecord::compare(
            "lemma1",
            j,
            omega_hg.clone(),
            &c0_pow * &delta_r[i],
        ));
        records.push(IdentityRecord::compare(
            "aux_minors",
            j,
            delta_p[i].clone(),
            &c0_pow * &delta_r[i],
        ));
        records.push(IdentityRecord::compare(
            "aux_omega",
            j,
            delta_p[i].clone(),
            omega_hg.clone(),
        ));
        records.push(IdentityRecord::compare(
            "duality",
            j,
            delta_r[i].clone(),
            pow(&t0, 2 * j) * &delta_f[i],
        ));
        records.push(IdentityRecord::compare(
            "dual_omega",
            j,
            omega_hg,
            om(f.numerator(), f.denominator(), j),
        ));
    }
    for j in n + 1..=top {
        records.push(IdentityRecord::compare(
            "delta_vanishing",
            j,
            delta_r[j - 1].clone(),
            Rational::zero(),
        ));
        records.push(IdentityRecord::compare(
            "omega_vanishing",
            j,
            om(h, g, j),
            Rational::zero(),
        ));
    }
    IdentityReport {
        records,
        sign_probe: None,
    }
}

/// Relations between Hurwitz minors `Δ` and Hankel minors of `Φ`, shared by
/// the polynomial and the rational case. `scale` is `a_0` (or `t_0`).
///
/// For even `n = 2l`: `Δ_2j-1 = scale^(2j-1) D_j` and the even-index relation
/// is handed to `even_relation`. For odd `n = 2l+1`, with `ρ = scale/s_{-1}`:
/// `Δ_2j = ρ^2j D_j` and `Δ_2j+1 = (-1)^j ρ^(2j+1) D̂_j`.
fn hankel_relations(
    deltas: &[Rational],
    s: Option<&SSeriesPrefix>,
    scale: &Rational,
    n: usize,
    records: &mut Vec<IdentityRecord>,
    mut even_relation: impl FnMut(usize, &Rational, &Rational, &mut Vec<IdentityRecord>),
) {
    let l = n / 2;
    let delta = |k: usize| -> Rational {
        if k == 0 {
            Rational::one()
        } else {
            deltas[k - 1].clone()
        }
    };
    let Some(s) = s else {
        if n % 2 == 0 {
            for j in 1..=l {
                records.push(IdentityRecord::not_applicable("delta_odd_vs_D", j));
            }
        } else {
            for j in 1..=l {
                records.push(IdentityRecord::not_applicable("delta_even_vs_D", j));
            }
            for j in 0..=l {
                records.push(IdentityRecord::not_applicable("delta_odd_vs_Dhat", j));
            }
        }
        return;
    };
    let d = |j| hankel_d(s, j).expect("prefix sized for l + 2");
    let dhat = |j| hankel_dhat(s, j).expect("prefix sized for l + 2");

    if n % 2 == 0 {
        for j in 1..=l {
            records.push(IdentityRecord::compare(
                "delta_odd_vs_D",
                j,
                delta(2 * j - 1),
                pow(scale, 2 * j - 1) * d(j),
            ));
            even_relation(j, &delta(2 * j), &dhat(j), records);
        }
    } else if s.s_minus1.is_zero() {
        for j in 1..=l {
            records.push(IdentityRecord::not_applicable("delta_even_vs_D", j));
        }
        for j in 0..=l {
            records.push(IdentityRecord::not_applicable("delta_odd_vs_Dhat", j));
        }
    } else {
        let rho = scale / &s.s_minus1;
        for j in 1..=l {
            records.push(IdentityRecord::compare(
                "delta_even_vs_D",
                j,
                delta(2 * j),
                pow(&rho, 2 * j) * d(j),
            ));
        }
        for j in 0..=l {
            records.push(IdentityRecord::compare(
                "delta_odd_vs_Dhat",
                j,
                delta(2 * j + 1),
                neg_one_pow(j) * pow(&rho, 2 * j + 1) * dhat(j),
            ));
        }
    }
    for j in l + 1..=l + 2 {
        records.push(IdentityRecord::compare("hankel_D_vanishing", j, d(j), Rational::zero()));
        records.push(IdentityRecord::compare(
            "hankel_Dhat_vanishing",
            j,
            dhat(j),
            Rational::zero(),
        ));
    }
}

/// Prefix length covering `D_{l+2}` and `D̂_{l+2}`.
fn s_prefix_for_relations(n: usize) -> usize {
    2 * (n / 2) + 3
}

/// Checks the relations between `Δ_j(p)` and the Hankel minors of the
/// function associated with `p`, plus `D_j = D̂_j = 0` for `j = l+1, l+2`.
pub fn verify_hankel_relations(p: &Polynomial) -> Result<IdentityReport> {
    if p.is_zero() || p.degree() == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let (p, _) = p.normalize_sign()?;
    let n = p.degree();
    let deltas = hurwitz_minors(p.coeffs(), n);
    let s = associated_s_series(&p, s_prefix_for_relations(n)).ok();
    let a0 = p.leading().clone();
    let mut records = Vec::new();
    hankel_relations(&deltas, s.as_ref(), &a0, n, &mut records, |j, delta, dhat, out| {
        out.push(IdentityRecord::compare(
            "delta_even_vs_Dhat",
            j,
            delta.clone(),
            neg_one_pow(j) * pow(&a0, 2 * j) * dhat,
        ));
    });
    Ok(IdentityReport {
        records,
        sign_probe: None,
    })
}

/// Rational-function analogue of [`verify_hankel_relations`], with `t_0` in
/// place of `a_0` and `Φ = R_1/R_0`.
///
/// For even order the relation between `Δ_2j(R)` and `D̂_j(Φ)` is probed in
/// both sign conventions and reported, never asserted.
pub fn verify_rational_hankel_relations(r: &RationalFunction) -> IdentityReport {
    let n = r.order();
    let deltas = rational_minors(r, n);
    let s = phi_series_of_rational(r, s_prefix_for_relations(n)).ok();
    let t0 = leading_t(r);
    let mut records = Vec::new();
    let mut finding = SignFinding {
        alternating: true,
        unsigned: true,
    };
    hankel_relations(&deltas, s.as_ref(), &t0, n, &mut records, |j, delta, dhat, out| {
        let unsigned = pow(&t0, 2 * j) * dhat;
        let alternating = neg_one_pow(j) * &unsigned;
        let alt = IdentityRecord::compare("probe_delta_even_alternating", j, delta.clone(), alternating).probe();
        let uns = IdentityRecord::compare("probe_delta_even_unsigned", j, delta.clone(), unsigned).probe();
        finding.alternating &= alt.passed();
        finding.unsigned &= uns.passed();
        out.push(alt);
        out.push(uns);
    });
    let sign_probe = (n % 2 == 0 && n >= 2 && s.is_some()).then_some(finding);
    IdentityReport {
        records,
        sign_probe,
    }
}
