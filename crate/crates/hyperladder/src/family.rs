//! The four classical weight families and their exact data.
//!
//! A family fixes the coefficients `sigma` (degree <= 2) and `tau` (degree 1)
//! of the equation `sigma y'' + tau y' + lambda y = 0` together with a weight
//! `rho` on an interval `(a, b)` satisfying the Pearson identity
//! `(sigma rho)' = tau rho`. Everything downstream (ladder operators, norms,
//! potentials) is generated from this data, so construction validates it
//! exactly: parameter ranges, the Pearson identity as a polynomial identity,
//! and the degree/sign constraints that make the eigenvalue sequence strictly
//! increasing.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polynomial::Polynomial;
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyName {
    Hypergeometric,
    Jacobi,
    Laguerre,
    Hermite,
}

impl FamilyName {
    pub fn as_str(&self) -> &'static str {
        match self {
            FamilyName::Hypergeometric => "hypergeometric",
            FamilyName::Jacobi => "jacobi",
            FamilyName::Laguerre => "laguerre",
            FamilyName::Hermite => "hermite",
        }
    }
}

impl fmt::Display for FamilyName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "hypergeometric" => Ok(FamilyName::Hypergeometric),
            "jacobi" => Ok(FamilyName::Jacobi),
            "laguerre" => Ok(FamilyName::Laguerre),
            "hermite" => Ok(FamilyName::Hermite),
            other => Err(Error::domain(format!(
                "unknown family {other:?} (expected hypergeometric, jacobi, laguerre or hermite)"
            ))),
        }
    }
}

/// Structural form of the weight `rho`, rich enough to give the logarithmic
/// derivative `rho'/rho` as an exact rational function.
#[derive(Clone, Debug, PartialEq)]
pub enum WeightForm {
    /// `rho = f1^e1 * f2^e2` with linear factors (hypergeometric, Jacobi).
    TwoFactorPower {
        f1: Polynomial,
        e1: Rational,
        f2: Polynomial,
        e2: Rational,
    },
    /// `rho = s^e * exp(-s)` (Laguerre).
    PowerExp { e: Rational },
    /// `rho = exp(-s^2)` (Hermite).
    Gauss,
}

impl WeightForm {
    /// `rho'/rho` as an exact pair (numerator, denominator).
    pub fn log_derivative(&self) -> (Polynomial, Polynomial) {
        match self {
            WeightForm::TwoFactorPower { f1, e1, f2, e2 } => {
                let num = &(&f1.derivative() * f2).scale(e1) + &(&f2.derivative() * f1).scale(e2);
                (num, f1 * f2)
            }
            WeightForm::PowerExp { e } => {
                // (e - s) / s
                (
                    Polynomial::new(vec![e.clone(), Rational::from_integer(-1)]),
                    Polynomial::s(),
                )
            }
            WeightForm::Gauss => (Polynomial::from_ints(&[0, -2]), Polynomial::one()),
        }
    }

    /// Pointwise value of `rho`; callers keep `s` strictly inside `(a, b)`.
    pub fn eval_f64(&self, s: f64) -> f64 {
        match self {
            WeightForm::TwoFactorPower { f1, e1, f2, e2 } => {
                f1.eval_f64(s).powf(e1.to_f64()) * f2.eval_f64(s).powf(e2.to_f64())
            }
            WeightForm::PowerExp { e } => s.powf(e.to_f64()) * (-s).exp(),
            WeightForm::Gauss => (-s * s).exp(),
        }
    }
}

/// Monic toggle for `classical_polynomial`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Normalization {
    /// Rodrigues constant of the family (Jacobi `(-1)^l/(2^l l!)`, Laguerre
    /// `1/l!`, Hermite `(-1)^l`, hypergeometric `1/l!`).
    Conventional,
    /// Leading coefficient one.
    Monic,
}

/// A validated family instance: interval, equation coefficients and weight.
#[derive(Clone, Debug, PartialEq)]
pub struct FamilySpec {
    name: FamilyName,
    alpha: Option<Rational>,
    beta: Option<Rational>,
    interval: (f64, f64),
    sigma: Polynomial,
    tau: Polynomial,
    weight: WeightForm,
}

/// JSON-facing description: `{"family": "jacobi", "alpha": "1/2", "beta": "3/2"}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct FamilyConfig {
    pub family: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<String>,
}

impl FamilyConfig {
    pub fn to_family(&self) -> Result<FamilySpec> {
        let name: FamilyName = self.family.parse()?;
        let parse = |v: &Option<String>, which: &str| -> Result<Option<Rational>> {
            match v {
                None => Ok(None),
                Some(text) => text
                    .parse::<Rational>()
                    .map(Some)
                    .map_err(|e| Error::domain(format!("bad {which}: {e}"))),
            }
        };
        make_family(name, parse(&self.alpha, "alpha")?, parse(&self.beta, "beta")?)
    }
}

/// Builds and validates a family instance.
///
/// Parameter constraints (normalizability of the weight): hypergeometric and
/// Jacobi need `alpha > -1` and `beta > -1`, Laguerre needs `alpha > -1`,
/// Hermite takes no parameters. Violations are domain errors naming the
/// constraint. The Pearson identity is then checked exactly; a failure there
/// is an internal error since the table data is fixed.
pub fn make_family(
    name: FamilyName,
    alpha: Option<Rational>,
    beta: Option<Rational>,
) -> Result<FamilySpec> {
    let minus_one = Rational::from_integer(-1);
    let require_gt_minus_one = |v: &Rational, which: &str| -> Result<()> {
        if *v <= minus_one {
            return Err(Error::domain(format!(
                "{name} requires {which} > -1 (got {which} = {v})"
            )));
        }
        Ok(())
    };
    let need = |v: Option<Rational>, which: &str| -> Result<Rational> {
        v.ok_or_else(|| Error::domain(format!("{name} requires parameter {which}")))
    };
    let forbid = |v: &Option<Rational>, which: &str| -> Result<()> {
        if v.is_some() {
            return Err(Error::domain(format!("{name} takes no parameter {which}")));
        }
        Ok(())
    };

    let spec = match name {
        FamilyName::Hypergeometric => {
            let a = need(alpha, "alpha")?;
            let b = need(beta, "beta")?;
            require_gt_minus_one(&a, "alpha")?;
            require_gt_minus_one(&b, "beta")?;
            // sigma = s(1-s), tau = (alpha+1) - (alpha+beta+2)s, rho = s^a (1-s)^b
            let sigma = Polynomial::from_ints(&[0, 1, -1]);
            let tau = Polynomial::new(vec![
                &a + &Rational::one(),
                -(&a + &b + Rational::from_integer(2)),
            ]);
            let weight = WeightForm::TwoFactorPower {
                f1: Polynomial::s(),
                e1: a.clone(),
                f2: Polynomial::from_ints(&[1, -1]),
                e2: b.clone(),
            };
            FamilySpec {
                name,
                alpha: Some(a),
                beta: Some(b),
                interval: (0.0, 1.0),
                sigma,
                tau,
                weight,
            }
        }
        FamilyName::Jacobi => {
            let a = need(alpha, "alpha")?;
            let b = need(beta, "beta")?;
            require_gt_minus_one(&a, "alpha")?;
            require_gt_minus_one(&b, "beta")?;
            // sigma = 1-s^2, tau = (beta-alpha) - (alpha+beta+2)s,
            // rho = (1-s)^a (1+s)^b
            let sigma = Polynomial::from_ints(&[1, 0, -1]);
            let tau = Polynomial::new(vec![
                &b - &a,
                -(&a + &b + Rational::from_integer(2)),
            ]);
            let weight = WeightForm::TwoFactorPower {
                f1: Polynomial::from_ints(&[1, -1]),
                e1: a.clone(),
                f2: Polynomial::from_ints(&[1, 1]),
                e2: b.clone(),
            };
            FamilySpec {
                name,
                alpha: Some(a),
                beta: Some(b),
                interval: (-1.0, 1.0),
                sigma,
                tau,
                weight,
            }
        }
        FamilyName::Laguerre => {
            forbid(&beta, "beta")?;
            let a = need(alpha, "alpha")?;
            require_gt_minus_one(&a, "alpha")?;
            // sigma = s, tau = alpha + 1 - s, rho = s^a exp(-s)
            let sigma = Polynomial::s();
            let tau = Polynomial::new(vec![&a + &Rational::one(), Rational::from_integer(-1)]);
            let weight = WeightForm::PowerExp { e: a.clone() };
            FamilySpec {
                name,
                alpha: Some(a),
                beta: None,
                interval: (0.0, f64::INFINITY),
                sigma,
                tau,
                weight,
            }
        }
        FamilyName::Hermite => {
            forbid(&alpha, "alpha")?;
            forbid(&beta, "beta")?;
            // sigma = 1 and rho = exp(-s^2) force tau = -2s through the
            // Pearson identity (sigma rho)' = tau rho; with that choice the
            // eigenvalues come out as lambda_l = 2l.
            FamilySpec {
                name,
                alpha: None,
                beta: None,
                interval: (f64::NEG_INFINITY, f64::INFINITY),
                sigma: Polynomial::one(),
                tau: Polynomial::from_ints(&[0, -2]),
                weight: WeightForm::Gauss,
            }
        }
    };

    spec.validate()?;
    Ok(spec)
}

impl FamilySpec {
    pub fn hypergeometric(alpha: Rational, beta: Rational) -> Result<Self> {
        make_family(FamilyName::Hypergeometric, Some(alpha), Some(beta))
    }

    pub fn jacobi(alpha: Rational, beta: Rational) -> Result<Self> {
        make_family(FamilyName::Jacobi, Some(alpha), Some(beta))
    }

    pub fn laguerre(alpha: Rational) -> Result<Self> {
        make_family(FamilyName::Laguerre, Some(alpha), None)
    }

    pub fn hermite() -> Result<Self> {
        make_family(FamilyName::Hermite, None, None)
    }

    pub fn name(&self) -> FamilyName {
        self.name
    }

    pub fn alpha(&self) -> Option<&Rational> {
        self.alpha.as_ref()
    }

    pub fn beta(&self) -> Option<&Rational> {
        self.beta.as_ref()
    }

    /// Support interval `(a, b)` of the weight; endpoints may be infinite.
    pub fn interval(&self) -> (f64, f64) {
        self.interval
    }

    pub fn sigma(&self) -> &Polynomial {
        &self.sigma
    }

    pub fn tau(&self) -> &Polynomial {
        &self.tau
    }

    pub fn weight(&self) -> &WeightForm {
        &self.weight
    }

    /// Second derivative of `sigma` (a constant, <= 0 for every family).
    pub fn sigma_pp(&self) -> Rational {
        self.sigma.coeff(2) * Rational::from_integer(2)
    }

    /// Slope of `tau` (a negative constant).
    pub fn tau_p(&self) -> Rational {
        self.tau.coeff(1)
    }

    /// Eigenvalue `lambda_l = -l(l-1)/2 sigma'' - l tau'`, exact.
    pub fn eigenvalue(&self, l: usize) -> Rational {
        let lr = Rational::from(l);
        let half = Rational::new(1, 2);
        -(&lr * &(&lr - &Rational::one())) * half * self.sigma_pp() - lr * self.tau_p()
    }

    /// Rodrigues normalization constant `B_l` of the family convention.
    pub fn rodrigues_constant(&self, l: usize) -> Rational {
        let fact = Rational::factorial(l);
        let sign = if l % 2 == 0 {
            Rational::one()
        } else {
            Rational::from_integer(-1)
        };
        match self.name {
            FamilyName::Hypergeometric | FamilyName::Laguerre => fact.recip(),
            FamilyName::Jacobi => sign * (Rational::from_integer(2).powi(l as i32) * fact).recip(),
            FamilyName::Hermite => sign,
        }
    }

    /// Degree-`l` polynomial eigenfunction, built by the exact descent
    /// recursion equivalent to the Rodrigues formula:
    /// `q_l = 1`, `q_{k-1} = sigma q_k' + (tau + (k-1) sigma') q_k`,
    /// `Phi_l = B_l q_0`. Only polynomial arithmetic is involved, so the
    /// result is exact for any `l`.
    pub fn classical_polynomial(&self, l: usize) -> Polynomial {
        self.classical_polynomial_with(l, Normalization::Conventional)
    }

    pub fn classical_polynomial_with(&self, l: usize, norm: Normalization) -> Polynomial {
        let sigma_p = self.sigma.derivative();
        let mut q = Polynomial::one();
        for k in (1..=l).rev() {
            let shift = &self.tau + &sigma_p.scale(&Rational::from(k - 1));
            q = &(&self.sigma * &q.derivative()) + &(&shift * &q);
        }
        debug_assert_eq!(q.degree(), Some(l), "descent recursion lost degree");
        match norm {
            Normalization::Conventional => q.scale(&self.rodrigues_constant(l)),
            Normalization::Monic => {
                let lead = q.leading().expect("nonzero by construction").clone();
                q.scale(&lead.recip())
            }
        }
    }

    /// Exact three-term recurrence data for the conventional polynomials:
    /// `s Phi_l = alpha_l Phi_{l+1} + beta_l Phi_l + gamma_l Phi_{l-1}`.
    /// Requires `l >= 1`; the coefficients are solved by leading-coefficient
    /// matching and the identity is then verified to zero remainder.
    pub fn recurrence_coefficients(&self, l: usize) -> Result<(Rational, Rational, Rational)> {
        if l == 0 {
            return Err(Error::domain(
                "recurrence coefficients need l >= 1 (the l-1 term must exist)",
            ));
        }
        let (a, b, c) = self.recurrence_row(l)?;
        Ok((a, b, c.expect("gamma defined for l >= 1")))
    }

    /// Recurrence row for any `l >= 0`; at `l = 0` there is no `gamma` term.
    /// Exposed for the quadrature builder, which needs the `l = 0` row.
    pub fn recurrence_row(&self, l: usize) -> Result<(Rational, Rational, Option<Rational>)> {
        let phi_l = self.classical_polynomial(l);
        let phi_up = self.classical_polynomial(l + 1);
        let s_phi = phi_l.mul_x();

        let alpha = s_phi.coeff(l + 1) / phi_up.leading().expect("degree l+1").clone();
        let r1 = &s_phi - &phi_up.scale(&alpha);
        let beta = r1.coeff(l) / phi_l.leading().expect("degree l").clone();
        let r2 = &r1 - &phi_l.scale(&beta);

        if l == 0 {
            if !r2.is_zero() {
                return Err(Error::internal(
                    "three-term recurrence row l=0 left a nonzero remainder",
                ));
            }
            return Ok((alpha, beta, None));
        }

        let phi_down = self.classical_polynomial(l - 1);
        let gamma = r2.coeff(l - 1) / phi_down.leading().expect("degree l-1").clone();
        let r3 = &r2 - &phi_down.scale(&gamma);
        if !r3.is_zero() {
            return Err(Error::internal(
                "three-term recurrence left a nonzero remainder",
            ));
        }
        Ok((alpha, beta, Some(gamma)))
    }

    /// Exact check of the Pearson identity `(sigma rho)' = tau rho`, i.e.
    /// `sigma' q + sigma p = tau q` where `rho'/rho = p/q`.
    pub fn pearson_holds(&self) -> bool {
        let (p, q) = self.weight.log_derivative();
        let lhs = &(&self.sigma.derivative() * &q) + &(&self.sigma * &p);
        let rhs = &self.tau * &q;
        lhs == rhs
    }

    /// Numeric spot check that `sigma rho s^k` dies off toward both endpoints
    /// for `k <= k_max` (the boundary terms dropped in every integration by
    /// parts). Returns the largest magnitude seen at the closest sample.
    pub fn boundary_spot_check(&self, k_max: usize) -> f64 {
        let (a, b) = self.interval;
        let mut worst: f64 = 0.0;
        let mut probe = |s: f64| {
            let base = self.sigma.eval_f64(s) * self.weight.eval_f64(s);
            for k in 0..=k_max {
                let v = (base * s.powi(k as i32)).abs();
                if v > worst {
                    worst = v;
                }
            }
        };
        for end in [a, b] {
            if end.is_finite() {
                let inward = if end == a { 1.0 } else { -1.0 };
                probe(end + inward * 1e-9);
            } else {
                let sgn = if end.is_sign_negative() { -1.0 } else { 1.0 };
                probe(sgn * 40.0);
            }
        }
        worst
    }

    fn validate(&self) -> Result<()> {
        if self.sigma.degree().map_or(true, |d| d > 2) {
            return Err(Error::internal("sigma must be a nonzero polynomial of degree <= 2"));
        }
        if self.tau.degree() != Some(1) {
            return Err(Error::internal("tau must have degree exactly 1"));
        }
        if self.sigma_pp().is_positive() {
            return Err(Error::internal("sigma'' must be <= 0"));
        }
        if !self.tau_p().is_negative() {
            return Err(Error::internal("tau' must be negative"));
        }
        if !self.pearson_holds() {
            return Err(Error::internal("Pearson identity (sigma rho)' = tau rho failed"));
        }
        Ok(())
    }

    pub fn to_config(&self) -> FamilyConfig {
        FamilyConfig {
            family: self.name.to_string(),
            alpha: self.alpha.as_ref().map(|r| r.to_string()),
            beta: self.beta.as_ref().map(|r| r.to_string()),
        }
    }

    /// Compact instance id, e.g. `jacobi(1/2, 3/2)`, `laguerre(0)`, `hermite`.
    pub fn id(&self) -> String {
        match (&self.alpha, &self.beta) {
            (Some(a), Some(b)) => format!("{}({}, {})", self.name, a, b),
            (Some(a), None) => format!("{}({})", self.name, a),
            _ => self.name.to_string(),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn legendre() -> FamilySpec {
        FamilySpec::jacobi(Rational::zero(), Rational::zero()).unwrap()
    }

    /// Independent oracle: the constructed polynomial must solve
    /// `sigma y'' + tau y' + lambda_l y = 0` with exactly zero residual.
    fn ode_residual(f: &FamilySpec, l: usize) -> Polynomial {
        let phi = f.classical_polynomial(l);
        let lhs = &(f.sigma() * &phi.derivative_n(2)) + &(f.tau() * &phi.derivative());
        &lhs + &phi.scale(&f.eigenvalue(l))
    }

    #[test]
    fn pearson_identity_exact_for_all_families() {
        let families = [
            FamilySpec::hypergeometric(q(1, 2), q(3, 2)).unwrap(),
            FamilySpec::jacobi(q(1, 2), q(5, 2)).unwrap(),
            FamilySpec::laguerre(q(5, 2)).unwrap(),
            FamilySpec::hermite().unwrap(),
        ];
        for f in &families {
            assert!(f.pearson_holds(), "{}", f.id());
        }
    }

    #[test]
    fn eigenvalues_match_known_forms() {
        // Jacobi / hypergeometric: l(l + alpha + beta + 1).
        let f = FamilySpec::jacobi(q(1, 2), q(3, 2)).unwrap();
        for l in 0..10usize {
            let expect = Rational::from(l) * (Rational::from(l) + q(3, 1));
            assert_eq!(f.eigenvalue(l), expect);
        }
        assert_eq!(legendre().eigenvalue(2), q(6, 1));
        // Laguerre: l. Hermite: 2l.
        let lag = FamilySpec::laguerre(Rational::zero()).unwrap();
        assert_eq!(lag.eigenvalue(5), q(5, 1));
        let her = FamilySpec::hermite().unwrap();
        assert_eq!(her.eigenvalue(3), q(6, 1));
    }

    #[test]
    fn eigenvalues_strictly_increase() {
        let families = [
            FamilySpec::hypergeometric(q(-1, 2), q(-1, 2)).unwrap(),
            FamilySpec::jacobi(q(0, 1), q(2, 1)).unwrap(),
            FamilySpec::laguerre(q(1, 3)).unwrap(),
            FamilySpec::hermite().unwrap(),
        ];
        for f in &families {
            for l in 0..40usize {
                assert!(
                    f.eigenvalue(l + 1) > f.eigenvalue(l),
                    "{} at l = {l}",
                    f.id()
                );
            }
        }
    }

    #[test]
    fn legendre_polynomials_from_descent() {
        let f = legendre();
        assert_eq!(f.classical_polynomial(0), Polynomial::one());
        assert_eq!(f.classical_polynomial(1), Polynomial::s());
        // Phi_2 = (3s^2 - 1)/2
        assert_eq!(
            f.classical_polynomial(2),
            Polynomial::new(vec![q(-1, 2), q(0, 1), q(3, 2)])
        );
        // Phi_3 = (5s^3 - 3s)/2
        assert_eq!(
            f.classical_polynomial(3),
            Polynomial::new(vec![q(0, 1), q(-3, 2), q(0, 1), q(5, 2)])
        );
    }

    #[test]
    fn laguerre_and_hermite_low_degrees() {
        let lag = FamilySpec::laguerre(Rational::zero()).unwrap();
        assert_eq!(lag.classical_polynomial(1), Polynomial::from_ints(&[1, -1]));
        assert_eq!(
            lag.classical_polynomial(2),
            Polynomial::new(vec![q(1, 1), q(-2, 1), q(1, 2)])
        );
        let her = FamilySpec::hermite().unwrap();
        assert_eq!(her.classical_polynomial(1), Polynomial::from_ints(&[0, 2]));
        assert_eq!(her.classical_polynomial(2), Polynomial::from_ints(&[-2, 0, 4]));
        assert_eq!(
            her.classical_polynomial(3),
            Polynomial::from_ints(&[0, -12, 0, 8])
        );
    }

    #[test]
    fn jacobi_half_integer_parameters() {
        // P_1^(1/2,1/2) = (3/2) s under the standard convention.
        let f = FamilySpec::jacobi(q(1, 2), q(1, 2)).unwrap();
        assert_eq!(
            f.classical_polynomial(1),
            Polynomial::new(vec![q(0, 1), q(3, 2)])
        );
    }

    #[test]
    fn ode_residual_is_exactly_zero() {
        let families = [
            FamilySpec::hypergeometric(q(1, 2), q(1, 2)).unwrap(),
            FamilySpec::jacobi(q(3, 2), q(1, 2)).unwrap(),
            FamilySpec::laguerre(q(5, 2)).unwrap(),
            FamilySpec::hermite().unwrap(),
        ];
        for f in &families {
            for l in 0..=12usize {
                assert!(ode_residual(f, l).is_zero(), "{} at l = {l}", f.id());
            }
        }
    }

    #[test]
    fn monic_toggle_normalizes_leading_coefficient() {
        let f = FamilySpec::jacobi(q(1, 2), q(3, 2)).unwrap();
        for l in 1..8usize {
            let m = f.classical_polynomial_with(l, Normalization::Monic);
            assert_eq!(m.leading(), Some(&Rational::one()));
            // Same polynomial up to scale.
            let c = f.classical_polynomial(l);
            let lead = c.leading().unwrap().clone();
            assert_eq!(c.div_scalar(&lead).unwrap(), m);
        }
    }

    #[test]
    fn recurrence_rows_are_exact() {
        // Legendre l=2: (3/5, 0, 2/5).
        assert_eq!(
            legendre().recurrence_coefficients(2).unwrap(),
            (q(3, 5), q(0, 1), q(2, 5))
        );
        // Symmetric weight: beta_1 = 0.
        assert_eq!(legendre().recurrence_coefficients(1).unwrap().1, q(0, 1));
        // Hermite l=1: (1/2, 0, 1).
        let her = FamilySpec::hermite().unwrap();
        assert_eq!(
            her.recurrence_coefficients(1).unwrap(),
            (q(1, 2), q(0, 1), q(1, 1))
        );
        // The identity itself, swept exactly.
        let lag = FamilySpec::laguerre(q(5, 2)).unwrap();
        for l in 1..=10usize {
            let (a, b, c) = lag.recurrence_coefficients(l).unwrap();
            let lhs = lag.classical_polynomial(l).mul_x();
            let rhs = &(&lag.classical_polynomial(l + 1).scale(&a)
                + &lag.classical_polynomial(l).scale(&b))
                + &lag.classical_polynomial(l - 1).scale(&c);
            assert_eq!(lhs, rhs, "l = {l}");
        }
    }

    #[test]
    fn recurrence_needs_l_at_least_one() {
        assert!(matches!(
            legendre().recurrence_coefficients(0),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn parameter_validation() {
        let err = FamilySpec::jacobi(q(-1, 1), q(0, 1)).unwrap_err();
        assert!(err.to_string().contains("alpha > -1"), "{err}");
        assert!(FamilySpec::laguerre(q(-3, 2)).is_err());
        assert!(make_family(FamilyName::Hermite, Some(q(1, 2)), None).is_err());
        assert!(make_family(FamilyName::Laguerre, Some(q(1, 2)), Some(q(1, 2))).is_err());
        assert!(make_family(FamilyName::Jacobi, Some(q(1, 2)), None).is_err());
    }

    #[test]
    fn config_round_trip() {
        let cfg: FamilyConfig =
            serde_json::from_str(r#"{"family": "jacobi", "alpha": "1/2", "beta": "3/2"}"#).unwrap();
        let f = cfg.to_family().unwrap();
        assert_eq!(f.name(), FamilyName::Jacobi);
        assert_eq!(f.alpha(), Some(&q(1, 2)));
        assert_eq!(f.to_config(), cfg);
        let hermite: FamilyConfig = serde_json::from_str(r#"{"family": "hermite"}"#).unwrap();
        assert_eq!(hermite.to_family().unwrap().id(), "hermite");
        let bad: FamilyConfig = serde_json::from_str(r#"{"family": "fourier"}"#).unwrap();
        assert!(bad.to_family().is_err());
    }

    #[test]
    fn boundary_terms_vanish_numerically() {
        for f in [
            FamilySpec::hypergeometric(q(1, 2), q(1, 2)).unwrap(),
            FamilySpec::jacobi(q(0, 1), q(0, 1)).unwrap(),
            FamilySpec::laguerre(q(2, 1)).unwrap(),
            FamilySpec::hermite().unwrap(),
        ] {
            assert!(f.boundary_spot_check(2) < 1e-6, "{}", f.id());
        }
    }
}
