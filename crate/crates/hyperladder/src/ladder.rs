//! Associated special functions and the exact ladder algebra between
//! neighbouring `m` sectors.
//!
//! For a family with data `(sigma, tau, lambda_l)` the associated functions
//! are `Phi_{l,m} = kappa^m d^m/ds^m Phi_l` with `kappa = sqrt(sigma)`.
//! `kappa` itself is never materialized: an `Asf` stores the polynomial part
//! `P = Phi_l^{(m)}` and the sector index `m`, and the operators act through
//! the rewrite rules `kappa^2 = sigma`, `kappa kappa' = sigma'/2`, which keep
//! every identity inside exact polynomial arithmetic:
//!
//! * raising: `(m, P) -> (m+1, P')`,
//! * lowering: `(m, Q) -> (m-1, -sigma Q' - tau Q - (m-1) sigma' Q)`,
//! * reduced Hamiltonian: `L_m P = -sigma P'' - (tau + m sigma') P'`,
//!   which equals `(lambda_l - lambda_m) P` on `Phi_{l,m}`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::polynomial::Polynomial;
use crate::rational::Rational;

/// Associated special function `scale * kappa^m Phi_l^{(m)}` in its exact
/// polynomial representation.
#[derive(Clone, Debug)]
pub struct Asf<'f> {
    family: &'f FamilySpec,
    l: usize,
    m: usize,
    part: Polynomial,
    scale: Rational,
}

/// Builds `Phi_{l,m}` with unit scale. Requires `m <= l`; the part is the
/// m-th derivative of the degree-l family polynomial, hence degree `l - m`.
pub fn asf(family: &FamilySpec, l: usize, m: usize) -> Result<Asf<'_>> {
    if m > l {
        return Err(Error::domain(format!(
            "associated function needs m <= l (got l = {l}, m = {m})"
        )));
    }
    let part = family.classical_polynomial(l).derivative_n(m);
    Ok(Asf {
        family,
        l,
        m,
        part,
        scale: Rational::one(),
    })
}

impl<'f> Asf<'f> {
    pub fn family(&self) -> &'f FamilySpec {
        self.family
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Polynomial part before the `kappa^m` factor and before `scale`.
    pub fn part(&self) -> &Polynomial {
        &self.part
    }

    pub fn scale(&self) -> &Rational {
        &self.scale
    }

    /// The polynomial part with the scalar folded in; two `Asf` values with
    /// the same `m` represent the same function iff these agree.
    pub fn materialized(&self) -> Polynomial {
        self.part.scale(&self.scale)
    }

    pub fn scaled(&self, c: &Rational) -> Asf<'f> {
        Asf {
            family: self.family,
            l: self.l,
            m: self.m,
            part: self.part.clone(),
            scale: &self.scale * c,
        }
    }

    fn with_part(&self, m: usize, part: Polynomial) -> Asf<'f> {
        Asf {
            family: self.family,
            l: self.l,
            m,
            part,
            scale: self.scale.clone(),
        }
    }
}

/// Raising operator `kappa d/ds - m kappa'` between sectors `m -> m+1`.
/// On the polynomial part this is exactly differentiation. Raising the top
/// sector `m = l` is rejected: there the image is identically zero.
pub fn raise<'f>(phi: &Asf<'f>) -> Result<Asf<'f>> {
    if phi.m >= phi.l {
        return Err(Error::domain(format!(
            "raise needs m < l (got l = {}, m = {}); the raised top-sector function is identically zero",
            phi.l, phi.m
        )));
    }
    Ok(phi.with_part(phi.m + 1, phi.part.derivative()))
}

/// Lowering operator between sectors `m -> m-1`:
/// `(m, Q) -> (m-1, -sigma Q' - tau Q - (m-1) sigma' Q)`.
/// On `Phi_{l,m}` the result equals `(lambda_l - lambda_{m-1}) Phi_{l,m-1}`.
pub fn lower<'f>(phi: &Asf<'f>) -> Result<Asf<'f>> {
    if phi.m == 0 {
        return Err(Error::domain("lower needs m >= 1 (no sector below m = 0)"));
    }
    let f = phi.family;
    let q = &phi.part;
    let sigma_term = f.sigma() * &q.derivative();
    let tau_term = f.tau() * q;
    let shift_term = &f.sigma().derivative().scale(&Rational::from(phi.m - 1)) * q;
    let part = &(&(-(&sigma_term)) - &tau_term) - &shift_term;
    Ok(phi.with_part(phi.m - 1, part))
}

/// Reduced m-sector Hamiltonian: `L_m P = -sigma P'' - (tau + m sigma') P'`.
/// Equals `H_m - lambda_m` on the sector, so on `Phi_{l,m}` it multiplies the
/// part by `lambda_l - lambda_m`.
pub fn apply_hm<'f>(phi: &Asf<'f>) -> Asf<'f> {
    let f = phi.family;
    let shifted_tau = f.tau() + &f.sigma().derivative().scale(&Rational::from(phi.m));
    let second = f.sigma() * &phi.part.derivative_n(2);
    let first = &shifted_tau * &phi.part.derivative();
    let part = &(-(&second)) - &first;
    phi.with_part(phi.m, part)
}

/// Rebuilds `Phi_{l,m}` by repeated lowering from the top sector:
/// `Phi_{l,m} = prod_{k=m}^{l-1} [lower / (lambda_l - lambda_k)] Phi_{l,l}`.
/// Exact; the result has unit scale and equals `asf(family, l, m)`.
pub fn ladder_product(family: &FamilySpec, l: usize, m: usize) -> Result<Asf<'_>> {
    if m > l {
        return Err(Error::domain(format!(
            "ladder product needs m <= l (got l = {l}, m = {m})"
        )));
    }
    let lambda_l = family.eigenvalue(l);
    let mut state = asf(family, l, l)?;
    for k in (m..l).rev() {
        let e = &lambda_l - &family.eigenvalue(k);
        debug_assert!(e.is_positive());
        let lowered = lower(&state)?;
        state = lowered.with_part(lowered.m, lowered.part.div_scalar(&e)?);
    }
    Ok(state)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

/// One verified identity over a single `(l, m)` pair; `residual` is the exact
/// rational magnitude of whatever was left over ("0" on a clean pass).
#[derive(Clone, Debug, Serialize)]
pub struct LadderReport {
    pub family: String,
    pub identity: String,
    pub l: usize,
    pub m: usize,
    pub status: CheckStatus,
    pub residual: String,
}

impl LadderReport {
    fn from_residual(family: &FamilySpec, identity: &str, l: usize, m: usize, res: Rational) -> Self {
        LadderReport {
            family: family.id(),
            identity: identity.to_string(),
            l,
            m,
            status: if res.is_zero() {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            residual: res.to_string(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

fn poly_residual(lhs: &Polynomial, rhs: &Polynomial) -> Rational {
    (lhs - rhs).abs_coeff_sum()
}

/// Raising identity: `raise(Phi_{l,m})` equals `Phi_{l,m+1}` exactly.
pub fn raising_check(family: &FamilySpec, l: usize, m: usize) -> Result<LadderReport> {
    let lifted = raise(&asf(family, l, m)?)?;
    let direct = asf(family, l, m + 1)?;
    let res = poly_residual(&lifted.materialized(), &direct.materialized());
    Ok(LadderReport::from_residual(family, "raising", l, m, res))
}

/// Lowering identity: `lower(Phi_{l,m})` equals
/// `(lambda_l - lambda_{m-1}) Phi_{l,m-1}` exactly.
pub fn lowering_check(family: &FamilySpec, l: usize, m: usize) -> Result<LadderReport> {
    let dropped = lower(&asf(family, l, m)?)?;
    let e = &family.eigenvalue(l) - &family.eigenvalue(m - 1);
    let direct = asf(family, l, m - 1)?.scaled(&e);
    let res = poly_residual(&dropped.materialized(), &direct.materialized());
    Ok(LadderReport::from_residual(family, "lowering", l, m, res))
}

/// Eigen identity for the reduced Hamiltonian:
/// `L_m Phi_{l,m} = (lambda_l - lambda_m) Phi_{l,m}` exactly.
pub fn hamiltonian_check(family: &FamilySpec, l: usize, m: usize) -> Result<LadderReport> {
    let phi = asf(family, l, m)?;
    let applied = apply_hm(&phi);
    let e = &family.eigenvalue(l) - &family.eigenvalue(m);
    let res = poly_residual(&applied.materialized(), &phi.scaled(&e).materialized());
    Ok(LadderReport::from_residual(family, "hamiltonian", l, m, res))
}

/// Three-term recurrence in `m` with the `kappa` powers cleared:
/// `sigma P_{m+1} + (tau + (m-1) sigma') P_m + (lambda_l - lambda_{m-1}) P_{m-1} = 0`
/// where `P_k = Phi_l^{(k)}`. Valid for `1 <= m <= l-1`.
pub fn three_term_check(family: &FamilySpec, l: usize, m: usize) -> Result<LadderReport> {
    if m == 0 || m + 1 > l {
        return Err(Error::domain(format!(
            "three-term recurrence needs 1 <= m <= l-1 (got l = {l}, m = {m})"
        )));
    }
    let p_up = asf(family, l, m + 1)?;
    let p_mid = asf(family, l, m)?;
    let p_down = asf(family, l, m - 1)?;
    let shift = family.tau() + &family.sigma().derivative().scale(&Rational::from(m - 1));
    let e = &family.eigenvalue(l) - &family.eigenvalue(m - 1);
    let total = &(&(family.sigma() * p_up.part()) + &(&shift * p_mid.part()))
        + &p_down.part().scale(&e);
    let res = total.abs_coeff_sum();
    Ok(LadderReport::from_residual(family, "three-term", l, m, res))
}

/// Factorization and shape invariance at `(l, m)`, `m < l`:
/// `lower(raise(.))` and `raise(lower(.))` both act as `lambda_l - lambda_m`
/// on their sectors, the sector shift `r_{m+1} = lambda_{m+1} - lambda_m`
/// equals `-m sigma'' - tau'`, and the shifts telescope to `lambda_l`.
pub fn factorization_check(family: &FamilySpec, l: usize, m: usize) -> Result<LadderReport> {
    if m >= l {
        return Err(Error::domain(format!(
            "factorization check needs m < l (got l = {l}, m = {m})"
        )));
    }
    let e = &family.eigenvalue(l) - &family.eigenvalue(m);
    let mut res = Rational::zero();

    let low = asf(family, l, m)?;
    let round_trip = lower(&raise(&low)?)?;
    res = res + poly_residual(&round_trip.materialized(), &low.scaled(&e).materialized());

    let high = asf(family, l, m + 1)?;
    let trip_back = raise(&lower(&high)?)?;
    res = res + poly_residual(&trip_back.materialized(), &high.scaled(&e).materialized());

    // Shape invariance: the two expressions for the sector shift agree ...
    let r_shift = &family.eigenvalue(m + 1) - &family.eigenvalue(m);
    let closed = -(&(Rational::from(m) * family.sigma_pp())) - family.tau_p();
    res = res + (&r_shift - &closed).abs();

    // ... and telescope to the eigenvalue.
    let mut telescoped = Rational::zero();
    for k in 1..=l {
        telescoped = telescoped + (&family.eigenvalue(k) - &family.eigenvalue(k - 1));
    }
    res = res + (&telescoped - &family.eigenvalue(l)).abs();

    Ok(LadderReport::from_residual(family, "factorization", l, m, res))
}

/// Intertwining at scalar level: with `R` acting as `-sigma'' l - tau'` on an
/// `l`-eigenfunction of either sector, `raise(R phi) = R(raise phi)` exactly.
pub fn intertwining_check(family: &FamilySpec, l: usize, m: usize) -> Result<LadderReport> {
    let phi = asf(family, l, m)?;
    let r_scalar = |a: &Asf| -> Rational {
        -(&(Rational::from(a.l()) * family.sigma_pp())) - family.tau_p()
    };
    let lhs = raise(&phi.scaled(&r_scalar(&phi)))?;
    let raised = raise(&phi)?;
    let rhs = raised.scaled(&r_scalar(&raised));
    let res = poly_residual(&lhs.materialized(), &rhs.materialized());
    Ok(LadderReport::from_residual(family, "intertwining", l, m, res))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FamilySpec;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn legendre() -> FamilySpec {
        FamilySpec::jacobi(Rational::zero(), Rational::zero()).unwrap()
    }

    fn matrix() -> Vec<FamilySpec> {
        vec![
            FamilySpec::hypergeometric(q(1, 2), q(1, 2)).unwrap(),
            FamilySpec::jacobi(q(0, 1), q(0, 1)).unwrap(),
            FamilySpec::jacobi(q(3, 2), q(1, 2)).unwrap(),
            FamilySpec::laguerre(q(0, 1)).unwrap(),
            FamilySpec::laguerre(q(5, 2)).unwrap(),
            FamilySpec::hermite().unwrap(),
        ]
    }

    #[test]
    fn asf_part_is_polynomial_derivative() {
        let f = legendre();
        // Phi_2 = (3s^2-1)/2: parts 3s and 3 at m = 1, 2.
        let a1 = asf(&f, 2, 1).unwrap();
        assert_eq!(a1.part(), &Polynomial::new(vec![q(0, 1), q(3, 1)]));
        let a2 = asf(&f, 2, 2).unwrap();
        assert_eq!(a2.part(), &Polynomial::from_ints(&[3]));
        assert!(asf(&f, 2, 3).is_err());
    }

    #[test]
    fn raise_differentiates_part_and_stops_at_top() {
        let f = legendre();
        let a = asf(&f, 2, 1).unwrap();
        let r = raise(&a).unwrap();
        assert_eq!(r.m(), 2);
        assert_eq!(r.part(), &Polynomial::from_ints(&[3]));
        // Top sector: operator value is identically zero, call is an error.
        let top = asf(&f, 2, 2).unwrap();
        assert!(top.part().derivative().is_zero());
        assert!(raise(&top).is_err());
    }

    #[test]
    fn lower_matches_spelled_out_example() {
        // Jacobi(0,0), l=2, m=2, part 3: lower gives part 12s
        // = (lambda_2 - lambda_1) * 3s.
        let f = legendre();
        let a = asf(&f, 2, 2).unwrap();
        let low = lower(&a).unwrap();
        assert_eq!(low.m(), 1);
        assert_eq!(low.part(), &Polynomial::from_ints(&[0, 12]));
        assert!(lower(&asf(&f, 2, 0).unwrap()).is_err());
    }

    #[test]
    fn reduced_hamiltonian_example() {
        // Jacobi(0,0), l=2, m=1, part 3s -> 12s.
        let f = legendre();
        let a = asf(&f, 2, 1).unwrap();
        assert_eq!(apply_hm(&a).part(), &Polynomial::from_ints(&[0, 12]));
    }

    #[test]
    fn ladder_identities_hold_exactly_across_matrix() {
        for f in matrix() {
            for l in 0..=8usize {
                for m in 0..l {
                    assert!(raising_check(&f, l, m).unwrap().passed(), "{} {l} {m}", f.id());
                    assert!(
                        lowering_check(&f, l, m + 1).unwrap().passed(),
                        "{} {l} {m}",
                        f.id()
                    );
                    assert!(
                        hamiltonian_check(&f, l, m).unwrap().passed(),
                        "{} {l} {m}",
                        f.id()
                    );
                    assert!(
                        factorization_check(&f, l, m).unwrap().passed(),
                        "{} {l} {m}",
                        f.id()
                    );
                    assert!(
                        intertwining_check(&f, l, m).unwrap().passed(),
                        "{} {l} {m}",
                        f.id()
                    );
                }
                for m in 1..l {
                    assert!(
                        three_term_check(&f, l, m).unwrap().passed(),
                        "{} {l} {m}",
                        f.id()
                    );
                }
            }
        }
    }

    #[test]
    fn three_term_range_is_enforced() {
        let f = legendre();
        assert!(three_term_check(&f, 1, 1).is_err());
        assert!(three_term_check(&f, 3, 0).is_err());
        assert!(three_term_check(&f, 3, 3).is_err());
    }

    #[test]
    fn ladder_product_reproduces_direct_construction() {
        let lag = FamilySpec::laguerre(q(1, 1)).unwrap();
        let built = ladder_product(&lag, 4, 2).unwrap();
        let direct = asf(&lag, 4, 2).unwrap();
        assert_eq!(built.materialized(), direct.materialized());
        assert_eq!(built.scale(), &Rational::one());

        let f = legendre();
        let built = ladder_product(&f, 2, 0).unwrap();
        assert_eq!(
            built.materialized(),
            Polynomial::new(vec![q(-1, 2), q(0, 1), q(3, 2)])
        );

        for fam in matrix() {
            for l in 0..=7usize {
                for m in 0..=l {
                    let built = ladder_product(&fam, l, m).unwrap();
                    let direct = asf(&fam, l, m).unwrap();
                    assert_eq!(
                        built.materialized(),
                        direct.materialized(),
                        "{} l={l} m={m}",
                        fam.id()
                    );
                }
            }
        }
    }

    #[test]
    fn report_serializes_to_flat_json() {
        let f = legendre();
        let rep = factorization_check(&f, 3, 1).unwrap();
        let json = serde_json::to_string(&rep).unwrap();
        assert!(json.contains("\"identity\":\"factorization\""));
        assert!(json.contains("\"status\":\"pass\""));
        assert!(json.contains("\"residual\":\"0\""));
    }
}
