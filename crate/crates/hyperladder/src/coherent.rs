//! Coherent states of the lowering operator: exact level-gap products,
//! growth diagnostics for the defining series, adaptive truncation, and the
//! annihilation-eigenstate residual.
//!
//! Gap products are kept as exact rationals and converted to floating point
//! as late as possible; only the complex coefficients are double precision.

pub use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::rational::Rational;

/// Level gaps `e_n = lambda_{m+n} - lambda_m` for `n = 0..=n_max` (`e_0 = 0`).
pub fn level_gaps(family: &FamilySpec, m: usize, n_max: usize) -> Vec<Rational> {
    let base = family.eigenvalue(m);
    (0..=n_max)
        .map(|n| &family.eigenvalue(m + n) - &base)
        .collect()
}

/// Exact products `eps_0 = 1`, `eps_n = e_1 e_2 ... e_n`.
pub fn epsilon_sequence(family: &FamilySpec, m: usize, n_max: usize) -> Vec<Rational> {
    let gaps = level_gaps(family, m, n_max);
    let mut out = Vec::with_capacity(n_max + 1);
    let mut acc = Rational::one();
    out.push(acc.clone());
    for gap in gaps.iter().skip(1) {
        acc = acc * gap;
        out.push(acc.clone());
    }
    out
}

/// Growth diagnostics for `eps_n`. The root test value is `eps_n^(1/n)` at
/// `n = n_max`; the ratio proxy `e_{n_max + 1}` estimates where the
/// normalization series in `|z|^2` would stop converging. The gaps grow
/// without bound for every admissible family, so `diverging` comes out true
/// and every finite `z` is accepted downstream; both diagnostics are
/// reported rather than picking one.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct RadiusEstimate {
    pub root_test_value: f64,
    pub ratio_proxy: f64,
    pub diverging: bool,
}

pub fn radius_estimate(family: &FamilySpec, m: usize, n_max: usize) -> Result<RadiusEstimate> {
    if n_max < 8 {
        return Err(Error::domain(format!(
            "radius estimate needs n_max >= 8 (got {n_max})"
        )));
    }
    let gaps = level_gaps(family, m, n_max + 1);
    // ln eps_n accumulates log gaps, avoiding overflow of the exact product.
    let root_at = |n: usize| -> f64 {
        let ln_eps: f64 = gaps[1..=n].iter().map(|e| e.to_f64().ln()).sum();
        (ln_eps / n as f64).exp()
    };
    let full = root_at(n_max);
    let half = root_at(n_max / 2);
    Ok(RadiusEstimate {
        root_test_value: full,
        ratio_proxy: gaps[n_max + 1].to_f64(),
        diverging: full > 1.5 * half,
    })
}

/// Normalized coherent state over the truncated number basis of one sector:
/// `coeffs[n]` multiplies `|m + n, m>`.
#[derive(Clone, Debug, Serialize)]
pub struct CoherentState {
    #[serde(skip)]
    family: FamilySpec,
    pub m: usize,
    pub z: Complex64,
    pub truncation: usize,
    pub coeffs: Vec<Complex64>,
    pub tail_bound: f64,
    norm_sq: f64,
}

impl CoherentState {
    pub fn family(&self) -> &FamilySpec {
        &self.family
    }

    /// Squared normalization constant, the partial sum of `|z|^(2n)/eps_n`.
    pub fn normalization_sq(&self) -> f64 {
        self.norm_sq
    }

    pub fn coefficient_norm_sq(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum()
    }
}

/// Builds the coherent state with coefficients `z^n / (N sqrt(eps_n))`.
/// The truncation grows until the geometric bound on the dropped
/// normalization tail is below `tol` and the dropped coefficient itself is
/// small enough that the annihilation residual stays below `tol` as well.
pub fn coherent_state(
    family: &FamilySpec,
    m: usize,
    z: Complex64,
    tol: f64,
) -> Result<CoherentState> {
    if !(tol > 0.0) {
        return Err(Error::domain("coherent state tolerance must be positive"));
    }
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::domain("coherent state needs finite z"));
    }
    if z.norm_sqr() == 0.0 {
        return Ok(CoherentState {
            family: family.clone(),
            m,
            z,
            truncation: 0,
            coeffs: vec![Complex64::new(1.0, 0.0)],
            tail_bound: 0.0,
            norm_sq: 1.0,
        });
    }

    let zz = z.norm_sqr();
    let base = family.eigenvalue(m);
    let gap = |n: usize| (&family.eigenvalue(m + n) - &base).to_f64();

    // t_n = |z|^(2n) / eps_n, advanced by one gap at a time.
    let mut t = 1.0f64;
    let mut n = 0usize;
    let truncation = loop {
        let next_gap = gap(n + 1);
        let ratio = zz / next_gap;
        if ratio < 0.5 {
            let tail = t * ratio / (1.0 - ratio);
            if tail < tol && t * zz < tol * tol {
                break n;
            }
        }
        t *= ratio;
        n += 1;
        if n > 100_000 {
            return Err(Error::numeric(
                "coherent state truncation did not converge within 100000 terms",
            ));
        }
    };

    // Raw coefficients z^n / sqrt(eps_n), built iteratively for stability.
    let mut raw = Vec::with_capacity(truncation + 1);
    let mut c = Complex64::new(1.0, 0.0);
    raw.push(c);
    for k in 1..=truncation {
        c *= z / gap(k).sqrt();
        raw.push(c);
    }
    let norm_sq: f64 = raw.iter().map(|c| c.norm_sqr()).sum();
    let norm = norm_sq.sqrt();
    let ratio = zz / gap(truncation + 1);
    let tail_bound = t * ratio / (1.0 - ratio);

    Ok(CoherentState {
        family: family.clone(),
        m,
        z,
        truncation,
        coeffs: raw.into_iter().map(|c| c / norm).collect(),
        tail_bound,
        norm_sq,
    })
}

/// Euclidean norm of `a_m |z> - z |z>` over the truncated basis. Applying
/// the lowering operator telescopes the coefficients, so the exact residual
/// is the dropped edge term `|z c_N|` plus rounding.
pub fn eigen_residual(state: &CoherentState) -> f64 {
    let base = state.family.eigenvalue(state.m);
    let gap = |n: usize| (&state.family.eigenvalue(state.m + n) - &base).to_f64();

    let n_t = state.coeffs.len() - 1;
    let mut acc = 0.0f64;
    for k in 0..n_t {
        let lowered = state.coeffs[k + 1] * gap(k + 1).sqrt();
        acc += (lowered - state.z * state.coeffs[k]).norm_sqr();
    }
    acc += (state.z * state.coeffs[n_t]).norm_sqr();
    acc.sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn hermite() -> FamilySpec {
        FamilySpec::hermite().unwrap()
    }

    fn legendre() -> FamilySpec {
        FamilySpec::jacobi(Rational::zero(), Rational::zero()).unwrap()
    }

    #[test]
    fn epsilon_products_match_hand_values() {
        // Hermite m=0: e_n = 2n, eps_3 = 2*4*6.
        let eps = epsilon_sequence(&hermite(), 0, 3);
        assert_eq!(eps[0], Rational::one());
        assert_eq!(eps[3], Rational::from(48i64));
        // Legendre m=0: eps_2 = (lambda_1)(lambda_2) = 2*6.
        let eps = epsilon_sequence(&legendre(), 0, 2);
        assert_eq!(eps[2], Rational::from(12i64));
    }

    #[test]
    fn gaps_strictly_increase_from_zero() {
        let q = |n: i64, d: i64| Rational::new(n, d);
        for f in [
            hermite(),
            legendre(),
            FamilySpec::laguerre(q(5, 2)).unwrap(),
            FamilySpec::hypergeometric(q(1, 2), q(1, 2)).unwrap(),
        ] {
            for m in [0usize, 3] {
                let gaps = level_gaps(&f, m, 100);
                assert!(gaps[0].is_zero());
                for w in gaps.windows(2) {
                    assert!(w[1] > w[0], "{} m={m}", f.id());
                }
            }
        }
    }

    #[test]
    fn radius_reports_divergence_and_ratio_proxy() {
        assert!(radius_estimate(&hermite(), 0, 7).is_err());
        let r = radius_estimate(&hermite(), 0, 50).unwrap();
        assert!(r.diverging);
        // e_51 = 102 for the e_n = 2n ladder.
        assert_abs_diff_eq!(r.ratio_proxy, 102.0, epsilon = 1e-9);
        assert!(radius_estimate(&legendre(), 0, 40).unwrap().diverging);
    }

    #[test]
    fn zero_z_is_the_sector_ground_state() {
        let st = coherent_state(&legendre(), 1, Complex64::new(0.0, 0.0), 1e-12).unwrap();
        assert_eq!(st.coeffs, vec![Complex64::new(1.0, 0.0)]);
        assert_eq!(st.truncation, 0);
        assert_eq!(eigen_residual(&st), 0.0);
    }

    #[test]
    fn hermite_unit_z_normalization_closed_form() {
        // N(1)^2 = sum 1/(2^n n!) = exp(1/2).
        let st = coherent_state(&hermite(), 0, Complex64::new(1.0, 0.0), 1e-12).unwrap();
        assert_abs_diff_eq!(st.normalization_sq(), 0.5f64.exp(), epsilon = 1e-12);
        assert!(eigen_residual(&st) <= 1e-10);
    }

    #[test]
    fn coefficients_stay_normalized_for_assorted_z() {
        let zs = [
            Complex64::new(0.5, 0.0),
            Complex64::new(1.0, 2.0),
            Complex64::new(-3.0, 0.0),
            Complex64::new(2.0, -2.0),
        ];
        for f in [hermite(), legendre()] {
            for &z in &zs {
                let st = coherent_state(&f, 0, z, 1e-10).unwrap();
                assert_abs_diff_eq!(st.coefficient_norm_sq(), 1.0, epsilon = 1e-10);
            }
        }
    }

    #[test]
    fn residual_shrinks_with_tolerance() {
        let f = legendre();
        let z = Complex64::new(2.0, 0.0);
        let r6 = eigen_residual(&coherent_state(&f, 1, z, 1e-6).unwrap());
        let r9 = eigen_residual(&coherent_state(&f, 1, z, 1e-9).unwrap());
        let r12 = eigen_residual(&coherent_state(&f, 1, z, 1e-12).unwrap());
        assert!(r6 > r9 && r9 > r12, "{r6} {r9} {r12}");
        assert!(r12 <= 1e-8);
    }

    #[test]
    fn coefficients_move_continuously_in_z() {
        let a = coherent_state(&hermite(), 0, Complex64::new(1.0, 0.0), 1e-12).unwrap();
        let b = coherent_state(&hermite(), 0, Complex64::new(1.0 + 1e-6, 0.0), 1e-12).unwrap();
        let n = a.coeffs.len().min(b.coeffs.len());
        let max_diff = (0..n)
            .map(|i| (a.coeffs[i] - b.coeffs[i]).norm())
            .fold(0.0, f64::max);
        assert!(max_diff < 1e-4, "coefficient jump {max_diff}");
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(coherent_state(&hermite(), 0, Complex64::new(f64::NAN, 0.0), 1e-10).is_err());
        assert!(coherent_state(&hermite(), 0, Complex64::new(1.0, 0.0), 0.0).is_err());
    }
}
