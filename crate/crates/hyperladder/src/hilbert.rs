//! Weighted-`L^2` layer: Gauss quadrature generated by the family's own
//! three-term recurrence, inner products and norms of associated functions,
//! and the creation/annihilation algebra on normalized basis coefficients.
//!
//! The quadrature is Golub-Welsch: the exact recurrence rows give the monic
//! coefficients `a_k = beta_k`, `b_k = gamma_k alpha_{k-1}`, the symmetric
//! tridiagonal matrix with diagonal `a` and off-diagonal `sqrt(b)` has the
//! nodes as eigenvalues, and the weights are the squared first eigenvector
//! components times the total weight mass. Only the eigensolve is floating
//! point; the recurrence data is exact.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use nalgebra::DMatrix;
use serde::Serialize;
use statrs::function::gamma::ln_gamma;

use crate::error::{Error, Result};
use crate::family::{FamilyName, FamilySpec};
use crate::ladder::Asf;
use crate::rational::Rational;

/// Nodes strictly inside the support interval, positive weights, and the
/// highest polynomial degree integrated exactly (`2n - 1`).
#[derive(Clone, Debug, Serialize)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub exact_degree: usize,
}

/// Total mass of the weight, `integral of rho over (a, b)`.
pub fn weight_total_mass(family: &FamilySpec) -> f64 {
    let beta_fn = |p: f64, q: f64| (ln_gamma(p) + ln_gamma(q) - ln_gamma(p + q)).exp();
    match family.name() {
        FamilyName::Hypergeometric => {
            let a = family.alpha().unwrap().to_f64();
            let b = family.beta().unwrap().to_f64();
            beta_fn(a + 1.0, b + 1.0)
        }
        FamilyName::Jacobi => {
            let a = family.alpha().unwrap().to_f64();
            let b = family.beta().unwrap().to_f64();
            2f64.powf(a + b + 1.0) * beta_fn(a + 1.0, b + 1.0)
        }
        FamilyName::Laguerre => ln_gamma(family.alpha().unwrap().to_f64() + 1.0).exp(),
        FamilyName::Hermite => std::f64::consts::PI.sqrt(),
    }
}

/// n-point Gauss rule for the family weight.
pub fn gauss_rule(family: &FamilySpec, n: usize) -> Result<QuadratureRule> {
    if n == 0 {
        return Err(Error::domain("quadrature rule needs n >= 1"));
    }

    // Monic recurrence coefficients from the exact rows.
    let mut diag = Vec::with_capacity(n);
    let mut off = Vec::with_capacity(n.saturating_sub(1));
    let mut prev_alpha: Option<Rational> = None;
    for k in 0..n {
        let (alpha_k, beta_k, gamma_k) = family.recurrence_row(k)?;
        diag.push(beta_k.to_f64());
        if let Some(pa) = prev_alpha.as_ref() {
            let b_k = gamma_k.expect("gamma exists for k >= 1") * pa;
            if !b_k.is_positive() {
                return Err(Error::internal(
                    "monic recurrence coefficient b_k must be positive",
                ));
            }
            off.push(b_k.to_f64().sqrt());
        }
        prev_alpha = Some(alpha_k);
    }

    let mut jac = DMatrix::<f64>::zeros(n, n);
    for k in 0..n {
        jac[(k, k)] = diag[k];
        if k > 0 {
            jac[(k, k - 1)] = off[k - 1];
            jac[(k - 1, k)] = off[k - 1];
        }
    }
    let eigen = nalgebra::SymmetricEigen::try_new(jac, f64::EPSILON, 50_000)
        .ok_or_else(|| Error::numeric("quadrature eigensolver did not converge"))?;

    let mass = weight_total_mass(family);
    let mut pairs: Vec<(f64, f64)> = (0..n)
        .map(|i| {
            let v0 = eigen.eigenvectors[(0, i)];
            (eigen.eigenvalues[i], mass * v0 * v0)
        })
        .collect();
    pairs.sort_by(|x, y| x.0.total_cmp(&y.0));

    let (a, b) = family.interval();
    for &(node, weight) in &pairs {
        if !(node > a && node < b) {
            return Err(Error::numeric(format!(
                "quadrature node {node} fell outside the support interval"
            )));
        }
        if !(weight > 0.0) {
            return Err(Error::numeric("quadrature produced a non-positive weight"));
        }
    }

    Ok(QuadratureRule {
        nodes: pairs.iter().map(|p| p.0).collect(),
        weights: pairs.iter().map(|p| p.1).collect(),
        exact_degree: 2 * n - 1,
    })
}

impl QuadratureRule {
    /// Integrates `f(s) rho(s) ds` for a plain sample function.
    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

/// Polynomial degree of the product `Phi_{l1,m} Phi_{l2,m}` after the
/// `kappa^{2m} = sigma^m` rewrite; the rule must integrate this exactly.
fn pair_degree(f: &Asf, g: &Asf) -> usize {
    let sigma_deg = f.family().sigma().degree().unwrap_or(0);
    (f.l() - f.m()) + (g.l() - g.m()) + sigma_deg * f.m()
}

/// Weighted inner product of two associated functions in the same `m` sector.
/// The integrand is `sigma^m P_f P_g rho`, a polynomial times the weight, so
/// a rule of sufficient exact degree evaluates it to quadrature accuracy.
/// Mismatched sectors leave an odd power of `kappa` and are rejected.
/// Conventional coefficients reach ~1e8 with alternating signs, which costs
/// plain Horner eight digits; each polynomial factor is therefore evaluated
/// in exact arithmetic at the node and rounded once.
pub fn inner_product(f: &Asf, g: &Asf, rule: &QuadratureRule) -> Result<f64> {
    if f.m() != g.m() {
        return Err(Error::domain(format!(
            "inner product needs matching sectors (got m = {} and m = {}); the leftover odd kappa power is not polynomial",
            f.m(),
            g.m()
        )));
    }
    let needed = pair_degree(f, g);
    if rule.exact_degree < needed {
        return Err(Error::domain(format!(
            "rule integrates degree <= {} but the integrand has degree {}",
            rule.exact_degree, needed
        )));
    }
    let sigma = f.family().sigma();
    let m = f.m() as i32;
    let scale = (f.scale() * g.scale()).to_f64();
    let same = std::ptr::eq(f.part(), g.part()) || f.part() == g.part();
    let mut acc = 0.0;
    for (&x, &w) in rule.nodes.iter().zip(&rule.weights) {
        let fv = f.part().eval_f64_exact(x);
        let gv = if same { fv } else { g.part().eval_f64_exact(x) };
        acc += w * sigma.eval_f64(x).powi(m) * fv * gv;
    }
    Ok(scale * acc)
}

/// Weighted inner product of two sampled functions (no sector bookkeeping);
/// exactness is then the caller's concern.
pub fn inner_product_sampled(
    f: impl Fn(f64) -> f64,
    g: impl Fn(f64) -> f64,
    rule: &QuadratureRule,
) -> f64 {
    rule.integrate(|x| f(x) * g(x))
}

/// Norm `sqrt(<phi, phi>)` with a fresh rule of sufficient degree.
pub fn norm(phi: &Asf) -> Result<f64> {
    let needed = pair_degree(phi, phi);
    let rule = gauss_rule(phi.family(), needed / 2 + 1)?;
    Ok(inner_product(phi, phi, &rule)?.sqrt())
}

/// Caching wrapper for repeated norm/inner-product work on one family.
/// Caches are mutex-guarded so sweeps may share one instance across threads.
pub struct HilbertSpace {
    family: FamilySpec,
    rules: Mutex<BTreeMap<usize, Arc<QuadratureRule>>>,
    norms: Mutex<BTreeMap<(usize, usize), f64>>,
}

impl HilbertSpace {
    pub fn new(family: FamilySpec) -> Self {
        HilbertSpace {
            family,
            rules: Mutex::new(BTreeMap::new()),
            norms: Mutex::new(BTreeMap::new()),
        }
    }

    pub fn family(&self) -> &FamilySpec {
        &self.family
    }

    /// Cached n-point rule.
    pub fn rule(&self, n: usize) -> Result<Arc<QuadratureRule>> {
        if let Some(r) = self.rules.lock().unwrap().get(&n) {
            return Ok(Arc::clone(r));
        }
        let rule = Arc::new(gauss_rule(&self.family, n)?);
        let mut guard = self.rules.lock().unwrap();
        Ok(Arc::clone(guard.entry(n).or_insert(rule)))
    }

    fn rule_for_degree(&self, degree: usize) -> Result<Arc<QuadratureRule>> {
        self.rule(degree / 2 + 1)
    }

    pub fn inner_product(&self, f: &Asf, g: &Asf) -> Result<f64> {
        let rule = self.rule_for_degree(pair_degree(f, g))?;
        inner_product(f, g, &rule)
    }

    /// Cached norm of the unit-scale `Phi_{l,m}`.
    pub fn norm(&self, l: usize, m: usize) -> Result<f64> {
        if let Some(&v) = self.norms.lock().unwrap().get(&(l, m)) {
            return Ok(v);
        }
        let phi = crate::ladder::asf(&self.family, l, m)?;
        let v = self.inner_product(&phi, &phi)?.sqrt();
        self.norms.lock().unwrap().insert((l, m), v);
        Ok(v)
    }

    /// Largest normalized off-diagonal inner product over
    /// `m <= m_max`, `m <= l < k <= l_max`.
    pub fn orthogonality_max(&self, l_max: usize, m_max: usize) -> Result<f64> {
        let mut worst: f64 = 0.0;
        for m in 0..=m_max {
            for l in m..=l_max {
                for k in (l + 1)..=l_max {
                    let f = crate::ladder::asf(&self.family, l, m)?;
                    let g = crate::ladder::asf(&self.family, k, m)?;
                    let ip = self.inner_product(&f, &g)?;
                    let rel = ip.abs() / (self.norm(l, m)? * self.norm(k, m)?);
                    worst = worst.max(rel);
                }
            }
        }
        Ok(worst)
    }

    /// Largest relative deviation of `norm(l, m+1)` from
    /// `sqrt(lambda_l - lambda_m) * norm(l, m)`.
    pub fn norm_ladder_max_dev(&self, l_max: usize, m_max: usize) -> Result<f64> {
        let mut worst: f64 = 0.0;
        for l in 1..=l_max {
            for m in 0..l.min(m_max + 1) {
                let e = (&self.family.eigenvalue(l) - &self.family.eigenvalue(m)).to_f64();
                let predicted = e.sqrt() * self.norm(l, m)?;
                let actual = self.norm(l, m + 1)?;
                worst = worst.max((actual / predicted - 1.0).abs());
            }
        }
        Ok(worst)
    }

    /// Relative adjointness defect of the raising/lowering pair:
    /// `<raise(phi_{l,m}), phi_{k,m+1}>` against `<phi_{l,m}, lower(phi_{k,m+1})>`.
    pub fn adjointness_dev(&self, l: usize, k: usize, m: usize) -> Result<f64> {
        let phi = crate::ladder::asf(&self.family, l, m)?;
        let psi = crate::ladder::asf(&self.family, k, m + 1)?;
        let lhs = self.inner_product(&crate::ladder::raise(&phi)?, &psi)?;
        let rhs = self.inner_product(&phi, &crate::ladder::lower(&psi)?)?;
        let scale = (self.norm(l, m)? * self.norm(k, m + 1)?).max(f64::MIN_POSITIVE);
        Ok((lhs - rhs).abs() / scale)
    }

    /// Rebuilds the normalized basis vector `|l, m>` by the creation chain
    /// `(a_m^+)^(l-m) |m, m> / sqrt(prod e)` realized on actual functions:
    /// the sector shift uses quadrature norm ratios, the lowering step is
    /// exact. Returns the relative coefficient deviation from the directly
    /// normalized function (sign included).
    pub fn creation_chain_dev(&self, l: usize, m: usize) -> Result<f64> {
        if l < m {
            return Err(Error::domain("creation chain needs l >= m"));
        }
        // Running representation: current function = c * Phi_{k,m}.
        let mut c = 1.0 / self.norm(m, m)?;
        for k in m..l {
            // U_m: |k,m> -> |k+1,m+1> on the normalized functions.
            c *= self.norm(k, m)? / self.norm(k + 1, m + 1)?;
            // Exact lowering: A^+ Phi_{k+1,m+1} = (lambda_{k+1} - lambda_m) Phi_{k+1,m}.
            c *= (&self.family.eigenvalue(k + 1) - &self.family.eigenvalue(m)).to_f64();
        }
        let mut denom = 1.0;
        for j in (m + 1)..=l {
            denom *= (&self.family.eigenvalue(j) - &self.family.eigenvalue(m)).to_f64();
        }
        c /= denom.sqrt();
        Ok((c * self.norm(l, m)? - 1.0).abs())
    }
}

/// Coefficient vector over the normalized basis of one `m` sector:
/// `coeffs[n]` multiplies `|m + n, m>`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BasisVector {
    pub m: usize,
    pub coeffs: Vec<f64>,
    pub truncation: usize,
}

pub const DEFAULT_TRUNCATION: usize = 64;

impl BasisVector {
    pub fn zero(m: usize, truncation: usize) -> Self {
        BasisVector {
            m,
            coeffs: vec![0.0; truncation],
            truncation,
        }
    }

    /// Unit vector `|l, m>`; requires `l >= m` and room below the truncation.
    pub fn basis_state(m: usize, l: usize, truncation: usize) -> Result<Self> {
        if l < m {
            return Err(Error::domain(format!(
                "basis state needs l >= m (got l = {l}, m = {m})"
            )));
        }
        if l - m >= truncation {
            return Err(Error::domain(format!(
                "basis state level {l} does not fit below truncation {truncation}"
            )));
        }
        let mut v = BasisVector::zero(m, truncation);
        v.coeffs[l - m] = 1.0;
        Ok(v)
    }

    pub fn dot(&self, other: &BasisVector) -> Result<f64> {
        if self.m != other.m {
            return Err(Error::domain("dot product needs matching sectors"));
        }
        Ok(self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a * b)
            .sum())
    }

    pub fn norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    fn map_scaled(&self, f: impl Fn(usize, f64) -> f64) -> BasisVector {
        BasisVector {
            m: self.m,
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, &c)| f(n, c))
                .collect(),
            truncation: self.truncation,
        }
    }

    /// Max absolute coefficient difference (sectors must match).
    pub fn max_dev(&self, other: &BasisVector) -> f64 {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0.0);
                let b = other.coeffs.get(i).copied().unwrap_or(0.0);
                (a - b).abs()
            })
            .fold(0.0, f64::max)
    }
}

fn level_gap(family: &FamilySpec, m: usize, n: usize) -> f64 {
    (&family.eigenvalue(m + n) - &family.eigenvalue(m)).to_f64()
}

/// `a_m |l, m> = sqrt(lambda_l - lambda_m) |l-1, m>`; the bottom state maps
/// to zero, so the output loses one slot.
pub fn annihilate(family: &FamilySpec, v: &BasisVector) -> BasisVector {
    let len = v.coeffs.len().saturating_sub(1);
    let mut out = vec![0.0; len];
    for n in 1..v.coeffs.len() {
        out[n - 1] = level_gap(family, v.m, n).sqrt() * v.coeffs[n];
    }
    BasisVector {
        m: v.m,
        coeffs: out,
        truncation: v.truncation,
    }
}

/// `a_m^+ |l, m> = sqrt(lambda_{l+1} - lambda_m) |l+1, m>`; the vector is
/// extended rather than truncated, so no amplitude is dropped.
pub fn create(family: &FamilySpec, v: &BasisVector) -> BasisVector {
    let mut out = vec![0.0; v.coeffs.len() + 1];
    for n in 0..v.coeffs.len() {
        out[n + 1] = level_gap(family, v.m, n + 1).sqrt() * v.coeffs[n];
    }
    BasisVector {
        m: v.m,
        coeffs: out,
        truncation: v.truncation.max(v.coeffs.len() + 1),
    }
}

/// Unitary sector shift `U_m |l, m> = |l+1, m+1>` (direction +1) and its
/// inverse (direction -1, rejected at `m = 0`). Coefficients are untouched
/// because the level offset `n = l - m` is preserved.
pub fn shift_u(v: &BasisVector, direction: i32) -> Result<BasisVector> {
    let m = match direction {
        1 => v.m + 1,
        -1 => {
            if v.m == 0 {
                return Err(Error::domain("sector shift below m = 0"));
            }
            v.m - 1
        }
        other => {
            return Err(Error::domain(format!(
                "sector shift direction must be +1 or -1 (got {other})"
            )))
        }
    };
    Ok(BasisVector {
        m,
        coeffs: v.coeffs.clone(),
        truncation: v.truncation,
    })
}

/// `R_m` acts diagonally as `-sigma'' l - tau'` on `|l, m>`.
fn apply_r(family: &FamilySpec, v: &BasisVector) -> BasisVector {
    let spp = family.sigma_pp().to_f64();
    let tp = family.tau_p().to_f64();
    v.map_scaled(|n, c| (-spp * ((v.m + n) as f64) - tp) * c)
}

#[derive(Clone, Debug, Serialize)]
pub struct CommutatorIdentity {
    pub name: String,
    pub exact: bool,
    pub max_coeff_dev: f64,
}

/// Commutator suite for one sector. Each identity is checked two ways: the
/// scalar form in exact rational arithmetic over `m <= l <= l_max`, and the
/// coefficient form by applying the floating-point operators to every basis
/// state below the truncation.
#[derive(Clone, Debug, Serialize)]
pub struct CommutatorReport {
    pub family: String,
    pub m: usize,
    pub l_max: usize,
    pub identities: Vec<CommutatorIdentity>,
}

impl CommutatorReport {
    pub fn passed(&self, coeff_tol: f64) -> bool {
        self.identities
            .iter()
            .all(|i| i.exact && i.max_coeff_dev <= coeff_tol)
    }
}

pub fn commutator_checks(family: &FamilySpec, m: usize, l_max: usize) -> Result<CommutatorReport> {
    let spp = family.sigma_pp();
    let tp = family.tau_p();
    let r_scalar = |l: usize| -> Rational { -(&(Rational::from(l) * spp.clone())) - tp.clone() };

    // Scalar identities, exact.
    let mut aadag_exact = true;
    let mut adag_r_exact = true;
    let mut a_r_exact = true;
    let mut h_ladder_exact = true;
    let mut conjugation_exact = true;
    for l in m..=l_max {
        let e_up = &family.eigenvalue(l + 1) - &family.eigenvalue(m);
        let e_dn = &family.eigenvalue(l) - &family.eigenvalue(m);
        // [a, a+] |l> = (e_up - e_dn) |l> must equal R |l>.
        aadag_exact &= (&e_up - &e_dn) == r_scalar(l);
        // [a+, R] = sigma'' a+ : on |l> the scalar gap is r(l) - r(l+1).
        adag_r_exact &= (&r_scalar(l) - &r_scalar(l + 1)) == spp;
        // [a, R] = -sigma'' a : gap r(l) - r(l-1) for l > m.
        if l > m {
            a_r_exact &= (&r_scalar(l) - &r_scalar(l - 1)) == -(&spp);
        }
        // [H, a+] = R a+ and [H, a] = -R a reduce to the sector shift.
        h_ladder_exact &=
            (&family.eigenvalue(l + 1) - &family.eigenvalue(l)) == r_scalar(l);
        // U R U+ = R_{m+1} + sigma'' : r(l-1) = r(l) + sigma''.
        if l >= 1 {
            conjugation_exact &= r_scalar(l - 1) == (r_scalar(l) + spp.clone());
        }
        // Number-operator factorization: both ladder amplitudes at level l
        // square to the same exact eigenvalue gap.
        let n = l - m;
        if n >= 1 {
            let from_annihilate = &family.eigenvalue(m + n) - &family.eigenvalue(m);
            let from_create = &family.eigenvalue(m + (n - 1) + 1) - &family.eigenvalue(m);
            aadag_exact &= from_annihilate == from_create && from_annihilate == e_dn;
        }
    }

    // Coefficient identities on every basis state below the truncation.
    let trunc = (l_max - m + 2).max(8);
    let mut dev_aadag: f64 = 0.0;
    let mut dev_adag_r: f64 = 0.0;
    let mut dev_a_r: f64 = 0.0;
    let mut dev_conj: f64 = 0.0;
    for l in m..=l_max {
        let v = BasisVector::basis_state(m, l, trunc)?;
        // [a, a+] v = R v
        let lhs = {
            let up = create(family, &v);
            let down = annihilate(family, &v);
            let a_then = annihilate(family, &up);
            let then_a = create(family, &down);
            BasisVector {
                m,
                coeffs: (0..a_then.coeffs.len().max(then_a.coeffs.len()))
                    .map(|i| {
                        a_then.coeffs.get(i).copied().unwrap_or(0.0)
                            - then_a.coeffs.get(i).copied().unwrap_or(0.0)
                    })
                    .collect(),
                truncation: trunc,
            }
        };
        dev_aadag = dev_aadag.max(lhs.max_dev(&apply_r(family, &v)));

        // [a+, R] v = sigma'' a+ v
        let lhs = {
            let x = create(family, &apply_r(family, &v));
            let y = apply_r(family, &create(family, &v));
            BasisVector {
                m,
                coeffs: x
                    .coeffs
                    .iter()
                    .zip(&y.coeffs)
                    .map(|(a, b)| a - b)
                    .collect(),
                truncation: trunc,
            }
        };
        let rhs = {
            let spp64 = spp.to_f64();
            let up = create(family, &v);
            up.map_scaled(|_, c| spp64 * c)
        };
        dev_adag_r = dev_adag_r.max(lhs.max_dev(&rhs));

        // [a, R] v = -sigma'' a v
        let lhs = {
            let x = annihilate(family, &apply_r(family, &v));
            let y = apply_r(family, &annihilate(family, &v));
            BasisVector {
                m,
                coeffs: x
                    .coeffs
                    .iter()
                    .zip(&y.coeffs)
                    .map(|(a, b)| a - b)
                    .collect(),
                truncation: trunc,
            }
        };
        let rhs = {
            let spp64 = spp.to_f64();
            let down = annihilate(family, &v);
            down.map_scaled(|_, c| -spp64 * c)
        };
        dev_a_r = dev_a_r.max(lhs.max_dev(&rhs));

        // U R_m U+ = R_{m+1} + sigma'' on the (m+1) sector.
        let w = shift_u(&v, 1)?;
        let lhs = shift_u(&apply_r(family, &shift_u(&w, -1)?), 1)?;
        let spp64 = spp.to_f64();
        let rhs = {
            let shifted = apply_r(family, &w);
            shifted.map_scaled(|n, c| c + spp64 * w.coeffs[n])
        };
        dev_conj = dev_conj.max(lhs.max_dev(&rhs));
    }

    Ok(CommutatorReport {
        family: family.id(),
        m,
        l_max,
        identities: vec![
            CommutatorIdentity {
                name: "commutator-number".into(),
                exact: aadag_exact,
                max_coeff_dev: dev_aadag,
            },
            CommutatorIdentity {
                name: "create-r".into(),
                exact: adag_r_exact,
                max_coeff_dev: dev_adag_r,
            },
            CommutatorIdentity {
                name: "annihilate-r".into(),
                exact: a_r_exact,
                max_coeff_dev: dev_a_r,
            },
            CommutatorIdentity {
                name: "hamiltonian-ladder".into(),
                exact: h_ladder_exact,
                max_coeff_dev: 0.0,
            },
            CommutatorIdentity {
                name: "sector-conjugation".into(),
                exact: conjugation_exact,
                max_coeff_dev: dev_conj,
            },
        ],
    })
}

/// Lie algebra generated by `(a_m, a_m^+, R_m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AlgebraClass {
    /// `sigma'' < 0`: rescaled generators close su(1,1).
    SuOneOne,
    /// `sigma'' = 0`: `R_m` is central, Heisenberg-Weyl.
    HeisenbergWeyl,
}

/// Classifies the operator algebra by the sign of `sigma''` and verifies the
/// closure relations of the rescaled generators exactly over a level sweep.
pub fn classify_algebra(family: &FamilySpec) -> Result<AlgebraClass> {
    let spp = family.sigma_pp();
    let r_scalar = |l: usize| -> Rational {
        -(&(Rational::from(l) * spp.clone())) - family.tau_p().clone()
    };
    if spp.is_positive() {
        return Err(Error::domain("sigma'' > 0 is outside the classification"));
    }
    if spp.is_zero() {
        // R is central: r(l) constant in l.
        for l in 0..32 {
            if r_scalar(l) != r_scalar(l + 1) {
                return Err(Error::internal("R failed to be central with sigma'' = 0"));
            }
        }
        return Ok(AlgebraClass::HeisenbergWeyl);
    }
    // sigma'' < 0. K_0 = (-1/sigma'') R, K_+- = sqrt(-2/sigma'') a^+-:
    // [K_0, K_+] = K_+ reduces to (r(l+1) - r(l)) = -sigma'',
    // [K_0, K_-] = -K_- to (r(l-1) - r(l)) = sigma'', and with those scales
    // [K_+, K_-] = -2 K_0 reduces to lambda_{l+1} - lambda_l = r(l).
    for l in 0..32usize {
        if (&r_scalar(l + 1) - &r_scalar(l)) != -(&spp) {
            return Err(Error::internal("su(1,1) raising relation failed"));
        }
        if l >= 1 && (&r_scalar(l - 1) - &r_scalar(l)) != spp {
            return Err(Error::internal("su(1,1) lowering relation failed"));
        }
        if (&family.eigenvalue(l + 1) - &family.eigenvalue(l)) != r_scalar(l) {
            return Err(Error::internal("su(1,1) closure relation failed"));
        }
    }
    Ok(AlgebraClass::SuOneOne)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ladder::asf;
    use approx::assert_abs_diff_eq;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn legendre() -> FamilySpec {
        FamilySpec::jacobi(Rational::zero(), Rational::zero()).unwrap()
    }

    #[test]
    fn one_point_rule_is_midpoint_with_full_mass() {
        let rule = gauss_rule(&legendre(), 1).unwrap();
        assert_abs_diff_eq!(rule.nodes[0], 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(rule.weights[0], 2.0, epsilon = 1e-14);
        assert_eq!(rule.exact_degree, 1);
    }

    #[test]
    fn legendre_rule_integrates_high_even_power_exactly() {
        // integral of s^8 over (-1,1) with rho = 1 is 2/9; n = 5 covers deg 9.
        let rule = gauss_rule(&legendre(), 5).unwrap();
        let val = rule.integrate(|x| x.powi(8));
        assert_abs_diff_eq!(val, 2.0 / 9.0, epsilon = 1e-13);
    }

    #[test]
    fn hermite_rule_mass_and_second_moment() {
        let f = FamilySpec::hermite().unwrap();
        let rule = gauss_rule(&f, 3).unwrap();
        let pi_sqrt = std::f64::consts::PI.sqrt();
        assert_abs_diff_eq!(rule.integrate(|_| 1.0), pi_sqrt, epsilon = 1e-12);
        assert_abs_diff_eq!(rule.integrate(|x| x * x), pi_sqrt / 2.0, epsilon = 1e-12);
    }

    #[test]
    fn laguerre_rule_first_moments() {
        let f = FamilySpec::laguerre(Rational::zero()).unwrap();
        let rule = gauss_rule(&f, 2).unwrap();
        for (k, expect) in [1.0, 1.0, 2.0, 6.0].iter().enumerate() {
            assert_abs_diff_eq!(
                rule.integrate(|x| x.powi(k as i32)),
                *expect,
                epsilon = 1e-12
            );
        }
    }

    #[test]
    fn norms_match_exact_values() {
        let f = legendre();
        let space = HilbertSpace::new(f.clone());
        // ||Phi_0|| = sqrt(2), ||Phi_2||^2 = 2/5, <Phi_21, Phi_21> = 12/5.
        assert_abs_diff_eq!(space.norm(0, 0).unwrap(), 2f64.sqrt(), epsilon = 1e-13);
        assert_abs_diff_eq!(
            space.norm(2, 0).unwrap().powi(2),
            0.4,
            epsilon = 1e-13
        );
        let a21 = asf(&f, 2, 1).unwrap();
        assert_abs_diff_eq!(
            space.inner_product(&a21, &a21).unwrap(),
            2.4,
            epsilon = 1e-13
        );
    }

    #[test]
    fn norm_cache_is_consistent_with_free_function() {
        let f = FamilySpec::laguerre(q(5, 2)).unwrap();
        let space = HilbertSpace::new(f.clone());
        let phi = asf(&f, 6, 2).unwrap();
        let free = norm(&phi).unwrap();
        let cached = space.norm(6, 2).unwrap();
        assert_abs_diff_eq!(free, cached, epsilon = free.abs() * 1e-13);
    }

    /// Independent oracle: h_l satisfies the exact ratio h_l/h_{l-1} =
    /// gamma_l / alpha_{l-1} from the recurrence, so quadrature norms must
    /// follow the same exact cascade starting at the total mass.
    #[test]
    fn norms_follow_exact_recurrence_cascade() {
        for f in [
            legendre(),
            FamilySpec::jacobi(q(3, 2), q(1, 2)).unwrap(),
            FamilySpec::laguerre(q(5, 2)).unwrap(),
            FamilySpec::hermite().unwrap(),
        ] {
            let space = HilbertSpace::new(f.clone());
            let mut h = weight_total_mass(&f); // ||Phi_0||^2 (B_0 = 1)
            assert_abs_diff_eq!(
                space.norm(0, 0).unwrap().powi(2),
                h,
                epsilon = h * 1e-12
            );
            let mut prev_alpha = f.recurrence_row(0).unwrap().0;
            for l in 1..=10usize {
                let (al, _, gl) = f.recurrence_row(l).unwrap();
                h *= (gl.unwrap() / prev_alpha).to_f64();
                prev_alpha = al;
                let measured = space.norm(l, 0).unwrap().powi(2);
                assert_abs_diff_eq!(measured, h, epsilon = h * 1e-11);
            }
        }
    }

    #[test]
    fn mismatched_sectors_and_small_rules_are_rejected() {
        let f = legendre();
        let a = asf(&f, 3, 1).unwrap();
        let b = asf(&f, 3, 2).unwrap();
        let rule = gauss_rule(&f, 8).unwrap();
        assert!(inner_product(&a, &b, &rule).is_err());
        let tiny = gauss_rule(&f, 2).unwrap();
        assert!(inner_product(&a, &a, &tiny).is_err());
    }

    #[test]
    fn annihilation_amplitude_hermite() {
        // Hermite m=0: a|l,0> = sqrt(2l) |l-1,0>.
        let f = FamilySpec::hermite().unwrap();
        let v = BasisVector::basis_state(0, 3, 8).unwrap();
        let down = annihilate(&f, &v);
        assert_abs_diff_eq!(down.coeffs[2], 6f64.sqrt(), epsilon = 1e-15);
        let up = create(&f, &v);
        assert_abs_diff_eq!(up.coeffs[4], 8f64.sqrt(), epsilon = 1e-15);
        // Bottom state annihilates to zero.
        let bottom = BasisVector::basis_state(0, 0, 4).unwrap();
        assert_eq!(annihilate(&f, &bottom).norm(), 0.0);
    }

    #[test]
    fn create_extends_instead_of_dropping() {
        let f = FamilySpec::hermite().unwrap();
        let mut v = BasisVector::zero(0, 3);
        v.coeffs[2] = 1.0;
        let up = create(&f, &v);
        assert_eq!(up.coeffs.len(), 4);
        assert!(up.truncation >= 4);
        assert!(up.coeffs[3] != 0.0);
    }

    #[test]
    fn shift_u_moves_sector_and_rejects_floor() {
        let v = BasisVector::basis_state(1, 3, 8).unwrap();
        let up = shift_u(&v, 1).unwrap();
        assert_eq!(up.m, 2);
        assert_eq!(up.coeffs, v.coeffs);
        let down = shift_u(&v, -1).unwrap();
        assert_eq!(down.m, 0);
        assert!(shift_u(&down, -1).is_err());
        assert!(shift_u(&v, 2).is_err());
    }

    #[test]
    fn adjointness_on_random_vectors() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let f = legendre();
        let mut rng = StdRng::seed_from_u64(0x5eed);
        for m in 0..3usize {
            let mut u = BasisVector::zero(m, 12);
            let mut v = BasisVector::zero(m, 12);
            for i in 0..12 {
                u.coeffs[i] = rng.gen_range(-1.0..1.0);
                v.coeffs[i] = rng.gen_range(-1.0..1.0);
            }
            let lhs = {
                let cu = create(&f, &u);
                cu.coeffs
                    .iter()
                    .zip(v.coeffs.iter().chain(std::iter::repeat(&0.0)))
                    .map(|(a, b)| a * b)
                    .sum::<f64>()
            };
            let rhs = {
                let av = annihilate(&f, &v);
                u.coeffs
                    .iter()
                    .zip(av.coeffs.iter())
                    .map(|(a, b)| a * b)
                    .sum::<f64>()
            };
            assert_abs_diff_eq!(lhs, rhs, epsilon = 1e-12);
        }
    }

    #[test]
    fn commutator_suite_passes_for_matrix() {
        for f in [
            FamilySpec::hypergeometric(q(1, 2), q(1, 2)).unwrap(),
            legendre(),
            FamilySpec::laguerre(q(5, 2)).unwrap(),
            FamilySpec::hermite().unwrap(),
        ] {
            for m in 0..3usize {
                let rep = commutator_checks(&f, m, 20).unwrap();
                assert!(rep.passed(1e-12), "{} m={m}: {rep:?}", f.id());
            }
        }
    }

    #[test]
    fn hermite_r_is_constant_two() {
        let f = FamilySpec::hermite().unwrap();
        let v = BasisVector::basis_state(0, 5, 8).unwrap();
        let rv = apply_r(&f, &v);
        assert_abs_diff_eq!(rv.coeffs[5], 2.0, epsilon = 0.0);
    }

    #[test]
    fn algebra_classification() {
        assert_eq!(
            classify_algebra(&legendre()).unwrap(),
            AlgebraClass::SuOneOne
        );
        assert_eq!(
            classify_algebra(&FamilySpec::hypergeometric(q(1, 2), q(3, 2)).unwrap()).unwrap(),
            AlgebraClass::SuOneOne
        );
        assert_eq!(
            classify_algebra(&FamilySpec::laguerre(Rational::zero()).unwrap()).unwrap(),
            AlgebraClass::HeisenbergWeyl
        );
        assert_eq!(
            classify_algebra(&FamilySpec::hermite().unwrap()).unwrap(),
            AlgebraClass::HeisenbergWeyl
        );
    }

    #[test]
    fn creation_chain_reproduces_normalized_state() {
        let f = legendre();
        let space = HilbertSpace::new(f);
        for (l, m) in [(3, 0), (5, 2), (4, 4)] {
            assert!(space.creation_chain_dev(l, m).unwrap() < 1e-10);
        }
    }
}
