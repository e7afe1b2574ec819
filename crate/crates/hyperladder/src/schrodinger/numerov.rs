//! Independent eigenvalue oracle: Numerov sweeps with node-count bisection
//! over a sampled potential, cross-checked on a step-doubled subgrid.

use super::PotentialProfile;
use crate::error::{Error, Result};
use crate::family::FamilySpec;

const CLIP_THRESHOLD: f64 = 1e3;

/// Reference eigenvalues of the sector-m problem: `lambda_{m+k}`.
pub fn analytic_levels(family: &FamilySpec, m: usize, count: usize) -> Vec<f64> {
    (0..count)
        .map(|k| family.eigenvalue(m + k).to_f64())
        .collect()
}

/// Counts sign changes of the shooting solution for energy `e`, walls one
/// step outside the sampled window (y = 0 there), closing with the boundary
/// combination that is a positive multiple of y at the right wall.
fn node_count(v: &[f64], h: f64, e: f64) -> usize {
    let n = v.len();
    let c = h * h / 12.0;
    let t = |i: usize| c * (v[i] - e);
    let mut y_prev = 0.0f64; // left wall
    let mut y_cur = 1e-10f64;
    let mut t_prev = 0.0f64; // multiplied by the wall zero, never used
    let mut t_cur = t(0);
    let mut sign = 1i32;
    let mut nodes = 0usize;
    let mut closer = 0.0f64;
    for i in 1..=n {
        let value = 2.0 * y_cur * (1.0 + 5.0 * t_cur) - y_prev * (1.0 - t_prev);
        let y_next = if i < n { value / (1.0 - t(i)) } else { value };
        if i == n {
            closer = y_next;
            break;
        }
        if y_next != 0.0 {
            let s = if y_next > 0.0 { 1 } else { -1 };
            if s != sign {
                nodes += 1;
                sign = s;
            }
        }
        y_prev = y_cur;
        t_prev = t_cur;
        y_cur = y_next;
        t_cur = t(i);
        if y_cur.abs() > 1e250 {
            let inv = y_cur.abs().recip();
            y_cur *= inv;
            y_prev *= inv;
        }
    }
    if closer != 0.0 {
        let s = if closer > 0.0 { 1 } else { -1 };
        if s != sign {
            nodes += 1;
        }
    }
    nodes
}

/// Level k as the node-count transition point k -> k+1 in energy.
fn bisect_level(v: &[f64], h: f64, k: usize) -> Result<f64> {
    let vmin = v.iter().cloned().fold(f64::INFINITY, f64::min);
    let mut lo = vmin - 1.0;
    let mut hi = lo;
    let mut step = 1.0f64;
    let mut found = false;
    for _ in 0..70 {
        hi += step;
        step *= 2.0;
        if node_count(v, h, hi) >= k + 1 {
            found = true;
            break;
        }
        lo = hi;
    }
    if !found {
        return Err(Error::numeric(format!(
            "level {k} not bracketed below E = {hi}"
        )));
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= 1e-12 * mid.abs().max(1.0) {
            break;
        }
        if node_count(v, h, mid) >= k + 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

fn solve_all(v: &[f64], h: f64, count: usize) -> Result<Vec<f64>> {
    (0..count).map(|k| bisect_level(v, h, k)).collect()
}

fn uniform_spacing(grid: &[f64]) -> Result<f64> {
    if grid.len() < 11 {
        return Err(Error::domain("grid too short for the eigenvalue oracle"));
    }
    let h = grid[1] - grid[0];
    if !(h > 0.0)
        || grid
            .windows(2)
            .any(|w| ((w[1] - w[0]) - h).abs() > 1e-9 * h)
    {
        return Err(Error::domain(
            "eigenvalue oracle needs a uniform strictly increasing grid",
        ));
    }
    Ok(h)
}

fn pick_window(
    profile: &PotentialProfile,
    clip: Option<(f64, f64)>,
    threshold: f64,
    count: usize,
) -> Result<(usize, usize)> {
    let grid = &profile.grid;
    let v = &profile.values;
    let (mut i_lo, mut i_hi) = match clip {
        Some((lo, hi)) => {
            if !(lo < hi) {
                return Err(Error::domain("clip window must satisfy lo < hi"));
            }
            let i_lo = grid.iter().position(|&x| x >= lo);
            let i_hi = grid.iter().rposition(|&x| x <= hi);
            match (i_lo, i_hi) {
                (Some(a), Some(b)) if a < b => (a, b),
                _ => return Err(Error::domain("clip window misses the grid")),
            }
        }
        None => {
            let start = (0..v.len())
                .filter(|&i| v[i].is_finite())
                .min_by(|&a, &b| v[a].total_cmp(&v[b]))
                .ok_or_else(|| Error::numeric("potential has no finite samples"))?;
            let mut a = start;
            let mut b = start;
            while a > 0 && v[a - 1].is_finite() && v[a - 1] <= threshold {
                a -= 1;
            }
            while b + 1 < v.len() && v[b + 1].is_finite() && v[b + 1] <= threshold {
                b += 1;
            }
            (a, b)
        }
    };
    // Odd sample count keeps the step-doubled subgrid wall-aligned.
    if (i_hi - i_lo + 1) % 2 == 0 {
        if v[i_lo] > v[i_hi] {
            i_lo += 1;
        } else {
            i_hi -= 1;
        }
    }
    if i_hi - i_lo + 1 < (2 * count + 9).max(11) {
        return Err(Error::domain(
            "integration window has too few points for the requested levels",
        ));
    }
    for i in i_lo..=i_hi {
        if profile.flagged.contains(&i) || !v[i].is_finite() {
            return Err(Error::numeric(
                "potential is singular inside the integration window",
            ));
        }
    }
    Ok((i_lo, i_hi))
}

fn solve_window(
    profile: &PotentialProfile,
    h: f64,
    window: (usize, usize),
    count: usize,
) -> Result<Vec<f64>> {
    let (i_lo, i_hi) = window;
    let fine: Vec<f64> = profile.values[i_lo..=i_hi].to_vec();
    let levels = solve_all(&fine, h, count)?;
    // Every second sample starting one inside the window shares the same
    // physical wall positions at spacing 2h.
    let coarse: Vec<f64> = (i_lo + 1..i_hi).step_by(2).map(|i| profile.values[i]).collect();
    let doubled = solve_all(&coarse, 2.0 * h, count)?;
    for (k, (a, b)) in levels.iter().zip(&doubled).enumerate() {
        if (a - b).abs() > 1e-7 * a.abs().max(1.0) {
            return Err(Error::numeric(format!(
                "level {k} failed the step-halving consistency check ({a} vs {b})"
            )));
        }
    }
    Ok(levels)
}

/// First `count` eigenvalues of the sampled potential. `clip` restricts the
/// integration window explicitly; otherwise the window grows from the
/// potential minimum while V stays below an automatic threshold (raised and
/// re-solved once if the spectrum reaches too close to it). Dirichlet walls
/// sit one grid spacing outside the window, and every level must agree with
/// its step-doubled recomputation.
pub fn numerov_eigenvalues(
    profile: &PotentialProfile,
    count: usize,
    clip: Option<(f64, f64)>,
) -> Result<Vec<f64>> {
    if count == 0 {
        return Err(Error::domain("at least one level must be requested"));
    }
    let h = uniform_spacing(&profile.grid)?;
    let window = pick_window(profile, clip, CLIP_THRESHOLD, count)?;
    let levels = solve_window(profile, h, window, count)?;
    let top = levels.iter().fold(0.0f64, |a, e| a.max(e.abs()));
    if clip.is_none() && 50.0 * top > CLIP_THRESHOLD {
        let retry = pick_window(profile, None, 50.0 * top, count)?;
        if retry != window {
            return solve_window(profile, h, retry, count);
        }
    }
    Ok(levels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FamilySpec;
    use crate::rational::Rational;
    use crate::schrodinger::{change_of_variable, potential, uniform_grid};
    use std::f64::consts::PI;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn constant_well_levels_are_exact_well_levels() {
        // alpha = beta = 1/2 gives V = -1 on (0, pi): levels l(l + 2).
        let family = FamilySpec::jacobi(q(1, 2), q(1, 2)).unwrap();
        let cov = change_of_variable(&family, -1).unwrap();
        let grid = uniform_grid(0.0, PI, 4001);
        let prof = potential(&cov, 0, &grid).unwrap();
        let levels = numerov_eigenvalues(&prof, 3, None).unwrap();
        for (e, want) in levels.iter().zip(analytic_levels(&family, 0, 3)) {
            assert!((e - want).abs() <= 1e-6, "{e} vs {want}");
        }
    }

    #[test]
    fn trig_potential_levels_match_the_eigenvalue_formula() {
        let family = FamilySpec::jacobi(q(3, 2), q(3, 2)).unwrap();
        let cov = change_of_variable(&family, -1).unwrap();
        let grid = uniform_grid(0.0, PI, 8001);
        let prof = potential(&cov, 0, &grid).unwrap();
        let levels = numerov_eigenvalues(&prof, 3, Some((2e-3, PI - 2e-3))).unwrap();
        for (e, want) in levels.iter().zip([0.0, 5.0, 12.0]) {
            assert!((e - want).abs() <= 1e-6, "{e} vs {want}");
        }
    }

    #[test]
    fn oscillator_levels_are_even_integers() {
        let family = FamilySpec::hermite().unwrap();
        let cov = change_of_variable(&family, 1).unwrap();
        let grid = uniform_grid(-12.0, 12.0, 4001);
        let prof = potential(&cov, 0, &grid).unwrap();
        let levels = numerov_eigenvalues(&prof, 3, None).unwrap();
        for (e, want) in levels.iter().zip([0.0, 2.0, 4.0]) {
            assert!((e - want).abs() <= 1e-6, "{e} vs {want}");
        }
    }

    #[test]
    fn radial_levels_are_integers() {
        let family = FamilySpec::laguerre(q(5, 2)).unwrap();
        let cov = change_of_variable(&family, 1).unwrap();
        let grid = uniform_grid(0.0, 16.0, 4001);
        let prof = potential(&cov, 0, &grid).unwrap();
        let levels = numerov_eigenvalues(&prof, 3, None).unwrap();
        for (e, want) in levels.iter().zip([0.0, 1.0, 2.0]) {
            assert!((e - want).abs() <= 1e-5, "{e} vs {want}");
        }
    }

    #[test]
    fn bad_requests_are_rejected() {
        let family = FamilySpec::hermite().unwrap();
        let cov = change_of_variable(&family, 1).unwrap();
        let grid = uniform_grid(-8.0, 8.0, 501);
        let prof = potential(&cov, 0, &grid).unwrap();
        assert!(numerov_eigenvalues(&prof, 0, None).is_err());
        assert!(numerov_eigenvalues(&prof, 1, Some((3.0, 3.01))).is_err());
        assert!(numerov_eigenvalues(&prof, 1, Some((5.0, 4.0))).is_err());

        let mut warped = prof.clone();
        warped.grid[250] += 1e-3;
        assert!(numerov_eigenvalues(&warped, 1, None).is_err());

        let mut singular = prof;
        singular.values[250] = f64::NAN;
        singular.flagged.push(250);
        assert!(numerov_eigenvalues(&singular, 1, None).is_err());
    }
}
