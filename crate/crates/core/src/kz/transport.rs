//! Parallel transport along configuration paths.
//!
//! Solves `U' = A(t) U`, `U(0) = I` with classical fixed-step RK4, where
//! `A(t) = h Σ_{i<j} Ω_ij (ż_i - ż_j) / (z_i - z_j)`. Every run is done twice,
//! at the requested step count and at double it; the Frobenius distance
//! between the two results is reported as the error estimate and the finer
//! matrix is returned. Point separations are checked at every evaluation
//! against the path's declared clearance.

use num_complex::Complex64;

use super::cmatrix::ComplexMatrix;
use super::path::{braid_path, ConfigPath, Segment};
use super::{KzConfig, KzError};

#[derive(Clone, Debug)]
pub struct Transport {
    /// Fundamental solution from the finer of the two runs.
    pub matrix: ComplexMatrix,
    /// Frobenius distance between the half-step and full-step runs.
    pub error_estimate: f64,
    /// Steps per segment actually used for `matrix` (twice the request).
    pub steps_per_segment: usize,
    /// Smallest pairwise separation seen at any evaluation point.
    pub min_separation: f64,
}

fn connection_at(
    config: &KzConfig,
    omegas: &[ComplexMatrix],
    clearance: f64,
    segment_index: usize,
    seg: &Segment,
    t: f64,
    min_sep: &mut f64,
) -> Result<ComplexMatrix, KzError> {
    let z = seg.points_at(t);
    let v = seg.velocities_at(t);
    let n = config.n();
    let mut a = ComplexMatrix::zeros(config.dim_total());
    let mut pair = 0usize;
    for i in 0..n {
        for j in i + 1..n {
            let dz = z[i] - z[j];
            let sep = dz.norm();
            if sep < *min_sep {
                *min_sep = sep;
            }
            if sep < clearance {
                return Err(KzError::TooClose { segment: segment_index, t, separation: sep });
            }
            let dv = v[i] - v[j];
            if dv.re != 0.0 || dv.im != 0.0 {
                let coeff = dv / dz * config.h();
                a = a.add(&omegas[pair].scale(coeff));
            }
            pair += 1;
        }
    }
    Ok(a)
}

fn integrate(
    config: &KzConfig,
    omegas: &[ComplexMatrix],
    path: &ConfigPath,
    steps: usize,
) -> Result<(ComplexMatrix, f64), KzError> {
    let mut u = ComplexMatrix::identity(config.dim_total());
    let mut min_sep = f64::INFINITY;
    let clearance = path.clearance();
    for (si, seg) in path.segments().iter().enumerate() {
        let dt = 1.0 / steps as f64;
        for k in 0..steps {
            let t0 = k as f64 / steps as f64;
            let t1 = (k + 1) as f64 / steps as f64;
            let tm = t0 + 0.5 * dt;
            let a0 = connection_at(config, omegas, clearance, si, seg, t0, &mut min_sep)?;
            let am = connection_at(config, omegas, clearance, si, seg, tm, &mut min_sep)?;
            let a1 = connection_at(config, omegas, clearance, si, seg, t1, &mut min_sep)?;
            let k1 = a0.mul(&u);
            let k2 = am.mul(&u.add(&k1.scale(Complex64::new(0.5 * dt, 0.0))));
            let k3 = am.mul(&u.add(&k2.scale(Complex64::new(0.5 * dt, 0.0))));
            let k4 = a1.mul(&u.add(&k3.scale(Complex64::new(dt, 0.0))));
            let two = Complex64::new(2.0, 0.0);
            let sum = k1.add(&k2.scale(two)).add(&k3.scale(two)).add(&k4);
            u = u.add(&sum.scale(Complex64::new(dt / 6.0, 0.0)));
        }
    }
    Ok((u, min_sep))
}

/// Transports the identity along `path`. `steps_per_segment` must be
/// positive; the result reports the doubled-step matrix together with the
/// step-halving error estimate.
pub fn transport(
    config: &KzConfig,
    path: &ConfigPath,
    steps_per_segment: usize,
) -> Result<Transport, KzError> {
    if steps_per_segment == 0 {
        return Err(KzError::Steps);
    }
    if path.n_points() != config.n() {
        return Err(KzError::PointCount { expected: config.n(), found: path.n_points() });
    }
    let omegas = config.omegas_numeric();
    let (coarse, _) = integrate(config, &omegas, path, steps_per_segment)?;
    let (fine, min_separation) = integrate(config, &omegas, path, steps_per_segment * 2)?;
    let error_estimate = fine.sub(&coarse).frobenius_norm();
    Ok(Transport {
        matrix: fine,
        error_estimate,
        steps_per_segment: steps_per_segment * 2,
        min_separation,
    })
}

#[derive(Clone, Debug)]
pub struct BraidRelationReport {
    /// Frobenius distance between the two transports.
    pub distance: f64,
    pub tolerance: f64,
    pub pass: bool,
    /// Step-halving estimates for the two runs.
    pub error_estimates: [f64; 2],
}

/// Transports along the two sides of the braid relation
/// `sigma_1 sigma_2 sigma_1 = sigma_2 sigma_1 sigma_2` and compares. The two
/// paths share endpoints and are homotopic, so a flat connection must give
/// matching transports up to integration error.
pub fn braid_relation_check(
    config: &KzConfig,
    steps_per_segment: usize,
    tolerance: f64,
) -> Result<BraidRelationReport, KzError> {
    if config.n() < 3 {
        return Err(KzError::Strands { found: config.n(), needed: 3 });
    }
    let clearance = 0.5;
    let lhs_path = braid_path(&[1, 2, 1], config.n(), clearance)?;
    let rhs_path = braid_path(&[2, 1, 2], config.n(), clearance)?;
    let lhs = transport(config, &lhs_path, steps_per_segment)?;
    let rhs = transport(config, &rhs_path, steps_per_segment)?;
    let distance = lhs.matrix.sub(&rhs.matrix).frobenius_norm();
    Ok(BraidRelationReport {
        distance,
        tolerance,
        pass: distance <= tolerance,
        error_estimates: [lhs.error_estimate, rhs.error_estimate],
    })
}
