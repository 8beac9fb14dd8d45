//! Classical statics oracle and the invariant harness.
//!
//! The oracle functions here use only [`Vec3`] arithmetic and the raw
//! [`SampledField`] samples. They must not call into the Legendre or
//! resultant code they are used to check.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bivector::Vec3;
use crate::error::{Error, Result};
use crate::frame::{position_at, BarSegment, DualLoop, StructuralLoop};
use crate::legendre::{DualPoint, SampledField};
use crate::resultants;

/// Algebraic identities (two routes to the same sum).
pub const ALGEBRAIC_TOLERANCE: f64 = 1e-12;
/// Physical identities (moment decomposition, oracle agreement, orthogonality).
pub const PHYSICS_TOLERANCE: f64 = 1e-9;
pub const DEFAULT_SEED: u64 = 0x5EED_F0CE;

/// A force and a moment about the origin, given at some cut.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct ClassicalState {
    pub force: Vec3,
    pub moment_about_origin: Vec3,
}

/// Bending and torsion at `x` by elementary statics: `M0 − x × P`.
pub fn classical_internal_moment(state: &ClassicalState, x: Vec3) -> Vec3 {
    let lever = Vec3::new(
        x.j * state.force.k - x.k * state.force.j,
        x.k * state.force.i - x.i * state.force.k,
        x.i * state.force.j - x.j * state.force.i,
    );
    state.moment_about_origin - lever
}

/// Central-difference gradient of `field` at the lattice node nearest to
/// `point`. The point must lie on an interior node.
pub fn finite_difference_gradient(field: &SampledField, point: Vec3) -> Result<Vec3> {
    let dim = field.counts.len();
    let coords = point.to_array();
    let mut index = vec![0usize; dim];
    for a in 0..dim {
        let r = (coords[a] - field.origin[a]) / field.spacing[a];
        let n = r.round();
        if (r - n).abs() > 1e-6 || n < 1.0 || n + 1.0 >= field.counts[a] as f64 {
            return Err(Error::NotInterior);
        }
        index[a] = n as usize;
    }
    let at = |idx: &[usize]| {
        let mut flat = 0;
        let mut stride = 1;
        for (i, n) in idx.iter().zip(&field.counts) {
            flat += i * stride;
            stride *= n;
        }
        field.values[flat]
    };
    let mut grad = [0.0; 3];
    for a in 0..dim {
        let mut up = index.clone();
        up[a] += 1;
        let mut down = index.clone();
        down[a] -= 1;
        grad[a] = (at(&up) - at(&down)) / (2.0 * field.spacing[a]);
    }
    Ok(Vec3::from(grad))
}

/// Uniformly random dual loop with `n` vertices and coordinates in `[−5, 5]`.
pub fn random_dual_loop(rng: &mut impl Rng, n: usize, p: f64) -> DualLoop {
    let vertices = (0..n).map(|_| DualPoint::new(rng.gen_range(-5.0..=5.0), random_point(rng))).collect();
    DualLoop::new(vertices, p).expect("random dual loop is valid")
}

pub fn random_point(rng: &mut impl Rng) -> Vec3 {
    Vec3::new(rng.gen_range(-5.0..=5.0), rng.gen_range(-5.0..=5.0), rng.gen_range(-5.0..=5.0))
}

/// Closed polygon of straight bars through `n` random points.
pub fn random_structural_loop(rng: &mut impl Rng, n: usize) -> StructuralLoop {
    loop {
        let pts: Vec<Vec3> = (0..n).map(|_| random_point(rng)).collect();
        let segs: Option<Vec<BarSegment>> =
            (0..n).map(|m| BarSegment::straight(pts[m], pts[(m + 1) % n]).ok()).collect();
        if let Some(Ok(lp)) = segs.map(StructuralLoop::new) {
            return lp;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub max_residual: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl CheckResult {
    fn new(name: &'static str, tolerance: f64) -> Self {
        CheckResult { name, max_residual: 0.0, tolerance, passed: true }
    }

    fn record(&mut self, residual: f64) {
        self.max_residual = self.max_residual.max(residual);
        self.passed = self.passed && residual <= self.tolerance;
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<24} max_residual={:.3e} tolerance={:.0e} {}",
            self.name,
            self.max_residual,
            self.tolerance,
            if self.passed { "PASS" } else { "FAIL" }
        )
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub seed: u64,
    pub samples: usize,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "seed={} samples={}", self.seed, self.samples)?;
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

fn rel(diff: Vec3, scale: f64) -> f64 {
    diff.max_abs() / (1.0 + scale)
}

/// Sample `samples` random cuts around `structure` and check every identity
/// that must hold for `dual` at those cuts.
pub fn run_suite(structure: &StructuralLoop, dual: &DualLoop, samples: usize, seed: u64) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let force = resultants::force(dual);
    let total = resultants::total_moment(dual);
    let (area_force, area_total) = resultants::resultants_via_area(dual);
    let state = ClassicalState { force, moment_about_origin: total };

    let mut force_paths = CheckResult::new("force_two_path", ALGEBRAIC_TOLERANCE);
    force_paths.record(rel(force - area_force, force.max_abs()));
    let mut total_paths = CheckResult::new("total_moment_two_path", ALGEBRAIC_TOLERANCE);
    total_paths.record(rel(total - area_total, total.max_abs()));

    let mut identity = CheckResult::new("moment_identity", PHYSICS_TOLERANCE);
    let mut oracle = CheckResult::new("oracle_equivalence", PHYSICS_TOLERANCE);
    let mut hybrid_paths = CheckResult::new("internal_two_path", ALGEBRAIC_TOLERANCE);

    for _ in 0..samples {
        let segment = rng.gen_range(0..structure.len());
        let u: f64 = rng.gen();
        let cut = structure.cut_at_fraction(segment, u).expect("segment index in range");
        let x = position_at(structure, cut).expect("valid cut");

        let internal = resultants::internal_moment(dual, x);
        let lever = x.cross(force);
        identity.record(rel(total - lever - internal, total.max_abs().max(lever.max_abs())));

        let expected = classical_internal_moment(&state, x);
        oracle.record(rel(internal - expected, expected.max_abs().max(lever.max_abs())));

        let via_area = resultants::internal_via_area(dual, x);
        hybrid_paths.record(rel(internal - via_area, internal.max_abs()));
    }

    let mut checks = vec![force_paths, total_paths, identity, oracle, hybrid_paths];
    if dual.len() <= 4 {
        let mut ortho = CheckResult::new("force_moment_orthogonal", PHYSICS_TOLERANCE);
        let denom = force.norm() * total.norm();
        ortho.record(if denom == 0.0 { 0.0 } else { force.dot(total).abs() / denom });
        checks.push(ortho);
    }
    Report { seed, samples, checks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::build_rectangle;

    #[test]
    fn classical_oracle_basics() {
        let s = ClassicalState { force: Vec3::new(1.0, 2.0, 3.0), moment_about_origin: Vec3::new(-1.0, 0.5, 4.0) };
        assert_eq!(classical_internal_moment(&s, Vec3::ZERO), s.moment_about_origin);
        let free = ClassicalState { force: Vec3::ZERO, ..s };
        assert_eq!(classical_internal_moment(&free, Vec3::new(7.0, -2.0, 1.0)), s.moment_about_origin);
        let x = Vec3::new(0.5, -1.0, 2.0);
        assert_eq!(classical_internal_moment(&s, x), s.moment_about_origin - x.cross(s.force));
    }

    #[test]
    fn fd_gradient_examples() {
        let f = SampledField::from_fn(&[0.0], &[0.01], &[201], |x| x.i * x.i).unwrap();
        let g = finite_difference_gradient(&f, Vec3::new(1.0, 0.0, 0.0)).unwrap();
        assert!((g.i - 2.0).abs() < 1e-4);

        let c = SampledField::from_fn(&[0.0, 0.0], &[0.5, 0.5], &[5, 5], |_| 2.0).unwrap();
        assert_eq!(finite_difference_gradient(&c, Vec3::new(1.0, 1.0, 0.0)).unwrap(), Vec3::ZERO);

        let q =
            SampledField::from_fn(&[0.0, 0.0], &[0.01, 0.01], &[301, 301], |x| 0.5 * (x.i * x.i + x.j * x.j)).unwrap();
        let g = finite_difference_gradient(&q, Vec3::new(1.0, 2.0, 0.0)).unwrap();
        assert!((g - Vec3::new(1.0, 2.0, 0.0)).max_abs() < 1e-4);
    }

    #[test]
    fn fd_gradient_rejects_boundary() {
        let f = SampledField::from_fn(&[0.0], &[0.5], &[5], |x| x.i).unwrap();
        assert!(matches!(finite_difference_gradient(&f, Vec3::ZERO), Err(Error::NotInterior)));
        assert!(finite_difference_gradient(&f, Vec3::new(2.0, 0.0, 0.0)).is_err());
        assert!(finite_difference_gradient(&f, Vec3::new(0.7, 0.0, 0.0)).is_err());
    }

    #[test]
    fn suite_is_deterministic() {
        let lp = build_rectangle(2.0, 1.0).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let dual = random_dual_loop(&mut rng, 6, 1.0);
        let a = run_suite(&lp, &dual, 50, 11);
        let b = run_suite(&lp, &dual, 50, 11);
        assert_eq!(a, b);
        assert!(a.passed(), "{a}");
        assert!(a.check("force_moment_orthogonal").is_none());
    }

    #[test]
    fn suite_flags_a_broken_identity() {
        let mut c = CheckResult::new("x", 1e-9);
        c.record(1e-10);
        assert!(c.passed);
        c.record(1e-3);
        assert!(!c.passed);
        assert_eq!(c.max_residual, 1e-3);
    }
}
