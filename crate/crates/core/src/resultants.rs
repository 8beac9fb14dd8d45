//! Stress resultants carried by a dual loop.
//!
//! For a dual loop `{A^K = (φ_K, ξ_K)}` with pressure `p`:
//!
//! * force `P = ½ p Σ ξ_K × ξ_{K+1}`
//! * total moment about the origin `½ p Σ (φ_{K+1} + φ_K) h ∧ (ξ_{K+1} − ξ_K)`
//! * internal moment at a cut through `x`, from the hybrid loop
//!   `(f_K, ξ_K)` with `f_K = ξ_K·x − φ_K`: `½ p Σ (f_K ξ_{K+1} − f_{K+1} ξ_K) ∧ h`
//!
//! and `total = x × P + internal`. Moments are reported as vectors about the
//! `i, j, k` axes; a bivector component on `a∧h` is the moment about axis `a`.
//!
//! Read against [`shoelace_area`], the force and total moment are `−p` times
//! the dual loop's area, while the internal moment is `+p` times the hybrid
//! loop's `h`-plane area. The two loops agree at `x = 0`, where `f_K = −φ_K`.

use serde::Serialize;

use crate::bivector::{hodge_dual_3, shoelace_area, Bivector4, Loop4, Vec3};
use crate::error::{Error, Result};
use crate::frame::DualLoop;
use crate::legendre::DualPoint;

/// Relative tolerance for the `total = lever + internal` identity.
pub const IDENTITY_TOLERANCE: f64 = 1e-9;

#[derive(Copy, Clone, Debug, PartialEq, Serialize)]
pub struct StressResultant {
    pub force: Vec3,
    pub total_moment: Vec3,
    pub lever_moment: Vec3,
    pub internal_moment: Vec3,
}

/// A vertex of the hybrid loop: the original stress function at the dual
/// coordinates.
#[derive(Copy, Clone, Debug, PartialEq, Serialize)]
pub struct HybridPoint {
    pub f: f64,
    pub xi: Vec3,
}

fn cyclic_pairs<T: Copy>(v: &[T]) -> impl Iterator<Item = (T, T)> + '_ {
    let n = v.len();
    (0..n).map(move |m| (v[m], v[(m + 1) % n]))
}

pub fn force(dual: &DualLoop) -> Vec3 {
    let mut sum = Vec3::ZERO;
    for (a, b) in cyclic_pairs(&dual.vertices) {
        sum += a.xi.cross(b.xi);
    }
    sum * (0.5 * dual.p)
}

/// Total moment about the origin, summed as trapezoids along each dual edge.
pub fn total_moment(dual: &DualLoop) -> Vec3 {
    let mut sum = Vec3::ZERO;
    for (a, b) in cyclic_pairs(&dual.vertices) {
        // h ∧ e = −(e ∧ h)
        sum += (b.xi - a.xi) * -(b.phi + a.phi);
    }
    sum * (0.5 * dual.p)
}

pub fn hybrid_vertices(dual: &DualLoop, x: Vec3) -> Vec<HybridPoint> {
    dual.vertices.iter().map(|d| HybridPoint { f: d.stress_function_at(x), xi: d.xi }).collect()
}

/// Bending and torsional moments at a cut through `x`.
pub fn internal_moment(dual: &DualLoop, x: Vec3) -> Vec3 {
    let hybrid = hybrid_vertices(dual, x);
    let mut sum = Vec3::ZERO;
    for (a, b) in cyclic_pairs(&hybrid) {
        sum += b.xi * a.f - a.xi * b.f;
    }
    sum * (0.5 * dual.p)
}

/// Force, total, lever and internal moments at a cut through `x`, checked
/// against `total = x × P + internal`.
pub fn decompose(dual: &DualLoop, x: Vec3) -> Result<StressResultant> {
    let force = force(dual);
    let total_moment = total_moment(dual);
    let lever_moment = x.cross(force);
    let internal_moment = internal_moment(dual, x);
    let residual = (total_moment - lever_moment - internal_moment).max_abs();
    let scale = 1.0 + total_moment.max_abs().max(lever_moment.max_abs());
    if residual > IDENTITY_TOLERANCE * scale {
        return Err(Error::Identity { residual });
    }
    Ok(StressResultant { force, total_moment, lever_moment, internal_moment })
}

/// The dual loop as a 4D polygon `(φ, ξ)`, or `None` when it has no vertices.
pub fn dual_as_loop4(dual: &DualLoop) -> Option<Loop4> {
    Loop4::new(dual.vertices.iter().map(|d| d.as_vec4()).collect()).ok()
}

/// The hybrid loop as a 4D polygon `(f, ξ)`.
pub fn hybrid_as_loop4(dual: &DualLoop, x: Vec3) -> Option<Loop4> {
    Loop4::new(hybrid_vertices(dual, x).iter().map(|v| v.xi.with_h(v.f)).collect()).ok()
}

/// Force and total moment implied by a dual loop's oriented area.
pub fn dual_resultants_from_area(area: Bivector4, p: f64) -> (Vec3, Vec3) {
    (hodge_dual_3(area) * -p, area.h_part() * -p)
}

/// Internal moment implied by a hybrid loop's oriented area.
pub fn internal_from_hybrid_area(area: Bivector4, p: f64) -> Vec3 {
    area.h_part() * p
}

/// Force and total moment through the shoelace area of the whole dual loop.
pub fn resultants_via_area(dual: &DualLoop) -> (Vec3, Vec3) {
    match dual_as_loop4(dual) {
        Some(lp) => dual_resultants_from_area(shoelace_area(&lp), dual.p),
        None => (Vec3::ZERO, Vec3::ZERO),
    }
}

/// Internal moment through the shoelace area of the hybrid loop.
pub fn internal_via_area(dual: &DualLoop, x: Vec3) -> Vec3 {
    match hybrid_as_loop4(dual, x) {
        Some(lp) => internal_from_hybrid_area(shoelace_area(&lp), dual.p),
        None => Vec3::ZERO,
    }
}

/// Convenience for building a dual loop from `(φ, ξ, η, ζ)` rows.
pub fn dual_loop(rows: &[[f64; 4]], p: f64) -> Result<DualLoop> {
    DualLoop::new(rows.iter().map(|r| DualPoint::from(*r)).collect(), p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn section6(b: f64, s: f64, t: f64, p: f64) -> DualLoop {
        dual_loop(&[[0.0, 0.0, 0.0, 0.0], [-b * t, 0.0, 0.0, s], [0.0, t, 0.0, 0.0]], p).unwrap()
    }

    fn assert_vec(a: Vec3, b: Vec3, tol: f64) {
        assert!((a - b).max_abs() <= tol, "{a} != {b}");
    }

    #[test]
    fn rectangle_fixture_force_and_moment() {
        let (b, s, t, p) = (2.0, 1.5, 0.8, 1.25);
        let d = section6(b, s, t, p);
        assert_vec(force(&d), Vec3::new(0.0, 0.5 * p * t * s, 0.0), 1e-15);
        assert_vec(total_moment(&d), Vec3::new(0.5 * p * b * t * t, 0.0, 0.0), 1e-15);
    }

    #[test]
    fn degenerate_duals() {
        let same = dual_loop(&[[1.0, 2.0, 3.0, 4.0]; 3], 2.0).unwrap();
        assert_eq!(force(&same), Vec3::ZERO);
        let flat = dual_loop(&[[0.0, 1.0, 0.0, 0.0], [0.0, 0.0, 1.0, 0.0], [0.0, 0.0, 0.0, 1.0]], 1.0).unwrap();
        assert_eq!(total_moment(&flat), Vec3::ZERO);
        let empty = DualLoop::new(vec![], 1.0).unwrap();
        let r = decompose(&empty, Vec3::new(1.0, 2.0, 3.0)).unwrap();
        assert_eq!(r.force, Vec3::ZERO);
        assert_eq!(r.internal_moment, Vec3::ZERO);
        assert_eq!(resultants_via_area(&empty), (Vec3::ZERO, Vec3::ZERO));
    }

    #[test]
    fn constant_phi_shift_leaves_total_unchanged() {
        let d = dual_loop(
            &[[0.5, 1.0, -1.0, 0.0], [2.0, 0.0, 2.0, 1.0], [-1.0, 3.0, 0.5, -2.0], [0.0, 1.0, 1.0, 1.0]],
            0.7,
        )
        .unwrap();
        let mut shifted = d.clone();
        for v in &mut shifted.vertices {
            v.phi += 10.0;
        }
        assert_vec(total_moment(&d), total_moment(&shifted), 1e-12);
    }

    #[test]
    fn hybrid_vertices_examples() {
        let d = dual_loop(&[[1.0, 0.0, 0.0, 0.0], [2.0, 1.0, 2.0, 3.0]], 1.0).unwrap();
        let at_origin = hybrid_vertices(&d, Vec3::ZERO);
        assert_eq!(at_origin[0].f, -1.0);
        assert_eq!(at_origin[1].f, -2.0);
        let elsewhere = hybrid_vertices(&d, Vec3::new(5.0, -3.0, 2.0));
        // ξ = 0 ignores x
        assert_eq!(elsewhere[0].f, -1.0);
        assert_eq!(elsewhere[1].f, 5.0 - 6.0 + 6.0 - 2.0);
    }

    #[test]
    fn internal_equals_total_at_origin() {
        let d = dual_loop(&[[0.5, 1.0, -1.0, 0.0], [2.0, 0.0, 2.0, 1.0], [-1.0, 3.0, 0.5, -2.0]], 0.7).unwrap();
        assert_vec(internal_moment(&d, Vec3::ZERO), total_moment(&d), 1e-14);
        let r = decompose(&d, Vec3::ZERO).unwrap();
        assert_eq!(r.lever_moment, Vec3::ZERO);
    }

    #[test]
    fn bending_grows_linearly_along_the_long_side() {
        let (b, s, t, p) = (2.0, 1.0, 1.0, 1.0);
        let d = section6(b, s, t, p);
        let big_p = 0.5 * p * t * s;
        for x in [-2.0, -0.5, 0.0, 1.25, 2.0] {
            let m = internal_moment(&d, Vec3::new(x, 1.0, 0.0));
            assert!((m.k + big_p * x).abs() < 1e-14);
            assert!((m.i - 0.5 * p * b * t * t).abs() < 1e-14);
        }
    }

    #[test]
    fn area_routes_agree() {
        let d = dual_loop(
            &[
                [0.5, 1.0, -1.0, 0.0],
                [2.0, 0.0, 2.0, 1.0],
                [-1.0, 3.0, 0.5, -2.0],
                [0.2, -1.0, 1.0, 4.0],
                [1.0, 0.0, 0.0, 1.0],
            ],
            1.3,
        )
        .unwrap();
        let (f, m) = resultants_via_area(&d);
        assert_vec(f, force(&d), 1e-12);
        assert_vec(m, total_moment(&d), 1e-12);
        let x = Vec3::new(0.3, -2.0, 1.1);
        assert_vec(internal_via_area(&d, x), internal_moment(&d, x), 1e-12);
    }
}
