//! The single-loop worked examples: a `2B × 2W` rectangular frame and the
//! same frame with semicircular ends, both carrying one triangular dual loop.

use std::f64::consts::PI;

use crate::bivector::Vec3;
use crate::document::{Meta, ProjectDocument};
use crate::error::Result;
use crate::frame::{build_rect_with_arcs, build_rectangle, DualLoop};
use crate::legendre::{dual_loop_from_cells, linear_from_dual, DualPoint, LinearStressFunction};

/// Geometry `B, W`, dual triangle extents `s` (along ζ) and `t` (along ξ),
/// and pressure `p`.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct FrameExample {
    pub b: f64,
    pub w: f64,
    pub s: f64,
    pub t: f64,
    pub p: f64,
}

impl Default for FrameExample {
    fn default() -> Self {
        FrameExample { b: 2.0, w: 1.0, s: 1.0, t: 1.0, p: 1.0 }
    }
}

impl FrameExample {
    /// Dual triangle `I, II, III` as `(φ; ξ, η, ζ)`:
    /// `(0; 0, 0, 0)`, `(−Bt; 0, 0, s)`, `(0; t, 0, 0)`.
    ///
    /// Its `k–i` projection is an `s × t` right triangle and its `i–h`
    /// projection a `t × Bt` one.
    pub fn dual_points(&self) -> Vec<DualPoint> {
        let FrameExample { b, s, t, .. } = *self;
        vec![
            DualPoint::new(0.0, Vec3::ZERO),
            DualPoint::new(-b * t, Vec3::new(0.0, 0.0, s)),
            DualPoint::new(0.0, Vec3::new(t, 0.0, 0.0)),
        ]
    }

    /// Linear stress functions on the three cells around a cut, recovered
    /// from the dual triangle.
    pub fn cells(&self) -> Vec<LinearStressFunction> {
        self.dual_points().into_iter().map(linear_from_dual).collect()
    }

    pub fn dual(&self) -> Result<DualLoop> {
        DualLoop::new(dual_loop_from_cells(&self.cells()), self.p)
    }

    /// `P = ½pts ĵ`.
    pub fn expected_force(&self) -> Vec3 {
        Vec3::new(0.0, 0.5 * self.p * self.t * self.s, 0.0)
    }

    /// `½pBt²` about `i`.
    pub fn expected_total_moment(&self) -> Vec3 {
        Vec3::new(0.5 * self.p * self.b * self.t * self.t, 0.0, 0.0)
    }

    /// Internal moment on the out-of-plane arc `ab` at angle `psi`:
    /// `½pt(tB + sW sin ψ)` about `i`, `½pstB` about `k`.
    pub fn expected_arc_moment(&self, psi: f64) -> Vec3 {
        let FrameExample { b, w, s, t, p } = *self;
        Vec3::new(0.5 * p * t * (t * b + s * w * psi.sin()), 0.0, 0.5 * p * s * t * b)
    }

    pub fn rectangle_document(&self) -> Result<ProjectDocument> {
        Ok(ProjectDocument {
            structure: build_rectangle(self.b, self.w)?,
            dual: self.dual()?,
            fields: Vec::new(),
            meta: Meta { name: Some("rectangular frame".into()), units: None, seed: None },
        })
    }

    pub fn curved_document(&self) -> Result<ProjectDocument> {
        Ok(ProjectDocument {
            structure: build_rect_with_arcs(self.b, self.w)?,
            dual: self.dual()?,
            fields: Vec::new(),
            meta: Meta { name: Some("rectangular frame with semicircular ends".into()), units: None, seed: None },
        })
    }
}

/// Angles at which the arc moments are usually tabulated.
pub const ARC_ANGLES: [f64; 5] = [0.0, PI / 6.0, PI / 2.0, 5.0 * PI / 6.0, PI];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resultants::{force, total_moment};

    #[test]
    fn cells_invert_the_dual() {
        let ex = FrameExample { b: 1.5, w: 0.5, s: 2.0, t: 0.25, p: 3.0 };
        let cells = ex.cells();
        assert_eq!(cells[1].a0, 1.5 * 0.25);
        assert_eq!(ex.dual().unwrap().vertices, ex.dual_points());
    }

    #[test]
    fn default_example() {
        let ex = FrameExample::default();
        let d = ex.dual().unwrap();
        assert_eq!(force(&d), ex.expected_force());
        assert_eq!(total_moment(&d), ex.expected_total_moment());
    }
}
