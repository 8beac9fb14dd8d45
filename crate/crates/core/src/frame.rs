//! Single-loop frame geometry and its pairing with a dual loop.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::bivector::Vec3;
use crate::error::{Error, Result};
use crate::legendre::DualPoint;

/// Junction and closure tolerance.
pub const CLOSURE_TOLERANCE: f64 = 1e-9;

/// One member of a structural loop.
#[derive(Copy, Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BarSegment {
    /// Parameterised by `s ∈ [0, 1]`.
    Straight { start: Vec3, end: Vec3 },
    /// `center + radius (cos ψ e1 + sin ψ e2)` for `ψ ∈ [0, sweep]`.
    CircularArc { center: Vec3, radius: f64, e1: Vec3, e2: Vec3, sweep: f64 },
}

impl BarSegment {
    pub fn straight(start: Vec3, end: Vec3) -> Result<Self> {
        let seg = BarSegment::Straight { start, end };
        seg.validate()?;
        Ok(seg)
    }

    pub fn arc(center: Vec3, radius: f64, e1: Vec3, e2: Vec3, sweep: f64) -> Result<Self> {
        let seg = BarSegment::CircularArc { center, radius, e1, e2, sweep };
        seg.validate()?;
        Ok(seg)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            BarSegment::Straight { start, end } => {
                if (end - start).norm() <= CLOSURE_TOLERANCE {
                    return Err(Error::Geometry("straight segment has coincident endpoints".into()));
                }
            }
            BarSegment::CircularArc { radius, e1, e2, sweep, .. } => {
                if !(radius.is_finite() && radius > 0.0) {
                    return Err(Error::Geometry(format!("arc radius must be positive, got {radius}")));
                }
                if !(sweep.is_finite() && sweep > 0.0 && sweep <= 2.0 * PI) {
                    return Err(Error::Geometry(format!("arc sweep must lie in (0, 2π], got {sweep}")));
                }
                let tol = 1e-9;
                if (e1.norm() - 1.0).abs() > tol || (e2.norm() - 1.0).abs() > tol || e1.dot(e2).abs() > tol {
                    return Err(Error::Geometry("arc basis vectors must be orthonormal".into()));
                }
            }
        }
        Ok(())
    }

    /// Upper end of the parameter range: 1 for straight bars, the sweep angle
    /// for arcs.
    pub fn param_max(&self) -> f64 {
        match *self {
            BarSegment::Straight { .. } => 1.0,
            BarSegment::CircularArc { sweep, .. } => sweep,
        }
    }

    pub fn point(&self, param: f64) -> Vec3 {
        match *self {
            BarSegment::Straight { start, end } => start + (end - start) * param,
            BarSegment::CircularArc { center, radius, e1, e2, .. } => {
                center + (e1 * param.cos() + e2 * param.sin()) * radius
            }
        }
    }

    pub fn start(&self) -> Vec3 {
        self.point(0.0)
    }

    pub fn end(&self) -> Vec3 {
        self.point(self.param_max())
    }

    pub fn length(&self) -> f64 {
        match *self {
            BarSegment::Straight { start, end } => (end - start).norm(),
            BarSegment::CircularArc { radius, sweep, .. } => radius * sweep,
        }
    }
}

/// A closed circuit of bars.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<BarSegment>", into = "Vec<BarSegment>")]
pub struct StructuralLoop {
    segments: Vec<BarSegment>,
}

impl StructuralLoop {
    pub fn new(segments: Vec<BarSegment>) -> Result<Self> {
        if segments.is_empty() {
            return Err(Error::Geometry("structural loop has no segments".into()));
        }
        for seg in &segments {
            seg.validate()?;
        }
        let n = segments.len();
        for m in 0..n {
            let gap = (segments[(m + 1) % n].start() - segments[m].end()).norm();
            if gap > CLOSURE_TOLERANCE {
                return Err(Error::Open { segment: m, gap });
            }
        }
        Ok(StructuralLoop { segments })
    }

    pub fn segments(&self) -> &[BarSegment] {
        &self.segments
    }

    pub fn len(&self) -> usize {
        self.segments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    pub fn perimeter(&self) -> f64 {
        self.segments.iter().map(BarSegment::length).sum()
    }

    /// Validated cut on segment `segment` at `param`.
    pub fn cut(&self, segment: usize, param: f64) -> Result<CutPoint> {
        let seg = self.segments.get(segment).ok_or(Error::SegmentIndex { index: segment, len: self.segments.len() })?;
        let max = seg.param_max();
        if !(param.is_finite() && (0.0..=max).contains(&param)) {
            return Err(Error::CutParameter { segment, param, max });
        }
        Ok(CutPoint { segment, param })
    }

    /// Cut at fraction `u ∈ [0, 1]` of a segment's parameter range.
    pub fn cut_at_fraction(&self, segment: usize, u: f64) -> Result<CutPoint> {
        let max = self
            .segments
            .get(segment)
            .ok_or(Error::SegmentIndex { index: segment, len: self.segments.len() })?
            .param_max();
        self.cut(segment, (u * max).clamp(0.0, max))
    }
}

impl TryFrom<Vec<BarSegment>> for StructuralLoop {
    type Error = Error;
    fn try_from(segments: Vec<BarSegment>) -> Result<Self> {
        StructuralLoop::new(segments)
    }
}

impl From<StructuralLoop> for Vec<BarSegment> {
    fn from(l: StructuralLoop) -> Self {
        l.segments
    }
}

/// A cross-section of the loop: a segment and a parameter along it (`s` for
/// straight bars, `ψ` for arcs).
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct CutPoint {
    pub segment: usize,
    pub param: f64,
}

pub fn position_at(lp: &StructuralLoop, cut: CutPoint) -> Result<Vec3> {
    let seg = lp.segments.get(cut.segment).ok_or(Error::SegmentIndex { index: cut.segment, len: lp.segments.len() })?;
    Ok(seg.point(cut.param))
}

/// State of self-stress for one structural loop: the cyclic stress-space
/// polygon `{A^K}` and the pressure `p`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DualLoop {
    pub vertices: Vec<DualPoint>,
    pub p: f64,
}

impl DualLoop {
    /// An empty vertex list is accepted; it encodes zero resultants.
    pub fn new(vertices: Vec<DualPoint>, p: f64) -> Result<Self> {
        let d = DualLoop { vertices, p };
        d.validate()?;
        Ok(d)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.p.is_finite() && self.p > 0.0) {
            return Err(Error::Pressure(self.p));
        }
        for v in &self.vertices {
            if !(v.phi.is_finite() && v.xi.to_array().iter().all(|c| c.is_finite())) {
                return Err(Error::NonFinite { what: "dual vertex" });
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// Rectangle `abcd` of size `2B × 2W` in the `i–j` plane, centred on the
/// origin:
///
/// ```text
///   a (−B, W) ──── d (B, W)
///   │                  │
///   b (−B,−W) ──── c (B,−W)
/// ```
///
/// Segments run a→b, b→c, c→d, d→a.
pub fn build_rectangle(b: f64, w: f64) -> Result<StructuralLoop> {
    check_dims(b, w)?;
    let [a, bb, c, d] = rectangle_corners(b, w);
    StructuralLoop::new(vec![
        BarSegment::straight(a, bb)?,
        BarSegment::straight(bb, c)?,
        BarSegment::straight(c, d)?,
        BarSegment::straight(d, a)?,
    ])
}

/// The rectangle with its short ends replaced by semicircles of radius `W`.
///
/// Segment 0 is the arc `ab`, which leaves the plane: it stays in the plane
/// `x = −B` and rises to `z = W` at `ψ = π/2`. Segment 2 is the arc `cd`,
/// bulging in-plane to `x = B + W`. Segments 1 and 3 are the straight sides
/// `bc` and `da`.
pub fn build_rect_with_arcs(b: f64, w: f64) -> Result<StructuralLoop> {
    check_dims(b, w)?;
    let [a, bb, c, d] = rectangle_corners(b, w);
    StructuralLoop::new(vec![
        BarSegment::arc(Vec3::new(-b, 0.0, 0.0), w, Vec3::J, Vec3::K, PI)?,
        BarSegment::straight(bb, c)?,
        BarSegment::arc(Vec3::new(b, 0.0, 0.0), w, -Vec3::J, Vec3::I, PI)?,
        BarSegment::straight(d, a)?,
    ])
}

fn rectangle_corners(b: f64, w: f64) -> [Vec3; 4] {
    [Vec3::new(-b, w, 0.0), Vec3::new(-b, -w, 0.0), Vec3::new(b, -w, 0.0), Vec3::new(b, w, 0.0)]
}

fn check_dims(b: f64, w: f64) -> Result<()> {
    if !(b.is_finite() && b > 0.0 && w.is_finite() && w > 0.0) {
        return Err(Error::Geometry(format!("frame dimensions must be positive, got B = {b}, W = {w}")));
    }
    Ok(())
}

/// A structural loop with the dual loop describing its self-stress.
#[derive(Clone, Debug, PartialEq)]
pub struct LoopPair {
    pub structure: StructuralLoop,
    pub dual: DualLoop,
}

/// A frame built from independent loops. Loops share no bookkeeping; the
/// resultant in a bar carried by several loops is the sum over those loops.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Assembly {
    pub loops: Vec<LoopPair>,
}
