//! Maxwell's Diagram of Stress as a Legendre transform.
//!
//! A stress function `f(x)` maps each body point `x` to the stress point
//! `ξ = grad f` and the dual value `φ = ξ·x − f`, so that `f + φ = ξ·x`.
//! Piecewise-linear stress functions transform exactly, cell by cell. Sampled
//! smooth functions use the local gradient map, never the convex-conjugate
//! supremum: non-convex `f` produces a folded, multi-sheeted dual and that is
//! kept as scattered samples.

use serde::{Deserialize, Serialize};

use crate::bivector::{Vec3, Vec4};
use crate::error::{Error, Result};

/// Absolute tolerance on coefficients when testing face continuity.
pub const FACE_TOLERANCE: f64 = 1e-9;

/// `f(x) = a0 + grad·x` over one cell of the body.
#[derive(Copy, Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LinearStressFunction {
    pub a0: f64,
    pub grad: Vec3,
}

impl LinearStressFunction {
    pub fn new(a0: f64, grad: Vec3) -> Self {
        LinearStressFunction { a0, grad }
    }

    pub fn eval(&self, x: Vec3) -> f64 {
        self.a0 + self.grad.dot(x)
    }
}

/// A node `(φ, ξ)` of the stress space.
#[derive(Copy, Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 4]", into = "[f64; 4]")]
pub struct DualPoint {
    pub phi: f64,
    pub xi: Vec3,
}

impl DualPoint {
    pub fn new(phi: f64, xi: Vec3) -> Self {
        DualPoint { phi, xi }
    }

    pub fn as_vec4(self) -> Vec4 {
        self.xi.with_h(self.phi)
    }

    /// The constant term of the cell's linear stress function, `a0 = −φ`.
    pub fn a0(self) -> f64 {
        -self.phi
    }

    /// The stress function this node describes, evaluated at `x`:
    /// `f = ξ·x − φ`.
    pub fn stress_function_at(self, x: Vec3) -> f64 {
        self.xi.dot(x) - self.phi
    }
}

impl From<[f64; 4]> for DualPoint {
    fn from(a: [f64; 4]) -> Self {
        DualPoint { phi: a[0], xi: Vec3 { i: a[1], j: a[2], k: a[3] } }
    }
}

impl From<DualPoint> for [f64; 4] {
    fn from(d: DualPoint) -> Self {
        d.as_vec4().to_array()
    }
}

impl From<Vec4> for DualPoint {
    fn from(v: Vec4) -> Self {
        DualPoint { phi: v.h, xi: v.spatial() }
    }
}

/// Exact transform of a linear stress function.
pub fn dual_of_linear(f: &LinearStressFunction) -> DualPoint {
    DualPoint { phi: -f.a0, xi: f.grad }
}

/// The linear stress function whose dual is `d`.
pub fn linear_from_dual(d: DualPoint) -> LinearStressFunction {
    LinearStressFunction { a0: -d.phi, grad: d.xi }
}

/// Dual polygon of a cut through a bar surrounded by `cells`, listed in
/// right-hand-screw order about the outward cut normal.
pub fn dual_loop_from_cells(cells: &[LinearStressFunction]) -> Vec<DualPoint> {
    cells.iter().map(dual_of_linear).collect()
}

/// The plane `normal · x = offset`.
#[derive(Copy, Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FacePlane {
    pub normal: Vec3,
    pub offset: f64,
}

/// True iff `a − b` vanishes identically on `face`, so the stress function is
/// single-valued across it.
pub fn check_compatibility(a: &LinearStressFunction, b: &LinearStressFunction, face: &FacePlane) -> bool {
    let n2 = face.normal.dot(face.normal);
    if n2 == 0.0 {
        return false;
    }
    let dg = a.grad - b.grad;
    let da0 = a.a0 - b.a0;
    // the gradient jump must be normal to the face
    let tangential = dg - face.normal * (dg.dot(face.normal) / n2);
    // and the jump must vanish at the face's foot point
    let foot = face.normal * (face.offset / n2);
    tangential.max_abs() <= FACE_TOLERANCE && (da0 + dg.dot(foot)).abs() <= FACE_TOLERANCE
}

/// Values of `f` on a regular lattice in 1, 2 or 3 dimensions.
///
/// Sample `(n_0, n_1, n_2)` is stored at `n_0 + c_0 (n_1 + c_1 n_2)`, axis 0
/// fastest. Unused axes have zero coordinate.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SampledField {
    pub origin: Vec<f64>,
    pub spacing: Vec<f64>,
    pub counts: Vec<usize>,
    pub values: Vec<f64>,
}

impl SampledField {
    pub fn new(origin: Vec<f64>, spacing: Vec<f64>, counts: Vec<usize>, values: Vec<f64>) -> Result<Self> {
        let dim = counts.len();
        if !(1..=3).contains(&dim) {
            return Err(Error::Field(format!("dimension must be 1, 2 or 3, got {dim}")));
        }
        if origin.len() != dim || spacing.len() != dim {
            return Err(Error::Field("origin, spacing and counts must have equal length".into()));
        }
        if let Some(h) = spacing.iter().find(|h| !(h.is_finite() && **h > 0.0)) {
            return Err(Error::Field(format!("grid spacing must be positive, got {h}")));
        }
        if origin.iter().any(|o| !o.is_finite()) {
            return Err(Error::Field("non-finite origin".into()));
        }
        let total: usize = counts.iter().product();
        if values.len() != total {
            return Err(Error::Field(format!("expected {total} values, got {}", values.len())));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::Field("non-finite sample value".into()));
        }
        Ok(SampledField { origin, spacing, counts, values })
    }

    /// Sample `f` over `counts` lattice nodes starting at `origin`.
    pub fn from_fn(origin: &[f64], spacing: &[f64], counts: &[usize], f: impl Fn(Vec3) -> f64) -> Result<Self> {
        let proto = SampledField {
            origin: origin.to_vec(),
            spacing: spacing.to_vec(),
            counts: counts.to_vec(),
            values: Vec::new(),
        };
        let values = (0..proto.len()).map(|n| f(proto.point(&proto.unflatten(n)))).collect();
        SampledField::new(origin.to_vec(), spacing.to_vec(), counts.to_vec(), values)
    }

    /// Build a lattice from unordered `(coordinates, value)` rows, checking
    /// that the rows cover a complete, uniformly spaced grid.
    pub fn from_rows(dim: usize, rows: &[(Vec<f64>, f64)]) -> Result<Self> {
        if !(1..=3).contains(&dim) {
            return Err(Error::Field(format!("dimension must be 1, 2 or 3, got {dim}")));
        }
        let mut axes: Vec<Vec<f64>> = vec![Vec::new(); dim];
        for (coords, _) in rows {
            if coords.len() != dim {
                return Err(Error::Field(format!("row has {} coordinates, expected {dim}", coords.len())));
            }
            for (a, c) in coords.iter().enumerate() {
                axes[a].push(*c);
            }
        }
        let mut origin = Vec::with_capacity(dim);
        let mut spacing = Vec::with_capacity(dim);
        let mut counts = Vec::with_capacity(dim);
        for (a, vals) in axes.iter_mut().enumerate() {
            vals.sort_by(f64::total_cmp);
            vals.dedup_by(|x, y| (*x - *y).abs() <= 1e-9 * (1.0 + y.abs()));
            if vals.len() < 2 {
                return Err(Error::Field(format!("axis {a} has fewer than 2 distinct coordinates")));
            }
            let h = (vals[vals.len() - 1] - vals[0]) / (vals.len() - 1) as f64;
            for (m, v) in vals.iter().enumerate() {
                let expect = vals[0] + h * m as f64;
                if (v - expect).abs() > 1e-6 * h {
                    return Err(Error::Field(format!("axis {a} is not uniformly spaced near {v}")));
                }
            }
            origin.push(vals[0]);
            spacing.push(h);
            counts.push(vals.len());
        }
        let total: usize = counts.iter().product();
        let mut values = vec![f64::NAN; total];
        for (coords, v) in rows {
            let mut idx = Vec::with_capacity(dim);
            for a in 0..dim {
                let r = (coords[a] - origin[a]) / spacing[a];
                idx.push(r.round() as usize);
            }
            let flat = flatten(&counts, &idx);
            if !values[flat].is_nan() {
                return Err(Error::Field(format!("duplicate sample at {coords:?}")));
            }
            values[flat] = *v;
        }
        if values.iter().any(|v| v.is_nan()) {
            return Err(Error::Field(format!("incomplete lattice: {} rows for {total} nodes", rows.len())));
        }
        SampledField::new(origin, spacing, counts, values)
    }

    pub fn dim(&self) -> usize {
        self.counts.len()
    }

    pub fn len(&self) -> usize {
        self.counts.iter().product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn value(&self, index: &[usize]) -> f64 {
        self.values[flatten(&self.counts, index)]
    }

    pub fn point(&self, index: &[usize]) -> Vec3 {
        let mut c = [0.0; 3];
        for a in 0..self.dim() {
            c[a] = self.origin[a] + self.spacing[a] * index[a] as f64;
        }
        Vec3::from(c)
    }

    pub fn unflatten(&self, mut flat: usize) -> Vec<usize> {
        let mut idx = Vec::with_capacity(self.dim());
        for &c in &self.counts {
            idx.push(flat % c);
            flat /= c;
        }
        idx
    }

    fn is_interior(&self, index: &[usize]) -> bool {
        index.iter().zip(&self.counts).all(|(&n, &c)| n >= 1 && n + 1 < c)
    }

    /// Central-difference gradient at an interior node.
    fn central_gradient(&self, index: &[usize]) -> Vec3 {
        let mut g = [0.0; 3];
        let mut probe = index.to_vec();
        for a in 0..self.dim() {
            probe[a] = index[a] + 1;
            let ahead = self.value(&probe);
            probe[a] = index[a] - 1;
            let behind = self.value(&probe);
            probe[a] = index[a];
            g[a] = (ahead - behind) / (2.0 * self.spacing[a]);
        }
        Vec3::from(g)
    }
}

fn flatten(counts: &[usize], index: &[usize]) -> usize {
    let mut flat = 0;
    let mut stride = 1;
    for (n, c) in index.iter().zip(counts) {
        flat += n * stride;
        stride *= c;
    }
    flat
}

/// One transformed sample: `ξ = grad f(source)`, `φ = ξ·source − f(source)`.
#[derive(Copy, Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DualSample {
    pub xi: Vec3,
    pub phi: f64,
    pub source_x: Vec3,
}

/// Pointwise gradient-map transform of a sampled stress function.
///
/// Interior nodes only, in lattice order; boundary nodes have no central
/// difference and are dropped.
pub fn diagram_of_stress(field: &SampledField) -> Result<Vec<DualSample>> {
    if let Some((a, c)) = field.counts.iter().enumerate().find(|(_, c)| **c < 3) {
        return Err(Error::Field(format!("axis {a} has {c} samples; at least 3 are needed for a gradient")));
    }
    let mut out = Vec::new();
    for flat in 0..field.len() {
        let idx = field.unflatten(flat);
        if !field.is_interior(&idx) {
            continue;
        }
        let x = field.point(&idx);
        let xi = field.central_gradient(&idx);
        let phi = xi.dot(x) - field.values[flat];
        out.push(DualSample { xi, phi, source_x: x });
    }
    Ok(out)
}

/// Re-read dual samples as a field over `ξ`, when the transform of the
/// interior lattice landed on a uniform lattice again (as for separable
/// quadratics). `counts` are the source field's counts.
pub fn regrid_dual(samples: &[DualSample], counts: &[usize]) -> Result<SampledField> {
    let dim = counts.len();
    let inner: Vec<usize> = counts.iter().map(|c| c.saturating_sub(2)).collect();
    if inner.iter().product::<usize>() != samples.len() {
        return Err(Error::Field("sample count does not match the interior lattice".into()));
    }
    let rows: Vec<(Vec<f64>, f64)> = samples.iter().map(|s| (s.xi.to_array()[..dim].to_vec(), s.phi)).collect();
    let field = SampledField::from_rows(dim, &rows)?;
    if field.counts != inner {
        return Err(Error::Field("dual samples do not form a lattice in ξ".into()));
    }
    Ok(field)
}
