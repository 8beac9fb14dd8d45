//! Vectors and bivectors of the 4D spaces (f, x, y, z) and (φ, ξ, η, ζ).
//!
//! Both spaces share the orthonormal basis `h, i, j, k`, with `h` carrying the
//! stress-function coordinate (f or φ, dimension Length²) and `i, j, k`
//! carrying the spatial or stress coordinates (dimension Length).
//!
//! Bivector components are stored on the fixed basis-plane table
//! `{j∧k, k∧i, i∧j, i∧h, j∧h, k∧h}`. Every sign in the crate flows from this
//! table and from the loop area convention of [`shoelace_area`].

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A 3D vector: a body point `x = (x, y, z)`, a stress point `ξ = (ξ, η, ζ)`,
/// a force or a moment about the `i, j, k` axes.
#[derive(Copy, Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 3]", into = "[f64; 3]")]
pub struct Vec3 {
    pub i: f64,
    pub j: f64,
    pub k: f64,
}

impl Vec3 {
    pub const ZERO: Vec3 = Vec3 { i: 0.0, j: 0.0, k: 0.0 };
    pub const I: Vec3 = Vec3 { i: 1.0, j: 0.0, k: 0.0 };
    pub const J: Vec3 = Vec3 { i: 0.0, j: 1.0, k: 0.0 };
    pub const K: Vec3 = Vec3 { i: 0.0, j: 0.0, k: 1.0 };

    /// Panics on NaN or infinite components; use [`Vec3::try_new`] for
    /// untrusted input.
    pub fn new(i: f64, j: f64, k: f64) -> Self {
        Self::try_new(i, j, k).expect("Vec3 components must be finite")
    }

    pub fn try_new(i: f64, j: f64, k: f64) -> Result<Self> {
        if i.is_finite() && j.is_finite() && k.is_finite() {
            Ok(Self { i, j, k })
        } else {
            Err(Error::NonFinite { what: "Vec3" })
        }
    }

    pub fn dot(self, other: Vec3) -> f64 {
        self.i * other.i + self.j * other.j + self.k * other.k
    }

    pub fn cross(self, other: Vec3) -> Vec3 {
        Vec3 {
            i: self.j * other.k - self.k * other.j,
            j: self.k * other.i - self.i * other.k,
            k: self.i * other.j - self.j * other.i,
        }
    }

    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    /// Largest absolute component.
    pub fn max_abs(self) -> f64 {
        self.i.abs().max(self.j.abs()).max(self.k.abs())
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.i, self.j, self.k]
    }

    /// Lift into 4D with the given `h` coordinate.
    pub fn with_h(self, h: f64) -> Vec4 {
        Vec4 { h, i: self.i, j: self.j, k: self.k }
    }
}

impl From<[f64; 3]> for Vec3 {
    fn from(a: [f64; 3]) -> Self {
        Vec3 { i: a[0], j: a[1], k: a[2] }
    }
}

impl From<Vec3> for [f64; 3] {
    fn from(v: Vec3) -> Self {
        v.to_array()
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, o: Vec3) -> Vec3 {
        Vec3 { i: self.i + o.i, j: self.j + o.j, k: self.k + o.k }
    }
}

impl AddAssign for Vec3 {
    fn add_assign(&mut self, o: Vec3) {
        *self = *self + o;
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, o: Vec3) -> Vec3 {
        Vec3 { i: self.i - o.i, j: self.j - o.j, k: self.k - o.k }
    }
}

impl Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3 { i: -self.i, j: -self.j, k: -self.k }
    }
}

impl Mul<f64> for Vec3 {
    type Output = Vec3;
    fn mul(self, s: f64) -> Vec3 {
        Vec3 { i: self.i * s, j: self.j * s, k: self.k * s }
    }
}

impl fmt::Display for Vec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.i, self.j, self.k)
    }
}

/// A point or displacement in 4D, ordered `(h, i, j, k)`.
#[derive(Copy, Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 4]", into = "[f64; 4]")]
pub struct Vec4 {
    pub h: f64,
    pub i: f64,
    pub j: f64,
    pub k: f64,
}

impl Vec4 {
    pub const ZERO: Vec4 = Vec4 { h: 0.0, i: 0.0, j: 0.0, k: 0.0 };
    pub const H: Vec4 = Vec4 { h: 1.0, i: 0.0, j: 0.0, k: 0.0 };
    pub const I: Vec4 = Vec4 { h: 0.0, i: 1.0, j: 0.0, k: 0.0 };
    pub const J: Vec4 = Vec4 { h: 0.0, i: 0.0, j: 1.0, k: 0.0 };
    pub const K: Vec4 = Vec4 { h: 0.0, i: 0.0, j: 0.0, k: 1.0 };

    /// Panics on NaN or infinite components; use [`Vec4::try_new`] for
    /// untrusted input.
    pub fn new(h: f64, i: f64, j: f64, k: f64) -> Self {
        Self::try_new(h, i, j, k).expect("Vec4 components must be finite")
    }

    pub fn try_new(h: f64, i: f64, j: f64, k: f64) -> Result<Self> {
        if [h, i, j, k].iter().all(|c| c.is_finite()) {
            Ok(Self { h, i, j, k })
        } else {
            Err(Error::NonFinite { what: "Vec4" })
        }
    }

    /// The `(i, j, k)` part.
    pub fn spatial(self) -> Vec3 {
        Vec3 { i: self.i, j: self.j, k: self.k }
    }

    pub fn to_array(self) -> [f64; 4] {
        [self.h, self.i, self.j, self.k]
    }
}

impl From<[f64; 4]> for Vec4 {
    fn from(a: [f64; 4]) -> Self {
        Vec4 { h: a[0], i: a[1], j: a[2], k: a[3] }
    }
}

impl From<Vec4> for [f64; 4] {
    fn from(v: Vec4) -> Self {
        v.to_array()
    }
}

impl Add for Vec4 {
    type Output = Vec4;
    fn add(self, o: Vec4) -> Vec4 {
        Vec4 { h: self.h + o.h, i: self.i + o.i, j: self.j + o.j, k: self.k + o.k }
    }
}

impl Sub for Vec4 {
    type Output = Vec4;
    fn sub(self, o: Vec4) -> Vec4 {
        Vec4 { h: self.h - o.h, i: self.i - o.i, j: self.j - o.j, k: self.k - o.k }
    }
}

impl Neg for Vec4 {
    type Output = Vec4;
    fn neg(self) -> Vec4 {
        Vec4 { h: -self.h, i: -self.i, j: -self.j, k: -self.k }
    }
}

impl Mul<f64> for Vec4 {
    type Output = Vec4;
    fn mul(self, s: f64) -> Vec4 {
        Vec4 { h: self.h * s, i: self.i * s, j: self.j * s, k: self.k * s }
    }
}

/// One of the six basis planes, in canonical order.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum BasisPlane {
    JK,
    KI,
    IJ,
    IH,
    JH,
    KH,
}

impl BasisPlane {
    pub const ALL: [BasisPlane; 6] =
        [BasisPlane::JK, BasisPlane::KI, BasisPlane::IJ, BasisPlane::IH, BasisPlane::JH, BasisPlane::KH];

    pub fn label(self) -> &'static str {
        match self {
            BasisPlane::JK => "j-k",
            BasisPlane::KI => "k-i",
            BasisPlane::IJ => "i-j",
            BasisPlane::IH => "i-h",
            BasisPlane::JH => "j-h",
            BasisPlane::KH => "k-h",
        }
    }

    /// True for the three planes containing `h`.
    pub fn involves_h(self) -> bool {
        matches!(self, BasisPlane::IH | BasisPlane::JH | BasisPlane::KH)
    }

    /// The two coordinates `(a, b)` spanning the plane `a∧b`.
    pub fn coordinates(self, v: Vec4) -> (f64, f64) {
        match self {
            BasisPlane::JK => (v.j, v.k),
            BasisPlane::KI => (v.k, v.i),
            BasisPlane::IJ => (v.i, v.j),
            BasisPlane::IH => (v.i, v.h),
            BasisPlane::JH => (v.j, v.h),
            BasisPlane::KH => (v.k, v.h),
        }
    }

    /// Spatial axis normal to a spatial plane, or the axis paired with `h`.
    pub fn axis(self) -> usize {
        match self {
            BasisPlane::JK | BasisPlane::IH => 0,
            BasisPlane::KI | BasisPlane::JH => 1,
            BasisPlane::IJ | BasisPlane::KH => 2,
        }
    }
}

impl fmt::Display for BasisPlane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Oriented area in 4D: six components on `{j∧k, k∧i, i∧j, i∧h, j∧h, k∧h}`.
#[derive(Copy, Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Bivector4 {
    pub jk: f64,
    pub ki: f64,
    pub ij: f64,
    pub ih: f64,
    pub jh: f64,
    pub kh: f64,
}

impl Bivector4 {
    pub const ZERO: Bivector4 = Bivector4 { jk: 0.0, ki: 0.0, ij: 0.0, ih: 0.0, jh: 0.0, kh: 0.0 };

    pub fn to_array(self) -> [f64; 6] {
        [self.jk, self.ki, self.ij, self.ih, self.jh, self.kh]
    }

    pub fn from_array(a: [f64; 6]) -> Self {
        Bivector4 { jk: a[0], ki: a[1], ij: a[2], ih: a[3], jh: a[4], kh: a[5] }
    }

    /// The `(i∧h, j∧h, k∧h)` components as a 3-vector.
    pub fn h_part(self) -> Vec3 {
        Vec3 { i: self.ih, j: self.jh, k: self.kh }
    }

    pub fn max_abs(self) -> f64 {
        self.to_array().iter().fold(0.0, |m, c| m.max(c.abs()))
    }
}

impl Add for Bivector4 {
    type Output = Bivector4;
    fn add(self, o: Bivector4) -> Bivector4 {
        Bivector4 {
            jk: self.jk + o.jk,
            ki: self.ki + o.ki,
            ij: self.ij + o.ij,
            ih: self.ih + o.ih,
            jh: self.jh + o.jh,
            kh: self.kh + o.kh,
        }
    }
}

impl AddAssign for Bivector4 {
    fn add_assign(&mut self, o: Bivector4) {
        *self = *self + o;
    }
}

impl Sub for Bivector4 {
    type Output = Bivector4;
    fn sub(self, o: Bivector4) -> Bivector4 {
        self + (-o)
    }
}

impl Neg for Bivector4 {
    type Output = Bivector4;
    fn neg(self) -> Bivector4 {
        self * -1.0
    }
}

impl Mul<f64> for Bivector4 {
    type Output = Bivector4;
    fn mul(self, s: f64) -> Bivector4 {
        Bivector4 {
            jk: self.jk * s,
            ki: self.ki * s,
            ij: self.ij * s,
            ih: self.ih * s,
            jh: self.jh * s,
            kh: self.kh * s,
        }
    }
}

/// `u ∧ v`.
pub fn wedge(u: Vec4, v: Vec4) -> Bivector4 {
    Bivector4 {
        jk: u.j * v.k - u.k * v.j,
        ki: u.k * v.i - u.i * v.k,
        ij: u.i * v.j - u.j * v.i,
        ih: u.i * v.h - u.h * v.i,
        jh: u.j * v.h - u.h * v.j,
        kh: u.k * v.h - u.h * v.k,
    }
}

pub fn project(b: Bivector4, plane: BasisPlane) -> f64 {
    match plane {
        BasisPlane::JK => b.jk,
        BasisPlane::KI => b.ki,
        BasisPlane::IJ => b.ij,
        BasisPlane::IH => b.ih,
        BasisPlane::JH => b.jh,
        BasisPlane::KH => b.kh,
    }
}

/// The 3D vector normal to the spatial part of `b`: `(jk, ki, ij)`.
/// The `h` planes are ignored.
pub fn hodge_dual_3(b: Bivector4) -> Vec3 {
    Vec3 { i: b.jk, j: b.ki, k: b.ij }
}

/// A closed polygon in 4D. Vertex `n + 1` is vertex `1`.
#[derive(Clone, Debug, PartialEq)]
pub struct Loop4 {
    vertices: Vec<Vec4>,
}

impl Loop4 {
    pub fn new(vertices: Vec<Vec4>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptyLoop);
        }
        Ok(Loop4 { vertices })
    }

    pub fn vertices(&self) -> &[Vec4] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Directed edges `(X_m, X_{m+1})`, closing back to the first vertex.
    pub fn edges(&self) -> impl Iterator<Item = (Vec4, Vec4)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |m| (self.vertices[m], self.vertices[(m + 1) % n]))
    }

    pub fn reversed(&self) -> Loop4 {
        let mut v = self.vertices.clone();
        v.reverse();
        Loop4 { vertices: v }
    }

    pub fn translated(&self, by: Vec4) -> Loop4 {
        Loop4 { vertices: self.vertices.iter().map(|&v| v + by).collect() }
    }

    pub fn rotated(&self, by: usize) -> Loop4 {
        let mut v = self.vertices.clone();
        if !v.is_empty() {
            let n = v.len();
            v.rotate_left(by % n);
        }
        Loop4 { vertices: v }
    }
}

/// Oriented area `½ Σ X_{m+1} ∧ X_m` of a closed loop.
///
/// With this ordering a counter-clockwise unit square in the `i–j` plane has
/// `ij = −1`. Loops of one or two vertices enclose nothing and give zero.
pub fn shoelace_area(lp: &Loop4) -> Bivector4 {
    if lp.len() <= 2 {
        return Bivector4::ZERO;
    }
    let mut sum = Bivector4::ZERO;
    for (from, to) in lp.edges() {
        sum += wedge(to, from);
    }
    sum * 0.5
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wedge_basis_and_antisymmetry() {
        let b = wedge(Vec4::I, Vec4::J);
        assert_eq!(b, Bivector4 { ij: 1.0, ..Bivector4::ZERO });
        let u = Vec4::new(1.5, -2.0, 0.25, 3.0);
        assert_eq!(wedge(u, u), Bivector4::ZERO);
        let v = Vec4::new(0.5, 1.0, -1.0, 2.0);
        assert_eq!(wedge(u, v), -wedge(v, u));
    }

    #[test]
    fn wedge_by_bilinearity() {
        // (h + 2i) ∧ 3j = 3 h∧j + 6 i∧j = −3 j∧h + 6 i∧j
        let b = wedge(Vec4::H + Vec4::I * 2.0, Vec4::J * 3.0);
        assert_eq!(b, Bivector4 { ij: 6.0, jh: -3.0, ..Bivector4::ZERO });
    }

    #[test]
    fn unit_square_orientation() {
        let sq = Loop4::new(vec![
            Vec4::new(0.0, 0.0, 0.0, 0.0),
            Vec4::new(0.0, 1.0, 0.0, 0.0),
            Vec4::new(0.0, 1.0, 1.0, 0.0),
            Vec4::new(0.0, 0.0, 1.0, 0.0),
        ])
        .unwrap();
        let a = shoelace_area(&sq);
        assert_eq!(a, Bivector4 { ij: -1.0, ..Bivector4::ZERO });
        assert_eq!(shoelace_area(&sq.reversed()), Bivector4 { ij: 1.0, ..Bivector4::ZERO });
    }

    #[test]
    fn short_loops_are_zero() {
        let one = Loop4::new(vec![Vec4::new(1.0, 2.0, 3.0, 4.0)]).unwrap();
        assert_eq!(shoelace_area(&one), Bivector4::ZERO);
        let two = Loop4::new(vec![Vec4::new(1.0, 2.0, 3.0, 4.0), Vec4::new(0.0, 1.0, 0.0, 1.0)]).unwrap();
        assert_eq!(shoelace_area(&two), Bivector4::ZERO);
        assert!(matches!(Loop4::new(vec![]), Err(Error::EmptyLoop)));
    }

    #[test]
    fn degenerate_collinear_loop() {
        let lp = Loop4::new(vec![
            Vec4::new(0.0, 0.0, 0.0, 0.0),
            Vec4::new(1.0, 1.0, 1.0, 1.0),
            Vec4::new(2.0, 2.0, 2.0, 2.0),
            Vec4::new(2.0, 2.0, 2.0, 2.0),
        ])
        .unwrap();
        assert_eq!(shoelace_area(&lp).max_abs(), 0.0);
    }

    #[test]
    fn projections() {
        let b = Bivector4 { ij: 6.0, ..Bivector4::ZERO };
        assert_eq!(project(b, BasisPlane::IJ), 6.0);
        for plane in BasisPlane::ALL {
            assert_eq!(project(Bivector4::ZERO, plane), 0.0);
        }
        let c = Bivector4::from_array([1.0, 2.0, 3.0, 4.0, 5.0, 6.0]);
        let got: Vec<f64> = BasisPlane::ALL.iter().map(|&p| project(c, p)).collect();
        assert_eq!(got, vec![1.0, 2.0, 3.0, 4.0, 5.0, 6.0]);
    }

    #[test]
    fn triangle_on_k_i_plane() {
        // ξ-spread t, ζ-spread s: |ki| = ½ts
        let (t, s) = (0.7, 1.9);
        let tri = Loop4::new(vec![Vec4::ZERO, Vec4::new(0.0, t, 0.0, 0.0), Vec4::new(0.0, 0.0, 0.0, s)]).unwrap();
        let ki = project(shoelace_area(&tri), BasisPlane::KI);
        assert!((ki.abs() - 0.5 * t * s).abs() < 1e-15);
    }

    #[test]
    fn hodge_basis() {
        let b = Bivector4 { jk: 1.0, ih: 5.0, ..Bivector4::ZERO };
        assert_eq!(hodge_dual_3(b), Vec3::I);
        assert_eq!(hodge_dual_3(Bivector4::ZERO), Vec3::ZERO);
    }

    #[test]
    fn hodge_of_spatial_wedge_is_cross_product() {
        let u = Vec3::new(1.0, -2.0, 0.5);
        let v = Vec3::new(3.0, 0.25, -1.0);
        // determinant expansion of |i j k; u; v|
        let det = Vec3::new(u.j * v.k - u.k * v.j, -(u.i * v.k - u.k * v.i), u.i * v.j - u.j * v.i);
        let got = hodge_dual_3(wedge(u.with_h(0.0), v.with_h(0.0)));
        assert!((got - det).max_abs() < 1e-15);
        assert_eq!(got, u.cross(v));
    }

    #[test]
    #[should_panic]
    fn constructors_reject_nan() {
        let _ = Vec4::new(f64::NAN, 0.0, 0.0, 0.0);
    }

    #[test]
    fn try_new_rejects_infinity() {
        assert!(Vec3::try_new(0.0, f64::INFINITY, 0.0).is_err());
        assert!(Vec4::try_new(0.0, 0.0, 0.0, f64::NEG_INFINITY).is_err());
    }
}
