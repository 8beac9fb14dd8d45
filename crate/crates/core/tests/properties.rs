use approx::abs_diff_eq;
use proptest::prelude::*;

use frame_duals::bivector::{shoelace_area, wedge, Bivector4, Loop4, Vec3, Vec4};
use frame_duals::document::{emit_document, parse_document, Meta, ProjectDocument};
use frame_duals::frame::{BarSegment, DualLoop, StructuralLoop};
use frame_duals::legendre::{dual_of_linear, linear_from_dual, DualPoint, LinearStressFunction};
use frame_duals::resultants::{force, internal_moment, internal_via_area, resultants_via_area, total_moment};

fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
    let scale = 1.0 + a.iter().chain(b).fold(0.0f64, |m, v| m.max(v.abs()));
    a.iter().zip(b).all(|(x, y)| abs_diff_eq!(x, y, epsilon = tol * scale))
}

fn coord() -> impl Strategy<Value = f64> {
    -10.0..10.0f64
}

fn vec3() -> impl Strategy<Value = Vec3> {
    (coord(), coord(), coord()).prop_map(|(i, j, k)| Vec3::new(i, j, k))
}

fn vec4() -> impl Strategy<Value = Vec4> {
    (coord(), coord(), coord(), coord()).prop_map(|(h, i, j, k)| Vec4::new(h, i, j, k))
}

fn loop4(max: usize) -> impl Strategy<Value = Vec<Vec4>> {
    prop::collection::vec(vec4(), 1..=max)
}

fn dual(max: usize) -> impl Strategy<Value = DualLoop> {
    (prop::collection::vec((coord(), vec3()), 0..=max), 0.01..10.0f64).prop_map(|(vs, p)| {
        DualLoop::new(vs.into_iter().map(|(phi, xi)| DualPoint::new(phi, xi)).collect(), p).unwrap()
    })
}

fn area(vs: Vec<Vec4>) -> [f64; 6] {
    shoelace_area(&Loop4::new(vs).unwrap()).to_array()
}

proptest! {
    #[test]
    fn wedge_is_antisymmetric(u in vec4(), v in vec4()) {
        prop_assert_eq!(wedge(u, v), -wedge(v, u));
        prop_assert_eq!(wedge(u, u), Bivector4::ZERO);
    }

    #[test]
    fn wedge_is_bilinear(u in vec4(), v in vec4(), w in vec4(), a in coord()) {
        let lhs = wedge(u * a + w, v).to_array();
        let rhs = (wedge(u, v) * a + wedge(w, v)).to_array();
        prop_assert!(close(&lhs, &rhs, 1e-12));
    }

    #[test]
    fn shoelace_ignores_translation(vs in loop4(10), shift in vec4()) {
        let lp = Loop4::new(vs).unwrap();
        let moved = shoelace_area(&lp.translated(shift)).to_array();
        prop_assert!(close(&moved, &shoelace_area(&lp).to_array(), 1e-12));
    }

    #[test]
    fn shoelace_ignores_starting_vertex(vs in loop4(10), by in 0usize..10) {
        let lp = Loop4::new(vs).unwrap();
        let turned = shoelace_area(&lp.rotated(by)).to_array();
        prop_assert!(close(&turned, &shoelace_area(&lp).to_array(), 1e-12));
    }

    #[test]
    fn shoelace_flips_with_orientation(vs in loop4(10)) {
        let lp = Loop4::new(vs).unwrap();
        let back = shoelace_area(&lp.reversed());
        prop_assert!(close(&back.to_array(), &(-shoelace_area(&lp)).to_array(), 1e-12));
    }

    #[test]
    fn shoelace_splits_along_a_chord(vs in loop4(10), cut in 2usize..10) {
        let n = vs.len();
        prop_assume!(n >= 3 && cut < n);
        let left = vs[..=cut].to_vec();
        let mut right = vs[cut..].to_vec();
        right.push(vs[0]);
        let whole = area(vs);
        let parts: Vec<f64> = area(left).iter().zip(area(right)).map(|(a, b)| a + b).collect();
        prop_assert!(close(&whole, &parts, 1e-12));
    }

    #[test]
    fn moment_identity_holds(d in dual(8), x in vec3()) {
        let total = total_moment(&d);
        let split = x.cross(force(&d)) + internal_moment(&d, x);
        prop_assert!(close(&total.to_array(), &split.to_array(), 1e-9));
    }

    #[test]
    fn area_and_direct_sums_agree(d in dual(8), x in vec3()) {
        let (f, m) = resultants_via_area(&d);
        prop_assert!(close(&f.to_array(), &force(&d).to_array(), 1e-12));
        prop_assert!(close(&m.to_array(), &total_moment(&d).to_array(), 1e-12));
        prop_assert!(close(&internal_via_area(&d, x).to_array(), &internal_moment(&d, x).to_array(), 1e-12));
    }

    #[test]
    fn phi_offset_leaves_resultants(d in dual(8), c in coord(), x in vec3()) {
        let mut shifted = d.clone();
        for v in &mut shifted.vertices {
            v.phi += c;
        }
        prop_assert_eq!(force(&shifted), force(&d));
        prop_assert!(close(&total_moment(&shifted).to_array(), &total_moment(&d).to_array(), 1e-12));
        prop_assert!(close(&internal_moment(&shifted, x).to_array(), &internal_moment(&d, x).to_array(), 1e-12));
    }

    #[test]
    fn small_duals_carry_orthogonal_resultants(d in dual(4)) {
        let (p, m) = (force(&d), total_moment(&d));
        prop_assert!(p.dot(m).abs() <= 1e-9 * (1.0 + p.norm() * m.norm()));
    }

    #[test]
    fn linear_dual_round_trips(a0 in coord(), g in vec3(), x in vec3()) {
        let f = LinearStressFunction::new(a0, g);
        let d = dual_of_linear(&f);
        prop_assert_eq!(linear_from_dual(d), f);
        prop_assert!(abs_diff_eq!(f.eval(x) + d.phi, d.xi.dot(x), epsilon = 1e-12 * (1.0 + g.dot(x).abs())));
    }

    #[test]
    fn documents_round_trip(pts in prop::collection::vec(vec3(), 3..8), d in dual(6), seed in any::<Option<u64>>()) {
        let n = pts.len();
        let segs: Result<Vec<_>, _> = (0..n).map(|m| BarSegment::straight(pts[m], pts[(m + 1) % n])).collect();
        prop_assume!(segs.is_ok());
        let structure = StructuralLoop::new(segs.unwrap()).unwrap();
        let doc = ProjectDocument { structure, dual: d, fields: vec![], meta: Meta { seed, ..Meta::default() } };
        let text = emit_document(&doc);
        prop_assert_eq!(parse_document(&text).unwrap(), doc);
    }
}
