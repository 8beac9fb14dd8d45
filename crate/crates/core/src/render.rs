//! SVG views of a loop projected onto the six basis planes.
//!
//! Each panel shows one projection with edge arrows, the signed projected
//! area and, for dual and hybrid loops, the resultant component that area
//! implies. The numbers come straight from [`shoelace_area`]; the drawing is
//! only a view of them.

use std::fmt::Write as _;

use crate::bivector::{project, shoelace_area, BasisPlane, Bivector4, Loop4, Vec4};
use crate::document::ProjectDocument;
use crate::error::Result;
use crate::frame::{position_at, BarSegment, CutPoint};
use crate::resultants::{dual_as_loop4, dual_resultants_from_area, hybrid_as_loop4, internal_from_hybrid_area};

const PANEL: f64 = 300.0;
const MARGIN: f64 = 30.0;
const ARC_STEPS: usize = 32;

#[derive(Copy, Clone, Debug, PartialEq)]
pub enum RenderTarget {
    /// The structural loop itself, at `f = 0`.
    Form,
    /// The dual loop `(φ, ξ)`.
    Dual,
    /// The hybrid loop `(f, ξ)` for a cut.
    Hybrid(CutPoint),
}

/// What one panel reports.
#[derive(Clone, Debug, PartialEq)]
pub struct PanelAnnotation {
    pub plane: BasisPlane,
    pub area: f64,
    /// Name and value of the implied resultant component, if any.
    pub quantity: Option<(&'static str, f64)>,
}

fn form_loop(doc: &ProjectDocument) -> Option<Loop4> {
    let mut pts = Vec::new();
    for seg in doc.structure.segments() {
        match seg {
            BarSegment::Straight { start, .. } => pts.push(start.with_h(0.0)),
            BarSegment::CircularArc { sweep, .. } => {
                for n in 0..ARC_STEPS {
                    pts.push(seg.point(sweep * n as f64 / ARC_STEPS as f64).with_h(0.0));
                }
            }
        }
    }
    Loop4::new(pts).ok()
}

fn target_loop(doc: &ProjectDocument, target: RenderTarget) -> Result<Option<Loop4>> {
    Ok(match target {
        RenderTarget::Form => form_loop(doc),
        RenderTarget::Dual => dual_as_loop4(&doc.dual),
        RenderTarget::Hybrid(cut) => {
            let x = position_at(&doc.structure, cut)?;
            doc.structure.cut(cut.segment, cut.param)?;
            hybrid_as_loop4(&doc.dual, x)
        }
    })
}

const FORCE_NAMES: [&str; 3] = ["force_i", "force_j", "force_k"];
const TOTAL_NAMES: [&str; 3] = ["total_moment_i", "total_moment_j", "total_moment_k"];
const INTERNAL_NAMES: [&str; 3] = ["internal_moment_i", "internal_moment_j", "internal_moment_k"];

fn annotate(area: Bivector4, p: f64, target: RenderTarget) -> Vec<PanelAnnotation> {
    let (force, total) = dual_resultants_from_area(area, p);
    let internal = internal_from_hybrid_area(area, p);
    BasisPlane::ALL
        .iter()
        .map(|&plane| {
            let axis = plane.axis();
            let quantity = match (target, plane.involves_h()) {
                (RenderTarget::Form, _) => None,
                (_, false) => Some((FORCE_NAMES[axis], force.to_array()[axis])),
                (RenderTarget::Dual, true) => Some((TOTAL_NAMES[axis], total.to_array()[axis])),
                (RenderTarget::Hybrid(_), true) => Some((INTERNAL_NAMES[axis], internal.to_array()[axis])),
            };
            PanelAnnotation { plane, area: project(area, plane), quantity }
        })
        .collect()
}

/// Per-panel areas and implied resultants, as printed by [`render_projections`].
pub fn panel_annotations(doc: &ProjectDocument, target: RenderTarget) -> Result<Vec<PanelAnnotation>> {
    let area = target_loop(doc, target)?.map(|l| shoelace_area(&l)).unwrap_or(Bivector4::ZERO);
    Ok(annotate(area, doc.dual.p, target))
}

fn title(target: RenderTarget) -> String {
    match target {
        RenderTarget::Form => "form loop (f, x, y, z)".into(),
        RenderTarget::Dual => "dual loop (phi, xi, eta, zeta)".into(),
        RenderTarget::Hybrid(c) => format!("hybrid loop (f, xi, eta, zeta) at cut {}:{}", c.segment, c.param),
    }
}

/// One SVG with six panels, `j–k k–i i–j` on top and `i–h j–h k–h` below.
pub fn render_projections(doc: &ProjectDocument, target: RenderTarget) -> Result<String> {
    let lp = target_loop(doc, target)?;
    let area = lp.as_ref().map(shoelace_area).unwrap_or(Bivector4::ZERO);
    let notes = annotate(area, doc.dual.p, target);
    let vertices: &[Vec4] = lp.as_ref().map(Loop4::vertices).unwrap_or(&[]);

    let width = 3.0 * PANEL;
    let height = 2.0 * PANEL + MARGIN;
    let mut svg = String::new();
    writeln!(
        svg,
        r#"<?xml version="1.0" encoding="UTF-8"?>
<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">
<defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="6" markerHeight="6" orient="auto-start-reverse"><path d="M 0 0 L 10 5 L 0 10 z" fill="black"/></marker></defs>
<text x="10" y="20" font-family="sans-serif" font-size="14">{} p={}</text>"#,
        title(target),
        doc.dual.p
    )
    .unwrap();

    for (n, note) in notes.iter().enumerate() {
        let ox = PANEL * (n % 3) as f64;
        let oy = MARGIN + PANEL * (n / 3) as f64;
        write_panel(&mut svg, ox, oy, note, vertices);
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

fn write_panel(svg: &mut String, ox: f64, oy: f64, note: &PanelAnnotation, vertices: &[Vec4]) {
    let plane = note.plane;
    let pts: Vec<(f64, f64)> = vertices.iter().map(|&v| plane.coordinates(v)).collect();
    let (mut lo, mut hi) = ((f64::INFINITY, f64::INFINITY), (f64::NEG_INFINITY, f64::NEG_INFINITY));
    for &(a, b) in &pts {
        lo = (lo.0.min(a), lo.1.min(b));
        hi = (hi.0.max(a), hi.1.max(b));
    }
    let inner = PANEL - 3.0 * MARGIN;
    let span = if pts.is_empty() { 0.0 } else { (hi.0 - lo.0).max(hi.1 - lo.1) };
    let scale = if span > 0.0 { inner / span } else { 1.0 };
    let (cx, cy) = if pts.is_empty() { (0.0, 0.0) } else { (0.5 * (lo.0 + hi.0), 0.5 * (lo.1 + hi.1)) };
    let centre = (ox + 0.5 * PANEL, oy + 0.5 * PANEL);
    let to_px = |(a, b): (f64, f64)| (centre.0 + (a - cx) * scale, centre.1 - (b - cy) * scale);

    let (h_label, v_label) = plane.label().split_once('-').unwrap();
    let q = note.quantity.map(|(name, v)| format!(r#" data-quantity="{name}" data-value="{v:e}""#)).unwrap_or_default();
    writeln!(
        svg,
        r#"<g class="panel" data-plane="{}" data-area="{:e}" data-scale="{:e}"{q}>"#,
        plane.label(),
        note.area,
        scale
    )
    .unwrap();
    writeln!(svg, r##"<rect x="{ox}" y="{oy}" width="{PANEL}" height="{PANEL}" fill="none" stroke="#bbb"/>"##).unwrap();
    writeln!(
        svg,
        r#"<text x="{}" y="{}" font-family="sans-serif" font-size="13" font-weight="bold">{} plane</text>"#,
        ox + 8.0,
        oy + 16.0,
        plane.label()
    )
    .unwrap();
    writeln!(
        svg,
        r##"<text x="{}" y="{}" font-family="sans-serif" font-size="10" fill="#666">horizontal {h_label}, vertical {v_label}, scale {scale:.4e} px/unit</text>"##,
        ox + 8.0,
        oy + 30.0
    )
    .unwrap();

    let m = pts.len();
    for e in 0..m {
        if m < 2 {
            break;
        }
        let (x1, y1) = to_px(pts[e]);
        let (x2, y2) = to_px(pts[(e + 1) % m]);
        if (x1 - x2).abs() < 1e-9 && (y1 - y2).abs() < 1e-9 {
            continue;
        }
        writeln!(
            svg,
            r#"<line x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}" stroke="black" stroke-width="1.5" marker-end="url(#arrow)"/>"#
        )
        .unwrap();
    }
    for &pt in &pts {
        let (x, y) = to_px(pt);
        writeln!(svg, r#"<circle cx="{x:.3}" cy="{y:.3}" r="2.5" fill="black"/>"#).unwrap();
    }

    writeln!(
        svg,
        r#"<text x="{}" y="{}" font-family="sans-serif" font-size="12">area = {:.6e}</text>"#,
        ox + 8.0,
        oy + PANEL - 26.0,
        note.area
    )
    .unwrap();
    if let Some((name, value)) = note.quantity {
        writeln!(
            svg,
            r#"<text x="{}" y="{}" font-family="sans-serif" font-size="12">{name} = {value:.6e}</text>"#,
            ox + 8.0,
            oy + PANEL - 10.0
        )
        .unwrap();
    }
    svg.push_str("</g>\n");
}
