//! Project documents (JSON) and sampled fields (CSV).
//!
//! A document looks like
//!
//! ```json
//! {
//!   "structure": { "segments": [
//!     { "kind": "straight", "start": [-2, 1, 0], "end": [-2, -1, 0] },
//!     { "kind": "circular_arc", "center": [2, 0, 0], "radius": 1,
//!       "e1": [0, -1, 0], "e2": [1, 0, 0], "sweep": 3.141592653589793 }
//!   ] },
//!   "dual": { "p": 1.0, "vertices": [[0, 0, 0, 0], [-2, 0, 0, 1], [0, 1, 0, 0]] },
//!   "fields": [],
//!   "meta": { "name": "rectangle", "units": "m, kN", "seed": 42 }
//! }
//! ```
//!
//! Dual vertices are `[φ, ξ, η, ζ]`. `fields` and `meta` are optional.
//!
//! Sampled fields are CSV with a header line naming the columns, one row per
//! lattice node: the 1 to 3 coordinates, then the value.

use serde::{Deserialize, Serialize};

use crate::bivector::Vec3;
use crate::error::{Error, Result};
use crate::frame::{BarSegment, DualLoop, StructuralLoop};
use crate::legendre::{DualPoint, DualSample, SampledField};

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Meta {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub units: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NamedField {
    pub name: String,
    #[serde(flatten)]
    pub field: SampledField,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ProjectDocument {
    pub structure: StructuralLoop,
    pub dual: DualLoop,
    pub fields: Vec<NamedField>,
    pub meta: Meta,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct StructureRepr {
    segments: Vec<BarSegment>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DualRepr {
    p: f64,
    vertices: Vec<DualPoint>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DocumentRepr {
    structure: StructureRepr,
    dual: DualRepr,
    #[serde(default)]
    fields: Vec<NamedField>,
    #[serde(default)]
    meta: Meta,
}

fn schema(path: impl Into<String>, message: impl ToString) -> Error {
    Error::Schema { path: path.into(), message: message.to_string() }
}

/// Parse and validate a document. Closure and pressure are checked here, so
/// a returned document is always usable.
pub fn parse_document(text: &str) -> Result<ProjectDocument> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let repr: DocumentRepr = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        schema(path, e.into_inner())
    })?;

    for (m, seg) in repr.structure.segments.iter().enumerate() {
        seg.validate().map_err(|e| schema(format!("structure.segments[{m}]"), e))?;
    }
    let structure = StructuralLoop::new(repr.structure.segments)?;
    let dual = DualLoop::new(repr.dual.vertices, repr.dual.p)?;
    for (m, f) in repr.fields.iter().enumerate() {
        SampledField::new(
            f.field.origin.clone(),
            f.field.spacing.clone(),
            f.field.counts.clone(),
            f.field.values.clone(),
        )
        .map_err(|e| schema(format!("fields[{m}]"), e))?;
    }
    Ok(ProjectDocument { structure, dual, fields: repr.fields, meta: repr.meta })
}

/// Canonical JSON form. Floats are written in shortest round-trip notation.
pub fn emit_document(doc: &ProjectDocument) -> String {
    let repr = DocumentRepr {
        structure: StructureRepr { segments: doc.structure.segments().to_vec() },
        dual: DualRepr { p: doc.dual.p, vertices: doc.dual.vertices.clone() },
        fields: doc.fields.clone(),
        meta: doc.meta.clone(),
    };
    serde_json::to_string_pretty(&repr).expect("document serialises")
}

/// Read a sampled field from CSV text.
pub fn parse_field_csv(text: &str) -> Result<SampledField> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines.next().ok_or(Error::Csv { line: 1, message: "missing header".into() })?;
    let columns = header.split(',').count();
    if !(2..=4).contains(&columns) {
        return Err(Error::Csv { line: 1, message: format!("expected 2 to 4 columns, got {columns}") });
    }
    let dim = columns - 1;
    let mut rows = Vec::new();
    for (n, line) in lines {
        let cells: Vec<&str> = line.split(',').map(str::trim).collect();
        if cells.len() != columns {
            return Err(Error::Csv {
                line: n + 1,
                message: format!("expected {columns} columns, got {}", cells.len()),
            });
        }
        let nums = cells
            .iter()
            .map(|c| c.parse::<f64>())
            .collect::<Result<Vec<f64>, _>>()
            .map_err(|e| Error::Csv { line: n + 1, message: e.to_string() })?;
        if nums.iter().any(|v| !v.is_finite()) {
            return Err(Error::Csv { line: n + 1, message: "non-finite number".into() });
        }
        rows.push((nums[..dim].to_vec(), nums[dim]));
    }
    SampledField::from_rows(dim, &rows)
}

pub fn emit_field_csv(field: &SampledField) -> String {
    let names = ["x", "y", "z"];
    let dim = field.dim();
    let mut out = names[..dim].join(",");
    out.push_str(",f\n");
    for flat in 0..field.len() {
        let idx = field.unflatten(flat);
        let p = field.point(&idx).to_array();
        for c in &p[..dim] {
            out.push_str(&format!("{c},"));
        }
        out.push_str(&format!("{}\n", field.values[flat]));
    }
    out
}

/// Dual samples as CSV: `ξ…, φ, x…` restricted to the field's dimension.
pub fn emit_dual_csv(samples: &[DualSample], dim: usize) -> String {
    let dual_names = ["xi", "eta", "zeta"];
    let body_names = ["x", "y", "z"];
    let mut out = format!("{},phi,{}\n", dual_names[..dim].join(","), body_names[..dim].join(","));
    for s in samples {
        let xi = s.xi.to_array();
        let x = s.source_x.to_array();
        let mut row: Vec<String> = xi[..dim].iter().map(|v| v.to_string()).collect();
        row.push(s.phi.to_string());
        row.extend(x[..dim].iter().map(|v| v.to_string()));
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

/// Parse the CSV written by [`emit_dual_csv`].
pub fn parse_dual_csv(text: &str) -> Result<Vec<DualSample>> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines.next().ok_or(Error::Csv { line: 1, message: "missing header".into() })?;
    let columns = header.split(',').count();
    if columns % 2 == 0 || !(3..=7).contains(&columns) {
        return Err(Error::Csv { line: 1, message: format!("unexpected column count {columns}") });
    }
    let dim = (columns - 1) / 2;
    let mut out = Vec::new();
    for (n, line) in lines {
        let nums = line
            .split(',')
            .map(|c| c.trim().parse::<f64>())
            .collect::<Result<Vec<f64>, _>>()
            .map_err(|e| Error::Csv { line: n + 1, message: e.to_string() })?;
        if nums.len() != columns {
            return Err(Error::Csv { line: n + 1, message: format!("expected {columns} columns, got {}", nums.len()) });
        }
        let mut xi = [0.0; 3];
        let mut x = [0.0; 3];
        xi[..dim].copy_from_slice(&nums[..dim]);
        x[..dim].copy_from_slice(&nums[dim + 1..]);
        out.push(DualSample { xi: Vec3::from(xi), phi: nums[dim], source_x: Vec3::from(x) });
    }
    Ok(out)
}
