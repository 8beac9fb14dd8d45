//! Graphic statics for self-stressed 3D frames through the Legendre transform.
//!
//! A stress function `f` over the body space `(f, x, y, z)` maps to a dual
//! stress function `φ` over the stress space `(φ, ξ, η, ζ)`. Each structural
//! loop of a frame is described by one closed dual loop; `p` times its six
//! projected areas give the force and the total moment about the origin at
//! every cut of that loop. Replacing `φ` by the original `f` at the dual
//! coordinates gives the hybrid loop of a cut, whose `h`-plane areas are the
//! bending and torsional moments there.
//!
//! Modules:
//!
//! * [`bivector`]: 4D vectors, wedge products, shoelace areas and projections
//! * [`legendre`]: exact (cellwise linear) and sampled Legendre transforms
//! * [`frame`]: structural loops of straight and circular bars, dual loops
//! * [`resultants`]: force, total, lever and internal moments
//! * [`verify`]: the classical statics oracle and the invariant harness
//! * [`document`], [`render`]: JSON/CSV formats and SVG projections
//! * [`fixtures`]: the rectangular and curved single-loop frames

pub mod bivector;
pub mod document;
pub mod error;
pub mod fixtures;
pub mod frame;
pub mod legendre;
pub mod render;
pub mod resultants;
pub mod verify;

pub use bivector::{hodge_dual_3, project, shoelace_area, wedge, BasisPlane, Bivector4, Loop4, Vec3, Vec4};
pub use error::{Error, Result};
pub use frame::{position_at, CutPoint, DualLoop, StructuralLoop};
pub use legendre::{DualPoint, LinearStressFunction, SampledField};
pub use resultants::{decompose, StressResultant};
