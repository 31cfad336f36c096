//! Miquel points, pedal triangles and the named points of a triangle.

pub mod centers;
pub mod chains;
pub mod error;
pub mod figure;
pub mod kernel;
pub mod miquel;
pub mod scene;
pub mod triangle;
pub mod verify;

pub use error::{Error, Result};
pub use kernel::{Circle, DirectedAngle, Line, Point, Tolerance};
pub use triangle::{triangle_contains, Containment, Correspondence, Triangle, Vertex};
pub use centers::{BrocardKind, CatalogEntry, CatalogKind, CenterKind};
pub use chains::{ChainRecord, RoleCycle, ThetaSchedule};
pub use figure::{render_figure, Element};
pub use miquel::{MiquelResult, Orientation, SimilarityClass, SpecialRole, Triad};
pub use scene::{emit_scene, parse_scene, Scene, SceneSpec};
pub use verify::{SuiteRun, VerifyReport};
