//! Floating-point wireframe frames of the construction: projections of the
//! `m`-cube to the plane or to 3-space, a sequence of plane rotations swept
//! by a time parameter, and SVG/OBJ emitters.

mod output;
mod projection;
mod rotation;
mod scene;

pub use output::{animate, hsv_hex, render_frame, FrameSpec, OutputFormat};
pub use projection::{
    projection_axes3d, projection_octahedral4, projection_roots2d, projection_roots3d, AxesVariant,
    ProjectionKind, ProjectionMatrix,
};
pub use rotation::{mat_mul, plane_rotation, rotation_pairs, rotation_schedule, FloatMat};
pub use scene::{build_scene, ElementClass, Scene};
