//! Exact planar and d-dimensional primitives.

pub mod delaunay;
pub mod depth;
pub mod frame;
pub mod hull;
pub mod kernel;
pub mod point;
pub mod predicates;
pub mod rank;

pub use delaunay::delaunay;
pub use depth::{center_depth, centerpoint2d, halfplane_depth};
pub use hull::convex_hull;
pub use point::{Point, PointSet, Triangle};
pub use predicates::{in_circle, orient2d};
pub use rank::{jitter, rank_normalize, ranks};
