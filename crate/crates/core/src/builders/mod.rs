//! Constructive strong nets with a certified epsilon.

pub mod disk;
pub mod halfspace;
pub mod rect;

pub use disk::{build_disk_net2, disk_net2_construction, DiskNet2};
pub use halfspace::build_halfspace_net;
pub use rect::{
    build_box_strong_centerpoint, build_rect_net, build_rect_net2, build_rect_net_grid,
    build_rect_net_onept, find_dominant_point, grid_eps, onept_eps, rect_upper_bound,
    MAX_RECT_SIZE,
};
