//! Small strong epsilon-nets for axis-parallel boxes, halfplanes and disks,
//! together with exact brute-force adversaries that certify them.
//!
//! The crate is organised bottom-up:
//!
//! * [`geom`]: exact predicates, hull, Delaunay, depth and centerpoints;
//! * [`builders`]: constructive nets with a certified epsilon;
//! * [`oracle`]: exhaustive adversaries and lower-bound verification;
//! * [`generators`]: lower-bound point configurations and composition;
//! * [`table`], [`io`], [`render`]: experiment harness, JSON and SVG output.

pub mod builders;
pub mod error;
pub mod exact;
pub mod family;
pub mod generators;
pub mod geom;
pub mod io;
pub mod net;
pub mod oracle;
pub mod render;
pub mod table;

pub use error::{Error, Result};
pub use exact::Rational;
pub use family::RangeFamily;
pub use net::{Members, Net};
