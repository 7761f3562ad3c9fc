//! Exact computation of geodetic numbers, strong geodetic numbers and strong
//! geodetic core numbers of small graphs.
//!
//! A set `S` of vertices is *strong geodetic* when one shortest path can be
//! fixed for every pair of vertices of `S` so that together the paths cover
//! the whole graph. A *core* of `S` is a subset `X` such that the paths of the
//! pairs meeting `X` already cover the graph.
//!
//! ```
//! use geodekit::{families, solver, SearchLimits};
//!
//! let g = families::hat_subdivision(&families::complete(4).unwrap()).unwrap();
//! let sg = solver::strong_geodetic_number(&g, &SearchLimits::default())
//!     .unwrap()
//!     .expect_proved("sg");
//! assert_eq!(sg.value, 4);
//! assert!(sg.certificate.verify(&g).is_ok());
//! ```

pub mod bounds;
pub mod census;
pub mod codec;
pub mod distance;
mod error;
pub mod families;
mod graph;
mod limits;
pub mod solver;
mod vertex_set;

pub use distance::{DistanceOracle, GeodesicCount};
pub use error::{Error, Result};
pub use families::FamilySpec;
pub use graph::{Graph, Path};
pub use limits::{Bracket, Limit, Outcome, SearchLimits};
pub use vertex_set::VertexSet;
