//! Self-dual 3-polytopes built from degree sequences through surgery on
//! their radial (vertex-face) graphs, plus the tools needed to check them:
//! isomorphism, planarity, self-duality and an exhaustive realisation oracle.
//!
//! ```
//! use selfdual::constructions::{algorithm_one, DegreeTuple};
//! use selfdual::verify::is_self_dual;
//!
//! let t: DegreeTuple = "6,6".parse().unwrap();
//! let out = algorithm_one(&t).unwrap();
//! assert_eq!(out.polyhedron.degree_sequence().to_string(), "6,6,3^8");
//! assert!(is_self_dual(&out.polyhedron).unwrap());
//! ```

pub mod constructions;
pub mod error;
pub mod graph;
pub mod planar_map;
pub mod suite;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{AbstractGraph, DegreeSequence};
pub use planar_map::{build_map, LabeledRadial, PlanarMap};
