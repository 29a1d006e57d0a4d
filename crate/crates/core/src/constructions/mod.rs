//! Constructions of self-dual polyhedra and of the comparison families.

mod algorithm_one;
mod algorithm_two;
mod direct;
mod green;
mod tuple;

pub use algorithm_one::{
    algorithm_one, algorithm_one_from, high_degree_indices, relabel_after_z, seed_cube,
    z_transform, AlgorithmOneOutput, RelabelMode,
};
pub use algorithm_two::{
    algorithm_two_step, construct_G, construct_G_labelled, g6, FaceLabelledMap,
};
pub use direct::{construct_Q, construct_S};
pub use green::{construct_P_prime, seed_green};
pub use tuple::DegreeTuple;
