//! Isomorphism, planarity, self-duality and the checks built on them.

mod canon;
mod enumerate;
mod fingerprint;
mod planarity;
mod witnesses;

pub use canon::{
    canonical_form, canonical_graph, canonical_labeling, isomorphic, isomorphic_colored,
    CanonicalLabeling,
};
pub use enumerate::{
    default_order_cap, enumerate_realizations, EnumerationQuery, Filters, Realization,
};
pub use fingerprint::{
    component_fingerprint, component_fingerprint_colored, ComponentDescriptor, Fingerprint,
};
pub use planarity::{is_planar, planar_embed};
pub use witnesses::{two_witnesses, WitnessBranch, WitnessPair};

use crate::constructions::{high_degree_indices, DegreeTuple};
use crate::error::{Error, Result};
use crate::planar_map::{is_polyhedral_map, LabeledRadial, PlanarMap, Side};

/// Whether the polyhedral map `m` is isomorphic to its dual.
pub fn is_self_dual(m: &PlanarMap) -> Result<bool> {
    Ok(self_duality_witness(m)?.is_some())
}

/// A bijection from the vertices of `m` to its faces (numbered as in
/// [`PlanarMap::face_darts`]) that maps adjacent vertices to adjacent faces.
pub fn self_duality_witness(m: &PlanarMap) -> Result<Option<Vec<usize>>> {
    if !is_polyhedral_map(m) {
        return Err(Error::NotPolyhedral);
    }
    Ok(isomorphic(&m.underlying(), &m.dual().underlying()))
}

/// Whether `v_i -> f_i` is an isomorphism from the primal extraction of `r`
/// onto its dual extraction.
pub fn check_phi(r: &LabeledRadial) -> Result<bool> {
    if r.class_size(Side::Primal) != r.class_size(Side::Dual) {
        return Err(Error::MissingLabels);
    }
    let p = r.extract(Side::Primal)?.underlying();
    let d = r.extract(Side::Dual)?.underlying();
    Ok(p.order() == d.order() && p.edges().eq(d.edges()))
}

/// Checks the adjacency pattern among the high-degree vertices of
/// `P = algorithm_one(t)`: `u_i ~ u_{i+1}`; `u_i ~ u_{i+2}` iff
/// `t_{i+1} = 5`; `u_i ~ u_{i+3}` iff `t_{i+1} = t_{i+2} = 4`; no other pairs.
///
/// `u_i` is located through the `v{index}` labels of `p`.
pub fn check_lemma_leaf(t: &DegreeTuple, p: &PlanarMap) -> Result<bool> {
    let labels = p.labels().ok_or(Error::LabelsUnavailable)?;
    let u: Vec<usize> = high_degree_indices(t)
        .into_iter()
        .map(|i| {
            let name = format!("v{i}");
            labels.iter().position(|l| *l == name).ok_or(Error::LabelsUnavailable)
        })
        .collect::<Result<_>>()?;
    let ts = t.entries();
    let g = p.underlying();
    if u.iter().zip(ts).any(|(&v, &ti)| g.degree(v) != ti) {
        return Ok(false);
    }
    for i in 0..u.len() {
        for j in i + 1..u.len() {
            let expected = match j - i {
                1 => true,
                2 => ts[i + 1] == 5,
                3 => ts[i + 1] == 4 && ts[i + 2] == 4,
                _ => false,
            };
            if g.has_edge(u[i], u[j]) != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
