use std::fmt;

use super::canon::canonical_labeling;
use crate::graph::AbstractGraph;

/// Isomorphism-invariant summary of one connected component.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ComponentDescriptor {
    pub order: usize,
    pub size: usize,
    /// Degrees within the component, non-increasing.
    pub degrees: Vec<usize>,
    /// Vertices of degree 1.
    pub end_vertices: usize,
    pub canonical: Vec<u8>,
}

/// Sorted multiset of component descriptors. Different fingerprints imply
/// non-isomorphic graphs; equal fingerprints imply isomorphic ones.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fingerprint(Vec<ComponentDescriptor>);

impl Fingerprint {
    pub fn components(&self) -> &[ComponentDescriptor] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total number of end-vertices over all components.
    pub fn end_vertices(&self) -> usize {
        self.0.iter().map(|c| c.end_vertices).sum()
    }

    /// Number of components that are a single edge.
    pub fn k2_components(&self) -> usize {
        self.0.iter().filter(|c| c.order == 2 && c.size == 1).count()
    }
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|c| {
                let degs: Vec<String> = c.degrees.iter().map(usize::to_string).collect();
                format!(
                    "[n={} m={} deg={} ends={}]",
                    c.order,
                    c.size,
                    degs.join(","),
                    c.end_vertices
                )
            })
            .collect();
        if parts.is_empty() {
            write!(f, "(empty)")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

/// Fingerprint of the connected components of `g`.
pub fn component_fingerprint(g: &AbstractGraph) -> Fingerprint {
    fingerprint_inner(g, None)
}

/// Like [`component_fingerprint`], but component forms also respect the
/// vertex colours.
pub fn component_fingerprint_colored(g: &AbstractGraph, colors: &[u64]) -> Fingerprint {
    assert_eq!(colors.len(), g.order(), "one colour per vertex");
    fingerprint_inner(g, Some(colors))
}

fn fingerprint_inner(g: &AbstractGraph, colors: Option<&[u64]>) -> Fingerprint {
    let mut out: Vec<ComponentDescriptor> = g
        .components()
        .into_iter()
        .map(|comp| {
            let h = g.induced(&comp);
            let sub_colors: Option<Vec<u64>> = colors.map(|c| comp.iter().map(|&v| c[v]).collect());
            let mut degrees = h.degrees();
            degrees.sort_unstable_by(|a, b| b.cmp(a));
            ComponentDescriptor {
                order: h.order(),
                size: h.size(),
                end_vertices: degrees.iter().filter(|&&d| d == 1).count(),
                degrees,
                canonical: canonical_labeling(&h, sub_colors.as_deref()).certificate,
            }
        })
        .collect();
    out.sort();
    Fingerprint(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_plus_point_differs_from_two_edges() {
        let a = AbstractGraph::path(3).disjoint_union(&AbstractGraph::new(1));
        let b = AbstractGraph::complete(2).disjoint_union(&AbstractGraph::complete(2));
        assert_ne!(component_fingerprint(&a), component_fingerprint(&b));
        assert_eq!(component_fingerprint(&b).k2_components(), 2);
    }

    #[test]
    fn empty_graph() {
        assert!(component_fingerprint(&AbstractGraph::new(0)).is_empty());
    }

    #[test]
    fn two_single_edges() {
        let f =
            component_fingerprint(&AbstractGraph::path(2).disjoint_union(&AbstractGraph::path(2)));
        assert_eq!(f.len(), 2);
        assert!(f.components().iter().all(|c| c.order == 2 && c.size == 1));
        assert_eq!(f.end_vertices(), 4);
    }

    #[test]
    fn colours_separate_equal_shapes() {
        let g = AbstractGraph::path(2);
        assert_ne!(
            component_fingerprint_colored(&g, &[5, 5]),
            component_fingerprint_colored(&g, &[5, 6])
        );
        assert_eq!(
            component_fingerprint_colored(&g, &[6, 5]),
            component_fingerprint_colored(&g, &[5, 6])
        );
    }
}
