//! Exact graph isomorphism for the small graphs this crate works with.
//!
//! A vertex colouring is refined to a fixed point using, for every vertex,
//! the multiset of (adjacency, colour, common-neighbour count) over all other
//! vertices; a depth-first search then extends colour-respecting partial
//! maps. The refinement is strong enough that the search only has to work
//! hard on highly symmetric graphs, which are exactly the ones where many
//! isomorphisms exist and one is found quickly.

use crate::error::Error;
use crate::graph::{Graph, VertexPermutation};

struct Prepared {
    colors: Vec<u32>,
    common: Vec<u32>, // n x n common-neighbour counts
}

fn common_matrix(g: &Graph) -> Vec<u32> {
    let n = g.n();
    let mut m = vec![0u32; n * n];
    for u in 0..n {
        for v in u + 1..n {
            let c = g.common_neighbor_count(u, v) as u32;
            m[u * n + v] = c;
            m[v * n + u] = c;
        }
    }
    m
}

/// Per-vertex signature used in one refinement round: own colour plus the
/// sorted (adjacency, colour, common-neighbour-count) view of the others.
type Signature = (u32, Vec<(u8, u32, u32)>);

/// Refine to a stable colouring. Colour ids are assigned from the sorted
/// signature list, so two isomorphic graphs end up with identical colour
/// multisets and corresponding vertices get equal colours.
fn refine(g: &Graph) -> Prepared {
    let n = g.n();
    let common = common_matrix(g);
    let mut colors: Vec<u32> = (0..n).map(|v| g.degree(v) as u32).collect();
    normalize(&mut colors);
    let mut distinct = colors.iter().collect::<std::collections::BTreeSet<_>>().len();
    loop {
        let mut sigs: Vec<Signature> = (0..n)
            .map(|v| {
                let mut local: Vec<(u8, u32, u32)> = (0..n)
                    .filter(|&u| u != v)
                    .map(|u| (g.has_edge(v, u) as u8, colors[u], common[v * n + u]))
                    .collect();
                local.sort_unstable();
                (colors[v], local)
            })
            .collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| sigs[a].cmp(&sigs[b]));
        let mut next = vec![0u32; n];
        let mut id = 0u32;
        for w in order.windows(2) {
            next[w[0]] = id;
            if sigs[w[0]] != sigs[w[1]] {
                id += 1;
            }
            next[w[1]] = id;
        }
        if n == 1 {
            next[order[0]] = 0;
        }
        let new_distinct = id as usize + 1;
        sigs.clear();
        colors = next;
        if new_distinct == distinct {
            return Prepared { colors, common };
        }
        distinct = new_distinct;
    }
}

fn normalize(colors: &mut [u32]) {
    let mut sorted: Vec<u32> = colors.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    for c in colors.iter_mut() {
        *c = sorted.binary_search(c).unwrap() as u32;
    }
}

/// Search order: start in the rarest colour class, then repeatedly take the
/// unplaced vertex with the most already-placed neighbours, so adjacency
/// constraints bite as early as possible.
fn search_order(g: &Graph, colors: &[u32]) -> Vec<usize> {
    let n = g.n();
    let mut class_size = std::collections::HashMap::new();
    for &c in colors {
        *class_size.entry(c).or_insert(0usize) += 1;
    }
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let mut best: Option<(usize, std::cmp::Reverse<usize>, std::cmp::Reverse<usize>)> = None;
        for v in 0..n {
            if placed[v] {
                continue;
            }
            let anchored = g.neighbors(v).iter().filter(|&&u| placed[u]).count();
            let key = (
                anchored,
                std::cmp::Reverse(class_size[&colors[v]]),
                std::cmp::Reverse(v),
            );
            if best.is_none_or(|b| key > b) {
                best = Some(key);
            }
        }
        let v = best.unwrap().2 .0;
        placed[v] = true;
        order.push(v);
    }
    order
}

struct Search<'a> {
    g1: &'a Graph,
    g2: &'a Graph,
    p1: &'a Prepared,
    p2: &'a Prepared,
    order: &'a [usize],
    mapping: Vec<usize>,
    used: Vec<bool>,
    solutions: Vec<Vec<usize>>,
    want_all: bool,
}

const UNMAPPED: usize = usize::MAX;

impl Search<'_> {
    fn run(&mut self, depth: usize) -> bool {
        let n = self.g1.n();
        if depth == n {
            self.solutions.push(self.mapping.clone());
            return !self.want_all;
        }
        let u = self.order[depth];
        for v in 0..n {
            if self.used[v] || self.p1.colors[u] != self.p2.colors[v] {
                continue;
            }
            let ok = self.order[..depth].iter().all(|&w| {
                let img = self.mapping[w];
                self.g1.has_edge(u, w) == self.g2.has_edge(v, img)
                    && self.p1.common[u * n + w] == self.p2.common[v * n + img]
            });
            if !ok {
                continue;
            }
            self.mapping[u] = v;
            self.used[v] = true;
            if self.run(depth + 1) {
                return true;
            }
            self.mapping[u] = UNMAPPED;
            self.used[v] = false;
        }
        false
    }
}

fn find_maps(g1: &Graph, g2: &Graph, want_all: bool) -> Vec<VertexPermutation> {
    if g1.n() != g2.n() || g1.edge_count() != g2.edge_count() {
        return Vec::new();
    }
    let n = g1.n();
    if n == 0 {
        return vec![VertexPermutation::identity(0)];
    }
    let p1 = refine(g1);
    let p2 = refine(g2);
    let mut h1: Vec<u32> = p1.colors.clone();
    let mut h2: Vec<u32> = p2.colors.clone();
    h1.sort_unstable();
    h2.sort_unstable();
    if h1 != h2 {
        return Vec::new();
    }
    let order = search_order(g1, &p1.colors);
    let mut s = Search {
        g1,
        g2,
        p1: &p1,
        p2: &p2,
        order: &order,
        mapping: vec![UNMAPPED; n],
        used: vec![false; n],
        solutions: Vec::new(),
        want_all,
    };
    s.run(0);
    s.solutions
        .into_iter()
        .map(|m| VertexPermutation::new(m).expect("search produces bijections"))
        .collect()
}

/// An isomorphism from `g1` to `g2`, if one exists: a permutation phi with
/// u ~ v in g1 iff phi(u) ~ phi(v) in g2.
pub fn isomorphism(g1: &Graph, g2: &Graph) -> Option<VertexPermutation> {
    find_maps(g1, g2, false).into_iter().next()
}

pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> bool {
    isomorphism(g1, g2).is_some()
}

/// The full automorphism group, as a list of permutations. Only sensible for
/// small graphs; the list can be huge.
pub fn automorphisms(g: &Graph) -> Vec<VertexPermutation> {
    find_maps(g, g, true)
}

/// Check that `phi` really is an isomorphism from g1 to g2.
pub fn verify_isomorphism(
    g1: &Graph,
    g2: &Graph,
    phi: &VertexPermutation,
) -> Result<(), Error> {
    if g1.n() != g2.n() {
        return Err(Error::SizeMismatch(g1.n(), g2.n()));
    }
    if phi.len() != g1.n() {
        return Err(Error::PermutationSizeMismatch {
            perm: phi.len(),
            n: g1.n(),
        });
    }
    for u in 0..g1.n() {
        for v in u + 1..g1.n() {
            if g1.has_edge(u, v) != g2.has_edge(phi.apply(u), phi.apply(v)) {
                return Err(Error::NotAnAutomorphism);
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cayley_graph;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn relabelled_graphs_are_isomorphic() {
        let g = Graph::from_edges(7, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6)])
            .unwrap();
        let p = VertexPermutation::parse_cycles(7, "(0 4 1)(2 6)").unwrap();
        let h = g.relabelled(&p).unwrap();
        let phi = isomorphism(&g, &h).expect("must find a map");
        verify_isomorphism(&g, &h, &phi).unwrap();
    }

    #[test]
    fn distinguishes_non_isomorphic_graphs() {
        // same degree sequence: C6 vs two triangles
        let c6 = cycle(6);
        let tt = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!is_isomorphic(&c6, &tt));
        // same n, different edge counts
        assert!(!is_isomorphic(&cycle(5), &Graph::empty(5).unwrap()));
        // C5 vs P5
        let p5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert!(!is_isomorphic(&cycle(5), &p5));
    }

    #[test]
    fn circulant_multiplier_images_are_isomorphic() {
        // Cay(Z_13, S) and Cay(Z_13, 2S) are isomorphic via x -> 2x
        let s1 = [1usize, 12, 3, 10];
        let s2 = [2usize, 11, 6, 7];
        let g1 = cayley_graph(&[13], &s1).unwrap();
        let g2 = cayley_graph(&[13], &s2).unwrap();
        let phi = isomorphism(&g1, &g2).expect("multiplier image");
        verify_isomorphism(&g1, &g2, &phi).unwrap();
    }

    #[test]
    fn automorphism_counts_of_small_graphs() {
        assert_eq!(automorphisms(&cycle(4)).len(), 8); // dihedral of order 8
        assert_eq!(automorphisms(&cycle(5)).len(), 10);
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(automorphisms(&k4).len(), 24);
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(automorphisms(&p3).len(), 2);
    }

    #[test]
    fn every_reported_automorphism_checks_out() {
        let g = cycle(6);
        for phi in automorphisms(&g) {
            verify_isomorphism(&g, &g, &phi).unwrap();
        }
    }
}
