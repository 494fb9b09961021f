//! Feedback vertex sets of decomposition shapes.
//!
//! Cycles are those of the underlying undirected graph; arc orientation only
//! names the legs of each adhesion span.

use crate::graph::Graph;

/// Undirected adjacency lists of a shape, with one entry per arc endpoint.
#[derive(Debug, Clone)]
pub struct UndirectedShape {
    neighbours: Vec<Vec<(usize, usize)>>,
}

impl UndirectedShape {
    pub fn new(shape: &Graph) -> Self {
        let mut neighbours = vec![Vec::new(); shape.nv()];
        for (e, (s, t)) in shape.arcs().enumerate() {
            neighbours[s].push((t, e));
            if s != t {
                neighbours[t].push((s, e));
            }
        }
        UndirectedShape { neighbours }
    }

    pub fn nv(&self) -> usize {
        self.neighbours.len()
    }

    /// `(neighbour, arc)` pairs at `v`.
    pub fn neighbours(&self, v: usize) -> &[(usize, usize)] {
        &self.neighbours[v]
    }
}

fn acyclic_without(shape: &Graph, removed: &[bool]) -> bool {
    let mut parent: Vec<usize> = (0..shape.nv()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (s, t) in shape.arcs() {
        if removed[s] || removed[t] {
            continue;
        }
        let (rs, rt) = (find(&mut parent, s), find(&mut parent, t));
        if rs == rt {
            return false;
        }
        parent[rs] = rt;
    }
    true
}

/// The underlying undirected graph has no cycle.
pub fn is_forest(shape: &Graph) -> bool {
    acyclic_without(shape, &vec![false; shape.nv()])
}

/// Removing `set` leaves the underlying undirected graph acyclic.
pub fn is_fvs(shape: &Graph, set: &[usize]) -> bool {
    let mut removed = vec![false; shape.nv()];
    for &v in set {
        if v >= shape.nv() {
            return false;
        }
        removed[v] = true;
    }
    acyclic_without(shape, &removed)
}

/// Vertices of the 2-core of the shape with `removed` deleted.
fn two_core(g: &UndirectedShape, removed: &[bool]) -> Vec<bool> {
    let n = g.nv();
    let mut alive: Vec<bool> = removed.iter().map(|&r| !r).collect();
    let mut degree: Vec<usize> = (0..n)
        .map(|v| {
            if alive[v] {
                g.neighbours(v).iter().filter(|&&(u, _)| alive[u]).count()
            } else {
                0
            }
        })
        .collect();
    let mut stack: Vec<usize> = (0..n).filter(|&v| alive[v] && degree[v] < 2).collect();
    while let Some(v) = stack.pop() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for &(u, _) in g.neighbours(v) {
            if alive[u] {
                degree[u] -= 1;
                if degree[u] < 2 {
                    stack.push(u);
                }
            }
        }
    }
    alive
}

/// Some cycle inside the 2-core `core` (which must be non-empty).
fn find_cycle(g: &UndirectedShape, core: &[bool]) -> Vec<usize> {
    let start = core.iter().position(|&a| a).expect("non-empty core");
    let mut position = vec![usize::MAX; g.nv()];
    let mut walk = vec![start];
    position[start] = 0;
    let mut came_by = usize::MAX;
    let mut v = start;
    loop {
        // every core vertex has two core neighbours via distinct arcs
        let &(next, arc) = g
            .neighbours(v)
            .iter()
            .find(|&&(u, e)| core[u] && e != came_by)
            .expect("2-core vertex has a second core neighbour");
        if position[next] != usize::MAX {
            return walk[position[next]..].to_vec();
        }
        position[next] = walk.len();
        walk.push(next);
        came_by = arc;
        v = next;
    }
}

fn search(
    g: &UndirectedShape,
    removed: &mut Vec<bool>,
    budget: usize,
    chosen: &mut Vec<usize>,
    best: &mut Option<Vec<usize>>,
) {
    let core = two_core(g, removed);
    if !core.iter().any(|&a| a) {
        let mut candidate = chosen.clone();
        candidate.sort_unstable();
        if best.as_ref().is_none_or(|b| candidate < *b) {
            *best = Some(candidate);
        }
        return;
    }
    if budget == 0 {
        return;
    }
    // every feedback vertex set meets this cycle
    for v in find_cycle(g, &core) {
        removed[v] = true;
        chosen.push(v);
        search(g, removed, budget - 1, chosen, best);
        chosen.pop();
        removed[v] = false;
    }
}

/// A minimum feedback vertex set of the underlying undirected shape, the
/// lexicographically smallest (as a sorted list) among all minimum ones.
pub fn find_fvs(shape: &Graph) -> Vec<usize> {
    let g = UndirectedShape::new(shape);
    let mut removed = vec![false; shape.nv()];
    for k in 0..=shape.nv() {
        let mut best = None;
        search(&g, &mut removed, k, &mut Vec::new(), &mut best);
        if let Some(set) = best {
            return set;
        }
    }
    unreachable!("removing every vertex leaves an acyclic graph")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn oriented_cycle(n: usize, offset: usize, arcs: &mut Vec<(usize, usize)>) {
        for i in 0..n {
            arcs.push((offset + i, offset + (i + 1) % n));
        }
    }

    /// Smallest set by exhaustive search over subsets in (size, lex) order.
    fn brute_force(shape: &Graph) -> Vec<usize> {
        let n = shape.nv();
        let mut best: Option<Vec<usize>> = None;
        for mask in 0u32..(1 << n) {
            let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if !is_fvs(shape, &set) {
                continue;
            }
            let better = match &best {
                None => true,
                Some(b) => set.len() < b.len() || (set.len() == b.len() && set < *b),
            };
            if better {
                best = Some(set);
            }
        }
        best.unwrap()
    }

    #[test]
    fn trees_need_nothing() {
        let tree = Graph::from_arcs(5, &[(0, 1), (0, 2), (2, 3), (4, 2)]).unwrap();
        assert!(is_forest(&tree));
        assert!(find_fvs(&tree).is_empty());
        assert!(find_fvs(&Graph::empty()).is_empty());
    }

    #[test]
    fn five_cycle() {
        let mut arcs = Vec::new();
        oriented_cycle(5, 0, &mut arcs);
        let g = Graph::from_arcs(5, &arcs).unwrap();
        assert_eq!(find_fvs(&g), vec![0]);
    }

    #[test]
    fn two_triangles() {
        let mut arcs = Vec::new();
        oriented_cycle(3, 0, &mut arcs);
        oriented_cycle(3, 3, &mut arcs);
        let g = Graph::from_arcs(6, &arcs).unwrap();
        let s = find_fvs(&g);
        assert_eq!(s.len(), 2);
        assert_eq!(s, brute_force(&g));
        assert!(!is_fvs(&g, &[0]));
    }

    #[test]
    fn matches_exhaustive_search_on_random_shapes() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..300 {
            let n = rng.gen_range(0..=10);
            let mut arcs = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.3) {
                        arcs.push(if rng.gen_bool(0.5) { (u, v) } else { (v, u) });
                    }
                }
            }
            let g = Graph::from_arcs(n, &arcs).unwrap();
            let s = find_fvs(&g);
            assert!(is_fvs(&g, &s));
            assert_eq!(s, brute_force(&g), "arcs {arcs:?}");
        }
    }
}
