//! Small decompositions and co-decompositions with known answers.

use crate::decomp::{AdhesionSpan, StructuredDecomposition};
use crate::error::{Error, Result};
use crate::finset::FinFn;
use crate::graph::{Graph, GraphHom};
use crate::problems::{AdhesionSolutions, SolCoDecomp};
use crate::sections::SolutionSet;

/// A 5-cycle split into a 3-vertex path and a 4-vertex path that share their
/// endpoints, on the one-arc shape `0 -> 1`.
pub fn two_paths_five_cycle() -> StructuredDecomposition {
    let p3 = Graph::path(3);
    let p4 = Graph::path(4);
    // cycle vertices: P3 = c0-c1-c2, P4 = c2-c3-c4-c0
    let leg_x = GraphHom::new(FinFn::new(vec![0, 2], 3).unwrap(), FinFn::empty(p3.ne()));
    let leg_y = GraphHom::new(FinFn::new(vec![3, 0], 4).unwrap(), FinFn::empty(p4.ne()));
    StructuredDecomposition::new(
        Graph::from_arcs(2, &[(0, 1)]).unwrap(),
        vec![p3, p4],
        vec![AdhesionSpan::new(Graph::edgeless(2), leg_x, leg_y)],
    )
    .expect("fixture is valid")
}

/// A cycle of `bags * (width - 1)` vertices cut into `bags` paths of `width`
/// vertices, consecutive paths sharing one endpoint. The shape is the
/// directed cycle `0 -> 1 -> ... -> bags-1 -> 0`.
pub fn cyclic_decomposition(bags: usize, width: usize) -> Result<StructuredDecomposition> {
    if bags < 3 || width < 2 {
        return Err(Error::Shape(format!(
            "a cyclic decomposition needs at least 3 bags of width at least 2 (got {bags} bags of width {width})"
        )));
    }
    let bag = Graph::path(width);
    let shape_arcs: Vec<_> = (0..bags).map(|i| (i, (i + 1) % bags)).collect();
    let span = AdhesionSpan::new(
        Graph::edgeless(1),
        GraphHom::new(FinFn::new(vec![width - 1], width)?, FinFn::empty(bag.ne())),
        GraphHom::new(FinFn::new(vec![0], width)?, FinFn::empty(bag.ne())),
    );
    StructuredDecomposition::new(
        Graph::from_arcs(bags, &shape_arcs)?,
        vec![bag; bags],
        vec![span; bags],
    )
}

/// Path shape `a -> b -> c -> d` (arcs `ab`, `bc`, `cd` in that order) whose
/// adhesions force equal values along the chain, with the end bags pinned
/// to different values. Unsatisfiable.
pub fn equality_chain() -> SolCoDecomp {
    let shape = Graph::from_arcs(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
    let two = || SolutionSet::indexed(2);
    let id = || FinFn::identity(2);
    SolCoDecomp::new(
        shape,
        vec![
            SolutionSet::indexed(1),
            two(),
            two(),
            SolutionSet::indexed(1),
        ],
        vec![
            AdhesionSolutions {
                sections: two(),
                rho_x: FinFn::new(vec![0], 2).unwrap(),
                rho_y: id(),
            },
            AdhesionSolutions {
                sections: two(),
                rho_x: id(),
                rho_y: id(),
            },
            AdhesionSolutions {
                sections: two(),
                rho_x: id(),
                rho_y: FinFn::new(vec![1], 2).unwrap(),
            },
        ],
    )
    .expect("fixture is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::{colim, find_fvs};

    #[test]
    fn cyclic_glues_to_a_cycle() {
        for (bags, width) in [(3, 2), (5, 2), (4, 3)] {
            let d = cyclic_decomposition(bags, width).unwrap();
            let c = colim(&d);
            let n = bags * (width - 1);
            assert_eq!((c.total.nv(), c.total.ne()), (n, 2 * n));
            assert_eq!(find_fvs(d.shape()).len(), 1);
        }
        assert!(cyclic_decomposition(2, 2).is_err());
        assert!(cyclic_decomposition(3, 1).is_err());
    }
}
