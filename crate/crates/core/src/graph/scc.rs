// SPDX-License-Identifier: Apache-2.0

use super::{Digraph, Vertex};

const UNVISITED: usize = usize::MAX;

/// Strongly-connected components in reverse topological order of the
/// condensation: every arc between two components points from a later
/// component to an earlier one. Vertices within a component are sorted.
///
/// Iterative Tarjan, so deep graphs do not overflow the call stack.
pub fn strong_components(d: &Digraph) -> Vec<Vec<Vertex>> {
    let n = d.vertex_count();
    let mut index = vec![UNVISITED; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut components = Vec::new();
    let mut next_index = 0;
    // (vertex, position in its out-list)
    let mut call: Vec<(Vertex, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != UNVISITED {
            continue;
        }
        call.push((root, 0));
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            let heads = d.out_neighbours(v);
            if *pos < heads.len() {
                let w = heads[*pos];
                *pos += 1;
                if index[w] == UNVISITED {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let mut component = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack holds the component");
                    on_stack[w] = false;
                    component.push(w);
                    if w == v {
                        break;
                    }
                }
                component.sort_unstable();
                components.push(component);
            }
        }
    }
    components
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn cycle_is_one_component() {
        let d = Digraph::new(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert_eq!(strong_components(&d), vec![vec![0, 1, 2, 3, 4]]);
    }

    #[test]
    fn single_arc_two_components() {
        let d = Digraph::new(2, [(0, 1)]).unwrap();
        // Sink first.
        assert_eq!(strong_components(&d), vec![vec![1], vec![0]]);
    }

    #[test]
    fn long_path_does_not_overflow() {
        let n = 200_000;
        let d = Digraph::new(n, (0..n - 1).map(|i| (i, i + 1))).unwrap();
        assert_eq!(strong_components(&d).len(), n);
    }

    fn arb_digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(proptest::bool::weighted(0.25), n * n).prop_map(move |bits| {
                let arcs = (0..n)
                    .flat_map(|u| (0..n).map(move |v| (u, v)))
                    .filter(|&(u, v)| u != v && bits[u * n + v]);
                Digraph::new(n, arcs).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn components_are_maximal_and_ordered(d in arb_digraph(12)) {
            let comps = strong_components(&d);
            let mut comp_of = vec![usize::MAX; d.vertex_count()];
            for (i, c) in comps.iter().enumerate() {
                for &v in c {
                    prop_assert_eq!(comp_of[v], usize::MAX);
                    comp_of[v] = i;
                }
            }
            prop_assert!(comp_of.iter().all(|&c| c != usize::MAX));
            let reach: Vec<Vec<bool>> = d.vertices().map(|v| d.reachable_from(v)).collect();
            for u in d.vertices() {
                for v in d.vertices() {
                    let mutual = reach[u][v] && reach[v][u];
                    prop_assert_eq!(mutual, comp_of[u] == comp_of[v]);
                }
            }
            for (u, v) in d.arcs() {
                prop_assert!(comp_of[u] >= comp_of[v]);
            }
        }
    }
}
