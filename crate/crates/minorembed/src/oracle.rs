//! Exact minor search by exhaustive assignment enumeration. Only feasible
//! for tiny graphs; used as a reference point for the heuristic embedder.

use std::collections::VecDeque;

use crate::graph::{Graph, Vertex};

/// True iff H is a minor of G, by enumerating every assignment of each
/// G-vertex to an H-vertex or "unused". Intended for `|V(G)|` at most
/// around 6; panics beyond 8 to catch accidental misuse.
pub fn has_minor(g: &Graph, h: &Graph) -> bool {
    let (gn, hn) = (g.vertex_count(), h.vertex_count());
    assert!(gn <= 8, "exhaustive minor search is for tiny graphs only");
    if hn == 0 {
        return true;
    }
    if hn > gn {
        return false;
    }
    // assignment[v] in 0..hn maps v to that H-vertex, == hn leaves v unused
    let mut assignment = vec![0usize; gn];
    loop {
        if valid_model(g, h, &assignment) {
            return true;
        }
        // odometer increment over base hn+1
        let mut i = 0;
        loop {
            if i == gn {
                return false;
            }
            assignment[i] += 1;
            if assignment[i] <= hn {
                break;
            }
            assignment[i] = 0;
            i += 1;
        }
    }
}

fn valid_model(g: &Graph, h: &Graph, assignment: &[usize]) -> bool {
    let hn = h.vertex_count();
    let mut sizes = vec![0usize; hn];
    for &a in assignment {
        if a < hn {
            sizes[a] += 1;
        }
    }
    if sizes.iter().any(|&s| s == 0) {
        return false;
    }
    // connectivity of each preimage
    for x in 0..hn {
        let start = assignment.iter().position(|&a| a == x).unwrap();
        let mut seen = vec![false; assignment.len()];
        seen[start] = true;
        let mut count = 1;
        let mut queue = VecDeque::from([start as Vertex]);
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u) {
                if assignment[v as usize] == x && !seen[v as usize] {
                    seen[v as usize] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        if count != sizes[x] {
            return false;
        }
    }
    // every H-edge covered
    for (x, y) in h.edges() {
        let covered = g.edges().into_iter().any(|(u, v)| {
            let (au, av) = (assignment[u as usize], assignment[v as usize]);
            (au == x as usize && av == y as usize) || (au == y as usize && av == x as usize)
        });
        if !covered {
            return false;
        }
    }
    true
}
