//! Chains of crossing edges and the cyclic chains `C_q`.

use std::collections::VecDeque;

use super::matching::{crosses, crosses_from_left, nested_below, Edge, Matching};

/// Each edge crosses the next one from the left.
pub fn is_chain(chain: &[Edge]) -> bool {
    chain.windows(2).all(|w| crosses_from_left(w[0], w[1]))
}

/// A chain in which every edge crosses only its neighbours.
pub fn is_proper_chain(chain: &[Edge]) -> bool {
    is_chain(chain) && (0..chain.len()).all(|a| (a + 2..chain.len()).all(|b| !crosses(chain[a], chain[b])))
}

/// A shortest sub-chain of `chain` with the same first and last edge.
///
/// Shortest chains are proper: a crossing between two non-neighbours would
/// allow a shortcut.
pub fn proper_subchain(chain: &[Edge]) -> Vec<Edge> {
    assert!(is_chain(chain), "not a chain");
    if chain.len() <= 2 {
        return chain.to_vec();
    }
    let allowed = |_: Edge| true;
    shortest_chain(chain, &[chain[0]], &|e| e == chain[chain.len() - 1], &allowed)
        .expect("the chain itself connects its endpoints")
}

/// BFS along "crosses from the left" among `pool`, from any start edge to the
/// first edge satisfying `is_goal`, through intermediates accepted by `via`.
fn shortest_chain(
    pool: &[Edge],
    starts: &[Edge],
    is_goal: &dyn Fn(Edge) -> bool,
    via: &dyn Fn(Edge) -> bool,
) -> Option<Vec<Edge>> {
    let mut prev: Vec<Option<usize>> = vec![None; pool.len()];
    let mut seen = vec![false; pool.len()];
    let mut queue = VecDeque::new();
    for (idx, e) in pool.iter().enumerate() {
        if starts.contains(e) {
            seen[idx] = true;
            queue.push_back(idx);
        }
    }
    while let Some(cur) = queue.pop_front() {
        if is_goal(pool[cur]) && !starts.contains(&pool[cur]) {
            let mut path = vec![pool[cur]];
            let mut at = cur;
            while let Some(p) = prev[at] {
                path.push(pool[p]);
                at = p;
            }
            path.reverse();
            return Some(path);
        }
        if !starts.contains(&pool[cur]) && !via(pool[cur]) {
            continue;
        }
        for (idx, &e) in pool.iter().enumerate() {
            if !seen[idx] && crosses_from_left(pool[cur], e) {
                seen[idx] = true;
                prev[idx] = Some(cur);
                queue.push_back(idx);
            }
        }
    }
    None
}

/// `(f, e_1, ..., e_p)` is a cyclic chain: `e_1..e_p` proper, `f` crosses `e_1`
/// from the right and `e_p` from the left, and `e_2..e_{p-1}` lie under `f`.
pub fn is_cyclic_chain(f: Edge, chain: &[Edge]) -> bool {
    chain.len() >= 2
        && is_proper_chain(chain)
        && crosses_from_left(chain[0], f)
        && crosses_from_left(f, chain[chain.len() - 1])
        && chain[1..chain.len() - 1].iter().all(|&e| nested_below(e, f))
}

/// Some cyclic chain of `m` as `(f, e_1..e_p)`, found by searching from every `f`.
pub fn find_cyclic_chain(m: &Matching) -> Option<(Edge, Vec<Edge>)> {
    let edges = m.edges();
    for &f in &edges {
        let starts: Vec<Edge> = edges.iter().copied().filter(|&e| crosses_from_left(e, f)).collect();
        if starts.is_empty() {
            continue;
        }
        let goal = |e: Edge| crosses_from_left(f, e);
        let via = |e: Edge| nested_below(e, f);
        if let Some(chain) = shortest_chain(&edges, &starts, &goal, &via) {
            let chain = proper_subchain(&chain);
            debug_assert!(is_cyclic_chain(f, &chain));
            return Some((f, chain));
        }
    }
    None
}

/// Avoidance of every `C_q`, `q >= 3`, by search.
pub fn avoids_cyclic(m: &Matching) -> bool {
    find_cyclic_chain(m).is_none()
}

/// The matching `C_q` whose edges form a cyclic chain of order `q >= 3`.
pub fn cyclic_matching(q: usize) -> Matching {
    assert!(q >= 3, "cyclic chains have at least three edges");
    let p = q - 1;
    // endpoint order: l1 f l2 r1 l3 r2 ... l_p r_{p-1} f' r_p
    let mut order: Vec<(char, usize)> = vec![('l', 1), ('f', 0), ('l', 2)];
    for i in 1..p - 1 {
        order.push(('r', i));
        order.push(('l', i + 2));
    }
    order.push(('r', p - 1));
    order.push(('F', 0));
    order.push(('r', p));
    let pos = |key: (char, usize)| order.iter().position(|&k| k == key).expect("listed") + 1;
    let mut edges: Vec<Edge> = (1..=p).map(|i| (pos(('l', i)), pos(('r', i)))).collect();
    edges.push((pos(('f', 0)), pos(('F', 0))));
    Matching::new(&edges).expect("valid layout")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_crossing_is_c3() {
        let c3 = Matching::new(&[(1, 4), (2, 5), (3, 6)]).unwrap();
        assert_eq!(cyclic_matching(3), c3);
        assert!(!avoids_cyclic(&c3));
    }

    #[test]
    fn cyclic_matchings_are_cyclic() {
        for q in 3..=6 {
            let c = cyclic_matching(q);
            let (f, chain) = find_cyclic_chain(&c).unwrap();
            assert!(is_cyclic_chain(f, &chain));
            assert_eq!(chain.len() + 1, q);
        }
    }

    #[test]
    fn search_agrees_with_pattern_containment() {
        let family: Vec<Matching> = (3..=5).map(cyclic_matching).collect();
        for n in 0..=5 {
            for m in Matching::all(n) {
                let by_patterns = family.iter().all(|c| m.avoids(c));
                assert_eq!(avoids_cyclic(&m), by_patterns, "{m}");
            }
        }
    }

    #[test]
    fn every_chain_has_a_proper_subchain() {
        for n in 2..=5 {
            for m in Matching::all(n) {
                let edges = m.edges();
                // all chains by DFS
                let mut stack: Vec<Vec<Edge>> = edges.iter().map(|&e| vec![e]).collect();
                while let Some(ch) = stack.pop() {
                    let sub = proper_subchain(&ch);
                    assert!(is_proper_chain(&sub));
                    assert_eq!(sub.first(), ch.first());
                    assert_eq!(sub.last(), ch.last());
                    assert!(sub.iter().all(|e| ch.contains(e)));
                    let last = *ch.last().unwrap();
                    for &e in &edges {
                        if crosses_from_left(last, e) {
                            let mut next = ch.clone();
                            next.push(e);
                            stack.push(next);
                        }
                    }
                }
            }
        }
    }
}
