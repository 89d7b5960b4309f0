use itertools::Itertools;
use ppav::fillings::{transport, FerrersShape, PartialFilling};
use ppav::matchings::*;
use ppav::{all_perms, PartialPerm, Perm};

fn proper_square_shapes(max_n: usize) -> Vec<FerrersShape> {
    FerrersShape::all_up_to(2 * max_n)
        .into_iter()
        .filter(|s| s.is_proper() && s.rows() == s.cols() && s.cols() >= 1)
        .collect()
}

#[test]
fn minimalist_and_maximalist_characterizations() {
    let m312 = m312();
    let cyc: Vec<Matching> = (3..=5).map(cyclic_matching).collect();
    for n in 1..=5 {
        for m in Matching::all(n) {
            assert_eq!(m.avoids(&m312), all_minimalist(&m), "{m}");
            let avoids_c = cyc.iter().all(|c| m.avoids(c));
            assert_eq!(avoids_c, all_maximalist(&m), "{m}");
            assert_eq!(avoids_c, avoids_cyclic(&m), "{m}");
        }
    }
}

#[test]
fn reversal_swaps_312_and_231() {
    for m in Matching::all(4) {
        assert_eq!(m.avoids(&m312()), m.reverse().avoids(&m231()));
        assert_eq!(avoids_cyclic(&m), avoids_cyclic(&m.reverse()));
    }
}

#[test]
fn single_cover_rule_for_312_avoiders() {
    for n in 1..=4 {
        for m in Matching::all(n).into_iter().filter(all_minimalist) {
            for r in 1..=m.size() {
                assert_eq!(
                    prefix_blocks(&m, r).blocks,
                    prefix_blocks_single_cover(&m, r),
                    "{m} r={r}"
                );
            }
        }
    }
}

#[test]
fn psi_round_trip_and_block_sizes() {
    for n in 0..=5 {
        let all = Matching::all(n);
        let avoiders: Vec<&Matching> = all.iter().filter(|m| m.avoids(&m312())).collect();
        assert_eq!(avoiders.len(), all.iter().filter(|m| avoids_cyclic(m)).count());
        for m in avoiders {
            let p = psi(m).unwrap();
            assert!(avoids_cyclic(&p));
            assert_eq!(p.left_vertices(), m.left_vertices());
            assert_eq!(&psi_inverse(&p).unwrap(), m);
            for r in 1..=m.size() {
                assert_eq!(prefix_blocks(m, r).block_sizes(), prefix_blocks(&p, r).block_sizes());
            }
        }
    }
}

#[test]
fn psi_is_unique_at_small_order() {
    for n in 1..=4 {
        let all = Matching::all(n);
        for m in all.iter().filter(|m| all_minimalist(m)) {
            let steps_m = generating_steps(m);
            let candidates: Vec<&Matching> = all
                .iter()
                .filter(|c| avoids_cyclic(c) && c.left_vertices() == m.left_vertices())
                .filter(|c| {
                    (1..=m.size()).all(|r| prefix_blocks(m, r).block_sizes() == prefix_blocks(c, r).block_sizes())
                })
                .filter(|c| {
                    generating_steps(c).iter().zip(&steps_m).all(|(a, b)| match (a, b) {
                        (Step::L, Step::L) => true,
                        (Step::R { block: x, .. }, Step::R { block: y, .. }) => x == y,
                        _ => false,
                    })
                })
                .collect();
            assert_eq!(candidates, vec![&psi(m).unwrap()], "{m}");
        }
    }
}

#[test]
fn matching_containment_agrees_with_filling_containment() {
    let pats: Vec<Perm> = (1..=3).flat_map(all_perms).collect();
    for shape in proper_square_shapes(4) {
        let cols = shape.cols();
        for f in PartialFilling::all_transversals(&shape, &vec![false; cols]) {
            let m = mu(&f).unwrap();
            assert_eq!(m.left_vertices(), left_vertex_set(&shape));
            for p in &pats {
                assert_eq!(f.contains_classical(p), m.contains(&perm_matching(p)), "{shape} {p}");
            }
        }
    }
}

#[test]
fn cyclic_chains_through_the_new_edge_have_four_edges() {
    for shape in proper_square_shapes(4) {
        let n = shape.cols();
        let x = left_vertex_set(&shape);
        for k in 1..=n.min(3) {
            if !bottom_rows_equal(&shape, k) {
                continue;
            }
            let top: Vec<usize> = (2 * n + 1 - k..=2 * n).collect();
            for m in Matching::all_with_left_vertices(n, &x) {
                if !avoids_cyclic(&m) || !m.edges_at_nest(&top) {
                    continue;
                }
                let plus = m.insert_edge(2 * n - k + 1, 2 * n + 2).unwrap();
                let new_edge = (2 * n - k + 1, 2 * n + 2);
                for size in 3..=plus.order() {
                    for sub in plus.edges().into_iter().combinations(size) {
                        if plus.induced(&sub) == cyclic_matching(size) {
                            assert!(sub.contains(&new_edge), "{plus}");
                            assert!(size >= 4, "{plus} has a cyclic chain with three edges");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn key_bijection_is_a_bijection_with_checked_steps() {
    for shape in proper_square_shapes(4) {
        let n = shape.cols();
        let all = PartialFilling::all_transversals(&shape, &vec![false; n]);
        for k in 0..=n.min(3) {
            if !bottom_rows_equal(&shape, k) {
                continue;
            }
            let src: Vec<&PartialFilling> = all.iter().filter(|f| is_312_21(f, k)).collect();
            let mut dst: Vec<PartialFilling> = all.iter().filter(|f| is_231_12(f, k)).cloned().collect();
            dst.sort();
            let mut images: Vec<PartialFilling> = src
                .iter()
                .map(|f| {
                    let g = key_bijection(f, k).unwrap();
                    assert_eq!(&key_bijection_inverse(&g, k).unwrap(), *f);
                    g
                })
                .collect();
            images.sort();
            images.dedup();
            assert_eq!(images, dst, "{shape} k={k}");
        }
    }
}

#[test]
fn step_sets_are_characterized_by_their_conditions() {
    for shape in proper_square_shapes(4) {
        let n = shape.cols();
        let size = 2 * n;
        let x = left_vertex_set(&shape);
        let all = PartialFilling::all_transversals(&shape, &vec![false; n]);
        for k in 0..=n.min(3) {
            if !bottom_rows_equal(&shape, k) {
                continue;
            }
            let traces: Vec<KeyTrace> = all
                .iter()
                .filter(|f| is_312_21(f, k))
                .map(|f| key_bijection_traced(f, k).unwrap())
                .collect();
            let top: Vec<usize> = (size + 1 - k..=size).collect();
            let mut s1: Vec<Matching> = traces.iter().map(|t| t.step1_psi.clone()).sorted().collect();
            let p_set: Vec<Matching> = Matching::all_with_left_vertices(n, &x)
                .into_iter()
                .filter(|m| {
                    avoids_cyclic(m)
                        && (size == k || prefix_blocks(m, size - k).blocks.iter().all(|b| b.len() == 1))
                        && m.edges_at_nest(&top)
                })
                .sorted()
                .collect();
            s1.dedup();
            assert_eq!(s1, p_set, "P1-P4 {shape} k={k}");

            let s2: Vec<Matching> = traces.iter().map(|t| t.step2_add_edge.clone()).sorted().collect();
            let x_plus = s2.first().map(|m| m.left_vertices()).unwrap_or_default();
            if !s2.is_empty() {
                let r_set: Vec<Matching> = Matching::all_with_left_vertices(n + 1, &x_plus)
                    .into_iter()
                    .filter(|m| avoids_cyclic(m) && m.has_edge(size - k + 1, size + 2))
                    .sorted()
                    .collect();
                assert_eq!(s2, r_set, "R1-R3 {shape} k={k}");
            }

            let s4: Vec<Matching> = traces.iter().map(|t| t.step4_psi_inverse.clone()).sorted().collect();
            if let Some(first) = s4.first() {
                let s_set: Vec<Matching> = Matching::all_with_left_vertices(n + 1, &first.left_vertices())
                    .into_iter()
                    .filter(|m| m.avoids(&m312()) && m.has_edge(1, k + 2))
                    .sorted()
                    .collect();
                assert_eq!(s4, s_set, "S1-S3 {shape} k={k}");
            }

            let s5: Vec<Matching> = traces.iter().map(|t| t.step5_remove_edge.clone()).sorted().collect();
            if let Some(first) = s5.first() {
                let front: Vec<usize> = (1..=k).collect();
                let s_set: Vec<Matching> = Matching::all_with_left_vertices(n, &first.left_vertices())
                    .into_iter()
                    .filter(|m| m.avoids(&m312()) && m.edges_at_cross(&front))
                    .sorted()
                    .collect();
                assert_eq!(s5, s_set, "S1-S3 after removal {shape} k={k}");
            }
        }
    }
}

#[test]
fn precondition_failures_name_the_condition() {
    let f = PartialFilling::from_perm(&"312".parse().unwrap());
    let err = key_bijection(&f, 0).unwrap_err();
    assert!(err.to_string().contains("input-312"), "{err}");
    let f = PartialFilling::from_perm(&"21".parse().unwrap());
    let err = key_bijection(&f, 2).unwrap_err();
    assert!(err.to_string().contains("input-21"), "{err}");
}

#[test]
fn partial_transversal_map_is_shape_preserving_bijection() {
    let p312: Perm = "312".parse().unwrap();
    let p231: Perm = "231".parse().unwrap();
    for shape in FerrersShape::all_up_to(6) {
        let m = shape.cols();
        for mask in 0u32..(1 << m) {
            let diamond: Vec<bool> = (0..m).map(|j| mask >> j & 1 == 1).collect();
            if diamond.iter().filter(|&&d| d).count() > 2 {
                continue;
            }
            let all = PartialFilling::all_transversals(&shape, &diamond);
            let src: Vec<&PartialFilling> = all.iter().filter(|f| f.avoids(&p312)).collect();
            let mut dst: Vec<PartialFilling> = all.iter().filter(|f| f.avoids(&p231)).cloned().collect();
            dst.sort();
            let mut images: Vec<PartialFilling> = src
                .iter()
                .map(|f| {
                    let g = partial_312_to_231(f).unwrap();
                    assert_eq!(&partial_231_to_312(&g).unwrap(), *f);
                    g
                })
                .collect();
            images.sort();
            images.dedup();
            assert_eq!(images, dst, "{shape} {diamond:?}");
        }
    }
}

#[test]
fn transport_with_key_bijection_on_single_hole() {
    let x: Perm = "1".parse().unwrap();
    let p312: Perm = "312".parse().unwrap();
    let q231: Perm = "231".parse().unwrap();
    let src_pat = p312.direct_sum(&x);
    let dst_pat = q231.direct_sum(&x);
    let all = PartialPerm::all(5, 1);
    let src: Vec<&PartialPerm> = all.iter().filter(|m| m.avoids(&src_pat)).collect();
    let mut dst: Vec<PartialPerm> = all.iter().filter(|m| m.avoids(&dst_pat)).cloned().collect();
    dst.sort();
    let mut images: Vec<PartialPerm> = src
        .iter()
        .map(|m| transport(m, &x, &p312, &partial_312_to_231).unwrap())
        .collect();
    images.sort();
    images.dedup();
    assert_eq!(images.len(), src.len());
    assert_eq!(images, dst);
}
