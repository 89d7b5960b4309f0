use proptest::prelude::*;

use ppav::bijections::{
    bijection_1234_1324, bijection_1324_1234, dyck_to_perm123, hole_bijection_to_path, path_to_hole_bijection,
    perm123_to_dyck, simion_schmidt, simion_schmidt_inverse, LatticePath, PathStep, SsTarget,
};
use ppav::enumerate::{count, count_h, Method};
use ppav::matchings::{avoids_cyclic, m312, psi, psi_inverse, Matching};
use ppav::{HoleSet, PartialPerm, Perm};

fn perm_of(len: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Perm> {
    len.prop_flat_map(|l| Just((1..=l).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Perm::new(v).unwrap())
}

fn partial_perm(max_n: usize) -> impl Strategy<Value = PartialPerm> {
    (0..=max_n)
        .prop_flat_map(|n| (Just(n), 0..=n))
        .prop_flat_map(|(n, k)| {
            (
                Just(n),
                Just((1..=n - k).collect::<Vec<_>>()).prop_shuffle(),
                proptest::sample::subsequence((1..=n).collect::<Vec<_>>(), k),
            )
        })
        .prop_map(|(n, values, holes)| PartialPerm::from_parts(n, &HoleSet::new(holes, n).unwrap(), &values).unwrap())
}

/// Uniform arrangement of `m` up-steps and `m` down-steps.
fn balanced_path(max_m: usize) -> impl Strategy<Value = LatticePath> {
    (0..=max_m)
        .prop_flat_map(|m| {
            let mut steps = vec![PathStep::Up; m];
            steps.extend(vec![PathStep::Down; m]);
            Just(steps).prop_shuffle()
        })
        .prop_map(LatticePath::new)
}

fn matching(max_n: usize) -> impl Strategy<Value = Matching> {
    (0..=max_n)
        .prop_flat_map(|n| Just((1..=2 * n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| {
            let edges: Vec<(usize, usize)> = v.chunks(2).map(|c| (c[0].min(c[1]), c[0].max(c[1]))).collect();
            Matching::new(&edges).unwrap()
        })
}

proptest! {
    #[test]
    fn symmetries_are_involutions_and_preserve_avoidance(pi in partial_perm(9), p in perm_of(1..=4)) {
        prop_assert_eq!(pi.reverse().reverse(), pi.clone());
        prop_assert_eq!(pi.complement().complement(), pi.clone());
        prop_assert_eq!(pi.reverse().holes().len(), pi.k());
        let a = pi.avoids(&p);
        prop_assert_eq!(pi.reverse().avoids(&p.reverse()), a);
        prop_assert_eq!(pi.complement().avoids(&p.complement()), a);
    }

    #[test]
    fn checker_matches_oracle(pi in partial_perm(7), p in perm_of(1..=4)) {
        prop_assert_eq!(pi.avoids(&p), pi.avoids_oracle(&p));
    }

    #[test]
    fn text_and_json_round_trip(pi in partial_perm(9)) {
        prop_assert_eq!(pi.to_string().parse::<PartialPerm>().unwrap(), pi.clone());
        let j = serde_json::to_string(&pi).unwrap();
        prop_assert_eq!(serde_json::from_str::<PartialPerm>(&j).unwrap(), pi);
    }

    #[test]
    fn hole_sets_partition_the_count(n in 1usize..=6, k in 0usize..=3, p in perm_of(2..=4)) {
        prop_assume!(k <= n);
        let total: u64 = HoleSet::all(n, k).iter().map(|h| count_h(n, h, &p).unwrap()).sum();
        prop_assert_eq!(total, count(n, k, &p, Method::Direct).unwrap());
        prop_assert_eq!(count(n, k, &p.reverse(), Method::Direct).unwrap(), total);
    }

    #[test]
    fn path_maps_round_trip(path in balanced_path(10)) {
        let pi = path_to_hole_bijection(&path).unwrap();
        prop_assert!(pi.avoids(&"1234".parse().unwrap()));
        prop_assert_eq!(hole_bijection_to_path(&pi).unwrap(), path);

        let sigma = pi.without_holes();
        let dyck = perm123_to_dyck(&sigma).unwrap();
        prop_assert_eq!(dyck_to_perm123(&dyck).unwrap(), sigma.clone());
        for t in [SsTarget::P132, SsTarget::P213] {
            let tau = simion_schmidt(&sigma, t).unwrap();
            prop_assert_eq!(simion_schmidt_inverse(&tau, t).unwrap(), sigma.clone());
        }

        let img = bijection_1234_1324(&pi).unwrap();
        prop_assert!(img.avoids(&"1324".parse().unwrap()));
        prop_assert_eq!(bijection_1324_1234(&img).unwrap(), pi);
    }

    #[test]
    fn matching_round_trips(m in matching(7)) {
        prop_assert_eq!(m.reverse().reverse(), m.clone());
        prop_assert_eq!(m.to_string().parse::<Matching>().unwrap(), m.clone());
        prop_assert_eq!(avoids_cyclic(&m), avoids_cyclic(&m.reverse()));
        if m.avoids(&m312()) {
            let p = psi(&m).unwrap();
            prop_assert!(avoids_cyclic(&p));
            prop_assert_eq!(psi_inverse(&p).unwrap(), m);
        }
    }
}
