//! Acceptance checks. Each test prints one PASS/FAIL line and fails on FAIL.
//! Run with `--nocapture` to see the lines of passing tests.

use std::collections::BTreeSet;

use ppav::bijections::hole_bijection_to_path;
use ppav::enumerate::{
    binomial, catalan, classify, count, count_h, factorial, parse_bfile, same_block, sequence, sorted_sizes, to_bfile,
    Method,
};
use ppav::fillings::{verify_shape_star_wilf, FerrersShape};
use ppav::matchings::Matching;
use ppav::ordergraph::is_baxter;
use ppav::verify::{self, Bounds, Target};
use ppav::{all_perms, standardize, HoleSet, PartialPerm, Perm};

fn perm(s: &str) -> Perm {
    s.parse().unwrap()
}

fn report(id: u32, what: &str, failures: Vec<String>) {
    let ok = failures.is_empty();
    println!("criterion {id:>2}: {} {what}", if ok { "PASS" } else { "FAIL" });
    for f in failures.iter().take(20) {
        println!("    {f}");
    }
    assert!(ok, "criterion {id} failed: {failures:?}");
}

fn expect<T: PartialEq + std::fmt::Debug>(failures: &mut Vec<String>, got: T, want: T, what: impl std::fmt::Display) {
    if got != want {
        failures.push(format!("{what}: got {got:?}, expected {want:?}"));
    }
}

fn run_target(id: u32, what: &str, target: Target, bounds: Bounds, mut extra: Vec<String>) {
    let v = verify::run(target, bounds).unwrap();
    if v.cases == 0 {
        extra.push(format!("{target} checked no cases"));
    }
    extra.extend(v.failures);
    report(id, what, extra);
}

#[test]
fn c01_spot_values() {
    let mut f = Vec::new();
    let h = HoleSet::new(vec![2], 5).unwrap();
    expect(&mut f, count_h(5, &h, &perm("1342")).unwrap(), 13, "s_5^{2}(1342)");
    expect(&mut f, count_h(5, &h, &perm("2431")).unwrap(), 14, "s_5^{2}(2431)");
    let pi: PartialPerm = "2 * 1".parse().unwrap();
    let ext: BTreeSet<Perm> = pi.extensions().into_iter().collect();
    let want: BTreeSet<Perm> = ["312", "321", "231"].into_iter().map(perm).collect();
    expect(&mut f, ext, want, "extensions of 2*1");
    expect(
        &mut f,
        standardize(&[1, 9, 4, 5, 2]).unwrap(),
        perm("15342"),
        "st(19452)",
    );
    report(
        1,
        "spot values s_5^{2}(1342) = 13, s_5^{2}(2431) = 14, extensions(2*1), st(19452)",
        f,
    );
}

#[test]
fn c02_sizes_of_partial_perm_sets_and_extensions() {
    let mut f = Vec::new();
    for n in 0..=7u64 {
        for k in 0..=n {
            let all = PartialPerm::all(n as usize, k as usize);
            let nk = factorial(n).unwrap() / factorial(k).unwrap();
            expect(&mut f, all.len() as u64, nk, format!("|S_{n}^{k}|"));
            let ext = factorial(n).unwrap() / factorial(n - k).unwrap();
            for pi in &all {
                let e = pi.extensions();
                let distinct: BTreeSet<&Perm> = e.iter().collect();
                if e.len() as u64 != ext || distinct.len() != e.len() {
                    f.push(format!(
                        "{pi} has {} extensions ({} distinct), expected {ext}",
                        e.len(),
                        distinct.len()
                    ));
                }
            }
        }
    }
    report(2, "|S_n^k| = n!/k! and |extensions| = n!/(n-k)! for n <= 7", f);
}

#[test]
fn c03_too_many_holes_leave_no_avoiders() {
    let mut f = Vec::new();
    for l in 1..=4 {
        for p in all_perms(l) {
            for n in l..=8 {
                for k in l - 1..=n {
                    expect(
                        &mut f,
                        count(n, k, &p, Method::Direct).unwrap(),
                        0,
                        format!("s_{n}^{k}({p})"),
                    );
                    if n <= 6 {
                        expect(
                            &mut f,
                            count(n, k, &p, Method::Brute).unwrap(),
                            0,
                            format!("oracle s_{n}^{k}({p})"),
                        );
                    }
                }
            }
        }
    }
    report(3, "s_n^k(p) = 0 for |p| = l <= 4, k >= l-1, l <= n <= 8", f);
}

/// Extension-oracle counts against a closed form for `1 <= n <= 9`.
fn single_hole_vs(p: &str, formula: impl Fn(u64) -> u64) -> Vec<String> {
    let p = perm(p);
    let mut f = Vec::new();
    for n in 1..=9 {
        let brute = count(n, 1, &p, Method::Brute).unwrap();
        expect(&mut f, brute, formula(n as u64), format!("s_{n}^1({p})"));
        expect(
            &mut f,
            count(n, 1, &p, Method::Direct).unwrap(),
            brute,
            format!("direct s_{n}^1({p})"),
        );
    }
    f
}

#[test]
fn c04_single_hole_1234() {
    let mut f = single_hole_vs("1234", |n| binomial(2 * n - 2, n - 1).unwrap());
    expect(&mut f, 9 * catalan(8).unwrap(), 12870, "9 * Catalan(8)");
    expect(
        &mut f,
        count(9, 1, &perm("1234"), Method::Brute).unwrap(),
        12870,
        "s_9^1(1234)",
    );
    report(
        4,
        "s_n^1(1234) = C(2n-2, n-1) for 1 <= n <= 9, and s_9^1(1234) = 9 * Catalan(8) = 12870",
        f,
    );
}

#[test]
fn c05_single_hole_1342_and_bfile() {
    let mut f = single_hole_vs("1342", |n| {
        binomial(2 * n - 2, n - 1).unwrap() - if n >= 5 { binomial(2 * n - 2, n - 5).unwrap() } else { 0 }
    });
    let terms = sequence(&perm("1342"), 1, 1, 9, Method::Direct).unwrap();
    let ours = parse_bfile(&to_bfile(&terms, 0)).unwrap();
    let golden = parse_bfile(include_str!("data/a026029.txt")).unwrap();
    let shifted: Vec<(usize, u64)> = ours.iter().map(|&(n, v)| (n - 1, v)).collect();
    expect(&mut f, shifted, golden, "b-file against A026029 shifted by one");
    report(
        5,
        "s_n^1(1342) = C(2n-2, n-1) - C(2n-2, n-5) for n <= 9; b-file matches A026029 shifted by one",
        f,
    );
}

#[test]
fn c06_single_hole_2413() {
    let f = single_hole_vs("2413", |n| 2 * catalan(n).unwrap() - (1 << (n - 1)));
    report(6, "s_n^1(2413) = 2/(n+1) C(2n, n) - 2^(n-1) for n <= 9", f);
}

#[test]
fn c07_two_holes_in_length_four() {
    let mut f = Vec::new();
    for p in ["2413", "3142"] {
        for n in 3..=9u64 {
            expect(
                &mut f,
                count(n as usize, 2, &perm(p), Method::Direct).unwrap(),
                3 * n - 6,
                format!("s_{n}^2({p})"),
            );
        }
    }
    let baxter: Vec<Perm> = all_perms(4).into_iter().filter(is_baxter).collect();
    expect(&mut f, baxter.len(), 22, "Baxter patterns of length 4");
    for p in &baxter {
        for n in 2..=9u64 {
            expect(
                &mut f,
                count(n as usize, 2, p, Method::Direct).unwrap(),
                binomial(n, 2).unwrap(),
                format!("s_{n}^2({p})"),
            );
        }
    }
    report(
        7,
        "s_n^2(2413) = s_n^2(3142) = 3n-6 for 3 <= n <= 9; s_n^2(p) = C(n, 2) for the 22 Baxter p of length 4, n <= 9",
        f,
    );
}

#[test]
fn c08_baxter_characterizations() {
    let mut f = Vec::new();
    for l in 4..=5 {
        let k = l - 2;
        for p in all_perms(l) {
            let bax = is_baxter(&p);
            let all_one = HoleSet::all(k + 3, k)
                .iter()
                .all(|h| count_h(k + 3, h, &p).unwrap() == 1);
            let c = count(k + 4, k, &p, Method::Direct).unwrap();
            let full = binomial(k as u64 + 4, k as u64).unwrap();
            expect(&mut f, all_one, bax, format!("s_{}^H({p}) = 1 for all H", k + 3));
            expect(
                &mut f,
                c == full,
                bax,
                format!("s_{}^{k}({p}) = C({}, {k})", k + 4, k + 4),
            );
            if !bax && c >= full {
                f.push(format!("non-Baxter {p}: s_{}^{k} = {c} not below {full}", k + 4));
            }
        }
    }
    report(
        8,
        "p in S_4, S_5: Baxter iff all s_{k+3}^H(p) = 1 iff s_{k+4}^k(p) = C(k+4, k); otherwise strictly below",
        f,
    );
}

#[test]
fn c09_equivalence_classes_of_length_four() {
    let mut f = Vec::new();
    let want: [&[usize]; 4] = [&[12, 10, 2], &[14, 8, 2], &[22, 2], &[24]];
    for (k, w) in want.iter().enumerate() {
        let c = classify(4, k, 8, false).unwrap();
        expect(&mut f, sorted_sizes(&c), w.to_vec(), format!("block sizes at k={k}"));
    }
    let k0 = classify(4, 0, 8, false).unwrap();
    expect(
        &mut f,
        same_block(&k0, &perm("1324"), &perm("4231")),
        true,
        "k=0: 1324 ~ 4231",
    );
    expect(
        &mut f,
        same_block(&k0, &perm("1324"), &perm("1234")),
        false,
        "k=0: 1324 vs 1234",
    );
    let k1 = classify(4, 1, 8, false).unwrap();
    for (a, b, same) in [
        ("1234", "1324", true),
        ("1342", "1423", true),
        ("1342", "2431", true),
        ("2413", "3142", true),
        ("1234", "1342", false),
        ("1342", "2413", false),
    ] {
        expect(
            &mut f,
            same_block(&k1, &perm(a), &perm(b)),
            same,
            format!("k=1: {a} ~ {b}"),
        );
    }
    let k2 = classify(4, 2, 8, false).unwrap();
    expect(
        &mut f,
        same_block(&k2, &perm("2413"), &perm("3142")),
        true,
        "k=2: 2413 ~ 3142",
    );
    let strong = classify(4, 1, 8, true).unwrap();
    expect(
        &mut f,
        same_block(&strong, &perm("1342"), &perm("2431")),
        false,
        "strong k=1: 1342 vs 2431",
    );
    report(
        9,
        "classes at horizon 8: k=0 12/10/2, k=1 14/8/2, k=2 22/2, k=3 one block; strong k=1 separates 1342 and 2431",
        f,
    );
}

#[test]
fn c10_shape_star_wilf_counts() {
    let mut f = Vec::new();
    let pairs = [
        (Perm::identity(2), Perm::anti_identity(2)),
        (Perm::identity(3), Perm::anti_identity(3)),
        (perm("312"), perm("231")),
    ];
    for (p, q) in pairs {
        let r = verify_shape_star_wilf(&p, &q, 7, 3);
        if r.cases == 0 || r.nonempty_cases == 0 {
            f.push(format!("{p} vs {q}: no cases"));
        }
        for m in r.mismatches {
            f.push(format!(
                "{p} vs {q} on {} diamonds {:?}: {} vs {}",
                m.shape, m.diamonds, m.count_p, m.count_q
            ));
        }
    }
    report(
        10,
        "equal avoider counts for (12, 21), (123, 321), (312, 231) on diagrams with rows+cols <= 7, <= 3 diamonds",
        f,
    );
}

#[test]
fn c11_key_bijection() {
    let bounds = Bounds {
        max_size: Some(7),
        ..Bounds::default()
    };
    run_target(
        11,
        "six-step map is a bijection for rows+cols <= 7, k <= 3; step conditions hold at order <= 4",
        Target::SixStep,
        bounds,
        Vec::new(),
    );
}

#[test]
fn c12_psi() {
    let mut f = Vec::new();
    expect(&mut f, Matching::all(5).len(), 945, "matchings of order 5");
    run_target(
        12,
        "psi round trip, left vertices and block sizes at order <= 5; minimalist/maximalist characterizations",
        Target::Psi,
        Bounds {
            max_size: Some(5),
            ..Bounds::default()
        },
        f,
    );
}

#[test]
fn c13_single_hole_1234_to_1324() {
    let mut f = Vec::new();
    for n in 1..=8 {
        for h in 1..=n {
            let hs = HoleSet::new(vec![h], n).unwrap();
            expect(
                &mut f,
                count_h(n, &hs, &perm("1234")).unwrap(),
                count_h(n, &hs, &perm("1324")).unwrap(),
                format!("s_{n}^{{{h}}}"),
            );
        }
    }
    run_target(
        13,
        "hole-preserving bijection S_n^1(1234) -> S_n^1(1324) for n <= 8; equal s_n^H for singleton H",
        Target::Bij1324,
        Bounds {
            max_n: Some(8),
            ..Bounds::default()
        },
        f,
    );
}

#[test]
fn c14_path_bijection() {
    let mut f = Vec::new();
    let pi: PartialPerm = "5 4 2 * 8 7 6 1 3".parse().unwrap();
    expect(
        &mut f,
        hole_bijection_to_path(&pi).unwrap().len(),
        16,
        "path length for 5 4 2 * 8 7 6 1 3",
    );
    run_target(
        14,
        "single-hole 1234-avoiders biject onto free paths of length 2n-2, n <= 8; the n=9 example has length 16",
        Target::BijDyck,
        Bounds {
            max_n: Some(8),
            ..Bounds::default()
        },
        f,
    );
}

#[test]
fn c15_checkers_agree_with_oracles() {
    let mut f = Vec::new();
    let shapes = FerrersShape::all_up_to(8)
        .into_iter()
        .filter(|s| s.rows() <= 4 && s.cols() <= 4)
        .count();
    // non-increasing height sequences of length m <= 4 over 0..=4, zero-height columns included
    expect(&mut f, shapes, 126, "diagrams inside a 4x4 box");
    let bounds = Bounds {
        max_n: Some(7),
        max_size: Some(4),
        length: Some(4),
    };
    run_target(
        15,
        "direct checker = extension oracle on S_n^k x S_l (n <= 7, k <= 3, l <= 4) and on fillings within 4x4",
        Target::Oracle,
        bounds,
        f,
    );
}
