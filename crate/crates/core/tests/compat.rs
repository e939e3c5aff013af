mod common;

use common::{acceptance_spaces, space};
use gamedecomp::classes::{common_interest_space, zero_sum_space};
use gamedecomp::compat::{check_scheme, nonorthogonal_pairs, Direction};
use gamedecomp::random::{random_member, random_nonzero_rational, rng_from_seed};
use gamedecomp::rational::int;
use gamedecomp::{
    build_scheme, candogan_ip, is_compatible, standard_ip, theorem_check, verify_orthogonality,
    GameSpace, InnerProduct, RationalMatrix, SchemeKind,
};

fn random_diagonal_weight(s: &GameSpace, seed: u64) -> InnerProduct {
    let mut rng = rng_from_seed(seed);
    let d: Vec<_> = (0..s.dim())
        .map(|_| {
            let r = random_nonzero_rational(&mut rng);
            if r < int(0) { -r } else { r }
        })
        .collect();
    InnerProduct::custom(s, RationalMatrix::diagonal(&d), "random-diagonal").unwrap()
}

/// Block weight `diag(w_1 I_k, ..., w_n I_k)` with the given per-player factors.
fn block_weight(s: &GameSpace, w: &[i64]) -> InnerProduct {
    let d: Vec<_> = w.iter().flat_map(|&x| std::iter::repeat_n(int(x), s.k())).collect();
    InnerProduct::custom(s, RationalMatrix::diagonal(&d), "block").unwrap()
}

fn weights(s: &GameSpace) -> Vec<InnerProduct> {
    let mut w = vec![candogan_ip(s), random_diagonal_weight(s, 31), block_weight(s, &vec![4; s.n()])];
    let mut uneven = vec![1; s.n()];
    uneven[0] = 2;
    w.push(block_weight(s, &uneven));
    w
}

fn schemes(s: &GameSpace) -> Vec<gamedecomp::Scheme> {
    let ip = standard_ip(s);
    SchemeKind::ALL
        .into_iter()
        .filter_map(|k| build_scheme(k, s, &ip).ok())
        .collect()
}

#[test]
fn decision_matches_sampled_members() {
    for s in acceptance_spaces() {
        for ip in weights(&s) {
            for scheme in schemes(&s) {
                let report = is_compatible(&scheme, &ip).unwrap();
                assert_eq!(report.compatible, report.violations.is_empty());
                let mut rng = rng_from_seed(12);
                for (pi, part) in scheme.parts().iter().enumerate() {
                    let closed = !report.violations.iter().any(|v| v.part == pi + 1);
                    let mut stayed = 0;
                    for _ in 0..100 {
                        let g = random_member(&part.subspace, &mut rng);
                        let qg = ip.matrix().mul_vec(g.payoff_vector());
                        let qig = ip.inverse_matrix().mul_vec(g.payoff_vector());
                        if part.subspace.contains_vector(&qg) && part.subspace.contains_vector(&qig) {
                            stayed += 1;
                        }
                    }
                    // Members that stay form a proper subspace when the part is not
                    // closed; finite rational sampling can still hit it occasionally.
                    if closed {
                        assert_eq!(stayed, 100);
                    } else {
                        assert!(stayed <= 10, "{} part {} on {s}: {stayed}", scheme.name(), part.label);
                    }
                }
            }
        }
    }
}

#[test]
fn theorem_directions_on_all_schemes() {
    for s in acceptance_spaces() {
        let std = standard_ip(&s);
        for ip in weights(&s) {
            for scheme in schemes(&s) {
                let compatible = is_compatible(&scheme, &ip).unwrap().compatible;
                let orth_std = verify_orthogonality(&scheme, &std).unwrap();
                let orth_w = verify_orthogonality(&scheme, &ip).unwrap();
                if compatible && orth_std {
                    assert!(orth_w, "forward: {} {} {s}", scheme.name(), ip.name());
                }
                if compatible && orth_w {
                    assert!(orth_std, "backward: {} {} {s}", scheme.name(), ip.name());
                }
                // converse: both orthogonal forces compatibility
                if orth_std && orth_w {
                    assert!(compatible, "converse: {} {} {s}", scheme.name(), ip.name());
                }
                let report = check_scheme(&scheme, &ip, 15, 5).unwrap();
                assert!(report.holds, "{} {} {s}", scheme.name(), ip.name());
            }
        }
    }
}

#[test]
fn worked_examples_for_compatibility() {
    let s = space(&[2, 2, 2]);
    let ip = candogan_ip(&s);
    let p = build_scheme(SchemeKind::Potential, &s, &standard_ip(&s)).unwrap();
    assert!(is_compatible(&p, &ip).unwrap().compatible);

    let s = space(&[2, 3]);
    let z = build_scheme(SchemeKind::ZeroSum, &s, &standard_ip(&s)).unwrap();
    let r = is_compatible(&z, &candogan_ip(&s)).unwrap();
    assert!(!r.compatible);
    assert!(r.violations.iter().any(|v| v.direction == Direction::Q));
    assert!(r.violations.iter().any(|v| v.direction == Direction::QInverse));

    for s in [space(&[2, 2]), space(&[3, 3]), space(&[2, 2, 2])] {
        for kind in [SchemeKind::Normalization, SchemeKind::Symmetry, SchemeKind::ZeroSum, SchemeKind::Potential, SchemeKind::Zsep] {
            let scheme = build_scheme(kind, &s, &standard_ip(&s)).unwrap();
            assert!(is_compatible(&scheme, &candogan_ip(&s)).unwrap().compatible);
        }
    }
}

#[test]
fn normalization_scheme_survives_unequal_candogan() {
    // L and E are closed under any block-constant weight.
    let s = space(&[2, 3]);
    let scheme = build_scheme(SchemeKind::Normalization, &s, &standard_ip(&s)).unwrap();
    let r = is_compatible(&scheme, &candogan_ip(&s)).unwrap();
    assert!(r.compatible);
    let t = theorem_check(SchemeKind::Normalization, &s, &candogan_ip(&s), 20, 3).unwrap();
    assert!(t.holds && t.common_decomposition);
}

#[test]
fn weighted_cross_pairs() {
    let s = space(&[2, 3]);
    let z = zero_sum_space(&s).unwrap();
    let c = common_interest_space(&s).unwrap();
    let pairs = nonorthogonal_pairs(&z, &c, &candogan_ip(&s)).unwrap();
    assert!(!pairs.is_empty());
    assert!(nonorthogonal_pairs(&z, &c, &standard_ip(&s)).unwrap().is_empty());
    for l in [2, 3] {
        let s = space(&[l, l]);
        let z = zero_sum_space(&s).unwrap();
        let c = common_interest_space(&s).unwrap();
        assert!(nonorthogonal_pairs(&z, &c, &candogan_ip(&s)).unwrap().is_empty());
    }
}

#[test]
fn row_and_column_forms_agree() {
    let mut rng = rng_from_seed(40);
    for s in acceptance_spaces() {
        let n = s.dim();
        // random symmetric diagonally dominant weight
        let mut q = RationalMatrix::zeros(n, n);
        for r in 0..n {
            for c in r + 1..n {
                if (r + c) % 5 == 0 {
                    let x = gamedecomp::random::random_rational(&mut rng);
                    q[(r, c)] = x.clone();
                    q[(c, r)] = x;
                }
            }
        }
        for r in 0..n {
            q[(r, r)] = int(100);
        }
        let custom = InnerProduct::custom(&s, q, "dense").unwrap();
        for ip in [candogan_ip(&s), custom] {
            for scheme in schemes(&s) {
                for part in scheme.parts() {
                    for col in part.subspace.basis().columns() {
                        let row_form = RationalMatrix::row_vector(&col).mul(ip.matrix());
                        let col_form = ip.matrix().mul_vec(&col);
                        assert_eq!(row_form.row(0), &col_form[..]);
                        assert_eq!(
                            part.subspace.contains_vector(row_form.row(0)),
                            part.subspace.contains_vector(&col_form)
                        );
                    }
                }
            }
        }
    }
}
