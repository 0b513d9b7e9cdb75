use braid_sigma::homology::reduced_euler_from_betti;
use braid_sigma::{
    braids_equal, classify_links, concat, erase_strands, gcd_with_delta, join, meet, normal_form,
    order_complex, parse_character, pw_vertices, reduced_homology, smith_normal_form, weak_leq,
    BraidWord, ClassifyOptions, ExactCharacter, IntMatrix, Permutation, SmallRationalCharacter,
};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn word_strategy(max_n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_n).prop_flat_map(move |n| {
        let letter = (1..n as i32, any::<bool>()).prop_map(|(t, neg)| if neg { -t } else { t });
        prop::collection::vec(letter, 0..=max_len).prop_map(move |l| BraidWord::new(n, l).unwrap())
    })
}

fn pair_strategy(max_n: usize, max_len: usize) -> impl Strategy<Value = (BraidWord, BraidWord)> {
    (2..=max_n).prop_flat_map(move |n| {
        let letter = (1..n as i32, any::<bool>()).prop_map(|(t, neg)| if neg { -t } else { t });
        let w = prop::collection::vec(letter, 0..=max_len)
            .prop_map(move |l| BraidWord::new(n, l).unwrap());
        (w.clone(), w)
    })
}

fn perm_strategy(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|b| Permutation::from_bracket(&b).unwrap())
}

// Bareiss fraction-free elimination, independent of the Smith form code.
fn determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut sign = BigInt::from(1);
    let mut prev = BigInt::from(1);
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn normal_form_represents_the_word(w in word_strategy(6, 30)) {
        let nf = normal_form(&w);
        prop_assert!(nf.is_valid());
        let back = nf.to_word();
        prop_assert_eq!(back.invariants(), w.invariants());
        prop_assert_eq!(normal_form(&back), nf);
        prop_assert_eq!(normal_form(&w.free_reduce()), normal_form(&w));
    }

    #[test]
    fn inverse_cancels(w in word_strategy(6, 25)) {
        let id = BraidWord::identity(w.n()).unwrap();
        prop_assert!(braids_equal(&concat(&w, &w.inverse()).unwrap(), &id).unwrap());
        prop_assert!(braids_equal(&concat(&w.inverse(), &w).unwrap(), &id).unwrap());
    }

    #[test]
    fn mirror_negates_invariants(w in word_strategy(7, 30)) {
        let (a, b) = (w.invariants(), w.mirror().invariants());
        prop_assert_eq!(a.kappa, -b.kappa);
        prop_assert_eq!(a.perm, b.perm);
        for (i, j, v) in a.twice_windings.pairs() {
            prop_assert_eq!(b.twice_windings.get(i, j), -v);
        }
    }

    #[test]
    fn normal_form_of_product_is_multiplicative((x, y) in pair_strategy(5, 15)) {
        let lhs = normal_form(&concat(&x, &y).unwrap());
        let rhs = normal_form(&concat(&normal_form(&x).to_word(), &normal_form(&y).to_word()).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn gcd_is_first_factor(w in word_strategy(6, 20)) {
        let pos = BraidWord::new(w.n(), w.letters().iter().map(|l| l.abs()).collect()).unwrap();
        let nf = normal_form(&pos);
        let expected = if nf.inf > 0 {
            Permutation::longest(w.n())
        } else {
            nf.factors.first().cloned().unwrap_or_else(|| Permutation::identity(w.n()))
        };
        prop_assert_eq!(gcd_with_delta(&pos).unwrap(), expected);
    }

    #[test]
    fn erasing_keeps_pairwise_windings(w in word_strategy(7, 30), mask in 0u32..128) {
        let n = w.n();
        let keep: Vec<usize> = (1..=n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
        prop_assume!(keep.len() >= 2);
        let e = erase_strands(&w, &keep).unwrap();
        let (full, small) = (w.invariants(), e.invariants());
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate().skip(a + 1) {
                prop_assert_eq!(small.twice_windings.get(a + 1, b + 1), full.twice_windings.get(i, j));
            }
        }
    }

    #[test]
    fn join_and_meet_are_bounds(a in perm_strategy(5), b in perm_strategy(5), c in perm_strategy(5)) {
        let set = [a.clone(), b.clone(), c.clone()];
        let j = join(&set).unwrap();
        let m = meet(&set).unwrap();
        for x in &set {
            prop_assert!(weak_leq(x, &j).unwrap());
            prop_assert!(weak_leq(&m, x).unwrap());
        }
        // the join of a and b is the meet of their common upper bounds
        let uppers: Vec<Permutation> = Permutation::all(5)
            .filter(|u| weak_leq(&a, u).unwrap() && weak_leq(&b, u).unwrap())
            .collect();
        prop_assert_eq!(meet(&uppers).unwrap(), join(&[a, b]).unwrap());
    }

    #[test]
    fn twisting_is_a_right_action(s in perm_strategy(5), t in perm_strategy(5)) {
        let chi: ExactCharacter = parse_character("3*w[1,2] - w[1,5] + 1/2*w[2,3] - 5/2*w[4,5]", 5).unwrap();
        prop_assert_eq!(chi.twist(&s).unwrap().twist(&t).unwrap(), chi.twist(&s.then(&t)).unwrap());
        for tau in Permutation::all(5).step_by(7) {
            // chi(sigma tau) = chi(sigma) + chi^sigma(tau) whenever lengths add
            if s.coxeter_length() + tau.coxeter_length() == s.then(&tau).coxeter_length() {
                let lhs = chi.eval_on_perm(&s.then(&tau)).unwrap();
                let rhs = chi.eval_on_perm(&s).unwrap() + chi.twist(&s).unwrap().eval_on_perm(&tau).unwrap();
                prop_assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn smith_product_is_the_determinant(entries in prop::collection::vec(-9i64..=9, 16)) {
        let dense: Vec<Vec<i64>> = entries.chunks(4).map(|r| r.to_vec()).collect();
        let big: Vec<Vec<BigInt>> = dense.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
        let det = determinant(big.clone());
        let factors = smith_normal_form(&IntMatrix::from_dense(&big)).unwrap();
        for w in factors.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
        if det.is_zero() {
            prop_assert!(factors.len() < 4);
        } else {
            prop_assert_eq!(factors.len(), 4);
            prop_assert_eq!(factors.iter().product::<BigInt>(), det.abs());
        }
        let small = smith_normal_form(&braid_sigma::SmallIntMatrix::from_dense(&dense)).unwrap();
        prop_assert_eq!(small.iter().map(|&v| BigInt::from(v)).collect::<Vec<_>>(), factors);
    }
}

#[test]
fn proper_part_of_weak_order_is_a_sphere_of_dimension_n_minus_3() {
    for n in 3..=5 {
        let cx = order_complex(
            pw_vertices(n).unwrap(),
            |a: &Permutation, b| weak_leq(a, b).unwrap(),
            None,
        )
        .unwrap();
        let h = reduced_homology(&cx, None);
        assert!(
            h.profile.is_sphere(n as i64 - 3),
            "PW_{n}: {}",
            h.profile.label()
        );
        assert_eq!(
            reduced_euler_from_betti(&h.profile),
            cx.euler_characteristic() - 1
        );
    }
}

#[test]
fn fixed_width_rationals_agree_with_exact_ones() {
    let text = "w[1,2] - w[3,4]";
    let exact: ExactCharacter = parse_character(text, 4).unwrap();
    let small: SmallRationalCharacter = parse_character(text, 4).unwrap();
    let opts = ClassifyOptions::default();
    assert_eq!(
        classify_links(&exact, &opts).unwrap(),
        classify_links(&small, &opts).unwrap()
    );
}

#[test]
fn generic_one_positive_characters_have_rev_links() {
    use braid_sigma::{
        ascending_link_vertices, one_positive_pair, rev_vertices, AscendingLinkSpec,
    };
    let two_positive: ExactCharacter =
        parse_character("7*w[1,3] - w[1,2] + 8*w[3,4] - 14*w[2,4]", 4).unwrap();
    assert!(one_positive_pair(&two_positive).is_none());
    let chi: ExactCharacter = parse_character(
        "14*w[1,3] - w[1,2] - 2*w[1,4] - 3*w[2,3] - 5*w[2,4] - 3*w[3,4]",
        4,
    )
    .unwrap();
    let r = one_positive_pair(&chi).unwrap();
    assert!(r.strict() && !r.antipode);
    for sigma in Permutation::all(4) {
        let (a, b) = (sigma.image(r.pair.0), sigma.image(r.pair.1));
        for k in 0..6 {
            let spec = AscendingLinkSpec::new(chi.clone(), sigma.clone(), k).unwrap();
            assert_eq!(
                ascending_link_vertices(&spec),
                rev_vertices(4, a.min(b), a.max(b)).unwrap()
            );
        }
    }
}

#[test]
fn four_strand_circle_characters_mix_s0_and_s1_links() {
    use braid_sigma::HomologyProfile;
    // a(w12 + w34) + b(w13 + w24) + c(w14 + w23) with a + b + c = 0
    for (a, b, c) in [(1, -1, 0), (2, -1, -1), (1, 1, -2), (3, -1, -2)] {
        let text =
            format!("{a}*w[1,2] + {a}*w[3,4] + {b}*w[1,3] + {b}*w[2,4] + {c}*w[1,4] + {c}*w[2,3]");
        let chi: ExactCharacter = parse_character(&text.replace("+ -", "- "), 4).unwrap();
        let report = classify_links(&chi, &ClassifyOptions::default()).unwrap();
        let count = |h: HomologyProfile| report.class(&h).map_or(0, |c| c.count);
        assert!(count(HomologyProfile::sphere(0)) > 0, "{text}");
        assert!(count(HomologyProfile::sphere(1)) > 0, "{text}");
        assert_eq!(
            count(HomologyProfile::sphere(0))
                + count(HomologyProfile::sphere(1))
                + count(HomologyProfile::default()),
            144
        );
    }
}
