//! Randomised invariants on partitions, words, decompositions, codings and
//! the exact algebra.

use std::collections::BTreeSet;

use macdo_core::algebra::{
    q, sp, sp_dimension, Grading, LaurentPoly, SeriesSpace, TruncatedSeries, Q,
};
use macdo_core::identities::{self, Identity, Params};
use macdo_core::littlewood::{
    compose, core_from_vector, core_vector, dd_reduced_weight, decompose, sc_reduced_weight,
    weight_from_core_vector,
};
use macdo_core::vcoding::{
    beta_vector, core_from_vcoding, hook_side_exponents, coding_side_exponents, vcoding, weight_from_vcoding,
    Family,
};
use macdo_core::words::{box_index_pairs, index_pairs_by_scan, is_above_diagonal};
use macdo_core::{BoundaryWord, CoreVector, Partition, Word};
use proptest::prelude::*;

fn arb_partition(max_len: usize, max_part: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn arb_strict(max_part: u32) -> impl Strategy<Value = Partition> {
    prop::collection::btree_set(1..=max_part, 0..=max_part as usize).prop_map(|s| {
        Partition::new(s.into_iter().rev().collect()).unwrap()
    })
}

fn arb_doubled_distinct() -> impl Strategy<Value = Partition> {
    arb_strict(7).prop_map(|s| Partition::double(&s).unwrap())
}

fn arb_self_conjugate() -> impl Strategy<Value = Partition> {
    prop::collection::btree_set(0u32..8, 0..5).prop_map(|s| {
        let hooks: Vec<u32> = s.into_iter().rev().map(|k| 2 * k + 1).collect();
        Partition::from_diagonal_hooks(&hooks).unwrap()
    })
}

/// A balanced integer vector of length `t`.
fn arb_core_vector(t: usize) -> impl Strategy<Value = CoreVector> {
    prop::collection::vec(-3i64..=3, t - 1).prop_map(|mut n| {
        let s: i64 = n.iter().sum();
        n.push(-s);
        CoreVector::new(n).unwrap()
    })
}

fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i32..=3, -3i32..=3, -4i64..=4), 0..5).prop_map(|terms| {
        let mut p = LaurentPoly::zero(2);
        for (a, b, c) in terms {
            p += &LaurentPoly::monomial(2, &[a, b], q(c));
        }
        p
    })
}

fn arb_series(space: SeriesSpace) -> impl Strategy<Value = TruncatedSeries> {
    let cells: Vec<_> = space.grades().collect();
    prop::collection::vec(-3i64..=3, cells.len()).prop_map(move |cs| {
        let mut s = TruncatedSeries::zero(&space);
        for (g, c) in cells.iter().zip(cs) {
            *s.coeff_mut(*g) = LaurentPoly::constant(0, q(c));
        }
        s
    })
}

fn t_space() -> SeriesSpace {
    SeriesSpace::new(vec![Grading::new("T", 6, 1)], &[])
}

proptest! {
    #[test]
    fn conjugation_is_an_involution_preserving_hooks(p in arb_partition(8, 8)) {
        let c = p.conjugate();
        prop_assert_eq!(c.conjugate(), p.clone());
        let mut a = p.hooks();
        let mut b = c.hooks();
        a.sort_unstable();
        b.sort_unstable();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn words_round_trip_and_balance(p in arb_partition(10, 10)) {
        let w = BoundaryWord::encode(&p);
        prop_assert_eq!(w.decode(), p.clone());
        prop_assert_eq!(w.ones_left(), p.durfee());
        prop_assert_eq!(w.word().zeros_from(0), p.durfee());
    }

    #[test]
    fn hooks_are_index_gaps(p in arb_partition(7, 7)) {
        let w = BoundaryWord::encode(&p);
        let pairs = box_index_pairs(&p);
        for (cell, pair) in &pairs {
            prop_assert_eq!(cell.hook as i64, pair.j - pair.i);
            prop_assert_eq!(is_above_diagonal(&w, *pair), cell.eps == 1);
        }
        let from_cells: BTreeSet<_> = pairs.iter().map(|(_, pair)| *pair).collect();
        let scanned: BTreeSet<_> = index_pairs_by_scan(&w).into_iter().collect();
        prop_assert_eq!(from_cells, scanned);
    }

    #[test]
    fn balanced_words_decode_and_re_encode(extra in prop::collection::btree_set(-6i64..6, 0..12)) {
        // Pick a floor that balances the chosen zeros.
        let word = (-12..=0)
            .map(|f| Word::new(f, extra.iter().copied().filter(|&z| z >= f)))
            .find(|w| w.ones_below(0) == w.zeros_from(0));
        if let Some(w) = word {
            let b = BoundaryWord::from_word(w).unwrap();
            let p = b.decode();
            prop_assert_eq!(BoundaryWord::encode(&p).decode(), p);
        }
    }

    #[test]
    fn littlewood_round_trip(p in arb_partition(8, 8), t in 2usize..=5) {
        let d = decompose(&p, t);
        prop_assert_eq!(d.weight(), p.weight());
        prop_assert!(d.core.is_core(t as u32));
        prop_assert_eq!(compose(&d).unwrap(), p.clone());
        let quotient_empty = d.quotient.iter().all(Partition::is_empty);
        prop_assert_eq!(p.is_core(t as u32), quotient_empty);
    }

    #[test]
    fn core_vectors_biject_with_cores(v in (2usize..=8).prop_flat_map(arb_core_vector)) {
        let t = v.t;
        let c = core_from_vector(&v).unwrap();
        prop_assert!(c.is_core(t as u32));
        prop_assert_eq!(weight_from_core_vector(&v), c.weight());
        prop_assert_eq!(core_vector(&c, t).unwrap(), v);
    }

    #[test]
    fn beta_is_g_n_plus_i(v in arb_core_vector(6)) {
        let c = core_from_vector(&v).unwrap();
        let beta = beta_vector(&c, 6);
        for (i, (b, n)) in beta.iter().zip(&v.n).enumerate() {
            prop_assert_eq!(*b, 6 * n + i as i64);
        }
    }

    #[test]
    fn dd_structure_and_codings(p in arb_doubled_distinct(), t in 1usize..=3) {
        let g = 2 * t + 2;
        let core = macdo_core::littlewood::core(&p, g);
        prop_assert!(core.is_doubled_distinct());
        let v = core_vector(&core, g).unwrap();
        prop_assert_eq!(v.n[0], 0);
        prop_assert_eq!(v.n[t + 1], 0);
        for i in 1..g {
            prop_assert_eq!(v.n[i], -v.n[g - i]);
        }
        prop_assert_eq!(dd_reduced_weight(&v).unwrap(), core.weight());
        let c = vcoding(&core, g, t, Family::Dd).unwrap();
        prop_assert_eq!(core_from_vcoding(&c).unwrap(), core.clone());
        prop_assert_eq!(weight_from_vcoding(&c).unwrap(), (core.weight() as i64).into());
        prop_assert_eq!(hook_side_exponents(&core, g), coding_side_exponents(&core, &c));
    }

    #[test]
    fn sc_structure_and_codings(p in arb_self_conjugate(), t in 1usize..=3) {
        let g = 2 * t;
        let core = macdo_core::littlewood::core(&p, g);
        prop_assert!(core.is_self_conjugate());
        let v = core_vector(&core, g).unwrap();
        for i in 0..g {
            prop_assert_eq!(v.n[i], -v.n[g - 1 - i]);
        }
        prop_assert_eq!(sc_reduced_weight(&v).unwrap(), core.weight());
        let c = vcoding(&core, g, t, Family::Sc).unwrap();
        prop_assert_eq!(core_from_vcoding(&c).unwrap(), core);
    }

    #[test]
    fn laurent_ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        let prod = &a * &b;
        if !b.is_zero() {
            prop_assert_eq!(prod.exact_div(&b).unwrap(), a);
        }
    }

    #[test]
    fn series_ring_axioms(
        a in arb_series(t_space()),
        b in arb_series(t_space()),
        c in arb_series(t_space()),
    ) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn unit_series_invert(mut a in arb_series(t_space()), lead in prop::sample::select(vec![-2i64, -1, 1, 3])) {
        *a.coeff_mut([0, 0]) = LaurentPoly::constant(0, q(lead));
        let inv = a.inverse().unwrap();
        prop_assert_eq!(a.mul(&inv), TruncatedSeries::one(&t_space()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn characters_are_weyl_invariant(mu in arb_partition(2, 4)) {
        let t = 2;
        let chi = sp(&mu, t).unwrap();
        for i in 0..t {
            prop_assert_eq!(chi.invert_var(i), chi.clone());
        }
        let at_one = (0..t).try_fold(chi, |p, i| p.eval_var(i, &Q::from_integer(1.into()))).unwrap();
        prop_assert_eq!(at_one.constant_term(), sp_dimension(&mu, t));
    }

    #[test]
    fn reports_do_not_depend_on_worker_count(workers in 1usize..=4) {
        let params = Params {
            t: Some(1),
            t_cap: Some("4".parse().unwrap()),
            ..Params::default()
        };
        let one = identities::run_with_workers(Identity::Thm11, &params, 1).unwrap();
        let many = identities::run_with_workers(Identity::Thm11, &params, workers).unwrap();
        prop_assert_eq!(
            serde_json::to_string(&one).unwrap(),
            serde_json::to_string(&many).unwrap()
        );
    }
}
