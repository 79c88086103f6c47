use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rs_cycles::coloring::{is_unattainable_pair, spiral_coloring};
use rs_cycles::rs::longest_increasing;
use rs_cycles::shapeset::sample_s_alpha;
use rs_cycles::{
    brute_force_s_alpha, construct_two_cycle, enumerate_b_alpha, render_tableau, rs_forward, rs_inverse, rs_shape,
    validate_alpha_coloring, BruteForceConfig, Coloring, Format, OutcomeKind, Partition, Permutation, RsPair, Tableau,
};

fn permutation() -> impl Strategy<Value = Permutation> {
    (1usize..14, any::<u64>()).prop_map(|(n, seed)| Permutation::random(n, &mut ChaCha8Rng::seed_from_u64(seed)))
}

fn cycle_type(max_parts: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 1..=max_parts).prop_map(|v| Partition::from_unsorted(v).unwrap())
}

proptest! {
    #[test]
    fn insertion_round_trips(sigma in permutation()) {
        let pair = rs_forward(&sigma);
        prop_assert!(pair.p.is_standard() && pair.q.is_standard());
        prop_assert_eq!(rs_inverse(&pair).unwrap(), sigma);
    }

    #[test]
    fn inverse_swaps_the_tableaux(sigma in permutation()) {
        let pair = rs_forward(&sigma);
        let inv = rs_forward(&sigma.inverse());
        prop_assert_eq!(inv, RsPair { p: pair.q, q: pair.p });
    }

    #[test]
    fn first_row_is_longest_increasing(sigma in permutation()) {
        let shape = rs_shape(&sigma);
        prop_assert_eq!(shape.part(1), longest_increasing(sigma.one_line()));
        let reversed: Vec<usize> = sigma.one_line().iter().rev().copied().collect();
        prop_assert_eq!(shape.num_rows(), longest_increasing(&reversed));
    }

    #[test]
    fn shapes_stay_in_the_box(alpha in cycle_type(4, 5), seed in any::<u64>()) {
        let sigma = Permutation::random_of_type(&alpha, &mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(sigma.cycle_type(), alpha.clone());
        prop_assert!(alpha.bounding_box().contains(&rs_shape(&sigma)));
    }

    #[test]
    fn constructions_are_witnesses(n in 2usize..24, a2 in 1usize..12, pick in any::<prop::sample::Index>()) {
        prop_assume!(a2 <= n / 2);
        let alpha = Partition::new(vec![n - a2, a2]).unwrap();
        let shapes = enumerate_b_alpha(&alpha);
        let shape = pick.get(&shapes);
        let out = construct_two_cycle(&alpha, shape).unwrap();
        if is_unattainable_pair(&alpha, shape) {
            prop_assert_eq!(out.kind, OutcomeKind::Unattainable);
        } else {
            prop_assert!(out.verify_witness());
            let sigma = out.sigma.unwrap();
            prop_assert_eq!(sigma.cycle_type(), alpha);
            prop_assert_eq!(&rs_shape(&sigma), shape);
        }
    }

    #[test]
    fn accepted_colorings_agree_with_insertion(shape in cycle_type(4, 4), seed in any::<u64>()) {
        // random two-coloring of T_shape reversed by columns
        use rand::seq::SliceRandom;
        let n = shape.size();
        prop_assume!(n >= 2);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut colors: Vec<usize> = (0..n).map(|i| if i < n / 2 { 2 } else { 1 }).collect();
        colors.shuffle(&mut rng);
        let mut it = colors.into_iter();
        let rows = shape.parts().iter().map(|&l| it.by_ref().take(l).collect()).collect();
        let coloring = Coloring::from_rows(rows).unwrap();
        let mut counts = coloring.counts();
        counts.sort_unstable_by(|a, b| b.cmp(a));
        let alpha = Partition::new(counts).unwrap();
        let q = Tableau::canonical(&shape);
        let out = validate_alpha_coloring(&q, &coloring, &alpha).unwrap();
        let sigma = out.sigma.clone().unwrap();
        prop_assert_eq!(sigma.cycle_type(), alpha);
        if out.kind == OutcomeKind::Coloring {
            prop_assert!(out.verify_witness());
        }
    }

    #[test]
    fn spiral_colors_the_whole_column(len in 1usize..20, split in any::<prop::sample::Index>()) {
        let a = split.index(len + 1);
        let r = spiral_coloring(len, a, len - a, 1, 2).unwrap();
        prop_assert_eq!(r.color_of.len(), len);
        prop_assert_eq!(r.color_of.iter().filter(|&&c| c == 1).count(), a);
        prop_assert_eq!(r.color_of.iter().filter(|&&c| c == 2).count(), len - a);
    }

    #[test]
    fn tableau_text_has_one_line_per_row(shape in cycle_type(5, 5)) {
        let text = render_tableau(&Tableau::canonical(&shape), Format::Text).unwrap();
        prop_assert_eq!(text.lines().count(), shape.num_rows());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn samples_are_a_subset_of_brute_force(alpha in cycle_type(3, 3), seed in any::<u64>()) {
        let brute = brute_force_s_alpha(&alpha, &BruteForceConfig::with_jobs(1)).unwrap();
        let sampled = sample_s_alpha(&alpha, 200, seed).unwrap();
        prop_assert!(sampled.s_alpha.iter().all(|s| brute.s_alpha.contains(s)));
        prop_assert!(brute.outside_box.is_empty());
    }
}
