//! Randomized invariants over parameter ranges the exhaustive unit tests do
//! not sweep.

use proptest::prelude::*;

use graymod::algebra::ZkVector;
use graymod::gray::{sigma, GrayTable};
use graymod::lattice::{span, GeneratorSpec, GroupShape};
use graymod::word::{BinaryWord, Permutation};

fn arb_word(len: usize) -> impl Strategy<Value = BinaryWord> {
    prop::collection::vec(any::<bool>(), len)
        .prop_map(|bits| BinaryWord::from_bits(bits).unwrap())
}

fn arb_permutation(len: usize) -> impl Strategy<Value = Permutation> {
    Just(()).prop_perturb(move |(), mut rng| {
        let mut images: Vec<usize> = (0..len).collect();
        for i in (1..len).rev() {
            let j = (rng.next_u64() as usize) % (i + 1);
            images.swap(i, j);
        }
        Permutation::new(images).unwrap()
    })
}

proptest! {
    #[test]
    fn phi_roundtrips_for_any_k(k in 1usize..=16, j in 0u32..32) {
        let table = GrayTable::new(k).unwrap();
        let j = j % table.modulus();
        prop_assert_eq!(table.phi_inverse(&table.phi(j).unwrap()).unwrap(), j);
    }

    #[test]
    fn shifting_preserves_weight_and_distance(k in 1usize..=12, j in 0u32..24, bits in prop::collection::vec(any::<bool>(), 1..=12)) {
        let k = k.max(bits.len());
        let padded: Vec<bool> = bits.iter().copied().chain(std::iter::repeat(false)).take(k).collect();
        let w = BinaryWord::from_bits(padded).unwrap();
        let shifted = sigma(j, k).apply(&w).unwrap();
        prop_assert_eq!(shifted.weight(), w.weight());
    }

    #[test]
    fn permutation_action_is_compatible_with_composition(
        (a, b, w) in (2usize..=10).prop_flat_map(|n| (arb_permutation(n), arb_permutation(n), arb_word(n)))
    ) {
        // (a o b)(w) = a(b(w)) and inverses undo the action
        let composed = a.compose(&b).unwrap();
        prop_assert_eq!(
            composed.apply(&w).unwrap(),
            a.apply(&b.apply(&w).unwrap()).unwrap()
        );
        prop_assert_eq!(a.inverse().apply(&a.apply(&w).unwrap()).unwrap(), w);
    }

    #[test]
    fn xor_distance_is_a_translation_invariant_metric(
        (u, v, t) in (1usize..=16).prop_flat_map(|n| (arb_word(n), arb_word(n), arb_word(n)))
    ) {
        prop_assert_eq!(u.distance(&v).unwrap(), v.distance(&u).unwrap());
        prop_assert_eq!(
            u.distance(&v).unwrap(),
            u.xor(&t).unwrap().distance(&v.xor(&t).unwrap()).unwrap()
        );
    }

    #[test]
    fn spans_are_subgroups(
        modulus in prop::sample::select(vec![2u32, 4, 6, 8, 10]),
        length in 1usize..=2,
        raw in prop::collection::vec(prop::collection::vec(0u32..10, 1..=2), 1..=2)
    ) {
        let shape = GroupShape::single(modulus, length).unwrap();
        let generators: Vec<Vec<u32>> = raw
            .into_iter()
            .map(|g| (0..length).map(|i| g.get(i).copied().unwrap_or(0) % modulus).collect())
            .collect();
        let spec = GeneratorSpec::new(shape, generators).unwrap();
        let code = span(&spec, 1_000_000).unwrap();

        prop_assert!(code.contains(&vec![0; length]));
        for a in code.codewords() {
            let neg: Vec<u32> = a.iter().map(|&c| (modulus - c) % modulus).collect();
            prop_assert!(code.contains(&neg));
            for b in code.codewords() {
                let sum: Vec<u32> = a.iter().zip(b).map(|(x, y)| (x + y) % modulus).collect();
                prop_assert!(code.contains(&sum));
            }
        }
        // Lagrange
        prop_assert_eq!(code.shape().ambient_order() % code.size() as u128, 0);
    }

    #[test]
    fn image_weight_equals_lee_weight(
        modulus in prop::sample::select(vec![2u32, 4, 6, 8, 12, 16]),
        coords in prop::collection::vec(0u32..16, 1..=4)
    ) {
        let coords: Vec<u32> = coords.into_iter().map(|c| c % modulus).collect();
        let v = ZkVector::new(modulus, coords).unwrap();
        let table = GrayTable::new(modulus as usize / 2).unwrap();
        prop_assert_eq!(table.big_phi(&v).unwrap().weight(), v.lee_weight());
    }
}
