//! Fast pipelines against brute-force references over small exhaustive
//! families and seeded random strings.

use enhanced_covers::enumerate::advance;
use enhanced_covers::oracle::*;
use enhanced_covers::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn each_string(sigma: usize, n_max: usize, mut f: impl FnMut(&RegularString)) {
    let alphabet = Alphabet::latin(sigma).unwrap();
    for n in 0..=n_max {
        let mut x = vec![0u8; n];
        loop {
            f(&RegularString::from_indices(alphabet.clone(), x.clone()).unwrap());
            if !advance(sigma, &mut x) {
                break;
            }
        }
    }
}

fn random_regular(rng: &mut ChaCha8Rng, sigma: usize, n: usize) -> RegularString {
    let letters = (0..n).map(|_| rng.random_range(0..sigma as u8)).collect();
    RegularString::from_indices(Alphabet::latin(sigma).unwrap(), letters).unwrap()
}

#[test]
fn letter_matching_is_symmetric_and_reflexive() {
    for a in 1u64..16 {
        let la = IndeterminateLetter::from_mask(a).unwrap();
        assert!(letters_match(la, la));
        for b in 1u64..16 {
            let lb = IndeterminateLetter::from_mask(b).unwrap();
            assert_eq!(letters_match(la, lb), letters_match(lb, la));
            assert_eq!(letters_match(la, lb), a & b != 0);
        }
    }
}

#[test]
fn letter_matching_is_not_transitive() {
    let [a, ab, b] = [0b01, 0b11, 0b10].map(|m| IndeterminateLetter::from_mask(m).unwrap());
    assert!(letters_match(a, ab) && letters_match(ab, b));
    assert!(!letters_match(a, b));
}

#[test]
fn prefix_table_characterization() {
    each_string(2, 12, |x| {
        let pi = prefix_table_regular(x);
        assert_eq!(pi, brute_prefix_table(x), "{x}");
        for i in 2..=x.len() {
            let p = pi.at(i);
            assert_eq!(x.letters()[i - 1..i - 1 + p], x.letters()[..p]);
            if i - 1 + p < x.len() {
                assert_ne!(x.letters()[i - 1 + p], x.letters()[p]);
            }
        }
    });
}

#[test]
fn indeterminate_prefix_table_matches_reference() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..2000 {
        let n = rng.random_range(0..20);
        let letters = (0..n)
            .map(|_| IndeterminateLetter::from_mask(rng.random_range(1..8)).unwrap())
            .collect();
        let x = IndeterminateString::new(Alphabet::latin(3).unwrap(), letters).unwrap();
        assert_eq!(prefix_table_indeterminate(&x), brute_prefix_table(&x));
    }
}

#[test]
fn borders_through_the_prefix_table() {
    each_string(2, 12, |x| {
        let pi = prefix_table_regular(x);
        let beta = border_array_from_prefix(&pi);
        assert_eq!(beta, brute_border_array(x));
        assert_eq!(beta, border_array_regular(x));
        assert_eq!(prefix_from_border(&beta), pi);
        for i in 1..=x.len() {
            let mut chain: Vec<usize> = beta.chain(i).collect();
            chain.reverse();
            assert_eq!(chain, brute_borders(x, i));
        }
    });
}

#[test]
fn cover_array_and_chains() {
    each_string(2, 12, |x| {
        let gamma = cover_array_regular(x);
        assert_eq!(gamma, brute_cover_array(x, CoverFlavor::Regular));
        for i in 1..=x.len() {
            let mut chain: Vec<usize> = gamma.chain(i).collect();
            chain.reverse();
            let covers: Vec<usize> = brute_borders(x, i)
                .into_iter()
                .filter(|&b| brute_coverage(x, i, b) == i)
                .collect();
            assert_eq!(chain, covers, "{x} at {i}");
        }
    });
}

#[test]
fn rooted_covers_equal_covers_on_regular_strings() {
    each_string(3, 8, |x| {
        let rooted = rooted_cover_array(&prefix_table_indeterminate(&x.to_indeterminate()));
        assert_eq!(rooted.values(), cover_array_regular(x).values());
    });
}

#[test]
fn mnc_matches_reference() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..2000 {
        let n = rng.random_range(1..40);
        let x = random_regular(&mut rng, 3, n);
        let pi = prefix_table_regular(&x);
        let mnc = compute_mnc(&pi, CoverFlavor::Regular);
        assert_eq!(mnc.b(), max_border_stat(&pi));
        assert_eq!(
            mnc.mnc(),
            brute_mnc(&brute_cover_array(&x, CoverFlavor::Regular), mnc.b())
        );
    }
}

#[test]
fn capped_border_matches_reference() {
    each_string(2, 12, |x| {
        for k in 0..=x.len() {
            let want = brute_borders(x, x.len())
                .into_iter()
                .rev()
                .find(|&b| b <= k)
                .unwrap_or(0);
            assert_eq!(longest_border_capped(x, k), want);
        }
    });
}

#[test]
fn compressed_tables_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..1000 {
        let n = rng.random_range(1..60);
        let sigma = rng.random_range(2..5);
        let x = random_regular(&mut rng, sigma, n);
        let pi = prefix_table_regular(&x);
        let c = compress(&pi);
        assert_eq!(decompress(&c), pi);
        assert_eq!(CompressedPrefixTable::from_tsv(&c.to_tsv()).unwrap(), c);
        let mnc = compute_mnc(&pi, CoverFlavor::Regular);
        assert_eq!(compute_mec_compressed(&c, &mnc), compute_mec(&pi, &mnc, None));
    }
}

#[test]
fn mec_invariants_and_reference() {
    each_string(2, 11, |x| {
        let pi = prefix_table_regular(x);
        let r = compute_mec_prefix_based(x, None);
        r.check(&pi).unwrap();
        assert_eq!(r, brute_mec(x));
        assert_eq!(r, compute_mec_border_based(x, None));
        for i in 1..=x.len() {
            // a border-free prefix is covered by nothing but itself
            if brute_borders(x, i).is_empty() {
                assert_eq!((r.mec[i - 1], r.cmec[i - 1]), (0, 0));
            }
        }
    });
}
