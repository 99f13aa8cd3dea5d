//! Transport behaves like a representation of the fundamental groupoid:
//! loops give the identity, homotopic paths give equal matrices, and the
//! exactly-flat default connection satisfies the braid relation numerically.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tangle_core::kz::{braid_path, braid_relation_check, transport, KzConfig};

#[test]
fn random_loops_transport_to_the_identity() {
    let config = KzConfig::default_config(3, 0.2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..8 {
        let len = rng.gen_range(1..=3);
        let mut word: Vec<i64> = (0..len)
            .map(|_| {
                let i = rng.gen_range(1..3i64);
                if rng.gen::<bool>() { i } else { -i }
            })
            .collect();
        let back: Vec<i64> = word.iter().rev().map(|l| -l).collect();
        word.extend(back);
        let path = braid_path(&word, 3, 0.5).unwrap();
        let t = transport(&config, &path, 80).unwrap();
        let dist = t.matrix.distance_from_identity();
        assert!(dist < 1e-5, "word {word:?}: distance {dist}");
    }
}

#[test]
fn homotopic_paths_transport_identically() {
    // cancelling a generator against its inverse
    let config = KzConfig::default_config(2, 0.1).unwrap();
    let a = transport(&config, &braid_path(&[1, 1, -1], 2, 0.5).unwrap(), 120).unwrap();
    let b = transport(&config, &braid_path(&[1], 2, 0.5).unwrap(), 120).unwrap();
    assert!(a.matrix.sub(&b.matrix).frobenius_norm() < 1e-6);

    // generators with disjoint support commute
    let config4 = KzConfig::default_config(4, 0.2).unwrap();
    let a = transport(&config4, &braid_path(&[1, 3], 4, 0.5).unwrap(), 120).unwrap();
    let b = transport(&config4, &braid_path(&[3, 1], 4, 0.5).unwrap(), 120).unwrap();
    assert!(a.matrix.sub(&b.matrix).frobenius_norm() < 1e-6);
}

#[test]
fn the_braid_relation_holds_at_higher_rank() {
    let config = KzConfig::default_config(4, 0.2).unwrap();
    let report = braid_relation_check(&config, 80, 1e-6).unwrap();
    assert!(report.pass, "distance {}", report.distance);
}

#[test]
fn braid_paths_keep_unit_separation() {
    let path = braid_path(&[1, 2, -1], 3, 0.5).unwrap();
    let sampled = path.min_separation(256);
    assert!((sampled - 1.0).abs() < 1e-9, "sampled min separation {sampled}");
    let config = KzConfig::default_config(3, 0.2).unwrap();
    let t = transport(&config, &path, 40).unwrap();
    assert!((t.min_separation - 1.0).abs() < 1e-9);
}

#[test]
fn flatness_holds_up_to_four_points_and_counts_identities() {
    for (n, expected) in [(2usize, 0usize), (3, 3), (4, 15)] {
        let config = KzConfig::default_config(n, 1.0).unwrap();
        let report = config.flatness_check();
        assert!(report.is_flat(), "n={n}");
        assert_eq!(report.identities_checked, expected, "n={n}");
    }
}
