//! Structural properties of sliced diagrams: category laws, boundary
//! bookkeeping, and that every enumerated move is a genuine equivalence of
//! well-formed diagrams.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tangle_core::tangle::moves::{apply_move, describe, enumerate_moves};
use tangle_core::tangle::random::{
    random_closed_diagram, random_composable_pair, random_diagram, random_diagram_from,
};
use tangle_core::{SignWord, SlicedDiagram};

#[test]
fn random_diagrams_validate_and_report_consistent_interfaces() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let d = random_diagram(&mut rng, 5, 6, 7);
        d.validate().unwrap();
        let words = d.interface_words();
        assert_eq!(words.len(), d.num_slices() + 1);
        assert_eq!(&words[0], d.source());
        assert_eq!(words[words.len() - 1], d.target());
        assert!(d.max_width() <= 7 + 1); // a slice may output one more than the cap allows in
        assert_eq!(d.crossing_count() % 2, (d.writhe().rem_euclid(2)) as usize);
    }
}

#[test]
fn composition_is_associative_and_unital() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..100 {
        let f = random_diagram(&mut rng, 4, 3, 6);
        let g = random_diagram_from(&mut rng, &f.target(), 3, 6);
        let h = random_diagram_from(&mut rng, &g.target(), 3, 6);
        let gf = SlicedDiagram::compose(&g, &f).unwrap();
        let hg = SlicedDiagram::compose(&h, &g).unwrap();
        assert_eq!(
            SlicedDiagram::compose(&h, &gf).unwrap(),
            SlicedDiagram::compose(&hg, &f).unwrap()
        );
        let id_src = SlicedDiagram::identity(f.source());
        let left = SlicedDiagram::compose(&f, &id_src).unwrap();
        assert_eq!(left.source(), f.source());
        assert_eq!(left.target(), f.target());
    }
}

#[test]
fn tensor_concatenates_boundaries() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..100 {
        let a = random_diagram(&mut rng, 3, 3, 5);
        let b = random_diagram(&mut rng, 3, 3, 5);
        let t = SlicedDiagram::tensor(&a, &b);
        t.validate().unwrap();
        assert_eq!(t.source(), &a.source().concat(b.source()));
        assert_eq!(t.target(), a.target().concat(&b.target()));
        // the empty diagram is the tensor unit
        assert_eq!(SlicedDiagram::tensor(&a, &SlicedDiagram::empty()).source(), a.source());
    }
}

#[test]
fn flipping_is_an_involution_that_swaps_ends() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..100 {
        let d = random_diagram(&mut rng, 4, 4, 6);
        let f = d.flipped();
        f.validate().unwrap();
        assert_eq!(f.source(), &d.target());
        assert_eq!(f.target(), *d.source());
        assert_eq!(f.flipped(), d);
        // a top-to-bottom reflection negates every crossing sign
        assert_eq!(f.writhe(), -d.writhe());
    }
}

#[test]
fn mirroring_is_an_involution_that_negates_writhe() {
    let mut rng = ChaCha8Rng::seed_from_u64(18);
    for _ in 0..100 {
        let d = random_diagram(&mut rng, 4, 4, 6);
        let m = d.mirror();
        m.validate().unwrap();
        assert_eq!(m.source(), d.source());
        assert_eq!(m.target(), d.target());
        assert_eq!(m.mirror(), d);
        assert_eq!(m.writhe(), -d.writhe());
        assert_eq!(m.crossing_count(), d.crossing_count());
    }
}

#[test]
fn braid_closures_are_closed_and_track_writhe() {
    let words: [&[i64]; 6] =
        [&[], &[1], &[1, 1, 1], &[1, -1], &[1, 2, 1], &[-1, 2, -1, 2]];
    for word in words {
        let n = word.iter().map(|l| l.unsigned_abs() as usize + 1).max().unwrap_or(2);
        let braid = SlicedDiagram::braid(word, n, true).unwrap();
        assert_eq!(braid.writhe(), word.iter().map(|l| l.signum()).sum::<i64>());
        let closed = braid.closure_trace().unwrap();
        assert!(closed.source().is_empty());
        assert!(closed.target().is_empty());
        assert_eq!(closed.writhe(), braid.writhe());
    }
}

#[test]
fn closed_generators_cap_everything() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for _ in 0..60 {
        let d = random_closed_diagram(&mut rng, 5, 6);
        assert!(d.source().is_empty());
        assert!(d.target().is_empty());
        d.validate().unwrap();
    }
}

#[test]
fn every_enumerated_move_preserves_validity_and_boundary() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    let mut applied = 0usize;
    for _ in 0..40 {
        let d = random_diagram(&mut rng, 4, 4, 6);
        for (mv, dir) in enumerate_moves(&d, 8) {
            let out = apply_move(&d, mv, dir)
                .unwrap_or_else(|e| panic!("{} failed: {:?}", describe(&mv, &dir), e));
            out.validate().unwrap();
            assert_eq!(out.source(), d.source());
            assert_eq!(out.target(), d.target());
            applied += 1;
        }
    }
    assert!(applied > 200, "only {applied} applicable moves found");
}

#[test]
fn composable_pairs_stack() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..100 {
        let (bottom, top) = random_composable_pair(&mut rng, 4, 3, 6);
        let stacked = SlicedDiagram::compose(&top, &bottom).unwrap();
        assert_eq!(stacked.source(), bottom.source());
        assert_eq!(stacked.target(), top.target());
        assert_eq!(stacked.num_slices(), bottom.num_slices() + top.num_slices());
    }
}

#[test]
fn identity_of_the_empty_word_has_no_slices() {
    assert_eq!(SlicedDiagram::identity(&SignWord::empty()), SlicedDiagram::empty());
    assert_eq!(SlicedDiagram::empty().num_slices(), 0);
}
