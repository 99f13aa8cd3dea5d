//! Seeded generators for diagrams, used by the property suites and the
//! self-check commands. Everything is driven by a caller-supplied `Rng`, so
//! results are reproducible from a seed.

use alloc::vec::Vec;
use rand::Rng;

use super::diagram::{Generator, SlicedDiagram};
use super::word::{Sign, SignWord};

fn random_sign<R: Rng>(rng: &mut R) -> Sign {
    if rng.gen() {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

pub fn random_word<R: Rng>(rng: &mut R, len: usize) -> SignWord {
    (0..len).map(|_| random_sign(rng)).collect()
}

/// One random slice consuming `word`. Interface words never exceed
/// `max_width` strands.
fn random_slice<R: Rng>(rng: &mut R, word: &SignWord, max_width: usize) -> Vec<Generator> {
    let mut gens = Vec::new();
    let mut out_len = 0usize;
    let mut i = 0;
    let len = word.len();
    while i < len {
        // width if every remaining strand passed straight through
        let projected = out_len + (len - i);
        if projected + 2 <= max_width && rng.gen_ratio(1, 6) {
            gens.push(Generator::Cup(random_sign(rng)));
            out_len += 2;
            continue;
        }
        let s = word.get(i).unwrap();
        let t = word.get(i + 1);
        let mut choices: Vec<u8> = alloc::vec![0, 0];
        if let Some(t) = t {
            choices.push(1);
            choices.push(2);
            if t == s.flip() {
                choices.push(3);
            }
        }
        match choices[rng.gen_range(0..choices.len())] {
            1 => {
                gens.push(Generator::Over(s, t.unwrap()));
                out_len += 2;
                i += 2;
            }
            2 => {
                gens.push(Generator::Under(s, t.unwrap()));
                out_len += 2;
                i += 2;
            }
            3 => {
                gens.push(Generator::Cap(s));
                i += 2;
            }
            _ => {
                gens.push(Generator::Id(s));
                out_len += 1;
                i += 1;
            }
        }
    }
    // Trailing cup; always when the slice would otherwise emit nothing, so
    // generation from the empty word gets off the ground.
    if out_len + 2 <= max_width && (out_len == 0 || rng.gen_ratio(1, 6)) {
        gens.push(Generator::Cup(random_sign(rng)));
    }
    gens
}

pub fn random_diagram_from<R: Rng>(
    rng: &mut R,
    bottom: &SignWord,
    n_slices: usize,
    max_width: usize,
) -> SlicedDiagram {
    let mut slices = Vec::with_capacity(n_slices);
    let mut w = bottom.clone();
    for _ in 0..n_slices {
        let slice = random_slice(rng, &w, max_width);
        let mut out = Vec::new();
        for g in &slice {
            out.extend(g.output_signs());
        }
        w = SignWord::new(out);
        slices.push(slice);
    }
    SlicedDiagram::new(bottom.clone(), slices).expect("generated slices are valid")
}

pub fn random_diagram<R: Rng>(
    rng: &mut R,
    max_len: usize,
    n_slices: usize,
    max_width: usize,
) -> SlicedDiagram {
    let len = rng.gen_range(0..=max_len.min(max_width));
    let w = random_word(rng, len);
    random_diagram_from(rng, &w, n_slices, max_width)
}

/// Two diagrams with matching middle boundary, ready for `compose`.
pub fn random_composable_pair<R: Rng>(
    rng: &mut R,
    max_len: usize,
    n_slices: usize,
    max_width: usize,
) -> (SlicedDiagram, SlicedDiagram) {
    let bottom = random_diagram(rng, max_len, n_slices, max_width);
    let top = random_diagram_from(rng, &bottom.target(), n_slices, max_width);
    (bottom, top)
}

/// A diagram with empty source and target: a random link diagram. The body is
/// grown from the empty word and whatever strands remain open at the top are
/// capped off pairwise.
pub fn random_closed_diagram<R: Rng>(
    rng: &mut R,
    body_slices: usize,
    max_width: usize,
) -> SlicedDiagram {
    let body = random_diagram_from(rng, &SignWord::empty(), body_slices, max_width.max(2));
    let mut slices = body.slices().to_vec();
    let mut w = body.target();
    while !w.is_empty() {
        // a sign word with zero net winding always has an opposing adjacent pair
        let pairs: Vec<usize> = (0..w.len() - 1)
            .filter(|&i| w.get(i + 1).unwrap() == w.get(i).unwrap().flip())
            .collect();
        let at = pairs[rng.gen_range(0..pairs.len())];
        let mut slice: Vec<Generator> = (0..at).map(|j| Generator::Id(w.get(j).unwrap())).collect();
        slice.push(Generator::Cap(w.get(at).unwrap()));
        slice.extend((at + 2..w.len()).map(|j| Generator::Id(w.get(j).unwrap())));
        slices.push(slice);
        let mut v: Vec<Sign> = w.iter().collect();
        v.drain(at..at + 2);
        w = SignWord::new(v);
    }
    SlicedDiagram::new(SignWord::empty(), slices).expect("capping keeps the diagram valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generation_is_reproducible() {
        let mut a = ChaCha8Rng::seed_from_u64(9);
        let mut b = ChaCha8Rng::seed_from_u64(9);
        let da = random_diagram(&mut a, 5, 6, 8);
        let db = random_diagram(&mut b, 5, 6, 8);
        assert_eq!(da, db);
    }

    #[test]
    fn closed_diagrams_have_empty_boundary() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let d = random_closed_diagram(&mut rng, 4, 6);
            assert!(d.source().is_empty());
            assert!(d.target().is_empty());
        }
    }

    #[test]
    fn composable_pairs_compose() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let (bottom, top) = random_composable_pair(&mut rng, 4, 3, 8);
            let stacked = SlicedDiagram::compose(&top, &bottom).unwrap();
            assert_eq!(stacked.source(), bottom.source());
            assert_eq!(stacked.target(), top.target());
        }
    }

    #[test]
    fn widths_respect_the_cap() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..50 {
            let d = random_diagram(&mut rng, 6, 8, 6);
            assert!(d.max_width() <= 6);
        }
    }
}
