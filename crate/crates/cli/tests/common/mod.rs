//! Shared helpers for the integration tests: a seeded diagram corpus and a
//! single-token fuzzer whose expected error position is known exactly.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tangle_core::tangle::random::{random_closed_diagram, random_diagram};
use tangle_core::{SignWord, SlicedDiagram};

/// A mixed corpus: the two degenerate diagrams, then open diagrams, closed
/// diagrams, and braid closures in rotation.
pub fn corpus(seed: u64, count: usize) -> Vec<SlicedDiagram> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    out.push(SlicedDiagram::empty());
    out.push(SlicedDiagram::identity(&SignWord::parse("+-").unwrap()));
    while out.len() < count {
        let d = match out.len() % 3 {
            0 => random_diagram(&mut rng, 4, 4, 6),
            1 => random_closed_diagram(&mut rng, 3, 6),
            _ => {
                let strands = rng.gen_range(2..=4usize);
                let len = rng.gen_range(0..=5);
                let word: Vec<i64> = (0..len)
                    .map(|_| {
                        let k = rng.gen_range(1..strands as i64);
                        if rng.gen() {
                            k
                        } else {
                            -k
                        }
                    })
                    .collect();
                SlicedDiagram::braid(&word, strands, true)
                    .unwrap()
                    .closure_trace()
                    .unwrap()
            }
        };
        out.push(d);
    }
    out
}

/// 1-based (line, column) spans of every whitespace-separated token.
pub fn token_spans(text: &str) -> Vec<(usize, usize, usize)> {
    // (line, column, byte offset)
    let mut spans = Vec::new();
    let mut offset = 0usize;
    for (li, line) in text.lines().enumerate() {
        let mut col = 0usize;
        let mut in_token = false;
        for (bi, c) in line.char_indices() {
            col += 1;
            if c.is_whitespace() {
                in_token = false;
            } else if !in_token {
                in_token = true;
                spans.push((li + 1, col, offset + bi));
            }
        }
        offset += line.len() + 1;
    }
    spans
}

/// Replaces the `index`-th token with `junk`; returns the new text and the
/// token's 1-based (line, column).
pub fn corrupt_token(text: &str, index: usize, junk: &str) -> (String, usize, usize) {
    let spans = token_spans(text);
    let (line, column, start) = spans[index];
    let tail = &text[start..];
    let token_len = tail.split_whitespace().next().unwrap().len();
    let mut out = String::with_capacity(text.len());
    out.push_str(&text[..start]);
    out.push_str(junk);
    out.push_str(&text[start + token_len..]);
    (out, line, column)
}
