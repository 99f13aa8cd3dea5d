//! The text-format contract: canonical serialization round-trips exactly,
//! and a corrupted token is reported at its own line and column.

mod common;

use common::{corpus, corrupt_token, token_spans};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tangle_cli::formats::{
    parse_braid, parse_sliced, serialize, serialize_braid, ErrorKind,
};

#[test]
fn a_seeded_corpus_round_trips_structurally() {
    let diagrams = corpus(71, 100);
    for (i, d) in diagrams.iter().enumerate() {
        let text = serialize(d);
        let back = parse_sliced(&text).unwrap_or_else(|e| panic!("diagram {}: {}", i, e));
        assert_eq!(&back, d, "diagram {} changed under round-trip", i);
        // one pass is canonical: reserializing is the identity on text
        assert_eq!(serialize(&back), text, "diagram {} reserialized differently", i);
    }
}

#[test]
fn braid_words_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(72);
    for _ in 0..100 {
        let strands = rng.gen_range(2..=6usize);
        let len = rng.gen_range(0..=8);
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
        let text = serialize_braid(&word, strands);
        let (w, n) = parse_braid(&text).unwrap();
        assert_eq!((w, n), (word, strands));
    }
}

#[test]
fn corrupting_one_sliced_token_reports_its_exact_position() {
    let mut rng = ChaCha8Rng::seed_from_u64(73);
    let mut fuzzed = 0usize;
    for d in corpus(74, 100) {
        let text = serialize(&d);
        let n_tokens = token_spans(&text).len();
        if n_tokens == 0 {
            continue;
        }
        let (bad, line, column) = corrupt_token(&text, rng.gen_range(0..n_tokens), "zz");
        let e = parse_sliced(&bad).expect_err("corrupted input must not parse");
        assert_eq!(
            (e.line, e.column, e.kind),
            (line, column, ErrorKind::Syntax),
            "input:\n{}\nreport: {}",
            bad,
            e
        );
        fuzzed += 1;
    }
    assert!(fuzzed >= 100, "only {} fuzz cases ran", fuzzed);
}

#[test]
fn corrupting_one_braid_token_reports_its_exact_position() {
    let mut rng = ChaCha8Rng::seed_from_u64(75);
    for i in 0..100 {
        let strands = rng.gen_range(2..=5usize);
        let len = rng.gen_range(0..=6);
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
        let text = serialize_braid(&word, strands);
        let n_tokens = token_spans(&text).len();
        let (bad, line, column) = corrupt_token(&text, rng.gen_range(0..n_tokens), "zz");
        let e = parse_braid(&bad).expect_err("corrupted input must not parse");
        assert_eq!(
            (e.line, e.column),
            (line, column),
            "case {}: input `{}` gave {}",
            i,
            bad,
            e
        );
        assert_eq!(e.kind, ErrorKind::Syntax);
    }
}

#[test]
fn multi_line_inputs_report_later_lines() {
    let text = "bottom: ++\nx++\nid+ id+\nzz id+";
    let e = parse_sliced(text).unwrap_err();
    assert_eq!((e.line, e.column), (4, 1));
    let text = "bottom: ++\nx++\nid+ zz";
    let e = parse_sliced(text).unwrap_err();
    assert_eq!((e.line, e.column), (3, 5));
}

#[test]
fn serialization_is_whitespace_canonical() {
    let loose = "bottom:   ++\n  id+\tid+  # padded\n";
    let tight = parse_sliced(loose).unwrap();
    assert_eq!(serialize(&tight), "bottom: ++\nid+ id+");
}
