//! Self-check suites behind `tangle check`: the category axioms, move
//! invariance, the state-sum oracle, the 1-d TQFT, and KZ flatness, all
//! runnable from the command line rather than only from the test tree.
//!
//! Every suite is deterministic in (seed, samples): randomness comes from a
//! `ChaCha8Rng` seeded once, and reports are assembled in case order.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use tangle_core::cobordism::{Matching1, Point};
use tangle_core::evaluator::{bracket_statesum, check_theory, eval_closed};
use tangle_core::kz::KzConfig;
use tangle_core::ring::LaurentPoly;
use tangle_core::tangle::random::{
    random_composable_pair, random_diagram, random_word,
};
use tangle_core::tangle::random_equivalent;
use tangle_core::{default_theory, eval, Sign, SignWord, SlicedDiagram};

use crate::formats::serialize;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    Theory,
    Functoriality,
    Monoidality,
    Moves,
    Oracle,
    Tqft1,
    KzFlatness,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Theory,
        Suite::Functoriality,
        Suite::Monoidality,
        Suite::Moves,
        Suite::Oracle,
        Suite::Tqft1,
        Suite::KzFlatness,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Theory => "theory",
            Suite::Functoriality => "functoriality",
            Suite::Monoidality => "monoidality",
            Suite::Moves => "moves",
            Suite::Oracle => "oracle",
            Suite::Tqft1 => "tqft1",
            Suite::KzFlatness => "kz-flatness",
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub samples: usize,
    pub seed: u64,
    /// Longest braid word in the oracle sweep.
    pub max_crossings: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { samples: 100, seed: 0, max_crossings: 4 }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteOutcome {
    pub suite: Suite,
    pub seed: u64,
    pub cases: usize,
    /// Per-check summary lines for the text report.
    pub lines: Vec<String>,
    /// One entry per failing case, with enough context to replay it.
    pub failures: Vec<String>,
}

impl SuiteOutcome {
    fn new(suite: Suite, seed: u64) -> Self {
        SuiteOutcome { suite, seed, cases: 0, lines: Vec::new(), failures: Vec::new() }
    }

    fn check(&mut self, label: impl Into<String>, pass: bool) {
        let label = label.into();
        self.cases += 1;
        self.lines.push(format!("{} {}", if pass { "ok  " } else { "FAIL" }, label));
        if !pass {
            self.failures.push(label);
        }
    }

    fn count_case(&mut self, failure: Option<String>) {
        self.cases += 1;
        if let Some(f) = failure {
            self.failures.push(f);
        }
    }

    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn text(&self) -> String {
        let mut out = format!("suite {} (seed {})", self.suite.name(), self.seed);
        for line in &self.lines {
            out.push('\n');
            out.push_str(line);
        }
        for f in &self.failures {
            if !self.lines.iter().any(|l| l.ends_with(f.as_str())) {
                out.push_str("\nFAIL ");
                out.push_str(f);
            }
        }
        if self.pass() {
            out.push_str(&format!("\npass: {} cases", self.cases));
        } else {
            out.push_str(&format!("\nFAIL: {} of {} cases", self.failures.len(), self.cases));
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema": 1,
            "suite": self.suite.name(),
            "seed": self.seed,
            "cases": self.cases,
            "pass": self.pass(),
            "failures": self.failures,
        })
    }
}

pub fn run(suite: Suite, opts: &SuiteOptions) -> SuiteOutcome {
    match suite {
        Suite::Theory => theory(opts),
        Suite::Functoriality => functoriality(opts),
        Suite::Monoidality => monoidality(opts),
        Suite::Moves => moves(opts),
        Suite::Oracle => oracle(opts),
        Suite::Tqft1 => tqft1(opts),
        Suite::KzFlatness => kz_flatness(opts),
    }
}

fn theory(opts: &SuiteOptions) -> SuiteOutcome {
    let mut out = SuiteOutcome::new(Suite::Theory, opts.seed);
    for c in check_theory(&default_theory()).checks {
        out.check(c.name, c.pass);
    }
    out
}

fn functoriality(opts: &SuiteOptions) -> SuiteOutcome {
    let mut out = SuiteOutcome::new(Suite::Functoriality, opts.seed);
    let th = default_theory();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for i in 0..opts.samples {
        let (f, g) = random_composable_pair(&mut rng, 4, 3, 5);
        let stacked = SlicedDiagram::compose(&g, &f).expect("pair shares its interface");
        let lhs = eval(&stacked, &th).expect("width is capped");
        let rhs = eval(&g, &th)
            .and_then(|mg| Ok(mg.matmul(&eval(&f, &th)?).expect("shapes agree")))
            .expect("width is capped");
        out.count_case((lhs != rhs).then(|| {
            format!("case {}: eval(g.f) != eval(g)eval(f)\nf:\n{}\ng:\n{}", i, serialize(&f), serialize(&g))
        }));
    }
    out
}

fn monoidality(opts: &SuiteOptions) -> SuiteOutcome {
    let mut out = SuiteOutcome::new(Suite::Monoidality, opts.seed);
    let th = default_theory();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for i in 0..opts.samples {
        let f = random_diagram(&mut rng, 3, 3, 3);
        let g = random_diagram(&mut rng, 3, 3, 3);
        let lhs = eval(&SlicedDiagram::tensor(&f, &g), &th).expect("width is capped");
        let rhs = eval(&f, &th)
            .and_then(|mf| Ok(mf.kronecker(&eval(&g, &th)?).expect("same variable")))
            .expect("width is capped");
        out.count_case((lhs != rhs).then(|| {
            format!(
                "case {}: eval(f(x)g) != eval(f)(x)eval(g)\nf:\n{}\ng:\n{}",
                i,
                serialize(&f),
                serialize(&g)
            )
        }));
    }
    out
}

fn moves(opts: &SuiteOptions) -> SuiteOutcome {
    let mut out = SuiteOutcome::new(Suite::Moves, opts.seed);
    let th = default_theory();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for i in 0..opts.samples {
        let d = random_diagram(&mut rng, 4, 4, 5);
        let moved = random_equivalent(&d, 5, rng.gen());
        let same = eval(&d, &th).expect("width is capped")
            == eval(&moved, &th).expect("moves keep the width capped");
        out.count_case((!same).then(|| {
            format!(
                "case {}: value changed under moves\noriginal:\n{}\nmoved:\n{}",
                i,
                serialize(&d),
                serialize(&moved)
            )
        }));
    }
    out
}

fn oracle(opts: &SuiteOptions) -> SuiteOutcome {
    let mut out = SuiteOutcome::new(Suite::Oracle, opts.seed);
    let th = default_theory();
    for strands in [2usize, 3] {
        let letters: Vec<i64> =
            (1..strands as i64).flat_map(|k| [k, -k]).collect();
        let mut count = 0usize;
        let mut frontier: Vec<Vec<i64>> = vec![Vec::new()];
        for _len in 0..=opts.max_crossings {
            for word in &frontier {
                let closed = SlicedDiagram::braid(word, strands, true)
                    .expect("letters are in range")
                    .closure_trace()
                    .expect("braids close");
                let direct = eval_closed(&closed, &th).expect("closures stay narrow");
                let statesum = bracket_statesum(&closed, &th).expect("crossing count is small");
                count += 1;
                out.count_case((direct != statesum).then(|| {
                    format!("braid n={}: {:?} closes to mismatched values", strands, word)
                }));
            }
            frontier = frontier
                .iter()
                .flat_map(|w| {
                    letters.iter().map(move |&l| {
                        let mut next = w.clone();
                        next.push(l);
                        next
                    })
                })
                .collect();
        }
        out.lines.push(format!(
            "ok   {} braid closures on {} strands match the state sum",
            count, strands
        ));
    }
    out
}

fn tqft1(opts: &SuiteOptions) -> SuiteOutcome {
    let mut out = SuiteOutcome::new(Suite::Tqft1, opts.seed);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);

    // the one number the whole construction pins down
    let z = Matching1::circle().tqft_eval(2, "q");
    out.check(
        "Z(circle) = 2 at rank 2",
        z.as_scalar() == Some(&LaurentPoly::from_terms("q", [(0, 2)])),
    );
    for dim in [1usize, 3, 4] {
        let z = Matching1::circle().tqft_eval(dim, "q");
        out.check(
            format!("Z(circle) equals the rank at rank {}", dim),
            z.as_scalar() == Some(&LaurentPoly::from_terms("q", [(0, dim as i64)])),
        );
    }

    let plus = SignWord::parse("+").unwrap();
    let bend_up = Matching1::identity(&plus).disjoint_union(&Matching1::cup(Sign::Minus));
    let bend_down = Matching1::cap(Sign::Plus).disjoint_union(&Matching1::identity(&plus));
    let zig = bend_down.after(&bend_up).expect("interfaces agree");
    out.check("zigzag composes to the identity matching", zig == Matching1::identity(&plus));
    out.check(
        "zigzag evaluates to the identity matrix",
        (1..=3).all(|d| zig.tqft_eval(d, "q").is_identity()),
    );

    let rounds = (opts.samples / 5).max(10);
    for i in 0..rounds {
        let (m, k, n) = random_sizes(&mut rng);
        let f = random_matching(&mut rng, m, k);
        let g = random_matching(&mut rng, k, n);
        let composed = g.after(&f).expect("interface lengths agree");
        let ok = (2..=3).all(|d| {
            composed.tqft_eval(d, "q")
                == g.tqft_eval(d, "q").matmul(&f.tqft_eval(d, "q")).expect("shapes agree")
        });
        out.count_case((!ok).then(|| format!("functoriality case {}: {:?} after {:?}", i, g, f)));
    }
    for i in 0..rounds {
        let (m, k, _) = random_sizes(&mut rng);
        let f = random_matching(&mut rng, m, k);
        let (m2, k2, _) = random_sizes(&mut rng);
        let g = random_matching(&mut rng, m2, k2);
        let ok = (2..=3).all(|d| {
            f.disjoint_union(&g).tqft_eval(d, "q")
                == f.tqft_eval(d, "q").kronecker(&g.tqft_eval(d, "q")).expect("same variable")
        });
        out.count_case((!ok).then(|| format!("monoidality case {}: {:?} with {:?}", i, f, g)));
    }
    for i in 0..rounds {
        let len = rng.gen_range(0..=3);
        let w = random_word(&mut rng, len);
        let ok = (1..=3).all(|d| Matching1::identity(&w).tqft_eval(d, "q").is_identity());
        out.count_case((!ok).then(|| format!("identity case {}: word \"{}\"", i, w)));
    }
    out.lines.push(format!(
        "ok   {} random functoriality/monoidality/identity cases at ranks up to 3",
        3 * rounds
    ));
    out
}

fn random_sizes<R: Rng>(rng: &mut R) -> (usize, usize, usize) {
    // matchings need every boundary-size sum even, so all three share a parity
    let parity = rng.gen_range(0..2usize);
    let mut size = || 2 * rng.gen_range(0..=1usize) + parity;
    (size(), size(), size())
}

fn random_matching<R: Rng>(rng: &mut R, src: usize, tgt: usize) -> Matching1 {
    let mut points: Vec<usize> = (0..src + tgt).collect();
    points.shuffle(rng);
    let at = |i: usize| if i < src { Point::Bottom(i) } else { Point::Top(i - src) };
    let pairs: Vec<(Point, Point)> =
        points.chunks(2).map(|c| (at(c[0]), at(c[1]))).collect();
    Matching1::unoriented(src, tgt, &pairs, rng.gen_range(0..=2))
        .expect("paired-off points form a matching")
}

fn kz_flatness(opts: &SuiteOptions) -> SuiteOutcome {
    let mut out = SuiteOutcome::new(Suite::KzFlatness, opts.seed);
    for (n, expected) in [(2usize, 0usize), (3, 3), (4, 15)] {
        let config = KzConfig::default_config(n, 0.25).expect("n >= 2");
        let report = config.flatness_check();
        let pass = report.is_flat() && report.identities_checked == expected;
        out.check(
            format!(
                "{} commutator identities vanish exactly for {} points",
                report.identities_checked, n
            ),
            pass,
        );
        for f in report.failures {
            out.failures.push(format!("n={}: {}", n, f));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts(samples: usize, seed: u64) -> SuiteOptions {
        SuiteOptions { samples, seed, max_crossings: 3 }
    }

    #[test]
    fn every_suite_passes_on_a_small_budget() {
        for suite in Suite::ALL {
            let out = run(suite, &opts(10, 7));
            assert!(out.pass(), "{}", out.text());
            assert!(out.cases > 0);
        }
    }

    #[test]
    fn reports_are_deterministic_in_the_seed() {
        let a = run(Suite::Moves, &opts(8, 42)).text();
        let b = run(Suite::Moves, &opts(8, 42)).text();
        assert_eq!(a, b);
        let c = run(Suite::Moves, &opts(8, 43)).text();
        // different draws, identical shape: only the content may differ
        assert_eq!(a.lines().count(), c.lines().count());
    }

    #[test]
    fn json_reports_carry_the_schema_tag() {
        let v = run(Suite::Theory, &opts(1, 0)).to_json();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["suite"], "theory");
        assert_eq!(v["pass"], true);
    }

    #[test]
    fn the_oracle_case_count_is_the_full_sweep() {
        let out = run(Suite::Oracle, &SuiteOptions { max_crossings: 2, ..Default::default() });
        // words of length <= 2: 1 + 2 + 4 on two strands, 1 + 4 + 16 on three
        assert_eq!(out.cases, 7 + 21);
        assert!(out.pass());
    }
}
