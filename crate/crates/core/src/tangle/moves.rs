//! Equivalence moves on sliced diagrams.
//!
//! The move set {R2, R3, ZIGZAG, SLIDE} preserves boundary words, writhe, and
//! the evaluation under any theory whose crossings are two-sided inverses and
//! satisfy the Yang-Baxter and zigzag identities. R1 kinks are deliberately
//! not in the set — the evaluation is an invariant of framed diagrams and a
//! kink scales it by the kink factor — but [`insert_kink`] is provided so the
//! framing behaviour itself can be exercised.

use alloc::borrow::ToOwned;
use alloc::string::String;
use alloc::vec::Vec;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::diagram::{layout, Generator, SlicedDiagram, TangleError};
use super::word::{Sign, SignWord};

/// Which way a zigzag S-bend points.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Bend {
    Left,
    Right,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Direction {
    Insert,
    Remove,
}

/// A move at a location. Insert locations address interface words (level k is
/// the word below slice k, with k = num_slices meaning the top); Remove
/// locations address the first affected slice.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Move {
    /// Cancel or create a pair of opposite crossings on strands
    /// `column, column + 1`.
    R2 { level: usize, column: usize, under_first: bool },
    /// Slide a strand across a crossing: rewrites between the two braid-like
    /// forms of three stacked crossings. Insert goes from crossings at columns
    /// (c, c+1, c) to (c+1, c, c+1); Remove is the reverse.
    R3 { level: usize, column: usize },
    /// Cancel or create an S-bend (cup then cap) on the strand at `column`.
    Zigzag { level: usize, column: usize, bend: Bend },
    /// Interchange: move the generator at `index` of slice `level` into the
    /// neighbouring slice (Insert = up, Remove = down).
    Slide { level: usize, index: usize },
}

fn na(reason: &str) -> TangleError {
    TangleError::MoveNotApplicable(reason.to_owned())
}

fn ids(word: &SignWord, range: core::ops::Range<usize>) -> Vec<Generator> {
    range.map(|i| Generator::Id(word.get(i).unwrap())).collect()
}

fn crossing(over: bool, s: Sign, t: Sign) -> Generator {
    if over {
        Generator::Over(s, t)
    } else {
        Generator::Under(s, t)
    }
}

/// The six rewrites of three stacked crossings that hold in the braid group:
/// sigma-form kinds bottom-up -> other-form kinds bottom-up. An involution.
fn r3_table(kinds: (bool, bool, bool)) -> Option<(bool, bool, bool)> {
    const O: bool = true;
    const U: bool = false;
    match kinds {
        (O, O, O) => Some((O, O, O)),
        (U, U, U) => Some((U, U, U)),
        (U, O, O) => Some((O, O, U)),
        (O, O, U) => Some((U, O, O)),
        (O, U, U) => Some((U, U, O)),
        (U, U, O) => Some((O, U, U)),
        _ => None,
    }
}

/// Applies a move; errors with `MoveNotApplicable` when the location does not
/// carry the expected pattern.
pub fn apply_move(
    d: &SlicedDiagram,
    mv: Move,
    dir: Direction,
) -> Result<SlicedDiagram, TangleError> {
    match (mv, dir) {
        (Move::R2 { level, column, under_first }, Direction::Insert) => {
            r2_insert(d, level, column, under_first)
        }
        (Move::R2 { level, column, .. }, Direction::Remove) => r2_remove(d, level, column),
        (Move::R3 { level, column }, dir) => r3_apply(d, level, column, dir),
        (Move::Zigzag { level, column, bend }, Direction::Insert) => {
            zigzag_insert(d, level, column, bend)
        }
        (Move::Zigzag { level, column, bend }, Direction::Remove) => {
            zigzag_remove(d, level, column, bend)
        }
        (Move::Slide { level, index }, Direction::Insert) => slide_up(d, level, index),
        (Move::Slide { level, index }, Direction::Remove) => slide_down(d, level, index),
    }
}

fn rebuild(
    d: &SlicedDiagram,
    edit: impl FnOnce(&mut Vec<Vec<Generator>>),
) -> Result<SlicedDiagram, TangleError> {
    let mut slices = d.slices().to_vec();
    edit(&mut slices);
    SlicedDiagram::new(d.source().clone(), slices)
}

fn word_at(d: &SlicedDiagram, level: usize) -> Result<SignWord, TangleError> {
    d.interface_words()
        .get(level)
        .cloned()
        .ok_or_else(|| na("level out of range"))
}

fn r2_insert(
    d: &SlicedDiagram,
    level: usize,
    column: usize,
    under_first: bool,
) -> Result<SlicedDiagram, TangleError> {
    let w = word_at(d, level)?;
    if column + 2 > w.len() {
        return Err(na("needs two adjacent strands"));
    }
    let (s, t) = (w.get(column).unwrap(), w.get(column + 1).unwrap());
    let mut a = ids(&w, 0..column);
    a.push(crossing(!under_first, s, t));
    a.extend(ids(&w, column + 2..w.len()));
    let mut b = ids(&w, 0..column);
    b.push(crossing(under_first, t, s));
    b.extend(ids(&w, column + 2..w.len()));
    rebuild(d, |slices| {
        slices.splice(level..level, [a, b]);
    })
}

/// Finds the generator whose input starts at `col`.
fn gen_at_input(in_start: &[usize], col: usize) -> Option<usize> {
    in_start.iter().position(|&c| c == col)
}

fn r2_remove(d: &SlicedDiagram, level: usize, column: usize) -> Result<SlicedDiagram, TangleError> {
    if level + 2 > d.num_slices() {
        return Err(na("needs two slices"));
    }
    let lower = &d.slices()[level];
    let upper = &d.slices()[level + 1];
    let lo = layout(lower);
    let up = layout(upper);
    let j1 = gen_at_input(&lo.in_start, column).ok_or_else(|| na("no generator here"))?;
    let g1 = lower[j1];
    let over1 = g1.crossing().ok_or_else(|| na("not a crossing"))?;
    let out_col = lo.out_start[j1];
    let j2 = gen_at_input(&up.in_start, out_col)
        .ok_or_else(|| na("crossings are not stacked"))?;
    let g2 = upper[j2];
    match g2.crossing() {
        Some(over2) if over2 != over1 => {}
        _ => return Err(na("stacked crossings must be opposite")),
    }
    let sig = g1.input_signs();
    let pair = [Generator::Id(sig[0]), Generator::Id(sig[1])];
    rebuild(d, |slices| {
        slices[level].splice(j1..j1 + 1, pair);
        slices[level + 1].splice(j2..j2 + 1, pair);
    })
}

struct R3Site {
    /// (generator index of the crossing-ish pair start) per slice
    idx: [usize; 3],
    kinds: (bool, bool, bool),
    /// pattern start column at the bottom of each slice
    cols: [usize; 3],
}

/// Locates the three-crossing pattern. `sigma_low` selects which form is
/// expected: crossings at columns (c, c+1, c) when true, (c+1, c, c+1) when
/// false.
fn locate_r3(
    d: &SlicedDiagram,
    level: usize,
    column: usize,
    sigma_low: bool,
) -> Result<R3Site, TangleError> {
    if level + 3 > d.num_slices() {
        return Err(na("needs three slices"));
    }
    let mut idx = [0usize; 3];
    let mut kinds = [false; 3];
    let mut cols = [0usize; 3];
    let mut col = column;
    for step in 0..3 {
        let slice = &d.slices()[level + step];
        let lay = layout(slice);
        // crossing low means the crossing sits at (col, col+1) and the lone
        // strand at col+2; alternating per step and pattern form.
        let cross_low = sigma_low == (step % 2 == 0);
        let j = gen_at_input(&lay.in_start, col).ok_or_else(|| na("no generator here"))?;
        let first = slice.get(j).copied().ok_or_else(|| na("pattern truncated"))?;
        let second = slice.get(j + 1).copied().ok_or_else(|| na("pattern truncated"))?;
        let (cross_gen, id_gen) = if cross_low { (first, second) } else { (second, first) };
        let over = cross_gen.crossing().ok_or_else(|| na("expected a crossing"))?;
        if !matches!(id_gen, Generator::Id(_)) {
            return Err(na("expected a lone strand beside the crossing"));
        }
        idx[step] = j;
        kinds[step] = over;
        cols[step] = col;
        // pattern start column at the next level = output start of the first
        // pattern generator
        col = lay.out_start[idx[step]];
    }
    Ok(R3Site { idx, kinds: (kinds[0], kinds[1], kinds[2]), cols })
}

fn r3_apply(
    d: &SlicedDiagram,
    level: usize,
    column: usize,
    dir: Direction,
) -> Result<SlicedDiagram, TangleError> {
    let sigma_low = dir == Direction::Insert;
    let site = locate_r3(d, level, column, sigma_low)?;
    let (k1, k2, k3) = r3_table(site.kinds).ok_or_else(|| na("no braid relation for these crossings"))?;
    let words = d.interface_words();
    let mut slices = d.slices().to_vec();
    // Rewrite slice by slice, recomputing signs from the word below each one.
    let mut word = words[level].clone();
    for (step, kind) in [k1, k2, k3].into_iter().enumerate() {
        let c = site.cols[step];
        let (a, b, cc) = (
            word.get(c).unwrap(),
            word.get(c + 1).unwrap(),
            word.get(c + 2).unwrap(),
        );
        // crossing position flips form: sigma_low pattern becomes the other
        let cross_low_new = !(sigma_low == (step % 2 == 0));
        let replacement: [Generator; 2] = if cross_low_new {
            [crossing(kind, a, b), Generator::Id(cc)]
        } else {
            [Generator::Id(a), crossing(kind, b, cc)]
        };
        let j = site.idx[step];
        slices[level + step].splice(j..j + 2, replacement);
        // advance the word across the rewritten slice
        let mut out = Vec::new();
        for g in &slices[level + step] {
            out.extend(g.output_signs());
        }
        word = SignWord::new(out);
    }
    SlicedDiagram::new(d.source().clone(), slices)
}

fn zigzag_insert(
    d: &SlicedDiagram,
    level: usize,
    column: usize,
    bend: Bend,
) -> Result<SlicedDiagram, TangleError> {
    let w = word_at(d, level)?;
    if column >= w.len() {
        return Err(na("no strand at this column"));
    }
    let s = w.get(column).unwrap();
    let (lower_pair, upper_pair): ([Generator; 2], [Generator; 2]) = match bend {
        Bend::Right => (
            [Generator::Id(s), Generator::Cup(s.flip())],
            [Generator::Cap(s), Generator::Id(s)],
        ),
        Bend::Left => (
            [Generator::Cup(s), Generator::Id(s)],
            [Generator::Id(s), Generator::Cap(s.flip())],
        ),
    };
    let mut a = ids(&w, 0..column);
    a.extend(lower_pair);
    a.extend(ids(&w, column + 1..w.len()));
    let mut b = ids(&w, 0..column);
    b.extend(upper_pair);
    b.extend(ids(&w, column + 1..w.len()));
    rebuild(d, |slices| {
        slices.splice(level..level, [a, b]);
    })
}

fn zigzag_remove(
    d: &SlicedDiagram,
    level: usize,
    column: usize,
    bend: Bend,
) -> Result<SlicedDiagram, TangleError> {
    if level + 2 > d.num_slices() {
        return Err(na("needs two slices"));
    }
    let (cup_out, cap_in) = match bend {
        Bend::Right => (column + 1, column),
        Bend::Left => (column, column + 1),
    };
    let lower = &d.slices()[level];
    let upper = &d.slices()[level + 1];
    let lo = layout(lower);
    let up = layout(upper);
    let jc = lower
        .iter()
        .enumerate()
        .position(|(j, g)| matches!(g, Generator::Cup(_)) && lo.out_start[j] == cup_out)
        .ok_or_else(|| na("no cup here"))?;
    let jk = upper
        .iter()
        .enumerate()
        .position(|(j, g)| matches!(g, Generator::Cap(_)) && up.in_start[j] == cap_in)
        .ok_or_else(|| na("no cap here"))?;
    rebuild(d, |slices| {
        slices[level].remove(jc);
        slices[level + 1].remove(jk);
    })
}

fn all_ids(slice: &[Generator], from: usize, count: usize) -> bool {
    slice.len() >= from + count
        && slice[from..from + count].iter().all(|g| matches!(g, Generator::Id(_)))
}

fn slide_up(d: &SlicedDiagram, level: usize, index: usize) -> Result<SlicedDiagram, TangleError> {
    if level + 2 > d.num_slices() {
        return Err(na("no slice above"));
    }
    let lower = &d.slices()[level];
    let upper = &d.slices()[level + 1];
    let g = *lower.get(index).ok_or_else(|| na("no generator here"))?;
    if matches!(g, Generator::Id(_)) {
        return Err(na("sliding an identity strand is a no-op"));
    }
    let lo = layout(lower);
    let up = layout(upper);
    let a = lo.out_start[index];
    let count = g.output_len();
    let j2 = if count == 0 {
        // a cap leaves no trace; it may land at any generator boundary of the
        // upper slice at column a
        match up.in_start.iter().position(|&c| c >= a) {
            Some(j) if up.in_start[j] == a => j,
            Some(_) => return Err(na("upper slice has no boundary here")),
            None => upper.len(),
        }
    } else {
        let j = gen_at_input(&up.in_start, a).ok_or_else(|| na("upper slice has no boundary here"))?;
        if !all_ids(upper, j, count) {
            return Err(na("strands above are not free"));
        }
        j
    };
    let below = g.input_signs().into_iter().map(Generator::Id).collect::<Vec<_>>();
    rebuild(d, |slices| {
        slices[level].splice(index..index + 1, below);
        slices[level + 1].splice(j2..j2 + count, [g]);
    })
}

fn slide_down(d: &SlicedDiagram, level: usize, index: usize) -> Result<SlicedDiagram, TangleError> {
    if level == 0 || level >= d.num_slices() {
        return Err(na("no slice below"));
    }
    let upper = &d.slices()[level];
    let lower = &d.slices()[level - 1];
    let g = *upper.get(index).ok_or_else(|| na("no generator here"))?;
    if matches!(g, Generator::Id(_)) {
        return Err(na("sliding an identity strand is a no-op"));
    }
    let up = layout(upper);
    let lo = layout(lower);
    let a = up.in_start[index];
    let count = g.input_len();
    let j2 = if count == 0 {
        match lo.out_start.iter().position(|&c| c >= a) {
            Some(j) if lo.out_start[j] == a => j,
            Some(_) => return Err(na("lower slice has no boundary here")),
            None => lower.len(),
        }
    } else {
        let j = lo
            .out_start
            .iter()
            .position(|&c| c == a)
            .ok_or_else(|| na("lower slice has no boundary here"))?;
        if !all_ids(lower, j, count) {
            return Err(na("strands below are not free"));
        }
        j
    };
    let above = g.output_signs().into_iter().map(Generator::Id).collect::<Vec<_>>();
    rebuild(d, |slices| {
        slices[level - 1].splice(j2..j2 + count, [g]);
        slices[level].splice(index..index + 1, above);
    })
}

/// Inserts an R1 kink on the strand at `column` of interface `level`.
/// A positive kink adds +1 to the writhe and scales the evaluation by the
/// theory's kink factor; a negative kink does the inverse.
pub fn insert_kink(
    d: &SlicedDiagram,
    level: usize,
    column: usize,
    positive: bool,
) -> Result<SlicedDiagram, TangleError> {
    let w = word_at(d, level)?;
    if column >= w.len() {
        return Err(na("no strand at this column"));
    }
    let s = w.get(column).unwrap();
    let mut a = ids(&w, 0..column);
    a.extend([Generator::Id(s), Generator::Cup(s)]);
    a.extend(ids(&w, column + 1..w.len()));
    let mut b = ids(&w, 0..column);
    b.extend([crossing(positive, s, s), Generator::Id(s.flip())]);
    b.extend(ids(&w, column + 1..w.len()));
    let mut c = ids(&w, 0..column);
    c.extend([Generator::Id(s), Generator::Cap(s)]);
    c.extend(ids(&w, column + 1..w.len()));
    rebuild(d, |slices| {
        slices.splice(level..level, [a, b, c]);
    })
}

/// Every applicable move, in a deterministic order. Inserts that would push an
/// interface word beyond `max_width` strands are omitted.
pub fn enumerate_moves(d: &SlicedDiagram, max_width: usize) -> Vec<(Move, Direction)> {
    let mut out: Vec<(Move, Direction)> = Vec::new();
    let words = d.interface_words();
    let n = d.num_slices();
    for (level, w) in words.iter().enumerate() {
        for column in 0..w.len().saturating_sub(1) {
            for under_first in [false, true] {
                out.push((Move::R2 { level, column, under_first }, Direction::Insert));
            }
        }
        if w.len() + 2 <= max_width {
            for column in 0..w.len() {
                for bend in [Bend::Left, Bend::Right] {
                    out.push((Move::Zigzag { level, column, bend }, Direction::Insert));
                }
            }
        }
    }
    for level in 0..n.saturating_sub(1) {
        let slice = &d.slices()[level];
        let lay = layout(slice);
        for (j, g) in slice.iter().enumerate() {
            if g.crossing().is_some()
                && r2_remove(d, level, lay.in_start[j]).is_ok()
            {
                out.push((
                    Move::R2 { level, column: lay.in_start[j], under_first: false },
                    Direction::Remove,
                ));
            }
            if matches!(g, Generator::Cup(_)) {
                let oc = lay.out_start[j];
                if oc >= 1 && zigzag_remove(d, level, oc - 1, Bend::Right).is_ok() {
                    out.push((Move::Zigzag { level, column: oc - 1, bend: Bend::Right }, Direction::Remove));
                }
                if zigzag_remove(d, level, oc, Bend::Left).is_ok() {
                    out.push((Move::Zigzag { level, column: oc, bend: Bend::Left }, Direction::Remove));
                }
            }
        }
    }
    for level in 0..n.saturating_sub(2) {
        let slice = &d.slices()[level];
        let lay = layout(slice);
        for (j, g) in slice.iter().enumerate() {
            if g.crossing().is_none() {
                continue;
            }
            let c = lay.in_start[j];
            if r3_apply(d, level, c, Direction::Insert).is_ok() {
                out.push((Move::R3 { level, column: c }, Direction::Insert));
            }
            if c >= 1 && r3_apply(d, level, c - 1, Direction::Remove).is_ok() {
                out.push((Move::R3 { level, column: c - 1 }, Direction::Remove));
            }
        }
    }
    for level in 0..n {
        for index in 0..d.slices()[level].len() {
            if slide_up(d, level, index).is_ok() {
                out.push((Move::Slide { level, index }, Direction::Insert));
            }
            if slide_down(d, level, index).is_ok() {
                out.push((Move::Slide { level, index }, Direction::Remove));
            }
        }
    }
    out
}

/// Applies `n_moves` moves drawn uniformly from the applicable set, seeded and
/// deterministic. Interface words are capped at width 8 (or the current
/// maximum if larger). A diagram admitting no moves is returned unchanged.
pub fn random_equivalent(d: &SlicedDiagram, n_moves: usize, seed: u64) -> SlicedDiagram {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cap = d.max_width().max(8);
    let mut cur = d.clone();
    for _ in 0..n_moves {
        let sites = enumerate_moves(&cur, cap);
        if sites.is_empty() {
            break;
        }
        let (mv, dir) = sites[rng.gen_range(0..sites.len())];
        cur = apply_move(&cur, mv, dir).expect("enumerated move applies");
    }
    cur
}

/// Detail string used by diagnostics when a move fails.
pub fn describe(mv: &Move, dir: &Direction) -> String {
    alloc::format!("{:?} {:?}", dir, mv)
}
