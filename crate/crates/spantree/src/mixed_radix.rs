//! Resumable 1-Gray code generator for mixed-radix strings, excluding the
//! all-zero string, startable from any valid string.
//!
//! Position `i` holds digits `0..=maxvals[i]`; `maxvals[i]` is the maximum
//! digit value, so the base of the position is `maxvals[i] + 1`. The listing
//! is a reflected Gray order: consecutive strings differ in one position, or
//! in exactly two positions when the skipped all-zero string sits between
//! them (this reads as a 0 and a 1 trading places and only happens when
//! every position is binary). Reflection directions are derived from the
//! start string, so a listing may begin at any string and still visits
//! everything exactly once; over all-binary spaces the last string also
//! wraps legally onto the first.

use crate::error::{Error, Result};

/// The positions changed by one step of the generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepDelta {
    /// First emission: the start string itself, nothing changed.
    First,
    /// A single position changed value.
    One(usize),
    /// The all-zero string was skipped: `zeroed` went to 0 and `raised`
    /// became nonzero in the same step.
    Swap { zeroed: usize, raised: usize },
}

impl StepDelta {
    /// Changed positions as a list, matching the order they changed.
    pub fn positions(&self) -> Vec<usize> {
        match *self {
            StepDelta::First => vec![],
            StepDelta::One(p) => vec![p],
            StepDelta::Swap { zeroed, raised } => vec![zeroed, raised],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum State {
    Fresh,
    Inner,
    Unwind(usize),
    Done,
}

/// Resumable generator state for the reflectable Gray code.
///
/// The recursion of the reflected construction is flattened into an explicit
/// per-level loop counter; `next()` walks the machine until the next string
/// is reached. Digit directions flip as levels exhaust, and the nesting order
/// swaps one position with base > 2 (when any exists) into the innermost slot
/// so that the all-zero string can be dropped without breaking the 1-Gray
/// property.
#[derive(Debug, Clone)]
pub struct MixedRadixGen {
    maxvals: Vec<u32>,
    digits: Vec<u32>,
    dirs: Vec<i8>,
    order: Vec<usize>,
    counters: Vec<u32>,
    pending: Vec<usize>,
    pending_old: Vec<u32>,
    digit_sum: u64,
    state: State,
    work: u64,
}

impl MixedRadixGen {
    /// Creates a generator over `maxvals` starting at `start`.
    ///
    /// Errors when lengths differ or are zero, a digit exceeds its maximum,
    /// or `start` is the all-zero string (which the listing excludes).
    pub fn new(maxvals: Vec<u32>, start: Vec<u32>) -> Result<Self> {
        if maxvals.is_empty() || maxvals.len() != start.len() {
            return Err(Error::Domain(format!(
                "maxvals ({}) and start ({}) must be equal nonzero lengths",
                maxvals.len(),
                start.len()
            )));
        }
        for (i, (&a, &k)) in start.iter().zip(&maxvals).enumerate() {
            if a > k {
                return Err(Error::Domain(format!(
                    "digit {a} at position {i} exceeds maximum {k}"
                )));
            }
        }
        let digit_sum: u64 = start.iter().map(|&a| a as u64).sum();
        if digit_sum == 0 {
            return Err(Error::Domain("start string must not be all zero".into()));
        }

        let n = maxvals.len();
        let dirs: Vec<i8> = start.iter().map(|&a| if a == 1 { -1 } else { 1 }).collect();
        let mut order: Vec<usize> = (0..n).collect();
        // Swap the highest position with base > 2 into the innermost slot.
        for i in (0..n).rev() {
            if maxvals[i] > 1 {
                order[n - 1] = i;
                order[i] = n - 1;
                break;
            }
        }

        Ok(MixedRadixGen {
            counters: vec![0; n],
            pending: Vec::with_capacity(2),
            pending_old: Vec::with_capacity(2),
            maxvals,
            digits: start,
            dirs,
            order,
            digit_sum,
            state: State::Fresh,
            work: 0,
        })
    }

    /// Current digit string.
    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    pub fn maxvals(&self) -> &[u32] {
        &self.maxvals
    }

    pub fn is_exhausted(&self) -> bool {
        self.state == State::Done
    }

    /// Instrumented count of primitive operations performed so far.
    pub fn work(&self) -> u64 {
        self.work
    }

    /// Advances to the next string of the listing.
    ///
    /// The first call emits the start string with [`StepDelta::First`]; after
    /// `product(maxvals[i] + 1) - 1` emissions the generator is exhausted and
    /// every further call returns `None`.
    pub fn advance(&mut self) -> Option<StepDelta> {
        let n = self.maxvals.len();
        loop {
            self.work += 1;
            match self.state {
                State::Done => return None,
                State::Fresh => {
                    // Descend with all counters at zero; the start string is
                    // never all-zero, so it is always emitted.
                    self.state = State::Inner;
                    return Some(StepDelta::First);
                }
                State::Inner => {
                    let pos = self.order[n - 1];
                    if self.counters[n - 1] < self.maxvals[pos] {
                        self.counters[n - 1] += 1;
                        self.update(pos);
                        if self.digit_sum != 0 {
                            return Some(self.take_delta());
                        }
                    } else if n == 1 {
                        self.finish();
                    } else {
                        self.state = State::Unwind(n - 2);
                    }
                }
                State::Unwind(level) => {
                    self.flip(self.order[level + 1]);
                    let pos = self.order[level];
                    if self.counters[level] < self.maxvals[pos] {
                        self.counters[level] += 1;
                        self.update(pos);
                        for c in &mut self.counters[level + 1..] {
                            *c = 0;
                        }
                        self.state = State::Inner;
                        if self.digit_sum != 0 {
                            return Some(self.take_delta());
                        }
                    } else if level == 0 {
                        self.finish();
                    } else {
                        self.state = State::Unwind(level - 1);
                    }
                }
            }
        }
    }

    fn update(&mut self, pos: usize) {
        let base = self.maxvals[pos] as i64 + 1;
        let old = self.digits[pos] as i64;
        let new = (old + self.dirs[pos] as i64 + base) % base;
        self.digit_sum = (self.digit_sum as i64 + new - old) as u64;
        self.digits[pos] = new as u32;
        self.pending.push(pos);
        self.pending_old.push(old as u32);
        self.work += 1;
    }

    /// Marks exhaustion, undoing any update applied since the last emission
    /// so that `digits()` keeps reporting the final emitted string. At most
    /// one such update exists: the step onto the skipped all-zero string.
    fn finish(&mut self) {
        self.state = State::Done;
        for (&pos, &old) in self.pending.iter().zip(&self.pending_old).rev() {
            self.digit_sum = (self.digit_sum as i64 + old as i64 - self.digits[pos] as i64) as u64;
            self.digits[pos] = old;
        }
        self.pending.clear();
        self.pending_old.clear();
    }

    fn flip(&mut self, pos: usize) {
        self.dirs[pos] = if self.digits[pos] == self.maxvals[pos] {
            1
        } else {
            -self.dirs[pos]
        };
    }

    fn take_delta(&mut self) -> StepDelta {
        let delta = match self.pending.as_slice() {
            [p] => StepDelta::One(*p),
            // The same position stepping twice through the skipped all-zero
            // string collapses to a single symbol change.
            [p, q] if p == q => StepDelta::One(*p),
            [p, q] => StepDelta::Swap {
                zeroed: *p,
                raised: *q,
            },
            other => unreachable!("delta accumulated {} positions", other.len()),
        };
        self.pending.clear();
        self.pending_old.clear();
        delta
    }
}

impl Iterator for MixedRadixGen {
    type Item = (Vec<u32>, Vec<usize>);

    /// Clones the digits per step; [`advance`](MixedRadixGen::advance) plus
    /// [`digits`](MixedRadixGen::digits) is the allocation-free form.
    fn next(&mut self) -> Option<Self::Item> {
        self.advance()
            .map(|delta| (self.digits.clone(), delta.positions()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn listing(maxvals: &[u32], start: &[u32]) -> Vec<String> {
        let gen = MixedRadixGen::new(maxvals.to_vec(), start.to_vec()).unwrap();
        let mut out = Vec::new();
        for (digits, _) in gen {
            out.push(digits.iter().map(|d| d.to_string()).collect::<String>());
        }
        out
    }

    fn listing_with_deltas(maxvals: &[u32], start: &[u32]) -> Vec<(String, Vec<usize>)> {
        let gen = MixedRadixGen::new(maxvals.to_vec(), start.to_vec()).unwrap();
        let mut out = Vec::new();
        for (digits, delta) in gen {
            let s = digits.iter().map(|d| d.to_string()).collect::<String>();
            out.push((s, delta));
        }
        out
    }

    #[test]
    fn binary_length_three_from_100() {
        assert_eq!(
            listing(&[1, 1, 1], &[1, 0, 0]),
            ["100", "101", "111", "110", "010", "011", "001"]
        );
    }

    #[test]
    fn binary_length_two_starts() {
        assert_eq!(listing(&[1, 1], &[1, 0]), ["10", "11", "01"]);
        // From 11 the reflected order steps the innermost position first;
        // the transition back past the skipped 00 is the two-position swap.
        let steps = listing_with_deltas(&[1, 1], &[1, 1]);
        assert_eq!(
            steps,
            [
                ("11".to_string(), vec![]),
                ("10".to_string(), vec![1]),
                ("01".to_string(), vec![0, 1]),
            ]
        );
    }

    #[test]
    fn ternary_singletons() {
        assert_eq!(listing(&[2], &[2]), ["2", "1"]);
        assert_eq!(listing(&[2], &[1]), ["1", "2"]);
    }

    #[test]
    fn single_binary_position() {
        assert_eq!(listing(&[1], &[1]), ["1"]);
    }

    #[test]
    fn rejects_bad_starts() {
        assert!(MixedRadixGen::new(vec![1, 1], vec![0, 0]).is_err());
        assert!(MixedRadixGen::new(vec![1], vec![2]).is_err());
        assert!(MixedRadixGen::new(vec![], vec![]).is_err());
        assert!(MixedRadixGen::new(vec![1, 1], vec![1]).is_err());
    }

    #[test]
    fn exhausted_is_idempotent() {
        let mut gen = MixedRadixGen::new(vec![1], vec![1]).unwrap();
        assert!(gen.next().is_some());
        assert!(gen.next().is_none());
        assert!(gen.next().is_none());
        assert!(gen.is_exhausted());
    }

    #[test]
    fn zero_max_positions_never_change() {
        let steps = listing_with_deltas(&[1, 0, 1, 0], &[1, 0, 0, 0]);
        let strings: Vec<&str> = steps.iter().map(|(s, _)| s.as_str()).collect();
        assert_eq!(strings, ["1000", "1010", "0010"]);
        for (_, delta) in &steps {
            assert!(!delta.contains(&1) && !delta.contains(&3));
        }
    }

    fn check_full_cover(maxvals: &[u32], start: &[u32]) {
        use std::collections::HashSet;
        let total: u64 = maxvals.iter().map(|&k| k as u64 + 1).product();
        let gen = MixedRadixGen::new(maxvals.to_vec(), start.to_vec()).unwrap();
        let mut seen = HashSet::new();
        let mut prev: Option<Vec<u32>> = None;
        let mut count = 0u64;
        for (digits, delta) in gen {
            count += 1;
            assert!(digits.iter().any(|&d| d != 0), "all-zero emitted");
            assert!(seen.insert(digits.clone()), "duplicate {digits:?}");
            if let Some(p) = &prev {
                check_gray_step(p, &digits, &delta);
            }
            prev = Some(digits);
        }
        assert_eq!(count, total - 1, "listing covers everything but all-zero");
    }

    fn check_gray_step(a: &[u32], b: &[u32], delta: &[usize]) {
        let changed: Vec<usize> = (0..a.len()).filter(|&i| a[i] != b[i]).collect();
        match changed.len() {
            1 => assert_eq!(delta, &changed[..]),
            2 => {
                // legal only as the all-zero skip: both strings have a single
                // nonzero digit of equal value
                let nz_a: Vec<_> = a.iter().filter(|&&d| d != 0).collect();
                let nz_b: Vec<_> = b.iter().filter(|&&d| d != 0).collect();
                assert_eq!(nz_a.len(), 1);
                assert_eq!(nz_b.len(), 1);
                assert_eq!(nz_a[0], nz_b[0]);
                let mut sorted = delta.to_vec();
                sorted.sort_unstable();
                assert_eq!(sorted, changed);
            }
            k => panic!("{k} positions changed between {a:?} and {b:?}"),
        }
    }

    #[test]
    fn covers_small_spaces_from_any_start() {
        for maxvals in [
            vec![1u32, 1, 1],
            vec![2, 2],
            vec![2, 1, 1],
            vec![1, 0, 2],
            vec![3, 1],
            vec![1, 1, 1, 1],
            vec![0, 2, 0],
        ] {
            // every valid start string
            let total: u64 = maxvals.iter().map(|&k| k as u64 + 1).product();
            for idx in 1..total {
                let mut rem = idx;
                let start: Vec<u32> = maxvals
                    .iter()
                    .map(|&k| {
                        let d = (rem % (k as u64 + 1)) as u32;
                        rem /= k as u64 + 1;
                        d
                    })
                    .collect();
                check_full_cover(&maxvals, &start);
            }
        }
    }

    #[test]
    fn binary_listings_are_cyclic() {
        // over binary spaces the last string wraps legally onto the start
        for start in [[1u32, 0, 0], [0, 1, 0], [1, 1, 1], [0, 1, 1]] {
            let gen = MixedRadixGen::new(vec![1, 1, 1], start.to_vec()).unwrap();
            let mut last = None;
            for (digits, _) in gen {
                last = Some(digits);
            }
            let last = last.unwrap();
            let changed: Vec<usize> = (0..3).filter(|&i| last[i] != start[i]).collect();
            match changed.len() {
                1 => {}
                2 => {
                    assert_eq!(last.iter().filter(|&&d| d != 0).count(), 1);
                    assert_eq!(start.iter().filter(|&d| *d != 0).count(), 1);
                }
                k => panic!("wrap changed {k} positions: {last:?} vs {start:?}"),
            }
        }
    }

    #[test]
    fn digit_sum_tracks_actual_sum() {
        let mut gen = MixedRadixGen::new(vec![2, 2, 2], vec![0, 1, 2]).unwrap();
        while gen.advance().is_some() {
            let actual: u64 = gen.digits().iter().map(|&d| d as u64).sum();
            assert_eq!(gen.digit_sum, actual);
        }
    }
}
