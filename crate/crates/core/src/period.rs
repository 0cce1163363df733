//! String periodicity primitives.
//!
//! A positive integer `p` is a period of `s` iff `s[i] = s[i+p]` for every
//! valid `i`; `p = |s|` is always a period. The shortest period comes from
//! the border (failure-function) array in linear time; a quadratic scan is
//! kept alongside as the test oracle.

use crate::error::Error;
use crate::instance::{Instance, Sym};
use crate::marker::{Interval, Marker};

/// An interval together with its shortest period length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PeriodInfo {
    pub interval: Interval,
    pub shortest_period_len: usize,
}

/// Border array: `border[i]` = length of the longest proper border of `s[..=i]`.
pub fn border_array(s: &[Sym]) -> Vec<usize> {
    let mut border = vec![0usize; s.len()];
    for i in 1..s.len() {
        let mut b = border[i - 1];
        loop {
            if s[i] == s[b] {
                border[i] = b + 1;
                break;
            }
            if b == 0 {
                border[i] = 0;
                break;
            }
            b = border[b - 1];
        }
    }
    border
}

/// Shortest period length of a non-empty word.
pub fn shortest_period_len(s: &[Sym]) -> usize {
    assert!(!s.is_empty());
    s.len() - border_array(s).last().copied().unwrap_or(0)
}

/// Direct scan: is `p` a period of `s`?
pub fn has_period(s: &[Sym], p: usize) -> bool {
    p >= 1 && (p..s.len()).all(|i| s[i] == s[i - p])
}

impl Instance {
    /// Shortest period of an interval's content.
    pub fn shortest_period(&self, iv: Interval) -> PeriodInfo {
        PeriodInfo {
            interval: iv,
            shortest_period_len: shortest_period_len(self.slice(iv)),
        }
    }

    /// Does the interval's content have period `p`?
    pub fn interval_has_period(&self, iv: Interval, p: usize) -> bool {
        has_period(self.slice(iv), p)
    }

    /// Period transfer across an overlap: given that `s` has period `pi_s`,
    /// `t` has period `pi_t`, and the suffix of `s` of length `overlap_len`
    /// equals the prefix of `t`, returns whether the overlap is long enough
    /// (at least `pi_s + pi_t`) to conclude that each string also has the
    /// other's period.
    pub fn periodicity_transfer(
        &self,
        s: Interval,
        pi_s: usize,
        t: Interval,
        pi_t: usize,
        overlap_len: usize,
    ) -> Result<bool, Error> {
        let (sv, tv) = (self.slice(s), self.slice(t));
        if !has_period(sv, pi_s) || !has_period(tv, pi_t) {
            return Err(Error::Precondition("claimed period does not hold"));
        }
        if overlap_len == 0 || overlap_len > sv.len() || overlap_len > tv.len() {
            return Err(Error::Precondition("overlap length out of range"));
        }
        if sv[sv.len() - overlap_len..] != tv[..overlap_len] {
            return Err(Error::Precondition("suffix of s does not equal prefix of t"));
        }
        Ok(overlap_len >= pi_s + pi_t)
    }

    /// `left_break`: the rightmost marker `m` of the full string such that
    /// `[m, s.last]` does not have `s`'s shortest period. `None` when the
    /// whole left context is periodic.
    pub fn left_break(&self, s: Interval) -> Option<Marker> {
        let p = self.shortest_period(s).shortest_period_len as i64;
        let z = self.seq(s.string);
        let hi = s.last - p;
        let mut j = hi.min(self.n() as i64 - p);
        while j >= 1 {
            if z[(j - 1) as usize] != z[(j + p - 1) as usize] {
                return Some(Marker::new(s.string, j));
            }
            j -= 1;
        }
        None
    }

    /// `right_break`: the leftmost marker `m` such that `[s.first, m]` does
    /// not have `s`'s shortest period. `None` when the whole right context
    /// is periodic.
    pub fn right_break(&self, s: Interval) -> Option<Marker> {
        let p = self.shortest_period(s).shortest_period_len as i64;
        let z = self.seq(s.string);
        let mut j = (s.first + p).max(1 + p);
        while j <= self.n() as i64 {
            if z[(j - 1) as usize] != z[(j - p - 1) as usize] {
                return Some(Marker::new(s.string, j));
            }
            j += 1;
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::marker::StrId;
    use proptest::prelude::*;

    fn inst(x: &str) -> Instance {
        Instance::from_chars(x, x, 1).unwrap()
    }

    /// Quadratic oracle for the shortest period.
    fn shortest_period_scan(s: &[Sym]) -> usize {
        (1..=s.len()).find(|&p| has_period(s, p)).unwrap()
    }

    #[test]
    fn shortest_period_examples() {
        let i = inst("ababab");
        assert_eq!(i.shortest_period(i.full(StrId::X)).shortest_period_len, 2);
        let i = inst("aaaa");
        assert_eq!(i.shortest_period(i.full(StrId::X)).shortest_period_len, 1);
        let i = inst("abcab");
        assert_eq!(i.shortest_period(i.full(StrId::X)).shortest_period_len, 3);
    }

    #[test]
    fn full_length_is_always_a_period() {
        let i = inst("abcd");
        assert!(i.interval_has_period(i.full(StrId::X), 4));
        assert_eq!(i.shortest_period(i.full(StrId::X)).shortest_period_len, 4);
    }

    #[test]
    fn border_method_matches_scan_exhaustively() {
        // All strings of length <= 12 over two symbols.
        for len in 1..=12usize {
            for bits in 0u32..(1 << len) {
                let s: Vec<Sym> = (0..len).map(|i| (bits >> i) & 1).collect();
                assert_eq!(shortest_period_len(&s), shortest_period_scan(&s));
            }
        }
    }

    #[test]
    fn shortest_period_divides_short_periods() {
        // Fine–Wilf consequence: the shortest period divides every period p
        // with p <= len - shortest. Checked exhaustively, length <= 12, binary.
        for len in 1..=12usize {
            for bits in 0u32..(1 << len) {
                let s: Vec<Sym> = (0..len).map(|i| (bits >> i) & 1).collect();
                let sp = shortest_period_len(&s);
                for p in 1..=len {
                    if has_period(&s, p) && p <= len - sp {
                        assert_eq!(p % sp, 0, "s={s:?} sp={sp} p={p}");
                    }
                }
            }
        }
    }

    #[test]
    fn periodicity_transfer_examples() {
        // Two copies of "ababab" with an overlap of 4 >= 2 + 2.
        let i = Instance::from_chars("ababababab", "ababababab", 1).unwrap();
        let s = Interval::new(StrId::X, 1, 6);
        let t = Interval::new(StrId::X, 5, 10);
        assert_eq!(i.periodicity_transfer(s, 2, t, 2, 4), Ok(true));
        assert_eq!(i.periodicity_transfer(s, 2, t, 2, 3), Ok(false));
    }

    #[test]
    fn periodicity_transfer_rejects_bad_preconditions() {
        let i = Instance::from_chars("ababab", "bababa", 1).unwrap();
        let s = i.full(StrId::X);
        let t = i.full(StrId::Y);
        // suffix "ab..." of x never equals prefix "ba..." of y at length 2
        assert!(matches!(i.periodicity_transfer(s, 2, t, 2, 2), Err(Error::Precondition(_))));
        // claimed period that does not hold
        assert!(matches!(i.periodicity_transfer(s, 3, t, 2, 2), Err(Error::Precondition(_))));
    }

    #[test]
    fn break_markers_examples() {
        let i = inst("cababababd");
        let s = Interval::new(StrId::X, 2, 9);
        assert_eq!(i.left_break(s).map(|m| m.pos), Some(1));
        assert_eq!(i.right_break(s).map(|m| m.pos), Some(10));

        let i = inst("abababab");
        let s = i.full(StrId::X);
        assert_eq!(i.left_break(s), None);
        assert_eq!(i.right_break(s), None);
    }

    /// Naive oracle: test every candidate marker directly.
    fn left_break_scan(i: &Instance, s: Interval) -> Option<i64> {
        let p = i.shortest_period(s).shortest_period_len;
        (1..=s.last)
            .rev()
            .find(|&m| m + (p as i64) <= i.n() as i64 && !i.interval_has_period(Interval::new(s.string, m, s.last), p))
    }

    fn right_break_scan(i: &Instance, s: Interval) -> Option<i64> {
        let p = i.shortest_period(s).shortest_period_len;
        (s.first..=i.n() as i64)
            .find(|&m| m - (p as i64) >= 1 && !i.interval_has_period(Interval::new(s.string, s.first, m), p))
    }

    proptest! {
        #[test]
        fn break_markers_match_naive_scan(
            seed in any::<u64>(),
            n in 4usize..24,
        ) {
            // Periodic middle with random context on both sides.
            let mut rng = seed;
            let mut next = || {
                rng = rng.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                (rng >> 33) as usize
            };
            let sigma = 2 + next() % 2;
            let chars: Vec<char> = "abc".chars().collect();
            let word: String = (0..n).map(|_| chars[next() % sigma]).collect();
            let i = Instance::from_chars(&word, &word, 1).unwrap();
            let a = 1 + (next() % n) as i64;
            let b = a + (next() as i64 % (n as i64 - a + 1));
            let s = Interval::new(StrId::X, a, b);
            prop_assert_eq!(i.left_break(s).map(|m| m.pos), left_break_scan(&i, s));
            prop_assert_eq!(i.right_break(s).map(|m| m.pos), right_break_scan(&i, s));
        }

        #[test]
        fn border_matches_scan_random(word in proptest::collection::vec(0u32..4, 1..40)) {
            prop_assert_eq!(shortest_period_len(&word), shortest_period_scan(&word));
        }
    }
}
