//! Problem instances: two equal-length strings over an interned alphabet
//! plus the partition size bound `k`.
//!
//! Input symbols (characters or whitespace-separated tokens) are interned to
//! dense integer ids at parse time; all core code works on ids, so content
//! equality is integer comparison and large alphabets cost nothing extra.

use crate::error::Error;
use crate::marker::{Interval, Marker, StrId};
use std::collections::HashMap;

/// Interned alphabet symbol.
pub type Sym = u32;

/// Maps surface symbols to dense ids 0..|Σ|-1 and back.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    ids: HashMap<String, Sym>,
}

impl Alphabet {
    pub fn new() -> Self {
        Alphabet::default()
    }

    pub fn intern(&mut self, name: &str) -> Sym {
        if let Some(&id) = self.ids.get(name) {
            return id;
        }
        let id = self.names.len() as Sym;
        self.names.push(name.to_string());
        self.ids.insert(name.to_string(), id);
        id
    }

    pub fn name(&self, id: Sym) -> &str {
        &self.names[id as usize]
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }
}

/// An MCSP instance: strings `x` and `y` of equal length and the bound `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    x: Vec<Sym>,
    y: Vec<Sym>,
    k: usize,
    alphabet: Alphabet,
}

impl Instance {
    pub fn new(x: Vec<Sym>, y: Vec<Sym>, k: usize, alphabet: Alphabet) -> Result<Self, Error> {
        if x.is_empty() {
            return Err(Error::Precondition("strings must be non-empty"));
        }
        if x.len() != y.len() {
            return Err(Error::Precondition("strings must have equal length"));
        }
        if k == 0 {
            return Err(Error::Precondition("k must be positive"));
        }
        Ok(Instance { x, y, k, alphabet })
    }

    /// Parse from two lines of single-character symbols.
    pub fn from_chars(x: &str, y: &str, k: usize) -> Result<Self, Error> {
        let mut alphabet = Alphabet::new();
        let mut intern_line = |line: &str| -> Result<Vec<Sym>, Error> {
            line.chars()
                .map(|c| {
                    if c.is_whitespace() {
                        Err(Error::Parse(format!("unexpected whitespace in string: {line:?}")))
                    } else {
                        Ok(alphabet.intern(&c.to_string()))
                    }
                })
                .collect()
        };
        let xs = intern_line(x)?;
        let ys = intern_line(y)?;
        Instance::new(xs, ys, k, alphabet)
    }

    /// Parse from two lines of whitespace-separated multi-character tokens.
    pub fn from_tokens(x: &str, y: &str, k: usize) -> Result<Self, Error> {
        let mut alphabet = Alphabet::new();
        let xs: Vec<Sym> = x.split_whitespace().map(|t| alphabet.intern(t)).collect();
        let ys: Vec<Sym> = y.split_whitespace().map(|t| alphabet.intern(t)).collect();
        Instance::new(xs, ys, k, alphabet)
    }

    /// Parse a two-line instance file body.
    pub fn from_text(text: &str, k: usize, tokens: bool) -> Result<Self, Error> {
        let mut lines = text.lines();
        let lx = lines.next().ok_or_else(|| Error::Parse("missing first line".into()))?;
        let ly = lines.next().ok_or_else(|| Error::Parse("missing second line".into()))?;
        if lines.any(|l| !l.trim().is_empty()) {
            return Err(Error::Parse("trailing non-empty lines".into()));
        }
        if tokens {
            Instance::from_tokens(lx, ly, k)
        } else {
            Instance::from_chars(lx.trim_end(), ly.trim_end(), k)
        }
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn with_k(&self, k: usize) -> Instance {
        let mut inst = self.clone();
        inst.k = k.max(1);
        inst
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn seq(&self, s: StrId) -> &[Sym] {
        match s {
            StrId::X => &self.x,
            StrId::Y => &self.y,
        }
    }

    /// Symbol at a marker. Panics on sentinel positions.
    pub fn sym(&self, m: Marker) -> Sym {
        assert!(m.pos >= 1 && m.pos <= self.n() as i64, "sentinel marker has no symbol");
        self.seq(m.string)[(m.pos - 1) as usize]
    }

    /// Symbol slice of an in-range interval.
    pub fn slice(&self, iv: Interval) -> &[Sym] {
        assert!(iv.first >= 1 && iv.last <= self.n() as i64);
        &self.seq(iv.string)[(iv.first - 1) as usize..iv.last as usize]
    }

    /// Whole string `s` as an interval.
    pub fn full(&self, s: StrId) -> Interval {
        Interval::new(s, 1, self.n() as i64)
    }

    pub fn marker(&self, s: StrId, pos: i64) -> Marker {
        Marker::new(s, pos)
    }

    /// Checked offset: the marker `e'` with `signed_distance(e, e') = d`,
    /// restricted to real positions 1..=n.
    pub fn offset(&self, e: Marker, d: i64) -> Result<Marker, Error> {
        self.offset_in(e, d, 1, self.n() as i64)
    }

    /// Checked offset allowing the sentinel positions 0 and n+1.
    pub fn offset_sentinel(&self, e: Marker, d: i64) -> Result<Marker, Error> {
        self.offset_in(e, d, 0, self.n() as i64 + 1)
    }

    fn offset_in(&self, e: Marker, d: i64, lo: i64, hi: i64) -> Result<Marker, Error> {
        let pos = e.pos + d;
        if pos < lo || pos > hi {
            return Err(Error::OutOfRange { pos, lo, hi });
        }
        Ok(Marker::new(e.string, pos))
    }

    /// Content equivalence of two intervals (the ≡ relation): equal length
    /// and symbol-wise equal content. Distinct from interval identity.
    pub fn interval_equiv(&self, s: Interval, t: Interval) -> bool {
        s.len() == t.len() && self.slice(s) == self.slice(t)
    }

    /// True iff the two strings are permutations of each other. Without this
    /// no common string partition exists.
    pub fn is_anagram(&self) -> bool {
        let mut counts: HashMap<Sym, i64> = HashMap::new();
        for &c in &self.x {
            *counts.entry(c).or_default() += 1;
        }
        for &c in &self.y {
            *counts.entry(c).or_default() -= 1;
        }
        counts.values().all(|&v| v == 0)
    }

    /// Render an interval's content as a surface string (debugging, CLI output).
    pub fn render(&self, iv: Interval) -> String {
        let names: Vec<&str> = self.slice(iv).iter().map(|&c| self.alphabet.name(c)).collect();
        if names.iter().all(|n| n.chars().count() == 1) {
            names.concat()
        } else {
            names.join(" ")
        }
    }
}
