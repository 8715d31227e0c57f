//! Eventually periodic words in normalized form.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A word `u v v v ...` stored with a primitive period `v` and the shortest
/// possible preperiod `u`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EventuallyPeriodicWord<T> {
    pre: Vec<T>,
    per: Vec<T>,
}

impl<T: Clone + Eq> EventuallyPeriodicWord<T> {
    pub fn new(pre: Vec<T>, per: Vec<T>) -> Result<Self> {
        if per.is_empty() {
            return Err(Error::InvalidInput("the period of a word must be nonempty".into()));
        }
        Ok(Self::normalized(pre, per))
    }

    /// The constant word `x x x ...`.
    pub fn constant(x: T) -> Self {
        EventuallyPeriodicWord { pre: Vec::new(), per: vec![x] }
    }

    /// The purely periodic word `v v v ...`.
    pub fn periodic(per: Vec<T>) -> Result<Self> {
        Self::new(Vec::new(), per)
    }

    fn normalized(mut pre: Vec<T>, mut per: Vec<T>) -> Self {
        let t = per.len();
        if let Some(p) = (1..t).find(|&p| t % p == 0 && (p..t).all(|i| per[i] == per[i - p])) {
            per.truncate(p);
        }
        while pre.last().is_some_and(|x| Some(x) == per.last()) {
            pre.pop();
            per.rotate_right(1);
        }
        EventuallyPeriodicWord { pre, per }
    }

    pub fn preperiod(&self) -> &[T] {
        &self.pre
    }

    pub fn period(&self) -> &[T] {
        &self.per
    }

    pub fn is_purely_periodic(&self) -> bool {
        self.pre.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.pre.is_empty() && self.per.len() == 1
    }

    /// The digit at 0-based position `i`.
    pub fn digit(&self, i: usize) -> &T {
        if i < self.pre.len() {
            &self.pre[i]
        } else {
            &self.per[(i - self.pre.len()) % self.per.len()]
        }
    }

    pub fn digits(&self) -> impl Iterator<Item = &T> + '_ {
        self.pre.iter().chain(self.per.iter().cycle())
    }

    pub fn prefix(&self, n: usize) -> Vec<T> {
        self.digits().take(n).cloned().collect()
    }

    /// The word with its first `n` digits removed.
    pub fn shift(&self, n: usize) -> Self {
        if n <= self.pre.len() {
            return EventuallyPeriodicWord { pre: self.pre[n..].to_vec(), per: self.per.clone() };
        }
        let mut per = self.per.clone();
        per.rotate_left((n - self.pre.len()) % self.per.len());
        EventuallyPeriodicWord { pre: Vec::new(), per }
    }

    /// The word `x` followed by `self`.
    pub fn prepend(&self, x: &[T]) -> Self {
        let mut pre = x.to_vec();
        pre.extend_from_slice(&self.pre);
        Self::normalized(pre, self.per.clone())
    }

    /// Digitwise image under `f`.
    pub fn map<U: Clone + Eq>(&self, mut f: impl FnMut(&T) -> U) -> EventuallyPeriodicWord<U> {
        EventuallyPeriodicWord::normalized(
            self.pre.iter().map(&mut f).collect(),
            self.per.iter().map(&mut f).collect(),
        )
    }

    /// All distinct tails `shift(n)`, `n >= 0`, in order of first appearance.
    pub fn tails(&self) -> impl Iterator<Item = Self> + '_ {
        (0..self.pre.len() + self.per.len()).map(move |n| self.shift(n))
    }

    /// Number of leading positions after which two words are known to agree forever.
    fn window(&self, other: &Self) -> usize {
        self.pre.len().max(other.pre.len()) + self.per.len().lcm(&other.per.len())
    }
}

impl<T: Clone + Ord> EventuallyPeriodicWord<T> {
    /// Lexicographic comparison.
    pub fn compare(&self, other: &Self) -> Ordering {
        self.digits()
            .zip(other.digits())
            .take(self.window(other))
            .map(|(a, b)| a.cmp(b))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    }
}

impl<T: Clone + Ord> PartialOrd for EventuallyPeriodicWord<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: Clone + Ord> Ord for EventuallyPeriodicWord<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare(other)
    }
}

impl<T: fmt::Display> fmt::Display for EventuallyPeriodicWord<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.pre.iter().chain(&self.per).any(|d| d.to_string().len() > 1);
        let sep = if wide { "," } else { "" };
        let join = |xs: &[T]| xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep);
        if !self.pre.is_empty() {
            write!(f, "{}{}", join(&self.pre), if wide { "," } else { "" })?;
        }
        write!(f, "({})^inf", join(&self.per))
    }
}

/// A binary word over `{0, 1}`, eventually periodic.
pub type BinaryEpw = EventuallyPeriodicWord<u8>;

/// A finite binary word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BinaryWord(pub Vec<u8>);

impl BinaryWord {
    pub fn parse(text: &str) -> Result<Self> {
        text.chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(Error::InvalidInput(format!("not a binary word: {text:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(BinaryWord)
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &BinaryWord) -> BinaryWord {
        BinaryWord([self.0.as_slice(), other.0.as_slice()].concat())
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|b| write!(f, "{b}"))
    }
}

/// Parses `pre` and `per` bit strings into a normalized binary word.
pub fn binary(pre: &str, per: &str) -> Result<BinaryEpw> {
    BinaryEpw::new(BinaryWord::parse(pre)?.0, BinaryWord::parse(per)?.0)
}
