use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

/// Inclusive integer range written `a..b` or a single value `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntRange {
    pub start: i64,
    pub end: i64,
}

impl IntRange {
    pub fn new(start: i64, end: i64) -> Self {
        IntRange { start, end }
    }

    pub fn iter(&self) -> RangeInclusive<i64> {
        self.start..=self.end
    }

    /// Intersection with `lo..=hi`, or `None` when empty.
    pub fn clamp(self, lo: i64, hi: i64) -> Option<IntRange> {
        let r = IntRange::new(self.start.max(lo), self.end.min(hi));
        (r.start <= r.end).then_some(r)
    }
}

impl FromStr for IntRange {
    type Err = String;

    fn from_str(text: &str) -> Result<Self, String> {
        let parse = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("bad bound {t:?}: {e}"));
        let range = match text.split_once("..") {
            Some((a, b)) => {
                let b = b.strip_prefix('=').unwrap_or(b);
                IntRange::new(parse(a)?, parse(b)?)
            }
            None => {
                let v = parse(text)?;
                IntRange::new(v, v)
            }
        };
        if range.start > range.end {
            return Err(format!("empty range {text}"));
        }
        Ok(range)
    }
}

impl fmt::Display for IntRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.start == self.end {
            write!(f, "{}", self.start)
        } else {
            write!(f, "{}..{}", self.start, self.end)
        }
    }
}
