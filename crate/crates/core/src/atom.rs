//! Structurally recursive element values.
//!
//! Every universe in the crate is a sorted, duplicate-free list of [`Atom`]s.
//! Atoms are compared by variant rank first (leaf < pair < tagged < word <
//! finset) and then by contents, so any collection of atoms has one canonical
//! order and one canonical serialization.
//!
//! JSON encoding: a leaf is a bare string (numbers are accepted on input and
//! read as their decimal token), `{"pair":[a,b]}`, `{"tag":[a,n]}`,
//! `{"word":["s1","s2"]}` and `{"finset":[a,...]}` with sorted contents.

use serde::de::{self, Deserializer};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Atom {
    Leaf(String),
    Pair(Box<Atom>, Box<Atom>),
    Tagged(Box<Atom>, u32),
    Word(Vec<String>),
    /// Invariant: strictly increasing contents.
    FinSet(Vec<Atom>),
}

impl Atom {
    pub fn leaf(token: impl Into<String>) -> Self {
        Atom::Leaf(token.into())
    }

    /// A leaf holding the decimal token of `n`.
    pub fn num(n: usize) -> Self {
        Atom::Leaf(n.to_string())
    }

    pub fn pair(left: Atom, right: Atom) -> Self {
        Atom::Pair(Box::new(left), Box::new(right))
    }

    pub fn tagged(value: Atom, tag: u32) -> Self {
        Atom::Tagged(Box::new(value), tag)
    }

    pub fn word<I, S>(symbols: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Atom::Word(symbols.into_iter().map(Into::into).collect())
    }

    /// Sorts and deduplicates its input.
    pub fn finset(elements: impl IntoIterator<Item = Atom>) -> Self {
        let mut v: Vec<Atom> = elements.into_iter().collect();
        v.sort();
        v.dedup();
        Atom::FinSet(v)
    }

    /// Numbers `0..n` as leaves, in canonical order.
    pub fn range(n: usize) -> Vec<Atom> {
        (0..n).map(Atom::num).collect()
    }

    fn rank(&self) -> u8 {
        match self {
            Atom::Leaf(_) => 0,
            Atom::Pair(..) => 1,
            Atom::Tagged(..) => 2,
            Atom::Word(_) => 3,
            Atom::FinSet(_) => 4,
        }
    }

    pub fn as_leaf(&self) -> Option<&str> {
        match self {
            Atom::Leaf(s) => Some(s),
            _ => None,
        }
    }

    /// The decimal value of a numeric leaf.
    pub fn as_num(&self) -> Option<usize> {
        self.as_leaf().and_then(|s| s.parse().ok())
    }

    pub fn finset_elements(&self) -> Option<&[Atom]> {
        match self {
            Atom::FinSet(v) => Some(v),
            _ => None,
        }
    }
}

fn is_digits(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
}

// Digit tokens sort numerically (by length, then text) ahead of other tokens.
fn cmp_tokens(a: &str, b: &str) -> Ordering {
    match (is_digits(a), is_digits(b)) {
        (true, true) => a.len().cmp(&b.len()).then_with(|| a.cmp(b)),
        (true, false) => Ordering::Less,
        (false, true) => Ordering::Greater,
        (false, false) => a.cmp(b),
    }
}

impl Ord for Atom {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Atom::Leaf(a), Atom::Leaf(b)) => cmp_tokens(a, b),
            (Atom::Pair(a1, a2), Atom::Pair(b1, b2)) => a1.cmp(b1).then_with(|| a2.cmp(b2)),
            (Atom::Tagged(a, i), Atom::Tagged(b, j)) => a.cmp(b).then_with(|| i.cmp(j)),
            (Atom::Word(a), Atom::Word(b)) => a
                .len()
                .cmp(&b.len())
                .then_with(|| {
                    a.iter()
                        .zip(b)
                        .map(|(x, y)| cmp_tokens(x, y))
                        .find(|o| o.is_ne())
                        .unwrap_or(Ordering::Equal)
                }),
            (Atom::FinSet(a), Atom::FinSet(b)) => a.len().cmp(&b.len()).then_with(|| a.cmp(b)),
            _ => self.rank().cmp(&other.rank()),
        }
    }
}

impl PartialOrd for Atom {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Leaf(s) => write!(f, "{s}"),
            Atom::Pair(a, b) => write!(f, "({a},{b})"),
            Atom::Tagged(a, i) => write!(f, "<{a},{i}>"),
            Atom::Word(w) if w.is_empty() => write!(f, "ε"),
            Atom::Word(w) => write!(f, "{}", w.concat()),
            Atom::FinSet(v) => {
                write!(f, "{{")?;
                for (i, a) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{a}")?;
                }
                write!(f, "}}")
            }
        }
    }
}

impl Serialize for Atom {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Atom::Leaf(t) => s.serialize_str(t),
            Atom::Pair(a, b) => {
                let mut m = s.serialize_map(Some(1))?;
                m.serialize_entry("pair", &(a, b))?;
                m.end()
            }
            Atom::Tagged(a, i) => {
                let mut m = s.serialize_map(Some(1))?;
                m.serialize_entry("tag", &(a, i))?;
                m.end()
            }
            Atom::Word(w) => {
                let mut m = s.serialize_map(Some(1))?;
                m.serialize_entry("word", w)?;
                m.end()
            }
            Atom::FinSet(v) => {
                let mut m = s.serialize_map(Some(1))?;
                m.serialize_entry("finset", v)?;
                m.end()
            }
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
enum Compound {
    #[serde(rename = "pair")]
    Pair(Atom, Atom),
    #[serde(rename = "tag")]
    Tag(Atom, u32),
    #[serde(rename = "word")]
    Word(Vec<String>),
    #[serde(rename = "finset")]
    FinSet(Vec<Atom>),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Repr {
    Leaf(String),
    Num(u64),
    Compound(Compound),
}

impl<'de> Deserialize<'de> for Atom {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = Repr::deserialize(d).map_err(|_| {
            de::Error::custom(
                "expected an atom: string, number, {\"pair\":[a,b]}, {\"tag\":[a,n]}, \
                 {\"word\":[..]} or {\"finset\":[..]}",
            )
        })?;
        Ok(match repr {
            Repr::Leaf(s) => Atom::Leaf(s),
            Repr::Num(n) => Atom::Leaf(n.to_string()),
            Repr::Compound(Compound::Pair(a, b)) => Atom::pair(a, b),
            Repr::Compound(Compound::Tag(a, i)) => Atom::tagged(a, i),
            Repr::Compound(Compound::Word(w)) => Atom::Word(w),
            Repr::Compound(Compound::FinSet(v)) => Atom::finset(v),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn variant_rank_orders_first() {
        let mut v = vec![
            Atom::finset([Atom::num(0)]),
            Atom::word(["a"]),
            Atom::tagged(Atom::num(0), 1),
            Atom::pair(Atom::num(0), Atom::num(1)),
            Atom::num(7),
        ];
        v.sort();
        assert_eq!(v[0], Atom::num(7));
        assert!(matches!(v[1], Atom::Pair(..)));
        assert!(matches!(v[4], Atom::FinSet(..)));
    }

    #[test]
    fn numeric_leaves_sort_numerically() {
        let mut v = vec![Atom::num(10), Atom::num(2), Atom::leaf("a"), Atom::num(0)];
        v.sort();
        assert_eq!(v, vec![Atom::num(0), Atom::num(2), Atom::num(10), Atom::leaf("a")]);
    }

    #[test]
    fn finset_is_canonical() {
        let a = Atom::finset([Atom::num(2), Atom::num(0), Atom::num(2)]);
        assert_eq!(a, Atom::FinSet(vec![Atom::num(0), Atom::num(2)]));
    }

    #[test]
    fn json_encoding() {
        let a = Atom::pair(Atom::num(0), Atom::tagged(Atom::word(["a", "b"]), 2));
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"{"pair":["0",{"tag":[{"word":["a","b"]},2]}]}"#);
        let back: Atom = serde_json::from_str(&s).unwrap();
        assert_eq!(back, a);
        let n: Atom = serde_json::from_str("3").unwrap();
        assert_eq!(n, Atom::num(3));
        let f: Atom = serde_json::from_str(r#"{"finset":["1","0"]}"#).unwrap();
        assert_eq!(serde_json::to_string(&f).unwrap(), r#"{"finset":["0","1"]}"#);
        assert!(serde_json::from_str::<Atom>(r#"{"bogus":1}"#).is_err());
    }
}
