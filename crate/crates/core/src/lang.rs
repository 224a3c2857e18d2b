//! Words, bounded fragments of languages, shuffle and Kleene closures, lazy
//! indexed families over ℕ, and the search for elasticity chains.

use crate::atom::Atom;
use crate::error::{Error, Result};
use crate::mask::MAX_UNIVERSE;
use crate::system::SetSystem;
use serde::de::Deserializer;
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::sync::Arc;

/// A finite sequence of alphabet tokens, ordered by length and then
/// lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<String>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// One symbol per character.
    pub fn from_chars(s: &str) -> Self {
        Word(s.chars().map(String::from).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word(self.0.iter().chain(&other.0).cloned().collect())
    }

    pub fn prefix(&self, n: usize) -> Word {
        Word(self.0[..n].to_vec())
    }

    pub fn to_atom(&self) -> Atom {
        Atom::word(self.0.iter().cloned())
    }

    fn single_chars(&self) -> bool {
        self.0.iter().all(|s| s.chars().count() == 1)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("ε")
        } else if self.single_chars() {
            f.write_str(&self.0.concat())
        } else {
            f.write_str(&self.0.join("."))
        }
    }
}

// A string when every symbol is one character, else an array of tokens.
impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.single_chars() {
            s.serialize_str(&self.0.concat())
        } else {
            self.0.serialize(s)
        }
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Chars(String),
            Tokens(Vec<String>),
        }
        match Repr::deserialize(d).map_err(|_| {
            serde::de::Error::custom("expected a word as a string or an array of tokens")
        })? {
            Repr::Chars(s) => Ok(Word::from_chars(&s)),
            Repr::Tokens(t) => Ok(Word(t)),
        }
    }
}

/// `sh(u, v)`: every interleaving of `u` and `v` that keeps the order inside
/// each.
pub fn shuffle_words(u: &Word, v: &Word) -> BTreeSet<Word> {
    fn go(u: &[String], v: &[String], acc: &mut Vec<String>, out: &mut BTreeSet<Word>) {
        if u.is_empty() || v.is_empty() {
            let mut w = acc.clone();
            w.extend(u.iter().chain(v).cloned());
            out.insert(Word(w));
            return;
        }
        acc.push(u[0].clone());
        go(&u[1..], v, acc, out);
        acc.pop();
        acc.push(v[0].clone());
        go(u, &v[1..], acc, out);
        acc.pop();
    }
    let mut out = BTreeSet::new();
    go(&u.0, &v.0, &mut Vec::new(), &mut out);
    out
}

/// The words of some language of length at most `max_len`.
///
/// `exact_up_to` records that `words` is all of `L ∩ Σ^{≤max_len}` for the
/// intended language `L`, not just part of it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "FragmentRepr", into = "FragmentRepr")]
pub struct LanguageFragment {
    alphabet: Vec<String>,
    max_len: usize,
    words: BTreeSet<Word>,
    exact_up_to: bool,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FragmentRepr {
    alphabet: Vec<String>,
    max_len: usize,
    words: Vec<Word>,
    #[serde(default)]
    exact_up_to: bool,
}

impl TryFrom<FragmentRepr> for LanguageFragment {
    type Error = Error;
    fn try_from(r: FragmentRepr) -> Result<Self> {
        LanguageFragment::new(r.alphabet, r.max_len, r.words, r.exact_up_to)
    }
}

impl From<LanguageFragment> for FragmentRepr {
    fn from(f: LanguageFragment) -> Self {
        FragmentRepr {
            alphabet: f.alphabet,
            max_len: f.max_len,
            words: f.words.into_iter().collect(),
            exact_up_to: f.exact_up_to,
        }
    }
}

/// Which closure [`closure_bounded`] computes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClosureKind {
    /// `L* = {ε} ∪ L ∪ LL ∪ ⋯`
    Star,
    /// `L⁺ = L ∪ LL ∪ ⋯`
    Plus,
    /// `L^⋄ = L ∪ (L⋄L) ∪ ⋯`
    ShuffleDiamond,
    /// `L^⊛ = L^⋄ ∪ {ε}`
    ShuffleClosure,
}

impl LanguageFragment {
    pub fn new(
        alphabet: impl IntoIterator<Item = impl Into<String>>,
        max_len: usize,
        words: impl IntoIterator<Item = Word>,
        exact_up_to: bool,
    ) -> Result<Self> {
        let mut alphabet: Vec<String> = alphabet.into_iter().map(Into::into).collect();
        alphabet.sort();
        alphabet.dedup();
        let mut set = BTreeSet::new();
        for w in words {
            if let Some(s) = w.0.iter().find(|s| alphabet.binary_search(s).is_err()) {
                return Err(Error::SymbolOutsideAlphabet(s.clone()));
            }
            if w.len() > max_len {
                return Err(Error::WordTooLong(w.to_string(), max_len));
            }
            set.insert(w);
        }
        Ok(LanguageFragment {
            alphabet,
            max_len,
            words: set,
            exact_up_to,
        })
    }

    /// Words given as strings, one symbol per character; the alphabet is
    /// the set of characters used plus `extra`.
    pub fn from_strs(words: &[&str], max_len: usize, extra: &[&str]) -> Result<Self> {
        let alphabet: BTreeSet<String> = words
            .iter()
            .flat_map(|w| w.chars().map(String::from))
            .chain(extra.iter().map(|s| s.to_string()))
            .collect();
        Self::new(alphabet, max_len, words.iter().map(|w| Word::from_chars(w)), true)
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn words(&self) -> &BTreeSet<Word> {
        &self.words
    }

    pub fn exact_up_to(&self) -> bool {
        self.exact_up_to
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.contains(w)
    }

    fn with_words(&self, words: BTreeSet<Word>, max_len: usize, exact_up_to: bool) -> Self {
        LanguageFragment {
            alphabet: self.alphabet.clone(),
            max_len,
            words: words.into_iter().filter(|w| w.len() <= max_len).collect(),
            exact_up_to,
        }
    }

    pub fn without_empty_word(&self) -> Self {
        let mut words = self.words.clone();
        words.remove(&Word::empty());
        self.with_words(words, self.max_len, self.exact_up_to)
    }

    pub fn with_empty_word(&self) -> Self {
        let mut words = self.words.clone();
        words.insert(Word::empty());
        self.with_words(words, self.max_len, self.exact_up_to)
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        let (bound, exact) = self.joint(other)?;
        Ok(self.with_words(self.words.union(&other.words).cloned().collect(), bound, exact))
    }

    fn joint(&self, other: &Self) -> Result<(usize, bool)> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        Ok((self.max_len.min(other.max_len), self.exact_up_to && other.exact_up_to))
    }

    /// All of `Σ^{≤n}` in word order.
    pub fn all_words(alphabet: &[String], n: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        let mut layer = vec![Word::empty()];
        for _ in 0..n {
            layer = layer
                .iter()
                .flat_map(|w| alphabet.iter().map(move |a| w.concat(&Word(vec![a.clone()]))))
                .collect();
            out.extend(layer.iter().cloned());
        }
        out
    }
}

fn pairwise(
    l: &LanguageFragment,
    m: &LanguageFragment,
    f: impl Fn(&Word, &Word, usize, &mut BTreeSet<Word>),
) -> Result<LanguageFragment> {
    let (bound, exact) = l.joint(m)?;
    let mut out = BTreeSet::new();
    for u in &l.words {
        for v in &m.words {
            if u.len() + v.len() <= bound {
                f(u, v, bound, &mut out);
            }
        }
    }
    Ok(l.with_words(out, bound, exact))
}

/// `L ⋄ M` up to the smaller bound.
pub fn shuffle_product(l: &LanguageFragment, m: &LanguageFragment) -> Result<LanguageFragment> {
    pairwise(l, m, |u, v, _, out| out.extend(shuffle_words(u, v)))
}

/// `L · M` up to the smaller bound.
pub fn concat(l: &LanguageFragment, m: &LanguageFragment) -> Result<LanguageFragment> {
    pairwise(l, m, |u, v, _, out| {
        out.insert(u.concat(v));
    })
}

/// `Lᵐ`, with `L⁰ = {ε}`.
pub fn power(l: &LanguageFragment, m: usize) -> LanguageFragment {
    let mut acc = l.with_words([Word::empty()].into(), l.max_len, l.exact_up_to);
    for _ in 0..m {
        acc = concat(&acc, l).expect("same alphabet");
    }
    acc
}

/// The closure of the words of `l` (taken as a finite language), cut at
/// `max_len`. The result is exact up to `max_len`.
pub fn closure_bounded(l: &LanguageFragment, kind: ClosureKind, max_len: usize) -> LanguageFragment {
    let base: BTreeSet<Word> = l.words.iter().filter(|w| w.len() <= max_len).cloned().collect();
    let step = |u: &Word, v: &Word, out: &mut BTreeSet<Word>| match kind {
        ClosureKind::Star | ClosureKind::Plus => {
            out.insert(u.concat(v));
        }
        ClosureKind::ShuffleDiamond | ClosureKind::ShuffleClosure => {
            out.extend(shuffle_words(u, v));
        }
    };
    let mut all = base.clone();
    let mut frontier = base.clone();
    while !frontier.is_empty() {
        let mut next = BTreeSet::new();
        for u in &frontier {
            for v in &base {
                if u.len() + v.len() <= max_len {
                    let mut out = BTreeSet::new();
                    step(u, v, &mut out);
                    next.extend(out.into_iter().filter(|w| !all.contains(w)));
                }
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    if matches!(kind, ClosureKind::Star | ClosureKind::ShuffleClosure) {
        all.insert(Word::empty());
    }
    LanguageFragment {
        alphabet: l.alphabet.clone(),
        max_len,
        words: all,
        exact_up_to: true,
    }
}

/// `½(L)`: the prefix of length `⌈n/2⌉` of each word of length `n`.
pub fn half(l: &LanguageFragment) -> LanguageFragment {
    let words = l.words.iter().map(|w| w.prefix(w.len().div_ceil(2))).collect();
    // a word of length 2h+1 beyond the bound would add a half of length h+1
    l.with_words(words, l.max_len.div_ceil(2), l.exact_up_to && l.max_len.is_multiple_of(2))
}

/// A set system over `Σ^{≤max_len}` (as word atoms) with one member per
/// fragment.
pub fn to_set_system(fragments: &[LanguageFragment]) -> Result<SetSystem> {
    let Some(first) = fragments.first() else {
        return Ok(SetSystem::empty());
    };
    for f in fragments {
        if f.alphabet != first.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        if f.max_len != first.max_len {
            return Err(Error::BoundMismatch);
        }
    }
    let universe_size: usize = (0..=first.max_len)
        .try_fold(0usize, |acc, k| {
            acc.checked_add(first.alphabet.len().checked_pow(k as u32)?)
        })
        .unwrap_or(usize::MAX);
    if universe_size > MAX_UNIVERSE {
        return Err(Error::UniverseTooLarge {
            size: universe_size,
            bound: MAX_UNIVERSE,
        });
    }
    let universe: Vec<Atom> = LanguageFragment::all_words(&first.alphabet, first.max_len)
        .iter()
        .map(Word::to_atom)
        .collect();
    SetSystem::new(
        universe,
        fragments
            .iter()
            .map(|f| f.words.iter().map(Word::to_atom).collect::<Vec<_>>()),
    )
}

/// Three-valued membership: lazy transforms may be unable to decide within
/// their horizon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Membership {
    In,
    Out,
    Unknown,
}

impl From<bool> for Membership {
    fn from(b: bool) -> Self {
        if b {
            Membership::In
        } else {
            Membership::Out
        }
    }
}

type MemberFn = dyn Fn(usize, usize) -> Membership + Send + Sync;
type UniverseFn = dyn Fn(usize) -> Atom + Send + Sync;

/// An indexed family `(Lᵢ)_{i∈ℕ}` of subsets of a countable universe,
/// presented by `member(i, n)` for the `n`-th universe element.
#[derive(Clone)]
pub struct LazyFamily {
    description: String,
    universe: Arc<UniverseFn>,
    member: Arc<MemberFn>,
}

impl fmt::Debug for LazyFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LazyFamily")
            .field("description", &self.description)
            .finish_non_exhaustive()
    }
}

impl LazyFamily {
    pub fn new(
        description: impl Into<String>,
        universe: impl Fn(usize) -> Atom + Send + Sync + 'static,
        member: impl Fn(usize, usize) -> Membership + Send + Sync + 'static,
    ) -> Self {
        LazyFamily {
            description: description.into(),
            universe: Arc::new(universe),
            member: Arc::new(member),
        }
    }

    /// A family over ℕ with a decidable membership predicate.
    pub fn over_naturals(
        description: impl Into<String>,
        member: impl Fn(usize, usize) -> bool + Send + Sync + 'static,
    ) -> Self {
        Self::new(description, Atom::num, move |i, n| member(i, n).into())
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    pub fn element(&self, n: usize) -> Atom {
        (self.universe)(n)
    }

    /// Is the `n`-th element in `Lᵢ`?
    pub fn member(&self, i: usize, n: usize) -> Membership {
        (self.member)(i, n)
    }
}

/// Default step of `arith_prog`.
pub const DEFAULT_STEP: usize = 2;

/// `singl` (`{i}`), `dcl` (`{0..i}`), `cosingl` (`ℕ∖{i}`) or
/// `arith_prog[:d]` (`{i, i+d, i+2d, …}`, `d` defaulting to 2).
pub fn canonical_family(name: &str) -> Result<LazyFamily> {
    let unknown = || Error::UnknownFamily(name.to_string());
    let (base, param) = match name.split_once(':') {
        Some((b, p)) => (b, Some(p)),
        None => (name, None),
    };
    if param.is_some() && base != "arith_prog" {
        return Err(unknown());
    }
    Ok(match base {
        "singl" => LazyFamily::over_naturals("singl", |i, n| n == i),
        "dcl" => LazyFamily::over_naturals("dcl", |i, n| n <= i),
        "cosingl" => LazyFamily::over_naturals("cosingl", |i, n| n != i),
        "arith_prog" => {
            let d = match param {
                Some(p) => p.parse::<usize>().ok().filter(|&d| d >= 1).ok_or_else(unknown)?,
                None => DEFAULT_STEP,
            };
            LazyFamily::over_naturals(format!("arith_prog:{d}"), move |i, n| n >= i && (n - i) % d == 0)
        }
        _ => return Err(unknown()),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Transform {
    /// `↓L = { n ; ∃m ≥ n. m ∈ L }`, decided by search up to a horizon.
    DownClosure,
    /// `ℕ ∖ L`.
    Complement,
}

/// Applies a transform to every member of the family. `DownClosure` needs
/// `horizon`; it answers `Unknown` when no witness `m ≤ horizon` exists.
pub fn family_transform(t: Transform, f: &LazyFamily, horizon: Option<usize>) -> Result<LazyFamily> {
    let inner = f.clone();
    let universe = f.universe.clone();
    Ok(match t {
        Transform::Complement => LazyFamily {
            description: format!("complement({})", f.description),
            universe,
            member: Arc::new(move |i, n| match inner.member(i, n) {
                Membership::In => Membership::Out,
                Membership::Out => Membership::In,
                Membership::Unknown => Membership::Unknown,
            }),
        },
        Transform::DownClosure => {
            let h = horizon.ok_or(Error::HorizonRequired)?;
            LazyFamily {
                description: format!("down_closure({}, horizon {h})", f.description),
                universe,
                member: Arc::new(move |i, n| {
                    if (n..=h).any(|m| inner.member(i, m) == Membership::In) {
                        Membership::In
                    } else {
                        Membership::Unknown
                    }
                }),
            }
        }
    })
}

/// `t₀..t_k` with family indices `i₁..i_k` such that
/// `{t₀..t_{j−1}} ⊆ L_{iⱼ} ∌ tⱼ` for every `j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElasticityChain {
    /// Universe indices of `t₀..t_k`.
    pub elements: Vec<usize>,
    /// Family indices `i₁..i_k`.
    pub families: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainBounds {
    /// Elements are drawn from `0..element_horizon`.
    pub element_horizon: usize,
    /// Family indices are drawn from `0..family_horizon`.
    pub family_horizon: usize,
}

/// Largest element horizon the chain search supports.
pub const CHAIN_ELEMENT_BOUND: usize = 128;

/// Depth-first search for a chain of length `k`; `None` means there is none
/// inside the bounds, which says nothing about the family beyond them.
/// Undecided memberships count against the chain.
pub fn elasticity_chain(f: &LazyFamily, k: usize, bounds: ChainBounds) -> Result<Option<ElasticityChain>> {
    if k == 0 {
        return Err(Error::InvalidArity(0));
    }
    if bounds.element_horizon > CHAIN_ELEMENT_BOUND {
        return Err(Error::UniverseTooLarge {
            size: bounds.element_horizon,
            bound: CHAIN_ELEMENT_BOUND,
        });
    }
    struct Ctx<'a> {
        f: &'a LazyFamily,
        b: ChainBounds,
        dead: HashSet<(u128, usize)>,
        elements: Vec<usize>,
        families: Vec<usize>,
    }
    fn go(c: &mut Ctx, set: u128, left: usize) -> bool {
        if left == 0 {
            return true;
        }
        if c.dead.contains(&(set, left)) {
            return false;
        }
        for i in 0..c.b.family_horizon {
            let covers = c.elements.iter().all(|&t| c.f.member(i, t) == Membership::In);
            if !covers {
                continue;
            }
            for t in 0..c.b.element_horizon {
                if set >> t & 1 == 1 || c.f.member(i, t) != Membership::Out {
                    continue;
                }
                c.elements.push(t);
                c.families.push(i);
                if go(c, set | 1 << t, left - 1) {
                    return true;
                }
                c.elements.pop();
                c.families.pop();
            }
        }
        c.dead.insert((set, left));
        false
    }
    let mut c = Ctx {
        f,
        b: bounds,
        dead: HashSet::new(),
        elements: Vec::new(),
        families: Vec::new(),
    };
    for t0 in 0..bounds.element_horizon {
        c.elements.push(t0);
        if go(&mut c, 1 << t0, k) {
            return Ok(Some(ElasticityChain {
                elements: c.elements,
                families: c.families,
            }));
        }
        c.elements.pop();
    }
    Ok(None)
}

/// Rechecks every condition of a chain directly against the family.
pub fn validate_chain(f: &LazyFamily, chain: &ElasticityChain) -> bool {
    let ElasticityChain { elements, families } = chain;
    if elements.len() != families.len() + 1 {
        return false;
    }
    families.iter().enumerate().all(|(idx, &i)| {
        let j = idx + 1;
        elements[..j].iter().all(|&t| f.member(i, t) == Membership::In)
            && f.member(i, elements[j]) == Membership::Out
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::from_chars(s)
    }

    fn frag(words: &[&str], max_len: usize) -> LanguageFragment {
        LanguageFragment::from_strs(words, max_len, &["a", "b"]).unwrap()
    }

    fn strs(f: &LanguageFragment) -> Vec<String> {
        f.words().iter().map(|w| w.to_string()).collect()
    }

    #[test]
    fn shuffles_of_words() {
        assert_eq!(shuffle_words(&Word::empty(), &w("ab")), [w("ab")].into());
        let sh: Vec<String> = shuffle_words(&w("ab"), &w("cd")).iter().map(|x| x.to_string()).collect();
        assert_eq!(sh, ["abcd", "acbd", "acdb", "cabd", "cadb", "cdab"]);
        assert_eq!(shuffle_words(&w("aa"), &w("a")).len(), 1);
    }

    #[test]
    fn products() {
        let a = frag(&["a"], 3);
        let b = frag(&["b"], 3);
        assert_eq!(strs(&shuffle_product(&a, &b).unwrap()), ["ab", "ba"]);
        assert_eq!(strs(&concat(&a, &b).unwrap()), ["ab"]);
        assert_eq!(strs(&power(&a, 3)), ["aaa"]);
        assert_eq!(strs(&power(&a, 0)), ["ε"]);
        let c = LanguageFragment::from_strs(&["c"], 3, &[]).unwrap();
        assert_eq!(concat(&a, &c), Err(Error::AlphabetMismatch));
    }

    #[test]
    fn mixed_bounds_take_the_min() {
        let a = frag(&["a"], 3);
        let mut b = frag(&["b"], 2);
        b.exact_up_to = false;
        let p = concat(&a, &b).unwrap();
        assert_eq!((p.max_len(), p.exact_up_to()), (2, false));
    }

    #[test]
    fn closures() {
        let a = LanguageFragment::from_strs(&["a"], 1, &[]).unwrap();
        assert_eq!(strs(&closure_bounded(&a, ClosureKind::Star, 3)), ["ε", "a", "aa", "aaa"]);
        let ab = LanguageFragment::from_strs(&["ab"], 2, &[]).unwrap();
        let sc = closure_bounded(&ab, ClosureKind::ShuffleClosure, 4);
        assert_eq!(strs(&sc), ["ε", "ab", "aabb", "abab"]);
        let l = frag(&["a", "ab"], 2);
        let star = closure_bounded(&l, ClosureKind::Star, 4);
        let mut plus = closure_bounded(&l, ClosureKind::Plus, 4).words().clone();
        plus.insert(Word::empty());
        assert_eq!(&plus, star.words());
    }

    #[test]
    fn halves() {
        assert_eq!(strs(&half(&frag(&["abab"], 4))), ["ab"]);
        assert_eq!(strs(&half(&frag(&["a"], 1))), ["a"]);
        assert!(half(&frag(&[], 3)).is_empty());
    }

    #[test]
    fn fragment_validation_and_json() {
        let err = LanguageFragment::new(["a"], 1, [w("aa")], true);
        assert!(matches!(err, Err(Error::WordTooLong(..))));
        let err = LanguageFragment::new(["a"], 2, [w("b")], true);
        assert_eq!(err, Err(Error::SymbolOutsideAlphabet("b".into())));
        let j = r#"{"alphabet":["a","b"],"max_len":4,"words":["ab","ba"],"exact_up_to":true}"#;
        let f: LanguageFragment = serde_json::from_str(j).unwrap();
        assert_eq!(serde_json::to_string(&f).unwrap(), j);
        let multi = LanguageFragment::new(["ab", "c"], 2, [Word(vec!["ab".into(), "c".into()])], true).unwrap();
        let j = serde_json::to_string(&multi).unwrap();
        assert!(j.contains(r#"[["ab","c"]]"#));
        assert_eq!(serde_json::from_str::<LanguageFragment>(&j).unwrap(), multi);
    }

    #[test]
    fn set_system_bridge() {
        let fs = [frag(&["a"], 2), frag(&["b"], 2)];
        let s = to_set_system(&fs).unwrap();
        assert_eq!(s.universe().len(), 7);
        assert_eq!(crate::dim::dim(&s), 1);
        assert!(to_set_system(&[]).unwrap().is_empty());
        assert_eq!(to_set_system(&[frag(&[], 2), frag(&[], 3)]), Err(Error::BoundMismatch));
        let ab: Vec<String> = vec!["a".into(), "b".into()];
        let words: Vec<Atom> = LanguageFragment::all_words(&ab, 2).iter().map(Word::to_atom).collect();
        assert_eq!(s.universe(), words.as_slice());
    }

    #[test]
    fn families() {
        let dcl = canonical_family("dcl").unwrap();
        assert_eq!(dcl.member(3, 2), Membership::In);
        assert_eq!(dcl.member(3, 4), Membership::Out);
        let co = canonical_family("cosingl").unwrap();
        assert_eq!(co.member(1, 1), Membership::Out);
        let ap = canonical_family("arith_prog:3").unwrap();
        assert_eq!((ap.member(1, 7), ap.member(1, 8)), (Membership::In, Membership::Out));
        assert!(matches!(canonical_family("primes"), Err(Error::UnknownFamily(_))));
        assert!(matches!(canonical_family("dcl:2"), Err(Error::UnknownFamily(_))));
    }

    #[test]
    fn transforms() {
        let singl = canonical_family("singl").unwrap();
        let dcl = canonical_family("dcl").unwrap();
        let down = family_transform(Transform::DownClosure, &singl, Some(20)).unwrap();
        for i in 0..=20 {
            for n in 0..=20 {
                let expect = if dcl.member(i, n) == Membership::In { Membership::In } else { Membership::Unknown };
                assert_eq!(down.member(i, n), expect);
            }
        }
        let comp = family_transform(Transform::Complement, &singl, None).unwrap();
        let co = canonical_family("cosingl").unwrap();
        let back = family_transform(Transform::Complement, &comp, None).unwrap();
        for i in 0..10 {
            for n in 0..10 {
                assert_eq!(comp.member(i, n), co.member(i, n));
                assert_eq!(back.member(i, n), singl.member(i, n));
            }
        }
        assert!(matches!(
            family_transform(Transform::DownClosure, &singl, None),
            Err(Error::HorizonRequired)
        ));
    }

    #[test]
    fn chains() {
        let b = ChainBounds {
            element_horizon: 16,
            family_horizon: 16,
        };
        let dcl = canonical_family("dcl").unwrap();
        let c = elasticity_chain(&dcl, 5, b).unwrap().unwrap();
        assert_eq!(c.elements, [0, 1, 2, 3, 4, 5]);
        assert_eq!(c.families, [0, 1, 2, 3, 4]);
        assert!(validate_chain(&dcl, &c));
        let co = canonical_family("cosingl").unwrap();
        let c = elasticity_chain(&co, 5, b).unwrap().unwrap();
        assert_eq!(c.elements, [0, 1, 2, 3, 4, 5]);
        assert_eq!(c.families, [1, 2, 3, 4, 5]);
        assert!(validate_chain(&co, &c));
        assert!(!validate_chain(&dcl, &c));
        let singl = canonical_family("singl").unwrap();
        assert_eq!(elasticity_chain(&singl, 2, b).unwrap(), None);
        assert!(elasticity_chain(&singl, 1, b).unwrap().is_some());
    }
}
