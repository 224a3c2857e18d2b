//! Finitely branching traces `R ⊆ fld(𝒞) × [fld(𝒟)]^{<ω}` and the
//! monotone maps `op_R` they present.
//!
//! `apply(R, g) = { x ; ∃(x,v) ∈ R. v ⊆ g }`: a trace turns subsets of the
//! target field into subsets of the source field.

use crate::atom::Atom;
use crate::error::{Error, Result};
use crate::mask::{self, Mask};
use crate::order::{qo_of, Simulation};
use crate::system::{sorted_universe, SetSystem};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TraceRepr", into = "TraceRepr")]
pub struct Trace {
    source_field: Vec<Atom>,
    target_field: Vec<Atom>,
    /// Sorted and deduplicated `(x index, v mask)`.
    pairs: Vec<(usize, Mask)>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TraceRepr {
    source_field: Vec<Atom>,
    target_field: Vec<Atom>,
    pairs: Vec<PairRepr>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PairRepr {
    x: Atom,
    v: Vec<Atom>,
}

impl TryFrom<TraceRepr> for Trace {
    type Error = Error;
    fn try_from(r: TraceRepr) -> Result<Self> {
        Trace::new(
            r.source_field,
            r.target_field,
            r.pairs.into_iter().map(|p| (p.x, p.v)),
        )
    }
}

impl From<Trace> for TraceRepr {
    fn from(t: Trace) -> Self {
        TraceRepr {
            pairs: t
                .pairs()
                .into_iter()
                .map(|(x, v)| PairRepr { x, v })
                .collect(),
            source_field: t.source_field,
            target_field: t.target_field,
        }
    }
}

fn position(field: &[Atom], a: &Atom) -> Result<usize> {
    field
        .binary_search(a)
        .map_err(|_| Error::ElementOutsideField(a.clone()))
}

fn field_mask(field: &[Atom], atoms: &[Atom]) -> Result<Mask> {
    atoms
        .iter()
        .try_fold(0, |acc, a| Ok(acc | mask::bit(position(field, a)?)))
}

impl Trace {
    pub fn new<V>(
        source_field: Vec<Atom>,
        target_field: Vec<Atom>,
        pairs: impl IntoIterator<Item = (Atom, V)>,
    ) -> Result<Self>
    where
        V: IntoIterator<Item = Atom>,
    {
        let source_field = sorted_universe(source_field)?;
        let target_field = sorted_universe(target_field)?;
        let pairs = pairs
            .into_iter()
            .map(|(x, v)| {
                let v: Vec<Atom> = v.into_iter().collect();
                Ok((position(&source_field, &x)?, field_mask(&target_field, &v)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_indices(source_field, target_field, pairs))
    }

    /// Fields must already be sorted and duplicate free.
    pub(crate) fn from_indices(
        source_field: Vec<Atom>,
        target_field: Vec<Atom>,
        mut pairs: Vec<(usize, Mask)>,
    ) -> Self {
        pairs.sort_unstable();
        pairs.dedup();
        Trace {
            source_field,
            target_field,
            pairs,
        }
    }

    /// `{(x,{x})}` on `field`.
    pub fn identity(field: Vec<Atom>) -> Result<Self> {
        let field = sorted_universe(field)?;
        let pairs = (0..field.len()).map(|i| (i, mask::bit(i))).collect();
        Ok(Self::from_indices(field.clone(), field, pairs))
    }

    /// The trace with no pairs; `apply` is constantly `∅`.
    pub fn empty(source_field: Vec<Atom>, target_field: Vec<Atom>) -> Result<Self> {
        Self::new(source_field, target_field, Vec::<(Atom, Vec<Atom>)>::new())
    }

    /// `{(x,{y}) ; Rel(x,y)}`.
    pub fn singleton_lift(
        source_field: Vec<Atom>,
        target_field: Vec<Atom>,
        rel: impl IntoIterator<Item = (Atom, Atom)>,
    ) -> Result<Self> {
        Self::new(source_field, target_field, rel.into_iter().map(|(x, y)| (x, [y])))
    }

    pub fn source_field(&self) -> &[Atom] {
        &self.source_field
    }

    pub fn target_field(&self) -> &[Atom] {
        &self.target_field
    }

    pub fn index_pairs(&self) -> &[(usize, Mask)] {
        &self.pairs
    }

    pub fn pairs(&self) -> Vec<(Atom, Vec<Atom>)> {
        self.pairs
            .iter()
            .map(|&(x, v)| {
                let v = mask::ones(v).map(|i| self.target_field[i].clone()).collect();
                (self.source_field[x].clone(), v)
            })
            .collect()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn apply_mask(&self, g: Mask) -> Mask {
        self.pairs
            .iter()
            .filter(|&&(_, v)| mask::is_subset(v, g))
            .fold(0, |acc, &(x, _)| acc | mask::bit(x))
    }

    pub fn apply(&self, g: &[Atom]) -> Result<Vec<Atom>> {
        let out = self.apply_mask(field_mask(&self.target_field, g)?);
        Ok(mask::ones(out).map(|i| self.source_field[i].clone()).collect())
    }

    /// `{ apply(R, M) ; M ∈ 𝓜 }` over the source field.
    pub fn direct_image(&self, m: &SetSystem) -> Result<SetSystem> {
        let pos: Vec<Option<usize>> = m
            .universe()
            .iter()
            .map(|a| self.target_field.binary_search(a).ok())
            .collect();
        let mut out = Vec::with_capacity(m.len());
        for &member in m.masks() {
            let mut g = 0;
            for i in mask::ones(member) {
                match pos[i] {
                    Some(j) => g |= mask::bit(j),
                    None => {
                        return Err(Error::FieldMismatch(format!(
                            "{} is in the set system but not in the target field",
                            m.universe()[i]
                        )))
                    }
                }
            }
            out.push(self.apply_mask(g));
        }
        SetSystem::from_masks(self.source_field.clone(), out)
    }

    /// `{(x, ⋃ wᵢ)}` over every choice of `(yᵢ, wᵢ) ∈ S` for the `yᵢ ∈ v`
    /// of each `(x, v) ∈ R`, in canonical form.
    pub fn compose(&self, s: &Trace) -> Result<Trace> {
        if self.target_field != s.source_field {
            return Err(Error::FieldMismatch(
                "target field of the first trace differs from the source field of the second"
                    .into(),
            ));
        }
        let by_y = s.canonicalize().grouped();
        let mut pairs = Vec::new();
        for &(x, v) in &self.canonicalize().pairs {
            let mut acc: Vec<Mask> = vec![0];
            for y in mask::ones(v) {
                let opts = by_y.get(&y).map(Vec::as_slice).unwrap_or(&[]);
                acc = acc
                    .iter()
                    .flat_map(|&a| opts.iter().map(move |&w| a | w))
                    .collect();
                acc.sort_unstable();
                acc.dedup();
                if acc.is_empty() {
                    break;
                }
            }
            pairs.extend(acc.into_iter().map(|w| (x, w)));
        }
        Ok(Trace::from_indices(self.source_field.clone(), s.target_field.clone(), pairs).canonicalize())
    }

    fn grouped(&self) -> BTreeMap<usize, Vec<Mask>> {
        let mut by: BTreeMap<usize, Vec<Mask>> = BTreeMap::new();
        for &(x, v) in &self.pairs {
            by.entry(x).or_default().push(v);
        }
        by
    }

    /// Largest number of pairs sharing one `x`.
    pub fn branching_degree(&self) -> usize {
        self.grouped().values().map(Vec::len).max().unwrap_or(0)
    }

    /// Every `v` has at most one element.
    pub fn is_linear(&self) -> bool {
        self.pairs.iter().all(|&(_, v)| v.count_ones() <= 1)
    }

    /// At most one pair per `x`.
    pub fn is_sequential(&self) -> bool {
        self.branching_degree() <= 1
    }

    /// Keeps only the `⊆`-minimal `v` at each `x`; `apply` is unchanged.
    pub fn canonicalize(&self) -> Trace {
        let pairs = self
            .pairs
            .iter()
            .copied()
            .filter(|&(x, v)| {
                !self
                    .pairs
                    .iter()
                    .any(|&(x2, w)| x2 == x && w != v && mask::is_subset(w, v))
            })
            .collect();
        Trace::from_indices(self.source_field.clone(), self.target_field.clone(), pairs)
    }

    /// The lift `{(x, {v}) ; (x,v) ∈ R, v ≠ ∅} ∪ {(x,∅) ; (x,∅) ∈ R}` onto the
    /// finset field of [`bang_trace`]; its direct image of `!𝓜` equals the
    /// direct image of `𝓜` under `R`.
    pub fn bang_lift(&self) -> Result<Trace> {
        let bang = bang_trace(self.target_field.clone())?;
        let pairs = self
            .pairs()
            .into_iter()
            .map(|(x, v)| {
                let v = if v.is_empty() { vec![] } else { vec![Atom::finset(v)] };
                (x, v)
            })
            .collect::<Vec<_>>();
        Trace::new(self.source_field.clone(), bang.source_field, pairs)
    }
}

/// `{ (s, {⟨s,i⟩}) ; i = 1..n }`; its direct image of `𝓛₁ ⊎̃ ⋯ ⊎̃ 𝓛ₙ` is
/// `𝓛₁ ∪̃ ⋯ ∪̃ 𝓛ₙ`.
pub fn discoloration_trace(n: usize, field: Vec<Atom>) -> Result<Trace> {
    if n < 2 {
        return Err(Error::InvalidArity(n));
    }
    let field = sorted_universe(field)?;
    let target: Vec<Atom> = (1..=n as u32)
        .flat_map(|i| field.iter().map(move |s| Atom::tagged(s.clone(), i)))
        .collect();
    let pairs: Vec<(Atom, [Atom; 1])> = field
        .iter()
        .flat_map(|s| (1..=n as u32).map(move |i| (s.clone(), [Atom::tagged(s.clone(), i)])))
        .collect();
    Trace::new(field, target, pairs)
}

/// `{ (s, {⟨s,s⟩}) ; s ∈ F_L ∩ F_M }` from `F_L ∪ F_M` to `F_L × F_M`; its
/// direct image of `𝓛 ×̃ 𝓜` is `𝓛 ∩̃ 𝓜`.
pub fn intersection_trace(field_l: Vec<Atom>, field_m: Vec<Atom>) -> Result<Trace> {
    let fl = sorted_universe(field_l)?;
    let fm = sorted_universe(field_m)?;
    let target: Vec<Atom> = fl
        .iter()
        .flat_map(|a| fm.iter().map(move |b| Atom::pair(a.clone(), b.clone())))
        .collect();
    let mut source: Vec<Atom> = fl.iter().chain(&fm).cloned().collect();
    source.sort();
    source.dedup();
    let pairs: Vec<(Atom, [Atom; 1])> = fl
        .iter()
        .filter(|s| fm.binary_search(s).is_ok())
        .map(|s| (s.clone(), [Atom::pair(s.clone(), s.clone())]))
        .collect();
    Trace::new(source, target, pairs)
}

/// Largest field accepted by [`bang_trace`].
pub const BANG_FIELD_BOUND: usize = 6;

/// `R_! = { (v, v) ; v ⊆ field, v ≠ ∅ }` with each `v` on the source side
/// encoded as a finset atom; its direct image of `𝓜` is `!𝓜`.
pub fn bang_trace(field: Vec<Atom>) -> Result<Trace> {
    let field = sorted_universe(field)?;
    if field.len() > BANG_FIELD_BOUND {
        return Err(Error::UniverseTooLarge {
            size: field.len(),
            bound: BANG_FIELD_BOUND,
        });
    }
    let pairs: Vec<(Atom, Vec<Atom>)> = (1..=mask::full(field.len()))
        .map(|v| {
            let atoms: Vec<Atom> = mask::ones(v).map(|i| field[i].clone()).collect();
            (Atom::finset(atoms.clone()), atoms)
        })
        .collect();
    let source = pairs.iter().map(|(x, _)| x.clone()).collect();
    Trace::new(source, field, pairs)
}

/// `Ss(R) = {(x,{y}) ; R(x,y)}`, a linear trace from `fld 𝒳` to `fld 𝒴`.
pub fn ss_functor(r: &Simulation) -> Result<Trace> {
    if !r.is_simulation() {
        return Err(Error::NotASimulation);
    }
    Ok(Trace::from_indices(
        r.source().elements().to_vec(),
        r.target().elements().to_vec(),
        r.index_pairs().iter().map(|&(x, y)| (x, mask::bit(y))).collect(),
    ))
}

/// `Qo(R) = {(x,y) ; R(x,{y})}` from `qo(𝓒)` to `qo(𝓓)`, where `𝓒` and `𝓓`
/// are the systems on the source and target fields.
pub fn qo_functor(r: &Trace, c: &SetSystem, d: &SetSystem) -> Result<Simulation> {
    if !r.is_linear() {
        return Err(Error::NotLinear);
    }
    let field_err = |_| Error::FieldMismatch("set system lies outside the trace field".into());
    let c = c.with_universe(r.source_field.clone()).map_err(field_err)?;
    let d = d.with_universe(r.target_field.clone()).map_err(field_err)?;
    let pairs = r
        .pairs
        .iter()
        .filter(|&&(_, v)| v != 0)
        .map(|&(x, v)| (x, v.trailing_zeros() as usize))
        .collect();
    Ok(Simulation::from_indices(qo_of(&c), qo_of(&d), pairs))
}

/// `{ {x ; ∃y ∈ M. Rel(x,y)} ; M ∈ 𝓜 }` over `source_field`.
pub fn inverse_image_rel(
    source_field: Vec<Atom>,
    rel: &[(Atom, Atom)],
    m: &SetSystem,
) -> Result<SetSystem> {
    let mut target: Vec<Atom> = m
        .universe()
        .iter()
        .chain(rel.iter().map(|(_, y)| y))
        .cloned()
        .collect();
    target.sort();
    target.dedup();
    Trace::singleton_lift(source_field, target, rel.iter().cloned())?.direct_image(m)
}

/// The coproduct `⊕𝓛ⱼ` (members `L × {j}`) with its injections
/// `Tⱼ = {(⟨x,j⟩,{x})}`.
pub fn coproduct(systems: &[&SetSystem]) -> Result<(SetSystem, Vec<Trace>)> {
    let carrier = crate::ops::tagged_union(systems)?;
    let injections = systems
        .iter()
        .enumerate()
        .map(|(j, s)| {
            let tag = j as u32 + 1;
            let pairs: Vec<(Atom, [Atom; 1])> = s
                .support()
                .into_iter()
                .map(|x| (Atom::tagged(x.clone(), tag), [x]))
                .collect();
            Trace::new(carrier.universe().to_vec(), s.universe().to_vec(), pairs)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((carrier, injections))
}

/// The trace out of the coproduct induced by a cocone `Sⱼ` from each
/// `𝓛ⱼ` into a common field: `{ (y, v × {j}) ; (y,v) ∈ Sⱼ }`.
///
/// `Sⱼ` must be given over the field of `𝓛ⱼ`; pairs with `v = ∅` are fired
/// by every member of the coproduct, not only by those tagged `j`.
pub fn coproduct_mediating(systems: &[&SetSystem], cocone: &[Trace]) -> Result<Trace> {
    let (carrier, _) = coproduct(systems)?;
    if cocone.len() != systems.len() {
        return Err(Error::FieldMismatch("one cocone trace per summand is required".into()));
    }
    let source = cocone[0].source_field.clone();
    let mut pairs = Vec::new();
    for (j, t) in cocone.iter().enumerate() {
        if t.source_field != source {
            return Err(Error::FieldMismatch("cocone traces must share a source field".into()));
        }
        let tag = j as u32 + 1;
        for (y, v) in t.pairs() {
            pairs.push((y, v.into_iter().map(|x| Atom::tagged(x, tag)).collect::<Vec<_>>()));
        }
    }
    Trace::new(source, carrier.universe().to_vec(), pairs)
}

/// The product `⊎̃ 𝓛_λ` with its projections `Π_λ = {(x,{⟨x,λ⟩})}`.
pub fn product(systems: &[&SetSystem]) -> Result<(SetSystem, Vec<Trace>)> {
    let carrier = crate::ops::ew_disjoint(systems)?;
    let projections = systems
        .iter()
        .enumerate()
        .map(|(j, s)| {
            let tag = j as u32 + 1;
            let pairs: Vec<(Atom, [Atom; 1])> = s
                .support()
                .into_iter()
                .map(|x| (x.clone(), [Atom::tagged(x, tag)]))
                .collect();
            Trace::new(s.universe().to_vec(), carrier.universe().to_vec(), pairs)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((carrier, projections))
}

/// The trace into the product induced by a cone `R_λ` into each factor from
/// a common field: `{ (⟨s,λ⟩, v) ; (s,v) ∈ R_λ }`.
pub fn product_mediating(systems: &[&SetSystem], cone: &[Trace]) -> Result<Trace> {
    let (carrier, _) = product(systems)?;
    if cone.len() != systems.len() {
        return Err(Error::FieldMismatch("one cone trace per factor is required".into()));
    }
    let target = cone[0].target_field.clone();
    let mut pairs = Vec::new();
    for (j, t) in cone.iter().enumerate() {
        if t.target_field != target {
            return Err(Error::FieldMismatch("cone traces must share a target field".into()));
        }
        let tag = j as u32 + 1;
        for (s, v) in t.pairs() {
            if carrier.index_of(&Atom::tagged(s.clone(), tag)).is_some() {
                pairs.push((Atom::tagged(s, tag), v));
            }
        }
    }
    Trace::new(carrier.universe().to_vec(), target, pairs)
}

/// `{ M ∈ 𝓜 ; apply(R₁,M) = apply(R₂,M) }`.
pub fn equalizer(r1: &Trace, r2: &Trace, m: &SetSystem) -> Result<SetSystem> {
    if r1.source_field != r2.source_field || r1.target_field != r2.target_field {
        return Err(Error::FieldMismatch("parallel traces must share both fields".into()));
    }
    let img1 = r1.direct_image_masks(m)?;
    let img2 = r2.direct_image_masks(m)?;
    let keep = m
        .masks()
        .iter()
        .zip(img1.iter().zip(&img2))
        .filter(|(_, (a, b))| a == b)
        .map(|(&mm, _)| mm);
    SetSystem::from_masks(m.universe().to_vec(), keep.collect::<Vec<_>>())
}

impl Trace {
    /// `apply` on every member of `m`, in member order.
    fn direct_image_masks(&self, m: &SetSystem) -> Result<Vec<Mask>> {
        m.masks()
            .iter()
            .map(|&mm| Ok(self.apply_mask(field_mask(&self.target_field, &m.atoms_of(mm))?)))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ops::{ew_disjoint, ew_intersect, ew_product, ew_union};
    use crate::order::QuasiOrder;

    fn n(i: usize) -> Atom {
        Atom::num(i)
    }

    fn sys(u: usize, members: &[&[usize]]) -> SetSystem {
        SetSystem::new(
            Atom::range(u),
            members.iter().map(|m| m.iter().map(|&i| n(i)).collect::<Vec<_>>()),
        )
        .unwrap()
    }

    fn fixture_pair() -> (SetSystem, SetSystem) {
        (sys(3, &[&[], &[0], &[0, 1, 2]]), sys(3, &[&[], &[1], &[0, 1, 2]]))
    }

    fn tr(src: usize, tgt: usize, pairs: &[(usize, &[usize])]) -> Trace {
        Trace::new(
            Atom::range(src),
            Atom::range(tgt),
            pairs.iter().map(|(x, v)| (n(*x), v.iter().map(|&i| n(i)).collect::<Vec<_>>())),
        )
        .unwrap()
    }

    #[test]
    fn apply_basics() {
        let id = Trace::identity(Atom::range(3)).unwrap();
        assert_eq!(id.apply(&[n(0), n(2)]).unwrap(), vec![n(0), n(2)]);
        let always = tr(2, 2, &[(1, &[])]);
        assert_eq!(always.apply(&[]).unwrap(), vec![n(1)]);
        assert_eq!(id.apply(&[n(5)]), Err(Error::ElementOutsideField(n(5))));
        assert!(id.is_linear() && id.is_sequential());
        assert_eq!(id.branching_degree(), 1);
        assert_eq!(Trace::empty(vec![], vec![]).unwrap().branching_degree(), 0);
        assert!(!tr(1, 2, &[(0, &[0, 1])]).is_linear());
        assert!(!tr(1, 2, &[(0, &[0]), (0, &[1])]).is_sequential());
    }

    #[test]
    fn discoloration_merges_tagged_copies() {
        let (l, m) = fixture_pair();
        let r = discoloration_trace(2, Atom::range(3)).unwrap();
        assert_eq!(r.branching_degree(), 2);
        assert!(r.is_linear());
        let img = r.direct_image(&ew_disjoint(&[&l, &m]).unwrap()).unwrap();
        assert_eq!(img.family(), ew_union(&l, &m).unwrap().family());
        assert_eq!(discoloration_trace(1, Atom::range(3)), Err(Error::InvalidArity(1)));
    }

    #[test]
    fn intersection_trace_on_products() {
        let (l, m) = fixture_pair();
        let r = intersection_trace(l.support(), m.support()).unwrap();
        assert!(r.is_sequential());
        let img = r.direct_image(&ew_product(&l, &m).unwrap()).unwrap();
        assert_eq!(img.family(), ew_intersect(&l, &m).unwrap().family());
        let disjoint = intersection_trace(vec![n(0)], vec![n(1)]).unwrap();
        assert!(disjoint.is_empty());
    }

    #[test]
    fn bang_trace_realizes_bang() {
        let (l, _) = fixture_pair();
        let r = bang_trace(l.universe().to_vec()).unwrap();
        let img = r.direct_image(&l).unwrap();
        assert_eq!(img.family(), crate::ops::bang(&l).unwrap().family());
    }

    #[test]
    fn canonical_form() {
        let r = tr(1, 2, &[(0, &[0]), (0, &[0, 1])]);
        assert_eq!(r.canonicalize(), tr(1, 2, &[(0, &[0])]));
        let id = Trace::identity(Atom::range(2)).unwrap();
        assert_eq!(id.canonicalize(), id);
    }

    #[test]
    fn composition_law_small() {
        let r = tr(2, 3, &[(0, &[0, 1]), (1, &[2]), (1, &[])]);
        let s = tr(3, 2, &[(0, &[0]), (0, &[1]), (1, &[1]), (2, &[0, 1])]);
        let rs = r.compose(&s).unwrap();
        for g in 0..4 {
            assert_eq!(rs.apply_mask(g), r.apply_mask(s.apply_mask(g)));
        }
        let id = Trace::identity(Atom::range(3)).unwrap();
        assert_eq!(id.compose(&s).unwrap(), s.canonicalize());
        assert!(matches!(s.compose(&s), Err(Error::FieldMismatch(_))));
    }

    #[test]
    fn inverse_image_of_a_function() {
        let m = sys(2, &[&[0], &[1]]);
        let rel = [(n(0), n(0)), (n(1), n(0)), (n(2), n(1))];
        let img = inverse_image_rel(Atom::range(3), &rel, &m).unwrap();
        assert_eq!(img, sys(3, &[&[0, 1], &[2]]));
        let diag: Vec<(Atom, Atom)> = (0..2).map(|i| (n(i), n(i))).collect();
        assert_eq!(inverse_image_rel(Atom::range(2), &diag, &m).unwrap(), m);
    }

    #[test]
    fn functor_round_trip() {
        let q = QuasiOrder::chain(3);
        let id = Simulation::identity(&q);
        let t = ss_functor(&id).unwrap();
        assert_eq!(t, Trace::identity(Atom::range(3)).unwrap());
        let ssq = q.ss().unwrap();
        assert_eq!(qo_functor(&t, &ssq, &ssq).unwrap(), id);
        let stuck = Simulation::new(QuasiOrder::chain(2), QuasiOrder::chain(2), [(n(0), n(1))]).unwrap();
        assert_eq!(ss_functor(&stuck), Err(Error::NotASimulation));
        assert_eq!(
            qo_functor(&tr(1, 2, &[(0, &[0, 1])]), &sys(1, &[]), &sys(2, &[])),
            Err(Error::NotLinear)
        );
    }

    #[test]
    fn equalizers() {
        let m = sys(2, &[&[], &[0], &[0, 1]]);
        let id = Trace::identity(Atom::range(2)).unwrap();
        assert_eq!(equalizer(&id, &id, &m).unwrap(), m);
        let none = Trace::empty(Atom::range(2), Atom::range(2)).unwrap();
        assert_eq!(equalizer(&id, &none, &m).unwrap(), sys(2, &[&[]]));
    }

    #[test]
    fn product_projections_reproduce_factors() {
        let (l, m) = fixture_pair();
        let (carrier, proj) = product(&[&l, &m]).unwrap();
        assert_eq!(proj[0].direct_image(&carrier).unwrap(), l);
        assert_eq!(proj[1].direct_image(&carrier).unwrap(), m);
    }

    #[test]
    fn coproduct_injections_land_in_carrier() {
        let (l, m) = fixture_pair();
        let (carrier, inj) = coproduct(&[&l, &m]).unwrap();
        assert!(inj[0].direct_image(&l).unwrap().is_subfamily_of(&carrier));
        assert!(inj[1].direct_image(&m).unwrap().is_subfamily_of(&carrier));
    }

    #[test]
    fn bang_lift_matches_original_image() {
        let (l, _) = fixture_pair();
        let r = tr(2, 3, &[(0, &[0, 1]), (1, &[]), (1, &[2])]);
        let lifted = r.bang_lift().unwrap();
        let bl = crate::ops::bang(&l).unwrap();
        assert_eq!(
            lifted.direct_image(&bl).unwrap().family(),
            r.direct_image(&l).unwrap().family()
        );
    }

    #[test]
    fn json_shape() {
        let r = tr(1, 2, &[(0, &[0, 1])]);
        let j = serde_json::to_string(&r).unwrap();
        assert_eq!(
            j,
            r#"{"source_field":["0"],"target_field":["0","1"],"pairs":[{"x":"0","v":["0","1"]}]}"#
        );
        assert_eq!(serde_json::from_str::<Trace>(&j).unwrap(), r);
    }
}
