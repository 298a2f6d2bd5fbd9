//! Explicit finite families of subspaces of `Q^n`.
//!
//! The meet `p(G)` of a family is the intersection of its members and the
//! join `s(G)` their span, with `p(∅) = Q^n` and `s(∅) = {0}`. A family is
//! lower finite-gap when every member other than `p(G)` properly contains
//! another member (the quotient is automatically finite-dimensional here).
//!
//! Since every family here is finite, every chain in it is finite and so
//! lower finite-gap, and a family closed under pairwise meets is
//! `p`-complete up to the added join. That makes the chain searches below
//! walks in a finite poset.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::Subspace;

/// Default cap on the number of members a completion will accept.
pub const DEFAULT_COMPLETION_BOUND: usize = 16;

/// A finite set of subspaces of a common `Q^n`, kept in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceFamily {
    ambient_dim: usize,
    members: BTreeSet<Subspace>,
}

impl SubspaceFamily {
    pub fn empty(ambient_dim: usize) -> Self {
        SubspaceFamily { ambient_dim, members: BTreeSet::new() }
    }

    pub fn new(ambient_dim: usize, members: impl IntoIterator<Item = Subspace>) -> Result<Self> {
        let mut f = Self::empty(ambient_dim);
        for m in members {
            f.insert(m)?;
        }
        Ok(f)
    }

    /// Adds a member; returns `false` if it was already present.
    pub fn insert(&mut self, s: Subspace) -> Result<bool> {
        if s.ambient_dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, found: s.ambient_dim() });
        }
        Ok(self.members.insert(s))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: &Subspace) -> bool {
        self.members.contains(s)
    }

    /// Members in canonical order (dimension first).
    pub fn members(&self) -> impl DoubleEndedIterator<Item = &Subspace> + '_ {
        self.members.iter()
    }

    pub fn union(&self, other: &SubspaceFamily) -> Result<SubspaceFamily> {
        self.check_ambient(other.ambient_dim)?;
        let mut f = self.clone();
        f.members.extend(other.members.iter().cloned());
        Ok(f)
    }

    pub fn is_subfamily_of(&self, other: &SubspaceFamily) -> bool {
        self.ambient_dim == other.ambient_dim && self.members.is_subset(&other.members)
    }

    fn check_ambient(&self, n: usize) -> Result<()> {
        if n != self.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, found: n });
        }
        Ok(())
    }
}

/// `p(G)`: intersection of all members, the whole space for `G = ∅`.
pub fn family_meet(g: &SubspaceFamily) -> Subspace {
    g.members().fold(Subspace::full(g.ambient_dim), |acc, m| acc.meet(m))
}

/// `s(G)`: span of all members, `{0}` for `G = ∅`.
pub fn family_join(g: &SubspaceFamily) -> Subspace {
    g.members().fold(Subspace::zero(g.ambient_dim), |acc, m| acc.join(m))
}

fn check_bound(g: &SubspaceFamily, bound: usize) -> Result<()> {
    if g.len() > bound {
        return Err(Error::FamilyTooLarge { members: g.len(), bound });
    }
    Ok(())
}

/// Closure of the members under a binary operation. The closure of a finite
/// set under pairwise meets (joins) is exactly the set of meets (joins) of its
/// nonempty subfamilies.
fn pairwise_closure(g: &SubspaceFamily, op: impl Fn(&Subspace, &Subspace) -> Subspace) -> BTreeSet<Subspace> {
    let mut all: BTreeSet<Subspace> = g.members.clone();
    let mut frontier: Vec<Subspace> = all.iter().cloned().collect();
    while !frontier.is_empty() {
        let snapshot: Vec<Subspace> = all.iter().cloned().collect();
        let mut next = Vec::new();
        for a in &frontier {
            for b in &snapshot {
                let c = op(a, b);
                if !all.contains(&c) {
                    all.insert(c.clone());
                    next.push(c);
                }
            }
        }
        frontier = next;
    }
    all
}

/// `G^p`: meets of all nonempty subfamilies, together with `s(G)`.
pub fn p_completion(g: &SubspaceFamily, bound: usize) -> Result<SubspaceFamily> {
    check_bound(g, bound)?;
    let mut members = pairwise_closure(g, Subspace::meet);
    members.insert(family_join(g));
    Ok(SubspaceFamily { ambient_dim: g.ambient_dim, members })
}

/// `G^s`: joins of all nonempty subfamilies, together with `p(G)`.
pub fn s_completion(g: &SubspaceFamily, bound: usize) -> Result<SubspaceFamily> {
    check_bound(g, bound)?;
    let mut members = pairwise_closure(g, Subspace::join);
    members.insert(family_meet(g));
    Ok(SubspaceFamily { ambient_dim: g.ambient_dim, members })
}

/// Whether `G = G^p`.
pub fn is_p_complete(g: &SubspaceFamily) -> bool {
    let closed = g.members().all(|a| g.members().all(|b| g.contains(&a.meet(b))));
    closed && g.contains(&family_join(g))
}

/// Whether `G = G^s`.
pub fn is_s_complete(g: &SubspaceFamily) -> bool {
    let closed = g.members().all(|a| g.members().all(|b| g.contains(&a.join(b))));
    closed && g.contains(&family_meet(g))
}

fn has_member_below(pool: &SubspaceFamily, z: &Subspace) -> bool {
    pool.members().any(|y| y.dim() < z.dim() && y.is_subspace_of(z))
}

fn has_member_above(pool: &SubspaceFamily, z: &Subspace) -> bool {
    pool.members().any(|y| y.dim() > z.dim() && z.is_subspace_of(y))
}

pub fn is_lower_finite_gap(g: &SubspaceFamily) -> bool {
    let bottom = family_meet(g);
    g.members().filter(|z| **z != bottom).all(|z| has_member_below(g, z))
}

pub fn is_upper_finite_gap(g: &SubspaceFamily) -> bool {
    let top = family_join(g);
    g.members().filter(|z| **z != top).all(|z| has_member_above(g, z))
}

/// `G` is lower finite-gap modulo `G'`: every member of `G` other than
/// `p(G ∪ G')` properly contains a member of `G ∪ G'`.
pub fn is_lower_finite_gap_modulo(g: &SubspaceFamily, modulus: &SubspaceFamily) -> Result<bool> {
    let all = g.union(modulus)?;
    let bottom = family_meet(&all);
    Ok(g.members().filter(|z| **z != bottom).all(|z| has_member_below(&all, z)))
}

/// Direction in which ties between candidate members are broken.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TieBreak {
    /// Take the canonically smallest candidate.
    Forward,
    /// Take the canonically largest candidate.
    Reverse,
}

/// Members of `g` strictly inside `z` with nothing of `g` strictly between.
fn covers_below<'a>(g: &'a SubspaceFamily, z: &Subspace) -> Vec<&'a Subspace> {
    let below: Vec<&Subspace> = g.members().filter(|y| y.dim() < z.dim() && y.is_subspace_of(z)).collect();
    below
        .iter()
        .copied()
        .filter(|y| !below.iter().any(|w| w.dim() > y.dim() && y.is_subspace_of(w)))
        .collect()
}

/// A maximal lower finite-gap chain of `g` descending from `top`, listed from
/// `top` down.
///
/// Each step moves to a cover of the current member, so nothing can be
/// inserted between consecutive terms, and the walk stops at a minimal member.
pub fn maximal_lower_finite_gap_chain(g: &SubspaceFamily, top: &Subspace) -> Result<Vec<Subspace>> {
    maximal_lower_finite_gap_chain_with(g, top, TieBreak::Forward)
}

pub fn maximal_lower_finite_gap_chain_with(g: &SubspaceFamily, top: &Subspace, tie: TieBreak) -> Result<Vec<Subspace>> {
    if !g.contains(top) {
        return Err(Error::NotInFamily);
    }
    let mut chain = alloc::vec![top.clone()];
    loop {
        let covers = covers_below(g, chain.last().expect("chain is nonempty"));
        let next = match tie {
            TieBreak::Forward => covers.into_iter().min(),
            TieBreak::Reverse => covers.into_iter().max(),
        };
        match next {
            Some(y) => chain.push(y.clone()),
            None => return Ok(chain),
        }
    }
}

/// Whether a totally ordered list is a maximal chain of `g` between its ends.
pub fn is_saturated_chain(g: &SubspaceFamily, chain: &[Subspace]) -> bool {
    chain.iter().all(|c| g.contains(c))
        && chain.windows(2).all(|w| {
            w[1].dim() < w[0].dim()
                && w[1].is_subspace_of(&w[0])
                && !g.members().any(|m| m.dim() > w[1].dim() && m.dim() < w[0].dim() && w[1].is_subspace_of(m) && m.is_subspace_of(&w[0]))
        })
}

/// A maximal chain `C` of `g` with `s(C) = s(G)` and `p(C) = p(G)`, found by
/// depth-first search over covers, if one exists.
pub fn spanning_chain(g: &SubspaceFamily) -> Option<Vec<Subspace>> {
    let top = family_join(g);
    let bottom = family_meet(g);
    if !g.contains(&top) || !g.contains(&bottom) {
        return None;
    }
    let mut path = alloc::vec![top];
    if search_down(g, &bottom, &mut path) {
        Some(path)
    } else {
        None
    }
}

fn search_down(g: &SubspaceFamily, bottom: &Subspace, path: &mut Vec<Subspace>) -> bool {
    let current = path.last().expect("path is nonempty").clone();
    if current == *bottom {
        return true;
    }
    for y in covers_below(g, &current) {
        path.push(y.clone());
        if search_down(g, bottom, path) {
            return true;
        }
        path.pop();
    }
    false
}

/// `G ∩ W = {Y ∩ W : Y ∈ G}`.
pub fn restrict_family(g: &SubspaceFamily, w: &Subspace) -> Result<SubspaceFamily> {
    g.check_ambient(w.ambient_dim())?;
    Ok(SubspaceFamily { ambient_dim: g.ambient_dim, members: g.members().map(|y| y.meet(w)).collect() })
}

/// `Δ_G = p(G_f)`, where `G_f` holds the members reachable from the top
/// `s(G)` by a `p`-complete lower finite-gap chain.
///
/// In a finite family every member below the top is reachable this way, so
/// `G_f` is all of `G`. When `G` is `p`-complete the value is cross-checked
/// against the bottoms of two maximal chains built with opposite tie-breaks.
pub fn delta(g: &SubspaceFamily) -> Result<Subspace> {
    let top = family_join(g);
    if !g.contains(&top) {
        return Err(Error::NotInFamily);
    }
    let reachable = SubspaceFamily {
        ambient_dim: g.ambient_dim,
        members: g.members().filter(|y| y.is_subspace_of(&top)).cloned().collect(),
    };
    let value = family_meet(&reachable);
    if is_p_complete(g) {
        for tie in [TieBreak::Forward, TieBreak::Reverse] {
            let chain = maximal_lower_finite_gap_chain_with(g, &top, tie)?;
            if chain.last() != Some(&value) {
                return Err(Error::Certificate("maximal chains from the top disagree on their bottom".into()));
            }
        }
    }
    Ok(value)
}

/// The relations `F ⊂→ G` (every member of `F` lies in a member of `G`) and
/// its dual (every member of `F` contains a member of `G`). Both hold for an
/// empty `F`.
pub fn family_arrows(f: &SubspaceFamily, g: &SubspaceFamily) -> Result<(bool, bool)> {
    f.check_ambient(g.ambient_dim)?;
    let dir = f.members().all(|y| g.members().any(|z| y.is_subspace_of(z)));
    let inv = f.members().all(|y| g.members().any(|z| z.is_subspace_of(y)));
    Ok((dir, inv))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn span(n: usize, idx: &[usize]) -> Subspace {
        Subspace::coordinate(n, idx)
    }

    fn fam(n: usize, ms: &[&[usize]]) -> SubspaceFamily {
        SubspaceFamily::new(n, ms.iter().map(|i| span(n, i))).unwrap()
    }

    fn flag(n: usize) -> SubspaceFamily {
        SubspaceFamily::new(n, (0..=n).map(|k| span(n, &(0..k).collect::<Vec<_>>()))).unwrap()
    }

    #[test]
    fn meet_and_join_conventions() {
        let e = SubspaceFamily::empty(3);
        assert_eq!(family_meet(&e), Subspace::full(3));
        assert_eq!(family_join(&e), Subspace::zero(3));
        let g = fam(3, &[&[0, 1], &[1, 2]]);
        assert_eq!(family_meet(&g), span(3, &[1]));
        assert_eq!(family_join(&g), Subspace::full(3));
        let v = fam(3, &[&[2]]);
        assert_eq!(family_meet(&v), span(3, &[2]));
        assert_eq!(family_join(&v), span(3, &[2]));
    }

    #[test]
    fn completions() {
        let g = fam(3, &[&[0, 1], &[1, 2]]);
        let p = p_completion(&g, DEFAULT_COMPLETION_BOUND).unwrap();
        assert_eq!(p, fam(3, &[&[0, 1], &[1, 2], &[1], &[0, 1, 2]]));
        assert_eq!(p_completion(&p, DEFAULT_COMPLETION_BOUND).unwrap(), p);
        let s = s_completion(&g, DEFAULT_COMPLETION_BOUND).unwrap();
        assert_eq!(s, p);

        let mut chain = flag(3);
        chain.members.remove(&Subspace::full(3));
        let pc = p_completion(&chain, DEFAULT_COMPLETION_BOUND).unwrap();
        assert_eq!(pc, chain);
        let lines = fam(3, &[&[0], &[0, 1]]);
        assert_eq!(p_completion(&lines, 16).unwrap(), lines);

        let e = SubspaceFamily::empty(3);
        assert_eq!(p_completion(&e, 16).unwrap(), fam(3, &[&[]]));
        assert_eq!(s_completion(&e, 16).unwrap(), fam(3, &[&[0, 1, 2]]));

        let big = SubspaceFamily::new(5, (0..5).flat_map(|i| (i + 1..5).map(move |j| span(5, &[i, j])))).unwrap();
        assert_eq!(p_completion(&big, 4), Err(Error::FamilyTooLarge { members: 10, bound: 4 }));
    }

    #[test]
    fn finite_gap_predicates() {
        let f = flag(4);
        assert!(is_lower_finite_gap(&f) && is_upper_finite_gap(&f));
        let g = fam(3, &[&[0, 1, 2], &[]]);
        assert!(is_lower_finite_gap(&g) && is_upper_finite_gap(&g));
        let h = fam(3, &[&[0, 1, 2], &[0], &[1]]);
        assert!(!is_lower_finite_gap(&h));
        assert!(is_upper_finite_gap(&h));
    }

    #[test]
    fn finite_gap_modulo_union() {
        let g = fam(3, &[&[0, 1, 2], &[0], &[1]]);
        let modulus = fam(3, &[&[]]);
        assert!(is_lower_finite_gap_modulo(&g, &modulus).unwrap());
        assert!(is_lower_finite_gap(&modulus));
        assert!(is_lower_finite_gap(&g.union(&modulus).unwrap()));
    }

    #[test]
    fn maximal_chains() {
        let planes = fam(3, &[&[0, 1], &[0, 2], &[1, 2]]);
        let g = p_completion(&planes, 16).unwrap();
        let top = Subspace::full(3);
        for tie in [TieBreak::Forward, TieBreak::Reverse] {
            let c = maximal_lower_finite_gap_chain_with(&g, &top, tie).unwrap();
            assert_eq!(c.iter().map(Subspace::dim).collect::<Vec<_>>(), vec![3, 2, 1, 0]);
            assert!(is_saturated_chain(&g, &c));
        }
        let a = maximal_lower_finite_gap_chain_with(&g, &top, TieBreak::Forward).unwrap();
        let b = maximal_lower_finite_gap_chain_with(&g, &top, TieBreak::Reverse).unwrap();
        assert_ne!(a, b);

        let v = fam(3, &[&[1]]);
        assert_eq!(maximal_lower_finite_gap_chain(&v, &span(3, &[1])).unwrap(), vec![span(3, &[1])]);
        assert_eq!(maximal_lower_finite_gap_chain(&v, &span(3, &[0])), Err(Error::NotInFamily));
    }

    #[test]
    fn spanning_chain_matches_finite_gap() {
        let planes = p_completion(&fam(3, &[&[0, 1], &[0, 2], &[1, 2]]), 16).unwrap();
        assert!(is_lower_finite_gap(&planes));
        assert_eq!(spanning_chain(&planes).unwrap().len(), 4);
        let h = fam(3, &[&[0, 1, 2], &[0], &[1]]);
        assert!(spanning_chain(&h).is_none());
    }

    #[test]
    fn restriction() {
        let planes = fam(3, &[&[0, 1], &[0, 2], &[1, 2]]);
        let w = span(3, &[0, 1]);
        assert_eq!(restrict_family(&planes, &w).unwrap(), fam(3, &[&[0, 1], &[0], &[1]]));
        assert_eq!(restrict_family(&planes, &Subspace::zero(3)).unwrap(), fam(3, &[&[]]));
        assert_eq!(restrict_family(&planes, &Subspace::full(3)).unwrap(), planes);
        assert!(restrict_family(&planes, &Subspace::zero(2)).is_err());

        let pc = p_completion(&planes, 16).unwrap();
        let r = restrict_family(&pc, &w).unwrap();
        assert!(is_p_complete(&pc) && is_p_complete(&r) && is_lower_finite_gap(&r));
    }

    #[test]
    fn delta_values() {
        assert_eq!(delta(&flag(4)).unwrap(), Subspace::zero(4));
        let g = p_completion(&fam(2, &[&[0, 1], &[0], &[1]]), 16).unwrap();
        assert_eq!(delta(&g).unwrap(), Subspace::zero(2));
        assert_eq!(delta(&fam(2, &[&[0, 1]])).unwrap(), Subspace::full(2));
        assert_eq!(delta(&fam(2, &[&[0], &[1]])), Err(Error::NotInFamily));
    }

    #[test]
    fn arrows() {
        let g = fam(3, &[&[0, 1], &[1, 2], &[1]]);
        let f = fam(3, &[&[0, 1], &[1]]);
        assert_eq!(family_arrows(&f, &g).unwrap(), (true, true));
        let a = fam(2, &[&[0]]);
        let b = fam(2, &[&[1]]);
        assert_eq!(family_arrows(&a, &b).unwrap(), (false, false));
        assert!(family_arrows(&SubspaceFamily::empty(2), &b).unwrap().0);
        assert!(family_arrows(&a, &fam(3, &[&[0]])).is_err());
    }
}
