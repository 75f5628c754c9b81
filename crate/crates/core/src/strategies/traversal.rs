//! Whole-tree traversal schemes.
//!
//! All schemes visit children left to right. `td` is preorder (node before
//! children), `bu` is postorder (children before node).

use super::{Fuel, Monoid, StrategyError, Tp, TpResult, Tu, TuResult};
use crate::zipper::Zipper;

type Visited = Result<(Zipper, bool), StrategyError>;

fn try_at(s: &Tp, z: &Zipper) -> Visited {
    Ok(match s.apply(z)? {
        Some(done) => (done, true),
        None => (z.clone(), false),
    })
}

/// Runs `visit` on every child of the focus and returns to the parent.
/// The flag is true when any visit reported success.
fn each_child(z: &Zipper, mut visit: impl FnMut(&Zipper) -> Visited) -> Visited {
    let Some(mut child) = z.down_left() else {
        return Ok((z.clone(), false));
    };
    let mut hit = false;
    loop {
        let (done, h) = visit(&child)?;
        hit |= h;
        match done.right() {
            Some(next) => child = next,
            None => {
                // Nothing below succeeded, so nothing below changed.
                if !hit {
                    return Ok((z.clone(), false));
                }
                let parent = done.up().expect("child has a parent");
                return Ok((parent, true));
            }
        }
    }
}

/// First child (left to right) on which `visit` succeeds, back at the parent.
fn first_child(
    z: &Zipper,
    mut visit: impl FnMut(&Zipper) -> TpResult,
) -> TpResult {
    let mut next = z.down_left();
    while let Some(child) = next {
        if let Some(done) = visit(&child)? {
            return Ok(done.up());
        }
        next = child.right();
    }
    Ok(None)
}

fn fold_children<D: Monoid>(
    z: &Zipper,
    mut visit: impl FnMut(&Zipper) -> Result<D, StrategyError>,
) -> Result<D, StrategyError> {
    let mut acc = D::empty();
    let mut next = z.down_left();
    while let Some(child) = next {
        acc = acc.append(visit(&child)?);
        next = child.right();
    }
    Ok(acc)
}

fn first_child_tu<D>(
    z: &Zipper,
    mut visit: impl FnMut(&Zipper) -> TuResult<D>,
) -> TuResult<D> {
    let mut next = z.down_left();
    while let Some(child) = next {
        if let Some(d) = visit(&child)? {
            return Ok(Some(d));
        }
        next = child.right();
    }
    Ok(None)
}

fn succeeded(visited: Visited) -> TpResult {
    visited.map(|(z, hit)| hit.then_some(z))
}

fn full_td(s: &Tp, z: &Zipper) -> Visited {
    let (here, hit) = try_at(s, z)?;
    let (done, below) = each_child(&here, |c| full_td(s, c))?;
    Ok((done, hit || below))
}

fn full_bu(s: &Tp, z: &Zipper) -> Visited {
    let (done, below) = each_child(z, |c| full_bu(s, c))?;
    let (done, hit) = try_at(s, &done)?;
    Ok((done, hit || below))
}

fn once_td(s: &Tp, z: &Zipper) -> TpResult {
    if let Some(done) = s.apply(z)? {
        return Ok(Some(done));
    }
    first_child(z, |c| once_td(s, c))
}

fn once_bu(s: &Tp, z: &Zipper) -> TpResult {
    if let Some(done) = first_child(z, |c| once_bu(s, c))? {
        return Ok(Some(done));
    }
    s.apply(z)
}

fn stop_td(s: &Tp, z: &Zipper) -> Visited {
    match s.apply(z)? {
        Some(done) => Ok((done, true)),
        None => each_child(z, |c| stop_td(s, c)),
    }
}

fn stop_bu(s: &Tp, z: &Zipper) -> Visited {
    let (done, below) = each_child(z, |c| stop_bu(s, c))?;
    if below {
        Ok((done, true))
    } else {
        try_at(s, &done)
    }
}

/// Applies `s` at every node in preorder; fails only if `s` failed everywhere.
pub fn full_td_tp(s: Tp) -> Tp {
    Tp::new(move |z| succeeded(full_td(&s, z)))
}

/// Applies `s` at every node in postorder; fails only if `s` failed everywhere.
pub fn full_bu_tp(s: Tp) -> Tp {
    Tp::new(move |z| succeeded(full_bu(&s, z)))
}

/// One application of `s` at the leftmost-outermost node where it succeeds.
pub fn once_td_tp(s: Tp) -> Tp {
    Tp::new(move |z| once_td(&s, z))
}

/// One application of `s` at the leftmost-innermost node where it succeeds.
pub fn once_bu_tp(s: Tp) -> Tp {
    Tp::new(move |z| once_bu(&s, z))
}

/// Top-down; a success at a node skips that node's descendants.
pub fn stop_td_tp(s: Tp) -> Tp {
    Tp::new(move |z| succeeded(stop_td(&s, z)))
}

/// Bottom-up; a node is only tried when nothing below it succeeded.
pub fn stop_bu_tp(s: Tp) -> Tp {
    Tp::new(move |z| succeeded(stop_bu(&s, z)))
}

/// Applies `s` until it fails. Always succeeds unless `fuel` runs out.
pub fn repeat_tp(s: Tp, fuel: Fuel) -> Tp {
    Tp::new(move |z| {
        let mut current = z.clone();
        let mut performed = 0u64;
        while let Some(next) = s.apply(&current)? {
            performed += 1;
            fuel.check(performed)?;
            current = next;
        }
        Ok(Some(current))
    })
}

pub fn innermost(s: Tp, fuel: Fuel) -> Tp {
    repeat_tp(once_bu_tp(s), fuel)
}

pub fn outermost(s: Tp, fuel: Fuel) -> Tp {
    repeat_tp(once_td_tp(s), fuel)
}

fn full_td_u<D: Monoid + 'static>(s: &Tu<D>, z: &Zipper) -> Result<D, StrategyError> {
    let here = s.apply(z)?.unwrap_or_else(D::empty);
    Ok(here.append(fold_children(z, |c| full_td_u(s, c))?))
}

fn full_bu_u<D: Monoid + 'static>(s: &Tu<D>, z: &Zipper) -> Result<D, StrategyError> {
    let below = fold_children(z, |c| full_bu_u(s, c))?;
    Ok(below.append(s.apply(z)?.unwrap_or_else(D::empty)))
}

fn once_td_u<D: 'static>(s: &Tu<D>, z: &Zipper) -> TuResult<D> {
    if let Some(d) = s.apply(z)? {
        return Ok(Some(d));
    }
    first_child_tu(z, |c| once_td_u(s, c))
}

fn once_bu_u<D: 'static>(s: &Tu<D>, z: &Zipper) -> TuResult<D> {
    if let Some(d) = first_child_tu(z, |c| once_bu_u(s, c))? {
        return Ok(Some(d));
    }
    s.apply(z)
}

fn stop_td_u<D: Monoid + 'static>(s: &Tu<D>, z: &Zipper) -> Result<D, StrategyError> {
    match s.apply(z)? {
        Some(d) => Ok(d),
        None => fold_children(z, |c| stop_td_u(s, c)),
    }
}

fn stop_bu_u<D: Monoid + 'static>(s: &Tu<D>, z: &Zipper) -> Result<(D, bool), StrategyError> {
    let mut hit = false;
    let below = fold_children(z, |c| {
        let (d, h) = stop_bu_u(s, c)?;
        hit |= h;
        Ok(d)
    })?;
    if hit {
        return Ok((below, true));
    }
    Ok(match s.apply(z)? {
        Some(d) => (below.append(d), true),
        None => (below, false),
    })
}

/// Preorder concatenation of the per-node results; failures count as empty.
pub fn full_td_tu<D: Monoid + 'static>(s: Tu<D>) -> Tu<D> {
    Tu::new(move |z| full_td_u(&s, z).map(Some))
}

/// Postorder concatenation of the per-node results; failures count as empty.
pub fn full_bu_tu<D: Monoid + 'static>(s: Tu<D>) -> Tu<D> {
    Tu::new(move |z| full_bu_u(&s, z).map(Some))
}

pub fn once_td_tu<D: 'static>(s: Tu<D>) -> Tu<D> {
    Tu::new(move |z| once_td_u(&s, z))
}

pub fn once_bu_tu<D: 'static>(s: Tu<D>) -> Tu<D> {
    Tu::new(move |z| once_bu_u(&s, z))
}

/// Preorder collection that does not descend below nodes where `s` succeeds.
pub fn stop_td_tu<D: Monoid + 'static>(s: Tu<D>) -> Tu<D> {
    Tu::new(move |z| stop_td_u(&s, z).map(Some))
}

/// Postorder collection that skips nodes with a success somewhere below.
pub fn stop_bu_tu<D: Monoid + 'static>(s: Tu<D>) -> Tu<D> {
    Tu::new(move |z| stop_bu_u(&s, z).map(|(d, _)| Some(d)))
}

/// How a rewrite step is driven over a whole tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Schedule {
    /// To a fixpoint, leftmost-innermost redex first.
    Innermost,
    /// To a fixpoint, leftmost-outermost redex first.
    Outermost,
    /// A single preorder pass.
    FullTd,
    /// A single postorder pass.
    FullBu,
}

impl Schedule {
    /// `step` driven by this schedule. The result always succeeds, leaving
    /// the tree unchanged when no redex exists.
    pub fn strategy(self, step: Tp, fuel: Fuel) -> Tp {
        let s = match self {
            Schedule::Innermost => innermost(step, fuel),
            Schedule::Outermost => outermost(step, fuel),
            Schedule::FullTd => full_td_tp(step),
            Schedule::FullBu => full_bu_tp(step),
        };
        Tp::new(move |z| Ok(Some(s.apply(z)?.unwrap_or_else(|| z.clone()))))
    }
}
