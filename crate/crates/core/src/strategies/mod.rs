//! Strategy combinators over zippers.
//!
//! A [`Tp`] (type-preserving) strategy maps a zipper to a zipper focused at
//! the same position, or fails. A [`Tu`] (type-unifying) strategy reduces a
//! zipper to a value of some [`Monoid`], or fails. Failure is `Ok(None)`;
//! `Err` is reserved for hard errors such as running out of [`Fuel`].

mod traversal;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::ag::AgError;
use crate::zipper::{Term, Zipper, ZipperError};

pub use traversal::{
    full_bu_tp, full_bu_tu, full_td_tp, full_td_tu, innermost, once_bu_tp, once_bu_tu, once_td_tp,
    once_td_tu, outermost, repeat_tp, stop_bu_tp, stop_bu_tu, stop_td_tp, stop_td_tu, Schedule,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrategyError {
    #[error("fuel exhausted after {limit} rewrites")]
    FuelExhausted { limit: u64 },
    #[error("rewrite rule failed: {0}")]
    Rule(String),
    #[error(transparent)]
    Zipper(#[from] ZipperError),
    #[error(transparent)]
    Attribute(#[from] AgError),
}

pub type TpResult = Result<Option<Zipper>, StrategyError>;
pub type TuResult<D> = Result<Option<D>, StrategyError>;

/// Result of a typed rewrite or query function plugged into a strategy.
pub trait IntoOutcome<T> {
    fn into_outcome(self) -> Result<Option<T>, StrategyError>;
}

impl<T> IntoOutcome<T> for Option<T> {
    fn into_outcome(self) -> Result<Option<T>, StrategyError> {
        Ok(self)
    }
}

impl<T, E: Into<StrategyError>> IntoOutcome<T> for Result<Option<T>, E> {
    fn into_outcome(self) -> Result<Option<T>, StrategyError> {
        self.map_err(Into::into)
    }
}

/// Identity element plus associative append.
pub trait Monoid: Sized {
    fn empty() -> Self;
    fn append(self, other: Self) -> Self;
}

impl<T> Monoid for Vec<T> {
    fn empty() -> Self {
        Vec::new()
    }

    fn append(mut self, mut other: Self) -> Self {
        Vec::append(&mut self, &mut other);
        self
    }
}

impl Monoid for String {
    fn empty() -> Self {
        String::new()
    }

    fn append(mut self, other: Self) -> Self {
        self.push_str(&other);
        self
    }
}

impl Monoid for () {
    fn empty() -> Self {}

    fn append(self, _other: Self) -> Self {}
}

/// Bound on the number of rewrites performed by `repeat_tp` and the
/// normalizing traversals built on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Fuel(Option<u64>);

impl Fuel {
    pub const fn unlimited() -> Fuel {
        Fuel(None)
    }

    pub const fn limit(max_rewrites: u64) -> Fuel {
        Fuel(Some(max_rewrites))
    }

    pub fn max_rewrites(&self) -> Option<u64> {
        self.0
    }

    pub(crate) fn check(&self, performed: u64) -> Result<(), StrategyError> {
        match self.0 {
            Some(limit) if performed > limit => Err(StrategyError::FuelExhausted { limit }),
            _ => Ok(()),
        }
    }
}

type TpFn = dyn Fn(&Zipper) -> TpResult + Send + Sync;
type TuFn<D> = dyn Fn(&Zipper) -> TuResult<D> + Send + Sync;

/// Type-preserving strategy.
#[derive(Clone)]
pub struct Tp(Arc<TpFn>);

impl Tp {
    pub fn new<F>(f: F) -> Tp
    where
        F: Fn(&Zipper) -> TpResult + Send + Sync + 'static,
    {
        Tp(Arc::new(f))
    }

    pub fn apply(&self, z: &Zipper) -> TpResult {
        (self.0)(z)
    }

    /// `self` extended with a typed rewrite: see [`adhoc_tp`].
    pub fn adhoc<T, R, F>(self, f: F) -> Tp
    where
        T: Term,
        R: IntoOutcome<T>,
        F: Fn(T) -> R + Send + Sync + 'static,
    {
        adhoc_tp(self, f)
    }

    /// `self` extended with a zipper-aware typed rewrite: see [`adhoc_tpz`].
    pub fn adhoc_z<T, R, F>(self, f: F) -> Tp
    where
        T: Term,
        R: IntoOutcome<T>,
        F: Fn(T, &Zipper) -> R + Send + Sync + 'static,
    {
        adhoc_tpz(self, f)
    }
}

impl fmt::Debug for Tp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Tp(..)")
    }
}

/// Type-unifying strategy with results in `D`.
pub struct Tu<D>(Arc<TuFn<D>>);

impl<D> Clone for Tu<D> {
    fn clone(&self) -> Self {
        Tu(self.0.clone())
    }
}

impl<D> fmt::Debug for Tu<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Tu(..)")
    }
}

impl<D: 'static> Tu<D> {
    pub fn new<F>(f: F) -> Tu<D>
    where
        F: Fn(&Zipper) -> TuResult<D> + Send + Sync + 'static,
    {
        Tu(Arc::new(f))
    }

    pub fn apply(&self, z: &Zipper) -> TuResult<D> {
        (self.0)(z)
    }

    pub fn adhoc<T, R, F>(self, f: F) -> Tu<D>
    where
        T: Term,
        R: IntoOutcome<D>,
        F: Fn(T) -> R + Send + Sync + 'static,
    {
        adhoc_tu(self, f)
    }

    pub fn adhoc_z<T, R, F>(self, f: F) -> Tu<D>
    where
        T: Term,
        R: IntoOutcome<D>,
        F: Fn(T, &Zipper) -> R + Send + Sync + 'static,
    {
        adhoc_tuz(self, f)
    }
}

// Primitive strategies

pub fn id_tp() -> Tp {
    Tp::new(|z| Ok(Some(z.clone())))
}

pub fn fail_tp() -> Tp {
    Tp::new(|_| Ok(None))
}

pub fn const_tu<D: Clone + Send + Sync + 'static>(d: D) -> Tu<D> {
    Tu::new(move |_| Ok(Some(d.clone())))
}

pub fn fail_tu<D: 'static>() -> Tu<D> {
    Tu::new(|_| Ok(None))
}

/// Applies `s` if it succeeds, otherwise leaves the zipper unchanged.
pub fn try_tp(s: Tp) -> Tp {
    Tp::new(move |z| Ok(Some(s.apply(z)?.unwrap_or_else(|| z.clone()))))
}

// Strategy construction

/// Typed rewrite first; `base` runs when the focus is not a `T` or when `f`
/// declines.
pub fn adhoc_tp<T, R, F>(base: Tp, f: F) -> Tp
where
    T: Term,
    R: IntoOutcome<T>,
    F: Fn(T) -> R + Send + Sync + 'static,
{
    adhoc_tpz(base, move |v, _| f(v))
}

pub fn adhoc_tpz<T, R, F>(base: Tp, f: F) -> Tp
where
    T: Term,
    R: IntoOutcome<T>,
    F: Fn(T, &Zipper) -> R + Send + Sync + 'static,
{
    Tp::new(move |z| {
        if let Some(v) = z.get_hole::<T>() {
            if let Some(new) = f(v, z).into_outcome()? {
                return Ok(Some(z.replace(new.to_dyn())?));
            }
        }
        base.apply(z)
    })
}

pub fn mono_tp<T, R, F>(f: F) -> Tp
where
    T: Term,
    R: IntoOutcome<T>,
    F: Fn(T) -> R + Send + Sync + 'static,
{
    adhoc_tp(fail_tp(), f)
}

pub fn mono_tpz<T, R, F>(f: F) -> Tp
where
    T: Term,
    R: IntoOutcome<T>,
    F: Fn(T, &Zipper) -> R + Send + Sync + 'static,
{
    adhoc_tpz(fail_tp(), f)
}

pub fn adhoc_tu<D, T, R, F>(base: Tu<D>, f: F) -> Tu<D>
where
    D: 'static,
    T: Term,
    R: IntoOutcome<D>,
    F: Fn(T) -> R + Send + Sync + 'static,
{
    adhoc_tuz(base, move |v, _| f(v))
}

pub fn adhoc_tuz<D, T, R, F>(base: Tu<D>, f: F) -> Tu<D>
where
    D: 'static,
    T: Term,
    R: IntoOutcome<D>,
    F: Fn(T, &Zipper) -> R + Send + Sync + 'static,
{
    Tu::new(move |z| {
        if let Some(v) = z.get_hole::<T>() {
            if let Some(d) = f(v, z).into_outcome()? {
                return Ok(Some(d));
            }
        }
        base.apply(z)
    })
}

pub fn mono_tu<D, T, R, F>(f: F) -> Tu<D>
where
    D: 'static,
    T: Term,
    R: IntoOutcome<D>,
    F: Fn(T) -> R + Send + Sync + 'static,
{
    adhoc_tu(fail_tu(), f)
}

pub fn mono_tuz<D, T, R, F>(f: F) -> Tu<D>
where
    D: 'static,
    T: Term,
    R: IntoOutcome<D>,
    F: Fn(T, &Zipper) -> R + Send + Sync + 'static,
{
    adhoc_tuz(fail_tu(), f)
}

// Composition

/// Runs `a` then `b`, skipping whichever fails; fails only if both fail.
pub fn seq_tp(a: Tp, b: Tp) -> Tp {
    Tp::new(move |z| {
        let first = a.apply(z)?;
        let mid = first.as_ref().unwrap_or(z);
        match b.apply(mid)? {
            Some(done) => Ok(Some(done)),
            None => Ok(first),
        }
    })
}

pub fn choice_tp(a: Tp, b: Tp) -> Tp {
    Tp::new(move |z| match a.apply(z)? {
        Some(done) => Ok(Some(done)),
        None => b.apply(z),
    })
}

/// Appends the results of `a` and `b` (in that order), skipping failures.
pub fn seq_tu<D: Monoid + 'static>(a: Tu<D>, b: Tu<D>) -> Tu<D> {
    Tu::new(move |z| {
        Ok(match (a.apply(z)?, b.apply(z)?) {
            (Some(x), Some(y)) => Some(x.append(y)),
            (x, None) => x,
            (None, y) => y,
        })
    })
}

pub fn choice_tu<D: 'static>(a: Tu<D>, b: Tu<D>) -> Tu<D> {
    Tu::new(move |z| match a.apply(z)? {
        Some(d) => Ok(Some(d)),
        None => b.apply(z),
    })
}

// One-layer traversal

fn restore(result: Option<Zipper>, back: fn(&Zipper) -> Option<Zipper>) -> Option<Zipper> {
    result.map(|moved| back(&moved).expect("strategies keep the focus position"))
}

/// Applies `s` to the leftmost child; succeeds unchanged when there is none.
pub fn all_tp_down(s: Tp) -> Tp {
    Tp::new(move |z| match z.down_left() {
        None => Ok(Some(z.clone())),
        Some(child) => Ok(restore(s.apply(&child)?, Zipper::up)),
    })
}

/// Applies `s` to the right sibling; succeeds unchanged when there is none.
pub fn all_tp_right(s: Tp) -> Tp {
    Tp::new(move |z| match z.right() {
        None => Ok(Some(z.clone())),
        Some(sib) => Ok(restore(s.apply(&sib)?, Zipper::left)),
    })
}

pub fn one_tp_down(s: Tp) -> Tp {
    Tp::new(move |z| match z.down_left() {
        None => Ok(None),
        Some(child) => Ok(restore(s.apply(&child)?, Zipper::up)),
    })
}

pub fn one_tp_right(s: Tp) -> Tp {
    Tp::new(move |z| match z.right() {
        None => Ok(None),
        Some(sib) => Ok(restore(s.apply(&sib)?, Zipper::left)),
    })
}

pub fn all_tu_down<D: Monoid + 'static>(s: Tu<D>) -> Tu<D> {
    Tu::new(move |z| match z.down_left() {
        None => Ok(Some(D::empty())),
        Some(child) => s.apply(&child),
    })
}

pub fn all_tu_right<D: Monoid + 'static>(s: Tu<D>) -> Tu<D> {
    Tu::new(move |z| match z.right() {
        None => Ok(Some(D::empty())),
        Some(sib) => s.apply(&sib),
    })
}

pub fn apply_tp(s: &Tp, z: &Zipper) -> TpResult {
    s.apply(z)
}

pub fn apply_tu<D: 'static>(s: &Tu<D>, z: &Zipper) -> TuResult<D> {
    s.apply(z)
}
