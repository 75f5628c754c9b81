//! Attribute grammars as plain functions of a zipper.
//!
//! An attribute is any `Fn(&Zipper) -> Result<A, AgError>`; equations dispatch
//! on [`constructor_of`] and move around with [`child`], [`parent`],
//! [`sib_left`] and [`sib_right`]. Nothing is cached, attributes recompute on
//! every call.

use std::sync::Arc;

use thiserror::Error;

use crate::zipper::{ConstructorTag, ReflectError, Zipper, ZipperError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AgError {
    #[error(transparent)]
    Navigation(#[from] ZipperError),
    #[error(transparent)]
    Reflect(#[from] ReflectError),
    #[error("attribute `{attribute}` has no equation for {tag}")]
    NoEquation {
        attribute: &'static str,
        tag: ConstructorTag,
    },
}

impl AgError {
    pub fn no_equation(attribute: &'static str, z: &Zipper) -> AgError {
        AgError::NoEquation {
            attribute,
            tag: z.tag(),
        }
    }
}

pub type AgResult<A> = Result<A, AgError>;

/// A first-class attribute.
pub type AgTree<A> = Arc<dyn Fn(&Zipper) -> AgResult<A> + Send + Sync>;

pub fn attribute<A, F>(f: F) -> AgTree<A>
where
    F: Fn(&Zipper) -> AgResult<A> + Send + Sync + 'static,
{
    Arc::new(f)
}

/// Tag of the focused constructor.
pub fn constructor_of(z: &Zipper) -> ConstructorTag {
    z.tag()
}

/// The `i`-th child, 1-based.
pub fn child(z: &Zipper, i: usize) -> AgResult<Zipper> {
    Ok(z.child(i)?)
}

pub fn parent(z: &Zipper) -> AgResult<Zipper> {
    Ok(z.parent()?)
}

pub fn sib_left(z: &Zipper, i: usize) -> AgResult<Zipper> {
    Ok(z.sib_left(i)?)
}

pub fn sib_right(z: &Zipper, i: usize) -> AgResult<Zipper> {
    Ok(z.sib_right(i)?)
}
