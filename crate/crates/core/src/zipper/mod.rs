//! Generic zipper over [`Dyn`] trees.
//!
//! A [`Zipper`] is a focused subtree plus the chain of [`Context`] frames
//! leading back to the root. Frames keep the focus's siblings, so moving
//! around is cheap and the parent is only rebuilt when going `up`.

mod language;
mod term;

use std::sync::Arc;

use thiserror::Error;

pub use language::{AstDoc, Language};
pub use term::{
    expect_children, unknown_ctor, ConstructorTag, Dyn, Leaf, ReflectError, Signature, Term,
    LEAF_CTOR,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZipperError {
    #[error("child index {index} out of range for {tag} (arity {arity}); indices start at 1")]
    ChildIndex {
        index: usize,
        arity: usize,
        tag: ConstructorTag,
    },
    #[error("focus is the root and has no parent")]
    AtRoot,
    #[error("no sibling {distance} step(s) to the {side}")]
    NoSibling { side: &'static str, distance: usize },
    #[error("transformation changed the focus type from `{from}` to `{to}`")]
    TypeChanged {
        from: &'static str,
        to: &'static str,
    },
    #[error(transparent)]
    Reflect(#[from] ReflectError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    DownLeft,
    DownRight,
    Left,
    Right,
    Up,
}

/// One step of the path: the parent constructor with the focus's siblings.
#[derive(Debug, Clone, PartialEq)]
pub struct Context {
    parent_tag: ConstructorTag,
    /// Siblings left of the focus, in source order (nearest last).
    left: Vec<Dyn>,
    /// Siblings right of the focus, in source order (nearest first).
    right: Vec<Dyn>,
}

impl Context {
    pub fn parent_tag(&self) -> ConstructorTag {
        self.parent_tag
    }

    /// Left siblings, nearest first.
    pub fn left_rev(&self) -> impl Iterator<Item = &Dyn> {
        self.left.iter().rev()
    }

    /// Right siblings, nearest first.
    pub fn right(&self) -> impl Iterator<Item = &Dyn> {
        self.right.iter()
    }

    /// 0-based index of the hole among the parent's children.
    pub fn index(&self) -> usize {
        self.left.len()
    }

    fn plug(&self, focus: Dyn) -> Dyn {
        let mut children = Vec::with_capacity(self.parent_tag.arity);
        children.extend(self.left.iter().cloned());
        children.push(focus);
        children.extend(self.right.iter().cloned());
        Dyn::node(self.parent_tag, children)
    }
}

#[derive(Debug)]
struct Frame {
    ctx: Context,
    up: Option<Arc<Frame>>,
}

/// A focused position inside an immutable tree.
#[derive(Clone)]
pub struct Zipper {
    focus: Dyn,
    path: Option<Arc<Frame>>,
}

impl Zipper {
    pub fn new(root: Dyn) -> Zipper {
        Zipper {
            focus: root,
            path: None,
        }
    }

    pub fn from_term<T: Term>(root: &T) -> Zipper {
        Zipper::new(root.to_dyn())
    }

    pub fn focus(&self) -> &Dyn {
        &self.focus
    }

    pub fn is_root(&self) -> bool {
        self.path.is_none()
    }

    /// Innermost frame first.
    pub fn path(&self) -> impl Iterator<Item = &Context> {
        std::iter::successors(self.path.as_deref(), |f| f.up.as_deref()).map(|f| &f.ctx)
    }

    pub fn depth(&self) -> usize {
        self.path().count()
    }

    /// 0-based child indices from the root down to the focus.
    pub fn position(&self) -> Vec<usize> {
        let mut pos: Vec<usize> = self.path().map(Context::index).collect();
        pos.reverse();
        pos
    }

    /// Plugs the focus back through every frame and returns the root.
    pub fn to_root(&self) -> Dyn {
        self.path()
            .fold(self.focus.clone(), |focus, ctx| ctx.plug(focus))
    }

    pub fn root_as<T: Term>(&self) -> Option<T> {
        self.to_root().cast()
    }

    pub fn get_hole<T: Term>(&self) -> Option<T> {
        self.focus.cast()
    }

    pub fn tag(&self) -> ConstructorTag {
        self.focus.tag()
    }

    pub fn navigate(&self, dir: Direction) -> Option<Zipper> {
        match dir {
            Direction::DownLeft => self.down_left(),
            Direction::DownRight => self.down_right(),
            Direction::Left => self.left(),
            Direction::Right => self.right(),
            Direction::Up => self.up(),
        }
    }

    fn descend(&self, index: usize) -> Option<Zipper> {
        let children = self.focus.children();
        let focus = children.get(index)?.clone();
        let ctx = Context {
            parent_tag: self.focus.tag(),
            left: children[..index].to_vec(),
            right: children[index + 1..].to_vec(),
        };
        Some(Zipper {
            focus,
            path: Some(Arc::new(Frame {
                ctx,
                up: self.path.clone(),
            })),
        })
    }

    pub fn down_left(&self) -> Option<Zipper> {
        self.descend(0)
    }

    pub fn down_right(&self) -> Option<Zipper> {
        let n = self.focus.children().len();
        n.checked_sub(1).and_then(|i| self.descend(i))
    }

    pub fn up(&self) -> Option<Zipper> {
        let frame = self.path.as_deref()?;
        Some(Zipper {
            focus: frame.ctx.plug(self.focus.clone()),
            path: frame.up.clone(),
        })
    }

    pub fn right(&self) -> Option<Zipper> {
        let frame = self.path.as_deref()?;
        let (next, rest) = frame.ctx.right.split_first()?;
        let mut left = frame.ctx.left.clone();
        left.push(self.focus.clone());
        Some(self.with_frame(next.clone(), left, rest.to_vec(), frame))
    }

    pub fn left(&self) -> Option<Zipper> {
        let frame = self.path.as_deref()?;
        let (prev, rest) = frame.ctx.left.split_last()?;
        let mut right = Vec::with_capacity(frame.ctx.right.len() + 1);
        right.push(self.focus.clone());
        right.extend(frame.ctx.right.iter().cloned());
        Some(self.with_frame(prev.clone(), rest.to_vec(), right, frame))
    }

    fn with_frame(&self, focus: Dyn, left: Vec<Dyn>, right: Vec<Dyn>, frame: &Frame) -> Zipper {
        Zipper {
            focus,
            path: Some(Arc::new(Frame {
                ctx: Context {
                    parent_tag: frame.ctx.parent_tag,
                    left,
                    right,
                },
                up: frame.up.clone(),
            })),
        }
    }

    /// Replaces the focus with `f(focus)`; `Ok(None)` when `f` declines.
    ///
    /// `f` must keep the runtime type of the focus.
    pub fn trans_m<F>(&self, f: F) -> Result<Option<Zipper>, ZipperError>
    where
        F: FnOnce(&Dyn) -> Option<Dyn>,
    {
        match f(&self.focus) {
            None => Ok(None),
            Some(new) => self.replace(new).map(Some),
        }
    }

    pub fn trans<F>(&self, f: F) -> Result<Zipper, ZipperError>
    where
        F: FnOnce(&Dyn) -> Dyn,
    {
        self.replace(f(&self.focus))
    }

    /// Swaps in a new focus of the same type.
    pub fn replace(&self, new: Dyn) -> Result<Zipper, ZipperError> {
        let (from, to) = (self.focus.type_name(), new.type_name());
        if from != to {
            return Err(ZipperError::TypeChanged { from, to });
        }
        Ok(Zipper {
            focus: new,
            path: self.path.clone(),
        })
    }

    /// The `i`-th child, counting from 1 and including leaf payloads.
    pub fn child(&self, i: usize) -> Result<Zipper, ZipperError> {
        let arity = self.focus.children().len();
        if i == 0 || i > arity {
            return Err(ZipperError::ChildIndex {
                index: i,
                arity,
                tag: self.focus.tag(),
            });
        }
        Ok(self.descend(i - 1).expect("index checked"))
    }

    pub fn parent(&self) -> Result<Zipper, ZipperError> {
        self.up().ok_or(ZipperError::AtRoot)
    }

    /// The sibling `i` positions to the left.
    pub fn sib_left(&self, i: usize) -> Result<Zipper, ZipperError> {
        self.sibling(i, "left", Zipper::left)
    }

    /// The sibling `i` positions to the right.
    pub fn sib_right(&self, i: usize) -> Result<Zipper, ZipperError> {
        self.sibling(i, "right", Zipper::right)
    }

    fn sibling(
        &self,
        distance: usize,
        side: &'static str,
        step: fn(&Zipper) -> Option<Zipper>,
    ) -> Result<Zipper, ZipperError> {
        if self.is_root() {
            return Err(ZipperError::AtRoot);
        }
        let mut z = self.clone();
        for _ in 0..distance {
            z = step(&z).ok_or(ZipperError::NoSibling { side, distance })?;
        }
        Ok(z)
    }

    /// Same tree and same focus position.
    pub fn same_position(&self, other: &Zipper) -> bool {
        self.position() == other.position()
    }
}

impl PartialEq for Zipper {
    /// Equal focus, equal position and equal tree.
    fn eq(&self, other: &Zipper) -> bool {
        self.focus == other.focus
            && self.position() == other.position()
            && self.to_root() == other.to_root()
    }
}

impl std::fmt::Debug for Zipper {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Zipper")
            .field("position", &self.position())
            .field("focus", &self.focus)
            .finish()
    }
}

pub fn to_zipper<T: Term>(root: &T) -> Zipper {
    Zipper::from_term(root)
}

pub fn from_zipper(z: &Zipper) -> Dyn {
    z.to_root()
}
