//! Dynamically typed tree values and the reflection contract that maps typed
//! ASTs onto them.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Constructor name carried by every leaf tag.
pub const LEAF_CTOR: &str = "leaf";

/// Identifies one constructor of one nominal type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConstructorTag {
    pub type_name: &'static str,
    pub ctor_name: &'static str,
    pub arity: usize,
}

impl ConstructorTag {
    pub const fn new(type_name: &'static str, ctor_name: &'static str, arity: usize) -> Self {
        ConstructorTag {
            type_name,
            ctor_name,
            arity,
        }
    }

    pub const fn leaf(type_name: &'static str) -> Self {
        ConstructorTag::new(type_name, LEAF_CTOR, 0)
    }

    pub fn is_leaf(&self) -> bool {
        self.ctor_name == LEAF_CTOR
    }

    /// `(type_name, ctor_name)`, handy for `match`-based dispatch.
    pub fn key(&self) -> (&'static str, &'static str) {
        (self.type_name, self.ctor_name)
    }
}

impl fmt::Display for ConstructorTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.type_name, self.ctor_name)
    }
}

/// Field types of one constructor, by type name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Signature {
    pub ctor_name: &'static str,
    pub fields: &'static [&'static str],
}

impl Signature {
    pub const fn new(ctor_name: &'static str, fields: &'static [&'static str]) -> Self {
        Signature { ctor_name, fields }
    }

    pub fn tag(&self, type_name: &'static str) -> ConstructorTag {
        ConstructorTag::new(type_name, self.ctor_name, self.fields.len())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReflectError {
    #[error("type `{0}` is not registered")]
    Unregistered(String),
    #[error("type `{type_name}` has no constructor `{ctor_name}`")]
    UnknownConstructor { type_name: String, ctor_name: String },
    #[error("expected a value of type `{expected}`, found `{found}`")]
    TypeMismatch { expected: String, found: String },
    #[error("constructor {tag} expects {expected} children, got {found}")]
    Arity {
        tag: String,
        expected: usize,
        found: usize,
    },
    #[error("malformed AST document: {0}")]
    Format(String),
}

/// Primitive payloads. They are navigable zero-arity nodes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Leaf {
    Str(String),
    Int(i64),
    Bool(bool),
}

impl Leaf {
    pub fn type_name(&self) -> &'static str {
        match self {
            Leaf::Str(_) => "String",
            Leaf::Int(_) => "Int",
            Leaf::Bool(_) => "Bool",
        }
    }

    /// Kind string used by the structured AST format.
    pub fn kind(&self) -> &'static str {
        match self {
            Leaf::Str(_) => "string",
            Leaf::Int(_) => "int",
            Leaf::Bool(_) => "bool",
        }
    }
}

enum Node {
    Branch { tag: ConstructorTag, children: Vec<Dyn> },
    Leaf(Leaf),
}

/// An immutable, dynamically typed tree value.
///
/// The runtime type identity is the tag's `type_name`; cloning is cheap.
#[derive(Clone)]
pub struct Dyn(Arc<Node>);

impl Dyn {
    /// Builds a constructor node without checking `children` against any
    /// signature (see [`crate::zipper::Language::rebuild`] for the checked form).
    pub fn node(tag: ConstructorTag, children: Vec<Dyn>) -> Dyn {
        debug_assert_eq!(tag.arity, children.len(), "arity mismatch for {tag}");
        Dyn(Arc::new(Node::Branch { tag, children }))
    }

    pub fn leaf(value: Leaf) -> Dyn {
        Dyn(Arc::new(Node::Leaf(value)))
    }

    pub fn from_term<T: Term>(value: &T) -> Dyn {
        value.to_dyn()
    }

    pub fn tag(&self) -> ConstructorTag {
        match &*self.0 {
            Node::Branch { tag, .. } => *tag,
            Node::Leaf(l) => ConstructorTag::leaf(l.type_name()),
        }
    }

    pub fn type_name(&self) -> &'static str {
        self.tag().type_name
    }

    pub fn children(&self) -> &[Dyn] {
        match &*self.0 {
            Node::Branch { children, .. } => children,
            Node::Leaf(_) => &[],
        }
    }

    pub fn as_leaf(&self) -> Option<&Leaf> {
        match &*self.0 {
            Node::Leaf(l) => Some(l),
            Node::Branch { .. } => None,
        }
    }

    pub fn is<T: Term>(&self) -> bool {
        self.type_name() == T::TYPE_NAME
    }

    /// Decodes the value as `T`; fails iff the runtime type is not `T`.
    pub fn cast<T: Term>(&self) -> Option<T> {
        if self.is::<T>() {
            T::from_dyn(self).ok()
        } else {
            None
        }
    }

    pub fn try_cast<T: Term>(&self) -> Result<T, ReflectError> {
        T::from_dyn(self)
    }

    /// Number of nodes, leaves included.
    pub fn size(&self) -> usize {
        1 + self.children().iter().map(Dyn::size).sum::<usize>()
    }

    /// Preorder list of tags.
    pub fn preorder_tags(&self) -> Vec<ConstructorTag> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(d) = stack.pop() {
            out.push(d.tag());
            stack.extend(d.children().iter().rev());
        }
        out
    }

    pub fn ptr_eq(&self, other: &Dyn) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }
}

impl PartialEq for Dyn {
    fn eq(&self, other: &Dyn) -> bool {
        if self.ptr_eq(other) {
            return true;
        }
        match (&*self.0, &*other.0) {
            (Node::Leaf(a), Node::Leaf(b)) => a == b,
            (
                Node::Branch { tag: ta, children: ca },
                Node::Branch { tag: tb, children: cb },
            ) => ta == tb && ca == cb,
            _ => false,
        }
    }
}

impl Eq for Dyn {}

impl fmt::Debug for Dyn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            Node::Leaf(Leaf::Str(s)) => write!(f, "{s:?}"),
            Node::Leaf(Leaf::Int(n)) => write!(f, "{n}"),
            Node::Leaf(Leaf::Bool(b)) => write!(f, "{b}"),
            Node::Branch { tag, children } if children.is_empty() => {
                write!(f, "{}", tag.ctor_name)
            }
            Node::Branch { tag, children } => {
                write!(f, "({}", tag.ctor_name)?;
                for c in children {
                    write!(f, " {c:?}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// Reflection contract for a nominal AST type.
///
/// `rebuild(tag(v), children(v))` must reproduce `v`.
pub trait Term: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    const TYPE_NAME: &'static str;

    /// Every constructor of the type, in declaration order.
    fn signatures() -> &'static [Signature];

    fn tag(&self) -> ConstructorTag;

    fn children(&self) -> Vec<Dyn>;

    fn rebuild(tag: &ConstructorTag, children: &[Dyn]) -> Result<Self, ReflectError>;

    fn to_dyn(&self) -> Dyn {
        Dyn::node(self.tag(), self.children())
    }

    fn from_dyn(d: &Dyn) -> Result<Self, ReflectError> {
        expect_type::<Self>(d)?;
        Self::rebuild(&d.tag(), d.children())
    }
}

fn expect_type<T: Term>(d: &Dyn) -> Result<(), ReflectError> {
    if d.type_name() == T::TYPE_NAME {
        Ok(())
    } else {
        Err(ReflectError::TypeMismatch {
            expected: T::TYPE_NAME.to_string(),
            found: d.type_name().to_string(),
        })
    }
}

/// Checks the child count of `tag` and returns the children as a fixed array.
pub fn expect_children<'a, const N: usize>(
    tag: &ConstructorTag,
    children: &'a [Dyn],
) -> Result<&'a [Dyn; N], ReflectError> {
    children.try_into().map_err(|_| ReflectError::Arity {
        tag: tag.to_string(),
        expected: N,
        found: children.len(),
    })
}

pub fn unknown_ctor<T: Term>(tag: &ConstructorTag) -> ReflectError {
    ReflectError::UnknownConstructor {
        type_name: T::TYPE_NAME.to_string(),
        ctor_name: tag.ctor_name.to_string(),
    }
}

const LEAF_SIGS: &[Signature] = &[Signature::new(LEAF_CTOR, &[])];

macro_rules! leaf_term {
    ($ty:ty, $name:literal, $variant:ident) => {
        impl Term for $ty {
            const TYPE_NAME: &'static str = $name;

            fn signatures() -> &'static [Signature] {
                LEAF_SIGS
            }

            fn tag(&self) -> ConstructorTag {
                ConstructorTag::leaf($name)
            }

            fn children(&self) -> Vec<Dyn> {
                Vec::new()
            }

            fn rebuild(tag: &ConstructorTag, _children: &[Dyn]) -> Result<Self, ReflectError> {
                Err(ReflectError::TypeMismatch {
                    expected: format!("{} leaf payload", $name),
                    found: tag.to_string(),
                })
            }

            fn to_dyn(&self) -> Dyn {
                Dyn::leaf(Leaf::$variant(self.clone()))
            }

            fn from_dyn(d: &Dyn) -> Result<Self, ReflectError> {
                match d.as_leaf() {
                    Some(Leaf::$variant(v)) => Ok(v.clone()),
                    _ => Err(ReflectError::TypeMismatch {
                        expected: $name.to_string(),
                        found: d.type_name().to_string(),
                    }),
                }
            }
        }
    };
}

leaf_term!(String, "String", Str);
leaf_term!(i64, "Int", Int);
leaf_term!(bool, "Bool", Bool);
