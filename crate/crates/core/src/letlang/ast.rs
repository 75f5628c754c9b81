use crate::zipper::{expect_children, unknown_ctor, ConstructorTag, Dyn, ReflectError, Signature, Term};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Root(pub Let);

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Let {
    pub decls: List,
    pub body: Exp,
}

/// Right-nested declaration spine.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum List {
    Assign(String, Box<Exp>, Box<List>),
    NestedLet(String, Box<Let>, Box<List>),
    EmptyList,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Exp {
    Add(Box<Exp>, Box<Exp>),
    Sub(Box<Exp>, Box<Exp>),
    Neg(Box<Exp>),
    Var(String),
    Const(i64),
}

/// One declaration, detached from the spine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decl {
    Assign(String, Exp),
    Nested(String, Let),
}

impl Decl {
    pub fn name(&self) -> &str {
        match self {
            Decl::Assign(n, _) | Decl::Nested(n, _) => n,
        }
    }
}

#[allow(clippy::should_implement_trait)]
impl Exp {
    pub fn add(a: Exp, b: Exp) -> Exp {
        Exp::Add(Box::new(a), Box::new(b))
    }

    pub fn sub(a: Exp, b: Exp) -> Exp {
        Exp::Sub(Box::new(a), Box::new(b))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(e: Exp) -> Exp {
        Exp::Neg(Box::new(e))
    }

    pub fn var(name: &str) -> Exp {
        Exp::Var(name.to_string())
    }

    pub fn size(&self) -> usize {
        match self {
            Exp::Add(a, b) | Exp::Sub(a, b) => 1 + a.size() + b.size(),
            Exp::Neg(e) => 1 + e.size(),
            Exp::Var(_) | Exp::Const(_) => 1,
        }
    }
}

impl List {
    pub fn assign(name: &str, e: Exp, rest: List) -> List {
        List::Assign(name.to_string(), Box::new(e), Box::new(rest))
    }

    pub fn nested(name: &str, l: Let, rest: List) -> List {
        List::NestedLet(name.to_string(), Box::new(l), Box::new(rest))
    }

    /// Builds the spine in the given order.
    pub fn from_decls(decls: impl IntoIterator<Item = Decl, IntoIter: DoubleEndedIterator>) -> List {
        decls.into_iter().rev().fold(List::EmptyList, |rest, d| match d {
            Decl::Assign(n, e) => List::Assign(n, Box::new(e), Box::new(rest)),
            Decl::Nested(n, l) => List::NestedLet(n, Box::new(l), Box::new(rest)),
        })
    }

    pub fn decls(&self) -> Vec<Decl> {
        let mut out = Vec::new();
        let mut cur = self;
        loop {
            match cur {
                List::Assign(n, e, rest) => {
                    out.push(Decl::Assign(n.clone(), (**e).clone()));
                    cur = rest;
                }
                List::NestedLet(n, l, rest) => {
                    out.push(Decl::Nested(n.clone(), (**l).clone()));
                    cur = rest;
                }
                List::EmptyList => return out,
            }
        }
    }
}

impl Let {
    pub fn new(decls: List, body: Exp) -> Let {
        Let { decls, body }
    }
}

const ROOT_SIGS: &[Signature] = &[Signature::new("Root", &["Let"])];
const LET_SIGS: &[Signature] = &[Signature::new("Let", &["List", "Exp"])];
const LIST_SIGS: &[Signature] = &[
    Signature::new("Assign", &["String", "Exp", "List"]),
    Signature::new("NestedLet", &["String", "Let", "List"]),
    Signature::new("EmptyList", &[]),
];
const EXP_SIGS: &[Signature] = &[
    Signature::new("Add", &["Exp", "Exp"]),
    Signature::new("Sub", &["Exp", "Exp"]),
    Signature::new("Neg", &["Exp"]),
    Signature::new("Var", &["String"]),
    Signature::new("Const", &["Int"]),
];

impl Term for Root {
    const TYPE_NAME: &'static str = "Root";

    fn signatures() -> &'static [Signature] {
        ROOT_SIGS
    }

    fn tag(&self) -> ConstructorTag {
        ROOT_SIGS[0].tag(Self::TYPE_NAME)
    }

    fn children(&self) -> Vec<Dyn> {
        vec![self.0.to_dyn()]
    }

    fn rebuild(tag: &ConstructorTag, children: &[Dyn]) -> Result<Self, ReflectError> {
        match tag.ctor_name {
            "Root" => {
                let [l] = expect_children(tag, children)?;
                Ok(Root(l.try_cast()?))
            }
            _ => Err(unknown_ctor::<Self>(tag)),
        }
    }
}

impl Term for Let {
    const TYPE_NAME: &'static str = "Let";

    fn signatures() -> &'static [Signature] {
        LET_SIGS
    }

    fn tag(&self) -> ConstructorTag {
        LET_SIGS[0].tag(Self::TYPE_NAME)
    }

    fn children(&self) -> Vec<Dyn> {
        vec![self.decls.to_dyn(), self.body.to_dyn()]
    }

    fn rebuild(tag: &ConstructorTag, children: &[Dyn]) -> Result<Self, ReflectError> {
        match tag.ctor_name {
            "Let" => {
                let [decls, body] = expect_children(tag, children)?;
                Ok(Let::new(decls.try_cast()?, body.try_cast()?))
            }
            _ => Err(unknown_ctor::<Self>(tag)),
        }
    }
}

impl Term for List {
    const TYPE_NAME: &'static str = "List";

    fn signatures() -> &'static [Signature] {
        LIST_SIGS
    }

    fn tag(&self) -> ConstructorTag {
        let i = match self {
            List::Assign(..) => 0,
            List::NestedLet(..) => 1,
            List::EmptyList => 2,
        };
        LIST_SIGS[i].tag(Self::TYPE_NAME)
    }

    fn children(&self) -> Vec<Dyn> {
        match self {
            List::Assign(n, e, rest) => vec![n.to_dyn(), e.to_dyn(), rest.to_dyn()],
            List::NestedLet(n, l, rest) => vec![n.to_dyn(), l.to_dyn(), rest.to_dyn()],
            List::EmptyList => vec![],
        }
    }

    fn rebuild(tag: &ConstructorTag, children: &[Dyn]) -> Result<Self, ReflectError> {
        match tag.ctor_name {
            "Assign" => {
                let [n, e, rest] = expect_children(tag, children)?;
                Ok(List::Assign(n.try_cast()?, Box::new(e.try_cast()?), Box::new(rest.try_cast()?)))
            }
            "NestedLet" => {
                let [n, l, rest] = expect_children(tag, children)?;
                Ok(List::NestedLet(n.try_cast()?, Box::new(l.try_cast()?), Box::new(rest.try_cast()?)))
            }
            "EmptyList" => {
                let [] = expect_children(tag, children)?;
                Ok(List::EmptyList)
            }
            _ => Err(unknown_ctor::<Self>(tag)),
        }
    }
}

impl Term for Exp {
    const TYPE_NAME: &'static str = "Exp";

    fn signatures() -> &'static [Signature] {
        EXP_SIGS
    }

    fn tag(&self) -> ConstructorTag {
        let i = match self {
            Exp::Add(..) => 0,
            Exp::Sub(..) => 1,
            Exp::Neg(_) => 2,
            Exp::Var(_) => 3,
            Exp::Const(_) => 4,
        };
        EXP_SIGS[i].tag(Self::TYPE_NAME)
    }

    fn children(&self) -> Vec<Dyn> {
        match self {
            Exp::Add(a, b) | Exp::Sub(a, b) => vec![a.to_dyn(), b.to_dyn()],
            Exp::Neg(e) => vec![e.to_dyn()],
            Exp::Var(n) => vec![n.to_dyn()],
            Exp::Const(c) => vec![c.to_dyn()],
        }
    }

    fn rebuild(tag: &ConstructorTag, children: &[Dyn]) -> Result<Self, ReflectError> {
        match tag.ctor_name {
            "Add" => {
                let [a, b] = expect_children(tag, children)?;
                Ok(Exp::add(a.try_cast()?, b.try_cast()?))
            }
            "Sub" => {
                let [a, b] = expect_children(tag, children)?;
                Ok(Exp::sub(a.try_cast()?, b.try_cast()?))
            }
            "Neg" => {
                let [e] = expect_children(tag, children)?;
                Ok(Exp::neg(e.try_cast()?))
            }
            "Var" => {
                let [n] = expect_children(tag, children)?;
                Ok(Exp::Var(n.try_cast()?))
            }
            "Const" => {
                let [c] = expect_children(tag, children)?;
                Ok(Exp::Const(c.try_cast()?))
            }
            _ => Err(unknown_ctor::<Self>(tag)),
        }
    }
}
