use crate::zipper::{expect_children, unknown_ctor, ConstructorTag, Dyn, ReflectError, Signature, Term};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Op {
    /// `++`
    Append,
    /// `==`
    Eq,
    /// `:`
    Cons,
}

impl Op {
    pub fn symbol(self) -> &'static str {
        match self {
            Op::Append => "++",
            Op::Eq => "==",
            Op::Cons => ":",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MExp {
    Var(String),
    IntLit(i64),
    BoolLit(bool),
    ListLit(Vec<MExp>),
    Infix(Op, Box<MExp>, Box<MExp>),
    Call(String, Box<MExp>),
    If(Box<MExp>, Box<MExp>, Box<MExp>),
}

impl MExp {
    pub fn var(name: &str) -> MExp {
        MExp::Var(name.to_string())
    }

    pub fn infix(op: Op, a: MExp, b: MExp) -> MExp {
        MExp::Infix(op, Box::new(a), Box::new(b))
    }

    pub fn call(f: &str, arg: MExp) -> MExp {
        MExp::Call(f.to_string(), Box::new(arg))
    }

    pub fn if_(c: MExp, t: MExp, e: MExp) -> MExp {
        MExp::If(Box::new(c), Box::new(t), Box::new(e))
    }

    /// Constructor count, list literal elements included.
    pub fn size(&self) -> usize {
        match self {
            MExp::Var(_) | MExp::IntLit(_) | MExp::BoolLit(_) => 1,
            MExp::ListLit(xs) => 1 + xs.iter().map(MExp::size).sum::<usize>(),
            MExp::Infix(_, a, b) => 1 + a.size() + b.size(),
            MExp::Call(_, a) => 1 + a.size(),
            MExp::If(c, t, e) => 1 + c.size() + t.size() + e.size(),
        }
    }
}

const OP_SIGS: &[Signature] = &[
    Signature::new("Append", &[]),
    Signature::new("Eq", &[]),
    Signature::new("Cons", &[]),
];

const MEXP_SIGS: &[Signature] = &[
    Signature::new("Var", &["String"]),
    Signature::new("IntLit", &["Int"]),
    Signature::new("BoolLit", &["Bool"]),
    Signature::new("ListLit", &["[MExp]"]),
    Signature::new("Infix", &["Op", "MExp", "MExp"]),
    Signature::new("Call", &["String", "MExp"]),
    Signature::new("If", &["MExp", "MExp", "MExp"]),
];

const ELEMS_SIGS: &[Signature] = &[
    Signature::new("Cons", &["MExp", "[MExp]"]),
    Signature::new("Nil", &[]),
];

impl Term for Op {
    const TYPE_NAME: &'static str = "Op";

    fn signatures() -> &'static [Signature] {
        OP_SIGS
    }

    fn tag(&self) -> ConstructorTag {
        OP_SIGS[*self as usize].tag(Self::TYPE_NAME)
    }

    fn children(&self) -> Vec<Dyn> {
        vec![]
    }

    fn rebuild(tag: &ConstructorTag, children: &[Dyn]) -> Result<Self, ReflectError> {
        let op = match tag.ctor_name {
            "Append" => Op::Append,
            "Eq" => Op::Eq,
            "Cons" => Op::Cons,
            _ => return Err(unknown_ctor::<Self>(tag)),
        };
        let [] = expect_children(tag, children)?;
        Ok(op)
    }
}

/// List literal elements, reflected as a cons spine.
impl Term for Vec<MExp> {
    const TYPE_NAME: &'static str = "[MExp]";

    fn signatures() -> &'static [Signature] {
        ELEMS_SIGS
    }

    fn tag(&self) -> ConstructorTag {
        ELEMS_SIGS[usize::from(self.is_empty())].tag(Self::TYPE_NAME)
    }

    fn children(&self) -> Vec<Dyn> {
        match self.split_first() {
            Some((head, tail)) => vec![head.to_dyn(), tail.to_vec().to_dyn()],
            None => vec![],
        }
    }

    fn rebuild(tag: &ConstructorTag, children: &[Dyn]) -> Result<Self, ReflectError> {
        match tag.ctor_name {
            "Cons" => {
                let [head, tail] = expect_children(tag, children)?;
                let mut out = vec![head.try_cast::<MExp>()?];
                out.extend(tail.try_cast::<Vec<MExp>>()?);
                Ok(out)
            }
            "Nil" => {
                let [] = expect_children(tag, children)?;
                Ok(vec![])
            }
            _ => Err(unknown_ctor::<Self>(tag)),
        }
    }
}

impl Term for MExp {
    const TYPE_NAME: &'static str = "MExp";

    fn signatures() -> &'static [Signature] {
        MEXP_SIGS
    }

    fn tag(&self) -> ConstructorTag {
        let i = match self {
            MExp::Var(_) => 0,
            MExp::IntLit(_) => 1,
            MExp::BoolLit(_) => 2,
            MExp::ListLit(_) => 3,
            MExp::Infix(..) => 4,
            MExp::Call(..) => 5,
            MExp::If(..) => 6,
        };
        MEXP_SIGS[i].tag(Self::TYPE_NAME)
    }

    fn children(&self) -> Vec<Dyn> {
        match self {
            MExp::Var(n) => vec![n.to_dyn()],
            MExp::IntLit(n) => vec![n.to_dyn()],
            MExp::BoolLit(b) => vec![b.to_dyn()],
            MExp::ListLit(xs) => vec![xs.to_dyn()],
            MExp::Infix(op, a, b) => vec![op.to_dyn(), a.to_dyn(), b.to_dyn()],
            MExp::Call(f, a) => vec![f.to_dyn(), a.to_dyn()],
            MExp::If(c, t, e) => vec![c.to_dyn(), t.to_dyn(), e.to_dyn()],
        }
    }

    fn rebuild(tag: &ConstructorTag, children: &[Dyn]) -> Result<Self, ReflectError> {
        match tag.ctor_name {
            "Var" => {
                let [n] = expect_children(tag, children)?;
                Ok(MExp::Var(n.try_cast()?))
            }
            "IntLit" => {
                let [n] = expect_children(tag, children)?;
                Ok(MExp::IntLit(n.try_cast()?))
            }
            "BoolLit" => {
                let [b] = expect_children(tag, children)?;
                Ok(MExp::BoolLit(b.try_cast()?))
            }
            "ListLit" => {
                let [xs] = expect_children(tag, children)?;
                Ok(MExp::ListLit(xs.try_cast()?))
            }
            "Infix" => {
                let [op, a, b] = expect_children(tag, children)?;
                Ok(MExp::infix(op.try_cast()?, a.try_cast()?, b.try_cast()?))
            }
            "Call" => {
                let [f, a] = expect_children(tag, children)?;
                Ok(MExp::Call(f.try_cast()?, Box::new(a.try_cast()?)))
            }
            "If" => {
                let [c, t, e] = expect_children(tag, children)?;
                Ok(MExp::if_(c.try_cast()?, t.try_cast()?, e.try_cast()?))
            }
            _ => Err(unknown_ctor::<Self>(tag)),
        }
    }
}
