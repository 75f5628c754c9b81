//! Random Let programs and smell-language expressions.
//!
//! Let programs are generated as name-free shapes and then realized, either
//! with names from a small pool (so duplicates and unbound uses occur) or
//! with fresh names and references only to already-defined names (so the
//! program is well scoped, acyclic and free of shadowing).

use proptest::prelude::*;
use zipstrat::letlang::{Decl, Exp, Let, List, Root};
use zipstrat::smells::{MExp, Op};

#[derive(Debug, Clone)]
pub enum ShapeExp {
    Add(Box<ShapeExp>, Box<ShapeExp>),
    Sub(Box<ShapeExp>, Box<ShapeExp>),
    Neg(Box<ShapeExp>),
    Var(usize),
    Const(i64),
}

#[derive(Debug, Clone)]
pub enum ShapeDecl {
    Assign(ShapeExp),
    Nested(ShapeBlock),
}

#[derive(Debug, Clone)]
pub struct ShapeBlock {
    pub decls: Vec<(usize, ShapeDecl)>,
    pub body: ShapeExp,
    pub rotate: usize,
}

/// Expressions of depth at most `depth`.
pub fn shape_exp(depth: u32) -> BoxedStrategy<ShapeExp> {
    let leaf = prop_oneof![
        2 => any::<usize>().prop_map(ShapeExp::Var),
        1 => (-3i64..=9).prop_map(ShapeExp::Const),
        1 => Just(ShapeExp::Const(0)),
    ];
    leaf.prop_recursive(depth, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| ShapeExp::Add(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| ShapeExp::Sub(Box::new(a), Box::new(b))),
            inner.prop_map(|a| ShapeExp::Neg(Box::new(a))),
        ]
    })
    .boxed()
}

/// Blocks nested at most `nesting` levels below this one.
pub fn shape_block(nesting: u32, exp_depth: u32) -> BoxedStrategy<ShapeBlock> {
    let decl = if nesting == 0 {
        shape_exp(exp_depth).prop_map(ShapeDecl::Assign).boxed()
    } else {
        prop_oneof![
            3 => shape_exp(exp_depth).prop_map(ShapeDecl::Assign),
            1 => shape_block(nesting - 1, exp_depth).prop_map(ShapeDecl::Nested),
        ]
        .boxed()
    };
    (
        prop::collection::vec((any::<usize>(), decl), 1..=4),
        shape_exp(exp_depth),
        any::<usize>(),
    )
        .prop_map(|(decls, body, rotate)| ShapeBlock { decls, body, rotate })
        .boxed()
}

const DECL_POOL: &[&str] = &["a", "b", "c", "d"];
const USE_POOL: &[&str] = &["a", "b", "c", "d", "z"];

fn pooled_exp(e: &ShapeExp) -> Exp {
    match e {
        ShapeExp::Add(a, b) => Exp::add(pooled_exp(a), pooled_exp(b)),
        ShapeExp::Sub(a, b) => Exp::sub(pooled_exp(a), pooled_exp(b)),
        ShapeExp::Neg(a) => Exp::neg(pooled_exp(a)),
        ShapeExp::Var(i) => Exp::var(USE_POOL[i % USE_POOL.len()]),
        ShapeExp::Const(n) => Exp::Const(*n),
    }
}

fn pooled_block(b: &ShapeBlock) -> Let {
    let decls = b.decls.iter().map(|(n, d)| {
        let name = DECL_POOL[n % DECL_POOL.len()].to_string();
        match d {
            ShapeDecl::Assign(e) => Decl::Assign(name, pooled_exp(e)),
            ShapeDecl::Nested(inner) => Decl::Nested(name, pooled_block(inner)),
        }
    });
    Let::new(List::from_decls(decls.collect::<Vec<_>>()), pooled_exp(&b.body))
}

struct Fresh {
    next: usize,
}

impl Fresh {
    fn name(&mut self) -> String {
        self.next += 1;
        format!("v{}", self.next)
    }
}

fn scoped_exp(e: &ShapeExp, visible: &[String]) -> Exp {
    match e {
        ShapeExp::Add(a, b) => Exp::add(scoped_exp(a, visible), scoped_exp(b, visible)),
        ShapeExp::Sub(a, b) => Exp::sub(scoped_exp(a, visible), scoped_exp(b, visible)),
        ShapeExp::Neg(a) => Exp::neg(scoped_exp(a, visible)),
        ShapeExp::Var(i) if !visible.is_empty() => Exp::Var(visible[i % visible.len()].clone()),
        ShapeExp::Var(i) => Exp::Const((*i % 7) as i64),
        ShapeExp::Const(n) => Exp::Const(*n),
    }
}

/// Each declaration may use names defined before it, in its own block or
/// (for nested blocks) in enclosing blocks; the block is then rotated so
/// that some uses precede their definitions.
fn scoped_block(b: &ShapeBlock, outer: &[String], fresh: &mut Fresh) -> Let {
    let mut visible = outer.to_vec();
    let mut decls = Vec::new();
    for (_, d) in &b.decls {
        let name = fresh.name();
        let decl = match d {
            ShapeDecl::Assign(e) => Decl::Assign(name.clone(), scoped_exp(e, &visible)),
            ShapeDecl::Nested(inner) => Decl::Nested(name.clone(), scoped_block(inner, &visible, fresh)),
        };
        decls.push(decl);
        visible.push(name);
    }
    let k = b.rotate % decls.len();
    decls.rotate_left(k);
    let body = scoped_exp(&b.body, &visible);
    Let::new(List::from_decls(decls), body)
}

/// Programs with possible duplicate declarations and unbound uses.
pub fn any_program() -> impl Strategy<Value = Root> {
    shape_block(2, 3).prop_map(|b| Root(pooled_block(&b)))
}

/// Well-scoped, acyclic programs without shadowing.
pub fn well_scoped_program() -> impl Strategy<Value = Root> {
    shape_block(2, 3).prop_map(|b| Root(scoped_block(&b, &[], &mut Fresh { next: 0 })))
}

/// Expressions of the smell language, of depth at most `depth`, biased
/// towards the smelly patterns.
pub fn mexp(depth: u32) -> BoxedStrategy<MExp> {
    let leaf = prop_oneof![
        3 => prop::sample::select(vec!["x", "y", "xs", "b"]).prop_map(MExp::var),
        1 => prop::sample::select(vec![0i64, 0, 1, -2]).prop_map(MExp::IntLit),
        2 => any::<bool>().prop_map(MExp::BoolLit),
        1 => Just(MExp::ListLit(vec![])),
    ];
    leaf.prop_recursive(depth, 48, 3, |inner| {
        let op = prop::sample::select(vec![Op::Append, Op::Eq, Op::Cons]);
        let f = prop::sample::select(vec!["length", "null", "not", "f"]);
        prop_oneof![
            2 => (op, inner.clone(), inner.clone()).prop_map(|(op, a, b)| MExp::infix(op, a, b)),
            1 => (f, inner.clone()).prop_map(|(f, a)| MExp::call(f, a)),
            1 => (inner.clone(), inner.clone(), inner.clone()).prop_map(|(c, t, e)| MExp::if_(c, t, e)),
            1 => prop::collection::vec(inner.clone(), 0..3).prop_map(MExp::ListLit),
            1 => (inner.clone(), inner.clone()).prop_map(|(h, t)| MExp::infix(Op::Append, MExp::ListLit(vec![h]), t)),
            1 => (inner.clone(), any::<bool>()).prop_map(|(a, flip)| {
                let l = MExp::call("length", a);
                if flip {
                    MExp::infix(Op::Eq, MExp::IntLit(0), l)
                } else {
                    MExp::infix(Op::Eq, l, MExp::IntLit(0))
                }
            }),
            1 => (inner.clone(), any::<bool>(), any::<bool>()).prop_map(|(a, v, flip)| {
                if flip {
                    MExp::infix(Op::Eq, MExp::BoolLit(v), a)
                } else {
                    MExp::infix(Op::Eq, a, MExp::BoolLit(v))
                }
            }),
            1 => (inner, any::<bool>()).prop_map(|(c, v)| MExp::if_(c, MExp::BoolLit(v), MExp::BoolLit(!v))),
        ]
    })
    .boxed()
}
