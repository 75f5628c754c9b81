//! Reference evaluator, independent of zippers and strategies.

use std::collections::HashMap;

use super::ast::{Exp, Let, List, Root};

enum Def<'a> {
    Assign(&'a Exp, usize),
    Block(&'a Exp, usize),
}

#[derive(Clone, Copy)]
enum State {
    Pending,
    Running,
    Done(i64),
}

struct Scope {
    parent: Option<usize>,
    names: HashMap<String, usize>,
}

struct Program<'a> {
    scopes: Vec<Scope>,
    defs: Vec<Def<'a>>,
    state: Vec<State>,
}

impl<'a> Program<'a> {
    fn block(&mut self, l: &'a Let, parent: Option<usize>) -> Option<usize> {
        let scope = self.scopes.len();
        self.scopes.push(Scope {
            parent,
            names: HashMap::new(),
        });
        let mut cur = &l.decls;
        loop {
            let (name, def, rest) = match cur {
                List::Assign(n, e, rest) => (n, Def::Assign(e, scope), rest),
                List::NestedLet(n, inner, rest) => {
                    let s = self.block(inner, Some(scope))?;
                    (n, Def::Block(&inner.body, s), rest)
                }
                List::EmptyList => return Some(scope),
            };
            let id = self.defs.len();
            self.defs.push(def);
            self.state.push(State::Pending);
            if self.scopes[scope].names.insert(name.clone(), id).is_some() {
                return None;
            }
            cur = rest;
        }
    }

    fn resolve(&self, name: &str, mut scope: usize) -> Option<usize> {
        loop {
            let s = &self.scopes[scope];
            if let Some(&id) = s.names.get(name) {
                return Some(id);
            }
            scope = s.parent?;
        }
    }

    fn def(&mut self, id: usize) -> Option<i64> {
        match self.state[id] {
            State::Done(v) => return Some(v),
            State::Running => return None,
            State::Pending => {}
        }
        self.state[id] = State::Running;
        let v = match self.defs[id] {
            Def::Assign(e, s) | Def::Block(e, s) => self.exp(e, s)?,
        };
        self.state[id] = State::Done(v);
        Some(v)
    }

    fn exp(&mut self, e: &Exp, scope: usize) -> Option<i64> {
        match e {
            Exp::Add(a, b) => self.exp(a, scope)?.checked_add(self.exp(b, scope)?),
            Exp::Sub(a, b) => self.exp(a, scope)?.checked_sub(self.exp(b, scope)?),
            Exp::Neg(a) => self.exp(a, scope)?.checked_neg(),
            Exp::Var(x) => {
                let id = self.resolve(x, scope)?;
                self.def(id)
            }
            Exp::Const(n) => Some(*n),
        }
    }
}

/// Value of the program body under lexical scoping, where declarations may
/// refer to later ones in the same block. Every declaration is evaluated.
/// `None` for duplicate declarations in a block, unbound names, cyclic
/// definitions or arithmetic overflow.
pub fn eval(root: &Root) -> Option<i64> {
    let mut p = Program {
        scopes: Vec::new(),
        defs: Vec::new(),
        state: Vec::new(),
    };
    let top = p.block(&root.0, None)?;
    for id in 0..p.defs.len() {
        p.def(id)?;
    }
    p.exp(&root.0.body, top)
}
