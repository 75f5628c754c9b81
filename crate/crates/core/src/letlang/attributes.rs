//! Scope rules of Let as zipper-based attributes, plus the strategic
//! reformulation of the error analysis.

use std::fmt;

use super::ast::{Exp, List};
use crate::ag::{child, constructor_of, parent, AgError, AgResult};
use crate::strategies::{
    apply_tu, fail_tu, full_bu_tu, full_td_tu, StrategyError, Tu,
};
use crate::zipper::Zipper;

/// Declared names paired with their defining positions, most recent first.
#[derive(Clone, Default)]
pub struct Env(Vec<(String, Zipper)>);

impl Env {
    pub fn new() -> Env {
        Env(Vec::new())
    }

    pub fn prepend(&self, name: String, at: Zipper) -> Env {
        let mut entries = Vec::with_capacity(self.0.len() + 1);
        entries.push((name, at));
        entries.extend(self.0.iter().cloned());
        Env(entries)
    }

    /// First (innermost) binding of `name`.
    pub fn lookup(&self, name: &str) -> Option<&Zipper> {
        self.0.iter().find(|(n, _)| n == name).map(|(_, z)| z)
    }

    pub fn names(&self) -> Vec<&str> {
        self.0.iter().map(|(n, _)| n.as_str()).collect()
    }

    pub fn entries(&self) -> &[(String, Zipper)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Debug for Env {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.0.iter().map(|(n, z)| (n, z.position())))
            .finish()
    }
}

/// Name carried by an `Assign`, `NestedLet` or `Var` focus.
pub fn lexeme(z: &Zipper) -> AgResult<String> {
    match constructor_of(z).key() {
        ("List", "Assign") | ("List", "NestedLet") | ("Exp", "Var") => Ok(child(z, 1)?
            .get_hole::<String>()
            .expect("name field is a string leaf")),
        _ => Err(AgError::no_equation("lexeme", z)),
    }
}

/// Bound expression of an `Assign` focus.
pub fn lexeme_assign(z: &Zipper) -> Option<Exp> {
    match constructor_of(z).key() {
        ("List", "Assign") => z.focus().children()[1].cast(),
        _ => None,
    }
}

/// Inherited: names declared so far in the current block, on top of the
/// enclosing environment for nested blocks.
pub fn dcli(t: &Zipper) -> AgResult<Env> {
    match constructor_of(t).key() {
        ("Root", "Root") => Ok(Env::new()),
        ("Let", "Let") => {
            let p = parent(t)?;
            match constructor_of(&p).key() {
                ("Root", "Root") => Ok(Env::new()),
                ("List", "NestedLet") => env(&p),
                _ => Err(AgError::no_equation("dcli", t)),
            }
        }
        _ => {
            let p = parent(t)?;
            match constructor_of(&p).key() {
                ("List", "Assign") | ("List", "NestedLet") => {
                    Ok(dcli(&p)?.prepend(lexeme(&p)?, p))
                }
                ("Let", "Let") => dcli(&p),
                _ => Err(AgError::no_equation("dcli", t)),
            }
        }
    }
}

/// Synthesized: every name of the block, in reverse declaration order.
pub fn dclo(t: &Zipper) -> AgResult<Env> {
    match constructor_of(t).key() {
        ("Root", "Root") | ("Let", "Let") => dclo(&child(t, 1)?),
        ("List", "NestedLet") | ("List", "Assign") => dclo(&child(t, 3)?),
        ("List", "EmptyList") => dcli(t),
        _ => Err(AgError::no_equation("dclo", t)),
    }
}

/// Inherited: the complete environment visible at `t`.
pub fn env(t: &Zipper) -> AgResult<Env> {
    match constructor_of(t).key() {
        ("Root", "Root") | ("Let", "Let") => dclo(t),
        _ => env(&parent(t)?),
    }
}

/// Block nesting level: 0 at the root, +1 per enclosing `Let`.
pub fn lev(t: &Zipper) -> AgResult<i64> {
    match constructor_of(t).key() {
        ("Root", "Root") => Ok(0),
        ("Let", "Let") => Ok(lev(&parent(t)?)? + 1),
        _ => lev(&parent(t)?),
    }
}

/// "Must be in": `[name]` when `name` is not bound in `env`.
pub fn m_b_in(name: &str, env: &Env) -> Vec<String> {
    if env.lookup(name).is_some() {
        vec![]
    } else {
        vec![name.to_string()]
    }
}

/// "Must not be in": `[name]` when `env` already binds `name` at the same
/// nesting level as `at`.
pub fn m_nb_in(name: &str, at: &Zipper, env: &Env) -> AgResult<Vec<String>> {
    let level = lev(at)?;
    for (n, z) in env.entries() {
        if n == name && lev(z)? == level {
            return Ok(vec![name.to_string()]);
        }
    }
    Ok(vec![])
}

/// Scope errors as a synthesized attribute, in source order.
pub fn errors_ag(t: &Zipper) -> AgResult<Vec<String>> {
    let errs = |i: usize| errors_ag(&child(t, i)?);
    match constructor_of(t).key() {
        ("Root", "Root") => errs(1),
        ("Let", "Let") | ("Exp", "Add") | ("Exp", "Sub") => {
            let mut out = errs(1)?;
            out.extend(errs(2)?);
            Ok(out)
        }
        ("Exp", "Neg") => errs(1),
        ("List", "EmptyList") | ("Exp", "Const") => Ok(vec![]),
        ("Exp", "Var") => Ok(m_b_in(&lexeme(t)?, &env(t)?)),
        ("List", "Assign") | ("List", "NestedLet") => {
            let mut out = m_nb_in(&lexeme(t)?, t, &dcli(t)?)?;
            out.extend(errs(2)?);
            out.extend(errs(3)?);
            Ok(out)
        }
        _ => Err(AgError::no_equation("errors", t)),
    }
}

/// Duplicate-declaration check at a declaration node.
pub fn decls(n: &List, z: &Zipper) -> AgResult<Vec<String>> {
    match n {
        List::Assign(..) | List::NestedLet(..) => m_nb_in(&lexeme(z)?, z, &dcli(z)?),
        List::EmptyList => Ok(vec![]),
    }
}

/// Undeclared-use check at an expression node.
pub fn uses(e: &Exp, z: &Zipper) -> AgResult<Vec<String>> {
    match e {
        Exp::Var(_) => Ok(m_b_in(&lexeme(z)?, &env(z)?)),
        _ => Ok(vec![]),
    }
}

fn errors_step() -> Tu<Vec<String>> {
    fail_tu()
        .adhoc_z(|e: Exp, z: &Zipper| uses(&e, z).map(Some))
        .adhoc_z(|n: List, z: &Zipper| decls(&n, z).map(Some))
}

/// Scope errors collected by a top-down type-unifying traversal.
pub fn errors_strat(z: &Zipper) -> Result<Vec<String>, StrategyError> {
    Ok(apply_tu(&full_td_tu(errors_step()), z)?.unwrap_or_default())
}

/// Name declared by an `Assign` or `NestedLet`.
pub fn select(n: &List) -> Vec<String> {
    match n {
        List::Assign(s, _, _) | List::NestedLet(s, _, _) => vec![s.clone()],
        List::EmptyList => vec![],
    }
}

pub fn select_step() -> Tu<Vec<String>> {
    fail_tu().adhoc(|n: List| Some(select(&n)))
}

/// Declared names, preorder.
pub fn names(z: &Zipper) -> Result<Vec<String>, StrategyError> {
    Ok(apply_tu(&full_td_tu(select_step()), z)?.unwrap_or_default())
}

/// Declared names, postorder.
pub fn names_bu(z: &Zipper) -> Result<Vec<String>, StrategyError> {
    Ok(apply_tu(&full_bu_tu(select_step()), z)?.unwrap_or_default())
}
