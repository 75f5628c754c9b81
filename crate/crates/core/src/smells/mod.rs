//! Smell elimination for a small functional expression language.
//!
//! | rule | rewrites |
//! |------|----------|
//! | [`join_list`] | `[h] ++ t -> h : t` |
//! | [`null_list`] | `length x == 0`, `0 == length x`, `x == []`, `[] == x` `-> null x` |
//! | [`redundant_boolean`] | `x == True`, `True == x -> x`; `x == False`, `False == x -> not x` |
//! | [`redundant_if`] | `if x then True else False -> x`; `if x then False else True -> not x` |

mod ast;
mod syntax;

pub use ast::{MExp, Op};
pub use syntax::{parse_m, pretty_m};

use crate::strategies::{apply_tp, fail_tp, innermost, Fuel, Schedule, StrategyError, Tp};
use crate::zipper::{Language, Zipper};

/// Registry of the expression AST types.
pub fn language() -> Language {
    Language::new("smells")
        .register::<MExp>()
        .register::<Op>()
        .register::<Vec<MExp>>()
}

fn not(e: MExp) -> MExp {
    MExp::call("not", e)
}

fn null(e: MExp) -> MExp {
    MExp::call("null", e)
}

/// `[h] ++ t` becomes `h : t`, for any `t`.
pub fn join_list(e: MExp) -> Option<MExp> {
    match e {
        MExp::Infix(Op::Append, l, t) => match *l {
            MExp::ListLit(mut xs) if xs.len() == 1 => Some(MExp::Infix(Op::Cons, Box::new(xs.remove(0)), t)),
            _ => None,
        },
        _ => None,
    }
}

/// Emptiness tests written as comparisons become `null x`.
pub fn null_list(e: MExp) -> Option<MExp> {
    let MExp::Infix(Op::Eq, l, r) = e else {
        return None;
    };
    match (*l, *r) {
        (MExp::Call(f, a), MExp::IntLit(0)) if f == "length" => Some(null(*a)),
        (MExp::IntLit(0), MExp::Call(f, a)) if f == "length" => Some(null(*a)),
        (a, MExp::ListLit(xs)) if xs.is_empty() => Some(null(a)),
        (MExp::ListLit(xs), a) if xs.is_empty() => Some(null(a)),
        _ => None,
    }
}

/// Comparisons against a boolean literal.
pub fn redundant_boolean(e: MExp) -> Option<MExp> {
    let MExp::Infix(Op::Eq, l, r) = e else {
        return None;
    };
    match (*l, *r) {
        (MExp::BoolLit(true), a) | (a, MExp::BoolLit(true)) => Some(a),
        (MExp::BoolLit(false), a) | (a, MExp::BoolLit(false)) => Some(not(a)),
        _ => None,
    }
}

/// Conditionals that only reproduce or negate their condition.
pub fn redundant_if(e: MExp) -> Option<MExp> {
    let MExp::If(c, t, f) = e else {
        return None;
    };
    match (*t, *f) {
        (MExp::BoolLit(true), MExp::BoolLit(false)) => Some(*c),
        (MExp::BoolLit(false), MExp::BoolLit(true)) => Some(not(*c)),
        _ => None,
    }
}

/// The four rules as one failing step; later extensions are tried first,
/// so `redundant_if` has the highest priority and `join_list` the lowest.
pub fn smell_step() -> Tp {
    fail_tp()
        .adhoc(join_list)
        .adhoc(null_list)
        .adhoc(redundant_boolean)
        .adhoc(redundant_if)
}

/// Innermost normalization under the four rules.
pub fn smell_elim(z: &Zipper, fuel: Fuel) -> Result<Zipper, StrategyError> {
    Ok(apply_tp(&innermost(smell_step(), fuel), z)?.unwrap_or_else(|| z.clone()))
}

/// The four rules driven by `schedule` over a whole expression.
pub fn fix(e: &MExp, schedule: Schedule, fuel: Fuel) -> Result<MExp, StrategyError> {
    let z = Zipper::from_term(e);
    let out = apply_tp(&schedule.strategy(smell_step(), fuel), &z)?.unwrap_or(z);
    Ok(out.root_as().expect("rules map expressions to expressions"))
}
