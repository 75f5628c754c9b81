//! Arithmetic simplification of Let programs.
//!
//! | rule | rewrite |
//! |------|---------|
//! | 1 | `e + 0 -> e` |
//! | 2 | `0 + e -> e` |
//! | 3 | `c1 + c2 -> c1 + c2` (constant folded) |
//! | 4 | `a - b -> a + (-b)` |
//! | 5 | `-(-e) -> e` |
//! | 6 | `-c -> (-c)` (constant folded) |
//! | 7 | `x -> e` when `x` is bound by `x = e` |

use super::ast::{Exp, Root};
use super::attributes::{env, lexeme_assign};
use crate::ag::AgResult;
use crate::strategies::{apply_tp, fail_tp, full_td_tp, id_tp, innermost, Fuel, Schedule, StrategyError, Tp};
use crate::zipper::{to_zipper, Zipper};

/// Rules 1 to 6 at the root of `e`, first match wins. Overflowing constant
/// folds are errors rather than silent wraparound.
pub fn expr(e: Exp) -> Result<Option<Exp>, StrategyError> {
    Ok(match e {
        Exp::Add(a, b) => match (*a, *b) {
            (e, Exp::Const(0)) => Some(e),
            (Exp::Const(0), e) => Some(e),
            (Exp::Const(x), Exp::Const(y)) => Some(Exp::Const(x.checked_add(y).ok_or_else(|| {
                StrategyError::Rule(format!("integer overflow folding {x} + {y}"))
            })?)),
            _ => None,
        },
        Exp::Sub(a, b) => Some(Exp::Add(a, Box::new(Exp::Neg(b)))),
        Exp::Neg(inner) => match *inner {
            Exp::Neg(e) => Some(*e),
            Exp::Const(n) => Some(Exp::Const(n.checked_neg().ok_or_else(|| {
                StrategyError::Rule(format!("integer overflow negating {n}"))
            })?)),
            _ => None,
        },
        Exp::Var(_) | Exp::Const(_) => None,
    })
}

/// Rule 7: a variable bound by an `Assign` is replaced by its expression.
pub fn exp_c(e: Exp, z: &Zipper) -> AgResult<Option<Exp>> {
    match e {
        Exp::Var(x) => Ok(env(z)?.lookup(&x).and_then(lexeme_assign)),
        _ => Ok(None),
    }
}

/// Rules 1 to 6 as a failing step.
pub fn arith_step() -> Tp {
    fail_tp().adhoc(expr)
}

/// Rules 1 to 7 as a failing step; rules 1 to 6 are tried first.
pub fn inline_step() -> Tp {
    fail_tp().adhoc_z(exp_c).adhoc(expr)
}

/// One top-down pass of rules 1 to 6, each node rewritten at most once.
pub fn opt(z: &Zipper) -> Result<Zipper, StrategyError> {
    let s = full_td_tp(id_tp().adhoc(expr));
    Ok(apply_tp(&s, z)?.unwrap_or_else(|| z.clone()))
}

/// Rules 1 to 6 to a fixpoint, innermost first.
pub fn opt_prime(z: &Zipper, fuel: Fuel) -> Result<Zipper, StrategyError> {
    Ok(apply_tp(&innermost(arith_step(), fuel), z)?.unwrap_or_else(|| z.clone()))
}

/// Rules 1 to 7 to a fixpoint, innermost first. `z` must sit inside a tree
/// rooted at [`Root`] so that environments can be computed.
pub fn opt_prime2(z: &Zipper, fuel: Fuel) -> Result<Zipper, StrategyError> {
    Ok(apply_tp(&innermost(inline_step(), fuel), z)?.unwrap_or_else(|| z.clone()))
}

/// Rules 1 to 7 driven by `schedule` over a whole program.
pub fn optimize(root: &Root, schedule: Schedule, fuel: Fuel) -> Result<Root, StrategyError> {
    let z = to_zipper(root);
    let out = apply_tp(&schedule.strategy(inline_step(), fuel), &z)?.unwrap_or(z);
    Ok(out
        .root_as::<Root>()
        .expect("type-preserving rewrite keeps the root a Root"))
}
