//! Per-case property checks shared by the property suites and the
//! acceptance report.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;

use proptest::prelude::*;
use proptest::test_runner::TestCaseError;
use zipstrat::letlang::{self, arith_step, errors_ag, errors_strat, eval, expr, inline_step, Exp, Root};
use zipstrat::smells::{self, MExp, Op};
use zipstrat::strategies::{
    full_bu_tp, full_bu_tu, full_td_tp, full_td_tu, innermost, mono_tp, once_bu_tp, once_td_tp, stop_bu_tp,
    stop_td_tp, Fuel, Schedule, Tp, Tu,
};
use zipstrat::zipper::{from_zipper, to_zipper, Direction, Dyn, Term, Zipper};

use super::oracle;

type Check = Result<(), TestCaseError>;

pub fn errors_agree(root: &Root) -> Check {
    let z = to_zipper(root);
    let ag = errors_ag(&z).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let st = errors_strat(&z).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let expected = oracle::scope_errors(root);
    prop_assert_eq!(&ag, &st, "attribute grammar vs strategy on {}", letlang::pretty(root));
    prop_assert_eq!(&ag, &expected, "attribute grammar vs reference on {}", letlang::pretty(root));
    Ok(())
}

pub fn optimize_all(root: &Root) -> Result<Root, TestCaseError> {
    let out = letlang::opt_prime2(&to_zipper(root), Fuel::limit(1_000_000))
        .map_err(|e| TestCaseError::fail(format!("{e} on {}", letlang::pretty(root))))?;
    out.root_as::<Root>()
        .ok_or_else(|| TestCaseError::fail("optimizer changed the root type"))
}

pub fn semantics_preserved(root: &Root) -> Check {
    let before = eval(root);
    prop_assert!(before.is_some(), "generated program has no value: {}", letlang::pretty(root));
    let optimized = optimize_all(root)?;
    prop_assert_eq!(eval(&optimized), before, "{} became {}", letlang::pretty(root), letlang::pretty(&optimized));
    Ok(())
}

/// Rules 1 to 6 applied innermost leave no redex.
pub fn arith_normal_form(root: &Root) -> Check {
    let out = letlang::opt_prime(&to_zipper(root), Fuel::limit(1_000_000))
        .map_err(|e| TestCaseError::fail(e.to_string()))?;
    let again = once_bu_tp(arith_step()).apply(&out).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert!(again.is_none(), "redex left in {:?}", out.focus());
    Ok(())
}

/// Rules 1 to 7 applied innermost leave no redex.
pub fn full_normal_form(root: &Root) -> Check {
    let out = optimize_all(root)?;
    let z = to_zipper(&out);
    let again = once_bu_tp(inline_step()).apply(&z).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert!(again.is_none(), "redex left in {}", letlang::pretty(&out));
    Ok(())
}

fn bump(e: Exp) -> Option<Exp> {
    match e {
        Exp::Const(n) => Some(Exp::Const(n.wrapping_add(1))),
        _ => None,
    }
}

/// Moves through `d` following `moves` (impossible moves are skipped) and
/// checks the zipper laws at every visited position.
pub fn zipper_laws(d: &Dyn, moves: &[u8]) -> Check {
    let mut z = Zipper::new(d.clone());
    prop_assert_eq!(&from_zipper(&z), d);
    for m in moves {
        let dir = match m % 5 {
            0 => Direction::DownLeft,
            1 => Direction::DownRight,
            2 => Direction::Right,
            3 => Direction::Left,
            _ => Direction::Up,
        };
        if let Some(next) = z.navigate(dir) {
            z = next;
        }
        laws_at(&z, d)?;
    }
    strategies_keep_position(&z)
}

fn laws_at(z: &Zipper, d: &Dyn) -> Check {
    prop_assert_eq!(&z.to_root(), d);
    prop_assert_eq!(oracle::subtree(d, &z.position()), z.focus());
    if let Some(c) = z.down_left() {
        prop_assert_eq!(&c.up().unwrap(), z);
        let mut expected = z.position();
        expected.push(0);
        prop_assert_eq!(c.position(), expected);
    }
    if let Some(c) = z.down_right() {
        prop_assert_eq!(&c.up().unwrap(), z);
        prop_assert_eq!(c.left().is_none(), z.focus().children().len() == 1);
    }
    if let Some(r) = z.right() {
        prop_assert_eq!(&r.left().unwrap(), z);
    }
    if let Some(l) = z.left() {
        prop_assert_eq!(&l.right().unwrap(), z);
    }
    match z.up() {
        Some(p) => {
            let i = *z.position().last().unwrap();
            prop_assert_eq!(&p.child(i + 1).unwrap(), z);
        }
        None => prop_assert!(z.is_root()),
    }
    let same = z.trans(|f| f.clone()).unwrap();
    prop_assert_eq!(&same, z);
    Ok(())
}

fn strategies_keep_position(z: &Zipper) -> Check {
    let step = mono_tp(bump);
    let strategies = [
        full_td_tp(step.clone()),
        full_bu_tp(step.clone()),
        once_td_tp(step.clone()),
        once_bu_tp(step.clone()),
        stop_td_tp(step.clone()),
        stop_bu_tp(step),
        innermost(arith_step(), Fuel::limit(100_000)),
        Schedule::Outermost.strategy(arith_step(), Fuel::limit(100_000)),
    ];
    for s in &strategies {
        if let Some(out) = s.apply(z).map_err(|e| TestCaseError::fail(e.to_string()))? {
            prop_assert_eq!(out.position(), z.position());
            prop_assert_eq!(out.focus().type_name(), z.focus().type_name());
        }
    }
    Ok(())
}

fn tag_collector() -> Tu<Vec<zipstrat::zipper::ConstructorTag>> {
    Tu::new(|z| Ok(Some(vec![z.tag()])))
}

fn postorder(d: &Dyn, out: &mut Vec<zipstrat::zipper::ConstructorTag>) {
    for c in d.children() {
        postorder(c, out);
    }
    out.push(d.tag());
}

pub fn traversal_order(d: &Dyn) -> Check {
    let z = Zipper::new(d.clone());
    let td = full_td_tu(tag_collector()).apply(&z).unwrap().unwrap();
    prop_assert_eq!(td, oracle::tags(d));
    let bu = full_bu_tu(tag_collector()).apply(&z).unwrap().unwrap();
    let mut expected = Vec::new();
    postorder(d, &mut expected);
    prop_assert_eq!(bu, expected);
    Ok(())
}

/// `once_bu_tp(step)` rewrites exactly the leftmost-innermost redex, as
/// located by the reference walk, and nothing else.
pub fn single_rewrite<T: Term>(d: &Dyn, step: Tp, rule: &dyn Fn(T) -> Option<T>) -> Check {
    let z = Zipper::new(d.clone());
    let out = once_bu_tp(step).apply(&z).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let is_redex = |n: &Dyn| n.cast::<T>().is_some_and(|v| rule(v).is_some());
    match oracle::leftmost_innermost(d, &is_redex) {
        None => prop_assert!(out.is_none()),
        Some(p) => {
            let out = out.expect("a redex exists");
            let new = rule(oracle::subtree(d, &p).cast::<T>().unwrap()).unwrap();
            let after = out.to_root();
            prop_assert_eq!(&after, &oracle::replace_at(d, &p, new.to_dyn()));
            let changed = oracle::diff(d, &after);
            prop_assert!(!changed.is_empty());
            prop_assert!(changed.iter().all(|c| c.starts_with(&p)), "{:?} outside {:?}", changed, p);
        }
    }
    Ok(())
}

pub fn arith_rule(e: Exp) -> Option<Exp> {
    expr(e).expect("small constants do not overflow")
}

pub fn smell_rule(e: MExp) -> Option<MExp> {
    smells::redundant_if(e.clone())
        .or_else(|| smells::redundant_boolean(e.clone()))
        .or_else(|| smells::null_list(e.clone()))
        .or_else(|| smells::join_list(e))
}

fn is_nil(e: &MExp) -> bool {
    matches!(e, MExp::ListLit(xs) if xs.is_empty())
}

/// Idempotence, absence of residual smells, bounded rewrite count and the
/// shape of rule overlaps.
pub fn smell_properties(e: &MExp) -> Check {
    let count = Arc::new(AtomicUsize::new(0));
    let seen = count.clone();
    let base = smells::smell_step();
    let counted = Tp::new(move |z| {
        let r = base.apply(z)?;
        if r.is_some() {
            seen.fetch_add(1, Ordering::Relaxed);
        }
        Ok(r)
    });
    let z = Zipper::from_term(e);
    let out = innermost(counted, Fuel::unlimited()).apply(&z).unwrap().unwrap();
    let fixed: MExp = out.root_as().unwrap();
    let fixed_again = smells::fix(&fixed, Schedule::Innermost, Fuel::unlimited()).unwrap();
    prop_assert_eq!(&fixed_again, &fixed);
    prop_assert_eq!(smells::fix(e, Schedule::Innermost, Fuel::unlimited()).unwrap(), fixed.clone());
    prop_assert_eq!(oracle::smell_count(&fixed), 0, "residual smell in {}", smells::pretty_m(&fixed));
    let rewrites = count.load(Ordering::Relaxed);
    prop_assert!(rewrites <= 2 * e.to_dyn().size(), "{} rewrites", rewrites);
    for s in oracle::subterms(e) {
        let hits = oracle::smells_at(s);
        if hits.len() > 1 {
            let MExp::Infix(Op::Eq, l, r) = s else {
                return Err(TestCaseError::fail(format!("unexpected overlap {hits:?}")));
            };
            let bool_nil = (is_nil(l) && matches!(**r, MExp::BoolLit(_))) || (is_nil(r) && matches!(**l, MExp::BoolLit(_)));
            prop_assert!(bool_nil, "overlap {:?} at {}", hits, smells::pretty_m(s));
        }
    }
    Ok(())
}

pub fn smell_roundtrip(e: &MExp) -> Check {
    let text = smells::pretty_m(e);
    let back = smells::parse_m(&text).map_err(|err| TestCaseError::fail(format!("{err}: {text}")))?;
    prop_assert_eq!(&back, e, "{}", text);
    Ok(())
}

pub fn let_roundtrip(root: &Root) -> Check {
    let text = letlang::pretty(root);
    let back = letlang::parse(&text).map_err(|err| TestCaseError::fail(format!("{err}: {text}")))?;
    prop_assert_eq!(&back, root, "{}", text);
    let lang = letlang::language();
    let json = lang.export_json(&root.to_dyn());
    let imported = lang.import_json(&json).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let cast = imported.cast::<Root>();
    prop_assert_eq!(cast.as_ref(), Some(root));
    prop_assert_eq!(lang.export_json(&imported), json);
    Ok(())
}

pub fn names_match(root: &Root) -> Check {
    let z = to_zipper(root);
    let expected = oracle::declared_names(root);
    prop_assert_eq!(letlang::names(&z).unwrap(), expected.clone());
    prop_assert_eq!(letlang::names_bu(&z).unwrap(), oracle::declared_names_postorder(root));
    Ok(())
}
