//! Reference implementations that do not use zippers or strategies.

use std::collections::HashSet;

use zipstrat::letlang::{Exp, Let, List, Root};
use zipstrat::smells::{MExp, Op};
use zipstrat::zipper::{ConstructorTag, Dyn};

/// Constructor tags in preorder, by plain recursion.
pub fn preorder(d: &Dyn, out: &mut Vec<ConstructorTag>) {
    out.push(d.tag());
    for c in d.children() {
        preorder(c, out);
    }
}

pub fn tags(d: &Dyn) -> Vec<ConstructorTag> {
    let mut out = Vec::new();
    preorder(d, &mut out);
    out
}

/// Declared names in source order, nested blocks before later siblings.
pub fn declared_names(root: &Root) -> Vec<String> {
    fn block(l: &Let, out: &mut Vec<String>) {
        let mut cur = &l.decls;
        loop {
            match cur {
                List::Assign(n, _, rest) => {
                    out.push(n.clone());
                    cur = rest;
                }
                List::NestedLet(n, inner, rest) => {
                    out.push(n.clone());
                    block(inner, out);
                    cur = rest;
                }
                List::EmptyList => return,
            }
        }
    }
    let mut out = Vec::new();
    block(&root.0, &mut out);
    out
}

/// Declared names with every declaration after the declarations below and
/// to the right of it.
pub fn declared_names_postorder(root: &Root) -> Vec<String> {
    fn spine(l: &List, out: &mut Vec<String>) {
        match l {
            List::Assign(n, _, rest) => {
                spine(rest, out);
                out.push(n.clone());
            }
            List::NestedLet(n, inner, rest) => {
                spine(&inner.decls, out);
                spine(rest, out);
                out.push(n.clone());
            }
            List::EmptyList => {}
        }
    }
    let mut out = Vec::new();
    spine(&root.0.decls, &mut out);
    out
}

/// Scope errors in source order: a declaration repeating a name already
/// declared earlier in its block, and a use of a name bound neither in its
/// block nor in any enclosing one.
pub fn scope_errors(root: &Root) -> Vec<String> {
    fn block_names(l: &Let) -> Vec<String> {
        let mut out = Vec::new();
        let mut cur = &l.decls;
        loop {
            match cur {
                List::Assign(n, _, rest) | List::NestedLet(n, _, rest) => {
                    out.push(n.clone());
                    cur = rest;
                }
                List::EmptyList => return out,
            }
        }
    }
    fn exp(e: &Exp, scopes: &[Vec<String>], out: &mut Vec<String>) {
        match e {
            Exp::Add(a, b) | Exp::Sub(a, b) => {
                exp(a, scopes, out);
                exp(b, scopes, out);
            }
            Exp::Neg(a) => exp(a, scopes, out),
            Exp::Var(x) => {
                if !scopes.iter().any(|s| s.contains(x)) {
                    out.push(x.clone());
                }
            }
            Exp::Const(_) => {}
        }
    }
    fn block(l: &Let, outer: &[Vec<String>], out: &mut Vec<String>) {
        let mut scopes = outer.to_vec();
        scopes.push(block_names(l));
        let mut seen = HashSet::new();
        let mut cur = &l.decls;
        loop {
            match cur {
                List::Assign(n, e, rest) => {
                    if !seen.insert(n.clone()) {
                        out.push(n.clone());
                    }
                    exp(e, &scopes, out);
                    cur = rest;
                }
                List::NestedLet(n, inner, rest) => {
                    if !seen.insert(n.clone()) {
                        out.push(n.clone());
                    }
                    block(inner, &scopes, out);
                    cur = rest;
                }
                List::EmptyList => break,
            }
        }
        exp(&l.body, &scopes, out);
    }
    let mut out = Vec::new();
    block(&root.0, &[], &mut out);
    out
}

/// Positions (0-based child indices) of the maximal subtrees where `a` and
/// `b` differ.
pub fn diff(a: &Dyn, b: &Dyn) -> Vec<Vec<usize>> {
    fn go(a: &Dyn, b: &Dyn, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let same_node = a.tag() == b.tag()
            && a.as_leaf() == b.as_leaf()
            && a.children().len() == b.children().len();
        if !same_node {
            out.push(path.clone());
            return;
        }
        for (i, (x, y)) in a.children().iter().zip(b.children()).enumerate() {
            path.push(i);
            go(x, y, path, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    go(a, b, &mut Vec::new(), &mut out);
    out
}

pub fn subtree<'a>(d: &'a Dyn, path: &[usize]) -> &'a Dyn {
    path.iter().fold(d, |d, &i| &d.children()[i])
}

pub fn replace_at(d: &Dyn, path: &[usize], new: Dyn) -> Dyn {
    match path.split_first() {
        None => new,
        Some((&i, rest)) => {
            let mut kids = d.children().to_vec();
            kids[i] = replace_at(&kids[i], rest, new);
            Dyn::node(d.tag(), kids)
        }
    }
}

/// First node in postorder satisfying `is_redex`.
pub fn leftmost_innermost(d: &Dyn, is_redex: &dyn Fn(&Dyn) -> bool) -> Option<Vec<usize>> {
    fn go(d: &Dyn, is_redex: &dyn Fn(&Dyn) -> bool, path: &mut Vec<usize>) -> Option<Vec<usize>> {
        for (i, c) in d.children().iter().enumerate() {
            path.push(i);
            if let Some(p) = go(c, is_redex, path) {
                return Some(p);
            }
            path.pop();
        }
        is_redex(d).then(|| path.clone())
    }
    go(d, is_redex, &mut Vec::new())
}

fn is_bool(e: &MExp) -> bool {
    matches!(e, MExp::BoolLit(_))
}

fn is_nil(e: &MExp) -> bool {
    matches!(e, MExp::ListLit(xs) if xs.is_empty())
}

fn is_length(e: &MExp) -> bool {
    matches!(e, MExp::Call(f, _) if f == "length")
}

/// Which of the smell patterns match at the root of `e`, by name.
pub fn smells_at(e: &MExp) -> Vec<&'static str> {
    let mut hits = Vec::new();
    match e {
        MExp::Infix(Op::Append, l, _) if matches!(&**l, MExp::ListLit(xs) if xs.len() == 1) => {
            hits.push("join_list");
        }
        MExp::Infix(Op::Eq, l, r) => {
            let zero = |x: &MExp| *x == MExp::IntLit(0);
            if (is_length(l) && zero(r)) || (zero(l) && is_length(r)) || is_nil(l) || is_nil(r) {
                hits.push("null_list");
            }
            if is_bool(l) || is_bool(r) {
                hits.push("redundant_boolean");
            }
        }
        MExp::If(_, t, f) if is_bool(t) && is_bool(f) && t != f => hits.push("redundant_if"),
        _ => {}
    }
    hits
}

/// Every subterm, preorder.
pub fn subterms(e: &MExp) -> Vec<&MExp> {
    let mut out = vec![e];
    match e {
        MExp::Var(_) | MExp::IntLit(_) | MExp::BoolLit(_) => {}
        MExp::ListLit(xs) => xs.iter().for_each(|x| out.extend(subterms(x))),
        MExp::Infix(_, a, b) => {
            out.extend(subterms(a));
            out.extend(subterms(b));
        }
        MExp::Call(_, a) => out.extend(subterms(a)),
        MExp::If(c, t, f) => {
            out.extend(subterms(c));
            out.extend(subterms(t));
            out.extend(subterms(f));
        }
    }
    out
}

pub fn smell_count(e: &MExp) -> usize {
    subterms(e).into_iter().filter(|s| !smells_at(s).is_empty()).count()
}
