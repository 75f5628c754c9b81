//! The Let language: nested blocks of possibly forward-referencing
//! declarations over integer arithmetic.

mod ast;
mod attributes;
mod eval;
mod optimize;
mod syntax;

pub use ast::{Decl, Exp, Let, List, Root};
pub use attributes::{
    dcli, dclo, decls, env, errors_ag, errors_strat, lev, lexeme, lexeme_assign, m_b_in, m_nb_in,
    names, names_bu, select, select_step, uses, Env,
};
pub use eval::eval;
pub use optimize::{
    arith_step, exp_c, expr, inline_step, opt, opt_prime, opt_prime2, optimize,
};
pub use syntax::{parse, parse_exp, pretty, pretty_exp};

use crate::zipper::Language;

/// Registry of the Let AST types.
pub fn language() -> Language {
    Language::new("let")
        .register::<Root>()
        .register::<Let>()
        .register::<List>()
        .register::<Exp>()
}
