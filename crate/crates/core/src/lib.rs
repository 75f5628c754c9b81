//! Generic zippers over reflected ASTs, strategic programming combinators
//! and zipper-based attribute grammars, with two bundled languages.

pub mod ag;
pub mod cli;
pub mod letlang;
pub mod smells;
pub mod strategies;
pub mod syntax;
pub mod zipper;
