#![allow(dead_code)]

pub mod checks;
pub mod gen;
pub mod oracle;

pub const P: &str = "let a = b + 0\n    c = 2\n    b = let c = 3 in c + c\nin a + 7 - c";

pub const LET_WITH_ERRORS: &str = "let a = b + 3
    c = 2
    w = let c = a - b
        in c + z
    c = c + 3 - c
in (a + 7) + c + w";
