pub mod algebraic;
pub mod certify;
pub mod cli;
pub mod field;
pub mod linalg;
pub mod poly;
pub mod search;
pub mod singular;
pub mod verdict;
