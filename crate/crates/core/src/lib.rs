//! Exact generation and verification of special polynomials from bilinear
//! recurrences `P_{n+1} P_{n-1} = f (P_n P_n'' - P_n'^2) + g P_n P_n' + h_n P_n^2`,
//! Somos-k sequences, and the polynomiality condition on `(f, g)`.

pub mod cli;
pub mod conditions;
pub mod painleve;
pub mod polyring;
pub mod recurrence;
