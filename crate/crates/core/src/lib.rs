//! Combinatorics and exact verification for the unipotent Hecke algebras
//! `H_mu = End_G(Ind_U^G(psi_mu))` of `G = GL_n(F_q)`.

pub mod cli;
pub mod decomp;
pub mod gf;
pub mod guard;
pub mod hecke_index;
pub mod oracle;
pub mod report;
pub mod rsk;
pub mod shapes;
