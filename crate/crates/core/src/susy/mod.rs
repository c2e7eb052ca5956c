//! Star factorization of supersymmetric quantum mechanics: a superpotential
//! `W(q)` gives the vector `w = Wη + pρ`, whose Moyal-Clifford square is the
//! supersymmetric Hamiltonian `H_S = H1 π+ + H2 π−`.

mod clifford;
mod report;
mod system;

pub use clifford::{
    ladder_check, minus_i_eta_rho, projectors, verify_pauli_algebra, verify_projectors, HolomorphicFrame,
};
pub use report::{IdentityCheck, Report};
pub use system::{
    build_w, classical_hamiltonian, partner_hamiltonians, supercharges, susy_hamiltonian,
    susy_hamiltonian_closed_form, verify_susy_algebra, Superpotential, Supercharges, SusyParts, SusySystem,
};
