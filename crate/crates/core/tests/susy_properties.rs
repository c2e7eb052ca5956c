mod common;

use common::{rng, superpotential};
use moyal_clifford::susy::{
    classical_hamiltonian, ladder_check, verify_pauli_algebra, verify_projectors, Superpotential, SusyParts, SusySystem,
};
use moyal_clifford::{CliffordAlgebra, HbarScalar, Metric, Multivector, Poly, Var};

#[test]
fn random_superpotentials_factorize() {
    let mut r = rng(21);
    for _ in 0..20 {
        let w = superpotential(&mut r, 5);
        let system = SusySystem::new(Superpotential::new(w.clone()).unwrap())
            .unwrap_or_else(|e| panic!("W = {w}: {e}"));
        assert_eq!(system.report().len(), 20);
        // classical limit of H_S is the classical Hamiltonian
        let hs0 = system.hamiltonian().map_coeffs(|c| c.hbar_part(0));
        let h = classical_hamiltonian(system.superpotential());
        assert_eq!(hs0, Multivector::scalar(2, h));
    }
}

#[test]
fn partner_difference_is_hbar_w_prime() {
    let mut r = rng(22);
    for _ in 0..20 {
        let w = Superpotential::new(superpotential(&mut r, 5)).unwrap();
        let parts = SusyParts::derive(&CliffordAlgebra::euclidean_plane(), w.clone()).unwrap();
        let diff = &parts.h2 - &parts.h1;
        assert_eq!(diff, w.derivative().scale(&HbarScalar::hbar_pow(1)));
    }
}

#[test]
fn clifford_suites_pass() {
    let alg = CliffordAlgebra::euclidean_plane();
    let pauli = verify_pauli_algebra::<HbarScalar>(&alg).unwrap();
    assert_eq!(pauli.len(), 18);
    assert!(pauli.all_pass(), "{pauli}");
    assert!(verify_projectors::<HbarScalar>(&alg).unwrap().all_pass());
    let parts = SusyParts::derive(&alg, Superpotential::new(Poly::q().pow(3) - Poly::q()).unwrap()).unwrap();
    assert!(ladder_check(&alg, &parts.frame).unwrap().all_pass());
}

#[test]
fn non_plane_metric_is_rejected() {
    let alg = CliffordAlgebra::new(Metric::euclidean(3).unwrap());
    assert!(verify_pauli_algebra::<HbarScalar>(&alg).is_err());
}

#[test]
fn superpotential_validation() {
    assert!(Superpotential::new(Poly::p()).is_err());
    assert!(Superpotential::new(Poly::hbar() * Poly::q()).is_err());
    let w = Superpotential::new(Poly::q().pow(2)).unwrap();
    assert_eq!(w.derivative(), Poly::q().scale(&HbarScalar::rational(common::ratio(2, 1))));
    assert_eq!(w.poly().degree_in(Var::Q), Some(2));
}
