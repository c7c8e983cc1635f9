import numpy as np
import pytest

import kgip


def random_hermitian_positive(n, seed=0):
    rng = np.random.default_rng(seed)
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return a @ a.conj().T + n * np.eye(n)


def test_eigendecompose_matches_numpy():
    d = random_hermitian_positive(5)
    dec = kgip.eigendecompose(d)
    assert np.allclose(np.sort(dec.eigenvalues), np.linalg.eigvalsh(d), atol=1e-10)
    assert np.allclose(dec.reconstruct(), d, atol=1e-10)


def test_hamiltonian_is_sigma3_pseudo_hermitian():
    d = random_hermitian_positive(4, 1)
    h = kgip.hamiltonian(d, 0.7)
    s = kgip.sigma3(4)
    assert np.allclose(h.conj().T, s @ h @ s, atol=1e-12)


def test_eta_tilde_positive_and_intertwines():
    d = random_hermitian_positive(4, 2)
    h = kgip.hamiltonian(d, 1.0)
    eta = kgip.eta_tilde_plus(d, 1.0, [1.0, 2.0, 0.5, 3.0], [1.0, 0.3, 2.0, 1.0])
    assert np.allclose(h.conj().T @ eta, eta @ h, atol=1e-10)
    assert np.linalg.eigvalsh(eta).min() > 0


def test_solution_inner_conserved():
    d = random_hermitian_positive(3, 3)
    rng = np.random.default_rng(4)
    psi = rng.normal(size=3) + 1j * rng.normal(size=3)
    dpsi = rng.normal(size=3) + 1j * rng.normal(size=3)
    spec = ([1.0] * 3, [1.0] * 3)
    before = kgip.solution_inner(psi, dpsi, psi, dpsi, d, *spec)
    psi1, dpsi1 = kgip.evolve_field(d, psi, dpsi, 1.0, 4000)
    after = kgip.solution_inner(psi1, dpsi1, psi1, dpsi1, d, *spec)
    assert before.real > 0
    assert abs(after - before) < 1e-8 * abs(before)


def test_sho_ground_norm():
    # Basic mode e^{-i omega t} at t = 0 has norm l_plus.
    omega = 2.0
    val = kgip.sho_inner(1.0, -1j * omega, 1.0, -1j * omega, omega, 1.5, 0.2)
    assert val.real > 0


def test_wdw_and_errors():
    assert np.allclose(kgip.wdw_eigenvalues(1.0, 0, 0.0, 4), [1, 3, 5, 7])
    assert kgip.wdw_positivity(1.0, 1, np.log(2.0)) == "has_negative"
    with pytest.raises(kgip.KgipError):
        kgip.wdw_eigenvalues(1.0, 5, 0.0)


def test_verify_report():
    report = kgip.verify(dim=4, seed=7)
    assert report["summary"]["passed"] == report["summary"]["total"]
