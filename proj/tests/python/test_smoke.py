import numpy as np
import pytest

import qmc

X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z = np.diag([1.0, -1.0]).astype(complex)
I2 = np.eye(2, dtype=complex)


def phase_flip(p):
    return qmc.KrausSet([np.sqrt(p) * I2, np.sqrt(1 - p) * Z], "pf")


def test_catalog_channels_are_bistochastic():
    names = qmc.catalog_names()
    assert len(names) == 6
    for name in names:
        k = qmc.catalog_build(name)
        assert k.bistochastic
        assert abs(qmc.operator_norm(k) - 1) < 1e-9


def test_superoperator_matches_numpy_kron():
    k = phase_flip(0.75)
    expected = sum(np.kron(a.conj(), a) for a in k.operators)
    assert np.allclose(qmc.superoperator(k), expected)
    assert np.allclose(np.diag(qmc.superoperator(k)), [1, 0.5, 0.5, 1])


def test_spectrum_against_numpy():
    for k in [qmc.catalog_build(n) for n in qmc.catalog_names()] + qmc.random_unitary_mixtures(10):
        sd = qmc.spectrum(k)
        ours = np.array(sd.eigenvalues)
        ref = list(np.linalg.eigvals(qmc.superoperator(k)))
        assert len(ours) == len(ref)
        for lam in ours:
            j = int(np.argmin([abs(lam - r) for r in ref]))
            assert abs(lam - ref.pop(j)) < 1e-7


def test_phase_flip_golden_limit():
    rho0 = qmc.DensityMatrix(np.array([[0.6, 0.2 + 0.1j], [0.2 - 0.1j, 0.4]]))
    k = phase_flip(0.75)
    assert np.allclose(qmc.strict_limit(k, rho0).matrix, np.diag([0.6, 0.4]), atol=1e-12)
    d = qmc.evolve_distances(k, rho0, 30, qmc.DensityMatrix(np.diag([0.6, 0.4]).astype(complex)))
    assert d[-1] <= 1e-8
    assert np.allclose(d, np.sqrt(0.1) * 0.5 ** np.arange(1, 31), rtol=1e-9)


def test_z_conjugation_is_category_4_and_obstructs_strict_limit():
    zc = qmc.KrausSet([Z], "z")
    assert qmc.classify(zc).category == 4
    rho0 = qmc.DensityMatrix.maximally_mixed(2)
    with pytest.raises(qmc.PeripheralObstruction):
        qmc.strict_limit(zc, rho0)
    r = qmc.conjecture_eigenspace(zc, -1.0)
    assert r.agrees_with_numerical
    assert len(r.basis) == 2


def test_classification_flags_conflicts():
    assert qmc.classification(qmc.catalog_build("bit_phase_flip"))["conflict"]
    assert qmc.classification(qmc.catalog_build("phase_flip"))["conflict"] is None


def test_hadamard_walk_limit():
    h = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
    spec = qmc.WalkSpec(qmc.PortGraph.cycle(4), h)
    a0 = qmc.WalkState.basis(spec, 0, 0)
    lim = np.array(qmc.walk_limit_distribution(spec, a0))
    emp = np.array(qmc.empirical_time_avg(spec, a0, 10000))
    assert abs(lim.sum() - 1) < 1e-12
    assert np.abs(lim - emp).sum() <= 5e-3


def test_errors_map_to_python_exceptions():
    with pytest.raises(qmc.DimensionError):
        qmc.KrausSet([I2, np.eye(3, dtype=complex)])
    with pytest.raises(qmc.InvalidState):
        qmc.DensityMatrix(np.diag([1.0, 1.0]).astype(complex))
    with pytest.raises(qmc.ParseError):
        qmc.channel_from_json("{not json")
    ad = qmc.KrausSet([np.diag([1, np.sqrt(0.7)]).astype(complex),
                       np.array([[0, np.sqrt(0.3)], [0, 0]], dtype=complex)])
    with pytest.raises(qmc.NotBistochastic):
        qmc.spectrum(ad)
    assert issubclass(qmc.NotBistochastic, qmc.QmcError)


def test_json_round_trip_and_check_determinism():
    k = qmc.catalog_build("cnot_mixture")
    back = qmc.channel_from_json(qmc.channel_to_json(k))
    for a, b in zip(k.operators, back.operators):
        assert np.array_equal(a, b)
    chans = qmc.random_unitary_mixtures(5)
    assert qmc.check(chans) == qmc.check(chans)
    assert qmc.check(chans)["passed"]
