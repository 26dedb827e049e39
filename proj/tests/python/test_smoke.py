import numpy as np
import pytest

import qacc


def test_version_and_header():
    assert qacc.__version__ == "0.1.0"
    assert qacc.CSV_HEADER.startswith("alpha,r,gamma,")


def test_state_roundtrip():
    rho = qacc.horodecki_state(3.5)
    m = rho.matrix
    assert m.shape == (9, 9)
    assert abs(np.trace(m) - 1) < 1e-12
    assert rho.dims == (3, 3)
    rebuilt = qacc.DensityMatrix(m, (3, 3))
    assert rebuilt.min_eigenvalue > -1e-10
    with pytest.raises(ValueError):
        qacc.horodecki_state(1.0)


def test_classification():
    assert qacc.classify(2.5) == "separable"
    assert qacc.classify(3.5) == "bound-entangled"
    assert qacc.classify(4.5) == "free-entangled"


def test_acceleration_pipeline():
    acc = qacc.accelerate(qacc.horodecki_state(4.5), 0.3, 0.3)
    assert acc.dims == (4, 4)
    assert abs(qacc.concurrence(acc) - 0.0035641151340990557) < 5e-7
    assert abs(qacc.concurrence(acc, m_override=3) - 0.005040419960502087) < 5e-7
    assert abs(qacc.rel_entropy_coherence(acc) - 0.2848821480349546) < 1e-9
    assert abs(qacc.nonlocal_information(acc) - 3.103234250851533) < 1e-9
    assert abs(qacc.ccnr_value(acc) - 0.9981833505123925) < 5e-7


def test_channels():
    acc = qacc.accelerate(qacc.horodecki_state(4.5), 0.3, 0.3)
    ch = qacc.extend_to_acc_space(qacc.dephasing_kraus(0.4))
    assert ch.local_dim == 4
    assert len(ch.operators) == 3
    assert ch.completeness_drift() < 1e-12

    out = qacc.apply_multilocal(acc, ch, ch)
    assert abs(qacc.rel_entropy_coherence(out) - 0.07016272047585259) < 1e-9

    state, weight = qacc.apply_global(acc, ch)
    assert abs(weight - 0.5692042287152521) < 1e-12
    assert state.min_eigenvalue > -1e-10

    composed, weight2 = qacc.apply_global(acc, ch, mode="composed")
    assert abs(weight - weight2) < 1e-12
    assert np.max(np.abs(composed.matrix - state.matrix)) < 1e-12


def test_linear_algebra_helpers():
    bell = qacc.max_entangled(2)
    vals = qacc.hermitian_eigenvalues(qacc.partial_transpose(bell))
    assert abs(vals[-1] + 0.5) < 1e-12
    assert abs(qacc.trace_norm(qacc.realign(bell)) - 2.0) < 1e-9
    assert qacc.is_ppt(qacc.horodecki_state(3.5))
    assert not qacc.is_ppt(qacc.horodecki_state(4.5))

    a = np.diag([1.0, 2.0]).astype(complex)
    b = np.eye(3, dtype=complex)
    assert qacc.kron(a, b).shape == (6, 6)

    marginal = qacc.partial_trace(qacc.horodecki_state(3.0), "B")
    assert marginal.shape == (3, 3)
    assert abs(np.trace(marginal) - 1) < 1e-12

    iso = qacc.rindler_isometry(0.4)
    assert iso.shape == (16, 3)
    assert np.max(np.abs(iso.conj().T @ iso - np.eye(3))) < 1e-13


def test_crosscheck():
    assert qacc.crosscheck(3.5, 0.0) == []
    rows = qacc.crosscheck(3.5, 0.4)
    assert rows and all(r["ambiguous"] for r in rows)


def test_figure_writer(tmp_path):
    n = qacc.write_figure("fig5", str(tmp_path))
    assert n == 93
    lines = (tmp_path / "fig5.csv").read_text().splitlines()
    assert lines[0] == qacc.CSV_HEADER
    assert len(lines) == 94
    assert (tmp_path / "fig5.gp").exists()
