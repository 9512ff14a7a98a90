import numpy as np
import pytest

from nhbath.model import (
    BathParams, Boundary, EmitterAttachment, Sublattice, apply_system, bloch_hamiltonians,
    build_bath, build_system)
from nhbath.errors.numeric import AttachmentOutOfRange, InvalidParameter


def test_bath_entries():
    params = BathParams(1.6, 1.0, 1.2, 3)
    m = build_bath(params)
    assert m.dim == 6
    assert m.basis_order == ("a1", "b1", "a2", "b2", "a3", "b3")
    e = m.entries
    assert e[m.index("a1"), m.index("b1")] == pytest.approx(1.0)
    assert e[m.index("b1"), m.index("a1")] == pytest.approx(2.2)
    assert e[m.index("b1"), m.index("a2")] == e[m.index("a2"), m.index("b1")] == 1.0
    assert e[m.index("b3"), m.index("a1")] == 0
    assert np.allclose(np.diag(e), -0.6j)

    ring = build_bath(params.with_boundary(Boundary.PBC)).entries
    assert ring[5, 0] == ring[0, 5] == 1.0


def test_loss_is_passive():
    m = build_system(BathParams(1.6, 1.0, 1.2, 10), [EmitterAttachment(4, gamma=0.3)])
    eigenvalues = np.linalg.eigvalsh(m.anti_hermitian_part())
    assert np.all(eigenvalues < 1e-12)


def test_system_couplings():
    params = BathParams(1.6, 1.0, 1.2, 5)
    e1 = EmitterAttachment(2, Sublattice.B, g=0.3, delta0=0.1, gamma=0.4)
    e2 = EmitterAttachment(4, Sublattice.A, g=0.7)
    m = build_system(params, [e1, e2])
    assert m.n_emitters == 2
    assert m.entries[0, 0] == pytest.approx(0.1 - 0.2j)
    b2 = m.index("b2")
    assert m.entries[0, b2] == m.entries[b2, 0] == 0.3
    a4 = m.index("a4")
    assert m.entries[1, a4] == m.entries[a4, 1] == 0.7
    assert np.array_equal(m.photon_block, build_bath(params).entries)


@pytest.mark.parametrize("boundary", [Boundary.OBC, Boundary.PBC])
def test_apply_system(boundary: Boundary):
    params = BathParams(1.3, 0.8, 0.9, 12, boundary)
    emitters = [EmitterAttachment(1, Sublattice.A, 0.4, 0.2, 0.1), EmitterAttachment(12, Sublattice.B, 0.6)]
    rng = np.random.default_rng(3)
    v = rng.normal(size=26) + 1j * rng.normal(size=26)
    dense = build_system(params, emitters).entries @ v
    assert np.allclose(apply_system(params, emitters, v), dense, atol=1e-13)


def test_bloch_matches_ring():
    params = BathParams(2.5, 1.0, 1.2, 16, Boundary.PBC)
    ring = np.linalg.eigvals(build_bath(params).entries)
    ks = 2 * np.pi * np.arange(params.L) / params.L
    bloch = np.linalg.eigvals(bloch_hamiltonians(params, ks)).reshape(-1)
    assert max(np.min(np.abs(bloch - z)) for z in ring) < 1e-10
    assert max(np.min(np.abs(ring - z)) for z in bloch) < 1e-10


def test_permutation_is_similarity():
    m = build_system(BathParams(1.6, 1.0, 1.2, 6), [EmitterAttachment(2, g=0.4)])
    p = np.random.default_rng(5).permutation(m.dim)
    shuffled = m.permuted(p)
    assert shuffled.basis_order[0] == m.basis_order[p[0]]
    assert shuffled.entries[shuffled.index("e1"), shuffled.index("a2")] == 0.4
    before = np.sort_complex(np.linalg.eigvals(m.entries))
    after = np.sort_complex(np.linalg.eigvals(shuffled.entries))
    assert np.allclose(before, after, atol=1e-10)


def test_invalid_parameters():
    with pytest.raises(InvalidParameter):
        _ = BathParams(1.0, 1.0, -0.1, 10)
    with pytest.raises(InvalidParameter):
        _ = BathParams(1.0, 1.0, 0.1, 1)
    with pytest.raises(InvalidParameter):
        _ = EmitterAttachment(1, g=-1.0)
    with pytest.raises(AttachmentOutOfRange):
        _ = build_system(BathParams(1.0, 1.0, 0.1, 4), [EmitterAttachment(5)])
    with pytest.raises(InvalidParameter):
        _ = build_system(BathParams(1.0, 1.0, 0.1, 4), [EmitterAttachment(2), EmitterAttachment(2)])
