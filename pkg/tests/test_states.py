import numpy as np
import pytest

from qbcbound import (
    DimMismatch,
    LabelCollision,
    LabelNotFound,
    MultipartiteState,
    PrivateStateSpec,
    QbcError,
    QuantumChannel,
    apply_channel,
    channel_from_json,
    channel_to_json,
    check_private_state,
    make_ghz,
    make_private_state,
    partial_trace,
    purify,
    state_from_json,
    state_to_json,
    tensor,
    trace_distance,
)
from qbcbound.sampling import random_channel, random_state, random_unitary


def qubit(vec):
    v = np.array(vec, dtype=complex)
    v /= np.linalg.norm(v)
    return np.outer(v, v.conj())


def test_state_validation():
    with pytest.raises(QbcError):
        MultipartiteState(np.array([[0.5, 0.3], [0.1, 0.5]]), ("A",), (2,))
    with pytest.raises(QbcError):
        MultipartiteState(np.eye(2), ("A",), (2,))  # trace 2
    with pytest.raises(DimMismatch):
        MultipartiteState(np.eye(2) / 2, ("A",), (3,))
    with pytest.raises(LabelCollision):
        MultipartiteState(np.eye(4) / 4, ("A", "A"), (2, 2))
    with pytest.raises(QbcError):
        MultipartiteState(np.diag([1.5, -0.5]), ("A",), (2,))


def test_tensor_maximally_mixed():
    a = MultipartiteState(np.eye(2) / 2, ("A",), (2,))
    b = MultipartiteState(np.eye(2) / 2, ("B",), (2,))
    t = tensor([a, b])
    assert np.allclose(t.matrix, np.eye(4) / 4)
    assert t.labels == ("A", "B")


def test_tensor_basis_states():
    t = tensor(
        [
            MultipartiteState(qubit([1, 0]), ("A",), (2,)),
            MultipartiteState(qubit([0, 1]), ("B",), (2,)),
        ]
    )
    expect = np.zeros((4, 4))
    expect[1, 1] = 1.0
    assert np.allclose(t.matrix, expect)


def test_tensor_ghz_with_pure():
    t = tensor(
        [make_ghz(("A", "B"), 2), MultipartiteState(qubit([1, 0]), ("C",), (2,))]
    )
    assert t.dim == 8
    assert abs(np.trace(t.matrix) - 1) < 1e-12
    assert np.linalg.matrix_rank(t.matrix, tol=1e-10) == 1


def test_tensor_rejects_duplicates():
    a = MultipartiteState(np.eye(2) / 2, ("A",), (2,))
    with pytest.raises(LabelCollision):
        tensor([a, a])


def test_partial_trace_ghz_marginal():
    red = partial_trace(make_ghz(("A", "B", "C"), 2), {"A"})
    assert np.allclose(red.matrix, np.eye(2) / 2)


def test_partial_trace_product_marginal():
    rng = np.random.default_rng(1)
    a = random_state(rng, ("A",), (3,))
    b = random_state(rng, ("B",), (2,))
    red = partial_trace(tensor([a, b]), {"A"})
    assert np.max(np.abs(red.matrix - a.matrix)) < 1e-12


def test_partial_trace_bell_marginal():
    red = partial_trace(make_ghz(("A", "B"), 2), {"B"})
    assert np.allclose(red.matrix, np.eye(2) / 2)


def test_partial_trace_unknown_label():
    with pytest.raises(LabelNotFound):
        partial_trace(make_ghz(("A", "B"), 2), {"Z"})


def test_purify_maximally_mixed():
    phi = purify(MultipartiteState(np.eye(2) / 2, ("A",), (2,)), "E")
    assert phi.is_pure()
    assert np.allclose(partial_trace(phi, {"A"}).matrix, np.eye(2) / 2)


def test_purify_pure_state_trivial_purifier():
    psi = MultipartiteState(qubit([1, 1]), ("A",), (2,))
    phi = purify(psi, "E")
    assert phi.dims == (2, 1)


def test_purify_schmidt_coefficients():
    phi = purify(MultipartiteState(np.diag([0.7, 0.3]), ("A",), (2,)), "E")
    ev = np.linalg.eigvalsh(partial_trace(phi, {"E"}).matrix)
    assert np.allclose(sorted(ev), [0.3, 0.7])


def test_purify_roundtrip_random():
    rng = np.random.default_rng(7)
    for _ in range(100):
        dims = tuple(rng.choice([2, 3], size=rng.integers(1, 3)))
        if np.prod(dims) > 8:
            continue
        rho = random_state(rng, [f"S{i}" for i in range(len(dims))], dims)
        phi = purify(rho, "E")
        assert trace_distance(partial_trace(phi, set(rho.labels)), rho) < 1e-9


def test_apply_identity_channel():
    ch = QuantumChannel((np.eye(2),), 2, ("B",), (2,))
    st = make_ghz(("R", "A"), 2)
    out = apply_channel(ch, st, "A")
    assert out.labels == ("R", "B")
    assert np.allclose(out.matrix, st.matrix)


def test_apply_copy_isometry_gives_ghz():
    k = np.zeros((4, 2))
    k[0, 0] = 1
    k[3, 1] = 1
    ch = QuantumChannel((k,), 2, ("B", "C"), (2, 2))
    out = apply_channel(ch, make_ghz(("R", "A"), 2), "A")
    assert trace_distance(out, make_ghz(("R", "B", "C"), 2)) < 1e-10


def test_apply_depolarizing():
    eye = np.eye(2)
    kraus = tuple(
        np.outer(eye[:, i], eye[:, j]) / np.sqrt(2) for i in range(2) for j in range(2)
    )
    ch = QuantumChannel(kraus, 2, ("B",), (2,))
    out = apply_channel(ch, MultipartiteState(qubit([1, 0]), ("A",), (2,)), "A")
    assert np.allclose(out.matrix, np.eye(2) / 2)


def test_apply_channel_trace_and_positivity():
    rng = np.random.default_rng(3)
    for _ in range(20):
        ch = random_channel(rng, 2, ("B",), (2,))
        st = random_state(rng, ("R", "A"), (2, 2))
        out = apply_channel(ch, st, "A")
        assert abs(np.trace(out.matrix).real - 1) < 1e-9
        assert np.linalg.eigvalsh(out.matrix)[0] > -1e-9


def test_ghz_values():
    bell = make_ghz(("A", "B"), 2)
    v = np.zeros(4)
    v[0] = v[3] = 1 / np.sqrt(2)
    assert np.allclose(bell.matrix, np.outer(v, v))
    assert np.allclose(
        partial_trace(make_ghz(("A", "B"), 3), {"A"}).matrix, np.eye(3) / 3
    )


def test_private_state_identity_twists_is_product():
    spec = PrivateStateSpec(2, 2, (2, 1))
    st = make_private_state(spec, ("kA", "kB"), ("sA", "sB"))
    ghz = make_ghz(("kA", "kB"), 2)
    assert trace_distance(partial_trace(st, {"kA", "kB"}), ghz) < 1e-10


def test_private_state_check_accepts_construction():
    rng = np.random.default_rng(0)
    for m in (2, 3):
        for _ in range(10):
            sdims = tuple(int(d) for d in rng.choice([1, 2], size=m))
            ds = int(np.prod(sdims))
            tw = tuple(random_unitary(rng, ds) for _ in range(2**m))
            spec = PrivateStateSpec(m, 2, sdims, tw)
            keys = tuple(f"k{i}" for i in range(m))
            shields = tuple(f"s{i}" for i in range(m))
            st = make_private_state(spec, keys, shields)
            ok, dev = check_private_state(st, keys, shields, 2)
            assert ok, dev


def test_private_state_check_rejects_mixed_junk():
    st = MultipartiteState(np.eye(4) / 4, ("kA", "kB"), (2, 2))
    ok, dev = check_private_state(st, ("kA", "kB"), (), 2)
    assert not ok
    assert dev > 0.1


def test_trace_distance_values():
    z0 = MultipartiteState(qubit([1, 0]), ("A",), (2,))
    z1 = MultipartiteState(qubit([0, 1]), ("A",), (2,))
    mixed = MultipartiteState(np.eye(2) / 2, ("A",), (2,))
    assert trace_distance(z0, z0) == 0
    assert abs(trace_distance(z0, z1) - 1) < 1e-12
    assert abs(trace_distance(z0, mixed) - 0.5) < 1e-12


def test_json_roundtrip_state_and_channel():
    rng = np.random.default_rng(11)
    st = random_state(rng, ("A", "B"), (2, 3))
    st2 = state_from_json(state_to_json(st))
    assert st2.labels == st.labels and st2.dims == st.dims
    assert np.max(np.abs(st2.matrix - st.matrix)) < 1e-15
    ch = random_channel(rng, 2, ("B", "C"), (2, 2))
    ch2 = channel_from_json(channel_to_json(ch))
    assert ch2.output_labels == ch.output_labels
    for k1, k2 in zip(ch.kraus_ops, ch2.kraus_ops):
        assert np.max(np.abs(k1 - k2)) < 1e-15
