import numpy as np
import pytest

from qbcbound import (
    InputSearchConfig,
    Partition,
    QuantumChannel,
    SpecError,
    SquashConfig,
    channel_output_state,
    evaluate_bounds,
    make_ghz,
    trace_distance,
    two_receiver_report,
)

FAST_SEARCH = InputSearchConfig(restarts=2, max_iters=150)
FAST_SQUASH = SquashConfig(restarts=2, max_iters=200)


def copy_channel():
    k = np.zeros((4, 2))
    k[0, 0] = 1
    k[3, 1] = 1
    return QuantumChannel((k,), 2, ("B", "C"), (2, 2))


def constant_channel():
    # discard the input, output |0><0|_B (x) |0><0|_C
    eye = np.eye(2)
    kraus = tuple(np.outer(np.kron(eye[:, 0], eye[:, 0]), eye[:, i]) for i in range(2))
    return QuantumChannel(kraus, 2, ("B", "C"), (2, 2))


def identity_to_b_channel():
    return QuantumChannel((np.eye(2).reshape(2, 2),), 2, ("B", "C"), (2, 1))


def part(*bs):
    return Partition(tuple(tuple(b) for b in bs))


def test_channel_output_copy_gives_ghz():
    out = channel_output_state(copy_channel(), make_ghz(("R", "A"), 2))
    assert trace_distance(out, make_ghz(("R", "B", "C"), 2)) < 1e-10


def test_channel_output_constant_is_product():
    out = channel_output_state(constant_channel(), make_ghz(("R", "A"), 2))
    red = out.matrix
    # output independent of R: B and C are in |00>
    probs = np.real(np.diag(red)).reshape(2, 4)
    assert np.allclose(probs[:, 1:], 0, atol=1e-12)


def test_channel_output_identity_to_b():
    out = channel_output_state(identity_to_b_channel(), make_ghz(("R", "A"), 2))
    assert out.labels == ("R", "B", "C")
    assert out.dims == (2, 2, 1)
    assert abs(np.trace(out.matrix).real - 1) < 1e-9


def test_constant_channel_bounds_zero():
    constraints = evaluate_bounds(constant_channel(), None, FAST_SEARCH, FAST_SQUASH)
    assert len(constraints) == 4
    for rc in constraints:
        assert abs(rc.bound_bits) < 1e-6


def test_copy_channel_r_bc_bound():
    p = part(("R",), ("B", "C"))
    (rc,) = evaluate_bounds(copy_channel(), [p], FAST_SEARCH, FAST_SQUASH)
    assert rc.bound_bits >= 1.0 - 1e-6
    assert rc.measure_used == "esq"
    assert rc.weights() == {("B", "C", "R"): 1.0, ("B", "R"): 1.0, ("C", "R"): 1.0}


def test_identity_to_b_cut_bounds():
    ch = identity_to_b_channel()
    rb_c = part(("B", "R"), ("C",))
    rc_b = part(("C", "R"), ("B",))
    constraints = evaluate_bounds(ch, [rb_c, rc_b], FAST_SEARCH, FAST_SQUASH)
    by = {rc.partition: rc for rc in constraints}
    assert abs(by[rb_c].bound_bits) < 1e-6  # C is trivial
    assert by[rc_b].bound_bits >= 1.0 - 1e-6  # bipartite identity channel


def test_two_receiver_report_coefficients():
    report = two_receiver_report(copy_channel(), FAST_SEARCH, FAST_SQUASH)
    assert set(report) == {"b_cut", "c_cut", "bc_cut", "tripartite"}
    assert report["b_cut"]["coefficients"] == (1, 0, 1, 1, 1, 0, 1, 1)
    assert report["c_cut"]["coefficients"] == (0, 1, 1, 1, 0, 1, 1, 1)
    assert report["bc_cut"]["coefficients"] == (1, 1, 0, 1, 1, 1, 0, 1)
    assert report["tripartite"]["coefficients"] == (1, 1, 1, 1.5, 1, 1, 1, 1.5)
    assert report["bc_cut"]["bound_bits"] >= 1.0 - 1e-6


def test_two_receiver_report_rejects_wrong_count():
    ch = QuantumChannel((np.eye(2),), 2, ("B",), (2,))
    with pytest.raises(SpecError):
        two_receiver_report(ch, FAST_SEARCH, FAST_SQUASH)


def test_receiver_relabeling_symmetry():
    k = np.zeros((4, 2))
    k[0, 0] = 1
    k[3, 1] = 1
    swapped = QuantumChannel((k,), 2, ("C", "B"), (2, 2))
    p1 = part(("R", "C"), ("B",))
    (rc1,) = evaluate_bounds(copy_channel(), [p1], FAST_SEARCH, FAST_SQUASH)
    p2 = part(("R", "B"), ("C",))
    (rc2,) = evaluate_bounds(swapped, [p2], FAST_SEARCH, FAST_SQUASH)
    assert abs(rc1.bound_bits - rc2.bound_bits) < 1e-6


def test_more_restarts_never_decreases_bound():
    p = part(("R",), ("B",), ("C",))
    vals = []
    for restarts in (1, 3):
        cfg = InputSearchConfig(restarts=restarts, max_iters=150, seed=2)
        (rc,) = evaluate_bounds(copy_channel(), [p], cfg, FAST_SQUASH)
        vals.append(rc.bound_bits)
    assert vals[1] >= vals[0] - 1e-12


def test_metadata_reports_exactness():
    p = part(("R",), ("B", "C"))
    (rc,) = evaluate_bounds(copy_channel(), [p], FAST_SEARCH, FAST_SQUASH)
    assert rc.metadata["estimate_only"] is False
    assert abs(sum(rc.metadata["schmidt"]) - 1.0) < 1e-9
