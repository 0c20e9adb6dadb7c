import math

import pytest

import blochinterp as bi


def test_version_present():
    assert bi.__version__


def test_rho_known_value():
    assert abs(bi.rho(0.5, 0.75) - 0.4) <= 1e-15


def test_rho_rejects_points_outside_the_disk():
    with pytest.raises(ValueError):
        bi.rho(1.5, 0.0)


def test_geometric_sequence_statistics():
    seq = bi.gen_geometric(8)
    assert len(seq) == 8
    assert seq[0] == 0.5
    assert seq.label == "geometric-8"
    assert seq.separation.blaschke_sum == 1.0 - 2.0**-8
    assert 0.0 < seq.separation.delta_unif < seq.separation.delta_sep


def test_augment_close_drops_separation():
    grown = bi.augment_close(bi.gen_geometric(8), 0.05)
    assert len(grown) == 9
    assert grown.separation.delta_sep < 0.05


def test_hayman_bounds():
    report = bi.hayman_bounds(bi.gen_geometric(12), [0, 3, 6, 9])
    assert report.hypothesis_holds
    assert report.all_q_pass
    assert report.passed
    assert report.q_bound == pytest.approx(math.exp(-2.0), abs=0.0)


def test_bloch_interpolation_end_to_end():
    seq = bi.gen_geometric(6)
    targets = [1.0, 0.0, 0.5 + 0.25j, 0.0, -1.0, 0.125j]
    problem = bi.InterpolationProblem(seq, targets, bi.Space.BLOCH)
    f = bi.interpolate_bloch(problem)
    assert f.kind == "primitive"
    assert f.eval(0.0) == 0.0

    report = bi.verify(problem, f)
    assert report.passed
    assert report.max_residual <= 1e-9
    assert report.norm_bound_ok
    assert report.m_est is not None


def test_hinf_interpolation_is_exact_at_nodes():
    seq = bi.gen_geometric(5)
    targets = [0.5, -0.25, 0.0, 1.0, 0.125]
    problem = bi.InterpolationProblem(seq, targets, bi.Space.HINF)
    f = bi.interpolate_hinf(problem)
    for z, a in zip(seq.points, targets):
        assert f.eval(z) == a


def test_append_point_preserves_values():
    seq = bi.gen_geometric(5)
    targets = [0.5, -0.25, 0.0, 1.0, 0.125]
    problem = bi.InterpolationProblem(seq, targets, bi.Space.HINF)
    f = bi.interpolate_hinf(problem)
    g = bi.append_point(f, seq, 0.3 + 0.4j, 1.0 - 0.5j)
    for z in seq.points:
        assert g.eval(z) == f.eval(z)
    assert abs(g.eval(0.3 + 0.4j) - (1.0 - 0.5j)) <= 1e-10


def test_quantize_and_compose():
    seq = bi.gen_geometric(4)
    dec = bi.quantize_to_simple([0.5, 0.5, 1.0, 0.5], 1e-3)
    assert dec.levels == [0.5, 1.0]
    assert dec.parts == [[0, 1, 3], [2]]
    f = bi.simple_function_compose(seq, dec.levels, dec.parts, bi.Space.HINF)
    assert f.eval(seq[0]) == 0.5
    assert f.eval(seq[2]) == 1.0


def test_bloch_seminorm_of_identity():
    report = bi.bloch_seminorm(bi.monomial(1))
    assert report.seminorm_est == 1.0
    assert report.norm_est == 1.0


def test_growth_bound_holds():
    report = bi.check_primitive_bound(bi.kernel_g(0.9))
    assert report.holds


def test_bergman_pairing_reference():
    value = bi.bergman_pairing(bi.monomial(1), bi.monomial(1))
    assert abs(value - 1.0 / 6.0) <= 1e-11
    cross = bi.bergman_pairing(bi.monomial(2), bi.monomial(1))
    assert abs(cross) <= 1e-12


def test_function_json_round_trip():
    seq = bi.gen_geometric(4)
    problem = bi.InterpolationProblem(seq, [1.0, 0.0, -0.5, 0.25j],
                                      bi.Space.BLOCH)
    f = bi.interpolate_bloch(problem)
    g = bi.function_from_json(bi.function_to_json(f))
    for z in [0.1 + 0.2j, -0.3, 0.5j, 0.85]:
        assert g.eval(z) == f.eval(z)
        assert g.deriv(z) == f.deriv(z)


def test_sequence_json_round_trip():
    seq = bi.gen_geometric(7)
    back = bi.sequence_from_json(bi.sequence_to_json(seq))
    assert back.points == seq.points
    assert back.label == seq.label


def test_conditioning_error_surfaces():
    tight = bi.augment_close(bi.gen_geometric(6), 1e-7)
    with pytest.raises(bi.ConditioningError):
        bi.beurling_basis(tight)


def test_derivative_tree():
    b = bi.mobius(0.4 + 0.1j)
    db = bi.derivative(b)
    assert db.kind == "kernel"
    z = 0.2 - 0.3j
    assert db.eval(z) == b.deriv(z)
