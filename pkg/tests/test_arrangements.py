import itertools

import numpy as np
import pytest

from monorank import (
    AllowableSequence,
    DomainError,
    HyperplaneArrangement,
    MonotoneDistortion,
    PointArrangement,
    check_circuit_axioms,
    column_permutations,
    hyperplane_topes,
    is_rank2_topes,
    matrix_from_allowable,
    point_circuits,
    point_topes,
    radon_rank,
    random_representation,
    realize_matrix,
    sweep_permutations,
    threshold_topes,
    validate_allowable,
    vc_dimension,
)

from .fixtures import DISTORTION_A, DISTORTION_B, NORMALS_B, POINTS_B


# -- realization -------------------------------------------------------------


def test_realize_recovers_distortion_fixture():
    pts = PointArrangement(2, POINTS_B)
    normals = HyperplaneArrangement(2, NORMALS_B)
    assert np.allclose(pts.points @ normals.normals.T, DISTORTION_B, atol=1e-12)
    fs = [MonotoneDistortion.exp_scale(10.0)] * 3
    realized = realize_matrix(pts, normals, fs)
    assert np.max(np.abs(realized - DISTORTION_A)) <= 1e-2


def test_realize_identity_is_inner_products():
    rep = random_representation(4, 3, 2, seed=1, identity_distortions=True)
    assert np.allclose(rep.matrix, rep.points.points @ rep.normals.normals.T)


def test_realize_dimension_mismatch():
    from monorank import DimensionMismatchError

    pts = PointArrangement(2, [[0.0, 1.0]])
    normals = HyperplaneArrangement(3, [[1.0, 0.0, 0.0]])
    with pytest.raises(DimensionMismatchError):
        realize_matrix(pts, normals, [MonotoneDistortion.identity()])


def test_random_representation_bounds():
    for seed in range(5):
        rep = random_representation(5, 4, 2, seed=seed)
        assert radon_rank(rep.matrix) <= 2


def test_random_representation_deterministic():
    a = random_representation(4, 3, 2, seed=42)
    b = random_representation(4, 3, 2, seed=42)
    assert np.array_equal(a.matrix, b.matrix)
    assert np.array_equal(a.points.points, b.points.points)
    assert a.distortions == b.distortions


def test_random_representation_rank1_single_sweep_order():
    for seed in range(8):
        rep = random_representation(6, 4, 1, seed=seed)
        perms = column_permutations(rep.matrix)
        base = perms[0]
        assert all(p == base or p == tuple(reversed(base)) for p in perms)


def test_monotone_distortions_increasing():
    xs = np.linspace(-5, 5, 101)
    for f in (
        MonotoneDistortion.identity(),
        MonotoneDistortion.exp_scale(2.5),
        MonotoneDistortion.power_odd(3),
        MonotoneDistortion.piecewise_linear([-1.0, 0.0, 2.0], [0.0, 0.5, 4.0]),
    ):
        ys = f(xs)
        assert np.all(np.diff(ys) > 0)


def test_piecewise_linear_validation():
    with pytest.raises(DomainError):
        MonotoneDistortion.piecewise_linear([0.0, 1.0], [1.0, 0.5])


# -- topes of arrangements ----------------------------------------------------


def test_point_topes_affinely_independent_triangle():
    pts = PointArrangement(2, [[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]])
    assert len(point_topes(pts)) == 8


def test_point_topes_square_is_cube_minus_radon_pair():
    pts = PointArrangement(2, [[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]])
    topes = point_topes(pts)
    got = set(topes.strings())
    everything = {"".join(s) for s in itertools.product("+-", repeat=4)}
    assert got == everything - {"+-+-", "-+-+"}


def test_point_topes_collinear_middle_point():
    pts = PointArrangement(1, [[0.0], [1.0], [2.0]])
    strings = set(point_topes(pts).strings())
    assert "+-+" not in strings and "-+-" not in strings
    assert "++-" in strings


def test_hyperplane_topes_two_independent_normals():
    arr = HyperplaneArrangement(2, [[1.0, 0.0], [0.0, 1.0]])
    assert len(hyperplane_topes(arr)) == 4


def test_hyperplane_topes_three_generic_normals_rank2_cycle():
    arr = HyperplaneArrangement(2, [[1.0, 0.2], [-0.3, 1.0], [1.0, 1.0]])
    topes = hyperplane_topes(arr)
    assert len(topes) == 6
    assert is_rank2_topes(topes)


def test_tope_vc_dimension_senses_dimension():
    rng = np.random.default_rng(31)
    for d in (1, 2, 3):
        pts = PointArrangement(d, rng.standard_normal((d + 3, d)))
        assert vc_dimension(point_topes(pts)) == d + 1
    for d in (2, 3):
        arr = HyperplaneArrangement(d, rng.standard_normal((d + 2, d)))
        assert vc_dimension(hyperplane_topes(arr)) == d


def test_threshold_topes_inside_point_topes():
    for seed in range(5):
        rep = random_representation(5, 3, 2, seed=seed)
        pt = point_topes(rep.points)
        assert all(v in pt for v in threshold_topes(rep.matrix))


def test_tope_guard():
    from monorank import ResourceLimitError

    pts = PointArrangement(1, np.arange(25.0).reshape(-1, 1))
    with pytest.raises(ResourceLimitError):
        point_topes(pts)


# -- circuits ------------------------------------------------------------------


def test_point_circuits_interior_point():
    pts = PointArrangement(
        2, [[0.0, 0.0], [4.0, 0.0], [0.0, 4.0], [1.0, 1.0]]
    )
    strings = set(point_circuits(pts).circuits.strings())
    assert strings == {"+++-", "---+"}


def test_point_circuits_square_diagonals():
    pts = PointArrangement(2, [[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]])
    strings = set(point_circuits(pts).circuits.strings())
    assert strings == {"+-+-", "-+-+"}


def test_point_circuits_orthogonal_to_topes():
    rng = np.random.default_rng(7)
    pts = PointArrangement(2, rng.standard_normal((5, 2)))
    circuits = point_circuits(pts)
    topes = point_topes(pts)
    assert all(c.orthogonal(t) for c in circuits for t in topes)
    assert check_circuit_axioms(circuits).ok


def test_point_circuits_degenerate_error():
    pts = PointArrangement(2, [[0.0, 0.0], [1.0, 0.0], [2.0, 0.0], [3.0, 1.0]])
    with pytest.raises(DomainError):
        point_circuits(pts)


def test_general_position_flagging():
    assert PointArrangement(2, [[0, 0], [1, 0], [0, 1], [2, 3]]).in_general_position()
    assert not PointArrangement(
        2, [[0, 0], [1, 0], [2, 0], [0, 1]]
    ).in_general_position()


# -- sweeps and allowable sequences --------------------------------------------


def test_sweep_triangle():
    pts = PointArrangement(2, [[0.0, 0.0], [2.0, 0.3], [0.7, 1.9]])
    seq = sweep_permutations(pts)
    assert len(seq) == 6 and seq.is_simple
    perms = list(seq)
    for cur, nxt in zip(perms, perms[1:] + perms[:1]):
        diff = [i for i in range(3) if cur[i] != nxt[i]]
        assert len(diff) == 2 and diff[1] == diff[0] + 1


def test_sweep_two_points():
    pts = PointArrangement(2, [[0.0, 0.0], [1.0, 0.5]])
    assert list(sweep_permutations(pts)) == [(1, 2), (2, 1)]


def test_sweep_contains_expected_orders():
    # four points positioned so both 3214 and 3124 occur among the sweeps
    pts = PointArrangement(
        2, [[0.0, 0.3], [0.1, -0.5], [-2.0, 0.0], [2.0, 0.1]]
    )
    perms = set(sweep_permutations(pts))
    assert (3, 2, 1, 4) in perms and (3, 1, 2, 4) in perms


def test_sweep_degenerate_collinear():
    pts = PointArrangement(2, [[0.0, 0.0], [1.0, 0.0], [2.0, 0.0]])
    with pytest.raises(DomainError, match="parallel|collinear"):
        sweep_permutations(pts)


def test_sweep_coincident_points():
    pts = PointArrangement(2, [[0.0, 0.0], [0.0, 0.0], [1.0, 1.0]])
    with pytest.raises(DomainError, match="coincide"):
        sweep_permutations(pts)


def test_sweep_random_simple_configurations():
    rng = np.random.default_rng(13)
    for _ in range(10):
        m = int(rng.integers(3, 7))
        pts = PointArrangement(2, rng.standard_normal((m, 2)))
        seq = sweep_permutations(pts)
        assert len(seq) == m * (m - 1)
        assert seq.is_simple
        report = validate_allowable(list(seq))
        assert report.valid and report.simple


def test_validate_allowable_rotation():
    report = validate_allowable(
        [(1, 2, 3), (2, 1, 3), (2, 3, 1), (3, 2, 1), (3, 1, 2), (1, 3, 2)]
    )
    assert report.valid and report.simple


def test_validate_allowable_pair_reversal_count():
    report = validate_allowable([(1, 2, 3), (3, 2, 1), (1, 2, 3), (3, 2, 1)])
    assert not report.valid
    assert "pair-reversal count" in report.violation


def test_validate_allowable_full_reversal_pair():
    report = validate_allowable([(1, 2, 3), (3, 2, 1)])
    assert report.valid and not report.simple


def test_validate_allowable_bad_step():
    report = validate_allowable(
        [(1, 2, 3), (2, 3, 1), (3, 2, 1), (3, 1, 2), (2, 1, 3), (1, 3, 2)]
    )
    assert not report.valid


def test_validate_allowable_rejects_non_permutation():
    with pytest.raises(DomainError):
        validate_allowable([(1, 1, 2)])


def test_allowable_sequence_canonical_rotation():
    base = [(1, 2, 3), (2, 1, 3), (2, 3, 1), (3, 2, 1), (3, 1, 2), (1, 3, 2)]
    rotated = base[2:] + base[:2]
    assert AllowableSequence(base) == AllowableSequence(rotated)
    assert AllowableSequence(base) == AllowableSequence(list(reversed(base)))


def test_matrix_from_allowable_roundtrip():
    pts = PointArrangement(2, [[0.0, 0.0], [2.0, 0.3], [0.7, 1.9]])
    seq = sweep_permutations(pts)
    matrix = matrix_from_allowable(seq)
    assert matrix.shape == (3, 6)
    assert column_permutations(matrix) == list(seq)
    assert radon_rank(matrix) <= 2


def test_matrix_from_single_permutation():
    matrix = matrix_from_allowable([(1, 2, 3, 4)])
    assert np.array_equal(matrix[:, 0], [1.0, 2.0, 3.0, 4.0])


def test_matrix_from_allowable_rejects_garbage():
    with pytest.raises(DomainError):
        matrix_from_allowable([(1, 2, 2)])


def test_column_orders_appear_among_sweeps():
    # every column order of a planar realization is a sweep order of its points
    for seed in range(6):
        rep = random_representation(5, 4, 2, seed=seed)
        sweeps = set(sweep_permutations(rep.points))
        assert set(column_permutations(rep.matrix)) <= sweeps


def test_allowable_file_roundtrip():
    from monorank import format_allowable_file, parse_allowable_file

    pts = PointArrangement(2, [[0.0, 0.0], [2.0, 0.3], [0.7, 1.9]])
    seq = sweep_permutations(pts)
    text = format_allowable_file(seq)
    parsed = parse_allowable_file(text)
    assert AllowableSequence(parsed) == seq
    assert parse_allowable_file("# note\n1 2 3\n3 2 1\n") == [(1, 2, 3), (3, 2, 1)]
