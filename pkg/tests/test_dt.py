"""Pants decompositions and twist coordinates."""

import pytest
from hypothesis import given, strategies as st

from curvesys.corpus import dt_decompositions
from curvesys.dtcoords import (
    DTCoords,
    PantsDecomposition,
    dehn_twist,
    dt_from_dict,
    dt_to_dict,
    load_dt,
    pants_curve_intersection,
    save_dt,
    solve_twists,
    twist_multiply,
    validate_coords,
    validate_decomposition,
)
from curvesys.errors import (
    CountMismatch,
    IntersectionMismatch,
    MissedCurveTwistMismatch,
    NegativeTwistOnMissedCurve,
    ParityViolation,
    SlotReuse,
    TwistOnMissedCurve,
    UnknownCurveIndex,
)

GENUS2 = dt_decompositions()["genus2_closed"][0]
TORUS1 = dt_decompositions()["one_holed_torus"][0]
PANTS = dt_decompositions()["pair_of_pants"][0]


# ----------------------------------------------------------------------
# decomposition validation
# ----------------------------------------------------------------------


def test_shapes_of_shipped_decompositions():
    assert validate_decomposition(GENUS2) == validate_decomposition(GENUS2)
    s = validate_decomposition(GENUS2)
    assert (s.genus, s.boundary, s.curves) == (2, 0, 3)
    s = validate_decomposition(PANTS)
    assert (s.genus, s.boundary, s.curves) == (0, 3, 0)
    s = validate_decomposition(TORUS1)
    assert (s.genus, s.boundary, s.curves) == (1, 1, 1)


def test_slot_reuse_rejected():
    d = PantsDecomposition(
        pants=("P", "Q"),
        gluing=(
            (("P", 0), ("Q", 0)),
            (("P", 0), ("Q", 1)),
        ),
    )
    with pytest.raises(SlotReuse):
        validate_decomposition(d)


def test_unknown_pants_rejected():
    d = PantsDecomposition(pants=("P",), gluing=(((("X"), 0), ("P", 0)),))
    with pytest.raises(CountMismatch):
        validate_decomposition(d)


# ----------------------------------------------------------------------
# coordinate validation
# ----------------------------------------------------------------------


def test_valid_coords_example():
    validate_coords(GENUS2, DTCoords(m=(2, 0, 0), t=(3, 0, 1), b=()))


def test_parity_violation():
    with pytest.raises(ParityViolation):
        validate_coords(GENUS2, DTCoords(m=(1, 1, 1), t=(0, 0, 0), b=()))


def test_negative_twist_on_missed_curve():
    with pytest.raises(NegativeTwistOnMissedCurve):
        validate_coords(GENUS2, DTCoords(m=(2, 0, 0), t=(0, -1, 0), b=()))


def test_boundary_parity():
    validate_coords(PANTS, DTCoords(m=(), t=(), b=(2, 1, 1)))
    with pytest.raises(ParityViolation):
        validate_coords(PANTS, DTCoords(m=(), t=(), b=(1, 1, 1)))
    validate_coords(TORUS1, DTCoords(m=(1,), t=(4,), b=(2,)))
    with pytest.raises(ParityViolation):
        validate_coords(TORUS1, DTCoords(m=(1,), t=(0,), b=(1,)))


def test_wrong_lengths():
    with pytest.raises(CountMismatch):
        validate_coords(GENUS2, DTCoords(m=(2, 0), t=(0, 0), b=()))
    with pytest.raises(CountMismatch):
        DTCoords(m=(1, 2), t=(0,), b=())


# ----------------------------------------------------------------------
# operations
# ----------------------------------------------------------------------


def test_pants_curve_intersection():
    x = DTCoords(m=(2, 0, 0), t=(0, 0, 0), b=())
    assert pants_curve_intersection(x, 1) == 2
    assert pants_curve_intersection(x, 2) == 0
    with pytest.raises(UnknownCurveIndex):
        pants_curve_intersection(x, 4)
    with pytest.raises(UnknownCurveIndex):
        pants_curve_intersection(x, 0)


def test_twist_multiply():
    x = DTCoords(m=(2, 0, 0), t=(1, 0, 1), b=())
    assert twist_multiply(x, (2, 0, 0)).t == (3, 0, 1)
    assert twist_multiply(x, (0, 0, 0)) == x
    with pytest.raises(TwistOnMissedCurve):
        twist_multiply(x, (0, 1, 0))


def test_dehn_twist():
    x = DTCoords(m=(2, 0, 0), t=(3, 0, 1), b=())
    assert dehn_twist(x, 1, "positive").t == (5, 0, 1)
    assert dehn_twist(x, 2, "positive") == x
    assert dehn_twist(x, 2, "negative") == x
    assert dehn_twist(dehn_twist(x, 1, "positive"), 1, "negative") == x


def test_solve_twists():
    m = (2, 0, 0)
    x1 = DTCoords(m=m, t=(3, 0, 1), b=())
    x2 = DTCoords(m=m, t=(1, 0, 1), b=())
    assert solve_twists(x1, x2) == (2, 0, 0)
    assert solve_twists(x1, x1) == (0, 0, 0)
    with pytest.raises(IntersectionMismatch):
        solve_twists(x1, DTCoords(m=(4, 0, 0), t=(1, 0, 1), b=()))
    with pytest.raises(MissedCurveTwistMismatch):
        solve_twists(x1, DTCoords(m=m, t=(3, 0, 2), b=()))


coords3 = st.tuples(
    st.tuples(*[st.sampled_from([0, 2, 4])] * 3),
    st.tuples(*[st.integers(-5, 5)] * 3),
)


@given(coords3, st.tuples(*[st.integers(-4, 4)] * 3))
def test_round_trip_property(mt, k):
    m, t = mt
    t = tuple(abs(ti) if mi == 0 else ti for mi, ti in zip(m, t))
    k = tuple(0 if mi == 0 else ki for mi, ki in zip(m, k))
    x = DTCoords(m=m, t=t, b=())
    validate_coords(GENUS2, x)
    y = twist_multiply(x, k)
    assert (y.m, y.b) == (x.m, x.b)
    assert solve_twists(y, x) == k
    validate_coords(GENUS2, y)


@given(coords3, st.tuples(*[st.integers(-4, 4)] * 3), st.tuples(*[st.integers(-4, 4)] * 3))
def test_twist_commutation(mt, k1, k2):
    m, t = mt
    t = tuple(abs(ti) if mi == 0 else ti for mi, ti in zip(m, t))
    k1 = tuple(0 if mi == 0 else ki for mi, ki in zip(m, k1))
    k2 = tuple(0 if mi == 0 else ki for mi, ki in zip(m, k2))
    x = DTCoords(m=m, t=t, b=())
    lhs = twist_multiply(twist_multiply(x, k1), k2)
    rhs = twist_multiply(x, tuple(a + b for a, b in zip(k1, k2)))
    assert lhs == rhs


# ----------------------------------------------------------------------
# file format
# ----------------------------------------------------------------------


@pytest.mark.parametrize("name", sorted(dt_decompositions()))
def test_file_round_trip(tmp_path, name):
    d, x = dt_decompositions()[name]
    path = tmp_path / f"{name}.json"
    save_dt(d, x, path)
    d2, x2 = load_dt(path)
    assert d2 == d and x2 == x


def test_file_fields():
    d, x = dt_decompositions()["genus2_closed"]
    data = dt_to_dict(d, x)
    assert set(data) == {"pants", "gluing", "m", "t", "b"}
    assert data["gluing"][0] == ["P.0", "Q.0"]
    back_d, back_x = dt_from_dict(data)
    assert back_d == d and back_x == x


def test_malformed_file():
    with pytest.raises(CountMismatch):
        dt_from_dict({"pants": [], "gluing": [["P0", "Q.0"]], "m": [], "t": [], "b": []})
    with pytest.raises(CountMismatch):
        dt_from_dict({"pants": []})
