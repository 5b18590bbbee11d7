import pytest

from common.errors import CapacityError, DomainError
from common.simplex_model import (
    CurveClass, build_layout, curve_class, hdo_strength_2q, layout_frames, locate, locate_state,
    maximally_entangled_g, p_measure, surface_group_range, surfaces_adjacent, termination_lines,
)


@pytest.fixture(scope="module")
def layout():
    return build_layout(2, 240000, dg=1e-4)


def test_hdo_strength_and_p_measure():
    assert hdo_strength_2q([0, 0, 0, 0, 0]) == 1
    assert hdo_strength_2q([0.2, 0.2, 0.2, 0.2, 0.2]) == pytest.approx(0.8)
    assert p_measure(2.0, 1.0) == 0.5
    assert p_measure(1.0, 2.0) == 0.0
    with pytest.raises(DomainError):
        p_measure(0.0, 1.0)
    with pytest.raises(DomainError):
        hdo_strength_2q([0, 0, 0])


@pytest.mark.parametrize("a, expected", [
    (0, CurveClass.PRIMARY), (1, CurveClass.SECONDARY), (2, CurveClass.TERTIARY), (3, CurveClass.PRIMARY),
])
def test_curve_class_cycles(a, expected):
    assert curve_class(a) == expected


def test_termination_lines():
    assert termination_lines(20000) == 400


@pytest.mark.parametrize("qubits, faces", [(1, 1), (2, 3), (3, 21)])
def test_surfaces_adjacent(qubits, faces):
    assert surfaces_adjacent(qubits) == faces


def test_two_qubit_layout(layout):
    assert layout.curves_per_vertex_group == 60000
    assert layout.curves_per_surface_group == 20000
    assert layout.unassigned_curves == 0
    assert layout.chief_curves["00"] == pytest.approx(1e-4)
    assert layout.chief_curves["01"] == pytest.approx(6.0)
    assert layout.chief_curves["10"] == pytest.approx(12.0)
    assert layout.chief_curves["11"] == pytest.approx(18.0)
    assert layout.wrap_g == pytest.approx(24.0)


def test_surfaces_are_ordered_by_vertex_sum(layout):
    assert layout.surfaces["00"] == [("00", "01", "10"), ("00", "01", "11"), ("00", "10", "11")]
    assert layout.surfaces["11"] == [("00", "01", "11"), ("00", "10", "11"), ("01", "10", "11")]


def test_locate(layout):
    chief = locate(6.0, layout)
    assert (chief.vertex_group, chief.surface_group, chief.offset) == ("01", 1, 0)
    second = locate(8.0, layout)
    assert (second.vertex_group, second.surface_group, second.offset) == ("01", 2, 0)
    early = locate(0.5, layout)
    assert (early.vertex_group, early.surface_group) == ("00", 1)
    wrap = locate(24.0, layout)
    assert (wrap.vertex_group, wrap.surface_group, wrap.offset) == ("00", 1, 0)
    with pytest.raises(DomainError):
        locate(30.0, layout)


def test_locate_state_carries_curve_class(layout):
    coords = locate_state(13.0, 4, layout)
    assert coords.vertex_group == "10"
    assert coords.a == 4
    assert coords.curve_class == CurveClass.SECONDARY


def test_surface_group_ranges(layout):
    assert surface_group_range(layout, "01", 1) == pytest.approx((6.0, 8.0))
    assert surface_group_range(layout, "01", 3) == pytest.approx((10.0, 12.0))
    assert maximally_entangled_g(layout, "01", 1) == pytest.approx(7.995)
    with pytest.raises(DomainError):
        surface_group_range(layout, "01", 4)


def test_layout_frames(layout):
    chiefs, surfaces = layout_frames(layout)
    assert len(chiefs) == 5
    assert chiefs["chief_g"].iloc[-1] == pytest.approx(24.0)
    assert len(surfaces) == 12
    assert list(surfaces.columns) == ["vertex", "surface", "g_start", "g_end"]


def test_layout_capacity():
    with pytest.raises(CapacityError):
        build_layout(2, 3)
    with pytest.raises(CapacityError):
        build_layout(3, 100)
