import math

import numpy as np
import pytest

from common.curve_census import count_states_on_curve
from common.errors import DomainError
from common.pspectrum_codec import (
    Encoding, data_points, decode_a, decode_b, encode, encode_phi_array, error_bound, geometric_phi_oracle,
    hsam_delta, make_encoding, sphere_radius,
)


def _narrower_than_column(a, g):
    return sphere_radius(a, g) ** 2 < a * a + a


@pytest.mark.parametrize("g", [1.0, 2.0, 3.0, 4.0, 5.0, 6.0])
def test_encode_agrees_with_geometric_oracle(g):
    a_values = np.arange(1, 101)
    closed = encode_phi_array(a_values, g)
    oracle = np.array([geometric_phi_oracle(int(a), 0.0, g) for a in a_values])
    built = np.isfinite(oracle)
    assert np.array_equal(~built, np.array([_narrower_than_column(int(a), g) for a in a_values]))
    assert np.isfinite(closed[built]).all()
    assert np.abs(closed[built] - oracle[built]).max() < 1e-6


def test_encode_matches_census_program_value():
    phi, _ = encode(1, 0.0, 1.01)
    assert phi == pytest.approx(0.8551424558015703, rel=1e-12)
    assert encode(4, 0.0, 1.0)[0] == pytest.approx(0.18350739506959554, rel=1e-12)


@pytest.mark.parametrize("a, b, g", [(1, 0.0, 1.0), (7, 0.5, 2.0), (40, -0.25, 6.0), (100, 1.0, 3.5)])
def test_reference_and_data_points_lie_on_the_sphere(a, b, g):
    center, reference, data = data_points(a, b, g)
    p = center.as_array()
    r = sphere_radius(a, g)
    ref_vec = reference.as_array() - p
    data_vec = data.as_array() - p
    assert abs(np.linalg.norm(ref_vec) - np.linalg.norm(data_vec)) < 1e-9
    for vec in (ref_vec, data_vec):
        assert abs(float(vec @ vec) - r * r) < 1e-9
    assert reference.z == center.z
    assert reference.y == data.y == b


def test_oracle_has_no_point_when_sphere_is_narrower_than_column():
    assert data_points(2, 0.0, 4.0) is None
    assert math.isnan(geometric_phi_oracle(2, 0.0, 4.0))
    assert math.isfinite(encode(2, 0.0, 4.0)[0])


def test_encode_scalar_matches_array():
    phi, theta = encode(7, 0.25, 2.5)
    assert phi == encode_phi_array([7], 2.5)[0]
    assert theta == pytest.approx(math.asin(0.25))


@pytest.mark.parametrize("b", [-1.0, -0.3, 0.0, 0.5, 1.0])
def test_theta_round_trip(b):
    _, theta = encode(3, b, 1.5)
    assert abs(decode_b(theta) - b) < 1e-12


@pytest.mark.parametrize("g", [1.01, 2.0, 5.0, 10.0, 17.5, 24.0])
def test_decode_round_trip_on_accepted_indices(ax7maf1, g):
    _, _, _, first_rejected = count_states_on_curve(g, ax7maf1)
    hint = first_rejected - 1
    a_values = np.arange(1, first_rejected)
    phis = encode_phi_array(a_values, g)
    accepted = np.isfinite(phis)
    assert accepted.any()
    for a, phi in zip(a_values[accepted], phis[accepted]):
        assert decode_a(float(phi), g, hint) == a


def test_make_encoding_scales_to_frequency():
    enc = make_encoding(4, 0.0, 3.0, cd=2309321037)
    assert enc.encodable
    assert enc.omega == pytest.approx(enc.phi * 2309321037)
    assert make_encoding(4, 0.0, 3.0).omega == enc.phi


def test_unencodable_is_a_value_not_an_error():
    enc = Encoding(a=1, b=0.0, g=1.0, phi=float("nan"), theta=0.0, omega=float("nan"))
    assert not enc.encodable


@pytest.mark.parametrize("a, b, g", [(0, 0.0, 1.0), (1, 1.5, 1.0), (1, 0.0, 0.0), (2.5, 0.0, 1.0)])
def test_encode_rejects_bad_arguments(a, b, g):
    with pytest.raises(DomainError):
        encode(a, b, g)


def test_decode_a_rejects_non_finite_phi():
    with pytest.raises(DomainError):
        decode_a(float("nan"), 1.0, 10)
    with pytest.raises(DomainError):
        decode_b(2.0)


def test_error_bounds():
    assert error_bound(5, 5.0) == (5.5, 10)
    assert hsam_delta(1.0, 3.0) == 0.0
    assert hsam_delta(3.0, 2.0) == pytest.approx(1.0)
    with pytest.raises(DomainError):
        hsam_delta(1.0, 1.0, sign=-1)


@pytest.mark.parametrize("g", [1.01, 2.0, 5.0, 10.0, 24.0])
def test_gaps_shrink_along_a_curve(ax7maf1, g):
    _, _, _, first_rejected = count_states_on_curve(g, ax7maf1)
    phis = encode_phi_array(np.arange(1, first_rejected), g)
    phis = phis[np.isfinite(phis)]
    gaps = np.abs(np.diff(phis))
    assert (np.diff(gaps) < 0).all()


def test_curves_do_not_cross():
    a_values = np.arange(5, 101)
    curves = np.array([encode_phi_array(a_values, g) for g in (1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 10.0, 20.0)])
    assert np.isfinite(curves).all()
    assert (np.diff(curves, axis=0) > 0).all()


def test_decode_a_equidistant_tie_goes_to_smaller_index():
    mid = (encode(3, 0.0, 1.0)[0] + encode(4, 0.0, 1.0)[0]) / 2
    assert decode_a(mid, 1.0, 10) == 3


def test_census_count_matches_one_index_at_a_time_loop(ax7maf1):
    g = 2.0
    count, previous, a = 0, None, 0
    while True:
        a += 1
        phi = encode(a, 0.0, g)[0]
        if math.isnan(phi):
            continue
        if previous is None or previous - phi > 50 * (phi / 1e6):
            previous = phi
            count += 1
        else:
            break
    assert count_states_on_curve(g, ax7maf1)[0] == count
    assert count_states_on_curve(g, ax7maf1)[3] == a
