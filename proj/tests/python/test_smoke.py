import math

import numpy as np
import pytest

import holo


def random_field(n, seed):
    rng = np.random.default_rng(seed)
    return rng.uniform(0, 1, (n, n)) * np.exp(2j * np.pi * rng.uniform(0, 1, (n, n)))


def test_propagation_round_trip():
    f = random_field(64, 1)
    g = holo.propagate(holo.propagate(f, 0.2), -0.2)
    assert np.linalg.norm(g - f) / np.linalg.norm(f) < 1e-8


def test_non_square_shape_is_kept():
    f = random_field(64, 2)[:32, :]
    assert holo.propagate(f, 0.1).shape == (32, 64)


def test_binarize_constant_half():
    mask = holo.binarize(np.full((16, 16), 0.5))
    assert mask.dtype == np.bool_
    assert mask.sum() == 128


def test_encoders_are_phase_only():
    f = holo.propagate(random_field(64, 3), 0.2)
    phase, mask = holo.encode_proposed(f, cancel="random", seed=5)
    assert phase.shape == mask.shape == (64, 64)
    for p in (phase, holo.encode_dph(f), holo.encode_naive(f)):
        assert p.min() >= 0 and p.max() < 2 * np.pi
    on = mask
    assert np.allclose(np.exp(1j * phase[on]), np.exp(1j * np.angle(f[on])))


def test_canceling_phase_alternates():
    c = holo.canceling_phase(np.zeros((2, 4), bool), "alternate")
    assert np.array_equal(c.ravel(), np.tile([0.0, np.pi], 4))


def test_reconstruct_unit_field():
    rng = np.random.default_rng(4)
    unit = np.exp(2j * np.pi * rng.uniform(0, 1, (64, 64)))
    phase = holo.encode_naive(unit)
    out = holo.reconstruct(phase, 0.2, aperture=1.0, shape="square")
    expected = holo.propagate(unit, -0.2)
    assert np.linalg.norm(out - expected) / np.linalg.norm(expected) < 1e-8


def test_metrics():
    ref = np.full((8, 8), 100.0)
    assert holo.psnr(ref + 16, ref, 255.0) == pytest.approx(20 * math.log10(255 / 16), abs=1e-9)
    assert math.isinf(holo.psnr(ref, ref, 255.0))
    a, b = random_field(16, 5), random_field(16, 6)
    assert holo.light_efficiency(a, b) * holo.light_efficiency(b, a) == pytest.approx(1.0, abs=1e-12)


def test_hermite_gaussian_nodal_line():
    beam = holo.hermite_gaussian(128, 128, m=1, n=0, waist=16 * 8e-6)
    assert np.abs(beam[:, 64]).max() < 1e-6


def test_errors_are_raised():
    with pytest.raises(holo.HoloError):
        holo.encode_dph(np.zeros((8, 8), complex))
    with pytest.raises(ValueError):
        holo.binarize(np.full((4, 4), 2.0))


def test_scenario_report():
    report = holo.run_scenario("fig3", width=128, height=128, synthetic=True)
    methods = [r["method"] for r in report["reports"]]
    assert methods == ["proposed", "dph"]
    assert report["config"]["width"] == 128
    assert report["reports"][1]["eta"] == 1.0
