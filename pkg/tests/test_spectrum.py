import math

import numpy as np
import pytest

from spinpair import model, spectrum, thermo


def _params(omega_sigma, omega_delta, coupling=1.0):
    return model.derive_from_sigma_delta(omega_sigma, omega_delta, coupling)


def _amps(p, theta, phi):
    return spectrum.transition_amplitudes(p, theta, phi)


# Special-case amplitude tables for comparison against the general
# formulas: pure third level, equal mixture of the two lowest levels at
# the crossing, and pure fourth level.
def _pure3_amplitudes(theta, phi):
    s = math.sin(2 * theta)
    c2 = math.cos(2 * theta) ** 2
    sp2, cp2 = math.sin(phi / 2) ** 2, math.cos(phi / 2) ** 2
    pre = -0.5 * math.sin(phi)
    return {
        "T43": pre * (sp2 * (1 - s) - sp2 * c2 - cp2 * (1 - s)),
        "T21": 0.5 * math.sin(phi) * sp2 * c2,
        "T42": pre * sp2 * c2,
        "T31": pre * (cp2 * (1 - s) + sp2 * c2 - sp2 * (1 - s)),
    }


def _mixture34_amplitudes(theta, phi):
    s = math.sin(2 * theta)
    c2 = math.cos(2 * theta) ** 2
    sp2, cp2 = math.sin(phi / 2) ** 2, math.cos(phi / 2) ** 2
    pre = -0.25 * math.sin(phi)
    return {
        "T43": pre * (sp2 * (1 - s) - sp2 * c2),
        "T21": 0.25 * math.sin(phi) * (sp2 * c2 - sp2 * (1 + s)),
        "T42": pre * (sp2 * c2 + cp2 * (1 + s)),
        "T31": pre * (cp2 * (1 - s) + sp2 * c2),
    }


def _pure4_amplitudes(theta, phi):
    s = math.sin(2 * theta)
    sp2, cp2 = math.sin(phi / 2) ** 2, math.cos(phi / 2) ** 2
    pre = -0.5 * math.sin(phi)
    return {
        "T43": pre * cp2 * (1 - s),
        "T21": pre * sp2 * (1 + s),
        "T42": pre * cp2 * (1 + s),
        "T31": pre * sp2 * (1 - s),
    }


def test_frequency_identities():
    rng = np.random.default_rng(51)
    for _ in range(300):
        w2 = rng.uniform(0.0, 5.0)
        w1 = w2 + rng.uniform(0.0, 5.0)
        j = rng.uniform(0.0, 5.0)
        params = model.derive(model.SpinSystem(w1, w2, j))
        freqs = spectrum.transition_frequencies(thermo.energies(params, j))
        scale = max(1.0, params.omega_sigma + params.d_coupling + j)
        assert abs(abs(freqs["T42"] - freqs["T21"]) - (params.d_coupling - j)) <= 1e-12 * scale
        assert abs(abs(freqs["T42"] - freqs["T31"]) - j) <= 1e-12 * scale


def test_frequencies_homonuclear_low_field():
    # inner lines coincide, outer lines sit 2J apart
    levels = thermo.energies(_params(4.0, 0.0), 1.0)
    freqs = spectrum.transition_frequencies(levels)
    assert freqs["T42"] - freqs["T21"] == 0.0
    assert math.isclose(freqs["T31"] - freqs["T43"], 2.0, rel_tol=1e-14)


def test_amplitudes_silent_singlet():
    amps = _amps((0, 0, 1, 0), math.pi / 4, math.radians(5.0))
    assert all(abs(a) <= 1e-12 for a in amps.values())


def test_amplitudes_pure4_example():
    theta, phi = 0.3, math.radians(12.0)
    amps = _amps((0, 0, 0, 1), theta, phi)
    expected = -0.5 * math.sin(phi) * math.cos(phi / 2) ** 2 * (1 + math.sin(2 * theta))
    assert math.isclose(amps["T42"], expected, rel_tol=1e-14)
    for key, value in _pure4_amplitudes(theta, phi).items():
        assert math.isclose(amps[key], value, rel_tol=1e-13, abs_tol=1e-16)


def test_amplitudes_degeneracy_point():
    # equal 3/4 mixture at theta = pi/4: the 4<->2 line dominates, the
    # 2<->1 line is suppressed by tan^2(phi/2), outer lines vanish
    phi = math.radians(5.0)
    amps = _amps((0, 0, 0.5, 0.5), math.pi / 4, phi)
    assert abs(amps["T43"]) <= 1e-12
    assert abs(amps["T31"]) <= 1e-12
    expected_t42 = -0.25 * math.sin(phi) * (math.cos(phi / 2) ** 2 * 2.0)
    assert math.isclose(amps["T42"], expected_t42, rel_tol=1e-12)
    assert math.isclose(amps["T21"], -0.5 * math.sin(phi) * math.sin(phi / 2) ** 2, rel_tol=1e-12)
    assert math.isclose(abs(amps["T21"] / amps["T42"]), math.tan(phi / 2) ** 2, rel_tol=1e-6)


@pytest.mark.parametrize(
    "pops,reduced",
    [
        ((0.0, 0.0, 1.0, 0.0), _pure3_amplitudes),
        ((0.0, 0.0, 0.5, 0.5), _mixture34_amplitudes),
        ((0.0, 0.0, 0.0, 1.0), _pure4_amplitudes),
    ],
)
def test_special_population_reductions(pops, reduced):
    thetas = np.linspace(0.0, math.pi / 4, 20)
    phis = np.linspace(math.radians(1.0), math.pi, 20)
    for theta in thetas:
        for phi in phis:
            general = _amps(pops, theta, phi)
            expected = reduced(theta, phi)
            for key in spectrum.TRANSITIONS:
                assert abs(general[key] - expected[key]) <= 1e-12


def test_roofing_intensities():
    assert spectrum.roofing_intensities(0.0) == (1.0, 1.0)
    inner, outer = spectrum.roofing_intensities(math.pi / 4)
    assert inner == pytest.approx(2.0, abs=1e-15)
    assert outer == pytest.approx(0.0, abs=1e-15)
    inner, outer = spectrum.roofing_intensities(math.pi / 6)
    assert math.isclose(inner, 1.0 + math.sin(math.pi / 3), rel_tol=1e-14)
    assert math.isclose(outer, 1.0 - math.sin(math.pi / 3), rel_tol=1e-14)
    with pytest.raises(ValueError):
        spectrum.roofing_intensities(1.0)


def test_roofing_ratio_limit():
    # high field, high temperature, weak pulse: the 42/43 amplitude
    # ratio approaches the (1 + sin 2t)/(1 - sin 2t) intensity law
    rng = np.random.default_rng(52)
    phi = math.radians(0.5)
    beta = 0.01
    for _ in range(40):
        theta = rng.uniform(0.05, math.pi / 4 - 0.05)
        wd = 1.0 / math.tan(2.0 * theta)
        d = math.hypot(wd, 1.0)
        params = _params(2000.0 * (d + 1.0), wd)
        pops = thermo.populations(thermo.energies(params, 1.0), beta)
        amps = spectrum.transition_amplitudes(pops, params.theta, phi)
        ratio = abs(amps["T42"]) / abs(amps["T43"])
        target = (1.0 + params.sin_2theta) / (1.0 - params.sin_2theta)
        assert abs(ratio / target - 1.0) <= 0.01


def test_flip_angle_validation():
    with pytest.raises(ValueError):
        _amps((0, 0, 1, 0), 0.3, 0.0)
    with pytest.raises(ValueError):
        _amps((0, 0, 1, 0), 0.3, -0.1)
    with pytest.raises(ValueError):
        _amps((0, 0, 1, 0), 0.3, math.pi + 1e-9)
    _amps((0, 0, 1, 0), 0.3, math.pi)  # boundary allowed


def test_simulate_spectrum_silent_homonuclear_ground():
    system = model.SpinSystem(0.5, 0.5, 1.0)
    lines = spectrum.simulate_spectrum(system, math.inf)
    assert [line.transition for line in lines] == list(spectrum.TRANSITIONS)
    assert all(abs(line.amplitude) <= 1e-12 for line in lines)


def test_simulate_spectrum_heteronuclear_ground():
    # theta = 30 deg, below the crossing: visible 3<->1 and 4<->3 lines
    wd = 1.0 / math.tan(math.radians(60.0))
    ws = 1.0
    w1, w2 = 0.5 * (ws + wd), 0.5 * (ws - wd)
    system = model.SpinSystem(w1, w2, 1.0)
    lines = {line.transition: line for line in spectrum.simulate_spectrum(system, math.inf)}
    assert abs(lines["T31"].amplitude) > 1e-3
    assert abs(lines["T43"].amplitude) > 1e-3
    assert abs(lines["T21"].amplitude) < 1e-4
    assert abs(lines["T42"].amplitude) < 1e-4


def test_simulate_spectrum_saturated():
    system = model.SpinSystem(1.3, 0.4, 1.0)
    lines = spectrum.simulate_spectrum(system, 0.0)
    assert all(line.amplitude == 0.0 for line in lines)


def test_render_single_line_peak():
    line = spectrum.SpectrumLine("T42", 2.0, 0.7)
    grid = np.linspace(1.0, 3.0, 201)  # grid center exactly at 2.0
    curve = spectrum.render_lorentzian([line], 0.1, grid)
    assert curve[100] == pytest.approx(0.7, abs=1e-14)
    assert np.argmax(curve) == 100


def test_render_empty_and_linearity():
    grid = np.linspace(0.0, 1.0, 11)
    assert np.array_equal(spectrum.render_lorentzian([], 0.05, grid), np.zeros(11))
    line = spectrum.SpectrumLine("T21", 0.5, 0.2)
    one = spectrum.render_lorentzian([line], 0.05, grid)
    two = spectrum.render_lorentzian([line, line], 0.05, grid)
    assert np.allclose(two, 2.0 * one, rtol=0.0, atol=1e-15)


def test_render_validation():
    line = spectrum.SpectrumLine("T21", 0.5, 0.2)
    with pytest.raises(ValueError):
        spectrum.render_lorentzian([line], 0.0, [0.0, 1.0])
    with pytest.raises(ValueError):
        spectrum.render_lorentzian([line], 0.1, [])
    with pytest.raises(ValueError):
        spectrum.render_lorentzian([line], 0.1, [1.0, 0.5])
