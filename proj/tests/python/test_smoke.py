import cmath
import math

import pytest

import huplab


def test_bessel():
    assert huplab.bessel_zero(0, 1) == pytest.approx(2.404825557695773, abs=1e-14)
    x = 2.3
    assert huplab.bessel_j(0.5, x) == pytest.approx(math.sqrt(2 / (math.pi * x)) * math.sin(x), rel=1e-12)
    with pytest.raises(ValueError):
        huplab.bessel_j(0.3, 1.0)
    report = huplab.orders_nonzero(1.0, "integers")
    assert report["all_nonzero"] is True


def test_expr():
    assert huplab.eval_expr("exp(i*pi/2)") == pytest.approx(1j, abs=1e-15)
    assert huplab.eval_expr("t^2 + 1", 3.0) == pytest.approx(10.0)
    with pytest.raises(ValueError):
        huplab.eval_expr("sin(t")


def test_ft_uniform_circle():
    rows = huplab.ft({
        "curve": {"type": "circle"},
        "density": "1/(2*pi)",
        "grid": {"xi": [0, 1, 3], "eta": [0, 0, 1]},
    })
    assert len(rows) == 3
    for xi, eta, value, err in rows:
        assert eta == 0
        assert abs(value - _j0(math.pi * xi)) < 1e-9
        assert err >= 0


def _j0(x):
    # Power series, independent of the library.
    total, term, k = 0.0, 1.0, 0
    while abs(term) > 1e-18 or k < 5:
        total += term
        k += 1
        term *= -(x * x / 4) / (k * k)
    return total


def test_circle_coeff():
    def density(theta):
        return cmath.exp(2j * theta)

    assert abs(huplab.circle_coeff(density, 2) - 1) < 1e-12
    assert abs(huplab.circle_coeff(density, 1)) < 1e-12


def test_certificates():
    out = huplab.annihilate("circle-line")
    assert out["verify"]["passed"] is True
    out = huplab.annihilate("fourlines", p=3, eta0=0.0)
    assert out["verify"]["passed"] is True
    with pytest.raises(ValueError):
        huplab.annihilate("circle-square")


def test_verdicts():
    assert "lattice-cross" in huplab.pair_names()
    assert huplab.verdict("lattice-cross", alpha=1, beta=2)["answer"] == "NotHUP"
    assert huplab.verdict("lattice-cross", alpha=1, beta=1)["answer"] == "HUP"
    assert huplab.verdict("circle-lines", angle="0.25")["answer"] == "Unknown"


def test_fourlines():
    a, b, c = (cmath.exp(1j * math.pi * e) for e in (0.1, 0.7, 1.3))
    tau = huplab.solve_tau(a, b, c, 5)
    # z^5 + tau0 + tau1 z + tau2 z^2 vanishes at the three nodes
    for z in (a, b, c):
        assert abs(tau[0] + tau[1] * z + tau[2] * z * z + z**5) < 1e-12
    assert abs(huplab.homog_sym(2, [a, b]) - (a * a + a * b + b * b)) < 1e-14
    tag, witness = huplab.classify([0.0, 0.5, 1.0, 1.5], 4)
    assert tag in {"P1", "P2", "P3", "P4"}
