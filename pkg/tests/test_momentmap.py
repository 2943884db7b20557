"""Moment map evaluation, sampling determinism, polytope comparison, SVG."""

from __future__ import annotations

import cmath
import math
import random
from fractions import Fraction
from pathlib import Path

import pytest

from toricdeg.intlat import IntMatrix
from toricdeg.momentmap import (
    MomentSample,
    ZeroVector,
    emit_svg,
    image_vs_polytope,
    moment,
    moment_of_torus_parameter,
    sample_moment_image,
)
from toricdeg.toric import PolytopeQ, Semigroup, delta_polytope

ELLIPTIC_A = IntMatrix([[1, 0, 3]])
GOLDEN = Path(__file__).resolve().parent / "golden"


def test_moment_coordinate_point_hits_weight():
    A = IntMatrix([[1, 0, 3], [0, 2, 1]])
    for j in range(3):
        z = [0.0, 0.0, 0.0]
        z[j] = 1.0
        assert moment(A, z) == tuple(float(A.entries[i][j]) for i in range(2))


def test_moment_all_ones_average():
    val = moment(ELLIPTIC_A, [1.0, 1.0, 1.0])
    assert abs(val[0] - 4.0 / 3.0) < 1e-12


def test_moment_rejects_zero_vector():
    with pytest.raises(ZeroVector):
        moment(ELLIPTIC_A, [0.0, 0.0, 0.0])


def test_moment_convex_combination_bounds():
    rng = random.Random(4)
    for _ in range(100):
        rows = rng.randint(1, 3)
        cols = rng.randint(2, 5)
        A = IntMatrix([[rng.randint(-5, 5) for _ in range(cols)]
                       for _ in range(rows)])
        z = [complex(rng.uniform(-2, 2), rng.uniform(-2, 2)) for _ in range(cols)]
        if all(abs(x) < 1e-9 for x in z):
            continue
        mu = moment(A, z)
        for i in range(rows):
            lo = min(A.entries[i])
            hi = max(A.entries[i])
            assert lo - 1e-9 <= mu[i] <= hi + 1e-9


def test_moment_scaling_invariance():
    rng = random.Random(8)
    A = IntMatrix([[1, 0, 3], [2, 1, 0]])
    for _ in range(50):
        z = [complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(3)]
        if all(abs(x) < 1e-6 for x in z):
            continue
        lam = complex(rng.uniform(0.1, 2), rng.uniform(-1, 1))
        a = moment(A, z)
        b = moment(A, [lam * x for x in z])
        assert max(abs(p - q) for p, q in zip(a, b)) < 1e-12


def test_torus_parameter_unit_modulus_equivariance():
    rng = random.Random(15)
    A = IntMatrix([[1, 0, 3]])
    for _ in range(50):
        t = cmath.rect(math.exp(rng.uniform(-2, 2)), rng.uniform(0, 6.28))
        u = cmath.rect(1.0, rng.uniform(0, 6.28))
        a = moment_of_torus_parameter(A, (t,))
        b = moment_of_torus_parameter(A, (t * u,))
        assert abs(a[0] - b[0]) < 1e-12


def test_sampling_seed_determinism():
    s1 = sample_moment_image(ELLIPTIC_A, 64, seed=123)
    s2 = sample_moment_image(ELLIPTIC_A, 64, seed=123)
    assert s1 == s2
    s3 = sample_moment_image(ELLIPTIC_A, 64, seed=124)
    assert s1 != s3


def test_elliptic_image_fills_interval():
    samples = sample_moment_image(ELLIPTIC_A, 2000, seed=42)
    D = delta_polytope(Semigroup([(1, 0), (1, 1), (1, 3)], degree_coord=0))
    res = image_vs_polytope(samples, D, 1e-9)
    assert res["inside_fraction"] == 1.0
    assert res["coverage_gap"] < 0.2
    vals = [s.value[0] for s in samples]
    assert min(vals) <= 0.05 and max(vals) >= 2.95


def test_twisted_cubic_samples_within_segment():
    A = IntMatrix([[3, 2, 1, 0]])
    samples = sample_moment_image(A, 500, seed=9)
    P = PolytopeQ([(Fraction(0),), (Fraction(3),)], 1)
    res = image_vs_polytope(samples, P, 1e-9)
    assert res["inside_fraction"] == 1.0


def test_image_vs_polytope_point_case():
    P = PolytopeQ([(Fraction(2), Fraction(5))], 2)
    samples = [MomentSample((2.0, 5.0), (1.0,))] * 3
    res = image_vs_polytope(samples, P, 1e-9)
    assert res == {"inside_fraction": 1.0, "coverage_gap": 0.0}


def test_image_vs_polytope_flags_outsider():
    P = PolytopeQ([(Fraction(0),), (Fraction(3),)], 1)
    samples = [MomentSample((1.0,), (1.0,)), MomentSample((4.0,), (1.0,))]
    res = image_vs_polytope(samples, P, 1e-9)
    assert res["inside_fraction"] == 0.5


def test_image_vs_polytope_2d_exact_path():
    P = PolytopeQ([(0, 0), (2, 0), (0, 2)], 2)
    inside = MomentSample((0.5, 0.5), (1.0,))
    outside = MomentSample((3.0, 3.0), (1.0,))
    res = image_vs_polytope([inside, outside], P, 1e-9)
    assert res["inside_fraction"] == 0.5


def test_svg_outline_only(tmp_path: Path):
    P = PolytopeQ([(Fraction(0),), (Fraction(3),)], 1)
    out = tmp_path / "strip.svg"
    emit_svg([], P, (0, 0), str(out))
    text = out.read_text()
    assert text.startswith("<?xml")
    assert "<circle" not in text
    assert text.count("<line") >= 3  # axis plus a tick per vertex


def test_svg_deterministic_bytes(tmp_path: Path):
    samples = sample_moment_image(ELLIPTIC_A, 50, seed=5)
    D = delta_polytope(Semigroup([(1, 0), (1, 1), (1, 3)], degree_coord=0))
    p1, p2 = tmp_path / "a.svg", tmp_path / "b.svg"
    emit_svg(samples, D, (0, 0), str(p1))
    emit_svg(samples, D, (0, 0), str(p2))
    assert p1.read_bytes() == p2.read_bytes()
    assert p1.read_bytes() == (GOLDEN / "elliptic_strip.svg").read_bytes()


def test_svg_planar_projection(tmp_path: Path):
    # project the six translated cluster values to their first two coordinates
    gens = [(1, 2, 1, 1, 1, 1), (1, 1, 2, 1, 1, 1), (1, 1, 1, 2, 1, 1),
            (1, 1, 1, 1, 2, 1), (1, 1, 0, 2, 2, 1), (1, 1, 1, 1, 1, 2)]
    S = Semigroup(gens, degree_coord=0)
    D = delta_polytope(S)
    A = IntMatrix.from_columns([g[1:] for g in gens])
    samples = sample_moment_image(A, 200, seed=3)
    out = tmp_path / "planar.svg"
    emit_svg(samples, D, (0, 1), str(out))
    text = out.read_text()
    assert "<polygon" in text and text.count("<circle") == 200
    assert out.read_bytes() == (GOLDEN / "gr24_proj01.svg").read_bytes()
