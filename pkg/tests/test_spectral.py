import numpy as np
import pytest

from conftest import brute_force_char_poly, small_corpus
from qwmix.errors import InvalidArgumentError
from qwmix.graphs import complete, cycle, hamming, is_regular, paley
from qwmix.spectral import (
    IntPolynomial,
    char_poly_exact,
    cosine_minimal_poly,
    eigendecompose,
    integral_spectrum,
    rational_cosine,
)


class TestCharPoly:
    def test_k2(self):
        assert char_poly_exact(complete(2)).coeffs == (-1, 0, 1)

    def test_c6(self):
        # (x^2 - 4)(x^2 - 1)^2 expanded from the known spectrum {+-2, +-1^2}
        assert char_poly_exact(cycle(6)).coeffs == (-4, 0, 9, 0, -6, 0, 1)

    def test_c5_against_brute_force(self):
        got = char_poly_exact(cycle(5)).coeffs
        assert got == brute_force_char_poly(cycle(5).adj)
        assert got == (-2, 5, 0, -5, 0, 1)  # x^5 - 5x^3 + 5x - 2

    def test_corpus_matches_brute_force(self):
        for g in small_corpus():
            assert char_poly_exact(g).coeffs == brute_force_char_poly(g.adj), g.label

    def test_monic(self):
        for g in small_corpus():
            assert char_poly_exact(g).is_monic()

    def test_evaluated_at_float_eigenvalues(self):
        for g in small_corpus():
            poly = char_poly_exact(g)
            scale = float(max(1, g.degrees().max())) ** g.n
            for theta in np.linalg.eigvalsh(g.adj.astype(float)):
                assert abs(poly(float(theta))) <= 1e-6 * max(1.0, scale)


class TestIntegralSpectrum:
    def test_examples(self):
        assert integral_spectrum(cycle(6)) is True
        assert integral_spectrum(cycle(5)) is False
        for n in (2, 3, 5, 8):
            assert integral_spectrum(complete(n)) is True

    def test_cycles_classification(self):
        integral = {n for n in range(3, 25) if integral_spectrum(cycle(n))}
        assert integral == {3, 4, 6}

    def test_agrees_with_float_eigenvalues(self):
        for g in small_corpus():
            w = np.linalg.eigvalsh(g.adj.astype(float))
            float_integral = bool(np.all(np.abs(w - np.round(w)) < 1e-7))
            assert integral_spectrum(g) == float_integral, g.label


class TestEigendecompose:
    def test_k4(self):
        dec = eigendecompose(complete(4))
        assert np.allclose(dec.thetas, [3.0, -1.0])
        assert dec.mults.tolist() == [1, 3]

    def test_c5_golden(self):
        dec = eigendecompose(cycle(5))
        assert np.allclose(dec.thetas, [2.0, 2 * np.cos(2 * np.pi / 5), 2 * np.cos(4 * np.pi / 5)], atol=1e-9)
        assert dec.mults.tolist() == [1, 2, 2]

    def test_cube_binomial_multiplicities(self):
        dec = eigendecompose(hamming(3, 2))
        assert np.allclose(dec.thetas, [3, 1, -1, -3])
        assert dec.mults.tolist() == [1, 3, 3, 1]

    def test_reconstruction_and_projector_algebra(self):
        for g in small_corpus() + [paley(13), hamming(2, 4)]:
            dec = eigendecompose(g)
            n = g.n
            e = dec.idempotents
            assert np.max(np.abs(e.sum(axis=0) - np.eye(n))) <= 1e-9
            rebuilt = np.einsum("k,kij->ij", dec.thetas, e)
            assert np.max(np.abs(rebuilt - g.adj)) <= 1e-9
            for j in range(len(dec.thetas)):
                for k in range(len(dec.thetas)):
                    prod = e[j] @ e[k]
                    target = e[j] if j == k else 0.0
                    assert np.max(np.abs(prod - target)) <= 1e-9
                assert abs(np.trace(e[j]) - dec.mults[j]) <= 1e-9

    def test_largest_eigenvalue_is_valency(self):
        for g in small_corpus():
            k = is_regular(g)
            if k is not None:
                assert abs(eigendecompose(g).thetas[0] - k) <= 1e-9

    def test_bad_tolerance(self):
        with pytest.raises(InvalidArgumentError):
            eigendecompose(cycle(4), group_tol=0.0)


class TestRationalCosine:
    def test_known_set(self):
        assert {n for n in range(1, 50) if rational_cosine(n)} == {1, 2, 3, 4, 6}

    def test_examples(self):
        assert rational_cosine(4) and rational_cosine(6)
        assert not rational_cosine(5)


class TestCosineMinimalPoly:
    def test_p3(self):
        assert cosine_minimal_poly(3).coeffs == (1, 1)  # x + 1

    def test_p5(self):
        poly = cosine_minimal_poly(5)
        assert poly.coeffs == (-1, 1, 1)  # x^2 + x - 1
        theta = 2 * np.cos(2 * np.pi / 5)
        assert abs(theta**2 + theta - 1) < 1e-12

    def test_p7(self):
        poly = cosine_minimal_poly(7)
        assert poly.coeffs == (-1, -2, 1, 1)  # x^3 + x^2 - 2x - 1
        theta = 2 * np.cos(2 * np.pi / 7)
        assert abs(poly(theta)) < 1e-12

    @pytest.mark.parametrize("p", [5, 7, 11, 13, 17, 19])
    def test_degree_and_root(self, p):
        poly = cosine_minimal_poly(p)
        assert poly.degree == (p - 1) // 2
        assert poly.is_monic()
        assert abs(poly(2 * np.cos(2 * np.pi / p))) < 1e-9

    def test_rejects_non_prime(self):
        for p in (2, 9, 15):
            with pytest.raises(InvalidArgumentError):
                cosine_minimal_poly(p)


def min_relation_residual(values: np.ndarray, bound: int) -> float:
    """Distance to the nearest nontrivial integer relation c0 + sum c_r v_r.

    Exhausts coefficient vectors c_r in [-bound, bound] (the free constant
    c0 is optimal at the nearest integer, so the residual is the distance
    of sum c_r v_r to Z).  Values exclude the leading 1.
    """
    grids = np.meshgrid(*[np.arange(-bound, bound + 1)] * len(values), indexing="ij")
    total = sum(grid * v for grid, v in zip(grids, values))
    dist = np.abs(total - np.round(total))
    origin = tuple([bound] * len(values))
    dist[origin] = np.inf  # the all-zero combination is trivial
    return float(dist.min())


class TestIndependenceSurrogate:
    """{1, theta_1, ..., theta_(p-3)/2} admits no small integer relation."""

    @pytest.mark.parametrize("p,bound", [(5, 1000), (7, 1000), (11, 30)])
    def test_no_small_relation(self, p, bound):
        d = (p - 1) // 2
        thetas = 2 * np.cos(2 * np.pi * np.arange(1, d) / p)  # theta_1..theta_{d-1}
        assert min_relation_residual(thetas, bound) > 1e-8
