#!/usr/bin/env python
# Hammock: exact two-terminal reliability of hammock (brick-wall) networks
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>
#

import math
import unittest
from fractions import Fraction

import numpy as np
from numpy.testing import assert_equal

from hammock.errors import ProbabilityDomainError
from hammock.lattice.network import build_hammock
from hammock.reliability.engines import reliability_bruteforce
from hammock.reliability.polynomial import (
    ReliabilityPolynomial,
    binom,
    compose_one_minus,
    cutset_counts,
    derivative,
    derivative_at,
    evaluate,
    expand_cutset_counts,
    expand_pathset_counts,
    poly_eval,
    poly_trim,
)

H23 = [0, 0, 5, -4, -3, 4, -1]
H32 = [0, 0, 0, 4, -2, -2, 1]
H33 = [0, 0, 0, 8, -6, -6, 0, 12, -9, 2]


def brute(length, width, kind=1):
    return reliability_bruteforce(build_hammock(length, width, kind))


class TestIntegerPolynomials(unittest.TestCase):
    def test_binom(self):
        assert binom(6, 3) == 20
        assert binom(3, 5) == 0
        assert binom(3, -1) == 0
        assert binom(60, 30) == math.comb(60, 30)

    def test_expand(self):
        # h = p for a single edge, in both bases
        assert expand_pathset_counts([0, 1]) == [0, 1]
        assert expand_cutset_counts([0, 1]) == [0, 1]
        # two edges in series: N = (0, 0, 1)
        assert expand_pathset_counts([0, 0, 1]) == [0, 0, 1]
        # two edges in parallel: N = (0, 2, 1) -> 2p - p^2
        assert expand_pathset_counts([0, 2, 1]) == [0, 2, -1]

    def test_compose_one_minus(self):
        assert compose_one_minus([0, 1]) == [1, -1]
        assert compose_one_minus([1]) == [1]
        assert compose_one_minus(compose_one_minus(H33)) == H33
        for p in [Fraction(1, 3), Fraction(5, 7)]:
            assert poly_eval(compose_one_minus(H23), p) == poly_eval(H23, 1 - p)

    def test_trim(self):
        assert poly_trim([1, 2, 0, 0]) == [1, 2]
        assert poly_trim([0, 0]) == [0]


class TestReliabilityPolynomial(unittest.TestCase):
    def test_published_polynomials(self):
        for kind in (1, 2):
            assert list(brute(2, 3, kind).b) == H23
            assert list(brute(3, 2, kind).b) == H32
            assert list(brute(3, 3, kind).b) == H33

    def test_series(self):
        for length in range(1, 7):
            assert list(brute(length, 1).b) == [0] * length + [1]

    def test_even_square(self):
        assert list(brute(2, 2, 1).b) == [0, 0, 4, -4, 1]
        assert list(brute(2, 2, 2).b) == [0, 0, 2, 0, -1]

    def test_count_invariants(self):
        for length in range(1, 5):
            for width in range(1, 5):
                for kind in (1, 2):
                    poly = brute(length, width, kind)
                    n = length * width
                    assert poly.n == n
                    assert poly.lowest_degree == length
                    assert poly.N[n] == 1
                    for i, ni in enumerate(poly.N):
                        assert 0 <= ni <= binom(n, i)
                    cuts = cutset_counts(poly)
                    for i in range(n + 1):
                        assert poly.N[i] + cuts.C[n - i] == binom(n, i)
                    assert sum(poly.N) + sum(cuts.C) == 2**n
                    assert cuts.expanded() == list(poly.b)

    def test_cutset_counts(self):
        cuts = cutset_counts(brute(1, 1))
        assert cuts.C == (0, 1)
        cuts = cutset_counts(brute(2, 3))
        assert cuts.C[:3] == (0, 0, 0)
        assert cuts.C[3] >= 4
        assert cuts.to_dict()["n"] == 6

    def test_evaluate(self):
        h23 = brute(2, 3)
        assert evaluate(h23, Fraction(1, 2)) == Fraction(43, 64)
        assert isinstance(evaluate(h23, Fraction(1, 2)), Fraction)
        assert evaluate(h23, 0.5) == 0.671875
        assert isinstance(evaluate(h23, 0.5), float)
        assert h23(Fraction(1, 2)) == Fraction(43, 64)
        h33 = brute(3, 3)
        assert evaluate(h33, Fraction(1, 2)) == Fraction(1, 2)
        for poly in (h23, h33, brute(2, 2, 2)):
            assert evaluate(poly, 0) == 0
            assert evaluate(poly, 1) == 1
            p = Fraction(2, 7)
            assert evaluate(poly, p) == poly_eval(list(poly.b), p)

    def test_evaluate_domain(self):
        h = brute(1, 1)
        bad = [-0.1, 1.5, Fraction(3, 2), -1, float("nan"), float("inf"), -math.inf]
        for p in bad + [np.float64("inf")]:
            with self.assertRaises(ProbabilityDomainError):
                evaluate(h, p)
        with self.assertRaises(TypeError):
            evaluate(h, "0.5")

    def test_monotone(self):
        for dims in [(2, 3), (3, 2), (3, 3), (4, 2)]:
            poly = brute(*dims)
            vals = [evaluate(poly, Fraction(j, 100)) for j in range(101)]
            assert all(a <= b for a, b in zip(vals[:-1], vals[1:]))

    def test_derivative(self):
        h32 = brute(3, 2)
        assert derivative(h32, 0) == list(h32.b)
        for k in range(3):
            assert derivative_at(list(h32.b), k, 0) == 0
        assert derivative_at(list(h32.b), 1, 1) == 0
        assert derivative(h32, 1) == [0, 0, 12, -8, -10, 6]
        for k in range(h32.n + 1):
            assert poly_eval(derivative(h32, k), 0) == math.factorial(k) * h32.b[k]
        assert derivative(h32, 7) == [0]
        with self.assertRaises(ValueError):
            derivative(h32, -1)

    def test_serialization(self):
        poly = brute(2, 3)
        d = poly.to_dict()
        assert d["b"] == ["0", "0", "5", "-4", "-3", "4", "-1"]
        assert d["N"][-1] == "1"
        assert (d["l"], d["w"], d["kind"], d["n"]) == (2, 3, 1, 6)
        assert ReliabilityPolynomial.from_dict(d) == poly
        d["b"][2] = "6"
        with self.assertRaises(ValueError):
            ReliabilityPolynomial.from_dict(d)

    def test_table_rows(self):
        rows = brute(2, 3).table_rows()
        assert len(rows) == 7
        assert rows[2][0] == 2 and rows[2][3] == 5
        assert_equal(np.array([r[0] for r in rows]), np.arange(7))

    def test_big_integers(self):
        # N_i are exact Python ints well beyond 64 bits
        counts = [0] * 70 + [binom(100, 70) - 1]
        counts += [binom(100, i) for i in range(71, 101)]
        poly = ReliabilityPolynomial(10, 10, 1, counts)
        assert poly.N[70] > 2**64
        assert evaluate(poly, 1) == 1
        assert ReliabilityPolynomial.from_dict(poly.to_dict()) == poly


if __name__ == "__main__":
    unittest.main()
