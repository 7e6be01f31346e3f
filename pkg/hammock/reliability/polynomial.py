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

"""
Reliability polynomials with exact integer coefficients.

A polynomial in p is a list of Python ints, entry i being the
coefficient of p^i. The reliability polynomial of a network with n
edges is stored in two bases: the pathset counts N_i, with
h(p) = sum_i N_i p^i (1-p)^(n-i), and the expanded power basis
b_i, with h(p) = sum_i b_i p^i.
"""

import math
import numbers
from fractions import Fraction

from scipy.special import comb, perm

from hammock.errors import ProbabilityDomainError


def binom(n, k):
    if k < 0 or k > n:
        return 0
    return int(comb(n, k, exact=True))


def poly_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    res = list(a)
    for i, c in enumerate(b):
        res[i] += c
    return res


def poly_sub(a, b):
    return poly_add(a, [-c for c in b])


def poly_trim(a):
    """Drop trailing zero coefficients (keeps at least one entry)."""
    n = len(a)
    while n > 1 and a[n - 1] == 0:
        n -= 1
    return list(a[:n])


def is_zero_poly(a):
    return all(c == 0 for c in a)


def expand_pathset_counts(counts):
    """
    Expanded coefficients of sum_i N_i p^i (1-p)^(n-i), n = len(counts) - 1.
    """
    n = len(counts) - 1
    b = [0] * (n + 1)
    for i, ni in enumerate(counts):
        if ni == 0:
            continue
        for k in range(n - i + 1):
            b[i + k] += ni * (-1) ** k * binom(n - i, k)
    return b


def expand_cutset_counts(counts):
    """
    Expanded coefficients of 1 - sum_i C_i (1-p)^i p^(n-i),
    n = len(counts) - 1.
    """
    n = len(counts) - 1
    b = [0] * (n + 1)
    b[0] = 1
    for i, ci in enumerate(counts):
        if ci == 0:
            continue
        for k in range(i + 1):
            b[n - i + k] -= ci * (-1) ** k * binom(i, k)
    return b


def compose_one_minus(b):
    """Coefficients of q(1 - p) given the coefficients b of q(p)."""
    res = [0] * len(b)
    for i, bi in enumerate(b):
        if bi == 0:
            continue
        for k in range(i + 1):
            res[k] += bi * (-1) ** k * binom(i, k)
    return res


def poly_derivative(b, k=1):
    """Coefficients of the k-th derivative."""
    if k < 0:
        raise ValueError("Derivative order must be nonnegative")
    if k == 0:
        return list(b)
    if k >= len(b):
        return [0]
    return [b[j] * int(perm(j, k, exact=True)) for j in range(k, len(b))]


def poly_eval(b, p):
    """Horner evaluation; exact when p is an int or Fraction."""
    res = 0
    for c in reversed(b):
        res = res * p + c
    return res


def derivative_at(b, k, p):
    return poly_eval(poly_derivative(b, k), p)


def _as_probability(p):
    if isinstance(p, bool):
        raise TypeError("p must be a number")
    if isinstance(p, numbers.Rational):
        q = Fraction(p)
    elif isinstance(p, numbers.Real):
        if math.isnan(p):
            raise ProbabilityDomainError("p is NaN")
        if math.isinf(p):
            raise ProbabilityDomainError("p = {} is outside [0, 1]".format(p))
        q = Fraction(float(p))
    else:
        raise TypeError("p must be a real number, got {!r}".format(p))
    if q < 0 or q > 1:
        raise ProbabilityDomainError("p = {} is outside [0, 1]".format(p))
    return q


class ReliabilityPolynomial:
    """
    Exact reliability polynomial of a hammock network.

    Attributes:
        length, width, kind: dimensions and kind of the network.
        n (int): number of edges, l * w.
        N (tuple[int]): N_i, the number of pathsets with exactly i edges.
        b (tuple[int]): coefficients of p^i in the expanded form.
    """

    def __init__(self, length, width, kind, counts):
        counts = tuple(int(c) for c in counts)
        self.length = length
        self.width = width
        self.kind = kind
        self.n = len(counts) - 1
        self.N = counts
        self.b = tuple(expand_pathset_counts(counts))

    @property
    def lowest_degree(self):
        """Smallest i with N_i != 0, or None for the zero polynomial."""
        for i, c in enumerate(self.N):
            if c != 0:
                return i
        return None

    def __call__(self, p):
        return evaluate(self, p)

    def __eq__(self, other):
        if not isinstance(other, ReliabilityPolynomial):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __hash__(self):
        return hash((self.length, self.width, self.kind, self.N))

    def __repr__(self):
        return "ReliabilityPolynomial(l={}, w={}, kind={}, b={})".format(
            self.length, self.width, self.kind, list(self.b)
        )

    def to_dict(self):
        """Serializable form; big integers are written as decimal strings."""
        return {
            "l": self.length,
            "w": self.width,
            "kind": self.kind,
            "n": self.n,
            "N": [str(c) for c in self.N],
            "b": [str(c) for c in self.b],
        }

    @classmethod
    def from_dict(cls, d):
        poly = cls(d["l"], d["w"], d["kind"], [int(c) for c in d["N"]])
        if "b" in d and [int(c) for c in d["b"]] != list(poly.b):
            raise ValueError("Expanded coefficients do not match pathset counts")
        return poly

    def table_rows(self):
        """Rows (i, N_i, C_i, b_i) for i = 0..n."""
        cuts = cutset_counts(self)
        return [(i, self.N[i], cuts.C[i], self.b[i]) for i in range(self.n + 1)]


class CutsetCounts:
    """C_i, the number of cutsets with exactly i edges."""

    def __init__(self, counts):
        self.C = tuple(int(c) for c in counts)
        self.n = len(self.C) - 1

    def expanded(self):
        return expand_cutset_counts(self.C)

    def to_dict(self):
        return {"n": self.n, "C": [str(c) for c in self.C]}


def cutset_counts(poly):
    """
    Cutset counts from pathset counts. A subset is a cutset exactly
    when its complement is not a pathset, so C_i = binom(n, n-i) - N_{n-i}.
    """
    n = poly.n
    cuts = CutsetCounts([binom(n, n - i) - poly.N[n - i] for i in range(n + 1)])
    assert cuts.expanded() == list(poly.b)
    return cuts


def evaluate(poly, p):
    """
    Evaluate h(p) = sum_i N_i p^i (1-p)^(n-i).

    Args:
        poly (ReliabilityPolynomial)
        p (int, Fraction or float): probability in [0, 1].

    Returns:
        Fraction if p is rational (int or Fraction), float otherwise.
        Floats are converted exactly and the exact value is rounded once.
    """
    q = _as_probability(p)
    n = poly.n
    res = sum(
        (ni * q**i * (1 - q) ** (n - i) for i, ni in enumerate(poly.N) if ni),
        Fraction(0),
    )
    if isinstance(p, numbers.Rational):
        return res
    return float(res)


def derivative(poly, k):
    """
    Exact k-th derivative of the expanded form, as a coefficient list.
    derivative(poly, 0) is list(poly.b), and the value at 0 of the
    k-th derivative is k! * b_k.
    """
    return poly_derivative(list(poly.b), k)
