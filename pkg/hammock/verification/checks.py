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
Reliability identities of hammock networks checked as exact integer
polynomial identities: the duality identity between H^(i)_{l,w} and
H^(2/i)_{w,l}, the point symmetry of odd square hammocks, the vanishing
derivatives at 0 and 1, and the comparison of the two kinds.
"""

from fractions import Fraction

from pyscf.lib import logger

from hammock.lattice.duality import verify_corollary1, verify_remark3, verify_theorem1
from hammock.lattice.network import build_hammock, flip_kind
from hammock.reliability.engines import get_reliability
from hammock.reliability.polynomial import (
    compose_one_minus,
    derivative_at,
    evaluate,
    poly_add,
    poly_eval,
    poly_sub,
)
from hammock.settings import get_default_settings
from hammock.verification.report import VerificationReport

CHECKS = (
    "theorem1",
    "corollary1",
    "remark3",
    "duality_identity",
    "self_symmetry",
    "derivative_orders",
    "remark1",
)


class PolynomialCache:
    """Reliability polynomials keyed by (l, w, kind), computed once."""

    def __init__(self, engine="auto", settings=None):
        self.engine = engine
        self.settings = get_default_settings() if settings is None else settings
        self._polys = {}

    def get(self, length, width, kind):
        key = (length, width, kind)
        if key not in self._polys:
            net = build_hammock(length, width, kind)
            self._polys[key] = get_reliability(net, self.engine, self.settings)
        return self._polys[key]


def _cache_for(cache, engine, settings):
    if cache is None:
        return PolynomialCache(engine, settings)
    return cache


def _one_minus_residual(h, g):
    """Coefficients of h(p) + g(1 - p) - 1."""
    res = poly_add(list(h.b), compose_one_minus(list(g.b)))
    res[0] -= 1
    return res


def verify_duality_identity(
    length, width, kind=1, engine="auto", settings=None, cache=None
):
    """
    Check h^(kind)_{l,w}(p) = 1 - h^(flip kind)_{w,l}(1 - p) coefficient
    by coefficient.
    """
    cache = _cache_for(cache, engine, settings)
    h = cache.get(length, width, kind)
    g = cache.get(width, length, flip_kind(kind))
    return VerificationReport(
        "duality_identity",
        {"l": length, "w": width, "kind": kind},
        counts={"n": h.n},
        residuals={"h(p) + g(1-p) - 1": _one_minus_residual(h, g)},
    )


def verify_self_symmetry(k, engine="auto", settings=None, cache=None):
    """
    Check that (1/2, 1/2) is a center of symmetry of the reliability of
    the square hammock of side 2k + 1: h(p) + h(1 - p) - 1 = 0 exactly.
    """
    if isinstance(k, bool) or not isinstance(k, int) or k < 0:
        raise ValueError("k must be a nonnegative integer, got {!r}".format(k))
    side = 2 * k + 1
    cache = _cache_for(cache, engine, settings)
    h = cache.get(side, side, 1)
    half = evaluate(h, Fraction(1, 2))
    witness = None
    if half != Fraction(1, 2):
        witness = {"h(1/2)": str(half)}
    return VerificationReport(
        "self_symmetry",
        {"k": k, "l": side, "w": side},
        counts={"n": h.n},
        residuals={"h(p) + h(1-p) - 1": _one_minus_residual(h, h)},
        details={"h(1/2)": str(half)},
        witness=witness,
    )


def verify_derivative_orders(
    length, width, kind=1, engine="auto", settings=None, cache=None
):
    """
    Check that h^(k)(0) = 0 for k < l (so b_k = 0), h(1) = 1 and
    h^(k)(1) = 0 for 1 <= k <= w - 1.
    """
    cache = _cache_for(cache, engine, settings)
    h = cache.get(length, width, kind)
    b = list(h.b)
    return VerificationReport(
        "derivative_orders",
        {"l": length, "w": width, "kind": kind},
        counts={"n": h.n, "lowest_degree": h.lowest_degree},
        residuals={
            "b_k, k < l": b[:length],
            "h(1) - 1": [poly_eval(b, 1) - 1],
            "h^(k)(1), 1 <= k < w": [derivative_at(b, k, 1) for k in range(1, width)],
        },
    )


def verify_remark1(length, width, engine="auto", settings=None, cache=None):
    """
    Compare the two kinds of hammock networks with dimensions (l, w).
    When l or w is odd they are isomorphic and the pathset counts must
    agree. When both are even the polynomials are expected to differ;
    equality there is reported in details["unexpected"] and does not
    fail the check.
    """
    cache = _cache_for(cache, engine, settings)
    h1 = cache.get(length, width, 1)
    h2 = cache.get(length, width, 2)
    diff = poly_sub(list(h1.b), list(h2.b))
    lowest = next((i for i, c in enumerate(diff) if c != 0), None)
    details = {"identical": lowest is None}
    if lowest is not None:
        details["lowest_difference"] = {
            "degree": lowest,
            "kind1": h1.b[lowest],
            "kind2": h2.b[lowest],
        }
    residuals = {}
    if length % 2 or width % 2:
        residuals["N1 - N2"] = [a - b for a, b in zip(h1.N, h2.N)]
    else:
        details["unexpected"] = lowest is None
    return VerificationReport(
        "remark1",
        {"l": length, "w": width},
        counts={"n": h1.n},
        residuals=residuals,
        details=details,
    )


def run_suite(max_l, max_w, checks=None, engine="auto", settings=None):
    """
    Run the selected checks over every 1 <= l <= max_l, 1 <= w <= max_w
    and both kinds, in a fixed order.

    Args:
        max_l, max_w (int): dimension grid.
        checks (sequence[str] or None): subset of CHECKS, all if None.
        engine (str): reliability engine for the polynomial checks.
        settings (HammockSettings or None)

    Returns:
        list[VerificationReport]. The subset-exhaustive checks (theorem1,
        corollary1) are skipped on dimensions beyond their ceilings.
    """
    if settings is None:
        settings = get_default_settings()
    if checks is None:
        checks = CHECKS
    unknown = [c for c in checks if c not in CHECKS]
    if unknown:
        raise ValueError("Unknown checks {}; choose from {}".format(unknown, CHECKS))
    if max_l < 1 or max_w < 1:
        raise ValueError("max_l and max_w must be at least 1")
    log = logger.new_logger(settings)
    t0 = (logger.process_clock(), logger.perf_counter())
    cache = PolynomialCache(engine, settings)
    selected = [c for c in CHECKS if c in checks]
    reports = []
    for name in selected:
        if name == "self_symmetry":
            for k in range((min(max_l, max_w) - 1) // 2 + 1):
                reports.append(verify_self_symmetry(k, engine, settings, cache))
            continue
        for length in range(1, max_l + 1):
            for width in range(1, max_w + 1):
                if name == "remark1":
                    reports.append(
                        verify_remark1(length, width, engine, settings, cache)
                    )
                    continue
                for kind in (1, 2):
                    report = _run_one(
                        name, length, width, kind, engine, settings, cache
                    )
                    if report is None:
                        log.info("skip %s l=%d w=%d kind=%d", name, length, width, kind)
                    else:
                        reports.append(report)
    nfail = sum(not r.passed for r in reports)
    log.note("%d checks run, %d failed", len(reports), nfail)
    log.timer("verification suite", *t0)
    return reports


def _run_one(name, length, width, kind, engine, settings, cache):
    nedge = length * width
    if name == "theorem1":
        if nedge > settings.mincut_max_edges:
            return None
        return verify_theorem1(length, width, kind, settings)
    elif name == "corollary1":
        if nedge > settings.exhaustive_max_edges:
            return None
        return verify_corollary1(length, width, kind, settings)
    elif name == "remark3":
        return verify_remark3(length, width, kind, engine, settings)
    elif name == "duality_identity":
        return verify_duality_identity(length, width, kind, engine, settings, cache)
    elif name == "derivative_orders":
        return verify_derivative_orders(length, width, kind, engine, settings, cache)
    raise ValueError("Unknown check {}".format(name))
