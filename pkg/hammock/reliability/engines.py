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

from hammock.reliability.frontier import count_pathsets_frontier
from hammock.reliability.polynomial import ReliabilityPolynomial
from hammock.reliability.subsets import count_pathsets
from hammock.settings import get_default_settings

ENGINES = ("brute", "frontier", "auto")


def reliability_bruteforce(net, settings=None):
    """
    Reliability polynomial from the pathset test applied to all
    2^(lw) edge subsets.

    Args:
        net (HammockNetwork)
        settings (HammockSettings or None): brute_max_edges bounds l*w.

    Returns:
        ReliabilityPolynomial
    """
    if settings is None:
        settings = get_default_settings()
    settings.require("brute_max_edges", net.nedge, "brute-force subset scan")
    counts = count_pathsets(net, settings)
    return ReliabilityPolynomial(net.length, net.width, net.kind, counts)


def reliability_frontier(net, settings=None):
    """
    Reliability polynomial from the column-sweep dynamic program.
    Gives the same result as reliability_bruteforce wherever both run.

    Args:
        net (HammockNetwork)
        settings (HammockSettings or None): frontier_max_width bounds w.

    Returns:
        ReliabilityPolynomial
    """
    if settings is None:
        settings = get_default_settings()
    counts = count_pathsets_frontier(net, settings)
    return ReliabilityPolynomial(net.length, net.width, net.kind, counts)


def select_engine(net, engine, settings):
    if engine not in ENGINES:
        raise ValueError("engine must be one of {}".format(ENGINES))
    if engine == "auto":
        return "brute" if net.nedge <= settings.brute_max_edges else "frontier"
    return engine


def get_reliability(net, engine="auto", settings=None):
    """
    Reliability polynomial of net with the requested engine. "auto"
    uses brute force when l*w <= brute_max_edges and the frontier
    sweep otherwise.
    """
    if settings is None:
        settings = get_default_settings()
    if select_engine(net, engine, settings) == "brute":
        return reliability_bruteforce(net, settings)
    return reliability_frontier(net, settings)
