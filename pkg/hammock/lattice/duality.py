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
Dual networks, minpath/mincut enumeration and the executable forms of
the mincut/minpath complementation theorem and its pathset/cutset
corollary.

The complementary edge of a diagonal is the other diagonal of the same
unit square. Complementing every edge of H^(i)_{l,w} gives the dual
network on the lattice points of the other parity, with sources on the
bottom row y = 0 and termini on the top row y = w.
"""

import numpy as np
from pyscf.lib import logger

from hammock.lattice.network import (
    Edge,
    EdgeSubset,
    LatticePoint,
    build_hammock,
    flip_kind,
    lattice_network,
    permute_subset,
    reflect_network,
)
from hammock.reliability.engines import get_reliability
from hammock.reliability.subsets import cutset_table, minimal_masks, pathset_table
from hammock.settings import get_default_settings
from hammock.verification.report import VerificationReport

MINCUT_STRATEGIES = ("dual", "direct")


def complement_edge(e):
    """A_{x,y}A_{x+1,y+-1} -> A_{x+1,y}A_{x,y+-1}, the edge that cuts e."""
    a, b = e
    return Edge.between((b.x, a.y), (a.x, b.y))


class DualCorrespondence:
    """
    A network, its dual and the edge bijection e -> complement(e).

    Attributes:
        base (HammockNetwork)
        dual (HammockNetwork)
        edge_map (list[int]): edge_map[i] is the dual index of the
            complement of base.edges[i].
        inverse_map (list[int]): the reverse bijection.
    """

    def __init__(self, base, dual, edge_map):
        self.base = base
        self.dual = dual
        self.edge_map = list(edge_map)
        self.inverse_map = [0] * len(self.edge_map)
        for i, j in enumerate(self.edge_map):
            self.inverse_map[j] = i

    def to_dual(self, subset):
        """Sigma -> Sigma bar."""
        self.base.check_subset(subset)
        return permute_subset(subset, self.edge_map, self.dual.nedge)

    def from_dual(self, subset):
        self.dual.check_subset(subset)
        return permute_subset(subset, self.inverse_map, self.base.nedge)

    def reversed(self):
        return DualCorrespondence(self.dual, self.base, self.inverse_map)

    def to_dict(self):
        return {
            "base": self.base.to_dict(),
            "dual": self.dual.to_dict(),
            "edge_map": list(self.edge_map),
        }


def dual_network(net):
    """
    Build the dual of net: the complementary vertices and edges in the
    same rectangle, with terminals on the other pair of sides. The dual
    of the dual is net again.

    Returns:
        DualCorrespondence
    """
    orientation = "bt" if net.orientation == "lr" else "lr"
    dual = lattice_network(net.length, net.width, flip_kind(net.kind), orientation)
    complements = [complement_edge(e) for e in net.edges]
    assert set(complements) == set(dual.edges)
    all_points = {
        LatticePoint(x, y)
        for x in range(net.length + 1)
        for y in range(net.width + 1)
    }
    assert all_points - set(net.vertices) == set(dual.vertices)
    edge_map = [dual.edge_index[e] for e in complements]
    return DualCorrespondence(net, dual, edge_map)


def enumerate_minpaths(net):
    """
    All minimal pathsets of net, as edge subsets sorted by bitmask.

    A minpath is the edge set of a vertex-distinct X-path from a source
    to a terminus that meets no other terminal, so the search starts
    from each source, never enters another source and stops at the
    first terminus it reaches.
    """
    adj = {v: [] for v in net.vertices}
    for i, e in enumerate(net.edges):
        adj[e.a].append((e.b, i))
        adj[e.b].append((e.a, i))
    sources = set(net.sources)
    termini = set(net.termini)
    found = set()
    for start in net.sources:
        on_path = {start}
        mask = 0
        stack = [iter(adj[start])]
        trail = []
        while stack:
            step = next(stack[-1], None)
            if step is None:
                stack.pop()
                if trail:
                    v, i = trail.pop()
                    on_path.discard(v)
                    mask ^= 1 << i
                continue
            v, i = step
            if v in on_path or v in sources:
                continue
            if v in termini:
                found.add(mask | 1 << i)
                continue
            on_path.add(v)
            mask ^= 1 << i
            trail.append((v, i))
            stack.append(iter(adj[v]))
    return [EdgeSubset(m, net.nedge) for m in sorted(found)]


def size_histogram(subsets):
    """Number of subsets of each cardinality, keyed by cardinality."""
    hist = {}
    for s in subsets:
        hist[len(s)] = hist.get(len(s), 0) + 1
    return dict(sorted(hist.items()))


def enumerate_mincuts(net, strategy="dual", settings=None):
    """
    All minimal cutsets of net, as edge subsets sorted by bitmask.

    Args:
        net (HammockNetwork)
        strategy (str): "dual" maps the minpaths of the dual network
            back through edge complementation; "direct" keeps the
            cutsets none of whose one-edge-smaller subsets is a cutset,
            over all 2^n subsets (bounded by mincut_max_edges).
        settings (HammockSettings or None)
    """
    if settings is None:
        settings = get_default_settings()
    if strategy == "dual":
        corr = dual_network(net)
        cuts = [corr.from_dual(s) for s in enumerate_minpaths(corr.dual)]
        return sorted(cuts)
    elif strategy == "direct":
        settings.require("mincut_max_edges", net.nedge, "direct mincut enumeration")
        cuts = cutset_table(pathset_table(net, settings))
        return [EdgeSubset(int(m), net.nedge) for m in minimal_masks(cuts, net.nedge)]
    else:
        raise ValueError("strategy must be one of {}".format(MINCUT_STRATEGIES))


def verify_theorem1(length, width, kind=1, settings=None):
    """
    Check that Sigma is a mincut of H^(kind)_{length,width} exactly when
    its complement Sigma bar is a minpath of the dual, with mincuts
    enumerated directly (not through the dual).
    """
    if settings is None:
        settings = get_default_settings()
    log = logger.new_logger(settings)
    net = build_hammock(length, width, kind)
    corr = dual_network(net)
    mincuts = enumerate_mincuts(net, "direct", settings)
    dual_minpaths = enumerate_minpaths(corr.dual)
    images = [corr.to_dual(s) for s in mincuts]
    minpath_set = set(dual_minpaths)
    image_set = set(images)
    witness = None
    for cut, image in zip(mincuts, images):
        if image not in minpath_set:
            witness = {"direction": "mincut->minpath", "subset": cut.to_dict()}
            break
    if witness is None:
        for path in dual_minpaths:
            if path not in image_set:
                witness = {"direction": "minpath->mincut", "subset": path.to_dict()}
                break
    mincut_sizes = size_histogram(mincuts)
    minpath_sizes = size_histogram(dual_minpaths)
    if witness is None and mincut_sizes != minpath_sizes:
        witness = {"direction": "sizes", "subset": None}
    report = VerificationReport(
        "theorem1",
        {"l": length, "w": width, "kind": kind},
        counts={
            "mincuts": len(mincuts),
            "dual_minpaths": len(dual_minpaths),
            "mincut_sizes": mincut_sizes,
            "dual_minpath_sizes": minpath_sizes,
        },
        witness=witness,
    )
    log.info("theorem1 l=%d w=%d kind=%d: %s", length, width, kind, report.passed)
    return report


def _map_masks(masks, edge_map):
    mapped = np.zeros_like(masks)
    for i, j in enumerate(edge_map):
        mapped |= ((masks >> i) & 1) << j
    return mapped


def verify_corollary1(length, width, kind=1, settings=None):
    """
    Check over all 2^(lw) subsets Sigma that Sigma is a pathset of
    H^(kind)_{length,width} iff Sigma bar is a cutset of the dual.
    """
    if settings is None:
        settings = get_default_settings()
    log = logger.new_logger(settings)
    net = build_hammock(length, width, kind)
    settings.require("exhaustive_max_edges", net.nedge, "exhaustive duality check")
    corr = dual_network(net)
    paths = pathset_table(net, settings)
    dual_cuts = cutset_table(pathset_table(corr.dual, settings))
    masks = np.arange(paths.size, dtype=np.int64)
    agree = paths == dual_cuts[_map_masks(masks, corr.edge_map)]
    bad = np.flatnonzero(~agree)
    witness = None
    if bad.size:
        witness = EdgeSubset(int(bad[0]), net.nedge).to_dict()
    report = VerificationReport(
        "corollary1",
        {"l": length, "w": width, "kind": kind},
        counts={
            "subsets": int(paths.size),
            "pathsets": int(np.count_nonzero(paths)),
            "dual_cutsets": int(np.count_nonzero(dual_cuts)),
            "mismatches": int(bad.size),
        },
        witness=witness,
    )
    log.info("corollary1 l=%d w=%d kind=%d: %s", length, width, kind, report.passed)
    return report


def verify_remark3(length, width, kind=1, engine="auto", settings=None):
    """
    Check that reflecting the dual of H^(kind)_{length,width} across the
    first bisectrix gives H^(flip kind)_{width,length}, and that the
    two have the same pathset counts.
    """
    if settings is None:
        settings = get_default_settings()
    net = build_hammock(length, width, kind)
    dual = dual_network(net).dual
    reflected = reflect_network(dual)[0]
    expected = build_hammock(width, length, flip_kind(kind))
    witness = None
    if reflected != expected:
        witness = {"reflected": repr(reflected), "expected": repr(expected)}
    dual_counts = get_reliability(dual, engine, settings).N
    expected_counts = get_reliability(expected, engine, settings).N
    return VerificationReport(
        "remark3",
        {"l": length, "w": width, "kind": kind},
        counts={"edges": net.nedge},
        residuals={"N": [a - b for a, b in zip(dual_counts, expected_counts)]},
        witness=witness,
    )
