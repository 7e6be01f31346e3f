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
Column-sweep (frontier) dynamic program for the pathset counts N_i.

The sweep runs over x = 0, 1, ..., l. Between columns, a state is the
connectivity partition of the vertices in the current column, written
as a restricted growth string (block labels numbered in order of first
appearance), together with one flag per block telling whether the
block is joined to the sources. Each state carries a vector of exact
integers whose entry i counts the edge subsets with i edges processed
so far that lead to that state.

The edges between column x and column x + 1 are decided one at a time
on a partition of both columns; after the last one the old column is
projected out and the labels are renormalized. States with no flagged
block can never reach a terminus and are dropped.
"""

import numpy as np
from pyscf.lib import logger

from hammock.lattice.network import kind_parity, reflect_network, square_edge


def normalize_state(labels, flags):
    """
    Restricted growth string form of a partition.

    Args:
        labels (sequence[int]): block label of each vertex.
        flags (dict or sequence): flag of each label.

    Returns:
        (tuple[int], tuple[bool]) canonical labels and per-block flags.
    """
    relabel = {}
    new_flags = []
    new_labels = []
    for lab in labels:
        if lab not in relabel:
            relabel[lab] = len(relabel)
            new_flags.append(bool(flags[lab]))
        new_labels.append(relabel[lab])
    return tuple(new_labels), tuple(new_flags)


def merge_blocks(state, i, j):
    """State after joining the blocks of vertices i and j."""
    labels, flags = state
    li, lj = labels[i], labels[j]
    if li == lj:
        return state
    merged = [li if lab == lj else lab for lab in labels]
    new_flags = list(flags)
    new_flags[li] = flags[li] or flags[lj]
    return normalize_state(merged, new_flags)


def extend_state(state, nnew):
    """Append nnew unflagged singleton vertices."""
    labels, flags = state
    start = len(flags)
    return (
        labels + tuple(range(start, start + nnew)),
        flags + (False,) * nnew,
    )


def project_state(state, nold):
    """Forget the first nold vertices; None if no block reaches the sources."""
    labels, flags = state
    labels, flags = normalize_state(labels[nold:], flags)
    if not any(flags):
        return None
    return labels, flags


def _accumulate(table, state, weights):
    if state in table:
        table[state] = table[state] + weights
    else:
        table[state] = weights


def _shift(weights):
    shifted = np.zeros_like(weights)
    shifted[1:] = weights[:-1]
    return shifted


def column_rows(x, width, parity):
    return [y for y in range(width + 1) if (x + y) % 2 == parity]


def count_pathsets_frontier(net, settings):
    """
    Pathset counts by the column sweep.

    Args:
        net (HammockNetwork): network with terminals on x = 0 and x = l
            ("bt" networks are reflected first).
        settings (HammockSettings)

    Returns:
        list[int] of length n + 1, entry i is N_i.
    """
    if net.orientation == "bt":
        net = reflect_network(net)[0]
    settings.require("frontier_max_width", net.width, "frontier sweep width")
    log = logger.new_logger(settings)
    t0 = (logger.process_clock(), logger.perf_counter())
    length, width = net.length, net.width
    parity = kind_parity(net.kind)
    n = net.nedge

    rows = column_rows(0, width, parity)
    # every vertex of column 0 is a source
    start = ((0,) * len(rows), (True,))
    weights = np.zeros(n + 1, dtype=object)
    weights[0] = 1
    states = {start: weights}

    for x in range(length):
        old_rows = rows
        rows = column_rows(x + 1, width, parity)
        nold = len(old_rows)
        pos = {(x, y): k for k, y in enumerate(old_rows)}
        pos.update({(x + 1, y): nold + k for k, y in enumerate(rows)})
        table = {}
        for state, weights in states.items():
            _accumulate(table, extend_state(state, len(rows)), weights)
        states = table
        for y in range(width):
            edge = square_edge(x, y, parity)
            i, j = pos[tuple(edge.a)], pos[tuple(edge.b)]
            table = {}
            for state, weights in states.items():
                _accumulate(table, state, weights)
                _accumulate(table, merge_blocks(state, i, j), _shift(weights))
            states = table
        table = {}
        for state, weights in states.items():
            new_state = project_state(state, nold)
            if new_state is not None:
                _accumulate(table, new_state, weights)
        states = table
        log.debug("frontier column %d: %d states", x + 1, len(states))

    counts = np.zeros(n + 1, dtype=object)
    for weights in states.values():
        counts = counts + weights
    log.timer("frontier sweep l={} w={}".format(length, width), *t0)
    return [int(c) for c in counts]
