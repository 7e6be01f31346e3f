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
Vectorized scans over every edge subset of a network. A block of
subsets is a block of consecutive bitmasks; reachability from the
sources is propagated for the whole block at once, one numpy boolean
row per vertex, until it stops growing.
"""

import numpy as np
from joblib import Parallel, delayed
from pyscf.lib import logger, prange


class ScanPlan:
    """
    Plain-integer description of a network, cheap to ship to joblib
    workers.
    """

    def __init__(self, net):
        self.nedge = net.nedge
        self.nvert = net.nvert
        self.sources = [net.vertex_index[v] for v in net.sources]
        self.termini = [net.vertex_index[v] for v in net.termini]
        self.ends = net.endpoint_indices()


def scan_block(plan, p0, p1):
    """
    Args:
        plan (ScanPlan): network to scan.
        p0, p1 (int): the block is the masks p0 <= mask < p1.

    Returns:
        is_path (np.ndarray(bool)): pathset flag per mask.
        size (np.ndarray(int)): number of edges per mask.
    """
    masks = np.arange(p0, p1, dtype=np.int64)
    shifts = np.arange(plan.nedge, dtype=np.int64)
    bits = ((masks[None, :] >> shifts[:, None]) & 1).astype(bool)
    reach = np.zeros((plan.nvert, masks.size), dtype=bool)
    reach[plan.sources] = True
    nreach = np.count_nonzero(reach)
    while True:
        for i, (u, v) in enumerate(plan.ends):
            joined = (reach[u] | reach[v]) & bits[i]
            reach[u] |= joined
            reach[v] |= joined
        new_nreach = np.count_nonzero(reach)
        if new_nreach == nreach:
            break
        nreach = new_nreach
    is_path = reach[plan.termini].any(axis=0)
    return is_path, bits.sum(axis=0)


def _count_block(plan, p0, p1):
    is_path, size = scan_block(plan, p0, p1)
    return np.bincount(size[is_path], minlength=plan.nedge + 1)


def _table_block(plan, p0, p1):
    return scan_block(plan, p0, p1)[0]


def _map_blocks(func, plan, settings):
    blocks = list(prange(0, 1 << plan.nedge, settings.chunk_size))
    if settings.n_jobs == 1 or len(blocks) == 1:
        return [func(plan, p0, p1) for p0, p1 in blocks]
    # results come back in block order, so the reduction is deterministic
    return Parallel(n_jobs=settings.n_jobs)(
        delayed(func)(plan, p0, p1) for p0, p1 in blocks
    )


def count_pathsets(net, settings):
    """
    Count the pathsets of net by size over all 2^n edge subsets.

    Returns:
        list[int] of length n + 1, entry i is N_i.
    """
    log = logger.new_logger(settings)
    t0 = (logger.process_clock(), logger.perf_counter())
    plan = ScanPlan(net)
    counts = [0] * (plan.nedge + 1)
    for block in _map_blocks(_count_block, plan, settings):
        for i, c in enumerate(block):
            counts[i] += int(c)
    log.timer("pathset count over 2^{} subsets".format(plan.nedge), *t0)
    return counts


def pathset_table(net, settings):
    """
    Returns:
        np.ndarray(bool) of length 2^n; entry m is True iff the subset
        with bitmask m is a pathset of net.
    """
    log = logger.new_logger(settings)
    t0 = (logger.process_clock(), logger.perf_counter())
    plan = ScanPlan(net)
    table = np.concatenate(_map_blocks(_table_block, plan, settings))
    log.timer("pathset table over 2^{} subsets".format(plan.nedge), *t0)
    return table


def cutset_table(path_table):
    """Cutset flags from pathset flags: C is a cutset iff E - C is not a pathset."""
    full = path_table.size - 1
    masks = np.arange(path_table.size, dtype=np.int64)
    return ~path_table[full ^ masks]


def minimal_masks(table, nedge):
    """
    Masks of the minimal members of an up-closed family: members none
    of whose one-edge-smaller subsets is a member.
    """
    masks = np.arange(table.size, dtype=np.int64)
    minimal = table.copy()
    for i in range(nedge):
        has_i = (masks >> i) & 1 == 1
        minimal &= ~(has_i & table[masks ^ (1 << i)])
    return np.flatnonzero(minimal)
