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
The diagonal lattice, X-paths and hammock networks of both kinds.

A hammock network of dimensions (l, w) lives on the lattice points of
the rectangle [0, l] x [0, w]. The network of the first kind uses the
even points (x + y even), the network of the second kind uses the odd
points, and its edges are the diagonals of length sqrt(2) joining
points of that parity. Every unit square of the rectangle carries
exactly one diagonal of each parity, so both kinds have l * w edges,
and the edge of unit square (x, y) has index x * w + y.
"""

import json
from collections import namedtuple

import yaml

from hammock.errors import InvalidDimensionError

KINDS = (1, 2)
# terminals on the vertical sides (x = 0, x = l) or on the horizontal
# sides (y = 0, y = w); dual networks use the latter
ORIENTATIONS = ("lr", "bt")
X_STEPS = frozenset([(1, 1), (-1, 1), (1, -1), (-1, -1)])


def kind_parity(kind):
    """Parity (0 even, 1 odd) of the lattice points of a network kind."""
    return kind - 1


def flip_kind(kind):
    return 3 - kind


def check_dimensions(length, width, kind=1):
    for name, val in (("length", length), ("width", width)):
        if isinstance(val, bool) or not isinstance(val, int):
            raise InvalidDimensionError("{} must be an integer".format(name))
        if val < 1:
            raise InvalidDimensionError(
                "{} must be at least 1, got {}".format(name, val)
            )
    if kind not in KINDS:
        raise InvalidDimensionError("kind must be 1 or 2, got {!r}".format(kind))


class LatticePoint(namedtuple("LatticePoint", ["x", "y"])):
    """The lattice point A_{x,y} = (x, y), with x, y >= 0."""

    __slots__ = ()

    def __new__(cls, x, y):
        x, y = int(x), int(y)
        if x < 0 or y < 0:
            raise ValueError("Lattice points must have x, y >= 0")
        return super(LatticePoint, cls).__new__(cls, x, y)

    @property
    def parity(self):
        return (self.x + self.y) % 2

    def __repr__(self):
        return "A({},{})".format(self.x, self.y)


class Edge(namedtuple("Edge", ["a", "b"])):
    """
    A diagonal segment between two lattice points. Always stored with
    a.x < b.x, so equal edges compare equal.
    """

    __slots__ = ()

    @classmethod
    def between(cls, p, q):
        p = LatticePoint(*p)
        q = LatticePoint(*q)
        if abs(p.x - q.x) != 1 or abs(p.y - q.y) != 1:
            raise ValueError("{} and {} are not diagonal neighbors".format(p, q))
        if p.x > q.x:
            p, q = q, p
        return cls(p, q)

    @property
    def parity(self):
        return self.a.parity

    @property
    def is_up(self):
        return self.b.y > self.a.y

    @property
    def square(self):
        """Lower-left corner of the unit square this edge is a diagonal of."""
        return (self.a.x, min(self.a.y, self.b.y))

    def sort_key(self):
        x, y = self.square
        return (x, y, 0 if self.is_up else 1)

    def __repr__(self):
        return "{}{}".format(self.a, self.b)


def square_edge(x, y, parity):
    """The diagonal of the unit square with lower-left corner (x, y)
    whose endpoints have the given parity."""
    if (x + y) % 2 == parity:
        return Edge(LatticePoint(x, y), LatticePoint(x + 1, y + 1))
    return Edge(LatticePoint(x, y + 1), LatticePoint(x + 1, y))


class EdgeSubset:
    """
    A subset of the edges of one network, stored as a bitmask over the
    network's canonical edge indices (bit i <-> edges[i]).
    """

    __slots__ = ("mask", "nedge")

    def __init__(self, mask, nedge):
        mask = int(mask)
        if mask < 0 or mask >> nedge:
            raise ValueError("mask does not fit in {} edges".format(nedge))
        self.mask = mask
        self.nedge = nedge

    @classmethod
    def from_indices(cls, indices, nedge):
        mask = 0
        for i in indices:
            if not 0 <= i < nedge:
                raise ValueError("edge index {} out of range".format(i))
            mask |= 1 << i
        return cls(mask, nedge)

    @classmethod
    def full(cls, nedge):
        return cls((1 << nedge) - 1, nedge)

    @classmethod
    def empty(cls, nedge):
        return cls(0, nedge)

    def indices(self):
        return [i for i in range(self.nedge) if self.mask >> i & 1]

    @property
    def cardinality(self):
        return bin(self.mask).count("1")

    def __len__(self):
        return self.cardinality

    def __iter__(self):
        return iter(self.indices())

    def __contains__(self, i):
        return bool(self.mask >> i & 1)

    def complement(self):
        return EdgeSubset(self.mask ^ ((1 << self.nedge) - 1), self.nedge)

    def without(self, i):
        return EdgeSubset(self.mask & ~(1 << i), self.nedge)

    def issubset(self, other):
        return self.mask & ~other.mask == 0

    def __eq__(self, other):
        if not isinstance(other, EdgeSubset):
            return NotImplemented
        return self.mask == other.mask and self.nedge == other.nedge

    def __hash__(self):
        return hash((self.mask, self.nedge))

    def __lt__(self, other):
        return self.mask < other.mask

    def __repr__(self):
        return "EdgeSubset({}, nedge={})".format(self.indices(), self.nedge)

    def to_dict(self):
        return {"nedge": self.nedge, "edges": self.indices()}

    @classmethod
    def from_dict(cls, d):
        return cls.from_indices(d["edges"], d["nedge"])


class HammockNetwork:
    """
    A hammock network (or the dual of one) with a canonical edge
    indexing. Instances are treated as immutable.

    Attributes:
        length (int): l, extent of the rectangle along x.
        width (int): w, extent of the rectangle along y.
        kind (int): 1 if the vertices are even lattice points, 2 if odd.
        orientation (str): "lr" when sources sit on x = 0 and termini
            on x = l, "bt" when sources sit on y = 0 and termini on
            y = w (dual networks).
        vertices (tuple[LatticePoint]): sorted vertex set.
        edges (tuple[Edge]): edges in canonical index order.
        sources (tuple[LatticePoint]): input (fictive) nodes S_j.
        termini (tuple[LatticePoint]): output (fictive) nodes T_k.
    """

    def __init__(
        self, length, width, kind, vertices, edges, sources, termini, orientation="lr"
    ):
        if orientation not in ORIENTATIONS:
            raise ValueError("orientation must be one of {}".format(ORIENTATIONS))
        self.length = length
        self.width = width
        self.kind = kind
        self.orientation = orientation
        self.vertices = tuple(vertices)
        self.edges = tuple(edges)
        self.sources = tuple(sources)
        self.termini = tuple(termini)
        self.vertex_index = {v: i for i, v in enumerate(self.vertices)}
        self.edge_index = {e: i for i, e in enumerate(self.edges)}

    @property
    def nedge(self):
        return len(self.edges)

    @property
    def nvert(self):
        return len(self.vertices)

    @property
    def dims(self):
        return (self.length, self.width)

    def subset(self, indices):
        return EdgeSubset.from_indices(indices, self.nedge)

    def subset_of_edges(self, edges):
        return EdgeSubset.from_indices(
            [self.edge_index[Edge.between(*e)] for e in edges], self.nedge
        )

    def full_subset(self):
        return EdgeSubset.full(self.nedge)

    def empty_subset(self):
        return EdgeSubset.empty(self.nedge)

    def edges_of(self, subset):
        self.check_subset(subset)
        return [self.edges[i] for i in subset]

    def check_subset(self, subset):
        if subset.nedge != self.nedge:
            raise ValueError("Edge subset does not belong to this network")

    def endpoint_indices(self):
        """List of (vertex index, vertex index) pairs, one per edge."""
        return [(self.vertex_index[e.a], self.vertex_index[e.b]) for e in self.edges]

    def __eq__(self, other):
        if not isinstance(other, HammockNetwork):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __hash__(self):
        return hash((self.dims, self.kind, self.orientation, self.edges))

    def __repr__(self):
        return "HammockNetwork(l={}, w={}, kind={}, orientation={!r})".format(
            self.length, self.width, self.kind, self.orientation
        )

    def to_dict(self):
        return {
            "length": self.length,
            "width": self.width,
            "kind": self.kind,
            "orientation": self.orientation,
            "vertices": [list(v) for v in self.vertices],
            "edges": [[list(e.a), list(e.b)] for e in self.edges],
            "sources": [list(v) for v in self.sources],
            "termini": [list(v) for v in self.termini],
        }

    @classmethod
    def from_dict(cls, d):
        """
        Rebuild a network from its serialized form. The lists stored
        in d must agree with the network the dimensions describe.
        """
        if not isinstance(d, dict):
            raise ValueError(
                "Network data must be a mapping, got {}".format(type(d).__name__)
            )
        try:
            net = lattice_network(
                d["length"], d["width"], d["kind"], d.get("orientation", "lr")
            )
        except KeyError as e:
            raise ValueError("Network data is missing {}".format(e)) from e
        except TypeError as e:
            raise ValueError("Malformed network data: {}".format(e)) from e
        ref = net.to_dict()
        for key in ("vertices", "edges", "sources", "termini"):
            if key in d and _as_lists(d[key]) != ref[key]:
                raise ValueError("Inconsistent {} in network data".format(key))
        return net

    def dump(self, fname, fmt=None):
        fmt = _infer_format(fname, fmt)
        with open(fname, "w") as f:
            if fmt == "json":
                json.dump(self.to_dict(), f)
            else:
                yaml.dump(self.to_dict(), f)

    @classmethod
    def load(cls, fname, fmt=None):
        return cls.from_dict(_read_network_file(fname, fmt))


def load_networks(fname, fmt=None):
    """
    Load every network stored in fname. A file holds either one
    network or a list of them (as written by ``build --kind both``).

    Returns:
        list of HammockNetwork
    """
    d = _read_network_file(fname, fmt)
    if isinstance(d, list):
        if not d:
            raise ValueError("No networks in {}".format(fname))
        return [HammockNetwork.from_dict(item) for item in d]
    return [HammockNetwork.from_dict(d)]


def _read_network_file(fname, fmt):
    fmt = _infer_format(fname, fmt)
    with open(fname, "r") as f:
        if fmt == "json":
            return json.load(f)
        try:
            return yaml.safe_load(f)
        except yaml.YAMLError as e:
            raise ValueError("Malformed network file {}: {}".format(fname, e)) from e


def _as_lists(obj):
    if isinstance(obj, (list, tuple)):
        return [_as_lists(item) for item in obj]
    return obj


def _infer_format(fname, fmt):
    if fmt is None:
        if fname.endswith(".json"):
            fmt = "json"
        elif fname.endswith(".yaml") or fname.endswith(".yml"):
            fmt = "yaml"
        else:
            raise ValueError("Unsupported file format")
    if fmt not in ("json", "yaml"):
        raise ValueError("Unsupported file format")
    return fmt


def lattice_network(length, width, kind, orientation="lr"):
    """
    The network on the lattice points of parity kind - 1 in
    [0, length] x [0, width], with terminals placed according to
    orientation.
    """
    check_dimensions(length, width, kind)
    parity = kind_parity(kind)
    vertices = [
        LatticePoint(x, y)
        for x in range(length + 1)
        for y in range(width + 1)
        if (x + y) % 2 == parity
    ]
    edges = sorted(
        (square_edge(x, y, parity) for x in range(length) for y in range(width)),
        key=Edge.sort_key,
    )
    if orientation == "lr":
        sources = [v for v in vertices if v.x == 0]
        termini = [v for v in vertices if v.x == length]
    elif orientation == "bt":
        sources = sorted((v for v in vertices if v.y == 0), key=lambda v: v.x)
        termini = sorted((v for v in vertices if v.y == width), key=lambda v: v.x)
    else:
        raise ValueError("orientation must be one of {}".format(ORIENTATIONS))
    return HammockNetwork(
        length, width, kind, vertices, edges, sources, termini, orientation
    )


def build_hammock(length, width, kind=1):
    """
    Build the hammock network H^(kind)_{length,width}.

    Args:
        length (int): l >= 1, number of devices in series per line.
        width (int): w >= 1, number of lines.
        kind (int): 1 for the network on even lattice points,
            2 for the network on odd lattice points.

    Returns:
        HammockNetwork with sources A_{0,y} and termini A_{l,z}.
    """
    return lattice_network(length, width, kind, "lr")


def is_x_path(points):
    """
    True if consecutive points differ by a step in
    {(1,1), (-1,1), (1,-1), (-1,-1)} and no point repeats.
    """
    points = [tuple(p) for p in points]
    if len(set(points)) != len(points):
        return False
    for (x0, y0), (x1, y1) in zip(points[:-1], points[1:]):
        if (x1 - x0, y1 - y0) not in X_STEPS:
            return False
    return True


class DisjointSet:
    """Union-find over the integers 0..n-1."""

    def __init__(self, n):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x == y:
            return x
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x
        return x


def is_pathset(net, subset):
    """
    True if the edges of subset connect some source of net to some
    terminus. All sources are merged into one super-source and all
    termini into one super-terminus; a simple path between the two in
    the merged graph is an X-path between a source and a terminus.
    """
    net.check_subset(subset)
    nvert = net.nvert
    super_source, super_terminus = nvert, nvert + 1
    dsu = DisjointSet(nvert + 2)
    for v in net.sources:
        dsu.union(super_source, net.vertex_index[v])
    for v in net.termini:
        dsu.union(super_terminus, net.vertex_index[v])
    ends = net.endpoint_indices()
    for i in subset:
        dsu.union(*ends[i])
    return dsu.find(super_source) == dsu.find(super_terminus)


def is_cutset(net, subset):
    """True if removing subset leaves no source-terminus X-path."""
    return not is_pathset(net, subset.complement())


def find_x_path(net, subset):
    """
    Search directly for a vertex-distinct X-path from a source to a
    terminus that only uses edges of subset.

    Returns:
        list[LatticePoint] or None if there is no such path.
    """
    net.check_subset(subset)
    adj = {v: [] for v in net.vertices}
    for e in net.edges_of(subset):
        adj[e.a].append(e.b)
        adj[e.b].append(e.a)
    termini = set(net.termini)
    # a vertex explored once without reaching a terminus never will
    visited = set()
    for start in net.sources:
        if start in visited:
            continue
        path = [start]
        visited.add(start)
        stack = [iter(adj[start])]
        while stack:
            if path[-1] in termini:
                return list(path)
            nxt = next(stack[-1], None)
            if nxt is None:
                stack.pop()
                path.pop()
            elif nxt not in visited:
                path.append(nxt)
                visited.add(nxt)
                stack.append(iter(adj[nxt]))
    return None


def permute_subset(subset, perm, nedge=None):
    """Image of subset under the edge index map i -> perm[i]."""
    if nedge is None:
        nedge = subset.nedge
    return EdgeSubset.from_indices([perm[i] for i in subset], nedge)


def reflect_network(net):
    """
    Reflect net across the first bisectrix, (x, y) -> (y, x).

    Parity is preserved and the terminal sides swap roles, so the
    reflection of an "lr" network with dimensions (l, w) is the "bt"
    network with dimensions (w, l) and the same kind, and vice versa.

    Returns:
        reflected (HammockNetwork)
        perm (list[int]): perm[i] is the index in reflected of the
            image of net.edges[i].
    """
    orientation = "bt" if net.orientation == "lr" else "lr"
    reflected = lattice_network(net.width, net.length, net.kind, orientation)
    perm = [
        reflected.edge_index[Edge.between((e.a.y, e.a.x), (e.b.y, e.b.x))]
        for e in net.edges
    ]
    return reflected, perm
