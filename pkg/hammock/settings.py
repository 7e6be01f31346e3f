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

import os
import sys

import yaml
from pyscf.lib import logger

from hammock.errors import CeilingExceededError

DEFAULT_BRUTE_MAX_EDGES = 24
DEFAULT_FRONTIER_MAX_WIDTH = 8
DEFAULT_MINCUT_MAX_EDGES = 20
DEFAULT_EXHAUSTIVE_MAX_EDGES = 16
DEFAULT_CHUNK_SIZE = 1 << 16

# environment variable -> settings attribute
ENV_OVERRIDES = {
    "HAMMOCK_BRUTE_MAX": "brute_max_edges",
    "HAMMOCK_FRONTIER_MAXW": "frontier_max_width",
    "HAMMOCK_MINCUT_MAX": "mincut_max_edges",
    "HAMMOCK_EXHAUSTIVE_MAX": "exhaustive_max_edges",
    "HAMMOCK_NJOBS": "n_jobs",
    "HAMMOCK_VERBOSE": "verbose",
}

_CEILINGS = (
    "brute_max_edges",
    "frontier_max_width",
    "mincut_max_edges",
    "exhaustive_max_edges",
    "chunk_size",
)


def _check_positive_int(name, value):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError("{} must be an integer, got {!r}".format(name, value))
    if value <= 0:
        raise ValueError("{} must be positive, got {}".format(name, value))


class HammockSettings:
    """
    Resource ceilings and runtime options shared by the engines and
    the verification checks.

    Attributes:
        brute_max_edges (int): Largest edge count l*w for which the
            brute-force engine scans all 2^(lw) subsets.
        frontier_max_width (int): Largest width w accepted by the
            frontier engine (its state count grows with w).
        mincut_max_edges (int): Largest edge count for direct
            (subset filter) mincut enumeration and verify_theorem1.
        exhaustive_max_edges (int): Largest edge count for the
            exhaustive pathset/cutset duality check.
        n_jobs (int): Number of joblib workers for subset scans.
            1 runs in-process, -1 uses every core.
        chunk_size (int): Number of subsets per scan shard.
        verbose (int): pyscf logger verbosity level.
        stdout: Stream that receives log output.
    """

    def __init__(
        self,
        brute_max_edges=DEFAULT_BRUTE_MAX_EDGES,
        frontier_max_width=DEFAULT_FRONTIER_MAX_WIDTH,
        mincut_max_edges=DEFAULT_MINCUT_MAX_EDGES,
        exhaustive_max_edges=DEFAULT_EXHAUSTIVE_MAX_EDGES,
        n_jobs=1,
        chunk_size=DEFAULT_CHUNK_SIZE,
        verbose=logger.WARN,
        stdout=None,
    ):
        self.brute_max_edges = brute_max_edges
        self.frontier_max_width = frontier_max_width
        self.mincut_max_edges = mincut_max_edges
        self.exhaustive_max_edges = exhaustive_max_edges
        self.n_jobs = n_jobs
        self.chunk_size = chunk_size
        self.verbose = verbose
        self.stdout = sys.stderr if stdout is None else stdout
        self.check_sanity()

    def check_sanity(self):
        for name in _CEILINGS:
            _check_positive_int(name, getattr(self, name))
        if isinstance(self.n_jobs, bool) or not isinstance(self.n_jobs, int):
            raise ValueError("n_jobs must be an integer")
        if self.n_jobs == 0 or self.n_jobs < -1:
            raise ValueError("n_jobs must be positive or -1")
        if not isinstance(self.verbose, int):
            raise ValueError("verbose must be an integer logger level")
        return self

    def copy(self, **kwargs):
        d = self.to_dict()
        d.update(kwargs)
        return self.__class__.from_dict(d, stdout=self.stdout)

    def require(self, ceiling_name, size, what):
        """
        Raise CeilingExceededError if size exceeds the ceiling
        stored in attribute ceiling_name.
        """
        ceiling = getattr(self, ceiling_name)
        if size > ceiling:
            raise CeilingExceededError(what, size, ceiling)

    def to_dict(self):
        return {
            "brute_max_edges": self.brute_max_edges,
            "frontier_max_width": self.frontier_max_width,
            "mincut_max_edges": self.mincut_max_edges,
            "exhaustive_max_edges": self.exhaustive_max_edges,
            "n_jobs": self.n_jobs,
            "chunk_size": self.chunk_size,
            "verbose": self.verbose,
        }

    @classmethod
    def from_dict(cls, d, stdout=None):
        if not isinstance(d, dict):
            raise ValueError(
                "Settings must be a mapping, got {}".format(type(d).__name__)
            )
        unknown = set(d) - set(cls().to_dict())
        if unknown:
            names = sorted(map(str, unknown))
            raise ValueError("Unknown settings: {}".format(names))
        return cls(stdout=stdout, **d)

    def dump(self, fname):
        """
        Save the settings to a file name fname as yaml format.
        """
        with open(fname, "w") as f:
            yaml.dump(self.to_dict(), f)

    @classmethod
    def load(cls, fname):
        """
        Load an instance of this class from yaml
        """
        with open(fname, "r") as f:
            try:
                d = yaml.safe_load(f)
            except yaml.YAMLError as e:
                msg = "Malformed settings file {}: {}".format(fname, e)
                raise ValueError(msg) from e
        return cls.from_dict(d or {})

    @classmethod
    def from_env(cls, environ=None, base=None):
        """
        Apply the HAMMOCK_* environment overrides on top of base
        (or the defaults if base is None).
        """
        if environ is None:
            environ = os.environ
        d = (cls() if base is None else base).to_dict()
        for var, name in ENV_OVERRIDES.items():
            if var in environ:
                try:
                    d[name] = int(environ[var])
                except ValueError:
                    raise ValueError(
                        "{} must be an integer, got {!r}".format(var, environ[var])
                    )
        stdout = None if base is None else base.stdout
        return cls.from_dict(d, stdout=stdout)


def get_default_settings():
    return HammockSettings.from_env()
