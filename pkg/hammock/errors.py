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
Exception types raised by the hammock package. All of them are
ValueErrors, so callers that only care about bad input can catch
ValueError; the command-line front end uses the subclasses to pick
an exit status.
"""


class InvalidDimensionError(ValueError):
    """Raised when a network is requested with l < 1, w < 1 or a bad kind."""


class CeilingExceededError(ValueError):
    """
    Raised when a computation would exceed one of the configured
    size ceilings (see HammockSettings).
    """

    def __init__(self, what, size, ceiling):
        self.what = what
        self.size = size
        self.ceiling = ceiling
        super(CeilingExceededError, self).__init__(
            "{} needs size {} but the ceiling is {}".format(what, size, ceiling)
        )


class ProbabilityDomainError(ValueError):
    """Raised when a reliability polynomial is evaluated outside [0, 1]."""
