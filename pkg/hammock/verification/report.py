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

import json
import numbers


def _jsonable(obj, ints_as_str=False):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v, ints_as_str) for k, v in obj.items()}
    elif isinstance(obj, (list, tuple)):
        return [_jsonable(item, ints_as_str) for item in obj]
    elif isinstance(obj, bool) or obj is None or isinstance(obj, (str, float)):
        return obj
    elif isinstance(obj, numbers.Integral):
        return str(obj) if ints_as_str else int(obj)
    elif hasattr(obj, "to_dict"):
        return _jsonable(obj.to_dict(), ints_as_str)
    else:
        return str(obj)


class VerificationReport:
    """
    Pass/fail record of one executable check.

    Attributes:
        check_name (str): name of the check, e.g. "theorem1".
        parameters (dict): inputs of the check (dimensions, kind, ...).
        counts (dict): sizes of the objects that were compared.
        residuals (dict[str, list[int]]): polynomial residuals that
            must vanish coefficient-wise.
        details (dict): any other information worth reporting.
        witness: serializable counterexample, or None.
        passed (bool): True iff there is no witness and every residual
            coefficient is exactly zero.
    """

    def __init__(
        self,
        check_name,
        parameters,
        counts=None,
        residuals=None,
        details=None,
        witness=None,
    ):
        self.check_name = check_name
        self.parameters = dict(parameters)
        self.counts = dict(counts or {})
        self.residuals = {k: list(v) for k, v in (residuals or {}).items()}
        self.details = dict(details or {})
        self.witness = witness

    @property
    def passed(self):
        if self.witness is not None:
            return False
        return all(c == 0 for res in self.residuals.values() for c in res)

    def __bool__(self):
        return self.passed

    def __repr__(self):
        return "VerificationReport({!r}, {}, pass={})".format(
            self.check_name, self.parameters, self.passed
        )

    def to_dict(self):
        """
        Counts, residuals and details hold polynomial-sized integers
        and are written as decimal strings. Parameters and the witness
        keep plain JSON numbers.
        """
        return {
            "check": self.check_name,
            "params": _jsonable(self.parameters),
            "pass": self.passed,
            "counts": _jsonable(self.counts, ints_as_str=True),
            "residuals": _jsonable(self.residuals, ints_as_str=True),
            "details": _jsonable(self.details, ints_as_str=True),
            "witness": _jsonable(self.witness),
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)


def reports_to_json(reports, indent=None):
    return json.dumps([r.to_dict() for r in reports], sort_keys=True, indent=indent)
