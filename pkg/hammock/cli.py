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
Command-line front end.

Exit status: 0 on success, 1 when a verification check fails, 2 on
bad input (dimensions, probabilities, files) and 3 when a computation
would exceed a configured ceiling.
"""

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from pyscf.lib import logger

from hammock.errors import CeilingExceededError
from hammock.lattice.duality import (
    MINCUT_STRATEGIES,
    dual_network,
    enumerate_mincuts,
    enumerate_minpaths,
    size_histogram,
)
from hammock.lattice.network import build_hammock, flip_kind, load_networks
from hammock.reliability.engines import ENGINES, get_reliability
from hammock.reliability.polynomial import evaluate
from hammock.settings import HammockSettings
from hammock.verification.checks import CHECKS, run_suite
from hammock.verification.report import reports_to_json

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_CEILING = 3


def resolve_settings(args):
    """Defaults, then the --settings file, then HAMMOCK_* variables, then flags."""
    base = HammockSettings.load(args.settings) if args.settings else None
    settings = HammockSettings.from_env(base=base)
    overrides = {}
    if args.brute_max is not None:
        overrides["brute_max_edges"] = args.brute_max
    if args.frontier_max_width is not None:
        overrides["frontier_max_width"] = args.frontier_max_width
    if args.n_jobs is not None:
        overrides["n_jobs"] = args.n_jobs
    if args.verbose:
        overrides["verbose"] = min(logger.WARN + args.verbose, logger.DEBUG)
    return settings.copy(**overrides)


def _networks(args):
    if args.network:
        # the file fixes dimensions and kind
        given = [
            flag
            for flag, value in (
                ("--length", args.length),
                ("--width", args.width),
                ("--kind", args.kind),
            )
            if value is not None
        ]
        if given:
            raise ValueError("--network cannot be combined with " + ", ".join(given))
        return load_networks(args.network)
    if args.length is None or args.width is None:
        raise ValueError("--length and --width are required unless --network is given")
    choice = args.kind or "1"
    kinds = (1, 2) if choice == "both" else (int(choice),)
    return [build_hammock(args.length, args.width, kind) for kind in kinds]


def _one_or_many(items):
    return items[0] if len(items) == 1 else items


def _emit(args, stdout, text):
    if not text.endswith("\n"):
        text += "\n"
    if args.output:
        with open(args.output, "w") as f:
            f.write(text)
    else:
        stdout.write(text)


def _csv_text(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def cmd_build(args, settings, stdout):
    nets = _networks(args)
    _emit(args, stdout, json.dumps(_one_or_many([n.to_dict() for n in nets])))
    return EXIT_OK


def cmd_poly(args, settings, stdout):
    nets = _networks(args)
    polys = [get_reliability(net, args.engine, settings) for net in nets]
    if args.format == "csv":
        header = ["i", "N_i", "C_i", "b_i"]
        rows = []
        for poly in polys:
            for row in poly.table_rows():
                rows.append(row if len(polys) == 1 else (poly.kind,) + row)
        if len(polys) > 1:
            header = ["kind"] + header
        _emit(args, stdout, _csv_text(header, rows))
    else:
        _emit(args, stdout, json.dumps(_one_or_many([p.to_dict() for p in polys])))
    return EXIT_OK


def cmd_dual(args, settings, stdout):
    nets = _networks(args)
    corrs = [dual_network(net).to_dict() for net in nets]
    _emit(args, stdout, json.dumps(_one_or_many(corrs)))
    return EXIT_OK


def _emit_subsets(args, stdout, nets, listings):
    if args.format == "csv":
        rows = []
        for net, subsets in zip(nets, listings):
            for s in subsets:
                rows.append((net.kind, len(s), " ".join(str(i) for i in s)))
        _emit(args, stdout, _csv_text(["kind", "size", "edges"], rows))
        return
    payload = []
    for net, subsets in zip(nets, listings):
        payload.append(
            {
                "l": net.length,
                "w": net.width,
                "kind": net.kind,
                "orientation": net.orientation,
                "count": len(subsets),
                "sizes": size_histogram(subsets),
                "subsets": [s.indices() for s in subsets],
            }
        )
    _emit(args, stdout, json.dumps(_one_or_many(payload)))


def cmd_minpaths(args, settings, stdout):
    nets = _networks(args)
    _emit_subsets(args, stdout, nets, [enumerate_minpaths(net) for net in nets])
    return EXIT_OK


def cmd_mincuts(args, settings, stdout):
    nets = _networks(args)
    listings = [enumerate_mincuts(net, args.strategy, settings) for net in nets]
    _emit_subsets(args, stdout, nets, listings)
    return EXIT_OK


def cmd_verify(args, settings, stdout):
    reports = run_suite(args.max_l, args.max_w, args.check, args.engine, settings)
    _emit(args, stdout, reports_to_json(reports, indent=2))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_CHECK_FAILED


def _grid(step):
    if not step > 0 or step > 1:
        raise ValueError("--step must be in (0, 1], got {}".format(step))
    nsteps = int(round(1 / step))
    if abs(nsteps * step - 1) > 1e-9:
        raise ValueError("--step must divide 1 evenly, got {}".format(step))
    return [Fraction(j, nsteps) for j in range(nsteps + 1)]


def cmd_plot_data(args, settings, stdout):
    nets = _networks(args)
    columns = []
    for net in nets:
        suffix = "" if len(nets) == 1 else str(net.kind)
        columns.append(("h" + suffix, get_reliability(net, args.engine, settings)))
        if args.with_dual:
            mirror = build_hammock(net.width, net.length, flip_kind(net.kind))
            poly = get_reliability(mirror, args.engine, settings)
            columns.append(("h" + suffix + "_dual", poly))
    rows = []
    for p in _grid(args.step):
        rows.append(
            ["{:.10g}".format(float(p))]
            + [repr(float(evaluate(poly, p))) for _, poly in columns]
        )
    _emit(args, stdout, _csv_text(["p"] + [name for name, _ in columns], rows))
    return EXIT_OK


def _common_parser():
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--settings", help="YAML settings file")
    p.add_argument("--engine", choices=ENGINES, default="auto", help="(default: auto)")
    p.add_argument(
        "--brute-max", type=int, help="largest l*w for the brute-force engine"
    )
    p.add_argument(
        "--frontier-max-width", type=int, help="largest w for the frontier engine"
    )
    p.add_argument("--n-jobs", type=int, help="joblib workers for subset scans")
    p.add_argument("--output", help="output file (default: stdout)")
    p.add_argument(
        "-v", "--verbose", action="count", default=0, help="more log output on stderr"
    )
    return p


def _network_parser():
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--length", type=int, help="l, devices in series per line")
    p.add_argument("--width", type=int, help="w, number of lines")
    p.add_argument("--kind", choices=["1", "2", "both"], help="(default: 1)")
    p.add_argument("--network", help="network file written by 'build'")
    return p


def build_parser():
    common = _common_parser()
    network = _network_parser()
    parser = argparse.ArgumentParser(
        prog="hammock", description="Exact reliability of hammock networks"
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("build", parents=[common, network], help="Write a network")
    s.set_defaults(func=cmd_build)

    s = sub.add_parser(
        "poly", parents=[common, network], help="Exact reliability polynomial"
    )
    s.add_argument("--format", choices=["json", "csv"], default="json")
    s.set_defaults(func=cmd_poly)

    s = sub.add_parser("dual", parents=[common, network], help="Dual network")
    s.set_defaults(func=cmd_dual)

    s = sub.add_parser("minpaths", parents=[common, network], help="List minpaths")
    s.add_argument("--format", choices=["json", "csv"], default="json")
    s.set_defaults(func=cmd_minpaths)

    s = sub.add_parser("mincuts", parents=[common, network], help="List mincuts")
    s.add_argument("--format", choices=["json", "csv"], default="json")
    s.add_argument("--strategy", choices=MINCUT_STRATEGIES, default="dual")
    s.set_defaults(func=cmd_mincuts)

    s = sub.add_parser("verify", parents=[common], help="Run the verification suite")
    s.add_argument("--max-l", type=int, default=4)
    s.add_argument("--max-w", type=int, default=4)
    s.add_argument(
        "--check", action="append", choices=CHECKS, help="check to run (repeatable)"
    )
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser(
        "plot-data", parents=[common, network], help="CSV samples of h(p)"
    )
    s.add_argument("--step", type=float, default=0.01)
    s.add_argument(
        "--with-dual",
        action="store_true",
        help="add the curve of the network with swapped dimensions and kind",
    )
    s.set_defaults(func=cmd_plot_data)
    return parser


def run(argv=None, stdout=None, stderr=None):
    """Parse argv, run one command and return the exit status."""
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code
    try:
        settings = resolve_settings(args)
        log = logger.new_logger(settings)
        log.info("hammock %s", args.cmd)
        return args.func(args, settings, stdout)
    except CeilingExceededError as e:
        stderr.write("error: {}\n".format(e))
        return EXIT_CEILING
    except (ValueError, OSError) as e:
        stderr.write("error: {}\n".format(e))
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
