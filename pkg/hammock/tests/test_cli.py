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

import io
import json
import os
import tempfile
import unittest
from unittest import mock

from hammock.cli import run
from hammock.settings import HammockSettings
from hammock.verification.report import VerificationReport

H23 = ["0", "0", "5", "-4", "-3", "4", "-1"]


def call(cmdline, *extra):
    out, err = io.StringIO(), io.StringIO()
    code = run(cmdline.split() + list(extra), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


class TestPoly(unittest.TestCase):
    def test_poly_json(self):
        code, out, _ = call("poly --length 2 --width 3")
        assert code == 0
        d = json.loads(out)
        assert d["b"] == H23
        assert (d["l"], d["w"], d["kind"], d["n"]) == (2, 3, 1, 6)
        code, out, _ = call("poly --length 1 --width 1")
        assert json.loads(out)["b"] == ["0", "1"]

    def test_poly_engines_and_kinds(self):
        code, out, _ = call("poly --length 2 --width 3 --kind both --engine frontier")
        assert code == 0
        d = json.loads(out)
        assert [p["kind"] for p in d] == [1, 2]
        assert all(p["b"] == H23 for p in d)

    def test_poly_csv(self):
        code, out, _ = call("poly --length 2 --width 3 --format csv")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "i,N_i,C_i,b_i"
        assert len(lines) == 8
        assert lines[3].split(",")[0] == "2"
        assert lines[3].split(",")[-1] == "5"

    def test_build_round_trip(self):
        with tempfile.TemporaryDirectory() as tmpdir:
            fname = os.path.join(tmpdir, "h33.json")
            code, out, _ = call("build --length 3 --width 3 --kind 2 --output", fname)
            assert code == 0 and out == ""
            with open(fname) as f:
                d = json.load(f)
            assert d["length"] == 3 and d["kind"] == 2
            assert len(d["edges"]) == 9
            _, from_file, _ = call("poly --network", fname)
        _, direct, _ = call("poly --length 3 --width 3 --kind 2")
        assert from_file == direct

    def test_build_both_round_trip(self):
        with tempfile.TemporaryDirectory() as tmpdir:
            fname = os.path.join(tmpdir, "h23.json")
            code, _, _ = call("build --length 2 --width 3 --kind both --output", fname)
            assert code == 0
            with open(fname) as f:
                assert [d["kind"] for d in json.load(f)] == [1, 2]
            code, from_file, _ = call("poly --network", fname)
        assert code == 0
        _, direct, _ = call("poly --length 2 --width 3 --kind both")
        assert from_file == direct


class TestStructureCommands(unittest.TestCase):
    def test_dual(self):
        code, out, _ = call("dual --length 1 --width 1")
        assert code == 0
        d = json.loads(out)
        assert d["dual"]["edges"] == [[[0, 1], [1, 0]]]
        assert d["dual"]["sources"] == [[1, 0]]
        assert d["dual"]["termini"] == [[0, 1]]
        assert d["dual"]["orientation"] == "bt"
        assert d["edge_map"] == [0]

    def test_minpaths(self):
        code, out, _ = call("minpaths --length 2 --width 3")
        assert code == 0
        d = json.loads(out)
        assert d["sizes"]["2"] == 5
        assert d["count"] == len(d["subsets"])
        code, out, _ = call("minpaths --length 1 --width 1 --format csv")
        assert out.splitlines() == ["kind,size,edges", "1,1,0"]

    def test_mincuts(self):
        _, dual, _ = call("mincuts --length 2 --width 3")
        _, direct, _ = call("mincuts --length 2 --width 3 --strategy direct")
        assert dual == direct
        assert json.loads(dual)["sizes"]["3"] == 4


class TestVerifyCommand(unittest.TestCase):
    def test_verify(self):
        code, out, _ = call("verify --max-l 2 --max-w 2")
        assert code == 0
        reports = json.loads(out)
        assert all(r["pass"] for r in reports)
        code, out, _ = call("verify --max-l 2 --max-w 2 --check remark1")
        assert code == 0
        assert {r["check"] for r in json.loads(out)} == {"remark1"}

    def test_verify_failure(self):
        failing = [VerificationReport("theorem1", {}, witness={"edges": [0]})]
        with mock.patch("hammock.cli.run_suite", return_value=failing):
            code, out, _ = call("verify")
        assert code == 1
        assert json.loads(out)[0]["pass"] is False

    def test_verify_high_cost(self):
        code, out, _ = call("verify --max-l 4 --max-w 4")
        assert code == 0


class TestPlotData(unittest.TestCase):
    def test_plot_data(self):
        code, out, _ = call("plot-data --length 3 --width 3 --step 0.01")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "p,h"
        assert len(lines) == 102
        assert "0.5,0.5" in lines
        assert lines[1] == "0,0.0"
        assert lines[-1] == "1,1.0"
        values = [float(line.split(",")[1]) for line in lines[1:]]
        assert values == sorted(values)

    def test_with_dual(self):
        code, out, _ = call("plot-data --length 2 --width 3 --step 0.5 --with-dual")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "p,h,h_dual"
        assert lines[2] == "0.5,0.671875,0.328125"

    def test_bad_step(self):
        for step in ("0.03", "0", "2"):
            code, _, err = call("plot-data --length 2 --width 2 --step", step)
            assert code == 2
            assert "step" in err


class TestExitCodes(unittest.TestCase):
    def test_usage_errors(self):
        assert call("poly --length 0 --width 3")[0] == 2
        assert call("poly --length 2")[0] == 2
        assert call("poly --length 2 --width 2 --kind 3")[0] == 2
        assert call("frobnicate")[0] == 2
        assert call("poly --network /nonexistent/net.json")[0] == 2

    def test_malformed_files(self):
        payloads = {
            "missing.json": '{"width": 3, "kind": 1}',
            "scalar.json": "3",
            "empty.json": "[]",
            "badlist.json": '[{"length": 2, "width": 3, "kind": 1}, 7]',
            "badtype.json": '{"length": [2], "width": 3, "kind": 1}',
            "truncated.json": '{"length": 2,',
            "broken.yaml": "length: [2\n",
            "net.txt": '{"length": 2, "width": 3, "kind": 1}',
        }
        with tempfile.TemporaryDirectory() as tmpdir:
            for name, text in payloads.items():
                fname = os.path.join(tmpdir, name)
                with open(fname, "w") as f:
                    f.write(text)
                code, _, err = call("poly --network", fname)
                assert code == 2, name
                assert err.startswith("error:"), name
            for name, text in [
                ("broken.yaml", "brute_max_edges: [1\n"),
                ("list.yaml", "- 1\n- 2\n"),
                ("bad_value.yaml", "brute_max_edges: [1]\n"),
                ("unknown.yaml", "brute_max: 3\n"),
            ]:
                fname = os.path.join(tmpdir, "settings_" + name)
                with open(fname, "w") as f:
                    f.write(text)
                code, _, err = call("poly --length 2 --width 2 --settings", fname)
                assert code == 2, name
                assert err.startswith("error:"), name

    def test_network_excludes_dimensions(self):
        with tempfile.TemporaryDirectory() as tmpdir:
            fname = os.path.join(tmpdir, "h22.json")
            call("build --length 2 --width 2 --kind 2 --output", fname)
            for extra in ("--kind 1", "--kind both", "--length 2", "--width 2"):
                code, _, err = call("poly " + extra + " --network", fname)
                assert code == 2
                assert extra.split()[0] in err
            code, out, _ = call("poly --network", fname)
        assert code == 0
        assert json.loads(out)["kind"] == 2

    def test_ceilings(self):
        cmd = "poly --length 3 --width 3 --engine brute"
        code, _, err = call(cmd + " --brute-max 4")
        assert code == 3
        assert "ceiling" in err
        cmd2 = "poly --length 3 --width 3 --engine frontier --frontier-max-width 2"
        assert call(cmd2)[0] == 3
        with mock.patch.dict(os.environ, {"HAMMOCK_BRUTE_MAX": "8"}):
            assert call(cmd)[0] == 3
            # flags override the environment
            assert call(cmd + " --brute-max 9")[0] == 0
        with tempfile.TemporaryDirectory() as tmpdir:
            fname = os.path.join(tmpdir, "settings.yaml")
            HammockSettings(brute_max_edges=5).dump(fname)
            assert call(cmd + " --settings", fname)[0] == 3
            assert call(cmd + " -vv --settings", fname)[0] == 3


if __name__ == "__main__":
    unittest.main()
