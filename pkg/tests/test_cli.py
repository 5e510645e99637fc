#!/usr/bin/env python3
#
# Copyright (c) 2024 The ringstar authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing,
# software distributed under the License is distributed on an
# "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
# KIND, either express or implied. See the License for the
# specific language governing permissions and limitations
# under the License.


"""Tests for the command line interface."""

import json

import pytest

from ringstar import runtime
from ringstar.command import run_command, render
from ringstar.errors import EXIT_OK, EXIT_REFUSED, EXIT_USAGE


def run(*argv):
    """Run a command line, return (code, text)."""

    return run_command(list(argv))


def run_json(*argv):
    """Run a command line with JSON output, return (code, document)."""

    code, text = run_command(["-o", "json"] + list(argv))

    return code, json.loads(text)


def test_no_command():
    """Without a command the usage is printed."""

    code, text = run()

    assert code == EXIT_USAGE
    assert "Available commands are:" in text


def test_help():
    """The help command lists the commands and their options."""

    code, text = run("help")

    assert code == EXIT_OK
    assert "cover" in text and "criterion" in text

    code, text = run("help", "cover")

    assert code == EXIT_OK
    assert "query" in text

    code, text = run("help", "nope")

    assert "Invalid command" in text


def test_eval():
    """Expressions evaluate to elements equal to their normal form."""

    code, text = run("eval", "Sstar(2) U(2) S(2)")

    assert code == EXIT_OK
    assert run("eq", text, "U(1)") == (EXIT_OK, "true")

    code, text = run("eval", "E(0 mod ideal(2)) + E(1 mod ideal(2)) + 0")

    assert code == EXIT_OK
    assert run("eq", text, "1") == (EXIT_OK, "true")

    assert run("eval", "U(1) - U(1)") == (EXIT_OK, "0")


def test_eval_at():
    """--at applies the operator to a basis vector."""

    code, doc = run_json("eval", "U(1) S(2)", "--at", "3")

    assert code == EXIT_OK
    assert doc["schema"] == 1
    assert doc["image"] == [{"coefficient": "1", "index": "7"}]


def test_eval_tree():
    """--tree prints the parsed expression."""

    code, text = run("eval", "--tree", "2 U(1)  +  S(2)'")

    assert code == EXIT_OK
    assert text == "2 U(1) + S(2)'"


def test_algebra_commands():
    """Products, adjoints, equality, expectation and norms."""

    assert run("mul", "U(1) S(2)", "U(1) S(3)") == \
        run("eval", "U(3) S(6)")
    assert run("adjoint", "U(1)") == (EXIT_OK, "U(-1)")
    assert run("eq", "1", "E(0 mod ideal(2)) + E(1 mod ideal(2))") == \
        (EXIT_OK, "true")
    assert run("eq", "U(1)", "U(2)") == (EXIT_OK, "false")
    assert run("expect", "Sstar(2) U(1) E(R) S(3)") == (EXIT_OK, "0")
    assert run("norm", "2 E(0 mod ideal(2)) + 3 E(1 mod ideal(2))") == \
        (EXIT_OK, "3")


def test_ring_option():
    """-r selects the backend."""

    code, text = run("-r", "quad:-5", "eq", "U(1+w) U(1-w)", "U(2)")

    assert (code, text) == (EXIT_OK, "true")


def test_cover():
    """Cover queries return a witness or Covered."""

    code, doc = run_json("cover", "coset(0 mod (2)) by coset(0 mod (4))")

    assert code == EXIT_OK
    assert doc == {"schema": 1, "covered": False, "witness": "2"}

    code, text = run("cover", "R by 0 mod (2), 1 mod (2)")

    assert (code, text) == (EXIT_OK, "Covered")


def test_index():
    """Absolute and relative indices."""

    assert run("index", "(6)") == (EXIT_OK, "Finite(6)")
    assert run("-r", "quad:-5", "index", "ideal(1+w)") == \
        (EXIT_OK, "Finite(6)")
    assert run("-r", "qpoly", "index", "(T)") == (EXIT_OK, "Infinite")

    code, doc = run_json("index", "(2)", "(6)", "--transversal")

    assert code == EXIT_OK
    assert doc["index"] == "Finite(3)"
    assert sorted(int(x) for x in doc["transversal"]) == [0, 2, 4]


def test_simplicity_commands():
    """Orthogonalization, criterion, refutation and conditions."""

    code, doc = run_json("orthogonalize", "E(0 mod (2))", "E(0 mod (3))")

    assert code == EXIT_OK
    assert len(doc["atoms"]) == 3

    code, doc = run_json("criterion", "1 + U(1) + U(-1)")

    assert code == EXIT_OK
    assert doc["passed"]

    code, doc = run_json("-r", "opoly:-5", "refute",
                         "--ideal", "ideal(3, 1+w)", "--by", "(0, 2)")

    assert code == EXIT_OK
    assert not doc["covered"]
    assert doc["rules"] == ["content"]

    code, doc = run_json("-r", "opoly:-5", "refute", "--ideal",
                         "ideal(3, 1+w)", "--by", "(0, 2); (0, T)")

    assert code == EXIT_OK
    assert not doc["covered"]
    assert doc["rules"] == ["content", "degree"]

    code, doc = run_json("-r", "cyc:2", "check-conditions")

    assert code == EXIT_OK
    assert doc["zero_divisors"]["method"] == "sampled"


def test_spectrum():
    """Finite levels and their characters."""

    code, doc = run_json("spectrum", "--level", "(6)")

    assert code == EXIT_OK
    assert doc["size"] == 6

    assert run("spectrum", "--level", "6", "--at", "17") == (EXIT_OK, "5")
    assert run("spectrum", "--level", "(6)", "--at", "5",
               "--eval", "E(1 mod (2))") == (EXIT_OK, "1")
    assert run("spectrum", "--lift", "1 mod (2); 2 mod (3)") == \
        (EXIT_OK, "5")

    code, doc = run_json("-r", "zinv:5", "spectrum", "--level", "6")

    assert doc["size"] == 6


def test_spectrum_dot():
    """DOT output of the level graphs."""

    code, text = run("spectrum", "--level", "(12)", "--emit", "dot")

    assert code == EXIT_OK
    assert text.startswith("digraph levels {")

    code, text = run("-r", "qpoly", "-o", "dot", "spectrum", "--level", "2")

    assert code == EXIT_OK
    assert "->" in text


def test_semigroup():
    """Constructible families and the ax+b image."""

    code, text = run("semigroup", "family", "--kind", "free:2", "--depth",
                     "1")

    assert code == EXIT_OK
    assert set(text.splitlines()) == {"{}", "P", "aP", "bP"}

    code, doc = run_json("semigroup", "quasilattice", "--kind", "nat:2")

    assert doc["holds"]

    code, text = run("semigroup", "image", "--word", "(1, 2); (1, 3)")

    assert (code, text) == run("eval", "U(3) S(6)")

    code, text = run("semigroup", "family", "--emit", "dot")

    assert text.startswith("digraph family {")


@pytest.mark.parametrize("argv,code,kind", [
    (["eval", "U(1"], EXIT_USAGE, "syntax"),
    (["-r", "quad:4", "eval", "1"], EXIT_USAGE, "invalid-descriptor"),
    (["-r", "cyc:2", "eval", "S(1+t)"], EXIT_REFUSED, "not-regular"),
    (["-r", "qpoly", "spectrum", "--level", "(T)", "--at", "1"],
     EXIT_REFUSED, "not-applicable"),
    (["-r", "qpoly", "spectrum", "--level", "ideal(T - 1)"], EXIT_REFUSED,
     "not-applicable"),
    (["-r", "z", "spectrum", "--level", "(0)"], EXIT_REFUSED,
     "infinite-index"),
    (["norm", "U(1)"], EXIT_REFUSED, "not-applicable"),
])
def test_errors(argv, code, kind):
    """Errors map to exit codes and error documents."""

    result, doc = run_json(*argv)

    assert result == code
    assert doc["schema"] == 1
    assert doc["error"]["code"] == kind


def test_syntax_error_position():
    """Syntax errors report their offset."""

    code, doc = run_json("eval", "U(1) +")

    assert code == EXIT_USAGE
    assert doc["error"]["position"] == 6


def test_text_errors():
    """Errors in text mode name their kind."""

    code, text = run("-r", "cyc:2", "eval", "S(1+t)")

    assert code == EXIT_REFUSED
    assert text.startswith("error: not-regular: ")


def test_render():
    """Rendering of plain results."""

    assert render(True, "text") == "true"
    assert render([1, 2], "text") == "1\n2"
    assert json.loads(render({"a": 1}, "json")) == {"a": 1, "schema": 1}
    assert json.loads(render(3, "json")) == {"result": 3, "schema": 1}


def test_using_bounds():
    """Bounds set for a block are undone when the block exits."""

    outer = runtime.bounds()

    with runtime.using_bounds(runtime.Bounds(max_search=7)) as inner:
        assert runtime.bounds() is inner
        assert runtime.bounds().max_search == 7

    assert runtime.bounds() is outer


def test_config_bounds_do_not_leak(tmp_path):
    """A command run with a config directory leaves the bounds alone."""

    (tmp_path / "runtime.cfg").write_text("[sampling]\nmax_search = 1\n"
                                          "max_atoms = 1\n")

    code, doc = run_json("-c", str(tmp_path), "orthogonalize",
                         "E(0 mod (2))", "E(0 mod (3))")

    assert code == EXIT_REFUSED
    assert doc["error"]["code"] == "search-exhausted"

    assert runtime.bounds().max_search == 200000
    assert runtime.bounds().max_atoms == 12

    code, doc = run_json("orthogonalize", "E(0 mod (2))", "E(0 mod (3))")

    assert code == EXIT_OK
    assert len(doc["atoms"]) == 3
