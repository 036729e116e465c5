from __future__ import annotations

import io
import json
from pathlib import Path

import pytest

from qv.cli import emit_groupring, parse_groupring, read_groupring, run
from qv.errors import ParseError
from qv.presets import reference_element

GOLDEN = Path(__file__).parent / "golden"
F4 = ["--p", "2", "--h", "1,1,1"]
S9 = ["--p", "3", "--h", "1,2,1"]


def call(*argv: str) -> tuple[int, str]:
    buf = io.StringIO()
    code = run(list(argv), out=buf)
    return code, buf.getvalue()


def test_color_count():
    assert call("color", "--braid", "2 ; 1 1 1", "--p", "3", "--h", "1,1", "--w", "2") == (0, "9\n")


def test_invariant_matches_golden():
    code, text = call("invariant", *F4, "--braid", "2 ; 1 1 1", "--cocycle", "example111")
    assert code == 0
    assert text == (GOLDEN / "example111_n3.json").read_text()


def test_operator_agrees_with_invariant(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert call("invariant", *F4, "--braid", "3 ; 1 -2 1", "--cocycle", "example111", "--out", str(a))[0] == 0
    assert call("operator", *F4, "--braid", "3 ; 1 -2 1", "--cocycle", "example111", "--out", str(b))[0] == 0
    assert read_groupring(a).equal_in_S(read_groupring(b))


def test_group_ring_round_trip(tmp_path):
    G = reference_element("example110", 3)
    path = tmp_path / "g.json"
    emit_groupring(G, path)
    H = read_groupring(path)
    assert H.terms == G.terms and H.user_lifts
    assert path.read_text() == (GOLDEN / "example110_reference_n3.json").read_text()


def test_unknown_field_reports_position():
    text = '{\n  "p": 2,\n  "h": [1, 1, 1],\n  "bogus": 1,\n  "terms": []\n}'
    with pytest.raises(ParseError) as err:
        parse_groupring(text)
    assert (err.value.line, err.value.column) == (4, 3)
    with pytest.raises(ParseError) as err:
        parse_groupring('{"p": 2,\n "h": [1,1,1], "terms": [{"coeff": 1, "lift": "w", "x": 0}]}')
    assert err.value.line == 2


def test_malformed_json_and_wrong_class():
    with pytest.raises(ParseError) as err:
        parse_groupring('{"p": 2,\n "h": [1,1,1],,}')
    assert err.value.line == 2
    with pytest.raises(ParseError):
        parse_groupring('{"p": 2, "h": [1,1,1], "terms": [{"coeff": 1, "lift": "w", "exp_in_S": "0"}]}')


def test_expand_reference(tmp_path):
    code, text = call("expand", "--in", str(GOLDEN / "example110_reference_n3.json"),
                      "--a", "2", "--b", "1", "--D", "3")
    assert code == 0
    assert "2 | 20 | 1" in text


def test_domain_errors_exit_1():
    assert call("invariant", *S9, "--braid", "2 ; 1 1 1", "--cocycle", "mochizuki-p3")[0] == 1
    assert call("color", *F4, "--braid", "2 ; 1 3")[0] == 1
    assert call("axioms", "--p", "4", "--h", "1,1")[0] == 1
    assert call("expand", "--in", str(GOLDEN / "example111_n3.json"), "--a", "1", "--b", "1")[0] == 1
    assert call("color", *F4, "--braid", "2 ; 1", "--policy", "fix-arc:9=0")[0] == 1


def test_usage_errors_exit_2():
    assert call()[0] == 2
    assert call("color", "--braid", "2 ; 1")[0] == 2
    assert call("basis", *F4, "--deg", "4")[0] == 2


def test_checks():
    assert call("axioms", *F4)[0] == 0
    assert call("basis", *F4, "--deg", "3", "--oracle")[0] == 0
    assert call("ybe", *F4, "--cocycle", "example111")[0] == 0
    code, text = call("cocycle-check", *S9, "--cocycle", "mochizuki-p3")
    assert code == 1 and "not a cocycle" in text
    code, text = call("diagram", "--braid", "2 ; 1 1 1")
    assert code == 0 and "regions: 5" in text


def test_vassiliev_reports_vanishing():
    code, text = call("vassiliev", *F4, "--braid", "2 ; 1 s1", "--cocycle", "example111",
                      "--a", "3", "--b", "2", "--D", "3")
    assert code == 0 and "residues below degree 1 vanish" in text


def test_repro_is_deterministic():
    first = call("repro", "example111", "--n", "3", "--D", "4")
    second = call("repro", "example111", "--n", "3", "--D", "4")
    assert first == second and first[0] == 0
    assert "equal in Z[S]: NO" in first[1]
    code, text = call("repro", "example111", "--n", "6", "--D", "4")
    assert "equal in Z[S]: yes" in text


def test_cocycle_file(tmp_path):
    f = tmp_path / "c.txt"
    f.write_text("(x-y)*y^2\n")
    assert call("cocycle-check", *F4, "--cocycle", str(f))[0] == 0
    f.write_text("(x-y)*q\n")
    assert call("cocycle-check", *F4, "--cocycle", str(f))[0] == 1
