"""Spec mini-language parsing and CLI behavior: exit codes, JSON shapes,
byte-stable reports."""

import json

import pytest

from gagola.cli import main
from gagola.errors import ParseError
from gagola.specs import build, parse_cycles


# -- parsing -----------------------------------------------------------------

def test_parse_cycles():
    assert parse_cycles("(1,2,3)(4,5)", 5) == [(0, 1, 2), (3, 4)]
    assert parse_cycles("(1,2)", 4) == [(0, 1)]
    with pytest.raises(ParseError):
        parse_cycles("(1,2", 4)
    with pytest.raises(ParseError):
        parse_cycles("(0,1)", 4)  # points are 1-based
    with pytest.raises(ParseError):
        parse_cycles("(1,5)", 4)
    with pytest.raises(ParseError):
        parse_cycles("(1,1)", 4)


def test_build_perm():
    G, N, _ = build("perm:m=3;gens=(1,2);(1,2,3)")
    assert G.order == 6
    assert N is None


def test_build_families():
    G, N, _ = build("heis:q=3")
    assert G.order == 54 and N.order == 3
    G, N, _ = build("suzuki:n=3;h=1")
    assert G.order == 64 and N.order == 8
    G, _, _ = build("agl1:q=4")
    assert G.order == 12
    G, _, _ = build("sl2:q=4")
    assert G.order == 60
    G, _, _ = build("gamma:p=2;n=4")
    assert G.order == 60


def test_build_errors():
    for bad in (
        "nope:q=3",
        "perm:m=3",
        "perm:gens=(1,2)",
        "heis:q=x",
        "suzuki:n=3",
        "",
        "justtext",
    ):
        with pytest.raises(ParseError):
            build(bad)


# -- CLI ------------------------------------------------------------------------

def test_cli_usage_error_exit_2(capsys):
    assert main([]) == 2
    assert main(["verify"]) == 2
    assert main(["verify", "nosuchsuite"]) == 2


def test_cli_parse_error_exit_2(capsys):
    assert main(["certify", "bogus:spec"]) == 2


def test_cli_certify_q8(capsys):
    code = main(
        ["certify", "perm:m=8;gens=(1,2,5,6)(3,4,7,8);(1,3,5,7)(2,8,6,4)", "--json"]
    )
    assert code == 0
    out = json.loads(capsys.readouterr().out)
    cert = out[0]
    assert cert["schema"] == "pairCert/1"
    assert cert["isGagola"] and cert["d"] == 2 and cert["e"] == 2


def test_cli_certify_agl8(capsys):
    assert main(["certify", "agl1:q=8"]) == 0
    out = capsys.readouterr().out
    assert "d=7, e=1" in out
    assert "berkovich" in out


def test_cli_certify_heis3(capsys):
    assert main(["certify", "heis:q=3"]) == 0
    out = capsys.readouterr().out
    assert "|G|=54" in out and "d=6, e=3" in out


def test_cli_chartable_s3(capsys):
    assert main(["chartable", "perm:m=3;gens=(1,2);(1,2,3)"]) == 0
    out = capsys.readouterr().out
    assert "degrees [1, 1, 2]" in out


def test_cli_chartable_sl2q4_json(capsys):
    assert main(["chartable", "sl2:q=4", "--json"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert d["schema"] == "charTable/1"
    assert len(d["classes"]) == 5
    assert sorted(d["degrees"]) == [1, 3, 3, 4, 5]
    assert sum(x * x for x in d["degrees"]) == 60


def test_cli_chartable_heis4_has_degree_12(capsys):
    assert main(["chartable", "heis:q=4", "--json"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert 12 in d["degrees"]


def test_cli_verify_numtheory_passes_and_is_deterministic(capsys):
    assert main(["verify", "numtheory", "--json"]) == 0
    first = capsys.readouterr().out
    assert main(["verify", "numtheory", "--json"]) == 0
    second = capsys.readouterr().out
    assert first == second
    rep = json.loads(first)
    assert rep["schema"] == "report/1"
    assert rep["overall"] == "pass"
    assert "wallTimeS" not in rep


def test_cli_verify_json_timing_optin(capsys):
    assert main(["verify", "sl2", "--json", "--timing"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert "wallTimeS" in rep


def test_cli_unique_check_ids(capsys):
    assert main(["verify", "bounds", "--q", "3,4", "--json"]) == 0
    rep = json.loads(capsys.readouterr().out)
    ids = [c["id"] for c in rep["checks"]]
    assert len(ids) == len(set(ids))
