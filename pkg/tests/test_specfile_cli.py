"""Spec-file parsing, round trips, builtins, and the CLI surface."""

import json

import pytest

from synchrolab.cli import main
from synchrolab.errors import ParseError, SemanticError
from synchrolab.points import BiSeq
from synchrolab.shift import SFT, OracleShift, Sofic, fischer_cover
from synchrolab.specfile import (BUILTIN_SPECS, emit_spec, load_spec, parse_point,
                                 parse_spec_text, parse_word)


def run_cli(capsys, *argv):
    status = main(list(argv))
    out = capsys.readouterr().out
    return status, out


def test_parse_word_forms():
    assert parse_word("") == ()
    assert parse_word("011") == ("0", "1", "1")
    assert parse_word("0|1,1|0") == ("0|1", "1|0")


def test_parse_point_product_symbols_round_trip():
    from synchrolab.shift import Alphabet
    alph = Alphabet(("0|0", "0|1", "1|0", "1|1"))
    p = parse_point("L=1|0 C= O=0 R=1|0", alph)
    assert p == BiSeq.constant("1|0")
    assert parse_point(p.literal(), alph) == p


def test_parse_point_literal():
    p = parse_point("L=0 C= O=0 R=0")
    assert p == BiSeq.constant("0")
    q = parse_point("L=0 C=1 O=3 R=0")
    assert q.at(3) == "1"


def test_parse_point_errors():
    with pytest.raises(ParseError):
        parse_point("L=0 O=0")     # missing R
    with pytest.raises(ParseError):
        parse_point("L=0 C= O=zz R=0")
    with pytest.raises(ParseError):
        parse_point("L= C= O=0 R=0")


def test_builtin_specs_all_load():
    for name in BUILTIN_SPECS:
        spec = load_spec(name)
        assert spec.name == name
        assert spec.shift.alphabet


def test_builtin_even_matches_fixture(even_shift):
    spec = load_spec("even.shift")
    assert isinstance(spec.shift, Sofic)
    assert fischer_cover(spec.shift).edges == fischer_cover(even_shift).edges
    assert spec.points["zeros"] == BiSeq.constant("0")


def test_builtin_goldenmean_is_sft():
    spec = load_spec("goldenmean")
    assert isinstance(spec.shift, SFT)
    assert spec.shift.forbidden == frozenset({("1", "1")})


def test_builtin_oracles_load():
    assert isinstance(load_spec("nonsofic-ray").shift, OracleShift)
    assert isinstance(load_spec("context-free").shift, OracleShift)


def test_round_trip(even_shift):
    for name in ("even", "goldenmean", "nonsofic-ray"):
        spec = load_spec(name)
        text = emit_spec(spec)
        again = parse_spec_text(text)
        assert type(again.shift) is type(spec.shift)
        assert tuple(again.shift.alphabet) == tuple(spec.shift.alphabet)
        assert again.points == spec.points
        if isinstance(spec.shift, Sofic):
            assert again.shift.presentation.edges == spec.shift.presentation.edges


def test_unknown_keys_rejected():
    with pytest.raises(ParseError):
        parse_spec_text("alphabet: 0 1\ntype: sft\ncolor: red\n")


def test_malformed_edge_line_position():
    text = "alphabet: 0 1\ntype: sofic\nstate: A\nedge: A 0\n"
    with pytest.raises(ParseError) as excinfo:
        parse_spec_text(text)
    assert "line 4" in str(excinfo.value)


def test_semantic_errors():
    with pytest.raises(SemanticError):
        parse_spec_text("alphabet: 0 1\ntype: sofic\nstate: A\nedge: A 2 A\n")
    with pytest.raises(SemanticError):
        parse_spec_text("alphabet: 0 1\ntype: sofic\nstate: A\nedge: A 0 B\n")


def test_file_loading(tmp_path):
    path = tmp_path / "custom.shift"
    path.write_text("alphabet: x y\ntype: sft\nforbid: yy\n")
    spec = load_spec(str(path))
    assert spec.name == "custom"
    assert isinstance(spec.shift, SFT)


def test_cli_nonsync_even(capsys):
    status, out = run_cli(capsys, "nonsync", "even.shift")
    assert status == 0
    assert "m: 1" in out
    assert "L=0 C= O=0 R=0" in out


def test_cli_periodic_count(capsys):
    status, out = run_cli(capsys, "periodic", "goldenmean.shift",
                          "--n", "4", "--count-only")
    assert status == 0
    assert "count: 7" in out


def test_cli_classify(capsys):
    status, out = run_cli(capsys, "classify", "even.shift",
                          "--point", "L=0 C= O=0 R=0")
    assert status == 0
    assert "nonSynchronizing" in out


def test_cli_classify_named_point(capsys):
    status, out = run_cli(capsys, "classify", "even.shift", "--point", "ones")
    assert status == 0
    assert "status: synchronizing" in out
    assert "witness: 1" in out


def test_cli_json_and_text_carry_identical_data(capsys):
    status, text_out = run_cli(capsys, "report", "even.shift")
    status2, json_out = run_cli(capsys, "report", "even.shift", "--format", "json")
    assert status == status2 == 0
    data = json.loads(json_out)
    assert data["m"] == 1
    assert data["quotient"] == "C^1"
    assert "m: 1" in text_out and "quotient: C^1" in text_out


def test_cli_deterministic_output(capsys):
    _, out1 = run_cli(capsys, "info", "even.shift")
    _, out2 = run_cli(capsys, "info", "even.shift")
    assert out1 == out2


def test_cli_every_builtin_info(capsys):
    for name in BUILTIN_SPECS:
        status, out = run_cli(capsys, "info", name)
        assert status == 0, name
        assert name in out


def test_cli_usage_error_exit_2(capsys):
    assert main(["classify", "no-such-spec-anywhere"]) == 2


def test_cli_bracket(capsys):
    status, out = run_cli(capsys, "bracket", "goldenmean.shift",
                          "--x", "L=0 C= O=0 R=0", "--y", "L=0 C=1 O=-3 R=0",
                          "--window", "3")
    assert status == 0
    assert "value: L=0 C=1 O=-3 R=0" in out


def test_cli_words(capsys):
    status, out = run_cli(capsys, "words", "goldenmean.shift", "--maxlen", "2")
    assert status == 0
    listed = out.split("words:")[1]
    assert "ε" in listed and "01" in listed and "11" not in listed


def test_cli_sync_words(capsys):
    status, out = run_cli(capsys, "sync-words", "even.shift", "--maxlen", "2")
    assert status == 0
    assert "1" in out and "00" not in out.split("words:")[1]


def test_cli_find_periodic_acceptance_instance(capsys):
    status, out = run_cli(capsys, "find-periodic", "goldenmean.shift",
                          "--point", "L=0 C= O=0 R=0", "--window", "3",
                          "--return-point", "L=0 C=1 O=3 R=0", "--n", "6")
    assert status == 0
    assert "minimal_period: 6" in out


def test_cli_groupoid(capsys):
    status, out = run_cli(capsys, "groupoid", "even.shift", "--kind", "lcsync",
                          "--bound", "6")
    assert status == 0
    assert "arrow_count" in out
    assert "L=0 C= O=0 R=0" not in out


def test_cli_factor_degree_point(capsys):
    status, out = run_cli(capsys, "factor", "even.shift", "--check", "degree",
                          "--point", "L=0 C= O=0 R=0")
    assert status == 0
    assert "M: 2" in out
    assert "preimage_count: 2" in out


def test_cli_product(capsys):
    status, out = run_cli(capsys, "product", "even.shift", "goldenmean.shift")
    assert status == 0
    assert "0|0" in out and "cover_states: 4" in out
