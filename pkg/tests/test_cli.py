"""Command-line behavior: parsing, reports, exit codes."""

import json

import pytest

from kzero import RuledSurface
from kzero.cli import DEFAULT_SERIES_ORDER, jobspec_from_dict, jobspec_to_dict, main, run


def ruled_doc(genus="0", deg_e="-1", deg_q="-1", order=None):
    doc = {
        "mode": "ruled",
        "base": {"kind": "curve", "genus": genus},
        "parameters": {"deg_e": deg_e, "deg_q": deg_q},
    }
    if order is not None:
        doc["series_order"] = order
    return doc


def assert_all_strings(value):
    if isinstance(value, dict):
        for v in value.values():
            assert_all_strings(v)
    elif isinstance(value, list):
        for v in value:
            assert_all_strings(v)
    else:
        assert value is None or isinstance(value, str)


# -- job parsing -------------------------------------------------------


def test_jobspec_round_trip():
    job = jobspec_from_dict(ruled_doc("2", "3", "-4", "12"))
    assert job.series_order == 12
    assert jobspec_from_dict(jobspec_to_dict(job)) == job

    point_job = jobspec_from_dict(
        {"mode": "point", "base": {"kind": "point"}, "parameters": {"relation": ["1", "-2", "1"]}}
    )
    assert jobspec_from_dict(jobspec_to_dict(point_job)) == point_job

    pn_job = jobspec_from_dict(
        {
            "mode": "pnbundle",
            "base": {"kind": "curve", "genus": 1},
            "parameters": {"n": 2, "koszul": [[1, 0], [3, 2], [3, 1], [1, 0]]},
        }
    )
    assert jobspec_from_dict(jobspec_to_dict(pn_job)) == pn_job


def test_jobspec_accepts_ints_and_strings():
    a = jobspec_from_dict(ruled_doc(0, -1, -1))
    b = jobspec_from_dict(ruled_doc("0", "-1", "-1"))
    assert a == b
    assert a.series_order == DEFAULT_SERIES_ORDER


def test_jobspec_rejects_garbage():
    from kzero import ParseError

    with pytest.raises(ParseError):
        jobspec_from_dict({"mode": "nonsense"})
    with pytest.raises(ParseError):
        jobspec_from_dict({"mode": "ruled", "parameters": {"deg_e": "1"}})
    with pytest.raises(ParseError):
        jobspec_from_dict(ruled_doc("0", "1.5", "0"))


# -- reports -----------------------------------------------------------


def test_ruled_report_contents():
    report = run(jobspec_from_dict(ruled_doc("0", "-1", "-1", "8")))
    assert report["schema"] == 1
    assert report["intersection_table"] == {
        "fiber.fiber": "0",
        "fiber.H": "1",
        "H.fiber": "1",
        "H.H": "-1",
    }
    assert report["e_invariant"] == "1"
    assert report["hilbert_ranks"] == [str(i + 1) for i in range(9)]
    assert report["radical_basis"] == [["0", "1", "0"]]
    assert report["gram_ns"] == [["0", "1"], ["1", "-1"]]


def test_report_integers_are_decimal_strings():
    report = run(jobspec_from_dict(ruled_doc("1", "2", "-3", "4")))
    payload = {k: v for k, v in report.items() if k != "schema"}
    assert_all_strings(payload)


def test_report_input_echo_round_trips():
    job = jobspec_from_dict(ruled_doc("2", "5", "1", "6"))
    report = run(job)
    assert jobspec_from_dict(report["input"]) == job


def test_point_report():
    job = jobspec_from_dict(
        {"mode": "point", "base": {"kind": "point"}, "parameters": {"relation": ["1", "-3", "3", "-1"]}}
    )
    report = run(job)
    assert report["group_structure"]["free_rank_over_base"] == "3"
    assert report["group_structure"]["point_base_abelian_rank"] == "3"
    assert report["hilbert_ranks"][:4] == ["1", "3", "6", "10"]


# -- exit codes ----------------------------------------------------------


def test_run_exit_zero_and_json_output(tmp_path, capsys):
    spec = tmp_path / "job.json"
    spec.write_text(json.dumps(ruled_doc("0", "-1", "-1", "4")))
    assert main(["run", "--spec", str(spec), "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["e_invariant"] == "1"


def test_flags_equivalent_to_json(capsys):
    assert main(["run", "--mode", "ruled", "--genus", "0", "--deg-e", "-1", "--deg-q", "-1", "--json"]) == 0
    by_flags = json.loads(capsys.readouterr().out)
    assert by_flags["input"]["parameters"] == {"deg_e": "-1", "deg_q": "-1"}
    assert by_flags["e_invariant"] == "1"


def test_json_wins_over_flags(tmp_path, capsys):
    spec = tmp_path / "job.json"
    spec.write_text(json.dumps(ruled_doc("0", "-2", "0", "4")))
    code = main(["run", "--spec", str(spec), "--deg-e", "7", "--genus", "3", "--json"])
    assert code == 0
    report = json.loads(capsys.readouterr().out)
    assert report["input"]["parameters"]["deg_e"] == "-2"
    assert report["input"]["base"]["genus"] == "0"
    assert report["e_invariant"] == "2"


def test_validation_error_names_the_violated_constraint(tmp_path, capsys):
    spec = tmp_path / "bad.json"
    spec.write_text(
        json.dumps(
            {
                "mode": "pnbundle",
                "base": {"kind": "curve", "genus": "0"},
                "parameters": {"n": "1", "koszul": [["1", "0"], ["5", "0"], ["1", "0"]]},
            }
        )
    )
    assert main(["run", "--spec", str(spec)]) == 1
    err = capsys.readouterr().err
    assert "rank(E_1)" in err and "binomial(2,1) = 2" in err


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "broken.json"
    bad.write_text("{not json")
    assert main(["run", "--spec", str(bad)]) == 1
    assert main(["run", "--spec", str(tmp_path / "missing.json")]) == 1
    assert main(["run", "--mode", "point", "--relation", "2,-1"]) == 1


def test_verify_small_grid_passes(capsys):
    assert main(["verify", "--grid", "1,1"]) == 0
    out = capsys.readouterr().out
    assert "verification passed" in out


def test_verify_empty_grid_passes_trivially(capsys):
    assert main(["verify", "--grid=-1,-1"]) == 0
    out = capsys.readouterr().out
    assert "passed=0 failed=0" in out


def test_verify_catches_a_corrupted_euler_form(monkeypatch, capsys):
    true_form = RuledSurface.euler_form

    def corrupted(self, a, b):
        return true_form(self, a, b) + 1

    monkeypatch.setattr(RuledSurface, "euler_form", corrupted)
    assert main(["verify", "--grid", "0,0"]) == 2
    out = capsys.readouterr().out
    assert "verification FAILED" in out


def test_verify_bad_grid_flag(capsys):
    assert main(["verify", "--grid", "5"]) == 1
