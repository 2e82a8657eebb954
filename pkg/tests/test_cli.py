"""End-to-end runs of the console entry point."""

import json

import pytest

from cyclechain.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, json.loads(out), err


FIG1 = ("--r", "2", "--m", "3,4", "--t", "4")


def test_gen(capsys):
    code, obj, _ = run_json(capsys, "gen", *FIG1)
    assert code == 0
    assert obj["n"] == 10
    assert obj["vertices"] == 9
    assert obj["forest_attachments"] == [0, 5, 6, 7]
    assert obj["edges"][0] == {"index": 0, "label": "e_{1,1}", "endpoints": [0, 1]}
    assert obj["edges"][3] == {"index": 3, "label": "e_{2,1}", "endpoints": [1, 3]}


def test_cycles(capsys):
    code, obj, _ = run_json(capsys, "cycles", *FIG1)
    assert code == 0
    assert obj["count"] == 3
    assert [c["length"] for c in obj["cycles"]] == [3, 4, 5]
    assert obj["cycles"][2]["edges"] == [
        "e_{1,2}", "e_{1,3}", "e_{2,1}", "e_{2,2}", "e_{2,3}",
    ]


def test_trees_count_only(capsys):
    code, obj, _ = run_json(capsys, "trees", *FIG1, "--count-only")
    assert code == 0
    assert obj == {"count": 11}


def test_trees_by_class(capsys):
    code, obj, _ = run_json(capsys, "trees", *FIG1, "--by-class")
    assert code == 0
    assert obj["count"] == 11
    assert obj["by_class"] == {"C1": 6, "C2": 5}
    assert len(obj["trees"]) == len(obj["removals"]) == 11
    assert all(len(tr) == 8 for tr in obj["trees"])
    assert {rm["class"] for rm in obj["removals"]} == {"C1", "C2"}


def test_fvector_methods(capsys):
    code, obj, _ = run_json(capsys, "fvector", *FIG1)
    assert code == 0
    assert obj == {"f": [10, 45, 119, 202, 224, 157, 63, 11], "dim": 7}
    code, brute, _ = run_json(capsys, "fvector", *FIG1, "--method", "brute")
    assert code == 0
    assert brute["f"] == obj["f"]
    code, cmp_, _ = run_json(
        capsys, "fvector", "--r", "3", "--m", "3,3,3", "--method", "paper"
    )
    assert code == 0
    assert cmp_["exact"] == [7, 21, 32, 21]
    assert cmp_["pairwise_form"] == [89, 134, 121, 51]
    assert cmp_["agree"] is False
    assert cmp_["mismatched_indices"] == [0, 1, 2, 3]
    assert cmp_["r2_closed_form"] is None


def test_hilbert(capsys):
    code, obj, _ = run_json(capsys, "hilbert", *FIG1, "--expand", "4")
    assert code == 0
    assert obj == {
        "numerator": [1, 2, 3, 3, 2],
        "denom_power": 8,
        "expansion": [1, 10, 55, 219, 704],
    }


def test_covers(capsys):
    code, lemma, _ = run_json(capsys, "covers", *FIG1, "--method", "lemma")
    assert code == 0
    assert lemma["count"] == 8
    code, oracle, _ = run_json(capsys, "covers", *FIG1, "--method", "oracle")
    assert code == 0
    assert oracle["count"] == 14
    assert ["e_{1,1}", "e_{1,2}", "e_{2,1}"] in oracle["covers"]


def test_decompose(capsys):
    code, obj, _ = run_json(capsys, "decompose", *FIG1)
    assert code == 0
    assert obj["equals_facet_ideal"] is True
    assert len(obj["primes"]) == 14
    assert len(obj["generators"]) == 11


def test_certify(capsys):
    code, obj, _ = run_json(capsys, "certify", "--r", "1", "--m", "3")
    assert code == 0
    assert obj == {
        "steps": 3,
        "ordering": [["e_{1,1}"], ["e_{1,2}"], ["e_{1,3}"]],
        "ordering_indices": [2, 1, 0],
        "witnesses": ["e_{1,2}", "e_{1,3}"],
        "replayed": True,
    }


def test_verify_exit_codes(capsys):
    code, obj, err = run_json(capsys, "verify", *FIG1, "--checks", "trees,count")
    assert code == 0
    assert obj["ok"] is True
    assert "check trees" in err
    # the full check set includes the cover comparison, which faithfully
    # reports the gap in the predicted list
    code, obj, _ = run_json(capsys, "verify", *FIG1)
    assert code == 5
    assert obj["ok"] is False
    names = {c["name"]: c["status"] for c in obj["checks"]}
    assert names["covers"] == "mismatch"


def test_verify_family(capsys):
    code, obj, _ = run_json(
        capsys, "verify", "--family", "2,3,1", "--checks", "count"
    )
    assert code == 0
    assert obj["instances"] == 4
    assert obj["mismatches"] == 0
    assert len(obj["reports"]) == 4


def test_verify_stdout_is_deterministic(capsys):
    _, first, err1 = run(capsys, "verify", "--family", "2,3,1", "--checks", "count,trees")
    _, second, err2 = run(capsys, "verify", "--family", "2,3,1", "--checks", "count,trees")
    assert first == second
    assert err1 and err2


def test_spec_file(capsys, tmp_path):
    spec = tmp_path / "g.json"
    spec.write_text(json.dumps({"r": 2, "m": [3, 4], "forest": {"count": 4}}))
    code, obj, _ = run_json(capsys, "gen", "--spec", str(spec))
    assert code == 0
    assert obj["forest_attachments"] == [0, 5, 6, 7]

    spec.write_text(json.dumps({"r": 2, "m": [3, 3], "forest": {"attach": [0, 0]}}))
    code, obj, _ = run_json(capsys, "gen", "--spec", str(spec))
    assert code == 0
    assert obj["forest_attachments"] == [0, 0]


def test_spec_file_errors(capsys, tmp_path):
    spec = tmp_path / "g.json"
    spec.write_text("{not json")
    code, _, err = run(capsys, "gen", "--spec", str(spec))
    assert code == 2 and "error:" in err

    code, _, err = run(capsys, "gen", "--spec", str(tmp_path / "missing.json"))
    assert code == 2

    spec.write_text(json.dumps({"r": 1, "m": [3]}))
    code, _, err = run(capsys, "gen", "--spec", str(spec), "--r", "1")
    assert code == 2


def test_invalid_parameters(capsys):
    code, _, err = run(capsys, "gen", "--r", "0", "--m", "3")
    assert code == 2 and "error:" in err
    code, _, _ = run(capsys, "gen", "--r", "2", "--m", "3")
    assert code == 2
    code, _, _ = run(capsys, "trees", "--r", "1", "--m", "not-a-number")
    assert code == 2


def test_capacity_exit(capsys):
    code, _, err = run(capsys, "gen", "--r", "1", "--m", "70")
    assert code == 3 and "capacity" in err
    code, _, _ = run(capsys, "fvector", "--r", "7", "--m", "3,3,3,3,3,3,3")
    assert code == 3


def test_pretty_output(capsys):
    code, out, _ = run(capsys, "trees", *FIG1, "--count-only", "--pretty")
    assert code == 0
    assert out.strip() == "11 spanning trees"


def test_bad_subcommand(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
