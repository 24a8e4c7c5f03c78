"""End-to-end checks of the command line: exit codes, report shape,
byte-stable output, and input validation."""

import io
import json
import contextlib

import pytest

from eplab.cli import main
from eplab.theorems import pack_from_json, replay_pack


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        rc = main(argv)
    return rc, out.getvalue(), err.getvalue()


def write_json(path, data):
    path.write_text(json.dumps(data))
    return str(path)


@pytest.fixture
def z4_spec(tmp_path):
    return write_json(
        tmp_path / "z4.json", {"ring": {"kind": "mod_n", "n": 4}, "module": {"kind": "regular"}}
    )


@pytest.fixture
def klein_spec(tmp_path):
    return write_json(
        tmp_path / "klein.json",
        {
            "ring": {"kind": "mod_n", "n": 4},
            "module": {
                "kind": "direct_sum",
                "summands": [{"kind": "mod_m", "m": 2}, {"kind": "mod_m", "m": 2}],
            },
            "bounds": {"max_n": 2, "max_gens": 2},
        },
    )


@pytest.fixture
def m2f2_spec(tmp_path):
    return write_json(
        tmp_path / "m2f2.json",
        {"ring": {"kind": "matrix", "m": 2, "q": 2}, "module": {"kind": "column", "k": 2}},
    )


@pytest.fixture
def z4_codes(tmp_path, z4_spec):
    return write_json(
        tmp_path / "codes.json",
        {
            "alphabet": "z4.json",
            "length": 2,
            "codes": [
                {"name": "C", "generators": [[1, 2]]},
                {"name": "D", "generators": [[3, 2]]},
                {"name": "E", "generators": [[1, 0]]},
            ],
            "maps": [
                {"from": "C", "to": "D", "gen_images": [[3, 2]]},
                {"from": "C", "to": "E", "gen_images": [[1, 0]]},
            ],
        },
    )


# ---------------------------------------------------------------------------
# structure reports


def test_ring_info_z4(z4_spec):
    rc, out, _ = run(["ring-info", "--spec", z4_spec])
    assert rc == 0
    report = json.loads(out)
    assert report["version"] == "eplab/1"
    assert report["command"] == "ring-info"
    assert report["inputs"]["ring"] == {"kind": "mod_n", "n": 4}
    result = report["result"]
    assert result["order"] == 4
    assert result["unit_count"] == 2
    assert result["radical"] == [0, 2]
    assert result["left_ideal_count"] == 3
    assert result["is_left_pir"] and result["is_right_pir"]
    assert result["wedderburn_blocks"] == [{"mu": 1, "q": 2}]
    assert result["additive_exponent"] == 4


def test_socle_report_klein(klein_spec):
    rc, out, _ = run(["socle-report", "--spec", klein_spec])
    assert rc == 0
    result = json.loads(out)["result"]
    assert result["cyclic"] is False
    assert result["methods_agree"] is True
    assert result["blocks"] == [{"mu": 1, "q": 2, "s": 2, "simple_order": 2}]
    assert result["socle_members"] == [0, 1, 2, 3]


def test_aut_group_z4(z4_spec):
    rc, out, _ = run(["aut-group", "--spec", z4_spec])
    assert rc == 0
    result = json.loads(out)["result"]
    assert result["order"] == 2
    assert result["elements"] == [[0, 1, 2, 3], [0, 3, 2, 1]]


def test_orbits_by_annihilator(z4_spec):
    rc, out, _ = run(["orbits", "--spec", z4_spec, "--by", "annihilator"])
    assert rc == 0
    result = json.loads(out)["result"]
    assert result["kind"] == "annihilator"
    assert result["labels"] == [0, 1, 2, 1]
    assert result["classes"] == {"0": [0], "1": [1, 3], "2": [2]}


def test_weights_profiles(z4_codes):
    rc, out, _ = run(["weights", "--codes", z4_codes, "--kind", "all"])
    assert rc == 0
    result = json.loads(out)["result"]
    by_name = {c["name"]: c for c in result["codes"]}
    assert set(by_name) == {"C", "D", "E"}
    assert by_name["C"]["size"] == 4
    gen = next(w for w in by_name["C"]["words"] if w["word"] == [1, 2])
    assert gen["profiles"]["hamming"] == {"nonzero": 2}
    assert gen["profiles"]["swc"] == {"1": 1, "2": 1}
    assert gen["profiles"]["aw"] == {"1": 1, "2": 1}


def test_weights_single_kind(z4_codes):
    rc, out, _ = run(["weights", "--codes", z4_codes, "--kind", "hamming"])
    assert rc == 0
    result = json.loads(out)["result"]
    word = result["codes"][0]["words"][0]
    assert set(word["profiles"]) == {"hamming"}


def test_codes_file_inline_alphabet(tmp_path):
    path = write_json(
        tmp_path / "inline.json",
        {
            "alphabet": {"ring": {"kind": "mod_n", "n": 4}, "module": {"kind": "regular"}},
            "length": 1,
            "codes": [{"name": "C", "generators": [[2]]}],
        },
    )
    rc, out, _ = run(["weights", "--codes", path])
    assert rc == 0
    assert json.loads(out)["result"]["codes"][0]["size"] == 2


# ---------------------------------------------------------------------------
# counterexample commands


def test_ep_counterexample_emits_replayable_pack(tmp_path):
    out_path = tmp_path / "pack.json"
    rc, out, _ = run(
        ["ep-counterexample", "--m", "1", "--k", "2", "--q", "2", "--out", str(out_path)]
    )
    assert rc == 1
    report = json.loads(out)
    pack_json = report["result"]["pack"]
    assert pack_json["format"] == "eplab-pack/1"
    assert pack_json["length"] == 3
    assert json.loads(out_path.read_text()) == pack_json
    pack = pack_from_json(pack_json)
    assert replay_pack(pack).result == "verified"


def test_ep_check_extension_mixed(z4_codes):
    rc, out, _ = run(["ep-check-extension", "--codes", z4_codes])
    assert rc == 1
    maps = json.loads(out)["result"]["maps"]
    assert [m["extends"] for m in maps] == [True, False]
    good = maps[0]
    assert good["preserves"] == {"hamming": True, "swc": True, "aw": True}
    assert good["transform"]["sigma"] == [0, 1]
    assert maps[1]["transform"] is None


def test_ep_check_extension_all_pass(tmp_path):
    path = write_json(
        tmp_path / "codes.json",
        {
            "alphabet": {"ring": {"kind": "mod_n", "n": 4}, "module": {"kind": "regular"}},
            "length": 2,
            "codes": [
                {"name": "C", "generators": [[1, 2]]},
                {"name": "D", "generators": [[3, 2]]},
            ],
            "maps": [{"from": "C", "to": "D", "gen_images": [[3, 2]]}],
        },
    )
    rc, out, _ = run(["ep-check-extension", "--codes", path])
    assert rc == 0
    assert json.loads(out)["result"]["maps"][0]["extends"] is True


# ---------------------------------------------------------------------------
# verifiers and the exit-code contract


def test_verify_orbit_lemma_exit_zero(klein_spec):
    rc, out, _ = run(["verify-orbit-lemma", "--spec", klein_spec])
    assert rc == 0
    assert json.loads(out)["result"]["result"] == "verified"


def test_verify_sufficiency_unmet_hypotheses(klein_spec):
    rc, out, _ = run(["verify-sufficiency", "--spec", klein_spec])
    assert rc == 2
    result = json.loads(out)["result"]
    assert result["result"] == "hypotheses-unmet"
    assert result["hypotheses"]["socle_cyclic"] is False


def test_verify_sufficiency_z4(z4_spec):
    rc, out, _ = run(["verify-sufficiency", "--spec", z4_spec, "--max-n", "2"])
    assert rc == 0
    result = json.loads(out)["result"]
    assert result["result"] == "verified"
    assert result["counts"]["swc_preserving"] == result["counts"]["extended"] == 60


def test_verify_necessity_finds_counterexample(klein_spec):
    rc, out, _ = run(["verify-necessity", "--spec", klein_spec])
    assert rc == 1
    result = json.loads(out)["result"]
    assert result["result"] == "counterexample"
    pack = pack_from_json(result["details"]["pack"])
    assert pack.construction == "pullback"
    assert replay_pack(pack).result == "verified"


def test_verify_midway_bounds_from_spec(klein_spec):
    rc, out, _ = run(["verify-midway", "--spec", klein_spec])
    assert rc == 0
    result = json.loads(out)["result"]
    assert result["result"] == "verified"
    assert result["details"]["lengths"] == [1, 2]


def test_verify_midway_explicit_bound_is_strict(m2f2_spec):
    rc, _, err = run(["verify-midway", "--spec", m2f2_spec, "--max-n", "10"])
    assert rc == 3
    assert "exceeds guard" in err


def test_verify_midway_flag_overrides_spec_bounds(klein_spec):
    rc, out, _ = run(["verify-midway", "--spec", klein_spec, "--max-n", "1"])
    assert rc == 0
    assert json.loads(out)["result"]["details"]["lengths"] == [1]


def test_verify_all_klein(klein_spec):
    rc, out, _ = run(["verify-all", "--spec", klein_spec])
    assert rc == 0
    result = json.loads(out)["result"]
    assert result["result"] == "verified"
    assert result["counts"]["sub_results"]["necessity"] == "counterexample"


def test_guard_flag_tightens_order(m2f2_spec):
    rc, _, err = run(["ring-info", "--spec", m2f2_spec, "--max-order", "8"])
    assert rc == 3
    assert "exceeds guard" in err


def test_guard_env_variable(monkeypatch, m2f2_spec):
    monkeypatch.setenv("EPLAB_MAX_ORDER", "8")
    rc, _, _ = run(["ring-info", "--spec", m2f2_spec])
    assert rc == 3
    # an explicit flag wins over the environment
    rc, _, _ = run(["ring-info", "--spec", m2f2_spec, "--max-order", "64"])
    assert rc == 0


# ---------------------------------------------------------------------------
# input errors


def test_missing_file_is_input_error():
    rc, _, err = run(["ring-info", "--spec", "/nonexistent/spec.json"])
    assert rc == 4
    assert "cannot read" in err


def test_invalid_json_is_input_error(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    rc, _, err = run(["ring-info", "--spec", str(path)])
    assert rc == 4
    assert "not valid JSON" in err


def test_non_object_spec_rejected(tmp_path):
    path = tmp_path / "arr.json"
    path.write_text("[1, 2]")
    assert run(["ring-info", "--spec", str(path)])[0] == 4


def test_spec_without_ring_rejected(tmp_path):
    path = write_json(tmp_path / "s.json", {"module": {"kind": "regular"}})
    assert run(["ring-info", "--spec", str(path)])[0] == 4


def test_semantic_mismatch_is_input_error(tmp_path):
    path = write_json(
        tmp_path / "s.json",
        {"ring": {"kind": "mod_n", "n": 4}, "module": {"kind": "column", "k": 2}},
    )
    assert run(["socle-report", "--spec", str(path)])[0] == 4


def test_module_required_for_module_commands(tmp_path):
    path = write_json(tmp_path / "s.json", {"ring": {"kind": "mod_n", "n": 4}})
    rc, _, err = run(["socle-report", "--spec", str(path)])
    assert rc == 4
    assert "module" in err


def test_bad_bounds_rejected(tmp_path):
    path = write_json(
        tmp_path / "s.json",
        {"ring": {"kind": "mod_n", "n": 4}, "module": {"kind": "regular"}, "bounds": {"max_n": 0}},
    )
    assert run(["verify-midway", "--spec", str(path)])[0] == 4
    path2 = write_json(
        tmp_path / "s2.json",
        {"ring": {"kind": "mod_n", "n": 4}, "module": {"kind": "regular"}, "bounds": {"depth": 1}},
    )
    assert run(["verify-midway", "--spec", str(path2)])[0] == 4


def test_codes_file_validation(tmp_path):
    missing = write_json(tmp_path / "c1.json", {"alphabet": {"ring": {"kind": "mod_n", "n": 4}}})
    assert run(["weights", "--codes", missing])[0] == 4

    base = {
        "alphabet": {"ring": {"kind": "mod_n", "n": 4}, "module": {"kind": "regular"}},
        "length": 1,
    }
    dup = write_json(
        tmp_path / "c2.json",
        dict(base, codes=[{"name": "C", "generators": [[1]]}, {"name": "C", "generators": [[2]]}]),
    )
    assert run(["weights", "--codes", dup])[0] == 4

    ghost = write_json(
        tmp_path / "c3.json",
        dict(
            base,
            codes=[{"name": "C", "generators": [[1]]}],
            maps=[{"from": "C", "to": "X", "gen_images": [[1]]}],
        ),
    )
    assert run(["ep-check-extension", "--codes", ghost])[0] == 4

    no_maps = write_json(tmp_path / "c4.json", dict(base, codes=[{"name": "C", "generators": [[1]]}]))
    assert run(["ep-check-extension", "--codes", no_maps])[0] == 4


def test_alphabet_spec_needs_module(tmp_path):
    path = write_json(
        tmp_path / "c.json",
        {"alphabet": {"ring": {"kind": "mod_n", "n": 4}}, "length": 1,
         "codes": [{"name": "C", "generators": [[1]]}]},
    )
    assert run(["weights", "--codes", str(path)])[0] == 4


def test_bad_command_line(capsys):
    assert main(["no-such-command"]) == 4
    assert main([]) == 4
    assert main(["ring-info"]) == 4  # missing --spec
    assert main(["--help"]) == 0
    capsys.readouterr()


def test_bad_guard_flag_value(z4_spec):
    rc, _, err = run(["ring-info", "--spec", z4_spec, "--max-order", "0"])
    assert rc == 4
    assert "positive" in err


# ---------------------------------------------------------------------------
# determinism


def test_reports_are_byte_identical(klein_spec, z4_codes):
    for argv in (
        ["verify-all", "--spec", klein_spec],
        ["weights", "--codes", z4_codes],
        ["ep-counterexample", "--m", "1", "--k", "2", "--q", "2"],
        ["socle-report", "--spec", klein_spec],
    ):
        first = run(argv)
        second = run(argv)
        assert first[1] == second[1]
        assert first[1].endswith("}\n")
