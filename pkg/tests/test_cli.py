"""Tests for the command-line interface and its plumbing."""

import json
import math
import os

import numpy as np
import pytest

from unideform import regions, suites
from unideform.cli import (
    EXIT_FAIL,
    EXIT_PASS,
    EXIT_USAGE,
    RunConfig,
    main,
    parse_class_spec,
    parse_complex_literal,
    rows_to_csv,
)


def test_parse_complex_literal():
    assert parse_complex_literal("0.5") == 0.5
    assert parse_complex_literal("1+0.5i") == 1 + 0.5j
    assert parse_complex_literal("-0.1-2i") == -0.1 - 2j
    assert parse_complex_literal("(1 - 0.5i)") == 1 - 0.5j
    assert parse_complex_literal("2i") == 2j
    with pytest.raises(ValueError):
        parse_complex_literal("banana")
    with pytest.raises(ValueError):
        parse_complex_literal("inf+0i")


def test_parse_class_spec_tokens():
    assert parse_class_spec("S", None, None).id is regions.ClassId.S
    assert parse_class_spec("K", None, None).id is regions.ClassId.CONVEX
    assert parse_class_spec("C", None, None).id \
        is regions.ClassId.CLOSE_TO_CONVEX
    assert parse_class_spec("S*", None, None).id is regions.ClassId.STARLIKE
    assert parse_class_spec("S*", 0.5, None).id \
        is regions.ClassId.STARLIKE_ORDER
    assert parse_class_spec("SS", 0.5, None).id \
        is regions.ClassId.STRONGLY_STARLIKE
    assert parse_class_spec("Sp", None, None).id \
        is regions.ClassId.SPIRALLIKE_ALL
    assert parse_class_spec("Sp", None, 0.3).id is regions.ClassId.SPIRALLIKE
    assert parse_class_spec("Sp", 0.6, 0.3).id \
        is regions.ClassId.STRONGLY_SPIRALLIKE
    with pytest.raises(ValueError):
        parse_class_spec("SS", None, None)
    with pytest.raises(ValueError):
        parse_class_spec("Q", None, None)


def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig(rmax=1.5)
    with pytest.raises(ValueError):
        RunConfig(formats=("pdf",))


def test_verify_goodman_exit_and_files(tmp_path):
    status = main(["verify", "goodman", "--out", str(tmp_path)])
    assert status == EXIT_PASS
    assert (tmp_path / "verify_goodman.csv").exists()
    assert (tmp_path / "verify_goodman.txt").exists()
    header = (tmp_path / "verify_goodman.csv").read_text().splitlines()[0]
    assert header == ("predicate,function_label,param,verdict,margin,"
                      "witness_re,witness_im")


def test_env_var_overrides_out(tmp_path, monkeypatch):
    env_dir = tmp_path / "env"
    monkeypatch.setenv("UNIDEFORM_OUT", str(env_dir))
    status = main(["verify", "goodman", "--out", str(tmp_path / "flag")])
    assert status == EXIT_PASS
    assert (env_dir / "verify_goodman.csv").exists()
    assert not (tmp_path / "flag").exists()


def test_deform_writes_series_json(tmp_path, capsys):
    status = main(["deform", "--fn", "koebe", "--op", "K", "--c", "0.5",
                   "--order", "16", "--out", str(tmp_path)])
    assert status == EXIT_PASS
    out = capsys.readouterr().out
    assert "K_0.5[koebe]" in out
    payload = json.loads((tmp_path / "deform_K_0.5_koebe.json").read_text())
    assert payload["order"] == 16
    # K_{1/2} of the koebe function is the half-plane map: all ones
    assert all(abs(re - 1.0) < 1e-12 and abs(im) < 1e-12
               for re, im in payload["coeffs"])


def test_deform_j1_and_missing_c(tmp_path):
    assert main(["deform", "--fn", "koebe", "--op", "J1", "--order", "8",
                 "--out", str(tmp_path)]) == EXIT_PASS
    assert main(["deform", "--fn", "koebe", "--op", "K",
                 "--out", str(tmp_path)]) == EXIT_USAGE
    assert main(["deform", "--fn", "nope", "--op", "J1",
                 "--out", str(tmp_path)]) == EXIT_USAGE


def test_region_class_and_function(tmp_path):
    assert main(["region", "--class", "SS", "--alpha", "0.5",
                 "--out", str(tmp_path)]) == EXIT_PASS
    svg = (tmp_path / "region_strongly_starlike_alpha_0.5.svg").read_text()
    assert 'viewBox="-3 -3 6 6"' in svg
    assert svg.count("<circle") >= 4  # two closed-form + two recomputed disks
    assert main(["region", "--fn", "koebe", "--angles", "256", "--order", "64",
                 "--out", str(tmp_path)]) == EXIT_PASS
    assert (tmp_path / "region_koebe.svg").exists()
    assert (tmp_path / "region_koebe.csv").read_text().startswith(
        "re,im,classification")
    assert main(["region", "--out", str(tmp_path)]) == EXIT_USAGE


def test_probe_commands(tmp_path, capsys):
    assert main(["probe", "--fn", "strongly-starlike:0.5",
                 "--kind", "boundedness", "--out", str(tmp_path)]) == EXIT_PASS
    assert "bounded-plateau" in capsys.readouterr().out
    assert main(["probe", "--fn", "koebe", "--kind", "boundedness",
                 "--out", str(tmp_path)]) == EXIT_PASS
    assert "growing" in capsys.readouterr().out
    assert main(["probe", "--fn", "koebe", "--kind", "argument",
                 "--out", str(tmp_path)]) == EXIT_PASS
    csv = (tmp_path / "probe_argument_koebe.csv").read_text().splitlines()
    assert csv[0] == "r,max_abs_arg,bound"
    for line in csv[1:]:
        r, arg, bound = map(float, line.split(","))
        assert arg <= bound + 1e-9


def test_verify_failure_exit_code(monkeypatch, tmp_path):
    # force a failing row to check the exit-code contract
    fail_row = suites.CheckRow("stub", "stub", "", "fail", -1.0)
    monkeypatch.setattr(suites, "run_suite", lambda name, seed=0: [fail_row])
    assert main(["verify", "goodman", "--out", str(tmp_path)]) == EXIT_FAIL


def test_rows_to_csv_is_deterministic():
    rows = [suites.CheckRow("p", "f", "x", "pass", 1.0 / 3.0, 0.1 + 0.2j)]
    assert rows_to_csv(rows) == rows_to_csv(rows)
    assert "0.3333333333333333" in rows_to_csv(rows)


def test_surface_suite_covers_public_operations():
    # the spec-level operation inventory; verify all must exercise each
    expected = {
        "series_mul", "series_log", "series_exp", "series_pow", "evaluate",
        "evaluate_checked", "tail_bound", "unwrap_arg_along_ray",
        "unwrap_arg_rays", "series_to_json/from_json",
        "power_deform", "alexander", "integral_deform_I", "integral_deform_J",
        "log_coordinate_psi", "log_coordinate_phi", "log_derivative_ratio",
        "zoo.make_named", "zoo.parse_function_spec",
        "regions.mobius_T", "regions.closed_form_variability",
        "regions.closed_form_exponent_region",
        "regions.complement_of_T_image", "regions.signed_distance",
        "regions.region_contains", "regions.scale_region",
        "regions.region_subset", "regions.region_boundary_points",
        "sampling.winding_number", "sampling.winding_numbers",
        "sampling.sampled_exponent_region",
        "is_locally_univalent", "is_spirallike", "is_strongly_spirallike",
        "is_convex", "is_univalent_numeric", "goodman_check",
        "boundedness_probe",
    }
    assert set(suites.SURFACE_OP_NAMES) == expected
    rows = suites.surface_suite()
    assert {r.function_label for r in rows} == expected
    assert suites.all_passed(rows)


def test_verify_all_exercises_every_command(tmp_path):
    status = main(["verify", "all", "--seed", "1", "--out", str(tmp_path)])
    assert status == EXIT_PASS
    csv = (tmp_path / "verify_all.csv").read_text()
    for name in ("cmd_region-class", "cmd_region-fn", "cmd_deform",
                 "cmd_probe-boundedness", "cmd_probe-argument"):
        assert f"cli,{name}," in csv
    for name in suites.SURFACE_OP_NAMES:
        assert f"surface,{name}," in csv
