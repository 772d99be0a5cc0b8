import csv
import json
import os

import pytest
from openpyxl import load_workbook

import constants
from controller import (Check, JobSpec, MatrixCache, SelfTestFailure, exit_code_for, load_job,
                        parse_job, run)
from controller import engine
from main import main
from model.matrixrep import encode
from model.polyring import InconsistencyError, parse_parameterization
from utils import Settings

from conftest import LINE, SPHERE_MAPS, SURFACE

LINE_JSON = {"blocks": [["x", "y"]], "field": "Q"}
PLANE_JSON = {"blocks": [["x", "y", "z"]], "field": "Q"}
SURFACE_JSON = {"blocks": [["x1", "x2", "x3"]], "field": "Q"}
TWISTED_CUBIC = ["x^3", "x^2*y", "x*y^2", "y^3"]


def _job(command, maps=TWISTED_CUBIC, ring=LINE_JSON, **options) -> JobSpec:
    return parse_job({"command": command, "ring": ring, "maps": maps, "options": options})


def _read_report(path=constants.REPORT_PATH):
    with open(path, encoding="utf-8") as f:
        return json.load(f)


# ---------------------------------- job files


@pytest.mark.parametrize("obj", [
    {"command": "nope", "ring": LINE_JSON, "maps": TWISTED_CUBIC},
    {"command": "matrep", "ring": LINE_JSON, "maps": TWISTED_CUBIC, "options": {"colour": 1}},
    {"command": "matrep", "ring": LINE_JSON, "maps": TWISTED_CUBIC, "options": {"format": "pdf"}},
    {"command": "matrep", "ring": LINE_JSON, "maps": TWISTED_CUBIC, "options": {"nu": [-1]}},
    {"command": "matrep", "ring": LINE_JSON, "maps": TWISTED_CUBIC, "options": {"lmax": 0}},
    {"command": "fiber", "ring": LINE_JSON, "maps": TWISTED_CUBIC},
    {"command": "matrep", "ring": LINE_JSON, "maps": []},
    {"command": "matrep", "ring": LINE_JSON, "maps": TWISTED_CUBIC, "options": []},
    {"command": "matrep", "ring": [["x", "y"]], "maps": TWISTED_CUBIC},
    {"command": "matrep", "ring": {"blocks": 5}, "maps": TWISTED_CUBIC},
    {"command": "matrep", "ring": LINE_JSON, "maps": TWISTED_CUBIC, "options": {"settings": ["x"]}},
    [1, 2, 3],
])
def test_invalid_jobs(obj):
    with pytest.raises(ValueError):
        parse_job(obj)


def test_job_without_ring_is_a_key_error():
    with pytest.raises(KeyError):
        parse_job({"command": "matrep", "maps": TWISTED_CUBIC})


def test_selftest_job_needs_no_ring():
    job = parse_job({"command": "selftest"})
    assert job.ring is None
    with pytest.raises(ValueError):
        job.parameterization()


def test_scalar_options_are_accepted():
    job = _job("strata", nu=3, fitting=0, points=[["1", "2", "4", "8"]])
    assert job.options.nu == (3,)
    assert job.options.fitting == (0,)
    assert job.options.seed == constants.DEFAULT_SEED


def test_load_job_reads_json(tmp_path):
    path = tmp_path / "job.json"
    path.write_text(json.dumps({"command": "mubasis", "ring": LINE_JSON, "maps": TWISTED_CUBIC}))
    assert load_job(str(path)).parameterization().texts() == TWISTED_CUBIC
    with pytest.raises(FileNotFoundError):
        load_job(str(tmp_path / "missing.json"))


def test_job_settings_override_the_base():
    job = _job("matrep", settings={"cache_dir": "elsewhere"})
    assert job.settings(Settings()).cache_dir == "elsewhere"
    with pytest.raises(ValueError):
        _job("matrep", settings={"colour": 1}).settings(Settings())


def test_settings_load(tmp_path):
    assert Settings.load(str(tmp_path / "absent.json")) == Settings()
    path = tmp_path / "settings.json"
    path.write_text(json.dumps({"lmax_cap": 1, "default_seed": 7}))
    settings = Settings.load(str(path))
    assert (settings.lmax_cap, settings.default_seed) == (1, 7)
    assert parse_job({"command": "selftest"}, settings).options.seed == 7


# ---------------------------------- exit codes


@pytest.mark.parametrize("err, code", [
    (ValueError("x"), 2),
    (KeyError("x"), 2),
    (InconsistencyError("x"), 5),
    (ZeroDivisionError("x"), 5),
])
def test_exit_code_for(err, code):
    assert exit_code_for(err) == code


def test_unexpected_errors_are_inconsistent():
    assert exit_code_for(RuntimeError("bug")) == constants.EXIT_INCONSISTENT


def test_unexpected_error_still_writes_the_report(monkeypatch):
    def broken(job, settings):
        raise TypeError("unsupported operand")

    monkeypatch.setattr(engine.Action, "mubasis", staticmethod(broken))
    code, report = run(_job("mubasis"))
    assert code == constants.EXIT_INCONSISTENT
    written = _read_report()
    assert written["exit_code"] == constants.EXIT_INCONSISTENT
    assert written["error"] == "TypeError: unsupported operand"


# ---------------------------------- commands


def test_mubasis_command():
    code, report = run(_job("mubasis"))
    assert code == 0
    result = report["result"]
    assert result["mu"] == [1, 1, 1]
    assert result["hilbert_burch_scalar"] != "0"
    assert result["regularity"]["bound"] == 2
    assert _read_report()["result"]["mu"] == [1, 1, 1]


def test_matrep_defaults_to_the_certified_degree():
    code, report = run(_job("matrep"))
    assert code == 0
    result = report["result"]
    assert result["nu"] == [2]
    assert result["shape"] == [3, 6]
    assert result["valid"]
    assert not result["cache"]["hit"]


def test_matrep_cache_hit_is_bit_identical():
    _, first = run(_job("matrep"))
    path = first["result"]["cache"]["path"]
    with open(path, encoding="utf-8") as f:
        stored = f.read()
    _, second = run(_job("matrep"))
    assert second["result"]["cache"] == {"hit": True, "path": path}
    with open(path, encoding="utf-8") as f:
        assert f.read() == stored
    assert second["result"]["entries"] == first["result"]["entries"]


def test_cache_key_tracks_overrides():
    param = parse_parameterization(SPHERE_MAPS, SURFACE)
    assert MatrixCache.key(param, 2) != MatrixCache.key(param, 2, indeg=1)
    assert MatrixCache.key(param, 2) == MatrixCache.key(param, [2])


def test_unreadable_cache_entry_is_rebuilt(tmp_path):
    param = parse_parameterization(TWISTED_CUBIC, LINE)
    cache = MatrixCache(str(tmp_path / "cache"))
    key = cache.key(param, 2)
    cache.store(key, "{not json")
    M, hit, path = cache.get_or_build(param, 2)
    assert not hit
    with open(path, encoding="utf-8") as f:
        assert f.read() == encode(M)


def test_matrep_below_the_region_needs_force():
    code, report = run(_job("matrep", nu=[1]))
    assert code == constants.EXIT_UNCERTIFIED
    assert report["status"] == "error"
    assert report["error"].startswith("UncertifiedDegreeError")
    assert _read_report()["exit_code"] == 3


def test_matrep_csv_export():
    code, report = run(_job("matrep", nu=[1], force=True, format="csv"))
    assert code == 0
    assert not report["result"]["valid"]
    assert report["exports"] == ["report.csv"]
    with open("report.csv", newline="", encoding="utf-8") as f:
        rows = list(csv.reader(f))
    assert len(rows) == 2 and all(len(row) == 3 for row in rows)


def test_matrep_xlsx_export():
    job = _job("matrep", maps=list(SPHERE_MAPS), ring=SURFACE_JSON, indeg=1, format="xlsx",
               output="out/sphere.json")
    code, report = run(job)
    assert code == 0
    assert report["exports"] == ["out/sphere.xlsx"]
    sheet = load_workbook("out/sphere.xlsx")["M"]
    assert (sheet.max_row, sheet.max_column) == (3, 4)
    assert os.path.exists("out/sphere.json")


def test_fiber_command_on_a_curve():
    code, report = run(_job("fiber", points=[["1", "2", "4", "8"], ["1", "0", "0", "1"]]))
    assert code == 0
    on, off = report["result"]["fibers"]
    assert on["degree"] == 1
    assert on["preimage"]["points"] == [{"coords": ["1/2", "1"], "multiplicity": 1}]
    assert off["interpretation"] == "OffImage"
    assert "preimage" not in off


def test_fiber_command_numeric():
    code, report = run(_job("fiber", points=[["1", "2", "4", "8"]], numeric=True))
    assert code == 0
    (entry,) = report["result"]["fibers"]
    assert entry["approximate"]
    assert entry["corank"] == 1


def test_fiber_command_on_a_surface_uses_the_kernel():
    job = _job("fiber", maps=list(SPHERE_MAPS), ring=SURFACE_JSON, indeg=1, points=[["1", "1", "0", "0"]])
    code, report = run(job)
    assert code == 0
    (entry,) = report["result"]["fibers"]
    assert entry["degree"] == 1
    assert len(entry["preimage"]["points"]) == 1


def test_fiber_oracle_over_a_prime_field():
    ring = {"blocks": [["x", "y"]], "field": {"Fp": 7}}
    code, report = run(_job("fiber", ring=ring, points=[["1", "2", "4", "1"]], oracle=True))
    assert code == 0
    (entry,) = report["result"]["fibers"]
    assert entry["enumerated"] == {"points": [[["1", "2"]]], "reduced": True, "diagnostics": []}


def test_fiber_oracle_needs_a_prime_field():
    code, _ = run(_job("fiber", points=[["1", "2", "4", "8"]], oracle=True))
    assert code == constants.EXIT_INVALID_INPUT


def test_strata_command():
    job = _job("strata", points=[["1", "2", "4", "8"], ["1", "0", "0", "1"]], fitting=[0, 3])
    code, report = run(job)
    assert code == 0
    result = report["result"]
    assert [p["stratum"] for p in result["points"]] == [0, -1]
    assert result["fitting_ideals"][1] == {"i": 3, "generators": ["1"]}


def test_implicitize_plane_curve():
    code, report = run(_job("implicitize", maps=["x^2+y^2", "2*x*y", "x^2-y^2"]))
    assert code == 0
    assert report["result"]["implicit"]["F"] == "T1^2 - T2^2 - T3^2"
    assert report["result"]["degree_of_map"] == 1


def test_implicitize_space_curve_reports_the_degree():
    code, report = run(_job("implicitize"))
    assert code == 0
    assert report["result"]["implicit"] is None
    assert report["result"]["degree_of_map"] == 1


def test_implicitize_sphere():
    code, report = run(_job("implicitize", maps=list(SPHERE_MAPS), ring=SURFACE_JSON, indeg=1))
    assert code == 0
    assert report["result"]["implicit"]["F"] == "T1^2 - T2^2 - T3^2 - T4^2"


def test_jacfibers_command():
    job = _job("jacfibers", maps=["x*y^2", "x*y*z", "x*z^2", "y^3"], ring=PLANE_JSON,
               points=[["0", "0", "0", "1"], ["1", "1", "1", "1"]], drop=1)
    code, report = run(job)
    assert code == 0
    result = report["result"]
    assert result["F"] == "x*y^3"
    assert result["fibers"][0]["h"] == "x"
    assert result["fibers"][1]["h"] is None
    assert len(result["contracted_locus"]) == 3


def test_project_onto_a_plane():
    job = _job("project", maps=["x1", "x2", "x3", "0"], ring=SURFACE_JSON,
               points=[["1", "3", "-2", "5"]], hypothesis="b")
    code, report = run(job)
    assert code == 0
    (projection,) = report["result"]["projections"]
    assert projection["degree"] == 1
    assert projection["feet"][0]["foot"] == ["3", "-2", "0"]
    assert report["result"]["congruence"]["base_locus"] is None


def test_project_from_the_center_of_the_sphere():
    job = _job("project", maps=list(SPHERE_MAPS), ring=SURFACE_JSON,
               points=[["1", "0", "0", "0"]], hypothesis="b")
    code, report = run(job)
    assert code == constants.EXIT_DEGENERATE_QUERY
    assert report["error"].startswith("DegenerateQueryError")


def test_selftest_passes():
    code, report = run(parse_job({"command": "selftest"}))
    assert code == 0
    assert report["result"]["passed"] == len(report["result"]["checks"])


def test_selftest_failure_is_reported(monkeypatch):
    def failing(seed):
        raise SelfTestFailure([Check("twisted cubic", False, "boom")])

    monkeypatch.setattr(engine, "run_selftest", failing)
    code, report = run(parse_job({"command": "selftest"}))
    assert code == constants.EXIT_INCONSISTENT
    assert report["result"]["checks"] == [{"name": "twisted cubic", "passed": False, "detail": "boom"}]


# ---------------------------------- main


def _write_job(tmp_path, obj) -> str:
    path = tmp_path / "job.json"
    path.write_text(json.dumps(obj))
    return str(path)


def test_main_runs_a_job(tmp_path):
    path = _write_job(tmp_path, {"command": "matrep", "ring": LINE_JSON, "maps": TWISTED_CUBIC,
                                 "options": {"nu": [1]}})
    assert main([path]) == constants.EXIT_UNCERTIFIED
    assert main([path, "--force", "--output", "forced.json"]) == 0
    assert _read_report("forced.json")["result"]["shape"] == [2, 3]


def test_main_rejects_malformed_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{ not json")
    assert main([str(path)]) == constants.EXIT_INVALID_INPUT
    assert main([str(tmp_path / "missing.json")]) == constants.EXIT_INVALID_INPUT


def test_main_rejects_bad_settings(tmp_path):
    path = _write_job(tmp_path, {"command": "selftest"})
    settings = tmp_path / "bad_settings.json"
    settings.write_text(json.dumps({"colour": "blue"}))
    assert main([path, "--settings", str(settings)]) == constants.EXIT_INVALID_INPUT


@pytest.mark.parametrize("obj", [
    {"command": "matrep", "ring": LINE_JSON, "maps": TWISTED_CUBIC, "options": []},
    {"command": "matrep", "ring": "Q", "maps": TWISTED_CUBIC},
    {"command": "matrep", "ring": LINE_JSON, "maps": TWISTED_CUBIC, "options": {"settings": [1]}},
])
def test_main_rejects_malformed_job_shapes(tmp_path, obj):
    assert main([_write_job(tmp_path, obj)]) == constants.EXIT_INVALID_INPUT


def test_settings_must_be_an_object():
    with pytest.raises(ValueError):
        Settings().merged([["cache_dir", "x"]])
