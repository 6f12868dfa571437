import json
import subprocess
import sys

import pytest

from tabkit.cache import ENV_VAR, EnumerationCache, cached_enumerate_inc
from tabkit.cli import parse_shape, run
from tabkit.paths import SchroderPath
from tabkit.tableaux import IncreasingTableau, Partition, enumerate_inc


@pytest.fixture(autouse=True)
def _no_ambient_cache(monkeypatch):
    monkeypatch.delenv(ENV_VAR, raising=False)


@pytest.mark.parametrize("shape,k,expected", [("2x3", 1, "5"), ("3x3", 1, "84"), ("1x1", 0, "1")])
def test_enumerate_count_only(shape, k, expected):
    assert run(["enumerate", "--shape", shape, "--k", str(k), "--count-only"]) == (0, expected + "\n")


def test_shape_parsing():
    assert parse_shape("3x2") == Partition.rectangle(3, 2)
    assert parse_shape("hook:6,2") == Partition((4, 1, 1))
    assert parse_shape("4,1,1") == Partition((4, 1, 1))


def test_enumerate_formats_round_trip():
    code, text = run(["enumerate", "--shape", "hook:6,2", "--k", "1"])
    assert code == 0
    tabs = [IncreasingTableau.from_text(line) for line in text.splitlines()]
    assert tabs == enumerate_inc(Partition((4, 1, 1)), 1)

    code, js = run(["enumerate", "--shape", "hook:6,2", "--k", "1", "--format", "json"])
    lines = js.splitlines()
    assert [IncreasingTableau.from_json(line) for line in lines] == tabs
    assert [IncreasingTableau.from_json(line).to_json() for line in lines] == lines

    code, csv_text = run(["enumerate", "--shape", "2x3", "--format", "csv"])
    rows = csv_text.splitlines()
    assert rows[0] == "index,k,tableau" and len(rows) == 6


def test_byte_stable():
    argv = ["orbits", "--shape", "3x3", "--k", "1"]
    assert run(argv) == run(argv)


def test_usage_and_infeasible_exit_codes():
    assert run(["enumerate", "--shape", "3y3"])[0] == 2
    assert run(["enumerate", "--shape", "2,3"])[0] == 2
    assert run(["enumerate"])[0] == 2
    assert run(["enumerate", "--shape", "2x3", "--k", "3"])[0] == 3
    assert run(["narayana", "--m", "1", "--n", "3"])[0] == 3
    assert run(["csp", "hook", "--N", "6", "--r", "2", "--k", "3"])[0] == 3
    assert run(["biject", "phi", "--tableau", "1,2;1,3"])[0] == 2


@pytest.mark.parametrize("m,n,row,t1,t2", [(2, 3, "1,3,1", 5, 11), (2, 1, "1", 1, 1)])
def test_narayana_rows(m, n, row, t1, t2):
    code, text = run(["narayana", "--m", str(m), "--n", str(n)])
    lines = text.splitlines()
    assert code == 0
    assert lines[0] == row
    assert lines[1].endswith(f"= {t1}") and lines[2].endswith(f"= {t2}")
    assert lines[3] == "symmetric: yes"


def test_narayana_3_3_json():
    code, text = run(["narayana", "--m", "3", "--n", "3", "--format", "json"])
    d = json.loads(text)
    assert sum(d["row"]) == 42 and d["N(1)"] == 42 and d["symmetric"]


def test_count():
    code, text = run(["count", "--shape", "2x3", "--format", "json"])
    d = json.loads(text)
    assert d["counts"] == {"0": 5, "1": 5, "2": 1} and d["total"] == 11


def test_schroder():
    assert run(["schroder", "--m", "2", "--n", "3", "--count-only"])[1] == "22\n"
    assert run(["schroder", "--m", "2", "--n", "3", "--small", "--count-only"])[1] == "11\n"
    code, text = run(["schroder", "--m", "2", "--n", "2", "--small"])
    paths = [SchroderPath.from_text(line, 2) for line in text.splitlines()]
    assert len(paths) == 3 and all(p.is_small for p in paths)


def test_biject_subcommands():
    assert run(["biject", "phi", "--tableau", "1,3,4;2,4,5;4,5,6"])[1] == "1,3,6;2,5,8;4,7,9\n"
    code, text = run(["biject", "fiber", "--tableau", "1,3,6;2,5,8;4,7,9", "--k", "3"])
    assert len(text.splitlines()) == 4
    assert run(["biject", "fiber", "--tableau", "1,2;2,3"])[0] == 2
    assert run(["biject", "path", "--tableau", "1,3,5;2,4,6"])[1] == "121212\n"
    assert run(["biject", "path", "--path", "121212", "--m", "2"])[1] == "1,3,5;2,4,6\n"
    code, text = run(["biject", "schroder", "--tableau", "1,3,4,5;2,4,5,6"])
    assert code == 0
    assert run(["biject", "schroder", "--path", text.strip(), "--m", "2"])[1] == "1,3,4,5;2,4,5,6\n"
    assert run(["biject", "schroder", "--path", "3", "--m", "2"])[0] == 2


def test_promote():
    assert run(["promote", "--tableau", "1,2,4,5;2;3;5"])[1] == "1,3,4,5;2;4;5\n"
    assert run(["promote", "--tableau", "1,2,4,5;2;3;5", "--steps", "4"])[1] == "1,2,4,5;2;3;5\n"
    code, text = run(["promote", "--shape", "hook:6,2", "--k", "1", "--format", "json"])
    assert code == 0 and len(text.splitlines()) == 12


def test_orbits_json():
    code, text = run(["orbits", "--shape", "3x3", "--k", "1"])
    records = [json.loads(line) for line in text.splitlines()]
    assert set(records[0]) == {"period", "size", "representative"}
    assert sum(r["size"] for r in records) == 84
    assert sorted(r["period"] for r in records) == [2, 2] + [8] * 10


def test_csp_commands():
    code, text = run(["csp", "hook", "--N", "6", "--r", "2", "--k", "1", "--format", "json"])
    d = json.loads(text)
    assert code == 0 and d["overall"] and d["order"] == 4
    code, text = run(["csp", "hook", "--N", "6", "--r", "2", "--k", "1"])
    assert "CSP holds" in text
    code, text = run(["csp", "rect33", "--format", "json"])
    d = json.loads(text)
    assert code == 0
    assert d["X(1)"] == 84 and d["promotion_order"] == 8 and d["fixed_by_square"] == 4
    assert d["X(w^2)"]["exact"] == "2-2i" and d["csp"]["overall"] is False
    assert run(["csp", "hook", "--N", "6"])[0] == 2


def test_verify_all_only_csp():
    code, text = run(["verify-all", "--only", "csp", "--format", "json"])
    results = json.loads(text)
    assert code == 0
    assert [r["criterion"] for r in results] == [9, 10]
    assert all(r["passed"] for r in results)


def test_verify_all_max_cells_9():
    code, text = run(["verify-all", "--max-cells", "9", "--only", "counting,schroder,narayana"])
    assert code == 0
    assert "3x4" not in text and all(line.startswith("[PASS]") for line in text.splitlines())


def test_verify_all_default_reports_every_criterion():
    code, text = run(["verify-all"])
    lines = text.splitlines()
    assert len(lines) == 10
    # the promotion-order criterion fails on the singleton hook families
    assert code == 1
    assert [line.split()[0] for line in lines].count("[FAIL]") == 1
    assert lines[7].split()[:2] == ["[FAIL]", "8"]


def test_cache_round_trip(tmp_path, monkeypatch):
    shape = Partition.rectangle(2, 3)
    cache = EnumerationCache(tmp_path)
    assert cache.get(shape, 1) is None
    tabs = cached_enumerate_inc(shape, 1, tmp_path)
    assert cache.get(shape, 1) == tabs
    assert cache.path_for(shape, 1).name == "inc_v1_3-3_k1.json"

    monkeypatch.setenv(ENV_VAR, str(tmp_path / "env"))
    assert run(["enumerate", "--shape", "2x2", "--count-only"])[1] == "2\n"
    assert list((tmp_path / "env").iterdir())


def test_cache_ignores_stale_version(tmp_path):
    shape = Partition.rectangle(2, 2)
    cache = EnumerationCache(tmp_path)
    path = cache.path_for(shape, 0)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps({"version": 0, "shape": [2, 2], "k": 0, "words": [[9, 9, 9, 9]]}))
    assert cache.get(shape, 0) is None
    assert cached_enumerate_inc(shape, 0, tmp_path) == enumerate_inc(shape, 0)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "tabkit", "enumerate", "--shape", "2x3", "--k", "2"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout == "1,2,3;2,3,4\n"
