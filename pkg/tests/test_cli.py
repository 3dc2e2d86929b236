import csv
import io
import json

import pytest

from spectra.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_spectrum_text(capsys):
    code, out, _ = run(capsys, "spectrum", "--family", "sym", "--n", "5", "--mu", "--format", "text")
    assert code == 0 and out.split() == ["4", "5", "6"]


def test_spectrum_json_schema(capsys):
    code, out, _ = run(capsys, "spectrum", "--family", "alt", "--n", "6")
    doc = json.loads(out)
    assert code == 0
    assert set(doc) == {"group", "set", "values", "count", "length_nats", "elapsed_ms"}
    assert doc["values"] == ["1", "2", "3", "4", "5"]
    assert doc["count"] == 5 and doc["set"] == "omega"


def test_mu_subcommand(capsys):
    _, out, _ = run(capsys, "mu", "--family", "alt", "--n", "5", "--no-timing")
    doc = json.loads(out)
    assert doc["values"] == ["2", "3", "5"] and doc["elapsed_ms"] is None


@pytest.mark.parametrize("argv", [
    ["spectrum", "--family", "alt", "--n", "0"],
    ["classical", "--family", "psl", "--n", "3", "--q", "6"],
    ["classical", "--family", "psx", "--n", "3", "--q", "2"],
    ["classical", "--family", "psp", "--n", "3", "--q", "3", "--mu"],
    ["bench", "--family", "sym", "--n", "151"],
    ["bench", "--family", "psl", "--n", "41", "--q", "2"],
    ["ppd", "--a", "1", "--i", "3"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == ""
    assert err.startswith("spectra: error:") and err.count("\n") == 1


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["spectrum", "--family", "foo", "--n", "3"])
    assert exc.value.code == 2


def test_classical_mu(capsys):
    _, out, _ = run(capsys, "classical", "--family", "psl", "--n", "2", "--q", "7", "--mu")
    assert json.loads(out)["values"] == ["3", "4"]


def test_classical_witnesses(capsys):
    _, out, _ = run(capsys, "classical", "--family", "psu", "--n", "9", "--q", "2", "--witnesses")
    rows = {r["a"]: r["b"] for r in json.loads(out)["witnesses"]}
    assert rows["14"] == "258"


def test_classical_params(capsys):
    _, out, _ = run(capsys, "classical", "--family", "psl", "--n", "10", "--q", "2", "--params")
    doc = json.loads(out)
    assert doc["bound_holds"] is True and doc["raw_count"] == 90


def test_landau(capsys):
    _, out, _ = run(capsys, "landau", "--n", "7")
    assert json.loads(out)["g_value"] == "12"


def test_ppd(capsys):
    _, out, _ = run(capsys, "ppd", "--a", "2", "--i", "6")
    doc = json.loads(out)
    assert doc["ppd_set"] == [] and doc["star"] == "9" and doc["exceptional"] is True


def test_gcdform(capsys):
    _, out, _ = run(capsys, "gcdform", "--a", "3", "--s", "2", "--t", "4", "--kind", "plus-minus")
    assert json.loads(out)["value"] == "10"


def test_bench_csv(capsys):
    code, out, _ = run(capsys, "bench", "--family", "sym", "--n", "1,20,40,60")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0
    assert list(rows[0]) == ["family", "n", "q", "set", "count", "length_nats", "elapsed_ms", "ratio"]
    assert rows[0]["count"] == "1" and float(rows[0]["length_nats"]) == 0 and rows[0]["ratio"] == ""
    counts = [int(r["count"]) for r in rows[1:]]
    assert counts == sorted(counts) and len(set(counts)) == 3
    assert all(r["ratio"] for r in rows[1:])


def test_bench_psl(capsys):
    _, out, _ = run(capsys, "bench", "--family", "psl", "--q", "2", "--n", "10", "--set", "mu_pprime")
    row = next(csv.DictReader(io.StringIO(out)))
    _, out2, _ = run(capsys, "classical", "--family", "psl", "--n", "10", "--q", "2", "--mu")
    assert int(row["count"]) == json.loads(out2)["count"]


def test_oracle_check(capsys):
    code, out, _ = run(capsys, "oracle-check", "--max-n", "12", "--format", "text")
    assert code == 0
    assert out.count("status=pass") == 9
