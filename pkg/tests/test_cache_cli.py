from __future__ import annotations

import json
import subprocess
import sys

from heckestab.cache import append_entry, lookup, read_records
from heckestab.constants import StructEntry
from heckestab.partitions import Partition

P1 = Partition((1,))


def _entry(b=8, n=2, method="conv"):
    return StructEntry(mu=P1, lam=P1, nu=P1, n=n, b=b, method=method)


def test_cache_round_trip(tmp_path):
    path = tmp_path / "store.jsonl"
    append_entry(path, _entry(), "0.1.0", 12)
    append_entry(path, _entry(method="factor"), "0.1.0", 30)
    recs = read_records(path)
    assert len(recs) == 2
    assert recs[0].entry.b == 8
    assert recs[0].wall_ms == 12
    hit = lookup(path, P1, P1, P1, 2, method="factor")
    assert hit is not None and hit.entry.method == "factor"
    assert lookup(path, P1, P1, P1, 3) is None


def test_cache_skips_malformed_lines(tmp_path):
    path = tmp_path / "store.jsonl"
    append_entry(path, _entry(), "0.1.0", 1)
    with open(path, "a") as fh:
        fh.write("{natural language got in here\n")
        fh.write(json.dumps({"mu": "zebra"}) + "\n")
    append_entry(path, _entry(b=9), "0.2.0", 1)
    recs = read_records(path)
    assert [r.entry.b for r in recs] == [8, 9]


def test_cache_prefers_newest_version(tmp_path):
    path = tmp_path / "store.jsonl"
    append_entry(path, _entry(b=7), "0.2.0", 1)
    append_entry(path, _entry(b=8), "0.10.0", 1)  # numeric, not lexicographic
    append_entry(path, _entry(b=6), "0.9.1", 1)
    best = lookup(path, P1, P1, P1, 2)
    assert best is not None and best.entry.b == 8


def _cli(*args, cwd=None):
    return subprocess.run(
        [sys.executable, "-m", "heckestab", *args],
        capture_output=True,
        text=True,
        cwd=cwd,
    )


def test_cli_coset_type_pinned():
    r = _cli("coset-type", "(1 3 5 7)(9 11 13)(15 17)", "--n", "9")
    assert r.returncode == 0
    assert r.stdout == "(4,3,2) / stable (3,2,1)\n"


def test_cli_rep():
    r = _cli("rep", "--mu", "3,2,1")
    assert r.returncode == 0
    assert r.stdout == "(1 3 5 7)(9 11 13)(15 17)\n"


def test_cli_structconst_formats():
    r = _cli("structconst", "--mu", "1", "--lam", "1", "--nu", "1", "--n", "2")
    assert r.returncode == 0 and r.stdout == "b = 8\n"
    j = _cli(
        "structconst",
        "--mu",
        "1",
        "--lam",
        "1",
        "--nu",
        "1",
        "--n",
        "2",
        "--method",
        "conv",
        "--format",
        "json",
    )
    payload = json.loads(j.stdout)
    assert payload["b"] == "8" and payload["method"] == "conv"
    c = _cli(
        "structconst",
        "--mu",
        "1",
        "--lam",
        "1",
        "--nu",
        "-",
        "--n",
        "3",
        "--format",
        "csv",
    )
    assert c.stdout.splitlines() == ["mu,lambda,nu,n,method,b", "1,1,-,3,conv,288"]


def test_cli_exit_codes():
    bad_parse = _cli("structconst", "--mu", "2,3", "--lam", "1", "--nu", "1", "--n", "2")
    assert bad_parse.returncode == 1
    too_big = _cli(
        "structconst",
        "--mu",
        "1",
        "--lam",
        "1",
        "--nu",
        "1",
        "--n",
        "5",
        "--method",
        "factor",
        "--budget",
        "1000",
    )
    assert too_big.returncode == 3
    assert "budget" in too_big.stderr or "enumerates" in too_big.stderr
    below = _cli(
        "structconst",
        "--mu",
        "1",
        "--lam",
        "1",
        "--nu",
        "1",
        "--n",
        "2",
        "--method",
        "orbit",
    )
    assert below.returncode == 1
    usage = _cli("verify", "--suite", "nonsense")
    assert usage.returncode == 1


def test_cli_cache_and_fit(tmp_path):
    store = tmp_path / "b.jsonl"
    r = _cli(
        "structconst",
        "--mu",
        "1",
        "--lam",
        "1",
        "--nu",
        "1",
        "--n",
        "2",
        "--cache",
        str(store),
    )
    assert r.returncode == 0
    assert len(read_records(store)) == 1
    f = _cli(
        "fit",
        "--mu",
        "1",
        "--lam",
        "1",
        "--nu",
        "1",
        "--range",
        "2..5",
        "--cache",
        str(store),
    )
    assert f.returncode == 0
    assert "g(n) = 4" in f.stdout
    assert "halved scale: h(n) = 2" in f.stdout
    # the n = 2 point came from the store, the rest were computed and added
    ranks = sorted(r.entry.n for r in read_records(store))
    assert ranks == [2, 3, 4, 5]


def test_cli_fit_needs_two_ranks():
    r = _cli("fit", "--mu", "1", "--lam", "1", "--nu", "1", "--range", "4..4")
    assert r.returncode == 1


def test_cli_orbits_output():
    r = _cli("orbits", "--mu", "1", "--lam", "1", "--nu", "-", "--n", "2")
    assert r.returncode == 0
    lines = r.stdout.splitlines()
    assert lines[0] == "orbits: 1"
    assert lines[1].startswith("1: size=16 magnitude=4 product_weight=0")


def test_cli_verify_all_green():
    r = _cli("verify", "--suite", "all", "--n-max", "2")
    assert r.returncode == 0
    assert "0 failures" in r.stdout.splitlines()[-1]


def test_cli_shard_determinism_small():
    args = [
        "structconst",
        "--mu",
        "1",
        "--lam",
        "1",
        "--nu",
        "1",
        "--n",
        "3",
        "--method",
        "factor",
    ]
    one = _cli(*args, "--shards", "1")
    eight = _cli(*args, "--shards", "8")
    assert one.returncode == eight.returncode == 0
    assert one.stdout == eight.stdout == "b = 48\n"
