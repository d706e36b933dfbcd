#!/usr/bin/env python3
"""Regenerate fixtures/ from the built-in catalog.

usage: make_fixtures.py path/to/csiso
"""
import json
import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
GROUPS = ROOT / "fixtures" / "groups"
SERIES = ROOT / "fixtures" / "series"


def run(tool, *args):
    out = subprocess.run([tool, *args], check=True, capture_output=True, text=True)
    return json.loads(out.stdout)


def write(path, obj):
    path.write_text(json.dumps(obj, separators=(",", ":")) + "\n")


def dihedral(n):
    # rotations r^i -> i, reflections s r^i -> m + i
    m = n // 2
    def mul(a, b):
        ra, fa = a % m, a // m
        rb, fb = b % m, b // m
        r = (rb + (ra if fb == 0 else -ra)) % m
        return (fa ^ fb) * m + r
    return {"name": f"dih{n}", "order": n,
            "table": [[mul(a, b) for b in range(n)] for a in range(n)]}


def relabel(group, sigma):
    n = group["order"]
    inv = [0] * n
    for i, s in enumerate(sigma):
        inv[s] = i
    t = group["table"]
    return {"name": group["name"] + "_relabel", "order": n,
            "table": [[sigma[t[inv[a]][inv[b]]] for b in range(n)]
                      for a in range(n)]}


def stem(name):
    return name.replace(":", "_")


def add_series(tool, name):
    series = run(tool, "series", str(GROUPS / f"{stem(name)}.json"), "--all")
    write(SERIES / f"{stem(name)}.json",
          {"group": f"../groups/{stem(name)}.json", "series": series[0]})


def main():
    tool = sys.argv[1]
    GROUPS.mkdir(parents=True, exist_ok=True)
    SERIES.mkdir(parents=True, exist_ok=True)
    names = run(tool, "catalog")
    for name in names:
        write(GROUPS / f"{stem(name)}.json", run(tool, "catalog", name))
    for n in (16, 32, 64):
        write(GROUPS / f"dih{n}.json", dihedral(n))
    s3 = json.loads((GROUPS / "S3.json").read_text())
    write(GROUPS / "S3_relabel.json", relabel(s3, [0, 3, 5, 1, 2, 4]))
    for name in names + ["dih16", "dih32", "dih64", "S3_relabel"]:
        add_series(tool, name)
    bad = {"name": "bad", "order": 3, "table": [[0, 1, 2], [1, 1, 0], [2, 0, 1]]}
    write(GROUPS / "bad_latin.json", bad)
    nonassoc = {"name": "nonassoc", "order": 5, "table": [
        [0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]}
    write(GROUPS / "nonassoc.json", nonassoc)


if __name__ == "__main__":
    main()
