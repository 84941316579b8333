#!/usr/bin/env python3
"""Rebuild manifest.json by running every corpus command and freezing its output.

Each entry's expected value is checked against the known sharp value before
being written, so a regression in the package fails here rather than being
silently baked into the corpus.
"""
import json
from pathlib import Path

from bergeturan.cli import run_command

HERE = Path(__file__).resolve().parent

H5 = "5 3 5\n0 1 2\n0 1 3\n0 1 4\n0 2 3\n1 2 3\n"

COMMANDS = [
    # (argv, check: record predicate on the first record)
    (["bound", "--theorem", "gkl-path", "--k", "6", "--r", "3", "--n", "60"],
     lambda r: r["value"] == "200"),
    (["bound", "--theorem", "clique-3uniform", "--k", "4", "--n", "5"],
     lambda r: r["value"] == "5"),
    (["bound", "--theorem", "clique-3uniform", "--k", "5", "--n", "5"],
     lambda r: r["value"] == "9"),
    (["bound", "--theorem", "clique-max", "--k", "4", "--r", "3", "--n", "6"],
     lambda r: r["value"] == "12"),
    (["search", "--n", "4", "--r", "3", "--pattern", "K4", "--jobs", "1"],
     lambda r: r["optimum"] == 4 and r["exact"]),
    (["search", "--n", "5", "--r", "3", "--pattern", "K4", "--jobs", "1"],
     lambda r: r["optimum"] == 5 and r["exact"]),
    (["search", "--n", "5", "--r", "3", "--pattern", "K5", "--jobs", "1"],
     lambda r: r["optimum"] == 9 and r["exact"]),
    (["search", "--n", "6", "--r", "3", "--pattern", "K4", "--jobs", "1"],
     lambda r: r["optimum"] == 8 and r["exact"]),
    (["search", "--n", "6", "--r", "3", "--pattern", "S3", "--jobs", "1"],
     lambda r: r["optimum"] == 4 and r["exact"]),
    (["check-berge", "--hypergraph", "h5.txt", "--pattern", "K3"],
     lambda r: r["contains"]),
    (["decompose", "--hypergraph", "h5.txt"],
     lambda r: r["bound"] >= r["hyperedges"] == 5),
    (["construct", "--family", "turan-hypergraph", "--n", "6", "--parts", "3",
      "--r", "3"],
     lambda r: r["text"].startswith("6 3 8")),
    (["g-r-search", "--n", "5", "--k", "4", "--r", "3"],
     lambda r: r["optimum"] == 8),
    (["threshold", "--k", "4", "--r", "3", "--n-max", "6"],
     lambda r: r["command"] == "threshold-row"),
]


def main() -> None:
    (HERE / "h5.txt").write_text(H5)
    entries = []
    for argv, check in COMMANDS:
        code, records = run_command(argv, cwd=str(HERE))
        assert code == 0, argv
        assert check(records[0]), (argv, records[0])
        entries.append({
            "command": argv[0],
            "args": argv[1:],
            "expected": records,
            "exitCode": code,
        })
    (HERE / "manifest.json").write_text(json.dumps(entries, indent=1, sort_keys=True) + "\n")
    print(f"wrote {len(entries)} entries")


if __name__ == "__main__":
    main()
