"""
Driving everything from the command line
========================================

The CLI writes JSON documents.  Here a construction is saved in the
plain-text coloring format, verified, and solver certificates are
checked again.
"""
import json
import tempfile
from pathlib import Path

from antiramsey.cli import run

tmp = Path(tempfile.mkdtemp())


def show(argv):
    code, doc = run(argv)
    body = doc.get("result", doc.get("error"))
    print(f"$ antiramsey {' '.join(argv)}\n  exit {code}: {json.dumps(body)[:160]}")
    return doc


show(["formulas", "--motif", "linear-path", "--k", "4", "--s", "3", "--n", "10"])
show(["construct", "--family", "star", "--t", "1", "--n", "10", "--s", "3",
      "--color", "rainbow-plus-one", "--out", str(tmp / "star.arc")])
print((tmp / "star.arc").read_text().splitlines()[:3])
show(["verify", "--coloring", str(tmp / "star.arc"), "--motif", "linear-path", "--k", "4",
      "--expect", "rainbow-free"])
show(["solve-ar", "--n", "5", "--s", "2", "--motif", "loose-path", "--k", "3",
      "--out", str(tmp / "ar.arc")])
show(["verify", "--coloring", str(tmp / "ar.arc"), "--motif", "loose-path", "--k", "3"])
show(["solve-turan", "--n", "6", "--s", "3", "--motif", "matching", "--k", "2"])
show(["simulate", "--n", "8", "--s", "3", "--motif", "linear-path", "--k", "2",
      "--c", "1", "3", "10", "--trials", "50", "--seed", "1"])
show(["formulas", "--motif", "linear-path", "--k", "5", "--s", "4", "--n", "30"])
