"""
Driving the command-line tool
=============================

The same workflow through ``python -m nbandwave``: design a bank, check
it, sample its functions and push a signal through the transform.
"""

import subprocess
import sys
import tempfile
from pathlib import Path

import numpy as np


def nbandwave(*args):
    proc = subprocess.run([sys.executable, "-m", "nbandwave", *args], capture_output=True, text=True)
    print(f"$ nbandwave {' '.join(args)}   (exit {proc.returncode})")
    print((proc.stdout + proc.stderr).strip()[:800], "\n")
    return proc.returncode


with tempfile.TemporaryDirectory() as tmp:
    tmp = Path(tmp)
    bank = str(tmp / "bank.json")

    nbandwave("design", "--scale", "3", "--t-pi", "1/6", "--out", bank)
    nbandwave("verify", bank)
    nbandwave("cascade", bank, "--depth", "4", "--out", str(tmp / "phi.csv"))

    np.savetxt(tmp / "x.csv", np.random.default_rng(1).normal(size=81), header="value", comments="")
    nbandwave("dwt", bank, str(tmp / "x.csv"), "--levels", "2", "--out", str(tmp / "c.csv"))
    nbandwave("idwt", bank, str(tmp / "c.csv"), "--out", str(tmp / "y.csv"))
    x = np.loadtxt(tmp / "x.csv", skiprows=1)
    y = np.loadtxt(tmp / "y.csv", skiprows=1)
    print("round trip error:", np.max(np.abs(x - y)), "\n")

    # an inadmissible two-band pair exits with status 2
    nbandwave("design", "--scale", "2", "--t", "0.1", "--u", "0.2")
    # the defective three-band case exits with status 3
    nbandwave("design", "--preset", "n3-t-pi3", "--out", bank)
    nbandwave("cascade", bank, "--out", str(tmp / "bad.csv"))
