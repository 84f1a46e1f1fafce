#!/usr/bin/env python3
"""Emit CSV data for all the function plots: basis families, whole-line
members, kernel truncations.  Writes one file per figure into --outdir."""

import argparse
import pathlib

from kernelbasis.cli import main as cli_main


def emit(outdir: pathlib.Path, name: str, argv: list[str]) -> None:
    target = outdir / f"{name}.csv"
    code = cli_main(argv + ["--out", str(target)])
    if code != 0:
        raise SystemExit(f"emitting {name} failed with exit code {code}")
    print(f"wrote {target}")


def run(outdir: pathlib.Path) -> None:
    outdir.mkdir(parents=True, exist_ok=True)
    # positive-support Matern basis functions, m = 0..6
    for nu in (1, 2):
        emit(outdir, f"matern_plus_nu{nu}", [
            "eval", "--family", "matern", "--nu", str(nu), "--what", "basis",
            "--class", "plus", "--m", "0..6", "--grid", "-1:6:701",
        ])
    # whole-line (null-space) members for a small and a large order
    for nu in (2, 9):
        emit(outdir, f"matern_null_nu{nu}", [
            "eval", "--family", "matern", "--nu", str(nu), "--what", "basis",
            "--class", "null", "--m", f"0..{nu}", "--grid", "-6:6:1201",
        ])
    # Matern truncations against a positive second argument
    for nu, n in ((0, 8), (1, 8), (1, 64)):
        emit(outdir, f"matern_truncated_nu{nu}_n{n}", [
            "eval", "--family", "matern", "--nu", str(nu), "--what", "truncated",
            "--n", str(n), "--u", "1.0", "--grid", "-5:5:1001",
        ])
    # real Cauchy basis functions and truncations
    for klass in ("alpha", "beta"):
        emit(outdir, f"cauchy_{klass}", [
            "eval", "--family", "cauchy", "--what", "basis",
            "--class", klass, "--m", "0..5", "--grid", "-6:6:1201",
        ])
    for n in (1, 3, 11):
        emit(outdir, f"cauchy_truncated_n{n}", [
            "eval", "--family", "cauchy", "--what", "truncated",
            "--n", str(n), "--u", "0", "--grid", "-4:4:801",
        ])
    # Gaussian basis functions and truncations (n = 3, 11 dip negative)
    emit(outdir, "gaussian_basis", [
        "eval", "--family", "gaussian", "--what", "basis",
        "--m", "0..5", "--grid", "-5:5:1001",
    ])
    for n in (1, 3, 11, 30):
        emit(outdir, f"gaussian_truncated_n{n}", [
            "eval", "--family", "gaussian", "--what", "truncated",
            "--n", str(n), "--u", "0", "--grid", "-5:5:1001",
        ])


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--outdir", type=pathlib.Path, default=pathlib.Path("figure_data"))
    run(parser.parse_args().outdir)
