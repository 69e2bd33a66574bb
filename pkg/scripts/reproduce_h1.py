"""Compute H^1(Gamma_{g,1}; H_1) for a range of genera and print a table.

    python3 scripts/reproduce_h1.py --genus 1 3 4 5 [--json out.json]
"""

import argparse
import json
import time
from dataclasses import asdict, dataclass

from twistcohom import compute_h1, humphries_representation, theorem1_cocycle, wajnryb_presentation
from twistcohom.errors import UnsupportedGenus


@dataclass
class RunConfig:
    genera: tuple = (1, 3, 4, 5)
    json_out: str | None = None


@dataclass
class Row:
    genus: int
    generators: int
    relators: int
    z1_rank: int
    b1_rank: int
    h1: str
    seconds: float
    matches_explicit_cocycle: bool | None


def run(g: int) -> Row:
    W = wajnryb_presentation(g)
    _, rep = humphries_representation(g)
    t0 = time.perf_counter()
    res = compute_h1(W.presentation, rep)
    dt = time.perf_counter() - t0
    try:
        match = res.generator_cocycles == (theorem1_cocycle(g),)
    except UnsupportedGenus:
        match = None
    return Row(g, len(W.generators), len(W.relators), res.z1_rank, res.b1_rank, str(res.h1), dt, match)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--genus", type=int, nargs="+", default=list(RunConfig.genera))
    ap.add_argument("--json", dest="json_out")
    args = ap.parse_args()
    cfg = RunConfig(tuple(args.genus), args.json_out)

    rows = []
    print(f"{'g':>3} {'gens':>5} {'rels':>5} {'Z1':>4} {'B1':>4} {'H1':>6} {'time':>8}  explicit")
    for g in cfg.genera:
        try:
            r = run(g)
        except UnsupportedGenus as e:
            print(f"{g:>3}  skipped: {e}")
            continue
        rows.append(r)
        print(f"{r.genus:>3} {r.generators:>5} {r.relators:>5} {r.z1_rank:>4} {r.b1_rank:>4} "
              f"{r.h1:>6} {r.seconds:>7.2f}s  {'-' if r.matches_explicit_cocycle is None else r.matches_explicit_cocycle}")
    if cfg.json_out:
        with open(cfg.json_out, "w") as f:
            json.dump({"config": asdict(cfg), "rows": [asdict(r) for r in rows]}, f, indent=2)


if __name__ == "__main__":
    main()
