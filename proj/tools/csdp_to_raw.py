#!/usr/bin/env python3
"""Convert a CSDP solution file into the raw-solution format of `flagcert round`.

CSDP writes the dual vector on the first line, then sparse matrix entries
`<matno> <block> <i> <j> <value>` with matno 1 for the dual slack Z and
matno 2 for the primal X. For SDPs produced by `flagcert export-sdpa`, X
holds the certificate variables: blocks 1..3 are the lambda/beta/rho flag
blocks, block 4 the slack scalars (one per family-free 4-vertex graph, in
enumeration order) and block 5 the c_H slacks, which `flagcert round`
recomputes exactly and therefore ignores here.

Usage:
    csdp_to_raw.py --problem C5 --sol solution.sol [--flagcert ./flagcert]
"""

import argparse
import subprocess
import sys


def flagcert_lines(binary, *args):
    out = subprocess.run([binary, *args], check=True, capture_output=True,
                         text=True)
    return [line for line in out.stdout.splitlines() if line.strip()]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--problem", required=True, choices=["C5", "C7"])
    parser.add_argument("--sol", required=True, help="CSDP solution file")
    parser.add_argument("--flagcert", default="flagcert",
                        help="path to the flagcert binary")
    parser.add_argument("--level", type=int, default=6)
    args = parser.parse_args()

    family = "FC5" if args.problem == "C5" else "FC7"
    dims = {}
    for name in ("lambda", "beta", "rho"):
        count = flagcert_lines(args.flagcert, "flags", "--sigma", name,
                               "--size", str((args.level + 2) // 2),
                               "--family", family, "--count-only")
        dims[name] = int(count[0])
    multipliers = flagcert_lines(args.flagcert, "enumerate", "-n", "4",
                                 "--family", family)

    block_names = ["lambda", "beta", "rho"]
    blocks = {b + 1: {} for b in range(3)}
    slack = {}
    with open(args.sol) as sol:
        first = True
        for line in sol:
            fields = line.split()
            if first:
                first = False  # dual vector, one value per constraint
                continue
            if len(fields) != 5:
                continue
            matno, block, i, j, value = (int(fields[0]), int(fields[1]),
                                         int(fields[2]), int(fields[3]),
                                         fields[4])
            if matno != 2:
                continue  # only the primal X carries the certificate
            if 1 <= block <= 3:
                blocks[block][(min(i, j), max(i, j))] = value
            elif block == 4 and i == j:
                slack[i] = value

    out = sys.stdout
    out.write(f"problem {args.problem}\n")
    out.write(f"level {args.level}\n")
    for b, name in enumerate(block_names, start=1):
        dim = dims[name]
        out.write(f"block {name} {dim}\n")
        for i in range(1, dim + 1):
            row = [blocks[b].get((i, j), "0") for j in range(i, dim + 1)]
            out.write(" ".join(row) + "\n")
    for idx, encoding in enumerate(multipliers, start=1):
        value = slack.get(idx, "0")
        if float(value) != 0.0:
            out.write(f"slack {value} {encoding} 0:\n")


if __name__ == "__main__":
    main()
