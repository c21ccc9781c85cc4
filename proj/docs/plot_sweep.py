#!/usr/bin/env python3
"""Plot an irs-ee sweep CSV.

Usage: plot_sweep.py SWEEP.csv [OUT.png]
"""
import csv
import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt


def main() -> None:
    if len(sys.argv) < 2:
        sys.exit(__doc__)
    path = sys.argv[1]
    out = sys.argv[2] if len(sys.argv) > 2 else path.rsplit(".", 1)[0] + ".png"

    cols = {}
    with open(path, newline="") as fh:
        for row in csv.DictReader(fh):
            for key, value in row.items():
                if value:
                    cols.setdefault(key, ([], []))
                    cols[key][0].append(float(row["sweep_var"]))
                    cols[key][1].append(float(value))

    fig, ax = plt.subplots(figsize=(6, 4))
    styles = {
        "op_gamma": dict(label="Gamma approximation", lw=1.5),
        "op_clt": dict(label="CLT approximation", ls="--", lw=1.2),
        "op_mc": dict(label="Monte-Carlo", marker="o", ls="none", ms=3),
        "be_bound": dict(label="Berry-Esseen bound", ls=":", lw=1.2),
    }
    for key, style in styles.items():
        if key in cols:
            ax.plot(cols[key][0], cols[key][1], **style)

    ax.set_yscale("log")
    ax.set_xlabel("sweep variable")
    ax.set_ylabel("outage probability")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(out, dpi=150)
    print(out)


if __name__ == "__main__":
    main()
