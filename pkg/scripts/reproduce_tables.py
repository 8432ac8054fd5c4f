#!/usr/bin/env python3
"""Print the measured-vs-modeled comparison tables next to the published
values, with per-cell residuals."""

from perfdamp import comparison as cmp
from perfdamp.flow_regime import GasProperties


def show(name, columns, reproduce, published, tol_pp):
    gas = GasProperties()
    repro = reproduce(gas)
    print(f"\ntable {name} (reproduced vs published, tolerance {tol_pp} pp)")
    print("device  " + "".join(f"{c:>22}" for c in columns))
    for dev, pub_row in published.items():
        cells = [f"{r:8.2f} ({r - p:+5.2f})" for r, p in zip(repro[dev], pub_row)]
        print(f"{dev:8s}" + "".join(f"{c:>22}" for c in cells))
    ok = cmp.within_tolerance(repro, published, tol_pp)
    print("  =>", "within tolerance" if ok else "TOLERANCE BREACH")


def main():
    show("3", cmp.TABLE3_MODELS, cmp.reproduce_table3, cmp.PUBLISHED_TABLE3, cmp.TABLE3_TOL_PP)
    show("4", cmp.TABLE4_MODELS, cmp.reproduce_table4, cmp.PUBLISHED_TABLE4, cmp.TABLE4_TOL_PP)
    show("5", cmp.TABLE5_COLUMNS, cmp.reproduce_table5, cmp.PUBLISHED_TABLE5, cmp.TABLE5_TOL_PP)


if __name__ == "__main__":
    main()
