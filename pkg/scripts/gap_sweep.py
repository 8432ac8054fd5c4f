#!/usr/bin/env python3
"""Sweep the air-gap height for one device and write a long-format CSV of the
damping predicted by each model. Example:

    python scripts/gap_sweep.py devices/A.json --start 0.8 --stop 4.0 --steps 17
"""

import argparse
import dataclasses
import sys

import numpy as np

from perfdamp import compact_models as cm
from perfdamp.config import load_device
from perfdamp.flow_regime import GasProperties


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("device")
    ap.add_argument("--start", type=float, default=0.8, help="gap start, um")
    ap.add_argument("--stop", type=float, default=4.0, help="gap stop, um")
    ap.add_argument("--steps", type=int, default=17)
    ap.add_argument("--models", default="m1,m2,m3,m4,m5,m6")
    args = ap.parse_args(argv)

    geom, _ = load_device(args.device)
    gas = GasProperties()
    models = args.models.split(",")
    print("h_um,model,c_Ns_per_m")
    for h_um in np.linspace(args.start, args.stop, args.steps):
        g = dataclasses.replace(geom, h=h_um * 1e-6)
        for model in models:
            print(f"{h_um:.4f},{model},{cm.MODELS[model](g, gas).c:.6e}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
