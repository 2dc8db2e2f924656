"""Loss-terms study on the default phantom corpus.

Four cells (segmentation only, plus calibration, plus prediction, plus both)
trained for 1000 iterations under five seeds each, scored on the split's test
volume joined with eight held-out phantoms. The finished study is cached in
results/loss_terms/study.json; rerunning this script reuses it as long as the
config, corpus and numeric source are unchanged.

    python demos/03_loss_terms_study.py            # full study (hours on one core)
    python demos/03_loss_terms_study.py --quick    # 30 iterations, 2 seeds, separate directory
"""

import argparse
import logging
from pathlib import Path

import numpy as np

from bootseg.study import directional_gaps, load_or_run, study_config

ROOT = Path(__file__).resolve().parents[1]

parser = argparse.ArgumentParser()
parser.add_argument("--quick", action="store_true")
args = parser.parse_args()
logging.basicConfig(level=logging.INFO, format="%(asctime)s %(message)s")
logging.getLogger("bootseg.trainer").setLevel(logging.WARNING)

if args.quick:
    study, cached = load_or_run(ROOT / "results" / "loss_terms_quick", study_config(30), seeds=(0, 1))
else:
    study, cached = load_or_run(ROOT / "results" / "loss_terms")
print("cached study" if cached else "fresh study", study["key"])

# per-cell mean and spread over seeds
for label, cell in study["cells"].items():
    vals = np.array(cell["dsc"])
    print(f"{label:10s} mean DSC {vals.mean():.4f} +- {vals.std():.4f}   per seed {np.round(vals, 4).tolist()}")

# gaps against the segmentation-only baseline
for label, gap in directional_gaps(study).items():
    print(f"{label:10s} {gap:+.4f} vs seg-only")

secs = study["run_seconds"]
print(f"runs: {len(secs)}, longest {max(secs.values()) / 60:.1f} min, mean {np.mean(list(secs.values())) / 60:.1f} min")
