"""Phantom corpus, dataset split and one mixed training batch.

The phantoms stand in for cardiac short-axis stacks: an elliptical core
inside a ring, drifting and shrinking smoothly along the slice axis. The
numbers below show the two properties the method leans on, neighbouring
slices look alike and different subjects share a layout.
"""

import numpy as np

from bootseg.synthvol import PhantomSpec, generate, mean_iou_at_distance, split
from bootseg.trainer import RunConfig, sample_batch

spec = PhantomSpec()
volumes = generate(spec)
v = volumes[0]
print(f"{len(volumes)} subjects, {v.num_slices} slices of {v.shape}, classes {v.num_classes}")
print("intensity range", float(v.slices.min()), float(v.slices.max()))

# class areas along the stack of one subject
for k in (0, v.num_slices // 2, v.num_slices - 1):
    areas = np.bincount(v.labels[k].ravel(), minlength=v.num_classes)
    print(f"slice {k:2d}: background {areas[0]:4d}  ring {areas[1]:4d}  core {areas[2]:4d}")

# overlap of foreground masks falls off with slice distance
for d in (1, 2, 4, 6, 8):
    print(f"mean foreground IoU at distance {d}: {mean_iou_at_distance(volumes, d):.3f}")

# the desk split: 2 labeled, 12 unlabeled, 1 validation, 1 test
config = RunConfig()
sp = split([vol.subject_id for vol in volumes], config.split_sizes, config.seed)
print("split", sp)

# one batch: 4 labeled slices, 6 unlabeled slices from 2 volumes, prediction pairs with |delta| <= d_max
by_id = {vol.subject_id: vol for vol in volumes}
batch = sample_batch(sp, by_id, np.random.default_rng(0), config)
print("labeled slices", batch.labeled_tags)
print("unlabeled slices", batch.unlabeled_tags)
for src, tgt, delta in batch.pred_pairs:
    kind = "within" if batch.pair_is_within((src, tgt, delta)) else "across"
    print(f"  predict {batch.unlabeled_tags[tgt]} from {batch.unlabeled_tags[src]}  delta {delta:+d}  ({kind})")
