"""A short training run of the full method, then evaluation and mask export.

Uses a narrow network at 32x32 so the whole script finishes in about a
minute; swap in RunConfig() for the 64x64 desk network.
"""

import tempfile
from pathlib import Path

from bootseg.cli import export_masks
from bootseg.evalkit import evaluate, predict_volumes
from bootseg.synthvol import PhantomSpec, generate
from bootseg.trainer import RunConfig, run

spec = PhantomSpec(height=32, width=32, radius_min=4.0, radius_max=9.0, jitter_center=2.0,
                   drift_y=3.0, drift_x=-2.0)
volumes = generate(spec)
config = RunConfig(iterations=60, input_size=(32, 32), enc_channels=(8, 16, 16, 32, 32),
                   dec_channels=(32, 16, 16, 8), log_every=10, val_every=20)

out = Path(tempfile.mkdtemp(prefix="bootseg_demo_"))
result = run(config, out_dir=out, volumes=volumes)

# the loss breakdown logged every 10 steps
for row in result.rows:
    print(f"step {row['step']:>3}  lr {float(row['lr']):.2e}  seg {float(row['l_seg']):.4f}  "
          f"pred {float(row['l_pred']):+.4f}  fbc {float(row['l_fbc']):.4f}  val {row['val_dsc'] or '-'}")

# score the final weights on the held-out test volume
test = [v for v in volumes if v.subject_id in result.split.test]
report = evaluate(result.trainer.net, test, seed=config.seed, fingerprint=config.fingerprint())
print("per-structure DSC", [round(x, 4) for x in report.per_structure], "mean", round(report.mean, 4))
report.write(out)

# predicted masks as PGM images for a look by eye
n = export_masks(out / "masks", predict_volumes(result.trainer.net, test), spec.num_classes)
print(f"{n} masks and all run files under {out}")
