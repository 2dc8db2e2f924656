"""The three predictor variants and what the distance embedding adds.

MLP and plain non-local predictors map a representation to the same output
whatever the slice distance; the distance-specific predictor mixes in a
learned embedding of delta, so asking for a different distance gives a
different prediction.
"""

import numpy as np

from bootseg import tensorcore as tc
from bootseg.dsag import Predictor
from bootseg.objectives import pred_loss
from bootseg.tensorcore import Tensor

rng = np.random.default_rng(0)
r = Tensor(rng.normal(size=(1, 4, 4, 16)))
deltas = [-3, -1, 1, 3]

# parameter counts include the distance table, which every variant carries but only dsag reads
for variant in ("mlp", "nl", "dsag"):
    pred = Predictor(variant, 16, 4, np.random.default_rng(1))
    outs = [pred(r, [d]).data for d in deltas]
    spread = max(float(np.abs(a - b).max()) for a in outs for b in outs)
    n_params = sum(p.size for _, p in pred.named_parameters())
    print(f"{variant:5s} params {n_params:6d}   max change across deltas {spread:.3e}")

# stop-gradient: the target side of the prediction loss receives no gradient
pred = Predictor("dsag", 16, 4, np.random.default_rng(1))
src = Tensor(rng.normal(size=(2, 4, 4, 16)), requires_grad=True)
tgt = Tensor(rng.normal(size=(2, 4, 4, 16)), requires_grad=True)
for stop in (True, False):
    g_src, g_tgt = tc.grad(pred_loss(pred(src, [2, -2]), tgt, stop_gradient=stop), [src, tgt])
    print(f"stop_gradient={stop}: |grad source| {np.abs(g_src).sum():.3e}  |grad target| {np.abs(g_tgt).sum():.3e}")
