"""A few zoo runs, their loss histograms, and the token view of one checkpoint.

    python demos/01_zoo_and_tokens.py [out_dir]
"""
# %%
import sys
import tempfile
from pathlib import Path

import numpy as np

from weightforget.codec import NormalizerStats, build_layout, detokenize, tokenize
from weightforget.zoo.collect import ZooConfig
from weightforget.zoo.data import load_dataset
from weightforget.zoo.manifest import collect_zoo, zoo_stats
from weightforget.zoo.mlp import HiddenPermutation, MainNetSpec, forward, permutation_index

out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(tempfile.mkdtemp())
train, test = load_dataset("mnist4")
spec = MainNetSpec(784, (2,), 4)
print(f"MNIST-4: {len(train)} train / {len(test)} test images, {spec.param_count} parameters per network")

# %% Six runs: main runs save a checkpoint only while the pivot classes stay
# above the accuracy gate and the per-class loss bin still has room;
# forgetting runs drop one class partway through.
cfg = ZooConfig(max_per_bin=10, max_checkpoints_per_run=150, epochs=10)
zoo = collect_zoo(cfg, spec, train, test, n_runs=6, seed_base=0, out_dir=out, test_run_fraction=0.2)
for r in zoo.runs:
    print(f"{r.run_id}  {r.kind:<11s} split={r.split:<5s} checkpoints={r.n_checkpoints}")

# %% How the losses of the non-pivot classes spread over the bins
st = zoo_stats(zoo)
edges = st["hist_edges"]
for c in (2, 3):
    counts = st["histograms"][c]
    print(f"class {c}: " + " ".join(f"{n:3d}" for n in counts), f" (bins of {edges[1] - edges[0]:.1f} up to {edges[-1]})")

# %% Tokens: each tensor is z-scored and cut into fixed-length, zero-padded tokens
arr = zoo.arrays()
stats = NormalizerStats.compute(arr["params"], spec)
layout = build_layout(spec, 256)
tok = tokenize(arr["params"][:1], layout, stats, spec)
print("token grid", tok.shape, "round-trip error", np.abs(detokenize(tok, layout, stats, spec) - arr["params"][:1]).max())

# %% Swapping hidden units gives a different vector for the same function
p = arr["params"][0]
q = p[permutation_index(spec, HiddenPermutation([np.array([1, 0])]))]
print("vectors differ:", not np.array_equal(p, q),
      "| max logit change:", np.abs(forward(p, spec, test.x[:100]) - forward(q, spec, test.x[:100])).max())
