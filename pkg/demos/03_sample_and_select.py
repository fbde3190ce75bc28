"""Sample forgetting candidates from a trained hypernetwork and read its alignment.

Needs a finished pipeline run, e.g.

    python -m weightforget pipeline --config mnist4-desk
    python demos/03_sample_and_select.py runs/mnist4-desk
"""
# %%
import json
import sys
from pathlib import Path

import numpy as np

from weightforget.diffusion.archive import load_archive
from weightforget.evalkit.metrics import unlearning_score
from weightforget.paramfile import load_params
from weightforget.pipeline import latest_stage_dirs
from weightforget.sampler import ForgetRequest, LossProfile, make_prompt, sample_candidates, select_best
from weightforget.zoo.data import load_dataset

root = Path(sys.argv[1] if len(sys.argv) > 1 else "runs/mnist4-desk")
dirs = latest_stage_dirs(root)
if "evaluate" not in dirs:
    sys.exit(f"no finished pipeline run under {root}")
archive = load_archive(dirs["train"] / "model.dhf")
train, test = load_dataset("mnist4")
print(f"hypernetwork: variant {archive.config.variant}, width {archive.config.model_width}, "
      f"{len(archive.history)} training steps")

# %% Prompt: retain classes near their best zoo loss, class 2 near the top of its range.
# The loss profile travels inside the archive, so the zoo itself is not needed.
profile = LossProfile.from_dict(archive.loss_profile)
request = ForgetRequest.forgetting([2], 4, pivot_classes=(0, 1))
prompt = make_prompt(profile, request, np.random.default_rng(0))
print("prompted losses:", np.round(prompt.target_losses, 3))

# %% A handful of fresh candidates, ranked by forget then retain accuracy
res = sample_candidates(archive, prompt, n=6, seed=123)
best, params, table = select_best(res.candidates, request, train, archive.spec)
for r in sorted(table, key=lambda r: r["rank"]):
    print(f"rank {r['rank']}  forget acc {r['forget_acc']:.3f}  retain acc {r['retain_acc']:.3f}")
baseline, spec = load_params(dirs["retrain"] / "baseline.bin")
print("phi of the winner vs the retrained model:", round(unlearning_score(params, baseline, spec, test.x), 4))

# %% How well generated networks hit the prompted loss, one curve per noise seed
for a in json.loads((dirs["evaluate"] / "alignment.json").read_text()):
    print(f"class {a['class']}: median per-model Pearson {a['median_pearson']:.3f}, "
          f"R2 per model {np.round(a['r2'], 2).tolist()}")
