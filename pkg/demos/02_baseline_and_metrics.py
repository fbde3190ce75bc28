"""Retrain without class 2, then compare it with a model that never forgot.

    python demos/02_baseline_and_metrics.py
"""
# %%
import numpy as np

from weightforget.evalkit import metrics as M
from weightforget.evalkit.baseline import retrain_baseline
from weightforget.evalkit.report import full_report
from weightforget.sampler import ForgetRequest
from weightforget.zoo.data import load_dataset
from weightforget.zoo.mlp import MainNetSpec

train, test = load_dataset("mnist4")
spec = MainNetSpec(784, (2,), 4)
request = ForgetRequest.forgetting([2], 4, pivot_classes=(0, 1))

# %% The reference answer: the same network trained on retain classes only
baseline = retrain_baseline(spec, train, request.forget_classes, seed=0, epochs=25)
full = retrain_baseline(spec, train, [], seed=0, epochs=25)   # nothing removed

# %% Per-example agreement with the baseline
print("phi(full, baseline)     =", round(M.unlearning_score(full, baseline, spec, test.x), 4))
print("phi(baseline, baseline) =", M.unlearning_score(baseline, baseline, spec, test.x))
print("confusion, baseline rows vs full-model columns:")
print(M.cross_confusion(baseline, full, spec, test.x))

# %% The report table: the full model still knows class 2, so its D_f accuracy stays high
rep = full_report([full], baseline, request, spec, train, test, selected_index=0,
                  candidate_ids=["full"], baseline_id="retrained")
for row in rep.table():
    vals = [v for k, v in row.items() if k != "metric"]
    print(f"{row['metric']:<34s}" + "".join(f"{v:10.4f}" if v is not None else f"{'-':>10s}" for v in vals))
