"""Train a tiny WaveFit model and watch the refinement steps contract.

``python demos/02_train_and_probe.py [steps]`` trains into ``demo_run/`` and then
prints the contraction probe: spectral convergence and log-magnitude distance
to the reference after every refinement step.  A few hundred steps take a
couple of minutes on one core; the numbers only start to order nicely after a
few thousand.
"""

import logging
import sys

from wavefit.evaluation import eval_corpus, load_run, mean_probe, probe_table
from wavefit.train import TrainConfig, Trainer

logging.basicConfig(level=logging.INFO, format="%(message)s")
steps = int(sys.argv[1]) if len(sys.argv) > 1 else 300

cfg = TrainConfig(mode="wavefit", channels=16, cond_channels=16, n_blocks=8, dilation_cycle=8,
                  batch_size=2, clip_frames=12, n_clips=16, lr=1e-3, steps=steps,
                  adversarial_start=steps * 3 // 4, checkpoint_every=steps)
Trainer(cfg).run("demo_run", progress_every=max(steps // 6, 1))

cfg, net = load_run("demo_run")
for t, sc, mag in mean_probe(probe_table(cfg, net, eval_corpus(8))):
    print(f"y{t}: spectral convergence {sc:.3f}  log-magnitude {mag:.3f}")
