"""Walk through the spectral-envelope prior on one synthetic clip.

Run with ``python demos/01_adaptive_prior.py``.  Everything here takes a few
seconds and prints plain numbers, no plotting libraries needed.
"""

import numpy as np

from wavefit import dsp
from wavefit.corpus import make_synthetic_corpus
from wavefit.prior import build_prior, sample_prior
from wavefit.rng import make_rng

fb = dsp.default_filterbank(24000)
corpus = make_synthetic_corpus(1, seed=0, fb=fb)
x, c = np.asarray(corpus.clips[0]), corpus.log_mels[0]
print(f"clip: {x.size} samples, log-mel {c.shape}")

# The prior is a time-varying filter built from the log-mel alone.
prior = build_prior(c, fb)
mags = np.abs(prior.filter.coeffs)
print(f"filter: {mags.shape}, dynamic range {20 * np.log10(mags.max() / mags.min()):.1f} dB")

# Shaped noise follows the envelope, so its power sits near the signal power.
eps = sample_prior(prior, x.size, make_rng(0, "demo"))
print(f"signal power {np.mean(x ** 2):.3e}, prior-noise power {np.mean(eps ** 2):.3e}")

# Filtering then inverting is close to the identity, not exact: the inverse is
# applied per STFT bin and leaks where the envelope changes inside a frame.
back = dsp.apply_tf_filter_inverse(dsp.apply_tf_filter(x, prior.filter), prior.filter)
print(f"L^-1 L relative error: {dsp.relative_l2(back, x):.3f}")

# Gain adjustment.  "sqrt" matches the mel-implied power.  The "paper" mode
# scales amplitudes by the power ratio P_c / P_z, so it overshoots by that ratio.
for mode in ("paper", "sqrt"):
    y = dsp.gain_adjust(eps, c, fb, mode=mode)
    print(f"gain[{mode}]: power {np.mean(y ** 2):.3e}")
