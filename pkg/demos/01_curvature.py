"""Curvature of a loss surface with respect to its input.

Builds a toy loss with the tape, takes a Hessian-vector product through
double backprop, and recovers the top eigenvalue with power iteration.
Then does the same for a small trained classifier.

    python3 demos/01_curvature.py
"""
import numpy as np

from translab import autodiff as ad
from translab import data, metrics, model, training

# A quadratic 0.5 x^T A x has Hessian A, so power iteration should land on
# the largest-magnitude eigenvalue of A.
rng = np.random.default_rng(0)
q = rng.normal(size=(6, 6))
A = q @ q.T - 2.0 * np.eye(6)


def quad(x):
    return 0.5 * ad.sum(x * ad.matmul(x, A))


est = metrics.dominant_eig(quad, rng.normal(size=(1, 6)), max_iters=5000, tol=1e-12)
w = np.linalg.eigvalsh(A)
print("power iteration:", est)
print("numpy eigvalsh :", w[np.argmax(np.abs(w))])

# Same measurement on a classifier: the input Hessian of the cross-entropy,
# averaged over held-out points, is the model smoothness.
train_ds, test_ds = data.glyphset_generate(0, 2000, 300)
cfg = training.TrainConfig(epochs=12, warmup_epochs=1, seed=0)
net = training.train(model.ModelSpec("mlp_s"), cfg, train_ds, test_ds).params
print("test accuracy:", training.accuracy(net, test_ds))

sm = metrics.model_smoothness(net, test_ds, n_samples=100)
print(f"smoothness mean={sm.mean:.4f}  max={sm.max:.4f}")
