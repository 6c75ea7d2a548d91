"""Transfer of a PGD attack from a surrogate to a target.

Trains two architectures on the glyph task, crafts L-inf PGD examples on
the smaller one and measures how often they carry over. The gradient
similarity between the two models and the lower bound on transfer are
printed alongside.

    python3 demos/02_transfer.py
"""
import numpy as np

from translab import attacks, data, metrics, model, training

train_ds, test_ds = data.glyphset_generate(0, 2000, 400)
base = training.TrainConfig(epochs=8, warmup_epochs=1)

surrogate = training.train(model.ModelSpec("mlp_s"), base, train_ds).params
target = training.train(model.ModelSpec("mlp_l"), training.with_updates(base, seed=100), train_ds).params
for name, p in (("surrogate", surrogate), ("target", target)):
    print(f"{name:9s} accuracy {training.accuracy(p, test_ds):.3f}")

x, y = test_ds.images[:200], test_ds.labels[:200]

for eps in (2 / 255, 8 / 255, 16 / 255):
    adv = attacks.attack(surrogate, x, y, attacks.AttackConfig(eps=eps, steps=20))
    rates = metrics.asr(surrogate, target, adv)
    print(f"eps={eps * 255:4.1f}/255  fools surrogate {rates.fool_prob:.2f}  transfers {rates.asr_untargeted:.2f}")

# Momentum plus input diversity, a common transfer booster. On a task this small
# it need not beat plain PGD.
mi_di = attacks.AttackConfig(eps=8 / 255, steps=20, mu_decay=1.0, di_prob=0.5)
adv = attacks.attack(surrogate, x, y, mi_di)
print("MI-DI transfer:", metrics.asr(surrogate, target, adv).asr_untargeted)

sim = metrics.similarity_estimate(surrogate, target, test_ds, n_samples=200)
sf = metrics.model_smoothness(surrogate, test_ds, n_samples=100)
sg = metrics.model_smoothness(target, test_ds, n_samples=100)
bound = metrics.bound_report(surrogate, target, adv, sf.max, sg.max, sim.min)
print(f"similarity mean={sim.mean:.3f} min={sim.min:.3f}")
print(f"c_F={bound.c_f:.3g} c_G={bound.c_g:.3g} eps={bound.eps:.3f}")
print("lower bound:", bound.bound_value if bound.valid else "vacuous (eps <= c_G)")
print("empirical  :", bound.empirical_transfer_rate)
