"""How training mechanisms move smoothness and similarity.

Trains one surrogate per mechanism and reports accuracy, input-Hessian
smoothness, gradient similarity to a fixed target and transfer ASR. Runs
in a few minutes on one core.

    python3 demos/03_regularizers.py
"""
from translab import attacks, data, metrics, model, training

train_ds, test_ds = data.glyphset_generate(0, 1500, 300)
base = training.TrainConfig(epochs=6, warmup_epochs=1)
target = training.train(model.ModelSpec("mlp_l"), training.with_updates(base, seed=100), train_ds).params

settings = {
    "st": {},
    "at": {"eps_adv": 0.1},
    "ir": {"lambda_ir": 0.1},
    "jr": {"lambda_jr": 0.01},
    "sam": {"rho": 0.1},
    "sam_jr": {"rho": 0.1, "lambda_jr": 0.01},
    "ls": {"tau": 2},
}

x, y = test_ds.images[:200], test_ds.labels[:200]
print(f"{'mech':7s} {'acc':>6s} {'smooth':>8s} {'sim':>6s} {'asr':>6s}")
for mech, kw in settings.items():
    cfg = training.with_updates(base, mechanism=mech, **kw)
    net = training.train(model.ModelSpec("mlp_s"), cfg, train_ds).params
    sm = metrics.model_smoothness(net, test_ds, n_samples=60)
    sim = metrics.similarity_estimate(net, target, test_ds, n_samples=200)
    adv = attacks.attack(net, x, y, attacks.AttackConfig(eps=8 / 255, steps=20))
    rates = metrics.asr(net, target, adv)
    print(f"{mech:7s} {training.accuracy(net, test_ds):6.3f} {sm.mean:8.4f} {sim.mean:6.3f} {rates.asr_untargeted:6.3f}")
