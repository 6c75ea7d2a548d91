"""Which surrogate factor tracks transfer best?

Reads a sweep's metrics.csv and, for every (target, eps) group, prints the
Pearson correlation of accuracy, fooling probability, negated smoothness
and gradient similarity with ASR, plus OLS R^2 on {MS, GS} and on all four.

    translab sweep --out runs/desk
    python3 demos/04_correlation.py runs/desk/metrics.csv
"""
import sys

from translab import report


def fmt(v):
    return "  n/a" if v is None else f"{v:+.2f}"


path = sys.argv[1] if len(sys.argv) > 1 else "runs/desk/metrics.csv"
rows, _, _ = report.load_sweep(path)
summary = report.correlation_summary(rows, n_perm=500)

for g in summary["groups"]:
    rs = "  ".join(f"{k}={fmt(v)}" for k, v in g["pearson"].items())
    print(f"{g['target_arch']:6s} eps={g['eps'] * 255:4.1f}/255 n={g['n_rows']:3d}  {rs}  "
          f"R2(ms,gs)={fmt(g['r2_ms_gs'])} R2(all)={fmt(g['r2_all'])}")

pooled = summary["pooled"]
print("pooled r(GS, ASR) =", fmt(pooled["pearson"]["gs"]), " p =", pooled["p_value"]["gs"])
