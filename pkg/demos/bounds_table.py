"""Degeneracy lower bounds against exact cutwidth on a few random graphs.

Each row keeps the strongest instance of every bound. Written through the sweep harness, so it matches what
`cutwidth verify ... && cutwidth report` prints.
"""
import csv
import io

from cutwidth.harness import SweepConfig, run_sweep, sweep_table

cfg = SweepConfig(family="gnp", n=[9], p=["1/2", "4/5"], seeds=[1, 2, 3])
result = run_sweep(cfg)
rows = list(csv.DictReader(io.StringIO(sweep_table(result))))

cols = ["delta", "cw", "general", "clique-free", "eq-main2-core", "eq-main-core"]
print(f"{'graph':<26}" + "".join(f"{c:>15}" for c in cols))
for row in rows:
    print(f"{row['graph']:<26}" + "".join(f"{row[c]:>15}" for c in cols))
print("violations:", result["summary"]["violation_count"])
