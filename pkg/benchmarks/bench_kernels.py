"""Time the distance engines under the numba and pure-numpy kernel backends.

    python benchmarks/bench_kernels.py [--repeat 3] [--json out.json]

Both backends are loaded in one process and swapped in place; the numba
kernels are compiled once before timing starts.
"""
import argparse
import json
import statistics
import time

from hermqc.distance import core, kernels
from hermqc.fixtures import fixture_by_id

KERNELS = ("exhaustive_units", "combo_min", "left_patterns", "right_search")

# (label, fixture, engine, kwargs)
CASES = [
    ("exhaustive [10,7]_9", "T2.1", core.dmin_exhaustive, {}),
    ("exhaustive [8,5]_25", "T4.1", core.dmin_exhaustive, {}),
    ("bz [14,8]_16", "T3.2", core.dmin_bz, {"time_budget": None}),
    ("bz [22,12]_9", "T2.4", core.dmin_bz, {"time_budget": None}),
    ("syndrome [40,33]_9", "T2.12", core.dmin_syndrome, {"symmetry": ("quasi-cyclic", 20)}),
    ("syndrome [70,59]_4", "ex2", core.dmin_syndrome, {"symmetry": ("quasi-cyclic", 35)}),
]


def use(backend: str) -> None:
    mod = kernels.BACKENDS[backend]
    for name in KERNELS:
        setattr(kernels, name, getattr(mod, name))


def time_case(engine, code, kwargs, repeat):
    times, value = [], None
    for _ in range(repeat):
        t0 = time.perf_counter()
        res = engine(code, **kwargs)
        times.append(time.perf_counter() - t0)
        value = str(res)
    return statistics.median(times), value


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", help="also write the results here")
    args = ap.parse_args()

    backends = sorted(kernels.BACKENDS)
    if "numba" in backends:
        use("numba")
        for _, fid, engine, kwargs in CASES:  # compile every kernel signature
            engine(fixture_by_id(fid).code(), **kwargs)

    rows = []
    print(f"{'case':<24}" + "".join(f"{b:>12}" for b in backends) + f"{'speedup':>10}  d")
    for label, fid, engine, kwargs in CASES:
        code = fixture_by_id(fid).code()
        row = {"case": label}
        values = set()
        for b in backends:
            use(b)
            secs, value = time_case(engine, code, kwargs, args.repeat)
            row[b] = secs
            values.add(value)
        if len(values) != 1:
            raise SystemExit(f"{label}: backends disagree: {values}")
        row["d"] = values.pop()
        speed = row["numpy"] / row["numba"] if "numba" in row and row["numba"] > 0 else float("nan")
        row["speedup"] = speed
        rows.append(row)
        print(f"{label:<24}" + "".join(f"{row[b]:>11.3f}s" for b in backends) + f"{speed:>9.1f}x  {row['d']}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rows, fh, indent=2)


if __name__ == "__main__":
    main()
