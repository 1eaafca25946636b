"""Random-code benchmark: mean candidate counts for a few field sizes."""

from sharplrc.bench import averages, bench, to_csv

records = bench(2, 10, 4, trials=5, seed=0)
print(to_csv(records))

for q in (2, 3, 4, 5):
    avg = averages(bench(q, 10, 4, trials=20, seed=0))
    print(f"q={q}  mean candidates={avg['mean_candidates']:8.1f}  mean time={avg['mean_elapsed_ms']:7.2f} ms  loc={avg['mean_loc']:.2f}")

# a longer binary code
(r,) = bench(2, 50, 10, trials=1)
print(r)
