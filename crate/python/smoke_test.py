#!/usr/bin/env python3
"""Smoke test for the ilth_py extension module.

Builds nothing itself: expects `cargo build -p ilth-py` (or --release) to
have produced target/<profile>/libilth_py.so, which is staged under a temp
directory as ilth_py.so and imported from there.
"""

import shutil
import sys
import tempfile
from fractions import Fraction
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent


def stage_module() -> Path:
    candidates = [
        REPO / "target" / profile / name
        for profile in ("release", "debug")
        for name in ("libilth_py.so", "ilth_py.so", "libilth_py.dylib")
    ]
    built = next((c for c in candidates if c.exists()), None)
    if built is None:
        sys.exit("ilth_py library not found; run `cargo build -p ilth-py` first")
    stage = Path(tempfile.mkdtemp(prefix="ilth_py_"))
    shutil.copy2(built, stage / "ilth_py.so")
    return stage


sys.path.insert(0, str(stage_module()))

import ilth_py as ilth  # noqa: E402

failures = []


def check(name: str, ok: bool, detail: str = "") -> None:
    status = "ok" if ok else "FAIL"
    print(f"  [{status}] {name}{': ' + detail if detail and not ok else ''}")
    if not ok:
        failures.append(name)


print(f"ilth_py {ilth.__version__}")

# generation: counts and the first-step edge set
h0 = ilth.Hypergraph.single_edge(3)
h1, lineage = h0.step()
check("first step doubles vertices", h1.n == 6 and h1.m == 4)
check(
    "first-step edges",
    sorted(tuple(e) for e in h1.edges())
    == [(0, 1, 2), (0, 1, 5), (0, 2, 4), (1, 2, 3)],
)
check("lineage parents", lineage.vertex_parent == [0, 1, 2, 0, 1, 2])

ht, lineages = h0.iterate(4)
check("growth laws", ht.n == 2**4 * 3 and ht.m == 4**4)
check("projection", ilth.project_to_initial(lineages, ht.n - 1) in (0, 1, 2))

h2m, _ = h0.step_multi()
check("multi-clone counts", h2m.n == 9 and h2m.m == 10)

# round trip through the interchange format
check("hgf round trip", ilth.Hypergraph.from_hgf(h1.to_hgf()) == h1)

# metrics
summary = ilth.distance_summary(h1)
check(
    "distance summary",
    summary["wiener_unordered"] == 21
    and summary["diameter"] == 2
    and summary["adjacent_pair_count"] == 9,
)
check("closed form", ilth.wiener_closed_form(3, 3, 3, 3) == 471)
check("bfs", ilth.bfs_distances(h1, 0) == [0, 1, 1, 2, 1, 1])

eigenvalues = ilth.spectrum(ilth.Graph.complete(3))
check("triangle spectrum", abs(eigenvalues[0] - 2.0) < 1e-8)

# census against the published second generation
h2 = h1.step()[0]
counted = ilth.census(h2)
check(
    "census number counts",
    counted["motif_numbers"] == {2: 45, 6: 126, 11: 75, 26: 45},
    str(counted["motif_numbers"]),
)
cv = ilth.cardinality_vector([0, 1, 2], [1, 2, 3], [0, 2, 4])
check("cardinality vector", cv == [0, 1, 1, 1, 0, 1, 1])
check("classify", ilth.classify(cv) == ("0111011", 11))
check("descendant multiplier", ilth.descendant_multiplier([1, 0, 1, 1, 1, 0, 1]) == 9)
check("alpha", ilth.alpha("1110001", 3) == 7 and ilth.alpha("1001111", 3) is None)
check("motif class", ilth.motif_expectation_class("1110001", 3) == "grows")

# clustering
report = ilth.clustering_report(h1)
check(
    "tuple counts",
    report["p_prime"] == 30 and report["paths2"] == 60 and report["a_count"] == 54,
)
check("hc2", Fraction(report["hc2"]["fraction"]) == Fraction(1, 2))

# random model
a = ilth.sample(12, 3, 16, 220, seed=7)
b = ilth.sample(12, 3, 16, 220, seed=7)
check("sampler determinism", a == b)
num, den = ilth.matched_p(h2)
check("matched p", Fraction(num, den) == Fraction(16, 220))
check(
    "expected hc2",
    abs(ilth.expected_hc2(12, 3, 16 / 220) - (1 - (1 - 16 / 220) ** 10)) < 1e-12,
)

# homomorphism and embedding
c5 = ilth.Graph.cycle(5)
section = h0.two_section()
image = ilth.find_homomorphism(c5, section)
check("homomorphism found", image is not None)
t, final = ilth.embed(c5, h0, image)
host = ilth.host_after(h0, t)
check("embedding verifies", ilth.verify_embedding(c5, host, final) and t <= 7)
check("no k4 map", ilth.find_homomorphism(ilth.Graph.complete(4), section) is None)
check("clique bound", host.max_clique_size() <= 3)

if failures:
    sys.exit(f"{len(failures)} smoke checks failed: {failures}")
print(f"all smoke checks passed")
