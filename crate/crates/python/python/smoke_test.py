"""Smoke test for the alphaspec extension module."""

import math

import alphaspec

k4 = alphaspec.Graph.generate("complete:4")
assert (k4.order, k4.size) == (4, 6)
assert k4.graph6() == "C~"
assert alphaspec.Graph.from_graph6("C~") == k4

vals = alphaspec.spectrum(k4, 0.5)
assert all(abs(a - b) < 1e-9 for a, b in zip(vals, [3.0, 1.0, 1.0, 1.0]))
assert abs(alphaspec.energy(k4, 0.5) - 3.0) < 1e-9

c5 = alphaspec.Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
assert c5.is_regular() and c5.degrees() == [2] * 5
closed = alphaspec.srg_spectrum(5, 2, 0, 1, alpha=0.0)
assert [m for _, m in closed] == [1, 2, 2]
assert abs(closed[1][0] - (math.sqrt(5) - 1) / 2) < 1e-12

report = alphaspec.bounds(alphaspec.Graph.generate("complete:3"), 0.0)
cor1 = next(b for b in report["bounds"] if b["name"] == "lower_bound_threshold_cor1")
assert cor1["equality"] is True

sweep = alphaspec.verify(n_max=4, theorems=["two_distinct"])
assert sweep["passed"] and sweep["total_violations"] == 0

try:
    alphaspec.Graph.from_graph6("B!")
except ValueError:
    pass
else:
    raise AssertionError("bad graph6 accepted")

print("smoke test ok")
