#!/usr/bin/env python3
"""Exact k-rainbow indexes on small graphs, and the assembled bounds report
that places every estimate side by side."""

import json

from rainbowindex import (
    bounds_report,
    complete_graph,
    cycle_graph,
    exact_rx_k,
    gnp_connected_graph,
    path_graph,
)

print("== exact values on small graphs ==")
for label, g, k in [
    ("P5", path_graph(5), 3),
    ("C5", cycle_graph(5), 3),
    ("C6", cycle_graph(6), 2),
    ("K5", complete_graph(5), 3),
    ("K6", complete_graph(6), 3),
]:
    result = exact_rx_k(g, k)
    print(f"rx_{k}({label}) = {result.value}  (search nodes: {result.nodes})")

print()
print("== budgeted search stays honest ==")
g = gnp_connected_graph(9, 0.4, seed=8)
tight = exact_rx_k(g, 3, node_budget=20)
full = exact_rx_k(g, 3)
print(f"with 20 nodes: status={tight.status}, bounds [{tight.lower}, {tight.upper}]")
print(f"unbounded:     rx_3 = {full.value}")

print()
print("== bounds report on a mid-size graph ==")
g = gnp_connected_graph(40, 0.4, seed=6)
report = bounds_report(g, 3)
print(json.dumps(report.to_json_dict(), indent=2, sort_keys=True))
