#!/usr/bin/env python3
"""Exact solving with verifiable certificates.

Solves a few graphs, verifies each optimal burning sequence against the
two defining conditions, shows that no shorter sequence exists, and
prints the equivalent rooted tree partition.
"""

from burnkit import (
    build,
    burning_number_exact,
    extract_partition,
    find_sequence,
    verify_sequence,
)

for spec in ("cycle:5", "uni:4;4,4", "forest:3,2,1", "star:8,1,1"):
    g = build(spec)
    res = burning_number_exact(g)
    seq = res.certificate
    print(f"{spec}: b = {res.value}, bounds [{res.lower_bound}, {res.upper_bound}]")
    print(f"  optimal sequence {seq} verifies: {verify_sequence(g, seq)}")
    if res.value > 1:
        shorter = find_sequence(g, res.value - 1)
        print(f"  length {res.value - 1} search exhausts: {shorter is None}")
    for i, part in enumerate(extract_partition(g, seq), start=1):
        print(
            f"  tree {i}: root {part.root}, height {part.height} "
            f"(allowed {res.value - i}), vertices {sorted(part.vertices)}"
        )
    print()
