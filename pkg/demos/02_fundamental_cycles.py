"""
Fundamental cycles three ways
=============================

Laufer's algorithm, the exhaustive oracle and the closed-form table agree.
"""

import time

from flopcycles import (
    ADEType,
    Cycle,
    brute_force_fundamental_cycle,
    build_ade,
    fundamental_cycle_closed_form,
    laufer_fundamental_cycle,
    pairing,
)
from flopcycles.dynkin import ade_types

# Laufer starts from one curve and keeps adding curves that meet the cycle positively.
trace = laufer_fundamental_cycle(build_ade(ADEType("E", 6)))
print(trace.table())

# On E8 the coefficients are the highest-root coefficients, topping out at 6 on the branch vertex.
e8 = build_ade(ADEType("E", 8))
f = laufer_fundamental_cycle(e8).result
print("E8:", f.as_dict())
print("F.F =", pairing(f, f))
print("F.C_v:", {v: pairing(f, Cycle.unit(e8, v)) for v in e8.vertices})

# The brute-force oracle tries every cycle with coefficients 1..6.
start = time.perf_counter()
for t in ade_types(8):
    c = build_ade(t)
    assert laufer_fundamental_cycle(c).result == brute_force_fundamental_cycle(c, 6), t
print(f"Laufer = brute force for all {len(ade_types(8))} types of rank <= 8"
      f" ({time.perf_counter() - start:.1f} s)")

# Past rank 8 the closed form takes over.
for t in ade_types(20):
    assert laufer_fundamental_cycle(build_ade(t)).result == fundamental_cycle_closed_form(t)
print("Laufer = closed form up to rank 20")
print("D12:", fundamental_cycle_closed_form(ADEType("D", 12)).coefficients)
