"""
Marked diagrams, partial resolutions and d_i
============================================

Mark the curve that gets flopped, read off its length, and look at what is
left over after contracting everything else.
"""

from flopcycles import (
    ADEType,
    attachment_points,
    d_multiplicity,
    end_component_multiplicities,
    enumerate_marked,
    mark,
    partial_resolution,
)

# Where the residual part of a general section meets each diagram.
for name in ["A1", "A5", "D4", "D7", "E6", "E7", "E8"]:
    t = ADEType.parse(name)
    sec = attachment_points(mark(t, 1).config)
    print(f"{name}: attach points {sec.attach_points}, branches {sec.branch_count}")

# Length-3 markings, one per symmetry class.
for m in enumerate_marked(3, 12):
    pr = partial_resolution(m)
    print(m, "->", " + ".join(str(t) for t in pr.types))

# The E7 marking whose complement is A1 + A5.
m = mark(ADEType("E", 7), 2)
for i, comp in enumerate(partial_resolution(m).components):
    line = f"  {comp.type}: vertices {comp.config.vertices}, d = {d_multiplicity(m, i)}"
    if comp.type.family == "A":
        line += f", ends in F {end_component_multiplicities(m, i)}"
    print(line)

# For length <= 2 every d_i is at most 3.
worst = max(
    d_multiplicity(m, i)
    for length in (1, 2)
    for m in enumerate_marked(length, 12)
    for i in range(len(partial_resolution(m).components))
)
print("largest d_i over length <= 2 markings (orbit representatives):", worst)
