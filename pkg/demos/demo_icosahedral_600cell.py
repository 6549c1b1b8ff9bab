"""
The icosidodecahedron and the 600-cell
======================================

The 30 roots of the icosahedral reflection group live in Q(sqrt(5))^3 and
are all exactly unit length.  Their 120 pairwise rotors, closed into a
group, read off as the 120 vertices of the 600-cell, again exactly unit.
The run writes both point clouds as OFF files next to this script.
"""

from pathlib import Path

from rootspin import (
    build_preset,
    coxeter_order,
    identify,
    induce_4d,
    signature,
    simple_roots_of,
    to_off,
    coxeter_matrix,
)

h3 = build_preset("H3")
print("icosahedral root system:", len(h3), "roots over Q(sqrt(5))")
simple = simple_roots_of(h3)
print("simple roots:")
for s in simple:
    print("  ", s)
print("Coxeter matrix:")
print(coxeter_matrix(simple))

cell600 = induce_4d(h3)
print("\ninduced vertices:", len(cell600))
print("identified as:", identify(signature(cell600)))
print("group order of the induced system:", coxeter_order(cell600))

out_dir = Path(__file__).resolve().parent
(out_dir / "icosidodecahedron.off").write_text(to_off(h3))
(out_dir / "cell600.off").write_text(to_off(cell600))
print("\nwrote icosidodecahedron.off and cell600.off")
