"""
From the octahedron to the 16-cell
==================================

The full pipeline on the simplest rank-3 root system: close {e1, e2, e3}
under reflections, pair the roots into rotors, close the rotors into a
group under the geometric product, and read each rotor's even-grade
coefficients as a 4D point.
"""

from rootspin import (
    Multivector,
    build_preset,
    generate_rotor_group,
    identify,
    induce_4d,
    normalize_roots,
    rotor_from_vectors,
    signature,
    spinor_to_vec4,
    verify_root_axioms,
)

octahedron = build_preset("A1xA1xA1")
print("closure of {e1, e2, e3}:", len(octahedron), "roots")
for r in octahedron:
    print("  ", r)

# two sample rotors: a root with itself gives 1, two orthogonal roots give
# a bivector; both are unit spinors
e1 = Multivector.basis_vector(1, 3)
e2 = Multivector.basis_vector(2, 3)
e3 = Multivector.basis_vector(3, 3)
print("\nrotor from (e1, e1):", rotor_from_vectors(e1, e1).mv, "->", spinor_to_vec4(rotor_from_vectors(e1, e1)))
print("rotor from (e2, e3):", rotor_from_vectors(e2, e3).mv, "->", spinor_to_vec4(rotor_from_vectors(e2, e3)))

group = generate_rotor_group(normalize_roots(octahedron))
print("\nrotor group order:", group.order)

cell16 = induce_4d(octahedron)
print("\ninduced 4D point set:", len(cell16), "vertices")
for v in cell16:
    print("  ", v)

report = verify_root_axioms(cell16)
print("\nroot-system axioms on the induced set:", report.summary())
print("identified as:", identify(signature(cell16)))
