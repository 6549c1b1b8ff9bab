"""
Self-duality of the planar root systems
=======================================

A 2D root vector maps to the spinor it forms with a fixed first root; the
image of a dihedral root system under this map is a congruent copy of
itself.  The congruence test compares exact Gram spectra, so a "self-dual"
verdict is an identity, not an approximation.

Only some dihedral systems exist exactly over a quadratic field; the loop
below shows both the verified instances and the precise reason the others
are out of reach.
"""

from rootspin import NormNotInField, NotRepresentable, build_preset, check_self_dual

for n in range(2, 13):
    try:
        rs = build_preset(f"I2-{n}")
        field = "Q" if rs.disc == 1 else f"Q(sqrt({rs.disc}))"
        print(f"I2({n:2d}) over {field}: {check_self_dual(rs).summary()}")
    except NotRepresentable:
        print(f"I2({n:2d}): no exact realization in any quadratic field")
    except NormNotInField as exc:
        print(f"I2({n:2d}): closes exactly, but a root has squared norm "
              f"{exc.norm_squared} with no square root in the field")
