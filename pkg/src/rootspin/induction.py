"""The rank-3 to rank-4 induction and its 2D counterpart.

Pipeline: unit-normalize roots, form all pairwise rotors alpha_i alpha_j,
close them into a group under the geometric product, then read each group
element's even-grade coefficients as a Euclidean vector.  The resulting 4D
(or 2D) point set is re-verified against the root-system axioms instead of
being trusted: the verification *is* the computational content here.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .caps import GROUP_CLOSURE_CAP, resolve_cap
from .clifford import Multivector, Rotor, spinor_to_vec2, spinor_to_vec4
from .errors import (
    ClosureCapExceeded,
    DimensionMismatch,
    NonUnitVector,
    RootspinError,
)
from .qfield import QScalar
from .roots import (
    Provenance,
    RootSystem,
    Vector,
    gram_spectrum,
    normalize_roots,
    verify_root_axioms,
)

_ONE_Q = QScalar(1)


def _trusted_rotor(mv: Multivector) -> Rotor:
    # products of unit rotors are unit rotors; skip re-validation in closures
    r = object.__new__(Rotor)
    object.__setattr__(r, "mv", mv)
    return r


class RotorGroup:
    """Finite group of rotors, canonically ordered, closed under the product."""

    __slots__ = ("dim", "elements", "generators", "_set")

    def __init__(self, elements: Sequence[Rotor], generators: Sequence[Rotor]):
        elems = sorted(set(elements))
        dims = {r.dim for r in elems}
        if len(dims) != 1:
            raise DimensionMismatch(f"mixed rotor dimensions {sorted(dims)}")
        object.__setattr__(self, "dim", elems[0].dim)
        object.__setattr__(self, "elements", tuple(elems))
        object.__setattr__(self, "generators", tuple(generators))
        object.__setattr__(self, "_set", frozenset(r.mv for r in elems))
        self._validate()

    def __setattr__(self, name, value):
        raise AttributeError("RotorGroup is immutable")

    def _validate(self) -> None:
        if len(self.elements) % 2 != 0:
            raise RootspinError(f"rotor group of odd order {len(self.elements)}")
        if Multivector.scalar(1, self.dim) not in self._set:
            raise RootspinError("rotor group does not contain 1")
        for r in self.elements:
            if (-r.mv) not in self._set:
                raise RootspinError(f"rotor group not closed under negation at {r}")

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, r) -> bool:
        mv = r.mv if isinstance(r, Rotor) else r
        return mv in self._set

    def __repr__(self) -> str:
        return f"RotorGroup(dim={self.dim}, order={self.order})"


def generate_rotor_group(
    unit_roots: Sequence[Vector], cap: int | None = None
) -> RotorGroup:
    """Close {alpha_i alpha_j : all ordered root pairs} under the product."""
    cap = resolve_cap(cap, GROUP_CLOSURE_CAP)
    if not unit_roots:
        raise NonUnitVector("no roots given")
    mvs = []
    for r in unit_roots:
        if r.norm_squared() != _ONE_Q:
            raise NonUnitVector(f"root {r} is not exactly unit length")
        mvs.append(Multivector.from_vector(r))
    seed_mvs = {a * b for a in mvs for b in mvs}
    generators = [_trusted_rotor(mv) for mv in sorted(seed_mvs)]
    # closing under right multiplication by {alpha_1 alpha_j} alone reaches
    # the whole group generated by the seed: any alpha_i alpha_j equals
    # (alpha_1 alpha_i)~ (alpha_1 alpha_j), so the subset generates it
    one = Multivector.scalar(1, mvs[0].dim)
    first = mvs[0]
    gen_list = sorted({first * m for m in mvs} - {one})
    known = set(seed_mvs)
    frontier = list(seed_mvs)
    while frontier:
        found = []
        for x in frontier:
            for g in gen_list:
                y = x * g
                if y not in known:
                    known.add(y)
                    found.append(y)
        if len(known) > cap:
            raise ClosureCapExceeded(f"rotor closure exceeded cap of {cap}")
        frontier = found
    return RotorGroup([_trusted_rotor(mv) for mv in known], generators)


@lru_cache(maxsize=None)
def induce_4d(rs: RootSystem, cap: int | None = None) -> RootSystem:
    """4D root system read off the rotor group of a rank-3 root system."""
    if rs.dim != 3:
        raise DimensionMismatch(f"induce_4d needs a 3D system, got dim {rs.dim}")
    units = normalize_roots(rs)
    group = generate_rotor_group(units, cap=cap)
    vecs = [spinor_to_vec4(r) for r in group]
    source = rs.label or "rank-3 input"
    out = RootSystem(
        vecs,
        disc=rs.disc,
        label=f"induced({source})",
        provenance=Provenance(induced_from=source),
    )
    report = verify_root_axioms(out)
    if not report.ok:
        raise RootspinError(
            f"induced set from {source} is not a root system: {report.summary()}"
        )
    return out


@lru_cache(maxsize=None)
def induce_2d(rs: RootSystem) -> RootSystem:
    """2D spinor image of a 2D root system: alpha_i -> alpha_1 alpha_i.

    alpha_1 is the first unit root in canonical order; the recorded
    convention only rotates the output, which no congruence test sees.
    """
    if rs.dim != 2:
        raise DimensionMismatch(f"induce_2d needs a 2D system, got dim {rs.dim}")
    units = normalize_roots(rs)
    first = Multivector.from_vector(units[0])
    vecs = [spinor_to_vec2(first * Multivector.from_vector(u)) for u in units]
    source = rs.label or "rank-2 input"
    out = RootSystem(
        vecs,
        disc=rs.disc,
        label=f"induced({source})",
        provenance=Provenance(induced_from=source),
    )
    report = verify_root_axioms(out)
    if not report.ok:
        raise RootspinError(
            f"2D spinor image of {source} is not a root system: {report.summary()}"
        )
    return out


@dataclass(frozen=True)
class SelfDualityReport:
    label: str
    input_count: int
    induced_count: int
    input_spectrum: tuple[QScalar, ...]
    induced_spectrum: tuple[QScalar, ...]

    @property
    def self_dual(self) -> bool:
        return (
            self.input_count == self.induced_count
            and self.input_spectrum == self.induced_spectrum
        )

    def summary(self) -> str:
        verdict = "self-dual" if self.self_dual else "NOT self-dual"
        return (
            f"{self.label}: {verdict} "
            f"({self.input_count} roots <-> {self.induced_count} spinors)"
        )


def check_self_dual(rs: RootSystem) -> SelfDualityReport:
    """Congruence test between a 2D system and its spinor image.

    Cardinalities and Gram spectra of the unit-normalized sets must agree;
    the spectrum comparison is rotation-invariant, so the verdict does not
    depend on the alpha_1 convention inside induce_2d.
    """
    induced = induce_2d(rs)
    units_in = normalize_roots(rs)
    units_out = normalize_roots(induced)
    return SelfDualityReport(
        label=rs.label or "rank-2 input",
        input_count=len(units_in),
        induced_count=len(units_out),
        input_spectrum=gram_spectrum(units_in),
        induced_spectrum=gram_spectrum(units_out),
    )
