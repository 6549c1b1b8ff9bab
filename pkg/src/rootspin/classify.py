"""Recognition of root systems by exact invariants.

The fingerprint of a root set is its Signature: ambient dimension, root
count, the sorted multiset of pairwise inner products of the unit-normalized
roots, and the component sizes of the non-orthogonality graph.  All four are
invariant under exact orthogonal changes of frame, and none depends on root
lengths, which matters because induced systems always come out unit-length
(an F4 configuration with both orbits at unit length is still F4 here).

The catalog used by identify() is generated from each member's own defining
data at call time; nothing is matched against transcribed numbers.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np

from .caps import GROUP_CLOSURE_CAP, resolve_cap
from .errors import (
    ClosureCapExceeded,
    NotRepresentable,
    RootspinError,
    UnknownAngle,
)
from .induction import induce_4d
from .presets import a1_system, build_preset, direct_sum
from .qfield import QScalar
from .roots import (
    RootSystem,
    Vector,
    extract_simple_roots,
    normalize_roots,
    span_rank,
    verify_root_axioms,
)

_HALF = Fraction(1, 2)


def _value_key(q: QScalar):
    if q.surd == 0:
        return ("r", q.rat)
    return ("s", q.disc, q.rat, q.surd)


@dataclass(frozen=True)
class Signature:
    """Rotation-invariant fingerprint of a root system."""

    dim: int
    count: int
    spectrum: tuple  # sorted ((value key, multiplicity)) pairs
    components: tuple[int, ...]  # component sizes, descending

    def __str__(self) -> str:
        return (
            f"dim {self.dim}, {self.count} roots, "
            f"{len(self.spectrum)} distinct inner products, "
            f"components {list(self.components)}"
        )


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, i: int) -> int:
        while self.parent[i] != i:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def union(self, i: int, j: int) -> None:
        ri, rj = self.find(i), self.find(j)
        if ri != rj:
            self.parent[ri] = rj


def signature(rs: RootSystem) -> Signature:
    """Exact signature of a root system (roots are unit-normalized first)."""
    units = normalize_roots(rs)
    n = len(units)
    counts: Counter = Counter()
    uf = _UnionFind(n)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            d = units[i].dot(units[j])
            counts[_value_key(d)] += 1
            if j > i and not d.is_zero():
                uf.union(i, j)
    comp_sizes = Counter(uf.find(i) for i in range(n))
    return Signature(
        dim=rs.dim,
        count=n,
        spectrum=tuple(sorted(counts.items())),
        components=tuple(sorted(comp_sizes.values(), reverse=True)),
    )


@lru_cache(maxsize=None)
def catalog() -> tuple[tuple[str, Signature], ...]:
    """Named signatures for every recognizable system of dimension 2..4.

    Members: A1^k, the exactly-realizable unit dihedrals I2(n) for n in
    {2, 3, 4, 6}, A3, B3, H3, D4, F4, H4, and all direct sums that fit in
    dimension 4 within a single quadratic field.  I2(8) and I2(12) close
    exactly but their unit normalisations leave every quadratic field, so
    they carry no computable signature and are absent.
    """
    a1 = a1_system()

    def sum_of(name: str, *parts: RootSystem) -> tuple[str, Signature]:
        return name, signature(direct_sum(*parts, label=name))

    entries: list[tuple[str, Signature]] = []
    i2 = {n: build_preset(f"I2-{n}") for n in (3, 4, 6)}
    # dimension 1
    entries.append(("A1", signature(a1)))
    # dimension 2
    entries.append(("A1xA1", signature(build_preset("I2-2"))))
    for n in (3, 4, 6):
        entries.append((f"I2-{n}", signature(i2[n])))
    # dimension 3
    entries.append(("A1xA1xA1", signature(build_preset("A1xA1xA1"))))
    for n in (3, 4, 6):
        entries.append(sum_of(f"I2-{n}xA1", i2[n], a1))
    for name in ("A3", "B3", "H3"):
        entries.append((name, signature(build_preset(name))))
    # dimension 4
    entries.append(sum_of("A1xA1xA1xA1", a1, a1, a1, a1))
    for n in (3, 4, 6):
        entries.append(sum_of(f"I2-{n}xA1xA1", i2[n], a1, a1))
    for m, n in ((3, 3), (3, 6), (4, 4), (6, 6)):  # same-field pairs only
        entries.append(sum_of(f"I2-{m}xI2-{n}", i2[m], i2[n]))
    for name in ("A3", "B3", "H3"):
        entries.append(sum_of(f"{name}xA1", build_preset(name), a1))
    for name in ("D4", "F4", "H4"):
        entries.append((name, signature(build_preset(name))))
    return tuple(entries)


def identify(sig: Signature) -> str:
    """Catalog name matching the signature, or "unrecognized"."""
    for name, cat_sig in catalog():
        if cat_sig == sig:
            return name
    return "unrecognized"


# -- Coxeter group order ------------------------------------------------------


def _reflection_permutations(rs: RootSystem) -> list[tuple[int, ...]]:
    from .roots import _mirror_factor, _reflect_fast

    index = {r: i for i, r in enumerate(rs.roots)}
    perms = set()
    for a in rs.roots:
        fa = _mirror_factor(a)
        images = []
        for r in rs.roots:
            img = _reflect_fast(r, a, fa)
            pos = index.get(img)
            if pos is None:
                raise RootspinError(
                    f"{rs!r} is not reflection-closed at root {a}; "
                    "run verify_root_axioms"
                )
            images.append(pos)
        perms.add(tuple(images))
    return sorted(perms)


def _permutation_group_order(gens: Sequence[tuple[int, ...]], cap: int) -> int:
    n = len(gens[0])
    dtype = np.uint8 if n <= 255 else np.uint32
    gen_arr = np.array(gens, dtype=dtype)
    row_bytes = n * gen_arr.itemsize
    seen = {np.arange(n, dtype=dtype).tobytes()}
    new_bufs = []
    for row in gen_arr:
        b = row.tobytes()
        if b not in seen:
            seen.add(b)
            new_bufs.append(b)
    while new_bufs:
        frontier = np.frombuffer(b"".join(new_bufs), dtype=dtype).reshape(-1, n)
        new_bufs = []
        for g in gen_arr:
            # frontier[:, g] composes every frontier element with g at C speed
            data = frontier[:, g].tobytes()
            for off in range(0, len(data), row_bytes):
                b = data[off : off + row_bytes]
                if b not in seen:
                    seen.add(b)
                    new_bufs.append(b)
        if len(seen) > cap:
            raise ClosureCapExceeded(f"permutation closure exceeded cap of {cap}")
    return len(seen)


@lru_cache(maxsize=None)
def coxeter_order(rs: RootSystem, cap: int | None = None) -> int:
    """Order of the group generated by all root reflections, acting on roots."""
    cap = resolve_cap(cap, GROUP_CLOSURE_CAP)
    return _permutation_group_order(_reflection_permutations(rs), cap)


# -- simple roots and Coxeter matrix ------------------------------------------


def simple_roots_of(rs: RootSystem) -> list[Vector]:
    """Simple system extracted from a valid root system."""
    simple = extract_simple_roots(rs.roots)
    rank = span_rank(list(rs.roots))
    if len(simple) != rank:
        raise RootspinError(
            f"extracted {len(simple)} simple roots but span rank is {rank}; "
            "input is not a valid root system"
        )
    return simple


@dataclass(frozen=True)
class CoxeterMatrix:
    rank: int
    entries: tuple[tuple[int, ...], ...]

    def __str__(self) -> str:
        return "\n".join(" ".join(f"{m:2d}" for m in row) for row in self.entries)


def _cos2_target(m: int, disc: int) -> Optional[QScalar]:
    """cos^2(pi/m) as an exact element of Q(sqrt(disc)), if it lives there."""
    rational = {2: Fraction(0), 3: Fraction(1, 4), 4: Fraction(1, 2), 6: Fraction(3, 4)}
    if m in rational:
        return QScalar(rational[m])
    surd = {
        5: (5, Fraction(3, 8), Fraction(1, 8)),
        8: (2, Fraction(1, 2), Fraction(1, 4)),
        10: (5, Fraction(5, 8), Fraction(1, 8)),
        12: (3, Fraction(1, 2), Fraction(1, 4)),
    }
    if m in surd:
        d, a, b = surd[m]
        if d == disc:
            return QScalar(a, b, d)
    # m in {7, 9, 11}: cos^2(pi/m) has degree 3 over the rationals and can
    # never equal a quadratic-field inner product
    return None


_SUPPORTED_M = tuple(range(2, 13))


def coxeter_matrix(simple: Sequence[Vector]) -> CoxeterMatrix:
    """Labels m_ij with (a_i|a_j)/(|a_i||a_j|) = -cos(pi/m_ij), exactly.

    Matching is done on the squared cosine, which stays inside the field
    even when the root lengths themselves do not.
    """
    rank = len(simple)
    norms = [a.norm_squared() for a in simple]
    rows = [[1] * rank for _ in range(rank)]
    for i in range(rank):
        for j in range(i + 1, rank):
            d = simple[i].dot(simple[j])
            if d.sign() > 0:
                raise UnknownAngle(
                    f"positive inner product between simple roots {simple[i]} "
                    f"and {simple[j]}"
                )
            m_found = None
            if d.is_zero():
                m_found = 2
            else:
                c2 = (d * d) / (norms[i] * norms[j])
                for m in _SUPPORTED_M:
                    target = _cos2_target(m, c2.disc)
                    if target is not None and c2 == target:
                        m_found = m
                        break
            if m_found is None:
                raise UnknownAngle(
                    f"angle between {simple[i]} and {simple[j]} matches no "
                    f"supported label m in {list(_SUPPORTED_M)}"
                )
            rows[i][j] = rows[j][i] = m_found
    return CoxeterMatrix(rank, tuple(tuple(r) for r in rows))


# -- survey --------------------------------------------------------------------


SURVEY_INPUTS = (
    "A1xA1xA1",
    "A1xI2-3",
    "A1xI2-4",
    "A1xI2-5",
    "A1xI2-6",
    "A3",
    "B3",
    "H3",
)

COUNTEREXAMPLE_NAME = "I2-4xA1xA1"


@dataclass(frozen=True)
class SurveyRow:
    input: str
    dim: int
    root_count: Optional[int]
    spinor_order: Optional[int]
    induced_name: str
    axioms_ok: Optional[bool]
    note: str = ""


@dataclass(frozen=True)
class SurveyTable:
    rows: tuple[SurveyRow, ...]
    counterexample_name: str
    counterexample_absent: bool

    def to_text(self) -> str:
        headers = ("input", "dim", "root_count", "spinor_order", "induced_name", "axioms_ok")
        grid = [headers]
        for r in self.rows:
            grid.append(
                (
                    r.input,
                    str(r.dim),
                    "-" if r.root_count is None else str(r.root_count),
                    "-" if r.spinor_order is None else str(r.spinor_order),
                    r.induced_name,
                    "n/a" if r.axioms_ok is None else ("yes" if r.axioms_ok else "NO"),
                )
            )
        widths = [max(len(row[c]) for row in grid) for c in range(len(headers))]
        lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in grid]
        verdict = "absent" if self.counterexample_absent else "PRESENT"
        lines.append("")
        lines.append(
            f"signature of {self.counterexample_name} among induced systems: {verdict}"
        )
        notes = [r for r in self.rows if r.note]
        for r in notes:
            lines.append(f"note [{r.input}]: {r.note}")
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        lines = ["input,dim,root_count,spinor_order,induced_name,axioms_ok"]
        for r in self.rows:
            lines.append(
                ",".join(
                    (
                        r.input,
                        str(r.dim),
                        "" if r.root_count is None else str(r.root_count),
                        "" if r.spinor_order is None else str(r.spinor_order),
                        r.induced_name,
                        "" if r.axioms_ok is None else str(r.axioms_ok).lower(),
                    )
                )
            )
        return "\n".join(lines) + "\n"


@lru_cache(maxsize=None)
def survey() -> SurveyTable:
    """Induce every rank-3 catalog member and classify the results.

    Also checks the negative claim: no induced signature may coincide with
    the signature of I2(4) x A1 x A1, so the induction map cannot be onto in
    rank 4.  Inputs with no exact quadratic realization are reported as
    unrealizable rows rather than silently dropped.
    """
    rows: list[SurveyRow] = []
    induced_signatures: list[Signature] = []
    for name in SURVEY_INPUTS:
        try:
            rs = build_preset(name)
        except NotRepresentable as exc:
            rows.append(
                SurveyRow(
                    input=name,
                    dim=3,
                    root_count=None,
                    spinor_order=None,
                    induced_name="unrealizable",
                    axioms_ok=None,
                    note=str(exc),
                )
            )
            continue
        induced = induce_4d(rs)
        sig = signature(induced)
        induced_signatures.append(sig)
        report = verify_root_axioms(induced)
        rows.append(
            SurveyRow(
                input=name,
                dim=rs.dim,
                root_count=len(rs),
                spinor_order=len(induced),
                induced_name=identify(sig),
                axioms_ok=report.ok,
            )
        )
    target = signature(
        direct_sum(build_preset("I2-4"), a1_system(), a1_system(),
                   label=COUNTEREXAMPLE_NAME)
    )
    absent = all(sig != target for sig in induced_signatures)
    return SurveyTable(tuple(rows), COUNTEREXAMPLE_NAME, absent)
