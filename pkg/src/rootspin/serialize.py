"""Persistence and export formats.

JSON is the only exact format: every coordinate is stored as the four
integers [a_num, a_den, b_num, b_den] of a + b*sqrt(d), with d stated once
per file.  Serialisation is canonical (sorted roots, fixed key order,
compact separators), so dump -> load -> dump is byte-identical.

OFF and CSV are lossy float views for inspection; OFF carries vertices only
(header "OFF", then "V 0 0").
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .errors import RootspinError
from .qfield import QScalar
from .roots import Provenance, RootSystem, Vector

FORMAT_VERSION = 1


def _coord_quad(q: QScalar) -> list[int]:
    return [q.rat.numerator, q.rat.denominator, q.surd.numerator, q.surd.denominator]


def root_system_to_json(rs: RootSystem) -> str:
    doc: dict = {"version": FORMAT_VERSION, "dim": rs.dim, "disc": rs.disc}
    if rs.label:
        doc["label"] = rs.label
    prov = rs.provenance.as_dict()
    if prov:
        doc["provenance"] = prov
    doc["roots"] = [[_coord_quad(c) for c in r.coords] for r in rs.roots]
    return json.dumps(doc, separators=(",", ":")) + "\n"


def root_system_from_json(text: str) -> RootSystem:
    doc = json.loads(text)
    version = doc.get("version")
    if version != FORMAT_VERSION:
        raise RootspinError(f"unsupported root-system file version {version!r}")
    disc = int(doc["disc"])
    dim = int(doc["dim"])
    roots = []
    for coords in doc["roots"]:
        if len(coords) != dim:
            raise RootspinError(f"root {coords} does not have {dim} coordinates")
        qs = [
            QScalar(Fraction(an, ad), Fraction(bn, bd), disc)
            for an, ad, bn, bd in coords
        ]
        roots.append(Vector(qs, disc=disc))
    prov = doc.get("provenance", {})
    return RootSystem(
        roots,
        disc=disc,
        label=doc.get("label"),
        provenance=Provenance(
            preset=prov.get("preset"),
            file=prov.get("file"),
            induced_from=prov.get("induced-from"),
        ),
    )


def save_root_system(rs: RootSystem, path: str | Path) -> None:
    Path(path).write_text(root_system_to_json(rs), encoding="utf-8")


def load_root_system(path: str | Path) -> RootSystem:
    return root_system_from_json(Path(path).read_text(encoding="utf-8"))


def to_off(rs: RootSystem) -> str:
    """Vertex-only OFF point cloud (faces are out of scope for polytopes here)."""
    lines = ["OFF", f"{len(rs)} 0 0"]
    for r in rs.roots:
        lines.append(" ".join(repr(float(c)) for c in r.coords))
    return "\n".join(lines) + "\n"


def to_csv(rs: RootSystem) -> str:
    """Coordinates as binary64 with 17 significant digits."""
    header = ",".join(f"x{i + 1}" for i in range(rs.dim))
    lines = [header]
    for r in rs.roots:
        lines.append(",".join(f"{float(c):.17g}" for c in r.coords))
    return "\n".join(lines) + "\n"


def to_text(rs: RootSystem) -> str:
    name = rs.label or "root system"
    lines = [f"# {name}: {len(rs)} roots, dim {rs.dim}, disc {rs.disc}"]
    for r in rs.roots:
        lines.append(str(r))
    return "\n".join(lines) + "\n"
