"""
Persistence and recognition
===========================

Root systems serialize to an exact JSON format (each coordinate stored as
the four integers of a + b*sqrt(d)); reloading reproduces the file byte for
byte.  A reloaded system classifies exactly like the in-memory one.
"""

from pathlib import Path

from rootspin import (
    build_preset,
    coxeter_order,
    identify,
    induce_4d,
    load_root_system,
    root_system_to_json,
    save_root_system,
    signature,
)

work = Path(__file__).resolve().parent
f4 = induce_4d(build_preset("B3"))

path = work / "f4_induced.json"
save_root_system(f4, path)
reloaded = load_root_system(path)

print("round trip byte-identical:", root_system_to_json(reloaded) == path.read_text())
print("provenance:", reloaded.provenance.as_dict())

sig = signature(reloaded)
print("signature:", sig)
print("identified:", identify(sig))
print("group order:", coxeter_order(reloaded))
