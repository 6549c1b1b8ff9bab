"""
The induction survey
====================

Runs the rank-3 to rank-4 construction over the whole built-in catalog,
classifies every induced system, and checks the negative result: the
signature of I2(4) x A1 x A1 never appears, so not every rank-4 root
system is induced by a rank-3 one.
"""

from rootspin import survey

table = survey()
print(table.to_text())

print("same table as CSV:\n")
print(table.to_csv())
