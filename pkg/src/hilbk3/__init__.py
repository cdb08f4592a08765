"""Exact verification toolkit for Lagrangian 3-planes in K3^[3]-type sixfolds.

Modules: k3 (the Frobenius algebra of a K3 surface), symring (the orbifold
ring A{S_n}), hodge (standard classes and η), fujiki (constants and the
elimination), curve / local / descent / integral (the Diophantine
analysis) and enumerative (Betti numbers and representation dimensions).
"""

__version__ = "0.1.0"
