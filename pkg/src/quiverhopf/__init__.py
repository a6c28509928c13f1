"""Hopf algebra structures on covering-quiver path algebras.

Subpackages build up from exact cyclotomic scalars through finite abelian
groups, covering quivers and their graded path algebras, to the Hopf
structure induced by an allowable bimodule, the tame relation catalog, and
reference Hopf algebras used as witnesses.
"""

from .cyclotomic import Conductor, ConductorError, Cyc, root_of_unity

__all__ = ["Conductor", "ConductorError", "Cyc", "root_of_unity"]
