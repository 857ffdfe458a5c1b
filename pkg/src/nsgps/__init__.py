"""Numerical semigroup computations.

Modules:
  core           notable elements, Apery sets, membership
  classify       irreducibility, oversemigroups, MED, freeness
  presentations  factorizations, Betti elements, minimal presentations
  invariants     elasticity, Delta sets, catenary degree, omega-primality
  enumeration    semigroup tree and fixed-Frobenius enumeration
  curves         characteristic sequences of plane branches
  api / service / cli   JSON layer, HTTP service and command line
"""

from .core import NumericalSemigroup, from_generators

__all__ = ["NumericalSemigroup", "from_generators"]
__version__ = "0.1.0"
