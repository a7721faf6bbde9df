"""Macdonald polynomials from path models on the double Bruhat graph.

Two independent engines compute the nonsymmetric polynomials E_mu(q, t) and
the symmetric polynomials P_lambda(q, t) for any finite type: one sums over
pairs of labeled chains in the double Bruhat graph, the other over alcove
walks in the extended affine Weyl group.  An explicit statistic-preserving
bijection ties the two together, and a crystal-like structure with operators
for every root acts on the underlying paths.
"""

from .root_system import build_root_system, root_system_from_label

__all__ = ["build_root_system", "root_system_from_label"]
__version__ = "0.1.0"
