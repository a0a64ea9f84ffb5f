"""inertia_lab: decide when a finite group G with chosen subgroup I can occur
as Galois group and inertia subgroup at p, in the regimes where exact,
desk-scale certificates exist (abelian groups, odd-order groups, and the
weight-2 slice of GL2(F_p)), plus the elliptic-curve machinery backing the
GL2 cases."""

__version__ = "0.1.0"
