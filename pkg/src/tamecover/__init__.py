"""Exact arithmetic for tamely ramified covers of marked curve models.

Subpackages cover prime-field algebra (polynomials, quotient rewriting,
linear algebra, Smith normal form), finite group schemes as Hopf algebras
with derived-subgroup and abelianization algorithms, Kummer cover algebras
with multi-gradings, the graded-module / parabolic-weight calculus, a
decision procedure for existence of ramified abelian covers on orbifold
curve models, and machine verification of two twisted-torsor obstruction
families.
"""

__version__ = "0.1.0"
