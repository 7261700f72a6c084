"""Exact computations around the orbit method for real reductive groups.

Langlands parameters, orbit stratifications of geometric parameter spaces,
change-of-basis matrices and characteristic cycles in the Grothendieck group,
type-A coadjoint orbit combinatorics, and the duality between Arthur
parameters and coadjoint covers.
"""

__version__ = "0.1.0"
