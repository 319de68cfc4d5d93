"""optikit: an executable kernel for finite category theory and optics.

Finite categories, coends, left Kan extensions and profunctors, computed
exactly as explicit quotient sets, plus a lens/prism optics layer whose
composition laws are verified by exhaustive construction.
"""

__version__ = "0.1.0"
