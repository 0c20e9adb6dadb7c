"""Pseudohyperbolic geometry, separation diagnostics and constructive
interpolation on the unit disk.

Points are plain Python complex numbers strictly inside the disk. Start from
``gen_geometric`` and ``InterpolationProblem``; ``interpolate_bloch`` and
``interpolate_hinf`` build evaluable interpolants, ``verify`` checks them.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
