"""Numerical laboratory for maximal averages over codimension-2 surfaces.

The package is organized around the computable objects of the problem:

- ``surfaces``: parametrized surfaces (u, v) -> (u, v, phi1, phi2), exact
  derivative jets, curvature diagnostics, and parabolic normalization.
- ``phase``: stationary points z(xi) of the oscillatory phase, the
  homogeneous phase surface Psi(xi), normal frames, and the trilinear
  transversality volume.
- ``freqgeo``: frequency annuli, plates, caps, extremizer set descriptors,
  overlap audits, and the decoupling iteration schedule.
- ``operator``: the averaging operator itself (oscillatory multiplier,
  dyadic band application on grids, Monte Carlo point averages, sup-in-time
  certificates, broad/narrow decomposition checks).
- ``exponents``: exact rational arithmetic for the exponent calculus
  (regions, vertices, interpolation, induction margins, necessity slopes).
- ``extremizers``: delta-sweeps of the sharpness families with slope fits
  and verdicts.
- ``cli``: command-line front end and the ``verify all`` acceptance suite.
"""

__version__ = "0.1.0"

from . import errors  # noqa: F401
