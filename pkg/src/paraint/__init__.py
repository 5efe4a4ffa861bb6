"""paraint: exact verification of third-order integrals of motion for
Hamiltonians separable in parabolic coordinates.

Subpackages cover exact Gaussian-rational polynomial arithmetic (algebra),
the square-root/logarithm differential extension (extension), phase-space
observables and differential operators (phase), the determining-equation and
compatibility machinery (determining), the linear-ODE classification pipeline
(classify), the registry of verified potentials (catalog), floating-point
conservation cross-checks (numeric), and the command-line front end (cli).
"""

__version__ = "0.1.0"
