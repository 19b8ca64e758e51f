"""Exact pairings between cubic-homogeneous and cubic-linear polynomial maps.

Arithmetic is exact throughout: rationals are ``fractions.Fraction`` and
coefficients that depend on a multiplier ``λ`` live in the rational function
field Q(λ) (``LambdaRational``).
"""

from .cubicmaps import *  # noqa: F401,F403
from .fixtures import FIXTURES, Fixture, get_fixture
from .linalg import *  # noqa: F401,F403
from .pairing import *  # noqa: F401,F403
from .polyring import *  # noqa: F401,F403
from .scalars import *  # noqa: F401,F403
from .series import *  # noqa: F401,F403
from .verify import Report, verify_report

__version__ = "0.1.0"
