"""Nash blowups of affine toric varieties in arbitrary characteristic."""

__version__ = "0.1.0"

from .detvar import DetVarSpec, detvar_generators, scan_minors  # noqa: E402
from .logjac import compare_characteristics, gamma_p  # noqa: E402
from .nash import NashReport, nash_charts, nash_iterate  # noqa: E402
from .semigroup import AffineSemigroup, member, minimal_generators  # noqa: E402

__all__ = [
    "AffineSemigroup",
    "DetVarSpec",
    "NashReport",
    "compare_characteristics",
    "detvar_generators",
    "gamma_p",
    "member",
    "minimal_generators",
    "nash_charts",
    "nash_iterate",
    "scan_minors",
]
