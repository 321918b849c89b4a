"""Exact weight combinatorics for bottom layers of cohomologically induced modules."""

__version__ = "0.1.0"

from .errors import BottomLayerError  # noqa: E402
from .rootdata import LieType, RootSystem, SignedPermutation  # noqa: E402
from .charring import Character, WeightMap  # noqa: E402

__all__ = ["BottomLayerError", "Character", "LieType", "RootSystem", "SignedPermutation", "WeightMap", "__version__"]
