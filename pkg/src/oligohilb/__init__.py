"""Coset algebras, spectra and double cosets for homogeneous structures."""

from .elements import INFINITE
from .errors import OligoError
from .partials import EMPTY, PartialAuto
from .structure import Structure, StructureConfig, build

__all__ = ["INFINITE", "EMPTY", "OligoError", "PartialAuto", "Structure", "StructureConfig", "build"]
