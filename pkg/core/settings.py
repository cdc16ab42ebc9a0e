# core/settings.py
"""
Settings for exhaustive checks and generic-point specializations
"""

from dataclasses import dataclass
from fractions import Fraction

from .base import RelationSet


DEFAULT_Q0 = Fraction(7, 3)


@dataclass
class KitSettings:
    """Size guards and defaults shared by the algebra modules"""
    q0: Fraction = DEFAULT_Q0
    max_class_words: int = 10 ** 6
    max_ideal_words: int = 10 ** 5
    max_action_dim: int = 10 ** 4
    max_commutant_dim: int = 10 ** 3
    max_commutant_r: int = 4
    max_ybe_dim: int = 10 ** 3
    max_gl_letters: int = 3
    relation_set: RelationSet = RelationSet.FULL

    def validate(self) -> tuple[bool, str]:
        """Validate settings"""
        if self.q0 == 0:
            return False, "q0 must be nonzero"
        if self.q0 in (1, -1):
            return False, "q0 must be a generic point, not +1 or -1"
        for name in ("max_class_words", "max_ideal_words",
                     "max_action_dim", "max_commutant_dim", "max_ybe_dim"):
            if getattr(self, name) < 1:
                return False, f"{name} must be positive"
        if self.max_commutant_r < 1:
            return False, "max_commutant_r must be positive"
        if self.max_gl_letters < 1:
            return False, "max_gl_letters must be positive"
        return True, "OK"


DEFAULT_SETTINGS = KitSettings()
