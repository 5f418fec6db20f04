"""String-valued markers used wherever a field may lack a numeric value."""

from enum import Enum


class Tag(str, Enum):
    INFINITE = "INFINITE"
    UNDEFINED = "UNDEFINED"
    UNDEFINED_ALGEBRAIC = "UNDEFINED_ALGEBRAIC"
    UNDECIDED = "UNDECIDED"
    HYPOTHESIS_NOT_MET = "HYPOTHESIS_NOT_MET"
    NOT_APPLICABLE = "N/A"
    YES = "YES"
    NO = "NO"

    def __str__(self):
        return self.value
