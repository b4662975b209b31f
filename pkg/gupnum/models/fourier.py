from enum import Enum


class PhaseMode(str, Enum):
    exact = "exact"
    linearized = "linearized"
