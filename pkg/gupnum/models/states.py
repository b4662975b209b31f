from typing import Annotated, Literal, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, model_validator


class SymEigen(BaseModel):
    """Eigenstate of the symmetrized position operator."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["sym-eigen"] = "sym-eigen"
    xi: float = 0.0


class KmmEigen(BaseModel):
    """Eigenstate of the KMM position operator (constant modulus)."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["kmm-eigen"] = "kmm-eigen"
    xi: float = 0.0


class MaxLoc(BaseModel):
    """Maximally localized state centered at xi."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["maxloc"] = "maxloc"
    xi: float = 0.0


class Gaussian(BaseModel):
    """Normalized Gaussian test state.

    psi(p) = (pi sigma^2)^(-1/4) exp(-(p - p0)^2 / (2 sigma^2)) exp(-i p x0 / hbar)
    """

    model_config = ConfigDict(frozen=True)

    kind: Literal["gaussian"] = "gaussian"
    sigma: float = Field(default=1.0, gt=0)
    p0: float = 0.0
    x0: float = 0.0


class GridState(BaseModel):
    """State known only through samples (p, re, im), strictly increasing in p."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["grid"] = "grid"
    p: tuple[float, ...]
    re: tuple[float, ...]
    im: tuple[float, ...]

    _momenta: np.ndarray = PrivateAttr()
    _amplitudes: np.ndarray = PrivateAttr()

    @model_validator(mode="after")
    def check_samples(self) -> "GridState":
        if not (len(self.p) == len(self.re) == len(self.im)):
            raise ValueError("p, re and im must have the same length")
        if len(self.p) < 4:
            raise ValueError("a grid state needs at least four samples")
        if any(b <= a for a, b in zip(self.p, self.p[1:])):
            raise ValueError("sample momenta must be strictly increasing")
        return self

    def model_post_init(self, __context) -> None:
        self._momenta = np.asarray(self.p, dtype=float)
        self._amplitudes = np.asarray(self.re, dtype=float) + 1j * np.asarray(self.im, dtype=float)

    @property
    def momenta(self) -> np.ndarray:
        return self._momenta

    @property
    def amplitudes(self) -> np.ndarray:
        return self._amplitudes

    @property
    def support(self) -> tuple[float, float]:
        return self.p[0], self.p[-1]


ClosedForm = Union[SymEigen, KmmEigen, MaxLoc]

StateSpec = Annotated[
    Union[SymEigen, KmmEigen, MaxLoc, Gaussian, GridState],
    Field(discriminator="kind"),
]
