"""Size caps shared across the package.

Every cap guards an exponential blow-up (2^n blades, (dim E)^k tensors,
2^r truncated-polynomial terms, degree-phi(k) cyclotomic vectors).
"""

from __future__ import annotations

from dataclasses import dataclass


class CapExceededError(ValueError):
    """A requested computation exceeds the configured size caps."""


@dataclass(frozen=True)
class Caps:
    max_dim: int = 12       # Clifford algebra rank n (2^n blades)
    max_tensor: int = 4096  # (dim E)^k for tensor powers
    max_vars: int = 8       # truncated-polynomial variables
    max_k: int = 32         # cyclotomic order


DEFAULT_CAPS = Caps()
