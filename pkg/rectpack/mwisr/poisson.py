"""Exact Poisson binomial distribution.

The count distribution of independent Bernoulli(p_j) variables is the
coefficient vector of prod_j (1 - p_j + p_j x). Coefficients are kept as
Fractions so conditional expectations compare exactly.
"""

from fractions import Fraction
from typing import Iterable, Sequence, Union

import numpy as np

Probability = Union[Fraction, int, str]


def _as_probability(p: Probability) -> Fraction:
    value = Fraction(p)
    if not 0 <= value <= 1:
        raise ValueError(f"probability {p} outside [0, 1]")
    return value


def compute_pmf(probabilities: Iterable[Probability]) -> np.ndarray:
    """Probability mass function as an object array of Fractions."""
    pmf = np.array([Fraction(1)], dtype=object)
    for p in probabilities:
        p = _as_probability(p)
        nxt = np.full(len(pmf) + 1, Fraction(0), dtype=object)
        nxt[:-1] = pmf * (1 - p)
        nxt[1:] += pmf * p
        pmf = nxt
    return pmf


def tail_of(pmf: np.ndarray, threshold: int) -> Fraction:
    """P(S > threshold) for the distribution ``pmf``."""
    if threshold < 0:
        return Fraction(1)
    if threshold + 1 >= len(pmf):
        return Fraction(0)
    return Fraction(sum(pmf[threshold + 1:], Fraction(0)))


def poisson_binomial_tail(probabilities: Sequence[Probability], threshold: int) -> Fraction:
    """
    Exact P(sum of independent Bernoulli(p_j) > threshold).

    Example:
        ```python
        poisson_binomial_tail(["1/2"] * 4, 2)   # Fraction(5, 16)
        ```
    """
    return tail_of(compute_pmf(probabilities), threshold)


class PoissonBinomial:
    """
    Count distribution that supports fixing one variable at a time.

    ``without(p)`` divides the factor (1 - p + p x) back out of the
    generating function, which is exact for Fractions.
    """

    def __init__(self, probabilities: Iterable[Probability] = ()):
        self.pmf = compute_pmf(probabilities)

    @classmethod
    def from_pmf(cls, pmf: np.ndarray) -> "PoissonBinomial":
        dist = cls()
        dist.pmf = pmf
        return dist

    def __len__(self) -> int:
        """Number of variables still free."""
        return len(self.pmf) - 1

    def tail(self, threshold: int) -> Fraction:
        return tail_of(self.pmf, threshold)

    def without(self, p: Probability) -> "PoissonBinomial":
        p = _as_probability(p)
        f = self.pmf
        if len(f) < 2:
            raise ValueError("no free variable left to remove")
        if p == 1:
            return PoissonBinomial.from_pmf(f[1:].copy())
        g = np.full(len(f) - 1, Fraction(0), dtype=object)
        q = 1 - p
        previous = Fraction(0)
        for j in range(len(g)):
            previous = (f[j] - previous * p) / q
            g[j] = previous
        return PoissonBinomial.from_pmf(g)
