"""Random two-mode networks.

Two models:

``uniform``
    exactly ``m`` distinct links drawn uniformly from the n1*n2 possible pairs.
``chung-lu``
    each pair (i, j) linked independently with probability
    ``min(1, a_i * b_j / m)``, where the expected degrees ``a`` and ``b``
    follow power laws with the given exponents, scaled to sum to ``m``.

Randomness comes from numpy's counter-based Philox generator, so output is
a pure function of the spec.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .network import BipartiteNetwork, Link

# uniform weights live on this grid so that sums of a few thousand of them
# stay exact in double precision
WEIGHT_GRID = 1.0 / 1024


@dataclass(frozen=True)
class GenSpec:
    n1: int
    n2: int
    m: int
    weights: tuple = ("unit",)
    seed: int = 0
    model: str = "uniform"
    exponents: tuple[float, float] = (2.5, 2.5)

    def __post_init__(self):
        if self.n1 < 0 or self.n2 < 0 or self.m < 0:
            raise ValueError("n1, n2 and m must be nonnegative")
        if self.model not in ("uniform", "chung-lu"):
            raise ValueError(f"unknown model {self.model!r}")
        if self.m > self.n1 * self.n2:
            raise ValueError(f"infeasible m={self.m}: at most {self.n1 * self.n2} links fit")
        if len(self.exponents) != 2:
            raise ValueError("need one power-law exponent per mode")
        if self.model == "chung-lu" and min(self.exponents) <= 1:
            raise ValueError("power-law exponents must exceed 1")
        kind = self.weights[0]
        if kind == "unit":
            return
        if kind not in ("uniform", "integer") or len(self.weights) != 3:
            raise ValueError(f"bad weight distribution {self.weights!r}")
        lo, hi = self.weights[1:]
        if lo > hi:
            raise ValueError("weight distribution needs lo <= hi")
        if kind == "integer" and lo < 1:
            raise ValueError("integer weights must be >= 1")
        if kind == "uniform" and hi <= 0:
            raise ValueError("uniform weights need hi > 0")


def parse_weights(text: str) -> tuple:
    """``unit``, ``uniform:lo,hi`` or ``integer:lo,hi``."""
    if text == "unit":
        return ("unit",)
    kind, _, rest = text.partition(":")
    try:
        lo, hi = (float(x) for x in rest.split(","))
    except ValueError:
        raise ValueError(f"bad weight distribution {text!r}") from None
    if kind == "integer":
        return ("integer", int(lo), int(hi))
    return (kind, lo, hi)


def _weights(spec: GenSpec, rng: np.random.Generator, k: int) -> np.ndarray:
    kind = spec.weights[0]
    if kind == "unit":
        return np.ones(k)
    lo, hi = spec.weights[1:]
    if kind == "integer":
        return rng.integers(lo, hi, endpoint=True, size=k).astype(float)
    w = np.round(rng.uniform(lo, hi, size=k) / WEIGHT_GRID) * WEIGHT_GRID
    return np.maximum(w, WEIGHT_GRID)


def _uniform_pairs(spec: GenSpec, rng: np.random.Generator) -> np.ndarray:
    if spec.m == 0:
        return np.empty(0, dtype=np.int64)
    chosen = rng.choice(spec.n1 * spec.n2, size=spec.m, replace=False)
    return np.sort(chosen)


def _chung_lu_pairs(spec: GenSpec, rng: np.random.Generator) -> np.ndarray:
    if spec.m == 0 or spec.n1 == 0 or spec.n2 == 0:
        return np.empty(0, dtype=np.int64)

    def expected(n, gamma):
        x = np.arange(1, n + 1, dtype=float) ** (-1.0 / (gamma - 1.0))
        return x * (spec.m / x.sum())

    a = expected(spec.n1, spec.exponents[0])
    b = expected(spec.n2, spec.exponents[1])
    out = []
    for i in range(spec.n1):
        probs = np.minimum(1.0, a[i] * b / spec.m)
        (js,) = np.nonzero(rng.random(spec.n2) < probs)
        out.append(i * spec.n2 + js)
    return np.concatenate(out)


def generate(spec: GenSpec) -> BipartiteNetwork:
    rng = np.random.Generator(np.random.Philox(spec.seed))
    pairs = _uniform_pairs(spec, rng) if spec.model == "uniform" else _chung_lu_pairs(spec, rng)
    weights = _weights(spec, rng, len(pairs))
    n1, n2 = spec.n1, spec.n2
    us, vs = np.divmod(pairs, n2) if n2 else (pairs, pairs)
    links = [
        Link(int(u), n1 + int(v), float(w)) for u, v, w in zip(us.tolist(), vs.tolist(), weights)
    ]
    labels = [f"r{i + 1}" for i in range(n1)] + [f"c{j + 1}" for j in range(n2)]
    return BipartiteNetwork(n1, n2, links, labels)
