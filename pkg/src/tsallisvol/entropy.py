"""Shannon and Tsallis entropies, q-deformed functions and property probes.

Entropies are dimensionless (Boltzmann constant set to 1) and use the
natural logarithm. Zero-probability cells contribute nothing, for every
q >= 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Mapping

import numpy as np

from .errors import DomainError, SupportMismatch
from .probability import ProbDist, as_probs, product_dist

# |q - 1| at or below this is evaluated as the Shannon limit
Q_ONE_EPS = 1e-9

FINITE_VARIANCE_Q = (1.0, 5.0 / 3.0)
DEFAULT_Q_VALUES = (1.4, 1.45, 1.5)


def check_q(q: float) -> float:
    q = float(q)
    if not (math.isfinite(q) and q >= 0):
        raise DomainError(f"entropic index must be a nonnegative real, got {q!r}")
    return q


def finite_variance_q(q: float) -> bool:
    """Advisory: True when 1 <= q < 5/3, the range compatible with finite variance."""
    lo, hi = FINITE_VARIANCE_Q
    return lo <= q < hi


def _nonzero(d) -> np.ndarray:
    p = as_probs(d)
    return p[p > 0]


def shannon_entropy(d) -> float:
    p = _nonzero(d)
    return float(max(-np.dot(p, np.log(p)), 0.0))


def tsallis_entropy(d, q: float) -> float:
    """S_q = (1 - sum p_i^q) / (q - 1), Shannon at q = 1.

    Evaluated as -sum p_i (p_i^(q-1) - 1) / (q - 1), which equals the
    textbook form when sum p_i = 1 and avoids the cancellation in
    1 - sum p_i^q near q = 1.
    """
    q = check_q(q)
    if abs(q - 1.0) <= Q_ONE_EPS:
        return shannon_entropy(d)
    p = _nonzero(d)
    a = q - 1.0
    x = a * np.log(p)
    far = x > 1.0
    terms = np.empty_like(p)
    terms[~far] = p[~far] * np.expm1(x[~far])
    terms[far] = p[far] ** q - p[far]
    return max(-math.fsum(terms) / a, 0.0)


def q_exponential(x: float, q: float) -> float:
    """e_q^x = [1 + (1-q) x]^(1/(1-q)); e^x at q = 1."""
    if q == 1:
        return math.exp(x)
    base = 1.0 + (1.0 - q) * x
    if base <= 0:
        raise DomainError(f"1 + (1-q)x = {base!r} <= 0 for q={q!r}, x={x!r}")
    return math.exp(math.log1p((1.0 - q) * x) / (1.0 - q))


def q_logarithm(x: float, q: float) -> float:
    """ln_q x = (x^(1-q) - 1) / (1 - q); ln x at q = 1."""
    if not x > 0:
        raise DomainError(f"q-logarithm needs x > 0, got {x!r}")
    if q == 1:
        return math.log(x)
    return math.expm1((1.0 - q) * math.log(x)) / (1.0 - q)


def equiprobable_entropy(W: int, q: float) -> float:
    """Entropy of the uniform distribution over W cells, the maximum on W cells."""
    if int(W) != W or W < 1:
        raise DomainError(f"W must be a positive integer, got {W!r}")
    return q_logarithm(float(W), check_q(q))


def pseudo_additivity_check(a, b, q: float) -> float:
    """S_q(A+B) - [S_q(A) + S_q(B) + (1-q) S_q(A) S_q(B)] for independent A, B."""
    q = check_q(q)
    sa, sb = tsallis_entropy(a, q), tsallis_entropy(b, q)
    joint = tsallis_entropy(product_dist(a, b), q)
    return joint - (sa + sb + (1.0 - q) * sa * sb)


def jackson_derivative(h: Callable[[float], float], x: float, q: float) -> float:
    """Dilatation difference quotient (h(qx) - h(x)) / (qx - x)."""
    if q == 1 or x == 0:
        raise DomainError("Jackson derivative needs q != 1 and x != 0")
    return (h(q * x) - h(x)) / (q * x - x)


def jackson_entropy(d, q: float) -> float:
    """-[D_q sum p_i^x] at x = 1; at q = 1 the ordinary derivative gives Shannon."""
    q = check_q(q)
    if q == 1:
        return shannon_entropy(d)
    p = _nonzero(d)

    def h(x):
        return float(np.sum(p**x))

    return -jackson_derivative(h, 1.0, q)


def concavity_check(a, b, mu: float, q: float) -> float:
    """S_q(mu a + (1-mu) b) - [mu S_q(a) + (1-mu) S_q(b)]; >= 0 for q > 0."""
    q = check_q(q)
    pa, pb = as_probs(a), as_probs(b)
    if pa.size != pb.size:
        raise SupportMismatch(f"support sizes differ: {pa.size} vs {pb.size}")
    if not 0 < mu < 1:
        raise DomainError(f"mixing weight must lie in (0, 1), got {mu!r}")
    mix = ProbDist(np.clip(mu * pa + (1.0 - mu) * pb, 0.0, 1.0))
    return tsallis_entropy(mix, q) - (mu * tsallis_entropy(pa, q) + (1.0 - mu) * tsallis_entropy(pb, q))


def stability_probe(d, delta: float, q: float, trials: int = 100, seed=0) -> float:
    """Largest relative entropy change under random L1 perturbations of size delta.

    Each trial mixes ``d`` toward a random distribution r, p' = (1-t) p + t r,
    with t chosen so that sum |p_i - p'_i| = delta; p' stays normalized and
    nonnegative. The change is divided by the equiprobable maximum on the
    same support. This is a finite diagnostic only.
    """
    q = check_q(q)
    if not 0 <= delta <= 0.1:
        raise DomainError(f"delta must lie in [0, 0.1], got {delta!r}")
    p = as_probs(d)
    n = p.size
    s_max = equiprobable_entropy(n, q)
    if delta == 0 or s_max == 0:
        return 0.0
    s0 = tsallis_entropy(p, q)
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(trials):
        r = rng.dirichlet(np.ones(n))
        dist = float(np.abs(p - r).sum())
        if dist == 0:
            continue
        t = min(delta / dist, 1.0)
        pp = (1.0 - t) * p + t * r
        pp = pp / pp.sum()
        worst = max(worst, abs(s0 - tsallis_entropy(pp, q)) / s_max)
    return worst


@dataclass(frozen=True)
class EntropyReport:
    label: str
    shannon: float
    tsallis: Mapping[float, float] = field(default_factory=dict)


def entropy_report(label: str, d, q_values=DEFAULT_Q_VALUES) -> EntropyReport:
    return EntropyReport(
        label=label,
        shannon=shannon_entropy(d),
        tsallis={float(q): tsallis_entropy(d, q) for q in q_values},
    )
