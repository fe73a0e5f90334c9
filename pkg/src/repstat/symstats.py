"""Dimension and conjugacy-class statistics of symmetric groups.

All counts are exact arbitrary-precision integers; floating point enters
only through natural logarithms of those integers, taken with ln_big so
that accuracy does not degrade when the integers outgrow a double.

Exact identities maintained throughout (and re-verified on every sweep):

    sum of dim           = number of involutions in S_n
    sum of dim^2         = n!
    sum of class sizes   = n!    (the class equation)
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .partitions import Partition, conjugate, enumerate_partitions, hook_lengths, partition_count, to_frequency

DEFAULT_SWEEP_CAP = 50

_LN2 = math.log(2)


class IntegrityError(RuntimeError):
    """An exact identity that must hold by theorem failed; indicates a bug."""


class CapExceededError(RuntimeError):
    """A full-enumeration request exceeded the configured size cap."""

    def __init__(self, n: int, cap: int):
        super().__init__(f"n={n} exceeds the sweep cap {cap}; raise it explicitly to proceed")
        self.n = n
        self.cap = cap


def ln_big(x: int) -> float:
    """Natural log of a positive integer of any size.

    Keeps a 64-bit mantissa and corrects with the discarded bit count, so
    the result is accurate to well over 12 significant digits even when x
    itself would overflow a double.
    """
    if x <= 0:
        raise ValueError(f"ln_big needs a positive integer, got {x}")
    shift = x.bit_length() - 64
    if shift <= 0:
        return math.log(x)
    return math.log(x >> shift) + shift * _LN2


def ln_fraction(r: Fraction) -> float:
    """Natural log of a positive rational, exact-integer logs on both sides."""
    if r <= 0:
        raise ValueError(f"ln_fraction needs a positive rational, got {r}")
    return ln_big(r.numerator) - ln_big(r.denominator)


def dimension(lam: Partition) -> int:
    """Dimension of the irreducible representation of S_n labelled by lam.

    Hook-length formula: n! divided by the product of all hook lengths.
    The division is exact by theorem; a nonzero remainder is reported as
    an internal defect rather than silently truncated.
    """
    prod = 1
    for row in hook_lengths(lam):
        for h in row:
            prod *= h
    d, rem = divmod(factorial(lam.n), prod)
    if rem:
        raise IntegrityError(f"hook product does not divide n! for {lam}")
    return d


def class_size(lam: Partition) -> int:
    """Size of the conjugacy class of cycle type lam in S_n.

    n! / prod_i (i^a_i * a_i!) where a_i is the multiplicity of part i.
    """
    denom = 1
    for value, mult in to_frequency(lam).freq:
        denom *= value**mult * factorial(mult)
    return factorial(lam.n) // denom


@lru_cache(maxsize=None)
def involution_count(n: int) -> int:
    """Number of involutions in S_n (elements with s^2 = 1).

    Direct sum over the number k of 2-cycles, cross-checked against the
    recurrence I(n) = I(n-1) + (n-1) I(n-2).
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    total = sum(
        factorial(n) // (2**k * factorial(k) * factorial(n - 2 * k))
        for k in range(n // 2 + 1)
    )
    prev2, prev1 = 1, 1  # I(0), I(1)
    for m in range(2, n + 1):
        prev2, prev1 = prev1, prev1 + (m - 1) * prev2
    if prev1 != total:
        raise IntegrityError(f"involution formula and recurrence disagree at n={n}")
    return total


@dataclass(frozen=True)
class DimRecord:
    lam: Partition
    dim: int
    class_size: int
    log_dim_sq: float  # ln(dim^2), nats
    log_class: float  # ln(class size), nats


@lru_cache(maxsize=None)
def _sweep_records(n: int) -> tuple[DimRecord, ...]:
    records = []
    sum_dim = 0
    sum_dim_sq = 0
    sum_class = 0
    for lam in enumerate_partitions(n):
        d = dimension(lam)
        c = class_size(lam)
        records.append(DimRecord(lam, d, c, 2.0 * ln_big(d), ln_big(c)))
        sum_dim += d
        sum_dim_sq += d * d
        sum_class += c
    if sum_dim != involution_count(n) or sum_dim_sq != factorial(n) or sum_class != factorial(n):
        raise IntegrityError(f"moment identities failed at n={n}")
    return tuple(records)


def _check_cap(n: int, cap: int) -> None:
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    if n > cap:
        raise CapExceededError(n, cap)


def sweep(n: int, cap: int = DEFAULT_SWEEP_CAP):
    """One DimRecord per partition of n, in enumeration order.

    Verifies the three moment identities exactly before yielding anything.
    """
    _check_cap(n, cap)
    yield from _sweep_records(n)


def max_dimension(n: int, cap: int = DEFAULT_SWEEP_CAP) -> tuple[int, list[Partition]]:
    """Largest irreducible dimension of S_n and every partition attaining it.

    The attaining set is closed under conjugation since dim is invariant
    under transposing the diagram.
    """
    _check_cap(n, cap)
    best = 0
    argmax: list[Partition] = []
    for rec in _sweep_records(n):
        if rec.dim > best:
            best = rec.dim
            argmax = [rec.lam]
        elif rec.dim == best:
            argmax.append(rec.lam)
    return best, argmax


def plancherel_mass(lam: Partition) -> Fraction:
    """dim^2 / n! in lowest terms; these masses sum to 1 over all lam of n."""
    d = dimension(lam)
    return Fraction(d * d, factorial(lam.n))


@dataclass(frozen=True)
class AngleReport:
    """Squared cosine between the dimension vector and the all-ones vector."""

    n: int
    sum_dim: int  # = involution count
    sum_dim_sq: int  # = n!
    count: int  # = p(n)
    cos_sq: float  # sum_dim^2 / (count * sum_dim_sq)
    log_ratio: float  # ln of cos_sq via exact-integer logs
    predicted_log: float  # (2 - pi*sqrt(2/3))*sqrt(n) + ln(n)/2


def cos_sq_exact(n: int) -> Fraction:
    """I(n)^2 / (p(n) * n!) as an exact rational."""
    i = involution_count(n)
    return Fraction(i * i, partition_count(n) * factorial(n))


def angle_report(n: int, cap: int = DEFAULT_SWEEP_CAP) -> AngleReport:
    _check_cap(n, cap)
    inv = involution_count(n)
    pn = partition_count(n)
    fact = factorial(n)
    log_ratio = 2.0 * ln_big(inv) - ln_big(pn) - ln_big(fact)
    predicted = (2.0 - math.pi * math.sqrt(2.0 / 3.0)) * math.sqrt(n) + math.log(n) / 2.0
    return AngleReport(
        n=n,
        sum_dim=inv,
        sum_dim_sq=fact,
        count=pn,
        cos_sq=float(cos_sq_exact(n)),
        log_ratio=log_ratio,
        predicted_log=predicted,
    )


def angle_decay_constant() -> float:
    """pi*sqrt(2/3) - 2, the decay rate governing cos_sq; about 0.56510."""
    return math.pi * math.sqrt(2.0 / 3.0) - 2.0


def asymptotic_estimates(n: int) -> tuple[float, float, float, float]:
    """Logs (nats) of the classical asymptotic estimates at finite n.

    Returns (log alpha, log beta, log gamma, log avg) where

        alpha(n) = exp(pi sqrt(2n/3)) / (4 n sqrt(3))      ~ p(n)
        beta(n)  = (n/e)^(n/2) e^sqrt(n) / (sqrt(2) e^(1/4)) ~ involutions
        gamma(n) = sqrt(2 pi n) (n/e)^n                    ~ n!
        avg(n)   = 2 sqrt(6) (n/e)^(n/2) n
                   * exp(sqrt(n)(1 - pi sqrt(2/3)) - 1/4)  ~ mean dimension

    Everything stays in log space so no value overflows a double.
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    rn = math.sqrt(n)
    ln_n = math.log(n)
    log_alpha = math.pi * math.sqrt(2.0 * n / 3.0) - math.log(4.0 * math.sqrt(3.0) * n)
    log_beta = 0.5 * n * (ln_n - 1.0) + rn - 0.5 * _LN2 - 0.25
    log_gamma = 0.5 * math.log(2.0 * math.pi * n) + n * (ln_n - 1.0)
    log_avg = (
        math.log(2.0 * math.sqrt(6.0))
        + 0.5 * n * (ln_n - 1.0)
        + ln_n
        + rn * (1.0 - math.pi * math.sqrt(2.0 / 3.0))
        - 0.25
    )
    return log_alpha, log_beta, log_gamma, log_avg


@dataclass(frozen=True)
class IntervalCounts:
    """How many ln(dim^2) resp. ln(class size) values land in a window.

    The window is [alpha * n ln n, beta * n ln n], closed at both ends
    with ties broken toward inclusion.
    """

    n: int
    alpha: float
    beta: float
    count_dim_sq: int
    count_class: int


def interval_counts(
    n: int, alpha: float, beta: float, cap: int = DEFAULT_SWEEP_CAP
) -> IntervalCounts:
    if not 0.0 <= alpha < beta <= 1.0:
        raise ValueError(f"need 0 <= alpha < beta <= 1, got alpha={alpha}, beta={beta}")
    _check_cap(n, cap)
    scale = n * math.log(n)
    lo, hi = alpha * scale, beta * scale
    count_a = 0
    count_b = 0
    for rec in _sweep_records(n):
        if lo <= rec.log_dim_sq <= hi:
            count_a += 1
        if lo <= rec.log_class <= hi:
            count_b += 1
    return IntervalCounts(n, alpha, beta, count_a, count_b)


def layer_sums(n: int, k: int, cap: int = DEFAULT_SWEEP_CAP) -> tuple[float, float]:
    """Sums of ln(dim^2) and ln(class size) over partitions with largest part k."""
    _check_cap(n, cap)
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}")
    a = 0.0
    b = 0.0
    for rec in _sweep_records(n):
        if rec.lam.parts[0] == k:
            a += rec.log_dim_sq
            b += rec.log_class
    return a, b


def fraction_near_max(
    n: int, threshold, cap: int = DEFAULT_SWEEP_CAP
) -> tuple[Fraction, bool]:
    """Proportion C of partitions whose dimension is within a factor of the max.

    C = #{lam : threshold * m_n <= dim <= m_n} / p(n), exact.  Also reports
    whether (threshold * C)^2 <= exp(-0.9 * a0 * sqrt(n)) with a0 the decay
    constant pi*sqrt(2/3) - 2, compared in log space.
    """
    frac = Fraction(threshold)
    if not 0 < frac < 1:
        raise ValueError(f"threshold must lie strictly between 0 and 1, got {threshold}")
    _check_cap(n, cap)
    records = _sweep_records(n)
    m, _ = max_dimension(n, cap)
    near = sum(1 for rec in records if rec.dim >= frac * m)
    c = Fraction(near, partition_count(n))
    bound_ok = 2.0 * ln_fraction(frac * c) <= -0.9 * angle_decay_constant() * math.sqrt(n)
    return c, bound_ok


def vk_ratio(n: int, cap: int = DEFAULT_SWEEP_CAP) -> float:
    """-ln(m_n^2 / n!) / sqrt(n), the concentration rate of the max dimension."""
    _check_cap(n, cap)
    m, _ = max_dimension(n, cap)
    return (ln_big(factorial(n)) - 2.0 * ln_big(m)) / math.sqrt(n)


@dataclass(frozen=True)
class Histogram:
    bin_edges: tuple[float, ...]  # length bins+1, strictly increasing
    counts: tuple[int, ...]  # length bins, sums to the input length


def histogram(values, bins: int) -> Histogram:
    """Equal-width histogram over [min, max] of the data.

    A value equal to an interior edge goes to the bin on its right; the
    maximum goes to the last bin.  Constant data degenerates to a single
    bin spanning a unit interval around the value, so the count total is
    always conserved.
    """
    values = list(values)
    if not values:
        raise ValueError("histogram needs at least one value")
    if bins < 1:
        raise ValueError(f"bins must be at least 1, got {bins}")
    lo = min(values)
    hi = max(values)
    if lo == hi:
        return Histogram((lo - 0.5, lo + 0.5), (len(values),))
    edges = [lo + (hi - lo) * i / bins for i in range(bins + 1)]
    edges[-1] = hi
    counts = [0] * bins
    for v in values:
        idx = min(int((v - lo) / (hi - lo) * bins), bins - 1)
        # Repair float placement error so the documented edge rule holds.
        while idx > 0 and v < edges[idx]:
            idx -= 1
        while idx < bins - 1 and v >= edges[idx + 1]:
            idx += 1
        counts[idx] += 1
    return Histogram(tuple(edges), tuple(counts))
