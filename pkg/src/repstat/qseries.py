"""Exact polynomial-in-q and truncated-series machinery for GL_n(F_q).

Covers the class-count polynomials C_n(q) from the Feit-Fine generating
function, Gow's degree-sum polynomials B_n(q), group orders D_n(q), the
Gauss theta/eta identity, the limit constant gamma(q), and the closed-form
GL_2 census.  Everything here is exact integer or rational arithmetic;
floats never appear except in callers' reports.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple


class UnsupportedFieldError(ValueError):
    """Raised when matrix enumeration is requested over a non-prime field."""


class QPolynomial:
    """Polynomial in q with arbitrary-precision integer coefficients.

    coeffs[k] is the coefficient of q^k; the representation is normalized
    (no trailing zeros), and the zero polynomial has an empty coeff tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [int(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial conventionally at -1."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        return isinstance(other, QPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return QPolynomial(out)

    def __neg__(self) -> "QPolynomial":
        return QPolynomial(-v for v in self.coeffs)

    def __sub__(self, other: "QPolynomial") -> "QPolynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return QPolynomial(other * v for v in self.coeffs)
        if not isinstance(other, QPolynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return QPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return QPolynomial(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "QPolynomial":
        """Multiply by q^k."""
        if self.is_zero():
            return self
        return QPolynomial((0,) * k + self.coeffs)

    def evaluate(self, x):
        """Horner evaluation; exact for int or Fraction arguments."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def serialize(self) -> str:
        """Human form ``c0 + c1*q + c2*q^2 + ...`` including zero terms."""
        if self.is_zero():
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append(f"{c}*q")
            else:
                terms.append(f"{c}*q^{k}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"QPolynomial({list(self.coeffs)})"


P_ZERO = QPolynomial()
P_ONE = QPolynomial([1])
P_Q = QPolynomial([0, 1])


def q_power(k: int) -> QPolynomial:
    return P_ONE.shift(k)


class TruncatedSeries:
    """Power series in t to a fixed order, with QPolynomial coefficients.

    Multiplication discards every power of t beyond the order, so the ring
    is closed and products may be taken in any association order.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs):
        coeffs = tuple(coeffs)
        if len(coeffs) != order + 1:
            raise ValueError(f"need {order + 1} coefficients, got {len(coeffs)}")
        self.order = order
        self.coeffs = coeffs

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls.from_terms(order, {0: P_ONE})

    @classmethod
    def from_terms(cls, order: int, terms: dict[int, QPolynomial]) -> "TruncatedSeries":
        coeffs = [P_ZERO] * (order + 1)
        for power, poly in terms.items():
            if 0 <= power <= order:
                coeffs[power] = coeffs[power] + poly
        return cls(order, coeffs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TruncatedSeries)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if self.order != other.order:
            raise ValueError("series orders differ")
        n = self.order
        out = [P_ZERO] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return TruncatedSeries(n, out)


@lru_cache(maxsize=None)
def feit_fine(nmax: int) -> tuple[QPolynomial, ...]:
    """Class-count polynomials C_0..C_nmax for GL_n(F_q).

    Expands prod_{r>=1} (1 - t^r) / (1 - q t^r) to order nmax, inverting
    each (1 - q t^r) by its geometric series sum_k q^k t^{rk}.  C_n is
    monic of degree n; C_n(q) counts the conjugacy classes of GL_n(F_q).
    """
    if nmax < 0:
        raise ValueError(f"nmax must be nonnegative, got {nmax}")
    series = TruncatedSeries.one(nmax)
    for r in range(1, nmax + 1):
        series = series * TruncatedSeries.from_terms(nmax, {0: P_ONE, r: -P_ONE})
        geometric = {r * k: q_power(k) for k in range(nmax // r + 1)}
        series = series * TruncatedSeries.from_terms(nmax, geometric)
    return series.coeffs


def gow_sum(n: int) -> QPolynomial:
    """Sum of the irreducible character degrees of GL_n(F_q), as a polynomial.

    Equal to the number of invertible symmetric matrices:
    q^(m^2+m) (q^(2m+1)-1)(q^(2m-1)-1)...(q-1) for n = 2m+1, and
    q^(m^2+m) (q^(2m-1)-1)(q^(2m-3)-1)...(q-1) for n = 2m.
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    m = n // 2
    poly = q_power(m * m + m)
    top = n if n % 2 == 1 else n - 1
    for e in range(top, 0, -2):
        poly = poly * (q_power(e) - P_ONE)
    return poly


def gl_order(n: int) -> QPolynomial:
    """|GL_n(F_q)| = (q^n - 1)(q^n - q) ... (q^n - q^(n-1)), degree n^2."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    poly = P_ONE
    for i in range(n):
        poly = poly * (q_power(n) - q_power(i))
    return poly


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _det_mod(mat: list[list[int]], p: int) -> int:
    """Determinant mod p by cofactor expansion; fine for n <= 3."""
    n = len(mat)
    if n == 1:
        return mat[0][0] % p
    if n == 2:
        return (mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0]) % p
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in mat[1:]]
        cof = mat[0][j] * _det_mod(minor, p)
        total += cof if j % 2 == 0 else -cof
    return total % p


def symmetric_invertible_count(n: int, q: int) -> int:
    """Count invertible symmetric n x n matrices over F_q by brute force.

    Exhaustive enumeration over all q^(n(n+1)/2) symmetric matrices; the
    independent check for gow_sum.  Restricted to prime q and tiny n so
    the enumeration stays instantaneous.
    """
    if not _is_prime(q):
        raise UnsupportedFieldError(f"q={q} is not prime; only prime fields are enumerated")
    if not (1 <= n <= 3 and q <= 5):
        raise ValueError(f"brute force supports n <= 3 and q <= 5, got n={n}, q={q}")
    entries = n * (n + 1) // 2
    positions = [(i, j) for i in range(n) for j in range(i, n)]
    count = 0
    for code in range(q**entries):
        mat = [[0] * n for _ in range(n)]
        c = code
        for i, j in positions:
            c, v = divmod(c, q)
            mat[i][j] = v
            mat[j][i] = v
        if _det_mod(mat, q) != 0:
            count += 1
    return count


def _int_series_mul(a: list[int], b: list[int], order: int) -> list[int]:
    out = [0] * (order + 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j in range(order + 1 - i):
            if b[j]:
                out[i + j] += x * b[j]
    return out


def gauss_identity_check(order: int) -> bool:
    """Check sum_{i>=0} t^(i(i+1)/2) = prod_{i>=1} (1-t^(2i))/(1-t^(2i-1)).

    Both sides are expanded as exact integer series to the given order and
    compared coefficient by coefficient.
    """
    if order < 1:
        raise ValueError(f"order must be at least 1, got {order}")
    lhs = [0] * (order + 1)
    i = 0
    while i * (i + 1) // 2 <= order:
        lhs[i * (i + 1) // 2] = 1
        i += 1
    rhs = [0] * (order + 1)
    rhs[0] = 1
    i = 1
    while 2 * i - 1 <= order:
        if 2 * i <= order:
            numerator = [0] * (order + 1)
            numerator[0] = 1
            numerator[2 * i] = -1
            rhs = _int_series_mul(rhs, numerator, order)
        geometric = [1 if k % (2 * i - 1) == 0 else 0 for k in range(order + 1)]
        rhs = _int_series_mul(rhs, geometric, order)
        i += 1
    return lhs == rhs


class GammaPartialSum(NamedTuple):
    value: Fraction
    tail_bound: Fraction
    terms: int


def gamma_q(q, terms: int) -> GammaPartialSum:
    """Partial sum of gamma(q) = sum_{i>=0} q^(-i(i+1)/2), exact.

    Monotone increasing in the number of terms.  The reported tail bound
    q^(-T(T+1)/2) / (1 - q^(-(T+1))) is rigorous for any rational q > 1
    and is at most 2 q^(-T(T+1)/2) once q >= 2.
    """
    q = Fraction(q)
    if q <= 1:
        raise ValueError(f"q must exceed 1, got {q}")
    if terms < 1:
        raise ValueError(f"terms must be at least 1, got {terms}")
    value = sum((Fraction(1) / q ** (i * (i + 1) // 2) for i in range(terms)), Fraction(0))
    head = Fraction(1) / q ** (terms * (terms + 1) // 2)
    tail_bound = head / (1 - Fraction(1) / q ** (terms + 1))
    return GammaPartialSum(value, tail_bound, terms)


def log_constant_ratio(n: int, q) -> Fraction:
    """B_n(q)^2 / (C_n(q) * D_n(q)) as an exact rational.

    B, C, D are the degree sum, the class count, and the group order of
    GL_n(F_q); for fixed q >= 2 the ratio tends to 1/gamma(q) as n grows.
    """
    q = Fraction(q)
    if q == 1:
        raise ValueError("q=1 makes the group order vanish")
    if q <= 1:
        raise ValueError(f"q must exceed 1, got {q}")
    b = Fraction(gow_sum(n).evaluate(q))
    c = Fraction(feit_fine(n)[n].evaluate(q))
    d = Fraction(gl_order(n).evaluate(q))
    return b * b / (c * d)


# The classical GL_2(F_q) census. Representations: (count, dimension);
# conjugacy classes: (count, size). The elliptic classes (diagonalizable
# only over F_{q^2}) are printed in the classical table with size
# (q^2-q)/2, while the centralizer index gives q^2-q; gl2_census carries
# both candidates and reports which one the class equation confirms.
_REP_COUNT_X2 = (
    QPolynomial([-2, 2]),  # 2(q-1) central characters
    QPolynomial([-2, 2]),  # 2(q-1) twists of Steinberg
    QPolynomial([2, -3, 1]),  # (q-1)(q-2), principal series (doubled)
    QPolynomial([0, -1, 1]),  # q^2-q, discrete series (doubled)
)
_REP_DIM = (
    P_ONE,
    P_Q,
    QPolynomial([1, 1]),  # q+1
    QPolynomial([-1, 1]),  # q-1
)
_CLASS_COUNT_X2 = _REP_COUNT_X2
_CLASS_SIZE = (
    P_ONE,
    QPolynomial([-1, 0, 1]),  # q^2-1, central times unipotent
    QPolynomial([0, 1, 1]),  # q(q+1), split semisimple
    QPolynomial([0, -1, 1]),  # q^2-q, elliptic (confirmed by the class equation)
)


@dataclass(frozen=True)
class Gl2Census:
    q: int
    group_order: int
    rep_rows: tuple[tuple[int, int], ...]  # (count, dimension)
    class_rows: tuple[tuple[int, int], ...]  # (count, size), confirmed sizes
    class_rows_printed: tuple[tuple[int, int], ...]  # classical table as printed
    elliptic_candidates: tuple[tuple[int, bool], ...]  # (size, passes class eq)
    rep_identity_ok: bool  # sum count*dim^2 == |GL_2|
    class_identity_ok: bool  # sum count*size == |GL_2| with confirmed sizes
    rep_identity_symbolic_ok: bool
    class_identity_symbolic_ok: bool
    class_count_total: int  # number of conjugacy classes == C_2(q)


def gl2_census(q: int) -> Gl2Census:
    """The four representation and four class families of GL_2(F_q).

    Verifies sum count*dim^2 = |GL_2| and sum count*size = |GL_2| both
    numerically at the given q and symbolically as polynomial identities
    (with counts doubled so every polynomial stays integer).
    """
    if q < 2:
        raise ValueError(f"q must be at least 2, got {q}")
    order_poly = gl_order(2)
    order = order_poly.evaluate(q)
    rep_rows = tuple(
        (c2.evaluate(q) // 2, d.evaluate(q)) for c2, d in zip(_REP_COUNT_X2, _REP_DIM)
    )
    class_rows = tuple(
        (c2.evaluate(q) // 2, s.evaluate(q)) for c2, s in zip(_CLASS_COUNT_X2, _CLASS_SIZE)
    )
    elliptic_count = class_rows[3][0]
    base = sum(c * s for c, s in class_rows[:3])
    full_size = q * q - q
    half_size = (q * q - q) // 2
    candidates = tuple(
        (size, base + elliptic_count * size == order) for size in (full_size, half_size)
    )
    class_rows_printed = class_rows[:3] + ((elliptic_count, half_size),)
    rep_ok = sum(c * d * d for c, d in rep_rows) == order
    class_ok = sum(c * s for c, s in class_rows) == order
    two_order = 2 * order_poly
    rep_sym = sum(
        (c2 * d * d for c2, d in zip(_REP_COUNT_X2, _REP_DIM)), P_ZERO
    ) == two_order
    class_sym = sum(
        (c2 * s for c2, s in zip(_CLASS_COUNT_X2, _CLASS_SIZE)), P_ZERO
    ) == two_order
    return Gl2Census(
        q=q,
        group_order=order,
        rep_rows=rep_rows,
        class_rows=class_rows,
        class_rows_printed=class_rows_printed,
        elliptic_candidates=candidates,
        rep_identity_ok=rep_ok,
        class_identity_ok=class_ok,
        rep_identity_symbolic_ok=rep_sym,
        class_identity_symbolic_ok=class_sym,
        class_count_total=sum(c for c, _ in class_rows),
    )


def census_class_count_polynomial() -> QPolynomial:
    """Total number of GL_2 conjugacy classes from the census, symbolically.

    Summing the four doubled family counts and halving must reproduce the
    Feit-Fine polynomial C_2(q) = q^2 - 1; the test suite checks this.
    """
    doubled = sum(_CLASS_COUNT_X2, P_ZERO)
    return QPolynomial(v // 2 for v in doubled.coeffs)


@dataclass(frozen=True)
class LeadingTermReport:
    """SL_2 half-discrete-series dimensions vs PGL_2 order-2 class sizes.

    Each pair (2*dim^2, class size) shares the leading term q^2/2, so the
    ratio tends to 1; within_tolerance checks both ratios against 1 +- 5/q.
    """

    q: int
    pairs: tuple[tuple[int, int, Fraction], ...]  # (2*dim^2, class size, ratio)
    within_tolerance: bool


def sl2_pgl2_leading_check(q: int) -> LeadingTermReport:
    if q < 3 or q % 2 == 0:
        raise ValueError(f"q must be odd and at least 3, got {q}")
    pairs = []
    for dim, size in (((q + 1) // 2, q * (q + 1) // 2), ((q - 1) // 2, (q * q - q) // 2)):
        doubled = 2 * dim * dim
        pairs.append((doubled, size, Fraction(doubled, size)))
    tol = Fraction(5, q)
    ok = all(1 - tol <= ratio <= 1 + tol for _, _, ratio in pairs)
    return LeadingTermReport(q=q, pairs=tuple(pairs), within_tolerance=ok)
