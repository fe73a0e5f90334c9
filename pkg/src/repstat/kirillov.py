"""Coadjoint orbits versus conjugacy classes for small unitriangular groups.

For a unitriangular group N over F_p with Lie algebra n (strictly upper
triangular matrices), the orbit method matches irreducible representations
with coadjoint orbits: each orbit has size d^2 for the corresponding
irreducible dimension d, because the orbit is a symplectic F_p-space and a
maximal isotropic subspace has half its dimension.  This module verifies
that correspondence exhaustively, and also checks that the cruder hope
"d^2 multiset == conjugacy class size multiset" fails already for the
Heisenberg group.

Everything is brute force by design: the groups are small enough (at most
7^6 elements) that full enumeration is the most convincing oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from .qseries import _is_prime


class UnsupportedCharacteristicError(ValueError):
    """The truncated exp/log series needs p larger than the nilpotency class."""


def _bracket_entries(a: tuple[int, int], b: tuple[int, int]):
    """Commutator [E_a, E_b] of elementary matrices as {position: coeff}."""
    (i, j), (k, l) = a, b
    out: dict[tuple[int, int], int] = {}
    if j == k:
        out[(i, l)] = out.get((i, l), 0) + 1
    if l == i:
        out[(k, j)] = out.get((k, j), 0) - 1
    return out


@dataclass(frozen=True)
class NilAlgebra:
    """Strictly upper triangular matrices of a fixed size, as a Lie algebra.

    Basis vectors are the elementary matrices E_(i,j) for i < j, listed in
    lexicographic position order; coordinates of an algebra element are
    simply its strictly-upper entries.  Structure constants are integers,
    reduced mod p only at use time.
    """

    name: str
    matrix_size: int
    dim: int
    positions: tuple[tuple[int, int], ...]
    brackets: tuple[tuple[tuple[int, int], tuple[tuple[int, int], ...]], ...]
    nilpotency_class: int
    derived_dim: int


def _build_strictly_upper(name: str, m: int) -> NilAlgebra:
    positions = tuple((i, j) for i in range(m) for j in range(i + 1, m))
    index = {pos: k for k, pos in enumerate(positions)}
    dim = len(positions)

    def bracket_vec(u: dict[int, int], v: dict[int, int]) -> dict[int, int]:
        out: dict[int, int] = {}
        for a, ca in u.items():
            for b, cb in v.items():
                for pos, c in _bracket_entries(positions[a], positions[b]).items():
                    k = index[pos]
                    out[k] = out.get(k, 0) + ca * cb * c
        return {k: c for k, c in out.items() if c}

    basis = [{k: 1} for k in range(dim)]
    brackets = []
    for a in range(dim):
        for b in range(a + 1, dim):
            vec = bracket_vec(basis[a], basis[b])
            if vec:
                brackets.append(((a, b), tuple(sorted(vec.items()))))

    # Jacobi identity over the integers, hence over every F_p at once.
    for a in range(dim):
        for b in range(dim):
            for c in range(dim):
                acc: dict[int, int] = {}
                for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
                    for k, v in bracket_vec(basis[x], bracket_vec(basis[y], basis[z])).items():
                        acc[k] = acc.get(k, 0) + v
                if any(acc.values()):
                    raise AssertionError(f"Jacobi identity fails for {name}")

    # Lower central series by index spans (each basis bracket lands on a
    # single basis vector here, so spans are plain index sets).
    for _, vec in brackets:
        assert len(vec) == 1
    layer = set(range(dim))
    series = [layer]
    while layer:
        nxt = set()
        for a in range(dim):
            for b in layer:
                u, v = (a, b) if a < b else (b, a)
                if a != b:
                    for (pair, vec) in brackets:
                        if pair == (u, v):
                            nxt.update(k for k, _ in vec)
        series.append(nxt)
        if nxt == layer:
            raise AssertionError(f"{name} is not nilpotent")
        layer = nxt
    nilpotency_class = len(series) - 1
    derived_dim = len(series[1])
    return NilAlgebra(
        name=name,
        matrix_size=m,
        dim=dim,
        positions=positions,
        brackets=tuple(brackets),
        nilpotency_class=nilpotency_class,
        derived_dim=derived_dim,
    )


HEIS3 = _build_strictly_upper("heis3", 3)
UT4 = _build_strictly_upper("ut4", 4)
ALGEBRAS = {"heis3": HEIS3, "ut4": UT4}


def check_prime(alg: NilAlgebra, p: int) -> None:
    """Admissibility: prime p with p > nilpotency class (and p < 2^8).

    The truncated exponential divides by k! for k up to the class, so
    those factorials must be invertible mod p.  The boundary cases p = 2
    (heis3) and p in {2, 3} (ut4) are exactly where exp/log break down.
    """
    if not _is_prime(p) or p >= 256:
        raise ValueError(f"p must be a prime below 256, got {p}")
    if p <= alg.nilpotency_class:
        raise UnsupportedCharacteristicError(
            f"{alg.name} needs p > {alg.nilpotency_class} for the truncated exp/log "
            f"series (denominators 1..{alg.nilpotency_class} must be invertible); got p={p}"
        )


def _identity(m: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(1 if i == j else 0 for j in range(m)) for i in range(m))


def _mat_mul(a, b, p: int):
    m = len(a)
    rng = range(m)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in rng) % p for j in rng) for i in rng
    )


def _mat_add(a, b, scale: int, p: int):
    m = len(a)
    return tuple(
        tuple((a[i][j] + scale * b[i][j]) % p for j in range(m)) for i in range(m)
    )


def _coords_to_matrix(coords, alg: NilAlgebra, p: int):
    mat = [[1 if i == j else 0 for j in range(alg.matrix_size)] for i in range(alg.matrix_size)]
    for k, (i, j) in enumerate(alg.positions):
        mat[i][j] = coords[k] % p
    return tuple(tuple(row) for row in mat)


def _nilpotent_from_coords(coords, alg: NilAlgebra, p: int):
    mat = [[0] * alg.matrix_size for _ in range(alg.matrix_size)]
    for k, (i, j) in enumerate(alg.positions):
        mat[i][j] = coords[k] % p
    return tuple(tuple(row) for row in mat)


def _matrix_to_coords(mat, alg: NilAlgebra) -> tuple[int, ...]:
    return tuple(mat[i][j] for i, j in alg.positions)


def exp_element(coords, alg: NilAlgebra, p: int):
    """exp of the algebra element with the given coordinates, as a matrix.

    Truncated series I + X + X^2/2! + ... ; it terminates because X is
    nilpotent of degree at most the matrix size.
    """
    check_prime(alg, p)
    x = _nilpotent_from_coords(coords, alg, p)
    result = _identity(alg.matrix_size)
    power = _identity(alg.matrix_size)
    kfact = 1
    for k in range(1, alg.matrix_size):
        power = _mat_mul(power, x, p)
        kfact *= k
        result = _mat_add(result, power, pow(kfact, -1, p), p)
    return result


def log_element(mat, alg: NilAlgebra, p: int) -> tuple[int, ...]:
    """Coordinates of log of a unitriangular matrix; inverse of exp_element."""
    check_prime(alg, p)
    m = alg.matrix_size
    y = tuple(
        tuple((mat[i][j] - (1 if i == j else 0)) % p for j in range(m)) for i in range(m)
    )
    acc = tuple(tuple(0 for _ in range(m)) for _ in range(m))
    power = _identity(m)
    for k in range(1, m):
        power = _mat_mul(power, y, p)
        sign = 1 if k % 2 == 1 else -1
        acc = _mat_add(acc, power, sign * pow(k, -1, p) % p, p)
    return _matrix_to_coords(acc, alg)


def _unitriangular_inverse(g, p: int):
    """Inverse via the terminating Neumann series of g = I + Y."""
    m = len(g)
    ident = _identity(m)
    y = tuple(
        tuple((g[i][j] - ident[i][j]) % p for j in range(m)) for i in range(m)
    )
    inv = ident
    power = ident
    for k in range(1, m):
        power = _mat_mul(power, y, p)
        inv = _mat_add(inv, power, (-1) ** k, p)
    return inv


def _generators(alg: NilAlgebra, p: int):
    """Elementary generators I + E_(i,j); they generate the whole group."""
    gens = []
    for k in range(alg.dim):
        coords = [0] * alg.dim
        coords[k] = 1
        g = _coords_to_matrix(coords, alg, p)
        gens.append((g, _unitriangular_inverse(g, p)))
    return gens


def _encode(coords, p: int) -> int:
    code = 0
    for v in reversed(coords):
        code = code * p + v
    return code


def _decode(code: int, p: int, dim: int) -> tuple[int, ...]:
    out = []
    for _ in range(dim):
        code, v = divmod(code, p)
        out.append(v)
    return tuple(out)


@lru_cache(maxsize=None)
def coadjoint_orbits(alg: NilAlgebra, p: int) -> tuple[int, ...]:
    """Orbit sizes of the coadjoint action on all p^dim functionals.

    A functional is a coordinate vector in the dual basis; the action of g
    sends lam to lam(g^-1 . g), computed through the precomputed matrix of
    Ad(g^-1) per generator.  Orbits are closed by breadth-first expansion,
    and the sizes partition p^dim.
    """
    check_prime(alg, p)
    dim = alg.dim
    rng = range(dim)
    maps = []
    for g, ginv in _generators(alg, p):
        # rows[j][k] = coefficient of basis k in g^-1 B_j g, so that the
        # transformed functional is lam'_j = sum_k rows[j][k] lam_k.
        rows = []
        for j in rng:
            coords = [0] * dim
            coords[j] = 1
            image = _mat_mul(_mat_mul(ginv, _nilpotent_from_coords(coords, alg, p), p), g, p)
            rows.append(_matrix_to_coords(image, alg))
        maps.append(rows)
    total = p**dim
    visited = bytearray(total)
    sizes = []
    for start in range(total):
        if visited[start]:
            continue
        visited[start] = 1
        stack = [_decode(start, p, dim)]
        size = 1
        while stack:
            lam = stack.pop()
            for rows in maps:
                mu = tuple(sum(rows[j][k] * lam[k] for k in rng) % p for j in rng)
                code = _encode(mu, p)
                if not visited[code]:
                    visited[code] = 1
                    size += 1
                    stack.append(mu)
        sizes.append(size)
    if sum(sizes) != total:
        raise AssertionError("orbits do not partition the dual space")
    return tuple(sorted(sizes))


@lru_cache(maxsize=None)
def conjugacy_classes(alg: NilAlgebra, p: int) -> tuple[int, ...]:
    """Conjugacy class sizes of the unitriangular group, by brute force.

    Elements are enumerated by their strictly-upper entries; classes are
    closed under conjugation by the elementary generators.
    """
    check_prime(alg, p)
    dim = alg.dim
    gens = _generators(alg, p)
    total = p**dim
    visited = bytearray(total)
    sizes = []
    for start in range(total):
        if visited[start]:
            continue
        visited[start] = 1
        stack = [_coords_to_matrix(_decode(start, p, dim), alg, p)]
        size = 1
        while stack:
            x = stack.pop()
            for g, ginv in gens:
                y = _mat_mul(_mat_mul(g, x, p), ginv, p)
                code = _encode(_matrix_to_coords(y, alg), p)
                if not visited[code]:
                    visited[code] = 1
                    size += 1
                    stack.append(y)
        sizes.append(size)
    if sum(sizes) != total:
        raise AssertionError("classes do not partition the group")
    return tuple(sorted(sizes))


@dataclass(frozen=True)
class OrbitReport:
    algebra: str
    p: int
    group_order: int
    orbit_sizes: tuple[int, ...]
    class_sizes: tuple[int, ...]
    rep_dims: tuple[int, ...]  # square roots of the orbit sizes
    match_kirillov: bool
    match_naive: bool


def _even_p_power_root(size: int, p: int) -> int:
    """sqrt of size, insisting that size is an even power of p."""
    e = 0
    s = size
    while s % p == 0:
        s //= p
        e += 1
    if s != 1 or e % 2 != 0:
        raise AssertionError(f"orbit size {size} is not an even power of {p}")
    root = isqrt(size)
    assert root * root == size
    return root


def kirillov_report(alg: NilAlgebra, p: int) -> OrbitReport:
    """Full orbit/class comparison for one algebra and prime.

    match_kirillov: the squared orbit-size roots sum to the group order
    and the number of fixed functionals equals the order of the
    abelianization (the count of 1-dimensional representations).

    match_naive: the orbit-size multiset coincides with the class-size
    multiset; false already for heis3, echoing the order-8 nilpotent
    groups where 1+1+1+1+4 and 1+1+2+2+2 cannot be matched term by term.
    """
    orbit_sizes = coadjoint_orbits(alg, p)
    class_sizes = conjugacy_classes(alg, p)
    group_order = p**alg.dim
    rep_dims = tuple(_even_p_power_root(s, p) for s in orbit_sizes)
    fixed = sum(1 for s in orbit_sizes if s == 1)
    abelianization = p ** (alg.dim - alg.derived_dim)
    match_kirillov = (
        sum(d * d for d in rep_dims) == group_order and fixed == abelianization
    )
    match_naive = orbit_sizes == class_sizes
    return OrbitReport(
        algebra=alg.name,
        p=p,
        group_order=group_order,
        orbit_sizes=orbit_sizes,
        class_sizes=class_sizes,
        rep_dims=rep_dims,
        match_kirillov=match_kirillov,
        match_naive=match_naive,
    )
