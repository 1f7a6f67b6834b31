"""Exact class-function algebra on the hyperoctahedral group W_n.

Conjugacy classes and irreducible characters of W_n are both indexed by
bipartitions (alpha; beta) with |alpha| + |beta| = n: alpha collects the
positive cycle lengths of a signed permutation, beta the negative ones.
Everything is integer or Fraction arithmetic; no floats anywhere, so
identities are checked by equality rather than tolerance.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .partitions import Partition, partition_sort_key, partitions


@dataclass(frozen=True)
class Bipartition:
    alpha: Partition
    beta: Partition

    @property
    def n(self) -> int:
        return self.alpha.size + self.beta.size

    def __str__(self) -> str:
        return f"{self.alpha};{self.beta}"

    @classmethod
    def parse(cls, text: str) -> "Bipartition":
        a, _, b = text.partition(";")
        return cls(Partition.parse(a), Partition.parse(b))

    @classmethod
    def of(cls, alpha: tuple[int, ...], beta: tuple[int, ...] = ()) -> "Bipartition":
        return cls(Partition(alpha), Partition(beta))


def bipartition_sort_key(bp: Bipartition) -> tuple:
    return (
        bp.n,
        -bp.alpha.size,
        partition_sort_key(bp.alpha),
        partition_sort_key(bp.beta),
    )


@lru_cache(maxsize=None)
def bipartitions(n: int) -> tuple[Bipartition, ...]:
    """All bipartitions of n in the canonical order: |alpha| descending,
    then reverse-lexicographic within each coordinate."""
    out = []
    for a in range(n, -1, -1):
        for alpha in partitions(a):
            for beta in partitions(n - a):
                out.append(Bipartition(alpha, beta))
    return tuple(out)


def group_order(n: int) -> int:
    return 2**n * factorial(n)


@lru_cache(maxsize=None)
def centralizer_order(c: Bipartition) -> int:
    """Centralizer order of the class (alpha; beta) in W_n.

    A positive i-cycle block of multiplicity m contributes i^m m! 2^m,
    a negative one (2i)^m m!; the two expressions agree as (2i)^m m!.
    """
    z = 1
    for v, m in Counter(c.alpha.parts).items():
        z *= (2 * v) ** m * factorial(m)
    for v, m in Counter(c.beta.parts).items():
        z *= (2 * v) ** m * factorial(m)
    return z


@lru_cache(maxsize=None)
def class_size(c: Bipartition) -> int:
    return group_order(c.n) // centralizer_order(c)


class ClassFunction:
    """An exact-valued function on the conjugacy classes of W_n."""

    __slots__ = ("n", "values")

    def __init__(self, n: int, values: dict[Bipartition, int | Fraction]):
        self.n = n
        self.values = {c: values.get(c, 0) for c in bipartitions(n)}

    def at(self, c: Bipartition):
        return self.values.get(c, 0)

    @property
    def degree(self):
        return self.at(Bipartition.of((1,) * self.n))

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        if self.n != other.n:
            raise ValueError("degree mismatch")
        return ClassFunction(
            self.n, {c: self.values[c] + other.values[c] for c in self.values}
        )

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        if self.n != other.n:
            raise ValueError("degree mismatch")
        return ClassFunction(
            self.n, {c: self.values[c] - other.values[c] for c in self.values}
        )

    def __rmul__(self, scalar) -> "ClassFunction":
        return ClassFunction(self.n, {c: scalar * v for c, v in self.values.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ClassFunction)
            and self.n == other.n
            and all(self.values[c] == other.values[c] for c in self.values)
        )

    def __repr__(self) -> str:
        nonzero = {str(c): v for c, v in self.values.items() if v}
        return f"ClassFunction(n={self.n}, {nonzero})"

    @classmethod
    def zero(cls, n: int) -> "ClassFunction":
        return cls(n, {})


def trivial_character(n: int) -> ClassFunction:
    return ClassFunction(n, {c: 1 for c in bipartitions(n)})


def quadratic_character_value(c: Bipartition) -> int:
    """Value on (gamma; delta) of the sign-flip character: each negative
    cycle flips an odd number of points, so the value is (-1)**len(delta).
    Cross-checked against the pointwise definition by the oracle module."""
    return -1 if c.beta.length % 2 else 1


def inner_product(f: ClassFunction, g: ClassFunction):
    """Standard inner product; all characters here are rational-valued,
    so no conjugation is needed.  Returns an int when integral."""
    if f.n != g.n:
        raise ValueError(f"degree mismatch: {f.n} != {g.n}")
    num = 0
    for c in bipartitions(f.n):
        num += f.at(c) * g.at(c) * class_size(c)
    q = Fraction(num, group_order(f.n))
    return int(q) if q.denominator == 1 else q


@lru_cache(maxsize=None)
def _submultisets(parts: tuple[int, ...]):
    """All ways to split a part multiset in two, with binomial weights.

    Returns tuples (sub, size, complement, weight); the weight is the
    product over part values of C(m, k), which equals the centralizer
    ratio z / (z' z'') on that coordinate.
    """
    items = sorted(Counter(parts).items(), reverse=True)
    out = []

    def rec(i: int, chosen: list[int], rest: list[int], weight: int) -> None:
        if i == len(items):
            out.append(
                (
                    tuple(sorted(chosen, reverse=True)),
                    sum(chosen),
                    tuple(sorted(rest, reverse=True)),
                    weight,
                )
            )
            return
        v, m = items[i]
        for k in range(m + 1):
            rec(i + 1, chosen + [v] * k, rest + [v] * (m - k), weight * comb(m, k))

    rec(0, [], [], 1)
    return tuple(out)


def induction_product(f: ClassFunction, g: ClassFunction) -> ClassFunction:
    """The class function induced from f (x) g on W_a x W_b up to W_{a+b}.

    At a class c the value is the centralizer-weighted sum over all splits
    of c's part multisets into a degree-a piece and a degree-b piece.
    Commutative, associative, and takes characters to characters.
    """
    a = f.n
    n = f.n + g.n
    values = {}
    for c in bipartitions(n):
        alpha_splits = _submultisets(c.alpha.parts)
        beta_by_size: dict[int, list] = {}
        for sub, size, rest, w in _submultisets(c.beta.parts):
            beta_by_size.setdefault(size, []).append((sub, rest, w))
        total = 0
        for asub, asize, arest, aw in alpha_splits:
            for bsub, brest, bw in beta_by_size.get(a - asize, ()):
                left = Bipartition.of(asub, bsub)
                right = Bipartition.of(arest, brest)
                fv = f.at(left)
                if not fv:
                    continue
                gv = g.at(right)
                if not gv:
                    continue
                total += aw * bw * fv * gv
        values[c] = total
    return ClassFunction(n, values)


@lru_cache(maxsize=None)
def _mn_value(lam: tuple[int, ...], rho: tuple[int, ...]) -> int:
    """Murnaghan-Nakayama by border-strip recursion on beta-numbers."""
    if not rho:
        return 1 if not lam else 0
    r, rest = rho[0], rho[1:]
    ell = len(lam)
    betas = tuple(lam[i] + (ell - 1 - i) for i in range(ell))
    beta_set = set(betas)
    total = 0
    for b in betas:
        nb = b - r
        if nb < 0 or nb in beta_set:
            continue
        height = sum(1 for x in betas if nb < x < b)
        new_betas = sorted((x for x in betas if x != b), reverse=True)
        new_betas.append(nb)
        new_betas.sort(reverse=True)
        new_lam = tuple(new_betas[i] - (ell - 1 - i) for i in range(ell))
        new_lam = tuple(p for p in new_lam if p)
        total += (-1) ** height * _mn_value(new_lam, rest)
    return total


def sym_character(alpha: Partition, cycle_type: Partition) -> int:
    """Irreducible symmetric-group character value at a cycle type.

    Strips are peeled off for the largest part first; the recursion is
    memoized on (partition, remaining cycle type).
    """
    if alpha.size != cycle_type.size:
        raise ValueError(f"size mismatch: {alpha} vs {cycle_type}")
    return _mn_value(alpha.parts, cycle_type.parts)


@lru_cache(maxsize=None)
def _lifted(part: Partition, twisted: bool) -> ClassFunction:
    """The symmetric-group character pulled back through W_m -> S_m.

    At a class (gamma; delta) the underlying permutation has cycle type
    gamma union delta.  The twisted variant multiplies in the sign-flip
    character value (-1)**len(delta).
    """
    m = part.size
    values = {}
    for c in bipartitions(m):
        cyc = tuple(sorted(c.alpha.parts + c.beta.parts, reverse=True))
        v = _mn_value(part.parts, cyc)
        if twisted and c.beta.length % 2:
            v = -v
        values[c] = v
    return ClassFunction(m, values)


@lru_cache(maxsize=None)
def w_irreducible(bp: Bipartition) -> ClassFunction:
    """The irreducible W_n character indexed by a bipartition: induce the
    plain lift of alpha's character times the twisted lift of beta's."""
    return induction_product(_lifted(bp.alpha, False), _lifted(bp.beta, True))


def decompose(f: ClassFunction) -> dict[Bipartition, int | Fraction]:
    """Coefficients of f on the irreducible characters, nonzero ones only."""
    out = {}
    for bp in bipartitions(f.n):
        coeff = inner_product(f, w_irreducible(bp))
        if coeff:
            out[bp] = coeff
    return out


def character_table(n: int) -> dict[Bipartition, ClassFunction]:
    """Full character table of W_n, rows in canonical bipartition order."""
    return {bp: w_irreducible(bp) for bp in bipartitions(n)}
