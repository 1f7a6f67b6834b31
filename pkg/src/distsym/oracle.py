"""Brute-force checks on small hyperoctahedral groups.

Elements of W_n are signed permutations of 1..n stored as one-line tuples
with a sign per image: img[i-1] = +v sends i to v, -v sends i to the
primed copy of v.  Priming is equivariant, so this determines the action
on all 2n points.  Everything here recomputes character-level claims from
the group itself, independently of the closed forms they certify.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations, product
from typing import Callable, Iterable, Iterator

from .partitions import Partition
from .wchar import (
    Bipartition,
    ClassFunction,
    bipartitions,
    centralizer_order,
    class_size,
    group_order,
    quadratic_character_value,
)
from .xi import kappa, nu

SignedPerm = tuple[int, ...]


def identity(n: int) -> SignedPerm:
    return tuple(range(1, n + 1))


def compose(u: SignedPerm, v: SignedPerm) -> SignedPerm:
    """(u o v)(i) = u(v(i)); a primed intermediate point primes the result."""
    out = []
    for j in v:
        k = u[abs(j) - 1]
        out.append(k if j > 0 else -k)
    return tuple(out)


def iter_group(n: int) -> Iterator[SignedPerm]:
    """All 2**n n! elements, in a fixed deterministic order."""
    for perm in permutations(range(1, n + 1)):
        for signs in product((1, -1), repeat=n):
            yield tuple(p * s for p, s in zip(perm, signs))


def enumerate_group(n: int) -> list[SignedPerm]:
    if n > 4:
        raise ValueError(f"refusing to materialize W_{n}; stream iter_group instead")
    return list(iter_group(n))


def class_of(w: SignedPerm) -> Bipartition:
    """Cycle type: positive cycles to the first coordinate, negative ones
    (odd number of sign flips around the cycle) to the second."""
    n = len(w)
    seen = [False] * n
    alpha = []
    beta = []
    for i in range(1, n + 1):
        if seen[i - 1]:
            continue
        length = 0
        negative = False
        j = i
        while not seen[j - 1]:
            seen[j - 1] = True
            length += 1
            image = w[j - 1]
            if image < 0:
                negative = not negative
            j = abs(image)
        (beta if negative else alpha).append(length)
    return Bipartition.of(
        tuple(sorted(alpha, reverse=True)), tuple(sorted(beta, reverse=True))
    )


def long_involution(n: int) -> SignedPerm:
    """The unsigned involution i <-> n + 1 - i."""
    return tuple(range(n, 0, -1))


def in_block_subgroup(w: SignedPerm, half: int) -> bool:
    """Membership in K: the underlying permutation preserves or swaps the
    blocks 1..half and half+1..2*half; signs are unconstrained."""
    first = {abs(x) for x in w[:half]}
    lo = set(range(1, half + 1))
    return first == lo or first == set(range(half + 1, 2 * half + 1))


def block_swap_sign(w: SignedPerm, half: int) -> int:
    """-1 when the underlying permutation swaps the two blocks."""
    return 1 if abs(w[0]) <= half else -1


def in_centralizer_subgroup(w: SignedPerm, sigma: SignedPerm) -> bool:
    return compose(w, sigma) == compose(sigma, w)


def flip_count_sign(w: SignedPerm, half: int) -> int:
    """(-1)**(number of the first half points sent to primed points)."""
    return -1 if sum(1 for x in w[:half] if x < 0) % 2 else 1


def induced_character(
    degree: int, member_values: Iterable[tuple[SignedPerm, int]], subgroup_order: int
) -> ClassFunction:
    """Induce a subgroup class function to W_degree.

    Ind f at g equals |Z_G(g)| / |H| times the sum of f over the subgroup
    elements conjugate to g; summing per W-class over the subgroup's
    elements needs one pass over H only.
    """
    acc: dict[Bipartition, int] = {}
    for w, val in member_values:
        c = class_of(w)
        acc[c] = acc.get(c, 0) + val
    values = {}
    for c in bipartitions(degree):
        q = Fraction(centralizer_order(c) * acc.get(c, 0), subgroup_order)
        if q.denominator != 1:
            raise ArithmeticError(f"induced value not integral at {c}: {q}")
        values[c] = int(q)
    return ClassFunction(degree, values)


def block_subgroup_order(n: int) -> int:
    """|K_n| inside W_{2n}."""
    import math

    return 2 * math.factorial(n) ** 2 * 2 ** (2 * n)


def centralizer_subgroup_order(n: int) -> int:
    """|N_n| inside W_{2n}."""
    import math

    return 2**n * math.factorial(n) * 2**n


def kappa_bruteforce(n: int) -> ClassFunction:
    """Ind(trivial) - Ind(block-swap sign) from K_n, in one streamed pass."""
    degree = 2 * n
    members = (
        (w, 1 - block_swap_sign(w, n))
        for w in iter_group(degree)
        if in_block_subgroup(w, n)
    )
    return induced_character(degree, members, block_subgroup_order(n))


def nu_bruteforce(n: int) -> ClassFunction:
    """Ind(flip-count sign) from the centralizer of the long involution."""
    degree = 2 * n
    sigma = long_involution(degree)
    members = (
        (w, flip_count_sign(w, n))
        for w in iter_group(degree)
        if in_centralizer_subgroup(w, sigma)
    )
    return induced_character(degree, members, centralizer_subgroup_order(n))


def sign_flip_character(n: int) -> ClassFunction:
    """The pointwise character (-1)**(points sent to primed points).

    Checks class-constancy and agreement with the closed (-1)**len(beta)
    convention; either failure aborts, since the convention underpins the
    whole irreducible construction.
    """
    per_class: dict[Bipartition, set[int]] = {}
    for w in iter_group(n):
        v = -1 if sum(1 for x in w if x < 0) % 2 else 1
        per_class.setdefault(class_of(w), set()).add(v)
    values = {}
    for c, vals in per_class.items():
        if len(vals) != 1:
            raise ArithmeticError(f"sign-flip character not class-constant at {c}")
        values[c] = vals.pop()
    for c, v in values.items():
        if v != quadratic_character_value(c):
            raise ArithmeticError(
                f"sign-flip character disagrees with (-1)**len(beta) at {c}"
            )
    return ClassFunction(n, values)


def verify_claims(max_n: int = 2, include_w6: bool = False) -> list[tuple[str, bool, str]]:
    """Run every oracle-level claim; returns (name, ok, detail) rows."""
    rows: list[tuple[str, bool, str]] = []

    def check(name: str, fn: Callable[[], tuple[bool, str]]) -> None:
        try:
            ok, detail = fn()
        except Exception as exc:  # surfaced, not swallowed: a claim failed
            ok, detail = False, f"error: {exc}"
        rows.append((name, ok, detail))

    for n in range(1, 5):
        def sizes(n=n):
            counts: dict[Bipartition, int] = {}
            total = 0
            for w in iter_group(n):
                c = class_of(w)
                counts[c] = counts.get(c, 0) + 1
                total += 1
            expected = {c: class_size(c) for c in bipartitions(n)}
            return (
                counts == expected and total == group_order(n),
                f"{len(counts)} classes of W_{n}",
            )

        check(f"class sizes W_{n} match centralizer orders", sizes)

    for n in range(1, max_n + 1):
        def orders(n=n):
            k = sum(1 for w in iter_group(2 * n) if in_block_subgroup(w, n))
            sigma = long_involution(2 * n)
            m = sum(
                1 for w in iter_group(2 * n) if in_centralizer_subgroup(w, sigma)
            )
            ok = k == block_subgroup_order(n) and m == centralizer_subgroup_order(n)
            return ok, f"|K_{n}|={k}, |N_{n}|={m}"

        check(f"subgroup orders inside W_{2*n}", orders)

    kappa_ns = list(range(1, max_n + 1)) + ([3] if include_w6 else [])
    for n in kappa_ns:
        def kap(n=n):
            return kappa_bruteforce(n) == kappa(n), f"all classes of W_{2*n}"

        def nuv(n=n):
            return nu_bruteforce(n) == nu(n), f"all classes of W_{2*n}"

        check(f"kappa_{n} closed form vs induced characters", kap)
        check(f"nu_{n} closed form vs induced character", nuv)

    for n in range(1, 5):
        def chi(n=n):
            sign_flip_character(n)
            return True, f"class-constant and matches (-1)**len(beta) on W_{n}"

        check(f"sign-flip character convention W_{n}", chi)

    return rows
