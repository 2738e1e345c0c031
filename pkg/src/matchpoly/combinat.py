"""Matching fields for the Grassmannian Gr(k,n).

A matching field assigns a permutation in S_k to every k-subset of
{1,...,n}, picking one term of the corresponding k x k minor. The families
built here (diagonal, block diagonal, and the interpolating fields between
consecutive block diagonal ones) only ever use the identity and the
transposition of the first two rows, but the permutation type supports all
of S_k so coherence can be checked by brute force.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb

from .errors import InvalidParameters


@dataclass(frozen=True)
class KSubset:
    """A k-subset of {1,...,n}, stored with strictly increasing elements."""

    elements: tuple[int, ...]
    n: int

    def __post_init__(self):
        elems = tuple(self.elements)
        object.__setattr__(self, "elements", elems)
        if any(e < 1 or e > self.n for e in elems):
            raise InvalidParameters(f"elements {elems} outside 1..{self.n}")
        if any(a >= b for a, b in zip(elems, elems[1:])):
            raise InvalidParameters(f"elements {elems} not strictly increasing")

    @property
    def k(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self):
        return f"KSubset({list(self.elements)}, n={self.n})"


def _perm_sign(images) -> int:
    inv = 0
    for i in range(len(images)):
        for j in range(i + 1, len(images)):
            if images[i] > images[j]:
                inv += 1
    return -1 if inv % 2 else 1


@dataclass(frozen=True)
class Perm:
    """A permutation of {1,...,k} in one-line notation, with its sign cached."""

    images: tuple[int, ...]
    sign: int = field(init=False, compare=False)

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise InvalidParameters(f"{images} is not a permutation of 1..{len(images)}")
        object.__setattr__(self, "sign", _perm_sign(images))

    @property
    def k(self) -> int:
        return len(self.images)

    def __call__(self, r: int) -> int:
        return self.images[r - 1]

    def is_identity(self) -> bool:
        return all(self.images[i] == i + 1 for i in range(len(self.images)))


def identity_perm(k: int) -> Perm:
    return Perm(tuple(range(1, k + 1)))


def swap_first_two(k: int) -> Perm:
    if k < 2:
        raise InvalidParameters("swap of the first two rows needs k >= 2")
    return Perm((2, 1) + tuple(range(3, k + 1)))


def all_perms(k: int):
    for images in itertools.permutations(range(1, k + 1)):
        yield Perm(images)


def enumerate_subsets(k: int, n: int) -> list[KSubset]:
    """All k-subsets of {1,...,n} in lexicographic order of their element lists."""
    if k < 1 or k > n:
        raise InvalidParameters(f"need 1 <= k <= n, got k={k}, n={n}")
    return [KSubset(c, n) for c in itertools.combinations(range(1, n + 1), k)]


class MatchingField:
    """A total assignment of a permutation to every k-subset of {1,...,n}."""

    def __init__(self, k: int, n: int, assignment):
        self.k = k
        self.n = n
        self._assignment = {}
        for key, perm in dict(assignment).items():
            elems = tuple(key.elements) if isinstance(key, KSubset) else tuple(key)
            if not isinstance(perm, Perm) or perm.k != k:
                raise InvalidParameters(f"bad permutation for subset {elems}")
            self._assignment[elems] = perm
        expected = [tuple(c) for c in itertools.combinations(range(1, n + 1), k)]
        if sorted(self._assignment) != expected:
            raise InvalidParameters("assignment must cover every k-subset exactly once")

    def perm(self, subset) -> Perm:
        elems = tuple(subset.elements) if isinstance(subset, KSubset) else tuple(subset)
        return self._assignment[elems]

    def subsets(self) -> list[KSubset]:
        return enumerate_subsets(self.k, self.n)

    def items(self):
        for elems in sorted(self._assignment):
            yield KSubset(elems, self.n), self._assignment[elems]

    def tuples(self):
        """The tableau columns of all subsets, in lexicographic subset order."""
        return [tableau_of(self, s) for s in self.subsets()]

    def __eq__(self, other):
        return (isinstance(other, MatchingField) and self.k == other.k
                and self.n == other.n and self._assignment == other._assignment)

    def __repr__(self):
        return f"MatchingField(k={self.k}, n={self.n}, {len(self._assignment)} subsets)"

    def size(self) -> int:
        return comb(self.n, self.k)


def tableau_of(field_: MatchingField, subset) -> tuple[int, ...]:
    """The k x 1 tableau column of a subset: entry at row sigma(r) is the r-th element."""
    elems = tuple(subset.elements) if isinstance(subset, KSubset) else tuple(subset)
    sigma = field_.perm(elems)
    col = [0] * field_.k
    for r, e in enumerate(elems, start=1):
        col[sigma(r) - 1] = e
    return tuple(col)


def block_diagonal(k: int, n: int, ell: int) -> MatchingField:
    """The block diagonal field: swap the first two rows exactly when
    |I ∩ {1..ell}| = 1 (and |I| > 1); ell = 0 and ell = n both give the
    diagonal field."""
    if not 0 <= ell <= n:
        raise InvalidParameters(f"need 0 <= ell <= n, got ell={ell}, n={n}")
    if k < 1 or k > n:
        raise InvalidParameters(f"need 1 <= k <= n, got k={k}, n={n}")
    ident = identity_perm(k)
    swap = swap_first_two(k) if k >= 2 else ident
    assignment = {}
    for combo in itertools.combinations(range(1, n + 1), k):
        inside = sum(1 for e in combo if e <= ell)
        if k == 1 or inside != 1:
            assignment[combo] = ident
        else:
            assignment[combo] = swap
    return MatchingField(k, n, assignment)


def intermediate(k: int, n: int, ell: int, lam: int) -> MatchingField:
    """The interpolating field between consecutive block diagonal fields.

    Defined for ell in {0,...,n-k+1} and lam in {ell+2,...,n+ell-1} without
    lam = n. Writing I = {p < q < r_1 < ...}: for lam < n the assignment is the
    identity iff q <= ell, or p = ell+1 < lam < q, or ell+1 < p; for lam > n
    (with lam' = lam - n) it is the identity iff q <= ell, or
    p <= lam' < q = ell+1, or ell+1 < p. Otherwise the first two rows swap.
    """
    if k < 2 or k > n:
        raise InvalidParameters(f"need 2 <= k <= n, got k={k}, n={n}")
    if not 0 <= ell <= n - k + 1:
        raise InvalidParameters(f"need 0 <= ell <= n-k+1, got ell={ell}")
    if lam == n or not ell + 2 <= lam <= n + ell - 1:
        raise InvalidParameters(
            f"need lam in {{ell+2,...,n+ell-1}} minus {{n}}, got lam={lam}")
    ident = identity_perm(k)
    swap = swap_first_two(k)
    assignment = {}
    lam_p = lam - n
    for combo in itertools.combinations(range(1, n + 1), k):
        p, q = combo[0], combo[1]
        if lam < n:
            is_id = q <= ell or (p == ell + 1 and lam < q) or ell + 1 < p
        else:
            is_id = q <= ell or (p <= lam_p and q == ell + 1) or ell + 1 < p
        assignment[combo] = ident if is_id else swap
    return MatchingField(k, n, assignment)


def matching_field_to_json(field_: MatchingField) -> dict:
    return {
        "k": field_.k,
        "n": field_.n,
        "entries": [
            {"subset": list(s.elements), "perm": list(p.images)}
            for s, p in field_.items()
        ],
    }


def matching_field_from_json(data: dict) -> MatchingField:
    assignment = {
        tuple(e["subset"]): Perm(tuple(e["perm"])) for e in data["entries"]
    }
    return MatchingField(data["k"], data["n"], assignment)
