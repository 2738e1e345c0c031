"""Weight matrices inducing matching fields.

A k x n integer matrix M weights each term of every k x k minor; when the
minimum-weight term is unique for every k-subset, M induces a matching field
(the argmin permutations) and a weight vector on the Pluecker variables (the
minima themselves, in lexicographic subset order).
"""

from __future__ import annotations

from dataclasses import dataclass

from .combinat import (KSubset, MatchingField, Perm, all_perms,
                       enumerate_subsets)
from .errors import InvalidParameters, NotCoherent


@dataclass(frozen=True)
class WeightMatrix:
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.entries)
        object.__setattr__(self, "entries", rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise InvalidParameters("ragged weight matrix")

    @property
    def k(self) -> int:
        return len(self.entries)

    @property
    def n(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def __getitem__(self, ij):
        i, j = ij  # 1-based
        return self.entries[i - 1][j - 1]


@dataclass(frozen=True)
class PlueckerWeightVector:
    """Minor weights indexed by enumerate_subsets order."""

    k: int
    n: int
    weights: tuple[int, ...]


def m_ell(k: int, n: int, ell: int) -> WeightMatrix:
    """The block diagonal weight matrix: zero first row, second row
    (ell, ..., 1, n, ..., ell+1), and row i >= 3 equal to (i-1)(n-j+1)."""
    if not 0 <= ell <= n:
        raise InvalidParameters(f"need 0 <= ell <= n, got ell={ell}")
    if k < 2:
        raise InvalidParameters("need k >= 2")
    rows = [tuple(0 for _ in range(n))]
    row2 = [ell - j + 1 if j <= ell else n - j + ell + 1 for j in range(1, n + 1)]
    rows.append(tuple(row2))
    for i in range(3, k + 1):
        rows.append(tuple((i - 1) * (n - j + 1) for j in range(1, n + 1)))
    return WeightMatrix(tuple(rows))


def m_ell_lambda(k: int, n: int, ell: int, lam: int) -> WeightMatrix:
    """The interpolating weight matrix, with N = n+1 scaling rows 3..k.

    Second row, lam < n: (ell,...,1) on columns 1..ell, n-lam+ell+1 at column
    ell+1, then n,n-1,... with n-lam+ell+2 landing at column lam, and
    n-lam+ell,...,ell+1 after it. Second row, lam > n (lam' = lam-n):
    ell+1,ell,... with ell-lam'+2 at column lam', continuing down to 1 at
    column ell, then ell-lam'+1 at column ell+1 and n,...,ell+2 after it.
    """
    if k < 2 or k > n:
        raise InvalidParameters(f"need 2 <= k <= n, got k={k}, n={n}")
    if not 0 <= ell <= n - k + 1:
        raise InvalidParameters(f"need 0 <= ell <= n-k+1, got ell={ell}")
    if lam == n or not ell + 2 <= lam <= n + ell - 1:
        raise InvalidParameters(
            f"need lam in {{ell+2,...,n+ell-1}} minus {{n}}, got lam={lam}")
    row2 = []
    if lam < n:
        for j in range(1, n + 1):
            if j <= ell:
                row2.append(ell - j + 1)
            elif j == ell + 1:
                row2.append(n - lam + ell + 1)
            elif j <= lam:
                row2.append(n - j + ell + 2)
            else:
                row2.append(n - j + ell + 1)
    else:
        lam_p = lam - n
        for j in range(1, n + 1):
            if j <= lam_p:
                row2.append(ell + 2 - j)
            elif j <= ell:
                row2.append(ell + 1 - j)
            elif j == ell + 1:
                row2.append(ell - lam_p + 1)
            else:
                row2.append(n - j + ell + 2)
    big_n = n + 1
    rows = [tuple(0 for _ in range(n)), tuple(row2)]
    for i in range(3, k + 1):
        rows.append(tuple(big_n ** (i - 2) * (n - j + 1) for j in range(1, n + 1)))
    return WeightMatrix(tuple(rows))


def _term_weight(M: WeightMatrix, elems, sigma: Perm) -> int:
    return sum(M[sigma(r), e] for r, e in enumerate(elems, start=1))


def min_weight_terms(M: WeightMatrix, subset) -> set[Perm]:
    """All permutations attaining the minimum term weight of the minor on subset."""
    elems = tuple(subset.elements) if isinstance(subset, KSubset) else tuple(subset)
    if M.k < len(elems) or M.n < max(elems):
        raise InvalidParameters("weight matrix too small for subset")
    best = None
    winners = set()
    for sigma in all_perms(len(elems)):
        w = _term_weight(M, elems, sigma)
        if best is None or w < best:
            best = w
            winners = {sigma}
        elif w == best:
            winners.add(sigma)
    return winners


def is_coherent(M: WeightMatrix, k: int, n: int) -> bool:
    """True iff the minimum-weight term is unique for every k-subset."""
    return all(len(min_weight_terms(M, s)) == 1 for s in enumerate_subsets(k, n))


def induced_matching_field(M: WeightMatrix, k: int, n: int) -> MatchingField:
    """The matching field of argmin permutations; raises NotCoherent on a tie."""
    assignment = {}
    for s in enumerate_subsets(k, n):
        winners = min_weight_terms(M, s)
        if len(winners) != 1:
            raise NotCoherent(s.elements)
        assignment[s.elements] = next(iter(winners))
    return MatchingField(k, n, assignment)


def induced_weight_vector(M: WeightMatrix, k: int, n: int) -> PlueckerWeightVector:
    """Minimum term weight of every minor, in lexicographic subset order.

    Ties are allowed; the minimum is still well defined.
    """
    weights = []
    for s in enumerate_subsets(k, n):
        weights.append(min(_term_weight(M, s.elements, sigma)
                           for sigma in all_perms(k)))
    return PlueckerWeightVector(k, n, tuple(weights))


def weight_matrix_to_json(M: WeightMatrix) -> dict:
    return {"k": M.k, "n": M.n, "entries": [list(r) for r in M.entries]}


def weight_matrix_from_json(data: dict) -> WeightMatrix:
    M = WeightMatrix(tuple(tuple(r) for r in data["entries"]))
    if M.k != data["k"] or M.n != data["n"]:
        raise InvalidParameters("entries shape disagrees with k, n")
    return M
