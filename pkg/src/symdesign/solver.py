"""Exact design-order solver: lower bound, certificate search, verification.

The design order of the circuit distribution is ``B/2 - 1`` where ``B`` is the
minimum multiplicity-weighted one-norm over nonzero integer vectors in the
kernel of the problem's charge matrix (infinite order when the kernel is
trivial).  Two facts make this computable fast:

* sectors can be scanned in weakly increasing multiplicity order, and any
  kernel vector touching a sector outside the scanned prefix has weighted
  norm at least twice that sector's multiplicity (its positive and negative
  parts are equal because the multiplicity vector lies in the row span);
* within a prefix the problem is a small-dimensional weighted shortest-vector
  search, solved by branch-and-bound over an exact rational Cholesky
  factorization (the Euclidean norm of the weight-rescaled vector lower
  bounds the weighted one-norm).

Both the incumbent certificate and the cutoff rule are exact, so every answer
returned with ``proven_exact`` is self-certifying.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .charges import ChargeMatrix, CycleType, build_charge_matrix, character_matrix, conjugacy_classes
from .groups import GroupSpec, SectorTable, canonical_order, sectors, semiuniversal_min_locality
from .infinity import INFINITE, is_finite
from .intlinalg import kernel_lattice, lll_reduce, mat_vec, rank_exact


@dataclass(frozen=True)
class Certificate:
    """Primitive integer kernel vector with its multiplicity-weighted one-norm."""

    q: tuple[int, ...]
    weighted_norm: int
    support: tuple


@dataclass(frozen=True)
class LowerBoundResult:
    ell: Optional[int]  # 1-based index into the canonical sector order, None if infinite
    bound: object  # int or INFINITE
    delta: tuple  # the full-rank sector prefix certifying the bound


@dataclass(frozen=True)
class TmaxResult:
    tmax: object  # int or INFINITE
    lower_bound: object
    certificate: Optional[Certificate]
    proven_exact: bool
    semiuniversal_assumed: bool


class SemiUniversalityError(ValueError):
    """Raised when the gate set is not known to be semi-universal.

    Without semi-universality the uniform circuit distribution fails to be
    even a 2-design, so a kernel-based answer would be misleading.
    """


# ---------------------------------------------------------------------------
# alignment and precondition helpers
# ---------------------------------------------------------------------------


def _check_alignment(A: ChargeMatrix, table: SectorTable):
    if A.col_ids != table.ids:
        raise ValueError("charge-matrix columns are not aligned with the sector table")


def _check_canonical(table: SectorTable):
    if not table.is_canonical():
        raise ValueError("sector table must be canonically ordered (weakly increasing m)")


def _check_semiuniversal(A: ChargeMatrix, assume: bool) -> bool:
    """Returns True when the caller's override flag was needed."""
    group = A.group
    if group is None or group.kind == "Custom":
        if not assume:
            raise SemiUniversalityError(
                "custom gate sets carry no built-in semi-universality knowledge; "
                "pass assume_semiuniversal=True if it holds"
            )
        return True
    if group.kind == "SUd":
        # semi-universal iff the realizable classes include every 3-local one
        have = {lbl.cycles for lbl in A.row_labels if isinstance(lbl, CycleType)}
        needed = {c.cycles for c in conjugacy_classes(3)}
        if needed <= have:
            return False
        if not assume:
            raise SemiUniversalityError(
                "the realizable permutation classes miss a 3-local class, so the "
                "gate set is not even a 2-design source; pass "
                "assume_semiuniversal=True to model an amended gate set"
            )
        return True
    threshold = semiuniversal_min_locality(group)
    if A.k is not None and A.k < threshold:
        if not assume:
            raise SemiUniversalityError(
                f"{group} gates with locality k={A.k} are below the "
                f"semi-universality threshold k >= {threshold}; pass "
                "assume_semiuniversal=True to compute the formal kernel optimum"
            )
        return True
    return False


# ---------------------------------------------------------------------------
# lower bound (rank scan over multiplicity-ordered prefixes)
# ---------------------------------------------------------------------------


class _Echelon:
    """Incremental column-rank tracker over exact rationals."""

    def __init__(self, nrows: int):
        self.nrows = nrows
        self.pivots: list[tuple[int, list[Fraction]]] = []

    def add_column(self, col) -> bool:
        """Reduce ``col`` against stored pivots; True if the rank grew."""
        v = [Fraction(x) for x in col]
        for piv_idx, piv in self.pivots:
            if v[piv_idx]:
                factor = v[piv_idx] / piv[piv_idx]
                v = [a - factor * b for a, b in zip(v, piv)]
        for i, a in enumerate(v):
            if a:
                self.pivots.append((i, v))
                return True
        return False

    @property
    def rank(self) -> int:
        return len(self.pivots)


def lower_bound(A: ChargeMatrix, table: SectorTable) -> LowerBoundResult:
    """First multiplicity-ordered prefix whose columns become dependent.

    Scanning sectors in weakly increasing multiplicity order, the first index
    ``ell`` where the restricted matrix has column rank ``ell - 1`` yields the
    bound ``m[ell] - 1`` on the design order; if every prefix (including all
    sectors) has full column rank the order is unbounded.
    """
    _check_alignment(A, table)
    _check_canonical(table)
    rows = A.row_lists()
    ech = _Echelon(len(rows))
    for idx in range(len(table)):
        col = [row[idx] for row in rows]
        if not ech.add_column(col):
            return LowerBoundResult(
                ell=idx + 1,
                bound=table.multiplicities[idx] - 1,
                delta=table.ids[:idx],
            )
    return LowerBoundResult(ell=None, bound=INFINITE, delta=table.ids)


# ---------------------------------------------------------------------------
# weighted shortest-vector enumeration
# ---------------------------------------------------------------------------


def _weighted_l1(q, weights) -> int:
    return sum(w * abs(x) for w, x in zip(weights, q))


def _normalize_sign(q: list[int]) -> tuple[int, ...]:
    g = 0
    for x in q:
        g = math.gcd(g, x)
    if g > 1:
        q = [x // g for x in q]
    for x in q:
        if x > 0:
            return tuple(q)
        if x < 0:
            return tuple(-y for y in q)
    return tuple(q)


def _cholesky(G: list[list[int]]):
    """Exact LDL^T of a positive-definite integer Gram matrix."""
    d = len(G)
    L = [[Fraction(0)] * d for _ in range(d)]
    D = [Fraction(0)] * d
    for i in range(d):
        for j in range(i):
            s = Fraction(G[i][j])
            for t in range(j):
                s -= L[i][t] * L[j][t] * D[t]
            L[i][j] = s / D[j]
        s = Fraction(G[i][i])
        for t in range(i):
            s -= L[i][t] * L[i][t] * D[t]
        if s <= 0:
            raise ArithmeticError("basis vectors are not independent")
        D[i] = s
        L[i][i] = Fraction(1)
    return L, D


def _interval(center: Fraction, radius2: Fraction) -> tuple[int, int]:
    """Integers x with (x - center)^2 <= radius2, computed exactly.

    Writing center = p/q and radius2 = u/v, the endpoints are
    (p v +- q sqrt(u v)) / (q v); flooring commutes with replacing the inner
    square root by its integer part, so ``isqrt`` suffices.
    """
    if radius2 < 0:
        return (1, 0)
    p, q = center.numerator, center.denominator
    u, v = radius2.numerator, radius2.denominator
    root = math.isqrt(q * q * u * v)
    hi = (p * v + root) // (q * v)
    lo = -((root - p * v) // (q * v))
    return lo, hi


def min_weighted_l1(
    basis: list[list[int]],
    weights,
    upper: Optional[int] = None,
) -> Optional[Certificate]:
    """Nonzero lattice vector minimizing the weighted one-norm.

    The lattice is spanned by ``basis`` (independent integer vectors); the
    objective is ``sum(weights * abs(q))``.  Enumeration is branch-and-bound
    over the weight-rescaled Euclidean norm, which never exceeds the weighted
    one-norm, so the radius equal to the best norm found so far is sound.
    Returns the primitive optimizer, sign-normalized (first nonzero entry
    positive), with lexicographically smallest ``q`` among ties; ``None`` if
    ``upper`` is given and no vector has norm <= ``upper``.
    """
    if not basis:
        raise ValueError("basis must be nonempty")
    weights = [int(w) for w in weights]
    if any(w <= 0 for w in weights):
        raise ValueError("weights must be positive")
    basis = lll_reduce(basis, weights)
    d = len(basis)

    best: Optional[int] = None
    best_q: Optional[tuple[int, ...]] = None

    def consider(vec):
        nonlocal best, best_q
        norm = _weighted_l1(vec, weights)
        if norm == 0:
            return
        if upper is not None and norm > upper:
            return
        q = _normalize_sign(list(vec))
        norm = _weighted_l1(q, weights)
        if best is None or norm < best or (norm == best and q < best_q):
            best, best_q = norm, q

    for b in basis:
        consider(b)

    # radius: nothing better than the incumbent (or the caller's cap) matters
    radius = best if best is not None else None
    if upper is not None:
        radius = upper if radius is None else min(radius, upper)

    if radius is not None and d >= 1:
        G = [
            [sum(w * w * x * y for w, x, y in zip(weights, bi, bj)) for bj in basis]
            for bi in basis
        ]
        L, D = _cholesky(G)
        R2 = Fraction(radius) ** 2
        coeff = [0] * d

        def descend(level: int, rem: Fraction):
            # levels run d-1 .. 0; partial sums use the LDL^T quadratic form
            center = -sum(L[t][level] * coeff[t] for t in range(level + 1, d))
            lo, hi = _interval(center, rem / D[level])
            for x in range(lo, hi + 1):
                coeff[level] = x
                if level == 0:
                    if any(coeff):
                        q = [0] * len(basis[0])
                        for t in range(d):
                            if coeff[t]:
                                for j in range(len(q)):
                                    q[j] += coeff[t] * basis[t][j]
                        consider(q)
                else:
                    used = D[level] * (Fraction(x) - center) ** 2
                    descend(level - 1, rem - used)
            coeff[level] = 0

        descend(d - 1, R2)

    if best is None:
        return None
    if upper is not None and best > upper:
        return None
    support = tuple(i for i, x in enumerate(best_q) if x)
    return Certificate(q=best_q, weighted_norm=best, support=support)


# ---------------------------------------------------------------------------
# exact design order
# ---------------------------------------------------------------------------


def tmax_exact(
    A: ChargeMatrix,
    table: SectorTable,
    assume_semiuniversal: bool = False,
    restrict_sectors: Optional[int] = None,
) -> TmaxResult:
    """Exact maximum design order with a verifiable certificate.

    Iterates over multiplicity-ordered sector prefixes, keeping the minimum
    weighted norm ``B`` found in the restricted kernels, and stops as soon as
    ``B <= 2 * m[next]``: any kernel vector supported outside the prefix costs
    at least ``2 * m[next]`` because its positive and negative weighted parts
    are equal.  ``restrict_sectors`` truncates the scan after that many
    sectors, in which case the answer may be only an upper bound and
    ``proven_exact`` is False unless the cutoff fired earlier.
    """
    _check_alignment(A, table)
    _check_canonical(table)
    assumed = _check_semiuniversal(A, assume_semiuniversal)

    rows = A.row_lists()
    mults = table.multiplicities
    if not multiplicity_consistent(rows, mults):
        raise ValueError(
            "the multiplicity vector is outside the rational row span; add the "
            "identity row (custom_matrix does this automatically)"
        )

    lb = lower_bound(A, table)
    L = len(table)
    limit = L if restrict_sectors is None else min(restrict_sectors, L)

    best: Optional[Certificate] = None
    proven = False
    ech = _Echelon(len(rows))
    kernel_dim = 0
    for idx in range(limit):
        col = [row[idx] for row in rows]
        ech.add_column(col)
        new_dim = (idx + 1) - ech.rank
        if new_dim > kernel_dim:
            kernel_dim = new_dim
            sub = [row[: idx + 1] for row in rows]
            basis = kernel_lattice(sub)
            assert len(basis) == new_dim
            cand = min_weighted_l1(
                basis,
                mults[: idx + 1],
                upper=None if best is None else best.weighted_norm,
            )
            if cand is not None:
                full_q = cand.q + (0,) * (L - len(cand.q))
                norm = cand.weighted_norm
                if (
                    best is None
                    or norm < best.weighted_norm
                    or (norm == best.weighted_norm and full_q < best.q)
                ):
                    best = Certificate(
                        q=full_q,
                        weighted_norm=norm,
                        support=tuple(table.ids[i] for i in cand.support),
                    )
        if best is not None and idx + 1 < L and best.weighted_norm <= 2 * mults[idx + 1]:
            proven = True
            break
    else:
        proven = limit == L

    if best is None:
        # trivial kernel: every symmetric Hamiltonian direction is reachable
        return TmaxResult(INFINITE, lb.bound, None, limit == L, assumed)

    assert best.weighted_norm % 2 == 0
    tmax = best.weighted_norm // 2 - 1
    assert is_finite(lb.bound) and lb.bound <= tmax
    return TmaxResult(tmax, lb.bound, best, proven, assumed)


def multiplicity_consistent(rows, mults) -> bool:
    """True when the multiplicity vector lies in the rational row span."""
    base = rank_exact(rows)
    return rank_exact([list(r) for r in rows] + [list(mults)]) == base


def verify_certificate(cert: Certificate, A: ChargeMatrix, table: SectorTable) -> bool:
    """Re-derive every certificate property from scratch."""
    q = list(cert.q)
    if len(q) != len(table) or A.shape[1] != len(table):
        return False
    if all(x == 0 for x in q):
        return False
    if any(x != 0 for x in mat_vec(A.row_lists(), q)):
        return False
    mults = table.multiplicities
    if sum(m * x for m, x in zip(mults, q)) != 0:
        return False
    g = 0
    for x in q:
        g = math.gcd(g, x)
    if g != 1:
        return False
    norm = _weighted_l1(q, mults)
    if norm != cert.weighted_norm or norm % 2 or norm <= 0:
        return False
    support = tuple(table.ids[i] for i, x in enumerate(q) if x)
    return support == tuple(cert.support)


def brute_force_tmax(
    A: ChargeMatrix, table: SectorTable, coeff_bound: int
) -> Optional[tuple[int, Certificate]]:
    """Exhaustive oracle over small integer combinations of the kernel basis.

    Returns ``(minimum weighted norm, certificate)`` over all nonzero
    coefficient vectors in ``[-coeff_bound, coeff_bound]^dim``, or ``None``
    when the kernel is trivial.  Only meant to validate the solver on
    instances with kernel dimension <= 4.
    """
    _check_alignment(A, table)
    basis = kernel_lattice(A.row_lists())
    if not basis:
        return None
    dim = len(basis)
    mults = table.multiplicities
    best = None
    best_q = None
    rng = range(-coeff_bound, coeff_bound + 1)

    def rec(i, acc):
        nonlocal best, best_q
        if i == dim:
            if all(x == 0 for x in acc):
                return
            norm = _weighted_l1(acc, mults)
            q = _normalize_sign(list(acc))
            norm = _weighted_l1(q, mults)
            if best is None or norm < best or (norm == best and q < best_q):
                best, best_q = norm, q
            return
        for x in rng:
            rec(i + 1, [a + x * b for a, b in zip(acc, basis[i])])

    rec(0, [0] * len(basis[0]))
    if best is None:
        return None
    cert = Certificate(
        q=best_q,
        weighted_norm=best,
        support=tuple(table.ids[i] for i, x in enumerate(best_q) if x),
    )
    return best, cert


def compute_tmax(
    group: GroupSpec,
    n: int,
    k: int,
    assume_semiuniversal: bool = False,
    classes: Optional[list[CycleType]] = None,
) -> tuple[TmaxResult, SectorTable, ChargeMatrix]:
    """End-to-end solve: sectors, canonical order, charge matrix, exact search.

    ``classes`` restricts the SU(d) character rows to a subset of the
    ``k``-local conjugacy classes (amended or reduced gate sets).
    """
    table = canonical_order(sectors(group, n))
    if classes is not None:
        A = character_matrix(group, n, k, classes)
    else:
        A = build_charge_matrix(group, n, k)
    A = A.aligned_to(table)
    result = tmax_exact(A, table, assume_semiuniversal=assume_semiuniversal)
    return result, table, A
