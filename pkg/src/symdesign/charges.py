"""Integer charge matrices whose kernels encode the unreachable phase directions.

For ``k``-local gates on ``n`` sites, the reachable relative phases between
irrep sectors are constrained by one exact integer matrix per problem:

* U(1), SU(2), Z_p -- the overlap matrix between ``k``-site and ``n``-site
  irreps (binomial expressions, one row per ``k``-site irrep);
* SU(d) -- the symmetric-group character matrix restricted to the conjugacy
  classes realizable by ``k``-local permutations;
* custom problems -- user-supplied rational charge rows, with the
  multiplicity row (the identity Hamiltonian) added when missing so that
  tracelessness is implied by the kernel condition.

An integer vector in the rational kernel of this matrix is exactly a
symmetric Hamiltonian orthogonal to everything the gates generate; the solver
minimizes its multiplicity-weighted one-norm.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .groups import (
    CUSTOM,
    CustomSector,
    GroupSpec,
    HammingWeight,
    Residue,
    SectorTable,
    TwiceSpin,
    custom_table,
    sectors,
    sn_irrep_dim,
)
from .intlinalg import rank_exact


# ---------------------------------------------------------------------------
# conjugacy classes with bounded support
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CycleType:
    """Conjugacy class given by its cycle lengths >= 2 (fixed points implicit)."""

    cycles: tuple[int, ...]

    def __post_init__(self):
        if any(c < 2 for c in self.cycles):
            raise ValueError("cycle lengths must be >= 2; fixed points are implicit")
        if tuple(sorted(self.cycles, reverse=True)) != self.cycles:
            raise ValueError("cycles must be sorted in decreasing order")

    @property
    def support(self) -> int:
        return sum(self.cycles)

    @property
    def label(self) -> str:
        if not self.cycles:
            return "(1)"
        out = []
        nxt = 1
        for c in self.cycles:
            out.append("(" + "".join(str(nxt + i) for i in range(c)) + ")")
            nxt += c
        return "".join(out)


IDENTITY_CLASS = CycleType(())


def conjugacy_classes(k: int) -> list[CycleType]:
    """All cycle types with support <= k: the classes reachable by k-local permutations."""

    def rec(rest: int, max_len: int):
        yield ()
        for c in range(min(rest, max_len), 1, -1):
            for tail in rec(rest - c, c):
                yield (c,) + tail

    types = sorted(set(rec(k, k)), key=lambda t: (sum(t), t))
    return [CycleType(t) for t in types]


# 3-local classes plus the product of two disjoint transpositions
T_GROUP_CLASSES = (IDENTITY_CLASS, CycleType((2,)), CycleType((3,)), CycleType((2, 2)))


# ---------------------------------------------------------------------------
# symmetric-group characters (border-strip recursion, memoized)
# ---------------------------------------------------------------------------


def sn_character(parts, sigma) -> int:
    """Character of the S_n irrep ``parts`` on the class ``sigma`` (padded to n).

    ``sigma`` may be a :class:`CycleType` or a bare tuple of cycle lengths
    >= 2; the missing points are fixed points.  Exact integer via the
    border-strip recursion, with hook lengths resolving the fixed-point tail.
    """
    parts = tuple(parts)
    n = sum(parts)
    if not parts or any(p <= 0 for p in parts):
        raise ValueError("partition parts must be positive")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError("partition parts must be weakly decreasing")
    cycles = sigma.cycles if isinstance(sigma, CycleType) else tuple(sorted(sigma, reverse=True))
    if any(c < 2 for c in cycles):
        raise ValueError("cycle lengths must be >= 2")
    if sum(cycles) > n:
        raise ValueError("cycle support exceeds the number of points")
    return _char_rec(parts, cycles)


@lru_cache(maxsize=None)
def _char_rec(parts: tuple[int, ...], cycles: tuple[int, ...]) -> int:
    if not cycles:
        return sn_irrep_dim(parts) if parts else 1
    c, rest = cycles[0], cycles[1:]
    r = len(parts)
    beta = [parts[i] + (r - 1 - i) for i in range(r)]  # distinct, decreasing
    beta_set = set(beta)
    total = 0
    for idx, b in enumerate(beta):
        if b < c or (b - c) in beta_set:
            continue
        height = sum(1 for x in beta if b - c < x < b)
        new_beta = sorted(beta, reverse=True)
        new_beta[idx] = b - c
        new_beta.sort(reverse=True)
        new_parts = tuple(
            x - (len(new_beta) - 1 - i) for i, x in enumerate(new_beta)
        )
        new_parts = tuple(p for p in new_parts if p > 0)
        total += (-1) ** height * _char_rec(new_parts, rest)
    return total


# ---------------------------------------------------------------------------
# charge matrices
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ChargeMatrix:
    """Exact matrix with one row per gate charge vector and one column per sector."""

    row_labels: tuple
    col_ids: tuple
    rows: tuple[tuple, ...]
    group: GroupSpec | None = None
    n: int | None = None
    k: int | None = None

    def __post_init__(self):
        for row in self.rows:
            if len(row) != len(self.col_ids):
                raise ValueError("row length must equal the number of sector columns")

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.col_ids))

    def aligned_to(self, table: SectorTable) -> "ChargeMatrix":
        """Permute columns to match ``table``'s sector order."""
        if set(self.col_ids) != set(table.ids):
            raise ValueError("sector sets differ; cannot align")
        pos = {irrep: i for i, irrep in enumerate(self.col_ids)}
        perm = [pos[irrep] for irrep in table.ids]
        rows = tuple(tuple(row[i] for i in perm) for row in self.rows)
        return ChargeMatrix(self.row_labels, table.ids, rows, self.group, self.n, self.k)

    def row_lists(self) -> list[list]:
        return [list(r) for r in self.rows]


def build_charge_matrix(group: GroupSpec, n: int, k: int) -> ChargeMatrix:
    """Charge matrix of ``k``-local symmetric gates on ``n`` sites.

    Columns follow the natural order of :func:`symdesign.groups.sectors`; use
    :meth:`ChargeMatrix.aligned_to` to match a canonically ordered table.
    """
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    table = sectors(group, n)
    if group.kind == "U1":
        rows = tuple(
            tuple(_binom0(n - k, e.irrep.w - v) for e in table.sectors) for v in range(k + 1)
        )
        labels = tuple(HammingWeight(v) for v in range(k + 1))
    elif group.kind == "SU2":
        jjs = tuple(range(k % 2, k + 1, 2))
        rows = tuple(
            tuple(_su2_entry(n, k, jjp, e.irrep.jj) for e in table.sectors) for jjp in jjs
        )
        labels = tuple(TwiceSpin(jjp) for jjp in jjs)
    elif group.kind == "Zp":
        p = group.p
        rows = tuple(
            tuple(_zp_entry(n, k, p, alpha, e.irrep.beta) for e in table.sectors)
            for alpha in range(p)
        )
        labels = tuple(Residue(alpha) for alpha in range(p))
    elif group.kind == "SUd":
        return character_matrix(group, n, k)
    else:
        raise ValueError("use custom_matrix for user-supplied problems")
    return ChargeMatrix(labels, table.ids, rows, group, n, k)


def _binom0(a: int, b: int) -> int:
    return comb(a, b) if 0 <= b <= a else 0


def _su2_entry(n: int, k: int, jjp: int, jj: int) -> int:
    nk = n - k
    first = _binom0(nk, (nk + jj - jjp) // 2) if (nk + jj - jjp) % 2 == 0 else 0
    second = _binom0(nk, (nk + jj + jjp + 2) // 2) if (nk + jj + jjp) % 2 == 0 else 0
    return first - second


def _zp_entry(n: int, k: int, p: int, alpha: int, beta: int) -> int:
    c = (beta - alpha) % p
    return sum(comb(n - k, c + p * l) for l in range((n - k - c) // p + 1)) if c <= n - k else 0


def character_matrix(
    group: GroupSpec, n: int, k: int, classes: list[CycleType] | None = None
) -> ChargeMatrix:
    """Symmetric-group character matrix: rows are ``k``-local conjugacy classes.

    The default row set is every cycle type with support <= k.  Restricting
    ``classes`` models gate sets generating only part of the ``k``-local
    permutations (for example dropping the 4-cycle row realizes 3-local gates
    amended by a product of two disjoint transpositions).
    """
    if group.kind != "SUd":
        raise ValueError("character matrices describe SU(d) problems")
    if classes is None:
        classes = conjugacy_classes(k)
    for cls in classes:
        if cls.support > k:
            raise ValueError(f"class {cls.label} needs support {cls.support} > k = {k}")
    table = sectors(group, n)
    rows = tuple(
        tuple(sn_character(e.irrep.parts, cls) for e in table.sectors) for cls in classes
    )
    return ChargeMatrix(tuple(classes), table.ids, rows, group, n, k)


def multiplicity_in_row_span(m, rows) -> bool:
    """Exact test that the multiplicity vector lies in the rational row span."""
    rows = [list(r) for r in rows]
    if not rows:
        return False
    base = rank_exact(rows)
    return rank_exact(rows + [list(m)]) == base


def custom_matrix(
    m,
    rows,
    row_labels: list[str] | None = None,
    col_ids: tuple | None = None,
) -> ChargeMatrix:
    """Charge matrix from user-supplied rational rows.

    Prepends the multiplicity vector itself (the charge row of the identity
    Hamiltonian) unless it is already in the rational row span; global phases
    never change the design order, and this makes every kernel vector
    automatically traceless.
    """
    m = [int(x) for x in m]
    rows = [[Fraction(x) for x in row] for row in rows]
    for row in rows:
        if len(row) != len(m):
            raise ValueError("row length must equal the multiplicity vector length")
    labels: list = list(row_labels) if row_labels is not None else [
        f"H{i}" for i in range(len(rows))
    ]
    if len(labels) != len(rows):
        raise ValueError("row_labels length must match rows")
    if not multiplicity_in_row_span(m, rows):
        rows = [[Fraction(x) for x in m]] + rows
        labels = ["identity"] + labels
    if col_ids is None:
        col_ids = tuple(CustomSector(i) for i in range(len(m)))
    return ChargeMatrix(tuple(labels), tuple(col_ids), tuple(tuple(r) for r in rows), CUSTOM)


# ---------------------------------------------------------------------------
# custom problems on disk
# ---------------------------------------------------------------------------


def parse_rational(x) -> Fraction:
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, int):
        return Fraction(x)
    raise ValueError(f"rationals must be integers or 'p/q' strings, got {x!r}")


def load_custom_problem(text: str) -> tuple[SectorTable, ChargeMatrix]:
    """Parse a custom problem document: ``{"m": [...], "rows": [[...]], "labels": [...]}``."""
    doc = json.loads(text)
    if not isinstance(doc, dict) or "m" not in doc:
        raise ValueError('the problem document must be an object with an "m" key')
    table = custom_table(list(doc["m"]))  # validates positive integers
    rows = [[parse_rational(x) for x in row] for row in doc.get("rows", [])]
    labels = doc.get("labels")
    matrix = custom_matrix(table.multiplicities, rows, row_labels=labels, col_ids=table.ids)
    return table, matrix
