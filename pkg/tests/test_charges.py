"""Charge matrices, symmetric-group characters, and custom problems."""

import json
from fractions import Fraction
from itertools import permutations
from math import comb, factorial

import pytest

from symdesign import (
    SU2,
    U1,
    build_charge_matrix,
    canonical_order,
    character_matrix,
    conjugacy_classes,
    custom_matrix,
    kernel_lattice,
    load_custom_problem,
    rank_exact,
    sectors,
    sn_character,
    sud,
    zp,
)
from symdesign.charges import CycleType, T_GROUP_CLASSES, multiplicity_in_row_span
from symdesign.groups import partitions_max_rows
from symdesign.intlinalg import mat_vec


# ---------------------------------------------------------------------------
# independent character oracle for small n: permutation modules
# ---------------------------------------------------------------------------


def cycle_type_of(perm: tuple[int, ...]) -> tuple[int, ...]:
    seen = [False] * len(perm)
    cycles = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = perm[x]
            length += 1
        if length >= 2:
            cycles.append(length)
    return tuple(sorted(cycles, reverse=True))


def tabloids(parts: tuple[int, ...], n: int):
    """Ordered set partitions of range(n) with block sizes ``parts``."""
    if not parts:
        yield ()
        return
    from itertools import combinations

    first, rest = parts[0], parts[1:]
    items = tuple(range(n))

    def rec(remaining, shape):
        if not shape:
            yield ()
            return
        for block in combinations(sorted(remaining), shape[0]):
            rem = tuple(x for x in remaining if x not in block)
            for tail in rec(rem, shape[1:]):
                yield (frozenset(block),) + tail

    yield from rec(items, parts)


def character_table_bruteforce(n: int) -> dict[tuple[int, ...], dict[tuple[int, ...], Fraction]]:
    """Irreducible characters of S_n via permutation-module fixed points.

    The permutation module on row-tabloids of shape lambda has character equal
    to the number of fixed tabloids; irreducible characters follow from
    unitriangular Gram-Schmidt against the group inner product, processing
    shapes in reverse-lex (most dominant first).
    """
    parts_list = sorted(partitions_max_rows(n, n), reverse=True)
    perms = list(permutations(range(n)))
    classes: dict[tuple[int, ...], int] = {}
    reps: dict[tuple[int, ...], tuple[int, ...]] = {}
    for p in perms:
        ct = cycle_type_of(p)
        classes[ct] = classes.get(ct, 0) + 1
        reps.setdefault(ct, p)

    def perm_module_char(shape):
        out = {}
        tabs = list(tabloids(shape, n))
        for ct, rep in reps.items():
            fixed = 0
            for tab in tabs:
                ok = all(frozenset(rep[x] for x in block) == block for block in tab)
                fixed += ok
            out[ct] = Fraction(fixed)
        return out

    def inner(chi1, chi2):
        return sum(classes[ct] * chi1[ct] * chi2[ct] for ct in classes) / factorial(n)

    irreducibles: dict[tuple[int, ...], dict] = {}
    for shape in parts_list:
        chi = perm_module_char(shape)
        for prev_shape, prev_chi in irreducibles.items():
            coeff = inner(chi, prev_chi)
            if coeff:
                chi = {ct: chi[ct] - coeff * prev_chi[ct] for ct in chi}
        assert inner(chi, chi) == 1, f"non-irreducible residue at {shape}"
        irreducibles[shape] = chi
    return irreducibles


class TestSnCharacter:
    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_against_permutation_module_oracle(self, n):
        oracle = character_table_bruteforce(n)
        for shape, chi in oracle.items():
            for ct, value in chi.items():
                assert sn_character(shape, ct) == value, (shape, ct)

    def test_trivial_rep(self):
        for n in (5, 9, 16):
            for ct in [(), (2,), (3,), (2, 2), (4,)]:
                assert sn_character((n,), ct) == 1

    def test_sign_rep_transposition(self):
        # frozen from the permutation-module oracle (n = 3, 4, 5)
        for n in (3, 4, 5):
            assert sn_character((1,) * n, (2,)) == -1

    def test_tabulated_polynomials(self):
        n = 15
        assert sn_character((n - 2, 2), (2, 2)) == (n * n - 11 * n + 32) // 2 == 46
        assert sn_character((n - 3, 2, 1), (4,)) == (n - 4) * (n - 6) * (n - 8) // 3 == 231

    @pytest.mark.parametrize("n", range(15, 21))
    def test_seven_lowest_rows_match_table(self, n):
        tails = {
            (): [1, 1, 1, 1, 1],
            (1,): [n - 1, n - 3, n - 4, n - 5, n - 5],
            (2,): [
                n * (n - 3) // 2,
                (n - 3) * (n - 4) // 2,
                (n - 3) * (n - 6) // 2,
                (n * n - 11 * n + 32) // 2,
                (n - 4) * (n - 7) // 2,
            ],
            (1, 1): [
                (n - 1) * (n - 2) // 2,
                (n - 2) * (n - 5) // 2,
                (n - 4) * (n - 5) // 2,
                (n * n - 11 * n + 26) // 2,
                (n - 5) * (n - 6) // 2,
            ],
            (3,): [
                n * (n - 1) * (n - 5) // 6,
                (n - 3) * (n - 4) * (n - 5) // 6,
                (n - 5) * (n * n - 10 * n + 18) // 6,
                (n - 5) * (n * n - 13 * n + 48) // 6,
                (n - 4) * (n - 5) * (n - 9) // 6,
            ],
            (1, 1, 1): [
                (n - 1) * (n - 2) * (n - 3) // 6,
                (n - 2) * (n - 3) * (n - 7) // 6,
                (n - 3) * (n * n - 12 * n + 38) // 6,
                (n - 3) * (n - 5) * (n - 10) // 6,
                (n - 5) * (n - 6) * (n - 7) // 6,
            ],
            (2, 1): [
                n * (n - 2) * (n - 4) // 3,
                (n - 2) * (n - 4) * (n - 6) // 3,
                (n - 4) * (n * n - 11 * n + 27) // 3,
                (n - 4) * (n - 6) * (n - 8) // 3,
                (n - 4) * (n - 6) * (n - 8) // 3,
            ],
        }
        for tail, values in tails.items():
            shape = (n - sum(tail),) + tail
            for ct, expected in zip([(), (2,), (3,), (2, 2), (4,)], values):
                assert sn_character(shape, ct) == expected

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            sn_character((2, 3), ())
        with pytest.raises(ValueError):
            sn_character((3,), (1,))
        with pytest.raises(ValueError):
            sn_character((3,), (4,))

    @pytest.mark.parametrize("n", range(2, 9))
    def test_column_orthogonality(self, n):
        # sum over all irreps of chi(sigma) chi(tau) is the centralizer order
        # when the classes coincide and zero otherwise
        from math import factorial

        all_parts = list(partitions_max_rows(n, n))
        class_list = [c.cycles for c in conjugacy_classes(n)]

        def centralizer(cycles):
            full = list(cycles) + [1] * (n - sum(cycles))
            out = 1
            for length in set(full):
                mult = full.count(length)
                out *= length**mult * factorial(mult)
            return out

        for ct1 in class_list:
            for ct2 in class_list:
                acc = sum(sn_character(p, ct1) * sn_character(p, ct2) for p in all_parts)
                assert acc == (centralizer(ct1) if ct1 == ct2 else 0)

    @pytest.mark.parametrize("d", [3, 4, 5])
    @pytest.mark.parametrize("n", range(2, 11))
    def test_schur_weyl_trace_consistency(self, d, n):
        # the permutation operator on n qudits has trace d**(number of cycles,
        # fixed points included); Schur-Weyl splits it over sectors
        from symdesign.groups import sud_irrep_dim

        parts_list = list(partitions_max_rows(n, d))
        for cls in conjugacy_classes(n):
            n_cycles = len(cls.cycles) + (n - cls.support)
            total = sum(
                sud_irrep_dim(p, d) * sn_character(p, cls.cycles) for p in parts_list
            )
            assert total == d**n_cycles, (d, n, cls.cycles)


class TestConjugacyClasses:
    def test_s4_classes(self):
        assert [c.cycles for c in conjugacy_classes(4)] == [(), (2,), (3,), (2, 2), (4,)]

    def test_labels(self):
        labels = [c.label for c in conjugacy_classes(4)]
        assert labels == ["(1)", "(12)", "(123)", "(12)(34)", "(1234)"]

    def test_tgroup_is_s4_minus_4cycle(self):
        all4 = {c.cycles for c in conjugacy_classes(4)}
        assert {c.cycles for c in T_GROUP_CLASSES} == all4 - {(4,)}

    def test_s5_classes_supported(self):
        # no tabulated targets exist for 5-local classes, but the matrix is
        # well-formed and its kernel nests inside the 4-local one
        from symdesign.intlinalg import kernel_lattice, mat_vec

        assert [c.cycles for c in conjugacy_classes(5)] == [
            (), (2,), (3,), (2, 2), (4,), (3, 2), (5,),
        ]
        n = 12
        rows5 = character_matrix(sud(3), n, 5).row_lists()
        rows4 = character_matrix(sud(3), n, 4).row_lists()
        for b in kernel_lattice(rows5):
            assert all(x == 0 for x in mat_vec(rows4, b))


class TestBuildChargeMatrix:
    def test_u1_n3_k1(self):
        m = build_charge_matrix(U1, 3, 1)
        assert m.rows == ((1, 2, 1, 0), (0, 1, 2, 1))

    @pytest.mark.parametrize("n", [2, 4, 7])
    def test_u1_k_equals_n_identity(self, n):
        m = build_charge_matrix(U1, n, n)
        eye = tuple(tuple(1 if i == j else 0 for j in range(n + 1)) for i in range(n + 1))
        assert m.rows == eye

    def test_z2_constant_entries(self):
        m = build_charge_matrix(zp(2), 5, 2)
        assert all(x == 4 for row in m.rows for x in row)

    def test_sud_column_example(self):
        m = build_charge_matrix(sud(3), 15, 2)
        col = m.col_ids.index(next(i for i in m.col_ids if i.parts == (14, 1)))
        assert [row[col] for row in m.rows] == [14, 12]

    def test_character_matrix_identity_row_is_multiplicities(self):
        # the identity class row carries the irrep dimensions of the
        # symmetric group, which are exactly the sector multiplicities
        m = character_matrix(sud(4), 8, 1)
        table = sectors(sud(4), 8)
        assert len(m.rows) == 1
        assert m.rows[0] == table.multiplicities

    def test_k3_chi_restriction_matches_tabulated_entries(self):
        n = 15
        m = character_matrix(sud(3), n, 3)
        table = canonical_order(sectors(sud(3), n))
        aligned = m.aligned_to(table)
        # four lowest-multiplicity sectors: [n], [n-1,1], [n-2,2], [n-2,1,1]
        assert [i.parts for i in table.ids[:4]] == [(15,), (14, 1), (13, 2), (13, 1, 1)]
        sub = [list(row[:4]) for row in aligned.rows]
        assert sub == [
            [1, n - 1, n * (n - 3) // 2, (n - 1) * (n - 2) // 2],
            [1, n - 3, (n - 3) * (n - 4) // 2, (n - 2) * (n - 5) // 2],
            [1, n - 4, (n - 3) * (n - 6) // 2, (n - 4) * (n - 5) // 2],
        ]
        # on two-row partitions alone the 3x3 block is rank-deficient
        assert rank_exact([row[:3] for row in sub]) == 2
        assert rank_exact(sub) == 3
        # its kernel is spanned by (C(n-2,2), -(n-3), 1, 0)
        basis = kernel_lattice(sub)
        assert len(basis) == 1
        q = basis[0] if basis[0][0] > 0 else [-x for x in basis[0]]
        assert q == [comb(n - 2, 2), -(n - 3), 1, 0]

    def test_invalid_k(self):
        with pytest.raises(ValueError):
            build_charge_matrix(U1, 3, 0)
        with pytest.raises(ValueError):
            build_charge_matrix(U1, 3, 4)

    def test_class_support_exceeds_k(self):
        with pytest.raises(ValueError):
            character_matrix(sud(3), 10, 2, [CycleType((3,))])

    @pytest.mark.parametrize("n,k", [(4, 1), (5, 2), (6, 3), (7, 4)])
    def test_u1_entries_count_bitstrings(self, n, k):
        # independent oracle: the (v, w) entry counts (n-k)-bit strings of
        # weight w - v
        m = build_charge_matrix(U1, n, k)
        for v, row in enumerate(m.rows):
            for w, entry in enumerate(row):
                count = sum(
                    1 for b in range(1 << (n - k)) if bin(b).count("1") == w - v
                )
                assert entry == count

    @pytest.mark.parametrize("p", [2, 3, 4, 5])
    @pytest.mark.parametrize("n,k", [(5, 2), (6, 3), (7, 4)])
    def test_zp_entries_count_bitstrings(self, p, n, k):
        if k < 1 or k > n:
            return
        m = build_charge_matrix(zp(p), n, k)
        residues = [i.beta for i in m.col_ids]
        for alpha, row in enumerate(m.rows):
            for beta, entry in zip(residues, row):
                count = sum(
                    1
                    for b in range(1 << (n - k))
                    if bin(b).count("1") % p == (beta - alpha) % p
                )
                assert entry == count

    @pytest.mark.parametrize("n", range(2, 13))
    def test_su2_entries_match_angular_momentum_sum(self, n):
        # independent route: entry (j', j) is the total multiplicity of spins
        # between |j - j'| and j + j' in the remaining n - k qubits
        from symdesign import su2_multiplicity

        for k in range(1, n):
            m = build_charge_matrix(SU2, n, k)
            jjs = [i.jj for i in m.col_ids]
            for lbl, row in zip(m.row_labels, m.rows):
                jjp = lbl.jj
                for jj, entry in zip(jjs, row):
                    lo, hi = abs(jj - jjp), jj + jjp
                    expect = sum(
                        su2_multiplicity(n - k, ll)
                        for ll in range(lo, min(hi, n - k) + 1, 2)
                        if (n - k - ll) % 2 == 0
                    )
                    assert entry == expect, (n, k, jjp, jj)


GROUPS_FOR_INVARIANTS = [U1, SU2, zp(2), zp(3), zp(4), sud(3)]


class TestMatrixInvariants:
    @pytest.mark.parametrize("group", GROUPS_FOR_INVARIANTS)
    @pytest.mark.parametrize("n", [5, 9, 14])
    def test_kernel_nesting(self, group, n):
        # more locality means fewer unreachable directions
        ks = [k for k in range(max(1, getattr(group, "p", 1) or 1), n + 1)]
        prev = None
        for k in ks:
            rows = build_charge_matrix(group, n, k).row_lists()
            if prev is not None:
                for b in kernel_lattice(rows):
                    assert all(x == 0 for x in mat_vec(prev, b))
            prev = rows

    @pytest.mark.parametrize("n", range(1, 15))
    def test_u1_rank(self, n):
        for k in range(1, n + 1):
            assert rank_exact(build_charge_matrix(U1, n, k).row_lists()) == k + 1

    @pytest.mark.parametrize("n", range(2, 15))
    def test_su2_rank_and_parity_kernel(self, n):
        from symdesign.intlinalg import hnf_basis_key

        for k in range(2, n + 1):
            rows = build_charge_matrix(SU2, n, k).row_lists()
            assert rank_exact(rows) == k // 2 + 1
        for s in range(1, n // 2):
            even = kernel_lattice(build_charge_matrix(SU2, n, 2 * s).row_lists())
            odd = kernel_lattice(build_charge_matrix(SU2, n, 2 * s + 1).row_lists())
            assert hnf_basis_key(even) == hnf_basis_key(odd)

    @pytest.mark.parametrize("p", [2, 3, 4, 5, 6, 7])
    def test_zp_rank(self, p):
        for n in range(p + 1, 13):
            for k in range(p, n):
                rank = rank_exact(build_charge_matrix(zp(p), n, k).row_lists())
                assert rank == (p - 1 if p % 2 == 0 else p)

    @pytest.mark.parametrize("group", GROUPS_FOR_INVARIANTS)
    @pytest.mark.parametrize("n", [4, 8, 12])
    def test_multiplicity_in_row_span(self, group, n):
        table = sectors(group, n)
        kmin = group.p if group.kind == "Zp" else 1
        for k in range(kmin, n + 1):
            m = build_charge_matrix(group, n, k)
            assert multiplicity_in_row_span(table.multiplicities, m.row_lists())


class TestCustomMatrix:
    def test_identity_prepend(self):
        m = custom_matrix([1, 1], [])
        assert m.rows == ((1, 1),)
        assert m.row_labels == ("identity",)

    def test_no_prepend_when_in_span(self):
        m = custom_matrix([2, 3], [[Fraction(4), Fraction(6)]])
        assert len(m.rows) == 1

    def test_sud_k2_sv_rows(self):
        n = 15
        table = sectors(sud(3), n)
        chi = character_matrix(sud(3), n, 2)
        m = custom_matrix(
            table.multiplicities,
            chi.row_lists(),
            col_ids=table.ids,
        )
        # identity row already equals the multiplicities: nothing prepended
        assert len(m.rows) == 2

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            custom_matrix([1, 2], [[1, 2, 3]])


class TestCustomJson:
    def test_round_trip(self):
        doc = {"m": [4, 4], "rows": [], "labels": []}
        table, matrix = load_custom_problem(json.dumps(doc))
        assert table.multiplicities == (4, 4)
        assert matrix.rows == ((4, 4),)

    def test_rational_strings(self):
        doc = {"m": [1, 2, 1], "rows": [["1/2", "-1/3", "0"]], "labels": ["h0"]}
        _, matrix = load_custom_problem(json.dumps(doc))
        assert matrix.rows[-1] == (Fraction(1, 2), Fraction(-1, 3), Fraction(0))

    def test_malformed(self):
        with pytest.raises(json.JSONDecodeError):
            load_custom_problem("{not json")
        with pytest.raises(ValueError):
            load_custom_problem('{"rows": []}')

    def test_rejects_nonintegral_multiplicities(self):
        with pytest.raises(ValueError):
            load_custom_problem('{"m": [1.5, 2], "rows": []}')
        with pytest.raises(ValueError):
            load_custom_problem('{"m": [0, 2], "rows": []}')
