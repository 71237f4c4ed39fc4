"""Exact design orders of random local symmetric circuits.

A random circuit built from k-local gates that all commute with an on-site
symmetry generates a distribution over symmetric unitaries.  This script
computes, for each built-in symmetry, the largest t such that this
distribution reproduces the first t moments of the uniform distribution over
ALL symmetric unitaries, and compares against the closed-form expressions
that are known for all four symmetry families.

Run:  python demos/01_design_orders.py
"""

from symdesign import INFINITE, SU2, U1, closed_tmax, compute_tmax, sud, zp
from symdesign.charges import T_GROUP_CLASSES

###############################################################################
# U(1): qubits conserving total Z.  With k-local gates the order grows like
# n**((k+1)//2); for k = 2 it is exactly 2(n-1) - 1.

print("U(1) symmetry, 2-local through 4-local gates")
print(f"{'k':>3} {'n':>4} {'t_max':>8} {'closed form':>12}")
for k in (2, 3, 4):
    for n in (12, 20, 28):
        result, _, _ = compute_tmax(U1, n, k)
        cf = closed_tmax(U1, n, k)
        flag = "ok" if cf.value == result.tmax else "MISMATCH"
        print(f"{k:>3} {n:>4} {result.tmax:>8} {cf.value:>12}  {flag}")

###############################################################################
# SU(2): full rotational symmetry.  2-local and 3-local gates generate the
# same group, so their design orders coincide: (n-1)(n-3) - 1 for n >= 13.

print("\nSU(2) symmetry")
for k in (2, 3, 4):
    for n in (13, 21, 30):
        result, _, _ = compute_tmax(SU2, n, k)
        cf = closed_tmax(SU2, n, k)
        flag = "ok" if cf.value == result.tmax else "MISMATCH"
        print(f"{k:>3} {n:>4} {result.tmax:>8} {cf.value:>12}  {flag}")

###############################################################################
# Cyclic groups: for even p the order is 2**(n-1) - 1 no matter how local the
# gates are (above the semi-universality threshold k >= p), while for odd p
# the gates generate every symmetric unitary and the order is infinite.

print("\nZ_p symmetry, k = p, n = 11")
for p in (2, 3, 4, 5):
    result, _, _ = compute_tmax(zp(p), 11, p)
    print(f"  p = {p}:  t_max = {result.tmax}")

###############################################################################
# SU(d) qudits: 3-local gates are needed for semi-universality; the order
# then matches the SU(2) value because the optimal certificate lives on
# two-row partitions.  Dropping the 4-cycle class from the 4-local gate set
# (3-local gates plus one product of disjoint swaps) lowers the order.

print("\nSU(3) qudits")
for k, n in [(3, 16), (3, 24), (4, 24)]:
    result, _, _ = compute_tmax(sud(3), n, k)
    print(f"  k = {k}, n = {n}:  t_max = {result.tmax}")

print("\nSU(4) qudits, 4-local with vs without the 4-cycle class, n = 24")
full, _, _ = compute_tmax(sud(4), 24, 4)
tgrp, _, _ = compute_tmax(sud(4), 24, 4, classes=list(T_GROUP_CLASSES))
print(f"  all 4-local classes: t_max = {full.tmax}")
print(f"  without the 4-cycle: t_max = {tgrp.tmax}")

###############################################################################
# Every finite answer carries a certificate: a primitive integer vector over
# the sectors that no k-local symmetric Hamiltonian can reach.  Its halved
# weighted norm minus one IS the design order.

result, table, _ = compute_tmax(U1, 8, 2)
print("\nCertificate for U(1), n = 8, k = 2 (sector: coefficient)")
for irrep, q in zip(table.ids, result.certificate.q):
    if q:
        print(f"  {irrep.label:>5}: {q:+d}")
print(f"  weighted one-norm = {result.certificate.weighted_norm}"
      f"  ->  t_max = {result.certificate.weighted_norm // 2 - 1}")
