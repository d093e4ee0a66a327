"""Canonical and dual canonical bases in the q-Fock space.

The standard basis K_f stands for Kac modules. Tilting modules correspond to
the canonical basis U_f = K_f + q K_{f^L}; simple modules correspond to the
dual canonical basis, an infinite alternating sum truncated here at a depth.
"""

from ospfock import fock
from ospfock.weights import FTuple

f = FTuple.parse("2|-3,-2")
print(f"f = {f}")

# U_f is built from a typical K_g by a short word in the Chevalley generators.
g, seq = fock.procedure_sequence(f)
print(f"start from typical K_{g}, apply {' '.join(map(str, seq))}")
print("  result:", fock.apply_sequence(seq, g))
print("  U_f   :", fock.canonical(f))

# The bar involution fixes U_f exactly: the infinite tails cancel pairwise,
# so with a depth-d truncation only the last tail term survives.
u = fock.canonical(f)
print("\nbar(U_f) - U_f at depth 4:", fock.bar(u, 4) - u)
print("bar-invariant on the exact region:", fock.verify_bar_invariance(u, 4))

# L_f and its Kazhdan-Lusztig coefficients.
depth = 4
L = fock.dual_canonical(f, depth)
print(f"\nL_f truncated at depth {depth}:")
for g, c in L.items():
    print(f"  {str(c):>8}  K_{g}   (kl = {fock.kl_poly(g, f)})")
print("bar-invariant on the exact region:", fock.verify_bar_invariance(L, depth))
