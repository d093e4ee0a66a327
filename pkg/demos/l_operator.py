"""Walk down a block of atypical weights with the L-operator.

Every atypical dominant weight has a unique "next" weight below it in its
block. Here we follow that chain from the natural representation of osp(2|4)
and compare each step against a brute-force search over shifted weights.
"""

from ospfock.weights import (
    DominantWeight,
    bruhat_less,
    from_ftuple,
    l_case,
    l_chain,
    l_operator_shift,
    to_ftuple,
    wt_map,
)

lam = DominantWeight.parse("1|0,0")  # epsilon, rank 2
f = to_ftuple(lam)
print(f"lambda = {lam}  ->  f-tuple {f}")

# The combinatorial rule picks one of three cases from the shape of f.
print(f"case {l_case(f)}; lambda^L = {lam.L}")

# The brute-force oracle subtracts multiples of the atypical root until the
# weight is regular, then conjugates back to the dominant chamber.
g, k = l_operator_shift(f)
print(f"oracle: shift by {k} copies of the root, land on {from_ftuple(g)}")

print("\nfirst six steps of the chain:")
for step, g in enumerate(l_chain(f, 6), start=1):
    print(f"  {step}: f = {str(g):>12}   lambda = {from_ftuple(g)}")

# The chain never leaves the block, and every element lies below the start.
chain = l_chain(f, 6)
assert all(wt_map(g) == wt_map(f) for g in chain)
assert all(bruhat_less(g, f) for g in chain)
print(f"\nblock invariant wt(f) = {wt_map(f)} is constant along the chain")
