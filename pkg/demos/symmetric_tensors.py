"""Harmonic symmetric tensors of the natural osp(2|2n)-module.

S(C^{2|2n}) is realised as superpolynomials in x, xb (even) and xi_i, xib_i
(odd). The Laplacian is equivariant, and its kernel in degree k has one,
three or two composition factors depending on how k compares with n and 2n.
"""

from ospfock import tensor

n = 2
for k in range(0, 7):
    ker = tensor.kernel_laplacian(k, n)
    factors = ", ".join(f"L({w})" for w, _ in tensor.decompose_kernel(k, n))
    print(f"k={k}: dim S^k = {tensor.dim_Sk(k, n):3d}, dim ker = {ker.dim:3d}  ->  {factors}")

# Beyond degree 2n the kernel has constant dimension 2^(2n+1).
print(f"\n2^(2n+1) = {2 ** (2 * n + 1)}")

# The second highest weight vector is written down explicitly.
g = tensor.gamma(5, n)
print(f"\nGamma(5, {n}) = {g}")
print("Laplacian kills it:", not tensor.laplacian(g))
print("all e_i kill it:", all(not tensor.act(("e", i), g) for i in range(n + 1)))
print("equivariance holds in degree 5:", tensor.check_equivariance(5, n))
