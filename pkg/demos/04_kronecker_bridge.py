"""The Kronecker bridge and the reflection functor.

Loewy-length <= 2 modules are representations of the e-Kronecker quiver
in disguise: (top M, JM) with the induced generator actions.  Over a
self-injective algebra of Hilbert type (e, 1), taking syzygies matches a
reflection functor built from the multiplication form on J/J^2, acting on
dimension vectors as (x, y) -> (e x - y, x).
"""

from shortloc import (cyclic_submodule, dim_vector, hom_decomposition_check,
                      mod_j_squared, preset, push_down, radical_module,
                      random_module, rep_dual, sigma_reflection, syzygy, tilde,
                      verify_sigma_omega)

qe = preset("qexterior")
J = radical_module(qe)
rep = tilde(J)
print(f"shadow of J over {qe.name}: dims {rep.dim_vector}")

orbit = [rep.dim_vector]
cur = rep
for _ in range(4):
    cur = sigma_reflection(qe, cur)
    orbit.append(cur.dim_vector)
print("reflection orbit of dims:", orbit)

for label, coords in [("J", None), ("A(x-y)", [0, 1, -1, 0]),
                      ("A(x-2y)", [0, 1, -2, 0])]:
    M = J if coords is None else cyclic_submodule(qe, coords)
    print(f"reflection matches syzygy on {label}: {verify_sigma_omega(qe, M)}")

print()
L2 = preset("L", e=2)
print("hom decomposition over L(2): dim Hom(M, N) = graded part + top x radical")
for seed in range(3):
    M = mod_j_squared(random_module(L2, 2, 1, seed=seed))
    N = mod_j_squared(random_module(L2, 1, 1, seed=seed + 50))
    if M.dim and N.dim:
        print(f"  seed {seed}: dims {dim_vector(M)} vs {dim_vector(N)}:",
              hom_decomposition_check(M, N))

print()
print("push-down of the dual orbit gives rigid modules over L(2):")
cur = tilde(radical_module(qe))
Q = push_down(cur, L2)
P = push_down(rep_dual(cur), L2)
print(f"  dims {dim_vector(Q)} and {dim_vector(P)}")
