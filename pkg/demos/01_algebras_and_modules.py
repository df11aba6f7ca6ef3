"""Tour of the basic objects: short local algebras and their modules.

A short local algebra has radical J with J^3 = 0; it is determined by the
ground field, the dimensions e = dim J/J^2 and a = dim J^2, and the
structure constants expressing products of radical generators in a basis
of J^2.  Run this script to see the preset catalog and the structural
invariants of a few modules.
"""

from shortloc import (dim_vector, is_bipartite, left_regular_module, preset,
                      preset_names, radical_module, simple_module)

print("preset catalog:", ", ".join(preset_names()))
print()

for name, kwargs in [("L", {"e": 2}), ("qexterior", {}), ("lambda_c", {"c": 0}),
                     ("ex9_3", {}), ("ex15_1", {"e": 3, "a": 2})]:
    alg = preset(name, **kwargs)
    rep = alg.validate()
    print(f"{alg.name}")
    print(f"  Hilbert type {rep.hilbert_type}, dimension {rep.dimension}, "
          f"commutative: {rep.commutative}")
    print(f"  socles: left {rep.left_socle_dim}, right {rep.right_socle_dim}; "
          f"self-injective: {rep.self_injective}")

print()
print("Modules over the (3,2) algebra of the lambda family:")
alg = preset("lambda_c", c=0)
A = left_regular_module(alg)
J = radical_module(alg)
S = simple_module(alg)
print(f"  regular module: dim {A.dim}, Loewy length {A.loewy_length()}, "
      f"top {A.top_dim()}")
print(f"  radical J:      dim {J.dim}, dimension vector {dim_vector(J)}, "
      f"bipartite: {is_bipartite(J)}")
print(f"  simple S:       dimension vector {dim_vector(S)}")
