"""Syzygies, Betti numbers, and the dimension-vector law.

The Betti numbers of a module are the ranks along its minimal projective
resolution.  For a Loewy-length <= 2 module M over an algebra of Hilbert
type (e, a), the dimension vector of the first syzygy is

    dim(Omega M) = (e t - s, a t) + (w, -w),

where dim M = (t, s) and S^w splits off the syzygy.  The recursion
b_{n+1} = e b_n - a b_{n-1} therefore tracks the Betti numbers of the
simple module for as long as its syzygies stay aligned (w = 0).
"""

from shortloc import (b_closed_form, b_sequence, betti, dim_vector,
                      main_lemma_witness, preset, simple_module, syzygy)

for name, kwargs, depth in [("L", {"e": 3}, 4), ("qexterior", {}, 6),
                            ("ex8_3", {}, 4), ("lambda_c", {"c": 0}, 6)]:
    alg = preset(name, **kwargs)
    S = simple_module(alg)
    table = betti(S, depth)
    seq = b_sequence(alg.e, alg.a, depth)
    print(f"{alg.name:18s} t_i(S) = {list(table.values)}")
    print(f"{'':18s} b(e,a) = {list(seq.values[1:])}"
          f"   (match while aligned: {table.values == seq.values[1:]})")

print()
print("Watching the law on one syzygy step over the (3,2) family algebra:")
alg = preset("lambda_c", c=0)
from shortloc import m_alpha

for alpha in (0, 1):
    M = m_alpha(alg, alpha)
    wit = main_lemma_witness(M)
    print(f"  M({alpha}): dim {wit.dim} -> syzygy {wit.omega_dim}, "
          f"predicted {wit.predicted}, w = {wit.w}")

print()
print("Closed form vs recursion for (e,a) = (5,4):",
      [b_closed_form(5, 4, n) for n in range(7)])
