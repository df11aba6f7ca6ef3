"""Torsionless, reflexive, semi-Gorenstein-projective: the module zoo.

The (a+1, a) family carries three distinguished length-(a+1) modules that
separate the key homological predicates:

  * M(0) is Gorenstein-projective with syzygy period one,
  * M(q) is semi-Gorenstein-projective but not torsionless,
  * M(1) is infinity-torsionfree while its syzygy picks up a simple
    direct summand (the resolution ranks then grow without bound).

All "for all i >= 1" statements are checked to an explicit bound and
reported as such; nothing here claims unbounded certification.
"""

from shortloc import (classify_complex, dim_vector, is_gp, is_inf_torsionfree,
                      is_reflexive, is_semi_gp, is_torsionless, m_alpha, preset,
                      simple_multiplicity, syzygy)

alg = preset("lambda_c", c=0)
BOUND = 10

for alpha, label in [(0, "M(0)"), (2, "M(q)"), (1, "M(1)")]:
    M = m_alpha(alg, alpha)
    semi = is_semi_gp(M, BOUND)
    inftf = is_inf_torsionfree(M, BOUND)
    print(f"{label}: dim vector {dim_vector(M)}")
    print(f"  torsionless: {is_torsionless(M)}   reflexive: {is_reflexive(M)}")
    print(f"  semi-GP (to {BOUND}): {semi.holds}   "
          f"infinity-torsionfree (to {BOUND}): {inftf.holds}   "
          f"GP: {is_gp(M, BOUND).holds}")
    om = syzygy(M)
    print(f"  syzygy: dim vector {dim_vector(om)}, "
          f"simple summands: {simple_multiplicity(om)}")
    print()

print("Window of the acyclic complex through M(0) (backwards = syzygies):")
cls = classify_complex(m_alpha(alg, 0), back=4, fwd=4)
print(f"  kind {cls.kind}, ranks {list(cls.ranks)}, period {cls.period}")

print("Window through M(1): constant, then the ranks take off:")
cls = classify_complex(m_alpha(alg, 1), back=4, fwd=3)
print(f"  kind {cls.kind}, ranks {list(cls.ranks)}, jump after index {cls.v_index}")
