"""Orbit walking: syzygy paths, cosyzygy paths, periodicity, complex shapes.

A non-zero acyclic minimal complex of projective modules is determined by
its sequence of images; walking a module backwards (syzygies) and
forwards (cosyzygies of minimal left approximations, or periodic
continuation) produces a finite window of that sequence.  The window is
classified by its rank pattern: constant, or constant then strictly
increasing past an index v.  Finite windows are evidence, not
certification, except when periodicity closes the complex.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import BadParams, InvariantViolation, LoewyTooLong, ResourceCapExceeded
from .homology import DEFAULT_CAP, is_reflexive, is_torsionless, mho_step, syzygy
from .modules import AModule, dim_vector, find_isomorphism, is_bipartite, simple_multiplicity
from .numerics import defect


@dataclass(frozen=True)
class PathStep:
    """Invariants of one module along a walk."""

    index: int
    dim: int
    rank: int
    dim_vector: Optional[tuple[int, int]]
    bipartite: bool
    simple_mult: Optional[int]
    defect: Optional[int]
    loewy: int

    def as_dict(self) -> dict:
        return {
            "index": self.index,
            "dim": self.dim,
            "rank": self.rank,
            "dim_vector": list(self.dim_vector) if self.dim_vector is not None else None,
            "bipartite": self.bipartite,
            "simple_mult": self.simple_mult,
            "defect": self.defect,
            "loewy": self.loewy,
        }


@dataclass(frozen=True)
class PathRecord:
    """A walk log: per-step invariants plus the reason it stopped early."""

    direction: str
    steps: tuple[PathStep, ...]
    terminated_reason: Optional[str] = None

    @property
    def ranks(self) -> tuple[int, ...]:
        return tuple(s.rank for s in self.steps)

    def as_dict(self) -> dict:
        return {
            "direction": self.direction,
            "steps": [s.as_dict() for s in self.steps],
            "terminated_reason": self.terminated_reason,
        }


def describe_step(M: AModule, index: int) -> PathStep:
    loewy = M.loewy_length()
    dv = None
    mult = None
    delta = None
    if loewy <= 2:
        dvv = dim_vector(M)
        dv = (dvv.t, dvv.s)
        mult = simple_multiplicity(M)
        if M.algebra.a == M.algebra.e - 1:
            delta = defect(M)
    return PathStep(index=index, dim=M.dim, rank=M.top_dim(), dim_vector=dv,
                    bipartite=is_bipartite(M), simple_mult=mult,
                    defect=delta, loewy=loewy)


def omega_path(M: AModule, n: int, cap: int = DEFAULT_CAP) -> PathRecord:
    """Record the invariants of M, Omega M, ..., Omega^n M."""
    steps = [describe_step(M, 0)]
    cur = M
    reason = None
    for i in range(1, n + 1):
        if cur.dim == 0:
            reason = "projective_reached"
            break
        try:
            cur = syzygy(cur, cap=cap)
        except ResourceCapExceeded:
            reason = "resource_cap"
            break
        steps.append(describe_step(cur, i))
        if cur.dim == 0:
            reason = "projective_reached"
            break
    return PathRecord(direction="omega", steps=tuple(steps), terminated_reason=reason)


def mho_path(M: AModule, n: int, cap: int = DEFAULT_CAP) -> PathRecord:
    """Iterate the cosyzygy while the module stays torsionless and short."""
    steps = [describe_step(M, 0)]
    cur = M
    reason = None
    for i in range(1, n + 1):
        if cur.loewy_length() > 2:
            reason = "loewy_too_long"
            break
        if not is_torsionless(cur):
            reason = "not_torsionless"
            break
        if cur.dim == 0:
            reason = "projective_reached"
            break
        step = mho_step(cur)
        cur = step.cokernel
        steps.append(describe_step(cur, i))
        if cur.dim == 0:
            reason = "projective_reached"
            break
    return PathRecord(direction="mho", steps=tuple(steps), terminated_reason=reason)


def periodicity_detect(M: AModule, bound: int, seed: int = 0,
                       cap: int = DEFAULT_CAP) -> Optional[int]:
    """Least p <= bound with Omega^p M isomorphic to M, if any.

    The isomorphism test is the probabilistic search, so a period is
    certified but its absence is not.
    """
    if bound < 1:
        raise BadParams("bound must be at least 1")
    cur = M
    for p in range(1, bound + 1):
        cur = syzygy(cur, cap=cap)
        if cur.dim == M.dim and find_isomorphism(M, cur, seed=seed).found:
            return p
    return None


@dataclass(frozen=True)
class ComplexClassification:
    """Shape of a finite window of a would-be acyclic minimal complex.

    ``ranks`` lists the tops of the images in complex order: the cosyzygy
    side first, the module at ``module_index``, then the syzygy side.
    Type I means constant ranks; Type II means constant up to ``v_index``
    then strictly increasing.  ``forward_verified`` records whether the
    forward direction was actually constructed (by periodicity or by a
    reflexivity-guarded cosyzygy chain).
    """

    kind: str
    ranks: tuple[int, ...]
    module_index: int
    v_index: Optional[int] = None
    defects: Optional[tuple[Optional[int], ...]] = None
    forward_verified: bool = True
    period: Optional[int] = None
    obstruction: Optional[str] = None

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "ranks": list(self.ranks),
            "module_index": self.module_index,
            "v_index": self.v_index,
            "defects": list(self.defects) if self.defects is not None else None,
            "forward_verified": self.forward_verified,
            "period": self.period,
            "obstruction": self.obstruction,
        }


def _check_defect_monotonicity(steps: list[PathStep]):
    """Sign behaviour of the defect along consecutive syzygy steps.

    With a = e-1: defect 0 propagates with constant rank, or the rank and
    the defect jump together and the next module is not bipartite;
    positive defect forces strictly growing ranks and defects.
    """
    for cur, nxt in zip(steps, steps[1:]):
        if cur.defect is None or nxt.defect is None:
            continue
        if cur.defect == 0:
            ok = (nxt.rank == cur.rank and nxt.defect == 0) or \
                 (nxt.rank > cur.rank and nxt.defect > 0 and not nxt.bipartite)
        elif cur.defect > 0:
            ok = nxt.rank > cur.rank and nxt.defect > 0
        else:
            ok = True
        if not ok:
            raise InvariantViolation(
                f"defect trichotomy fails between ranks {cur.rank} and {nxt.rank}")


def classify_complex(M: AModule, back: int, fwd: int, seed: int = 0,
                     cap: int = DEFAULT_CAP) -> ComplexClassification:
    """Classify the window of a minimal acyclic complex through M.

    Walks syzygies ``back`` steps; extends forward ``fwd`` steps either by
    detected periodicity of the syzygy orbit or by cosyzygies along a
    reflexivity chain.  Self-injective algebras are reported as their own
    regime (there every module is an image in a complete resolution).
    """
    if M.loewy_length() > 2:
        raise LoewyTooLong("complex classification needs Loewy length <= 2")
    if not is_torsionless(M):
        raise BadParams("complex classification needs a torsionless module")
    alg = M.algebra
    a_defects = alg.a == alg.e - 1

    back_mods = [M]
    obstruction = None
    for _ in range(back):
        try:
            nxt = syzygy(back_mods[-1], cap=cap)
        except ResourceCapExceeded:
            obstruction = "resource_cap"
            break
        if nxt.dim == 0:
            obstruction = "projective resolution terminates"
            break
        back_mods.append(nxt)

    period = None
    for p in range(1, len(back_mods)):
        cand = back_mods[p]
        if cand.dim == M.dim and find_isomorphism(M, cand, seed=seed).found:
            period = p
            break

    fwd_mods: list[AModule] = []
    forward_verified = True
    if fwd > 0:
        if period is not None:
            for j in range(1, fwd + 1):
                fwd_mods.append(back_mods[(period - (j % period)) % period])
        else:
            cur = M
            for j in range(1, fwd + 1):
                if not is_reflexive(cur):
                    forward_verified = False
                    if obstruction is None:
                        obstruction = f"reflexivity fails at forward step {j}"
                    break
                step = mho_step(cur)
                if not step.injective:
                    forward_verified = False
                    if obstruction is None:
                        obstruction = f"approximation not injective at forward step {j}"
                    break
                cur = step.cokernel
                if cur.loewy_length() > 2:
                    forward_verified = False
                    if obstruction is None:
                        obstruction = f"cosyzygy leaves Loewy length 2 at step {j}"
                    break
                fwd_mods.append(cur)

    steps = []
    ordered = list(reversed(fwd_mods)) + back_mods
    module_index = len(fwd_mods)
    for idx, mod in enumerate(ordered):
        steps.append(describe_step(mod, idx))
    ranks = tuple(s.rank for s in steps)
    defects = tuple(s.defect for s in steps) if a_defects else None
    if a_defects:
        _check_defect_monotonicity(steps)

    if alg.is_self_injective():
        return ComplexClassification(kind="SelfInjectiveRegime", ranks=ranks,
                                     module_index=module_index, defects=defects,
                                     forward_verified=forward_verified, period=period,
                                     obstruction=obstruction)

    incomplete = obstruction is not None and (fwd > 0 and not forward_verified
                                              or len(back_mods) < back + 1)
    if incomplete:
        return ComplexClassification(kind="NotAcyclicExtendable", ranks=ranks,
                                     module_index=module_index, defects=defects,
                                     forward_verified=forward_verified, period=period,
                                     obstruction=obstruction)

    v = 0
    while v + 1 < len(ranks) and ranks[v + 1] == ranks[0]:
        v += 1
    if v == len(ranks) - 1:
        return ComplexClassification(kind="TypeI", ranks=ranks,
                                     module_index=module_index, defects=defects,
                                     forward_verified=forward_verified, period=period)
    tail = ranks[v:]
    if all(tail[i + 1] > tail[i] for i in range(len(tail) - 1)):
        return ComplexClassification(kind="TypeII", ranks=ranks, v_index=v,
                                     module_index=module_index, defects=defects,
                                     forward_verified=forward_verified, period=period)
    return ComplexClassification(kind="NotAcyclicExtendable", ranks=ranks,
                                 module_index=module_index, defects=defects,
                                 forward_verified=forward_verified, period=period,
                                 obstruction="rank pattern fits neither type")


def cv_sequence_check(seq: list[int], e: int, a: int) -> bool:
    """Check c_i = e c_{i+1} - a c_{i+2} for all applicable indices.

    For positive sequences this can hold for every i only in the constant
    case with a = e - 1.
    """
    return all(seq[i] == e * seq[i + 1] - a * seq[i + 2] for i in range(len(seq) - 2))
