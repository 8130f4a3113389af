"""Structural tests for when the four graphs are complete or coincide.

Each predicate reads only the Cayley table and the monogenic profiles; no
graph is built.  :func:`verify` puts a predicate next to the verdict read
off the graphs themselves, so the two routes check each other.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from typing import Callable, Mapping

from .core import (
    ElementSet,
    Semigroup,
    closure_mask,
    cpxcp_witness,
    cyclic_subgroups,
    idempotents,
    is_monogenic,
    is_prime_power,
    monogenic_generator_of_mask,
)
from .errors import InconsistentFormulations, TooLargeForExhaustive
from .graphs import (
    GraphKind,
    SimpleGraph,
    build_graph,
    edge_difference,
    graphs_equal,
    is_complete,
    missing_edges,
)

DEFAULT_EXHAUSTIVE_BOUND = 8


def exhaustive_bound() -> int:
    value = os.environ.get("SEMIGRAPHS_MAX_EXHAUSTIVE")
    return int(value) if value else DEFAULT_EXHAUSTIVE_BOUND


def _gamma_shape(m: int, r: int) -> bool:
    # index 1 or 2, or index 3 with odd period (3 + r even)
    return m <= 2 or (m == 3 and r % 2 == 1)


def pe_complete_pred(S: Semigroup) -> bool:
    return is_monogenic(S) is not None


def gamma_complete_pred(S: Semigroup) -> bool:
    a = is_monogenic(S)
    if a is None:
        return False
    p = S.profiles[a]
    return _gamma_shape(p.index, p.period)


def pow_complete_pred(S: Semigroup) -> bool:
    a = is_monogenic(S)
    if a is None:
        return False
    p = S.profiles[a]
    return is_prime_power(p.period) and _gamma_shape(p.index, p.period)


def chain_condition(S: Semigroup) -> bool:
    """Monogenic subsemigroups are totally ordered by inclusion."""
    orbits = sorted(set(S.orbit_masks), key=int.bit_count)
    return all(small & ~big == 0 for small, big in zip(orbits, orbits[1:]))


def pc_complete_pred(S: Semigroup) -> bool:
    return S.is_commutative


def pe_eq_gamma_pred(S: Semigroup) -> bool:
    return all(_gamma_shape(p.index, p.period) for p in S.profiles)


def cyclic_subgroups_prime_power(S: Semigroup) -> bool:
    return all(is_prime_power(len(H)) for H in cyclic_subgroups(S))


def periods_prime_power(S: Semigroup) -> bool:
    return all(is_prime_power(p.period) for p in S.profiles)


def gamma_eq_pow_pred(S: Semigroup) -> bool:
    by_subgroups = cyclic_subgroups_prime_power(S)
    by_periods = periods_prime_power(S)
    if by_subgroups != by_periods:
        raise InconsistentFormulations(
            f"cyclic-subgroup test says {by_subgroups}, period test says {by_periods}"
        )
    return by_subgroups


def pe_eq_pow_pred(S: Semigroup) -> bool:
    # r = 1 is p**0 for any odd p, so index 3 needs exactly an odd period
    return all(
        is_prime_power(p.period) and _gamma_shape(p.index, p.period) for p in S.profiles
    )


def _commuting_pairs(S: Semigroup):
    t = S.table
    for x in range(S.order):
        for y in range(x + 1, S.order):
            if t[x][y] == t[y][x]:
                yield x, y


def non_monogenic_commuting_pair(S: Semigroup) -> tuple[int, int] | None:
    for x, y in _commuting_pairs(S):
        if monogenic_generator_of_mask(S, closure_mask(S, 1 << x | 1 << y)) is None:
            return x, y
    return None


def commutative_subsemigroups(S: Semigroup, bound: int | None = None) -> list[ElementSet]:
    """Every commutative subsemigroup of ``S``, smallest first.

    Grows closed commutative sets one commuting element at a time, so the
    search stays inside the commutative part of the subset lattice.
    """
    bound = exhaustive_bound() if bound is None else bound
    if S.order > bound:
        raise TooLargeForExhaustive(S.order, bound)
    n = S.order
    t = S.table
    commutes_with = [
        sum(1 << y for y in range(n) if t[x][y] == t[y][x]) for x in range(n)
    ]
    seen: set[int] = set()
    stack = [closure_mask(S, 1 << x) for x in range(n)]
    while stack:
        mask = stack.pop()
        if mask in seen:
            continue
        seen.add(mask)
        centraliser = (1 << n) - 1
        for x in ElementSet(n, mask):
            centraliser &= commutes_with[x]
        for y in ElementSet(n, centraliser & ~mask):
            stack.append(closure_mask(S, mask | 1 << y))
    return [ElementSet(n, m) for m in sorted(seen, key=lambda m: (m.bit_count(), m))]


def gamma_eq_pc_pred(S: Semigroup, mode: str = "two_generated", bound: int | None = None) -> bool:
    if mode == "two_generated":
        return non_monogenic_commuting_pair(S) is None
    if mode == "exhaustive":
        return all(
            monogenic_generator_of_mask(S, H.mask) is not None
            for H in commutative_subsemigroups(S, bound)
        )
    raise ValueError(f"unknown mode {mode!r}; expected 'two_generated' or 'exhaustive'")


def pe_eq_pc_violations(S: Semigroup) -> dict[str, tuple]:
    """Failing clauses of the enhanced-equals-commuting test, with a witness each.

    ``commuting_idempotents``: two distinct idempotents commute.
    ``cpxcp``: some subgroup is ``C_p x C_p``.
    ``shared_orbit``: commuting ``x, y``, one of index > 1, in no common orbit.
    """
    t = S.table
    out: dict[str, tuple] = {}
    E = idempotents(S).ids()
    for i, e in enumerate(E):
        for f in E[i + 1:]:
            if t[e][f] == t[f][e]:
                out["commuting_idempotents"] = (e, f)
                break
        if out:
            break
    w = cpxcp_witness(S)
    if w is not None:
        out["cpxcp"] = w
    profiles = S.profiles
    for x, y in _commuting_pairs(S):
        if max(profiles[x].index, profiles[y].index) == 1:
            continue
        both = 1 << x | 1 << y
        if not any(o & both == both for o in S.orbit_masks):
            out["shared_orbit"] = (x, y)
            break
    return out


def pe_eq_pc_pred(S: Semigroup) -> bool:
    return not pe_eq_pc_violations(S)


def pow_eq_pc_pred(S: Semigroup) -> bool:
    return gamma_eq_pow_pred(S) and gamma_eq_pc_pred(S, "two_generated")


class TheoremId(enum.Enum):
    PE_COMPLETE = "PeComplete"
    GAMMA_COMPLETE = "GammaComplete"
    POW_COMPLETE = "PowComplete"
    PC_COMPLETE = "PcComplete"
    PE_EQ_GAMMA = "PeEqGamma"
    GAMMA_EQ_POW = "GammaEqPow"
    PE_EQ_POW = "PeEqPow"
    GAMMA_EQ_PC = "GammaEqPc"
    PE_EQ_PC = "PeEqPc"
    POW_EQ_PC = "PowEqPc"


P, G, E, C = GraphKind.POWER, GraphKind.CYCLIC, GraphKind.ENHANCED_POWER, GraphKind.COMMUTING

# theorem -> (predicate, graphs compared); a single graph means "is complete"
THEOREMS: dict[TheoremId, tuple[Callable[[Semigroup], bool], tuple[GraphKind, ...]]] = {
    TheoremId.PE_COMPLETE: (pe_complete_pred, (E,)),
    TheoremId.GAMMA_COMPLETE: (gamma_complete_pred, (G,)),
    TheoremId.POW_COMPLETE: (pow_complete_pred, (P,)),
    TheoremId.PC_COMPLETE: (pc_complete_pred, (C,)),
    TheoremId.PE_EQ_GAMMA: (pe_eq_gamma_pred, (E, G)),
    TheoremId.GAMMA_EQ_POW: (gamma_eq_pow_pred, (G, P)),
    TheoremId.PE_EQ_POW: (pe_eq_pow_pred, (E, P)),
    TheoremId.GAMMA_EQ_PC: (gamma_eq_pc_pred, (G, C)),
    TheoremId.PE_EQ_PC: (pe_eq_pc_pred, (E, C)),
    TheoremId.POW_EQ_PC: (pow_eq_pc_pred, (P, C)),
}


@dataclass(frozen=True)
class VerificationReport:
    construct: str
    theorem: TheoremId
    predicate_verdict: bool
    graph_verdict: bool
    witness: str | None = None

    @property
    def agrees(self) -> bool:
        return self.predicate_verdict == self.graph_verdict

    def to_json(self) -> dict:
        return {
            "construct": self.construct,
            "theorem": self.theorem.value,
            "predicate": self.predicate_verdict,
            "graph": self.graph_verdict,
            "witness": self.witness,
        }


class GraphCache:
    """Builds each of the four graphs of one semigroup at most once."""

    def __init__(self, S: Semigroup):
        self.S = S
        self._graphs: dict[GraphKind, SimpleGraph] = {}

    def __getitem__(self, kind: GraphKind) -> SimpleGraph:
        if kind not in self._graphs:
            self._graphs[kind] = build_graph(self.S, kind)
        return self._graphs[kind]


def _pair(S: Semigroup, x: int, y: int) -> str:
    return f"({x}, {y}) [{S.label(x)}, {S.label(y)}]"


def graph_verdict(S: Semigroup, theorem: TheoremId, graphs: GraphCache | None = None) -> tuple[bool, str | None]:
    graphs = graphs or GraphCache(S)
    kinds = THEOREMS[theorem][1]
    if len(kinds) == 1:
        g = graphs[kinds[0]]
        if is_complete(g):
            return True, None
        x, y = missing_edges(g)[0]
        return False, f"{_pair(S, x, y)} not adjacent in {kinds[0].value} graph"
    big, small = graphs[kinds[0]], graphs[kinds[1]]
    if graphs_equal(big, small):
        return True, None
    x, y = edge_difference(big, small)[0]
    a, b = (big, small) if big.has_edge(x, y) else (small, big)
    return False, f"{_pair(S, x, y)} adjacent in {a.kind.value} but not in {b.kind.value} graph"


def verify(
    S: Semigroup,
    theorem: TheoremId,
    construct: str = "",
    graphs: GraphCache | None = None,
    predicates: Mapping[TheoremId, Callable[[Semigroup], bool]] | None = None,
) -> VerificationReport:
    """Compare the structural predicate for ``theorem`` with the graphs.

    ``predicates`` overrides individual predicates; the negative-control
    tests use it to plant a wrong one.
    """
    pred = (predicates or {}).get(theorem, THEOREMS[theorem][0])
    verdict = bool(pred(S))
    by_graph, witness = graph_verdict(S, theorem, graphs)
    if verdict != by_graph:
        detail = witness or "graphs agree but predicate says otherwise"
        witness = f"MISMATCH predicate={verdict} graph={by_graph}: {detail}"
    return VerificationReport(construct, theorem, verdict, by_graph, witness)


def verify_all(S: Semigroup, construct: str = "", predicates=None) -> list[VerificationReport]:
    cache = GraphCache(S)
    return [verify(S, t, construct, cache, predicates) for t in TheoremId]
