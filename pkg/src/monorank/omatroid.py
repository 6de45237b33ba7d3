"""Oriented-matroid machinery: potential circuits, circuit-axiom checking,
uniform completion search, completion-rank bounds, and the linear-time
rank-two tope recognizer.

The completion search asks whether some uniform rank-d oriented matroid has
all of Sigma among its topes.  Uniformity is the standard reduction: the
matroid may be perturbed to general position without losing topes, so the
circuit set becomes one ± pair per (d+1)-support, drawn from the potential
circuits (the vectors of that support size orthogonal to all of Sigma).

Weak elimination (C4) is checked in separator-symmetric form: for vectors
X, Y with X != -Y and any e where they oppose, some circuit Z must satisfy
Z+ ⊆ (X+ ∪ Y+) \\ e and Z- ⊆ (X- ∪ Y-) \\ e.  For negation-closed sets this
is equivalent to the one-sided axiom.  Checks are ordered by the support of
the required eliminant (colexicographically), then by canonical vector
order, which pins down the reported violation witness deterministically.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import DomainError, ResourceLimitError
from .signs import SignVector, SignVectorSet

DEFAULT_GROUND_GUARD = 10
DEFAULT_RANK_GUARD = 4


# ---------------------------------------------------------------------------
# data types


@dataclass(frozen=True)
class CircuitCandidateSet:
    """A negation-closed set of candidate circuits on [ground_size].

    When uniform_rank is set, every support has size uniform_rank + 1 and
    carries at most one ± pair, as in a uniform oriented matroid.
    """

    ground_size: int
    circuits: SignVectorSet
    uniform_rank: int | None = None

    def __post_init__(self):
        if self.circuits.ground_size != self.ground_size:
            raise DomainError("circuit set ground size mismatch")
        if not self.circuits.is_negation_closed():
            raise DomainError("circuit candidate set must be negation-closed")
        if self.uniform_rank is not None:
            size = self.uniform_rank + 1
            per_support: dict[int, set[SignVector]] = {}
            for v in self.circuits:
                if len(v.support()) != size:
                    raise DomainError(
                        f"uniform rank {self.uniform_rank} requires supports of "
                        f"size {size}, got {v}"
                    )
                per_support.setdefault(v.support_mask, set()).add(v)
            for members in per_support.values():
                if len(members) > 2:
                    raise DomainError("more than one ± pair on a support")

    def __iter__(self):
        return iter(self.circuits)

    def __len__(self):
        return len(self.circuits)


@dataclass(frozen=True)
class AxiomViolation:
    """Witness for a failed circuit axiom; element is 1-based."""

    axiom: str
    x: SignVector
    y: SignVector | None = None
    element: int | None = None

    def as_dict(self) -> dict:
        out: dict = {"axiom": self.axiom, "x": str(self.x)}
        if self.y is not None:
            out["y"] = str(self.y)
        if self.element is not None:
            out["element"] = self.element
        return out

    def __str__(self) -> str:
        parts = [self.axiom, f"X={self.x}"]
        if self.y is not None:
            parts.append(f"Y={self.y}")
        if self.element is not None:
            parts.append(f"e={self.element}")
        return " ".join(parts)


@dataclass(frozen=True)
class AxiomReport:
    ok: bool
    violation: AxiomViolation | None = None


@dataclass(frozen=True)
class CompletionResult:
    """Outcome of a uniform completion search at one rank.

    feasible implies a witness; infeasible with violation=None and
    missing_support set means some support admitted no potential circuit.
    timed_out marks an exhausted node budget, in which case infeasibility
    is not certified.
    """

    feasible: bool
    witness: CircuitCandidateSet | None = None
    violation: AxiomViolation | None = None
    missing_support: frozenset[int] | None = None
    timed_out: bool = False


@dataclass(frozen=True)
class OmRankBound:
    """Smallest completable rank found; exceeds means no rank up to the
    cap worked, and value = cap + 1 is still a valid lower bound."""

    value: int
    exceeds: bool
    attempts: tuple[tuple[int, CompletionResult], ...] = ()

    def last_violation(self) -> AxiomViolation | None:
        for _, res in reversed(self.attempts):
            if res.violation is not None:
                return res.violation
        return None


# ---------------------------------------------------------------------------
# potential circuits


def potential_circuits(vectors: SignVectorSet, rank: int) -> SignVectorSet:
    """All sign vectors with support size rank+1 orthogonal to every member
    of the (zero-free, negation-closed) input set."""
    n = vectors.ground_size
    _check_topes(vectors)
    if rank + 1 > n:
        raise DomainError(f"support size {rank + 1} exceeds ground set size {n}")
    members = list(vectors)
    out: list[SignVector] = []
    for support in itertools.combinations(range(n), rank + 1):
        for v in _support_pair_reps(n, support):
            if all(v.orthogonal(y) for y in members):
                out.append(v)
                out.append(-v)
    return SignVectorSet(n, out, negation_closed=True)


def _support_pair_reps(n: int, support: Sequence[int]) -> Iterable[SignVector]:
    """One representative per ± pair on the given 0-based support: the sign
    at the smallest element is fixed to +."""
    head, *rest = support
    for bits in range(1 << len(rest)):
        pos = 1 << head
        neg = 0
        for idx, i in enumerate(rest):
            if bits >> idx & 1:
                neg |= 1 << i
            else:
                pos |= 1 << i
        yield SignVector(n, pos, neg)


def _check_topes(vectors: SignVectorSet) -> None:
    if not vectors.is_zero_free():
        raise DomainError("tope sets must be zero-free")
    if not vectors.is_negation_closed():
        raise DomainError("tope sets must be negation-closed")


# ---------------------------------------------------------------------------
# circuit axioms


class _EliminationScan:
    """Support-by-support C4 scanning with deferred checks.

    Supports enter in colexicographic order.  When a support's circuits are
    placed, pairs involving the new circuits are scanned in canonical order;
    a check fires only once every support that could host the eliminant is
    present (otherwise it is deferred), so the completion search and the
    standalone checker report identical first violations.
    """

    def __init__(self, ground_size: int, supports: Sequence[int]):
        self.ground_size = ground_size
        self.supports = sorted(supports)
        self.placed_supports: set[int] = set()
        self.pool: list[SignVector] = []
        self.deferred: list[tuple[SignVector, SignVector, int]] = []

    def snapshot(self):
        return (set(self.placed_supports), list(self.pool), list(self.deferred))

    def restore(self, state) -> None:
        self.placed_supports, self.pool, self.deferred = state

    def _decisive(self, x: SignVector, y: SignVector, e_bit: int) -> bool:
        zone = (x.support_mask | y.support_mask) & ~e_bit
        return all(
            t in self.placed_supports for t in self.supports if t & ~zone == 0
        )

    def _eliminant_exists(self, x: SignVector, y: SignVector, e_bit: int) -> bool:
        allowed_pos = (x.pos | y.pos) & ~e_bit
        allowed_neg = (x.neg | y.neg) & ~e_bit
        return any(
            z.pos & ~allowed_pos == 0 and z.neg & ~allowed_neg == 0
            for z in self.pool
        )

    def _fire(self, x, y, e_bit) -> AxiomViolation | None:
        if self._eliminant_exists(x, y, e_bit):
            return None
        return AxiomViolation("C4", x, y, element=e_bit.bit_length())

    def place(
        self, support: int, members: Sequence[SignVector]
    ) -> AxiomViolation | None:
        """Add a support's circuits; return the first C4 violation, if any."""
        new = sorted(members, key=SignVector.sort_key)
        self.pool = sorted(self.pool + new, key=SignVector.sort_key)
        self.placed_supports.add(support)
        for x in self.pool:
            for y in new:
                if x == y or x == -y:
                    continue
                sep = x.separator_mask(y)
                while sep:
                    e_bit = sep & -sep
                    sep ^= e_bit
                    if not self._decisive(x, y, e_bit):
                        self.deferred.append((x, y, e_bit))
                        continue
                    violation = self._fire(x, y, e_bit)
                    if violation is not None:
                        return violation
        still: list[tuple[SignVector, SignVector, int]] = []
        for x, y, e_bit in self.deferred:
            if self._decisive(x, y, e_bit):
                violation = self._fire(x, y, e_bit)
                if violation is not None:
                    return violation
            else:
                still.append((x, y, e_bit))
        self.deferred = still
        return None

    def final_sweep(self) -> AxiomViolation | None:
        for x, y, e_bit in self.deferred:
            violation = self._fire(x, y, e_bit)
            if violation is not None:
                return violation
        self.deferred = []
        return None


def check_circuit_axioms(
    circuits: CircuitCandidateSet | SignVectorSet,
) -> AxiomReport:
    """Verify circuit axioms C1-C4, reporting the first violation found.

    C1: no empty vector.  C2: closure under negation.  C3: comparable
    supports only within a ± pair.  C4: weak elimination, scanned in the
    deterministic support order described on the module.
    """
    members = list(circuits)
    ground = circuits.ground_size
    for v in members:
        if v.support_mask == 0:
            return AxiomReport(False, AxiomViolation("C1", v))
    index = set(members)
    for v in members:
        if -v not in index:
            return AxiomReport(False, AxiomViolation("C2", v))
    ordered = sorted(index, key=SignVector.sort_key)
    for i, x in enumerate(ordered):
        for y in ordered[i + 1 :]:
            if x == -y:
                continue
            sx, sy = x.support_mask, y.support_mask
            if sx & ~sy == 0 or sy & ~sx == 0:
                return AxiomReport(False, AxiomViolation("C3", x, y))
    by_support: dict[int, list[SignVector]] = {}
    for v in ordered:
        by_support.setdefault(v.support_mask, []).append(v)
    scan = _EliminationScan(ground, list(by_support))
    for support in scan.supports:
        violation = scan.place(support, by_support[support])
        if violation is not None:
            return AxiomReport(False, violation)
    violation = scan.final_sweep()
    if violation is not None:
        return AxiomReport(False, violation)
    return AxiomReport(True, None)


# ---------------------------------------------------------------------------
# uniform completion search


def uniform_completion(
    vectors: SignVectorSet,
    rank: int,
    *,
    max_ground: int = DEFAULT_GROUND_GUARD,
    max_nodes: int | None = None,
) -> CompletionResult:
    """Search for a uniform rank-`rank` oriented matroid whose topes contain
    the given zero-free, negation-closed set.

    One ± circuit pair is chosen per (rank+1)-support from the potential
    circuits; C1-C3 hold by construction and C4 is enforced incrementally.
    A support with no potential circuit makes completion immediately
    infeasible.  Infeasible results carry the first C4 violation seen.
    """
    n = vectors.ground_size
    _check_topes(vectors)
    if n > max_ground:
        raise ResourceLimitError(
            f"ground set size {n} exceeds completion guard {max_ground}"
        )
    if not 1 <= rank <= n - 1:
        raise DomainError(f"completion rank must be in [1, {n - 1}], got {rank}")
    members = list(vectors)
    supports: list[int] = []
    candidates: dict[int, list[SignVector]] = {}
    for support in itertools.combinations(range(n), rank + 1):
        mask = 0
        for i in support:
            mask |= 1 << i
        reps = [
            v
            for v in _support_pair_reps(n, support)
            if all(v.orthogonal(y) for y in members)
        ]
        if not reps:
            return CompletionResult(
                feasible=False,
                missing_support=frozenset(i + 1 for i in support),
            )
        supports.append(mask)
        candidates[mask] = sorted(
            (SignVector(n, v.pos, v.neg) for v in reps), key=SignVector.sort_key
        )
    supports.sort()
    scan = _EliminationScan(n, supports)
    first_violation: list[AxiomViolation | None] = [None]
    nodes = [0]

    def place(k: int) -> bool:
        if k == len(supports):
            state = scan.snapshot()
            violation = scan.final_sweep()
            if violation is None:
                return True
            if first_violation[0] is None:
                first_violation[0] = violation
            scan.restore(state)
            return False
        support = supports[k]
        for rep in candidates[support]:
            nodes[0] += 1
            if max_nodes is not None and nodes[0] > max_nodes:
                raise _NodeBudget
            state = scan.snapshot()
            violation = scan.place(support, [rep, -rep])
            if violation is None:
                if place(k + 1):
                    return True
            elif first_violation[0] is None:
                first_violation[0] = violation
            scan.restore(state)
        return False

    try:
        feasible = place(0)
    except _NodeBudget:
        return CompletionResult(feasible=False, timed_out=True)
    if not feasible:
        return CompletionResult(feasible=False, violation=first_violation[0])
    witness = CircuitCandidateSet(
        ground_size=n,
        circuits=SignVectorSet(n, scan.pool, negation_closed=True),
        uniform_rank=rank,
    )
    assert all(c.orthogonal(y) for c in witness for y in members)
    assert check_circuit_axioms(witness).ok
    return CompletionResult(feasible=True, witness=witness)


class _NodeBudget(Exception):
    pass


def om_rank_lower_bound(
    vectors: SignVectorSet,
    d_max: int,
    *,
    max_ground: int = DEFAULT_GROUND_GUARD,
    max_nodes: int | None = None,
) -> OmRankBound:
    """Smallest rank d <= d_max at which uniform completion succeeds.

    Every zero-free set on n elements completes trivially at rank n (the
    free matroid has all of {±}^n among its topes), so when d_max >= n and
    all smaller ranks fail the answer is n.  Otherwise failure up to d_max
    is reported as d_max + 1 with the exceeds flag set.
    """
    n = vectors.ground_size
    if d_max < 1:
        raise DomainError("d_max must be at least 1")
    attempts: list[tuple[int, CompletionResult]] = []
    for d in range(1, min(d_max, n - 1) + 1):
        result = uniform_completion(
            vectors, d, max_ground=max_ground, max_nodes=max_nodes
        )
        if result.timed_out:
            raise ResourceLimitError(f"completion search at rank {d} hit node budget")
        attempts.append((d, result))
        if result.feasible:
            return OmRankBound(d, exceeds=False, attempts=tuple(attempts))
    if d_max >= n:
        return OmRankBound(n, exceeds=False, attempts=tuple(attempts))
    return OmRankBound(d_max + 1, exceeds=True, attempts=tuple(attempts))


@dataclass(frozen=True)
class MatrixCompletionRank:
    """Completion rank of a matrix: max of the difference-side rank and the
    threshold-side rank minus one.  exceeds means at least one side ran out
    of d_max, so value is a lower bound rather than the exact completion
    rank."""

    value: int
    exceeds: bool
    threshold: OmRankBound
    difference: OmRankBound


def om_completion_rank_of_matrix(
    matrix: np.ndarray,
    d_max: int,
    *,
    max_ground: int = DEFAULT_GROUND_GUARD,
    max_nodes: int | None = None,
) -> MatrixCompletionRank:
    from .topes import difference_topes, threshold_topes

    thresh = om_rank_lower_bound(
        threshold_topes(matrix), d_max + 1, max_ground=max_ground, max_nodes=max_nodes
    )
    diff = om_rank_lower_bound(
        difference_topes(matrix), d_max, max_ground=max_ground, max_nodes=max_nodes
    )
    value = max(diff.value, thresh.value - 1)
    return MatrixCompletionRank(
        value=value,
        exceeds=thresh.exceeds or diff.exceeds,
        threshold=thresh,
        difference=diff,
    )


# ---------------------------------------------------------------------------
# rank-two recognizer


def is_rank2_topes(vectors: SignVectorSet) -> bool:
    """Decide whether some rank-two oriented matroid contains every given
    zero-free vector among its topes, in O(mn) time.

    The topes of a rank-two matroid sit in a circular order in which each
    coordinate flips exactly once per half-turn.  Starting from the
    canonically smallest vector X*, the candidates are bucket-sorted by
    |sep(X, X*)| and greedily chained while the separator stays nested;
    the set is completable iff the chain reaches one of each ± pair.

    Degenerate ground sets (n <= 2) are always completable; this matches
    the completion-rank convention that rank min(2, n) suffices there.
    """
    if not vectors.is_zero_free():
        raise DomainError("rank-two recognition requires zero-free vectors")
    if len(vectors) == 0:
        return True
    n = vectors.ground_size
    plus_minus: set[SignVector] = set()
    for v in vectors:
        plus_minus.add(v)
        plus_minus.add(-v)
    ordered = sorted(plus_minus, key=SignVector.sort_key)
    xstar = ordered[0]
    neg_xstar = -xstar
    buckets: list[list[SignVector]] = [[] for _ in range(n + 1)]
    for v in ordered:
        buckets[v.separator_mask(xstar).bit_count()].append(v)
    chain = [xstar]
    chain_set = {xstar}
    for bucket in buckets:
        for v in bucket:
            last = chain[-1]
            if v == last:
                continue
            if last.separator_mask(v) | v.separator_mask(neg_xstar) == last.separator_mask(neg_xstar):
                chain.append(v)
                chain_set.add(v)
    return all(v in chain_set or -v in chain_set for v in plus_minus)
