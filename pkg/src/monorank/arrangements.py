"""Geometric generators and oracles: realized matrices, topes and circuits
of point/hyperplane arrangements, planar sweeps, and allowable sequences.

These are the brute-force ground truth the combinatorial bounds are tested
against: a matrix realized from points, normals and per-column monotone
distortions has threshold topes inside the point topes and difference topes
inside the hyperplane topes, and its column orders appear among the sweep
permutations.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np
from scipy.optimize import linprog

from .errors import DimensionMismatchError, DomainError, ResourceLimitError
from .matrices import Permutation, check_generic
from .omatroid import CircuitCandidateSet
from .signs import SignVector, SignVectorSet

DEFAULT_ENUM_GUARD = 20
_SEPARATION_MARGIN = 1e-7
_POSITION_TOL = 1e-9


# ---------------------------------------------------------------------------
# arrangement types


@dataclass(frozen=True)
class PointArrangement:
    """m points in R^d, rows of `points`."""

    dimension: int
    points: np.ndarray

    def __post_init__(self):
        pts = np.atleast_2d(np.asarray(self.points, dtype=float))
        if pts.shape[1] != self.dimension:
            raise DimensionMismatchError(
                f"points have {pts.shape[1]} coordinates, expected {self.dimension}"
            )
        if not np.all(np.isfinite(pts)):
            raise DomainError("point coordinates must be finite")
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return self.points.shape[0]

    def in_general_position(self, tol: float = _POSITION_TOL) -> bool:
        """No d+1 points affinely dependent."""
        pts = self.points
        m, d = pts.shape
        if m <= d:
            subsets = [tuple(range(m))] if m >= 1 else []
        else:
            subsets = itertools.combinations(range(m), d + 1)
        for subset in subsets:
            sub = pts[list(subset)]
            diffs = sub[1:] - sub[0]
            if diffs.shape[0] == 0:
                continue
            s = np.linalg.svd(diffs, compute_uv=False)
            if s[-1] <= tol * max(s[0], 1.0):
                return False
        return True


@dataclass(frozen=True)
class HyperplaneArrangement:
    """n nonzero normal vectors in R^d, rows of `normals`; each defines a
    central hyperplane."""

    dimension: int
    normals: np.ndarray

    def __post_init__(self):
        nv = np.atleast_2d(np.asarray(self.normals, dtype=float))
        if nv.shape[1] != self.dimension:
            raise DimensionMismatchError(
                f"normals have {nv.shape[1]} coordinates, expected {self.dimension}"
            )
        if not np.all(np.isfinite(nv)):
            raise DomainError("normal coordinates must be finite")
        norms = np.linalg.norm(nv, axis=1)
        if np.any(norms == 0):
            raise DomainError("zero normal vector")
        object.__setattr__(self, "normals", nv)

    def __len__(self) -> int:
        return self.normals.shape[0]


@dataclass(frozen=True)
class MonotoneDistortion:
    """A strictly increasing function on R from a small closed family."""

    kind: str
    params: tuple = ()

    @classmethod
    def identity(cls) -> "MonotoneDistortion":
        return cls("identity")

    @classmethod
    def exp_scale(cls, alpha: float) -> "MonotoneDistortion":
        if alpha <= 0:
            raise DomainError("exp-scale parameter must be positive")
        return cls("exp-scale", (float(alpha),))

    @classmethod
    def power_odd(cls, k: int) -> "MonotoneDistortion":
        if k < 1 or k % 2 == 0:
            raise DomainError("power-odd exponent must be odd and positive")
        return cls("power-odd", (int(k),))

    @classmethod
    def piecewise_linear(
        cls, breakpoints: Sequence[float], values: Sequence[float]
    ) -> "MonotoneDistortion":
        bp = tuple(float(b) for b in breakpoints)
        vals = tuple(float(v) for v in values)
        if len(bp) != len(vals) or len(bp) < 2:
            raise DomainError("need at least two matching breakpoints and values")
        if any(b2 <= b1 for b1, b2 in zip(bp, bp[1:])):
            raise DomainError("breakpoints must be strictly increasing")
        if any(v2 <= v1 for v1, v2 in zip(vals, vals[1:])):
            raise DomainError("values must be strictly increasing")
        return cls("piecewise-linear", (bp, vals))

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        if self.kind == "identity":
            return x.copy()
        if self.kind == "exp-scale":
            (alpha,) = self.params
            return np.exp(x / alpha)
        if self.kind == "power-odd":
            (k,) = self.params
            return np.sign(x) * np.abs(x) ** k
        if self.kind == "piecewise-linear":
            bp, vals = self.params
            bp = np.asarray(bp)
            vals = np.asarray(vals)
            # extend with the end slopes so the map is increasing on all of R
            lo = (vals[1] - vals[0]) / (bp[1] - bp[0])
            hi = (vals[-1] - vals[-2]) / (bp[-1] - bp[-2])
            out = np.interp(x, bp, vals)
            below = x < bp[0]
            above = x > bp[-1]
            out = np.where(below, vals[0] + lo * (x - bp[0]), out)
            out = np.where(above, vals[-1] + hi * (x - bp[-1]), out)
            return out
        raise DomainError(f"unknown distortion kind {self.kind!r}")

    def as_dict(self) -> dict:
        return {"kind": self.kind, "params": _jsonable(self.params)}


def _jsonable(obj):
    if isinstance(obj, tuple):
        return [_jsonable(x) for x in obj]
    return obj


# ---------------------------------------------------------------------------
# realization


def realize_matrix(
    points: PointArrangement,
    normals: HyperplaneArrangement,
    distortions: Sequence[MonotoneDistortion],
) -> np.ndarray:
    """A_ij = f_j(p_i · h_j); generic whenever the inner products are
    distinct within each column."""
    if points.dimension != normals.dimension:
        raise DimensionMismatchError("point and normal dimensions differ")
    if len(distortions) != len(normals):
        raise DimensionMismatchError(
            f"{len(distortions)} distortions for {len(normals)} columns"
        )
    raw = points.points @ normals.normals.T
    out = np.empty_like(raw)
    for j, f in enumerate(distortions):
        out[:, j] = f(raw[:, j])
    return out


class RandomRepresentation(NamedTuple):
    points: PointArrangement
    normals: HyperplaneArrangement
    distortions: tuple[MonotoneDistortion, ...]
    matrix: np.ndarray


def random_representation(
    m: int, n: int, d: int, seed: int, *, identity_distortions: bool = False
) -> RandomRepresentation:
    """Standard-normal points and normals with random per-column distortions,
    resampled until the realized matrix is generic.  Deterministic per seed.
    """
    if m < 1 or n < 1 or d < 1:
        raise DomainError("m, n, d must all be at least 1")
    rng = np.random.default_rng(seed)
    for _ in range(100):
        pts = PointArrangement(d, rng.standard_normal((m, d)))
        nrm = HyperplaneArrangement(d, rng.standard_normal((n, d)))
        if identity_distortions:
            fs = tuple(MonotoneDistortion.identity() for _ in range(n))
        else:
            fs = tuple(_random_distortion(rng) for _ in range(n))
        matrix = realize_matrix(pts, nrm, fs)
        if check_generic(matrix).is_generic:
            return RandomRepresentation(pts, nrm, fs, matrix)
    raise DomainError("failed to sample a generic representation in 100 tries")


def _random_distortion(rng: np.random.Generator) -> MonotoneDistortion:
    kind = rng.integers(0, 3)
    if kind == 0:
        return MonotoneDistortion.exp_scale(float(rng.uniform(0.5, 3.0)))
    if kind == 1:
        return MonotoneDistortion.power_odd(int(rng.choice([1, 3, 5])))
    knots = int(rng.integers(3, 6))
    bp = np.sort(rng.uniform(-4.0, 4.0, knots))
    while np.any(np.diff(bp) < 1e-3):
        bp = np.sort(rng.uniform(-4.0, 4.0, knots))
    vals = np.cumsum(rng.uniform(0.1, 2.0, knots))
    return MonotoneDistortion.piecewise_linear(bp, vals)


# ---------------------------------------------------------------------------
# topes of realized arrangements (candidate-by-candidate separation LPs)


def _max_margin(rows: np.ndarray, signs: np.ndarray, affine: bool) -> float:
    """Largest t with sign_i (row_i · h - theta) >= t over the box
    ||(h, theta)||_inf <= 1 (theta present only in the affine case)."""
    k, d = rows.shape
    cols = d + 1 + (1 if affine else 0)
    a_ub = np.zeros((k, cols))
    a_ub[:, :d] = -signs[:, None] * rows
    if affine:
        a_ub[:, d] = signs
    a_ub[:, -1] = 1.0
    c = np.zeros(cols)
    c[-1] = -1.0
    bounds = [(-1.0, 1.0)] * (cols - 1) + [(None, None)]
    res = linprog(c, A_ub=a_ub, b_ub=np.zeros(k), bounds=bounds, method="highs")
    if res.status != 0:
        raise DomainError(f"separation LP failed: {res.message}")
    return -res.fun


def _enumerate_topes(
    rows: np.ndarray, affine: bool, margin: float, threads: int
) -> SignVectorSet:
    m = rows.shape[0]
    half = [mask | (1 << (m - 1)) for mask in range(1 << (m - 1))]

    def check(pos_mask: int) -> bool:
        signs = np.array(
            [1.0 if pos_mask >> i & 1 else -1.0 for i in range(m)], dtype=float
        )
        return _max_margin(rows, signs, affine) > margin

    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            flags = list(pool.map(check, half))
    else:
        flags = [check(p) for p in half]
    full = (1 << m) - 1
    members: list[SignVector] = []
    for pos_mask, ok in zip(half, flags):
        if ok:
            members.append(SignVector(m, pos_mask, full & ~pos_mask))
            members.append(SignVector(m, full & ~pos_mask, pos_mask))
    return SignVectorSet(m, members, negation_closed=True)


def point_topes(
    arrangement: PointArrangement,
    *,
    max_points: int = DEFAULT_ENUM_GUARD,
    margin: float = _SEPARATION_MARGIN,
    threads: int = 1,
) -> SignVectorSet:
    """All zero-free sign vectors realized by an affine hyperplane strictly
    separating the + points from the - points."""
    m = len(arrangement)
    if m > max_points:
        raise ResourceLimitError(f"{m} points exceeds enumeration guard {max_points}")
    return _enumerate_topes(arrangement.points, affine=True, margin=margin, threads=threads)


def hyperplane_topes(
    arrangement: HyperplaneArrangement,
    *,
    max_normals: int = DEFAULT_ENUM_GUARD,
    margin: float = _SEPARATION_MARGIN,
    threads: int = 1,
) -> SignVectorSet:
    """All zero-free sign vectors realized by a point strictly off every
    hyperplane of the central arrangement."""
    n = len(arrangement)
    if n > max_normals:
        raise ResourceLimitError(f"{n} normals exceeds enumeration guard {max_normals}")
    return _enumerate_topes(arrangement.normals, affine=False, margin=margin, threads=threads)


def point_circuits(
    arrangement: PointArrangement,
    *,
    max_points: int = DEFAULT_ENUM_GUARD,
    tol: float = _POSITION_TOL,
) -> CircuitCandidateSet:
    """Minimal Radon partitions of a general-position point set: the signed
    affine dependence of each (d+2)-subset, both orientations."""
    pts = arrangement.points
    m, d = pts.shape
    if m > max_points:
        raise ResourceLimitError(f"{m} points exceeds enumeration guard {max_points}")
    hom = np.hstack([pts, np.ones((m, 1))])
    members: list[SignVector] = []
    for subset in itertools.combinations(range(m), d + 2):
        sub = hom[list(subset)].T  # (d+1) x (d+2)
        _, s, vt = np.linalg.svd(sub)
        if s[-1] <= tol * s[0]:
            names = tuple(i + 1 for i in subset)
            raise DomainError(
                f"points {names} are affinely degenerate (null space dimension > 1)"
            )
        null = vt[-1]
        if np.min(np.abs(null)) <= tol * np.max(np.abs(null)):
            names = tuple(i + 1 for i in subset)
            raise DomainError(
                f"points {names} are not in general position (vanishing coefficient)"
            )
        pos = neg = 0
        for idx, i in enumerate(subset):
            if null[idx] > 0:
                pos |= 1 << i
            else:
                neg |= 1 << i
        members.append(SignVector(m, pos, neg))
        members.append(SignVector(m, neg, pos))
    return CircuitCandidateSet(
        ground_size=m,
        circuits=SignVectorSet(m, members, negation_closed=True),
        uniform_rank=d + 1,
    )


# ---------------------------------------------------------------------------
# planar sweeps and allowable sequences


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of checking the three allowable-sequence conditions plus the
    simplicity flag; `violation` names the first failed condition."""

    valid: bool
    simple: bool
    violation: str | None = None


def _reverse_perm(perm: Permutation) -> Permutation:
    return tuple(reversed(perm))


def _reversal_runs(cur: Permutation, nxt: Permutation) -> list[tuple[int, int]] | None:
    """Decompose nxt as cur with disjoint index intervals reversed; returns
    the intervals or None if no such decomposition exists."""
    m = len(cur)
    position = {v: i for i, v in enumerate(cur)}
    runs = []
    i = 0
    while i < m:
        if cur[i] == nxt[i]:
            i += 1
            continue
        k = position.get(nxt[i])
        if k is None or k <= i:
            return None
        if tuple(reversed(cur[i : k + 1])) != nxt[i : k + 1]:
            return None
        runs.append((i, k))
        i = k + 1
    return runs


def validate_allowable(perms: Sequence[Permutation]) -> ValidationReport:
    """Check a circular permutation list against the allowable-sequence
    conditions: closure under reversal, steps that reverse disjoint
    substrings, and one order reversal per pair per half-period (the list
    must be antipodal: the opposite permutation sits half a period away).
    """
    perms = [tuple(p) for p in perms]
    if not perms:
        raise DomainError("empty permutation sequence")
    m = len(perms[0])
    ground = tuple(range(1, m + 1))
    for p in perms:
        if tuple(sorted(p)) != ground:
            raise DomainError(f"{p} is not a permutation of 1..{m}")
    length = len(perms)
    present = set(perms)
    for p in perms:
        if _reverse_perm(p) not in present:
            return ValidationReport(
                False, False, f"condition 1: reverse of {p} missing"
            )
    simple = True
    total_flips = 0
    for idx in range(length):
        cur, nxt = perms[idx], perms[(idx + 1) % length]
        runs = _reversal_runs(cur, nxt)
        if runs is None or not runs:
            return ValidationReport(
                False,
                False,
                f"condition 2: step {idx + 1} is not a disjoint-substring reversal",
            )
        total_flips += sum((k - i + 1) * (k - i) // 2 for i, k in runs)
        if len(runs) != 1 or runs[0][1] - runs[0][0] != 1:
            simple = False
    if length % 2 != 0:
        return ValidationReport(False, simple, "condition 3: odd period")
    pairs = m * (m - 1) // 2
    if total_flips != 2 * pairs:
        return ValidationReport(
            False,
            simple,
            f"condition 3: pair-reversal count violated "
            f"({total_flips} flips per period, expected {2 * pairs})",
        )
    half = length // 2
    for idx in range(half):
        if perms[(idx + half) % length] != _reverse_perm(perms[idx]):
            return ValidationReport(
                False,
                simple,
                f"condition 3: permutation opposite {perms[idx]} is not its reverse",
            )
    return ValidationReport(True, simple, None)


class AllowableSequence:
    """A validated circular sequence of permutations, stored in canonical
    rotation: starting at the lexicographically smallest permutation,
    oriented so its successor is lexicographically smaller than its
    predecessor."""

    __slots__ = ("permutations", "report")

    def __init__(self, perms: Sequence[Permutation]):
        report = validate_allowable(perms)
        if not report.valid:
            raise DomainError(f"not an allowable sequence: {report.violation}")
        object.__setattr__(self, "report", report)
        object.__setattr__(self, "permutations", _canonical_rotation(perms))

    def __setattr__(self, name, value):
        raise AttributeError("AllowableSequence is immutable")

    @property
    def is_simple(self) -> bool:
        return self.report.simple

    def __len__(self) -> int:
        return len(self.permutations)

    def __iter__(self):
        return iter(self.permutations)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AllowableSequence)
            and self.permutations == other.permutations
        )

    def __hash__(self) -> int:
        return hash(self.permutations)

    def __repr__(self) -> str:
        return f"AllowableSequence({list(self.permutations)!r})"


def _canonical_rotation(perms: Sequence[Permutation]) -> tuple[Permutation, ...]:
    perms = [tuple(p) for p in perms]
    length = len(perms)
    start = min(range(length), key=lambda i: perms[i])
    succ = perms[(start + 1) % length]
    pred = perms[(start - 1) % length]
    if succ <= pred:
        rotated = [perms[(start + i) % length] for i in range(length)]
    else:
        rotated = [perms[(start - i) % length] for i in range(length)]
    return tuple(rotated)


def sweep_permutations(arrangement: PointArrangement) -> AllowableSequence:
    """The circular sequence of orders in which a rotating directed sweep
    line passes the points of a planar arrangement.

    Critical directions are those perpendicular to a connecting segment;
    between consecutive critical directions the order of p · h is constant.
    Requires a simple configuration: distinct points, no two connecting
    segments parallel, no three points collinear (coincident critical
    directions name the offending pairs).
    """
    if arrangement.dimension != 2:
        raise DomainError("sweeps are defined for planar arrangements")
    pts = arrangement.points
    m = len(pts)
    if m < 2:
        raise DomainError("need at least two points to sweep")
    criticals: list[tuple[float, tuple[int, int]]] = []
    for i, k in itertools.combinations(range(m), 2):
        dx, dy = pts[i] - pts[k]
        if dx == 0.0 and dy == 0.0:
            raise DomainError(f"points {i + 1} and {k + 1} coincide")
        angle = math.atan2(dx, -dy) % math.pi
        criticals.append((angle, (i + 1, k + 1)))
    criticals.sort()
    for (a1, pair1), (a2, pair2) in zip(criticals, criticals[1:] + [(criticals[0][0] + math.pi, criticals[0][1])]):
        if abs(a2 - a1) <= _POSITION_TOL:
            raise DomainError(
                f"degenerate configuration: pairs {pair1} and {pair2} give "
                f"parallel connecting segments (or a collinear triple)"
            )
    angles = [a for a, _ in criticals]
    angles = angles + [a + math.pi for a in angles]
    perms: list[Permutation] = []
    count = len(angles)
    for idx in range(count):
        a0 = angles[idx]
        a1 = angles[(idx + 1) % count] + (2 * math.pi if idx == count - 1 else 0.0)
        mid = (a0 + a1) / 2.0
        h = np.array([math.cos(mid), math.sin(mid)])
        keys = pts @ h
        order = np.argsort(keys)
        perms.append(tuple(int(i) + 1 for i in order))
    return AllowableSequence(perms)


def matrix_from_allowable(
    sequence: AllowableSequence | Sequence[Permutation],
) -> np.ndarray:
    """One column per permutation, holding the values 1..m in that order:
    the row named by position i receives value i.  Column orders of the
    result reproduce the sequence's permutations.

    Accepts a validated AllowableSequence or any list of permutations of a
    common ground set (the construction itself needs no circular structure).
    """
    if isinstance(sequence, AllowableSequence):
        perms = sequence.permutations
    else:
        perms = tuple(tuple(p) for p in sequence)
        if not perms:
            raise DomainError("empty permutation sequence")
        ground = tuple(range(1, len(perms[0]) + 1))
        for p in perms:
            if tuple(sorted(p)) != ground:
                raise DomainError(f"{p} is not a permutation of 1..{len(ground)}")
    m = len(perms[0])
    cols = []
    for perm in perms:
        col = np.empty(m, dtype=float)
        for value, row in enumerate(perm, start=1):
            col[row - 1] = value
        cols.append(col)
    return np.column_stack(cols)


# -- point / permutation file formats ---------------------------------------


def parse_points_csv(text: str) -> PointArrangement:
    from .matrices import parse_matrix

    pts = parse_matrix(text)
    return PointArrangement(pts.shape[1], pts)


def parse_allowable_file(text: str) -> list[Permutation]:
    """One permutation per line as space-separated integers; circular
    closure implied."""
    perms: list[Permutation] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            perm = tuple(int(tok) for tok in line.split())
        except ValueError:
            raise DomainError(f"line {lineno}: not a permutation line") from None
        perms.append(perm)
    if not perms:
        raise DomainError("no permutations found")
    return perms


def format_allowable_file(perms: Iterable[Permutation]) -> str:
    return "\n".join(" ".join(str(i) for i in p) for p in perms) + "\n"
