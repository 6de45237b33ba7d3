"""Rank-report assembly: every lower bound the library computes for one
matrix, aggregated into a single JSON-friendly record.

The headline number is monotone_rank_lower_bound, the max of the integer
bounds: Radon rank, VC rank, the two Forster-derived bounds (threshold side
minus one), and the completion rank when that search is enabled.  Forster
bounds are floats; their integer contribution is ceil with a tiny guard
against float noise just below an integer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import GenericityError
from .matrices import check_generic
from .omatroid import (
    DEFAULT_GROUND_GUARD,
    MatrixCompletionRank,
    OmRankBound,
    is_rank2_topes,
    om_completion_rank_of_matrix,
)
from .signs import SignVectorSet
from .spectral import (
    forster_bound,
    sign_matrix_with_columns,
    sign_matrix_with_rows,
    singular_values,
)
from .topes import difference_topes, threshold_topes
from .vc import vc_dimension

_CEIL_GUARD = 1e-6


def ceil_bound(x: float) -> int:
    """Integer implied by a real lower bound, guarded against float noise."""
    return math.ceil(x - _CEIL_GUARD)


@dataclass(frozen=True)
class RankReport:
    shape: tuple[int, int]
    generic: bool
    radon_rank: int
    vc_rank: int
    forster_bound_thresh: float
    forster_bound_diff: float
    om_rank2_feasible: bool
    monotone_rank_lower_bound: int
    om_completion: MatrixCompletionRank | None = None
    singular_values: tuple[float, ...] | None = None
    threshold_tope_strings: tuple[str, ...] | None = None
    difference_tope_strings: tuple[str, ...] | None = None
    perturbed_ties: bool = False

    def integer_bounds(self) -> dict[str, int]:
        bounds = {
            "radon_rank": self.radon_rank,
            "vc_rank": self.vc_rank,
            "forster_diff": ceil_bound(self.forster_bound_diff),
            "forster_thresh_minus_one": ceil_bound(self.forster_bound_thresh) - 1,
        }
        if self.om_completion is not None:
            bounds["om_completion_rank"] = self.om_completion.value
        return bounds

    def as_dict(self) -> dict:
        out: dict = {
            "shape": list(self.shape),
            "generic": self.generic,
            "perturbed_ties": self.perturbed_ties,
            "radon_rank": self.radon_rank,
            "vc_rank": self.vc_rank,
            "forster_bound_thresh": self.forster_bound_thresh,
            "forster_bound_diff": self.forster_bound_diff,
            "om_rank2_feasible": self.om_rank2_feasible,
            "monotone_rank_lower_bound": self.monotone_rank_lower_bound,
        }
        if self.om_completion is not None:
            om = self.om_completion
            out["om_completion_rank"] = om.value
            out["om_completion_exceeds_d_max"] = om.exceeds
            out["om_completion_threshold"] = _bound_dict(om.threshold)
            out["om_completion_difference"] = _bound_dict(om.difference)
        if self.singular_values is not None:
            out["singular_values"] = list(self.singular_values)
        if self.threshold_tope_strings is not None:
            out["threshold_topes"] = list(self.threshold_tope_strings)
            out["difference_topes"] = list(self.difference_tope_strings or ())
        return out


def _bound_dict(bound: OmRankBound) -> dict:
    attempts = []
    for rank, result in bound.attempts:
        entry: dict = {"rank": rank, "feasible": result.feasible}
        if result.violation is not None:
            entry["violation"] = result.violation.as_dict()
        if result.missing_support is not None:
            entry["missing_support"] = sorted(result.missing_support)
        attempts.append(entry)
    return {"rank_bound": bound.value, "exceeds_d_max": bound.exceeds, "attempts": attempts}


def build_report(
    matrix: np.ndarray,
    *,
    complete_d_max: int | None = None,
    with_svd: bool = False,
    with_topes: bool = False,
    threads: int = 1,
    max_ground: int = DEFAULT_GROUND_GUARD,
    tie_tolerance: float = 0.0,
    perturbed: bool = False,
) -> RankReport:
    """Compute every enabled bound for a generic matrix.

    Raises GenericityError when the matrix has tied column entries; callers
    wanting to proceed anyway perturb first (see matrices.perturb_ties).
    """
    a = np.asarray(matrix, dtype=float)
    ties = check_generic(a, tie_tolerance)
    if not ties.is_generic:
        raise GenericityError(ties.describe(), ties=ties.ties)
    thresh = threshold_topes(a)
    diff = difference_topes(a)
    radon = vc_dimension(thresh, threads=threads) - 1
    vcr = vc_dimension(diff, threads=threads)
    f_thresh = forster_bound(sign_matrix_with_columns(thresh))
    f_diff = forster_bound(sign_matrix_with_rows(diff)) if len(diff) else 0.0
    rank2 = is_rank2_topes(diff) if len(diff) else True
    completion = None
    if complete_d_max is not None:
        completion = om_completion_rank_of_matrix(
            a, complete_d_max, max_ground=max_ground
        )
    candidates = [
        radon,
        vcr,
        ceil_bound(f_diff),
        ceil_bound(f_thresh) - 1,
    ]
    if completion is not None:
        candidates.append(completion.value)
    report = RankReport(
        shape=(a.shape[0], a.shape[1]),
        generic=True,
        radon_rank=radon,
        vc_rank=vcr,
        forster_bound_thresh=f_thresh,
        forster_bound_diff=f_diff,
        om_rank2_feasible=rank2,
        monotone_rank_lower_bound=max(candidates),
        om_completion=completion,
        singular_values=tuple(float(s) for s in singular_values(a)) if with_svd else None,
        threshold_tope_strings=tuple(thresh.strings()) if with_topes else None,
        difference_tope_strings=tuple(diff.strings()) if with_topes else None,
        perturbed_ties=perturbed,
    )
    return report


def encode_report(vectors: SignVectorSet) -> dict:
    """Report accompanying an encoded matrix: the Forster bound of the input
    sign set is a sign-rank lower bound for a submatrix of the encoded
    matrix's threshold topes, hence (minus one) a monotone-rank lower bound
    for the encoded matrix itself."""
    f = forster_bound(sign_matrix_with_columns(vectors))
    return {
        "ground_size": vectors.ground_size,
        "vector_count": len(vectors),
        "forster_bound_signs": f,
        "monotone_rank_lower_bound": max(ceil_bound(f) - 1, 0),
    }
