"""Segmentation penalties: per-block weights, sample-size scaling, totals.

A segmentation is charged ``lam * J(n) * R(C)`` where ``R`` is additive over
blocks: ``R(C) = sum_j rho(c_{j-1}+1, c_j)``.  Two block weights are
provided:

* ``const``: every block costs 1, so ``R(C)`` is the block count.  This is
  the penalty both solvers' optimality theory wants: strictly increasing
  under refinement and strictly sub-additive across any split.
* ``roh``: a physical-distance weight for genomic marker data.  Blocks whose
  physical span (in base pairs, scaled by ``beta`` to megabases) is at most
  the threshold ``min_span_mb`` are forbidden outright (weight ``+inf``);
  longer blocks get a weight that decays as the reciprocal of their span.

``+inf`` weights use IEEE infinity, whose arithmetic is absorbing and whose
comparisons are total, so the solvers skip infeasible blocks without
special-casing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Mapping

import numpy as np
from numpy.typing import NDArray

__all__ = ["MarkerMap", "PenaltySpec", "jn", "rho", "penalty_R"]


@dataclass(frozen=True, eq=False)
class MarkerMap:
    """Physical base-pair coordinates of the ``m`` variables, nondecreasing."""

    positions: NDArray[np.int64]

    def __post_init__(self):
        pos = np.asarray(self.positions, dtype=np.int64)
        if pos.ndim != 1 or pos.size < 1:
            raise ValueError("positions must be a nonempty 1-d sequence")
        if (pos < 0).any():
            raise ValueError("positions must be nonnegative")
        if (np.diff(pos) < 0).any():
            raise ValueError("positions must be nondecreasing")
        object.__setattr__(self, "positions", pos)

    def __len__(self) -> int:
        return self.positions.size


@dataclass(frozen=True)
class PenaltySpec:
    """Penalty configuration: ``lam * J(n) * sum_blocks rho``.

    Parameters
    ----------
    lam : float
        Penalization constant.  Must be nonnegative; the estimator is only
        meaningful for positive values, but 0 is accepted so raw block costs
        can be inspected through the same code path.
    jn : str, mapping or callable
        Sample-size scaling ``J(n)``: ``"log"`` (natural log), ``"sqrt"``,
        ``"pow:<alpha>"`` with ``alpha`` in (0, 1), a ``{n: value}`` table,
        or an arbitrary callable.
    rho : str
        Block weight kind, ``"const"`` or ``"roh"``.
    marker_map : MarkerMap, required for ``rho="roh"``
        Physical positions ``B(1..m)``.
    min_span_mb : float
        Minimal physical span (in megabases) an allowed block must exceed.
    beta : float
        Base pairs per span unit (1e6 puts spans in megabases).
    """

    lam: float = 1.0
    jn: str | Mapping[int, float] | Callable[[int], float] = "log"
    rho: str = "const"
    marker_map: MarkerMap | None = None
    min_span_mb: float = 1.0
    beta: float = 1e6

    def __post_init__(self):
        if not (self.lam >= 0):
            raise ValueError("lam must be nonnegative")
        if isinstance(self.jn, str):
            kind, _, arg = self.jn.partition(":")
            if kind not in ("log", "sqrt", "pow"):
                raise ValueError(f"unknown jn kind {self.jn!r}")
            if kind == "pow":
                alpha = float(arg)
                if not (0.0 < alpha < 1.0):
                    raise ValueError("pow exponent must lie in (0, 1)")
        elif not isinstance(self.jn, Mapping) and not callable(self.jn):
            raise ValueError("jn must be a string, mapping or callable")
        if self.rho not in ("const", "roh"):
            raise ValueError(f"unknown rho kind {self.rho!r}")
        if self.rho == "roh":
            if self.marker_map is None:
                raise ValueError("rho='roh' requires a marker map")
            if not (self.min_span_mb > 0):
                raise ValueError("min_span_mb must be positive")
            if not (self.beta > 0):
                raise ValueError("beta must be positive")


def jn(spec: PenaltySpec, n: int) -> float:
    """Sample-size scaling ``J(n)``; monotone nondecreasing in ``n``."""
    if n < 1:
        raise ValueError("sample size must be >= 1")
    if isinstance(spec.jn, str):
        kind, _, arg = spec.jn.partition(":")
        if kind == "log":
            return math.log(n)
        if kind == "sqrt":
            return math.sqrt(n)
        return float(n) ** float(arg)
    if isinstance(spec.jn, Mapping):
        return float(spec.jn[n])
    return float(spec.jn(n))


def rho(spec: PenaltySpec, r, s):
    """Per-block weight of ``r:s``; scalar or elementwise over arrays.

    ``const`` returns 1.  ``roh`` returns ``+inf`` when the block's physical
    span is at most ``min_span_mb`` megabases and ``beta / span`` otherwise,
    so the weight of allowed blocks strictly decreases as the span grows.
    """
    r = np.asarray(r)
    s = np.asarray(s)
    if spec.rho == "const":
        out = np.ones(np.broadcast_shapes(r.shape, s.shape))
    else:
        pos = spec.marker_map.positions
        span = np.abs(pos[s - 1] - pos[r - 1]).astype(np.float64)
        with np.errstate(divide="ignore"):
            out = np.where(span / spec.beta <= spec.min_span_mb, np.inf, spec.beta / span)
    return float(out) if out.ndim == 0 else out


def penalty_R(spec: PenaltySpec, change_points) -> float:
    """Additive total ``R(C)``: the block weights summed; ``+inf`` absorbs."""
    points = np.asarray(getattr(change_points, "points", change_points), dtype=np.intp)
    values = np.atleast_1d(rho(spec, points[:-1] + 1, points[1:]))
    total = 0.0
    for v in values:
        total += float(v)
    return total
