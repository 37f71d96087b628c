"""Probability families, their sufficient statistics and exact block costs.

The data model is an ``n x m`` matrix of aligned observations: each row is an
independent sample of an m-dimensional random vector whose coordinates are
grouped into contiguous blocks of identically distributed variables.  A family
object knows how to

1. validate raw cells against its domain,
2. reduce the matrix to column-prefix sufficient statistics in one pass, and
3. answer maximum-likelihood and negative log-likelihood queries for any
   column interval in O(1) per symbol/moment by prefix differencing.

All block costs are *exact* negative maximized log-likelihoods, including
additive constants (the Gaussian ``log 2*pi`` term, the Poisson ``log x!``
data term), so that penalized objectives are comparable across penalty
strengths and usable for BIC.

Intervals are 1-based and inclusive throughout: the block ``r:s`` pools the
cells of columns ``r`` through ``s`` over all rows.  Missing values are
supported through an observed-cell mask; masked cells are excluded from all
counts and denominators.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, ClassVar, Sequence

import numpy as np
from numpy.typing import NDArray
from scipy.special import gammaln, xlogy

__all__ = [
    "DomainViolationError",
    "DataMatrix",
    "Family",
    "Bernoulli",
    "Categorical",
    "GaussianKnownVar",
    "GaussianMeanVar",
    "Exponential",
    "Poisson",
    "Markov2",
    "family_from_name",
    "CategoricalParams",
    "GaussianParams",
    "ExponentialParams",
    "PoissonParams",
    "Markov2Params",
    "SufficientStatistics",
    "build_stats",
    "segment_mle",
    "segment_neg_loglik",
    "full_loglik",
]

_LOG_2PI = math.log(2.0 * math.pi)


class DomainViolationError(ValueError):
    """A data cell lies outside the family's domain.

    Carries the 0-based ``row`` and ``col`` of the first offending cell so
    callers (notably the data loader) can point at the exact location.
    """

    def __init__(self, message: str, row: int | None = None, col: int | None = None):
        super().__init__(message)
        self.row = row
        self.col = col


# --------------------------------------------------------------------- #
# Data container
# --------------------------------------------------------------------- #


@dataclass(frozen=True, eq=False)
class DataMatrix:
    """Aligned observations: ``n`` sample rows by ``m`` variable columns.

    Parameters
    ----------
    values : ndarray of shape (n, m)
        Cell values, stored as float64.  Values under masked (missing) cells
        are ignored; by convention loaders store 0.0 there.
    mask : ndarray of bool, shape (n, m), optional
        ``True`` marks an observed cell.  When omitted, every cell is
        observed.  Every column must retain at least one observed cell.
    """

    values: NDArray[np.float64]
    mask: NDArray[np.bool_] | None = None

    def __post_init__(self):
        values = np.atleast_2d(np.asarray(self.values, dtype=np.float64))
        if values.ndim != 2:
            raise ValueError("values must be a 2-d array")
        object.__setattr__(self, "values", values)
        n, m = values.shape
        if n < 1 or m < 1:
            raise ValueError("need at least one row and one column")
        if self.mask is not None:
            mask = np.asarray(self.mask, dtype=bool)
            if mask.shape != (n, m):
                raise ValueError(f"mask shape {mask.shape} != values shape {(n, m)}")
            empty = np.flatnonzero(~mask.any(axis=0))
            if empty.size:
                raise ValueError(f"column {int(empty[0])} has no observed cells")
            object.__setattr__(self, "mask", mask)

    @property
    def n(self) -> int:
        return self.values.shape[0]

    @property
    def m(self) -> int:
        return self.values.shape[1]

    @property
    def observed(self) -> NDArray[np.bool_]:
        """Observed-cell mask (all True when no mask was given)."""
        if self.mask is None:
            return np.ones(self.values.shape, dtype=bool)
        return self.mask

    def take_rows(self, indices: NDArray[np.integer]) -> "DataMatrix":
        """Row subset / resample; the mask travels with the rows."""
        mask = None if self.mask is None else self.mask[indices]
        return DataMatrix(self.values[indices], mask)


# --------------------------------------------------------------------- #
# Per-block parameter estimates
# --------------------------------------------------------------------- #


@dataclass(frozen=True)
class CategoricalParams:
    """Probability vector over the alphabet; sums to one."""

    probs: tuple[float, ...]

    def as_dict(self) -> dict:
        return {"kind": "categorical", "probs": list(self.probs)}


@dataclass(frozen=True)
class GaussianParams:
    mean: float
    var: float
    var_floored: bool = False

    def as_dict(self) -> dict:
        return {
            "kind": "gaussian",
            "mean": self.mean,
            "var": self.var,
            "var_floored": self.var_floored,
        }


@dataclass(frozen=True)
class ExponentialParams:
    rate: float

    def as_dict(self) -> dict:
        return {"kind": "exponential", "rate": self.rate}


@dataclass(frozen=True)
class PoissonParams:
    mean: float

    def as_dict(self) -> dict:
        return {"kind": "poisson", "mean": self.mean}


@dataclass(frozen=True)
class Markov2Params:
    """Initial distribution over {0,1} plus a 2x2 row-stochastic transition.

    Transition rows with no observed source pairs in the block are reported
    as uniform (0.5, 0.5); such rows contribute nothing to the likelihood.
    """

    initial: tuple[float, float]
    transition: tuple[tuple[float, float], tuple[float, float]]

    def as_dict(self) -> dict:
        return {
            "kind": "markov2",
            "initial": list(self.initial),
            "transition": [list(row) for row in self.transition],
        }


BlockParams = (
    CategoricalParams | GaussianParams | ExponentialParams | PoissonParams | Markov2Params
)


# --------------------------------------------------------------------- #
# Sufficient statistics
# --------------------------------------------------------------------- #


def _check_interval(r: int, s: int, m: int) -> None:
    if not (1 <= r <= s <= m):
        raise ValueError(f"invalid interval {r}:{s} for m={m}")


def _as_cost(x) -> float | NDArray[np.float64]:
    x = np.asarray(x, dtype=np.float64)
    return float(x) if x.ndim == 0 else x


@dataclass(frozen=True, eq=False)
class SufficientStatistics:
    """Column-prefix aggregates for one family over one data matrix.

    Immutable after construction; every query is pure, so instances can be
    shared freely across parallel workers.  ``block_cost`` accepts scalar or
    broadcastable integer arrays for both interval ends, which is what the
    segmenters use to evaluate whole candidate fronts in one call.
    """

    family: "Family"
    n: int
    m: int

    def block_cost(self, r, s):
        """Exact negative maximized log-likelihood of the block ``r:s``."""
        raise NotImplementedError

    def block_mle(self, r: int, s: int) -> BlockParams:
        """Closed-form MLE on the pooled observed cells of columns ``r:s``."""
        raise NotImplementedError


@dataclass(frozen=True, eq=False)
class CategoricalStats(SufficientStatistics):
    # cum_counts[c, a] = observed cells equal to a in columns 1..c (row 0 is zero)
    cum_counts: NDArray[np.float64] = field(default=None)

    def block_cost(self, r, s):
        r = np.asarray(r)
        s = np.asarray(s)
        counts = self.cum_counts[s] - self.cum_counts[r - 1]
        total = counts.sum(axis=-1, keepdims=True)
        return _as_cost(-xlogy(counts, counts / total).sum(axis=-1))

    def block_mle(self, r: int, s: int) -> CategoricalParams:
        _check_interval(r, s, self.m)
        counts = self.cum_counts[s] - self.cum_counts[r - 1]
        total = counts.sum()
        if total <= 0:
            raise ValueError(f"no observed cells in interval {r}:{s}")
        return CategoricalParams(tuple((counts / total).tolist()))


@dataclass(frozen=True, eq=False)
class GaussianStats(SufficientStatistics):
    # Prefix sums of cells centred at the grand observed mean.  Centring keeps
    # the residual computation stable under large translations of the data.
    shift: float = 0.0
    cum_n: NDArray[np.float64] = field(default=None)
    cum_s1: NDArray[np.float64] = field(default=None)
    cum_s2: NDArray[np.float64] = field(default=None)

    def _moments(self, r, s):
        r = np.asarray(r)
        s = np.asarray(s)
        count = self.cum_n[s] - self.cum_n[r - 1]
        s1 = self.cum_s1[s] - self.cum_s1[r - 1]
        s2 = self.cum_s2[s] - self.cum_s2[r - 1]
        rss = np.maximum(s2 - s1 * s1 / count, 0.0)
        return count, s1, rss

    def block_cost(self, r, s):
        count, _, rss = self._moments(r, s)
        fam = self.family
        if isinstance(fam, GaussianKnownVar):
            var = fam.var
            return _as_cost(0.5 * count * (_LOG_2PI + math.log(var)) + rss / (2.0 * var))
        raw = rss / count
        var = np.maximum(raw, fam.var_floor)
        return _as_cost(0.5 * count * (_LOG_2PI + np.log(var)) + 0.5 * count * raw / var)

    def block_mle(self, r: int, s: int) -> GaussianParams:
        _check_interval(r, s, self.m)
        count, s1, rss = self._moments(r, s)
        if count <= 0:
            raise ValueError(f"no observed cells in interval {r}:{s}")
        mean = self.shift + s1 / count
        fam = self.family
        if isinstance(fam, GaussianKnownVar):
            return GaussianParams(float(mean), fam.var)
        raw = rss / count
        floored = bool(raw < fam.var_floor)
        return GaussianParams(float(mean), float(max(raw, fam.var_floor)), floored)


@dataclass(frozen=True, eq=False)
class SumStats(SufficientStatistics):
    """Shared prefix layout for the exponential and poisson families."""

    cum_n: NDArray[np.float64] = field(default=None)
    cum_sum: NDArray[np.float64] = field(default=None)
    cum_logfact: NDArray[np.float64] = field(default=None)  # poisson only

    def _totals(self, r, s):
        r = np.asarray(r)
        s = np.asarray(s)
        count = self.cum_n[s] - self.cum_n[r - 1]
        total = self.cum_sum[s] - self.cum_sum[r - 1]
        return r, s, count, total

    def block_cost(self, r, s):
        r, s, count, total = self._totals(r, s)
        if isinstance(self.family, Exponential):
            return _as_cost(count * np.log(total / count) + count)
        logfact = self.cum_logfact[s] - self.cum_logfact[r - 1]
        return _as_cost(total - xlogy(total, total / count) + logfact)

    def block_mle(self, r: int, s: int):
        _check_interval(r, s, self.m)
        _, _, count, total = self._totals(r, s)
        if count <= 0:
            raise ValueError(f"no observed cells in interval {r}:{s}")
        if isinstance(self.family, Exponential):
            return ExponentialParams(float(count / total))
        return PoissonParams(float(total / count))


@dataclass(frozen=True, eq=False)
class Markov2Stats(SufficientStatistics):
    # col_counts[v-1, a]: observed cells equal to a in column v.
    # cum_pairs[j, b, a]: observed consecutive pairs (b, a) with source column <= j
    # (a pair counts only when both of its cells are observed).
    col_counts: NDArray[np.float64] = field(default=None)
    cum_pairs: NDArray[np.float64] = field(default=None)

    def _pair_counts(self, r, s):
        return self.cum_pairs[s - 1] - self.cum_pairs[r - 1]

    def block_cost(self, r, s):
        r = np.asarray(r)
        s = np.asarray(s)
        start = self.col_counts[r - 1]
        n_start = start.sum(axis=-1, keepdims=True)
        cost = -xlogy(start, start / n_start).sum(axis=-1)
        pairs = self._pair_counts(r, s)
        row_tot = pairs.sum(axis=-1, keepdims=True)
        cost = cost - xlogy(pairs, pairs / np.where(row_tot > 0, row_tot, 1.0)).sum(
            axis=(-2, -1)
        )
        return _as_cost(cost)

    def block_mle(self, r: int, s: int) -> Markov2Params:
        _check_interval(r, s, self.m)
        start = self.col_counts[r - 1]
        n_start = start.sum()
        if n_start <= 0:
            raise ValueError(f"no observed cells in interval {r}:{s}")
        initial = start / n_start
        pairs = self._pair_counts(r, s)
        rows = []
        for b in (0, 1):
            tot = pairs[b].sum()
            if tot > 0:
                rows.append(tuple((pairs[b] / tot).tolist()))
            else:
                rows.append((0.5, 0.5))
        return Markov2Params(tuple(initial.tolist()), (rows[0], rows[1]))


# --------------------------------------------------------------------- #
# Families
# --------------------------------------------------------------------- #


def _first_violation(bad: NDArray[np.bool_], observed: NDArray[np.bool_]):
    hits = np.argwhere(bad & observed)
    if hits.size:
        return int(hits[0, 0]), int(hits[0, 1])
    return None


def _masked(values: NDArray, observed: NDArray) -> NDArray:
    return np.where(observed, values, 0.0)


class Family:
    """Base class: a parametric family of per-variable distributions."""

    tag: ClassVar[str]

    @property
    def free_params(self) -> int:
        """Free parameters per block, as counted by BIC."""
        raise NotImplementedError

    def validate(self, data: DataMatrix) -> None:
        """Raise :class:`DomainViolationError` on the first bad observed cell."""
        raise NotImplementedError

    def build(self, data: DataMatrix) -> SufficientStatistics:
        raise NotImplementedError

    def draw_params(self, rng: np.random.Generator) -> BlockParams:
        """Default law for synthetic block parameters."""
        raise NotImplementedError

    def sample_block(
        self, params: BlockParams, n: int, width: int, rng: np.random.Generator
    ) -> NDArray[np.float64]:
        """Draw an ``n x width`` block of cells under ``params``."""
        raise NotImplementedError

    def __repr__(self) -> str:  # pragma: no cover - cosmetic
        return f"{type(self).__name__}()"


@dataclass(frozen=True, repr=False)
class Categorical(Family):
    """Finite alphabet {0, ..., d-1} with a free probability vector."""

    d: int = 2
    tag: ClassVar[str] = "categorical"

    def __post_init__(self):
        if self.d < 2:
            raise ValueError("categorical alphabet size must be >= 2")

    @property
    def free_params(self) -> int:
        return self.d - 1

    def validate(self, data: DataMatrix) -> None:
        v = data.values
        bad = ~np.isfinite(v) | (np.mod(v, 1) != 0) | (v < 0) | (v >= self.d)
        hit = _first_violation(bad, data.observed)
        if hit is not None:
            i, j = hit
            raise DomainViolationError(
                f"cell ({i}, {j}) = {v[i, j]!r} not in {{0,...,{self.d - 1}}}", i, j
            )

    def build(self, data: DataMatrix) -> CategoricalStats:
        self.validate(data)
        obs = data.observed
        counts = np.empty((data.m, self.d))
        for a in range(self.d):
            counts[:, a] = ((data.values == a) & obs).sum(axis=0)
        cum = np.vstack([np.zeros((1, self.d)), np.cumsum(counts, axis=0)])
        return CategoricalStats(self, data.n, data.m, cum_counts=cum)

    def draw_params(self, rng: np.random.Generator) -> CategoricalParams:
        return CategoricalParams(tuple(rng.dirichlet(np.ones(self.d)).tolist()))

    def sample_block(self, params, n, width, rng) -> NDArray[np.float64]:
        return rng.choice(self.d, size=(n, width), p=np.asarray(params.probs)).astype(
            np.float64
        )

    def __repr__(self) -> str:
        return f"Categorical(d={self.d})"


@dataclass(frozen=True, repr=False)
class Bernoulli(Categorical):
    """Binary cells in {0, 1}; a categorical alphabet of size two."""

    d: int = 2
    tag: ClassVar[str] = "bernoulli"

    def __post_init__(self):
        if self.d != 2:
            raise ValueError("bernoulli is binary")

    def __repr__(self) -> str:
        return "Bernoulli()"


class _GaussianBase(Family):
    def validate(self, data: DataMatrix) -> None:
        bad = ~np.isfinite(data.values)
        hit = _first_violation(bad, data.observed)
        if hit is not None:
            i, j = hit
            raise DomainViolationError(
                f"cell ({i}, {j}) = {data.values[i, j]!r} is not a finite real", i, j
            )

    def build(self, data: DataMatrix) -> GaussianStats:
        self.validate(data)
        obs = data.observed
        vals = _masked(data.values, obs)
        shift = float(vals.sum() / obs.sum())
        centred = _masked(data.values - shift, obs)
        cum_n = np.concatenate([[0.0], np.cumsum(obs.sum(axis=0))])
        cum_s1 = np.concatenate([[0.0], np.cumsum(centred.sum(axis=0))])
        cum_s2 = np.concatenate([[0.0], np.cumsum((centred * centred).sum(axis=0))])
        return GaussianStats(
            self, data.n, data.m, shift=shift, cum_n=cum_n, cum_s1=cum_s1, cum_s2=cum_s2
        )

    def sample_block(self, params, n, width, rng) -> NDArray[np.float64]:
        return rng.normal(params.mean, math.sqrt(params.var), size=(n, width))


@dataclass(frozen=True, repr=False)
class GaussianKnownVar(_GaussianBase):
    """Gaussian cells with free mean and a shared, known variance."""

    var: float = 1.0
    tag: ClassVar[str] = "gaussian_known_var"

    def __post_init__(self):
        if not (self.var > 0):
            raise ValueError("known variance must be positive")

    @property
    def free_params(self) -> int:
        return 1

    def draw_params(self, rng: np.random.Generator) -> GaussianParams:
        return GaussianParams(float(rng.normal(0.0, math.sqrt(5.0))), self.var)

    def __repr__(self) -> str:
        return f"GaussianKnownVar(var={self.var})"


@dataclass(frozen=True, repr=False)
class GaussianMeanVar(_GaussianBase):
    """Gaussian cells with free mean and free variance per block.

    All-equal blocks have a zero variance MLE and hence an unbounded
    likelihood; the variance is floored at ``var_floor`` and the block is
    flagged in the fit diagnostics.
    """

    var_floor: float = 1e-9
    tag: ClassVar[str] = "gaussian_mean_var"

    def __post_init__(self):
        if not (self.var_floor > 0):
            raise ValueError("variance floor must be positive")

    @property
    def free_params(self) -> int:
        return 2

    def draw_params(self, rng: np.random.Generator) -> GaussianParams:
        return GaussianParams(
            float(rng.normal(0.0, math.sqrt(5.0))), float(rng.exponential(1.0))
        )

    def __repr__(self) -> str:
        return "GaussianMeanVar()"


@dataclass(frozen=True, repr=False)
class Exponential(Family):
    """Strictly positive cells with a free rate per block."""

    tag: ClassVar[str] = "exponential"

    @property
    def free_params(self) -> int:
        return 1

    def validate(self, data: DataMatrix) -> None:
        v = data.values
        bad = ~np.isfinite(v) | (v <= 0)
        hit = _first_violation(bad, data.observed)
        if hit is not None:
            i, j = hit
            raise DomainViolationError(
                f"cell ({i}, {j}) = {v[i, j]!r} is not a positive real", i, j
            )

    def build(self, data: DataMatrix) -> SumStats:
        self.validate(data)
        obs = data.observed
        vals = _masked(data.values, obs)
        cum_n = np.concatenate([[0.0], np.cumsum(obs.sum(axis=0))])
        cum_sum = np.concatenate([[0.0], np.cumsum(vals.sum(axis=0))])
        return SumStats(self, data.n, data.m, cum_n=cum_n, cum_sum=cum_sum)

    def draw_params(self, rng: np.random.Generator) -> ExponentialParams:
        return ExponentialParams(float(rng.exponential(1.0)))

    def sample_block(self, params, n, width, rng) -> NDArray[np.float64]:
        return rng.exponential(1.0 / params.rate, size=(n, width))


@dataclass(frozen=True, repr=False)
class Poisson(Family):
    """Nonnegative integer counts with a free mean per block."""

    tag: ClassVar[str] = "poisson"

    @property
    def free_params(self) -> int:
        return 1

    def validate(self, data: DataMatrix) -> None:
        v = data.values
        bad = ~np.isfinite(v) | (np.mod(v, 1) != 0) | (v < 0)
        hit = _first_violation(bad, data.observed)
        if hit is not None:
            i, j = hit
            raise DomainViolationError(
                f"cell ({i}, {j}) = {v[i, j]!r} is not a nonnegative integer", i, j
            )

    def build(self, data: DataMatrix) -> SumStats:
        self.validate(data)
        obs = data.observed
        vals = _masked(data.values, obs)
        cum_n = np.concatenate([[0.0], np.cumsum(obs.sum(axis=0))])
        cum_sum = np.concatenate([[0.0], np.cumsum(vals.sum(axis=0))])
        logfact = _masked(gammaln(data.values + 1.0), obs)
        cum_lf = np.concatenate([[0.0], np.cumsum(logfact.sum(axis=0))])
        return SumStats(
            self, data.n, data.m, cum_n=cum_n, cum_sum=cum_sum, cum_logfact=cum_lf
        )

    def draw_params(self, rng: np.random.Generator) -> PoissonParams:
        return PoissonParams(float(rng.exponential(5.0)))

    def sample_block(self, params, n, width, rng) -> NDArray[np.float64]:
        return rng.poisson(params.mean, size=(n, width)).astype(np.float64)


@dataclass(frozen=True, repr=False)
class Markov2(Family):
    """Binary cells forming a two-state Markov chain across each block.

    Within a block the columns are a chain (initial law at the first column,
    one shared transition matrix); distinct blocks are independent.  A
    consecutive pair contributes to the transition counts only when both of
    its cells are observed.
    """

    tag: ClassVar[str] = "markov2"

    @property
    def free_params(self) -> int:
        return 3  # 1 initial + 2 transition

    def validate(self, data: DataMatrix) -> None:
        v = data.values
        bad = ~np.isfinite(v) | ((v != 0) & (v != 1))
        hit = _first_violation(bad, data.observed)
        if hit is not None:
            i, j = hit
            raise DomainViolationError(
                f"cell ({i}, {j}) = {v[i, j]!r} not in {{0,1}}", i, j
            )

    def build(self, data: DataMatrix) -> Markov2Stats:
        self.validate(data)
        obs = data.observed
        col_counts = np.empty((data.m, 2))
        for a in (0, 1):
            col_counts[:, a] = ((data.values == a) & obs).sum(axis=0)
        src = data.values[:, :-1]
        dst = data.values[:, 1:]
        both = obs[:, :-1] & obs[:, 1:]
        pair = np.empty((max(data.m - 1, 0), 2, 2))
        for b in (0, 1):
            for a in (0, 1):
                pair[:, b, a] = ((src == b) & (dst == a) & both).sum(axis=0)
        cum_pairs = np.concatenate(
            [np.zeros((1, 2, 2)), np.cumsum(pair, axis=0)], axis=0
        )
        return Markov2Stats(
            self, data.n, data.m, col_counts=col_counts, cum_pairs=cum_pairs
        )

    def draw_params(self, rng: np.random.Generator) -> Markov2Params:
        initial = tuple(rng.dirichlet([1.0, 1.0]).tolist())
        rows = tuple(tuple(rng.dirichlet([1.0, 1.0]).tolist()) for _ in range(2))
        return Markov2Params(initial, rows)

    def sample_block(self, params, n, width, rng) -> NDArray[np.float64]:
        out = np.empty((n, width))
        out[:, 0] = rng.random(n) >= params.initial[0]  # 0 w.p. initial[0]
        p1_from = np.array([params.transition[0][1], params.transition[1][1]])
        for v in range(1, width):
            prev = out[:, v - 1].astype(np.intp)
            out[:, v] = rng.random(n) < p1_from[prev]
        return out


_FAMILY_NAMES: dict[str, Callable[..., Family]] = {
    "bernoulli": Bernoulli,
    "categorical": Categorical,
    "gaussian": GaussianMeanVar,
    "gaussian-known": GaussianKnownVar,
    "exponential": Exponential,
    "poisson": Poisson,
    "markov2": Markov2,
}


def family_from_name(name: str) -> Family:
    """Parse a family descriptor such as ``bernoulli``, ``categorical:4`` or
    ``gaussian-known:2.5`` into a family object."""
    base, _, arg = name.partition(":")
    base = base.strip().lower()
    if base not in _FAMILY_NAMES:
        raise ValueError(
            f"unknown family {name!r}; expected one of {sorted(_FAMILY_NAMES)}"
        )
    if base == "categorical":
        return Categorical(int(arg)) if arg else Categorical()
    if base == "gaussian-known":
        return GaussianKnownVar(float(arg)) if arg else GaussianKnownVar()
    if arg:
        raise ValueError(f"family {base!r} takes no parameter")
    return _FAMILY_NAMES[base]()


# --------------------------------------------------------------------- #
# Module-level operations
# --------------------------------------------------------------------- #


def build_stats(data: DataMatrix, family: Family) -> SufficientStatistics:
    """Validate ``data`` against ``family`` and build its prefix statistics.

    One pass over the matrix; afterwards any interval query costs O(1) per
    symbol or moment.
    """
    return family.build(data)


def segment_mle(stats: SufficientStatistics, r: int, s: int) -> BlockParams:
    """Maximum-likelihood block parameters on the pooled columns ``r:s``."""
    return stats.block_mle(r, s)


def segment_neg_loglik(stats: SufficientStatistics, r: int, s: int) -> float:
    """Negative maximized log-likelihood of the block ``r:s``, constants included."""
    _check_interval(r, s, stats.m)
    return float(stats.block_cost(r, s))


def full_loglik(stats: SufficientStatistics, change_points) -> float:
    """Maximized log-likelihood of a whole segmentation.

    ``change_points`` is either a boundary sequence ``(0, c1, ..., m)`` or any
    object with such a ``points`` attribute.
    """
    points = np.asarray(getattr(change_points, "points", change_points), dtype=np.intp)
    if points[0] != 0 or points[-1] != stats.m or np.any(np.diff(points) <= 0):
        raise ValueError(f"invalid change point set {points.tolist()} for m={stats.m}")
    return -float(np.sum(stats.block_cost(points[:-1] + 1, points[1:])))
