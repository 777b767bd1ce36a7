"""Probabilistic hesitant fuzzy elements and their canonical form.

An element is a finite list of membership degrees, each carrying an
occurrence probability; the probabilities sum to one.  All operations in
the package assume the canonical form produced by :func:`canonicalize`:
zero-probability pairs dropped, duplicate membership values merged, pairs
sorted ascending by value.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    EmptyInputError,
    OutOfRangeError,
    ParseError,
    ProbabilitySumError,
    TermOutOfRangeError,
)

#: Tolerance for the sum-to-one check on probabilities.
PROB_SUM_TOL = 1e-9

#: Tolerance for the equality branch of the pairwise probability functional.
PI_EQ_TOL = 1e-12


@dataclass(frozen=True)
class MembershipPair:
    """One membership degree together with its occurrence probability."""

    value: float
    prob: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.value <= 1.0:
            raise OutOfRangeError(f"membership value {self.value!r} outside [0, 1]")
        if not 0.0 < self.prob <= 1.0:
            raise OutOfRangeError(f"probability {self.prob!r} outside (0, 1]")


@dataclass(frozen=True)
class PHFE:
    """Canonical probabilistic hesitant fuzzy element.

    Construct through :func:`canonicalize` (or the parsing helpers); the
    constructor only validates that the given pairs already are canonical.
    """

    pairs: tuple[MembershipPair, ...]

    def __post_init__(self) -> None:
        if not self.pairs:
            raise EmptyInputError("an element needs at least one pair")
        values = [p.value for p in self.pairs]
        if any(b <= a for a, b in zip(values, values[1:])):
            raise OutOfRangeError("pairs must be strictly increasing by value")
        total = sum(p.prob for p in self.pairs)
        if abs(total - 1.0) > PROB_SUM_TOL:
            raise ProbabilitySumError(f"probabilities sum to {total!r}, expected 1")

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[MembershipPair]:
        return iter(self.pairs)

    @property
    def values(self) -> tuple[float, ...]:
        return tuple(p.value for p in self.pairs)

    @property
    def probs(self) -> tuple[float, ...]:
        return tuple(p.prob for p in self.pairs)

    def __repr__(self) -> str:
        body = ", ".join(f"{p.value:g}|{p.prob:g}" for p in self.pairs)
        return "{" + body + "}"


def canonicalize(raw_pairs: Iterable[tuple[float, float]]) -> PHFE:
    """Build the canonical element from raw (value, probability) pairs.

    Zero-probability pairs are dropped, equal membership values are merged
    by summing their probabilities, and the result is sorted ascending by
    value.  Idempotent: feeding back ``phfe.pairs`` reproduces ``phfe``.
    """
    pairs = [(float(v), float(p)) for v, p in raw_pairs]
    if not pairs:
        raise EmptyInputError("no pairs given")
    for v, p in pairs:
        if not 0.0 <= v <= 1.0:
            raise OutOfRangeError(f"membership value {v!r} outside [0, 1]")
        if not 0.0 <= p <= 1.0:
            raise OutOfRangeError(f"probability {p!r} outside [0, 1]")
    if all(p == 0.0 for _, p in pairs):
        raise EmptyInputError("all pairs carry zero probability")
    total = sum(p for _, p in pairs)
    if abs(total - 1.0) > PROB_SUM_TOL:
        raise ProbabilitySumError(f"probabilities sum to {total!r}, expected 1")

    merged: dict[float, float] = {}
    for v, p in pairs:
        if p == 0.0:
            continue
        merged[v] = merged.get(v, 0.0) + p

    out = []
    for v in sorted(merged):
        p = merged[v]
        # Summing may overshoot 1 by the declared input tolerance.
        out.append(MembershipPair(v, min(p, 1.0)))
    return PHFE(tuple(out))


def complement(a: PHFE) -> PHFE:
    """Element with every membership value reflected about 1/2.

    Probabilities are untouched, so the probability multiset and the
    length are preserved.
    """
    return canonicalize([(1.0 - p.value, p.prob) for p in a.pairs])


def pi(p_i: float, p_j: float) -> float:
    """Pairwise probability functional: |p_i - p_j|, or the mean when equal.

    Both arguments must lie in (0, 1]; the result then also lies in (0, 1].
    The equality branch fires within an absolute tolerance of
    ``PI_EQ_TOL`` because the function is discontinuous there.
    """
    for p in (p_i, p_j):
        if not 0.0 < p <= 1.0:
            raise OutOfRangeError(f"probability {p!r} outside (0, 1]")
    return _pi_fast(p_i, p_j)


def _pi_fast(p_i: float, p_j: float) -> float:
    # Inner-loop variant of pi(); callers guarantee the (0, 1] domain.
    d = abs(p_i - p_j)
    if d <= PI_EQ_TOL:
        return (p_i + p_j) / 2.0
    return d


@dataclass(frozen=True)
class LinguisticScale:
    """Totally ordered term set s_0 .. s_{2*tau}."""

    tau: int

    def __post_init__(self) -> None:
        if not isinstance(self.tau, int) or self.tau < 1:
            raise OutOfRangeError(f"tau must be a positive integer, got {self.tau!r}")

    @property
    def top_term(self) -> int:
        return 2 * self.tau


def from_linguistic(
    terms: Iterable[tuple[int, float]], scale: LinguisticScale
) -> PHFE:
    """Map probabilistic linguistic terms onto an element via t / (2*tau).

    The division of two machine integers rounds the exact rational once,
    so equal term indices always collide and merge cleanly.
    """
    raw = []
    for t, p in terms:
        if not 0 <= t <= scale.top_term:
            raise TermOutOfRangeError(
                f"term index {t!r} outside 0..{scale.top_term}"
            )
        raw.append((t / scale.top_term, p))
    return canonicalize(raw)


# ---------------------------------------------------------------------------
# JSON forms
#
# Element:     {"pairs": [{"v": 0.5, "p": 0.4}, ...]}
# Linguistic:  {"terms": [{"t": 4, "p": 0.6}, ...], "tau": 3}
# ---------------------------------------------------------------------------


def parse_phfe(obj: Mapping, default_tau: int | None = None) -> PHFE:
    """Parse one element from its JSON object form.

    Accepts either the plain pair form or the linguistic form; a
    linguistic object may omit "tau" when ``default_tau`` is given.
    """
    if not isinstance(obj, Mapping):
        raise ParseError(f"expected an object, got {type(obj).__name__}")
    if "pairs" in obj:
        try:
            raw = [(item["v"], item["p"]) for item in obj["pairs"]]
        except (TypeError, KeyError) as exc:
            raise ParseError(f"malformed pair list: {exc}") from exc
        return canonicalize(raw)
    if "terms" in obj:
        tau = obj.get("tau", default_tau)
        if tau is None:
            raise ParseError('linguistic element without "tau"')
        try:
            raw = [(int(item["t"]), item["p"]) for item in obj["terms"]]
        except (TypeError, KeyError, ValueError) as exc:
            raise ParseError(f"malformed term list: {exc}") from exc
        return from_linguistic(raw, LinguisticScale(int(tau)))
    raise ParseError('element object needs "pairs" or "terms"')


def parse_phfe_list(obj, default_tau: int | None = None) -> list[PHFE]:
    """Parse a JSON array of elements, or a single element object."""
    if isinstance(obj, Mapping):
        if "phfes" in obj:
            obj = obj["phfes"]
        else:
            return [parse_phfe(obj, default_tau)]
    if not isinstance(obj, Sequence):
        raise ParseError("expected an element object or an array of them")
    return [parse_phfe(item, default_tau) for item in obj]


def phfe_to_dict(a: PHFE) -> dict:
    """JSON object form of an element."""
    return {"pairs": [{"v": p.value, "p": p.prob} for p in a.pairs]}
