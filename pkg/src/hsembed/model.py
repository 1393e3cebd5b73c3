"""Degree tuples, arrangement complements, and first-homology arithmetic.

The geometric objects behind this package are complements of unions of
smooth hypersurfaces in complex projective space CP^n.  Their combinatorial
shadow, which is all the solver ever touches, is the unordered multiset of
positive hypersurface degrees together with the complex dimension n.  First
homology of such a complement is Z^k modulo the single relation given by the
degree vector, and most obstructions in this package are statements about
that quotient.

Conventions fixed here and relied on everywhere downstream:

* degree tuples are stored in non-increasing order (two tuples describe the
  same arrangement iff they compare equal);
* homology classes are integer vectors modulo Z*(d_1, ..., d_k), reduced to
  the unique representative whose last coordinate lies in [0, d_k).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Iterable, Optional, Sequence


class EmptyInput(ValueError):
    """Raised when a degree tuple or vector list is empty."""


class NonPositiveEntry(ValueError):
    """Raised when a degree entry is not a positive integer."""


class LengthMismatch(ValueError):
    """Raised when a vector's length disagrees with the ambient tuple."""


class DegreeTuple(tuple):
    """Canonical unordered tuple of positive hypersurface degrees.

    Entries are sorted into non-increasing order on construction, so the
    tuple is a canonical form for the underlying multiset: permutations of
    the input produce equal objects.  Immutable and hashable; usable
    anywhere a plain tuple of ints is.

    >>> DegreeTuple([2, 3, 2])
    DegreeTuple(3, 2, 2)
    >>> DegreeTuple([2, 3, 2]) == DegreeTuple([3, 2, 2])
    True
    """

    __slots__ = ()

    def __new__(cls, entries: Iterable[int]) -> "DegreeTuple":
        items = tuple(entries)
        if not items:
            raise EmptyInput("degree tuple must contain at least one entry")
        for e in items:
            if not isinstance(e, int) or e < 1:
                raise NonPositiveEntry(
                    f"degree entries must be positive integers, got {e!r}"
                )
        return super().__new__(cls, sorted(items, reverse=True))

    def total(self) -> int:
        """Sum of all degrees (the degree of the whole arrangement)."""
        return sum(self)

    def gcd(self) -> int:
        """Greatest common divisor of the degrees."""
        return math.gcd(*self)

    def __repr__(self) -> str:
        return "DegreeTuple(%s)" % ", ".join(str(e) for e in self)


def canonicalize(entries: Iterable[int]) -> DegreeTuple:
    """Sort a raw degree list into canonical (non-increasing) form.

    Raises EmptyInput or NonPositiveEntry on malformed input.
    """
    return DegreeTuple(entries)


@dataclass(frozen=True)
class DivisorComplement:
    """A complement X of a k-component degree-d arrangement in CP^n.

    ``n`` is the complex dimension of the ambient projective space, so the
    complement is an open 2n-manifold.  ``degrees`` is canonicalized on
    construction.
    """

    n: int
    degrees: DegreeTuple

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"complex dimension must be a positive integer, got {self.n!r}")
        object.__setattr__(self, "degrees", DegreeTuple(self.degrees))

    @property
    def components(self) -> int:
        return len(self.degrees)

    @property
    def in_main_range(self) -> bool:
        """Whether the total degree is at least n + 1.

        Most of the obstruction theory (the witness search, the quick
        checks, the g-type invariant) only applies in this range.
        """
        return self.degrees.total() >= self.n + 1

    def to_json(self) -> dict:
        return {"n": self.n, "degrees": list(self.degrees)}


@dataclass(frozen=True)
class HomologyElement:
    """An element of H_1 of a complement, i.e. Z^k modulo Z*(d_1,...,d_k).

    ``coordinates`` are always stored in the canonical reduced form whose
    last coordinate lies in [0, d_k), so dataclass equality coincides with
    equality in the quotient group.  Construct via :func:`homology_reduce`
    or directly; reduction happens either way.
    """

    coordinates: tuple
    modulus: DegreeTuple

    def __post_init__(self) -> None:
        mod = DegreeTuple(self.modulus)
        coords = tuple(int(c) for c in self.coordinates)
        if len(coords) != len(mod):
            raise LengthMismatch(
                f"vector length {len(coords)} != tuple length {len(mod)}"
            )
        # Canonical representative: subtract the unique multiple of the
        # relation vector that lands the last coordinate in [0, d_k).
        t = coords[-1] // mod[-1]
        coords = tuple(c - t * m for c, m in zip(coords, mod))
        object.__setattr__(self, "modulus", mod)
        object.__setattr__(self, "coordinates", coords)

    @property
    def ambient_length(self) -> int:
        return len(self.coordinates)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coordinates)

    def to_json(self) -> dict:
        return {"coordinates": list(self.coordinates), "modulus": list(self.modulus)}


def homology_reduce(vector: Sequence[int], degrees: Iterable[int]) -> HomologyElement:
    """Reduce an integer vector to its canonical class in Z^k / Z*(degrees).

    The representative is the unique one in the coset whose last coordinate
    (in the canonical non-increasing ordering of ``degrees``) lies in
    [0, d_k).  Raises LengthMismatch if the vector length is wrong.

    >>> homology_reduce((3, 1, 1), (1, 1, 1)).coordinates
    (2, 0, 0)
    """
    return HomologyElement(tuple(vector), DegreeTuple(degrees))


def is_nullhomologous_sum(
    vectors: Sequence[Sequence[int]], degrees: Iterable[int]
) -> Optional[int]:
    """If the vectors sum to a positive multiple q * degrees, return q.

    The vectors are nonnegative-integer exponent vectors over the arrangement
    components; their classes sum to zero in H_1 of the complement exactly
    when the literal sum is a multiple of the degree vector, and ``q`` is
    that multiple (the degree of the capping sphere).  Returns None when the
    sum is not such a multiple (including the empty-list case).

    Raises LengthMismatch on a length disagreement and ValueError when a
    vector is zero or has a negative entry.
    """
    d = DegreeTuple(degrees)
    k = len(d)
    total = [0] * k
    seen_any = False
    for v in vectors:
        w = tuple(int(c) for c in v)
        if len(w) != k:
            raise LengthMismatch(f"vector length {len(w)} != tuple length {k}")
        if any(c < 0 for c in w):
            raise ValueError(f"exponent vectors must be nonnegative, got {w}")
        if all(c == 0 for c in w):
            raise ValueError("exponent vectors must be nonzero")
        seen_any = True
        for i, c in enumerate(w):
            total[i] += c
    if not seen_any:
        return None
    q, rem = divmod(total[0], d[0])
    if rem != 0 or q < 1:
        return None
    if any(total[i] != q * d[i] for i in range(k)):
        return None
    return q


# Verdict kinds for the decision engine.
YES = "YES"
NO = "NO"
UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class Verdict:
    """Outcome of an embedding query, with its supporting evidence.

    Exactly one of ``witness`` (for YES) and ``certificate`` (for NO) is
    populated; UNKNOWN verdicts carry only a human-readable ``reason``.
    ``witness``/``certificate`` are objects exposing ``to_json``.  When the
    engine ran a witness search on the way to this verdict, ``search_bounds``
    documents the explored grid.
    """

    kind: str
    witness: Any = None
    certificate: Any = None
    reason: Optional[str] = None
    search_bounds: Optional[dict] = None

    def __post_init__(self) -> None:
        if self.kind not in (YES, NO, UNKNOWN):
            raise ValueError(f"unknown verdict kind {self.kind!r}")
        if self.kind == YES and self.witness is None:
            raise ValueError("YES verdicts require a witness")
        if self.kind == NO and self.certificate is None:
            raise ValueError("NO verdicts require a certificate")

    @classmethod
    def yes(cls, witness: Any) -> "Verdict":
        return cls(YES, witness=witness)

    @classmethod
    def no(cls, certificate: Any, search_bounds: Optional[dict] = None) -> "Verdict":
        return cls(NO, certificate=certificate, search_bounds=search_bounds)

    @classmethod
    def unknown(cls, reason: str, search_bounds: Optional[dict] = None) -> "Verdict":
        return cls(UNKNOWN, reason=reason, search_bounds=search_bounds)

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.witness is not None:
            out["witness"] = _jsonify(self.witness)
        if self.certificate is not None:
            out["certificate"] = _jsonify(self.certificate)
        if self.reason is not None:
            out["reason"] = self.reason
        if self.search_bounds is not None:
            out["search_bounds"] = _jsonify(self.search_bounds)
        return out


def _jsonify(obj: Any) -> Any:
    if hasattr(obj, "to_json"):
        return obj.to_json()
    if isinstance(obj, dict):
        return {k: _jsonify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonify(v) for v in obj]
    return obj
