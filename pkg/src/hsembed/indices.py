"""Reeb orbit classes, Conley-Zehnder indices, and formal curve indices.

After deforming the boundary contact form of an arrangement complement to a
normal-crossings-adapted one, the Reeb orbits group into Morse-Bott families
labeled by a nonzero wrapping vector v (nonnegative integers, one per
component, support of size at most n) plus a Morse index on the family.
This module implements that spectrum bookkeeping and the index formulas for
the formal punctured curves the obstruction engine reasons about:

* orbit action is the degree-weighted wrapping  sum(v_i * d_i);
* a family with support size r is (2n - r - 1)-dimensional, so Morse
  indices run through 0 .. 2n - r - 1;
* the Conley-Zehnder index (in the natural trivialization on the complement
  of the arrangement) is  n - 1 - |A| - 2 * sum(v_i)  for Morse index |A|;
* a rational curve in the ambient projective space of degree q contributes
  a Chern-number term 2 q (n + 1), and a point constraint with tangency
  order m cuts the index by 2n + 2m - 2.

All of it is elementary integer arithmetic; the value of the module is that
the conventions are pinned down in one place and validated.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial, gcd
from typing import Iterable, List, Optional, Sequence, Tuple

from .model import DegreeTuple, HomologyElement, LengthMismatch, homology_reduce

MIN_MORSE_INDEX = 0


class InadmissibleOrbit(ValueError):
    """Raised for wrapping vectors or Morse indices outside the spectrum."""


class InconsistentHomology(ValueError):
    """Raised when curve ends do not satisfy the homology constraint."""


def wrapping_numbers(degrees: Sequence[int]) -> Tuple[int, ...]:
    """Linking of the small loop around each component with the arrangement.

    In the canonical ordering, the loop around the degree-d_i component has
    wrapping number -d_i: traversing it once pairs to minus the degree
    against the defining section.  These are the coefficients that turn
    wrapping vectors into actions (up to sign).
    """
    return tuple(-e for e in DegreeTuple(degrees))


def _validate_wrapping(n: int, degrees: DegreeTuple, v: Sequence[int]) -> Tuple[int, ...]:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"complex dimension must be a positive integer, got {n!r}")
    w = tuple(int(c) for c in v)
    if len(w) != len(degrees):
        raise LengthMismatch(f"wrapping length {len(w)} != {len(degrees)} components")
    if any(c < 0 for c in w):
        raise InadmissibleOrbit(f"wrapping numbers must be nonnegative, got {w}")
    if all(c == 0 for c in w):
        raise InadmissibleOrbit("wrapping vector must be nonzero")
    if sum(1 for c in w if c) > n:
        raise InadmissibleOrbit(
            f"wrapping {w} meets more than n = {n} components; no such Reeb orbit"
        )
    return w


def _validate_orbit_data(n: int, v: Sequence[int], morse_index: int) -> Tuple[int, ...]:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"complex dimension must be a positive integer, got {n!r}")
    w = tuple(int(c) for c in v)
    if any(c < 0 for c in w) or not any(w):
        raise InadmissibleOrbit(f"wrapping must be nonzero with nonnegative entries, got {w}")
    r = sum(1 for c in w if c)
    if r > n:
        raise InadmissibleOrbit(
            f"wrapping {w} meets more than n = {n} components; no such Reeb orbit"
        )
    top = 2 * n - r - 1
    if not isinstance(morse_index, int) or not MIN_MORSE_INDEX <= morse_index <= top:
        raise InadmissibleOrbit(
            f"Morse index {morse_index!r} outside 0..{top} for support size {r}"
        )
    return w


def cz_index(n: int, v: Sequence[int], morse_index: int) -> int:
    """Conley-Zehnder index of the orbit with wrapping v and given Morse index.

    Computed in the trivialization induced by the complement of the
    arrangement:  n - 1 - morse_index - 2 * sum(v).  The Morse index ranges
    over 0 .. 2n - r - 1 where r is the support size of v (the dimension of
    the orbit family); anything outside raises InadmissibleOrbit.
    """
    w = _validate_orbit_data(n, v, morse_index)
    return n - 1 - morse_index - 2 * sum(w)


def cz_index_anticanonical(
    n: int, v: Sequence[int], morse_index: int, vanishing_orders: Sequence[int]
) -> int:
    """Conley-Zehnder index in an anticanonical-section trivialization.

    ``vanishing_orders`` gives the order a_i (any integer) to which the
    chosen anticanonical section vanishes along each component; the index is
    n - 1 - morse_index - 2 * sum(v_i * (a_i + 1)).  With all a_i = 0 this
    reduces to :func:`cz_index`, and a_i = -1 removes component i from the
    correction entirely.
    """
    w = _validate_orbit_data(n, v, morse_index)
    a = tuple(int(c) for c in vanishing_orders)
    if len(a) != len(w):
        raise LengthMismatch(
            f"vanishing orders length {len(a)} != wrapping length {len(w)}"
        )
    return n - 1 - morse_index - 2 * sum(c * (o + 1) for c, o in zip(w, a))


@dataclass(frozen=True)
class OrbitClass:
    """A Morse-Bott Reeb orbit class on the boundary of a complement.

    ``v`` is the wrapping vector (indexed against the canonical degree
    order), ``delta`` the *co*-Morse index delta = (n - 1) - morse_index,
    which is the quantity the index formulas consume: cz = delta - 2 sum(v).
    delta ranges over r - n .. n - 1 (r = support size).
    """

    n: int
    degrees: DegreeTuple
    v: Tuple[int, ...]
    delta: int

    def __post_init__(self) -> None:
        d = DegreeTuple(self.degrees)
        w = _validate_wrapping(self.n, d, self.v)
        r = sum(1 for c in w if c)
        if not isinstance(self.delta, int) or not r - self.n <= self.delta <= self.n - 1:
            raise InadmissibleOrbit(
                f"delta {self.delta!r} outside {r - self.n}..{self.n - 1} "
                f"for support size {r}"
            )
        object.__setattr__(self, "degrees", d)
        object.__setattr__(self, "v", w)

    @property
    def support_size(self) -> int:
        return sum(1 for c in self.v if c)

    @property
    def morse_index(self) -> int:
        return self.n - 1 - self.delta

    @property
    def action(self) -> int:
        """Degree-weighted total wrapping; equals minus the pairing of the
        wrapping numbers with v."""
        return sum(c * e for c, e in zip(self.v, self.degrees))

    @property
    def cz(self) -> int:
        return self.delta - 2 * sum(self.v)

    @property
    def homology(self) -> HomologyElement:
        """Class of the orbit in H_1 of the complement."""
        return homology_reduce(self.v, self.degrees)

    def to_json(self) -> dict:
        return {
            "v": list(self.v),
            "delta": self.delta,
            "morse_index": self.morse_index,
            "action": self.action,
            "cz": self.cz,
            "homology": list(self.homology.coordinates),
        }


def orbit_spectrum(n: int, degrees: Sequence[int], action_cap: int) -> List[OrbitClass]:
    """All orbit classes with action at most ``action_cap``.

    Enumerates wrapping vectors v (nonzero, nonnegative, support <= n,
    action = sum v_i d_i <= cap) and all admissible delta for each, sorted
    by (action, v, delta).  An ``action_cap`` below the smallest degree
    yields an empty list — that is a valid (empty) spectrum, not an error.

    Note: the result enumerates orbit *classes* (Morse-Bott families with a
    Morse label), not individual orbits — each class with support size r
    stands for a whole (2n - r - 1)-dimensional family worth of orbits, and
    no multiplicity counts are implied.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"complex dimension must be a positive integer, got {n!r}")
    if not isinstance(action_cap, int) or action_cap < 0:
        raise ValueError(f"action cap must be a nonnegative integer, got {action_cap!r}")
    d = DegreeTuple(degrees)
    k = len(d)
    max_support = min(n, k)
    vectors: List[Tuple[int, ...]] = []

    def rec(idx: int, budget: int, support: int, prefix: Tuple[int, ...]) -> None:
        if idx == k:
            if any(prefix):
                vectors.append(prefix)
            return
        for c in range(budget // d[idx] + 1):
            s = support + (1 if c else 0)
            if s > max_support:
                break
            rec(idx + 1, budget - c * d[idx], s, prefix + (c,))

    rec(0, action_cap, 0, ())
    out: List[OrbitClass] = []
    for v in vectors:
        r = sum(1 for c in v if c)
        for delta in range(r - n, n):
            out.append(OrbitClass(n, d, v, delta))
    out.sort(key=lambda oc: (oc.action, oc.v, oc.delta))
    return out


@dataclass(frozen=True)
class FormalCurveSpec:
    """A formal punctured rational curve in a complement.

    ``positive_ends`` are the asymptotic orbit classes; ``q`` is the degree
    of the closed curve obtained by capping each end with the obvious
    multiply-covered disk, which forces sum of end wrappings = q * degrees;
    ``tangency_order`` m, when not None, imposes a point constraint of
    contact order m (m >= 1) with a chosen divisor germ.
    """

    n: int
    degrees: DegreeTuple
    positive_ends: Tuple[OrbitClass, ...]
    q: int
    tangency_order: Optional[int] = None

    def __post_init__(self) -> None:
        d = DegreeTuple(self.degrees)
        ends = tuple(self.positive_ends)
        if not isinstance(self.q, int) or self.q < 0:
            raise ValueError(f"capping degree must be a nonnegative integer, got {self.q!r}")
        if self.tangency_order is not None and (
            not isinstance(self.tangency_order, int) or self.tangency_order < 1
        ):
            raise ValueError(
                f"tangency order must be a positive integer or None, got {self.tangency_order!r}"
            )
        for oc in ends:
            if oc.n != self.n or DegreeTuple(oc.degrees) != d:
                raise InconsistentHomology(
                    "curve ends must live on the same complement as the curve"
                )
        total = [0] * len(d)
        for oc in ends:
            for i, c in enumerate(oc.v):
                total[i] += c
        if any(total[i] != self.q * d[i] for i in range(len(d))):
            raise InconsistentHomology(
                f"end wrappings sum to {tuple(total)}, expected q*d = "
                f"{tuple(self.q * e for e in d)}"
            )
        object.__setattr__(self, "degrees", d)
        object.__setattr__(self, "positive_ends", ends)

    @classmethod
    def with_inferred_q(
        cls,
        n: int,
        degrees: Sequence[int],
        positive_ends: Sequence[OrbitClass],
        tangency_order: Optional[int] = None,
    ) -> "FormalCurveSpec":
        """Build a spec inferring the capping degree from the ends.

        The end wrappings must sum to a nonnegative multiple of the degree
        vector (InconsistentHomology otherwise); that multiple becomes q.
        """
        d = DegreeTuple(degrees)
        total = [0] * len(d)
        for oc in positive_ends:
            for i, c in enumerate(oc.v):
                total[i] += c
        q, rem = divmod(total[0], d[0]) if total[0] else (0, 0)
        if rem or any(total[i] != q * d[i] for i in range(len(d))):
            raise InconsistentHomology(
                f"end wrappings sum to {tuple(total)}, not a multiple of {tuple(d)}"
            )
        return cls(n, d, tuple(positive_ends), q, tangency_order)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "degrees": list(self.degrees),
            "q": self.q,
            "tangency_order": self.tangency_order,
            "positive_ends": [oc.to_json() for oc in self.positive_ends],
        }


def fredholm_index(
    n: int,
    cz_positive: Iterable[int],
    cz_negative: Iterable[int] = (),
    chern_term: int = 0,
    tangency_order: Optional[int] = None,
) -> int:
    """Index of a formal rational curve with the given asymptotics.

    (n - 3) * (2 - #ends) + sum(cz+) - sum(cz-) + 2 * chern_term, minus the
    codimension 2n + 2m - 2 of an order-m point constraint when present.
    The Conley-Zehnder inputs and the Chern term must be computed in one
    and the same trivialization; the formulas in this module all use the
    complement-induced one.
    """
    pos = list(cz_positive)
    neg = list(cz_negative)
    idx = (n - 3) * (2 - len(pos) - len(neg)) + sum(pos) - sum(neg) + 2 * chern_term
    if tangency_order is not None:
        if not isinstance(tangency_order, int) or tangency_order < 1:
            raise ValueError(
                f"tangency order must be a positive integer or None, got {tangency_order!r}"
            )
        idx -= 2 * n + 2 * tangency_order - 2
    return idx


def curve_index(spec: FormalCurveSpec) -> int:
    """Fredholm index of a formal curve in a complement.

    The Chern term of the capped degree-q curve in the complement-induced
    trivialization is q * (n + 1).
    """
    return fredholm_index(
        spec.n,
        (oc.cz for oc in spec.positive_ends),
        (),
        chern_term=spec.q * (spec.n + 1),
        tangency_order=spec.tangency_order,
    )


def f_invariant(n: int, degrees: Sequence[int]) -> int:
    """First-vanishing threshold of the cylinder-type obstruction.

    Equals gcd(d) / gcd(gcd(d), n + 1): the smallest positive i such that
    i * (n + 1) is a multiple of gcd(d), i.e. such that a degree-divisible
    cap can kill the relevant unit.  Monotone under the partial order, so
    non-divisibility of targets' values by sources' is a NO certificate
    (valid in all modes, including almost-symplectic ones).
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"complex dimension must be a positive integer, got {n!r}")
    g = DegreeTuple(degrees).gcd()
    return g // gcd(g, n + 1)


def gw_anchor(n: int) -> int:
    """Count of degree-1 rational curves through two generic points of
    projective n-space with a generic tangency constraint: (n-1)!.

    This is the enumerative anchor pinning down the normalization of the
    curve counts behind the obstruction engine; exposed for reference and
    for tests.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"complex dimension must be a positive integer, got {n!r}")
    return factorial(n - 1)


def g_invariant(n: int, degrees: Sequence[int]) -> Optional[int]:
    """Value of the tangency-constrained capacity-type invariant.

    For total degree at least n + 1 the invariant equals the total degree
    sum(d).  Below that range the computation here does not apply and the
    function returns None (meaning "not computed", not "infinite").
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"complex dimension must be a positive integer, got {n!r}")
    d = DegreeTuple(degrees)
    if d.total() < n + 1:
        return None
    return d.total()
