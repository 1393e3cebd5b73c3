"""The decision engine: witness search, quick obstructions, and verdicts.

The central necessary condition for a Liouville embedding of one
arrangement complement into another runs through formal curves: if an
embedding exists, then for some l in [sum(d), sum(d')] and some q >= 1 with
q * (sum(d) - n - 1) <= l - n - 1 there must exist

* a multiset {x_1..x_l} of nonzero wrapping vectors for the source, each
  meeting at most n components, with sum x_i = q * d,
* a multiset {y_1..y_l} of nonzero wrapping vectors for the target with
  sum y_i = d',
* and a homomorphism of first homology groups sending class(x_i) to
  class(y_i) for a perfect matching between the two multisets.

``witness_search`` decides feasibility of that system exactly over the
finite (l, q) grid (finite whenever sum(d) > n + 1), and ``decide`` wraps
it together with the constructive partial order, the closed-form quick
checks, and the gcd tests into a three-valued verdict with replayable
evidence: a YES always carries a construction witness, a NO always carries
a certificate that an independent checker can replay.

Budget discipline: the unit of cost is one logical homomorphism
feasibility query (deduplicated queries still count).  Per-cell accounting
plus in-order aggregation makes the outcome of a search a pure function of
the inputs and the budget, independent of thread count.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .indices import f_invariant
from .lattice import IntMatrix, hom_exists
from .model import NO, UNKNOWN, YES, DegreeTuple, Verdict, homology_reduce
from .order import MoveSequence, leqq

LIOUVILLE = "liouville"
WEINSTEIN = "weinstein"
SYMPLECTIC = "symplectic"
MODES = (LIOUVILLE, WEINSTEIN, SYMPLECTIC)

# Certificate rules for NO verdicts.
SUM_DROP = "SUM_DROP"
HYPERPLANE_TARGET = "HYPERPLANE_TARGET"
GCD_SINGLE = "GCD_SINGLE"
FN_ALMOST_SYMPLECTIC = "FN_ALMOST_SYMPLECTIC"
WITNESS_INFEASIBLE = "WITNESS_INFEASIBLE"
DEGREE_HYP_NOT_LEQQ = "DEGREE_HYP_NOT_LEQQ"

# Search outcomes.
FEASIBLE = "FEASIBLE"
INFEASIBLE = "INFEASIBLE"
BUDGET_EXCEEDED = "BUDGET_EXCEEDED"


class HypothesisViolated(ValueError):
    """Raised when an operation is invoked outside its stated range."""


@dataclass(frozen=True)
class Budget:
    """Resource limits for the witness search.

    ``q_cap`` only matters when the q-range is infinite (total source
    degree exactly n + 1); in the finite regime the grid itself bounds q.
    ``call_cap`` counts logical homomorphism queries; ``time_cap`` is a
    wall-clock limit in seconds and is the one knob that trades
    determinism for latency (leave it None for reproducible runs).
    """

    q_cap: int = 4
    call_cap: int = 10**6
    time_cap: Optional[float] = None

    def __post_init__(self) -> None:
        if not isinstance(self.q_cap, int) or self.q_cap < 1:
            raise ValueError(f"q_cap must be a positive integer, got {self.q_cap!r}")
        if not isinstance(self.call_cap, int) or self.call_cap < 1:
            raise ValueError(f"call_cap must be a positive integer, got {self.call_cap!r}")
        if self.time_cap is not None and not self.time_cap > 0:
            raise ValueError(f"time_cap must be positive or None, got {self.time_cap!r}")

    def to_json(self) -> dict:
        return {"q_cap": self.q_cap, "call_cap": self.call_cap, "time_cap": self.time_cap}


@dataclass(frozen=True)
class Certificate:
    """Replayable evidence for a NO verdict.

    ``data`` is self-contained: it always embeds n, source, target, and
    mode, so :func:`replay_certificate` can re-derive the obstruction with
    no outside context.  ``search_bounds`` documents the exhausted grid for
    search-produced certificates.
    """

    rule: str
    data: dict
    search_bounds: Optional[dict] = None

    def to_json(self) -> dict:
        return {
            "rule": self.rule,
            "data": _plain(self.data),
            "search_bounds": self.search_bounds,
        }


def _plain(obj):
    if hasattr(obj, "to_json"):
        return obj.to_json()
    if isinstance(obj, dict):
        return {k: _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    return obj


@dataclass(frozen=True)
class FeasibilityWitness:
    """A solution of the formal-curve obstruction system.

    ``xs`` and ``ys`` are aligned: pair i is (xs[i], ys[i]).  ``matrix`` is
    an integer matrix inducing a homomorphism of first homology groups that
    maps class(xs[i]) to class(ys[i]) for every i.
    """

    n: int
    source: DegreeTuple
    target: DegreeTuple
    l: int
    q: int
    xs: Tuple[Tuple[int, ...], ...]
    ys: Tuple[Tuple[int, ...], ...]
    matrix: IntMatrix

    def __post_init__(self) -> None:
        object.__setattr__(self, "source", DegreeTuple(self.source))
        object.__setattr__(self, "target", DegreeTuple(self.target))
        object.__setattr__(self, "xs", tuple(tuple(int(c) for c in v) for v in self.xs))
        object.__setattr__(self, "ys", tuple(tuple(int(c) for c in v) for v in self.ys))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "source": list(self.source),
            "target": list(self.target),
            "l": self.l,
            "q": self.q,
            "xs": [list(v) for v in self.xs],
            "ys": [list(v) for v in self.ys],
            "matrix": self.matrix.to_json(),
        }


def check_feasibility_witness(witness: FeasibilityWitness) -> List[str]:
    """Independently validate a witness; returns a list of violations.

    An empty list means the witness is genuine.  This checker shares no
    code with the search beyond basic arithmetic: it re-verifies every
    defining inequality and congruence from scratch.
    """
    problems: List[str] = []
    n, d, dp = witness.n, witness.source, witness.target
    k, kp = len(d), len(dp)
    l, q = witness.l, witness.q
    sd, sdp = d.total(), dp.total()
    if not (sd <= l <= sdp):
        problems.append(f"l = {l} outside [{sd}, {sdp}]")
    if q < 1:
        problems.append(f"q = {q} is not positive")
    if q * (sd - n - 1) > l - n - 1:
        problems.append(f"q-inequality fails: {q}*({sd}-{n}-1) > {l}-{n}-1")
    if len(witness.xs) != l or len(witness.ys) != l:
        problems.append("xs/ys length differs from l")
        return problems
    tot = [0] * k
    for v in witness.xs:
        if len(v) != k or any(c < 0 for c in v) or not any(v):
            problems.append(f"bad source vector {v}")
            continue
        if sum(1 for c in v if c) > n:
            problems.append(f"source vector {v} meets more than n components")
        for i, c in enumerate(v):
            tot[i] += c
    if tot != [q * e for e in d]:
        problems.append(f"source vectors sum to {tot}, expected {[q * e for e in d]}")
    tot = [0] * kp
    for v in witness.ys:
        if len(v) != kp or any(c < 0 for c in v) or not any(v):
            problems.append(f"bad target vector {v}")
            continue
        for i, c in enumerate(v):
            tot[i] += c
    if tot != list(dp):
        problems.append(f"target vectors sum to {tot}, expected {list(dp)}")
    m = witness.matrix
    if m.rows != kp or m.cols != k:
        problems.append(f"matrix is {m.rows}x{m.cols}, expected {kp}x{k}")
        return problems

    def multiple_of_target(vec: Sequence[int]) -> bool:
        t, r = divmod(vec[0], dp[0])
        if r:
            return False
        return all(vec[i] == t * dp[i] for i in range(kp))

    if not multiple_of_target(m.vecmul(tuple(d))):
        problems.append("matrix does not send the source relation into the target relation")
    for x, y in zip(witness.xs, witness.ys):
        diff = [a - b for a, b in zip(m.vecmul(x), y)]
        if not multiple_of_target(diff):
            problems.append(f"matrix image of {x} is not {y} modulo the target relation")
    return problems


@dataclass(frozen=True)
class SearchOutcome:
    """Result of a witness search over the (l, q) grid."""

    status: str
    witness: Optional[FeasibilityWitness]
    bounds: dict
    calls_used: int


def enumerate_vector_partitions(
    target: Sequence[int], parts: int, max_support: int
) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    """All multisets of ``parts`` nonzero nonnegative vectors with the given
    coordinatewise sum and per-vector support bound.

    Each multiset is yielded exactly once, as a tuple of vectors in
    non-increasing lexicographic order (that ordering *is* the canonical
    form).  Enumeration order is deterministic.
    """
    tgt = tuple(int(c) for c in target)
    if not tgt:
        raise ValueError("target vector must be nonempty")
    if any(c < 0 for c in tgt) or not any(tgt):
        raise ValueError(f"target must be nonzero with nonnegative entries, got {tgt}")
    if not isinstance(parts, int) or parts < 1:
        raise ValueError(f"parts must be a positive integer, got {parts!r}")
    if not isinstance(max_support, int) or max_support < 1:
        raise ValueError(f"max_support must be a positive integer, got {max_support!r}")
    m = len(tgt)

    def candidates(remaining: Tuple[int, ...], bound: Tuple[int, ...]) -> List[Tuple[int, ...]]:
        # nonzero v <= remaining coordinatewise, v <= bound lexicographically,
        # support <= max_support; descending lexicographic order.
        out: List[Tuple[int, ...]] = []

        def rec(idx: int, tight: bool, support: int, prefix: List[int]) -> None:
            if idx == m:
                if support:
                    out.append(tuple(prefix))
                return
            hi = min(remaining[idx], bound[idx]) if tight else remaining[idx]
            for c in range(hi, -1, -1):
                ns = support + (1 if c else 0)
                if ns > max_support:
                    continue
                prefix.append(c)
                rec(idx + 1, tight and c == bound[idx], ns, prefix)
                prefix.pop()

        rec(0, True, 0, [])
        return out

    def split(
        remaining: Tuple[int, ...], nparts: int, bound: Tuple[int, ...]
    ) -> Iterator[Tuple[Tuple[int, ...], ...]]:
        total = sum(remaining)
        if nparts == 0:
            if total == 0:
                yield ()
            return
        if total < nparts:  # every part must be nonzero
            return
        if sum(1 for c in remaining if c) > nparts * max_support:
            return
        for w in candidates(remaining, bound):
            rest = tuple(a - b for a, b in zip(remaining, w))
            for tail in split(rest, nparts - 1, w):
                yield (w,) + tail

    return split(tgt, parts, tgt)


def _assignments(
    group_sizes: Sequence[int], class_sizes: Sequence[int]
) -> Iterator[Tuple[int, ...]]:
    """Ways to send each source-residue group wholly into one target-residue
    class so that every class is filled exactly.

    Yields tuples f with f[g] = class index; deterministic lexicographic
    order.  This is exactly the matching constraint: paired vectors with
    equal source residues must share a target residue, so a pairing is a
    function on residue groups, and filling each class exactly is the
    multiset condition.
    """
    remaining = list(class_sizes)
    n_groups = len(group_sizes)
    choice: List[int] = []

    def rec(g: int) -> Iterator[Tuple[int, ...]]:
        if g == n_groups:
            if all(c == 0 for c in remaining):
                yield tuple(choice)
            return
        size = group_sizes[g]
        for h in range(len(remaining)):
            if remaining[h] >= size:
                remaining[h] -= size
                choice.append(h)
                yield from rec(g + 1)
                choice.pop()
                remaining[h] += size

    return rec(0)


def _grid_cells(
    n: int, sd: int, sdp: int, budget: Budget
) -> Tuple[List[Tuple[int, int]], bool]:
    """The (l, q) cells to explore, in order, plus whether the grid is
    exhaustive (so that completing it proves infeasibility)."""
    cells: List[Tuple[int, int]] = []
    finite = sd > n + 1
    for l in range(sd, sdp + 1):
        if finite:
            q_max = (l - n - 1) // (sd - n - 1)
        else:
            q_max = budget.q_cap
        for q in range(1, q_max + 1):
            cells.append((l, q))
    return cells, finite


def _cell_outcome(
    n: int,
    d: DegreeTuple,
    dp: DegreeTuple,
    l: int,
    q: int,
    y_partitions: Sequence[Tuple[Tuple[int, ...], ...]],
    memo: Dict[tuple, Optional[IntMatrix]],
    call_cap: int,
    deadline: Optional[float],
) -> Tuple[str, int, Optional[FeasibilityWitness]]:
    """Exhaust one (l, q) cell.

    Returns (status, calls, witness) with status one of "FEASIBLE", "DONE",
    "ABORT".  The call count at any point is a pure function of (cell,
    call_cap) — memo hits still count — which is what makes multi-threaded
    runs verdict-identical to sequential ones.
    """
    k, kp = len(d), len(dp)
    calls = 0
    scaled = tuple(q * e for e in d)
    if sum(scaled) < l:  # cannot split q*d into l nonzero parts
        return "DONE", 0, None
    for xs in enumerate_vector_partitions(scaled, l, min(n, k)):
        if deadline is not None and time.monotonic() > deadline:
            return "ABORT", calls, None
        x_groups: Dict[Tuple[int, ...], List[Tuple[int, ...]]] = {}
        for x in xs:
            x_groups.setdefault(homology_reduce(x, d).coordinates, []).append(x)
        g_keys = sorted(x_groups)
        g_sizes = [len(x_groups[key]) for key in g_keys]
        for ys in y_partitions:
            if deadline is not None and time.monotonic() > deadline:
                return "ABORT", calls, None
            y_classes: Dict[Tuple[int, ...], List[Tuple[int, ...]]] = {}
            for y in ys:
                y_classes.setdefault(homology_reduce(y, dp).coordinates, []).append(y)
            h_keys = sorted(y_classes)
            h_sizes = [len(y_classes[key]) for key in h_keys]
            for f in _assignments(g_sizes, h_sizes):
                calls += 1
                if calls > call_cap:
                    return "ABORT", calls, None
                pairs_key = tuple(
                    sorted((g_keys[g], h_keys[f[g]]) for g in range(len(g_keys)))
                )
                if pairs_key in memo:
                    mat = memo[pairs_key]
                else:
                    rep_pairs = [
                        (x_groups[g_keys[g]][0], y_classes[h_keys[f[g]]][0])
                        for g in range(len(g_keys))
                    ]
                    mat = hom_exists(d, dp, rep_pairs)
                    memo[pairs_key] = mat
                if mat is None:
                    continue
                consumed = {key: list(y_classes[key]) for key in h_keys}
                ys_aligned = []
                for x in xs:
                    g = g_keys.index(homology_reduce(x, d).coordinates)
                    ys_aligned.append(consumed[h_keys[f[g]]].pop(0))
                witness = FeasibilityWitness(
                    n, d, dp, l, q, tuple(xs), tuple(ys_aligned), mat
                )
                assert not check_feasibility_witness(witness)
                return "FEASIBLE", calls, witness
    return "DONE", calls, None


def witness_search(
    n: int,
    source: Sequence[int],
    target: Sequence[int],
    budget: Optional[Budget] = None,
    threads: int = 1,
) -> SearchOutcome:
    """Decide feasibility of the formal-curve obstruction system.

    Explores the (l, q) grid in ascending order.  Returns FEASIBLE with a
    validated witness, INFEASIBLE only when the grid is provably exhaustive
    (total source degree > n + 1) and fully explored, and BUDGET_EXCEEDED
    otherwise.  In the boundary case sum(d) = n + 1 the q-range is
    unbounded, so no finite exploration can prove infeasibility and the
    fallback is always BUDGET_EXCEEDED.

    Raises HypothesisViolated unless both degree sums are at least n + 1.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"complex dimension must be a positive integer, got {n!r}")
    d = DegreeTuple(source)
    dp = DegreeTuple(target)
    budget = budget or Budget()
    if not isinstance(threads, int) or threads < 1:
        raise ValueError(f"threads must be a positive integer, got {threads!r}")
    sd, sdp = d.total(), dp.total()
    if sd < n + 1 or sdp < n + 1:
        raise HypothesisViolated(
            f"witness search requires both degree sums >= n + 1 = {n + 1}; "
            f"got {sd} and {sdp}"
        )
    cells, finite = _grid_cells(n, sd, sdp, budget)
    bounds: dict = {
        "sum_source": sd,
        "sum_target": sdp,
        "l_range": [sd, sdp],
        "l_range_empty": sd > sdp,
        "q_range_finite": finite,
        "q_cap_applied": None if finite else budget.q_cap,
        "cells_total": len(cells),
        "calls_used": 0,
        "exhausted": False,
    }
    if sd > sdp:
        return SearchOutcome(INFEASIBLE, None, {**bounds, "exhausted": True}, 0)

    deadline = time.monotonic() + budget.time_cap if budget.time_cap else None
    memo: Dict[tuple, Optional[IntMatrix]] = {}
    y_cache: Dict[int, List[Tuple[Tuple[int, ...], ...]]] = {}

    def y_partitions(l: int) -> List[Tuple[Tuple[int, ...], ...]]:
        if l not in y_cache:
            y_cache[l] = list(enumerate_vector_partitions(tuple(dp), l, len(dp)))
        return y_cache[l]

    def run_cell(cell: Tuple[int, int]) -> Tuple[str, int, Optional[FeasibilityWitness]]:
        l, q = cell
        return _cell_outcome(
            n, d, dp, l, q, y_partitions(l), memo, budget.call_cap, deadline
        )

    cum = 0
    if threads == 1:
        results: Iterator = map(run_cell, cells)
        for status, calls, witness in results:
            cum += calls
            bounds["calls_used"] = cum
            if status == "FEASIBLE" and cum <= budget.call_cap:
                return SearchOutcome(FEASIBLE, witness, bounds, cum)
            if status == "ABORT" or cum > budget.call_cap:
                return SearchOutcome(BUDGET_EXCEEDED, None, bounds, cum)
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            futures = [pool.submit(run_cell, cell) for cell in cells]
            for fut in futures:
                status, calls, witness = fut.result()
                cum += calls
                bounds["calls_used"] = cum
                if status == "FEASIBLE" and cum <= budget.call_cap:
                    for other in futures:
                        other.cancel()
                    return SearchOutcome(FEASIBLE, witness, bounds, cum)
                if status == "ABORT" or cum > budget.call_cap:
                    for other in futures:
                        other.cancel()
                    return SearchOutcome(BUDGET_EXCEEDED, None, bounds, cum)
    if finite:
        bounds["exhausted"] = True
        return SearchOutcome(INFEASIBLE, None, bounds, cum)
    return SearchOutcome(BUDGET_EXCEEDED, None, bounds, cum)


def quick_checks(
    n: int, source: Sequence[int], target: Sequence[int], mode: str = LIOUVILLE
) -> Optional[Certificate]:
    """Closed-form NO certificates, cheapest first; None when silent.

    The threshold obstruction (f_invariant divisibility) applies in every
    mode — it survives deformation well beyond the Liouville category.  The
    remaining three are Liouville/Weinstein obstructions valid when both
    total degrees are at least n + 1: a drop in total degree, an all-ones
    target with a not-all-ones source, and a single-component source whose
    degree misses the target gcd.
    """
    d = DegreeTuple(source)
    dp = DegreeTuple(target)
    base = {"n": n, "source": list(d), "target": list(dp), "mode": mode}
    fs, ft = f_invariant(n, d), f_invariant(n, dp)
    if ft % fs:
        return Certificate(
            FN_ALMOST_SYMPLECTIC,
            {**base, "f_source": fs, "f_target": ft},
        )
    if mode in (LIOUVILLE, WEINSTEIN) and d.total() >= n + 1 and dp.total() >= n + 1:
        if d.total() > dp.total():
            return Certificate(
                SUM_DROP,
                {
                    **base,
                    "sum_source": d.total(),
                    "sum_target": dp.total(),
                    "l_range": [d.total(), dp.total()],
                    "l_range_empty": True,
                },
            )
        if all(e == 1 for e in dp) and not all(e == 1 for e in d):
            return Certificate(
                HYPERPLANE_TARGET,
                {**base, "target_all_ones": True, "source_all_ones": False},
            )
        if len(d) == 1 and dp.gcd() % d[0]:
            return Certificate(
                GCD_SINGLE,
                {**base, "divisor": d[0], "target_gcd": dp.gcd()},
            )
    return None


def decide(
    n: int,
    source: Sequence[int],
    target: Sequence[int],
    mode: str = LIOUVILLE,
    budget: Optional[Budget] = None,
    threads: int = 1,
) -> Verdict:
    """Decide whether one complement embeds into another, with evidence.

    The ladder, in order:

    1. symplectic mode: gcd divisibility is necessary (NO), and when the
       source gcd is itself a source entry it is sufficient (YES, via
       forgetting the other components and then rewriting); otherwise
       UNKNOWN — no complete symplectic criterion is implemented.
    2. Liouville/Weinstein: the constructive partial order gives YES with a
       move-sequence witness.
    3. quick_checks may certify NO.
    4. when both total degrees are >= n + 1: if the target total degree is
       below 2*sum(d) - n - 1, the embedding question reduces to the
       partial order, so a non-YES is NO outright; otherwise the witness
       search runs, and INFEASIBLE means NO.
    5. anything else is UNKNOWN with a reason.

    YES verdicts carry witnesses, NO verdicts carry certificates, and the
    ``search_bounds`` attribute documents the explored grid whenever the
    search ran.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"complex dimension must be a positive integer, got {n!r}")
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    d = DegreeTuple(source)
    dp = DegreeTuple(target)
    budget = budget or Budget()
    base = {"n": n, "source": list(d), "target": list(dp), "mode": mode}

    if mode == SYMPLECTIC:
        g, gp = d.gcd(), dp.gcd()
        if gp % g:
            return Verdict.no(
                Certificate(GCD_SINGLE, {**base, "divisor": g, "target_gcd": gp})
            )
        if g in d:
            ok, moves = leqq((g,), dp)
            assert ok and moves is not None
            witness = {
                "type": "component_inclusion_then_moves",
                "component_degree": g,
                "component_index": d.index(g),
                "moves": moves,
            }
            return Verdict.yes(witness)
        return Verdict.unknown(
            "source gcd divides target gcd but is not a source entry; "
            "no complete symplectic criterion applies"
        )

    ok, moves = leqq(d, dp)
    if ok:
        assert moves is not None
        return Verdict.yes(moves)

    cert = quick_checks(n, d, dp, mode)
    if cert is not None:
        return Verdict.no(cert)

    sd, sdp = d.total(), dp.total()
    if sd >= n + 1 and sdp >= n + 1:
        if sdp < 2 * sd - n - 1:
            return Verdict.no(
                Certificate(
                    DEGREE_HYP_NOT_LEQQ,
                    {
                        **base,
                        "sum_source": sd,
                        "sum_target": sdp,
                        "window_bound": 2 * sd - n - 1,
                        "leqq": False,
                    },
                )
            )
        outcome = witness_search(n, d, dp, budget, threads)
        if outcome.status == INFEASIBLE:
            return Verdict.no(
                Certificate(
                    WITNESS_INFEASIBLE,
                    {**base, "budget": budget.to_json()},
                    search_bounds=outcome.bounds,
                ),
                search_bounds=outcome.bounds,
            )
        if outcome.status == FEASIBLE:
            assert outcome.witness is not None
            return Verdict.unknown(
                "the formal-curve obstruction system is feasible "
                f"(l = {outcome.witness.l}, q = {outcome.witness.q}), but no "
                "embedding construction is known in this range",
                search_bounds=outcome.bounds,
            )
        return Verdict.unknown(
            "witness search exceeded its budget before settling feasibility",
            search_bounds=outcome.bounds,
        )

    return Verdict.unknown(
        f"total degrees ({sd}, {sdp}) are below the n + 1 = {n + 1} threshold "
        "where the obstruction theory applies; only the threshold "
        "divisibility check was available and it did not fire"
    )


def replay_certificate(cert: Certificate) -> bool:
    """Re-derive a NO certificate from its own data; True iff it stands.

    Each rule is replayed by an independent (and for WITNESS_INFEASIBLE,
    expensive) recomputation, using nothing but the certificate contents.
    """
    data = cert.data
    n = data["n"]
    d = DegreeTuple(data["source"])
    dp = DegreeTuple(data["target"])
    if cert.rule == FN_ALMOST_SYMPLECTIC:
        return f_invariant(n, dp) % f_invariant(n, d) != 0
    if cert.rule == SUM_DROP:
        return (
            d.total() >= n + 1
            and dp.total() >= n + 1
            and d.total() > dp.total()
        )
    if cert.rule == HYPERPLANE_TARGET:
        return (
            d.total() >= n + 1
            and dp.total() >= n + 1
            and all(e == 1 for e in dp)
            and not all(e == 1 for e in d)
        )
    if cert.rule == GCD_SINGLE:
        if data["mode"] == SYMPLECTIC:
            return dp.gcd() % d.gcd() != 0
        return (
            len(d) == 1
            and d.total() >= n + 1
            and dp.total() >= n + 1
            and dp.gcd() % d[0] != 0
        )
    if cert.rule == DEGREE_HYP_NOT_LEQQ:
        return (
            d.total() >= n + 1
            and dp.total() >= n + 1
            and dp.total() < 2 * d.total() - n - 1
            and not leqq(d, dp)[0]
        )
    if cert.rule == WITNESS_INFEASIBLE:
        spec = data.get("budget") or {}
        budget = Budget(
            q_cap=spec.get("q_cap", 4),
            call_cap=spec.get("call_cap", 10**6),
            time_cap=spec.get("time_cap"),
        )
        return witness_search(n, d, dp, budget).status == INFEASIBLE
    raise ValueError(f"unknown certificate rule {cert.rule!r}")


def verify_verdict(
    n: int,
    source: Sequence[int],
    target: Sequence[int],
    mode: str,
    verdict: Verdict,
) -> bool:
    """Replay a verdict's evidence against the query it claims to answer."""
    d = DegreeTuple(source)
    dp = DegreeTuple(target)
    if verdict.kind == YES:
        w = verdict.witness
        if isinstance(w, MoveSequence):
            return w.source == d and w.target == dp and w.is_valid()
        if isinstance(w, dict) and w.get("type") == "component_inclusion_then_moves":
            g = w["component_degree"]
            moves = w["moves"]
            return (
                mode == SYMPLECTIC
                and g in d
                and g == d.gcd()
                and dp.gcd() % g == 0
                and moves.source == DegreeTuple((g,))
                and moves.target == dp
                and moves.is_valid()
            )
        return False
    if verdict.kind == NO:
        cert = verdict.certificate
        return (
            isinstance(cert, Certificate)
            and DegreeTuple(cert.data["source"]) == d
            and DegreeTuple(cert.data["target"]) == dp
            and cert.data["n"] == n
            and replay_certificate(cert)
        )
    return verdict.kind == UNKNOWN
