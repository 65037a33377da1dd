"""(r, delta)-locality: bound, verification, profiles, structure theorems.

The locality verifier works straight from the definition: coordinate i
has locality (r, delta) when some support set R_i containing i, of size
at most r + delta - 1, induces a punctured code of minimum distance at
least delta.  The search enumerates candidate supports in increasing
size and lexicographic order (so results are deterministic and the same
routine doubles as the r-optimality oracle), with one structural prune:
a qualifying support must carry delta - 1 independent parity words, i.e.
its generator columns must be rank-deficient by delta - 1, and the
deficiency grows by at most one per added column.  That cuts the search
to all subsets of size <= r plus near-dependent extensions.

Profiles describe the partition of parity-check rows into local groups
plus a global group, with 1-based row and column indexing throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from math import ceil, floor
from typing import Sequence

import numpy as np

from . import gf4
from ._gf4vec import Eliminator, pack_columns, pack_rows
from .code import LinearCode
from .errors import RankError, ResourceError, ScanBudgetExceeded, StructureError
from .mat4 import Mat4, vstack

LOCALITY_SEARCH_MAX_N = 30


def singleton_like_bound(n: int, k: int, r: int, delta: int) -> int:
    """Upper bound n - k + 1 - (ceil(k/r) - 1)(delta - 1) on the distance."""
    _check_locality_params(n, k, r, delta)
    return n - k + 1 - (ceil(k / r) - 1) * (delta - 1)


def group_count_range(n: int, k: int, r: int, delta: int) -> tuple[int, int]:
    """Feasible local-group counts (ceil(k/r), floor((n-k)/(delta-1))).

    The pair is returned even when the lower end exceeds the upper end;
    that marks the parameters as infeasible.
    """
    _check_locality_params(n, k, r, delta)
    return ceil(k / r), floor((n - k) / (delta - 1))


def _check_locality_params(n: int, k: int, r: int, delta: int) -> None:
    if not (1 <= r <= k <= n):
        raise ValueError(f"need 1 <= r <= k <= n, got n={n}, k={k}, r={r}")
    if delta < 2:
        raise ValueError(f"need delta >= 2, got {delta}")


@dataclass(frozen=True)
class LocalGroup:
    """One local group: its parity-check rows and column support (1-based)."""

    rows: tuple[int, ...]
    support: frozenset[int]


@dataclass
class LocalityProfile:
    """Partition of parity-check rows into local groups plus a global group.

    ``matrix`` is the constraint matrix the row indices refer to (the
    code's parity check when absent).  ``partitioned`` is False in the
    exceptional case where the code is a certified LRC but no full-rank
    parity-check matrix admits a local/global row partition; the matrix
    is then an augmented (redundant-row) constraint stack.
    """

    r: int
    delta: int
    groups: tuple[LocalGroup, ...]
    global_rows: tuple[int, ...] = ()
    matrix: Mat4 | None = field(default=None, repr=False)
    partitioned: bool = True
    #: per-coordinate qualifying support when built by the search
    coordinate_supports: dict[int, frozenset[int]] | None = field(default=None, repr=False)

    @property
    def l(self) -> int:
        return len(self.groups)

    @property
    def ok(self) -> bool:
        return True

    def supports(self) -> list[frozenset[int]]:
        return [g.support for g in self.groups]


@dataclass
class LocalityFailure:
    """Coordinates for which no qualifying repair support exists."""

    r: int
    delta: int
    bad_coordinates: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return False


def _punctured_distance_at_least(gen: Mat4, cols0: Sequence[int], delta: int) -> bool:
    """Exact check that the code punctured to these columns has d >= delta."""
    basis = gen.take_columns(cols0).row_basis()
    kk = basis.rows
    if kk == 0:
        return False
    arr = basis.array
    for scalars in product(gf4.ELEMENTS, repeat=kk):
        if not any(scalars):
            continue
        vec = np.zeros(len(cols0), dtype=np.uint8)
        for lam, row in zip(scalars, arr):
            vec ^= gf4.MUL_NP[lam, row]
        if int(np.count_nonzero(vec)) < delta:
            return False
    return True


def _locality_search(
    gen: Mat4, r: int, delta: int, collect_all: bool = False
) -> tuple[dict[int, frozenset[int]], list[frozenset[int]]]:
    """Scan supports in (size, lex) order for d(C|_R) >= delta.

    Returns per-coordinate first qualifying supports and, when
    ``collect_all`` is set, every qualifying support found.  A support
    must carry delta - 1 independent parity words, so its generator
    columns are rank-deficient by delta - 1; the deficiency grows by at
    most one per added column, which prunes the tree sharply.
    """
    n = gen.cols
    cols = pack_columns(gen)
    smax = r + delta - 1
    need_def = delta - 1
    assigned: dict[int, frozenset[int]] = {}
    found: list[frozenset[int]] = []

    for size in range(delta, smax + 1):
        if len(assigned) == n and not collect_all:
            break
        elim = Eliminator()
        chosen: list[int] = []

        def rec(start: int, deficiency: int) -> None:
            depth = len(chosen)
            if depth == size:
                if deficiency >= need_def and _punctured_distance_at_least(gen, chosen, delta):
                    s = frozenset(c + 1 for c in chosen)
                    for c in chosen:
                        assigned.setdefault(c + 1, s)
                    if collect_all:
                        found.append(s)
                return
            # deficiency rises at most 1 per column: prune hopeless branches
            slack = size - depth
            if deficiency + slack < need_def:
                return
            for i in range(start, n - (size - depth) + 1):
                grew = elim.push(cols[i])
                chosen.append(i)
                rec(i + 1, deficiency + (0 if grew else 1))
                chosen.pop()
                elim.pop()

        rec(0, 0)
    return assigned, found


def qualifying_supports(
    c: LinearCode, r: int, delta: int, max_n: int = LOCALITY_SEARCH_MAX_N
) -> list[frozenset[int]]:
    """Every support R with |R| <= r+delta-1 and d(C|_R) >= delta, in
    (size, lex) order."""
    if c.n > max_n:
        raise ResourceError(f"locality search guarded at n <= {max_n}, got n = {c.n}")
    _, found = _locality_search(c.complete().gen, r, delta, collect_all=True)
    return found


def verify_locality(
    c: LinearCode, r: int, delta: int, max_n: int = LOCALITY_SEARCH_MAX_N
) -> LocalityProfile | LocalityFailure:
    """Certify (r, delta)-locality of every coordinate, by definition.

    On success the profile's groups are the deduplicated qualifying
    supports, pruned to a minimal cover (row indices are not filled in;
    see :func:`extract_profile` for layout-derived profiles).  On failure
    the uncovered coordinates are listed.
    """
    if r < 1 or delta < 2:
        raise ValueError(f"need r >= 1 and delta >= 2, got r={r}, delta={delta}")
    if c.k == 0:
        raise ValueError("locality of the zero code is undefined")
    if c.n > max_n:
        raise ResourceError(f"locality search guarded at n <= {max_n}, got n = {c.n}")
    cc = c.complete()
    assigned, _ = _locality_search(cc.gen, r, delta)
    bad = tuple(i for i in range(1, c.n + 1) if i not in assigned)
    if bad:
        return LocalityFailure(r=r, delta=delta, bad_coordinates=bad)
    supports: list[frozenset[int]] = []
    for i in range(1, c.n + 1):
        s = assigned[i]
        if s not in supports:
            supports.append(s)
    supports = _minimal_cover(supports, c.n)
    groups = tuple(LocalGroup(rows=(), support=s) for s in supports)
    return LocalityProfile(
        r=r, delta=delta, groups=groups, coordinate_supports=dict(assigned)
    )


def _minimal_cover(supports: list[frozenset[int]], n: int) -> list[frozenset[int]]:
    """Drop supports that are redundant for covering {1..n}, newest first."""
    kept = list(supports)
    for i in range(len(kept) - 1, -1, -1):
        rest: set[int] = set()
        for j, s in enumerate(kept):
            if j != i:
                rest.update(s)
        if len(rest) == n:
            kept.pop(i)
    return kept


def is_r_optimal(c: LinearCode, r: int, delta: int) -> bool:
    """True when locality (r-1, delta) is impossible (vacuously true at r = 1)."""
    if r <= 1:
        return True
    return not verify_locality(c, r - 1, delta).ok


def extract_profile(
    pchk: Mat4,
    layout: Sequence[tuple[int, int]],
    r: int | None = None,
    delta: int | None = None,
    partitioned: bool = True,
) -> LocalityProfile:
    """Build a profile from a parity-check matrix and its group row ranges.

    ``layout`` lists 1-based inclusive row ranges, one per local group,
    partitioning a prefix of the rows; the remaining rows are global.
    delta defaults to rows-per-group + 1 (ranges must then be uniform)
    and r to the largest support size minus (delta - 1).
    """
    n = pchk.cols
    ranges = [(int(a), int(b)) for a, b in layout]
    expect = 1
    for a, b in ranges:
        if a != expect or b < a:
            raise StructureError(f"group row ranges must tile a prefix: got {ranges}")
        expect = b + 1
    if expect - 1 > pchk.rows:
        raise StructureError("layout references more rows than the matrix has")
    global_rows = tuple(range(expect, pchk.rows + 1))

    sizes = {b - a + 1 for a, b in ranges}
    if delta is None:
        if len(sizes) != 1:
            raise StructureError(f"cannot infer delta from mixed group sizes {sorted(sizes)}")
        delta = sizes.pop() + 1

    groups = []
    covered: set[int] = set()
    for a, b in ranges:
        rows = tuple(range(a, b + 1))
        support = frozenset(c + 1 for c in pchk.column_support(range(a - 1, b)))
        if not support:
            raise StructureError(f"local group rows {a}..{b} are all zero")
        groups.append(LocalGroup(rows=rows, support=support))
        covered |= support

    if r is None:
        r = max(len(g.support) for g in groups) - delta + 1

    uncovered = sorted(set(range(1, n + 1)) - covered)
    if uncovered:
        raise StructureError(f"coordinates not covered by any local group: {uncovered}")
    for g in groups:
        if len(g.support) > r + delta - 1:
            raise StructureError(
                f"group {g.rows} has support size {len(g.support)} > r+delta-1 = {r + delta - 1}"
            )
    if len(groups) > 1:
        for i, g in enumerate(groups):
            rest: set[int] = set()
            for j, h in enumerate(groups):
                if j != i:
                    rest |= h.support
            if len(rest) == n:
                raise StructureError(f"dropping group {i + 1} still covers all coordinates")
    return LocalityProfile(
        r=r,
        delta=delta,
        groups=tuple(groups),
        global_rows=global_rows,
        matrix=pchk,
        partitioned=partitioned,
    )


def _local_dual_basis(h0: Mat4, support: frozenset[int]) -> Mat4:
    """Basis of the dual words vanishing outside the (1-based) support."""
    n = h0.cols
    outside = [i for i in range(n) if (i + 1) not in support]
    combos = h0.take_columns(outside).transpose().right_kernel()
    return (combos @ h0).row_basis()


def _select_cover(
    n: int,
    candidates: list[tuple[frozenset[int], Mat4]],
) -> list[int] | None:
    """First (in candidate order) subfamily covering {1..n} whose local
    row blocks are mutually independent.  Depth-first with backtracking."""
    packed = [pack_rows(basis) for _, basis in candidates]
    elim = Eliminator()
    chosen: list[int] = []

    def rec(start: int, covered: frozenset[int]) -> bool:
        if len(covered) == n:
            return True
        rest: set[int] = set()
        for i in range(start, len(candidates)):
            rest |= candidates[i][0]
        if not covered | rest >= set(range(1, n + 1)):
            return False
        for i in range(start, len(candidates)):
            s = candidates[i][0]
            if s <= covered:
                continue
            rows = packed[i]
            pushed = 0
            ok = True
            for v in rows:
                if not elim.push(v):
                    ok = False
                    pushed += 1
                    break
                pushed += 1
            if ok:
                chosen.append(i)
                if rec(i + 1, covered | s):
                    return True
                chosen.pop()
            for _ in range(pushed):
                elim.pop()
        return False

    if rec(0, frozenset()):
        return chosen
    return None


def _select_cover_relaxed(n: int, candidates: list[tuple[frozenset[int], Mat4]]) -> list[int] | None:
    """First covering subfamily in candidate order, ignoring row overlap."""
    chosen: list[int] = []

    def rec(start: int, covered: frozenset[int]) -> bool:
        if len(covered) == n:
            return True
        rest: set[int] = set()
        for i in range(start, len(candidates)):
            rest |= candidates[i][0]
        if not covered | rest >= set(range(1, n + 1)):
            return False
        for i in range(start, len(candidates)):
            s = candidates[i][0]
            if s <= covered:
                continue
            chosen.append(i)
            if rec(i + 1, covered | s):
                return True
            chosen.pop()
        return False

    return chosen if rec(0, frozenset()) else None


def structured_parity_check(
    c: LinearCode,
    r: int,
    delta: int,
    supports: Sequence[frozenset[int]] | None = None,
) -> tuple[Mat4, list[tuple[int, int]], bool]:
    """Rebuild a constraint matrix in local/global block form.

    Local groups are qualifying supports (given, or searched in (size,
    lex) order) selected so that they cover every coordinate and their
    per-support dual bases stay mutually independent; the global rows
    extend the stack to a full dual basis.  Returns the matrix, the
    1-based group row ranges, and whether the rows form a genuine
    partition of a full-rank parity check.

    Some certified LRCs admit no such partition at all (every qualifying
    cover needs more than n - k group rows); for those the matrix is an
    augmented stack with redundant rows and the flag is False.
    """
    cc = c.complete()
    h0 = cc.pchk
    n = cc.n
    if supports is None:
        pool = qualifying_supports(cc, r, delta)
    else:
        pool = list(supports)
    candidates = [(s, _local_dual_basis(h0, s)) for s in pool]
    candidates = [(s, b) for s, b in candidates if b.rows > 0]
    chosen = _select_cover(n, candidates)
    partitioned = chosen is not None
    if chosen is None:
        chosen = _select_cover_relaxed(n, candidates)
    if chosen is None:
        raise StructureError("no family of local groups covers all coordinates")
    picked = [candidates[i] for i in chosen]
    # drop groups that became redundant for coverage, newest first
    for i in range(len(picked) - 1, -1, -1):
        rest: set[int] = set()
        for j, (s, _) in enumerate(picked):
            if j != i:
                rest |= s
        if len(rest) == n:
            picked.pop(i)

    blocks = [b for _, b in picked]
    layout: list[tuple[int, int]] = []
    at = 1
    for b in blocks:
        layout.append((at, at + b.rows - 1))
        at += b.rows
    stacked = vstack(blocks) if blocks else Mat4.zeros(0, n)

    elim = Eliminator()
    for v in pack_rows(stacked):
        elim.push(v)
    extra_rows = []
    for idx, v in enumerate(pack_rows(h0)):
        if elim.push(v):
            extra_rows.append(idx)
    h = vstack([stacked, h0.take_rows(extra_rows)]) if extra_rows else stacked
    if h.rank() != h0.rows:
        raise StructureError("restructured parity check lost rank")
    if partitioned and h.rows != h0.rows:
        raise StructureError("partitioned stack has redundant rows")
    return h, layout, partitioned


# ---------------------------------------------------------------------------
# structure checks


@dataclass
class CheckResult:
    name: str
    passed: bool | None
    witness: str | None = None

    def __bool__(self) -> bool:
        return self.passed is not False


CHECK_NAMES = (
    "h_prime_mds",
    "rows_per_group",
    "punctured_mds",
    "disjointness",
    "distance_cap",
)


@dataclass
class OptimalityReport:
    """Everything the verification pipeline establishes about one code."""

    n: int
    k: int
    d: int | None
    bound_d: int
    r: int
    delta: int
    d_optimal: bool | None
    r_optimal: bool | None
    profile: LocalityProfile
    checks: dict[str, CheckResult]
    notes: list[str] = field(default_factory=list)
    family: str | None = None
    status: str | None = None

    @property
    def all_passed(self) -> bool:
        if self.d_optimal is False or self.r_optimal is False:
            return False
        return all(c.passed is not False for c in self.checks.values())

    def to_json_dict(self) -> dict:
        return {
            "params": {"n": self.n, "k": self.k, "d": self.d},
            "locality": {
                "r": self.r,
                "delta": self.delta,
                "l": self.profile.l,
                "groups": [
                    {"rows": list(g.rows), "support": sorted(g.support)}
                    for g in self.profile.groups
                ],
            },
            "bound_d": self.bound_d,
            "d_optimal": self.d_optimal,
            "r_optimal": self.r_optimal,
            "checks": {name: self.checks[name].passed for name in CHECK_NAMES},
            "family": self.family,
            "status": self.status,
        }


def check_structure(
    c: LinearCode,
    profile: LocalityProfile,
    *,
    r_optimality: bool = True,
    scan_budget: int | None = None,
) -> OptimalityReport:
    """Run the optimality predicates and the five structural theorem checks.

    The profile must refer to rows of ``c``'s parity-check matrix.  When
    the minimum-distance scan exceeds its budget, or the code is beyond
    the locality-search guard, the affected verdicts are reported as None
    with an explanatory note rather than failing.
    """
    cc = c.complete()
    n, k = cc.n, cc.k
    r, delta = profile.r, profile.delta
    notes: list[str] = []

    h = profile.matrix if profile.matrix is not None else cc.pchk
    if h.cols != n or h.row_basis() != cc.pchk.row_basis():
        raise StructureError("profile matrix does not present the same code")
    if not profile.partitioned:
        notes.append(
            "no full-rank parity check admits a local/global row partition "
            "at these parameters; groups reference an augmented constraint stack"
        )

    d: int | None
    try:
        d = cc.min_distance(budget=scan_budget)
    except ScanBudgetExceeded as e:
        d = None
        notes.append(f"min distance not settled: {e}; structural checks only")

    bound = singleton_like_bound(n, k, r, delta)
    d_optimal = None if d is None else (d == bound)

    r_optimal: bool | None = None
    if r_optimality:
        try:
            r_optimal = is_r_optimal(cc, r, delta)
        except ResourceError as e:
            notes.append(f"r-optimality skipped: {e}")

    checks = {
        "h_prime_mds": _check_h_prime(cc, profile, h, d if d is not None else bound),
        "rows_per_group": _check_rows_per_group(profile),
        "punctured_mds": _check_punctured_mds(cc, profile),
        "disjointness": _check_disjointness(cc, profile),
        "distance_cap": _check_distance_cap(k, r, delta, d),
    }
    return OptimalityReport(
        n=n,
        k=k,
        d=d,
        bound_d=bound,
        r=r,
        delta=delta,
        d_optimal=d_optimal,
        r_optimal=r_optimal,
        profile=profile,
        checks=checks,
        notes=notes,
    )


def _check_h_prime(
    c: LinearCode, profile: LocalityProfile, h: Mat4, d_target: int
) -> CheckResult:
    """Deleting any ceil(k/r)-1 groups (rows and covered columns) must leave
    a full-rank parity check of an MDS code with the same distance."""
    name = "h_prime_mds"
    if not profile.partitioned:
        return CheckResult(
            name, None, "no full-rank local/global row partition exists at these parameters"
        )
    if not all(g.rows for g in profile.groups):
        return CheckResult(name, None, "profile carries no row layout")
    s = ceil(c.k / profile.r) - 1
    if s > profile.l:
        return CheckResult(name, False, f"ceil(k/r)-1 = {s} exceeds l = {profile.l}")
    for choice in combinations(range(profile.l), s):
        drop_rows = set()
        drop_cols: set[int] = set()
        for gi in choice:
            g = profile.groups[gi]
            drop_rows.update(i - 1 for i in g.rows)
            drop_cols.update(i - 1 for i in g.support)
        hp = h.delete_rows(drop_rows).delete_columns(drop_cols)
        tag = "+".join(str(g + 1) for g in choice) or "none"
        if hp.rank() != hp.rows:
            return CheckResult(name, False, f"H' not full rank after removing groups {tag}")
        try:
            sub = LinearCode(pchk=hp)
        except RankError:
            return CheckResult(name, False, f"H' degenerate after removing groups {tag}")
        if sub.k == 0:
            return CheckResult(name, False, f"H' leaves the zero code (groups {tag})")
        dp = sub.min_distance()
        if dp != sub.n - sub.k + 1 or dp != d_target:
            return CheckResult(
                name, False, f"groups {tag}: [{sub.n},{sub.k}] with d'={dp}, want MDS d'={d_target}"
            )
    return CheckResult(name, True)


def _check_rows_per_group(profile: LocalityProfile) -> CheckResult:
    name = "rows_per_group"
    if not all(g.rows for g in profile.groups):
        return CheckResult(name, None, "profile carries no row layout")
    want = profile.delta - 1
    for i, g in enumerate(profile.groups):
        if len(g.rows) != want:
            return CheckResult(name, False, f"group {i + 1} has {len(g.rows)} rows, want {want}")
    return CheckResult(name, True)


def _check_punctured_mds(c: LinearCode, profile: LocalityProfile) -> CheckResult:
    """Each restriction C|_{S_i} must be [s_i, s_i - delta + 1, delta] MDS."""
    name = "punctured_mds"
    delta = profile.delta
    for i, g in enumerate(profile.groups):
        outside = set(range(1, c.n + 1)) - g.support
        local = c.puncture(outside)
        si = len(g.support)
        di = local.min_distance() if local.k else None
        if local.k != si - delta + 1 or di != delta:
            return CheckResult(
                name,
                False,
                f"group {i + 1}: C|_S is [{local.n},{local.k},{di}], "
                f"want [{si},{si - delta + 1},{delta}]",
            )
    return CheckResult(name, True)


def _check_disjointness(c: LinearCode, profile: LocalityProfile) -> CheckResult:
    """When r | k and r < k: disjoint supports of size r+delta-1 tiling n."""
    name = "disjointness"
    r, delta = profile.r, profile.delta
    if c.k % r != 0 or r >= c.k:
        return CheckResult(name, True, "not applicable (r does not properly divide k)")
    full = r + delta - 1
    seen: set[int] = set()
    for i, g in enumerate(profile.groups):
        if len(g.support) != full:
            return CheckResult(name, False, f"group {i + 1} support size {len(g.support)} != {full}")
        if seen & g.support:
            return CheckResult(name, False, f"group {i + 1} overlaps an earlier group")
        seen |= g.support
    if c.n % full != 0:
        return CheckResult(name, False, f"(r+delta-1) = {full} does not divide n = {c.n}")
    return CheckResult(name, True)


def _check_distance_cap(k: int, r: int, delta: int, d: int | None) -> CheckResult:
    """d <= q when r does not divide k-1, else d <= delta*q (q = 4)."""
    name = "distance_cap"
    if d is None:
        return CheckResult(name, None, "distance unknown")
    if (k - 1) % r == 0:
        cap, why = 4 * delta, "r | (k-1)"
    else:
        cap, why = 4, "r does not divide k-1"
    if d > cap:
        return CheckResult(name, False, f"d = {d} exceeds cap {cap} ({why})")
    return CheckResult(name, True)
