"""Linear-code semantics over GF(4).

A :class:`LinearCode` is held as a generator matrix, a parity-check
matrix, or both; the missing one is recovered as a right-kernel basis
(``G H^T = 0``).  On top of that sit the classical operations: minimum
distance, weight distribution, puncturing and shortening, and the MDS
predicates specialised to q = 4.

Minimum distance is computed by one of two exact routes:

* codeword enumeration (4^k words, vectorised in chunks) when
  k <= min(n - k, 12);
* otherwise a scan of parity-check column subsets of growing size t:
  d is the smallest t with t linearly dependent columns.  The scan cost
  is budgeted (default 10^8 subset checks, override with the
  ``LRC4_MAX_SCAN`` environment variable); exceeding the budget raises
  :class:`~lrc4.errors.ScanBudgetExceeded` carrying the proven lower
  bound instead of silently degrading.

Coordinate sets are 1-based in every public signature (so {1..n} like
the literature); internal numpy indexing is 0-based.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import product
from math import comb
from typing import Iterable

import numpy as np

from . import gf4
from ._gf4vec import Eliminator, pack_columns
from .errors import (
    EmptyCodeError,
    RankError,
    ResourceError,
    ScanBudgetExceeded,
    UndefinedDistanceError,
)
from .mat4 import Mat4

DEFAULT_SCAN_BUDGET = 10**8
_ENUM_CHUNK_K = 10  # codeword tables are built 4^10 rows at a time
_MAX_ENUM_K = 14


def scan_budget() -> int:
    """Active column-scan budget (LRC4_MAX_SCAN overrides the default)."""
    raw = os.environ.get("LRC4_MAX_SCAN")
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise ValueError(f"LRC4_MAX_SCAN must be an integer, got {raw!r}") from None
    return DEFAULT_SCAN_BUDGET


@dataclass(frozen=True)
class CodeParams:
    """[n, k, d] triple with the classical Singleton sanity check."""

    n: int
    k: int
    d: int

    def __post_init__(self):
        if not (1 <= self.d <= self.n - self.k + 1):
            raise ValueError(f"[{self.n},{self.k},{self.d}] violates 1 <= d <= n-k+1")

    def __str__(self) -> str:
        return f"[{self.n},{self.k},{self.d}]"


class LinearCode:
    """An [n, k] code over GF(4), held by generator and/or parity-check matrix."""

    __slots__ = ("gen", "pchk", "n", "k")

    def __init__(self, gen: Mat4 | None = None, pchk: Mat4 | None = None):
        if gen is None and pchk is None:
            raise ValueError("a code needs a generator or a parity-check matrix")
        n = gen.cols if gen is not None else pchk.cols
        if n == 0:
            raise EmptyCodeError("length-0 codes are not supported")
        if gen is not None and gen.rank() != gen.rows:
            raise RankError(f"generator has rank {gen.rank()} < {gen.rows} rows")
        if pchk is not None and pchk.rank() != pchk.rows:
            raise RankError(f"parity check has rank {pchk.rank()} < {pchk.rows} rows")
        if gen is not None and pchk is not None:
            if pchk.cols != n:
                raise ValueError("generator and parity check disagree on length")
            if gen.rows + pchk.rows != n:
                raise RankError("generator and parity-check ranks do not add up to n")
            if not (gen @ pchk.transpose()).is_zero():
                raise ValueError("G H^T != 0")
        self.gen = gen
        self.pchk = pchk
        self.n = n
        self.k = gen.rows if gen is not None else n - pchk.rows

    @classmethod
    def from_generator(cls, m: Mat4) -> "LinearCode":
        return cls(gen=m)

    @classmethod
    def from_parity_check(cls, m: Mat4) -> "LinearCode":
        return cls(pchk=m)

    def complete(self) -> "LinearCode":
        """Return an equivalent code with both matrices present."""
        if self.gen is not None and self.pchk is not None:
            return self
        if self.gen is None:
            return LinearCode(gen=self.pchk.right_kernel(), pchk=self.pchk)
        return LinearCode(gen=self.gen, pchk=self.gen.right_kernel())

    def generator(self) -> Mat4:
        return self.complete().gen

    def parity_check(self) -> Mat4:
        return self.complete().pchk

    def dual(self) -> "LinearCode":
        c = self.complete()
        return LinearCode(gen=c.pchk, pchk=c.gen)

    def canonical_generator(self) -> Mat4:
        """rref of the generator: equal iff two codes have the same codewords."""
        return self.generator().row_basis()

    def same_code(self, other: "LinearCode") -> bool:
        return self.n == other.n and self.canonical_generator() == other.canonical_generator()

    def __repr__(self) -> str:
        return f"LinearCode(n={self.n}, k={self.k})"

    # -- codeword enumeration -------------------------------------------

    def codeword_chunks(self) -> Iterable[np.ndarray]:
        """Yield all 4^k codewords as uint8 arrays of at most 4^10 rows."""
        if self.k > _MAX_ENUM_K:
            raise ResourceError(f"4^{self.k} codewords exceed the enumeration guard (k <= {_MAX_ENUM_K})")
        g = self.generator().array
        k, n = self.k, self.n
        lo = max(0, k - _ENUM_CHUNK_K)
        table = np.zeros((1, n), dtype=np.uint8)
        for row in g[lo:]:
            mults = gf4.MUL_NP[:, row]
            table = (table[:, None, :] ^ mults[None, :, :]).reshape(-1, n)
        if lo == 0:
            yield table
            return
        for scalars in product(gf4.ELEMENTS, repeat=lo):
            base = np.zeros(n, dtype=np.uint8)
            for lam, row in zip(scalars, g[:lo]):
                base ^= gf4.MUL_NP[lam, row]
            yield table ^ base

    def codewords(self) -> np.ndarray:
        """All codewords as one array (k <= 10)."""
        if self.k > _ENUM_CHUNK_K:
            raise ResourceError(f"full codeword table wants k <= {_ENUM_CHUNK_K}, got {self.k}")
        return next(iter(self.codeword_chunks()))

    # -- parameters -------------------------------------------------------

    def min_distance(self, budget: int | None = None) -> int:
        """Smallest Hamming weight of a nonzero codeword (exact)."""
        if self.k == 0:
            raise UndefinedDistanceError("the zero code has no minimum distance")
        if self.k == self.n:
            return 1
        if self.k <= min(self.n - self.k, 12):
            return self._min_distance_enumerate()
        return self._min_distance_scan(budget)

    def _min_distance_enumerate(self) -> int:
        best = self.n + 1
        for chunk in self.codeword_chunks():
            w = np.count_nonzero(chunk, axis=1)
            nz = w[w > 0]
            if nz.size:
                best = min(best, int(nz.min()))
        return best

    def _min_distance_scan(self, budget: int | None = None) -> int:
        if budget is None:
            budget = scan_budget()
        h = self.parity_check()
        cols = pack_columns(h)
        n = h.cols
        spent = 0
        for t in range(1, min(n, h.rows + 1) + 1):
            cost = comb(n, t)
            if spent + cost > budget:
                raise ScanBudgetExceeded(lower_bound=t, budget=budget)
            spent += cost
            if has_dependent_columns(h, t, _packed=cols):
                return t
        raise AssertionError("unreachable: n - k + 1 columns are always dependent")

    def weight_distribution(self) -> list[int]:
        """A_0..A_n by brute-force enumeration (guarded at k <= 14)."""
        counts = np.zeros(self.n + 1, dtype=np.int64)
        for chunk in self.codeword_chunks():
            w = np.count_nonzero(chunk, axis=1)
            counts += np.bincount(w, minlength=self.n + 1)
        return [int(c) for c in counts]

    # -- derived codes ------------------------------------------------------

    def puncture(self, coords: Iterable[int]) -> "LinearCode":
        """Delete the 1-based coordinates in ``coords`` from all codewords.

        The dimension may drop below k when deleted coordinates carried
        independent information; the result reports its own dimension.
        """
        drop = _check_coordinate_set(coords, self.n)
        if len(drop) == self.n:
            raise EmptyCodeError("puncturing every coordinate leaves nothing")
        g = self.generator().delete_columns(i - 1 for i in drop)
        return LinearCode(gen=g.row_basis())

    def shorten(self, coords: Iterable[int]) -> "LinearCode":
        """Keep codewords vanishing on ``coords`` (1-based), then delete them."""
        s = _check_coordinate_set(coords, self.n)
        if len(s) == self.n:
            raise EmptyCodeError("shortening every coordinate leaves nothing")
        g = self.generator()
        if not s:
            return LinearCode(gen=g.row_basis())
        sel = g.take_columns([i - 1 for i in sorted(s)])
        # left kernel of sel = message combinations vanishing on s
        combos = sel.transpose().right_kernel()
        sub = (combos @ g).delete_columns(i - 1 for i in s)
        basis = sub.row_basis()
        if basis.rows == 0:
            raise EmptyCodeError("shortening leaves the zero code")
        return LinearCode(gen=basis)

    def is_mds(self) -> bool:
        """True iff d = n - k + 1."""
        if self.k == 0:
            return False
        return self.min_distance() == self.n - self.k + 1


def _check_coordinate_set(coords: Iterable[int], n: int) -> frozenset[int]:
    s = frozenset(int(i) for i in coords)
    bad = [i for i in s if not 1 <= i <= n]
    if bad:
        raise ValueError(f"coordinates out of range 1..{n}: {sorted(bad)}")
    return s


def has_dependent_columns(m: Mat4, t: int, _packed: list | None = None) -> bool:
    """Is some t-subset of columns of ``m`` linearly dependent?

    Depth-first over index-increasing subsets with an incremental echelon
    basis, so shared prefixes are eliminated once.  Used both by the
    column-scan route of :meth:`LinearCode.min_distance` and as the
    independent cross-check of enumerated distances.
    """
    cols = pack_columns(m) if _packed is None else _packed
    n = len(cols)
    if t > n:
        return False
    elim = Eliminator()

    def rec(start: int, depth: int) -> bool:
        remaining = t - depth
        for i in range(start, n - remaining + 1):
            if not elim.push(cols[i]):
                elim.pop()
                return True
            if remaining > 1 and rec(i + 1, depth + 1):
                elim.pop()
                return True
            elim.pop()
        return False

    return rec(0, 0)


def mds_feasible_q4(n: int, k: int) -> bool:
    """Can a quaternary [n, k] MDS code exist?

    Trivial families [n,1], [n,n-1] (n >= 2), [n,n], plus the four
    genuinely quaternary parameter pairs.
    """
    if n < 1 or not 0 < k <= n:
        raise ValueError(f"need n >= 1 and 0 < k <= n, got ({n}, {k})")
    if k == n or k == 1 or (k == n - 1 and n >= 2):
        return True
    return (n, k) in {(4, 2), (5, 2), (5, 3), (6, 3)}


def mds_weight_distribution(n: int, k: int, q: int = 4) -> list[int]:
    """Closed-form weight distribution of an [n, k] MDS code over GF(q).

    A_w = C(n,w) * sum_{j=0}^{w-d} (-1)^j C(w,j) (q^{w-d+1-j} - 1) for
    w >= d = n-k+1.  Serves as the independent oracle against brute-force
    enumeration.
    """
    d = n - k + 1
    dist = [0] * (n + 1)
    dist[0] = 1
    for w in range(d, n + 1):
        total = 0
        sign = 1
        for j in range(w - d + 1):
            total += sign * comb(w, j) * (q ** (w - d + 1 - j) - 1)
            sign = -sign
        dist[w] = comb(n, w) * total
    return dist


#: Generator of the (unique up to equivalence) quaternary [6, 3, 4] code.
HEXACODE_GEN = Mat4.from_string(
    """
    1 0 0 1 1 1
    0 1 0 1 w W
    0 0 1 1 W w
    """
)


def hexacode() -> LinearCode:
    """The [6, 3, 4] Hexacode."""
    return LinearCode(gen=HEXACODE_GEN)
