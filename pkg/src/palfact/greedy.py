"""Left- and right-greedy palindromic factorizations.

The right-greedy count strips the longest palindromic suffix until nothing
is left; with the per-position longest-palindromic-suffix array this is a
single O(n) loop.  The left-greedy count of w is the right-greedy count of
the reversal, with spans mirrored back.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .eertree import PalindromeIndex
from .pallen import pal_fast
from .streams import InfiniteWord, materialize
from .words import Word, mirror


@dataclass(frozen=True)
class GreedyDecomposition:
    """Unique greedy factorization for one side; spans are 1-based inclusive."""

    side: str  # "left" | "right"
    spans: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.spans)

    def factors(self, w: Sequence[int]) -> list[Word]:
        return [Word(tuple(w[s - 1 : e])) for s, e in self.spans]

    def to_json(self) -> dict:
        return {"side": self.side, "spans": [[s, e] for s, e in self.spans]}


def rgpal(w: Sequence[int]) -> tuple[int, GreedyDecomposition]:
    """Right-greedy palindromic factor count and its decomposition."""
    lps = PalindromeIndex(w).lps
    spans = []
    i = len(w)
    while i > 0:
        s = lps[i - 1]
        spans.append((i - s + 1, i))
        i -= s
    spans.reverse()
    return len(spans), GreedyDecomposition("right", tuple(spans))


def lgpal(w: Sequence[int]) -> tuple[int, GreedyDecomposition]:
    """Left-greedy palindromic factor count and its decomposition."""
    n = len(w)
    k, dec = rgpal(mirror(w))
    spans = tuple((n - e + 1, n - s + 1) for s, e in reversed(dec.spans))
    return k, GreedyDecomposition("left", spans)


def gap_witness(w: Sequence[int]) -> tuple[int, int, int]:
    """(minimum, left-greedy, right-greedy) factor counts of one word.

    The minimum never exceeds either greedy count; a violation would be an
    internal error, so it raises instead of returning.
    """
    p, _ = pal_fast(w)
    lg, _ = lgpal(w)
    rg, _ = rgpal(w)
    if p > min(lg, rg):
        raise RuntimeError(
            f"greedy counts ({lg}, {rg}) undercut the minimum {p} on {Word(w)}"
        )
    return p, lg, rg


@dataclass
class GreedyProfile:
    """Per-prefix greedy counts for prefixes 1..horizon of a stream.

    The left arrays are empty when the profile was built right-side only.
    """

    lgpal: list[int]
    rgpal: list[int]
    max_lgpal: list[int]
    max_rgpal: list[int]

    @property
    def horizon(self) -> int:
        return len(self.rgpal)


def _running_max(values: list[int]) -> list[int]:
    out = []
    best = 0
    for v in values:
        if v > best:
            best = v
        out.append(best)
    return out


def rgpal_profile(w: Sequence[int]) -> list[int]:
    """Right-greedy count of every prefix, in one linear pass.

    Stripping the longest palindromic suffix lands on a shorter prefix, so
    rg[i] = rg[i - lps[i]] + 1 memoizes the whole strip loop.
    """
    lps = PalindromeIndex(w).lps
    n = len(w)
    rg = [0] * (n + 1)
    for i in range(1, n + 1):
        rg[i] = rg[i - lps[i - 1]] + 1
    return rg[1:]


def lgpal_profile(w: Sequence[int]) -> list[int]:
    """Left-greedy count of every prefix.

    One index over the reversed word answers "longest palindrome starting at
    offset i and ending by m" as a capped suffix query; each prefix then runs
    its own strip loop.  Cost is the sum of the per-prefix greedy counts, so
    this is fast on streams with moderate counts and quadratic on words whose
    counts grow linearly (e.g. long random words).
    """
    n = len(w)
    ridx = PalindromeIndex(mirror(w))
    rlps = ridx.lps
    # g[i] = longest palindrome starting at 1-based offset i in the whole word
    g = [0] * (n + 2)
    for i in range(1, n + 1):
        g[i] = rlps[n - i]
    leq = ridx.longest_suffix_leq

    lg = [0] * (n + 1)
    for m in range(1, n + 1):
        cnt = 0
        i = 1
        while i <= m:
            p = g[i]
            if i + p - 1 > m:
                p = leq(n - i + 1, m - i + 1)
            i += p
            cnt += 1
        lg[m] = cnt
    return lg[1:]


def greedy_profile(stream, horizon: int, sides: str = "both") -> GreedyProfile:
    """Greedy counts for every prefix up to the horizon.

    ``sides`` is one of ``both``, ``right``, ``left``; the right side is
    guaranteed linear, the left side is documented in ``lgpal_profile``.
    """
    if sides not in ("both", "right", "left"):
        raise ValueError("sides must be 'both', 'right' or 'left'")
    w = materialize(stream, horizon) if isinstance(stream, InfiniteWord) else Word(stream)[:horizon]
    rg = rgpal_profile(w) if sides in ("both", "right") else []
    lg = lgpal_profile(w) if sides in ("both", "left") else []
    return GreedyProfile(lg, rg, _running_max(lg), _running_max(rg))
