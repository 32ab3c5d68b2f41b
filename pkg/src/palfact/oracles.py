"""Reference implementations used to cross-check the fast code paths.

Everything here works by definition-level scanning over slices and shares no
code with the eertree; that independence is the point.  Complexity is
quadratic or worse, so callers keep inputs at test scale.
"""

from __future__ import annotations

from typing import Sequence


def _as_bytes_or_tuple(w: Sequence[int]):
    t = tuple(w)
    if t and max(t) < 256:
        return bytes(t)
    return t


def brute_pal_table(w: Sequence[int]) -> list[int]:
    """Minimum palindromic factor count per prefix, by trying every cut."""
    s = _as_bytes_or_tuple(w)
    n = len(s)
    values = [0] * (n + 1)
    for i in range(1, n + 1):
        best = i
        for j in range(i):
            if values[j] + 1 <= best:
                seg = s[j:i]
                if seg == seg[::-1]:
                    best = values[j] + 1
        values[i] = best
    return values


def brute_pal_length(w: Sequence[int]) -> int:
    return brute_pal_table(w)[-1]


def brute_palindromic_spans(w: Sequence[int]) -> list[tuple[int, int]]:
    """All palindromic (start, end) spans, 1-based inclusive, by expanding
    around every center."""
    n = len(w)
    spans = []
    for center in range(n):
        i, j = center, center
        while i >= 0 and j < n and w[i] == w[j]:
            spans.append((i + 1, j + 1))
            i -= 1
            j += 1
        i, j = center, center + 1
        while i >= 0 and j < n and w[i] == w[j]:
            spans.append((i + 1, j + 1))
            i -= 1
            j += 1
    return spans


def brute_lps_array(w: Sequence[int]) -> list[int]:
    """Longest palindromic suffix length per position, from the span list."""
    n = len(w)
    lps = [0] * n
    for start, end in brute_palindromic_spans(w):
        length = end - start + 1
        if length > lps[end - 1]:
            lps[end - 1] = length
    return lps


def brute_distinct_palindromes(w: Sequence[int]) -> set:
    """Set of distinct nonempty palindromic factors."""
    s = tuple(w)
    out = set()
    for i in range(len(s)):
        for j in range(i + 1, len(s) + 1):
            seg = s[i:j]
            if seg == seg[::-1]:
                out.add(seg)
    return out


def brute_lgpal(w: Sequence[int]) -> int:
    """Left-greedy factor count by scanning prefixes from the long end."""
    s = _as_bytes_or_tuple(w)
    count = 0
    i = 0
    n = len(s)
    while i < n:
        for ell in range(n - i, 0, -1):
            seg = s[i : i + ell]
            if seg == seg[::-1]:
                i += ell
                break
        count += 1
    return count


def brute_rgpal(w: Sequence[int]) -> int:
    s = _as_bytes_or_tuple(w)
    return brute_lgpal(s[::-1])


def brute_palindromic_closure(w: Sequence[int]) -> tuple[int, ...]:
    """Shortest palindrome with w as a prefix, by scanning candidate lengths.

    A palindrome of length T < 2n with prefix w is forced to equal
    w + reverse(w[:T-n]), so each length has exactly one candidate.
    """
    t = tuple(w)
    n = len(t)
    for total in range(n, 2 * n):
        cand = t + tuple(reversed(t[: total - n]))
        if cand == cand[::-1]:
            return cand
    return t + tuple(reversed(t[:-1]))


def brute_palindromic_prefix_lengths(w: Sequence[int]) -> list[int]:
    s = tuple(w)
    return [ell for ell in range(1, len(s) + 1) if s[:ell] == s[:ell][::-1]]
