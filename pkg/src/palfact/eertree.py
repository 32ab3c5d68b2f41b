"""Palindromic tree (eertree) over integer-symbol sequences.

One node per distinct nonempty palindromic factor, plus two roots: node 0
(imaginary, length -1) and node 1 (empty, length 0).  Each node carries a
suffix link (its longest proper palindromic suffix) and a series link that
jumps past the maximal run of suffix-link ancestors sharing the same
``length - link_length`` difference.  Palindromic suffixes of any prefix
therefore split into O(log n) arithmetic progressions, which is what makes
the minimum-factorization recurrence and the capped suffix query cheap.

The structure is single-writer: ``append``/``extend`` grow it, concurrent
reads of already-indexed positions are safe between writes.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence


class PalindromeIndex:
    """Eertree plus per-position arrays for one growing word.

    ``lps[i]`` is the length of the longest palindromic suffix of the prefix
    of length ``i + 1`` (so ``lps`` is 0-indexed by position while reports
    use 1-based prefix lengths).  With ``track_min=True`` the index also
    maintains ``min_factors``, where ``min_factors[i]`` is the minimum number
    of nonempty palindromes concatenating to the length-``i`` prefix.
    """

    __slots__ = (
        "_word",
        "_len",
        "_link",
        "_diff",
        "_qlink",
        "_trans",
        "_node_at",
        "_lps",
        "_last",
        "_track_min",
        "_min_dp",
        "_series_ans",
    )

    def __init__(self, symbols: Sequence[int] = (), track_min: bool = False):
        self._word: list[int] = []
        self._len = [-1, 0]
        self._link = [0, 0]
        self._diff = [0, 0]
        self._qlink = [0, 0]
        self._trans: list[dict] = [{}, {}]
        self._node_at: list[int] = []
        self._lps: list[int] = []
        self._last = 1
        self._track_min = track_min
        self._min_dp = [0] if track_min else None
        self._series_ans = [0, 0] if track_min else None
        if symbols:
            self.extend(symbols)

    def __len__(self) -> int:
        return len(self._word)

    @property
    def word(self) -> list[int]:
        """Indexed symbols. Treat as read-only."""
        return self._word

    @property
    def lps(self) -> list[int]:
        """Longest palindromic suffix length per position. Read-only."""
        return self._lps

    @property
    def min_factors(self) -> list[int]:
        """Minimum palindromic factor count per prefix length (index 0 is 0)."""
        if not self._track_min:
            raise ValueError("index was built without track_min=True")
        return self._min_dp

    def node_count(self) -> int:
        """Number of distinct nonempty palindromic factors indexed so far."""
        return len(self._len) - 2

    def palindrome_lengths(self) -> list[int]:
        """Lengths of all distinct nonempty palindromic factors."""
        return self._len[2:]

    def append(self, c: int) -> None:
        self.extend((c,))

    def extend(self, symbols: Iterable[int]) -> None:
        # Hot loop: locals for every array, no helper calls per symbol.
        word = self._word
        lens = self._len
        link = self._link
        diff = self._diff
        qlink = self._qlink
        trans = self._trans
        node_at = self._node_at
        lps = self._lps
        last = self._last
        track = self._track_min
        dp = self._min_dp
        sans = self._series_ans
        n = len(word)
        for c in symbols:
            word.append(c)
            v = last
            while True:
                j = n - lens[v] - 1
                if j >= 0 and word[j] == c:
                    break
                v = link[v]
            nxt = trans[v].get(c)
            if nxt is None:
                if lens[v] == -1:
                    lk = 1
                else:
                    u = link[v]
                    while True:
                        j = n - lens[u] - 1
                        if j >= 0 and word[j] == c:
                            break
                        u = link[u]
                    lk = trans[u][c]
                nxt = len(lens)
                newlen = lens[v] + 2
                lens.append(newlen)
                link.append(lk)
                d = newlen - lens[lk]
                diff.append(d)
                qlink.append(lk if d != diff[lk] else qlink[lk])
                trans[v][c] = nxt
                trans.append({})
                if track:
                    sans.append(0)
            last = nxt
            n += 1
            node_at.append(nxt)
            lps.append(lens[nxt])
            if track:
                best = n
                vv = nxt
                while lens[vv] > 0:
                    cand = dp[n - lens[qlink[vv]] - diff[vv]]
                    lv = link[vv]
                    if diff[vv] == diff[lv]:
                        alt = sans[lv]
                        if alt < cand:
                            cand = alt
                    sans[vv] = cand
                    if cand < best:
                        best = cand
                    vv = qlink[vv]
                dp.append(best + 1)
        self._last = last

    def is_full_palindrome(self, prefix_len: int) -> bool:
        """Whether the prefix of the given length is itself a palindrome."""
        if prefix_len == 0:
            return True
        return self._lps[prefix_len - 1] == prefix_len

    def suffix_palindrome_lengths(self, prefix_len: int) -> Iterator[int]:
        """All palindromic suffix lengths of the given prefix, decreasing."""
        lens = self._len
        link = self._link
        v = self._node_at[prefix_len - 1]
        while lens[v] > 0:
            yield lens[v]
            v = link[v]

    def longest_suffix_leq(self, prefix_len: int, cap: int) -> int:
        """Longest palindromic suffix of the prefix with length <= cap.

        Walks series links, so the cost is the number of distinct
        progressions rather than the number of palindromic suffixes.
        """
        if prefix_len <= 0 or cap <= 0:
            return 0
        lens = self._len
        diff = self._diff
        qlink = self._qlink
        v = self._node_at[prefix_len - 1]
        while True:
            plen = lens[v]
            if plen <= cap:
                return plen if plen > 0 else 0
            q = qlink[v]
            d = diff[v]
            shortest = lens[q] + d
            if shortest > cap:
                v = q
            else:
                k = (plen - cap + d - 1) // d
                return plen - k * d


class SharedEertree:
    """Eertree nodes shared across the branches of a backtracking search.

    A node is identified by its palindrome's symbol content, so lengths,
    suffix links and transitions computed while exploring one branch remain
    valid on every other branch over the same alphabet.  The caller owns the
    per-branch state (the word itself and the node per position).
    """

    __slots__ = ("lens", "link", "trans")

    def __init__(self):
        self.lens = [-1, 0]
        self.link = [0, 0]
        self.trans: list[dict] = [{}, {}]

    def advance(self, word: Sequence[int], last: int) -> int:
        """Node of the longest palindromic suffix after the caller appended
        the final symbol of ``word``."""
        lens = self.lens
        link = self.link
        trans = self.trans
        pos = len(word) - 1
        c = word[pos]
        v = last
        while True:
            j = pos - lens[v] - 1
            if j >= 0 and word[j] == c:
                break
            v = link[v]
        nxt = trans[v].get(c)
        if nxt is None:
            if lens[v] == -1:
                lk = 1
            else:
                u = link[v]
                while True:
                    j = pos - lens[u] - 1
                    if j >= 0 and word[j] == c:
                        break
                    u = link[u]
                lk = trans[u][c]
            nxt = len(lens)
            lens.append(lens[v] + 2)
            link.append(lk)
            trans[v][c] = nxt
            trans.append({})
        return nxt

    def min_over_suffixes(self, node: int, length: int, dp: Sequence[int]) -> int:
        """min(dp[length - s]) over all palindromic suffix lengths s at the
        position represented by ``node``."""
        best = length
        lens = self.lens
        link = self.link
        v = node
        while lens[v] > 0:
            c = dp[length - lens[v]]
            if c < best:
                best = c
            v = link[v]
        return best


def longest_palindromic_suffix(w: Sequence[int]) -> int:
    """Length of the longest palindromic suffix of a nonempty word."""
    if not w:
        raise ValueError("empty word has no palindromic suffix")
    return PalindromeIndex(w).lps[-1]


def longest_palindromic_prefix(w: Sequence[int]) -> int:
    """Length of the longest palindromic prefix of a nonempty word.

    Computed as the longest palindromic suffix of the reversal.
    """
    if not w:
        raise ValueError("empty word has no palindromic prefix")
    return PalindromeIndex(list(reversed(w))).lps[-1]
