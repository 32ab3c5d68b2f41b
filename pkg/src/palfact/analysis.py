"""Bounded-prefix analysis: reachable sets, bound reports, next-palindrome
enumeration over the binary alphabet, and closed-form classification of
streams whose prefixes stay within two palindromic factors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .eertree import PalindromeIndex, SharedEertree
from .engine import palindromic_prefixes
from .errors import AmbiguousHorizon
from .pallen import _palindromic_spans_by_start, pal_dp
from .streams import InfiniteWord, materialize, spec_of
from .words import Word


def reachable_sets(stream, k_max: int, horizon: int) -> list[set[int]]:
    """Endpoint sets I_0..I_k_max, where I_k holds the prefix lengths
    decomposable into exactly k nonempty palindromes.

    I_0 = {0}; I_k extends each endpoint of I_{k-1} by one palindromic
    factor.  The least k containing n must agree with the minimum factor
    count of the length-n prefix; a mismatch raises.
    """
    if k_max < 0:
        raise ValueError("k_max must be >= 0")
    w = materialize(stream, horizon) if isinstance(stream, InfiniteWord) else Word(stream)[:horizon]
    n = len(w)
    by_start = _palindromic_spans_by_start(w)
    sets: list[set[int]] = [{0}]
    for _ in range(k_max):
        frontier = set()
        for j in sets[-1]:
            if j < n:
                frontier.update(by_start[j + 1])
        sets.append(frontier)
    dp = PalindromeIndex(w, track_min=True).min_factors
    for length in range(1, n + 1):
        mink = next((k for k in range(k_max + 1) if length in sets[k]), None)
        if dp[length] <= k_max:
            if mink != dp[length]:
                raise RuntimeError(
                    f"reachable-set minimum {mink} disagrees with factor count "
                    f"{dp[length]} at prefix length {length}"
                )
        elif mink is not None:
            raise RuntimeError(
                f"prefix length {length} reachable with {mink} factors but the "
                f"minimum is {dp[length]}"
            )
    return sets


def _windowed_factor_max(w: Sequence[int], window: int) -> int:
    """Max factor count over all factors of length <= window ending in w.

    Windows with identical content are computed once, which collapses the
    scan for periodic streams.
    """
    t = tuple(w)
    n = len(t)
    best = 0
    seen = set()
    for i in range(n):
        chunk = t[i : i + window]
        if chunk in seen:
            continue
        seen.add(chunk)
        dp = PalindromeIndex(chunk, track_min=True).min_factors
        m = max(dp[1:], default=0)
        if m > best:
            best = m
    return best


@dataclass
class BoundReport:
    """Finite-horizon evidence about prefix/factor factor-count bounds.

    ``factor_max`` ranges only over factors of length <= ``factor_window``,
    so it is evidence, never a decision procedure.
    """

    word_spec: str
    horizon: int
    factor_window: int
    prefix_max: int
    factor_max: int
    verdicts: dict[str, str] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "word": self.word_spec,
            "horizon": self.horizon,
            "factor_window": self.factor_window,
            "prefix_max": self.prefix_max,
            "factor_max": self.factor_max,
            "verdicts": dict(self.verdicts),
        }


def bound_report(stream, horizon: int, factor_window: int = 100) -> BoundReport:
    """Prefix and windowed-factor maxima of the minimum factor count."""
    if factor_window > horizon:
        raise ValueError("factor_window must not exceed the horizon")
    w = materialize(stream, horizon) if isinstance(stream, InfiniteWord) else Word(stream)[:horizon]
    dp = PalindromeIndex(w, track_min=True).min_factors
    prefix_max = max(dp[1:], default=0)
    factor_max = _windowed_factor_max(w, factor_window)
    verdicts: dict[str, str] = {}

    pp = palindromic_prefixes(w, len(w))
    if prefix_max <= 2 and len(pp) >= 3:
        verdicts["bounded_by_2_implies_binary"] = (
            "pass" if len(set(w)) <= 2 else "fail"
        )
    else:
        verdicts["bounded_by_2_implies_binary"] = "inapplicable"
    if len(pp) >= 3:
        gaps = [b - a for a, b in zip(pp.lengths, pp.lengths[1:])]
        verdicts["prefix_gap_monotone"] = (
            "pass" if all(x <= y for x, y in zip(gaps, gaps[1:])) else "fail"
        )
    else:
        verdicts["prefix_gap_monotone"] = "inapplicable"
    return BoundReport(spec_of(stream), len(w), factor_window, prefix_max, factor_max, verdicts)


def alphabet_bound_check(stream, horizon: int) -> str:
    """If every prefix fits in two palindromic factors and the stream has at
    least three palindromic prefixes, its alphabet must be binary."""
    w = materialize(stream, horizon) if isinstance(stream, InfiniteWord) else Word(stream)[:horizon]
    dp = PalindromeIndex(w, track_min=True).min_factors
    prefix_max = max(dp[1:], default=0)
    pp = palindromic_prefixes(w, len(w))
    if prefix_max > 2 or len(pp) < 3:
        return "inapplicable"
    return "pass" if len(set(w)) <= 2 else "fail"


# --------------------------------------------------------------------------
# Next-palindrome enumeration over {a, b}
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class NextSet:
    """Palindromes properly extending ``base`` such that every proper
    palindromic prefix is a prefix of ``base`` and every prefix decomposes
    into at most two palindromes.

    ``open_branches`` lists prefixes still extendable at ``max_len``; an
    empty result is only conclusive when it is empty as well.
    """

    base: Word
    max_len: int
    palindromes: tuple[Word, ...]
    open_branches: tuple[Word, ...]

    def __iter__(self):
        return iter(self.palindromes)

    def __len__(self):
        return len(self.palindromes)


def enumerate_next(u: Sequence[int], max_len: int) -> NextSet:
    """Exhaustive search for the palindromes extending ``u`` (see NextSet).

    Two closure rules let unary tails terminate instead of running to the
    cap, so that genuinely empty results come back with zero open branches:

    * run-domination: at x = y c^m with the run longer than every c-run of
      the base, no completion x c^t can be a palindrome, and the sole extra
      palindromic suffix of any x c^j d is d c^(m+j) d; when y minus its
      final symbol needs at least two factors, every such side branch needs
      three, so the whole tail is barren.
    * spine stabilization: once the run exceeds the base length plus all the
      room left below the cap, palindromic suffixes of any continuation
      anchor at run-independent positions, so the side subtree repeats
      verbatim at every deeper run length; if one side subtree is fully
      explored with no member and no open branch, the tail is closed.
    """
    base = Word(u)
    if not base:
        raise ValueError("the base word must be nonempty")
    if max_len < len(base):
        raise ValueError("max_len must be at least the base length")
    if any(s not in (0, 1) for s in base):
        raise ValueError("next-set enumeration is defined over the binary alphabet")

    _, table = pal_dp(base)
    if any(v > 2 for v in table.values[1:]):
        return NextSet(base, max_len, (), ())

    tree = SharedEertree()
    word: list[int] = []
    nodes: list[int] = []
    dp = [0]
    runs: list[tuple[int, int, int]] = []  # (final run, max a-run of base, max b-run of base)
    last = 1
    for c in base:
        word.append(c)
        last = tree.advance(word, last)
        nodes.append(last)
        dp.append(tree.min_over_suffixes(last, len(word), dp) + 1)
        if len(word) == 1:
            runs.append((1, 0, 0))
        else:
            r, m0, m1 = runs[-1]
            if word[-2] == c:
                runs.append((r + 1, m0, m1))
            else:
                prev = word[-2]
                if prev == 0:
                    runs.append((1, max(m0, r), m1))
                else:
                    runs.append((1, m0, max(m1, r)))

    members: list[Word] = []
    opens: list[Word] = []
    base_len = len(base)

    def leading_run(c: int) -> int:
        if word[0] != c:
            return 0
        r = 0
        for s in word:
            if s != c:
                break
            r += 1
        return r

    def visit(c: int) -> None:
        word.append(c)
        node = tree.advance(word, nodes[-1])
        nodes.append(node)
        length = len(word)
        dp.append(tree.min_over_suffixes(node, length, dp) + 1)
        r, m0, m1 = runs[-1]
        if word[-2] == c:
            runs.append((r + 1, m0, m1))
        elif word[-2] == 0:
            runs.append((1, max(m0, r), m1))
        else:
            runs.append((1, m0, max(m1, r)))
        try:
            if dp[length] > 2:
                return
            if tree.lens[node] == length:
                if length > base_len:
                    members.append(Word(word))
                return
            if length == max_len:
                opens.append(Word(word))
                return
            explore()
        finally:
            word.pop()
            nodes.pop()
            dp.pop()
            runs.pop()

    def explore() -> None:
        length = len(word)
        run, m0, m1 = runs[-1]
        c_run = word[-1]
        d = 1 - c_run
        skip_spine = False
        if dp[length] == 2:
            y_len = length - run
            if y_len >= 1:
                max_c_in_base = m0 if c_run == 0 else m1
                if (
                    run > max_c_in_base
                    and run >= leading_run(c_run)
                    and dp[y_len - 1] >= 2
                ):
                    skip_spine = True
        before = (len(members), len(opens))
        visit(d)
        if not skip_spine and dp[length] == 2:
            y_len = length - run
            if run > y_len + (max_len - length):
                if (len(members), len(opens)) == before:
                    skip_spine = True
        if not skip_spine:
            visit(c_run)

    explore()
    members.sort(key=lambda w: (len(w), w))
    opens.sort(key=lambda w: (len(w), w))
    return NextSet(base, max_len, tuple(members), tuple(opens))


def validate_next_member(u: Sequence[int], pi: Sequence[int]) -> bool:
    """Re-check the three membership conditions directly, independently of
    the enumeration's pruning."""
    from .words import is_palindrome

    base = tuple(u)
    cand = tuple(pi)
    if not is_palindrome(cand):
        return False
    if len(cand) <= len(base) or cand[: len(base)] != base:
        return False
    for ell in range(1, len(cand)):
        if is_palindrome(cand[:ell]) and ell > len(base):
            return False
    _, table = pal_dp(cand)
    return all(v <= 2 for v in table.values[1:])


# --------------------------------------------------------------------------
# Closed forms of the nine next-set families
# --------------------------------------------------------------------------

_A, _B = 0, 1


def _w(*parts) -> Word:
    out = []
    for p in parts:
        out.extend(p)
    return Word(out)


def _rep(block, k):
    return tuple(block) * k


@dataclass(frozen=True)
class ItemVerdict:
    item: int
    params: dict
    base: Word
    expected: tuple[Word, ...]
    observed: tuple[Word, ...]
    open_count: int
    status: str  # "pass" | "fail"
    counterexample: Optional[str] = None

    def to_json(self) -> dict:
        return {
            "item": self.item,
            "params": dict(self.params),
            "base": str(self.base),
            "expected": [str(w) for w in self.expected],
            "observed": [str(w) for w in self.observed],
            "open_branches": self.open_count,
            "status": self.status,
            **({"counterexample": self.counterexample} if self.counterexample else {}),
        }


def _family_members(item: int, i: int, j: int, k: int, alpha: int, cap: int) -> list[Word]:
    a, b = (_A,), (_B,)
    out: list[Word] = []
    if item == 1:
        jj = 1
        while i + jj + i <= cap:
            out.append(_w(a * i, b * jj, a * i))
            jj += 1
        for j2 in range(1, i):
            kk = 1
            while i + kk * (1 + j2) + 1 + i <= cap:
                out.append(_w(a * i, _rep(b + a * j2, kk), b, a * i))
                kk += 1
    elif item in (2, 3, 5):
        pass
    elif item == 4:
        out.append(_w(a * i, _rep(b * j + a * i, k + 1)))
    elif item == 6:
        jj = 1
        while i + 1 + i + jj + 1 + i <= cap:
            out.append(_w(a * i, b, a * (i + jj), b, a * i))
            jj += 1
    elif item == 7:
        out.append(_w(a * i, _rep(b + a * (i + j), k + 1), b, a * i))
    elif item == 8:
        out.append(_w(_rep(a + _rep(b + a, k), 2)))
    elif item == 9:
        out.append(_w(_rep(a + _rep(b + a, k), alpha + 1)))
    return [w for w in out if len(w) <= cap]


def _item_base(item: int, i: int, j: int, k: int, alpha: int) -> Word:
    a, b = (_A,), (_B,)
    if item == 1:
        return _w(a * i, b)
    if item == 2:
        return _w(a * i, _rep(b + a * j, k), b, a * i)
    if item == 3:
        return _w(a * i, _rep(b * j + a * i, k), a)
    if item == 4:
        return _w(a * i, _rep(b * j + a * i, k), b)
    if item == 5:
        return _w(a * i, _rep(b + a * i, k), a)
    if item == 6:
        return _w(a * i, b, a * (i + 1))
    if item == 7:
        return _w(a * i, _rep(b + a * (i + j), k), b, a * i)
    if item == 8:
        return _w(a, _rep(b + a, k), a)
    if item == 9:
        return _w(_rep(a + _rep(b + a, k), alpha))
    raise ValueError(f"unknown item {item}")


EMPTY_ITEMS = frozenset({2, 3, 5})


def _item_grid(item: int, i_max: int, j_max: int, k_max: int):
    if item == 1:
        for i in range(1, i_max + 1):
            yield {"i": i}
    elif item == 2:
        for i in range(2, i_max + 1):
            for j in range(1, min(j_max, i - 1) + 1):
                for k in range(1, k_max + 1):
                    yield {"i": i, "j": j, "k": k}
    elif item == 3:
        for i in range(1, i_max + 1):
            for j in range(2, j_max + 1):
                for k in range(1, k_max + 1):
                    yield {"i": i, "j": j, "k": k}
    elif item == 4:
        for i in range(1, i_max + 1):
            for j in range(1, j_max + 1):
                for k in range(1, k_max + 1):
                    yield {"i": i, "j": j, "k": k}
    elif item == 5:
        for i in range(2, i_max + 1):
            for k in range(2, k_max + 1):
                yield {"i": i, "k": k}
    elif item == 6:
        for i in range(1, i_max + 1):
            yield {"i": i}
    elif item == 7:
        for i in range(1, i_max + 1):
            for j in range(1, j_max + 1):
                for k in range(1, k_max + 1):
                    yield {"i": i, "j": j, "k": k}
    elif item == 8:
        for k in range(2, k_max + 1):
            yield {"k": k}
    elif item == 9:
        for k in range(2, k_max + 1):
            for alpha in range(2, k_max + 1):
                yield {"k": k, "alpha": alpha}


def verify_next_closed_forms(
    i_max: int, j_max: int, k_max: int, len_cap: int
) -> list[ItemVerdict]:
    """Compare the next-set enumeration with the nine closed forms over the
    given parameter grid.

    Families with unboundedly many members are compared up to ``len_cap``;
    singleton families must fit under the cap (otherwise the parameters are
    rejected).  Items whose closed form is the empty set additionally demand
    zero open branches, i.e. genuine exhaustion.
    """
    verdicts: list[ItemVerdict] = []
    for item in range(1, 10):
        for params in _item_grid(item, i_max, j_max, k_max):
            i = params.get("i", 1)
            j = params.get("j", 1)
            k = params.get("k", 1)
            alpha = params.get("alpha", 2)
            base = _item_base(item, i, j, k, alpha)
            if len(base) >= len_cap:
                raise ValueError(
                    f"len_cap {len_cap} too small for item {item} at {params}"
                )
            expected = _family_members(item, i, j, k, alpha, len_cap)
            if item in (4, 7, 8, 9) and not expected:
                raise ValueError(
                    f"len_cap {len_cap} does not cover the predicted member of "
                    f"item {item} at {params}"
                )
            ns = enumerate_next(base, len_cap)
            observed = list(ns.palindromes)
            ok = sorted(observed) == sorted(expected)
            counterexample = None
            if not ok:
                extra = sorted(set(observed) - set(expected))
                missing = sorted(set(expected) - set(observed))
                if extra:
                    counterexample = f"unexpected member {extra[0]}"
                elif missing:
                    counterexample = f"missing member {missing[0]}"
            if ok and item in EMPTY_ITEMS and ns.open_branches:
                ok = False
                counterexample = (
                    f"open branch {ns.open_branches[0]} for an empty closed form"
                )
            verdicts.append(
                ItemVerdict(
                    item=item,
                    params=params,
                    base=base,
                    expected=tuple(expected),
                    observed=tuple(observed),
                    open_count=len(ns.open_branches),
                    status="pass" if ok else "fail",
                    counterexample=counterexample,
                )
            )
    return verdicts


# --------------------------------------------------------------------------
# Closed-form classification of two-factor-bounded streams
# --------------------------------------------------------------------------


@dataclass
class Classification:
    """Which closed family (if any) matches the observed periodic structure.

    ``family`` uses shape strings: ``a^w``, ``(a^i b a^j)^w``, ``(a^i b^j)^w``
    or ``((ab)^i a)^w`` with letter-renaming implied by the stream itself.
    ``bplf2`` carries the isolated-letter form parameters (i, j) with
    0 <= i <= j when every factor of the stream fits in two palindromic
    factors by shape.
    """

    word_spec: str
    horizon: int
    periodic: bool
    period: Optional[int]
    family: Optional[str]
    params: dict
    bplf2: Optional[tuple[int, int]]
    report: BoundReport

    def to_json(self) -> dict:
        return {
            "word": self.word_spec,
            "horizon": self.horizon,
            "periodic": self.periodic,
            "period": self.period,
            "family": self.family,
            "params": dict(self.params),
            "bplf2": list(self.bplf2) if self.bplf2 else None,
            "report": self.report.to_json(),
        }


def _minimal_full_period(w: Sequence[int]) -> int:
    n = len(w)
    # failure function of the prefix gives the smallest full-prefix period
    fail = [0] * n
    k = 0
    for i in range(1, n):
        while k and w[i] != w[k]:
            k = fail[k - 1]
        if w[i] == w[k]:
            k += 1
        fail[i] = k
    return n - fail[-1] if n else 0


def classify_bound2(stream, horizon: int, factor_window: int = 100) -> Classification:
    """Match the stream's certified period block against the closed families
    of words whose prefixes (or factors) need at most two palindromic
    factors.

    The period must repeat at least three times within the horizon to count
    as certified; two repetitions raise ``AmbiguousHorizon``.  A family match
    is cross-validated against the bound report: a matched family with a
    prefix maximum above 2, or an isolated-letter form with a windowed factor
    maximum above 2, raises immediately.
    """
    w = materialize(stream, horizon) if isinstance(stream, InfiniteWord) else Word(stream)[:horizon]
    n = len(w)
    if n < 3:
        raise AmbiguousHorizon("horizon too short to classify anything")
    report = bound_report(w, n, min(factor_window, n))
    p = _minimal_full_period(w)
    if 3 * p > n:
        if 2 * p <= n:
            raise AmbiguousHorizon(
                f"period {p} repeats only twice within horizon {n}; "
                f"use a horizon of at least {3 * p}"
            )
        return Classification(spec_of(stream), n, False, None, None, {}, None, report)

    v = w[:p]
    letters = sorted(set(v))
    family = None
    params: dict = {}
    bplf2 = None
    if len(letters) == 1:
        family = "a^w"
        params = {"a": letters[0]}
    elif len(letters) == 2:
        x = v[0]
        y = letters[0] if letters[0] != x else letters[1]
        count_x = sum(1 for s in v if s == x)
        count_y = p - count_x
        lead = 0
        for s in v:
            if s != x:
                break
            lead += 1
        if count_y == 1:
            # v = x^i y x^j
            i = lead
            j = p - i - 1
            if j >= 1:
                family = "(a^i b a^j)^w"
                params = {"a": x, "b": y, "i": i, "j": j}
            else:
                family = "(a^i b^j)^w"
                params = {"a": x, "b": y, "i": i, "j": 1}
            bplf2 = (i, p - 1)
        elif count_x == 1:
            # v = x y^{p-1}: the initial letter is the isolated one
            family = "(a^i b^j)^w"
            params = {"a": x, "b": y, "i": 1, "j": p - 1}
            bplf2 = (0, p - 1)
        else:
            runs = []
            cur, cnt = v[0], 0
            for s in v:
                if s == cur:
                    cnt += 1
                else:
                    runs.append(cnt)
                    cur, cnt = s, 1
            runs.append(cnt)
            if len(runs) == 2:
                family = "(a^i b^j)^w"
                params = {"a": x, "b": y, "i": runs[0], "j": runs[1]}
            elif all(r == 1 for r in runs) and p % 2 == 1 and p >= 5:
                family = "((ab)^i a)^w"
                params = {"a": x, "b": y, "i": (p - 1) // 2}

    if family is not None and report.prefix_max > 2:
        raise RuntimeError(
            f"family {family} matched but the prefix maximum is "
            f"{report.prefix_max} at horizon {n}"
        )
    if bplf2 is not None and report.factor_max > 2:
        raise RuntimeError(
            f"isolated-letter form matched but the windowed factor maximum is "
            f"{report.factor_max} at horizon {n}"
        )
    return Classification(spec_of(stream), n, True, p, family, params, bplf2, report)
