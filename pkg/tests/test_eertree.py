import random

import pytest

from palfact import (
    PalindromeIndex,
    Periodic,
    Word,
    closure_power_stream,
    fibonacci_stream,
    gap_sequence,
    longest_palindromic_prefix,
    palindromic_prefixes,
    product_of_two_palindromes,
    word_u_stream,
)
from palfact.oracles import (
    brute_distinct_palindromes,
    brute_lps_array,
    brute_palindromic_prefix_lengths,
    brute_palindromic_spans,
)
from palfact.words import is_palindrome, is_primitive


def all_binary_words(max_len):
    for length in range(max_len + 1):
        for bits in range(2**length):
            yield tuple((bits >> i) & 1 for i in range(length))


def random_words(seed, count, max_len, alphabet):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(0, max_len)
        yield tuple(rng.randrange(alphabet) for _ in range(n))


def test_lps_examples():
    # derived by scanning all suffixes per position
    assert PalindromeIndex(Word("abaab")).lps == [1, 1, 3, 2, 4]
    assert PalindromeIndex(Word("aaaa")).lps == [1, 2, 3, 4]
    assert PalindromeIndex(Word()).lps == []


def test_lps_exhaustive_binary():
    for w in all_binary_words(14):
        assert PalindromeIndex(w).lps == brute_lps_array(w)


def test_lps_random_words():
    for w in random_words(101, 1000, 500, 4):
        assert PalindromeIndex(w).lps == brute_lps_array(w)


def test_node_count_equals_distinct_palindromes():
    for w in all_binary_words(14):
        assert PalindromeIndex(w).node_count() == len(brute_distinct_palindromes(w))


def test_incremental_append_matches_batch():
    rng = random.Random(5)
    for _ in range(300):
        n = rng.randint(1, 120)
        w = tuple(rng.randrange(3) for _ in range(n))
        grown = PalindromeIndex()
        for c in w:
            grown.append(c)
        batch = PalindromeIndex(w)
        assert grown.lps == batch.lps
        assert grown.node_count() == batch.node_count()
        assert list(grown.suffix_palindrome_lengths(n)) == list(
            batch.suffix_palindrome_lengths(n)
        )


def test_longest_suffix_leq_against_spans():
    rng = random.Random(17)
    for _ in range(200):
        n = rng.randint(1, 80)
        w = tuple(rng.randrange(2) for _ in range(n))
        idx = PalindromeIndex(w)
        spans = brute_palindromic_spans(w)
        for pos in range(1, n + 1):
            lengths = [e - s + 1 for s, e in spans if e == pos]
            for cap in range(0, pos + 2):
                want = max((x for x in lengths if x <= cap), default=0)
                assert idx.longest_suffix_leq(pos, cap) == want


def test_longest_palindromic_prefix_examples():
    assert longest_palindromic_prefix(Word("abaa")) == 3
    assert longest_palindromic_prefix(Word("abaab")) == 3
    assert longest_palindromic_prefix(Word("aba")) == 3
    with pytest.raises(ValueError):
        longest_palindromic_prefix(Word())


def test_palindromic_prefixes_periodic():
    seq = palindromic_prefixes(Periodic(Word("ab")), 7)
    assert seq.lengths == (1, 3, 5, 7)


def test_palindromic_prefixes_closure_stream():
    seq = palindromic_prefixes(closure_power_stream(), 13)
    assert {3, 6, 13} <= set(seq.lengths)
    assert seq.lengths == (1, 3, 6, 13)


def test_palindromic_prefixes_word_u():
    seq = palindromic_prefixes(word_u_stream(), 1000)
    assert seq.lengths == (1, 2)


def test_palindromic_prefixes_complete():
    for w in all_binary_words(12):
        got = palindromic_prefixes(Word(w), len(w)).lengths
        assert list(got) == brute_palindromic_prefix_lengths(w)


def test_gap_sequence_examples():
    gs = gap_sequence([1, 3, 5, 7])
    assert gs.gaps == (2, 2, 2)
    assert gs.monotone
    assert gs.stabilized_gap() == 2
    gs = gap_sequence([1, 3, 6, 13, 28])
    assert gs.gaps == (2, 3, 7, 15)
    assert gs.monotone
    assert gs.stabilized_gap() is None
    with pytest.raises(ValueError):
        gap_sequence([5])


def test_gap_monotonicity_on_streams():
    streams = [
        Periodic(Word("ab")),
        Periodic(Word("abba")),
        Periodic(Word("aba")),
        fibonacci_stream(),
        closure_power_stream(),
    ]
    for stream in streams:
        seq = palindromic_prefixes(stream, 10**4)
        assert len(seq) >= 3
        assert gap_sequence(seq).monotone


def test_bounded_gaps_for_periodic_streams():
    gs = gap_sequence(palindromic_prefixes(Periodic(Word("abba")), 2000))
    assert gs.stabilized_gap() == 4


def test_product_of_two_palindromes_examples():
    assert product_of_two_palindromes(Word("abba")) == 4
    assert product_of_two_palindromes(Word("abaab")) == 1
    assert product_of_two_palindromes(Word("abc")) is None
    with pytest.raises(ValueError):
        product_of_two_palindromes(Word())


def test_product_of_two_palindromes_brute_equivalence():
    for w in all_binary_words(11):
        if not w:
            continue
        got = product_of_two_palindromes(w)
        splits = [
            p
            for p in range(len(w) + 1)
            if is_palindrome(w[:p]) and is_palindrome(w[p:])
        ]
        if splits:
            assert got in splits
        else:
            assert got is None


def test_split_decides_palindrome_richness_of_periodic_stream():
    # For a primitive word, a two-palindrome split is equivalent to its
    # periodic stream containing many palindromic factors longer than the
    # period (finite proxy: >= 20 within 50 periods).
    for w in all_binary_words(10):
        if not w or not is_primitive(w):
            continue
        split = product_of_two_palindromes(w)
        idx = PalindromeIndex(tuple(w) * 50)
        rich = (
            sum(1 for ln in idx.palindrome_lengths() if ln > len(w)) >= 20
        )
        assert (split is not None) == rich
