import random

import pytest

from palfact import (
    Decomposition,
    Periodic,
    Word,
    fibonacci_stream,
    first_attainment,
    is_palindrome,
    minimal_factorizations,
    mirror,
    pal_dp,
    pal_fast,
)
from palfact.oracles import brute_pal_table


def all_binary_words(max_len):
    for length in range(max_len + 1):
        for bits in range(2**length):
            yield tuple((bits >> i) & 1 for i in range(length))


def test_known_values():
    assert pal_dp(Word("abaab"))[0] == 2
    assert pal_dp(Word("aabaab"))[0] == 2
    assert pal_dp(Word("aabaaba"))[0] == 2
    assert pal_dp(Word())[0] == 0
    assert pal_dp(Word("a"))[0] == 1
    assert pal_fast(Word("abaab"))[0] == 2


def test_table_base_and_indexing():
    _, table = pal_fast(Word("abaab"))
    assert table[0] == 0
    assert list(table.values) == [0, 1, 2, 1, 2, 2]
    assert len(table) == 5


def test_fast_equals_dp_equals_brute_exhaustive():
    for w in all_binary_words(14):
        brute = brute_pal_table(w)
        assert list(pal_dp(w)[1].values) == brute
        assert list(pal_fast(w)[1].values) == brute


def test_fast_equals_dp_random():
    rng = random.Random(2024)
    for _ in range(400):
        n = rng.randint(0, 600)
        w = tuple(rng.randrange(rng.choice((2, 3, 4))) for _ in range(n))
        assert pal_dp(w)[1].values == pal_fast(w)[1].values


def test_fibonacci_prefix_62():
    w = fibonacci_stream().prefix(62)
    assert pal_fast(w)[0] == 4


def test_mirror_symmetry():
    rng = random.Random(9)
    for _ in range(300):
        n = rng.randint(0, 200)
        w = Word(tuple(rng.randrange(3) for _ in range(n)))
        assert pal_fast(w)[0] == pal_fast(mirror(w))[0]


def test_subadditivity():
    rng = random.Random(10)
    for _ in range(1000):
        n1, n2 = rng.randint(0, 60), rng.randint(0, 60)
        u = Word(tuple(rng.randrange(2) for _ in range(n1)))
        v = Word(tuple(rng.randrange(2) for _ in range(n2)))
        assert pal_fast(u + v)[0] <= pal_fast(u)[0] + pal_fast(v)[0]


def test_palindromic_suffix_transition_inequality():
    # values[i] <= values[j] + 1 whenever w[j+1..i] is a palindrome
    rng = random.Random(11)
    for _ in range(150):
        n = rng.randint(1, 80)
        w = tuple(rng.randrange(2) for _ in range(n))
        values = brute_pal_table(w)
        for i in range(1, n + 1):
            for j in range(i):
                seg = w[j:i]
                if seg == seg[::-1]:
                    assert values[i] <= values[j] + 1


def test_minimal_factorizations_examples():
    facts = minimal_factorizations(Word("aabaab"))
    assert facts.count == 2
    spans = [d.spans for d in facts]
    assert spans == [((1, 2), (3, 6)), ((1, 5), (6, 6))]
    assert not facts.truncated

    facts = minimal_factorizations(Word("aabaaba"))
    assert facts.count == 2
    assert [d.spans for d in facts] == [((1, 1), (2, 7))]

    facts = minimal_factorizations(Word("aba"))
    assert [d.spans for d in facts] == [((1, 3),)]


def test_minimal_factorizations_validate_and_order():
    rng = random.Random(3)
    for _ in range(100):
        n = rng.randint(1, 40)
        w = Word(tuple(rng.randrange(2) for _ in range(n)))
        count, _ = pal_fast(w)
        facts = minimal_factorizations(w, limit=50)
        starts = []
        for dec in facts:
            dec.validate(w)
            assert len(dec) == count
            assert all(is_palindrome(f) for f in dec.factors(w))
            starts.append(tuple(s for s, _ in dec.spans))
        assert starts == sorted(starts)


def test_minimal_factorizations_limit_flag():
    # a^12 has many 1-factor... use a word with multiple minimal splits
    w = Word("aabaab")
    facts = minimal_factorizations(w, limit=1)
    assert len(facts) == 1
    assert facts.truncated
    with pytest.raises(ValueError):
        minimal_factorizations(w, limit=0)


def test_decomposition_validation_rejects_bad_spans():
    w = Word("abab")
    with pytest.raises(ValueError):
        Decomposition(((1, 2), (3, 4))).validate(w)  # "ab" spans, not palindromes
    with pytest.raises(ValueError):
        Decomposition(((1, 1),)).validate(w)  # does not cover


def test_first_attainment_fibonacci():
    m = first_attainment(fibonacci_stream(), 7, 6000)
    assert m == {1: 1, 2: 2, 3: 9, 4: 62, 5: 297, 6: 1154, 7: 5473}


def test_first_attainment_unary_and_alternating():
    m = first_attainment(Periodic(Word("a")), 3, 500)
    assert m == {1: 1, 2: None, 3: None}
    m = first_attainment(Periodic(Word("ab")), 3, 10**4)
    assert m == {1: 1, 2: 2, 3: None}


def test_pal_prefix_table_csv():
    _, table = pal_fast(Word("abaab"))
    csv = table.to_csv()
    lines = csv.strip().split("\n")
    assert lines[0] == "n,pal"
    assert lines[1] == "1,1"
    assert lines[-1] == "5,2"


def test_bplp_shift_property():
    # For a stream aw whose prefixes all fit in k factors, the prefixes of w
    # fit in k + 1.
    rng = random.Random(12)
    for _ in range(100):
        n = rng.randint(2, 200)
        aw = tuple(rng.randrange(2) for _ in range(n))
        w = aw[1:]
        max_aw = max(brute_pal_table(aw)[1:])
        max_w = max(brute_pal_table(w)[1:], default=0)
        assert max_w <= max_aw + 1
