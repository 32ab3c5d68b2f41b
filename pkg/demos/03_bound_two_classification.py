"""Streams whose prefixes never need more than two palindromic factors.

Among streams with infinitely many palindromic prefixes, the two-factor
bound pins the stream down to four closed families, all periodic.  The
classifier certifies the period from the materialized prefix and matches the
block; the next-set enumerator shows how the families arise, palindrome by
palindrome.
"""

from palfact import (
    EventuallyPeriodic,
    Periodic,
    Word,
    bound_report,
    classify_bound2,
    enumerate_next,
)

cases = [
    "a", "ab", "abb", "aab", "aba", "ababa", "aabab", "abba", "abac",
]
print("classification at horizon 1000")
print("------------------------------")
for period in cases:
    stream = Periodic(Word(period))
    cls = classify_bound2(stream, 1000)
    fam = cls.family or "no closed form"
    extras = f" params={cls.params}" if cls.family else ""
    bplf = f" isolated-letter form {cls.bplf2}" if cls.bplf2 else ""
    print(f"({period})^w: prefix_max={cls.report.prefix_max} -> {fam}{extras}{bplf}")

print()
print("Dropping one letter can lower the bound: (abba)^w needs three factors")
print("on some prefixes, a(abba)^w only two:")
for stream in (Periodic(Word("abba")), EventuallyPeriodic(Word("a"), Word("abba"))):
    rep = bound_report(stream, 1000)
    print(f"  {rep.word_spec}: prefix_max={rep.prefix_max}")

print()
print("How the families grow: the palindromes that can follow a given prefix")
print("while keeping every prefix within two factors.")
for base in ("ab", "aab", "aabaa"):
    ns = enumerate_next(Word(base), 16)
    members = ", ".join(str(p) for p in ns.palindromes[:6])
    more = " ..." if len(ns.palindromes) > 6 else ""
    print(f"  next({base}) = {{{members}{more}}}  "
          f"({len(ns.open_branches)} branches still open at the cap)")

print()
print("Some prefixes admit no continuation at all; the search proves it by")
print("exhausting every branch:")
ns = enumerate_next(Word("aababaa"), 64)
print(f"  next(aababaa) = {{}} with {len(ns.open_branches)} open branches")
