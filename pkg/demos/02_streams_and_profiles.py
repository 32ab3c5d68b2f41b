"""Per-prefix profiles of infinite words.

Streams are prefix-on-demand: the library materializes exactly the horizon
you ask for.  For the Fibonacci word the minimum factor count of prefixes
grows, but astonishingly slowly; the profile records where each value is
first attained.
"""

from palfact import (
    Periodic,
    Word,
    build_profile,
    fibonacci_stream,
    gap_sequence,
    palindromic_prefixes,
    parse_spec,
)

fib = fibonacci_stream()
print("Fibonacci word:", fib.prefix(30), "...\n")

profile = build_profile(fib, 6000)
print("first prefix needing k palindromic factors:")
for k, n in sorted(profile.first_attainment.items()):
    print(f"  k={k}: length {n}")
print("\nThe growth is roughly geometric with a small ratio, which is why")
print("bounding prefix counts from below is delicate.\n")

print("Palindromic prefixes of a stream and their gaps")
print("-----------------------------------------------")
for spec in ("periodic:ab", "periodic:abba", "fib"):
    stream = parse_spec(spec)
    seq = palindromic_prefixes(stream, 2000)
    gs = gap_sequence(seq)
    tail = gs.gaps[-4:]
    print(f"{spec}: {len(seq)} palindromic prefixes, gaps non-decreasing: "
          f"{gs.monotone}, final gaps {tail}")
print("\nGaps never decrease, and they stay bounded exactly for periodic")
print("streams; the Fibonacci gaps keep growing.")

print("\nGreedy profile of (ab)^w: lgpal alternates 1, 2, 1, 2, ...")
gp = build_profile(Periodic(Word("ab")), 12)
print("  lgpal:", gp.lgpal)
print("  rgpal:", gp.rgpal)
