"""How many palindromic factors do prefixes need, at best, on k letters?

B(w) is the worst prefix of w; B(k) minimizes that over all streams using
exactly k letters.  Small alphabets are settled by exhaustive search from
below and explicit witnesses from above; the shifted-alphabet ladder words
give the witnesses for powers of two.
"""

from palfact import (
    Word,
    build_gap_word,
    max_prefix_count,
    gap_witness,
    multibonacci,
    search_prefix_floor,
    u_ladder,
    u_ladder_periodic,
    prefix_floor_witness,
)

print("ladder words (each level shifts the alphabet and wraps itself):")
for n in (1, 2, 3, 4):
    u, v = u_ladder(n)
    print(f"  u_{n} = {u}   ({len(set(u))} letters)")
print()

print("B along the ladder: B(u_n) = n, and (u_n v_n)^w tops out at n + 1")
for n in range(1, 7):
    u, v = u_ladder(n)
    b_u = max_prefix_count(u)
    b_per = max_prefix_count(u_ladder_periodic(n), 30 * len(u + v))
    print(f"  n={n}: B(u_n)={b_u}, B((u_n v_n)^w)={b_per}")
print()

print("lower bounds by exhaustive search over prefix trees:")
for k, depth in ((1, 6), (2, 8), (3, 12), (4, 10)):
    print(f"  {k} letters, depth {depth}: every qualifying word has a prefix "
          f"needing >= {search_prefix_floor(k, depth)} factors")
print()

print("matching witnesses from above:")
for k in (2, 3, 4, 8):
    spec, bound = prefix_floor_witness(k, 1000)
    print(f"  {k} letters: {spec} has prefix maximum {bound}")
print()

print("and the doubling-word gap family (minimum stays at 6 while the")
print("greedy counts grow linearly):")
for n in (3, 5, 8):
    m = multibonacci(n)
    p, lg, rg = gap_witness(build_gap_word(n))
    print(f"  n={n} (|m_n| = {len(m)}): pal={p}, lgpal={lg}, rgpal={rg}")
