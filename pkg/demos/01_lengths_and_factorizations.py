"""Minimum vs greedy palindromic factor counts on small words.

A word splits into palindromic factors in many ways; the minimum count, the
left-greedy count (always take the longest palindromic prefix) and the
right-greedy count (longest palindromic suffix) can all differ on the same
word.  This walkthrough reproduces the small worked examples.
"""

from palfact import (
    Word,
    lgpal,
    minimal_factorizations,
    pal_fast,
    render,
    render_style,
    rgpal,
)


def show(text):
    w = Word(text)
    style = render_style(w)
    p, _ = pal_fast(w)
    lg, ldec = lgpal(w)
    rg, rdec = rgpal(w)
    print(f"{text}: pal={p} lgpal={lg} rgpal={rg}")
    print("  left greedy :", " . ".join(render(f, style) for f in ldec.factors(w)))
    print("  right greedy:", " . ".join(render(f, style) for f in rdec.factors(w)))
    facts = minimal_factorizations(w)
    for dec in facts:
        print("  minimal     :",
              " . ".join(render(f, style) for f in dec.factors(w)))
    print()


print("The classic pair: abaa prefers aba.a from the left but needs three")
print("factors from the right; abaab is the other way around.\n")
show("abaa")
show("abaab")

print("Minimal factorizations need not be unique, and the factorizations of")
print("a word and of its longest proper prefix can be unrelated:\n")
show("aabaab")   # two minimal factorizations
show("aabaaba")  # its extension has exactly one

print("Greedy counts can overshoot the minimum by an arbitrary amount; see")
print("demo 05 for the doubling-word family that realizes the gap.")
