"""Combined per-prefix profile: minimum and greedy counts plus first hits."""

from __future__ import annotations

from dataclasses import dataclass, field

from .eertree import PalindromeIndex
from .greedy import greedy_profile
from .streams import InfiniteWord, materialize, spec_of
from .words import Word


@dataclass
class PrefixProfile:
    """Per-prefix record for prefixes 1..horizon of one word or stream.

    ``first_attainment[k]`` is the least prefix length whose minimum
    palindromic factor count equals k (None when not attained).
    """

    word_spec: str
    pal: list[int]
    lgpal: list[int]
    rgpal: list[int]
    max_pal: list[int]
    max_lgpal: list[int]
    max_rgpal: list[int]
    first_attainment: dict[int, int | None] = field(default_factory=dict)

    @property
    def horizon(self) -> int:
        return len(self.pal)

    def to_csv(self) -> str:
        lines = ["n,pal,lgpal,rgpal,max_pal,max_lgpal,max_rgpal"]
        for i in range(self.horizon):
            lines.append(
                f"{i + 1},{self.pal[i]},{self.lgpal[i]},{self.rgpal[i]},"
                f"{self.max_pal[i]},{self.max_lgpal[i]},{self.max_rgpal[i]}"
            )
        attained = [
            str(self.first_attainment[k])
            for k in sorted(self.first_attainment)
            if self.first_attainment[k] is not None
        ]
        lines.append("m," + ",".join(attained))
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "word": self.word_spec,
            "horizon": self.horizon,
            "pal": self.pal,
            "lgpal": self.lgpal,
            "rgpal": self.rgpal,
            "max_pal": self.max_pal[-1] if self.pal else 0,
            "max_lgpal": self.max_lgpal[-1] if self.lgpal else 0,
            "max_rgpal": self.max_rgpal[-1] if self.rgpal else 0,
            "first_attainment": {
                str(k): v for k, v in sorted(self.first_attainment.items())
            },
        }


def build_profile(stream, horizon: int) -> PrefixProfile:
    """Minimum and greedy counts for every prefix up to the horizon."""
    w = materialize(stream, horizon) if isinstance(stream, InfiniteWord) else Word(stream)[:horizon]
    dp = PalindromeIndex(w, track_min=True).min_factors
    pal = dp[1:]
    gp = greedy_profile(w, len(w))
    max_pal = []
    best = 0
    for v in pal:
        if v > best:
            best = v
        max_pal.append(best)
    first: dict[int, int | None] = {}
    top = max_pal[-1] if max_pal else 0
    for k in range(1, top + 1):
        first[k] = None
    for i, v in enumerate(pal):
        if first.get(v) is None:
            first[v] = i + 1
    return PrefixProfile(
        word_spec=spec_of(stream),
        pal=list(pal),
        lgpal=gp.lgpal,
        rgpal=gp.rgpal,
        max_pal=max_pal,
        max_lgpal=gp.max_lgpal,
        max_rgpal=gp.max_rgpal,
        first_attainment=first,
    )
