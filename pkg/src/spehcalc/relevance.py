"""Matching deciders for pairs of Arthur parameters.

A pair decomposes by pairing terms across the two sides through one of
four move families and dropping the rest; a term may stand unmatched only
when its Arthur dimension is 1 (the V_0 degenerations of all four
families collapse to that one rule).  Restricting the families to the two
Arthur-step moves gives the Hom-side relevance criterion; allowing all
four gives the Ext-side one.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .core import ArthurParameter, CuspidalSymbol, SpehDatum, csupp_param
from .sl2 import diagonal_restriction


class MoveFamily(Enum):
    """How a left term u_rho(c, d) pairs with a right term.

    F1: right is the Arthur step down of left, u_rho(c, d-1).
    F2: left is the Arthur step down of right, so right = u_rho(c, d+1).
    F3: right is the dual of the Arthur step down of left, u_rho(d-1, c).
    F4: left is the dual of the Arthur step down of right, so
        right = u_rho(d, c+1).
    """

    F1 = "F1"
    F2 = "F2"
    F3 = "F3"
    F4 = "F4"

    def partner(self, left: SpehDatum) -> Optional[SpehDatum]:
        """The unique right-side term this family pairs with ``left``, or
        None when the family degenerates (step down from Arthur dim 1)."""
        if self is MoveFamily.F1:
            return SpehDatum(left.rho, left.a, left.b - 1) if left.b >= 2 else None
        if self is MoveFamily.F2:
            return SpehDatum(left.rho, left.a, left.b + 1)
        if self is MoveFamily.F3:
            return SpehDatum(left.rho, left.b - 1, left.a) if left.b >= 2 else None
        return SpehDatum(left.rho, left.b, left.a + 1)

    def compatible(self, left: SpehDatum, right: SpehDatum) -> bool:
        return self.partner(left) == right


GGP_FAMILIES = (MoveFamily.F1, MoveFamily.F2)
STRONG_FAMILIES = (MoveFamily.F1, MoveFamily.F2, MoveFamily.F3, MoveFamily.F4)


@dataclass(frozen=True)
class MatchedPair:
    left: SpehDatum
    right: SpehDatum
    family: MoveFamily

    def __post_init__(self) -> None:
        if not self.family.compatible(self.left, self.right):
            raise ValueError(
                f"terms ({self.left}, {self.right}) are not an {self.family.value} pair"
            )

    @property
    def sort_key(self):
        return (self.left.sort_key, self.family.value, self.right.sort_key)


@dataclass(frozen=True)
class Matching:
    """A certificate decomposing a parameter pair: matched pairs plus the
    dropped terms on each side (all of Arthur dimension 1).

    Matchings are values: pairs and drops are kept canonically sorted, and
    two matchings built from the same pairs in different orders are equal.
    """

    pairs: tuple[MatchedPair, ...] = ()
    dropped_left: tuple[SpehDatum, ...] = ()
    dropped_right: tuple[SpehDatum, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "pairs", tuple(sorted(self.pairs, key=lambda p: p.sort_key)))
        object.__setattr__(
            self, "dropped_left", tuple(sorted(self.dropped_left, key=lambda s: s.sort_key))
        )
        object.__setattr__(
            self, "dropped_right", tuple(sorted(self.dropped_right, key=lambda s: s.sort_key))
        )

    @property
    def sort_key(self):
        return (
            tuple(p.sort_key for p in self.pairs),
            tuple(s.sort_key for s in self.dropped_left),
            tuple(s.sort_key for s in self.dropped_right),
        )

    def validate(self, a1: ArthurParameter, a2: ArthurParameter) -> None:
        """Check this matching against the pair it claims to decompose:
        exact reconstruction of both multisets, family compatibility of
        every pair, and the Arthur-dim-1 drop rule."""
        left = Counter(p.left for p in self.pairs) + Counter(self.dropped_left)
        right = Counter(p.right for p in self.pairs) + Counter(self.dropped_right)
        if left != Counter(a1.terms) or right != Counter(a2.terms):
            raise ValueError("matching does not reconstruct the parameter pair")
        for p in self.pairs:
            if not p.family.compatible(p.left, p.right):
                raise ValueError(f"pair {p} violates family {p.family.value}")
        for s in self.dropped_left + self.dropped_right:
            if s.b != 1:
                raise ValueError(f"dropped term has Arthur dimension {s.b} > 1")

    def to_json_dict(self) -> dict:
        return {
            "pairs": [
                {
                    "left": term_to_json(p.left),
                    "right": term_to_json(p.right),
                    "family": p.family.value,
                }
                for p in self.pairs
            ],
            "dropped_left": [term_to_json(s) for s in self.dropped_left],
            "dropped_right": [term_to_json(s) for s in self.dropped_right],
        }

    @staticmethod
    def from_json_dict(data: dict) -> Matching:
        pairs = tuple(
            MatchedPair(
                term_from_json(p["left"]), term_from_json(p["right"]), MoveFamily(p["family"])
            )
            for p in data["pairs"]
        )
        return Matching(
            pairs,
            tuple(term_from_json(s) for s in data["dropped_left"]),
            tuple(term_from_json(s) for s in data["dropped_right"]),
        )


def term_to_json(s: SpehDatum) -> dict:
    return {"rho": {"id": s.rho.id, "degree": s.rho.degree}, "deligne": s.a, "arthur": s.b}


def term_from_json(data: dict) -> SpehDatum:
    return SpehDatum(
        CuspidalSymbol(data["rho"]["id"], data["rho"]["degree"]), data["deligne"], data["arthur"]
    )


# Search internals.  Both the decision procedure and the enumerator walk
# the left multiset in descending (a+b, a) order; for a fixed left term
# and family the right partner is value-determined, so the branching
# factor is at most one drop plus one branch per family.

def _pick(left: Counter) -> SpehDatum:
    return min(left, key=lambda s: (-(s.a + s.b), -s.a, s.sort_key))


def _freeze(counter: Counter) -> tuple:
    return tuple(sorted(counter.items(), key=lambda kv: kv[0].sort_key))


def _take(counter: Counter, key: SpehDatum) -> None:
    counter[key] -= 1
    if counter[key] == 0:
        del counter[key]


def _first_matching(
    left: Counter,
    right: Counter,
    families: tuple[MoveFamily, ...],
    failed: set,
    pairs: list,
    drops: list,
) -> Optional[Matching]:
    if not left:
        if all(s.b == 1 for s in right):
            return Matching(tuple(pairs), tuple(drops), tuple(right.elements()))
        return None
    state = (_freeze(left), _freeze(right))
    if state in failed:
        return None
    t = _pick(left)
    _take(left, t)
    try:
        if t.b == 1:
            drops.append(t)
            found = _first_matching(left, right, families, failed, pairs, drops)
            drops.pop()
            if found is not None:
                return found
        for family in families:
            partner = family.partner(t)
            if partner is None or right[partner] == 0:
                continue
            _take(right, partner)
            pairs.append(MatchedPair(t, partner, family))
            found = _first_matching(left, right, families, failed, pairs, drops)
            pairs.pop()
            right[partner] += 1
            if found is not None:
                return found
    finally:
        left[t] += 1
    failed.add(state)
    return None


def _enumerate_matchings(
    left: Counter,
    right: Counter,
    families: tuple[MoveFamily, ...],
    out: dict,
    pairs: list,
    drops: list,
) -> None:
    if not left:
        if all(s.b == 1 for s in right):
            m = Matching(tuple(pairs), tuple(drops), tuple(right.elements()))
            out[m.sort_key] = m
        return
    t = _pick(left)
    _take(left, t)
    if t.b == 1:
        drops.append(t)
        _enumerate_matchings(left, right, families, out, pairs, drops)
        drops.pop()
    for family in families:
        partner = family.partner(t)
        if partner is None or right[partner] == 0:
            continue
        _take(right, partner)
        pairs.append(MatchedPair(t, partner, family))
        _enumerate_matchings(left, right, families, out, pairs, drops)
        pairs.pop()
        right[partner] += 1
    left[t] += 1


def find_matching(
    a1: ArthurParameter, a2: ArthurParameter, families: tuple[MoveFamily, ...]
) -> Optional[Matching]:
    """First matching of the pair under the given families, or None."""
    return _first_matching(Counter(a1.terms), Counter(a2.terms), families, set(), [], [])


def enumerate_matchings(
    a1: ArthurParameter, a2: ArthurParameter, families: tuple[MoveFamily, ...]
) -> list[Matching]:
    """All distinct matchings of the pair, in deterministic order.

    Matchings are identified at value level: permuting identical terms
    never produces a new matching, while the same term pairing through
    two different families does.
    """
    out: dict = {}
    _enumerate_matchings(Counter(a1.terms), Counter(a2.terms), families, out, [], [])
    return [out[k] for k in sorted(out)]


def ggp_relevant(a1: ArthurParameter, a2: ArthurParameter) -> bool:
    """Relevance of the pair: matchable by Arthur-step moves alone."""
    return find_matching(a1, a2, GGP_FAMILIES) is not None


def strong_ext_relevant(a1: ArthurParameter, a2: ArthurParameter) -> bool:
    """Strong Ext relevance: matchable by all four move families."""
    return find_matching(a1, a2, STRONG_FAMILIES) is not None


def enumerate_ggp_matchings(a1: ArthurParameter, a2: ArthurParameter) -> list[Matching]:
    """All Arthur-step matchings; expected to have at most one element."""
    return enumerate_matchings(a1, a2, GGP_FAMILIES)


def enumerate_strong_matchings(a1: ArthurParameter, a2: ArthurParameter) -> list[Matching]:
    """All matchings under the four families (may exceed one)."""
    return enumerate_matchings(a1, a2, STRONG_FAMILIES)


def same_cuspidal_support(a1: ArthurParameter, a2: ArthurParameter) -> bool:
    """Whether the two parameters restrict identically to the diagonal
    SL2, equivalently carry the same cuspidal support."""
    by_restriction = diagonal_restriction(a1) == diagonal_restriction(a2)
    by_support = csupp_param(a1) == csupp_param(a2)
    if by_restriction != by_support:
        raise RuntimeError(
            "diagonal restriction and cuspidal support disagree; this cannot happen"
        )
    return by_restriction
