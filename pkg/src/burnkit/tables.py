"""O(1) burning-number classification for 1- and 2-arm unicyclic graphs.

Write n = q^2 + r with 1 <= r <= 2q+1. For a unicyclic graph with one or
two pendant paths (arms) hanging at a single cycle vertex, the burning
number is always q or q+1; the classification below decides which, keyed
on (q, r), the cycle length g, and the arm lengths. The exceptional
parameter families where the answer is q+1 despite the generic q-row
conditions are materialized per query for the instance's own q (and r,
where relevant); parametric tuples that degenerate for small q (cycle
length below 3, arm below 1, or arms out of descending order, which makes
the tuple an alias of another family's member) are dropped.

Every lookup returns a BurnResult carrying the bound sandwich. Parameter
combinations matching no row fall back to the exact solver with the
``fallback-exact`` method tag; reaching that path means the table rows
are incomplete and the sweep suite treats it as a bug.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Optional, TextIO, Union

from . import families
from .formulas import t_unicyclic_bounds
from .graphs import TUnicyclic, qr_decompose
from .solver import BurnResult, burning_number_exact

TABLE_T1 = "table-t1"
TABLE_T2 = "table-t2"
DEGREE_B2 = "degree-b2"
FALLBACK = "fallback-exact"


def _valid_pair(g: int, a: int) -> bool:
    return g >= 3 and a >= 1


def _valid_triple(g: int, a1: int, a2: int) -> bool:
    return g >= 3 and a1 >= a2 >= 1


def set_a(q: int) -> frozenset[tuple[int, int]]:
    """(g, a) pairs forcing q+1 in the one-arm table; both have r = q-1."""
    raw = [(2 * q + 1, q * q - q - 2), (q * q - 2, q + 1)]
    return frozenset((g, a) for g, a in raw if _valid_pair(g, a))


def set_b(q: int) -> frozenset[tuple[int, int, int]]:
    """(g, a1, a2) triples forcing q+1 in the short-cycle two-arm rows."""
    raw = [
        (2 * q - 2, q * q - q - 2, q + 1),
        (2 * q - 1, q * q - q - 2, q + 1),
    ]
    return frozenset(t for t in raw if _valid_triple(*t))


def set_c1(q: int, r: int) -> frozenset[tuple[int, int, int]]:
    """Two r-dependent triples; empty when r - q + 1 < 1."""
    a2 = r - q + 1
    raw = [(2 * q + 1, q * q - q - 2, a2), (q * q - 2, q + 1, a2)]
    return frozenset(t for t in raw if _valid_triple(*t))


def set_c2(q: int) -> frozenset[tuple[int, int, int]]:
    raw = [
        (q * q - 7, q + 2, q + 1),
        (2 * q + 1, q * q - q - 6, q + 1),
        (2 * q + 1, q * q - q - 7, q + 2),
    ]
    return frozenset(t for t in raw if _valid_triple(*t))


C3_LITERALS = frozenset({(22, 16, 7), (13, 16, 16)})


def set_c3(q: int) -> frozenset[tuple[int, int, int]]:
    raw = [
        (q * q - 3, q, q),
        (q * q - 5, q + 1, q + 1),
        (q * q - 6, q + 2, q + 1),
        (q * q - 7, q + 2, q + 2),
        (q * q - 7, q + 3, q + 1),
        (q * q - 11, q + 4, q + 4),
        (2 * q + 4, q * q - q - 11, q + 4),
        (2 * q + 1, q * q - q - 5, q + 1),
        (2 * q + 1, q * q - q - 6, q + 2),
        (2 * q + 1, q * q - q - 7, q + 3),
        (2 * q + 2, q * q - q - 6, q + 1),
        (2 * q + 2, q * q - q - 7, q + 2),
        (2 * q + 3, q * q - q - 7, q + 1),
        (2 * q, q * q - q - 3, q),
    ]
    return frozenset(t for t in raw if _valid_triple(*t)) | C3_LITERALS


def param_b1(q: int) -> frozenset[tuple[int, int, int]]:
    """Long-cycle members of the fourth exception family (cycle part largest)."""
    s = q * q
    raw = [
        (s - 2, q, q),
        (s - 6, q + 2, q + 2),
        (s - 10, q + 4, q + 4),
        (s - 3, q + 1, q),
        (s - 5, q + 3, q),
        (s - 7, q + 3, q + 2),
        (s - 8, q + 3, q + 3),
        (s - 7, q + 5, q),
        (s - 10, q + 5, q + 3),
        (s - 11, q + 5, q + 4),
        (s - 12, q + 5, q + 5),
        (s - 14, q + 6, q + 6),
        (s - 12, q + 7, q + 3),
        (s - 14, q + 7, q + 5),
        (s - 14, q + 9, q + 3),
    ]
    return frozenset(t for t in raw if _valid_triple(*t))


def param_b2(q: int) -> frozenset[tuple[int, int, int]]:
    """Members with the long arm largest and the cycle part paired second."""
    s = q * q - q
    raw = [
        (2 * q, s - 2, q),
        (2 * q + 2, s - 6, q + 2),
        (2 * q + 4, s - 10, q + 4),
        (2 * q + 1, s - 3, q),
        (2 * q + 3, s - 5, q),
        (2 * q + 3, s - 7, q + 2),
        (2 * q + 3, s - 8, q + 3),
        (2 * q + 5, s - 7, q),
        (2 * q + 5, s - 10, q + 3),
        (2 * q + 5, s - 11, q + 4),
        (2 * q + 5, s - 12, q + 5),
        (2 * q + 6, s - 14, q + 6),
        (2 * q + 7, s - 12, q + 3),
        (2 * q + 7, s - 14, q + 5),
        (2 * q + 9, s - 14, q + 3),
    ]
    return frozenset(t for t in raw if _valid_triple(*t))


def param_b3(q: int) -> frozenset[tuple[int, int, int]]:
    """Members with the cycle part smallest; equal-pair cases live in the
    previous family, so this one has nine templates, not fifteen."""
    s = q * q - q
    raw = [
        (2 * q, s - 3, q + 1),
        (2 * q, s - 5, q + 3),
        (2 * q + 2, s - 7, q + 3),
        (2 * q, s - 7, q + 5),
        (2 * q + 3, s - 10, q + 5),
        (2 * q + 4, s - 11, q + 5),
        (2 * q + 3, s - 12, q + 7),
        (2 * q + 5, s - 14, q + 7),
        (2 * q + 3, s - 14, q + 9),
    ]
    return frozenset(t for t in raw if _valid_triple(*t))


B4_LITERALS = frozenset(
    {
        (24, 16, 6),
        (22, 16, 8),
        (35, 19, 7),
        (32, 19, 10),
        (30, 19, 12),
        (28, 19, 14),
        (26, 19, 16),
        (30, 21, 10),
        (28, 21, 12),
        (45, 22, 11),
        (43, 22, 13),
        (41, 22, 15),
        (34, 22, 22),
        (43, 24, 11),
        (41, 24, 13),
        (32, 24, 22),
        (41, 26, 11),
        (60, 25, 12),
        (58, 25, 14),
        (47, 25, 25),
        (58, 27, 12),
        (47, 38, 12),
        (77, 28, 13),
    }
)

B5_LITERALS = frozenset(
    {
        (22, 18, 6),
        (22, 16, 8),
        (26, 28, 7),
        (26, 25, 10),
        (26, 23, 12),
        (26, 21, 14),
        (26, 19, 16),
        (28, 23, 10),
        (28, 21, 12),
        (30, 37, 11),
        (30, 35, 13),
        (30, 33, 15),
        (30, 26, 22),
        (32, 35, 11),
        (32, 33, 13),
        (32, 24, 22),
        (34, 33, 11),
        (34, 51, 12),
        (34, 49, 14),
        (34, 38, 25),
        (36, 49, 12),
        (47, 38, 12),
        (38, 67, 13),
    }
)

B6_LITERALS = frozenset(
    {
        (12, 18, 16),
        (14, 16, 16),
        (14, 28, 19),
        (17, 25, 19),
        (19, 23, 19),
        (21, 21, 19),
        (23, 19, 19),
        (17, 23, 21),
        (19, 21, 21),
        (19, 37, 22),
        (21, 35, 22),
        (23, 33, 22),
        (30, 26, 22),
        (19, 35, 24),
        (21, 33, 24),
        (30, 24, 24),
        (19, 33, 26),
        (21, 51, 25),
        (23, 49, 25),
        (34, 38, 25),
        (21, 49, 27),
        (21, 38, 38),
        (23, 67, 28),
    }
)

# Startup count checks: catch any accidental edit of the catalogs. The
# parametric templates are counted at q = 10, where nothing degenerates.
assert len(C3_LITERALS) == 2
assert len(param_b1(10)) == 15
assert len(param_b2(10)) == 15
assert len(param_b3(10)) == 9
assert len(B4_LITERALS) == len(B5_LITERALS) == len(B6_LITERALS) == 23
assert len(set_a(10)) == 2 and len(set_b(10)) == 2


def in_c4(g: int, a1: int, a2: int, q: int) -> bool:
    """Fourth family: n = q^2+2q-2 chain with the cycle part dominant."""
    n = g + a1 + a2
    if n == q * q + 2 * q - 2 and a2 == q + 1 and g - q >= a1 >= a2:
        return True
    return (g, a1, a2) in param_b1(q) or (g, a1, a2) in B4_LITERALS


def in_c5(g: int, a1: int, a2: int, q: int) -> bool:
    """Fifth family: n = q^2+2q-2 chain with the cycle part in the middle."""
    n = g + a1 + a2
    if n == q * q + 2 * q - 2 and a2 == q + 1 and a1 >= g - q >= a2:
        return True
    return (g, a1, a2) in param_b2(q) or (g, a1, a2) in B5_LITERALS


def in_c6(g: int, a1: int, a2: int, q: int) -> bool:
    """Sixth family: n = q^2+2q-2 chain with the cycle part smallest."""
    n = g + a1 + a2
    if n == q * q + 2 * q - 2 and g - q == q + 1 and a1 >= a2 >= g - q:
        return True
    return (g, a1, a2) in param_b3(q) or (g, a1, a2) in B6_LITERALS


def in_c_union(g: int, a1: int, a2: int, q: int, r: int) -> bool:
    """Membership in the union of the six two-arm exception families."""
    triple = (g, a1, a2)
    return (
        triple in set_c1(q, r)
        or triple in set_c2(q)
        or triple in set_c3(q)
        or in_c4(g, a1, a2, q)
        or in_c5(g, a1, a2, q)
        or in_c6(g, a1, a2, q)
    )


def _result(value: int, method: str, n: int, t: int) -> BurnResult:
    lower, upper = t_unicyclic_bounds(n, t)
    return BurnResult(value=value, method=method, lower_bound=lower, upper_bound=upper)


def _fallback(desc: TUnicyclic, budget: Optional[int]) -> BurnResult:
    res = burning_number_exact(families.build(desc), budget=budget)
    return BurnResult(
        value=res.value,
        method=FALLBACK,
        lower_bound=res.lower_bound,
        upper_bound=res.upper_bound,
        certificate=res.certificate,
    )


def b_unicyclic_t1(g: int, a: int, budget: Optional[int] = None) -> BurnResult:
    """Table lookup for a cycle of length g with one arm of length a.

    Orders 4 and 5 are settled by the degree criterion (b = 2). Otherwise,
    with n = q^2 + r: the value is q+1 when q <= r <= 2q+1, or g >= q^2+1,
    or g <= 2r, or (g, a) is one of the two exceptional pairs; it is q when
    1 <= r <= q-1, 2r+1 <= g <= q^2, and the pair is not exceptional.
    """
    if g < 3 or a < 1:
        raise ValueError(f"need g >= 3 and a >= 1, got (g={g}, a={a})")
    n = g + a
    if n <= 5:
        return _result(2, DEGREE_B2, n, 1)
    qr = qr_decompose(n)
    q, r = qr.q, qr.r
    exceptional = (g, a) in set_a(q)
    plus = (q <= r <= 2 * q + 1) or g >= q * q + 1 or g <= 2 * r or exceptional
    flat = (1 <= r <= q - 1) and (2 * r + 1 <= g <= q * q) and not exceptional
    if plus and not flat:
        return _result(q + 1, TABLE_T1, n, 1)
    if flat and not plus:
        return _result(q, TABLE_T1, n, 1)
    return _fallback(TUnicyclic(g=g, arms=(a,)), budget)


def b_unicyclic_t2(g: int, a1: int, a2: int, budget: Optional[int] = None) -> BurnResult:
    """Table lookup for a cycle of length g with two arms a1 >= a2.

    Orders 5 and 6 are settled by the degree criterion (b = 2). Otherwise,
    with n = q^2 + r, the value is q+1 when r >= 2q-1, or 3 <= g <= r, or
    g >= q^2+1, or a1 >= q^2 - floor(g/2), or 2q <= g <= q^2 with
    a2 <= r-q, or the triple lies in one of the exception families; it is
    q on the two complementary rows (short cycle r+1 <= g <= 2q-1 with a1
    below the threshold and outside the short-cycle exceptions; long cycle
    2q <= g <= q^2 with a2 >= r-q+1 and outside the six families).
    """
    a1, a2 = max(a1, a2), min(a1, a2)
    if g < 3 or a2 < 1:
        raise ValueError(f"need g >= 3 and arms >= 1, got (g={g}, a1={a1}, a2={a2})")
    n = g + a1 + a2
    if n <= 6:
        return _result(2, DEGREE_B2, n, 2)
    qr = qr_decompose(n)
    q, r = qr.q, qr.r
    in_b = (g, a1, a2) in set_b(q)
    in_c = in_c_union(g, a1, a2, q, r)
    arm_cap = q * q - g // 2

    plus = (
        r >= 2 * q - 1
        or 3 <= g <= r
        or g >= q * q + 1
        or a1 >= arm_cap
        or (2 * q <= g <= q * q and a2 <= r - q)
        or in_b
        or in_c
    )
    flat = (1 <= r <= 2 * q - 2) and (
        (r + 1 <= g <= 2 * q - 1 and a1 <= arm_cap - 1 and not in_b)
        or (2 * q <= g <= q * q and a2 >= r - q + 1 and not in_c)
    )
    if plus and not flat:
        return _result(q + 1, TABLE_T2, n, 2)
    if flat and not plus:
        return _result(q, TABLE_T2, n, 2)
    return _fallback(TUnicyclic(g=g, arms=(a1, a2)), budget)


# --------------------------------------------------------------------------
# Errata file: accepted table-vs-oracle discrepancies
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class ErrataEntry:
    """One accepted discrepancy: "t g a1 [a2] table_value exact_value note"."""

    t: int
    g: int
    arms: tuple[int, ...]
    table_value: int
    exact_value: int
    note: str

    @property
    def key(self) -> tuple[int, int, tuple[int, ...]]:
        return (self.t, self.g, self.arms)


def parse_errata(text: str) -> dict[tuple, ErrataEntry]:
    """Parse an errata file; blank lines and '#' comments are ignored."""
    entries: dict[tuple, ErrataEntry] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        fields = stripped.split()
        try:
            t = int(fields[0])
            if t not in (1, 2):
                raise ValueError
            width = 1 + 1 + t + 2  # t, g, arms, table, exact
            if len(fields) < width:
                raise ValueError
            g = int(fields[1])
            arms = tuple(int(f) for f in fields[2 : 2 + t])
            table_value = int(fields[2 + t])
            exact_value = int(fields[3 + t])
        except (ValueError, IndexError):
            raise ValueError(f"malformed errata line {lineno}: {line!r}") from None
        note = " ".join(fields[width:])
        entry = ErrataEntry(t, g, arms, table_value, exact_value, note)
        entries[entry.key] = entry
    return entries


def load_errata(source: Union[str, TextIO, None]) -> dict[tuple, ErrataEntry]:
    """Load an errata file from a path or open file; None means empty."""
    if source is None:
        return {}
    if isinstance(source, str):
        if not os.path.exists(source):
            raise FileNotFoundError(source)
        with open(source, encoding="utf-8") as fh:
            return parse_errata(fh.read())
    return parse_errata(source.read())


def errata_covers(
    entries: dict[tuple, ErrataEntry],
    t: int,
    g: int,
    arms: Iterable[int],
    table_value: int,
    exact_value: int,
) -> bool:
    """True iff the loaded errata accept exactly this discrepancy."""
    entry = entries.get((t, g, tuple(arms)))
    return (
        entry is not None
        and entry.table_value == table_value
        and entry.exact_value == exact_value
    )
