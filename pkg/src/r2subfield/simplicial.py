"""Simplicial complexes generated by one subset of {1, ..., m}, and their
character sums.

A binary vector v in F2^m is identified with its support, so the complex
generated by L (written Delta_L) is simply every v whose support sits inside
L; it has 2^|L| members.  The defining sets of the code construction use
either Delta_L or its complement F2^m \\ Delta_L, so both carry closed-form
character sums:

    sum_{v in Delta_L} (-1)^(w . v)        = 2^|L| * phi(w | L)
    sum_{v not in Delta_L} (-1)^(w . v)    = 2^m * [w == 0] - 2^|L| * phi(w | L)

where phi(w | L) = prod_{i in L} (1 - w_i) is 1 when the support of w avoids
L and 0 otherwise.  Multi-facet complexes only appear through their
generating function, evaluated by inclusion-exclusion over facet subsets.

Vectors are bitmask ints (coordinate i in bit i - 1, so coordinate 1 is the
least significant bit) as in :mod:`r2subfield.algebra`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from collections.abc import Sequence

__all__ = [
    "Subset",
    "ComplexSpec",
    "FacetFamily",
    "enumerate_members",
    "phi",
    "char_sum",
    "complex_size",
    "generating_function_eval",
]


@dataclass(frozen=True)
class Subset:
    """A subset of the ground set {1, ..., m}."""

    m: int
    members: frozenset[int]

    def __post_init__(self) -> None:
        if self.m < 0:
            raise ValueError(f"ground set size must be >= 0, got {self.m}")
        if not isinstance(self.members, frozenset):
            object.__setattr__(self, "members", frozenset(self.members))
        for i in self.members:
            if not 1 <= i <= self.m:
                raise ValueError(f"member {i} outside ground set 1..{self.m}")

    @classmethod
    def from_mask(cls, m: int, mask: int) -> Subset:
        if mask >> m:
            raise ValueError(f"mask 0b{mask:b} exceeds ground set size {m}")
        return cls(m, frozenset(i + 1 for i in range(m) if mask >> i & 1))

    @classmethod
    def parse(cls, m: int, text: str) -> Subset:
        """Parse the CLI form: comma-separated members, or ``-`` for empty."""
        text = text.strip()
        if text in ("-", ""):
            return cls(m, frozenset())
        try:
            members = [int(part) for part in text.split(",")]
        except ValueError:
            raise ValueError(f"bad subset syntax {text!r}: use e.g. '1,3,4' or '-'") from None
        if len(set(members)) != len(members):
            raise ValueError(f"duplicate members in subset {text!r}")
        return cls(m, frozenset(members))

    @property
    def mask(self) -> int:
        return sum(1 << (i - 1) for i in self.members)

    @property
    def size(self) -> int:
        return len(self.members)

    def __str__(self) -> str:
        if not self.members:
            return "-"
        return ",".join(str(i) for i in sorted(self.members))


def subset(m: int, *members: int) -> Subset:
    """Convenience constructor: ``subset(4, 1, 3)`` is {1,3} in {1..4}."""
    return Subset(m, frozenset(members))


@dataclass(frozen=True)
class ComplexSpec:
    """Delta_L for ``generator`` L, or its set complement in F2^m."""

    generator: Subset
    complemented: bool = False

    @property
    def m(self) -> int:
        return self.generator.m


def enumerate_members(spec: ComplexSpec) -> list[int]:
    """Members of the complex (or its complement) in increasing bitmask order."""
    lmask = spec.generator.mask
    full = 1 << spec.m
    if spec.complemented:
        return [v for v in range(full) if v & ~lmask]
    return [v for v in range(full) if not (v & ~lmask)]


def complex_size(spec: ComplexSpec) -> int:
    """|Delta_L| = 2^|L|, or 2^m - 2^|L| for the complement."""
    inside = 1 << spec.generator.size
    return (1 << spec.m) - inside if spec.complemented else inside


def phi(w: int, gen: Subset) -> int:
    """prod_{i in L} (1 - w_i) over the integers: 1 iff supp(w) misses L.

    The empty product (L empty) is 1.
    """
    return 0 if w & gen.mask else 1


def char_sum(spec: ComplexSpec, w: int) -> int:
    """sum_{v in complex} (-1)^(w . v), by the closed form.

    The test suite checks this against literal enumeration for every w and
    every generator on small ground sets.
    """
    if w >> spec.m:
        raise ValueError(f"vector 0b{w:b} exceeds ground set size {spec.m}")
    inside = (1 << spec.generator.size) * phi(w, spec.generator)
    if not spec.complemented:
        return inside
    total = (1 << spec.m) if w == 0 else 0
    return total - inside


@dataclass(frozen=True)
class FacetFamily:
    """A simplicial complex on {1..m} given by its list of facets.

    Facets must be pairwise incomparable under inclusion (each is maximal);
    a single empty facet is allowed and describes the complex {0}.
    """

    m: int
    facets: tuple[Subset, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.facets, tuple):
            object.__setattr__(self, "facets", tuple(self.facets))
        for f in self.facets:
            if f.m != self.m:
                raise ValueError(f"facet {f} has ground set size {f.m}, expected {self.m}")
        for a, b in combinations(self.facets, 2):
            if a.members <= b.members or b.members <= a.members:
                raise ValueError(f"facets {a} and {b} are nested; facets must be maximal")


def generating_function_eval(family: FacetFamily, point: Sequence[int]) -> int:
    """Evaluate H(y1, ..., ym) = sum over faces v of prod_{i in supp(v)} y_i.

    Computed by inclusion-exclusion over nonempty subsets S of the facet
    list:  sum (-1)^(|S|+1) prod_{i in intersection(S)} (1 + y_i).
    At y = (1, ..., 1) this counts the faces, zero vector included.
    """
    if len(point) != family.m:
        raise ValueError(f"point has {len(point)} coordinates, expected {family.m}")
    facets = family.facets
    total = 0
    for r in range(1, len(facets) + 1):
        sign = 1 if r & 1 else -1
        for chosen in combinations(facets, r):
            common = frozenset.intersection(*(f.members for f in chosen))
            prod = 1
            for i in common:
                prod *= 1 + point[i - 1]
            total += sign * prod
    return total
