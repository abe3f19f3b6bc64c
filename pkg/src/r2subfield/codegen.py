"""Construction of the binary subfield code attached to a defining set.

A defining set D is a subset of R^m (R the eight-element ring of
:mod:`r2subfield.algebra`) built coordinatewise from three simplicial
complexes:

    D = { e1*d1 + e2*d2 + e3*d3 : d1 in D1, d2 in D2, d3 in D3 }

with each Di either Delta_X or its complement inside F2^m, or alternatively
the set complement of such a D inside all of R^m ("global complement").
Since (e1, e2, e3) is an F2-basis of R the triple map is injective, so
|D| = |D1| * |D2| * |D3|.

Each element x of R^m is flattened to the 3m-bit mask whose blocks are the
coordinatewise values of (tau(x*e1), tau(x*e2), tau(x*e3)); the binary code
is generated by the 3m rows of bit j across these masks.  Equivalently the
codeword of a message (alpha, beta, gamma) in (F2^m)^3 has, at the position
indexed by (d1, d2, d3), the bit

    alpha . d1 + beta . (d2 + d3) + gamma . d2,

i.e. the plain F2 parity of the message mask ANDed with the position mask.
Weights of all 2^(3m) messages are enumerated with a Gray-code walk (one row
XOR and one popcount per message); dividing the weight histogram by the
kernel size yields the exact weight distribution of the code.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from collections.abc import Mapping, Sequence

from .algebra import from_basis_coords, trace_triple
from .simplicial import ComplexSpec, char_sum, complex_size, enumerate_members

__all__ = [
    "BRUTE_FORCE_M_CAP",
    "DegenerateConfigurationError",
    "DefiningSetSpec",
    "CodeSummary",
    "build_defining_set",
    "subfield_defining_set",
    "subfield_generator_rows",
    "generator_matrix_subfield",
    "codeword",
    "message_weights",
    "message_weights_from_rows",
    "summarize_message_weights",
    "weight_distribution_bruteforce",
    "code_words",
    "code_words_from_rows",
    "weight_via_charsum",
    "min_distance",
]

BRUTE_FORCE_M_CAP = 5


class DegenerateConfigurationError(ValueError):
    """The requested configuration yields an empty or zero-dimensional code."""


@dataclass(frozen=True)
class DefiningSetSpec:
    """The three complexes (and optional global complement) defining D."""

    m: int
    d1: ComplexSpec
    d2: ComplexSpec
    d3: ComplexSpec
    global_complement: bool = False

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError(f"m must be >= 1, got {self.m}")
        for name, part in (("D1", self.d1), ("D2", self.d2), ("D3", self.d3)):
            if part.m != self.m:
                raise ValueError(f"{name} lives in F2^{part.m}, expected F2^{self.m}")
        if self.global_complement and any(
            part.complemented for part in (self.d1, self.d2, self.d3)
        ):
            raise ValueError("global complement requires all three parts uncomplemented")

    @property
    def parts(self) -> tuple[ComplexSpec, ComplexSpec, ComplexSpec]:
        return (self.d1, self.d2, self.d3)


def _base_triples(spec: DefiningSetSpec) -> list[tuple[int, ...]]:
    members1 = enumerate_members(spec.d1)
    members2 = enumerate_members(spec.d2)
    members3 = enumerate_members(spec.d3)
    out = []
    for v1 in members1:
        for v2 in members2:
            for v3 in members3:
                out.append(
                    tuple(
                        from_basis_coords(v1 >> i & 1, v2 >> i & 1, v3 >> i & 1)
                        for i in range(spec.m)
                    )
                )
    return out


def build_defining_set(spec: DefiningSetSpec) -> list[tuple[int, ...]]:
    """The defining set as a list of R-vectors (tuples of element codes).

    Plain sets are ordered with D1 outermost and D3 innermost, each complex
    in increasing bitmask order; a global complement is ordered by increasing
    vector encoding over all of R^m.
    """
    base = _base_triples(spec)
    assert len(set(base)) == len(base), "basis expansion must be injective"
    if not spec.global_complement:
        return base
    skip = set(base)
    out = []
    for code in range(1 << (3 * spec.m)):
        vec = tuple(code >> (3 * i) & 7 for i in range(spec.m))
        if vec not in skip:
            out.append(vec)
    return out


def subfield_defining_set(vectors: Sequence[tuple[int, ...]], m: int) -> list[int]:
    """Flatten R-vectors to 3m-bit masks of coordinatewise trace triples.

    Bit i of the low block is tau(x_i * e1), the middle block tau(x_i * e2),
    the high block tau(x_i * e3).
    """
    out = []
    for vec in vectors:
        if len(vec) != m:
            raise ValueError(f"vector {vec!r} has length {len(vec)}, expected {m}")
        mask = 0
        for i, x in enumerate(vec):
            t1, t2, t3 = trace_triple(x)
            mask |= t1 << i | t2 << (m + i) | t3 << (2 * m + i)
        out.append(mask)
    return out


def subfield_generator_rows(masks: Sequence[int], m: int) -> list[int]:
    """Rows of the 3m x n binary generator matrix (row j = bit j of each mask)."""
    return [
        sum((mask >> j & 1) << i for i, mask in enumerate(masks)) for j in range(3 * m)
    ]


def generator_matrix_subfield(
    g1_rows: Sequence[int],
    g2_rows: Sequence[int],
    g3_rows: Sequence[int],
    ncols: int,
) -> list[int]:
    """Stack the coefficient matrices of an R-generator matrix G = G1 + u*G2' ...

    Given the three binary matrices G1, G2, G3 with G = e1*G1 + e2*G2 + e3*G3
    entrywise, the binary generator of the subfield code is the vertical
    stack [G1; G2 + G3; G2].
    """
    if not len(g1_rows) == len(g2_rows) == len(g3_rows):
        raise ValueError("coefficient matrices must have equal row counts")
    for rows in (g1_rows, g2_rows, g3_rows):
        for r in rows:
            if r >> ncols:
                raise ValueError(f"row 0b{r:b} exceeds {ncols} columns")
    stacked = list(g1_rows)
    stacked.extend(r2 ^ r3 for r2, r3 in zip(g2_rows, g3_rows))
    stacked.extend(g2_rows)
    return stacked


def codeword(alpha: int, beta: int, gamma: int, masks: Sequence[int], m: int) -> int:
    """The length-n codeword of message (alpha, beta, gamma) as a bitmask."""
    full = 1 << m
    for name, part in (("alpha", alpha), ("beta", beta), ("gamma", gamma)):
        if not 0 <= part < full:
            raise ValueError(f"{name} out of range for F2^{m}: {part}")
    v = alpha | beta << m | gamma << (2 * m)
    word = 0
    for i, mask in enumerate(masks):
        word |= ((v & mask).bit_count() & 1) << i
    return word


def _check_m_cap(m: int) -> None:
    if m > BRUTE_FORCE_M_CAP:
        raise ValueError(
            f"exhaustive enumeration is capped at m <= {BRUTE_FORCE_M_CAP}, got m = {m}"
        )


def message_weights_from_rows(rows: Sequence[int], m: int) -> list[int]:
    """Codeword weight of every message, indexed by packed message mask.

    The message (alpha, beta, gamma) is packed as alpha | beta << m |
    gamma << 2m.  Messages are visited in Gray-code order so each step costs
    one row XOR and one popcount.
    """
    _check_m_cap(m)
    if len(rows) != 3 * m:
        raise ValueError(f"expected {3 * m} generator rows, got {len(rows)}")
    total = 1 << (3 * m)
    weights = [0] * total
    word = 0
    for t in range(1, total):
        word ^= rows[(t & -t).bit_length() - 1]
        weights[t ^ (t >> 1)] = word.bit_count()
    return weights


def message_weights(spec: DefiningSetSpec) -> list[int]:
    """Weights of all 2^(3m) messages of the code defined by ``spec``."""
    masks = subfield_defining_set(build_defining_set(spec), spec.m)
    if not masks:
        raise DegenerateConfigurationError("empty defining set")
    return message_weights_from_rows(subfield_generator_rows(masks, spec.m), spec.m)


@dataclass(frozen=True)
class CodeSummary:
    """Exact parameters and weight distribution of one constructed code."""

    n: int
    k: int
    d: int
    weights: Mapping[int, int]

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "weights": [{"w": w, "count": c} for w, c in sorted(self.weights.items())],
        }


def summarize_message_weights(weights: Sequence[int], n: int, m: int) -> CodeSummary:
    """Collapse a full message-weight table to the code's distribution.

    Every codeword has the same number of preimages (the kernel size, read
    off as the multiplicity of weight 0), so dividing each count by it gives
    the distribution of the code itself and k = 3m - log2(kernel).
    """
    hist = Counter(weights)
    kernel = hist[0]
    total = 1 << (3 * m)
    assert len(weights) == total, "weight table must cover every message"
    assert total % kernel == 0 and kernel & (kernel - 1) == 0, "kernel must be a 2-power"
    k = (total // kernel).bit_length() - 1
    if k == 0:
        raise DegenerateConfigurationError("trivial code: every message maps to 0")
    dist = {}
    for w, count in sorted(hist.items()):
        assert count % kernel == 0, "weight class not a union of kernel cosets"
        dist[w] = count // kernel
    return CodeSummary(n=n, k=k, d=min_distance(dist), weights=dist)


def weight_distribution_bruteforce(spec: DefiningSetSpec) -> CodeSummary:
    """Exact parameters of the code by enumerating all 2^(3m) messages."""
    masks = subfield_defining_set(build_defining_set(spec), spec.m)
    if not masks:
        raise DegenerateConfigurationError("empty defining set")
    rows = subfield_generator_rows(masks, spec.m)
    weights = message_weights_from_rows(rows, spec.m)
    return summarize_message_weights(weights, len(masks), spec.m)


def code_words_from_rows(rows: Sequence[int], ncols: int) -> list[int]:
    """All distinct words spanned by the rows, zero word first."""
    from .algebra import f2_row_basis

    basis = f2_row_basis(rows, ncols)
    words = [0] * (1 << len(basis))
    word = 0
    for t in range(1, len(words)):
        word ^= basis[(t & -t).bit_length() - 1]
        words[t ^ (t >> 1)] = word
    return words


def code_words(spec: DefiningSetSpec) -> list[int]:
    """All 2^k distinct codewords of the code defined by ``spec``."""
    _check_m_cap(spec.m)
    masks = subfield_defining_set(build_defining_set(spec), spec.m)
    if not masks:
        raise DegenerateConfigurationError("empty defining set")
    return code_words_from_rows(subfield_generator_rows(masks, spec.m), len(masks))


def weight_via_charsum(alpha: int, beta: int, gamma: int, spec: DefiningSetSpec) -> int:
    """Codeword weight from the character-sum identity, no enumeration.

    wt = (|D| - T) / 2 with T the product of the three complex character
    sums at (alpha, beta + gamma, beta); for a global complement T is
    replaced by 2^(3m) * [message == 0] minus that product.
    """
    full = 1 << spec.m
    for name, part in (("alpha", alpha), ("beta", beta), ("gamma", gamma)):
        if not 0 <= part < full:
            raise ValueError(f"{name} out of range for F2^{spec.m}: {part}")
    s1 = char_sum(spec.d1, alpha)
    s2 = char_sum(spec.d2, beta ^ gamma)
    s3 = char_sum(spec.d3, beta)
    product = s1 * s2 * s3
    if spec.global_complement:
        base = complex_size(spec.d1) * complex_size(spec.d2) * complex_size(spec.d3)
        size = (1 << (3 * spec.m)) - base
        delta = 1 << (3 * spec.m) if alpha == beta == gamma == 0 else 0
        doubled = size - (delta - product)
    else:
        size = complex_size(spec.d1) * complex_size(spec.d2) * complex_size(spec.d3)
        doubled = size - product
    assert doubled % 2 == 0, "character sum parity broken"
    return doubled // 2


def min_distance(weights: Mapping[int, int]) -> int:
    """Smallest weight of a nonzero codeword in a weight distribution."""
    positive = [w for w, c in weights.items() if w > 0 and c > 0]
    if not positive:
        raise DegenerateConfigurationError("trivial code has no nonzero codeword")
    return min(positive)
