"""Closed-form predictions and structural checks for the nine families.

A family is a complement pattern for the defining-set triple (D1, D2, D3):

    1: none      2: D1        3: D2        4: D3
    5: D1, D2    6: D1, D3    7: D2, D3    8: all three
    9: global complement inside R^m of the family-1 set

Each family carries an exact predicted weight table in the subset sizes
(|L|, |M|, |N|).  The tables are instantiated over the integers and then
normalized: zero-count rows are dropped, rows whose weights collide are
merged, and if a row lands on weight 0 with positive count (possible in
families 2-8 when a complement degenerates, say |L| = |M| = m - 1 in family
5) the homomorphism from messages to codewords has extra kernel, so every
count is divided by the total weight-0 count and k drops accordingly.  The
normalized table is what ``predicted_parameters`` reads n, k, d from; it is
compared codeword-for-codeword against brute-force enumeration by the
sweep driver here and the test suite.

Also implemented: the Griesmer bound (sum of ceil(d / 2^i)), the
Ashikhmin-Barg sufficient condition for minimality (2 * wmin > wmax for
binary codes), an exact minimality decision, self-orthogonality checks, and
the catalogued per-family sufficiency conditions for minimality and
self-orthogonality (``table10_conditions``).
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import NamedTuple

from .algebra import f2_gram_is_zero
from .codegen import (
    DefiningSetSpec,
    DegenerateConfigurationError,
    build_defining_set,
    code_words_from_rows,
    message_weights_from_rows,
    min_distance,
    subfield_defining_set,
    subfield_generator_rows,
    summarize_message_weights,
    weight_via_charsum,
)
from .simplicial import ComplexSpec, Subset

__all__ = [
    "FAMILIES",
    "MINIMALITY_CAP",
    "SufficiencyConditions",
    "spec_for_family",
    "family_of_spec",
    "predicted_parameters",
    "predicted_weight_table",
    "griesmer_sum",
    "is_griesmer_code",
    "distance_optimal_by_griesmer",
    "optimality_condition",
    "ashikhmin_barg_minimal",
    "exact_minimality",
    "self_orth_mod4",
    "table10_conditions",
    "code_report",
    "sweep_configuration",
    "run_sweep",
    "summarize_sweep",
]

FAMILIES = tuple(range(1, 10))

MINIMALITY_CAP = 1 << 14

# family -> (complement D1, complement D2, complement D3, global complement)
_PATTERNS = {
    1: (False, False, False, False),
    2: (True, False, False, False),
    3: (False, True, False, False),
    4: (False, False, True, False),
    5: (True, True, False, False),
    6: (True, False, True, False),
    7: (False, True, True, False),
    8: (True, True, True, False),
    9: (False, False, False, True),
}


def _check_family(family: int) -> None:
    if family not in _PATTERNS:
        raise ValueError(f"family must be 1..9, got {family}")


def spec_for_family(family: int, lset: Subset, mset: Subset, nset: Subset) -> DefiningSetSpec:
    """Defining-set spec for generators L, M, N under the family's pattern."""
    _check_family(family)
    if not lset.m == mset.m == nset.m:
        raise ValueError("L, M, N must share one ground set")
    c1, c2, c3, global_c = _PATTERNS[family]
    return DefiningSetSpec(
        m=lset.m,
        d1=ComplexSpec(lset, c1),
        d2=ComplexSpec(mset, c2),
        d3=ComplexSpec(nset, c3),
        global_complement=global_c,
    )


def family_of_spec(spec: DefiningSetSpec) -> int:
    pattern = (
        spec.d1.complemented,
        spec.d2.complemented,
        spec.d3.complemented,
        spec.global_complement,
    )
    for family, candidate in _PATTERNS.items():
        if candidate == pattern:
            return family
    raise ValueError(f"no family matches pattern {pattern}")


def _check_sizes(family: int, m: int, sl: int, sm: int, sn: int) -> None:
    _check_family(family)
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    for name, size in (("L", sl), ("M", sm), ("N", sn)):
        if not 0 <= size <= m:
            raise ValueError(f"|{name}| must be in 0..{m}, got {size}")


def _table_rows(family: int, m: int, sl: int, sm: int, sn: int):
    """Raw table rows as (doubled weight, count), plus n and the nominal k.

    Weights are kept doubled so every entry is an integer even in rows whose
    count vanishes; counts are exact codeword counts before normalization.
    """
    big = 1 << m
    s = sl + sm + sn
    al, am, an = big - (1 << sl), big - (1 << sm), big - (1 << sn)
    if family == 1:
        return [(1 << s, (1 << s) - 1)], 1 << s, s
    if family == 2:
        rows = [
            (al << (sm + sn), (1 << (m + sm + sn)) - (1 << (m - sl))),
            (1 << (m + sm + sn), (1 << (m - sl)) - 1),
        ]
        return rows, al << (sm + sn), m + sm + sn
    if family == 3:
        rows = [
            (am << (sl + sn), (1 << (m + sl + sn)) - (1 << (m - sm))),
            (1 << (m + sl + sn), (1 << (m - sm)) - 1),
        ]
        return rows, am << (sl + sn), m + sl + sn
    if family == 4:
        rows = [
            (an << (sl + sm), (1 << (m + sl + sm)) - (1 << (m - sn))),
            (1 << (m + sl + sm), (1 << (m - sn)) - 1),
        ]
        return rows, an << (sl + sm), m + sl + sm
    if family == 5:
        rows = [
            (al * am << sn, (1 << (2 * m + sn)) - (1 << (2 * m - sl - sm))),
            (am << (m + sn), (1 << (m - sl)) - 1),
            (al << (m + sn), (1 << (m - sm)) - 1),
            ((big - (1 << sl) - (1 << sm)) << (m + sn), ((1 << (m - sl)) - 1) * ((1 << (m - sm)) - 1)),
        ]
        return rows, al * am << sn, 2 * m + sn
    if family == 6:
        rows = [
            (al * an << sm, (1 << (2 * m + sm)) - (1 << (2 * m - sl - sn))),
            (an << (m + sm), (1 << (m - sl)) - 1),
            (al << (m + sm), (1 << (m - sn)) - 1),
            ((big - (1 << sl) - (1 << sn)) << (m + sm), ((1 << (m - sl)) - 1) * ((1 << (m - sn)) - 1)),
        ]
        return rows, al * an << sm, 2 * m + sm
    if family == 7:
        rows = [
            (am * an << sl, (1 << (2 * m + sl)) - (1 << (2 * m - sm - sn))),
            (am << (m + sl), (1 << (m - sn)) - 1),
            (an << (m + sl), (1 << (m - sm)) - 1),
            ((big - (1 << sm) - (1 << sn)) << (m + sl), ((1 << (m - sm)) - 1) * ((1 << (m - sn)) - 1)),
        ]
        return rows, am * an << sl, 2 * m + sl
    if family == 8:
        rows = [
            (al * am * an, (1 << 3 * m) - (1 << (3 * m - s))),
            (am * an << m, (1 << (m - sl)) - 1),
            (al * an << m, (1 << (m - sm)) - 1),
            (al * am << m, (1 << (m - sn)) - 1),
            (al * (big - (1 << sm) - (1 << sn)) << m, ((1 << (m - sm)) - 1) * ((1 << (m - sn)) - 1)),
            (am * (big - (1 << sl) - (1 << sn)) << m, ((1 << (m - sl)) - 1) * ((1 << (m - sn)) - 1)),
            (an * (big - (1 << sl) - (1 << sm)) << m, ((1 << (m - sl)) - 1) * ((1 << (m - sm)) - 1)),
            (al * am * an + (1 << s), ((1 << (m - sl)) - 1) * ((1 << (m - sm)) - 1) * ((1 << (m - sn)) - 1)),
        ]
        return rows, al * am * an, 3 * m
    rows = [
        (1 << 3 * m, (1 << (3 * m - s)) - 1),
        ((1 << 3 * m) - (1 << s), (1 << 3 * m) - (1 << (3 * m - s))),
    ]
    return rows, (1 << 3 * m) - (1 << s), 3 * m


def _instantiate(family: int, m: int, sl: int, sm: int, sn: int):
    """Normalized predicted table: returns (n, k, {weight: count})."""
    _check_sizes(family, m, sl, sm, sn)
    rows, n, nominal_k = _table_rows(family, m, sl, sm, sn)
    merged = {0: 1}
    for dw, count in rows:
        assert count >= 0, "table counts must be non-negative"
        if count == 0:
            continue
        assert dw >= 0 and dw % 2 == 0, "positive-count row with fractional weight"
        merged[dw] = merged.get(dw, 0) + count
    total = sum(merged.values())
    assert total == 1 << nominal_k, "table counts must sum to 2^k"
    kappa = merged[0]
    assert kappa & (kappa - 1) == 0, "kernel multiplicity must be a 2-power"
    if n == 0 or total == kappa:
        raise DegenerateConfigurationError(
            f"family {family} with |L|,|M|,|N| = {sl},{sm},{sn} at m = {m} "
            "yields an empty or trivial code"
        )
    table = {}
    for dw, count in sorted(merged.items()):
        assert count % kappa == 0, "counts must be divisible by the kernel multiplicity"
        table[dw >> 1] = count // kappa
    assert max(table) <= n, "predicted weight exceeds length"
    return n, (total // kappa).bit_length() - 1, table


def predicted_parameters(family: int, m: int, sl: int, sm: int, sn: int) -> tuple[int, int, int]:
    """Predicted [n, k, d], read off the normalized weight table."""
    n, k, table = _instantiate(family, m, sl, sm, sn)
    return n, k, min_distance(table)


def predicted_weight_table(family: int, m: int, sl: int, sm: int, sn: int) -> dict[int, int]:
    """Predicted weight distribution {weight: codeword count}, including 0."""
    return _instantiate(family, m, sl, sm, sn)[2]


def griesmer_sum(k: int, d: int) -> int:
    """sum_{i=0}^{k-1} ceil(d / 2^i), the Griesmer lower bound on n."""
    if k < 1 or d < 1:
        raise ValueError(f"need k >= 1 and d >= 1, got k={k}, d={d}")
    return sum((d + (1 << i) - 1) >> i for i in range(k))


def is_griesmer_code(n: int, k: int, d: int) -> bool:
    """True when the parameters meet the Griesmer bound with equality."""
    return griesmer_sum(k, d) == n


def distance_optimal_by_griesmer(n: int, k: int, d: int) -> bool:
    """True when no [n, k, d + 1] binary code can exist by the bound.

    False means the bound does not decide; it never certifies non-optimality.
    """
    if griesmer_sum(k, d) > n:
        raise ValueError(f"[{n},{k},{d}] already violates the Griesmer bound")
    return griesmer_sum(k, d + 1) > n


def optimality_condition(family: int, m: int, sl: int, sm: int, sn: int) -> bool:
    """Whether the family's distance-optimality rule holds for these sizes.

    Families 1-4 and 9 are distance-optimal without conditions; families 5-7
    require 2^(|L|+|M|+|N|) to be at most 2(m-1) plus the size of the one
    uncomplemented subset.  Family 8 carries no rule; use
    :func:`distance_optimal_by_griesmer` on its computed parameters instead.
    """
    _check_sizes(family, m, sl, sm, sn)
    if family == 8:
        raise ValueError("family 8 has no closed-form optimality rule")
    if family in (1, 2, 3, 4, 9):
        return True
    plain = {5: sn, 6: sm, 7: sl}[family]
    return (1 << (sl + sm + sn)) <= 2 * (m - 1) + plain


def ashikhmin_barg_minimal(weights) -> bool:
    """Sufficient condition for minimality: 2 * wmin > wmax (binary case)."""
    positive = [w for w, c in weights.items() if w > 0 and c > 0]
    if not positive:
        raise DegenerateConfigurationError("trivial code has no nonzero codeword")
    return 2 * min(positive) > max(positive)


def exact_minimality(codewords, n: int) -> bool:
    """Decide minimality by scanning for support containments.

    A binary linear code fails minimality exactly when some nonzero codeword
    covers another, which happens iff two nonzero codewords have disjoint
    supports (their sum covers both; conversely u covering v makes u + v
    disjoint from v).  Weight classes with w1 + w2 > n cannot hold disjoint
    pairs and are skipped; classes with w1 + w2 == n can only pair a word
    with its exact complement, a set lookup.
    """
    if len(codewords) > MINIMALITY_CAP:
        raise ValueError(f"code size {len(codewords)} exceeds cap {MINIMALITY_CAP}")
    classes: dict[int, list[int]] = {}
    for word in codewords:
        wt = word.bit_count()
        if wt:
            classes.setdefault(wt, []).append(word)
    ws = sorted(classes)
    ones = (1 << n) - 1
    for i, w1 in enumerate(ws):
        for w2 in ws[i:]:
            if w1 + w2 > n:
                break
            if w1 + w2 == n:
                partners = set(classes[w2])
                if any(v ^ ones in partners for v in classes[w1]):
                    return False
            elif w1 == w2:
                bucket = classes[w1]
                for a in range(len(bucket)):
                    va = bucket[a]
                    for b in range(a + 1, len(bucket)):
                        if not va & bucket[b]:
                            return False
            else:
                for va in classes[w1]:
                    for vb in classes[w2]:
                        if not va & vb:
                            return False
    return True


def self_orth_mod4(weights) -> bool:
    """Sufficient condition for self-orthogonality: every weight is 0 mod 4."""
    return all(w % 4 == 0 for w, c in weights.items() if c > 0)


class SufficiencyConditions(NamedTuple):
    minimal: bool
    self_orthogonal: bool


def table10_conditions(family: int, m: int, sl: int, sm: int, sn: int) -> SufficiencyConditions:
    """The catalogued per-family sufficiency conditions on the subset sizes.

    ``minimal`` guarantees the code is minimal, ``self_orthogonal`` that it
    is self-orthogonal; both are sufficient only, and both are checked
    against the exact decisions across full sweeps in the test suite.
    """
    _check_sizes(family, m, sl, sm, sn)
    s = sl + sm + sn
    if family == 1:
        return SufficiencyConditions(True, s >= 3)
    if family == 2:
        return SufficiencyConditions(sl <= m - 2, sm + sn >= 3)
    if family == 3:
        return SufficiencyConditions(sm <= m - 2, sl + sn >= 3)
    if family == 4:
        return SufficiencyConditions(sn <= m - 2, sl + sm >= 3)
    if family == 5:
        return SufficiencyConditions(max(sl, sm) <= m - 2, sn >= 3)
    if family == 6:
        return SufficiencyConditions(max(sl, sn) <= m - 2, sm >= 3)
    if family == 7:
        return SufficiencyConditions(max(sm, sn) <= m - 2, sl >= 3)
    if family == 8:
        return SufficiencyConditions(max(sl, sm, sn) <= m - 2, min(sl, sm, sn) >= 1)
    return SufficiencyConditions(s <= 3 * m - 2, s >= 3)


def _evaluate(family: int, lset: Subset, mset: Subset, nset: Subset,
              minimality: str, check_charsum: bool):
    """Full pipeline for one configuration: measured code, predictions, flags.

    Returns (report, extras) where ``report`` follows the stable JSON layout
    of the CLI and ``extras`` carries sweep-only verification bits.
    """
    if minimality not in ("auto", "when_claimed", "never"):
        raise ValueError(f"bad minimality policy {minimality!r}")
    spec = spec_for_family(family, lset, mset, nset)
    m = spec.m
    masks = subfield_defining_set(build_defining_set(spec), m)
    if not masks:
        raise DegenerateConfigurationError("empty defining set")
    n = len(masks)
    rows = subfield_generator_rows(masks, m)
    weights_by_message = message_weights_from_rows(rows, m)
    measured = summarize_message_weights(weights_by_message, n, m)

    try:
        pn, pk, ptable = _instantiate(family, m, lset.size, mset.size, nset.size)
    except DegenerateConfigurationError:
        raise AssertionError(
            "prediction says degenerate but enumeration found a nontrivial code"
        ) from None
    match = (pn, pk, ptable) == (measured.n, measured.k, dict(measured.weights))

    conditions = table10_conditions(family, m, lset.size, mset.size, nset.size)
    minimal_ab = ashikhmin_barg_minimal(measured.weights)
    wanted = minimality == "auto" or (minimality == "when_claimed" and conditions.minimal)
    minimal_exact = None
    if wanted and (1 << measured.k) <= MINIMALITY_CAP:
        minimal_exact = exact_minimality(code_words_from_rows(rows, n), n)
    opt = None if family == 8 else optimality_condition(family, m, lset.size, mset.size, nset.size)

    report = {
        "m": m,
        "family": family,
        "L": str(lset),
        "M": str(mset),
        "N": str(nset),
        "n": measured.n,
        "k": measured.k,
        "d": measured.d,
        "weights": [{"w": w, "count": c} for w, c in sorted(measured.weights.items())],
        "predicted": {
            "n": pn,
            "k": pk,
            "d": min_distance(ptable),
            "weights": [{"w": w, "count": c} for w, c in sorted(ptable.items())],
        },
        "flags": {
            "griesmer_equal": is_griesmer_code(measured.n, measured.k, measured.d),
            "distance_optimal_by_griesmer": distance_optimal_by_griesmer(
                measured.n, measured.k, measured.d
            ),
            "optimality_condition": opt,
            "minimal_exact": minimal_exact,
            "minimal_ab": minimal_ab,
            "self_orth_exact": f2_gram_is_zero(rows),
            "self_orth_mod4": self_orth_mod4(measured.weights),
            "table10_minimal": conditions.minimal,
            "table10_self_orth": conditions.self_orthogonal,
        },
        "match": match,
    }

    charsum_ok = None
    if check_charsum:
        charsum_ok = all(
            weight_via_charsum(v & ((1 << m) - 1), v >> m & ((1 << m) - 1), v >> 2 * m, spec)
            == weights_by_message[v]
            for v in range(1 << 3 * m)
        )
    extras = {"charsum_ok": charsum_ok}
    return report, extras


def code_report(family: int, lset: Subset, mset: Subset, nset: Subset,
                minimality: str = "auto") -> dict:
    """The full report for one configuration (stable field layout).

    Raises :class:`DegenerateConfigurationError` when the configuration
    yields an empty or zero-dimensional code.
    """
    report, _ = _evaluate(family, lset, mset, nset, minimality, check_charsum=False)
    return report


def sweep_configuration(family: int, m: int, lmask: int, mmask: int, nmask: int) -> dict:
    """One sweep row: comparison outcome plus invariant checks.

    Exact minimality is decided everywhere at m <= 2 and, at larger m, on
    the configurations whose catalogued minimality condition holds (the
    claim under test); elsewhere it is skipped for speed.
    """
    lset = Subset.from_mask(m, lmask)
    mset = Subset.from_mask(m, mmask)
    nset = Subset.from_mask(m, nmask)
    row = {
        "m": m,
        "family": family,
        "L": str(lset),
        "M": str(mset),
        "N": str(nset),
        "status": "ok",
        "n": None,
        "k": None,
        "d": None,
        "match": None,
        "charsum_ok": None,
        "griesmer_ok": None,
        "minimal_claim_ok": None,
        "selforth_claim_ok": None,
        "ab_implication_ok": None,
        "detail": "",
    }
    policy = "auto" if m <= 2 else "when_claimed"
    try:
        report, extras = _evaluate(family, lset, mset, nset, policy, check_charsum=True)
    except DegenerateConfigurationError as exc:
        row["status"] = "degenerate"
        row["detail"] = str(exc)
        return row
    flags = report["flags"]
    row["n"], row["k"], row["d"] = report["n"], report["k"], report["d"]
    row["match"] = report["match"]
    row["charsum_ok"] = extras["charsum_ok"]
    if not report["match"]:
        row["status"] = "mismatch"
        predicted = report["predicted"]
        row["detail"] = (
            f"predicted [n,k,d]=[{predicted['n']},{predicted['k']},{predicted['d']}] "
            f"weights={ {e['w']: e['count'] for e in predicted['weights']} }; "
            f"measured [n,k,d]=[{report['n']},{report['k']},{report['d']}] "
            f"weights={ {e['w']: e['count'] for e in report['weights']} }"
        )
    if family in (1, 2, 3, 4, 9):
        row["griesmer_ok"] = flags["griesmer_equal"]
    if flags["table10_minimal"] and flags["minimal_exact"] is not None:
        row["minimal_claim_ok"] = flags["minimal_exact"]
    if flags["table10_self_orth"]:
        row["selforth_claim_ok"] = flags["self_orth_exact"]
    if flags["minimal_ab"] and flags["minimal_exact"] is not None:
        row["ab_implication_ok"] = flags["minimal_exact"]
    return row


def _sweep_star(args: tuple[int, int, int, int, int]) -> dict:
    return sweep_configuration(*args)


def run_sweep(ms, families=FAMILIES, jobs: int = 1):
    """Evaluate every (family, L, M, N) configuration for each m.

    Returns (rows, summary); rows are ordered by (m, family, L, M, N) masks
    regardless of the worker count.
    """
    configs = [
        (family, m, lmask, mmask, nmask)
        for m in ms
        for family in families
        for lmask in range(1 << m)
        for mmask in range(1 << m)
        for nmask in range(1 << m)
    ]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_sweep_star, configs, chunksize=64))
    else:
        rows = [sweep_configuration(*config) for config in configs]
    return rows, summarize_sweep(rows)


def summarize_sweep(rows) -> dict:
    """Tallies plus the family-8 findings list for a finished sweep."""
    summary = {
        "total": len(rows),
        "ok": sum(r["status"] == "ok" for r in rows),
        "mismatch": sum(r["status"] == "mismatch" for r in rows),
        "degenerate": sum(r["status"] == "degenerate" for r in rows),
        "mismatch_outside_family_8": sum(
            r["status"] == "mismatch" and r["family"] != 8 for r in rows
        ),
        "charsum_failures": sum(r["charsum_ok"] is False for r in rows),
        "griesmer_failures": sum(r["griesmer_ok"] is False for r in rows),
        "minimality_claim_failures": sum(r["minimal_claim_ok"] is False for r in rows),
        "selforth_claim_failures": sum(r["selforth_claim_ok"] is False for r in rows),
        "ab_implication_failures": sum(r["ab_implication_ok"] is False for r in rows),
        "findings": [
            {key: r[key] for key in ("m", "family", "L", "M", "N", "detail")}
            for r in rows
            if r["status"] == "mismatch" and r["family"] == 8
        ],
    }
    # The pass/fail verdict follows the table-agreement contract: family-8
    # disagreements are findings, everything else must match.  The other
    # tallies (Griesmer equality, sufficiency claims) are informational here
    # and asserted separately by the test suite.
    summary["passed"] = summary["mismatch_outside_family_8"] == 0
    return summary
