"""The pentagonal involution and the rank-shifting injection, with
exhaustive verifiers.

The involution phi acts on pairs (partition, pentagonal index j) of a fixed
ambient weight n, trading weight against the index so that
weight + gpn(j) = n is preserved while the parity of j flips. Restricted by
rank it exchanges the two halves of each rank split, which is what the
verifiers certify partition by partition.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import Partition, enumerate_partitions, gpn, p_euler, set_a, set_a_size
from .report import CheckReport


@dataclass(frozen=True)
class IndexedPartition:
    """A partition tagged with its pentagonal index j and ambient weight n.

    Invariant: weight(lam) == n - gpn(j) >= 0.
    """

    lam: Partition
    j: int
    n: int

    def __post_init__(self):
        expected = self.n - gpn(self.j)
        if self.lam.weight != expected:
            raise ValueError(
                f"weight {self.lam.weight} does not match n - gpn(j) = {expected}"
            )


def phi(x: IndexedPartition) -> tuple[IndexedPartition, int]:
    """Apply the involution; returns the image and which case fired (1 or 2).

    Case 1 (t + 3j >= largest part): prepend t+3j-1 and decrement every part,
    dropping zeros; index moves to j-1. Case 2: drop the largest part,
    increment the rest and pad with largest - (t+3j) - 1 ones; index moves to
    j+1. The empty partition follows the unique extension that keeps the
    involution and the weight bookkeeping valid: a single part 3j-1 for
    j >= 1, a column of -3j-2 ones for j <= -1. (empty, 0) has no image.
    """
    lam, j, n = x.lam, x.j, x.n
    t = lam.num_parts
    if t == 0:
        if j == 0:
            raise ValueError("the involution is undefined on (empty, j=0)")
        if j >= 1:
            return IndexedPartition(Partition((3 * j - 1,)), j - 1, n), 1
        ones = -3 * j - 2
        return IndexedPartition(Partition((1,) * ones), j + 1, n), 2
    lam1 = lam.largest
    if t + 3 * j >= lam1:
        parts = (t + 3 * j - 1,) + tuple(p - 1 for p in lam.parts)
        parts = tuple(p for p in parts if p > 0)
        return IndexedPartition(Partition(parts), j - 1, n), 1
    ones = lam1 - (t + 3 * j) - 1
    parts = tuple(p + 1 for p in lam.parts[1:]) + (1,) * ones
    return IndexedPartition(Partition(parts), j + 1, n), 2


def psi(lam: Partition, k: int) -> Partition:
    """Conjugate, then grow the largest part by 2k-1.

    Requires rank(lam) <= -3k (so lam is nonempty); the image then has
    weight lam.weight + 2k - 1 and rank > 3(k-1), landing in the
    complementary rank class one index over.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if lam.rank > -3 * k:
        raise ValueError(
            f"rank {lam.rank} violates the precondition rank <= {-3 * k}"
        )
    conj = lam.conjugate().parts
    return Partition((conj[0] + 2 * k - 1,) + conj[1:])


def _witness(lam: Partition, j: int, check: str) -> dict:
    return {"partition": list(lam.parts), "j": j, "check": check}


def verify_phi(n: int) -> CheckReport:
    """Exhaustively certify the involution at ambient weight n.

    For every index j with gpn(j) <= n and every partition of n - gpn(j):
    the map must round-trip to the identity, flip index parity by one step,
    keep the weight bookkeeping (enforced by construction and re-reported on
    failure), and exchange the rank classes rank <= 3j at j with
    rank > 3(j-1) at j-1. The parity-balanced counting identity across all
    indices is checked as a corollary.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    report = CheckReport("phi", {"n": n})
    indices = [j for j in range(-n, n + 1) if gpn(j) <= n]
    indices.sort()
    for j in indices:
        for lam in enumerate_partitions(n - gpn(j)):
            x = IndexedPartition(lam, j, n)
            try:
                y, case = phi(x)
            except ValueError as exc:
                report.add(_witness(lam, j, "apply"), "image", str(exc))
                continue
            expected_j = j - 1 if case == 1 else j + 1
            if y.j != expected_j:
                report.add(_witness(lam, j, "index"), expected_j, y.j)
            if case == 1 and lam.rank > 3 * j:
                report.add(_witness(lam, j, "case-1-rank"), f"rank <= {3 * j}", lam.rank)
            if case == 2 and lam.rank <= 3 * j:
                report.add(_witness(lam, j, "case-2-rank"), f"rank > {3 * j}", lam.rank)
            if case == 1 and not y.lam.rank > 3 * (j - 1):
                report.add(_witness(lam, j, "image-rank"), f"> {3 * (j - 1)}", y.lam.rank)
            if case == 2 and not y.lam.rank <= 3 * (j + 1):
                report.add(_witness(lam, j, "image-rank"), f"<= {3 * (j + 1)}", y.lam.rank)
            try:
                back, _ = phi(y)
            except ValueError as exc:
                report.add(_witness(y.lam, y.j, "apply-back"), "preimage", str(exc))
                continue
            if back != x:
                report.add(
                    _witness(lam, j, "involution"),
                    {"partition": list(lam.parts), "j": j},
                    {"partition": list(back.lam.parts), "j": back.j},
                )
    even = sum(p_euler(n - gpn(j)) for j in indices if j % 2 == 0)
    odd = sum(p_euler(n - gpn(j)) for j in indices if j % 2 != 0)
    if even != odd:
        report.add({"n": n, "check": "parity-count"}, even, odd)
    return report


def verify_psi(n: int, k: int) -> CheckReport:
    """Certify injectivity of psi from the low-rank class at index -k into
    the high-rank class at index k-1, for ambient weight n."""
    if n < 1 or k < 1:
        raise ValueError(f"need n >= 1 and k >= 1, got n={n}, k={k}")
    source = set_a(1, -k, n)
    target = set(set_a(2, k - 1, n))
    report = CheckReport(
        "psi", {"n": n, "k": k, "source_size": len(source), "target_size": len(target)}
    )
    seen: dict[Partition, Partition] = {}
    for lam in source:
        try:
            image = psi(lam, k)
        except ValueError as exc:
            report.add(_witness(lam, -k, "apply"), "image", str(exc))
            continue
        if image not in target:
            report.add(
                _witness(lam, -k, "membership"),
                f"member of rank class > {3 * (k - 1)} at weight {n - gpn(k - 1)}",
                list(image.parts),
            )
        if image in seen:
            report.add(
                _witness(lam, -k, "injectivity"),
                f"distinct from psi({list(seen[image].parts)})",
                list(image.parts),
            )
        seen[image] = lam
    return report


def theorem12_check(n: int, k: int) -> CheckReport:
    """Check the truncated pentagonal counting identity at one point (n, k).

    The alternating sum of p(n - gpn(j)) - p(n - gpn(-j-1)) over
    0 <= j <= k-1, signed by (-1)^(k-1), must equal
    |rank class 2 at k-1| - |rank class 1 at -k|; additionally the involution
    forces |class 1 at k| = |class 2 at k-1|, which dominates |class 1 at -k|.
    """
    if n < 1 or k < 1:
        raise ValueError(f"need n >= 1 and k >= 1, got n={n}, k={k}")
    a2 = set_a_size(2, k - 1, n)
    a1_neg = set_a_size(1, -k, n)
    a1_k = set_a_size(1, k, n)
    sign = 1 if (k - 1) % 2 == 0 else -1
    alt = sign * sum(
        (1 if j % 2 == 0 else -1)
        * (p_euler(n - gpn(j)) - p_euler(n - gpn(-j - 1)))
        for j in range(k)
    )
    report = CheckReport(
        "theorem12",
        {"n": n, "k": k, "A2_size": a2, "A1_neg_size": a1_neg, "difference": a2 - a1_neg},
    )
    if alt != a2 - a1_neg:
        report.add({"n": n, "k": k, "check": "alternating-sum"}, a2 - a1_neg, alt)
    if a1_k != a2:
        report.add({"n": n, "k": k, "check": "class-exchange"}, a2, a1_k)
    if a2 < a1_neg:
        report.add({"n": n, "k": k, "check": "dominance"}, f">= {a1_neg}", a2)
    return report
