"""Partition bookkeeping for the flag labels.

Partitions are tuples of weakly decreasing positive integers.  Besides the
classical operations (transpose, dominance, Kostka counts) this hosts the
rectangle complement tying the labels of a chain to those of the reversed
chain, and the column/row moves that shift between ambient dimensions.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .embedding import slice_labels, tilde_dims


def normalize(parts) -> tuple[int, ...]:
    out = sorted((int(x) for x in parts), reverse=True)
    if out and out[-1] < 0:
        raise ValueError("partition parts must be nonnegative")
    return tuple(x for x in out if x)


def transpose(p) -> tuple[int, ...]:
    """Conjugate partition: column lengths of the Young diagram."""
    p = normalize(p)
    if not p:
        return ()
    return tuple(sum(1 for x in p if x >= k) for k in range(1, p[0] + 1))


def dominates(lam, mu) -> bool:
    """lam >= mu in dominance order; requires equal sizes."""
    lam, mu = normalize(lam), normalize(mu)
    if sum(lam) != sum(mu):
        return False
    tot_l = tot_m = 0
    for k in range(max(len(lam), len(mu))):
        tot_l += lam[k] if k < len(lam) else 0
        tot_m += mu[k] if k < len(mu) else 0
        if tot_l < tot_m:
            return False
    return True


def kostka(lam, mu, cap: int = 20) -> int:
    """Number of semistandard tableaux of shape lam and content mu.

    Counted by direct cell-by-cell filling (rows weakly increase, columns
    strictly increase); sizes above the cap are refused rather than ground
    through.
    """
    lam, mu = normalize(lam), normalize(mu)
    if sum(lam) > cap:
        raise ValueError(f"partition size cap exceeded ({sum(lam)} > {cap})")
    if sum(lam) != sum(mu):
        return 0
    if not lam:
        return 1
    rows, m = len(lam), len(mu)
    counts = list(mu)
    grid = [[0] * r for r in lam]

    def fill(r, c):
        if r == rows:
            return 1
        if c + 1 < lam[r]:
            nr, nc = r, c + 1
        else:
            nr, nc = r + 1, 0
        lo = grid[r][c - 1] if c else 1
        if r:
            lo = max(lo, grid[r - 1][c] + 1)
        total = 0
        for val in range(lo, m + 1):
            if not counts[val - 1]:
                continue
            counts[val - 1] -= 1
            grid[r][c] = val
            total += fill(nr, nc)
            counts[val - 1] += 1
        return total

    return fill(0, 0)


def flag_jumps(v, w) -> tuple[int, ...]:
    """Consecutive dimension drops of the enlarged chain, last entry included."""
    dims = tilde_dims(v, w)
    chain = (dims.tilde_w[0],) + dims.tilde_v
    mu = tuple(chain[i] - chain[i + 1] for i in range(dims.n)) + (chain[dims.n],)
    if any(m < 0 for m in mu):
        raise ValueError("invalid flag data: decreasing dimension jumps")
    return mu


@dataclass(frozen=True)
class RectSymmetry:
    mu_prime: tuple[int, ...]
    lam: tuple[int, ...]
    mu_hat_prime: tuple[int, ...]
    lam_hat: tuple[int, ...]
    identity_ok: bool


def rect_symmetry(v, w) -> RectSymmetry:
    """Labels of the chain and of the reversed chain, with the complement laws.

    identity_ok records that (a) the jump sequences pair up entrywise to
    sum(w), (b) the reversed-chain mu' is the rectangle complement of mu'
    (reversed part multiplicities, padded by parts n+1), and (c) the two
    Kostka numbers K(lam, mu') and K(lam-hat, mu-hat') agree.
    """
    n = len(v)
    total = sum(w)
    small = slice_labels(v, w)
    hat = slice_labels(tuple(reversed(v)), tuple(reversed(w)))
    mu = flag_jumps(v, w)
    mu_hat = flag_jumps(tuple(reversed(v)), tuple(reversed(w)))
    entrywise = all(mu[i] + mu_hat[n - i] == total for i in range(n + 1))

    mult = Counter(small.mu_prime)
    slack = total - len(small.mu_prime)
    predicted = [n + 1] * slack
    for s in range(n, 0, -1):
        predicted.extend([s] * mult.get(n + 1 - s, 0))
    ok = (
        entrywise
        and hat.mu_prime == tuple(predicted)
        and kostka(small.lam, small.mu_prime) == kostka(hat.lam, hat.mu_prime)
    )
    return RectSymmetry(small.mu_prime, small.lam, hat.mu_prime, hat.lam, ok)


def _strip_first_column(p) -> tuple[int, ...]:
    return tuple(x - 1 for x in p if x > 1)


@dataclass(frozen=True)
class ColumnRemoval:
    mu_prime: tuple[int, ...]
    lam: tuple[int, ...]
    inverse_ok: bool


def column_removal(v, w) -> ColumnRemoval:
    """Labels after widening the flag by one step: mu gains a part sum(w) and
    every row of lam gains a box.  inverse_ok records that deleting the first
    column of both outputs recovers the original labels (true whenever sum(w)
    is at least every jump)."""
    n = len(v)
    label = slice_labels(v, w)
    mu_wide = normalize(flag_jumps(v, w) + (sum(w),))
    mu_prime = transpose(mu_wide)
    lam_wide = []
    for j in range(n, 0, -1):
        lam_wide.extend([j + 1] * w[j - 1])
    lam_wide = tuple(lam_wide)
    ok = (
        _strip_first_column(lam_wide) == label.lam
        and _strip_first_column(mu_prime) == label.mu_prime
    )
    return ColumnRemoval(mu_prime, lam_wide, ok)


@dataclass(frozen=True)
class RowAddition:
    mu_prime: tuple[int, ...]
    lam: tuple[int, ...]


def row_addition(v, w, a: int) -> RowAddition:
    """Labels after adjoining a full-width rows: both partitions gain a parts
    of size n + 1, so deleting their first a rows undoes the move."""
    assert a >= 0
    label = slice_labels(v, w)
    n = len(v)
    return RowAddition(
        (n + 1,) * a + label.mu_prime,
        (n + 1,) * a + label.lam,
    )


def classical_type(deltas) -> str:
    """Which classical family an alternating framing-form pattern lands in.

    The enlarged framing space carries a (-1)^(i+1) * delta_i form; for an
    alternating pattern that sign is constant and equals delta_1.
    """
    deltas = tuple(deltas)
    if not deltas or any(d not in (1, -1) for d in deltas):
        raise ValueError("delta pattern must be nonempty with entries +1/-1")
    if any(deltas[i] == deltas[i - 1] for i in range(1, len(deltas))):
        raise ValueError("delta pattern must alternate")
    return "orthogonal" if deltas[0] == 1 else "symplectic"
