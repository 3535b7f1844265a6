"""Independent brute-force oracles used to pin expected values.

Nothing in here touches the package under test.  Counts and weight
multiplicities are produced by direct enumeration of fillings, and
dimensions by the classical product formula, so the two routes can be
played against each other and against the library.
"""

from fractions import Fraction
from itertools import combinations_with_replacement


def weakly_increasing_rows(length, max_entry, floor_row):
    """Yield weakly increasing tuples over 1..max_entry.

    floor_row gives, per column, a strict lower bound (the entry sitting
    directly above); pass an empty tuple for the first row.
    """
    if length == 0:
        yield ()
        return
    for row in combinations_with_replacement(range(1, max_entry + 1), length):
        ok = True
        for j in range(min(length, len(floor_row))):
            if row[j] <= floor_row[j]:
                ok = False
                break
        if ok:
            yield row


def brute_force_ssyt(parts, max_entry):
    """All semistandard fillings of the given row lengths, as row tuples."""
    parts = tuple(p for p in parts if p > 0)

    def rec(idx, above):
        if idx == len(parts):
            yield ()
            return
        for row in weakly_increasing_rows(parts[idx], max_entry, above):
            for rest in rec(idx + 1, row):
                yield (row,) + rest

    return list(rec(0, ()))


def weyl_dimension(parts):
    """Dimension of the GL irreducible with the given partition."""
    n = len(parts)
    dim = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            dim *= Fraction(parts[i] - parts[j] + j - i, j - i)
    assert dim.denominator == 1
    return int(dim)


def brute_force_weight_multiplicity(parts, max_entry, target):
    """Number of fillings whose entry-count vector equals target."""
    hits = 0
    for rows in brute_force_ssyt(parts, max_entry):
        counts = [0] * max_entry
        for row in rows:
            for x in row:
                counts[x - 1] += 1
        if tuple(counts) == tuple(target):
            hits += 1
    return hits
