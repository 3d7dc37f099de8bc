from itertools import combinations_with_replacement


def sorted_tuples(k: int, lo: int, hi: int) -> list[tuple[int, ...]]:
    """All non-decreasing k-tuples with entries in [lo, hi], lexicographic."""
    return list(combinations_with_replacement(range(lo, hi + 1), k))
