from functools import lru_cache
from itertools import combinations

from flagcy import LieType, build_root_datum, make_flag

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}


def flag_of(family, rank, parabolic=()):
    return make_flag(build_root_datum(LieType(family, rank)), parabolic)


@lru_cache(maxsize=None)
def grid_flags(max_rank=4, families="ABCD", min_picard=2):
    """Every flag of the given families up to max_rank with enough Picard directions."""
    out = []
    for family in families:
        for rank in range(_MIN_RANK[family], max_rank + 1):
            datum = build_root_datum(LieType(family, rank))
            for size in range(0, rank - min_picard + 1):
                for parabolic in combinations(range(1, rank + 1), size):
                    out.append(make_flag(datum, parabolic))
    return tuple(out)
