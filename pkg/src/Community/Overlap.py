"""
Overlap analysis between detected communities.
"""

import logging
from collections import Counter
from itertools import combinations
from typing import List, Sequence

from .Models import Community, OverlapPair, OverlapReport

logger = logging.getLogger(__name__)


def overlap(communities: Sequence[Community]) -> OverlapReport:
    """
    Pairwise shared members and Jaccard indices.

    Only pairs with a non-empty intersection are listed, in the order the
    communities were given.
    """
    pairs: List[OverlapPair] = []
    for a, b in combinations(communities, 2):
        set_a, set_b = a.member_set, b.member_set
        shared = set_a & set_b
        if not shared:
            continue
        jaccard = len(shared) / len(set_a | set_b)
        pairs.append(OverlapPair(a.page, b.page, tuple(sorted(shared)), jaccard))

    counts = Counter(member for c in communities for member in c.member_set)
    multi = tuple(sorted(node for node, count in counts.items() if count >= 2))

    if pairs:
        logger.info(f"{len(pairs)} overlapping community pairs, {len(multi)} shared members")
    return OverlapReport(pairs=tuple(pairs), multi_members=multi)
