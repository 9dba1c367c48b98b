"""
Node-to-community lookup shared by the graph writers.
"""

from typing import Dict, List, Sequence, Set, Tuple

from Community import Community


def community_membership(communities: Sequence[Community]) -> Tuple[Dict[int, List[int]], Set[int]]:
    """
    Map each node to the positions of the communities it belongs to.

    A page belongs to its own community. Returns the map and the set of pages.
    """
    belongs: Dict[int, List[int]] = {}
    pages: Set[int] = set()
    for position, community in enumerate(communities):
        pages.add(community.page)
        for node in (community.page, *community.members):
            belongs.setdefault(node, [])
            if position not in belongs[node]:
                belongs[node].append(position)
    return belongs, pages
