"""
Synthetic graph generators.

Every generator is a pure function of its parameters (and, for `random`, the
seed). Node order is fixed per model so fixtures can be addressed by index.
"""

import logging
from enum import Enum
from typing import Any, Callable, Dict, List, Mapping, Optional, Tuple, Type

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from Graph import DirectedGraph
from Utils.errors import InvalidParams

logger = logging.getLogger(__name__)


class GraphModel(str, Enum):
    CYCLE = "cycle"
    STAR = "star"
    BIPARTITE = "bipartite"
    TKC = "tkc"
    PLANTED = "planted"
    RANDOM = "random"


class _Params(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


class CycleParams(_Params):
    n: int = Field(..., ge=1)


class StarParams(_Params):
    k: int = Field(..., ge=1, description="Number of spokes pointing at the sink.")


class BipartiteParams(_Params):
    h: int = Field(..., ge=1)
    a: int = Field(..., ge=1)


class TkcParams(_Params):
    dense_h: int = Field(..., ge=1)
    dense_a: int = Field(..., ge=1)
    sparse_hubs: int = Field(..., ge=1)


class PlantedParams(_Params):
    pages: int = Field(..., ge=1)
    members_per_page: int = Field(..., ge=1)
    decoys: int = Field(0, ge=0)
    overlap: int = Field(0, ge=0, description="Members shared by consecutive pages.")

    @model_validator(mode="after")
    def _check_overlap(self) -> "PlantedParams":
        if self.overlap and self.overlap >= self.members_per_page:
            raise ValueError("overlap must be smaller than members_per_page")
        return self


class RandomParams(_Params):
    n: int = Field(..., ge=1)
    p: float = Field(..., ge=0.0, le=1.0)


Edges = List[Tuple[str, str]]


def _cycle(params: CycleParams, seed: Optional[int]) -> DirectedGraph:
    labels = [str(i) for i in range(params.n)]
    edges = [(labels[i], labels[(i + 1) % params.n]) for i in range(params.n) if params.n > 1]
    return DirectedGraph.from_edge_list(edges, nodes=labels)


def _star(params: StarParams, seed: Optional[int]) -> DirectedGraph:
    """Node 0 is the sink; spokes 1..k each link to it."""
    labels = [str(i) for i in range(params.k + 1)]
    return DirectedGraph.from_edge_list([(s, "0") for s in labels[1:]], nodes=labels)


def _bipartite(params: BipartiteParams, seed: Optional[int]) -> DirectedGraph:
    hubs = [f"h{i}" for i in range(params.h)]
    authorities = [f"a{j}" for j in range(params.a)]
    edges = [(h, a) for h in hubs for a in authorities]
    return DirectedGraph.from_edge_list(edges, nodes=hubs + authorities)


def _tkc(params: TkcParams, seed: Optional[int]) -> DirectedGraph:
    """
    A complete dense_h x dense_a bipartite block next to a star of sparse hubs
    that all link to one shared authority `s`.
    """
    dense_hubs = [f"h{i}" for i in range(params.dense_h)]
    dense_auths = [f"a{j}" for j in range(params.dense_a)]
    sparse_hubs = [f"x{i}" for i in range(params.sparse_hubs)]
    edges: Edges = [(h, a) for h in dense_hubs for a in dense_auths]
    edges.extend((x, "s") for x in sparse_hubs)
    return DirectedGraph.from_edge_list(edges, nodes=dense_hubs + dense_auths + ["s"] + sparse_hubs)


def _planted(params: PlantedParams, seed: Optional[int]) -> DirectedGraph:
    """
    Community pages `page<p>` with members `m<i>` linking to them, plus decoys.

    Node order is pages, then decoys, then members. A decoy `decoy<j>` has its
    own members_per_page in-linking members `d<j>m<i>` and one out-link to page
    j mod pages, so it scores like a page but can never be one. With overlap o,
    the last o members of page p are also the first o members of page p+1.
    """
    pages = [f"page{p}" for p in range(params.pages)]
    decoys = [f"decoy{j}" for j in range(params.decoys)]

    stride = params.members_per_page - params.overlap
    member_count = stride * (params.pages - 1) + params.members_per_page
    members = [f"m{i}" for i in range(member_count)]

    edges: Edges = []
    for p, page in enumerate(pages):
        start = p * stride
        edges.extend((m, page) for m in members[start:start + params.members_per_page])

    decoy_members: List[str] = []
    for j, decoy in enumerate(decoys):
        own = [f"d{j}m{i}" for i in range(params.members_per_page)]
        decoy_members.extend(own)
        edges.extend((m, decoy) for m in own)
        edges.append((decoy, pages[j % params.pages]))

    return DirectedGraph.from_edge_list(edges, nodes=pages + decoys + members + decoy_members)


def _random(params: RandomParams, seed: Optional[int]) -> DirectedGraph:
    """Erdos-Renyi digraph: each ordered pair (i, j), i != j, is an edge with probability p."""
    rng = np.random.default_rng(seed)
    matrix = (rng.random((params.n, params.n)) < params.p).astype(np.int8)
    np.fill_diagonal(matrix, 0)
    return DirectedGraph.from_adjacency_matrix(matrix)


_GENERATORS: Dict[GraphModel, Tuple[Type[_Params], Callable[[Any, Optional[int]], DirectedGraph]]] = {
    GraphModel.CYCLE: (CycleParams, _cycle),
    GraphModel.STAR: (StarParams, _star),
    GraphModel.BIPARTITE: (BipartiteParams, _bipartite),
    GraphModel.TKC: (TkcParams, _tkc),
    GraphModel.PLANTED: (PlantedParams, _planted),
    GraphModel.RANDOM: (RandomParams, _random),
}


def generate(
    model: str,
    params: Mapping[str, Any],
    seed: Optional[int] = None,
) -> DirectedGraph:
    """
    Build a synthetic graph.

    Args:
        model: One of cycle, star, bipartite, tkc, planted, random
        params: Model parameters; string values are coerced (e.g. from the CLI)
        seed: Seed for `random`; ignored by the deterministic models

    Raises:
        InvalidParams: Unknown model, unknown parameter, or a value out of range
    """
    try:
        kind = GraphModel(model)
    except ValueError as e:
        raise InvalidParams(f"Unknown graph model {model!r}") from e

    params_class, builder = _GENERATORS[kind]
    try:
        parsed = params_class.model_validate(dict(params))
    except ValidationError as e:
        raise InvalidParams(f"Invalid parameters for {kind.value}: {e}") from e

    g = builder(parsed, seed)
    logger.info(f"Generated {kind.value} graph: {g.n} nodes, {g.m} edges")
    return g


def parse_params(text: str) -> Dict[str, str]:
    """
    Parse `key=value,key=value` into a dict of strings.

    Raises:
        InvalidParams: If an item has no `=`
    """
    params: Dict[str, str] = {}
    for item in filter(None, (part.strip() for part in text.split(","))):
        key, sep, value = item.partition("=")
        if not sep or not key.strip():
            raise InvalidParams(f"Expected key=value, got {item!r}")
        params[key.strip()] = value.strip()
    return params
