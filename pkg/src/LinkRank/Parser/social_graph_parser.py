"""
Social-graph JSON reader.

The input is a JSON array of documents shaped like social-network API objects:
`id`, optional `name` and `category`, `likes` (directed links) and `friends`
(mutual links). Ids referenced but not defined become plain nodes.
"""

import json
import logging
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from Graph import DirectedGraph
from Utils.errors import DuplicateId, InputError, MalformedDocument

logger = logging.getLogger(__name__)


class SocialGraphDocument(BaseModel):
    """One object of the input array. Unknown fields are ignored."""

    model_config = ConfigDict(extra="ignore", frozen=True)

    id: str = Field(..., min_length=1)
    name: Optional[str] = None
    category: Optional[str] = None
    friends: List[str] = Field(default_factory=list)
    likes: List[str] = Field(default_factory=list)

    @field_validator("likes", mode="before")
    @classmethod
    def _drop_like_counts(cls, value: Any) -> Any:
        # API responses may carry a like count instead of a list
        if isinstance(value, (int, float)) and not isinstance(value, bool):
            return []
        return value

    @field_validator("friends", "likes")
    @classmethod
    def _non_empty_ids(cls, value: List[str]) -> List[str]:
        if any(not item for item in value):
            raise ValueError("referenced ids must be non-empty")
        return value


class NodeMetadata(BaseModel):
    """Descriptive fields kept for a defined document."""

    model_config = ConfigDict(frozen=True)

    name: Optional[str] = None
    category: Optional[str] = None


def parse_social_graph_json(text: str) -> Tuple[DirectedGraph, Dict[str, NodeMetadata]]:
    """
    Parse a social-graph JSON array.

    A like x on document d yields d -> x; a friend y yields d -> y and y -> d.
    Defined ids are indexed first, in file order.

    Returns:
        The graph and a metadata map keyed by label (defined documents only)

    Raises:
        MalformedDocument: If an element is not a valid document
        DuplicateId: If two documents share an id
        InputError: If the text is not a JSON array
    """
    try:
        payload = json.loads(text) if text.strip() else []
    except json.JSONDecodeError as e:
        raise InputError(f"Social-graph input is not valid JSON: {e}") from e
    if not isinstance(payload, list):
        raise InputError("Social-graph input must be a JSON array of documents")

    documents: List[SocialGraphDocument] = []
    seen = set()
    for index, raw in enumerate(payload):
        if not isinstance(raw, dict):
            raise MalformedDocument(index, "expected a JSON object")
        try:
            document = SocialGraphDocument.model_validate(raw)
        except ValidationError as e:
            raise MalformedDocument(index, str(e.errors()[0]["msg"])) from e
        if document.id in seen:
            raise DuplicateId(document.id)
        seen.add(document.id)
        documents.append(document)

    edges: List[Tuple[str, str]] = []
    for document in documents:
        edges.extend((document.id, liked) for liked in document.likes)
        for friend in document.friends:
            edges.append((document.id, friend))
            edges.append((friend, document.id))

    graph = DirectedGraph.from_edge_list(edges, nodes=[d.id for d in documents])
    metadata = {
        d.id: NodeMetadata(name=d.name, category=d.category) for d in documents
    }
    logger.info(f"Read {len(documents)} documents: {graph.n} nodes, {graph.m} edges")
    return graph, metadata
