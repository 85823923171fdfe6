"""Path queries over the hypernym lattice.

Paths only climb: from each synset up through hypernym (and instance
hypernym) edges to a shared ancestor, the subsumer.  Depth is measured from
the per-POS virtual root, which therefore has depth 0.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from semgraph.wordnet import SynsetId, TaxonomyIndex


class CrossPosError(ValueError):
    pass


@dataclass(frozen=True)
class PathResult:
    length: int
    subsumer: SynsetId
    subsumer_depth: int


def _memo(index: TaxonomyIndex, table: str) -> dict:
    cache = index._cache.get(table)
    if cache is None:
        with index._lock:
            cache = index._cache.setdefault(table, {})
    return cache


def hypernym_closure(sid: SynsetId, index: TaxonomyIndex) -> dict[SynsetId, int]:
    """Every ancestor of ``sid`` (itself included) mapped to its minimum hop count."""
    cache = _memo(index, "closure")
    hit = cache.get(sid)
    if hit is not None:
        return hit
    index.hypernyms(sid)  # raises on unknown ids
    dist = {sid: 0}
    queue = deque([sid])
    while queue:
        node = queue.popleft()
        d = dist[node] + 1
        for parent in index.hypernym_edges.get(node, ()):
            if parent not in dist:
                dist[parent] = d
                queue.append(parent)
    cache[sid] = dist
    return dist


def _depth_table(index: TaxonomyIndex) -> dict[SynsetId, int]:
    # one breadth-first sweep down from every parentless synset; unlike a
    # recursive climb this is safe on the few hypernym cycles in the data
    table = _memo(index, "depth")
    if table:
        return table
    with index._lock:
        if table:
            return table
        children: dict[SynsetId, list[SynsetId]] = {}
        for node, parents in index.hypernym_edges.items():
            for p in parents:
                children.setdefault(p, []).append(node)
        found = {sid: 0 for sid in index.synsets if not index.hypernym_edges.get(sid)}
        queue = deque(found)
        while queue:
            node = queue.popleft()
            for child in children.get(node, ()):
                if child not in found:
                    found[child] = found[node] + 1
                    queue.append(child)
        table.update(found)
    return table


def depth(sid: SynsetId, index: TaxonomyIndex) -> int:
    """Minimum number of hypernym edges from ``sid`` up to its virtual root."""
    index.hypernyms(sid)  # raises on unknown ids
    try:
        return _depth_table(index)[sid]
    except KeyError:
        raise ValueError(f"{sid} is not reachable from any root") from None


def shortest_path(a: SynsetId, b: SynsetId, index: TaxonomyIndex) -> PathResult:
    """Shortest up-then-down path between two synsets of the same POS.

    Ties on path length go to the deepest ancestor, then to the smallest
    ``(pos, offset)``.
    """
    if a.pos is not b.pos:
        raise CrossPosError(f"cannot compare {a} with {b}")
    cache = _memo(index, "path")
    key = (a, b) if a.sort_key() <= b.sort_key() else (b, a)
    hit = cache.get(key)
    if hit is not None:
        return hit
    up_a = hypernym_closure(a, index)
    up_b = hypernym_closure(b, index)
    if len(up_b) < len(up_a):
        up_a, up_b = up_b, up_a
    best = None
    for node, da in up_a.items():
        db = up_b.get(node)
        if db is None:
            continue
        rank = (da + db, -depth(node, index), node.sort_key())
        if best is None or rank < best[0]:
            best = (rank, node)
    if best is None:
        # unreachable with virtual roots in place; kept for hand-built indexes
        raise ValueError(f"no common ancestor for {a} and {b}")
    (length, neg_depth, _), node = best
    result = PathResult(length, node, -neg_depth)
    cache[key] = result
    return result
