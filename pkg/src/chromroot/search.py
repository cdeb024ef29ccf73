"""Edge-replacement search: splice series-parallel gadgets into K_n minus an edge
and keep the composites whose chromatic polynomial is divisible by a target.

Gadgets are enumerated once per class modulo commutativity of parallel
connection and associativity of both connections.  The canonical form is an
n-ary tree: a series node holds an ordered tuple of >= 2 children, none of
them series nodes; a parallel node holds a sorted tuple of >= 2 children,
none of them parallel nodes.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .poly import IntPoly, exact_div, is_divisible
from .twoterminal import (
    ConstructionExpr,
    Edge,
    K,
    Kme,
    Parallel,
    PartitionedPoly,
    Series,
    eval_construction,
    parallel_compose,
    series_compose,
    to_text,
)

__all__ = [
    "SearchTask",
    "SearchHit",
    "canonical_gadgets",
    "enumerate_gadgets",
    "to_expr",
    "gadget_vertices",
    "run_search",
]

log = logging.getLogger(__name__)

# canonical trees are plain tuples so they hash, sort and pickle cheaply:
#   ("edge",) | ("K", n) | ("Kme", n) | ("S", children) | ("P", children)
_LEAF_RANK = {"edge": 0, "K": 1, "Kme": 2}
_OP_RANK = {"S": 1, "P": 2}


def _leaf_tuple(e: ConstructionExpr) -> tuple:
    if isinstance(e, Edge):
        return ("edge",)
    if isinstance(e, K):
        return ("K", e.n)
    if isinstance(e, Kme):
        return ("Kme", e.n)
    raise TypeError(f"gadget leaves must be edge, K(n) or Kme(n), not {e!r}")


@lru_cache(maxsize=None)
def _size(t: tuple) -> int:
    if t[0] in _OP_RANK:
        return sum(_size(c) for c in t[1])
    return 1


@lru_cache(maxsize=None)
def _order_key(t: tuple):
    """(leaf count, operator, children) -- total and deterministic."""
    if t[0] in _OP_RANK:
        return (_size(t), _OP_RANK[t[0]], tuple(_order_key(c) for c in t[1]))
    return (1, 0, (_LEAF_RANK[t[0]],) + t[1:])


def canonical_gadgets(max_edges: int, extra_leaves: Sequence[ConstructionExpr] = ()) -> Iterator[tuple]:
    """Canonical n-ary gadget trees with at most ``max_edges`` leaves, by size."""
    if max_edges < 1:
        raise ValueError("max_edges must be >= 1")
    leaves = [("edge",)] + [_leaf_tuple(e) for e in extra_leaves]
    leaves = sorted(set(leaves), key=_order_key)

    series: dict[int, list[tuple]] = {}
    parallel: dict[int, list[tuple]] = {}
    seqs: dict[int, list[tuple]] = {}  # sequences (length >= 1) of non-series items

    def non_series(k):
        return (leaves if k == 1 else []) + parallel.get(k, [])

    def non_parallel(k):
        return (leaves if k == 1 else []) + series.get(k, [])

    for k in range(1, max_edges + 1):
        # parallel nodes of size k: multisets of >= 2 non-parallel items
        pool = sorted((x for i in range(1, k) for x in non_parallel(i)), key=_order_key)
        sizes = [_size(x) for x in pool]
        par_k = []

        def multisets(start, remaining, chosen):
            if remaining == 0:
                if len(chosen) >= 2:
                    par_k.append(("P", tuple(chosen)))
                return
            for j in range(start, len(pool)):
                if sizes[j] > remaining:
                    break
                chosen.append(pool[j])
                multisets(j, remaining - sizes[j], chosen)
                chosen.pop()

        multisets(0, k, [])
        parallel[k] = sorted(par_k, key=_order_key)

        # series nodes of size k: a non-series head followed by a non-empty sequence
        ser_k = [("S", (head,) + rest) for i in range(1, k) for head in non_series(i) for rest in seqs[k - i]]
        series[k] = sorted(ser_k, key=_order_key)
        seqs[k] = [(x,) for x in non_series(k)] + [node[1] for node in ser_k]

        yield from sorted(non_series(k) + series[k], key=_order_key)


def to_expr(t: tuple) -> ConstructionExpr:
    if t[0] == "edge":
        return Edge()
    if t[0] == "K":
        return K(t[1])
    if t[0] == "Kme":
        return Kme(t[1])
    node = Series if t[0] == "S" else Parallel
    out = to_expr(t[1][0])
    for c in t[1][1:]:
        out = node(out, to_expr(c))
    return out


def enumerate_gadgets(max_edges: int, extra_leaves: Sequence[ConstructionExpr] = ()) -> Iterator[ConstructionExpr]:
    for t in canonical_gadgets(max_edges, extra_leaves):
        yield to_expr(t)


def gadget_vertices(t: tuple) -> int:
    if t[0] == "edge":
        return 2
    if t[0] in ("K", "Kme"):
        return t[1]
    kids = [gadget_vertices(c) for c in t[1]]
    glued = len(kids) - 1
    return sum(kids) - (glued if t[0] == "S" else 2 * glued)


def _eval(t: tuple, memo: dict) -> PartitionedPoly:
    hit = memo.get(t)
    if hit is not None:
        return hit
    if t[0] in _OP_RANK:
        compose = series_compose if t[0] == "S" else parallel_compose
        kids = t[1]
        out = _eval(kids[0], memo)
        for c in kids[1:]:
            out = compose(out, _eval(c, memo))
    else:
        out = eval_construction(to_expr(t))
    memo[t] = out
    return out


@dataclass(frozen=True)
class SearchTask:
    gadget: ConstructionExpr
    host_n: int
    target: IntPoly


@dataclass(frozen=True)
class SearchHit:
    task: SearchTask
    vertices: int
    chromatic: IntPoly
    cofactor: IntPoly

    @property
    def gadget_text(self) -> str:
        return to_text(self.task.gadget)

    def sort_key(self):
        return (self.vertices, self.task.host_n, self.gadget_text)

    def to_line(self) -> str:
        return (
            f"host=Kme({self.task.host_n}); gadget={self.gadget_text}; vertices={self.vertices}; "
            f"P={self.chromatic.to_machine()}; cofactor={self.cofactor.to_machine()}"
        )


def _search_batch(batch: list[tuple], hosts: tuple[int, ...], target: IntPoly) -> list[SearchHit]:
    memo: dict = {}
    host_polys = {n: eval_construction(Kme(n)) for n in hosts}
    hits = []
    for t in batch:
        p = _eval(t, memo)
        for n in hosts:
            total = parallel_compose(host_polys[n], p).total()
            if total.is_zero or not is_divisible(total, target):
                continue
            task = SearchTask(to_expr(t), n, target)
            hits.append(SearchHit(task, n + gadget_vertices(t) - 2, total, exact_div(total, target)))
    return hits


def run_search(
    hosts: Sequence[int],
    max_edges: int,
    target: IntPoly,
    workers: int = 1,
    batch_size: int = 256,
    extra_leaves: Sequence[ConstructionExpr] = (),
) -> list[SearchHit]:
    """All (gadget, host) composites whose chromatic polynomial the target divides.

    Output is sorted by (vertices, host, gadget text), so it does not depend on
    ``workers``.
    """
    hosts = tuple(sorted(set(hosts)))
    if any(n < 3 for n in hosts):
        raise ValueError("hosts must be >= 3")
    if not target.is_monic() or target.degree < 1:
        raise ValueError("target must be monic of degree >= 1")
    gadgets = list(canonical_gadgets(max_edges, extra_leaves))
    batches = [gadgets[i : i + batch_size] for i in range(0, len(gadgets), batch_size)]
    log.info("searching %d gadgets x %d hosts in %d batches", len(gadgets), len(hosts), len(batches))
    hits: list[SearchHit] = []
    if workers <= 1:
        for b in batches:
            hits.extend(_search_batch(b, hosts, target))
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_search_batch, batches, [hosts] * len(batches), [target] * len(batches)):
                hits.extend(part)
    hits.sort(key=SearchHit.sort_key)
    return hits
