"""Two trees on numerical semigroups and exact per-depth counts.

The generator-removal tree contains every numerical semigroup once:
its root is the full set of non-negative integers, and the children of
a semigroup of genus g are obtained by removing one minimal generator
larger than the Frobenius number (the parent map adjoins the Frobenius
number back).  Depth equals genus, so a depth-first traversal from the
root enumerates each genus exhaustively.

The fixed-genus tree keeps the genus constant instead: the parent of a
non-ordinary semigroup is its ordinarization transform, the root is the
ordinary semigroup, and the depth of a node is its ordinarization
number.  Children are produced by removing an effective generator `a`
(a minimal generator above the Frobenius number) and inserting a new
member `b` below the multiplicity; a candidate survives iff it is still
additively closed, which a single shift test decides because removing a
minimal generator cannot break any old pair.

Counting is streaming: traversals never materialize a whole genus
except in the capped DOT export.  Worker processes count disjoint
subtrees rooted at a fixed split depth and the per-(genus, depth)
tallies merge by addition, so results do not depend on the worker
count.
"""

from __future__ import annotations

import multiprocessing
import os
from dataclasses import dataclass
from typing import Callable, Iterator, NamedTuple, Optional

from .semigroup import Semigroup

_ROOT = (0b11, 0, -1, 0)  # bitmap, genus, frobenius, ordinarization number


class TooLarge(RuntimeError):
    """Tree export would materialize more nodes than the configured cap."""


class TreeEdge(NamedTuple):
    parent: Semigroup
    child: Semigroup
    depth_of_child: int


@dataclass(frozen=True)
class CountMatrix:
    """Exact counts by genus (row) and ordinarization number (column).

    Row g has floor(g/2) + 1 entries; cells outside that range are zero.
    64-bit counters overflow only past genus 60 or so, far beyond what a
    traversal can reach.
    """

    rows: tuple[tuple[int, ...], ...]

    @property
    def g_max(self) -> int:
        return len(self.rows) - 1

    def row(self, g: int) -> tuple[int, ...]:
        return self.rows[g]

    def cell(self, g: int, r: int) -> int:
        row = self.rows[g]
        return row[r] if 0 <= r < len(row) else 0

    def genus_total(self, g: int) -> int:
        return sum(self.rows[g])

    def to_csv(self) -> str:
        lines = ["g,r,count"]
        for g, row in enumerate(self.rows):
            lines.extend(f"{g},{r},{count}" for r, count in enumerate(row))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_csv(cls, text: str) -> "CountMatrix":
        lines = text.strip().splitlines()
        if not lines or lines[0] != "g,r,count":
            raise ValueError("missing 'g,r,count' header")
        rows: list[list[int]] = []
        for line in lines[1:]:
            g, r, count = map(int, line.split(","))
            if g == len(rows):
                rows.append([])
            if g != len(rows) - 1 or r != len(rows[g]):
                raise ValueError(f"out-of-order row {line!r}")
            rows[g].append(count)
        return cls(tuple(tuple(row) for row in rows))

    def to_json_obj(self) -> dict:
        return {
            "g_max": self.g_max,
            "rows": [{"g": g, "counts": list(row)} for g, row in enumerate(self.rows)],
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "CountMatrix":
        rows = [tuple(entry["counts"]) for entry in obj["rows"]]
        return cls(tuple(rows))


# ----------------------------------------------------------------------
# raw engines (bitmap ints on the stack, no Semigroup objects)

def _effective_generators(bitmap: int, genus: int, frobenius: int) -> int:
    """Bitmask of minimal generators in (frobenius, 2*genus + 1]."""
    nonzero = bitmap & -2
    sums = 0
    e = bitmap & ((1 << (genus + 1)) - 2)
    while e:
        low = e & -e
        sums |= nonzero << (low.bit_length() - 1)
        e ^= low
    return nonzero & ~sums & ((1 << (2 * genus + 2)) - (1 << (frobenius + 1)))


def _count_into(rows: list[list[int]], root: tuple[int, int, int, int], g_max: int) -> None:
    """Tally (genus, ordinarization number) for every node of the subtree."""
    stack = [root]
    push = stack.append
    pop = stack.pop
    while stack:
        bitmap, g, frob, r = pop()
        rows[g][r] += 1
        if g == g_max:
            continue
        g1 = g + 1
        head = g + g + 2
        nonzero = bitmap & -2
        sums = 0
        e = bitmap & ((1 << g1) - 2)
        while e:
            low = e & -e
            sums |= nonzero << (low.bit_length() - 1)
            e ^= low
        eff = nonzero & ~sums & ((1 << head) - (1 << (frob + 1)))
        if not eff:
            continue
        # effective generators sit above the Frobenius number, hence above g,
        # so the child count of members <= g+1 only shifts at a == g+1
        rbase = r + ((bitmap >> g1) & 1)
        if g1 == g_max:
            row = rows[g1]
            while eff:
                low = eff & -eff
                row[rbase - (low.bit_length() - 1 == g1)] += 1
                eff ^= low
        else:
            extended = bitmap | (3 << head)
            while eff:
                low = eff & -eff
                a = low.bit_length() - 1
                push((extended ^ low, g1, a, rbase - (a == g1)))
                eff ^= low


def _empty_rows(g_max: int) -> list[list[int]]:
    return [[0] * (g // 2 + 1) for g in range(g_max + 1)]


def _count_worker(payload: tuple[list[tuple[int, int, int, int]], int]) -> list[list[int]]:
    tasks, g_max = payload
    rows = _empty_rows(g_max)
    for task in tasks:
        _count_into(rows, task, g_max)
    return rows


def _walk(g_max: int, visit: Callable[[int, int, int, int], None]) -> None:
    """Call visit(bitmap, genus, frobenius, r) for every node with genus <= g_max."""
    stack = [_ROOT]
    while stack:
        node = stack.pop()
        visit(*node)
        bitmap, g, frob, r = node
        if g == g_max:
            continue
        g1 = g + 1
        eff = _effective_generators(bitmap, g, frob)
        extended = bitmap | (3 << (g + g + 2))
        rbase = r + ((bitmap >> g1) & 1)
        while eff:
            low = eff & -eff
            a = low.bit_length() - 1
            stack.append((extended ^ low, g1, a, rbase - (a == g1)))
            eff ^= low


def _genus_bitmaps(g: int) -> Iterator[int]:
    """Every semigroup of genus g, as a raw bitmap, in deterministic order."""
    stack = [(0b11, 0, -1)]
    while stack:
        bitmap, gg, frob = stack.pop()
        if gg == g:
            yield bitmap
            continue
        eff = _effective_generators(bitmap, gg, frob)
        extended = bitmap | (3 << (gg + gg + 2))
        while eff:
            low = eff & -eff
            stack.append((extended ^ low, gg + 1, low.bit_length() - 1))
            eff ^= low


def _make(bitmap: int, genus: int) -> Semigroup:
    return Semigroup._from_bitmap(bitmap, genus)


def _resolve_workers(workers: int) -> int:
    if workers < 0:
        raise ValueError("workers must be >= 0")
    return workers if workers else (os.cpu_count() or 1)


# ----------------------------------------------------------------------
# public operations

def children_in_T(s: Semigroup) -> list[Semigroup]:
    """Genus g+1 children: remove one minimal generator above the Frobenius
    number.  Sorted by the removed generator."""
    eff = _effective_generators(s.bitmap, s.genus, s.frobenius)
    extended = s.bitmap | (3 << (2 * s.genus + 2))
    out = []
    while eff:
        low = eff & -eff
        out.append(_make(extended ^ low, s.genus + 1))
        eff ^= low
    return out


def _tg_children_raw(bitmap: int, genus: int) -> list[tuple[int, int, int]]:
    """(child bitmap, removed a, added b) triples, ordered by (b, a).

    A candidate is kept iff still additively closed.  Old member pairs
    cannot sum to the removed minimal generator, so closure reduces to
    checking the sums that involve the new member b.
    """
    mask = (1 << (2 * genus + 2)) - 1
    frob = (~bitmap & mask).bit_length() - 1
    nonzero = bitmap & -2
    mult = (nonzero & -nonzero).bit_length() - 1
    eff = _effective_generators(bitmap, genus, frob)
    gens = []
    while eff:
        low = eff & -eff
        gens.append(low.bit_length() - 1)
        eff ^= low
    out = []
    for b in range(1, mult):
        added = 1 << b
        for a in gens:
            child = (bitmap ^ (1 << a)) | added
            if not ((child & -2) << b) & mask & ~child:
                out.append((child, a, b))
    return out


def children_in_Tg(s: Semigroup) -> list[Semigroup]:
    """Same-genus children: every semigroup whose ordinarization transform
    is s.  Ordered by (added member, removed generator)."""
    out = []
    for child, _a, _b in _tg_children_raw(s.bitmap, s.genus):
        kid = _make(child, s.genus)
        if kid.ordinarize() != s:  # closure already guarantees this
            continue
        out.append(kid)
    assert len({kid.bitmap for kid in out}) == len(out), "duplicate (a, b) candidates"
    return out


def enumerate_genus(g: int, visitor: Optional[Callable[[Semigroup], None]] = None) -> int:
    """Visit every semigroup of genus g exactly once (depth-first from the
    root, deterministic order); returns how many there are."""
    if g < 0:
        raise ValueError("genus must be non-negative")
    count = 0
    for bitmap in _genus_bitmaps(g):
        count += 1
        if visitor is not None:
            visitor(_make(bitmap, g))
    return count


def count_matrix(g_max: int, *, workers: int = 1, split_depth: int = 8) -> CountMatrix:
    """Exact table of counts by genus and ordinarization number, g <= g_max.

    With several workers, subtrees rooted at ``split_depth`` are counted
    in separate processes and merged by addition.
    """
    if g_max < 0:
        raise ValueError("g_max must be non-negative")
    workers = _resolve_workers(workers)
    rows = _empty_rows(g_max)
    if workers <= 1 or g_max <= split_depth:
        _count_into(rows, _ROOT, g_max)
    else:
        tasks: list[tuple[int, int, int, int]] = []

        def gather(bitmap: int, g: int, frob: int, r: int) -> None:
            if g == split_depth:
                tasks.append((bitmap, g, frob, r))
            else:
                rows[g][r] += 1

        _walk(split_depth, gather)
        chunk = max(1, len(tasks) // (workers * 4))
        payloads = [(tasks[i : i + chunk], g_max) for i in range(0, len(tasks), chunk)]
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(workers) as pool:
            for part in pool.imap_unordered(_count_worker, payloads):
                for g in range(split_depth, g_max + 1):
                    row = rows[g]
                    for r, c in enumerate(part[g]):
                        row[r] += c
    return CountMatrix(tuple(tuple(row) for row in rows))


def tg_bfs_row(g: int) -> list[int]:
    """Counts per depth of the fixed-genus tree, by breadth-first walk from
    the ordinary semigroup."""
    root = Semigroup.ordinary(g)
    frontier = [root.bitmap]
    row = []
    while frontier:
        row.append(len(frontier))
        frontier = [child for bm in frontier for child, _a, _b in _tg_children_raw(bm, g)]
    return row


def count_by_ordinarization(g: int, *, workers: int = 1, check_agreement: bool = False) -> list[int]:
    """Counts n_{g,r} for r = 0 .. floor(g/2).

    The production route groups the genus enumeration by ordinarization
    number; with ``check_agreement`` the independent breadth-first walk
    of the fixed-genus tree is run as well and any mismatch raises.
    """
    row = list(count_matrix(g, workers=workers).row(g))
    if check_agreement:
        bfs = tg_bfs_row(g)
        bfs += [0] * (len(row) - len(bfs))
        if bfs != row:
            raise RuntimeError(f"count disagreement at genus {g}: bfs={bfs} enumerate={row}")
    return row


def iter_tg_edges(g: int) -> Iterator[TreeEdge]:
    """Edges of the fixed-genus tree in breadth-first order."""
    depth = 0
    frontier = [Semigroup.ordinary(g)]
    while frontier:
        depth += 1
        nxt = []
        for parent in frontier:
            for bm, _a, _b in _tg_children_raw(parent.bitmap, g):
                child = _make(bm, g)
                nxt.append(child)
                yield TreeEdge(parent, child, depth)
        frontier = nxt


def export_tree_dot(g: int, *, node_cap: int = 100_000) -> str:
    """DOT text for the fixed-genus tree.

    Node ids are canonical gap strings; each node carries its depth.
    Raises TooLarge once more than ``node_cap`` nodes materialize.
    """
    if g < 0:
        raise ValueError("genus must be non-negative")
    nodes: list[tuple[str, int]] = []
    edges: list[tuple[str, str]] = []
    depth = 0
    frontier = [Semigroup.ordinary(g).bitmap]
    while frontier:
        nxt = []
        for bm in frontier:
            nodes.append((_make(bm, g).gap_string(), depth))
            if len(nodes) > node_cap:
                raise TooLarge(f"fixed-genus tree for g={g} exceeds {node_cap} nodes")
        for bm in frontier:
            label = _make(bm, g).gap_string()
            for child, _a, _b in _tg_children_raw(bm, g):
                edges.append((label, _make(child, g).gap_string()))
                nxt.append(child)
        frontier = nxt
        depth += 1
    lines = [f'digraph "Tg_{g}" {{']
    lines.extend(f'  "{label}" [label="{label}", depth={d}];' for label, d in nodes)
    lines.extend(f'  "{a}" -> "{b}";' for a, b in edges)
    lines.append("}")
    return "\n".join(lines) + "\n"
