"""Plain-text renderings of permutations and their pile structure.

These are what ``cdspile analyze`` prints and what the golden regression
files pin down, so output must stay byte-stable.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from . import cds
from .counting import FactorizationPair, map_A_to_B1, map_shift
from .perm import Permutation, compose, disjoint_cycles
from .pile import (
    StrategicPile,
    adjacencies,
    cycle_product,
    expand,
    merge_graph,
    merges,
    ordered_pair_list,
    pairs,
    project,
    strategic_pile,
)

__all__ = [
    "render_pointers",
    "render_cds_step",
    "render_pile",
    "render_form",
    "render_pair_structure",
    "render_projection",
    "render_factorization_maps",
    "render_fixed_point_table",
    "render_analysis",
]


def _labels(pairs_: Iterable[tuple[int, int]], sep: str = " ") -> str:
    items = [f"b{x}{sep}b{y}" for x, y in pairs_]
    return ", ".join(items) if items else "none"


def render_pointers(p: Permutation) -> str:
    n = p.size
    cells = []
    for v in p.image:
        left = f"{cds.Pointer(v - 1)} " if v > 1 else ""
        right = f" {cds.Pointer(v)}" if v < n else ""
        cells.append(f"{left}{v}{right}")
    return " | ".join(cells)


def render_cds_step(p: Permutation, tries: Sequence[tuple[int, int]]) -> str:
    lines = [f"permutation: {p.to_one_line()}", f"pointers: {render_pointers(p)}"]
    for a, b in tries:
        head = f"context {cds.Pointer(a)} {cds.Pointer(b)}"
        try:
            out = cds.apply_cds(p, a, b)
        except cds.InvalidContextError:
            lines.append(f"{head}: invalid")
        else:
            lines.append(f"{head}: valid")
            lines.append(f"result: {out.to_one_line()}")
    return "\n".join(lines) + "\n"


def _pile_lines(p: Permutation, sp: StrategicPile) -> list[str]:
    return [
        f"SP = {sp.set_str()}",
        f"SP* = {sp}" if sp else "SP* = ()",
    ]


def render_pile(p: Permutation) -> str:
    sp = strategic_pile(p)
    lines = [
        f"permutation: {p.to_one_line()}",
        f"C = {disjoint_cycles(cycle_product(p))}",
        *_pile_lines(p, sp),
        f"sortable: {'no' if sp else 'yes'}",
    ]
    return "\n".join(lines) + "\n"


def render_form(p: Permutation) -> str:
    """The one-line form with pile members as ``bj`` and pair followers as ``bj+1``."""
    sp = strategic_pile(p)
    if not sp:
        return p.to_one_line()
    followers = {f for _, f in pairs(p)}
    cells = []
    for v in p.image:
        if v in sp.members:
            cells.append(f"b{sp.label(v)}")
        elif v in followers:
            cells.append(f"b{sp.label(v - 1)}+1")
        else:
            cells.append(str(v))
    return "[" + " ".join(cells) + "]"


def render_pair_structure(p: Permutation) -> str:
    sp = strategic_pile(p)
    lines = [f"permutation: {p.to_one_line()}", *_pile_lines(p, sp)]
    if sp:
        lines += [
            f"form: {render_form(p)}",
            f"sigma = {ordered_pair_list(p)}",
            f"merges: {_labels(merges(p))}",
        ]
    return "\n".join(lines) + "\n"


def render_projection(p: Permutation) -> str:
    adj = adjacencies(p)
    m = project(p)
    lines = [
        f"permutation: {p.to_one_line()}",
        f"adjacency at: {', '.join(map(str, adj))}",
        f"projection: {m.to_one_line()}",
    ]
    lines += [f"expansion {i}: {expand(m, i).to_one_line()}" for i in range(1, m.size + 1)]
    return "\n".join(lines) + "\n"


def render_factorization_maps(pair: FactorizationPair) -> str:
    g, d = pair.left, pair.right
    b = map_A_to_B1(pair)
    chain = [b]
    for _ in range(pair.n - 1):
        chain.append(map_shift(chain[-1]))
    lines = [
        f"n = {pair.n}",
        f"gamma = {g.to_cycles()}",
        f"delta = {d.to_cycles()}",
        f"gamma o delta = {compose(g, d).to_cycles()}",
        f"gamma1 = {b.left.to_cycles()}",
        f"delta1 = {b.right.to_cycles()}",
        f"gamma1 o delta1 = {compose(b.left, b.right).to_cycles()}",
        "delta chain: " + " -> ".join(f.right.to_cycles() for f in chain),
    ]
    return "\n".join(lines) + "\n"


def render_fixed_point_table(perms: Iterable[Permutation]) -> str:
    rows = []
    for p in perms:
        sp = strategic_pile(p)
        c = disjoint_cycles(cycle_product(p))
        zero = next((cyc for cyc in c.nontrivial() if 0 in cyc), (0,))
        rows.append(f"{p.to_one_line()} | ({' '.join(map(str, zero))}) | {sp.set_str()} | {len(sp)}")
    return "\n".join(rows) + "\n"


def render_analysis(p: Permutation, reach: bool) -> str:
    sp = strategic_pile(p)
    lines = [
        f"permutation: {p.to_one_line()}",
        f"C = {disjoint_cycles(cycle_product(p))}",
        *_pile_lines(p, sp),
    ]
    if sp:
        graph = merge_graph(p)
        lines += [
            f"form: {render_form(p)}",
            f"sigma = {ordered_pair_list(p)}",
            "pairs: " + " ".join(f"({a} {b})" for a, b in pairs(p)),
            f"merges: {_labels(merges(p))}",
            f"merge graph: {_labels(sorted(graph.edges), '->')}",
        ]
    lines.append(f"sortable: {'no' if sp else 'yes'}")
    if reach:
        found = sorted(cds.reachable_fixed_points(p), key=lambda f: (f.image[0] != 1, f.image[0]))
        lines.append("reachable fixed points: " + ", ".join(f.to_one_line() for f in found))
    return "\n".join(lines) + "\n"
