"""Seeded, deterministic instance factories for Halin graph families."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import BadParam
from .graph_core import EmbeddedTree, HalinGraph, build_embedded_tree, halin_from_tree


@dataclass(frozen=True)
class GenSpec:
    """Reproducible description of a generated instance."""

    family: str                      # wheel | kary | caterpillar | random
    params: Tuple[Tuple[str, int], ...] = ()
    seed: int = 0

    def to_jsonable(self) -> dict:
        return {"family": self.family, "params": dict(self.params), "seed": self.seed}


def gen_wheel(spokes: int) -> HalinGraph:
    """Wheel: a star hub plus the cycle through its ``spokes`` leaves."""
    if spokes < 3:
        raise BadParam(f"wheel needs >= 3 spokes, got {spokes}")
    return halin_from_tree(build_embedded_tree(0, {0: list(range(1, spokes + 1))}))


def gen_kary_rbt_halin(k: int, c: int, height: int) -> HalinGraph:
    """Recursively balanced substrate: root degree k, inner degree c.

    ``height`` counts levels below the root; height 1 is the star K_{1,k}.
    n = 1 + k(1 + c + ... + c^(height-1)).
    """
    if k < 3:
        raise BadParam(f"root degree must be >= 3, got {k}")
    if c < 2:
        raise BadParam(f"inner degree must be >= 2, got {c}")
    if height < 1:
        raise BadParam(f"height must be >= 1, got {height}")
    children: Dict[int, List[int]] = {}
    next_id = 1

    def grow(v: int, depth: int):
        nonlocal next_id
        if depth > height:
            return
        deg = k if v == 0 else c
        kids = list(range(next_id, next_id + deg))
        next_id += deg
        children[v] = kids
        for u in kids:
            grow(u, depth + 1)

    grow(0, 1)
    return halin_from_tree(build_embedded_tree(0, children))


def gen_caterpillar_halin(spine_len: int, leaves_per_spine: Sequence[int]) -> HalinGraph:
    """Halin graph over a caterpillar: a spine path with pendant leaves.

    The spine is rooted at its first vertex.  Degree constraints: with
    spine_len == 1 the single vertex needs >= 3 leaves; otherwise the two
    spine endpoints need >= 2 pendant leaves and interior spine vertices
    need >= 1 (so every internal vertex keeps degree >= 3 in the Halin
    graph).
    """
    if spine_len < 1:
        raise BadParam(f"spine length must be >= 1, got {spine_len}")
    leaves = list(leaves_per_spine)
    if len(leaves) != spine_len:
        raise BadParam(
            f"need one leaf count per spine vertex: {spine_len} != {len(leaves)}"
        )
    if spine_len == 1:
        if leaves[0] < 3:
            raise BadParam("single spine vertex needs >= 3 leaves")
    else:
        for i, cnt in enumerate(leaves):
            endpoint = i in (0, spine_len - 1)
            need = 2 if endpoint else 1
            if cnt < need:
                raise BadParam(
                    f"spine vertex {i} needs >= {need} leaves, got {cnt}"
                )

    children: Dict[int, List[int]] = {}
    next_id = spine_len
    for i in range(spine_len):
        kids = []
        # embedding: leaves first, then the next spine vertex, except the
        # root which splits its leaves around the spine to keep the
        # leaf cycle planar.
        pendant = list(range(next_id, next_id + leaves[i]))
        next_id += leaves[i]
        if i == 0 and spine_len > 1:
            kids = pendant[:1] + [i + 1] + pendant[1:]
        elif i < spine_len - 1:
            kids = pendant + [i + 1]
        else:
            kids = pendant
        children[i] = kids
    return halin_from_tree(build_embedded_tree(0, children))


def gen_random_halin(n_target: int, seed: int) -> HalinGraph:
    """Seeded random Halin graph with at least ``n_target`` vertices.

    Grows from K_{1,3} by repeatedly giving a random current leaf two or
    three children; stops once n_target is reached (the last step may
    overshoot by up to 2).  Identical (n_target, seed) pairs produce
    identical instances.
    """
    if n_target < 4:
        raise BadParam(f"n_target must be >= 4, got {n_target}")
    rng = random.Random(seed)
    children: Dict[int, List[int]] = {0: [1, 2, 3]}
    leaves = [1, 2, 3]
    next_id = 4
    n = 4
    while n < n_target:
        idx = rng.randrange(len(leaves))
        v = leaves.pop(idx)
        deg = rng.choice([2, 3])
        kids = list(range(next_id, next_id + deg))
        next_id += deg
        children[v] = kids
        leaves.extend(kids)
        n += deg
    return halin_from_tree(build_embedded_tree(0, children))


def generate(spec: GenSpec) -> HalinGraph:
    """Dispatch a GenSpec to its family generator."""
    params = dict(spec.params)
    if spec.family == "wheel":
        return gen_wheel(params["spokes"])
    if spec.family == "kary":
        return gen_kary_rbt_halin(params["k"], params["c"], params["h"])
    if spec.family == "caterpillar":
        counts = [params[f"l{i}"] for i in range(params["spine"])]
        return gen_caterpillar_halin(params["spine"], counts)
    if spec.family == "random":
        return gen_random_halin(params["n"], spec.seed)
    raise BadParam(f"unknown family {spec.family!r}")


def caterpillar_spec(spine: int, counts: Sequence[int]) -> GenSpec:
    params = [("spine", spine)] + [(f"l{i}", c) for i, c in enumerate(counts)]
    return GenSpec("caterpillar", tuple(params))


def all_caterpillar_halins_up_to(n_max: int) -> List[Tuple[GenSpec, HalinGraph]]:
    """Every caterpillar Halin instance with at most ``n_max`` vertices."""
    out = []
    for spine in range(1, n_max):
        mins = [3] if spine == 1 else [
            2 if i in (0, spine - 1) else 1 for i in range(spine)
        ]
        budget = n_max - spine

        def assign(i: int, left: int, acc: List[int]):
            if i == len(mins):
                spec = caterpillar_spec(spine, acc)
                out.append((spec, gen_caterpillar_halin(spine, acc)))
                return
            lo = mins[i]
            hi = left - sum(mins[i + 1:])
            for cnt in range(lo, hi + 1):
                assign(i + 1, left - cnt, acc + [cnt])

        if sum(mins) <= budget:
            assign(0, budget, [])
    return out


def standard_corpus(n_random: int = 50, random_n_target: int = 7,
                    seed0: int = 1000) -> List[Tuple[GenSpec, HalinGraph]]:
    """The evaluation corpus: wheels 3-8, all caterpillars n<=9, random n<=9."""
    corpus: List[Tuple[GenSpec, HalinGraph]] = []
    for spokes in range(3, 9):
        corpus.append((GenSpec("wheel", (("spokes", spokes),)), gen_wheel(spokes)))
    corpus.extend(all_caterpillar_halins_up_to(9))
    for i in range(n_random):
        spec = GenSpec("random", (("n", random_n_target),), seed=seed0 + i)
        corpus.append((spec, gen_random_halin(random_n_target, seed0 + i)))
    return corpus
