"""Admissible contractions of vertex-weighted multigraphs.

A contraction merges an adjacent pair of vertices: the merged vertex takes
the sum of the two weights, multiplicities to every bystander add up, and
the edges inside the pair disappear.  A contraction is *admissible* for a
non-negative integer ``l`` below the pair multiplicity when

* every bystander vertex has degree at least 3,
* the pair can be ordered ``(v, w)`` with ``wt(v) >= l + 1`` and
  ``wt(w) >= l + 2``, and
* both endpoints keep degree at least 3 after discounting the pair edges
  and adding ``l`` back (``deg - mult + l >= 3``).

A graph is admissibly contractible when some sequence of admissible
contractions reduces it to a single vertex; a
:class:`ContractionCertificate` is a replayable witness of such a
sequence.  This module provides the single-step arithmetic, certificate
verification, an exhaustive memoized decision search, a brute-force test
oracle, and the constructive procedure that certifies every completely
multipartite graph whose vertices all have weight >= 2 and at least four
distinct neighbours.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .multigraph import (
    DEFAULT_MAX_VERTICES,
    BoundExceededError,
    GraphError,
    Partition,
    UnknownVertexError,
    WeightedMultigraph,
    builtin,
    canonical_form,
    find_forbidden_triple,
    is_spanning_submultigraph,
    multipartite_partition,
)


class NotAdjacentError(GraphError):
    """Contraction requested on a non-adjacent (or identical) pair."""


class NotSpanningError(GraphError):
    """Certificate lift requested along a non-spanning embedding."""


class PreconditionError(GraphError):
    """A structural precondition failed; ``witness`` names the offender."""

    def __init__(self, message: str, witness: object = None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class ContractionStep:
    """One merge: ``pair`` in the ordering that satisfied the weight bounds,
    the parameter ``l``, and the id given to the merged vertex."""

    pair: tuple[str, str]
    l: int
    merged: str

    def to_json_dict(self) -> dict:
        return {"pair": list(self.pair), "l": self.l, "merged": self.merged}

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "ContractionStep":
        try:
            u, v = data["pair"]
            return cls((u, v), data["l"], data["merged"])
        except (KeyError, TypeError, ValueError) as exc:
            raise GraphError(f"malformed step document: {exc}") from None


@dataclass(frozen=True)
class ContractionCertificate:
    """Replayable witness that ``initial`` contracts down to a singleton."""

    initial: WeightedMultigraph
    steps: tuple[ContractionStep, ...]

    def __len__(self) -> int:
        return len(self.steps)

    def replay(self) -> list[WeightedMultigraph]:
        """All intermediate graphs, starting at ``initial``."""
        graphs = [self.initial]
        for step in self.steps:
            graphs.append(contract(graphs[-1], step.pair, step.merged))
        return graphs

    def final_graph(self) -> WeightedMultigraph:
        return self.replay()[-1]

    def to_json_dict(self) -> dict:
        return {
            "initial": self.initial.to_json_dict(),
            "steps": [s.to_json_dict() for s in self.steps],
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "ContractionCertificate":
        try:
            initial = WeightedMultigraph.from_json_dict(data["initial"])
            steps = tuple(ContractionStep.from_json_dict(s) for s in data["steps"])
        except (KeyError, TypeError) as exc:
            raise GraphError(f"malformed certificate document: {exc}") from None
        return cls(initial, steps)


# ------------------------------------------------------------------ one step


def next_merged_id(g: WeightedMultigraph) -> str:
    """Smallest ``m<k>`` not already used as a vertex id."""
    k = 1
    while f"m{k}" in g:
        k += 1
    return f"m{k}"


def contract(g: WeightedMultigraph, pair: tuple[str, str], merged: str | None = None) -> WeightedMultigraph:
    """Merge an adjacent pair into one vertex.

    The merged vertex weighs ``wt(v) + wt(w)`` and is joined to every
    bystander ``x`` by ``mult(v, x) + mult(w, x)`` edges; the pair's own
    edges vanish.  The result does not depend on any admissibility
    parameter.  ``merged`` defaults to a fresh ``m<k>`` id.
    """
    v, w = pair
    pair_mult = g.multiplicity(v, w)
    if pair_mult < 1:
        raise NotAdjacentError(f"vertices {v!r} and {w!r} are not adjacent")
    if merged is None:
        merged = next_merged_id(g)
    elif merged in g and merged not in (v, w):
        raise GraphError(f"merged id {merged!r} collides with an existing vertex")
    weights = {x: wx for x, wx in g._weights.items() if x != v and x != w}
    weights[merged] = g.weight(v) + g.weight(w)
    adj: dict[str, dict[str, int]] = {merged: {}}
    for x in g.vertices:
        if x == v or x == w:
            continue
        row: dict[str, int] = {}
        to_merged = 0
        for y, m in g._adj[x].items():
            if y == v or y == w:
                to_merged += m
            else:
                row[y] = m
        if to_merged:
            row[merged] = to_merged
            adj[merged][x] = to_merged
        adj[x] = row
    return WeightedMultigraph._from_parts(weights, adj)


def feasible_l_range(g: WeightedMultigraph, v: str, w: str) -> tuple[int, ...]:
    """All ``l`` for which contracting the ordered pair ``(v, w)`` is admissible.

    Evaluates each defining condition directly for every candidate
    ``0 <= l < mult(v, w)``.  An empty result means this ordering admits no
    admissible contraction; the unordered pair is admissible iff one of its
    two orderings yields a non-empty result.
    """
    mult = g.multiplicity(v, w)
    if v == w or mult < 1:
        raise NotAdjacentError(f"vertices {v!r} and {w!r} are not adjacent")
    for x in g.vertices:
        if x != v and x != w and g.degree(x) < 3:
            return ()
    deg_v = g.degree(v)
    deg_w = g.degree(w)
    wt_v = g.weight(v)
    wt_w = g.weight(w)
    out = []
    for l in range(mult):
        if wt_v >= l + 1 and wt_w >= l + 2 and deg_v - mult + l >= 3 and deg_w - mult + l >= 3:
            out.append(l)
    return tuple(out)


def _best_step(g: WeightedMultigraph, u: str, v: str) -> tuple[int, tuple[str, str]] | None:
    """Minimal feasible ``l`` over both orderings of ``{u, v}``.

    Interval form of the admissibility conditions; the scan in
    :func:`feasible_l_range` is the independent cross-check.
    """
    mult = g._adj[u].get(v, 0)
    if mult < 1:
        return None
    weights = g._weights
    adj = g._adj
    for x in g._vertices:
        if x != u and x != v and sum(adj[x].values()) < 3:
            return None
    deg_u = sum(adj[u].values())
    deg_v = sum(adj[v].values())
    lo = max(0, 3 - deg_u + mult, 3 - deg_v + mult)
    if lo >= mult:
        return None
    for a, b in ((u, v), (v, u)):
        hi = min(mult - 1, weights[a] - 1, weights[b] - 2)
        if lo <= hi:
            return lo, (a, b)
    return None


# ------------------------------------------------------------------ verify


def verify_certificate(cert: ContractionCertificate, require_singleton: bool = True) -> bool:
    """Replay a certificate, checking admissibility of every step.

    Each step must record an ``l`` feasible under at least one ordering of
    its pair in the graph the step applies to.  With ``require_singleton``
    the replay must end in a single vertex carrying the full initial
    weight; switch it off to check a certificate prefix.  Steps that name
    unknown vertices raise :class:`UnknownVertexError`.
    """
    g = cert.initial
    for step in cert.steps:
        v, w = step.pair
        if v not in g:
            raise UnknownVertexError(f"step references missing vertex {v!r}")
        if w not in g:
            raise UnknownVertexError(f"step references missing vertex {w!r}")
        if v == w or g.multiplicity(v, w) < 1:
            return False
        if step.l not in feasible_l_range(g, v, w) and step.l not in feasible_l_range(g, w, v):
            return False
        g = contract(g, (v, w), step.merged)
    if require_singleton:
        if not g.is_singleton():
            return False
        if g.total_weight() != cert.initial.total_weight():
            return False
    return True


# ------------------------------------------------------------------ search

_MEMO_MIN_VERTICES = 5


def decide_contractible(
    g: WeightedMultigraph,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    memo: set | None = None,
) -> ContractionCertificate | None:
    """Exhaustive search for an admissible contraction sequence.

    Depth-first over adjacent pairs in sorted order, memoizing failed
    states by canonical form, so the returned certificate (with the
    minimal feasible ``l`` per step) is deterministic.  Returns ``None``
    only after exhausting every admissible sequence.  ``memo`` may be
    shared across calls to reuse failure knowledge.
    """
    if g.vertex_count > max_vertices:
        raise BoundExceededError(
            f"contractibility search limited to {max_vertices} vertices, got {g.vertex_count}"
        )
    if g.vertex_count == 0:
        return None
    failed = memo if memo is not None else set()

    def search(h: WeightedMultigraph, name_index: int) -> list[ContractionStep] | None:
        if h.vertex_count == 1:
            return []
        key = None
        if h.vertex_count >= _MEMO_MIN_VERTICES:
            key = canonical_form(h, max_vertices)
            if key in failed:
                return None
        for u, v in h.adjacent_pairs():
            pick = _best_step(h, u, v)
            if pick is None:
                continue
            l, pair = pick
            k = name_index
            while f"m{k}" in h:
                k += 1
            merged = f"m{k}"
            rest = search(contract(h, pair, merged), k + 1)
            if rest is not None:
                rest.insert(0, ContractionStep(pair, l, merged))
                return rest
        if key is not None:
            failed.add(key)
        return None

    steps = search(g, 1)
    if steps is None:
        return None
    return ContractionCertificate(g, tuple(steps))


def brute_force_oracle(
    g: WeightedMultigraph,
    max_vertices: int = 5,
    max_total_multiplicity: int = 12,
) -> bool:
    """Independent contractibility oracle: enumerate every sequence.

    No memoization and no pruning beyond per-step admissibility, so the
    answer is trusted only through the definitions.  Size bounds keep the
    blow-up harmless; both can be raised explicitly for exhaustive
    comparison runs.
    """
    if g.vertex_count > max_vertices:
        raise BoundExceededError(f"oracle limited to {max_vertices} vertices")
    if g.total_multiplicity() > max_total_multiplicity:
        raise BoundExceededError(f"oracle limited to total multiplicity {max_total_multiplicity}")

    def exhaust(h: WeightedMultigraph) -> bool:
        if h.vertex_count == 1:
            return True
        for u, v in h.adjacent_pairs():
            if _best_step(h, u, v) is None:
                continue
            if exhaust(contract(h, (u, v))):
                return True
        return False

    return exhaust(g)


# ------------------------------------------------------------------ lifting


def lift_certificate(
    cert: ContractionCertificate,
    g: WeightedMultigraph,
    embedding: Mapping[str, str],
) -> ContractionCertificate:
    """Transport a certificate along a spanning embedding.

    If ``cert`` verifies for its own graph and that graph is a spanning
    submultigraph of ``g`` via ``embedding``, the same pair sequence with
    the same ``l`` values is admissible in ``g``: weights and
    multiplicities only ever grow under the embedding, and they keep
    growing step by step because contraction adds them up.
    """
    if not is_spanning_submultigraph(cert.initial, g, embedding):
        raise NotSpanningError("embedding does not exhibit a spanning submultigraph")
    if not verify_certificate(cert):
        raise GraphError("certificate does not verify for its own initial graph")
    phi = dict(embedding)
    h = cert.initial
    host = g
    out = []
    name_index = 1
    for step in cert.steps:
        v, w = step.pair
        gv, gw = phi[v], phi[w]
        while f"m{name_index}" in host:
            name_index += 1
        gm = f"m{name_index}"
        name_index += 1
        host = contract(host, (gv, gw), gm)
        h = contract(h, (v, w), step.merged)
        del phi[v], phi[w]
        phi[step.merged] = gm
        out.append(ContractionStep((gv, gw), step.l, gm))
    return ContractionCertificate(g, tuple(out))


# ------------------------------------------------------------------ multipartite procedure


def _require_multipartite(g: WeightedMultigraph) -> Partition:
    part = multipartite_partition(g)
    if part is None:
        triple = find_forbidden_triple(g)
        raise PreconditionError(
            f"graph is not completely multipartite; forbidden triple {triple}",
            witness=triple,
        )
    return part


def absorb_submultigraph(
    g: WeightedMultigraph,
    h_vertices: Iterable[str],
) -> tuple[tuple[ContractionStep, ...], WeightedMultigraph]:
    """Contract everything outside ``h_vertices`` into it, one l=0 step at a time.

    Requires ``g`` completely multipartite with all weights >= 2, and every
    mutually non-adjacent subset of ``h_vertices`` no larger than
    ``len(h_vertices) - 4``.  That bound forces at least four neighbours
    inside the kept set for every vertex, so each outside vertex can be
    merged into an adjacent kept vertex admissibly with ``l = 0``.  Returns
    the certificate prefix and the reduced graph, whose vertex set is
    exactly ``h_vertices`` (the kept set then spans it).
    """
    h_set = frozenset(h_vertices)
    for v in h_set:
        if v not in g:
            raise UnknownVertexError(f"unknown vertex {v!r}")
    part = _require_multipartite(g)
    for v in g.vertices:
        if g.weight(v) < 2:
            raise PreconditionError(f"vertex {v!r} has weight {g.weight(v)} < 2", witness=v)
    limit = len(h_set) - 4
    for cls in part.classes:
        inside = tuple(sorted(cls & h_set))
        if len(inside) > limit:
            raise PreconditionError(
                f"mutually non-adjacent set {inside} inside the kept set exceeds size {limit}",
                witness=inside,
            )
    steps: list[ContractionStep] = []
    current = g
    while current.vertex_count > len(h_set):
        w = min(x for x in current.vertices if x not in h_set)
        targets = [u for u in current.neighbors(w) if u in h_set]
        if not targets or 0 not in feasible_l_range(current, w, targets[0]):
            raise PreconditionError(
                f"absorption step for {w!r} is not admissible", witness=w
            )  # unreachable under the checked preconditions
        v = targets[0]
        steps.append(ContractionStep((w, v), 0, v))
        current = contract(current, (w, v), v)
    return tuple(steps), current


def contract_multipartite(g: WeightedMultigraph) -> ContractionCertificate:
    """Certify any completely multipartite graph with wt >= 2 and rdeg >= 4.

    Sorts the non-adjacency classes by size, chooses representative
    vertices so that one of the seed graphs ``K1``..``K4`` spans the
    absorbed graph, contracts everything else into the chosen set with
    ``l = 0`` steps, and finishes by lifting the seed's certificate along
    the spanning embedding.  Five shapes cover all class counts:

    * five or more classes: one vertex from each of five classes (``K1``);
    * four classes: 1+1+2+2 representatives (``K2``);
    * three classes, all of size >= 2: 2+2+2 (``K2``);
    * three classes, one singleton: 1+3+3 (``K3``);
    * two classes: 4+4 (``K4``).
    """
    part = _require_multipartite(g)
    for v in g.vertices:
        if g.weight(v) < 2:
            raise PreconditionError(f"vertex {v!r} has weight {g.weight(v)} < 2", witness=v)
        if g.rdeg(v) < 4:
            raise PreconditionError(f"vertex {v!r} has reduced degree {g.rdeg(v)} < 4", witness=v)
    classes = [sorted(c) for c in part.classes]  # already (size, min)-sorted
    k = len(classes)
    if k >= 5:
        shape = "K1"
        picks = [classes[i][0] for i in range(5)]
    elif k == 4:
        shape = "K2"
        picks = [
            classes[0][0], classes[2][0], classes[3][0],
            classes[1][0], classes[2][1], classes[3][1],
        ]
    elif k == 3 and len(classes[0]) >= 2:
        shape = "K2"
        picks = [
            classes[0][0], classes[1][0], classes[2][0],
            classes[0][1], classes[1][1], classes[2][1],
        ]
    elif k == 3:
        shape = "K3"
        picks = [
            classes[0][0],
            classes[1][0], classes[2][0],
            classes[1][1], classes[2][1],
            classes[1][2], classes[2][2],
        ]
    elif k == 2:
        shape = "K4"
        picks = [
            classes[0][0], classes[1][0], classes[0][1], classes[1][1],
            classes[0][2], classes[1][2], classes[0][3], classes[1][3],
        ]
    else:
        raise PreconditionError("graph has a single non-adjacency class, so no edges", witness=None)
    prefix, reduced = absorb_submultigraph(g, picks)
    embedding = {f"v{i + 1}": picks[i] for i in range(len(picks))}
    lifted = lift_certificate(published_certificate(shape), reduced, embedding)
    cert = ContractionCertificate(g, prefix + lifted.steps)
    if not verify_certificate(cert):
        raise GraphError("internal error: constructed certificate failed verification")
    return cert


# ------------------------------------------------------------------ published sequences


def published_certificate(name: str) -> ContractionCertificate:
    """The reference contraction sequences for the seed graphs ``K1``..``K4``.

    ``K1`` and ``K2`` contract explicitly (final weights 10 and 12); ``K3``
    and ``K4`` reduce to the previous seed by a short prefix followed by a
    spanning-submultigraph lift.
    """
    if name == "K1":
        steps = (
            ContractionStep(("v1", "v2"), 0, "m1"),
            ContractionStep(("v3", "v5"), 0, "m2"),
            ContractionStep(("v4", "m1"), 1, "m3"),
            ContractionStep(("m2", "m3"), 3, "m4"),
        )
        return ContractionCertificate(builtin("K1"), steps)
    if name == "K2":
        steps = (
            ContractionStep(("v1", "v2"), 0, "m1"),
            ContractionStep(("v3", "v4"), 0, "m2"),
            ContractionStep(("v5", "v6"), 0, "m3"),
            ContractionStep(("m1", "m2"), 0, "m4"),
            ContractionStep(("m3", "m4"), 3, "m5"),
        )
        return ContractionCertificate(builtin("K2"), steps)
    if name == "K3":
        g = builtin("K3")
        prefix = (
            ContractionStep(("v2", "v3"), 0, "m1"),
            ContractionStep(("v4", "v5"), 0, "m2"),
        )
        reduced = contract(contract(g, ("v2", "v3"), "m1"), ("v4", "v5"), "m2")
        seed = builtin("K1")
        embedding = dict(zip(seed.vertices, reduced.vertices))  # complete seed: any bijection works
        lifted = lift_certificate(published_certificate("K1"), reduced, embedding)
        return ContractionCertificate(g, prefix + lifted.steps)
    if name == "K4":
        g = builtin("K4")
        prefix = (ContractionStep(("v1", "v2"), 0, "m1"),)
        reduced = contract(g, ("v1", "v2"), "m1")
        embedding = {
            "v1": "m1",
            "v2": "v3", "v4": "v5", "v6": "v7",
            "v3": "v4", "v5": "v6", "v7": "v8",
        }
        lifted = lift_certificate(published_certificate("K3"), reduced, embedding)
        return ContractionCertificate(g, prefix + lifted.steps)
    raise GraphError(f"no published certificate for {name!r}")
