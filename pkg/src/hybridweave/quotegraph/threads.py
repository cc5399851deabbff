"""Thread graphs: reply model, quote model, and their comparison.

Two structural patterns are extracted from the resolved quote graph:

* branch points -- messages quoted by two or more distinct later messages;
* chains -- maximal runs ``m1, m2, ..., mk`` (k >= 3) in which each message
  before the last has exactly one distinct resolved citer, namely the next
  message in the run.  A branch point can never sit inside a chain; a chain
  may, however, end at a message that later branches.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Mapping

from hybridweave.ingest.records import Corpus
from hybridweave.quotegraph.resolve import UNRESOLVED, QuoteEdge

ADMIN = "admin"
DEVELOPER = "developer"


@dataclass
class ThreadGraph:
    """Message graph holding both the reply-to and the quotation model."""

    message_ids: frozenset[str]
    reply_edges: frozenset[tuple[str, str]]  # (child, parent)
    quote_edges: tuple[QuoteEdge, ...] = ()
    theme_labels: dict[str, str] = field(default_factory=dict)
    branch_points: frozenset[str] = frozenset()
    chains: tuple[tuple[str, ...], ...] = ()
    thread_id: str = ""

    def resolved_quote_pairs(self) -> set[tuple[str, str]]:
        return {
            (e.citing, e.cited)
            for e in self.quote_edges
            if e.resolution != UNRESOLVED and e.cited
        }


@dataclass(frozen=True)
class StructureReport:
    branch_points: tuple[str, ...]
    chains: tuple[tuple[str, ...], ...]
    leader_branch_fraction: float | None  # None when there are no branch points
    chain_alternation: tuple[float, ...]  # one rate per chain


@dataclass(frozen=True)
class DivergenceReport:
    quote_not_reply: int
    reply_not_quote: int
    parent_set_mismatches: int


def build_reply_graph(corpus: Corpus) -> ThreadGraph:
    """Reply edges from In-Reply-To, falling back to the last resolvable
    References entry.  Dangling references are ignored."""
    known = {m.message_id for m in corpus.messages}
    edges: set[tuple[str, str]] = set()
    for m in corpus.messages:
        parent = None
        if m.in_reply_to and m.in_reply_to in known and m.in_reply_to != m.message_id:
            parent = m.in_reply_to
        else:
            for ref in reversed(m.references):
                if ref in known and ref != m.message_id:
                    parent = ref
                    break
        if parent is not None:
            edges.add((m.message_id, parent))
    return ThreadGraph(message_ids=frozenset(known), reply_edges=frozenset(edges))


def _quote_structure(
    message_ids: frozenset[str], quote_edges: tuple[QuoteEdge, ...]
) -> tuple[frozenset[str], tuple[tuple[str, ...], ...]]:
    citers: dict[str, set[str]] = {}
    for e in quote_edges:
        if e.resolution == UNRESOLVED or not e.cited or e.citing == e.cited:
            continue
        citers.setdefault(e.cited, set()).add(e.citing)

    branch_points = frozenset(m for m, c in citers.items() if len(c) >= 2)

    links = {m: next(iter(c)) for m, c in citers.items() if len(c) == 1}
    has_incoming = set(links.values())
    chains: list[tuple[str, ...]] = []
    for start in sorted(links):
        if start in has_incoming:
            continue
        run = [start]
        cur = start
        while cur in links:
            cur = links[cur]
            run.append(cur)
        if len(run) >= 3:
            chains.append(tuple(run))
    return branch_points, tuple(chains)


def with_quote_edges(graph: ThreadGraph, quote_edges: list[QuoteEdge]) -> ThreadGraph:
    """Attach quote edges and (re)compute branch points and chains."""
    edges = tuple(e for e in quote_edges if e.citing in graph.message_ids)
    branch_points, chains = _quote_structure(graph.message_ids, edges)
    return replace(graph, quote_edges=edges, branch_points=branch_points, chains=chains)


def binary_role(role: str, unknown_as_developer: bool = True) -> str | None:
    """Two-way admin/developer class for a role name.

    Leaders count as administrators; champions count as developers.  Unknown
    roles map to developer when the flag is set, otherwise to None.
    """
    if role in ("leader", "administrator"):
        return ADMIN
    if role in ("developer", "champion"):
        return DEVELOPER
    return DEVELOPER if unknown_as_developer else None


def classify_structure(
    thread: ThreadGraph,
    roles: Mapping[str, str],
    unknown_as_developer: bool = True,
) -> StructureReport:
    """Branch/chain report for a thread.

    ``roles`` maps message ids to the role of the message's author.
    ``leader_branch_fraction`` is the share of branch points initiated by a
    leader or champion; alternation rates count adjacent chain pairs whose
    authors fall in different admin/developer classes.
    """
    branch_points = tuple(sorted(thread.branch_points))
    initiated = sum(
        1 for m in branch_points if roles.get(m) in ("leader", "champion")
    )
    fraction = initiated / len(branch_points) if branch_points else None

    rates: list[float] = []
    for chain in thread.chains:
        classes = [
            binary_role(roles.get(m, "unknown"), unknown_as_developer) for m in chain
        ]
        pairs = list(zip(classes, classes[1:]))
        differing = sum(1 for a, b in pairs if a is not None and b is not None and a != b)
        rates.append(differing / len(pairs) if pairs else 0.0)

    return StructureReport(
        branch_points=branch_points,
        chains=thread.chains,
        leader_branch_fraction=fraction,
        chain_alternation=tuple(rates),
    )


def compare_models(thread: ThreadGraph) -> DivergenceReport:
    """How far the quotation model diverges from the reply-to model."""
    quote_pairs = thread.resolved_quote_pairs()
    reply_pairs = set(thread.reply_edges)
    quote_parents: dict[str, set[str]] = {}
    for citing, cited in quote_pairs:
        quote_parents.setdefault(citing, set()).add(cited)
    reply_parents: dict[str, set[str]] = {}
    for child, parent in reply_pairs:
        reply_parents.setdefault(child, set()).add(parent)
    mismatches = sum(
        1
        for m in thread.message_ids
        if quote_parents.get(m, set()) != reply_parents.get(m, set())
    )
    return DivergenceReport(
        quote_not_reply=len(quote_pairs - reply_pairs),
        reply_not_quote=len(reply_pairs - quote_pairs),
        parent_set_mismatches=mismatches,
    )


def split_threads(graph: ThreadGraph, corpus: Corpus) -> list[ThreadGraph]:
    """Split a whole-corpus graph into per-thread graphs.

    Components are taken over the union of reply edges and resolved quote
    edges.  A thread's id is its earliest message (corpus order); threads are
    returned in that order.
    """
    neighbors: dict[str, set[str]] = {m: set() for m in graph.message_ids}
    for child, parent in graph.reply_edges:
        neighbors[child].add(parent)
        neighbors[parent].add(child)
    for citing, cited in graph.resolved_quote_pairs():
        neighbors[citing].add(cited)
        neighbors[cited].add(citing)

    seen: set[str] = set()
    components: list[set[str]] = []
    for start in sorted(graph.message_ids, key=corpus.order):
        if start in seen:
            continue
        stack = [start]
        component: set[str] = set()
        while stack:
            node = stack.pop()
            if node in component:
                continue
            component.add(node)
            stack.extend(neighbors[node] - component)
        seen |= component
        components.append(component)

    threads: list[ThreadGraph] = []
    for component in components:
        root = min(component, key=corpus.order)
        sub_reply = frozenset(e for e in graph.reply_edges if e[0] in component)
        sub_quote = tuple(e for e in graph.quote_edges if e.citing in component)
        branch_points, chains = _quote_structure(frozenset(component), sub_quote)
        threads.append(
            ThreadGraph(
                message_ids=frozenset(component),
                reply_edges=sub_reply,
                quote_edges=sub_quote,
                theme_labels={
                    k: v for k, v in graph.theme_labels.items() if k in component
                },
                branch_points=branch_points,
                chains=chains,
                thread_id=root,
            )
        )
    return threads
