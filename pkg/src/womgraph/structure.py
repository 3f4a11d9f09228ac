"""Bow-tie decomposition and weakly connected components."""

from dataclasses import dataclass

from .graph import InteractionGraph


@dataclass
class BowTieDecomposition:
    core: set[str]
    in_: set[str]
    out: set[str]
    tendrils: set[str]
    tubes: set[str]
    disconnected: set[str]

    def classes(self):
        return {
            "core": self.core,
            "in": self.in_,
            "out": self.out,
            "tendrils": self.tendrils,
            "tubes": self.tubes,
            "disconnected": self.disconnected,
        }

    def fractions(self) -> dict[str, float]:
        n = sum(len(s) for s in self.classes().values())
        return {name: len(s) / n for name, s in self.classes().items()}


@dataclass
class SubGroup:
    members: set[str]

    @property
    def size(self) -> int:
        return len(self.members)


def strongly_connected_components(graph: InteractionGraph) -> list[set[str]]:
    """Tarjan's algorithm, iterative to cope with deep graphs."""
    adj: dict[str, list[str]] = {u: [] for u in graph.nodes}
    for u, v in sorted(graph.edges):
        adj[u].append(v)

    index: dict[str, int] = {}
    lowlink: dict[str, int] = {}
    on_stack: set[str] = set()
    stack: list[str] = []
    counter = 0
    sccs: list[set[str]] = []

    for root in sorted(graph.nodes):
        if root in index:
            continue
        work = [(root, iter(adj[root]))]
        index[root] = lowlink[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, children = work[-1]
            advanced = False
            for w in children:
                if w not in index:
                    index[w] = lowlink[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(adj[w])))
                    advanced = True
                    break
                if w in on_stack:
                    lowlink[v] = min(lowlink[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[v])
            if lowlink[v] == index[v]:
                component = set()
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    component.add(w)
                    if w == v:
                        break
                sccs.append(component)
    return sccs


def _reachable(starts: set[str], adj: dict[str, list[str]]) -> set[str]:
    seen = set(starts)
    frontier = list(starts)
    while frontier:
        v = frontier.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return seen


def bowtie_decompose(graph: InteractionGraph) -> BowTieDecomposition:
    """Six-way partition around the largest strongly connected component.

    core: largest SCC (ties broken by smallest member id); in: reaches
    core; out: reached from core; tubes: remaining nodes on a directed
    in -> ... -> out path; tendrils: remaining nodes whose undirected
    component touches the core side; disconnected: everything else.
    """
    if not graph.nodes:
        raise ValueError("graph is empty")
    fwd: dict[str, list[str]] = {u: [] for u in graph.nodes}
    rev: dict[str, list[str]] = {u: [] for u in graph.nodes}
    for u, v in graph.edges:
        fwd[u].append(v)
        rev[v].append(u)

    sccs = strongly_connected_components(graph)
    # largest SCC wins; equally large ones tie-break on smallest member id
    biggest = max(len(c) for c in sccs)
    core = min((c for c in sccs if len(c) == biggest), key=min)

    from_core = _reachable(core, fwd)
    to_core = _reachable(core, rev)
    out = from_core - core
    in_ = to_core - core

    rest = graph.nodes - core - in_ - out
    from_in = _reachable(in_, fwd) if in_ else set()
    to_out = _reachable(out, rev) if out else set()
    tubes = {v for v in rest if v in from_in and v in to_out}

    rest -= tubes
    main = core | in_ | out | tubes
    undirected: dict[str, set[str]] = {u: set() for u in graph.nodes}
    for u, v in graph.edges:
        undirected[u].add(v)
        undirected[v].add(u)
    attached = set(main)
    frontier = list(main)
    while frontier:
        v = frontier.pop()
        for w in undirected[v]:
            if w not in attached:
                attached.add(w)
                frontier.append(w)
    tendrils = rest & attached
    disconnected = rest - attached

    return BowTieDecomposition(
        core=core, in_=in_, out=out, tendrils=tendrils, tubes=tubes, disconnected=disconnected
    )


def weakly_connected_components(graph: InteractionGraph) -> list[SubGroup]:
    """Maximal undirected-connectivity classes, largest first."""
    undirected: dict[str, set[str]] = {u: set() for u in graph.nodes}
    for u, v in graph.edges:
        undirected[u].add(v)
        undirected[v].add(u)
    seen: set[str] = set()
    groups: list[SubGroup] = []
    for start in sorted(graph.nodes):
        if start in seen:
            continue
        component = {start}
        frontier = [start]
        while frontier:
            v = frontier.pop()
            for w in undirected[v]:
                if w not in component:
                    component.add(w)
                    frontier.append(w)
        seen |= component
        groups.append(SubGroup(component))
    groups.sort(key=lambda g: (-g.size, min(g.members)))
    return groups
