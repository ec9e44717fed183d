from dataclasses import dataclass, field

from ..graph import Graph


@dataclass(frozen=True)
class Role:
    role: str
    index: tuple = ()

    def to_json(self, vertex):
        return {"vertex": vertex, "role": self.role, "index": list(self.index)}


class Builder:
    """Accumulates labelled vertices and edges in a fixed order."""

    def __init__(self):
        self.roles = []
        self.edges = set()

    def add(self, role, *index):
        self.roles.append(Role(role, tuple(index)))
        return len(self.roles) - 1

    def join(self, u, v):
        if u != v:
            self.edges.add((min(u, v), max(u, v)))

    def clique(self, vertices):
        vs = list(vertices)
        for i, u in enumerate(vs):
            for v in vs[i + 1 :]:
                self.join(u, v)

    def graph(self):
        return Graph(len(self.roles), sorted(self.edges))


@dataclass
class GadgetOutput:
    graph: Graph
    role_map: list
    d: int
    flavour: str
    cliques: dict = field(default_factory=dict)
    pre_graph: Graph = None
    pre_role_map: list = None
    edge_list: list = None
    properties: dict = field(default_factory=dict)

    def role_map_json(self):
        return [r.to_json(v) for v, r in enumerate(self.role_map)]
