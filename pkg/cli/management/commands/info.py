from adjacency.minors import adjacency_matroid
from cli.base import GraphCommand
from cli.serializers import GraphInfoSerializer
from graphs.graph import LoopedSimpleGraph


class Command(GraphCommand):
    help = 'Summarize a graph and, for looped simple graphs, its adjacency matroid'

    def handle_graph(self, graph, transitions, options):
        if isinstance(graph, LoopedSimpleGraph):
            info = {
                'kind': 'looped simple graph',
                'vertices': list(graph.labels),
                'edge_count': len(graph.edges()),
                'loop_count': len(graph.loops()),
                'matroid': adjacency_matroid(graph),
            }
        else:
            loops = sum(a == b for a, b in graph.edges)
            info = {
                'kind': 'multigraph',
                'vertices': list(graph.labels),
                'edge_count': len(graph.edges) - loops,
                'loop_count': loops,
            }
        lines = [
            f"kind: {info['kind']}",
            f"vertices: {' '.join(info['vertices'])}",
            f"edges: {info['edge_count']}",
            f"loops: {info['loop_count']}",
        ]
        if 'matroid' in info:
            lines += [f"rank: {info['matroid'].rank}", f"nullity: {info['matroid'].nullity}"]
        return GraphInfoSerializer(info).data, '\n'.join(lines)
