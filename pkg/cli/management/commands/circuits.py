from adjacency.minors import adjacency_matroid
from cli.base import GraphCommand
from cli.serializers import MatroidSerializer, sorted_masks
from graphs.graph import LoopedSimpleGraph
from matroids.binary import polygon_matroid


def circuit_lines(m):
    return [' '.join(m.sorted_labels(c)) for c in sorted_masks(m.circuit_masks)]


class Command(GraphCommand):
    help = 'List the circuits of the adjacency matroid, or of the polygon matroid of a multigraph'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--matroid', choices=['adjacency', 'polygon'], default='adjacency')

    def handle_graph(self, graph, transitions, options):
        if options['matroid'] == 'polygon':
            if isinstance(graph, LoopedSimpleGraph):
                graph = graph.as_multigraph()
            m = polygon_matroid(graph)
        else:
            m = adjacency_matroid(self.looped_simple(graph))
        return MatroidSerializer(m).data, '\n'.join(circuit_lines(m))
