from adjacency.minors import adjacency_matroid
from cli.base import GraphCommand
from cli.serializers import PolynomialSerializer
from graphs.graph import LoopedSimpleGraph
from matroids.binary import polygon_matroid
from polynomials.tutte import tutte_recursive, tutte_subset

METHODS = {
    'subset': tutte_subset,
    'recursive': tutte_recursive,
}


class Command(GraphCommand):
    help = 'Tutte polynomial of the adjacency matroid, or of the polygon matroid of a multigraph'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--matroid', choices=['adjacency', 'polygon'], default='adjacency')
        parser.add_argument('--method', choices=list(METHODS), default='recursive')

    def handle_graph(self, graph, transitions, options):
        if options['matroid'] == 'polygon':
            if isinstance(graph, LoopedSimpleGraph):
                graph = graph.as_multigraph()
            m = polygon_matroid(graph)
        else:
            m = adjacency_matroid(self.looped_simple(graph))
        t = METHODS[options['method']](m)
        return PolynomialSerializer({'kind': 'tutte', 'polynomial': t}).data, str(t)
