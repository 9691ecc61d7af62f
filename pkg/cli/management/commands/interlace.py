from cli.base import GraphCommand
from cli.serializers import PolynomialSerializer
from polynomials.interlace import interlace_recursive, interlace_subset, q_from_lambda

METHODS = {
    'subset': interlace_subset,
    'recursive': interlace_recursive,
    'lambda': q_from_lambda,
}


class Command(GraphCommand):
    help = 'Interlace polynomial q(G) of a looped simple graph'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--method', choices=list(METHODS), default='recursive')

    def handle_graph(self, graph, transitions, options):
        q = METHODS[options['method']](self.looped_simple(graph))
        return PolynomialSerializer({'kind': 'interlace', 'polynomial': q}).data, str(q)
