from django.conf import settings

from adjacency.minors import adjacency_matroid
from cli.base import GraphCommand
from cli.serializers import PolynomialSerializer
from matroid_lab.exceptions import check_gate
from polynomials.interlace import lambda_terms
from polynomials.tutte import lambda_leading


class Command(GraphCommand):
    help = 'Leading term (y - 1)^nullity of the adjacency matroid, or the subset sum of lambda terms'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        terms = parser.add_mutually_exclusive_group()
        terms.add_argument('--terms', action='store_true', help='Sum the lambda terms of every induced subgraph')
        terms.add_argument(
            '--vertex', help='Sum the lambda terms of the induced subgraphs containing this vertex'
        )

    def handle_graph(self, graph, transitions, options):
        g = self.looped_simple(graph)
        if options['terms'] or options['vertex'] is not None:
            check_gate('lambda terms', g.n, settings.POLYNOMIAL_MAX_VERTICES)
            p = lambda_terms(g, containing=options['vertex'])
            kind = 'lambda terms'
        else:
            p = lambda_leading(adjacency_matroid(g))
            kind = 'lambda'
        return PolynomialSerializer({'kind': kind, 'polynomial': p}).data, str(p)
