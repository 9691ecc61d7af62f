from argparse import ArgumentTypeError

from cli.base import GraphCommand
from cli.serializers import SetSystemSerializer
from delta_matroids.set_systems import FlipKind, from_graph, max_sys, min_sys, vertex_flip_sequence


def flip(value):
    kind, sep, vertex = value.partition(':')
    if not sep or kind not in FlipKind.values or not vertex:
        raise ArgumentTypeError(f"expected KIND:VERTEX with KIND one of {', '.join(FlipKind.values)}")
    return FlipKind(kind), vertex


class Command(GraphCommand):
    help = 'Delta-matroid of a looped simple graph, optionally flipped and reduced to its min or max'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument(
            '--flip', type=flip, action='append', default=[], metavar='KIND:VERTEX',
            help='Pivot, dual pivot or loop complement at a vertex; repeatable, applied in order',
        )
        extreme = parser.add_mutually_exclusive_group()
        extreme.add_argument('--min', action='store_true', help='Keep the minimum-size sets only')
        extreme.add_argument('--max', action='store_true', help='Keep the maximum-size sets only')

    def handle_graph(self, graph, transitions, options):
        d = vertex_flip_sequence(from_graph(self.looped_simple(graph)), options['flip'])
        if options['min']:
            d = min_sys(d)
        elif options['max']:
            d = max_sys(d)
        return SetSystemSerializer(d).data, str(d)
