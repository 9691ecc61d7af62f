from cli.base import GraphCommand
from cli.serializers import CircuitPartitionSerializer, GraphSerializer
from four_regular.euler import parse_four_regular
from four_regular.touch import touch_graph
from graphs.text import render_graph


class Command(GraphCommand):
    help = (
        'Touch-graph of the circuit partition given by the transition lines of a 4-regular graph; '
        'without transitions, of its Euler system'
    )

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--circuits', action='store_true', help='List the circuits instead of the touch-graph')

    def handle_graph(self, graph, transitions, options):
        f, p = parse_four_regular(graph, transitions)
        if options['circuits']:
            text = '\n'.join(f"c{t}: {' '.join(p.vertex_sequence(t))}" for t in range(p.size))
            return CircuitPartitionSerializer(p).data, text
        tch = touch_graph(p)
        return GraphSerializer((tch, None)).data, render_graph(tch)
