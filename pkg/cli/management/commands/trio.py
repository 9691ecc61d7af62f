from adjacency.minors import trio
from cli.base import GraphCommand
from cli.serializers import TrioSerializer


class Command(GraphCommand):
    help = 'Show which two of the adjacency matroids of G(v), G(v,l) and G(v,li) coincide'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--vertex', required=True)

    def handle_graph(self, graph, transitions, options):
        result = trio(self.looped_simple(graph), options['vertex'])
        text = '\n'.join([
            f"vertex: {result.vertex}",
            f"equal: {' '.join(result.equal_pair)}",
            f"odd: {result.odd_one}",
            f"nullity: {result.nullity}",
            f"odd nullity: {result.odd_nullity}",
        ])
        return TrioSerializer(result).data, text
