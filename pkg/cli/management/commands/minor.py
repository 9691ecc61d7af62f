from adjacency.minors import contract_via_lc, delete_via_subgraph
from cli.base import GraphCommand
from cli.serializers import MinorSerializer
from graphs.text import render_graph

from .circuits import circuit_lines


class Command(GraphCommand):
    help = 'Delete or contract a vertex of the adjacency matroid, showing the local complements used'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        operation = parser.add_mutually_exclusive_group(required=True)
        operation.add_argument('--delete', metavar='VERTEX')
        operation.add_argument('--contract', metavar='VERTEX')
        parser.add_argument('--via', metavar='NEIGHBOR', help='Neighbor used to contract an unlooped vertex')

    def handle_graph(self, graph, transitions, options):
        g = self.looped_simple(graph)
        if options['delete'] is not None:
            v = options['delete']
            result = {'operation': 'delete', 'vertex': v, 'matroid': delete_via_subgraph(g, v)}
            lines = [f"delete {v}"]
        else:
            derivation = contract_via_lc(g, options['contract'], options['via'])
            result = {
                'operation': 'contract',
                'vertex': derivation.vertex,
                'route': str(derivation.route),
                'local_complements': list(derivation.lc_sequence),
                'witness': (derivation.witness_graph, None),
                'matroid': derivation.result,
            }
            lines = [
                f"contract {derivation.vertex} by route {derivation.route}",
                f"local complements: {' '.join(derivation.lc_sequence) or 'none'}",
                'witness graph:',
                *('  ' + line for line in render_graph(derivation.witness_graph).splitlines()),
            ]
        circuits = circuit_lines(result['matroid'])
        lines.append('circuits:' if circuits else 'circuits: none')
        lines += ['  ' + c for c in circuits]
        return MinorSerializer(result).data, '\n'.join(lines)
