from cli.base import GraphCommand
from cli.serializers import GraphSerializer
from four_regular.touch import realize_touch_graph
from graphs.text import render_graph


class Command(GraphCommand):
    help = 'A 4-regular graph and circuit partition whose touch-graph is the input graph'

    def handle_graph(self, graph, transitions, options):
        realization = realize_touch_graph(self.looped_simple(graph))
        f = realization.four_regular
        mapping = realization.partition.transitions.as_mapping(f)
        return GraphSerializer((f.graph, mapping)).data, render_graph(f.graph, mapping)
