from adjacency.tripartition import report_under_local_complement
from cli.base import GraphCommand
from cli.serializers import TripartitionCaseSerializer


class Command(GraphCommand):
    help = 'Classify every vertex into case 1, 2 or 3 of the principal vertex tripartition'

    def handle_graph(self, graph, transitions, options):
        report = report_under_local_complement(self.looped_simple(graph))
        cases = [
            {
                'vertex': v,
                'tag': case.tag,
                'evidence': list(case.evidence),
                'case_after_local_complement': after.tag,
            }
            for v, (case, after) in report.items()
        ]
        text = '\n'.join(f"{case['vertex']}: {case['tag']}" for case in cases)
        return TripartitionCaseSerializer(cases, many=True).data, text
