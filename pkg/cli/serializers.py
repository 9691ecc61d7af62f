from rest_framework import serializers

from gf2.linalg import popcount
from graphs.graph import LoopedSimpleGraph, MultiGraph
from matroid_lab.exceptions import ToolkitError
from polynomials.bivariate import BivariatePolynomial
from reports.models import PropertyCheck, VerificationRun


def sorted_masks(masks):
    return sorted(masks, key=lambda y: (popcount(y), y))


class GraphSerializer(serializers.Serializer):
    """
    ``{"vertices": [...], "loops": [...], "edges": [[u, v, label?], ...], "transitions": {...}}``

    Serializes a ``(graph, transitions)`` pair and validates the same shape
    back into one. Edge labels or repeated edges make the result a multigraph.
    """

    vertices = serializers.ListField(child=serializers.CharField())
    loops = serializers.ListField(child=serializers.CharField(), required=False, default=list)
    edges = serializers.ListField(
        child=serializers.ListField(child=serializers.CharField(), min_length=2, max_length=3),
        required=False, default=list,
    )
    transitions = serializers.DictField(
        child=serializers.IntegerField(min_value=0, max_value=2), required=False, default=dict
    )

    def to_representation(self, instance):
        g, transitions = instance
        if isinstance(g, LoopedSimpleGraph):
            loops = list(g.loops())
            edges = [[u, v] for u, v in g.edges()]
        else:
            loops = []
            edges = []
            for (a, b), label in zip(g.edges, g.edge_labels):
                if a == b:
                    loops.append(g.labels[a])
                edges.append([g.labels[a], g.labels[b], label])
        return {
            'vertices': list(g.labels),
            'loops': loops,
            'edges': edges,
            'transitions': dict(transitions or {}),
        }

    def validate(self, attrs):
        declared = set(attrs['vertices'])
        if len(declared) != len(attrs['vertices']):
            raise serializers.ValidationError("vertex names are not distinct", code='syntax')
        names = list(attrs['loops']) + [v for edge in attrs['edges'] for v in edge[:2]] + list(attrs['transitions'])
        unknown = sorted({v for v in names if v not in declared})
        if unknown:
            raise serializers.ValidationError(f"unknown vertices {unknown}", code='syntax')
        return attrs

    def build(self):
        """The validated ``(graph, transitions)`` pair"""
        data = self.validated_data
        labels = data['vertices']
        edges = [tuple(edge[:2]) for edge in data['edges']]
        labelled = any(len(edge) == 3 for edge in data['edges'])
        keys = [frozenset(e) for e in edges]
        try:
            if labelled or data['transitions'] or len(set(keys)) != len(keys):
                # loops named in "loops" already appear as [v, v] edges in a multigraph
                loop_edges = [] if labelled else [(v, v) for v in data['loops']]
                edge_labels = None
                if labelled:
                    edge_labels = [edge[2] if len(edge) == 3 else f"e{k}" for k, edge in enumerate(data['edges'])]
                graph = MultiGraph.from_labeled(labels, edges + loop_edges, edge_labels)
            else:
                graph = LoopedSimpleGraph.from_edges(labels, edges, data['loops'])
        except ToolkitError as exc:
            raise serializers.ValidationError(str(exc), code=exc.code)
        return graph, dict(data['transitions'])


class PolynomialField(serializers.Field):
    """A polynomial as ``[[i, j, c], ...]``, exponents descending"""

    def to_representation(self, value):
        return value.to_triples()

    def to_internal_value(self, data):
        try:
            return BivariatePolynomial.from_triples(data)
        except (TypeError, ValueError, ToolkitError):
            raise serializers.ValidationError("expected a list of [i, j, c] triples")


class PolynomialSerializer(serializers.Serializer):
    kind = serializers.CharField()
    text = serializers.SerializerMethodField()
    terms = PolynomialField(source='polynomial')

    def get_text(self, obj):
        return str(obj['polynomial'])


class MatroidSerializer(serializers.Serializer):
    ground = serializers.ListField(child=serializers.CharField())
    rank = serializers.IntegerField()
    nullity = serializers.IntegerField()
    circuits = serializers.SerializerMethodField()

    def get_circuits(self, obj):
        return [obj.sorted_labels(c) for c in sorted_masks(obj.circuit_masks)]


class GraphInfoSerializer(serializers.Serializer):
    kind = serializers.CharField()
    vertices = serializers.ListField(child=serializers.CharField())
    edge_count = serializers.IntegerField()
    loop_count = serializers.IntegerField()
    matroid = MatroidSerializer(required=False)


class MinorSerializer(serializers.Serializer):
    operation = serializers.CharField()
    vertex = serializers.CharField()
    route = serializers.CharField(required=False)
    local_complements = serializers.ListField(child=serializers.CharField(), required=False)
    witness = GraphSerializer(required=False)
    matroid = MatroidSerializer()


class TripartitionCaseSerializer(serializers.Serializer):
    vertex = serializers.CharField()
    case = serializers.CharField(source='tag')
    evidence = serializers.ListField(child=serializers.BooleanField())
    case_after_local_complement = serializers.CharField()


class TrioSerializer(serializers.Serializer):
    vertex = serializers.CharField()
    equal_pair = serializers.ListField(child=serializers.CharField())
    odd_one = serializers.CharField()
    nullity = serializers.IntegerField()
    odd_nullity = serializers.IntegerField()


class SetSystemSerializer(serializers.Serializer):
    ground = serializers.ListField(child=serializers.CharField())
    family = serializers.SerializerMethodField()
    normal = serializers.BooleanField(source='is_normal')

    def get_family(self, obj):
        return obj.sets()


class CircuitPartitionSerializer(serializers.Serializer):
    circuits = serializers.SerializerMethodField()
    transitions = serializers.SerializerMethodField()

    def get_circuits(self, obj):
        return [obj.vertex_sequence(t) for t in range(obj.size)]

    def get_transitions(self, obj):
        return obj.transitions.as_mapping(obj.four_regular)


class TallySerializer(serializers.Serializer):
    suite = serializers.CharField()
    label = serializers.CharField()
    instances = serializers.IntegerField()
    failures = serializers.IntegerField()
    passed = serializers.BooleanField()
    counterexample = serializers.JSONField(allow_null=True)


class VerificationReportSerializer(serializers.Serializer):
    suite = serializers.CharField()
    max_n = serializers.IntegerField()
    trials = serializers.IntegerField()
    seed = serializers.IntegerField()
    passed = serializers.BooleanField()
    checks = TallySerializer(source='tallies', many=True)


class PropertyCheckSerializer(serializers.ModelSerializer):
    class Meta:
        model = PropertyCheck
        fields = ['suite', 'label', 'instances', 'failures', 'counterexample']


class VerificationRunSerializer(serializers.ModelSerializer):
    checks = PropertyCheckSerializer(many=True, read_only=True)

    class Meta:
        model = VerificationRun
        fields = ['id', 'suite', 'max_n', 'trials', 'seed', 'passed', 'checks']
