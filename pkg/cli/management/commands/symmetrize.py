from django.core.exceptions import ValidationError
from rest_framework import serializers

from cli.base import InputCommand
from gf2.linalg import BitMatrix, nullspace, symmetrize_nullspace
from graphs.forms import MatrixTextForm


class SymmetrizedSerializer(serializers.Serializer):
    rows = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField()))
    nullity = serializers.IntegerField()


class Command(InputCommand):
    help = 'Symmetric matrix over GF(2) with the same nullspace as the input matrix'

    def compute(self, options):
        form = MatrixTextForm(data={'text': self.read_input(options)})
        if not form.is_valid():
            raise ValidationError(form.errors.as_data()['text'])
        a = BitMatrix.from_rows(form.cleaned_data['rows'])
        s = symmetrize_nullspace(a)
        result = {'rows': s.to_lists(), 'nullity': nullspace(s).dim}
        return SymmetrizedSerializer(result).data, str(s)
