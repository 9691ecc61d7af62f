"""
Shared plumbing for the toolkit's management commands.

Commands read a graph (text or JSON) from ``--input``, compute, and write
either plain text or JSON rendered by DRF's ``JSONRenderer``.
"""
import io
import logging
import sys

from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand, CommandError
from rest_framework.exceptions import APIException
from rest_framework.parsers import JSONParser
from rest_framework.renderers import JSONRenderer

from graphs.graph import MultiGraph, simplify
from graphs.text import parse_graph
from matroid_lab.exceptions import ToolkitError

from .serializers import GraphSerializer

logger = logging.getLogger(__name__)


def flatten_detail(detail, prefix=''):
    """One message per leaf of a DRF error detail"""
    if isinstance(detail, dict):
        for key, value in detail.items():
            yield from flatten_detail(value, f"{prefix}{key}: ")
    elif isinstance(detail, list):
        for item in detail:
            yield from flatten_detail(item, prefix)
    else:
        yield f"{prefix}{detail}"


def render_json(data):
    return JSONRenderer().render(data, renderer_context={'indent': 2}).decode('utf-8')


class ToolkitCommand(BaseCommand):
    """
    Base command with ``--format text|json``.

    Subclasses implement ``compute(options)`` returning ``(payload, text)``:
    the JSON-ready payload and the plain-text rendering of the same result.
    Toolkit and validation errors become ``CommandError`` (exit status 1).
    """

    stealth_options = ('stdin',)

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        # usage errors raise CommandError, so they exit with status 1
        parser.called_from_command_line = False
        return parser

    def add_arguments(self, parser):
        parser.add_argument('--format', choices=['text', 'json'], default='text', help='Output format')

    def handle(self, *args, **options):
        try:
            payload, text = self.compute(options)
        except ToolkitError as exc:
            raise CommandError(f"{exc.code}: {exc}")
        except ValidationError as exc:
            raise CommandError('; '.join(exc.messages))
        except APIException as exc:
            raise CommandError('; '.join(flatten_detail(exc.detail)))
        self.emit(payload, text, options['format'])

    def compute(self, options):
        raise NotImplementedError('subclasses of ToolkitCommand must provide a compute() method')

    def emit(self, payload, text, output_format):
        if output_format == 'json':
            self.stdout.write(render_json(payload))
        elif text:
            self.stdout.write(text.rstrip('\n'))


class InputCommand(ToolkitCommand):
    """A command reading its input from ``--input PATH`` or standard input"""

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--input', default='-', metavar='PATH', help="Input file, or '-' for standard input")

    def read_input(self, options):
        path = options['input']
        if path == '-':
            return (options.get('stdin') or sys.stdin).read()
        try:
            with open(path, encoding='utf-8') as handle:
                return handle.read()
        except OSError as exc:
            raise CommandError(f"cannot read {path}: {exc.strerror}")


class GraphCommand(InputCommand):
    """
    A command on one graph. Input starting with ``{`` is graph JSON, anything
    else the line-oriented text format.
    """

    def compute(self, options):
        graph, transitions = self.read_graph(options)
        return self.handle_graph(graph, transitions, options)

    def handle_graph(self, graph, transitions, options):
        raise NotImplementedError('subclasses of GraphCommand must provide a handle_graph() method')

    def read_graph(self, options):
        text = self.read_input(options)
        if not text.lstrip().startswith('{'):
            return parse_graph(text)
        data = JSONParser().parse(io.BytesIO(text.encode('utf-8')))
        serializer = GraphSerializer(data=data)
        serializer.is_valid(raise_exception=True)
        return serializer.build()

    def looped_simple(self, graph):
        if isinstance(graph, MultiGraph):
            logger.warning("input has parallel edges, edge labels or transitions; using its simplification")
            return simplify(graph)
        return graph
