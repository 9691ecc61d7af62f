"""Rendering graphs in the line-oriented text format read by GraphTextForm"""
from django.core.exceptions import ValidationError

from .forms import GraphTextForm
from .graph import LoopedSimpleGraph


def render_graph(g, transitions=None):
    lines = [f"vertices {' '.join(g.labels)}" if g.labels else '# no vertices']
    if isinstance(g, LoopedSimpleGraph):
        lines += [f"loop {v}" for v in g.loops()]
        lines += [f"edge {u} {v}" for u, v in g.edges()]
    else:
        for (a, b), label in zip(g.edges, g.edge_labels):
            if a == b:
                lines.append(f"loop {g.labels[a]} {label}")
            else:
                lines.append(f"edge {g.labels[a]} {g.labels[b]} {label}")
    for v, choice in (transitions or {}).items():
        lines.append(f"transition {v} {choice}")
    return '\n'.join(lines) + '\n'


def parse_graph(text):
    """Parse graph text, returning ``(graph, transitions)`` or raising ValidationError"""
    form = GraphTextForm(data={'text': text})
    if not form.is_valid():
        raise ValidationError(form.errors.as_data()["text"])
    return form.cleaned_data['graph'], form.cleaned_data['transitions']
