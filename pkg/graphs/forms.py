from django import forms

from matroid_lab.exceptions import ToolkitError

from .graph import LoopedSimpleGraph, MultiGraph


class GraphTextForm(forms.Form):
    """
    Line-oriented graph input.

    ``vertices <name>+`` declares vertices, ``loop <name> [label]`` and
    ``edge <name> <name> [label]`` add edges, ``transition <name> <0|1|2>``
    picks a pairing of a vertex's four half-edges and ``#`` starts a comment
    line. Repeated loops or edges, explicit edge labels and transitions all
    make the result a multigraph.
    """

    text = forms.CharField(strip=False, required=False)

    def clean_text(self):
        text = self.cleaned_data.get('text') or ''
        labels = []
        declared = set()
        edges = []
        edge_labels = []
        transitions = {}
        multigraph = False

        def fail(lineno, message):
            raise forms.ValidationError(f"line {lineno}: {message}", code='syntax')

        def vertex(lineno, name):
            if name not in declared:
                fail(lineno, f"unknown vertex {name!r}")
            return name

        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith('#'):
                continue
            keyword, *args = line.split()
            if keyword == 'vertices':
                if not args:
                    fail(lineno, "'vertices' needs at least one name")
                for name in args:
                    if name in declared:
                        fail(lineno, f"vertex {name!r} declared twice")
                    declared.add(name)
                    labels.append(name)
            elif keyword == 'loop':
                if len(args) not in (1, 2):
                    fail(lineno, "expected 'loop <name> [label]'")
                v = vertex(lineno, args[0])
                edges.append((v, v))
                edge_labels.append(args[1] if len(args) == 2 else None)
            elif keyword == 'edge':
                if len(args) not in (2, 3):
                    fail(lineno, "expected 'edge <name> <name> [label]'")
                edges.append((vertex(lineno, args[0]), vertex(lineno, args[1])))
                edge_labels.append(args[2] if len(args) == 3 else None)
            elif keyword == 'transition':
                if len(args) != 2 or args[1] not in ('0', '1', '2'):
                    fail(lineno, "expected 'transition <name> <0|1|2>'")
                v = vertex(lineno, args[0])
                if v in transitions:
                    fail(lineno, f"second transition for {v!r}")
                transitions[v] = int(args[1])
                multigraph = True
            else:
                fail(lineno, f"unknown keyword {keyword!r}")

        keys = [frozenset(e) for e in edges]
        if len(set(keys)) != len(keys) or any(label is not None for label in edge_labels):
            multigraph = True

        try:
            if multigraph:
                if any(label is not None for label in edge_labels):
                    edge_labels = [
                        label if label is not None else f"e{k}" for k, label in enumerate(edge_labels)
                    ]
                else:
                    edge_labels = None
                graph = MultiGraph.from_labeled(labels, edges, edge_labels)
            else:
                graph = LoopedSimpleGraph.from_edges(labels, edges)
        except ToolkitError as exc:
            raise forms.ValidationError(str(exc), code=exc.code)

        self.cleaned_data['graph'] = graph
        self.cleaned_data['transitions'] = transitions
        return text


class MatrixTextForm(forms.Form):
    """Rows of 0/1 entries separated by whitespace; ``#`` starts a comment line"""

    text = forms.CharField(strip=False, required=False)

    def clean_text(self):
        text = self.cleaned_data.get('text') or ''
        rows = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith('#'):
                continue
            entries = line.split()
            if any(e not in ('0', '1') for e in entries):
                raise forms.ValidationError(f"line {lineno}: entries must be 0 or 1", code='syntax')
            if rows and len(entries) != len(rows[0]):
                raise forms.ValidationError(
                    f"line {lineno}: expected {len(rows[0])} entries, got {len(entries)}", code='syntax'
                )
            rows.append([int(e) for e in entries])
        self.cleaned_data['rows'] = rows
        return text
