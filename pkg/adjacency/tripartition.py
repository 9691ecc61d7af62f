"""Principal vertex tripartition"""
from collections import Counter
from dataclasses import dataclass

from django.db import models

from graphs.graph import VariantKind, local_complement, simplify
from matroid_lab.exceptions import InvariantViolation
from matroids.binary import is_coloop

from .minors import variant_matroid


class CaseTag(models.TextChoices):
    CASE1 = 'case1', 'Coloop of M_A(G(v)) and M_A(G(v,l))'
    CASE2 = 'case2', 'Coloop of M_A(G(v)) only'
    CASE3 = 'case3', 'Coloop of M_A(G(v,l)) only'


_TAGS = {
    (True, True): CaseTag.CASE1,
    (True, False): CaseTag.CASE2,
    (False, True): CaseTag.CASE3,
}

# the pair of variant matroids that coincide in each case
EQUAL_VARIANTS = {
    CaseTag.CASE1: (VariantKind.PLAIN, VariantKind.LOOP),
    CaseTag.CASE2: (VariantKind.PLAIN, VariantKind.LOOP_ISOLATE),
    CaseTag.CASE3: (VariantKind.LOOP, VariantKind.LOOP_ISOLATE),
}


@dataclass(frozen=True)
class TripartitionCase:
    vertex: str
    tag: str
    evidence: tuple

    def __post_init__(self):
        evidence = tuple(bool(e) for e in self.evidence)
        object.__setattr__(self, 'evidence', evidence)
        if evidence not in _TAGS:
            raise InvariantViolation(f"{self.vertex} is a coloop of neither M_A(G(v)) nor M_A(G(v,l))")
        if CaseTag(self.tag) != _TAGS[evidence]:
            raise InvariantViolation(f"tag {self.tag} does not match coloop evidence {evidence}")
        object.__setattr__(self, 'tag', CaseTag(self.tag))

    @classmethod
    def from_evidence(cls, vertex, evidence):
        evidence = tuple(bool(e) for e in evidence)
        if evidence not in _TAGS:
            raise InvariantViolation(f"{vertex} is a coloop of neither M_A(G(v)) nor M_A(G(v,l))")
        return cls(vertex, _TAGS[evidence], evidence)


def classify_vertex(g, v):
    g = simplify(g)
    evidence = (
        is_coloop(variant_matroid(g, v, VariantKind.PLAIN), v),
        is_coloop(variant_matroid(g, v, VariantKind.LOOP), v),
    )
    return TripartitionCase.from_evidence(v, evidence)


def tripartition_report(g):
    g = simplify(g)
    return {v: classify_vertex(g, v) for v in g.labels}


def report_under_local_complement(g):
    """Case of every v in G next to its case in G^v"""
    g = simplify(g)
    return {v: (classify_vertex(g, v), classify_vertex(local_complement(g, v), v)) for v in g.labels}


def fibers(report):
    """The three classes of the tripartition, each in label order"""
    classes = {tag: [] for tag in CaseTag}
    for v, case in report.items():
        classes[case.tag].append(v)
    return {tag: tuple(vertices) for tag, vertices in classes.items()}


def case_counts(report):
    return Counter(case.tag for case in report.values())
