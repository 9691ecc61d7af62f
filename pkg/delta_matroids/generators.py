"""Random set systems and flip sequences"""
from graphs.generators import default_labels

from .set_systems import FlipKind, SetSystem


def random_set_system(rng, n, labels=None, proper=True):
    """Each of the 2^n subsets joins the family with probability 1/2"""
    labels = tuple(labels) if labels is not None else default_labels(n)
    family = {y for y in range(1 << n) if rng.random() < 0.5}
    if proper and not family:
        family.add(rng.randrange(1 << n))
    return SetSystem(labels, frozenset(family))


def random_flip_sequence(rng, labels, length):
    kinds = list(FlipKind)
    return [(rng.choice(kinds), rng.choice(labels)) for _ in range(length)]
