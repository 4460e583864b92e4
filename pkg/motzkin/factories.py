import factory
from factory.random import randgen

from motzkin.algebra import AlgebraElement
from motzkin.combinatorics import MotzkinPath, enumerate_paths
from motzkin.diagrams import MotzkinDiagram, enumerate_diagrams
from motzkin.scalars import PolyRing


def random_steps(k: int) -> tuple[int, ...]:
    steps, height = [], 0
    for _ in range(k):
        step = randgen.choice((-1, 0, 1) if height else (0, 1))
        steps.append(step)
        height += step
    return tuple(steps)


class MotzkinPathFactory(factory.Factory):
    class Meta:
        model = MotzkinPath

    class Params:
        k = 4
        r = None

    steps = factory.LazyAttribute(
        lambda o: random_steps(o.k) if o.r is None else randgen.choice(enumerate_paths(o.k, o.r)).steps
    )


class MotzkinDiagramFactory(factory.Factory):
    class Meta:
        model = MotzkinDiagram

    k = 3
    partner = factory.LazyAttribute(lambda o: randgen.choice(enumerate_diagrams(o.k)).partner)


class AlgebraElementFactory(factory.Factory):
    """Random element of M_k(x) with small integer coefficients in QQ[x]."""

    class Meta:
        model = AlgebraElement

    class Params:
        size = 3

    k = 3
    data = factory.LazyAttribute(
        lambda o: [
            (randgen.choice(enumerate_diagrams(o.k)), PolyRing(randgen.randint(-3, 3)))
            for _ in range(o.size)
        ]
    )
