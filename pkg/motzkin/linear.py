"""
Sparse linear combinations: a dict ``basis element -> scalar`` that never stores zeros.

Shared by algebra elements, cell-module vectors and tensor vectors.
"""


class LinearCombination(dict):
    def __init__(self, data=()):
        super().__init__()
        self.__iadd__(data)

    def _spawn(self, data=()):
        return type(self)(data)

    def iadd_coef(self, coef, other):
        """self += coef * other"""
        if not coef:
            return self
        items = other.items() if isinstance(other, dict) else other
        for key, value in items:
            if not value:
                continue
            self._accumulate(key, value * coef)
        return self

    def _accumulate(self, key, value):
        current = self.get(key)
        total = value if current is None else current + value
        if total:
            self[key] = total
        elif current is not None:
            del self[key]

    def __iadd__(self, other):
        items = other.items() if isinstance(other, dict) else other
        for key, value in items:
            if value:
                self._accumulate(key, value)
        return self

    def __add__(self, other):
        result = self._spawn(self)
        result += other
        return result

    def __isub__(self, other):
        return self.__iadd__((key, -value) for key, value in other.items())

    def __sub__(self, other):
        result = self._spawn(self)
        result -= other
        return result

    def __neg__(self):
        return self._spawn((key, -value) for key, value in self.items())

    def scaled(self, coef):
        if not coef:
            return self._spawn()
        return self._spawn((key, value * coef) for key, value in self.items())

    def coefficient(self, key, default=0):
        return self.get(key, default)

    def _shape(self) -> tuple:
        """Size data that must agree, beyond the stored terms, for two combinations to be equal."""
        return ()

    def __eq__(self, other):
        if isinstance(other, LinearCombination):
            if type(self) is not type(other) or self._shape() != other._shape():
                return False
        return dict.__eq__(self, other)

    def __ne__(self, other):
        equal = self.__eq__(other)
        return equal if equal is NotImplemented else not equal
